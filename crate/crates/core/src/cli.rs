//! Command-line front end. `run` returns the process exit code:
//! 0 when every check holds, 1 when a check ran and failed (or a witness
//! turned up where none was expected), 2 for usage, parse and I/O errors.
//! Data goes to `out`, diagnostics to `err`.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::affine::{isomorphism_check, ZbLoop};
use crate::analysis::{
    alpha_identity_check, build_alpha, check_property, lemma1_check, right_mult_group, support,
    witness_search, Property, Realization, WordWitness,
};
use crate::looptab::{self, FileKind, LoopFile};
use crate::perm::Permutation;
use crate::table::{validate, CayleyTable, LoopKind, RightLoopTable};
use crate::transversal::{
    c_groupoid, enumerate_nrts, induced_operation, nrt_count, reconstruction_failures,
    right_cosets, subgroup_closure, theta_action_check, FiniteGroup, Transversal,
};
use crate::twist::{translation_identities, twist, TwistSpec};

#[derive(Debug, Parser)]
#[command(name = "rightloop", about = "Right loops, twists and transversals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    RightLoop,
    Loop,
    Group,
}

impl From<KindArg> for LoopKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::RightLoop => LoopKind::RightLoop,
            KindArg::Loop => LoopKind::Loop,
            KindArg::Group => LoopKind::Group,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check right-loop, loop or group axioms
    Validate {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Twist a loop by (B, eta)
    Twist {
        file: PathBuf,
        /// Comma-separated element names; empty for the trivial twist
        #[arg(long = "b", allow_hyphen_values = true)]
        b: String,
        /// Images of the elements in file order, or @FILE with name:image lines
        #[arg(long)]
        eta: String,
        #[arg(short = 'o')]
        output: PathBuf,
    },
    /// Normalized right transversals of a subgroup
    Nrt {
        groupfile: PathBuf,
        /// Comma-separated generators of the subgroup
        #[arg(long)]
        subgroup: String,
        /// List every normalized right transversal
        #[arg(long, conflicts_with = "choose", required_unless_present = "choose")]
        enumerate: bool,
        /// Coset representatives as i:name,...; unlisted cosets use their least element
        #[arg(long)]
        choose: Option<String>,
        #[arg(long)]
        emit_loop: Option<PathBuf>,
        #[arg(long)]
        emit_cgroupoid: Option<PathBuf>,
    },
    /// Export the (f, sigma, theta) data of a transversal
    Cgroupoid {
        groupfile: PathBuf,
        #[arg(long)]
        subgroup: String,
        /// Coset representatives as i:name,...
        #[arg(long)]
        transversal: String,
        #[arg(short = 'o')]
        output: PathBuf,
    },
    /// The right loops Z^B and the transversal T_B of the infinite dihedral group
    Dinf {
        /// Comma-separated nonzero integers
        #[arg(long = "b", allow_hyphen_values = true)]
        b: String,
        /// Half-width N of the checked window [-N, N]
        #[arg(long)]
        window: u64,
        #[arg(long)]
        check_iso: bool,
        #[arg(long)]
        emit_loop: Option<PathBuf>,
    },
    /// Loop, commutativity, inverse-property and left-inverse checks
    Analyze {
        file: PathBuf,
        /// Any of loop, commutative, ip, lemma1
        #[arg(long)]
        props: String,
    },
    /// Order of the right multiplication group
    Mulgroup {
        file: PathBuf,
        /// Give up once the group exceeds this many elements
        #[arg(long)]
        cap: usize,
    },
    /// Build the word R'_b (R'_{1/a})^-1 R'_b (R'_{1/a})^-1 on a twisted loop
    Alpha {
        file: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        eta: Option<String>,
        #[arg(long)]
        check_identity: bool,
    },
    /// Search translation words for nonidentity elements of small support
    Witness {
        #[arg(required_unless_present = "dinf_b")]
        file: Option<PathBuf>,
        #[arg(long = "dinf-b", conflicts_with = "file", allow_hyphen_values = true)]
        dinf_b: Option<String>,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        max_support: usize,
    },
}

/// Exit-code-1 outcome vs. success.
type Verdict = Result<bool, String>;

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    let mut buf = String::new();
    let verdict = dispatch(cli.command, &mut buf, err);
    if out.write_all(buf.as_bytes()).is_err() {
        return 2;
    }
    match verdict {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cmd: Command, out: &mut String, err: &mut dyn Write) -> Verdict {
    match cmd {
        Command::Validate { file, kind } => {
            let f = load(&file)?;
            let report = validate(&f.table, 0, kind.into()).map_err(|e| e.to_string())?;
            line(out, report.to_line(&f.table));
            Ok(report.is_valid())
        }
        Command::Twist {
            file,
            b,
            eta,
            output,
        } => cmd_twist(&file, &b, &eta, &output, out),
        Command::Nrt {
            groupfile,
            subgroup,
            enumerate,
            choose,
            emit_loop,
            emit_cgroupoid,
        } => cmd_nrt(
            &groupfile,
            &subgroup,
            enumerate,
            choose.as_deref(),
            emit_loop,
            emit_cgroupoid,
            out,
        ),
        Command::Cgroupoid {
            groupfile,
            subgroup,
            transversal,
            output,
        } => {
            let g = load_group(&groupfile)?;
            let h = subgroup_closure(&g, names_to_indices(g.as_loop().table(), &subgroup)?)
                .map_err(|e| e.to_string())?;
            let part = right_cosets(&h);
            let s = Transversal::from_elements(
                &h,
                &part,
                names_to_indices(g.as_loop().table(), &transversal)?,
            )
            .map_err(|e| e.to_string())?;
            let (ok, text) = transversal_summary(&s, out)?;
            write_file(&output, &text)?;
            Ok(ok)
        }
        Command::Dinf {
            b,
            window,
            check_iso,
            emit_loop,
        } => {
            let l = ZbLoop::new(parse_ints(&b)?).map_err(|e| e.to_string())?;
            let mut ok = true;
            if check_iso {
                let rep = isomorphism_check(&l, window);
                for k in &rep.outside_window {
                    let _ = writeln!(err, "warning: {k} in B lies outside the window");
                }
                if rep.holds() {
                    line(out, "isomorphism holds");
                } else {
                    let ws: Vec<String> = rep
                        .mismatches
                        .iter()
                        .take(10)
                        .map(|(i, k, a, b)| format!("{i},{k}: {a} != {b}"))
                        .collect();
                    line(out, format!("isomorphism fails [{}]", ws.join("; ")));
                    ok = false;
                }
                line(out, format!("pairs {}", rep.pairs_checked));
            }
            if let Some(path) = emit_loop {
                write_file(&path, &window_table(&l, window))?;
            } else if !check_iso {
                out.push_str(&window_table(&l, window));
            }
            Ok(ok)
        }
        Command::Analyze { file, props } => cmd_analyze(&file, &props, out),
        Command::Mulgroup { file, cap } => {
            let l = load_loop(&file)?;
            let r = right_mult_group(&l, cap);
            if r.closed {
                line(out, format!("order {}", r.order));
            } else {
                line(out, format!("order >{cap}"));
            }
            line(out, format!("generators {}", r.generators));
            line(out, format!("closed {}", r.closed));
            Ok(true)
        }
        Command::Alpha {
            file,
            a,
            b,
            eta,
            check_identity,
        } => cmd_alpha(&file, &a, &b, eta.as_deref(), check_identity, out),
        Command::Witness {
            file,
            dinf_b,
            max_len,
            max_support,
        } => match (file, dinf_b) {
            (Some(file), None) => {
                let l = load_loop(&file)?;
                let gens: Vec<Permutation> =
                    (0..l.order()).map(|a| l.right_translation(a)).collect();
                let found = witness_search(&gens, max_len, max_support);
                print_witnesses(
                    out,
                    &found,
                    |g| l.name(g).to_string(),
                    |p| l.name(p).to_string(),
                );
                Ok(true)
            }
            (None, Some(b)) => {
                let l = ZbLoop::new(parse_ints(&b)?).map_err(|e| e.to_string())?;
                let (labels, gens): (Vec<BigInt>, Vec<_>) =
                    l.translation_generators(5).into_iter().unzip();
                let found = witness_search(&gens, max_len, max_support);
                print_witnesses(out, &found, |g| labels[g].to_string(), |p| p.to_string());
                Ok(found.is_empty())
            }
            _ => Err("give either a file or --dinf-b".into()),
        },
    }
}

fn line(out: &mut String, s: impl AsRef<str>) {
    out.push_str(s.as_ref());
    out.push('\n');
}

fn load(path: &Path) -> Result<LoopFile, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    looptab::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_loop(path: &Path) -> Result<RightLoopTable, String> {
    let f = load(path)?;
    RightLoopTable::new(f.table, 0).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_group(path: &Path) -> Result<FiniteGroup, String> {
    let f = load(path)?;
    FiniteGroup::new(f.table, 0).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<(), String> {
    std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn name_to_index(t: &CayleyTable, name: &str) -> Result<usize, String> {
    t.index_of(name)
        .ok_or_else(|| format!("unknown element {name:?}"))
}

fn names_to_indices(t: &CayleyTable, list: &str) -> Result<Vec<usize>, String> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| name_to_index(t, s))
        .collect()
}

fn parse_ints(list: &str) -> Result<Vec<BigInt>, String> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<BigInt>()
                .map_err(|_| format!("not an integer: {s:?}"))
        })
        .collect()
}

/// `--eta` as a comma-separated image list in element order, or `@file`
/// with `name:image` lines (unlisted elements are fixed).
fn parse_eta(t: &CayleyTable, spec: &str) -> Result<Permutation, String> {
    let n = t.order();
    let images = if let Some(path) = spec.strip_prefix('@') {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        let mut images: Vec<usize> = (0..n).collect();
        let mut assigned = vec![false; n];
        for raw in text.lines() {
            let l = raw.split('#').next().unwrap_or("").trim();
            if l.is_empty() {
                continue;
            }
            let (from, to) = l
                .split_once(':')
                .ok_or_else(|| format!("bad eta line {l:?}"))?;
            let from = name_to_index(t, from.trim())?;
            if std::mem::replace(&mut assigned[from], true) {
                return Err(format!("eta assigns {} twice", t.name(from)));
            }
            images[from] = name_to_index(t, to.trim())?;
        }
        images
    } else {
        let images = names_to_indices(t, spec)?;
        if images.len() != n {
            return Err(format!(
                "eta lists {} images for {n} elements",
                images.len()
            ));
        }
        images
    };
    Permutation::from_images(images).map_err(|e| format!("eta: {e}"))
}

fn cmd_twist(file: &Path, b: &str, eta: &str, output: &Path, out: &mut String) -> Verdict {
    let base = load_loop(file)?;
    let t = base.table();
    let spec = TwistSpec::new(names_to_indices(t, b)?, parse_eta(t, eta)?, base.identity())
        .map_err(|e| e.to_string())?;
    let twisted = twist(&base, &spec).map_err(|e| e.to_string())?;
    write_file(
        output,
        &looptab::write(twisted.table(), twisted.identity(), FileKind::Loop, &[]),
    )?;
    let rl = validate(twisted.table(), twisted.identity(), LoopKind::RightLoop).expect("in range");
    line(out, rl.to_line(twisted.table()));
    let ti = translation_identities(&base, &spec, &twisted);
    if ti.holds() {
        line(out, "translation-identities holds");
    } else {
        let ys: Vec<&str> = ti.failures.iter().map(|&y| t.name(y)).collect();
        line(
            out,
            format!("translation-identities fails [{}]", ys.join(" ")),
        );
    }
    let lp = check_property(&twisted, Property::Loop);
    line(out, lp.to_line(twisted.table()));
    Ok(rl.is_valid() && ti.holds())
}

/// Prints the induced-loop and c-groupoid checks and returns the export text.
fn transversal_summary(s: &Transversal<'_>, out: &mut String) -> Result<(bool, String), String> {
    let induced = induced_operation(s);
    let rl = validate(induced.table(), 0, LoopKind::RightLoop).expect("in range");
    line(out, format!("transversal {}", s.names().join(" ")));
    line(out, rl.to_line(induced.table()));
    let data = c_groupoid(s).map_err(|e| e.to_string())?;
    let failures = reconstruction_failures(&data, &induced);
    line(
        out,
        if failures == 0 {
            "reconstruction holds".to_string()
        } else {
            format!("reconstruction fails [{failures} products]")
        },
    );
    let action = theta_action_check(&data);
    line(
        out,
        if action.holds() {
            "theta-action holds".to_string()
        } else {
            format!("theta-action fails [{} triples]", action.failures.len())
        },
    );
    Ok((
        rl.is_valid() && failures == 0 && action.holds(),
        data.export(),
    ))
}

fn cmd_nrt(
    groupfile: &Path,
    subgroup: &str,
    enumerate: bool,
    choose: Option<&str>,
    emit_loop: Option<PathBuf>,
    emit_cgroupoid: Option<PathBuf>,
    out: &mut String,
) -> Verdict {
    let g = load_group(groupfile)?;
    let t = g.as_loop().table();
    let h = subgroup_closure(&g, names_to_indices(t, subgroup)?).map_err(|e| e.to_string())?;
    let part = right_cosets(&h);
    let names = |xs: &[usize]| xs.iter().map(|&x| g.name(x)).collect::<Vec<_>>().join(" ");
    line(out, format!("subgroup {}", names(h.members())));
    for (i, c) in part.cosets().iter().enumerate() {
        line(out, format!("coset {i}: {}", names(c)));
    }
    if enumerate {
        if emit_loop.is_some() || emit_cgroupoid.is_some() {
            return Err("--emit-loop and --emit-cgroupoid need --choose".into());
        }
        let mut ok = true;
        let mut count: u128 = 0;
        for (k, s) in enumerate_nrts(&h, &part).enumerate() {
            let induced = induced_operation(&s);
            let rl = validate(induced.table(), 0, LoopKind::RightLoop).expect("in range");
            ok &= rl.is_valid();
            line(
                out,
                format!(
                    "nrt {k}: {} | {}",
                    s.names().join(" "),
                    rl.to_line(induced.table())
                ),
            );
            count += 1;
        }
        let expected = nrt_count(&h, &part);
        line(out, format!("count {count} expected {expected}"));
        return Ok(ok && count == expected);
    }
    let choose = choose.expect("clap requires --enumerate or --choose");
    let mut pairs = Vec::new();
    for item in choose.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (i, name) = item
            .split_once(':')
            .ok_or_else(|| format!("bad choice {item:?}, expected <coset-index>:<name>"))?;
        let i: usize = i
            .trim()
            .parse()
            .map_err(|_| format!("bad coset index in {item:?}"))?;
        pairs.push((i, name_to_index(t, name.trim())?));
    }
    let s = Transversal::from_choices(&h, &part, pairs).map_err(|e| e.to_string())?;
    let (ok, export) = transversal_summary(&s, out)?;
    if let Some(path) = emit_loop {
        let induced = induced_operation(&s);
        write_file(
            &path,
            &looptab::write(induced.table(), 0, FileKind::Loop, &[]),
        )?;
    }
    if let Some(path) = emit_cgroupoid {
        write_file(&path, &export)?;
    }
    Ok(ok)
}

fn cmd_analyze(file: &Path, props: &str, out: &mut String) -> Verdict {
    let l = load_loop(file)?;
    let mut ok = true;
    for p in props.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let property = match p {
            "loop" => Property::Loop,
            "commutative" => Property::Commutative,
            "ip" => Property::InverseProperty,
            "lemma1" => {
                match lemma1_check(&l) {
                    Ok(rep) if rep.holds() => line(out, "lemma1 holds"),
                    Ok(rep) => {
                        let mut bad = rep.failures.clone();
                        bad.extend(&rep.double_inverse_failures);
                        bad.sort();
                        bad.dedup();
                        let names: Vec<&str> = bad.iter().map(|&a| l.name(a)).collect();
                        line(out, format!("lemma1 fails [{}]", names.join(" ")));
                        ok = false;
                    }
                    Err(_) => line(out, "lemma1 n/a (not an inverse-property loop)"),
                }
                continue;
            }
            other => return Err(format!("unknown property {other:?}")),
        };
        let rep = check_property(&l, property);
        ok &= rep.holds;
        line(out, rep.to_line(l.table()));
    }
    Ok(ok)
}

fn cmd_alpha(
    file: &Path,
    a: &str,
    b: &str,
    eta: Option<&str>,
    check_identity: bool,
    out: &mut String,
) -> Verdict {
    let base = load_loop(file)?;
    let t = base.table();
    let (a, b) = (name_to_index(t, a)?, name_to_index(t, b)?);
    let eta = match eta {
        Some(e) => parse_eta(t, e)?,
        None => Permutation::identity(base.order()),
    };
    let alpha = build_alpha(&base, a, b, &eta).map_err(|e| e.to_string())?;
    let bs: Vec<&str> = alpha.spec.b().iter().map(|&y| t.name(y)).collect();
    line(out, format!("b-set {}", bs.join(" ")));
    line(
        out,
        format!("word {}", alpha.word.render(|g| t.name(g).to_string())),
    );
    let images: Vec<&str> = alpha
        .word
        .realized
        .images()
        .iter()
        .map(|&x| t.name(x))
        .collect();
    line(out, format!("alpha [{}]", images.join(" ")));
    let s = support(&alpha.word.realized);
    let moved: Vec<&str> = s.moved_points.iter().map(|&x| t.name(x)).collect();
    line(
        out,
        format!("support {} moved=[{}]", s.moved_count, moved.join(" ")),
    );
    if !check_identity {
        return Ok(true);
    }
    let rep = alpha_identity_check(&base, a, b, &eta).map_err(|e| e.to_string())?;
    if rep.holds() {
        line(out, "alpha-identity holds");
    } else {
        let pts: Vec<&str> = rep.mismatches.iter().map(|&x| t.name(x)).collect();
        line(out, format!("alpha-identity fails [{}]", pts.join(" ")));
    }
    Ok(rep.holds())
}

fn print_witnesses<M: Realization>(
    out: &mut String,
    found: &[WordWitness<M>],
    label: impl Fn(usize) -> String,
    point: impl Fn(usize) -> String,
) {
    if found.is_empty() {
        line(out, "no witness found");
        return;
    }
    for w in found {
        let moved: Vec<String> = w.support.moved_points.iter().map(|&p| point(p)).collect();
        line(
            out,
            format!(
                "word={} support={} moved=[{}]",
                w.word.render(&label),
                w.support.moved_count,
                moved.join(" ")
            ),
        );
    }
}

/// The finite window `[-N, N]` of `ℤ^B` in LOOPTAB layout. Entries that
/// leave the window are written as plain integers, so the result is a
/// truncation and does not parse back as a table.
pub fn window_table(l: &ZbLoop, window: u64) -> String {
    let n = window as i64;
    let elems: Vec<i64> = std::iter::once(0)
        .chain((-n..=n).filter(|&i| i != 0))
        .collect();
    let bs: Vec<String> = l.b().iter().map(|k| k.to_string()).collect();
    let mut s = String::from("looptab 1\n");
    let _ = writeln!(
        s,
        "# window [-{window}, {window}] of Z^B, B = {{{}}}",
        bs.join(", ")
    );
    s.push_str(
        "# truncation, not a right loop: entries outside the window are not element names\n",
    );
    let _ = writeln!(s, "{}", elems.len());
    let header: Vec<String> = elems.iter().map(i64::to_string).collect();
    let _ = writeln!(s, "{}", header.join(" "));
    for &i in &elems {
        let row: Vec<String> = elems
            .iter()
            .map(|&k| l.op(&BigInt::from(i), &BigInt::from(k)).to_string())
            .collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    s
}
