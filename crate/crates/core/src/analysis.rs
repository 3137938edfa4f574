//! Property checks, the left-inverse identity for inverse-property loops,
//! the four-letter translation word `α`, supports, right multiplication
//! groups and the search for finite-support translation words.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;

use crate::affine::{affine_support, AffineMap, SupportClass};
use crate::error::AnalysisError;
use crate::perm::Permutation;
use crate::table::{CayleyTable, RightLoopTable};
use crate::twist::{twist, TwistSpec};

/// Moved points beyond this many are counted but not listed.
pub const SUPPORT_DISPLAY_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    Loop,
    Commutative,
    InverseProperty,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Loop => "loop",
            Property::Commutative => "commutative",
            Property::InverseProperty => "inverse-property",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `row ∘ columns.0 = row ∘ columns.1`
    RowCollision {
        row: usize,
        columns: (usize, usize),
    },
    NonCommuting {
        x: usize,
        y: usize,
    },
    NoInverse {
        x: usize,
    },
}

impl Witness {
    pub fn describe(&self, t: &CayleyTable) -> String {
        match *self {
            Witness::RowCollision {
                row,
                columns: (a, b),
            } => {
                format!("row {}: columns {},{}", t.name(row), t.name(a), t.name(b))
            }
            Witness::NonCommuting { x, y } => format!("{},{}", t.name(x), t.name(y)),
            Witness::NoInverse { x } => format!("no inverse for {}", t.name(x)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: Property,
    pub holds: bool,
    pub witnesses: Vec<Witness>,
    /// `a ↦ a⁻¹`, present when the inverse property holds.
    pub inverse_map: Option<Vec<usize>>,
}

impl PropertyReport {
    pub fn to_line(&self, t: &CayleyTable) -> String {
        if self.holds {
            format!("{} holds", self.property)
        } else {
            let ws: Vec<String> = self.witnesses.iter().map(|w| w.describe(t)).collect();
            format!("{} fails [{}]", self.property, ws.join("; "))
        }
    }
}

fn row_collisions(l: &RightLoopTable) -> Vec<Witness> {
    let n = l.order();
    let mut out = Vec::new();
    for r in 0..n {
        let mut first = vec![usize::MAX; n];
        for c in 0..n {
            let v = l.op(r, c);
            if first[v] == usize::MAX {
                first[v] = c;
            } else {
                out.push(Witness::RowCollision {
                    row: r,
                    columns: (first[v], c),
                });
            }
        }
    }
    out
}

pub fn check_property(l: &RightLoopTable, property: Property) -> PropertyReport {
    let n = l.order();
    let mut inverse_map = None;
    let witnesses = match property {
        Property::Loop => row_collisions(l),
        Property::Commutative => {
            let mut w = Vec::new();
            for x in 0..n {
                for y in x + 1..n {
                    if l.op(x, y) != l.op(y, x) {
                        w.push(Witness::NonCommuting { x, y });
                    }
                }
            }
            w
        }
        Property::InverseProperty => {
            let mut w = row_collisions(l);
            if w.is_empty() {
                let mut inv = Vec::with_capacity(n);
                for x in 0..n {
                    let found = (0..n).find(|&u| {
                        (0..n).all(|y| l.op(u, l.op(x, y)) == y && l.op(l.op(y, x), u) == y)
                    });
                    match found {
                        Some(u) => inv.push(u),
                        None => w.push(Witness::NoInverse { x }),
                    }
                }
                if w.is_empty() {
                    inverse_map = Some(inv);
                }
            }
            w
        }
    };
    PropertyReport {
        property,
        holds: witnesses.is_empty(),
        witnesses,
        inverse_map,
    }
}

/// `a ↦ 1/a`, the left inverse of each element (`(1/a) ∘ a = 1`).
pub fn left_inverse_map(l: &RightLoopTable) -> Vec<usize> {
    (0..l.order())
        .map(|a| l.right_divide(l.identity(), a))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Lemma1Report {
    pub checked: usize,
    /// Elements `a` with `L_{1/a}⁻¹ ≠ L_a`.
    pub failures: Vec<usize>,
    /// Elements `a` with `1/(1/a) ≠ a`.
    pub double_inverse_failures: Vec<usize>,
}

impl Lemma1Report {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && self.double_inverse_failures.is_empty()
    }
}

/// Checks `L_{1/a}⁻¹ = L_a` and `(a')' = a` for every `a` of an inverse-property loop.
pub fn lemma1_check(l: &RightLoopTable) -> Result<Lemma1Report, AnalysisError> {
    if !check_property(l, Property::InverseProperty).holds {
        return Err(AnalysisError::PreconditionFailed(
            "not an inverse-property loop".into(),
        ));
    }
    let li = left_inverse_map(l);
    let mut report = Lemma1Report::default();
    for a in 0..l.order() {
        report.checked += 1;
        let la = l.left_translation(a);
        let lia = l.left_translation(li[a]);
        match (la.permutation(), lia.permutation()) {
            (Some(la), Some(lia)) if &lia.inverse() == la => {}
            _ => report.failures.push(a),
        }
        if li[li[a]] != a {
            report.double_inverse_failures.push(a);
        }
    }
    Ok(report)
}

/// One letter of a translation word: `R_g` or `R_g⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

/// A word in right translations together with the map it realizes. Letters
/// are written left to right and the rightmost one is applied first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationWord<M> {
    pub letters: Vec<Letter>,
    pub realized: M,
}

impl<M> TranslationWord<M> {
    /// `R(b)*R(a)^-1`, or `1` for the empty word.
    pub fn render(&self, label: impl Fn(usize) -> String) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|l| {
                let base = format!("R({})", label(l.generator));
                if l.inverse {
                    base + "^-1"
                } else {
                    base
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MovedCount {
    Finite(usize),
    Infinite,
}

impl fmt::Display for MovedCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MovedCount::Finite(k) => write!(f, "{k}"),
            MovedCount::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportReport {
    pub moved_count: MovedCount,
    /// Moved points when finite, truncated to `SUPPORT_DISPLAY_CAP`.
    pub moved_points: Vec<usize>,
    pub is_identity: bool,
}

pub fn support(p: &Permutation) -> SupportReport {
    let moved = p.moved_points();
    let count = moved.len();
    SupportReport {
        moved_count: MovedCount::Finite(count),
        moved_points: moved.into_iter().take(SUPPORT_DISPLAY_CAP).collect(),
        is_identity: count == 0,
    }
}

/// Maps that can be composed, inverted and measured: permutations of a
/// finite carrier and affine maps of `ℤ`.
pub trait Realization: Clone + Eq + Hash + Ord {
    fn identity_like(&self) -> Self;
    /// `self ∘ other`, `other` applied first.
    fn then_after(&self, other: &Self) -> Self;
    fn invert(&self) -> Self;
    fn support_report(&self) -> SupportReport;
}

impl Realization for Permutation {
    fn identity_like(&self) -> Self {
        Permutation::identity(self.len())
    }
    fn then_after(&self, other: &Self) -> Self {
        self.compose(other)
    }
    fn invert(&self) -> Self {
        self.inverse()
    }
    fn support_report(&self) -> SupportReport {
        support(self)
    }
}

impl Realization for AffineMap {
    fn identity_like(&self) -> Self {
        AffineMap::identity()
    }
    fn then_after(&self, other: &Self) -> Self {
        self.compose(other)
    }
    fn invert(&self) -> Self {
        self.inverse()
    }
    fn support_report(&self) -> SupportReport {
        match affine_support(self) {
            SupportClass::Empty => SupportReport {
                moved_count: MovedCount::Finite(0),
                moved_points: Vec::new(),
                is_identity: true,
            },
            SupportClass::AllIntegers | SupportClass::AllButOne(_) => SupportReport {
                moved_count: MovedCount::Infinite,
                moved_points: Vec::new(),
                is_identity: false,
            },
        }
    }
}

/// Realizes a word over `generators` (letter `generator` fields index into it).
pub fn realize<M: Realization>(generators: &[M], letters: &[Letter]) -> Option<M> {
    let first = generators.first()?;
    let mut acc = first.identity_like();
    for l in letters {
        let g = &generators[l.generator];
        acc = if l.inverse {
            acc.then_after(&g.invert())
        } else {
            acc.then_after(g)
        };
    }
    Some(acc)
}

/// The twisted loop and the word
/// `α = R'_b ∘ (R'_{1/a})⁻¹ ∘ R'_b ∘ (R'_{1/a})⁻¹` realized on it.
/// Letter generators are element indices.
#[derive(Debug, Clone)]
pub struct Alpha {
    pub a_left_inverse: usize,
    pub spec: TwistSpec,
    pub twisted: RightLoopTable,
    pub word: TranslationWord<Permutation>,
}

pub fn build_alpha(
    base: &RightLoopTable,
    a: usize,
    b: usize,
    eta: &Permutation,
) -> Result<Alpha, AnalysisError> {
    let e = base.identity();
    let n = base.order();
    if a >= n || b >= n {
        return Err(AnalysisError::PreconditionFailed(
            "a and b must be elements".into(),
        ));
    }
    if a == e || b == e {
        return Err(AnalysisError::PreconditionFailed(
            "a and b must differ from the identity".into(),
        ));
    }
    if eta.len() != n || eta.apply(e) != e {
        return Err(AnalysisError::PreconditionFailed(
            "eta must be a permutation fixing the identity".into(),
        ));
    }
    if !check_property(base, Property::Commutative).holds {
        return Err(AnalysisError::PreconditionFailed(
            "base is not commutative".into(),
        ));
    }
    if !check_property(base, Property::InverseProperty).holds {
        return Err(AnalysisError::PreconditionFailed(
            "base is not an inverse-property loop".into(),
        ));
    }
    let a_left_inverse = base.right_divide(e, a);
    let spec = TwistSpec::new([a_left_inverse, b], eta.clone(), e)?;
    let twisted = twist(base, &spec)?;
    let letters = vec![
        Letter {
            generator: b,
            inverse: false,
        },
        Letter {
            generator: a_left_inverse,
            inverse: true,
        },
        Letter {
            generator: b,
            inverse: false,
        },
        Letter {
            generator: a_left_inverse,
            inverse: true,
        },
    ];
    let translations: Vec<Permutation> = (0..n).map(|u| twisted.right_translation(u)).collect();
    let realized = realize(&translations, &letters).expect("nonempty loop");
    Ok(Alpha {
        a_left_inverse,
        spec,
        twisted,
        word: TranslationWord { letters, realized },
    })
}

#[derive(Debug, Clone)]
pub struct AlphaIdentityReport {
    pub alpha: Alpha,
    /// `L_b ∘ L_a ∘ L_b ∘ L_a` in the base loop.
    pub expected: Permutation,
    /// Points where the realized word differs from `expected`.
    pub mismatches: Vec<usize>,
}

impl AlphaIdentityReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn alpha_identity_check(
    base: &RightLoopTable,
    a: usize,
    b: usize,
    eta: &Permutation,
) -> Result<AlphaIdentityReport, AnalysisError> {
    let alpha = build_alpha(base, a, b, eta)?;
    let left = |u: usize| {
        base.left_translation(u)
            .permutation()
            .cloned()
            .expect("rows of a loop are bijective")
    };
    let (la, lb) = (left(a), left(b));
    let expected = lb.compose(&la).compose(&lb).compose(&la);
    let mismatches = (0..base.order())
        .filter(|&x| alpha.word.realized.apply(x) != expected.apply(x))
        .collect();
    Ok(AlphaIdentityReport {
        alpha,
        expected,
        mismatches,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MulGroupReport {
    pub order: usize,
    /// Number of distinct right translations.
    pub generators: usize,
    pub closed: bool,
}

/// Breadth-first closure of `{R_a}`; stops once more than `cap` elements are known.
pub fn right_mult_group(l: &RightLoopTable, cap: usize) -> MulGroupReport {
    let mut gens: Vec<Permutation> = (0..l.order()).map(|a| l.right_translation(a)).collect();
    gens.sort();
    gens.dedup();
    let id = Permutation::identity(l.order());
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in &gens {
            for q in [p.compose(g), p.compose(&g.inverse())] {
                if seen.insert(q.clone()) {
                    if seen.len() > cap {
                        return MulGroupReport {
                            order: seen.len(),
                            generators: gens.len(),
                            closed: false,
                        };
                    }
                    queue.push_back(q);
                }
            }
        }
    }
    MulGroupReport {
        order: seen.len(),
        generators: gens.len(),
        closed: true,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneityMap {
    /// `y / x`
    pub multiplier: usize,
    /// `t ↦ (y/x) ∘ t`
    pub images: Vec<usize>,
    pub bijective: bool,
}

pub fn homogeneity_map(l: &RightLoopTable, x: usize, y: usize) -> HomogeneityMap {
    let multiplier = l.right_divide(y, x);
    HomogeneityMap {
        multiplier,
        images: l.table().row(multiplier).to_vec(),
        bijective: l.is_row_bijective(multiplier),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordWitness<M> {
    pub word: TranslationWord<M>,
    pub support: SupportReport,
}

/// Every distinct map realized by a word of length at most `max_len` over
/// the generators and their inverses, with one shortest word each, in
/// breadth-first discovery order (identity first).
pub fn explore<M: Realization>(generators: &[M], max_len: usize) -> Vec<TranslationWord<M>> {
    let Some(first) = generators.first() else {
        return Vec::new();
    };
    let mut letters: Vec<(Letter, M)> = Vec::with_capacity(2 * generators.len());
    for (i, g) in generators.iter().enumerate() {
        letters.push((
            Letter {
                generator: i,
                inverse: false,
            },
            g.clone(),
        ));
        letters.push((
            Letter {
                generator: i,
                inverse: true,
            },
            g.invert(),
        ));
    }
    let id = first.identity_like();
    let mut seen: HashSet<M> = HashSet::from([id.clone()]);
    let mut found = vec![TranslationWord {
        letters: Vec::new(),
        realized: id,
    }];
    let mut level = 0..1;
    for _ in 0..max_len {
        let start = found.len();
        for w in level.clone() {
            for (letter, map) in &letters {
                let next = found[w].realized.then_after(map);
                if seen.insert(next.clone()) {
                    let mut word = found[w].letters.clone();
                    word.push(*letter);
                    found.push(TranslationWord {
                        letters: word,
                        realized: next,
                    });
                }
            }
        }
        if found.len() == start {
            break;
        }
        level = start..found.len();
    }
    found
}

/// Nonidentity elements of support at most `max_support` reachable by words
/// of length at most `max_len`, sorted by (support, length, word).
pub fn witness_search<M: Realization>(
    generators: &[M],
    max_len: usize,
    max_support: usize,
) -> Vec<WordWitness<M>> {
    let mut out: Vec<WordWitness<M>> = explore(generators, max_len)
        .into_iter()
        .filter_map(|word| {
            let support = word.realized.support_report();
            match support.moved_count {
                MovedCount::Finite(k) if k > 0 && k <= max_support => {
                    Some(WordWitness { word, support })
                }
                _ => None,
            }
        })
        .collect();
    out.sort_by(|a, b| {
        (a.support.moved_count, a.word.letters.len(), &a.word.letters).cmp(&(
            b.support.moved_count,
            b.word.letters.len(),
            &b.word.letters,
        ))
    });
    out
}
