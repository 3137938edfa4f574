//! Twisting loops by (B, η) and checking R'_y = R_y off B, R'_y = L_y η on B.

use rightloop::analysis::{check_property, Property};
use rightloop::corpus;
use rightloop::twist::{translation_identities, twist, TwistSpec};
use rightloop::Permutation;

fn main() {
    let cases: Vec<(&str, Vec<usize>, Vec<usize>)> = vec![
        ("z6", vec![2], vec![0, 5, 4, 3, 2, 1]),
        ("z6", vec![2, 5], vec![0, 3, 2, 1, 4, 5]),
        (
            "chein12",
            vec![1, 7, 9],
            (0..12).map(|i| if i == 0 { 0 } else { 12 - i }).collect(),
        ),
        ("steiner10", vec![3], vec![0, 2, 1, 3, 4, 5, 6, 7, 8, 9]),
    ];
    let loops = corpus::all_loops();
    for (name, b, eta) in cases {
        let base = &loops.iter().find(|(n, _)| *n == name).unwrap().1;
        let spec = TwistSpec::new(b.clone(), Permutation::from_images(eta).unwrap(), 0).unwrap();
        let tw = twist(base, &spec).unwrap();
        let ids = translation_identities(base, &spec, &tw);
        let is_loop = check_property(&tw, Property::Loop).holds;
        println!(
            "{name} B={b:?}: translation identities {} ({} columns), twisted table is {}a loop",
            if ids.holds() { "hold" } else { "FAIL" },
            ids.checked,
            if is_loop { "" } else { "not " }
        );
    }
}
