//! The word α = R'_b (R'_{1/a})⁻¹ R'_b (R'_{1/a})⁻¹ on twisted commutative
//! inverse-property loops, and its agreement with L_b L_a L_b L_a.

use rightloop::analysis::{alpha_identity_check, support};
use rightloop::corpus;
use rightloop::Permutation;

fn main() {
    let cases = [
        ("z5", corpus::cyclic(5), 1, 2),
        ("z2xz2xz2", corpus::abelian(&[2, 2, 2]), 3, 5),
        ("steiner10", corpus::steiner10(), 1, 5),
    ];
    for (name, base, a, b) in cases {
        let n = base.order();
        let etas = [
            Permutation::identity(n),
            Permutation::from_images((0..n).map(|i| if i == 0 { 0 } else { n - i }).collect())
                .unwrap(),
            Permutation::from_images(
                (0..n)
                    .map(|i| if i == 0 { 0 } else { i % (n - 1) + 1 })
                    .collect(),
            )
            .unwrap(),
        ];
        for eta in &etas {
            let rep = alpha_identity_check(&base, a, b, eta).unwrap();
            let s = support(&rep.alpha.word.realized);
            println!(
                "{name}: a={} b={} eta={eta} α={} support={:?} identity {}",
                base.name(a),
                base.name(b),
                rep.alpha.word.realized,
                s.moved_count,
                if rep.holds() { "holds" } else { "FAILS" }
            );
        }
    }
}
