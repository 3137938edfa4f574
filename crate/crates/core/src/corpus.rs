//! Small named loops used by the examples, tests and the bundled `data/` files.
//!
//! Every group of order at most 8 up to isomorphism is here, plus three
//! nonassociative loops: the Steiner loop of the affine plane of order 3
//! (commutative, inverse property), the Chein loop `M(S3, 2)` (Moufang, not
//! commutative) and a loop of order 5 without the inverse property.
//! The identity is always element 0.

use crate::table::{CayleyTable, RightLoopTable};

fn build(names: Vec<String>, op: impl Fn(usize, usize) -> usize) -> RightLoopTable {
    let table = CayleyTable::from_fn(names, op).expect("corpus table is well formed");
    RightLoopTable::new(table, 0).expect("corpus table is a right loop")
}

/// `ℤ_n` with elements named `0..n`.
pub fn cyclic(n: usize) -> RightLoopTable {
    build((0..n).map(|i| i.to_string()).collect(), |r, c| (r + c) % n)
}

/// Direct product of cyclic groups `ℤ_{m1} × ... × ℤ_{mk}`, each factor below 10.
/// Elements are named by their digit strings, e.g. `"31"` in `ℤ4 × ℤ2`.
pub fn abelian(moduli: &[usize]) -> RightLoopTable {
    assert!(moduli.iter().all(|&m| (1..=10).contains(&m)));
    let n: usize = moduli.iter().product();
    let digits = |mut i: usize| -> Vec<usize> {
        let mut d = vec![0; moduli.len()];
        for k in (0..moduli.len()).rev() {
            d[k] = i % moduli[k];
            i /= moduli[k];
        }
        d
    };
    let index = |d: &[usize]| d.iter().zip(moduli).fold(0, |acc, (&x, &m)| acc * m + x);
    let names = (0..n)
        .map(|i| digits(i).iter().map(|d| d.to_string()).collect())
        .collect();
    build(names, |r, c| {
        let (a, b) = (digits(r), digits(c));
        let s: Vec<usize> = a
            .iter()
            .zip(&b)
            .zip(moduli)
            .map(|((x, y), m)| (x + y) % m)
            .collect();
        index(&s)
    })
}

/// Dihedral group of order `2m`: `r^i` named `r{i}` (with `e` for `r0`) and
/// reflections `r^i s` named `s{i}`.
pub fn dihedral(m: usize) -> RightLoopTable {
    let name = |k: usize| {
        let (i, j) = (k % m, k / m);
        match (i, j) {
            (0, 0) => "e".to_string(),
            (i, 0) => format!("r{i}"),
            (i, _) => format!("s{i}"),
        }
    };
    build((0..2 * m).map(name).collect(), |a, b| {
        let (i1, j1) = (a % m, a / m);
        let (i2, j2) = (b % m, b / m);
        let i = if j1 == 0 {
            (i1 + i2) % m
        } else {
            (i1 + m - i2) % m
        };
        i + m * (j1 ^ j2)
    })
}

/// `S3`, realized as the dihedral group of order 6: `r1`, `r2` are the
/// 3-cycles and `s0`, `s1`, `s2` the transpositions.
pub fn symmetric3() -> RightLoopTable {
    dihedral(3)
}

/// The quaternion group `{±1, ±i, ±j, ±k}`.
pub fn quaternion() -> RightLoopTable {
    // units 1, i, j, k as 0..4; unit_mul gives (sign flip, unit)
    fn unit_mul(a: usize, b: usize) -> (bool, usize) {
        match (a, b) {
            (0, x) | (x, 0) => (false, x),
            (x, y) if x == y => (true, 0),
            (1, 2) => (false, 3),
            (2, 3) => (false, 1),
            (3, 1) => (false, 2),
            (2, 1) => (true, 3),
            (3, 2) => (true, 1),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    }
    let units = ["1", "i", "j", "k"];
    let names = (0..8)
        .map(|k| {
            let u = units[k / 2];
            if k % 2 == 0 {
                u.to_string()
            } else {
                format!("-{u}")
            }
        })
        .collect();
    build(names, |a, b| {
        let (flip, u) = unit_mul(a / 2, b / 2);
        let neg = (a % 2 == 1) ^ (b % 2 == 1) ^ flip;
        2 * u + usize::from(neg)
    })
}

/// Every group of order at most 8, one per isomorphism class.
pub fn groups_up_to_8() -> Vec<(&'static str, RightLoopTable)> {
    vec![
        ("z1", cyclic(1)),
        ("z2", cyclic(2)),
        ("z3", cyclic(3)),
        ("z4", cyclic(4)),
        ("z2xz2", abelian(&[2, 2])),
        ("z5", cyclic(5)),
        ("z6", cyclic(6)),
        ("s3", symmetric3()),
        ("z7", cyclic(7)),
        ("z8", cyclic(8)),
        ("z4xz2", abelian(&[4, 2])),
        ("z2xz2xz2", abelian(&[2, 2, 2])),
        ("d4", dihedral(4)),
        ("q8", quaternion()),
    ]
}

/// Steiner loop of the affine plane over `ℤ3`: points `pij` and `e`, with
/// `p ∘ p = e` and `p ∘ q` the third point on the line through `p` and `q`.
/// Commutative, inverse property, not associative.
pub fn steiner10() -> RightLoopTable {
    let names = std::iter::once("e".to_string())
        .chain((0..9).map(|k| format!("p{}{}", k / 3, k % 3)))
        .collect();
    build(names, |a, b| match (a, b) {
        (0, x) | (x, 0) => x,
        (x, y) if x == y => 0,
        (x, y) => {
            let (p, q) = (x - 1, y - 1);
            let i = (6 - p / 3 - q / 3) % 3;
            let j = (6 - p % 3 - q % 3) % 3;
            1 + 3 * i + j
        }
    })
}

/// Chein loop `M(S3, 2)` of order 12 on `S3 × {0, 1}`:
/// `(g,0)(h,0) = (gh,0)`, `(g,0)(h,1) = (hg,1)`, `(g,1)(h,0) = (gh⁻¹,1)`,
/// `(g,1)(h,1) = (h⁻¹g,0)`. A Moufang loop, hence inverse property, and
/// neither commutative nor associative.
pub fn chein12() -> RightLoopTable {
    let g = symmetric3();
    let inv: Vec<usize> = (0..6).map(|x| g.right_divide(0, x)).collect();
    let names = (0..12)
        .map(|k| {
            let base = g.name(k % 6);
            if k < 6 {
                base.to_string()
            } else {
                format!("{base}u")
            }
        })
        .collect();
    build(names, |a, b| {
        let (x, i) = (a % 6, a / 6);
        let (y, j) = (b % 6, b / 6);
        match (i, j) {
            (0, 0) => g.op(x, y),
            (0, _) => 6 + g.op(y, x),
            (_, 0) => 6 + g.op(x, inv[y]),
            _ => g.op(inv[y], x),
        }
    })
}

/// A noncommutative loop of order 5 (hence not a group) without the inverse property.
pub fn loop5() -> RightLoopTable {
    let rows = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ];
    build(
        ["e", "a", "b", "c", "d"].map(String::from).to_vec(),
        |r, c| rows[r][c],
    )
}

/// Groups of order at most 8 followed by the nonassociative loops.
pub fn all_loops() -> Vec<(&'static str, RightLoopTable)> {
    let mut v = groups_up_to_8();
    v.push(("steiner10", steiner10()));
    v.push(("chein12", chein12()));
    v.push(("loop5", loop5()));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::{validate, LoopKind};

    #[test]
    fn groups_are_groups_of_the_right_order() {
        let orders: Vec<usize> = groups_up_to_8().iter().map(|(_, g)| g.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8]);
        for (name, g) in groups_up_to_8() {
            let rep = validate(g.table(), 0, LoopKind::Group).unwrap();
            assert!(rep.is_valid(), "{name}: {}", rep.to_line(g.table()));
        }
    }

    #[test]
    fn groups_of_order_8_are_pairwise_distinct() {
        // invariants: abelian?, number of involutions
        let sig = |g: &RightLoopTable| {
            let n = g.order();
            let abelian = (0..n).all(|x| (0..n).all(|y| g.op(x, y) == g.op(y, x)));
            let inv = (1..n).filter(|&x| g.op(x, x) == 0).count();
            let order4 = (1..n)
                .filter(|&x| g.op(g.op(x, x), g.op(x, x)) == 0 && g.op(x, x) != 0)
                .count();
            (abelian, inv, order4)
        };
        let sigs: Vec<_> = groups_up_to_8()
            .iter()
            .filter(|(_, g)| g.order() == 8)
            .map(|(_, g)| sig(g))
            .collect();
        for i in 0..sigs.len() {
            for j in i + 1..sigs.len() {
                assert_ne!(sigs[i], sigs[j]);
            }
        }
    }

    #[test]
    fn nonassociative_loops() {
        for l in [steiner10(), chein12(), loop5()] {
            assert!(validate(l.table(), 0, LoopKind::Loop).unwrap().is_valid());
            assert!(!validate(l.table(), 0, LoopKind::Group).unwrap().is_valid());
        }
    }
}
