//! The right loops `ℤ^B` (twist of `(ℤ, +)` by `B` with `η(i) = -i`), their
//! right translations as affine maps `x ↦ ±x + c`, and the transversal
//! `T_B = { x^{χ_B(i)} y^i }` of `H = {1, x}` in the infinite dihedral group.
//!
//! All arithmetic is on `BigInt`: long words of translations grow offsets
//! without bound.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// `x ↦ sign·x + offset`, with `sign = ±1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineMap {
    negate: bool,
    offset: BigInt,
}

impl AffineMap {
    pub fn new(negate: bool, offset: impl Into<BigInt>) -> Self {
        AffineMap {
            negate,
            offset: offset.into(),
        }
    }

    pub fn identity() -> Self {
        Self::new(false, 0)
    }

    pub fn translation(c: impl Into<BigInt>) -> Self {
        Self::new(false, c)
    }

    /// `x ↦ c - x`
    pub fn reflection(c: impl Into<BigInt>) -> Self {
        Self::new(true, c)
    }

    pub fn sign(&self) -> i8 {
        if self.negate {
            -1
        } else {
            1
        }
    }

    pub fn is_reflection(&self) -> bool {
        self.negate
    }

    pub fn offset(&self) -> &BigInt {
        &self.offset
    }

    pub fn apply(&self, x: &BigInt) -> BigInt {
        if self.negate {
            &self.offset - x
        } else {
            x + &self.offset
        }
    }

    /// `self ∘ other`: `(s1, c1) ∘ (s2, c2) = (s1·s2, s1·c2 + c1)`.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        let inner = if self.negate {
            -&other.offset
        } else {
            other.offset.clone()
        };
        AffineMap {
            negate: self.negate ^ other.negate,
            offset: inner + &self.offset,
        }
    }

    /// `(s, c)⁻¹ = (s, -s·c)`.
    pub fn inverse(&self) -> AffineMap {
        let offset = if self.negate {
            self.offset.clone()
        } else {
            -&self.offset
        };
        AffineMap {
            negate: self.negate,
            offset,
        }
    }

    pub fn is_identity(&self) -> bool {
        !self.negate && self.offset.is_zero()
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.negate { "-x" } else { "x" };
        if self.offset.is_negative() {
            write!(f, "{s} - {}", self.offset.abs())
        } else {
            write!(f, "{s} + {}", self.offset)
        }
    }
}

/// Exact description of the set of integers an affine map moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SupportClass {
    Empty,
    AllIntegers,
    /// Every integer except the single fixed point.
    AllButOne(BigInt),
}

impl SupportClass {
    pub fn is_finite(&self) -> bool {
        matches!(self, SupportClass::Empty)
    }
}

/// Fixed points of `x + c` exist only for `c = 0`; fixed points of `c - x`
/// are the solutions of `2x = c`.
pub fn affine_support(m: &AffineMap) -> SupportClass {
    if !m.negate {
        if m.offset.is_zero() {
            SupportClass::Empty
        } else {
            SupportClass::AllIntegers
        }
    } else {
        let two = BigInt::from(2);
        if (&m.offset % &two).is_zero() {
            SupportClass::AllButOne(&m.offset / two)
        } else {
            SupportClass::AllIntegers
        }
    }
}

/// `ℤ^B` for a finite `B ⊆ ℤ ∖ {0}`; `B = ∅` gives `(ℤ, +)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZbLoop {
    b: BTreeSet<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("0 cannot belong to B")]
pub struct ZeroInB;

impl ZbLoop {
    pub fn new<I, T>(b: I) -> Result<Self, ZeroInB>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let b: BTreeSet<BigInt> = b.into_iter().map(Into::into).collect();
        if b.contains(&BigInt::zero()) {
            return Err(ZeroInB);
        }
        Ok(ZbLoop { b })
    }

    pub fn b(&self) -> &BTreeSet<BigInt> {
        &self.b
    }

    pub fn in_b(&self, k: &BigInt) -> bool {
        self.b.contains(k)
    }

    /// `i ∘' k`: `i + k` off `B`, `k - i` on `B`.
    pub fn op(&self, i: &BigInt, k: &BigInt) -> BigInt {
        if self.in_b(k) {
            k - i
        } else {
            i + k
        }
    }

    /// `z / k`: `z - k` off `B`, `k - z` on `B`.
    pub fn right_divide(&self, z: &BigInt, k: &BigInt) -> BigInt {
        if self.in_b(k) {
            k - z
        } else {
            z - k
        }
    }

    /// `R'_k` as an affine map: `x + k` off `B`, `k - x` on `B`.
    pub fn right_translation(&self, k: &BigInt) -> AffineMap {
        AffineMap::new(self.in_b(k), k.clone())
    }

    /// `R'_k` for every `k` in `[-radius, radius] ∪ B`, sorted by `k`.
    pub fn translation_generators(&self, radius: u64) -> Vec<(BigInt, AffineMap)> {
        let r = BigInt::from(radius);
        let ks: BTreeSet<BigInt> = num_iter(&-&r, &r).chain(self.b.iter().cloned()).collect();
        ks.into_iter()
            .map(|k| {
                let m = self.right_translation(&k);
                (k, m)
            })
            .collect()
    }

    /// Induced operation of `T_B` computed inside the infinite dihedral group.
    pub fn transversal_op(&self, i: &BigInt, k: &BigInt) -> BigInt {
        let p = self
            .transversal_element(i)
            .mul(&self.transversal_element(k));
        // H·(j, m) = {(j, m), (1 - j, m)}, whose element in T_B is t_m
        p.power
    }

    /// `t_i = x^{χ_B(i)} y^i`.
    pub fn transversal_element(&self, i: &BigInt) -> DinfElement {
        DinfElement {
            flip: self.in_b(i),
            power: i.clone(),
        }
    }
}

/// `x^flip · y^power` in `D∞ = ⟨x, y | x² = 1, xyx = y⁻¹⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DinfElement {
    pub flip: bool,
    pub power: BigInt,
}

impl DinfElement {
    pub fn new(flip: bool, power: impl Into<BigInt>) -> Self {
        DinfElement {
            flip,
            power: power.into(),
        }
    }

    pub fn one() -> Self {
        Self::new(false, 0)
    }

    /// `(j1, i1)·(j2, i2) = (j1 ⊕ j2, (-1)^{j2}·i1 + i2)`, since `y^i x = x y^{-i}`.
    pub fn mul(&self, other: &DinfElement) -> DinfElement {
        let moved = if other.flip {
            -&self.power
        } else {
            self.power.clone()
        };
        DinfElement {
            flip: self.flip ^ other.flip,
            power: moved + &other.power,
        }
    }
}

impl fmt::Display for DinfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.flip, self.power.is_zero()) {
            (false, true) => write!(f, "1"),
            (true, true) => write!(f, "x"),
            (false, false) => write!(f, "y^{}", self.power),
            (true, false) => write!(f, "x y^{}", self.power),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IsoReport {
    pub window: u64,
    pub pairs_checked: u64,
    /// `(i, k, transversal_op, zb_op)` for every disagreement.
    pub mismatches: Vec<(BigInt, BigInt, BigInt, BigInt)>,
    /// Elements of `B` outside `[-N, N]`.
    pub outside_window: Vec<BigInt>,
}

impl IsoReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares `T_B` and `ℤ^B` under `t_i ↦ i` on all pairs in `[-N, N]²`.
pub fn isomorphism_check(l: &ZbLoop, window: u64) -> IsoReport {
    let n = BigInt::from(window);
    let lo = -&n;
    let range = || num_iter(&lo, &n);
    let mut report = IsoReport {
        window,
        outside_window: l.b.iter().filter(|k| k.abs() > n).cloned().collect(),
        ..Default::default()
    };
    for i in range() {
        for k in range() {
            report.pairs_checked += 1;
            let lhs = l.transversal_op(&i, &k);
            let rhs = l.op(&i, &k);
            if lhs != rhs {
                report.mismatches.push((i.clone(), k, lhs, rhs));
            }
        }
    }
    report
}

fn num_iter(lo: &BigInt, hi: &BigInt) -> impl Iterator<Item = BigInt> {
    let hi = hi.clone();
    std::iter::successors(Some(lo.clone()), move |x| {
        let next = x + BigInt::one();
        (next <= hi).then_some(next)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn zb_examples() {
        let b2 = ZbLoop::new([2]).unwrap();
        assert_eq!(b2.op(&bi(3), &bi(2)), bi(-1));
        assert_eq!(b2.right_divide(&bi(5), &bi(2)), bi(-3));
        assert_eq!(b2.op(&bi(-3), &bi(2)), bi(5));
        let b3 = ZbLoop::new([1, 5, -3]).unwrap();
        assert_eq!(b3.op(&bi(4), &bi(5)), bi(1));
        for l in [&b2, &b3] {
            for x in -7..=7 {
                assert_eq!(l.op(&bi(x), &bi(0)), bi(x));
                assert_eq!(l.op(&bi(0), &bi(x)), bi(x));
                assert_eq!(l.right_divide(&bi(x), &bi(x)), bi(0));
            }
        }
        let empty = ZbLoop::new(Vec::<i64>::new()).unwrap();
        assert_eq!(empty.right_divide(&bi(9), &bi(4)), bi(5));
        assert_eq!(ZbLoop::new([0, 1]), Err(ZeroInB));
    }

    #[test]
    fn dinf_relations() {
        let x = DinfElement::new(true, 0);
        let y = DinfElement::new(false, 1);
        assert_eq!(x.mul(&x), DinfElement::one());
        assert_eq!(x.mul(&y).mul(&x), DinfElement::new(false, -1));
        assert_eq!(
            DinfElement::new(false, 4).mul(&DinfElement::new(false, -9)),
            DinfElement::new(false, -5)
        );
    }

    #[test]
    fn transversal_op_examples() {
        let b2 = ZbLoop::new([2]).unwrap();
        let p = b2
            .transversal_element(&bi(3))
            .mul(&b2.transversal_element(&bi(2)));
        assert_eq!(p, DinfElement::new(true, -1));
        assert_eq!(b2.transversal_op(&bi(3), &bi(2)), bi(-1));
        let empty = ZbLoop::new(Vec::<i64>::new()).unwrap();
        for i in -5..=5 {
            for k in -5..=5 {
                assert_eq!(empty.transversal_op(&bi(i), &bi(k)), bi(i + k));
            }
            assert_eq!(b2.transversal_op(&bi(0), &bi(i)), bi(i));
        }
    }

    #[test]
    fn support_classes() {
        assert_eq!(affine_support(&AffineMap::identity()), SupportClass::Empty);
        assert_eq!(
            affine_support(&AffineMap::translation(3)),
            SupportClass::AllIntegers
        );
        assert_eq!(
            affine_support(&AffineMap::reflection(4)),
            SupportClass::AllButOne(bi(2))
        );
        assert_eq!(
            affine_support(&AffineMap::reflection(-3)),
            SupportClass::AllIntegers
        );
        assert_eq!(
            affine_support(&AffineMap::reflection(-6)),
            SupportClass::AllButOne(bi(-3))
        );
    }

    #[test]
    fn iso_check_small_window() {
        let l = ZbLoop::new([1, 5, -3]).unwrap();
        let r = isomorphism_check(&l, 3);
        assert!(r.holds());
        assert_eq!(r.pairs_checked, 49);
        assert_eq!(r.outside_window, vec![bi(5)]);
    }

    fn arb_map() -> impl Strategy<Value = AffineMap> {
        (any::<bool>(), any::<i128>()).prop_map(|(s, c)| AffineMap::new(s, c))
    }

    proptest! {
        #[test]
        fn affine_maps_form_a_group(a in arb_map(), b in arb_map(), c in arb_map(), x in any::<i128>()) {
            let x = BigInt::from(x);
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
            prop_assert!(a.compose(&a.inverse()).is_identity());
            prop_assert!(a.inverse().compose(&a).is_identity());
            prop_assert_eq!(a.compose(&b).apply(&x), a.apply(&b.apply(&x)));
            prop_assert_eq!(a.compose(&AffineMap::identity()), a.clone());
        }

        #[test]
        fn support_class_matches_fixed_points(m in arb_map(), probe in -1000i64..1000) {
            let p = BigInt::from(probe);
            let moved = m.apply(&p) != p;
            match affine_support(&m) {
                SupportClass::Empty => prop_assert!(!moved),
                SupportClass::AllIntegers => prop_assert!(moved),
                SupportClass::AllButOne(fixed) => {
                    prop_assert_eq!(m.apply(&fixed), fixed.clone());
                    prop_assert_eq!(moved, p != fixed);
                }
            }
        }

        #[test]
        fn right_translation_agrees_with_op(
            b in proptest::collection::btree_set(1i64..20, 0..5),
            i in -10_000i64..10_000,
            k in -25i64..25,
        ) {
            let l = ZbLoop::new(b.iter().flat_map(|&x| [x, -x])).unwrap();
            let (i, k) = (BigInt::from(i), BigInt::from(k));
            prop_assert_eq!(l.right_translation(&k).apply(&i), l.op(&i, &k));
            prop_assert_eq!(l.op(&l.right_divide(&i, &k), &k), i.clone());
        }
    }
}
