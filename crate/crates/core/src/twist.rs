//! The B-twist of a loop.
//!
//! Given a loop `(U, ∘)` with identity `e`, a subset `B ⊆ U ∖ {e}` and a
//! permutation `η` of `U` fixing `e`, the twisted operation is
//!
//! ```text
//! x ∘' y = x ∘ y        if y ∉ B
//! x ∘' y = y ∘ η(x)     if y ∈ B
//! ```
//!
//! so `R'_y = R_y` off `B` and `R'_y = L_y ∘ η` on `B`. The result is always a
//! right loop with the same identity.

use std::collections::BTreeSet;

use crate::error::TwistError;
use crate::perm::Permutation;
use crate::table::{CayleyTable, RightLoopTable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistSpec {
    b: BTreeSet<usize>,
    eta: Permutation,
}

impl TwistSpec {
    pub fn new(
        b: impl IntoIterator<Item = usize>,
        eta: Permutation,
        identity: usize,
    ) -> Result<Self, TwistError> {
        let b: BTreeSet<usize> = b.into_iter().collect();
        if b.contains(&identity) {
            return Err(TwistError::IdentityInB);
        }
        if identity >= eta.len() || eta.apply(identity) != identity {
            return Err(TwistError::EtaMovesIdentity(
                eta.images().get(identity).copied().unwrap_or(identity),
            ));
        }
        if let Some(&element) = b.iter().find(|&&y| y >= eta.len()) {
            return Err(TwistError::ElementOutOfRange {
                element,
                order: eta.len(),
            });
        }
        Ok(TwistSpec { b, eta })
    }

    /// `B = ∅` with `η` the identity on `n` points.
    pub fn empty(n: usize) -> Self {
        TwistSpec {
            b: BTreeSet::new(),
            eta: Permutation::identity(n),
        }
    }

    pub fn b(&self) -> &BTreeSet<usize> {
        &self.b
    }

    pub fn eta(&self) -> &Permutation {
        &self.eta
    }
}

/// Builds the twisted right loop `U^B_η`.
pub fn twist(base: &RightLoopTable, spec: &TwistSpec) -> Result<RightLoopTable, TwistError> {
    let n = base.order();
    if spec.eta.len() != n {
        return Err(TwistError::DegreeMismatch {
            eta: spec.eta.len(),
            order: n,
        });
    }
    if spec.b.contains(&base.identity()) {
        return Err(TwistError::IdentityInB);
    }
    if spec.eta.apply(base.identity()) != base.identity() {
        return Err(TwistError::EtaMovesIdentity(
            spec.eta.apply(base.identity()),
        ));
    }
    if let Some(row) = base.first_non_bijective_row() {
        return Err(TwistError::NotALoop(row));
    }
    let table = CayleyTable::from_fn(base.table().names().to_vec(), |x, y| {
        if spec.b.contains(&y) {
            base.op(y, spec.eta.apply(x))
        } else {
            base.op(x, y)
        }
    })
    .expect("twist keeps entries in range");
    Ok(RightLoopTable::new(table, base.identity()).expect("a twisted loop is a right loop"))
}

/// Per-column comparison of the twisted right translations with the
/// translations of the base loop.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TranslationReport {
    pub checked: usize,
    /// Columns `y` whose right translation disagrees with the expected map.
    pub failures: Vec<usize>,
}

impl TranslationReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn translation_identities(
    base: &RightLoopTable,
    spec: &TwistSpec,
    twisted: &RightLoopTable,
) -> TranslationReport {
    let mut report = TranslationReport::default();
    for y in 0..base.order() {
        report.checked += 1;
        let got = twisted.right_translation(y);
        let ok = if spec.b.contains(&y) {
            match base.left_translation(y).permutation() {
                Some(l) => got == l.compose(&spec.eta),
                None => false,
            }
        } else {
            got == base.right_translation(y)
        };
        if !ok {
            report.failures.push(y);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::table::{validate, LoopKind};
    use proptest::prelude::*;

    fn negation(n: usize) -> Permutation {
        Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap()
    }

    #[test]
    fn spec_invariants() {
        let eta = negation(6);
        assert_eq!(
            TwistSpec::new([0, 2], eta.clone(), 0),
            Err(TwistError::IdentityInB)
        );
        let moves = Permutation::from_images(vec![1, 0, 2, 3, 4, 5]).unwrap();
        assert_eq!(
            TwistSpec::new([2], moves, 0),
            Err(TwistError::EtaMovesIdentity(1))
        );
        assert!(matches!(
            TwistSpec::new([9], eta, 0),
            Err(TwistError::ElementOutOfRange { element: 9, .. })
        ));
    }

    #[test]
    fn twist_requires_a_loop() {
        let z6 = corpus::cyclic(6);
        let tw = twist(&z6, &TwistSpec::new([2], negation(6), 0).unwrap()).unwrap();
        let again = TwistSpec::new([3], Permutation::identity(6), 0).unwrap();
        assert_eq!(twist(&tw, &again), Err(TwistError::NotALoop(1)));
    }

    #[test]
    fn z6_twist_by_negation() {
        let z6 = corpus::cyclic(6);
        let spec = TwistSpec::new([2], negation(6), 0).unwrap();
        let tw = twist(&z6, &spec).unwrap();
        for r in 0..6 {
            for c in 0..6 {
                let expect = if c == 2 { (6 + 2 - r) % 6 } else { (r + c) % 6 };
                assert_eq!(tw.op(r, c), expect);
            }
        }
        let rep = translation_identities(&z6, &spec, &tw);
        assert!(rep.holds());
        assert_eq!(rep.checked, 6);
        // L_2 ∘ η composed explicitly: r ↦ 2 + (6 - r)
        let l2 = z6.left_translation(2).permutation().unwrap().clone();
        let composed: Vec<usize> = (0..6).map(|r| l2.apply(negation(6).apply(r))).collect();
        assert_eq!(tw.right_translation(2).images(), composed.as_slice());
    }

    #[test]
    fn z6_two_columns_swap_eta() {
        let z6 = corpus::cyclic(6);
        let eta = Permutation::from_images(vec![0, 3, 2, 1, 4, 5]).unwrap();
        let spec = TwistSpec::new([2, 5], eta, 0).unwrap();
        let tw = twist(&z6, &spec).unwrap();
        assert!(translation_identities(&z6, &spec, &tw).holds());
        // brute-force column comparison
        for y in [2usize, 5] {
            for x in 0..6 {
                let ex = [0, 3, 2, 1, 4, 5][x];
                assert_eq!(tw.op(x, y), (y + ex) % 6);
            }
        }
    }

    #[test]
    fn integer_window_example() {
        // 3 ∘' 2 = 2 ∘ η(3) = 2 - 3 = -1 in Z; inside Z_7 that is 6.
        let z7 = corpus::cyclic(7);
        let tw = twist(&z7, &TwistSpec::new([2], negation(7), 0).unwrap()).unwrap();
        assert_eq!(tw.op(3, 2), 6);
    }

    #[test]
    fn wrong_translation_is_reported() {
        let z6 = corpus::cyclic(6);
        let spec = TwistSpec::new([2], negation(6), 0).unwrap();
        let other = twist(&z6, &TwistSpec::new([3], negation(6), 0).unwrap()).unwrap();
        assert_eq!(
            translation_identities(&z6, &spec, &other).failures,
            vec![2, 3]
        );
    }

    fn arb_spec(n: usize) -> impl Strategy<Value = TwistSpec> {
        let b = proptest::collection::btree_set(1..n, 0..n);
        let eta = Just((1..n).collect::<Vec<_>>()).prop_shuffle();
        (b, eta).prop_map(|(b, rest)| {
            let mut images = vec![0];
            images.extend(rest);
            TwistSpec::new(b, Permutation::from_images(images).unwrap(), 0).unwrap()
        })
    }

    proptest! {
        #[test]
        fn twist_of_chein_loop_is_a_column_local_right_loop(spec in arb_spec(12)) {
            let base = corpus::chein12();
            let tw = twist(&base, &spec).unwrap();
            prop_assert!(validate(tw.table(), 0, LoopKind::RightLoop).unwrap().is_valid());
            prop_assert_eq!(tw.identity(), base.identity());
            for y in (0..12).filter(|y| !spec.b().contains(y)) {
                prop_assert_eq!(tw.table().column(y), base.table().column(y));
            }
            prop_assert!(translation_identities(&base, &spec, &tw).holds());
        }

        #[test]
        fn empty_b_is_idempotent(spec in arb_spec(10)) {
            let base = corpus::steiner10();
            let empty = TwistSpec::new([], spec.eta().clone(), 0).unwrap();
            prop_assert_eq!(twist(&base, &empty).unwrap(), base);
        }

        #[test]
        fn commutative_base_with_trivial_eta_is_unchanged(spec in arb_spec(8)) {
            let base = corpus::abelian(&[4, 2]);
            let s = TwistSpec::new(spec.b().iter().copied(), Permutation::identity(8), 0).unwrap();
            prop_assert_eq!(twist(&base, &s).unwrap(), base);
        }
    }
}
