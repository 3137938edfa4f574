//! Finite groups, right cosets and normalized right transversals.
//!
//! A normalized right transversal `S` of `H` in `G` picks one element from
//! every right coset `Hx` and picks `1` from `H` itself. It carries the
//! induced operation `x ∘ y = the element of S in H(xy)`, a right loop, and
//! the decomposition data
//!
//! ```text
//! x·y = f(x, y)·(x ∘ y)        f(x, y) ∈ H
//! x·h = σ(x, h)·θ(x, h)        σ(x, h) ∈ H, θ(x, h) ∈ S
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::TransversalError;
use crate::table::{validate, CayleyTable, LoopKind, RightLoopTable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    table: RightLoopTable,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    pub fn new(table: CayleyTable, identity: usize) -> Result<Self, TransversalError> {
        let report = validate(&table, identity, LoopKind::Group)?;
        if !report.is_valid() {
            return Err(TransversalError::NotAGroup(report));
        }
        let table = RightLoopTable::new(table, identity).expect("a group is a right loop");
        let inverses = (0..table.order())
            .map(|x| table.right_divide(identity, x))
            .collect();
        Ok(FiniteGroup { table, inverses })
    }

    pub fn from_loop(table: &RightLoopTable) -> Result<Self, TransversalError> {
        Self::new(table.table().clone(), table.identity())
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn identity(&self) -> usize {
        self.table.identity()
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table.op(x, y)
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverses[x]
    }

    pub fn name(&self, x: usize) -> &str {
        self.table.name(x)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.table.table().index_of(name)
    }

    pub fn as_loop(&self) -> &RightLoopTable {
        &self.table
    }

    fn check_element(&self, x: usize) -> Result<(), TransversalError> {
        if x < self.order() {
            Ok(())
        } else {
            Err(TransversalError::NotAnElement(x))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup<'g> {
    group: &'g FiniteGroup,
    members: Vec<usize>,
    contains: Vec<bool>,
}

impl<'g> Subgroup<'g> {
    /// Checks that `members` is a subgroup (finite, so closure under products suffices).
    pub fn new(
        group: &'g FiniteGroup,
        members: impl IntoIterator<Item = usize>,
    ) -> Result<Self, TransversalError> {
        let set: BTreeSet<usize> = members.into_iter().collect();
        for &x in &set {
            group.check_element(x)?;
        }
        if !set.contains(&group.identity()) {
            return Err(TransversalError::NotClosed {
                a: group.identity(),
                b: group.identity(),
                product: group.identity(),
            });
        }
        for &a in &set {
            for &b in &set {
                let product = group.mul(a, b);
                if !set.contains(&product) {
                    return Err(TransversalError::NotClosed { a, b, product });
                }
            }
        }
        Ok(Self::from_set(group, set))
    }

    fn from_set(group: &'g FiniteGroup, set: BTreeSet<usize>) -> Self {
        let mut contains = vec![false; group.order()];
        for &x in &set {
            contains[x] = true;
        }
        Subgroup {
            group,
            members: set.into_iter().collect(),
            contains,
        }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    /// Members in increasing index order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.contains.get(x).copied().unwrap_or(false)
    }

    /// Position of `h` in `members()`.
    pub fn position(&self, h: usize) -> Option<usize> {
        self.members.binary_search(&h).ok()
    }
}

/// Smallest subgroup containing `generators`.
pub fn subgroup_closure<'g>(
    group: &'g FiniteGroup,
    generators: impl IntoIterator<Item = usize>,
) -> Result<Subgroup<'g>, TransversalError> {
    let gens: Vec<usize> = generators.into_iter().collect();
    for &g in &gens {
        group.check_element(g)?;
    }
    let mut set = BTreeSet::from([group.identity()]);
    let mut frontier = vec![group.identity()];
    while let Some(x) = frontier.pop() {
        for &g in &gens {
            let y = group.mul(x, g);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    Ok(Subgroup::from_set(group, set))
}

/// Right cosets `Hx` of a subgroup, each sorted, the coset `H` first and the
/// rest ordered by their least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPartition {
    cosets: Vec<Vec<usize>>,
    coset_of: Vec<usize>,
}

impl CosetPartition {
    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Index of the coset containing `x`.
    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }
}

pub fn right_cosets(h: &Subgroup<'_>) -> CosetPartition {
    let g = h.group();
    let n = g.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut raw: Vec<Vec<usize>> = Vec::new();
    // identity first, then by least element
    let starts = std::iter::once(g.identity()).chain(0..n);
    for x in starts {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let mut coset: Vec<usize> = h.members().iter().map(|&m| g.mul(m, x)).collect();
        coset.sort_unstable();
        for &y in &coset {
            coset_of[y] = raw.len();
        }
        raw.push(coset);
    }
    CosetPartition {
        cosets: raw,
        coset_of,
    }
}

/// A normalized right transversal. `chosen()[i]` is the representative of coset `i`,
/// and index `i` is also that element's index in the induced loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal<'g> {
    subgroup: &'g Subgroup<'g>,
    cosets: &'g CosetPartition,
    chosen: Vec<usize>,
}

impl<'g> Transversal<'g> {
    /// Accepts any set with exactly one element per coset that contains the identity.
    pub fn from_elements(
        subgroup: &'g Subgroup<'g>,
        cosets: &'g CosetPartition,
        elements: impl IntoIterator<Item = usize>,
    ) -> Result<Self, TransversalError> {
        let g = subgroup.group();
        let mut chosen = vec![usize::MAX; cosets.len()];
        let mut saw_identity = false;
        for x in elements {
            g.check_element(x)?;
            saw_identity |= x == g.identity();
            let c = cosets.coset_of(x);
            if chosen[c] != usize::MAX && chosen[c] != x {
                return Err(TransversalError::SameCoset {
                    first: chosen[c],
                    second: x,
                });
            }
            chosen[c] = x;
        }
        if !saw_identity {
            return Err(TransversalError::NotNormalized);
        }
        if let Some(c) = chosen.iter().position(|&x| x == usize::MAX) {
            return Err(TransversalError::MissingCoset(c));
        }
        Ok(Transversal {
            subgroup,
            cosets,
            chosen,
        })
    }

    /// Picks `element` from coset `index` for each given pair and the least
    /// element from every other non-identity coset.
    pub fn from_choices(
        subgroup: &'g Subgroup<'g>,
        cosets: &'g CosetPartition,
        choices: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, TransversalError> {
        let g = subgroup.group();
        let mut chosen: Vec<usize> = cosets.cosets().iter().map(|c| c[0]).collect();
        chosen[0] = g.identity();
        for (index, element) in choices {
            if index >= cosets.len() {
                return Err(TransversalError::CosetOutOfRange {
                    index,
                    count: cosets.len(),
                });
            }
            g.check_element(element)?;
            if cosets.coset_of(element) != index {
                return Err(TransversalError::WrongCoset {
                    element,
                    coset: index,
                });
            }
            if index == 0 && element != g.identity() {
                return Err(TransversalError::NotNormalized);
            }
            chosen[index] = element;
        }
        Ok(Transversal {
            subgroup,
            cosets,
            chosen,
        })
    }

    pub fn chosen(&self) -> &[usize] {
        &self.chosen
    }

    pub fn subgroup(&self) -> &'g Subgroup<'g> {
        self.subgroup
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.subgroup.group()
    }

    pub fn len(&self) -> usize {
        self.chosen.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chosen.is_empty()
    }

    /// Transversal index of the representative of `g`'s coset.
    #[inline]
    pub fn project(&self, g: usize) -> usize {
        self.cosets.coset_of(g)
    }

    /// Element names, in transversal order.
    pub fn names(&self) -> Vec<String> {
        self.chosen
            .iter()
            .map(|&x| self.group().name(x).to_string())
            .collect()
    }
}

/// Iterator over all normalized right transversals in lexicographic order:
/// the last coset's choice varies fastest, choices within a coset go by
/// element index.
pub struct NrtIter<'g> {
    subgroup: &'g Subgroup<'g>,
    cosets: &'g CosetPartition,
    digits: Vec<usize>,
    done: bool,
}

impl<'g> Iterator for NrtIter<'g> {
    type Item = Transversal<'g>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let g = self.subgroup.group();
        let chosen = self
            .digits
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                if i == 0 {
                    g.identity()
                } else {
                    self.cosets.cosets()[i][d]
                }
            })
            .collect();
        // advance the odometer over cosets 1..
        self.done = true;
        for i in (1..self.digits.len()).rev() {
            self.digits[i] += 1;
            if self.digits[i] < self.cosets.cosets()[i].len() {
                self.done = false;
                break;
            }
            self.digits[i] = 0;
        }
        Some(Transversal {
            subgroup: self.subgroup,
            cosets: self.cosets,
            chosen,
        })
    }
}

pub fn enumerate_nrts<'g>(subgroup: &'g Subgroup<'g>, cosets: &'g CosetPartition) -> NrtIter<'g> {
    NrtIter {
        subgroup,
        cosets,
        digits: vec![0; cosets.len()],
        done: false,
    }
}

/// Number of normalized right transversals, `|H|^(cosets - 1)`.
pub fn nrt_count(subgroup: &Subgroup<'_>, cosets: &CosetPartition) -> u128 {
    (subgroup.order() as u128).pow(cosets.len() as u32 - 1)
}

/// The induced right loop on a transversal; identity is index 0.
pub fn induced_operation(s: &Transversal<'_>) -> RightLoopTable {
    let g = s.group();
    let table = CayleyTable::from_fn(s.names(), |x, y| s.project(g.mul(s.chosen[x], s.chosen[y])))
        .expect("induced table is well formed");
    RightLoopTable::new(table, 0).expect("an induced operation is a right loop")
}

/// The maps `f`, `σ`, `θ` of a transversal, stored as full tables of group
/// elements: `f[x][y]`, `sigma[x][h]` and `theta[x][h]`, where `x, y` are
/// transversal indices and `h` indexes `subgroup().members()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CGroupoidData<'g> {
    transversal: Transversal<'g>,
    f: Vec<Vec<usize>>,
    sigma: Vec<Vec<usize>>,
    theta: Vec<Vec<usize>>,
}

impl<'g> CGroupoidData<'g> {
    pub fn transversal(&self) -> &Transversal<'g> {
        &self.transversal
    }

    /// `f(x, y)` as a group element.
    pub fn f(&self, x: usize, y: usize) -> usize {
        self.f[x][y]
    }

    /// `σ(x, h)` as a group element; `h` is a position in the subgroup's members.
    pub fn sigma(&self, x: usize, h: usize) -> usize {
        self.sigma[x][h]
    }

    /// `θ(x, h)` as a transversal index.
    pub fn theta(&self, x: usize, h: usize) -> usize {
        self.theta[x][h]
    }

    /// Text export with sections `f:`, `sigma:`, `theta:`.
    pub fn export(&self) -> String {
        let s = &self.transversal;
        let g = s.group();
        let h = s.subgroup().members();
        let sn = |i: usize| g.name(s.chosen[i]);
        let mut out = String::from("f:\n");
        for x in 0..s.len() {
            for y in 0..s.len() {
                let _ = writeln!(out, "{} {} -> {}", sn(x), sn(y), g.name(self.f[x][y]));
            }
        }
        out.push_str("sigma:\n");
        for x in 0..s.len() {
            for (k, &hk) in h.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "{} {} -> {}",
                    sn(x),
                    g.name(hk),
                    g.name(self.sigma[x][k])
                );
            }
        }
        out.push_str("theta:\n");
        for x in 0..s.len() {
            for (k, &hk) in h.iter().enumerate() {
                let _ = writeln!(out, "{} {} -> {}", sn(x), g.name(hk), sn(self.theta[x][k]));
            }
        }
        out
    }
}

/// Extracts `(f, σ, θ)` and checks that every `f` and `σ` value lies in `H`
/// and that both decompositions multiply back to the original products.
pub fn c_groupoid<'g>(s: &Transversal<'g>) -> Result<CGroupoidData<'g>, TransversalError> {
    let g = s.group();
    let h = s.subgroup();
    let m = s.len();
    let mut f = vec![vec![0; m]; m];
    for (x, row) in f.iter_mut().enumerate() {
        for (y, slot) in row.iter_mut().enumerate() {
            let (gx, gy) = (s.chosen[x], s.chosen[y]);
            let p = g.mul(gx, gy);
            let rep = s.chosen[s.project(p)];
            let fx = g.mul(p, g.inv(rep));
            if !h.contains(fx) || g.mul(fx, rep) != p {
                return Err(TransversalError::Decomposition {
                    x: gx,
                    y: gy,
                    residue: fx,
                });
            }
            *slot = fx;
        }
    }
    let mut sigma = vec![vec![0; h.order()]; m];
    let mut theta = vec![vec![0; h.order()]; m];
    for x in 0..m {
        for (k, &hk) in h.members().iter().enumerate() {
            let gx = s.chosen[x];
            let p = g.mul(gx, hk);
            let t = s.project(p);
            let sg = g.mul(p, g.inv(s.chosen[t]));
            if !h.contains(sg) || g.mul(sg, s.chosen[t]) != p {
                return Err(TransversalError::Decomposition {
                    x: gx,
                    y: hk,
                    residue: sg,
                });
            }
            sigma[x][k] = sg;
            theta[x][k] = t;
        }
    }
    Ok(CGroupoidData {
        transversal: s.clone(),
        f,
        sigma,
        theta,
    })
}

/// Failures of `θ(θ(x, h), h') = θ(x, hh')` and `θ(x, 1) = x`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ActionReport {
    pub checked: usize,
    /// `(x, h, h')` as (transversal index, member position, member position);
    /// `h' = None` marks a failed unit law.
    pub failures: Vec<(usize, usize, Option<usize>)>,
}

impl ActionReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn theta_action_check(data: &CGroupoidData<'_>) -> ActionReport {
    let s = &data.transversal;
    let h = s.subgroup();
    let g = s.group();
    let one = h
        .position(g.identity())
        .expect("subgroup contains the identity");
    let mut report = ActionReport::default();
    for x in 0..s.len() {
        report.checked += 1;
        if data.theta(x, one) != x {
            report.failures.push((x, one, None));
        }
        for a in 0..h.order() {
            for b in 0..h.order() {
                report.checked += 1;
                let ab = h
                    .position(g.mul(h.members()[a], h.members()[b]))
                    .expect("subgroup is closed");
                if data.theta(data.theta(x, a), b) != data.theta(x, ab) {
                    report.failures.push((x, a, Some(b)));
                }
            }
        }
    }
    report
}

/// Checks `x·y = f(x, y)·(x ∘ y)` and `x·h = σ(x, h)·θ(x, h)` for every pair,
/// returning the number of failures.
pub fn reconstruction_failures(data: &CGroupoidData<'_>, induced: &RightLoopTable) -> usize {
    let s = &data.transversal;
    let g = s.group();
    let mut failures = 0;
    for x in 0..s.len() {
        for y in 0..s.len() {
            let lhs = g.mul(s.chosen[x], s.chosen[y]);
            let rhs = g.mul(data.f(x, y), s.chosen[induced.op(x, y)]);
            failures += usize::from(lhs != rhs);
        }
        for (k, &hk) in s.subgroup().members().iter().enumerate() {
            let lhs = g.mul(s.chosen[x], hk);
            let rhs = g.mul(data.sigma(x, k), s.chosen[data.theta(x, k)]);
            failures += usize::from(lhs != rhs);
        }
    }
    failures
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::table::validate;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_loop(&corpus::symmetric3()).unwrap()
    }

    fn idx(g: &FiniteGroup, name: &str) -> usize {
        g.index_of(name).unwrap()
    }

    #[test]
    fn rejects_non_groups() {
        assert!(matches!(
            FiniteGroup::from_loop(&corpus::loop5()),
            Err(TransversalError::NotAGroup(_))
        ));
    }

    #[test]
    fn closure() {
        let g = s3();
        assert_eq!(subgroup_closure(&g, []).unwrap().members(), &[0]);
        assert_eq!(subgroup_closure(&g, [idx(&g, "s1")]).unwrap().order(), 2);
        assert_eq!(subgroup_closure(&g, [idx(&g, "r1")]).unwrap().order(), 3);
        assert_eq!(
            subgroup_closure(&g, [idx(&g, "r1"), idx(&g, "s0")])
                .unwrap()
                .order(),
            6
        );
        assert!(matches!(
            subgroup_closure(&g, [17]),
            Err(TransversalError::NotAnElement(17))
        ));
    }

    #[test]
    fn subgroup_membership_is_checked() {
        let g = s3();
        assert!(Subgroup::new(&g, [0, idx(&g, "r1"), idx(&g, "r2")]).is_ok());
        assert!(matches!(
            Subgroup::new(&g, [0, idx(&g, "r1")]),
            Err(TransversalError::NotClosed { .. })
        ));
    }

    #[test]
    fn coset_shapes() {
        let g = s3();
        let whole = subgroup_closure(&g, 0..6).unwrap();
        assert_eq!(right_cosets(&whole).len(), 1);
        for (gen, count, size) in [("s0", 3, 2), ("r1", 2, 3)] {
            let h = subgroup_closure(&g, [idx(&g, gen)]).unwrap();
            let part = right_cosets(&h);
            assert_eq!(part.len(), count);
            assert!(part.cosets().iter().all(|c| c.len() == size));
            assert_eq!(part.cosets()[0], h.members());
            let mut all: Vec<usize> = part.cosets().concat();
            all.sort();
            assert_eq!(all, (0..6).collect::<Vec<_>>());
            // each coset really is Hx
            for c in part.cosets() {
                for &x in c {
                    let mut hx: Vec<usize> = h.members().iter().map(|&m| g.mul(m, x)).collect();
                    hx.sort();
                    assert_eq!(&hx, c);
                }
            }
        }
    }

    /// Brute-force count: subsets of G that contain 1 and meet each coset once.
    fn brute_force_nrt_count(g: &FiniteGroup, h: &Subgroup<'_>) -> usize {
        let n = g.order();
        (0u32..(1 << n))
            .filter(|mask| {
                let set: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
                if !set.contains(&g.identity()) {
                    return false;
                }
                // pairwise in different cosets: x y^-1 ∉ H
                let distinct = set.iter().all(|&x| {
                    set.iter()
                        .all(|&y| x == y || !h.contains(g.mul(x, g.inv(y))))
                });
                distinct && set.len() * h.order() == n
            })
            .count()
    }

    #[test]
    fn nrt_counts_match_brute_force() {
        let g = s3();
        let whole = subgroup_closure(&g, 0..6).unwrap();
        let part = right_cosets(&whole);
        let all: Vec<_> = enumerate_nrts(&whole, &part).collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].chosen(), &[0]);
        for (gen, expect) in [("s0", 4), ("r1", 3)] {
            let h = subgroup_closure(&g, [idx(&g, gen)]).unwrap();
            let part = right_cosets(&h);
            assert_eq!(brute_force_nrt_count(&g, &h), expect);
            assert_eq!(enumerate_nrts(&h, &part).count(), expect);
            assert_eq!(nrt_count(&h, &part), expect as u128);
        }
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let g = s3();
        let h = subgroup_closure(&g, [idx(&g, "s0")]).unwrap();
        let part = right_cosets(&h);
        let list: Vec<Vec<usize>> = enumerate_nrts(&h, &part)
            .map(|t| t.chosen().to_vec())
            .collect();
        let mut sorted = list.clone();
        sorted.sort();
        assert_eq!(list, sorted);
    }

    #[test]
    fn subgroup_transversal_induces_its_own_group() {
        let g = s3();
        let h = subgroup_closure(&g, [idx(&g, "s0")]).unwrap();
        let part = right_cosets(&h);
        let rot = [0, idx(&g, "r1"), idx(&g, "r2")];
        let s = Transversal::from_elements(&h, &part, rot).unwrap();
        let induced = induced_operation(&s);
        // brute force Hxy ∩ S over all 9 pairs
        for x in 0..3 {
            for y in 0..3 {
                let p = g.mul(s.chosen()[x], s.chosen()[y]);
                let hits: Vec<usize> = (0..3)
                    .filter(|&z| h.members().iter().any(|&m| g.mul(m, s.chosen()[z]) == p))
                    .collect();
                assert_eq!(hits, vec![induced.op(x, y)]);
                assert_eq!(s.chosen()[induced.op(x, y)], p);
            }
        }
        assert!(validate(induced.table(), 0, LoopKind::Group)
            .unwrap()
            .is_valid());
        let data = c_groupoid(&s).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(data.f(x, y), g.identity());
            }
        }
    }

    #[test]
    fn transposition_transversal() {
        let g = s3();
        let h = subgroup_closure(&g, [idx(&g, "s0")]).unwrap();
        let part = right_cosets(&h);
        let mut nontrivial_f = 0;
        for s in enumerate_nrts(&h, &part) {
            let induced = induced_operation(&s);
            assert!(validate(induced.table(), 0, LoopKind::RightLoop)
                .unwrap()
                .is_valid());
            for y in 0..s.len() {
                assert_eq!(induced.op(0, y), y);
            }
            let data = c_groupoid(&s).unwrap();
            assert_eq!(reconstruction_failures(&data, &induced), 0);
            assert!(theta_action_check(&data).holds());
            let one = h.position(g.identity()).unwrap();
            for x in 0..s.len() {
                assert_eq!(data.theta(x, one), x);
                assert_eq!(data.f(0, x), g.identity());
            }
            let is_subgroup = Subgroup::new(&g, s.chosen().iter().copied()).is_ok();
            let any_f = (0..s.len()).any(|x| (0..s.len()).any(|y| data.f(x, y) != g.identity()));
            assert_eq!(any_f, !is_subgroup);
            nontrivial_f += usize::from(any_f);
        }
        assert!(nontrivial_f > 0);
    }

    #[test]
    fn transversal_construction_errors() {
        let g = s3();
        let h = subgroup_closure(&g, [idx(&g, "r1")]).unwrap();
        let part = right_cosets(&h);
        let (s0, s1) = (idx(&g, "s0"), idx(&g, "s1"));
        assert!(matches!(
            Transversal::from_elements(&h, &part, [0, s0, s1]),
            Err(TransversalError::SameCoset { .. })
        ));
        assert!(matches!(
            Transversal::from_elements(&h, &part, [s0]),
            Err(TransversalError::NotNormalized)
        ));
        assert!(matches!(
            Transversal::from_elements(&h, &part, [0]),
            Err(TransversalError::MissingCoset(1))
        ));
        assert!(matches!(
            Transversal::from_choices(&h, &part, [(1, idx(&g, "r1"))]),
            Err(TransversalError::WrongCoset { .. })
        ));
        assert!(matches!(
            Transversal::from_choices(&h, &part, [(4, s0)]),
            Err(TransversalError::CosetOutOfRange { .. })
        ));
        let t = Transversal::from_choices(&h, &part, [(1, s1)]).unwrap();
        assert_eq!(t.chosen(), &[0, s1]);
    }

    #[test]
    fn export_format() {
        let g = s3();
        let h = subgroup_closure(&g, [idx(&g, "r1")]).unwrap();
        let part = right_cosets(&h);
        let s = Transversal::from_elements(&h, &part, [0, idx(&g, "s0")]).unwrap();
        let text = c_groupoid(&s).unwrap().export();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "f:");
        assert_eq!(lines[1], "e e -> e");
        // s0 s0 = e, and e lies in S, so f(s0, s0) = e
        assert_eq!(lines[4], "s0 s0 -> e");
        assert_eq!(lines[5], "sigma:");
        assert_eq!(lines.len(), 1 + 4 + 1 + 6 + 1 + 6);
    }
}
