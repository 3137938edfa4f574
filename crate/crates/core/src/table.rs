//! Finite magmas as Cayley tables, right-loop validation, divisions and
//! translation maps.
//!
//! Entries are stored so that `get(r, c)` is `r ∘ c`. Right translations are
//! therefore columns and left translations are rows.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{LoopError, TableError};
use crate::perm::Permutation;

/// Element names are tokens over `[A-Za-z0-9_+-]`.
pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || matches!(b, b'_' | b'+' | b'-'))
}

/// An `n × n` table over named elements `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    names: Vec<String>,
    entries: Vec<usize>,
    lookup: HashMap<String, usize>,
}

impl CayleyTable {
    pub fn new(names: Vec<String>, rows: Vec<Vec<usize>>) -> Result<Self, TableError> {
        let n = rows.len();
        if n == 0 {
            return Err(TableError::Empty);
        }
        if names.len() != n {
            return Err(TableError::NameCount {
                names: names.len(),
                rows: n,
            });
        }
        let mut entries = Vec::with_capacity(n * n);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(TableError::NotSquare {
                    row: r,
                    len: row.len(),
                    expected: n,
                });
            }
            for (c, v) in row.into_iter().enumerate() {
                if v >= n {
                    return Err(TableError::IndexOutOfRange {
                        row: r,
                        col: c,
                        value: v,
                        order: n,
                    });
                }
                entries.push(v);
            }
        }
        let lookup = build_lookup(&names)?;
        Ok(CayleyTable {
            names,
            entries,
            lookup,
        })
    }

    /// Builds a table by evaluating `op(r, c)` for every cell.
    pub fn from_fn(
        names: Vec<String>,
        op: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, TableError> {
        let n = names.len();
        let rows = (0..n).map(|r| (0..n).map(|c| op(r, c)).collect()).collect();
        Self::new(names, rows)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> usize {
        self.entries[r * self.order() + c]
    }

    pub fn row(&self, r: usize) -> &[usize] {
        let n = self.order();
        &self.entries[r * n..(r + 1) * n]
    }

    pub fn column(&self, c: usize) -> Vec<usize> {
        (0..self.order()).map(|r| self.get(r, c)).collect()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.lookup.get(name).copied()
    }

    /// Relabels element `i` as `perm[i]`, keeping names attached to elements.
    pub fn relabel(&self, perm: &Permutation) -> CayleyTable {
        let n = self.order();
        assert_eq!(perm.len(), n);
        let inv = perm.inverse();
        let mut names = vec![String::new(); n];
        for i in 0..n {
            names[perm.apply(i)] = self.names[i].clone();
        }
        let rows = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| perm.apply(self.get(inv.apply(r), inv.apply(c))))
                    .collect()
            })
            .collect();
        CayleyTable::new(names, rows).expect("relabelling preserves well-formedness")
    }
}

fn build_lookup(names: &[String]) -> Result<HashMap<String, usize>, TableError> {
    let mut lookup = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if !is_valid_name(name) {
            return Err(TableError::InvalidName(name.clone()));
        }
        if lookup.insert(name.clone(), i).is_some() {
            return Err(TableError::DuplicateName(name.clone()));
        }
    }
    Ok(lookup)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LoopKind {
    RightLoop,
    Loop,
    Group,
}

impl fmt::Display for LoopKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LoopKind::RightLoop => "right-loop",
            LoopKind::Loop => "loop",
            LoopKind::Group => "group",
        })
    }
}

impl FromStr for LoopKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "right-loop" => Ok(LoopKind::RightLoop),
            "loop" => Ok(LoopKind::Loop),
            "group" => Ok(LoopKind::Group),
            other => Err(format!("unknown kind {other:?}")),
        }
    }
}

/// A single failed axiom together with the elements that witness it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `1 ∘ x = got ≠ x`
    LeftIdentity { x: usize, got: usize },
    /// `x ∘ 1 = got ≠ x`
    RightIdentity { x: usize, got: usize },
    /// `rows.0 ∘ column = rows.1 ∘ column = value`
    ColumnCollision {
        column: usize,
        rows: (usize, usize),
        value: usize,
    },
    /// `row ∘ columns.0 = row ∘ columns.1 = value`
    RowCollision {
        row: usize,
        columns: (usize, usize),
        value: usize,
    },
    /// `(x ∘ y) ∘ z ≠ x ∘ (y ∘ z)`
    NonAssociative { x: usize, y: usize, z: usize },
    /// no `u` with `x ∘ u = u ∘ x = 1`
    NoInverse { x: usize },
}

impl Violation {
    pub fn describe(&self, t: &CayleyTable) -> String {
        let n = |i: usize| t.name(i);
        match *self {
            Violation::LeftIdentity { x, got } => format!("left-identity {} -> {}", n(x), n(got)),
            Violation::RightIdentity { x, got } => {
                format!("right-identity {} -> {}", n(x), n(got))
            }
            Violation::ColumnCollision {
                column,
                rows: (a, b),
                value,
            } => format!(
                "column {}: rows {},{} -> {}",
                n(column),
                n(a),
                n(b),
                n(value)
            ),
            Violation::RowCollision {
                row,
                columns: (a, b),
                value,
            } => format!("row {}: columns {},{} -> {}", n(row), n(a), n(b), n(value)),
            Violation::NonAssociative { x, y, z } => {
                format!("associativity {},{},{}", n(x), n(y), n(z))
            }
            Violation::NoInverse { x } => format!("inverse {}", n(x)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub kind: LoopKind,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// One line: `<kind> holds` or `<kind> fails [w1; w2; ...]`.
    pub fn to_line(&self, t: &CayleyTable) -> String {
        if self.is_valid() {
            format!("{} holds", self.kind)
        } else {
            let ws: Vec<String> = self.violations.iter().map(|v| v.describe(t)).collect();
            format!("{} fails [{}]", self.kind, ws.join("; "))
        }
    }
}

fn collisions(values: impl Iterator<Item = usize>, n: usize) -> Vec<(usize, usize, usize)> {
    let mut first = vec![usize::MAX; n];
    let mut out = Vec::new();
    for (i, v) in values.enumerate() {
        if first[v] == usize::MAX {
            first[v] = i;
        } else {
            out.push((first[v], i, v));
        }
    }
    out
}

/// Checks the axioms of `kind` exhaustively and reports every violation.
pub fn validate(
    table: &CayleyTable,
    identity: usize,
    kind: LoopKind,
) -> Result<ValidationReport, TableError> {
    let n = table.order();
    if identity >= n {
        return Err(TableError::IdentityOutOfRange { identity, order: n });
    }
    let mut violations = Vec::new();
    for x in 0..n {
        let got = table.get(identity, x);
        if got != x {
            violations.push(Violation::LeftIdentity { x, got });
        }
        let got = table.get(x, identity);
        if got != x {
            violations.push(Violation::RightIdentity { x, got });
        }
    }
    for c in 0..n {
        for (a, b, value) in collisions((0..n).map(|r| table.get(r, c)), n) {
            violations.push(Violation::ColumnCollision {
                column: c,
                rows: (a, b),
                value,
            });
        }
    }
    if matches!(kind, LoopKind::Loop | LoopKind::Group) {
        for r in 0..n {
            for (a, b, value) in collisions(table.row(r).iter().copied(), n) {
                violations.push(Violation::RowCollision {
                    row: r,
                    columns: (a, b),
                    value,
                });
            }
        }
    }
    if kind == LoopKind::Group {
        for x in 0..n {
            for y in 0..n {
                let xy = table.get(x, y);
                for z in 0..n {
                    if table.get(xy, z) != table.get(x, table.get(y, z)) {
                        violations.push(Violation::NonAssociative { x, y, z });
                    }
                }
            }
        }
        for x in 0..n {
            let has_inverse =
                (0..n).any(|u| table.get(x, u) == identity && table.get(u, x) == identity);
            if !has_inverse {
                violations.push(Violation::NoInverse { x });
            }
        }
    }
    Ok(ValidationReport { kind, violations })
}

/// Left translation `L_u`, which need not be a bijection in a right loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeftTranslation {
    Bijective(Permutation),
    NonBijective {
        images: Vec<usize>,
        collision: (usize, usize),
    },
}

impl LeftTranslation {
    pub fn permutation(&self) -> Option<&Permutation> {
        match self {
            LeftTranslation::Bijective(p) => Some(p),
            LeftTranslation::NonBijective { .. } => None,
        }
    }

    pub fn images(&self) -> &[usize] {
        match self {
            LeftTranslation::Bijective(p) => p.images(),
            LeftTranslation::NonBijective { images, .. } => images,
        }
    }
}

/// A Cayley table known to satisfy the right-loop axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightLoopTable {
    table: CayleyTable,
    identity: usize,
    // right_div[x * n + y] = y / x
    right_div: Vec<usize>,
}

impl RightLoopTable {
    pub fn new(table: CayleyTable, identity: usize) -> Result<Self, LoopError> {
        let report = validate(&table, identity, LoopKind::RightLoop)?;
        if !report.is_valid() {
            return Err(LoopError::NotRightLoop(report));
        }
        let n = table.order();
        let mut right_div = vec![0; n * n];
        for x in 0..n {
            for q in 0..n {
                right_div[x * n + table.get(q, x)] = q;
            }
        }
        Ok(RightLoopTable {
            table,
            identity,
            right_div,
        })
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn into_table(self) -> CayleyTable {
        self.table
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn name(&self, i: usize) -> &str {
        self.table.name(i)
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table.get(x, y)
    }

    /// `y / x`: the unique `q` with `q ∘ x = y`.
    #[inline]
    pub fn right_divide(&self, y: usize, x: usize) -> usize {
        self.right_div[x * self.order() + y]
    }

    /// `x \ y`: the unique `q` with `x ∘ q = y`, when the row of `x` is a bijection.
    pub fn left_divide(&self, x: usize, y: usize) -> Result<usize, LoopError> {
        let row = self.table.row(x);
        let mut found = None;
        let mut hit = vec![false; row.len()];
        for (q, &v) in row.iter().enumerate() {
            if hit[v] {
                return Err(LoopError::NotLeftSolvable(x));
            }
            hit[v] = true;
            if v == y {
                found = Some(q);
            }
        }
        found.ok_or(LoopError::NotLeftSolvable(x))
    }

    /// `R_u : x ↦ x ∘ u`, the column of `u`.
    pub fn right_translation(&self, u: usize) -> Permutation {
        Permutation::from_images_unchecked(self.table.column(u))
    }

    /// `L_u : x ↦ u ∘ x`, the row of `u`.
    pub fn left_translation(&self, u: usize) -> LeftTranslation {
        let images = self.table.row(u).to_vec();
        match collisions(images.iter().copied(), images.len()).first() {
            None => LeftTranslation::Bijective(Permutation::from_images_unchecked(images)),
            Some(&(a, b, _)) => LeftTranslation::NonBijective {
                images,
                collision: (a, b),
            },
        }
    }

    pub fn is_row_bijective(&self, x: usize) -> bool {
        collisions(self.table.row(x).iter().copied(), self.order()).is_empty()
    }

    /// First element whose row is not a bijection, if any.
    pub fn first_non_bijective_row(&self) -> Option<usize> {
        (0..self.order()).find(|&x| !self.is_row_bijective(x))
    }

    pub fn is_loop(&self) -> bool {
        self.first_non_bijective_row().is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    // The twisted Z6 with B = {2}, eta = negation, written out directly.
    fn twisted_z6_by_hand() -> CayleyTable {
        CayleyTable::from_fn(
            names(6),
            |r, c| if c == 2 { (8 - r) % 6 } else { (r + c) % 6 },
        )
        .unwrap()
    }

    #[test]
    fn structural_errors_are_distinct() {
        assert_eq!(
            CayleyTable::new(names(2), vec![vec![0, 1], vec![1]]),
            Err(TableError::NotSquare {
                row: 1,
                len: 1,
                expected: 2
            })
        );
        assert!(matches!(
            CayleyTable::new(names(2), vec![vec![0, 1], vec![1, 2]]),
            Err(TableError::IndexOutOfRange {
                row: 1,
                col: 1,
                value: 2,
                order: 2
            })
        ));
        assert!(matches!(
            CayleyTable::new(vec!["a".into(), "a".into()], vec![vec![0, 1], vec![1, 0]]),
            Err(TableError::DuplicateName(_))
        ));
        assert!(matches!(
            CayleyTable::new(vec!["a b".into()], vec![vec![0]]),
            Err(TableError::InvalidName(_))
        ));
        let z2 = corpus::cyclic(2);
        assert!(matches!(
            validate(z2.table(), 5, LoopKind::Group),
            Err(TableError::IdentityOutOfRange { .. })
        ));
    }

    #[test]
    fn z3_is_a_group() {
        let z3 = corpus::cyclic(3);
        let rep = validate(z3.table(), 0, LoopKind::Group).unwrap();
        assert!(rep.is_valid());
        assert_eq!(rep.to_line(z3.table()), "group holds");
    }

    #[test]
    fn repeated_column_entry_is_witnessed() {
        // column 1 has entry 1 in rows 0 and 2
        let t =
            CayleyTable::new(names(3), vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 1]]).unwrap();
        let rep = validate(&t, 0, LoopKind::RightLoop).unwrap();
        assert!(!rep.is_valid());
        assert!(rep.violations.contains(&Violation::ColumnCollision {
            column: 1,
            rows: (0, 2),
            value: 1
        }));
    }

    #[test]
    fn twisted_z6_row_scan() {
        let t = twisted_z6_by_hand();
        assert!(validate(&t, 0, LoopKind::RightLoop).unwrap().is_valid());
        let rep = validate(&t, 0, LoopKind::Loop).unwrap();
        // Independent scan: row r is bijective iff its entries are distinct.
        let bad_rows: Vec<usize> = (0..6)
            .filter(|&r| {
                let mut v = t.row(r).to_vec();
                v.sort();
                v.dedup();
                v.len() != 6
            })
            .collect();
        assert_eq!(bad_rows, vec![1, 2, 4, 5]);
        let mut reported: Vec<usize> = rep
            .violations
            .iter()
            .filter_map(|v| match v {
                Violation::RowCollision { row, .. } => Some(*row),
                _ => None,
            })
            .collect();
        reported.dedup();
        assert_eq!(reported, bad_rows);
    }

    #[test]
    fn divisions() {
        let z6 = corpus::cyclic(6);
        assert_eq!(z6.right_divide(5, 2), 3);
        for x in 0..6 {
            assert_eq!(z6.right_divide(x, x), z6.identity());
        }
        let tw = RightLoopTable::new(twisted_z6_by_hand(), 0).unwrap();
        assert_eq!(tw.right_divide(5, 2), 3);
        assert_eq!(tw.op(3, 2), 5);
        assert_eq!(tw.left_divide(0, 4).unwrap(), 4);
        assert_eq!(tw.left_divide(1, 3), Err(LoopError::NotLeftSolvable(1)));
        assert_eq!(z6.left_divide(2, 1).unwrap(), 5);
    }

    #[test]
    fn translations() {
        let z6 = corpus::cyclic(6);
        assert!(z6.right_translation(0).is_identity());
        assert_eq!(z6.right_translation(2).images(), &[2, 3, 4, 5, 0, 1]);
        let tw = RightLoopTable::new(twisted_z6_by_hand(), 0).unwrap();
        let r2 = tw.right_translation(2);
        assert_eq!(r2.images(), &[2, 1, 0, 5, 4, 3]);
        assert!(r2.compose(&r2).is_identity());
        assert_eq!(r2.moved_points(), vec![0, 2, 3, 5]);
        assert!(matches!(
            tw.left_translation(1),
            LeftTranslation::NonBijective { .. }
        ));
        assert!(tw.left_translation(3).permutation().is_some());
    }

    #[test]
    fn right_loop_rejected_with_report() {
        let t = CayleyTable::new(names(2), vec![vec![0, 1], vec![1, 1]]).unwrap();
        match RightLoopTable::new(t, 0) {
            Err(LoopError::NotRightLoop(rep)) => assert!(!rep.violations.is_empty()),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn relabel_moves_identity_and_keeps_products() {
        let s3 = corpus::symmetric3();
        let p = Permutation::from_images(vec![3, 0, 1, 2, 5, 4]).unwrap();
        let t = s3.table().relabel(&p);
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(t.get(p.apply(x), p.apply(y)), p.apply(s3.op(x, y)));
            }
        }
        assert_eq!(t.name(3), s3.name(0));
    }
}
