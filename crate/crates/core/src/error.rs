use thiserror::Error;

use crate::table::ValidationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationError {
    #[error("image {image} of point {point} is outside 0..{len}")]
    OutOfRange {
        point: usize,
        image: usize,
        len: usize,
    },
    #[error("points {first} and {second} both map to {image}")]
    NotInjective {
        first: usize,
        second: usize,
        image: usize,
    },
}

/// Structural problems with a Cayley table, as opposed to axiom failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("table has no elements")]
    Empty,
    #[error("{names} element names for a table with {rows} rows")]
    NameCount { names: usize, rows: usize },
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry ({row}, {col}) = {value} is not below the order {order}")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("invalid element name {0:?}")]
    InvalidName(String),
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("identity index {identity} is not below the order {order}")]
    IdentityOutOfRange { identity: usize, order: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoopError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("not a right loop ({} violations)", .0.violations.len())]
    NotRightLoop(ValidationReport),
    #[error("row of element {0} is not a bijection; x \\ y is not defined there")]
    NotLeftSolvable(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected `looptab 1` or `grouptab 1`, found {found:?}")]
    BadHeader { line: usize, found: String },
    #[error("line {line}: expected a positive element count, found {found:?}")]
    BadOrder { line: usize, found: String },
    #[error("line {line}: expected {expected} names, found {found}")]
    WrongCount {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: unknown element name {name:?}")]
    UnknownName { line: usize, name: String },
    #[error("line {line}: {source}")]
    Table { line: usize, source: TableError },
    #[error("unexpected end of input: {0}")]
    UnexpectedEof(&'static str),
    #[error("line {line}: unexpected trailing content")]
    TrailingContent { line: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistError {
    #[error("the identity may not belong to B")]
    IdentityInB,
    #[error("eta must fix the identity, but sends it to {0}")]
    EtaMovesIdentity(usize),
    #[error("eta acts on {eta} points but the loop has {order}")]
    DegreeMismatch { eta: usize, order: usize },
    #[error("element {element} of B is not below the order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("the base is not a loop: row {0} is not a bijection")]
    NotALoop(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransversalError {
    #[error("table is not a group ({} violations)", .0.violations.len())]
    NotAGroup(ValidationReport),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("element {0} is not in the group")]
    NotAnElement(usize),
    #[error("the given set is not closed: {a} * {b} = {product} is missing")]
    NotClosed { a: usize, b: usize, product: usize },
    #[error("a normalized transversal must contain the identity")]
    NotNormalized,
    #[error("elements {first} and {second} lie in the same right coset")]
    SameCoset { first: usize, second: usize },
    #[error("right coset {0} has no representative")]
    MissingCoset(usize),
    #[error("coset index {index} out of range (there are {count} cosets)")]
    CosetOutOfRange { index: usize, count: usize },
    #[error("element {element} does not lie in coset {coset}")]
    WrongCoset { element: usize, coset: usize },
    #[error("decomposition of {x} * {y} leaves {residue} outside the subgroup")]
    Decomposition { x: usize, y: usize, residue: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error(transparent)]
    Twist(#[from] TwistError),
}
