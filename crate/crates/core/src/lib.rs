//! Right loops given by Cayley tables and the constructions around them:
//!
//! - [`table`]: validation, left and right division, translations
//! - [`twist`]: the B-twist `x ∘' y = y ∘ η(x)` for `y ∈ B`
//! - [`transversal`]: normalized right transversals, the induced right loop
//!   and the maps `f`, `σ`, `θ`
//! - [`affine`]: the infinite family `ℤ^B` and the infinite dihedral group,
//!   with right translations as affine maps over `BigInt`
//! - [`analysis`]: property checks, the word `α`, supports, right
//!   multiplication groups and finite-support witness search
//! - [`looptab`]: the LOOPTAB v1 text format
//! - [`cli`]: the `rightloop` command line
//!
//! Permutations compose as functions: `f.compose(&g)` applies `g` first.

pub mod affine;
pub mod analysis;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod looptab;
pub mod perm;
pub mod table;
pub mod transversal;
pub mod twist;

pub use error::{
    AnalysisError, LoopError, ParseError, PermutationError, TableError, TransversalError,
    TwistError,
};
pub use perm::Permutation;
pub use table::{CayleyTable, LoopKind, RightLoopTable};
