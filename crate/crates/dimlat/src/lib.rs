//! Exact dimension arithmetic for von Neumann algebras with finite atomic
//! center.
//!
//! An algebra is described by a finite list of factor atoms, each carrying a
//! type tag (`I_fin(n)`, `I_inf(κ)`, `II_1`, `II_inf(κ)`, `III(κ)`) and, for
//! properly infinite types, a homogeneity cardinal. Murray–von Neumann
//! equivalence classes of projections (and, more generally, classes of
//! positive elements) are represented by their dimension values: one point of
//! the chain `[0, ∞) ∩ ℚ ∪ {ℵ₀, ℵ₁, …}` per central atom. On top of that the
//! crate provides the ordered-monoid operations, suprema and infima of
//! arbitrary described families via the slice decomposition of formal sums,
//! closure and separation predicates for the quotient operator topology, a
//! brute-force finite-dimensional oracle, and a small script language
//! (`dimlat run`, `dimlat check`, `dimlat selftest`).

pub mod algebra;
pub mod chainset;
pub mod cli;
pub mod complattice;
pub mod dimfun;
pub mod error;
pub mod extval;
pub mod fdoracle;
pub mod qot;
pub mod selftest;

pub use algebra::{AlgebraDesc, Amplification, AtomType, CentralPositive, CentralProjection};
pub use chainset::{ChainSet, Interval};
pub use complattice::FamilySpec;
pub use dimfun::{DimElement, FormalSum, SliceIx, TraceValue};
pub use error::{Error, Result};
pub use extval::{max_aleph, set_max_aleph, ExtValue, DEFAULT_MAX_ALEPH};
pub use fdoracle::{RankTuple, Shape};
pub use qot::ClassSetDescriptor;
