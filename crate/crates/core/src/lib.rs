//! Decision engines for Frobenius splitting, F-regularity, and diagonal splitting of varieties
//! with diagonalizable group actions in characteristic `p`.

pub mod error;
pub mod fppoly;
pub mod lattice;
pub mod linalg;
pub mod pairs;
pub mod toricpairs;
pub mod tvb;
pub mod verdict;

pub use error::{Error, Result};
pub use fppoly::{FpElem, FpPoly, Monomial, Prime, RationalPoly};
pub use lattice::{Fan, HPolytope, ResidueCoverage};
pub use toricpairs::{BranchDatum, CoverFlags, ToricAmbient};
pub use tvb::{QuotientDescriptor, Subspace, TwoStepBundle};
pub use verdict::{Certificate, Decision, SplitVerdicts, Verdict};
