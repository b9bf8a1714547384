//! Zeros of polynomials and of their derivatives near convex domains:
//! root solvers, zero counting, Cauchy-transform diagnostics and the
//! polynomial sequences used to probe asymptotic Gauss–Lucas behavior.

pub mod cli;
pub mod counting;
pub mod error;
pub mod figures;
pub mod geometry;
pub mod measures;
pub mod poly;
pub mod quadrature;
pub mod rootfind;
pub mod sequences;

pub use counting::{argument_principle_count, count_in, ratio_report, RatioReport, ZeroCount};
pub use error::{Error, Result};
pub use geometry::{convex_hull, ConvexDomain};
pub use measures::{AtomicMeasure, FactorSplit};
pub use poly::{CoefficientPolynomial, ComplexPoint, RootFactoredPolynomial};
pub use rootfind::{critical_points, solve, RootSolveResult};
pub use sequences::{GeneratedInstance, SequenceSpec};
