//! Exact computations around singularities of Schubert varieties in
//! Grassmannians.
//!
//! The crate computes the Hilbert function of the tangent cone to a Schubert
//! variety `X(w)` in `G(d,n)` at a T-fixed point, and the multiplicity of the
//! point, by counting multisets of grid roots whose commuting chains stay
//! below `w` in the Bruhat order. Three further routes to the same numbers are
//! implemented so they can be cross-checked exactly:
//!
//! * counting standard monomials on `X(w)` localized at the identity cell,
//! * the Hilbert function of the monomial quotient by the initial ideal of the
//!   Plücker minors cutting out `X(w)` in the opposite cell (with a Buchberger
//!   verification that those minors are a Gröbner basis),
//! * a difference-equation recursion over the divisors of `X(w)`.
//!
//! At a general T-fixed point `tau` the multiset counts are conjectural; the
//! [`tangent_cone`] module checks them against an independent local-algebra
//! oracle built on truncated exact linear algebra.
//!
//! All arithmetic is exact: `BigInt` coefficients, `BigRational` row
//! reduction, no floating point.

pub mod bruhat;
pub mod goodsets;
pub mod groebner;
pub mod ideals;
pub mod plucker;
pub mod poly;
pub mod standard_monomials;
pub mod tangent_cone;

pub use bruhat::{CommutingChain, CosetElement, GrassmannShape, Root};
pub use goodsets::RootMultiset;
pub use poly::{Monomial, Polynomial};

/// Errors from validating constructors and resource-limited routines.
///
/// Shape mismatches between already-validated values are programmer errors and
/// panic instead of returning `Err`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid shape: need 1 <= d < n, got d={d}, n={n}")]
    InvalidShape { d: usize, n: usize },
    #[error("invalid element of I({d},{n}): {reason}")]
    InvalidElement { d: usize, n: usize, reason: String },
    #[error("invalid root for G({d},{n}): ({row},{col}) outside the {rows}x{cols} grid")]
    InvalidRoot {
        d: usize,
        n: usize,
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("invalid commuting chain: {0}")]
    InvalidChain(String),
    #[error("operation is undefined for the identity element")]
    IdentityInput,
    #[error("point {tau} does not lie on X({w}): tau must be <= w in the Bruhat order")]
    PointOutsideVariety { w: String, tau: String },
    #[error("monomial ideal generator {0} is not square-free")]
    NotSquareFree(String),
    #[error("enumeration exceeds the configured bound of {limit} items")]
    EnumerationLimit { limit: usize },
    #[error("local-algebra oracle limit exceeded: {0}")]
    OracleLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;
