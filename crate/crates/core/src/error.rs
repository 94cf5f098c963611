//! Error type shared by every evaluator in the crate.

use core::fmt;

/// Everything that can go wrong when evaluating or verifying.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Parameter outside its admissible range (e.g. `b` not in (0,1)).
    Domain(&'static str),
    /// Evaluation requested within the near-pole guard of the lattice
    /// `-nb - m/b`; callers that want the singular behaviour should use
    /// the residue data instead.
    PoleHit { re: f64, im: f64 },
    /// Argument outside the strip where the defining integral converges.
    StripViolation,
    /// Argument on the branch cut of the principal logarithm.
    BranchCut,
    /// Adaptive quadrature exhausted its subdivision budget.
    NonConvergence { err_estimate: f64 },
    /// Contour violates its invariants (overlapping indentations, empty
    /// window, centers outside the window).
    BadContour(&'static str),
    /// `Re(s)` outside the strip of absolute convergence of a Mellin
    /// transform.
    OutOfStrip,
    /// Identity parameters violate the stated convergence window.
    ConvergenceViolation(&'static str),
    /// No horizontal line separates the ascending and descending pole
    /// strings of an integrand.
    PinchedContour,
    /// Exact pairing requested beyond the combinatorial degree guard.
    DegreeLimit,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::PoleHit { re, im } => {
                write!(f, "pole hit near z = {re} + {im}i")
            }
            Error::StripViolation => write!(f, "argument outside the integral's strip"),
            Error::BranchCut => write!(f, "argument on the branch cut (-inf, 0]"),
            Error::NonConvergence { err_estimate } => {
                write!(f, "quadrature did not converge (err ~ {err_estimate:.3e})")
            }
            Error::BadContour(msg) => write!(f, "bad contour: {msg}"),
            Error::OutOfStrip => write!(f, "Re(s) outside the Mellin strip"),
            Error::ConvergenceViolation(msg) => {
                write!(f, "convergence condition violated: {msg}")
            }
            Error::PinchedContour => write!(f, "pole strings pinch the contour"),
            Error::DegreeLimit => write!(f, "monomial degree beyond the exact-pairing guard"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
