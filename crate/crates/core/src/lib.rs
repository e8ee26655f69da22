//! Numerical toolkit for the two-parameter family of log-quotient maps
//!
//! ```text
//! psi(z) = log((1 + A z) / (1 + B z)) / (A - B)
//! ```
//!
//! with either A = alpha, B = -alpha (symmetric) or A = alpha e^{i gamma},
//! B = alpha e^{-i gamma} (conjugate pair), alpha in (0,1], gamma in (0, pi/2].
//!
//! The crate computes the image-domain geometry of psi (ellipse-like regions
//! degenerating to strips at alpha = 1), real/imaginary part envelopes on
//! circles, the associated extremal function and its growth/covering bounds,
//! and the sharp radii at which Booth-lemniscate and cissoid starlike classes
//! keep their values inside the psi image domain. Every closed form is
//! cross-checked against independent brute-force oracles (root bracketing,
//! adaptive quadrature, circle extrema, polygon containment).
//!
//! Start with [`complexfn::PsiParams`], then the per-topic modules:
//! [`complexfn`], [`geometry`], [`bounds`], [`radii`], [`oracle`], [`verify`].

pub mod bounds;
pub mod cli;
pub mod complexfn;
pub mod geometry;
pub mod oracle;
pub mod radii;
pub mod verify;

pub use complexfn::{Mode, PsiParams};

/// Errors shared by all modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Evaluation exactly at a logarithmic branch point (alpha = 1 only).
    #[error("branch point: 1+Az or 1+Bz vanishes at z = {re}+{im}i")]
    BranchPoint { re: f64, im: f64 },
    /// Input outside the closed unit disk.
    #[error("|z| = {modulus} lies outside the closed unit disk")]
    OutsideDisk { modulus: f64 },
    /// Dilogarithm argument on the principal branch cut [1, inf).
    #[error("argument {x} lies on the branch cut [1, inf)")]
    BranchCut { x: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// Root bracketing failed: no sign change over the interval.
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {flo:e}, f(hi) = {fhi:e}")]
    NoBracket { lo: f64, hi: f64, flo: f64, fhi: f64 },
    /// Adaptive quadrature could not reach the requested tolerance.
    #[error("accuracy target {target:e} not reached (error estimate {estimate:e})")]
    Accuracy { target: f64, estimate: f64 },
    /// Containment margin failed the monotone-in-radius pre-check.
    #[error("containment margin is not monotone in r near r = {r}")]
    NonMonotone { r: f64 },
    #[error("degenerate polygon with {0} vertices")]
    DegeneratePolygon(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
