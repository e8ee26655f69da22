//! The map psi, its Taylor coefficients, the dilogarithm, the extremal
//! function, and the convexity test quantity.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::{Error, Result};

/// Which of the two admissible (A, B) configurations is in use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Mode {
    /// A = alpha, B = -alpha.
    Symmetric,
    /// A = alpha e^{i gamma}, B = alpha e^{-i gamma}.
    ConjugatePair,
}

/// Parameter pair (A, B) with its generating (alpha, gamma).
///
/// `gamma` is meaningful only in [`Mode::ConjugatePair`]; the symmetric
/// constructor stores 0 there.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct PsiParams {
    pub mode: Mode,
    pub alpha: f64,
    pub gamma: f64,
    #[serde(skip)]
    pub a: Complex64,
    #[serde(skip)]
    pub b: Complex64,
}

impl PsiParams {
    pub fn symmetric(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "alpha = {alpha} must lie in (0, 1]"
            )));
        }
        Ok(PsiParams {
            mode: Mode::Symmetric,
            alpha,
            gamma: 0.0,
            a: Complex64::new(alpha, 0.0),
            b: Complex64::new(-alpha, 0.0),
        })
    }

    pub fn conjugate_pair(alpha: f64, gamma: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "alpha = {alpha} must lie in (0, 1]"
            )));
        }
        if !(gamma > 0.0 && gamma <= PI / 2.0) {
            return Err(Error::InvalidParameter(format!(
                "gamma = {gamma} must lie in (0, pi/2]"
            )));
        }
        let a = Complex64::from_polar(alpha, gamma);
        Ok(PsiParams {
            mode: Mode::ConjugatePair,
            alpha,
            gamma,
            a,
            b: a.conj(),
        })
    }

    /// A - B: 2 alpha (symmetric) or 2 i alpha sin gamma (conjugate pair).
    pub(crate) fn a_minus_b(&self) -> Complex64 {
        self.a - self.b
    }
}

/// psi(z) = log((1+Az)/(1+Bz)) / (A-B), principal branch of the single
/// quotient. The quotient never meets the closed negative real axis for
/// |z| <= 1 away from the two branch points, so the branch is safe.
pub fn psi_eval(p: &PsiParams, z: Complex64) -> Result<Complex64> {
    let nz = z.norm_sqr();
    if nz > 1.0 + 4.0 * f64::EPSILON {
        return Err(Error::OutsideDisk { modulus: nz.sqrt() });
    }
    let num = Complex64::new(1.0, 0.0) + p.a * z;
    let den = Complex64::new(1.0, 0.0) + p.b * z;
    if num.norm_sqr() < 1e-28 || den.norm_sqr() < 1e-28 {
        return Err(Error::BranchPoint { re: z.re, im: z.im });
    }
    Ok((num / den).ln() / p.a_minus_b())
}

/// n-th Taylor coefficient magnitude C_n = (A^n - B^n) / (n (A - B)),
/// evaluated in cancellation-free real form. psi(z) = sum (-1)^{n+1} C_n z^n.
pub fn psi_coeff(p: &PsiParams, n: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter("coefficient index must be >= 1".into()));
    }
    let nf = n as f64;
    Ok(match p.mode {
        Mode::Symmetric => {
            if n % 2 == 0 {
                0.0
            } else {
                p.alpha.powi(n as i32 - 1) / nf
            }
        }
        // (A^n - B^n)/(n(A-B)) = alpha^{n-1} sin(n gamma) / (n sin gamma)
        Mode::ConjugatePair => {
            p.alpha.powi(n as i32 - 1) * (nf * p.gamma).sin() / (nf * p.gamma.sin())
        }
    })
}

// Bernoulli-number coefficients b_n = B_n / (n+1)! for the accelerated
// dilogarithm series sum b_n u^{n+1}; odd entries vanish except b_1.
const DILOG_B1: f64 = -0.25;
const DILOG_B_EVEN: [f64; 16] = [
    2.7777777777777778e-2,
    -2.7777777777777778e-4,
    4.7241118669690098262e-6,
    -9.1857730746619635509e-8,
    1.8978869988970999072e-9,
    -4.0647616451442255268e-11,
    8.9216910204564525552e-13,
    -1.9939295860721075687e-14,
    4.5189800296199181917e-16,
    -1.0356517612181247014e-17,
    2.3952186210261867457e-19,
    -5.5817858743250093363e-21,
    1.3091507554183212858e-22,
    -3.0874198024267402932e-24,
    7.3159756527022034204e-26,
    -1.7408456572340007410e-27,
];

fn dilog_direct_series(z: Complex64) -> Complex64 {
    let mut term = z;
    let mut sum = z;
    for n in 2u32..80 {
        term *= z;
        let add = term / ((n * n) as f64);
        sum += add;
        if add.norm_sqr() <= 1e-36 * sum.norm_sqr() {
            break;
        }
    }
    sum
}

// sum_{n>=0} b_n u^{n+1} = u + b_1 u^2 + u^3 (b_2 + b_4 u^2 + ...)
fn dilog_u_series(u: Complex64) -> Complex64 {
    let u2 = u * u;
    let mut h = Complex64::new(DILOG_B_EVEN[15], 0.0);
    for m in (0..15).rev() {
        h = h * u2 + DILOG_B_EVEN[m];
    }
    u + DILOG_B1 * u2 + u * u2 * h
}

/// Dilogarithm Li2(z), principal branch (cut along the real ray (1, inf)).
///
/// Direct series for |z| <= 1/2; otherwise the standard reflection and
/// inversion transformations route the argument into a region where the
/// Bernoulli-accelerated series in u = -log(1-.) converges fast.
pub fn dilog(z: Complex64) -> Result<Complex64> {
    let zeta2 = PI * PI / 6.0;
    if z.im == 0.0 && z.re > 1.0 {
        return Err(Error::BranchCut { x: z.re });
    }
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    if z == Complex64::new(1.0, 0.0) {
        return Ok(Complex64::new(zeta2, 0.0));
    }
    let nz = z.norm_sqr();
    if nz <= 0.25 {
        return Ok(dilog_direct_series(z));
    }
    let one = Complex64::new(1.0, 0.0);
    let (cy, u, sgn) = if z.re <= 0.5 {
        if nz <= 1.0 {
            (Complex64::new(0.0, 0.0), -(one - z).ln(), 1.0)
        } else {
            let l = (-z).ln();
            (-0.5 * l * l - zeta2, -(one - one / z).ln(), -1.0)
        }
    } else if nz <= 2.0 * z.re {
        (Complex64::new(zeta2, 0.0) - z.ln() * (one - z).ln(), -z.ln(), -1.0)
    } else {
        let l = (-z).ln();
        (-0.5 * l * l - zeta2, -(one - one / z).ln(), -1.0)
    };
    Ok(cy + sgn * dilog_u_series(u))
}

/// Extremal function f(z) = z exp((Li2(-Bz) - Li2(-Az)) / (A-B)):
/// the unique solution of z f'/f = 1 + psi(z) with f(0) = 0, f'(0) = 1.
pub fn extremal_eval(p: &PsiParams, z: Complex64) -> Result<Complex64> {
    let nz = z.norm_sqr();
    if nz > 1.0 + 4.0 * f64::EPSILON {
        return Err(Error::OutsideDisk { modulus: nz.sqrt() });
    }
    if z == Complex64::new(0.0, 0.0) {
        return Ok(z);
    }
    let d = (dilog(-p.b * z)? - dilog(-p.a * z)?) / p.a_minus_b();
    Ok(z * d.exp())
}

/// Re H(z) with H = 1 + z psi''/psi' = -1 + 1/(1+Az) + 1/(1+Bz).
/// Positive throughout |z| < 1 when alpha < 1: psi is convex univalent.
pub fn convexity_margin(p: &PsiParams, z: Complex64) -> f64 {
    let one = Complex64::new(1.0, 0.0);
    (-one + (one + p.a * z).inv() + (one + p.b * z).inv()).re
}
