//! Brute-force numerical oracles: bisection root finding, adaptive
//! Gauss-Kronrod quadrature, circle maximization, and a sampled
//! containment-radius search. These deliberately avoid the closed forms in
//! the rest of the crate so the two can be checked against each other.

use num_complex::Complex64;
use std::cell::Cell;
use std::f64::consts::PI;

use crate::geometry::{strip_margin, DomainVariant, ImageDomain, PolygonIndex};
use crate::{Error, Result};

/// Outcome of a bisection run on a sign-changing bracket.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct BracketedRoot {
    pub lo: f64,
    pub hi: f64,
    pub root: f64,
    pub residual: f64,
    pub iterations: u32,
}

/// Plain bisection. Requires f(lo) and f(hi) to have opposite signs (an
/// exact zero at either endpoint short-circuits); refuses otherwise.
pub fn find_root<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<BracketedRoot> {
    if !(lo < hi) || !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "bad bracket or tolerance: lo={lo} hi={hi} tol={tol}"
        )));
    }
    let flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(BracketedRoot { lo, hi, root: lo, residual: 0.0, iterations: 0 });
    }
    if fhi == 0.0 {
        return Ok(BracketedRoot { lo, hi, root: hi, residual: 0.0, iterations: 0 });
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::NoBracket { lo, hi, flo, fhi });
    }
    let (lo0, hi0) = (lo, hi);
    let (mut a, mut b, mut fa) = (lo, hi, flo);
    let mut iterations = 0u32;
    while b - a > tol && iterations < 200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break; // bracket is one ulp wide
        }
        let fm = f(mid);
        iterations += 1;
        if fm == 0.0 {
            a = mid;
            b = mid;
            break;
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    let root = 0.5 * (a + b);
    Ok(BracketedRoot { lo: lo0, hi: hi0, root, residual: f(root), iterations })
}

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule
// (Gauss nodes are XGK[1], XGK[3], XGK[5], XGK[7]).
const XGK: [f64; 8] = [
    0.9914553711208126,
    0.9491079123427585,
    0.8648644233597691,
    0.7415311855993944,
    0.5860872354676911,
    0.4058451513773972,
    0.2077849550078985,
    0.0,
];
const WGK: [f64; 8] = [
    0.0229353220105292,
    0.0630920926299786,
    0.1047900103222502,
    0.1406532597155259,
    0.1690047266392679,
    0.1903505780647854,
    0.2044329400752989,
    0.2094821410847278,
];
const WG: [f64; 4] = [
    0.1294849661688697,
    0.2797053914892766,
    0.3818300505051189,
    0.4179591836734694,
];

const MAX_DEPTH: u32 = 60;
const MAX_EVALS: u64 = 4_000_000;

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, evals: &Cell<u64>) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    evals.set(evals.get() + 15);
    let mut resg = WG[3] * fc;
    let mut resk = WGK[7] * fc;
    for j in 0..4 {
        let x = h * XGK[2 * j];
        let fsum = f(c - x) + f(c + x);
        resk += WGK[2 * j] * fsum;
    }
    for j in 0..3 {
        let x = h * XGK[2 * j + 1];
        let fsum = f(c - x) + f(c + x);
        resg += WG[j] * fsum;
        resk += WGK[2 * j + 1] * fsum;
    }
    (resk * h, (resk - resg).abs() * h.abs())
}

fn adapt<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    depth: u32,
    evals: &Cell<u64>,
) -> Result<f64> {
    let (val, err) = gk15(f, a, b, evals);
    if err <= tol || err <= f64::EPSILON * val.abs() {
        return Ok(val);
    }
    if depth >= MAX_DEPTH || evals.get() > MAX_EVALS {
        return Err(Error::Accuracy { target: tol, estimate: err });
    }
    let c = 0.5 * (a + b);
    // floor the per-panel tolerance at machine scale so that endpoint
    // singularities (whose panel error halves exactly as fast as a halved
    // tolerance) terminate instead of exhausting the depth budget
    let child = (0.5 * tol).max(1e-16);
    Ok(adapt(f, a, c, child, depth + 1, evals)? + adapt(f, c, b, child, depth + 1, evals)?)
}

/// Adaptive 15-point Gauss-Kronrod integration of f over [a, b]. Interval
/// endpoints are never evaluated, so integrable endpoint singularities
/// (log-type) are handled by subdivision alone.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if !a.is_finite() || !b.is_finite() || !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "bad integration request: a={a} b={b} tol={tol}"
        )));
    }
    if a == b {
        return Ok(0.0);
    }
    let evals = Cell::new(0u64);
    if a < b {
        adapt(&f, a, b, tol, 0, &evals)
    } else {
        Ok(-adapt(&f, b, a, tol, 0, &evals)?)
    }
}

const INVPHI: f64 = 0.618_033_988_749_894_9;

/// Maximum of g(theta) over the full circle: coarse grid argmax followed by
/// golden-section refinement between the bracketing neighbors. Returns
/// (theta in [0, 2 pi), value).
pub fn max_on_circle<G: Fn(f64) -> f64>(g: G, samples: usize) -> Result<(f64, f64)> {
    if samples < 64 {
        return Err(Error::InvalidParameter(format!(
            "samples = {samples} must be >= 64"
        )));
    }
    let step = 2.0 * PI / samples as f64;
    let mut best_j = 0usize;
    let mut best_v = f64::NEG_INFINITY;
    for j in 0..samples {
        let v = g(step * j as f64);
        if v > best_v {
            best_v = v;
            best_j = j;
        }
    }
    let mut a = step * (best_j as f64 - 1.0);
    let mut b = step * (best_j as f64 + 1.0);
    let mut c = b - INVPHI * (b - a);
    let mut d = a + INVPHI * (b - a);
    let mut fc = g(c);
    let mut fd = g(d);
    for _ in 0..100 {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INVPHI * (b - a);
            fc = g(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INVPHI * (b - a);
            fd = g(d);
        }
        if b - a <= f64::EPSILON * (1.0 + a.abs()) {
            break;
        }
    }
    let mut theta = 0.5 * (a + b);
    let mut value = g(theta);
    if best_v > value {
        theta = step * best_j as f64;
        value = best_v;
    }
    Ok((theta.rem_euclid(2.0 * PI), value))
}

/// Largest curve scale r in (0, 1] such that the whole curve(r, theta)
/// stays inside the domain, found by sampled bisection on the minimum
/// signed boundary margin over a fixed 4096-point theta grid.
///
/// A 16-point coarse sweep first checks that the minimum margin is
/// nonincreasing in r; a violation means the curve family is not nested
/// and the bisection answer would be meaningless.
pub fn containment_radius<F>(curve: F, d: &ImageDomain, tol: f64) -> Result<f64>
where
    F: Fn(f64, f64) -> Complex64,
{
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!("tol = {tol} must be positive")));
    }
    const THETAS: usize = 4096;
    let index = match d.variant {
        DomainVariant::Ellipse { .. } => Some(PolygonIndex::build(d)?),
        _ => None,
    };
    let margin_at = |r: f64| -> f64 {
        let mut m = f64::INFINITY;
        for j in 0..THETAS {
            let th = 2.0 * PI * j as f64 / THETAS as f64;
            let w = curve(r, th);
            let mj = match &index {
                Some(idx) => idx.signed_margin(w),
                None => strip_margin(&d.variant, w),
            };
            if mj < m {
                m = mj;
            }
        }
        m
    };

    let mut margins = [0.0f64; 16];
    for i in 0..16 {
        let r = (i as f64 + 1.0) / 16.0;
        margins[i] = margin_at(r);
        if i > 0 && margins[i] > margins[i - 1] + 1e-9 {
            return Err(Error::NonMonotone { r });
        }
    }
    if margins[15] >= 0.0 {
        return Ok(1.0);
    }
    let mut lo = 0.0;
    let mut hi = 1.0;
    for i in 0..16 {
        let r = (i as f64 + 1.0) / 16.0;
        if margins[i] >= 0.0 {
            lo = r;
        } else {
            hi = r;
            break;
        }
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if margin_at(mid) >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Uniform parameter sweep: count points from lo to hi inclusive.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct SweepGrid {
    pub name: String,
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
    pub values: Vec<f64>,
    pub evaluations: Vec<f64>,
}

pub fn sweep<F: Fn(f64) -> f64>(name: &str, lo: f64, hi: f64, count: usize, f: F) -> Result<SweepGrid> {
    if count < 2 {
        return Err(Error::InvalidParameter(format!("count = {count} must be >= 2")));
    }
    if !(lo < hi) {
        return Err(Error::InvalidParameter(format!("need lo < hi, got {lo}, {hi}")));
    }
    let mut values = Vec::with_capacity(count);
    let mut evaluations = Vec::with_capacity(count);
    for i in 0..count {
        let x = lo + (hi - lo) * i as f64 / (count - 1) as f64;
        values.push(x);
        evaluations.push(f(x));
    }
    Ok(SweepGrid { name: name.to_string(), lo, hi, count, values, evaluations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexfn::{extremal_eval, psi_eval, PsiParams};
    use crate::geometry::image_domain;
    use approx::assert_abs_diff_eq;

    #[test]
    fn bisection_linear_and_endpoints() {
        let r = find_root(|x| 2.0 * x - 1.0, 0.0, 1.0, 1e-12).unwrap();
        assert_abs_diff_eq!(r.root, 0.5, epsilon = 1e-12);
        assert!(r.iterations > 0);
        assert!(r.residual.abs() <= 1e-11);

        let r = find_root(|x| x, 0.0, 1.0, 1e-12).unwrap();
        assert_eq!(r.root, 0.0);
        assert_eq!(r.iterations, 0);

        assert!(matches!(
            find_root(|x| x * x + 1.0, -1.0, 1.0, 1e-12),
            Err(Error::NoBracket { .. })
        ));
        assert!(find_root(|x| x, 1.0, 0.0, 1e-12).is_err());
    }

    #[test]
    fn bisection_strip_height_threshold() {
        // the alpha = 1 strip height equation 1 + (g - pi)/(2 sin g) = 0
        let f = |g: f64| 1.0 + (g - PI) / (2.0 * g.sin());
        let r = find_root(f, 1.0, 1.5, 1e-13).unwrap();
        assert_abs_diff_eq!(r.root, 1.2460983865558122913, epsilon = 1e-11);
    }

    #[test]
    fn bisection_booth_equation() {
        // r / (1 - r^2/2) = log 3
        let h = 3.0f64.ln();
        let f = |r: f64| r / (1.0 - 0.5 * r * r) - h;
        let root = find_root(f, 0.0, 1.0, 1e-13).unwrap().root;
        assert_abs_diff_eq!(root, 0.77158580877078774, epsilon = 1e-11);
    }

    #[test]
    fn quadrature_polynomials_and_logs() {
        for k in 0..10 {
            let v = integrate(|x| x.powi(k), 0.0, 1.0, 1e-12).unwrap();
            assert_abs_diff_eq!(v, 1.0 / (k as f64 + 1.0), epsilon = 1e-13);
        }
        for k in 0..10 {
            // int_0^1 x^k log x dx = -1/(k+1)^2, singular derivative at 0
            let v = integrate(|x| x.powi(k) * x.ln(), 0.0, 1.0, 1e-12).unwrap();
            assert_abs_diff_eq!(v, -1.0 / ((k + 1) * (k + 1)) as f64, epsilon = 1e-11);
        }
        assert_eq!(integrate(|x| x, 2.0, 2.0, 1e-12).unwrap(), 0.0);
        let fwd = integrate(|x| x * x, 0.0, 2.0, 1e-12).unwrap();
        let rev = integrate(|x| x * x, 2.0, 0.0, 1e-12).unwrap();
        assert_abs_diff_eq!(fwd, -rev, epsilon = 1e-13);
    }

    #[test]
    fn quadrature_endpoint_log_singularity() {
        // int_0^1 atanh(t)/t dt = pi^2 / 8 despite the log blowup at t = 1
        let v = integrate(|t| t.atanh() / t, 0.0, 1.0, 1e-12).unwrap();
        assert_abs_diff_eq!(v, PI * PI / 8.0, epsilon = 1e-11);
        assert_abs_diff_eq!(v, 1.2337005501361698, epsilon = 1e-11);
    }

    #[test]
    fn quadrature_matches_log_derivative_of_extremal() {
        let p = PsiParams::symmetric(0.5).unwrap();
        let r = 0.5;
        let v = integrate(
            |t| psi_eval(&p, Complex64::new(t, 0.0)).unwrap().re / t,
            0.0,
            r,
            1e-13,
        )
        .unwrap();
        let f = extremal_eval(&p, Complex64::new(r, 0.0)).unwrap().re;
        assert_abs_diff_eq!(r * v.exp(), f, epsilon = 1e-10);
    }

    #[test]
    fn circle_max_cosine() {
        let (th, v) = max_on_circle(|t| t.cos(), 256).unwrap();
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-14);
        let dist = th.min(2.0 * PI - th);
        assert!(dist <= 1e-6, "theta = {th}");
        assert!(max_on_circle(|t| t.cos(), 32).is_err());
    }

    #[test]
    fn circle_max_of_psi_real_part() {
        let p = PsiParams::symmetric(0.5).unwrap();
        let (th, v) = max_on_circle(
            |t| psi_eval(&p, Complex64::from_polar(0.9, t)).unwrap().re,
            512,
        )
        .unwrap();
        let want = psi_eval(&p, Complex64::new(0.9, 0.0)).unwrap().re;
        assert_abs_diff_eq!(v, want, epsilon = 1e-12);
        let dist = th.min(2.0 * PI - th);
        assert!(dist <= 1e-6);
    }

    #[test]
    fn circle_max_of_class_curves_hits_real_axis_bound() {
        // both bounded-turning curves attain their maximum modulus on the
        // positive real axis, where it equals the domain half-width log 3
        let h1 = 3.0f64.ln();
        let a = 0.5;
        let r_booth = 0.77158580877078774;
        let (_, v) = max_on_circle(
            |t| {
                let z = Complex64::from_polar(r_booth, t);
                (z / (Complex64::new(1.0, 0.0) - a * z * z)).norm()
            },
            4096,
        )
        .unwrap();
        assert_abs_diff_eq!(v, h1, epsilon = 1e-6);

        let r_cs = 0.58695247081160841;
        let (_, v) = max_on_circle(
            |t| {
                let z = Complex64::from_polar(r_cs, t);
                (z / ((Complex64::new(1.0, 0.0) - z) * (Complex64::new(1.0, 0.0) + a * z))).norm()
            },
            4096,
        )
        .unwrap();
        assert_abs_diff_eq!(v, h1, epsilon = 1e-6);
    }

    #[test]
    fn containment_radius_of_circle_family() {
        // circles about 0 inside the symmetric alpha = 1/2 image: the
        // largest fitting radius is the imaginary half-height asin(4/5)
        let p = PsiParams::symmetric(0.5).unwrap();
        let d = image_domain(&p, 0.0, 4096).unwrap();
        let r = containment_radius(|r, t| Complex64::from_polar(r, t), &d, 1e-6).unwrap();
        assert_abs_diff_eq!(r, 0.8f64.asin(), epsilon = 1e-4);
    }

    #[test]
    fn containment_radius_saturates_at_one() {
        let p = PsiParams::symmetric(0.5).unwrap();
        let d = image_domain(&p, 0.0, 1024).unwrap();
        // a family that never leaves the domain
        let r = containment_radius(|r, t| Complex64::from_polar(0.1 * r, t), &d, 1e-6).unwrap();
        assert_eq!(r, 1.0);
    }

    #[test]
    fn containment_radius_rejects_non_nested_family() {
        let p = PsiParams::symmetric(0.5).unwrap();
        let d = image_domain(&p, 0.0, 1024).unwrap();
        // radius oscillates in r, so margins are not monotone
        let out = containment_radius(
            |r, t| Complex64::from_polar(2.0 * (r - 0.5).abs(), t),
            &d,
            1e-6,
        );
        assert!(matches!(out, Err(Error::NonMonotone { .. })));
    }

    #[test]
    fn sweep_grid_shape_and_determinism() {
        let g1 = sweep("demo", 0.0, 1.0, 11, |x| x * x).unwrap();
        let g2 = sweep("demo", 0.0, 1.0, 11, |x| x * x).unwrap();
        assert_eq!(g1, g2);
        assert_eq!(g1.values.len(), 11);
        assert_eq!(g1.values[0], 0.0);
        assert_eq!(g1.values[10], 1.0);
        assert_abs_diff_eq!(g1.evaluations[5], 0.25, epsilon = 1e-15);
        assert!(sweep("bad", 0.0, 1.0, 1, |x| x).is_err());
        assert!(sweep("bad", 1.0, 0.0, 5, |x| x).is_err());
    }
}
