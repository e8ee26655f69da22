//! Sharp radius computations: starlikeness of given order, univalence,
//! strong starlikeness, and the radii for the Booth and cosine-sine
//! rational subordination classes, together with the gamma thresholds that
//! split the closed-form, root-solving, and whole-disk branches.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::bounds::conj_parts;
use crate::complexfn::{psi_eval, Mode, PsiParams};
use crate::geometry::{domain_axes, image_domain, DomainVariant, ImageDomain, PolygonIndex};
use crate::{oracle, Error, Result};

/// How a radius value was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Branch {
    /// Direct evaluation of a closed-form expression.
    ClosedForm,
    /// Bisection root of the defining equation.
    RootOfEq,
    /// The property holds on the whole unit disk; value is 1.
    WholeDisk,
}

/// A computed radius with its provenance and a measured sharpness
/// certificate: `sharpness_margin` is the defining margin re-evaluated just
/// past the radius (negative when the property genuinely fails there), and
/// `sharp` additionally requires the margin to still be nonnegative just
/// inside.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct RadiusResult {
    pub value: f64,
    pub branch: Branch,
    pub equation_residual: f64,
    pub sharp: bool,
    pub sharpness_margin: f64,
    pub iterations: u32,
}

/// The two gamma thresholds at a given alpha together with the height
/// g(alpha, pi/2) of the order function at the right end.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct GammaThresholds {
    pub gamma0: f64,
    pub gamma_prime: f64,
    pub g_star: f64,
}

pub(crate) fn t1_func(alpha: f64, r: f64) -> f64 {
    1.0 - ((1.0 + alpha * r) / (1.0 - alpha * r)).ln() / (2.0 * alpha)
}

pub(crate) fn t2_func(alpha: f64, gamma: f64, r: f64) -> f64 {
    let (eta, tau, _, _) = conj_parts(alpha, gamma, r);
    1.0 - (eta - tau) / (2.0 * alpha * gamma.sin())
}

/// Limiting starlikeness order g(alpha, gamma) of the conjugate-pair class
/// on the whole disk; positive values mean every member is starlike of
/// that order.
pub fn g_func(alpha: f64, gamma: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "alpha = {alpha} must lie in (0, 1]"
        )));
    }
    if !(gamma > 0.0 && gamma <= FRAC_PI_2) {
        return Err(Error::InvalidParameter(format!(
            "gamma = {gamma} must lie in (0, pi/2]"
        )));
    }
    Ok(t2_func(alpha, gamma, 1.0))
}

/// Unique zero of g(1, gamma) = 1 + (gamma - pi)/(2 sin gamma) in (1, 1.5):
/// below it even alpha = 1 keeps a positive order.
pub fn gamma0() -> f64 {
    oracle::find_root(|g| 1.0 + (g - PI) / (2.0 * g.sin()), 1.0, 1.5, 1e-12)
        .expect("sign change is fixed")
        .root
}

/// Zero of gamma -> g(alpha, gamma) for alpha in (0, 1): above it the
/// whole-disk order is positive.
pub fn gamma_prime(alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "alpha = {alpha} must lie in (0, 1)"
        )));
    }
    let f = |g: f64| t2_func(alpha, g, 1.0);
    let (lo, hi) = (1e-6, FRAC_PI_2);
    let (flo, fhi) = (f(lo), f(hi));
    if !(flo < 0.0 && fhi > 0.0) {
        return Err(Error::NoBracket { lo, hi, flo, fhi });
    }
    Ok(oracle::find_root(f, lo, hi, 1e-12)?.root)
}

pub fn thresholds(alpha: f64) -> Result<GammaThresholds> {
    Ok(GammaThresholds {
        gamma0: gamma0(),
        gamma_prime: gamma_prime(alpha)?,
        g_star: g_func(alpha, FRAC_PI_2)?,
    })
}

// Minimum of Re(1 + psi) on the circle |z| = r (the disk minimum sits on
// the boundary), refined past grid resolution. Radii above 1 are clamped;
// grid points that cannot be evaluated (boundary branch points) are
// skipped.
fn circle_min_re(p: &PsiParams, r: f64) -> f64 {
    let r = r.min(1.0);
    let q = *p;
    let (_, neg_min) = oracle::max_on_circle(
        move |t| {
            psi_eval(&q, Complex64::from_polar(r, t))
                .map(|w| -w.re)
                .unwrap_or(f64::NEG_INFINITY)
        },
        1024,
    )
    .expect("fixed sample count");
    1.0 - neg_min
}

/// Largest r such that every class member satisfies Re(z f'/f) > delta on
/// |z| < r. Symmetric parameters give a closed form; conjugate pairs
/// either cover the whole disk (delta below the limiting order) or solve
/// the order equation by bisection.
pub fn starlike_radius(p: &PsiParams, delta: f64) -> Result<RadiusResult> {
    if !(0.0..1.0).contains(&delta) {
        return Err(Error::InvalidParameter(format!(
            "order delta = {delta} must lie in [0, 1)"
        )));
    }
    let margin = |r: f64| circle_min_re(p, r) - delta;
    let finish = |value: f64, branch: Branch, residual: f64, iterations: u32| {
        let up = margin(value * (1.0 + 1e-6));
        let sharp = branch != Branch::WholeDisk
            && up < 0.0
            && margin(value * (1.0 - 1e-6)) >= 0.0
            && margin(value).abs() <= 1e-8;
        RadiusResult {
            value,
            branch,
            equation_residual: residual,
            sharp,
            sharpness_margin: up,
            iterations,
        }
    };
    Ok(match p.mode {
        Mode::Symmetric => {
            let al = p.alpha;
            let v = (al * (1.0 - delta)).tanh() / al;
            if v >= 1.0 {
                finish(1.0, Branch::WholeDisk, 0.0, 0)
            } else {
                finish(v, Branch::ClosedForm, (t1_func(al, v) - delta).abs(), 0)
            }
        }
        Mode::ConjugatePair => {
            let g = t2_func(p.alpha, p.gamma, 1.0);
            if delta <= g + 1e-13 {
                finish(1.0, Branch::WholeDisk, 0.0, 0)
            } else {
                let root = oracle::find_root(
                    |r| t2_func(p.alpha, p.gamma, r) - delta,
                    1e-9,
                    1.0,
                    1e-12,
                )?;
                finish(
                    root.root,
                    Branch::RootOfEq,
                    (t2_func(p.alpha, p.gamma, root.root) - delta).abs(),
                    root.iterations,
                )
            }
        }
    })
}

/// Radius of univalence, which for these convex target regions coincides
/// with the radius of starlikeness of order zero.
pub fn univalence_radius(p: &PsiParams) -> Result<RadiusResult> {
    starlike_radius(p, 0.0)
}

/// Largest r below which |arg(z f'/f)| < beta pi/2 for every member.
/// beta = 1 is the univalence radius; otherwise the rotation equation is
/// solved on (0, r_univalence].
pub fn ss_radius(p: &PsiParams, beta: f64) -> Result<RadiusResult> {
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "beta = {beta} must lie in (0, 1]"
        )));
    }
    if beta == 1.0 {
        return univalence_radius(p);
    }
    let t = (beta * FRAC_PI_2).tan();
    let al = p.alpha;
    let f = |r: f64| -> f64 {
        match p.mode {
            Mode::Symmetric => {
                (2.0 * al * r / (1.0 + al * al * r * r)).asin()
                    - t * (2.0 * al - ((1.0 + al * r) / (1.0 - al * r)).ln())
            }
            Mode::ConjugatePair => {
                let (eta, tau, t1, _) = conj_parts(al, p.gamma, r);
                t1.ln() - t * (2.0 * al * p.gamma.sin() - eta + tau)
            }
        }
    };
    let margin = |r: f64| -> f64 {
        let r = r.min(1.0);
        let q = *p;
        let (_, worst) = oracle::max_on_circle(
            move |th| {
                psi_eval(&q, Complex64::from_polar(r, th))
                    .map(|w| (Complex64::new(1.0, 0.0) + w).arg().abs())
                    .unwrap_or(f64::NEG_INFINITY)
            },
            1024,
        )
        .expect("fixed sample count");
        beta * FRAC_PI_2 - worst
    };
    let hi = univalence_radius(p)?.value;
    let fhi = f(hi);
    if fhi <= 0.0 {
        // the rotation stays inside the cone all the way to the univalence
        // radius, which only happens when that radius is the whole disk
        let up = margin(hi * (1.0 + 1e-6));
        return Ok(RadiusResult {
            value: hi,
            branch: Branch::WholeDisk,
            equation_residual: 0.0,
            sharp: false,
            sharpness_margin: up,
            iterations: 0,
        });
    }
    let mut lo = 1e-9;
    let mut flo = f(lo);
    let mut guard = 0;
    while flo >= 0.0 && guard < 50 {
        lo *= 1e-3;
        flo = f(lo);
        guard += 1;
    }
    let root = oracle::find_root(f, lo, hi, 1e-12)?;
    let up = margin(root.root * (1.0 + 1e-6));
    let sharp = up < 0.0 && margin(root.root * (1.0 - 1e-6)) >= 0.0;
    Ok(RadiusResult {
        value: root.root,
        branch: Branch::RootOfEq,
        equation_residual: f(root.root).abs(),
        sharp,
        sharpness_margin: up,
        iterations: root.iterations,
    })
}

fn bs_value(h: f64, a: f64) -> f64 {
    // stable root of a h v^2 + v - h = 0
    2.0 * h / (1.0 + (1.0 + 4.0 * a * h * h).sqrt())
}

fn cs_value(h: f64, a: f64) -> f64 {
    // stable root of a h v^2 + (1 + (1 - a) h) v - h = 0
    let c = 1.0 + (1.0 - a) * h;
    2.0 * h / (c + (c * c + 4.0 * a * h * h).sqrt())
}

/// Point of the booth-class image curve z/(1 - a z^2) at z = r e^{i theta}.
pub fn booth_point(a: f64, r: f64, theta: f64) -> Complex64 {
    let z = Complex64::from_polar(r, theta);
    z / (Complex64::new(1.0, 0.0) - a * z * z)
}

/// Point of the cosine-sine-class image curve z/((1 - z)(1 + a z)).
pub fn cs_point(a: f64, r: f64, theta: f64) -> Complex64 {
    let z = Complex64::from_polar(r, theta);
    z / ((Complex64::new(1.0, 0.0) - z) * (Complex64::new(1.0, 0.0) + a * z))
}

fn curve_min_margin<F: Fn(f64, f64) -> Complex64>(
    d: &ImageDomain,
    idx: Option<&PolygonIndex>,
    curve: F,
    r: f64,
) -> f64 {
    let mut m = f64::INFINITY;
    for j in 0..4096 {
        let th = 2.0 * PI * j as f64 / 4096.0;
        let w = curve(r, th);
        let mj = match idx {
            Some(idx) => idx.signed_margin(w),
            None => crate::geometry::strip_margin(&d.variant, w),
        };
        if mj < m {
            m = mj;
        }
    }
    m
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum RationalKind {
    Booth,
    CosSin,
}

fn rational_radius(p: &PsiParams, a: f64, kind: RationalKind) -> Result<RadiusResult> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "class parameter a = {a} must lie in (0, 1)"
        )));
    }
    if p.mode == Mode::Symmetric && p.alpha >= 1.0 {
        return Err(Error::InvalidParameter(
            "symmetric alpha = 1 has an unbounded image; the rational-class radii need alpha < 1"
                .into(),
        ));
    }
    let axes = domain_axes(p);
    let h = match p.mode {
        Mode::Symmetric => {
            let threshold = match kind {
                RationalKind::Booth => alpha0_bs(p)?.0,
                RationalKind::CosSin => alpha0_cs(p)?.0,
            };
            if a <= threshold {
                axes.h1
            } else {
                axes.h2
            }
        }
        Mode::ConjugatePair => axes.k1 + axes.k,
    };
    let (value, residual) = match kind {
        RationalKind::Booth => {
            let v = bs_value(h, a);
            (v, (v / (1.0 - a * v * v) - h).abs())
        }
        RationalKind::CosSin => {
            let v = cs_value(h, a);
            (v, (v / ((1.0 - v) * (1.0 + a * v)) - h).abs())
        }
    };
    if value >= 1.0 {
        return Ok(RadiusResult {
            value: 1.0,
            branch: Branch::WholeDisk,
            equation_residual: 0.0,
            sharp: false,
            sharpness_margin: f64::NAN,
            iterations: 0,
        });
    }
    let d = image_domain(p, 0.0, 4096)?;
    let idx = match d.variant {
        DomainVariant::Ellipse { .. } => Some(PolygonIndex::build(&d)?),
        _ => None,
    };
    let curve = |r: f64, th: f64| match kind {
        RationalKind::Booth => booth_point(a, r, th),
        RationalKind::CosSin => cs_point(a, r, th),
    };
    let up = curve_min_margin(&d, idx.as_ref(), curve, value * (1.0 + 1e-6));
    let down = curve_min_margin(&d, idx.as_ref(), curve, value * (1.0 - 1e-6));
    Ok(RadiusResult {
        value,
        branch: Branch::ClosedForm,
        equation_residual: residual,
        sharp: up < 0.0 && down >= 0.0,
        sharpness_margin: up,
        iterations: 0,
    })
}

/// Radius in the class with z f'/f - 1 subordinate to z/(1 - a z^2): the
/// largest r for which that Booth-lemniscate image at scale r stays inside
/// the psi image.
pub fn bs_radius(p: &PsiParams, a: f64) -> Result<RadiusResult> {
    rational_radius(p, a, RationalKind::Booth)
}

/// Radius in the class with z f'/f - 1 subordinate to z/((1 - z)(1 + a z)).
pub fn cs_radius(p: &PsiParams, a: f64) -> Result<RadiusResult> {
    rational_radius(p, a, RationalKind::CosSin)
}

fn alpha0_threshold(kind: RationalKind) -> (f64, bool) {
    let grid_min = |al: f64| -> f64 {
        let h1 = ((1.0 + al) / (1.0 - al)).ln() / (2.0 * al);
        let h2 = (2.0 * al / (1.0 + al * al)).asin() / (2.0 * al);
        let r0 = match kind {
            RationalKind::Booth => bs_value(h1, al),
            RationalKind::CosSin => cs_value(h1, al),
        };
        let mut m = f64::INFINITY;
        for j in 0..1024 {
            let th = (j as f64 + 0.5) * FRAC_PI_2 / 1024.0;
            let w = match kind {
                RationalKind::Booth => booth_point(al, r0, th),
                RationalKind::CosSin => cs_point(al, r0, th),
            };
            let f = 1.0 - (w.re / h1).powi(2) - (w.im / h2).powi(2);
            if f < m {
                m = f;
            }
        }
        m
    };
    let (mut lo, mut hi) = (0.05, 0.99);
    if !(grid_min(lo) > 0.0 && grid_min(hi) < 0.0) {
        return (1.0, false);
    }
    while hi - lo > 1e-10 {
        let mid = 0.5 * (lo + hi);
        if grid_min(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (0.5 * (lo + hi), true)
}

/// Threshold class parameter below which the Booth radius is governed by
/// the real half-width h1 and above which the curve first exits through
/// the top of the inscribed ellipse. Defined for symmetric mode, where the
/// coupled case `a = alpha` fixes the crossover; the boolean reports
/// whether a sign change was actually bracketed.
pub fn alpha0_bs(p: &PsiParams) -> Result<(f64, bool)> {
    if p.mode != Mode::Symmetric {
        return Err(Error::InvalidParameter(
            "the crossover threshold is defined for symmetric parameters".into(),
        ));
    }
    Ok(alpha0_threshold(RationalKind::Booth))
}

/// Same crossover threshold for the cosine-sine rational class.
pub fn alpha0_cs(p: &PsiParams) -> Result<(f64, bool)> {
    if p.mode != Mode::Symmetric {
        return Err(Error::InvalidParameter(
            "the crossover threshold is defined for symmetric parameters".into(),
        ));
    }
    Ok(alpha0_threshold(RationalKind::CosSin))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::contains;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_3, FRAC_PI_4};

    #[test]
    fn g_spots_and_formula() {
        assert_abs_diff_eq!(
            g_func(1.0, FRAC_PI_2).unwrap(),
            1.0 - FRAC_PI_4,
            epsilon = 1e-12
        );
        for (al, want) in [
            (0.25, 0.020085347492543383),
            (0.5, 0.072704781998387768),
            (0.75, 0.14199852160895415),
            (0.9, 0.18576099801499268),
        ] {
            assert_abs_diff_eq!(g_func(al, FRAC_PI_2).unwrap(), want, epsilon = 1e-13);
        }
        // closed form at alpha = 1
        for g in [0.3, 0.9, 1.2, FRAC_PI_2] {
            assert_abs_diff_eq!(
                g_func(1.0, g).unwrap(),
                1.0 + (g - PI) / (2.0 * g.sin()),
                epsilon = 1e-13
            );
        }
        // gamma -> 0 limit is 1 - 1/(1 - alpha)
        assert_abs_diff_eq!(g_func(0.5, 1e-5).unwrap(), -1.0, epsilon = 1e-4);
        assert!(g_func(0.0, 1.0).is_err());
        assert!(g_func(0.5, 2.0).is_err());
    }

    #[test]
    fn g_monotone_in_gamma_at_alpha_one() {
        let mut prev = f64::NEG_INFINITY;
        for i in 1..=200 {
            let g = 1e-3 + (FRAC_PI_2 - 1e-3) * i as f64 / 200.0;
            let v = g_func(1.0, g).unwrap();
            assert!(v > prev);
            prev = v;
        }
        assert!(prev <= 1.0 - FRAC_PI_4 + 1e-12);
    }

    #[test]
    fn gamma0_value_and_residual() {
        let g0 = gamma0();
        assert_abs_diff_eq!(g0, 1.2460983865558122913, epsilon = 1e-11);
        assert!(g_func(1.0, g0).unwrap().abs() <= 1e-12);
    }

    #[test]
    fn gamma_prime_spots_and_signs() {
        for (al, want) in [
            (0.25, 1.4875980639674009),
            (0.5, 1.4052108560017586),
            (0.75, 1.3244455328711275),
            (0.9, 1.2770976216179617),
        ] {
            let gp = gamma_prime(al).unwrap();
            assert_abs_diff_eq!(gp, want, epsilon = 1e-10);
            assert!(g_func(al, gp).unwrap().abs() <= 1e-10);
            assert!(g_func(al, gp - 0.01).unwrap() < 0.0);
            assert!(g_func(al, gp + 0.01).unwrap() > 0.0);
        }
        assert!(gamma_prime(1.0).is_err());
        assert!(gamma_prime(0.0).is_err());
    }

    #[test]
    fn gamma_prime_continuity_and_threshold_order() {
        let mut prev = gamma_prime(0.02).unwrap();
        for i in 1..50 {
            let al = 0.02 + 0.96 * i as f64 / 49.0;
            let gp = gamma_prime(al).unwrap();
            assert!((gp - prev).abs() < 0.05, "jump at alpha = {al}");
            prev = gp;
        }
        for al in [0.25, 0.5, 0.9] {
            let th = thresholds(al).unwrap();
            assert!(th.gamma0 < th.gamma_prime && th.gamma_prime < FRAC_PI_2);
            assert!(th.g_star > 0.0);
        }
    }

    #[test]
    fn starlike_symmetric_closed_form() {
        let p = PsiParams::symmetric(0.5).unwrap();
        let r = starlike_radius(&p, 0.25).unwrap();
        assert_eq!(r.branch, Branch::ClosedForm);
        assert_abs_diff_eq!(r.value, 0.71671479670157189, epsilon = 1e-14);
        assert!(r.equation_residual <= 1e-12);
        assert!(r.sharp, "margin just outside: {}", r.sharpness_margin);
        assert!(r.sharpness_margin < 0.0);

        let u = univalence_radius(&p).unwrap();
        assert_abs_diff_eq!(u.value, 0.5f64.tanh() / 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(u.value, 0.92423431452001952, epsilon = 1e-14);
        assert!(u.sharp);

        assert!(starlike_radius(&p, 1.0).is_err());
        assert!(starlike_radius(&p, -0.1).is_err());
        // order close to 1 forces a tiny radius
        assert!(starlike_radius(&p, 0.999).unwrap().value < 2e-3);
    }

    #[test]
    fn starlike_conjugate_roots_and_whole_disk() {
        let cases = [
            (1.0, FRAC_PI_4, 0.0, 0.65163302469414991),
            (0.5, 1.0, 0.25, 0.64146425724040345),
            (0.75, 1.3, 0.5, 0.473302140694353),
        ];
        for (al, ga, delta, want) in cases {
            let p = PsiParams::conjugate_pair(al, ga).unwrap();
            let r = starlike_radius(&p, delta).unwrap();
            assert_eq!(r.branch, Branch::RootOfEq);
            assert_abs_diff_eq!(r.value, want, epsilon = 1e-10);
            assert!(r.equation_residual <= 1e-10);
            assert!(r.iterations > 0);
            assert!(r.sharp);
        }

        // gamma above gamma_prime: order stays positive on the whole disk
        let p = PsiParams::conjugate_pair(0.5, 1.5).unwrap();
        let r = starlike_radius(&p, 0.0).unwrap();
        assert_eq!(r.branch, Branch::WholeDisk);
        assert_eq!(r.value, 1.0);
        assert!(!r.sharp);
        assert!(r.sharpness_margin > 0.0);

        let u = univalence_radius(&PsiParams::conjugate_pair(0.5, FRAC_PI_3).unwrap()).unwrap();
        assert_abs_diff_eq!(u.value, 0.84266974013486272, epsilon = 1e-10);
    }

    #[test]
    fn starlike_branch_handoff_is_continuous() {
        let p = PsiParams::conjugate_pair(0.5, 1.5).unwrap();
        let g = g_func(0.5, 1.5).unwrap();
        let just_above = starlike_radius(&p, g + 1e-6).unwrap();
        assert_eq!(just_above.branch, Branch::RootOfEq);
        assert!(just_above.value > 0.99, "value {}", just_above.value);
        let just_below = starlike_radius(&p, (g - 1e-6).max(0.0)).unwrap();
        assert_eq!(just_below.branch, Branch::WholeDisk);
    }

    #[test]
    fn starlike_value_decreases_with_order() {
        for p in [
            PsiParams::symmetric(0.7).unwrap(),
            PsiParams::conjugate_pair(0.8, 0.9).unwrap(),
        ] {
            let mut prev = f64::INFINITY;
            for i in 0..20 {
                let delta = i as f64 * 0.99 / 19.0;
                let v = starlike_radius(&p, delta).unwrap().value;
                assert!(v <= prev + 1e-12);
                prev = v;
            }
        }
    }

    #[test]
    fn order_functions_decrease_in_radius() {
        let mut prev = f64::INFINITY;
        for i in 1..=200 {
            let r = i as f64 / 200.0;
            let v = t2_func(0.7, 1.1, r);
            assert!(v < prev);
            prev = v;
        }
        assert_abs_diff_eq!(t1_func(0.5, 0.3), 0.697719128127, epsilon = 1e-11);
        assert_abs_diff_eq!(t1_func(0.5, 0.7), 0.269112491457, epsilon = 1e-11);
    }

    #[test]
    fn strong_starlike_spots() {
        let p = PsiParams::symmetric(0.5).unwrap();
        let r = ss_radius(&p, 0.5).unwrap();
        assert_eq!(r.branch, Branch::RootOfEq);
        assert_abs_diff_eq!(r.value, 0.49961005180602818, epsilon = 1e-10);
        assert!(r.equation_residual <= 1e-10);
        // the rectangle corner is not on the curve, so the measured
        // rotation stays below the cone: not sharp to the measurement
        assert!(!r.sharp);
        assert!(r.sharpness_margin > 0.1);

        let pc = PsiParams::conjugate_pair(0.5, FRAC_PI_3).unwrap();
        let r = ss_radius(&pc, 0.5).unwrap();
        assert_abs_diff_eq!(r.value, 0.46710486670381853, epsilon = 1e-10);

        // beta = 1 collapses to univalence
        let u = univalence_radius(&p).unwrap();
        let r1 = ss_radius(&p, 1.0).unwrap();
        assert_eq!(r1.value, u.value);
        assert_eq!(r1.branch, u.branch);

        // small beta forces a small radius
        assert!(ss_radius(&p, 0.01).unwrap().value < 0.05);
        assert!(ss_radius(&p, 0.0).is_err());
        assert!(ss_radius(&p, 1.1).is_err());
    }

    #[test]
    fn strong_starlike_respects_ordering() {
        for p in [
            PsiParams::symmetric(0.6).unwrap(),
            PsiParams::conjugate_pair(0.7, 1.2).unwrap(),
        ] {
            let u = univalence_radius(&p).unwrap().value;
            let mut prev = 0.0;
            for &beta in &[0.2, 0.5, 0.8, 1.0] {
                let v = ss_radius(&p, beta).unwrap().value;
                assert!(v >= prev - 1e-12 && v <= u + 1e-12);
                prev = v;
            }
        }
    }

    #[test]
    fn booth_radius_symmetric_branches() {
        let p = PsiParams::symmetric(0.5).unwrap();
        let r = bs_radius(&p, 0.5).unwrap();
        assert_eq!(r.branch, Branch::ClosedForm);
        assert_abs_diff_eq!(r.value, 0.77158580877078774, epsilon = 1e-13);
        assert!(r.equation_residual <= 1e-8);
        assert!(r.sharp);
        assert!(r.sharpness_margin < 0.0);

        // above the crossover the height constraint takes over and the
        // closed form is the conservative inscribed-ellipse answer
        let r = bs_radius(&p, 0.7).unwrap();
        let h2 = 0.8f64.asin();
        assert_abs_diff_eq!(r.value, bs_value(h2, 0.7), epsilon = 1e-14);
        assert!(!r.sharp);
        assert!(r.sharpness_margin > 0.0);

        // tiny class parameter: the curve fits however far it is pushed
        let r = bs_radius(&p, 0.05).unwrap();
        assert_eq!(r.branch, Branch::WholeDisk);
        assert_eq!(r.value, 1.0);

        assert!(bs_radius(&p, 0.0).is_err());
        assert!(bs_radius(&p, 1.0).is_err());
        assert!(bs_radius(&PsiParams::symmetric(1.0).unwrap(), 0.5).is_err());
    }

    #[test]
    fn booth_radius_conjugate() {
        let p = PsiParams::conjugate_pair(0.5, FRAC_PI_2).unwrap();
        let r = bs_radius(&p, 0.5).unwrap();
        assert_abs_diff_eq!(r.value, 0.70006542184923382, epsilon = 1e-13);
        assert!(r.sharp);
        // defining equation against the inner reach k1 + k
        let v = r.value;
        assert_abs_diff_eq!(v / (1.0 - 0.5 * v * v), 0.92729521800161223, epsilon = 1e-10);

        // alpha = 1 strip case stays finite through the atan2 forms
        let p1 = PsiParams::conjugate_pair(1.0, FRAC_PI_2).unwrap();
        let r1 = bs_radius(&p1, 0.5).unwrap();
        let k_reach = FRAC_PI_2 / (2.0 * 1.0);
        assert_abs_diff_eq!(r1.value, bs_value(k_reach, 0.5), epsilon = 1e-13);
        assert!(r1.sharp);
    }

    #[test]
    fn cosine_sine_radius_spots() {
        let p = PsiParams::symmetric(0.5).unwrap();
        let r = cs_radius(&p, 0.5).unwrap();
        assert_eq!(r.branch, Branch::ClosedForm);
        assert_abs_diff_eq!(r.value, 0.58695247081160841, epsilon = 1e-13);
        assert!(r.equation_residual <= 1e-8);
        assert!(r.sharp);

        let r = cs_radius(&p, 0.7).unwrap();
        let h2 = 0.8f64.asin();
        assert_abs_diff_eq!(r.value, cs_value(h2, 0.7), epsilon = 1e-14);
        assert!(!r.sharp);

        // a -> 0 limit h1/(1 + h1)
        let r = cs_radius(&p, 1e-6).unwrap();
        assert_abs_diff_eq!(r.value, 0.52349464195949559, epsilon = 1e-5);

        let pc = PsiParams::conjugate_pair(0.5, FRAC_PI_3).unwrap();
        let r = cs_radius(&pc, 0.5).unwrap();
        assert_abs_diff_eq!(r.value, 0.48942673478854603, epsilon = 1e-13);
        assert!(r.sharp);
    }

    #[test]
    fn crossover_thresholds() {
        let p = PsiParams::symmetric(0.5).unwrap();
        let (a_bs, ok_bs) = alpha0_bs(&p).unwrap();
        assert!(ok_bs);
        assert_abs_diff_eq!(a_bs, 0.642884267447, epsilon = 1e-6);
        let (a_cs, ok_cs) = alpha0_cs(&p).unwrap();
        assert!(ok_cs);
        assert_abs_diff_eq!(a_cs, 0.630752375238, epsilon = 1e-6);
        assert!(alpha0_bs(&PsiParams::conjugate_pair(0.5, 1.0).unwrap()).is_err());
    }

    #[test]
    fn sharp_radii_certified_by_containment() {
        // the certified-sharp Booth radius: the curve exits just past the
        // radius and stays inside just before, measured independently with
        // the polygon containment report
        let p = PsiParams::symmetric(0.5).unwrap();
        let d = image_domain(&p, 0.0, 4096).unwrap();
        let v = bs_radius(&p, 0.5).unwrap().value;
        let worst = |r: f64| -> f64 {
            let mut m = f64::INFINITY;
            for j in 0..4096 {
                let th = 2.0 * PI * j as f64 / 4096.0;
                let rep = contains(&d, booth_point(0.5, r, th)).unwrap();
                m = m.min(rep.margin);
            }
            m
        };
        assert!(worst(v * (1.0 - 1e-4)) > 0.0);
        assert!(worst(v * (1.0 + 1e-4)) < 0.0);
    }
}
