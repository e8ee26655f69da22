//! Sharp rectangular envelopes for psi on circles, growth and distortion
//! bounds along with curve-length bounds, the covering constant, and the
//! rotation bound on arg(1 + psi).

use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

use crate::complexfn::{extremal_eval, Mode, PsiParams};
use crate::{oracle, radii, Error, Result};

/// Shared pieces of the conjugate-pair bounds at radius r:
/// s = 2 alpha r sin gamma, m = 1 - alpha^2 r^2,
/// eta = atan2(s, m), tau = arg(1 - alpha^2 r^2 e^{2 i gamma}),
/// T1 = (hypot(m, s) + s) / m and T2 = 1 / T1.
/// The atan2 forms stay exact at alpha = r = 1 where m vanishes.
pub(crate) fn conj_parts(alpha: f64, gamma: f64, r: f64) -> (f64, f64, f64, f64) {
    let s = 2.0 * alpha * r * gamma.sin();
    let m = 1.0 - alpha * alpha * r * r;
    let hyp = m.hypot(s);
    let eta = s.atan2(m);
    let a2r2 = alpha * alpha * r * r;
    let tau = (-a2r2 * (2.0 * gamma).sin()).atan2(1.0 - a2r2 * (2.0 * gamma).cos());
    let t1 = (hyp + s) / m;
    let t2 = m / (hyp + s);
    (eta, tau, t1, t2)
}

/// Extremes of Re psi and Im psi over the closed disk |z| <= r. The
/// conjugate-pair intermediates are exposed for reuse; they are `None` in
/// symmetric mode where the envelope is centered.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct BoundEnvelope {
    pub r: f64,
    pub re_lo: f64,
    pub re_hi: f64,
    pub im_lo: f64,
    pub im_hi: f64,
    pub eta: Option<f64>,
    pub tau: Option<f64>,
    pub t1: Option<f64>,
    pub t2: Option<f64>,
}

pub fn envelope(p: &PsiParams, r: f64) -> Result<BoundEnvelope> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "envelope radius {r} must lie in (0, 1]"
        )));
    }
    Ok(match p.mode {
        Mode::Symmetric => {
            let al = p.alpha;
            let re_hi = ((1.0 + al * r) / (1.0 - al * r)).ln() / (2.0 * al);
            let im_hi = (2.0 * al * r / (1.0 + al * al * r * r)).asin() / (2.0 * al);
            BoundEnvelope {
                r,
                re_lo: -re_hi,
                re_hi,
                im_lo: -im_hi,
                im_hi,
                eta: None,
                tau: None,
                t1: None,
                t2: None,
            }
        }
        Mode::ConjugatePair => {
            let (eta, tau, t1, t2) = conj_parts(p.alpha, p.gamma, r);
            let den = 2.0 * p.alpha * p.gamma.sin();
            let im_hi = t1.ln() / den;
            BoundEnvelope {
                r,
                re_lo: (tau - eta) / den,
                re_hi: (eta + tau) / den,
                im_lo: -im_hi,
                im_hi,
                eta: Some(eta),
                tau: Some(tau),
                t1: Some(t1),
                t2: Some(t2),
            }
        }
    })
}

/// Modulus, derivative, and boundary-length bounds for the class at radius
/// r, all driven by the extremal function: with M(r) = f(r)/r,
/// M(-r) <= |f(z)/z| <= M(r) and the derivative and length bounds carry
/// the common factor 1 + max|psi| over |z| <= r.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct GrowthBounds {
    pub r: f64,
    pub lower: f64,
    pub upper: f64,
    pub ratio_lower: f64,
    pub ratio_upper: f64,
    pub deriv_lower: f64,
    pub deriv_upper: f64,
    pub length_lower: f64,
    pub length_upper: f64,
}

pub fn growth(p: &PsiParams, r: f64) -> Result<GrowthBounds> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "growth radius {r} must lie in (0, 1)"
        )));
    }
    let upper = extremal_eval(p, Complex64::new(r, 0.0))?.re;
    let lower = -extremal_eval(p, Complex64::new(-r, 0.0))?.re;
    let ratio_upper = upper / r;
    let ratio_lower = lower / r;
    let p_owned = *p;
    let (_, maxmod) = oracle::max_on_circle(
        move |t| {
            crate::complexfn::psi_eval(&p_owned, Complex64::from_polar(r, t))
                .map(|w| w.norm())
                .unwrap_or(f64::NEG_INFINITY)
        },
        1024,
    )?;
    let deriv_lower = (1.0 + maxmod) * ratio_lower;
    let deriv_upper = (1.0 + maxmod) * ratio_upper;
    let circ = 2.0 * std::f64::consts::PI * r;
    Ok(GrowthBounds {
        r,
        lower,
        upper,
        ratio_lower,
        ratio_upper,
        deriv_lower,
        deriv_upper,
        length_lower: circ * deriv_lower,
        length_upper: circ * deriv_upper,
    })
}

/// Radius of the largest disk about 0 covered by the image of every class
/// member: -f(-1) for the extremal f. Equals exp(-pi^2/8) in the
/// symmetric alpha = 1 case.
pub fn covering_constant(p: &PsiParams) -> f64 {
    -extremal_eval(p, Complex64::new(-1.0, 0.0))
        .expect("extremal function is finite at z = -1")
        .re
}

/// Bound on |arg(z f'/f)| over |z| <= r for class members, valid up to the
/// univalence radius. Returns pi/2 once the real-part denominator closes.
pub fn arg_bound(p: &PsiParams, r: f64) -> Result<f64> {
    let r_univ = radii::univalence_radius(p)?.value;
    if !(r > 0.0 && r <= r_univ + 1e-12) {
        return Err(Error::InvalidParameter(format!(
            "arg bound radius {r} must lie in (0, {r_univ}]"
        )));
    }
    Ok(match p.mode {
        Mode::Symmetric => {
            let al = p.alpha;
            let den = 2.0 * al - ((1.0 + al * r) / (1.0 - al * r)).ln();
            if den <= 0.0 {
                FRAC_PI_2
            } else {
                ((2.0 * al * r / (1.0 + al * al * r * r)).asin() / den).atan()
            }
        }
        Mode::ConjugatePair => {
            let (eta, tau, t1, _) = conj_parts(p.alpha, p.gamma, r);
            let den = 2.0 * p.alpha * p.gamma.sin() - eta + tau;
            if den <= 0.0 {
                FRAC_PI_2
            } else {
                (t1.ln() / den).atan()
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexfn::psi_eval;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use rand::{Rng, SeedableRng};
    use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, PI};

    #[test]
    fn envelope_conjugate_spot() {
        let p = PsiParams::conjugate_pair(0.5, FRAC_PI_3).unwrap();
        let e = envelope(&p, 0.7).unwrap();
        assert_abs_diff_eq!(e.eta.unwrap(), 0.60455620571498074, epsilon = 1e-15);
        assert_abs_diff_eq!(e.tau.unwrap(), -0.099634237476790377, epsilon = 1e-15);
        assert_abs_diff_eq!(e.t1.unwrap(), 1.9062759693166413, epsilon = 1e-14);
        assert_abs_diff_eq!(e.t2.unwrap(), 0.52458301740984459, epsilon = 1e-14);
        assert_abs_diff_eq!(e.re_lo, -0.81312908387506185, epsilon = 1e-14);
        assert_abs_diff_eq!(e.re_hi, 0.58303366856414975, epsilon = 1e-14);
        assert_abs_diff_eq!(e.im_hi, 0.74495688199170556, epsilon = 1e-14);
        assert_eq!(e.im_lo, -e.im_hi);
        assert_abs_diff_eq!(e.t1.unwrap() * e.t2.unwrap(), 1.0, epsilon = 1e-15);
        // the right real extreme is attained on the positive real axis
        let at_r = psi_eval(&p, Complex64::new(0.7, 0.0)).unwrap();
        assert_abs_diff_eq!(at_r.re, e.re_hi, epsilon = 1e-14);
        assert_abs_diff_eq!(at_r.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn envelope_symmetric_extremes_attained() {
        let p = PsiParams::symmetric(0.5).unwrap();
        let e = envelope(&p, 0.5).unwrap();
        assert_eq!(e.eta, None);
        assert_eq!(e.tau, None);
        assert_abs_diff_eq!(e.re_hi, (5.0f64 / 3.0).ln(), epsilon = 1e-15);
        assert_eq!(e.re_lo, -e.re_hi);
        // attained at z = r, z = -r, z = +- i r
        assert_abs_diff_eq!(
            psi_eval(&p, Complex64::new(0.5, 0.0)).unwrap().re,
            e.re_hi,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            psi_eval(&p, Complex64::new(0.0, 0.5)).unwrap().im,
            e.im_hi,
            epsilon = 1e-14
        );
    }

    #[test]
    fn envelope_contains_sampled_circle_tightly() {
        for p in [
            PsiParams::symmetric(0.8).unwrap(),
            PsiParams::conjugate_pair(0.5, FRAC_PI_3).unwrap(),
            PsiParams::conjugate_pair(0.9, 1.3).unwrap(),
        ] {
            for &r in &[0.35, 0.75, 0.97] {
                let e = envelope(&p, r).unwrap();
                let mut re_min = f64::INFINITY;
                let mut re_max = f64::NEG_INFINITY;
                let mut im_max = f64::NEG_INFINITY;
                for j in 0..4096 {
                    let th = 2.0 * PI * j as f64 / 4096.0;
                    let w = psi_eval(&p, Complex64::from_polar(r, th)).unwrap();
                    re_min = re_min.min(w.re);
                    re_max = re_max.max(w.re);
                    im_max = im_max.max(w.im);
                }
                // never violated, and each wall is nearly touched
                assert!(re_min >= e.re_lo - 1e-12);
                assert!(re_max <= e.re_hi + 1e-12);
                assert!(im_max <= e.im_hi + 1e-12);
                assert_abs_diff_eq!(re_min, e.re_lo, epsilon = 1e-4);
                assert_abs_diff_eq!(re_max, e.re_hi, epsilon = 1e-4);
                assert_abs_diff_eq!(im_max, e.im_hi, epsilon = 1e-4);
            }
        }
    }

    #[test]
    fn envelope_probe_points_stay_inside() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let sets = [
            PsiParams::symmetric(0.6).unwrap(),
            PsiParams::conjugate_pair(0.7, 1.0).unwrap(),
        ];
        for p in &sets {
            for &r in &[0.4, 0.9] {
                let e = envelope(p, r).unwrap();
                for _ in 0..500 {
                    let rho: f64 = rng.gen_range(0.0..=r);
                    let th: f64 = rng.gen_range(0.0..2.0 * PI);
                    let w = psi_eval(p, Complex64::from_polar(rho, th)).unwrap();
                    assert!(w.re >= e.re_lo - 1e-12 && w.re <= e.re_hi + 1e-12);
                    assert!(w.im >= e.im_lo - 1e-12 && w.im <= e.im_hi + 1e-12);
                }
            }
        }
    }

    #[test]
    fn envelope_degenerate_radii() {
        let p1 = PsiParams::symmetric(1.0).unwrap();
        let e = envelope(&p1, 1.0).unwrap();
        assert!(e.re_hi.is_infinite());
        assert_eq!(e.im_hi, FRAC_PI_4);

        let pc = PsiParams::conjugate_pair(1.0, FRAC_PI_3).unwrap();
        let e = envelope(&pc, 1.0).unwrap();
        assert!(e.im_hi.is_infinite());
        assert_abs_diff_eq!(
            e.re_hi,
            FRAC_PI_3 / (2.0 * FRAC_PI_3.sin()),
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            e.re_lo,
            (FRAC_PI_3 - PI) / (2.0 * FRAC_PI_3.sin()),
            epsilon = 1e-14
        );

        let p = PsiParams::symmetric(0.5).unwrap();
        assert!(envelope(&p, 0.0).is_err());
        assert!(envelope(&p, 1.0 + 1e-9).is_err());
        let e = envelope(&p, 1e-8).unwrap();
        assert_relative_eq!(e.re_hi, 1e-8, max_relative = 1e-6);
    }

    #[test]
    fn growth_spot_and_identities() {
        let p = PsiParams::symmetric(0.5).unwrap();
        let g = growth(&p, 0.5).unwrap();
        assert_abs_diff_eq!(g.upper, 0.827294745830290003, epsilon = 1e-13);
        assert_abs_diff_eq!(g.ratio_upper, 1.65458949166058, epsilon = 1e-11);
        // odd symmetry makes lower * upper = r^2 in symmetric mode
        assert_relative_eq!(g.lower * g.upper, 0.25, max_relative = 1e-12);
        assert_relative_eq!(g.ratio_lower * g.r, g.lower, max_relative = 1e-14);
        // shared distortion factor 1 + max|psi| with the max on the real axis
        let factor = 1.0 + (5.0f64 / 3.0).ln();
        assert_relative_eq!(g.deriv_upper, factor * g.ratio_upper, max_relative = 1e-10);
        assert_relative_eq!(g.deriv_lower, factor * g.ratio_lower, max_relative = 1e-10);
        assert_relative_eq!(g.length_upper, 2.0 * PI * 0.5 * g.deriv_upper, max_relative = 1e-15);
        assert_relative_eq!(g.length_lower, 2.0 * PI * 0.5 * g.deriv_lower, max_relative = 1e-15);
        assert!(g.lower < g.upper && g.deriv_lower < g.deriv_upper);

        assert!(growth(&p, 0.0).is_err());
        assert!(growth(&p, 1.0).is_err());
    }

    #[test]
    fn growth_monotone_in_radius() {
        let p = PsiParams::conjugate_pair(0.6, 1.1).unwrap();
        let mut prev_up = 0.0;
        let mut prev_lo = 0.0;
        for i in 1..=9 {
            let g = growth(&p, i as f64 / 10.0).unwrap();
            assert!(g.upper > prev_up);
            assert!(g.lower > prev_lo);
            prev_up = g.upper;
            prev_lo = g.lower;
        }
    }

    #[test]
    fn growth_bounds_hold_for_extremal_member() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for p in [
            PsiParams::symmetric(0.5).unwrap(),
            PsiParams::conjugate_pair(0.5, FRAC_PI_3).unwrap(),
        ] {
            for &r in &[0.3, 0.8] {
                let g = growth(&p, r).unwrap();
                for _ in 0..250 {
                    let th: f64 = rng.gen_range(0.0..2.0 * PI);
                    let v = extremal_eval(&p, Complex64::from_polar(r, th)).unwrap().norm();
                    assert!(v >= g.lower - 1e-10 && v <= g.upper + 1e-10);
                }
            }
        }
    }

    #[test]
    fn covering_spots() {
        assert_abs_diff_eq!(
            covering_constant(&PsiParams::symmetric(0.5).unwrap()),
            0.356773292695505865,
            epsilon = 1e-13
        );
        assert_abs_diff_eq!(
            covering_constant(&PsiParams::symmetric(1.0).unwrap()),
            (-PI * PI / 8.0).exp(),
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            covering_constant(&PsiParams::conjugate_pair(0.5, FRAC_PI_3).unwrap()),
            0.327881585599710967,
            epsilon = 1e-13
        );
        // small alpha limit approaches 1/e from the Koebe-like behavior of
        // psi -> z
        let tiny = covering_constant(&PsiParams::symmetric(0.01).unwrap());
        assert!(tiny > 0.36 && tiny < 0.37);
    }

    #[test]
    fn arg_bound_spot_and_domination() {
        let p = PsiParams::symmetric(0.5).unwrap();
        assert_abs_diff_eq!(arg_bound(&p, 0.5).unwrap(), 0.78619780031130979, epsilon = 1e-13);
        let r_univ = radii::univalence_radius(&p).unwrap().value;
        assert!(arg_bound(&p, r_univ + 1e-6).is_err());
        assert!(arg_bound(&p, 0.0).is_err());
        assert_abs_diff_eq!(arg_bound(&p, r_univ).unwrap(), FRAC_PI_2, epsilon = 1e-5);

        for p in [
            PsiParams::symmetric(0.5).unwrap(),
            PsiParams::conjugate_pair(0.5, FRAC_PI_3).unwrap(),
        ] {
            for &r in &[0.2, 0.5, 0.7] {
                let bound = arg_bound(&p, r).unwrap();
                assert!(bound < FRAC_PI_2);
                let mut worst = 0.0f64;
                for j in 0..2048 {
                    let th = 2.0 * PI * j as f64 / 2048.0;
                    let w = psi_eval(&p, Complex64::from_polar(r, th)).unwrap();
                    worst = worst.max((Complex64::new(1.0, 0.0) + w).arg().abs());
                }
                assert!(worst <= bound + 1e-12, "r={r} worst={worst} bound={bound}");
            }
        }
    }
}
