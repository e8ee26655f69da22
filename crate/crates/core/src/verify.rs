//! Self-check suite: each numbered check exercises one documented
//! guarantee of the crate against an independent brute-force computation
//! and reports a single pass/fail verdict with a one-line detail.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_6, PI};
use std::time::Instant;

use crate::complexfn::{convexity_margin, extremal_eval, psi_coeff, psi_eval, Mode, PsiParams};
use crate::geometry::{disk_radii, domain_axes, image_domain, PolygonIndex};
use crate::{bounds, oracle, radii, Result};

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check<F>(name: &str, f: F) -> CheckResult
where
    F: FnOnce() -> Result<(bool, String)>,
{
    match f() {
        Ok((passed, detail)) => CheckResult { name: name.to_string(), passed, detail },
        Err(e) => CheckResult {
            name: name.to_string(),
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

/// Threshold angle solver lands in its proven window, fast.
pub fn criterion_1() -> CheckResult {
    check("gamma0 window and speed", || {
        let _warm = radii::gamma0();
        let t0 = Instant::now();
        let g0 = radii::gamma0();
        let el = t0.elapsed();
        let ok = (1.2456..=1.2466).contains(&g0) && el.as_secs_f64() < 1e-3;
        Ok((ok, format!("gamma0 = {g0:.12} in {:.1} us", el.as_secs_f64() * 1e6)))
    })
}

/// Whole-disk order surface: corner value and global supremum.
pub fn criterion_2() -> CheckResult {
    check("order surface supremum", || {
        let sup = 1.0 - FRAC_PI_4;
        let corner = radii::g_func(1.0, FRAC_PI_2)?;
        let n = 200;
        let mut worst = f64::NEG_INFINITY;
        let mut at = (0.0, 0.0);
        for i in 1..=n {
            let al = i as f64 / (n + 1) as f64;
            for j in 1..=n {
                let ga = FRAC_PI_2 * j as f64 / (n + 1) as f64;
                let v = radii::g_func(al, ga)?;
                if v > worst {
                    worst = v;
                    at = (al, ga);
                }
            }
        }
        let ok = (corner - sup).abs() <= 1e-12 && worst <= sup + 1e-9;
        Ok((ok, format!(
            "corner residual {:.2e}, grid max {worst:.12} at (alpha, gamma) = ({:.3}, {:.3}) vs sup {sup:.12}",
            (corner - sup).abs(), at.0, at.1
        )))
    })
}

fn rational_vs_oracle(
    kind: &str,
    samples: usize,
    agree_tol: f64,
) -> Result<(bool, String)> {
    let p = PsiParams::symmetric(0.5)?;
    let a = 0.5;
    let t0 = Instant::now();
    let (closed, expect) = match kind {
        "booth" => (radii::bs_radius(&p, a)?, 0.7716),
        _ => (radii::cs_radius(&p, a)?, 0.5869),
    };
    let d = image_domain(&p, 0.0, samples)?;
    let curve = |r: f64, th: f64| match kind {
        "booth" => radii::booth_point(a, r, th),
        _ => radii::cs_point(a, r, th),
    };
    let sampled = oracle::containment_radius(curve, &d, 1e-6)?;
    let el = t0.elapsed().as_secs_f64();
    let ok = (closed.value - expect).abs() <= 0.005
        && (closed.value - sampled).abs() <= agree_tol
        && el < 2.0;
    Ok((ok, format!(
        "closed {:.10} vs sampled {:.10} (gap {:.2e}), {} ms",
        closed.value,
        sampled,
        (closed.value - sampled).abs(),
        (el * 1e3).round()
    )))
}

/// Booth-class radius: closed form against the containment-radius oracle.
pub fn criterion_3() -> CheckResult {
    check("booth radius vs containment oracle", || rational_vs_oracle("booth", 4096, 5e-4))
}

/// Cosine-sine-class radius: closed form against the oracle.
pub fn criterion_4() -> CheckResult {
    check("cosine-sine radius vs containment oracle", || {
        rational_vs_oracle("cossin", 4096, 5e-4)
    })
}

/// Strip-case inner reach identities at alpha = 1.
pub fn criterion_5() -> CheckResult {
    check("strip inner reach identities", || {
        let (ri, _) = disk_radii(&PsiParams::symmetric(1.0)?);
        let mut worst = (ri - FRAC_PI_4).abs();
        for ga in [FRAC_PI_6, FRAC_PI_4, FRAC_PI_2] {
            let (ri, _) = disk_radii(&PsiParams::conjugate_pair(1.0, ga)?);
            worst = worst.max((ri - ga / (2.0 * ga.sin())).abs());
        }
        Ok((worst <= 1e-12, format!("worst identity residual {worst:.2e}")))
    })
}

fn sampled_order(p: &PsiParams, r: f64) -> f64 {
    let q = *p;
    let (_, neg) = oracle::max_on_circle(
        move |t| {
            psi_eval(&q, Complex64::from_polar(r, t))
                .map(|w| -w.re)
                .unwrap_or(f64::NEG_INFINITY)
        },
        512,
    )
    .expect("fixed sample count");
    1.0 - neg
}

/// Symmetric starlike radius: closed form against a root of the sampled
/// minimum of Re(1 + psi).
pub fn criterion_6() -> CheckResult {
    check("starlike closed form vs sampled root", || {
        let mut worst = 0.0f64;
        let mut at = (0.0, 0.0);
        for &al in &[0.25, 0.5, 0.75, 1.0] {
            let p = PsiParams::symmetric(al)?;
            for &delta in &[0.0, 0.25, 0.5, 0.75] {
                let closed = radii::starlike_radius(&p, delta)?.value;
                let root = oracle::find_root(
                    |r| sampled_order(&p, r) - delta,
                    1e-6,
                    1.0 - 1e-9,
                    1e-9,
                )?
                .root;
                let gap = (closed - root).abs();
                if gap > worst {
                    worst = gap;
                    at = (al, delta);
                }
            }
        }
        Ok((worst <= 1e-6, format!(
            "worst closed-vs-sampled gap {worst:.2e} at (alpha, delta) = {at:?}"
        )))
    })
}

/// Extremal function against its own defining quadrature, and the strip
/// covering constant.
pub fn criterion_7() -> CheckResult {
    check("extremal function vs quadrature", || {
        let sets = [
            PsiParams::symmetric(0.25)?,
            PsiParams::symmetric(0.5)?,
            PsiParams::symmetric(0.9)?,
            PsiParams::symmetric(1.0)?,
            PsiParams::conjugate_pair(0.5, PI / 3.0)?,
            PsiParams::conjugate_pair(0.9, 1.2)?,
        ];
        let mut worst = 0.0f64;
        for p in &sets {
            for i in 1..=9 {
                let r = i as f64 / 10.0;
                let q = *p;
                let integral = oracle::integrate(
                    move |t| {
                        psi_eval(&q, Complex64::new(t, 0.0))
                            .map(|w| w.re / t)
                            .unwrap_or(0.0)
                    },
                    0.0,
                    r,
                    1e-12,
                )?;
                let direct = extremal_eval(p, Complex64::new(r, 0.0))?.re;
                worst = worst.max((direct - r * integral.exp()).abs());
            }
        }
        let cover = bounds::covering_constant(&PsiParams::symmetric(1.0)?);
        let cover_gap = (cover - (-PI * PI / 8.0).exp()).abs();
        let ok = worst <= 1e-10 && cover_gap <= 1e-10;
        Ok((ok, format!(
            "worst quadrature gap {worst:.2e}, covering residual {cover_gap:.2e}"
        )))
    })
}

/// Coefficient laws: normalization, parity, bound, realness, and the
/// truncated series against direct evaluation.
pub fn criterion_8() -> CheckResult {
    check("coefficient laws and series", || {
        let sets = [
            PsiParams::symmetric(0.25)?,
            PsiParams::symmetric(0.5)?,
            PsiParams::symmetric(0.75)?,
            PsiParams::symmetric(0.9)?,
            PsiParams::symmetric(1.0)?,
            PsiParams::conjugate_pair(0.3, 0.2)?,
            PsiParams::conjugate_pair(0.5, PI / 3.0)?,
            PsiParams::conjugate_pair(0.8, 1.1)?,
            PsiParams::conjugate_pair(1.0, FRAC_PI_2)?,
            PsiParams::conjugate_pair(0.99, 1.5)?,
        ];
        let mut ok = true;
        let mut worst_series = 0.0f64;
        for p in &sets {
            ok &= psi_coeff(p, 1)? == 1.0;
            if p.mode == Mode::Symmetric {
                ok &= psi_coeff(p, 2)? == 0.0;
            }
            for n in 1..=100u32 {
                let cn = psi_coeff(p, n)?;
                ok &= cn.abs() <= p.alpha.powi(n as i32 - 1) * (1.0 + 1e-14);
                if n <= 40 {
                    let zc = (p.a.powu(n) - p.b.powu(n)) / (n as f64 * (p.a - p.b));
                    ok &= zc.im.abs() <= 1e-13 && (zc.re - cn).abs() <= 1e-13;
                }
            }
            for &rad in &[0.45, 0.9] {
                for j in 0..12 {
                    let z = Complex64::from_polar(rad, 2.0 * PI * j as f64 / 12.0);
                    let mut sum = Complex64::new(0.0, 0.0);
                    let mut zp = Complex64::new(1.0, 0.0);
                    for n in 1..=400u32 {
                        zp *= z;
                        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
                        sum += sign * psi_coeff(p, n)? * zp;
                    }
                    let gap = (psi_eval(p, z)? - sum).norm();
                    worst_series = worst_series.max(gap);
                }
            }
        }
        ok &= worst_series <= 1e-12;
        Ok((ok, format!("worst series-vs-direct gap {worst_series:.2e}")))
    })
}

/// Convexity of psi: Re(1 + z psi''/psi') positive on a dense polar grid.
pub fn criterion_9() -> CheckResult {
    check("convexity margin grid", || {
        let sets = [
            PsiParams::symmetric(0.25)?,
            PsiParams::symmetric(0.5)?,
            PsiParams::symmetric(0.75)?,
            PsiParams::symmetric(0.9)?,
            PsiParams::symmetric(0.99)?,
            PsiParams::conjugate_pair(0.3, 0.4)?,
            PsiParams::conjugate_pair(0.5, PI / 3.0)?,
            PsiParams::conjugate_pair(0.75, 1.2)?,
            PsiParams::conjugate_pair(0.9, FRAC_PI_4)?,
            PsiParams::conjugate_pair(0.99, 1.5)?,
        ];
        let mut least = f64::INFINITY;
        for p in &sets {
            for i in 0..100 {
                let r = 0.999 * (i as f64 + 0.5) / 100.0;
                for j in 0..100 {
                    let z = Complex64::from_polar(r, 2.0 * PI * j as f64 / 100.0);
                    least = least.min(convexity_margin(p, z));
                }
            }
        }
        Ok((least > 0.0, format!("least margin {least:.3e} over 10 x 10^4 points")))
    })
}

/// Envelope attainment on the positive real axis and invariance under
/// random Schwarz-type probes.
pub fn criterion_10() -> CheckResult {
    check("envelope attainment and probes", || {
        let sets = [
            PsiParams::symmetric(0.5)?,
            PsiParams::conjugate_pair(0.5, PI / 3.0)?,
            PsiParams::conjugate_pair(0.9, 1.2)?,
        ];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
        let mut worst_attain = 0.0f64;
        let mut violations = 0usize;
        for p in &sets {
            for &r in &[0.25, 0.5, 0.75, 0.99] {
                let e = bounds::envelope(p, r)?;
                let at_r = psi_eval(p, Complex64::new(r, 0.0))?.re;
                worst_attain = worst_attain.max((at_r - e.re_hi).abs());
                for _ in 0..1000 {
                    // omega(z) = e^{i phi} z (z + a)/(1 + conj(a) z) is a
                    // Schwarz function, so |omega(z)| <= |z| = r
                    let rho: f64 = rng.gen_range(0.0..0.95);
                    let a = Complex64::from_polar(rho, rng.gen_range(0.0..2.0 * PI));
                    let phi: f64 = rng.gen_range(0.0..2.0 * PI);
                    let z = Complex64::from_polar(r, rng.gen_range(0.0..2.0 * PI));
                    let w = Complex64::from_polar(1.0, phi) * z * (z + a)
                        / (Complex64::new(1.0, 0.0) + a.conj() * z);
                    let v = psi_eval(p, w)?;
                    if v.re < e.re_lo - 1e-12
                        || v.re > e.re_hi + 1e-12
                        || v.im < e.im_lo - 1e-12
                        || v.im > e.im_hi + 1e-12
                    {
                        violations += 1;
                    }
                }
            }
        }
        let ok = worst_attain <= 1e-8 && violations == 0;
        Ok((ok, format!(
            "worst attainment gap {worst_attain:.2e}, {violations} probe violations of 12000"
        )))
    })
}

fn ellipse_radial_gap(p: &PsiParams, thetas: usize) -> Result<(f64, f64)> {
    let ax = domain_axes(p);
    let (cx, sa, sb) = match p.mode {
        Mode::Symmetric => (0.0, ax.h1, ax.h2),
        Mode::ConjugatePair => (ax.k, ax.k1, ax.k2),
    };
    let mut max_gap = 0.0f64;
    let mut min_gap = f64::INFINITY;
    for j in 0..thetas {
        let th = 2.0 * PI * j as f64 / thetas as f64;
        let w = psi_eval(p, Complex64::from_polar(1.0 - 1e-9, th))?;
        let d = Complex64::new(w.re - cx, w.im);
        let phi = d.arg();
        let er = sa * sb / ((sb * phi.cos()).hypot(sa * phi.sin()));
        let gap = d.norm() - er;
        max_gap = max_gap.max(gap);
        min_gap = min_gap.min(gap);
    }
    Ok((min_gap, max_gap))
}

/// Ellipse shape model against the authoritative polygon: the true
/// boundary never dips inside the inscribed ellipse, and the two
/// containment verdicts never contradict with real margins.
pub fn criterion_11() -> CheckResult {
    check("ellipse model vs polygon verdicts", || {
        let mut details = Vec::new();
        let mut ok = true;
        for &al in &[0.25, 0.5, 0.75] {
            let p = PsiParams::symmetric(al)?;
            let (min_gap, max_gap) = ellipse_radial_gap(&p, 2048)?;
            ok &= min_gap >= -1e-8;
            details.push(format!("alpha {al}: radial gap [{min_gap:.2e}, {max_gap:.2e}]"));

            let ax = domain_axes(&p);
            let d = image_domain(&p, 0.0, 4096)?;
            let idx = PolygonIndex::build(&d)?;
            let mut contradictions = 0usize;
            for &scale in &[0.9, 0.99, 0.999] {
                for j in 0..2048 {
                    let phi = 2.0 * PI * j as f64 / 2048.0;
                    let er = ax.h1 * ax.h2 / ((ax.h2 * phi.cos()).hypot(ax.h1 * phi.sin()));
                    let w = Complex64::from_polar(scale * er, phi);
                    // analytic margin: approximate distance inside the ellipse
                    let analytic = (1.0 - scale) * er.min(ax.h2);
                    let poly = idx.signed_margin(w);
                    if analytic > 1e-3 && poly < -1e-3 {
                        contradictions += 1;
                    }
                }
            }
            ok &= contradictions == 0;
            if contradictions > 0 {
                details.push(format!("alpha {al}: {contradictions} contradictions"));
            }
        }
        Ok((ok, details.join("; ")))
    })
}

/// Run every numbered check. `samples` sets the polygon resolution for
/// the containment oracles and `tol` overrides their agreement tolerance.
pub fn run_all(samples: usize, tol: Option<f64>) -> Vec<CheckResult> {
    let agree = tol.unwrap_or(5e-4);
    vec![
        criterion_1(),
        criterion_2(),
        check("booth radius vs containment oracle", || {
            rational_vs_oracle("booth", samples, agree)
        }),
        check("cosine-sine radius vs containment oracle", || {
            rational_vs_oracle("cossin", samples, agree)
        }),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
        criterion_11(),
    ]
}

/// Quick radius consistency battery at one alpha.
pub fn run_radii(alpha: f64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    out.push(check("threshold ordering", || {
        if alpha >= 1.0 {
            return Ok((true, "skipped at alpha = 1".into()));
        }
        let th = radii::thresholds(alpha)?;
        let res = radii::g_func(alpha, th.gamma_prime)?.abs();
        let ok = th.gamma0 < th.gamma_prime && th.gamma_prime < FRAC_PI_2 && res <= 1e-10;
        Ok((ok, format!(
            "gamma0 {:.6} < gamma_prime {:.6} < pi/2, zero residual {res:.2e}",
            th.gamma0, th.gamma_prime
        )))
    }));
    out.push(check("symmetric starlike residual and sharpness", || {
        let p = PsiParams::symmetric(alpha)?;
        let r = radii::starlike_radius(&p, 0.25)?;
        let ok = r.equation_residual <= 1e-10 && r.sharp;
        Ok((ok, format!(
            "value {:.10}, residual {:.2e}, sharp {}",
            r.value, r.equation_residual, r.sharp
        )))
    }));
    out.push(check("conjugate starlike branch", || {
        let p = PsiParams::conjugate_pair(alpha, PI / 3.0)?;
        let g = radii::g_func(alpha, PI / 3.0)?;
        let r = radii::starlike_radius(&p, 0.25)?;
        let ok = if 0.25 <= g + 1e-13 {
            r.branch == radii::Branch::WholeDisk && r.value == 1.0
        } else {
            r.branch == radii::Branch::RootOfEq && r.equation_residual <= 1e-10
        };
        Ok((ok, format!(
            "g = {g:.6}, branch {:?}, value {:.10}",
            r.branch, r.value
        )))
    }));
    out.push(check("radius ordering in the order parameter", || {
        let p = PsiParams::symmetric(alpha)?;
        let mut prev = f64::INFINITY;
        let mut ok = true;
        for i in 0..8 {
            let v = radii::starlike_radius(&p, i as f64 / 8.0)?.value;
            ok &= v <= prev + 1e-12;
            prev = v;
        }
        let u = radii::univalence_radius(&p)?.value;
        let s = radii::ss_radius(&p, 0.5)?.value;
        ok &= s <= u + 1e-12;
        Ok((ok, format!("univalence {u:.10}, strong-starlike(1/2) {s:.10}")))
    }));
    if alpha < 1.0 {
        out.push(check("rational class radii residuals", || {
            let p = PsiParams::symmetric(alpha)?;
            let b = radii::bs_radius(&p, alpha)?;
            let c = radii::cs_radius(&p, alpha)?;
            let ok = b.equation_residual <= 1e-8 && c.equation_residual <= 1e-8;
            Ok((ok, format!(
                "booth {:.10} ({:?}), cosine-sine {:.10} ({:?})",
                b.value, b.branch, c.value, c.branch
            )))
        }));
    }
    out
}

/// Ellipse-model fidelity report at one alpha.
pub fn run_ellipse(alpha: f64, report: bool) -> Vec<CheckResult> {
    vec![check("ellipse model fidelity", || {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Ok((false, format!("alpha = {alpha} must lie in (0, 1) for a bounded image")));
        }
        let p = PsiParams::symmetric(alpha)?;
        let (min_gap, max_gap) = ellipse_radial_gap(&p, 4096)?;
        let mut detail = format!(
            "boundary radial gap to inscribed ellipse in [{min_gap:.3e}, {max_gap:.3e}]"
        );
        if report {
            let ax = domain_axes(&p);
            detail.push_str(&format!(
                "; half-axes ({:.10}, {:.10})",
                ax.h1, ax.h2
            ));
            for j in 0..8 {
                let th = FRAC_PI_2 * j as f64 / 8.0;
                let w = psi_eval(&p, Complex64::from_polar(1.0 - 1e-9, th))?;
                detail.push_str(&format!("; theta {th:.3}: {:.6}+{:.6}i", w.re, w.im));
            }
        }
        Ok((min_gap >= -1e-8, detail))
    })]
}
