//! The extremal class member built from dilogarithms, checked against
//! its defining integral and sampled along the unit circle.

use num_complex::Complex64;
use psiab::complexfn::{extremal_eval, psi_eval};
use psiab::oracle::integrate;
use psiab::PsiParams;
use std::f64::consts::{FRAC_PI_3, PI};

fn main() -> psiab::Result<()> {
    let p = PsiParams::symmetric(0.5)?;

    println!("f along the positive real axis, sym alpha = 0.5");
    println!("  {:>4} {:>20} {:>14}", "r", "f(r)", "integral gap");
    for i in 1..=9 {
        let r = i as f64 / 10.0;
        let f = extremal_eval(&p, Complex64::new(r, 0.0))?.re;
        let q = integrate(
            |t| psi_eval(&p, Complex64::new(t, 0.0)).map(|w| w.re / t).unwrap_or(0.0),
            0.0,
            r,
            1e-12,
        )?;
        println!("  {r:>4.1} {f:>20.15} {:>14.2e}", (f - r * q.exp()).abs());
    }

    println!("\nodd symmetry ties the two walls: (-f(-r)) * f(r) = r^2");
    for r in [0.3, 0.6, 0.9] {
        let lo = -extremal_eval(&p, Complex64::new(-r, 0.0))?.re;
        let hi = extremal_eval(&p, Complex64::new(r, 0.0))?.re;
        println!("  r = {r:.1}: {:.15} vs {:.15}", lo * hi, r * r);
    }

    println!("\nboundary samples of f for the conjugate-pair mode");
    let q = PsiParams::conjugate_pair(0.5, FRAC_PI_3)?;
    for j in 0..8 {
        let th = 2.0 * PI * j as f64 / 8.0;
        let w = extremal_eval(&q, Complex64::from_polar(1.0, th))?;
        println!("  theta = {th:.4}: {:+.10}{:+.10}i  (|f| = {:.10})", w.re, w.im, w.norm());
    }
    Ok(())
}
