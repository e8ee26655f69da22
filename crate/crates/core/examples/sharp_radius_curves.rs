//! Booth and cosine-sine class radii: branch structure, sharpness, and
//! the crossover parameter where the binding wall of the image changes.

use psiab::geometry::{image_domain, PolygonIndex};
use psiab::radii::{alpha0_bs, alpha0_cs, booth_point, bs_radius, cs_radius};
use psiab::PsiParams;
use std::f64::consts::PI;

fn main() -> psiab::Result<()> {
    let p = PsiParams::symmetric(0.5)?;

    println!("booth-class radius over the class parameter a, sym alpha = 0.5");
    println!("  {:>5} {:>16} {:>11} {:>6}", "a", "radius", "branch", "sharp");
    for a in [0.05, 0.2, 0.4, 0.5, 0.6, 0.7, 0.9] {
        let r = bs_radius(&p, a)?;
        println!(
            "  {a:>5.2} {:>16.12} {:>11} {:>6}",
            r.value,
            format!("{:?}", r.branch),
            r.sharp
        );
    }

    println!("\ncosine-sine-class radius over a");
    for a in [0.05, 0.2, 0.4, 0.5, 0.7, 0.9] {
        let r = cs_radius(&p, a)?;
        println!(
            "  {a:>5.2} {:>16.12} {:>11} {:>6}",
            r.value,
            format!("{:?}", r.branch),
            r.sharp
        );
    }

    println!("\ncrossover alpha where the binding wall switches (a coupled to alpha)");
    let (a_bs, bs_exact) = alpha0_bs(&p)?;
    let (a_cs, cs_exact) = alpha0_cs(&p)?;
    println!("  booth       : {a_bs:.9}  (bisection converged: {bs_exact})");
    println!("  cosine-sine : {a_cs:.9}  (bisection converged: {cs_exact})");

    println!("\nthe sharp booth curve touches the image boundary");
    let r0 = bs_radius(&p, 0.5)?.value;
    let idx = PolygonIndex::build(&image_domain(&p, 0.0, 4096)?)?;
    let mut worst = f64::INFINITY;
    let mut at = 0.0;
    for j in 0..4096 {
        let th = 2.0 * PI * j as f64 / 4096.0;
        let m = idx.signed_margin(booth_point(0.5, r0, th));
        if m < worst {
            worst = m;
            at = th;
        }
    }
    println!("  min margin {worst:+.3e} at theta = {at:.4} (zero means touching)");
    Ok(())
}
