//! Radii of starlikeness and strong starlikeness as the order varies.

use psiab::radii::{ss_radius, starlike_radius, univalence_radius};
use psiab::PsiParams;
use std::f64::consts::FRAC_PI_3;

fn main() -> psiab::Result<()> {
    let sym = PsiParams::symmetric(0.5)?;
    let conj = PsiParams::conjugate_pair(0.5, FRAC_PI_3)?;

    println!("starlikeness of order delta");
    println!("  {:>5} {:>16} {:>10} {:>16} {:>10}", "delta", "sym radius", "branch", "conj radius", "branch");
    for i in 0..8 {
        let delta = i as f64 / 8.0;
        let a = starlike_radius(&sym, delta)?;
        let b = starlike_radius(&conj, delta)?;
        println!(
            "  {delta:>5.3} {:>16.12} {:>10} {:>16.12} {:>10}",
            a.value,
            format!("{:?}", a.branch),
            b.value,
            format!("{:?}", b.branch)
        );
    }

    println!("\nunivalence radii (order zero), with measured sharpness");
    for (label, p) in [("sym ", &sym), ("conj", &conj)] {
        let r = univalence_radius(p)?;
        println!("  {label}: {:.12}  sharp: {}", r.value, r.sharp);
    }

    println!("\nstrong starlikeness of order beta, sym alpha = 0.5");
    println!("  {:>5} {:>16} {:>12}", "beta", "radius", "residual");
    for beta in [0.1, 0.25, 0.5, 0.75, 0.9, 1.0] {
        let r = ss_radius(&sym, beta)?;
        println!("  {beta:>5.2} {:>16.12} {:>12.2e}", r.value, r.equation_residual);
    }
    Ok(())
}
