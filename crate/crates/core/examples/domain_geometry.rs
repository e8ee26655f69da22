//! The image psi(D): half-axes, strip degenerations at alpha = 1, and
//! point containment queries against the sampled boundary.

use num_complex::Complex64;
use psiab::geometry::{contains, disk_radii, domain_axes, image_domain, DomainVariant};
use psiab::PsiParams;
use std::f64::consts::{FRAC_PI_3, FRAC_PI_2};

fn main() -> psiab::Result<()> {
    println!("half-axes of psi(D)");
    for al in [0.25, 0.5, 0.75, 0.99] {
        let ax = domain_axes(&PsiParams::symmetric(al)?);
        println!("  sym  alpha={al:.2}: ellipse-like, half-width {:.6}, half-height {:.6}", ax.h1, ax.h2);
    }
    for al in [0.5, 0.99] {
        let ax = domain_axes(&PsiParams::conjugate_pair(al, FRAC_PI_3)?);
        println!(
            "  conj alpha={al:.2} gamma=pi/3: center {:+.6}, half-axes ({:.6}, {:.6})",
            ax.k, ax.k1, ax.k2
        );
    }

    println!("\nalpha = 1 degenerates to strips");
    let ax = domain_axes(&PsiParams::symmetric(1.0)?);
    println!("  sym : horizontal strip of half-height {:.12} (pi/4), width {}", ax.h2, ax.h1);
    let d = image_domain(&PsiParams::conjugate_pair(1.0, FRAC_PI_2)?, 0.0, 64)?;
    if let DomainVariant::VerticalStrip { u_lo, u_hi } = d.variant {
        println!("  conj gamma=pi/2: vertical strip, Re psi within [{u_lo:+.6}, {u_hi:+.6}]");
    }

    println!("\ncontainment queries, sym alpha = 0.5");
    let p = PsiParams::symmetric(0.5)?;
    let d = image_domain(&p, 0.0, 4096)?;
    for w in [
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(1.09, 0.0),
        Complex64::new(1.2, 0.0),
        Complex64::new(0.5, 0.8),
    ] {
        let rep = contains(&d, w)?;
        println!(
            "  {:+.2}{:+.2}i  inside: {:<5}  margin {:+.4e}  ({:?})",
            w.re, w.im, rep.inside, rep.margin, rep.method
        );
    }

    println!("\nlargest centered disk inside, smallest around, sym alpha = 0.5");
    let (inner, outer) = disk_radii(&p);
    println!("  {inner:.12} <= |psi| extent <= {outer:.12}");
    Ok(())
}
