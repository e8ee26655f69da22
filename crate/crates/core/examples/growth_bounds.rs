//! Growth, distortion, arclength, and covering bounds for the class,
//! plus the tight rectangle around psi on each circle.

use psiab::bounds::{covering_constant, envelope, growth};
use psiab::PsiParams;
use std::f64::consts::FRAC_PI_3;

fn main() -> psiab::Result<()> {
    let p = PsiParams::symmetric(0.5)?;

    println!("growth and distortion, sym alpha = 0.5");
    println!("  {:>4} {:>12} {:>12} {:>12} {:>12}", "r", "|f| lower", "|f| upper", "|f'| lower", "|f'| upper");
    for i in 1..=9 {
        let r = i as f64 / 10.0;
        let g = growth(&p, r)?;
        println!(
            "  {r:>4.1} {:>12.8} {:>12.8} {:>12.8} {:>12.8}",
            g.lower, g.upper, g.deriv_lower, g.deriv_upper
        );
    }

    println!("\narclength of the image of |z| = r stays within");
    for r in [0.25, 0.5, 0.75] {
        let g = growth(&p, r)?;
        println!("  r = {r:.2}: [{:.8}, {:.8}]", g.length_lower, g.length_upper);
    }

    println!("\nrectangle bounds for psi itself, conj alpha = 0.5 gamma = pi/3");
    let q = PsiParams::conjugate_pair(0.5, FRAC_PI_3)?;
    for r in [0.25, 0.5, 0.7, 1.0] {
        let e = envelope(&q, r)?;
        println!(
            "  r = {r:.2}: Re in [{:+.8}, {:+.8}], |Im| <= {:.8}",
            e.re_lo, e.re_hi, e.im_hi
        );
    }

    println!("\nevery class member covers a centered disk of radius");
    for (label, p) in [
        ("sym  alpha=0.5", PsiParams::symmetric(0.5)?),
        ("sym  alpha=1.0", PsiParams::symmetric(1.0)?),
        ("conj alpha=0.5 gamma=pi/3", PsiParams::conjugate_pair(0.5, FRAC_PI_3)?),
    ] {
        println!("  {label}: {:.12}", covering_constant(&p));
    }
    Ok(())
}
