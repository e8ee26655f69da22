//! Evaluate psi pointwise and through its series, for both parameter modes.

use num_complex::Complex64;
use psiab::complexfn::{psi_coeff, psi_eval};
use psiab::PsiParams;
use std::f64::consts::FRAC_PI_3;

fn main() -> psiab::Result<()> {
    let sym = PsiParams::symmetric(0.5)?;
    let conj = PsiParams::conjugate_pair(0.5, FRAC_PI_3)?;

    println!("pointwise values");
    for (label, p) in [("sym  alpha=0.5", &sym), ("conj alpha=0.5 gamma=pi/3", &conj)] {
        for z in [
            Complex64::new(0.3, 0.4),
            Complex64::new(-0.7, 0.1),
            Complex64::new(0.0, 0.9),
        ] {
            let w = psi_eval(p, z)?;
            println!("  {label}  psi({:+.2}{:+.2}i) = {:+.12}{:+.12}i", z.re, z.im, w.re, w.im);
        }
    }

    println!("\nseries coefficients C_n (the expansion is sum (-1)^(n+1) C_n z^n)");
    print!("  n:   ");
    (1..=9).for_each(|n| print!("{n:>13}"));
    println!();
    for (label, p) in [("sym ", &sym), ("conj", &conj)] {
        print!("  {label}:");
        for n in 1..=9 {
            print!("{:>13.8}", psi_coeff(p, n)?);
        }
        println!();
    }

    println!("\npartial sums converge to the closed form at z = 0.3+0.4i");
    let z = Complex64::new(0.3, 0.4);
    let exact = psi_eval(&conj, z)?;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut zp = Complex64::new(1.0, 0.0);
    for n in 1..=40u32 {
        zp *= z;
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        sum += sign * psi_coeff(&conj, n)? * zp;
        if n % 8 == 0 {
            println!("  N = {n:>2}: error {:.3e}", (sum - exact).norm());
        }
    }
    Ok(())
}
