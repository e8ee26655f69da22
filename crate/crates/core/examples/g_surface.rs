//! The whole-disk order surface g(alpha, gamma) and its threshold angles.

use psiab::radii::{g_func, gamma0, gamma_prime, thresholds};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

fn main() -> psiab::Result<()> {
    println!("g at the strip edge alpha = 1");
    for (label, ga) in [("pi/6", FRAC_PI_2 / 3.0), ("pi/4", FRAC_PI_4), ("pi/2", FRAC_PI_2)] {
        println!("  g(1, {label}) = {:+.12}", g_func(1.0, ga)?);
    }
    println!("  the corner value 1 - pi/4 = {:+.12} is the supremum", 1.0 - FRAC_PI_4);

    println!("\ngamma0: the angle where g(1, .) changes sign");
    println!("  gamma0 = {:.15}", gamma0());

    println!("\ngamma'(alpha): sign change of g(alpha, .) for fixed alpha");
    println!("  {:>5} {:>18} {:>14}", "alpha", "gamma'", "g at gamma'");
    for al in [0.25, 0.5, 0.75, 0.9, 0.99] {
        let gp = gamma_prime(al)?;
        println!("  {al:>5.2} {gp:>18.12} {:>14.2e}", g_func(al, gp)?);
    }

    println!("\nthreshold summary at alpha = 0.5");
    let th = thresholds(0.5)?;
    println!(
        "  gamma0 = {:.12}, gamma' = {:.12}, g(alpha, pi/2) = {:+.12}",
        th.gamma0, th.gamma_prime, th.g_star
    );

    println!("\ncoarse maximum over the open rectangle (0,1) x (0, pi/2)");
    let n = 60;
    let mut best = f64::NEG_INFINITY;
    let mut at = (0.0, 0.0);
    for i in 1..=n {
        let al = i as f64 / (n + 1) as f64;
        for j in 1..=n {
            let ga = FRAC_PI_2 * j as f64 / (n + 1) as f64;
            let g = g_func(al, ga)?;
            if g > best {
                best = g;
                at = (al, ga);
            }
        }
    }
    println!("  max g = {best:.12} at (alpha, gamma) = ({:.4}, {:.4})", at.0, at.1);
    Ok(())
}
