//! The brute-force side of the crate: bisection, adaptive quadrature,
//! circle maxima, and the containment-radius search, each pitted
//! against a closed form.

use num_complex::Complex64;
use psiab::geometry::image_domain;
use psiab::oracle::{containment_radius, find_root, integrate, max_on_circle};
use psiab::radii::{booth_point, bs_radius};
use psiab::PsiParams;
use std::f64::consts::PI;

fn main() -> psiab::Result<()> {
    println!("bisection: solve tanh(x) = 1/2");
    let root = find_root(|x| x.tanh() - 0.5, 0.0, 2.0, 1e-14)?;
    println!(
        "  root {:.15} vs atanh(1/2) {:.15} ({} iterations)",
        root.root,
        0.5f64.atanh(),
        root.iterations
    );

    println!("\nquadrature: int_0^1 atanh(t)/t dt = pi^2/8");
    let q = integrate(|t| if t == 0.0 { 1.0 } else { t.atanh() / t }, 0.0, 1.0, 1e-13)?;
    println!("  {q:.15} vs {:.15}", PI * PI / 8.0);

    println!("\ncircle maximum: max Re psi on |z| = 0.7 lands on the real axis");
    let p = PsiParams::symmetric(0.5)?;
    let (theta, value) = max_on_circle(
        |t| {
            psiab::complexfn::psi_eval(&p, Complex64::from_polar(0.7, t))
                .map(|w| w.re)
                .unwrap_or(f64::NEG_INFINITY)
        },
        1024,
    )?;
    let direct = psiab::complexfn::psi_eval(&p, Complex64::new(0.7, 0.0))?.re;
    println!("  max {value:.15} at theta = {theta:.2e}; psi(0.7) = {direct:.15}");

    println!("\ncontainment radius: grow the booth curve until it touches the image");
    let d = image_domain(&p, 0.0, 4096)?;
    let sampled = containment_radius(|r, th| booth_point(0.5, r, th), &d, 1e-7)?;
    let closed = bs_radius(&p, 0.5)?.value;
    println!("  sampled {sampled:.10} vs closed form {closed:.10}");
    Ok(())
}
