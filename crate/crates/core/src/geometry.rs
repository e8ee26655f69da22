//! Image-domain geometry: half-axes of the image of the unit disk under
//! psi, a sampled boundary polygon, point containment, and the inscribed /
//! circumscribed disk radii with the disk criteria built on them.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_4, PI};

use crate::bounds::conj_parts;
use crate::complexfn::{psi_eval, Mode, PsiParams};
use crate::{Error, Result};

/// Half-axis data of psi(D). Symmetric mode fills h1 (real half-width) and
/// h2 (imaginary half-height) about center 0; conjugate-pair mode fills the
/// real center k and the half-axes k1 (real), k2 (imaginary) about it.
/// Fields not used by the mode are NaN. `finite` is false when alpha = 1
/// and the image degenerates to a strip (one half-axis infinite).
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct DomainAxes {
    pub mode: Mode,
    pub h1: f64,
    pub h2: f64,
    pub k: f64,
    pub k1: f64,
    pub k2: f64,
    pub finite: bool,
}

pub fn domain_axes(p: &PsiParams) -> DomainAxes {
    match p.mode {
        Mode::Symmetric => {
            let al = p.alpha;
            let h1 = if al < 1.0 {
                ((1.0 + al) / (1.0 - al)).ln() / (2.0 * al)
            } else {
                f64::INFINITY
            };
            let h2 = (2.0 * al / (1.0 + al * al)).asin() / (2.0 * al);
            DomainAxes {
                mode: p.mode,
                h1,
                h2,
                k: f64::NAN,
                k1: f64::NAN,
                k2: f64::NAN,
                finite: al < 1.0,
            }
        }
        Mode::ConjugatePair => {
            let (eta, tau, t1, _) = conj_parts(p.alpha, p.gamma, 1.0);
            let den = 2.0 * p.alpha * p.gamma.sin();
            DomainAxes {
                mode: p.mode,
                h1: f64::NAN,
                h2: f64::NAN,
                k: tau / den,
                k1: eta / den,
                k2: t1.ln() / den,
                finite: p.alpha < 1.0,
            }
        }
    }
}

/// Shape model of offset + psi(D). The ellipse is inscribed in the true
/// image (they touch at the four axis extremes); the sampled polygon in
/// [`ImageDomain`] is the authoritative boundary for containment tests.
#[derive(Debug, Clone, Copy)]
pub enum DomainVariant {
    Ellipse { center: Complex64, semi_real: f64, semi_imag: f64 },
    HorizontalStrip { v_lo: f64, v_hi: f64 },
    VerticalStrip { u_lo: f64, u_hi: f64 },
}

#[derive(Debug, Clone)]
pub struct ImageDomain {
    pub variant: DomainVariant,
    /// Counterclockwise boundary samples offset + psi((1 - 1e-9) e^{i theta}).
    pub polygon: Vec<Complex64>,
    pub offset: f64,
}

pub fn image_domain(p: &PsiParams, offset: f64, samples: usize) -> Result<ImageDomain> {
    if samples < 64 {
        return Err(Error::InvalidParameter(format!(
            "samples = {samples} must be >= 64"
        )));
    }
    let rho = 1.0 - 1e-9;
    let off = Complex64::new(offset, 0.0);
    let mut polygon = Vec::with_capacity(samples);
    for j in 0..samples {
        let th = 2.0 * PI * j as f64 / samples as f64;
        polygon.push(off + psi_eval(p, Complex64::from_polar(rho, th))?);
    }
    let axes = domain_axes(p);
    let variant = match (p.mode, p.alpha < 1.0) {
        (Mode::Symmetric, true) => DomainVariant::Ellipse {
            center: off,
            semi_real: axes.h1,
            semi_imag: axes.h2,
        },
        (Mode::Symmetric, false) => DomainVariant::HorizontalStrip {
            v_lo: -FRAC_PI_4,
            v_hi: FRAC_PI_4,
        },
        (Mode::ConjugatePair, true) => DomainVariant::Ellipse {
            center: off + axes.k,
            semi_real: axes.k1,
            semi_imag: axes.k2,
        },
        (Mode::ConjugatePair, false) => DomainVariant::VerticalStrip {
            u_lo: offset + (p.gamma - PI) / (2.0 * p.gamma.sin()),
            u_hi: offset + p.gamma / (2.0 * p.gamma.sin()),
        },
    };
    Ok(ImageDomain { variant, polygon, offset })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Analytic,
    Polygon,
}

/// Result of a point-in-domain query. `margin` is the signed distance to
/// the boundary (positive inside), and `inside` is exactly `margin > 0`.
#[derive(Debug, Clone, Copy)]
pub struct ContainmentReport {
    pub inside: bool,
    pub margin: f64,
    pub method: Method,
}

pub(crate) fn strip_margin(variant: &DomainVariant, w: Complex64) -> f64 {
    match *variant {
        DomainVariant::HorizontalStrip { v_lo, v_hi } => (w.im - v_lo).min(v_hi - w.im),
        DomainVariant::VerticalStrip { u_lo, u_hi } => (w.re - u_lo).min(u_hi - w.re),
        DomainVariant::Ellipse { .. } => unreachable!("strip margin on ellipse variant"),
    }
}

fn edge_normal(a: Complex64, b: Complex64) -> Complex64 {
    let t = b - a;
    let len = t.norm();
    if len > 0.0 {
        Complex64::new(-t.im / len, t.re / len)
    } else {
        Complex64::new(0.0, 0.0)
    }
}

fn full_scan_margin(verts: &[Complex64], w: Complex64) -> f64 {
    let n = verts.len();
    let mut m = f64::INFINITY;
    for j in 0..n {
        let nl = edge_normal(verts[j], verts[(j + 1) % n]);
        if nl.re == 0.0 && nl.im == 0.0 {
            continue;
        }
        let d = (w.re - verts[j].re) * nl.re + (w.im - verts[j].im) * nl.im;
        if d < m {
            m = d;
        }
    }
    m
}

/// Point containment. Strip images are tested analytically; bounded images
/// use the signed margin against the boundary polygon.
pub fn contains(d: &ImageDomain, w: Complex64) -> Result<ContainmentReport> {
    match d.variant {
        DomainVariant::Ellipse { .. } => {
            if d.polygon.len() < 3 {
                return Err(Error::DegeneratePolygon(d.polygon.len()));
            }
            let margin = full_scan_margin(&d.polygon, w);
            Ok(ContainmentReport { inside: margin > 0.0, margin, method: Method::Polygon })
        }
        _ => {
            let margin = strip_margin(&d.variant, w);
            Ok(ContainmentReport { inside: margin > 0.0, margin, method: Method::Analytic })
        }
    }
}

/// Angle-indexed convex boundary polygon for fast repeated margin queries.
///
/// A query walks the nine edges around the wedge containing the point's
/// angle from the polygon centroid. The sign of the returned margin is
/// always correct (inside a convex polygon every edge line is on the
/// positive side; outside, the edge crossed by the centroid ray lies in the
/// wedge window and reports negative), and the magnitude matches the full
/// edge scan near the boundary, which is where bisection needs it.
pub struct PolygonIndex {
    verts: Vec<Complex64>,
    normals: Vec<Complex64>,
    anchor: Complex64,
    angles: Vec<f64>,
}

impl PolygonIndex {
    pub fn build(d: &ImageDomain) -> Result<Self> {
        let verts = d.polygon.clone();
        let n = verts.len();
        if n < 3 {
            return Err(Error::DegeneratePolygon(n));
        }
        let anchor = verts.iter().sum::<Complex64>() / n as f64;
        let raw: Vec<f64> = verts
            .iter()
            .map(|v| (v.im - anchor.im).atan2(v.re - anchor.re))
            .collect();
        let mut angles = Vec::with_capacity(n);
        angles.push(raw[0]);
        for j in 1..n {
            let inc = (raw[j] - raw[j - 1]).rem_euclid(2.0 * PI);
            angles.push(angles[j - 1] + inc);
        }
        if angles[n - 1] - angles[0] >= 2.0 * PI {
            return Err(Error::DegeneratePolygon(n));
        }
        let normals = (0..n)
            .map(|j| edge_normal(verts[j], verts[(j + 1) % n]))
            .collect();
        Ok(PolygonIndex { verts, normals, anchor, angles })
    }

    pub fn signed_margin(&self, w: Complex64) -> f64 {
        let n = self.verts.len();
        let phi = (w.im - self.anchor.im).atan2(w.re - self.anchor.re);
        let base = self.angles[0];
        let q = base + (phi - base).rem_euclid(2.0 * PI);
        let j = self.angles.partition_point(|&a| a <= q).saturating_sub(1);
        let mut m = f64::INFINITY;
        for off in 0..9 {
            let e = (j + n + off - 4) % n;
            let nl = self.normals[e];
            if nl.re == 0.0 && nl.im == 0.0 {
                continue;
            }
            let d = (w.re - self.verts[e].re) * nl.re + (w.im - self.verts[e].im) * nl.im;
            if d < m {
                m = d;
            }
        }
        m
    }
}

/// (inradius, circumradius) of the image of the disk under 1 + psi: the
/// largest disk centered at the point 1 inside the image, and the smallest
/// disk centered at the image's own center containing it. The circumradius
/// is infinite when alpha = 1.
pub fn disk_radii(p: &PsiParams) -> (f64, f64) {
    let axes = domain_axes(p);
    match p.mode {
        Mode::Symmetric => (axes.h2, axes.h1),
        Mode::ConjugatePair => (axes.k1 + axes.k, axes.k2),
    }
}

/// Whether the disk {|w - a| < r}, which must contain the point 1, lies
/// inside the image of the disk under 1 + psi. Uses the inscribed-disk
/// criterion |a - c| + r <= R about the image center, so a true answer is
/// a guarantee while a false answer may still be conservative.
pub fn disk_in_domain(p: &PsiParams, a: f64, r: f64) -> Result<bool> {
    if !((1.0 - a).abs() < r) {
        return Err(Error::InvalidParameter(format!(
            "disk center {a} radius {r} does not cover the point 1"
        )));
    }
    let axes = domain_axes(p);
    let (c, big_r) = match p.mode {
        Mode::Symmetric => (1.0, axes.h2),
        Mode::ConjugatePair => (1.0 + axes.k, axes.k1),
    };
    Ok((a - c).abs() + r <= big_r + 1e-12)
}

/// Whether every function subordinate to (1 + Cz)/(1 + Dz) takes values in
/// the image of 1 + psi, tested through the inscribed-disk criterion on the
/// Moebius image disk.
pub fn janowski_admissible(p: &PsiParams, c_par: f64, d_par: f64) -> Result<bool> {
    if !(-1.0 < d_par && d_par < c_par && c_par <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "need -1 < D < C <= 1, got C = {c_par}, D = {d_par}"
        )));
    }
    let denom = 1.0 - d_par * d_par;
    let a = (1.0 - c_par * d_par) / denom;
    let rad = (c_par - d_par) / denom;
    disk_in_domain(p, a, rad)
}
