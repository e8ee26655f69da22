//! Thin command-line front end over the library. Exit codes: 0 on
//! success, 1 on a failed check or runtime error, 2 on usage errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;
use std::error::Error as StdError;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::complexfn::{extremal_eval, psi_coeff, psi_eval, PsiParams};
use crate::geometry::{domain_axes, image_domain, PolygonIndex};
use crate::verify::CheckResult;
use crate::{bounds, radii, verify};

#[derive(Parser)]
#[command(
    name = "psiab",
    version,
    about = "log-quotient map psi, its image geometry, and sharp class radii"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Pointwise and per-radius quantities
    Eval {
        #[command(subcommand)]
        what: EvalCmd,
    },
    /// Sharp radius solvers
    Radius {
        #[command(subcommand)]
        what: RadiusCmd,
    },
    /// Reproduce the standard plots as CSV files
    Figure(FigureArgs),
    /// Self-check suites
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// A = alpha, B = -alpha
    Sym,
    /// A and B a conjugate pair alpha e^{+-i gamma}
    Conj,
}

#[derive(Args, Clone)]
struct ParamArgs {
    #[arg(long, value_enum, default_value_t = ModeArg::Sym)]
    mode: ModeArg,
    /// modulus of A and B, in (0, 1]
    #[arg(long, default_value_t = 0.5)]
    alpha: f64,
    /// argument of A in radians, in (0, pi/2]; conj mode only
    #[arg(long, default_value_t = FRAC_PI_3)]
    gamma: f64,
}

impl ParamArgs {
    fn params(&self) -> crate::Result<PsiParams> {
        match self.mode {
            ModeArg::Sym => PsiParams::symmetric(self.alpha),
            ModeArg::Conj => PsiParams::conjugate_pair(self.alpha, self.gamma),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct OutArgs {
    /// write to this file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// defaults to json, except boundary which defaults to csv
    #[arg(long, value_enum)]
    format: Option<Format>,
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err("expected re,im".into());
    }
    let re: f64 = parts[0].trim().parse().map_err(|e| format!("bad real part: {e}"))?;
    let im: f64 = parts[1].trim().parse().map_err(|e| format!("bad imag part: {e}"))?;
    Ok(Complex64::new(re, im))
}

#[derive(Subcommand)]
enum EvalCmd {
    /// psi at a point of the unit disk
    Psi {
        #[command(flatten)]
        p: ParamArgs,
        /// point as re,im
        #[arg(long, value_parser = parse_complex, default_value = "0.3,0.4")]
        z: Complex64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// extremal class member at a point
    Extremal {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, value_parser = parse_complex, default_value = "0.5,0.0")]
        z: Complex64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// series coefficient of order n
    Coeff {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[command(flatten)]
        out: OutArgs,
    },
    /// tight rectangle around psi on |z| <= r
    Envelope {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, default_value_t = 0.5)]
        r: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// growth, distortion, and arclength bounds at radius r
    Growth {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, default_value_t = 0.5)]
        r: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// half-axes and center of the image domain
    Axes {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// radius of the disk always covered by class members
    Covering {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// boundary curve of the image domain, sampled
    Boundary {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, default_value_t = 4096)]
        samples: usize,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Subcommand)]
enum RadiusCmd {
    /// starlikeness of order delta
    Starlike {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, default_value_t = 0.0)]
        delta: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// univalence (starlikeness of order zero)
    Univalence {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// strong starlikeness of order beta
    Ss {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, default_value_t = 0.5)]
        beta: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// booth-lemniscate class with parameter a (defaults to alpha)
    Bs {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long = "alpha-class")]
        a: Option<f64>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// cosine-sine class with parameter a (defaults to alpha)
    Cs {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long = "alpha-class")]
        a: Option<f64>,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FigureId {
    /// image of the extremal map with its inner and outer circles
    Fig1,
    /// whole-disk order surface g(alpha, gamma)
    Fig2,
    /// booth curve at its sharp radius inside the image domain
    Fig3a,
    /// cosine-sine curve at its sharp radius inside the image domain
    Fig3b,
}

#[derive(Args)]
struct FigureArgs {
    #[arg(value_enum)]
    which: FigureId,
    /// boundary and curve resolution
    #[arg(long, default_value_t = 4096)]
    samples: usize,
    /// lattice size per axis for fig2
    #[arg(long, default_value_t = 50)]
    grid: usize,
    /// directory for the emitted CSV files
    #[arg(long, default_value = ".")]
    output_dir: PathBuf,
    /// containment slack for the printed checks; PSIAB_TOL is used
    /// when the flag is absent
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// every numbered check
    All {
        #[arg(long, default_value_t = 4096)]
        samples: usize,
        /// oracle agreement tolerance; PSIAB_TOL is used when absent
        #[arg(long)]
        tol: Option<f64>,
    },
    /// quick radius consistency battery
    Radii {
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
    },
    /// ellipse-model fidelity
    Ellipse {
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        /// include boundary samples in the detail line
        #[arg(long)]
        report: bool,
    },
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    match dispatch(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn env_tol(flag: Option<f64>) -> Option<f64> {
    flag.or_else(|| std::env::var("PSIAB_TOL").ok().and_then(|s| s.parse().ok()))
}

fn sink(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn emit(out: &OutArgs, default: Format, v: serde_json::Value, csv: (&str, Vec<Vec<f64>>)) -> io::Result<()> {
    let mut w = sink(&out.output)?;
    match out.format.unwrap_or(default) {
        Format::Json => writeln!(w, "{}", serde_json::to_string_pretty(&v)?),
        Format::Csv => {
            let (header, rows) = csv;
            writeln!(w, "{header}")?;
            for row in rows {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:.16e}")).collect();
                writeln!(w, "{}", cells.join(","))?;
            }
            Ok(())
        }
    }?;
    w.flush()
}

fn write_rows(path: &Path, header: &str, rows: &[Vec<f64>]) -> io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "{header}")?;
    for row in rows {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:.16e}")).collect();
        writeln!(w, "{}", cells.join(","))?;
    }
    w.flush()
}

fn input_json(p: &PsiParams) -> serde_json::Value {
    json!({ "mode": p.mode, "alpha": p.alpha, "gamma": p.gamma })
}

fn report(results: &[CheckResult]) -> i32 {
    let mut failed = 0usize;
    for c in results {
        println!(
            "[{}] {} :: {}",
            if c.passed { "pass" } else { "FAIL" },
            c.name,
            c.detail
        );
        if !c.passed {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("all {} checks passed", results.len());
        0
    } else {
        println!("{failed} of {} checks failed", results.len());
        1
    }
}

fn dispatch(cmd: Cmd) -> Result<i32, Box<dyn StdError>> {
    match cmd {
        Cmd::Eval { what } => eval(what),
        Cmd::Radius { what } => radius(what),
        Cmd::Figure(args) => figure(args),
        Cmd::Verify { what } => Ok(match what {
            VerifyCmd::All { samples, tol } => report(&verify::run_all(samples, env_tol(tol))),
            VerifyCmd::Radii { alpha } => report(&verify::run_radii(alpha)),
            VerifyCmd::Ellipse { alpha, report: rep } => report(&verify::run_ellipse(alpha, rep)),
        }),
    }
}

fn eval(what: EvalCmd) -> Result<i32, Box<dyn StdError>> {
    match what {
        EvalCmd::Psi { p, z, out } => {
            let p = p.params()?;
            let w = psi_eval(&p, z)?;
            emit(
                &out,
                Format::Json,
                json!({
                    "input": input_json(&p),
                    "z": [z.re, z.im],
                    "value": [w.re, w.im],
                    "equation": "principal log of (1+Az)/(1+Bz) divided by A-B",
                }),
                ("re,im", vec![vec![w.re, w.im]]),
            )?;
        }
        EvalCmd::Extremal { p, z, out } => {
            let p = p.params()?;
            let w = extremal_eval(&p, z)?;
            emit(
                &out,
                Format::Json,
                json!({
                    "input": input_json(&p),
                    "z": [z.re, z.im],
                    "value": [w.re, w.im],
                    "equation": "z exp((Li2(-Bz) - Li2(-Az))/(A-B))",
                }),
                ("re,im", vec![vec![w.re, w.im]]),
            )?;
        }
        EvalCmd::Coeff { p, n, out } => {
            let p = p.params()?;
            let c = psi_coeff(&p, n)?;
            emit(
                &out,
                Format::Json,
                json!({
                    "input": input_json(&p),
                    "n": n,
                    "value": c,
                    "equation": "(A^n - B^n)/(n (A - B)), series carries sign (-1)^{n+1}",
                }),
                ("n,value", vec![vec![n as f64, c]]),
            )?;
        }
        EvalCmd::Envelope { p, r, out } => {
            let p = p.params()?;
            let e = bounds::envelope(&p, r)?;
            emit(
                &out,
                Format::Json,
                json!({
                    "input": input_json(&p),
                    "envelope": e,
                    "equation": "extremes of Re psi and Im psi over |z| <= r",
                }),
                (
                    "r,re_lo,re_hi,im_lo,im_hi",
                    vec![vec![e.r, e.re_lo, e.re_hi, e.im_lo, e.im_hi]],
                ),
            )?;
        }
        EvalCmd::Growth { p, r, out } => {
            let p = p.params()?;
            let g = bounds::growth(&p, r)?;
            emit(
                &out,
                Format::Json,
                json!({
                    "input": input_json(&p),
                    "growth": g,
                    "equation": "extremal-map bounds for |f|, f/z, |f'|, and arclength",
                }),
                (
                    "r,lower,upper,deriv_lower,deriv_upper",
                    vec![vec![g.r, g.lower, g.upper, g.deriv_lower, g.deriv_upper]],
                ),
            )?;
        }
        EvalCmd::Axes { p, out } => {
            let p = p.params()?;
            let ax = domain_axes(&p);
            emit(
                &out,
                Format::Json,
                json!({
                    "input": input_json(&p),
                    "axes": ax,
                    "equation": "half-axes of the image of the unit disk",
                }),
                (
                    "h1,h2,k,k1,k2",
                    vec![vec![ax.h1, ax.h2, ax.k, ax.k1, ax.k2]],
                ),
            )?;
        }
        EvalCmd::Covering { p, out } => {
            let p = p.params()?;
            let c = bounds::covering_constant(&p);
            emit(
                &out,
                Format::Json,
                json!({
                    "input": input_json(&p),
                    "value": c,
                    "equation": "-f(-1) for the extremal map f",
                }),
                ("value", vec![vec![c]]),
            )?;
        }
        EvalCmd::Boundary { p, samples, out } => {
            let p = p.params()?;
            let d = image_domain(&p, 0.0, samples)?;
            let rows: Vec<Vec<f64>> = d
                .polygon
                .iter()
                .enumerate()
                .map(|(j, w)| vec![2.0 * PI * j as f64 / samples as f64, w.re, w.im])
                .collect();
            match out.format.unwrap_or(Format::Csv) {
                Format::Csv => {
                    let mut w = sink(&out.output)?;
                    writeln!(w, "theta,re,im")?;
                    for row in &rows {
                        writeln!(w, "{:.16e},{:.16e},{:.16e}", row[0], row[1], row[2])?;
                    }
                    w.flush()?;
                }
                Format::Json => {
                    let mut w = sink(&out.output)?;
                    let v = json!({
                        "input": input_json(&p),
                        "samples": samples,
                        "header": ["theta", "re", "im"],
                        "rows": rows,
                    });
                    writeln!(w, "{}", serde_json::to_string_pretty(&v)?)?;
                    w.flush()?;
                }
            }
        }
    }
    Ok(0)
}

fn radius(what: RadiusCmd) -> Result<i32, Box<dyn StdError>> {
    let (p, r, extra, eqn, out) = match what {
        RadiusCmd::Starlike { p, delta, out } => {
            let p = p.params()?;
            let r = radii::starlike_radius(&p, delta)?;
            (p, r, json!({ "delta": delta }), "min Re(1 + psi) on |z| = r equals delta", out)
        }
        RadiusCmd::Univalence { p, out } => {
            let p = p.params()?;
            let r = radii::univalence_radius(&p)?;
            (p, r, json!({}), "min Re(1 + psi) on |z| = r equals 0", out)
        }
        RadiusCmd::Ss { p, beta, out } => {
            let p = p.params()?;
            let r = radii::ss_radius(&p, beta)?;
            (p, r, json!({ "beta": beta }), "max |arg(1 + psi)| on |z| = r equals beta pi/2", out)
        }
        RadiusCmd::Bs { p, a, out } => {
            let pp = p.params()?;
            let a = a.unwrap_or(p.alpha);
            let r = radii::bs_radius(&pp, a)?;
            (pp, r, json!({ "a": a }), "booth curve inradius equals the image inner reach", out)
        }
        RadiusCmd::Cs { p, a, out } => {
            let pp = p.params()?;
            let a = a.unwrap_or(p.alpha);
            let r = radii::cs_radius(&pp, a)?;
            (pp, r, json!({ "a": a }), "cosine-sine curve inradius equals the image inner reach", out)
        }
    };
    emit(
        &out,
        Format::Json,
        json!({
            "input": input_json(&p),
            "class": extra,
            "result": r,
            "equation": eqn,
        }),
        (
            "value,residual,sharp",
            vec![vec![r.value, r.equation_residual, if r.sharp { 1.0 } else { 0.0 }]],
        ),
    )?;
    Ok(0)
}

fn circle_rows(radius: f64, samples: usize) -> Vec<Vec<f64>> {
    (0..samples)
        .map(|j| {
            let th = 2.0 * PI * j as f64 / samples as f64;
            vec![th, radius * th.cos(), radius * th.sin()]
        })
        .collect()
}

fn figure(args: FigureArgs) -> Result<i32, Box<dyn StdError>> {
    let tol = env_tol(args.tol).unwrap_or(1e-6);
    let dir = &args.output_dir;
    std::fs::create_dir_all(dir)?;
    let n = args.samples;
    match args.which {
        FigureId::Fig1 => {
            let p = PsiParams::conjugate_pair(0.5, FRAC_PI_3)?;
            let mut rows = Vec::with_capacity(n);
            let mut min_mod = f64::INFINITY;
            let mut max_mod = 0.0f64;
            for j in 0..n {
                let th = 2.0 * PI * j as f64 / n as f64;
                let w = extremal_eval(&p, Complex64::from_polar(1.0, th))?;
                min_mod = min_mod.min(w.norm());
                max_mod = max_mod.max(w.norm());
                rows.push(vec![th, w.re, w.im]);
            }
            let inner = bounds::covering_constant(&p);
            let outer = extremal_eval(&p, Complex64::new(1.0, 0.0))?.re;
            write_rows(&dir.join("fig1_boundary.csv"), "theta,re,im", &rows)?;
            write_rows(&dir.join("fig1_inner_circle.csv"), "theta,re,im", &circle_rows(inner, n))?;
            write_rows(&dir.join("fig1_outer_circle.csv"), "theta,re,im", &circle_rows(outer, n))?;
            let ok = min_mod >= inner - tol && (max_mod - outer).abs() <= tol;
            println!(
                "fig1: boundary modulus in [{min_mod:.10}, {max_mod:.10}], circles {inner:.10} and {outer:.10} -> {}",
                if ok { "ok" } else { "FAIL" }
            );
            Ok(if ok { 0 } else { 1 })
        }
        FigureId::Fig2 => {
            let n = args.grid;
            let sup = 1.0 - FRAC_PI_4;
            let mut rows = Vec::with_capacity(n * n);
            let mut best = f64::NEG_INFINITY;
            let mut at = (0.0, 0.0);
            for i in 1..=n {
                let al = i as f64 / (n + 1) as f64;
                for j in 1..=n {
                    let ga = FRAC_PI_2 * j as f64 / (n + 1) as f64;
                    let g = radii::g_func(al, ga)?;
                    if g > best {
                        best = g;
                        at = (al, ga);
                    }
                    rows.push(vec![al, ga, g]);
                }
            }
            write_rows(&dir.join("fig2_surface.csv"), "alpha,gamma,g", &rows)?;
            let ok = best <= sup + 1e-9;
            println!(
                "fig2: {} rows, max g = {best:.12} at (alpha, gamma) = ({:.4}, {:.4}), sup = {sup:.12} -> {}",
                rows.len(),
                at.0,
                at.1,
                if ok { "ok" } else { "FAIL" }
            );
            Ok(if ok { 0 } else { 1 })
        }
        FigureId::Fig3a | FigureId::Fig3b => {
            let p = PsiParams::symmetric(0.5)?;
            let a = 0.5;
            let (tag, rr) = match args.which {
                FigureId::Fig3a => ("fig3a", radii::bs_radius(&p, a)?),
                _ => ("fig3b", radii::cs_radius(&p, a)?),
            };
            let d = image_domain(&p, 0.0, n)?;
            let idx = PolygonIndex::build(&d)?;
            let mut curve = Vec::with_capacity(n);
            let mut min_margin = f64::INFINITY;
            for j in 0..n {
                let th = 2.0 * PI * j as f64 / n as f64;
                let w = match args.which {
                    FigureId::Fig3a => radii::booth_point(a, rr.value, th),
                    _ => radii::cs_point(a, rr.value, th),
                };
                min_margin = min_margin.min(idx.signed_margin(w));
                curve.push(vec![th, w.re, w.im]);
            }
            let rows: Vec<Vec<f64>> = d
                .polygon
                .iter()
                .enumerate()
                .map(|(j, w)| vec![2.0 * PI * j as f64 / n as f64, w.re, w.im])
                .collect();
            write_rows(&dir.join(format!("{tag}_curve.csv")), "theta,re,im", &curve)?;
            write_rows(&dir.join(format!("{tag}_domain.csv")), "theta,re,im", &rows)?;
            let ok = min_margin >= -tol;
            println!(
                "{tag}: radius {:.10} (sharp: {}), min containment margin {min_margin:.3e} -> {}",
                rr.value,
                rr.sharp,
                if ok { "ok" } else { "FAIL" }
            );
            Ok(if ok { 0 } else { 1 })
        }
    }
}
