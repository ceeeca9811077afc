use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stampfli::closedform::{
    canonical_3x3, select_root, st_2x2, st_closed_form, st_dispatch, SpectrumKind,
};
use stampfli::hull::convex_hull;
use stampfli::matcore::{eigenvalues, operator_norm};
use stampfli::numrange::{contains_zero, max_numerical_range, nr_boundary, MIN_SAMPLES};
use stampfli::oracle::{certificate_with, stampfli_oracle, CERTIFICATE_TOL};
use stampfli::roberts::roberts_numeric;
use stampfli::{gallery, CMatrix, Complex64, Method, StampfliResult};

use crate::matrix_file::{read_matrix, MatrixFile};
use crate::output::{write_range_table, write_support_table, ResultRecord, RobertsRecord};

/// Seed of the random 2×2 batch in `verify --suite`.
pub const SUITE_SEED: u64 = 0x05ee_d2b2;
pub const SUITE_RANDOM_2X2: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum MethodChoice {
    Auto,
    Oracle,
    Closed,
}

/// Failure outside the numerical routines that should map to a given exit code.
#[derive(Debug)]
pub struct ExitWith(pub i32, pub String);

impl std::fmt::Display for ExitWith {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.1)
    }
}

impl std::error::Error for ExitWith {}

pub struct Ctx {
    pub tol: f64,
    pub samples: usize,
}

pub fn compute(a: &CMatrix, method: MethodChoice, tol: f64) -> Result<StampfliResult> {
    Ok(match method {
        MethodChoice::Auto => st_dispatch(a, tol)?,
        MethodChoice::Oracle => stampfli_oracle(a, tol)?,
        MethodChoice::Closed => match st_closed_form(a, tol)? {
            Some(r) => r,
            None => bail!(ExitWith(2, "no closed form applies to this matrix".into())),
        },
    })
}

pub fn cmd_st(
    ctx: &Ctx,
    paths: &[PathBuf],
    method: MethodChoice,
    timing: bool,
    out: &mut dyn Write,
) -> Result<()> {
    for path in paths {
        let a = read_matrix(path)?;
        let start = Instant::now();
        let r = compute(&a, method, ctx.tol)?;
        let elapsed = timing.then(|| start.elapsed().as_secs_f64() * 1e3);
        let spectrum = eigenvalues(&a)?;
        let record = ResultRecord::new(path.display().to_string(), &r, &spectrum, elapsed);
        writeln!(out, "{}", serde_json::to_string(&record)?)?;
    }
    Ok(())
}

fn check_samples(k: usize) -> Result<()> {
    if k < MIN_SAMPLES {
        bail!(ExitWith(
            2,
            format!("--samples must be at least {MIN_SAMPLES}")
        ));
    }
    Ok(())
}

fn range_table(a: &CMatrix, ctx: &Ctx, with_hull: bool, out: &mut dyn Write) -> Result<()> {
    check_samples(ctx.samples)?;
    let region = nr_boundary(a, ctx.samples)?;
    let eigs = eigenvalues(a)?;
    let hull = if with_hull {
        convex_hull(&eigs)
    } else {
        Vec::new()
    };
    let st = st_dispatch(a, ctx.tol)?;
    write_range_table(out, &region, &eigs, &hull, st.point)?;
    Ok(())
}

pub fn cmd_nr(ctx: &Ctx, path: &Path, out: &mut dyn Write) -> Result<()> {
    let a = read_matrix(path)?;
    range_table(&a, ctx, false, out)
}

pub fn cmd_w0(ctx: &Ctx, path: &Path, shift: Complex64, out: &mut dyn Write) -> Result<()> {
    check_samples(ctx.samples)?;
    let a = read_matrix(path)?;
    let m = a.shifted(shift);
    let region = max_numerical_range(&m, ctx.samples)?;
    let cert = certificate_with(&a, shift, ctx.samples)?;
    let (inside, margin) = contains_zero(&region, 1.0 + operator_norm(&a)?);
    write_support_table(out, &region, cert.subspace_dim, margin, inside)?;
    Ok(())
}

pub fn cmd_roberts(path: &Path, tol: f64, out: &mut dyn Write) -> Result<()> {
    let a = read_matrix(path)?;
    let report = roberts_numeric(&a, tol)?;
    let record = RobertsRecord::new(path.display().to_string(), &report);
    writeln!(out, "{}", serde_json::to_string_pretty(&record)?)?;
    Ok(())
}

/// Outcome of one named check.
struct Check {
    name: String,
    pass: bool,
    detail: String,
}

fn check(name: impl Into<String>, pass: bool, detail: String) -> Check {
    Check {
        name: name.into(),
        pass,
        detail,
    }
}

/// Certificate, dispatcher/oracle agreement and norm consistency for one matrix.
fn verify_matrix(label: &str, a: &CMatrix, tol: f64) -> Result<Vec<Check>> {
    let scale = 1.0 + operator_norm(a)?;
    let mut checks = Vec::new();

    let d = st_dispatch(a, tol)?;
    let o = stampfli_oracle(a, tol)?;
    checks.push(check(
        format!("{label}: certificate ({})", d.method),
        d.certified(scale - 1.0),
        format!("margin {:.3e}", d.certificate_margin),
    ));
    checks.push(check(
        format!("{label}: oracle certificate"),
        o.certified(scale - 1.0),
        format!("margin {:.3e}", o.certificate_margin),
    ));
    let gap = (d.point - o.point).norm();
    checks.push(check(
        format!("{label}: dispatch vs oracle"),
        gap <= CERTIFICATE_TOL * scale,
        format!("|Δ| {gap:.3e}"),
    ));
    let direct = operator_norm(&a.shifted(d.point))?;
    let err = (direct - d.min_norm).abs();
    checks.push(check(
        format!("{label}: min_norm"),
        err <= 1e-9 * scale,
        format!("|Δ| {err:.3e}"),
    ));

    if d.method == Method::Singleton3General {
        let f = canonical_3x3(a)?;
        if f.kind == SpectrumKind::Singleton {
            let sel = select_root(a, &f)?;
            let roots: Vec<String> = sel.roots.iter().map(|r| format!("{r:.6}")).collect();
            let idx = sel.selected.map_or("none".to_string(), |i| i.to_string());
            checks.push(check(
                format!("{label}: root selection"),
                sel.selected.is_some(),
                format!(
                    "{} positive roots [{}], selected index {idx}",
                    sel.roots.len(),
                    roots.join(", ")
                ),
            ));
        }
    }
    Ok(checks)
}

fn random_2x2_checks(tol: f64) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED);
    let mut agree = 0;
    let mut worst = 0.0f64;
    for _ in 0..SUITE_RANDOM_2X2 {
        let a = CMatrix::from_fn(2, |_, _| {
            Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
        });
        let closed = st_2x2(&a)?;
        let o = stampfli_oracle(&a, tol)?;
        let gap = (closed - o.point).norm() / (1.0 + operator_norm(&a)?);
        worst = worst.max(gap);
        if gap <= 1e-7 {
            agree += 1;
        }
    }
    Ok(vec![check(
        "random 2x2: trace/2 vs oracle",
        agree == SUITE_RANDOM_2X2,
        format!("{agree}/{SUITE_RANDOM_2X2} agree, worst relative gap {worst:.3e}"),
    )])
}

/// Returns whether every check passed.
pub fn cmd_verify(
    ctx: &Ctx,
    path: Option<&Path>,
    suite: bool,
    out: &mut dyn Write,
) -> Result<bool> {
    let mut checks = Vec::new();
    if let Some(p) = path {
        let a = read_matrix(p)?;
        checks.extend(verify_matrix(&p.display().to_string(), &a, ctx.tol)?);
    }
    if suite {
        for (name, a) in gallery::all() {
            checks.extend(verify_matrix(name, &a, ctx.tol)?);
        }
        checks.extend(random_2x2_checks(ctx.tol)?);
    }
    if checks.is_empty() {
        bail!(ExitWith(2, "verify needs a matrix path or --suite".into()));
    }
    for c in &checks {
        writeln!(
            out,
            "{} {} ({})",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        )?;
    }
    let failed = checks.iter().filter(|c| !c.pass).count();
    writeln!(out, "{} checks, {} failed", checks.len(), failed)?;
    Ok(failed == 0)
}

pub const FIGURES: [&str; 4] = ["fig1", "fig2", "fig3", "fig4"];

pub fn cmd_figures(ctx: &Ctx, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    let mut written = Vec::new();
    for name in FIGURES {
        let a = gallery::by_name(name).expect("gallery figure");
        let mut buf = Vec::new();
        range_table(&a, ctx, name == "fig2", &mut buf)?;
        let path = dir.join(format!("{name}.csv"));
        fs::write(&path, buf).with_context(|| format!("cannot write {}", path.display()))?;
        written.push(path);
    }
    Ok(written)
}

pub fn cmd_gallery(name: Option<&str>, out: &mut dyn Write) -> Result<()> {
    match name {
        None => {
            for (n, _) in gallery::all() {
                writeln!(out, "{n}")?;
            }
        }
        Some(n) => {
            let a = gallery::by_name(n)
                .ok_or_else(|| ExitWith(2, format!("unknown gallery matrix `{n}`")))?;
            writeln!(
                out,
                "{}",
                serde_json::to_string(&MatrixFile::from_matrix(&a))?
            )?;
        }
    }
    Ok(())
}
