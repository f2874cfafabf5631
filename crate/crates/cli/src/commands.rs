use rayon::prelude::*;
use thiserror::Error;

use wedge_casimir::energy::{
    energy_per_length, Boundary, EnergySeriesResult, Medium, Model, SeriesOptions, WedgeConfig,
};
use wedge_casimir::modes::{eigenfrequency_pec, transverse_root, ModeIndex, Polarization};
use wedge_casimir::string_radiation::{spectrum_dw_dk, ExpansionMode, StringParams, Zeros};
use wedge_casimir::verify::{self, Group};
use wedge_casimir::zero_mode::{pole_coefficients, residual_energy, DispersionModel};

use crate::args::*;
use crate::table::{Cell, Table};

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments or a violated precondition.
    #[error("{0}")]
    Usage(String),
    /// The numerics failed for valid input.
    #[error("{0}")]
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numeric(_) => 1,
        }
    }
}

impl From<wedge_casimir::Error> for CliError {
    fn from(e: wedge_casimir::Error) -> Self {
        match e {
            wedge_casimir::Error::Domain(_) | wedge_casimir::Error::Config(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Numeric(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

/// Text for standard output and whether the run counts as failed.
pub struct Outcome {
    pub stdout: String,
    pub failed: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            failed: false,
        }
    }
}

/// Evaluates `f` over `items` in parallel and returns results in input
/// order; the first error in that order wins so messages are reproducible.
fn par_map<T: Sync, R: Send>(
    items: &[T],
    f: impl Fn(&T) -> CliResult<R> + Sync + Send,
) -> CliResult<Vec<R>> {
    items
        .par_iter()
        .map(f)
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

fn linspace(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    let h = (hi - lo) / (steps - 1) as f64;
    (0..steps)
        .map(|i| {
            if i + 1 == steps {
                hi
            } else {
                lo + h * i as f64
            }
        })
        .collect()
}

fn p_values(g: &PGrid) -> CliResult<Vec<f64>> {
    if !g.p.is_empty() {
        // rows come out in ascending p
        let mut ps = g.p.clone();
        ps.sort_by(f64::total_cmp);
        return Ok(ps);
    }
    let (Some(lo), Some(hi), Some(steps)) = (g.p_min, g.p_max, g.steps) else {
        return usage("need --p or all of --p-min, --p-max, --steps");
    };
    if !(lo < hi) {
        return usage(format!("--p-min must be below --p-max, got {lo} and {hi}"));
    }
    if steps < 2 {
        return usage(format!("--steps must be at least 2, got {steps}"));
    }
    Ok(linspace(lo, hi, steps))
}

fn boundary(b: BoundaryArg) -> Boundary {
    match b {
        BoundaryArg::Pec => Boundary::PerfectConductor,
        BoundaryArg::Periodic => Boundary::Periodic,
    }
}

fn model(m: ModelArg) -> Model {
    match m {
        ModelArg::Strong => Model::Strong,
        ModelArg::Weak => Model::Weak,
        ModelArg::Dilute => Model::Dilute,
    }
}

fn model_name(m: ModelArg) -> &'static str {
    match m {
        ModelArg::Strong => "strong",
        ModelArg::Weak => "weak",
        ModelArg::Dilute => "dilute",
    }
}

/// Inner and outer media, or `None` for a uniform medium of index `n`.
fn media(s: &SeriesArgs, m: ModelArg) -> CliResult<Option<(Medium, Medium)>> {
    let explicit = s.eps1.is_some() || s.mu1.is_some() || s.eps2.is_some() || s.mu2.is_some();
    if let Some(xi) = s.xi {
        if m != ModelArg::Weak {
            return usage("--xi applies to the weak model only");
        }
        if explicit {
            return usage("--xi cannot be combined with --eps1/--mu1/--eps2/--mu2");
        }
        if !(xi.abs() < 1.0) {
            return usage(format!("--xi must satisfy |xi| < 1, got {xi}"));
        }
        if !(s.n > 0.0) {
            return usage(format!("--n must be positive, got {}", s.n));
        }
        // diaphanous pair with index n and reflection coefficient ξ
        let n = s.n;
        let e2 = n;
        let e1 = n * (1.0 - xi) / (1.0 + xi);
        return Ok(Some((
            Medium::new(e1, n * n / e1),
            Medium::new(e2, n * n / e2),
        )));
    }
    if explicit {
        let inner = Medium::new(s.eps1.unwrap_or(1.0), s.mu1.unwrap_or(1.0));
        let outer = Medium::new(s.eps2.unwrap_or(1.0), s.mu2.unwrap_or(1.0));
        return Ok(Some((inner, outer)));
    }
    Ok(None)
}

fn series_options(s: &SeriesArgs) -> CliResult<SeriesOptions> {
    let mut opts = SeriesOptions {
        accelerate: s.accelerate,
        ..Default::default()
    };
    if let Some(tol) = s.tol {
        if !(tol > 0.0) {
            return usage(format!("--tol must be positive, got {tol}"));
        }
        opts.tol = tol;
    }
    Ok(opts)
}

fn energy_point(
    s: &SeriesArgs,
    m: ModelArg,
    p: f64,
    opts: &SeriesOptions,
) -> CliResult<EnergySeriesResult> {
    let b = boundary(s.boundary);
    let config = match media(s, m)? {
        Some((inner, outer)) => WedgeConfig::new(p, s.a, inner, outer, b)?,
        None => WedgeConfig::uniform(p, s.a, s.n, b)?,
    };
    Ok(energy_per_length(&config, model(m), s.m, opts)?)
}

fn energy_cells(p: f64, r: &EnergySeriesResult) -> Vec<Cell> {
    vec![
        p.into(),
        r.e_value.into(),
        r.energy_per_length.into(),
        r.m.into(),
        r.tail_estimate.into(),
        r.quad_error.into(),
    ]
}

pub fn energy(a: &EnergyArgs, argv: &[String]) -> CliResult<Outcome> {
    let s = &a.series;
    let ps = p_values(&s.grid)?;
    let opts = series_options(s)?;
    media(s, a.model)?;
    let value = if a.model == ModelArg::Dilute {
        "w_value"
    } else {
        "e_value"
    };
    let mut t = Table::new(vec![
        "p",
        value,
        "energy_per_length",
        "M",
        "tail_estimate",
        "quad_error",
    ]);
    let results = par_map(&ps, |&p| energy_point(s, a.model, p, &opts))?;
    for (p, r) in ps.iter().zip(&results) {
        t.push(energy_cells(*p, r));
    }
    Ok(Outcome::ok(t.render(s.format, "energy", argv)))
}

pub fn sweep(a: &SweepArgs, argv: &[String]) -> CliResult<Outcome> {
    let s = &a.series;
    if s.grid.p.is_empty() && s.grid.p_min.is_none() {
        return usage("sweep needs --p-min, --p-max and --steps");
    }
    let ps = p_values(&s.grid)?;
    let opts = series_options(s)?;
    for &m in &a.model {
        media(s, m)?;
    }
    let jobs: Vec<(ModelArg, f64)> = a
        .model
        .iter()
        .flat_map(|&m| ps.iter().map(move |&p| (m, p)))
        .collect();
    let results = par_map(&jobs, |&(m, p)| energy_point(s, m, p, &opts))?;
    let mut t = Table::new(vec![
        "model",
        "p",
        "value",
        "energy_per_length",
        "M",
        "tail_estimate",
        "quad_error",
    ]);
    for ((m, p), r) in jobs.iter().zip(&results) {
        let mut row = vec![Cell::from(model_name(*m))];
        row.extend(energy_cells(*p, r));
        t.push(row);
    }
    Ok(Outcome::ok(t.render(s.format, "sweep", argv)))
}

pub fn string(a: &StringArgs, argv: &[String]) -> CliResult<Outcome> {
    let params = StringParams::new(a.beta, a.n, a.eps, a.alpha, a.a, a.length)?;
    let ks = match (a.k_max, a.k_steps) {
        (Some(kmax), Some(steps)) => {
            if !(kmax > 0.0) {
                return usage(format!("--k-max must be positive, got {kmax}"));
            }
            if steps < 2 {
                return usage(format!("--k-steps must be at least 2, got {steps}"));
            }
            linspace(0.0, kmax, steps)
        }
        _ if a.k.is_empty() => vec![0.0],
        _ => a.k.clone(),
    };
    let expansion = match a.expansion {
        ExpansionArg::Leading => ExpansionMode::Leading,
        ExpansionArg::Exact => ExpansionMode::Exact,
    };
    let mut jobs = Vec::new();
    for &z in &a.zeros {
        for &m in &a.m {
            for &s in &a.s {
                for &k in &ks {
                    jobs.push((z, m, s, k));
                }
            }
        }
    }
    let results = par_map(&jobs, |&(z, m, s, k)| {
        let zeros = match z {
            ZerosArg::Exact => Zeros::Exact,
            ZerosArg::Mcmahon => Zeros::McMahon,
        };
        Ok(spectrum_dw_dk(m, s, k, &params, zeros, expansion)?)
    })?;
    let mut t = Table::new(vec!["m", "s", "k", "dN_dk", "dW_dk", "zeros_mode"]);
    for ((z, ..), r) in jobs.iter().zip(&results) {
        let zname = match z {
            ZerosArg::Exact => "exact",
            ZerosArg::Mcmahon => "mcmahon",
        };
        t.push(vec![
            r.m.into(),
            r.s.into(),
            r.k.into(),
            r.dn_dk.into(),
            r.dw_dk.into(),
            zname.into(),
        ]);
    }
    Ok(Outcome::ok(t.render(a.format, "string", argv)))
}

pub fn modes(a: &ModesArgs, argv: &[String]) -> CliResult<Outcome> {
    let config = WedgeConfig::uniform(a.p, a.a, a.n, boundary(a.boundary))?;
    let mut jobs = Vec::new();
    for &pol in &a.pol {
        for &m in &a.m {
            for &s in &a.s {
                for &k in &a.k {
                    jobs.push((pol, m, s, k));
                }
            }
        }
    }
    let results = par_map(&jobs, |&(pol, m, s, k)| {
        let pol = match pol {
            PolArg::Te => Polarization::TE,
            PolArg::Tm => Polarization::TM,
        };
        let mode = ModeIndex::new(m, s, k, pol)?;
        Ok((
            transverse_root(&mode, config.p)?,
            eigenfrequency_pec(&mode, &config)?,
        ))
    })?;
    let mut t = Table::new(vec!["pol", "m", "s", "k", "root", "omega"]);
    for ((pol, m, s, k), (root, omega)) in jobs.iter().zip(&results) {
        let name = match pol {
            PolArg::Te => "te",
            PolArg::Tm => "tm",
        };
        t.push(vec![
            name.into(),
            (*m).into(),
            (*s).into(),
            (*k).into(),
            (*root).into(),
            (*omega).into(),
        ]);
    }
    Ok(Outcome::ok(t.render(a.format, "modes", argv)))
}

/// snake_case name of a serde unit variant.
fn label<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

const RESIDUAL_CUTOFF: f64 = 200.0;
/// The fit window `[Λ/4, Λ]` must stay where the tail products keep their digits.
const POLE_CUTOFF: f64 = 40.0;

pub fn zeromode(a: &ZeroModeArgs, argv: &[String]) -> CliResult<Outcome> {
    if a.poles {
        let cutoff = match a.cutoff.as_slice() {
            [] => POLE_CUTOFF,
            [c] => *c,
            _ => return usage("--poles takes a single --cutoff"),
        };
        let pc = pole_coefficients(cutoff, &a.s_values)?;
        let mut t = Table::new(vec!["boundary", "leading", "subleading", "residue", "rms"]);
        for (name, fit) in [("dirichlet", pc.dirichlet), ("neumann", pc.neumann)] {
            t.push(vec![
                name.into(),
                fit.leading.into(),
                fit.subleading.into(),
                fit.residue.into(),
                fit.rms.into(),
            ]);
        }
        return Ok(Outcome::ok(t.render(a.format, "zeromode", argv)));
    }
    let model = match a.dispersion {
        DispersionArg::Constant => DispersionModel::constant(a.xi),
        DispersionArg::PowerLaw => DispersionModel::power_law(a.xi, a.beta, a.zeta0),
        DispersionArg::DrudeLike => DispersionModel::drude_like(a.xi, a.beta, a.zeta0),
    };
    model.validate()?;
    let cutoffs = if a.cutoff.is_empty() {
        vec![RESIDUAL_CUTOFF]
    } else {
        a.cutoff.clone()
    };
    let results = par_map(&cutoffs, |&c| Ok(residual_energy(&model, c, a.n, a.a)?))?;
    let mut t = Table::new(vec![
        "dispersion",
        "xi0",
        "beta",
        "zeta0",
        "cutoff",
        "value",
        "integral",
        "integral_2x",
        "integral_4x",
        "growth_ratio",
        "stability",
        "growth",
        "convergence",
    ]);
    for r in &results {
        t.push(vec![
            label(&model.kind).as_str().into(),
            model.xi0.into(),
            model.beta_disp.into(),
            model.zeta0.into(),
            r.cutoff.into(),
            r.value.into(),
            r.integrals[0].into(),
            r.integrals[1].into(),
            r.integrals[2].into(),
            r.growth_ratio.into(),
            r.stability.into(),
            label(&r.growth).as_str().into(),
            label(&r.convergence).as_str().into(),
        ]);
    }
    Ok(Outcome::ok(t.render(a.format, "zeromode", argv)))
}

pub fn verify(a: &VerifyArgs) -> CliResult<Outcome> {
    let group = match &a.only {
        None => None,
        Some(g) => match Group::parse(g) {
            Some(g) => Some(g),
            None => {
                return usage(format!(
                    "--only must be one of bessel, energy, string, zeromode, structural; got {g}"
                ))
            }
        },
    };
    let reports = verify::run(group);
    let failed = reports.iter().filter(|r| !r.passed).count();
    let stdout = if a.json {
        let mut s = serde_json::to_string_pretty(&reports).expect("serialisable");
        s.push('\n');
        s
    } else {
        let mut s: String = reports.iter().map(|r| r.line() + "\n").collect();
        s.push_str(&format!(
            "{} of {} checks passed\n",
            reports.len() - failed,
            reports.len()
        ));
        s
    };
    Ok(Outcome {
        stdout,
        failed: failed > 0,
    })
}
