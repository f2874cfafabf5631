//! Executable acceptance checks, one per numbered criterion, shared by the
//! CLI `verify` command and the `acceptance` test target.

use std::f64::consts::PI;
use std::time::Instant;

use serde::Serialize;

use crate::bessel::{bessel_j, eval_ik, eval_ik_branch, jy, lambda_nu, Branch};
use crate::energy::{
    e_strong, e_weak, energy_per_length, m0_general_quad, m0_weak_quad, w_dilute_asymptotic,
    zero_crossing, Boundary, Medium, Model, SeriesOptions, WedgeConfig,
};
use crate::error::Result;
use crate::quadrature::CONSTANT_TOL;
use crate::string_radiation::{overlap_i, spectrum_dw_dk, ExpansionMode, StringParams, Zeros};
use crate::zero_mode::{pole_coefficients, residual_energy, Convergence, DispersionModel, Growth};

/// Area a criterion belongs to, for filtering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    Bessel,
    Energy,
    String,
    ZeroMode,
    Structural,
}

impl Group {
    pub fn parse(s: &str) -> Option<Group> {
        Some(match s {
            "bessel" => Group::Bessel,
            "energy" => Group::Energy,
            "string" => Group::String,
            "zeromode" | "zero_mode" => Group::ZeroMode,
            "structural" => Group::Structural,
            _ => return None,
        })
    }
}

/// One measured quantity inside a criterion.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    /// Set on the items that cannot pass at the stated parameters; the
    /// reason is recorded alongside the failing number.
    pub unattainable: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub id: u8,
    pub title: &'static str,
    pub group: Group,
    pub passed: bool,
    pub elapsed_s: f64,
    pub budget_s: f64,
    pub items: Vec<SubCheck>,
}

impl CheckReport {
    /// True if every failing item is one marked unattainable.
    pub fn only_known_failures(&self) -> bool {
        self.items.iter().all(|i| i.passed || i.unattainable) && self.elapsed_s <= self.budget_s
    }

    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let items: Vec<String> = self
            .items
            .iter()
            .map(|i| {
                format!(
                    "{}{}: {}",
                    if i.passed { "" } else { "!" },
                    i.name,
                    i.detail
                )
            })
            .collect();
        format!(
            "[{status}] {:>2} {} ({:.2}s of {:.0}s) {}",
            self.id,
            self.title,
            self.elapsed_s,
            self.budget_s,
            items.join("; ")
        )
    }
}

#[derive(Default)]
struct Items(Vec<SubCheck>);

impl Items {
    fn push(&mut self, name: &str, passed: bool, detail: String) {
        self.0.push(SubCheck {
            name: name.to_string(),
            passed,
            detail,
            unattainable: false,
        });
    }

    fn close(&mut self, name: &str, got: f64, want: f64, tol: f64) {
        let err = (got - want).abs();
        self.push(
            name,
            err <= tol,
            format!("{got:.9} vs {want} (|Δ| {err:.2e} <= {tol:.0e})"),
        );
    }

    fn below(&mut self, name: &str, got: f64, limit: f64) {
        self.push(name, got < limit, format!("{got:.3e} < {limit:.0e}"));
    }

    fn mark_unattainable(&mut self, name: &str) {
        for i in self.0.iter_mut().filter(|i| i.name == name) {
            i.unattainable = true;
        }
    }
}

/// All `(id, title, group, budget in seconds)`.
pub const CRITERIA: [(u8, &str, Group, f64); 12] = [
    (1, "weak diaphanous m = 0 constant", Group::Energy, 1.0),
    (2, "weak series at p = 1", Group::Energy, 5.0),
    (3, "weak series at p = 1/2", Group::Energy, 5.0),
    (4, "strong series at p = 1", Group::Energy, 5.0),
    (5, "strong zero crossing", Group::Energy, 20.0),
    (6, "strong m = 0 constant", Group::Energy, 1.0),
    (7, "energy curves on p in [0.5, 4]", Group::Energy, 120.0),
    (8, "dilute leading asymptotics", Group::Energy, 1.0),
    (9, "special-function identities", Group::Bessel, 10.0),
    (10, "zero-mode analysis", Group::ZeroMode, 30.0),
    (11, "string spectrum", Group::String, 30.0),
    (12, "structural invariants", Group::Structural, 5.0),
];

/// Runs one criterion; errors inside it count as failures.
pub fn run_criterion(id: u8) -> Option<CheckReport> {
    let &(id, title, group, budget_s) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let mut items = Items::default();
    let outcome = match id {
        1 => c1(&mut items),
        2 => c2(&mut items),
        3 => c3(&mut items),
        4 => c4(&mut items),
        5 => c5(&mut items),
        6 => c6(&mut items),
        7 => c7(&mut items),
        8 => c8(&mut items),
        9 => c9(&mut items),
        10 => c10(&mut items),
        11 => c11(&mut items),
        _ => c12(&mut items),
    };
    if let Err(e) = outcome {
        items.push("evaluation", false, e.to_string());
    }
    let elapsed_s = start.elapsed().as_secs_f64();
    let passed = items.0.iter().all(|i| i.passed) && elapsed_s <= budget_s;
    Some(CheckReport {
        id,
        title,
        group,
        passed,
        elapsed_s,
        budget_s,
        items: items.0,
    })
}

/// Runs every criterion, or those of one group.
pub fn run(filter: Option<Group>) -> Vec<CheckReport> {
    CRITERIA
        .iter()
        .filter(|c| filter.is_none_or(|g| g == c.2))
        .filter_map(|c| run_criterion(c.0))
        .collect()
}

fn c1(it: &mut Items) -> Result<()> {
    // recomputed rather than read from the cache so the runtime is honest
    let c = m0_weak_quad(CONSTANT_TOL)?.value;
    it.close("C_weak", c, -0.4908775, 5e-7);
    Ok(())
}

fn c2(it: &mut Items) -> Result<()> {
    it.close("e(1), M=0", e_weak(1.0, 0)?.e_value, -0.0010847, 2e-6);
    it.below("|e(1)|, M=3", e_weak(1.0, 3)?.e_value.abs(), 1e-6);
    Ok(())
}

fn c3(it: &mut Items) -> Result<()> {
    it.close("e(0.5), M=3", e_weak(0.5, 3)?.e_value, 0.25, 5e-4);
    Ok(())
}

fn c4(it: &mut Items) -> Result<()> {
    let f = 4.0 * PI;
    it.close(
        "e(1)/4π, M=0",
        e_strong(1.0, 0)?.e_value / f,
        -0.013633,
        2e-5,
    );
    it.close(
        "e(1)/4π, M=1",
        e_strong(1.0, 1)?.e_value / f,
        -0.01356,
        1e-5,
    );
    Ok(())
}

fn c5(it: &mut Items) -> Result<()> {
    let p0 = zero_crossing(Model::Strong, (0.5, 1.0), 2, &SeriesOptions::default())?;
    it.close("p0", p0, 0.583, 0.002);
    Ok(())
}

fn c6(it: &mut Items) -> Result<()> {
    let c = m0_general_quad(1.0, CONSTANT_TOL)?.value;
    it.close("C_strong", c, -0.651752, 5e-6);
    Ok(())
}

/// Largest ratio of an adjacent-point jump to the neighbouring jumps.
fn worst_jump_ratio(v: &[f64]) -> f64 {
    let d: Vec<f64> = v.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
    let floor = 1e-12 * v.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    (0..d.len())
        .map(|i| {
            let left = if i > 0 { d[i - 1] } else { 0.0 };
            let right = d.get(i + 1).copied().unwrap_or(0.0);
            d[i] / left.max(right).max(floor)
        })
        .fold(0.0, f64::max)
}

/// The `p` grid of the curve checks.
pub fn curve_grid(points: usize) -> Vec<f64> {
    (0..points)
        .map(|i| 0.5 + 3.5 * i as f64 / (points - 1) as f64)
        .collect()
}

fn c7(it: &mut Items) -> Result<()> {
    let grid = curve_grid(50);
    let weak: Vec<f64> = grid
        .iter()
        .map(|&p| e_weak(p, crate::energy::default_m(p)).map(|r| r.e_value))
        .collect::<Result<_>>()?;
    let strong: Vec<f64> = grid
        .iter()
        .map(|&p| e_strong(p, crate::energy::default_m(p)).map(|r| r.e_value))
        .collect::<Result<_>>()?;
    let jw = worst_jump_ratio(&weak);
    let js = worst_jump_ratio(&strong);
    it.push(
        "weak smooth",
        jw <= 5.0,
        format!("worst jump ratio {jw:.2} <= 5"),
    );
    it.push(
        "strong smooth",
        js <= 5.0,
        format!("worst jump ratio {js:.2} <= 5"),
    );

    let bad_weak: Vec<f64> = grid
        .iter()
        .zip(&weak)
        .filter(|(&p, &e)| (p < 1.0 - 1e-9 && e <= 0.0) || (p > 1.0 + 1e-9 && p <= 2.0 && e >= 0.0))
        .map(|(&p, _)| p)
        .collect();
    it.push(
        "weak sign",
        bad_weak.is_empty(),
        format!("positive below p = 1, negative on (1, 2]; violations at {bad_weak:?}"),
    );
    let p0 = 0.583;
    let bad_strong: Vec<f64> = grid
        .iter()
        .zip(&strong)
        .filter(|(&p, &e)| (p < p0 - 0.002 && e <= 0.0) || (p > p0 + 0.002 && e >= 0.0))
        .map(|(&p, _)| p)
        .collect();
    it.push(
        "strong sign",
        bad_strong.is_empty(),
        format!("positive only below p = {p0}; violations at {bad_strong:?}"),
    );
    // both curves fall monotonically through their zero
    let falling = |v: &[f64], lo: f64, hi: f64| {
        grid.windows(2)
            .zip(v.windows(2))
            .filter(|(g, _)| g[0] >= lo && g[1] <= hi)
            .all(|(_, e)| e[1] < e[0])
    };
    it.push(
        "weak decreasing near p = 1",
        falling(&weak, 0.5, 1.5),
        "on [0.5, 1.5]".into(),
    );
    it.push(
        "strong decreasing near p0",
        falling(&strong, 0.5, 1.0),
        "on [0.5, 1.0]".into(),
    );
    Ok(())
}

/// The printed dilute formula, transcribed term by term.
fn dilute_formula(p: f64) -> f64 {
    const ZETA_3: f64 = 1.202_056_903_159_594_3;
    let terms = [
        -(p * p) * ZETA_3 / (16.0 * PI * PI),
        (5.0 / 32.0) * (2.0 * PI / p).ln(),
        19.0 * PI * PI / (7680.0 * p * p),
        -0.301590,
        -0.000012 / (p * p),
    ];
    terms.iter().sum()
}

fn c8(it: &mut Items) -> Result<()> {
    let mut worst: f64 = 0.0;
    for p in [0.25, 0.5, 1.0, 2.0, 2.0 * PI, 10.0] {
        worst = worst.max((w_dilute_asymptotic(p)?.e_value - dilute_formula(p)).abs());
    }
    it.below("re-evaluation", worst, 1e-12);
    let w1 = w_dilute_asymptotic(1.0)?.e_value;
    it.push(
        "w(1) leading",
        (w1 - 0.00237).abs() < 5e-5,
        format!("{w1:.6} ≈ 0.00237; the full w(1) with remainder is 0, not reproduced"),
    );
    Ok(())
}

fn log_grid(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let r = (hi / lo).ln();
    (0..n).map(move |i| lo * (r * i as f64 / (n - 1) as f64).exp())
}

fn c9(it: &mut Items) -> Result<()> {
    let (mut wr, mut id42) = (0.0f64, 0.0f64);
    for nu in [0.0, 0.5, 1.0, 2.5, 5.0, 10.0, 25.0] {
        for x in log_grid(1e-3, 60.0, 41) {
            let e = eval_ik(nu, x, true)?;
            wr = wr.max(e.wronskian_residual());
            let lhs = -4.0 * x * x * e.i_val * e.i_prime * e.k_val * e.k_prime;
            let l = lambda_nu(nu, x)?.lambda;
            let rhs = 1.0 - x * x * l * l;
            id42 = id42.max(((lhs - rhs) / rhs).abs());
        }
    }
    it.below("Wronskian", wr, 1e-10);
    it.below("product identity", id42, 1e-10);

    let nu = 20.0;
    let mut ov = 0.0f64;
    for t in 0..=16 {
        let x = nu * (0.5 + 1.5 * t as f64 / 16.0);
        let a = eval_ik_branch(nu, x, Branch::Recurrence)?;
        let b = eval_ik_branch(nu, x, Branch::Uniform)?;
        for (u, v) in [
            (a.i_val, b.i_val),
            (a.k_val, b.k_val),
            (a.i_prime, b.i_prime),
            (a.k_prime, b.k_prime),
        ] {
            ov = ov.max(((u - v) / u).abs());
        }
    }
    it.below("branch overlap", ov, 1e-9);

    let mut rec = 0.0f64;
    for nu in [1.0, 1.5, 2.5, 5.0, 10.0] {
        for x in log_grid(0.5, 50.0, 25) {
            let j = jy(nu, x)?;
            let lhs = j.jp * j.jp + (nu * nu / (x * x)) * j.j * j.j;
            let rhs = 0.5 * (bessel_j(nu - 1.0, x)?.powi(2) + bessel_j(nu + 1.0, x)?.powi(2));
            rec = rec.max((lhs - rhs).abs());
        }
    }
    it.below("J recursion", rec, 1e-10);
    Ok(())
}

/// Cutoff of the zero-mode classification runs.
pub const ZERO_MODE_CUTOFF: f64 = 200.0;

fn c10(it: &mut Items) -> Result<()> {
    let pc = pole_coefficients(40.0, &[0.02, 0.05, 0.1])?;
    it.close("Dirichlet 1/x³", pc.dirichlet.subleading, 0.25, 0.005);
    it.close("Neumann 1/x³", pc.neumann.subleading, 0.75, 0.005);
    it.close("residue sum", pc.residue_sum(), 0.5, 0.01);

    let lam = ZERO_MODE_CUTOFF;
    let c = residual_energy(&DispersionModel::constant(1.0), lam, 1.0, 1.0)?;
    it.push(
        "constant ξ",
        c.convergence == Convergence::Divergent && c.growth == Growth::Linear,
        format!(
            "{:?}, {:?}, ratio {:.4}",
            c.convergence, c.growth, c.growth_ratio
        ),
    );
    let b1 = residual_energy(&DispersionModel::power_law(1.0, 1.0, 1.0), lam, 1.0, 1.0)?;
    it.push(
        "β = 1",
        b1.convergence == Convergence::Divergent && b1.growth == Growth::Logarithmic,
        format!(
            "{:?}, {:?}, ratio {:.4}",
            b1.convergence, b1.growth, b1.growth_ratio
        ),
    );
    let b15 = residual_energy(&DispersionModel::power_law(1.0, 1.5, 1.0), lam, 1.0, 1.0)?;
    it.push(
        "β = 1.5 finite",
        b15.convergence == Convergence::Finite,
        format!("{:?}, ratio {:.4}", b15.convergence, b15.growth_ratio),
    );
    it.push(
        "β = 1.5 stability",
        b15.stability < 1e-3,
        format!(
            "|I(2Λ) − I(Λ)|/|I(Λ)| = {:.4} at Λ = {lam}, needs < 1e-3",
            b15.stability
        ),
    );
    // the x^{-3/2} tail changes I by ~2% per doubling at Λ = 200
    it.mark_unattainable("β = 1.5 stability");
    Ok(())
}

fn c11(it: &mut Items) -> Result<()> {
    let params = |beta: f64| StringParams::new(beta, 1.0, 1.0, PI, 1.0, 1.0);
    let pt = spectrum_dw_dk(
        1,
        1,
        0.0,
        &params(1.01)?,
        Zeros::McMahon,
        ExpansionMode::Leading,
    )?;
    let want = PI * 1e-4 / 20.0;
    let rel = (pt.dw_dk / want - 1.0).abs();
    it.push(
        "dW/dk at k = 0",
        rel < 1e-3,
        format!("{:.6e} vs {want:.6e} (rel {rel:.1e})", pt.dw_dk),
    );

    let scaled: Vec<f64> = [1.005, 1.01, 1.02]
        .iter()
        .map(|&b| {
            spectrum_dw_dk(1, 1, 0.0, &params(b)?, Zeros::Exact, ExpansionMode::Leading)
                .map(|s| s.dw_dk / (b - 1.0).powi(2))
        })
        .collect::<Result<_>>()?;
    let spread = scaled
        .iter()
        .fold(0.0f64, |a, v| a.max((v / scaled[1] - 1.0).abs()));
    it.push(
        "(β−1)² law",
        spread < 0.01,
        format!("spread {spread:.2e} < 1e-2 (exact zeros)"),
    );

    let i11 = overlap_i(1, 1, 1, &params(1.0)?)?;
    it.close("I_11", i11, 0.5, 1e-8);
    let i12 = overlap_i(1, 2, 1, &params(1.0)?)?;
    it.close("I_12", i12, 0.0, 1e-9);
    Ok(())
}

fn c12(it: &mut Items) -> Result<()> {
    let opts = SeriesOptions::default();
    let vac = Medium::VACUUM;
    let cases = [
        (Model::Strong, vac, vac),
        (Model::Weak, Medium::new(2.0, 0.5), vac),
        (Model::Dilute, Medium::new(1.1, 1.0), vac),
    ];
    let mut ratio_err = 0.0f64;
    for (model, inner, outer) in cases {
        for p in [1.0, 2.0, 3.5] {
            let pec = WedgeConfig::new(p, 1.0, inner, outer, Boundary::PerfectConductor)?;
            let per = WedgeConfig::new(p, 1.0, inner, outer, Boundary::Periodic)?;
            let a = energy_per_length(&pec, model, None, &opts)?.energy_per_length;
            let b = energy_per_length(&per, model, None, &opts)?.energy_per_length;
            ratio_err = ratio_err.max((b / a - 2.0).abs());
        }
    }
    it.push(
        "periodic/conductor",
        ratio_err == 0.0,
        format!("max |ratio − 2| = {ratio_err:e}"),
    );

    let base = energy_per_length(
        &WedgeConfig::uniform(1.5, 1.0, 1.0, Boundary::PerfectConductor)?,
        Model::Strong,
        None,
        &opts,
    )?
    .energy_per_length;
    let mut scale_err = 0.0f64;
    for (n, a) in [(2.0, 1.0), (1.0, 3.0), (1.7, 0.3)] {
        let e = energy_per_length(
            &WedgeConfig::uniform(1.5, a, n, Boundary::PerfectConductor)?,
            Model::Strong,
            None,
            &opts,
        )?
        .energy_per_length;
        scale_err = scale_err.max((e * n * a * a / base - 1.0).abs());
    }
    it.push(
        "1/(na²) scaling",
        scale_err <= 4.0 * f64::EPSILON,
        format!("max relative deviation {scale_err:.1e} <= 4 ulp"),
    );

    let mut min_dw = f64::INFINITY;
    let mut samples = 0;
    for beta in [1.0, 1.01, 1.1, 1.5] {
        let params = StringParams::new(beta, 1.3, 1.0, PI / 1.5, 1.0, 1.0)?;
        for m in 1..=3 {
            for s in 1..=3 {
                for k in [0.0, 0.5, 2.0, 10.0] {
                    for zeros in [Zeros::Exact, Zeros::McMahon] {
                        let dw =
                            spectrum_dw_dk(m, s, k, &params, zeros, ExpansionMode::Leading)?.dw_dk;
                        min_dw = min_dw.min(dw);
                        samples += 1;
                    }
                }
                let dw =
                    spectrum_dw_dk(m, s, 0.5, &params, Zeros::Exact, ExpansionMode::Exact)?.dw_dk;
                min_dw = min_dw.min(dw);
                samples += 1;
            }
        }
    }
    it.push(
        "dW/dk >= 0",
        min_dw >= 0.0,
        format!("min {min_dw:e} over {samples} samples"),
    );
    Ok(())
}
