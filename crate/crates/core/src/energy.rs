//! Casimir energy per unit length of the closed wedge.
//!
//! The dimensionless series `e(p)` are
//!
//! ```text
//! e(p) = C + c ln(2π/p) + 2ζ(2) c₂/p² + 2ζ(4) c₄/p⁴ + 2 Σ_{m=1}^{M} [f(mp) − g(mp)]
//! ```
//!
//! where `f(ν)` is an `x`-integral of `λ_ν(x)`, `g(ν) = c₂/ν² + c₄/ν⁴` its
//! large-order expansion, and `C` the (separately integrated) `m = 0` term.
//! The weak diaphanous series carries an overall `ξ²` that is left to the
//! prefactor; the strong series is the perfect-reflector case `ξ = 1`; the
//! general form keeps `ξ` inside the logarithm.

use std::f64::consts::PI;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::bessel::lambda_split;
use crate::error::{domain, Error, Result};
use crate::quadrature::{QuadResult, SemiInfinite, CONSTANT_TOL};
use crate::roots::brent;
use crate::series::{hurwitz_zeta, zeta2, zeta4, ZETA3};

/// Boundary condition on the wedge faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Boundary {
    PerfectConductor,
    /// Faces identified (a cone); doubles the energy and requires `p >= 1`.
    Periodic,
}

/// A homogeneous medium.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Medium {
    pub eps: f64,
    pub mu: f64,
}

impl Medium {
    pub const VACUUM: Medium = Medium { eps: 1.0, mu: 1.0 };

    pub fn new(eps: f64, mu: f64) -> Self {
        Medium { eps, mu }
    }

    /// Refractive index `√(εμ)`.
    pub fn n(&self) -> f64 {
        (self.eps * self.mu).sqrt()
    }
}

/// Geometry and media of the closed wedge.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WedgeConfig {
    pub p: f64,
    /// Arc radius.
    pub a: f64,
    /// Medium inside the arc.
    pub inner: Medium,
    /// Medium outside the arc.
    pub outer: Medium,
    pub boundary: Boundary,
}

impl WedgeConfig {
    pub fn new(p: f64, a: f64, inner: Medium, outer: Medium, boundary: Boundary) -> Result<Self> {
        let c = WedgeConfig {
            p,
            a,
            inner,
            outer,
            boundary,
        };
        c.validate()?;
        Ok(c)
    }

    /// Builds the configuration from the opening angle `α`.
    pub fn from_alpha(
        alpha: f64,
        a: f64,
        inner: Medium,
        outer: Medium,
        boundary: Boundary,
    ) -> Result<Self> {
        if !(alpha > 0.0) {
            return Err(Error::Config(format!(
                "opening angle must be positive, got {alpha}"
            )));
        }
        let p = match boundary {
            Boundary::PerfectConductor => PI / alpha,
            Boundary::Periodic => 2.0 * PI / alpha,
        };
        Self::new(p, a, inner, outer, boundary)
    }

    /// Vacuum-like diaphanous configuration with given `n` in both regions.
    pub fn uniform(p: f64, a: f64, n: f64, boundary: Boundary) -> Result<Self> {
        let m = Medium::new(n, n);
        Self::new(p, a, Medium::new(n, n), m, boundary)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.p > 0.0 && self.p.is_finite()) {
            return Err(Error::Config(format!("p must be positive, got {}", self.p)));
        }
        if !(self.a > 0.0 && self.a.is_finite()) {
            return Err(Error::Config(format!(
                "arc radius a must be positive, got {}",
                self.a
            )));
        }
        for (name, v) in [
            ("eps1", self.inner.eps),
            ("mu1", self.inner.mu),
            ("eps2", self.outer.eps),
            ("mu2", self.outer.mu),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Config(format!("{name} must be positive, got {v}")));
            }
        }
        if self.boundary == Boundary::Periodic && self.p < 1.0 {
            return Err(Error::Config(format!(
                "periodic boundary requires p >= 1, got {}",
                self.p
            )));
        }
        Ok(())
    }

    pub fn n1(&self) -> f64 {
        self.inner.n()
    }

    pub fn n2(&self) -> f64 {
        self.outer.n()
    }

    /// Equal light speed inside and outside.
    pub fn is_diaphanous(&self) -> bool {
        (self.n1() - self.n2()).abs() < 1e-12 * self.n1()
    }

    pub fn reflection(&self) -> ReflectionCoefficient {
        ReflectionCoefficient::from_permittivities(self.inner.eps, self.outer.eps)
    }

    fn boundary_factor(&self) -> f64 {
        match self.boundary {
            Boundary::PerfectConductor => 1.0,
            Boundary::Periodic => 2.0,
        }
    }
}

/// `ξ = (ε₂ − ε₁)/(ε₂ + ε₁)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReflectionCoefficient {
    pub xi: f64,
}

impl ReflectionCoefficient {
    pub fn from_permittivities(eps1: f64, eps2: f64) -> Self {
        ReflectionCoefficient {
            xi: (eps2 - eps1) / (eps2 + eps1),
        }
    }
}

/// Coupling regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    /// Perfectly reflecting arc, `ξ = 1`.
    Strong,
    /// Weak diaphanous coupling, leading order in `ξ²`.
    Weak,
    /// Dilute dielectric, leading order in `(ε₁ − ε₂)²`.
    Dilute,
}

/// Series value with diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergySeriesResult {
    /// `e(p)` or `w(p)`.
    pub e_value: f64,
    /// Energy per unit length; for the bare series functions this is the
    /// value for `a = n = 1`, a conducting boundary and unit `ξ²` or `(ε₁−ε₂)²`.
    pub energy_per_length: f64,
    /// Truncation order of the m-sum.
    pub m: u32,
    /// Magnitude of the first omitted asymptotic order.
    pub tail_estimate: f64,
    /// Accumulated quadrature error bound.
    pub quad_error: f64,
}

/// Knobs for the series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesOptions {
    /// Absolute tolerance for each `f(mp)` integral.
    pub tol: f64,
    /// Add the `ν⁻⁶` (and, where known, `ν⁻⁸`) tail for `m > M` through Hurwitz zeta values.
    pub accelerate: bool,
    /// Include the `−209π⁴/(5806080 p⁴)` moment in the dilute form.
    pub dilute_p4_term: bool,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        SeriesOptions {
            tol: CONSTANT_TOL,
            accelerate: false,
            dilute_p4_term: false,
        }
    }
}

/// Default truncation order.
pub fn default_m(p: f64) -> u32 {
    if p > 1.0 {
        0
    } else if p > 0.5 {
        3
    } else {
        (1.5 / p).ceil() as u32
    }
}

/// Large-order coefficients of `f(ν) − ...` as functions of `X = ξ²` (divided by `ξ²` for
/// the weak model).
#[derive(Debug, Clone, Copy)]
struct Asymptote {
    c2: f64,
    c4: f64,
    c6: f64,
    c8: Option<f64>,
}

impl Asymptote {
    fn general(x2: f64) -> Self {
        Asymptote {
            c2: x2 * (10.0 - 3.0 * x2) / 960.0,
            c4: -x2 * (196.0 - 51.0 * x2 + 5.0 * x2 * x2) / 107_520.0,
            c6: x2 * (6820.0 - 1008.0 * x2 + 120.0 * x2 * x2 - 7.0 * x2.powi(3)) / 7_096_320.0,
            c8: None,
        }
    }

    fn weak() -> Self {
        Asymptote {
            c2: 1.0 / 96.0,
            c4: -7.0 / 3840.0,
            c6: 31.0 / 32256.0,
            c8: Some(-127.0 / 122_880.0),
        }
    }

    fn strong() -> Self {
        Asymptote {
            c2: 7.0 / 960.0,
            c4: -5.0 / 3584.0,
            c6: 395.0 / 473_088.0,
            c8: Some(-2599.0 / 2_580_480.0),
        }
    }

    fn g(&self, nu: f64) -> f64 {
        let v2 = nu * nu;
        self.c2 / v2 + self.c4 / (v2 * v2)
    }

    /// `2 Σ_{m>M}` of the next one (or two) orders.
    fn tail(&self, p: f64, m: u32, with_c8: bool) -> f64 {
        let a = m as f64 + 1.0;
        let mut t = 2.0 * self.c6 * hurwitz_zeta(6.0, a) / p.powi(6);
        if with_c8 {
            if let Some(c8) = self.c8 {
                t += 2.0 * c8 * hurwitz_zeta(8.0, a) / p.powi(8);
            }
        }
        t
    }
}

/// `g(ν) = 1/(96ν²) − 7/(3840ν⁴)`.
pub fn g_weak(nu: f64) -> f64 {
    Asymptote::weak().g(nu)
}

/// `g(ν) = 7/(960ν²) − 5/(3584ν⁴)`.
pub fn g_strong(nu: f64) -> f64 {
    Asymptote::strong().g(nu)
}

/// Large-order expansion of [`f_general`] through `ν⁻⁴`.
pub fn g_general(nu: f64, xi: f64) -> f64 {
    Asymptote::general(xi * xi).g(nu)
}

fn check_order(nu: f64) -> Result<()> {
    if !(nu > 0.0 && nu.is_finite()) {
        return Err(domain(format!("order must be positive, got {nu}")));
    }
    Ok(())
}

fn check_xi(xi: f64) -> Result<()> {
    if !(xi.abs() <= 1.0) {
        return Err(domain(format!(
            "reflection coefficient must lie in [-1, 1], got {xi}"
        )));
    }
    Ok(())
}

/// `ln(1 − w) + w`, accurate for small `w`.
fn log1m_plus(w: f64) -> f64 {
    if w.abs() < 0.05 {
        let mut term = w;
        let mut sum = 0.0;
        for k in 2..40 {
            term *= w;
            let d = term / k as f64;
            sum -= d;
            if d.abs() < 1e-18 * sum.abs() {
                break;
            }
        }
        sum
    } else {
        (-w).ln_1p() + w
    }
}

fn integrate_order(nu: f64, tol: f64, f: impl Fn(f64) -> f64) -> Result<QuadResult> {
    SemiInfinite::new(tol)
        .order_scale(nu)
        .tail_power(3.0)
        .integrate(f)?
        .require_converged()
}

/// Weak integrand `x³[−λ² + x²/(4(x²+ν²)³)] = −x³ δ (2λ₀ + δ)`.
fn weak_integrand(nu: f64, x: f64) -> f64 {
    match lambda_split(nu, x) {
        Ok(s) => -x.powi(3) * s.delta * (2.0 * s.lambda0 + s.delta),
        Err(_) => f64::NAN,
    }
}

/// `x[ln(1 − ξ²x²λ²) + ξ²x⁴/(4(x²+ν²)³)]`.
fn general_integrand(nu: f64, x: f64, xi2: f64) -> f64 {
    let s = match lambda_split(nu, x) {
        Ok(s) => s,
        Err(_) => return f64::NAN,
    };
    let l = s.lambda0 + s.delta;
    let w = xi2 * x * x * l * l;
    let tail = -xi2 * x * x * s.delta * (2.0 * s.lambda0 + s.delta);
    if w < 0.05 {
        x * (log1m_plus(w) + tail)
    } else {
        // 1 − ξ²x²λ² = (1 − ξ²) + ξ²(1 − x²λ²) keeps precision as ξ → 1
        let one_minus = (1.0 - xi2) + xi2 * s.one_minus_x2_lambda2;
        x * (one_minus.ln() + xi2 * x * x * s.lambda0 * s.lambda0)
    }
}

/// `f(ν) = ∫₀^∞ x³[−λ_ν² + x²/(4(x²+ν²)³)] dx` with error bound.
pub fn f_weak_quad(nu: f64, tol: f64) -> Result<QuadResult> {
    check_order(nu)?;
    integrate_order(nu, tol, |x| weak_integrand(nu, x))
}

/// `f(ν) = ∫₀^∞ x[ln(1 − x²λ_ν²) + x⁴/(4(x²+ν²)³)] dx` with error bound.
pub fn f_strong_quad(nu: f64, tol: f64) -> Result<QuadResult> {
    f_general_quad(nu, 1.0, tol)
}

/// `f(ν; ξ) = ∫₀^∞ x[ln(1 − ξ²x²λ_ν²) + ξ²x⁴/(4(x²+ν²)³)] dx` with error bound.
pub fn f_general_quad(nu: f64, xi: f64, tol: f64) -> Result<QuadResult> {
    check_order(nu)?;
    check_xi(xi)?;
    let xi2 = xi * xi;
    integrate_order(nu, tol, |x| general_integrand(nu, x, xi2))
}

pub fn f_weak(nu: f64) -> Result<f64> {
    f_weak_quad(nu, CONSTANT_TOL).map(|r| r.value)
}

pub fn f_strong(nu: f64) -> Result<f64> {
    f_strong_quad(nu, CONSTANT_TOL).map(|r| r.value)
}

pub fn f_general(nu: f64, xi: f64) -> Result<f64> {
    f_general_quad(nu, xi, CONSTANT_TOL).map(|r| r.value)
}

/// Which `m = 0` constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CouplingModel {
    Weak,
    Strong,
}

/// `ξ²/4 · [x⁴/(1+x²)³ − 1/x²]`, written without cancellation.
fn m0_regulator_gap(x: f64, xi2: f64) -> f64 {
    let x2 = x * x;
    -0.25 * xi2 * (1.0 + 3.0 * x2 + 3.0 * x2 * x2) / (x2 * (1.0 + x2).powi(3))
}

/// `∫₀^∞ x[−x²λ₀² + x⁴/(4(1+x²)³)] dx`.
pub fn m0_weak_quad(tol: f64) -> Result<QuadResult> {
    integrate_order(1.0, tol, |x| match lambda_split(0.0, x) {
        Ok(s) => x * (-x * x * s.delta * (2.0 * s.lambda0 + s.delta) + m0_regulator_gap(x, 1.0)),
        Err(_) => f64::NAN,
    })
}

/// `∫₀^∞ x[ln(1 − ξ²x²λ₀²) + ξ²x⁴/(4(1+x²)³)] dx`.
pub fn m0_general_quad(xi: f64, tol: f64) -> Result<QuadResult> {
    check_xi(xi)?;
    let xi2 = xi * xi;
    integrate_order(1.0, tol, |x| {
        // the ν = 0 integrand with x²/(4r⁶) subtracted, plus the regulator difference
        general_integrand(0.0, x, xi2) + x * m0_regulator_gap(x, xi2)
    })
}

const CACHED_TOL: f64 = 1e-13;

/// The `m = 0` constant, recomputed by quadrature once per process.
pub fn m0_constant(model: CouplingModel) -> Result<f64> {
    static WEAK: OnceLock<Result<f64>> = OnceLock::new();
    static STRONG: OnceLock<Result<f64>> = OnceLock::new();
    match model {
        CouplingModel::Weak => WEAK.get_or_init(|| m0_weak_quad(CACHED_TOL).map(|r| r.value)),
        CouplingModel::Strong => {
            STRONG.get_or_init(|| m0_general_quad(1.0, CACHED_TOL).map(|r| r.value))
        }
    }
    .clone()
}

fn check_p(p: f64) -> Result<()> {
    if !(p > 0.0 && p.is_finite()) {
        return Err(domain(format!("p must be positive, got {p}")));
    }
    Ok(())
}

fn assemble(
    p: f64,
    m: u32,
    constant: f64,
    log_coef: f64,
    asym: Asymptote,
    opts: &SeriesOptions,
    f: impl Fn(f64, f64) -> Result<QuadResult>,
) -> Result<EnergySeriesResult> {
    check_p(p)?;
    let mut sum = 0.0;
    let mut quad_error = 0.0;
    for k in 1..=m {
        let nu = k as f64 * p;
        let r = f(nu, opts.tol)?;
        sum += r.value - asym.g(nu);
        quad_error += 2.0 * r.abs_error_estimate;
    }
    let mut e = constant
        + log_coef * (2.0 * PI / p).ln()
        + 2.0 * zeta2() * asym.c2 / (p * p)
        + 2.0 * zeta4() * asym.c4 / p.powi(4)
        + 2.0 * sum;
    let tail = asym.tail(p, m, opts.accelerate);
    if opts.accelerate {
        e += tail;
    }
    Ok(EnergySeriesResult {
        e_value: e,
        energy_per_length: e / (8.0 * PI),
        m,
        tail_estimate: if opts.accelerate {
            (2.0 * asym.c8.unwrap_or(asym.c6) * hurwitz_zeta(8.0, m as f64 + 1.0) / p.powi(8)).abs()
        } else {
            tail.abs()
        },
        quad_error,
    })
}

/// Weak diaphanous series `e(p)` truncated at `M`.
pub fn e_weak(p: f64, m: u32) -> Result<EnergySeriesResult> {
    e_weak_with(p, m, &SeriesOptions::default())
}

pub fn e_weak_with(p: f64, m: u32, opts: &SeriesOptions) -> Result<EnergySeriesResult> {
    let c = m0_constant(CouplingModel::Weak)?;
    assemble(p, m, c, 0.25, Asymptote::weak(), opts, f_weak_quad)
}

/// Perfect-reflector series `e(p)` truncated at `M`.
pub fn e_strong(p: f64, m: u32) -> Result<EnergySeriesResult> {
    e_strong_with(p, m, &SeriesOptions::default())
}

pub fn e_strong_with(p: f64, m: u32, opts: &SeriesOptions) -> Result<EnergySeriesResult> {
    let c = m0_constant(CouplingModel::Strong)?;
    assemble(p, m, c, 0.25, Asymptote::strong(), opts, f_strong_quad)
}

/// Series for arbitrary `ξ ∈ [−1, 1]`, with `ξ` kept inside the logarithm.
/// Reduces to `ξ² e_weak` as `ξ → 0` and to `e_strong` at `ξ = ±1`.
pub fn e_general(p: f64, m: u32, xi: f64, opts: &SeriesOptions) -> Result<EnergySeriesResult> {
    check_xi(xi)?;
    let c = if xi.abs() == 1.0 {
        m0_constant(CouplingModel::Strong)?
    } else {
        m0_general_quad(xi, opts.tol.min(CACHED_TOL * 1e3) * (xi * xi).max(1e-6))?.value
    };
    let xi2 = xi * xi;
    assemble(
        p,
        m,
        c,
        0.25 * xi2,
        Asymptote::general(xi2),
        opts,
        |nu, tol| f_general_quad(nu, xi, tol * xi2.max(1e-6)),
    )
}

/// Remainder hook `ν ↦ r(ν)` for the dilute series.
pub type RemainderHook<'a> = &'a (dyn Fn(f64) -> Result<f64> + Sync);

/// Leading-asymptotic dilute-dielectric `w(p)` (remainder omitted).
pub fn w_dilute_asymptotic(p: f64) -> Result<EnergySeriesResult> {
    w_dilute_with(p, default_m(p), None, &SeriesOptions::default())
}

/// The `p⁻⁴` moment that the assembled dilute formula leaves out.
pub fn dilute_p4_moment(p: f64) -> f64 {
    -209.0 * PI.powi(4) / (5_806_080.0 * p.powi(4))
}

/// Dilute `w(p)` with an optional remainder `Σ_{m=1}^{M} r(mp)`.
pub fn w_dilute_with(
    p: f64,
    m: u32,
    remainder: Option<RemainderHook<'_>>,
    opts: &SeriesOptions,
) -> Result<EnergySeriesResult> {
    check_p(p)?;
    let mut w = -p * p * ZETA3 / (16.0 * PI * PI)
        + 5.0 / 32.0 * (2.0 * PI / p).ln()
        + 19.0 * PI * PI / (7680.0 * p * p)
        - 0.301_590
        - 0.000_012 / (p * p);
    if let Some(r) = remainder {
        for k in 1..=m {
            w += r(k as f64 * p)?;
        }
    }
    let moment = dilute_p4_moment(p);
    if opts.dilute_p4_term {
        w += moment;
    }
    Ok(EnergySeriesResult {
        e_value: w,
        energy_per_length: w / (64.0 * PI),
        m,
        tail_estimate: if opts.dilute_p4_term {
            0.0
        } else {
            moment.abs()
        },
        quad_error: 0.0,
    })
}

/// Dimensional energy per unit length for a configuration and model.
pub fn energy_per_length(
    config: &WedgeConfig,
    model: Model,
    m: Option<u32>,
    opts: &SeriesOptions,
) -> Result<EnergySeriesResult> {
    config.validate()?;
    let p = config.p;
    let m = m.unwrap_or_else(|| default_m(p));
    let a2 = config.a * config.a;
    let (mut r, prefactor) = match model {
        Model::Weak | Model::Strong => {
            if !config.is_diaphanous() {
                return Err(Error::Config(format!(
                    "{model:?} model requires a diaphanous configuration (n1 = n2), got n1={}, n2={}",
                    config.n1(),
                    config.n2()
                )));
            }
            let n = config.n1();
            if model == Model::Weak {
                let xi = config.reflection().xi;
                (e_weak_with(p, m, opts)?, xi * xi / (8.0 * PI * n * a2))
            } else {
                (e_strong_with(p, m, opts)?, 1.0 / (8.0 * PI * n * a2))
            }
        }
        Model::Dilute => {
            if config.inner.mu != 1.0 || config.outer.mu != 1.0 {
                return Err(Error::Config(format!(
                    "dilute model requires mu1 = mu2 = 1, got mu1={}, mu2={}",
                    config.inner.mu, config.outer.mu
                )));
            }
            let n = 0.5 * (config.n1() + config.n2());
            let de = config.inner.eps - config.outer.eps;
            (
                w_dilute_with(p, m, None, opts)?,
                de * de / (64.0 * PI * n * a2),
            )
        }
    };
    r.energy_per_length = config.boundary_factor() * prefactor * r.e_value;
    Ok(r)
}

/// Series value used by [`zero_crossing`].
fn series_value(model: Model, p: f64, m: u32, opts: &SeriesOptions) -> Result<f64> {
    Ok(match model {
        Model::Strong => e_strong_with(p, m, opts)?.e_value,
        Model::Weak => e_weak_with(p, m, opts)?.e_value,
        Model::Dilute => w_dilute_with(p, m, None, opts)?.e_value,
    })
}

/// Root of `e(p)` (or the asymptotic `w(p)`) inside `bracket`, to `1e-6` in `p`.
pub fn zero_crossing(
    model: Model,
    bracket: (f64, f64),
    m: u32,
    opts: &SeriesOptions,
) -> Result<f64> {
    let (lo, hi) = bracket;
    if !(lo > 0.0 && hi > lo) {
        return Err(domain(format!("invalid bracket ({lo}, {hi})")));
    }
    brent(|p| series_value(model, p, m, opts), lo, hi, 1e-6)
}
