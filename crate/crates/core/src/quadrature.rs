//! Adaptive Gauss–Kronrod (10/21 point) integration on finite and
//! semi-infinite intervals.
//!
//! The semi-infinite scheme splits `[0, ∞)` at a breakpoint `x₀` and maps the
//! tail with `x = x₀ t^{-1/(q-1)}`, which turns an `x^{-q}` decay into a
//! bounded integrand on `t ∈ (0, 1]`. Both pieces are refined by a single
//! global error-driven bisection so the error budget goes where it is needed.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Absolute tolerance used for constants compared against published digits.
pub const CONSTANT_TOL: f64 = 1e-10;
/// Absolute tolerance used for points of parameter sweeps.
pub const SWEEP_TOL: f64 = 1e-8;

const DEFAULT_MAX_EVALS: usize = 400_000;
/// Largest argument handed to a semi-infinite integrand.
const X_MAX: f64 = 1e280;

/// Outcome of an integration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
    /// Set when `abs_error_estimate` met the requested tolerance.
    pub converged: bool,
}

impl QuadResult {
    /// Turns a non-converged result into [`Error::NotConverged`].
    pub fn require_converged(self) -> Result<QuadResult> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::NotConverged {
                value: self.value,
                abs_error: self.abs_error_estimate,
                evaluations: self.evaluations,
            })
        }
    }
}

/// Tolerances and work limits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_evals: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions {
            abs_tol: CONSTANT_TOL,
            rel_tol: 0.0,
            max_evals: DEFAULT_MAX_EVALS,
        }
    }
}

impl QuadOptions {
    pub fn abs(tol: f64) -> Self {
        QuadOptions {
            abs_tol: tol,
            ..Default::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.abs_tol >= 0.0 && self.rel_tol >= 0.0)
            || (self.abs_tol == 0.0 && self.rel_tol == 0.0)
        {
            return Err(domain(format!(
                "tolerances must be non-negative and not both zero (abs={}, rel={})",
                self.abs_tol, self.rel_tol
            )));
        }
        Ok(())
    }
}

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689,
    0.973_906_528_517_171_720_077_964_012_084,
    0.930_157_491_355_708_226_001_207_180_060,
    0.865_063_366_688_984_510_732_096_688_423,
    0.780_817_726_586_416_897_063_717_578_345,
    0.679_409_568_299_024_406_234_327_365_115,
    0.562_757_134_668_604_683_339_000_099_273,
    0.433_395_394_129_247_190_799_265_943_166,
    0.294_392_862_701_460_198_131_126_603_104,
    0.148_874_338_981_631_210_884_826_001_130,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062,
    0.032_558_162_307_964_727_478_818_972_459,
    0.054_755_896_574_351_996_031_381_300_245,
    0.075_039_674_810_919_952_767_043_140_916,
    0.093_125_454_583_697_605_535_065_465_083,
    0.109_387_158_802_297_641_899_210_590_326,
    0.123_491_976_262_065_851_077_208_980_556,
    0.134_709_217_311_473_325_928_054_001_772,
    0.142_775_938_577_060_080_797_094_273_139,
    0.147_739_104_901_338_491_374_841_515_972,
    0.149_445_554_002_916_905_664_936_468_390,
];

const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893,
    0.149_451_349_150_580_593_145_776_339_658,
    0.219_086_362_515_982_043_995_534_934_228,
    0.269_266_719_309_996_355_091_226_921_569,
    0.295_524_224_714_752_870_173_892_994_651,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

/// One 21-point Kronrod panel with the QUADPACK error heuristic.
fn gk21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let centr = 0.5 * (a + b);
    let hlgth = 0.5 * (b - a);
    let dhlgth = hlgth.abs();
    let fc = f(centr);
    let mut resg = 0.0;
    let mut resk = WGK[10] * fc;
    let mut resabs = resk.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let absc = hlgth * XGK[j];
        let f1 = f(centr - absc);
        let f2 = f(centr + absc);
        fv1[j] = f1;
        fv2[j] = f2;
        if j % 2 == 1 {
            resg += WG[j / 2] * (f1 + f2);
        }
        resk += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
    }
    let reskh = 0.5 * resk;
    let mut resasc = WGK[10] * (fc - reskh).abs();
    for j in 0..10 {
        resasc += WGK[j] * ((fv1[j] - reskh).abs() + (fv2[j] - reskh).abs());
    }
    let value = resk * hlgth;
    resabs *= dhlgth;
    resasc *= dhlgth;
    let mut error = ((resk - resg) * hlgth).abs();
    if resasc != 0.0 && error != 0.0 {
        error = resasc * (200.0 * error / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * resabs);
    }
    if !value.is_finite() {
        error = f64::INFINITY;
    }
    Panel { a, b, value, error }
}

/// Globally adaptive integration of `f` over `[a, b]`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, opts: QuadOptions) -> Result<QuadResult> {
    opts.validate()?;
    if !(a.is_finite() && b.is_finite()) {
        return Err(domain(format!("finite interval required, got [{a}, {b}]")));
    }
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            abs_error_estimate: 0.0,
            evaluations: 0,
            converged: true,
        });
    }
    Ok(adapt(&f, &[a, b], opts))
}

fn adapt<F: Fn(f64) -> f64>(f: &F, breaks: &[f64], opts: QuadOptions) -> QuadResult {
    let mut heap = BinaryHeap::new();
    let mut evaluations = 0;
    for w in breaks.windows(2) {
        heap.push(gk21(f, w[0], w[1]));
        evaluations += 21;
    }
    loop {
        let (value, error) = heap
            .iter()
            .fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error));
        let target = opts.abs_tol.max(opts.rel_tol * value.abs());
        let converged = error <= target && error.is_finite();
        let stuck = heap.peek().is_none_or(|p| {
            let mid = 0.5 * (p.a + p.b);
            !(mid > p.a.min(p.b) && mid < p.a.max(p.b))
        });
        if converged || evaluations + 42 > opts.max_evals || stuck || !value.is_finite() {
            return QuadResult {
                value,
                abs_error_estimate: error,
                evaluations,
                converged,
            };
        }
        let worst = heap.pop().expect("non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        heap.push(gk21(f, worst.a, mid));
        heap.push(gk21(f, mid, worst.b));
        evaluations += 42;
    }
}

/// Configurable integration over `[0, ∞)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SemiInfinite {
    pub opts: QuadOptions,
    /// Splitting point between the direct panel and the mapped tail.
    pub breakpoint: f64,
    /// Expected decay power `q` of the tail, `|f| ≲ x^{-q}`, `q > 1`.
    pub tail_power: f64,
    /// Extra interior breakpoints on `(0, breakpoint)`.
    pub interior: Vec<f64>,
}

impl SemiInfinite {
    pub fn new(tol: f64) -> Self {
        SemiInfinite {
            opts: QuadOptions::abs(tol),
            breakpoint: 1.0,
            tail_power: 2.0,
            interior: Vec::new(),
        }
    }

    /// Uses the default breakpoint `max(1, ν)` for an integrand peaked near `x ~ ν`.
    pub fn order_scale(mut self, nu: f64) -> Self {
        self.breakpoint = nu.max(1.0);
        self
    }

    pub fn breakpoint(mut self, x0: f64) -> Self {
        self.breakpoint = x0;
        self
    }

    pub fn tail_power(mut self, q: f64) -> Self {
        self.tail_power = q;
        self
    }

    pub fn options(mut self, opts: QuadOptions) -> Self {
        self.opts = opts;
        self
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> Result<QuadResult> {
        self.opts.validate()?;
        let x0 = self.breakpoint;
        let q = self.tail_power;
        if !(x0 > 0.0 && x0.is_finite()) {
            return Err(domain(format!("breakpoint must be positive, got {x0}")));
        }
        if !(q > 1.0 && q.is_finite()) {
            return Err(domain(format!("tail power must exceed 1, got {q}")));
        }
        let e = 1.0 / (q - 1.0);
        // Below t_floor the mapped argument would leave the double range; the
        // hinted power law makes the mapped integrand flat there, so it is
        // continued by its value at t_floor.
        let t_floor = (X_MAX / x0).powf(-1.0 / e).min(1.0);
        // u ∈ [0, 1]: x = x₀ u;  u ∈ (1, 2]: t = 2 - u, x = x₀ t^{-e}
        let g = |u: f64| {
            if u <= 1.0 {
                x0 * f(x0 * u)
            } else {
                let t = (2.0 - u).max(t_floor);
                let x = x0 * t.powf(-e);
                let v = f(x);
                if v == 0.0 {
                    0.0
                } else {
                    v * x * e / t
                }
            }
        };
        let mut breaks = vec![0.0];
        for &p in &self.interior {
            if p > 0.0 && p < x0 {
                breaks.push(p / x0);
            }
        }
        breaks.sort_by(f64::total_cmp);
        breaks.extend([1.0, 2.0]);
        Ok(adapt(&g, &breaks, self.opts))
    }

    /// Adds an interior breakpoint on `(0, breakpoint)`.
    pub fn with_interior(mut self, x: f64) -> Self {
        self.interior.push(x);
        self
    }
}

/// `∫₀^∞ f` to absolute tolerance `tol`, optionally told that `|f| ≲ x^{-q}`.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(
    f: F,
    tol: f64,
    tail_power_hint: Option<f64>,
) -> Result<QuadResult> {
    let mut s = SemiInfinite::new(tol);
    if let Some(q) = tail_power_hint {
        s = s.tail_power(q);
    }
    s.integrate(f)
}

/// The closed-form `ξ² ln(2π/p) / (16π a²)` left by analytic regularisation of the m-sum.
pub fn regulated_log_term(xi: f64, p: f64, a: f64) -> Result<f64> {
    if !(p > 0.0) || !(a > 0.0) {
        return Err(domain(format!(
            "regulated_log_term needs p > 0 and a > 0 (p={p}, a={a})"
        )));
    }
    Ok(xi * xi * (2.0 * PI / p).ln() / (16.0 * PI * a * a))
}
