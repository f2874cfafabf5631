//! Photon production by the sudden appearance of a cosmic string on the
//! wedge axis.
//!
//! The string changes the azimuthal order of the TM modes from `mp` to `νp`
//! with `ν = βm`, `β = 1/(1 − 4GM)`. Matching the two mode bases at the
//! formation time gives Bogoliubov coefficients whose squares are the
//! produced particle densities. Factors `2πδ(k ± k')` and `δ_{mm'}` are
//! stripped, so results are per unit string length.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::bessel::{bessel_j, bessel_j_zero, mcmahon_zero_real, ZeroKind};
use crate::error::{domain, Result};
use crate::quadrature::{integrate, QuadOptions};

/// How the transverse roots `λa` are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Zeros {
    /// True zeros `j_{mp,s}` and `j_{βmp,s}`.
    Exact,
    /// The closed form `sπ + (m − ½)π/2`, with `m → βm` after formation.
    McMahon,
}

/// Treatment of the prefactors in the Bogoliubov coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpansionMode {
    /// `β → 1` outside the frequency difference, `I_{ss'} = δ_{ss'}/2`, and
    /// `√ρ − 1/√ρ → ρ − 1` to first order in `β − 1`.
    #[default]
    Leading,
    /// Everything kept: `1/√β`, `λ_m/λ_ν`, the square-root difference and the
    /// full overlap matrix (by quadrature, with exact zeros).
    Exact,
}

/// Before (`Minkowski`) or after (`String`) formation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    Minkowski,
    String,
}

/// String and wedge parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StringParams {
    /// `β = 1/(1 − 4GM) >= 1`.
    pub beta: f64,
    /// Refractive index of the wedge medium.
    pub n: f64,
    /// Permittivity of the wedge medium.
    pub eps: f64,
    /// Opening angle `α`; the azimuthal scale is `p = π/α`.
    pub alpha: f64,
    /// Arc radius.
    pub a: f64,
    /// String length.
    pub length: f64,
}

impl StringParams {
    pub fn new(beta: f64, n: f64, eps: f64, alpha: f64, a: f64, length: f64) -> Result<Self> {
        let s = StringParams {
            beta,
            n,
            eps,
            alpha,
            a,
            length,
        };
        s.validate()?;
        Ok(s)
    }

    /// `β` from the string tension `GM < 1/4`.
    pub fn beta_from_gm(gm: f64) -> Result<f64> {
        if !(0.0..0.25).contains(&gm) {
            return Err(domain(format!("GM must lie in [0, 1/4), got {gm}")));
        }
        Ok(1.0 / (1.0 - 4.0 * gm))
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.beta >= 1.0 && self.beta.is_finite()) {
            return Err(domain(format!("beta must be >= 1, got {}", self.beta)));
        }
        for (name, v) in [
            ("n", self.n),
            ("eps", self.eps),
            ("alpha", self.alpha),
            ("a", self.a),
            ("length", self.length),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(domain(format!("{name} must be positive, got {v}")));
            }
        }
        if self.alpha > 2.0 * PI {
            return Err(domain(format!(
                "alpha must not exceed 2π, got {}",
                self.alpha
            )));
        }
        Ok(())
    }

    /// `p = π/α`.
    pub fn p(&self) -> f64 {
        PI / self.alpha
    }

    fn order_factor(&self, metric: Metric) -> f64 {
        match metric {
            Metric::Minkowski => 1.0,
            Metric::String => self.beta,
        }
    }
}

/// One `(m, s, k)` mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StringMode {
    pub m: u32,
    pub s: u32,
    pub k: f64,
}

impl StringMode {
    pub fn new(m: u32, s: u32, k: f64) -> Result<Self> {
        if m == 0 || s == 0 {
            return Err(domain("string modes need m >= 1 and s >= 1"));
        }
        if !k.is_finite() {
            return Err(domain(format!("k must be finite, got {k}")));
        }
        Ok(StringMode { m, s, k })
    }
}

/// Transverse root `λa` of mode `(m, s)` in the given metric.
pub fn root(m: u32, s: u32, params: &StringParams, metric: Metric, zeros: Zeros) -> Result<f64> {
    params.validate()?;
    if m == 0 || s == 0 {
        return Err(domain("string modes need m >= 1 and s >= 1"));
    }
    let f = params.order_factor(metric);
    match zeros {
        Zeros::Exact => bessel_j_zero(f * m as f64 * params.p(), s, ZeroKind::J),
        Zeros::McMahon => Ok(mcmahon_zero_real(f * m as f64, s)),
    }
}

/// `ω = √(λ² + k²)/n`.
pub fn frequency(
    mode: &StringMode,
    params: &StringParams,
    metric: Metric,
    zeros: Zeros,
) -> Result<f64> {
    let lambda = root(mode.m, mode.s, params, metric, zeros)? / params.a;
    Ok((lambda * lambda + mode.k * mode.k).sqrt() / params.n)
}

/// `|N| = (1/n) √(2β/(αεω)) λ / (a |J_{νp+1}(λa)|)` (with `β = 1` before formation).
pub fn normalization_n(mode: &StringMode, params: &StringParams, metric: Metric) -> Result<f64> {
    let f = params.order_factor(metric);
    let order = f * mode.m as f64 * params.p();
    let la = root(mode.m, mode.s, params, metric, Zeros::Exact)?;
    let omega = frequency(mode, params, metric, Zeros::Exact)?;
    let lambda = la / params.a;
    let jn1 = bessel_j(order + 1.0, la)?;
    Ok(
        (2.0 * f / (params.alpha * params.eps * omega)).sqrt() * lambda
            / (params.n * params.a * jn1.abs()),
    )
}

fn overlap_integral(o1: f64, l1: f64, o2: f64, l2: f64) -> Result<f64> {
    // ∫₀¹ J_{o1}(l1 y) J_{o2}(l2 y) y dy, with a = 1
    let f = |y: f64| {
        if y == 0.0 {
            return 0.0;
        }
        match (bessel_j(o1, l1 * y), bessel_j(o2, l2 * y)) {
            (Ok(a), Ok(b)) => a * b * y,
            _ => f64::NAN,
        }
    };
    let r = integrate(f, 0.0, 1.0, QuadOptions::abs(1e-14))?.require_converged()?;
    Ok(r.value)
}

/// Klein–Gordon product of two modes with equal `k`, as the coefficient of `2πδ(k − k')`.
pub fn kg_product(
    mode1: &StringMode,
    mode2: &StringMode,
    params: &StringParams,
    metric: Metric,
) -> Result<f64> {
    if mode1.m != mode2.m {
        return Ok(0.0);
    }
    if mode1.k != mode2.k {
        return Err(domain("kg_product compares modes of equal k"));
    }
    let f = params.order_factor(metric);
    let order = f * mode1.m as f64 * params.p();
    let a = params.a;
    let l1 = root(mode1.m, mode1.s, params, metric, Zeros::Exact)?;
    let l2 = root(mode2.m, mode2.s, params, metric, Zeros::Exact)?;
    let w1 = frequency(mode1, params, metric, Zeros::Exact)?;
    let w2 = frequency(mode2, params, metric, Zeros::Exact)?;
    let n1 = normalization_n(mode1, params, metric)?;
    let n2 = normalization_n(mode2, params, metric)?;
    let radial = a * a * overlap_integral(order, l1, order, l2)?;
    let angular = 0.5 * params.alpha;
    let lambda1 = l1 / a;
    Ok(
        params.eps * params.n * params.n * (w1 + w2) / (f * lambda1 * lambda1)
            * n1
            * n2
            * radial
            * angular,
    )
}

/// Normalised overlap `I_{ss'}` of the post-formation radial function of
/// `(m, s)` with the pre-formation one of `(m, s')`, using exact zeros.
pub fn overlap_i(s: u32, s_prime: u32, m: u32, params: &StringParams) -> Result<f64> {
    let p = params.p();
    let beta = params.beta;
    let lnu = root(m, s, params, Metric::String, Zeros::Exact)?;
    let lm = root(m, s_prime, params, Metric::Minkowski, Zeros::Exact)?;
    let onu = beta * m as f64 * p;
    let om = m as f64 * p;
    let num = overlap_integral(onu, lnu, om, lm)?;
    let den = (bessel_j(onu + 1.0, lnu)? * bessel_j(om + 1.0, lm)?).abs();
    Ok(num / den)
}

/// Frequencies `(ω_m, ω_ν)` of mode `(m, s, k)` before and after formation.
fn frequency_pair(mode: &StringMode, params: &StringParams, zeros: Zeros) -> Result<(f64, f64)> {
    Ok((
        frequency(mode, params, Metric::Minkowski, zeros)?,
        frequency(mode, params, Metric::String, zeros)?,
    ))
}

/// Bogoliubov coefficient `δ(νsk | m s' −k)` with the delta functions stripped.
pub fn bogoliubov_delta(
    s: u32,
    s_prime: u32,
    m: u32,
    k: f64,
    params: &StringParams,
    zeros: Zeros,
    expansion: ExpansionMode,
) -> Result<f64> {
    let mode = StringMode::new(m, s, k)?;
    let (wm, wn) = frequency_pair(&mode, params, zeros)?;
    let rho = wn / wm;
    match expansion {
        ExpansionMode::Leading => {
            if s != s_prime {
                return Ok(0.0);
            }
            Ok(-0.5 * (rho - 1.0))
        }
        ExpansionMode::Exact => {
            let lm = root(m, s, params, Metric::Minkowski, zeros)?;
            let ln = root(m, s, params, Metric::String, zeros)?;
            let diff = (rho - 1.0) / rho.sqrt();
            let i = overlap_i(s, s_prime, m, params)?;
            Ok(-(lm / ln) * diff * i / params.beta.sqrt())
        }
    }
}

/// Number of `s'` partners beyond `s` kept in the exact overlap sum.
const EXACT_PARTNERS: u32 = 4;

/// Spectral densities of mode `(m, s)` at axial wavenumber `k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumPoint {
    pub m: u32,
    pub s: u32,
    pub k: f64,
    /// Created photons per unit length and unit `k`.
    pub dn_dk: f64,
    /// Created energy per unit length and unit `k`.
    pub dw_dk: f64,
    pub zeros: Zeros,
}

/// `dW/dk = ω_m dN/dk`; in the leading-order expansion this is
/// `(1/4) ω_m (ω_ν/ω_m − 1)²`.
pub fn spectrum_dw_dk(
    m: u32,
    s: u32,
    k: f64,
    params: &StringParams,
    zeros: Zeros,
    expansion: ExpansionMode,
) -> Result<SpectrumPoint> {
    let mode = StringMode::new(m, s, k)?;
    let (wm, _) = frequency_pair(&mode, params, zeros)?;
    let dn = if params.beta == 1.0 {
        0.0
    } else {
        match expansion {
            ExpansionMode::Leading => bogoliubov_delta(s, s, m, k, params, zeros, expansion)?.powi(2),
            ExpansionMode::Exact => {
                let mut sum = 0.0;
                for sp in 1..=s + EXACT_PARTNERS {
                    sum += bogoliubov_delta(s, sp, m, k, params, zeros, expansion)?.powi(2);
                }
                sum
            }
        }
    };
    Ok(SpectrumPoint {
        m,
        s,
        k,
        dn_dk: dn,
        dw_dk: wm * dn,
        zeros,
    })
}

/// The closed form `π (β−1)² m² / (8na (2s + m − ½))` at `k ≈ 0`.
pub fn spectrum_k0_closed_form(m: u32, s: u32, params: &StringParams) -> f64 {
    let (m, s) = (m as f64, s as f64);
    PI / (8.0 * params.n * params.a) * (params.beta - 1.0).powi(2) * m * m / (2.0 * s + m - 0.5)
}

/// Order-of-magnitude total radiated energy `W ~ (GM/t)²/n`.
pub fn total_energy_estimate(gm: f64, t: f64, n: f64) -> Result<f64> {
    if !(gm >= 0.0 && t > 0.0 && n > 0.0) {
        return Err(domain(format!(
            "need GM >= 0, t > 0, n > 0 (GM={gm}, t={t}, n={n})"
        )));
    }
    Ok((gm / t).powi(2) / n)
}
