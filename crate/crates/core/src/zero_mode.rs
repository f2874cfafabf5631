//! The residual `m = 0` energy `Ê` left over when the TE and TM `m = 0`
//! contributions are combined with equal and opposite reflection
//! coefficients, and the tail coefficients that fix its regulated poles.
//!
//! `Ê = −(1/16πna²) ∫₀^∞ x² d/dx ln[(1 + ξxλ₀)/(1 − ξxλ₀)] dx` with
//! `λ₀ = (I₀K₀)'`. For constant `ξ` the integrand tends to `ξ` and the
//! integral diverges linearly; a reflection coefficient that falls off faster
//! than `1/x` makes it finite.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::bessel::{ik_products, lambda_split, UNIFORM_RADIUS};
use crate::error::{domain, Error, Result};
use crate::quadrature::{integrate, QuadOptions};

/// Shape of the reflection coefficient `ξ(x)` as a function of imaginary frequency.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DispersionKind {
    /// `ξ(x) = ξ₀`.
    Constant,
    /// `ξ(x) = ξ₀ min(1, (x/ζ₀)^{−β})`.
    PowerLaw,
    /// `ξ(x) = ξ₀ / (1 + (x/ζ₀)^β)`, a smooth curve with the same fall-off.
    DrudeLike,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DispersionModel {
    pub kind: DispersionKind,
    /// Low-frequency value, `|ξ₀| <= 1`. The sign selects which mode is TM.
    pub xi0: f64,
    /// Fall-off exponent `β`.
    pub beta_disp: f64,
    /// Crossover scale in units of `1/a`.
    pub zeta0: f64,
}

impl DispersionModel {
    pub fn constant(xi0: f64) -> Self {
        DispersionModel {
            kind: DispersionKind::Constant,
            xi0,
            beta_disp: 1.0,
            zeta0: 1.0,
        }
    }

    pub fn power_law(xi0: f64, beta_disp: f64, zeta0: f64) -> Self {
        DispersionModel {
            kind: DispersionKind::PowerLaw,
            xi0,
            beta_disp,
            zeta0,
        }
    }

    pub fn drude_like(xi0: f64, beta_disp: f64, zeta0: f64) -> Self {
        DispersionModel {
            kind: DispersionKind::DrudeLike,
            xi0,
            beta_disp,
            zeta0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.xi0.abs() <= 1.0) {
            return Err(domain(format!(
                "xi0 must satisfy |xi0| <= 1, got {}",
                self.xi0
            )));
        }
        if !(self.beta_disp > 0.0 && self.beta_disp.is_finite()) {
            return Err(domain(format!(
                "beta_disp must be positive, got {}",
                self.beta_disp
            )));
        }
        if !(self.zeta0 > 0.0 && self.zeta0.is_finite()) {
            return Err(domain(format!(
                "zeta0 must be positive, got {}",
                self.zeta0
            )));
        }
        Ok(())
    }

    /// `(ξ(x), ξ'(x))`.
    pub fn xi(&self, x: f64) -> (f64, f64) {
        let (b, z) = (self.beta_disp, self.zeta0);
        match self.kind {
            DispersionKind::Constant => (self.xi0, 0.0),
            DispersionKind::PowerLaw => {
                if x <= z {
                    (self.xi0, 0.0)
                } else {
                    let v = self.xi0 * (x / z).powf(-b);
                    (v, -b * v / x)
                }
            }
            DispersionKind::DrudeLike => {
                let t = (x / z).powf(b);
                let v = self.xi0 / (1.0 + t);
                (v, -b * t * v / (x * (1.0 + t)))
            }
        }
    }

    /// Points where `ξ` is not smooth, or where it changes scale.
    fn breakpoint(&self) -> Option<f64> {
        match self.kind {
            DispersionKind::Constant => None,
            DispersionKind::PowerLaw | DispersionKind::DrudeLike => Some(self.zeta0),
        }
    }
}

/// `x² · 2y'/(1 − y²)` with `y = ξ(x) x λ₀(x)`, using the analytic `λ₀'`.
pub fn residual_integrand(x: f64, model: &DispersionModel) -> Result<f64> {
    model.validate()?;
    if !(x > 0.0 && x.is_finite()) {
        return Err(domain(format!("x must be positive, got {x}")));
    }
    let (xi, dxi) = model.xi(x);
    if xi == 0.0 && dxi == 0.0 {
        return Ok(0.0);
    }
    let (xl, dxl, one_minus_x2l2) = x_lambda0(x)?;
    let dy = dxi * xl + xi * dxl;
    // 1 − ξ²x²λ² = (1 − ξ²) + ξ²(1 − x²λ²) stays accurate where xλ → −1
    let one_minus = (1.0 - xi * xi) + xi * xi * one_minus_x2l2;
    if one_minus <= 0.0 {
        return Err(Error::Singular(format!("|ξxλ₀| reached 1 at x = {x}")));
    }
    Ok(x * x * 2.0 * dy / one_minus)
}

/// `(xλ₀, (xλ₀)', 1 − x²λ₀²)`.
///
/// At large `x` the derivative `λ₀ + xλ₀'` is a difference of `O(1/x)` terms
/// that leaves `O(1/x²)`, so there it is split as `1/(2x²) + (xδ)'` with `δ`
/// from the uniform series and `(xδ)'` by a five-point stencil.
fn x_lambda0(x: f64) -> Result<(f64, f64, f64)> {
    if x >= UNIFORM_RADIUS {
        let xd = |t: f64| lambda_split(0.0, t).map(|s| t * s.delta);
        let h = 2e-3 * x;
        let d = (xd(x - 2.0 * h)? - 8.0 * xd(x - h)? + 8.0 * xd(x + h)? - xd(x + 2.0 * h)?)
            / (12.0 * h);
        let s = lambda_split(0.0, x)?;
        Ok((
            x * (s.lambda0 + s.delta),
            0.5 / (x * x) + d,
            s.one_minus_x2_lambda2,
        ))
    } else {
        let p = ik_products(0.0, x)?;
        Ok((
            x * p.lambda,
            p.lambda + x * p.lambda_prime(),
            p.one_minus_x2_lambda2,
        ))
    }
}

/// The same integrand with the derivative taken by central differences.
pub fn residual_integrand_numeric(x: f64, model: &DispersionModel) -> Result<f64> {
    model.validate()?;
    // ln((1 + y)/(1 − y)) = 2 artanh y, accurate when y is small
    let log_ratio = |t: f64| -> Result<f64> {
        let y = model.xi(t).0 * x_lambda0(t)?.0;
        Ok(2.0 * y.atanh())
    };
    let h = 1e-5 * x;
    Ok(x * x * (log_ratio(x + h)? - log_ratio(x - h)?) / (2.0 * h))
}

/// Outcome of the cutoff-doubling test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convergence {
    Finite,
    Divergent,
    Undetermined,
}

/// How the integral grows with the cutoff.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Growth {
    /// Increments shrink on each doubling.
    Decaying,
    /// Constant increments per doubling, `∝ ln Λ`.
    Logarithmic,
    /// Increments double on each doubling, `∝ Λ`.
    Linear,
    Unknown,
}

/// Relative change below which a doubling of the cutoff counts as stable.
pub const STABILITY_TOL: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResidualEnergy {
    /// `−I(Λ)/(16πna²)`.
    pub value: f64,
    pub cutoff: f64,
    /// `I(Λ), I(2Λ), I(4Λ)`.
    pub integrals: [f64; 3],
    /// `(I(4Λ) − I(2Λ))/(I(2Λ) − I(Λ))`.
    pub growth_ratio: f64,
    /// `|I(2Λ) − I(Λ)|/|I(Λ)|`.
    pub stability: f64,
    pub growth: Growth,
    pub convergence: Convergence,
}

fn integrate_piece(model: &DispersionModel, a: f64, b: f64) -> Result<f64> {
    let f = |x: f64| residual_integrand(x, model).unwrap_or(f64::NAN);
    let opts = QuadOptions {
        // λ₀' loses about 2 log10(x) digits at large x, so ask for 1e-10 only
        abs_tol: 1e-12,
        rel_tol: 1e-10,
        ..Default::default()
    };
    Ok(integrate(f, a, b, opts)?.require_converged()?.value)
}

/// `∫₀^Λ` of the residual integrand, split at the decades and at `ζ₀`.
pub fn residual_integral(model: &DispersionModel, cutoff: f64) -> Result<f64> {
    model.validate()?;
    let mut knots = vec![0.0];
    let mut d = 1.0;
    while d < cutoff {
        knots.push(d);
        d *= 10.0;
    }
    if let Some(z) = model.breakpoint() {
        if z < cutoff {
            knots.push(z);
        }
    }
    knots.push(cutoff);
    knots.sort_by(f64::total_cmp);
    knots.dedup();
    knots
        .windows(2)
        .map(|w| integrate_piece(model, w[0], w[1]))
        .sum()
}

/// `Ê` integrated to `cutoff`, classified by doubling the cutoff twice.
pub fn residual_energy(
    model: &DispersionModel,
    cutoff: f64,
    n: f64,
    a: f64,
) -> Result<ResidualEnergy> {
    model.validate()?;
    if !(cutoff > 10.0 && cutoff.is_finite()) {
        return Err(domain(format!("cutoff must exceed 10, got {cutoff}")));
    }
    if !(n > 0.0 && a > 0.0) {
        return Err(domain(format!("n and a must be positive (n={n}, a={a})")));
    }
    let i1 = residual_integral(model, cutoff)?;
    let i2 = i1 + integrate_piece(model, cutoff, 2.0 * cutoff)?;
    let i4 = i2 + integrate_piece(model, 2.0 * cutoff, 4.0 * cutoff)?;
    let (d1, d2) = (i2 - i1, i4 - i2);
    let stability = if i1 == 0.0 { d1.abs() } else { (d1 / i1).abs() };
    let ratio = if d1 == 0.0 { 0.0 } else { d2 / d1 };
    let growth = if (ratio - 2.0).abs() < 0.2 {
        Growth::Linear
    } else if (ratio - 1.0).abs() < 0.08 {
        Growth::Logarithmic
    } else if (0.0..0.92).contains(&ratio) {
        Growth::Decaying
    } else {
        Growth::Unknown
    };
    let convergence = if stability < STABILITY_TOL || growth == Growth::Decaying {
        Convergence::Finite
    } else if matches!(growth, Growth::Linear | Growth::Logarithmic) {
        Convergence::Divergent
    } else {
        Convergence::Undetermined
    };
    Ok(ResidualEnergy {
        value: -i1 / (16.0 * PI * n * a * a),
        cutoff,
        integrals: [i1, i2, i4],
        growth_ratio: ratio,
        stability,
        growth,
        convergence,
    })
}

/// `−d/dx ln(I₀K₀) = 1/x + 1/(4x³) + …`.
pub fn dirichlet_tail(x: f64) -> Result<f64> {
    let p = ik_products(0.0, x)?;
    Ok(-p.lambda / p.ik)
}

/// `d/dx ln|I₀'K₀'| = −1/x + 3/(4x³) + …`.
pub fn neumann_tail(x: f64) -> Result<f64> {
    let p = ik_products(0.0, x)?;
    // (I₀'K₀')' = λ₀ − 2I₀'K₀'/x
    Ok(p.lambda / p.ipkp - 2.0 / x)
}

/// Fitted tail of one mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TailFit {
    /// Coefficient of `1/x`.
    pub leading: f64,
    /// Coefficient of `1/x³`; it fixes the pole.
    pub subleading: f64,
    /// Residue of `−(1/2)∫ x^{2−s} (…) dx` at `s = 0`, extrapolated from the regulated integrals.
    pub residue: f64,
    /// Root-mean-square fit residual relative to the data.
    pub rms: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PoleCoefficients {
    pub dirichlet: TailFit,
    pub neumann: TailFit,
}

impl PoleCoefficients {
    pub fn residue_sum(&self) -> f64 {
        self.dirichlet.residue + self.neumann.residue
    }
}

const FIT_POINTS: usize = 48;
const FIT_TERMS: usize = 6;
const FIT_RMS_MAX: f64 = 1e-9;

/// Solves the normal equations of a small least-squares problem.
fn least_squares(rows: &[[f64; FIT_TERMS]], rhs: &[f64]) -> Result<[f64; FIT_TERMS]> {
    let mut m = [[0.0; FIT_TERMS + 1]; FIT_TERMS];
    for (r, &b) in rows.iter().zip(rhs) {
        for i in 0..FIT_TERMS {
            for j in 0..FIT_TERMS {
                m[i][j] += r[i] * r[j];
            }
            m[i][FIT_TERMS] += r[i] * b;
        }
    }
    for c in 0..FIT_TERMS {
        let piv = (c..FIT_TERMS)
            .max_by(|&i, &j| m[i][c].abs().total_cmp(&m[j][c].abs()))
            .unwrap_or(c);
        m.swap(c, piv);
        if m[c][c].abs() < 1e-300 {
            return Err(Error::Fit("singular normal equations".into()));
        }
        let pivot = m[c];
        for row in m.iter_mut().skip(c + 1) {
            let f = row[c] / pivot[c];
            for (v, pv) in row.iter_mut().zip(pivot.iter()).skip(c) {
                *v -= f * pv;
            }
        }
    }
    let mut x = [0.0; FIT_TERMS];
    for c in (0..FIT_TERMS).rev() {
        let s: f64 = (c + 1..FIT_TERMS).map(|k| m[c][k] * x[k]).sum();
        x[c] = (m[c][FIT_TERMS] - s) / m[c][c];
    }
    Ok(x)
}

fn fit_tail(tail: fn(f64) -> Result<f64>, cutoff: f64, s_values: &[f64]) -> Result<TailFit> {
    // T(x)·x = Σ b_j u^j with u = (c/x)², c the window start
    let c = cutoff / 4.0;
    let mut rows = Vec::with_capacity(FIT_POINTS);
    let mut rhs = Vec::with_capacity(FIT_POINTS);
    for i in 0..FIT_POINTS {
        let x = c + (cutoff - c) * i as f64 / (FIT_POINTS - 1) as f64;
        let u = (c / x).powi(2);
        rows.push(std::array::from_fn(|j| u.powi(j as i32)));
        rhs.push(tail(x)? * x);
    }
    let b = least_squares(&rows, &rhs)?;
    let ss: f64 = rows
        .iter()
        .zip(&rhs)
        .map(|(r, y)| (r.iter().zip(&b).map(|(a, b)| a * b).sum::<f64>() - y).powi(2))
        .sum();
    let scale = rhs.iter().map(|y| y * y).sum::<f64>();
    let rms = (ss / scale).sqrt();
    if !(rms < FIT_RMS_MAX) {
        return Err(Error::Fit(format!(
            "tail fit residual {rms:e} exceeds {FIT_RMS_MAX:e}"
        )));
    }
    let coef: [f64; FIT_TERMS] = std::array::from_fn(|j| b[j] * c.powi(2 * j as i32));

    // s·(1/2)∫₁^∞ x^{2−s}(T − b₀/x), numerically to the cutoff and from the fit beyond
    let residues: Vec<(f64, f64)> = s_values
        .iter()
        .map(|&s| -> Result<(f64, f64)> {
            let f = |x: f64| match tail(x) {
                Ok(t) => x.powf(2.0 - s) * (t - coef[0] / x),
                Err(_) => f64::NAN,
            };
            let inner = integrate(f, 1.0, cutoff, QuadOptions::abs(1e-12))?
                .require_converged()?
                .value;
            let outer: f64 = (1..FIT_TERMS)
                .map(|j| {
                    let pw = (2 * j + 1) as f64;
                    coef[j] * cutoff.powf(3.0 - s - pw) / (pw + s - 3.0)
                })
                .sum();
            Ok((s, 0.5 * s * (inner + outer)))
        })
        .collect::<Result<_>>()?;
    let residue = extrapolate_to_zero(&residues);
    Ok(TailFit {
        leading: coef[0],
        subleading: coef[1],
        residue,
        rms,
    })
}

/// Straight-line extrapolation of `(s, R(s))` pairs to `s = 0`.
fn extrapolate_to_zero(points: &[(f64, f64)]) -> f64 {
    match points.len() {
        0 => f64::NAN,
        1 => points[0].1,
        n => {
            let n = n as f64;
            let (sx, sy) = points
                .iter()
                .fold((0.0, 0.0), |(a, b), &(x, y)| (a + x, b + y));
            let (mx, my) = (sx / n, sy / n);
            let sxx: f64 = points.iter().map(|&(x, _)| (x - mx).powi(2)).sum();
            let sxy: f64 = points.iter().map(|&(x, y)| (x - mx) * (y - my)).sum();
            if sxx == 0.0 {
                my
            } else {
                my - sxy / sxx * mx
            }
        }
    }
}

/// Tolerance on `|leading_D + leading_N|`.
const LEADING_CANCEL_TOL: f64 = 1e-6;

/// Fits the `1/x` and `1/x³` tail coefficients of both `m = 0` modes on
/// `[cutoff/4, cutoff]` and extrapolates the regulated residues from `s_values`.
pub fn pole_coefficients(cutoff: f64, s_values: &[f64]) -> Result<PoleCoefficients> {
    if !(cutoff > 10.0 && cutoff <= 1e4) {
        return Err(domain(format!(
            "cutoff must lie in (10, 1e4], got {cutoff}"
        )));
    }
    if s_values.is_empty() || s_values.iter().any(|&s| !(s > 0.0 && s <= 0.2)) {
        return Err(domain("s values must be non-empty and lie in (0, 0.2]"));
    }
    let dirichlet = fit_tail(dirichlet_tail, cutoff, s_values)?;
    let neumann = fit_tail(neumann_tail, cutoff, s_values)?;
    let gap = dirichlet.leading + neumann.leading;
    if gap.abs() > LEADING_CANCEL_TOL {
        return Err(Error::Fit(format!(
            "1/x terms fail to cancel between modes: sum {gap:e}"
        )));
    }
    Ok(PoleCoefficients { dirichlet, neumann })
}
