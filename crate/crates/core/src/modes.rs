//! Eigenmodes of the closed wedge: eigenfrequencies for a conducting arc,
//! field components, the dielectric-arc dispersion relation and the
//! stress-tensor prefactor.
//!
//! Fields use unit mode coefficients and the time/axial factor `e^{ikz}`
//! (evaluated at `t = 0`); the absolute normalisation is arbitrary.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bessel::{bessel_j_zero, ik_products, jy, ZeroKind};
use crate::energy::{Boundary, WedgeConfig};
use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Polarization {
    /// Transverse electric, `E_z = 0`.
    TE,
    /// Transverse magnetic, `H_z = 0`.
    TM,
}

/// Labels an eigenmode of the closed wedge.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModeIndex {
    pub m: u32,
    pub s: u32,
    /// Axial wavenumber.
    pub k: f64,
    pub pol: Polarization,
}

impl ModeIndex {
    pub fn new(m: u32, s: u32, k: f64, pol: Polarization) -> Result<Self> {
        let mode = ModeIndex { m, s, k, pol };
        mode.validate()?;
        Ok(mode)
    }

    pub fn validate(&self) -> Result<()> {
        if self.s == 0 {
            return Err(domain("radial index s must be >= 1"));
        }
        if self.pol == Polarization::TM && self.m == 0 {
            return Err(domain("TM modes require m >= 1"));
        }
        if !self.k.is_finite() {
            return Err(domain(format!(
                "axial wavenumber must be finite, got {}",
                self.k
            )));
        }
        Ok(())
    }
}

/// Opening angle `α` of the wedge described by `config`.
pub fn opening_angle(config: &WedgeConfig) -> f64 {
    match config.boundary {
        Boundary::PerfectConductor => PI / config.p,
        Boundary::Periodic => 2.0 * PI / config.p,
    }
}

/// Transverse root `λ₁ a`: `j_{mp,s}` (TM) or `j'_{mp,s}` (TE).
pub fn transverse_root(mode: &ModeIndex, p: f64) -> Result<f64> {
    mode.validate()?;
    let nu = mode.m as f64 * p;
    let kind = match mode.pol {
        Polarization::TM => ZeroKind::J,
        Polarization::TE => ZeroKind::JPrime,
    };
    bessel_j_zero(nu, mode.s, kind)
}

/// `ω = √(j² + k²a²) / (n₁ a)` for a perfectly conducting arc.
pub fn eigenfrequency_pec(mode: &ModeIndex, config: &WedgeConfig) -> Result<f64> {
    config.validate()?;
    let j = transverse_root(mode, config.p)?;
    let a = config.a;
    Ok((j * j + mode.k * mode.k * a * a).sqrt() / (config.n1() * a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    Interior,
    Exterior,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Position {
    pub r: f64,
    pub theta: f64,
    pub z: f64,
}

/// Complex field components at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    pub position: Position,
    /// `(E_r, E_θ, E_z)`
    pub e: [Complex64; 3],
    /// `(H_r, H_θ, H_z)`
    pub h: [Complex64; 3],
}

/// Fields of `mode` at `position`, with the eigenfrequency of the
/// conducting-arc problem. In the exterior the Hankel function
/// `H^{(1)} = J + iY` replaces `J` and region-2 constants are used.
pub fn field_sample(
    mode: &ModeIndex,
    region: Region,
    position: Position,
    config: &WedgeConfig,
) -> Result<FieldSample> {
    let omega = eigenfrequency_pec(mode, config)?;
    let Position { r, theta, z } = position;
    let alpha = opening_angle(config);
    if !(0.0..=alpha).contains(&theta) {
        return Err(domain(format!(
            "theta must lie in [0, {alpha}], got {theta}"
        )));
    }
    let a = config.a;
    match region {
        Region::Interior if !(r > 0.0 && r <= a) => {
            return Err(domain(format!("interior requires 0 < r <= a, got r={r}")))
        }
        Region::Exterior if !(r >= a) => {
            return Err(domain(format!("exterior requires r >= a, got r={r}")))
        }
        _ => {}
    }
    let k = mode.k;
    let nu = mode.m as f64 * config.p;
    let (medium, lambda) = match region {
        Region::Interior => (config.inner, transverse_root(mode, config.p)? / a),
        Region::Exterior => {
            let n2 = config.n2();
            let l2 = n2 * n2 * omega * omega - k * k;
            if l2 <= 0.0 {
                return Err(domain(
                    "exterior field is evanescent (n₂ω <= |k|); not supported",
                ));
            }
            (config.outer, l2.sqrt())
        }
    };
    let zero = Complex64::new(0.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    // radial function and its derivative with respect to the argument
    let v = jy(nu, lambda * r)?;
    let (rad, drad) = match region {
        Region::Interior => (Complex64::new(v.j, 0.0), Complex64::new(v.jp, 0.0)),
        Region::Exterior => (Complex64::new(v.j, v.y), Complex64::new(v.jp, v.yp)),
    };
    let rad_over_r = rad / r;
    let mp = nu;
    let sn = (mp * theta).sin();
    let cs = (mp * theta).cos();
    let phase = Complex64::from_polar(1.0, k * z);
    let (eps, mu) = (medium.eps, medium.mu);
    let (e, h) = match mode.pol {
        Polarization::TM => (
            [
                -(2.0 * k / lambda) * drad * sn,
                -(2.0 * k * mp / (lambda * lambda)) * rad_over_r * cs,
                2.0 * i * rad * sn,
            ],
            [
                (2.0 * mp * eps * omega / (lambda * lambda)) * rad_over_r * cs,
                -(2.0 * eps * omega / lambda) * drad * sn,
                zero,
            ],
        ),
        Polarization::TE => (
            [
                -(2.0 * i * mu * omega * mp / (lambda * lambda)) * rad_over_r * sn,
                -(2.0 * i * mu * omega / lambda) * drad * cs,
                zero,
            ],
            [
                (2.0 * i * k / lambda) * drad * cs,
                -(2.0 * i * k * mp / (lambda * lambda)) * rad_over_r * sn,
                2.0 * rad * cs,
            ],
        ),
    };
    Ok(FieldSample {
        position,
        e: e.map(|c| c * phase),
        h: h.map(|c| c * phase),
    })
}

/// `(1/w) f'(w)/f(w)` for `f = J_ν` or `H^{(1)}_ν` at `w = √(w²)`, including
/// imaginary `w` (where it reduces to `−I'/(κI)` or `−K'/(κK)`).
fn scaled_log_derivative(nu: f64, w2: f64, hankel: bool) -> Result<Complex64> {
    if w2 == 0.0 {
        return Err(Error::Singular("transverse wavenumber vanishes".into()));
    }
    if w2 > 0.0 {
        let w = w2.sqrt();
        let v = jy(nu, w)?;
        if hankel {
            let h = Complex64::new(v.j, v.y);
            let dh = Complex64::new(v.jp, v.yp);
            Ok(dh / h / w)
        } else {
            if v.j.abs() < 1e-14 * v.jp.abs().max(1.0) {
                return Err(Error::Singular(format!("J_{nu} vanishes at {w}")));
            }
            Ok(Complex64::new(v.jp / (v.j * w), 0.0))
        }
    } else {
        let kappa = (-w2).sqrt();
        let p = ik_products(nu, kappa)?;
        let r = if hankel { p.log_deriv_k } else { p.log_deriv_i };
        Ok(Complex64::new(-r / kappa, 0.0))
    }
}

/// Left minus right side of the dielectric-arc dispersion relation on the
/// real frequency axis, in units of the arc radius (`u = λ₁a`, `v = λ₂a`):
///
/// `[(μ₁/u) J'/J − (μ₂/v) H'/H] [(ε₁ω²/u) J'/J − (ε₂ω²/v) H'/H] − m²p²k²(1/v² − 1/u²)²`.
pub fn dispersion_det(omega: f64, k: f64, m: u32, config: &WedgeConfig) -> Result<Complex64> {
    config.validate()?;
    let a = config.a;
    let (wa, ka) = (omega * a, k * a);
    let (n1, n2) = (config.n1(), config.n2());
    let u2 = n1 * n1 * wa * wa - ka * ka;
    let v2 = n2 * n2 * wa * wa - ka * ka;
    let nu = m as f64 * config.p;
    let ju = scaled_log_derivative(nu, u2, false)?;
    let hv = scaled_log_derivative(nu, v2, true)?;
    let (e1, m1, e2, m2) = (
        config.inner.eps,
        config.inner.mu,
        config.outer.eps,
        config.outer.mu,
    );
    let lhs = (ju * m1 - hv * m2) * (ju * (e1 * wa * wa) - hv * (e2 * wa * wa));
    let rhs = (nu * ka).powi(2) * (1.0 / v2 - 1.0 / u2).powi(2);
    Ok(lhs - rhs)
}

/// The same relation at imaginary frequency `ω = iζ`, where it is real:
/// `ΔΔ̃ − m²p²k²(1/x₁² − 1/x₂²)²` with `x_i = a√(n_i²ζ² + k²)`,
/// `Δ = −(μ₁/x₁) I'/I + (μ₂/x₂) K'/K` and `Δ̃ = ζ²[(ε₁/x₁) I'/I − (ε₂/x₂) K'/K]`.
pub fn dispersion_det_euclidean(zeta: f64, k: f64, m: u32, config: &WedgeConfig) -> Result<f64> {
    config.validate()?;
    let a = config.a;
    let (za, ka) = (zeta * a, k * a);
    let (n1, n2) = (config.n1(), config.n2());
    let x1 = (n1 * n1 * za * za + ka * ka).sqrt();
    let x2 = (n2 * n2 * za * za + ka * ka).sqrt();
    let nu = m as f64 * config.p;
    let ri = ik_products(nu, x1)?.log_deriv_i;
    let rk = ik_products(nu, x2)?.log_deriv_k;
    let (e1, m1, e2, m2) = (
        config.inner.eps,
        config.inner.mu,
        config.outer.eps,
        config.outer.mu,
    );
    let delta = -m1 / x1 * ri + m2 / x2 * rk;
    let delta_t = za * za * (e1 / x1 * ri - e2 / x2 * rk);
    let rhs = (nu * ka).powi(2) * (1.0 / (x1 * x1) - 1.0 / (x2 * x2)).powi(2);
    Ok(delta * delta_t - rhs)
}

/// `g_m(x) = 1 − ξ² x² λ_{mp}(x)²`, the mode factor left by the diaphanous
/// factorisation.
pub fn te_tm_factor(m: u32, p: f64, x: f64, xi: f64) -> Result<f64> {
    if !(xi.abs() <= 1.0) {
        return Err(domain(format!("|xi| must be <= 1, got {xi}")));
    }
    let nu = m as f64 * p;
    let q = ik_products(nu, x)?;
    let xi2 = xi * xi;
    Ok((1.0 - xi2) + xi2 * q.one_minus_x2_lambda2)
}

/// Diagonal `(T⁰⁰, T^rr, T^θθ, T^zz)` of the vacuum stress tensor at distance `r`
/// from the axis: `(p² + 11)(p² − 1)/(720π² r⁴) · (1, −3, 1, 1)`.
pub fn stress_prefactor(p: f64, r: f64) -> Result<[f64; 4]> {
    if !(r > 0.0) {
        return Err(domain(format!("r must be positive, got {r}")));
    }
    let c = (p * p + 11.0) * (p * p - 1.0) / (720.0 * PI * PI * r.powi(4));
    Ok([c, -3.0 * c, c, c])
}
