//! Modified Bessel functions `I_ν`, `K_ν` of real order, the product function
//! `λ_ν(x) = (I_ν K_ν)'`, and zeros of the ordinary Bessel functions.
//!
//! Orders below [`NU_UNIFORM`] use Temme's method (continued fractions plus
//! series or Steed's algorithm) with a Hankel expansion for large arguments;
//! larger orders use the uniform Debye expansion away from the origin.

mod debye;
mod gamma;
mod modified;
mod ordinary;
mod zeros;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

pub use ordinary::{bessel_j, jy, JY};
pub use zeros::{
    bessel_j_zero, bessel_j_zeros, mcmahon_estimate, mcmahon_zero, mcmahon_zero_real,
    newton_from_guess, ZeroKind,
};

/// Orders at or above this use the uniform asymptotic expansion when `x >= ν/2`.
pub const NU_UNIFORM: f64 = 20.0;

/// Largest argument for which unscaled `I_ν(x)` is representable.
const MAX_UNSCALED_X: f64 = 700.0;

/// `I_ν`, `K_ν` and their derivatives at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BesselEval {
    pub nu: f64,
    pub x: f64,
    pub i_val: f64,
    pub k_val: f64,
    pub i_prime: f64,
    pub k_prime: f64,
    /// When set, `i_*` hold `e^{-x}` times the true value and `k_*` hold `e^{x}` times it.
    pub log_scaled: bool,
}

impl BesselEval {
    /// `x (I K' - I' K) + 1`, zero up to rounding.
    pub fn wronskian_residual(&self) -> f64 {
        self.x * (self.i_val * self.k_prime - self.i_prime * self.k_val) + 1.0
    }
}

/// `λ_ν(x)` split as `λ₀ + δ` with `λ₀ = -x / (2 (x² + ν²)^{3/2})`, the
/// leading uniform term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaSplit {
    pub nu: f64,
    pub x: f64,
    pub lambda0: f64,
    /// `λ − λ₀`, computed without cancellation.
    pub delta: f64,
    /// `1 − x²λ²`
    pub one_minus_x2_lambda2: f64,
}

/// Radius `√(x² + ν²)` beyond which [`lambda_split`] uses the uniform series.
pub const UNIFORM_RADIUS: f64 = 30.0;

/// Evaluates `λ_ν(x)` in split form for integrands that subtract `λ₀²`.
pub fn lambda_split(nu: f64, x: f64) -> Result<LambdaSplit> {
    check_args(nu, x)?;
    let r2 = x * x + nu * nu;
    let r = r2.sqrt();
    let lambda0 = -x / (2.0 * r2 * r);
    if r >= UNIFORM_RADIUS {
        let delta = debye::lambda_correction(nu, x);
        let l = lambda0 + delta;
        Ok(LambdaSplit {
            nu,
            x,
            lambda0,
            delta,
            one_minus_x2_lambda2: 1.0 - x * x * l * l,
        })
    } else {
        let p = ik_products(nu, x)?;
        Ok(LambdaSplit {
            nu,
            x,
            lambda0,
            delta: p.lambda - lambda0,
            one_minus_x2_lambda2: p.one_minus_x2_lambda2,
        })
    }
}

/// `λ_ν(x)` at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LambdaPoint {
    pub nu: f64,
    pub x: f64,
    pub lambda: f64,
}

/// Exponent-free products of `I_ν`, `K_ν` and their derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IkProducts {
    pub nu: f64,
    pub x: f64,
    /// `I'/I`
    pub log_deriv_i: f64,
    /// `K'/K`
    pub log_deriv_k: f64,
    /// `I K`
    pub ik: f64,
    /// `I' K`
    pub ipk: f64,
    /// `I K'`
    pub ikp: f64,
    /// `I' K'`
    pub ipkp: f64,
    /// `λ = (I K)' = I'K + I K'`
    pub lambda: f64,
    /// `1 - x²λ² = -4x² I I' K K'`, accurate even when `xλ` is close to ±1
    pub one_minus_x2_lambda2: f64,
}

impl IkProducts {
    /// `λ'(x) = (I K)''`.
    pub fn lambda_prime(&self) -> f64 {
        let (nu, x) = (self.nu, self.x);
        2.0 * (1.0 + nu * nu / (x * x)) * self.ik - self.lambda / x + 2.0 * self.ipkp
    }
}

fn check_args(nu: f64, x: f64) -> Result<()> {
    if !nu.is_finite() || nu < 0.0 {
        return Err(domain(format!("order must be finite and >= 0, got {nu}")));
    }
    if !x.is_finite() || x <= 0.0 {
        return Err(domain(format!("argument must be finite and > 0, got {x}")));
    }
    Ok(())
}

fn scaled(nu: f64, x: f64) -> Result<modified::ScaledIK> {
    if nu >= NU_UNIFORM && x >= 0.5 * nu {
        Ok(debye::scaled_ik(nu, x))
    } else {
        modified::scaled_ik(nu, x)
    }
}

/// Algorithm used for `I_ν`, `K_ν`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// The region dispatch used everywhere else.
    Auto,
    /// Temme's method with the Hankel expansion at large argument.
    Recurrence,
    /// The uniform Debye expansion.
    Uniform,
}

/// Exponentially scaled values from a forced branch, for checking that the
/// branches agree where their regions meet.
pub fn eval_ik_branch(nu: f64, x: f64, branch: Branch) -> Result<BesselEval> {
    check_args(nu, x)?;
    let s = match branch {
        Branch::Auto => scaled(nu, x)?,
        Branch::Recurrence => modified::scaled_ik(nu, x)?,
        Branch::Uniform => {
            if nu <= 0.0 {
                return Err(domain("the uniform expansion needs nu > 0"));
            }
            debye::scaled_ik(nu, x)
        }
    };
    build_eval(nu, x, &s, true)
}

/// Evaluates `I_ν(x), K_ν(x), I_ν'(x), K_ν'(x)`, optionally exponentially scaled.
pub fn eval_ik(nu: f64, x: f64, scaled_values: bool) -> Result<BesselEval> {
    check_args(nu, x)?;
    let s = scaled(nu, x)?;
    build_eval(nu, x, &s, scaled_values)
}

fn build_eval(nu: f64, x: f64, s: &modified::ScaledIK, scaled_values: bool) -> Result<BesselEval> {
    let (ie, ke) = if scaled_values {
        (s.ie, s.ke)
    } else {
        if x > MAX_UNSCALED_X {
            return Err(Error::Overflow(format!(
                "I_{nu}({x}) exceeds the double range; request scaled values"
            )));
        }
        (s.ie * x.exp(), s.ke * (-x).exp())
    };
    let out = BesselEval {
        nu,
        x,
        i_val: ie,
        k_val: ke,
        i_prime: ie * s.di,
        k_prime: ke * s.dk,
        log_scaled: scaled_values,
    };
    if !(out.i_val.is_finite() && out.k_val.is_finite()) {
        return Err(Error::Overflow(format!(
            "I/K at nu={nu}, x={x} not representable"
        )));
    }
    Ok(out)
}

/// Products `I K`, `I' K`, ... at `(ν, x)`, computed from log-derivatives and the Wronskian.
pub fn ik_products(nu: f64, x: f64) -> Result<IkProducts> {
    check_args(nu, x)?;
    let s = scaled(nu, x)?;
    Ok(products(nu, x, &s))
}

fn products(nu: f64, x: f64, s: &modified::ScaledIK) -> IkProducts {
    let (ri, rk) = (s.di, s.dk);
    let ik = 1.0 / (x * (ri - rk));
    IkProducts {
        nu,
        x,
        log_deriv_i: ri,
        log_deriv_k: rk,
        ik,
        ipk: ik * ri,
        ikp: ik * rk,
        ipkp: ik * ri * rk,
        // r_I + r_K = I_{ν+1}/I_ν - K_{ν-1}/K_ν avoids the ±ν/x cancellation
        lambda: ik * (s.ti - s.tk),
        one_minus_x2_lambda2: (-4.0 * x * x * ik * ik * ri * rk).min(1.0),
    }
}

/// `λ_ν(x) = (I_ν(x) K_ν(x))'`.
pub fn lambda_nu(nu: f64, x: f64) -> Result<LambdaPoint> {
    let p = ik_products(nu, x)?;
    Ok(LambdaPoint {
        nu,
        x,
        lambda: p.lambda,
    })
}
