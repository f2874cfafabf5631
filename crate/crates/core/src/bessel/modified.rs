//! `I_ν` and `K_ν` for `0 <= ν < NU_UNIFORM` by Temme's method, with a
//! large-argument Hankel expansion.
//!
//! Everything is carried as log-derivatives `I'/I`, `K'/K` plus exponentially
//! scaled values `e^{-x} I`, `e^{x} K`, so products such as `I K` never
//! overflow.

use std::f64::consts::PI;

use super::gamma::temme_gammas;
use crate::error::{Error, Result};

const EPS: f64 = 1e-16;
const MAX_ITER: usize = 100_000;
const RESCALE: f64 = 1e250;

/// Scaled values and log-derivatives at one `(ν, x)`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ScaledIK {
    /// `e^{-x} I_ν(x)`
    pub ie: f64,
    /// `e^{x} K_ν(x)`
    pub ke: f64,
    /// `I_ν'(x) / I_ν(x)`
    pub di: f64,
    /// `K_ν'(x) / K_ν(x)`
    pub dk: f64,
    /// `I_{ν+1}(x) / I_ν(x)`
    pub ti: f64,
    /// `K_{ν-1}(x) / K_ν(x)`
    pub tk: f64,
}

impl ScaledIK {
    /// Fills the neighbour ratios from the log-derivatives. Only used where
    /// `ν/x` is not large, so the subtraction is harmless.
    pub fn from_log_derivs(nu: f64, x: f64, ie: f64, ke: f64, di: f64, dk: f64) -> Self {
        ScaledIK {
            ie,
            ke,
            di,
            dk,
            ti: di - nu / x,
            tk: -dk - nu / x,
        }
    }
}

/// Lower edge of the large-argument region for order `nu`.
pub(crate) fn hankel_threshold(nu: f64) -> f64 {
    (nu * nu).max(30.0)
}

pub(crate) fn scaled_ik(nu: f64, x: f64) -> Result<ScaledIK> {
    if x >= hankel_threshold(nu) {
        Ok(hankel_ik(nu, x))
    } else {
        temme_ik(nu, x)
    }
}

/// Continued fraction for `I_{ν+1}/I_ν = 1/(b₁ + 1/(b₂ + …))`, `b_k = 2(ν+k)/x`
/// (modified Lentz).
fn cf1_ratio(nu: f64, x: f64) -> Result<f64> {
    let tiny = 1e-300;
    let xi2 = 2.0 / x;
    let mut f = tiny;
    let mut c = f;
    let mut d: f64 = 0.0;
    for k in 1..MAX_ITER {
        let b = xi2 * (nu + k as f64);
        d = 1.0 / (b + d);
        c = b + 1.0 / c;
        let del = c * d;
        f *= del;
        if (del - 1.0).abs() < EPS {
            return Ok(f);
        }
    }
    Err(Error::NotConverged {
        value: f,
        abs_error: f64::NAN,
        evaluations: MAX_ITER,
    })
}

fn temme_ik(nu: f64, x: f64) -> Result<ScaledIK> {
    let nl = (nu + 0.5).floor() as usize;
    let xmu = nu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;

    let ti = cf1_ratio(nu, x)?;
    let f_nu = nu * xi + ti;

    // Downward recurrence from ν to μ on unnormalised values.
    let mut ril = 1e-280;
    let mut ripl = f_nu * ril;
    let mut ril_top = ril;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let ritemp = fact * ril + ripl;
        fact -= xi;
        ripl = fact * ritemp + ril;
        ril = ritemp;
        if ril.abs() > RESCALE {
            ril /= RESCALE;
            ripl /= RESCALE;
            ril_top /= RESCALE;
        }
    }
    let f_mu = ripl / ril;

    // K_μ and K_{μ+1}, both multiplied by e^{x}.
    let (kmu, k1) = if x < 2.0 {
        let x2 = 0.5 * x;
        let pimu = PI * xmu;
        let fact = if pimu.abs() < EPS {
            1.0
        } else {
            pimu / pimu.sin()
        };
        let d = -x2.ln();
        let e = xmu * d;
        let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
        let g = temme_gammas(xmu);
        let mut ff = fact * (g.gam1 * e.cosh() + g.gam2 * fact2 * d);
        let mut sum = ff;
        let ee = e.exp();
        let mut p = 0.5 * ee / g.gampl;
        let mut q = 0.5 / (ee * g.gammi);
        let mut c = 1.0;
        let dd = x2 * x2;
        let mut sum1 = p;
        let mut converged = false;
        for i in 1..MAX_ITER {
            let fi = i as f64;
            ff = (fi * ff + p + q) / (fi * fi - xmu2);
            c *= dd / fi;
            p /= fi - xmu;
            q /= fi + xmu;
            let del = c * ff;
            sum += del;
            sum1 += c * (p - fi * ff);
            if del.abs() < sum.abs() * EPS {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NotConverged {
                value: sum,
                abs_error: f64::NAN,
                evaluations: MAX_ITER,
            });
        }
        let scale = x.exp();
        (sum * scale, sum1 * xi2 * scale)
    } else {
        // Steed's CF2 (Temme's form), naturally scaled by e^{x}.
        let mut b = 2.0 * (1.0 + x);
        let mut d = 1.0 / b;
        let mut h = d;
        let mut delh = d;
        let mut q1 = 0.0;
        let mut q2 = 1.0;
        let a1 = 0.25 - xmu2;
        let mut q = a1;
        let mut c = a1;
        let mut a = -a1;
        let mut s = 1.0 + q * delh;
        let mut converged = false;
        for i in 2..MAX_ITER {
            let fi = i as f64;
            a -= 2.0 * (fi - 1.0);
            c = -a * c / fi;
            let qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            b += 2.0;
            d = 1.0 / (b + a * d);
            delh *= b * d - 1.0;
            h += delh;
            let dels = q * delh;
            s += dels;
            if (dels / s).abs() < EPS {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NotConverged {
                value: s,
                abs_error: f64::NAN,
                evaluations: MAX_ITER,
            });
        }
        let h = a1 * h;
        let kmu = (PI / (2.0 * x)).sqrt() / s;
        (kmu, kmu * (xmu + x + 0.5 - h) * xi)
    };

    // Wronskian at μ fixes the normalisation of I: I_μ = (1/x) / (f K_μ - K_μ')
    let kmup = xmu * xi * kmu - k1;
    let imu = xi / (f_mu * kmu - kmup);
    let ie = imu * ril_top / ril;

    // Upward recurrence of K from μ to ν with rescaling; only ratios and the
    // log of the overall scale are kept.
    let mut kprev = k1 - xmu * xi2 * kmu;
    let mut kcur = kmu;
    let mut knext = k1;
    let mut log_scale = 0.0;
    for i in 1..=nl {
        let ktemp = (xmu + i as f64) * xi2 * knext + kcur;
        kprev = kcur;
        kcur = knext;
        knext = ktemp;
        if knext.abs() > RESCALE {
            kprev /= RESCALE;
            kcur /= RESCALE;
            knext /= RESCALE;
            log_scale += RESCALE.ln();
        }
    }
    let tk = kprev / kcur;
    Ok(ScaledIK {
        ie,
        ke: kcur * log_scale.exp(),
        di: f_nu,
        dk: -nu * xi - tk,
        ti,
        tk,
    })
}

/// Hankel expansion for large `x`; the `ν+1` series supplies the derivatives.
fn hankel_ik(nu: f64, x: f64) -> ScaledIK {
    let (si0, sk0) = hankel_sums(nu, x);
    let (si1, _) = hankel_sums(nu + 1.0, x);
    let (_, skm) = hankel_sums(nu - 1.0, x);
    let ie = si0 / (2.0 * PI * x).sqrt();
    let ke = (PI / (2.0 * x)).sqrt() * sk0;
    // I' = I_{ν+1} + (ν/x) I,  K' = -K_{ν-1} - (ν/x) K
    let ti = si1 / si0;
    let tk = skm / sk0;
    ScaledIK {
        ie,
        ke,
        di: ti + nu / x,
        dk: -tk - nu / x,
        ti,
        tk,
    }
}

/// Returns `(Σ (-1)^k a_k / x^k, Σ a_k / x^k)` truncated at the smallest term.
fn hankel_sums(nu: f64, x: f64) -> (f64, f64) {
    let mu = 4.0 * nu * nu;
    let mut term = 1.0;
    let mut alt = 1.0;
    let mut plain = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (8.0 * k as f64 * x);
        if term.abs() >= last {
            break;
        }
        last = term.abs();
        plain += term;
        alt += if k % 2 == 1 { -term } else { term };
        if last < 1e-17 {
            break;
        }
    }
    (alt, plain)
}
