//! Positive zeros of `J_ν` and `J_ν'`.

use std::f64::consts::PI;

use super::ordinary::jy;
use crate::error::{domain, Error, Result};

/// Which function's zeros are sought.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum ZeroKind {
    /// Zeros of `J_ν`.
    J,
    /// Zeros of `J_ν'` (for `ν = 0` the trivial zero at the origin is not counted).
    JPrime,
}

const SCAN_STEP: f64 = 0.5;
const MAX_NEWTON: usize = 60;

/// Value and derivative of the target function at `x`.
fn target(nu: f64, x: f64, kind: ZeroKind) -> Result<(f64, f64)> {
    let v = jy(nu, x)?;
    Ok(match kind {
        ZeroKind::J => (v.j, v.jp),
        ZeroKind::JPrime => {
            let jpp = -v.jp / x - (1.0 - nu * nu / (x * x)) * v.j;
            (v.jp, jpp)
        }
    })
}

fn scan_start(nu: f64, kind: ZeroKind) -> f64 {
    match kind {
        // j_{ν,1} exceeds both ν and j_{0,1} > 2.
        ZeroKind::J => nu.max(2.0),
        ZeroKind::JPrime => {
            if nu == 0.0 {
                2.0
            } else {
                0.5 * (nu * (nu + 2.0)).sqrt()
            }
        }
    }
}

/// Asymptotic estimate of the `s`-th zero, used to seed Newton's method.
pub fn mcmahon_estimate(nu: f64, s: u32, kind: ZeroKind) -> f64 {
    let mu = 4.0 * nu * nu;
    let s = s as f64;
    match kind {
        ZeroKind::J => {
            let b = (s + 0.5 * nu - 0.25) * PI;
            b - (mu - 1.0) / (8.0 * b)
                - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * (8.0 * b).powi(3))
        }
        ZeroKind::JPrime => {
            let s = if nu == 0.0 { s + 1.0 } else { s };
            let b = (s + 0.5 * nu - 0.75) * PI;
            b - (mu + 3.0) / (8.0 * b)
                - 4.0 * (7.0 * mu * mu + 82.0 * mu - 9.0) / (3.0 * (8.0 * b).powi(3))
        }
    }
}

/// Safeguarded Newton iteration inside a sign-change bracket.
fn refine(nu: f64, kind: ZeroKind, mut lo: f64, mut hi: f64) -> Result<f64> {
    let (flo, _) = target(nu, lo, kind)?;
    let mut x = 0.5 * (lo + hi);
    for _ in 0..200 {
        let (fx, dfx) = target(nu, x, kind)?;
        if fx == 0.0 {
            return Ok(x);
        }
        if (fx > 0.0) == (flo > 0.0) {
            lo = x;
        } else {
            hi = x;
        }
        let step = fx / dfx;
        let mut next = x - step;
        if !(next > lo && next < hi) || !next.is_finite() {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= 4.0 * f64::EPSILON * x || hi - lo <= 4.0 * f64::EPSILON * x {
            return Ok(next);
        }
        x = next;
    }
    Ok(x)
}

/// The `s`-th positive zero of `J_ν` or `J_ν'`.
pub fn bessel_j_zero(nu: f64, s: u32, kind: ZeroKind) -> Result<f64> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(domain(format!("bessel_j_zero: nu={nu}")));
    }
    if s == 0 {
        return Err(domain("bessel_j_zero: s must be >= 1"));
    }
    Ok(bessel_j_zeros(nu, s, kind)?.pop().expect("s >= 1"))
}

/// The first `count` positive zeros, in increasing order.
pub fn bessel_j_zeros(nu: f64, count: u32, kind: ZeroKind) -> Result<Vec<f64>> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(domain(format!("bessel_j_zeros: nu={nu}")));
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut a = scan_start(nu, kind);
    let (mut fa, _) = target(nu, a, kind)?;
    while out.len() < count as usize {
        let b = a + SCAN_STEP;
        let (fb, _) = target(nu, b, kind)?;
        if fb == 0.0 {
            out.push(b);
            a = b + 1e-9 * b;
            fa = target(nu, a, kind)?.0;
            continue;
        }
        if (fa > 0.0) != (fb > 0.0) {
            out.push(refine(nu, kind, a, b)?);
        }
        a = b;
        fa = fb;
    }
    Ok(out)
}

/// Plain Newton iteration from `guess`; returns the root and the number of steps used.
pub fn newton_from_guess(nu: f64, guess: f64, kind: ZeroKind, tol: f64) -> Result<(f64, usize)> {
    let mut x = guess;
    for it in 1..=MAX_NEWTON {
        let (fx, dfx) = target(nu, x, kind)?;
        let step = fx / dfx;
        x -= step;
        if !(x > 0.0) || !x.is_finite() {
            return Err(Error::Domain(format!(
                "newton left the positive axis from {guess}"
            )));
        }
        if step.abs() <= tol * x {
            return Ok((x, it));
        }
    }
    Err(Error::NotConverged {
        value: x,
        abs_error: f64::NAN,
        evaluations: MAX_NEWTON,
    })
}

/// The closed form `sπ + (m − ½)π/2` for integer `m, s >= 1`.
pub fn mcmahon_zero(m: u32, s: u32) -> Result<f64> {
    if m == 0 || s == 0 {
        return Err(domain("mcmahon_zero: m and s must be >= 1"));
    }
    Ok(mcmahon_zero_real(m as f64, s))
}

/// Same closed form with a real-valued order slot.
pub fn mcmahon_zero_real(order: f64, s: u32) -> f64 {
    s as f64 * PI + (order - 0.5) * PI / 2.0
}
