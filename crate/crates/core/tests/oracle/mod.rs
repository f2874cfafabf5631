//! Test-only reference implementations, independent of the library code paths.
#![allow(dead_code)]

// frozen values, kept at the digits they were generated with
#[allow(clippy::approx_constant)]
pub mod reference;

pub mod energy_reference;

use statrs::function::gamma::gamma;

/// `I_ν(x)` from its power series.
pub fn i_series(nu: f64, x: f64) -> f64 {
    let h = 0.5 * x;
    let mut term = h.powf(nu) / gamma(nu + 1.0);
    let mut sum = term;
    let mut k = 1.0;
    while term.abs() > 1e-18 * sum.abs() || k < 5.0 {
        term *= h * h / (k * (k + nu));
        sum += term;
        k += 1.0;
    }
    sum
}

/// `K_ν(x) = ∫₀^∞ e^{-x cosh t} cosh(νt) dt` by the trapezoid rule, which
/// converges geometrically for this analytic, doubly decaying integrand.
pub fn k_integral(nu: f64, x: f64) -> f64 {
    let h = 0.01;
    let mut sum = 0.5 * (-x).exp();
    let mut t: f64 = h;
    loop {
        let v = (-x * t.cosh() + nu * t).exp() * 0.5 * (1.0 + (-2.0 * nu * t).exp());
        sum += v;
        if v < 1e-20 * sum && t > 1.0 {
            break;
        }
        t += h;
    }
    sum * h
}

/// `J_ν(x)` from its power series (only accurate for moderate `x`).
pub fn j_series(nu: f64, x: f64) -> f64 {
    let h = 0.5 * x;
    let mut term = h.powf(nu) / gamma(nu + 1.0);
    let mut sum = term;
    let mut k = 1.0;
    while term.abs() > 1e-18 * sum.abs().max(1e-300) || k < 5.0 {
        term *= -h * h / (k * (k + nu));
        sum += term;
        k += 1.0;
    }
    sum
}

/// Bisection on a sign change of `f` in `[lo, hi]`.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let flo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0) == (flo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Composite Simpson rule on `[a, b]` with `n` (even) panels.
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let n = n + n % 2;
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(a + h * i as f64);
    }
    s * h / 3.0
}

pub fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        (a / b - 1.0).abs()
    }
}
