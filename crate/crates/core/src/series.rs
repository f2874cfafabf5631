//! Zeta values used by the regularised mode sums.

use std::f64::consts::PI;

/// Apéry's constant `ζ(3)`.
pub const ZETA3: f64 = 1.202_056_903_159_594_3;

/// Riemann `ζ(2) = π²/6`.
pub fn zeta2() -> f64 {
    PI * PI / 6.0
}

/// Riemann `ζ(4) = π⁴/90`.
pub fn zeta4() -> f64 {
    PI.powi(4) / 90.0
}

/// Hurwitz zeta `ζ(s, a) = Σ_{k≥0} (k + a)^{-s}` for `s > 1`, `a > 0`,
/// by direct summation plus an Euler–Maclaurin tail.
pub fn hurwitz_zeta(s: f64, a: f64) -> f64 {
    assert!(s > 1.0 && a > 0.0, "hurwitz_zeta requires s > 1, a > 0");
    const N: usize = 12;
    let mut sum = 0.0;
    for k in 0..N {
        sum += (k as f64 + a).powf(-s);
    }
    let x = N as f64 + a;
    // ∫_x^∞ t^{-s} dt + f(x)/2 − Σ B_{2j}/(2j)! f^{(2j-1)}(x)
    sum += x.powf(1.0 - s) / (s - 1.0) + 0.5 * x.powf(-s);
    const B2J: [f64; 6] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
    ];
    let mut fact = 1.0;
    let mut rising = s; // s (s+1) ... (s+2j-2)
    let mut xp = x.powf(-s - 1.0);
    for (j, b) in B2J.iter().enumerate() {
        let n2 = 2 * j + 2;
        fact *= ((n2 - 1) * n2) as f64;
        sum += b / fact * rising * xp;
        rising *= (s + n2 as f64 - 1.0) * (s + n2 as f64);
        xp /= x * x;
    }
    sum
}
