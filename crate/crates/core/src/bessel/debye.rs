//! Uniform (Debye) asymptotic expansion of `I_ν`, `K_ν` for large order.

use std::f64::consts::PI;
use std::sync::OnceLock;

use super::modified::ScaledIK;

const TERMS: usize = 14;

/// Coefficients of `u_k(t)` and `v_k(t)` in ascending powers of `t`.
struct DebyePolys {
    u: Vec<Vec<f64>>,
    v: Vec<Vec<f64>>,
}

fn polys() -> &'static DebyePolys {
    static CELL: OnceLock<DebyePolys> = OnceLock::new();
    CELL.get_or_init(build_polys)
}

fn derivative(p: &[f64]) -> Vec<f64> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * i as f64)
        .collect()
}

fn build_polys() -> DebyePolys {
    let mut u: Vec<Vec<f64>> = vec![vec![1.0]];
    for k in 0..TERMS {
        let uk = &u[k];
        let du = derivative(uk);
        let mut next = vec![0.0; uk.len() + 3];
        // ½ t² (1 - t²) u_k'
        for (i, c) in du.iter().enumerate() {
            next[i + 2] += 0.5 * c;
            next[i + 4] -= 0.5 * c;
        }
        // ⅛ ∫₀ᵗ (1 - 5 s²) u_k(s) ds
        for (i, c) in uk.iter().enumerate() {
            next[i + 1] += 0.125 * c / (i + 1) as f64;
            next[i + 3] -= 0.625 * c / (i + 3) as f64;
        }
        u.push(next);
    }
    let mut v = vec![vec![1.0]];
    for k in 1..=TERMS {
        let prev = &u[k - 1];
        let dprev = derivative(prev);
        let mut vk = u[k].clone();
        vk.resize(u[k].len().max(prev.len() + 4), 0.0);
        // t (t² - 1) [½ u_{k-1} + t u_{k-1}']
        let mut inner = vec![0.0; prev.len() + 1];
        for (i, c) in prev.iter().enumerate() {
            inner[i] += 0.5 * c;
        }
        for (i, c) in dprev.iter().enumerate() {
            inner[i + 1] += c;
        }
        for (i, c) in inner.iter().enumerate() {
            vk[i + 3] += c;
            vk[i + 1] -= c;
        }
        v.push(vk);
    }
    DebyePolys { u, v }
}

fn horner(p: &[f64], t: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, c| acc * t + c)
}

pub(crate) fn scaled_ik(nu: f64, x: f64) -> ScaledIK {
    let z = x / nu;
    let s = (1.0 + z * z).sqrt();
    let t = 1.0 / s;
    let eta = s + (z / (1.0 + s)).ln();
    let p = polys();
    let (mut su, mut sua, mut sv, mut sva) = (0.0, 0.0, 0.0, 0.0);
    let mut scale = 1.0;
    for k in 0..=TERMS {
        let uk = horner(&p.u[k], t) * scale;
        let vk = horner(&p.v[k], t) * scale;
        su += uk;
        sv += vk;
        if k % 2 == 0 {
            sua += uk;
            sva += vk;
        } else {
            sua -= uk;
            sva -= vk;
        }
        if uk.abs().max(vk.abs()) < 1e-17 {
            break;
        }
        scale /= nu;
    }
    let root = (1.0 + z * z).sqrt().sqrt();
    let ie = (nu * eta - x).exp() / ((2.0 * PI * nu).sqrt() * root) * su;
    let ke = (PI / (2.0 * nu)).sqrt() * (x - nu * eta).exp() / root * sua;
    let di = s / x * nu * sv / su;
    let dk = -s / x * nu * sva / sua;
    ScaledIK::from_log_derivs(nu, x, ie, ke, di, dk)
}

/// Number of `1/r²` orders kept in [`lambda_correction`].
const PRODUCT_ORDERS: usize = 6;

/// Polynomials `P_k(t)` with `(I_ν K_ν)' = -x/(2r³) - Σ_{k≥1} x P_k(t) / (2 r^{2k+3})`,
/// where `r² = x² + ν²` and `t = ν/r`.
fn product_polys() -> &'static Vec<Vec<f64>> {
    static CELL: OnceLock<Vec<Vec<f64>>> = OnceLock::new();
    CELL.get_or_init(|| {
        let u = &polys().u;
        let mut out = Vec::new();
        for k in 1..=PRODUCT_ORDERS {
            let n = 2 * k;
            // q_n(t) = Σ_{j+i=n} (-1)^i u_j u_i, which is t^n times an even polynomial
            let mut q = vec![0.0; 3 * n + 1];
            for j in 0..=n {
                let i = n - j;
                let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
                for (a, ca) in u[j].iter().enumerate() {
                    for (b, cb) in u[i].iter().enumerate() {
                        q[a + b] += sign * ca * cb;
                    }
                }
            }
            let r: Vec<f64> = q[n..].to_vec();
            // d/dx of R_k(t) / (2 r^{2k+1}) = -x [t R_k' + (2k+1) R_k] / (2 r^{2k+3})
            let p = r
                .iter()
                .enumerate()
                .map(|(i, c)| c * (i + 2 * k + 1) as f64)
                .collect();
            out.push(p);
        }
        out
    })
}

/// `λ_ν(x) + x/(2r³)` from the uniform product expansion, valid for large
/// `r = √(x² + ν²)` whatever the ratio `x/ν`.
pub(crate) fn lambda_correction(nu: f64, x: f64) -> f64 {
    let r2 = x * x + nu * nu;
    let r = r2.sqrt();
    let t = nu / r;
    let mut scale = x / (2.0 * r2 * r);
    let mut sum = 0.0;
    for p in product_polys() {
        scale /= r2;
        sum -= scale * horner(p, t);
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_polynomials() {
        let p = polys();
        // u1 = (3t - 5t³)/24, v1 = (-9t + 7t³)/24
        let u1 = &p.u[1];
        assert!((u1[1] - 3.0 / 24.0).abs() < 1e-16);
        assert!((u1[3] + 5.0 / 24.0).abs() < 1e-16);
        let v1 = &p.v[1];
        assert!((v1[1] + 9.0 / 24.0).abs() < 1e-16);
        assert!((v1[3] - 7.0 / 24.0).abs() < 1e-16);
        // u2 = (81t² - 462t⁴ + 385t⁶)/1152
        let u2 = &p.u[2];
        assert!((u2[2] - 81.0 / 1152.0).abs() < 1e-16);
        assert!((u2[4] + 462.0 / 1152.0).abs() < 1e-16);
        assert!((u2[6] - 385.0 / 1152.0).abs() < 1e-16);
    }
}
