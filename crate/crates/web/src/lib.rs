//! Browser bindings for the static demo page in `www/`.
//!
//! Every export returns a flat `Float64Array`; the page pairs the values
//! with the grid it asked for. Errors surface as JavaScript exceptions.

use wasm_bindgen::prelude::*;

use wedge_casimir::bessel::lambda_nu;
use wedge_casimir::energy::{default_m, e_strong, e_weak, w_dilute_asymptotic};
use wedge_casimir::string_radiation::{spectrum_dw_dk, ExpansionMode, StringParams, Zeros};

fn js(e: wedge_casimir::Error) -> JsError {
    JsError::new(&e.to_string())
}

fn grid(lo: f64, hi: f64, steps: usize) -> Result<Vec<f64>, JsError> {
    if !(lo < hi) || steps < 2 {
        return Err(JsError::new("grid needs lo < hi and at least 2 steps"));
    }
    let h = (hi - lo) / (steps - 1) as f64;
    Ok((0..steps).map(|i| lo + h * i as f64).collect())
}

/// `e(p)` (or `w(p)` for `dilute`) on an even grid; `m < 0` picks the default order.
#[wasm_bindgen]
pub fn energy_curve(
    model: &str,
    p_min: f64,
    p_max: f64,
    steps: usize,
    m: i32,
) -> Result<Vec<f64>, JsError> {
    grid(p_min, p_max, steps)?
        .into_iter()
        .map(|p| {
            let order = if m < 0 { default_m(p) } else { m as u32 };
            let r = match model {
                "strong" => e_strong(p, order),
                "weak" => e_weak(p, order),
                "dilute" => w_dilute_asymptotic(p),
                _ => return Err(JsError::new("model must be strong, weak or dilute")),
            };
            r.map(|r| r.e_value).map_err(js)
        })
        .collect()
}

/// `λ_ν(x)` on an even grid in `x`.
#[wasm_bindgen]
pub fn lambda_curve(nu: f64, x_min: f64, x_max: f64, steps: usize) -> Result<Vec<f64>, JsError> {
    grid(x_min, x_max, steps)?
        .into_iter()
        .map(|x| lambda_nu(nu, x).map(|l| l.lambda).map_err(js))
        .collect()
}

/// `dW/dk` for modes `(m, s)` on the grid `k ∈ [0, k_max]`.
#[wasm_bindgen]
pub fn string_spectrum(
    beta: f64,
    m: u32,
    s: u32,
    k_max: f64,
    steps: usize,
    exact_zeros: bool,
) -> Result<Vec<f64>, JsError> {
    let params = StringParams::new(beta, 1.0, 1.0, std::f64::consts::PI, 1.0, 1.0).map_err(js)?;
    let zeros = if exact_zeros {
        Zeros::Exact
    } else {
        Zeros::McMahon
    };
    grid(0.0, k_max, steps)?
        .into_iter()
        .map(|k| {
            spectrum_dw_dk(m, s, k, &params, zeros, ExpansionMode::Leading)
                .map(|pt| pt.dw_dk)
                .map_err(js)
        })
        .collect()
}
