//! Reciprocal-gamma helpers for Temme's series.

/// Taylor coefficients of `1/Γ(z) = Σ_{k≥1} c_k z^k`.
#[allow(clippy::excessive_precision)]
const RECIP_GAMMA: [f64; 26] = [
    1.0,
    0.5772156649015328606,
    -0.6558780715202538811,
    -0.0420026350340952355,
    0.1665386113822914895,
    -0.0421977345555443367,
    -0.0096219715278769736,
    0.0072189432466630995,
    -0.0011651675918590651,
    -0.0002152416741149510,
    0.0001280502823881162,
    -0.0000201348547807882,
    -0.0000012504934821427,
    0.0000011330272319817,
    -0.0000002056338416978,
    0.0000000061160951045,
    0.0000000050020075003,
    -0.0000000011812745705,
    0.0000000001043426712,
    0.0000000000077822634,
    -0.0000000000036968056,
    0.0000000000005100370,
    -0.0000000000000205833,
    -0.0000000000000053481,
    0.0000000000000012268,
    -0.0000000000000001181,
];

/// Temme's auxiliary functions for `|mu| <= 1/2`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct TemmeGammas {
    /// `(1/Γ(1-μ) - 1/Γ(1+μ)) / (2μ)`
    pub gam1: f64,
    /// `(1/Γ(1-μ) + 1/Γ(1+μ)) / 2`
    pub gam2: f64,
    /// `1/Γ(1+μ)`
    pub gampl: f64,
    /// `1/Γ(1-μ)`
    pub gammi: f64,
}

pub(crate) fn temme_gammas(mu: f64) -> TemmeGammas {
    // 1/Γ(1+μ) = Σ c_k μ^{k-1}; split into even and odd powers of μ.
    let mu2 = mu * mu;
    let mut even = 0.0; // Σ_{k odd} c_k μ^{k-1}
    let mut odd = 0.0; // Σ_{k even} c_k μ^{k-2}
    for (i, c) in RECIP_GAMMA.iter().enumerate().rev() {
        let k = i + 1;
        if k % 2 == 1 {
            even = even * mu2 + c;
        } else {
            odd = odd * mu2 + c;
        }
    }
    let gam2 = even;
    let gam1 = -odd;
    TemmeGammas {
        gam1,
        gam2,
        gampl: gam2 - mu * gam1,
        gammi: gam2 + mu * gam1,
    }
}
