// Generated by gen_energy.py (mpmath, 30 digits). Do not edit.

/// (nu, f_weak, f_strong, f_general at xi = 0.5)
pub const F_VALUES: &[(f64, f64, f64, f64)] = &[
    (
        0.5,
        0.028982878914603112203,
        0.020023509370404034642,
        0.0067018501942703424872,
    ),
    (
        1.0,
        0.0091224934946441301398,
        0.0063335124823860615419,
        0.0021079702736194868962,
    ),
    (
        2.0,
        0.0025023650213244694521,
        0.0017460333322805516818,
        0.00057844637276603511331,
    ),
    (
        3.0,
        0.0011360879942833739576,
        0.00079397993883884490968,
        0.00026266619320619178388,
    ),
    (
        5.0,
        0.00041380903691268728322,
        0.00028948556758939487825,
        0.000095685483852218577461,
    ),
    (
        10.0,
        0.00010398532591017281365,
        0.000072777982802955881725,
        0.000024046089784179368409,
    ),
];

pub const M0_WEAK: f64 = -0.49087750650535586986;
pub const M0_STRONG: f64 = -0.65175194761829940737;
pub const M0_XI_HALF: f64 = -0.12860522881806436871;
