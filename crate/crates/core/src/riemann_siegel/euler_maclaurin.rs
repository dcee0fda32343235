//! Euler-Maclaurin evaluation of zeta and its first two s-derivatives on the
//! critical line. This is the oracle path: slow, but with rounding-level
//! accuracy at every desk-scale height.
//!
//! With s = 1/2 + it, N ~ t/2 main terms and K Bernoulli corrections,
//!
//!   zeta(s) = sum_{n<N} n^{-s} + N^{-s}/2 + N^{1-s}/(s-1)
//!           + sum_{k=1..K} B_{2k}/(2k)! * (s)_{2k-1} * N^{-s-2k+1}
//!
//! where (s)_{2k-1} is the rising factorial with 2k-1 factors. Successive
//! correction terms shrink by ~((t+2k)/(2 pi N))^2 ~ 1/pi^2 at N = t/2, so
//! the K = 24 default leaves truncation ~1e-24 relative — float rounding,
//! not truncation, is the operative error. Derivatives come from term-wise
//! d/ds, sharing the phase and magnitude work of the value computation.

use num_complex::Complex64;

use crate::dd::{self, Kahan};

/// B_{2k} / (2k)! for k = 1..=32.
const BERN_OVER_FACT: [f64; 32] = [
    0.08333333333333333,
    -0.001388888888888889,
    3.306878306878307e-05,
    -8.267195767195768e-07,
    2.08767569878681e-08,
    -5.284190138687493e-10,
    1.3382536530684679e-11,
    -3.3896802963225827e-13,
    8.586062056277845e-15,
    -2.174868698558062e-16,
    5.5090028283602295e-18,
    -1.3954464685812522e-19,
    3.534707039629467e-21,
    -8.953517427037546e-23,
    2.267952452337683e-24,
    -5.744790668872202e-26,
    1.455172475614865e-27,
    -3.6859949406653103e-29,
    9.336734257095045e-31,
    -2.36502241570063e-32,
    5.990671762482134e-34,
    -1.5174548844682903e-35,
    3.843758125454189e-37,
    -9.736353072646691e-39,
    2.466247044200681e-40,
    -6.247076741820743e-42,
    1.5824030244644914e-43,
    -4.008273685948936e-45,
    1.0153075855569557e-46,
    -2.5718041582418717e-48,
    6.514456035233815e-50,
    -1.6501309906896525e-51,
];

/// zeta(1/2+it) together with its first two derivatives with respect to s.
#[derive(Debug, Clone, Copy)]
pub struct LineZeta {
    pub zeta: Complex64,
    pub dzeta: Complex64,
    pub d2zeta: Complex64,
}

/// Number of main-sum terms for height t.
#[inline]
pub(crate) fn em_main_terms(t: f64) -> usize {
    (t.abs() * 0.5).ceil().max(16.0) as usize
}

/// Euler-Maclaurin zeta on the critical line; `k_terms` is clamped to
/// [8, 32]. Requires t >= 0 (callers route negative t through conjugation).
pub(crate) fn zeta_line_em(t: f64, k_terms: usize) -> LineZeta {
    debug_assert!(t >= 0.0);
    let k_terms = k_terms.clamp(8, 32);
    let n_main = em_main_terms(t);
    let s = Complex64::new(0.5, t);

    // main sum over n < N with compensated accumulation per component
    let mut acc = [Kahan::default(); 6];
    // n = 1 contributes exactly 1 to zeta and 0 to both derivatives
    acc[0].add(1.0);
    for n in 2..n_main {
        let nf = n as f64;
        let mag = 1.0 / nf.sqrt();
        let (c, sn) = phase_parts(t, nf);
        let re = mag * c;
        let im = -mag * sn; // e^{-it ln n}
        let ln_n = nf.ln();
        acc[0].add(re);
        acc[1].add(im);
        // d/ds n^{-s} = -ln n * n^{-s}
        acc[2].add(-ln_n * re);
        acc[3].add(-ln_n * im);
        // d2/ds2 n^{-s} = ln^2 n * n^{-s}
        acc[4].add(ln_n * ln_n * re);
        acc[5].add(ln_n * ln_n * im);
    }
    let mut zeta = Complex64::new(acc[0].value(), acc[1].value());
    let mut dzeta = Complex64::new(acc[2].value(), acc[3].value());
    let mut d2zeta = Complex64::new(acc[4].value(), acc[5].value());

    let nf = n_main as f64;
    let ln_nf = nf.ln();
    let (c, sn) = phase_parts(t, nf);
    let rot = Complex64::new(c, -sn); // e^{-it ln N}
    let n_pow_mhalf = 1.0 / nf.sqrt();
    let n_to_ms = n_pow_mhalf * rot; // N^{-s}

    // boundary term N^{-s}/2
    let half_term = 0.5 * n_to_ms;
    zeta += half_term;
    dzeta += -ln_nf * half_term;
    d2zeta += ln_nf * ln_nf * half_term;

    // pole-matching term N^{1-s}/(s-1)
    let sm1 = s - 1.0;
    let sm1_inv = sm1.inv();
    let n_to_1ms = nf.sqrt() * rot;
    let pole = n_to_1ms * sm1_inv;
    zeta += pole;
    // d/ds [N^{1-s}/(s-1)] = N^{1-s} [-ln N/(s-1) - 1/(s-1)^2]
    dzeta += n_to_1ms * (-ln_nf * sm1_inv - sm1_inv * sm1_inv);
    // d2/ds2 = N^{1-s} [ln^2 N/(s-1) + 2 ln N/(s-1)^2 + 2/(s-1)^3]
    d2zeta += n_to_1ms
        * (ln_nf * ln_nf * sm1_inv
            + 2.0 * ln_nf * sm1_inv * sm1_inv
            + 2.0 * sm1_inv * sm1_inv * sm1_inv);

    // Bernoulli corrections T_k = C_k * (s)_{2k-1} * N^{-s-2k+1}, built
    // iteratively: T_k = T_{k-1} * (C_k/C_{k-1}) * (s+2k-3)(s+2k-2) / N^2,
    // so magnitudes stay bounded no matter how large |s|^{2k-1} would grow.
    let inv_n2 = 1.0 / (nf * nf);
    let mut term = BERN_OVER_FACT[0] * s * (n_to_ms / nf);
    // u = sum 1/(s+j), v = sum 1/(s+j)^2 over the rising-factorial indices
    let mut u = s.inv();
    let mut v = u * u;
    for k in 1..=k_terms {
        if k > 1 {
            let ratio = BERN_OVER_FACT[k - 1] / BERN_OVER_FACT[k - 2];
            let f1 = s + (2 * k - 3) as f64;
            let f2 = s + (2 * k - 2) as f64;
            term = term * ratio * f1 * f2 * inv_n2;
            let i1 = f1.inv();
            let i2 = f2.inv();
            u += i1 + i2;
            v += i1 * i1 + i2 * i2;
        }
        zeta += term;
        // T' = T (u - ln N);  T'' = T [(u - ln N)^2 - v]
        let w = u - ln_nf;
        dzeta += term * w;
        d2zeta += term * (w * w - v);
    }

    LineZeta {
        zeta,
        dzeta,
        d2zeta,
    }
}

/// cos and sin of t*ln(n) with the product carried in double-double and
/// reduced mod 2pi before trig.
#[inline]
fn phase_parts(t: f64, n: f64) -> (f64, f64) {
    let phi = dd::reduce_mod_2pi(dd::dd_ln(n).mul_f64(t));
    (phi.cos(), phi.sin())
}
