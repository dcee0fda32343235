//! Chebyshev coefficients (on x = 2p - 1, p in [0,1]) of the first three
//! Riemann-Siegel remainder functions:
//!
//!   C0(p) = Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p)
//!   C1(p) = -Psi'''(p) / (96 pi^2)
//!   C2(p) = Psi''(p) / (64 pi^2) + Psi^(6)(p) / (18432 pi^4)
//!
//! Convention: f(x) = c[0]/2 + sum_{k>=1} c[k] T_k(x). Generated offline at
//! 50-digit precision (see tools/make_reference_data.py); reconstruction
//! error is below 1e-19 across [0,1]. Psi is symmetric about p = 1/2, so
//! odd coefficients of C0/C2 and even coefficients of C1 vanish exactly.

pub(crate) const CHEB_C0: [f64; 29] = [
    1.2853345724795369,
    0.0,
    0.27197299999785507,
    0.0,
    0.010738605819340283,
    0.0,
    -0.0013743815296336614,
    0.0,
    -0.00012468221880320676,
    0.0,
    -5.764599706783048e-07,
    0.0,
    2.728067429580452e-07,
    0.0,
    8.07795305950047e-09,
    0.0,
    -2.0884608068869654e-10,
    0.0,
    -1.3115561854739528e-11,
    0.0,
    -1.4207987228087186e-14,
    0.0,
    1.0271701357931162e-14,
    0.0,
    1.3974598819518373e-16,
    0.0,
    -4.4841187339522885e-18,
    0.0,
    -1.1830599573845289e-19,
];

pub(crate) const CHEB_C1: [f64; 30] = [
    0.0,
    0.010697913921003001,
    0.0,
    0.017170651243377882,
    0.0,
    0.002793211149788471,
    0.0,
    -3.6375653719275045e-05,
    0.0,
    -2.7108955231150888e-05,
    0.0,
    -1.0483749866752772e-06,
    0.0,
    5.886467166527572e-08,
    0.0,
    4.322967268502779e-09,
    0.0,
    -1.1369591588273712e-11,
    0.0,
    -6.6998339103553274e-12,
    0.0,
    -1.0079997652808475e-13,
    0.0,
    5.152488009222117e-15,
    0.0,
    1.521695447183697e-16,
    0.0,
    -1.8619464833687103e-18,
    0.0,
    -1.1301846184246265e-19,
];

pub(crate) const CHEB_C2: [f64; 27] = [
    0.0062922317079778245,
    0.0,
    -0.0023087838845307503,
    0.0,
    5.769820766689844e-05,
    0.0,
    0.000352388620236659,
    0.0,
    2.5246667458684434e-05,
    0.0,
    -3.442821197193136e-06,
    0.0,
    -3.535074556622459e-07,
    0.0,
    3.730830183792625e-09,
    0.0,
    1.2776951864116635e-09,
    0.0,
    2.1874616204147057e-11,
    0.0,
    -1.914141096461037e-12,
    0.0,
    -6.562883102168523e-14,
    0.0,
    1.2586009182411715e-15,
    0.0,
    8.140076623881463e-17,
];

