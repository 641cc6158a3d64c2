//! Gamma, log-gamma and Beta functions.
//!
//! Lanczos approximation in double precision (the 15-coefficient
//! g = 607/128 set; the common 9-coefficient g = 7 set tops out around
//! 1e-13 intrinsic error near x = 170, too coarse for the accuracy this
//! crate promises), with reflection for arguments below 1/2. Relative
//! accuracy is better than 1e-13 on (0, 170), which is what the series and
//! weight kernels in this crate rely on.

use crate::error::{Error, Result};
use std::f64::consts::PI;

const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_746,
    -0.491_913_816_097_620_2,
    3.399_464_998_481_189e-5,
    4.652_362_892_704_858e-5,
    -9.837_447_530_487_956e-5,
    1.580_887_032_249_125e-4,
    -2.102_644_417_241_048_8e-4,
    2.174_396_181_152_126_5e-4,
    -1.643_181_065_367_639e-4,
    8.441_822_398_385_275e-5,
    -2.619_083_840_158_140_8e-5,
    3.689_918_265_953_162_5e-6,
];

/// Largest argument for which gamma(x) stays below f64::MAX.
pub const GAMMA_OVERFLOW_LIMIT: f64 = 171.6;

/// Gamma function for real arguments.
pub fn gamma(x: f64) -> Result<f64> {
    if x <= 0.0 && x == x.floor() {
        return Err(Error::Pole { x });
    }
    if x > GAMMA_OVERFLOW_LIMIT {
        return Err(Error::Overflow { x });
    }
    Ok(gamma_unchecked(x))
}

fn gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        // Reflection: gamma(x) gamma(1-x) = pi / sin(pi x).
        PI / ((PI * x).sin() * gamma_unchecked(1.0 - x))
    } else {
        let z = x - 1.0;
        let mut acc = LANCZOS[0];
        for (i, c) in LANCZOS.iter().enumerate().skip(1) {
            acc += c / (z + i as f64);
        }
        let t = z + LANCZOS_G + 0.5;
        // t^(z+1/2) split in half so intermediates stay finite near the
        // overflow limit (t^169 alone would overflow while gamma(170) fits).
        let half_pow = t.powf(0.5 * (z + 0.5));
        (2.0 * PI).sqrt() * acc * half_pow * (half_pow * (-t).exp())
    }
}

/// Natural log of gamma(x) for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Domain(format!(
            "ln_gamma requires a positive argument, got {x}"
        )));
    }
    if x < 0.5 {
        // gamma(x) = gamma(x+1)/x.
        return Ok(ln_gamma(x + 1.0)? - x.ln());
    }
    let z = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    Ok(0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + acc.ln())
}

/// Beta function B(x, y) = gamma(x) gamma(y) / gamma(x + y) for x, y > 0,
/// computed through log-gamma so large arguments do not overflow.
pub fn beta(x: f64, y: f64) -> Result<f64> {
    if x <= 0.0 || y <= 0.0 {
        return Err(Error::Domain(format!(
            "beta requires positive arguments, got ({x}, {y})"
        )));
    }
    Ok((ln_gamma(x)? + ln_gamma(y)? - ln_gamma(x + y)?).exp())
}
