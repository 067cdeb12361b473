//! Adaptive Gauss-Kronrod (7, 15) quadrature.

#![allow(clippy::excessive_precision)]

use crate::error::{CrError, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_5,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_48,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_19,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_42,
    0.204_432_940_075_298_89,
    0.209_482_141_084_727_82,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_64,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let (c, h) = ((a + b) / 2.0, (b - a) / 2.0);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for i in 0..7 {
        let x = h * XGK[i];
        let s = f(c - x) + f(c + x);
        k += WGK[i] * s;
        if i % 2 == 1 {
            g += WG[i / 2] * s;
        }
    }
    (k * h, ((k - g) * h).abs())
}

/// Integrates `f` over `[a, b]` to absolute tolerance `tol`.
pub fn integrate(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    let mut stack = vec![(a, b, tol, 0usize)];
    let mut total = 0.0;
    while let Some((lo, hi, t, depth)) = stack.pop() {
        let (val, err) = gk15(&mut f, lo, hi);
        if err <= t || (err <= 1e-14 * val.abs().max(1.0)) {
            total += val;
        } else if depth >= 40 {
            return Err(CrError::QuadratureNonConvergence(format!("error {err:e} on [{lo}, {hi}]")));
        } else {
            let mid = (lo + hi) / 2.0;
            stack.push((lo, mid, t / 2.0, depth + 1));
            stack.push((mid, hi, t / 2.0, depth + 1));
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_and_exponential() {
        assert!((integrate(|x| x * x, 0.0, 1.0, 1e-12).unwrap() - 1.0 / 3.0).abs() < 1e-14);
        let v = integrate(|x| (1.0 - x) * (3.0 * x).exp(), 0.0, 1.0, 1e-12).unwrap();
        let exact = ((3f64).exp() - 4.0) / 9.0;
        assert!((v - exact).abs() < 1e-12);
    }
}
