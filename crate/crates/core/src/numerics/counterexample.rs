//! A Jacobi field along a geodesic of `SL_3(C)/SU(3)` vanishing at `t = 1`
//! whose generator `Z + Y` has `Z` nilpotent and trace-orthogonal to `[H, Y]`.

use super::linalg::{bracket, frob_norm, real, CMat};
use super::jacobi::JacobiField;
use crate::error::{CrError, Result};
use serde::Serialize;

#[derive(Clone, Debug)]
pub struct CounterexampleOptions {
    pub lambda1: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub residual_tol: f64,
    /// Upper end of the `lambda2` search.
    pub lambda2_max: f64,
}

impl Default for CounterexampleOptions {
    fn default() -> Self {
        CounterexampleOptions { lambda1: 0.0, a: 10.0, b: 1.0, c: 1.0, residual_tol: 1e-9, lambda2_max: 1e3 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Residuals {
    pub equation: f64,
    pub theta_at_one: f64,
    pub theta_at_zero: f64,
    pub trace_orthogonality: f64,
    pub z_cubed: f64,
}

#[derive(Clone, Debug)]
pub struct Counterexample {
    pub lambda1: f64,
    pub lambda2: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub h: CMat,
    pub z: CMat,
    pub y: CMat,
    pub residuals: Residuals,
}

/// `(x - y) / (e^x - e^y)`, continuous across `x = y`.
fn slope(x: f64, y: f64) -> f64 {
    let d = x - y;
    if d.abs() < 1e-8 {
        (-(x + y) / 2.0).exp() * (1.0 - d * d / 24.0)
    } else {
        d / (x.exp() - y.exp())
    }
}

/// Left-hand side of the reduced system as a function of `lambda2`.
pub fn reduced_equation(l1: f64, l2: f64, a: f64, b: f64, c: f64) -> f64 {
    let l3 = -l1 - l2;
    let d = -a * b / c;
    let (e1, e2, e3) = (l1.exp(), l2.exp(), l3.exp());
    slope(l2, l1) * (a * a * e1 + a * b * (e1 + e2) + b * b * e2)
        + slope(l3, l2) * (c * c * e2 + c * d * (e2 + e3) + d * d * e3)
}

fn build(l1: f64, l2: f64, a: f64, b: f64, cc: f64) -> (CMat, CMat, CMat) {
    let l3 = -l1 - l2;
    let d = -a * b / cc;
    let (e1, e2, e3) = (l1.exp(), l2.exp(), l3.exp());
    let alpha = (a * e1 + b * e2) / (e2 - e1);
    let beta = (cc * e2 + d * e3) / (e3 - e2);
    let mut h = CMat::zeros(3, 3);
    h[(0, 0)] = real(l1);
    h[(1, 1)] = real(l2);
    h[(2, 2)] = real(l3);
    let mut z = CMat::zeros(3, 3);
    z[(0, 1)] = real(a);
    z[(1, 0)] = real(b);
    z[(1, 2)] = real(cc);
    z[(2, 1)] = real(d);
    let mut y = CMat::zeros(3, 3);
    y[(0, 1)] = real(alpha);
    y[(1, 0)] = real(-alpha);
    y[(1, 2)] = real(beta);
    y[(2, 1)] = real(-beta);
    (h, z, y)
}

pub fn counterexample_search(opts: &CounterexampleOptions) -> Result<Counterexample> {
    let CounterexampleOptions { lambda1: l1, a, b, c: cc, .. } = *opts;
    if a * b <= 0.0 || cc == 0.0 {
        return Err(CrError::InvalidParameters("need ab > 0 and c != 0".into()));
    }
    let f = |l2: f64| reduced_equation(l1, l2, a, b, cc);
    // Both denominators vanish on lambda2 = lambda1 and lambda2 = -lambda1/2.
    let mut lo = l1.max(-l1 / 2.0) + 1e-2;
    if !(f(lo) > 0.0) {
        return Err(CrError::NoRootFound(format!("f({lo}) is not positive")));
    }
    let mut hi = lo + 1.0;
    while f(hi) > 0.0 {
        lo = hi;
        hi *= 2.0;
        if hi > opts.lambda2_max {
            return Err(CrError::NoRootFound(format!("f stays positive up to lambda2 = {}", opts.lambda2_max)));
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let l2 = if f(lo).abs() < f(hi).abs() { lo } else { hi };
    let (h, z, y) = build(l1, l2, a, b, cc);
    let w = &z + &y;
    let field = JacobiField::new(h.clone(), w, CMat::zeros(3, 3))?;
    let x = bracket(&h, &y);
    let residuals = Residuals {
        equation: f(l2).abs(),
        theta_at_one: frob_norm(&field.value(1.0)),
        theta_at_zero: frob_norm(&field.value(0.0)),
        trace_orthogonality: (x * &z).trace().norm(),
        z_cubed: frob_norm(&(&z * &z * &z)),
    };
    let scale = (a * a + b * b + cc * cc).sqrt();
    if residuals.theta_at_one >= 10.0 * opts.residual_tol
        || residuals.trace_orthogonality > opts.residual_tol * scale * scale.max(l2.abs())
    {
        return Err(CrError::NoRootFound(format!("residuals too large: {residuals:?}")));
    }
    Ok(Counterexample { lambda1: l1, lambda2: l2, a, b, c: cc, h, z, y, residuals })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_search_succeeds() {
        let r = counterexample_search(&CounterexampleOptions::default()).unwrap();
        assert!(r.residuals.theta_at_one < 1e-8);
        assert!(r.residuals.theta_at_zero > 0.1);
        assert!(r.a * r.b > 0.0);
    }

    #[test]
    fn small_a_has_no_root() {
        let opts = CounterexampleOptions { a: 0.1, ..Default::default() };
        assert!(matches!(counterexample_search(&opts), Err(CrError::NoRootFound(_))));
    }
}
