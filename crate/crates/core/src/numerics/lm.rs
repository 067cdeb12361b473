//! Dense Levenberg-Marquardt with central-difference Jacobians.

use nalgebra::{DMatrix, DVector};

#[derive(Clone, Copy, Debug)]
pub struct LmOptions {
    pub max_iter: usize,
    /// Stop once the residual norm falls below this.
    pub tol_residual: f64,
    /// Stop once a step is this small relative to `1 + |x|`.
    pub tol_step: f64,
    /// Stop once the gradient norm falls below this.
    pub tol_grad: f64,
    pub fd_step: f64,
}

impl Default for LmOptions {
    fn default() -> Self {
        LmOptions { max_iter: 200, tol_residual: 1e-13, tol_step: 1e-15, tol_grad: 1e-14, fd_step: 1e-6 }
    }
}

#[derive(Clone, Debug)]
pub struct LmResult {
    pub x: Vec<f64>,
    /// Squared residual norm at `x`.
    pub cost: f64,
    pub iterations: usize,
}

fn sq(r: &[f64]) -> f64 {
    r.iter().map(|v| v * v).sum()
}

fn jacobian(f: &impl Fn(&[f64]) -> Vec<f64>, x: &[f64], m: usize, h: f64) -> DMatrix<f64> {
    let n = x.len();
    let mut j = DMatrix::zeros(m, n);
    let mut xp = x.to_vec();
    for k in 0..n {
        let step = h * (1.0 + x[k].abs());
        xp[k] = x[k] + step;
        let rp = f(&xp);
        xp[k] = x[k] - step;
        let rm = f(&xp);
        xp[k] = x[k];
        for i in 0..m {
            j[(i, k)] = (rp[i] - rm[i]) / (2.0 * step);
        }
    }
    j
}

/// Minimizes `|f(x)|^2`. Every accepted step lowers the cost, so the result
/// never exceeds the cost at `x0`.
pub fn minimize(f: impl Fn(&[f64]) -> Vec<f64>, x0: &[f64], opts: &LmOptions) -> LmResult {
    let mut x = x0.to_vec();
    let mut r = f(&x);
    let mut cost = sq(&r);
    let m = r.len();
    let mut mu = 1e-3;
    let mut it = 0;
    if x.is_empty() {
        return LmResult { x, cost, iterations: 0 };
    }
    while it < opts.max_iter && cost.sqrt() > opts.tol_residual {
        it += 1;
        let j = jacobian(&f, &x, m, opts.fd_step);
        let rv = DVector::from_column_slice(&r);
        let g = j.transpose() * &rv;
        if g.norm() < opts.tol_grad {
            break;
        }
        let jtj = j.transpose() * &j;
        let mut accepted = false;
        for _ in 0..40 {
            let mut a = jtj.clone();
            for k in 0..a.nrows() {
                a[(k, k)] += mu * (1.0 + jtj[(k, k)]);
            }
            let Some(delta) = a.lu().solve(&(-&g)) else {
                mu *= 10.0;
                continue;
            };
            let xn: Vec<f64> = x.iter().zip(delta.iter()).map(|(a, b)| a + b).collect();
            let rn = f(&xn);
            let cn = sq(&rn);
            if cn.is_finite() && cn < cost {
                let small = delta.norm() <= opts.tol_step * (1.0 + DVector::from_column_slice(&x).norm());
                x = xn;
                r = rn;
                cost = cn;
                mu = (mu / 3.0).max(1e-12);
                accepted = true;
                if small {
                    return LmResult { x, cost, iterations: it };
                }
                break;
            }
            mu *= 4.0;
        }
        if !accepted {
            break;
        }
    }
    LmResult { x, cost, iterations: it }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rosenbrock_residuals() {
        let f = |x: &[f64]| vec![10.0 * (x[1] - x[0] * x[0]), 1.0 - x[0]];
        let r = minimize(f, &[-1.2, 1.0], &LmOptions::default());
        assert!((r.x[0] - 1.0).abs() < 1e-8 && (r.x[1] - 1.0).abs() < 1e-8, "{:?}", r);
    }
}
