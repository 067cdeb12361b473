//! Jacobi fields along the geodesic `t -> exp(tH)` in `SL_n(C)/SU(n)`.
//!
//! The fields are `J = theta_Z + t theta_T` with
//! `theta_W(t) = W* e^{tH} + e^{tH} W` and `[H, T] = 0`.

use super::linalg::{bracket, c, frob_norm, hermitian_defect, hermitian_eig, real, CMat};
use super::quadrature::integrate;
use super::{QUAD_TOL, TAU_HERM, TAU_XCHECK};
use crate::error::{CrError, Result};

#[derive(Clone, Debug)]
pub struct JacobiField {
    h: CMat,
    z: CMat,
    t: CMat,
    eigvals: Vec<f64>,
    eigvecs: CMat,
}

impl JacobiField {
    /// `h` Hermitian traceless, `t` Hermitian commuting with `h`, `z` arbitrary.
    pub fn new(h: CMat, z: CMat, t: CMat) -> Result<Self> {
        let n = h.nrows();
        if z.shape() != (n, n) || t.shape() != (n, n) {
            return Err(CrError::IncompatibleShapes("H, Z, T must share one size".into()));
        }
        if hermitian_defect(&h) > TAU_HERM || hermitian_defect(&t) > TAU_HERM {
            return Err(CrError::InvalidInput("H and T must be Hermitian".into()));
        }
        if frob_norm(&bracket(&h, &t)) > 1e-9 * frob_norm(&h).max(1.0) * frob_norm(&t).max(1.0) {
            return Err(CrError::InvalidInput("T must commute with H".into()));
        }
        let (eigvals, eigvecs) = hermitian_eig(&h);
        Ok(JacobiField { h, z, t, eigvals, eigvecs })
    }

    pub fn h(&self) -> &CMat {
        &self.h
    }

    /// `exp(tH)` via the cached eigendecomposition.
    pub fn gamma(&self, t: f64) -> CMat {
        self.exp_h(t)
    }

    fn exp_h(&self, s: f64) -> CMat {
        let u = &self.eigvecs;
        let d = CMat::from_diagonal(&nalgebra::DVector::from_iterator(
            self.eigvals.len(),
            self.eigvals.iter().map(|l| real((s * l).exp())),
        ));
        u * d * u.adjoint()
    }

    pub fn theta(&self, w: &CMat, t: f64) -> CMat {
        let e = self.exp_h(t);
        w.adjoint() * &e + &e * w
    }

    /// `J(t) = theta_Z(t) + 2t T e^{tH}`.
    pub fn value(&self, t: f64) -> CMat {
        self.theta(&self.z, t) + &self.t * self.exp_h(t) * real(2.0 * t)
    }

    /// `DJ/dt = theta_{([H,Z] + 2T)/2}(t)`.
    pub fn velocity(&self, t: f64) -> CMat {
        let w = (bracket(&self.h, &self.z) + &self.t * real(2.0)) * real(0.5);
        self.theta(&w, t)
    }

    /// `D^k J / dt^k`; for `k >= 2` this is `2^{-k} theta_{ad_H^k Z}(t)`.
    pub fn derivative(&self, k: u32, t: f64) -> CMat {
        match k {
            0 => self.value(t),
            1 => self.velocity(t),
            _ => {
                let mut w = self.z.clone();
                for _ in 0..k {
                    w = bracket(&self.h, &w);
                }
                self.theta(&w, t) * real(0.5f64.powi(k as i32))
            }
        }
    }

    /// Invariant inner product at `gamma(t)`.
    pub fn metric_at(&self, t: f64, x: &CMat, y: &CMat) -> f64 {
        let gi = self.exp_h(-t);
        (&gi * x * &gi * y).trace().re
    }

    /// `|J(t)|^2` computed directly from the metric.
    pub fn norm_sq_direct(&self, t: f64) -> f64 {
        let j = self.value(t);
        self.metric_at(t, &j, &j)
    }

    /// `|J(t)|^2` from the block formula in an eigenbasis of `H`.
    pub fn norm_sq_closed(&self, t: f64) -> f64 {
        let u = &self.eigvecs;
        let z = u.adjoint() * &self.z * u;
        let tt = u.adjoint() * &self.t * u;
        let l = &self.eigvals;
        let scale = l.iter().fold(1.0f64, |m, x| m.max(x.abs()));
        let n = l.len();
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                let delta = l[i] - l[j];
                let mut x = z[(i, j)] * (t * delta / 2.0).exp() + z[(j, i)].conj() * (-t * delta / 2.0).exp();
                if delta.abs() <= 1e-9 * scale {
                    x += tt[(i, j)] * c(2.0 * t, 0.0);
                }
                s += x.norm_sqr();
            }
        }
        s
    }

    /// Closed form, cross-checked against the direct evaluation.
    pub fn norm_sq(&self, t: f64) -> Result<f64> {
        let a = self.norm_sq_closed(t);
        let b = self.norm_sq_direct(t);
        if (a - b).abs() > TAU_XCHECK * a.abs().max(b.abs()).max(1.0) {
            return Err(CrError::CrossCheckDivergence(format!("closed form {a} vs direct {b} at t = {t}")));
        }
        Ok(a)
    }

    /// `|J|_H^2 = int_0^1 (1 - t)(|J'|^2 + (J, J'')) dt`.
    pub fn energy(&self) -> Result<f64> {
        integrate(
            |t| {
                let (j, jd, jdd) = (self.value(t), self.velocity(t), self.derivative(2, t));
                (1.0 - t) * (self.metric_at(t, &jd, &jd) + self.metric_at(t, &j, &jdd))
            },
            0.0,
            1.0,
            QUAD_TOL,
        )
    }

    /// `|J(1)|^2 - |J(0)|^2 - 2 (J(0) | J'(0)) - 2 |J|_H^2`.
    pub fn taylor_residual(&self) -> Result<f64> {
        let (j0, jd0) = (self.value(0.0), self.velocity(0.0));
        let lhs = self.norm_sq_direct(1.0);
        let rhs = self.norm_sq_direct(0.0) + 2.0 * self.metric_at(0.0, &j0, &jd0) + 2.0 * self.energy()?;
        Ok(lhs - rhs)
    }
}

/// Splits Hermitian `X = [H, Y] + T` with `Y` anti-Hermitian and `[H, T] = 0`.
pub fn split_tangent(h: &CMat, x: &CMat) -> (CMat, CMat) {
    let (l, u) = hermitian_eig(h);
    let xs = u.adjoint() * x * &u;
    let n = l.len();
    let scale = l.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let mut y = CMat::zeros(n, n);
    let mut t = CMat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let d = l[i] - l[j];
            if d.abs() <= 1e-9 * scale {
                t[(i, j)] = xs[(i, j)];
            } else {
                y[(i, j)] = xs[(i, j)] / d;
            }
        }
    }
    (&u * y * u.adjoint(), &u * t * u.adjoint())
}

/// The Jacobi field `J_X` with `J_X(0) = 0` and `J_X'(0) = X`.
pub fn jacobi_from_velocity(h: &CMat, x: &CMat) -> Result<JacobiField> {
    let (y, t) = split_tangent(h, x);
    JacobiField::new(h.clone(), y, t * real(0.5))
}

/// `d/dt exp(H + tX)` at `t = 0`, equal to `[e^H, Y] + T e^H` for `X = [H, Y] + T`.
pub fn exp_differential(h: &CMat, x: &CMat) -> CMat {
    let (y, t) = split_tangent(h, x);
    let e = super::linalg::expm_hermitian(h);
    bracket(&e, &y) + t * e
}

/// Orthogonality residual for `Re tr(XZ) = 0`:
/// `|theta_Z(1) - J_X(1)|^2 - |Z + Z*|^2 - 2 (H | [Z, Z*]) - 2 |theta_Z - J_X|_H^2`.
pub fn orthogonality_residual(h: &CMat, z: &CMat, x: &CMat) -> Result<f64> {
    let (y, t) = split_tangent(h, x);
    let field = JacobiField::new(h.clone(), z - y, -t * real(0.5))?;
    let lhs = field.norm_sq_direct(1.0);
    let zz = z + z.adjoint();
    let rhs = frob_norm(&zz).powi(2)
        + 2.0 * (h * bracket(z, &z.adjoint())).trace().re
        + 2.0 * field.energy()?;
    Ok(lhs - rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(xs: &[f64]) -> CMat {
        CMat::from_diagonal(&nalgebra::DVector::from_iterator(xs.len(), xs.iter().map(|&x| real(x))))
    }

    #[test]
    fn parallel_field_norm() {
        let h = diag(&[1.0, -1.0]);
        let t = diag(&[0.5, -0.5]);
        let j = JacobiField::new(h, CMat::zeros(2, 2), t.clone()).unwrap();
        for s in [0.0, 0.3, 1.0] {
            let want = 4.0 * s * s * (&t * &t).trace().re;
            assert!((j.norm_sq(s).unwrap() - want).abs() < 1e-12);
        }
    }

    #[test]
    fn velocity_at_zero() {
        let h = diag(&[0.7, -0.2, -0.5]);
        let mut z = CMat::zeros(3, 3);
        z[(0, 1)] = c(1.0, 0.5);
        z[(2, 0)] = c(-0.3, 0.2);
        let t = diag(&[0.1, 0.2, -0.3]);
        let j = JacobiField::new(h.clone(), z.clone(), t.clone()).unwrap();
        let want = bracket(&h, &(&z - z.adjoint())) * real(0.5) + t * real(2.0);
        assert!(frob_norm(&(j.velocity(0.0) - want)) < 1e-13);
        assert!(frob_norm(&(j.value(0.0) - (&z + z.adjoint()))) < 1e-13);
    }
}
