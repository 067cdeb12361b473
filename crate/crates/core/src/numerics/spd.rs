//! Points of `M_n = {z* z : z in SL_n(C)}` and the invariant distance.

use super::linalg::{frob_norm, hermitian_defect, hermitian_eig, hermitian_fn, CMat};
use super::{COND_MAX, TAU_DET, TAU_HERM};
use crate::error::{CrError, Result};

/// Validates a Hermitian positive definite matrix, returning its spectrum.
pub fn check_spd(p: &CMat) -> Result<Vec<f64>> {
    if !p.is_square() {
        return Err(CrError::IncompatibleShapes("matrix is not square".into()));
    }
    if hermitian_defect(p) > TAU_HERM {
        return Err(CrError::NotPositiveDefinite(format!("Hermitian defect {:e}", hermitian_defect(p))));
    }
    let (vals, _) = hermitian_eig(p);
    if vals[0] <= 0.0 {
        return Err(CrError::NotPositiveDefinite(format!("smallest eigenvalue {:e}", vals[0])));
    }
    let cond = vals[vals.len() - 1] / vals[0];
    if cond > COND_MAX {
        return Err(CrError::IllConditioned(cond));
    }
    Ok(vals)
}

/// A validated point of `M_n` (Hermitian, positive definite, determinant one).
#[derive(Clone, Debug)]
pub struct SpdPoint(CMat);

impl SpdPoint {
    pub fn new(p: CMat) -> Result<Self> {
        let vals = check_spd(&p)?;
        let logdet: f64 = vals.iter().map(|x| x.ln()).sum();
        if logdet.abs() > TAU_DET {
            return Err(CrError::NotPositiveDefinite(format!("determinant {:e} is not one", logdet.exp())));
        }
        Ok(SpdPoint(p))
    }

    pub fn matrix(&self) -> &CMat {
        &self.0
    }
}

/// `p^{-1/2} q p^{-1/2}`, whose eigenvalues are those of `p^{-1} q`.
pub fn relative(p: &CMat, q: &CMat) -> Result<CMat> {
    check_spd(p)?;
    check_spd(q)?;
    let s = hermitian_fn(p, |x| 1.0 / x.sqrt());
    Ok(&s * q * &s)
}

/// `dist(p, q) = sqrt(sum log^2 lambda_i(p^{-1} q))`.
pub fn dist(p: &CMat, q: &CMat) -> Result<f64> {
    let r = relative(p, q)?;
    let (vals, _) = hermitian_eig(&r);
    Ok(vals.iter().map(|x| x.ln().powi(2)).sum::<f64>().sqrt())
}

/// Invariant metric `tr(p^{-1} X p^{-1} Y)` on Hermitian tangent vectors.
pub fn metric(p: &CMat, x: &CMat, y: &CMat) -> f64 {
    let pi = p.clone().try_inverse().expect("positive definite matrices are invertible");
    (&pi * x * &pi * y).trace().re
}

/// The geodesic from `p` with initial velocity `p^{1/2} X p^{1/2}`: `p^{1/2} exp(tX) p^{1/2}`.
pub fn geodesic(p: &CMat, x: &CMat, t: f64) -> CMat {
    let s = hermitian_fn(p, f64::sqrt);
    let e = hermitian_fn(x, |l| (t * l).exp());
    &s * e * &s
}

pub fn frobenius_distance(a: &CMat, b: &CMat) -> f64 {
    frob_norm(&(a - b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::linalg::c;

    #[test]
    fn distance_to_diagonal_point() {
        let e = CMat::identity(2, 2);
        let mut p = CMat::zeros(2, 2);
        p[(0, 0)] = c(2f64.exp(), 0.0);
        p[(1, 1)] = c((-2f64).exp(), 0.0);
        assert!((dist(&e, &p).unwrap() - 8f64.sqrt()).abs() < 1e-12);
        SpdPoint::new(p).unwrap();
    }

    #[test]
    fn rejects_indefinite_and_ill_conditioned() {
        let mut p = CMat::identity(2, 2);
        p[(1, 1)] = c(-1.0, 0.0);
        assert!(matches!(check_spd(&p), Err(CrError::NotPositiveDefinite(_))));
        p[(1, 1)] = c(1e-14, 0.0);
        assert!(matches!(check_spd(&p), Err(CrError::IllConditioned(_))));
    }
}
