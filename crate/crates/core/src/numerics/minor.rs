//! Comparison of the distance to the identity with the log-ratios of leading minors.

use super::linalg::CMat;
use super::spd::check_spd;
use crate::error::Result;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct MinorReport {
    /// `sum log^2 lambda_i(h)`.
    pub lhs: f64,
    /// `sum log^2 (D_l / D_{l-1})`.
    pub rhs: f64,
    /// Frobenius norm of the off-diagonal part.
    pub off_diagonal: f64,
    /// `lhs - rhs` exceeds rounding noise.
    pub strict: bool,
}

pub fn minor_log_inequality(h: &CMat) -> Result<MinorReport> {
    let vals = check_spd(h)?;
    let n = h.nrows();
    let lhs: f64 = vals.iter().map(|x| x.ln().powi(2)).sum();
    let mut rhs = 0.0;
    let mut prev = 1.0;
    for l in 1..=n {
        let d = h.view((0, 0), (l, l)).into_owned().determinant().re;
        rhs += (d / prev).ln().powi(2);
        prev = d;
    }
    let mut off = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                off += h[(i, j)].norm_sqr();
            }
        }
    }
    Ok(MinorReport { lhs, rhs, off_diagonal: off.sqrt(), strict: lhs - rhs > 1e-14 * lhs.max(1.0) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::linalg::c;

    #[test]
    fn hand_case() {
        let h = CMat::from_row_slice(2, 2, &[c(2.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]);
        let r = minor_log_inequality(&h).unwrap();
        assert!((r.lhs - 1.8524).abs() < 1e-3);
        assert!((r.rhs - 0.9609).abs() < 1e-3);
        assert!(r.strict);
    }
}
