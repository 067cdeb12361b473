//! Dense complex helpers on top of nalgebra.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type C64 = Complex64;
pub type CMat = DMatrix<C64>;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn identity(n: usize) -> CMat {
    CMat::identity(n, n)
}

pub fn herm_part(a: &CMat) -> CMat {
    (a + a.adjoint()) * c(0.5, 0.0)
}

pub fn frob_norm(a: &CMat) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// `Re tr(A B*)`.
pub fn inner(a: &CMat, b: &CMat) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x * y.conj()).re).sum()
}

pub fn trace(a: &CMat) -> C64 {
    a.trace()
}

pub fn bracket(a: &CMat, b: &CMat) -> CMat {
    a * b - b * a
}

/// Relative Hermitian defect `|A - A*| / max(1, |A|)`.
pub fn hermitian_defect(a: &CMat) -> f64 {
    frob_norm(&(a - a.adjoint())) / frob_norm(a).max(1.0)
}

/// Eigenvalues in ascending order with unitary eigenvectors as columns.
pub fn hermitian_eig(h: &CMat) -> (Vec<f64>, CMat) {
    let eig = nalgebra::SymmetricEigen::new(herm_part(h));
    let n = h.nrows();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let vals = idx.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vecs = CMat::from_fn(n, n, |r, col| eig.eigenvectors[(r, idx[col])]);
    (vals, vecs)
}

/// `f(H)` for Hermitian `H`.
pub fn hermitian_fn(h: &CMat, f: impl Fn(f64) -> f64) -> CMat {
    let (vals, u) = hermitian_eig(h);
    let d = DVector::from_iterator(vals.len(), vals.iter().map(|&x| c(f(x), 0.0)));
    &u * CMat::from_diagonal(&d) * u.adjoint()
}

pub fn expm_hermitian(h: &CMat) -> CMat {
    hermitian_fn(h, f64::exp)
}

/// Principal logarithm of a Hermitian positive definite matrix.
pub fn logm_spd(p: &CMat) -> CMat {
    hermitian_fn(p, f64::ln)
}

/// General matrix exponential (scaling and squaring with Padé approximants).
pub fn expm(a: &CMat) -> CMat {
    a.exp()
}

/// Exponential of a nilpotent matrix by its finite series.
pub fn expm_nilpotent(a: &CMat) -> CMat {
    let n = a.nrows();
    let mut out = identity(n);
    let mut term = identity(n);
    for k in 1..=n {
        term = &term * a * c(1.0 / k as f64, 0.0);
        out += &term;
    }
    out
}

pub fn real(x: f64) -> C64 {
    c(x, 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_log_round_trip() {
        let h = CMat::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.5, 0.2), c(0.5, -0.2), c(-1.0, 0.0)]);
        let p = expm_hermitian(&h);
        assert!(frob_norm(&(logm_spd(&p) - &h)) < 1e-12);
        assert!(frob_norm(&(expm(&h) - &p)) < 1e-12);
    }

    #[test]
    fn nilpotent_series_matches_pade() {
        let mut n = CMat::zeros(3, 3);
        n[(0, 1)] = c(1.0, 2.0);
        n[(1, 2)] = c(-0.5, 0.0);
        n[(0, 2)] = c(0.3, 0.1);
        assert!(frob_norm(&(expm_nilpotent(&n) - expm(&n))) < 1e-12);
    }
}
