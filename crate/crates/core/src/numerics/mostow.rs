//! The decomposition `zeta = u exp(X) exp(Z) v` with `u` in `K0`, `X` in `f0`,
//! `Z` in `l` and `v` in `V' = exp(nr(v)) exp(v ∩ p0)`.

use super::linalg::{c, expm, expm_hermitian, expm_nilpotent, frob_norm, identity, inner, real, CMat};
use super::lm::{minimize, LmOptions};
use super::TAU_UNIT;
use crate::cr::fiber_data;
use crate::error::{CrError, Result};
use crate::exact::ExactMatrix;
use crate::lie::Subalgebra;
use crate::parabolic::{hnr_verdict, q_max, q_min};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use rand_distr::StandardNormal;

/// Floating-point frames for the spaces entering the decomposition.
#[derive(Clone, Debug)]
pub struct MostowStructure {
    pub n: usize,
    /// Orthonormal real basis of `k0`.
    pub k0: Vec<CMat>,
    /// Orthonormal real basis of `p0 = i k0`.
    pub p0: Vec<CMat>,
    /// Orthonormal Hermitian basis of `f0`.
    pub f0: Vec<CMat>,
    /// Orthonormal Hermitian basis of `v ∩ p0`.
    pub v_p0: Vec<CMat>,
    /// Orthonormal complex bases.
    pub v_n: Vec<CMat>,
    pub e_n: Vec<CMat>,
    pub l: Vec<CMat>,
    /// `sigma(nr(v))`, the holomorphic tangent of `M0` at the base point.
    pub v_n_bar: Vec<CMat>,
    /// `L(q)` minus `L(v)`: tangent directions of the fiber `Q_-`.
    pub q_fiber: Vec<CMat>,
    pub hnr: bool,
    pub strict_hnr: bool,
}

fn real_frame(ms: &[ExactMatrix]) -> Vec<CMat> {
    let mut out: Vec<CMat> = Vec::new();
    for m in ms {
        let mut x = m.to_c64();
        for b in &out {
            x -= b * real(inner(&x, b));
        }
        let nx = frob_norm(&x);
        if nx > 1e-12 {
            out.push(x / real(nx));
        }
    }
    out
}

fn complex_frame(ms: &[ExactMatrix]) -> Vec<CMat> {
    let mut out: Vec<CMat> = Vec::new();
    for m in ms {
        let mut x = m.to_c64();
        for b in &out {
            let p = (&x * b.adjoint()).trace();
            x -= b * p;
        }
        let nx = frob_norm(&x);
        if nx > 1e-12 {
            out.push(x / real(nx));
        }
    }
    out
}

impl MostowStructure {
    /// Builds the frames from `v`, using a maximal element of `P0(w)`.
    pub fn from_subalgebra(v: &Subalgebra) -> Result<Self> {
        let k = v.ambient();
        let verdict = hnr_verdict(v)?;
        let w = &verdict.w;
        let q = q_max(w, &q_min(w)?)?;
        let fd = fiber_data(v, w, &q)?;
        let q_fiber = v.levi().hermitian_complement_in(q.levi());
        let vp0 = v.levi().real_form(-1);
        Ok(MostowStructure {
            n: k.n(),
            k0: real_frame(&k.k0().basis()),
            p0: real_frame(&k.p0().basis()),
            f0: real_frame(&fd.f0.basis()),
            v_p0: real_frame(&vp0.basis()),
            v_n: complex_frame(&v.nr().basis()),
            e_n: complex_frame(&fd.e_n.basis()),
            l: complex_frame(&fd.l.basis()),
            v_n_bar: complex_frame(&v.nr().sigma().basis()),
            q_fiber: complex_frame(&q_fiber.basis()),
            hnr: verdict.hnr,
            strict_hnr: verdict.strict_hnr,
        })
    }

    pub fn real_combo(basis: &[CMat], x: &[f64], n: usize) -> CMat {
        let mut out = CMat::zeros(n, n);
        for (b, &a) in basis.iter().zip(x) {
            out += b * real(a);
        }
        out
    }

    /// `sum (x_{2j} + i x_{2j+1}) b_j`.
    pub fn complex_combo(basis: &[CMat], x: &[f64], n: usize) -> CMat {
        let mut out = CMat::zeros(n, n);
        for (j, b) in basis.iter().enumerate() {
            out += b * c(x[2 * j], x[2 * j + 1]);
        }
        out
    }

    fn gaussian(rng: &mut ChaCha8Rng, len: usize, scale: f64) -> Vec<f64> {
        (0..len).map(|_| scale * rng.sample::<f64, _>(StandardNormal)).collect()
    }

    pub fn random_k0(&self, rng: &mut ChaCha8Rng, scale: f64) -> CMat {
        let a = Self::real_combo(&self.k0, &Self::gaussian(rng, self.k0.len(), scale), self.n);
        expm(&a)
    }

    pub fn random_f0(&self, rng: &mut ChaCha8Rng, scale: f64) -> CMat {
        Self::real_combo(&self.f0, &Self::gaussian(rng, self.f0.len(), scale), self.n)
    }

    /// A random element of `V' = exp(nr(v)) exp(v ∩ p0)`.
    pub fn random_v_prime(&self, rng: &mut ChaCha8Rng, scale: f64) -> CMat {
        let w = Self::complex_combo(&self.v_n, &Self::gaussian(rng, 2 * self.v_n.len(), scale), self.n);
        let y = Self::real_combo(&self.v_p0, &Self::gaussian(rng, self.v_p0.len(), scale), self.n);
        expm_nilpotent(&w) * expm_hermitian(&y)
    }

    /// A random element of `K` of the form `exp(A)` with `A` in `k`.
    pub fn random_k(&self, rng: &mut ChaCha8Rng, scale: f64) -> CMat {
        let a = Self::real_combo(&self.k0, &Self::gaussian(rng, self.k0.len(), scale), self.n)
            + Self::real_combo(&self.p0, &Self::gaussian(rng, self.p0.len(), scale), self.n);
        expm(&a)
    }
}

#[derive(Clone, Debug)]
pub struct MostowOptions {
    pub restarts: usize,
    pub seed: u64,
    /// Relative residual accepted as converged.
    pub tol: f64,
    pub allow_nonunique: bool,
    /// Standard deviation of the random restart coordinates.
    pub init_scale: f64,
}

impl Default for MostowOptions {
    fn default() -> Self {
        MostowOptions { restarts: 8, seed: 0, tol: 1e-10, allow_nonunique: false, init_scale: 0.5 }
    }
}

#[derive(Clone, Debug)]
pub struct MostowDecomposition {
    pub u: CMat,
    pub x: CMat,
    pub z: CMat,
    pub v: CMat,
    pub x_norm: f64,
    /// `|zeta - u exp(X) exp(Z) v| / |zeta|`.
    pub residual: f64,
    pub restarts_converged: usize,
    pub restarts_agree: bool,
    /// Largest distance between the `X` found by converged restarts.
    pub x_spread: f64,
}

/// Upper-triangle real coordinates of a Hermitian matrix, scaled so that the
/// Euclidean norm equals the Frobenius norm.
pub fn herm_coords(m: &CMat) -> Vec<f64> {
    let n = m.nrows();
    let mut out = Vec::with_capacity(n * n);
    let s2 = 2f64.sqrt();
    for i in 0..n {
        out.push(m[(i, i)].re);
        for j in i + 1..n {
            out.push(s2 * m[(i, j)].re);
            out.push(s2 * m[(i, j)].im);
        }
    }
    out
}

/// `log` of a unipotent matrix by its finite series.
pub fn log_unipotent(u: &CMat) -> CMat {
    let n = u.nrows();
    let m = u - identity(n);
    let mut out = CMat::zeros(n, n);
    let mut p = identity(n);
    for k in 1..=n {
        p = &p * &m;
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        out += &p * real(sign / k as f64);
    }
    out
}

struct StageA {
    x: CMat,
    y: CMat,
    nmat: CMat,
    rel: f64,
}

fn stage_a(s: &MostowStructure, p: &CMat, x0: &[f64], tol: f64) -> StageA {
    let n = s.n;
    let (df, dy, de) = (s.f0.len(), s.v_p0.len(), s.e_n.len());
    let scale = frob_norm(p);
    let unpack = |x: &[f64]| {
        let xf = MostowStructure::real_combo(&s.f0, &x[..df], n);
        let y = MostowStructure::real_combo(&s.v_p0, &x[df..df + dy], n);
        let nm = MostowStructure::complex_combo(&s.e_n, &x[df + dy..], n);
        (xf, y, nm)
    };
    let f = |x: &[f64]| {
        let (xf, y, nm) = unpack(x);
        let eta = expm_nilpotent(&nm) * expm_hermitian(&y);
        let m = eta.adjoint() * expm_hermitian(&(xf * real(2.0))) * &eta - p;
        herm_coords(&(m / real(scale)))
    };
    let opts = LmOptions { tol_residual: tol * 1e-2, max_iter: 300, ..Default::default() };
    let r = minimize(f, x0, &opts);
    debug_assert_eq!(r.x.len(), df + dy + 2 * de);
    let (x, y, nmat) = unpack(&r.x);
    StageA { x, y, nmat, rel: r.cost.sqrt() }
}

/// Splits `xi` in `exp(e_n)` as `exp(Z) exp(W)` with `Z` in `l`, `W` in `nr(v)`.
fn stage_b(s: &MostowStructure, xi: &CMat) -> Result<(CMat, CMat)> {
    let n = s.n;
    let full = log_unipotent(xi);
    if s.l.is_empty() {
        return Ok((CMat::zeros(n, n), full));
    }
    let off_vn = |m: &CMat| {
        let mut r = m.clone();
        for b in &s.v_n {
            let p = (m * b.adjoint()).trace();
            r -= b * p;
        }
        r
    };
    let f = |x: &[f64]| {
        let z = MostowStructure::complex_combo(&s.l, x, n);
        let r = off_vn(&log_unipotent(&(expm_nilpotent(&(-z)) * xi)));
        r.iter().flat_map(|v| [v.re, v.im]).collect::<Vec<f64>>()
    };
    let x0: Vec<f64> = s.l.iter().flat_map(|b| {
        let p = (&full * b.adjoint()).trace();
        [p.re, p.im]
    }).collect();
    let r = minimize(f, &x0, &LmOptions::default());
    if r.cost.sqrt() > 1e-9 * (1.0 + frob_norm(&full)) {
        return Err(CrError::NonConvergence(format!("unipotent splitting residual {:e}", r.cost.sqrt())));
    }
    let z = MostowStructure::complex_combo(&s.l, &r.x, n);
    let w = log_unipotent(&(expm_nilpotent(&(-&z)) * xi));
    Ok((z, w))
}

pub fn mostow_decompose(s: &MostowStructure, zeta: &CMat, opts: &MostowOptions) -> Result<MostowDecomposition> {
    let n = s.n;
    if zeta.shape() != (n, n) {
        return Err(CrError::IncompatibleShapes(format!("expected {n}x{n}")));
    }
    let det = zeta.determinant();
    if (det - c(1.0, 0.0)).norm() > 1e-8 {
        return Err(CrError::InvalidInput(format!("zeta has determinant {det}")));
    }
    let p = zeta.adjoint() * zeta;
    let dim = s.f0.len() + s.v_p0.len() + 2 * s.e_n.len();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut found: Vec<MostowDecomposition> = Vec::new();
    for r in 0..opts.restarts.max(1) {
        let x0: Vec<f64> = if r == 0 {
            vec![0.0; dim]
        } else {
            (0..dim).map(|_| opts.init_scale * rng.sample::<f64, _>(StandardNormal)).collect()
        };
        let a = stage_a(s, &p, &x0, opts.tol);
        if a.rel > opts.tol {
            continue;
        }
        let xi = expm_nilpotent(&a.nmat);
        let eta = &xi * expm_hermitian(&a.y);
        let Some(eta_inv) = eta.clone().try_inverse() else { continue };
        let u = zeta * eta_inv * expm_hermitian(&(-&a.x));
        if frob_norm(&(u.adjoint() * &u - identity(n))) > 1e3 * TAU_UNIT.max(opts.tol) {
            continue;
        }
        let (z, w) = stage_b(s, &xi)?;
        let v = expm_nilpotent(&w) * expm_hermitian(&a.y);
        let rebuilt = &u * expm_hermitian(&a.x) * expm_nilpotent(&z) * &v;
        let residual = frob_norm(&(zeta - rebuilt)) / frob_norm(zeta);
        found.push(MostowDecomposition {
            x_norm: frob_norm(&a.x),
            u,
            x: a.x,
            z,
            v,
            residual,
            restarts_converged: 0,
            restarts_agree: true,
            x_spread: 0.0,
        });
    }
    if found.is_empty() {
        return Err(CrError::NonConvergence(format!("no restart reached relative residual {:e}", opts.tol)));
    }
    reduce_restarts(found, opts.allow_nonunique)
}

/// Keeps the converged restart of least residual, the earliest on ties,
/// after checking that all restarts found the same `X`.
pub fn reduce_restarts(found: Vec<MostowDecomposition>, allow_nonunique: bool) -> Result<MostowDecomposition> {
    let spread = found
        .iter()
        .flat_map(|a| found.iter().map(move |b| frob_norm(&(&a.x - &b.x))))
        .fold(0.0, f64::max);
    let agree = spread <= 1e-6 * (1.0 + found[0].x_norm);
    if !agree && !allow_nonunique {
        return Err(CrError::RestartDisagreement(format!("restarts differ in X by {spread:e}")));
    }
    let count = found.len();
    let mut best = found
        .into_iter()
        .min_by(|a, b| a.residual.total_cmp(&b.residual))
        .ok_or_else(|| CrError::NonConvergence("no converged restart".into()))?;
    best.restarts_converged = count;
    best.restarts_agree = agree;
    best.x_spread = spread;
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unipotent_log_inverts_exp() {
        let mut nmat = CMat::zeros(3, 3);
        nmat[(0, 1)] = c(0.4, -1.0);
        nmat[(0, 2)] = c(2.0, 0.3);
        nmat[(1, 2)] = c(-0.7, 0.1);
        assert!(frob_norm(&(log_unipotent(&expm_nilpotent(&nmat)) - nmat)) < 1e-12);
    }

    #[test]
    fn herm_coords_preserve_norm() {
        let mut h = CMat::zeros(2, 2);
        h[(0, 0)] = c(1.0, 0.0);
        h[(0, 1)] = c(0.5, 2.0);
        h[(1, 0)] = c(0.5, -2.0);
        let v = herm_coords(&h);
        let n2: f64 = v.iter().map(|x| x * x).sum();
        assert!((n2.sqrt() - frob_norm(&h)).abs() < 1e-12);
    }

    fn fake(x: f64, residual: f64) -> MostowDecomposition {
        let mut xm = CMat::zeros(2, 2);
        xm[(0, 0)] = c(x, 0.0);
        xm[(1, 1)] = c(-x, 0.0);
        MostowDecomposition {
            u: identity(2),
            x_norm: frob_norm(&xm),
            x: xm,
            z: CMat::zeros(2, 2),
            v: identity(2),
            residual,
            restarts_converged: 0,
            restarts_agree: true,
            x_spread: 0.0,
        }
    }

    #[test]
    fn disagreeing_restarts_are_reported_not_averaged() {
        let found = vec![fake(0.3, 1e-14), fake(0.9, 1e-15)];
        let err = reduce_restarts(found.clone(), false).unwrap_err();
        assert!(matches!(err, CrError::RestartDisagreement(_)));
        let best = reduce_restarts(found, true).unwrap();
        assert!(!best.restarts_agree);
        assert!((best.x[(0, 0)].re - 0.9).abs() < 1e-15);
        assert!(best.x_spread > 0.8);
    }

    #[test]
    fn ties_keep_the_earliest_restart() {
        let best = reduce_restarts(vec![fake(0.5, 1e-14), fake(0.5 + 1e-9, 1e-14)], false).unwrap();
        assert_eq!(best.x[(0, 0)].re, 0.5);
        assert_eq!(best.restarts_converged, 2);
    }
}
