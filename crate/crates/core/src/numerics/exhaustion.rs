//! The exhaustion `phi(zeta) = (dist(zeta* zeta, N) / 2)^2` with
//! `N = {v* v : v in V}`, and finite-difference probes of its complex Hessian.

use super::linalg::{c, expm, expm_hermitian, expm_nilpotent, hermitian_eig, hermitian_fn, logm_spd, real, CMat};
use super::lm::{minimize, LmOptions};
use super::mostow::{herm_coords, mostow_decompose, MostowOptions, MostowStructure};
use super::spd::check_spd;
use crate::error::{CrError, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiMethod {
    /// Minimize the distance over `V` coordinates.
    Direct,
    /// Read `|X|^2` off the Mostow decomposition.
    Decomposition,
}

#[derive(Clone, Debug)]
pub struct PhiOptions {
    pub restarts: usize,
    pub seed: u64,
    pub method: PhiMethod,
    /// Cross-check the direct value against the decomposition when HNR holds.
    pub cross_check: bool,
}

impl Default for PhiOptions {
    fn default() -> Self {
        PhiOptions { restarts: 8, seed: 0, method: PhiMethod::Direct, cross_check: true }
    }
}

#[derive(Clone, Debug)]
pub struct PhiResult {
    pub phi: f64,
    /// Minimizing coordinates `(v ∩ p0, nr(v))`; empty for the decomposition method.
    pub coords: Vec<f64>,
    /// Value at `v = 1`, an upper bound for `phi`.
    pub at_identity: f64,
    /// `|X|^2` from the decomposition, when computed.
    pub decomposition_phi: Option<f64>,
}

/// Relative agreement required between the two routes to `phi`.
pub const TAU_PHI: f64 = 1e-7;

fn direct_objective<'a>(s: &'a MostowStructure, p: &CMat) -> impl Fn(&[f64]) -> Vec<f64> + 'a {
    let n = s.n;
    let root = hermitian_fn(p, |x| 1.0 / x.sqrt());
    let dy = s.v_p0.len();
    move |x: &[f64]| {
        let y = MostowStructure::real_combo(&s.v_p0, &x[..dy], n);
        let w = MostowStructure::complex_combo(&s.v_n, &x[dy..], n);
        let g = expm_hermitian(&y) * expm_nilpotent(&w);
        let q = g.adjoint() * g;
        let rel = &root * q * &root;
        herm_coords(&(logm_spd(&rel) * real(0.5)))
    }
}

/// `phi` by direct minimization, warm-started at `x0`.
pub fn phi_direct_from(s: &MostowStructure, zeta: &CMat, x0: &[f64]) -> Result<(f64, Vec<f64>)> {
    let p = zeta.adjoint() * zeta;
    check_spd(&p)?;
    let f = direct_objective(s, &p);
    let opts = LmOptions { tol_residual: 0.0, tol_grad: 1e-15, max_iter: 400, ..Default::default() };
    let r = minimize(f, x0, &opts);
    Ok((r.cost, r.x))
}

pub fn exhaustion_phi(s: &MostowStructure, zeta: &CMat, opts: &PhiOptions) -> Result<PhiResult> {
    let p = zeta.adjoint() * zeta;
    check_spd(&p)?;
    let dim = s.v_p0.len() + 2 * s.v_n.len();
    let at_identity = {
        let (vals, _) = hermitian_eig(&p);
        vals.iter().map(|x| x.ln().powi(2)).sum::<f64>() / 4.0
    };
    let decomposition = |seed: u64| -> Result<f64> {
        let m = mostow_decompose(s, zeta, &MostowOptions { restarts: opts.restarts, seed, ..Default::default() })?;
        Ok(m.x_norm * m.x_norm)
    };
    if opts.method == PhiMethod::Decomposition {
        let v = decomposition(opts.seed)?;
        return Ok(PhiResult { phi: v, coords: Vec::new(), at_identity, decomposition_phi: Some(v) });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut best: Option<(f64, Vec<f64>)> = None;
    for r in 0..opts.restarts.max(1) {
        let x0: Vec<f64> = if r == 0 {
            vec![0.0; dim]
        } else {
            (0..dim).map(|_| 0.5 * rng.sample::<f64, _>(StandardNormal)).collect()
        };
        let cand = phi_direct_from(s, zeta, &x0)?;
        if best.as_ref().is_none_or(|b| cand.0 < b.0) {
            best = Some(cand);
        }
    }
    let (phi, coords) = best.expect("at least one start");
    let mut decomposition_phi = None;
    if opts.cross_check && s.hnr && s.l.is_empty() {
        let d = decomposition(opts.seed)?;
        if (d - phi).abs() > TAU_PHI * phi.max(1.0) {
            return Err(CrError::CrossCheckDivergence(format!("direct phi {phi} vs decomposition {d}")));
        }
        decomposition_phi = Some(d);
    }
    Ok(PhiResult { phi, coords, at_identity, decomposition_phi })
}

/// Finite-difference Levi form of `phi` on a span of directions.
#[derive(Clone, Debug, Serialize)]
pub struct ProbeResult {
    pub eigenvalues: Vec<f64>,
    pub pos: usize,
    pub neg: usize,
    pub phi: f64,
}

/// Probes `dd^c phi` at `zeta` along the holomorphic curves `s -> zeta exp(sA)`.
///
/// The Hermitian form on `span(directions)` is recovered by polarization from
/// the Laplacians along each curve; eigenvalues beyond `gap` count as signed.
pub fn phi_levi_probe(
    s: &MostowStructure,
    zeta: &CMat,
    directions: &[CMat],
    step: f64,
    gap: f64,
    method: PhiMethod,
    seed: u64,
) -> Result<ProbeResult> {
    let base = exhaustion_phi(s, zeta, &PhiOptions { restarts: 4, seed, method, cross_check: false })?;
    let phi_at = |g: &CMat| -> Result<f64> {
        match method {
            PhiMethod::Direct => Ok(phi_direct_from(s, g, &base.coords)?.0),
            PhiMethod::Decomposition => {
                let m = mostow_decompose(s, g, &MostowOptions { restarts: 1, seed, ..Default::default() })?;
                Ok(m.x_norm * m.x_norm)
            }
        }
    };
    let levi = |a: &CMat| -> Result<f64> {
        let mut sum = -4.0 * base.phi;
        for w in [c(step, 0.0), c(-step, 0.0), c(0.0, step), c(0.0, -step)] {
            sum += phi_at(&(zeta * expm(&(a * w))))?;
        }
        Ok(sum / (4.0 * step * step))
    };
    let m = directions.len();
    let mut form = nalgebra::DMatrix::<num_complex::Complex64>::zeros(m, m);
    for i in 0..m {
        form[(i, i)] = real(levi(&directions[i])?);
    }
    for i in 0..m {
        for j in i + 1..m {
            let mut h = c(0.0, 0.0);
            for ik in [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)] {
                let d = &directions[i] + &directions[j] * ik;
                h += ik * levi(&d)?;
            }
            h *= 0.25;
            form[(i, j)] = h;
            form[(j, i)] = h.conj();
        }
    }
    let (eigenvalues, _) = hermitian_eig(&form);
    let pos = eigenvalues.iter().filter(|&&x| x > gap).count();
    let neg = eigenvalues.iter().filter(|&&x| x < -gap).count();
    Ok(ProbeResult { eigenvalues, pos, neg, phi: base.phi })
}
