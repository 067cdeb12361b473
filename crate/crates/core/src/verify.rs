//! Verification suites: catalog expectations and seeded numerical identities.

use crate::catalog::{self, CatalogEntry, Expected, GrassmannParams};
use crate::cr::{cr_type, fiber_data, levi_report};
use crate::error::Result;
use crate::exact::{ExactMatrix, Qi, Subspace};
use crate::lie::{make_subalgebra, normalizer, AmbientAlgebra, Closure};
use crate::numerics::counterexample::{counterexample_search, CounterexampleOptions};
use crate::numerics::exhaustion::{exhaustion_phi, phi_levi_probe, PhiMethod, PhiOptions};
use crate::numerics::jacobi::{exp_differential, JacobiField};
use crate::numerics::linalg::{c, expm_hermitian, frob_norm, hermitian_eig, real, CMat};
use crate::numerics::minor::minor_log_inequality;
use crate::numerics::mostow::{mostow_decompose, MostowOptions, MostowStructure};
use crate::parabolic::{hnr_verdict, is_parabolic, parabolic_regularization, q_max, q_min};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass, detail: detail.into() }
    }

    fn from_result(name: impl Into<String>, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((pass, detail)) => Check::new(name, pass, detail),
            Err(e) => Check::new(name, false, format!("error: {e}")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Tolerances {
    pub taylor_rel: f64,
    pub closed_form_rel: f64,
    pub orthogonality: f64,
    pub exp_differential: f64,
    pub minor_hand: f64,
    pub theta_at_one: f64,
    pub theta_at_zero_min: f64,
    pub x_norm: f64,
    pub residual: f64,
    pub phi_zero: f64,
    pub phi_invariance_rel: f64,
    pub tangency: f64,
    pub fd_step: f64,
    pub gap: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            taylor_rel: 1e-7,
            closed_form_rel: 1e-9,
            orthogonality: 1e-9,
            exp_differential: 1e-5,
            minor_hand: 1e-3,
            theta_at_one: 1e-8,
            theta_at_zero_min: 0.1,
            x_norm: 1e-6,
            residual: 1e-8,
            phi_zero: 1e-8,
            phi_invariance_rel: 1e-7,
            tangency: 1e-8,
            fd_step: 1e-3,
            gap: 1e-4,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Counts {
    pub jacobi_specs: usize,
    pub minor_samples: usize,
    pub mostow_trials: usize,
    pub exhaustion_samples: usize,
    pub hessian_points: usize,
}

impl Default for Counts {
    fn default() -> Self {
        Counts { jacobi_specs: 100, minor_samples: 200, mostow_trials: 50, exhaustion_samples: 100, hessian_points: 10 }
    }
}

/// Every catalog entry, with the Grassmannian family over all admissible
/// parameters of size at most 6.
pub fn catalog_entries() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for name in catalog::list() {
        if name == "grassmann_pair" {
            for p in GrassmannParams::admissible(6) {
                out.push(catalog::load(name, Some(p)).expect("admissible parameters load"));
            }
        } else {
            out.push(catalog::load(name, None).expect("catalog entry loads"));
        }
    }
    out
}

/// Replaces expected values by label, e.g. from a user-supplied JSON map.
pub fn apply_overrides(entries: &mut [CatalogEntry], overrides: &BTreeMap<String, Expected>) {
    for e in entries {
        if let Some(x) = overrides.get(&e.label()) {
            e.expected = x.clone();
        }
    }
}

fn compare<T: PartialEq + std::fmt::Debug>(label: &str, field: &str, want: Option<T>, got: T, out: &mut Vec<Check>) {
    if let Some(w) = want {
        let pass = w == got;
        out.push(Check::new(format!("{label}: {field}"), pass, format!("expected {w:?}, computed {got:?}")));
    }
}

fn structural_entry(e: &CatalogEntry, out: &mut Vec<Check>) -> Result<()> {
    let label = e.label();
    let x = &e.expected;
    let v = e.subalgebra()?;
    let nred = v.is_n_reductive();
    compare(&label, "n_reductive", x.n_reductive, nred, out);
    if !nred {
        return Ok(());
    }
    let ty = cr_type(&v)?;
    compare(&label, "nu", x.nu, ty.nu, out);
    compare(&label, "d", x.d, ty.d, out);
    out.push(Check::new(
        format!("{label}: nu + d = dim M_-"),
        ty.is_generic(),
        format!("{} + {} vs {}", ty.nu, ty.d, ty.dim_m_minus),
    ));
    let verdict = hnr_verdict(&v)?;
    compare(&label, "hnr", x.hnr, verdict.hnr, out);
    compare(&label, "strict_hnr", x.strict_hnr, verdict.strict_hnr, out);
    compare(&label, "w_dim", x.w_dim, verdict.w.dim(), out);
    if x.q_max_dim.is_some() || x.q_max_nilradical_dim.is_some() {
        let q = q_max(&v, &q_min(&v)?)?;
        compare(&label, "q_max_dim", x.q_max_dim, q.dim(), out);
        compare(&label, "q_max_nilradical_dim", x.q_max_nilradical_dim, q.nr().dim(), out);
    }
    if x.f0_dim.is_some() {
        let w = &verdict.w;
        let q = q_max(w, &q_min(w)?)?;
        let fd = fiber_data(&v, w, &q)?;
        compare(&label, "f0_dim", x.f0_dim, fd.f0.dim(), out);
    }
    match e.name.as_str() {
        "su22_f12" => {
            let n = 4;
            let mut d = ExactMatrix::zeros(n);
            for (i, s) in [1, -1, 1, -1].into_iter().enumerate() {
                d.set(i, i, Qi::from_int(s));
            }
            let up = ExactMatrix::unit(n, 0, 1).add(&ExactMatrix::unit(n, 2, 3));
            let down = ExactMatrix::unit(n, 1, 0).add(&ExactMatrix::unit(n, 3, 2));
            let sl2 = Subspace::from_owned(n, [d, up, down]);
            out.push(Check::new(
                format!("{label}: w is the diagonal sl2"),
                *verdict.w.space() == sl2,
                format!("dim w = {}", verdict.w.dim()),
            ));
        }
        "su23_f13" => {
            let nz = normalizer(v.ambient(), v.nr());
            let q = q_max(&v, &q_min(&v)?)?;
            out.push(Check::new(
                format!("{label}: normalizer of nr(v) is parabolic and equals q_max"),
                is_parabolic(&nz) && nz.space() == q.space(),
                format!("dim normalizer = {}, dim q_max = {}", nz.dim(), q.dim()),
            ));
        }
        _ => {}
    }
    Ok(())
}

/// Catalog expectations other than Witt indices.
pub fn structural_checks(entries: &[CatalogEntry]) -> Vec<Check> {
    let mut out = Vec::new();
    for e in entries {
        if let Err(err) = structural_entry(e, &mut out) {
            out.push(Check::new(format!("{}: analysis", e.label()), false, format!("error: {err}")));
        }
    }
    out
}

/// Sampled Witt indices against the expected ones.
pub fn witt_checks(entries: &[CatalogEntry], grid: usize, seed: u64) -> Vec<Check> {
    let mut out = Vec::new();
    for e in entries {
        let Some(want) = e.expected.witt_index else { continue };
        let r = e.subalgebra().and_then(|v| levi_report(&v, grid, seed));
        out.push(Check::from_result(
            format!("{}: witt_lower_bound", e.label()),
            r.map(|r| (r.witt_lower_bound == want, format!("expected {want}, sampled {}", r.witt_lower_bound))),
        ));
    }
    out
}

/// Regularization reaches a parabolic within `dim k` steps on every
/// n-reductive entry, and the strictly upper triangular `sl3` goes to the Borel.
pub fn regularization_checks(entries: &[CatalogEntry]) -> Vec<Check> {
    let mut out = Vec::new();
    for e in entries {
        let r = e.subalgebra().and_then(|v| {
            if !v.is_n_reductive() {
                return Ok((true, "not n-reductive, skipped".to_string()));
            }
            let reg = parabolic_regularization(&v)?;
            let k = v.ambient().dim();
            Ok((reg.steps() <= k && is_parabolic(&reg.e), format!("{} steps, dim k = {k}", reg.steps())))
        });
        out.push(Check::from_result(format!("{}: regularization", e.label()), r));
    }
    let k = Arc::new(AmbientAlgebra::sl(3));
    let strict = [(0, 1), (0, 2), (1, 2)].map(|(i, j)| ExactMatrix::unit(3, i, j));
    let r = make_subalgebra(&k, &strict, Closure::RequireClosed).and_then(|v| {
        let reg = parabolic_regularization(&v)?;
        let mut borel: Vec<ExactMatrix> = strict.to_vec();
        borel.push(ExactMatrix::from_ints(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]]));
        borel.push(ExactMatrix::from_ints(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, -1]]));
        let b = Subspace::from_owned(3, borel);
        Ok((*reg.e.space() == b, format!("dim e = {}", reg.e.dim())))
    });
    out.push(Check::from_result("strictly upper sl3: e is the Borel", r));
    out
}

fn gaussian_matrix(rng: &mut ChaCha8Rng, n: usize) -> CMat {
    CMat::from_fn(n, n, |_, _| c(rng.sample(StandardNormal), rng.sample(StandardNormal)))
}

fn random_traceless_hermitian(rng: &mut ChaCha8Rng, n: usize, scale: f64) -> CMat {
    let a = gaussian_matrix(rng, n);
    let h = (&a + a.adjoint()) * real(0.5 * scale);
    let tr = h.trace() / real(n as f64);
    h - CMat::identity(n, n) * tr
}

/// A Hermitian matrix commuting with `h`: a real traceless diagonal in its eigenbasis.
fn random_commuting(rng: &mut ChaCha8Rng, h: &CMat, scale: f64) -> CMat {
    let (_, u) = hermitian_eig(h);
    let n = h.nrows();
    let mut d: Vec<f64> = (0..n).map(|_| scale * rng.sample::<f64, _>(StandardNormal)).collect();
    let mean = d.iter().sum::<f64>() / n as f64;
    d.iter_mut().for_each(|x| *x -= mean);
    let dm = CMat::from_diagonal(&nalgebra::DVector::from_iterator(n, d.into_iter().map(real)));
    &u * dm * u.adjoint()
}

fn worst(name: &str, errors: impl IntoIterator<Item = Result<f64>>, tol: f64) -> Check {
    let mut max = 0.0f64;
    let mut count = 0;
    for e in errors {
        match e {
            Ok(x) if x.is_finite() => max = max.max(x),
            Ok(x) => return Check::new(name, false, format!("non-finite error {x}")),
            Err(err) => return Check::new(name, false, format!("error: {err}")),
        }
        count += 1;
    }
    Check::new(name, max < tol, format!("max error {max:.3e} over {count} cases, tolerance {tol:e}"))
}

/// Taylor identity, closed form against direct norms, orthogonality and the
/// differential of `exp` on seeded random data with `n <= 4`.
pub fn jacobi_checks(seed: u64, tol: &Tolerances, counts: &Counts) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut specs = Vec::new();
    for i in 0..counts.jacobi_specs {
        let n = 2 + i % 3;
        let h = random_traceless_hermitian(&mut rng, n, 1.0);
        let z = gaussian_matrix(&mut rng, n) * real(0.5);
        let t = random_commuting(&mut rng, &h, 0.5);
        specs.push((h, z, t));
    }
    let fields: Vec<Result<JacobiField>> =
        specs.iter().map(|(h, z, t)| JacobiField::new(h.clone(), z.clone(), t.clone())).collect();
    let taylor = worst(
        "Taylor identity, relative",
        fields.iter().map(|f| {
            let f = f.as_ref().map_err(Clone::clone)?;
            Ok(f.taylor_residual()?.abs() / f.norm_sq_direct(1.0).max(1.0))
        }),
        tol.taylor_rel,
    );
    let closed = worst(
        "closed-form against direct |J(t)|^2, relative",
        fields.iter().flat_map(|f| {
            [0.0, 0.25, 0.5, 1.0, 1.5].map(|t| {
                let f = f.as_ref().map_err(Clone::clone)?;
                let (a, b) = (f.norm_sq_closed(t), f.norm_sq_direct(t));
                Ok((a - b).abs() / a.abs().max(b.abs()).max(1e-300))
            })
        }),
        tol.closed_form_rel,
    );
    // Block upper triangular parabolic of sl_n with blocks (1, n - 1).
    let orth = worst(
        "Jacobi orthogonality on a sigma-split parabolic",
        (0..counts.jacobi_specs / 5).flat_map(|i| {
            let n = 3 + i % 2;
            let block = |k: usize| if k == 0 { 0 } else { 1 };
            let mask = |m: CMat, keep: &dyn Fn(usize, usize) -> bool| {
                CMat::from_fn(n, n, |r, s| if keep(r, s) { m[(r, s)] } else { c(0.0, 0.0) })
            };
            let h = mask(random_traceless_hermitian(&mut rng, n, 1.0), &|r, s| block(r) == block(s));
            let z0 = mask(gaussian_matrix(&mut rng, n), &|r, s| block(r) == block(s));
            let zn = mask(gaussian_matrix(&mut rng, n), &|r, s| block(r) < block(s));
            let t = random_commuting(&mut rng, &h, 0.5);
            let ts: Vec<f64> = (0..20).map(|k| -1.0 + 0.15 * k as f64).collect();
            ts.into_iter()
                .map(|s| {
                    let f0 = JacobiField::new(h.clone(), z0.clone(), t.clone())?;
                    let fnil = JacobiField::new(h.clone(), zn.clone(), CMat::zeros(n, n))?;
                    let a = f0.theta(&z0, s) + f0.theta(&t, s) * real(s);
                    let b = fnil.theta(&zn, s);
                    Ok(f0.metric_at(s, &a, &b).abs())
                })
                .collect::<Vec<_>>()
        }),
        tol.orthogonality,
    );
    let dexp = worst(
        "differential of exp",
        (0..counts.jacobi_specs / 5).map(|i| {
            let n = 2 + i % 3;
            let h = random_traceless_hermitian(&mut rng, n, 1.0);
            let x = random_traceless_hermitian(&mut rng, n, 1.0);
            let eps = 1e-5;
            let fd = (expm_hermitian(&(&h + &x * real(eps))) - expm_hermitian(&(&h - &x * real(eps)))) / real(2.0 * eps);
            Ok(frob_norm(&(fd - exp_differential(&h, &x))))
        }),
        tol.exp_differential,
    );
    vec![taylor, closed, orth, dexp]
}

/// The leading-minor inequality on seeded positive matrices of determinant one.
pub fn minor_checks(seed: u64, tol: &Tolerances, counts: &Counts) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hand = CMat::from_row_slice(2, 2, &[c(2.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]);
    let hand_check = Check::from_result(
        "hand case [[2,1],[1,1]]",
        minor_log_inequality(&hand).map(|r| {
            let pass = (r.lhs - 1.8524).abs() < tol.minor_hand && (r.rhs - 0.9609).abs() < tol.minor_hand && r.strict;
            (pass, format!("lhs {:.4}, rhs {:.4}", r.lhs, r.rhs))
        }),
    );
    let mut failures = Vec::new();
    let (mut diagonal, mut strict) = (0, 0);
    for i in 0..counts.minor_samples {
        let n = 2 + i % 4;
        let x = random_traceless_hermitian(&mut rng, n, 0.7);
        let h = if i % 10 == 0 {
            let d: Vec<f64> = (0..n).map(|k| x[(k, k)].re).collect();
            CMat::from_diagonal(&nalgebra::DVector::from_iterator(n, d.iter().map(|v| real(v.exp()))))
        } else {
            expm_hermitian(&x)
        };
        match minor_log_inequality(&h) {
            Ok(r) => {
                let is_diag = r.off_diagonal == 0.0;
                let ok = if is_diag {
                    diagonal += 1;
                    (r.lhs - r.rhs).abs() < 1e-10 * r.lhs.max(1.0) && !r.strict
                } else {
                    strict += 1;
                    r.lhs >= r.rhs - 1e-12 && (r.off_diagonal <= 1e-6 || r.strict)
                };
                if !ok {
                    failures.push(format!("sample {i}: lhs {} rhs {} off {}", r.lhs, r.rhs, r.off_diagonal));
                }
            }
            Err(e) => failures.push(format!("sample {i}: {e}")),
        }
    }
    let random_check = Check::new(
        "minor inequality on random samples",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{diagonal} diagonal with equality, {strict} strict")
        } else {
            failures.join("; ")
        },
    );
    vec![hand_check, random_check]
}

/// The non-uniqueness example: a Jacobi field vanishing at `t = 1`.
pub fn counterexample_checks(tol: &Tolerances) -> Vec<Check> {
    let opts = CounterexampleOptions { residual_tol: tol.theta_at_one / 10.0, ..Default::default() };
    let r = counterexample_search(&opts).map(|ce| {
        let r = &ce.residuals;
        let pass = r.theta_at_one < tol.theta_at_one
            && r.theta_at_zero > tol.theta_at_zero_min
            && r.trace_orthogonality < 1e-8 * (1.0 + ce.a.abs() * ce.lambda2.abs())
            && r.z_cubed < 1e-12 * ce.a.abs().powi(3)
            && ce.a * ce.b > 0.0;
        (
            pass,
            format!(
                "lambda2 = {:.10}, |theta(1)| = {:.2e}, |theta(0)| = {:.3}, |tr([H,Y]Z)| = {:.2e}, |Z^3| = {:.2e}",
                ce.lambda2, r.theta_at_one, r.theta_at_zero, r.trace_orthogonality, r.z_cubed
            ),
        )
    });
    vec![Check::from_result("vanishing Jacobi field with nilpotent Z", r)]
}

/// The entries with horocyclic `nr(w)` used by the numerical suites.
pub fn hnr_entries() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = ["su22_f12", "su23_f12", "upper_triangular_horocycle"]
        .iter()
        .map(|n| catalog::load(n, None).expect("catalog entry loads"))
        .collect();
    for (p, q, n, k) in [(1, 2, 3, 1), (1, 2, 2, 1)] {
        out.push(catalog::load("grassmann_pair", Some(GrassmannParams::new(p, q, n, k).unwrap())).unwrap());
    }
    out
}

fn structures() -> Result<Vec<(String, MostowStructure)>> {
    hnr_entries().into_iter().map(|e| Ok((e.label(), MostowStructure::from_subalgebra(&e.subalgebra()?)?))).collect()
}

/// Forward round trips and random decompositions on HNR entries.
pub fn mostow_checks(seed: u64, tol: &Tolerances, counts: &Counts) -> Vec<Check> {
    let structs = match structures() {
        Ok(s) => s,
        Err(e) => return vec![Check::new("Mostow structures", false, format!("error: {e}"))],
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let opts = MostowOptions { seed, ..Default::default() };
    let round = worst(
        "round trip |X| = |X0|",
        (0..counts.mostow_trials).map(|i| {
            let (_, s) = &structs[i % structs.len()];
            let u = s.random_k0(&mut rng, 1.0);
            let x0 = s.random_f0(&mut rng, 0.5);
            let v = s.random_v_prime(&mut rng, 0.5);
            let zeta = u * expm_hermitian(&x0) * v;
            let m = mostow_decompose(s, &zeta, &opts)?;
            Ok((m.x_norm - frob_norm(&x0)).abs())
        }),
        tol.x_norm,
    );
    let random = worst(
        "random zeta: residual with restart agreement",
        (0..counts.mostow_trials / 5).map(|i| {
            let (_, s) = &structs[i % structs.len()];
            let zeta = s.random_k(&mut rng, 0.5);
            let m = mostow_decompose(s, &zeta, &opts)?;
            Ok(if m.restarts_agree { m.residual } else { f64::INFINITY })
        }),
        tol.residual,
    );
    vec![round, random]
}

/// Zeros on `K0 V`, `K0`-invariance and the tangency bound of `phi`.
pub fn exhaustion_checks(seed: u64, tol: &Tolerances, counts: &Counts) -> Vec<Check> {
    let structs = match structures() {
        Ok(s) => s,
        Err(e) => return vec![Check::new("Mostow structures", false, format!("error: {e}"))],
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let opts = PhiOptions { restarts: 2, seed, method: PhiMethod::Direct, cross_check: false };
    let m = counts.exhaustion_samples;
    let zero = worst(
        "phi vanishes on K0 V",
        (0..m / 5).map(|i| {
            let (_, s) = &structs[i % structs.len()];
            let zeta = s.random_k0(&mut rng, 1.0) * s.random_v_prime(&mut rng, 0.5);
            Ok(exhaustion_phi(s, &zeta, &opts)?.phi.abs())
        }),
        tol.phi_zero,
    );
    let invariance = worst(
        "K0-invariance of phi, relative",
        (0..m / 5).map(|i| {
            let (_, s) = &structs[i % structs.len()];
            let zeta = s.random_k(&mut rng, 0.5);
            let u = s.random_k0(&mut rng, 1.0);
            let a = exhaustion_phi(s, &zeta, &opts)?.phi;
            let b = exhaustion_phi(s, &(u * &zeta), &opts)?.phi;
            Ok((a - b).abs() / a.abs().max(1e-12))
        }),
        tol.phi_invariance_rel,
    );
    let tangency = worst(
        "tangency bound phi(exp(X) u) <= |X|^2",
        (0..m).map(|i| {
            let (_, s) = &structs[i % structs.len()];
            let x = MostowStructure::real_combo(
                &s.p0,
                &(0..s.p0.len()).map(|_| 0.4 * rng.sample::<f64, _>(StandardNormal)).collect::<Vec<_>>(),
                s.n,
            );
            let u = s.random_k0(&mut rng, 1.0);
            let phi = exhaustion_phi(s, &(expm_hermitian(&x) * u), &opts)?.phi;
            if phi < -1e-10 {
                return Ok(f64::INFINITY);
            }
            Ok((phi - frob_norm(&x).powi(2)).max(0.0))
        }),
        tol.tangency,
    );
    vec![zero, invariance, tangency]
}

/// Finite-difference Levi form of `phi` on the Grassmannian pair `(1,2,3,1)`.
pub fn hessian_checks(seed: u64, tol: &Tolerances, counts: &Counts) -> Vec<Check> {
    let r = (|| -> Result<(bool, String)> {
        let e = catalog::load("grassmann_pair", Some(GrassmannParams::new(1, 2, 3, 1)?))?;
        let s = MostowStructure::from_subalgebra(&e.subalgebra()?)?;
        let mu = 1;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut details = Vec::new();
        let mut pass = true;
        for i in 0..counts.hessian_points {
            let zeta = expm_hermitian(&s.random_f0(&mut rng, 0.3)) * s.random_k0(&mut rng, 1.0);
            let probe_seed = seed.wrapping_add(i as u64);
            let tangent = phi_levi_probe(&s, &zeta, &s.v_n_bar, tol.fd_step, tol.gap, PhiMethod::Direct, probe_seed)?;
            let fiber = phi_levi_probe(&s, &zeta, &s.q_fiber, tol.fd_step, tol.gap, PhiMethod::Direct, probe_seed)?;
            let ok = tangent.phi > 0.0 && tangent.neg >= mu && fiber.pos >= 1;
            pass &= ok;
            details.push(format!("({}-,{}+)", tangent.neg, fiber.pos));
        }
        Ok((pass, format!("negative along tangents, positive along fiber: {}", details.join(" "))))
    })();
    vec![Check::from_result("Hessian probe signatures", r)]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Structural,
    Numeric,
    All,
}

/// Runs a suite; the structural part uses `entries`.
pub fn run_suite(suite: Suite, entries: &[CatalogEntry], seed: u64) -> Vec<Check> {
    let (tol, counts) = (Tolerances::default(), Counts::default());
    let mut out = Vec::new();
    if suite != Suite::Numeric {
        out.extend(structural_checks(entries));
        out.extend(witt_checks(entries, 64, seed));
        out.extend(regularization_checks(entries));
    }
    if suite != Suite::Structural {
        out.extend(jacobi_checks(seed, &tol, &counts));
        out.extend(minor_checks(seed, &tol, &counts));
        out.extend(counterexample_checks(&tol));
        out.extend(mostow_checks(seed, &tol, &counts));
        out.extend(exhaustion_checks(seed, &tol, &counts));
        out.extend(hessian_checks(seed, &tol, &counts));
    }
    out
}

/// TAP-style listing.
pub fn render_tap(checks: &[Check]) -> String {
    let mut s = format!("1..{}\n", checks.len());
    for (i, c) in checks.iter().enumerate() {
        let status = if c.pass { "ok" } else { "not ok" };
        s.push_str(&format!("{status} {} - {} # {}\n", i + 1, c.name, c.detail));
    }
    s
}
