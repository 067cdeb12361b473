//! CR invariants of `M0 = K0/V0`: type, fiber data, Levi forms, orbit data.

use crate::error::{CrError, Result};
use crate::exact::echelon::kernel;
use crate::exact::poly::{characteristic_polynomial, real_root_signs};
use crate::exact::{ExactMatrix, Qi, Rat, RealSubspace, Subspace};
use crate::lie::Subalgebra;
use crate::parabolic::check_p0;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// CR dimension `nu`, codimension `d` and the dimension of `M_- = K/V`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrType {
    pub nu: usize,
    pub d: usize,
    pub dim_m_minus: usize,
    pub dim_m0_real: usize,
}

impl CrType {
    /// `nu + d = dim_C M_-`.
    pub fn is_generic(&self) -> bool {
        self.nu + self.d == self.dim_m_minus
    }
}

pub fn cr_type(v: &Subalgebra) -> Result<CrType> {
    let k = v.ambient();
    let nu = v.nr().dim();
    let dim_m0_real = k.dim() - v.levi().dim();
    let d = dim_m0_real
        .checked_sub(2 * nu)
        .ok_or_else(|| CrError::InvalidInput("CR dimension exceeds half the real dimension".into()))?;
    Ok(CrType { nu, d, dim_m_minus: k.dim() - v.dim(), dim_m0_real })
}

/// Coordinates of `x` in the (independent) list `basis`, or `None`.
pub fn coords_in(basis: &[ExactMatrix], x: &ExactMatrix) -> Option<Vec<Qi>> {
    let mut images: Vec<Vec<Qi>> = basis.iter().map(|b| b.flat().to_vec()).collect();
    images.push(x.flat().to_vec());
    let ker = kernel(&images);
    let c = ker.into_iter().find(|c| !c.last().unwrap().is_zero())?;
    let last = c.last().unwrap().neg();
    Some(c[..basis.len()].iter().map(|a| a.div(&last)).collect())
}

/// Projection onto `onto` along `along`, for `x` in their direct sum.
pub fn project_along(x: &ExactMatrix, along: &[ExactMatrix], onto: &[ExactMatrix]) -> ExactMatrix {
    let mut basis = along.to_vec();
    basis.extend(onto.iter().cloned());
    let c = coords_in(&basis, x).expect("vector outside the direct sum");
    let mut out = ExactMatrix::zeros(x.n());
    for (ci, b) in c[along.len()..].iter().zip(onto) {
        out = out.add(&b.scale(ci));
    }
    out
}

/// Fiber data of the Mostow fibration for `q` in `P0(w)`.
#[derive(Clone, Debug)]
pub struct FiberData {
    /// `f0 = p0 ∩ (v + q_n)^⊥`, a real space of Hermitian matrices.
    pub f0: RealSubspace,
    /// `nr(v) + n(q)`.
    pub e_n: Subspace,
    /// An `Ad(V0)`-invariant complement of `nr(v)` in `e_n`.
    pub l: Subspace,
}

pub fn fiber_data(v: &Subalgebra, w: &Subalgebra, q: &Subalgebra) -> Result<FiberData> {
    check_p0(w, q)?;
    let k = v.ambient();
    let e = v.space().sum(q.nr());
    let c = e.sum(&e.sigma()).trace_orthogonal_in(k.space());
    let f0 = c.real_form(-1);
    let e_n = v.nr().sum(q.nr());
    let l = invariant_complement(&e_n, v.nr());
    let ok = l.intersection(v.nr()).is_zero()
        && l.dim() + v.nr().dim() == e_n.dim()
        && v.levi().bracket_space(&l).is_subspace_of(&l);
    if !ok {
        return Err(CrError::P0MembershipFailed("invariant complement construction failed".into()));
    }
    Ok(FiberData { f0, e_n, l })
}

/// Complement of the subalgebra `e` in the nilpotent algebra `n` built by
/// peeling off central ideals, with every choice made by Hermitian
/// orthogonal complements so that unitary symmetries of the pair are kept.
pub fn invariant_complement(n: &Subspace, e: &Subspace) -> Subspace {
    complement_rec(n, &Subspace::zero(n.n()), e.clone())
}

fn complement_rec(n: &Subspace, ideal: &Subspace, e_cur: Subspace) -> Subspace {
    let u = ideal.hermitian_complement_in(n);
    if e_cur.dim() == u.dim() {
        return Subspace::zero(n.n());
    }
    if u.dim() - e_cur.dim() == 1 {
        return e_cur.hermitian_complement_in(&u);
    }
    let center = u.bracket_preimage(n, ideal);
    let a = center.intersection(&e_cur);
    if !a.is_zero() {
        let next_e = a.hermitian_complement_in(&e_cur);
        return complement_rec(n, &ideal.sum(&a), next_e);
    }
    let u_next = center.hermitian_complement_in(&u);
    let (cb, ub) = (center.basis(), u_next.basis());
    let next_e = Subspace::from_owned(n.n(), e_cur.basis().iter().map(|x| project_along(x, &cb, &ub)));
    complement_rec(n, &ideal.sum(&center), next_e).sum(&center)
}

/// Inertia of a Hermitian form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl Signature {
    pub fn witt(&self) -> usize {
        self.pos.min(self.neg)
    }
}

/// Exact inertia of a Hermitian matrix over `Q(i)`.
pub fn exact_signature(h: &ExactMatrix) -> Signature {
    let (pos, neg, zero) = real_root_signs(&characteristic_polynomial(h));
    Signature { pos, neg, zero }
}

/// One sampled characteristic covector.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LeviSample {
    /// Coordinates of `xi` in the Hermitian basis of the characteristic space.
    pub xi: Vec<String>,
    pub signature: Signature,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LeviReport {
    /// Real dimension of the characteristic space.
    pub char_dim: usize,
    pub nu: usize,
    pub samples: Vec<LeviSample>,
    /// `min(pos, neg)` minimized over the samples.
    pub witt_lower_bound: usize,
    /// Every sampled scalar form vanishes.
    pub levi_flat: bool,
    /// Rank of the vector-valued Levi form, as a map on `nr(v) x nr(v)`.
    pub vector_form_rank: usize,
}

/// Data needed to evaluate scalar Levi forms quickly.
pub struct LeviForms {
    /// Hermitian basis `A_i` of the characteristic space.
    pub char_basis: Vec<ExactMatrix>,
    /// `forms[i][a][b] = -tr(A_i [e_a, e_b*])`.
    forms: Vec<ExactMatrix>,
    pub nu: usize,
    vector_form_rank: usize,
}

impl LeviForms {
    pub fn new(v: &Subalgebra) -> Result<Self> {
        let k = v.ambient();
        let vv = v.space().sum(&v.space().sigma());
        let c = vv.hermitian_complement_in(k.space());
        if c.is_zero() {
            return Err(CrError::EmptyCharacteristicSpace);
        }
        let char_basis = c.real_form(-1).basis();
        let nb = v.nr().basis();
        let nu = nb.len();
        let forms = char_basis
            .iter()
            .map(|a| ExactMatrix::from_fn(nu, |i, j| a.trace_form(&nb[i].bracket(&nb[j].adjoint())).neg()))
            .collect();
        let (wb, cb) = (vv.basis(), c.basis());
        let mut values = Subspace::zero(k.n());
        for x in &nb {
            for y in &nb {
                values.insert(&project_along(&x.bracket(&y.sigma()), &wb, &cb));
            }
        }
        Ok(LeviForms { char_basis, forms, nu, vector_form_rank: values.dim() })
    }

    pub fn scalar_form(&self, xi: &[Rat]) -> ExactMatrix {
        let mut h = ExactMatrix::zeros(self.nu);
        for (x, f) in xi.iter().zip(&self.forms) {
            if !x.is_zero() {
                h = h.add(&f.scale(&Qi::from_rat(x.clone())));
            }
        }
        h
    }

    pub fn signature(&self, xi: &[Rat]) -> Signature {
        exact_signature(&self.scalar_form(xi))
    }
}

fn halton(index: usize, base: usize) -> f64 {
    let (mut f, mut r, mut i) = (1.0, 0.0, index);
    while i > 0 {
        f /= base as f64;
        r += f * (i % base) as f64;
        i /= base;
    }
    r
}

const PRIMES: [usize; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// Samples scalar Levi forms over the characteristic space.
///
/// The sample set holds the coordinate axes, their pairwise sums and
/// differences, `grid` shifted Halton points, and a sparsifying descent from
/// the best sample. Signatures are exact for the rational covectors used.
pub fn levi_report(v: &Subalgebra, grid: usize, seed: u64) -> Result<LeviReport> {
    let forms = LeviForms::new(v)?;
    let d = forms.char_basis.len();
    let mut points: Vec<Vec<Rat>> = Vec::new();
    let unit = |i: usize, s: i64| {
        let mut x = vec![Rat::zero(); d];
        x[i] = Rat::from_int(s);
        x
    };
    for i in 0..d {
        points.push(unit(i, 1));
        points.push(unit(i, -1));
        for j in i + 1..d {
            for s in [1, -1] {
                let mut x = unit(i, 1);
                x[j] = Rat::from_int(s);
                points.push(x.clone());
                points.push(x.iter().map(Rat::neg).collect());
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shift: Vec<f64> = (0..d).map(|_| rng.gen::<f64>()).collect();
    for idx in 1..=grid {
        let x: Vec<Rat> = (0..d)
            .map(|i| {
                let h = (halton(idx, PRIMES[i % PRIMES.len()]) + shift[i]).fract();
                Rat::approx_f64(2.0 * h - 1.0, 64)
            })
            .collect();
        if x.iter().any(|c| !c.is_zero()) {
            points.push(x);
        }
    }
    let mut samples: Vec<LeviSample> = Vec::with_capacity(points.len());
    let mut best: Option<(usize, Vec<Rat>)> = None;
    for x in points {
        let s = forms.signature(&x);
        if best.as_ref().is_none_or(|(w, _)| s.witt() < *w) {
            best = Some((s.witt(), x.clone()));
        }
        samples.push(LeviSample { xi: x.iter().map(Rat::to_string).collect(), signature: s });
    }
    // Descent: zero out coordinates while the index does not grow.
    if let Some((mut w, mut x)) = best {
        let mut improved = true;
        while improved {
            improved = false;
            for i in 0..d {
                if x[i].is_zero() || x.iter().filter(|c| !c.is_zero()).count() == 1 {
                    continue;
                }
                let mut y = x.clone();
                y[i] = Rat::zero();
                let s = forms.signature(&y);
                if s.witt() < w {
                    w = s.witt();
                    x = y.clone();
                    improved = true;
                    samples.push(LeviSample { xi: y.iter().map(Rat::to_string).collect(), signature: s });
                }
            }
        }
    }
    let witt_lower_bound = samples.iter().map(|s| s.signature.witt()).min().unwrap_or(0);
    let levi_flat = samples.iter().all(|s| s.signature.pos == 0 && s.signature.neg == 0);
    Ok(LeviReport { char_dim: d, nu: forms.nu, samples, witt_lower_bound, levi_flat, vector_form_rank: forms.vector_form_rank })
}

/// The stabilizer data of the fiber point `exp(X)` with `X` in `f0`.
#[derive(Clone, Debug)]
pub struct OrbitData {
    /// `v_X = {Y in v ∩ k0 : [Y, X] = 0}`.
    pub v_x: RealSubspace,
    /// `dim_R M_X = dim_R k0 - dim_R v_X`.
    pub dim_m_x: usize,
    pub conjugated: Conjugated,
}

/// `Ad(exp X)(v)`: exact when `X = 0`, floating point otherwise.
#[derive(Clone, Debug)]
pub enum Conjugated {
    Exact(Subspace),
    Approx(Vec<nalgebra::DMatrix<num_complex::Complex64>>),
}

pub fn orbit_data(v: &Subalgebra, f0: &RealSubspace, x: &ExactMatrix) -> Result<OrbitData> {
    if !f0.contains(x) {
        return Err(CrError::NotInF0(format!("{x}")));
    }
    let k = v.ambient();
    let vk0 = v.levi().real_form(1);
    let v_x = vk0.kernel_of(|y| y.bracket(x).to_real_coords());
    let dim_m_x = k.dim() - v_x.dim();
    let conjugated = if x.is_zero() {
        Conjugated::Exact(v.space().clone())
    } else {
        let g = crate::numerics::linalg::expm_hermitian(&x.to_c64());
        let gi = crate::numerics::linalg::expm_hermitian(&(-x.to_c64()));
        Conjugated::Approx(v.basis().iter().map(|b| &g * b.to_c64() * &gi).collect())
    };
    Ok(OrbitData { v_x, dim_m_x, conjugated })
}

/// Degree ranges where finiteness holds for an `r`-pseudoconcave structure:
/// `low = {j : 0 <= j < r - hd}` and `high = {j : nu - r < j <= nu}`.
pub fn cohomology_ranges(r: usize, nu: usize, hd: usize) -> (Vec<usize>, Vec<usize>) {
    let low = (0..r.saturating_sub(hd)).collect();
    let start = if r > nu { 0 } else { nu - r + 1 };
    let high = (start..=nu).collect();
    (low, high)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cohomology_examples() {
        assert_eq!(cohomology_ranges(1, 3, 0), (vec![0], vec![3]));
        assert_eq!(cohomology_ranges(0, 1, 0), (vec![], vec![]));
        assert_eq!(cohomology_ranges(2, 5, 1), (vec![0], vec![4, 5]));
    }

    #[test]
    fn signature_counts() {
        let h = ExactMatrix::from_ints(&[&[2, 1], &[1, -3]]);
        assert_eq!(exact_signature(&h), Signature { pos: 1, neg: 1, zero: 0 });
        let z = ExactMatrix::zeros(3);
        assert_eq!(exact_signature(&z), Signature { pos: 0, neg: 0, zero: 3 });
    }
}
