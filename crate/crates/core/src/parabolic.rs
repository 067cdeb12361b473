//! Parabolic subalgebras: recognition, regularization, extremal elements of
//! `P0(v)`, the largest subalgebra `w` of `v + sigma(v)` and the HNR verdicts.

use crate::error::{CrError, Result};
use crate::exact::echelon::{combine, kernel};
use crate::exact::{Echelon, ExactMatrix, Qi, Subspace};
use crate::lie::{is_nilpotent_space, make_subalgebra, normalizer, AmbientAlgebra, Closure, Subalgebra};
use std::sync::Arc;

type VecSpace = Echelon<Qi>;

fn coordinate_space(n: usize, idx: &[usize]) -> VecSpace {
    Echelon::from_vectors(
        n,
        idx.iter().map(|&i| {
            let mut v = vec![Qi::zero(); n];
            v[i] = Qi::one();
            v
        }),
    )
}

/// `{x in dom : f(x) = 0}` for a linear map on column vectors.
fn vec_kernel(dom: &VecSpace, f: impl Fn(&[Qi]) -> Vec<Qi>) -> VecSpace {
    let rows = dom.rows().to_vec();
    let images: Vec<Vec<Qi>> = rows.iter().map(|r| f(r)).collect();
    let ker = kernel(&images);
    Echelon::from_vectors(dom.len(), ker.iter().map(|c| combine(c, &rows, dom.len())))
}

/// Stabilizer in `k` of a family of subspaces of `C^n`.
pub fn stabilizer(ambient: &AmbientAlgebra, subspaces: &[VecSpace]) -> Subspace {
    let mut dom = ambient.space().clone();
    for u in subspaces {
        for b in u.rows() {
            if dom.is_zero() {
                return dom;
            }
            let b = b.clone();
            dom = dom.kernel_of(|x| u.reduce(&x.mul_vec(&b)));
        }
    }
    dom
}

/// A flag adapted to the block decomposition: one strictly increasing chain of
/// nonzero subspaces per block, each ending with the whole block.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockFlag {
    pub chains: Vec<Vec<VecSpace>>,
}

impl BlockFlag {
    pub fn subspaces(&self) -> Vec<VecSpace> {
        self.chains.iter().flatten().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.chains.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Kernel filtration of `nr(q)` on `C^n`, split along the blocks.
/// Returns `None` when the filtration is not block adapted.
pub fn kernel_flag(q: &Subalgebra) -> Option<BlockFlag> {
    let ambient = q.ambient();
    let n = ambient.n();
    let nil = q.nr().basis();
    let full: VecSpace = Echelon::full(n);
    let mut levels: Vec<VecSpace> = Vec::new();
    let mut prev: VecSpace = Echelon::new(n);
    loop {
        let p = prev.clone();
        let next = vec_kernel(&full, |x| nil.iter().flat_map(|m| p.reduce(&m.mul_vec(x))).collect());
        if next.dim() == prev.dim() {
            break;
        }
        levels.push(next.clone());
        prev = next;
        if prev.dim() == n {
            break;
        }
    }
    if prev.dim() != n {
        return None;
    }
    let blocks: Vec<VecSpace> =
        (0..ambient.block_count()).map(|b| coordinate_space(n, &ambient.block_indices(b))).collect();
    let mut chains: Vec<Vec<VecSpace>> = vec![Vec::new(); blocks.len()];
    for lvl in &levels {
        let parts: Vec<VecSpace> = blocks.iter().map(|b| lvl.intersection(b)).collect();
        if parts.iter().map(Echelon::dim).sum::<usize>() != lvl.dim() {
            return None;
        }
        for (chain, part) in chains.iter_mut().zip(parts) {
            if part.dim() > 0 && chain.last().is_none_or(|l| l.dim() < part.dim()) {
                chain.push(part);
            }
        }
    }
    Some(BlockFlag { chains })
}

/// True iff `q` is the stabilizer in `k` of a block-adapted flag.
pub fn is_parabolic(q: &Subalgebra) -> bool {
    parabolic_flag(q).is_some()
}

/// The flag whose stabilizer is `q`, if `q` is parabolic.
pub fn parabolic_flag(q: &Subalgebra) -> Option<BlockFlag> {
    let ambient = q.ambient();
    if !ambient.center().is_subspace_of(q.space()) {
        return None;
    }
    let flag = kernel_flag(q)?;
    let stab = stabilizer(ambient, &flag.subspaces());
    (stab == *q.space()).then_some(flag)
}

/// Checks membership of `q` in `P0(v)`.
pub fn check_p0(v: &Subalgebra, q: &Subalgebra) -> Result<()> {
    if !v.space().is_subspace_of(q.space()) {
        return Err(CrError::P0MembershipFailed("v is not contained in q".into()));
    }
    if !is_parabolic(q) {
        return Err(CrError::P0MembershipFailed("q is not parabolic".into()));
    }
    if !v.nr().is_subspace_of(q.nr()) {
        return Err(CrError::P0MembershipFailed("nr(v) is not contained in n(q)".into()));
    }
    let (l, nq) = (q.levi(), q.nr());
    if l.dim() + nq.dim() != q.dim() || !l.intersection(nq).is_zero() {
        return Err(CrError::P0MembershipFailed("q is not sigma-split".into()));
    }
    Ok(())
}

/// Result of the regularization `v_{h+1} = N_k(nr(v_h))`.
#[derive(Clone, Debug)]
pub struct Regularization {
    pub chain: Vec<Subalgebra>,
    pub e: Subalgebra,
}

impl Regularization {
    /// Number of normalizer steps taken before the fixed point.
    pub fn steps(&self) -> usize {
        self.chain.len() - 1
    }
}

pub fn parabolic_regularization(v: &Subalgebra) -> Result<Regularization> {
    v.check_splittable()?;
    let ambient = v.ambient();
    let mut chain = vec![v.clone()];
    for _ in 0..=ambient.dim() {
        let cur = chain.last().unwrap();
        let next = normalizer(ambient, cur.nr());
        if next.space() == cur.space() {
            if !is_parabolic(cur) {
                return Err(CrError::P0MembershipFailed("regularization fixed point is not parabolic".into()));
            }
            let e = cur.clone();
            return Ok(Regularization { chain, e });
        }
        chain.push(next);
    }
    Err(CrError::P0MembershipFailed("regularization did not stabilize within dim k steps".into()))
}

/// The minimal element `(e ∩ sigma(e)) + n(e)` of `P0(v)`.
pub fn q_min(v: &Subalgebra) -> Result<Subalgebra> {
    let e = parabolic_regularization(v)?.e;
    let space = e.levi().sum(e.nr());
    let q = Subalgebra::from_closed(v.ambient().clone(), space);
    check_p0(v, &q)?;
    Ok(q)
}

/// Ascends from `start` to a maximal element of `P0(v)`.
///
/// Each step merges two adjacent steps of the flag of `q`, which adds the
/// root space of a simple negative weight of the center of `L(q)`. A step is
/// admissible when `nr(v)` stays inside the nilradical.
pub fn q_max(v: &Subalgebra, start: &Subalgebra) -> Result<Subalgebra> {
    check_p0(v, start)?;
    let ambient = v.ambient();
    let mut q = start.clone();
    let mut flag = parabolic_flag(&q).ok_or_else(|| CrError::P0MembershipFailed("start not parabolic".into()))?;
    'ascent: loop {
        for b in 0..flag.chains.len() {
            for i in 0..flag.chains[b].len().saturating_sub(1) {
                let mut cand = flag.clone();
                cand.chains[b].remove(i);
                let space = stabilizer(ambient, &cand.subspaces());
                let qc = Subalgebra::from_closed(ambient.clone(), space);
                if v.nr().is_subspace_of(qc.nr()) {
                    q = qc;
                    flag = cand;
                    continue 'ascent;
                }
            }
        }
        break;
    }
    check_p0(v, &q)?;
    let gen: Vec<ExactMatrix> = v.nr().sum(q.levi()).basis();
    let lie = make_subalgebra(ambient, &gen, Closure::CloseUp)?;
    if lie.space() != q.space() {
        return Err(CrError::WeightAscentStalled("q differs from Lie(nr(v) + L(q))".into()));
    }
    let module = ad_module(q.levi(), v.nr());
    let generated = make_subalgebra(ambient, &module.basis(), Closure::CloseUp)?;
    if generated.space() != q.nr() {
        return Err(CrError::WeightAscentStalled("n(q) is not generated by nr(v) under L(q)".into()));
    }
    Ok(q)
}

/// `n(q)` equals the `ad(L(q))`-module spanned by `nr(v)`, without brackets.
pub fn nilradical_is_module(v: &Subalgebra, q: &Subalgebra) -> bool {
    ad_module(q.levi(), v.nr()) == *q.nr()
}

/// `sum_h ad(a)^h (s)`.
pub fn ad_module(a: &Subspace, s: &Subspace) -> Subspace {
    let mut out = s.clone();
    let mut frontier = s.basis();
    let ab = a.basis();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for y in &ab {
                let c = y.bracket(x);
                if out.insert(&c) {
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    out
}

/// `q1 ∩ q2 + n(q1)`, which is parabolic for parabolic `q1`, `q2`.
pub fn combine_parabolics(q1: &Subalgebra, q2: &Subalgebra) -> Result<Subalgebra> {
    let space = q1.space().intersection(q2.space()).sum(q1.nr());
    let q = Subalgebra::from_closed(q1.ambient().clone(), space);
    if !is_parabolic(&q) {
        return Err(CrError::P0MembershipFailed("combination is not parabolic".into()));
    }
    Ok(q)
}

/// `s` is horocyclic iff `N_k(s)` is parabolic with nilradical `s`.
pub fn is_horocyclic(ambient: &Arc<AmbientAlgebra>, s: &Subspace) -> Result<bool> {
    if !is_nilpotent_space(s) {
        return Err(CrError::NotNilpotent("horocyclic test needs nilpotent matrices".into()));
    }
    let p = normalizer(ambient, s);
    Ok(is_parabolic(&p) && p.nr() == s)
}

/// The largest subalgebra `w` with `v ⊆ w ⊆ v + sigma(v)`.
///
/// Descends `W_0 = v + sigma(v)`, `W_{j+1} = {Z in W_j : [Z, v] ⊆ W_j}`. Every
/// subalgebra between `v` and `v + sigma(v)` stays inside each `W_j`, so a
/// bracket-closed limit is the maximum.
pub fn compute_w(v: &Subalgebra) -> Result<Subalgebra> {
    let mut w = v.space().sum(&v.space().sigma());
    loop {
        let next = w.bracket_preimage(v.space(), &w);
        if next.dim() == w.dim() {
            break;
        }
        w = next;
    }
    let alg = Subalgebra::from_closed(v.ambient().clone(), w);
    if !alg.is_closed() {
        return Err(CrError::MaximalityCertificateFailed("descending limit is not bracket-closed".into()));
    }
    Ok(alg)
}

/// Both readings of the horocyclic nilradical property.
#[derive(Clone, Debug)]
pub struct HnrVerdict {
    /// `nr(w)` is horocyclic.
    pub hnr: bool,
    /// `nr(v)` is horocyclic.
    pub strict_hnr: bool,
    pub w: Subalgebra,
    /// `N_k(nr(w))`, parabolic when `hnr` holds.
    pub witness: Subalgebra,
}

pub fn hnr_verdict(v: &Subalgebra) -> Result<HnrVerdict> {
    let w = compute_w(v)?;
    let ambient = v.ambient();
    let hnr = is_horocyclic(ambient, w.nr())?;
    let strict_hnr = is_horocyclic(ambient, v.nr())?;
    let witness = normalizer(ambient, w.nr());
    Ok(HnrVerdict { hnr, strict_hnr, w, witness })
}

/// `v + n(q)`, which keeps `L(v)` and is again n-reductive.
pub fn strengthen(v: &Subalgebra, q: &Subalgebra) -> Result<Subalgebra> {
    check_p0(v, q)?;
    let space = v.space().sum(q.nr());
    let t = Subalgebra::from_space(v.ambient().clone(), space)?;
    if !t.is_n_reductive() || t.levi() != v.levi() {
        return Err(CrError::P0MembershipFailed("strengthened algebra changed L(v)".into()));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Closure;

    fn upper(n: usize, strict: bool) -> (Arc<AmbientAlgebra>, Subalgebra) {
        let k = Arc::new(AmbientAlgebra::sl(n));
        let gens: Vec<ExactMatrix> = k
            .space()
            .basis()
            .into_iter()
            .filter(|x| (0..n).all(|i| (0..i + usize::from(strict)).all(|j| j >= n || x.get(i, j).is_zero())))
            .collect();
        let v = make_subalgebra(&k, &gens, Closure::RequireClosed).unwrap();
        (k, v)
    }

    #[test]
    fn borel_is_parabolic_cartan_is_not() {
        let (k, b) = upper(3, false);
        assert!(is_parabolic(&b));
        let cartan: Vec<ExactMatrix> = k.space().basis().into_iter().filter(|x| (0..3).all(|i| (0..3).all(|j| i == j || x.get(i, j).is_zero()))).collect();
        let h = make_subalgebra(&k, &cartan, Closure::RequireClosed).unwrap();
        assert!(!is_parabolic(&h));
        let whole = Subalgebra::from_closed(k.clone(), k.space().clone());
        assert!(is_parabolic(&whole));
    }

    #[test]
    fn strict_upper_regularizes_to_borel() {
        let (_, n) = upper(3, true);
        let (_, b) = upper(3, false);
        let r = parabolic_regularization(&n).unwrap();
        assert_eq!(r.e.space(), b.space());
        assert!(r.steps() <= 8);
    }

    #[test]
    fn nilradical_of_borel_is_horocyclic() {
        let (k, b) = upper(4, false);
        assert!(is_horocyclic(&k, b.nr()).unwrap());
        assert!(is_horocyclic(&k, &Subspace::zero(4)).unwrap());
        let e13 = Subspace::from_owned(4, vec![ExactMatrix::unit(4, 0, 2)]);
        assert!(!is_horocyclic(&k, &e13).unwrap());
    }
}
