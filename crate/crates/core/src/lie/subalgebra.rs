use super::ambient::AmbientAlgebra;
use crate::error::{CrError, Result};
use crate::exact::poly::{jordan_chevalley, minimal_polynomial};
use crate::exact::{ExactMatrix, Subspace};
use std::sync::{Arc, OnceLock};

/// How `make_subalgebra` treats a generating set that is not bracket-closed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closure {
    RequireClosed,
    CloseUp,
}

/// A complex Lie subalgebra `v` of the ambient `k`, with lazily cached
/// radical, nilpotent radical and conjugation-stable part.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    ambient: Arc<AmbientAlgebra>,
    space: Subspace,
    radical: OnceLock<Subspace>,
    nr: OnceLock<Subspace>,
    levi: OnceLock<Subspace>,
}

impl PartialEq for Subalgebra {
    fn eq(&self, o: &Self) -> bool {
        self.ambient == o.ambient && self.space == o.space
    }
}

/// Builds a subalgebra from generators, checking ambient membership and bracket closure.
pub fn make_subalgebra(ambient: &Arc<AmbientAlgebra>, gens: &[ExactMatrix], mode: Closure) -> Result<Subalgebra> {
    for g in gens {
        if g.n() != ambient.n() {
            return Err(CrError::IncompatibleShapes(format!("expected {0}x{0}, got {1}x{1}", ambient.n(), g.n())));
        }
        if !ambient.contains(g) {
            return Err(CrError::NotInAmbient(format!("{g}")));
        }
    }
    let mut space = Subspace::from_matrices(ambient.n(), gens);
    match mode {
        Closure::RequireClosed => {
            for (i, a) in gens.iter().enumerate() {
                for b in &gens[i + 1..] {
                    let c = a.bracket(b);
                    if !space.contains(&c) {
                        return Err(CrError::NotClosed { a: a.to_string(), b: b.to_string(), bracket: c.to_string() });
                    }
                }
            }
        }
        Closure::CloseUp => loop {
            let br = space.bracket_space(&space);
            let next = space.sum(&br);
            if next.dim() == space.dim() {
                break;
            }
            space = next;
        },
    }
    Ok(Subalgebra::from_closed(ambient.clone(), space))
}

impl Subalgebra {
    /// Wraps a subspace already known to be a subalgebra of `k`.
    pub fn from_closed(ambient: Arc<AmbientAlgebra>, space: Subspace) -> Self {
        Subalgebra { ambient, space, radical: OnceLock::new(), nr: OnceLock::new(), levi: OnceLock::new() }
    }

    /// Wraps a subspace after verifying it is a bracket-closed subset of `k`.
    pub fn from_space(ambient: Arc<AmbientAlgebra>, space: Subspace) -> Result<Self> {
        let basis = space.basis();
        make_subalgebra(&ambient, &basis, Closure::RequireClosed)
    }

    pub fn ambient(&self) -> &Arc<AmbientAlgebra> {
        &self.ambient
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> Vec<ExactMatrix> {
        self.space.basis()
    }

    pub fn is_closed(&self) -> bool {
        self.space.bracket_space(&self.space).is_subspace_of(&self.space)
    }

    /// `rad(v) = {X in v : tr(XY) = 0 for Y in [v, v]}`.
    pub fn radical(&self) -> &Subspace {
        self.radical.get_or_init(|| {
            let derived = self.space.bracket_space(&self.space);
            derived.trace_orthogonal_in(&self.space)
        })
    }

    /// `nr(v)`: the nilpotent matrices of the radical.
    ///
    /// `X` in the radical is nilpotent iff it is trace-orthogonal to the
    /// unital associative algebra generated by the radical.
    pub fn nr(&self) -> &Subspace {
        self.nr.get_or_init(|| {
            let rad = self.radical();
            let assoc = associative_closure(rad);
            assoc.trace_orthogonal_in(rad)
        })
    }

    /// `L(v) = v ∩ sigma(v)`.
    pub fn levi(&self) -> &Subspace {
        self.levi.get_or_init(|| self.space.intersection(&self.space.sigma()))
    }

    /// `v = nr(v) ⊕ L(v)`.
    pub fn is_n_reductive(&self) -> bool {
        let (nr, l) = (self.nr(), self.levi());
        nr.dim() + l.dim() == self.dim() && nr.intersection(l).is_zero()
    }

    /// Checks that the Jordan parts of each basis element stay in `v`.
    pub fn check_splittable(&self) -> Result<()> {
        for x in self.basis() {
            let (s, nil) = jordan_chevalley(&x);
            if !self.space.contains(&s) || !self.space.contains(&nil) {
                return Err(CrError::NotSplittable(format!("Jordan parts of {x} leave the algebra")));
            }
        }
        Ok(())
    }
}

/// Unital associative algebra generated by a set of matrices.
pub fn associative_closure(gens: &Subspace) -> Subspace {
    let n = gens.n();
    let g = gens.basis();
    let mut alg = Subspace::from_owned(n, vec![ExactMatrix::identity(n)]);
    let mut frontier = vec![ExactMatrix::identity(n)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for x in &g {
                let p = x.mul(f);
                if alg.insert(&p) {
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    alg
}

/// Semisimple / nilpotent classification of a single matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JordanFlags {
    pub semisimple: bool,
    pub nilpotent: bool,
}

pub fn jordan_flags(x: &ExactMatrix) -> JordanFlags {
    JordanFlags { semisimple: minimal_polynomial(x).is_squarefree(), nilpotent: x.is_nilpotent() }
}

/// `N_k(s) = {Z in k : [Z, s] ⊆ s}`.
pub fn normalizer(ambient: &Arc<AmbientAlgebra>, s: &Subspace) -> Subalgebra {
    let space = ambient.space().bracket_preimage(s, s);
    Subalgebra::from_closed(ambient.clone(), space)
}

/// True iff every basis element is a nilpotent matrix.
pub fn is_nilpotent_space(s: &Subspace) -> bool {
    s.basis().iter().all(ExactMatrix::is_nilpotent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Qi;

    fn borel(n: usize) -> (Arc<AmbientAlgebra>, Subalgebra) {
        let k = Arc::new(AmbientAlgebra::sl(n));
        let gens: Vec<ExactMatrix> = k.space().basis().into_iter().filter(|x| {
            (0..n).all(|i| (0..i).all(|j| x.get(i, j).is_zero()))
        }).collect();
        let b = make_subalgebra(&k, &gens, Closure::RequireClosed).unwrap();
        (k, b)
    }

    #[test]
    fn borel_radical_and_nilradical() {
        let (_, b) = borel(3);
        assert_eq!(b.dim(), 5);
        assert_eq!(b.radical().dim(), 5);
        assert_eq!(b.nr().dim(), 3);
        assert_eq!(b.levi().dim(), 2);
        assert!(b.is_n_reductive());
    }

    #[test]
    fn closure_failure_names_the_bracket() {
        let k = Arc::new(AmbientAlgebra::sl(2));
        let e = ExactMatrix::unit(2, 0, 1);
        let f = ExactMatrix::unit(2, 1, 0);
        match make_subalgebra(&k, &[e.clone(), f.clone()], Closure::RequireClosed) {
            Err(CrError::NotClosed { bracket, .. }) => assert_eq!(bracket, e.bracket(&f).to_string()),
            other => panic!("unexpected {other:?}"),
        }
        let sl2 = make_subalgebra(&k, &[e, f], Closure::CloseUp).unwrap();
        assert_eq!(sl2.dim(), 3);
        assert_eq!(sl2.radical().dim(), 0);
    }

    #[test]
    fn normalizer_of_strict_upper_is_borel() {
        let (k, b) = borel(3);
        let nb = normalizer(&k, b.nr());
        assert_eq!(nb.space(), b.space());
    }

    #[test]
    fn jordan_flags_classify() {
        let d = ExactMatrix::diag(&[Qi::one(), Qi::from_int(-1)]);
        assert_eq!(jordan_flags(&d), JordanFlags { semisimple: true, nilpotent: false });
        let e = ExactMatrix::unit(2, 0, 1);
        assert_eq!(jordan_flags(&e), JordanFlags { semisimple: false, nilpotent: true });
        let m = d.add(&e).add(&ExactMatrix::identity(2));
        assert_eq!(jordan_flags(&ExactMatrix::from_ints(&[&[1, 1], &[0, 1]])), JordanFlags { semisimple: false, nilpotent: false });
        assert!(jordan_flags(&m).semisimple);
    }
}
