//! Complex and real subspaces of `n x n` matrices.

use super::echelon::{combine, kernel, Echelon};
use super::matrix::ExactMatrix;
use super::qi::Qi;
use super::rat::Rat;

/// A complex-linear subspace of `gl_n(C)` in canonical echelon form
/// (row-major flattening, pivot on the first nonzero coordinate).
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    n: usize,
    ech: Echelon<Qi>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { n, ech: Echelon::new(n * n) }
    }

    pub fn from_matrices<'a, I: IntoIterator<Item = &'a ExactMatrix>>(n: usize, ms: I) -> Self {
        let mut s = Self::zero(n);
        for m in ms {
            s.insert(m);
        }
        s
    }

    pub fn from_owned<I: IntoIterator<Item = ExactMatrix>>(n: usize, ms: I) -> Self {
        let mut s = Self::zero(n);
        for m in ms {
            assert_eq!(m.n(), n, "matrix size mismatch");
            s.ech.insert(m.into_flat());
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.ech.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.ech.is_empty()
    }

    pub fn echelon(&self) -> &Echelon<Qi> {
        &self.ech
    }

    pub fn insert(&mut self, m: &ExactMatrix) -> bool {
        assert_eq!(m.n(), self.n, "matrix size mismatch");
        self.ech.insert(m.flat().to_vec())
    }

    /// The canonical basis.
    pub fn basis(&self) -> Vec<ExactMatrix> {
        self.ech.rows().iter().map(|r| ExactMatrix::from_flat(self.n, r.clone())).collect()
    }

    pub fn contains(&self, m: &ExactMatrix) -> bool {
        self.ech.contains(m.flat())
    }

    /// Remainder of `m` after clearing the pivot coordinates; zero iff `m` lies in the space.
    pub fn reduce(&self, m: &ExactMatrix) -> Vec<Qi> {
        self.ech.reduce(m.flat())
    }

    pub fn coordinates(&self, m: &ExactMatrix) -> Option<Vec<Qi>> {
        self.ech.coordinates(m.flat())
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        Subspace { n: self.n, ech: self.ech.sum(&o.ech) }
    }

    pub fn intersection(&self, o: &Subspace) -> Subspace {
        Subspace { n: self.n, ech: self.ech.intersection(&o.ech) }
    }

    pub fn is_subspace_of(&self, o: &Subspace) -> bool {
        self.ech.is_subspace_of(&o.ech)
    }

    /// Image under `sigma(X) = -X*`, the conjugate space.
    pub fn sigma(&self) -> Subspace {
        Subspace::from_owned(self.n, self.basis().iter().map(ExactMatrix::sigma))
    }

    /// Span of `[a, b]` for `a` in `self`, `b` in `o`.
    pub fn bracket_space(&self, o: &Subspace) -> Subspace {
        let bo = o.basis();
        let mut out = Subspace::zero(self.n);
        for a in self.basis() {
            for b in &bo {
                out.insert(&a.bracket(b));
            }
        }
        out
    }

    /// Image of the subspace under a linear map.
    pub fn map(&self, f: impl Fn(&ExactMatrix) -> ExactMatrix) -> Subspace {
        Subspace::from_owned(self.n, self.basis().iter().map(f))
    }

    /// The subspace of `self` on which the linear map `f` vanishes.
    pub fn kernel_of(&self, f: impl Fn(&ExactMatrix) -> Vec<Qi>) -> Subspace {
        let basis = self.basis();
        let images: Vec<Vec<Qi>> = basis.iter().map(&f).collect();
        if images.iter().all(|v| v.iter().all(Qi::is_zero)) {
            return self.clone();
        }
        let flats: Vec<Vec<Qi>> = basis.into_iter().map(ExactMatrix::into_flat).collect();
        let ker = kernel(&images);
        Subspace {
            n: self.n,
            ech: Echelon::from_vectors(self.n * self.n, ker.iter().map(|c| combine(c, &flats, self.n * self.n))),
        }
    }

    /// `{X in self : [X, s] in target for all s in src}`, narrowed one generator at a time.
    pub fn bracket_preimage(&self, src: &Subspace, target: &Subspace) -> Subspace {
        let mut dom = self.clone();
        for s in src.basis() {
            if dom.is_zero() {
                break;
            }
            dom = dom.kernel_of(|x| target.reduce(&x.bracket(&s)));
        }
        dom
    }

    /// Hermitian orthogonal complement of `self` inside `within`, for `<X,Y> = tr(X Y*)`.
    pub fn hermitian_complement_in(&self, within: &Subspace) -> Subspace {
        let mine = self.basis();
        within.kernel_of(|x| mine.iter().map(|b| x.trace_form(&b.adjoint())).collect())
    }

    /// `{X in within : tr(X Y) = 0 for all Y in self}`.
    pub fn trace_orthogonal_in(&self, within: &Subspace) -> Subspace {
        let mine = self.basis();
        within.kernel_of(|x| mine.iter().map(|b| x.trace_form(b)).collect())
    }

    /// Real subspace of elements `X` with `sigma(X) = X` (sign = +1, compact part)
    /// or `sigma(X) = -X` (sign = -1, Hermitian part). Meaningful for sigma-stable spaces.
    pub fn real_form(&self, sign: i32) -> RealSubspace {
        let half = Qi::from_rat(Rat::new(1, 2));
        let mut out = RealSubspace::zero(self.n);
        for b in self.basis() {
            for c in [b.clone(), b.scale(&Qi::i())] {
                let s = c.sigma();
                let p = if sign > 0 { c.add(&s) } else { c.sub(&s) };
                out.insert(&p.scale(&half));
            }
        }
        out
    }
}

/// A real-linear subspace of `gl_n(C)`, held via the doubled coordinates `[re, im]`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealSubspace {
    n: usize,
    ech: Echelon<Rat>,
}

impl RealSubspace {
    pub fn zero(n: usize) -> Self {
        RealSubspace { n, ech: Echelon::new(2 * n * n) }
    }

    pub fn from_matrices<'a, I: IntoIterator<Item = &'a ExactMatrix>>(n: usize, ms: I) -> Self {
        let mut s = Self::zero(n);
        for m in ms {
            s.insert(m);
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.ech.dim()
    }

    pub fn insert(&mut self, m: &ExactMatrix) -> bool {
        self.ech.insert(m.to_real_coords())
    }

    pub fn basis(&self) -> Vec<ExactMatrix> {
        self.ech.rows().iter().map(|r| ExactMatrix::from_real_coords(self.n, r)).collect()
    }

    pub fn contains(&self, m: &ExactMatrix) -> bool {
        self.ech.contains(&m.to_real_coords())
    }

    pub fn sum(&self, o: &RealSubspace) -> RealSubspace {
        RealSubspace { n: self.n, ech: self.ech.sum(&o.ech) }
    }

    pub fn intersection(&self, o: &RealSubspace) -> RealSubspace {
        RealSubspace { n: self.n, ech: self.ech.intersection(&o.ech) }
    }

    /// The real span of a complex subspace.
    pub fn from_complex(s: &Subspace) -> RealSubspace {
        let mut out = RealSubspace::zero(s.n());
        for b in s.basis() {
            out.insert(&b);
            out.insert(&b.scale(&Qi::i()));
        }
        out
    }

    /// The real subspace of `self` on which the real-linear map `f` vanishes.
    pub fn kernel_of(&self, f: impl Fn(&ExactMatrix) -> Vec<Rat>) -> RealSubspace {
        let basis = self.basis();
        let images: Vec<Vec<Rat>> = basis.iter().map(&f).collect();
        let len = 2 * self.n * self.n;
        let coords: Vec<Vec<Rat>> = self.ech.rows().to_vec();
        let ker = kernel(&images);
        RealSubspace { n: self.n, ech: Echelon::from_vectors(len, ker.iter().map(|c| combine(c, &coords, len))) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_image_of_upper_triangular_is_lower() {
        let up = Subspace::from_owned(2, vec![ExactMatrix::unit(2, 0, 1)]);
        let low = up.sigma();
        assert!(low.contains(&ExactMatrix::unit(2, 1, 0)));
        assert_eq!(up.intersection(&low).dim(), 0);
    }

    #[test]
    fn real_forms_split_a_sigma_stable_space() {
        let all = Subspace::from_owned(2, (0..2).flat_map(|i| (0..2).map(move |j| ExactMatrix::unit(2, i, j))));
        assert_eq!(all.real_form(1).dim(), 4);
        assert_eq!(all.real_form(-1).dim(), 4);
        for h in all.real_form(-1).basis() {
            assert!(h.is_hermitian());
        }
    }
}
