//! Reduced row echelon forms and kernels over an exact field.

use super::qi::Field;

/// A subspace of `F^len` held in reduced row echelon form.
///
/// Pivots sit on the first nonzero coordinate of each row and are normalized
/// to one, so two `Echelon`s span the same space iff they are equal.
#[derive(Clone, Debug, PartialEq)]
pub struct Echelon<F: Field> {
    len: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(len: usize) -> Self {
        Echelon { len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(len: usize) -> Self {
        let mut e = Echelon::new(len);
        for i in 0..len {
            let mut v = vec![F::f_zero(); len];
            v[i] = F::f_one();
            e.rows.push(v);
            e.pivots.push(i);
        }
        e
    }

    pub fn from_vectors<I: IntoIterator<Item = Vec<F>>>(len: usize, vs: I) -> Self {
        let mut e = Echelon::new(len);
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the components along the pivots; the result vanishes at every pivot.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].f_is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (j, r) in row.iter().enumerate().skip(p) {
                if !r.f_is_zero() {
                    v[j] = v[j].f_sub(&c.f_mul(r));
                }
            }
        }
        v
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        let coords: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        if self.reduce(v).iter().all(|x| x.f_is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.f_is_zero())
    }

    /// Adds `v` to the span. Returns true if the dimension grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let mut r = self.reduce(&v);
        let Some(p) = r.iter().position(|x| !x.f_is_zero()) else {
            return false;
        };
        let lead = r[p].clone();
        if lead != F::f_one() {
            for x in r.iter_mut().skip(p) {
                if !x.f_is_zero() {
                    *x = x.f_div(&lead);
                }
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].f_is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (j, x) in r.iter().enumerate().skip(p) {
                if !x.f_is_zero() {
                    row[j] = row[j].f_sub(&c.f_mul(x));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        true
    }

    pub fn sum(&self, other: &Echelon<F>) -> Echelon<F> {
        let mut e = self.clone();
        for r in &other.rows {
            e.insert(r.clone());
        }
        e
    }

    pub fn intersection(&self, other: &Echelon<F>) -> Echelon<F> {
        let a = self.dim();
        let mut gens: Vec<Vec<F>> = self.rows.clone();
        gens.extend(other.rows.iter().cloned());
        let ker = kernel(&gens);
        Echelon::from_vectors(
            self.len,
            ker.into_iter().map(|c| combine(&c[..a], &self.rows, self.len)),
        )
    }

    pub fn is_subspace_of(&self, other: &Echelon<F>) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}

/// `sum_i c_i v_i`.
pub fn combine<F: Field>(coeffs: &[F], vs: &[Vec<F>], len: usize) -> Vec<F> {
    let mut out = vec![F::f_zero(); len];
    for (c, v) in coeffs.iter().zip(vs) {
        if c.f_is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.f_is_zero() {
                *o = o.f_add(&c.f_mul(x));
            }
        }
    }
    out
}

/// Basis of `{c : sum_i c_i images[i] = 0}`.
pub fn kernel<F: Field>(images: &[Vec<F>]) -> Vec<Vec<F>> {
    let m = images.len();
    if m == 0 {
        return Vec::new();
    }
    let len = images[0].len();
    // Augmented rows [image | e_i]; eliminate on the image part.
    let mut rows: Vec<(Vec<F>, Vec<F>)> = images
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut e = vec![F::f_zero(); m];
            e[i] = F::f_one();
            (v.clone(), e)
        })
        .collect();
    let mut pivot_rows: Vec<(usize, usize)> = Vec::new();
    let mut kernel_rows = Vec::new();
    for i in 0..m {
        for &(pr, pc) in &pivot_rows {
            if rows[i].0[pc].f_is_zero() {
                continue;
            }
            let c = rows[i].0[pc].f_div(&rows[pr].0[pc]);
            let (src_img, src_aug) = (rows[pr].0.clone(), rows[pr].1.clone());
            let row = &mut rows[i];
            for j in 0..len {
                if !src_img[j].f_is_zero() {
                    row.0[j] = row.0[j].f_sub(&c.f_mul(&src_img[j]));
                }
            }
            for j in 0..m {
                if !src_aug[j].f_is_zero() {
                    row.1[j] = row.1[j].f_sub(&c.f_mul(&src_aug[j]));
                }
            }
        }
        match rows[i].0.iter().position(|x| !x.f_is_zero()) {
            Some(pc) => pivot_rows.push((i, pc)),
            None => kernel_rows.push(i),
        }
    }
    kernel_rows.into_iter().map(|i| rows[i].1.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::Rat;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| Rat::from_int(x)).collect()
    }

    #[test]
    fn canonical_form_ignores_generator_order() {
        let a = Echelon::from_vectors(3, vec![v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let b = Echelon::from_vectors(3, vec![v(&[1, 3, 4]), v(&[2, 4, 6]), v(&[1, 2, 3])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn dimension_identity_for_intersection() {
        let a = Echelon::from_vectors(4, vec![v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0]), v(&[0, 0, 1, 1])]);
        let b = Echelon::from_vectors(4, vec![v(&[1, 1, 0, 0]), v(&[0, 0, 0, 1])]);
        let i = a.intersection(&b);
        assert_eq!(a.sum(&b).dim() + i.dim(), a.dim() + b.dim());
        assert!(i.contains(&v(&[1, 1, 0, 0])));
    }

    #[test]
    fn kernel_of_dependent_images() {
        let k = kernel(&[v(&[1, 2]), v(&[2, 4]), v(&[0, 1])]);
        assert_eq!(k.len(), 1);
        let c = &k[0];
        let s = combine(c, &[v(&[1, 2]), v(&[2, 4]), v(&[0, 1])], 2);
        assert!(s.iter().all(|x| x.is_zero()));
    }
}
