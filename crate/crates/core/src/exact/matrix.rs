//! Square matrices over `Q(i)`.

use super::qi::Qi;
use super::rat::Rat;
use num_complex::Complex64;
use std::fmt;

/// A dense `n x n` matrix over `Q(i)`, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    n: usize,
    data: Vec<Qi>,
}

impl ExactMatrix {
    pub fn zeros(n: usize) -> Self {
        ExactMatrix { n, data: vec![Qi::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Qi::one());
        }
        m
    }

    /// The elementary matrix `E_ij` (zero-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n);
        m.set(i, j, Qi::one());
        m
    }

    pub fn from_flat(n: usize, data: Vec<Qi>) -> Self {
        assert_eq!(data.len(), n * n, "flat data has wrong length");
        ExactMatrix { n, data }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Qi) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        ExactMatrix { n, data }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        Self::from_fn(n, |i, j| Qi::from_int(rows[i][j]))
    }

    pub fn diag(entries: &[Qi]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Qi {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Qi) {
        self.data[i * self.n + j] = v;
    }

    pub fn flat(&self) -> &[Qi] {
        &self.data
    }

    pub fn into_flat(self) -> Vec<Qi> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Qi::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        ExactMatrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check(o);
        ExactMatrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Qi) -> Self {
        ExactMatrix { n: self.n, data: self.data.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn neg(&self) -> Self {
        ExactMatrix { n: self.n, data: self.data.iter().map(Qi::neg).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o);
        let n = self.n;
        let mut out = vec![Qi::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &o.data[k * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    out[i * n + j] = out[i * n + j].add(&a.mul(b));
                }
            }
        }
        ExactMatrix { n, data: out }
    }

    pub fn mul_vec(&self, v: &[Qi]) -> Vec<Qi> {
        let n = self.n;
        (0..n)
            .map(|i| {
                let mut s = Qi::zero();
                for j in 0..n {
                    let a = &self.data[i * n + j];
                    if !a.is_zero() && !v[j].is_zero() {
                        s = s.add(&a.mul(&v[j]));
                    }
                }
                s
            })
            .collect()
    }

    /// The commutator `xy - yx`.
    pub fn bracket(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn trace(&self) -> Qi {
        (0..self.n).fold(Qi::zero(), |s, i| s.add(self.get(i, i)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn conj(&self) -> Self {
        ExactMatrix { n: self.n, data: self.data.iter().map(Qi::conj).collect() }
    }

    /// Conjugate transpose `X*`.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).conj())
    }

    /// The conjugation `sigma(X) = -X*` fixing the compact form.
    pub fn sigma(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).conj().neg())
    }

    /// Trace form `tr(XY)`.
    pub fn trace_form(&self, o: &Self) -> Qi {
        self.check(o);
        let n = self.n;
        let mut s = Qi::zero();
        for i in 0..n {
            for j in 0..n {
                let a = &self.data[i * n + j];
                let b = &o.data[j * n + i];
                if !a.is_zero() && !b.is_zero() {
                    s = s.add(&a.mul(b));
                }
            }
        }
        s
    }

    pub fn is_hermitian(&self) -> bool {
        *self == self.adjoint()
    }

    pub fn is_anti_hermitian(&self) -> bool {
        *self == self.adjoint().neg()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::identity(self.n);
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// True iff `X^n = 0`.
    pub fn is_nilpotent(&self) -> bool {
        let mut p = self.clone();
        for _ in 1..self.n {
            if p.is_zero() {
                return true;
            }
            p = p.mul(self);
        }
        p.is_zero()
    }

    /// Inverse by Gauss-Jordan elimination, or `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut b = Self::identity(n).data;
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r * n + c].is_zero())?;
            if p != c {
                for j in 0..n {
                    a.swap(p * n + j, c * n + j);
                    b.swap(p * n + j, c * n + j);
                }
            }
            let piv = a[c * n + c].inv();
            for j in 0..n {
                a[c * n + j] = a[c * n + j].mul(&piv);
                b[c * n + j] = b[c * n + j].mul(&piv);
            }
            for r in 0..n {
                if r == c || a[r * n + c].is_zero() {
                    continue;
                }
                let f = a[r * n + c].clone();
                for j in 0..n {
                    let x = a[c * n + j].mul(&f);
                    a[r * n + j] = a[r * n + j].sub(&x);
                    let y = b[c * n + j].mul(&f);
                    b[r * n + j] = b[r * n + j].sub(&y);
                }
            }
        }
        Some(ExactMatrix { n, data: b })
    }

    /// Real coordinates `[re..., im...]` of the flattened matrix.
    pub fn to_real_coords(&self) -> Vec<Rat> {
        let mut v: Vec<Rat> = self.data.iter().map(|x| x.re.clone()).collect();
        v.extend(self.data.iter().map(|x| x.im.clone()));
        v
    }

    pub fn from_real_coords(n: usize, v: &[Rat]) -> Self {
        let m = n * n;
        assert_eq!(v.len(), 2 * m);
        ExactMatrix { n, data: (0..m).map(|i| Qi::new(v[i].clone(), v[m + i].clone())).collect() }
    }

    pub fn to_c64(&self) -> nalgebra::DMatrix<Complex64> {
        nalgebra::DMatrix::from_fn(self.n, self.n, |i, j| self.get(i, j).to_c64())
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.n, o.n, "matrix size mismatch");
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_is_antisymmetric_and_traceless() {
        let x = ExactMatrix::from_ints(&[&[1, 2], &[3, 4]]);
        let y = ExactMatrix::from_ints(&[&[0, 1], &[5, -1]]);
        assert_eq!(x.bracket(&y), y.bracket(&x).neg());
        assert!(x.bracket(&y).trace().is_zero());
    }

    #[test]
    fn inverse_round_trip() {
        let x = ExactMatrix::from_ints(&[&[2, 1, 0], &[1, 1, 0], &[0, 3, 1]]);
        let xi = x.inverse().unwrap();
        assert_eq!(x.mul(&xi), ExactMatrix::identity(3));
        assert!(ExactMatrix::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn sigma_fixes_anti_hermitian() {
        let mut x = ExactMatrix::zeros(2);
        x.set(0, 1, Qi::gauss(1, 2));
        x.set(1, 0, Qi::gauss(-1, 2));
        x.set(0, 0, Qi::gauss(0, 3));
        assert!(x.is_anti_hermitian());
        assert_eq!(x.sigma(), x);
    }
}
