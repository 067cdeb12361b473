//! Univariate polynomials over `Q(i)` and the matrix polynomials built from them.

use super::echelon::kernel;
use super::matrix::ExactMatrix;
use super::qi::Qi;
use super::rat::Rat;

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly(pub Vec<Qi>);

impl Poly {
    pub fn new(mut c: Vec<Qi>) -> Self {
        while c.last().is_some_and(Qi::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Qi {
        self.0.last().cloned().unwrap_or_else(Qi::zero)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead();
        Poly::new(self.0.iter().map(|c| c.div(&l)).collect())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0.iter().enumerate().skip(1).map(|(k, c)| c.mul(&Qi::from_int(k as i64))).collect(),
        )
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let m = self.0.len().max(o.0.len());
        let z = Qi::zero();
        Poly::new((0..m).map(|k| self.0.get(k).unwrap_or(&z).sub(o.0.get(k).unwrap_or(&z))).collect())
    }

    /// Quotient and remainder.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.0.clone();
        let mut q = vec![Qi::zero(); self.0.len().saturating_sub(dd).max(1)];
        let l = d.lead();
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap().div(&l);
            for (j, dc) in d.0.iter().enumerate() {
                r[k + j] = r[k + j].sub(&c.mul(dc));
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(Qi::is_zero) {
                r.pop();
            }
        }
        (Poly::new(q), Poly::new(r))
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, x: &ExactMatrix) -> ExactMatrix {
        let n = x.n();
        let mut acc = ExactMatrix::zeros(n);
        for c in self.0.iter().rev() {
            acc = acc.mul(x).add(&ExactMatrix::identity(n).scale(c));
        }
        acc
    }

    /// True iff the polynomial has no repeated root.
    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }
}

/// Monic minimal polynomial of a square matrix.
pub fn minimal_polynomial(x: &ExactMatrix) -> Poly {
    let n = x.n();
    let mut powers = vec![ExactMatrix::identity(n).into_flat()];
    let mut p = ExactMatrix::identity(n);
    for _ in 0..n {
        p = p.mul(x);
        powers.push(p.flat().to_vec());
        let ker = kernel(&powers);
        if let Some(c) = ker.into_iter().next() {
            return Poly::new(c).monic();
        }
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

/// Characteristic polynomial `det(tI - X)` by the Faddeev-LeVerrier recursion.
pub fn characteristic_polynomial(a: &ExactMatrix) -> Poly {
    let n = a.n();
    let mut c = vec![Qi::zero(); n + 1];
    c[n] = Qi::one();
    let mut m = ExactMatrix::zeros(n);
    for k in 1..=n {
        m = a.mul(&m).add(&ExactMatrix::identity(n).scale(&c[n - k + 1]));
        let t = a.mul(&m).trace();
        c[n - k] = t.neg().div(&Qi::from_int(k as i64));
    }
    Poly::new(c)
}

/// Additive Jordan-Chevalley decomposition `X = S + N` with `S` semisimple,
/// `N` nilpotent and `[S, N] = 0`, computed exactly by Newton iteration on
/// the squarefree part of the minimal polynomial.
pub fn jordan_chevalley(x: &ExactMatrix) -> (ExactMatrix, ExactMatrix) {
    let m = minimal_polynomial(x);
    let g = m.gcd(&m.derivative());
    let r = m.divrem(&g).0;
    let dr = r.derivative();
    let mut y = x.clone();
    loop {
        let ry = r.eval_matrix(&y);
        if ry.is_zero() {
            break;
        }
        let inv = dr.eval_matrix(&y).inverse().expect("r'(Y) is invertible along the Newton iteration");
        y = y.sub(&ry.mul(&inv));
    }
    let nil = x.sub(&y);
    (y, nil)
}

/// Counts `(positive, negative, zero)` roots of a real polynomial whose roots are all real.
pub fn real_root_signs(p: &Poly) -> (usize, usize, usize) {
    let coeffs: Vec<Rat> = p.0.iter().map(|c| c.re.clone()).collect();
    let zero = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let tail = &coeffs[zero..];
    let changes = |signs: Vec<i32>| {
        let nz: Vec<i32> = signs.into_iter().filter(|&s| s != 0).collect();
        nz.windows(2).filter(|w| w[0] != w[1]).count()
    };
    let pos = changes(tail.iter().map(Rat::signum).collect());
    let neg = changes(
        tail.iter()
            .enumerate()
            .map(|(k, c)| if (k + zero) % 2 == 1 { -c.signum() } else { c.signum() })
            .collect(),
    );
    (pos, neg, zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_polynomial_of_jordan_block() {
        let x = ExactMatrix::from_ints(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 2]]);
        let m = minimal_polynomial(&x);
        assert_eq!(m.degree(), Some(2));
        assert!(!m.is_squarefree());
        assert!(m.eval_matrix(&x).is_zero());
    }

    #[test]
    fn jordan_chevalley_parts_commute() {
        let x = ExactMatrix::from_ints(&[&[3, 1, 2], &[0, 3, 5], &[0, 0, 1]]);
        let (s, nil) = jordan_chevalley(&x);
        assert!(nil.is_nilpotent());
        assert!(minimal_polynomial(&s).is_squarefree());
        assert!(s.bracket(&nil).is_zero());
        assert_eq!(s.add(&nil), x);
    }

    #[test]
    fn sign_count_of_hermitian_char_poly() {
        let h = ExactMatrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]);
        let p = characteristic_polynomial(&h);
        assert_eq!(real_root_signs(&p), (1, 1, 1));
    }
}
