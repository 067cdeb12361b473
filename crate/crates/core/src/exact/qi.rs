//! Gaussian rationals `Q(i)`.

use super::rat::Rat;
use std::fmt;

/// An element `re + i*im` of `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Qi {
    pub re: Rat,
    pub im: Rat,
}

impl Qi {
    pub fn new(re: Rat, im: Rat) -> Self {
        Qi { re, im }
    }

    pub fn zero() -> Self {
        Qi::new(Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        Qi::new(Rat::one(), Rat::zero())
    }

    pub fn i() -> Self {
        Qi::new(Rat::zero(), Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        Qi::new(Rat::from_int(n), Rat::zero())
    }

    pub fn from_rat(r: Rat) -> Self {
        Qi::new(r, Rat::zero())
    }

    pub fn gauss(re: i64, im: i64) -> Self {
        Qi::new(Rat::from_int(re), Rat::from_int(im))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Qi {
        Qi::new(self.re.clone(), self.im.neg())
    }

    pub fn norm_sq(&self) -> Rat {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn add(&self, o: &Qi) -> Qi {
        Qi::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn sub(&self, o: &Qi) -> Qi {
        Qi::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    pub fn mul(&self, o: &Qi) -> Qi {
        if self.is_zero() || o.is_zero() {
            return Qi::zero();
        }
        if self.im.is_zero() && o.im.is_zero() {
            return Qi::from_rat(self.re.mul(&o.re));
        }
        Qi::new(
            self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        )
    }

    pub fn scale(&self, r: &Rat) -> Qi {
        Qi::new(self.re.mul(r), self.im.mul(r))
    }

    pub fn inv(&self) -> Qi {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "inverse of zero");
        Qi::new(self.re.div(&n), self.im.neg().div(&n))
    }

    pub fn div(&self, o: &Qi) -> Qi {
        if o.im.is_zero() {
            return Qi::new(self.re.div(&o.re), self.im.div(&o.re));
        }
        self.mul(&o.inv())
    }

    pub fn neg(&self) -> Qi {
        Qi::new(self.re.neg(), self.im.neg())
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for Qi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else {
            write!(f, "({}+{}i)", self.re, self.im)
        }
    }
}

impl fmt::Debug for Qi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Field operations needed by the generic row reduction.
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn f_zero() -> Self;
    fn f_one() -> Self;
    fn f_is_zero(&self) -> bool;
    fn f_add(&self, o: &Self) -> Self;
    fn f_sub(&self, o: &Self) -> Self;
    fn f_mul(&self, o: &Self) -> Self;
    fn f_div(&self, o: &Self) -> Self;
}

impl Field for Rat {
    fn f_zero() -> Self {
        Rat::zero()
    }
    fn f_one() -> Self {
        Rat::one()
    }
    fn f_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn f_add(&self, o: &Self) -> Self {
        Rat::add(self, o)
    }
    fn f_sub(&self, o: &Self) -> Self {
        Rat::sub(self, o)
    }
    fn f_mul(&self, o: &Self) -> Self {
        Rat::mul(self, o)
    }
    fn f_div(&self, o: &Self) -> Self {
        Rat::div(self, o)
    }
}

impl Field for Qi {
    fn f_zero() -> Self {
        Qi::zero()
    }
    fn f_one() -> Self {
        Qi::one()
    }
    fn f_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn f_add(&self, o: &Self) -> Self {
        Qi::add(self, o)
    }
    fn f_sub(&self, o: &Self) -> Self {
        Qi::sub(self, o)
    }
    fn f_mul(&self, o: &Self) -> Self {
        Qi::mul(self, o)
    }
    fn f_div(&self, o: &Self) -> Self {
        Qi::div(self, o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_on_samples() {
        let a = Qi::new(Rat::new(1, 2), Rat::new(-3, 4));
        let b = Qi::gauss(2, 5);
        assert_eq!(a.mul(&b).div(&b), a);
        assert_eq!(a.mul(&a.inv()), Qi::one());
        assert_eq!(a.conj().conj(), a);
        assert_eq!(a.mul(&a.conj()), Qi::from_rat(a.norm_sq()));
        assert_eq!(Qi::i().mul(&Qi::i()), Qi::from_int(-1));
    }
}
