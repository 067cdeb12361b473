//! Rational numbers with an `i64` fast path that promotes to big integers on overflow.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// An exact rational number.
///
/// Values that fit in `i64` numerator and denominator are always stored in the
/// small form, so derived equality and hashing are canonical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rat {
    Small(Ratio<i64>),
    Big(BigRational),
}

impl Rat {
    pub fn zero() -> Self {
        Rat::Small(Ratio::from_integer(0))
    }

    pub fn one() -> Self {
        Rat::Small(Ratio::from_integer(1))
    }

    pub fn from_int(n: i64) -> Self {
        Rat::Small(Ratio::from_integer(n))
    }

    /// Builds `p/q`. Panics if `q == 0`.
    pub fn new(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Rat::Small(Ratio::new(p, q))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Rat::Small(r) => r.is_zero(),
            Rat::Big(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Rat::Small(r) => r.is_one(),
            Rat::Big(r) => r.is_one(),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Rat::Big(r) => r.clone(),
        }
    }

    fn from_big(r: BigRational) -> Self {
        if let (Some(p), Some(q)) = (r.numer().to_i64(), r.denom().to_i64()) {
            // Guard against i64::MIN so that negation on the small path stays checked.
            if p != i64::MIN && q != i64::MIN {
                return Rat::Small(Ratio::new_raw(p, q));
            }
        }
        Rat::Big(r)
    }

    pub fn add(&self, o: &Rat) -> Rat {
        if let (Rat::Small(a), Rat::Small(b)) = (self, o) {
            if let Some(c) = a.checked_add(b) {
                return Rat::Small(c);
            }
        }
        Rat::from_big(self.to_big() + o.to_big())
    }

    pub fn sub(&self, o: &Rat) -> Rat {
        if let (Rat::Small(a), Rat::Small(b)) = (self, o) {
            if let Some(c) = a.checked_sub(b) {
                return Rat::Small(c);
            }
        }
        Rat::from_big(self.to_big() - o.to_big())
    }

    pub fn mul(&self, o: &Rat) -> Rat {
        if self.is_zero() || o.is_zero() {
            return Rat::zero();
        }
        if let (Rat::Small(a), Rat::Small(b)) = (self, o) {
            if let Some(c) = a.checked_mul(b) {
                return Rat::Small(c);
            }
        }
        Rat::from_big(self.to_big() * o.to_big())
    }

    /// Division. Panics on division by zero.
    pub fn div(&self, o: &Rat) -> Rat {
        assert!(!o.is_zero(), "division by zero");
        if let (Rat::Small(a), Rat::Small(b)) = (self, o) {
            if let Some(c) = a.checked_div(b) {
                return Rat::Small(c);
            }
        }
        Rat::from_big(self.to_big() / o.to_big())
    }

    pub fn neg(&self) -> Rat {
        match self {
            Rat::Small(a) => Rat::Small(-*a),
            Rat::Big(a) => Rat::from_big(-a.clone()),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Rat::Small(a) => {
                if a.is_zero() {
                    0
                } else if a.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Rat::Big(a) => {
                if a.is_zero() {
                    0
                } else if a.is_positive() {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Rat::Small(a) => *a.numer() as f64 / *a.denom() as f64,
            Rat::Big(a) => a.to_f64().unwrap_or(f64::NAN),
        }
    }

    /// Nearest rational with denominator `den`.
    pub fn approx_f64(x: f64, den: i64) -> Rat {
        Rat::new((x * den as f64).round() as i64, den)
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rat::Small(a), Rat::Small(b)) => {
                let l = *a.numer() as i128 * *b.denom() as i128;
                let r = *b.numer() as i128 * *a.denom() as i128;
                l.cmp(&r)
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(a) => write!(f, "{}", a),
            Rat::Big(a) => write!(f, "{}", a),
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let r: BigRational = match s.split_once('/') {
            Some((p, q)) => {
                let p = BigInt::from_str(p.trim()).map_err(|e| format!("bad rational {s:?}: {e}"))?;
                let q = BigInt::from_str(q.trim()).map_err(|e| format!("bad rational {s:?}: {e}"))?;
                if q.is_zero() {
                    return Err(format!("zero denominator in {s:?}"));
                }
                BigRational::new(p, q)
            }
            None => BigRational::from_integer(
                BigInt::from_str(s).map_err(|e| format!("bad rational {s:?}: {e}"))?,
            ),
        };
        Ok(Rat::from_big(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rat::from_int(i64::MAX / 2);
        let sq = big.mul(&big);
        assert!(matches!(sq, Rat::Big(_)));
        let back = sq.div(&big);
        assert_eq!(back, big);
        assert!(matches!(back, Rat::Small(_)));
    }

    #[test]
    fn parse_and_order() {
        let a: Rat = "-3/6".parse().unwrap();
        assert_eq!(a, Rat::new(-1, 2));
        assert!(a < Rat::zero());
        assert_eq!("7".parse::<Rat>().unwrap(), Rat::from_int(7));
        assert!("1/0".parse::<Rat>().is_err());
    }
}
