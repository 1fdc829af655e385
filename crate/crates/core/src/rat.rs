//! Exact rational numbers with a machine-word fast path.
//!
//! Values are kept as reduced `i128` fractions while they fit and silently
//! promoted to `BigRational` on overflow, so arithmetic is always exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug)]
pub enum Rat {
    /// Reduced fraction: denominator > 0, gcd(|num|, den) = 1.
    Small(i128, i128),
    Big(Box<BigRational>),
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rat {
    pub const ZERO: Rat = Rat::Small(0, 1);
    pub const ONE: Rat = Rat::Small(1, 1);

    pub fn from_int(n: i64) -> Rat {
        Rat::Small(n as i128, 1)
    }

    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        Rat::small_normalized(num as i128, den as i128)
    }

    fn small_normalized(mut n: i128, mut d: i128) -> Rat {
        if d < 0 {
            n = -n;
            d = -d;
        }
        if n == 0 {
            return Rat::Small(0, 1);
        }
        let g = gcd_i128(n, d);
        Rat::Small(n / g, d / g)
    }

    fn big_normalized(r: BigRational) -> Rat {
        // Demote to the small representation whenever it fits.
        if let (Some(n), Some(d)) = (r.numer().to_i128(), r.denom().to_i128()) {
            Rat::Small(n, d)
        } else {
            Rat::Big(Box::new(r))
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(n, d) => BigRational::new(BigInt::from(*n), BigInt::from(*d)),
            Rat::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Rat::Small(n, _) => *n == 0,
            Rat::Big(b) => b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Rat::Small(n, d) => *n == 1 && *d == 1,
            Rat::Big(b) => b.is_one(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rat::Small(_, d) => *d == 1,
            Rat::Big(b) => b.is_integer(),
        }
    }

    pub fn neg(&self) -> Rat {
        match self {
            Rat::Small(n, d) => Rat::Small(-n, *d),
            Rat::Big(b) => Rat::Big(Box::new(-(**b).clone())),
        }
    }

    pub fn add(&self, other: &Rat) -> Rat {
        if let (Rat::Small(n1, d1), Rat::Small(n2, d2)) = (self, other) {
            let attempt = || -> Option<Rat> {
                let a = n1.checked_mul(*d2)?;
                let b = n2.checked_mul(*d1)?;
                let num = a.checked_add(b)?;
                let den = d1.checked_mul(*d2)?;
                Some(Rat::small_normalized(num, den))
            };
            if let Some(r) = attempt() {
                return r;
            }
        }
        Rat::big_normalized(self.to_big() + other.to_big())
    }

    pub fn sub(&self, other: &Rat) -> Rat {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Rat) -> Rat {
        if let (Rat::Small(n1, d1), Rat::Small(n2, d2)) = (self, other) {
            if *n1 == 0 || *n2 == 0 {
                return Rat::ZERO;
            }
            // Cross-reduce before multiplying to keep factors small.
            let g1 = gcd_i128(*n1, *d2);
            let g2 = gcd_i128(*n2, *d1);
            let attempt = || -> Option<Rat> {
                let num = (n1 / g1).checked_mul(n2 / g2)?;
                let den = (d1 / g2).checked_mul(d2 / g1)?;
                Some(Rat::Small(num, den))
            };
            if let Some(r) = attempt() {
                return r;
            }
        }
        Rat::big_normalized(self.to_big() * other.to_big())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Rat> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Rat::Small(n, d) => {
                if *n < 0 {
                    Rat::Small(-d, -n)
                } else {
                    Rat::Small(*d, *n)
                }
            }
            Rat::Big(b) => Rat::big_normalized(b.recip()),
        })
    }

    pub fn div(&self, other: &Rat) -> Option<Rat> {
        Some(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i64) -> Option<Rat> {
        if k == 0 {
            return Some(Rat::ONE);
        }
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Rat::ONE;
        let mut b = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        Some(acc)
    }

    pub fn abs_cmp_key(&self) -> BigRational {
        self.to_big()
    }
}

impl PartialEq for Rat {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Rat::Small(n1, d1), Rat::Small(n2, d2)) => n1 == n2 && d1 == d2,
            _ => self.to_big() == other.to_big(),
        }
    }
}

impl Eq for Rat {}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rat::Small(n1, d1), Rat::Small(n2, d2)) => (n1 * d2).cmp(&(n2 * d1)),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(n, 1) => write!(f, "{n}"),
            Rat::Small(n, d) => write!(f, "{n}/{d}"),
            Rat::Big(b) => {
                if b.is_integer() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatError(pub String);

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational `{}`", self.0)
    }
}

impl std::error::Error for ParseRatError {}

impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (num_s, den_s) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num = BigInt::from_str(num_s).map_err(|_| ParseRatError(s.to_string()))?;
        let den = BigInt::from_str(den_s).map_err(|_| ParseRatError(s.to_string()))?;
        if den.is_zero() {
            return Err(ParseRatError(s.to_string()));
        }
        Ok(Rat::big_normalized(BigRational::new(num, den)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arithmetic_reduces() {
        let a = Rat::new(2, 4);
        assert_eq!(a, Rat::new(1, 2));
        assert_eq!(a.add(&Rat::new(1, 2)), Rat::ONE);
        assert_eq!(a.mul(&Rat::new(-4, 3)), Rat::new(-2, 3));
        assert_eq!(Rat::new(-3, 2).inv().unwrap(), Rat::new(-2, 3));
        assert!(Rat::ZERO.inv().is_none());
    }

    #[test]
    fn overflow_promotes_to_big() {
        let big = Rat::Small(i128::MAX - 1, 1);
        let r = big.mul(&big);
        assert_eq!(r.to_big(), big.to_big() * big.to_big());
        // Result of a big computation demotes when it fits again.
        let back = r.mul(&big.inv().unwrap()).mul(&big.inv().unwrap());
        assert!(matches!(back, Rat::Small(_, _)));
        assert!(back.is_one());
    }

    #[test]
    fn parse_and_render() {
        for s in ["0", "7", "-3/2", "22/7"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!("4/6".parse::<Rat>().unwrap().to_string(), "2/3");
        assert!("1/0".parse::<Rat>().is_err());
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let r = Rat::new(-3, 2);
        assert_eq!(r.pow(2).unwrap(), Rat::new(9, 4));
        assert_eq!(r.pow(-2).unwrap(), Rat::new(4, 9));
        assert!(Rat::ZERO.pow(-1).is_none());
        assert_eq!(Rat::ZERO.pow(0).unwrap(), Rat::ONE);
    }
}
