//! Exact arithmetic in the cyclotomic fields Q(zeta_N).
//!
//! A [`Scalar`] is stored on the power basis 1, zeta, ..., zeta^(phi(N)-1)
//! modulo the N-th cyclotomic polynomial. Scalars over different conductors
//! interoperate by promotion to the lcm conductor; results whose higher
//! coordinates vanish are shrunk back to conductor 1, so plain rationals stay
//! on the fast path.

use crate::rat::Rat;
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a root of unity")]
    NotARootOfUnity(String),
}

/// Upper bound on conductors, configurable through `HOPFACT_CONDUCTOR_LIMIT`.
static CONDUCTOR_LIMIT: Lazy<u32> = Lazy::new(|| {
    std::env::var("HOPFACT_CONDUCTOR_LIMIT")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(64)
});

pub fn conductor_limit() -> u32 {
    *CONDUCTOR_LIMIT
}

pub fn euler_phi(n: u32) -> usize {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

fn divisors(n: u32) -> Vec<u32> {
    let mut ds = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            ds.push(d);
        }
    }
    ds
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    num_integer::lcm(a, b)
}

/// Coefficients of Phi_N, low degree first, monic of degree phi(N).
fn cyclotomic_poly(n: u32) -> Arc<Vec<i64>> {
    static CACHE: Lazy<Mutex<HashMap<u32, Arc<Vec<i64>>>>> =
        Lazy::new(|| Mutex::new(HashMap::new()));
    if let Some(p) = CACHE.lock().unwrap().get(&n) {
        return p.clone();
    }
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, exact division over Z.
    let mut num = vec![0i128; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_poly(d);
        num = int_poly_div_exact(&num, &phi_d);
    }
    let coeffs: Vec<i64> = num
        .iter()
        .map(|&c| i64::try_from(c).expect("cyclotomic coefficient out of range"))
        .collect();
    let arc = Arc::new(coeffs);
    CACHE.lock().unwrap().insert(n, arc.clone());
    arc
}

/// Exact division of integer polynomials; divisor must be monic.
fn int_poly_div_exact(num: &[i128], den: &[i64]) -> Vec<i128> {
    let dn = den.len() - 1;
    debug_assert_eq!(den[dn], 1);
    let mut rem = num.to_vec();
    let deg_num = rem.len() - 1;
    let mut quot = vec![0i128; deg_num - dn + 1];
    for d in (dn..=deg_num).rev() {
        let c = rem[d];
        if c == 0 {
            continue;
        }
        quot[d - dn] = c;
        for (k, &dc) in den.iter().enumerate() {
            rem[d - dn + k] -= c * dc as i128;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "non-exact polynomial division");
    quot
}

/// Reduce a polynomial in zeta_N (coefficients low->high) modulo Phi_N.
fn reduce_mod_cyclotomic(mut p: Vec<Rat>, n: u32) -> Vec<Rat> {
    let phi = euler_phi(n);
    let modulus = cyclotomic_poly(n);
    while p.len() > phi {
        let d = p.len() - 1;
        let c = p[d].clone();
        p.pop();
        if c.is_zero() {
            continue;
        }
        // p -= c * x^(d-phi) * Phi_N; the top term cancels since Phi is monic.
        for (k, &mc) in modulus.iter().enumerate().take(phi) {
            if mc != 0 {
                let t = c.mul(&Rat::from_int(mc));
                p[d - phi + k] = p[d - phi + k].sub(&t);
            }
        }
    }
    p.resize(phi, Rat::ZERO);
    p
}

/// An exact element of Q(zeta_N).
#[derive(Clone, Debug)]
pub struct Scalar {
    conductor: u32,
    coeffs: Vec<Rat>,
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar {
            conductor: 1,
            coeffs: vec![Rat::ZERO],
        }
    }

    pub fn one() -> Scalar {
        Scalar {
            conductor: 1,
            coeffs: vec![Rat::ONE],
        }
    }

    pub fn from_rat(r: Rat) -> Scalar {
        Scalar {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_rat(Rat::from_int(n))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// zeta_N, a primitive N-th root of unity.
    pub fn primitive_root(n: u32) -> Scalar {
        assert!(n >= 1, "conductor must be positive");
        assert!(
            n <= conductor_limit(),
            "conductor {n} exceeds HOPFACT_CONDUCTOR_LIMIT={}",
            conductor_limit()
        );
        let phi = euler_phi(n);
        let mut coeffs = vec![Rat::ZERO; n as usize + 1];
        coeffs[1] = Rat::ONE;
        coeffs.truncate((phi.max(1)) + 1);
        let coeffs = reduce_mod_cyclotomic(coeffs, n);
        Scalar {
            conductor: n,
            coeffs,
        }
        .shrink()
    }

    fn shrink(mut self) -> Scalar {
        if self.conductor > 1 && self.coeffs[1..].iter().all(Rat::is_zero) {
            self.coeffs.truncate(1);
            self.conductor = 1;
        }
        self
    }

    /// Rewrite on the power basis of Q(zeta_M); M must be a multiple of the
    /// current conductor.
    /// The limit guards conductors introduced by inputs (see
    /// [`Scalar::primitive_root`]); promotion to lcm conductors of existing
    /// values stays unrestricted so field arithmetic is total.
    pub fn promote(&self, m: u32) -> Scalar {
        if m == self.conductor {
            return self.clone();
        }
        debug_assert_eq!(m % self.conductor, 0);
        let step = (m / self.conductor) as usize;
        let mut p = vec![Rat::ZERO; (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            p[i * step] = c.clone();
        }
        Scalar {
            conductor: m,
            coeffs: reduce_mod_cyclotomic(p, m),
        }
    }

    fn common(&self, other: &Scalar) -> (Scalar, Scalar, u32) {
        let m = lcm_u32(self.conductor, other.conductor);
        (self.promote(m), other.promote(m), m)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rat::is_zero)
    }

    /// The value as a rational if it lies in the prime field.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(Rat::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        if self.conductor == 1 && other.conductor == 1 {
            return Scalar::from_rat(self.coeffs[0].add(&other.coeffs[0]));
        }
        let (a, b, m) = self.common(other);
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| x.add(y))
            .collect();
        Scalar {
            conductor: m,
            coeffs,
        }
        .shrink()
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(Rat::neg).collect(),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        if self.conductor == 1 && other.conductor == 1 {
            return Scalar::from_rat(self.coeffs[0].mul(&other.coeffs[0]));
        }
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        let (a, b, m) = self.common(other);
        if a.conductor == 1 {
            return Scalar::from_rat(a.coeffs[0].mul(&b.coeffs[0]));
        }
        let mut p = vec![Rat::ZERO; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                p[i + j] = p[i + j].add(&x.mul(y));
            }
        }
        Scalar {
            conductor: m,
            coeffs: reduce_mod_cyclotomic(p, m),
        }
        .shrink()
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.conductor == 1 {
            return Ok(Scalar::from_rat(self.coeffs[0].inv().unwrap()));
        }
        let modulus: Vec<Rat> = cyclotomic_poly(self.conductor)
            .iter()
            .map(|&c| Rat::from_int(c))
            .collect();
        let u = poly_inv_mod(&self.coeffs, &modulus).expect("nonzero element must be invertible");
        let coeffs = reduce_mod_cyclotomic(u, self.conductor);
        Ok(Scalar {
            conductor: self.conductor,
            coeffs,
        }
        .shrink())
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Scalar, ScalarError> {
        if k == 0 {
            return Ok(Scalar::one());
        }
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
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
        Ok(acc)
    }

    /// Least d >= 1 with self^d = 1, or `None` if self is not a root of
    /// unity. Any root of unity in Q(zeta_N) has order dividing lcm(2, N),
    /// so only divisors of that bound are searched.
    pub fn order_of_root(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let bound = lcm_u32(2, self.conductor);
        for d in divisors(bound) {
            if self.pow(d as i64).unwrap().is_one() {
                return Some(d);
            }
        }
        None
    }
}

/// Inverse of `f` modulo a monic polynomial coprime to it, by the extended
/// Euclidean algorithm over Q[x].
fn poly_inv_mod(f: &[Rat], modulus: &[Rat]) -> Option<Vec<Rat>> {
    fn deg(p: &[Rat]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }
    fn poly_sub_scaled(a: &mut Vec<Rat>, b: &[Rat], factor: &Rat, shift: usize) {
        if a.len() < b.len() + shift {
            a.resize(b.len() + shift, Rat::ZERO);
        }
        for (k, c) in b.iter().enumerate() {
            if !c.is_zero() {
                a[k + shift] = a[k + shift].sub(&factor.mul(c));
            }
        }
    }

    let mut r0: Vec<Rat> = modulus.to_vec();
    let mut r1: Vec<Rat> = f.to_vec();
    let mut s0: Vec<Rat> = vec![Rat::ZERO];
    let mut s1: Vec<Rat> = vec![Rat::ONE];

    loop {
        let d1 = deg(&r1)?;
        if d1 == 0 {
            let c = r1[0].inv().unwrap();
            return Some(s1.iter().map(|x| x.mul(&c)).collect());
        }
        // One full division step r0 = q*r1 + r, mirrored on the Bezout line.
        while let Some(d0) = deg(&r0) {
            if d0 < d1 {
                break;
            }
            let factor = r0[d0].div(&r1[d1]).unwrap();
            let shift = d0 - d1;
            poly_sub_scaled(&mut r0, &r1.clone(), &factor, shift);
            let mut q_term_s = vec![Rat::ZERO; shift + 1];
            q_term_s[shift] = factor;
            // s0 -= q_term * s1
            let mut prod = vec![Rat::ZERO; q_term_s.len() + s1.len() - 1];
            for (i, a) in q_term_s.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in s1.iter().enumerate() {
                    prod[i + j] = prod[i + j].add(&a.mul(b));
                }
            }
            if s0.len() < prod.len() {
                s0.resize(prod.len(), Rat::ZERO);
            }
            for (k, c) in prod.iter().enumerate() {
                s0[k] = s0[k].sub(c);
            }
        }
        std::mem::swap(&mut r0, &mut r1);
        std::mem::swap(&mut s0, &mut s1);
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b, _) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conductor == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        write!(f, "cyclo({})[", self.conductor)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError(pub String);

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid scalar `{}`", self.0)
    }
}

impl std::error::Error for ParseScalarError {}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("cyclo(") {
            let (n_s, tail) = rest
                .split_once(')')
                .ok_or_else(|| ParseScalarError(s.to_string()))?;
            let n: u32 = n_s
                .trim()
                .parse()
                .map_err(|_| ParseScalarError(s.to_string()))?;
            if n == 0 {
                return Err(ParseScalarError(s.to_string()));
            }
            let tail = tail.trim();
            let inner = tail
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| ParseScalarError(s.to_string()))?;
            let mut coeffs = Vec::new();
            if !inner.trim().is_empty() {
                for part in inner.split(',') {
                    coeffs.push(
                        part.trim()
                            .parse::<Rat>()
                            .map_err(|_| ParseScalarError(s.to_string()))?,
                    );
                }
            }
            if coeffs.len() != euler_phi(n) {
                return Err(ParseScalarError(s.to_string()));
            }
            Ok(Scalar {
                conductor: n,
                coeffs,
            }
            .shrink())
        } else {
            let r: Rat = s.parse().map_err(|_| ParseScalarError(s.to_string()))?;
            Ok(Scalar::from_rat(r))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(n: u32) -> Scalar {
        Scalar::primitive_root(n)
    }

    #[test]
    fn embeddings_of_rationals() {
        assert!(Scalar::from_int(0).is_zero());
        assert!(Scalar::from_int(1).is_one());
        let s = Scalar::from_rat("-3/2".parse().unwrap());
        assert_eq!(s.coeffs(), &["-3/2".parse::<Rat>().unwrap()]);
        assert_eq!(s.conductor(), 1);
    }

    #[test]
    fn small_primitive_roots() {
        assert!(zeta(1).is_one());
        assert_eq!(zeta(2), Scalar::from_int(-1));
        let i = zeta(4);
        assert_eq!(i.mul(&i), Scalar::from_int(-1));
    }

    #[test]
    fn primitive_root_powers_are_distinct() {
        for n in 1..=12u32 {
            let z = zeta(n);
            let powers: Vec<Scalar> = (0..n).map(|k| z.pow(k as i64).unwrap()).collect();
            for a in 0..n as usize {
                for b in (a + 1)..n as usize {
                    assert_ne!(powers[a], powers[b], "zeta_{n} powers {a},{b} collide");
                }
            }
            assert!(z.pow(n as i64).unwrap().is_one());
        }
    }

    #[test]
    fn field_inverse_and_products() {
        assert_eq!(Scalar::from_int(-1).inv().unwrap(), Scalar::from_int(-1));
        assert!(zeta(3).pow(3).unwrap().is_one());
        // (1 + zeta_3)(1 + zeta_3^2) = 1, by cyclotomic reduction.
        let w = zeta(3);
        let a = Scalar::one().add(&w);
        let b = Scalar::one().add(&w.mul(&w));
        assert!(a.mul(&b).is_one());
        assert_eq!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn orders_of_roots() {
        assert_eq!(Scalar::one().order_of_root(), Some(1));
        assert_eq!(Scalar::from_int(-1).order_of_root(), Some(2));
        assert_eq!(zeta(6).order_of_root(), Some(6));
        assert_eq!(Scalar::from_int(2).order_of_root(), None);
        assert_eq!(Scalar::zero().order_of_root(), None);
        // -zeta_3 has order 6 inside Q(zeta_3).
        assert_eq!(zeta(3).neg().order_of_root(), Some(6));
    }

    #[test]
    fn promotion_is_compatible_with_arithmetic() {
        let a = zeta(3);
        let b = zeta(4);
        let c = a.add(&b);
        assert_eq!(c.conductor(), 12);
        assert_eq!(c.sub(&b), a);
        assert_eq!(a.promote(12).mul(&b.promote(12)), a.mul(&b));
    }

    #[test]
    fn display_round_trips() {
        let samples = [
            Scalar::from_int(5),
            Scalar::from_rat("-3/2".parse().unwrap()),
            zeta(8),
            zeta(3).mul(&Scalar::from_int(2)).add(&Scalar::one()),
        ];
        for s in &samples {
            let parsed: Scalar = s.to_string().parse().unwrap();
            assert_eq!(&parsed, s);
        }
    }
}
