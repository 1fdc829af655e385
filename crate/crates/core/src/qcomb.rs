//! q-binomial coefficients and the combinatorial identities behind every
//! summation formula in the extension machinery.
//!
//! Two independent computations are kept side by side: a memoized recurrence
//! over [`Scalar`] values and the same recurrence over integer polynomials
//! ([`gauss_polynomial`]), evaluated afterwards. At roots of unity many
//! coefficients vanish, so the product formula is never used.

use crate::rat::Rat;
use crate::scalar::{Scalar, ScalarError};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cell::RefCell;
use std::collections::HashMap;

/// Memoized table of (n choose m)_q for one fixed q.
pub struct QBinomTable {
    q: Scalar,
    memo: RefCell<HashMap<(u32, u32), Scalar>>,
}

impl QBinomTable {
    pub fn new(q: Scalar) -> Self {
        QBinomTable {
            q,
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    /// (n choose m)_q by the Pascal-type recurrence
    /// (n m)_q = (n-1 m)_q + q^(n-m) (n-1 m-1)_q.
    pub fn get(&self, n: u32, m: i64) -> Scalar {
        if m < 0 || m > n as i64 {
            return Scalar::zero();
        }
        let m = m as u32;
        if m == 0 || m == n {
            return Scalar::one();
        }
        if let Some(v) = self.memo.borrow().get(&(n, m)) {
            return v.clone();
        }
        let a = self.get(n - 1, m as i64);
        let b = self.get(n - 1, m as i64 - 1);
        let v = a.add(&self.q.pow((n - m) as i64).unwrap().mul(&b));
        self.memo.borrow_mut().insert((n, m), v.clone());
        v
    }
}

/// One-shot q-binomial; builds a throwaway table.
pub fn qbinom(n: u32, m: i64, q: &Scalar) -> Scalar {
    QBinomTable::new(q.clone()).get(n, m)
}

/// Integer-coefficient polynomial, low degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly(pub Vec<BigInt>);

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly(vec![])
    }

    pub fn one() -> IntPoly {
        IntPoly(vec![BigInt::one()])
    }

    fn add(&self, other: &IntPoly) -> IntPoly {
        let len = self.0.len().max(other.0.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] += c;
        }
        while out.last().map_or(false, |c| c.is_zero()) {
            out.pop();
        }
        IntPoly(out)
    }

    fn shifted(&self, k: usize) -> IntPoly {
        if self.0.is_empty() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.0.iter().cloned());
        IntPoly(out)
    }

    pub fn eval(&self, q: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.0.iter().rev() {
            acc = acc.mul(q);
            if !c.is_zero() {
                let r: Rat = c.to_string().parse().unwrap();
                acc = acc.add(&Scalar::from_rat(r));
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The Gaussian binomial as a polynomial in an indeterminate, built by the
/// same recurrence over polynomials. Evaluating it at any scalar q equals
/// `qbinom(n, m, q)`; this is the independent oracle for the scalar path.
pub fn gauss_polynomial(n: u32, m: i64) -> IntPoly {
    fn rec(n: u32, m: i64, memo: &mut HashMap<(u32, i64), IntPoly>) -> IntPoly {
        if m < 0 || m > n as i64 {
            return IntPoly::zero();
        }
        if m == 0 || m == n as i64 {
            return IntPoly::one();
        }
        if let Some(p) = memo.get(&(n, m)) {
            return p.clone();
        }
        let a = rec(n - 1, m, memo);
        let b = rec(n - 1, m - 1, memo).shifted((n as i64 - m) as usize);
        let p = a.add(&b);
        memo.insert((n, m), p.clone());
        p
    }
    rec(n, m, &mut HashMap::new())
}

/// Euclidean decomposition k = k_D * N + k_R with 0 <= k_R < N.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModDecomposition {
    pub k: u32,
    pub n: u32,
    pub k_d: u32,
    pub k_r: u32,
}

pub fn decompose(k: u32, n: u32) -> ModDecomposition {
    assert!(n >= 1);
    ModDecomposition {
        k,
        n,
        k_d: k / n,
        k_r: k % n,
    }
}

/// Ordinary binomial coefficient as a scalar.
pub fn binomial(n: u32, m: i64) -> Scalar {
    if m < 0 || m > n as i64 {
        return Scalar::zero();
    }
    let v = num_integer::binomial(BigInt::from(n), BigInt::from(m));
    Scalar::from_rat(v.to_string().parse().unwrap())
}

/// Shared memo tables for sweeping the identities over a large grid at one
/// fixed q; repeated calls dominate, so the per-q tables are reused.
pub struct QIdentityChecker {
    q: Scalar,
    table: QBinomTable,
    table_inv: QBinomTable,
}

impl QIdentityChecker {
    pub fn new(q: Scalar) -> QIdentityChecker {
        let qinv = q.inv().expect("q must be nonzero");
        QIdentityChecker {
            q: q.clone(),
            table: QBinomTable::new(q),
            table_inv: QBinomTable::new(qinv),
        }
    }

    pub fn idq(&self, n: u32, m: i64) -> bool {
        let lhs = self.table.get(n, m);
        if m < 0 || m > n as i64 {
            return lhs.is_zero();
        }
        let rhs = self
            .q
            .pow(m * (n as i64 - m))
            .unwrap()
            .mul(&self.table_inv.get(n, m));
        lhs == rhs
    }

    pub fn radford(&self, n: u32, m: i64) -> Result<bool, ScalarError> {
        let ord = self
            .q
            .order_of_root()
            .ok_or_else(|| ScalarError::NotARootOfUnity(self.q.to_string()))?;
        let lhs = self.table.get(n, m);
        if m < 0 || m > n as i64 {
            return Ok(lhs.is_zero());
        }
        let nd = decompose(n, ord);
        let md = decompose(m as u32, ord);
        let rhs = self
            .table
            .get(nd.k_r, md.k_r as i64)
            .mul(&binomial(nd.k_d, md.k_d as i64));
        Ok(lhs == rhs)
    }

    pub fn subset(&self, i: u32, j: u32, k: u32) -> bool {
        let lhs = self
            .table
            .get(j, k as i64)
            .mul(&self.table.get(j.saturating_sub(k), i as i64 - k as i64));
        let rhs = self
            .table
            .get(j, i as i64)
            .mul(&self.table.get(i, k as i64));
        lhs == rhs
    }

    pub fn alternating(&self, i: u32, j: u32, k: u32) -> bool {
        let mut lhs = Scalar::zero();
        for s in 0..=j as i64 {
            let sign = if (j as i64 - s) % 2 == 0 { 1 } else { -1 };
            let exp = s * (s + 1) / 2 - s * j as i64;
            let term = Scalar::from_int(sign)
                .mul(&self.q.pow(exp).unwrap())
                .mul(&self.table.get(j, s))
                .mul(&self.table.get(s as u32 + i, k as i64));
            lhs = lhs.add(&term);
        }
        let j64 = j as i64;
        let exp = j64 * (j64 + 1) / 2 + j64 * (i as i64 - k as i64);
        let rhs = self
            .q
            .pow(exp)
            .unwrap()
            .mul(&self.table.get(i, k as i64 - j64));
        lhs == rhs
    }
}

/// (n m)_q = q^(m(n-m)) (n m)_{q^{-1}}.
pub fn check_identity_idq(n: u32, m: i64, q: &Scalar) -> bool {
    QIdentityChecker::new(q.clone()).idq(n, m)
}

/// Radford/Lucas-type factorization at a primitive root of unity:
/// (n m)_q = (n_R m_R)_q * (n_D m_D) where the parts are taken mod the order
/// of q.
pub fn check_radford(n: u32, m: i64, q: &Scalar) -> Result<bool, ScalarError> {
    QIdentityChecker::new(q.clone()).radford(n, m)
}

/// (j k)_q (j-k i-k)_q = (j i)_q (i k)_q. When k > j both sides vanish; the
/// saturating difference never changes the value then because the first
/// factor is already zero.
pub fn check_subset_identity(i: u32, j: u32, k: u32, q: &Scalar) -> bool {
    QIdentityChecker::new(q.clone()).subset(i, j, k)
}

/// sum_{s=0}^{j} (-1)^(j-s) q^(s(s+1)/2 - sj) (j s)_q (s+i k)_q
///   = q^(j(j+1)/2 + j(i-k)) (i k-j)_q.
pub fn check_alternating_sum_identity(i: u32, j: u32, k: u32, q: &Scalar) -> bool {
    QIdentityChecker::new(q.clone()).alternating(i, j, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(n: u32) -> Scalar {
        Scalar::primitive_root(n)
    }

    #[test]
    fn boundary_cases() {
        let q = zeta(5);
        for n in 0..8 {
            assert!(qbinom(n, 0, &q).is_one());
            assert!(qbinom(n, n as i64, &q).is_one());
            assert!(qbinom(n, n as i64 + 1, &q).is_zero());
            assert!(qbinom(n, -1, &q).is_zero());
        }
    }

    #[test]
    fn qbinom_2_1_is_one_plus_q() {
        // Frozen via the polynomial oracle: gauss(2,1) = 1 + t.
        let p = gauss_polynomial(2, 1);
        assert_eq!(p.to_string(), "1 + t");
        for q in [zeta(3), zeta(4), Scalar::from_int(2)] {
            let expect = Scalar::one().add(&q);
            assert_eq!(qbinom(2, 1, &q), expect);
            assert_eq!(p.eval(&q), expect);
        }
    }

    #[test]
    fn gauss_polynomial_samples() {
        assert_eq!(gauss_polynomial(3, 1).to_string(), "1 + t + t^2");
        assert!(gauss_polynomial(4, 4).eval(&zeta(7)).is_one());
        assert!(gauss_polynomial(1, 2).is_zero());
    }

    #[test]
    fn even_over_odd_vanishes_at_minus_one() {
        let q = Scalar::from_int(-1);
        for j in (2..=10u32).step_by(2) {
            for k in (1..j as i64).step_by(2) {
                assert!(qbinom(j, k, &q).is_zero(), "({j} {k})_-1 should vanish");
            }
        }
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(
            decompose(7, 2),
            ModDecomposition {
                k: 7,
                n: 2,
                k_d: 3,
                k_r: 1
            }
        );
        assert_eq!(
            decompose(0, 5),
            ModDecomposition {
                k: 0,
                n: 5,
                k_d: 0,
                k_r: 0
            }
        );
        assert_eq!(
            decompose(4, 4),
            ModDecomposition {
                k: 4,
                n: 4,
                k_d: 1,
                k_r: 0
            }
        );
    }

    #[test]
    fn idq_examples() {
        assert!(check_identity_idq(2, 1, &zeta(3)));
        for n in 0..6 {
            assert!(check_identity_idq(n, 0, &zeta(5)));
        }
        assert!(check_identity_idq(5, 2, &zeta(4)));
    }

    #[test]
    fn radford_examples() {
        let m1 = Scalar::from_int(-1);
        // (3 2)_{-1} = (1 0)_{-1} * (1 1) = 1, both sides computed.
        assert!(qbinom(3, 2, &m1).is_one());
        assert!(check_radford(3, 2, &m1).unwrap());
        assert!(check_radford(4, 2, &m1).unwrap());
        // n, m below the order: the decomposition is trivial.
        assert!(check_radford(2, 1, &zeta(4)).unwrap());
        assert!(matches!(
            check_radford(3, 1, &Scalar::from_int(2)),
            Err(ScalarError::NotARootOfUnity(_))
        ));
    }

    #[test]
    fn lemma_identity_examples() {
        let q = zeta(3);
        // i = k collapses the subset identity to (j k)_q on both sides.
        for j in 0..6 {
            assert!(check_subset_identity(2, j, 2, &q));
        }
        // j = 0 collapses the alternating sum.
        assert!(check_alternating_sum_identity(4, 0, 2, &q));
        assert!(check_alternating_sum_identity(2, 1, 1, &q));
    }

    #[test]
    fn scalar_recurrence_matches_polynomial_oracle() {
        for n in 0..=12u32 {
            for m in 0..=n as i64 {
                let p = gauss_polynomial(n, m);
                for q in [zeta(3), zeta(8), Scalar::from_int(2)] {
                    assert_eq!(qbinom(n, m, &q), p.eval(&q), "n={n} m={m}");
                }
            }
        }
    }
}
