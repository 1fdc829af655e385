//! Constructors for the concrete Hopf algebras and example partial actions:
//! group algebras, Sweedler's 4-dimensional algebra, rank one Hopf algebras
//! (generalized Taft and Radford), and the Nichols family, plus the stock
//! partial actions on small targets.
//!
//! Basis convention: group elements first in a fixed enumeration, then
//! x-monomials in graded order, so the two rank-one construction paths are
//! comparable entry by entry.

use crate::algebra::{AlgElement, FinAlgebra, SparseVec};
use crate::hopf::{CoproductEntry, FinHopf, Tensor2};
use crate::linalg::Matrix;
use crate::ore::{
    monomial_label, quotient_nilpotent, quotient_rank_one_nonnilp, HopfOreDatum, OreError,
    TruncatedOre,
};
use crate::paction::{ActionHost, PartialActionMap};
use crate::qcomb::QBinomTable;
use crate::scalar::Scalar;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("not a group table: {0}")]
    NotAGroup(String),
    #[error("invalid rank-one datum: {0}")]
    InvalidDatum(String),
    #[error("Omega^2 must be central in the target")]
    OmegaSquareNotCentral,
    #[error("w_{0} must be central in the target")]
    WNotCentral(usize),
    #[error("operator relation violated: {0}")]
    RelationViolated(String),
    #[error(transparent)]
    Ore(#[from] OreError),
}

/// A finite group by its multiplication table: `table[i][j]` is the index of
/// the product of elements i and j.
#[derive(Clone, Debug)]
pub struct GroupTable {
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn cyclic(n: usize) -> GroupTable {
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        GroupTable { labels, table }
    }

    /// Identity index, associativity, and two-sided inverses.
    pub fn validate(&self) -> Result<usize, FamilyError> {
        let n = self.order();
        if self.table.len() != n || self.table.iter().any(|r| r.len() != n) {
            return Err(FamilyError::NotAGroup("table shape mismatch".into()));
        }
        if self.table.iter().flatten().any(|&v| v >= n) {
            return Err(FamilyError::NotAGroup("entry out of range".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|j| self.table[e][j] == j && self.table[j][e] == j))
            .ok_or_else(|| FamilyError::NotAGroup("no identity element".into()))?;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]] {
                        return Err(FamilyError::NotAGroup(format!(
                            "associativity fails at ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        for i in 0..n {
            if !(0..n).any(|j| self.table[i][j] == identity && self.table[j][i] == identity) {
                return Err(FamilyError::NotAGroup(format!(
                    "element {i} has no inverse"
                )));
            }
        }
        Ok(identity)
    }

    pub fn inverse(&self, i: usize) -> usize {
        let e = (0..self.order())
            .find(|&e| (0..self.order()).all(|j| self.table[e][j] == j))
            .expect("validated table");
        (0..self.order())
            .find(|&j| self.table[i][j] == e)
            .expect("validated table")
    }

    pub fn power(&self, i: usize, k: u32) -> usize {
        let e = (0..self.order())
            .find(|&e| (0..self.order()).all(|j| self.table[e][j] == j))
            .expect("validated table");
        let mut acc = e;
        for _ in 0..k {
            acc = self.table[acc][i];
        }
        acc
    }

    pub fn is_central(&self, g: usize) -> bool {
        (0..self.order()).all(|h| self.table[g][h] == self.table[h][g])
    }

    /// All subgroups as membership vectors, generated by closing element
    /// sets under the table. Deterministic order: by size, then
    /// lexicographically.
    pub fn subgroups(&self) -> Vec<Vec<bool>> {
        let n = self.order();
        let identity = (0..n)
            .find(|&e| (0..n).all(|j| self.table[e][j] == j))
            .expect("validated table");
        let close = |mut members: Vec<bool>| -> Vec<bool> {
            loop {
                let mut grew = false;
                for i in 0..n {
                    for j in 0..n {
                        if members[i] && members[j] && !members[self.table[i][j]] {
                            members[self.table[i][j]] = true;
                            grew = true;
                        }
                    }
                }
                if !grew {
                    return members;
                }
            }
        };
        let mut trivial = vec![false; n];
        trivial[identity] = true;
        let mut found = vec![trivial];
        loop {
            let mut grew = false;
            let snapshot = found.clone();
            for base in &snapshot {
                for x in 0..n {
                    if base[x] {
                        continue;
                    }
                    let mut extended = base.clone();
                    extended[x] = true;
                    let closed = close(extended);
                    if !found.contains(&closed) {
                        found.push(closed);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        found.sort_by_key(|m| (m.iter().filter(|&&b| b).count(), m.clone()));
        found
    }
}

/// The group algebra kG with grouplike basis.
pub fn group_algebra(table: &GroupTable) -> Result<FinHopf, FamilyError> {
    let identity = table.validate()?;
    let n = table.order();
    let mut mult = vec![vec![SparseVec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            mult[i][j].push((table.table[i][j], Scalar::one()));
        }
    }
    let mut unit = vec![Scalar::zero(); n];
    unit[identity] = Scalar::one();
    let alg = FinAlgebra::new(table.labels.clone(), mult, unit);
    let coproduct: Vec<Vec<CoproductEntry>> = (0..n).map(|i| vec![(Scalar::one(), i, i)]).collect();
    let counit = vec![Scalar::one(); n];
    let mut antipode = Matrix::zeros(n, n);
    for i in 0..n {
        antipode.set(table.inverse(i), i, Scalar::one());
    }
    Ok(FinHopf::new(alg, coproduct, counit, antipode))
}

pub fn cyclic_group_algebra(n: usize) -> FinHopf {
    group_algebra(&GroupTable::cyclic(n)).expect("cyclic table is a group")
}

/// Sweedler's 4-dimensional Hopf algebra, basis 1, g, x, gx with g^2 = 1,
/// x^2 = 0, xg = -gx.
pub fn sweedler() -> FinHopf {
    let labels: Vec<String> = ["1", "g", "x", "gx"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let one = Scalar::one;
    let neg = || Scalar::from_int(-1);
    let mut mult = vec![vec![SparseVec::new(); 4]; 4];
    let mut set = |i: usize, j: usize, k: usize, c: Scalar| mult[i][j].push((k, c));
    // 1 * u and u * 1
    for u in 0..4 {
        set(0, u, u, one());
        if u != 0 {
            set(u, 0, u, one());
        }
    }
    set(1, 1, 0, one()); // g g = 1
    set(1, 2, 3, one()); // g x = gx
    set(1, 3, 2, one()); // g gx = x
    set(2, 1, 3, neg()); // x g = -gx
    set(3, 1, 2, neg()); // gx g = -x
                         // x x = x gx = gx x = gx gx = 0
    let unit = vec![one(), Scalar::zero(), Scalar::zero(), Scalar::zero()];
    let alg = FinAlgebra::new(labels, mult, unit);

    let coproduct = vec![
        vec![(one(), 0, 0)],
        vec![(one(), 1, 1)],
        vec![(one(), 2, 0), (one(), 1, 2)],
        vec![(one(), 3, 1), (one(), 0, 3)],
    ];
    let counit = vec![one(), one(), Scalar::zero(), Scalar::zero()];
    let mut antipode = Matrix::zeros(4, 4);
    antipode.set(0, 0, one());
    antipode.set(1, 1, one());
    antipode.set(3, 2, neg()); // S(x) = -gx
    antipode.set(2, 3, one()); // S(gx) = x
    FinHopf::new(alg, coproduct, counit, antipode)
}

/// The defining data (G, chi, g, beta) of a rank one Hopf algebra.
#[derive(Clone, Debug)]
pub struct RankOneDatum {
    pub group: GroupTable,
    pub chi: Vec<Scalar>,
    pub g: usize,
    pub beta: bool,
}

impl RankOneDatum {
    /// Generalized Taft H_{n,d}(q) for beta = 0, Radford R_{n,d}(q) for
    /// beta = 1; q must be a primitive d-th root of unity with d | n.
    pub fn cyclic(n: u32, d: u32, q: Scalar, beta: bool) -> Result<RankOneDatum, FamilyError> {
        if d < 2 || n % d != 0 {
            return Err(FamilyError::InvalidDatum(format!(
                "need 2 <= d | n, got n={n} d={d}"
            )));
        }
        if q.order_of_root() != Some(d) {
            return Err(FamilyError::InvalidDatum(format!(
                "q must be a primitive {d}-th root of unity"
            )));
        }
        let chi = (0..n as i64).map(|k| q.pow(k).unwrap()).collect();
        Ok(RankOneDatum {
            group: GroupTable::cyclic(n as usize),
            chi,
            g: 1,
            beta,
        })
    }

    /// Order d of chi(g).
    pub fn order(&self) -> Result<u32, FamilyError> {
        self.chi[self.g]
            .order_of_root()
            .ok_or_else(|| FamilyError::InvalidDatum("chi(g) is not a root of unity".into()))
    }

    pub fn validate(&self) -> Result<u32, FamilyError> {
        let identity = self.group.validate()?;
        let n = self.group.order();
        if self.chi.len() != n {
            return Err(FamilyError::InvalidDatum("chi has the wrong length".into()));
        }
        for i in 0..n {
            if self.chi[i].is_zero() {
                return Err(FamilyError::InvalidDatum("chi takes the value zero".into()));
            }
            for j in 0..n {
                if self.chi[self.group.table[i][j]] != self.chi[i].mul(&self.chi[j]) {
                    return Err(FamilyError::InvalidDatum(format!(
                        "chi is not multiplicative at ({i}, {j})"
                    )));
                }
            }
        }
        if !self.chi[identity].is_one() {
            return Err(FamilyError::InvalidDatum("chi(1) != 1".into()));
        }
        if !self.group.is_central(self.g) {
            return Err(FamilyError::InvalidDatum("g is not central in G".into()));
        }
        let d = self.order()?;
        let gd = self.group.power(self.g, d);
        let chi_d_trivial = self.chi.iter().all(|c| c.pow(d as i64).unwrap().is_one());
        let nilpotent = !self.beta || gd == identity;
        if !chi_d_trivial && !nilpotent {
            return Err(FamilyError::InvalidDatum(
                "datum condition chi^d = 1 or beta(1 - g^d) = 0 fails".into(),
            ));
        }
        Ok(d)
    }

    /// Nilpotent type means beta (1 - g^d) = 0.
    pub fn is_nilpotent_type(&self) -> Result<bool, FamilyError> {
        let identity = self.group.validate()?;
        let d = self.order()?;
        Ok(!self.beta || self.group.power(self.g, d) == identity)
    }
}

/// Rank one Hopf algebra H_D built directly from the defining relations
/// x^d = beta (1 - g^d), x h = chi(h) h x. Basis x^j h in degree-major
/// order, matching the quotient-of-Ore path entry by entry.
pub fn rank_one(datum: &RankOneDatum) -> Result<FinHopf, FamilyError> {
    let d = datum.validate()? as usize;
    let n = datum.group.order();
    let identity = datum.group.validate()?;
    let dim = d * n;
    let index = |j: usize, h: usize| j * n + h;
    let q = datum.chi[datum.g].clone();
    let gd = datum.group.power(datum.g, d as u32);

    let mut labels = Vec::with_capacity(dim);
    for j in 0..d {
        for h in 0..n {
            labels.push(monomial_label("x", j, &datum.group.labels[h]));
        }
    }

    let mut mult = vec![vec![SparseVec::new(); dim]; dim];
    for j in 0..d {
        for h in 0..n {
            for i in 0..d {
                for k in 0..n {
                    // (x^j h)(x^i k) = chi(h)^{-i} x^{j+i} (hk)
                    let factor = datum.chi[h].pow(-(i as i64)).unwrap();
                    let hk = datum.group.table[h][k];
                    let deg = j + i;
                    let mut acc: std::collections::BTreeMap<usize, Scalar> =
                        std::collections::BTreeMap::new();
                    if deg < d {
                        acc.insert(index(deg, hk), factor);
                    } else if datum.beta {
                        // x^{j+i} = x^{j+i-d} (1 - g^d)
                        let red = deg - d;
                        let gdhk = datum.group.table[gd][hk];
                        let e = acc.entry(index(red, hk)).or_insert_with(Scalar::zero);
                        *e = e.add(&factor);
                        let e = acc.entry(index(red, gdhk)).or_insert_with(Scalar::zero);
                        *e = e.sub(&factor);
                    }
                    mult[index(j, h)][index(i, k)] =
                        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                }
            }
        }
    }
    let mut unit = vec![Scalar::zero(); dim];
    unit[index(0, identity)] = Scalar::one();
    let alg = FinAlgebra::new(labels, mult, unit);

    let qinv = q.inv().expect("q is a root of unity");
    let table = QBinomTable::new(qinv);
    let mut coproduct: Vec<Vec<CoproductEntry>> = Vec::with_capacity(dim);
    for j in 0..d {
        for h in 0..n {
            let mut entries = Vec::new();
            for k in 0..=j {
                let c = table.get(j as u32, k as i64);
                if c.is_zero() {
                    continue;
                }
                let gk = datum.group.power(datum.g, k as u32);
                let gkh = datum.group.table[gk][h];
                entries.push((c, index(j - k, gkh), index(k, h)));
            }
            coproduct.push(entries);
        }
    }

    let mut counit = vec![Scalar::zero(); dim];
    for h in 0..n {
        counit[index(0, h)] = Scalar::one();
    }

    // S(x^j h) = h^{-1} (-g^{-1} x)^j with g^{-1} x = q x g^{-1}.
    let g_inv = datum.group.inverse(datum.g);
    let mut sx = vec![Scalar::zero(); dim];
    sx[index(1, g_inv)] = q.neg();
    let mul_vec = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); dim];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (jj, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul(b);
                for (k, c) in &alg.structure_constants()[i][jj] {
                    out[*k] = out[*k].add(&ab.mul(c));
                }
            }
        }
        out
    };
    let mut sx_pow = vec![{
        let mut v = vec![Scalar::zero(); dim];
        v[index(0, identity)] = Scalar::one();
        v
    }];
    for j in 1..d {
        let prev = sx_pow[j - 1].clone();
        sx_pow.push(mul_vec(&prev, &sx));
    }
    let mut antipode = Matrix::zeros(dim, dim);
    for j in 0..d {
        for h in 0..n {
            let hinv = datum.group.inverse(h);
            let mut hv = vec![Scalar::zero(); dim];
            hv[index(0, hinv)] = Scalar::one();
            let col = mul_vec(&hv, &sx_pow[j]);
            for (r, c) in col.into_iter().enumerate() {
                if !c.is_zero() {
                    antipode.set(r, index(j, h), c);
                }
            }
        }
    }

    Ok(FinHopf::new(alg, coproduct, counit, antipode))
}

/// The Hopf-Ore datum kG[x, sigma] with sigma(h) = chi(h) h.
pub fn rank_one_ore_datum(datum: &RankOneDatum) -> Result<HopfOreDatum, FamilyError> {
    datum.validate()?;
    let kg = Arc::new(group_algebra(&datum.group)?);
    let n = datum.group.order();
    let mut sigma = Matrix::zeros(n, n);
    for h in 0..n {
        sigma.set(h, h, datum.chi[h].clone());
    }
    let delta = Matrix::zeros(n, n);
    Ok(HopfOreDatum::new(kg, sigma, delta, datum.g, "x")?)
}

/// Rank one Hopf algebra as a quotient of the Hopf-Ore extension kG[x,
/// sigma]; must agree with [`rank_one`] entry by entry.
pub fn rank_one_via_quotient(datum: &RankOneDatum) -> Result<FinHopf, FamilyError> {
    let d = datum.validate()?;
    let ore = rank_one_ore_datum(datum)?;
    Ok(if datum.beta {
        quotient_rank_one_nonnilp(&ore, d)?
    } else {
        quotient_nilpotent(&ore, d)?
    })
}

/// Canonical monomial content of a Nichols basis element produced by the
/// iterated construction: the element equals
/// `sign * g^has_g * x_(xs[0]) ... x_(xs[last])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NicholsBasisInfo {
    pub sign: bool, // true = negative
    pub has_g: bool,
    pub xs: Vec<usize>,
}

/// Nichols Hopf algebra of dimension 2^n, built by iterated Hopf-Ore
/// extension and quotient starting from Sweedler's algebra.
pub fn nichols(n: usize) -> Result<(FinHopf, Vec<NicholsBasisInfo>), FamilyError> {
    assert!(n >= 2, "the Nichols family starts at dimension 4");
    let mut hopf = sweedler();
    let mut info = vec![
        NicholsBasisInfo {
            sign: false,
            has_g: false,
            xs: vec![],
        },
        NicholsBasisInfo {
            sign: false,
            has_g: true,
            xs: vec![],
        },
        NicholsBasisInfo {
            sign: false,
            has_g: false,
            xs: vec![1],
        },
        NicholsBasisInfo {
            sign: false,
            has_g: true,
            xs: vec![1],
        },
    ];
    for k in 2..n {
        let dim = hopf.dim();
        let mut sigma = Matrix::zeros(dim, dim);
        for (i, inf) in info.iter().enumerate() {
            let neg = (inf.has_g as usize + inf.xs.len()) % 2 == 1;
            sigma.set(
                i,
                i,
                if neg {
                    Scalar::from_int(-1)
                } else {
                    Scalar::one()
                },
            );
        }
        let delta = Matrix::zeros(dim, dim);
        let datum = HopfOreDatum::new(Arc::new(hopf), sigma, delta, 1, &format!("x{k}"))?;
        hopf = quotient_nilpotent(&datum, 2)?;
        let mut next = Vec::with_capacity(2 * dim);
        for j in 0..2usize {
            for inf in &info {
                if j == 0 {
                    next.push(inf.clone());
                } else {
                    // x_k g^l x_S = (-1)^(l + |S|) g^l x_S x_k
                    let flips = (inf.has_g as usize + inf.xs.len()) % 2 == 1;
                    let mut xs = inf.xs.clone();
                    xs.push(k);
                    next.push(NicholsBasisInfo {
                        sign: inf.sign ^ flips,
                        has_g: inf.has_g,
                        xs,
                    });
                }
            }
        }
        info = next;
    }
    Ok((hopf, info))
}

/// The same algebra presented directly by generators and relations, with
/// basis g^l x_S indexed so that bit 0 is l and bit i marks x_i.
pub fn nichols_from_relations(n: usize) -> FinHopf {
    assert!(n >= 2);
    let dim = 1usize << n;
    let decode = |idx: usize| -> (bool, Vec<usize>) {
        let has_g = idx & 1 == 1;
        let xs = (1..n).filter(|i| idx >> i & 1 == 1).collect();
        (has_g, xs)
    };
    let labels: Vec<String> = (0..dim)
        .map(|idx| {
            let (has_g, xs) = decode(idx);
            let mut parts = Vec::new();
            if has_g {
                parts.push("g".to_string());
            }
            for i in &xs {
                parts.push(format!("x{i}"));
            }
            if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("*")
            }
        })
        .collect();

    // (g^l x_S)(g^m x_T): x_S past g^m gives (-1)^(|S| m); disjointness of S
    // and T with an inversion sign for the merge.
    let mono_mul = |a: usize, b: usize| -> Option<(bool, usize)> {
        let (la, sa) = decode(a);
        let (lb, sb) = decode(b);
        if sa.iter().any(|i| sb.contains(i)) {
            return None;
        }
        let mut sign = (sa.len() * lb as usize) % 2 == 1;
        let mut inversions = 0;
        for s in &sa {
            for t in &sb {
                if s > t {
                    inversions += 1;
                }
            }
        }
        sign ^= inversions % 2 == 1;
        let mut idx = (la ^ lb) as usize;
        for i in sa.iter().chain(sb.iter()) {
            idx |= 1 << i;
        }
        Some((sign, idx))
    };

    let mut mult = vec![vec![SparseVec::new(); dim]; dim];
    for a in 0..dim {
        for b in 0..dim {
            if let Some((sign, idx)) = mono_mul(a, b) {
                let c = if sign {
                    Scalar::from_int(-1)
                } else {
                    Scalar::one()
                };
                mult[a][b].push((idx, c));
            }
        }
    }
    let mut unit = vec![Scalar::zero(); dim];
    unit[0] = Scalar::one();
    let alg = FinAlgebra::new(labels, mult, unit);

    // Delta multiplicatively from Delta(g) = g (x) g and
    // Delta(x_i) = x_i (x) 1 + g (x) x_i, multiplying in word order.
    let tensor_mul = |acc: &Tensor2, gen: &[(Scalar, usize, usize)]| -> Tensor2 {
        let mut out = Tensor2::new();
        for ((a1, b1), c1) in acc {
            for (c2, a2, b2) in gen {
                if let (Some((s1, ia)), Some((s2, ib))) = (mono_mul(*a1, *a2), mono_mul(*b1, *b2)) {
                    let mut v = c1.mul(c2);
                    if s1 ^ s2 {
                        v = v.neg();
                    }
                    let entry = out.entry((ia, ib)).or_insert_with(Scalar::zero);
                    *entry = entry.add(&v);
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    };
    let mut coproduct: Vec<Vec<CoproductEntry>> = Vec::with_capacity(dim);
    for idx in 0..dim {
        let (has_g, xs) = decode(idx);
        let mut acc = Tensor2::new();
        acc.insert((0, 0), Scalar::one());
        if has_g {
            acc = tensor_mul(&acc, &[(Scalar::one(), 1, 1)]);
        }
        for i in xs {
            let gen = [(Scalar::one(), 1 << i, 0), (Scalar::one(), 1, 1 << i)];
            acc = tensor_mul(&acc, &gen);
        }
        coproduct.push(acc.into_iter().map(|((a, b), c)| (c, a, b)).collect());
    }

    let counit: Vec<Scalar> = (0..dim)
        .map(|idx| {
            if idx <= 1 {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
        .collect();

    // S(g^l x_{i_1} ... x_{i_s}) = (-g x_{i_s}) ... (-g x_{i_1}) g^l.
    let mut antipode = Matrix::zeros(dim, dim);
    for idx in 0..dim {
        let (has_g, xs) = decode(idx);
        let mut acc: Vec<(bool, usize)> = vec![(false, 0)];
        for i in xs.iter().rev() {
            let mut next = Vec::new();
            for (s, a) in &acc {
                // multiply by -g x_i = -(g x_i) on the right
                if let Some((s2, b)) = mono_mul(*a, 1 | (1 << i)) {
                    next.push((!(s ^ s2), b));
                }
            }
            acc = next;
        }
        if has_g {
            acc = acc
                .into_iter()
                .filter_map(|(s, a)| mono_mul(a, 1).map(|(s2, b)| (s ^ s2, b)))
                .collect();
        }
        for (s, a) in acc {
            let c = if s {
                Scalar::from_int(-1)
            } else {
                Scalar::one()
            };
            antipode.set(a, idx, c);
        }
    }

    FinHopf::new(alg, coproduct, counit, antipode)
}

/// The Hopf-Ore datum H4[y, sigma] with sigma(g) = -g, sigma(x) = -x.
pub fn sweedler_ore_datum() -> HopfOreDatum {
    let base = Arc::new(sweedler());
    let mut sigma = Matrix::zeros(4, 4);
    sigma.set(0, 0, Scalar::one());
    sigma.set(1, 1, Scalar::from_int(-1));
    sigma.set(2, 2, Scalar::from_int(-1));
    sigma.set(3, 3, Scalar::one());
    let delta = Matrix::zeros(4, 4);
    HopfOreDatum::new(base, sigma, delta, 1, "y").expect("valid Panov data")
}

/// kC_n[x, sigma] with sigma(g) = q g; q must satisfy q^n = 1.
pub fn cyclic_ore_datum(n: usize, q: &Scalar) -> Result<HopfOreDatum, FamilyError> {
    if !q.pow(n as i64).unwrap().is_one() {
        return Err(FamilyError::InvalidDatum(format!(
            "q^{n} != 1 for kC_{n}[x, sigma]"
        )));
    }
    let base = Arc::new(cyclic_group_algebra(n));
    let mut sigma = Matrix::zeros(n, n);
    for k in 0..n {
        sigma.set(k, k, q.pow(k as i64).unwrap());
    }
    let delta = Matrix::zeros(n, n);
    Ok(HopfOreDatum::new(base, sigma, delta, 1, "x")?)
}

/// The Sweedler example action: 1 . r = r, g . r = 0, x . r = Omega r,
/// gx . r = r Omega, requiring Omega^2 central.
pub fn sweedler_partial_action(
    target: Arc<FinAlgebra>,
    omega: &AlgElement,
) -> Result<PartialActionMap, FamilyError> {
    let omega2 = target.mul(omega, omega);
    if !target.is_central(&omega2) {
        return Err(FamilyError::OmegaSquareNotCentral);
    }
    let host = Arc::new(sweedler());
    let rdim = target.dim();
    let mats = vec![
        Matrix::identity(rdim),
        Matrix::zeros(rdim, rdim),
        target.left_mult_matrix(omega),
        target.right_mult_matrix(omega),
    ];
    Ok(PartialActionMap::new(ActionHost::Hopf(host), target, mats))
}

/// Symmetric partial action of the Nichols algebra with g . 1_R = 0 and
/// x_i . 1_R = w_i central: single letters act by w_i, words of length >= 2
/// act by zero.
pub fn nichols_partial_action(
    n: usize,
    target: Arc<FinAlgebra>,
    ws: &[AlgElement],
) -> Result<PartialActionMap, FamilyError> {
    assert_eq!(ws.len(), n - 1, "one w per skew-primitive generator");
    for (i, w) in ws.iter().enumerate() {
        if !target.is_central(w) {
            return Err(FamilyError::WNotCentral(i + 1));
        }
    }
    let (hopf, info) = nichols(n)?;
    let rdim = target.dim();
    let mats = info
        .iter()
        .map(|inf| {
            let m = match (inf.xs.len(), inf.has_g) {
                (0, false) => Matrix::identity(rdim),
                (0, true) => Matrix::zeros(rdim, rdim),
                (1, _) => target.left_mult_matrix(&ws[inf.xs[0] - 1]),
                _ => Matrix::zeros(rdim, rdim),
            };
            if inf.sign {
                m.scale(&Scalar::from_int(-1))
            } else {
                m
            }
        })
        .collect();
    Ok(PartialActionMap::new(
        ActionHost::Hopf(Arc::new(hopf)),
        target,
        mats,
    ))
}

/// Global action of H4[y, sigma] from an involutive automorphism alpha and
/// skew-derivations d_x (2-nilpotent) and d_y; every operator relation is
/// verified before the action is assembled.
pub fn global_sweedler_ore_action(
    target: Arc<FinAlgebra>,
    alpha: &Matrix,
    d_x: &Matrix,
    d_y: &Matrix,
    cap: usize,
) -> Result<PartialActionMap, FamilyError> {
    let rdim = target.dim();
    let apply = |m: &Matrix, v: &AlgElement| AlgElement::from_coeffs(m.matvec(&v.coeffs));
    if apply(alpha, &target.unit()) != target.unit() {
        return Err(FamilyError::RelationViolated("alpha(1) != 1".into()));
    }
    for i in 0..rdim {
        for j in 0..rdim {
            let ei = AlgElement::basis(rdim, i);
            let ej = AlgElement::basis(rdim, j);
            let prod = target.mul(&ei, &ej);
            if apply(alpha, &prod) != target.mul(&apply(alpha, &ei), &apply(alpha, &ej)) {
                return Err(FamilyError::RelationViolated(format!(
                    "alpha is not multiplicative at ({i}, {j})"
                )));
            }
            for (name, d) in [("d_x", d_x), ("d_y", d_y)] {
                let lhs = apply(d, &prod);
                let rhs = target
                    .mul(&apply(d, &ei), &ej)
                    .add(&target.mul(&apply(alpha, &ei), &apply(d, &ej)));
                if lhs != rhs {
                    return Err(FamilyError::RelationViolated(format!(
                        "{name} is not an alpha-derivation at ({i}, {j})"
                    )));
                }
            }
        }
    }
    if !alpha.mul(alpha).sub(&Matrix::identity(rdim)).is_zero() {
        return Err(FamilyError::RelationViolated("alpha^2 != id".into()));
    }
    for (name, d) in [("d_x", d_x), ("d_y", d_y)] {
        if !alpha.mul(d).add(&d.mul(alpha)).is_zero() {
            return Err(FamilyError::RelationViolated(format!(
                "alpha {name} != -{name} alpha"
            )));
        }
    }
    if !d_x.mul(d_x).is_zero() {
        return Err(FamilyError::RelationViolated("d_x^2 != 0".into()));
    }
    if !d_y.mul(d_x).add(&d_x.mul(d_y)).is_zero() {
        return Err(FamilyError::RelationViolated("d_y d_x != -d_x d_y".into()));
    }

    let datum = sweedler_ore_datum();
    let host = TruncatedOre::new(datum, cap)?;
    // Base matrices follow the monomial structure: 1, g, x, gx.
    let base = [
        Matrix::identity(rdim),
        alpha.clone(),
        d_x.clone(),
        alpha.mul(d_x),
    ];
    let mut mats = Vec::with_capacity(host.dim());
    let mut dy_pow = Matrix::identity(rdim);
    for j in 0..=cap {
        if j > 0 {
            dy_pow = d_y.mul(&dy_pow);
        }
        for b in &base {
            mats.push(dy_pow.mul(b));
        }
    }
    Ok(PartialActionMap::new(
        ActionHost::Ore(Arc::new(host)),
        target,
        mats,
    ))
}

/// Partial action of a group algebra where each group element acts as the
/// indicator of a subgroup: h . r = r when h is a member, otherwise 0.
pub fn group_indicator_action(
    hopf: Arc<FinHopf>,
    members: &[bool],
    target: Arc<FinAlgebra>,
) -> Result<PartialActionMap, FamilyError> {
    let n = hopf.dim();
    assert_eq!(members.len(), n);
    for i in 0..n {
        if !hopf.is_grouplike(&AlgElement::basis(n, i)) {
            return Err(FamilyError::NotAGroup(format!(
                "basis element {} is not grouplike",
                hopf.alg().label(i)
            )));
        }
    }
    // Membership must be a subgroup for the axioms to hold; verified here so
    // callers get a clear error instead of a failing sweep.
    let prod_idx = |i: usize, j: usize| -> usize {
        let p = hopf.alg().basis_product(i, j);
        assert_eq!(p.len(), 1);
        p[0].0
    };
    let identity = (0..n)
        .find(|&e| hopf.alg().unit_coeffs()[e].is_one())
        .expect("group algebra unit is a basis element");
    if !members[identity] {
        return Err(FamilyError::NotAGroup(
            "subgroup must contain the identity".into(),
        ));
    }
    for i in 0..n {
        for j in 0..n {
            if members[i] && members[j] && !members[prod_idx(i, j)] {
                return Err(FamilyError::NotAGroup(
                    "membership set is not closed".into(),
                ));
            }
        }
    }
    let rdim = target.dim();
    let mats = (0..n)
        .map(|i| {
            if members[i] {
                Matrix::identity(rdim)
            } else {
                Matrix::zeros(rdim, rdim)
            }
        })
        .collect();
    Ok(PartialActionMap::new(ActionHost::Hopf(hopf), target, mats))
}

/// All subgroups of the cyclic group of order n, as membership vectors over
/// the standard enumeration 1, g, ..., g^{n-1}.
pub fn cyclic_subgroups(n: usize) -> Vec<Vec<bool>> {
    let mut out = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            // subgroup generated by g^(n/d), of order d
            let step = n / d;
            let mut members = vec![false; n];
            for k in 0..d {
                members[(k * step) % n] = true;
            }
            out.push(members);
        }
    }
    out
}
