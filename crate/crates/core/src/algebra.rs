//! Finite-dimensional unital algebras as explicit structure-constant data.

use crate::linalg::{Matrix, RowSpace};
use crate::scalar::Scalar;

/// Entry list of a sparse product: e_i * e_j = sum of (index, coeff).
pub type SparseVec = Vec<(usize, Scalar)>;

/// Merge duplicate indices, drop zeros, sort by index.
pub fn normalize_sparse(sv: SparseVec) -> SparseVec {
    let mut acc: std::collections::BTreeMap<usize, Scalar> = std::collections::BTreeMap::new();
    for (k, c) in sv {
        let entry = acc.entry(k).or_insert_with(Scalar::zero);
        *entry = entry.add(&c);
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

#[derive(Clone, Debug)]
pub struct FinAlgebra {
    dim: usize,
    labels: Vec<String>,
    /// mult[i][j] lists the nonzero structure constants of e_i * e_j.
    mult: Vec<Vec<SparseVec>>,
    unit: Vec<Scalar>,
}

/// An element of a finite-dimensional algebra, as coefficients on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgElement {
    pub coeffs: Vec<Scalar>,
}

impl AlgElement {
    pub fn zero(dim: usize) -> AlgElement {
        AlgElement {
            coeffs: vec![Scalar::zero(); dim],
        }
    }

    pub fn basis(dim: usize, i: usize) -> AlgElement {
        let mut e = AlgElement::zero(dim);
        e.coeffs[i] = Scalar::one();
        e
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> AlgElement {
        AlgElement { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &AlgElement) -> AlgElement {
        AlgElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &AlgElement) -> AlgElement {
        AlgElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> AlgElement {
        AlgElement {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }
}

/// Report of an algebra-axiom sweep; empty witness lists mean a pass.
#[derive(Clone, Debug, Default)]
pub struct AlgebraReport {
    /// Basis triples (i, j, k) where (e_i e_j) e_k != e_i (e_j e_k).
    pub associativity_failures: Vec<(usize, usize, usize)>,
    /// Basis indices where 1 * e_i != e_i or e_i * 1 != e_i.
    pub unit_failures: Vec<usize>,
}

impl AlgebraReport {
    pub fn passed(&self) -> bool {
        self.associativity_failures.is_empty() && self.unit_failures.is_empty()
    }
}

impl FinAlgebra {
    pub fn new(
        labels: Vec<String>,
        mut mult: Vec<Vec<SparseVec>>,
        unit: Vec<Scalar>,
    ) -> FinAlgebra {
        let dim = labels.len();
        assert_eq!(mult.len(), dim);
        assert!(mult.iter().all(|row| row.len() == dim));
        assert_eq!(unit.len(), dim);
        // Canonical sparse form: sorted by target index, merged, zero-free.
        for row in mult.iter_mut() {
            for sv in row.iter_mut() {
                *sv = normalize_sparse(std::mem::take(sv));
            }
        }
        FinAlgebra {
            dim,
            labels,
            mult,
            unit,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> AlgElement {
        AlgElement {
            coeffs: self.unit.clone(),
        }
    }

    pub fn unit_coeffs(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i][j]
    }

    pub fn structure_constants(&self) -> &Vec<Vec<SparseVec>> {
        &self.mult
    }

    pub fn mul(&self, u: &AlgElement, v: &AlgElement) -> AlgElement {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, a) in u.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul(b);
                for (k, c) in &self.mult[i][j] {
                    out[*k] = out[*k].add(&ab.mul(c));
                }
            }
        }
        AlgElement { coeffs: out }
    }

    /// Matrix of left multiplication by `u`.
    pub fn left_mult_matrix(&self, u: &AlgElement) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul(u, &AlgElement::basis(self.dim, j));
            for i in 0..self.dim {
                if !col.coeffs[i].is_zero() {
                    m.set(i, j, col.coeffs[i].clone());
                }
            }
        }
        m
    }

    /// Matrix of right multiplication by `u`.
    pub fn right_mult_matrix(&self, u: &AlgElement) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul(&AlgElement::basis(self.dim, j), u);
            for i in 0..self.dim {
                if !col.coeffs[i].is_zero() {
                    m.set(i, j, col.coeffs[i].clone());
                }
            }
        }
        m
    }

    pub fn pow(&self, u: &AlgElement, k: u32) -> AlgElement {
        let mut acc = self.unit();
        for _ in 0..k {
            acc = self.mul(&acc, u);
        }
        acc
    }

    /// Exhaustive associativity and two-sided unit check over basis tuples.
    pub fn validate(&self) -> AlgebraReport {
        let mut report = AlgebraReport::default();
        for i in 0..self.dim {
            let e = AlgElement::basis(self.dim, i);
            if self.mul(&self.unit(), &e) != e || self.mul(&e, &self.unit()) != e {
                report.unit_failures.push(i);
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.mul(
                    &AlgElement::basis(self.dim, i),
                    &AlgElement::basis(self.dim, j),
                );
                for k in 0..self.dim {
                    let ek = AlgElement::basis(self.dim, k);
                    let lhs = self.mul(&ij, &ek);
                    let jk = self.mul(&AlgElement::basis(self.dim, j), &ek);
                    let rhs = self.mul(&AlgElement::basis(self.dim, i), &jk);
                    if lhs != rhs {
                        report.associativity_failures.push((i, j, k));
                    }
                }
            }
        }
        report
    }

    /// Basis of the center, computed as the kernel of r -> (e_i r - r e_i)_i.
    pub fn center(&self) -> Vec<AlgElement> {
        let mut rows = Vec::with_capacity(self.dim * self.dim);
        for i in 0..self.dim {
            let e = AlgElement::basis(self.dim, i);
            let l = self.left_mult_matrix(&e);
            let r = self.right_mult_matrix(&e);
            let diff = l.sub(&r);
            for row in 0..self.dim {
                rows.push(diff.row(row).to_vec());
            }
        }
        Matrix::from_rows(rows)
            .kernel_basis()
            .into_iter()
            .map(AlgElement::from_coeffs)
            .collect()
    }

    pub fn is_central(&self, u: &AlgElement) -> bool {
        for i in 0..self.dim {
            let e = AlgElement::basis(self.dim, i);
            if self.mul(u, &e) != self.mul(&e, u) {
                return false;
            }
        }
        true
    }

    /// Smallest subspace containing the generators and closed under left and
    /// right multiplication by basis elements. Terminates in at most `dim`
    /// rounds.
    pub fn ideal_closure(&self, generators: &[AlgElement]) -> RowSpace {
        let mut space = RowSpace::new(self.dim);
        for g in generators {
            space.insert(&g.coeffs);
        }
        loop {
            let mut grew = false;
            let basis: Vec<Vec<Scalar>> = space.basis().to_vec();
            for v in &basis {
                let el = AlgElement::from_coeffs(v.clone());
                for k in 0..self.dim {
                    let e = AlgElement::basis(self.dim, k);
                    grew |= space.insert(&self.mul(&e, &el).coeffs);
                    grew |= space.insert(&self.mul(&el, &e).coeffs);
                }
            }
            if !grew {
                return space;
            }
        }
    }

    // ---- stock example algebras used as action targets -----------------

    /// The full matrix algebra M_n(k) with basis e_{ab}.
    pub fn matrix_algebra(n: usize) -> FinAlgebra {
        let dim = n * n;
        let idx = |a: usize, b: usize| a * n + b;
        let mut labels = Vec::with_capacity(dim);
        for a in 0..n {
            for b in 0..n {
                labels.push(format!("e{}{}", a + 1, b + 1));
            }
        }
        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if b == c {
                            mult[idx(a, b)][idx(c, d)].push((idx(a, d), Scalar::one()));
                        }
                    }
                }
            }
        }
        let mut unit = vec![Scalar::zero(); dim];
        for a in 0..n {
            unit[idx(a, a)] = Scalar::one();
        }
        FinAlgebra::new(labels, mult, unit)
    }

    /// k^n with componentwise product.
    pub fn product_field(n: usize) -> FinAlgebra {
        let labels = (0..n).map(|i| format!("e{}", i + 1)).collect();
        let mut mult = vec![vec![Vec::new(); n]; n];
        for (i, row) in mult.iter_mut().enumerate() {
            row[i].push((i, Scalar::one()));
        }
        FinAlgebra::new(labels, mult, vec![Scalar::one(); n])
    }

    /// Upper-triangular 2x2 matrices, basis e11, e12, e22.
    pub fn upper_triangular2() -> FinAlgebra {
        let labels = vec!["e11".into(), "e12".into(), "e22".into()];
        let mut mult = vec![vec![Vec::new(); 3]; 3];
        // e11 e11 = e11, e11 e12 = e12, e12 e22 = e12, e22 e22 = e22
        mult[0][0].push((0, Scalar::one()));
        mult[0][1].push((1, Scalar::one()));
        mult[1][2].push((1, Scalar::one()));
        mult[2][2].push((2, Scalar::one()));
        let unit = vec![Scalar::one(), Scalar::zero(), Scalar::one()];
        FinAlgebra::new(labels, mult, unit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_algebra_is_associative() {
        let m2 = FinAlgebra::matrix_algebra(2);
        assert!(m2.validate().passed());
        let kk = FinAlgebra::product_field(2);
        assert!(kk.validate().passed());
        assert!(FinAlgebra::upper_triangular2().validate().passed());
    }

    #[test]
    fn perturbed_tensor_fails_with_witness() {
        let mut m2 = FinAlgebra::matrix_algebra(2);
        // Perturb c[0][0][0] by 1: e11*e11 = 2 e11. Squares stay consistent
        // by bilinearity, so the first witnesses involve a third index.
        m2.mult[0][0][0].1 = Scalar::from_int(2);
        let report = m2.validate();
        assert!(!report.passed());
        assert!(report.associativity_failures.contains(&(0, 0, 1)));
        assert!(report.unit_failures.contains(&0));
    }

    #[test]
    fn centers_of_stock_algebras() {
        let m2 = FinAlgebra::matrix_algebra(2);
        let z = m2.center();
        assert_eq!(z.len(), 1);
        assert!(m2.is_central(&z[0]));
        assert_eq!(FinAlgebra::product_field(3).center().len(), 3);
        // Upper triangular 2x2 has center spanned by the identity.
        let ut = FinAlgebra::upper_triangular2();
        let z = ut.center();
        assert_eq!(z.len(), 1);
        assert_eq!(z[0], ut.unit());
    }

    #[test]
    fn ideal_closure_of_matrix_unit_is_everything() {
        let m2 = FinAlgebra::matrix_algebra(2);
        let e12 = AlgElement::basis(4, 1);
        assert_eq!(m2.ideal_closure(&[e12]).dim(), 4);
        // In k x k the ideal generated by e1 is 1-dimensional.
        let kk = FinAlgebra::product_field(2);
        let e1 = AlgElement::basis(2, 0);
        assert_eq!(kk.ideal_closure(&[e1]).dim(), 1);
    }
}
