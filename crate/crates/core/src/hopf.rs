//! Hopf algebras as algebra data plus explicit coproduct, counit and
//! antipode, with exhaustive axiom validation and Hopf-ideal quotients.

use crate::algebra::{AlgElement, AlgebraReport, FinAlgebra, SparseVec};
use crate::linalg::{Matrix, RowSpace};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use thiserror::Error;

/// Triples (c, j, k) representing Delta(e_i) = sum c * e_j (x) e_k.
pub type CoproductEntry = (Scalar, usize, usize);

#[derive(Clone, Debug)]
pub struct FinHopf {
    alg: FinAlgebra,
    coproduct: Vec<Vec<CoproductEntry>>,
    counit: Vec<Scalar>,
    /// Column j holds the coefficients of S(e_j).
    antipode: Matrix,
}

/// Sparse element of H (x) H.
pub type Tensor2 = BTreeMap<(usize, usize), Scalar>;
/// Sparse element of H (x) H (x) H.
pub type Tensor3 = BTreeMap<(usize, usize, usize), Scalar>;

fn tensor2_add(t: &mut Tensor2, key: (usize, usize), v: Scalar) {
    if v.is_zero() {
        return;
    }
    let entry = t.entry(key).or_insert_with(Scalar::zero);
    *entry = entry.add(&v);
    if entry.is_zero() {
        t.remove(&key);
    }
}

fn tensor3_add(t: &mut Tensor3, key: (usize, usize, usize), v: Scalar) {
    if v.is_zero() {
        return;
    }
    let entry = t.entry(key).or_insert_with(Scalar::zero);
    *entry = entry.add(&v);
    if entry.is_zero() {
        t.remove(&key);
    }
}

/// Hopf-axiom sweep results; all witness lists empty means a pass.
#[derive(Clone, Debug, Default)]
pub struct HopfReport {
    pub algebra: AlgebraReport,
    pub coassociativity_failures: Vec<usize>,
    pub counit_failures: Vec<usize>,
    pub coproduct_unit_ok: bool,
    pub counit_unit_ok: bool,
    pub coproduct_mult_failures: Vec<(usize, usize)>,
    pub counit_mult_failures: Vec<(usize, usize)>,
    pub antipode_left_failures: Vec<usize>,
    pub antipode_right_failures: Vec<usize>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.algebra.passed()
            && self.coassociativity_failures.is_empty()
            && self.counit_failures.is_empty()
            && self.coproduct_unit_ok
            && self.counit_unit_ok
            && self.coproduct_mult_failures.is_empty()
            && self.counit_mult_failures.is_empty()
            && self.antipode_left_failures.is_empty()
            && self.antipode_right_failures.is_empty()
    }
}

#[derive(Debug, Error)]
pub enum QuotientError {
    #[error("not a Hopf ideal: {condition} (witness: {witness})")]
    NotAHopfIdeal { condition: String, witness: String },
}

impl FinHopf {
    pub fn new(
        alg: FinAlgebra,
        mut coproduct: Vec<Vec<CoproductEntry>>,
        counit: Vec<Scalar>,
        antipode: Matrix,
    ) -> FinHopf {
        let dim = alg.dim();
        assert_eq!(coproduct.len(), dim);
        assert_eq!(counit.len(), dim);
        assert_eq!((antipode.rows(), antipode.cols()), (dim, dim));
        // Canonical sparse form: sorted by tensor slot, merged, zero-free.
        for entries in coproduct.iter_mut() {
            let mut acc = Tensor2::new();
            for (c, a, b) in entries.drain(..) {
                tensor2_add(&mut acc, (a, b), c);
            }
            *entries = acc.into_iter().map(|((a, b), c)| (c, a, b)).collect();
        }
        FinHopf {
            alg,
            coproduct,
            counit,
            antipode,
        }
    }

    pub fn alg(&self) -> &FinAlgebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn coproduct_entries(&self, i: usize) -> &[CoproductEntry] {
        &self.coproduct[i]
    }

    pub fn counit_value(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    pub fn counit(&self, u: &AlgElement) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, c) in u.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&c.mul(&self.counit[i]));
            }
        }
        acc
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode(&self, u: &AlgElement) -> AlgElement {
        AlgElement::from_coeffs(self.antipode.matvec(&u.coeffs))
    }

    /// Delta applied to an arbitrary element, as a sparse tensor.
    pub fn coproduct(&self, u: &AlgElement) -> Tensor2 {
        let mut out = Tensor2::new();
        for (i, c) in u.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (v, a, b) in &self.coproduct[i] {
                tensor2_add(&mut out, (*a, *b), c.mul(v));
            }
        }
        out
    }

    /// (Delta (x) id) Delta of a basis element.
    pub fn coproduct2_left(&self, i: usize) -> Tensor3 {
        let mut out = Tensor3::new();
        for (c, a, b) in &self.coproduct[i] {
            for (c2, a1, a2) in &self.coproduct[*a] {
                tensor3_add(&mut out, (*a1, *a2, *b), c.mul(c2));
            }
        }
        out
    }

    /// (id (x) Delta) Delta of a basis element.
    pub fn coproduct2_right(&self, i: usize) -> Tensor3 {
        let mut out = Tensor3::new();
        for (c, a, b) in &self.coproduct[i] {
            for (c2, b1, b2) in &self.coproduct[*b] {
                tensor3_add(&mut out, (*a, *b1, *b2), c.mul(c2));
            }
        }
        out
    }

    /// Two-fold coproduct of an arbitrary element, as sparse triples.
    pub fn sweedler3(&self, u: &AlgElement) -> Vec<(Scalar, usize, usize, usize)> {
        let mut out = Tensor3::new();
        for (i, c) in u.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for ((a, b, d), v) in self.coproduct2_left(i) {
                tensor3_add(&mut out, (a, b, d), c.mul(&v));
            }
        }
        out.into_iter().map(|((a, b, d), v)| (v, a, b, d)).collect()
    }

    /// Product in H (x) H of two sparse tensors.
    pub fn tensor_mul(&self, u: &Tensor2, v: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for ((a1, b1), c1) in u {
            for ((a2, b2), c2) in v {
                let c = c1.mul(c2);
                for (x, cx) in self.alg.basis_product(*a1, *a2) {
                    for (y, cy) in self.alg.basis_product(*b1, *b2) {
                        tensor2_add(&mut out, (*x, *y), c.mul(cx).mul(cy));
                    }
                }
            }
        }
        out
    }

    /// Full Hopf-axiom validation on all basis elements and pairs.
    pub fn validate(&self) -> HopfReport {
        let dim = self.dim();
        let mut report = HopfReport {
            algebra: self.alg.validate(),
            ..Default::default()
        };

        for i in 0..dim {
            if self.coproduct2_left(i) != self.coproduct2_right(i) {
                report.coassociativity_failures.push(i);
            }
            // (eps (x) id) Delta = id = (id (x) eps) Delta
            let mut left = AlgElement::zero(dim);
            let mut right = AlgElement::zero(dim);
            for (c, a, b) in &self.coproduct[i] {
                left.coeffs[*b] = left.coeffs[*b].add(&c.mul(&self.counit[*a]));
                right.coeffs[*a] = right.coeffs[*a].add(&c.mul(&self.counit[*b]));
            }
            let e = AlgElement::basis(dim, i);
            if left != e || right != e {
                report.counit_failures.push(i);
            }
        }

        // Delta and eps are unital algebra maps.
        let one = self.alg.unit();
        let mut unit_tensor = Tensor2::new();
        for (i, a) in one.coeffs.iter().enumerate() {
            for (j, b) in one.coeffs.iter().enumerate() {
                tensor2_add(&mut unit_tensor, (i, j), a.mul(b));
            }
        }
        report.coproduct_unit_ok = self.coproduct(&one) == unit_tensor;
        report.counit_unit_ok = self.counit(&one).is_one();

        for i in 0..dim {
            for j in 0..dim {
                let prod =
                    AlgElement::from_coeffs(sparse_to_dense(dim, self.alg.basis_product(i, j)));
                let lhs = self.coproduct(&prod);
                let di = self.coproduct(&AlgElement::basis(dim, i));
                let dj = self.coproduct(&AlgElement::basis(dim, j));
                if lhs != self.tensor_mul(&di, &dj) {
                    report.coproduct_mult_failures.push((i, j));
                }
                let eps_prod = self.counit(&prod);
                if eps_prod != self.counit[i].mul(&self.counit[j]) {
                    report.counit_mult_failures.push((i, j));
                }
            }
        }

        // Antipode axiom: m (S (x) id) Delta = u eps = m (id (x) S) Delta.
        for i in 0..dim {
            let expected = one.scale(&self.counit[i]);
            let mut left = AlgElement::zero(dim);
            let mut right = AlgElement::zero(dim);
            for (c, a, b) in &self.coproduct[i] {
                let sa = self.antipode(&AlgElement::basis(dim, *a));
                let sb = self.antipode(&AlgElement::basis(dim, *b));
                left = left.add(&self.alg.mul(&sa, &AlgElement::basis(dim, *b)).scale(c));
                right = right.add(&self.alg.mul(&AlgElement::basis(dim, *a), &sb).scale(c));
            }
            if left != expected {
                report.antipode_left_failures.push(i);
            }
            if right != expected {
                report.antipode_right_failures.push(i);
            }
        }
        report
    }

    /// All grouplike elements supported on a single basis vector. The
    /// built-in families are pointed with monomial grouplikes, so this
    /// search is exact for them; a fully general grouplike solver is
    /// intentionally out of scope.
    pub fn grouplikes(&self) -> Vec<AlgElement> {
        let dim = self.dim();
        let mut out = Vec::new();
        for i in 0..dim {
            // Candidate lambda e_i requires Delta(e_i) supported on (i, i).
            if self.coproduct[i].len() != 1 {
                continue;
            }
            let (_, a, b) = &self.coproduct[i][0];
            if *a != i || *b != i {
                continue;
            }
            let Some(lambda) = self.counit[i].inv().ok() else {
                continue;
            };
            let g = AlgElement::basis(dim, i).scale(&lambda);
            let mut gg = Tensor2::new();
            tensor2_add(&mut gg, (i, i), lambda.mul(&lambda));
            if self.coproduct(&g) == gg && self.counit(&g).is_one() {
                out.push(g);
            }
        }
        out
    }

    /// Basis of the space of (h, g)-primitives:
    /// solutions of Delta(x) = x (x) h + g (x) x.
    pub fn skew_primitives(&self, g: &AlgElement, h: &AlgElement) -> Vec<AlgElement> {
        let dim = self.dim();
        // Row (a, b), column i: coefficient of x_i in
        // Delta(e_i) - e_i (x) h - g (x) e_i at the tensor slot (a, b).
        let mut rows = vec![vec![Scalar::zero(); dim]; dim * dim];
        for i in 0..dim {
            for (c, a, b) in &self.coproduct[i] {
                rows[a * dim + b][i] = rows[a * dim + b][i].add(c);
            }
            for (b, hb) in h.coeffs.iter().enumerate() {
                if !hb.is_zero() {
                    rows[i * dim + b][i] = rows[i * dim + b][i].sub(hb);
                }
            }
            for (a, ga) in g.coeffs.iter().enumerate() {
                if !ga.is_zero() {
                    rows[a * dim + i][i] = rows[a * dim + i][i].sub(ga);
                }
            }
        }
        Matrix::from_rows(rows)
            .kernel_basis()
            .into_iter()
            .map(AlgElement::from_coeffs)
            .collect()
    }

    pub fn is_grouplike(&self, g: &AlgElement) -> bool {
        let mut gg = Tensor2::new();
        for (i, a) in g.coeffs.iter().enumerate() {
            for (j, b) in g.coeffs.iter().enumerate() {
                tensor2_add(&mut gg, (i, j), a.mul(b));
            }
        }
        self.coproduct(g) == gg && self.counit(g).is_one()
    }

    pub fn is_skew_primitive(&self, x: &AlgElement, g: &AlgElement, h: &AlgElement) -> bool {
        let mut expect = Tensor2::new();
        for (i, c) in x.coeffs.iter().enumerate() {
            for (j, d) in h.coeffs.iter().enumerate() {
                tensor2_add(&mut expect, (i, j), c.mul(d));
            }
        }
        for (i, c) in g.coeffs.iter().enumerate() {
            for (j, d) in x.coeffs.iter().enumerate() {
                tensor2_add(&mut expect, (i, j), c.mul(d));
            }
        }
        self.coproduct(x) == expect
    }

    /// Multiplicative inverse of a grouplike, solved exactly.
    pub fn grouplike_inverse(&self, g: &AlgElement) -> AlgElement {
        let l = self.alg.left_mult_matrix(g);
        AlgElement::from_coeffs(
            l.solve(&self.alg.unit().coeffs)
                .expect("grouplike must be invertible"),
        )
    }

    /// Quotient by the Hopf ideal generated by `generators`.
    ///
    /// The two-sided ideal is closed by fixed-point iteration, verified to be
    /// a coideal killed by the counit and stable under the antipode, and the
    /// quotient basis is chosen by row-reduction pivoting so surviving basis
    /// vectors keep their labels.
    pub fn quotient(&self, generators: &[AlgElement]) -> Result<FinHopf, QuotientError> {
        let dim = self.dim();
        let ideal = self.alg.ideal_closure(generators);

        // eps(I) = 0
        for v in ideal.basis() {
            let el = AlgElement::from_coeffs(v.clone());
            let eps = self.counit(&el);
            if !eps.is_zero() {
                return Err(QuotientError::NotAHopfIdeal {
                    condition: "counit must vanish on the ideal".into(),
                    witness: format!("eps({}) = {}", self.describe(&el), eps),
                });
            }
        }

        // Delta(I) inside I (x) H + H (x) I
        let mut mixed = RowSpace::new(dim * dim);
        for v in ideal.basis() {
            for j in 0..dim {
                let mut row = vec![Scalar::zero(); dim * dim];
                for (a, c) in v.iter().enumerate() {
                    row[a * dim + j] = c.clone();
                }
                mixed.insert(&row);
                let mut row = vec![Scalar::zero(); dim * dim];
                for (b, c) in v.iter().enumerate() {
                    row[j * dim + b] = c.clone();
                }
                mixed.insert(&row);
            }
        }
        for v in ideal.basis() {
            let el = AlgElement::from_coeffs(v.clone());
            let mut dense = vec![Scalar::zero(); dim * dim];
            for ((a, b), c) in self.coproduct(&el) {
                dense[a * dim + b] = c;
            }
            if !mixed.contains(&dense) {
                return Err(QuotientError::NotAHopfIdeal {
                    condition: "ideal is not a coideal".into(),
                    witness: self.describe(&el),
                });
            }
        }

        // S(I) inside I
        for v in ideal.basis() {
            let el = AlgElement::from_coeffs(v.clone());
            let s = self.antipode(&el);
            if !ideal.contains(&s.coeffs) {
                return Err(QuotientError::NotAHopfIdeal {
                    condition: "ideal is not antipode-stable".into(),
                    witness: self.describe(&el),
                });
            }
        }

        // Quotient basis: non-pivot columns keep their original labels.
        let pivots: Vec<usize> = ideal.pivots().to_vec();
        let kept: Vec<usize> = (0..dim).filter(|i| !pivots.contains(i)).collect();
        let qdim = kept.len();
        let pivot_row: BTreeMap<usize, &Vec<Scalar>> =
            pivots.iter().copied().zip(ideal.basis().iter()).collect();

        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let mut out = Vec::with_capacity(qdim);
            for (qi, &orig) in kept.iter().enumerate() {
                let _ = qi;
                let mut c = v[orig].clone();
                for (&p, row) in &pivot_row {
                    if !v[p].is_zero() && !row[orig].is_zero() {
                        c = c.sub(&v[p].mul(&row[orig]));
                    }
                }
                out.push(c);
            }
            out
        };

        let labels: Vec<String> = kept
            .iter()
            .map(|&i| self.alg.label(i).to_string())
            .collect();
        let mut mult = vec![vec![SparseVec::new(); qdim]; qdim];
        for (qi, &a) in kept.iter().enumerate() {
            for (qj, &b) in kept.iter().enumerate() {
                let prod = sparse_to_dense(dim, self.alg.basis_product(a, b));
                for (k, c) in project(&prod).into_iter().enumerate() {
                    if !c.is_zero() {
                        mult[qi][qj].push((k, c));
                    }
                }
            }
        }
        let unit = project(&self.alg.unit().coeffs);
        let qalg = FinAlgebra::new(labels, mult, unit);

        let mut coproduct = vec![Vec::new(); qdim];
        for (qi, &i) in kept.iter().enumerate() {
            let mut acc = Tensor2::new();
            for (c, a, b) in &self.coproduct[i] {
                let pa = project(&AlgElement::basis(dim, *a).coeffs);
                let pb = project(&AlgElement::basis(dim, *b).coeffs);
                for (x, cx) in pa.iter().enumerate() {
                    if cx.is_zero() {
                        continue;
                    }
                    for (y, cy) in pb.iter().enumerate() {
                        if cy.is_zero() {
                            continue;
                        }
                        tensor2_add(&mut acc, (x, y), c.mul(cx).mul(cy));
                    }
                }
            }
            coproduct[qi] = acc.into_iter().map(|((a, b), c)| (c, a, b)).collect();
        }

        let counit: Vec<Scalar> = kept.iter().map(|&i| self.counit[i].clone()).collect();

        let mut antipode = Matrix::zeros(qdim, qdim);
        for (qj, &j) in kept.iter().enumerate() {
            let s = self.antipode(&AlgElement::basis(dim, j));
            for (qi, c) in project(&s.coeffs).into_iter().enumerate() {
                antipode.set(qi, qj, c);
            }
        }

        Ok(FinHopf::new(qalg, coproduct, counit, antipode))
    }

    pub fn describe(&self, u: &AlgElement) -> String {
        let mut parts = Vec::new();
        for (i, c) in u.coeffs.iter().enumerate() {
            if !c.is_zero() {
                if c.is_one() {
                    parts.push(self.alg.label(i).to_string());
                } else {
                    parts.push(format!("({})*{}", c, self.alg.label(i)));
                }
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

pub fn sparse_to_dense(dim: usize, sv: &SparseVec) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); dim];
    for (k, c) in sv {
        out[*k] = out[*k].add(c);
    }
    out
}
