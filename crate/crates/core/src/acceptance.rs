//! The acceptance suite: ten exact, self-contained criteria covering the
//! q-combinatorics identities, Hopf validation of every built-in family,
//! Panov checking, the extension formula and its converse, truncation,
//! quotient factorization, the rank-one classification certificates, the
//! Nichols path equality, and the derived-example registry.
//!
//! Everything is exact cyclotomic arithmetic; the tolerance of every
//! comparison is zero.

use crate::algebra::{AlgElement, FinAlgebra};
use crate::families::{
    cyclic_group_algebra, cyclic_ore_datum, global_sweedler_ore_action, group_indicator_action,
    nichols, nichols_partial_action, rank_one, rank_one_via_quotient, sweedler, sweedler_ore_datum,
    sweedler_partial_action, RankOneDatum,
};
use crate::linalg::Matrix;
use crate::oracle::{classify_rank_one, SearchGrid};
use crate::ore::HopfOreDatum;
use crate::paction::extension::{
    check_cod_volta, check_factorization_nilp, check_factorization_nonnilp,
    check_formula_necessity, check_truncation_lemma, extend_formula, extend_formula_on,
    extend_trivial, induce_quotient_action, FactorizationCase, OreIdeal,
};
use crate::paction::{verify_axioms, ActionHost, PartialActionMap, VerifyOptions};
use crate::qcomb::{gauss_polynomial, QBinomTable, QIdentityChecker};
use crate::scalar::Scalar;
use rayon::prelude::*;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub index: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {:2} {:<28} {}  {}",
            self.index,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.detail
        )
    }
}

/// Optional fault injection used to demonstrate that the suite detects a
/// broken identity; `qcomb-idq` flips the id_q comparison.
#[derive(Clone, Copy, Debug, Default)]
pub struct SelftestConfig<'a> {
    pub mutate: Option<&'a str>,
}

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn elem(dim: usize, entries: &[(usize, i64)]) -> AlgElement {
    let mut v = AlgElement::zero(dim);
    for (i, c) in entries {
        v.coeffs[*i] = s(*c);
    }
    v
}

fn outcome(index: usize, name: &'static str, result: Result<String, String>) -> CriterionOutcome {
    match result {
        Ok(detail) => CriterionOutcome {
            index,
            name,
            passed: true,
            detail,
        },
        Err(detail) => CriterionOutcome {
            index,
            name,
            passed: false,
            detail,
        },
    }
}

/// All primitive N-th roots of unity for N in the range.
fn primitive_roots_up_to(max_n: u32) -> Vec<Scalar> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let z = Scalar::primitive_root(n);
        for k in 1..=n {
            if num_integer::gcd(k, n) == 1 {
                out.push(z.pow(k as i64).unwrap());
            }
        }
    }
    out
}

// ---------------------------------------------------------------- 1: qcomb

pub fn criterion_qcomb(cfg: &SelftestConfig) -> CriterionOutcome {
    let mutate_idq = cfg.mutate == Some("qcomb-idq");
    let result = (|| -> Result<String, String> {
        // (a) scalar recurrence vs polynomial oracle on n <= 20
        let mut oracle_qs: Vec<Scalar> = (1..=12).map(Scalar::primitive_root).collect();
        oracle_qs.push(s(2));
        oracle_qs.push(Scalar::from_rat("-3/2".parse().unwrap()));
        let failures: Vec<String> = oracle_qs
            .par_iter()
            .flat_map(|q| {
                let table = QBinomTable::new(q.clone());
                let mut local = Vec::new();
                for n in 0..=20u32 {
                    for m in 0..=n as i64 {
                        if table.get(n, m) != gauss_polynomial(n, m).eval(q) {
                            local.push(format!("oracle mismatch at ({n}, {m}, {q})"));
                        }
                    }
                }
                local
            })
            .collect();
        if !failures.is_empty() {
            return Err(failures[0].clone());
        }

        // (b) identities on the full grid, q over primitive roots N <= 8
        let qs = primitive_roots_up_to(8);
        let failures: Vec<String> = qs
            .par_iter()
            .flat_map(|q| {
                let checker = QIdentityChecker::new(q.clone());
                let mut local = Vec::new();
                for n in 0..=12u32 {
                    for m in 0..=n as i64 {
                        let ok = checker.idq(n, m);
                        let ok = if mutate_idq { !ok } else { ok };
                        if !ok {
                            local.push(format!("id_q fails at ({n}, {m}, {q})"));
                        }
                        match checker.radford(n, m) {
                            Ok(true) => {}
                            Ok(false) => local.push(format!("radford fails at ({n}, {m}, {q})")),
                            Err(e) => local.push(e.to_string()),
                        }
                    }
                }
                for i in 0..=12u32 {
                    for j in 0..=12u32 {
                        for k in 0..=12u32 {
                            if !checker.subset(i, j, k) {
                                local.push(format!("subset identity fails at ({i},{j},{k},{q})"));
                            }
                            if !checker.alternating(i, j, k) {
                                local.push(format!(
                                    "alternating identity fails at ({i},{j},{k},{q})"
                                ));
                            }
                        }
                    }
                }
                local
            })
            .collect();
        if !failures.is_empty() {
            return Err(failures[0].clone());
        }
        Ok(format!(
            "oracle grid n<=20 over {} values of q; identity grid <=12 over {} roots",
            oracle_qs.len(),
            qs.len()
        ))
    })();
    outcome(1, "q-combinatorics suite", result)
}

// ------------------------------------------------------- 2: Hopf validation

pub fn criterion_hopf_validation(_cfg: &SelftestConfig) -> CriterionOutcome {
    let result = (|| -> Result<String, String> {
        let mut count = 0usize;
        let mut check = |name: String, h: &crate::hopf::FinHopf| -> Result<(), String> {
            let report = h.validate();
            if !report.passed() {
                return Err(format!("{name} fails Hopf validation"));
            }
            count += 1;
            Ok(())
        };
        check("H4".into(), &sweedler())?;
        for n in 1..=6 {
            check(format!("kC_{n}"), &cyclic_group_algebra(n))?;
        }
        for (n, d) in [(2u32, 2u32), (4, 2), (6, 2), (8, 2), (3, 3), (4, 4)] {
            let q = Scalar::primitive_root(d);
            for beta in [false, true] {
                let datum =
                    RankOneDatum::cyclic(n, d, q.clone(), beta).map_err(|e| e.to_string())?;
                let direct = rank_one(&datum).map_err(|e| e.to_string())?;
                let name = if beta {
                    format!("R_({n},{d})")
                } else {
                    format!("H_({n},{d})")
                };
                check(name.clone(), &direct)?;
                let via = rank_one_via_quotient(&datum).map_err(|e| e.to_string())?;
                if direct.alg().structure_constants() != via.alg().structure_constants()
                    || direct.antipode_matrix() != via.antipode_matrix()
                {
                    return Err(format!("{name}: construction paths disagree"));
                }
                for i in 0..direct.dim() {
                    if direct.coproduct_entries(i) != via.coproduct_entries(i)
                        || direct.counit_value(i) != via.counit_value(i)
                    {
                        return Err(format!("{name}: coalgebra paths disagree"));
                    }
                }
            }
        }
        for n in 2..=4 {
            let (h, _) = nichols(n).map_err(|e| e.to_string())?;
            check(format!("H_2^{n}"), &h)?;
        }
        Ok(format!(
            "{count} family instances validate; rank-one paths agree"
        ))
    })();
    outcome(2, "Hopf validation", result)
}

// ------------------------------------------------------------------ 3: Panov

pub fn criterion_panov(_cfg: &SelftestConfig) -> CriterionOutcome {
    let result = (|| -> Result<String, String> {
        let datum = sweedler_ore_datum();
        if datum.chi() != [s(1), s(-1), s(0), s(0)] {
            return Err("H4[y, sigma] character wrong".into());
        }
        for (n, q) in [
            (2usize, s(-1)),
            (3, Scalar::primitive_root(3)),
            (4, Scalar::primitive_root(4)),
        ] {
            let datum = cyclic_ore_datum(n, &q).map_err(|e| e.to_string())?;
            if &datum.chi()[1] != &q {
                return Err(format!("kC_{n}[x, sigma] character wrong"));
            }
        }
        // mutation of sigma on one basis element is rejected with a witness
        let base = Arc::new(sweedler());
        let mut sigma = Matrix::zeros(4, 4);
        sigma.set(0, 0, s(1));
        sigma.set(1, 1, s(-1));
        sigma.set(2, 2, s(1)); // sigma(x) = +x
        sigma.set(3, 3, s(1));
        match crate::ore::panov_check(&base, &sigma, &Matrix::zeros(4, 4), 1) {
            Err(crate::ore::OreError::PanovViolation { basis, identity }) => {
                if basis >= 4 {
                    return Err("witness index out of range".into());
                }
                Ok(format!(
                    "accepts H4[y] and kC_n[x]; rejects mutated sigma at basis {basis} ({identity})"
                ))
            }
            other => Err(format!("mutated sigma not rejected: {other:?}")),
        }
    })();
    outcome(3, "Panov validation", result)
}

// ------------------------------------------- 4: extension formula necessity

/// The registered fixtures: verified partial actions on truncated
/// extensions with g . 1_R = 0, built along different routes.
fn necessity_fixtures() -> Result<Vec<(String, PartialActionMap)>, String> {
    let mut out: Vec<(String, PartialActionMap)> = Vec::new();
    let datum = sweedler_ore_datum();

    let pa = sweedler_partial_action(Arc::new(FinAlgebra::matrix_algebra(2)), &elem(4, &[(1, 1)]))
        .map_err(|e| e.to_string())?;
    for (name, w) in [
        ("sweedler e12/e12", elem(4, &[(1, 1)])),
        ("sweedler e12/e21", elem(4, &[(2, 1)])),
        ("sweedler e12/diag", elem(4, &[(0, 1), (3, -1)])),
        ("sweedler trivial", AlgElement::zero(4)),
    ] {
        let ext = extend_formula(&pa, &datum, &w, 5).map_err(|e| e.to_string())?;
        out.push((name.to_string(), ext));
    }
    let trivial = extend_trivial(&pa, &datum, 5).map_err(|e| e.to_string())?;
    out.push(("sweedler trivial-extension".into(), trivial));

    // pullback of the induced H8 action along the projection
    let ext = extend_formula(&pa, &datum, &elem(4, &[(1, 1)]), 5).map_err(|e| e.to_string())?;
    let (_, h8_action) =
        induce_quotient_action(&ext, OreIdeal::PowerOfX(2)).map_err(|e| e.to_string())?;
    let host = match ext.host() {
        ActionHost::Ore(o) => o.clone(),
        _ => unreachable!(),
    };
    let mut mats = Vec::new();
    for j in 0..=host.cap() {
        for i in 0..4 {
            // x^j e_i projects to x^(j) e_i for j < 2 and to 0 otherwise
            if j < 2 {
                mats.push(h8_action.matrix(j * 4 + i).clone());
            } else {
                mats.push(Matrix::zeros(4, 4));
            }
        }
    }
    out.push((
        "pullback of H8 action".into(),
        PartialActionMap::new(ext.host().clone(), ext.target().clone(), mats),
    ));

    // a cyclic fixture at order 3
    let q = Scalar::primitive_root(3);
    let datum3 = cyclic_ore_datum(3, &q).map_err(|e| e.to_string())?;
    let base = datum3.base().clone();
    let pa3 = group_indicator_action(
        base,
        &[true, false, false],
        Arc::new(FinAlgebra::product_field(2)),
    )
    .map_err(|e| e.to_string())?;
    let ext3 =
        extend_formula(&pa3, &datum3, &elem(2, &[(0, 1), (1, 2)]), 7).map_err(|e| e.to_string())?;
    out.push(("kC_3 indicator".into(), ext3));

    Ok(out)
}

pub fn criterion_formula_necessity(_cfg: &SelftestConfig) -> CriterionOutcome {
    let result = (|| -> Result<String, String> {
        let fixtures = necessity_fixtures()?;
        for (name, pa) in &fixtures {
            let ax = verify_axioms(
                pa,
                VerifyOptions {
                    symmetric: false,
                    pa2prime: false,
                },
            );
            if !ax.passed() {
                return Err(format!("fixture `{name}` is not a partial action"));
            }
            let check = check_formula_necessity(pa).map_err(|e| e.to_string())?;
            if !check.passed() {
                return Err(format!("fixture `{name}` deviates from the formula"));
            }
        }
        Ok(format!(
            "{} fixtures reproduce the formula exactly",
            fixtures.len()
        ))
    })();
    outcome(4, "extension formula necessity", result)
}

// ------------------------------------- 5: Sweedler equivalence on the grid

pub fn criterion_sweedler_equivalence(_cfg: &SelftestConfig) -> CriterionOutcome {
    let result = (|| -> Result<String, String> {
        let datum = sweedler_ore_datum();
        let host =
            Arc::new(crate::ore::TruncatedOre::new(datum.clone(), 5).map_err(|e| e.to_string())?);
        let grid = SearchGrid::zero_pm_one();
        let targets: Vec<(&str, Arc<FinAlgebra>)> = vec![
            ("k^2", Arc::new(FinAlgebra::product_field(2))),
            ("ut2", Arc::new(FinAlgebra::upper_triangular2())),
            ("M_2", Arc::new(FinAlgebra::matrix_algebra(2))),
        ];
        let mut total = 0usize;
        let mut counterexample_seen = false;
        for (name, target) in &targets {
            let rdim = target.dim();
            let omegas: Vec<AlgElement> = grid
                .vectors(rdim)
                .into_iter()
                .filter(|omega| {
                    let sq = target.mul(omega, omega);
                    target.is_central(&sq)
                })
                .collect();
            let ws = grid.vectors(rdim);
            let mut points = Vec::new();
            for omega in &omegas {
                for w in &ws {
                    points.push((omega.clone(), w.clone()));
                }
            }
            total += points.len();
            let results: Vec<Result<(bool, bool), String>> = points
                .par_iter()
                .map(|(omega, w)| {
                    let pa = sweedler_partial_action(target.clone(), omega)
                        .map_err(|e| e.to_string())?;
                    let ext = extend_formula_on(&host, &pa, w).map_err(|e| e.to_string())?;
                    let axioms_pass = verify_axioms(
                        &ext,
                        VerifyOptions { symmetric: true, pa2prime: false },
                    )
                    .passed();
                    let anti = target.mul(omega, w).add(&target.mul(w, omega));
                    let central = target.is_central(&anti);
                    let cod = check_cod_volta(&pa, &datum, w, true, 4)
                        .map_err(|e| e.to_string())?;
                    let summation = cod.summation.passed()
                        && cod.symmetric.as_ref().map_or(false, |c| c.passed());
                    if axioms_pass != central || central != summation {
                        return Err(format!(
                            "equivalence fails on {name}: axioms={axioms_pass} central={central} summation={summation}"
                        ));
                    }
                    let pointwise = cod.pointwise.passed();
                    Ok((summation, pointwise))
                })
                .collect();
            for r in results {
                let (summation, pointwise) = r?;
                if summation && !pointwise {
                    counterexample_seen = true;
                }
            }
        }
        if !counterexample_seen {
            return Err("no grid point separates the summation and pointwise conditions".into());
        }
        Ok(format!(
            "3-way equivalence over {total} grid points; pointwise/summation separation exhibited"
        ))
    })();
    outcome(5, "Sweedler grid equivalence", result)
}

// ----------------------------------------------------------- 6: truncation

pub fn criterion_truncation(_cfg: &SelftestConfig) -> CriterionOutcome {
    let result = (|| -> Result<String, String> {
        // M = 2 on Sweedler fixtures
        let datum = sweedler_ore_datum();
        let pa =
            sweedler_partial_action(Arc::new(FinAlgebra::matrix_algebra(2)), &elem(4, &[(1, 1)]))
                .map_err(|e| e.to_string())?;
        for w in [elem(4, &[(1, 1)]), elem(4, &[(2, 1)]), AlgElement::zero(4)] {
            let rep = check_truncation_lemma(&pa, &datum, &w, 2).map_err(|e| e.to_string())?;
            if !rep.passed() {
                return Err("M = 2 truncation fails on a Sweedler fixture".into());
            }
        }
        // the vanishing hypotheses hold for w = e12 (w^2 = 0 central)
        let rep = check_truncation_lemma(&pa, &datum, &elem(4, &[(1, 1)]), 2)
            .map_err(|e| e.to_string())?;
        if !rep.vanishing_applies || rep.vanishing.is_none() {
            return Err("vanishing case not exercised at M = 2".into());
        }

        // M = 3 on kC_3[x, sigma] with w^3 central
        let q = Scalar::primitive_root(3);
        let datum3 = cyclic_ore_datum(3, &q).map_err(|e| e.to_string())?;
        let base = datum3.base().clone();
        let pa3 = group_indicator_action(
            base,
            &[true, false, false],
            Arc::new(FinAlgebra::product_field(2)),
        )
        .map_err(|e| e.to_string())?;
        let w3 = elem(2, &[(0, 1), (1, 2)]);
        let rep = check_truncation_lemma(&pa3, &datum3, &w3, 3).map_err(|e| e.to_string())?;
        if !rep.vanishing_applies || !rep.passed() {
            return Err("M = 3 truncation fails on the kC_3 fixture".into());
        }
        // and a noncommutative instance with a nilpotent w
        let pam = group_indicator_action(
            datum3.base().clone(),
            &[true, false, false],
            Arc::new(FinAlgebra::matrix_algebra(2)),
        )
        .map_err(|e| e.to_string())?;
        let rep = check_truncation_lemma(&pam, &datum3, &elem(4, &[(1, 1)]), 3)
            .map_err(|e| e.to_string())?;
        if !rep.passed() {
            return Err("M = 3 truncation fails on the M_2 fixture".into());
        }
        Ok("items (i)-(iii) verified at M = 2 and M = 3 up to degree 2M".into())
    })();
    outcome(6, "truncation lemma", result)
}

// --------------------------------------------------- 7: quotient factorization

pub fn criterion_factorization(_cfg: &SelftestConfig) -> CriterionOutcome {
    let result = (|| -> Result<String, String> {
        let m2: Arc<FinAlgebra> = Arc::new(FinAlgebra::matrix_algebra(2));
        let mut quotients = Vec::new();

        // <x^d> case (i): global H4[y] action with 2-nilpotent derivations
        let mut alpha = Matrix::zeros(4, 4);
        for (i, v) in [1i64, -1, -1, 1].into_iter().enumerate() {
            alpha.set(i, i, s(v));
        }
        let e12 = elem(4, &[(1, 1)]);
        let d_in = m2
            .left_mult_matrix(&e12)
            .sub(&m2.right_mult_matrix(&e12).mul(&alpha));
        let pa = global_sweedler_ore_action(m2.clone(), &alpha, &d_in, &d_in, 4)
            .map_err(|e| e.to_string())?;
        let rep = check_factorization_nilp(&pa, 2).map_err(|e| e.to_string())?;
        if rep.case != Some(FactorizationCase::GlobalNilpotent) || !rep.verified() {
            return Err("case (i) of the nilpotent factorization fails".into());
        }
        let (h8, act) =
            induce_quotient_action(&pa, OreIdeal::PowerOfX(2)).map_err(|e| e.to_string())?;
        if !verify_axioms(&act, VerifyOptions::default()).passed() {
            return Err("induced H8 action from case (i) fails".into());
        }
        quotients.push(("H_8", h8.dim()));

        // <x^d> case (ii): g . 1 = 0 and w = 0 on kC_2[x, sigma] -> H_{2,2}
        let datum2 = cyclic_ore_datum(2, &s(-1)).map_err(|e| e.to_string())?;
        let pa0 = group_indicator_action(datum2.base().clone(), &[true, false], m2.clone())
            .map_err(|e| e.to_string())?;
        let ext =
            extend_formula(&pa0, &datum2, &AlgElement::zero(4), 5).map_err(|e| e.to_string())?;
        let rep = check_factorization_nilp(&ext, 2).map_err(|e| e.to_string())?;
        if rep.case != Some(FactorizationCase::ZeroW) || !rep.verified() {
            return Err("case (ii) of the nilpotent factorization fails".into());
        }
        let (h22, act) =
            induce_quotient_action(&ext, OreIdeal::PowerOfX(2)).map_err(|e| e.to_string())?;
        if !verify_axioms(&act, VerifyOptions::default()).passed() {
            return Err("induced H_{2,2} action from case (ii) fails".into());
        }
        quotients.push(("H_{2,2}", h22.dim()));

        // <x^d> case (iii): w = diag(1, -1), w^2 = 1 central
        let ext = extend_formula(&pa0, &datum2, &elem(4, &[(0, 1), (3, -1)]), 5)
            .map_err(|e| e.to_string())?;
        let rep = check_factorization_nilp(&ext, 2).map_err(|e| e.to_string())?;
        if rep.case != Some(FactorizationCase::Bracket) || !rep.verified() {
            return Err("case (iii) of the nilpotent factorization fails".into());
        }
        let (h4, act) =
            induce_quotient_action(&ext, OreIdeal::PowerOfX(2)).map_err(|e| e.to_string())?;
        if !verify_axioms(&act, VerifyOptions::default()).passed() {
            return Err("induced H_4 action from case (iii) fails".into());
        }
        quotients.push(("H_4", h4.dim()));

        // <x^d + g^d - 1> case (i): global action with D^2 = 0
        let host = crate::ore::TruncatedOre::new(datum2.clone(), 4).map_err(|e| e.to_string())?;
        let mut mats = Vec::new();
        let mut d_pow = Matrix::identity(4);
        for j in 0..=4usize {
            if j > 0 {
                d_pow = d_in.mul(&d_pow);
            }
            mats.push(d_pow.clone());
            mats.push(d_pow.mul(&alpha));
        }
        let global = PartialActionMap::new(ActionHost::Ore(Arc::new(host)), m2.clone(), mats);
        let rep = check_factorization_nonnilp(&global, 2).map_err(|e| e.to_string())?;
        if rep.case != Some(FactorizationCase::GlobalNonNilpotent) || !rep.verified() {
            return Err("case (i) of the non-nilpotent factorization fails".into());
        }
        let (r22, act) = induce_quotient_action(&global, OreIdeal::PowerPlusGroup(2))
            .map_err(|e| e.to_string())?;
        if !verify_axioms(&act, VerifyOptions::default()).passed() {
            return Err("induced R_{2,2} action from case (i) fails".into());
        }
        quotients.push(("R_{2,2} global", r22.dim()));

        // <x^d + g^d - 1> case (ii): bracket condition with w^2 = 1
        let ext = extend_formula(&pa0, &datum2, &elem(4, &[(0, 1), (3, -1)]), 5)
            .map_err(|e| e.to_string())?;
        let rep = check_factorization_nonnilp(&ext, 2).map_err(|e| e.to_string())?;
        if rep.case != Some(FactorizationCase::BracketNonNilpotent) || !rep.verified() {
            return Err("case (ii) of the non-nilpotent factorization fails".into());
        }
        let (r22, act) =
            induce_quotient_action(&ext, OreIdeal::PowerPlusGroup(2)).map_err(|e| e.to_string())?;
        if !verify_axioms(&act, VerifyOptions::default()).passed() {
            return Err("induced R_{2,2} action from case (ii) fails".into());
        }
        quotients.push(("R_{2,2}", r22.dim()));

        let names: Vec<String> = quotients
            .iter()
            .map(|(n, d)| format!("{n} (dim {d})"))
            .collect();
        Ok(format!(
            "all five cases verified; quotients: {}",
            names.join(", ")
        ))
    })();
    outcome(7, "quotient factorization", result)
}

// -------------------------------------------------- 8: rank-one classification

pub fn criterion_classification(_cfg: &SelftestConfig) -> CriterionOutcome {
    let result = (|| -> Result<String, String> {
        let grid = SearchGrid::zero_pm_one();
        let targets: Vec<(&str, Arc<FinAlgebra>)> = vec![
            ("k^2", Arc::new(FinAlgebra::product_field(2))),
            ("M_2", Arc::new(FinAlgebra::matrix_algebra(2))),
        ];
        let data = vec![
            (
                "H_{2,2} (Sweedler)",
                RankOneDatum::cyclic(2, 2, s(-1), false).map_err(|e| e.to_string())?,
            ),
            (
                "H_{4,2}(-1)",
                RankOneDatum::cyclic(4, 2, s(-1), false).map_err(|e| e.to_string())?,
            ),
            (
                "R_{2,2}(-1)",
                RankOneDatum::cyclic(2, 2, s(-1), true).map_err(|e| e.to_string())?,
            ),
        ];
        let mut details = Vec::new();
        for (name, datum) in &data {
            for (tname, target) in &targets {
                let cert = classify_rank_one(datum, target, &grid).map_err(|e| e.to_string())?;
                if !cert.matches {
                    return Err(format!("certificate mismatch for {name} on {tname}"));
                }
                let found: usize = cert.cases.iter().map(|c| c.found.len()).sum();
                details.push(format!("{name}/{tname}: {found} actions"));
            }
        }
        Ok(details.join("; "))
    })();
    outcome(8, "rank-one classification", result)
}

// ----------------------------------------------------- 9: Nichols path equality

pub fn criterion_nichols_paths(_cfg: &SelftestConfig) -> CriterionOutcome {
    let result = (|| -> Result<String, String> {
        let grid = SearchGrid::zero_pm_one();
        let target: Arc<FinAlgebra> = Arc::new(FinAlgebra::product_field(2));
        let ws = grid.vectors(2);
        let mut checked = 0usize;
        let mut sigma = Matrix::zeros(4, 4);
        for (i, v) in [1i64, -1, -1, 1].into_iter().enumerate() {
            sigma.set(i, i, s(v));
        }
        let datum = HopfOreDatum::new(Arc::new(sweedler()), sigma, Matrix::zeros(4, 4), 1, "x2")
            .map_err(|e| e.to_string())?;
        let host =
            Arc::new(crate::ore::TruncatedOre::new(datum.clone(), 4).map_err(|e| e.to_string())?);
        let (h8, info) = nichols(3).map_err(|e| e.to_string())?;
        let results: Vec<Result<(), String>> = ws
            .par_iter()
            .flat_map(|w1| ws.par_iter().map(move |w2| (w1.clone(), w2.clone())))
            .map(|(w1, w2)| {
                let direct = nichols_partial_action(3, target.clone(), &[w1.clone(), w2.clone()])
                    .map_err(|e| e.to_string())?;
                let base_pa =
                    sweedler_partial_action(target.clone(), &w1).map_err(|e| e.to_string())?;
                let ext = extend_formula_on(&host, &base_pa, &w2).map_err(|e| e.to_string())?;
                let (_, composite) = induce_quotient_action(&ext, OreIdeal::PowerOfX(2))
                    .map_err(|e| e.to_string())?;
                if composite != direct {
                    return Err(format!(
                        "path equality fails at w1 = {:?}, w2 = {:?}",
                        w1.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        w2.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>()
                    ));
                }
                // length >= 2 monomials act as zero, exactly
                for (idx, inf) in info.iter().enumerate() {
                    if inf.xs.len() >= 2 && !direct.matrix(idx).is_zero() {
                        return Err(format!(
                            "monomial {} does not act as zero",
                            h8.alg().label(idx)
                        ));
                    }
                }
                Ok(())
            })
            .collect();
        for r in results {
            r?;
            checked += 1;
        }
        Ok(format!(
            "{checked} (w1, w2) grid points agree matrix-for-matrix"
        ))
    })();
    outcome(9, "Nichols path equality", result)
}

// ---------------------------------------------------- 10: derived examples

pub fn criterion_derived_examples(_cfg: &SelftestConfig) -> CriterionOutcome {
    let result = (|| -> Result<String, String> {
        let examples = crate::derived::derived_examples();
        let failures: Vec<String> = examples
            .par_iter()
            .filter_map(|(tag, check)| check().err().map(|msg| format!("{tag}: {msg}")))
            .collect();
        if let Some(first) = failures.first() {
            return Err(first.clone());
        }
        Ok(format!("{} derived examples recomputed", examples.len()))
    })();
    outcome(10, "derived examples", result)
}

/// Run all criteria (or the ones whose name contains `filter`).
pub fn run_all(cfg: &SelftestConfig, filter: Option<&str>) -> Vec<CriterionOutcome> {
    let criteria: Vec<(&str, fn(&SelftestConfig) -> CriterionOutcome)> = vec![
        ("qcomb", criterion_qcomb),
        ("hopf", criterion_hopf_validation),
        ("panov", criterion_panov),
        ("necessity", criterion_formula_necessity),
        ("equivalence", criterion_sweedler_equivalence),
        ("truncation", criterion_truncation),
        ("factorization", criterion_factorization),
        ("classification", criterion_classification),
        ("nichols", criterion_nichols_paths),
        ("derived", criterion_derived_examples),
    ];
    criteria
        .into_iter()
        .filter(|(name, _)| filter.map_or(true, |f| name.contains(f)))
        .map(|(_, run)| run(cfg))
        .collect()
}
