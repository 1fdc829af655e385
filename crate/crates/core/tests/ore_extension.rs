//! Hopf-Ore data: Panov validation, skew multiplication, monomial
//! coproducts, truncated windows, and the finite quotients.

use hopfact::algebra::AlgElement;
use hopfact::families::{cyclic_group_algebra, cyclic_ore_datum, sweedler, sweedler_ore_datum};
use hopfact::linalg::Matrix;
use hopfact::ore::{
    build_truncated, ore_coproduct, ore_multiply, panov_check, quotient_nilpotent,
    quotient_rank_one_nonnilp, HopfOreDatum, OreError, OreMonomial,
};
use hopfact::scalar::Scalar;
use std::sync::Arc;

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

#[test]
fn panov_accepts_the_sweedler_datum() {
    let datum = sweedler_ore_datum();
    // chi = eps o sigma on the basis 1, g, x, gx
    assert_eq!(datum.chi(), &[s(1), s(-1), s(0), s(0)]);
    assert_eq!(datum.q(), &s(-1));
    assert_eq!(datum.order_of_q(), Some(2));
    assert_eq!(datum.default_cap(), 5);
}

#[test]
fn panov_accepts_cyclic_data() {
    for (n, q) in [
        (2, s(-1)),
        (3, Scalar::primitive_root(3)),
        (4, Scalar::primitive_root(4)),
    ] {
        let datum = cyclic_ore_datum(n, &q).unwrap();
        assert_eq!(&datum.chi()[1], &q);
    }
}

#[test]
fn panov_rejects_a_mutated_sigma() {
    let base = Arc::new(sweedler());
    let mut sigma = Matrix::zeros(4, 4);
    sigma.set(0, 0, s(1));
    sigma.set(1, 1, s(-1));
    sigma.set(2, 2, s(1)); // mutated: sigma(x) = +x
    sigma.set(3, 3, s(-1));
    let err = panov_check(&base, &sigma, &Matrix::zeros(4, 4), 1).unwrap_err();
    match err {
        OreError::PanovViolation {
            basis,
            ref identity,
        } => {
            // first failure is the multiplicativity of sigma at a pair
            // involving x, or the character identity at x itself
            assert!(basis == 2 || identity.contains('x'), "{err}");
        }
        other => panic!("unexpected error {other}"),
    }
}

#[test]
fn sigma_inverse_power_routes_agree() {
    let datum = sweedler_ore_datum();
    let dim = 4;
    for i in 0..=6u32 {
        for b in 0..dim {
            let e = AlgElement::basis(dim, b);
            let by_matrix = datum.sigma_inverse_power(&e, i as i64);
            let by_coproduct = datum.sigma_inverse_power_via_coproduct(&e, i);
            assert_eq!(by_matrix, by_coproduct, "sweedler basis {b}, power {i}");
        }
    }
    // sigma^{-i}(g^k) = chi(g)^{-ik} g^k on a cyclic datum
    let q = Scalar::primitive_root(3);
    let datum = cyclic_ore_datum(3, &q).unwrap();
    for i in 0..=6i64 {
        for k in 0..3usize {
            let e = AlgElement::basis(3, k);
            let lhs = datum.sigma_inverse_power(&e, i);
            let rhs = e.scale(&q.pow(-i * k as i64).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn ore_multiply_left_normalizes() {
    let datum = sweedler_ore_datum();
    // y * g stays y*(g) in left form; moving g past y instead picks up
    // sigma: g * y = y * sigma^{-1}(g) = y * (-g). Together: y g = -g y.
    let y = OreMonomial::new(1, AlgElement::basis(4, 0));
    let g = OreMonomial::new(0, AlgElement::basis(4, 1));
    let yg = ore_multiply(&datum, &y, &g, 5).unwrap();
    assert_eq!(yg.len(), 1);
    assert_eq!(yg[0].degree, 1);
    assert_eq!(yg[0].coeff, AlgElement::basis(4, 1));
    let gy = ore_multiply(&datum, &g, &y, 5).unwrap();
    assert_eq!(gy.len(), 1);
    assert_eq!(gy[0].degree, 1);
    assert_eq!(gy[0].coeff, yg[0].coeff.scale(&s(-1)));
    // degree-0 products embed the base algebra
    let m1 = OreMonomial::new(0, AlgElement::basis(4, 2));
    let m2 = OreMonomial::new(0, AlgElement::basis(4, 1));
    let prod = ore_multiply(&datum, &m1, &m2, 5).unwrap();
    assert_eq!(prod.len(), 1);
    assert_eq!(prod[0].coeff, AlgElement::basis(4, 3).scale(&s(-1)));
    // exceeding the cap is flagged
    let m = OreMonomial::new(3, AlgElement::basis(4, 0));
    assert!(matches!(
        ore_multiply(&datum, &m, &m, 5),
        Err(OreError::CapExceeded { degree: 6, cap: 5 })
    ));
}

/// kC_2[x, sigma, delta] with sigma(g) = -g and delta(g) = 1 - g satisfies
/// Panov's conditions with a genuinely nonzero derivation.
fn cyclic2_with_derivation() -> HopfOreDatum {
    let base = Arc::new(cyclic_group_algebra(2));
    let mut sigma = Matrix::zeros(2, 2);
    sigma.set(0, 0, s(1));
    sigma.set(1, 1, s(-1));
    let mut delta = Matrix::zeros(2, 2);
    delta.set(0, 1, s(1));
    delta.set(1, 1, s(-1));
    HopfOreDatum::new(base, sigma, delta, 1, "x").expect("valid delta datum")
}

#[test]
fn nonzero_derivation_datum_multiplies_by_the_defining_relation() {
    let datum = cyclic2_with_derivation();
    // g x = x sigma^{-1}(g) - delta(sigma^{-1}(g)) = x*(-g) + delta(g),
    // the right-to-left form of x g = sigma(g) x + delta(g).
    let g = OreMonomial::new(0, AlgElement::basis(2, 1));
    let x = OreMonomial::new(1, AlgElement::basis(2, 0));
    let mut prod = ore_multiply(&datum, &g, &x, 5).unwrap();
    prod.sort_by_key(|m| m.degree);
    assert_eq!(prod.len(), 2);
    assert_eq!(prod[0].degree, 0);
    assert_eq!(
        prod[0].coeff,
        AlgElement::basis(2, 0).sub(&AlgElement::basis(2, 1))
    );
    assert_eq!(prod[1].degree, 1);
    assert_eq!(prod[1].coeff, AlgElement::basis(2, 1).scale(&s(-1)));
}

#[test]
fn monomial_coproducts() {
    let datum = sweedler_ore_datum();
    // Delta(y) = y (x) 1 + g (x) y
    let cp = ore_coproduct(&datum, &OreMonomial::new(1, AlgElement::basis(4, 0))).unwrap();
    assert_eq!(cp.len(), 2);
    // Delta(y^2) at q = -1: middle q-binomial vanishes
    let cp = ore_coproduct(&datum, &OreMonomial::new(2, AlgElement::basis(4, 0))).unwrap();
    let degrees: Vec<(usize, usize)> = cp.iter().map(|(_, l, r)| (l.degree, r.degree)).collect();
    assert!(degrees.contains(&(2, 0)));
    assert!(degrees.contains(&(0, 2)));
    assert!(
        !degrees.contains(&(1, 1)),
        "(2 1)_{{-1}} = 0 must drop the middle term"
    );
    // delta != 0 blocks degree >= 2
    let datum = cyclic2_with_derivation();
    assert!(ore_coproduct(&datum, &OreMonomial::new(1, AlgElement::basis(2, 1))).is_ok());
    assert!(matches!(
        ore_coproduct(&datum, &OreMonomial::new(2, AlgElement::basis(2, 0))),
        Err(OreError::UnsupportedDelta)
    ));
}

#[test]
fn truncated_windows_validate() {
    let datum = sweedler_ore_datum();
    let t = build_truncated(&datum, 4).unwrap();
    assert_eq!(t.dim(), 20);
    let report = t.validate();
    assert!(report.passed(), "{report:?}");
    assert!(report.out_of_window > 0);

    for n in 2..=4usize {
        let q = if n == 2 {
            s(-1)
        } else {
            Scalar::primitive_root(n as u32)
        };
        let t = build_truncated(&cyclic_ore_datum(n, &q).unwrap(), 4).unwrap();
        assert!(t.validate().passed(), "kC_{n} window");
    }
}

#[test]
fn truncated_window_with_derivation_validates_where_defined() {
    let datum = cyclic2_with_derivation();
    let t = build_truncated(&datum, 3).unwrap();
    let report = t.validate();
    // degree >= 2 coproducts are unavailable, so some checks are skipped,
    // but nothing that was checked may fail
    assert!(report.passed(), "{report:?}");
    assert!(report.out_of_window > 0);
    assert!(t.coproduct_entries(t.index(2, 0)).is_none());
    assert!(t.coproduct_entries(t.index(1, 1)).is_some());
}

#[test]
fn nilpotent_quotient_is_a_hopf_algebra() {
    let datum = cyclic_ore_datum(2, &s(-1)).unwrap();
    let h = quotient_nilpotent(&datum, 2).unwrap();
    assert_eq!(h.dim(), 4);
    assert!(h.validate().passed());
    // relations: x^2 = 0 and x g = chi(g) g x = -g x
    let x = AlgElement::basis(4, 2);
    let g = AlgElement::basis(4, 1);
    assert!(h.alg().mul(&x, &x).is_zero());
    assert_eq!(h.alg().mul(&x, &g), h.alg().mul(&g, &x).scale(&s(-1)));

    // wrong order of q
    assert!(matches!(
        quotient_nilpotent(&datum, 3),
        Err(OreError::BadOrder {
            expected: 3,
            found: Some(2)
        })
    ));
}

#[test]
fn taft_quotients_validate_up_to_dimension_sixteen() {
    for (n, d) in [(2u32, 2u32), (4, 2), (3, 3), (4, 4), (6, 2), (8, 2)] {
        let q = Scalar::primitive_root(d);
        let datum = cyclic_ore_datum(n as usize, &q).unwrap();
        let h = quotient_nilpotent(&datum, d).unwrap();
        assert_eq!(h.dim(), (n * d) as usize);
        assert!(h.validate().passed(), "H_({n},{d})");
    }
}

#[test]
fn non_nilpotent_quotient_realizes_the_radford_relation() {
    let q = Scalar::primitive_root(2);
    let datum = cyclic_ore_datum(4, &q).unwrap();
    let h = quotient_rank_one_nonnilp(&datum, 2).unwrap();
    assert_eq!(h.dim(), 8);
    assert!(h.validate().passed());
    // x^2 = 1 - g^2
    let x = AlgElement::basis(8, 4);
    let expect = AlgElement::basis(8, 0).sub(&AlgElement::basis(8, 2));
    assert_eq!(h.alg().mul(&x, &x), expect);
}

#[test]
fn nichols_step_is_a_nilpotent_quotient() {
    // H8 = H4[y, sigma]/<y^2>
    let datum = sweedler_ore_datum();
    let h8 = quotient_nilpotent(&datum, 2).unwrap();
    assert_eq!(h8.dim(), 8);
    assert!(h8.validate().passed());
}

#[test]
fn nilpotent_quotient_satisfies_the_commutation_relations() {
    // x^d = 0 and x h = chi(h) h x for every grouplike h
    let q = Scalar::primitive_root(4);
    let datum = cyclic_ore_datum(8, &q).unwrap();
    let h = quotient_nilpotent(&datum, 4).unwrap();
    let dim = h.dim();
    let x = AlgElement::basis(dim, 8); // x * 1 at degree 1
    let mut xpow = h.alg().unit();
    for _ in 0..4 {
        xpow = h.alg().mul(&xpow, &x);
    }
    assert!(xpow.is_zero(), "x^4 must vanish");
    for k in 0..8usize {
        let gk = AlgElement::basis(dim, k);
        let lhs = h.alg().mul(&x, &gk);
        let chi = q.pow(k as i64).unwrap();
        let rhs = h.alg().mul(&gk, &x).scale(&chi);
        assert_eq!(lhs, rhs, "x g^{k} != chi(g^{k}) g^{k} x");
    }
}
