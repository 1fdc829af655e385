//! Property tests: field axioms of the cyclotomic scalars, promotion
//! compatibility, q-binomial symmetry against the polynomial oracle, and
//! round-tripping of the textual forms.

use hopfact::qcomb::{gauss_polynomial, QBinomTable};
use hopfact::rat::Rat;
use hopfact::scalar::{euler_phi, Scalar};
use proptest::prelude::*;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rat::new(n, d))
}

/// Scalars over conductors <= 12 with small rational coordinates.
fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (1u32..=12)
        .prop_flat_map(|n| {
            let phi = euler_phi(n);
            (
                Just(n),
                proptest::collection::vec((-6i64..=6, 1i64..=4), phi),
            )
        })
        .prop_map(|(n, coords)| {
            let z = Scalar::primitive_root(n);
            let mut acc = Scalar::zero();
            let mut pow = Scalar::one();
            for (num, den) in coords {
                acc = acc.add(&Scalar::from_rat(Rat::new(num, den)).mul(&pow));
                pow = pow.mul(&z);
            }
            acc
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_associative(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn multiplication_distributes(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn multiplication_is_associative_and_commutative(
        a in arb_scalar(),
        b in arb_scalar(),
        c in arb_scalar(),
    ) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn nonzero_scalars_invert(a in arb_scalar()) {
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn promotion_commutes_with_arithmetic(a in arb_scalar(), b in arb_scalar()) {
        // promote(a) + promote(b) = promote(a + b), and likewise for products
        let m = num_integer::lcm(a.conductor(), b.conductor());
        let pa = a.promote(m);
        let pb = b.promote(m);
        prop_assert_eq!(pa.add(&pb), a.add(&b).promote(m));
        prop_assert_eq!(pa.mul(&pb), a.mul(&b).promote(m));
    }

    #[test]
    fn scalar_text_round_trips(a in arb_scalar()) {
        let text = a.to_string();
        let back: Scalar = text.parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn rat_text_round_trips(r in arb_rat()) {
        let back: Rat = r.to_string().parse().unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn qbinom_symmetry_via_polynomial_oracle(n in 0u32..=14) {
        // (n m)_q = (n n-m)_q as polynomials, hence at every q
        for m in 0..=n as i64 {
            let p = gauss_polynomial(n, m);
            let q = gauss_polynomial(n, n as i64 - m);
            prop_assert_eq!(p, q);
        }
    }

    #[test]
    fn qbinom_recurrence_matches_oracle_at_random_scalars(
        n in 0u32..=10,
        a in arb_scalar(),
    ) {
        // skip q = 0 (the recurrence itself is fine but powers of zero with
        // negative exponents appear in other identities)
        if !a.is_zero() {
            let table = QBinomTable::new(a.clone());
            for m in 0..=n as i64 {
                prop_assert_eq!(table.get(n, m), gauss_polynomial(n, m).eval(&a));
            }
        }
    }
}
