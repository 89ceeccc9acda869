use num_bigint::BigInt;
use proptest::prelude::*;

use latfield::arith;
use latfield::characters::make_character;
use latfield::curves::{self, CurveSpec, WeilZero};
use latfield::field::FiniteRing;
use latfield::frobenius::frobenius_lift_apply;
use latfield::poly_field::PolyOverFp;
use latfield::zeta;
use latfield::{LatticeField, QuadraticInteger, RingTag};

fn ring() -> impl Strategy<Value = RingTag> {
    prop_oneof![Just(RingTag::Gaussian), Just(RingTag::Eisenstein)]
}

fn coords(reach: i64) -> impl Strategy<Value = (i64, i64)> {
    (-reach..=reach, -reach..=reach)
}

fn pair(reach: i64) -> impl Strategy<Value = (QuadraticInteger, QuadraticInteger)> {
    (ring(), coords(reach), coords(reach)).prop_map(|(r, (a, b), (c, d))| {
        (QuadraticInteger::new(r, a, b), QuadraticInteger::new(r, c, d))
    })
}

fn element(reach: i64) -> impl Strategy<Value = QuadraticInteger> {
    (ring(), coords(reach)).prop_map(|(r, (a, b))| QuadraticInteger::new(r, a, b))
}

fn small_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(arith::primes_up_to(200))
}

fn odd_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(arith::primes_up_to(200).into_iter().filter(|&p| p > 3).collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn norm_is_multiplicative((x, y) in pair(1_000_000)) {
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn conjugation_is_a_ring_automorphism((x, y) in pair(1_000_000)) {
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!(&x * &x.conj(), QuadraticInteger::from_int(x.ring(), x.norm()));
        prop_assert_eq!(&x + &x.conj(), QuadraticInteger::from_int(x.ring(), x.trace()));
    }

    #[test]
    fn euclidean_division_contract((x, y) in pair(1_000_000)) {
        prop_assume!(!y.is_zero());
        let (q, r) = x.divrem(&y).unwrap();
        prop_assert_eq!(&(&q * &y) + &r, x);
        prop_assert!(r.norm() < y.norm());
    }

    #[test]
    fn gcd_divides_and_is_normalized((x, y) in pair(10_000), z in coords(100)) {
        prop_assume!(!(x.is_zero() && y.is_zero()));
        let g = x.gcd(&y).unwrap();
        prop_assert!(g.divides(&x) && g.divides(&y));
        prop_assert_eq!(g.normalized(), g.clone());
        let z = QuadraticInteger::new(x.ring(), z.0, z.1);
        prop_assume!(!z.is_zero());
        let scaled = (&x * &z).gcd(&(&y * &z)).unwrap();
        prop_assert!(scaled.is_associate_of(&(&g * &z)));
    }

    #[test]
    fn bezout_identity((x, y) in pair(100_000)) {
        prop_assume!(!(x.is_zero() && y.is_zero()));
        let (g, s, t) = x.xgcd(&y).unwrap();
        prop_assert_eq!(&(&s * &x) + &(&t * &y), g.clone());
        prop_assert!(g.is_associate_of(&x.gcd(&y).unwrap()));
    }

    #[test]
    fn canonical_associate_is_idempotent(x in element(100_000)) {
        match x.canonical_associate() {
            Ok((u, c)) => {
                prop_assert!(u.is_unit());
                prop_assert_eq!(&u * &x, c.clone());
                prop_assert!(c.is_primary());
                prop_assert_eq!(c.canonical_associate().unwrap().1, c);
            }
            Err(_) => {
                let ramified = BigInt::from(x.ring().ramified_prime());
                prop_assert!(x.is_zero() || (x.norm() % ramified) == BigInt::from(0));
            }
        }
    }

    #[test]
    fn render_parse_round_trip(x in element(1_000_000), unicode in any::<bool>()) {
        let text = x.render(unicode);
        prop_assert_eq!(QuadraticInteger::parse(x.ring(), &text).unwrap(), x);
    }

    #[test]
    fn reduction_is_a_ring_map(p in small_prime(), r in ring(), (a, b) in coords(10_000), (c, d) in coords(10_000), which in any::<bool>()) {
        prop_assume!(p != r.ramified_prime());
        let pi = latfield::splitting::prime_above(r, p).unwrap();
        let pi = if which { pi } else { pi.conj() };
        let field = LatticeField::new(&pi).unwrap();
        let x = QuadraticInteger::new(r, a, b);
        let y = QuadraticInteger::new(r, c, d);
        let red = |z: &QuadraticInteger| field.reduce(z).unwrap();
        prop_assert_eq!(red(&(&x + &y)), field.add(&red(&x), &red(&y)));
        prop_assert_eq!(red(&(&x * &y)), field.mul(&red(&x), &red(&y)));
        prop_assert_eq!(red(&pi), field.zero());
    }

    #[test]
    fn frobenius_lift_is_an_involutive_automorphism(p in small_prime(), (x, y) in pair(100_000)) {
        let r = x.ring();
        prop_assume!(p != r.ramified_prime());
        let f = |z: &QuadraticInteger| frobenius_lift_apply(r, p, z).unwrap();
        prop_assert_eq!(f(&(&x + &y)), &f(&x) + &f(&y));
        prop_assert_eq!(f(&(&x * &y)), &f(&x) * &f(&y));
        prop_assert_eq!(f(&f(&x)), x);
    }

    #[test]
    fn characters_are_multiplicative(p in odd_prime(), a in 1u64..1000, b in 1u64..1000) {
        for m in [2u32, 3, 4, 6] {
            let Ok(chi) = make_character(p, m) else { continue };
            let ring = if m == 4 || m == 2 { RingTag::Gaussian } else { RingTag::Eisenstein };
            let v = |k: u64| chi.eval(k as i64).embed(ring).unwrap();
            prop_assert_eq!(v(a * b), &v(a) * &v(b));
        }
    }

    #[test]
    fn power_sums_match_ring_powers(p in odd_prime(), cubic in any::<bool>()) {
        let curve = if cubic { CurveSpec::cubic(1) } else { CurveSpec::quartic() };
        let a_p = curves::defect(&curve, p).unwrap();
        if let WeilZero::Split { w, w_conj } = curves::weil_zero(&curve, p).unwrap() {
            for (n, s) in zeta::power_sums(a_p, p, 8).iter().enumerate() {
                let direct = &w.pow(n as u64) + &w_conj.pow(n as u64);
                prop_assert_eq!(direct, QuadraticInteger::from_int(w.ring(), s.clone()));
            }
        }
        let zd = zeta::betti_polynomial(a_p, p).unwrap();
        prop_assert!(zeta::zeta_series_check(&zd, 8).unwrap());
    }

    #[test]
    fn polynomial_division_contract(p in small_prime(), f in prop::collection::vec(-50i64..50, 0..8), g in prop::collection::vec(-50i64..50, 1..5)) {
        let f = PolyOverFp::new(p, &f).unwrap();
        let g = PolyOverFp::new(p, &g).unwrap();
        prop_assume!(!g.is_zero());
        let (q, r) = f.divrem(&g).unwrap();
        prop_assert_eq!(q.mul(&g).unwrap().add(&r).unwrap(), f);
        prop_assert!(r.is_zero() || r.degree() < g.degree());
    }
}
