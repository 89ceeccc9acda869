//! Values cross-checked against small independent implementations written
//! here from scratch: `F_{p^2}` as pairs, characters via discrete logs.

use num_bigint::BigInt;

use latfield::arith::{inv_mod, pow_mod, primes_up_to};
use latfield::characters::{jacobi_sum, make_character};
use latfield::curves::{self, CurveSpec, WeilZero};
use latfield::frobenius;
use latfield::splitting::prime_above;
use latfield::zeta;
use latfield::{LatticeField, PolyField, PolyOverFp, QuadraticInteger, RingTag};

/// Affine count of `y^2 = x^3 + D` over `F_p[t]/(t^2 - n)`, `n` a non-residue.
fn count_over_fp2(d: i64, p: u64, n: u64) -> u64 {
    let p = p as i64;
    let n = n as i64;
    let mul = |(a, b): (i64, i64), (c, e): (i64, i64)| ((a * c + n * b * e).rem_euclid(p), (a * e + b * c).rem_euclid(p));
    let mut squares = std::collections::HashMap::new();
    for a in 0..p {
        for b in 0..p {
            *squares.entry(mul((a, b), (a, b))).or_insert(0u64) += 1;
        }
    }
    let mut total = 0;
    for a in 0..p {
        for b in 0..p {
            let x = (a, b);
            let x3 = mul(mul(x, x), x);
            let rhs = ((x3.0 + d).rem_euclid(p), x3.1);
            total += squares.get(&rhs).copied().unwrap_or(0);
        }
    }
    total
}

#[test]
fn extension_counts_against_pair_arithmetic() {
    // 2 is a non-residue mod 5 and mod 13
    assert_eq!(count_over_fp2(1, 13, 2), 191);
    assert_eq!(count_over_fp2(1, 5, 2), 35);
    let f169 = PolyField::new(&PolyOverFp::parse(13, "x^2+11").unwrap()).unwrap();
    let brute = curves::count_points_bruteforce(&CurveSpec::cubic(1), &f169).unwrap();
    assert_eq!(brute.result.n_affine, 191);
    assert_eq!(brute.points.map(|v| v.len()), Some(191));
    for p in [7u64, 11, 13, 17] {
        let n = (2..p).find(|&k| pow_mod(k, (p - 1) / 2, p) == p - 1).unwrap();
        let a = curves::defect(&CurveSpec::cubic(1), p).unwrap();
        let zd = zeta::betti_polynomial(a, p).unwrap();
        let recurrence = zeta::extension_counts(&zd, 2).unwrap()[1].affine.clone();
        assert_eq!(recurrence, BigInt::from(count_over_fp2(1, p, n)), "p = {p}");
    }
}

#[test]
fn lattice_and_polynomial_models_count_alike() {
    for p in [5u64, 11, 17] {
        let lattice = LatticeField::new(&QuadraticInteger::from_int(RingTag::Eisenstein, p)).unwrap();
        let poly = PolyField::new(&PolyOverFp::smallest_irreducible(p, 2).unwrap()).unwrap();
        let curve = CurveSpec::cubic(3);
        let a = curves::count_points_bruteforce(&curve, &lattice).unwrap().result;
        let b = curves::count_points_bruteforce(&curve, &poly).unwrap().result;
        assert_eq!(a, b, "p = {p}");
    }
}

/// `chi(g^k) = zeta^k` where `g` generates `F_p^*` and `zeta` is the unit
/// congruent to `g^((p-1)/m)` modulo `pi`; `xi = s (mod pi)`.
fn discrete_log_character(p: u64, m: u64, pi: &QuadraticInteger) -> Vec<QuadraticInteger> {
    let ring = pi.ring();
    let a = i64::try_from(pi.a()).unwrap();
    let b = i64::try_from(pi.b()).unwrap();
    let s = ((-a).rem_euclid(p as i64) as u64 * inv_mod(b.rem_euclid(p as i64) as u64, p).unwrap()) % p;
    let image = |u: &QuadraticInteger| {
        let (ua, ub) = (i64::try_from(u.a()).unwrap(), i64::try_from(u.b()).unwrap());
        (ua.rem_euclid(p as i64) as u64 + ub.rem_euclid(p as i64) as u64 * s) % p
    };
    let g = (2..p)
        .find(|&g| (1..p - 1).all(|k| pow_mod(g, k, p) != 1))
        .unwrap();
    let target = pow_mod(g, (p - 1) / m, p);
    let units: Vec<QuadraticInteger> = match ring {
        RingTag::Gaussian => vec![(1, 0), (0, 1), (-1, 0), (0, -1)],
        RingTag::Eisenstein => vec![(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)],
    }
    .into_iter()
    .map(|(a, b)| QuadraticInteger::new(ring, a, b))
    .collect();
    let zeta = units.iter().find(|u| image(u) == target).unwrap().clone();
    let mut table = vec![QuadraticInteger::zero(ring); p as usize];
    let mut x = 1u64;
    let mut value = QuadraticInteger::one(ring);
    for _ in 0..p - 1 {
        table[x as usize] = value.clone();
        x = x * g % p;
        value = &value * &zeta;
    }
    table
}

#[test]
fn characters_against_discrete_logs() {
    for p in primes_up_to(120).into_iter().filter(|&p| p > 3) {
        for (m, ring) in [(4u32, RingTag::Gaussian), (3, RingTag::Eisenstein), (6, RingTag::Eisenstein)] {
            if (p - 1) % u64::from(m) != 0 {
                continue;
            }
            let pi = prime_above(ring, p).unwrap();
            let oracle = discrete_log_character(p, u64::from(m), &pi);
            let chi = make_character(p, m).unwrap();
            for a in 1..p {
                assert_eq!(chi.eval(a as i64).embed(ring).unwrap(), oracle[a as usize], "chi_{m}({a}) mod {p}");
            }
        }
    }
}

#[test]
fn jacobi_sums_against_direct_sums() {
    for p in [5u64, 13, 17, 29, 37, 41] {
        let pi = prime_above(RingTag::Gaussian, p).unwrap();
        let chi4 = discrete_log_character(p, 4, &pi);
        let chi2: Vec<i64> = (0..p)
            .map(|a| if a == 0 { 0 } else if pow_mod(a, (p - 1) / 2, p) == 1 { 1 } else { -1 })
            .collect();
        let mut j = QuadraticInteger::zero(RingTag::Gaussian);
        for t in 0..p {
            let s = ((1 + p - t) % p) as usize;
            j = &j + &chi4[s].scale(&BigInt::from(chi2[t as usize]));
        }
        let lib = jacobi_sum(&make_character(p, 2).unwrap(), &make_character(p, 4).unwrap()).unwrap();
        assert_eq!(lib.value, j, "p = {p}");
        assert_eq!(j.norm(), BigInt::from(p));
    }
    let j5 = jacobi_sum(&make_character(5, 2).unwrap(), &make_character(5, 4).unwrap()).unwrap();
    assert_eq!(j5.value, QuadraticInteger::new(RingTag::Gaussian, 1, -2));
    // -J is primary
    assert!((-j5.value).is_primary());
}

#[test]
fn quartic_defect_against_jacobi_sum() {
    // a_p = -chi_4(-1) * trace J(chi_2, chi_4); the sign is +1 only for p = 5 mod 8
    for p in primes_up_to(200).into_iter().filter(|&p| p % 4 == 1) {
        let j = jacobi_sum(&make_character(p, 2).unwrap(), &make_character(p, 4).unwrap()).unwrap();
        let a = curves::defect(&CurveSpec::quartic(), p).unwrap();
        let sign = if p % 8 == 5 { 1 } else { -1 };
        assert_eq!(j.value.trace() * sign, BigInt::from(a), "p = {p}");
    }
}

#[test]
fn weil_zeros_listed() {
    let e = |a, b| QuadraticInteger::new(RingTag::Eisenstein, a, b);
    let cases = [
        (CurveSpec::cubic(1), 13, e(3, 4)),
        (CurveSpec::cubic(5), 19, e(-5, -3)),
        (CurveSpec::quartic(), 5, QuadraticInteger::new(RingTag::Gaussian, 1, -2)),
    ];
    for (curve, p, expected) in cases {
        match curves::weil_zero(&curve, p).unwrap() {
            WeilZero::Split { w, w_conj } => {
                assert_eq!(w, expected);
                assert_eq!(&w * &w_conj, QuadraticInteger::from_int(w.ring(), p));
            }
            WeilZero::Supersingular => panic!("{curve} mod {p} should split"),
        }
    }
}

#[test]
fn frobenius_symbols_against_euler() {
    for p in primes_up_to(100).into_iter().filter(|&p| p > 3) {
        for d in [-1i64, -3, 2, 5, -7] {
            if d.rem_euclid(p as i64) == 0 {
                continue;
            }
            let euler = pow_mod(d.rem_euclid(p as i64) as u64, (p - 1) / 2, p);
            let f = frobenius::frobenius_quadratic(d, p).unwrap();
            assert_eq!(f.symbol, if euler == 1 { 1 } else { -1 });
            assert_eq!(f.char_poly_t.unwrap(), [1, -(1 + f.symbol), f.symbol]);
        }
        let r = frobenius::frobenius_matrix_and_charpoly(RingTag::Eisenstein, p).unwrap();
        assert_eq!(r.symbol, frobenius::frobenius_quadratic(-3, p).unwrap().symbol);
    }
}
