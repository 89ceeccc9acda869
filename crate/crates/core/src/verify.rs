//! Seeded property suites over the whole library, run by `latfield verify`.
//!
//! Each suite returns one [`SuiteOutcome`]; random sampling is driven by a
//! ChaCha stream seeded from [`VerifyConfig::seed`] so runs are repeatable.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith;
use crate::characters::{self, CharValue, MultiplicativeCharacter};
use crate::curves::{self, CurveSpec, WeilZero};
use crate::error::Result;
use crate::field::{self, FiniteField, FiniteRing, PrimeField};
use crate::frobenius;
use crate::lattice_field::LatticeField;
use crate::rings::{QuadraticInteger, RingTag, UnitGroup};
use crate::splitting::{self, PrimeClass};
use crate::zeta;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Random pairs per algebraic property.
    pub samples: usize,
    /// Primes up to this bound enter the character, count and zeta sweeps.
    pub prime_bound: u64,
    /// Primes up to this bound get an exhaustive Frobenius lift check.
    pub lift_bound: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            samples: 500,
            prime_bound: 200,
            lift_bound: 50,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub cases: u64,
    pub failure: Option<String>,
}

struct Tally {
    name: &'static str,
    cases: u64,
    failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            cases: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn finish(self) -> SuiteOutcome {
        SuiteOutcome {
            name: self.name,
            passed: self.failure.is_none(),
            cases: self.cases,
            failure: self.failure,
        }
    }
}

pub fn run_all(cfg: &VerifyConfig) -> Result<Vec<SuiteOutcome>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    Ok(vec![
        ring_arithmetic(cfg, &mut rng),
        lattice_fields(cfg)?,
        character_laws(cfg)?,
        point_counts(cfg)?,
        frobenius_lifts(cfg, &mut rng)?,
        zeta_identities(cfg)?,
    ])
}

fn random_element(rng: &mut ChaCha8Rng, ring: RingTag, reach: i64) -> QuadraticInteger {
    QuadraticInteger::new(ring, rng.random_range(-reach..=reach), rng.random_range(-reach..=reach))
}

fn ring_arithmetic(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> SuiteOutcome {
    let mut t = Tally::new("ring arithmetic");
    for ring in RingTag::ALL {
        for _ in 0..cfg.samples {
            let x = random_element(rng, ring, 1_000_000);
            let y = random_element(rng, ring, 1_000_000);
            let show = || format!("x = {x}, y = {y}");
            t.check((&x * &y).norm() == x.norm() * y.norm(), || format!("norm not multiplicative: {}", show()));
            t.check((&x * &y).conj() == &x.conj() * &y.conj(), || format!("conj not multiplicative: {}", show()));
            t.check((&x + &y).conj() == &x.conj() + &y.conj(), || format!("conj not additive: {}", show()));
            if y.is_zero() {
                continue;
            }
            match x.divrem(&y) {
                Ok((q, r)) => t.check(&(&q * &y) + &r == x && r.norm() < y.norm(), || {
                    format!("division contract broken: {}", show())
                }),
                Err(e) => t.check(false, || format!("divrem failed for {}: {e}", show())),
            }
            match x.gcd(&y) {
                Ok(g) => {
                    t.check(g.divides(&x) && g.divides(&y), || format!("gcd does not divide: {}", show()));
                    t.check(g.normalized() == g, || format!("gcd not normalized: {}", show()));
                }
                Err(e) => t.check(false, || format!("gcd failed for {}: {e}", show())),
            }
            if let Ok((_, c)) = x.canonical_associate() {
                let again = c.canonical_associate().map(|(_, c2)| c2);
                t.check(again.as_ref() == Ok(&c), || format!("canonical associate not idempotent: {x}"));
            }
        }
    }
    t.finish()
}

/// Every prime of `ring` above `p`, conjugates included.
pub fn primes_over(ring: RingTag, p: u64) -> Result<Vec<QuadraticInteger>> {
    let pi = splitting::prime_above(ring, p)?;
    Ok(match splitting::classify_prime(ring, p)? {
        PrimeClass::Split => vec![pi.conj(), pi],
        _ => vec![pi],
    })
}

fn lattice_fields(cfg: &VerifyConfig) -> Result<SuiteOutcome> {
    let mut t = Tally::new("lattice fields");
    for p in arith::primes_up_to(cfg.lift_bound) {
        for ring in RingTag::ALL {
            for pi in primes_over(ring, p)? {
                if pi.norm() == BigInt::from(ring.ramified_prime()) {
                    continue;
                }
                let field = LatticeField::new(&pi)?;
                let one = field.one();
                for x in field.enumerate()? {
                    if x == field.zero() {
                        continue;
                    }
                    let ok = field.inv(&x).map(|y| field.mul(&x, &y) == one).unwrap_or(false);
                    t.check(ok, || format!("{x} has no inverse in Z[{}]/({pi})", ring.symbol(false)));
                }
                if field.order() <= field::DEFAULT_AXIOM_BOUND {
                    let report = field::verify_field_axioms(&field, field::DEFAULT_AXIOM_BOUND)?;
                    t.check(report.passed, || {
                        format!("axioms fail mod {pi}: {}", report.counterexample.clone().unwrap_or_default())
                    });
                }
            }
        }
    }
    Ok(t.finish())
}

/// Position of a character value in the cyclic unit group, so products
/// become index sums.
fn unit_index(units: &UnitGroup, v: &CharValue) -> Option<usize> {
    let z = v.embed(units.ring()).ok()?;
    units.elements().iter().position(|u| *u == z)
}

/// Admissible orders `m` for `p`, paired with the characters.
pub fn characters_at(p: u64) -> Result<Vec<MultiplicativeCharacter>> {
    [2u32, 3, 4, 6]
        .into_iter()
        .filter(|&m| (p - 1) % u64::from(m) == 0)
        .map(|m| characters::make_character(p, m))
        .collect()
}

fn character_laws(cfg: &VerifyConfig) -> Result<SuiteOutcome> {
    let mut t = Tally::new("character laws");
    for p in arith::primes_up_to(cfg.prime_bound).into_iter().filter(|&p| p > 2) {
        let chars = characters_at(p)?;
        for chi in &chars {
            let m = chi.order();
            let ring = match chi.value_ring() {
                characters::ValueRing::Integers => RingTag::Gaussian,
                characters::ValueRing::Quadratic(r) => r,
            };
            let units = UnitGroup::of(ring);
            let n = units.elements().len();
            let idx: Vec<Option<usize>> = (0..p as i64).map(|a| unit_index(&units, chi.eval(a))).collect();
            t.check(chi.eval(0).is_zero() && idx[1..].iter().all(Option::is_some), || {
                format!("chi_{m} mod {p} takes a non-unit value")
            });
            let idx: Vec<usize> = idx[1..].iter().map(|i| i.unwrap_or(0)).collect();
            let at = |a: u64| idx[(a - 1) as usize];
            let mut multiplicative = true;
            for a in 1..p {
                for b in a..p {
                    if at(a * b % p) != (at(a) + at(b)) % n {
                        multiplicative = false;
                    }
                }
            }
            t.check(multiplicative, || format!("chi_{m} mod {p} not multiplicative"));
            let mut image: Vec<usize> = idx.clone();
            image.sort_unstable();
            image.dedup();
            t.check(image.len() == m as usize, || {
                format!("chi_{m} mod {p} has image of size {}", image.len())
            });
            let total = (1..p as i64).fold(QuadraticInteger::zero(ring), |acc, a| {
                &acc + &chi.eval(a).embed(ring).unwrap_or_else(|_| QuadraticInteger::zero(ring))
            });
            t.check(total.is_zero(), || format!("chi_{m} mod {p} sums to {total}"));
        }
        for (i, chi) in chars.iter().enumerate() {
            for psi in &chars[i..] {
                let Ok(j) = characters::jacobi_sum(chi, psi) else {
                    continue;
                };
                let ring = j.value.ring();
                let product_trivial = (1..p as i64).all(|a| {
                    match (chi.eval(a).embed(ring), psi.eval(a).embed(ring)) {
                        (Ok(x), Ok(y)) => (&x * &y).is_one(),
                        _ => false,
                    }
                });
                let expected = if product_trivial { 1 } else { p };
                t.check(j.value.norm() == BigInt::from(expected), || {
                    format!(
                        "J(chi_{}, chi_{}) mod {p} = {} has norm {}",
                        chi.order(),
                        psi.order(),
                        j.value,
                        j.value.norm()
                    )
                });
            }
        }
    }
    if let Ok(chi) = characters::make_character(13, 6) {
        let rho4 = chi.eval(4).embed(RingTag::Eisenstein)?;
        t.check(rho4 == QuadraticInteger::new(RingTag::Eisenstein, -1, -1), || {
            format!("chi_6(4) mod 13 = {rho4}, expected w^2")
        });
    }
    Ok(t.finish())
}

/// Curves swept by the count suite: cubic twists with `D` in `{1, 5, -1}`
/// and the quartic twist.
pub fn sweep_curves() -> Vec<CurveSpec> {
    vec![CurveSpec::cubic(1), CurveSpec::cubic(5), CurveSpec::cubic(-1), CurveSpec::quartic()]
}

/// Whether `p` is a good odd prime for `curve`.
pub fn applicable(curve: &CurveSpec, p: u64) -> bool {
    match curve.family {
        curves::CurveFamily::CubicTwist { d } => p > 3 && d.rem_euclid(p as i64) != 0,
        _ => p > 2,
    }
}

fn point_counts(cfg: &VerifyConfig) -> Result<SuiteOutcome> {
    let mut t = Tally::new("point counts");
    for curve in sweep_curves() {
        for p in arith::primes_up_to(cfg.prime_bound) {
            if !applicable(&curve, p) {
                continue;
            }
            let brute = curves::count_points_bruteforce(&curve, &PrimeField::new(p)?)?.result.n_affine;
            let chars = curves::count_points_character_sum(&curve, p)?.n_affine;
            let a_p = curves::defect(&curve, p)?;
            t.check(brute == chars, || format!("{curve} mod {p}: brute {brute} vs character sum {chars}"));
            t.check(p as i64 - a_p == brute as i64, || format!("{curve} mod {p}: a_p = {a_p} vs brute {brute}"));
            t.check((a_p as i128).pow(2) <= 4 * p as i128, || format!("{curve} mod {p}: Hasse fails for {a_p}"));
            match curves::weil_zero(&curve, p)? {
                WeilZero::Split { w, w_conj } => t.check(
                    (&w * &w_conj) == QuadraticInteger::from_int(w.ring(), p)
                        && w.trace() == BigInt::from(a_p),
                    || format!("{curve} mod {p}: bad Weil zero {w}"),
                ),
                WeilZero::Supersingular => {
                    t.check(brute == p, || format!("{curve} mod {p}: supersingular count {brute} != {p}"))
                }
            }
        }
    }
    Ok(t.finish())
}

fn frobenius_lifts(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<SuiteOutcome> {
    let mut t = Tally::new("frobenius");
    for p in arith::primes_up_to(cfg.lift_bound) {
        for ring in RingTag::ALL {
            if p == ring.ramified_prime() {
                continue;
            }
            for pi in primes_over(ring, p)? {
                let field = LatticeField::new(&pi)?;
                let ok = frobenius::verify_lift(ring, p, &field)?;
                t.check(ok, || format!("lift does not induce x^{p} mod {pi}"));
            }
        }
    }
    for p in arith::primes_up_to(cfg.prime_bound) {
        for ring in RingTag::ALL {
            if p == ring.ramified_prime() {
                continue;
            }
            let data = frobenius::frobenius_matrix_and_charpoly(ring, p)?;
            let expected = match splitting::classify_prime(ring, p)? {
                PrimeClass::Split => [1, -2, 1],
                _ => [1, 0, -1],
            };
            t.check(data.char_poly_t == Some(expected), || {
                format!("char poly at {p} in {ring} does not match splitting type")
            });
            let m = data.matrix.unwrap_or(frobenius::IDENTITY);
            t.check(frobenius::mat_mul(&m, &m) == frobenius::IDENTITY, || {
                format!("Frobenius at {p} in {ring} is not an involution")
            });
        }
    }
    for ring in RingTag::ALL {
        let primes: Vec<u64> = arith::primes_up_to(cfg.prime_bound)
            .into_iter()
            .filter(|&p| p != ring.ramified_prime())
            .collect();
        for _ in 0..cfg.samples {
            let p = primes[rng.random_range(0..primes.len())];
            let x = random_element(rng, ring, 10_000);
            let y = random_element(rng, ring, 10_000);
            let f = |z: &QuadraticInteger| frobenius::frobenius_lift_apply(ring, p, z);
            let (fx, fy) = (f(&x)?, f(&y)?);
            t.check(f(&(&x + &y))? == &fx + &fy && f(&(&x * &y))? == &fx * &fy, || {
                format!("lift at {p} is not a ring map on {x}, {y}")
            });
        }
    }
    Ok(t.finish())
}

fn zeta_identities(cfg: &VerifyConfig) -> Result<SuiteOutcome> {
    let mut t = Tally::new("zeta");
    for curve in sweep_curves() {
        for p in arith::primes_up_to(cfg.prime_bound) {
            if !applicable(&curve, p) {
                continue;
            }
            let a_p = curves::defect(&curve, p)?;
            let zd = zeta::betti_polynomial(a_p, p)?;
            t.check(zeta::zeta_series_check(&zd, 6)?, || format!("series identity fails for p = {p}, a_p = {a_p}"));
            let brute = curves::count_points_bruteforce(&curve, &PrimeField::new(p)?)?.result;
            t.check(Some(zd.projective_count() as u64) == brute.n_projective, || {
                format!("P(1) mismatch for {curve} mod {p}")
            });
            if let WeilZero::Split { w, w_conj } = curves::weil_zero(&curve, p)? {
                let sums = zeta::power_sums(a_p, p, 8);
                for (n, s) in sums.iter().enumerate().skip(1) {
                    let direct = &w.pow(n as u64) + &w_conj.pow(n as u64);
                    t.check(direct == QuadraticInteger::from_int(w.ring(), s.clone()), || {
                        format!("power sum s_{n} mismatch for p = {p}")
                    });
                }
            }
        }
    }
    Ok(t.finish())
}
