//! Common interface for the finite rings and fields in this crate, plus the
//! exhaustive field-axiom checker shared by the lattice and polynomial
//! constructions.

use std::fmt::Debug;
use std::hash::Hash;

use crate::arith;
use crate::error::{Error, Result};

/// Default cap on the number of elements any enumeration may produce.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 1_000_000;

/// Default cap on the size of a ring checked exhaustively for field axioms.
pub const DEFAULT_AXIOM_BOUND: u64 = 100;

pub trait FiniteRing {
    type Elem: Clone + Eq + Hash + Debug;

    /// Number of elements.
    fn order(&self) -> u64;

    fn characteristic(&self) -> u64;

    /// All elements in canonical order; errors when `order() > bound`.
    fn elements_bounded(&self, bound: u64) -> Result<Vec<Self::Elem>>;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn render(&self, x: &Self::Elem) -> String;

    fn elements(&self) -> Result<Vec<Self::Elem>> {
        self.elements_bounded(DEFAULT_ENUMERATION_BOUND)
    }

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.add(x, &self.neg(y))
    }

    fn pow(&self, x: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut base = x.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// Evaluates a polynomial with integer coefficients (lowest degree
    /// first) by Horner's rule.
    fn eval_poly(&self, coeffs: &[i64], x: &Self::Elem) -> Self::Elem {
        coeffs.iter().rev().fold(self.zero(), |acc, &c| {
            self.add(&self.mul(&acc, x), &self.from_int(c))
        })
    }
}

pub trait FiniteField: FiniteRing {
    fn inv(&self, x: &Self::Elem) -> Result<Self::Elem>;
}

pub(crate) fn check_bound(what: &'static str, size: u64, bound: u64) -> Result<()> {
    if size > bound {
        Err(Error::BoundExceeded {
            what,
            size: size.to_string(),
            bound,
        })
    } else {
        Ok(())
    }
}

/// `Z/pZ` with representatives in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        arith::require_prime(p)?;
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

impl FiniteRing for PrimeField {
    type Elem = u64;

    fn order(&self) -> u64 {
        self.p
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn elements_bounded(&self, bound: u64) -> Result<Vec<u64>> {
        check_bound("prime field enumeration", self.p, bound)?;
        Ok((0..self.p).collect())
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_int(&self, n: i64) -> u64 {
        arith::rem_i64(n, self.p)
    }

    fn add(&self, x: &u64, y: &u64) -> u64 {
        ((*x as u128 + *y as u128) % self.p as u128) as u64
    }

    fn neg(&self, x: &u64) -> u64 {
        (self.p - x % self.p) % self.p
    }

    fn mul(&self, x: &u64, y: &u64) -> u64 {
        arith::mul_mod(*x, *y, self.p)
    }

    fn render(&self, x: &u64) -> String {
        x.to_string()
    }
}

impl FiniteField for PrimeField {
    fn inv(&self, x: &u64) -> Result<u64> {
        if x % self.p == 0 {
            return Err(Error::ZeroInverse);
        }
        arith::inv_mod(*x, self.p).ok_or(Error::ZeroInverse)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub passed: bool,
    pub order: u64,
    /// Number of individual identities evaluated.
    pub checks: u64,
    /// First failing identity, rendered.
    pub counterexample: Option<String>,
}

/// Exhaustively checks the field axioms on every element, pair and triple.
/// Inverses are found by search, so the checker does not rely on any
/// inversion routine of the ring under test.
pub fn verify_field_axioms<R: FiniteRing>(ring: &R, bound: u64) -> Result<AxiomReport> {
    check_bound("exhaustive axiom check", ring.order(), bound)?;
    let elems = ring.elements_bounded(bound)?;
    let zero = ring.zero();
    let one = ring.one();
    let mut checks = 0u64;
    let show = |x: &R::Elem| ring.render(x);

    let fail = |checks: u64, msg: String| AxiomReport {
        passed: false,
        order: ring.order(),
        checks,
        counterexample: Some(msg),
    };

    checks += 1;
    if zero == one {
        return Ok(fail(checks, "0 = 1".into()));
    }
    for x in &elems {
        checks += 3;
        if ring.add(x, &zero) != *x {
            return Ok(fail(checks, format!("{} + 0 != {}", show(x), show(x))));
        }
        if ring.mul(x, &one) != *x {
            return Ok(fail(checks, format!("{} * 1 != {}", show(x), show(x))));
        }
        if ring.add(x, &ring.neg(x)) != zero {
            return Ok(fail(checks, format!("{} has no additive inverse", show(x))));
        }
        if *x != zero {
            checks += 1;
            if !elems.iter().any(|y| ring.mul(x, y) == one) {
                return Ok(fail(
                    checks,
                    format!("{} has no multiplicative inverse", show(x)),
                ));
            }
        }
    }
    for x in &elems {
        for y in &elems {
            checks += 2;
            if ring.add(x, y) != ring.add(y, x) {
                return Ok(fail(checks, format!("{} + {} not commutative", show(x), show(y))));
            }
            let xy = ring.mul(x, y);
            if xy != ring.mul(y, x) {
                return Ok(fail(checks, format!("{} * {} not commutative", show(x), show(y))));
            }
            for z in &elems {
                checks += 3;
                if ring.add(&ring.add(x, y), z) != ring.add(x, &ring.add(y, z)) {
                    return Ok(fail(
                        checks,
                        format!("addition not associative at ({}, {}, {})", show(x), show(y), show(z)),
                    ));
                }
                if ring.mul(&xy, z) != ring.mul(x, &ring.mul(y, z)) {
                    return Ok(fail(
                        checks,
                        format!("multiplication not associative at ({}, {}, {})", show(x), show(y), show(z)),
                    ));
                }
                if ring.mul(x, &ring.add(y, z)) != ring.add(&xy, &ring.mul(x, z)) {
                    return Ok(fail(
                        checks,
                        format!("not distributive at ({}, {}, {})", show(x), show(y), show(z)),
                    ));
                }
            }
        }
    }
    Ok(AxiomReport {
        passed: true,
        order: ring.order(),
        checks,
        counterexample: None,
    })
}

/// Least element (in enumeration order) of multiplicative order `q - 1`.
pub fn multiplicative_generator<F: FiniteField>(field: &F, bound: u64) -> Result<F::Elem> {
    let q = field.order();
    let group = q - 1;
    let factors = arith::prime_factors(group);
    let one = field.one();
    field
        .elements_bounded(bound)?
        .into_iter()
        .filter(|x| *x != field.zero())
        .find(|x| factors.iter().all(|l| field.pow(x, group / l) != one))
        .ok_or_else(|| Error::Internal("no multiplicative generator found".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(13).unwrap();
        assert_eq!(f.from_int(-1), 12);
        assert_eq!(f.inv(&3).unwrap(), 9);
        assert_eq!(f.inv(&0), Err(Error::ZeroInverse));
        assert_eq!(f.pow(&2, 12), 1);
        assert_eq!(f.eval_poly(&[1, 0, 0, 1], &4), 0);
        assert!(PrimeField::new(15).is_err());
    }

    #[test]
    fn prime_field_axioms() {
        let report = verify_field_axioms(&PrimeField::new(7).unwrap(), DEFAULT_AXIOM_BOUND).unwrap();
        assert!(report.passed);
        let too_big = PrimeField::new(101).unwrap();
        assert!(verify_field_axioms(&too_big, DEFAULT_AXIOM_BOUND).unwrap_err().is_resource());
    }

    #[test]
    fn generator_of_f5() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(multiplicative_generator(&f, 100).unwrap(), 2);
        let f = PrimeField::new(7).unwrap();
        assert_eq!(multiplicative_generator(&f, 100).unwrap(), 3);
    }
}
