//! Multiplicative residue characters modulo a prime `p`, of order 2, 3, 4
//! or 6, with values taken exactly in the units of `Z`, `Z[i]` or `Z[w]`,
//! and their Jacobi sums.
//!
//! The order-`m` character attached to the primary prime `pi` over `p` is
//! `chi(a) = u` where `u` is the root of unity with `u = a^((p-1)/m) (mod pi)`.

use std::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::FiniteRing;
use crate::lattice_field::LatticeField;
use crate::rings::{QuadraticInteger, RingTag};
use crate::splitting;

/// Euler's criterion: 0 if `p | a`, otherwise `a^((p-1)/2)` as `+1` or `-1`.
pub fn legendre(a: i64, p: u64) -> Result<i64> {
    arith::require_odd_prime(p)?;
    let r = arith::rem_i64(a, p);
    if r == 0 {
        return Ok(0);
    }
    Ok(if arith::pow_mod(r, (p - 1) / 2, p) == 1 { 1 } else { -1 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValueRing {
    Integers,
    Quadratic(RingTag),
}

impl ValueRing {
    pub fn for_order(m: u32) -> Result<Self> {
        match m {
            2 => Ok(ValueRing::Integers),
            4 => Ok(ValueRing::Quadratic(RingTag::Gaussian)),
            3 | 6 => Ok(ValueRing::Quadratic(RingTag::Eisenstein)),
            _ => Err(Error::domain(format!(
                "character order {m} unsupported (expected 2, 3, 4 or 6)"
            ))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ValueRing::Integers => "integer",
            ValueRing::Quadratic(r) => r.name(),
        }
    }
}

/// A character value: `0` or a root of unity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CharValue {
    Int(i64),
    Ring(QuadraticInteger),
}

impl CharValue {
    pub fn embed(&self, ring: RingTag) -> Result<QuadraticInteger> {
        match self {
            CharValue::Int(n) => Ok(QuadraticInteger::from_int(ring, *n)),
            CharValue::Ring(z) if z.ring() == ring => Ok(z.clone()),
            CharValue::Ring(z) => Err(Error::RingMismatch(ring, z.ring())),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            CharValue::Int(n) => *n == 0,
            CharValue::Ring(z) => z.is_zero(),
        }
    }

    pub fn conj(&self) -> CharValue {
        match self {
            CharValue::Int(n) => CharValue::Int(*n),
            CharValue::Ring(z) => CharValue::Ring(z.conj()),
        }
    }

    pub fn render(&self, unicode: bool) -> String {
        match self {
            CharValue::Int(n) => n.to_string(),
            CharValue::Ring(z) => z.render_unit(unicode),
        }
    }
}

impl fmt::Display for CharValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicativeCharacter {
    p: u64,
    m: u32,
    pi: Option<QuadraticInteger>,
    value_ring: ValueRing,
    table: Vec<CharValue>,
}

/// Order-`m` character modulo `p`, normalized by the primary prime
/// returned by [`splitting::prime_above`].
pub fn make_character(p: u64, m: u32) -> Result<MultiplicativeCharacter> {
    arith::require_prime(p)?;
    let value_ring = ValueRing::for_order(m)?;
    if (p - 1) % u64::from(m) != 0 {
        return Err(Error::CharacterDoesNotExist { p, m });
    }
    let pi = match value_ring {
        ValueRing::Integers => None,
        ValueRing::Quadratic(ring) => Some(splitting::prime_above(ring, p)?),
    };
    MultiplicativeCharacter::build(p, m, pi)
}

impl MultiplicativeCharacter {
    /// Same as [`make_character`] but normalized at an explicit prime `pi`
    /// of norm `p` (choosing `conj(pi)` conjugates every value).
    pub fn with_prime(p: u64, m: u32, pi: &QuadraticInteger) -> Result<Self> {
        arith::require_prime(p)?;
        match ValueRing::for_order(m)? {
            ValueRing::Quadratic(ring) if ring == pi.ring() => {}
            _ => return Err(Error::domain(format!("{pi} cannot normalize an order-{m} character"))),
        }
        if (p - 1) % u64::from(m) != 0 {
            return Err(Error::CharacterDoesNotExist { p, m });
        }
        if pi.norm() != num_bigint::BigInt::from(p) {
            return Err(Error::domain(format!("{pi} does not lie over {p}")));
        }
        Self::build(p, m, Some(pi.clone()))
    }

    fn build(p: u64, m: u32, pi: Option<QuadraticInteger>) -> Result<Self> {
        let value_ring = ValueRing::for_order(m)?;
        let exponent = (p - 1) / u64::from(m);
        let table = match &pi {
            None => (0..p)
                .map(|a| legendre(a as i64, p).map(CharValue::Int))
                .collect::<Result<Vec<_>>>()?,
            Some(pi) => {
                let field = LatticeField::new(pi)?;
                let zero = CharValue::Ring(QuadraticInteger::zero(pi.ring()));
                std::iter::once(Ok(zero))
                    .chain((1..p).map(|a| {
                        let residue = field.from_int(arith::pow_mod(a, exponent, p) as i64);
                        field
                            .unit_residue_lookup(&residue, u64::from(m))
                            .map(CharValue::Ring)
                    }))
                    .collect::<Result<Vec<_>>>()?
            }
        };
        Ok(MultiplicativeCharacter {
            p,
            m,
            pi,
            value_ring,
            table,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn pi(&self) -> Option<&QuadraticInteger> {
        self.pi.as_ref()
    }

    pub fn value_ring(&self) -> ValueRing {
        self.value_ring
    }

    pub fn eval(&self, a: i64) -> &CharValue {
        &self.table[arith::rem_i64(a, self.p) as usize]
    }

    /// `(a, chi(a))` for `a = 0..p`.
    pub fn character_table(&self) -> Vec<(u64, CharValue)> {
        self.table
            .iter()
            .enumerate()
            .map(|(a, v)| (a as u64, v.clone()))
            .collect()
    }

    /// The conjugate character `a -> conj(chi(a))`.
    pub fn conjugate(&self) -> Self {
        MultiplicativeCharacter {
            p: self.p,
            m: self.m,
            pi: self.pi.as_ref().map(QuadraticInteger::conj),
            value_ring: self.value_ring,
            table: self.table.iter().map(CharValue::conj).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiSumValue {
    pub value: QuadraticInteger,
    pub chi_orders: (u32, u32),
}

fn common_ring(a: ValueRing, b: ValueRing) -> Result<RingTag> {
    use ValueRing::*;
    match (a, b) {
        (Integers, Integers) => Ok(RingTag::Gaussian),
        (Integers, Quadratic(r)) | (Quadratic(r), Integers) => Ok(r),
        (Quadratic(r), Quadratic(s)) if r == s => Ok(r),
        (Quadratic(r), Quadratic(s)) => Err(Error::domain(format!(
            "character values in {r} and {s} have no common ring"
        ))),
    }
}

/// `J(chi, psi) = sum over t in F_p of chi(t) * psi(1 - t)`, with
/// `chi(0) = psi(0) = 0`.
pub fn jacobi_sum(chi: &MultiplicativeCharacter, psi: &MultiplicativeCharacter) -> Result<JacobiSumValue> {
    if chi.p != psi.p {
        return Err(Error::domain(format!(
            "characters modulo different primes: {} and {}",
            chi.p, psi.p
        )));
    }
    let ring = common_ring(chi.value_ring, psi.value_ring)?;
    let p = chi.p as i64;
    let mut total = QuadraticInteger::zero(ring);
    for t in 0..p {
        let a = chi.eval(t);
        let b = psi.eval(1 - t);
        if a.is_zero() || b.is_zero() {
            continue;
        }
        total = &total + &(&a.embed(ring)? * &b.embed(ring)?);
    }
    Ok(JacobiSumValue {
        value: total,
        chi_orders: (chi.m, psi.m),
    })
}
