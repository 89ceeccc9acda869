//! Exact arithmetic in the Gaussian integers `Z[i]` and the Eisenstein
//! integers `Z[w]`.
//!
//! Elements are stored as `a + b*xi` in the basis `{1, xi}` where `xi = i`
//! (with `i^2 = -1`) or `xi = w` (with `w^2 = -1 - w`). Coordinates are
//! arbitrary-size integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingTag {
    Gaussian,
    Eisenstein,
}

impl RingTag {
    pub const ALL: [RingTag; 2] = [RingTag::Gaussian, RingTag::Eisenstein];

    pub fn name(self) -> &'static str {
        match self {
            RingTag::Gaussian => "gaussian",
            RingTag::Eisenstein => "eisenstein",
        }
    }

    /// Plain-text symbol of the adjoined generator.
    pub fn symbol(self, unicode: bool) -> &'static str {
        match (self, unicode) {
            (RingTag::Gaussian, _) => "i",
            (RingTag::Eisenstein, false) => "w",
            (RingTag::Eisenstein, true) => "ω",
        }
    }

    /// The rational prime that ramifies: 2 in `Z[i]`, 3 in `Z[w]`.
    pub fn ramified_prime(self) -> u64 {
        match self {
            RingTag::Gaussian => 2,
            RingTag::Eisenstein => 3,
        }
    }

    /// Number of units (4 or 6).
    pub fn unit_count(self) -> usize {
        match self {
            RingTag::Gaussian => 4,
            RingTag::Eisenstein => 6,
        }
    }

    /// Coefficients (lowest degree first) of the minimal polynomial of the
    /// generator: `x^2 + 1` or `x^2 + x + 1`.
    pub fn defining_polynomial(self) -> [u64; 3] {
        match self {
            RingTag::Gaussian => [1, 0, 1],
            RingTag::Eisenstein => [1, 1, 1],
        }
    }

    /// The matching negative discriminant-like parameter of `Q(sqrt(d))`.
    pub fn quadratic_parameter(self) -> i64 {
        match self {
            RingTag::Gaussian => -1,
            RingTag::Eisenstein => -3,
        }
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for RingTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "gaussian" | "g" | "z[i]" => Ok(RingTag::Gaussian),
            "eisenstein" | "e" | "z[w]" => Ok(RingTag::Eisenstein),
            other => Err(Error::Parse(format!("unknown ring '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticInteger {
    ring: RingTag,
    a: BigInt,
    b: BigInt,
}

impl QuadraticInteger {
    pub fn new(ring: RingTag, a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadraticInteger {
            ring,
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn from_int(ring: RingTag, n: impl Into<BigInt>) -> Self {
        Self::new(ring, n, 0)
    }

    pub fn zero(ring: RingTag) -> Self {
        Self::new(ring, 0, 0)
    }

    pub fn one(ring: RingTag) -> Self {
        Self::new(ring, 1, 0)
    }

    /// The generator `i` or `w`.
    pub fn xi(ring: RingTag) -> Self {
        Self::new(ring, 0, 1)
    }

    pub fn ring(&self) -> RingTag {
        self.ring
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// True when the element is a rational integer.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.ring, other.ring))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Self::new(self.ring, &self.a + &other.a, &self.b + &other.b))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Self::new(self.ring, &self.a - &other.a, &self.b - &other.b))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let ac = &self.a * &other.a;
        let bd = &self.b * &other.b;
        let cross = &self.a * &other.b + &self.b * &other.a;
        Ok(match self.ring {
            // (a + bi)(c + di) = (ac - bd) + (ad + bc)i
            RingTag::Gaussian => Self::new(self.ring, ac - bd, cross),
            // w^2 = -1 - w
            RingTag::Eisenstein => Self::new(self.ring, ac - &bd, cross - bd),
        })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.ring, &self.a * k, &self.b * k)
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.ring);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Complex conjugation. In `Z[w]` this sends `a + bw` to `a + bw^2`.
    pub fn conj(&self) -> Self {
        match self.ring {
            RingTag::Gaussian => Self::new(self.ring, self.a.clone(), -&self.b),
            RingTag::Eisenstein => Self::new(self.ring, &self.a - &self.b, -&self.b),
        }
    }

    pub fn norm(&self) -> BigInt {
        match self.ring {
            RingTag::Gaussian => &self.a * &self.a + &self.b * &self.b,
            RingTag::Eisenstein => &self.a * &self.a - &self.a * &self.b + &self.b * &self.b,
        }
    }

    /// `z + conj(z)`, i.e. twice the real part, as an exact integer.
    pub fn trace(&self) -> BigInt {
        match self.ring {
            RingTag::Gaussian => &self.a * 2,
            RingTag::Eisenstein => &self.a * 2 - &self.b,
        }
    }

    /// Euclidean division: `x = q*y + r` with `norm(r) < norm(y)`.
    ///
    /// The exact quotient `x*conj(y)/norm(y)` is rounded coordinate-wise to
    /// the nearest integer, halves toward positive infinity.
    pub fn divrem(&self, y: &Self) -> Result<(Self, Self)> {
        self.same_ring(y)?;
        if y.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = y.norm();
        let num = self * &y.conj();
        let q = Self::new(self.ring, round_half_up(&num.a, &n), round_half_up(&num.b, &n));
        let r = self - &(&q * y);
        Ok((q, r))
    }

    /// Exact quotient `self / y`, if `y` divides `self`.
    pub fn exact_div(&self, y: &Self) -> Result<Option<Self>> {
        self.same_ring(y)?;
        if y.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = y.norm();
        let num = self * &y.conj();
        let (qa, ra) = num.a.div_rem(&n);
        let (qb, rb) = num.b.div_rem(&n);
        Ok((ra.is_zero() && rb.is_zero()).then(|| Self::new(self.ring, qa, qb)))
    }

    pub fn divides(&self, x: &Self) -> bool {
        if self.is_zero() {
            return x.is_zero();
        }
        matches!(x.exact_div(self), Ok(Some(_)))
    }

    pub fn is_associate_of(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        match self.exact_div(other) {
            Ok(Some(u)) => u.is_unit(),
            _ => false,
        }
    }

    /// All `u*z` for `u` in the unit group, in unit-group order.
    pub fn associates(&self) -> Vec<Self> {
        UnitGroup::of(self.ring)
            .elements()
            .iter()
            .map(|u| u * self)
            .collect()
    }

    /// Whether `z` is primary: `z = 2 (mod 3)` in `Z[w]`, `z = 1 (mod (1+i)^3)` in `Z[i]`.
    pub fn is_primary(&self) -> bool {
        match self.ring {
            RingTag::Gaussian => {
                let shifted = self - &Self::one(self.ring);
                let cube = Self::new(self.ring, -2, 2);
                cube.divides(&shifted)
            }
            RingTag::Eisenstein => {
                self.a.mod_floor(&BigInt::from(3)) == BigInt::from(2)
                    && self.b.mod_floor(&BigInt::from(3)).is_zero()
            }
        }
    }

    /// Unit `u` and the primary associate `u*z`.
    pub fn canonical_associate(&self) -> Result<(Self, Self)> {
        if self.is_zero() {
            return Err(Error::domain("zero has no associates"));
        }
        let ram = BigInt::from(self.ring.ramified_prime());
        if self.norm().is_multiple_of(&ram) {
            return Err(Error::NoPrimaryAssociate(self.to_string()));
        }
        UnitGroup::of(self.ring)
            .elements()
            .iter()
            .map(|u| (u.clone(), u * self))
            .find(|(_, zc)| zc.is_primary())
            .ok_or_else(|| Error::Internal(format!("no primary associate found for {self}")))
    }

    /// Associate used when the primary convention is unavailable: the
    /// lexicographically smallest `(a, b)` among associates with `a > 0`,
    /// or `a = 0, b > 0`.
    pub fn lexicographic_associate(&self) -> Self {
        self.associates()
            .into_iter()
            .filter(|z| z.a.is_positive() || (z.a.is_zero() && z.b.is_positive()))
            .min_by(|x, y| (&x.a, &x.b).cmp(&(&y.a, &y.b)))
            .unwrap_or_else(|| self.clone())
    }

    /// Deterministic representative of the associate class: 1 for units,
    /// the primary associate when one exists, otherwise the lexicographic one.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        if self.is_unit() {
            return Self::one(self.ring);
        }
        match self.canonical_associate() {
            Ok((_, zc)) => zc,
            Err(_) => self.lexicographic_associate(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut x, mut y) = (self.clone(), other.clone());
        while !y.is_zero() {
            let (_, r) = x.divrem(&y)?;
            x = y;
            y = r;
        }
        Ok(x.normalized())
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*self + t*other = g`.
    /// `g` is not normalized.
    pub fn xgcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        self.same_ring(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let ring = self.ring;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(ring), Self::zero(ring));
        let (mut t0, mut t1) = (Self::zero(ring), Self::one(ring));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        Ok((r0, s0, t0))
    }

    /// True iff the norm is a rational prime, or `z` is an associate of an
    /// inert rational prime.
    pub fn is_prime_element(&self) -> bool {
        if self.is_zero() || self.is_unit() {
            return false;
        }
        if arith::is_prime_big(&self.norm()) {
            return true;
        }
        self.associates().iter().any(|z| {
            z.b.is_zero()
                && z.a.is_positive()
                && z.a.to_u64().is_some_and(|q| arith::is_prime_u64(q) && is_inert(self.ring, q))
        })
    }

    /// Text rendering `a+b*xi` with the sign folded into the joiner.
    pub fn render(&self, unicode: bool) -> String {
        let sym = self.ring.symbol(unicode);
        let b_term = |b: &BigInt| -> String {
            if b.is_one() {
                sym.to_string()
            } else if *b == -BigInt::one() {
                format!("-{sym}")
            } else {
                format!("{b}{sym}")
            }
        };
        if self.b.is_zero() {
            return self.a.to_string();
        }
        if self.a.is_zero() {
            return b_term(&self.b);
        }
        let tail = b_term(&self.b);
        if tail.starts_with('-') {
            format!("{}{}", self.a, tail)
        } else {
            format!("{}+{}", self.a, tail)
        }
    }

    /// Renders units as signed powers of the generator (`-w^2`, `i`, ...),
    /// other elements as [`QuadraticInteger::render`].
    pub fn render_unit(&self, unicode: bool) -> String {
        let sym = self.ring.symbol(unicode);
        let pairs: &[((i64, i64), &str)] = match self.ring {
            RingTag::Gaussian => &[((1, 0), "1"), ((0, 1), "i"), ((-1, 0), "-1"), ((0, -1), "-i")],
            RingTag::Eisenstein => &[
                ((1, 0), "1"),
                ((1, 1), "-w^2"),
                ((0, 1), "w"),
                ((-1, 0), "-1"),
                ((-1, -1), "w^2"),
                ((0, -1), "-w"),
            ],
        };
        for ((a, b), text) in pairs {
            if self.a == BigInt::from(*a) && self.b == BigInt::from(*b) {
                return text.replace('w', sym);
            }
        }
        self.render(unicode)
    }

    /// Parses `a+bi`, `a-bw`, `3`, `-i`, `2*w`, ... for the given ring.
    /// Accepts `−` for minus and `ω` for `w`.
    pub fn parse(ring: RingTag, text: &str) -> Result<Self> {
        let cleaned: String = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '−' => '-',
                'ω' => 'w',
                other => other,
            })
            .collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty ring element".into()));
        }
        let sym = ring.symbol(false);
        let mut a = BigInt::zero();
        let mut b = BigInt::zero();
        for (negative, body) in split_signed_terms(&cleaned)? {
            let (coef, is_xi) = match body.strip_suffix(sym) {
                Some(rest) => {
                    let rest = rest.strip_suffix('*').unwrap_or(rest);
                    if rest.is_empty() {
                        (BigInt::one(), true)
                    } else {
                        (parse_int(rest, text)?, true)
                    }
                }
                None => (parse_int(body, text)?, false),
            };
            let coef = if negative { -coef } else { coef };
            if is_xi {
                b += coef;
            } else {
                a += coef;
            }
        }
        Ok(Self::new(ring, a, b))
    }
}

fn split_signed_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let mut terms = Vec::new();
    let bytes = s.as_bytes();
    let mut start = 0;
    let mut negative = false;
    if bytes[0] == b'+' || bytes[0] == b'-' {
        negative = bytes[0] == b'-';
        start = 1;
    }
    let mut i = start;
    while i <= bytes.len() {
        if i == bytes.len() || bytes[i] == b'+' || bytes[i] == b'-' {
            let body = &s[start..i];
            if body.is_empty() {
                return Err(Error::Parse(format!("malformed expression '{s}'")));
            }
            terms.push((negative, body));
            if i < bytes.len() {
                negative = bytes[i] == b'-';
            }
            start = i + 1;
        }
        i += 1;
    }
    Ok(terms)
}

fn parse_int(s: &str, whole: &str) -> Result<BigInt> {
    s.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("bad term '{s}' in '{whole}'")))
}

/// `round(u / n)` with halves toward positive infinity, `n > 0`.
fn round_half_up(u: &BigInt, n: &BigInt) -> BigInt {
    let num: BigInt = u * 2 + n;
    let den: BigInt = n * 2;
    num.div_floor(&den)
}

pub(crate) fn is_inert(ring: RingTag, q: u64) -> bool {
    match ring {
        RingTag::Gaussian => q % 4 == 3,
        RingTag::Eisenstein => q % 3 == 2,
    }
}

impl fmt::Display for QuadraticInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// The unit group of `Z[i]` (order 4) or `Z[w]` (order 6), listed as
/// successive powers of a generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitGroup {
    ring: RingTag,
    elements: Vec<QuadraticInteger>,
}

impl UnitGroup {
    pub fn of(ring: RingTag) -> Self {
        let coords: &[(i64, i64)] = match ring {
            RingTag::Gaussian => &[(1, 0), (0, 1), (-1, 0), (0, -1)],
            // 1, -w^2, w, -1, w^2, -w
            RingTag::Eisenstein => &[(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)],
        };
        UnitGroup {
            ring,
            elements: coords
                .iter()
                .map(|&(a, b)| QuadraticInteger::new(ring, a, b))
                .collect(),
        }
    }

    pub fn ring(&self) -> RingTag {
        self.ring
    }

    pub fn elements(&self) -> &[QuadraticInteger] {
        &self.elements
    }

    /// Units `u` with `u^m = 1`.
    pub fn roots_of_unity(&self, m: u64) -> Vec<QuadraticInteger> {
        self.elements
            .iter()
            .filter(|u| u.pow(m).is_one())
            .cloned()
            .collect()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a QuadraticInteger> for &'a QuadraticInteger {
            type Output = QuadraticInteger;

            /// Panics when the operands live in different rings; use the
            /// `checked_*` form to get an error instead.
            fn $method(self, rhs: &'a QuadraticInteger) -> QuadraticInteger {
                self.$checked(rhs).expect("ring mismatch in quadratic integer arithmetic")
            }
        }

        impl $trait for QuadraticInteger {
            type Output = QuadraticInteger;

            fn $method(self, rhs: QuadraticInteger) -> QuadraticInteger {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &QuadraticInteger {
    type Output = QuadraticInteger;

    fn neg(self) -> QuadraticInteger {
        QuadraticInteger::new(self.ring, -&self.a, -&self.b)
    }
}

impl Neg for QuadraticInteger {
    type Output = QuadraticInteger;

    fn neg(self) -> QuadraticInteger {
        -&self
    }
}
