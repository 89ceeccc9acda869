//! Polynomials over `F_p`, quotient fields `F_p[x]/(f)`, and the explicit
//! isomorphism between a lattice field and a polynomial quotient field.

use std::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{check_bound, FiniteField, FiniteRing, DEFAULT_ENUMERATION_BOUND};
use crate::lattice_field::{LatticeField, LatticeFieldElement};

/// Largest degree accepted by the exhaustive irreducibility test.
pub const MAX_IRREDUCIBILITY_DEGREE: usize = 4;

/// Polynomial over `F_p`, coefficients lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyOverFp {
    p: u64,
    coeffs: Vec<u64>,
}

impl PolyOverFp {
    pub fn new(p: u64, coeffs: &[i64]) -> Result<Self> {
        arith::require_prime(p)?;
        Ok(Self::from_residues(p, coeffs.iter().map(|&c| arith::rem_i64(c, p)).collect()))
    }

    fn from_residues(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyOverFp { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        PolyOverFp { p, coeffs: Vec::new() }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::from_residues(p, vec![c % p])
    }

    pub fn x(p: u64) -> Self {
        Self::from_residues(p, vec![0, 1])
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::CharacteristicMismatch(self.p, other.p))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[u64], i: usize| v.get(i).copied().unwrap_or(0);
        Ok(Self::from_residues(
            self.p,
            (0..n)
                .map(|i| (get(&self.coeffs, i) + get(&other.coeffs, i)) % self.p)
                .collect(),
        ))
    }

    pub fn neg(&self) -> Self {
        Self::from_residues(self.p, self.coeffs.iter().map(|c| (self.p - c) % self.p).collect())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::from_residues(self.p, self.coeffs.iter().map(|&c| arith::mul_mod(c, k, self.p)).collect())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.p));
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + arith::mul_mod(a, b, self.p)) % self.p;
            }
        }
        Ok(Self::from_residues(self.p, out))
    }

    /// Long division: `self = q*divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let p = self.p;
        let lead_inv = arith::inv_mod(divisor.leading(), p).ok_or(Error::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = arith::mul_mod(rem[top], lead_inv, p);
            let shift = top - dd;
            quot[shift] = c;
            for (k, &dc) in divisor.coeffs.iter().enumerate() {
                let sub = arith::mul_mod(c, dc, p);
                rem[shift + k] = (rem[shift + k] + p - sub) % p;
            }
            rem.pop();
            while rem.last() == Some(&0) && rem.len() > dd {
                rem.pop();
            }
        }
        Ok((Self::from_residues(p, quot), Self::from_residues(p, rem)))
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (arith::mul_mod(acc, x, self.p) + c) % self.p)
    }

    /// Coefficients as signed integers, for evaluation in other rings.
    pub fn integer_coeffs(&self) -> Vec<i64> {
        self.coeffs.iter().map(|&c| c as i64).collect()
    }

    /// Every monic polynomial of exactly degree `d`.
    fn monic_of_degree(p: u64, d: usize) -> impl Iterator<Item = PolyOverFp> {
        let count = p.pow(d as u32);
        (0..count).map(move |mut n| {
            let mut coeffs = Vec::with_capacity(d + 1);
            for _ in 0..d {
                coeffs.push(n % p);
                n /= p;
            }
            coeffs.push(1);
            PolyOverFp { p, coeffs }
        })
    }

    /// Decided by trial division over all monic polynomials of degree
    /// `1..=deg/2`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let d = match self.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::domain("irreducibility needs degree >= 1")),
        };
        if d > MAX_IRREDUCIBILITY_DEGREE {
            return Err(Error::BoundExceeded {
                what: "irreducibility test degree",
                size: d.to_string(),
                bound: MAX_IRREDUCIBILITY_DEGREE as u64,
            });
        }
        let candidates: u64 = (1..=d / 2).map(|k| self.p.saturating_pow(k as u32)).sum();
        check_bound("irreducibility trial divisors", candidates, DEFAULT_ENUMERATION_BOUND)?;
        for k in 1..=d / 2 {
            for g in Self::monic_of_degree(self.p, k) {
                if self.divrem(&g)?.1.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// First monic irreducible polynomial of degree `d` in enumeration order.
    pub fn smallest_irreducible(p: u64, d: usize) -> Result<Self> {
        arith::require_prime(p)?;
        for f in Self::monic_of_degree(p, d) {
            if f.is_irreducible()? {
                return Ok(f);
            }
        }
        Err(Error::Internal(format!("no irreducible polynomial of degree {d} over F_{p}")))
    }

    /// Renders with the given variable name, highest degree first:
    /// `x^2+x+2`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            terms.push(match (c, k) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}{mono}"),
            });
        }
        terms.join("+")
    }

    /// Parses `x^2+x+2`, `2 + 1*x + 1*x^2`, `x^2-1`, ...
    pub fn parse(p: u64, text: &str) -> Result<Self> {
        arith::require_prime(p)?;
        let cleaned: String = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '−' { '-' } else { c })
            .collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut coeffs: Vec<i64> = Vec::new();
        let mut pos = 0usize;
        let bytes = cleaned.as_bytes();
        while pos < bytes.len() {
            let mut sign = 1i64;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -1;
                }
                pos += 1;
            }
            let end = cleaned[pos..]
                .find(['+', '-'])
                .map(|k| pos + k)
                .unwrap_or(bytes.len());
            let term = &cleaned[pos..end];
            if term.is_empty() {
                return Err(Error::Parse(format!("malformed polynomial '{text}'")));
            }
            let bad = || Error::Parse(format!("bad term '{term}' in '{text}'"));
            let (coef, power) = match term.find('x') {
                None => (term.parse::<i64>().map_err(|_| bad())?, 0usize),
                Some(ix) => {
                    let head = term[..ix].trim_end_matches('*');
                    let coef = if head.is_empty() { 1 } else { head.parse::<i64>().map_err(|_| bad())? };
                    let tail = &term[ix + 1..];
                    let power = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .and_then(|t| t.parse::<usize>().ok())
                            .ok_or_else(bad)?
                    };
                    (coef, power)
                }
            };
            if coeffs.len() <= power {
                coeffs.resize(power + 1, 0);
            }
            coeffs[power] += sign * coef;
            pos = end;
        }
        Self::new(p, &coeffs)
    }
}

impl fmt::Display for PolyOverFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

/// `F_p[x]/(f)` for a monic irreducible `f` of degree at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyField {
    p: u64,
    modulus: PolyOverFp,
    d: usize,
    q: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyFieldElement {
    rep: PolyOverFp,
}

impl PolyFieldElement {
    pub fn rep(&self) -> &PolyOverFp {
        &self.rep
    }

    /// Rendering with `θ` (or `t` in ASCII) as the adjoined root.
    pub fn render(&self, unicode: bool) -> String {
        self.rep.render(if unicode { "θ" } else { "t" })
    }
}

impl fmt::Display for PolyFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

pub fn make_poly_field(f: &PolyOverFp) -> Result<PolyField> {
    PolyField::new(f)
}

impl PolyField {
    pub fn new(modulus: &PolyOverFp) -> Result<Self> {
        let d = modulus.degree().unwrap_or(0);
        if d < 2 {
            return Err(Error::domain("quotient field modulus must have degree >= 2"));
        }
        if !modulus.is_monic() {
            return Err(Error::domain(format!("modulus {modulus} is not monic")));
        }
        if !modulus.is_irreducible()? {
            return Err(Error::domain(format!("modulus {modulus} is reducible over F_{}", modulus.p)));
        }
        let q = modulus
            .p
            .checked_pow(d as u32)
            .ok_or_else(|| Error::BoundExceeded {
                what: "polynomial field size",
                size: format!("{}^{d}", modulus.p),
                bound: u64::MAX,
            })?;
        Ok(PolyField {
            p: modulus.p,
            modulus: modulus.clone(),
            d,
            q,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn modulus(&self) -> &PolyOverFp {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn element(&self, poly: &PolyOverFp) -> Result<PolyFieldElement> {
        let (_, r) = poly.divrem(&self.modulus)?;
        Ok(PolyFieldElement { rep: r })
    }

    /// The class of `x`, i.e. the adjoined root.
    pub fn theta(&self) -> PolyFieldElement {
        self.element(&PolyOverFp::x(self.p)).expect("same characteristic")
    }

    fn reduce(&self, poly: &PolyOverFp) -> PolyFieldElement {
        self.element(poly).expect("same characteristic")
    }

    pub fn frobenius_map(&self, x: &PolyFieldElement) -> PolyFieldElement {
        self.pow(x, self.p)
    }
}

impl FiniteRing for PolyField {
    type Elem = PolyFieldElement;

    fn order(&self) -> u64 {
        self.q
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    /// Ordered by the coefficient tuple read from the highest degree down:
    /// `0, 1, 2, t, t+1, ...`.
    fn elements_bounded(&self, bound: u64) -> Result<Vec<PolyFieldElement>> {
        check_bound("polynomial field enumeration", self.q, bound)?;
        let (p, d) = (self.p, self.d);
        Ok((0..self.q)
            .map(|mut n| {
                let mut coeffs = Vec::with_capacity(d);
                for _ in 0..d {
                    coeffs.push(n % p);
                    n /= p;
                }
                PolyFieldElement {
                    rep: PolyOverFp::from_residues(p, coeffs),
                }
            })
            .collect())
    }

    fn zero(&self) -> PolyFieldElement {
        PolyFieldElement {
            rep: PolyOverFp::zero(self.p),
        }
    }

    fn one(&self) -> PolyFieldElement {
        PolyFieldElement {
            rep: PolyOverFp::constant(self.p, 1),
        }
    }

    fn from_int(&self, n: i64) -> PolyFieldElement {
        PolyFieldElement {
            rep: PolyOverFp::constant(self.p, arith::rem_i64(n, self.p)),
        }
    }

    fn add(&self, x: &PolyFieldElement, y: &PolyFieldElement) -> PolyFieldElement {
        PolyFieldElement {
            rep: x.rep.add(&y.rep).expect("same characteristic"),
        }
    }

    fn neg(&self, x: &PolyFieldElement) -> PolyFieldElement {
        PolyFieldElement { rep: x.rep.neg() }
    }

    fn mul(&self, x: &PolyFieldElement, y: &PolyFieldElement) -> PolyFieldElement {
        self.reduce(&x.rep.mul(&y.rep).expect("same characteristic"))
    }

    fn render(&self, x: &PolyFieldElement) -> String {
        x.render(false)
    }
}

impl FiniteField for PolyField {
    /// Extended Euclid in `F_p[x]`.
    fn inv(&self, x: &PolyFieldElement) -> Result<PolyFieldElement> {
        if x.rep.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let p = self.p;
        let (mut r0, mut r1) = (self.modulus.clone(), x.rep.clone());
        let (mut t0, mut t1) = (PolyOverFp::zero(p), PolyOverFp::constant(p, 1));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let t2 = t0.sub(&q.mul(&t1)?)?;
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t2);
        }
        // r0 is a nonzero constant
        let c = arith::inv_mod(r0.leading(), p).ok_or(Error::ZeroInverse)?;
        Ok(self.reduce(&t0.scale(c)))
    }
}

/// All elements `e` of `field` with `f(e) = 0`, in canonical order.
pub fn find_roots<K: FiniteRing>(f: &PolyOverFp, field: &K) -> Result<Vec<K::Elem>> {
    if f.p() != field.characteristic() {
        return Err(Error::CharacteristicMismatch(f.p(), field.characteristic()));
    }
    let coeffs = f.integer_coeffs();
    let zero = field.zero();
    Ok(field
        .elements()?
        .into_iter()
        .filter(|e| field.eval_poly(&coeffs, e) == zero)
        .collect())
}

/// Explicit isomorphism `Z[xi]/(pi) -> F_p[x]/(f)`, determined by the image
/// of `xi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldIsomorphism {
    /// Image of the generator `xi`: a root of its minimal polynomial.
    pub root: PolyFieldElement,
    /// `(x, phi(x))` for every `x` in the lattice field, canonical order.
    pub table: Vec<(LatticeFieldElement, PolyFieldElement)>,
}

impl FieldIsomorphism {
    pub fn apply(&self, x: &LatticeFieldElement) -> Option<&PolyFieldElement> {
        self.table.iter().find(|(a, _)| a == x).map(|(_, b)| b)
    }
}

/// Every isomorphism from `a` to `b`, one per root of the generator's
/// minimal polynomial that yields a verified field isomorphism.
pub fn all_isomorphisms(a: &LatticeField, b: &PolyField) -> Result<Vec<FieldIsomorphism>> {
    if a.q() != b.q() {
        return Err(Error::domain(format!(
            "field sizes differ: {} vs {}",
            a.q(),
            b.q()
        )));
    }
    if a.f() != 2 {
        return Err(Error::domain("isomorphism search needs an inert (f = 2) lattice field"));
    }
    let minimal = PolyOverFp::new(
        b.p(),
        &a.ring().defining_polynomial().map(|c| c as i64),
    )?;
    let roots = find_roots(&minimal, b)?;
    if roots.is_empty() {
        return Err(Error::domain(format!("{minimal} has no root in F_{}", b.q())));
    }
    let elems = a.enumerate()?;
    let mut found = Vec::new();
    for root in roots {
        let image = |x: &LatticeFieldElement| -> PolyFieldElement {
            let rep = x.rep();
            let ca = b.from_int(arith::rem_big(rep.a(), b.p()) as i64);
            let cb = b.from_int(arith::rem_big(rep.b(), b.p()) as i64);
            b.add(&ca, &b.mul(&cb, &root))
        };
        let table: Vec<_> = elems.iter().map(|x| (x.clone(), image(x))).collect();
        if is_isomorphism(a, b, &table) {
            found.push(FieldIsomorphism { root, table });
        }
    }
    Ok(found)
}

/// The canonical isomorphism: the one whose generator image is smallest.
pub fn find_isomorphism(a: &LatticeField, b: &PolyField) -> Result<FieldIsomorphism> {
    all_isomorphisms(a, b)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::domain("no root of the generator's minimal polynomial gives an isomorphism"))
}

fn is_isomorphism(
    a: &LatticeField,
    b: &PolyField,
    table: &[(LatticeFieldElement, PolyFieldElement)],
) -> bool {
    let lookup = |x: &LatticeFieldElement| -> &PolyFieldElement {
        &table.iter().find(|(k, _)| k == x).expect("total map").1
    };
    let mut images: Vec<_> = table.iter().map(|(_, v)| v.clone()).collect();
    images.sort_by(|x, y| x.rep.coeffs.iter().rev().cmp(y.rep.coeffs.iter().rev()));
    images.dedup();
    if images.len() != table.len() || *lookup(&a.one()) != b.one() {
        return false;
    }
    table.iter().all(|(x, fx)| {
        table.iter().all(|(y, fy)| {
            *lookup(&a.add(x, y)) == b.add(fx, fy) && *lookup(&a.mul(x, y)) == b.mul(fx, fy)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{verify_field_axioms, PrimeField, DEFAULT_AXIOM_BOUND};
    use crate::rings::{QuadraticInteger, RingTag};

    fn poly(p: u64, c: &[i64]) -> PolyOverFp {
        PolyOverFp::new(p, c).unwrap()
    }

    #[test]
    fn arithmetic() {
        let f = poly(3, &[2, 1, 1]);
        assert_eq!(f.mul(&poly(3, &[1])).unwrap(), f);
        let (q, r) = poly(3, &[0, 0, 1]).divrem(&f).unwrap();
        assert_eq!(q, poly(3, &[1]));
        assert_eq!(r, poly(3, &[1, 2]));
        assert!(poly(3, &[1, 1]).add(&poly(3, &[2, 2])).unwrap().is_zero());
        assert_eq!(f.divrem(&PolyOverFp::zero(3)), Err(Error::DivisionByZero));
        assert_eq!(f.add(&poly(5, &[1])), Err(Error::CharacteristicMismatch(3, 5)));
    }

    #[test]
    fn divrem_reconstructs() {
        let a = poly(7, &[3, 0, 5, 1, 6, 2]);
        let b = poly(7, &[1, 4, 3]);
        let (q, r) = a.divrem(&b).unwrap();
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
    }

    #[test]
    fn irreducibility() {
        assert!(poly(3, &[2, 1, 1]).is_irreducible().unwrap());
        assert!(poly(3, &[1, 0, 1]).is_irreducible().unwrap());
        assert!(!poly(5, &[1, 0, 1]).is_irreducible().unwrap());
        assert_eq!(
            poly(5, &[1, 0, 1]),
            poly(5, &[2, 1]).mul(&poly(5, &[3, 1])).unwrap()
        );
        assert!(poly(2, &[1, 1, 0, 0, 1]).is_irreducible().unwrap());
        assert!(!poly(2, &[1, 0, 0, 0, 1]).is_irreducible().unwrap());
        assert!(poly(3, &[1, 0, 0, 0, 0, 1]).is_irreducible().unwrap_err().is_resource());
        assert!(poly(3, &[2]).is_irreducible().is_err());
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(PolyOverFp::parse(3, "x^2+x+2").unwrap(), poly(3, &[2, 1, 1]));
        assert_eq!(PolyOverFp::parse(3, "2 + 1*x + 1*x^2").unwrap(), poly(3, &[2, 1, 1]));
        assert_eq!(PolyOverFp::parse(5, "x^2 − 1").unwrap(), poly(5, &[4, 0, 1]));
        assert_eq!(PolyOverFp::parse(5, "3x").unwrap(), poly(5, &[0, 3]));
        assert!(PolyOverFp::parse(5, "x^").is_err());
        assert!(PolyOverFp::parse(5, "y+1").is_err());
        assert_eq!(poly(3, &[2, 1, 1]).to_string(), "x^2+x+2");
        assert_eq!(poly(3, &[0, 2]).to_string(), "2x");
    }

    #[test]
    fn quotient_field_elements() {
        let field = make_poly_field(&poly(3, &[2, 1, 1])).unwrap();
        let names: Vec<String> = field.elements().unwrap().iter().map(|e| e.to_string()).collect();
        assert_eq!(
            names,
            vec!["0", "1", "2", "θ", "θ+1", "θ+2", "2θ", "2θ+1", "2θ+2"]
        );
        let theta = field.theta();
        assert_eq!(field.mul(&theta, &theta).to_string(), "2θ+1");
        let other = field.element(&poly(3, &[2, 2])).unwrap();
        let f = poly(3, &[2, 1, 1]);
        assert_eq!(field.eval_poly(&f.integer_coeffs(), &other), field.zero());
        assert!(make_poly_field(&poly(5, &[1, 0, 1])).is_err());
        assert!(make_poly_field(&poly(5, &[1, 1])).is_err());
        assert!(make_poly_field(&poly(3, &[2, 2, 2])).is_err());
    }

    #[test]
    fn quotient_field_axioms_and_inverse() {
        for f in [poly(3, &[2, 1, 1]), poly(3, &[1, 0, 1]), poly(7, &[1, 0, 1]), poly(2, &[1, 1, 0, 1])] {
            let field = PolyField::new(&f).unwrap();
            let report = verify_field_axioms(&field, DEFAULT_AXIOM_BOUND).unwrap();
            assert!(report.passed, "{f}: {:?}", report.counterexample);
            for x in field.elements().unwrap().into_iter().skip(1) {
                assert_eq!(field.mul(&x, &field.inv(&x).unwrap()), field.one());
            }
        }
    }

    #[test]
    fn roots() {
        let f = poly(3, &[2, 1, 1]);
        let field = PolyField::new(&f).unwrap();
        let r: Vec<String> = find_roots(&f, &field).unwrap().iter().map(|e| e.to_string()).collect();
        assert_eq!(r, vec!["θ", "2θ+2"]);

        let f9 = LatticeField::new(&QuadraticInteger::from_int(RingTag::Gaussian, 3)).unwrap();
        let r: Vec<String> = find_roots(&poly(3, &[1, 0, 1]), &f9).unwrap().iter().map(|e| e.to_string()).collect();
        assert_eq!(r, vec!["i", "2i"]);

        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(find_roots(&poly(5, &[1, 0, 1]), &f5).unwrap(), vec![2, 3]);
        assert!(find_roots(&poly(7, &[1, 0, 1]), &f5).is_err());
    }

    #[test]
    fn isomorphisms() {
        let f9 = LatticeField::new(&QuadraticInteger::from_int(RingTag::Gaussian, 3)).unwrap();
        let b = PolyField::new(&poly(3, &[1, 0, 1])).unwrap();
        let all = all_isomorphisms(&f9, &b).unwrap();
        assert_eq!(all.len(), 2);
        let iso = find_isomorphism(&f9, &b).unwrap();
        assert_eq!(iso.root, b.theta());

        let b2 = PolyField::new(&poly(3, &[2, 1, 1])).unwrap();
        let iso2 = find_isomorphism(&f9, &b2).unwrap();
        let minimal = poly(3, &[1, 0, 1]);
        assert_eq!(b2.eval_poly(&minimal.integer_coeffs(), &iso2.root), b2.zero());
        for (x, fx) in &iso2.table {
            assert_eq!(iso2.apply(&f9.frobenius_map(x)).unwrap(), &b2.frobenius_map(fx));
        }

        let f5 = LatticeField::new(&QuadraticInteger::new(RingTag::Gaussian, 2, 1)).unwrap();
        assert!(find_isomorphism(&f5, &b).is_err());
        let f49 = LatticeField::new(&QuadraticInteger::from_int(RingTag::Gaussian, 7)).unwrap();
        assert!(find_isomorphism(&f49, &b).is_err());
    }
}
