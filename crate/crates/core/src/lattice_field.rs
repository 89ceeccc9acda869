//! Finite fields realized as lattice quotients `Z[xi]/(pi)`.
//!
//! For a split prime `pi` (norm `p`) the canonical representatives are the
//! rational integers `0..p`; for an inert prime `p` they are the grid
//! points `a + b*xi` with `0 <= a, b < p`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{self, check_bound, FiniteField, FiniteRing};
use crate::rings::{QuadraticInteger, RingTag, UnitGroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeField {
    ring: RingTag,
    modulus: QuadraticInteger,
    p: u64,
    f: u32,
    q: u64,
    /// For `f = 1`: the residue `s` with `xi = s (mod pi)`.
    root: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeFieldElement {
    rep: QuadraticInteger,
}

impl LatticeFieldElement {
    pub fn rep(&self) -> &QuadraticInteger {
        &self.rep
    }

    /// Representative as a rational integer, for prime-field models.
    pub fn as_integer(&self) -> Option<u64> {
        if self.rep.is_rational() {
            self.rep.a().to_u64()
        } else {
            None
        }
    }
}

impl fmt::Display for LatticeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

/// `make_field(ring, modulus)`: checks that the modulus lives in `ring`.
pub fn make_field(ring: RingTag, modulus: &QuadraticInteger) -> Result<LatticeField> {
    if modulus.ring() != ring {
        return Err(Error::RingMismatch(ring, modulus.ring()));
    }
    LatticeField::new(modulus)
}

impl LatticeField {
    pub fn new(modulus: &QuadraticInteger) -> Result<Self> {
        let ring = modulus.ring();
        if !modulus.is_prime_element() {
            return Err(Error::ModulusNotPrime(modulus.to_string()));
        }
        let norm = modulus.norm();
        let too_big = || Error::BoundExceeded {
            what: "lattice field modulus",
            size: norm.to_string(),
            bound: u64::MAX,
        };
        if arith::is_prime_big(&norm) {
            let p = norm.to_u64().ok_or_else(too_big)?;
            if p == ring.ramified_prime() {
                return Err(Error::RamifiedModulus(modulus.to_string()));
            }
            // pi = c + d*xi = 0 gives xi = -c/d (mod p)
            let c = arith::rem_big(modulus.a(), p);
            let d = arith::rem_big(modulus.b(), p);
            let d_inv = arith::inv_mod(d, p)
                .ok_or_else(|| Error::Internal(format!("{modulus}: xi coefficient divisible by {p}")))?;
            let root = arith::mul_mod((p - c) % p, d_inv, p);
            Ok(LatticeField {
                ring,
                modulus: modulus.clone(),
                p,
                f: 1,
                q: p,
                root: Some(root),
            })
        } else {
            // associate of an inert rational prime
            let rational = modulus
                .associates()
                .into_iter()
                .find(|z| z.is_rational() && z.a().is_positive())
                .ok_or_else(|| Error::ModulusNotPrime(modulus.to_string()))?;
            let p = rational.a().to_u64().ok_or_else(too_big)?;
            let q = p.checked_mul(p).ok_or_else(too_big)?;
            Ok(LatticeField {
                ring,
                modulus: modulus.clone(),
                p,
                f: 2,
                q,
                root: None,
            })
        }
    }

    pub fn ring(&self) -> RingTag {
        self.ring
    }

    pub fn modulus(&self) -> &QuadraticInteger {
        &self.modulus
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Residue degree.
    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The residue of the generator, for split moduli.
    pub fn root(&self) -> Option<u64> {
        self.root
    }

    pub fn reduce(&self, z: &QuadraticInteger) -> Result<LatticeFieldElement> {
        if z.ring() != self.ring {
            return Err(Error::RingMismatch(self.ring, z.ring()));
        }
        Ok(self.reduce_unchecked(z))
    }

    fn reduce_unchecked(&self, z: &QuadraticInteger) -> LatticeFieldElement {
        let p = self.p;
        let rep = match self.root {
            Some(s) => {
                let a = arith::rem_big(z.a(), p);
                let b = arith::rem_big(z.b(), p);
                QuadraticInteger::from_int(self.ring, (a + arith::mul_mod(b, s, p)) % p)
            }
            None => QuadraticInteger::new(self.ring, arith::rem_big(z.a(), p), arith::rem_big(z.b(), p)),
        };
        LatticeFieldElement { rep }
    }

    pub fn reduce_int(&self, n: i64) -> LatticeFieldElement {
        self.reduce_unchecked(&QuadraticInteger::from_int(self.ring, n))
    }

    /// Canonical representatives ordered lexicographically by `(a, b)`.
    pub fn enumerate(&self) -> Result<Vec<LatticeFieldElement>> {
        self.elements()
    }

    pub fn frobenius_map(&self, x: &LatticeFieldElement) -> LatticeFieldElement {
        self.pow(x, self.p)
    }

    pub fn multiplicative_generator(&self) -> Result<LatticeFieldElement> {
        field::multiplicative_generator(self, field::DEFAULT_ENUMERATION_BOUND)
    }

    /// The `m`-th root of unity of the ambient ring reducing to `e`.
    pub fn unit_residue_lookup(&self, e: &LatticeFieldElement, m: u64) -> Result<QuadraticInteger> {
        let supported = match self.ring {
            RingTag::Gaussian => matches!(m, 2 | 4),
            RingTag::Eisenstein => matches!(m, 2 | 3 | 6),
        };
        if !supported {
            return Err(Error::domain(format!(
                "{} has no primitive {m}-th roots of unity",
                self.ring
            )));
        }
        if self.f != 1 {
            return Err(Error::domain("root-of-unity lookup needs a prime-field model (f = 1)"));
        }
        UnitGroup::of(self.ring)
            .roots_of_unity(m)
            .into_iter()
            .find(|u| self.reduce_unchecked(u) == *e)
            .ok_or(Error::NotRootOfUnityResidue)
    }

    /// Alternate view of the residues: each class represented by the lattice
    /// point `z = pi*(s + t*xi)` with `0 <= s, t < 1`, i.e. inside the
    /// parallelogram spanned by `pi` and `xi*pi`. Returned as
    /// `(lattice point, canonical element)` in canonical element order.
    pub fn fundamental_domain(&self) -> Result<Vec<(QuadraticInteger, LatticeFieldElement)>> {
        check_bound("fundamental domain", self.q, field::DEFAULT_ENUMERATION_BOUND)?;
        let pi = &self.modulus;
        let n = pi.norm();
        let conj = pi.conj();
        let reach: BigInt = (pi.a().abs() + pi.b().abs()) * 2 + 1;
        let reach = reach.to_i64().ok_or_else(|| Error::Internal("modulus too large".into()))?;
        let mut points = Vec::with_capacity(self.q as usize);
        for c in -reach..=reach {
            for d in -reach..=reach {
                let z = QuadraticInteger::new(self.ring, c, d);
                let w = &z * &conj;
                let inside = |x: &BigInt| !x.is_negative() && *x < n;
                if inside(w.a()) && inside(w.b()) {
                    points.push((z.clone(), self.reduce_unchecked(&z)));
                }
            }
        }
        if points.len() as u64 != self.q {
            return Err(Error::Internal(format!(
                "fundamental domain has {} points, expected {}",
                points.len(),
                self.q
            )));
        }
        let order = self.enumerate()?;
        points.sort_by_key(|(_, e)| order.iter().position(|x| x == e));
        Ok(points)
    }
}

impl FiniteRing for LatticeField {
    type Elem = LatticeFieldElement;

    fn order(&self) -> u64 {
        self.q
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn elements_bounded(&self, bound: u64) -> Result<Vec<LatticeFieldElement>> {
        check_bound("lattice field enumeration", self.q, bound)?;
        let p = self.p;
        let ring = self.ring;
        Ok(if self.f == 1 {
            (0..p)
                .map(|a| LatticeFieldElement {
                    rep: QuadraticInteger::from_int(ring, a),
                })
                .collect()
        } else {
            (0..p)
                .flat_map(|a| {
                    (0..p).map(move |b| LatticeFieldElement {
                        rep: QuadraticInteger::new(ring, a, b),
                    })
                })
                .collect()
        })
    }

    fn zero(&self) -> LatticeFieldElement {
        self.reduce_int(0)
    }

    fn one(&self) -> LatticeFieldElement {
        self.reduce_int(1)
    }

    fn from_int(&self, n: i64) -> LatticeFieldElement {
        self.reduce_int(n)
    }

    fn add(&self, x: &LatticeFieldElement, y: &LatticeFieldElement) -> LatticeFieldElement {
        self.reduce_unchecked(&(&x.rep + &y.rep))
    }

    fn neg(&self, x: &LatticeFieldElement) -> LatticeFieldElement {
        self.reduce_unchecked(&-&x.rep)
    }

    fn mul(&self, x: &LatticeFieldElement, y: &LatticeFieldElement) -> LatticeFieldElement {
        self.reduce_unchecked(&(&x.rep * &y.rep))
    }

    fn render(&self, x: &LatticeFieldElement) -> String {
        x.to_string()
    }
}

impl FiniteField for LatticeField {
    /// Extended Euclid in the ambient ring: `u*z + v*pi = g` with `g` a unit.
    fn inv(&self, x: &LatticeFieldElement) -> Result<LatticeFieldElement> {
        if x.rep.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let (g, u, _) = x.rep.xgcd(&self.modulus)?;
        if !g.is_unit() {
            return Err(Error::Internal(format!("{} and {} not coprime", x.rep, self.modulus)));
        }
        // g^-1 = conj(g) for units
        Ok(self.reduce_unchecked(&(&u * &g.conj())))
    }
}

/// Quotient `Z[xi]/(m)` for an arbitrary nonzero `m`, which need not be a
/// field. Representatives come from the Hermite normal form
/// `{(A, 0), (B, C)}` of the ideal lattice: `a + b*xi` with `0 <= b < C`,
/// `0 <= a < A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawQuotient {
    ring: RingTag,
    modulus: QuadraticInteger,
    col_a: BigInt,
    col_b: (BigInt, BigInt),
    order: u64,
    characteristic: u64,
}

impl RawQuotient {
    pub fn new(modulus: &QuadraticInteger) -> Result<Self> {
        if modulus.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ring = modulus.ring();
        let v1 = modulus.clone();
        let v2 = modulus * &QuadraticInteger::xi(ring);
        let ext = v1.b().extended_gcd(v2.b());
        let c = ext.gcd.clone();
        let b0 = v1.a() * &ext.x + v2.a() * &ext.y;
        let a_col = ((v2.b() / &c) * v1.a() - (v1.b() / &c) * v2.a()).abs();
        let b_col = b0.mod_floor(&a_col);
        let norm = modulus.norm();
        if &a_col * &c != norm {
            return Err(Error::Internal(format!("bad normal form for {modulus}")));
        }
        let order = norm
            .to_u64()
            .ok_or_else(|| Error::BoundExceeded {
                what: "raw quotient",
                size: norm.to_string(),
                bound: u64::MAX,
            })?;
        // additive order of 1 is A
        let characteristic = a_col.to_u64().unwrap_or(0);
        Ok(RawQuotient {
            ring,
            modulus: modulus.clone(),
            col_a: a_col,
            col_b: (b_col, c),
            order,
            characteristic,
        })
    }

    pub fn modulus(&self) -> &QuadraticInteger {
        &self.modulus
    }

    pub fn reduce(&self, z: &QuadraticInteger) -> QuadraticInteger {
        let (bb, cc) = &self.col_b;
        let k = z.b().div_floor(cc);
        let a = (z.a() - &k * bb).mod_floor(&self.col_a);
        let b = z.b() - &k * cc;
        QuadraticInteger::new(self.ring, a, b)
    }
}

impl FiniteRing for RawQuotient {
    type Elem = QuadraticInteger;

    fn order(&self) -> u64 {
        self.order
    }

    fn characteristic(&self) -> u64 {
        self.characteristic
    }

    fn elements_bounded(&self, bound: u64) -> Result<Vec<QuadraticInteger>> {
        check_bound("raw quotient enumeration", self.order, bound)?;
        let a_max = self.col_a.to_u64().unwrap_or(0);
        let b_max = self.col_b.1.to_u64().unwrap_or(0);
        let ring = self.ring;
        Ok((0..a_max)
            .flat_map(|a| (0..b_max).map(move |b| QuadraticInteger::new(ring, a, b)))
            .collect())
    }

    fn zero(&self) -> QuadraticInteger {
        QuadraticInteger::zero(self.ring)
    }

    fn one(&self) -> QuadraticInteger {
        self.reduce(&QuadraticInteger::one(self.ring))
    }

    fn from_int(&self, n: i64) -> QuadraticInteger {
        self.reduce(&QuadraticInteger::from_int(self.ring, n))
    }

    fn add(&self, x: &QuadraticInteger, y: &QuadraticInteger) -> QuadraticInteger {
        self.reduce(&(x + y))
    }

    fn neg(&self, x: &QuadraticInteger) -> QuadraticInteger {
        self.reduce(&-x)
    }

    fn mul(&self, x: &QuadraticInteger, y: &QuadraticInteger) -> QuadraticInteger {
        self.reduce(&(x * y))
    }

    fn render(&self, x: &QuadraticInteger) -> String {
        x.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{verify_field_axioms, DEFAULT_AXIOM_BOUND};

    fn g(a: i64, b: i64) -> QuadraticInteger {
        QuadraticInteger::new(RingTag::Gaussian, a, b)
    }

    fn e(a: i64, b: i64) -> QuadraticInteger {
        QuadraticInteger::new(RingTag::Eisenstein, a, b)
    }

    #[test]
    fn make_field_examples() {
        let f5 = make_field(RingTag::Gaussian, &g(2, 1)).unwrap();
        assert_eq!((f5.q(), f5.f(), f5.p()), (5, 1, 5));
        let f9 = make_field(RingTag::Gaussian, &g(3, 0)).unwrap();
        assert_eq!((f9.q(), f9.f(), f9.p()), (9, 2, 3));
        assert_eq!(make_field(RingTag::Gaussian, &g(0, 3)).unwrap().q(), 9);
        assert_eq!(
            make_field(RingTag::Gaussian, &g(4, 0)),
            Err(Error::ModulusNotPrime("4".into()))
        );
        assert!(matches!(
            make_field(RingTag::Gaussian, &g(5, 0)),
            Err(Error::ModulusNotPrime(_))
        ));
        assert!(matches!(
            make_field(RingTag::Gaussian, &g(1, 1)),
            Err(Error::RamifiedModulus(_))
        ));
        assert!(matches!(
            make_field(RingTag::Eisenstein, &e(1, -1)),
            Err(Error::RamifiedModulus(_))
        ));
        assert!(make_field(RingTag::Eisenstein, &g(3, 0)).is_err());
    }

    #[test]
    fn reduce_examples() {
        let f5 = LatticeField::new(&g(2, 1)).unwrap();
        assert_eq!(f5.reduce(&g(0, 1)).unwrap().rep(), &g(3, 0));
        // (i - 3)/(2 + i) = -1 + i is integral
        assert_eq!((&g(-3, 1)).exact_div(&g(2, 1)).unwrap(), Some(g(-1, 1)));

        let f9 = LatticeField::new(&g(3, 0)).unwrap();
        assert_eq!(f9.reduce(&g(0, -1)).unwrap().rep(), &g(0, 2));

        let f13 = LatticeField::new(&e(-1, 3)).unwrap();
        assert_eq!(f13.reduce(&e(0, 1)).unwrap().rep(), &e(9, 0));
        assert_eq!(f13.reduce(&e(-1, -1)).unwrap().rep(), &e(3, 0));

        assert!(f13.reduce(&g(1, 0)).is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let f9 = LatticeField::new(&g(3, 0)).unwrap();
        let one_plus_i = f9.reduce(&g(1, 1)).unwrap();
        assert_eq!(f9.mul(&one_plus_i, &one_plus_i).rep(), &g(0, 2));
        let i = f9.reduce(&g(0, 1)).unwrap();
        assert_eq!(f9.pow(&i, 4), f9.one());

        let f5 = LatticeField::new(&g(2, 1)).unwrap();
        assert_eq!(f5.inv(&f5.reduce_int(2)).unwrap(), f5.reduce_int(3));
        assert_eq!(f5.inv(&f5.zero()), Err(Error::ZeroInverse));
    }

    #[test]
    fn inverses_exhaustive() {
        for modulus in [g(2, 1), g(3, 0), g(7, 0), e(-1, 3), e(5, 0), e(2, 0)] {
            let field = LatticeField::new(&modulus).unwrap();
            for x in field.enumerate().unwrap() {
                if x.rep().is_zero() {
                    continue;
                }
                let inv = field.inv(&x).unwrap();
                assert_eq!(field.mul(&x, &inv), field.one(), "{x} mod {modulus}");
            }
        }
    }

    #[test]
    fn enumeration() {
        let f5 = LatticeField::new(&g(2, 1)).unwrap();
        let reps: Vec<String> = f5.enumerate().unwrap().iter().map(|x| x.to_string()).collect();
        assert_eq!(reps, vec!["0", "1", "2", "3", "4"]);
        let f9 = LatticeField::new(&g(3, 0)).unwrap();
        let all = f9.enumerate().unwrap();
        assert_eq!(all.len(), 9);
        assert_eq!(all[1].rep(), &g(0, 1));
        assert_eq!(all[3].rep(), &g(1, 0));
        assert_eq!(LatticeField::new(&e(5, 0)).unwrap().enumerate().unwrap().len(), 25);
        let big = LatticeField::new(&g(1019, 0)).unwrap();
        assert!(big.enumerate().unwrap_err().is_resource());
    }

    #[test]
    fn frobenius_map_examples() {
        let f9 = LatticeField::new(&g(3, 0)).unwrap();
        let i = f9.reduce(&g(0, 1)).unwrap();
        assert_eq!(f9.frobenius_map(&i).rep(), &g(0, 2));
        let two = f9.reduce_int(2);
        assert_eq!(f9.frobenius_map(&two), two);
        let f5 = LatticeField::new(&g(2, 1)).unwrap();
        for x in f5.enumerate().unwrap() {
            assert_eq!(f5.frobenius_map(&x), x);
        }
    }

    #[test]
    fn generators() {
        let f5 = LatticeField::new(&g(2, 1)).unwrap();
        assert_eq!(f5.multiplicative_generator().unwrap().rep(), &g(2, 0));
        let f9 = LatticeField::new(&g(3, 0)).unwrap();
        let gen = f9.multiplicative_generator().unwrap();
        // brute-force order search
        let order = (1..=8u64).find(|&k| f9.pow(&gen, k) == f9.one()).unwrap();
        assert_eq!(order, 8);
        let smaller_generator = f9
            .enumerate()
            .unwrap()
            .into_iter()
            .take_while(|x| *x != gen)
            .any(|x| !x.rep().is_zero() && (1..8u64).all(|k| f9.pow(&x, k) != f9.one()));
        assert!(!smaller_generator);
        assert_eq!(gen.rep(), &g(1, 1));
    }

    #[test]
    fn unit_lookup() {
        let f13 = LatticeField::new(&e(-1, 3)).unwrap();
        assert_eq!(f13.unit_residue_lookup(&f13.reduce_int(3), 6).unwrap(), e(-1, -1));
        assert_eq!(f13.unit_residue_lookup(&f13.one(), 6).unwrap(), e(1, 0));
        assert_eq!(
            f13.unit_residue_lookup(&f13.reduce_int(2), 6),
            Err(Error::NotRootOfUnityResidue)
        );
        assert!(f13.unit_residue_lookup(&f13.one(), 4).is_err());

        let f5 = LatticeField::new(&g(-1, 2)).unwrap();
        assert_eq!(f5.unit_residue_lookup(&f5.reduce_int(2), 4).unwrap(), g(0, -1));
        let f9 = LatticeField::new(&g(3, 0)).unwrap();
        assert!(f9.unit_residue_lookup(&f9.one(), 4).is_err());
    }

    #[test]
    fn axioms() {
        for modulus in [g(2, 1), g(3, 0), e(-1, 3), e(5, 0)] {
            let field = LatticeField::new(&modulus).unwrap();
            let report = verify_field_axioms(&field, DEFAULT_AXIOM_BOUND).unwrap();
            assert!(report.passed, "{modulus}: {:?}", report.counterexample);
        }
        let raw = RawQuotient::new(&g(5, 0)).unwrap();
        assert_eq!(raw.order(), 25);
        let report = verify_field_axioms(&raw, DEFAULT_AXIOM_BOUND).unwrap();
        assert!(!report.passed);
        // (2+i)(2-i) = 5 = 0: a zero divisor
        assert_eq!(raw.mul(&g(2, 1), &g(2, 4)), g(0, 0));
        let too_big = LatticeField::new(&g(11, 0)).unwrap();
        assert!(verify_field_axioms(&too_big, DEFAULT_AXIOM_BOUND).unwrap_err().is_resource());
    }

    #[test]
    fn raw_quotient_matches_field_reduction() {
        for modulus in [g(2, 1), g(-1, 2), g(3, 2), g(0, 7), e(-1, 3), e(5, 3), e(0, 5), e(2, 0)] {
            let field = LatticeField::new(&modulus).unwrap();
            let raw = RawQuotient::new(&modulus).unwrap();
            assert_eq!(raw.order(), field.q());
            let raw_elems = raw.elements().unwrap();
            let field_elems: Vec<QuadraticInteger> =
                field.enumerate().unwrap().into_iter().map(|x| x.rep().clone()).collect();
            assert_eq!(raw_elems, field_elems, "{modulus}");
            for a in -9..9 {
                for b in -9..9 {
                    let z = QuadraticInteger::new(modulus.ring(), a, b);
                    assert_eq!(&raw.reduce(&z), field.reduce(&z).unwrap().rep());
                }
            }
        }
    }

    #[test]
    fn fundamental_domain_has_one_point_per_class() {
        for modulus in [g(2, 1), g(3, 0), e(-1, 3)] {
            let field = LatticeField::new(&modulus).unwrap();
            let dom = field.fundamental_domain().unwrap();
            let classes: Vec<_> = dom.iter().map(|(_, c)| c.clone()).collect();
            assert_eq!(classes, field.enumerate().unwrap());
        }
    }
}
