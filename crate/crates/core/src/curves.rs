//! Point counts for `y^2 = x^3 + D`, `y^2 = x(x^2 + 1)` and the exploratory
//! family `y^2 = x^d + D`.
//!
//! Three independent routes: exhaustive enumeration over any finite field,
//! the quadratic character sum over `F_p`, and the closed form through the
//! primary prime above `p` and a sextic or quartic residue character.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith;
use crate::characters::{self, legendre};
use crate::error::{Error, Result};
use crate::field::FiniteRing;
use crate::rings::{QuadraticInteger, RingTag};
use crate::splitting;

/// Point lists are returned for fields with at most this many elements.
pub const POINT_LIST_LIMIT: u64 = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurveFamily {
    /// `y^2 = x^3 + D`
    CubicTwist { d: i64 },
    /// `y^2 = x(x^2 + 1)`
    QuarticTwist,
    /// `y^2 = x^degree + D`, counted by brute force only.
    SuperellipticProbe { degree: u32, d: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurveSpec {
    pub family: CurveFamily,
    pub genus: u32,
}

impl CurveSpec {
    pub fn cubic(d: i64) -> Self {
        CurveSpec {
            family: CurveFamily::CubicTwist { d },
            genus: 1,
        }
    }

    pub fn quartic() -> Self {
        CurveSpec {
            family: CurveFamily::QuarticTwist,
            genus: 1,
        }
    }

    pub fn superelliptic(degree: u32, d: i64) -> Result<Self> {
        if degree < 1 {
            return Err(Error::domain("degree must be at least 1"));
        }
        Ok(CurveSpec {
            family: CurveFamily::SuperellipticProbe { degree, d },
            genus: (degree - 1) / 2,
        })
    }

    /// Right-hand side `f(x)` as integer coefficients, lowest degree first.
    pub fn rhs(&self) -> Vec<i64> {
        match self.family {
            CurveFamily::CubicTwist { d } => vec![d, 0, 0, 1],
            CurveFamily::QuarticTwist => vec![0, 1, 0, 1],
            CurveFamily::SuperellipticProbe { degree, d } => {
                let mut c = vec![0; degree as usize + 1];
                c[0] += d;
                c[degree as usize] += 1;
                c
            }
        }
    }

    /// Genus-1 families have a single point at infinity.
    pub fn has_projective_count(&self) -> bool {
        !matches!(self.family, CurveFamily::SuperellipticProbe { .. })
    }

    pub fn name(&self) -> &'static str {
        match self.family {
            CurveFamily::CubicTwist { .. } => "cubic",
            CurveFamily::QuarticTwist => "quartic",
            CurveFamily::SuperellipticProbe { .. } => "superelliptic",
        }
    }
}

impl fmt::Display for CurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let constant = |d: i64| match d.signum() {
            0 => String::new(),
            1 => format!("+{d}"),
            _ => d.to_string(),
        };
        match self.family {
            CurveFamily::CubicTwist { d } => write!(f, "y^2 = x^3{}", constant(d)),
            CurveFamily::QuarticTwist => write!(f, "y^2 = x^3+x"),
            CurveFamily::SuperellipticProbe { degree, d } => write!(f, "y^2 = x^{degree}{}", constant(d)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountMethod {
    BruteForce,
    CharacterSum,
    ClosedForm,
}

impl CountMethod {
    pub fn name(self) -> &'static str {
        match self {
            CountMethod::BruteForce => "brute",
            CountMethod::CharacterSum => "char",
            CountMethod::ClosedForm => "closed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub q: u64,
    pub n_affine: u64,
    /// Affine count plus the point at infinity; absent for the
    /// superelliptic probe family.
    pub n_projective: Option<u64>,
    pub method: CountMethod,
}

impl CountResult {
    fn new(curve: &CurveSpec, q: u64, n_affine: u64, method: CountMethod) -> Self {
        CountResult {
            q,
            n_affine,
            n_projective: curve.has_projective_count().then_some(n_affine + 1),
            method,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceCount<E> {
    pub result: CountResult,
    /// `(x, y)` pairs in enumeration order, when `q <= POINT_LIST_LIMIT`.
    pub points: Option<Vec<(E, E)>>,
}

/// Exhaustive count of `(x, y)` in `K^2` on the curve.
pub fn count_points_bruteforce<K: FiniteRing>(curve: &CurveSpec, field: &K) -> Result<BruteForceCount<K::Elem>> {
    if field.characteristic() == 2 {
        return Err(Error::Unsupported("characteristic 2".into()));
    }
    let elems = field.elements()?;
    let rhs = curve.rhs();
    let mut roots_of: HashMap<K::Elem, Vec<usize>> = HashMap::new();
    for (i, y) in elems.iter().enumerate() {
        roots_of.entry(field.mul(y, y)).or_default().push(i);
    }
    let want_points = field.order() <= POINT_LIST_LIMIT;
    let mut points = Vec::new();
    let mut n = 0u64;
    for x in &elems {
        if let Some(ys) = roots_of.get(&field.eval_poly(&rhs, x)) {
            n += ys.len() as u64;
            if want_points {
                points.extend(ys.iter().map(|&j| (x.clone(), elems[j].clone())));
            }
        }
    }
    Ok(BruteForceCount {
        result: CountResult::new(curve, field.order(), n, CountMethod::BruteForce),
        points: want_points.then_some(points),
    })
}

fn require_good_prime(curve: &CurveSpec, p: u64) -> Result<()> {
    arith::require_odd_prime(p)?;
    if let CurveFamily::CubicTwist { d } = curve.family {
        if p == 3 || arith::rem_i64(d, p) == 0 {
            return Err(Error::domain(format!("bad reduction: p = {p} divides 6D for D = {d}")));
        }
    }
    Ok(())
}

/// `n_affine = p + sum over x of legendre(f(x), p)`.
pub fn count_points_character_sum(curve: &CurveSpec, p: u64) -> Result<CountResult> {
    require_good_prime(curve, p)?;
    let rhs = curve.rhs();
    let mut total = p as i64;
    for x in 0..p {
        let fx = rhs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| (arith::mul_mod(acc, x, p) + arith::rem_i64(c, p)) % p);
        total += legendre(fx as i64, p)?;
    }
    Ok(CountResult::new(curve, p, total as u64, CountMethod::CharacterSum))
}

/// The primary prime above `p` in the ring attached to the family, and the
/// unit `c` such that the Weil zero is `c * pi` up to sign.
///
/// Cubic: `a_p = -trace(conj(chi_6(4D)) * pi)`. Quartic: `a_p = trace(chi_4(-1) * pi)`.
fn split_twist_data(curve: &CurveSpec, p: u64) -> Result<Option<QuadraticInteger>> {
    require_good_prime(curve, p)?;
    match curve.family {
        CurveFamily::CubicTwist { d } => {
            if p % 3 == 2 {
                return Ok(None);
            }
            let pi = splitting::prime_above(RingTag::Eisenstein, p)?;
            let chi = characters::make_character(p, 6)?;
            let c = chi.eval(4 * d).embed(RingTag::Eisenstein)?;
            Ok(Some(-(&c.conj() * &pi)))
        }
        CurveFamily::QuarticTwist => {
            if p % 4 == 3 {
                return Ok(None);
            }
            let pi = splitting::prime_above(RingTag::Gaussian, p)?;
            let chi = characters::make_character(p, 4)?;
            let c = chi.eval(-1).embed(RingTag::Gaussian)?;
            Ok(Some(&c * &pi))
        }
        CurveFamily::SuperellipticProbe { .. } => {
            Err(Error::Unsupported("no closed form for the superelliptic probe family".into()))
        }
    }
}

/// The defect `a_p`, so that `n_affine = p - a_p`, via the closed form.
/// Zero at primes inert in the attached ring.
pub fn defect(curve: &CurveSpec, p: u64) -> Result<i64> {
    match split_twist_data(curve, p)? {
        None => Ok(0),
        Some(w) => w
            .trace()
            .to_i64()
            .ok_or_else(|| Error::Internal("defect does not fit in i64".into())),
    }
}

pub fn count_points_closed_form(curve: &CurveSpec, p: u64) -> Result<CountResult> {
    let a = defect(curve, p)?;
    let n = p as i64 - a;
    if n < 0 {
        return Err(Error::Internal(format!("negative affine count {n}")));
    }
    Ok(CountResult::new(curve, p, n as u64, CountMethod::ClosedForm))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeilZero {
    /// `w` with `w + conj(w) = a_p` and `w * conj(w) = p`; `w` is the one
    /// associated to the primary prime above `p`.
    Split {
        w: QuadraticInteger,
        w_conj: QuadraticInteger,
    },
    /// Purely imaginary pair `+-sqrt(-p)`, `a_p = 0`; not a lattice point.
    Supersingular,
}

/// Every lattice point of norm `n`.
pub fn lattice_points_of_norm(ring: RingTag, n: u64) -> Vec<QuadraticInteger> {
    let reach = arith::isqrt_u64(4 * n / 3 + 1) as i64 + 1;
    let target = BigInt::from(n);
    let mut out = Vec::new();
    for a in -reach..=reach {
        for b in -reach..=reach {
            let z = QuadraticInteger::new(ring, a, b);
            if z.norm() == target {
                out.push(z);
            }
        }
    }
    out
}

pub fn weil_zero(curve: &CurveSpec, p: u64) -> Result<WeilZero> {
    let a_p = defect(curve, p)?;
    let ring = match curve.family {
        CurveFamily::CubicTwist { .. } => RingTag::Eisenstein,
        CurveFamily::QuarticTwist => RingTag::Gaussian,
        CurveFamily::SuperellipticProbe { .. } => unreachable!("rejected by defect"),
    };
    if split_twist_data(curve, p)?.is_none() {
        return Ok(WeilZero::Supersingular);
    }
    let pi = splitting::prime_above(ring, p)?;
    let target = BigInt::from(a_p);
    let mut hits = lattice_points_of_norm(ring, p)
        .into_iter()
        .filter(|z| z.trace() == target && z.is_associate_of(&pi));
    match (hits.next(), hits.next()) {
        (Some(w), None) => {
            let w_conj = w.conj();
            Ok(WeilZero::Split { w, w_conj })
        }
        _ => Err(Error::Internal(format!(
            "no unique lattice Weil zero of trace {a_p} over {p}"
        ))),
    }
}
