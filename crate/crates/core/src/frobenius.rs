//! Frobenius at unramified primes: in `Q(sqrt d)` through the Legendre
//! symbol, in `Q(zeta_n)` through `p mod n`, and on `Z[i]`, `Z[w]` as the
//! automorphism that induces `x -> x^p` on each residue field.

use std::fmt;

use num_integer::Integer;

use crate::arith;
use crate::characters::legendre;
use crate::error::{Error, Result};
use crate::lattice_field::LatticeField;
use crate::rings::{QuadraticInteger, RingTag};

pub type Matrix2 = [[i64; 2]; 2];

pub const IDENTITY: Matrix2 = [[1, 0], [0, 1]];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GaloisContext {
    QuadraticField(i64),
    Cyclotomic(u64),
}

impl fmt::Display for GaloisContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GaloisContext::QuadraticField(d) => write!(f, "Q(sqrt({d}))"),
            GaloisContext::Cyclotomic(n) => write!(f, "Q(zeta_{n})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusData {
    pub context: GaloisContext,
    pub p: u64,
    /// `+-1` for quadratic contexts, `p mod n` for cyclotomic ones.
    pub symbol: i64,
    /// Columns are the images of `1` and the second basis vector.
    pub matrix: Option<Matrix2>,
    /// `det(I - T M)`, lowest degree first.
    pub char_poly_t: Option<[i64; 3]>,
    /// `u^2 - tr(M) u + det(M)`, lowest degree first.
    pub char_poly_u: Option<[i64; 3]>,
}

fn trace_det(m: &Matrix2) -> (i64, i64) {
    (m[0][0] + m[1][1], m[0][0] * m[1][1] - m[0][1] * m[1][0])
}

pub fn char_poly_t(m: &Matrix2) -> [i64; 3] {
    let (t, d) = trace_det(m);
    [1, -t, d]
}

pub fn char_poly_u(m: &Matrix2) -> [i64; 3] {
    let (t, d) = trace_det(m);
    [d, -t, 1]
}

pub fn mat_mul(x: &Matrix2, y: &Matrix2) -> Matrix2 {
    let mut out = [[0; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    out
}

fn is_squarefree(d: i64) -> bool {
    let n = d.unsigned_abs();
    let mut k = 2u64;
    while k * k <= n {
        if n % (k * k) == 0 {
            return false;
        }
        k += 1;
    }
    true
}

fn inertia_error(p: u64, what: impl fmt::Display) -> Error {
    Error::domain(format!(
        "{p} ramifies in {what}: inertia nontrivial, Frobenius not defined by this construction"
    ))
}

fn data_from_matrix(context: GaloisContext, p: u64, symbol: i64, m: Matrix2) -> FrobeniusData {
    FrobeniusData {
        context,
        p,
        symbol,
        matrix: Some(m),
        char_poly_t: Some(char_poly_t(&m)),
        char_poly_u: Some(char_poly_u(&m)),
    }
}

/// Frobenius of `p` in `Q(sqrt d)`, as a matrix in the basis `{1, sqrt d}`.
pub fn frobenius_quadratic(d: i64, p: u64) -> Result<FrobeniusData> {
    if d == 0 || d == 1 || !is_squarefree(d) {
        return Err(Error::domain(format!("d = {d} is not a squarefree integer other than 0, 1")));
    }
    arith::require_prime(p)?;
    if p == 2 || arith::rem_i64(d, p) == 0 {
        return Err(inertia_error(p, GaloisContext::QuadraticField(d)));
    }
    let symbol = legendre(d, p)?;
    let m = if symbol == 1 { IDENTITY } else { [[1, 0], [0, -1]] };
    Ok(data_from_matrix(GaloisContext::QuadraticField(d), p, symbol, m))
}

fn require_unramified(ring: RingTag, p: u64) -> Result<()> {
    arith::require_prime(p)?;
    if p == ring.ramified_prime() {
        return Err(inertia_error(p, ring));
    }
    Ok(())
}

/// Whether Frobenius at `p` is the identity on `ring` (otherwise it is
/// complex conjugation).
fn lift_is_identity(ring: RingTag, p: u64) -> Result<bool> {
    require_unramified(ring, p)?;
    Ok(match ring {
        RingTag::Gaussian => legendre(-1, p)? == 1,
        RingTag::Eisenstein => p % 3 == 1,
    })
}

/// Gaussian: `a + bi -> a + (-1/p) b i`. Eisenstein: `w -> w^(p mod 3)`.
pub fn frobenius_lift_apply(ring: RingTag, p: u64, z: &QuadraticInteger) -> Result<QuadraticInteger> {
    if z.ring() != ring {
        return Err(Error::RingMismatch(ring, z.ring()));
    }
    Ok(if lift_is_identity(ring, p)? { z.clone() } else { z.conj() })
}

/// Checks `reduce(lift(z)) = reduce(z)^p` on a full set of residue
/// representatives of `field`.
pub fn verify_lift(ring: RingTag, p: u64, field: &LatticeField) -> Result<bool> {
    if field.ring() != ring || field.p() != p {
        return Err(Error::domain(format!(
            "modulus {} does not lie over {p} in {ring}",
            field.modulus().render(false)
        )));
    }
    for (z, residue) in field.fundamental_domain()? {
        let lifted = frobenius_lift_apply(ring, p, &z)?;
        if field.reduce(&lifted)? != field.frobenius_map(&residue) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `p mod n`, the Frobenius of `p` in `Gal(Q(zeta_n)/Q) = (Z/nZ)^*`.
pub fn artin_map(n: u64, p: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::domain(format!("modulus n = {n} must be at least 2")));
    }
    arith::require_prime(p)?;
    if n.gcd(&p) != 1 {
        return Err(inertia_error(p, GaloisContext::Cyclotomic(n)));
    }
    Ok(p % n)
}

pub fn frobenius_cyclotomic(n: u64, p: u64) -> Result<FrobeniusData> {
    let r = artin_map(n, p)?;
    Ok(FrobeniusData {
        context: GaloisContext::Cyclotomic(n),
        p,
        symbol: r as i64,
        matrix: None,
        char_poly_t: None,
        char_poly_u: None,
    })
}

/// Matrix of the lift on `ring` in the basis `{1, xi}`.
pub fn frobenius_matrix_and_charpoly(ring: RingTag, p: u64) -> Result<FrobeniusData> {
    let xi = QuadraticInteger::xi(ring);
    let image = frobenius_lift_apply(ring, p, &xi)?;
    let entry = |x: &num_bigint::BigInt| {
        i64::try_from(x).map_err(|_| Error::Internal("matrix entry out of range".into()))
    };
    let m = [[1, entry(image.a())?], [0, entry(image.b())?]];
    let symbol = if m == IDENTITY { 1 } else { -1 };
    Ok(data_from_matrix(
        GaloisContext::QuadraticField(ring.quadratic_parameter()),
        p,
        symbol,
        m,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> QuadraticInteger {
        QuadraticInteger::new(RingTag::Gaussian, a, b)
    }

    fn e(a: i64, b: i64) -> QuadraticInteger {
        QuadraticInteger::new(RingTag::Eisenstein, a, b)
    }

    #[test]
    fn quadratic_examples() {
        let f = frobenius_quadratic(-1, 13).unwrap();
        assert_eq!((f.symbol, f.matrix, f.char_poly_t), (1, Some(IDENTITY), Some([1, -2, 1])));
        let f = frobenius_quadratic(-1, 7).unwrap();
        assert_eq!(f.symbol, -1);
        assert_eq!(f.matrix, Some([[1, 0], [0, -1]]));
        assert_eq!(f.char_poly_t, Some([1, 0, -1]));
        assert_eq!(frobenius_quadratic(-3, 7).unwrap().symbol, 1);
        let err = frobenius_quadratic(-3, 3).unwrap_err();
        assert!(err.to_string().contains("inertia nontrivial"));
        assert!(frobenius_quadratic(8, 5).is_err());
        assert!(frobenius_quadratic(1, 5).is_err());
    }

    #[test]
    fn lift_examples() {
        assert_eq!(frobenius_lift_apply(RingTag::Gaussian, 13, &g(2, 3)).unwrap(), g(2, 3));
        assert_eq!(frobenius_lift_apply(RingTag::Gaussian, 7, &g(2, 3)).unwrap(), g(2, -3));
        assert_eq!(frobenius_lift_apply(RingTag::Eisenstein, 5, &e(1, 1)).unwrap(), e(0, -1));
        assert!(frobenius_lift_apply(RingTag::Gaussian, 2, &g(1, 1)).is_err());
        assert!(frobenius_lift_apply(RingTag::Eisenstein, 3, &e(1, 1)).is_err());
    }

    #[test]
    fn verify_lift_examples() {
        let f9 = LatticeField::new(&g(3, 0)).unwrap();
        assert!(verify_lift(RingTag::Gaussian, 3, &f9).unwrap());
        let f13 = LatticeField::new(&g(3, 2)).unwrap();
        assert!(verify_lift(RingTag::Gaussian, 13, &f13).unwrap());
        let f25 = LatticeField::new(&e(5, 0)).unwrap();
        assert!(verify_lift(RingTag::Eisenstein, 5, &f25).unwrap());
        assert!(verify_lift(RingTag::Gaussian, 5, &f13).is_err());
    }

    #[test]
    fn artin_examples() {
        assert_eq!(artin_map(4, 7).unwrap(), 3);
        assert_eq!(artin_map(4, 13).unwrap(), 1);
        assert_eq!(artin_map(12, 7).unwrap(), 7);
        assert!(artin_map(12, 3).is_err());
        assert_eq!(frobenius_cyclotomic(5, 11).unwrap().symbol, 1);
    }

    #[test]
    fn matrices() {
        let f = frobenius_matrix_and_charpoly(RingTag::Gaussian, 13).unwrap();
        assert_eq!((f.matrix, f.char_poly_t), (Some(IDENTITY), Some([1, -2, 1])));
        let f = frobenius_matrix_and_charpoly(RingTag::Gaussian, 7).unwrap();
        assert_eq!((f.matrix, f.char_poly_t), (Some([[1, 0], [0, -1]]), Some([1, 0, -1])));
        let f = frobenius_matrix_and_charpoly(RingTag::Eisenstein, 5).unwrap();
        assert_eq!(f.matrix, Some([[1, -1], [0, -1]]));
        assert_eq!(f.char_poly_t, Some([1, 0, -1]));
        assert_eq!(f.char_poly_u, Some([-1, 0, 1]));
        let m = f.matrix.unwrap();
        assert_eq!(mat_mul(&m, &m), IDENTITY);
        assert_eq!(f.context, GaloisContext::QuadraticField(-3));
    }
}
