//! How rational primes factor in `Z[i]` and `Z[w]`.

use std::fmt;

use num_bigint::BigInt;

use crate::arith;
use crate::error::{Error, Result};
use crate::rings::{is_inert, QuadraticInteger, RingTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrimeClass {
    Split,
    Inert,
    Ramified,
}

impl PrimeClass {
    pub fn name(self) -> &'static str {
        match self {
            PrimeClass::Split => "split",
            PrimeClass::Inert => "inert",
            PrimeClass::Ramified => "ramified",
        }
    }
}

impl fmt::Display for PrimeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingData {
    pub ring: RingTag,
    pub p: u64,
    pub class: PrimeClass,
    /// Primes above `p` with multiplicity; for split primes the primary
    /// prime comes first, then its conjugate.
    pub primes_above: Vec<(QuadraticInteger, u32)>,
    /// Ramification index.
    pub e: u32,
    /// Residue degree.
    pub f: u32,
    /// Number of distinct primes above `p`.
    pub g: u32,
}

impl SplittingData {
    /// Product of the primes above `p`, with multiplicity.
    pub fn product(&self) -> QuadraticInteger {
        self.primes_above
            .iter()
            .fold(QuadraticInteger::one(self.ring), |acc, (pi, k)| {
                &acc * &pi.pow(u64::from(*k))
            })
    }

    /// The unit `u` with `u * product() = p`.
    pub fn unit(&self) -> Result<QuadraticInteger> {
        let p = QuadraticInteger::from_int(self.ring, self.p);
        match p.exact_div(&self.product())? {
            Some(u) if u.is_unit() => Ok(u),
            _ => Err(Error::Internal(format!(
                "primes above {} do not multiply to an associate of it",
                self.p
            ))),
        }
    }
}

pub fn classify_prime(ring: RingTag, p: u64) -> Result<PrimeClass> {
    arith::require_prime(p)?;
    Ok(if p == ring.ramified_prime() {
        PrimeClass::Ramified
    } else if is_inert(ring, p) {
        PrimeClass::Inert
    } else {
        PrimeClass::Split
    })
}

/// The prime of `ring` lying over `p`.
///
/// Split: the primary prime of norm `p` whose `b` coordinate is positive
/// (the other primary prime above `p` is its conjugate). Inert: `p` itself.
/// Ramified: `1+i` or `1-w`.
pub fn prime_above(ring: RingTag, p: u64) -> Result<QuadraticInteger> {
    match classify_prime(ring, p)? {
        PrimeClass::Inert => Ok(QuadraticInteger::from_int(ring, p)),
        PrimeClass::Ramified => Ok(QuadraticInteger::new(
            ring,
            1,
            match ring {
                RingTag::Gaussian => 1,
                RingTag::Eisenstein => -1,
            },
        )),
        PrimeClass::Split => {
            let rep = norm_representation(ring, p)
                .ok_or_else(|| Error::Internal(format!("no norm representation of {p}")))?;
            let (_, primary) = rep.canonical_associate()?;
            if primary.b() > &BigInt::from(0) {
                Ok(primary)
            } else {
                Ok(primary.conj())
            }
        }
    }
}

/// First lattice point of norm `p`, scanning the first coordinate upward.
///
/// Gaussian: `p = a^2 + b^2`. Eisenstein: `p = a^2 - ab + b^2`, solved for
/// `a` given `b`, which needs `4p - 3b^2` to be a square.
pub fn norm_representation(ring: RingTag, p: u64) -> Option<QuadraticInteger> {
    match ring {
        RingTag::Gaussian => (1..)
            .take_while(|a: &u64| a * a <= p)
            .find_map(|a| arith::perfect_square(p - a * a).map(|b| QuadraticInteger::new(ring, a, b))),
        RingTag::Eisenstein => (1..)
            .take_while(|b: &u64| 3 * b * b <= 4 * p)
            .find_map(|b| {
                let s = arith::perfect_square(4 * p - 3 * b * b)?;
                ((b + s) % 2 == 0).then(|| QuadraticInteger::new(ring, (b + s) / 2, b))
            }),
    }
}

pub fn splitting_data(ring: RingTag, p: u64) -> Result<SplittingData> {
    let class = classify_prime(ring, p)?;
    let pi = prime_above(ring, p)?;
    let (primes_above, e, f, g) = match class {
        PrimeClass::Split => {
            let conj = pi.conj();
            (vec![(pi, 1), (conj, 1)], 1, 1, 2)
        }
        PrimeClass::Inert => (vec![(pi, 1)], 1, 2, 1),
        PrimeClass::Ramified => (vec![(pi, 2)], 2, 1, 1),
    };
    Ok(SplittingData {
        ring,
        p,
        class,
        primes_above,
        e,
        f,
        g,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification() {
        assert_eq!(classify_prime(RingTag::Gaussian, 5).unwrap(), PrimeClass::Split);
        assert_eq!(classify_prime(RingTag::Gaussian, 3).unwrap(), PrimeClass::Inert);
        assert_eq!(classify_prime(RingTag::Gaussian, 2).unwrap(), PrimeClass::Ramified);
        assert_eq!(classify_prime(RingTag::Eisenstein, 13).unwrap(), PrimeClass::Split);
        assert_eq!(classify_prime(RingTag::Eisenstein, 3).unwrap(), PrimeClass::Ramified);
        assert_eq!(classify_prime(RingTag::Eisenstein, 5).unwrap(), PrimeClass::Inert);
        assert_eq!(classify_prime(RingTag::Gaussian, 4), Err(Error::NotPrime("4".into())));
        assert!(classify_prime(RingTag::Gaussian, 1).is_err());
    }

    #[test]
    fn primes_above() {
        let e = |a, b| QuadraticInteger::new(RingTag::Eisenstein, a, b);
        let g = |a, b| QuadraticInteger::new(RingTag::Gaussian, a, b);
        assert_eq!(prime_above(RingTag::Eisenstein, 13).unwrap(), e(-1, 3));
        assert_eq!(prime_above(RingTag::Eisenstein, 19).unwrap(), e(5, 3));
        assert_eq!(prime_above(RingTag::Gaussian, 5).unwrap(), g(-1, 2));
        assert_eq!(prime_above(RingTag::Gaussian, 13).unwrap(), g(3, 2));
        assert_eq!(prime_above(RingTag::Gaussian, 7).unwrap(), g(7, 0));
        assert_eq!(prime_above(RingTag::Gaussian, 2).unwrap(), g(1, 1));
        assert_eq!(prime_above(RingTag::Eisenstein, 3).unwrap(), e(1, -1));
        assert!(prime_above(RingTag::Eisenstein, 21).is_err());
    }

    #[test]
    fn splitting_examples() {
        let g = |a, b| QuadraticInteger::new(RingTag::Gaussian, a, b);
        let e = |a, b| QuadraticInteger::new(RingTag::Eisenstein, a, b);

        let two = splitting_data(RingTag::Gaussian, 2).unwrap();
        assert_eq!(two.class, PrimeClass::Ramified);
        assert_eq!(two.primes_above, vec![(g(1, 1), 2)]);
        assert_eq!((two.e, two.f, two.g), (2, 1, 1));
        // 2 = -i (1+i)^2
        assert_eq!(two.unit().unwrap(), g(0, -1));

        let seven = splitting_data(RingTag::Gaussian, 7).unwrap();
        assert_eq!(seven.class, PrimeClass::Inert);
        assert_eq!(seven.primes_above, vec![(g(7, 0), 1)]);
        assert_eq!(seven.f, 2);

        let nineteen = splitting_data(RingTag::Eisenstein, 19).unwrap();
        assert_eq!(nineteen.class, PrimeClass::Split);
        assert_eq!(nineteen.primes_above, vec![(e(5, 3), 1), (e(2, -3), 1)]);
        assert_eq!(nineteen.product(), e(19, 0));
    }

    #[test]
    fn sweep_to_1000() {
        for p in arith::primes_up_to(1000) {
            for ring in RingTag::ALL {
                let sd = splitting_data(ring, p).unwrap();
                assert_eq!(sd.e * sd.f * sd.g, 2);
                let u = sd.unit().unwrap();
                assert_eq!(&u * &sd.product(), QuadraticInteger::from_int(ring, p));
                let pi = &sd.primes_above[0].0;
                assert_eq!(pi.norm(), num_traits::pow(BigInt::from(p), sd.f as usize));
                assert!(pi.is_prime_element());
            }
        }
    }
}
