//! Exact arithmetic in `Z[i]` and `Z[w]`, finite fields built as lattice
//! quotients and as polynomial quotients, residue characters, point counts
//! and zeta data for `y^2 = x^3 + D` and `y^2 = x^3 + x`, and Frobenius.

pub mod arith;
pub mod characters;
pub mod curves;
pub mod error;
pub mod field;
pub mod frobenius;
pub mod lattice_field;
pub mod poly_field;
pub mod rings;
pub mod splitting;
pub mod verify;
pub mod zeta;

pub use characters::{jacobi_sum, legendre, make_character, CharValue, MultiplicativeCharacter};
pub use curves::{CountMethod, CountResult, CurveFamily, CurveSpec, WeilZero};
pub use error::{Error, Result};
pub use field::{FiniteField, FiniteRing, PrimeField};
pub use lattice_field::{make_field, LatticeField, LatticeFieldElement, RawQuotient};
pub use poly_field::{make_poly_field, PolyField, PolyFieldElement, PolyOverFp};
pub use rings::{QuadraticInteger, RingTag, UnitGroup};
pub use splitting::{PrimeClass, SplittingData};
pub use zeta::ZetaData;
