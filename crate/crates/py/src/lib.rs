//! Python bindings for the `latfield` core crate.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use latfield::curves::{self, CurveSpec, WeilZero};
use latfield::field::{verify_field_axioms, DEFAULT_AXIOM_BOUND};
use latfield::{characters, frobenius, splitting, zeta, FiniteField, FiniteRing, RingTag};

create_exception!(latfield, LatfieldError, PyValueError, "Input outside the domain of an operation.");
create_exception!(latfield, BoundError, PyRuntimeError, "A resource bound would be exceeded.");

fn to_py(e: latfield::Error) -> PyErr {
    if e.is_resource() {
        BoundError::new_err(e.to_string())
    } else {
        LatfieldError::new_err(e.to_string())
    }
}

trait IntoPy<T> {
    fn py_err(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for latfield::Result<T> {
    fn py_err(self) -> PyResult<T> {
        self.map_err(to_py)
    }
}

fn ring_tag(name: &str) -> PyResult<RingTag> {
    name.parse().py_err()
}

fn curve(family: &str, d: i64, degree: u32) -> PyResult<CurveSpec> {
    match family {
        "cubic" => Ok(CurveSpec::cubic(d)),
        "quartic" => Ok(CurveSpec::quartic()),
        "superelliptic" => CurveSpec::superelliptic(degree, d).py_err(),
        other => Err(LatfieldError::new_err(format!("unknown curve family {other:?}"))),
    }
}

/// Element `a + b*xi` of Z[i] (`xi = i`) or Z[w] (`xi = w`).
#[pyclass(name = "QuadraticInteger", frozen, skip_from_py_object, module = "latfield")]
#[derive(Clone)]
pub struct PyQuadraticInteger {
    inner: latfield::QuadraticInteger,
}

impl From<latfield::QuadraticInteger> for PyQuadraticInteger {
    fn from(inner: latfield::QuadraticInteger) -> Self {
        PyQuadraticInteger { inner }
    }
}

#[pymethods]
impl PyQuadraticInteger {
    #[new]
    #[pyo3(signature = (ring, a, b = BigInt::from(0)))]
    fn new(ring: &str, a: BigInt, b: BigInt) -> PyResult<Self> {
        Ok(latfield::QuadraticInteger::new(ring_tag(ring)?, a, b).into())
    }

    #[staticmethod]
    fn parse(ring: &str, text: &str) -> PyResult<Self> {
        Ok(latfield::QuadraticInteger::parse(ring_tag(ring)?, text).py_err()?.into())
    }

    #[getter]
    fn ring(&self) -> &'static str {
        self.inner.ring().name()
    }

    #[getter]
    fn a(&self) -> BigInt {
        self.inner.a().clone()
    }

    #[getter]
    fn b(&self) -> BigInt {
        self.inner.b().clone()
    }

    fn norm(&self) -> BigInt {
        self.inner.norm()
    }

    fn trace(&self) -> BigInt {
        self.inner.trace()
    }

    fn conj(&self) -> Self {
        self.inner.conj().into()
    }

    fn is_primary(&self) -> bool {
        self.inner.is_primary()
    }

    fn is_prime(&self) -> bool {
        self.inner.is_prime_element()
    }

    /// `(unit, primary)` with `unit * self == primary`.
    fn canonical_associate(&self) -> PyResult<(Self, Self)> {
        let (u, z) = self.inner.canonical_associate().py_err()?;
        Ok((u.into(), z.into()))
    }

    fn gcd(&self, other: &Self) -> PyResult<Self> {
        Ok(self.inner.gcd(&other.inner).py_err()?.into())
    }

    fn __divmod__(&self, other: &Self) -> PyResult<(Self, Self)> {
        let (q, r) = self.inner.divrem(&other.inner).py_err()?;
        Ok((q.into(), r.into()))
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        Ok(self.inner.checked_add(&other.inner).py_err()?.into())
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        Ok(self.inner.checked_sub(&other.inner).py_err()?.into())
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        Ok(self.inner.checked_mul(&other.inner).py_err()?.into())
    }

    fn __neg__(&self) -> Self {
        (-&self.inner).into()
    }

    fn __pow__(&self, exp: u64, _modulo: Option<Py<PyAny>>) -> Self {
        self.inner.pow(exp).into()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QuadraticInteger({:?}, {}, {})", self.ring(), self.inner.a(), self.inner.b())
    }
}

/// The residue field Z[xi]/(pi).
#[pyclass(name = "LatticeField", frozen, module = "latfield")]
pub struct PyLatticeField {
    inner: latfield::LatticeField,
}

impl PyLatticeField {
    fn elem(&self, z: &PyQuadraticInteger) -> PyResult<latfield::LatticeFieldElement> {
        self.inner.reduce(&z.inner).py_err()
    }

    fn out(x: latfield::LatticeFieldElement) -> PyQuadraticInteger {
        x.rep().clone().into()
    }
}

#[pymethods]
impl PyLatticeField {
    #[new]
    fn new(modulus: &PyQuadraticInteger) -> PyResult<Self> {
        Ok(PyLatticeField {
            inner: latfield::LatticeField::new(&modulus.inner).py_err()?,
        })
    }

    #[getter]
    fn p(&self) -> u64 {
        self.inner.p()
    }

    #[getter]
    fn q(&self) -> u64 {
        self.inner.q()
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.inner.f()
    }

    fn elements(&self) -> PyResult<Vec<PyQuadraticInteger>> {
        Ok(self.inner.elements().py_err()?.into_iter().map(Self::out).collect())
    }

    fn reduce(&self, z: &PyQuadraticInteger) -> PyResult<PyQuadraticInteger> {
        Ok(Self::out(self.elem(z)?))
    }

    fn add(&self, x: &PyQuadraticInteger, y: &PyQuadraticInteger) -> PyResult<PyQuadraticInteger> {
        Ok(Self::out(self.inner.add(&self.elem(x)?, &self.elem(y)?)))
    }

    fn mul(&self, x: &PyQuadraticInteger, y: &PyQuadraticInteger) -> PyResult<PyQuadraticInteger> {
        Ok(Self::out(self.inner.mul(&self.elem(x)?, &self.elem(y)?)))
    }

    fn inv(&self, x: &PyQuadraticInteger) -> PyResult<PyQuadraticInteger> {
        Ok(Self::out(self.inner.inv(&self.elem(x)?).py_err()?))
    }

    #[pyo3(signature = (bound = DEFAULT_AXIOM_BOUND))]
    fn verify_axioms(&self, bound: u64) -> PyResult<bool> {
        Ok(verify_field_axioms(&self.inner, bound).py_err()?.passed)
    }

    fn __len__(&self) -> usize {
        self.inner.q() as usize
    }

    fn __repr__(&self) -> String {
        format!("LatticeField({})", self.inner.modulus())
    }
}

/// `(class, [(prime, multiplicity), ...], e, f, g)`
#[pyfunction]
fn factor(ring: &str, p: u64) -> PyResult<(String, Vec<(PyQuadraticInteger, u32)>, u32, u32, u32)> {
    let s = splitting::splitting_data(ring_tag(ring)?, p).py_err()?;
    let primes = s.primes_above.into_iter().map(|(pi, k)| (pi.into(), k)).collect();
    Ok((s.class.name().to_string(), primes, s.e, s.f, s.g))
}

/// `(affine, projective)`; `projective` is None where no closed count applies.
#[pyfunction]
#[pyo3(signature = (family, p, d = 1, degree = 5, method = "closed"))]
fn count_points(family: &str, p: u64, d: i64, degree: u32, method: &str) -> PyResult<(u64, Option<u64>)> {
    let c = curve(family, d, degree)?;
    let r = match method {
        "closed" => curves::count_points_closed_form(&c, p).py_err()?,
        "char" => curves::count_points_character_sum(&c, p).py_err()?,
        "brute" => {
            let field = latfield::PrimeField::new(p).py_err()?;
            curves::count_points_bruteforce(&c, &field).py_err()?.result
        }
        other => return Err(LatfieldError::new_err(format!("unknown method {other:?}"))),
    };
    Ok((r.n_affine, r.n_projective))
}

#[pyfunction]
#[pyo3(signature = (family, p, d = 1))]
fn defect(family: &str, p: u64, d: i64) -> PyResult<i64> {
    curves::defect(&curve(family, d, 5)?, p).py_err()
}

/// The lattice Weil zero, or None at a supersingular prime.
#[pyfunction]
#[pyo3(signature = (family, p, d = 1))]
fn weil_zero(family: &str, p: u64, d: i64) -> PyResult<Option<PyQuadraticInteger>> {
    Ok(match curves::weil_zero(&curve(family, d, 5)?, p).py_err()? {
        WeilZero::Split { w, .. } => Some(w.into()),
        WeilZero::Supersingular => None,
    })
}

/// `(a_p, [1, -a_p, p], [N_1, ..., N_n_max] projective)`
#[pyfunction]
#[pyo3(name = "zeta", signature = (family, p, d = 1, n_max = 3))]
fn zeta_data(family: &str, p: u64, d: i64, n_max: u32) -> PyResult<(i64, [i64; 3], Vec<BigInt>)> {
    let a = curves::defect(&curve(family, d, 5)?, p).py_err()?;
    let zd = zeta::betti_polynomial(a, p).py_err()?;
    let counts = zeta::extension_counts(&zd, n_max).py_err()?;
    Ok((a, zd.betti_coeffs, counts.into_iter().map(|c| c.projective).collect()))
}

/// Value of the order-m residue character mod p at `a`, rendered.
#[pyfunction]
#[pyo3(signature = (p, m, a, unicode = false))]
fn character(p: u64, m: u32, a: i64, unicode: bool) -> PyResult<String> {
    Ok(characters::make_character(p, m).py_err()?.eval(a).render(unicode))
}

#[pyfunction]
fn jacobi(p: u64, m1: u32, m2: u32) -> PyResult<PyQuadraticInteger> {
    let chi = characters::make_character(p, m1).py_err()?;
    let psi = characters::make_character(p, m2).py_err()?;
    Ok(characters::jacobi_sum(&chi, &psi).py_err()?.value.into())
}

/// `(symbol, det(I - T*Frob))`
#[pyfunction]
fn frobenius_quadratic(d: i64, p: u64) -> PyResult<(i64, Option<[i64; 3]>)> {
    let f = frobenius::frobenius_quadratic(d, p).py_err()?;
    Ok((f.symbol, f.char_poly_t))
}

/// `(matrix, det(I - T*M))` for the lift on Z[i] or Z[w].
#[pyfunction]
fn frobenius_ring(ring: &str, p: u64) -> PyResult<(Option<[[i64; 2]; 2]>, Option<[i64; 3]>)> {
    let f = frobenius::frobenius_matrix_and_charpoly(ring_tag(ring)?, p).py_err()?;
    Ok((f.matrix, f.char_poly_t))
}

#[pyfunction]
fn artin_map(n: u64, p: u64) -> PyResult<u64> {
    frobenius::artin_map(n, p).py_err()
}

/// Populates `m`; shared by the extension entry point and embedded use.
pub fn init_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("LatfieldError", m.py().get_type::<LatfieldError>())?;
    m.add("BoundError", m.py().get_type::<BoundError>())?;
    m.add_class::<PyQuadraticInteger>()?;
    m.add_class::<PyLatticeField>()?;
    m.add_function(wrap_pyfunction!(factor, m)?)?;
    m.add_function(wrap_pyfunction!(count_points, m)?)?;
    m.add_function(wrap_pyfunction!(defect, m)?)?;
    m.add_function(wrap_pyfunction!(weil_zero, m)?)?;
    m.add_function(wrap_pyfunction!(zeta_data, m)?)?;
    m.add_function(wrap_pyfunction!(character, m)?)?;
    m.add_function(wrap_pyfunction!(jacobi, m)?)?;
    m.add_function(wrap_pyfunction!(frobenius_quadratic, m)?)?;
    m.add_function(wrap_pyfunction!(frobenius_ring, m)?)?;
    m.add_function(wrap_pyfunction!(artin_map, m)?)?;
    Ok(())
}

#[pymodule(name = "latfield")]
fn latfield_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    init_module(m)
}
