//! Loads the module into an embedded interpreter and calls it from Python.

use std::ffi::CString;

use pyo3::prelude::*;
use pyo3::types::PyDict;

fn run(code: &str) {
    Python::attach(|py| {
        let module = PyModule::new(py, "latfield").unwrap();
        latfield_py::init_module(&module).unwrap();
        let globals = PyDict::new(py);
        globals.set_item("latfield", module).unwrap();
        let code = CString::new(code).unwrap();
        if let Err(e) = py.run(&code, Some(&globals), None) {
            e.display(py);
            panic!("python snippet failed");
        }
    });
}

#[test]
fn ring_arithmetic() {
    run(r#"
Q = latfield.QuadraticInteger
z = Q.parse("gaussian", "3+2i")
assert (z * z.conj()).a == 13 and z.norm() == 13
q, r = divmod(Q("gaussian", 7, 3), z)
assert q * z + r == Q("gaussian", 7, 3) and r.norm() < z.norm()
assert Q("gaussian", 2**70, 1).a == 2**70
u, pz = Q("gaussian", 1, 2).canonical_associate()
assert u * Q("gaussian", 1, 2) == pz and pz.is_primary()
assert str(Q("eisenstein", 5, 3)) == "5+3w"
"#);
}

#[test]
fn fields_and_curves() {
    run(r#"
F = latfield.LatticeField(latfield.QuadraticInteger.parse("gaussian", "2+i"))
assert len(F.elements()) == 5 and F.verify_axioms()
cls, primes, e, f, g = latfield.factor("eisenstein", 19)
assert cls == "split" and str(primes[0][0]) == "5+3w" and (e, f, g) == (1, 1, 2)
assert latfield.count_points("cubic", 19, d=5) == (26, 27)
assert latfield.count_points("cubic", 19, d=5, method="brute") == (26, 27)
a, P, counts = latfield.zeta("cubic", 19, d=5)
assert a == -7 and P == [1, 7, 19] and counts[0] == 27
assert str(latfield.weil_zero("quartic", 5)) == "1-2i"
assert latfield.weil_zero("cubic", 5) is None
assert latfield.character(13, 6, 4) == "w^2"
assert str(latfield.jacobi(5, 2, 4)) == "1-2i"
assert latfield.frobenius_ring("eisenstein", 5)[0] == [[1, -1], [0, -1]]
assert latfield.artin_map(12, 7) == 7
try:
    latfield.factor("gaussian", 4)
except latfield.LatfieldError:
    pass
else:
    raise AssertionError("expected LatfieldError")
try:
    latfield.LatticeField(latfield.QuadraticInteger("gaussian", 11)).verify_axioms(100)
except latfield.BoundError:
    pass
else:
    raise AssertionError("expected BoundError")
"#);
}
