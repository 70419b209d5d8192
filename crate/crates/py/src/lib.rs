//! Python bindings: the `zerobound_py` extension module exposes the
//! polynomial type, disk bounds, parameter optimizers, and the root-solving
//! verification oracle.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use zerobound::fuzz::{run_campaign, FuzzConfig, Regime};
use zerobound::optimizer as opt;
use zerobound::roots;
use zerobound::theorems::{self, TheoremId, TheoremParams};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Real polynomial with ascending coefficients `[a_0, ..., a_n]`, `a_n != 0`.
#[pyclass(name = "Polynomial", frozen)]
struct PyPolynomial {
    inner: zerobound::Polynomial,
}

#[pymethods]
impl PyPolynomial {
    #[new]
    fn new(coeffs: Vec<f64>) -> PyResult<Self> {
        Ok(PyPolynomial {
            inner: zerobound::Polynomial::new(coeffs).map_err(value_err)?,
        })
    }

    /// Parses "a_0,a_1,...,a_n" or the JSON forms {"coeffs": [...]} / [...].
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyPolynomial {
            inner: text.parse().map_err(value_err)?,
        })
    }

    #[getter]
    fn coeffs(&self) -> Vec<f64> {
        self.inner.coeffs().to_vec()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    /// Horner evaluation at a complex point.
    fn eval(&self, z: Complex64) -> Complex64 {
        self.inner.eval(z)
    }

    /// The polynomial (1 - z) * p(z); shares every zero of p.
    fn one_minus_z_product(&self) -> Self {
        PyPolynomial {
            inner: self.inner.one_minus_z_product(),
        }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial([{}])", self.inner)
    }
}

/// Closed disk |z - center| <= radius.
#[pyclass(name = "Disk", frozen)]
struct PyDisk {
    inner: zerobound::Disk,
}

#[pymethods]
impl PyDisk {
    #[getter]
    fn center(&self) -> Complex64 {
        self.inner.center
    }

    #[getter]
    fn radius(&self) -> f64 {
        self.inner.radius
    }

    /// Ranking scalar |center| + radius.
    fn quality(&self) -> f64 {
        opt::quality(&self.inner)
    }

    #[pyo3(signature = (z, rel_tol = 1e-9, abs_tol = 1e-12))]
    fn contains(&self, z: Complex64, rel_tol: f64, abs_tol: f64) -> bool {
        self.inner.contains(z, rel_tol, abs_tol)
    }

    fn covers_unit_disk(&self) -> bool {
        self.inner.covers_unit_disk()
    }

    fn __repr__(&self) -> String {
        format!(
            "Disk(center={}+{}j, radius={})",
            self.inner.center.re, self.inner.center.im, self.inner.radius
        )
    }
}

/// Computed zeros with residuals and convergence metadata.
#[pyclass(name = "RootSet", frozen)]
struct PyRootSet {
    inner: roots::RootSet,
}

#[pymethods]
impl PyRootSet {
    #[getter]
    fn roots(&self) -> Vec<Complex64> {
        self.inner.roots.clone()
    }

    #[getter]
    fn residuals(&self) -> Vec<f64> {
        self.inner.residuals.clone()
    }

    #[getter]
    fn iterations(&self) -> usize {
        self.inner.iterations
    }

    #[getter]
    fn converged(&self) -> bool {
        self.inner.converged
    }

    fn __repr__(&self) -> String {
        format!(
            "RootSet({} roots, iterations={}, converged={})",
            self.inner.roots.len(),
            self.inner.iterations,
            self.inner.converged
        )
    }
}

/// Aberth-Ehrlich simultaneous root solve; deterministic for equal inputs.
#[pyfunction]
#[pyo3(signature = (p, tol = 1e-13, max_iter = 1000))]
fn find_roots(p: &PyPolynomial, tol: f64, max_iter: usize) -> PyRootSet {
    PyRootSet {
        inner: roots::find_roots(&p.inner, tol, max_iter),
    }
}

/// "contained", "failed", or "inconclusive" (solver did not converge).
#[pyfunction]
#[pyo3(signature = (rs, d, rel_tol = 1e-9, abs_tol = 1e-12))]
fn containment(rs: &PyRootSet, d: &PyDisk, rel_tol: f64, abs_tol: f64) -> &'static str {
    match roots::containment(&rs.inner, &d.inner, rel_tol, abs_tol) {
        roots::Containment::Contained => "contained",
        roots::Containment::Failed { .. } => "failed",
        roots::Containment::Inconclusive => "inconclusive",
        roots::Containment::Unchecked => "unchecked",
    }
}

/// Farthest-root distance over the radius; <= 1 means contained.
#[pyfunction]
fn tightness(rs: &PyRootSet, d: &PyDisk) -> PyResult<f64> {
    roots::tightness(&rs.inner, &d.inner).map_err(value_err)
}

/// Residuals of the Vieta sum and product identities.
#[pyfunction]
fn vieta_check(p: &PyPolynomial, rs: &PyRootSet) -> (f64, f64) {
    roots::vieta_check(&p.inner, &rs.inner)
}

/// Universal zero bound 1 + max_{j<n}|a_j|/|a_n|.
#[pyfunction]
fn cauchy_bound(p: &PyPolynomial) -> f64 {
    roots::cauchy_bound(&p.inner)
}

#[pyfunction]
#[pyo3(signature = (p, alpha, beta, chain_tol = 0.0))]
fn hypothesis_t1(p: &PyPolynomial, alpha: f64, beta: f64, chain_tol: f64) -> bool {
    theorems::hypothesis_t1(&p.inner, alpha, beta, chain_tol)
}

#[pyfunction]
#[pyo3(signature = (p, s, t, lam, chain_tol = 0.0))]
fn hypothesis_t3(p: &PyPolynomial, s: f64, t: f64, lam: usize, chain_tol: f64) -> PyResult<bool> {
    theorems::hypothesis_t3(&p.inner, s, t, lam, chain_tol).map_err(value_err)
}

/// Peak indices admissible for the unimodal chains (e, t2, t3).
#[pyfunction]
fn feasible_lambdas(p: &PyPolynomial) -> Vec<usize> {
    theorems::feasible_lambdas(&p.inner)
}

#[allow(clippy::too_many_arguments)]
fn params_from(
    theorem: &str,
    alpha: Option<f64>,
    beta: Option<f64>,
    s: Option<f64>,
    t: Option<f64>,
    lam: Option<usize>,
    k: Option<f64>,
    rho: Option<f64>,
) -> PyResult<TheoremParams> {
    let id: TheoremId = theorem.parse().map_err(value_err)?;
    let need = |v: Option<f64>, name: &str| {
        v.ok_or_else(|| value_err(format!("{id} needs parameter {name}")))
    };
    let need_lam = || lam.ok_or_else(|| value_err(format!("{id} needs parameter lam")));
    Ok(match id {
        TheoremId::A => TheoremParams::A,
        TheoremId::B => TheoremParams::B,
        TheoremId::C => TheoremParams::C { k: need(k, "k")? },
        TheoremId::D => TheoremParams::D {
            k: need(k, "k")?,
            rho: need(rho, "rho")?,
        },
        TheoremId::E => TheoremParams::E {
            rho: need(rho, "rho")?,
            lambda: need_lam()?,
        },
        TheoremId::Cor1 => TheoremParams::Cor1 {
            k: need(k, "k")?,
            rho: need(rho, "rho")?,
        },
        TheoremId::T1 => TheoremParams::T1 {
            alpha: need(alpha, "alpha")?,
            beta: need(beta, "beta")?,
        },
        TheoremId::T2 => TheoremParams::T2 {
            s: need(s, "s")?,
            lambda: need_lam()?,
        },
        TheoremId::T3 => TheoremParams::T3 {
            s: need(s, "s")?,
            t: need(t, "t")?,
            lambda: need_lam()?,
        },
    })
}

/// Disk for any bound id ("a", "b", "c", "d", "e", "cor1", "t1", "t2",
/// "t3") with its parameters; raises ValueError when the chain hypothesis
/// or a parameter domain fails. `lam` is the peak index λ.
#[pyfunction]
#[pyo3(signature = (p, theorem, alpha = None, beta = None, s = None, t = None, lam = None, k = None, rho = None, chain_tol = 0.0))]
#[allow(clippy::too_many_arguments)]
fn disk(
    p: &PyPolynomial,
    theorem: &str,
    alpha: Option<f64>,
    beta: Option<f64>,
    s: Option<f64>,
    t: Option<f64>,
    lam: Option<usize>,
    k: Option<f64>,
    rho: Option<f64>,
    chain_tol: f64,
) -> PyResult<PyDisk> {
    let params = params_from(theorem, alpha, beta, s, t, lam, k, rho)?;
    Ok(PyDisk {
        inner: theorems::theorem_disk(&p.inner, &params, chain_tol).map_err(value_err)?,
    })
}

/// Quality-minimal (alpha, beta, Disk) for the t1 chain.
#[pyfunction]
fn optimize_t1(p: &PyPolynomial) -> PyResult<(f64, f64, PyDisk)> {
    let o = opt::optimize_t1(&p.inner).map_err(value_err)?;
    Ok((o.alpha, o.beta, PyDisk { inner: o.disk }))
}

/// Quality-minimal (s, lam, Disk) for the t2 chain.
#[pyfunction]
fn optimize_t2(p: &PyPolynomial) -> PyResult<(f64, usize, PyDisk)> {
    let o = opt::optimize_t2(&p.inner).map_err(value_err)?;
    Ok((o.s, o.lambda, PyDisk { inner: o.disk }))
}

/// Quality-minimal (s, t, lam, Disk) for the t3 chain.
#[pyfunction]
fn optimize_t3(p: &PyPolynomial) -> PyResult<(f64, f64, usize, PyDisk)> {
    let o = opt::optimize_t3(&p.inner).map_err(value_err)?;
    Ok((o.s, o.t, o.lambda, PyDisk { inner: o.disk }))
}

/// Full report over every applicable bound as a JSON string (the same
/// schema the CLI prints). With `verify=True` the zeros are computed and
/// each entry carries a containment verdict and tightness ratio.
#[pyfunction]
#[pyo3(signature = (p, verify = false, chain_tol = 0.0))]
fn best_bound_json(p: &PyPolynomial, verify: bool, chain_tol: f64) -> String {
    let roots = verify.then(|| roots::find_roots_default(&p.inner));
    let report = opt::best_bound(&p.inner, roots.as_ref(), chain_tol);
    serde_json::to_string_pretty(&report).expect("report serializes")
}

/// Seeded fuzz campaign summary as a JSON string.
#[pyfunction]
#[pyo3(signature = (theorem, count, seed, degree_min = 2, degree_max = 15, scale = 1.0, full_regime = false))]
fn fuzz_json(
    theorem: &str,
    count: u64,
    seed: u64,
    degree_min: usize,
    degree_max: usize,
    scale: f64,
    full_regime: bool,
) -> PyResult<String> {
    let theorem: TheoremId = theorem.parse().map_err(value_err)?;
    let config = FuzzConfig {
        theorem,
        count,
        degree_min,
        degree_max,
        scale,
        seed,
        regime: if full_regime {
            Regime::Full
        } else {
            Regime::Proven
        },
    };
    Ok(serde_json::to_string_pretty(&run_campaign(&config)).expect("summary serializes"))
}

#[pymodule]
fn zerobound_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyDisk>()?;
    m.add_class::<PyRootSet>()?;
    m.add_function(wrap_pyfunction!(find_roots, m)?)?;
    m.add_function(wrap_pyfunction!(containment, m)?)?;
    m.add_function(wrap_pyfunction!(tightness, m)?)?;
    m.add_function(wrap_pyfunction!(vieta_check, m)?)?;
    m.add_function(wrap_pyfunction!(cauchy_bound, m)?)?;
    m.add_function(wrap_pyfunction!(hypothesis_t1, m)?)?;
    m.add_function(wrap_pyfunction!(hypothesis_t3, m)?)?;
    m.add_function(wrap_pyfunction!(feasible_lambdas, m)?)?;
    m.add_function(wrap_pyfunction!(disk, m)?)?;
    m.add_function(wrap_pyfunction!(optimize_t1, m)?)?;
    m.add_function(wrap_pyfunction!(optimize_t2, m)?)?;
    m.add_function(wrap_pyfunction!(optimize_t3, m)?)?;
    m.add_function(wrap_pyfunction!(best_bound_json, m)?)?;
    m.add_function(wrap_pyfunction!(fuzz_json, m)?)?;
    Ok(())
}
