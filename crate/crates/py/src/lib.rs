//! Python bindings: permutations, groups, series, Carter subgroups, and the
//! verification checks, with reports surfaced as JSON-compatible dicts.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyModule;

use carter_kit::carter;
use carter_kit::config::Config;
use carter_kit::harness;
use carter_kit::induced;
use carter_kit::recognize::{self, GroupSpec};
use carter_kit::series;
use carter_kit::structure;

fn err(e: carter_kit::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_spec(family: &str, params: Vec<u64>) -> PyResult<GroupSpec> {
    let spec = match (family, params.as_slice()) {
        ("symmetric", [n]) => GroupSpec::Symmetric { n: *n as usize },
        ("alternating", [n]) => GroupSpec::Alternating { n: *n as usize },
        ("cyclic", [m]) => GroupSpec::Cyclic { m: *m as usize },
        ("dihedral", [m]) => GroupSpec::Dihedral { m: *m as usize },
        ("frobenius", [p, k]) => GroupSpec::Frobenius { p: *p, k: *k },
        ("psl2", [q]) => GroupSpec::Psl2 { q: *q },
        ("psigma_l2", [p, f]) => GroupSpec::PsigmaL2 { p: *p, f: *f as u32 },
        _ => {
            return Err(PyValueError::new_err(format!(
                "unknown family/arity: {family} {params:?}"
            )))
        }
    };
    Ok(spec)
}

fn json_to_py(py: Python<'_>, v: &serde_json::Value) -> PyResult<Py<PyAny>> {
    Ok(match v {
        serde_json::Value::Null => py.None(),
        serde_json::Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any().unbind(),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any().unbind()
            } else if let Some(u) = n.as_u64() {
                u.into_pyobject(py)?.into_any().unbind()
            } else {
                n.as_f64().unwrap().into_pyobject(py)?.into_any().unbind()
            }
        }
        serde_json::Value::String(s) => s.into_pyobject(py)?.into_any().unbind(),
        serde_json::Value::Array(a) => {
            let items = a
                .iter()
                .map(|x| json_to_py(py, x))
                .collect::<PyResult<Vec<_>>>()?;
            pyo3::types::PyList::new(py, items)?.into_any().unbind()
        }
        serde_json::Value::Object(o) => {
            let d = pyo3::types::PyDict::new(py);
            for (k, x) in o {
                d.set_item(k, json_to_py(py, x)?)?;
            }
            d.into_any().unbind()
        }
    })
}

fn report_to_py(py: Python<'_>, r: &harness::Report) -> PyResult<Py<PyAny>> {
    json_to_py(py, &serde_json::to_value(r).map_err(|e| PyValueError::new_err(e.to_string()))?)
}

#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Perm {
    inner: carter_kit::Perm,
}

#[pymethods]
impl Perm {
    #[new]
    fn new(images: Vec<u32>) -> PyResult<Perm> {
        Ok(Perm {
            inner: carter_kit::Perm::new(images).map_err(err)?,
        })
    }

    #[staticmethod]
    fn identity(degree: usize) -> Perm {
        Perm {
            inner: carter_kit::Perm::identity(degree),
        }
    }

    fn images(&self) -> Vec<u32> {
        self.inner.images().to_vec()
    }

    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn apply(&self, point: u32) -> u32 {
        self.inner.apply(point)
    }

    /// Left-to-right composition: (self * other)(x) = other(self(x)).
    fn compose(&self, other: &Perm) -> PyResult<Perm> {
        Ok(Perm {
            inner: self.inner.compose_checked(&other.inner).map_err(err)?,
        })
    }

    fn inverse(&self) -> Perm {
        Perm {
            inner: self.inner.inverse(),
        }
    }

    fn order(&self) -> u64 {
        self.inner.order()
    }

    fn cycles(&self) -> String {
        self.inner.cycle_string()
    }

    fn __repr__(&self) -> String {
        format!("Perm({})", self.inner.cycle_string())
    }

    fn __eq__(&self, other: &Perm) -> bool {
        self.inner == other.inner
    }
}

#[pyclass(frozen)]
struct Group {
    inner: carter_kit::Group,
    cfg: Config,
}

impl Group {
    fn wrap(&self, g: carter_kit::Group) -> Group {
        Group {
            inner: g,
            cfg: self.cfg.clone(),
        }
    }
}

#[pymethods]
impl Group {
    #[new]
    fn new(degree: usize, generators: Vec<Vec<u32>>) -> PyResult<Group> {
        let cfg = Config::default();
        let gens = generators
            .into_iter()
            .map(carter_kit::Perm::new)
            .collect::<carter_kit::Result<Vec<_>>>()
            .map_err(err)?;
        Ok(Group {
            inner: carter_kit::Group::from_generators(degree, gens, &cfg).map_err(err)?,
            cfg,
        })
    }

    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn order(&self) -> u128 {
        self.inner.order()
    }

    fn generators(&self) -> Vec<Vec<u32>> {
        self.inner
            .generators()
            .iter()
            .map(|p| p.images().to_vec())
            .collect()
    }

    fn contains(&self, p: &Perm) -> PyResult<bool> {
        self.inner.contains(&p.inner).map_err(err)
    }

    fn is_subgroup_of(&self, other: &Group) -> bool {
        self.inner.is_subgroup_of(&other.inner)
    }

    fn uniform_random_element(&self, seed: u64) -> Perm {
        Perm {
            inner: self.inner.uniform_random_element(seed),
        }
    }

    fn is_solvable(&self) -> PyResult<bool> {
        structure::is_solvable(&self.inner).map_err(err)
    }

    fn is_nilpotent(&self) -> PyResult<bool> {
        structure::is_nilpotent(&self.inner).map_err(err)
    }

    fn derived_series_orders(&self) -> PyResult<Vec<u128>> {
        Ok(structure::derived_series(&self.inner)
            .map_err(err)?
            .iter()
            .map(|g| g.order())
            .collect())
    }

    fn sylow_subgroup(&self, p: u64) -> PyResult<Group> {
        Ok(self.wrap(structure::sylow_subgroup(&self.inner, p, &self.cfg).map_err(err)?))
    }

    fn normalizer(&self, h: &Group) -> PyResult<Group> {
        Ok(self.wrap(structure::normalizer(&self.inner, &h.inner, &self.cfg).map_err(err)?))
    }

    fn centralizer(&self, h: &Group) -> PyResult<Group> {
        Ok(self.wrap(structure::centralizer(&self.inner, &h.inner, &self.cfg).map_err(err)?))
    }

    /// Factor orders of a series of the given kind ("chief", "composition",
    /// "rc").
    #[pyo3(signature = (kind, seed = 0))]
    fn series_factor_orders(&self, kind: &str, seed: u64) -> PyResult<Vec<u128>> {
        let s = match kind {
            "chief" => series::chief_series(&self.inner, &self.cfg).map_err(err)?,
            "composition" => {
                series::composition_series(&self.inner, seed, &self.cfg).map_err(err)?
            }
            "rc" => series::rc_series(&self.inner, &self.cfg).map_err(err)?,
            other => return Err(PyValueError::new_err(format!("unknown kind: {other}"))),
        };
        Ok(s.factor_orders())
    }

    /// Carter subgroup class representatives, as dicts.
    fn carter_subgroups(&self, py: Python<'_>) -> PyResult<Vec<Py<PyAny>>> {
        let ws = carter::carter_subgroups(&self.inner, &self.cfg).map_err(err)?;
        ws.iter()
            .map(|w| {
                json_to_py(
                    py,
                    &serde_json::json!({
                        "order": w.k.order().to_string(),
                        "odd_order": w.odd_order,
                        "three_divides": w.three_divides,
                        "generators": w.k.generators().iter().map(|p| p.images().to_vec()).collect::<Vec<_>>(),
                    }),
                )
            })
            .collect()
    }

    fn is_carter(&self, k: &Group) -> PyResult<bool> {
        carter::is_carter(&self.inner, &k.inner, &self.cfg).map_err(err)
    }

    /// Induced automorphism data of the section A/B under the subgroup H,
    /// as a dict of orders.
    fn induced_aut(&self, py: Python<'_>, h: &Group, a: &Group, b: &Group) -> PyResult<Py<PyAny>> {
        let sec = series::Section::new(&self.inner, a.inner.clone(), b.inner.clone())
            .map_err(err)?;
        let ind = induced::induced_aut(&h.inner, &sec, &self.cfg).map_err(err)?;
        json_to_py(
            py,
            &serde_json::json!({
                "normalizer_order": ind.normalizer_part.order().to_string(),
                "kernel_order": ind.kernel.order().to_string(),
                "image_order": ind.image.order().to_string(),
                "image_degree": ind.image.degree(),
            }),
        )
    }

    fn check_main_theorem(&self, py: Python<'_>, name: &str) -> PyResult<Py<PyAny>> {
        let r = harness::check_main_theorem(name, &self.inner, None, &self.cfg).map_err(err)?;
        report_to_py(py, &r)
    }

    fn check_sylow_theorems(&self, py: Python<'_>, name: &str, p: u64) -> PyResult<Py<PyAny>> {
        let r = harness::check_sylow_theorems(name, &self.inner, p, &self.cfg).map_err(err)?;
        report_to_py(py, &r)
    }

    #[pyo3(signature = (name, seed = 0))]
    fn check_gjh(&self, py: Python<'_>, name: &str, seed: u64) -> PyResult<Py<PyAny>> {
        let rc = series::rc_series(&self.inner, &self.cfg).map_err(err)?;
        let comp = series::composition_series(&self.inner, seed, &self.cfg).map_err(err)?;
        let (_, r) = harness::check_gjh(name, &self.inner, &rc, &comp, &self.cfg).map_err(err)?;
        report_to_py(py, &r)
    }

    fn __repr__(&self) -> String {
        format!(
            "Group(degree={}, order={})",
            self.inner.degree(),
            self.inner.order()
        )
    }
}

/// Construct a named group: construct("psl2", [7]), construct("symmetric", [5]), ...
#[pyfunction]
fn construct(family: &str, params: Vec<u64>) -> PyResult<Group> {
    let cfg = Config::default();
    let spec = parse_spec(family, params)?;
    Ok(Group {
        inner: recognize::construct(&spec, &cfg).map_err(err)?,
        cfg,
    })
}

#[pyfunction]
fn is_l2_3odd_order(m: u128) -> Option<u32> {
    recognize::is_l2_3odd_order(m)
}

#[pymodule]
fn carter_kit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Perm>()?;
    m.add_class::<Group>()?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(is_l2_3odd_order, m)?)?;
    Ok(())
}
