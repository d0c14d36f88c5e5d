//! Python bindings: every command of the `psb` tool, with results
//! returned as Python objects decoded from the JSON output.

use psbasis::job::run_cli;
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyList;

create_exception!(psbasis_py, PsbError, PyException, "A failed computation; `args[1]` is the exit status.");

fn capture(args: &[String]) -> (i32, String, String) {
    let argv = std::iter::once("psb".to_string()).chain(args.iter().cloned());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_cli(argv, &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned(), String::from_utf8_lossy(&err).into_owned())
}

/// Runs the tool with `args` and returns (exit status, stdout, stderr).
#[pyfunction]
fn run(py: Python<'_>, args: Vec<String>) -> (i32, String, String) {
    py.detach(|| capture(&args))
}

/// Runs one command with JSON output and decodes the result.
#[pyfunction]
fn call(py: Python<'_>, args: Vec<String>) -> PyResult<Py<PyAny>> {
    let mut full = vec!["--format".to_string(), "json".to_string()];
    full.extend(args);
    let (code, out, err) = py.detach(|| capture(&full));
    if code != 0 {
        return Err(PsbError::new_err((err.trim().to_string(), code)));
    }
    Ok(py.import("json")?.call_method1("loads", (out,))?.unbind())
}

fn with_polys(mut args: Vec<String>, polys: Vec<String>) -> Vec<String> {
    args.push("--".into());
    args.extend(polys);
    args
}

fn opt(args: &mut Vec<String>, flag: &str, v: Option<String>) {
    if let Some(v) = v {
        args.push(flag.into());
        args.push(v);
    }
}

#[pyfunction]
#[pyo3(signature = (polys, order=None, vars=None))]
fn standard_basis(py: Python<'_>, polys: Vec<String>, order: Option<String>, vars: Option<Vec<String>>) -> PyResult<Py<PyAny>> {
    let mut args = vec!["sb".to_string()];
    opt(&mut args, "--order", order);
    opt(&mut args, "--vars", vars.map(|v| v.join(",")));
    call(py, with_polys(args, polys))
}

#[pyfunction]
#[pyo3(signature = (polys, engine=None, r_max=None, workers=None))]
fn hs_stratify(
    py: Python<'_>,
    polys: Vec<String>,
    engine: Option<String>,
    r_max: Option<u64>,
    workers: Option<usize>,
) -> PyResult<Py<PyAny>> {
    let mut args = Vec::new();
    opt(&mut args, "--workers", workers.map(|w| w.to_string()));
    args.push("hs-strat".into());
    opt(&mut args, "--engine", engine);
    opt(&mut args, "--r-max", r_max.map(|r| r.to_string()));
    call(py, with_polys(args, polys))
}

#[pyfunction]
#[pyo3(signature = (polys, point, r_max=None))]
fn hs_at(py: Python<'_>, polys: Vec<String>, point: &Bound<'_, PyList>, r_max: Option<u64>) -> PyResult<Py<PyAny>> {
    let coords: Vec<String> = point.iter().map(|c| c.str().map(|s| s.to_string())).collect::<PyResult<_>>()?;
    let mut args = vec!["hs-at".to_string(), "--point".to_string(), coords.join(",")];
    opt(&mut args, "--r-max", r_max.map(|r| r.to_string()));
    call(py, with_polys(args, polys))
}

#[pyfunction]
fn bounds(py: Python<'_>, n: u32, d: u32) -> PyResult<Py<PyAny>> {
    call(py, vec!["bounds".into(), "-n".into(), n.to_string(), "-d".into(), d.to_string()])
}

#[pymodule]
fn psbasis_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("PsbError", m.py().get_type::<PsbError>())?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(call, m)?)?;
    m.add_function(wrap_pyfunction!(standard_basis, m)?)?;
    m.add_function(wrap_pyfunction!(hs_stratify, m)?)?;
    m.add_function(wrap_pyfunction!(hs_at, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    Ok(())
}
