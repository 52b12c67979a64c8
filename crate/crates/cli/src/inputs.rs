//! Reading algebra, map and subspace files.

use std::path::Path;

use leibniz_core::corpus::{self, AlgebraFile};
use leibniz_core::exactmath::Rational;
use leibniz_core::linalg::{Matrix, Subspace};
use leibniz_core::Error;
use serde_json::Value;

use crate::commands::CliError;

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn located(path: &Path, e: Error) -> CliError {
    let msg = match e {
        Error::IdentityViolation(i, j, k) => {
            format!("Leibniz identity fails at (e{i}, e{j}, e{k}); set \"unchecked\": true to load anyway")
        }
        other => other.to_string(),
    };
    CliError::usage(format!("{}: {msg}", path.display()))
}

/// Loads an algebra file, enforcing the identity unless the file opts out.
pub fn algebra(path: &Path) -> Result<AlgebraFile, CliError> {
    corpus::parse(&read(path)?).map_err(|e| located(path, e))
}

/// Loads an algebra file without identity validation.
pub fn algebra_unvalidated(path: &Path) -> Result<AlgebraFile, CliError> {
    corpus::parse_unvalidated(&read(path)?).map_err(|e| located(path, e))
}

fn rational(v: &Value, what: &str) -> Result<Rational, CliError> {
    match v {
        Value::String(s) => s.parse().map_err(|_| CliError::usage(format!("{what}: invalid rational {s:?}"))),
        Value::Number(n) => n
            .as_i64()
            .map(Rational::from_int)
            .ok_or_else(|| CliError::usage(format!("{what}: {n} is not an integer; use a \"p/q\" string"))),
        other => Err(CliError::usage(format!("{what}: expected a rational, got {other}"))),
    }
}

fn rows(path: &Path, key: &str, width: usize) -> Result<Vec<Vec<Rational>>, CliError> {
    let text = read(path)?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("{}: line {}: {e}", path.display(), e.line())))?;
    let list = v
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::usage(format!("{}: expected an object with a \"{key}\" array", path.display())))?;
    let mut out = Vec::with_capacity(list.len());
    for (r, row) in list.iter().enumerate() {
        let what = format!("{}: {key}[{r}]", path.display());
        let cells = row
            .as_array()
            .ok_or_else(|| CliError::usage(format!("{what}: expected an array")))?;
        if cells.len() != width {
            return Err(CliError::usage(format!("{what}: expected {width} entries, got {}", cells.len())));
        }
        out.push(cells.iter().map(|c| rational(c, &what)).collect::<Result<Vec<_>, _>>()?);
    }
    Ok(out)
}

/// `{"rows": [[...], ...]}`: a `dim x dim` matrix in the standard basis.
pub fn matrix(path: &Path, dim: usize) -> Result<Matrix, CliError> {
    let rows = rows(path, "rows", dim)?;
    if rows.len() != dim {
        return Err(CliError::usage(format!("{}: expected {dim} rows, got {}", path.display(), rows.len())));
    }
    Matrix::from_rows(rows).map_err(|e| CliError::usage(e.to_string()))
}

/// `{"basis": [[...], ...]}`: spanning vectors of a subspace.
pub fn subspace(path: &Path, dim: usize) -> Result<Subspace, CliError> {
    Ok(Subspace::from_vectors(dim, rows(path, "basis", dim)?))
}
