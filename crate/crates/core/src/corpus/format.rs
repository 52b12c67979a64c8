//! JSON file format for multiplication tables.
//!
//! ```json
//! {
//!   "name": "heisenberg",
//!   "dim": 3,
//!   "brackets": [
//!     {"left": 1, "right": 2, "result": [[3, "1"]]},
//!     {"left": 2, "right": 1, "result": [[3, "-1"]]}
//!   ],
//!   "meta": {"is_lie": true}
//! }
//! ```
//!
//! Indices are 1-based, rationals are `"p/q"` strings, unlisted products are
//! zero. [`to_canonical_string`] sorts everything, so saving a loaded
//! canonical file reproduces it byte for byte.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::algebra::{check_leibniz_identity, IdentityReport, LeibnizAlgebra, TableBuilder};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::linalg::Subspace;

/// Optional annotations carried alongside a table.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AlgebraMeta {
    pub solvable_radical: Option<Subspace>,
    pub nilradical: Option<Subspace>,
    pub is_lie: Option<bool>,
}

impl AlgebraMeta {
    fn is_empty(&self) -> bool {
        self.solvable_radical.is_none() && self.nilradical.is_none() && self.is_lie.is_none()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraFile {
    pub algebra: LeibnizAlgebra,
    /// The table was loaded without identity validation.
    pub unchecked: bool,
    pub meta: AlgebraMeta,
}

impl AlgebraFile {
    pub fn new(algebra: LeibnizAlgebra) -> Self {
        AlgebraFile { algebra, unchecked: false, meta: AlgebraMeta::default() }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    name: String,
    dim: usize,
    #[serde(default)]
    unchecked: bool,
    brackets: Vec<RawBracket>,
    #[serde(default)]
    meta: Option<RawMeta>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBracket {
    left: usize,
    right: usize,
    result: Vec<(usize, String)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMeta {
    #[serde(default)]
    solvable_radical: Option<Vec<Vec<String>>>,
    #[serde(default)]
    nilradical: Option<Vec<Vec<String>>>,
    #[serde(default)]
    is_lie: Option<bool>,
}

/// Line (1-based) of the `n`-th bracket record, located by its `"left"` key.
fn bracket_line(text: &str, n: usize) -> Option<usize> {
    let mut seen = 0;
    for (lineno, line) in text.lines().enumerate() {
        let hits = line.matches("\"left\"").count();
        if seen + hits > n {
            return Some(lineno + 1);
        }
        seen += hits;
    }
    None
}

fn field_error(text: &str, bracket: Option<usize>, field: &str, msg: impl AsRef<str>) -> Error {
    let loc = match bracket.and_then(|b| bracket_line(text, b)) {
        Some(line) => format!("line {line}, "),
        None => String::new(),
    };
    Error::Parse(format!("{loc}field {field}: {}", msg.as_ref()))
}

fn parse_rational(text: &str, bracket: Option<usize>, field: &str, s: &str) -> Result<Rational> {
    s.parse::<Rational>()
        .map_err(|_| field_error(text, bracket, field, format!("invalid rational {s:?}")))
}

fn parse_rows(text: &str, dim: usize, field: &str, rows: &[Vec<String>]) -> Result<Subspace> {
    let mut vecs = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let f = format!("{field}[{r}]");
        if row.len() != dim {
            return Err(field_error(text, None, &f, format!("expected {dim} entries, got {}", row.len())));
        }
        let v = row
            .iter()
            .map(|s| parse_rational(text, None, &f, s))
            .collect::<Result<Vec<_>>>()?;
        vecs.push(v);
    }
    Ok(Subspace::from_vectors(dim, vecs))
}

/// Parses and validates a table; the Leibniz identity is enforced unless the
/// file sets `"unchecked": true`.
pub fn parse(text: &str) -> Result<AlgebraFile> {
    parse_with(text, true)
}

/// Like [`parse`] but never checks the Leibniz identity, so that violating
/// tables can be inspected and reported.
pub fn parse_unvalidated(text: &str) -> Result<AlgebraFile> {
    parse_with(text, false)
}

fn parse_with(text: &str, validate: bool) -> Result<AlgebraFile> {
    let raw: RawFile = serde_json::from_str(text).map_err(|e| {
        Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
    })?;
    if raw.dim == 0 {
        return Err(field_error(text, None, "dim", "must be positive"));
    }
    let dim = raw.dim;
    let mut builder = TableBuilder::new(dim);
    let mut keys = BTreeMap::new();
    for (n, br) in raw.brackets.iter().enumerate() {
        let at = Some(n);
        for (field, idx) in [("left", br.left), ("right", br.right)] {
            if idx == 0 || idx > dim {
                return Err(field_error(
                    text,
                    at,
                    &format!("brackets[{n}].{field}"),
                    format!("index {idx} out of range 1..={dim}"),
                ));
            }
        }
        if let Some(prev) = keys.insert((br.left, br.right), n) {
            return Err(field_error(
                text,
                at,
                &format!("brackets[{n}]"),
                format!("duplicate product ({}, {}) already given by brackets[{prev}]", br.left, br.right),
            ));
        }
        let mut targets = BTreeMap::new();
        for (m, (k, c)) in br.result.iter().enumerate() {
            let field = format!("brackets[{n}].result[{m}]");
            if *k == 0 || *k > dim {
                return Err(field_error(text, at, &field, format!("index {k} out of range 1..={dim}")));
            }
            if targets.insert(*k, ()).is_some() {
                return Err(field_error(text, at, &field, format!("repeated basis index {k}")));
            }
            let c = parse_rational(text, at, &field, c)?;
            builder.add(br.left - 1, br.right - 1, k - 1, c)?;
        }
    }
    let algebra = if raw.unchecked || !validate {
        builder.build_unchecked(raw.name)
    } else {
        let alg = builder.build_unchecked(raw.name);
        if let IdentityReport::Violated { indices, .. } = check_leibniz_identity(&alg) {
            return Err(Error::IdentityViolation(indices[0] + 1, indices[1] + 1, indices[2] + 1));
        }
        alg
    };
    let mut meta = AlgebraMeta::default();
    if let Some(m) = raw.meta {
        if let Some(rows) = &m.solvable_radical {
            meta.solvable_radical = Some(parse_rows(text, dim, "meta.solvable_radical", rows)?);
        }
        if let Some(rows) = &m.nilradical {
            meta.nilradical = Some(parse_rows(text, dim, "meta.nilradical", rows)?);
        }
        meta.is_lie = m.is_lie;
    }
    Ok(AlgebraFile { algebra, unchecked: raw.unchecked, meta })
}

pub fn load(path: impl AsRef<Path>) -> Result<AlgebraFile> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn rows_json(s: &Subspace) -> String {
    let rows: Vec<String> = s
        .basis_vectors()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|c| json_str(&c.to_string())).collect();
            format!("      [{}]", cells.join(", "))
        })
        .collect();
    if rows.is_empty() {
        "[]".into()
    } else {
        format!("[\n{}\n    ]", rows.join(",\n"))
    }
}

/// Canonical text: one bracket per line in `(left, right)` order, canonical
/// rationals, meta keys sorted, subspaces as reduced basis rows.
pub fn to_canonical_string(file: &AlgebraFile) -> String {
    let alg = &file.algebra;
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"name\": {},\n", json_str(alg.name())));
    out.push_str(&format!("  \"dim\": {},\n", alg.dim()));
    if file.unchecked {
        out.push_str("  \"unchecked\": true,\n");
    }
    let mut entries = alg.table_entries();
    entries.sort_by_key(|(key, _)| *key);
    let lines: Vec<String> = entries
        .iter()
        .map(|((i, j), res)| {
            let terms: Vec<String> =
                res.iter().map(|(k, c)| format!("[{k}, {}]", json_str(&c.to_string()))).collect();
            format!("    {{\"left\": {i}, \"right\": {j}, \"result\": [{}]}}", terms.join(", "))
        })
        .collect();
    if lines.is_empty() {
        out.push_str("  \"brackets\": []");
    } else {
        out.push_str(&format!("  \"brackets\": [\n{}\n  ]", lines.join(",\n")));
    }
    if !file.meta.is_empty() {
        let mut parts = Vec::new();
        if let Some(b) = file.meta.is_lie {
            parts.push(format!("    \"is_lie\": {b}"));
        }
        if let Some(s) = &file.meta.nilradical {
            parts.push(format!("    \"nilradical\": {}", rows_json(s)));
        }
        if let Some(s) = &file.meta.solvable_radical {
            parts.push(format!("    \"solvable_radical\": {}", rows_json(s)));
        }
        out.push_str(&format!(",\n  \"meta\": {{\n{}\n  }}", parts.join(",\n")));
    }
    out.push_str("\n}\n");
    out
}

pub fn save(path: impl AsRef<Path>, file: &AlgebraFile) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, to_canonical_string(file))
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
