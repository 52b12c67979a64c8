//! Command implementations; each returns human text and a JSON value.

use std::path::Path;

use leibniz_core::algebra::{
    check_leibniz_identity, check_n_algebra_identity, engel_check, is_nilpotent, series, IdentityReport,
    NaryProduct, SeriesKind,
};
use leibniz_core::corpus::verify::{corpus_from_dir, verify_bundled, verify_corpus};
use leibniz_core::derivations::{
    classify, construct_moens_derivation, default_max_order, derivation_space, exists_invertible,
    invariance_check, theorem_check, weight_product_check, DerivationQuery, Side,
};
use leibniz_core::linalg::{decompose, Matrix, Subspace};
use leibniz_core::Error;
use serde_json::{json, Value};

use crate::inputs;
use crate::Command;

pub struct CliError {
    pub message: String,
    pub code: u8,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { message: message.into(), code: 2 }
    }

    fn property(message: impl Into<String>) -> Self {
        CliError { message: message.into(), code: 1 }
    }
}

/// Library errors: violated preconditions of a property exit 1, bad input exits 2.
impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotNilpotent
            | Error::NotAnIdeal
            | Error::NotADerivation { .. }
            | Error::NonSplitSpectrum { .. }
            | Error::IdentityViolation(..) => CliError::property(e.to_string()),
            other => CliError::usage(other.to_string()),
        }
    }
}

pub struct Output {
    pub text: String,
    pub json: Value,
    /// False when the checked property failed (exit code 1).
    pub passed: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, passed: true }
    }
}

fn matrix_json(m: &Matrix) -> Value {
    json!(m.row_vecs().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn subspace_json(s: &Subspace) -> Value {
    json!({
        "dim": s.dim(),
        "basis": s.basis_vectors().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}")).collect::<Vec<_>>().join("\n")
}

fn side(s: &str) -> Result<Side, CliError> {
    s.parse().map_err(|e: Error| CliError::usage(e.to_string()))
}

fn query(order: usize, side_name: &str) -> Result<DerivationQuery, CliError> {
    Ok(DerivationQuery::new(order, side(side_name)?)?)
}

pub fn run(cmd: Command) -> Result<Output, CliError> {
    match cmd {
        Command::Check { file } => check(&file),
        Command::Series { file, kind, ary } => series_cmd(&file, &kind, ary),
        Command::Nilpotency { file } => nilpotency(&file),
        Command::Solvability { file } => solvability(&file),
        Command::Derivations { file, order, side } => derivations(&file, order, &side),
        Command::Classify { file, max_order } => classify_cmd(&file, max_order),
        Command::Invertible { file, order, side } => invertible(&file, order, &side),
        Command::PropDerivation { file } => prop_derivation(&file),
        Command::Decompose { file, map, order } => decompose_cmd(&file, &map, order),
        Command::IdentityN { file, ary, product } => identity_n(&file, ary, &product),
        Command::Invariance { file, ideal, order, side } => invariance(&file, &ideal, order, &side),
        Command::TheoremCheck { file, max_order } => theorem(&file, max_order.unwrap_or_else(default_max_order)),
        Command::VerifyPaper { corpus } => verify(corpus.as_deref()),
    }
}

fn identity_json(rep: &IdentityReport) -> Value {
    match rep {
        IdentityReport::Holds => json!({ "holds": true }),
        IdentityReport::Violated { indices, lhs, rhs } => json!({
            "holds": false,
            "indices": indices.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "lhs": lhs.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "rhs": rhs.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
    }
}

fn check(file: &Path) -> Result<Output, CliError> {
    let f = inputs::algebra_unvalidated(file)?;
    let rep = check_leibniz_identity(&f.algebra);
    let name = f.algebra.name();
    let text = match &rep {
        IdentityReport::Holds => format!("{name}: Leibniz identity holds (dim {})", f.algebra.dim()),
        v => format!("{name}: {v}"),
    };
    let mut j = identity_json(&rep);
    j["name"] = json!(name);
    Ok(Output { text, json: j, passed: rep.holds() })
}

fn series_cmd(file: &Path, kind: &str, ary: usize) -> Result<Output, CliError> {
    let f = inputs::algebra(file)?;
    let kind: SeriesKind = kind.parse()?;
    let alg = &f.algebra;
    let rep = series(alg, &Subspace::full(alg.dim()), kind, ary)?;
    let mut text = rep.to_string();
    for (k, t) in rep.terms.iter().enumerate() {
        text.push_str(&format!("\nterm {}: {}", k + 1, indent(&t.to_string()).trim_start()));
    }
    let j = json!({
        "kind": kind.as_str(),
        "arity": ary,
        "dims": rep.dims(),
        "stabilized": rep.stabilized,
        "terminal_dim": rep.terminal_dim,
        "terms": rep.terms.iter().map(subspace_json).collect::<Vec<_>>(),
    });
    Ok(Output::ok(text, j))
}

fn nilpotency(file: &Path) -> Result<Output, CliError> {
    let f = inputs::algebra(file)?;
    let (nil, index) = is_nilpotent(&f.algebra);
    let engel = engel_check(&f.algebra);
    let text = match index {
        Some(s) => format!("nilpotent, nilindex {s}"),
        None => "not nilpotent".to_string(),
    };
    let j = json!({
        "nilpotent": nil,
        "nilindex": index,
        "engel": { "basis_nilpotent": engel.basis_nilpotent, "generic_nilpotent": engel.generic_nilpotent },
    });
    Ok(Output { text, json: j, passed: engel.verdict() == nil })
}

fn solvability(file: &Path) -> Result<Output, CliError> {
    let f = inputs::algebra(file)?;
    let alg = &f.algebra;
    let rep = series(alg, &Subspace::full(alg.dim()), SeriesKind::Derived, 2)?;
    let dims: Vec<String> = rep.dims().iter().map(ToString::to_string).collect();
    let text = format!(
        "{}, derived series dims {}",
        if rep.reached_zero() { "solvable" } else { "not solvable" },
        dims.join(", ")
    );
    Ok(Output::ok(text, json!({ "solvable": rep.reached_zero(), "dims": rep.dims() })))
}

fn derivations(file: &Path, order: usize, side_name: &str) -> Result<Output, CliError> {
    let f = inputs::algebra(file)?;
    let q = query(order, side_name)?;
    let space = derivation_space(&f.algebra, &q);
    let mut text = format!("{} Leibniz-derivations of order {order}: dim {}", q.side(), space.dim());
    for (i, m) in space.basis().iter().enumerate() {
        text.push_str(&format!("\nbasis {}:\n{}", i + 1, indent(m.to_string().trim_end())));
    }
    let j = json!({
        "order": order,
        "side": q.side().as_str(),
        "dim": space.dim(),
        "basis": space.basis().iter().map(matrix_json).collect::<Vec<_>>(),
    });
    Ok(Output::ok(text, j))
}

fn classify_cmd(file: &Path, max_order: usize) -> Result<Output, CliError> {
    let f = inputs::algebra(file)?;
    let rep = classify(&f.algebra, max_order);
    let mut text = format!(
        "nilpotent: {}{}\ncharacteristically nilpotent: {}\nstrongly nilpotent: {}\nderivations: dim {}\npre-derivations: dim {}",
        rep.nilpotent,
        rep.nilindex.map(|s| format!(" (nilindex {s})")).unwrap_or_default(),
        rep.char_nilpotent,
        rep.strongly_nilpotent,
        rep.der_dim,
        rep.preder_dim
    );
    for o in &rep.invertible_orders {
        text.push_str(&format!(
            "\norder {}: {}",
            o.order,
            if o.witness.is_some() { "invertible element exists" } else { "no invertible element" }
        ));
    }
    let passed = !rep.strongly_nilpotent || rep.char_nilpotent;
    Ok(Output { text, json: rep.to_json(), passed })
}

fn invertible(file: &Path, order: usize, side_name: &str) -> Result<Output, CliError> {
    let f = inputs::algebra(file)?;
    let q = query(order, side_name)?;
    let space = derivation_space(&f.algebra, &q);
    let (found, witness) = exists_invertible(&space);
    let text = match &witness {
        Some(w) => format!(
            "invertible {} Leibniz-derivation of order {order} exists; witness:\n{}",
            q.side(),
            indent(w.to_string().trim_end())
        ),
        None => format!("no invertible {} Leibniz-derivation of order {order} (space dim {})", q.side(), space.dim()),
    };
    let j = json!({
        "order": order,
        "side": q.side().as_str(),
        "space_dim": space.dim(),
        "invertible": found,
        "witness": witness.as_ref().map(matrix_json),
    });
    Ok(Output::ok(text, j))
}

fn prop_derivation(file: &Path) -> Result<Output, CliError> {
    let f = inputs::algebra(file)?;
    let m = construct_moens_derivation(&f.algebra)?;
    let text = format!(
        "nilindex {}, invertible right Leibniz-derivation of order {}:\n{}",
        m.nilindex,
        m.order,
        indent(m.matrix.to_string().trim_end())
    );
    let j = json!({ "nilindex": m.nilindex, "order": m.order, "matrix": matrix_json(&m.matrix) });
    Ok(Output::ok(text, j))
}

fn decompose_cmd(file: &Path, map: &Path, order: Option<usize>) -> Result<Output, CliError> {
    let f = inputs::algebra(file)?;
    let d = inputs::matrix(map, f.algebra.dim())?;
    let dec = decompose(&d)?;
    let mut text = dec.to_string();
    let mut j = json!({
        "weights": dec.pairs().iter().map(|(l, s)| json!({
            "eigenvalue": l.to_string(),
            "space": subspace_json(s),
        })).collect::<Vec<_>>(),
    });
    let mut passed = true;
    if let Some(n) = order {
        let rep = weight_product_check(&f.algebra, &d, n)?;
        text.push_str(&format!("\n{rep}"));
        passed = rep.all_contained();
        j["products"] = json!({
            "order": n,
            "all_contained": rep.all_contained(),
            "all_equal": rep.all_equal(),
            "tuples": rep.tuples.iter().map(|t| json!({
                "weights": t.weights.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "sum": t.sum.to_string(),
                "sum_is_weight": t.sum_is_weight,
                "product_dim": t.product_dim,
                "target_dim": t.target_dim,
                "contained": t.contained,
                "equal": t.equal,
            })).collect::<Vec<_>>(),
        });
    }
    Ok(Output { text, json: j, passed })
}

fn identity_n(file: &Path, ary: usize, product: &str) -> Result<Output, CliError> {
    let f = inputs::algebra(file)?;
    let product = match product {
        "right" => NaryProduct::Right,
        "left" => NaryProduct::Left,
        other => return Err(CliError::usage(format!("product must be right or left, got {other:?}"))),
    };
    let rep = check_n_algebra_identity(&f.algebra, ary, product)?;
    let text = match &rep {
        IdentityReport::Holds => format!("{ary}-algebra identity holds"),
        v => format!("{ary}-algebra identity: {v}"),
    };
    let mut j = identity_json(&rep);
    j["arity"] = json!(ary);
    Ok(Output { text, json: j, passed: rep.holds() })
}

fn invariance(file: &Path, ideal: &Path, order: usize, side_name: &str) -> Result<Output, CliError> {
    let f = inputs::algebra(file)?;
    let i = inputs::subspace(ideal, f.algebra.dim())?;
    let q = query(order, side_name)?;
    let ok = invariance_check(&f.algebra, &i, &q)?;
    let text = format!(
        "ideal of dim {} is {}invariant under {} Leibniz-derivations of order {order}",
        i.dim(),
        if ok { "" } else { "not " },
        q.side()
    );
    let j = json!({ "order": order, "side": q.side().as_str(), "ideal": subspace_json(&i), "invariant": ok });
    Ok(Output { text, json: j, passed: ok })
}

fn theorem(file: &Path, max_order: usize) -> Result<Output, CliError> {
    let f = inputs::algebra(file)?;
    let rep = theorem_check(&f.algebra, max_order)?;
    Ok(Output { text: rep.to_string(), json: rep.to_json(), passed: rep.passes() })
}

fn verify(dir: Option<&Path>) -> Result<Output, CliError> {
    let rep = match dir {
        Some(d) => verify_corpus(&corpus_from_dir(d)?),
        None => verify_bundled(),
    };
    Ok(Output { text: rep.to_string(), json: rep.to_json(), passed: rep.all_pass() })
}
