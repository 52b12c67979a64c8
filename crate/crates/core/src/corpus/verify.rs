//! End-to-end verification suite over the bundled corpus.
//!
//! Each check has a fixed id; the suite is deterministic (random inputs come
//! from a seeded generator) and reports every check even when earlier ones fail.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{
    check_leibniz_identity, check_n_algebra_identity, engel_check, fmt_element, is_algebra_solvable,
    is_nilpotent, is_solvable, is_n_solvable_subspace, is_subalgebra, n_algebra_identity_sides,
    product_subspace, series, Element, IdentityReport, LeibnizAlgebra, NaryProduct, SeriesKind,
};
use crate::derivations::{
    all_nilpotent, classify, construct_moens_derivation, derivation_space, exists_invertible,
    invariance_check, is_derivation, oracle, power_rule_check, theorem_check, DerivationQuery, Side,
};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::linalg::{MapSpace, Matrix, Subspace};

use super::format::{parse, AlgebraFile};
use super::{entries, to_canonical_string};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Check {
    pub id: &'static str,
    pub description: &'static str,
    pub status: Status,
    pub details: Vec<String>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "[{}] {}: {}", c.status.as_str(), c.id, c.description)?;
            for d in &c.details {
                writeln!(f, "    {d}")?;
            }
        }
        let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        write!(f, "{passed}/{} checks passed", self.checks.len())
    }
}

/// Fixed check list: `(id, description)`.
pub const CHECKS: [(&str, &str); 13] = [
    ("leibniz_identity", "every corpus algebra satisfies the Leibniz identity on all basis triples"),
    ("ternary_identity_failure", "right 3-ary product of cas_ex33 breaks the n-algebra identity: 9e3 vs 3e3"),
    ("left_derivation_counterexample", "solvable_ex31: solvable, not nilpotent, identity is a left order-3 derivation, no invertible right one for orders 2..4"),
    ("characteristically_nilpotent", "charnil6: derivations have the triangular pattern, all nilpotent, none invertible"),
    ("strong_nilpotency_boundary", "charnil6/ex7/ex8 characteristically but not strongly nilpotent; charnil7/charnil8 strongly nilpotent"),
    ("series_lemmas", "n-ary versus binary series inclusions and equalities for n in {3,4}, k in {1,2,3}"),
    ("power_rule", "d^k of an n-ary product expands multinomially for Der and LDer3 bases, k <= 3"),
    ("invertible_construction", "nilpotent algebras carry the invertible derivation of order floor(s/2)+1; charnil6 gives diag(1,1,1,1,4,4)"),
    ("nilpotency_criterion", "nilpotent iff an invertible right Leibniz-derivation exists (orders 2..4 scanned otherwise)"),
    ("engel", "Engel check agrees with nilpotency; R_x R_y - R_y R_x = R_[y,x] on random pairs"),
    ("radical_invariance", "annotated radical and nilradical are invariant under right derivations of orders 2 and 3"),
    ("oracle_equivalence", "derivation spaces of 50 random algebras (dim <= 3) equal an independent dense solve"),
    ("corpus_matches_generators", "every corpus file equals the canonical output of its generator"),
];

/// A corpus as loaded for verification: files that failed to load keep their error.
pub type LoadedCorpus = Vec<(String, std::result::Result<AlgebraFile, String>)>;

fn describe_error(e: &Error) -> String {
    match e {
        Error::IdentityViolation(i, j, k) => format!("Leibniz identity fails at (e{i}, e{j}, e{k})"),
        other => other.to_string(),
    }
}

/// Parses the embedded corpus texts.
pub fn bundled_corpus() -> LoadedCorpus {
    entries()
        .into_iter()
        .map(|e| (e.file_name.to_string(), parse(e.text).map_err(|err| describe_error(&err))))
        .collect()
}

/// Reads every `*.json` in `dir`, keeping load failures; unchecked fixtures are skipped.
pub fn corpus_from_dir(dir: impl AsRef<Path>) -> Result<LoadedCorpus> {
    let dir = dir.as_ref();
    let mut names: Vec<String> = std::fs::read_dir(dir)
        .map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok())
        .filter(|e| e.path().is_file())
        .filter_map(|e| e.file_name().into_string().ok())
        .filter(|n| n.ends_with(".json"))
        .collect();
    names.sort();
    let mut out = Vec::new();
    for name in names {
        let loaded = std::fs::read_to_string(dir.join(&name))
            .map_err(|e| e.to_string())
            .and_then(|text| parse(&text).map_err(|e| describe_error(&e)));
        match loaded {
            Ok(f) if f.unchecked => {}
            other => out.push((name, other)),
        }
    }
    Ok(out)
}

pub fn verify_bundled() -> VerifyReport {
    verify_corpus(&bundled_corpus())
}

struct Ctx<'a> {
    files: BTreeMap<&'a str, &'a AlgebraFile>,
}

impl Ctx<'_> {
    fn get(&self, file: &str) -> std::result::Result<&AlgebraFile, String> {
        self.files.get(file).copied().ok_or_else(|| format!("{file} missing or failed to load"))
    }

    fn algebras(&self) -> impl Iterator<Item = (&str, &AlgebraFile)> {
        self.files.iter().map(|(k, v)| (*k, *v))
    }
}

// Accumulates failures for one check.
#[derive(Default)]
struct Outcome {
    details: Vec<String>,
    failed: bool,
}

impl Outcome {
    fn note(&mut self, msg: impl Into<String>) {
        self.details.push(msg.into());
    }

    fn fail(&mut self, msg: impl Into<String>) {
        self.failed = true;
        self.details.push(format!("FAIL: {}", msg.into()));
    }

    fn expect(&mut self, ok: bool, msg: impl Into<String>) {
        if !ok {
            self.fail(msg);
        }
    }

    fn result<T>(&mut self, r: Result<T>, what: &str) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.fail(format!("{what}: {e}"));
                None
            }
        }
    }
}

pub fn verify_corpus(corpus: &LoadedCorpus) -> VerifyReport {
    let ctx = Ctx {
        files: corpus
            .iter()
            .filter_map(|(n, f)| f.as_ref().ok().map(|f| (n.as_str(), f)))
            .collect(),
    };
    let runners: [fn(&Ctx, &LoadedCorpus, &mut Outcome); 13] = [
        check_identity,
        check_ternary_failure,
        check_left_counterexample,
        check_char_nilpotent,
        check_strong_boundary,
        check_series_lemmas,
        check_power_rule,
        check_construction,
        check_criterion,
        check_engel,
        check_invariance,
        check_oracle,
        check_generators,
    ];
    let checks = CHECKS
        .iter()
        .zip(runners)
        .map(|(&(id, description), run)| {
            let mut out = Outcome::default();
            run(&ctx, corpus, &mut out);
            Check {
                id,
                description,
                status: if out.failed { Status::Fail } else { Status::Pass },
                details: out.details,
            }
        })
        .collect();
    VerifyReport { checks }
}

fn check_identity(_: &Ctx, corpus: &LoadedCorpus, out: &mut Outcome) {
    if corpus.is_empty() {
        out.fail("corpus is empty");
    }
    for (name, f) in corpus {
        match f {
            Err(e) => out.fail(format!("{name}: {e}")),
            Ok(f) => match check_leibniz_identity(&f.algebra) {
                IdentityReport::Holds => {}
                v => out.fail(format!("{name}: {v}")),
            },
        }
    }
    out.note(format!("{} files checked", corpus.len()));
}

fn check_ternary_failure(ctx: &Ctx, _: &LoadedCorpus, out: &mut Outcome) {
    let alg = match ctx.get("cas_ex33_n4.json") {
        Ok(f) => &f.algebra,
        Err(e) => return out.fail(e),
    };
    let n = alg.dim() - 1;
    let (e1, x) = (alg.basis(0), alg.basis(n));
    let k = 3;
    let xs = vec![e1; k];
    let ys = vec![x; k - 1];
    let Some((lhs, rhs)) = out.result(n_algebra_identity_sides(alg, NaryProduct::Right, &xs, &ys), "sides")
    else {
        return;
    };
    let ek = |c: i64| -> Element {
        let mut v = alg.zero();
        v[k - 1] = Rational::from_int(c);
        v
    };
    // (-k)^(k-1) e_k and (-1)^(k-1) k e_k
    let want_lhs = ek((-(k as i64)).pow(k as u32 - 1));
    let want_rhs = ek((-1i64).pow(k as u32 - 1) * k as i64);
    out.note(format!("lhs = {}, rhs = {}", fmt_element(&lhs), fmt_element(&rhs)));
    out.expect(lhs == want_lhs, format!("lhs should be {}", fmt_element(&want_lhs)));
    out.expect(rhs == want_rhs, format!("rhs should be {}", fmt_element(&want_rhs)));
    match out.result(check_n_algebra_identity(alg, 3, NaryProduct::Right), "identity check") {
        Some(IdentityReport::Holds) => out.fail("3-ary identity unexpectedly holds"),
        Some(v) => out.note(format!("3-ary check: {v}")),
        None => {}
    }
}

fn check_left_counterexample(ctx: &Ctx, _: &LoadedCorpus, out: &mut Outcome) {
    let alg = match ctx.get("solvable_ex31_n6.json") {
        Ok(f) => &f.algebra,
        Err(e) => return out.fail(e),
    };
    out.expect(is_algebra_solvable(alg), "not solvable");
    out.expect(!is_nilpotent(alg).0, "unexpectedly nilpotent");
    let left3 = DerivationQuery::new(3, Side::Left).expect("order 3");
    if let Some(ok) = out.result(is_derivation(alg, &Matrix::identity(alg.dim()), &left3), "membership") {
        out.expect(ok, "identity is not a left order-3 derivation");
    }
    for order in 2..=4 {
        let q = DerivationQuery::new(order, Side::Right).expect("order within envelope");
        let space = derivation_space(alg, &q);
        let (inv, _) = exists_invertible(&space);
        out.note(format!("right order {order}: dim {}, invertible element: {inv}", space.dim()));
        out.expect(!inv, format!("invertible right derivation at order {order}"));
    }
}

/// Derivations of `charnil(n)`, parameters `a3..an, bn`, as maps in the
/// column convention: `d(e1) = sum_i a_i e_i`, `d(e2)` equal except `bn`,
/// `d(e_i) = a3 e(i+1) + a4 e(i+2) + ...` for `i ≥ 3`.
pub fn charnil_derivation_pattern(n: usize) -> Vec<Matrix> {
    let mut maps = Vec::new();
    let unit = |pairs: &[(usize, usize)]| {
        let mut m = Matrix::zeros(n, n);
        for &(row, col) in pairs {
            m.set(row, col, Rational::one());
        }
        m
    };
    // parameter a_p (3 ≤ p ≤ n): coefficient of e_p in d(e1), also in d(e2) for p < n,
    // and of e(i+p-2) in d(e_i) for i ≥ 3
    for p in 3..=n {
        let mut pairs = vec![(p - 1, 0)];
        if p < n {
            pairs.push((p - 1, 1));
        }
        for i in 3..=n {
            if i + p - 2 <= n {
                pairs.push((i + p - 3, i - 1));
            }
        }
        maps.push(unit(&pairs));
    }
    maps.push(unit(&[(n - 1, 1)]));
    maps
}

fn check_char_nilpotent(ctx: &Ctx, _: &LoadedCorpus, out: &mut Outcome) {
    let alg = match ctx.get("charnil6.json") {
        Ok(f) => &f.algebra,
        Err(e) => return out.fail(e),
    };
    let der = derivation_space(alg, &DerivationQuery::derivations());
    out.note(format!("Der dimension {}", der.dim()));
    let Some(pattern) = out.result(MapSpace::span(6, &charnil_derivation_pattern(6)), "pattern") else {
        return;
    };
    out.expect(der == pattern, "derivation space differs from the triangular pattern");
    out.expect(all_nilpotent(&der), "some derivation is not nilpotent");
    out.expect(!exists_invertible(&der).0, "an invertible derivation exists");
}

fn check_strong_boundary(ctx: &Ctx, _: &LoadedCorpus, out: &mut Outcome) {
    let expected = [
        ("charnil6.json", true, false),
        ("charnil7.json", true, true),
        ("charnil8.json", true, true),
        ("ex7.json", true, false),
        ("ex8.json", true, false),
    ];
    for (file, want_char, want_strong) in expected {
        let alg = match ctx.get(file) {
            Ok(f) => &f.algebra,
            Err(e) => {
                out.fail(e);
                continue;
            }
        };
        let rep = classify(alg, 1);
        out.note(format!(
            "{file}: Der dim {}, LDer3 dim {}, characteristically nilpotent {}, strongly nilpotent {}",
            rep.der_dim, rep.preder_dim, rep.char_nilpotent, rep.strongly_nilpotent
        ));
        out.expect(rep.char_nilpotent == want_char, format!("{file}: characteristic nilpotency"));
        out.expect(rep.strongly_nilpotent == want_strong, format!("{file}: strong nilpotency"));
        out.expect(!rep.strongly_nilpotent || rep.char_nilpotent, format!("{file}: strong without characteristic"));
    }
}

/// Subspaces the series lemmas are checked on: `L`, `L^2` and annotated ideals.
fn lemma_subspaces(f: &AlgebraFile) -> Result<Vec<(String, Subspace)>> {
    let n = f.algebra.dim();
    let full = Subspace::full(n);
    let mut out = vec![
        ("L".to_string(), full.clone()),
        ("L^2".to_string(), product_subspace(&f.algebra, &full, &full)?),
    ];
    if let Some(r) = &f.meta.solvable_radical {
        out.push(("solvable radical".into(), r.clone()));
    }
    if let Some(r) = &f.meta.nilradical {
        out.push(("nilradical".into(), r.clone()));
    }
    Ok(out)
}

fn term(alg: &LeibnizAlgebra, m: &Subspace, kind: SeriesKind, arity: usize, k: usize) -> Result<Subspace> {
    series(alg, m, kind, arity)?
        .term(k)
        .ok_or_else(|| Error::InvalidArgument(format!("series of kind {} did not settle", kind.as_str())))
}

/// Checks the series relations for one subspace, returning failure messages.
pub fn series_lemma_failures(alg: &LeibnizAlgebra, m: &Subspace, n: usize, k: usize) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    let t = (0..).find(|&t| 1usize << t >= n).expect("finite");
    // n-ary derived and lower terms sit inside the binary ones
    let nd = term(alg, m, SeriesKind::NDerived, n, k)?;
    if !nd.is_subset_of(&term(alg, m, SeriesKind::Derived, 2, k)?) {
        fails.push(format!("n-derived term {k} not inside derived term {k}"));
    }
    let nl = term(alg, m, SeriesKind::NLower, n, k)?;
    if !nl.is_subset_of(&term(alg, m, SeriesKind::LowerCentral, 2, k)?) {
        fails.push(format!("n-lower term {k} not inside lower central term {k}"));
    }
    // M^[tk+1] ⊆ n-derived term k+1
    let d = term(alg, m, SeriesKind::Derived, 2, t * k + 1)?;
    if !d.is_subset_of(&term(alg, m, SeriesKind::NDerived, n, k + 1)?) {
        fails.push(format!("derived term {} not inside n-derived term {}", t * k + 1, k + 1));
    }
    // for subalgebras: M^(nk-k+1) = n-lower term k+1
    if is_subalgebra(alg, m)? {
        let lhs = term(alg, m, SeriesKind::LowerCentral, 2, n * k - k + 1)?;
        let rhs = term(alg, m, SeriesKind::NLower, n, k + 1)?;
        if lhs != rhs {
            fails.push(format!("lower central term {} differs from n-lower term {}", n * k - k + 1, k + 1));
        }
    }
    if is_solvable(alg, m)? != is_n_solvable_subspace(alg, m, n)? {
        fails.push("solvability and n-solvability disagree".into());
    }
    Ok(fails)
}

fn check_series_lemmas(ctx: &Ctx, _: &LoadedCorpus, out: &mut Outcome) {
    let mut cases = 0;
    for (name, f) in ctx.algebras() {
        let Some(subspaces) = out.result(lemma_subspaces(f), name) else { continue };
        for (label, m) in subspaces {
            for n in [3, 4] {
                for k in 1..=3 {
                    cases += 1;
                    match series_lemma_failures(&f.algebra, &m, n, k) {
                        Ok(fails) => {
                            for msg in fails {
                                out.fail(format!("{name}, M = {label}, n = {n}, k = {k}: {msg}"));
                            }
                        }
                        Err(e) => out.fail(format!("{name}, M = {label}: {e}")),
                    }
                }
            }
        }
    }
    out.note(format!("{cases} (algebra, M, n, k) cases"));
}

fn check_power_rule(ctx: &Ctx, _: &LoadedCorpus, out: &mut Outcome) {
    let mut maps = 0;
    for (name, f) in ctx.algebras() {
        let alg = &f.algebra;
        for order in [2, 3] {
            let space = derivation_space(alg, &DerivationQuery::right(order).expect("order"));
            for (b, d) in space.basis().iter().enumerate() {
                maps += 1;
                for k in 1..=3 {
                    match power_rule_check(alg, d, order, k) {
                        Ok(true) => {}
                        Ok(false) => out.fail(format!("{name}: order {order}, basis map {b}, k = {k}")),
                        Err(e) => out.fail(format!("{name}: order {order}, basis map {b}: {e}")),
                    }
                }
            }
        }
    }
    out.note(format!("{maps} basis maps checked for k = 1, 2, 3"));
}

fn check_construction(ctx: &Ctx, _: &LoadedCorpus, out: &mut Outcome) {
    for (name, f) in ctx.algebras() {
        let alg = &f.algebra;
        if !is_nilpotent(alg).0 {
            continue;
        }
        let Some(m) = out.result(construct_moens_derivation(alg), name) else { continue };
        let q = crate::derivations::DerivationQuery::with_limit(m.order, Side::Right, usize::MAX)
            .expect("order at least 2");
        let member = is_derivation(alg, &m.matrix, &q).unwrap_or(false);
        let invertible = m.matrix.det().map(|d| !d.is_zero()).unwrap_or(false);
        out.note(format!("{name}: nilindex {}, order {}", m.nilindex, m.order));
        out.expect(member, format!("{name}: constructed map is not a derivation of order {}", m.order));
        out.expect(invertible, format!("{name}: constructed map is singular"));
        if name == "charnil6.json" {
            let want = Matrix::diagonal(&[1, 1, 1, 1, 4, 4].map(Rational::from_int));
            out.expect(m.order == 4 && m.matrix == want, "charnil6: expected diag(1,1,1,1,4,4) at order 4");
        }
    }
    if ctx.get("charnil6.json").is_err() {
        out.fail("charnil6.json missing");
    }
}

fn check_criterion(ctx: &Ctx, _: &LoadedCorpus, out: &mut Outcome) {
    for (name, f) in ctx.algebras() {
        match theorem_check(&f.algebra, 4) {
            Ok(rep) => {
                out.note(format!("{name}: {}", rep.to_string().lines().next().unwrap_or("")));
                out.expect(rep.passes(), format!("{name}: {}", rep.violations.join("; ")));
            }
            Err(e) => out.fail(format!("{name}: {e}")),
        }
    }
}

fn random_element<R: Rng>(rng: &mut R, dim: usize) -> Element {
    (0..dim).map(|_| Rational::from_int(rng.gen_range(-3..=3))).collect()
}

fn check_engel(ctx: &Ctx, _: &LoadedCorpus, out: &mut Outcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (name, f) in ctx.algebras() {
        let alg = &f.algebra;
        let engel = engel_check(alg);
        let nil = is_nilpotent(alg).0;
        out.expect(engel.verdict() == nil, format!("{name}: Engel {} vs nilpotent {nil}", engel.verdict()));
        for _ in 0..100 {
            let x = random_element(&mut rng, alg.dim());
            let y = random_element(&mut rng, alg.dim());
            let rx = alg.right_mult(&x).expect("dims");
            let ry = alg.right_mult(&y).expect("dims");
            let lhs = rx.mul(&ry).sub(&ry.mul(&rx));
            let rhs = alg.right_mult(&alg.bracket(&y, &x).expect("dims")).expect("dims");
            if lhs != rhs {
                out.fail(format!("{name}: operator identity fails for x = {}, y = {}", fmt_element(&x), fmt_element(&y)));
                break;
            }
        }
    }
}

fn check_invariance(ctx: &Ctx, _: &LoadedCorpus, out: &mut Outcome) {
    let mut cases = 0;
    for (name, f) in ctx.algebras() {
        let ideals = [("solvable radical", &f.meta.solvable_radical), ("nilradical", &f.meta.nilradical)];
        for (label, ideal) in ideals {
            let Some(ideal) = ideal else { continue };
            for order in [2, 3] {
                cases += 1;
                let q = DerivationQuery::right(order).expect("order");
                match invariance_check(&f.algebra, ideal, &q) {
                    Ok(true) => {}
                    Ok(false) => out.fail(format!("{name}: {label} not invariant at order {order}")),
                    Err(e) => out.fail(format!("{name}: {label}: {e}")),
                }
            }
        }
    }
    out.note(format!("{cases} (algebra, ideal, order) cases"));
}

fn check_oracle(_: &Ctx, _: &LoadedCorpus, out: &mut Outcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let count = 50;
    for i in 0..count {
        let dim = 1 + i % 3;
        let alg = oracle::random_algebra(&mut rng, dim);
        let fast = derivation_space(&alg, &DerivationQuery::derivations());
        let naive = oracle::naive_derivation_space(&alg);
        out.expect(fast == naive, format!("random algebra {i} (dim {dim}):\n{alg}"));
    }
    out.note(format!("{count} random algebras"));
}

fn check_generators(ctx: &Ctx, corpus: &LoadedCorpus, out: &mut Outcome) {
    for e in entries() {
        let want = (e.generate)();
        match ctx.get(e.file_name) {
            Ok(f) if *f == want => {}
            Ok(f) => out.fail(format!(
                "{}: differs from generator output\n--- file ---\n{}--- generator ---\n{}",
                e.file_name,
                to_canonical_string(f),
                to_canonical_string(&want)
            )),
            Err(msg) => out.fail(msg),
        }
    }
    let known: Vec<&str> = entries().iter().map(|e| e.file_name).collect();
    for (name, _) in corpus {
        if !known.contains(&name.as_str()) {
            out.note(format!("{name}: no generator registered"));
        }
    }
}
