//! Bundled example algebras: generators, the JSON file format, and the
//! end-to-end verification suite.

pub mod format;
pub mod generators;
pub mod verify;

use std::path::Path;

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::linalg::Subspace;

pub use format::{load, parse, parse_unvalidated, save, to_canonical_string, AlgebraFile, AlgebraMeta};

/// A corpus file and the generator that must reproduce it.
pub struct CorpusEntry {
    pub file_name: &'static str,
    pub text: &'static str,
    pub generate: fn() -> AlgebraFile,
}

macro_rules! entry {
    ($file:literal, $gen:expr) => {
        CorpusEntry {
            file_name: $file,
            text: include_str!(concat!("../../../../corpus/", $file)),
            generate: $gen,
        }
    };
}

/// Every valid algebra shipped in `corpus/`, in file-name order.
pub fn entries() -> Vec<CorpusEntry> {
    vec![
        entry!("abelian3.json", expected_abelian3),
        entry!("cas_ex33_n4.json", expected_cas_ex33_n4),
        entry!("charnil6.json", expected_charnil6),
        entry!("charnil6_plus_cas33.json", expected_charnil6_plus_cas33),
        entry!("charnil7.json", expected_charnil7),
        entry!("charnil8.json", expected_charnil8),
        entry!("ex7.json", expected_ex7),
        entry!("ex8.json", expected_ex8),
        entry!("lie_gl2.json", expected_lie_gl2),
        entry!("lie_heisenberg.json", expected_lie_heisenberg),
        entry!("solvable_ex31_n6.json", expected_solvable_ex31_n6),
        entry!("solvable_ex31_n6_alpha.json", expected_solvable_ex31_n6_alpha),
    ]
}

/// Seeded table that violates the Leibniz identity (loaded unchecked).
pub const BAD_TABLE: &str = include_str!("../../../../corpus/bad_table.json");

/// The bundled corpus, parsed from the embedded texts.
pub fn bundled() -> Result<Vec<(String, AlgebraFile)>> {
    entries()
        .into_iter()
        .map(|e| Ok((e.file_name.to_string(), parse(e.text)?)))
        .collect()
}

/// All `*.json` files of `dir` except those marked `"unchecked": true`, sorted
/// by file name.
pub fn load_dir(dir: impl AsRef<Path>) -> Result<Vec<(String, AlgebraFile)>> {
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
        let text = std::fs::read_to_string(dir.join(&name))
            .map_err(|e| Error::Io(format!("{name}: {e}")))?;
        let file = parse(&text).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{name}: {m}")),
            Error::IdentityViolation(i, j, k) => {
                Error::Parse(format!("{name}: Leibniz identity fails at (e{i}, e{j}, e{k})"))
            }
            other => other,
        })?;
        if !file.unchecked {
            out.push((name, file));
        }
    }
    Ok(out)
}

fn annotated(alg: LeibnizAlgebra, radical: Subspace, nilradical: Subspace, is_lie: bool) -> AlgebraFile {
    AlgebraFile {
        algebra: alg,
        unchecked: false,
        meta: AlgebraMeta { solvable_radical: Some(radical), nilradical: Some(nilradical), is_lie: Some(is_lie) },
    }
}

fn nilpotent_file(alg: LeibnizAlgebra, is_lie: bool) -> AlgebraFile {
    let full = Subspace::full(alg.dim());
    annotated(alg, full.clone(), full, is_lie)
}

fn range(dim: usize, idx: std::ops::Range<usize>) -> Subspace {
    Subspace::coordinate(dim, &idx.collect::<Vec<_>>())
}

pub fn expected_abelian3() -> AlgebraFile {
    nilpotent_file(generators::abelian(3), true)
}

pub fn expected_charnil6() -> AlgebraFile {
    nilpotent_file(generators::charnil(6).expect("n = 6"), false)
}

pub fn expected_charnil7() -> AlgebraFile {
    nilpotent_file(generators::charnil(7).expect("n = 7"), false)
}

pub fn expected_charnil8() -> AlgebraFile {
    nilpotent_file(generators::charnil(8).expect("n = 8"), false)
}

pub fn expected_ex7() -> AlgebraFile {
    nilpotent_file(generators::ex7(), false)
}

pub fn expected_ex8() -> AlgebraFile {
    nilpotent_file(generators::ex8(), false)
}

pub fn expected_lie_heisenberg() -> AlgebraFile {
    nilpotent_file(generators::lie_heisenberg(), true)
}

/// `gl(2)`: radical and nilradical are both the centre `span{E11 + E22}`.
pub fn expected_lie_gl2() -> AlgebraFile {
    let one = Rational::one;
    let centre = Subspace::from_vectors(4, vec![vec![one(), Rational::zero(), Rational::zero(), one()]]);
    annotated(generators::lie_gl2(), centre.clone(), centre, true)
}

/// Solvable; the nilradical is `span{e1..e4}`.
pub fn expected_cas_ex33_n4() -> AlgebraFile {
    annotated(generators::cas_ex33(4).expect("n = 4"), Subspace::full(5), range(5, 0..4), false)
}

/// Solvable; the nilradical is `span{e1..e6}`.
pub fn expected_solvable_ex31_n6() -> AlgebraFile {
    annotated(generators::solvable_ex31(6, &[]).expect("n = 6"), Subspace::full(7), range(7, 0..6), false)
}

pub fn expected_solvable_ex31_n6_alpha() -> AlgebraFile {
    let alphas = [Rational::from_int(1), Rational::from_int(-1)];
    annotated(
        generators::solvable_ex31(6, &alphas).expect("valid parameters"),
        Subspace::full(7),
        range(7, 0..6),
        false,
    )
}

/// Solvable; the nilradical is `charnil(6) ⊕ span{e1..e4}` of the second summand.
pub fn expected_charnil6_plus_cas33() -> AlgebraFile {
    annotated(generators::charnil6_plus_cas33(), Subspace::full(11), range(11, 0..10), false)
}

/// Canonical text of the seeded invalid fixture.
pub fn expected_bad_table() -> AlgebraFile {
    let alg = crate::algebra::TableBuilder::new(1)
        .with(1, 1, &[(1, 1)])
        .build_unchecked("bad_table");
    AlgebraFile { algebra: alg, unchecked: true, meta: AlgebraMeta::default() }
}
