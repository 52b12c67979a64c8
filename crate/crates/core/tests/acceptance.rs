//! Acceptance suite: one check per criterion, each recomputing its expected
//! values with test-side oracles (dense structure constants, exhaustive tuple
//! enumeration, unit-map residuals) rather than the library's solvers.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the report.

use std::collections::HashSet;

use leibniz_core::algebra::{
    check_n_algebra_identity, engel_check, is_algebra_solvable, is_nilpotent, IdentityReport,
    LeibnizAlgebra, NaryProduct,
};
use leibniz_core::corpus::{self, AlgebraFile};
use leibniz_core::derivations::{
    all_nilpotent, classify, construct_moens_derivation, derivation_space, exists_invertible,
    invariance_check, theorem_check, DerivationQuery, Side,
};
use leibniz_core::exactmath::Rational;
use leibniz_core::linalg::{MapSpace, Matrix, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Vector = Vec<Rational>;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

/// Dense copy of the structure constants: `c[i][j]` is `[e_i, e_j]`.
struct Table {
    dim: usize,
    c: Vec<Vec<Vector>>,
}

impl Table {
    fn of(alg: &LeibnizAlgebra) -> Self {
        let dim = alg.dim();
        let c = (0..dim)
            .map(|i| (0..dim).map(|j| (0..dim).map(|k| alg.structure_constant(i, j, k)).collect()).collect())
            .collect();
        Table { dim, c }
    }

    fn zero(&self) -> Vector {
        vec![q(0); self.dim]
    }

    fn e(&self, i: usize) -> Vector {
        let mut v = self.zero();
        v[i] = q(1);
        v
    }

    fn mul(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = self.zero();
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let f = &x[i] * &y[j];
                for k in 0..self.dim {
                    out[k] += &f * &self.c[i][j][k];
                }
            }
        }
        out
    }

    fn fold(&self, xs: &[Vector], side: Side) -> Vector {
        match side {
            Side::Right => {
                let mut acc = xs[0].clone();
                for x in &xs[1..] {
                    acc = self.mul(&acc, x);
                }
                acc
            }
            Side::Left => {
                let mut acc = xs[xs.len() - 1].clone();
                for x in xs[..xs.len() - 1].iter().rev() {
                    acc = self.mul(x, &acc);
                }
                acc
            }
        }
    }

    fn right_op(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.e(j), x)).collect();
        Matrix::from_columns(self.dim, &cols)
    }
}

fn add(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn scale(c: &Rational, a: &[Rational]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

/// Every tuple in `0..base` of the given length, lexicographically.
fn tuples(base: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..base).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// `D(t) - sum_j t[x_j -> D x_j]` for `D = E_ab` (`e_b -> e_a`), on basis tuple `idx`.
fn unit_residual(t: &Table, idx: &[usize], side: Side, a: usize, b: usize) -> Vector {
    let xs: Vec<Vector> = idx.iter().map(|&i| t.e(i)).collect();
    let prod = t.fold(&xs, side);
    let mut r = scale(&prod[b], &t.e(a));
    for (j, &i) in idx.iter().enumerate() {
        if i == b {
            let mut ys = xs.clone();
            ys[j] = t.e(a);
            r = sub(&r, &t.fold(&ys, side));
        }
    }
    r
}

/// Derivation space from residuals of unit maps, one row per (tuple, component).
fn oracle_space(alg: &LeibnizAlgebra, order: usize, side: Side) -> MapSpace {
    let t = Table::of(alg);
    let n = t.dim;
    let mut seen = HashSet::new();
    let mut rows = Vec::new();
    for idx in tuples(n, order) {
        let res: Vec<Vector> = (0..n * n).map(|u| unit_residual(&t, &idx, side, u / n, u % n)).collect();
        for k in 0..n {
            let row: Vector = (0..n * n).map(|u| res[u][k].clone()).collect();
            if row.iter().all(Rational::is_zero) {
                continue;
            }
            if seen.insert(row.clone()) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return MapSpace::full(n);
    }
    MapSpace::from_flat_subspace(n, &Matrix::from_rows(rows).unwrap().nullspace())
}

/// Membership by residual: `D(t) = sum_j t[x_j -> D x_j]` on all tuples.
fn oracle_member(alg: &LeibnizAlgebra, d: &Matrix, order: usize, side: Side) -> bool {
    let t = Table::of(alg);
    tuples(t.dim, order).iter().all(|idx| {
        let xs: Vec<Vector> = idx.iter().map(|&i| t.e(i)).collect();
        let lhs = d.apply(&t.fold(&xs, side));
        let mut rhs = t.zero();
        for j in 0..order {
            let mut ys = xs.clone();
            ys[j] = d.apply(&xs[j]);
            rhs = add(&rhs, &t.fold(&ys, side));
        }
        lhs == rhs
    })
}

/// Span of all right products of basis vectors of the factors (no pruning).
fn oracle_product(t: &Table, factors: &[&Subspace]) -> Subspace {
    let bases: Vec<Vec<Vector>> = factors.iter().map(|f| f.basis_vectors().map(<[Rational]>::to_vec).collect()).collect();
    let mut partial: Vec<Vector> = bases[0].clone();
    for b in &bases[1..] {
        partial = partial.iter().flat_map(|p| b.iter().map(move |y| t.mul(p, y))).collect();
        // keep the span small between steps
        partial = Subspace::from_vectors(t.dim, partial).basis_vectors().map(<[Rational]>::to_vec).collect();
    }
    Subspace::from_vectors(t.dim, partial)
}

#[derive(Clone, Copy)]
enum Kind {
    Lower,
    Derived,
}

/// Term `k` (1-based) of a series started at `m` with an `n`-ary product.
fn oracle_term(t: &Table, m: &Subspace, kind: Kind, n: usize, k: usize) -> Subspace {
    let mut cur = m.clone();
    for _ in 1..k {
        let mut factors = vec![&cur];
        match kind {
            Kind::Lower => factors.extend(std::iter::repeat_n(m, n - 1)),
            Kind::Derived => factors.extend(std::iter::repeat_n(&cur, n - 1)),
        }
        let next = oracle_product(t, &factors);
        cur = next;
    }
    cur
}

fn oracle_nilpotent(t: &Table) -> bool {
    let full = Subspace::full(t.dim);
    oracle_term(t, &full, Kind::Lower, 2, t.dim + 2).is_zero()
}

fn corpus_files() -> Vec<(String, AlgebraFile)> {
    corpus::bundled().expect("bundled corpus loads")
}

fn get(name: &str) -> AlgebraFile {
    corpus_files().into_iter().find(|(n, _)| n == name).unwrap_or_else(|| panic!("{name}")).1
}

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn identity_suite() -> Outcome {
    let files = corpus_files();
    for (name, f) in &files {
        let t = Table::of(&f.algebra);
        for idx in tuples(t.dim, 3) {
            let (x, y, z) = (t.e(idx[0]), t.e(idx[1]), t.e(idx[2]));
            let lhs = t.mul(&x, &t.mul(&y, &z));
            let rhs = sub(&t.mul(&t.mul(&x, &y), &z), &t.mul(&t.mul(&x, &z), &y));
            ensure(lhs == rhs, format!("{name}: identity fails at {idx:?}"))?;
        }
    }
    Ok(format!("{} algebras, all basis triples", files.len()))
}

fn ternary_reproduction() -> Outcome {
    let alg = get("cas_ex33_n4.json").algebra;
    let t = Table::of(&alg);
    let x = t.e(alg.dim() - 1);
    let k = 3usize;
    let e1 = t.e(0);
    let with_tail = |head: Vector| {
        let mut args = vec![head];
        args.extend(std::iter::repeat_n(x.clone(), k - 1));
        t.fold(&args, Side::Right)
    };
    let lhs = with_tail(t.fold(&vec![e1.clone(); k], Side::Right));
    let mut rhs = t.zero();
    for i in 0..k {
        let mut args = vec![e1.clone(); k];
        args[i] = with_tail(e1.clone());
        rhs = add(&rhs, &t.fold(&args, Side::Right));
    }
    let ek = |c: i64| scale(&q(c), &t.e(k - 1));
    ensure(lhs == ek(9), format!("lhs {lhs:?}, expected 9e3"))?;
    ensure(rhs == ek(3), format!("rhs {rhs:?}, expected 3e3"))?;
    let rep = check_n_algebra_identity(&alg, 3, NaryProduct::Right).map_err(|e| e.to_string())?;
    ensure(!rep.holds(), "library reports the 3-ary identity as holding")?;
    Ok("lhs = 9e3, rhs = 3e3; violation reported".into())
}

fn left_derivation_counterexample() -> Outcome {
    let alg = get("solvable_ex31_n6.json").algebra;
    let t = Table::of(&alg);
    let full = Subspace::full(t.dim);
    ensure(oracle_term(&t, &full, Kind::Derived, 2, t.dim + 2).is_zero(), "oracle: not solvable")?;
    ensure(!oracle_nilpotent(&t), "oracle: nilpotent")?;
    ensure(is_algebra_solvable(&alg) && !is_nilpotent(&alg).0, "library series disagree")?;
    ensure(oracle_member(&alg, &Matrix::identity(t.dim), 3, Side::Left), "identity is not a left order-3 derivation")?;
    let mut dims = Vec::new();
    for order in 2..=4 {
        let lib = derivation_space(&alg, &DerivationQuery::new(order, Side::Right).unwrap());
        ensure(lib == oracle_space(&alg, order, Side::Right), format!("order {order}: space differs from oracle"))?;
        ensure(!exists_invertible(&lib).0, format!("order {order}: invertible element"))?;
        // nilpotent parts aside, every map kills the derived algebra's complement direction
        ensure(lib.basis().iter().all(|m| m.det().unwrap().is_zero()), format!("order {order}: invertible basis map"))?;
        dims.push(lib.dim());
    }
    Ok(format!("right derivation spaces of orders 2..4 have dims {dims:?}, none invertible"))
}

/// Matrix form of a map given row-wise as images: row `i` lists the
/// coordinates of `d(e_i)`; transposed into the column convention.
fn from_image_rows(rows: Vec<Vec<Rational>>) -> Matrix {
    Matrix::from_rows(rows).unwrap().transpose()
}

/// Basis of the displayed derivation form of charnil(6): parameters a3..a6, b6.
fn displayed_derivations() -> Vec<Matrix> {
    let params = ["a3", "a4", "a5", "a6", "b6"];
    params
        .iter()
        .map(|&p| {
            let v = |name: &str| if name == p { q(1) } else { q(0) };
            let z = || q(0);
            from_image_rows(vec![
                vec![z(), z(), v("a3"), v("a4"), v("a5"), v("a6")],
                vec![z(), z(), v("a3"), v("a4"), v("a5"), v("b6")],
                vec![z(), z(), z(), v("a3"), v("a4"), v("a5")],
                vec![z(), z(), z(), z(), v("a3"), v("a4")],
                vec![z(), z(), z(), z(), z(), v("a3")],
                vec![z(), z(), z(), z(), z(), z()],
            ])
        })
        .collect()
}

/// Basis of the displayed pre-derivation form of charnil(6):
/// parameters a1, a3, a4, a5, a6, b5, b6, c5, c6.
fn displayed_prederivations() -> Vec<Matrix> {
    let params = ["a1", "a3", "a4", "a5", "a6", "b5", "b6", "c5", "c6"];
    params
        .iter()
        .map(|&p| {
            let v = |name: &str| if name == p { q(1) } else { q(0) };
            let a1 = |k: i64| scale(&q(k), &[v("a1")])[0].clone();
            let z = || q(0);
            from_image_rows(vec![
                vec![a1(1), a1(1), v("a3"), v("a4"), v("a5"), v("a6")],
                vec![z(), a1(2), v("a3"), v("a4"), v("b5"), v("b6")],
                vec![z(), z(), a1(3), &a1(-1) + &v("a3"), v("c5"), v("c6")],
                vec![z(), z(), z(), a1(4), &a1(2) + &v("a3"), v("a4")],
                vec![z(), z(), z(), z(), a1(5), &a1(1) + &v("a3")],
                vec![z(), z(), z(), z(), z(), a1(6)],
            ])
        })
        .collect()
}

fn strictly_lower(m: &Matrix) -> bool {
    (0..m.rows()).all(|r| (r..m.cols()).all(|c| m.get(r, c).is_zero()))
}

fn characteristically_nilpotent_example() -> Outcome {
    let alg = get("charnil6.json").algebra;
    let oracle = oracle_space(&alg, 2, Side::Right);
    let displayed = MapSpace::span(6, &displayed_derivations()).unwrap();
    ensure(oracle == displayed, "oracle derivation space differs from the displayed form")?;
    let lib = derivation_space(&alg, &DerivationQuery::derivations());
    ensure(lib == oracle, "library derivation space differs from oracle")?;
    // strictly triangular basis: every combination is nilpotent and singular
    ensure(displayed.basis().iter().all(strictly_lower), "displayed form is not strictly triangular")?;
    ensure(all_nilpotent(&lib), "library: some derivation not nilpotent")?;
    ensure(!exists_invertible(&lib).0, "library: invertible derivation found")?;
    Ok(format!("Der has dim {} and the displayed triangular pattern", lib.dim()))
}

/// Maps sending each lower-central term into the next one are nilpotent.
fn raises_filtration(t: &Table, d: &Matrix) -> bool {
    let full = Subspace::full(t.dim);
    (1..=t.dim + 1).all(|k| {
        let lk = oracle_term(t, &full, Kind::Lower, 2, k);
        let next = oracle_term(t, &full, Kind::Lower, 2, k + 1);
        let raised = lk.basis_vectors().all(|v| next.contains(&d.apply(v)));
        raised
    })
}

fn strong_nilpotency_boundary() -> Outcome {
    let mut notes = Vec::new();
    // charnil6: the pre-derivations are exactly the displayed form, with diagonal a1, 2a1, .., 6a1
    let alg = get("charnil6.json").algebra;
    let pre = oracle_space(&alg, 3, Side::Right);
    ensure(pre == MapSpace::span(6, &displayed_prederivations()).unwrap(), "charnil6: pre-derivations differ from displayed form")?;
    let rep = classify(&alg, 1);
    ensure(rep.char_nilpotent && !rep.strongly_nilpotent, "charnil6: wrong classification")?;
    notes.push("charnil6 char-nilpotent, not strongly".to_string());

    for (file, strong) in [("charnil7.json", true), ("charnil8.json", true), ("ex7.json", false), ("ex8.json", false)] {
        let alg = get(file).algebra;
        let t = Table::of(&alg);
        ensure(oracle_nilpotent(&t), format!("{file}: not nilpotent"))?;
        let der = oracle_space(&alg, 2, Side::Right);
        ensure(der.basis().iter().all(|d| raises_filtration(&t, d)), format!("{file}: a derivation does not raise the filtration"))?;
        let pre = oracle_space(&alg, 3, Side::Right);
        if strong {
            ensure(pre.basis().iter().all(|d| raises_filtration(&t, d)), format!("{file}: a pre-derivation does not raise the filtration"))?;
        } else {
            // an invertible pre-derivation exists, certified by an explicit member
            let (_, w) = exists_invertible(&pre);
            let w = w.ok_or(format!("{file}: no invertible pre-derivation"))?;
            ensure(oracle_member(&alg, &w, 3, Side::Right) && !w.det().unwrap().is_zero(), format!("{file}: witness rejected"))?;
        }
        let rep = classify(&alg, 1);
        ensure(rep.char_nilpotent, format!("{file}: library says not characteristically nilpotent"))?;
        ensure(rep.strongly_nilpotent == strong, format!("{file}: library strong nilpotency {}", rep.strongly_nilpotent))?;
        ensure(rep.der_dim == der.dim() && rep.preder_dim == pre.dim(), format!("{file}: dimensions differ from oracle"))?;
        notes.push(format!("{file} strongly nilpotent: {strong}"));
    }
    Ok(notes.join("; "))
}

fn lemma_subspaces(t: &Table, f: &AlgebraFile) -> Vec<Subspace> {
    let full = Subspace::full(t.dim);
    let mut out = vec![full.clone(), oracle_product(t, &[&full, &full])];
    out.extend(f.meta.solvable_radical.clone());
    out.extend(f.meta.nilradical.clone());
    out
}

fn is_subalgebra(t: &Table, m: &Subspace) -> bool {
    oracle_product(t, &[m, m]).is_subset_of(m)
}

fn lemma_suite() -> Outcome {
    let mut cases = 0;
    for (name, f) in corpus_files() {
        let t = Table::of(&f.algebra);
        for m in lemma_subspaces(&t, &f) {
            for n in [3usize, 4] {
                let tt = (0..).find(|&s| 1usize << s >= n).unwrap();
                for k in 1..=3usize {
                    cases += 1;
                    let ctx = format!("{name}, dim M {}, n {n}, k {k}", m.dim());
                    let nd = oracle_term(&t, &m, Kind::Derived, n, k);
                    ensure(nd.is_subset_of(&oracle_term(&t, &m, Kind::Derived, 2, k)), format!("{ctx}: n-derived ⊄ derived"))?;
                    let nl = oracle_term(&t, &m, Kind::Lower, n, k);
                    ensure(nl.is_subset_of(&oracle_term(&t, &m, Kind::Lower, 2, k)), format!("{ctx}: n-lower ⊄ lower"))?;
                    let d = oracle_term(&t, &m, Kind::Derived, 2, tt * k + 1);
                    ensure(d.is_subset_of(&oracle_term(&t, &m, Kind::Derived, n, k + 1)), format!("{ctx}: derived ⊄ n-derived"))?;
                    if is_subalgebra(&t, &m) {
                        let lhs = oracle_term(&t, &m, Kind::Lower, 2, n * k - k + 1);
                        let rhs = oracle_term(&t, &m, Kind::Lower, n, k + 1);
                        ensure(lhs == rhs, format!("{ctx}: lower term {} ≠ n-lower term {}", n * k - k + 1, k + 1))?;
                    }
                }
            }
        }
    }
    let lib = corpus::verify::verify_bundled();
    ensure(lib.get("series_lemmas").map(|c| c.details.iter().all(|d| !d.starts_with("FAIL"))) == Some(true), "library lemma check fails")?;
    Ok(format!("{cases} (algebra, M, n, k) cases"))
}

fn factorial(m: usize) -> Rational {
    (1..=m as i64).fold(q(1), |acc, x| acc * q(x))
}

fn power_rule() -> Outcome {
    let mut maps = 0;
    for (name, f) in corpus_files() {
        let alg = &f.algebra;
        let t = Table::of(alg);
        for order in [2usize, 3] {
            let space = derivation_space(alg, &DerivationQuery::right(order).unwrap());
            for d in space.basis() {
                maps += 1;
                ensure(oracle_member(alg, d, order, Side::Right), format!("{name}: basis map not a derivation"))?;
                for k in 1..=3usize {
                    let dk = d.pow(k as u32);
                    for idx in tuples(t.dim, order) {
                        let xs: Vec<Vector> = idx.iter().map(|&i| t.e(i)).collect();
                        let lhs = dk.apply(&t.fold(&xs, Side::Right));
                        let mut rhs = t.zero();
                        for comp in tuples(k + 1, order).into_iter().filter(|c| c.iter().sum::<usize>() == k) {
                            let coeff = comp.iter().fold(factorial(k), |acc, &i| acc / factorial(i));
                            let args: Vec<Vector> = comp.iter().zip(&xs).map(|(&p, x)| d.pow(p as u32).apply(x)).collect();
                            rhs = add(&rhs, &scale(&coeff, &t.fold(&args, Side::Right)));
                        }
                        ensure(lhs == rhs, format!("{name}: order {order}, k {k}, tuple {idx:?}"))?;
                    }
                }
            }
        }
    }
    Ok(format!("{maps} basis maps, k = 1..3"))
}

fn construction() -> Outcome {
    let mut notes = Vec::new();
    for (name, f) in corpus_files() {
        let t = Table::of(&f.algebra);
        if !oracle_nilpotent(&t) {
            continue;
        }
        let full = Subspace::full(t.dim);
        let s = (1..).find(|&k| oracle_term(&t, &full, Kind::Lower, 2, k).is_zero()).unwrap();
        let m = construct_moens_derivation(&f.algebra).map_err(|e| format!("{name}: {e}"))?;
        ensure(m.nilindex == s && m.order == s / 2 + 1, format!("{name}: nilindex/order"))?;
        ensure(oracle_member(&f.algebra, &m.matrix, m.order, Side::Right), format!("{name}: not a derivation of order {}", m.order))?;
        ensure(!m.matrix.det().unwrap().is_zero(), format!("{name}: singular"))?;
        notes.push(format!("{name} order {}", m.order));
    }
    let m = construct_moens_derivation(&get("charnil6.json").algebra).unwrap();
    ensure(m.order == 4 && m.matrix == Matrix::diagonal(&[1, 1, 1, 1, 4, 4].map(q)), "charnil6: expected diag(1,1,1,1,4,4)")?;
    Ok(notes.join(", "))
}

fn main_theorem() -> Outcome {
    let mut notes = Vec::new();
    for (name, f) in corpus_files() {
        let alg = &f.algebra;
        let rep = theorem_check(alg, 4).map_err(|e| e.to_string())?;
        ensure(rep.passes(), format!("{name}: {:?}", rep.violations))?;
        let t = Table::of(alg);
        if oracle_nilpotent(&t) {
            let m = rep.construction.as_ref().ok_or(format!("{name}: no construction"))?;
            ensure(oracle_member(alg, &m.matrix, m.order, Side::Right) && !m.matrix.det().unwrap().is_zero(), format!("{name}: certificate rejected"))?;
        } else {
            ensure(rep.orders.iter().map(|o| o.order).collect::<Vec<_>>() == vec![2, 3, 4], format!("{name}: orders scanned"))?;
            ensure(rep.orders.iter().all(|o| !o.invertible), format!("{name}: invertible derivation"))?;
            // the scanned spaces agree with the oracle where it is affordable
            let top = if t.dim > 8 { 3 } else { 4 };
            for order in 2..=top {
                let lib = derivation_space(alg, &DerivationQuery::right(order).unwrap());
                ensure(lib == oracle_space(alg, order, Side::Right), format!("{name}: order {order} space differs from oracle"))?;
            }
            notes.push(name);
        }
    }
    Ok(format!("non-nilpotent: {}", notes.join(", ")))
}

fn engel_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, f) in corpus_files() {
        let t = Table::of(&f.algebra);
        ensure(engel_check(&f.algebra).verdict() == oracle_nilpotent(&t), format!("{name}: Engel disagrees"))?;
        for _ in 0..100 {
            let x: Vector = (0..t.dim).map(|_| q(rng.gen_range(-4..=4))).collect();
            let y: Vector = (0..t.dim).map(|_| q(rng.gen_range(-4..=4))).collect();
            let (rx, ry) = (t.right_op(&x), t.right_op(&y));
            let lhs = rx.mul(&ry).sub(&ry.mul(&rx));
            ensure(lhs == t.right_op(&t.mul(&y, &x)), format!("{name}: operator identity fails"))?;
        }
    }
    Ok("Engel check matches nilpotency; operator identity on 100 pairs each".into())
}

fn radical_invariance() -> Outcome {
    let mut cases = 0;
    for (name, f) in corpus_files() {
        for ideal in [&f.meta.solvable_radical, &f.meta.nilradical].into_iter().flatten() {
            for order in [2usize, 3] {
                cases += 1;
                let space = oracle_space(&f.algebra, order, Side::Right);
                let ok = space.basis().iter().all(|d| ideal.basis_vectors().all(|v| ideal.contains(&d.apply(v))));
                ensure(ok, format!("{name}: ideal of dim {} not invariant at order {order}", ideal.dim()))?;
                let lib = invariance_check(&f.algebra, ideal, &DerivationQuery::right(order).unwrap()).map_err(|e| format!("{name}: {e}"))?;
                ensure(lib, format!("{name}: library says not invariant"))?;
            }
        }
    }
    Ok(format!("{cases} (algebra, ideal, order) cases"))
}

/// Random non-abelian table of the given dimension satisfying the identity, found by
/// rejection sampling with the dense test-side bracket, then a change of basis.
fn random_valid_algebra(rng: &mut ChaCha8Rng, dim: usize) -> LeibnizAlgebra {
    loop {
        let mut b = leibniz_core::algebra::TableBuilder::new(dim);
        for _ in 0..rng.gen_range(0..=dim + 2) {
            let (i, j, k) = (rng.gen_range(0..dim), rng.gen_range(0..dim), rng.gen_range(0..dim));
            b.add(i, j, k, q(rng.gen_range(-3..=3))).unwrap();
        }
        let alg = b.build_unchecked("random");
        let t = Table::of(&alg);
        let valid = tuples(dim, 3).iter().all(|idx| {
            let (x, y, z) = (t.e(idx[0]), t.e(idx[1]), t.e(idx[2]));
            t.mul(&x, &t.mul(&y, &z)) == sub(&t.mul(&t.mul(&x, &y), &z), &t.mul(&t.mul(&x, &z), &y))
        });
        if !valid || alg.is_abelian() {
            continue;
        }
        let data: Vec<Rational> = (0..dim * dim).map(|_| q(rng.gen_range(-2..=2))).collect();
        let m = Matrix::new(dim, dim, data).unwrap();
        if m.det().unwrap().is_zero() {
            continue;
        }
        return alg.change_basis(&m).unwrap();
    }
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(31337);
    for i in 0..50 {
        let alg = random_valid_algebra(&mut rng, 2 + i % 3);
        let lib = derivation_space(&alg, &DerivationQuery::derivations());
        ensure(lib == oracle_space(&alg, 2, Side::Right), format!("random algebra {i} differs:\n{alg}"))?;
    }
    Ok("50 random non-abelian algebras of dims 2..4".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("identity suite over the corpus", identity_suite),
        ("3-ary identity counterexample (9e3 vs 3e3)", ternary_reproduction),
        ("left order-3 derivation counterexample", left_derivation_counterexample),
        ("characteristically nilpotent example", characteristically_nilpotent_example),
        ("strong nilpotency boundary", strong_nilpotency_boundary),
        ("n-ary series lemmas", lemma_suite),
        ("power rule", power_rule),
        ("invertible derivation construction", construction),
        ("nilpotent iff invertible Leibniz-derivation", main_theorem),
        ("Engel equivalence and operator identity", engel_equivalence),
        ("radical invariance", radical_invariance),
        ("oracle equivalence on random algebras", oracle_equivalence),
    ];
    let mut failures = Vec::new();
    for (i, (title, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS: {title} ({detail})", i + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL: {title}: {why}", i + 1);
                failures.push(i + 1);
            }
        }
    }
    assert!(failures.is_empty(), "failing criteria: {failures:?}");
}

#[test]
fn identity_report_for_unchecked_fixture() {
    let f = corpus::parse(corpus::BAD_TABLE).unwrap();
    assert!(matches!(
        leibniz_core::algebra::check_leibniz_identity(&f.algebra),
        IdentityReport::Violated { .. }
    ));
}
