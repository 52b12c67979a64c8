//! Property tests for the exact arithmetic, linear algebra and the
//! derivation machinery.

use leibniz_core::algebra::{check_leibniz_identity, series, LeibnizAlgebra, SeriesKind};
use leibniz_core::corpus::{self, AlgebraFile};
use leibniz_core::derivations::oracle::{naive_derivation_space, random_algebra};
use leibniz_core::derivations::{all_nilpotent, derivation_space, exists_invertible, is_derivation, DerivationQuery, Side};
use leibniz_core::exactmath::{MultiPoly, Rational, UniPoly};
use leibniz_core::linalg::{generic_combination, symbolic_det, MapSpace, Matrix, Subspace};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn small_int() -> impl Strategy<Value = Rational> {
    (-3i64..=3).prop_map(Rational::from_int)
}

fn square(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(small_int(), n * n).prop_map(move |d| Matrix::new(n, n, d).unwrap())
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(small_int(), rows * cols).prop_map(move |d| Matrix::new(rows, cols, d).unwrap())
}

fn vectors(n: usize, max: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec(small_int(), n), 0..=max)
}

/// Polynomial in two variables with small integer coefficients.
fn poly2() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u32..3, 0u32..3), -4i64..=4), 0..6).prop_map(|terms| {
        MultiPoly::from_terms(2, terms.into_iter().map(|((a, b), c)| (vec![a, b], Rational::from_int(c))))
    })
}

fn seeded_algebra(seed: u64, dim: usize) -> LeibnizAlgebra {
    random_algebra(&mut ChaCha8Rng::seed_from_u64(seed), dim)
}

fn lie_entries() -> Vec<AlgebraFile> {
    corpus::bundled()
        .unwrap()
        .into_iter()
        .map(|(_, f)| f)
        .filter(|f| f.meta.is_lie == Some(true))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational(), d in nonzero_rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a / &d) * &d, a.clone());
        prop_assert_eq!(&a - &a, Rational::zero());
        prop_assert!((&d * &d.recip().unwrap()).is_one());
    }

    #[test]
    fn rational_display_round_trips(a in rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn multipoly_evaluation_is_a_ring_homomorphism(p in poly2(), r in poly2(), x in rational(), y in rational()) {
        let pt = [x, y];
        let (pv, rv) = (p.eval(&pt).unwrap(), r.eval(&pt).unwrap());
        prop_assert_eq!((&p + &r).eval(&pt).unwrap(), &pv + &rv);
        prop_assert_eq!((&p * &r).eval(&pt).unwrap(), &pv * &rv);
        prop_assert_eq!((&p - &r).eval(&pt).unwrap(), &pv - &rv);
    }

    #[test]
    fn multipoly_exact_division_inverts_multiplication(p in poly2(), r in poly2()) {
        prop_assume!(!r.is_zero());
        prop_assert_eq!((&p * &r).div_exact(&r), Some(p));
    }

    #[test]
    fn unipoly_product_evaluates_pointwise(a in prop::collection::vec(-5i64..=5, 0..5), b in prop::collection::vec(-5i64..=5, 0..5), x in rational()) {
        let (p, r) = (UniPoly::from_ints(&a), UniPoly::from_ints(&b));
        prop_assert_eq!(p.mul(&r).eval(&x), &p.eval(&x) * &r.eval(&x));
    }

    #[test]
    fn rref_is_idempotent_and_rank_is_transpose_invariant(m in matrix(4, 5)) {
        let (r, rank) = m.rref();
        prop_assert_eq!(r.rref(), (r.clone(), rank));
        prop_assert_eq!(rank, m.transpose().rank());
    }

    #[test]
    fn nullspace_is_annihilated(m in matrix(3, 5)) {
        let ns = m.nullspace();
        prop_assert_eq!(ns.dim() + m.rank(), 5);
        for v in ns.basis_vectors() {
            prop_assert!(m.apply(v).iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn cayley_hamilton(m in square(4)) {
        let cp = m.char_poly().unwrap();
        prop_assert_eq!(cp.degree(), Some(4));
        let mut acc = Matrix::zeros(4, 4);
        for (k, c) in cp.coeffs().iter().enumerate() {
            acc = acc.add(&m.pow(k as u32).scale(c));
        }
        prop_assert!(acc.is_zero());
    }

    #[test]
    fn determinant_is_multiplicative(a in square(3), b in square(3)) {
        prop_assert_eq!(a.mul(&b).det().unwrap(), &a.det().unwrap() * &b.det().unwrap());
    }

    #[test]
    fn inverse_of_nonsingular_matrix(m in square(3)) {
        prop_assume!(!m.det().unwrap().is_zero());
        prop_assert_eq!(m.mul(&m.inverse().unwrap()), Matrix::identity(3));
    }

    #[test]
    fn symbolic_determinant_specialises(mats in prop::collection::vec(square(3), 1..=3), pt in prop::collection::vec(small_int(), 3)) {
        let generic = generic_combination(3, &mats);
        let det = symbolic_det(&generic).unwrap();
        let point = &pt[..mats.len()];
        let concrete = mats.iter().zip(point).fold(Matrix::zeros(3, 3), |acc, (m, c)| acc.add(&m.scale(c)));
        prop_assert_eq!(det.eval(point).unwrap(), concrete.det().unwrap());
    }

    #[test]
    fn subspace_dimension_formula(a in vectors(4, 3), b in vectors(4, 3)) {
        let (u, w) = (Subspace::from_vectors(4, a), Subspace::from_vectors(4, b));
        let sum = u.sum(&w).unwrap();
        let meet = u.intersection(&w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
        prop_assert!(meet.is_subset_of(&u) && meet.is_subset_of(&w));
        prop_assert!(u.is_subset_of(&sum) && w.is_subset_of(&sum));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_algebras_satisfy_the_identity(seed in any::<u64>(), dim in 1usize..=4) {
        let alg = seeded_algebra(seed, dim);
        prop_assert!(check_leibniz_identity(&alg).holds());
    }

    #[test]
    fn right_multiplications_commute_up_to_a_bracket(seed in any::<u64>(), dim in 2usize..=4, xs in prop::collection::vec(small_int(), 8)) {
        // R_x R_y - R_y R_x = R_[y,x], as operators z -> [z,x]
        let alg = seeded_algebra(seed, dim);
        let (x, y) = (&xs[..dim], &xs[4..4 + dim]);
        let (rx, ry) = (alg.right_mult(x).unwrap(), alg.right_mult(y).unwrap());
        let lhs = rx.mul(&ry).sub(&ry.mul(&rx));
        prop_assert_eq!(lhs, alg.right_mult(&alg.bracket(y, x).unwrap()).unwrap());
    }

    #[test]
    fn solver_matches_naive_oracle(seed in any::<u64>(), dim in 1usize..=4) {
        let alg = seeded_algebra(seed, dim);
        prop_assert_eq!(derivation_space(&alg, &DerivationQuery::derivations()), naive_derivation_space(&alg));
    }

    #[test]
    fn solved_spaces_pass_membership(seed in any::<u64>(), dim in 1usize..=3, order in 2usize..=4, left in any::<bool>()) {
        let alg = seeded_algebra(seed, dim);
        let side = if left { Side::Left } else { Side::Right };
        let query = DerivationQuery::new(order, side).unwrap();
        let space = derivation_space(&alg, &query);
        for d in space.basis() {
            prop_assert!(is_derivation(&alg, d, &query).unwrap());
        }
        // derivations of order 2 are derivations of every order
        prop_assert!(derivation_space(&alg, &DerivationQuery::derivations()).is_subset_of(&space));
    }

    #[test]
    fn nilpotent_spaces_have_no_invertible_element(seed in any::<u64>(), dim in 1usize..=4) {
        let alg = seeded_algebra(seed, dim);
        let space = derivation_space(&alg, &DerivationQuery::right(3).unwrap());
        let (inv, witness) = exists_invertible(&space);
        if all_nilpotent(&space) {
            prop_assert!(!inv);
        }
        if let Some(w) = witness {
            prop_assert!(inv && space.contains(&w) && !w.det().unwrap().is_zero());
        }
    }

    #[test]
    fn series_terms_decrease(seed in any::<u64>(), dim in 1usize..=4, arity in 3usize..=4) {
        let alg = seeded_algebra(seed, dim);
        let full = Subspace::full(dim);
        for (kind, n) in [(SeriesKind::LowerCentral, 2), (SeriesKind::Derived, 2), (SeriesKind::NLower, arity), (SeriesKind::NDerived, arity)] {
            let rep = series(&alg, &full, kind, n).unwrap();
            for pair in rep.terms.windows(2) {
                prop_assert!(pair[1].is_subset_of(&pair[0]));
            }
        }
    }

    #[test]
    fn canonical_format_round_trips(seed in any::<u64>(), dim in 1usize..=4) {
        let file = AlgebraFile::new(seeded_algebra(seed, dim));
        let text = corpus::to_canonical_string(&file);
        let back = corpus::parse(&text).unwrap();
        prop_assert_eq!(corpus::to_canonical_string(&back), text);
        prop_assert_eq!(back.algebra.table_entries(), file.algebra.table_entries());
    }
}

#[test]
fn left_and_right_spaces_agree_on_lie_algebras() {
    let lie = lie_entries();
    assert!(lie.len() >= 3);
    for f in lie {
        for order in 2..=4 {
            let right = derivation_space(&f.algebra, &DerivationQuery::new(order, Side::Right).unwrap());
            let left = derivation_space(&f.algebra, &DerivationQuery::new(order, Side::Left).unwrap());
            assert_eq!(left, right, "{} order {order}", f.algebra.name());
        }
    }
}

#[test]
fn map_space_combination_lies_in_span() {
    let maps = [Matrix::from_ints(&[vec![1, 0], vec![0, 0]]), Matrix::from_ints(&[vec![0, 1], vec![0, 0]])];
    let s = MapSpace::span(2, &maps).unwrap();
    let c = s.combination(&[Rational::from_int(2), Rational::from_int(-3)]).unwrap();
    assert!(s.contains(&c));
    assert!(!s.contains(&Matrix::identity(2)));
}
