//! Parametrized families of Leibniz algebras used by the bundled corpus.

use crate::algebra::{LeibnizAlgebra, TableBuilder};
use crate::error::{Error, Result};
use crate::exactmath::Rational;

fn r(n: i64) -> Rational {
    Rational::from_int(n)
}

/// `n`-dimensional characteristically nilpotent algebra (`n ≥ 4`):
/// `[e1,e1] = e3`, `[ei,e1] = e(i+1)` (2 ≤ i ≤ n-1), `[e1,e2] = e4`,
/// `[ei,e2] = e(i+2)` (2 ≤ i ≤ n-2).
pub fn charnil(n: usize) -> Result<LeibnizAlgebra> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!("charnil needs n >= 4, got {n}")));
    }
    let mut b = TableBuilder::new(n).with(1, 1, &[(3, 1)]).with(1, 2, &[(4, 1)]);
    for i in 2..n {
        b = b.with(i, 1, &[(i + 1, 1)]);
    }
    for i in 2..=n - 2 {
        b = b.with(i, 2, &[(i + 2, 1)]);
    }
    b.build(format!("charnil{n}"))
}

/// `(n+1)`-dimensional solvable, non-nilpotent algebra with `[R,[R,R]] = 0`.
///
/// `alphas[m]` is the parameter `α_(m+4)`; missing parameters are zero. The
/// parameter sum in `[ei, e(n+1)]` runs over `e_j`, `j = i+2..n`, with
/// coefficient `α_(j-i+2)`. Tables violating the Leibniz identity are rejected.
pub fn solvable_ex31(n: usize, alphas: &[Rational]) -> Result<LeibnizAlgebra> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!("solvable_ex31 needs n >= 4, got {n}")));
    }
    if alphas.len() > n.saturating_sub(4) {
        return Err(Error::InvalidArgument(format!(
            "at most {} parameters (alpha_4..alpha_{}) for n = {n}",
            n - 4,
            n - 1
        )));
    }
    let alpha = |m: usize| alphas.get(m.wrapping_sub(4)).cloned().unwrap_or_else(Rational::zero);
    let x = n; // 0-based index of e(n+1)
    let mut b = TableBuilder::new(n + 1);
    b.add(0, 0, 2, r(1))?;
    for i in 2..n {
        b.add(i - 1, 0, i, r(1))?;
    }
    for src in [0, 1] {
        b.add(src, x, 1, r(1))?;
        for i in 4..n {
            b.add(src, x, i - 1, alpha(i))?;
        }
    }
    for i in 3..=n {
        b.add(i - 1, x, i - 1, r(1))?;
        for j in i + 2..=n {
            b.add(i - 1, x, j - 1, alpha(j - i + 2))?;
        }
    }
    let name = if alphas.iter().all(Rational::is_zero) {
        format!("solvable_ex31_n{n}")
    } else {
        format!("solvable_ex31_n{n}_alpha")
    };
    b.build(name)
}

/// `(n+1)`-dimensional solvable algebra on `e1..en, x`:
/// `[ei,e1] = e(i+1)`, `[x,e1] = e1`, `[ei,x] = -i ei`.
pub fn cas_ex33(n: usize) -> Result<LeibnizAlgebra> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("cas_ex33 needs n >= 2, got {n}")));
    }
    let x = n + 1;
    let mut b = TableBuilder::new(n + 1).with(x, 1, &[(1, 1)]);
    for i in 1..n {
        b = b.with(i, 1, &[(i + 1, 1)]);
    }
    for i in 1..=n {
        b = b.with(i, x, &[(i, -(i as i64))]);
    }
    b.build(format!("cas_ex33_n{n}"))
}

/// 7-dimensional characteristically nilpotent algebra that is not strongly nilpotent.
pub fn ex7() -> LeibnizAlgebra {
    let mut b = TableBuilder::new(7).with(1, 1, &[(3, 1)]).with(1, 2, &[(4, 1), (5, -2)]);
    for i in 2..=6 {
        b = b.with(i, 1, &[(i + 1, 1)]);
    }
    for i in 2..=4 {
        b = b.with(i, 2, &[(i + 2, 1), (i + 3, -2)]);
    }
    b.with(5, 2, &[(7, 1)]).build("ex7").expect("valid table")
}

/// 8-dimensional filiform algebra, characteristically but not strongly nilpotent.
///
/// `[ei,e1] = e(i+1)` runs over 2 ≤ i ≤ 7: stopping at i = 6 leaves
/// `[e7,e1] = 0`, which violates the Leibniz identity at `(e3, e1, e2)`.
pub fn ex8() -> LeibnizAlgebra {
    let mut b = TableBuilder::new(8)
        .with(1, 1, &[(3, 1)])
        .with(1, 2, &[(4, 1), (5, -2), (6, 5)]);
    for i in 2..=7 {
        b = b.with(i, 1, &[(i + 1, 1)]);
    }
    for i in 2..=4 {
        b = b.with(i, 2, &[(i + 2, 1), (i + 3, -2), (i + 4, 5)]);
    }
    b.with(5, 2, &[(7, 1), (8, -2)])
        .with(6, 2, &[(8, 1)])
        .build("ex8")
        .expect("valid table")
}

pub fn abelian(n: usize) -> LeibnizAlgebra {
    LeibnizAlgebra::abelian(n).with_name(format!("abelian{n}"))
}

/// 3-dimensional Heisenberg Lie algebra `[e1,e2] = e3 = -[e2,e1]`.
pub fn lie_heisenberg() -> LeibnizAlgebra {
    TableBuilder::new(3)
        .with(1, 2, &[(3, 1)])
        .with(2, 1, &[(3, -1)])
        .build("lie_heisenberg")
        .expect("valid table")
}

/// `gl(2)` with commutator bracket on the basis `E11, E12, E21, E22`.
pub fn lie_gl2() -> LeibnizAlgebra {
    // unit matrix E_(a,b) has index 2a + b
    let unit = |a: usize, b: usize| 2 * a + b;
    let mut t = TableBuilder::new(4);
    for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        for (c, d) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            // E_ab E_cd - E_cd E_ab = δ_bc E_ad - δ_da E_cb
            if b == c {
                t.add(unit(a, b), unit(c, d), unit(a, d), r(1)).expect("in range");
            }
            if d == a {
                t.add(unit(a, b), unit(c, d), unit(c, b), r(-1)).expect("in range");
            }
        }
    }
    t.build("lie_gl2").expect("Jacobi identity")
}

/// `charnil(6) ⊕ cas_ex33(4)`: 11-dimensional, solvable and not nilpotent.
pub fn charnil6_plus_cas33() -> LeibnizAlgebra {
    let a = charnil(6).expect("n = 6");
    let b = cas_ex33(4).expect("n = 4");
    a.direct_sum(&b, "charnil6_plus_cas33")
}
