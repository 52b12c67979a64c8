use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Univariate polynomial in `t`, coefficients lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    /// `t - root`
    pub fn linear(root: &Rational) -> Self {
        UniPoly::new(vec![-root, Rational::one()])
    }

    /// `t^k`
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![Rational::zero(); k + 1];
        c[k] = Rational::one();
        UniPoly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Synthetic division by `t - root`; returns (quotient, remainder).
    pub fn div_linear(&self, root: &Rational) -> (UniPoly, Rational) {
        if self.is_zero() {
            return (UniPoly::zero(), Rational::zero());
        }
        let n = self.coeffs.len();
        let mut q = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for k in (0..n).rev() {
            let v = &self.coeffs[k] + &carry * root;
            if k == 0 {
                return (UniPoly::new(q), v);
            }
            q[k - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Rational roots with multiplicities, ascending.
    ///
    /// Scales to a primitive integer polynomial, strips the `t^k` factor, then
    /// tests every candidate `p/q` with `p | a_0`, `q | a_n` and divides out
    /// each hit as many times as it divides exactly.
    pub fn rational_roots(&self) -> Result<Vec<(Rational, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut roots = Vec::new();
        let mut p = self.clone();

        let zeros = p.coeffs.iter().take_while(|c| c.is_zero()).count();
        if zeros > 0 {
            roots.push((Rational::zero(), zeros));
            p = UniPoly::new(p.coeffs[zeros..].to_vec());
        }
        if p.degree() == Some(0) {
            return Ok(roots);
        }

        let ints = p.integer_coeffs();
        let a0 = ints[0].abs();
        let an = ints[ints.len() - 1].abs();
        let mut candidates = Vec::new();
        for num in divisors(&a0) {
            for den in divisors(&an) {
                let r = Rational::from_big(num.clone(), den.clone())?;
                candidates.push(r.clone());
                candidates.push(-r);
            }
        }
        candidates.sort();
        candidates.dedup();

        for r in candidates {
            if p.degree() == Some(0) {
                break;
            }
            let mut mult = 0;
            loop {
                let (quot, rem) = p.div_linear(&r);
                if !rem.is_zero() {
                    break;
                }
                p = quot;
                mult += 1;
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(roots)
    }

    /// Integer multiple of `self` with coprime coefficients.
    fn integer_coeffs(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() || g.is_one() {
            ints
        } else {
            ints.into_iter().map(|c| c / &g).collect()
        }
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            let other = n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", c.abs()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn roots_of_factorable_quadratic() {
        let p = UniPoly::from_ints(&[2, -3, 1]);
        assert_eq!(
            p.rational_roots().unwrap(),
            vec![(q("1"), 1), (q("2"), 1)]
        );
    }

    #[test]
    fn no_rational_roots() {
        assert!(UniPoly::from_ints(&[1, 0, 1]).rational_roots().unwrap().is_empty());
    }

    #[test]
    fn repeated_half_root() {
        // (t - 1/2)^2 = t^2 - t + 1/4
        let p = UniPoly::new(vec![q("1/4"), q("-1"), q("1")]);
        assert_eq!(p.rational_roots().unwrap(), vec![(q("1/2"), 2)]);
    }

    #[test]
    fn zero_polynomial_errors() {
        assert_eq!(UniPoly::zero().rational_roots(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn roots_with_zero_and_negative() {
        // t^3 (t + 2/3)^2 (t - 5)
        let p = UniPoly::monomial(3)
            .mul(&UniPoly::linear(&q("-2/3")))
            .mul(&UniPoly::linear(&q("-2/3")))
            .mul(&UniPoly::linear(&q("5")));
        assert_eq!(
            p.rational_roots().unwrap(),
            vec![(q("-2/3"), 2), (q("0"), 3), (q("5"), 1)]
        );
    }

    #[test]
    fn constant_has_no_roots() {
        assert!(UniPoly::from_ints(&[7]).rational_roots().unwrap().is_empty());
    }

    #[test]
    fn display() {
        assert_eq!(UniPoly::from_ints(&[2, -3, 1]).to_string(), "t^2 - 3*t + 2");
        assert_eq!(UniPoly::monomial(2).to_string(), "t^2");
    }
}
