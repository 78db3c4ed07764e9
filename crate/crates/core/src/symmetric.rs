//! Symmetric Laurent polynomials written in the variable s = t + t^-1.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::poly::Poly;
use crate::Rational;

/// A polynomial in s; `s_substitute` maps it to a bar-fixed Laurent polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SymmetricPoly(Poly);

impl SymmetricPoly {
    pub fn new(p: Poly) -> Self {
        SymmetricPoly(p)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        SymmetricPoly(Poly::from_ints(coeffs))
    }

    pub fn constant(c: Rational) -> Self {
        SymmetricPoly(Poly::constant(c))
    }

    pub fn one() -> Self {
        SymmetricPoly(Poly::one())
    }

    /// The variable s itself.
    pub fn s() -> Self {
        SymmetricPoly(Poly::x())
    }

    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn into_poly(self) -> Poly {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    /// Evaluate at a value of s.
    pub fn eval(&self, s: &Rational) -> Rational {
        self.0.eval(s)
    }

    /// Value of the substituted Laurent polynomial at t = 1 (s = 2).
    pub fn value_at_one(&self) -> Rational {
        self.eval(&Rational::from_integer(2.into()))
    }

    pub(crate) fn with_positive_lead(self) -> Self {
        if self.0.lc().is_negative() {
            SymmetricPoly(-&self.0)
        } else {
            self
        }
    }

    /// Exact substitution s -> t + t^-1.
    pub fn s_substitute(&self) -> LaurentPoly {
        let s = LaurentPoly::from_ints(-1, &[1, 0, 1]);
        let mut acc = LaurentPoly::zero();
        for c in self.0.coeffs().iter().rev() {
            acc = &(&acc * &s) + &LaurentPoly::constant(c.clone());
        }
        acc
    }

    /// Rewrite an exactly bar-fixed Laurent polynomial in s.
    pub fn from_bar_fixed(p: &LaurentPoly) -> Option<Self> {
        if !p.is_bar_fixed() {
            return None;
        }
        let mut rest = p.clone();
        let mut coeffs: Vec<Rational> = Vec::new();
        while !rest.is_zero() {
            let m = rest.high_exponent().unwrap();
            if m < 0 {
                return None;
            }
            let c = rest.leading_coeff();
            let m = m as usize;
            if coeffs.len() <= m {
                coeffs.resize(m + 1, Rational::zero());
            }
            coeffs[m] += &c;
            let term = SymmetricPoly(Poly::monomial(c, m)).s_substitute();
            rest = &rest - &term;
        }
        Some(SymmetricPoly(Poly::from_coeffs(coeffs)))
    }

    /// Ordinary division in Q[s].
    pub fn div_rem(&self, d: &SymmetricPoly) -> Result<(SymmetricPoly, SymmetricPoly)> {
        if d.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let (q, r) = self.0.div_rem(&d.0);
        Ok((SymmetricPoly(q), SymmetricPoly(r)))
    }

    pub fn rem(&self, d: &SymmetricPoly) -> Result<SymmetricPoly> {
        Ok(self.div_rem(d)?.1)
    }

    pub fn mul(&self, other: &SymmetricPoly) -> SymmetricPoly {
        SymmetricPoly(&self.0 * &other.0)
    }

    pub fn add(&self, other: &SymmetricPoly) -> SymmetricPoly {
        SymmetricPoly(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &SymmetricPoly) -> SymmetricPoly {
        SymmetricPoly(&self.0 - &other.0)
    }

    pub fn neg(&self) -> SymmetricPoly {
        SymmetricPoly(-&self.0)
    }

    pub fn scale(&self, c: &Rational) -> SymmetricPoly {
        SymmetricPoly(self.0.scale(c))
    }

    pub fn pow(&self, e: u32) -> SymmetricPoly {
        SymmetricPoly(self.0.pow(e))
    }

    pub fn gcd(&self, other: &SymmetricPoly) -> SymmetricPoly {
        SymmetricPoly(self.0.gcd(&other.0))
    }
}

impl fmt::Debug for SymmetricPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SymmetricPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != Rational::from_integer(1.into()) {
                        write!(f, "{a}")?;
                    }
                    if i == 1 {
                        write!(f, "s")?;
                    } else {
                        write!(f, "s^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitution_examples() {
        assert_eq!(SymmetricPoly::from_ints(&[-1, 1]).s_substitute(), LaurentPoly::from_ints(-1, &[1, -1, 1]));
        assert_eq!(SymmetricPoly::from_ints(&[2, 1]).s_substitute(), LaurentPoly::from_ints(-1, &[1, 2, 1]));
        assert_eq!(SymmetricPoly::from_ints(&[0, 0, 1]).s_substitute(), LaurentPoly::from_ints(-2, &[1, 0, 2, 0, 1]));
    }

    #[test]
    fn division_in_s() {
        // (s - 1) = (-1)(-s) + (-1)
        let a = SymmetricPoly::from_ints(&[-1, 1]);
        let b = SymmetricPoly::from_ints(&[0, -1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, SymmetricPoly::from_ints(&[-1]));
        assert_eq!(r, SymmetricPoly::from_ints(&[-1]));
    }

    #[test]
    fn from_bar_fixed_roundtrip() {
        let p = SymmetricPoly::from_ints(&[3, -2, 0, 5]);
        assert_eq!(SymmetricPoly::from_bar_fixed(&p.s_substitute()), Some(p));
        assert_eq!(SymmetricPoly::from_bar_fixed(&LaurentPoly::t()), None);
    }
}
