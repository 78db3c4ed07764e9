//! Canonical representatives of Q(t)/Λ.

use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::poly::Poly;
use crate::Rational;

/// `num / den` with `den` monic in Q[t], `den(0) != 0`, `gcd(num, den) = 1`
/// and `deg num < deg den`. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TorsionValue {
    num: Poly,
    den: Poly,
}

impl TorsionValue {
    pub fn zero() -> Self {
        TorsionValue { num: Poly::zero(), den: Poly::one() }
    }

    pub fn reduce(num: &LaurentPoly, den: &LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let shift = num.low_exponent().unwrap() - den.low_exponent().unwrap();
        let d = den.body().monic();
        let n = num.body().scale(&den.body().lc().recip());
        let g = n.gcd(&d);
        let d = d.exact_div(&g).expect("gcd divides");
        if d.is_constant() {
            return Ok(Self::zero());
        }
        let n = n.exact_div(&g).expect("gcd divides");
        let num = LaurentPoly::from_parts(shift, n).residue_poly(&d);
        Ok(TorsionValue { num, den: d })
    }

    /// The class of `1 / p`.
    pub fn inverse_of(p: &LaurentPoly) -> Result<Self> {
        Self::reduce(&LaurentPoly::one(), p)
    }

    pub fn num(&self) -> LaurentPoly {
        LaurentPoly::from_poly(self.num.clone())
    }

    pub fn den(&self) -> LaurentPoly {
        LaurentPoly::from_poly(self.den.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &TorsionValue) -> TorsionValue {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let l = self.den.lcm(&other.den);
        let a = &self.num * &l.exact_div(&self.den).expect("lcm");
        let b = &other.num * &l.exact_div(&other.den).expect("lcm");
        Self::reduce(&LaurentPoly::from_poly(&a + &b), &LaurentPoly::from_poly(l)).expect("nonzero lcm")
    }

    pub fn neg(&self) -> TorsionValue {
        TorsionValue { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, other: &TorsionValue) -> TorsionValue {
        self.add(&other.neg())
    }

    pub fn bar(&self) -> TorsionValue {
        if self.is_zero() {
            return Self::zero();
        }
        Self::reduce(&self.num().bar(), &self.den().bar()).expect("nonzero den")
    }

    pub fn mul_laurent(&self, c: &LaurentPoly) -> TorsionValue {
        if self.is_zero() || c.is_zero() {
            return Self::zero();
        }
        Self::reduce(&(c * &self.num()), &self.den()).expect("nonzero den")
    }

    pub fn scale(&self, c: &Rational) -> TorsionValue {
        self.mul_laurent(&LaurentPoly::constant(c.clone()))
    }

    /// `m * self` as an element of Λ, if it lands there.
    pub fn clear(&self, m: &LaurentPoly) -> Option<LaurentPoly> {
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let q = m.exact_div(&self.den())?;
        Some(&q * &self.num())
    }
}

impl fmt::Debug for TorsionValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for TorsionValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num(), self.den())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn lp(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(low, c)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn reduce_examples() {
        let v = TorsionValue::reduce(&lp(1, &[1, 1]), &lp(0, &[-2, 1])).unwrap();
        assert_eq!(v.num(), LaurentPoly::from_int(6));
        assert_eq!(v.den(), lp(0, &[-2, 1]));
        assert!(TorsionValue::reduce(&lp(-3, &[4, 5]), &LaurentPoly::from_int(3)).unwrap().is_zero());
        let v = TorsionValue::inverse_of(&lp(0, &[1, 1])).unwrap();
        assert_eq!((v.num(), v.den()), (LaurentPoly::one(), lp(0, &[1, 1])));
        assert_eq!(TorsionValue::reduce(&LaurentPoly::one(), &LaurentPoly::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn unit_shifts_are_absorbed() {
        let a = TorsionValue::reduce(&lp(0, &[1]), &lp(0, &[1, -1, 1])).unwrap();
        let b = TorsionValue::reduce(&lp(-2, &[1]), &lp(-3, &[1, -1, 1])).unwrap();
        assert_eq!(a.mul_laurent(&LaurentPoly::t()), b);
        let c = TorsionValue::reduce(&lp(0, &[2]), &lp(0, &[2, -2, 2])).unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn arithmetic() {
        let v = TorsionValue::inverse_of(&lp(0, &[1, 1])).unwrap();
        let two = v.add(&v);
        assert_eq!(two.num(), LaurentPoly::from_int(2));
        assert!(v.mul_laurent(&lp(0, &[1, 1])).is_zero());
        assert!(v.sub(&v).is_zero());
        assert_eq!(v.scale(&q(2, 1)), two);
    }

    #[test]
    fn bar_of_simple_pole() {
        // bar(1/(t-2)) = t/(1-2t) = -(1/2) t/(t-1/2) = -(1/4)/(t-1/2) mod Λ
        let v = TorsionValue::inverse_of(&lp(0, &[-2, 1])).unwrap().bar();
        assert_eq!(v.den(), LaurentPoly::from_terms([(0, q(-1, 2)), (1, q(1, 1))]));
        assert_eq!(v.num(), LaurentPoly::constant(q(-1, 4)));
        assert_eq!(v.bar(), TorsionValue::inverse_of(&lp(0, &[-2, 1])).unwrap());
    }

    #[test]
    fn clear_into_lambda() {
        let d = lp(0, &[1, 1]);
        let v = TorsionValue::reduce(&lp(0, &[3]), &d).unwrap();
        assert_eq!(v.clear(&d.pow(2)), Some(&LaurentPoly::from_int(3) * &d));
        assert_eq!(v.clear(&LaurentPoly::t()), None);
    }
}
