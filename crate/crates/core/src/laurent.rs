//! Laurent polynomials over Q: the ring Λ = Q[t, t^-1].
//!
//! A nonzero element is stored as `t^low * body` where `body` is an ordinary
//! polynomial with nonzero constant term. The units of Λ are exactly the
//! monomials λ t^k, so most normal forms below strip them off first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::symmetric::SymmetricPoly;
use crate::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    body: Poly,
}

/// A unit λ t^k of Λ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitFactor {
    pub scalar: Rational,
    pub exponent: i64,
}

impl UnitFactor {
    pub fn one() -> Self {
        UnitFactor { scalar: Rational::one(), exponent: 0 }
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::monomial(self.scalar.clone(), self.exponent)
    }

    pub fn inverse(&self) -> Self {
        UnitFactor { scalar: self.scalar.recip(), exponent: -self.exponent }
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, body: Poly::zero() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// The indeterminate t.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, k: i64) -> Self {
        Self::from_parts(k, Poly::constant(c))
    }

    /// `t^low * body`, renormalized so the body has a nonzero constant term.
    pub fn from_parts(low: i64, body: Poly) -> Self {
        match body.valuation() {
            None => Self::zero(),
            Some(0) => LaurentPoly { low, body },
            Some(v) => LaurentPoly { low: low + v as i64, body: body.shift_down(v) },
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::from_parts(0, p)
    }

    /// Build from (exponent, coefficient) pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let terms: Vec<(i64, Rational)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let Some(low) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![Rational::zero(); (high - low) as usize + 1];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_parts(low, Poly::from_coeffs(coeffs))
    }

    /// Integer coefficients starting at exponent `low`.
    pub fn from_ints(low: i64, coeffs: &[i64]) -> Self {
        Self::from_parts(low, Poly::from_ints(coeffs))
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.body.is_one()
    }

    /// True for the units λ t^k.
    pub fn is_unit(&self) -> bool {
        self.body.degree() == Some(0)
    }

    /// Lowest exponent q; `None` for zero.
    pub fn low_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent r; `None` for zero.
    pub fn high_exponent(&self) -> Option<i64> {
        self.body.degree().map(|d| self.low + d as i64)
    }

    /// The span-degree r - q.
    pub fn span_degree(&self) -> Option<usize> {
        self.body.degree()
    }

    /// The ordinary polynomial with nonzero constant term behind `self`.
    pub fn body(&self) -> &Poly {
        &self.body
    }

    pub fn coeff(&self, k: i64) -> Rational {
        if self.is_zero() || k < self.low {
            return Rational::zero();
        }
        self.body.coeff((k - self.low) as usize)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, Rational)> {
        let low = self.low;
        self.body
            .coeffs()
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (low + i as i64, c))
    }

    /// Coefficient of the highest exponent.
    pub fn leading_coeff(&self) -> Rational {
        self.body.lc()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_parts(self.low, self.body.scale(c))
    }

    /// Multiply by t^k.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + k, body: self.body.clone() }
    }

    pub fn mul_unit(&self, u: &UnitFactor) -> Self {
        self.scale(&u.scalar).shift(u.exponent)
    }

    /// The involution t -> t^-1.
    pub fn bar(&self) -> Self {
        let Some(d) = self.body.degree() else {
            return Self::zero();
        };
        Self::from_parts(-(self.low + d as i64), self.body.reverse(d))
    }

    pub fn is_bar_fixed(&self) -> bool {
        *self == self.bar()
    }

    pub fn pow(&self, e: u32) -> Self {
        if self.is_zero() {
            return if e == 0 { Self::one() } else { Self::zero() };
        }
        LaurentPoly { low: self.low * e as i64, body: self.body.pow(e) }
    }

    pub fn evaluate(&self, x: &Rational) -> Result<Rational> {
        if x.is_zero() {
            return Err(Error::ZeroPoint);
        }
        let v = self.body.eval(x);
        Ok(v * pow_rational(x, self.low))
    }

    /// Largest m with (1 + t)^m dividing `self`.
    pub fn multiplicity_minus_one(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let f = Poly::from_ints(&[1, 1]);
        let mut p = self.body.clone();
        let mut m = 0;
        while let Some(q) = p.exact_div(&f) {
            p = q;
            m += 1;
        }
        Ok(m)
    }

    /// Decide `self ≐ other`: returns the unit u with `self = u * other`.
    pub fn unit_quotient(&self, other: &LaurentPoly) -> Result<Option<UnitFactor>> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroInput);
        }
        if self.body.degree() != other.body.degree() {
            return Ok(None);
        }
        let lambda = self.body.lc() / other.body.lc();
        if self.body != other.body.scale(&lambda) {
            return Ok(None);
        }
        Ok(Some(UnitFactor { scalar: lambda, exponent: self.low - other.low }))
    }

    pub fn associates(&self, other: &LaurentPoly) -> bool {
        matches!(self.unit_quotient(other), Ok(Some(_)))
    }

    /// Canonical representative of the ≐-class: monic, lowest exponent 0.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: 0, body: self.body.monic() }
    }

    /// The unit u with `self = u * self.normalized()`.
    pub fn unit_part(&self) -> UnitFactor {
        UnitFactor { scalar: self.body.lc(), exponent: self.low }
    }

    /// The bar-fixed unit multiple with positive top s-coefficient, if any.
    pub fn normalize_symmetric(&self) -> Result<Option<SymmetricPoly>> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let d = self.body.degree().unwrap();
        if d % 2 == 1 {
            return Ok(None);
        }
        // Center the polynomial, then the only freedom left is a scalar.
        let centered = LaurentPoly { low: -((d / 2) as i64), body: self.body.clone() };
        let bar = centered.bar();
        let lambda = centered.body.lc() / bar.body.lc();
        if centered.body != bar.body.scale(&lambda) {
            return Ok(None);
        }
        // λ = ±1; λ = -1 means anti-symmetric, which no unit multiple fixes.
        if !lambda.is_one() {
            return Ok(None);
        }
        let sym = SymmetricPoly::from_bar_fixed(&centered)
            .ok_or_else(|| Error::Internal("centered symmetric polynomial".into()))?;
        Ok(Some(sym.with_positive_lead()))
    }

    /// Euclidean division with respect to span-degree.
    pub fn div_rem(&self, d: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
        if d.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if self.is_zero() {
            return Ok((Self::zero(), Self::zero()));
        }
        let k = (self.low - d.low).max(0);
        let (q, r) = self.body.shift_up(k as usize).div_rem(&d.body);
        Ok((Self::from_parts(self.low - k - d.low, q), Self::from_parts(self.low - k, r)))
    }

    /// Remainder of span-degree below `d`'s; zero iff `d` divides `self`.
    pub fn rem(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        Ok(self.div_rem(d)?.1)
    }

    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        match self.div_rem(d) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &LaurentPoly) -> bool {
        self.exact_div_ok(other)
    }

    fn exact_div_ok(&self, other: &LaurentPoly) -> bool {
        !self.is_zero() && other.body.rem(&self.body).is_zero()
    }

    /// Extended gcd in Λ: (g, u, v) with u*a + v*b = g and g normalized.
    pub fn gcd_ext(&self, other: &LaurentPoly) -> (LaurentPoly, LaurentPoly, LaurentPoly) {
        let (g, u, v) = self.body.xgcd(&other.body);
        (
            Self::from_poly(g),
            Self::from_parts(-self.low, u),
            Self::from_parts(-other.low, v),
        )
    }

    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        Self::from_poly(self.body.gcd(&other.body))
    }

    /// Normalized lcm.
    pub fn lcm(&self, other: &LaurentPoly) -> LaurentPoly {
        Self::from_poly(self.body.lcm(&other.body))
    }

    /// Inverse modulo `m`, reduced below `m`'s span-degree.
    pub fn inverse_mod(&self, m: &LaurentPoly) -> Result<LaurentPoly> {
        if m.is_zero() {
            return Err(Error::ZeroModulus);
        }
        let (g, u, _) = self.gcd_ext(m);
        if !g.is_one() {
            return Err(Error::NotUnit);
        }
        u.rem(m)
    }

    /// Remainder normalized to a representative in `Q[t]` of degree below
    /// the span-degree of `m`; unique per residue class.
    pub fn reduce_mod(&self, m: &LaurentPoly) -> Result<LaurentPoly> {
        if m.is_zero() {
            return Err(Error::ZeroModulus);
        }
        Ok(Self::from_poly(self.residue_poly(m.body())))
    }

    /// Class of `self` in Q[t]/(m) for `m` with nonzero constant term,
    /// written as an ordinary polynomial of degree below deg m.
    pub(crate) fn residue_poly(&self, m: &Poly) -> Poly {
        if self.is_zero() || m.is_constant() {
            return Poly::zero();
        }
        let base = self.body.rem(m);
        let factor = t_power_mod(self.low, m);
        (&base * &factor).rem(m)
    }
}

/// t^k modulo `m` (m(0) != 0) as an ordinary polynomial.
pub(crate) fn t_power_mod(k: i64, m: &Poly) -> Poly {
    if m.is_constant() {
        return Poly::zero();
    }
    let t_base = if k >= 0 {
        Poly::x()
    } else {
        // t * (m - m(0)) / (t * -m(0)) = 1  =>  t^-1 = -(m - m(0)) / (t m(0))
        let c0 = m.coeff(0);
        let mut tail = m.clone();
        tail = &tail - &Poly::constant(c0.clone());
        tail.shift_down(1).scale(&(-c0.recip()))
    };
    let mut e = k.unsigned_abs();
    let mut base = t_base.rem(m);
    let mut acc = Poly::one().rem(m);
    while e > 0 {
        if e & 1 == 1 {
            acc = (&acc * &base).rem(m);
        }
        e >>= 1;
        if e > 0 {
            base = (&base * &base).rem(m);
        }
    }
    acc
}

pub(crate) fn pow_rational(x: &Rational, k: i64) -> Rational {
    let base = if k < 0 { x.recip() } else { x.clone() };
    let mut e = k.unsigned_abs();
    let mut b = base;
    let mut acc = Rational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || e == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let a = self.body.shift_up((self.low - low) as usize);
        let b = rhs.body.shift_up((rhs.low - low) as usize);
        LaurentPoly::from_parts(low, &a + &b)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, body: -&self.body }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        // The product of two bodies with nonzero constant terms keeps one.
        LaurentPoly { low: self.low + rhs.low, body: &self.body * &rhs.body }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| &a + &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    /// t^-1 - 1 + t
    fn tm1t() -> LaurentPoly {
        LaurentPoly::from_ints(-1, &[1, -1, 1])
    }

    #[test]
    fn ring_examples() {
        let a = LaurentPoly::from_ints(0, &[1, 1]);
        assert_eq!(&a * &a.bar(), LaurentPoly::from_ints(-1, &[1, 2, 1]));
        assert_eq!(&a + &LaurentPoly::zero(), a);
        // (t - 2)(t^-1 - 2) = 5 - 2t - 2t^-1, checked at t = 3 as well
        let b = LaurentPoly::from_ints(0, &[-2, 1]);
        let c = LaurentPoly::from_ints(-1, &[1, -2]);
        let prod = &b * &c;
        assert_eq!(prod, LaurentPoly::from_ints(-1, &[-2, 5, -2]));
        let three = q(3, 1);
        assert_eq!(
            prod.evaluate(&three).unwrap(),
            b.evaluate(&three).unwrap() * c.evaluate(&three).unwrap()
        );
    }

    #[test]
    fn bar_examples() {
        assert_eq!(LaurentPoly::from_ints(0, &[1, 2]).bar(), LaurentPoly::from_ints(-1, &[2, 1]));
        let s = LaurentPoly::from_ints(-1, &[1, 2, 1]);
        assert_eq!(s.bar(), s);
    }

    #[test]
    fn span_degree_examples() {
        assert_eq!(LaurentPoly::from_ints(-1, &[1, 3, 1]).span_degree(), Some(2));
        assert_eq!(LaurentPoly::from_int(5).span_degree(), Some(0));
        assert_eq!(LaurentPoly::from_ints(0, &[1, 1]).pow(3).span_degree(), Some(3));
        assert_eq!(LaurentPoly::zero().span_degree(), None);
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(tm1t().evaluate(&q(1, 1)).unwrap(), q(1, 1));
        assert_eq!(LaurentPoly::from_ints(0, &[1, 1]).evaluate(&q(-1, 1)).unwrap(), q(0, 1));
        assert_eq!(tm1t().evaluate(&q(0, 1)), Err(Error::ZeroPoint));
    }

    #[test]
    fn multiplicity_examples() {
        let one_t = LaurentPoly::from_ints(0, &[1, 1]);
        assert_eq!((&one_t.pow(2) * &tm1t()).multiplicity_minus_one().unwrap(), 2);
        assert_eq!(tm1t().multiplicity_minus_one().unwrap(), 0);
        assert_eq!(LaurentPoly::zero().multiplicity_minus_one(), Err(Error::ZeroInput));
    }

    #[test]
    fn unit_quotient_examples() {
        let a = LaurentPoly::from_ints(0, &[1, 1]);
        let u = a.unit_quotient(&a.bar()).unwrap().unwrap();
        assert_eq!(u, UnitFactor { scalar: q(1, 1), exponent: 1 });
        let b = LaurentPoly::from_ints(0, &[-2, 1]);
        let c = LaurentPoly::from_ints(0, &[1, -2]);
        assert_eq!(b.unit_quotient(&c).unwrap(), None);
        let p = tm1t();
        let p3 = p.scale(&q(3, 1)).shift(2);
        assert_eq!(p3.unit_quotient(&p).unwrap(), Some(UnitFactor { scalar: q(3, 1), exponent: 2 }));
        assert_eq!(p.unit_quotient(&LaurentPoly::zero()), Err(Error::ZeroInput));
    }

    #[test]
    fn normalize_symmetric_examples() {
        // t^2 - t + 1 -> s - 1
        let p = LaurentPoly::from_ints(0, &[1, -1, 1]);
        assert_eq!(p.normalize_symmetric().unwrap(), Some(SymmetricPoly::from_ints(&[-1, 1])));
        let sq = LaurentPoly::from_ints(0, &[1, 2, 1]);
        assert_eq!(sq.normalize_symmetric().unwrap(), Some(SymmetricPoly::from_ints(&[2, 1])));
        assert_eq!(LaurentPoly::from_ints(0, &[1, 1]).normalize_symmetric().unwrap(), None);
        // negative leading coefficient flips to positive
        let neg = LaurentPoly::from_ints(0, &[-1, 1, -1]);
        assert_eq!(neg.normalize_symmetric().unwrap(), Some(SymmetricPoly::from_ints(&[-1, 1])));
        // t^2 - 1 is anti-symmetric after centering
        assert_eq!(LaurentPoly::from_ints(0, &[-1, 0, 1]).normalize_symmetric().unwrap(), None);
    }

    #[test]
    fn divmod_examples() {
        let a = LaurentPoly::from_ints(0, &[0, 1, 1]);
        let b = LaurentPoly::from_ints(0, &[-2, 1]);
        let (quot, rem) = a.div_rem(&b).unwrap();
        assert_eq!(quot, LaurentPoly::from_ints(0, &[3, 1]));
        assert_eq!(rem, LaurentPoly::from_int(6));
        let (quot, rem) = tm1t().div_rem(&tm1t()).unwrap();
        assert!(quot.is_one() && rem.is_zero());
        assert_eq!(a.div_rem(&LaurentPoly::zero()), Err(Error::ZeroDivisor));
    }

    #[test]
    fn gcd_ext_examples() {
        let a = LaurentPoly::from_ints(0, &[1, -1]);
        let (g, u, v) = a.gcd_ext(&tm1t());
        assert!(g.is_one());
        assert_eq!(&(&u * &a) + &(&v * &tm1t()), g);
        // u is t up to a unit modulo t^2 - t + 1
        let t = LaurentPoly::t();
        let diff = (&u - &t).reduce_mod(&tm1t()).unwrap();
        assert!(diff.is_zero(), "u = {u}");

        let p = LaurentPoly::from_ints(3, &[2, 4]);
        let (g, _, _) = p.gcd_ext(&LaurentPoly::zero());
        assert_eq!(g, p.normalized());

        let f = LaurentPoly::from_ints(0, &[1, 1]);
        assert_eq!(f.pow(2).gcd(&f.pow(3)), f.pow(2));
    }

    #[test]
    fn residue_handles_negative_exponents() {
        let m = LaurentPoly::from_ints(0, &[1, -1, 1]);
        let inv_t = LaurentPoly::monomial(q(1, 1), -1);
        let r = inv_t.reduce_mod(&m).unwrap();
        let check = (&r * &LaurentPoly::t()).reduce_mod(&m).unwrap();
        assert!(check.is_one());
    }
}
