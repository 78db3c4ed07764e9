//! Dense univariate polynomials over Q.
//!
//! `Poly` is the workhorse behind both Laurent polynomials (shifted into
//! Q[t]) and symmetric polynomials written in s = t + t^-1. Coefficients are
//! integers over one shared positive denominator, so products and remainders
//! need a single content reduction instead of a gcd per coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::Rational;

/// `num / den`, little-endian, no trailing zeros, `den > 0`, and `den`
/// coprime to the content of `num`. Zero is `[] / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    num: Vec<BigInt>,
    den: BigInt,
}

impl Default for Poly {
    fn default() -> Self {
        Poly::zero()
    }
}

/// gcd(g, c) that stays cheap once `g` is a machine word.
fn gcd_step(g: &BigInt, c: &BigInt) -> BigInt {
    if c.is_zero() {
        return g.abs();
    }
    if let Some(small) = g.abs().to_u64() {
        if small == 0 {
            return c.abs();
        }
        let r = (c % g).abs().to_u64().expect("remainder below a word");
        return BigInt::from(r.gcd(&small));
    }
    g.gcd(c)
}

/// gcd of all entries, stopping early at 1.
fn content_gcd<'a>(start: BigInt, xs: impl Iterator<Item = &'a BigInt>) -> BigInt {
    let mut g = start;
    for c in xs {
        if g.is_one() {
            break;
        }
        g = gcd_step(&g, c);
    }
    g
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn int_trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut v);
    v
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    int_trim(out)
}

/// c * a - b
fn int_axpy(c: &BigInt, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = a.iter().map(|x| x * c).collect();
    out.resize(out.len().max(b.len()), BigInt::zero());
    for (o, y) in out.iter_mut().zip(b) {
        *o -= y;
    }
    int_trim(out)
}

fn int_div_exact(a: Vec<BigInt>, d: &BigInt) -> Option<Vec<BigInt>> {
    if d.is_one() {
        return Some(a);
    }
    a.into_iter()
        .map(|x| {
            let (q, r) = x.div_rem(d);
            r.is_zero().then_some(q)
        })
        .collect()
}

/// lc(b)^(deg a - deg b + 1) a = q b + r.
fn pseudo_div(a: &[BigInt], b: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let n = b.len() - 1;
    let delta = a.len() - 1 - n;
    let lb = &b[n];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); delta + 1];
    for k in (0..=delta).rev() {
        let top = std::mem::take(&mut r[k + n]);
        for c in r[..k + n].iter_mut().chain(q[k + 1..].iter_mut()) {
            if !c.is_zero() {
                *c *= lb;
            }
        }
        if !top.is_zero() {
            for (j, bj) in b[..n].iter().enumerate() {
                r[k + j] -= &top * bj;
            }
        }
        q[k] = top;
    }
    r.truncate(n);
    (int_trim(q), int_trim(r))
}

/// Subresultant remainder sequence over Z carrying the cofactor of `a`:
/// returns (g, s) with g = s a + t b for some integral t and g an associate
/// of gcd(a, b). Needs deg a >= deg b >= 0. `None` if a division that
/// should be exact is not.
fn subresultant_cofactor(a: &[BigInt], b: &[BigInt]) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    let (mut sa, mut sb) = (vec![BigInt::one()], Vec::new());
    let (mut g, mut h) = (BigInt::one(), BigInt::one());
    loop {
        let delta = (a.len() - b.len()) as u32;
        let (q, r) = pseudo_div(&a, &b);
        if r.is_empty() {
            return Some((b, sb));
        }
        let f = Pow::pow(b.last().unwrap(), delta + 1);
        let sr = int_axpy(&f, &sa, &int_mul(&q, &sb));
        let beta = &g * Pow::pow(&h, delta);
        a = std::mem::replace(&mut b, int_div_exact(r, &beta)?);
        sa = std::mem::replace(&mut sb, int_div_exact(sr, &beta)?);
        g = a.last().unwrap().clone();
        if delta > 0 {
            let (hq, hr) = Pow::pow(&g, delta).div_rem(&Pow::pow(&h, delta - 1));
            if !hr.is_zero() {
                return None;
            }
            h = hq;
        }
    }
}

impl Poly {
    fn build(mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        trim(&mut num);
        if num.is_empty() {
            return Self::zero();
        }
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        if !den.is_one() {
            let g = content_gcd(den.clone(), num.iter());
            if !g.is_one() {
                for c in num.iter_mut() {
                    *c /= &g;
                }
                den /= &g;
            }
        }
        Poly { num, den }
    }

    pub fn zero() -> Self {
        Poly { num: Vec::new(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Poly { num: vec![BigInt::one()], den: BigInt::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let (n, d) = c.into_raw();
        let mut num = vec![BigInt::zero(); degree + 1];
        num[degree] = n;
        Self::build(num, d)
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let den = coeffs.iter().fold(BigInt::one(), |l, c| if c.is_zero() { l } else { l.lcm(c.denom()) });
        let num = coeffs.into_iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Self::build(num, den)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::build(coeffs.iter().map(|&c| BigInt::from(c)).collect(), BigInt::one())
    }

    /// Integer numerators over `den`.
    pub fn from_integer_parts(num: Vec<BigInt>, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::build(num, den)
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        self.num.iter().map(|c| Rational::new(c.clone(), self.den.clone())).collect()
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        match self.num.get(i) {
            Some(c) => Rational::new(c.clone(), self.den.clone()),
            None => Rational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.num.len() == 1 && self.num[0] == self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.num.len().checked_sub(1)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> Rational {
        match self.num.last() {
            Some(c) => Rational::new(c.clone(), self.den.clone()),
            None => Rational::zero(),
        }
    }

    /// Number of vanishing low-order coefficients (the x-adic valuation).
    pub fn valuation(&self) -> Option<usize> {
        self.num.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let num = if c.numer().is_one() { self.num.clone() } else { self.num.iter().map(|a| a * c.numer()).collect() };
        Self::build(num, &self.den * c.denom())
    }

    pub fn monic(&self) -> Self {
        match self.num.last() {
            None => Self::zero(),
            Some(lc) => Self::build(self.num.clone(), lc.clone()),
        }
    }

    /// Primitive integer associate with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        let Some(lc) = self.num.last() else {
            return Self::zero();
        };
        let g = content_gcd(BigInt::zero(), self.num.iter());
        let g = if lc.is_negative() { -g } else { g };
        if g.is_one() {
            return Poly { num: self.num.clone(), den: BigInt::one() };
        }
        Poly { num: self.num.iter().map(|c| c / &g).collect(), den: BigInt::one() }
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut num = vec![BigInt::zero(); k];
        num.extend(self.num.iter().cloned());
        Poly { num, den: self.den.clone() }
    }

    /// Divide by x^k, discarding the low coefficients.
    pub fn shift_down(&self, k: usize) -> Self {
        if k >= self.num.len() {
            return Self::zero();
        }
        Self::build(self.num[k..].to_vec(), self.den.clone())
    }

    /// Reverse the coefficient order with respect to degree `d` (x^d p(1/x)).
    pub fn reverse(&self, d: usize) -> Self {
        let mut num = vec![BigInt::zero(); d + 1];
        for (i, c) in self.num.iter().enumerate() {
            num[d - i] = c.clone();
        }
        Self::build(num, self.den.clone())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        // sum c_i p^i q^(n-i), then divide by q^n
        let (p, q) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for (k, c) in self.num.iter().rev().enumerate() {
            if k > 0 {
                qpow *= q;
            }
            acc = acc * p + c * &qpow;
        }
        Rational::new(acc, &self.den * qpow)
    }

    pub fn derivative(&self) -> Self {
        Self::build(
            self.num.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect(),
            self.den.clone(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitute `q` for the variable.
    pub fn compose(&self, q: &Poly) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs().into_iter().rev() {
            acc = &(&acc * q) + &Self::constant(c);
        }
        acc
    }

    /// Euclidean division. Panics on a zero divisor; callers check first.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        self.divide(d, true)
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divide(d, false).1
    }

    fn divide(&self, d: &Poly, want_quotient: bool) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        if dd == 0 {
            let q = if want_quotient { self.scale(&d.lc().recip()) } else { Self::zero() };
            return (q, Self::zero());
        }
        // work with the primitive integer associate D; d = D * cont / d.den
        let cont = content_gcd(BigInt::zero(), d.num.iter());
        let dp: Vec<BigInt> = if cont.is_one() { d.num.clone() } else { d.num.iter().map(|c| c / &cont).collect() };
        let lcd = dp[dd].clone();
        let lcd_is_one = lcd.is_one();
        let mut r = self.num.clone();
        // remainder = r / (self.den * s), quotient by D = q / (self.den * s)
        let mut s = BigInt::one();
        let mut q: Vec<BigInt> = if want_quotient { vec![BigInt::zero(); nd - dd + 1] } else { Vec::new() };
        for k in (0..=nd - dd).rev() {
            let top = std::mem::take(&mut r[k + dd]);
            if top.is_zero() {
                continue;
            }
            let m2 = if lcd_is_one {
                top
            } else {
                let g = gcd_step(&lcd, &top);
                let m1 = &lcd / &g;
                if !m1.is_one() {
                    for c in r[..k + dd].iter_mut().filter(|c| !c.is_zero()) {
                        *c *= &m1;
                    }
                    for c in q.iter_mut().skip(k + 1).filter(|c| !c.is_zero()) {
                        *c *= &m1;
                    }
                    s *= &m1;
                }
                top / g
            };
            for (j, dc) in dp[..dd].iter().enumerate() {
                if !dc.is_zero() {
                    r[k + j] -= &m2 * dc;
                }
            }
            if want_quotient {
                q[k] = m2;
            }
        }
        r.truncate(dd);
        let den = &self.den * &s;
        let quot = if want_quotient {
            Self::build(q.into_iter().map(|c| c * &d.den).collect(), &den * &cont)
        } else {
            Self::zero()
        };
        (quot, Self::build(r, den))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        !self.is_zero() && other.rem(self).is_zero()
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        while !b.is_zero() {
            let r = a.rem(&b).primitive();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns (g, u, v) with u*self + v*other = g, g monic.
    pub fn xgcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        if self.is_zero() || other.is_zero() {
            return self.xgcd_euclid(other);
        }
        if self.num.len() < other.num.len() {
            let (g, v, u) = other.xgcd(self);
            return (g, u, v);
        }
        if other.degree() > Some(0) {
            if let Some(r) = crate::modgcd::xgcd_modular(self, other) {
                return r;
            }
        }
        match subresultant_cofactor(&self.num, &other.num) {
            Some((g, s)) => {
                // g = s * num(self) + t * num(other), so u = s * den(self)
                let inv = Rational::new(BigInt::one(), g.last().expect("nonzero gcd").clone());
                let g = Poly::build(g, BigInt::one()).scale(&inv);
                let u = Poly::build(s.into_iter().map(|c| c * &self.den).collect(), BigInt::one()).scale(&inv);
                let v = (&g - &(&u * self)).exact_div(other).expect("bezout identity");
                (g, u, v)
            }
            None => self.xgcd_euclid(other),
        }
    }

    fn xgcd_euclid(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, mut r) = r0.div_rem(&r1);
            let mut s2 = &s0 - &(&q * &s1);
            let mut t2 = &t0 - &(&q * &t1);
            // keep remainders primitive, cofactors scaled alike
            if let Some(f) = r.primitive_factor() {
                r = r.scale(&f);
                s2 = s2.scale(&f);
                t2 = t2.scale(&f);
            }
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// The rational f making f * self a primitive integer polynomial, when f != 1.
    fn primitive_factor(&self) -> Option<Rational> {
        if self.is_zero() {
            return None;
        }
        let g = content_gcd(BigInt::zero(), self.num.iter());
        let f = Rational::new(self.den.clone(), g);
        (!f.is_one()).then_some(f)
    }

    /// Inverse of `self` modulo `m`, if it exists.
    pub fn inverse_mod(&self, m: &Poly) -> Option<Poly> {
        let (g, u, _) = self.xgcd(m);
        if !g.is_one() {
            return None;
        }
        Some(if m.is_constant() { Poly::zero() } else { u.rem(m) })
    }

    /// Least common multiple, monic.
    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(other);
        (self * &other.exact_div(&g).expect("gcd divides")).monic()
    }

    /// Largest absolute numerator or denominator among the reduced
    /// coefficients.
    pub fn height(&self) -> BigInt {
        self.coeffs()
            .iter()
            .flat_map(|c| [c.numer().abs(), c.denom().clone()])
            .max()
            .unwrap_or_default()
    }

    /// Total bit size of the numerators and the denominator.
    pub fn bit_size(&self) -> u64 {
        self.num.iter().map(|c| c.bits()).sum::<u64>() + self.den.bits()
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[")?;
        for (i, c) in self.coeffs().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let n = self.num.len().max(rhs.num.len());
        let zero = BigInt::zero();
        if self.den == rhs.den {
            let num = (0..n).map(|i| self.num.get(i).unwrap_or(&zero) + rhs.num.get(i).unwrap_or(&zero)).collect();
            return Poly::build(num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let fa = &rhs.den / &g;
        let fb = &self.den / &g;
        let num = (0..n)
            .map(|i| {
                let a = self.num.get(i).map_or_else(BigInt::zero, |c| c * &fa);
                let b = rhs.num.get(i).map_or_else(BigInt::zero, |c| c * &fb);
                a + b
            })
            .collect();
        Poly::build(num, &self.den * &fa)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.num.len() + rhs.num.len() - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::build(out, &self.den * &rhs.den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn synthetic_division() {
        // (t^2 + t) / (t - 2) = t + 3 rem 6
        let a = Poly::from_ints(&[0, 1, 1]);
        let b = Poly::from_ints(&[-2, 1]);
        let (quot, rem) = a.div_rem(&b);
        assert_eq!(quot, Poly::from_ints(&[3, 1]));
        assert_eq!(rem, Poly::from_ints(&[6]));
    }

    #[test]
    fn division_with_rational_divisor() {
        let a = Poly::from_coeffs(vec![q(1, 3), q(-5, 7), q(2, 1), q(9, 4)]);
        let d = Poly::from_coeffs(vec![q(3, 5), q(0, 1), q(-4, 9)]);
        let (quot, rem) = a.div_rem(&d);
        assert_eq!(&(&quot * &d) + &rem, a);
        assert!(rem.degree().unwrap() < 2);
        assert_eq!(a.rem(&d), rem);
    }

    #[test]
    fn canonical_representation() {
        let a = Poly::from_coeffs(vec![q(2, 4), q(1, 1)]);
        let b = Poly::from_integer_parts(vec![BigInt::from(3), BigInt::from(6)], BigInt::from(6));
        assert_eq!(a, b);
        assert_eq!(a.coeffs(), vec![q(1, 2), q(1, 1)]);
        assert!(Poly::from_coeffs(vec![q(3, 3)]).is_one());
        assert_eq!(Poly::from_ints(&[4, -6]).primitive(), Poly::from_ints(&[-2, 3]));
    }

    #[test]
    fn xgcd_agrees_with_euclid() {
        let mut x = 7u64;
        let mut next = || {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((x >> 33) % 11) as i64 - 5
        };
        for _ in 0..300 {
            let common: Vec<i64> = (0..(next().rem_euclid(3) + 1)).map(|_| next()).collect();
            let a: Vec<i64> = (0..(next().rem_euclid(6) + 1)).map(|_| next()).collect();
            let b: Vec<i64> = (0..(next().rem_euclid(6) + 1)).map(|_| next()).collect();
            let c = Poly::from_ints(&common);
            let (a, b) = (&Poly::from_ints(&a) * &c, (&Poly::from_ints(&b) * &c).scale(&Rational::new(2.into(), 3.into())));
            let (g, u, v) = a.xgcd(&b);
            assert_eq!(&(&u * &a) + &(&v * &b), g);
            assert_eq!(g, a.xgcd_euclid(&b).0);
            assert_eq!(g, a.gcd(&b));
        }
    }

    #[test]
    fn xgcd_bezout() {
        let a = Poly::from_ints(&[1, -1]);
        let b = Poly::from_ints(&[1, -1, 1]);
        let (g, u, v) = a.xgcd(&b);
        assert!(g.is_one());
        assert_eq!(&(&u * &a) + &(&v * &b), g);
        let a = Poly::from_ints(&[3, -7, 2, 5, 1]);
        let b = Poly::from_ints(&[-4, 2, 9, 1]);
        let (g, u, v) = a.xgcd(&b);
        assert_eq!(&(&u * &a) + &(&v * &b), g);
    }

    #[test]
    fn gcd_of_powers() {
        let p = Poly::from_ints(&[1, 1]);
        assert_eq!(p.pow(2).gcd(&p.pow(3)), p.pow(2));
    }

    #[test]
    fn compose_and_eval() {
        let p = Poly::from_ints(&[-1, 1]);
        let sq = Poly::from_ints(&[0, 0, 1]);
        assert_eq!(p.compose(&sq), Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(p.eval(&q(1, 2)), q(-1, 2));
        let r = Poly::from_coeffs(vec![q(1, 3), q(-2, 1), q(5, 2)]);
        assert_eq!(r.eval(&q(-3, 4)), q(1, 3) + q(3, 2) + q(5, 2) * q(9, 16));
        assert_eq!(Poly::zero().eval(&q(2, 1)), q(0, 1));
    }

    #[test]
    fn inverse_mod_matches_bezout() {
        let m = Poly::from_ints(&[1, -1, 1]);
        let a = Poly::from_ints(&[1, -1]);
        let inv = a.inverse_mod(&m).unwrap();
        assert!((&(&inv * &a) - &Poly::one()).rem(&m).is_zero());
        assert!(Poly::from_ints(&[1, 1]).inverse_mod(&Poly::from_ints(&[1, 1]).pow(2)).is_none());
    }
}
