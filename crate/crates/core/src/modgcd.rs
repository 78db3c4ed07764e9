//! Multi-modular extended gcd over Q[x]: Euclid modulo word-size primes,
//! Chinese remaindering, rational reconstruction, exact check.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::factor::zassenhaus::{fp_xgcd, reduce_mod_p};
use crate::poly::Poly;
use crate::Rational;

/// Give up past this many primes; the caller has a slower exact path.
const MAX_PRIMES: usize = 2048;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2, 3, 5, 7, 11, 13] {
        if n % p == 0 {
            return n == p;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    'witness: for a in [2u64, 7, 61] {
        let mut x = 1;
        let (mut b, mut e) = (a % n, d);
        while e > 0 {
            if e & 1 == 1 {
                x = mul(x, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes just below 2^31, so products of residues fit a u64.
fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(MAX_PRIMES + 64);
        let mut n = (1u64 << 31) - 1;
        while out.len() < MAX_PRIMES + 64 {
            if is_prime(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

/// n/d with |n|, d <= sqrt(m/2) and n ≡ c d mod m.
fn rational_reconstruct(c: &BigInt, m: &BigInt, bound: &BigInt) -> Option<Rational> {
    let (mut r0, mut r1) = (m.clone(), c.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > bound {
        let (q, r) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let t = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t);
    }
    if t1.is_zero() || &t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rational::new(r1, t1))
}

/// Residues of g and u modulo the product of the primes seen so far.
struct Crt {
    modulus: BigInt,
    g: Vec<BigInt>,
    u: Vec<BigInt>,
}

impl Crt {
    fn start(p: u64, g: &[u64], u: &[u64], ulen: usize) -> Self {
        let lift = |v: &[u64], len: usize| (0..len).map(|i| BigInt::from(*v.get(i).unwrap_or(&0))).collect();
        Crt { modulus: BigInt::from(p), g: lift(g, g.len()), u: lift(u, ulen) }
    }

    fn absorb(&mut self, p: u64, g: &[u64], u: &[u64]) {
        let bp = BigInt::from(p);
        let minv = BigInt::from(inverse_mod_u64((&self.modulus % &bp).try_into().unwrap(), p));
        let step = |x: &mut BigInt, r: u64, m: &BigInt| {
            let diff = (BigInt::from(r) - (&*x % &bp)).mod_floor(&bp);
            *x += m * ((diff * &minv) % &bp);
        };
        for (i, x) in self.g.iter_mut().enumerate() {
            step(x, *g.get(i).unwrap_or(&0), &self.modulus);
        }
        for (i, x) in self.u.iter_mut().enumerate() {
            step(x, *u.get(i).unwrap_or(&0), &self.modulus);
        }
        self.modulus *= bp;
    }

    /// Rational coefficients, clearing one running denominator first so
    /// most coefficients need only a symmetric lift.
    fn reconstruct(&self) -> Option<(Vec<Rational>, Vec<Rational>)> {
        let bound = (&self.modulus >> 1u32).sqrt();
        let half = &self.modulus >> 1u32;
        let mut den = BigInt::one();
        let mut solve = |x: &BigInt| -> Option<Rational> {
            let y = (x * &den).mod_floor(&self.modulus);
            let y = if y > half { y - &self.modulus } else { y };
            if y.abs() <= bound {
                return Some(Rational::new(y, den.clone()));
            }
            let q = rational_reconstruct(x, &self.modulus, &bound)?;
            den = den.lcm(q.denom());
            if den > bound {
                return None;
            }
            Some(q)
        };
        let g = self.g.iter().map(&mut solve).collect::<Option<Vec<_>>>()?;
        let u = self.u.iter().map(&mut solve).collect::<Option<Vec<_>>>()?;
        Some((g, u))
    }
}

fn inverse_mod_u64(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    t0.rem_euclid(p as i128) as u64
}

fn eval_mod(v: &[Rational], p: u64) -> Option<Vec<u64>> {
    let bp = BigInt::from(p);
    v.iter()
        .map(|c| {
            let d: u64 = c.denom().mod_floor(&bp).try_into().unwrap();
            if d == 0 {
                return None;
            }
            let n: u64 = c.numer().mod_floor(&bp).try_into().unwrap();
            Some(((n as u128 * inverse_mod_u64(d, p) as u128) % p as u128) as u64)
        })
        .collect()
}

fn same_mod(v: &[Rational], r: &[u64], p: u64) -> bool {
    eval_mod(v, p).is_some_and(|e| (0..e.len().max(r.len())).all(|i| e.get(i).unwrap_or(&0) == r.get(i).unwrap_or(&0)))
}

/// (g, u, v) with g monic, u·a + v·b = g, deg u < deg b − deg g. Both
/// inputs nonzero and non-constant; `None` if the primes run out.
pub(crate) fn xgcd_modular(a: &Poly, b: &Poly) -> Option<(Poly, Poly, Poly)> {
    let (an, bn) = (a.numerators(), b.numerators());
    let (la, lb) = (an.last()?, bn.last()?);
    let mut crt: Option<Crt> = None;
    let mut gdeg = usize::MAX;
    let mut used = 0usize;
    let mut next_try = 1usize;
    let ps = primes();
    let mut idx = 0;
    while used < MAX_PRIMES && idx < ps.len() {
        let p = ps[idx];
        idx += 1;
        let bp = BigInt::from(p);
        if (la % &bp).is_zero() || (lb % &bp).is_zero() {
            continue;
        }
        let (ap, bpp) = (reduce_mod_p(an, p), reduce_mod_p(bn, p));
        let (g, u, _) = fp_xgcd(&ap, &bpp, p);
        let d = g.len() - 1;
        if d > gdeg {
            continue;
        }
        let ulen = (b.degree()? - d).max(1);
        if d < gdeg || crt.is_none() {
            gdeg = d;
            crt = Some(Crt::start(p, &g, &u, ulen));
            used = 1;
            next_try = 1;
            continue;
        }
        let c = crt.as_mut().unwrap();
        if used >= next_try {
            if let Some((gq, uq)) = c.reconstruct() {
                // a fresh prime agreeing makes the exact check worth paying for
                if same_mod(&gq, &g, p) && same_mod(&uq, &u, p) {
                    if let Some(r) = finish(a, b, gq, uq) {
                        return Some(r);
                    }
                }
            }
            next_try *= 2;
        }
        c.absorb(p, &g, &u);
        used += 1;
    }
    None
}

fn finish(a: &Poly, b: &Poly, g: Vec<Rational>, u: Vec<Rational>) -> Option<(Poly, Poly, Poly)> {
    let g = Poly::from_coeffs(g);
    // u was computed for the integer numerators of a
    let u = Poly::from_coeffs(u).scale(&Rational::from_integer(a.denominator().clone()));
    if !g.divides(a) || !g.divides(b) {
        return None;
    }
    let v = (&g - &(&u * a)).exact_div(b)?;
    Some((g, u, v))
}
