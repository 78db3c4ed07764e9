//! Factorization of squarefree primitive integer polynomials.
//!
//! Berlekamp splitting modulo a small prime, linear Hensel lifting of the
//! modular factors, then recombination of lifted factors by trial division
//! under a Mignotte-style coefficient bound.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::Poly;
use crate::Rational;

/// Integer polynomial, little-endian.
pub(crate) type ZPoly = Vec<BigInt>;

/// Polynomial over F_p, little-endian, no trailing zeros.
pub(crate) type FpPoly = Vec<u64>;

const PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307,
    311, 313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383, 389, 397, 401, 409, 419, 421,
    431, 433, 439, 443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503, 509, 521, 523, 541,
];

/// How many admissible primes to try before settling on the one with the
/// fewest modular factors.
const PRIME_CANDIDATES: usize = 4;

pub(crate) fn factor_squarefree(f: &ZPoly) -> Vec<ZPoly> {
    let deg = f.len() - 1;
    if deg <= 1 {
        return vec![f.clone()];
    }
    let lc = f.last().unwrap().clone();

    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut tried = 0;
    for &p in PRIMES {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = reduce_mod_p(f, p);
        if fp.len() != f.len() {
            continue;
        }
        let dfp = fp_derivative(&fp, p);
        if fp_gcd(&fp, &dfp, p).len() != 1 {
            continue;
        }
        let monic = fp_monic(&fp, p);
        let factors = berlekamp(&monic, p);
        if factors.len() == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
        tried += 1;
        if tried >= PRIME_CANDIDATES {
            break;
        }
    }
    let (p, modular) = best.expect("some small prime keeps a squarefree polynomial squarefree");

    // p^k > 2 |lc| B with B bounding the coefficients of any factor.
    let max_coeff = f.iter().map(|c| c.abs()).max().unwrap();
    let bound = BigInt::from(2u32).pow(deg as u32) * BigInt::from(deg + 1) * max_coeff * lc.abs() * 2;
    let mut k = 1u32;
    let mut modulus = BigInt::from(p);
    while modulus <= bound {
        modulus *= p;
        k += 1;
    }

    let lifted = multifactor_lift(f, &modular, p, k, &modulus);
    recombine(f, lifted, &modulus)
}

fn recombine(f: &ZPoly, mut remaining: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut f = f.clone();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut found = None;
        for subset in Combinations::new(remaining.len(), size) {
            let lc = f.last().unwrap().clone();
            let mut g: ZPoly = vec![lc];
            for &i in &subset {
                g = zmul_mod(&g, &remaining[i], modulus);
            }
            let g = primitive_part(&symmetric_mod(&g, modulus));
            if let Some(q) = zexact_div(&f, &g) {
                found = Some((subset, g, q));
                break;
            }
        }
        match found {
            Some((subset, g, q)) => {
                out.push(g);
                f = q;
                for &i in subset.iter().rev() {
                    remaining.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if f.len() > 1 {
        out.push(f);
    }
    out
}

/// Lift f = lc * prod(factors) mod p to mod p^k, factors monic.
fn multifactor_lift(f: &ZPoly, factors: &[FpPoly], p: u64, k: u32, modulus: &BigInt) -> Vec<ZPoly> {
    let lc = f.last().unwrap();
    let lc_inv = lc.mod_floor(modulus).modinv(modulus).expect("p does not divide lc");
    let mut target: ZPoly = f.iter().map(|c| (c * &lc_inv).mod_floor(modulus)).collect();
    let mut out = Vec::with_capacity(factors.len());
    for i in 0..factors.len() - 1 {
        let g = &factors[i];
        let mut h: FpPoly = vec![1];
        for other in &factors[i + 1..] {
            h = fp_mul(&h, other, p);
        }
        let (gl, hl) = hensel_pair(&target, g, &h, p, k, modulus);
        out.push(gl);
        target = hl;
    }
    out.push(target);
    out
}

/// Linear Hensel lifting of a monic factorization target = g h (mod p).
fn hensel_pair(target: &ZPoly, g: &FpPoly, h: &FpPoly, p: u64, k: u32, modulus: &BigInt) -> (ZPoly, ZPoly) {
    let (gcd, a, _b) = fp_xgcd(g, h, p);
    debug_assert_eq!(gcd, vec![1]);
    let mut gz: ZPoly = g.iter().map(|&c| BigInt::from(c)).collect();
    let mut hz: ZPoly = h.iter().map(|&c| BigInt::from(c)).collect();
    let bp = BigInt::from(p);
    let mut pj = bp.clone();
    for _ in 1..k {
        let next = &pj * &bp;
        let prod = zmul(&gz, &hz);
        let diff = zsub(target, &prod);
        let e: FpPoly = fp_trim(
            diff.iter()
                .map(|c| {
                    let c = c.mod_floor(&next);
                    debug_assert!((&c % &pj).is_zero());
                    (c / &pj).mod_floor(&bp).to_u64().unwrap()
                })
                .collect(),
        );
        if !e.is_empty() {
            // e = sigma g + tau h with deg sigma < deg h, deg tau < deg g
            let sigma = fp_rem(&fp_mul(&e, &a, p), h, p);
            let tau = fp_divrem(&fp_sub(&e, &fp_mul(&sigma, g, p), p), h, p).0;
            gz = zadd_scaled(&gz, &tau, &pj, &next);
            hz = zadd_scaled(&hz, &sigma, &pj, &next);
        }
        pj = next;
    }
    let _ = modulus;
    (gz, hz)
}

/// Berlekamp splitting of a monic squarefree polynomial over F_p.
fn berlekamp(f: &FpPoly, p: u64) -> Vec<FpPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.clone()];
    }
    // Row i of Q: x^(i p) mod f.
    let xp = fp_powmod(&vec![0, 1], p, f, p);
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut cur: FpPoly = vec![1];
    for _ in 0..n {
        let mut row = cur.clone();
        row.resize(n, 0);
        rows.push(row);
        cur = fp_rem(&fp_mul(&cur, &xp, p), f, p);
    }
    // Left nullspace of Q - I: columns of M = (Q - I)^T.
    let mut m = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut v = rows[j][i];
            if i == j {
                v = (v + p - 1) % p;
            }
            m[i][j] = v;
        }
    }
    let basis = fp_nullspace(m, p);
    let r = basis.len();
    if r == 1 {
        return vec![f.clone()];
    }
    let mut factors = vec![f.clone()];
    'outer: for v in basis.iter() {
        let v = fp_trim(v.clone());
        if v.len() <= 1 {
            continue;
        }
        for s in 0..p {
            let mut shifted = v.clone();
            shifted[0] = (shifted[0] + p - s) % p;
            let shifted = fp_trim(shifted);
            let mut next = Vec::with_capacity(factors.len() + 1);
            for u in factors.drain(..) {
                if u.len() <= 2 {
                    next.push(u);
                    continue;
                }
                let g = fp_gcd(&u, &shifted, p);
                if g.len() > 1 && g.len() < u.len() {
                    let (q, _) = fp_divrem(&u, &g, p);
                    next.push(g);
                    next.push(fp_monic(&q, p));
                } else {
                    next.push(u);
                }
            }
            factors = next;
            if factors.len() == r {
                break 'outer;
            }
        }
    }
    factors.sort();
    factors
}

/// Nullspace basis of a square matrix over F_p (vectors v with M v = 0).
fn fp_nullspace(mut m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let rows = m.len();
    let cols = m[0].len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = fp_inv(m[r][c], p);
        for j in 0..cols {
            m[r][j] = m[r][j] * inv % p;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + p * p - f * m[r][j] % p) % p;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (i, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = (p - m[i][free]) % p;
        }
        basis.push(v);
    }
    basis
}

// ---- F_p arithmetic ----

pub(crate) fn reduce_mod_p(f: &[BigInt], p: u64) -> FpPoly {
    let bp = BigInt::from(p);
    fp_trim(f.iter().map(|c| c.mod_floor(&bp).to_u64().unwrap()).collect())
}

fn fp_trim(mut v: FpPoly) -> FpPoly {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn fp_inv(a: u64, p: u64) -> u64 {
    fp_pow(a, p - 2, p)
}

fn fp_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

fn fp_monic(f: &FpPoly, p: u64) -> FpPoly {
    let inv = fp_inv(*f.last().unwrap(), p);
    f.iter().map(|&c| c * inv % p).collect()
}

fn fp_sub(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    fp_trim((0..n).map(|i| (a.get(i).unwrap_or(&0) + p - b.get(i).unwrap_or(&0)) % p).collect())
}

fn fp_mul(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(out)
}

fn fp_divrem(a: &FpPoly, d: &FpPoly, p: u64) -> (FpPoly, FpPoly) {
    let dd = d.len() - 1;
    if a.len() < d.len() {
        return (Vec::new(), a.clone());
    }
    let inv = fp_inv(d[dd], p);
    let mut rem = a.clone();
    let mut quot = vec![0u64; a.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd] * inv % p;
        if c == 0 {
            continue;
        }
        quot[k] = c;
        for (j, &dc) in d.iter().enumerate() {
            rem[k + j] = (rem[k + j] + p * p - c * dc % p) % p;
        }
    }
    rem.truncate(dd);
    (fp_trim(quot), fp_trim(rem))
}

fn fp_rem(a: &FpPoly, d: &FpPoly, p: u64) -> FpPoly {
    fp_divrem(a, d, p).1
}

fn fp_gcd(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = fp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        fp_monic(&a, p)
    }
}

pub(crate) fn fp_xgcd(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly, FpPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (FpPoly, FpPoly) = (vec![1], Vec::new());
    let (mut t0, mut t1): (FpPoly, FpPoly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s2 = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t2 = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let inv = fp_inv(*r0.last().unwrap(), p);
    let sc = |v: &FpPoly| fp_trim(v.iter().map(|&c| c * inv % p).collect());
    (sc(&r0), sc(&s0), sc(&t0))
}

fn fp_powmod(base: &FpPoly, mut e: u64, m: &FpPoly, p: u64) -> FpPoly {
    let mut acc: FpPoly = vec![1];
    let mut b = fp_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = fp_rem(&fp_mul(&acc, &b, p), m, p);
        }
        e >>= 1;
        if e > 0 {
            b = fp_rem(&fp_mul(&b, &b, p), m, p);
        }
    }
    acc
}

fn fp_derivative(f: &FpPoly, p: u64) -> FpPoly {
    fp_trim(f.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect())
}

// ---- Z and Z/m arithmetic ----

fn ztrim(mut v: ZPoly) -> ZPoly {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(out)
}

fn zmul_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    ztrim(zmul(a, b).into_iter().map(|c| c.mod_floor(m)).collect())
}

fn zsub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    ztrim((0..n).map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).collect())
}

fn zadd_scaled(a: &ZPoly, b: &FpPoly, scale: &BigInt, m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    ztrim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&zero) + scale * BigInt::from(*b.get(i).unwrap_or(&0))).mod_floor(m))
            .collect(),
    )
}

fn symmetric_mod(a: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / 2;
    ztrim(
        a.iter()
            .map(|c| {
                let c = c.mod_floor(m);
                if c > half {
                    c - m
                } else {
                    c
                }
            })
            .collect(),
    )
}

pub(crate) fn content(a: &ZPoly) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive_part(a: &ZPoly) -> ZPoly {
    let c = content(a);
    if c.is_zero() {
        return a.clone();
    }
    let c = if a.last().unwrap().is_negative() { -c } else { c };
    a.iter().map(|x| x / &c).collect()
}

fn zexact_div(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    if b.len() > a.len() {
        return None;
    }
    let pa = zpoly_to_poly(a);
    let pb = zpoly_to_poly(b);
    let q = pa.exact_div(&pb)?;
    q.coeffs().iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
}

pub(crate) fn zpoly_to_poly(a: &ZPoly) -> Poly {
    Poly::from_coeffs(a.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

/// Clear denominators and content: the primitive integer polynomial
/// associated with `p`, positive leading coefficient.
pub(crate) fn poly_to_primitive(p: &Poly) -> ZPoly {
    let lcm = p.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: ZPoly = p.coeffs().iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    primitive_part(&ints)
}

/// Lexicographic k-subsets of 0..n.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
