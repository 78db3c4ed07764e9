#![allow(dead_code)]

use bkit::decompose::{canonical_pair_prime, CanonicalBlock};
use bkit::{LambdaMatrix, LaurentPoly, Rational, SymmetricPoly};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn lp(low: i64, c: &[i64]) -> LaurentPoly {
    LaurentPoly::from_ints(low, c)
}

/// Laurent polynomial with at most `span + 1` terms starting at `low`.
pub fn rand_laurent(r: &mut ChaCha8Rng, low: i64, span: usize, h: i64) -> LaurentPoly {
    let c: Vec<i64> = (0..=span).map(|_| r.gen_range(-h..=h)).collect();
    lp(low, &c)
}

/// c₀ + Σ c_k (t^k + t^-k) with k ≤ span/2.
pub fn rand_bar_fixed(r: &mut ChaCha8Rng, span: usize, h: i64) -> LaurentPoly {
    let k = span / 2;
    let mut terms = vec![(0, q(r.gen_range(-h..=h)))];
    for e in 1..=k as i64 {
        let c = q(r.gen_range(-h..=h));
        terms.push((e, c.clone()));
        terms.push((-e, c));
    }
    LaurentPoly::from_terms(terms)
}

pub fn rand_hermitian(r: &mut ChaCha8Rng, n: usize, span: usize, h: i64) -> LambdaMatrix {
    let mut a = LambdaMatrix::zeros(n, n);
    for i in 0..n {
        a[(i, i)] = rand_bar_fixed(r, span, h);
        for j in i + 1..n {
            let low = -(r.gen_range(0..=span) as i64);
            let e = rand_laurent(r, low, span, h);
            a[(j, i)] = e.bar();
            a[(i, j)] = e;
        }
    }
    a
}

fn is_rational_square(x: i64) -> bool {
    x >= 0 && ((x as f64).sqrt().round() as i64).pow(2) == x
}

/// t + c + t⁻¹ irreducible with value at 1 nonzero.
pub fn rand_symmetric_prime(r: &mut ChaCha8Rng) -> LaurentPoly {
    loop {
        let c = r.gen_range(-6i64..=6);
        if c != -2 && !is_rational_square(c * c - 4) {
            return lp(-1, &[1, c, 1]);
        }
    }
}

/// An irreducible normalized π with π ≄ π̄, canonically ordered against π̄.
pub fn rand_asymmetric_prime(r: &mut ChaCha8Rng) -> LaurentPoly {
    loop {
        if r.gen_bool(0.5) {
            let a = r.gen_range(-4i64..=4);
            if a.abs() > 1 {
                return canonical_pair_prime(&lp(0, &[-a, 1]));
            }
        } else {
            let (b, c) = (r.gen_range(-4i64..=4), r.gen_range(-4i64..=4));
            let symmetric = c == 1 || (c == -1 && b == 0);
            if c != 0 && !symmetric && !is_rational_square(b * b - 4 * c) {
                return canonical_pair_prime(&lp(0, &[c, b, 1]));
            }
        }
    }
}

pub fn one_plus_t() -> LaurentPoly {
    lp(0, &[1, 1])
}

pub fn one_plus_t_square() -> LaurentPoly {
    lp(-1, &[1, 2, 1])
}

/// A polynomial in s of degree < deg, prime to `pi_s`.
pub fn rand_unit_numerator(r: &mut ChaCha8Rng, pi_s: &SymmetricPoly, deg: usize) -> SymmetricPoly {
    loop {
        let d = r.gen_range(0..deg.max(1));
        let c: Vec<i64> = (0..=d).map(|_| r.gen_range(-3i64..=3)).collect();
        let p = SymmetricPoly::from_ints(&c);
        if !p.is_zero() && p.gcd(pi_s).degree() == Some(0) {
            return p;
        }
    }
}

pub fn rand_block(r: &mut ChaCha8Rng) -> CanonicalBlock {
    let n = r.gen_range(1..=3u32);
    match r.gen_range(0..4) {
        0 => {
            let pi = rand_symmetric_prime(r);
            let pi_s = SymmetricPoly::from_bar_fixed(&pi).unwrap();
            let p = rand_unit_numerator(r, &pi_s, n as usize);
            CanonicalBlock::SymmetricCyclic { pi, n, p }
        }
        1 => {
            let pi = one_plus_t_square();
            let pi_s = SymmetricPoly::from_bar_fixed(&pi).unwrap();
            let p = rand_unit_numerator(r, &pi_s, n as usize);
            CanonicalBlock::SymmetricCyclic { pi, n, p }
        }
        2 => CanonicalBlock::HyperbolicPair { pi: rand_asymmetric_prime(r), n },
        _ => CanonicalBlock::HyperbolicPair { pi: one_plus_t(), n: [1, 3][r.gen_range(0..2)] },
    }
}

/// (kind, π coefficients, n), sortable.
pub fn block_shape(b: &CanonicalBlock) -> (&'static str, Vec<(i64, Rational)>, u32) {
    (b.kind(), b.pi().terms().collect(), b.n())
}

pub fn is_zero_mod(x: &LaurentPoly, m: &LaurentPoly) -> bool {
    x.is_zero() || m.divides(x)
}

pub fn rational_zero() -> Rational {
    Rational::zero()
}
