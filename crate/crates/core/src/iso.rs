//! Norm classes R·R̄ modulo Δⁿ and isomorphism tests for Blanchfield forms.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::decompose::{decompose, CanonicalBlock};
use crate::error::{Error, Result};
use crate::form::BlanchfieldForm;
use crate::laurent::LaurentPoly;
use crate::symmetric::SymmetricPoly;
use crate::Rational;

pub const TRIAL_BOUND_VAR: &str = "BKIT_FACTOR_TRIAL_BOUND";
const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;

/// q·(Q*)² written as sign times a squarefree positive integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareClass {
    pub sign: i8,
    pub squarefree_part: BigUint,
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.sign < 0 { "-" } else { "+" }, self.squarefree_part)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Iso,
    NotIso,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Iso => "ISO",
            Verdict::NotIso => "NOT_ISO",
            Verdict::Unknown => "UNKNOWN",
        })
    }
}

/// A verdict and, for ISO, an R with R·R̄·P ≡ Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoOutcome {
    pub verdict: Verdict,
    pub certificate: Option<LaurentPoly>,
}

impl IsoOutcome {
    fn iso(r: LaurentPoly) -> Self {
        IsoOutcome { verdict: Verdict::Iso, certificate: Some(r) }
    }

    fn bare(verdict: Verdict) -> Self {
        IsoOutcome { verdict, certificate: None }
    }
}

/// Search space: exponents in [−exponent, exponent], coefficient numerators
/// and denominators bounded by `height`, at most `max_candidates` tries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBound {
    pub exponent: u32,
    pub height: u32,
    pub max_candidates: u64,
}

impl Default for SearchBound {
    fn default() -> Self {
        SearchBound { exponent: 1, height: 2, max_candidates: 2_000_000 }
    }
}

impl SearchBound {
    pub fn uniform(b: u32) -> Self {
        SearchBound { exponent: b, height: b.max(1), ..Default::default() }
    }
}

fn is_unit_mod(r: &LaurentPoly, delta: &SymmetricPoly) -> bool {
    !r.is_zero() && r.gcd(&delta.s_substitute()).is_unit()
}

/// The s-form of R·R̄ reduced mod Δⁿ.
pub fn norm_map(r: &LaurentPoly, delta: &SymmetricPoly, n: u32) -> Result<SymmetricPoly> {
    if !is_unit_mod(r, delta) {
        return Err(Error::NotUnit);
    }
    let nr = SymmetricPoly::from_bar_fixed(&(r * &r.bar())).expect("R·R̄ is bar-fixed");
    nr.rem(&delta.pow(n))
}

/// R·R̄·P ≡ Q mod Δⁿ.
pub fn verify_certificate(r: &LaurentPoly, p: &SymmetricPoly, q: &SymmetricPoly, delta: &SymmetricPoly, n: u32) -> bool {
    match norm_map(r, delta, n) {
        Ok(nr) => nr.mul(p).sub(q).rem(&delta.pow(n)).is_ok_and(|x| x.is_zero()),
        Err(_) => false,
    }
}

/// R = 1 + Σ Rᵢ·Δⁱ with norm_map(R) ≡ P mod Δⁿ, for P ≡ 1 mod Δ.
pub fn lift_unit_to_norm(p: &SymmetricPoly, delta: &SymmetricPoly, n: u32) -> Result<LaurentPoly> {
    if delta.degree().unwrap_or(0) == 0 {
        return Err(Error::PreconditionViolated("modulus must be nonconstant".into()));
    }
    if !p.sub(&SymmetricPoly::one()).rem(delta)?.is_zero() {
        return Err(Error::PreconditionViolated(format!("{p} is not 1 modulo {delta}")));
    }
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let mut r = SymmetricPoly::one();
    let mut di = delta.clone();
    for i in 1..n {
        let e = p.sub(&r.mul(&r)).rem(&di.mul(delta))?;
        let (e1, rest) = e.div_rem(&di)?;
        if !rest.is_zero() {
            return Err(Error::Internal(format!("lift error not divisible at step {i}")));
        }
        let ri = e1.scale(&half).rem(delta)?;
        r = r.add(&ri.mul(&di));
        di = di.mul(delta);
    }
    let r = r.s_substitute();
    if norm_map(&r, delta, n)?.sub(&p.rem(&delta.pow(n))?).rem(&delta.pow(n))?.is_zero() {
        Ok(r)
    } else {
        Err(Error::Internal("lifted unit fails the norm check".into()))
    }
}

fn trial_bound() -> u64 {
    std::env::var(TRIAL_BOUND_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&b: &u64| b >= 2)
        .unwrap_or(DEFAULT_TRIAL_BOUND)
}

pub fn rational_square_class(q: &Rational) -> Result<SquareClass> {
    rational_square_class_with_bound(q, trial_bound())
}

pub fn rational_square_class_with_bound(q: &Rational, bound: u64) -> Result<SquareClass> {
    if q.is_zero() {
        return Err(Error::ZeroInput);
    }
    let sign = if q.is_negative() { -1 } else { 1 };
    let mut m = (q.numer().abs() * q.denom()).to_biguint().expect("positive");
    let mut kernel = BigUint::one();
    let mut p = 2u64;
    while p <= bound {
        let pb = BigUint::from(p);
        if &pb * &pb > m {
            break;
        }
        let mut e = 0u32;
        loop {
            let (d, r) = m.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            m = d;
            e += 1;
        }
        if e % 2 == 1 {
            kernel *= &pb;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > BigUint::one() {
        let root = m.sqrt();
        if &root * &root == m {
            // a square cofactor, whatever its factors
        } else if m < BigUint::from(bound) * BigUint::from(bound) || p <= bound {
            kernel *= m;
        } else {
            return Err(Error::FactorBoundExceeded(m.to_string()));
        }
    }
    Ok(SquareClass { sign, squarefree_part: kernel })
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let (a, b) = (q.numer().to_biguint()?, q.denom().to_biguint()?);
    let (ra, rb) = (a.sqrt(), b.sqrt());
    (&ra * &ra == a && &rb * &rb == b)
        .then(|| Rational::new(BigInt::from_biguint(Sign::Plus, ra), BigInt::from_biguint(Sign::Plus, rb)))
}

/// Exact test for Δ = t + 2 + t⁻¹, i.e. Δ_s = s + 2.
pub fn isotest_one_plus_t(p: &SymmetricPoly, q: &SymmetricPoly, n: u32) -> Result<IsoOutcome> {
    if n == 0 {
        return Err(Error::PreconditionViolated("exponent must be positive".into()));
    }
    let at = Rational::from_integer(BigInt::from(-2));
    let (a, b) = (p.eval(&at), q.eval(&at));
    if a.is_zero() || b.is_zero() {
        return Err(Error::PreconditionViolated("P and Q must not vanish at t = -1".into()));
    }
    if rational_square_class(&a)? != rational_square_class(&b)? {
        return Ok(IsoOutcome::bare(Verdict::NotIso));
    }
    let c = rational_sqrt(&(&b / &a)).ok_or_else(|| Error::Internal("square class agreed without a root".into()))?;
    let delta = SymmetricPoly::from_ints(&[2, 1]);
    let dn = delta.pow(n);
    let cp = p.scale(&(&c * &c));
    let inv = cp
        .poly()
        .inverse_mod(dn.poly())
        .ok_or_else(|| Error::Internal("P not invertible".into()))?;
    let u = q.mul(&SymmetricPoly::new(inv)).rem(&dn)?;
    let r = lift_unit_to_norm(&u, &delta, n)?.scale(&c);
    if !verify_certificate(&r, p, q, &delta, n) {
        return Err(Error::Internal("certificate fails verification".into()));
    }
    Ok(IsoOutcome::iso(r))
}

/// Rationals of height ≤ h grouped by size max(|num|, den), size 1 first.
fn values_by_size(h: u32) -> Vec<Vec<Rational>> {
    let mut out = vec![Vec::new(); h as usize + 1];
    out[0].push(Rational::zero());
    for den in 1..=h as i64 {
        for num in 1..=h as i64 {
            if num.gcd(&den) == 1 {
                let size = num.max(den) as usize;
                for v in [num, -num] {
                    out[size].push(Rational::new(v.into(), den.into()));
                }
            }
        }
    }
    out
}

/// Next composition of `total` into parts bounded by `h`, lexicographically.
fn next_composition(c: &mut [u32], h: u32) -> bool {
    let k = c.len();
    // find rightmost position (not last) that can grow while the tail can shrink
    let mut tail: u32 = c[k - 1];
    for i in (0..k - 1).rev() {
        if c[i] < h && tail > 0 {
            c[i] += 1;
            let mut rest = tail - 1;
            for x in c.iter_mut().skip(i + 1).rev() {
                let take = rest.min(h);
                *x = take;
                rest -= take;
            }
            // smallest lexicographic arrangement puts the mass at the end
            return true;
        }
        tail += c[i];
    }
    false
}

fn first_composition(k: usize, total: u32, h: u32) -> Option<Vec<u32>> {
    if total > h * k as u32 {
        return None;
    }
    let mut c = vec![0; k];
    let mut rest = total;
    for x in c.iter_mut().rev() {
        let take = rest.min(h);
        *x = take;
        rest -= take;
    }
    Some(c)
}

/// Searches R by increasing total size; the first verified R in that order wins.
pub fn isotest_search(p: &SymmetricPoly, q: &SymmetricPoly, pi: &LaurentPoly, n: u32, bound: SearchBound) -> Result<IsoOutcome> {
    let pi_s = match SymmetricPoly::from_bar_fixed(pi) {
        Some(s) => s,
        None => pi
            .normalize_symmetric()?
            .ok_or_else(|| Error::PreconditionViolated(format!("{pi} is not symmetric")))?,
    };
    let coprime = |x: &SymmetricPoly| x.gcd(&pi_s).degree() == Some(0);
    if !coprime(p) || !coprime(q) {
        return Err(Error::PreconditionViolated("P and Q must be prime to π".into()));
    }
    if p.sub(q).rem(&pi_s.pow(n))?.is_zero() {
        return Ok(IsoOutcome::iso(LaurentPoly::one()));
    }
    let values = values_by_size(bound.height);
    let k = 2 * bound.exponent as usize + 1;
    let low = -(bound.exponent as i64);
    let check = |coeffs: &Vec<Rational>| {
        let r = LaurentPoly::from_terms(coeffs.iter().enumerate().map(|(i, c)| (low + i as i64, c.clone())));
        verify_certificate(&r, p, q, &pi_s, n).then_some(r)
    };
    let mut tried = 0u64;
    let mut chunk: Vec<Vec<Rational>> = Vec::with_capacity(4096);
    for total in 1..=bound.height * k as u32 {
        let Some(mut comp) = first_composition(k, total, bound.height) else { break };
        loop {
            let mut idx = vec![0usize; k];
            loop {
                chunk.push(idx.iter().zip(&comp).map(|(&i, &s)| values[s as usize][i].clone()).collect());
                if chunk.len() == chunk.capacity() {
                    tried += chunk.len() as u64;
                    if let Some(r) = chunk.par_iter().find_map_first(check) {
                        return Ok(IsoOutcome::iso(r));
                    }
                    chunk.clear();
                    if tried >= bound.max_candidates {
                        return Ok(IsoOutcome::bare(Verdict::Unknown));
                    }
                }
                // mixed-radix step over the value lists of each size
                let mut pos = k;
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < values[comp[pos] as usize].len() {
                        break;
                    }
                    idx[pos] = 0;
                    if pos == 0 {
                        pos = usize::MAX;
                        break;
                    }
                }
                if pos == usize::MAX {
                    break;
                }
            }
            if !next_composition(&mut comp, bound.height) {
                break;
            }
        }
    }
    if let Some(r) = chunk.par_iter().find_map_first(check) {
        return Ok(IsoOutcome::iso(r));
    }
    Ok(IsoOutcome::bare(Verdict::Unknown))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockVerdict {
    pub block: CanonicalBlock,
    pub verdict: Verdict,
    /// For a matched symmetric block, R with R·R̄·P₁ ≡ P₂.
    pub certificate: Option<LaurentPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoReport {
    pub verdict: Verdict,
    pub certificate: Option<LaurentPoly>,
    pub blocks: Vec<BlockVerdict>,
}

fn is_one_plus_t_square(pi: &LaurentPoly) -> bool {
    SymmetricPoly::from_bar_fixed(pi).is_some_and(|s| s == SymmetricPoly::from_ints(&[2, 1]))
}

fn test_blocks(a: &CanonicalBlock, b: &CanonicalBlock, bound: SearchBound) -> Result<IsoOutcome> {
    match (a, b) {
        (CanonicalBlock::SymmetricCyclic { pi, n, p: p1 }, CanonicalBlock::SymmetricCyclic { p: p2, .. }) => {
            if is_one_plus_t_square(pi) {
                isotest_one_plus_t(p1, p2, *n)
            } else {
                isotest_search(p1, p2, pi, *n, bound)
            }
        }
        _ => Ok(IsoOutcome::bare(Verdict::Iso)),
    }
}

fn find_matching(
    i: usize,
    edges: &[Vec<IsoOutcome>],
    used: &mut [bool],
    pick: &mut Vec<usize>,
) -> bool {
    if i == edges.len() {
        return true;
    }
    for j in 0..edges[i].len() {
        if !used[j] && edges[i][j].verdict == Verdict::Iso {
            used[j] = true;
            pick.push(j);
            if find_matching(i + 1, edges, used, pick) {
                return true;
            }
            pick.pop();
            used[j] = false;
        }
    }
    false
}

pub fn isotest_forms(f1: &BlanchfieldForm, f2: &BlanchfieldForm, bound: SearchBound) -> Result<IsoReport> {
    if f1.module() != f2.module() {
        return Ok(IsoReport { verdict: Verdict::NotIso, certificate: None, blocks: Vec::new() });
    }
    let (d1, d2) = (decompose(f1)?, decompose(f2)?);
    let b1 = d1.blocks;
    let b2 = d2.blocks;
    let group_key = |b: &CanonicalBlock| (b.kind(), b.pi().clone(), b.n());
    let mut out: Vec<Option<BlockVerdict>> = vec![None; b1.len()];
    let mut done = vec![false; b1.len()];
    for i in 0..b1.len() {
        if done[i] {
            continue;
        }
        let key = group_key(&b1[i]);
        let left: Vec<usize> = (0..b1.len()).filter(|&x| group_key(&b1[x]) == key).collect();
        let right: Vec<usize> = (0..b2.len()).filter(|&x| group_key(&b2[x]) == key).collect();
        for &x in &left {
            done[x] = true;
        }
        if left.len() != right.len() {
            // same module, so this only happens on a decomposition bug
            return Err(Error::Internal("block multisets differ for equal modules".into()));
        }
        let edges: Vec<Vec<IsoOutcome>> = left
            .iter()
            .map(|&x| right.iter().map(|&y| test_blocks(&b1[x], &b2[y], bound)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        let mut pick = Vec::new();
        let status = if find_matching(0, &edges, &mut vec![false; right.len()], &mut pick) {
            for (a, &j) in pick.iter().enumerate() {
                out[left[a]] = Some(BlockVerdict {
                    block: b1[left[a]].clone(),
                    verdict: Verdict::Iso,
                    certificate: edges[a][j].certificate.clone(),
                });
            }
            continue;
        } else if left.len() == 1 && edges[0][0].verdict == Verdict::NotIso {
            Verdict::NotIso
        } else {
            Verdict::Unknown
        };
        for &x in &left {
            out[x] = Some(BlockVerdict { block: b1[x].clone(), verdict: status, certificate: None });
        }
    }
    let blocks: Vec<BlockVerdict> = out.into_iter().map(|b| b.expect("every block visited")).collect();
    let verdict = if blocks.iter().any(|b| b.verdict == Verdict::NotIso) {
        Verdict::NotIso
    } else if blocks.iter().any(|b| b.verdict == Verdict::Unknown) {
        Verdict::Unknown
    } else {
        Verdict::Iso
    };
    let symmetric: Vec<&BlockVerdict> = blocks.iter().filter(|b| b.block.kind() == "symmetric").collect();
    let certificate = match (verdict, symmetric.as_slice()) {
        (Verdict::Iso, [only]) => only.certificate.clone(),
        _ => None,
    };
    Ok(IsoReport { verdict, certificate, blocks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::pairing_from_matrix;
    use crate::matrix::LambdaMatrix;
    use crate::module::AlexanderModule;
    use crate::torsion::TorsionValue;

    fn lp(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(low, c)
    }

    fn sp(c: &[i64]) -> SymmetricPoly {
        SymmetricPoly::from_ints(c)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn sq(sign: i8, k: u32) -> SquareClass {
        SquareClass { sign, squarefree_part: BigUint::from(k) }
    }

    #[test]
    fn norm_map_examples() {
        let d = sp(&[2, 1]);
        // (at + b) gives (a - b)^2 mod s + 2
        for (a, b) in [(3, 1), (1, 1), (-2, 5)] {
            let r = lp(0, &[b, a]);
            if a == b {
                assert_eq!(norm_map(&r, &d, 1), Err(Error::NotUnit));
            } else {
                assert_eq!(norm_map(&r, &d, 1).unwrap(), SymmetricPoly::constant(q((a - b) * (a - b), 1)));
            }
        }
        assert_eq!(norm_map(&LaurentPoly::one(), &d, 3).unwrap(), SymmetricPoly::one());
        assert_eq!(norm_map(&LaurentPoly::t(), &d, 3).unwrap(), SymmetricPoly::one());
    }

    #[test]
    fn lift_examples() {
        let d = sp(&[2, 1]);
        let r = lift_unit_to_norm(&sp(&[3, 1]), &d, 2).unwrap();
        assert_eq!(r, LaurentPoly::from_terms([(-1, q(1, 2)), (0, q(2, 1)), (1, q(1, 2))]));
        assert_eq!(lift_unit_to_norm(&SymmetricPoly::one(), &d, 4).unwrap(), LaurentPoly::one());
        assert_eq!(lift_unit_to_norm(&sp(&[3, 1]), &d, 1).unwrap(), LaurentPoly::one());
        assert!(matches!(lift_unit_to_norm(&sp(&[2]), &d, 2), Err(Error::PreconditionViolated(_))));
        // deeper lift over a quadratic modulus
        let d = sp(&[-3, 0, 1]);
        let p = SymmetricPoly::one().add(&d.mul(&sp(&[1, 2]))).add(&d.pow(3).mul(&sp(&[5])));
        let r = lift_unit_to_norm(&p, &d, 4).unwrap();
        assert!(verify_certificate(&r, &SymmetricPoly::one(), &p.rem(&d.pow(4)).unwrap(), &d, 4));
    }

    #[test]
    fn square_classes() {
        assert_eq!(rational_square_class(&q(18, 1)).unwrap(), sq(1, 2));
        assert_eq!(rational_square_class(&q(-8, 1)).unwrap(), sq(-1, 2));
        assert_eq!(rational_square_class(&q(4, 1)).unwrap(), sq(1, 1));
        assert_eq!(rational_square_class(&q(3, 12)).unwrap(), sq(1, 1));
        assert_eq!(rational_square_class(&q(5, 7)).unwrap(), sq(1, 35));
        assert_eq!(rational_square_class(&q(0, 1)), Err(Error::ZeroInput));
        let big = Rational::from_integer(BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64));
        assert!(matches!(rational_square_class_with_bound(&big, 1000), Err(Error::FactorBoundExceeded(_))));
        let sq_big = Rational::from_integer(BigInt::from(1_000_003u64).pow(2) * 3);
        assert_eq!(rational_square_class_with_bound(&sq_big, 1000).unwrap(), sq(1, 3));
    }

    #[test]
    fn one_plus_t_examples() {
        let one = SymmetricPoly::one();
        assert_eq!(isotest_one_plus_t(&one, &sp(&[2]), 1).unwrap().verdict, Verdict::NotIso);
        let r = isotest_one_plus_t(&one, &sp(&[4]), 1).unwrap();
        assert_eq!(r.verdict, Verdict::Iso);
        assert!(verify_certificate(r.certificate.as_ref().unwrap(), &one, &sp(&[4]), &sp(&[2, 1]), 1));
        let r = isotest_one_plus_t(&one, &sp(&[3, 1]), 2).unwrap();
        assert_eq!(r.certificate.unwrap(), LaurentPoly::from_terms([(-1, q(1, 2)), (0, q(2, 1)), (1, q(1, 2))]));
        let r = isotest_one_plus_t(&sp(&[3, 5, 1]), &sp(&[1, 2]), 3).unwrap();
        assert_eq!(r.verdict, Verdict::Iso);
        assert!(isotest_one_plus_t(&sp(&[2, 1]), &one, 1).is_err());
    }

    #[test]
    fn search_examples() {
        let pi = lp(-1, &[1, -1, 1]);
        let pi_s = sp(&[-1, 1]);
        let p = sp(&[1, 1]);
        assert_eq!(isotest_search(&p, &p, &pi, 2, SearchBound::default()).unwrap().certificate, Some(LaurentPoly::one()));
        let r0 = lp(0, &[1, 2]);
        let planted = norm_map(&r0, &pi_s, 2).unwrap().mul(&p).rem(&pi_s.pow(2)).unwrap();
        let r = isotest_search(&p, &planted, &pi, 2, SearchBound::uniform(2)).unwrap();
        assert_eq!(r.verdict, Verdict::Iso);
        assert!(verify_certificate(r.certificate.as_ref().unwrap(), &p, &planted, &pi_s, 2));
        let r = isotest_search(&SymmetricPoly::one(), &sp(&[2]), &pi, 1, SearchBound::uniform(1)).unwrap();
        assert_eq!(r.verdict, Verdict::Unknown);
        assert!(isotest_search(&pi_s, &p, &pi, 1, SearchBound::default()).is_err());
    }

    #[test]
    fn search_is_deterministic() {
        let pi = lp(-1, &[1, -3, 1]);
        let pi_s = sp(&[-3, 1]);
        let planted = norm_map(&lp(-1, &[1, 0, 1]), &pi_s, 1).unwrap().rem(&pi_s).unwrap();
        let a = isotest_search(&SymmetricPoly::one(), &planted, &pi, 1, SearchBound::uniform(1)).unwrap();
        let b = isotest_search(&SymmetricPoly::one(), &planted, &pi, 1, SearchBound::uniform(1)).unwrap();
        assert_eq!(a.verdict, Verdict::Iso);
        assert_eq!(a, b);
    }

    #[test]
    fn compositions_cover_level() {
        let mut c = first_composition(3, 2, 2).unwrap();
        let mut seen = vec![c.clone()];
        while next_composition(&mut c, 2) {
            seen.push(c.clone());
        }
        assert_eq!(seen, vec![vec![0, 0, 2], vec![0, 1, 1], vec![0, 2, 0], vec![1, 0, 1], vec![1, 1, 0], vec![2, 0, 0]]);
    }

    fn cyclic_form(num: i64, d: &LaurentPoly) -> BlanchfieldForm {
        let m = AlexanderModule::new(vec![d.clone()]).unwrap();
        BlanchfieldForm::new(m, vec![vec![TorsionValue::reduce(&LaurentPoly::from_int(num), d).unwrap()]]).unwrap()
    }

    #[test]
    fn forms_examples() {
        let d = lp(-1, &[1, 2, 1]);
        let r = isotest_forms(&cyclic_form(1, &d), &cyclic_form(2, &d), SearchBound::default()).unwrap();
        assert_eq!(r.verdict, Verdict::NotIso);
        let r = isotest_forms(&cyclic_form(1, &d), &cyclic_form(9, &d), SearchBound::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Iso);
        assert!(r.certificate.is_some());

        let d = lp(-1, &[1, -1, 1]);
        let r = isotest_forms(&cyclic_form(1, &d), &cyclic_form(2, &d), SearchBound::uniform(1)).unwrap();
        assert_eq!(r.verdict, Verdict::Unknown);

        let q = lp(0, &[-2, 1]);
        let a = LambdaMatrix::square(vec![vec![LaurentPoly::zero(), q.clone()], vec![q.bar(), LaurentPoly::zero()]]).unwrap();
        let b = LambdaMatrix::square(vec![vec![LaurentPoly::zero(), q.bar()], vec![q.clone(), LaurentPoly::zero()]]).unwrap();
        let r = isotest_forms(&pairing_from_matrix(&a).unwrap(), &pairing_from_matrix(&b).unwrap(), SearchBound::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Iso);
        assert_eq!(r.blocks.len(), 1);

        let other = cyclic_form(1, &lp(-1, &[1, -3, 1]));
        let r = isotest_forms(&cyclic_form(1, &d), &other, SearchBound::default()).unwrap();
        assert_eq!((r.verdict, r.blocks.len()), (Verdict::NotIso, 0));
    }
}
