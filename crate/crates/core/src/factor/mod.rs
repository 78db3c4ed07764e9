//! Irreducible factorization of Laurent polynomials over Q and the pairing
//! of primes with their bar-conjugates.

pub(crate) mod zassenhaus;

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, UnitFactor};
use crate::poly::Poly;

pub(crate) use zassenhaus::{poly_to_primitive, zpoly_to_poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymmetryTag {
    Symmetric,
    OnePlusT,
    Asymmetric,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimePower {
    pub prime: LaurentPoly,
    pub exponent: u32,
    pub symmetry_tag: SymmetryTag,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: UnitFactor,
    pub factors: Vec<PrimePower>,
}

/// Primes of a factorization grouped as the primary decomposition needs them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrimaryCollection {
    /// Symmetric primes, including 1 + t.
    pub symmetric: Vec<PrimePower>,
    /// Conjugate pairs (π, π̄), with π the canonically smaller member.
    pub pairs: Vec<(PrimePower, PrimePower)>,
    /// Asymmetric primes whose bar-partner does not occur.
    pub unmatched: Vec<PrimePower>,
}

pub fn symmetry_tag(prime: &LaurentPoly) -> SymmetryTag {
    if prime.associates(&LaurentPoly::from_ints(0, &[1, 1])) {
        SymmetryTag::OnePlusT
    } else if prime.associates(&prime.bar()) {
        SymmetryTag::Symmetric
    } else {
        SymmetryTag::Asymmetric
    }
}

/// Deterministic order on normalized polynomials: by span-degree, then by
/// coefficients from the top down.
pub fn canonical_cmp(a: &LaurentPoly, b: &LaurentPoly) -> Ordering {
    a.span_degree()
        .cmp(&b.span_degree())
        .then_with(|| a.body().coeffs().iter().rev().cmp(b.body().coeffs().iter().rev()))
}

impl Factorization {
    pub fn expand(&self) -> LaurentPoly {
        let mut acc = self.unit.to_laurent();
        for f in &self.factors {
            acc = &acc * &f.prime.pow(f.exponent);
        }
        acc
    }

    /// Factorization of the bar-conjugate, with primes renormalized.
    pub fn bar(&self) -> Factorization {
        let factors: Vec<PrimePower> = self
            .factors
            .iter()
            .map(|f| PrimePower { prime: f.prime.bar().normalized(), ..f.clone() })
            .collect();
        let mut out = Factorization { unit: UnitFactor::one(), factors };
        out.factors.sort_by(|a, b| canonical_cmp(&a.prime, &b.prime));
        let target = self.expand().bar();
        out.unit = target.unit_quotient(&out.expand()).ok().flatten().unwrap_or_else(UnitFactor::one);
        out
    }

    pub fn exponent_of(&self, prime: &LaurentPoly) -> u32 {
        self.factors.iter().find(|f| f.prime.associates(prime)).map_or(0, |f| f.exponent)
    }
}

/// Squarefree decomposition: pairwise coprime squarefree normalized factors
/// with multiplicities; their product is associate to `p`.
pub fn squarefree_decomposition(p: &LaurentPoly) -> Result<Vec<(LaurentPoly, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(yun(&p.body().monic())
        .into_iter()
        .map(|(f, m)| (LaurentPoly::from_poly(f), m))
        .collect())
}

fn yun(f: &Poly) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let c = df.exact_div(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        let b_next = b.exact_div(&a).expect("gcd divides");
        let c_next = d.exact_div(&a).expect("gcd divides");
        d = &c_next - &b_next.derivative();
        if !a.is_constant() {
            out.push((a.monic(), i));
        }
        b = b_next;
        i += 1;
    }
    out
}

/// Complete factorization over Q into normalized primes.
pub fn factor_rational(p: &LaurentPoly) -> Result<Factorization> {
    let mut factors = Vec::new();
    for (sq, m) in squarefree_decomposition(p)? {
        let z = poly_to_primitive(sq.body());
        for g in zassenhaus::factor_squarefree(&z) {
            let prime = LaurentPoly::from_poly(zpoly_to_poly(&g).monic());
            let symmetry_tag = symmetry_tag(&prime);
            factors.push(PrimePower { prime, exponent: m, symmetry_tag });
        }
    }
    factors.sort_by(|a, b| canonical_cmp(&a.prime, &b.prime));
    let mut out = Factorization { unit: UnitFactor::one(), factors };
    out.unit = p
        .unit_quotient(&out.expand())?
        .ok_or_else(|| Error::Internal("factorization does not multiply back".into()))?;
    Ok(out)
}

pub fn primary_collect(f: &Factorization) -> PrimaryCollection {
    let mut out = PrimaryCollection::default();
    let mut used = vec![false; f.factors.len()];
    for (i, pp) in f.factors.iter().enumerate() {
        if used[i] {
            continue;
        }
        used[i] = true;
        if pp.symmetry_tag != SymmetryTag::Asymmetric {
            out.symmetric.push(pp.clone());
            continue;
        }
        let partner = pp.prime.bar();
        match (i + 1..f.factors.len()).find(|&j| !used[j] && f.factors[j].prime.associates(&partner)) {
            Some(j) => {
                used[j] = true;
                out.pairs.push((pp.clone(), f.factors[j].clone()));
            }
            None => out.unmatched.push(pp.clone()),
        }
    }
    out
}
