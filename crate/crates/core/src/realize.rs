//! Hermitian presentation matrices realizing modules, cyclic forms and
//! canonical blocks, plus the coefficient data of a surgery presentation.

use std::collections::BTreeMap;

use crate::decompose::{decompose, CanonicalBlock};
use crate::error::{Error, Result};
use crate::factor::{symmetry_tag, SymmetryTag};
use crate::form::BlanchfieldForm;
use crate::laurent::LaurentPoly;
use crate::matrix::LambdaMatrix;
use crate::module::{multiplicity, AlexanderModule};
use crate::symmetric::SymmetricPoly;
use crate::torsion::TorsionValue;
use crate::Rational;
use num_traits::Zero;

/// R₁ = Δ, R₂ = −P and Rⱼ = Qⱼ·R_{j+1} − R_{j+2} down to a nonzero constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EuclideanChain {
    pub r: Vec<SymmetricPoly>,
    pub q: Vec<SymmetricPoly>,
    pub last: Rational,
}

impl EuclideanChain {
    pub fn new(delta: &SymmetricPoly, p: &SymmetricPoly) -> Result<Self> {
        if delta.value_at_one().is_zero() {
            return Err(Error::SingularAtOne);
        }
        if delta.degree().unwrap_or(0) == 0 {
            return Err(Error::PreconditionViolated("order must be a nonconstant polynomial".into()));
        }
        let p = if p.degree() > delta.degree() { p.rem(delta)? } else { p.clone() };
        if p.is_zero() || !p.gcd(delta).degree().is_some_and(|d| d == 0) {
            return Err(Error::NotCoprime);
        }
        let mut r = vec![delta.clone(), p.neg()];
        let mut q = Vec::new();
        while r.last().unwrap().degree() != Some(0) {
            let j = r.len() - 2;
            let (qj, rem) = r[j].div_rem(&r[j + 1])?;
            q.push(qj);
            r.push(rem.neg());
        }
        let last = r.last().unwrap().poly().coeff(0);
        Ok(EuclideanChain { r, q, last })
    }

    pub fn k(&self) -> usize {
        self.q.len()
    }

    /// Checks Rⱼ = Qⱼ·R_{j+1} − R_{j+2} and decreasing degrees past R₂.
    pub fn is_consistent(&self) -> bool {
        (0..self.k()).all(|j| self.r[j] == self.q[j].mul(&self.r[j + 1]).sub(&self.r[j + 2]))
            && self.r[1..].windows(2).all(|w| w[1].degree() < w[0].degree())
    }
}

/// Hermitian A with det A ≐ Δ and (−A⁻¹)₁₁ ≡ P/Δ.
pub fn realize_cyclic_form(delta: &SymmetricPoly, p: &SymmetricPoly) -> Result<LambdaMatrix> {
    let chain = EuclideanChain::new(delta, p)?;
    let a = chain_matrix(&chain);
    let d = delta.s_substitute();
    let r = LaurentPoly::constant(chain.last.clone());
    let det = if chain.k() == 0 { d.scale(&chain.last.recip()) } else { &r * &d };
    if a.determinant() != det {
        return Err(Error::Internal("determinant of realized matrix".into()));
    }
    let corner = if a.n() == 1 { LaurentPoly::one() } else { a.minor(0, 0).determinant() };
    let want = TorsionValue::reduce(&p.s_substitute(), &d)?;
    if TorsionValue::reduce(&-corner, &a.determinant())? != want {
        return Err(Error::Internal("corner entry of -A^-1".into()));
    }
    Ok(a)
}

fn chain_matrix(chain: &EuclideanChain) -> LambdaMatrix {
    let k = chain.k();
    if k == 0 {
        // Δ / (−P) with −P = R₂ constant
        let c = chain.last.recip();
        return LambdaMatrix::square(vec![vec![chain.r[0].s_substitute().scale(&c)]]).expect("1x1");
    }
    let r = LaurentPoly::constant(chain.last.clone());
    let mut a = LambdaMatrix::zeros(k + 1, k + 1);
    for j in 0..k {
        a[(j, j)] = chain.q[j].s_substitute();
    }
    for j in 0..k.saturating_sub(1) {
        a[(j, j + 1)] = LaurentPoly::one();
        a[(j + 1, j)] = LaurentPoly::one();
    }
    a[(k - 1, k)] = r.clone();
    a[(k, k - 1)] = r.clone();
    a[(k, k)] = &r * &chain.r[k].s_substitute();
    a
}

pub fn direct_sum(blocks: &[LambdaMatrix]) -> LambdaMatrix {
    LambdaMatrix::direct_sum(blocks)
}

fn one_plus_t() -> LaurentPoly {
    LaurentPoly::from_ints(0, &[1, 1])
}

fn hyperbolic_matrix(q: &LaurentPoly) -> LambdaMatrix {
    LambdaMatrix::square(vec![vec![LaurentPoly::zero(), q.clone()], vec![q.bar(), LaurentPoly::zero()]]).expect("2x2")
}

fn symmetric_one_by_one(d: &LaurentPoly) -> Result<LambdaMatrix> {
    let s = d
        .normalize_symmetric()?
        .ok_or_else(|| Error::Internal(format!("{d} has no symmetric normal form")))?;
    LambdaMatrix::square(vec![vec![s.s_substitute()]])
}

pub fn realize_module(m: &AlexanderModule) -> Result<LambdaMatrix> {
    let verdict = m.classify();
    if !verdict.realizable {
        return Err(Error::NotRealizable(verdict.violations));
    }
    let opt = one_plus_t();
    let mut odd: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    let mut cyclic = Vec::new();
    for (i, d) in m.factors().iter().enumerate() {
        let e = multiplicity(d, &opt);
        if e % 2 == 0 {
            cyclic.push(symmetric_one_by_one(d)?);
            continue;
        }
        odd.entry(e).or_default().push(i);
        let rest = d.exact_div(&opt.pow(e)).expect("power divides");
        if !rest.is_unit() {
            cyclic.push(symmetric_one_by_one(&rest)?);
        }
    }
    let mut blocks = Vec::new();
    for (e, idx) in odd {
        for _ in idx.chunks(2) {
            blocks.push(hyperbolic_matrix(&opt.pow(e)));
        }
    }
    blocks.extend(cyclic);
    Ok(direct_sum(&blocks))
}

pub fn realize_block(b: &CanonicalBlock) -> Result<LambdaMatrix> {
    match b {
        CanonicalBlock::SymmetricCyclic { pi, n, p } => {
            let pi_s = match SymmetricPoly::from_bar_fixed(pi) {
                Some(s) => s,
                None => pi
                    .normalize_symmetric()?
                    .ok_or_else(|| Error::PreconditionViolated(format!("{pi} is not symmetric")))?,
            };
            realize_cyclic_form(&pi_s.pow(*n), p)
        }
        CanonicalBlock::HyperbolicPair { pi, n } => {
            let ok = match symmetry_tag(&pi.normalized()) {
                SymmetryTag::Asymmetric => true,
                SymmetryTag::OnePlusT => n % 2 == 1,
                SymmetryTag::Symmetric => false,
            };
            if !ok || *n == 0 {
                return Err(Error::PreconditionViolated(format!("no hyperbolic block over ({pi})^{n}")));
            }
            Ok(hyperbolic_matrix(&pi.pow(*n)))
        }
    }
}

/// A matrix presenting the same module with an isomorphic form.
pub fn realize_form(f: &BlanchfieldForm) -> Result<LambdaMatrix> {
    let r = decompose(f)?;
    let blocks = r.blocks.iter().map(realize_block).collect::<Result<Vec<_>>>()?;
    Ok(direct_sum(&blocks))
}

/// Coefficients r_{ij}^{(k)} of a hermitian matrix and the linking numbers of
/// the curves γ_{ik}, 1 ≤ i ≤ n, 0 ≤ k ≤ d. Indices i, j are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurgeryRecipe {
    pub n: usize,
    pub d: u32,
    pub r: BTreeMap<(usize, usize, i64), Rational>,
    pub admissible: bool,
}

impl SurgeryRecipe {
    pub fn coefficient(&self, i: usize, j: usize, k: i64) -> Rational {
        self.r.get(&(i, j, k)).cloned().unwrap_or_else(Rational::zero)
    }

    /// lk(γ_{ik}, γ_{jl}).
    pub fn linking(&self, (i, k): (usize, u32), (j, l): (usize, u32)) -> Rational {
        if l == 0 {
            self.coefficient(i, j, k as i64)
        } else if k == 0 {
            self.coefficient(j, i, l as i64)
        } else {
            Rational::zero()
        }
    }

    /// Every entry of the table, rows ordered by (i, k, j, l).
    pub fn table(&self) -> Vec<((usize, u32), (usize, u32), Rational)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for k in 0..=self.d {
                for j in 1..=self.n {
                    for l in 0..=self.d {
                        out.push(((i, k), (j, l), self.linking((i, k), (j, l))));
                    }
                }
            }
        }
        out
    }

    /// Σ_l lk(γ_{il}, γ_{j,l−k}), the linking of a lift with a translate.
    pub fn lift_linking(&self, i: usize, j: usize, k: i64) -> Rational {
        let d = self.d as i64;
        let mut acc = Rational::zero();
        for l in k.max(0)..=d.min(d + k) {
            acc += self.linking((i, l as u32), (j, (l - k) as u32));
        }
        acc
    }

    pub fn reconstruct(&self) -> LambdaMatrix {
        let mut a = LambdaMatrix::zeros(self.n, self.n);
        for (&(i, j, k), c) in &self.r {
            a[(i - 1, j - 1)] = &a[(i - 1, j - 1)] + &LaurentPoly::monomial(c.clone(), k);
        }
        a
    }
}

pub fn surgery_recipe(a: &LambdaMatrix) -> Result<SurgeryRecipe> {
    if !a.is_square() || !a.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    let n = a.n();
    let mut d = 0u32;
    let mut r = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in a[(i, j)].terms() {
                d = d.max(k.unsigned_abs() as u32);
                r.insert((i + 1, j + 1, k), c);
            }
        }
    }
    Ok(SurgeryRecipe { n, d, r, admissible: a.is_admissible() })
}
