//! Torsion Λ-modules ⊕ Λ/(δᵢ) given by invariant-factor chains.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::factor::{factor_rational, PrimePower};
use crate::laurent::LaurentPoly;
use crate::matrix::LambdaMatrix;
use crate::snf::{smith_normal_form, SnfResult};
use crate::Rational;

/// Which realizability condition failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    ValueAtOne,
    Symmetry,
    Parity,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Violation {
    pub condition: Condition,
    /// Invariant-factor index (0-based) or, for parity, the odd multiplicity.
    pub index: usize,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ClassifierVerdict {
    pub realizable: bool,
    pub violations: Vec<Violation>,
}

/// One prime of the annihilator with its exponent in δ₁, δ₂, …; the list
/// stops at the first factor the prime does not divide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryPart {
    pub prime: PrimePower,
    pub exponents: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneMinusT {
    pub invertible: bool,
    /// uᵢ with (1 − t)·uᵢ ≡ 1 mod δᵢ, when it exists.
    pub witnesses: Vec<Option<LaurentPoly>>,
}

/// δ₁, …, δ_p with δ_{i+1} | δᵢ, each normalized and not a unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlexanderModule {
    factors: Vec<LaurentPoly>,
}

impl AlexanderModule {
    pub fn new(factors: Vec<LaurentPoly>) -> Result<Self> {
        let factors: Vec<LaurentPoly> = factors.iter().map(|d| d.normalized()).collect();
        for (i, d) in factors.iter().enumerate() {
            if d.is_zero() {
                return Err(Error::InvalidOrder(format!("factor {} is zero", i + 1)));
            }
            if d.is_unit() {
                return Err(Error::InvalidOrder(format!("factor {} is a unit", i + 1)));
            }
        }
        for i in 1..factors.len() {
            if !factors[i].divides(&factors[i - 1]) {
                return Err(Error::InvalidOrder(format!("factor {} does not divide factor {}", i + 1, i)));
            }
        }
        Ok(AlexanderModule { factors })
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn from_matrix(a: &LambdaMatrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::DimensionMismatch(format!("{}x{} presentation matrix", a.rows(), a.cols())));
        }
        Self::from_snf(&smith_normal_form(a))
    }

    pub fn from_snf(snf: &SnfResult) -> Result<Self> {
        if snf.diagonal.iter().any(|d| d.is_zero()) {
            return Err(Error::SingularMatrix);
        }
        let factors = snf.diagonal.iter().rev().filter(|d| !d.is_unit()).cloned().collect();
        Self::new(factors)
    }

    pub fn factors(&self) -> &[LaurentPoly] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// δ₁, or 1 for the trivial module.
    pub fn annihilator(&self) -> LaurentPoly {
        self.factors.first().cloned().unwrap_or_else(LaurentPoly::one)
    }

    /// Δ = ∏ δᵢ.
    pub fn order(&self) -> LaurentPoly {
        self.factors.iter().fold(LaurentPoly::one(), |acc, d| &acc * d)
    }

    /// Dimension over Q.
    pub fn dimension(&self) -> usize {
        self.factors.iter().map(|d| d.span_degree().unwrap_or(0)).sum()
    }

    pub fn classify(&self) -> ClassifierVerdict {
        let mut violations = Vec::new();
        for (i, d) in self.factors.iter().enumerate() {
            let v = d.evaluate(&Rational::from_integer(1.into())).expect("t = 1");
            if v == Rational::from_integer(0.into()) {
                violations.push(Violation {
                    condition: Condition::ValueAtOne,
                    index: i,
                    witness: format!("δ_{}(1) = 0 for δ_{} = {}", i + 1, i + 1, d),
                });
            }
            if !d.associates(&d.bar()) {
                violations.push(Violation {
                    condition: Condition::Symmetry,
                    index: i,
                    witness: format!("δ_{} = {} is not a unit multiple of its conjugate", i + 1, d),
                });
            }
        }
        let mut counts: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, d) in self.factors.iter().enumerate() {
            let m = d.multiplicity_minus_one().expect("nonzero factor");
            if m % 2 == 1 {
                counts.entry(m).or_default().push(i);
            }
        }
        for (m, idx) in counts {
            if idx.len() % 2 == 1 {
                let list: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
                violations.push(Violation {
                    condition: Condition::Parity,
                    index: m,
                    witness: format!("odd multiplicity {} of 1+t occurs {} times (factors {})", m, idx.len(), list.join(", ")),
                });
            }
        }
        ClassifierVerdict { realizable: violations.is_empty(), violations }
    }

    pub fn primary_decomposition(&self) -> Result<Vec<PrimaryPart>> {
        if self.is_empty() {
            return Ok(Vec::new());
        }
        let f = factor_rational(&self.factors[0])?;
        Ok(f.factors
            .into_iter()
            .map(|prime| {
                let exponents = self
                    .factors
                    .iter()
                    .map(|d| multiplicity(d, &prime.prime))
                    .take_while(|&e| e > 0)
                    .collect();
                PrimaryPart { prime, exponents }
            })
            .collect())
    }

    pub fn one_minus_t_invertible(&self) -> OneMinusT {
        let one_minus_t = LaurentPoly::from_ints(0, &[1, -1]);
        let witnesses: Vec<Option<LaurentPoly>> =
            self.factors.iter().map(|d| one_minus_t.inverse_mod(d).ok()).collect();
        OneMinusT { invertible: witnesses.iter().all(Option::is_some), witnesses }
    }
}

/// Exponent of `prime` in `p`.
pub(crate) fn multiplicity(p: &LaurentPoly, prime: &LaurentPoly) -> u32 {
    let mut e = 0;
    let mut rest = p.clone();
    while let Some(q) = rest.exact_div(prime) {
        rest = q;
        e += 1;
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(low, c)
    }

    fn m(f: Vec<LaurentPoly>) -> AlexanderModule {
        AlexanderModule::new(f).unwrap()
    }

    #[test]
    fn construction_checks_chain() {
        assert!(AlexanderModule::new(vec![lp(0, &[1, 1]), lp(0, &[1, 2, 1])]).is_err());
        assert!(AlexanderModule::new(vec![LaurentPoly::from_int(3)]).is_err());
        assert!(AlexanderModule::new(vec![LaurentPoly::zero()]).is_err());
        let a = m(vec![lp(-1, &[2, 2]), lp(0, &[1, 1])]);
        assert_eq!(a.factors(), &[lp(0, &[1, 1]), lp(0, &[1, 1])]);
        assert_eq!(a.dimension(), 2);
    }

    #[test]
    fn from_matrix_examples() {
        for n in 1..=3u32 {
            let p = lp(0, &[1, 1]).pow(n);
            let a = LambdaMatrix::square(vec![vec![LaurentPoly::zero(), p.clone()], vec![p.bar(), LaurentPoly::zero()]]).unwrap();
            assert_eq!(AlexanderModule::from_matrix(&a).unwrap().factors(), &[p.clone(), p]);
        }
        let a = LambdaMatrix::square(vec![vec![lp(-1, &[1, -1, 1])]]).unwrap();
        assert_eq!(AlexanderModule::from_matrix(&a).unwrap().factors(), &[lp(0, &[1, -1, 1])]);
        assert!(AlexanderModule::from_matrix(&LambdaMatrix::identity(3)).unwrap().is_empty());
        assert_eq!(AlexanderModule::from_matrix(&LambdaMatrix::zeros(1, 1)), Err(Error::SingularMatrix));
    }

    #[test]
    fn classifier_examples() {
        let v = m(vec![lp(0, &[1, 1])]).classify();
        assert!(!v.realizable);
        assert_eq!(v.violations.len(), 1);
        assert_eq!((v.violations[0].condition, v.violations[0].index), (Condition::Parity, 1));

        assert!(m(vec![lp(0, &[1, 1]), lp(0, &[1, 1])]).classify().realizable);
        let d1 = &lp(0, &[1, 1]) * &lp(-1, &[1, -1, 1]);
        assert!(m(vec![d1, lp(0, &[1, 1])]).classify().realizable);
        assert!(AlexanderModule::trivial().classify().realizable);
    }

    #[test]
    fn classifier_reports_every_violation() {
        // (t - 1)(t - 2): vanishes at 1 and is not symmetric
        let v = m(vec![lp(0, &[2, -3, 1])]).classify();
        let conds: Vec<Condition> = v.violations.iter().map(|x| x.condition).collect();
        assert_eq!(conds, vec![Condition::ValueAtOne, Condition::Symmetry]);
    }

    #[test]
    fn primary_decomposition_examples() {
        let d = &lp(0, &[1, 1]).pow(2) * &lp(-1, &[1, -1, 1]);
        let parts = m(vec![d]).primary_decomposition().unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!((parts[0].prime.prime.clone(), parts[0].exponents.clone()), (lp(0, &[1, 1]), vec![2]));
        assert_eq!((parts[1].prime.prime.clone(), parts[1].exponents.clone()), (lp(0, &[1, -1, 1]), vec![1]));
        let parts = m(vec![lp(0, &[1, 1]), lp(0, &[1, 1])]).primary_decomposition().unwrap();
        assert_eq!(parts[0].exponents, vec![1, 1]);
    }

    #[test]
    fn one_minus_t_examples() {
        let r = m(vec![lp(-1, &[1, -1, 1])]).one_minus_t_invertible();
        assert!(r.invertible);
        assert_eq!(r.witnesses[0], Some(LaurentPoly::t()));
        // (t - 2)(t^-1 - 2)
        assert!(m(vec![&lp(0, &[-2, 1]) * &lp(-1, &[1, -2])]).one_minus_t_invertible().invertible);
        assert!(!m(vec![lp(0, &[-1, 0, 1])]).one_minus_t_invertible().invertible);
    }
}
