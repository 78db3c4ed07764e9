//! Blanchfield forms: hermitian pairings on ⊕ Λ/(δᵢ) with values in Q(t)/Λ.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::LambdaMatrix;
use crate::module::AlexanderModule;
use crate::matrix::rational_determinant_nonzero;
use crate::snf::{smith_normal_form, SnfResult};
use crate::Rational;
use num_traits::Zero;
use crate::torsion::TorsionValue;

/// Gram data over cyclic generators of arbitrary orders, stored over the
/// common denominator `lcm(orders)` so pairings reduce once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Gram {
    orders: Vec<LaurentPoly>,
    common: LaurentPoly,
    lifted: Vec<Vec<LaurentPoly>>,
}

impl Gram {
    pub(crate) fn new(orders: Vec<LaurentPoly>, values: &[Vec<TorsionValue>]) -> Result<Gram> {
        let p = orders.len();
        if values.len() != p || values.iter().any(|r| r.len() != p) {
            return Err(Error::DimensionMismatch(format!("gram must be {p}x{p}")));
        }
        let orders: Vec<LaurentPoly> = orders.iter().map(|o| o.normalized()).collect();
        let common = orders.iter().fold(LaurentPoly::one(), |acc, o| acc.lcm(o));
        let mut lifted = Vec::with_capacity(p);
        for (i, row) in values.iter().enumerate() {
            let mut out = Vec::with_capacity(p);
            for (j, v) in row.iter().enumerate() {
                if !v.mul_laurent(&orders[i]).is_zero() || !v.mul_laurent(&orders[j].bar()).is_zero() {
                    return Err(Error::InvalidOrder(format!("gram entry ({}, {}) is not killed by the generator orders", i + 1, j + 1)));
                }
                out.push(v.clear(&common).expect("denominator divides the annihilator"));
            }
            lifted.push(out);
        }
        Ok(Gram { orders, common, lifted })
    }

    pub(crate) fn orders(&self) -> &[LaurentPoly] {
        &self.orders
    }

    pub(crate) fn len(&self) -> usize {
        self.orders.len()
    }

    pub(crate) fn value(&self, i: usize, j: usize) -> TorsionValue {
        TorsionValue::reduce(&self.lifted[i][j], &self.common).expect("nonzero annihilator")
    }

    pub(crate) fn reduce_coords(&self, x: &[LaurentPoly]) -> Vec<LaurentPoly> {
        x.iter().zip(&self.orders).map(|(c, o)| c.reduce_mod(o).expect("nonzero order")).collect()
    }

    /// Σ xᵢ·bar(yⱼ)·G[i][j].
    pub(crate) fn pair(&self, x: &[LaurentPoly], y: &[LaurentPoly]) -> TorsionValue {
        let ybar: Vec<LaurentPoly> = y.iter().map(|c| c.bar()).collect();
        let mut acc = LaurentPoly::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let mut inner = LaurentPoly::zero();
            for (j, yj) in ybar.iter().enumerate() {
                if !yj.is_zero() && !self.lifted[i][j].is_zero() {
                    inner = &inner + &(yj * &self.lifted[i][j]);
                }
            }
            acc = &acc + &(xi * &inner);
        }
        TorsionValue::reduce(&acc, &self.common).expect("nonzero annihilator")
    }

    pub(crate) fn order_of(&self, x: &[LaurentPoly]) -> LaurentPoly {
        x.iter().zip(&self.orders).fold(LaurentPoly::one(), |acc, (c, o)| {
            let part = if c.is_zero() { LaurentPoly::one() } else { o.exact_div(&c.gcd(o)).expect("gcd divides") };
            acc.lcm(&part)
        })
    }

    pub(crate) fn is_hermitian(&self) -> bool {
        (0..self.len()).all(|i| (i..self.len()).all(|j| self.value(i, j) == self.value(j, i).bar()))
    }

    /// Nondegenerate iff the Q-valued form ε∘φ is, where ε(r/δ) is the
    /// coefficient of t^(deg δ - 1) in r mod δ. Any nonzero submodule of
    /// Q(t)/Λ contains some t^(deg p - 1)/p, which ε sends to 1.
    pub(crate) fn is_nondegenerate(&self) -> bool {
        let d = self.common.body();
        let Some(top) = d.degree().and_then(|k| k.checked_sub(1)) else {
            return true;
        };
        let basis: Vec<(usize, i64)> = self
            .orders
            .iter()
            .enumerate()
            .flat_map(|(i, o)| (0..o.span_degree().unwrap_or(0) as i64).map(move |a| (i, a)))
            .collect();
        let mut cache: HashMap<(usize, usize, i64), Rational> = HashMap::new();
        let mut eps = |i: usize, j: usize, c: i64| -> Rational {
            cache
                .entry((i, j, c))
                .or_insert_with(|| {
                    let g = &self.lifted[i][j];
                    if g.is_zero() {
                        Rational::zero()
                    } else {
                        g.shift(c).residue_poly(d).coeff(top)
                    }
                })
                .clone()
        };
        let m: Vec<Vec<Rational>> = basis
            .iter()
            .map(|&(i, a)| basis.iter().map(|&(j, b)| eps(i, j, a - b)).collect())
            .collect();
        rational_determinant_nonzero(m)
    }

    /// η with φ(x, η) = 1/P.
    pub(crate) fn dual(&self, x: &[LaurentPoly], p: &LaurentPoly) -> Result<Vec<LaurentPoly>> {
        if x.len() != self.len() {
            return Err(Error::DimensionMismatch(format!("element has {} coordinates, module has {}", x.len(), self.len())));
        }
        let x = self.reduce_coords(x);
        if x.iter().all(|c| c.is_zero()) {
            return Err(Error::NoSolution("element is zero".into()));
        }
        if p.is_zero() || !self.order_of(&x).associates(p) {
            return Err(Error::NoSolution(format!("element does not have order {p}")));
        }
        let delta = &self.common;
        let target = delta.exact_div(p).expect("order divides the annihilator");
        let h: Vec<LaurentPoly> = (0..self.len())
            .map(|j| {
                let mut e = LaurentPoly::zero();
                for (i, xi) in x.iter().enumerate() {
                    e = &e + &(xi * &self.lifted[i][j]);
                }
                e.reduce_mod(delta).expect("nonzero annihilator")
            })
            .collect();
        let mut g = delta.clone();
        let mut u = vec![LaurentPoly::zero(); h.len()];
        for (j, hj) in h.iter().enumerate() {
            if hj.is_zero() {
                continue;
            }
            let (g2, a, b) = g.gcd_ext(hj);
            for c in u.iter_mut() {
                *c = (&a * c).reduce_mod(delta).expect("nonzero annihilator");
            }
            u[j] = b.reduce_mod(delta).expect("nonzero annihilator");
            g = g2;
        }
        let scale = target.exact_div(&g).ok_or_else(|| Error::NoSolution("form is degenerate on this element".into()))?;
        let eta: Vec<LaurentPoly> = u.iter().zip(&self.orders).map(|(c, o)| (&scale * c).bar().reduce_mod(o).expect("nonzero order")).collect();
        if self.pair(&x, &eta) != TorsionValue::inverse_of(p)? {
            return Err(Error::NoSolution("dual element check failed".into()));
        }
        Ok(eta)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlanchfieldForm {
    module: AlexanderModule,
    gram: Vec<Vec<TorsionValue>>,
    data: Gram,
}

impl BlanchfieldForm {
    /// Checks dimensions and that δᵢ and bar(δⱼ) kill G[i][j]; hermitian-ness is
    /// left to [`BlanchfieldForm::is_hermitian`].
    pub fn new(module: AlexanderModule, gram: Vec<Vec<TorsionValue>>) -> Result<Self> {
        let data = Gram::new(module.factors().to_vec(), &gram)?;
        Ok(BlanchfieldForm { module, gram, data })
    }

    pub fn module(&self) -> &AlexanderModule {
        &self.module
    }

    pub fn gram(&self) -> &[Vec<TorsionValue>] {
        &self.gram
    }

    pub(crate) fn data(&self) -> &Gram {
        &self.data
    }

    pub fn rank(&self) -> usize {
        self.module.len()
    }

    pub fn evaluate_pairing(&self, x: &[LaurentPoly], y: &[LaurentPoly]) -> Result<TorsionValue> {
        let p = self.rank();
        if x.len() != p || y.len() != p {
            return Err(Error::DimensionMismatch(format!("expected {} coordinates, got {} and {}", p, x.len(), y.len())));
        }
        Ok(self.data.pair(x, y))
    }

    /// Reduce coordinates modulo the invariant factors.
    pub fn reduce_element(&self, x: &[LaurentPoly]) -> Result<Vec<LaurentPoly>> {
        if x.len() != self.rank() {
            return Err(Error::DimensionMismatch(format!("expected {} coordinates, got {}", self.rank(), x.len())));
        }
        Ok(self.data.reduce_coords(x))
    }

    pub fn element_order(&self, x: &[LaurentPoly]) -> Result<LaurentPoly> {
        Ok(self.data.order_of(&self.reduce_element(x)?))
    }

    pub fn is_hermitian(&self) -> bool {
        self.data.is_hermitian()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.data.is_nondegenerate()
    }

    pub fn dual_element(&self, gamma: &[LaurentPoly], p: &LaurentPoly) -> Result<Vec<LaurentPoly>> {
        self.data.dual(gamma, p)
    }
}

pub fn pairing_from_matrix(a: &LambdaMatrix) -> Result<BlanchfieldForm> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} matrix", a.rows(), a.cols())));
    }
    if !a.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    pairing_from_snf(a, &smith_normal_form(a))
}

/// Same as [`pairing_from_matrix`] with a precomputed Smith form of `a`.
pub fn pairing_from_snf(a: &LambdaMatrix, snf: &SnfResult) -> Result<BlanchfieldForm> {
    let module = AlexanderModule::from_snf(snf)?;
    let n = a.rows();
    // Generator k of the invariant-factor basis is column k of W = U⁻¹, and
    // A·V = W·D gives (−A⁻¹)·W_k = −V_k / d_k.
    let keep: Vec<usize> = (0..n).rev().filter(|&k| !snf.d[(k, k)].is_unit()).collect();
    for &k in &keep {
        for i in 0..n {
            let mut lhs = LaurentPoly::zero();
            for j in 0..n {
                lhs = &lhs + &(&a[(i, j)] * &snf.v[(j, k)]);
            }
            if lhs != &snf.u_inv[(i, k)] * &snf.d[(k, k)] {
                return Err(Error::Internal("A * V != U^-1 * D".into()));
            }
        }
    }
    let mut gram = Vec::with_capacity(keep.len());
    for &ka in &keep {
        let row = keep
            .iter()
            .map(|&kb| {
                let mut s = LaurentPoly::zero();
                for j in 0..n {
                    s = &s + &(&snf.u_inv[(j, kb)].bar() * &snf.v[(j, ka)]);
                }
                TorsionValue::reduce(&-s, &snf.d[(ka, ka)])
            })
            .collect::<Result<Vec<_>>>()?;
        gram.push(row);
    }
    BlanchfieldForm::new(module, gram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Fraction;

    fn lp(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(low, c)
    }

    fn tv(n: LaurentPoly, d: LaurentPoly) -> TorsionValue {
        TorsionValue::reduce(&n, &d).unwrap()
    }

    fn cyclic(d: LaurentPoly, v: TorsionValue) -> BlanchfieldForm {
        BlanchfieldForm::new(AlexanderModule::new(vec![d]).unwrap(), vec![vec![v]]).unwrap()
    }

    #[test]
    fn extraction_of_realized_symmetric_form() {
        let a = LambdaMatrix::square(vec![vec![lp(0, &[-1]), lp(0, &[1])], vec![lp(0, &[1]), lp(-1, &[-1, 0, -1])]]).unwrap();
        let f = pairing_from_matrix(&a).unwrap();
        let pi = lp(-1, &[1, -1, 1]);
        assert_eq!(f.module().factors(), &[pi.normalized()]);
        assert_eq!(f.gram()[0][0], tv(lp(-1, &[1, 0, 1]), pi));
        assert!(f.is_hermitian());
        assert!(f.is_nondegenerate());
    }

    #[test]
    fn extraction_matches_inverse_on_meridians() {
        let p = lp(0, &[1, 1]);
        let a = LambdaMatrix::square(vec![vec![LaurentPoly::zero(), p.clone()], vec![p.bar(), LaurentPoly::zero()]]).unwrap();
        let f = pairing_from_matrix(&a).unwrap();
        assert_eq!(f.module().factors(), &[p.clone(), p.clone()]);
        assert!(f.is_hermitian() && f.is_nondegenerate());
        // φ(m₁, m₂) = (−A⁻¹)₂₁ = −1/(1+t)
        let inv: Vec<Vec<Fraction>> = a.neg_inverse().unwrap();
        assert_eq!(tv(inv[1][0].num.clone(), inv[1][0].den.clone()), tv(lp(0, &[-1]), p.clone()));
        assert!(f.gram()[0][0].is_zero() && f.gram()[1][1].is_zero());
        assert_eq!(f.gram()[0][1], f.gram()[1][0].bar());
        assert!(f.gram()[0][1].den().associates(&p));
    }

    #[test]
    fn one_by_one_extraction() {
        let p = lp(-1, &[1, -3, 1]);
        let f = pairing_from_matrix(&LambdaMatrix::square(vec![vec![p.clone()]]).unwrap()).unwrap();
        assert_eq!(f.gram()[0][0], tv(lp(0, &[-1]), p));
        assert_eq!(pairing_from_matrix(&LambdaMatrix::zeros(1, 1)), Err(Error::SingularMatrix));
        let nh = LambdaMatrix::square(vec![vec![lp(0, &[0, 1])]]).unwrap();
        assert_eq!(pairing_from_matrix(&nh), Err(Error::NotHermitian));
    }

    #[test]
    fn evaluation_examples() {
        let d1 = lp(0, &[1, 1]).pow(2);
        let d2 = lp(0, &[1, 1]);
        let g = vec![
            vec![tv(lp(0, &[1]), lp(-1, &[1, 2, 1])), TorsionValue::zero()],
            vec![TorsionValue::zero(), TorsionValue::zero()],
        ];
        let f = BlanchfieldForm::new(AlexanderModule::new(vec![d1.clone(), d2]).unwrap(), g).unwrap();
        let e1 = vec![LaurentPoly::one(), LaurentPoly::zero()];
        assert_eq!(f.evaluate_pairing(&e1, &e1).unwrap(), f.gram()[0][0]);
        let x = vec![d1.clone(), LaurentPoly::zero()];
        assert!(f.evaluate_pairing(&x, &e1).unwrap().is_zero());
        let s = vec![LaurentPoly::one(), LaurentPoly::one()];
        assert_eq!(f.evaluate_pairing(&s, &e1).unwrap(), f.gram()[0][0]);
        assert!(f.evaluate_pairing(&[LaurentPoly::one()], &e1).is_err());
        assert!(!f.is_nondegenerate());
    }

    #[test]
    fn nondegeneracy_examples() {
        let d = lp(-1, &[1, -1, 1]);
        assert!(cyclic(d.clone(), TorsionValue::inverse_of(&d).unwrap()).is_nondegenerate());
        let p = lp(0, &[1, 1]);
        assert!(!cyclic(p.pow(2), TorsionValue::inverse_of(&p).unwrap()).is_nondegenerate());
        assert!(!cyclic(p.clone(), TorsionValue::zero()).is_nondegenerate());
    }

    #[test]
    fn dual_element_examples() {
        let d = lp(-1, &[1, -1, 1]);
        let f = cyclic(d.clone(), tv(lp(-1, &[1, 0, 1]), d.clone()));
        let eta = f.dual_element(&[LaurentPoly::one()], &d).unwrap();
        assert_eq!(f.evaluate_pairing(&[LaurentPoly::one()], &eta).unwrap(), TorsionValue::inverse_of(&d).unwrap());
        assert_eq!(eta, vec![LaurentPoly::one()]);

        let d = lp(-1, &[1, -3, 1]).pow(2);
        let f = cyclic(d.clone(), tv(lp(-1, &[1, 0, 1]), d.clone()));
        let eta = f.dual_element(&[LaurentPoly::one()], &d).unwrap();
        assert_eq!(f.evaluate_pairing(&[LaurentPoly::one()], &eta).unwrap(), TorsionValue::inverse_of(&d).unwrap());

        assert!(matches!(f.dual_element(&[LaurentPoly::zero()], &d), Err(Error::NoSolution(_))));
        assert!(matches!(f.dual_element(&[lp(-1, &[1, -3, 1])], &d), Err(Error::NoSolution(_))));
    }
}
