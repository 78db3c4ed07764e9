//! Matrices over Λ.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::Rational;

/// Dense row-major matrix over Λ. Presentation matrices are square; the
/// rectangular shape shows up only inside kernel computations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LambdaMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

/// An element of Q(t) as an unreduced fraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fraction {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl LambdaMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LambdaMatrix { rows, cols, entries: vec![LaurentPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = LaurentPoly::one();
        }
        m
    }

    pub fn diagonal(d: &[LaurentPoly]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(LambdaMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    /// Square matrix from rows; rejects non-square input.
    pub fn square(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let m = Self::from_rows(rows)?;
        if m.rows != m.cols {
            return Err(Error::DimensionMismatch(format!("{}x{} matrix is not square", m.rows, m.cols)));
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Size of a square matrix.
    pub fn n(&self) -> usize {
        self.rows
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<LaurentPoly>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Entrywise bar.
    pub fn bar(&self) -> Self {
        LambdaMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(LaurentPoly::bar).collect() }
    }

    pub fn conjugate_transpose(&self) -> Self {
        self.transpose().bar()
    }

    pub fn is_hermitian(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        (0..self.rows).all(|i| (i..self.cols).all(|j| self[(i, j)] == self[(j, i)].bar()))
    }

    pub fn mul(&self, other: &LambdaMatrix) -> LambdaMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_zero)
    }

    /// Fraction-free (Bareiss) determinant; exact division in Λ.
    pub fn determinant(&self) -> LaurentPoly {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut a = self.to_rows();
        let mut sign = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = !sign;
                    }
                    None => return LaurentPoly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.exact_div(&prev).expect("Bareiss step divides exactly");
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign {
            -d
        } else {
            d
        }
    }

    /// Minor with row `r` and column `c` removed.
    pub fn minor(&self, r: usize, c: usize) -> LambdaMatrix {
        let rows = (0..self.rows)
            .filter(|&i| i != r)
            .map(|i| (0..self.cols).filter(|&j| j != c).map(|j| self[(i, j)].clone()).collect())
            .collect();
        LambdaMatrix::from_rows(rows).expect("minor is rectangular")
    }

    pub fn adjugate(&self) -> LambdaMatrix {
        let n = self.rows;
        let mut adj = Self::zeros(n, n);
        if n == 1 {
            adj[(0, 0)] = LaurentPoly::one();
            return adj;
        }
        for i in 0..n {
            for j in 0..n {
                let m = self.minor(i, j).determinant();
                adj[(j, i)] = if (i + j) % 2 == 0 { m } else { -m };
            }
        }
        adj
    }

    /// −A⁻¹ as adjugate-over-determinant pairs, unreduced.
    pub fn neg_inverse(&self) -> Result<Vec<Vec<Fraction>>> {
        let det = self.determinant();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let adj = self.adjugate();
        if cfg!(debug_assertions) {
            let prod = self.mul(&adj);
            if prod != LambdaMatrix::diagonal(&vec![det.clone(); self.rows]) {
                return Err(Error::Internal("A * adj(A) != det(A) I".into()));
            }
        }
        let neg_det = -&det;
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| Fraction { num: adj[(i, j)].clone(), den: neg_det.clone() }).collect())
            .collect())
    }

    /// Matrix of values at t = x.
    pub fn evaluate(&self, x: &Rational) -> Result<Vec<Vec<Rational>>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|p| p.evaluate(x)).collect()).collect()
    }

    /// det(A(1)) != 0.
    pub fn is_admissible(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let m = self.evaluate(&Rational::one()).expect("t = 1 is nonzero");
        rational_determinant_nonzero(m)
    }

    pub fn direct_sum(blocks: &[LambdaMatrix]) -> LambdaMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += c * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = &self[(src, j)];
            if !s.is_zero() {
                let v = &self[(dst, j)] + &(c * s);
                self[(dst, j)] = v;
            }
        }
    }

    /// col[dst] += c * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = &self[(i, src)];
            if !s.is_zero() {
                let v = &self[(i, dst)] + &(s * c);
                self[(i, dst)] = v;
            }
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, c: &LaurentPoly) {
        for j in 0..self.cols {
            let v = &self[(i, j)] * c;
            self[(i, j)] = v;
        }
    }

    pub(crate) fn scale_col(&mut self, j: usize, c: &LaurentPoly) {
        for i in 0..self.rows {
            let v = &self[(i, j)] * c;
            self[(i, j)] = v;
        }
    }
}

/// Determinant over Q by Gaussian elimination.
pub fn rational_determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        let pivot = m[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &pivot;
            for j in k..n {
                let v = &m[k][j] * &f;
                m[i][j] -= v;
            }
        }
    }
    det
}

const MOD_PRIMES: [u64; 3] = [(1 << 61) - 1, 4_611_686_018_427_387_847, 2_305_843_009_213_693_921];

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn det_mod(m: &[Vec<Rational>], p: u64) -> Option<u64> {
    let big = num_bigint::BigInt::from(p);
    let to_mod = |x: &num_bigint::BigInt| -> u64 {
        let r = x % &big;
        let r = if r.sign() == num_bigint::Sign::Minus { r + &big } else { r };
        r.try_into().expect("residue fits")
    };
    let mut a = Vec::with_capacity(m.len());
    for row in m {
        let mut out = Vec::with_capacity(row.len());
        for x in row {
            let den = to_mod(x.denom());
            if den == 0 {
                return None;
            }
            out.push(mul_mod(to_mod(x.numer()), pow_mod(den, p - 2, p), p));
        }
        a.push(out);
    }
    let n = a.len();
    let mut det = 1;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| a[i][k] != 0) else {
            return Some(0);
        };
        if piv != k {
            a.swap(piv, k);
            det = p - det;
        }
        det = mul_mod(det, a[k][k], p);
        let inv = pow_mod(a[k][k], p - 2, p);
        for i in k + 1..n {
            if a[i][k] == 0 {
                continue;
            }
            let f = mul_mod(a[i][k], inv, p);
            for j in k..n {
                let v = mul_mod(a[k][j], f, p);
                a[i][j] = (a[i][j] + p - v) % p;
            }
        }
    }
    Some(det)
}

/// Nonzero-ness of a rational determinant. A nonzero value modulo a prime
/// settles it; otherwise falls back to exact elimination.
pub fn rational_determinant_nonzero(m: Vec<Vec<Rational>>) -> bool {
    if MOD_PRIMES.iter().any(|&p| det_mod(&m, p).is_some_and(|d| d != 0)) {
        return true;
    }
    !rational_determinant(m).is_zero()
}

impl std::ops::Index<(usize, usize)> for LambdaMatrix {
    type Output = LaurentPoly;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for LambdaMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPoly {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for LambdaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_determinant_agrees() {
        let q = |n: i64, d: i64| Rational::new(n.into(), d.into());
        let m = vec![vec![q(1, 2), q(1, 3)], vec![q(3, 1), q(2, 1)]];
        assert!(rational_determinant(m.clone()).is_zero());
        assert!(!rational_determinant_nonzero(m));
        let m = vec![vec![q(1, 2), q(1, 3)], vec![q(3, 1), q(5, 7)]];
        assert!(rational_determinant_nonzero(m));
        // det = p for the first modulus, and a denominator divisible by it
        let p = MOD_PRIMES[0] as i64;
        assert!(rational_determinant_nonzero(vec![vec![q(p, 1)]]));
        assert!(rational_determinant_nonzero(vec![vec![q(1, p)]]));
    }

    fn lp(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(low, c)
    }

    fn pair_matrix() -> LambdaMatrix {
        LambdaMatrix::square(vec![vec![LaurentPoly::zero(), lp(0, &[1, 1])], vec![lp(-1, &[1, 1]), LaurentPoly::zero()]]).unwrap()
    }

    fn realbf_matrix() -> LambdaMatrix {
        LambdaMatrix::square(vec![vec![lp(0, &[-1]), lp(0, &[1])], vec![lp(0, &[1]), lp(-1, &[-1, 0, -1])]]).unwrap()
    }

    #[test]
    fn hermitian_checks() {
        assert!(pair_matrix().is_hermitian());
        assert!(!LambdaMatrix::square(vec![vec![LaurentPoly::t()]]).unwrap().is_hermitian());
        assert!(LambdaMatrix::identity(3).is_hermitian());
    }

    #[test]
    fn determinants() {
        assert_eq!(pair_matrix().determinant(), -lp(-1, &[1, 2, 1]));
        assert_eq!(realbf_matrix().determinant(), lp(-1, &[1, -1, 1]));
        assert!(LambdaMatrix::identity(4).determinant().is_one());
    }

    #[test]
    fn neg_inverse_entry() {
        let l = realbf_matrix().neg_inverse().unwrap();
        // (t + t^-1) / (t - 1 + t^-1)
        let e = &l[0][0];
        assert_eq!(&e.num * &lp(-1, &[1, -1, 1]), &lp(-1, &[1, 0, 1]) * &e.den);
        let singular = LambdaMatrix::zeros(2, 2);
        assert_eq!(singular.neg_inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn admissibility() {
        assert!(pair_matrix().is_admissible());
        assert!(!LambdaMatrix::square(vec![vec![lp(0, &[1, -1])]]).unwrap().is_admissible());
        assert!(LambdaMatrix::identity(2).is_admissible());
    }

    #[test]
    fn direct_sum_shapes() {
        let s = LambdaMatrix::direct_sum(&[pair_matrix(), realbf_matrix()]);
        assert_eq!(s.n(), 4);
        assert_eq!(s.determinant(), &pair_matrix().determinant() * &realbf_matrix().determinant());
        assert_eq!(LambdaMatrix::direct_sum(&[]).n(), 0);
    }
}
