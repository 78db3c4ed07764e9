//! Smith normal form over Λ with unimodular transforms and their inverses.

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::LambdaMatrix;
use crate::poly::Poly;
use crate::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// `u * a * v = d` with `u_inv`, `v_inv` the exact inverses of `u`, `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: LambdaMatrix,
    pub u_inv: LambdaMatrix,
    pub v: LambdaMatrix,
    pub v_inv: LambdaMatrix,
    pub d: LambdaMatrix,
    /// Diagonal of `d` in ascending divisibility order; nonzero entries are
    /// normalized (monic, lowest exponent 0), zeros come last.
    pub diagonal: Vec<LaurentPoly>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }
}

struct Work {
    a: LambdaMatrix,
    u: LambdaMatrix,
    u_inv: LambdaMatrix,
    v: LambdaMatrix,
    v_inv: LambdaMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// row[dst] += c row[src]
    fn add_row(&mut self, dst: usize, src: usize, c: &LaurentPoly) {
        self.a.add_row_multiple(dst, src, c);
        self.u.add_row_multiple(dst, src, c);
        self.u_inv.add_col_multiple(src, dst, &-c);
    }

    /// col[dst] += c col[src]
    fn add_col(&mut self, dst: usize, src: usize, c: &LaurentPoly) {
        self.a.add_col_multiple(dst, src, c);
        self.v.add_col_multiple(dst, src, c);
        self.v_inv.add_row_multiple(src, dst, &-c);
    }

    /// Rescale row i of `a` by a rational so its entries are coprime integers.
    fn normalize_row(&mut self, i: usize) {
        let c = primitive_scale(self.a.row(i).iter());
        if !c.is_one() {
            let (s, inv) = (LaurentPoly::constant(c.clone()), LaurentPoly::constant(c.recip()));
            self.scale_row(i, &s, &inv);
        }
    }

    fn normalize_col(&mut self, j: usize) {
        let col: Vec<LaurentPoly> = (0..self.a.rows()).map(|i| self.a[(i, j)].clone()).collect();
        let c = primitive_scale(col.iter());
        if !c.is_one() {
            let (s, inv) = (LaurentPoly::constant(c.clone()), LaurentPoly::constant(c.recip()));
            self.a.scale_col(j, &s);
            self.v.scale_col(j, &s);
            self.v_inv.scale_row(j, &inv);
        }
    }

    fn scale_row(&mut self, i: usize, unit: &LaurentPoly, inverse: &LaurentPoly) {
        self.a.scale_row(i, unit);
        self.u.scale_row(i, unit);
        self.u_inv.scale_col(i, inverse);
    }
}

pub fn smith_normal_form(a: &LambdaMatrix) -> SnfResult {
    if a.is_square() && a.n() > 0 {
        let det = a.determinant();
        if !det.is_zero() {
            if let Some(r) = smith_nonsingular(a, &det) {
                return r;
            }
        }
    }
    smith_euclid(a)
}

/// Row-by-row elimination with minimal-degree pivots. Works for any shape;
/// coefficient growth makes it the slow path.
fn smith_euclid(a: &LambdaMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work {
        a: a.clone(),
        u: LambdaMatrix::identity(m),
        u_inv: LambdaMatrix::identity(m),
        v: LambdaMatrix::identity(n),
        v_inv: LambdaMatrix::identity(n),
    };
    let steps = m.min(n);
    'outer: for k in 0..steps {
        loop {
            let Some((pi, pj)) = pivot(&w.a, k) else {
                break 'outer;
            };
            w.swap_rows(k, pi);
            w.swap_cols(k, pj);
            let p = w.a[(k, k)].clone();
            let mut dirty = false;
            for i in k + 1..m {
                if w.a[(i, k)].is_zero() {
                    continue;
                }
                let (q, r) = w.a[(i, k)].div_rem(&p).expect("pivot is nonzero");
                w.add_row(i, k, &-q);
                w.normalize_row(i);
                dirty |= !r.is_zero();
            }
            for j in k + 1..n {
                if w.a[(k, j)].is_zero() {
                    continue;
                }
                let (q, r) = w.a[(k, j)].div_rem(&p).expect("pivot is nonzero");
                w.add_col(j, k, &-q);
                w.normalize_col(j);
                dirty |= !r.is_zero();
            }
            if dirty {
                continue;
            }
            // Row and column k are clear; force the pivot to divide the rest.
            let offender = (k + 1..m).find(|&i| (k + 1..n).any(|j| !p.divides(&w.a[(i, j)])));
            match offender {
                Some(i) => w.add_row(k, i, &LaurentPoly::one()),
                None => break,
            }
        }
        let p = w.a[(k, k)].clone();
        let unit = p.unit_part();
        w.scale_row(k, &unit.inverse().to_laurent(), &unit.to_laurent());
    }
    let diagonal = (0..steps).map(|i| w.a[(i, i)].clone()).collect();
    SnfResult { u: w.u, u_inv: w.u_inv, v: w.v, v_inv: w.v_inv, d: w.a, diagonal }
}

/// Alternating row and column Hermite forms computed modulo the
/// determinant, then gcd/lcm moves on the diagonal. `None` if the
/// alternation fails to settle.
fn smith_nonsingular(a: &LambdaMatrix, det: &LaurentPoly) -> Option<SnfResult> {
    let n = a.n();
    let mut m = a.clone();
    let mut det_m = det.clone();
    let mut u = LambdaMatrix::identity(n);
    let mut v = LambdaMatrix::identity(n);
    let mut round = 0;
    while !is_diagonal(&m) {
        if round >= 16 {
            return None;
        }
        if round % 2 == 0 {
            let h = hnf_rows_mod(&m, &det_m);
            let step = left_transform(&h, &m, &det_m)?;
            u = step.mul(&u);
            m = h;
        } else {
            let mt = m.transpose();
            let h = hnf_rows_mod(&mt, &det_m);
            let step = left_transform(&h, &mt, &det_m)?;
            v = v.mul(&step.transpose());
            m = h.transpose();
        }
        det_m = (0..n).map(|i| m[(i, i)].clone()).fold(LaurentPoly::one(), |acc, x| &acc * &x);
        round += 1;
    }
    let mut d: Vec<LaurentPoly> = (0..n).map(|i| m[(i, i)].clone()).collect();
    for i in 0..n {
        for j in i + 1..n {
            if d[i].divides(&d[j]) {
                continue;
            }
            let (a_, b_) = (d[i].clone(), d[j].clone());
            let (g, x, y) = a_.gcd_ext(&b_);
            let ag = a_.exact_div(&g)?;
            let bg = b_.exact_div(&g)?;
            // [[x, y], [-b/g, a/g]] on rows, [[1, -y b/g], [1, x a/g]] on columns
            let ri = u.row(i).to_vec();
            let rj = u.row(j).to_vec();
            for c in 0..n {
                u[(i, c)] = &(&x * &ri[c]) + &(&y * &rj[c]);
                u[(j, c)] = &(&ag * &rj[c]) - &(&bg * &ri[c]);
            }
            let c1 = -(&y * &bg);
            let c2 = &x * &ag;
            for r in 0..n {
                let (vi, vj) = (v[(r, i)].clone(), v[(r, j)].clone());
                v[(r, i)] = &vi + &vj;
                v[(r, j)] = &(&vi * &c1) + &(&vj * &c2);
            }
            d[i] = g;
            d[j] = (&a_ * &bg).normalized();
        }
    }
    for i in 0..n {
        let unit = d[i].unit_part();
        if !unit.to_laurent().is_one() {
            u.scale_row(i, &unit.inverse().to_laurent());
        }
        d[i] = d[i].normalized();
    }
    let au = a.mul(&v);
    let mut u_inv = au;
    for j in 0..n {
        for i in 0..n {
            u_inv[(i, j)] = u_inv[(i, j)].exact_div(&d[j])?;
        }
    }
    let mut v_inv = u.mul(a);
    for i in 0..n {
        for j in 0..n {
            v_inv[(i, j)] = v_inv[(i, j)].exact_div(&d[i])?;
        }
    }
    let dm = LambdaMatrix::diagonal(&d);
    Some(SnfResult { u, u_inv, v, v_inv, d: dm, diagonal: d })
}

fn is_diagonal(m: &LambdaMatrix) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| i == j || m[(i, j)].is_zero()))
}

/// X with X m = h, for h in the row module of m.
fn left_transform(h: &LambdaMatrix, m: &LambdaMatrix, det: &LaurentPoly) -> Option<LambdaMatrix> {
    let prod = h.mul(&m.adjugate());
    let mut out = LambdaMatrix::zeros(m.n(), m.n());
    for i in 0..m.n() {
        for j in 0..m.n() {
            out[(i, j)] = prod[(i, j)].exact_div(det)?;
        }
    }
    Some(out)
}

/// Upper-triangular Hermite form of the row module of a nonsingular `m`.
/// Rows are inserted one at a time into the lattice spanned by det * I, and
/// the basis is fully reduced after each insertion so entries stay small.
fn hnf_rows_mod(m: &LambdaMatrix, det: &LaurentPoly) -> LambdaMatrix {
    let n = m.n();
    let r = det.normalized().body().clone();
    let mut h: Vec<Vec<Poly>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { r.clone() } else { Poly::zero() }).collect()).collect();
    for i in 0..n {
        let row = m.row(i);
        let low = row.iter().filter_map(|x| x.low_exponent()).min().unwrap_or(0);
        let mut a: Vec<Poly> = row.iter().map(|x| as_poly(&x.shift(-low)).rem(&r)).collect();
        for c in 0..n {
            if a[c].is_zero() {
                continue;
            }
            if let Some(q) = a[c].exact_div(&h[c][c]) {
                a[c] = Poly::zero();
                for j in c + 1..n {
                    a[j] = (&a[j] - &(&q * &h[c][j])).rem(&r);
                }
                continue;
            }
            let (g, x, y) = h[c][c].xgcd(&a[c]);
            let pg = h[c][c].exact_div(&g).expect("gcd divides");
            let ag = a[c].exact_div(&g).expect("gcd divides");
            for j in c + 1..n {
                let hj = (&(&x * &h[c][j]) + &(&y * &a[j])).rem(&r);
                a[j] = (&(&pg * &a[j]) - &(&ag * &h[c][j])).rem(&r);
                h[c][j] = hj;
            }
            h[c][c] = g;
            a[c] = Poly::zero();
        }
        for j in 1..n {
            for i in 0..j {
                if h[i][j].degree() < h[j][j].degree() {
                    continue;
                }
                let q = h[i][j].div_rem(&h[j][j]).0;
                h[i][j] = Poly::zero();
                for k in j + 1..n {
                    h[i][k] = (&h[i][k] - &(&q * &h[j][k])).rem(&r);
                }
            }
        }
    }
    let rows = h.into_iter().map(|row| row.into_iter().map(LaurentPoly::from_poly).collect()).collect();
    LambdaMatrix::from_rows(rows).expect("square")
}

/// A Laurent polynomial with no negative exponents as an ordinary one.
fn as_poly(p: &LaurentPoly) -> Poly {
    match p.low_exponent() {
        None => Poly::zero(),
        Some(low) => p.body().shift_up(low as usize),
    }
}

/// The positive rational c making c * entries integral with coprime content.
fn primitive_scale<'a>(entries: impl Iterator<Item = &'a LaurentPoly>) -> Rational {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for p in entries {
        for (_, c) in p.terms() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
    }
    if num.is_zero() {
        return Rational::one();
    }
    Rational::new(den, num)
}

/// Nonzero entry of minimal span-degree in the trailing block, first in
/// row-major order among ties.
fn pivot(a: &LambdaMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for i in k..a.rows() {
        for j in k..a.cols() {
            if let Some(d) = a[(i, j)].span_degree() {
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, i, j));
                    if d == 0 {
                        return Some((i, j));
                    }
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Generators of { λ : λ H ≡ 0 (mod δ) } as rows of length `h.rows()`.
pub fn kernel_mod(h: &LambdaMatrix, delta: &LaurentPoly) -> Result<Vec<Vec<LaurentPoly>>> {
    if delta.is_zero() {
        return Err(Error::ZeroModulus);
    }
    let n = h.rows();
    let snf = smith_normal_form(h);
    Ok((0..n)
        .map(|i| {
            let f = match snf.diagonal.get(i) {
                Some(d) if !d.is_zero() => delta.exact_div(&d.gcd(delta)).expect("gcd divides"),
                _ => LaurentPoly::one(),
            };
            snf.u.row(i).iter().map(|x| &f * x).collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(low, c)
    }

    fn check(a: &LambdaMatrix) -> SnfResult {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).mul(&s.v), s.d);
        assert_eq!(s.u.mul(&s.u_inv), LambdaMatrix::identity(a.rows()));
        assert_eq!(s.v.mul(&s.v_inv), LambdaMatrix::identity(a.cols()));
        for w in s.diagonal.windows(2) {
            assert!(w[1].is_zero() || w[0].divides(&w[1]));
        }
        s
    }

    #[test]
    fn hyperbolic_one_plus_t_matrix() {
        let a = LambdaMatrix::square(vec![vec![LaurentPoly::zero(), lp(0, &[1, 1])], vec![lp(-1, &[1, 1]), LaurentPoly::zero()]]).unwrap();
        let s = check(&a);
        assert_eq!(s.diagonal, vec![lp(0, &[1, 1]), lp(0, &[1, 1])]);
    }

    #[test]
    fn one_by_one_and_chain() {
        let s = check(&LambdaMatrix::square(vec![vec![lp(-1, &[1, -1, 1])]]).unwrap());
        assert_eq!(s.diagonal, vec![lp(0, &[1, -1, 1])]);
        let d = LambdaMatrix::diagonal(&[lp(0, &[1, 1]), lp(0, &[1, 2, 1])]);
        let s = check(&d);
        assert_eq!(s.diagonal, vec![lp(0, &[1, 1]), lp(0, &[1, 2, 1])]);
        // coprime diagonal entries collapse to (1, product)
        let d = LambdaMatrix::diagonal(&[lp(0, &[-2, 1]), lp(0, &[1, 1])]);
        let s = check(&d);
        assert!(s.diagonal[0].is_one());
    }

    #[test]
    fn rectangular_and_singular() {
        let a = LambdaMatrix::from_rows(vec![vec![lp(0, &[1, 1]), lp(0, &[0, 1])], vec![lp(0, &[2, 2]), lp(0, &[0, 2])], vec![lp(0, &[1]), lp(0, &[3])]]).unwrap();
        let s = check(&a);
        assert_eq!(s.rank(), 2);
        let s = check(&LambdaMatrix::zeros(2, 2));
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        let d = lp(0, &[1, 2, 1]);
        let k = kernel_mod(&LambdaMatrix::identity(2), &d).unwrap();
        assert_eq!(k.len(), 2);
        assert!(k.iter().flatten().all(|x| d.divides(x)));

        let k = kernel_mod(&LambdaMatrix::diagonal(&[d.clone()]), &d).unwrap();
        assert_eq!(k.len(), 1);
        assert!(k[0][0].is_unit());

        let k = kernel_mod(&LambdaMatrix::diagonal(&[lp(0, &[1, 1])]), &d).unwrap();
        assert_eq!(k.len(), 1);
        assert!(k[0][0].associates(&lp(0, &[1, 1])));
        assert_eq!(kernel_mod(&LambdaMatrix::identity(1), &LaurentPoly::zero()), Err(Error::ZeroModulus));
    }
}
