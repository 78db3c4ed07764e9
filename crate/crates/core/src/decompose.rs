//! Orthogonal splitting of a nondegenerate hermitian form into symmetric
//! cyclic blocks and hyperbolic pairs.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::factor::{canonical_cmp, factor_rational, primary_collect, symmetry_tag, SymmetryTag};
use crate::form::{BlanchfieldForm, Gram};
use crate::laurent::LaurentPoly;
use crate::module::multiplicity;
use crate::symmetric::SymmetricPoly;
use crate::torsion::TorsionValue;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonicalBlock {
    /// One generator γ with φ(γ, γ) = P/πⁿ; π is bar-fixed (centered).
    SymmetricCyclic { pi: LaurentPoly, n: u32, p: SymmetricPoly },
    /// Isotropic γ₁, γ₂ with φ(γ₁, γ₂) = 1/πⁿ; π is normalized.
    HyperbolicPair { pi: LaurentPoly, n: u32 },
}

impl CanonicalBlock {
    pub fn pi(&self) -> &LaurentPoly {
        match self {
            CanonicalBlock::SymmetricCyclic { pi, .. } | CanonicalBlock::HyperbolicPair { pi, .. } => pi,
        }
    }

    pub fn n(&self) -> u32 {
        match self {
            CanonicalBlock::SymmetricCyclic { n, .. } | CanonicalBlock::HyperbolicPair { n, .. } => *n,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CanonicalBlock::SymmetricCyclic { .. } => "symmetric",
            CanonicalBlock::HyperbolicPair { .. } => "hyperbolic",
        }
    }

    pub fn generator_count(&self) -> usize {
        match self {
            CanonicalBlock::SymmetricCyclic { .. } => 1,
            CanonicalBlock::HyperbolicPair { .. } => 2,
        }
    }

    /// Orders of the block generators.
    pub fn orders(&self) -> Vec<LaurentPoly> {
        match self {
            CanonicalBlock::SymmetricCyclic { pi, n, .. } => vec![pi.pow(*n).normalized()],
            CanonicalBlock::HyperbolicPair { pi, n } => {
                let q = pi.pow(*n);
                vec![q.normalized(), q.bar().normalized()]
            }
        }
    }

    /// The block Gram on its own generators.
    pub fn gram(&self) -> Vec<Vec<TorsionValue>> {
        match self {
            CanonicalBlock::SymmetricCyclic { pi, n, p } => {
                vec![vec![TorsionValue::reduce(&p.s_substitute(), &pi.pow(*n)).expect("nonzero prime")]]
            }
            CanonicalBlock::HyperbolicPair { pi, n } => {
                let v = TorsionValue::inverse_of(&pi.pow(*n)).expect("nonzero prime");
                let w = v.bar();
                vec![vec![TorsionValue::zero(), v], vec![w, TorsionValue::zero()]]
            }
        }
    }

    /// Q-dimension spanned by the block.
    pub fn dimension(&self) -> usize {
        self.orders().iter().map(|o| o.span_degree().unwrap_or(0)).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionResult {
    pub blocks: Vec<CanonicalBlock>,
    /// One row per block generator, in block order, in the coordinates of
    /// the input generators.
    pub basis: Vec<Vec<LaurentPoly>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub ok: bool,
    /// Basis rows whose pairing (or order, when both indices agree) is off.
    pub witness: Option<(usize, usize)>,
}

/// The primary part of a form belonging to one symmetric prime or one
/// conjugate pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryComponent {
    /// One prime, or a conjugate pair (π, π̄), normalized.
    pub primes: Vec<LaurentPoly>,
    pub generators: Vec<Vec<LaurentPoly>>,
    pub orders: Vec<LaurentPoly>,
    /// Index into `primes` for each generator.
    pub prime_of: Vec<usize>,
    pub exponents: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ComponentKind {
    Symmetric,
    OnePlusT,
    Pair,
}

impl PrimaryComponent {
    fn kind(&self) -> ComponentKind {
        if self.primes.len() == 2 {
            ComponentKind::Pair
        } else if self.primes[0] == one_plus_t() {
            ComponentKind::OnePlusT
        } else {
            ComponentKind::Symmetric
        }
    }
}

fn one_plus_t() -> LaurentPoly {
    LaurentPoly::from_ints(0, &[1, 1])
}

/// Working piece: generators in global coordinates with a local Gram.
struct Piece<'a> {
    form: &'a BlanchfieldForm,
    gens: Vec<Vec<LaurentPoly>>,
    exps: Vec<u32>,
    side: Vec<usize>,
    gram: Gram,
}

impl<'a> Piece<'a> {
    fn new(form: &'a BlanchfieldForm, gens: Vec<Vec<LaurentPoly>>, orders: Vec<LaurentPoly>, exps: Vec<u32>, side: Vec<usize>) -> Result<Self> {
        let data = form.data();
        let values: Vec<Vec<TorsionValue>> = gens.iter().map(|a| gens.iter().map(|b| data.pair(a, b)).collect()).collect();
        let gram = Gram::new(orders, &values)?;
        Ok(Piece { form, gens, exps, side, gram })
    }

    fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    fn global(&self, x: &[LaurentPoly]) -> Vec<LaurentPoly> {
        let p = self.form.rank();
        let mut out = vec![LaurentPoly::zero(); p];
        for (c, g) in x.iter().zip(&self.gens) {
            if c.is_zero() {
                continue;
            }
            for (o, gi) in out.iter_mut().zip(g) {
                *o = &*o + &(c * gi);
            }
        }
        self.form.data().reduce_coords(&out)
    }

    fn unit(&self, i: usize) -> Vec<LaurentPoly> {
        let mut e = vec![LaurentPoly::zero(); self.gens.len()];
        e[i] = LaurentPoly::one();
        e
    }

    fn top(&self) -> u32 {
        self.exps.iter().copied().max().unwrap_or(0)
    }

    /// The complement piece spanned by projections of the generators not in
    /// `skip`; `project` maps a local unit vector to its projection.
    fn complement<F>(&self, skip: &[usize], project: F) -> Result<Piece<'a>>
    where
        F: Fn(&[LaurentPoly]) -> Result<Vec<LaurentPoly>>,
    {
        let mut gens = Vec::new();
        let mut orders = Vec::new();
        let mut exps = Vec::new();
        let mut side = Vec::new();
        for k in 0..self.gens.len() {
            if skip.contains(&k) {
                continue;
            }
            let y = project(&self.unit(k))?;
            gens.push(self.global(&y));
            orders.push(self.gram.orders()[k].clone());
            exps.push(self.exps[k]);
            side.push(self.side[k]);
        }
        Piece::new(self.form, gens, orders, exps, side)
    }
}

fn sub_scaled(x: &[LaurentPoly], c: &LaurentPoly, y: &[LaurentPoly]) -> Vec<LaurentPoly> {
    x.iter().zip(y).map(|(a, b)| a - &(c * b)).collect()
}

fn add_scaled(x: &[LaurentPoly], c: &LaurentPoly, y: &[LaurentPoly]) -> Vec<LaurentPoly> {
    x.iter().zip(y).map(|(a, b)| a + &(c * b)).collect()
}

/// Centered bar-fixed representative of a symmetric prime given normalized.
fn centered(p: &LaurentPoly) -> LaurentPoly {
    let d = p.span_degree().unwrap_or(0) as i64;
    p.shift(-d / 2)
}

fn check_even_at_one_plus_t(v: &TorsionValue) -> Result<()> {
    let k = multiplicity(&v.den(), &one_plus_t());
    if k % 2 == 1 {
        return Err(Error::Internal(format!("self-pairing {v} has odd (1+t)-exponent")));
    }
    Ok(())
}

type Step<'a> = (CanonicalBlock, Vec<Vec<LaurentPoly>>, Piece<'a>);

/// Split off one symmetric cyclic block of order big^m, where big^m and
/// prime^top agree up to a unit.
fn symmetric_step<'a>(piece: &Piece<'a>, prime: &LaurentPoly, big: &LaurentPoly, m: u32) -> Result<Step<'a>> {
    let g = &piece.gram;
    let top = piece.top();
    let big_m = big.pow(m);
    let den = big_m.normalized();
    let is_one_plus_t = *prime == one_plus_t();
    let tops: Vec<usize> = (0..piece.gens.len()).filter(|&i| piece.exps[i] == top).collect();

    let good = |x: &[LaurentPoly]| -> Result<Option<TorsionValue>> {
        let v = g.pair(x, x);
        if is_one_plus_t {
            check_even_at_one_plus_t(&v)?;
        }
        Ok((v.den() == den).then_some(v))
    };

    let mut candidates: Vec<Vec<LaurentPoly>> = tops.iter().map(|&i| piece.unit(i)).collect();
    let k = piece.gens.len();
    for a in 0..k {
        for b in a + 1..k {
            if tops.contains(&a) || tops.contains(&b) {
                let mut x = piece.unit(a);
                x[b] = LaurentPoly::one();
                candidates.push(x);
            }
        }
    }
    let mut found = None;
    for x in &candidates {
        if let Some(v) = good(x)? {
            found = Some((x.clone(), v));
            break;
        }
    }
    if found.is_none() {
        let Some(&i0) = tops.first() else {
            return Err(Error::DegenerateInput("empty component".into()));
        };
        let eta1 = piece.unit(i0);
        let eta2 = g.dual(&eta1, &big_m).map_err(|e| Error::DegenerateInput(e.to_string()))?;
        for x in [eta2.clone(), add_scaled(&eta1, &LaurentPoly::one(), &eta2)] {
            if let Some(v) = good(&x)? {
                found = Some((x, v));
                break;
            }
        }
    }
    let (gamma, v) = found.ok_or_else(|| Error::DegenerateInput(format!("no element with unit self-pairing over {big}^{m}")))?;

    // φ(γ,γ) = num / big_norm^m = (num t^-(dm/2)) / big^m
    let shift = big_m.low_exponent().unwrap();
    let p_raw = v.num().shift(shift);
    let half = Rational::new(1.into(), 2.into());
    let p_sym = (&p_raw + &p_raw.bar()).scale(&half);
    let big_s = SymmetricPoly::from_bar_fixed(big).ok_or_else(|| Error::Internal(format!("{big} is not bar-fixed")))?;
    let p_s = SymmetricPoly::from_bar_fixed(&p_sym)
        .ok_or_else(|| Error::Internal("symmetrized numerator".into()))?
        .rem(&big_s.pow(m))?;
    if TorsionValue::reduce(&p_s.s_substitute(), &big_m)? != v {
        return Err(Error::Internal("self-pairing numerator is not symmetric modulo the order".into()));
    }
    let p_inv = p_raw.inverse_mod(&big_m).map_err(|_| Error::Internal("numerator not invertible".into()))?;

    let pivot = tops
        .iter()
        .copied()
        .find(|&i| gamma[i].gcd(prime).is_one())
        .ok_or_else(|| Error::Internal("no pivot coordinate for the split".into()))?;
    let rest = piece.complement(&[pivot], |e| {
        let c = g.pair(e, &gamma).clear(&big_m).expect("order of γ kills φ(·, γ)");
        let theta = (&c * &p_inv).reduce_mod(&big_m)?;
        let y = sub_scaled(e, &theta, &gamma);
        if !g.pair(&y, &gamma).is_zero() {
            return Err(Error::Internal("projection is not orthogonal".into()));
        }
        Ok(y)
    })?;
    let block = CanonicalBlock::SymmetricCyclic { pi: big.clone(), n: m, p: p_s };
    Ok((block, vec![piece.global(&gamma)], rest))
}

/// Hyperbolic step for a conjugate pair (primes[0], primes[1]) or for 1+t
/// with odd top exponent once γ₁, γ₂ are in canonical position.
fn hyperbolic_split<'a>(
    piece: &Piece<'a>,
    q: &LaurentPoly,
    n: u32,
    gamma1: Vec<LaurentPoly>,
    gamma2: Vec<LaurentPoly>,
    pivots: (usize, usize),
) -> Result<Piece<'a>> {
    let g = &piece.gram;
    let qn = q.pow(n);
    let qbar_n = qn.bar();
    if g.pair(&gamma1, &gamma2) != TorsionValue::inverse_of(&qn)?
        || !g.pair(&gamma1, &gamma1).is_zero()
        || !g.pair(&gamma2, &gamma2).is_zero()
    {
        return Err(Error::Internal("hyperbolic pair is not in canonical position".into()));
    }
    piece.complement(&[pivots.0, pivots.1], |e| {
        let a = g.pair(e, &gamma2).clear(&qn).expect("order of γ₁").reduce_mod(&qn)?;
        let b = g.pair(e, &gamma1).clear(&qbar_n).expect("order of γ₂").reduce_mod(&qbar_n)?;
        let y = sub_scaled(&sub_scaled(e, &a, &gamma1), &b, &gamma2);
        if !g.pair(&y, &gamma1).is_zero() || !g.pair(&y, &gamma2).is_zero() {
            return Err(Error::Internal("projection is not orthogonal".into()));
        }
        Ok(y)
    })
}

fn pair_step<'a>(piece: &Piece<'a>, primes: &[LaurentPoly]) -> Result<Step<'a>> {
    let g = &piece.gram;
    let n = piece.top();
    let i0 = (0..piece.gens.len()).find(|&i| piece.exps[i] == n).expect("nonempty");
    let s = piece.side[i0];
    let q = &primes[s];
    let gamma1 = piece.unit(i0);
    let eta = g.dual(&gamma1, &q.pow(n)).map_err(|e| Error::DegenerateInput(e.to_string()))?;
    let gamma2: Vec<LaurentPoly> =
        eta.iter().enumerate().map(|(k, c)| if piece.side[k] == s { LaurentPoly::zero() } else { c.clone() }).collect();
    let other = &primes[1 - s];
    let j = (0..piece.gens.len())
        .find(|&j| piece.side[j] != s && piece.exps[j] == n && gamma2[j].gcd(other).is_one())
        .ok_or_else(|| Error::DegenerateInput("no partner of maximal order in the conjugate part".into()))?;
    let rest = hyperbolic_split(piece, q, n, gamma1.clone(), gamma2.clone(), (i0, j))?;
    let (g1, g2) = if s == 0 {
        (gamma1, gamma2)
    } else {
        // φ(γ₂, γ₁) = 1/q̄ⁿ; rescale γ₁ by a unit so the pairing is 1/πⁿ
        let w = q.bar().pow(n).unit_quotient(&primes[0].pow(n))?.ok_or_else(|| Error::Internal("conjugate primes".into()))?;
        let u = w.to_laurent().bar();
        (gamma2, gamma1.iter().map(|x| &u * x).collect())
    };
    let block = CanonicalBlock::HyperbolicPair { pi: primes[0].clone(), n };
    Ok((block, vec![piece.global(&g1), piece.global(&g2)], rest))
}

fn one_plus_t_odd_step<'a>(piece: &Piece<'a>) -> Result<Step<'a>> {
    let g = &piece.gram;
    let n = piece.top();
    let p = one_plus_t();
    let pn = p.pow(n);
    let tops: Vec<usize> = (0..piece.gens.len()).filter(|&i| piece.exps[i] == n).collect();
    if tops.len() % 2 == 1 {
        return Err(Error::ParityObstruction(format!("{} generators of odd order (1+t)^{}", tops.len(), n)));
    }
    let mut gamma1 = piece.unit(tops[0]);
    let mut gamma2 = g.dual(&gamma1, &pn).map_err(|e| Error::DegenerateInput(e.to_string()))?;
    let half = Rational::new(1.into(), 2.into());
    let minus_one = Rational::from_integer((-1).into());
    let mut last_k = u32::MAX;
    loop {
        let v = g.pair(&gamma1, &gamma1);
        check_even_at_one_plus_t(&v)?;
        if v.is_zero() {
            break;
        }
        let k2 = multiplicity(&v.den(), &p);
        if k2 >= last_k || k2 >= n {
            return Err(Error::Internal("self-pairing exponent did not decrease".into()));
        }
        last_k = k2;
        let c = v.num().evaluate(&minus_one)? * &half;
        let lambda = p.pow(n - k2).scale(&c);
        gamma1 = add_scaled(&gamma1, &lambda, &gamma2);
        // re-pair inside H = span(γ₁, γ₂)
        let sub = [gamma1.clone(), gamma2.clone()];
        let values: Vec<Vec<TorsionValue>> = sub.iter().map(|a| sub.iter().map(|b| g.pair(a, b)).collect()).collect();
        let h = Gram::new(vec![pn.clone(), pn.clone()], &values)?;
        let co = h.dual(&[LaurentPoly::one(), LaurentPoly::zero()], &pn).map_err(|e| Error::DegenerateInput(e.to_string()))?;
        gamma2 = add_scaled(&gamma1.iter().map(|x| &co[0] * x).collect::<Vec<_>>(), &co[1], &gamma2);
    }
    let v2 = g.pair(&gamma2, &gamma2);
    check_even_at_one_plus_t(&v2)?;
    if !v2.is_zero() {
        let l2 = multiplicity(&v2.den(), &p);
        let a = (&v2.num() * &p.pow(n - l2)).scale(&-half);
        gamma2 = add_scaled(&gamma2, &a, &gamma1);
    }
    let at = |x: &LaurentPoly| x.evaluate(&minus_one).expect("t = -1");
    let mut pivots = None;
    'outer: for (a, &i) in tops.iter().enumerate() {
        for &j in &tops[a + 1..] {
            let det = at(&gamma1[i]) * at(&gamma2[j]) - at(&gamma1[j]) * at(&gamma2[i]);
            if det != Rational::from_integer(0.into()) {
                pivots = Some((i, j));
                break 'outer;
            }
        }
    }
    let pivots = pivots.ok_or_else(|| Error::DegenerateInput("hyperbolic pair is not a direct summand".into()))?;
    let rest = hyperbolic_split(piece, &p, n, gamma1.clone(), gamma2.clone(), pivots)?;
    let block = CanonicalBlock::HyperbolicPair { pi: p, n };
    Ok((block, vec![piece.global(&gamma1), piece.global(&gamma2)], rest))
}

pub fn primary_split(f: &BlanchfieldForm) -> Result<Vec<PrimaryComponent>> {
    let module = f.module();
    if module.is_empty() {
        return Ok(Vec::new());
    }
    let coll = primary_collect(&factor_rational(&module.annihilator())?);
    if let Some(u) = coll.unmatched.first() {
        return Err(Error::InvalidOrder(format!("prime {} occurs without its conjugate", u.prime)));
    }
    let p = module.len();
    let build = |primes: Vec<LaurentPoly>| -> PrimaryComponent {
        let mut c = PrimaryComponent { primes: primes.clone(), generators: vec![], orders: vec![], prime_of: vec![], exponents: vec![] };
        for (s, pr) in primes.iter().enumerate() {
            for (i, d) in module.factors().iter().enumerate() {
                let e = multiplicity(d, pr);
                if e == 0 {
                    continue;
                }
                let order = pr.pow(e);
                let mut x = vec![LaurentPoly::zero(); p];
                x[i] = d.exact_div(&order).expect("prime power divides");
                c.generators.push(x);
                c.orders.push(order);
                c.prime_of.push(s);
                c.exponents.push(e);
            }
        }
        c
    };
    let mut out: Vec<PrimaryComponent> = coll.symmetric.iter().map(|pp| build(vec![pp.prime.clone()])).collect();
    out.extend(coll.pairs.iter().map(|(a, b)| build(vec![a.prime.clone(), b.prime.clone()])));
    let data = f.data();
    for (a, ca) in out.iter().enumerate() {
        for cb in &out[a + 1..] {
            for x in &ca.generators {
                for y in &cb.generators {
                    if !data.pair(x, y).is_zero() {
                        return Err(Error::Internal("distinct primary components are not orthogonal".into()));
                    }
                }
            }
        }
    }
    Ok(out)
}

fn decompose_component(f: &BlanchfieldForm, c: &PrimaryComponent) -> Result<(Vec<CanonicalBlock>, Vec<Vec<LaurentPoly>>)> {
    let kind = c.kind();
    let mut piece = Piece::new(f, c.generators.clone(), c.orders.clone(), c.exponents.clone(), c.prime_of.clone())?;
    if !piece.gram.is_nondegenerate() {
        return Err(Error::DegenerateInput(format!("form is degenerate on the {}-primary part", c.primes[0])));
    }
    let mut blocks = Vec::new();
    let mut basis = Vec::new();
    while !piece.is_empty() {
        let top = piece.top();
        let (block, gens, rest) = match kind {
            ComponentKind::Symmetric => {
                let pr = &c.primes[0];
                symmetric_step(&piece, pr, &centered(pr), top)?
            }
            ComponentKind::OnePlusT if top % 2 == 0 => {
                symmetric_step(&piece, &c.primes[0], &LaurentPoly::from_ints(-1, &[1, 2, 1]), top / 2)?
            }
            ComponentKind::OnePlusT => one_plus_t_odd_step(&piece)?,
            ComponentKind::Pair => pair_step(&piece, &c.primes)?,
        };
        blocks.push(block);
        basis.extend(gens);
        piece = rest;
    }
    Ok((blocks, basis))
}

fn precheck(f: &BlanchfieldForm) -> Result<()> {
    if !f.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    if !f.is_nondegenerate() {
        return Err(Error::DegenerateInput("form is degenerate".into()));
    }
    Ok(())
}

fn run(f: &BlanchfieldForm, want: Option<ComponentKind>) -> Result<DecompositionResult> {
    precheck(f)?;
    let comps = primary_split(f)?;
    if let Some(k) = want {
        if let Some(c) = comps.iter().find(|c| c.kind() != k) {
            return Err(Error::PreconditionViolated(format!("form has a component over {} of the wrong kind", c.primes[0])));
        }
    }
    let parts: Vec<(Vec<CanonicalBlock>, Vec<Vec<LaurentPoly>>)> =
        comps.par_iter().map(|c| decompose_component(f, c)).collect::<Result<_>>()?;
    let mut out = DecompositionResult { blocks: Vec::new(), basis: Vec::new() };
    for (b, g) in parts {
        out.blocks.extend(b);
        out.basis.extend(g);
    }
    let report = verify_decomposition(f, &out);
    if !report.ok {
        return Err(Error::Internal(format!("decomposition failed verification at {:?}", report.witness)));
    }
    Ok(out)
}

pub fn decompose(f: &BlanchfieldForm) -> Result<DecompositionResult> {
    run(f, None)
}

/// For forms whose module only involves symmetric primes other than 1+t.
pub fn decompose_symmetric(f: &BlanchfieldForm) -> Result<DecompositionResult> {
    run(f, Some(ComponentKind::Symmetric))
}

/// For forms whose module only involves conjugate pairs of primes.
pub fn decompose_conjugate_pair(f: &BlanchfieldForm) -> Result<DecompositionResult> {
    run(f, Some(ComponentKind::Pair))
}

/// For (1+t)-primary forms.
pub fn decompose_one_plus_t(f: &BlanchfieldForm) -> Result<DecompositionResult> {
    run(f, Some(ComponentKind::OnePlusT))
}

pub fn verify_decomposition(f: &BlanchfieldForm, r: &DecompositionResult) -> VerifyReport {
    let fail = |a: usize, b: usize| VerifyReport { ok: false, witness: Some((a, b)) };
    let mut expected_orders = Vec::new();
    let mut owner = Vec::new();
    let mut local = Vec::new();
    for (bi, b) in r.blocks.iter().enumerate() {
        for (k, o) in b.orders().into_iter().enumerate() {
            expected_orders.push(o);
            owner.push(bi);
            local.push(k);
        }
    }
    let total = expected_orders.len();
    if r.basis.len() != total || r.basis.iter().any(|row| row.len() != f.rank()) {
        return fail(r.basis.len().min(total), r.basis.len().min(total));
    }
    for (a, row) in r.basis.iter().enumerate() {
        match f.element_order(row) {
            Ok(o) if o == expected_orders[a] => {}
            _ => return fail(a, a),
        }
    }
    let grams: Vec<Vec<Vec<TorsionValue>>> = r.blocks.iter().map(|b| b.gram()).collect();
    for a in 0..total {
        for b in 0..total {
            let want = if owner[a] == owner[b] { grams[owner[a]][local[a]][local[b]].clone() } else { TorsionValue::zero() };
            if f.data().pair(&r.basis[a], &r.basis[b]) != want {
                return fail(a, b);
            }
        }
    }
    let dim: usize = r.blocks.iter().map(|b| b.dimension()).sum();
    if dim != f.module().dimension() {
        return VerifyReport { ok: false, witness: None };
    }
    VerifyReport { ok: true, witness: None }
}

/// Sort key making block multisets comparable.
pub fn block_key(b: &CanonicalBlock) -> (u8, usize, Vec<Rational>, u32) {
    let pi = b.pi().normalized();
    let kind = match b {
        CanonicalBlock::SymmetricCyclic { .. } => 0,
        CanonicalBlock::HyperbolicPair { .. } => 1,
    };
    (kind, pi.span_degree().unwrap_or(0), pi.body().coeffs(), b.n())
}

/// Canonical choice between π and π̄ for a hyperbolic block.
pub fn canonical_pair_prime(pi: &LaurentPoly) -> LaurentPoly {
    let a = pi.normalized();
    let b = pi.bar().normalized();
    if symmetry_tag(&a) != SymmetryTag::Asymmetric || canonical_cmp(&a, &b).is_le() {
        a
    } else {
        b
    }
}
