//! The invariant ring `R = Q[x_1..x_n]^{S_n}` in explicit coordinates and
//! the reduction of symmetric polynomials into those coordinates.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupalg::Permutation;
use crate::poly::{self, Monomial, MultiPoly, Rational};
use crate::text;

/// Which generators of `R` an [`InvariantPoly`] is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BasisKind {
    /// `e_1, ..., e_n`, `deg e_i = i`.
    Elementary,
    /// `s_1, ..., s_n`, `deg s_i = i`.
    PowerSum,
    /// `t_1, ..., t_{n-1}` on the hyperplane `e_1 = 0`, `t_i = e_{i+1}`, `deg t_i = i + 1`.
    SlicedT,
}

impl BasisKind {
    pub fn symbol(self) -> &'static str {
        match self {
            BasisKind::Elementary => "e",
            BasisKind::PowerSum => "s",
            BasisKind::SlicedT => "t",
        }
    }

    pub fn generator_count(self, n: usize) -> usize {
        match self {
            BasisKind::SlicedT => n - 1,
            _ => n,
        }
    }

    /// Degree of the zero based generator `i`.
    pub fn generator_degree(self, i: usize) -> u32 {
        match self {
            BasisKind::SlicedT => i as u32 + 2,
            _ => i as u32 + 1,
        }
    }
}

/// Element of `R`, a polynomial in the generators selected by `kind`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantPoly {
    kind: BasisKind,
    n: usize,
    poly: MultiPoly,
}

impl InvariantPoly {
    pub fn zero(kind: BasisKind, n: usize) -> Self {
        InvariantPoly { kind, n, poly: MultiPoly::zero(kind.generator_count(n)) }
    }

    pub fn constant(kind: BasisKind, n: usize, c: Rational) -> Self {
        InvariantPoly { kind, n, poly: MultiPoly::constant(kind.generator_count(n), c) }
    }

    pub fn one(kind: BasisKind, n: usize) -> Self {
        Self::constant(kind, n, Rational::one())
    }

    /// Generator `index` (one based, as printed).
    pub fn generator(kind: BasisKind, n: usize, index: usize) -> Result<Self> {
        let count = kind.generator_count(n);
        if index == 0 || index > count {
            return Err(Error::IndexOutOfRange { index, max: count });
        }
        Ok(InvariantPoly { kind, n, poly: MultiPoly::var(count, index - 1) })
    }

    pub fn from_poly(kind: BasisKind, n: usize, poly: MultiPoly) -> Result<Self> {
        if poly.nvars() != kind.generator_count(n) {
            return Err(Error::Dimension { expected: kind.generator_count(n), found: poly.nvars() });
        }
        Ok(InvariantPoly { kind, n, poly })
    }

    /// Build from `(exponents over generators, coefficient)` pairs.
    pub fn from_terms<I>(kind: BasisKind, n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let count = kind.generator_count(n);
        let mut p = MultiPoly::zero(count);
        for (exps, c) in terms {
            if exps.len() != count {
                return Err(Error::Dimension { expected: count, found: exps.len() });
            }
            p.add_term(Monomial::new(&exps)?, c);
        }
        Ok(InvariantPoly { kind, n, poly: p })
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    /// Number of variables of the ambient polynomial ring.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.poly.as_constant()
    }

    pub fn len(&self) -> usize {
        self.poly.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poly.is_empty()
    }

    /// `(exponents, coefficient)` pairs in canonical order.
    pub fn terms(&self) -> Vec<(Vec<u32>, Rational)> {
        let count = self.kind.generator_count(self.n);
        let mut terms: Vec<(Vec<u32>, Rational)> = self
            .poly
            .terms()
            .map(|(m, c)| (m.exponents(count), c.clone()))
            .collect();
        let kind = self.kind;
        terms.sort_by(|(a, _), (b, _)| {
            weighted(kind, b).cmp(&weighted(kind, a)).then_with(|| b.cmp(a))
        });
        terms
    }

    pub fn weighted_degrees(&self) -> Vec<u32> {
        let count = self.kind.generator_count(self.n);
        self.poly.terms().map(|(m, _)| weighted(self.kind, &m.exponents(count))).collect()
    }

    /// Common graded degree of all terms; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let degs = self.weighted_degrees();
        let first = *degs.first()?;
        degs.iter().all(|&d| d == first).then_some(first)
    }

    fn check(&self, other: &InvariantPoly) -> Result<()> {
        if self.kind != other.kind || self.n != other.n {
            return Err(Error::ShapeMismatch(format!(
                "invariant polynomials over {}{} and {}{}",
                self.kind.symbol(),
                self.n,
                other.kind.symbol(),
                other.n
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &InvariantPoly) -> Result<InvariantPoly> {
        self.check(other)?;
        Ok(InvariantPoly { kind: self.kind, n: self.n, poly: self.poly.checked_add(&other.poly)? })
    }

    pub fn checked_sub(&self, other: &InvariantPoly) -> Result<InvariantPoly> {
        self.check(other)?;
        Ok(InvariantPoly { kind: self.kind, n: self.n, poly: self.poly.checked_sub(&other.poly)? })
    }

    pub fn checked_mul(&self, other: &InvariantPoly) -> Result<InvariantPoly> {
        self.check(other)?;
        Ok(InvariantPoly { kind: self.kind, n: self.n, poly: self.poly.checked_mul(&other.poly)? })
    }

    pub fn scale(&self, c: &Rational) -> InvariantPoly {
        InvariantPoly { kind: self.kind, n: self.n, poly: self.poly.scale(c) }
    }

    pub fn neg(&self) -> InvariantPoly {
        self.scale(&-Rational::one())
    }

    pub fn exact_divide(&self, other: &InvariantPoly) -> Result<InvariantPoly> {
        self.check(other)?;
        Ok(InvariantPoly { kind: self.kind, n: self.n, poly: poly::exact_divide(&self.poly, &other.poly)? })
    }

    /// `Some(c)` with `self = c * other`, `c` a nonzero rational.
    pub fn ratio_to(&self, other: &InvariantPoly) -> Option<Rational> {
        if self.kind != other.kind || self.n != other.n || self.is_zero() || other.is_zero() {
            return None;
        }
        let (m, c) = other.poly.terms().next()?;
        let c = self.poly.coefficient(m) / c;
        (!c.is_zero() && other.scale(&c) == *self).then_some(c)
    }

    /// Evaluate at `images[i]` for generator `i`.
    pub fn substitute(&self, images: &[InvariantPoly]) -> Result<InvariantPoly> {
        let first = images.first().ok_or_else(|| Error::Internal("no substitution images".into()))?;
        let (kind, n) = (first.kind, first.n);
        let values: Vec<MultiPoly> = images.iter().map(|g| g.poly.clone()).collect();
        let poly = substitute_polys(&self.poly, &values, kind.generator_count(n))?;
        Ok(InvariantPoly { kind, n, poly })
    }

    /// Expand into the polynomial ring: `n` variables, or `n - 1` variables
    /// (standing for `x_2..x_n`) for sliced coordinates.
    pub fn expand(&self) -> Result<MultiPoly> {
        let n = self.n;
        let images: Vec<MultiPoly> = match self.kind {
            BasisKind::Elementary => (1..=n).map(|i| poly::elementary_symmetric(i, n)).collect::<Result<_>>()?,
            BasisKind::PowerSum => (1..=n).map(|i| poly::power_sum(i, n)).collect::<Result<_>>()?,
            BasisKind::SlicedT => (2..=n)
                .map(|i| poly::elementary_symmetric(i, n).map(|e| poly::slice_substitute(&e)))
                .collect::<Result<_>>()?,
        };
        let nvars = if self.kind == BasisKind::SlicedT { n - 1 } else { n };
        substitute_polys(&self.poly, &images, nvars)
    }

    /// Rewrite in other coordinates. Supported: e <-> s and e -> t.
    pub fn convert(&self, target: BasisKind) -> Result<InvariantPoly> {
        use BasisKind::*;
        match (self.kind, target) {
            (a, b) if a == b => Ok(self.clone()),
            (Elementary, PowerSum) => self.substitute(&elementary_in_power_sums(self.n)),
            (PowerSum, Elementary) => self.substitute(&power_sums_in_elementary(self.n)),
            (Elementary, SlicedT) => {
                let count = self.n - 1;
                let mut p = MultiPoly::zero(count);
                for (m, c) in self.poly.terms() {
                    let exps = m.exponents(self.n);
                    if exps[0] == 0 {
                        p.add_term(Monomial::new(&exps[1..])?, c.clone());
                    }
                }
                Ok(InvariantPoly { kind: SlicedT, n: self.n, poly: p })
            }
            (PowerSum, SlicedT) => self.convert(Elementary)?.convert(SlicedT),
            (SlicedT, _) => Err(Error::Usage("sliced coordinates cannot be lifted back to the full ring".into())),
            _ => unreachable!(),
        }
    }

    pub fn to_text(&self) -> String {
        let sym = self.kind.symbol();
        text::render_terms(&self.terms(), &|i| format!("{sym}{}", i + 1))
    }

    pub fn parse(kind: BasisKind, n: usize, input: &str) -> Result<InvariantPoly> {
        let sym = kind.symbol();
        let poly = MultiPoly::parse_with(input, kind.generator_count(n), |name| text::indexed_name(name, sym))?;
        Ok(InvariantPoly { kind, n, poly })
    }

    pub fn to_json(&self) -> InvariantPolyJson {
        InvariantPolyJson {
            basis_kind: self.kind,
            n: self.n,
            terms: self
                .terms()
                .into_iter()
                .map(|(exponents, c)| TermJson { exponents, coefficient: text::format_rational(&c) })
                .collect(),
        }
    }

    pub fn from_json(json: &InvariantPolyJson) -> Result<InvariantPoly> {
        let terms = json
            .terms
            .iter()
            .map(|t| Ok((t.exponents.clone(), text::parse_rational(&t.coefficient)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(json.basis_kind, json.n, terms)
    }
}

impl fmt::Display for InvariantPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantPolyJson {
    pub basis_kind: BasisKind,
    pub n: usize,
    pub terms: Vec<TermJson>,
}

fn weighted(kind: BasisKind, exps: &[u32]) -> u32 {
    exps.iter().enumerate().map(|(i, &a)| a * kind.generator_degree(i)).sum()
}

/// `Σ c Π images[i]^{a_i}` with cached powers.
fn substitute_polys(p: &MultiPoly, images: &[MultiPoly], nvars: usize) -> Result<MultiPoly> {
    if images.len() != p.nvars() {
        return Err(Error::Dimension { expected: p.nvars(), found: images.len() });
    }
    let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|g| vec![MultiPoly::one(g.nvars()), g.clone()]).collect();
    let mut out = MultiPoly::zero(nvars);
    for (m, c) in p.terms() {
        let mut term = MultiPoly::constant(nvars, c.clone());
        for (i, cache) in powers.iter_mut().enumerate() {
            let e = m.exponent(i) as usize;
            while cache.len() <= e {
                let next = cache.last().unwrap().checked_mul(&images[i])?;
                cache.push(next);
            }
            if e > 0 {
                term = term.checked_mul(&cache[e])?;
            }
        }
        out = out.checked_add(&term)?;
    }
    Ok(out)
}

/// `e_1..e_n` written in power sums (Newton's identities).
pub fn elementary_in_power_sums(n: usize) -> Vec<InvariantPoly> {
    let kind = BasisKind::PowerSum;
    let s: Vec<InvariantPoly> = (1..=n).map(|i| InvariantPoly::generator(kind, n, i).unwrap()).collect();
    let mut e = vec![InvariantPoly::one(kind, n)];
    for k in 1..=n {
        let mut acc = InvariantPoly::zero(kind, n);
        for i in 1..=k {
            let term = e[k - i].checked_mul(&s[i - 1]).unwrap();
            acc = if i % 2 == 1 { acc.checked_add(&term) } else { acc.checked_sub(&term) }.unwrap();
        }
        e.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(k))));
    }
    e.split_off(1)
}

/// `s_1..s_n` written in elementary symmetric polynomials.
pub fn power_sums_in_elementary(n: usize) -> Vec<InvariantPoly> {
    let kind = BasisKind::Elementary;
    let e: Vec<InvariantPoly> = (1..=n).map(|i| InvariantPoly::generator(kind, n, i).unwrap()).collect();
    let mut s: Vec<InvariantPoly> = Vec::with_capacity(n);
    for k in 1..=n {
        // s_k = (-1)^{k-1} k e_k + Σ_{i=1}^{k-1} (-1)^{k-1+i} e_{k-i} s_i
        let sign = |p: u32| if p.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
        let mut acc = e[k - 1].scale(&(sign(k as u32 - 1) * Rational::from_integer(BigInt::from(k))));
        for i in 1..k {
            let term = e[k - i - 1].checked_mul(&s[i - 1]).unwrap().scale(&sign((k - 1 + i) as u32));
            acc = acc.checked_add(&term).unwrap();
        }
        s.push(acc);
    }
    s
}

pub fn is_symmetric(f: &MultiPoly) -> bool {
    let n = f.nvars();
    (0..n.saturating_sub(1)).all(|i| {
        poly::permute(f, &Permutation::transposition(n, i, i + 1)).map(|g| g == *f).unwrap_or(false)
    })
}

pub(crate) type Dominant = BTreeMap<Vec<u32>, Rational>;

/// Coefficients of a symmetric polynomial on weakly decreasing exponents;
/// by symmetry these determine the whole polynomial.
fn dominant_part(f: &MultiPoly) -> Dominant {
    let n = f.nvars();
    f.terms()
        .map(|(m, c)| (m.exponents(n), c))
        .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
        .map(|(e, c)| (e, c.clone()))
        .collect()
}

fn sorted_desc(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Multiply a symmetric polynomial in dominant form by `e_i`.
fn dominant_times_e(f: &Dominant, i: usize, n: usize) -> Dominant {
    let subsets: Vec<u32> = (0u32..(1 << n)).filter(|m| m.count_ones() as usize == i).collect();
    let mut targets: std::collections::BTreeSet<Vec<u32>> = Default::default();
    for nu in f.keys() {
        for &mask in &subsets {
            let mu: Vec<u32> = (0..n).map(|k| nu[k] + ((mask >> k) & 1)).collect();
            targets.insert(sorted_desc(mu));
        }
    }
    let mut out = Dominant::new();
    for mu in targets {
        let mut c = Rational::zero();
        for &mask in &subsets {
            if (0..n).all(|k| (mask >> k) & 1 == 0 || mu[k] > 0) {
                let beta: Vec<u32> = (0..n).map(|k| mu[k] - ((mask >> k) & 1)).collect();
                if let Some(v) = f.get(&sorted_desc(beta)) {
                    c += v;
                }
            }
        }
        if !c.is_zero() {
            out.insert(mu, c);
        }
    }
    out
}

/// Dominant forms of e-monomials, memoized within one reduction.
struct ElementaryProducts {
    n: usize,
    cache: HashMap<Vec<u32>, Dominant>,
}

impl ElementaryProducts {
    fn new(n: usize) -> Self {
        let mut cache = HashMap::new();
        cache.insert(vec![0; n], Dominant::from([(vec![0; n], Rational::one())]));
        ElementaryProducts { n, cache }
    }

    fn get(&mut self, exps: &[u32]) -> Dominant {
        if let Some(d) = self.cache.get(exps) {
            return d.clone();
        }
        let j = (0..self.n).rev().find(|&k| exps[k] > 0).expect("nonzero exponent vector");
        let mut lower = exps.to_vec();
        lower[j] -= 1;
        let base = self.get(&lower);
        let d = dominant_times_e(&base, j + 1, self.n);
        self.cache.insert(exps.to_vec(), d.clone());
        d
    }
}

/// Write a symmetric polynomial in elementary symmetric or power-sum
/// coordinates, using the leading-term descent in lex order.
pub fn symmetric_reduce(f: &MultiPoly, kind: BasisKind) -> Result<InvariantPoly> {
    let n = f.nvars();
    if !is_symmetric(f) {
        return Err(Error::NotSymmetric);
    }
    let elementary = reduce_dominant(dominant_part(f), n)?;
    match kind {
        BasisKind::Elementary => Ok(elementary),
        BasisKind::PowerSum => elementary.convert(BasisKind::PowerSum),
        BasisKind::SlicedT => Err(Error::Usage("use the sliced reduction for t coordinates".into())),
    }
}

pub(crate) fn reduce_dominant(mut rem: Dominant, n: usize) -> Result<InvariantPoly> {
    let mut products = ElementaryProducts::new(n);
    let mut out = MultiPoly::zero(n);
    while let Some((lead, c)) = rem.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
        let mut exps: Vec<u32> = (0..n - 1).map(|k| lead[k] - lead[k + 1]).collect();
        exps.push(lead[n - 1]);
        for (mu, v) in products.get(&exps) {
            let entry = rem.entry(mu).or_insert_with(Rational::zero);
            *entry -= &c * v;
            if entry.is_zero() {
                let key = entry.clone();
                drop(key);
            }
        }
        rem.retain(|_, v| !v.is_zero());
        out.add_term(Monomial::new(&exps)?, c);
    }
    InvariantPoly::from_poly(BasisKind::Elementary, n, out)
}

/// Reduce a polynomial on the slice `x1 = -(x2 + ... + xn)` (given in
/// `n - 1` variables) into the coordinates `t_i = e_{i+1}|slice` by an exact
/// graded linear solve against products of the `t_i`.
pub fn sliced_reduce(g: &MultiPoly, n: usize) -> Result<InvariantPoly> {
    if g.nvars() + 1 != n {
        return Err(Error::Dimension { expected: n - 1, found: g.nvars() });
    }
    let kind = BasisKind::SlicedT;
    if g.is_zero() {
        return Ok(InvariantPoly::zero(kind, n));
    }
    let mut total = InvariantPoly::zero(kind, n);
    // split into homogeneous pieces
    let mut pieces: BTreeMap<u32, MultiPoly> = BTreeMap::new();
    for (m, c) in g.terms() {
        pieces.entry(m.degree()).or_insert_with(|| MultiPoly::zero(n - 1)).add_term(*m, c.clone());
    }
    let gens: Vec<MultiPoly> = (2..=n)
        .map(|i| poly::elementary_symmetric(i, n).map(|e| poly::slice_substitute(&e)))
        .collect::<Result<_>>()?;
    for (deg, piece) in pieces {
        let exps_list = weighted_exponents(&(0..n - 1).map(|i| kind.generator_degree(i)).collect::<Vec<_>>(), deg);
        let columns: Vec<MultiPoly> = exps_list
            .iter()
            .map(|exps| {
                let p = InvariantPoly::from_terms(kind, n, [(exps.clone(), Rational::one())])?;
                substitute_polys(&p.poly, &gens, n - 1)
            })
            .collect::<Result<_>>()?;
        let mut monomials: Vec<Monomial> = piece.terms().map(|(m, _)| *m).collect();
        for col in &columns {
            monomials.extend(col.terms().map(|(m, _)| *m));
        }
        monomials.sort_unstable();
        monomials.dedup();
        let rows: Vec<Vec<Rational>> =
            monomials.iter().map(|m| columns.iter().map(|c| c.coefficient(m)).collect()).collect();
        let rhs: Vec<Rational> = monomials.iter().map(|m| piece.coefficient(m)).collect();
        let sol = crate::linalg::solve(&rows, &rhs)
            .map_err(|e| Error::NotInSpan(format!("slice reduction in degree {deg}: {e}")))?;
        let part = InvariantPoly::from_terms(kind, n, exps_list.into_iter().zip(sol))?;
        total = total.checked_add(&part)?;
    }
    Ok(total)
}

/// All exponent vectors `a` with `Σ a_i w_i = degree`.
pub fn weighted_exponents(weights: &[u32], degree: u32) -> Vec<Vec<u32>> {
    fn rec(weights: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == weights.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = weights[i];
        for a in 0..=left / w {
            cur.push(a);
            rec(weights, i + 1, left - a * w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(weights, 0, degree, &mut Vec::new(), &mut out);
    out
}
