//! Sparse multivariate polynomials over the rationals.
//!
//! Monomials are packed into a single `u64`: the top byte holds the total
//! degree and the following bytes hold the exponents of `x1, x2, ...` in
//! that order, so the derived integer ordering of [`Monomial`] is exactly
//! graded-lex with `x1 > x2 > ... > xn`.  This caps the ambient ring at
//! [`MAX_VARS`] variables and total degree 255, both far above desk scale.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groupalg::Permutation;
use crate::modp;
use crate::text;

pub type Rational = num_rational::BigRational;

/// Largest supported number of variables.
pub const MAX_VARS: usize = 7;

const DEGREE_SHIFT: u32 = 56;
const LEX_MASK: u64 = (1 << DEGREE_SHIFT) - 1;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    #[inline]
    fn shift(var: usize) -> u32 {
        8 * (6 - var as u32)
    }

    pub fn new(exponents: &[u32]) -> Result<Self> {
        if exponents.len() > MAX_VARS {
            return Err(Error::TooManyVariables(exponents.len()));
        }
        let total: u32 = exponents.iter().sum();
        if total > 255 {
            return Err(Error::ExponentOverflow);
        }
        let mut packed = (total as u64) << DEGREE_SHIFT;
        for (i, &e) in exponents.iter().enumerate() {
            packed |= (e as u64) << Self::shift(i);
        }
        Ok(Monomial(packed))
    }

    /// `x_var^1`.
    pub fn var(var: usize) -> Self {
        assert!(var < MAX_VARS);
        Monomial((1u64 << DEGREE_SHIFT) | (1u64 << Self::shift(var)))
    }

    #[inline]
    pub fn exponent(self, var: usize) -> u32 {
        ((self.0 >> Self::shift(var)) & 0xff) as u32
    }

    #[inline]
    pub fn degree(self) -> u32 {
        (self.0 >> DEGREE_SHIFT) as u32
    }

    pub fn exponents(self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exponent(i)).collect()
    }

    pub fn checked_mul(self, other: Monomial) -> Result<Monomial> {
        // every exponent is bounded by the total degree, so one check suffices
        if self.degree() + other.degree() > 255 {
            return Err(Error::ExponentOverflow);
        }
        Ok(Monomial(self.0 + other.0))
    }

    #[inline]
    fn mul_unchecked(self, other: Monomial) -> Monomial {
        Monomial(self.0 + other.0)
    }

    pub fn divides(self, other: Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exponent(i) <= other.exponent(i))
    }

    /// `other / self`, assuming `self` divides `other`.
    fn quotient_of(self, other: Monomial) -> Monomial {
        Monomial(other.0 - self.0)
    }

    /// Key whose integer order is pure lex (degree byte ignored).
    #[inline]
    fn lex_key(self) -> u64 {
        self.0 & LEX_MASK
    }

    fn from_lex_key(key: u64) -> Monomial {
        let deg: u64 = (0..MAX_VARS).map(|i| (key >> Self::shift(i)) & 0xff).sum();
        Monomial(key | (deg << DEGREE_SHIFT))
    }
}

/// Polynomial in `nvars` variables with exact rational coefficients.
///
/// Terms are kept in a `BTreeMap` ordered graded-lex; zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::ONE, c);
        }
        p
    }

    /// The variable `x_{index+1}` (zero based index).
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars);
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial::var(index), Rational::one());
        p
    }

    pub fn monomial(nvars: usize, exponents: &[u32], c: Rational) -> Result<Self> {
        if exponents.len() != nvars {
            return Err(Error::Dimension { expected: nvars, found: exponents.len() });
        }
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::new(exponents)?, c);
        }
        Ok(p)
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::ONE)
    }

    /// `Some(c)` when the polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Largest total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    /// `Some(d)` if every term has total degree `d`; the zero polynomial is
    /// homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let first = self.terms.keys().next()?.degree();
        let last = self.terms.keys().next_back()?.degree();
        (first == last).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn check_same(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension { expected: self.nvars, found: other.nvars });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MultiPoly::zero(self.nvars));
        }
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            if a + b > 255 {
                return Err(Error::ExponentOverflow);
            }
        }
        // integer accumulation avoids a gcd per coefficient operation
        let (fa, da) = self.integer_form();
        let (fb, db) = other.integer_form();
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(fa.len() * 2);
        for (ma, ca) in &fa {
            for (mb, cb) in &fb {
                let prod = ca * cb;
                acc.entry(ma.mul_unchecked(*mb))
                    .and_modify(|v| *v += &prod)
                    .or_insert(prod);
            }
        }
        let denom = da * db;
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m, Rational::new(c, denom.clone())))
            .collect();
        Ok(MultiPoly { nvars: self.nvars, terms })
    }

    /// Integer coefficients together with their common denominator.
    pub(crate) fn integer_form(&self) -> (Vec<(Monomial, BigInt)>, BigInt) {
        let denom = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, c.numer() * (&denom / c.denom())))
            .collect();
        (terms, denom)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial, c: &Rational) -> Result<MultiPoly> {
        if c.is_zero() || self.is_zero() {
            return Ok(MultiPoly::zero(self.nvars));
        }
        if self.degree().unwrap_or(0) + m.degree() > 255 {
            return Err(Error::ExponentOverflow);
        }
        Ok(MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.mul_unchecked(m), v * c)).collect(),
        })
    }

    pub fn pow(&self, e: u32) -> Result<MultiPoly> {
        let mut result = MultiPoly::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Substitute `x_i -> x_{images[i]}` (zero based images).
    pub fn rename_vars(&self, images: &[usize]) -> Result<MultiPoly> {
        if images.len() != self.nvars {
            return Err(Error::Dimension { expected: self.nvars, found: images.len() });
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut packed = m.0 & !LEX_MASK;
            for (i, &target) in images.iter().enumerate() {
                packed |= (m.exponent(i) as u64) << Monomial::shift(target);
            }
            (Monomial(packed), c.clone())
        });
        Ok(MultiPoly { nvars: self.nvars, terms: terms.collect() })
    }

    pub fn derivative(&self, var: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e > 0 {
                let reduced = Monomial(m.0 - (1u64 << DEGREE_SHIFT) - (1u64 << Monomial::shift(var)));
                out.add_term(reduced, c * Rational::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Lex-leading term (pure lex, `x1 > x2 > ...`).
    pub fn lex_leading(&self) -> Option<(Monomial, &Rational)> {
        self.terms.iter().max_by_key(|(m, _)| m.lex_key()).map(|(m, c)| (*m, c))
    }

    /// Evaluate modulo the prime `p`; `None` if a denominator vanishes mod `p`.
    pub fn eval_mod(&self, p: u64, point: &[u64]) -> Option<u64> {
        debug_assert_eq!(point.len(), self.nvars);
        let mut powers: Vec<Vec<u64>> = Vec::with_capacity(self.nvars);
        let maxdeg = self.degree().unwrap_or(0) as usize;
        for &x in point {
            let mut row = Vec::with_capacity(maxdeg + 1);
            let mut acc = 1u64;
            for _ in 0..=maxdeg {
                row.push(acc);
                acc = modp::mul(acc, x, p);
            }
            powers.push(row);
        }
        let mut total = 0u64;
        for (m, c) in &self.terms {
            let cm = modp::rational(c, p)?;
            let mut v = cm;
            for (i, row) in powers.iter().enumerate() {
                let e = m.exponent(i) as usize;
                if e > 0 {
                    v = modp::mul(v, row[e], p);
                }
            }
            total = modp::add(total, v, p);
        }
        Some(total)
    }

    pub fn to_text_with<F: Fn(usize) -> String>(&self, name: F) -> String {
        let terms: Vec<(Vec<u32>, Rational)> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| (m.exponents(self.nvars), c.clone()))
            .collect();
        text::render_terms(&terms, &name)
    }

    pub fn parse_with<F: Fn(&str) -> Option<usize>>(
        input: &str,
        nvars: usize,
        var_index: F,
    ) -> Result<MultiPoly> {
        let mut p = MultiPoly::zero(nvars);
        for (exps, c) in text::parse_terms(input, nvars, &var_index)? {
            p.add_term(Monomial::new(&exps)?, c);
        }
        Ok(p)
    }

    /// Parse text over `x1..xn`.
    pub fn parse(input: &str, nvars: usize) -> Result<MultiPoly> {
        Self::parse_with(input, nvars, |name| text::indexed_name(name, "x"))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text_with(|i| format!("x{}", i + 1)))
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("polynomials over different rings")
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("polynomials over different rings")
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("polynomials over different rings")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

pub fn add(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly> {
    f.checked_add(g)
}

pub fn mul(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly> {
    f.checked_mul(g)
}

pub fn scale(f: &MultiPoly, c: &Rational) -> MultiPoly {
    f.scale(c)
}

/// Apply `π`, sending `x_i` to `x_{π(i)}`.
pub fn permute(f: &MultiPoly, pi: &Permutation) -> Result<MultiPoly> {
    if pi.len() != f.nvars() {
        return Err(Error::Dimension { expected: f.nvars(), found: pi.len() });
    }
    f.rename_vars(pi.images())
}

/// `z = Π_{i<j} (x_i - x_j)`.
pub fn vandermonde(n: usize) -> MultiPoly {
    assert!((1..=MAX_VARS).contains(&n));
    let mut z = MultiPoly::one(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let factor = &MultiPoly::var(n, i) - &MultiPoly::var(n, j);
            z = &z * &factor;
        }
    }
    z
}

/// Exact quotient `f / g`, using lex division by the single divisor `g`.
///
/// Fails with [`Error::NotDivisible`] as soon as a remainder term appears.
pub fn exact_divide(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly> {
    f.check_same(g)?;
    let (lead, lead_coeff) = match g.lex_leading() {
        Some((m, c)) => (m, c.clone()),
        None => return Err(Error::Internal("division by the zero polynomial".into())),
    };
    let divisor: Vec<(Monomial, Rational)> =
        g.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
    let mut rem: BTreeMap<u64, Rational> =
        f.terms.iter().map(|(m, c)| (m.lex_key(), c.clone())).collect();
    let mut quotient = MultiPoly::zero(f.nvars);
    while let Some((&key, _)) = rem.iter().next_back() {
        let c = rem.remove(&key).expect("present");
        let m = Monomial::from_lex_key(key);
        if !lead.divides(m) {
            return Err(Error::NotDivisible);
        }
        let qm = lead.quotient_of(m);
        let qc = &c / &lead_coeff;
        for (gm, gc) in &divisor {
            if *gm == lead {
                continue;
            }
            let k = qm.mul_unchecked(*gm).lex_key();
            let delta = -(&qc * gc);
            match rem.entry(k) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(delta);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    *o.get_mut() += delta;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
        quotient.add_term(qm, qc);
    }
    if &quotient * g != *f {
        return Err(Error::Integrity("quotient times divisor does not reproduce the dividend".into()));
    }
    Ok(quotient)
}

/// `e_i(x_1, ..., x_n)`.
pub fn elementary_symmetric(i: usize, n: usize) -> Result<MultiPoly> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    if n > MAX_VARS {
        return Err(Error::TooManyVariables(n));
    }
    let mut p = MultiPoly::zero(n);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == i {
            let exps: Vec<u32> = (0..n).map(|k| (mask >> k) & 1).collect();
            p.add_term(Monomial::new(&exps)?, Rational::one());
        }
    }
    Ok(p)
}

/// `s_i = x_1^i + ... + x_n^i`; any `i >= 1` is allowed.
pub fn power_sum(i: usize, n: usize) -> Result<MultiPoly> {
    if i == 0 {
        return Err(Error::IndexOutOfRange { index: i, max: usize::MAX });
    }
    if n > MAX_VARS {
        return Err(Error::TooManyVariables(n));
    }
    let mut p = MultiPoly::zero(n);
    for k in 0..n {
        let mut exps = vec![0u32; n];
        exps[k] = i as u32;
        p.add_term(Monomial::new(&exps)?, Rational::one());
    }
    Ok(p)
}

/// Restrict to the hyperplane `x1 + ... + xn = 0`: `x1 -> -(x2 + ... + xn)`.
/// The result lives in `n - 1` variables standing for `x2, ..., xn`.
pub fn slice_substitute(f: &MultiPoly) -> MultiPoly {
    let n = f.nvars();
    assert!(n >= 2, "slicing needs at least two variables");
    let m = n - 1;
    let mut by_power: BTreeMap<u32, MultiPoly> = BTreeMap::new();
    for (mon, c) in f.terms() {
        let exps = mon.exponents(n);
        let rest = Monomial::new(&exps[1..]).expect("fewer variables than input");
        by_power
            .entry(exps[0])
            .or_insert_with(|| MultiPoly::zero(m))
            .add_term(rest, c.clone());
    }
    let neg_sum = -(0..m).fold(MultiPoly::zero(m), |acc, k| &acc + &MultiPoly::var(m, k));
    let mut out = MultiPoly::zero(m);
    let mut power = MultiPoly::one(m);
    let mut current = 0;
    for (k, part) in by_power {
        while current < k {
            power = &power * &neg_sum;
            current += 1;
        }
        out = &out + &(&power * &part);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        let a = Monomial::new(&[2, 0, 0]).unwrap();
        let b = Monomial::new(&[1, 1, 0]).unwrap();
        let c = Monomial::new(&[0, 0, 3]).unwrap();
        assert!(a > b);
        assert!(c > a);
        assert_eq!(c.degree(), 3);
        assert_eq!(b.exponents(3), vec![1, 1, 0]);
    }

    #[test]
    fn additive_inverse_cancels() {
        let x1 = MultiPoly::var(2, 0);
        assert!(add(&x1, &-&x1).unwrap().is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let x1 = MultiPoly::var(2, 0);
        let x2 = MultiPoly::var(2, 1);
        let p = &(&x1 - &x2) * &(&x1 + &x2);
        assert_eq!(p.to_string(), "x1^2 - x2^2");
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = MultiPoly::var(2, 0);
        let b = MultiPoly::var(3, 0);
        assert!(matches!(add(&a, &b), Err(Error::Dimension { .. })));
        assert!(matches!(mul(&a, &b), Err(Error::Dimension { .. })));
    }

    #[test]
    fn scaled_vandermonde_has_sixths() {
        let z = vandermonde(3).scale(&q(1, 6));
        assert_eq!(z.len(), 6);
        for (_, c) in z.terms() {
            assert!(*c == q(1, 6) || *c == q(-1, 6));
        }
    }

    #[test]
    fn vandermonde_small_cases() {
        assert_eq!(vandermonde(2).to_string(), "x1 - x2");
        assert_eq!(
            vandermonde(3),
            MultiPoly::parse(
                "x1^2*x2 - x1^2*x3 - x1*x2^2 + x1*x3^2 + x2^2*x3 - x2*x3^2",
                3
            )
            .unwrap()
        );
        for n in 1..=6 {
            let z = vandermonde(n);
            assert_eq!(z.homogeneous_degree().unwrap_or(0), (n * (n - 1) / 2) as u32);
        }
    }

    #[test]
    fn permute_moves_variables() {
        let x1 = MultiPoly::var(3, 0);
        let swap = Permutation::transposition(3, 0, 1);
        assert_eq!(permute(&x1, &swap).unwrap(), MultiPoly::var(3, 1));
    }

    #[test]
    fn exact_division_cases() {
        let x1 = MultiPoly::var(2, 0);
        let x2 = MultiPoly::var(2, 1);
        let num = &(&x1 * &x1) - &(&x2 * &x2);
        let den = &x1 - &x2;
        assert_eq!(exact_divide(&num, &den).unwrap(), &x1 + &x2);
        assert_eq!(exact_divide(&x1, &x2), Err(Error::NotDivisible));
        for n in [3, 4] {
            let z = vandermonde(n);
            assert_eq!(exact_divide(&(&z * &z), &z).unwrap(), z);
        }
    }

    #[test]
    fn symmetric_generators() {
        assert_eq!(elementary_symmetric(2, 3).unwrap().to_string(), "x1*x2 + x1*x3 + x2*x3");
        for n in 1..=5 {
            assert_eq!(power_sum(1, n).unwrap(), elementary_symmetric(1, n).unwrap());
        }
        assert!(elementary_symmetric(0, 3).is_err());
        assert!(elementary_symmetric(4, 3).is_err());
        assert!(power_sum(0, 3).is_err());
        assert_eq!(power_sum(5, 2).unwrap().to_string(), "x1^5 + x2^5");
    }

    #[test]
    fn slice_kills_e1() {
        for n in 2..=5 {
            assert!(slice_substitute(&elementary_symmetric(1, n).unwrap()).is_zero());
        }
        let e2 = slice_substitute(&elementary_symmetric(2, 3).unwrap());
        // variables of the slice print as x1, x2 but stand for x2, x3
        assert_eq!(e2.to_string(), "-x1^2 - x1*x2 - x2^2");
    }

    #[test]
    fn derivative_and_pow() {
        let p = MultiPoly::parse("x1^3*x2 + 2*x2", 2).unwrap();
        assert_eq!(p.derivative(0).to_string(), "3*x1^2*x2");
        assert_eq!(p.derivative(1).to_string(), "x1^3 + 2");
        let s = MultiPoly::parse("x1 + x2", 2).unwrap();
        assert_eq!(s.pow(2).unwrap().to_string(), "x1^2 + 2*x1*x2 + x2^2");
    }
}
