//! Permutations, the rational group algebra `Q S_n`, and Young symmetrizers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly, Rational};
use crate::tableaux::{standard_tableaux, MTableau, Tableau};

/// A permutation of `{0, .., n-1}` in one-line form; printed one based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From zero based images.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Usage(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation { images })
    }

    /// Swap of zero based letters `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::Dimension { expected: self.len(), found: other.len() });
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn sign(&self) -> i32 {
        let mut seen = vec![false; self.len()];
        let mut sign = 1;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// All of `S_n` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
    }

    /// Permutations of `n` letters moving each of the given blocks (one
    /// based letters) into itself.
    pub fn block_stabilizer(n: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(n)];
        for block in blocks {
            let k = block.len();
            if k < 2 {
                continue;
            }
            let local = Permutation::all(k);
            let mut next = Vec::with_capacity(out.len() * local.len());
            for base in &out {
                for l in &local {
                    let mut images = base.images.clone();
                    for (a, &letter) in block.iter().enumerate() {
                        images[letter - 1] = block[l.images[a]] - 1;
                    }
                    next.push(Permutation { images });
                }
            }
            out = next;
        }
        out
    }

    /// Image of a monomial under `x_i ↦ x_{π(i)}`.
    pub fn act_on_monomial(&self, m: Monomial, nvars: usize) -> Monomial {
        let exps = m.exponents(nvars);
        let mut out = vec![0u32; nvars];
        for (i, &e) in exps.iter().enumerate() {
            out[self.images[i]] = e;
        }
        Monomial::new(&out).expect("same exponents, same bounds")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "[{}]", s.join(" "))
    }
}

pub fn row_stabilizer(t: &Tableau, n: usize) -> Vec<Permutation> {
    Permutation::block_stabilizer(n, t.rows())
}

pub fn column_stabilizer(t: &Tableau, n: usize) -> Vec<Permutation> {
    Permutation::block_stabilizer(n, &t.columns())
}

/// An element `Σ c_π π` of `Q S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_permutation(Permutation::identity(n))
    }

    pub fn from_permutation(pi: Permutation) -> Self {
        let n = pi.len();
        GroupAlgebraElement { n, terms: BTreeMap::from([(pi, Rational::one())]) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, pi: &Permutation) -> Rational {
        self.terms.get(pi).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, pi: Permutation, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(pi).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// `Σ_{π ∈ perms} sign(π)^{signed} π`.
    pub fn sum_of(n: usize, perms: &[Permutation], signed: bool) -> Self {
        let mut out = Self::zero(n);
        for pi in perms {
            let c = if signed && pi.sign() < 0 { -Rational::one() } else { Rational::one() };
            out.add_term(pi.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        GroupAlgebraElement { n: self.n, terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect() }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Dimension { expected: self.n, found: other.n });
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    /// Convolution product.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Dimension { expected: self.n, found: other.n });
        }
        let mut acc: BTreeMap<Permutation, Rational> = BTreeMap::new();
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                *acc.entry(p.compose_unchecked(q)).or_insert_with(Rational::zero) += a * b;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(GroupAlgebraElement { n: self.n, terms: acc })
    }

    /// Linear extension of the permutation action on polynomials.
    pub fn apply(&self, f: &MultiPoly) -> Result<MultiPoly> {
        if f.nvars() != self.n {
            return Err(Error::Dimension { expected: self.n, found: f.nvars() });
        }
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (pi, c) in &self.terms {
            for (m, v) in f.terms() {
                *acc.entry(pi.act_on_monomial(*m, self.n)).or_insert_with(Rational::zero) += c * v;
            }
        }
        Ok(MultiPoly::from_terms(self.n, acc))
    }

    /// The anti-involution `Σ c_π π ↦ Σ sgn(π) c_π π^{-1}`.
    pub fn signed_adjoint(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(p, c)| (p.inverse(), if p.sign() < 0 { -c.clone() } else { c.clone() }))
            .collect();
        GroupAlgebraElement { n: self.n, terms }
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| format!("{}*{}", crate::text::format_rational(c), p))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `f^λ / n!` for the shape of a tableau with `n` cells.
fn normalization(t: &Tableau) -> Rational {
    let count = standard_tableaux(&t.shape()).len();
    Rational::new(BigInt::from(count), factorial(t.size()))
}

fn component_symmetrizer(t: &Tableau, n: usize, row_first: bool) -> GroupAlgebraElement {
    if t.is_empty() {
        return GroupAlgebraElement::identity(n);
    }
    let r = GroupAlgebraElement::sum_of(n, &row_stabilizer(t, n), false);
    let c = GroupAlgebraElement::sum_of(n, &column_stabilizer(t, n), true);
    let prod = if row_first { r.product(&c) } else { c.product(&r) }.expect("same n");
    prod.scale(&normalization(t))
}

/// `ε_T = (f^λ/n!) c_T r_T`.
pub fn young_symmetrizer_eps(t: &Tableau) -> GroupAlgebraElement {
    component_symmetrizer(t, t.size(), false)
}

/// `σ_T = (f^λ/n!) r_T c_T`.
pub fn young_symmetrizer_sigma(t: &Tableau) -> GroupAlgebraElement {
    component_symmetrizer(t, t.size(), true)
}

fn m_symmetrizer(t: &MTableau, row_first: bool) -> Result<GroupAlgebraElement> {
    let n = t.n();
    let factors: Vec<GroupAlgebraElement> =
        t.components().iter().map(|c| component_symmetrizer(c, n, row_first)).collect();
    let mut out = GroupAlgebraElement::identity(n);
    for f in &factors {
        out = out.product(f)?;
    }
    // the components act on disjoint letters, so the order is irrelevant
    let mut reversed = GroupAlgebraElement::identity(n);
    for f in factors.iter().rev() {
        reversed = reversed.product(f)?;
    }
    if reversed != out {
        return Err(Error::Internal("component symmetrizers do not commute".into()));
    }
    Ok(out)
}

/// `ε_T = ε_{T_1} ... ε_{T_m}` for an m-tableau.
pub fn mtableau_eps(t: &MTableau) -> Result<GroupAlgebraElement> {
    m_symmetrizer(t, false)
}

/// `σ_T = σ_{T_1} ... σ_{T_m}` for an m-tableau.
pub fn mtableau_sigma(t: &MTableau) -> Result<GroupAlgebraElement> {
    m_symmetrizer(t, true)
}
