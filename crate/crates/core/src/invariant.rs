//! Invariant theory of `S_n` on `Q^n`: the discriminant in several
//! coordinate systems, the Saito matrix, the bilinear form
//! `<f, g> = z^{-1} Σ sgn(π) π(fg)`, and expansion of polynomials over a
//! free `R`-module basis.
//!
//! Expansion solves for the coefficients modulo several word-sized primes
//! at random points, lifts them by CRT and rational reconstruction, and then
//! checks the identity `p = Σ c_b b` exactly before returning.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupalg::Permutation;
use crate::linalg::{self, ModSolution};
use crate::modp;
use crate::poly::{self, MultiPoly, Rational};
use crate::symmetric::{reduce_dominant, sliced_reduce, symmetric_reduce, weighted_exponents, BasisKind, Dominant, InvariantPoly};
use crate::tableaux::Partition;

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `Δ = z^2` in the requested coordinates. On the slice the result is the
/// reduction of `(z/n!)^2`, the normalization of the printed `S_5` example.
pub fn discriminant(n: usize, kind: BasisKind) -> Result<InvariantPoly> {
    if n < 2 {
        return Err(Error::Usage("the discriminant needs n >= 2".into()));
    }
    let z = poly::vandermonde(n);
    match kind {
        BasisKind::Elementary | BasisKind::PowerSum => symmetric_reduce(&z.checked_mul(&z)?, kind),
        BasisKind::SlicedT => {
            let zs = poly::slice_substitute(&z).scale(&Rational::new(BigInt::one(), factorial(n)));
            sliced_reduce(&zs.checked_mul(&zs)?, n)
        }
    }
}

/// Symmetric-coordinate expression of the power sum `s_k` for any `k`.
fn power_sum_in_s(k: usize, n: usize) -> Result<InvariantPoly> {
    if k == 0 {
        return Ok(InvariantPoly::constant(BasisKind::PowerSum, n, Rational::from_integer(n.into())));
    }
    if k <= n {
        return InvariantPoly::generator(BasisKind::PowerSum, n, k);
    }
    symmetric_reduce(&poly::power_sum(k, n)?, BasisKind::PowerSum)
}

/// `J J^T` for `J_{ij} = (1/i) ∂s_i/∂x_j = x_j^{i-1}`: entry `(i, j)` is `s_{i+j}` (zero based, `s_0 = n`).
pub fn saito_matrix(n: usize) -> Result<Vec<Vec<InvariantPoly>>> {
    let sums: Vec<InvariantPoly> = (0..=2 * n - 2).map(|k| power_sum_in_s(k, n)).collect::<Result<_>>()?;
    Ok((0..n).map(|i| (0..n).map(|j| sums[i + j].clone()).collect()).collect())
}

/// Determinant by cofactor expansion along the first row, memoized on column sets.
pub fn determinant(m: &[Vec<InvariantPoly>]) -> Result<InvariantPoly> {
    let size = m.len();
    let first = m.first().and_then(|r| r.first()).ok_or_else(|| Error::Internal("empty matrix".into()))?;
    let (kind, n) = (first.kind(), first.n());
    if m.iter().any(|r| r.len() != size) {
        return Err(Error::Dimension { expected: size, found: m.iter().map(Vec::len).max().unwrap_or(0) });
    }
    let mut memo: HashMap<u32, InvariantPoly> = HashMap::new();
    fn minor(
        m: &[Vec<InvariantPoly>],
        row: usize,
        cols: u32,
        memo: &mut HashMap<u32, InvariantPoly>,
        kind: BasisKind,
        n: usize,
    ) -> Result<InvariantPoly> {
        if row == m.len() {
            return Ok(InvariantPoly::one(kind, n));
        }
        if let Some(v) = memo.get(&cols) {
            return Ok(v.clone());
        }
        let mut acc = InvariantPoly::zero(kind, n);
        let mut sign_pos = 0;
        for c in 0..m.len() {
            if cols & (1 << c) == 0 {
                continue;
            }
            if !m[row][c].is_zero() {
                let sub = minor(m, row + 1, cols & !(1 << c), memo, kind, n)?;
                let term = m[row][c].checked_mul(&sub)?;
                acc = if sign_pos % 2 == 0 { acc.checked_add(&term)? } else { acc.checked_sub(&term)? };
            }
            sign_pos += 1;
        }
        memo.insert(cols, acc.clone());
        Ok(acc)
    }
    minor(m, 0, (1u32 << size) - 1, &mut memo, kind, n)
}

/// Saito determinant in power-sum coordinates and its ratio to `Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaitoCheck {
    pub matrix: Vec<Vec<InvariantPoly>>,
    pub determinant: InvariantPoly,
    /// `determinant = constant * discriminant(n, power-sum)`.
    pub constant: Rational,
}

pub fn saito_discriminant(n: usize) -> Result<SaitoCheck> {
    let matrix = saito_matrix(n)?;
    let det = determinant(&matrix)?;
    let delta = discriminant(n, BasisKind::PowerSum)?;
    let constant = det
        .ratio_to(&delta)
        .ok_or_else(|| Error::Integrity("Saito determinant is not proportional to the discriminant".into()))?;
    Ok(SaitoCheck { matrix, determinant: det, constant })
}

/// Value of the bilinear form, an element of `R` in e-coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingValue {
    pub value: InvariantPoly,
}

fn inversions(a: &[u32]) -> usize {
    let mut count = 0;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if a[i] < a[j] {
                count += 1;
            }
        }
    }
    count
}

/// Schur polynomial `s_λ` in e-coordinates by the dual Jacobi-Trudi identity
/// `s_λ = det(e_{λ'_i - i + j})`.
pub fn schur_in_elementary(lambda: &[u32], n: usize) -> Result<InvariantPoly> {
    let kind = BasisKind::Elementary;
    let parts: Vec<usize> = lambda.iter().filter(|&&p| p > 0).map(|&p| p as usize).collect();
    if parts.is_empty() {
        return Ok(InvariantPoly::one(kind, n));
    }
    let conj = Partition::new(parts)?.conjugate();
    let k = conj.len();
    let e = |d: i64| -> Result<InvariantPoly> {
        if d == 0 {
            Ok(InvariantPoly::one(kind, n))
        } else if d < 0 || d as usize > n {
            Ok(InvariantPoly::zero(kind, n))
        } else {
            InvariantPoly::generator(kind, n, d as usize)
        }
    };
    let m: Vec<Vec<InvariantPoly>> = (0..k)
        .map(|i| (0..k).map(|j| e(conj.parts()[i] as i64 - i as i64 + j as i64)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    determinant(&m)
}

/// Alternant coefficients: `Σ sgn(π) π(f) = Σ_b c_b A_b` over strictly decreasing `b`.
fn alternant_coefficients(f: &MultiPoly) -> BTreeMap<Vec<u32>, Rational> {
    let n = f.nvars();
    let mut out: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    for (m, c) in f.terms() {
        let a = m.exponents(n);
        let mut b = a.clone();
        b.sort_unstable_by(|x, y| y.cmp(x));
        if b.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let entry = out.entry(b).or_insert_with(Rational::zero);
        if inversions(&a).is_multiple_of(2) {
            *entry += c;
        } else {
            *entry -= c;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `<f, g>`: the alternant of `fg` divided by `z = A_δ` is `Σ c_b s_{b-δ}`.
pub fn bilinear_form(f: &MultiPoly, g: &MultiPoly) -> Result<PairingValue> {
    let n = f.nvars();
    let fg = f.checked_mul(g)?;
    let mut value = InvariantPoly::zero(BasisKind::Elementary, n);
    for (b, c) in alternant_coefficients(&fg) {
        let lambda: Vec<u32> = b.iter().enumerate().map(|(i, &bi)| bi - (n - 1 - i) as u32).collect();
        value = value.checked_add(&schur_in_elementary(&lambda, n)?.scale(&c))?;
    }
    Ok(PairingValue { value })
}

/// The same form computed literally: antisymmetrize over `S_n`, divide by `z`, reduce.
pub fn bilinear_form_literal(f: &MultiPoly, g: &MultiPoly) -> Result<PairingValue> {
    let n = f.nvars();
    let fg = f.checked_mul(g)?;
    let mut acc = MultiPoly::zero(n);
    for pi in Permutation::all(n) {
        let moved = poly::permute(&fg, &pi)?;
        acc = if pi.sign() < 0 { acc.checked_sub(&moved)? } else { acc.checked_add(&moved)? };
    }
    let q = poly::exact_divide(&acc, &poly::vandermonde(n))
        .map_err(|_| Error::Internal("antisymmetrization not divisible by z".into()))?;
    Ok(PairingValue { value: symmetric_reduce(&q, BasisKind::Elementary)? })
}

/// `<f, z h> = Σ_π π(f h)`, since `π(z) = sgn(π) z`.
pub fn pairing_with_vandermonde(f: &MultiPoly, h: &MultiPoly) -> Result<PairingValue> {
    let n = f.nvars();
    let fh = f.checked_mul(h)?;
    // Σ_π π(x^a) has coefficient |Stab(λ)| on x^λ for each a in the orbit of λ.
    let mut dom: Dominant = BTreeMap::new();
    for (m, c) in fh.terms() {
        let mut a = m.exponents(n);
        a.sort_unstable_by(|x, y| y.cmp(x));
        *dom.entry(a).or_insert_with(Rational::zero) += c;
    }
    let mut scaled: Dominant = BTreeMap::new();
    for (lam, c) in dom {
        if c.is_zero() {
            continue;
        }
        let mut stab = BigInt::one();
        let mut run = 1usize;
        for i in 1..=lam.len() {
            if i < lam.len() && lam[i] == lam[i - 1] {
                run += 1;
            } else {
                stab *= factorial(run);
                run = 1;
            }
        }
        scaled.insert(lam, c * Rational::from_integer(stab));
    }
    Ok(PairingValue { value: reduce_dominant(scaled, n)? })
}

/// Shared cache of expanded e-monomials, keyed by exponent vector.
#[derive(Debug, Default)]
pub struct ExpansionCache {
    n: usize,
    cache: RwLock<HashMap<Vec<u32>, MultiPoly>>,
}

impl ExpansionCache {
    pub fn new(n: usize) -> Self {
        ExpansionCache { n, cache: RwLock::new(HashMap::new()) }
    }

    fn monomial(&self, exps: &[u32]) -> Result<MultiPoly> {
        if let Some(p) = self.cache.read().expect("cache lock").get(exps) {
            return Ok(p.clone());
        }
        let value = match (0..self.n).rev().find(|&k| exps[k] > 0) {
            None => MultiPoly::one(self.n),
            Some(j) => {
                let mut lower = exps.to_vec();
                lower[j] -= 1;
                self.monomial(&lower)?.checked_mul(&poly::elementary_symmetric(j + 1, self.n)?)?
            }
        };
        self.cache.write().expect("cache lock").insert(exps.to_vec(), value.clone());
        Ok(value)
    }

    /// Expand an e-coordinate invariant into the `x` variables.
    pub fn expand(&self, f: &InvariantPoly) -> Result<MultiPoly> {
        if f.kind() != BasisKind::Elementary || f.n() != self.n {
            return Err(Error::ShapeMismatch("expansion cache holds e-monomials only".into()));
        }
        let mut out = MultiPoly::zero(self.n);
        for (exps, c) in f.terms() {
            out = out.checked_add(&self.monomial(&exps)?.scale(&c))?;
        }
        Ok(out)
    }
}

/// `e_1..e_n` at a point, modulo `p`.
fn elementary_values(point: &[u64], p: u64) -> Vec<u64> {
    let n = point.len();
    let mut e = vec![0u64; n + 1];
    e[0] = 1;
    for (k, &x) in point.iter().enumerate() {
        for i in (1..=k + 1).rev() {
            e[i] = modp::add(e[i], modp::mul(e[i - 1], x, p), p);
        }
    }
    e.split_off(1)
}

fn eval_exponents(values: &[u64], exps: &[u32], p: u64) -> u64 {
    exps.iter().zip(values).fold(1u64, |acc, (&a, &v)| modp::mul(acc, modp::pow(v, a as u64, p), p))
}

/// Unknown `(basis index, e-exponents)` pairs for a target of degree `degree`.
fn unknowns(degree: u32, basis_degrees: &[u32], n: usize) -> Vec<(usize, Vec<u32>)> {
    let weights: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::new();
    for (b, &d) in basis_degrees.iter().enumerate() {
        if d <= degree {
            for exps in weighted_exponents(&weights, degree - d) {
                out.push((b, exps));
            }
        }
    }
    out
}

const MAX_PRIMES: usize = 24;

/// Coefficients `c_b ∈ R` (e-coordinates) with `p = Σ_b c_b b` exactly.
///
/// `p` and every basis element must be homogeneous. Errors with `NotInSpan`
/// if no combination exists and `RankDeficient` if it is not unique.
pub fn express_in_basis(p: &MultiPoly, basis: &[MultiPoly]) -> Result<Vec<InvariantPoly>> {
    let n = p.nvars();
    express_in_basis_cached(p, basis, &ExpansionCache::new(n))
}

pub fn express_in_basis_cached(p: &MultiPoly, basis: &[MultiPoly], cache: &ExpansionCache) -> Result<Vec<InvariantPoly>> {
    let n = p.nvars();
    let kind = BasisKind::Elementary;
    if basis.iter().any(|b| b.nvars() != n) {
        return Err(Error::Dimension { expected: n, found: basis.iter().map(MultiPoly::nvars).find(|&v| v != n).unwrap() });
    }
    let zero = || vec![InvariantPoly::zero(kind, n); basis.len()];
    if p.is_zero() {
        return Ok(zero());
    }
    let degree = p.homogeneous_degree().ok_or_else(|| Error::Usage("target polynomial is not homogeneous".into()))?;
    let degrees: Vec<u32> = basis
        .iter()
        .map(|b| b.homogeneous_degree().ok_or_else(|| Error::Usage("basis element is not homogeneous".into())))
        .collect::<Result<_>>()?;
    let unknown = unknowns(degree, &degrees, n);
    if unknown.is_empty() {
        return Err(Error::NotInSpan("no basis element has low enough degree".into()));
    }
    let count = unknown.len();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 ^ (count as u64) ^ ((degree as u64) << 32));
    let points: Vec<Vec<u64>> = (0..count + 8).map(|_| (0..n).map(|_| rng.gen_range(2..(1u64 << 61))).collect()).collect();

    let mut value = vec![BigInt::zero(); count];
    let mut modulus = BigInt::one();
    let mut previous: Option<Vec<Rational>> = None;
    let (mut inconsistent, mut deficient) = (0, 0);
    for prime in modp::primes(MAX_PRIMES) {
        let Some(rows) = system_mod(p, basis, &unknown, &points, prime) else { continue };
        let (matrix, rhs) = rows;
        match linalg::solve_mod(&matrix, &rhs, prime) {
            ModSolution::Inconsistent => {
                inconsistent += 1;
                if inconsistent >= 2 {
                    return Err(Error::NotInSpan("no R-linear combination of the basis reaches the target".into()));
                }
                continue;
            }
            ModSolution::RankDeficient(r) => {
                deficient += 1;
                if deficient >= 2 {
                    return Err(Error::RankDeficient(format!("rank {r} < {count} unknowns")));
                }
                continue;
            }
            ModSolution::Unique(sol) => {
                for (v, &r) in value.iter_mut().zip(&sol) {
                    *v = modp::crt_push(v, &modulus, r, prime);
                }
                modulus *= BigInt::from(prime);
            }
        }
        let lifted: Option<Vec<Rational>> = value.iter().map(|v| modp::reconstruct(v, &modulus)).collect();
        let Some(lifted) = lifted else { continue };
        if previous.as_ref() == Some(&lifted) {
            let coeffs = assemble(&unknown, &lifted, basis.len(), n)?;
            if reconstructs(p, basis, &coeffs, cache)? {
                return Ok(coeffs);
            }
        }
        previous = Some(lifted);
    }
    Err(Error::Integrity("modular expansion did not stabilize to an exact solution".into()))
}

type ModSystem = (Vec<Vec<u64>>, Vec<u64>);

fn system_mod(p: &MultiPoly, basis: &[MultiPoly], unknown: &[(usize, Vec<u32>)], points: &[Vec<u64>], prime: u64) -> Option<ModSystem> {
    let mut matrix = Vec::with_capacity(points.len());
    let mut rhs = Vec::with_capacity(points.len());
    for pt in points {
        let pt: Vec<u64> = pt.iter().map(|&x| x % prime).collect();
        let e = elementary_values(&pt, prime);
        let b_vals: Vec<u64> = basis.iter().map(|b| b.eval_mod(prime, &pt)).collect::<Option<_>>()?;
        matrix.push(unknown.iter().map(|(b, exps)| modp::mul(eval_exponents(&e, exps, prime), b_vals[*b], prime)).collect());
        rhs.push(p.eval_mod(prime, &pt)?);
    }
    Some((matrix, rhs))
}

fn assemble(unknown: &[(usize, Vec<u32>)], values: &[Rational], size: usize, n: usize) -> Result<Vec<InvariantPoly>> {
    let mut grouped: Vec<Vec<(Vec<u32>, Rational)>> = vec![Vec::new(); size];
    for ((b, exps), c) in unknown.iter().zip(values) {
        if !c.is_zero() {
            grouped[*b].push((exps.clone(), c.clone()));
        }
    }
    grouped.into_iter().map(|terms| InvariantPoly::from_terms(BasisKind::Elementary, n, terms)).collect()
}

/// Exact check of `p = Σ c_b b`.
fn reconstructs(p: &MultiPoly, basis: &[MultiPoly], coeffs: &[InvariantPoly], cache: &ExpansionCache) -> Result<bool> {
    let n = p.nvars();
    // group by e-monomial: Σ_m e^m (Σ_b u_{b,m} b)
    let mut by_monomial: BTreeMap<Vec<u32>, MultiPoly> = BTreeMap::new();
    for (c, b) in coeffs.iter().zip(basis) {
        for (exps, u) in c.terms() {
            let entry = by_monomial.entry(exps).or_insert_with(|| MultiPoly::zero(n));
            *entry = entry.checked_add(&b.scale(&u))?;
        }
    }
    let mut total = MultiPoly::zero(n);
    for (exps, q) in by_monomial {
        total = total.checked_add(&cache.monomial(&exps)?.checked_mul(&q)?)?;
    }
    Ok(total == *p)
}

/// Rectangular grid of invariants with row and column labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantMatrix {
    pub entries: Vec<Vec<InvariantPoly>>,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
}

impl InvariantMatrix {
    pub fn new(entries: Vec<Vec<InvariantPoly>>, row_labels: Vec<String>, col_labels: Vec<String>) -> Result<Self> {
        let cols = col_labels.len();
        if entries.len() != row_labels.len() {
            return Err(Error::Dimension { expected: row_labels.len(), found: entries.len() });
        }
        if let Some(bad) = entries.iter().find(|r| r.len() != cols) {
            return Err(Error::Dimension { expected: cols, found: bad.len() });
        }
        Ok(InvariantMatrix { entries, row_labels, col_labels })
    }

    /// Unlabelled matrix (labels are the positions).
    pub fn from_entries(entries: Vec<Vec<InvariantPoly>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        Self::new(entries, (1..=rows).map(|i| i.to_string()).collect(), (1..=cols).map(|i| i.to_string()).collect())
    }

    pub fn scalar(size: usize, value: &InvariantPoly) -> Self {
        let zero = InvariantPoly::zero(value.kind(), value.n());
        let entries = (0..size)
            .map(|i| (0..size).map(|j| if i == j { value.clone() } else { zero.clone() }).collect())
            .collect();
        Self::from_entries(entries).expect("square")
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &InvariantPoly {
        &self.entries[i][j]
    }

    pub fn kind(&self) -> Option<BasisKind> {
        self.entries.first().and_then(|r| r.first()).map(InvariantPoly::kind)
    }

    pub fn checked_mul(&self, other: &InvariantMatrix) -> Result<InvariantMatrix> {
        if self.cols() != other.rows() {
            return Err(Error::Dimension { expected: self.cols(), found: other.rows() });
        }
        let any = self.entries.first().and_then(|r| r.first()).ok_or_else(|| Error::Internal("empty matrix".into()))?;
        let (kind, n) = (any.kind(), any.n());
        let mut entries = Vec::with_capacity(self.rows());
        for i in 0..self.rows() {
            let mut row = Vec::with_capacity(other.cols());
            for j in 0..other.cols() {
                let mut acc = InvariantPoly::zero(kind, n);
                for k in 0..self.cols() {
                    let (a, b) = (&self.entries[i][k], &other.entries[k][j]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.checked_add(&a.checked_mul(b)?)?;
                    }
                }
                row.push(acc);
            }
            entries.push(row);
        }
        InvariantMatrix::new(entries, self.row_labels.clone(), other.col_labels.clone())
    }

    pub fn transpose(&self) -> InvariantMatrix {
        let entries = (0..self.cols()).map(|j| (0..self.rows()).map(|i| self.entries[i][j].clone()).collect()).collect();
        InvariantMatrix { entries, row_labels: self.col_labels.clone(), col_labels: self.row_labels.clone() }
    }

    pub fn scale(&self, c: &Rational) -> InvariantMatrix {
        self.map(|e| Ok(e.scale(c))).expect("scaling cannot fail")
    }

    pub fn map<F: Fn(&InvariantPoly) -> Result<InvariantPoly>>(&self, f: F) -> Result<InvariantMatrix> {
        let entries = self.entries.iter().map(|r| r.iter().map(&f).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
        Ok(InvariantMatrix { entries, row_labels: self.row_labels.clone(), col_labels: self.col_labels.clone() })
    }

    pub fn convert(&self, kind: BasisKind) -> Result<InvariantMatrix> {
        self.map(|e| e.convert(kind))
    }

    /// Positions where `self` differs from `value * I`.
    pub fn scalar_defects(&self, value: &InvariantPoly) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                let e = &self.entries[i][j];
                let ok = if i == j { e == value } else { e.is_zero() };
                if !ok {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(InvariantPoly::is_zero)
    }

    pub fn text_entries(&self) -> Vec<Vec<String>> {
        self.entries.iter().map(|r| r.iter().map(InvariantPoly::to_text).collect()).collect()
    }

    /// One row per line, entries separated by `;`.
    pub fn to_text(&self) -> String {
        self.text_entries().iter().map(|r| r.join(" ; ") + "\n").collect()
    }

    /// Inverse of [`InvariantMatrix::to_text`]; blank lines are skipped.
    pub fn from_text(kind: BasisKind, n: usize, text: &str) -> Result<InvariantMatrix> {
        let rows: Vec<Vec<String>> = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split(';').map(|e| e.trim().to_string()).collect())
            .collect();
        Self::parse(kind, n, &rows)
    }

    pub fn parse(kind: BasisKind, n: usize, rows: &[Vec<String>]) -> Result<InvariantMatrix> {
        let entries = rows
            .iter()
            .map(|r| r.iter().map(|s| InvariantPoly::parse(kind, n, s)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        Self::from_entries(entries)
    }
}

/// Serialized form of a matrix of invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantMatrixJson {
    pub basis_kind: BasisKind,
    pub n: usize,
    pub entries: Vec<Vec<String>>,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
}

impl InvariantMatrix {
    pub fn to_json(&self, n: usize) -> InvariantMatrixJson {
        InvariantMatrixJson {
            basis_kind: self.kind().unwrap_or(BasisKind::Elementary),
            n,
            entries: self.text_entries(),
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
        }
    }

    pub fn from_json(json: &InvariantMatrixJson) -> Result<Self> {
        let m = Self::parse(json.basis_kind, json.n, &json.entries)?;
        Self::new(m.entries, json.row_labels.clone(), json.col_labels.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vandermonde;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn cubic_discriminant_and_cusp() {
        let d = discriminant(3, BasisKind::Elementary).unwrap();
        // classical -4a^3c + a^2b^2 + 18abc - 4b^3 - 27c^2 at a = -e1, b = e2, c = -e3
        let e = |i| InvariantPoly::generator(BasisKind::Elementary, 3, i).unwrap();
        let (a, b, c) = (e(1).neg(), e(2), e(3).neg());
        let k = |v: i64| Rational::from_integer(v.into());
        let classical = a.checked_mul(&a).unwrap().checked_mul(&a).unwrap().checked_mul(&c).unwrap().scale(&k(-4))
            .checked_add(&a.checked_mul(&a).unwrap().checked_mul(&b).unwrap().checked_mul(&b).unwrap()).unwrap()
            .checked_add(&a.checked_mul(&b).unwrap().checked_mul(&c).unwrap().scale(&k(18))).unwrap()
            .checked_add(&b.checked_mul(&b).unwrap().checked_mul(&b).unwrap().scale(&k(-4))).unwrap()
            .checked_add(&c.checked_mul(&c).unwrap().scale(&k(-27))).unwrap();
        assert_eq!(d, classical);
        let cusp = d.convert(BasisKind::SlicedT).unwrap();
        assert_eq!(cusp.to_text(), "-4*t1^3 - 27*t2^2");
        assert_eq!(discriminant(2, BasisKind::Elementary).unwrap().to_text(), "e1^2 - 4*e2");
        assert!(discriminant(1, BasisKind::Elementary).is_err());
    }

    #[test]
    fn sliced_route_matches_e_route() {
        for n in 3..=4 {
            let e = discriminant(n, BasisKind::Elementary).unwrap();
            let fact: i64 = (1..=n as i64).product();
            let via_e = e.convert(BasisKind::SlicedT).unwrap().scale(&q(1, fact * fact));
            assert_eq!(discriminant(n, BasisKind::SlicedT).unwrap(), via_e);
        }
    }

    #[test]
    fn saito_for_three_variables() {
        let check = saito_discriminant(3).unwrap();
        let texts: Vec<Vec<String>> =
            check.matrix.iter().map(|r| r.iter().map(InvariantPoly::to_text).collect()).collect();
        assert_eq!(texts[0], vec!["3", "s1", "s2"]);
        assert_eq!(texts[1], vec!["s1", "s2", "s3"]);
        assert_eq!(texts[2][2], "1/6*s1^4 - s1^2*s2 + 4/3*s1*s3 + 1/2*s2^2");
        let expected = InvariantPoly::parse(
            BasisKind::PowerSum,
            3,
            "3*s2*s1^4 - 7*s1^2*s2^2 + 12*s1*s2*s3 + s2^3 - 6*s3^2 - 1/3*s1^6 - 8/3*s3*s1^3",
        )
        .unwrap();
        // the printed n = 3 polynomial is twice det(J J^T) = z^2
        assert_eq!(check.determinant.scale(&q(2, 1)), expected);
        assert_eq!(check.constant, Rational::one());
        for n in 2..=4 {
            assert_eq!(saito_discriminant(n).unwrap().constant, Rational::one());
        }
    }

    #[test]
    fn pairing_basics() {
        for n in 2..=4 {
            let z = vandermonde(n);
            let fact: i64 = (1..=n as i64).product();
            let v = bilinear_form(&MultiPoly::one(n), &z).unwrap().value;
            assert_eq!(v.as_constant(), Some(q(fact, 1)));
            assert_eq!(bilinear_form_literal(&MultiPoly::one(n), &z).unwrap().value, v);
        }
    }

    #[test]
    fn pairing_routes_agree() {
        let n = 3;
        let f = MultiPoly::parse("x1^2*x2 - 3*x3 + x2^2", n).unwrap();
        let g = MultiPoly::parse("x1*x3^3 + 2*x2", n).unwrap();
        assert_eq!(bilinear_form(&f, &g).unwrap(), bilinear_form_literal(&f, &g).unwrap());
        let z = vandermonde(n);
        let zg = z.checked_mul(&g).unwrap();
        assert_eq!(pairing_with_vandermonde(&f, &g).unwrap(), bilinear_form_literal(&f, &zg).unwrap());
    }

    #[test]
    fn schur_small() {
        assert_eq!(schur_in_elementary(&[1, 1], 3).unwrap().to_text(), "e2");
        assert_eq!(schur_in_elementary(&[2], 3).unwrap().to_text(), "e1^2 - e2");
    }

    #[test]
    fn expansion_simple_cases() {
        let n = 3;
        let e1 = poly::elementary_symmetric(1, n).unwrap();
        let z = vandermonde(n);
        let basis = vec![MultiPoly::one(n), z.scale(&q(1, 6))];
        let c = express_in_basis(&e1, &basis).unwrap();
        assert_eq!(c[0].to_text(), "e1");
        assert!(c[1].is_zero());
        let c = express_in_basis(&z.checked_mul(&z.scale(&q(1, 6))).unwrap(), &basis[..1]).unwrap();
        assert_eq!(c[0], discriminant(3, BasisKind::Elementary).unwrap().scale(&q(1, 6)));
    }

    #[test]
    fn expansion_errors() {
        let n = 3;
        let x1 = MultiPoly::var(n, 0);
        assert!(matches!(express_in_basis(&x1, &[MultiPoly::one(n)]), Err(Error::NotInSpan(_))));
        let dup = vec![MultiPoly::one(n), MultiPoly::one(n)];
        assert!(matches!(express_in_basis(&MultiPoly::one(n), &dup), Err(Error::RankDeficient(_))));
    }

    #[test]
    fn determinant_small() {
        let k = |v: i64| InvariantPoly::constant(BasisKind::Elementary, 2, Rational::from_integer(v.into()));
        let m = vec![vec![k(1), k(2)], vec![k(3), k(4)]];
        assert_eq!(determinant(&m).unwrap(), k(-2));
    }
}
