//! Matrix factorizations `(A, B)` of the discriminant `Δ = z²`.
//!
//! For a standard tableau `T`, multiplication by `z` maps the module
//! `M_T = R⟨H_T^S⟩` onto `N_{T'} = R⟨F_{T'}^{S'}⟩` and back. `A` is the
//! matrix of `z: M_T → N_{T'}` (columns indexed by the `H` generators, rows
//! by the `F` generators) and `B` the matrix of `z: N_{T'} → M_T`.

use std::collections::VecDeque;
use std::ops::Range;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariant::{
    bilinear_form, discriminant, express_in_basis_cached, pairing_with_vandermonde, ExpansionCache, InvariantMatrix,
};
use crate::poly::{vandermonde, MultiPoly, Rational};
use crate::specht::{basis_bf, basis_bh, degree_indices, generators_for, BasisElement, SpechtKind};
use crate::symmetric::{BasisKind, InvariantPoly};
use crate::tableaux::{natural_standard_tableaux, partitions, standard_tableaux, MTableau, Partition, Tableau};

/// Which block a factorization belongs to, with the degrees of the
/// generators indexing the rows (`F`) and columns (`H`) of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MfLabel {
    pub shape: Vec<Partition>,
    pub t: MTableau,
    pub f_degrees: Vec<u32>,
    pub h_degrees: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFactorization {
    pub a: InvariantMatrix,
    pub b: InvariantMatrix,
    pub delta: InvariantPoly,
    pub label: Option<MfLabel>,
}

/// Outcome of checking `A·B = B·A = Δ·I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub size: usize,
    pub ab_defects: Vec<(usize, usize)>,
    pub ba_defects: Vec<(usize, usize)>,
    pub error: Option<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.ab_defects.is_empty() && self.ba_defects.is_empty()
    }
}

impl std::fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(e) = &self.error {
            return write!(f, "size {}: error: {e}", self.size);
        }
        if self.passed() {
            return write!(f, "size {}: A*B = B*A = delta*I", self.size);
        }
        let show = |d: &[(usize, usize)]| d.iter().map(|(i, j)| format!("({},{})", i + 1, j + 1)).collect::<Vec<_>>().join(" ");
        write!(f, "size {}: A*B defects [{}], B*A defects [{}]", self.size, show(&self.ab_defects), show(&self.ba_defects))
    }
}

pub fn verify_mf(mf: &MatrixFactorization) -> VerifyReport {
    let size = mf.a.rows();
    let mut report = VerifyReport { size, ab_defects: Vec::new(), ba_defects: Vec::new(), error: None };
    if mf.a.cols() != size || mf.b.rows() != size || mf.b.cols() != size {
        report.error = Some(format!(
            "A is {}x{} and B is {}x{}",
            mf.a.rows(),
            mf.a.cols(),
            mf.b.rows(),
            mf.b.cols()
        ));
        return report;
    }
    match (mf.a.checked_mul(&mf.b), mf.b.checked_mul(&mf.a)) {
        (Ok(ab), Ok(ba)) => {
            report.ab_defects = ab.scalar_defects(&mf.delta);
            report.ba_defects = ba.scalar_defects(&mf.delta);
        }
        (Err(e), _) | (_, Err(e)) => report.error = Some(e.to_string()),
    }
    report
}

impl MatrixFactorization {
    pub fn size(&self) -> usize {
        self.a.rows()
    }

    /// The trivial factorization `(1, f)`.
    pub fn trivial(f: &InvariantPoly) -> Self {
        MatrixFactorization {
            a: InvariantMatrix::scalar(1, &InvariantPoly::one(f.kind(), f.n())),
            b: InvariantMatrix::scalar(1, f),
            delta: f.clone(),
            label: None,
        }
    }

    /// Re-express in other coordinates. For the slice `e_1 = 0`, both
    /// matrices are divided by `n!`, so the product is `(z/n!)²` restricted
    /// to the slice.
    pub fn to_coords(&self, kind: BasisKind) -> Result<MatrixFactorization> {
        let n = self.delta.n();
        if kind == BasisKind::SlicedT && self.delta.kind() != BasisKind::SlicedT {
            let scale = Rational::new(One::one(), factorial(n));
            let a = self.a.convert(kind)?.scale(&scale);
            let b = self.b.convert(kind)?.scale(&scale);
            let delta = self.delta.convert(kind)?.scale(&(scale.clone() * scale));
            return Ok(MatrixFactorization { a, b, delta, label: self.label.clone() });
        }
        Ok(MatrixFactorization {
            a: self.a.convert(kind)?,
            b: self.b.convert(kind)?,
            delta: self.delta.convert(kind)?,
            label: self.label.clone(),
        })
    }

    /// Positions `(i, j)` of nonzero entries of `A` whose weighted degree is
    /// not `deg z + deg H_j - deg F_i`.
    pub fn graded_defects(&self) -> Vec<(usize, usize)> {
        let Some(label) = &self.label else { return Vec::new() };
        let n = self.delta.n() as u32;
        let deg_z = n * (n - 1) / 2;
        let mut out = Vec::new();
        for (i, fd) in label.f_degrees.iter().enumerate() {
            for (j, hd) in label.h_degrees.iter().enumerate() {
                let e = self.a.get(i, j);
                if e.is_zero() {
                    continue;
                }
                let want = deg_z as i64 + *hd as i64 - *fd as i64;
                if e.homogeneous_degree().map(i64::from) != Some(want) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> MfJson {
        let (lambda, t) = match &self.label {
            Some(l) => (l.shape.clone(), l.t.to_text()),
            None => (Vec::new(), String::new()),
        };
        MfJson {
            delta: self.delta.to_text(),
            coords: self.delta.kind(),
            n: self.delta.n(),
            lambda,
            t,
            a: self.a.text_entries(),
            b: self.b.text_entries(),
            row_labels: self.a.row_labels.clone(),
            col_labels: self.a.col_labels.clone(),
            verified: verify_mf(self).passed(),
        }
    }

    /// Rebuild from JSON. Only the matrices, labels and `Δ` are restored;
    /// generator degrees are not part of the schema.
    pub fn from_json(json: &MfJson) -> Result<MatrixFactorization> {
        let a = InvariantMatrix::parse(json.coords, json.n, &json.a)?;
        let a = InvariantMatrix::new(a.entries, json.row_labels.clone(), json.col_labels.clone())?;
        let b = InvariantMatrix::parse(json.coords, json.n, &json.b)?;
        let b = InvariantMatrix::new(b.entries, json.col_labels.clone(), json.row_labels.clone())?;
        let delta = InvariantPoly::parse(json.coords, json.n, &json.delta)?;
        let label = if json.t.is_empty() {
            None
        } else {
            Some(MfLabel { shape: json.lambda.clone(), t: MTableau::parse(&json.t)?, f_degrees: vec![], h_degrees: vec![] })
        };
        Ok(MatrixFactorization { a, b, delta, label })
    }
}

/// Serialized factorization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MfJson {
    pub delta: String,
    pub coords: BasisKind,
    pub n: usize,
    pub lambda: Vec<Partition>,
    #[serde(rename = "T")]
    pub t: String,
    #[serde(rename = "A")]
    pub a: Vec<Vec<String>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<String>>,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub verified: bool,
}

fn factorial(n: usize) -> num_bigint::BigInt {
    (1..=n).map(num_bigint::BigInt::from).product()
}

fn label_of(e: &BasisElement) -> String {
    format!("{:?}[T={}; P={}]", e.kind, e.index.t, e.index.p)
}

/// The generators of `M_T` (kind H) and `N_{T'}` (kind F), in matching order:
/// the `k`-th `F` generator is indexed by the conjugate of the `k`-th `H` index.
struct BlockGenerators {
    t: MTableau,
    h: Vec<BasisElement>,
    f_conj: Vec<BasisElement>,
}

fn block_generators(t: &MTableau) -> Result<BlockGenerators> {
    let indices = degree_indices(t)?;
    let conj: Vec<MTableau> = indices.iter().map(MTableau::conjugate).collect();
    Ok(BlockGenerators {
        t: t.clone(),
        h: generators_for(SpechtKind::H, t, &indices)?,
        f_conj: generators_for(SpechtKind::F, &t.conjugate(), &conj)?,
    })
}

fn times_z(polys: &[BasisElement]) -> Result<Vec<MultiPoly>> {
    let n = polys.first().map_or(0, |e| e.poly.nvars());
    let z = vandermonde(n);
    polys.par_iter().map(|e| z.checked_mul(&e.poly)).collect()
}

/// Column `j` of the result is the expansion of `targets[j]` over `basis`.
fn expansion_matrix(targets: &[MultiPoly], basis: &[MultiPoly], cache: &ExpansionCache) -> Result<Vec<Vec<InvariantPoly>>> {
    let cols: Vec<Vec<InvariantPoly>> =
        targets.par_iter().map(|p| express_in_basis_cached(p, basis, cache)).collect::<Result<_>>()?;
    Ok((0..basis.len()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect())
}

fn polys(elements: &[BasisElement]) -> Vec<MultiPoly> {
    elements.iter().map(|e| e.poly.clone()).collect()
}

/// `A` by the triangular pairing scheme: with `z·H_T^{S_i} = Σ_k g_i^k F_{T'}^{S_k'}`,
/// pairing against `F_T^{S_j}` gives `X_ij = Σ_{k ≤ j} g_i^k P_kj` where
/// `P_kj = ⟨F_T^{S_j}, F_{T'}^{S_k'}⟩` vanishes for `k > j`.
#[allow(clippy::needless_range_loop)]
fn a_by_pairing(gens: &BlockGenerators) -> Result<Vec<Vec<InvariantPoly>>> {
    let indices: Vec<MTableau> = gens.h.iter().map(|e| e.index.p.clone()).collect();
    let f_own = generators_for(SpechtKind::F, &gens.t, &indices)?;
    let s = indices.len();
    let pairs: Vec<(usize, usize)> = (0..s).flat_map(|a| (0..s).map(move |b| (a, b))).collect();
    let x: Vec<InvariantPoly> = pairs
        .par_iter()
        .map(|&(i, j)| pairing_with_vandermonde(&f_own[j].poly, &gens.h[i].poly).map(|v| v.value))
        .collect::<Result<_>>()?;
    let p: Vec<InvariantPoly> = pairs
        .par_iter()
        .map(|&(k, j)| bilinear_form(&f_own[j].poly, &gens.f_conj[k].poly).map(|v| v.value))
        .collect::<Result<_>>()?;
    let x = |i: usize, j: usize| &x[i * s + j];
    let p = |k: usize, j: usize| &p[k * s + j];
    let mut pivots = Vec::with_capacity(s);
    for j in 0..s {
        for k in j + 1..s {
            if !p(k, j).is_zero() {
                return Err(Error::Integrity(format!("pairing matrix is not triangular at ({}, {})", k + 1, j + 1)));
            }
        }
        let pivot = p(j, j)
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::Internal(format!("diagonal pairing {} is not a nonzero constant", j + 1)))?;
        pivots.push(Rational::one() / pivot);
    }
    let (kind, n) = (x(0, 0).kind(), x(0, 0).n());
    // g[k][i]: coefficient of F_{T'}^{S_k'} in z·H_T^{S_i}
    let mut g = vec![vec![InvariantPoly::zero(kind, n); s]; s];
    for i in 0..s {
        for j in 0..s {
            let mut acc = x(i, j).clone();
            for k in 0..j {
                if !g[k][i].is_zero() && !p(k, j).is_zero() {
                    acc = acc.checked_sub(&g[k][i].checked_mul(p(k, j))?)?;
                }
            }
            g[j][i] = acc.scale(&pivots[j]);
        }
    }
    Ok(g)
}

fn a_by_expansion(gens: &BlockGenerators, cache: &ExpansionCache) -> Result<Vec<Vec<InvariantPoly>>> {
    expansion_matrix(&times_z(&gens.h)?, &polys(&gens.f_conj), cache)
}

fn b_by_expansion(gens: &BlockGenerators, cache: &ExpansionCache) -> Result<Vec<Vec<InvariantPoly>>> {
    expansion_matrix(&times_z(&gens.f_conj)?, &polys(&gens.h), cache)
}

fn assemble(gens: &BlockGenerators, a: Vec<Vec<InvariantPoly>>, b: Vec<Vec<InvariantPoly>>) -> Result<MatrixFactorization> {
    let n = gens.t.n();
    let rows: Vec<String> = gens.f_conj.iter().map(label_of).collect();
    let cols: Vec<String> = gens.h.iter().map(label_of).collect();
    let mf = MatrixFactorization {
        a: InvariantMatrix::new(a, rows.clone(), cols.clone())?,
        b: InvariantMatrix::new(b, cols, rows)?,
        delta: discriminant(n, BasisKind::Elementary)?,
        label: Some(MfLabel {
            shape: gens.t.shape(),
            t: gens.t.clone(),
            f_degrees: gens.f_conj.iter().map(|e| e.degree).collect(),
            h_degrees: gens.h.iter().map(|e| e.degree).collect(),
        }),
    };
    let report = verify_mf(&mf);
    if !report.passed() {
        return Err(Error::Integrity(format!("block T = {}: {report}", gens.t)));
    }
    Ok(mf)
}

/// How `A` is computed for a single-tableau block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AScheme {
    Pairing,
    Expansion,
}

/// The block of `(z, z)` for `T ∈ ST(λ)`, in e-coordinates.
pub fn mf_for_partition(n: usize, lambda: &Partition, t: &Tableau) -> Result<MatrixFactorization> {
    mf_for_partition_with(n, lambda, t, AScheme::Pairing, &ExpansionCache::new(n))
}

pub fn mf_for_partition_with(
    n: usize,
    lambda: &Partition,
    t: &Tableau,
    scheme: AScheme,
    cache: &ExpansionCache,
) -> Result<MatrixFactorization> {
    if lambda.n() != n {
        return Err(Error::InvalidPartition(format!("{lambda} is not a partition of {n}")));
    }
    if t.shape() != *lambda || !t.is_standard() {
        return Err(Error::ShapeMismatch(format!("{} is not a standard tableau of shape {lambda}", t.to_text())));
    }
    let gens = block_generators(&MTableau::single(t.clone())?)?;
    let a = match scheme {
        AScheme::Pairing => a_by_pairing(&gens)?,
        AScheme::Expansion => a_by_expansion(&gens, cache)?,
    };
    assemble(&gens, a, b_by_expansion(&gens, cache)?)
}

/// `A` computed by both schemes, for cross-checking.
pub fn a_both_schemes(t: &Tableau, cache: &ExpansionCache) -> Result<(InvariantMatrix, InvariantMatrix)> {
    let gens = block_generators(&MTableau::single(t.clone())?)?;
    Ok((InvariantMatrix::from_entries(a_by_pairing(&gens)?)?, InvariantMatrix::from_entries(a_by_expansion(&gens, cache)?)?))
}

/// Every block `(λ, T)` for `λ ⊢ n`, in partition order and then last letter order.
pub fn all_blocks(n: usize) -> Result<Vec<MatrixFactorization>> {
    let cache = ExpansionCache::new(n);
    let mut jobs = Vec::new();
    for lam in partitions(n)? {
        for t in standard_tableaux(&lam) {
            jobs.push((lam.clone(), t));
        }
    }
    jobs.par_iter().map(|(lam, t)| mf_for_partition_with(n, lam, t, AScheme::Pairing, &cache)).collect()
}

/// The block for `T ∈ NST(λ)` of a Young subgroup of the given type,
/// by expansion over the module generators.
pub fn young_subgroup_mf(type_: &[usize], t: &MTableau) -> Result<MatrixFactorization> {
    let shape = t.shape();
    if t.type_() != type_ {
        return Err(Error::ShapeMismatch(format!("T = {t} does not have type {type_:?}")));
    }
    if !natural_standard_tableaux(&shape)?.contains(t) {
        return Err(Error::InvalidTableau(format!("{t} is not a natural standard m-tableau")));
    }
    let cache = ExpansionCache::new(t.n());
    let gens = block_generators(t)?;
    assemble(&gens, a_by_expansion(&gens, &cache)?, b_by_expansion(&gens, &cache)?)
}

/// Block-diagonal sum.
#[allow(clippy::needless_range_loop)]
pub fn mf_sum(m1: &MatrixFactorization, m2: &MatrixFactorization) -> Result<MatrixFactorization> {
    if m1.delta != m2.delta {
        return Err(Error::Usage("cannot sum factorizations of different polynomials".into()));
    }
    let diag = |x: &InvariantMatrix, y: &InvariantMatrix| -> Result<InvariantMatrix> {
        let zero = InvariantPoly::zero(m1.delta.kind(), m1.delta.n());
        let (r, c) = (x.rows() + y.rows(), x.cols() + y.cols());
        let mut entries = vec![vec![zero; c]; r];
        for i in 0..x.rows() {
            for j in 0..x.cols() {
                entries[i][j] = x.get(i, j).clone();
            }
        }
        for i in 0..y.rows() {
            for j in 0..y.cols() {
                entries[x.rows() + i][x.cols() + j] = y.get(i, j).clone();
            }
        }
        let rows = x.row_labels.iter().chain(&y.row_labels).cloned().collect();
        let cols = x.col_labels.iter().chain(&y.col_labels).cloned().collect();
        InvariantMatrix::new(entries, rows, cols)
    };
    Ok(MatrixFactorization { a: diag(&m1.a, &m2.a)?, b: diag(&m1.b, &m2.b)?, delta: m1.delta.clone(), label: None })
}

/// `Some(c)` when `A_2 = c·A_1` and `B_2 = c⁻¹·B_1`.
pub fn mf_equivalent_up_to_sign(m1: &MatrixFactorization, m2: &MatrixFactorization) -> Option<Rational> {
    if m1.delta != m2.delta || m1.size() != m2.size() || m1.a.cols() != m2.a.cols() {
        return None;
    }
    let (i, j) = (0..m1.a.rows()).flat_map(|i| (0..m1.a.cols()).map(move |j| (i, j))).find(|&(i, j)| !m1.a.get(i, j).is_zero())?;
    let c = m2.a.get(i, j).ratio_to(m1.a.get(i, j))?;
    let inv = Rational::one() / &c;
    let same = |x: &InvariantMatrix, y: &InvariantMatrix, s: &Rational| {
        x.entries.iter().flatten().zip(y.entries.iter().flatten()).all(|(p, q)| p.scale(s) == *q)
    };
    (same(&m1.a, &m2.a, &c) && same(&m1.b, &m2.b, &inv)).then_some(c)
}

/// The matrix of multiplication by `z` from `B_H` (columns) to `B_F` (rows).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushforwardMatrix {
    pub full: InvariantMatrix,
    /// Rows of `B_F` and columns of `B_H` belonging to each partition; both bases share the layout.
    pub block_index: Vec<(Partition, Range<usize>)>,
}

/// How each column `z·H` is expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PushforwardMode {
    /// Against the generators of `N_{T'}` only, using `z·M_T ⊆ N_{T'}`.
    Restricted,
    /// Against all of `B_F`, which checks the block structure instead of assuming it.
    Full,
}

/// Columns indexed by `B_H`, rows by `B_F`.
pub fn pushforward_matrix(n: usize, mode: PushforwardMode) -> Result<PushforwardMatrix> {
    pushforward(basis_bh(n)?, basis_bf(n)?, mode)
}

/// The partner map: multiplication by `z` from `B_F` (columns) to `B_H` (rows).
pub fn pushforward_partner(n: usize, mode: PushforwardMode) -> Result<PushforwardMatrix> {
    pushforward(basis_bf(n)?, basis_bh(n)?, mode)
}

fn pushforward(source: Vec<BasisElement>, target: Vec<BasisElement>, mode: PushforwardMode) -> Result<PushforwardMatrix> {
    let n = source.first().map_or(0, |e| e.poly.nvars());
    let cache = ExpansionCache::new(n);
    let zero = InvariantPoly::zero(BasisKind::Elementary, n);
    let size = target.len();
    let z = vandermonde(n);

    let mut block_index: Vec<(Partition, Range<usize>)> = Vec::new();
    for (pos, e) in source.iter().enumerate() {
        let lam = &e.index.shape[0];
        match block_index.last_mut() {
            Some((l, r)) if l == lam => r.end = pos + 1,
            _ => block_index.push((lam.clone(), pos..pos + 1)),
        }
    }

    let columns: Vec<Vec<(usize, InvariantPoly)>> = source
        .par_iter()
        .map(|h| -> Result<Vec<(usize, InvariantPoly)>> {
            let product = z.checked_mul(&h.poly)?;
            let rows: Vec<usize> = match mode {
                PushforwardMode::Full => (0..size).collect(),
                PushforwardMode::Restricted => {
                    let tc = h.index.t.conjugate();
                    target.iter().enumerate().filter(|(_, f)| f.index.t == tc).map(|(i, _)| i).collect()
                }
            };
            let basis: Vec<MultiPoly> = rows.iter().map(|&i| target[i].poly.clone()).collect();
            let coeffs = express_in_basis_cached(&product, &basis, &cache)?;
            Ok(rows.into_iter().zip(coeffs).filter(|(_, c)| !c.is_zero()).collect())
        })
        .collect::<Result<_>>()?;

    let mut entries = vec![vec![zero; source.len()]; size];
    for (j, col) in columns.into_iter().enumerate() {
        for (i, c) in col {
            entries[i][j] = c;
        }
    }
    let rows = target.iter().map(label_of).collect();
    let cols = source.iter().map(label_of).collect();
    Ok(PushforwardMatrix { full: InvariantMatrix::new(entries, rows, cols)?, block_index })
}

impl PushforwardMatrix {
    fn range(&self, lam: &Partition) -> Option<Range<usize>> {
        self.block_index.iter().find(|(l, _)| l == lam).map(|(_, r)| r.clone())
    }

    /// Rows of `F_row`, columns of `H_col`.
    pub fn block(&self, row: &Partition, col: &Partition) -> Option<InvariantMatrix> {
        let (rr, cr) = (self.range(row)?, self.range(col)?);
        let entries = rr.clone().map(|i| cr.clone().map(|j| self.full.get(i, j).clone()).collect()).collect();
        let rows = rr.map(|i| self.full.row_labels[i].clone()).collect();
        let cols = cr.map(|j| self.full.col_labels[j].clone()).collect();
        InvariantMatrix::new(entries, rows, cols).ok()
    }

    /// Nonzero entries outside the anti-diagonal blocks `(λ', λ)`.
    pub fn off_block_entries(&self) -> Vec<(usize, usize)> {
        let owner = |k: usize| self.block_index.iter().find(|(_, r)| r.contains(&k)).map(|(l, _)| l.clone());
        let mut out = Vec::new();
        for i in 0..self.full.rows() {
            for j in 0..self.full.cols() {
                if self.full.get(i, j).is_zero() {
                    continue;
                }
                if owner(i) != owner(j).map(|l| l.conjugate()) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `partner(λ, λ')·self(λ', λ)`: `z²` on the `λ` part of the source basis.
    pub fn paired_block_product(&self, partner: &PushforwardMatrix, lam: &Partition) -> Result<InvariantMatrix> {
        let conj = lam.conjugate();
        let missing = || Error::Usage(format!("no block for {lam}"));
        let forward = self.block(&conj, lam).ok_or_else(missing)?;
        let back = partner.block(lam, &conj).ok_or_else(missing)?;
        back.checked_mul(&forward)
    }

    /// The product `M(λ, λ')·M(λ', λ)` of opposite blocks of one matrix,
    /// which reads `F` coordinates as `H` coordinates.
    pub fn opposite_block_product(&self, lam: &Partition) -> Result<InvariantMatrix> {
        let conj = lam.conjugate();
        let missing = || Error::Usage(format!("no block for {lam}"));
        let upper = self.block(lam, &conj).ok_or_else(missing)?;
        let lower = self.block(&conj, lam).ok_or_else(missing)?;
        upper.checked_mul(&lower)
    }
}

/// Change of basis taking one matrix to another:
/// `theirs[r][c] = row_scale[r]·col_scale[c]·ours[row_perm[r]][col_perm[c]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reconciliation {
    pub row_perm: Vec<usize>,
    pub col_perm: Vec<usize>,
    pub row_scale: Vec<Rational>,
    pub col_scale: Vec<Rational>,
}

impl Reconciliation {
    pub fn apply_a(&self, a: &InvariantMatrix) -> Result<InvariantMatrix> {
        let entries = (0..self.row_perm.len())
            .map(|r| {
                (0..self.col_perm.len())
                    .map(|c| a.get(self.row_perm[r], self.col_perm[c]).scale(&(&self.row_scale[r] * &self.col_scale[c])))
                    .collect()
            })
            .collect();
        InvariantMatrix::from_entries(entries)
    }

    /// The partner transformation, keeping `A·B = Δ·I`.
    pub fn apply_b(&self, b: &InvariantMatrix) -> Result<InvariantMatrix> {
        let entries = (0..self.col_perm.len())
            .map(|c| {
                (0..self.row_perm.len())
                    .map(|r| {
                        let s = Rational::one() / (&self.row_scale[r] * &self.col_scale[c]);
                        b.get(self.col_perm[c], self.row_perm[r]).scale(&s)
                    })
                    .collect()
            })
            .collect();
        InvariantMatrix::from_entries(entries)
    }
}

/// Search for row/column permutations and diagonal rescalings taking `ours` to `theirs`.
pub fn reconcile(ours: &InvariantMatrix, theirs: &InvariantMatrix) -> Option<Reconciliation> {
    let s = ours.rows();
    if ours.cols() != s || theirs.rows() != s || theirs.cols() != s {
        return None;
    }
    // ratio[r][c][r2][c2]: None if incompatible, Some(None) if both zero
    let ratio = |r: usize, c: usize, r2: usize, c2: usize| -> Option<Option<Rational>> {
        let (t, o) = (theirs.get(r, c), ours.get(r2, c2));
        match (t.is_zero(), o.is_zero()) {
            (true, true) => Some(None),
            (false, false) => t.ratio_to(o).map(Some),
            _ => None,
        }
    };
    let table: Vec<Option<Option<Rational>>> = (0..s * s * s * s)
        .map(|k| ratio(k / (s * s * s), (k / (s * s)) % s, (k / s) % s, k % s))
        .collect();
    let at = |r: usize, c: usize, r2: usize, c2: usize| &table[((r * s + c) * s + r2) * s + c2];

    let mut col_perm: Vec<usize> = (0..s).collect();
    loop {
        let mut row_perm = Vec::with_capacity(s);
        let mut used = vec![false; s];
        if let Some(found) = assign_rows(s, &col_perm, &mut row_perm, &mut used, &at) {
            return Some(found);
        }
        if !next_permutation(&mut col_perm) {
            return None;
        }
    }
}

fn assign_rows<'a, F>(s: usize, col_perm: &[usize], row_perm: &mut Vec<usize>, used: &mut [bool], at: &F) -> Option<Reconciliation>
where
    F: Fn(usize, usize, usize, usize) -> &'a Option<Option<Rational>>,
{
    let r = row_perm.len();
    if r == s {
        return solve_scales(s, col_perm, row_perm, at);
    }
    for cand in 0..s {
        if used[cand] || (0..s).any(|c| at(r, c, cand, col_perm[c]).is_none()) {
            continue;
        }
        used[cand] = true;
        row_perm.push(cand);
        if let Some(found) = assign_rows(s, col_perm, row_perm, used, at) {
            return Some(found);
        }
        row_perm.pop();
        used[cand] = false;
    }
    None
}

/// Solve `ratio(r, c) = row_scale[r]·col_scale[c]` over the nonzero entries.
fn solve_scales<'a, F>(s: usize, col_perm: &[usize], row_perm: &[usize], at: &F) -> Option<Reconciliation>
where
    F: Fn(usize, usize, usize, usize) -> &'a Option<Option<Rational>>,
{
    let q = |r: usize, c: usize| at(r, c, row_perm[r], col_perm[c]).as_ref().and_then(|x| x.as_ref());
    let mut rows: Vec<Option<Rational>> = vec![None; s];
    let mut cols: Vec<Option<Rational>> = vec![None; s];
    for start in 0..s {
        if rows[start].is_some() {
            continue;
        }
        rows[start] = Some(Rational::one());
        let mut queue = VecDeque::from([(true, start)]);
        while let Some((is_row, k)) = queue.pop_front() {
            for other in 0..s {
                let (r, c) = if is_row { (k, other) } else { (other, k) };
                let Some(v) = q(r, c) else { continue };
                if is_row {
                    let want = v / rows[r].as_ref()?;
                    match &cols[c] {
                        Some(have) if *have != want => return None,
                        Some(_) => {}
                        None => {
                            cols[c] = Some(want);
                            queue.push_back((false, c));
                        }
                    }
                } else {
                    let want = v / cols[c].as_ref()?;
                    match &rows[r] {
                        Some(have) if *have != want => return None,
                        Some(_) => {}
                        None => {
                            rows[r] = Some(want);
                            queue.push_back((true, r));
                        }
                    }
                }
            }
        }
    }
    Some(Reconciliation {
        row_perm: row_perm.to_vec(),
        col_perm: col_perm.to_vec(),
        row_scale: rows.into_iter().map(|x| x.unwrap_or_else(Rational::one)).collect(),
        col_scale: cols.into_iter().map(|x| x.unwrap_or_else(Rational::one)).collect(),
    })
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return false };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn delta(n: usize) -> InvariantPoly {
        discriminant(n, BasisKind::Elementary).unwrap()
    }

    fn constant(n: usize, c: i64) -> InvariantPoly {
        InvariantPoly::constant(BasisKind::Elementary, n, Rational::from_integer(c.into()))
    }

    #[test]
    fn one_row_and_one_column_blocks() {
        // the one-column F polynomial is (-1)^{n(n-1)/2} z/n!
        for n in 2..=4 {
            let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
            let fact = Rational::from_integer(factorial(n) * sign);
            let row = mf_for_partition(n, &lam(&n.to_string()), &Tableau::row(n)).unwrap();
            assert_eq!(row.a.get(0, 0), &InvariantPoly::constant(BasisKind::Elementary, n, fact.clone()));
            assert_eq!(row.b.get(0, 0), &delta(n).scale(&(Rational::one() / &fact)));
            let ones = vec!["1"; n].join(",");
            let col = mf_for_partition(n, &lam(&ones), &Tableau::column(n)).unwrap();
            assert_eq!(col.a.get(0, 0), &delta(n).scale(&(Rational::one() / &fact)));
            assert_eq!(col.b.get(0, 0), &InvariantPoly::constant(BasisKind::Elementary, n, fact));
        }
    }

    #[test]
    fn all_blocks_verify_and_are_graded() {
        for n in 2..=4 {
            let blocks = all_blocks(n).unwrap();
            let total: usize = blocks.iter().map(MatrixFactorization::size).sum();
            let expected: u128 = partitions(n).unwrap().iter().map(|l| l.hook_length_count().pow(2)).sum();
            assert_eq!(total as u128, expected);
            for b in &blocks {
                assert!(verify_mf(b).passed());
                assert!(b.graded_defects().is_empty(), "{:?}", b.label);
            }
        }
    }

    #[test]
    fn two_schemes_agree() {
        for n in 2..=4 {
            let cache = ExpansionCache::new(n);
            for l in partitions(n).unwrap() {
                for t in standard_tableaux(&l) {
                    let (p, e) = a_both_schemes(&t, &cache).unwrap();
                    assert_eq!(p.entries, e.entries, "T = {}", t.to_text());
                }
            }
        }
    }

    #[test]
    fn perturbed_entry_is_located() {
        let mut m = mf_for_partition(3, &lam("2,1"), &Tableau::parse("1 2/3").unwrap()).unwrap();
        let bumped = m.a.get(0, 0).checked_add(&constant(3, 1)).unwrap();
        m.a.entries[0][0] = bumped;
        let r = verify_mf(&m);
        assert!(!r.passed());
        assert!(r.ab_defects.iter().all(|&(i, _)| i == 0));
        assert!(r.ba_defects.iter().all(|&(_, j)| j == 0));
    }

    #[test]
    fn trivial_and_sums() {
        let d = delta(3);
        let t = MatrixFactorization::trivial(&d);
        assert!(verify_mf(&t).passed());
        let flipped = MatrixFactorization { a: t.b.clone(), b: t.a.clone(), delta: d.clone(), label: None };
        let s = mf_sum(&t, &flipped).unwrap();
        assert_eq!(s.size(), 2);
        assert!(verify_mf(&s).passed());

        let blocks = all_blocks(3).unwrap();
        let mut acc = blocks[0].clone();
        for b in &blocks[1..] {
            acc = mf_sum(&acc, b).unwrap();
        }
        assert_eq!(acc.size(), 6);
        assert!(verify_mf(&acc).passed());
        assert!(mf_sum(&t, &MatrixFactorization::trivial(&delta(3).scale(&Rational::from_integer(2.into())))).is_err());
    }

    #[test]
    fn same_shape_blocks_agree_up_to_sign() {
        for n in 2..=4 {
            let blocks = all_blocks(n).unwrap();
            for x in &blocks {
                assert_eq!(mf_equivalent_up_to_sign(x, x), Some(Rational::one()));
                for y in &blocks {
                    let same = x.label.as_ref().unwrap().shape == y.label.as_ref().unwrap().shape;
                    let c = mf_equivalent_up_to_sign(x, y);
                    if same {
                        let c = c.expect("same shape blocks are equivalent");
                        assert!(c == Rational::one() || c == -Rational::one());
                    } else {
                        assert!(c.is_none());
                    }
                }
            }
        }
    }

    #[test]
    fn pushforward_for_two_variables() {
        let p = pushforward_matrix(2, PushforwardMode::Full).unwrap();
        let d = delta(2);
        assert_eq!(p.full.get(0, 0), &InvariantPoly::zero(BasisKind::Elementary, 2));
        assert_eq!(p.full.get(0, 1), &d.scale(&Rational::new((-1).into(), 2.into())));
        assert_eq!(p.full.get(1, 0), &constant(2, -2));
        assert!(p.full.get(1, 1).is_zero());
    }

    #[test]
    fn pushforward_block_structure() {
        for n in 2..=4 {
            let full = pushforward_matrix(n, PushforwardMode::Full).unwrap();
            assert!(full.off_block_entries().is_empty());
            let restricted = pushforward_matrix(n, PushforwardMode::Restricted).unwrap();
            assert_eq!(full.full.entries, restricted.full.entries);
        }
    }

    #[test]
    fn paired_blocks_multiply_to_delta() {
        for n in 2..=4 {
            let forward = pushforward_matrix(n, PushforwardMode::Restricted).unwrap();
            let back = pushforward_partner(n, PushforwardMode::Restricted).unwrap();
            for (l, _) in &forward.block_index {
                let prod = forward.paired_block_product(&back, l).unwrap();
                assert!(prod.scalar_defects(&delta(n)).is_empty(), "n = {n}, {l}");
            }
        }
        // mixing the two bases breaks the identity as soon as a block is not 1x1
        let p = pushforward_matrix(3, PushforwardMode::Restricted).unwrap();
        assert!(!p.opposite_block_product(&lam("2,1")).unwrap().scalar_defects(&delta(3)).is_empty());
        assert!(p.opposite_block_product(&lam("3")).unwrap().scalar_defects(&delta(3)).is_empty());
    }

    #[test]
    fn young_subgroup_full_type_matches_blocks() {
        for t in standard_tableaux(&lam("2,1")) {
            let m = MTableau::single(t.clone()).unwrap();
            let y = young_subgroup_mf(&[3], &m).unwrap();
            let b = mf_for_partition(3, &lam("2,1"), &t).unwrap();
            assert_eq!(y.a.entries, b.a.entries);
            assert_eq!(y.b.entries, b.b.entries);
        }
    }

    #[test]
    fn reconcile_recovers_a_known_transform() {
        let m = mf_for_partition(4, &lam("3,1"), &Tableau::parse("1 2 3/4").unwrap()).unwrap();
        let q = |a: i64, b: i64| Rational::new(a.into(), b.into());
        let known = Reconciliation {
            row_perm: vec![2, 0, 1],
            col_perm: vec![1, 2, 0],
            row_scale: vec![q(1, 1), q(-3, 2), q(5, 1)],
            col_scale: vec![q(2, 7), q(1, 1), q(-1, 1)],
        };
        let theirs = known.apply_a(&m.a).unwrap();
        let found = reconcile(&m.a, &theirs).unwrap();
        assert_eq!(found.apply_a(&m.a).unwrap().entries, theirs.entries);
        let moved = MatrixFactorization { a: theirs, b: found.apply_b(&m.b).unwrap(), delta: m.delta.clone(), label: None };
        assert!(verify_mf(&moved).passed());
    }

    #[test]
    fn sliced_coordinates_still_verify() {
        let m = mf_for_partition(4, &lam("2,2"), &Tableau::parse("1 2/3 4").unwrap()).unwrap();
        let t = m.to_coords(BasisKind::SlicedT).unwrap();
        assert_eq!(t.delta, discriminant(4, BasisKind::SlicedT).unwrap());
        assert!(verify_mf(&t).passed());
        let s = m.to_coords(BasisKind::PowerSum).unwrap();
        assert!(verify_mf(&s).passed());
    }

    #[test]
    fn json_round_trip() {
        let m = mf_for_partition(3, &lam("2,1"), &Tableau::parse("1 3/2").unwrap()).unwrap();
        let json = m.to_json();
        assert!(json.verified);
        let text = serde_json::to_string(&json).unwrap();
        let back = MatrixFactorization::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back.a, m.a);
        assert_eq!(back.b, m.b);
        assert_eq!(back.delta, m.delta);
    }
}
