//! Higher Specht polynomials `F_T^P = ε_T . x_T^P` and their modified
//! versions `H_T^P = σ_T . x_T^P`, the bases they form, and the
//! coinvariant normal form used to test linear independence.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupalg::{mtableau_eps, mtableau_sigma, GroupAlgebraElement};
use crate::linalg;
use crate::poly::{MultiPoly, Rational};
use crate::tableaux::{
    bilinear_compare, mtableau_compare, mtableau_types, natural_standard_tableaux, partitions, standard_mtableaux,
    standard_tableaux, MTableau, Partition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpechtKind {
    F,
    H,
}

/// Labels `(λ, T, P)` of a basis element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpechtIndex {
    pub shape: Vec<Partition>,
    pub t: MTableau,
    pub p: MTableau,
}

impl SpechtIndex {
    pub fn label(&self) -> String {
        let shape: Vec<String> = self.shape.iter().map(|p| p.to_string()).collect();
        format!("{}; T={}; P={}", shape.join(" x "), self.t, self.p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub kind: SpechtKind,
    pub index: SpechtIndex,
    pub poly: MultiPoly,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisElementJson {
    pub kind: SpechtKind,
    pub lambda: Vec<Partition>,
    #[serde(rename = "T")]
    pub t: String,
    #[serde(rename = "P")]
    pub p: String,
    pub degree: u32,
    pub poly: String,
}

impl BasisElement {
    pub fn to_json(&self) -> BasisElementJson {
        BasisElementJson {
            kind: self.kind,
            lambda: self.index.shape.clone(),
            t: self.index.t.to_text(),
            p: self.index.p.to_text(),
            degree: self.degree,
            poly: self.poly.to_string(),
        }
    }

    pub fn from_json(json: &BasisElementJson) -> Result<Self> {
        let t = MTableau::parse(&json.t)?;
        let p = MTableau::parse(&json.p)?;
        let poly = MultiPoly::parse(&json.poly, t.n())?;
        Ok(BasisElement {
            kind: json.kind,
            index: SpechtIndex { shape: json.lambda.clone(), t, p },
            poly,
            degree: json.degree,
        })
    }
}

/// `x_{w(T)}^{i(P)}`: the entry of `T` in each cell is raised to the index of `P` in that cell.
pub fn base_monomial(t: &MTableau, p: &MTableau) -> Result<MultiPoly> {
    if t.shape() != p.shape() {
        return Err(Error::ShapeMismatch(format!("T = {t} and P = {p}")));
    }
    let n = t.n();
    let index = p.index();
    let mut exps = vec![0u32; n];
    for (comp, grid) in t.components().iter().zip(&index.index_tableau) {
        for (row, irow) in comp.rows().iter().zip(grid) {
            for (&k, &e) in row.iter().zip(irow) {
                exps[k - 1] = e;
            }
        }
    }
    MultiPoly::monomial(n, &exps, Rational::one())
}

fn symmetrizer(kind: SpechtKind, t: &MTableau) -> Result<GroupAlgebraElement> {
    match kind {
        SpechtKind::F => mtableau_eps(t),
        SpechtKind::H => mtableau_sigma(t),
    }
}

fn build(kind: SpechtKind, sym: &GroupAlgebraElement, t: &MTableau, p: &MTableau) -> Result<BasisElement> {
    let mono = base_monomial(t, p)?;
    let degree = mono.degree().unwrap_or(0);
    let poly = sym.apply(&mono)?;
    if poly.is_zero() {
        return Err(Error::Internal(format!("{kind:?} polynomial for T = {t}, P = {p} vanished")));
    }
    Ok(BasisElement { kind, index: SpechtIndex { shape: t.shape(), t: t.clone(), p: p.clone() }, poly, degree })
}

pub fn specht(kind: SpechtKind, t: &MTableau, p: &MTableau) -> Result<BasisElement> {
    build(kind, &symmetrizer(kind, t)?, t, p)
}

pub fn higher_specht_f(t: &MTableau, p: &MTableau) -> Result<BasisElement> {
    specht(SpechtKind::F, t, p)
}

pub fn modified_specht_h(t: &MTableau, p: &MTableau) -> Result<BasisElement> {
    specht(SpechtKind::H, t, p)
}

/// Degree indices `P` for the module with index `T`: bilinear order for a
/// single tableau, the extended last letter order for m-tableaux.
pub fn degree_indices(t: &MTableau) -> Result<Vec<MTableau>> {
    let shape = t.shape();
    if shape.len() == 1 {
        let mut st: Vec<MTableau> =
            standard_tableaux(&shape[0]).into_iter().map(MTableau::single).collect::<Result<_>>()?;
        st.sort_by(|a, b| bilinear_compare(&a.components()[0], &b.components()[0]).unwrap_or(Ordering::Equal));
        Ok(st)
    } else {
        standard_mtableaux(&shape)
    }
}

/// Generators of `M_T` (kind H) or `N_T` (kind F).
pub fn module_generators(kind: SpechtKind, t: &MTableau) -> Result<Vec<BasisElement>> {
    generators_for(kind, t, &degree_indices(t)?)
}

/// Specht polynomials `F_T^P` (or `H_T^P`) for the given indices `P`, in order.
pub fn generators_for(kind: SpechtKind, t: &MTableau, indices: &[MTableau]) -> Result<Vec<BasisElement>> {
    let sym = symmetrizer(kind, t)?;
    indices.par_iter().map(|p| build(kind, &sym, t, p)).collect()
}

fn basis(kind: SpechtKind, n: usize) -> Result<Vec<BasisElement>> {
    let mut pairs = Vec::new();
    for lam in partitions(n)? {
        let st: Vec<MTableau> = standard_tableaux(&lam).into_iter().map(MTableau::single).collect::<Result<_>>()?;
        for t in &st {
            for p in &st {
                pairs.push((t.clone(), p.clone()));
            }
        }
    }
    pairs.par_iter().map(|(t, p)| specht(kind, t, p)).collect()
}

/// `B_F`: all `F_T^P`, grouped by partition, then `T`, then `P` (last letter order).
pub fn basis_bf(n: usize) -> Result<Vec<BasisElement>> {
    basis(SpechtKind::F, n)
}

/// `B_H`, ordered like [`basis_bf`].
pub fn basis_bh(n: usize) -> Result<Vec<BasisElement>> {
    basis(SpechtKind::H, n)
}

/// `{F_T^S : T ∈ NST(λ), S ∈ ST(λ)}` over all shapes of the given type.
pub fn young_subgroup_basis(type_: &[usize]) -> Result<Vec<BasisElement>> {
    let mut pairs = Vec::new();
    for lam in mtableau_types(type_)? {
        let mut st = standard_mtableaux(&lam)?;
        st.sort_by(|a, b| mtableau_compare(a, b).unwrap_or(Ordering::Equal));
        for t in natural_standard_tableaux(&lam)? {
            for p in &st {
                pairs.push((t.clone(), p.clone()));
            }
        }
    }
    pairs.par_iter().map(|(t, p)| specht(SpechtKind::F, t, p)).collect()
}

/// Normal form modulo `(e_1, ..., e_n)` against the lex Gröbner basis
/// `h_k(x_k, ..., x_n)`, `k = 1..n`, whose leading terms are `x_k^k`.
/// The surviving monomials satisfy `a_k < k`.
pub fn coinvariant_normal_form(f: &MultiPoly) -> MultiPoly {
    let n = f.nvars();
    // complete homogeneous h_k in x_k..x_n, as exponent vectors
    let h: Vec<Vec<Vec<u32>>> = (1..=n).map(|k| complete_homogeneous(n, k - 1, k as u32)).collect();
    let mut rem: BTreeMap<Vec<u32>, Rational> = f.terms().map(|(m, c)| (m.exponents(n), c.clone())).collect();
    let mut out = MultiPoly::zero(n);
    while let Some((lead, c)) = rem.pop_last() {
        match (0..n).find(|&k| lead[k] > k as u32) {
            None => {
                out.add_term(crate::poly::Monomial::new(&lead).expect("bounded"), c);
            }
            Some(k) => {
                let mut quot = lead.clone();
                quot[k] -= k as u32 + 1;
                // subtract c * x^quot * h_k; its leading term cancels `lead`
                for mono in &h[k] {
                    let target: Vec<u32> = quot.iter().zip(mono).map(|(a, b)| a + b).collect();
                    if target == lead {
                        continue;
                    }
                    let entry = rem.entry(target.clone()).or_insert_with(Rational::zero);
                    *entry -= &c;
                    if entry.is_zero() {
                        rem.remove(&target);
                    }
                }
            }
        }
    }
    out
}

/// Exponent vectors of all monomials of degree `d` in the variables `start..n`.
fn complete_homogeneous(n: usize, start: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == n - 1 {
            cur[i] = left;
            out.push(cur.clone());
            cur[i] = 0;
            return;
        }
        for a in 0..=left {
            cur[i] = a;
            rec(n, i + 1, left - a, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(n, start, d, &mut vec![0; n], &mut out);
    out
}

/// Rank of the images of `polys` in the coinvariant algebra.
pub fn coinvariant_rank(polys: &[MultiPoly]) -> usize {
    let forms: Vec<MultiPoly> = polys.par_iter().map(coinvariant_normal_form).collect();
    // homogeneous pieces of different degrees are independent
    let mut by_degree: BTreeMap<u32, Vec<&MultiPoly>> = BTreeMap::new();
    let mut mixed = Vec::new();
    for f in &forms {
        match f.homogeneous_degree() {
            Some(d) => by_degree.entry(d).or_default().push(f),
            None if f.is_zero() => {}
            None => mixed.push(f),
        }
    }
    if !mixed.is_empty() {
        return dense_rank(&forms.iter().collect::<Vec<_>>());
    }
    by_degree.values().map(|group| dense_rank(group)).sum()
}

fn dense_rank(polys: &[&MultiPoly]) -> usize {
    let mut monos: Vec<_> = polys.iter().flat_map(|p| p.terms().map(|(m, _)| *m)).collect();
    monos.sort_unstable();
    monos.dedup();
    let rows: Vec<Vec<Rational>> = polys.iter().map(|p| monos.iter().map(|m| p.coefficient(m)).collect()).collect();
    linalg::rank(&rows)
}

/// Coefficients of the graded dimension series of a list of homogeneous elements.
pub fn graded_dimensions(elements: &[BasisElement]) -> Vec<usize> {
    let top = elements.iter().map(|b| b.degree).max().unwrap_or(0) as usize;
    let mut dims = vec![0; top + 1];
    for b in elements {
        dims[b.degree as usize] += 1;
    }
    dims
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vandermonde;
    use crate::tableaux::Tableau;

    fn m(s: &str) -> MTableau {
        MTableau::parse(s).unwrap()
    }

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn base_monomials() {
        assert_eq!(base_monomial(&m("1 2 3"), &m("1 2 3")).unwrap(), MultiPoly::one(3));
        let col = MTableau::single(Tableau::column(4)).unwrap();
        assert_eq!(base_monomial(&col, &col).unwrap(), MultiPoly::parse("x2*x3^2*x4^3", 4).unwrap());
        assert!(base_monomial(&m("1 2/3"), &m("1 2 3")).is_err());
    }

    #[test]
    fn column_and_row_cases() {
        let col = MTableau::single(Tableau::column(3)).unwrap();
        let f = higher_specht_f(&col, &col).unwrap();
        let h = modified_specht_h(&col, &col).unwrap();
        assert_eq!(f.poly, vandermonde(3).scale(&q(-1, 6)));
        assert_eq!(h.poly, f.poly);
        let row = m("1 2 3");
        assert_eq!(higher_specht_f(&row, &row).unwrap().poly, MultiPoly::one(3));
    }

    /// Literal `(f^λ/n!) Σ_{c ∈ C(T)} Σ_{r ∈ R(T)} sgn(c) c(r(f))` for a single tableau.
    fn literal_eps(t: &Tableau, f: &MultiPoly) -> MultiPoly {
        use crate::groupalg::{column_stabilizer, row_stabilizer};
        let n = t.size();
        let mut acc = MultiPoly::zero(n);
        for c in column_stabilizer(t, n) {
            for r in row_stabilizer(t, n) {
                let g = crate::poly::permute(&crate::poly::permute(f, &r).unwrap(), &c).unwrap();
                acc = if c.sign() < 0 { acc.checked_sub(&g) } else { acc.checked_add(&g) }.unwrap();
            }
        }
        let count = standard_tableaux(&t.shape()).len() as i64;
        let fact: i64 = (1..=n as i64).product();
        acc.scale(&q(count, fact))
    }

    #[test]
    fn n3_matches_literal_symmetrizer_sums() {
        let lam = Partition::parse("2,1").unwrap();
        let st = standard_tableaux(&lam);
        for t in &st {
            for p in &st {
                let (mt, mp) = (MTableau::single(t.clone()).unwrap(), MTableau::single(p.clone()).unwrap());
                let f = higher_specht_f(&mt, &mp).unwrap();
                assert_eq!(f.poly, literal_eps(t, &base_monomial(&mt, &mp).unwrap()));
                assert_eq!(f.degree, p.index().unwrap().i_total);
            }
        }
        // one value written out
        let f = higher_specht_f(&m("1 2/3"), &m("1 3/2")).unwrap();
        assert_eq!(f.poly.to_string(), "-1/3*x1*x2 + 1/3*x2*x3");
    }

    #[test]
    fn basis_sizes_and_small_case() {
        let b = basis_bf(2).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b[0].poly, MultiPoly::one(2));
        assert_eq!(b[1].poly, vandermonde(2).scale(&q(-1, 2)));
        for n in 1..=4 {
            let fact: usize = (1..=n).product();
            assert_eq!(basis_bf(n).unwrap().len(), fact);
        }
    }

    #[test]
    fn normal_form_kills_invariants() {
        let n = 4;
        for i in 1..=n {
            let e = crate::poly::elementary_symmetric(i, n).unwrap();
            assert!(coinvariant_normal_form(&e).is_zero());
            let times = e.checked_mul(&MultiPoly::parse("x1^2*x3 + x4", n).unwrap()).unwrap();
            assert!(coinvariant_normal_form(&times).is_zero());
        }
        assert_eq!(coinvariant_normal_form(&MultiPoly::parse("x2", n).unwrap()).to_string(), "x2");
    }

    #[test]
    fn bases_are_independent_for_n4() {
        let bf = basis_bf(4).unwrap();
        let bh = basis_bh(4).unwrap();
        assert_eq!(coinvariant_rank(&bf.iter().map(|b| b.poly.clone()).collect::<Vec<_>>()), 24);
        assert_eq!(coinvariant_rank(&bh.iter().map(|b| b.poly.clone()).collect::<Vec<_>>()), 24);
        assert_eq!(graded_dimensions(&bf), vec![1, 3, 5, 6, 5, 3, 1]);
    }

    #[test]
    fn generators_and_young_basis() {
        let t = m("1 2/3");
        assert_eq!(module_generators(SpechtKind::H, &t).unwrap().len(), 2);
        assert_eq!(module_generators(SpechtKind::F, &m("1 2 3")).unwrap()[0].poly, MultiPoly::one(3));
        let yb = young_subgroup_basis(&[1, 2]).unwrap();
        assert_eq!(yb.len(), 6);
        assert_eq!(coinvariant_rank(&yb.iter().map(|b| b.poly.clone()).collect::<Vec<_>>()), 6);
    }

    #[test]
    fn json_roundtrip() {
        let b = higher_specht_f(&m("1 2/3"), &m("1 3/2")).unwrap();
        let s = serde_json::to_string(&b.to_json()).unwrap();
        let back: BasisElementJson = serde_json::from_str(&s).unwrap();
        assert_eq!(BasisElement::from_json(&back).unwrap(), b);
    }
}
