//! Partitions, Young tableaux, words and indices, the orders used to index
//! the Specht bases, and m-tableaux for Young subgroups.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty partition
/// is allowed and stands for an empty component of an m-tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing and positive")));
        }
        Ok(Partition { parts })
    }

    /// Parse `"2,2,1"`; `"-"` or `""` gives the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "-" {
            return Ok(Partition { parts: vec![] });
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidPartition(format!("bad part `{p}`"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width).map(|c| self.parts.iter().filter(|&&p| p > c).count()).collect();
        Partition { parts }
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn hook_length_count(&self) -> u128 {
        let conj = self.conjugate();
        let factorial: u128 = (1..=self.n() as u128).product();
        let hooks: u128 = self
            .parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| {
                let conj = &conj;
                (0..len).map(move |c| ((len - c - 1) + (conj.parts[c] - r - 1) + 1) as u128)
            })
            .product();
        factorial / hooks
    }
}

impl Ord for Partition {
    /// `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`: a larger part at the
    /// first difference makes the partition smaller.
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `n`, smallest (in the order above) first.
pub fn partitions(n: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::InvalidPartition("n must be positive".into()));
    }
    Ok(partitions_allow_empty(n))
}

fn partitions_allow_empty(n: usize) -> Vec<Partition> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A filling of a Young diagram with distinct positive integers, rows and
/// columns strictly increasing. A standard tableau uses exactly `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl TryFrom<Vec<Vec<usize>>> for Tableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl Tableau {
    /// Validate shape and monotonicity; entries need not be `1..=n`.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau("row lengths must weakly decrease".into()));
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return Err(Error::InvalidTableau("rows must strictly increase".into()));
        }
        for w in rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(below, above)| below <= above) {
                return Err(Error::InvalidTableau("columns must strictly increase".into()));
            }
        }
        let mut all: Vec<usize> = rows.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.first() == Some(&0) || all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidTableau("entries must be distinct positive integers".into()));
        }
        Ok(Tableau { rows })
    }

    pub fn new_standard(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau::new(rows)?;
        if !t.is_standard() {
            return Err(Error::InvalidTableau(format!("{t} does not use exactly 1..{}", t.size())));
        }
        Ok(t)
    }

    pub fn empty() -> Self {
        Tableau { rows: vec![] }
    }

    /// Single row `1..=n`.
    pub fn row(n: usize) -> Self {
        Tableau { rows: if n == 0 { vec![] } else { vec![(1..=n).collect()] } }
    }

    /// Single column `1..=n`.
    pub fn column(n: usize) -> Self {
        Tableau { rows: (1..=n).map(|k| vec![k]).collect() }
    }

    /// Parse `"1 2/3 4/5"`; `"-"` is the empty tableau.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Tableau::empty());
        }
        let rows = s
            .split('/')
            .map(|row| {
                row.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>().map_err(|_| Error::InvalidTableau(format!("bad entry `{t}`"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_standard(&self) -> bool {
        let mut all = self.entries();
        all.sort_unstable();
        all.iter().enumerate().all(|(i, &k)| k == i + 1)
    }

    pub fn shape(&self) -> Partition {
        Partition { parts: self.rows.iter().map(Vec::len).collect() }
    }

    pub fn entries(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// `(row, column)` of entry `k`.
    pub fn position(&self, k: usize) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(r, row)| row.iter().position(|&x| x == k).map(|c| (r, c)))
    }

    /// Columns, each read top to bottom.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width).map(|c| self.rows.iter().filter_map(|r| r.get(c).copied()).collect()).collect()
    }

    /// Cells in reading order: columns left to right, each bottom to top.
    pub fn reading_cells(&self) -> Vec<(usize, usize)> {
        let width = self.rows.first().map_or(0, Vec::len);
        let mut cells = Vec::with_capacity(self.size());
        for c in 0..width {
            for r in (0..self.rows.len()).rev() {
                if c < self.rows[r].len() {
                    cells.push((r, c));
                }
            }
        }
        cells
    }

    pub fn word(&self) -> Vec<usize> {
        self.reading_cells().into_iter().map(|(r, c)| self.rows[r][c]).collect()
    }

    pub fn conjugate(&self) -> Tableau {
        Tableau { rows: self.columns() }
    }

    /// Index data of a standard tableau.
    pub fn index(&self) -> Result<IndexData> {
        if !self.is_standard() {
            return Err(Error::InvalidTableau(format!("index of non-standard tableau {self}")));
        }
        let letters = index_from_word(&self.word());
        Ok(IndexData::new(&letters, std::slice::from_ref(self)))
    }

    pub fn to_text(&self) -> String {
        if self.rows.is_empty() {
            return "-".to_string();
        }
        self.rows
            .iter()
            .map(|r| r.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("/")
    }

    /// Same shape with the `k`-th smallest entry replaced by `labels[k]`.
    fn relabel(&self, labels: &[usize]) -> Tableau {
        let mut sorted = self.entries();
        sorted.sort_unstable();
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|k| labels[sorted.binary_search(k).unwrap()]).collect())
            .collect();
        Tableau { rows }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `letters[k - 1]` is the index of `k` for a word that is a permutation of `1..=n`.
fn index_from_word(word: &[usize]) -> Vec<u32> {
    let n = word.len();
    let mut pos = vec![0usize; n + 1];
    for (i, &k) in word.iter().enumerate() {
        pos[k] = i;
    }
    let mut letters = vec![0u32; n];
    for k in 1..n {
        letters[k] = if pos[k + 1] > pos[k] { letters[k - 1] } else { letters[k - 1] + 1 };
    }
    letters
}

/// The index `i(T)` of a (standard or m-) tableau.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexData {
    /// `letters[k - 1]` is the index of the letter `k`.
    pub letters: Vec<u32>,
    /// The index written into the cells, one grid per component.
    pub index_tableau: Vec<Vec<Vec<u32>>>,
    /// Indices in weakly increasing order.
    pub i_hat: Vec<u32>,
    /// Sum of the indices.
    pub i_total: u32,
}

impl IndexData {
    fn new(letters: &[u32], components: &[Tableau]) -> Self {
        let index_tableau = components
            .iter()
            .map(|t| t.rows.iter().map(|r| r.iter().map(|&k| letters[k - 1]).collect()).collect())
            .collect();
        let mut i_hat = letters.to_vec();
        i_hat.sort_unstable();
        IndexData { letters: letters.to_vec(), index_tableau, i_hat, i_total: letters.iter().sum() }
    }
}

/// Standard tableaux of shape `lambda` filled with the given increasing letters.
fn tableaux_on(lambda: &Partition, letters: &[usize]) -> Vec<Tableau> {
    fn rec(lambda: &[usize], letters: &[usize], k: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        if k == letters.len() {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        for r in 0..lambda.len() {
            let len = rows[r].len();
            if len < lambda[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(letters[k]);
                rec(lambda, letters, k + 1, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&lambda.parts, letters, 0, &mut vec![Vec::new(); lambda.len()], &mut out);
    out
}

/// `ST(lambda)`, sorted by the last letter order, least first.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    let letters: Vec<usize> = (1..=lambda.n()).collect();
    let mut out = tableaux_on(lambda, &letters);
    out.sort_by(ll_order);
    out
}

fn ll_order(t1: &Tableau, t2: &Tableau) -> Ordering {
    let n = t1.size().max(t2.size());
    for k in (1..=n).rev() {
        let (p1, p2) = (t1.position(k), t2.position(k));
        if p1 != p2 {
            let r1 = p1.map_or(usize::MAX, |p| p.0);
            let r2 = p2.map_or(usize::MAX, |p| p.0);
            // larger row index (lower row) is smaller
            return r2.cmp(&r1);
        }
    }
    Ordering::Equal
}

/// Last letter order: `T1 < T2` iff the largest entry in different cells
/// sits in a higher row of `T2`.
pub fn ll_compare(t1: &Tableau, t2: &Tableau) -> Result<Ordering> {
    if t1.shape() != t2.shape() {
        return Err(Error::ShapeMismatch(format!("{} vs {}", t1.shape(), t2.shape())));
    }
    Ok(ll_order(t1, t2))
}

/// Compare weakly increasing sequences of equal length from the last entry backwards.
fn reverse_lex(a: &[u32], b: &[u32]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

/// Order used for the pairing: `|î|`, then `î` reverse lexicographically, then last letter.
pub fn bilinear_compare(s1: &Tableau, s2: &Tableau) -> Result<Ordering> {
    if s1.shape() != s2.shape() {
        return Err(Error::ShapeMismatch(format!("{} vs {}", s1.shape(), s2.shape())));
    }
    let (i1, i2) = (s1.index()?, s2.index()?);
    Ok(i1
        .i_total
        .cmp(&i2.i_total)
        .then_with(|| reverse_lex(&i1.i_hat, &i2.i_hat))
        .then_with(|| ll_order(s1, s2)))
}

/// A tuple of tableaux whose entries together are exactly `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Tableau>", into = "Vec<Tableau>")]
pub struct MTableau {
    components: Vec<Tableau>,
}

impl TryFrom<Vec<Tableau>> for MTableau {
    type Error = Error;
    fn try_from(components: Vec<Tableau>) -> Result<Self> {
        MTableau::new(components)
    }
}

impl From<MTableau> for Vec<Tableau> {
    fn from(t: MTableau) -> Self {
        t.components
    }
}

impl MTableau {
    pub fn new(components: Vec<Tableau>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidTableau("an m-tableau needs at least one component".into()));
        }
        let mut all: Vec<usize> = components.iter().flat_map(|t| t.entries()).collect();
        all.sort_unstable();
        if !all.iter().enumerate().all(|(i, &k)| k == i + 1) {
            return Err(Error::InvalidTableau("m-tableau entries must be exactly 1..n".into()));
        }
        Ok(MTableau { components })
    }

    /// A plain standard tableau as a 1-tableau.
    pub fn single(t: Tableau) -> Result<Self> {
        MTableau::new(vec![t])
    }

    /// Parse components separated by `|`, e.g. `"1 7/5 | - | 2 3/4 6"`.
    pub fn parse(s: &str) -> Result<Self> {
        MTableau::new(s.split('|').map(Tableau::parse).collect::<Result<Vec<_>>>()?)
    }

    pub fn components(&self) -> &[Tableau] {
        &self.components
    }

    pub fn n(&self) -> usize {
        self.components.iter().map(Tableau::size).sum()
    }

    /// `(n_1, ..., n_m)`.
    pub fn type_(&self) -> Vec<usize> {
        self.components.iter().map(Tableau::size).collect()
    }

    pub fn shape(&self) -> Vec<Partition> {
        self.components.iter().map(Tableau::shape).collect()
    }

    /// `(component, row, column)` of `k`.
    pub fn position(&self, k: usize) -> Option<(usize, usize, usize)> {
        self.components.iter().enumerate().find_map(|(i, t)| t.position(k).map(|(r, c)| (i, r, c)))
    }

    /// Component words concatenated, first component first.
    pub fn word(&self) -> Vec<usize> {
        self.components.iter().flat_map(Tableau::word).collect()
    }

    pub fn index(&self) -> IndexData {
        IndexData::new(&index_from_word(&self.word()), &self.components)
    }

    pub fn conjugate(&self) -> MTableau {
        MTableau { components: self.components.iter().map(Tableau::conjugate).collect() }
    }

    /// Component `i` holds the contiguous block of letters after those of components `< i`.
    pub fn is_natural(&self) -> bool {
        let mut start = 1;
        for t in &self.components {
            let mut e = t.entries();
            e.sort_unstable();
            if !e.iter().enumerate().all(|(i, &k)| k == start + i) {
                return false;
            }
            start += t.size();
        }
        true
    }

    pub fn to_text(&self) -> String {
        self.components.iter().map(Tableau::to_text).collect::<Vec<_>>().join(" | ")
    }
}

impl fmt::Display for MTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn shape_order(a: &[Partition], b: &[Partition]) -> Ordering {
    a.iter().cmp(b.iter())
}

fn m_ll_order(t1: &MTableau, t2: &MTableau) -> Ordering {
    for k in (1..=t1.n()).rev() {
        let (p1, p2) = (t1.position(k), t2.position(k));
        if p1 != p2 {
            let (c1, r1, _) = p1.expect("letter present");
            let (c2, r2, _) = p2.expect("letter present");
            return c1.cmp(&c2).then(r2.cmp(&r1));
        }
    }
    Ordering::Equal
}

/// Extended last letter order; different shapes compare by shape.
pub fn mtableau_compare(t1: &MTableau, t2: &MTableau) -> Result<Ordering> {
    if t1.type_() != t2.type_() {
        return Err(Error::ShapeMismatch(format!("types {:?} vs {:?}", t1.type_(), t2.type_())));
    }
    Ok(shape_order(&t1.shape(), &t2.shape()).then_with(|| m_ll_order(t1, t2)))
}

/// All tuples `(λ_1, ..., λ_m)` with `λ_i ⊢ n_i`, in lexicographic order.
pub fn mtableau_types(type_: &[usize]) -> Result<Vec<Vec<Partition>>> {
    if type_.is_empty() || type_.iter().sum::<usize>() == 0 {
        return Err(Error::InvalidPartition("subgroup type must have positive total".into()));
    }
    let mut out: Vec<Vec<Partition>> = vec![vec![]];
    for &ni in type_ {
        let choices = if ni == 0 { vec![Partition { parts: vec![] }] } else { partitions_allow_empty(ni) };
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.push(p.clone());
                    v
                })
            })
            .collect();
    }
    out.sort_by(|a, b| shape_order(a, b));
    Ok(out)
}

/// `NST(λ)`: standard m-tableaux whose components hold contiguous blocks.
pub fn natural_standard_tableaux(lambda: &[Partition]) -> Result<Vec<MTableau>> {
    let mut start = 1;
    let mut per_component: Vec<Vec<Tableau>> = Vec::new();
    for p in lambda {
        let letters: Vec<usize> = (start..start + p.n()).collect();
        per_component.push(if p.is_empty() { vec![Tableau::empty()] } else { tableaux_on(p, &letters) });
        start += p.n();
    }
    let mut out = cartesian(&per_component)
        .into_iter()
        .map(MTableau::new)
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(m_ll_order);
    Ok(out)
}

/// `ST(λ)` for a tuple of partitions.
pub fn standard_mtableaux(lambda: &[Partition]) -> Result<Vec<MTableau>> {
    let n: usize = lambda.iter().map(Partition::n).sum();
    if n == 0 {
        return Err(Error::InvalidPartition("empty shape".into()));
    }
    let sizes: Vec<usize> = lambda.iter().map(Partition::n).collect();
    let mut out = Vec::new();
    for assignment in set_compositions(n, &sizes) {
        let per_component: Vec<Vec<Tableau>> = lambda
            .iter()
            .zip(&assignment)
            .map(|(p, letters)| {
                if p.is_empty() {
                    vec![Tableau::empty()]
                } else {
                    let base = standard_tableaux(p);
                    base.iter().map(|t| t.relabel(letters)).collect()
                }
            })
            .collect();
        for comps in cartesian(&per_component) {
            out.push(MTableau::new(comps)?);
        }
    }
    out.sort_by(m_ll_order);
    Ok(out)
}

/// Ways to split `1..=n` into increasing blocks of the given sizes.
fn set_compositions(n: usize, sizes: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn rec(remaining: &[usize], sizes: &[usize], cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let Some((&size, rest_sizes)) = sizes.split_first() else {
            out.push(cur.clone());
            return;
        };
        for pick in combinations(remaining, size) {
            let rest: Vec<usize> = remaining.iter().copied().filter(|k| !pick.contains(k)).collect();
            cur.push(pick);
            rec(&rest, rest_sizes, cur, out);
            cur.pop();
        }
    }
    let all: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    rec(&all, sizes, &mut Vec::new(), &mut out);
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn cartesian(lists: &[Vec<Tableau>]) -> Vec<Vec<Tableau>> {
    let mut out: Vec<Vec<Tableau>> = vec![vec![]];
    for list in lists {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                list.iter().map(move |t| {
                    let mut v = prefix.clone();
                    v.push(t.clone());
                    v
                })
            })
            .collect();
    }
    out
}
