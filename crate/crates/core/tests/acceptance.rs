//! Acceptance harness: one PASS/FAIL line per criterion.
//!
//! All comparisons are exact over the rationals; the pinned tolerance below
//! is zero and is only spelled out so the output states it. Criteria that do
//! not hold as stated print FAIL; for those the test asserts the precise
//! deviation that was observed instead.
//!
//! `cargo test --release --test acceptance -- --nocapture` shows the lines.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use specht_mf::groupalg::{young_symmetrizer_eps, young_symmetrizer_sigma};
use specht_mf::invariant::{bilinear_form, discriminant, saito_discriminant, ExpansionCache, InvariantMatrix};
use specht_mf::mf::{
    a_both_schemes, all_blocks, mf_equivalent_up_to_sign, pushforward_matrix, reconcile, verify_mf, young_subgroup_mf,
    MatrixFactorization, PushforwardMode, Reconciliation,
};
use specht_mf::poly::{vandermonde, Monomial};
use specht_mf::specht::{basis_bf, basis_bh, coinvariant_rank, graded_dimensions, specht, SpechtKind};
use specht_mf::symmetric::weighted_exponents;
use specht_mf::tableaux::{bilinear_compare, ll_compare, partitions, standard_tableaux};
use specht_mf::{BasisKind, InvariantPoly, MTableau, MultiPoly, Partition, Rational, Tableau};

/// Exact arithmetic: every comparison must hold with zero error.
const TOLERANCE: i64 = 0;
/// Desktop budget for all blocks at `n = 5`.
const N5_BUDGET: Duration = Duration::from_secs(600);
/// Seed and sample size for the `n = 5` lemma spot checks.
const SEED: u64 = 0x5eed;
const SPOT_CHECKS: usize = 12;

const GOLDEN: &str = include_str!("data/ex315_discriminant_t.txt");
const A41: &str = include_str!("data/ex315_a_41.txt");
const A32: &str = include_str!("data/fig1_a_32.txt");
const A12: &str = include_str!("data/sec4_a_12.txt");
const B12: &str = include_str!("data/sec4_b_12.txt");

fn q(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

fn poly(kind: BasisKind, n: usize, s: &str) -> InvariantPoly {
    InvariantPoly::parse(kind, n, s).unwrap()
}

struct Line {
    criterion: usize,
    pass: bool,
    detail: String,
}

fn report(lines: &mut Vec<Line>, criterion: usize, pass: bool, detail: String) {
    println!("criterion {criterion}: {} ({detail})", if pass { "PASS" } else { "FAIL" });
    lines.push(Line { criterion, pass, detail });
}

fn with_label(mf: &MatrixFactorization) -> (Partition, Tableau) {
    let label = mf.label.as_ref().expect("blocks carry labels");
    (label.shape[0].clone(), label.t.components()[0].clone())
}

fn criterion_1(lines: &mut Vec<Line>) -> Vec<MatrixFactorization> {
    let mut failures = 0;
    let mut count = 0;
    let mut n5 = Vec::new();
    let mut elapsed = Duration::ZERO;
    for n in 3..=5 {
        let clock = Instant::now();
        let blocks = all_blocks(n).unwrap();
        if n == 5 {
            elapsed = clock.elapsed();
        }
        for mf in &blocks {
            count += 1;
            if !verify_mf(mf).passed() {
                failures += 1;
            }
        }
        if n == 5 {
            n5 = blocks;
        }
    }
    let pass = failures == 0 && elapsed < N5_BUDGET;
    report(lines, 1, pass, format!("{count} blocks for n = 3, 4, 5, {failures} failing, n = 5 built in {elapsed:.1?}, tolerance {TOLERANCE}"));
    n5
}

fn criterion_2(lines: &mut Vec<Line>) {
    let delta = discriminant(5, BasisKind::SlicedT).unwrap();
    let text = format!("{delta}\n");
    let terms = delta.len();
    let lead = delta.terms().into_iter().find(|(e, _)| e == &vec![3, 2, 2, 0]).map(|(_, c)| c);
    let pass = text == GOLDEN && terms == 19 && lead == Some(q(-1, 3600));
    report(lines, 2, pass, format!("{terms} terms, t1^3*t2^2*t3^2 coefficient {}, golden byte-exact: {}", lead.unwrap_or_default(), text == GOLDEN));
}

/// `A * Q` and `Q^{-1} * B` for a column operation matrix `Q`.
fn column_change(mf: &MatrixFactorization, q_mat: &InvariantMatrix, q_inv: &InvariantMatrix) -> MatrixFactorization {
    MatrixFactorization {
        a: mf.a.checked_mul(q_mat).unwrap(),
        b: q_inv.checked_mul(&mf.b).unwrap(),
        delta: mf.delta.clone(),
        label: None,
    }
}

fn criterion_3(lines: &mut Vec<Line>, n5: &[MatrixFactorization]) {
    let t = BasisKind::SlicedT;
    let paper41 = InvariantMatrix::from_text(t, 5, A41).unwrap();
    let paper32 = InvariantMatrix::from_text(t, 5, A32).unwrap();
    let shape41 = Partition::parse("4,1").unwrap();
    let shape32 = Partition::parse("3,2").unwrap();

    let mut matched41 = 0;
    let mut total41 = 0;
    let mut scales41 = String::new();
    let mut matched32 = 0;
    for mf in n5 {
        let (shape, tab) = with_label(mf);
        if shape != shape41 && shape != shape32 {
            continue;
        }
        let ours = mf.to_coords(t).unwrap();
        let paper = if shape == shape41 { &paper41 } else { &paper32 };
        let Some(r) = reconcile(&ours.a, paper) else { continue };
        let moved = MatrixFactorization {
            a: r.apply_a(&ours.a).unwrap(),
            b: r.apply_b(&ours.b).unwrap(),
            delta: ours.delta.clone(),
            label: None,
        };
        let ok = &moved.a == paper && verify_mf(&moved).passed();
        if shape == shape41 {
            total41 += 1;
            if ok {
                matched41 += 1;
                if scales41.is_empty() {
                    scales41 = format!("T = {}: rows {:?}, cols {:?}, col scales {}", tab.to_text(), r.row_perm, r.col_perm, join(&r.col_scale));
                }
            }
        } else if ok {
            matched32 += 1;
        }
    }
    assert_eq!(total41, 4);

    // the (3,2) block: degrees force the permutation, four columns rescale,
    // and the printed fifth column mixes in t3 times the first
    let first32 = n5.iter().find(|mf| with_label(mf).0 == shape32).unwrap().to_coords(t).unwrap();
    let perms = Reconciliation {
        row_perm: vec![4, 3, 1, 2, 0],
        col_perm: vec![0, 2, 1, 3, 4],
        row_scale: vec![q(1, 1); 5],
        col_scale: vec![q(1, 1); 5],
    };
    let permuted = MatrixFactorization {
        a: perms.apply_a(&first32.a).unwrap(),
        b: perms.apply_b(&first32.b).unwrap(),
        delta: first32.delta.clone(),
        label: None,
    };
    let zero = InvariantPoly::zero(t, 5);
    let scales = [360, 480, 120, 120, 80];
    let t3 = poly(t, 5, "t3");
    let mut q_mat = vec![vec![zero.clone(); 5]; 5];
    let mut q_inv = vec![vec![zero.clone(); 5]; 5];
    for (i, &s) in scales.iter().enumerate() {
        q_mat[i][i] = InvariantPoly::constant(t, 5, q(s, 1));
        q_inv[i][i] = InvariantPoly::constant(t, 5, q(1, s));
    }
    q_mat[0][4] = t3.scale(&q(-40, 1));
    q_inv[0][4] = t3.scale(&q(1, 720));
    let q_mat = InvariantMatrix::from_entries(q_mat).unwrap();
    let q_inv = InvariantMatrix::from_entries(q_inv).unwrap();
    assert_eq!(q_mat.checked_mul(&q_inv).unwrap(), InvariantMatrix::scalar(5, &InvariantPoly::one(t, 5)));
    let changed = column_change(&permuted, &q_mat, &q_inv);
    let relation32 = changed.a == paper32 && verify_mf(&changed).passed();

    let pass = matched41 == total41 && matched32 > 0;
    report(
        lines,
        3,
        pass,
        format!(
            "(4,1): {matched41}/{total41} tableaux match, {scales41}; (3,2): {matched32} match under the contract, \
             printed A = A*Q with Q = diag(360, 480, 120, 120, 80) plus Q[1][5] = -40*t3, pair verifies: {relation32}"
        ),
    );
    assert_eq!(matched41, 4);
    assert_eq!(matched32, 0);
    assert!(relation32);
}

fn join(v: &[Rational]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn criterion_4(lines: &mut Vec<Line>) {
    let e = BasisKind::Elementary;
    let ours = young_subgroup_mf(&[1, 2], &MTableau::parse("1 | 2 3").unwrap()).unwrap();
    let pa = InvariantMatrix::from_text(e, 3, A12).unwrap();
    let pb = InvariantMatrix::from_text(e, 3, B12).unwrap();
    let printed = MatrixFactorization { a: pa.clone(), b: pb.clone(), delta: ours.delta.clone(), label: None };
    let printed_s = printed.to_coords(BasisKind::PowerSum).unwrap();
    let printed_ok = verify_mf(&printed).passed() && verify_mf(&printed_s).passed();
    let matched = reconcile(&ours.a, &pa).map(|r| {
        let a = r.apply_a(&ours.a).unwrap();
        let b = r.apply_b(&ours.b).unwrap();
        (a == pa && b == pb, r)
    });
    let ours_s = verify_mf(&ours.to_coords(BasisKind::PowerSum).unwrap()).passed();
    let (match_ok, detail) = match &matched {
        Some((ok, r)) => (*ok, format!("rows {:?}, cols {:?}, scales {} / {}", r.row_perm, r.col_perm, join(&r.row_scale), join(&r.col_scale))),
        None => (false, "no match".into()),
    };
    report(lines, 4, match_ok && printed_ok && ours_s, format!("A and B match: {match_ok}, {detail}; A*B = delta*I in s-coordinates: {}", printed_ok && ours_s));
}

fn criterion_5(lines: &mut Vec<Line>) {
    let s = BasisKind::PowerSum;
    let e = BasisKind::Elementary;
    let check = saito_discriminant(3).unwrap();
    let printed = poly(s, 3, "3*s2*s1^4 - 7*s1^2*s2^2 + 12*s1*s2*s3 + s2^3 - 6*s3^2 - 1/3*s1^6 - 8/3*s3*s1^3");
    let s4 = poly(s, 3, "1/6*s1^4 - s2*s1^2 + 1/2*s2^2 + 4/3*s3*s1");
    let matrix_ok = check.matrix[0][0] == InvariantPoly::constant(s, 3, q(3, 1))
        && check.matrix[1][1] == poly(s, 3, "s2")
        && check.matrix[2][0] == poly(s, 3, "s2")
        && check.matrix[2][1] == poly(s, 3, "s3");
    let s4_ok = check.matrix[2][2] == s4;
    let exact = check.determinant == printed;
    let ratio = printed.ratio_to(&check.determinant);

    // x^3 + a x^2 + b x + c with a = -e1, b = e2, c = -e3
    let a = poly(e, 3, "-e1");
    let b = poly(e, 3, "e2");
    let c = poly(e, 3, "-e3");
    let m = |x: &InvariantPoly, y: &InvariantPoly| x.checked_mul(y).unwrap();
    let terms = [
        m(&m(&a, &a), &m(&b, &b)),
        m(&m(&b, &b), &b).scale(&q(-4, 1)),
        m(&m(&m(&a, &a), &a), &c).scale(&q(-4, 1)),
        m(&m(&a, &b), &c).scale(&q(18, 1)),
        m(&c, &c).scale(&q(-27, 1)),
    ];
    let classical = terms.iter().skip(1).fold(terms[0].clone(), |acc, t| acc.checked_add(t).unwrap());
    let cubic_ok = discriminant(3, e).unwrap() == classical;

    report(
        lines,
        5,
        matrix_ok && s4_ok && exact && cubic_ok,
        format!(
            "J*J^T matrix: {matrix_ok}, s4 identity: {s4_ok}, printed det reproduced exactly: {exact} (printed / computed = {}), classical cubic: {cubic_ok}",
            ratio.clone().map(|r| r.to_string()).unwrap_or_else(|| "not proportional".into())
        ),
    );
    assert!(matrix_ok && s4_ok && cubic_ok);
    assert!(!exact);
    assert_eq!(ratio, Some(q(2, 1)));
    assert_eq!(check.constant, q(1, 1));
}

fn q_factorial(n: usize) -> Vec<usize> {
    let mut acc = vec![1usize];
    for i in 1..=n {
        let mut next = vec![0; acc.len() + i - 1];
        for (d, c) in acc.iter().enumerate() {
            for k in 0..i {
                next[d + k] += c;
            }
        }
        acc = next;
    }
    acc
}

fn criterion_6(lines: &mut Vec<Line>) {
    let mut pass = true;
    let mut details = Vec::new();
    for n in 1..=5 {
        let fact: usize = (1..=n).product();
        for (name, basis) in [("F", basis_bf(n).unwrap()), ("H", basis_bh(n).unwrap())] {
            let polys: Vec<MultiPoly> = basis.iter().map(|b| b.poly.clone()).collect();
            let rank = coinvariant_rank(&polys);
            let ok = basis.len() == fact && rank == fact && graded_dimensions(&basis) == q_factorial(n);
            pass &= ok;
            if n == 5 {
                details.push(format!("B_{name}(5): {} elements, rank {rank}", basis.len()));
            }
        }
    }
    report(lines, 6, pass, format!("n = 1..5, {}, graded dimensions {:?}", details.join(", "), q_factorial(5)));
}

/// Pairs of same-shape tableaux checked at `n`; all of them for `n <= 4`.
fn tableau_pairs(n: usize, rng: &mut ChaCha8Rng) -> Vec<(Tableau, Tableau)> {
    let mut pairs = Vec::new();
    for lam in partitions(n).unwrap() {
        let st = standard_tableaux(&lam);
        for i in 0..st.len() {
            for j in 0..st.len() {
                pairs.push((st[i].clone(), st[j].clone()));
            }
        }
    }
    if n == 5 {
        pairs.shuffle(rng);
        pairs.truncate(SPOT_CHECKS);
    }
    pairs
}

fn random_homogeneous(n: usize, degree: u32, rng: &mut ChaCha8Rng) -> MultiPoly {
    let mut f = MultiPoly::zero(n);
    for e in weighted_exponents(&vec![1; n], degree) {
        f.add_term(Monomial::new(&e).unwrap(), q(rng.gen_range(-3..=3), 1));
    }
    f
}

fn criterion_7(lines: &mut Vec<Line>) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checks = 0usize;
    let mut failures = Vec::new();
    for n in 2..=5 {
        for (t1, t2) in tableau_pairs(n, &mut rng) {
            let e1 = young_symmetrizer_eps(&t1);
            let s1 = young_symmetrizer_sigma(&t1);
            match ll_compare(&t1, &t2).unwrap() {
                Ordering::Equal => {
                    checks += 2;
                    if e1.product(&e1).unwrap() != e1 || s1.product(&s1).unwrap() != s1 {
                        failures.push(format!("idempotent {t1}"));
                    }
                    let f = random_homogeneous(n, 2, &mut rng);
                    let z = vandermonde(n);
                    checks += 1;
                    let lhs = e1.apply(&z.checked_mul(&f).unwrap()).unwrap();
                    let rhs = z.checked_mul(&young_symmetrizer_sigma(&t1.conjugate()).apply(&f).unwrap()).unwrap();
                    if lhs != rhs {
                        failures.push(format!("z commutation {t1}"));
                    }
                    pairing_checks(&t1, n, &mut rng, &mut checks, &mut failures);
                }
                Ordering::Less => {
                    checks += 2;
                    let e2 = young_symmetrizer_eps(&t2);
                    let s2 = young_symmetrizer_sigma(&t2);
                    if !e1.product(&e2).unwrap().is_zero() || !s2.product(&s1).unwrap().is_zero() {
                        failures.push(format!("orthogonality {t1} {t2}"));
                    }
                }
                Ordering::Greater => {}
            }
        }
    }
    report(lines, 7, failures.is_empty(), format!("{checks} identities, exhaustive for n <= 4, {SPOT_CHECKS} sampled pairs at n = 5 (seed {SEED:#x}), failures: {failures:?}"));
}

/// `<F_T^{S1}, F_{T'}^{S2'}> = 0` for `S1 < S2` in the bilinear order.
fn pairing_checks(t: &Tableau, n: usize, rng: &mut ChaCha8Rng, checks: &mut usize, failures: &mut Vec<String>) {
    let mut st = standard_tableaux(&t.shape());
    st.sort_by(|a, b| bilinear_compare(a, b).unwrap());
    let mut pairs = Vec::new();
    for i in 0..st.len() {
        for j in i + 1..st.len() {
            pairs.push((st[i].clone(), st[j].clone()));
        }
    }
    if n == 5 {
        pairs.shuffle(rng);
        pairs.truncate(2);
    }
    let tm = MTableau::single(t.clone()).unwrap();
    let tc = MTableau::single(t.conjugate()).unwrap();
    for (s1, s2) in pairs {
        *checks += 1;
        let f1 = specht(SpechtKind::F, &tm, &MTableau::single(s1.clone()).unwrap()).unwrap();
        let f2 = specht(SpechtKind::F, &tc, &MTableau::single(s2.conjugate()).unwrap()).unwrap();
        if !bilinear_form(&f1.poly, &f2.poly).unwrap().value.is_zero() {
            failures.push(format!("pairing {t}: {s1} < {s2}"));
        }
    }
}

fn criterion_8(lines: &mut Vec<Line>, n5: &[MatrixFactorization]) {
    let mut off_block = 0;
    for n in 2..=4 {
        off_block += pushforward_matrix(n, PushforwardMode::Full).unwrap().off_block_entries().len();
    }

    let mut sign_pairs = 0;
    let mut sign_failures = 0;
    for n in 3..=5 {
        let blocks = if n == 5 { n5.to_vec() } else { all_blocks(n).unwrap() };
        for (i, m1) in blocks.iter().enumerate() {
            for m2 in &blocks[i + 1..] {
                if with_label(m1).0 != with_label(m2).0 {
                    continue;
                }
                sign_pairs += 1;
                let c = mf_equivalent_up_to_sign(m1, m2);
                if c != Some(q(1, 1)) && c != Some(q(-1, 1)) {
                    sign_failures += 1;
                }
            }
        }
    }

    let mut schemes = 0;
    let mut scheme_failures = 0;
    for n in 2..=4 {
        let cache = ExpansionCache::new(n);
        for lam in partitions(n).unwrap() {
            for t in standard_tableaux(&lam) {
                schemes += 1;
                let (pairing, expansion) = a_both_schemes(&t, &cache).unwrap();
                if pairing != expansion {
                    scheme_failures += 1;
                }
            }
        }
    }

    let pass = off_block == 0 && sign_failures == 0 && scheme_failures == 0;
    report(
        lines,
        8,
        pass,
        format!(
            "off-block pushforward entries for n <= 4: {off_block}; {sign_pairs} same-shape pairs for n <= 5, {sign_failures} not equivalent up to sign; \
             {schemes} tableaux, {scheme_failures} where the two A constructions differ"
        ),
    );
}

#[test]
fn acceptance() {
    let mut lines = Vec::new();
    let n5 = criterion_1(&mut lines);
    criterion_2(&mut lines);
    criterion_3(&mut lines, &n5);
    criterion_4(&mut lines);
    criterion_5(&mut lines);
    criterion_6(&mut lines);
    criterion_7(&mut lines);
    criterion_8(&mut lines, &n5);

    // criteria 3 and 5 fail as stated; their exact deviations are asserted above
    let expected = [true, true, false, true, false, true, true, true];
    for line in &lines {
        assert_eq!(line.pass, expected[line.criterion - 1], "criterion {}: {}", line.criterion, line.detail);
    }
    assert_eq!(lines.len(), 8);
}
