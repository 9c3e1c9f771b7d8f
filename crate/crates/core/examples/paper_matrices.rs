//! Reconcile computed blocks with the matrices printed in the paper's
//! examples: the `(4,1)` and `(3,2)` blocks for `S_5` on the slice `e_1 = 0`,
//! and the `S_1 x S_2 ≤ S_3` block in e-coordinates.
//!
//! `cargo run --release --example paper_matrices`

use std::time::Instant;

use specht_mf::invariant::InvariantMatrix;
use specht_mf::mf::{mf_for_partition, reconcile, verify_mf, young_subgroup_mf, MatrixFactorization};
use specht_mf::tableaux::standard_tableaux;
use specht_mf::{BasisKind, MTableau, Partition};

const A41: &str = include_str!("../tests/data/ex315_a_41.txt");
const A32: &str = include_str!("../tests/data/fig1_a_32.txt");
const A12: &str = include_str!("../tests/data/sec4_a_12.txt");
const B12: &str = include_str!("../tests/data/sec4_b_12.txt");

fn report(name: &str, ours: &MatrixFactorization, paper_a: &InvariantMatrix, paper_b: Option<&InvariantMatrix>) {
    match reconcile(&ours.a, paper_a) {
        None => println!("{name}: no permutation and rescaling matches"),
        Some(r) => {
            let b = r.apply_b(&ours.b).expect("square");
            let moved = MatrixFactorization { a: r.apply_a(&ours.a).expect("square"), b: b.clone(), delta: ours.delta.clone(), label: None };
            println!("{name}: matched; rows {:?} cols {:?}", r.row_perm, r.col_perm);
            println!("  row scales {}", r.row_scale.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", "));
            println!("  col scales {}", r.col_scale.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", "));
            println!("  transformed pair verifies: {}", verify_mf(&moved).passed());
            if let Some(pb) = paper_b {
                println!("  B matches the printed B: {}", b.entries == pb.entries);
            }
        }
    }
}

fn main() -> specht_mf::Result<()> {
    for (shape, text) in [("4,1", A41), ("3,2", A32)] {
        let lam = Partition::parse(shape)?;
        let paper = InvariantMatrix::from_text(BasisKind::SlicedT, 5, text)?;
        for t in standard_tableaux(&lam) {
            let clock = Instant::now();
            let mf = mf_for_partition(5, &lam, &t)?.to_coords(BasisKind::SlicedT)?;
            println!("({shape}) T = {} built in {:.1?}", t.to_text(), clock.elapsed());
            report(&format!("({shape}) T = {}", t.to_text()), &mf, &paper, None);
        }
    }
    let t = MTableau::parse("1 | 2 3")?;
    let mf = young_subgroup_mf(&[1, 2], &t)?;
    let pa = InvariantMatrix::from_text(BasisKind::Elementary, 3, A12)?;
    let pb = InvariantMatrix::from_text(BasisKind::Elementary, 3, B12)?;
    let printed = MatrixFactorization { a: pa.clone(), b: pb.clone(), delta: mf.delta.clone(), label: None };
    println!("printed (A, B) for type (1,2): {}", verify_mf(&printed));
    print!("ours A:\n{}ours B:\n{}", mf.a.to_text(), mf.b.to_text());
    report("type (1,2)", &mf, &pa, Some(&pb));
    Ok(())
}
