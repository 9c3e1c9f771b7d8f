//! One block (A, B) of the factorization of the discriminant for a
//! partition and tableau, computed by the triangular pairing scheme and
//! checked against direct expansion; then the same block in power-sum and
//! sliced coordinates, and the sign equivalence between blocks of one shape.
//!
//! `cargo run --release --example matrix_factorization -- 3,1`

use specht_mf::invariant::ExpansionCache;
use specht_mf::mf::{a_both_schemes, mf_equivalent_up_to_sign, mf_for_partition, verify_mf};
use specht_mf::render::latex_matrix;
use specht_mf::tableaux::standard_tableaux;
use specht_mf::{BasisKind, Partition};

fn main() -> specht_mf::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2,1".into());
    let lam = Partition::parse(&arg)?;
    let n = lam.n();
    let st = standard_tableaux(&lam);
    let t = &st[0];
    let mf = mf_for_partition(n, &lam, t)?;
    println!("lambda = {lam}, T = {}", t.to_text());
    println!("columns: {}", mf.a.col_labels.join(", "));
    println!("rows:    {}", mf.a.row_labels.join(", "));
    print!("A =\n{}B =\n{}", mf.a.to_text(), mf.b.to_text());
    println!("{}", verify_mf(&mf));

    let (pairing, expansion) = a_both_schemes(t, &ExpansionCache::new(n))?;
    println!("pairing scheme equals direct expansion: {}", pairing.entries == expansion.entries);

    let s = mf.to_coords(BasisKind::PowerSum)?;
    println!("power sums: {}", verify_mf(&s));
    if n >= 3 {
        let sliced = mf.to_coords(BasisKind::SlicedT)?;
        println!("sliced: {}\nA = {}", verify_mf(&sliced), latex_matrix(&sliced.a));
    }
    for other in &st[1..] {
        let m = mf_for_partition(n, &lam, other)?;
        match mf_equivalent_up_to_sign(&mf, &m) {
            Some(c) => println!("T = {} is equivalent with c = {c}", other.to_text()),
            None => println!("T = {} is not a scalar multiple", other.to_text()),
        }
    }
    Ok(())
}
