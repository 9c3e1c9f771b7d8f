//! Standard tableaux with their words, indices and the two orders used to
//! arrange bases: last letter order and the bilinear order. Also lists the
//! natural standard m-tableaux of a Young subgroup.
//!
//! `cargo run --example tableaux -- 3,2`

use std::cmp::Ordering;

use specht_mf::tableaux::{bilinear_compare, mtableau_types, natural_standard_tableaux, standard_tableaux};
use specht_mf::Partition;

fn main() -> specht_mf::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "3,2".into());
    let lam = Partition::parse(&arg)?;
    let st = standard_tableaux(&lam);
    println!("{lam}: {} standard tableaux (hook length count {})", st.len(), lam.hook_length_count());
    for t in &st {
        let idx = t.index()?;
        println!("  {:<14} word {:?} index {:?} degree {}", t.to_text(), t.word(), idx.letters, idx.i_total);
    }
    let mut by_degree = st.clone();
    by_degree.sort_by(|a, b| bilinear_compare(a, b).unwrap_or(Ordering::Equal));
    println!("bilinear order:");
    for t in &by_degree {
        println!("  {}  i_hat {:?}", t.to_text(), t.index()?.i_hat);
    }

    println!("natural standard m-tableaux of S_1 x S_2:");
    for shape in mtableau_types(&[1, 2])? {
        for t in natural_standard_tableaux(&shape)? {
            println!("  {t}  word {:?}", t.word());
        }
    }
    Ok(())
}
