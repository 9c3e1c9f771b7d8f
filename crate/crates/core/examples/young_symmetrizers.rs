//! Young symmetrizers in the rational group algebra of S_n: idempotence,
//! orthogonality along last letter order, and the column antisymmetrizer
//! sending a monomial to a multiple of the Vandermonde.

use specht_mf::groupalg::{young_symmetrizer_eps, young_symmetrizer_sigma};
use specht_mf::poly::MultiPoly;
use specht_mf::tableaux::standard_tableaux;
use specht_mf::{Partition, Tableau};

fn main() -> specht_mf::Result<()> {
    let lam = Partition::parse("3,1")?;
    let st = standard_tableaux(&lam);
    for t in &st {
        let eps = young_symmetrizer_eps(t);
        let sigma = young_symmetrizer_sigma(t);
        println!(
            "T = {:<8} eps^2 = eps: {}  sigma^2 = sigma: {}  terms {}",
            t.to_text(),
            eps.product(&eps)? == eps,
            sigma.product(&sigma)? == sigma,
            eps.len()
        );
    }
    for (i, t1) in st.iter().enumerate() {
        for t2 in &st[i + 1..] {
            let zero = young_symmetrizer_eps(t1).product(&young_symmetrizer_eps(t2))?;
            println!("eps[{}] eps[{}] = 0: {}", t1.to_text(), t2.to_text(), zero.is_empty());
        }
    }
    let column = Tableau::column(3);
    let mono = MultiPoly::parse("x2*x3^2", 3)?;
    println!("eps(1/2/3) . x2*x3^2 = {}", young_symmetrizer_eps(&column).apply(&mono)?);
    Ok(())
}
