//! Higher Specht polynomials F and modified polynomials H for n = 3, and a
//! check that both families are bases of the coinvariant algebra with the
//! q-factorial as graded dimension series.

use specht_mf::specht::{basis_bf, basis_bh, coinvariant_rank, graded_dimensions};

fn main() -> specht_mf::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let bf = basis_bf(n)?;
    let bh = basis_bh(n)?;
    if n <= 3 {
        for (f, h) in bf.iter().zip(&bh) {
            println!("{}", f.index.label());
            println!("  F = {}", f.poly);
            println!("  H = {}", h.poly);
        }
    }
    for (name, b) in [("B_F", &bf), ("B_H", &bh)] {
        let polys: Vec<_> = b.iter().map(|e| e.poly.clone()).collect();
        println!("{name}: {} elements, rank mod (e_1..e_n) = {}, graded dims {:?}", b.len(), coinvariant_rank(&polys), graded_dimensions(b));
    }
    Ok(())
}
