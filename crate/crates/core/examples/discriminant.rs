//! Print the discriminant of S_n in e-, s- and sliced t-coordinates.
//!
//! `cargo run --example discriminant -- 5`

use specht_mf::invariant::discriminant;
use specht_mf::BasisKind;

fn main() -> specht_mf::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    for kind in [BasisKind::Elementary, BasisKind::PowerSum, BasisKind::SlicedT] {
        let d = discriminant(n, kind)?;
        println!("{}: {}", kind.symbol(), d);
    }
    Ok(())
}
