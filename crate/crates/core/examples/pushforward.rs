//! The full matrix of multiplication by z from the basis B_H to B_F, its
//! anti-diagonal block layout, and the partner matrix from B_F back to B_H
//! whose paired blocks multiply to the discriminant.
//!
//! `cargo run --release --example pushforward -- 4`

use specht_mf::invariant::discriminant;
use specht_mf::mf::{pushforward_matrix, pushforward_partner, PushforwardMode};
use specht_mf::BasisKind;

fn main() -> specht_mf::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let forward = pushforward_matrix(n, PushforwardMode::Full)?;
    let back = pushforward_partner(n, PushforwardMode::Full)?;
    let delta = discriminant(n, BasisKind::Elementary)?;
    println!("n = {n}: {0}x{0}", forward.full.rows());
    for (lam, range) in &forward.block_index {
        let paired = forward.paired_block_product(&back, lam)?;
        println!(
            "{lam}: columns {}..{} map into {}; paired product is delta*I: {}",
            range.start + 1,
            range.end,
            lam.conjugate(),
            paired.scalar_defects(&delta).is_empty()
        );
    }
    println!("nonzero entries outside the anti-diagonal blocks: {}", forward.off_block_entries().len());
    if n <= 3 {
        print!("{}", forward.full.to_text());
    }
    Ok(())
}
