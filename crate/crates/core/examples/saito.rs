//! The Saito matrix J J^T of the power sums, with entries s_{i+j}, and its
//! determinant compared with the discriminant.

use specht_mf::invariant::{discriminant, saito_discriminant};
use specht_mf::BasisKind;

fn main() -> specht_mf::Result<()> {
    for n in 2..=4 {
        let check = saito_discriminant(n)?;
        println!("n = {n}");
        for row in &check.matrix {
            println!("  [{}]", row.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
        }
        println!("  det = {}", check.determinant);
        println!("  delta = {}", discriminant(n, BasisKind::PowerSum)?);
        println!("  det / delta = {}", check.constant);
    }
    Ok(())
}
