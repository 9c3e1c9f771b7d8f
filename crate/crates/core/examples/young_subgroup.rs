//! The block of the factorization attached to an irreducible representation
//! of a Young subgroup, here S_1 x S_2 inside S_3 with T = (1 | 2 3).

use specht_mf::mf::{verify_mf, young_subgroup_mf};
use specht_mf::specht::{coinvariant_rank, young_subgroup_basis};
use specht_mf::{BasisKind, MTableau};

fn main() -> specht_mf::Result<()> {
    let t = MTableau::parse("1 | 2 3")?;
    let mf = young_subgroup_mf(&[1, 2], &t)?;
    println!("T = {t}");
    print!("A =\n{}B =\n{}", mf.a.to_text(), mf.b.to_text());
    println!("{}", verify_mf(&mf));
    let s = mf.to_coords(BasisKind::PowerSum)?;
    print!("in power sums, A =\n{}", s.a.to_text());
    println!("{}", verify_mf(&s));

    let basis = young_subgroup_basis(&[1, 2])?;
    let polys: Vec<_> = basis.iter().map(|e| e.poly.clone()).collect();
    println!("basis for type (1,2): {} elements, rank {}", basis.len(), coinvariant_rank(&polys));
    Ok(())
}
