//! Exact polynomial arithmetic and the fundamental theorem of symmetric
//! polynomials: reduce a symmetric polynomial to elementary and power-sum
//! invariants, and convert between the two.

use specht_mf::poly::{permute, vandermonde, MultiPoly};
use specht_mf::symmetric::{is_symmetric, symmetric_reduce};
use specht_mf::{BasisKind, Permutation};

fn main() -> specht_mf::Result<()> {
    let f = MultiPoly::parse("x1^3 + x2^3 + x3^3 - 3*x1*x2*x3", 3)?;
    println!("f = {f}");
    println!("symmetric: {}", is_symmetric(&f));
    let e = symmetric_reduce(&f, BasisKind::Elementary)?;
    let s = symmetric_reduce(&f, BasisKind::PowerSum)?;
    println!("in e: {e}");
    println!("in s: {s}");
    println!("e -> s agrees: {}", e.convert(BasisKind::PowerSum)? == s);
    println!("expands back: {}", e.expand()? == f);

    let z = vandermonde(3);
    let swap = Permutation::transposition(3, 0, 1);
    println!("z = {z}");
    println!("(1 2).z = {}", permute(&z, &swap)?);
    println!("z^2 = {}", symmetric_reduce(&z.pow(2)?, BasisKind::Elementary)?);
    Ok(())
}
