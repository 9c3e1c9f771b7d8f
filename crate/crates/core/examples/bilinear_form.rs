//! The R-valued bilinear form <f, g> (antisymmetrize fg, divide by z), its
//! vanishing pattern on higher Specht polynomials, and expansion of a
//! polynomial over a module basis with invariant coefficients.

use specht_mf::invariant::{bilinear_form, express_in_basis, pairing_with_vandermonde};
use specht_mf::poly::{vandermonde, MultiPoly};
use specht_mf::specht::{degree_indices, generators_for, SpechtKind};
use specht_mf::MTableau;

fn main() -> specht_mf::Result<()> {
    let t = MTableau::parse("1 2/3")?;
    let indices = degree_indices(&t)?;
    let conj: Vec<MTableau> = indices.iter().map(MTableau::conjugate).collect();
    let f = generators_for(SpechtKind::F, &t, &indices)?;
    let f_conj = generators_for(SpechtKind::F, &t.conjugate(), &conj)?;
    println!("<F_T^S_j, F_T'^S_k'> for S in bilinear order:");
    for (k, g) in f_conj.iter().enumerate() {
        let row: Vec<String> =
            f.iter().map(|fj| bilinear_form(&fj.poly, &g.poly).map(|v| v.value.to_string())).collect::<Result<_, _>>()?;
        println!("  k = {}: {}", k + 1, row.join("  "));
    }
    println!("<1, z> = {}", pairing_with_vandermonde(&MultiPoly::one(3), &MultiPoly::one(3))?.value);

    let h = generators_for(SpechtKind::H, &t, &indices)?;
    let basis: Vec<_> = f_conj.iter().map(|e| e.poly.clone()).collect();
    for (i, hi) in h.iter().enumerate() {
        let coeffs = express_in_basis(&vandermonde(3).checked_mul(&hi.poly)?, &basis)?;
        let text: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
        println!("z*H_{} = [{}] over the F_T' generators", i + 1, text.join(", "));
    }
    Ok(())
}
