//! LaTeX rendering of invariants and matrices, in the `pmatrix` style.

use num_traits::{One, Signed};

use crate::invariant::InvariantMatrix;
use crate::poly::Rational;
use crate::symmetric::InvariantPoly;
use crate::tableaux::{MTableau, Tableau};

fn latex_coefficient(c: &Rational, first: bool, bare: bool) -> String {
    let sign = if c.is_negative() {
        "-"
    } else if first {
        ""
    } else {
        "+"
    };
    let a = c.abs();
    let body = if bare && a.is_one() {
        String::new()
    } else if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
    };
    format!("{sign}{body}")
}

pub fn latex_poly(p: &InvariantPoly) -> String {
    let terms = p.terms();
    if terms.is_empty() {
        return "0".into();
    }
    let symbol = p.kind().symbol();
    let mut out = String::new();
    for (k, (exps, c)) in terms.iter().enumerate() {
        let mut mono = String::new();
        for (i, &e) in exps.iter().enumerate() {
            match e {
                0 => {}
                1 => mono.push_str(&format!("{symbol}_{{{}}}", i + 1)),
                _ => mono.push_str(&format!("{symbol}_{{{}}}^{{{e}}}", i + 1)),
            }
        }
        out.push_str(&latex_coefficient(c, k == 0, !mono.is_empty()));
        out.push_str(&mono);
    }
    out
}

pub fn latex_matrix(m: &InvariantMatrix) -> String {
    let rows: Vec<String> = m.entries.iter().map(|r| r.iter().map(latex_poly).collect::<Vec<_>>().join(" & ")).collect();
    format!("\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}", rows.join(" \\\\\n"))
}

pub fn latex_tableau(t: &Tableau) -> String {
    if t.is_empty() {
        return "\\varnothing".into();
    }
    let rows: Vec<String> = t.rows().iter().map(|r| r.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" & ")).collect();
    format!("\\begin{{ytableau}} {} \\end{{ytableau}}", rows.join(" \\\\ "))
}

pub fn latex_mtableau(t: &MTableau) -> String {
    let parts: Vec<String> = t.components().iter().map(latex_tableau).collect();
    if parts.len() == 1 {
        parts.into_iter().next().unwrap_or_default()
    } else {
        format!("\\left({}\\right)", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetric::BasisKind;

    #[test]
    fn polynomial_and_matrix() {
        let p = InvariantPoly::parse(BasisKind::Elementary, 3, "-1/2*e1^2*e2 + 2*e2^2 - e3").unwrap();
        assert_eq!(latex_poly(&p), "-\\frac{1}{2}e_{1}^{2}e_{2}+2e_{2}^{2}-e_{3}");
        let c = InvariantPoly::parse(BasisKind::SlicedT, 5, "-6").unwrap();
        assert_eq!(latex_poly(&c), "-6");
        let m = InvariantMatrix::parse(BasisKind::Elementary, 2, &[vec!["e1".into(), "0".into()]]).unwrap();
        assert_eq!(latex_matrix(&m), "\\begin{pmatrix}\ne_{1} & 0\n\\end{pmatrix}");
    }

    #[test]
    fn tableaux() {
        let t = MTableau::parse("1 | 2 3").unwrap();
        assert_eq!(
            latex_mtableau(&t),
            "\\left(\\begin{ytableau} 1 \\end{ytableau}, \\begin{ytableau} 2 & 3 \\end{ytableau}\\right)"
        );
    }
}
