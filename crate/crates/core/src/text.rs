//! Canonical text form of polynomials: `-1/3600*t1^3*t2^2*t3^2 + 1/900*t1^4*t3^3`.
//!
//! Terms are written in the order given by the caller, unit coefficients are
//! omitted except on the constant term, and the zero polynomial prints as `0`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Rational;

pub fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad number `{t}`")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(Rational::new(parse_int(n)?, d))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

fn render_monomial<F: Fn(usize) -> String>(exps: &[u32], name: &F) -> String {
    exps.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { name(i) } else { format!("{}^{}", name(i), e) })
        .collect::<Vec<_>>()
        .join("*")
}

pub fn render_terms<F: Fn(usize) -> String>(terms: &[(Vec<u32>, Rational)], name: &F) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (exps, c)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mono = render_monomial(exps, name);
        if mono.is_empty() {
            out.push_str(&format_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format_rational(&abs));
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

/// `indexed_name("x3", "x") == Some(2)`.
pub fn indexed_name(name: &str, prefix: &str) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    let idx: usize = rest.parse().ok()?;
    idx.checked_sub(1)
}

/// Parse a flat sum of terms. No parentheses; `*` separates factors.
pub fn parse_terms<F: Fn(&str) -> Option<usize>>(
    input: &str,
    nvars: usize,
    var_index: &F,
) -> Result<Vec<(Vec<u32>, Rational)>> {
    let cleaned: String = input.replace('\u{2212}', "-").split_whitespace().collect();
    if cleaned.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    let mut prev: Option<char> = None;
    for ch in cleaned.chars() {
        // a sign directly after `^` or `/` belongs to the number, not a new term
        let binary = matches!(ch, '+' | '-') && !matches!(prev, Some('^') | Some('/') | Some('*'));
        if binary {
            if !current.is_empty() {
                pieces.push((negative, std::mem::take(&mut current)));
            } else if prev.is_some() && ch == '-' {
                negative = !negative;
                prev = Some(ch);
                continue;
            }
            negative = ch == '-';
        } else {
            current.push(ch);
        }
        prev = Some(ch);
    }
    if current.is_empty() {
        return Err(Error::Parse("dangling operator".into()));
    }
    pieces.push((negative, current));

    let mut terms = Vec::with_capacity(pieces.len());
    for (neg, body) in pieces {
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; nvars];
        for factor in body.split('*') {
            if factor.is_empty() {
                return Err(Error::Parse(format!("empty factor in `{body}`")));
            }
            if factor.starts_with(|c: char| c.is_ascii_digit()) {
                coeff *= parse_rational(factor)?;
                continue;
            }
            let (name, power) = match factor.split_once('^') {
                Some((v, p)) => (
                    v,
                    p.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor, 1),
            };
            let idx = var_index(name)
                .filter(|&i| i < nvars)
                .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
            exps[idx] += power;
        }
        if neg {
            coeff = -coeff;
        }
        terms.push((exps, coeff));
    }
    Ok(terms)
}
