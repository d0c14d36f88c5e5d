//! Text renderings of polynomials, strata and results: a compact
//! bracketed form for golden files and a JSON schema.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::{NumericalPolynomial, Staircase};
use crate::hs_strat::{HsStratification, HsStratum};
use crate::param_poly::ParamPolynomial;
use crate::param_ring::ParamIdeal;
use crate::poly::{format_polynomial, parse_polynomial_list, Exponent, OrderRef, Polynomial};
use crate::stratify::{h_factors, StratificationResult, Stratum};

/// Renders an element of ℚ[y][x] as a single expression over x and y.
pub fn format_param(p: &ParamPolynomial, xnames: &[String], ynames: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (e, c)) in p.terms().iter().enumerate() {
        let mono = format_polynomial(&Polynomial::monomial(p.x_order(), num_traits::One::one(), e.clone()), xnames);
        let cs = format_polynomial(c, ynames);
        let piece = if e.is_zero() {
            if c.len() > 1 { format!("({cs})") } else { cs }
        } else if c.is_one() {
            mono
        } else if c.len() == 1 {
            if cs == "-1" { format!("-{mono}") } else { format!("{cs}*{mono}") }
        } else {
            format!("({cs})*{mono}")
        };
        if k > 0 && !piece.starts_with('-') {
            out.push('+');
        }
        out.push_str(&piece);
    }
    out
}

fn exps(st: &Staircase) -> String {
    if st.generators().is_empty() {
        return String::new();
    }
    st.generators()
        .iter()
        .map(|e| format!("(1)*<<{}>>", e.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(",")
}

fn poly_list(ps: &[Polynomial], names: &[String], empty: &str) -> String {
    if ps.is_empty() {
        return empty.to_string();
    }
    ps.iter().map(|p| format_polynomial(p, names)).collect::<Vec<_>>().join(",")
}

fn product(ps: &[Polynomial], names: &[String]) -> String {
    match ps {
        [] => "1".to_string(),
        [p] => format_polynomial(p, names),
        _ => ps.iter().map(|p| format!("({})", format_polynomial(p, names))).collect::<Vec<_>>().join("*"),
    }
}

/// One stratum as `[[exps],[Q],[H]]`, parameters printed with `ynames`.
pub fn stratum_line(s: &Stratum, ynames: &[String]) -> String {
    format!(
        "[[{}],[{}],[{}]]",
        exps(&s.staircase),
        poly_list(&s.q.canonical_generators(), ynames, "0"),
        poly_list(&s.h_factors, ynames, "1")
    )
}

/// All strata, one line each, wrapped in an outer list.
pub fn stratification_text(r: &StratificationResult, ynames: &[String]) -> String {
    let lines: Vec<String> = r.strata.iter().map(|s| stratum_line(s, ynames)).collect();
    format!("[{}]\n", lines.join(",\n"))
}

#[derive(Serialize)]
pub struct StratumJson {
    pub staircase_generators: Vec<Vec<u32>>,
    #[serde(rename = "Q_generators")]
    pub q_generators: Vec<String>,
    pub h_factors: Vec<String>,
    pub basis: Vec<String>,
}

#[derive(Serialize)]
pub struct StratificationJson {
    pub strata: Vec<StratumJson>,
    pub vanishing_ideal: Vec<String>,
}

#[derive(Serialize)]
pub struct RegionJson {
    #[serde(rename = "Q_generators")]
    pub q_generators: Vec<String>,
    pub h_factors: Vec<String>,
    pub staircase_generators: Vec<Vec<u32>>,
}

#[derive(Serialize)]
pub struct HsStratumJson {
    pub regions: Vec<RegionJson>,
    pub staircase_generators: Vec<Vec<u32>>,
    pub hs_values: Vec<u64>,
    pub hs_polynomial: NumericalPolynomial,
}

#[derive(Serialize)]
pub struct HsStratificationJson {
    pub strata: Vec<HsStratumJson>,
    pub text: String,
}

fn gens_of(st: &Staircase) -> Vec<Vec<u32>> {
    st.generators().iter().map(|e| e.as_slice().to_vec()).collect()
}

fn strings(ps: &[Polynomial], names: &[String]) -> Vec<String> {
    ps.iter().map(|p| format_polynomial(p, names)).collect()
}

pub fn stratum_json(s: &Stratum, xnames: &[String], ynames: &[String]) -> StratumJson {
    StratumJson {
        staircase_generators: gens_of(&s.staircase),
        q_generators: strings(&s.q.canonical_generators(), ynames),
        h_factors: strings(&s.h_factors, ynames),
        basis: s.basis.iter().map(|g| format_param(g, xnames, ynames)).collect(),
    }
}

pub fn stratification_json(r: &StratificationResult, xnames: &[String], ynames: &[String]) -> StratificationJson {
    StratificationJson {
        strata: r.strata.iter().map(|s| stratum_json(s, xnames, ynames)).collect(),
        vanishing_ideal: strings(&r.vanishing_ideal.canonical_generators(), ynames),
    }
}

fn hs_stratum_json(s: &HsStratum, ynames: &[String]) -> HsStratumJson {
    HsStratumJson {
        regions: s
            .regions
            .iter()
            .map(|r| RegionJson {
                q_generators: strings(&r.q.canonical_generators(), ynames),
                h_factors: strings(&r.h_factors, ynames),
                staircase_generators: gens_of(&r.staircase),
            })
            .collect(),
        staircase_generators: gens_of(&s.staircase),
        hs_values: s.hs_values.clone(),
        hs_polynomial: s.hs_polynomial.clone(),
    }
}

/// JSON form of a Hilbert-Samuel stratification; parameters are printed
/// with the x names since they are points of the same affine space.
pub fn hs_json(r: &HsStratification, xnames: &[String]) -> HsStratificationJson {
    HsStratificationJson {
        strata: r.strata.iter().map(|s| hs_stratum_json(s, xnames)).collect(),
        text: stratification_text(&r.stratification, xnames),
    }
}

/// Human-readable report of a Hilbert-Samuel stratification.
pub fn hs_text(r: &HsStratification, xnames: &[String]) -> String {
    let mut out = stratification_text(&r.stratification, xnames);
    for (k, s) in r.strata.iter().enumerate() {
        out.push_str(&format!("\nstratum {}: staircase {:?}\n", k + 1, s.staircase));
        for reg in &s.regions {
            out.push_str(&format!(
                "  V({}) \\ V({})\n",
                poly_list(&reg.q.canonical_generators(), xnames, "0"),
                product(&reg.h_factors, xnames)
            ));
        }
        let vals: Vec<String> = s.hs_values.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("  HSf(0..{}) = {}\n", s.hs_values.len().saturating_sub(1), vals.join(" ")));
        out.push_str(&format!("  HSp(r) = {} for r >= {}\n", s.hs_polynomial, s.hs_polynomial.stability_threshold));
    }
    out
}

/// A stratum line read back from text: staircase, ideal Q and the
/// canonical factors of the printed H.
#[derive(Clone, Debug)]
pub struct GoldenStratum {
    pub staircase: Staircase,
    pub q: ParamIdeal,
    pub h_factors: Vec<Polynomial>,
}

fn bracket_groups(s: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0usize);
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => {
                if depth == 0 {
                    start = i + 1;
                }
                depth += 1;
            }
            ']' => {
                depth -= 1;
                if depth == 0 {
                    out.push(&s[start..i]);
                }
                if depth < 0 {
                    return Err(Error::Parse { pos: i, msg: "unbalanced `]`".into() });
                }
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse { pos: s.len(), msg: "unbalanced `[`".into() });
    }
    Ok(out)
}

fn parse_exps(s: &str, n: usize) -> Result<Staircase> {
    let mut gens = Vec::new();
    let mut rest = s;
    while let Some(i) = rest.find("<<") {
        let j = rest[i..].find(">>").ok_or(Error::Parse { pos: i, msg: "unterminated `<<`".into() })? + i;
        let e: Vec<u32> = rest[i + 2..j]
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse { pos: i, msg: format!("bad exponent `{t}`") }))
            .collect::<Result<_>>()?;
        if e.len() != n {
            return Err(Error::Dimension { expected: n, found: e.len() });
        }
        gens.push(Exponent::from(e));
        rest = &rest[j + 2..];
    }
    Ok(Staircase::new(n, gens))
}

/// Parses text in the `[[[exps],[Q],[H]], …]` shape. Exponents have
/// `nvars_x` entries; Q and H are read with `names` under `y_order`.
pub fn parse_golden(src: &str, nvars_x: usize, names: &[String], y_order: &OrderRef) -> Result<Vec<GoldenStratum>> {
    let body: String = src.lines().map(|l| l.trim()).collect::<Vec<_>>().join("");
    let outer = bracket_groups(body.trim().trim_end_matches('.'))?;
    let inner = match outer.as_slice() {
        [one] => bracket_groups(one)?,
        _ => return Err(Error::Parse { pos: 0, msg: "expected one outer list".into() }),
    };
    let mut out = Vec::new();
    for line in inner {
        let parts = bracket_groups(line)?;
        let [e, q, h] = parts.as_slice() else {
            return Err(Error::Parse { pos: 0, msg: format!("expected three groups in `{line}`") });
        };
        let staircase = parse_exps(e, nvars_x)?;
        let q = ParamIdeal::new(y_order, parse_polynomial_list(q, names, y_order)?)?;
        let h = parse_polynomial_list(h, names, y_order)?;
        let h_factors = h_factors(&h, &ParamIdeal::zero(y_order));
        out.push(GoldenStratum { staircase, q, h_factors });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{default_names, MonomialOrder};

    #[test]
    fn golden_roundtrip() {
        let src = "[[[(1)*<<0,0>>],[0],[x1^2+x2^3]],\n[[(1)*<<0,1>>,(1)*<<0,1>>],[x1^2+x2^3],[x2,x1]],\n[[(1)*<<2,0>>],[x2,x1],[1]]]";
        let yo = MonomialOrder::deglex(2).into_ref();
        let g = parse_golden(src, 2, &default_names("x", 2), &yo).unwrap();
        assert_eq!(g.len(), 3);
        assert!(g[0].q.is_zero_ideal());
        assert_eq!(g[1].staircase.generators().len(), 1);
        assert_eq!(g[1].h_factors.len(), 2);
        assert!(g[2].h_factors.is_empty());
        assert!(parse_golden("[[[(1)*<<0>>],[0]]]", 1, &default_names("x", 1), &MonomialOrder::deglex(1).into_ref()).is_err());
    }
}
