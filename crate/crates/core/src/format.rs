//! Text formats for functions, supports and permutations.
//!
//! Functions are written either as `anf:<terms>` (optionally `anf:<n>:<terms>`
//! to fix the variable count; otherwise it is the largest index used) or as
//! `tt:<n>:<hex>`. Supports are line-oriented: a header `n s`, an optional
//! `v=<bits> M=<bits>` decomposition line, then one binary point per line.

use crate::bits::{check_vars, BinaryMatrix, BitVector};
use crate::boolfn::{AnfPolynomial, BooleanFunction};
use crate::error::{Error, Result};
use crate::spectral::WalshSupport;

fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

/// Parses an `anf:` or `tt:` function specification.
pub fn parse_function(spec: &str) -> Result<BooleanFunction> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("tt:") {
        let (n, hex) = rest.split_once(':').ok_or_else(|| parse_err(3, "expected tt:<n>:<hex>"))?;
        let n: usize = n.parse().map_err(|_| parse_err(3, format!("bad variable count {n:?}")))?;
        check_vars(n)?;
        BooleanFunction::from_hex(n, hex).map_err(|e| match e {
            Error::Parse { pos, msg } => parse_err(pos + 4 + rest.find(':').unwrap_or(0), msg),
            e => e,
        })
    } else if let Some(rest) = spec.strip_prefix("anf:") {
        Ok(parse_anf(rest, 4)?.to_truth_table())
    } else {
        Err(parse_err(0, "expected `anf:` or `tt:` prefix"))
    }
}

fn parse_anf(body: &str, offset: usize) -> Result<AnfPolynomial> {
    let (explicit_n, body, offset) = match body.split_once(':') {
        Some((n, rest)) => {
            let n: usize = n.trim().parse().map_err(|_| parse_err(offset, format!("bad variable count {n:?}")))?;
            check_vars(n)?;
            (Some(n), rest, offset + body.find(':').unwrap() + 1)
        }
        None => (None, body, offset),
    };

    // Each term is a list of variable indices; `1` contributes nothing.
    let mut terms: Vec<Vec<usize>> = Vec::new();
    let mut pos = offset;
    for term in body.split('+') {
        let mut vars = Vec::new();
        let mut zero = false;
        let mut fpos = pos;
        for factor in term.split('*') {
            let f = factor.trim();
            match f {
                "1" => {}
                "0" => zero = true,
                _ => {
                    let idx = f
                        .strip_prefix('x')
                        .and_then(|d| d.parse::<usize>().ok())
                        .filter(|&i| i >= 1)
                        .ok_or_else(|| parse_err(fpos, format!("bad factor {f:?}")))?;
                    vars.push(idx);
                }
            }
            fpos += factor.len() + 1;
        }
        if !zero {
            vars.sort_unstable();
            vars.dedup();
            terms.push(vars);
        }
        pos += term.len() + 1;
    }

    let max_var = terms.iter().flatten().copied().max().unwrap_or(1);
    let n = match explicit_n {
        Some(n) if max_var > n => return Err(parse_err(offset, format!("x{max_var} exceeds n = {n}"))),
        Some(n) => n,
        None => max_var,
    };
    check_vars(n)?;
    let refs: Vec<&[usize]> = terms.iter().map(|t| t.as_slice()).collect();
    AnfPolynomial::from_terms(n, &refs)
}

/// `anf:<n>:<terms>`, always carrying the variable count so it re-parses
/// to the same table.
pub fn format_anf(f: &BooleanFunction) -> String {
    format!("anf:{}:{}", f.num_vars(), f.to_anf())
}

pub fn format_tt(f: &BooleanFunction) -> String {
    format!("tt:{}:{}", f.num_vars(), f.to_hex())
}

/// Parses a support file. Without a decomposition line the points keep the
/// listed order; with one they are ordered as `v + e_i M`.
pub fn parse_support(text: &str) -> Result<WalshSupport> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| parse_err(0, "empty support file"))?;
    let mut parts = header.split_whitespace();
    let mut num = |what: &str| -> Result<usize> {
        parts
            .next()
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| parse_err(0, format!("header must be `n s`, missing {what}")))
    };
    let n = num("n")?;
    let s = num("s")?;
    check_vars(n)?;
    if s > n {
        return Err(parse_err(0, format!("s = {s} exceeds n = {n}")));
    }

    let mut decomposition = None;
    let mut points = Vec::new();
    for (lineno, line) in lines.enumerate() {
        if line.starts_with("v=") {
            let mut v = None;
            let mut m = None;
            for field in line.split_whitespace() {
                if let Some(bits) = field.strip_prefix("v=") {
                    v = Some(bits.parse::<BitVector>()?);
                } else if let Some(bits) = field.strip_prefix("M=") {
                    m = Some(BinaryMatrix::from_row_major(bits, n, n)?);
                } else {
                    return Err(parse_err(lineno + 1, format!("unknown field {field:?}")));
                }
            }
            let v = v.ok_or_else(|| parse_err(lineno + 1, "missing v="))?;
            decomposition = Some((v, m.unwrap_or_else(|| BinaryMatrix::identity(n))));
            continue;
        }
        let p: BitVector = line.parse().map_err(|_| parse_err(lineno + 1, format!("bad point {line:?}")))?;
        if p.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: p.len() });
        }
        points.push(p);
    }
    if points.len() != 1 << (n - s) {
        return Err(Error::DimensionMismatch { expected: 1 << (n - s), found: points.len() });
    }
    match decomposition {
        Some((v, m)) => WalshSupport::ordered(n, &points, &v, &m),
        None => WalshSupport::from_points(n, points),
    }
}

pub fn format_support(support: &WalshSupport) -> String {
    let mut out = format!("{} {}\n", support.num_vars(), support.num_vars() - support.dim());
    if let Some(d) = support.decomposition() {
        out.push_str(&format!("v={} M={}\n", d.offset, d.matrix.to_row_major()));
    }
    for p in support.points() {
        out.push_str(&format!("{p}\n"));
    }
    out
}

/// Permutation file: `2^k` lines, line `i` is the image index of `i`.
pub fn parse_permutation(text: &str) -> Result<Vec<u32>> {
    let images = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .enumerate()
        .map(|(i, l)| l.parse::<u32>().map_err(|_| parse_err(i, format!("bad image {l:?}"))))
        .collect::<Result<Vec<_>>>()?;
    if !images.len().is_power_of_two() {
        return Err(parse_err(0, format!("{} lines is not a power of two", images.len())));
    }
    Ok(images)
}
