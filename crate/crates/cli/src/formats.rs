//! Canonical on-disk formats and flag-value parsing.  Serialization is
//! deterministic: struct field order is fixed and collections are kept
//! sorted by the core types, so identical objects produce identical
//! bytes.

use std::fs;
use std::path::Path;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use rfano_core::coloring::{Coloring, Pattern};
use rfano_core::hypergraph::Bipartition;
use rfano_core::regularity::EquitablePartition;
use rfano_core::Hypergraph3;

use crate::error::{CliError, CliResult};

/// {"n": …, "edges": [[a,b,c], …]} with ascending triples
#[derive(Serialize, Deserialize)]
pub struct HypergraphFile {
    pub n: u16,
    pub edges: Vec<[u16; 3]>,
}

/// {"r": …, "colors": [per-edge color in canonical edge order]}
#[derive(Serialize, Deserialize)]
pub struct ColoringFile {
    pub r: u32,
    pub colors: Vec<u32>,
}

/// {"classes": [[edge indices 0..6], …]} over the canonical labeling
#[derive(Serialize, Deserialize)]
pub struct PatternFile {
    pub classes: Vec<Vec<u8>>,
}

/// {"classes": [[v, …], …]}
#[derive(Serialize, Deserialize)]
pub struct PartitionFile {
    pub classes: Vec<Vec<u16>>,
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::BadInput(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        let full = e.to_string();
        let msg = full.split(" at line ").next().unwrap_or(&full);
        CliError::BadInput(format!(
            "{}: parse error at line {} column {}: {msg}",
            path.display(),
            e.line(),
            e.column()
        ))
    })
}

pub fn write_text(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::BadInput(format!("{}: {e}", path.display())))
}

pub fn load_hypergraph(path: &Path) -> CliResult<Hypergraph3> {
    let file: HypergraphFile = read_json(path)?;
    let triples = file.edges.iter().map(|&[a, b, c]| (a, b, c));
    Hypergraph3::from_triples(file.n, triples).map_err(|e| {
        CliError::BadInput(format!("{}: {e}", path.display()))
    })
}

pub fn hypergraph_json(h: &Hypergraph3) -> String {
    let file = HypergraphFile {
        n: h.n(),
        edges: h.triples().map(|(a, b, c)| [a, b, c]).collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("serializable");
    s.push('\n');
    s
}

pub fn load_coloring(path: &Path, h: &Hypergraph3) -> CliResult<Coloring> {
    let file: ColoringFile = read_json(path)?;
    Coloring::new(h, file.colors, file.r)
        .map_err(|e| CliError::BadInput(format!("{}: {e}", path.display())))
}

/// "rainbow" or a path to a pattern file
pub fn load_pattern(spec: &str) -> CliResult<Pattern> {
    if spec == "rainbow" {
        return Ok(Pattern::rainbow());
    }
    let file: PatternFile = read_json(Path::new(spec))?;
    Pattern::new(file.classes).map_err(|e| CliError::BadInput(format!("{spec}: {e}")))
}

pub fn load_equitable_partition(path: &Path, n: u16) -> CliResult<EquitablePartition> {
    let file: PartitionFile = read_json(path)?;
    EquitablePartition::new(n, file.classes)
        .map_err(|e| CliError::BadInput(format!("{}: {e}", path.display())))
}

/// A two-class partition file interpreted as a bipartition.
pub fn load_bipartition(path: &Path, n: u16) -> CliResult<Bipartition> {
    let file: PartitionFile = read_json(path)?;
    if file.classes.len() != 2 {
        return Err(CliError::BadInput(format!(
            "{}: bipartition needs exactly 2 classes, got {}",
            path.display(),
            file.classes.len()
        )));
    }
    let mut classes = file.classes;
    let part_b = classes.pop().unwrap();
    let part_a = classes.pop().unwrap();
    let covered = part_a.len() + part_b.len();
    if covered != n as usize {
        return Err(CliError::BadInput(format!(
            "{}: classes cover {covered} vertices, host has {n}",
            path.display()
        )));
    }
    Bipartition::from_parts(part_a, part_b)
        .map_err(|e| CliError::BadInput(format!("{}: {e}", path.display())))
}

/// "p/q", an integer, or a decimal such as 0.001 or 1e-3; must be > 0
pub fn parse_big_rational(s: &str) -> CliResult<BigRational> {
    let err = || CliError::BadInput(format!("cannot parse '{s}' as a positive rational"));
    let v = if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| err())?;
        let q: BigInt = q.trim().parse().map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        BigRational::new(p, q)
    } else {
        parse_decimal(s).ok_or_else(err)?
    };
    if v <= BigRational::zero() {
        return Err(err());
    }
    Ok(v)
}

/// digits[.digits][e[+|-]digits]
fn parse_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (mantissa, exp10) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let digits: String = format!("{int_part}{frac_part}");
    if !digits.chars().all(|c| c.is_ascii_digit()) || digits.is_empty() {
        return None;
    }
    let num: BigInt = digits.parse().ok()?;
    let shift = exp10 - frac_part.len() as i64;
    let scale = pow10(shift.unsigned_abs())?;
    Some(if shift >= 0 {
        BigRational::from_integer(num * scale)
    } else {
        BigRational::new(num, scale)
    })
}

fn pow10(k: u64) -> Option<BigInt> {
    let k = u32::try_from(k).ok()?;
    Some(BigInt::from(10u32).pow(k))
}

/// Small positive rational for the u64-based core checkers.
pub fn parse_small_rational(s: &str) -> CliResult<(u64, u64)> {
    let big = parse_big_rational(s)?;
    let p = u64::try_from(big.numer().magnitude());
    let q = u64::try_from(big.denom().magnitude());
    match (p, q) {
        (Ok(p), Ok(q)) if p > 0 && q > 0 => Ok((p, q)),
        _ => Err(CliError::BadInput(format!(
            "'{s}' does not fit the supported rational range"
        ))),
    }
}

pub fn parse_biguint(s: &str) -> CliResult<BigUint> {
    s.trim()
        .parse()
        .map_err(|_| CliError::BadInput(format!("cannot parse '{s}' as a nonnegative integer")))
}

/// comma-separated u16 list, e.g. "0,2,5"
pub fn parse_u16_list(s: &str) -> CliResult<Vec<u16>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u16>()
                .map_err(|_| CliError::BadInput(format!("bad list entry '{t}' in '{s}'")))
        })
        .collect()
}

pub fn parse_u8_list(s: &str) -> CliResult<Vec<u8>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u8>()
                .map_err(|_| CliError::BadInput(format!("bad list entry '{t}' in '{s}'")))
        })
        .collect()
}

/// budget values accept plain integers or scientific notation like 1e9
pub fn parse_budget(s: &str) -> CliResult<u64> {
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    let f: f64 = s
        .parse()
        .map_err(|_| CliError::BadInput(format!("cannot parse budget '{s}'")))?;
    if !f.is_finite() || f < 0.0 || f > u64::MAX as f64 {
        return Err(CliError::BadInput(format!("budget '{s}' out of range")));
    }
    Ok(f as u64)
}

/// "p/q" display for exact rationals (sign on the numerator)
pub fn rational_string(v: &BigRational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// hand-rolled CSV; fields never contain commas here
pub fn write_csv(path: &Path, header: &str, rows: &[Vec<String>]) -> CliResult<()> {
    let mut out = String::with_capacity(rows.len() * 16 + header.len() + 1);
    out.push_str(header);
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    write_text(path, &out)
}
