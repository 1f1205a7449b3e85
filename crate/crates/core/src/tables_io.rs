//! Plain-text persistence for precomputed kernel tables. The dominant cost
//! of a solve at a new exponent pair is the slowly-converging coefficient
//! series, so sweeps can reuse a cached table keyed by the exponents, the
//! truncation and the tail tolerance.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::error::{ContactError, Result};
use crate::kernel::{self, ExponentPair, KernelTables};

const MAGIC: &str = "contact-kernel-tables";
const VERSION: u32 = 1;

/// Deterministic cache file name for a table key. The float parts use the
/// raw bit pattern so distinct keys never collide on rounding.
pub fn cache_file_name(pair: &ExponentPair, n_terms: usize, tail_tol: f64) -> String {
    format!(
        "ktab-v{VERSION}-{:016x}-{:016x}-{}-{:016x}.txt",
        pair.alpha1().to_bits(),
        pair.alpha2().to_bits(),
        n_terms,
        tail_tol.to_bits()
    )
}

fn push_block(out: &mut String, name: &str, data: &[f64]) {
    let _ = write!(out, "{name}");
    for v in data {
        let _ = write!(out, " {v:.17e}");
    }
    out.push('\n');
}

/// Serializes the tables to the versioned text form.
pub fn to_text(tables: &KernelTables) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{MAGIC} v{VERSION}");
    let _ = writeln!(s, "alpha1 {:.17e}", tables.exponents.alpha1());
    let _ = writeln!(s, "alpha2 {:.17e}", tables.exponents.alpha2());
    let _ = writeln!(s, "n_terms {}", tables.n_terms);
    let _ = writeln!(s, "tail_tol {:.17e}", tables.tail_tol);
    push_block(&mut s, "h", &tables.h);
    push_block(&mut s, "l", &tables.l);
    push_block(&mut s, "r", &tables.r);
    push_block(&mut s, "betas", &tables.betas);
    push_block(&mut s, "hs", &tables.hs);
    s
}

fn bad(msg: impl Into<String>) -> ContactError {
    ContactError::TableCache(msg.into())
}

fn parse_scalar(line: Option<&str>, key: &str) -> Result<f64> {
    let line = line.ok_or_else(|| bad(format!("missing {key} line")))?;
    let mut parts = line.split_whitespace();
    if parts.next() != Some(key) {
        return Err(bad(format!("expected {key} line, got {line:?}")));
    }
    parts
        .next()
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| bad(format!("bad {key} value")))
}

fn parse_block(line: Option<&str>, key: &str, len: usize) -> Result<Vec<f64>> {
    let line = line.ok_or_else(|| bad(format!("missing {key} block")))?;
    let mut parts = line.split_whitespace();
    if parts.next() != Some(key) {
        return Err(bad(format!("expected {key} block, got {line:?}")));
    }
    let data: Vec<f64> = parts.map(|v| v.parse().map_err(|_| bad(format!("bad {key} entry")))).collect::<Result<_>>()?;
    if data.len() != len {
        return Err(bad(format!("{key} block has {} entries, expected {len}", data.len())));
    }
    Ok(data)
}

/// Parses the versioned text form back into tables.
pub fn from_text(text: &str) -> Result<KernelTables> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| bad("empty table file"))?;
    if header != format!("{MAGIC} v{VERSION}") {
        return Err(bad(format!("unsupported table header {header:?}")));
    }
    let alpha1 = parse_scalar(lines.next(), "alpha1")?;
    let alpha2 = parse_scalar(lines.next(), "alpha2")?;
    let n_terms = parse_scalar(lines.next(), "n_terms")? as usize;
    let tail_tol = parse_scalar(lines.next(), "tail_tol")?;
    let exponents = ExponentPair::new(alpha1, alpha2)?;
    if n_terms == 0 {
        return Err(bad("n_terms must be positive"));
    }
    let h = parse_block(lines.next(), "h", n_terms * n_terms)?;
    let l = parse_block(lines.next(), "l", n_terms * n_terms)?;
    let r = parse_block(lines.next(), "r", n_terms * n_terms)?;
    let betas = parse_block(lines.next(), "betas", n_terms)?;
    let hs = parse_block(lines.next(), "hs", n_terms)?;
    Ok(KernelTables { exponents, n_terms, tail_tol, h, l, r, betas, hs })
}

/// Writes the tables into `dir` under the key-derived file name.
pub fn store(dir: &Path, tables: &KernelTables) -> Result<PathBuf> {
    std::fs::create_dir_all(dir).map_err(|e| bad(format!("create {dir:?}: {e}")))?;
    let path = dir.join(cache_file_name(&tables.exponents, tables.n_terms, tables.tail_tol));
    std::fs::write(&path, to_text(tables)).map_err(|e| bad(format!("write {path:?}: {e}")))?;
    Ok(path)
}

/// Loads cached tables for the key if present, otherwise builds and stores
/// them. A corrupt or mismatched cache entry is rebuilt, not trusted.
pub fn load_or_build(
    dir: &Path,
    pair: &ExponentPair,
    n_terms: usize,
    tail_tol: f64,
) -> Result<KernelTables> {
    let path = dir.join(cache_file_name(pair, n_terms, tail_tol));
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(t) = from_text(&text) {
            if t.exponents.alpha1() == pair.alpha1()
                && t.exponents.alpha2() == pair.alpha2()
                && t.n_terms == n_terms
                && t.tail_tol == tail_tol
            {
                return Ok(t);
            }
        }
    }
    let tables = kernel::build_tables(pair, n_terms, tail_tol)?;
    store(dir, &tables)?;
    Ok(tables)
}
