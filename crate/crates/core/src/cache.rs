//! Plain-text cache of solved bundles.
//!
//! ```text
//! quintic-bundle v1
//! order 60
//! epsilon -1
//! seed s0 1/5*r5
//! ...
//! seed s4lead 1
//! series s0
//! ram=10 trunc=61
//! 0 1/5*r5
//! ...
//! ```
//!
//! `Y` and `F` are not stored; they are recomputed on load.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::modsolver::{solve, SeedConstants, SolutionBundle};
use crate::numfield::QuadRat;
use crate::series::{LineCursor, PuiseuxSeries};

pub const MAGIC: &str = "quintic-bundle";
pub const VERSION: u32 = 1;

pub fn to_text(bundle: &SolutionBundle) -> String {
    let mut out = format!("{MAGIC} v{VERSION}\norder {}\nepsilon {}\n", bundle.order, bundle.epsilon);
    for (i, c) in bundle.seeds.values.iter().enumerate() {
        out.push_str(&format!("seed s{i} {c}\n"));
    }
    out.push_str(&format!("seed s4lead {}\n", bundle.seeds.s4_lead));
    for (i, s) in bundle.s.iter().enumerate() {
        out.push_str(&format!("series s{i}\n"));
        out.push_str(&s.to_text());
    }
    out
}

fn err(offset: usize, msg: impl Into<String>) -> Error {
    Error::Cache { offset, msg: msg.into() }
}

fn field<'a>(lines: &mut LineCursor<'a>, key: &str, end: usize) -> Result<(usize, &'a str)> {
    let (at, line) = lines.next().ok_or_else(|| err(end, format!("missing '{key}' line")))?;
    let value = line
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix(' '))
        .ok_or_else(|| err(at, format!("expected '{key} …', got {line:?}")))?;
    Ok((at + key.len() + 1, value))
}

pub fn from_text(text: &str) -> Result<SolutionBundle> {
    let end = text.len();
    let mut lines = LineCursor::new(text);
    let (_, magic) = field(&mut lines, MAGIC, end)?;
    let expected = format!("v{VERSION}");
    if magic != expected {
        return Err(err(MAGIC.len() + 1, format!("unsupported version {magic:?}, expected {expected:?}")));
    }
    let (at, order) = field(&mut lines, "order", end)?;
    let order: u32 = order.parse().map_err(|_| err(at, format!("bad order {order:?}")))?;
    let (at, eps) = field(&mut lines, "epsilon", end)?;
    let epsilon: i32 = match eps {
        "1" => 1,
        "-1" => -1,
        _ => return Err(err(at, format!("epsilon must be 1 or -1, got {eps:?}"))),
    };
    let mut values: Vec<QuadRat> = Vec::with_capacity(9);
    for i in 0..10 {
        let key = if i < 9 { format!("seed s{i}") } else { "seed s4lead".to_string() };
        let (at, v) = field(&mut lines, &key, end)?;
        let c: QuadRat = v.parse().map_err(|e| match e {
            Error::Parse { pos, msg } => err(at + pos, msg),
            other => err(at, other.to_string()),
        })?;
        values.push(c);
    }
    let s4_lead = values.pop().expect("ten seed values");
    let seeds = SeedConstants {
        values: values.try_into().expect("nine seed values"),
        s4_lead,
    };

    let mut series = Vec::with_capacity(9);
    let mut pending = lines.next();
    for i in 0..9 {
        let name = format!("series s{i}");
        let (at, line) = pending.ok_or_else(|| err(end, format!("missing '{name}'")))?;
        if line != name {
            return Err(err(at, format!("expected {name:?}, got {line:?}")));
        }
        let start = at + line.len() + 1;
        let mut stop = end;
        pending = None;
        for (at, line) in lines.by_ref() {
            if line.starts_with("series ") {
                stop = at;
                pending = Some((at, line));
                break;
            }
        }
        let block = text.get(start.min(end)..stop).unwrap_or("");
        let s = PuiseuxSeries::from_text(block).map_err(|e| match e {
            Error::Parse { pos, msg } => err(start + pos, msg),
            other => err(start, other.to_string()),
        })?;
        if s.trunc() != order + 1 {
            return Err(err(start, format!("s{i} has trunc {}, expected {}", s.trunc(), order + 1)));
        }
        series.push(s);
    }
    if let Some((at, line)) = pending {
        return Err(err(at, format!("unexpected trailing line {line:?}")));
    }
    let bundle = SolutionBundle::from_series(order, epsilon, seeds, series).map_err(|e| err(0, e.to_string()))?;
    if to_text(&bundle) != text {
        return Err(err(0, "file is not in canonical form"));
    }
    Ok(bundle)
}

pub fn store(bundle: &SolutionBundle, path: &Path) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, to_text(bundle))?;
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn load(path: &Path) -> Result<SolutionBundle> {
    from_text(&fs::read_to_string(path)?)
}

/// Cache file for one sign convention inside `dir`.
pub fn cache_path(dir: &Path, epsilon: i32) -> PathBuf {
    let sign = if epsilon < 0 { "m" } else { "p" };
    dir.join(format!("bundle-eps{sign}1.txt"))
}

/// Loads a cached bundle of sufficient order, or solves and stores one.
/// A cached bundle of higher order is returned as a truncated view.
pub fn load_or_solve(dir: Option<&Path>, order: u32, epsilon: i32) -> Result<SolutionBundle> {
    let Some(dir) = dir else {
        return solve(order, epsilon);
    };
    let path = cache_path(dir, epsilon);
    if path.exists() {
        let cached = load(&path)?;
        if cached.order >= order {
            return cached.truncated(order);
        }
    }
    let bundle = solve(order, epsilon)?;
    store(&bundle, &path)?;
    Ok(bundle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gmconn::EPSILON;

    #[test]
    fn round_trip_is_byte_identical() {
        let b = solve(12, EPSILON).unwrap();
        let t = to_text(&b);
        let back = from_text(&t).unwrap();
        assert_eq!(back, b);
        assert_eq!(to_text(&back), t);
        assert!(t.starts_with("quintic-bundle v1\norder 12\nepsilon -1\nseed s0 1/5*r5\n"));
    }

    #[test]
    fn corrupted_files_name_offsets() {
        let b = solve(6, EPSILON).unwrap();
        let t = to_text(&b);
        let bad = t.replacen("v1", "v9", 1);
        assert!(matches!(from_text(&bad), Err(Error::Cache { offset: 15, .. })));
        let bad = t.replacen("order 6", "order x", 1);
        assert!(matches!(from_text(&bad), Err(Error::Cache { offset: 24, .. })));
        let at = t.find("series s3\nram=10 trunc=7\n0\t").unwrap() + "series s3\nram=10 trunc=7\n0\t".len();
        let bad = format!("{}-6/0{}", &t[..at], &t[at + 2..]);
        match from_text(&bad) {
            Err(Error::Cache { offset, .. }) => assert!(offset >= at && offset < at + 4, "{offset} vs {at}"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(from_text(&t[..t.len() / 2]), Err(Error::Cache { .. })));
    }
}
