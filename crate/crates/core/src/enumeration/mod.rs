//! Graph sources, exhaustive theorem sweeps, lemma checks and the
//! characteristic-polynomial identity suite.

mod charpolys;
mod lemmas;
mod report;
mod sweep;

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6};
use crate::iso::canonical_form;

pub use charpolys::verify_charpoly_identities;
pub use lemmas::{
    connected_graphs, registry, verify_lemma, LemmaGrid, LemmaId, BRIDGED_GRID_CAP, EXHAUSTIVE_GRID_CAP, SPECTRAL_GRID_CAP,
};
pub use report::{LemmaReport, SCHEMA_VERSION};
pub use sweep::{sweep_theorem, ExceptionRecord, SweepFilters, SweepReport};

/// Largest order the built-in generator accepts.
pub const MAX_BUILTIN_ORDER: usize = 7;

/// Environment variable naming the directory that holds `con8.g6` and the
/// other graph6 fixtures.
pub const FIXTURES_ENV: &str = "MATCHSPEC_FIXTURES";

/// Where graphs come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSource {
    /// Every connected graph of the given order (at most 7), one per
    /// isomorphism class.
    BuiltIn(usize),
    /// graph6 lines; blank lines and lines starting with `#` are skipped.
    File(PathBuf),
}

impl GraphSource {
    pub fn describe(&self) -> String {
        match self {
            GraphSource::BuiltIn(n) => format!("builtin:{n}"),
            GraphSource::File(p) => format!("file:{}", p.display()),
        }
    }
}

/// Directory with the graph6 fixtures: `$MATCHSPEC_FIXTURES` if set, else the
/// `fixtures/` directory shipped with this crate.
pub fn fixtures_dir() -> PathBuf {
    std::env::var_os(FIXTURES_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"))
}

/// All connected graphs on `n <= 7` vertices up to isomorphism, in canonical
/// labeling and sorted by graph6.
///
/// Generated by vertex augmentation: every connected graph has a vertex whose
/// removal leaves it connected, so attaching a new vertex to every nonempty
/// neighborhood of every connected graph on `n - 1` vertices reaches all
/// classes; duplicates are removed by canonical form.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_BUILTIN_ORDER {
        return Err(Error::SizeCap { n, cap: MAX_BUILTIN_ORDER });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: Vec<Graph> = vec![Graph::empty(1)?];
    for m in 2..=n {
        let mut seen: BTreeMap<String, Graph> = BTreeMap::new();
        for g in &level {
            for nbrs in 1u64..(1 << (m - 1)) {
                let mut adj: Vec<u64> = (0..m - 1)
                    .map(|v| g.neighbors(v).0 | (((nbrs >> v) & 1) << (m - 1)))
                    .collect();
                adj.push(nbrs);
                let c = canonical_form(&Graph::from_adjacency(adj)?);
                seen.entry(to_graph6(&c)?).or_insert(c);
            }
        }
        level = seen.into_values().collect();
    }
    Ok(level)
}

/// Reads every graph of a graph6 file, checking that all have order `n` when
/// given (otherwise the first graph fixes it).
pub fn read_graph6_file(path: &Path, n: Option<usize>) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for_each_graph6_chunk(path, usize::MAX, |lines| {
        for l in lines {
            out.push(parse_graph6(l)?);
        }
        Ok(())
    })?;
    check_orders(&out, n)?;
    Ok(out)
}

pub(crate) fn check_orders(graphs: &[Graph], n: Option<usize>) -> Result<Option<usize>> {
    let expected = n.or_else(|| graphs.first().map(Graph::order));
    if let Some(e) = expected {
        if let Some(g) = graphs.iter().find(|g| g.order() != e) {
            return Err(Error::MixedOrder { expected: e, found: g.order() });
        }
    }
    Ok(expected)
}

/// Streams the data lines of a graph6 file in chunks of at most `chunk` lines.
pub(crate) fn for_each_graph6_chunk(
    path: &Path,
    chunk: usize,
    mut f: impl FnMut(&[String]) -> Result<()>,
) -> Result<()> {
    let reader = BufReader::new(File::open(path)?);
    let mut buf: Vec<String> = Vec::new();
    for line in reader.lines() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        buf.push(t.to_string());
        if buf.len() >= chunk {
            f(&buf)?;
            buf.clear();
        }
    }
    if !buf.is_empty() {
        f(&buf)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    #[test]
    fn connected_counts() {
        let want = [1, 1, 2, 6, 21, 112];
        for (i, &w) in want.iter().enumerate() {
            let gs = enumerate_connected(i + 1).unwrap();
            assert_eq!(gs.len(), w, "n = {}", i + 1);
            assert!(gs.iter().all(|g| g.is_connected()));
        }
        assert!(enumerate_connected(8).is_err());
    }

    #[test]
    fn classes_are_distinct() {
        let gs = enumerate_connected(5).unwrap();
        for i in 0..gs.len() {
            for j in i + 1..gs.len() {
                assert!(!are_isomorphic(&gs[i], &gs[j]));
            }
        }
    }

    #[test]
    fn fixture_file_reads() {
        let path = fixtures_dir().join("con8.g6");
        let gs = read_graph6_file(&path, Some(8)).unwrap();
        assert_eq!(gs.len(), 11117);
        assert!(matches!(read_graph6_file(&path, Some(6)), Err(Error::MixedOrder { .. })));
    }
}
