//! Numeric and exhaustive checks of the supporting lemmas over parameter
//! grids.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::enumeration::report::LemmaReport;
use crate::enumeration::{enumerate_connected, fixtures_dir, read_graph6_file, MAX_BUILTIN_ORDER};
use crate::error::{Error, Result};
use crate::families::{build, canonical_partition, FamilyId, FamilySpec};
use crate::graph::{Graph, VertexSet};
use crate::iso::twin_pairs;
use crate::matching::{
    berge_tutte_deficiency, is_1_excludable, is_1_excludable_criterion, is_k_extendable, is_k_extendable_chen,
    recheck_exclusion_witness, recheck_extension_witness,
};
use crate::spectral::{largest_root, quotient_matrix, spectral_radius, symmetric_eigen, theta};

/// Largest order for the sampled spectral checks.
pub const SPECTRAL_GRID_CAP: usize = 14;
/// Largest order for checks that scan every connected graph.
pub const EXHAUSTIVE_GRID_CAP: usize = 8;
/// Largest `l` for the bridged-completes comparison.
pub const BRIDGED_GRID_CAP: usize = 40;

const TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LemmaId {
    /// Proper connected subgraphs have strictly smaller spectral radius.
    L21,
    /// Twin vertices carry equal Perron entries.
    L22,
    /// Moving edges toward the heavier Perron entry raises the radius.
    L23,
    /// An equitable quotient shares the largest eigenvalue.
    L24,
    /// Cauchy interlacing.
    L25,
    /// Odd-component criterion for k-extendability.
    L26,
    /// Odd-component and odd-bridge criterion for 1-excludability.
    L27,
    /// Consolidating clique sizes increases size and radius.
    L28,
    /// Size bound under `o(G-S) >= |S|+2`.
    L29,
    /// Radius bound under `o(G-S) >= |S|+2`.
    L210,
    /// `K_{l-1}^+` and `K_3 + K_{l-3}` lead among bridged completes.
    L211,
}

impl LemmaId {
    pub const ALL: [LemmaId; 11] = [
        LemmaId::L21,
        LemmaId::L22,
        LemmaId::L23,
        LemmaId::L24,
        LemmaId::L25,
        LemmaId::L26,
        LemmaId::L27,
        LemmaId::L28,
        LemmaId::L29,
        LemmaId::L210,
        LemmaId::L211,
    ];

    /// Grid used when none is given.
    pub fn default_grid(self) -> LemmaGrid {
        match self {
            LemmaId::L21 => LemmaGrid::new(3, 10),
            LemmaId::L22 | LemmaId::L24 => LemmaGrid::new(4, 14),
            LemmaId::L23 | LemmaId::L25 | LemmaId::L28 => LemmaGrid::new(3, 12),
            LemmaId::L26 | LemmaId::L27 => LemmaGrid::new(2, 7),
            LemmaId::L29 | LemmaId::L210 => LemmaGrid::new(4, 8),
            LemmaId::L211 => LemmaGrid::new(4, 20),
        }
    }

    /// Largest order `verify_lemma` accepts for this lemma.
    pub fn cap(self) -> usize {
        match self {
            LemmaId::L26 | LemmaId::L27 | LemmaId::L29 | LemmaId::L210 => EXHAUSTIVE_GRID_CAP,
            LemmaId::L211 => BRIDGED_GRID_CAP,
            _ => SPECTRAL_GRID_CAP,
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LemmaId::L21 => "l2.1",
            LemmaId::L22 => "l2.2",
            LemmaId::L23 => "l2.3",
            LemmaId::L24 => "l2.4",
            LemmaId::L25 => "l2.5",
            LemmaId::L26 => "l2.6",
            LemmaId::L27 => "l2.7",
            LemmaId::L28 => "l2.8",
            LemmaId::L29 => "l2.9",
            LemmaId::L210 => "l2.10",
            LemmaId::L211 => "l2.11",
        };
        f.write_str(s)
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        LemmaId::ALL
            .into_iter()
            .find(|id| id.to_string() == t)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown lemma id {s:?}")))
    }
}

/// Orders (or `l` for the bridged completes) to cover, plus the sample
/// count and seed for the randomized checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaGrid {
    pub n_min: usize,
    pub n_max: usize,
    pub samples: usize,
    pub seed: u64,
}

impl LemmaGrid {
    pub fn new(n_min: usize, n_max: usize) -> Self {
        LemmaGrid { n_min, n_max, samples: 100, seed: 0x5eed }
    }

    /// Parses comma-separated `key=value` items: `n=6..14` or `n=8`,
    /// `samples=200`, `seed=7`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |m: String| Error::InvalidParameters(m);
        let mut g = LemmaGrid::new(4, 8);
        for item in text.split([',', ' ']).filter(|s| !s.is_empty()) {
            let (key, val) = item.split_once('=').ok_or_else(|| bad(format!("grid item {item:?} is not key=value")))?;
            let num = |v: &str| v.trim().parse::<usize>().map_err(|_| bad(format!("bad number {v:?} in grid")));
            match key.trim() {
                "n" | "l" => {
                    let (a, b) = match val.split_once("..") {
                        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
                        None => (num(val)?, num(val)?),
                    };
                    if a > b {
                        return Err(bad(format!("empty range {val:?}")));
                    }
                    g.n_min = a;
                    g.n_max = b;
                }
                "samples" => g.samples = num(val)?,
                "seed" => g.seed = num(val)? as u64,
                other => return Err(bad(format!("unknown grid key {other:?}"))),
            }
        }
        Ok(g)
    }

    pub fn describe(&self) -> String {
        format!("n={}..{},samples={},seed={}", self.n_min, self.n_max, self.samples, self.seed)
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    fn orders(&self) -> impl Iterator<Item = usize> {
        self.n_min..=self.n_max
    }
}

impl Default for LemmaGrid {
    fn default() -> Self {
        LemmaGrid::new(4, 14)
    }
}

/// Every connected graph of order `n`: built in up to 7, from the `con8.g6`
/// fixture at 8.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    match n {
        0..=MAX_BUILTIN_ORDER => enumerate_connected(n),
        8 => read_graph6_file(&fixtures_dir().join("con8.g6"), Some(8)),
        _ => Err(Error::SizeCap { n, cap: EXHAUSTIVE_GRID_CAP }),
    }
}

/// Registered families and simple constructions of order `n` with a
/// canonical partition.
pub fn registry(n: usize) -> Vec<FamilySpec> {
    let mut ids = Vec::new();
    for k in 1..=3 {
        ids.push(FamilyId::Thm11Exc1 { n, k });
        if n == 2 * k + 4 {
            ids.push(FamilyId::Thm11Exc2 { k });
        }
        for s in 2 * k..=n {
            ids.push(FamilyId::Thm11Extremal { n, k, s });
        }
    }
    if n == 6 {
        ids.push(FamilyId::Thm13F1);
    }
    if n == 8 {
        ids.push(FamilyId::Thm13F2);
    }
    ids.push(FamilyId::Thm13F3 { n });
    for s in 2..n / 2 {
        ids.push(FamilyId::Thm13Fact3Pendant { n, s });
        ids.push(FamilyId::Thm13Fact3Split { n, s });
    }
    ids.extend([FamilyId::Lem210 { n }, FamilyId::W1 { n }, FamilyId::W2 { n }]);
    let mut out: Vec<FamilySpec> = ids
        .into_iter()
        .filter(|id| id.order().is_ok_and(|m| m == n))
        .map(FamilySpec::Named)
        .collect();
    if n >= 2 {
        out.push(FamilySpec::PendantComplete(n));
        out.extend((1..=n / 2).map(|p| FamilySpec::BridgedCompletes(p, n - p)));
    }
    out
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("valid edges")
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let p = rng.gen_range(0.3..0.9);
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

fn pick_order(rng: &mut ChaCha8Rng, grid: &LemmaGrid, min: usize) -> usize {
    rng.gen_range(grid.n_min.max(min)..=grid.n_max.max(min))
}

/// Checks one lemma over `grid`.
pub fn verify_lemma(lemma: LemmaId, grid: &LemmaGrid) -> Result<LemmaReport> {
    if grid.n_max > lemma.cap() {
        return Err(Error::SizeCap { n: grid.n_max, cap: lemma.cap() });
    }
    if grid.n_min > grid.n_max {
        return Err(Error::InvalidParameters(format!("empty grid {}", grid.describe())));
    }
    let mut r = LemmaReport::new(&lemma.to_string(), grid.describe());
    match lemma {
        LemmaId::L21 => subgraph_monotone(grid, &mut r),
        LemmaId::L22 => perron_twins(grid, &mut r),
        LemmaId::L23 => edge_rotation(grid, &mut r),
        LemmaId::L24 => quotient_root(grid, &mut r)?,
        LemmaId::L25 => interlacing(grid, &mut r),
        LemmaId::L26 => chen_criterion(grid, &mut r)?,
        LemmaId::L27 => exclusion_criterion(grid, &mut r)?,
        LemmaId::L28 => clique_consolidation(grid, &mut r)?,
        LemmaId::L29 => odd_component_bound(grid, &mut r, false)?,
        LemmaId::L210 => odd_component_bound(grid, &mut r, true)?,
        LemmaId::L211 => bridged_completes(grid, &mut r)?,
    }
    Ok(r)
}

fn subgraph_monotone(grid: &LemmaGrid, r: &mut LemmaReport) {
    let mut rng = grid.rng();
    while r.instances < grid.samples {
        let n = pick_order(&mut rng, grid, 3);
        let g = random_connected(&mut rng, n);
        let mut h = g.clone();
        if rng.gen_bool(0.3) {
            let v = rng.gen_range(0..n);
            h = h.delete_vertices(VertexSet::from_slice(&[v])).expect("in range").0;
        }
        for _ in 0..rng.gen_range(0..=2) {
            if let Some(&e) = h.edges().choose(&mut rng) {
                h = h.without_edge(e);
            }
        }
        let proper = h.order() < g.order() || h.size() < g.size();
        if !proper || !h.is_connected() {
            continue;
        }
        r.instances += 1;
        let margin = spectral_radius(&g).rho - spectral_radius(&h).rho;
        r.strict(margin);
        if margin <= 0.0 {
            r.fail(format!("rho did not drop: G = {}, H = {}", g.to_edge_list(), h.to_edge_list()));
        }
    }
}

fn perron_twins(grid: &LemmaGrid, r: &mut LemmaReport) {
    let mut rng = grid.rng();
    let mut graphs: Vec<Graph> = grid.orders().flat_map(registry).filter_map(|s| build(&s).ok()).collect();
    for _ in 0..grid.samples {
        let n = pick_order(&mut rng, grid, 2);
        graphs.push(random_connected(&mut rng, n));
    }
    for g in graphs.iter().filter(|g| g.is_connected()) {
        r.instances += 1;
        let x = spectral_radius(g).perron;
        for (i, j) in twin_pairs(g) {
            let gap = (x[i] - x[j]).abs();
            r.equality(gap);
            if gap > TOL {
                r.fail(format!("twins {i},{j} differ by {gap:e} in {}", g.to_edge_list()));
            }
        }
    }
}

fn edge_rotation(grid: &LemmaGrid, r: &mut LemmaReport) {
    let mut rng = grid.rng();
    while r.instances < grid.samples {
        let n = pick_order(&mut rng, grid, 3);
        let g = random_connected(&mut rng, n);
        let x = spectral_radius(&g).perron;
        let mut moves = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u == v || x[u] < x[v] {
                    continue;
                }
                let free = g.neighbors(v).0 & !g.neighbors(u).0 & !(1u64 << u);
                moves.extend(VertexSet(free).iter().map(|w| (u, v, w)));
            }
        }
        let Some(&(u, v, w)) = moves.choose(&mut rng) else { continue };
        r.instances += 1;
        let moved = g.without_edge((v, w)).with_edges(&[(u, w)]).expect("valid edge");
        let margin = spectral_radius(&moved).rho - spectral_radius(&g).rho;
        r.strict(margin);
        if margin <= 0.0 {
            r.fail(format!("moving {v}{w} to {u}{w} did not raise rho in {}", g.to_edge_list()));
        }
    }
}

fn quotient_root(grid: &LemmaGrid, r: &mut LemmaReport) -> Result<()> {
    for n in grid.orders() {
        for spec in registry(n) {
            r.instances += 1;
            let g = build(&spec)?;
            let p = canonical_partition(&spec)?;
            let q = quotient_matrix(&g, &p)?;
            let root = q.characteristic_polynomial().and_then(|c| largest_root(&c));
            match root {
                Ok(root) => {
                    let gap = (root - spectral_radius(&g).rho).abs();
                    r.equality(gap);
                    if gap > TOL || !q.equitable {
                        r.fail(format!("{spec:?}: quotient root {root} vs rho, gap {gap:e}"));
                    }
                }
                Err(e) => r.fail(format!("{spec:?}: {e}")),
            }
        }
    }
    Ok(())
}

fn interlacing(grid: &LemmaGrid, r: &mut LemmaReport) {
    let mut rng = grid.rng();
    for i in 0..grid.samples {
        let s = pick_order(&mut rng, grid, 2);
        let m: Vec<Vec<f64>> = if i % 2 == 0 {
            let g = random_graph(&mut rng, s, 0.5);
            g.adjacency_matrix().into_iter().map(|row| row.into_iter().map(|v| v as f64).collect()).collect()
        } else {
            let mut m = vec![vec![0.0; s]; s];
            for a in 0..s {
                for b in a..s {
                    let v = rng.gen_range(-1.0..1.0);
                    m[a][b] = v;
                    m[b][a] = v;
                }
            }
            m
        };
        let t = rng.gen_range(1..s);
        let mut idx: Vec<usize> = (0..s).collect();
        idx.shuffle(&mut rng);
        idx.truncate(t);
        idx.sort_unstable();
        let sub: Vec<Vec<f64>> = idx.iter().map(|&a| idx.iter().map(|&b| m[a][b]).collect()).collect();
        let lambda = symmetric_eigen(&m).0;
        let mu = symmetric_eigen(&sub).0;
        r.instances += 1;
        for k in 0..t {
            if mu[k] > lambda[k] + TOL || mu[k] < lambda[s - t + k] - TOL {
                r.fail(format!(
                    "mu_{} = {} outside [{}, {}] (s={s}, t={t})",
                    k + 1,
                    mu[k],
                    lambda[s - t + k],
                    lambda[k]
                ));
            }
        }
    }
}

fn chen_criterion(grid: &LemmaGrid, r: &mut LemmaReport) -> Result<()> {
    for n in grid.orders().filter(|&n| n >= 1) {
        for g in connected_graphs(n)? {
            for k in 1..=2 {
                r.instances += 1;
                let direct = is_k_extendable(&g, k);
                let chen = is_k_extendable_chen(&g, k)?;
                if direct.holds != chen.holds {
                    r.fail(format!("k={k}: direct {} vs criterion {} on {}", direct.holds, chen.holds, g.to_edge_list()));
                }
                for v in [&direct, &chen] {
                    if !v.holds && !v.witness.as_ref().is_some_and(|w| recheck_extension_witness(&g, k, w)) {
                        r.fail(format!("k={k}: witness {:?} does not recheck on {}", v.witness, g.to_edge_list()));
                    }
                }
            }
        }
    }
    Ok(())
}

fn exclusion_criterion(grid: &LemmaGrid, r: &mut LemmaReport) -> Result<()> {
    for n in grid.orders().filter(|&n| n >= 1) {
        for g in connected_graphs(n)? {
            r.instances += 1;
            let direct = is_1_excludable(&g);
            let crit = is_1_excludable_criterion(&g)?;
            if direct.holds != crit.holds {
                r.fail(format!("direct {} vs criterion {} on {}", direct.holds, crit.holds, g.to_edge_list()));
            }
            for v in [&direct, &crit] {
                if !v.holds && !v.witness.as_ref().is_some_and(|w| recheck_exclusion_witness(&g, w)) {
                    r.fail(format!("witness {:?} does not recheck on {}", v.witness, g.to_edge_list()));
                }
            }
        }
    }
    Ok(())
}

/// `K_s v (H ∪ K_{n_1} ∪ ... ∪ K_{n_t})`.
fn clique_join(s: usize, h: &Graph, cliques: &[usize]) -> Result<Graph> {
    let mut rest = h.clone();
    for &c in cliques {
        rest = rest.disjoint_union(&Graph::complete(c)?)?;
    }
    Graph::complete(s)?.join(&rest)
}

fn compare_consolidation(
    r: &mut LemmaReport,
    s: usize,
    k: usize,
    h: &Graph,
    sizes: &[usize],
) -> Result<()> {
    let t = sizes.len();
    let n = s + h.order() + sizes.iter().sum::<usize>();
    let g = clique_join(s, h, sizes)?;
    let mut merged = vec![n - h.order() - s - k * (t - 1)];
    merged.extend(std::iter::repeat_n(k, t - 1));
    let big = clique_join(s, h, &merged)?;
    let (rho_g, rho_big) = (spectral_radius(&g).rho, spectral_radius(&big).rho);
    let label = format!("s={s},k={k},m={},sizes={sizes:?}", h.order());
    r.instances += 1;
    if sizes[1..].iter().all(|&x| x == k) {
        let gap = (rho_big - rho_g).abs();
        r.equality(gap);
        if g.size() != big.size() || gap > TOL {
            r.fail(format!("{label}: expected equality, sizes {} vs {}, rho gap {gap:e}", g.size(), big.size()));
        }
    } else {
        let margin = rho_big - rho_g;
        r.strict(margin);
        if g.size() >= big.size() || margin <= 0.0 {
            r.fail(format!(
                "{label}: expected strict, sizes {} vs {}, rho {rho_g} vs {rho_big}",
                g.size(),
                big.size()
            ));
        }
    }
    Ok(())
}

fn clique_consolidation(grid: &LemmaGrid, r: &mut LemmaReport) -> Result<()> {
    compare_consolidation(r, 2, 1, &Graph::empty(0)?, &[3, 3])?;
    let mut rng = grid.rng();
    let mut done = 0;
    while done < grid.samples {
        let n = pick_order(&mut rng, grid, 3);
        let s = rng.gen_range(1..=3);
        let k = rng.gen_range(1..=3);
        let t = rng.gen_range(1..=4);
        let m = rng.gen_range(0..=3);
        if s + m + k * t > n {
            continue;
        }
        // Distribute the remaining vertices over the cliques, largest first.
        let mut sizes = vec![k; t];
        for _ in 0..n - s - m - k * t {
            let i = rng.gen_range(0..t);
            sizes[i] += 1;
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let h = random_graph(&mut rng, m, 0.5);
        compare_consolidation(r, s, k, &h, &sizes)?;
        done += 1;
    }
    Ok(())
}

fn odd_component_bound(grid: &LemmaGrid, r: &mut LemmaReport, spectral: bool) -> Result<()> {
    for n in grid.orders().filter(|n| n % 2 == 0 && *n >= 4) {
        let bound = match (spectral, n) {
            (false, 6) => 9.0,
            (false, 8) => 18.0,
            (false, _) => ((n - 2) * (n - 3) / 2 + 2) as f64,
            (true, 6) => (1.0 + 33f64.sqrt()) / 2.0,
            (true, _) => theta(n)?,
        };
        let mut best = f64::NEG_INFINITY;
        for g in connected_graphs(n)? {
            if berge_tutte_deficiency(&g)?.0 < 2 {
                continue;
            }
            r.instances += 1;
            let value = if spectral { spectral_radius(&g).rho } else { g.size() as f64 };
            best = best.max(value);
            if value > bound + TOL {
                r.fail(format!("n={n}: value {value} exceeds bound {bound} on {}", g.to_edge_list()));
            }
        }
        if best.is_finite() {
            r.equality(bound - best);
        }
    }
    Ok(())
}

fn bridged_completes(grid: &LemmaGrid, r: &mut LemmaReport) -> Result<()> {
    for l in grid.orders().filter(|l| l % 2 == 0 && *l >= 4) {
        let splits: Vec<(usize, usize, f64)> = (1..=l / 2)
            .step_by(2)
            .map(|p| -> Result<_> {
                let g = build(&FamilySpec::BridgedCompletes(p, l - p))?;
                Ok((p, g.size(), spectral_radius(&g).rho))
            })
            .collect::<Result<_>>()?;
        r.instances += splits.len();
        let pendant = build(&FamilySpec::PendantComplete(l))?;
        let (_, m1, rho1) = splits[0];
        if m1 != pendant.size() || (rho1 - spectral_radius(&pendant).rho).abs() > TOL {
            r.fail(format!("l={l}: K_1+K_(l-1) differs from K_(l-1)^+"));
        }
        for (leader, rest) in [(0, &splits[1..]), (1, splits.get(2..).unwrap_or(&[]))] {
            let Some(&(p, m, rho)) = splits.get(leader) else { continue };
            for &(pp, mm, rr) in rest {
                r.strict(rho - rr);
                if mm >= m || rr >= rho {
                    r.fail(format!("l={l}: split p={pp} (m={mm}, rho={rr}) not below p={p} (m={m}, rho={rho})"));
                }
            }
        }
        if l == 8 && (splits[0].1 != 22 || splits[1].1 != 14) {
            r.fail(format!("l=8: sizes {} and {}, expected 22 and 14", splits[0].1, splits[1].1));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in LemmaId::ALL {
            assert_eq!(id.to_string().parse::<LemmaId>().unwrap(), id);
        }
        assert!("l2.12".parse::<LemmaId>().is_err());
    }

    #[test]
    fn grid_syntax() {
        let g = LemmaGrid::parse("n=6..14,samples=20,seed=3").unwrap();
        assert_eq!((g.n_min, g.n_max, g.samples, g.seed), (6, 14, 20, 3));
        let g = LemmaGrid::parse("n=8").unwrap();
        assert_eq!((g.n_min, g.n_max), (8, 8));
        assert!(LemmaGrid::parse("n=9..3").is_err());
        assert!(LemmaGrid::parse("m=3").is_err());
    }

    #[test]
    fn caps_enforced() {
        assert!(matches!(verify_lemma(LemmaId::L29, &LemmaGrid::new(4, 10)), Err(Error::SizeCap { .. })));
        assert!(matches!(verify_lemma(LemmaId::L24, &LemmaGrid::new(4, 16)), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn fast_lemmas_pass() {
        for id in [LemmaId::L21, LemmaId::L22, LemmaId::L23, LemmaId::L24, LemmaId::L25, LemmaId::L28, LemmaId::L211] {
            let r = verify_lemma(id, &id.default_grid()).unwrap();
            assert!(r.passed(), "{id}: {:#?}", r.violations);
            assert!(r.instances > 0);
        }
    }

    #[test]
    fn fixed_consolidation_example_is_strict() {
        let mut r = LemmaReport::new("l2.8", String::new());
        compare_consolidation(&mut r, 2, 1, &Graph::empty(0).unwrap(), &[3, 3]).unwrap();
        assert!(r.passed());
        assert!(r.min_strict_margin.unwrap() > 0.0);
    }

    #[test]
    fn size_bound_small() {
        let r = verify_lemma(LemmaId::L29, &LemmaGrid::new(4, 6)).unwrap();
        assert!(r.passed(), "{:#?}", r.violations);
        assert_eq!(r.max_equality_gap, 0.0);
    }
}
