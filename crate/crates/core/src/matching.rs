//! Maximum matchings, perfect-matching tests, k-extendability and
//! 1-excludability.
//!
//! Every property has two independent deciders: a direct one that searches
//! matchings with the blossom algorithm, and a criterion one that scans vertex
//! subsets `S` and counts odd components of `G - S`. The subset scans are
//! exponential and capped at [`SUBSET_SCAN_CAP`] vertices.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, low_mask, normalize, Edge, Graph, VertexSet};

/// Largest order accepted by the subset-scanning routines.
pub const SUBSET_SCAN_CAP: usize = 20;

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingResult {
    pub edges: Vec<Edge>,
    pub size: usize,
}

/// How a [`Verdict`] was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Direct,
    Criterion,
}

/// Certificate attached to a negative [`Verdict`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// The definition's preconditions already fail: odd order, fewer than
    /// `2k + 2` vertices, or no perfect matching at all.
    Empty,
    /// A matching that does not extend to a perfect matching.
    Matching { edges: Vec<Edge> },
    /// An edge avoided by no perfect matching.
    Edge { edge: Edge },
    /// `G[S]` has `k` independent edges but `o(G - S) > |S| - 2k`.
    ExtensionBarrier { set: VertexSet },
    /// A set `S` breaking the exclusion criterion; `odd_bridge` tells whether
    /// some component of `G - S` carries an odd-bridge (bound `|S| - 2`) or
    /// not (bound `|S|`).
    ExclusionBarrier { set: VertexSet, odd_bridge: bool },
}

/// Outcome of a property test with an optional re-checkable certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
    pub method: Method,
}

impl Verdict {
    fn yes(method: Method) -> Self {
        Verdict { holds: true, witness: None, method }
    }

    fn no(method: Method, witness: Witness) -> Self {
        Verdict { holds: false, witness: Some(witness), method }
    }
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches an augmenting path from the exposed vertex `root`; returns its
    /// other exposed endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in self.g.neighbors(v).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn run(mut self) -> Vec<usize> {
        let n = self.g.order();
        // greedy start
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(u) = self.g.neighbors(v).iter().find(|&u| self.mate[u] == NONE) {
                    self.mate[v] = u;
                    self.mate[u] = v;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(mut v) = self.find_path(root) {
                while v != NONE {
                    let pv = self.parent[v];
                    let ppv = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = ppv;
                }
            }
        }
        self.mate
    }
}

/// Maximum matching by Edmonds' blossom algorithm, `O(n^3)`.
pub fn max_matching(g: &Graph) -> MatchingResult {
    let mate = Blossom::new(g).run();
    let edges: Vec<Edge> = mate
        .iter()
        .enumerate()
        .filter(|&(v, &m)| m != NONE && v < m)
        .map(|(v, &m)| (v, m))
        .collect();
    MatchingResult { size: edges.len(), edges }
}

/// Matching number `ν(G)`.
pub fn matching_number(g: &Graph) -> usize {
    max_matching(g).size
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order().is_multiple_of(2) && 2 * matching_number(g) == g.order()
}

fn has_perfect_matching_within(g: &Graph, keep: u64) -> bool {
    if keep.count_ones() % 2 == 1 {
        return false;
    }
    let (h, _) = g.induced(VertexSet(keep));
    has_perfect_matching(&h)
}

fn check_scan_cap(g: &Graph) -> Result<()> {
    if g.order() > SUBSET_SCAN_CAP {
        Err(Error::SizeCap { n: g.order(), cap: SUBSET_SCAN_CAP })
    } else {
        Ok(())
    }
}

/// Berge–Tutte deficiency `max_S (o(G - S) - |S|)` by scanning all subsets,
/// with a maximizing `S` (smallest `|S|`, then smallest mask, on ties).
/// `ν(G) = (n - deficiency) / 2`.
pub fn berge_tutte_deficiency(g: &Graph) -> Result<(usize, VertexSet)> {
    check_scan_cap(g)?;
    let n = g.order();
    let mut best = (g.odd_components(VertexSet::EMPTY) as i64, VertexSet::EMPTY);
    for mask in 1..(1u64 << n) {
        let s = VertexSet(mask);
        let d = g.odd_components(s) as i64 - s.len() as i64;
        if d > best.0 || (d == best.0 && s.len() < best.1.len()) {
            best = (d, s);
        }
    }
    Ok((best.0 as usize, best.1))
}

/// All matchings with exactly `k` edges, each listed once (edges in
/// increasing index order).
pub fn matchings_of_size(g: &Graph, k: usize) -> Vec<Vec<Edge>> {
    let edges = g.edges();
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(k);
    fn walk(
        edges: &[Edge],
        from: usize,
        k: usize,
        covered: u64,
        stack: &mut Vec<Edge>,
        out: &mut Vec<Vec<Edge>>,
    ) {
        if stack.len() == k {
            out.push(stack.clone());
            return;
        }
        for (i, &(u, v)) in edges.iter().enumerate().skip(from) {
            if covered & (bit(u) | bit(v)) != 0 {
                continue;
            }
            stack.push((u, v));
            walk(edges, i + 1, k, covered | bit(u) | bit(v), stack, out);
            stack.pop();
        }
    }
    walk(&edges, 0, k, 0, &mut stack, &mut out);
    out
}

fn extension_preconditions(g: &Graph, k: usize) -> bool {
    let n = g.order();
    n.is_multiple_of(2) && n >= 2 * k + 2 && has_perfect_matching(g)
}

/// Direct k-extendability: `n` even, `n >= 2k + 2`, a perfect matching
/// exists, and deleting the vertices of any `k`-matching leaves a graph with
/// a perfect matching.
pub fn is_k_extendable(g: &Graph, k: usize) -> Verdict {
    if !extension_preconditions(g, k) {
        return Verdict::no(Method::Direct, Witness::Empty);
    }
    let all = low_mask(g.order());
    let edges = g.edges();
    let mut stack = Vec::with_capacity(k);
    match first_non_extendable(g, &edges, 0, k, 0, all, &mut stack) {
        Some(m) => Verdict::no(Method::Direct, Witness::Matching { edges: m }),
        None => Verdict::yes(Method::Direct),
    }
}

fn first_non_extendable(
    g: &Graph,
    edges: &[Edge],
    from: usize,
    k: usize,
    covered: u64,
    all: u64,
    stack: &mut Vec<Edge>,
) -> Option<Vec<Edge>> {
    if stack.len() == k {
        return (!has_perfect_matching_within(g, all & !covered)).then(|| stack.clone());
    }
    for (i, &(u, v)) in edges.iter().enumerate().skip(from) {
        if covered & (bit(u) | bit(v)) != 0 {
            continue;
        }
        stack.push((u, v));
        let found = first_non_extendable(g, edges, i + 1, k, covered | bit(u) | bit(v), all, stack);
        stack.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

fn gray_codes(n: usize) -> impl Iterator<Item = u64> {
    (0..(1u64 << n)).map(|i| i ^ (i >> 1))
}

/// k-extendability through the odd-component criterion: for every `S` whose
/// induced subgraph has `k` independent edges, `o(G - S) <= |S| - 2k`.
/// Subsets are visited in Gray-code order; the first violation is returned.
pub fn is_k_extendable_chen(g: &Graph, k: usize) -> Result<Verdict> {
    check_scan_cap(g)?;
    if !extension_preconditions(g, k) {
        return Ok(Verdict::no(Method::Criterion, Witness::Empty));
    }
    for mask in gray_codes(g.order()) {
        let s = VertexSet(mask);
        let odd = g.odd_components(s) as i64;
        if odd <= s.len() as i64 - 2 * k as i64 {
            continue;
        }
        let (inside, _) = g.induced(s);
        if matching_number(&inside) >= k {
            return Ok(Verdict::no(Method::Criterion, Witness::ExtensionBarrier { set: s }));
        }
    }
    Ok(Verdict::yes(Method::Criterion))
}

/// Direct 1-excludability: `n` even and `G - e` has a perfect matching for
/// every edge `e`. Only edges of one fixed perfect matching need testing;
/// every other edge is avoided by that matching.
pub fn is_1_excludable(g: &Graph) -> Verdict {
    if g.order() % 2 == 1 {
        return Verdict::no(Method::Direct, Witness::Empty);
    }
    let m = max_matching(g);
    if 2 * m.size != g.order() {
        return match g.edges().first() {
            Some(&e) => Verdict::no(Method::Direct, Witness::Edge { edge: e }),
            None => Verdict::yes(Method::Direct),
        };
    }
    for &e in &m.edges {
        if !has_perfect_matching(&g.without_edge(e)) {
            return Verdict::no(Method::Direct, Witness::Edge { edge: e });
        }
    }
    Verdict::yes(Method::Direct)
}

/// Whether some component of the subgraph induced by `keep` has an
/// odd-bridge.
fn has_odd_bridge_within(g: &Graph, keep: u64) -> bool {
    let (h, _) = g.induced(VertexSet(keep));
    !find_odd_bridges(&h).is_empty()
}

/// 1-excludability through the odd-component criterion on connected graphs:
/// for every `S`, `o(G - S) <= |S| - 2` when some component of `G - S` has an
/// odd-bridge and `o(G - S) <= |S|` otherwise.
pub fn is_1_excludable_criterion(g: &Graph) -> Result<Verdict> {
    check_scan_cap(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let all = low_mask(g.order());
    for mask in gray_codes(g.order()) {
        let s = VertexSet(mask);
        let odd = g.odd_components(s) as i64;
        let size = s.len() as i64;
        if odd <= size - 2 {
            continue;
        }
        let bridged = has_odd_bridge_within(g, all & !mask);
        if odd > size || bridged {
            return Ok(Verdict::no(
                Method::Criterion,
                Witness::ExclusionBarrier { set: s, odd_bridge: bridged },
            ));
        }
    }
    Ok(Verdict::yes(Method::Criterion))
}

/// Bridges whose removal splits their component into two odd-order parts.
pub fn find_odd_bridges(g: &Graph) -> Vec<Edge> {
    let n = g.order();
    let mut disc = vec![NONE; n];
    let mut low = vec![0; n];
    let mut sub = vec![1usize; n];
    let mut out = Vec::new();
    let mut clock = 0;

    for comp in g.component_masks(low_mask(n)) {
        let root = comp.trailing_zeros() as usize;
        let comp_size = comp.count_ones() as usize;
        // iterative DFS: (vertex, parent, remaining neighbors)
        let mut stack: Vec<(usize, usize, u64)> = vec![(root, NONE, g.row(root))];
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        while let Some(&mut (v, parent, ref mut rest)) = stack.last_mut() {
            if *rest != 0 {
                let w = rest.trailing_zeros() as usize;
                *rest &= *rest - 1;
                if w == parent {
                    continue;
                }
                if disc[w] == NONE {
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, v, g.row(w)));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != NONE {
                    low[parent] = low[parent].min(low[v]);
                    sub[parent] += sub[v];
                    if low[v] > disc[parent] && sub[v] % 2 == 1 && (comp_size - sub[v]) % 2 == 1 {
                        out.push(normalize(parent, v));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Re-validates a k-extendability certificate from scratch (used by tests
/// and by sweeps before reporting anything).
pub fn recheck_extension_witness(g: &Graph, k: usize, witness: &Witness) -> bool {
    match witness {
        Witness::Empty => !extension_preconditions(g, k),
        Witness::Matching { edges } => {
            let mut covered = 0u64;
            for &(u, v) in edges {
                if !g.has_edge(u, v) || covered & (bit(u) | bit(v)) != 0 {
                    return false;
                }
                covered |= bit(u) | bit(v);
            }
            edges.len() == k && !has_perfect_matching_within(g, low_mask(g.order()) & !covered)
        }
        Witness::ExtensionBarrier { set } => {
            let (inside, _) = g.induced(*set);
            matching_number(&inside) >= k
                && (g.odd_components(*set) as i64) > set.len() as i64 - 2 * k as i64
        }
        _ => false,
    }
}

/// Re-validates a 1-excludability certificate from scratch.
pub fn recheck_exclusion_witness(g: &Graph, witness: &Witness) -> bool {
    match witness {
        Witness::Empty => g.order() % 2 == 1,
        Witness::Edge { edge: (u, v) } => {
            g.has_edge(*u, *v) && !has_perfect_matching(&g.without_edge((*u, *v)))
        }
        Witness::ExclusionBarrier { set, odd_bridge } => {
            let keep = low_mask(g.order()) & !set.0;
            let bridged = has_odd_bridge_within(g, keep);
            let odd = g.odd_components(*set) as i64;
            let bound = if bridged { set.len() as i64 - 2 } else { set.len() as i64 };
            bridged == *odd_bridge && odd > bound
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }
    fn e(n: usize) -> Graph {
        Graph::empty(n).unwrap()
    }
    fn u(a: &Graph, b: &Graph) -> Graph {
        a.disjoint_union(b).unwrap()
    }
    fn j(a: &Graph, b: &Graph) -> Graph {
        a.join(b).unwrap()
    }
    fn cycle(n: usize) -> Graph {
        let es: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &es).unwrap()
    }
    fn path(n: usize) -> Graph {
        let es: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &es).unwrap()
    }
    fn petersen() -> Graph {
        let mut es = Vec::new();
        for i in 0..5 {
            es.push((i, (i + 1) % 5));
            es.push((i, i + 5));
            es.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edge_list(10, &es).unwrap()
    }

    /// Brute force: largest family of pairwise disjoint edges.
    fn brute_matching_number(g: &Graph) -> usize {
        let edges = g.edges();
        fn best(edges: &[Edge], i: usize, covered: u64) -> usize {
            if i == edges.len() {
                return 0;
            }
            let (a, b) = edges[i];
            let skip = best(edges, i + 1, covered);
            if covered & (bit(a) | bit(b)) == 0 {
                skip.max(1 + best(edges, i + 1, covered | bit(a) | bit(b)))
            } else {
                skip
            }
        }
        best(&edges, 0, 0)
    }

    fn is_valid_matching(g: &Graph, m: &MatchingResult) -> bool {
        let mut covered = 0u64;
        for &(a, b) in &m.edges {
            if !g.has_edge(a, b) || covered & (bit(a) | bit(b)) != 0 {
                return false;
            }
            covered |= bit(a) | bit(b);
        }
        m.size == m.edges.len()
    }

    #[test]
    fn matching_numbers() {
        assert_eq!(matching_number(&path(4)), 2);
        assert_eq!(brute_matching_number(&petersen()), 5);
        let m = max_matching(&petersen());
        assert!(is_valid_matching(&petersen(), &m));
        assert_eq!(m.size, 5);
        let g = j(&k(3), &e(3));
        assert_eq!(brute_matching_number(&g), 3);
        assert_eq!(matching_number(&g), 3);
    }

    #[test]
    fn blossom_needs_contraction() {
        // two triangles joined through a path; greedy alone can get stuck
        let g = Graph::from_edge_list(
            8,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 5)],
        )
        .unwrap();
        assert_eq!(matching_number(&g), brute_matching_number(&g));
        assert_eq!(matching_number(&g), 4);
    }

    #[test]
    fn perfect_matching_tests() {
        assert!(has_perfect_matching(&k(4)));
        let g = j(&k(1), &u(&k(5), &e(2)));
        assert_eq!(g.order(), 8);
        assert!(!has_perfect_matching(&g));
        assert!(!has_perfect_matching(&k(5)));
        assert!(has_perfect_matching(&e(0)));
    }

    #[test]
    fn deficiency_oracle() {
        assert_eq!(berge_tutte_deficiency(&k(4)).unwrap(), (0, VertexSet::EMPTY));
        let g = j(&k(1), &u(&k(5), &e(2)));
        assert_eq!(berge_tutte_deficiency(&g).unwrap(), (2, VertexSet::from_slice(&[0])));
        let star = j(&k(1), &e(3));
        assert_eq!(berge_tutte_deficiency(&star).unwrap(), (2, VertexSet::from_slice(&[0])));
        assert!(berge_tutte_deficiency(&e(21)).is_err());
    }

    #[test]
    fn extendability_direct_and_criterion() {
        assert!(is_k_extendable(&k(4), 1).holds);
        assert!(is_k_extendable_chen(&k(4), 1).unwrap().holds);
        assert!(is_k_extendable(&cycle(6), 1).holds);
        assert!(is_k_extendable_chen(&cycle(6), 1).unwrap().holds);

        let exc1 = j(&k(2), &u(&k(3), &k(1)));
        let v = is_k_extendable(&exc1, 1);
        assert!(!v.holds);
        assert!(recheck_extension_witness(&exc1, 1, v.witness.as_ref().unwrap()));

        let exc2 = j(&k(3), &e(3));
        let v = is_k_extendable(&exc2, 1);
        assert!(!v.holds);
        assert!(recheck_extension_witness(&exc2, 1, v.witness.as_ref().unwrap()));
        let c = is_k_extendable_chen(&exc2, 1).unwrap();
        assert_eq!(
            c.witness,
            Some(Witness::ExtensionBarrier { set: VertexSet::from_slice(&[0, 1, 2]) })
        );
        assert!(recheck_extension_witness(&exc2, 1, c.witness.as_ref().unwrap()));
    }

    #[test]
    fn extendability_edge_cases() {
        // odd order, too few vertices, no perfect matching
        assert_eq!(is_k_extendable(&k(5), 1).witness, Some(Witness::Empty));
        assert_eq!(is_k_extendable(&k(4), 2).witness, Some(Witness::Empty));
        let star = j(&k(1), &e(3));
        let v = is_k_extendable(&star, 1);
        assert!(!v.holds && recheck_extension_witness(&star, 1, &Witness::Empty));
        assert_eq!(is_k_extendable_chen(&k(4), 2).unwrap().method, Method::Criterion);
        assert!(!is_k_extendable_chen(&k(4), 2).unwrap().holds);
    }

    #[test]
    fn k_matching_enumeration_counts() {
        // K4 has 3 perfect matchings and 6 single edges
        assert_eq!(matchings_of_size(&k(4), 1).len(), 6);
        assert_eq!(matchings_of_size(&k(4), 2).len(), 3);
        // K6 has 15 perfect matchings
        assert_eq!(matchings_of_size(&k(6), 3).len(), 15);
    }

    #[test]
    fn excludability() {
        let c4 = cycle(4);
        assert!(is_1_excludable(&c4).holds);
        assert!(is_1_excludable(&cycle(6)).holds);
        assert!(is_1_excludable_criterion(&cycle(6)).unwrap().holds);

        let f1 = j(&k(2), &u(&k(2), &e(2)));
        let d = is_1_excludable(&f1);
        assert!(!d.holds);
        assert!(recheck_exclusion_witness(&f1, d.witness.as_ref().unwrap()));
        let c = is_1_excludable_criterion(&f1).unwrap();
        assert!(!c.holds);
        assert!(recheck_exclusion_witness(&f1, c.witness.as_ref().unwrap()));
        let at_join = Witness::ExclusionBarrier { set: VertexSet::from_slice(&[0, 1]), odd_bridge: true };
        assert!(recheck_exclusion_witness(&f1, &at_join));

        let f3 = j(&k(1), &u(&k(2), &k(7)));
        assert!(!is_1_excludable(&f3).holds);
        assert!(!is_1_excludable_criterion(&f3).unwrap().holds);

        // a pendant edge is in every perfect matching
        let pend = path(4);
        let v = is_1_excludable(&pend);
        assert!(!v.holds);
        assert_eq!(v.witness, Some(Witness::Edge { edge: (0, 1) }));

        assert_eq!(is_1_excludable(&k(3)).witness, Some(Witness::Empty));
        assert!(matches!(
            is_1_excludable_criterion(&u(&k(2), &k(2))),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn odd_bridges() {
        let mut g = u(&k(3), &k(5));
        g = g.with_edges(&[(2, 3)]).unwrap();
        assert_eq!(find_odd_bridges(&g), vec![(2, 3)]);
        assert!(find_odd_bridges(&cycle(4)).is_empty());
        let pend = u(&k(5), &k(1)).with_edges(&[(4, 5)]).unwrap();
        assert_eq!(find_odd_bridges(&pend), vec![(4, 5)]);
        // P4: middle edge splits 2+2 (even), end edges split 1+3
        assert_eq!(find_odd_bridges(&path(4)), vec![(0, 1), (2, 3)]);
        // evaluated per component
        let two = u(&k(2), &path(3));
        assert_eq!(find_odd_bridges(&two), vec![(0, 1)]);
    }
}
