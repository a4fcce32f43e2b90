//! Isomorphism testing and a small-order canonical form.
//!
//! Both start from color refinement: vertices are colored by degree and
//! repeatedly recolored by (own color, sorted neighbor colors) until stable.
//! Colors are numbered by sorting the signatures, so the coloring is
//! labeling-invariant and two graphs can be refined against a shared palette.
//! Exact answers then come from backtracking inside the color classes. There
//! is no automorphism pruning, so highly symmetric graphs above ~12 vertices
//! can be slow.

use std::collections::BTreeMap;

use crate::graph::{bit, Graph};

/// Refines the colorings of several graphs simultaneously with one palette.
fn refine_jointly(graphs: &[&Graph]) -> Vec<Vec<usize>> {
    let mut colors: Vec<Vec<usize>> = graphs.iter().map(|g| g.degrees()).collect();
    loop {
        let sigs: Vec<Vec<(usize, Vec<usize>)>> = graphs
            .iter()
            .zip(&colors)
            .map(|(g, col)| {
                (0..g.order())
                    .map(|v| {
                        let mut nb: Vec<usize> = g.neighbors(v).iter().map(|w| col[w]).collect();
                        nb.sort_unstable();
                        (col[v], nb)
                    })
                    .collect()
            })
            .collect();
        let mut palette: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in sigs.iter().flatten() {
            palette.insert(s, 0);
        }
        for (i, c) in palette.values_mut().enumerate() {
            *c = i;
        }
        let next: Vec<Vec<usize>> = sigs
            .iter()
            .map(|gs| gs.iter().map(|s| palette[s]).collect())
            .collect();
        let classes = |cs: &[Vec<usize>]| {
            let mut all: Vec<usize> = cs.iter().flatten().copied().collect();
            all.sort_unstable();
            all.dedup();
            all.len()
        };
        let stable = classes(&next) == classes(&colors);
        colors = next;
        if stable {
            return colors;
        }
    }
}

fn histogram(colors: &[usize]) -> Vec<usize> {
    let mut h = colors.to_vec();
    h.sort_unstable();
    h
}

/// True iff an adjacency-preserving bijection between `a` and `b` exists.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    if a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    let cols = refine_jointly(&[a, b]);
    let (ca, cb) = (&cols[0], &cols[1]);
    if histogram(ca) != histogram(cb) {
        return false;
    }
    let n = a.order();

    // Map vertices of small color classes first, then prefer vertices adjacent
    // to those already placed so adjacency checks prune early.
    let mut class_size = vec![0usize; 2 * n + 1];
    for &c in ca {
        class_size[c] += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed & bit(v) == 0)
            .min_by_key(|&v| {
                let linked = (a.row(v) & placed).count_ones();
                (class_size[ca[v]], std::cmp::Reverse(linked), v)
            })
            .unwrap();
        placed |= bit(next);
        order.push(next);
    }

    let mut image = vec![usize::MAX; n];
    let mut used = 0u64;
    backtrack(a, b, ca, cb, &order, 0, &mut image, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    a: &Graph,
    b: &Graph,
    ca: &[usize],
    cb: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut u64,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..b.order() {
        if *used & bit(w) != 0 || cb[w] != ca[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| a.has_edge(u, v) == b.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        *used |= bit(w);
        if backtrack(a, b, ca, cb, order, depth + 1, image, used) {
            return true;
        }
        *used &= !bit(w);
        image[v] = usize::MAX;
    }
    false
}

/// Upper-triangle code of `g` relabeled so that new vertex `i` is old vertex
/// `inverse[i]`, in graph6 bit order with the first bit most significant.
fn code_under(g: &Graph, inverse: &[usize]) -> u128 {
    let n = g.order();
    let mut code = 0u128;
    for j in 1..n {
        for i in 0..j {
            code = (code << 1) | g.has_edge(inverse[i], inverse[j]) as u128;
        }
    }
    code
}

/// Largest order accepted by [`canonical_form`] (the code must fit 128 bits).
pub const MAX_CANONICAL_ORDER: usize = 16;

/// Canonical relabeling of `g`: among all labelings that list the refined
/// color classes in palette order, the one whose graph6 bit string is
/// lexicographically smallest. Isomorphic graphs get identical results.
///
/// Cost is the product of the factorials of the class sizes, which is fine
/// for the small orders this is used on (`n <= 8`). Panics above
/// [`MAX_CANONICAL_ORDER`].
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.order();
    assert!(n <= MAX_CANONICAL_ORDER, "canonical_form is limited to n <= 16");
    let colors = refine_jointly(&[g]).remove(0);
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        classes.entry(colors[v]).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = classes.into_values().collect();

    // inverse[new] = old; positions are fixed cell by cell
    let mut inverse: Vec<usize> = cells.iter().flatten().copied().collect();
    let mut best: Option<(u128, Vec<usize>)> = None;
    permute_cells(g, &cells, 0, 0, &mut inverse, &mut best);
    let (_, inv) = best.expect("at least one labeling");
    let mut perm = vec![0; n];
    for (new, &old) in inv.iter().enumerate() {
        perm[old] = new;
    }
    g.relabel(&perm).expect("valid permutation")
}

fn permute_cells(
    g: &Graph,
    cells: &[Vec<usize>],
    cell: usize,
    offset: usize,
    inverse: &mut Vec<usize>,
    best: &mut Option<(u128, Vec<usize>)>,
) {
    if cell == cells.len() {
        let code = code_under(g, inverse);
        if best.as_ref().is_none_or(|(c, _)| code < *c) {
            *best = Some((code, inverse.clone()));
        }
        return;
    }
    let len = cells[cell].len();
    heap_permutations(len, &mut |p: &[usize]| {
        for (k, &idx) in p.iter().enumerate() {
            inverse[offset + k] = cells[cell][idx];
        }
        permute_cells(g, cells, cell + 1, offset + len, inverse, best);
    });
}

/// Calls `f` with every permutation of `0..len` (Heap's algorithm).
fn heap_permutations(len: usize, f: &mut dyn FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..len).collect();
    let mut c = vec![0usize; len];
    f(&p);
    let mut i = 1;
    while i < len {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Pairs of distinct vertices `(i, j)` with `N(i) \ {j} = N(j) \ {i}`.
pub fn twin_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..g.order() {
        for j in i + 1..g.order() {
            let ni = g.row(i) & !bit(j);
            let nj = g.row(j) & !bit(i);
            if ni == nj {
                out.push((i, j));
            }
        }
    }
    out
}
