//! Named extremal constructions: a small expression algebra over complete
//! graphs, empty graphs, unions, joins, pendant-completes and bridged
//! completes, plus a registry of the parameterized families.
//!
//! Labeling is deterministic: operands are laid out left to right, so in
//! `A v B` the vertices of `A` come first. `K_{l-1}^+` on `l` vertices puts
//! the clique on `0..l-1` and attaches the pendant vertex `v = l-1` to
//! `u = l-2`. `K_p + K_q` puts `K_p` first and bridges `p-1` to `p`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::iso::are_isomorphic;
use crate::spectral::{quotient_matrix, Partition};

/// Algebraic description of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "args", rename_all = "snake_case")]
pub enum FamilySpec {
    Complete(usize),
    Empty(usize),
    Union(Vec<FamilySpec>),
    Join(Box<FamilySpec>, Box<FamilySpec>),
    /// `K_{l-1}^+`: a clique on `l - 1` vertices plus one pendant vertex.
    PendantComplete(usize),
    /// `K_p + K_q`: two cliques joined by a single edge.
    BridgedCompletes(usize, usize),
    Named(FamilyId),
}

pub fn k(n: usize) -> FamilySpec {
    FamilySpec::Complete(n)
}

pub fn empty(n: usize) -> FamilySpec {
    FamilySpec::Empty(n)
}

pub fn union(parts: Vec<FamilySpec>) -> FamilySpec {
    FamilySpec::Union(parts)
}

pub fn join(a: FamilySpec, b: FamilySpec) -> FamilySpec {
    FamilySpec::Join(Box::new(a), Box::new(b))
}

pub fn pendant(l: usize) -> FamilySpec {
    FamilySpec::PendantComplete(l)
}

/// The registered families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "id", rename_all = "snake_case")]
pub enum FamilyId {
    /// `K_s v (K_{n-2s+2k-1} ∪ (s-2k+1)K_1)`
    Thm11Extremal { n: usize, k: usize, s: usize },
    /// `K_{2k} v (K_{n-2k-1} ∪ K_1)`
    Thm11Exc1 { n: usize, k: usize },
    /// `K_{2k+1} v 3K_1`
    Thm11Exc2 { k: usize },
    /// `K_2 v (K_2 ∪ 2K_1)`
    Thm13F1,
    /// `K_3 v (K_2 ∪ 3K_1)`
    Thm13F2,
    /// `K_1 v (K_2 ∪ K_{n-3})`
    Thm13F3 { n: usize },
    /// `K_s v (K_{n-2s-1}^+ ∪ sK_1)`
    Thm13Fact3Pendant { n: usize, s: usize },
    /// `K_s v (K_2 ∪ K_{n-2s-1} ∪ (s-1)K_1)`
    Thm13Fact3Split { n: usize, s: usize },
    /// `K_4 v (K_2^+ ∪ 4K_1)` taken literally: 11 vertices.
    Thm13AsPrinted,
    /// `K_1 v (K_{n-3} ∪ 2K_1)`
    Lem210 { n: usize },
    /// `K_{(n-2)/2} v (K_2 ∪ (n-2)/2 K_1)`
    W1 { n: usize },
    /// `K_2 v (K_{n-5}^+ ∪ 2K_1)`
    W2 { n: usize },
}

fn bad(msg: String) -> Error {
    Error::InvalidParameters(msg)
}

fn need_even(n: usize, min: usize, what: &str) -> Result<()> {
    if n % 2 == 1 || n < min {
        Err(bad(format!("{what} needs even n >= {min}, got n = {n}")))
    } else {
        Ok(())
    }
}

impl FamilyId {
    /// Checks the parameter ranges under which the family is used.
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilyId::Thm11Extremal { n, k, s } => {
                if k == 0 || s < 2 * k || n < 2 * s - 2 * k + 2 || n % 2 == 1 {
                    return Err(bad(format!(
                        "thm11-extremal needs k >= 1, s >= 2k, even n >= 2s-2k+2; got n={n}, k={k}, s={s}"
                    )));
                }
            }
            FamilyId::Thm11Exc1 { n, k } => {
                if k == 0 {
                    return Err(bad("thm11-exc1 needs k >= 1".into()));
                }
                need_even(n, 2 * k + 2, "thm11-exc1")?;
            }
            FamilyId::Thm11Exc2 { k } => {
                if k == 0 {
                    return Err(bad("thm11-exc2 needs k >= 1".into()));
                }
            }
            FamilyId::Thm13F1 | FamilyId::Thm13F2 | FamilyId::Thm13AsPrinted => {}
            FamilyId::Thm13F3 { n } => need_even(n, 6, "thm13-f3")?,
            FamilyId::Thm13Fact3Pendant { n, s } | FamilyId::Thm13Fact3Split { n, s } => {
                if s < 2 || n < 2 * s + 2 || n % 2 == 1 {
                    return Err(bad(format!("fact3 families need s >= 2 and even n >= 2s+2; got n={n}, s={s}")));
                }
            }
            FamilyId::Lem210 { n } => need_even(n, 4, "lem210")?,
            FamilyId::W1 { n } => need_even(n, 6, "w1")?,
            FamilyId::W2 { n } => need_even(n, 8, "w2")?,
        }
        Ok(())
    }

    /// Structural expression of the family (after validation).
    pub fn spec(&self) -> Result<FamilySpec> {
        self.validate()?;
        Ok(match *self {
            FamilyId::Thm11Extremal { n, k: kk, s } => {
                join(k(s), union(vec![k(n + 2 * kk - 2 * s - 1), empty(s - 2 * kk + 1)]))
            }
            FamilyId::Thm11Exc1 { n, k: kk } => join(k(2 * kk), union(vec![k(n - 2 * kk - 1), k(1)])),
            FamilyId::Thm11Exc2 { k: kk } => join(k(2 * kk + 1), empty(3)),
            FamilyId::Thm13F1 => join(k(2), union(vec![k(2), empty(2)])),
            FamilyId::Thm13F2 => join(k(3), union(vec![k(2), empty(3)])),
            FamilyId::Thm13F3 { n } => join(k(1), union(vec![k(2), k(n - 3)])),
            FamilyId::Thm13Fact3Pendant { n, s } => join(k(s), union(vec![pendant(n - 2 * s), empty(s)])),
            FamilyId::Thm13Fact3Split { n, s } => {
                join(k(s), union(vec![k(2), k(n - 2 * s - 1), empty(s - 1)]))
            }
            FamilyId::Thm13AsPrinted => join(k(4), union(vec![pendant(3), empty(4)])),
            FamilyId::Lem210 { n } => join(k(1), union(vec![k(n - 3), empty(2)])),
            FamilyId::W1 { n } => join(k((n - 2) / 2), union(vec![k(2), empty((n - 2) / 2)])),
            FamilyId::W2 { n } => join(k(2), union(vec![pendant(n - 4), empty(2)])),
        })
    }

    pub fn build(&self) -> Result<Graph> {
        build(&self.spec()?)
    }

    /// Order of the built graph, if the parameters are valid.
    pub fn order(&self) -> Result<usize> {
        self.spec()?.order()
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyId::Thm11Extremal { n, k, s } => write!(f, "thm11-extremal:n={n},k={k},s={s}"),
            FamilyId::Thm11Exc1 { n, k } => write!(f, "thm11-exc1:n={n},k={k}"),
            FamilyId::Thm11Exc2 { k } => write!(f, "thm11-exc2:k={k}"),
            FamilyId::Thm13F1 => write!(f, "thm13-f1"),
            FamilyId::Thm13F2 => write!(f, "thm13-f2"),
            FamilyId::Thm13F3 { n } => write!(f, "thm13-f3:n={n}"),
            FamilyId::Thm13Fact3Pendant { n, s } => write!(f, "thm13-fact3-pendant:n={n},s={s}"),
            FamilyId::Thm13Fact3Split { n, s } => write!(f, "thm13-fact3-split:n={n},s={s}"),
            FamilyId::Thm13AsPrinted => write!(f, "thm13-as-printed"),
            FamilyId::Lem210 { n } => write!(f, "lem210:n={n}"),
            FamilyId::W1 { n } => write!(f, "w1:n={n}"),
            FamilyId::W2 { n } => write!(f, "w2:n={n}"),
        }
    }
}

impl FamilySpec {
    /// Number of vertices described.
    pub fn order(&self) -> Result<usize> {
        Ok(match self {
            FamilySpec::Complete(n) | FamilySpec::Empty(n) | FamilySpec::PendantComplete(n) => *n,
            FamilySpec::Union(parts) => parts.iter().map(|p| p.order()).sum::<Result<usize>>()?,
            FamilySpec::Join(a, b) => a.order()? + b.order()?,
            FamilySpec::BridgedCompletes(p, q) => p + q,
            FamilySpec::Named(id) => id.order()?,
        })
    }

    fn check_sizes(&self) -> Result<()> {
        match self {
            FamilySpec::Complete(0) | FamilySpec::Empty(0) => {
                Err(bad("size parameters must be at least 1".into()))
            }
            FamilySpec::PendantComplete(l) if *l < 2 => {
                Err(bad(format!("K_(l-1)^+ needs l >= 2, got {l}")))
            }
            FamilySpec::BridgedCompletes(p, q) if *p == 0 || *q == 0 => {
                Err(bad("bridged completes need p, q >= 1".into()))
            }
            FamilySpec::Union(parts) if parts.is_empty() => Err(bad("empty union".into())),
            FamilySpec::Union(parts) => parts.iter().try_for_each(|p| p.check_sizes()),
            FamilySpec::Join(a, b) => {
                a.check_sizes()?;
                b.check_sizes()
            }
            FamilySpec::Named(id) => id.validate(),
            _ => Ok(()),
        }
    }

    /// Block partition in labeling order. Empty blocks are skipped and
    /// `K_1^+ = K_2` stays a single block.
    fn blocks(&self, offset: usize, out: &mut Vec<VertexSet>) -> Result<usize> {
        let range = |a: usize, b: usize| -> VertexSet { (a..b).collect() };
        Ok(match self {
            FamilySpec::Complete(n) | FamilySpec::Empty(n) => {
                out.push(range(offset, offset + n));
                *n
            }
            FamilySpec::PendantComplete(2) => {
                out.push(range(offset, offset + 2));
                2
            }
            FamilySpec::PendantComplete(l) => {
                let (u, v) = (offset + l - 2, offset + l - 1);
                out.push(range(offset, u));
                out.push(VertexSet::from_slice(&[u]));
                out.push(VertexSet::from_slice(&[v]));
                *l
            }
            FamilySpec::BridgedCompletes(p, q) => {
                let (v, u) = (offset + p - 1, offset + p);
                if *p > 1 {
                    out.push(range(offset, v));
                }
                out.push(VertexSet::from_slice(&[v]));
                out.push(VertexSet::from_slice(&[u]));
                if *q > 1 {
                    out.push(range(u + 1, offset + p + q));
                }
                p + q
            }
            FamilySpec::Union(parts) => {
                let mut used = 0;
                for p in parts {
                    used += p.blocks(offset + used, out)?;
                }
                used
            }
            FamilySpec::Join(a, b) => {
                let na = a.blocks(offset, out)?;
                na + b.blocks(offset + na, out)?
            }
            FamilySpec::Named(id) => id.spec()?.blocks(offset, out)?,
        })
    }
}

/// Builds the graph described by `spec`.
pub fn build(spec: &FamilySpec) -> Result<Graph> {
    spec.check_sizes()?;
    let n = spec.order()?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    build_unchecked(spec)
}

fn build_unchecked(spec: &FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Complete(n) => Graph::complete(*n),
        FamilySpec::Empty(n) => Graph::empty(*n),
        FamilySpec::Union(parts) => {
            let mut g = Graph::empty(0)?;
            for p in parts {
                g = g.disjoint_union(&build_unchecked(p)?)?;
            }
            Ok(g)
        }
        FamilySpec::Join(a, b) => build_unchecked(a)?.join(&build_unchecked(b)?),
        FamilySpec::PendantComplete(l) => {
            Graph::complete(l - 1)?.disjoint_union(&Graph::empty(1)?)?.with_edges(&[(l - 2, l - 1)])
        }
        FamilySpec::BridgedCompletes(p, q) => {
            Graph::complete(*p)?.disjoint_union(&Graph::complete(*q)?)?.with_edges(&[(p - 1, *p)])
        }
        FamilySpec::Named(id) => id.build(),
    }
}

/// The block partition used for quotient matrices, verified equitable.
pub fn canonical_partition(spec: &FamilySpec) -> Result<Partition> {
    let g = build(spec)?;
    let mut blocks = Vec::new();
    spec.blocks(0, &mut blocks)?;
    let p = Partition::new(g.order(), blocks)?;
    if !quotient_matrix(&g, &p)?.equitable {
        return Err(Error::UnsupportedShape(format!("block partition of {spec} is not equitable")));
    }
    Ok(p)
}

/// First candidate whose graph is isomorphic to `g`.
pub fn recognize(g: &Graph, candidates: &[FamilyId]) -> Option<FamilyId> {
    candidates.iter().copied().find(|id| match id.build() {
        Ok(h) => h.order() == g.order() && are_isomorphic(g, &h),
        Err(_) => false,
    })
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "K{n}"),
            FamilySpec::Empty(1) => write!(f, "K1"),
            FamilySpec::Empty(n) => write!(f, "{n}K1"),
            FamilySpec::PendantComplete(l) => write!(f, "K{}^+", l - 1),
            FamilySpec::BridgedCompletes(p, q) => write!(f, "K{p}+K{q}"),
            FamilySpec::Union(parts) => {
                write!(f, "(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " u ")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            FamilySpec::Join(a, b) => write!(f, "({a} v {b})"),
            FamilySpec::Named(id) => write!(f, "{id}"),
        }
    }
}

/// Parses a family expression or a named shortcut.
///
/// Expressions: `Kn`, `K(n)`, `Ks(n)` complete; `En`, `E(n)` empty;
/// `cX` for `c` disjoint copies (`cK1` is the empty graph on `c` vertices);
/// `X^+` on a complete `K(m)` for `K_m^+`; `K(p)+K(q)` bridged completes;
/// `u` / `∪` union and `v` / `∨` join, join binding loosest; parentheses.
///
/// Shortcuts: `thm11-extremal:n=..,k=..,s=..`, `thm11-exc1:n=..,k=..`,
/// `thm11-exc2:k=..`, `thm13-f1`, `thm13-f2`, `thm13-f3:n=..`,
/// `thm13-fact3-pendant:n=..,s=..`, `thm13-fact3-split:n=..,s=..`,
/// `thm13-as-printed`, `lem210:n=..`, `w1:n=..`, `w2:n=..`.
pub fn parse_family(text: &str) -> Result<FamilySpec> {
    let text = text.trim();
    if let Some(id) = parse_named(text)? {
        id.validate()?;
        return Ok(FamilySpec::Named(id));
    }
    let mut p = Parser { chars: text.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 };
    let spec = p.join()?;
    if p.pos != p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    spec.check_sizes()?;
    Ok(spec)
}

fn parse_named(text: &str) -> Result<Option<FamilyId>> {
    let lower = text.to_ascii_lowercase();
    let (name, args) = match lower.split_once(':') {
        Some((a, b)) => (a.trim().to_string(), b.to_string()),
        None => (lower.trim().to_string(), String::new()),
    };
    let known = [
        "thm11-extremal",
        "thm11-exc1",
        "thm11-exc2",
        "thm13-f1",
        "thm13-f2",
        "thm13-f3",
        "thm13-fact3-pendant",
        "thm13-fact3-split",
        "thm13-as-printed",
        "lem210",
        "w1",
        "w2",
    ];
    if !known.contains(&name.as_str()) {
        return Ok(None);
    }
    let mut vals = std::collections::BTreeMap::new();
    for part in args.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| Error::FamilySyntax(format!("expected key=value, found {part:?}")))?;
        let val: usize = val
            .trim()
            .parse()
            .map_err(|_| Error::FamilySyntax(format!("bad number in {part:?}")))?;
        vals.insert(key.trim().to_string(), val);
    }
    let get = |key: &str| {
        vals.get(key)
            .copied()
            .ok_or_else(|| Error::FamilySyntax(format!("{name} needs parameter {key}")))
    };
    let id = match name.as_str() {
        "thm11-extremal" => FamilyId::Thm11Extremal { n: get("n")?, k: get("k")?, s: get("s")? },
        "thm11-exc1" => FamilyId::Thm11Exc1 { n: get("n")?, k: get("k")? },
        "thm11-exc2" => FamilyId::Thm11Exc2 { k: get("k")? },
        "thm13-f1" => FamilyId::Thm13F1,
        "thm13-f2" => FamilyId::Thm13F2,
        "thm13-f3" => FamilyId::Thm13F3 { n: get("n")? },
        "thm13-fact3-pendant" => FamilyId::Thm13Fact3Pendant { n: get("n")?, s: get("s")? },
        "thm13-fact3-split" => FamilyId::Thm13Fact3Split { n: get("n")?, s: get("s")? },
        "thm13-as-printed" => FamilyId::Thm13AsPrinted,
        "lem210" => FamilyId::Lem210 { n: get("n")? },
        "w1" => FamilyId::W1 { n: get("n")? },
        _ => FamilyId::W2 { n: get("n")? },
    };
    Ok(Some(id))
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, msg: &str) -> Error {
        let rest: String = self.chars[self.pos.min(self.chars.len())..].iter().collect();
        Error::FamilySyntax(format!("{msg} at position {} (remaining {rest:?})", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Option<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        self.chars[start..self.pos].iter().collect::<String>().parse().ok()
    }

    fn join(&mut self) -> Result<FamilySpec> {
        let mut left = self.union()?;
        while self.eat('v') || self.eat('∨') {
            let right = self.union()?;
            left = join(left, right);
        }
        Ok(left)
    }

    fn union(&mut self) -> Result<FamilySpec> {
        let mut parts = vec![self.bridged()?];
        while self.eat('u') || self.eat('∪') {
            parts.push(self.bridged()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { FamilySpec::Union(parts) })
    }

    fn bridged(&mut self) -> Result<FamilySpec> {
        let left = self.factor()?;
        if !self.eat('+') {
            return Ok(left);
        }
        let right = self.factor()?;
        match (left, right) {
            (FamilySpec::Complete(p), FamilySpec::Complete(q)) => Ok(FamilySpec::BridgedCompletes(p, q)),
            _ => Err(self.error("'+' joins two complete graphs only")),
        }
    }

    fn factor(&mut self) -> Result<FamilySpec> {
        let copies = self.number();
        let base = self.primary()?;
        let base = if self.peek() == Some('^') {
            self.pos += 1;
            if !self.eat('+') {
                return Err(self.error("expected '+' after '^'"));
            }
            match base {
                FamilySpec::Complete(m) => FamilySpec::PendantComplete(m + 1),
                _ => return Err(self.error("'^+' applies to a complete graph only")),
            }
        } else {
            base
        };
        Ok(match copies {
            None | Some(1) => base,
            Some(0) => return Err(self.error("zero copies")),
            Some(c) => match base {
                FamilySpec::Complete(1) => FamilySpec::Empty(c),
                FamilySpec::Empty(m) => FamilySpec::Empty(c * m),
                other => FamilySpec::Union(vec![other; c]),
            },
        })
    }

    fn size_argument(&mut self) -> Result<usize> {
        if self.eat('(') {
            let n = self.number().ok_or_else(|| self.error("expected a number"))?;
            if !self.eat(')') {
                return Err(self.error("expected ')'"));
            }
            Ok(n)
        } else {
            self.number().ok_or_else(|| self.error("expected a number"))
        }
    }

    fn primary(&mut self) -> Result<FamilySpec> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.join()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some('K') => {
                self.pos += 1;
                if self.peek() == Some('s') {
                    self.pos += 1;
                }
                Ok(FamilySpec::Complete(self.size_argument()?))
            }
            Some('E') => {
                self.pos += 1;
                Ok(FamilySpec::Empty(self.size_argument()?))
            }
            _ => Err(self.error("expected K, E or '('")),
        }
    }
}
