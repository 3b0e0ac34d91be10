//! Exact isomorphism test for small graphs: colour refinement to screen and
//! partition the vertices, then backtracking over colour-compatible maps.

use std::collections::BTreeMap;

use super::{Graph, GraphError};
use crate::budget::Budget;

/// Default backtracking node cap for one isomorphism query.
pub const DEFAULT_ISO_NODES: u64 = 1_000_000;

pub fn isomorphic(a: &Graph, b: &Graph) -> Result<bool, GraphError> {
    isomorphic_with_budget(a, b, DEFAULT_ISO_NODES)
}

/// Like [`isomorphic`] but with an explicit node cap. Exceeding the cap is
/// reported as an error, never as a negative answer.
pub fn isomorphic_with_budget(a: &Graph, b: &Graph, max_nodes: u64) -> Result<bool, GraphError> {
    let n = a.n();
    if n != b.n() || a.m() != b.m() || a.degree_sequence() != b.degree_sequence() {
        return Ok(false);
    }
    if n == 0 || a == b {
        return Ok(true);
    }
    // Dense graphs search faster through their complements.
    let (a, b) = if 4 * a.m() > n * (n - 1) {
        (a.complement(), b.complement())
    } else {
        (a.clone(), b.clone())
    };
    let Some((colors_a, colors_b)) = refine(&a, &b) else {
        return Ok(false);
    };

    let mut class_size: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &colors_a {
        *class_size.entry(c).or_default() += 1;
    }
    let order = search_order(&a, &colors_a, &class_size);
    let rows_a = BitRows::new(&a);
    let rows_b = BitRows::new(&b);

    let mut search = Search {
        a: &rows_a,
        b: &rows_b,
        colors_a: &colors_a,
        colors_b: &colors_b,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        meter: Budget::nodes(max_nodes).meter(),
    };
    search.extend(0)
}

struct BitRows {
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(g: &Graph) -> BitRows {
        let words = g.n().div_ceil(64);
        let mut bits = vec![0; words * g.n()];
        for &(u, v) in g.edges() {
            bits[u * words + v / 64] |= 1 << (v % 64);
            bits[v * words + u / 64] |= 1 << (u % 64);
        }
        BitRows { words, bits }
    }

    #[inline]
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }
}

/// Joint colour refinement on both graphs. `None` when the colour
/// histograms diverge, which proves non-isomorphism.
fn refine(a: &Graph, b: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut ca: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut cb: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    let mut classes = 0;
    loop {
        let signature = |g: &Graph, colors: &[usize], v: usize| {
            let mut around: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
            around.sort_unstable();
            (colors[v], around)
        };
        let sa: Vec<_> = (0..a.n()).map(|v| signature(a, &ca, v)).collect();
        let sb: Vec<_> = (0..b.n()).map(|v| signature(b, &cb, v)).collect();
        let mut palette = BTreeMap::new();
        for s in sa.iter().chain(&sb) {
            let next = palette.len();
            palette.entry(s.clone()).or_insert(next);
        }
        ca = sa.iter().map(|s| palette[s]).collect();
        cb = sb.iter().map(|s| palette[s]).collect();
        let mut ha = ca.clone();
        let mut hb = cb.clone();
        ha.sort_unstable();
        hb.sort_unstable();
        if ha != hb {
            return None;
        }
        if palette.len() == classes {
            return Some((ca, cb));
        }
        classes = palette.len();
    }
}

/// Rarest colour first, then greedily the vertex with most already-placed
/// neighbours so adjacency constraints bite early.
fn search_order(g: &Graph, colors: &[usize], class_size: &BTreeMap<usize, usize>) -> Vec<usize> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), class_size[&colors[v]], v))
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for &w in g.neighbors(next) {
            links[w] += 1;
        }
    }
    order
}

struct Search<'a> {
    a: &'a BitRows,
    b: &'a BitRows,
    colors_a: &'a [usize],
    colors_b: &'a [usize],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
    meter: crate::budget::Meter,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> Result<bool, GraphError> {
        if depth == self.order.len() {
            return Ok(true);
        }
        self.meter.tick()?;
        let v = self.order[depth];
        for w in 0..self.used.len() {
            if self.used[w] || self.colors_b[w] != self.colors_a[v] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&u| self.a.adjacent(u, v) == self.b.adjacent(self.map[u], w));
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.used[w] = false;
        }
        self.map[v] = usize::MAX;
        Ok(false)
    }
}
