//! Multigraphs, simple graphs, canonical labeling and small-graph enumeration.

use std::collections::{BTreeSet, HashSet};

use rand::Rng;

use crate::{Error, Result};

/// Undirected multigraph: self-loops and parallel edges are allowed.
/// Vertices are `0..vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    labels: Vec<String>,
}

impl Multigraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>, labels: Vec<String>) -> Result<Self> {
        if vertices == 0 {
            return Err(Error::domain("graph needs at least one vertex"));
        }
        if edges.len() != labels.len() {
            return Err(Error::domain("one label per edge required"));
        }
        if let Some(&(u, w)) = edges.iter().find(|&&(u, w)| u >= vertices || w >= vertices) {
            return Err(Error::domain(format!(
                "edge ({u},{w}) references a vertex outside 0..{vertices}"
            )));
        }
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::domain("edge labels must be distinct"));
        }
        Ok(Self {
            vertices,
            edges,
            labels,
        })
    }

    /// Edges labeled `e1, e2, ...` in the given order.
    pub fn from_edges(vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let labels = (1..=edges.len()).map(|i| format!("e{i}")).collect();
        Self::new(vertices, edges.to_vec(), labels)
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Self::from_edges(n, &edges).expect("complete graph is valid")
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("cycle is valid")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("path is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn has_self_loop(&self) -> bool {
        self.edges.iter().any(|&(u, w)| u == w)
    }

    /// Number of connected components of the spanning subgraph whose edges are
    /// those with `keep(i)` true.
    pub fn components_with(&self, keep: impl Fn(usize) -> bool) -> usize {
        let mut ds = DisjointSets::new(self.vertices);
        let mut merged = 0;
        for (i, &(u, w)) in self.edges.iter().enumerate() {
            if keep(i) && ds.union(u, w) {
                merged += 1;
            }
        }
        self.vertices - merged
    }

    pub fn components(&self) -> usize {
        self.components_with(|_| true)
    }

    pub fn is_connected(&self) -> bool {
        self.components() == 1
    }

    /// Size of a spanning forest of the edges in `mask`.
    pub fn forest_rank(&self, mask: u64) -> usize {
        let mut ds = DisjointSets::new(self.vertices);
        let mut rank = 0;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            let (u, w) = self.edges[i];
            if ds.union(u, w) {
                rank += 1;
            }
        }
        rank
    }

    /// Collapse parallel edges; `None` if there is a self-loop.
    pub fn to_simple(&self) -> Option<SimpleGraph> {
        if self.has_self_loop() {
            return None;
        }
        let mut g = SimpleGraph::empty(self.vertices);
        for &(u, w) in &self.edges {
            g.add_edge(u, w);
        }
        Some(g)
    }

    /// Graph with edge `i` removed.
    pub fn delete_edge(&self, i: usize) -> Multigraph {
        let mut g = self.clone();
        g.edges.remove(i);
        g.labels.remove(i);
        g
    }

    /// Graph with edge `i` contracted; its endpoints merge into the lower vertex
    /// and the higher vertex index is removed. Other edges parallel to `i`
    /// become self-loops.
    pub fn contract_edge(&self, i: usize) -> Multigraph {
        let (a, b) = self.edges[i];
        let (keep, gone) = (a.min(b), a.max(b));
        if keep == gone {
            return self.delete_edge(i);
        }
        let remap = |x: usize| {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let mut edges = Vec::with_capacity(self.edges.len() - 1);
        let mut labels = Vec::with_capacity(self.edges.len() - 1);
        for (j, &(u, w)) in self.edges.iter().enumerate() {
            if j != i {
                edges.push((remap(u), remap(w)));
                labels.push(self.labels[j].clone());
            }
        }
        Multigraph {
            vertices: self.vertices - 1,
            edges,
            labels,
        }
    }
}

pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Simple graph on at most 64 vertices, adjacency stored as bit rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<u64>,
}

/// Memo key for a simple graph: its canonical code when labeling search
/// finished, otherwise the labeled code. Both are exact encodings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphKey {
    Canonical(usize, Vec<u64>),
    Labeled(usize, Vec<u64>),
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= 64, "simple graphs are limited to 64 vertices");
        Self { adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, w) in edges {
            g.add_edge(u, w);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, w: usize) {
        if u != w {
            self.adj[u] |= 1 << w;
            self.adj[w] |= 1 << u;
        }
    }

    pub fn remove_edge(&mut self, u: usize, w: usize) {
        self.adj[u] &= !(1 << w);
        self.adj[w] &= !(1 << u);
    }

    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        self.adj[u] >> w & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|u| (u + 1..n).filter(move |&w| self.has_edge(u, w)).map(move |w| (u, w)))
            .collect()
    }

    pub fn to_multigraph(&self) -> Multigraph {
        Multigraph::from_edges(self.n().max(1), &self.edges()).expect("simple graph is valid")
    }

    /// Vertex sets of the connected components, each as a bitmask.
    pub fn component_masks(&self) -> Vec<u64> {
        let n = self.n();
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.component_masks().len() == 1
    }

    /// Induced subgraph on the vertices of `mask`, relabeled in increasing order.
    pub fn induced(&self, mask: u64) -> SimpleGraph {
        let verts: Vec<usize> = (0..self.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let mut g = SimpleGraph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &w) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, w) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn remove_vertex(&self, v: usize) -> SimpleGraph {
        let mask = (if self.n() >= 64 { u64::MAX } else { (1u64 << self.n()) - 1 }) & !(1u64 << v);
        self.induced(mask)
    }

    /// Merge `b` into `a` (neighbors unioned, parallel edges collapsed) and
    /// delete `b`.
    pub fn merge_vertices(&self, a: usize, b: usize) -> SimpleGraph {
        let mut g = self.clone();
        let nb = g.adj[b] & !(1u64 << a);
        for w in bits(nb) {
            g.add_edge(a, w);
        }
        g.remove_vertex(b)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    fn code_under(&self, labeling: &[usize]) -> Vec<u64> {
        // labeling[v] = new label of v
        let n = self.n();
        let mut rows = vec![0u64; n];
        for u in 0..n {
            let lu = labeling[u];
            for w in bits(self.adj[u]) {
                rows[lu] |= 1 << labeling[w];
            }
        }
        rows
    }

    /// Exact canonical code: equal iff the graphs are isomorphic.
    pub fn canonical_code(&self) -> Vec<u64> {
        canonical_search(self, usize::MAX).expect("unbounded search always finishes")
    }

    /// Key for memo tables, trying canonical labeling within `budget` leaves.
    pub fn memo_key(&self, budget: usize) -> GraphKey {
        match canonical_search(self, budget) {
            Some(code) => GraphKey::Canonical(self.n(), code),
            None => GraphKey::Labeled(self.n(), self.adj.clone()),
        }
    }
}

pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

type Partition = Vec<Vec<usize>>;

/// Refine an ordered partition until equitable. Cells split by neighbor
/// counts into each splitter cell, new pieces ordered by count.
fn refine(g: &SimpleGraph, mut cells: Partition) -> Partition {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter: u64 = cells[s].iter().fold(0, |m, &v| m | 1u64 << v);
            let mut next: Partition = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell
                    .iter()
                    .map(|&v| ((g.adj[v] & splitter).count_ones(), v))
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() != cells.len() {
                changed = true;
            }
            cells = next;
            s += 1;
        }
        if !changed {
            return cells;
        }
    }
}

fn canonical_search(g: &SimpleGraph, budget: usize) -> Option<Vec<u64>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    let start = refine(g, vec![(0..n).collect()]);
    let mut best: Option<Vec<u64>> = None;
    let mut leaves = 0usize;
    let mut stack = vec![start];
    while let Some(p) = stack.pop() {
        match p.iter().position(|c| c.len() > 1) {
            None => {
                leaves += 1;
                if leaves > budget {
                    return None;
                }
                let mut labeling = vec![0; n];
                for (i, c) in p.iter().enumerate() {
                    labeling[c[0]] = i;
                }
                let code = g.code_under(&labeling);
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            }
            Some(target) => {
                for &v in p[target].iter().rev() {
                    let mut q = p.clone();
                    let rest: Vec<usize> = q[target].iter().copied().filter(|&x| x != v).collect();
                    q.splice(target..=target, [vec![v], rest]);
                    stack.push(refine(g, q));
                }
            }
        }
    }
    best
}

/// All simple graphs on exactly `n` vertices up to isomorphism, built by
/// adding one vertex at a time and rejecting isomorphic duplicates by
/// canonical code. Deterministic order (sorted by canonical code).
pub fn all_graphs(n: usize) -> Vec<SimpleGraph> {
    let mut layer: Vec<SimpleGraph> = vec![SimpleGraph::empty(0)];
    for k in 0..n {
        let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
        let mut next = Vec::new();
        for g in &layer {
            for nbhd in 0u64..(1u64 << k) {
                let mut h = SimpleGraph::empty(k + 1);
                for (u, w) in g.edges() {
                    h.add_edge(u, w);
                }
                for w in bits(nbhd) {
                    h.add_edge(k, w);
                }
                let code = h.canonical_code();
                if seen.insert(code.clone()) {
                    next.push((code, h));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        layer = next.into_iter().map(|(_, g)| g).collect();
    }
    layer
}

pub fn connected_graphs(n: usize) -> Vec<SimpleGraph> {
    all_graphs(n).into_iter().filter(|g| g.is_connected()).collect()
}

/// Random connected simple graph on `n` vertices: a random spanning tree plus
/// each remaining pair with probability `density`.
pub fn random_connected_graph<R: Rng>(n: usize, density: f64, rng: &mut R) -> SimpleGraph {
    let mut g = SimpleGraph::empty(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v);
    }
    for u in 0..n {
        for w in u + 1..n {
            if !g.has_edge(u, w) && rng.gen_bool(density) {
                g.add_edge(u, w);
            }
        }
    }
    g
}
