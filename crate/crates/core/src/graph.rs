//! Simple undirected graph with stable vertex identities, plus the block
//! (biconnected component) decomposition that nearly everything else is
//! built on.
//!
//! Vertices are identified by `u32` ids that survive deletions and
//! contractions. All editing operations are pure: they return a new graph
//! and leave the receiver untouched, so reduction traces stay replayable.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

pub type VertexId = u32;

pub type VertexSet = BTreeSet<VertexId>;

/// Simple undirected graph: no loops, no parallel edges, symmetric adjacency.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<VertexId, VertexSet>,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    /// Builds a graph on vertices `1..=n` from an edge list. Duplicate edge
    /// listings collapse to a single edge; loops and out-of-range ids are
    /// rejected.
    pub fn build(n: u32, edges: &[(VertexId, VertexId)]) -> Result<Graph> {
        let mut g = Graph::new();
        for v in 1..=n {
            g.adj.insert(v, VertexSet::new());
        }
        for &(u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::IdOutOfRange(w));
                }
            }
            g.add_edge_mut(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from explicit vertex ids and edges, without the
    /// contiguous-id requirement of [`Graph::build`].
    pub fn from_parts(vertices: impl IntoIterator<Item = VertexId>, edges: &[(VertexId, VertexId)]) -> Result<Graph> {
        let mut g = Graph::new();
        for v in vertices {
            g.adj.entry(v).or_default();
        }
        for &(u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            for w in [u, v] {
                if !g.adj.contains_key(&w) {
                    return Err(Error::UnknownVertex(w));
                }
            }
            g.add_edge_mut(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.values().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    pub fn max_vertex_id(&self) -> Option<VertexId> {
        self.adj.keys().next_back().copied()
    }

    /// Neighborhood of `v`. Panics if `v` is absent; callers validate ids at
    /// the API boundary.
    pub fn neighbors(&self, v: VertexId) -> &VertexSet {
        &self.adj[&v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[&v].len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, nbrs)| nbrs.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    /// Neighbors of the set `xs` (outside `xs`).
    pub fn neighborhood_of_set(&self, xs: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for &x in xs {
            for &u in self.neighbors(x) {
                if !xs.contains(&u) {
                    out.insert(u);
                }
            }
        }
        out
    }

    pub(crate) fn add_vertex_mut(&mut self, v: VertexId) {
        self.adj.entry(v).or_default();
    }

    pub(crate) fn add_edge_mut(&mut self, u: VertexId, v: VertexId) {
        debug_assert!(u != v);
        debug_assert!(self.adj.contains_key(&u) && self.adj.contains_key(&v));
        self.adj.get_mut(&u).unwrap().insert(v);
        self.adj.get_mut(&v).unwrap().insert(u);
    }

    pub(crate) fn remove_edge_mut(&mut self, u: VertexId, v: VertexId) {
        if let Some(s) = self.adj.get_mut(&u) {
            s.remove(&v);
        }
        if let Some(s) = self.adj.get_mut(&v) {
            s.remove(&u);
        }
    }

    pub(crate) fn remove_vertex_mut(&mut self, v: VertexId) {
        if let Some(nbrs) = self.adj.remove(&v) {
            for u in nbrs {
                self.adj.get_mut(&u).unwrap().remove(&v);
            }
        }
    }

    /// Returns `G - X`. Surviving ids are unchanged.
    pub fn induced_delete(&self, xs: &VertexSet) -> Result<Graph> {
        for &x in xs {
            if !self.has_vertex(x) {
                return Err(Error::UnknownVertex(x));
            }
        }
        let mut g = self.clone();
        for &x in xs {
            g.remove_vertex_mut(x);
        }
        Ok(g)
    }

    /// Returns `G - v`.
    pub fn delete_vertex(&self, v: VertexId) -> Result<Graph> {
        if !self.has_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        let mut g = self.clone();
        g.remove_vertex_mut(v);
        Ok(g)
    }

    /// Returns the subgraph induced by `keep`.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Graph {
        let mut g = Graph::new();
        for &v in keep {
            if self.has_vertex(v) {
                g.adj.insert(v, VertexSet::new());
            }
        }
        for &v in keep {
            if let Some(nbrs) = self.adj.get(&v) {
                for &u in nbrs {
                    if u > v && keep.contains(&u) {
                        g.add_edge_mut(u, v);
                    }
                }
            }
        }
        g
    }

    /// Contracts the edge `uv`, merging `v` into `u`. Loops and parallel
    /// edges produced by the merge are dropped.
    pub fn contract_edge(&self, u: VertexId, v: VertexId) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut g = self.clone();
        let nbrs: Vec<VertexId> = g.neighbors(v).iter().copied().collect();
        g.remove_vertex_mut(v);
        for w in nbrs {
            if w != u {
                g.add_edge_mut(u, w);
            }
        }
        Ok(g)
    }

    /// Connected components, sorted by their minimum vertex id.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut comps = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut stack = vec![v];
            seen.insert(v);
            while let Some(x) = stack.pop() {
                comp.insert(x);
                for &u in self.neighbors(x) {
                    if seen.insert(u) {
                        stack.push(u);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    /// Number of edges whose both endpoints have degree at least 3. The
    /// progress measure of the rewiring rule is `n + m*`.
    pub fn m_star(&self) -> usize {
        self.edges().filter(|&(u, v)| self.degree(u) >= 3 && self.degree(v) >= 3).count()
    }

    /// Partition of the vertices into maximal classes of pairwise true
    /// twins (adjacent vertices with identical closed neighborhoods).
    /// Singleton classes are included. Classes are sorted by minimum id.
    pub fn true_twin_classes(&self) -> Vec<VertexSet> {
        let mut by_closed: BTreeMap<Vec<VertexId>, VertexSet> = BTreeMap::new();
        for v in self.vertices() {
            let mut closed: Vec<VertexId> = self.neighbors(v).iter().copied().collect();
            closed.push(v);
            closed.sort_unstable();
            by_closed.entry(closed).or_default().insert(v);
        }
        let mut classes: Vec<VertexSet> = by_closed.into_values().collect();
        classes.sort_by_key(|c| *c.first().unwrap());
        classes
    }

    /// Block decomposition: blocks, cut vertices and the block-cut tree.
    /// Isolated vertices form single-vertex blocks.
    pub fn block_decomposition(&self) -> BlockDecomposition {
        let ids: Vec<VertexId> = self.vertices().collect();
        let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = ids.len();

        const UNSET: usize = usize::MAX;
        let mut disc = vec![UNSET; n];
        let mut low = vec![0usize; n];
        let mut parent = vec![UNSET; n];
        let mut timer = 0usize;
        let mut is_cut = vec![false; n];
        let mut blocks: Vec<VertexSet> = Vec::new();
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();

        // Iterative DFS; each frame tracks the neighbor iteration position.
        for root in 0..n {
            if disc[root] != UNSET {
                continue;
            }
            if self.neighbors(ids[root]).is_empty() {
                disc[root] = timer;
                timer += 1;
                let mut b = VertexSet::new();
                b.insert(ids[root]);
                blocks.push(b);
                continue;
            }
            let mut root_children = 0usize;
            let mut stack: Vec<(usize, Vec<usize>, usize)> = Vec::new();
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let nbrs: Vec<usize> = self.neighbors(ids[root]).iter().map(|w| index[w]).collect();
            stack.push((root, nbrs, 0));
            while let Some(&mut (u, ref nbrs, ref mut pos)) = stack.last_mut() {
                if *pos < nbrs.len() {
                    let w = nbrs[*pos];
                    *pos += 1;
                    if disc[w] == UNSET {
                        parent[w] = u;
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        edge_stack.push((u, w));
                        if u == root {
                            root_children += 1;
                        }
                        let wn: Vec<usize> = self.neighbors(ids[w]).iter().map(|x| index[x]).collect();
                        stack.push((w, wn, 0));
                    } else if w != parent[u] && disc[w] < disc[u] {
                        edge_stack.push((u, w));
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (p, _, _)) = stack.last_mut() {
                        low[p] = low[p].min(low[u]);
                        if low[u] >= disc[p] {
                            // Pop one biconnected component off the edge stack,
                            // up to and including the tree edge (p, u).
                            if p != root {
                                is_cut[p] = true;
                            }
                            let mut b = VertexSet::new();
                            while let Some((x, y)) = edge_stack.pop() {
                                b.insert(ids[x]);
                                b.insert(ids[y]);
                                if (x, y) == (p, u) {
                                    break;
                                }
                            }
                            blocks.push(b);
                        }
                    }
                }
            }
            // The DFS root is a cut vertex iff it has >= 2 tree children.
            is_cut[root] = root_children >= 2;
        }

        blocks.sort_by_key(|b| *b.first().unwrap());
        let cut_vertices: VertexSet =
            (0..n).filter(|&i| is_cut[i]).map(|i| ids[i]).collect();
        let tree_edges: Vec<(usize, VertexId)> = blocks
            .iter()
            .enumerate()
            .flat_map(|(bi, b)| {
                cut_vertices.iter().copied().filter(move |c| b.contains(c)).map(move |c| (bi, c))
            })
            .collect();
        BlockDecomposition { blocks, cut_vertices, tree_edges }
    }
}

/// Blocks, cut vertices and the bipartite block-cut tree of a graph.
///
/// A node pair `(B, c)` is a tree edge iff the cut vertex `c` lies in the
/// block `B`; the resulting bipartite graph is a forest.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    blocks: Vec<VertexSet>,
    cut_vertices: VertexSet,
    tree_edges: Vec<(usize, VertexId)>,
}

impl BlockDecomposition {
    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn cut_vertices(&self) -> &VertexSet {
        &self.cut_vertices
    }

    pub fn is_cut_vertex(&self, v: VertexId) -> bool {
        self.cut_vertices.contains(&v)
    }

    pub fn tree_edges(&self) -> &[(usize, VertexId)] {
        &self.tree_edges
    }

    /// Blocks containing at most one cut vertex, with their boundary (the
    /// cut vertex, if any). Sorted by the block's minimum vertex id.
    pub fn leaf_blocks(&self) -> Vec<(&VertexSet, Option<VertexId>)> {
        self.blocks
            .iter()
            .filter_map(|b| {
                let cuts: Vec<VertexId> =
                    b.iter().copied().filter(|v| self.cut_vertices.contains(v)).collect();
                match cuts.len() {
                    0 => Some((b, None)),
                    1 => Some((b, Some(cuts[0]))),
                    _ => None,
                }
            })
            .collect()
    }

    /// True iff the block-cut tree contains no cycle. Diagnostic used by
    /// the test suite; holds for every decomposition we produce.
    pub fn tree_is_acyclic(&self) -> bool {
        // Union-find over block nodes and cut-vertex nodes.
        let cut_index: BTreeMap<VertexId, usize> =
            self.cut_vertices.iter().enumerate().map(|(i, &c)| (c, self.blocks.len() + i)).collect();
        let mut parent: Vec<usize> = (0..self.blocks.len() + cut_index.len()).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for &(bi, c) in &self.tree_edges {
            let a = find(&mut parent, bi);
            let b = find(&mut parent, cut_index[&c]);
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }
}
