//! Exact solver: a branching algorithm for the disjoint variant plus an
//! iterative-compression driver.
//!
//! The disjoint variant keeps a protected set `S` whose induced subgraph,
//! like the rest of the graph, is already obstruction-free. Three moves
//! apply in priority order:
//!
//! 1. small-set branching: at most three unprotected vertices break
//!    `G[S ∪ {u,v,w}]`, so one of them must be deleted;
//! 2. component branching: an unprotected edge sees two components of
//!    `G[S]`, so delete one endpoint or protect both (merging components);
//! 3. bypass: neither rule applies, so a leaf block of `G - S` can be
//!    short-circuited onto its boundary vertex without changing the answer.
//!
//! On every root-to-leaf path of the branching tree the number of branching
//! nodes is bounded by `k` plus the number of components of `G[S]`, and the
//! recursion depth by `n` plus the same; both facts are tracked and checked.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::obstruction::is_block_graph;

/// A deletion set: removing it leaves a block graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    vertices: VertexSet,
}

impl Solution {
    pub fn new(vertices: VertexSet) -> Self {
        Solution { vertices }
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Instance of the disjoint variant: find a deletion set of size at most
/// `k` avoiding the protected set `s`, where both `G - s` and `G[s]` are
/// already block graphs.
#[derive(Clone, Debug)]
pub struct DisjointInstance {
    pub graph: Graph,
    pub protected: VertexSet,
    pub k: i64,
}

impl DisjointInstance {
    pub fn new(graph: Graph, protected: VertexSet, k: i64) -> Result<Self> {
        for v in &protected {
            if !graph.has_vertex(*v) {
                return Err(Error::UnknownVertex(*v));
            }
        }
        let rest: VertexSet =
            graph.vertices().filter(|v| !protected.contains(v)).collect();
        if !is_block_graph(&graph.induced_subgraph(&rest)) {
            return Err(Error::InvalidDisjointInstance("G - S must be a block graph".into()));
        }
        if !is_block_graph(&graph.induced_subgraph(&protected)) {
            return Err(Error::InvalidDisjointInstance("G[S] must be a block graph".into()));
        }
        Ok(DisjointInstance { graph, protected, k })
    }
}

/// Counters and bound checks collected while solving.
#[derive(Clone, Copy, Debug, Default)]
pub struct SolveStats {
    /// Nodes of the branching tree with at least two children.
    pub branch_nodes: u64,
    /// Short-circuit applications of the bypass move.
    pub bypass_count: u64,
    /// Largest number of branching nodes seen on a root-to-leaf path.
    pub max_branchings_on_path: u64,
    /// Largest recursion depth seen.
    pub max_depth: u64,
    /// False if some path exceeded its `k + component` budget.
    pub branching_bound_ok: bool,
    /// False if recursion depth exceeded `n + k + components`.
    pub depth_bound_ok: bool,
    /// Structural assertions at bypass applications that failed.
    pub bypass_violations: u64,
    /// Compression subproblems attempted by the driver.
    pub compression_calls: u64,
}

impl SolveStats {
    fn fresh() -> Self {
        SolveStats { branching_bound_ok: true, depth_bound_ok: true, ..Default::default() }
    }

    fn merge(&mut self, other: &SolveStats) {
        self.branch_nodes += other.branch_nodes;
        self.bypass_count += other.bypass_count;
        self.max_branchings_on_path = self.max_branchings_on_path.max(other.max_branchings_on_path);
        self.max_depth = self.max_depth.max(other.max_depth);
        self.branching_bound_ok &= other.branching_bound_ok;
        self.depth_bound_ok &= other.depth_bound_ok;
        self.bypass_violations += other.bypass_violations;
        self.compression_calls += other.compression_calls;
    }
}

/// Smallest set of at most three unprotected vertices whose union with the
/// protected set induces a non-block graph; sizes are tried in order 1, 2,
/// 3, lexicographically within each size.
pub fn find_violating_triple(g: &Graph, s: &VertexSet) -> Option<Vec<VertexId>> {
    let outside: Vec<VertexId> = g.vertices().filter(|v| !s.contains(v)).collect();
    let breaks = |extra: &[VertexId]| {
        let mut sub = s.clone();
        sub.extend(extra.iter().copied());
        !is_block_graph(&g.induced_subgraph(&sub))
    };
    for &u in &outside {
        if breaks(&[u]) {
            return Some(vec![u]);
        }
    }
    for (i, &u) in outside.iter().enumerate() {
        for &v in &outside[i + 1..] {
            if breaks(&[u, v]) {
                return Some(vec![u, v]);
            }
        }
    }
    for (i, &u) in outside.iter().enumerate() {
        for (j, &v) in outside.iter().enumerate().skip(i + 1) {
            for &w in &outside[j + 1..] {
                if breaks(&[u, v, w]) {
                    return Some(vec![u, v, w]);
                }
            }
        }
    }
    None
}

/// An edge `uv` of `G - S` whose endpoints have protected neighbors `x, y`
/// in distinct components of `G[S]`.
pub fn find_cross_edge(
    g: &Graph,
    s: &VertexSet,
) -> Option<(VertexId, VertexId, VertexId, VertexId)> {
    let comps = g.induced_subgraph(s).components();
    if comps.len() < 2 {
        return None;
    }
    let comp_of = |v: VertexId| comps.iter().position(|c| c.contains(&v));
    for (u, v) in g.edges() {
        if s.contains(&u) || s.contains(&v) {
            continue;
        }
        let mut seen: Vec<(usize, VertexId)> = Vec::new();
        for &end in &[u, v] {
            for &x in g.neighbors(end) {
                if !s.contains(&x) {
                    continue;
                }
                let c = comp_of(x).unwrap();
                if let Some(&(c0, x0)) = seen.first() {
                    if c != c0 {
                        return Some((u, v, x0, x));
                    }
                } else {
                    seen.push((c, x));
                }
            }
        }
    }
    None
}

/// The bypass move: remove the interior of a leaf block `b_block` of
/// `G - S` and wire its boundary vertex to the block's protected
/// neighborhood. With an empty boundary the whole component is removed.
pub fn bypass(g: &Graph, s: &VertexSet, b_block: &VertexSet, boundary: Option<VertexId>) -> Result<Graph> {
    if find_violating_triple(g, s).is_some() || find_cross_edge(g, s).is_some() {
        return Err(Error::Internal("bypass applied to a reducible instance".into()));
    }
    if b_block.len() == 1 && boundary.is_none() {
        let u = *b_block.first().unwrap();
        let touched = g
            .induced_subgraph(s)
            .components()
            .into_iter()
            .filter(|c| g.neighbors(u).iter().any(|x| c.contains(x)))
            .count();
        if touched >= 2 {
            return Err(Error::Internal(
                "single-vertex component spanning several protected components needs branching"
                    .into(),
            ));
        }
    }
    Ok(bypass_unchecked(g, s, b_block, boundary))
}

fn bypass_unchecked(g: &Graph, s: &VertexSet, b_block: &VertexSet, boundary: Option<VertexId>) -> Graph {
    let mut out = g.clone();
    match boundary {
        Some(b) => {
            let n_s: VertexSet =
                g.neighborhood_of_set(b_block).intersection(s).copied().collect();
            for &v in b_block {
                if v != b {
                    out.remove_vertex_mut(v);
                }
            }
            for &w in &n_s {
                out.add_edge_mut(b, w);
            }
        }
        None => {
            for &v in b_block {
                out.remove_vertex_mut(v);
            }
        }
    }
    out
}

struct Ctx {
    branch_bound: u64,
    depth_bound: u64,
    stats: SolveStats,
}

/// Solves the disjoint variant. Returns a minimal-budget certificate or
/// `None` iff no solution of size at most `d.k` avoiding `d.protected`
/// exists.
pub fn block_disjoint(d: &DisjointInstance) -> Result<Option<Solution>> {
    Ok(block_disjoint_with_stats(d)?.0)
}

/// As [`block_disjoint`], also reporting search-tree statistics.
pub fn block_disjoint_with_stats(d: &DisjointInstance) -> Result<(Option<Solution>, SolveStats)> {
    // Re-validate: public entry point; the recursion preserves this.
    let d = DisjointInstance::new(d.graph.clone(), d.protected.clone(), d.k)?;
    let ell = d.graph.induced_subgraph(&d.protected).components().len() as u64;
    let kk = d.k.max(0) as u64;
    let mut ctx = Ctx {
        branch_bound: kk + ell,
        depth_bound: d.graph.n() as u64 + kk + ell,
        stats: SolveStats::fresh(),
    };
    let sol = rec(&d.graph, &d.protected, d.k, 0, 0, &mut ctx);
    Ok((sol.map(Solution::new), ctx.stats))
}

fn rec(
    g: &Graph,
    s: &VertexSet,
    k: i64,
    depth: u64,
    branchings: u64,
    ctx: &mut Ctx,
) -> Option<VertexSet> {
    ctx.stats.max_depth = ctx.stats.max_depth.max(depth);
    ctx.stats.max_branchings_on_path = ctx.stats.max_branchings_on_path.max(branchings);
    if depth > ctx.depth_bound {
        ctx.stats.depth_bound_ok = false;
        debug_assert!(false, "depth bound exceeded");
    }
    if branchings > ctx.branch_bound {
        ctx.stats.branching_bound_ok = false;
        debug_assert!(false, "branching bound exceeded");
    }

    if k < 0 {
        return None;
    }
    if is_block_graph(g) {
        return Some(VertexSet::new());
    }
    if k == 0 {
        // The graph is not a block graph, and G[S] is, so unprotected
        // vertices remain but the budget is spent.
        return None;
    }

    if let Some(triple) = find_violating_triple(g, s) {
        if triple.len() >= 2 {
            ctx.stats.branch_nodes += 1;
        }
        let child_branchings = branchings + if triple.len() >= 2 { 1 } else { 0 };
        for &u in &triple {
            let gu = g.delete_vertex(u).unwrap();
            if let Some(mut sol) = rec(&gu, s, k - 1, depth + 1, child_branchings, ctx) {
                sol.insert(u);
                return Some(sol);
            }
        }
        return None;
    }

    if let Some((u, v, _x, _y)) = find_cross_edge(g, s) {
        ctx.stats.branch_nodes += 1;
        for &del in &[u, v] {
            let gd = g.delete_vertex(del).unwrap();
            if let Some(mut sol) = rec(&gd, s, k - 1, depth + 1, branchings + 1, ctx) {
                sol.insert(del);
                return Some(sol);
            }
        }
        let mut s2 = s.clone();
        s2.insert(u);
        s2.insert(v);
        debug_assert!(is_block_graph(&g.induced_subgraph(&s2)));
        debug_assert!(
            g.induced_subgraph(&s2).components().len()
                < g.induced_subgraph(s).components().len(),
            "protecting a cross edge must merge components"
        );
        return rec(g, &s2, k, depth + 1, branchings + 1, ctx);
    }

    // Irreducible: handle the first leaf block of G - S.
    let rest: VertexSet = g.vertices().filter(|v| !s.contains(v)).collect();
    debug_assert!(!rest.is_empty());
    let dec = g.induced_subgraph(&rest).block_decomposition();
    let leaves = dec.leaf_blocks();
    let (block, boundary) = leaves.first().expect("a nonempty graph has a leaf block");

    // A single-vertex component is invisible to component branching, so a
    // vertex whose protected neighborhood spans several components of G[S]
    // needs its own two-way branch: delete it, or protect it (which merges
    // those components). With at most one touched component its
    // neighborhood sits inside one clique block, it lies in no
    // obstruction, and plain deletion is sound.
    if block.len() == 1 && boundary.is_none() {
        let u = *block.first().unwrap();
        let s_comps = g.induced_subgraph(s).components();
        let touched = s_comps
            .iter()
            .filter(|c| g.neighbors(u).iter().any(|x| c.contains(x)))
            .count();
        if touched >= 2 {
            ctx.stats.branch_nodes += 1;
            let gu = g.delete_vertex(u).unwrap();
            if let Some(mut sol) = rec(&gu, s, k - 1, depth + 1, branchings + 1, ctx) {
                sol.insert(u);
                return Some(sol);
            }
            let mut s2 = s.clone();
            s2.insert(u);
            debug_assert!(is_block_graph(&g.induced_subgraph(&s2)));
            debug_assert!(
                g.induced_subgraph(&s2).components().len() < s_comps.len(),
                "protecting a junction vertex must merge components"
            );
            return rec(g, &s2, k, depth + 1, branchings + 1, ctx);
        }
    }

    check_bypass_invariants(g, s, block, ctx);
    ctx.stats.bypass_count += 1;
    let g2 = bypass_unchecked(g, s, block, *boundary);
    debug_assert!(g2.n() < g.n());
    rec(&g2, s, k, depth + 1, branchings, ctx)
}

/// Structural facts that must hold whenever bypass fires on an irreducible
/// instance: the protected neighborhood of the leaf block sits inside a
/// single block of `G[S]`; `G[S ∪ B]` is a block graph; and some block
/// vertex sees the entire protected neighborhood.
fn check_bypass_invariants(g: &Graph, s: &VertexSet, block: &VertexSet, ctx: &mut Ctx) {
    let n_s: VertexSet = g.neighborhood_of_set(block).intersection(s).copied().collect();
    let mut ok = true;

    if !n_s.is_empty() {
        let sdec = g.induced_subgraph(s).block_decomposition();
        ok &= sdec.blocks().iter().any(|sb| n_s.is_subset(sb));
    }

    let mut union = s.clone();
    union.extend(block.iter().copied());
    ok &= is_block_graph(&g.induced_subgraph(&union));

    ok &= block.iter().any(|&u| {
        let nu: VertexSet = g.neighbors(u).intersection(s).copied().collect();
        nu == n_s
    });

    if !ok {
        ctx.stats.bypass_violations += 1;
        debug_assert!(false, "bypass structural invariants violated");
    }
}

/// Exact solve by iterative compression over the vertices in increasing id
/// order. Returns a deletion set of size at most `k`, or `None` iff none
/// exists. The returned set is re-verified before being handed out.
pub fn solve(g: &Graph, k: usize) -> Result<Option<Solution>> {
    Ok(solve_with_stats(g, k)?.0)
}

/// As [`solve`], also reporting aggregated search statistics.
pub fn solve_with_stats(g: &Graph, k: usize) -> Result<(Option<Solution>, SolveStats)> {
    let mut stats = SolveStats::fresh();
    let ids: Vec<VertexId> = g.vertices().collect();
    let mut current = VertexSet::new();
    let mut prefix = VertexSet::new();

    for &v in &ids {
        prefix.insert(v);
        current.insert(v);
        if current.len() <= k {
            continue;
        }
        // |current| = k + 1: compress on the prefix graph.
        let gi = g.induced_subgraph(&prefix);
        let mut compressed: Option<VertexSet> = None;
        let members: Vec<VertexId> = current.iter().copied().collect();
        'outer: for take in 0..=k.min(members.len()) {
            let mut chooser = SubsetIter::new(members.len(), take);
            while let Some(picked) = chooser.next_subset() {
                let inter: VertexSet = picked.iter().map(|&i| members[i]).collect();
                let protected: VertexSet = current.difference(&inter).copied().collect();
                if !is_block_graph(&gi.induced_subgraph(&protected)) {
                    // The protected remainder persists in every extension,
                    // so no solution disjoint from it can exist.
                    continue;
                }
                let gminus = gi.induced_delete(&inter).unwrap();
                stats.compression_calls += 1;
                let d = DisjointInstance::new(gminus, protected, (k - inter.len()) as i64)?;
                let (sol, sub) = block_disjoint_with_stats(&d)?;
                stats.merge(&sub);
                if let Some(found) = sol {
                    let mut full: VertexSet = inter;
                    full.extend(found.vertices().iter().copied());
                    compressed = Some(full);
                    break 'outer;
                }
            }
        }
        match compressed {
            Some(sol) => current = sol,
            None => return Ok((None, stats)),
        }
    }

    debug_assert!(current.len() <= k);
    if !crate::oracle::verify(g, &current, k) {
        return Err(Error::Internal("solver returned a non-verifying set".into()));
    }
    Ok((Some(Solution::new(current)), stats))
}

/// Lexicographic fixed-size subsets of `0..n`, smallest members first.
struct SubsetIter {
    n: usize,
    idx: Vec<usize>,
    fresh: bool,
}

impl SubsetIter {
    fn new(n: usize, k: usize) -> Self {
        SubsetIter { n, idx: (0..k).collect(), fresh: true }
    }

    fn next_subset(&mut self) -> Option<&[usize]> {
        let k = self.idx.len();
        if self.fresh {
            self.fresh = false;
            if k > self.n {
                return None;
            }
            return Some(&self.idx);
        }
        if k == 0 {
            return None;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if self.idx[i] != i + self.n - k {
                break;
            }
        }
        self.idx[i] += 1;
        for j in i + 1..k {
            self.idx[j] = self.idx[j - 1] + 1;
        }
        Some(&self.idx)
    }
}
