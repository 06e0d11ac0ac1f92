//! Ground-truth brute force, solution verification and seeded instance
//! generators.
//!
//! The brute-force recognizer here deliberately avoids the block
//! decomposition route used by the rest of the crate: it tests chordality
//! (maximum cardinality search + perfect elimination check) and
//! diamond-freeness directly, so oracle and solver validate each other
//! through independent code paths.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexId, VertexSet};
use crate::obstruction::is_block_graph;
use crate::solver::Solution;

/// Parameters for a planted instance: a random block graph on `n - k`
/// vertices plus `k` noise vertices with random edges. The construction
/// guarantees a deletion set of size at most `k`.
#[derive(Clone, Copy, Debug)]
pub struct PlantedSpec {
    pub n: u32,
    pub k: u32,
    pub seed: u64,
}

/// Smallest `s <= kmax` admitting a deletion set of size `s`, with the
/// lexicographically least witness, found by enumerating vertex subsets in
/// increasing size.
pub fn min_deletion_bruteforce(g: &Graph, kmax: usize) -> Option<(usize, Solution)> {
    let ids: Vec<VertexId> = g.vertices().collect();
    let n = ids.len();
    if n <= 64 {
        let adj = mask_adjacency(g, &ids);
        let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
        let mut combo = Combinations::new(n);
        for s in 0..=kmax.min(n) {
            combo.reset(s);
            while let Some(subset) = combo.next_mask() {
                if is_block_graph_masked(&adj, full & !subset) {
                    let witness: VertexSet = (0..n)
                        .filter(|i| subset >> i & 1 == 1)
                        .map(|i| ids[i])
                        .collect();
                    return Some((s, Solution::new(witness)));
                }
            }
        }
        return None;
    }
    // Generic fallback for graphs too large for the bitmask path; the same
    // subset order, against the same chordal + diamond-free recognition.
    let mut stack: Vec<VertexId> = Vec::new();
    for s in 0..=kmax.min(n) {
        if let Some(witness) = search_subsets(g, &ids, &mut stack, 0, s) {
            return Some((s, Solution::new(witness)));
        }
    }
    None
}

fn search_subsets(
    g: &Graph,
    ids: &[VertexId],
    chosen: &mut Vec<VertexId>,
    from: usize,
    left: usize,
) -> Option<VertexSet> {
    if left == 0 {
        let del: VertexSet = chosen.iter().copied().collect();
        let h = g.induced_delete(&del).unwrap();
        let hids: Vec<VertexId> = h.vertices().collect();
        let adj: Vec<VertexSet> = hids.iter().map(|&v| h.neighbors(v).clone()).collect();
        if is_block_graph_generic(&hids, &adj) {
            return Some(del);
        }
        return None;
    }
    for i in from..=ids.len().saturating_sub(left) {
        chosen.push(ids[i]);
        if let Some(found) = search_subsets(g, ids, chosen, i + 1, left - 1) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// True iff `|s| <= k` and `G - s` is a block graph.
pub fn verify(g: &Graph, s: &VertexSet, k: usize) -> bool {
    if s.len() > k || s.iter().any(|v| !g.has_vertex(*v)) {
        return false;
    }
    is_block_graph(&g.induced_delete(s).unwrap())
}

/// Deterministic planted instance: random block graph plus `spec.k` noise
/// vertices. Vertex ids are `1..=spec.n`.
pub fn gen_planted(spec: PlantedSpec) -> Graph {
    assert!(spec.n >= spec.k, "need n >= k");
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let base = spec.n - spec.k;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut placed: Vec<VertexId> = Vec::new();
    let mut next = 1u32;

    if base >= 1 {
        let size = if base == 1 { 1 } else { rng.random_range(2..=6).min(base) };
        let block: Vec<VertexId> = (next..next + size).collect();
        next += size;
        clique_edges(&block, &mut edges);
        placed.extend(&block);
    }
    while next <= base {
        // Glue a fresh clique block onto a random existing cut point.
        let anchor = placed[rng.random_range(0..placed.len())];
        let fresh = rng.random_range(1..=5).min(base - next + 1);
        let mut block: Vec<VertexId> = vec![anchor];
        block.extend(next..next + fresh);
        next += fresh;
        clique_edges(&block, &mut edges);
        placed.extend(&block[1..]);
    }
    for noise in base + 1..=spec.n {
        for &u in &placed {
            if rng.random_bool(0.3) {
                edges.push((noise, u));
            }
        }
        placed.push(noise);
    }
    Graph::build(spec.n, &edges).expect("planted construction is simple")
}

fn clique_edges(block: &[VertexId], edges: &mut Vec<(VertexId, VertexId)>) {
    for (i, &u) in block.iter().enumerate() {
        for &v in &block[i + 1..] {
            edges.push((u, v));
        }
    }
}

/// Erdős–Rényi sample on ids `1..=n`, deterministic per seed.
pub fn gen_gnp(n: u32, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges).expect("gnp construction is simple")
}

fn mask_adjacency(g: &Graph, ids: &[VertexId]) -> Vec<u64> {
    let index: std::collections::BTreeMap<VertexId, usize> =
        ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    ids.iter()
        .map(|&v| {
            let mut m = 0u64;
            for u in g.neighbors(v) {
                m |= 1 << index[u];
            }
            m
        })
        .collect()
}

/// Block graph == chordal and diamond-free, over a masked vertex set.
fn is_block_graph_masked(adj: &[u64], alive: u64) -> bool {
    // Diamond-free: the common neighborhood of every edge must be a clique.
    let mut rest = alive;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        // Only v > u, so each edge is visited once.
        let mut nbrs = adj[u] & alive & !(((1u64 << u) << 1).wrapping_sub(1));
        while nbrs != 0 {
            let v = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            let common = adj[u] & adj[v] & alive;
            let mut cs = common;
            while cs != 0 {
                let w = cs.trailing_zeros() as usize;
                cs &= cs - 1;
                if common & !adj[w] & !(1u64 << w) != 0 {
                    return false;
                }
            }
        }
    }

    // Chordality via maximum cardinality search: the reverse visit order is
    // a perfect elimination ordering iff the graph is chordal.
    let mut order = Vec::with_capacity(alive.count_ones() as usize);
    let mut rank = [usize::MAX; 64];
    let mut visited = 0u64;
    let mut weight = [0u32; 64];
    let mut left = alive;
    while left != 0 {
        let mut best = usize::MAX;
        let mut bw = 0;
        let mut scan = left;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if best == usize::MAX || weight[v] > bw {
                best = v;
                bw = weight[v];
            }
        }
        rank[best] = order.len();
        order.push(best);
        visited |= 1 << best;
        left &= !(1 << best);
        let mut touch = adj[best] & left;
        while touch != 0 {
            let v = touch.trailing_zeros() as usize;
            touch &= touch - 1;
            weight[v] += 1;
        }
    }
    for &v in &order {
        let mut earlier = adj[v] & visited;
        earlier &= alive;
        let mut e = earlier;
        let mut latest = usize::MAX;
        let mut members = 0u64;
        while e != 0 {
            let u = e.trailing_zeros() as usize;
            e &= e - 1;
            if rank[u] < rank[v] {
                members |= 1 << u;
                if latest == usize::MAX || rank[u] > rank[latest] {
                    latest = u;
                }
            }
        }
        if latest != usize::MAX {
            let others = members & !(1u64 << latest);
            if others & !adj[latest] != 0 {
                return false;
            }
        }
    }
    true
}

/// The same recognition for graphs that do not fit in a 64-bit mask.
fn is_block_graph_generic(ids: &[VertexId], adj: &[VertexSet]) -> bool {
    let index: std::collections::BTreeMap<VertexId, usize> =
        ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = ids.len();
    for u in 0..n {
        for &vid in &adj[u] {
            let v = index[&vid];
            if v <= u {
                continue;
            }
            let common: Vec<usize> =
                adj[u].intersection(&adj[v]).map(|w| index[w]).collect();
            for (i, &w) in common.iter().enumerate() {
                for &x in &common[i + 1..] {
                    if !adj[w].contains(&ids[x]) {
                        return false;
                    }
                }
            }
        }
    }
    let mut rank = vec![usize::MAX; n];
    let mut weight = vec![0u32; n];
    let mut order = Vec::with_capacity(n);
    let mut left: std::collections::BTreeSet<usize> = (0..n).collect();
    while !left.is_empty() {
        let &best = left.iter().max_by_key(|&&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        rank[best] = order.len();
        order.push(best);
        left.remove(&best);
        for w in &adj[best] {
            let wi = index[w];
            if left.contains(&wi) {
                weight[wi] += 1;
            }
        }
    }
    for &v in &order {
        let earlier: Vec<usize> =
            adj[v].iter().map(|w| index[w]).filter(|&u| rank[u] < rank[v]).collect();
        if let Some(&latest) = earlier.iter().max_by_key(|&&u| rank[u]) {
            for &u in &earlier {
                if u != latest && !adj[latest].contains(&ids[u]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Lexicographic k-subset masks of an n-element ground set.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    fresh: bool,
}

impl Combinations {
    fn new(n: usize) -> Self {
        Combinations { n, idx: Vec::new(), fresh: false }
    }

    fn reset(&mut self, k: usize) {
        self.idx = (0..k).collect();
        self.fresh = true;
    }

    fn next_mask(&mut self) -> Option<u64> {
        let k = self.idx.len();
        if self.fresh {
            self.fresh = false;
            if k > self.n {
                return None;
            }
            return Some(self.mask());
        }
        if k == 0 {
            return None;
        }
        // Advance to the next combination in lexicographic order.
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
        Some(self.mask())
    }

    fn mask(&self) -> u64 {
        self.idx.iter().fold(0u64, |m, &i| m | 1 << i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> Graph {
        let mut edges: Vec<(u32, u32)> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((n, 1));
        Graph::build(n, &edges).unwrap()
    }

    #[test]
    fn bruteforce_examples() {
        let (s, sol) = min_deletion_bruteforce(&cycle(5), 3).unwrap();
        assert_eq!(s, 1);
        assert_eq!(sol.vertices().len(), 1);

        // diamond (1..4) disjoint union C4 (5..8)
        let g = Graph::build(
            8,
            &[(1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (5, 6), (6, 7), (7, 8), (8, 5)],
        )
        .unwrap();
        let (s, sol) = min_deletion_bruteforce(&g, 3).unwrap();
        assert_eq!(s, 2);
        assert!(verify(&g, sol.vertices(), 2));

        let bowtie = Graph::build(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(min_deletion_bruteforce(&bowtie, 2).unwrap().0, 0);

        assert_eq!(min_deletion_bruteforce(&cycle(4), 0), None);
    }

    #[test]
    fn verify_examples() {
        let c4 = cycle(4);
        let one: VertexSet = [2].into_iter().collect();
        let two: VertexSet = [1, 2].into_iter().collect();
        assert!(verify(&c4, &one, 1));
        assert!(!verify(&c4, &VertexSet::new(), 1));
        assert!(!verify(&c4, &two, 1));
        let ghost: VertexSet = [9].into_iter().collect();
        assert!(!verify(&c4, &ghost, 1));
    }

    #[test]
    fn masked_recognizer_matches_recognition_exhaustively() {
        let pairs: Vec<(u32, u32)> =
            (1..=6u32).flat_map(|u| (u + 1..=6).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << 15) {
            let edges: Vec<(u32, u32)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::build(6, &edges).unwrap();
            let ids: Vec<VertexId> = g.vertices().collect();
            let adj = mask_adjacency(&g, &ids);
            assert_eq!(
                is_block_graph_masked(&adj, (1 << 6) - 1),
                is_block_graph(&g),
                "mask {mask:b}"
            );
        }
    }

    #[test]
    fn masked_recognizer_matches_on_random_graphs() {
        for seed in 0..300 {
            let g = gen_gnp(16, 0.2 + 0.03 * (seed % 10) as f64, seed);
            let ids: Vec<VertexId> = g.vertices().collect();
            let adj = mask_adjacency(&g, &ids);
            assert_eq!(is_block_graph_masked(&adj, (1 << 16) - 1), is_block_graph(&g));
        }
    }

    #[test]
    fn bruteforce_witness_always_verifies() {
        for seed in 0..200 {
            let g = gen_gnp(8, 0.35, seed);
            if let Some((s, sol)) = min_deletion_bruteforce(&g, 3) {
                assert!(verify(&g, sol.vertices(), s));
                if s > 0 {
                    // minimality: nothing smaller works
                    assert_eq!(min_deletion_bruteforce(&g, s - 1), None);
                }
            }
        }
    }

    #[test]
    fn oracle_monotone_under_deletion() {
        for seed in 0..40 {
            let g = gen_gnp(8, 0.4, seed);
            let base = min_deletion_bruteforce(&g, 8).unwrap().0;
            for v in g.vertices() {
                let h = g.delete_vertex(v).unwrap();
                let hv = min_deletion_bruteforce(&h, 8).unwrap().0;
                assert!(hv <= base, "deleting {v} raised the optimum");
            }
        }
    }

    #[test]
    fn planted_examples() {
        let g = gen_planted(PlantedSpec { n: 10, k: 0, seed: 3 });
        assert!(verify(&g, &VertexSet::new(), 0));

        let g = gen_planted(PlantedSpec { n: 20, k: 2, seed: 7 });
        let (s, _) = min_deletion_bruteforce(&g, 2).expect("planted bound");
        assert!(s <= 2);

        let again = gen_planted(PlantedSpec { n: 20, k: 2, seed: 7 });
        assert_eq!(g, again);
    }

    #[test]
    fn gnp_examples() {
        assert_eq!(gen_gnp(7, 0.0, 5).m(), 0);
        assert_eq!(gen_gnp(7, 1.0, 5).m(), 21);
        assert_eq!(gen_gnp(8, 0.3, 1), gen_gnp(8, 0.3, 1));
        assert_ne!(gen_gnp(8, 0.3, 1), gen_gnp(8, 0.3, 2));
    }

    #[test]
    fn fallback_path_matches_masked_path() {
        // Exercise the generic recognizer against the masked one.
        for seed in 0..100 {
            let g = gen_gnp(9, 0.3, seed);
            let ids: Vec<VertexId> = g.vertices().collect();
            let adjsets: Vec<VertexSet> = ids.iter().map(|&v| g.neighbors(v).clone()).collect();
            let adj = mask_adjacency(&g, &ids);
            assert_eq!(
                is_block_graph_generic(&ids, &adjsets),
                is_block_graph_masked(&adj, (1 << 9) - 1)
            );
        }
    }
}
