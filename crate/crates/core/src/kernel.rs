//! The six reduction rules and the kernelization driver.
//!
//! Rules 1-4 are cheap local simplifications; rule 5 consumes the vertex
//! probe (delete a flower center, or declare NO on disjoint witnesses);
//! rule 6 rewires the neighborhood of a vertex whose hitter leaves many
//! clique components, trading component edges for fresh length-two paths.
//! The driver alternates them and stops when the instance is decided or
//! its size drops below `k + g1(k, 29k) * g2(k, 29k)`.
//!
//! Rules 1-5 strictly shrink the vertex count; rule 6 may grow it but
//! strictly shrinks `n + m*`, where `m*` counts edges whose endpoints both
//! have degree at least 3. Both facts are asserted per application.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gallai::{probe_vertex, ProbeOutcome};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::obstruction::{find_obstruction, is_block_graph, Obstruction};

/// Which reduction fired; numeric ids 1-6 match the trace format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    BlockComponent,
    CutVertex,
    TrueTwin,
    PathCompress,
    Flower,
    Rewire,
    Probe,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::BlockComponent => "1",
            Rule::CutVertex => "2",
            Rule::TrueTwin => "3",
            Rule::PathCompress => "4",
            Rule::Flower => "5",
            Rule::Rewire => "6",
            Rule::Probe => "probe",
        }
    }
}

/// One entry of the append-only reduction trace. Replaying the recorded
/// edits over the original graph reproduces the kernel graph exactly.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ReductionEvent {
    pub rule: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub removed: Vec<VertexId>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub added: Vec<VertexId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contracted: Option<(VertexId, VertexId)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<EventParams>,
}

/// Rule-specific payload: edge edits of the rewiring rule, the probe
/// verdict, anchors of the local rules, and the budget drop of rule 5.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct EventParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchor: Option<VertexId>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub removed_edges: Vec<(VertexId, VertexId)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub added_edges: Vec<(VertexId, VertexId)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_decrease: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hitter: Option<Vec<VertexId>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub assignment: Vec<(VertexId, Vec<VertexId>)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outcome: Option<String>,
}

/// An instance under reduction: the working graph, the remaining budget
/// and the trace of everything done so far.
#[derive(Clone, Debug)]
pub struct Instance {
    graph: Graph,
    k: u32,
    trace: Vec<ReductionEvent>,
    next_id: VertexId,
    probes: u64,
}

/// Verdict of the driver: a decided answer or a reduced instance whose
/// size is below the kernel bound.
#[derive(Clone, Debug)]
pub enum KernelResult {
    Answer(bool),
    Reduced(Box<Instance>),
}

/// Detected occurrence of the path-compression rule: an induced path
/// `t1 t2 t3 t4` with pendant cliques `s1, s2, s3` (possibly empty) such
/// that each clique sees exactly its two path anchors and the interior
/// vertices see exactly their path neighbors plus their cliques.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule4Pattern {
    pub t: [VertexId; 4],
    pub s1: VertexSet,
    pub s2: VertexSet,
    pub s3: VertexSet,
}

impl Rule4Pattern {
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let [t1, t2, t3, t4] = self.t;
        let ts: VertexSet = self.t.iter().copied().collect();
        if ts.len() != 4 {
            return false;
        }
        let induced_path = g.has_edge(t1, t2)
            && g.has_edge(t2, t3)
            && g.has_edge(t3, t4)
            && !g.has_edge(t1, t3)
            && !g.has_edge(t1, t4)
            && !g.has_edge(t2, t4);
        if !induced_path {
            return false;
        }
        for (s, lo, hi) in [(&self.s1, t1, t2), (&self.s2, t2, t3), (&self.s3, t3, t4)] {
            if s.iter().any(|v| ts.contains(v)) {
                return false;
            }
            for &w in s {
                let outside: VertexSet =
                    g.neighbors(w).iter().copied().filter(|x| !s.contains(x)).collect();
                if outside != [lo, hi].into_iter().collect() {
                    return false;
                }
                if s.iter().any(|&x| x != w && !g.has_edge(w, x)) {
                    return false;
                }
            }
        }
        let want2: VertexSet =
            [t1, t3].into_iter().chain(self.s1.iter().copied()).chain(self.s2.iter().copied()).collect();
        let want3: VertexSet =
            [t2, t4].into_iter().chain(self.s2.iter().copied()).chain(self.s3.iter().copied()).collect();
        g.neighbors(t2) == &want2 && g.neighbors(t3) == &want3
    }
}

impl Instance {
    pub fn new(graph: Graph, k: u32) -> Self {
        let next_id = graph.max_vertex_id().map_or(1, |m| m + 1);
        Instance { graph, k, trace: Vec::new(), next_id, probes: 0 }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn trace(&self) -> &[ReductionEvent] {
        &self.trace
    }

    /// Number of vertex probes performed so far.
    pub fn probes(&self) -> u64 {
        self.probes
    }

    /// Per-rule histogram of the trace.
    pub fn rule_histogram(&self) -> std::collections::BTreeMap<String, u64> {
        let mut hist = std::collections::BTreeMap::new();
        for e in &self.trace {
            *hist.entry(format!("rule{}", e.rule)).or_insert(0) += 1;
        }
        hist
    }

    fn child(&self, event: ReductionEvent) -> Instance {
        let mut next = self.clone();
        apply_event(&mut next.graph, &event);
        if let Some(p) = &event.params {
            if let Some(d) = p.k_decrease {
                next.k -= d;
            }
        }
        next.next_id = next.next_id.max(next.graph.max_vertex_id().map_or(1, |m| m + 1));
        next.trace.push(event);
        next
    }

    fn log_probe(&mut self, vertex: VertexId, outcome: &str) {
        self.trace.push(ReductionEvent {
            rule: Rule::Probe.id().into(),
            params: Some(EventParams {
                anchor: Some(vertex),
                outcome: Some(outcome.to_string()),
                ..Default::default()
            }),
            ..Default::default()
        });
    }
}

/// Applies a recorded event to a graph, in the canonical edit order:
/// removed edges, contraction, fresh vertices, added edges, removals.
pub fn apply_event(g: &mut Graph, event: &ReductionEvent) {
    if let Some(p) = &event.params {
        for &(u, v) in &p.removed_edges {
            g.remove_edge_mut(u, v);
        }
    }
    if let Some((keep, merge)) = event.contracted {
        *g = g.contract_edge(keep, merge).expect("trace contraction must be an edge");
    }
    for &v in &event.added {
        g.add_vertex_mut(v);
    }
    if let Some(p) = &event.params {
        for &(u, v) in &p.added_edges {
            g.add_edge_mut(u, v);
        }
    }
    for &v in &event.removed {
        g.remove_vertex_mut(v);
    }
}

/// Replays a trace over the original graph of an instance.
pub fn replay(original: &Graph, trace: &[ReductionEvent]) -> Graph {
    let mut g = original.clone();
    for event in trace {
        apply_event(&mut g, event);
    }
    g
}

/// Rule 1: remove one connected component that is already a block graph.
pub fn apply_rule1(inst: &Instance) -> Option<Instance> {
    let g = inst.graph();
    for comp in g.components() {
        if is_block_graph(&g.induced_subgraph(&comp)) {
            return Some(inst.child(ReductionEvent {
                rule: Rule::BlockComponent.id().into(),
                removed: comp.into_iter().collect(),
                ..Default::default()
            }));
        }
    }
    None
}

/// Rule 2: remove a branch `H` hanging at a vertex `v` when `G[H ∪ {v}]`
/// is a connected block graph.
pub fn apply_rule2(inst: &Instance) -> Option<Instance> {
    let g = inst.graph();
    for v in g.vertices() {
        let rest = g.delete_vertex(v).unwrap();
        for comp in rest.components() {
            // Connectivity through v is required.
            if comp.iter().all(|w| !g.neighbors(v).contains(w)) {
                continue;
            }
            let mut with_v = comp.clone();
            with_v.insert(v);
            if is_block_graph(&g.induced_subgraph(&with_v)) {
                return Some(inst.child(ReductionEvent {
                    rule: Rule::CutVertex.id().into(),
                    removed: comp.into_iter().collect(),
                    params: Some(EventParams { anchor: Some(v), ..Default::default() }),
                    ..Default::default()
                }));
            }
        }
    }
    None
}

/// Rule 3: a true-twin class of size at least `k + 2` keeps only its
/// `k + 1` lowest ids. Requires a positive budget: obstructions can pair
/// two twins (the hubs of a diamond), so at least two must survive.
pub fn apply_rule3(inst: &Instance) -> Option<Instance> {
    assert!(inst.k() >= 1, "the twin rule needs a positive budget");
    let g = inst.graph();
    let keep = inst.k() as usize + 1;
    for class in g.true_twin_classes() {
        if class.len() >= keep + 1 {
            let removed: Vec<VertexId> = class.into_iter().skip(keep).collect();
            return Some(inst.child(ReductionEvent {
                rule: Rule::TrueTwin.id().into(),
                removed,
                ..Default::default()
            }));
        }
    }
    None
}

/// Finds the first path-compression occurrence in scan order: interior
/// edge `t2 t3`, then `t1`, then `t4`, all ascending.
pub fn find_rule4_pattern(g: &Graph) -> Option<Rule4Pattern> {
    for t2 in g.vertices() {
        for &t3 in g.neighbors(t2) {
            if t3 == t2 {
                continue;
            }
            let s2: VertexSet =
                g.neighbors(t2).intersection(g.neighbors(t3)).copied().collect();
            for &t1 in g.neighbors(t2) {
                if t1 == t3 || s2.contains(&t1) || g.has_edge(t1, t3) {
                    continue;
                }
                for &t4 in g.neighbors(t3) {
                    if t4 == t2 || t4 == t1 || g.has_edge(t4, t2) || g.has_edge(t4, t1) {
                        continue;
                    }
                    let s1: VertexSet = g
                        .neighbors(t2)
                        .iter()
                        .copied()
                        .filter(|&x| x != t1 && x != t3 && !s2.contains(&x))
                        .collect();
                    let s3: VertexSet = g
                        .neighbors(t3)
                        .iter()
                        .copied()
                        .filter(|&x| x != t2 && x != t4 && !s2.contains(&x))
                        .collect();
                    let pattern = Rule4Pattern { t: [t1, t2, t3, t4], s1, s2: s2.clone(), s3 };
                    if pattern.is_valid_in(g) {
                        return Some(pattern);
                    }
                }
            }
        }
    }
    None
}

/// Rule 4: remove the middle clique of a detected pattern and contract the
/// interior edge.
pub fn apply_rule4(inst: &Instance) -> Option<Instance> {
    let pattern = find_rule4_pattern(inst.graph())?;
    let [_, t2, t3, _] = pattern.t;
    Some(inst.child(ReductionEvent {
        rule: Rule::PathCompress.id().into(),
        removed: pattern.s2.iter().copied().collect(),
        contracted: Some((t2, t3)),
        params: Some(EventParams { anchor: Some(t2), ..Default::default() }),
        ..Default::default()
    }))
}

/// Verdict of rule 5.
#[derive(Clone, Debug)]
pub enum Rule5Outcome {
    /// `k + 1` pairwise disjoint obstructions: the instance is a NO.
    No(Vec<Obstruction>),
    /// A flower center was deleted and the budget decreased by one.
    Applied(Instance),
}

/// Rule 5: probe vertices in increasing id order; on the first non-hitter
/// outcome either declare NO (disjoint witnesses) or delete the flower
/// center and decrease `k`.
pub fn apply_rule5(inst: &Instance) -> Result<Option<Rule5Outcome>> {
    assert!(inst.k() >= 1, "rule 5 needs a positive budget");
    let mut probes = 0;
    for v in inst.graph().vertices().collect::<Vec<_>>() {
        probes += 1;
        match probe_vertex(inst.graph(), v, inst.k() as usize)? {
            ProbeOutcome::DisjointObstructions(obs) => {
                let mut next = inst.clone();
                next.probes += probes;
                next.log_probe(v, "disjoint");
                return Ok(Some(Rule5Outcome::No(obs)));
            }
            ProbeOutcome::FlowerAt(center, _) => {
                let mut probed = inst.clone();
                probed.probes += probes;
                probed.log_probe(v, "flower");
                let next = probed.child(ReductionEvent {
                    rule: Rule::Flower.id().into(),
                    removed: vec![center],
                    params: Some(EventParams {
                        anchor: Some(center),
                        k_decrease: Some(1),
                        ..Default::default()
                    }),
                    ..Default::default()
                });
                return Ok(Some(Rule5Outcome::Applied(next)));
            }
            ProbeOutcome::Hitter { .. } => {}
        }
    }
    Ok(None)
}

/// Components of `G - ({v} ∪ s_v)` eligible for rewiring: they meet the
/// neighborhood of `v`, contain no obstruction, and see the hitter.
pub fn eligible_components(g: &Graph, v: VertexId, s_v: &VertexSet) -> Vec<VertexSet> {
    let mut cut = s_v.clone();
    cut.insert(v);
    let rest = g.induced_delete(&cut).unwrap();
    rest.components()
        .into_iter()
        .filter(|comp| {
            comp.iter().any(|w| g.neighbors(v).contains(w))
                && is_block_graph(&g.induced_subgraph(comp))
                && comp.iter().any(|&w| g.neighbors(w).iter().any(|x| s_v.contains(x)))
        })
        .collect()
}

/// Rule 6: rewire a vertex of large complete degree. Requires that `s_v`
/// is a hitter for `v` and that the eligible component family supports a
/// 3-expansion of `s_v`; both are re-checked here and a violation is an
/// internal error (a driver bug), not an input error.
///
/// Removes the edges between `v` and the expanded components, adds two
/// fresh internally disjoint length-two paths from `v` to each assigned
/// hitter vertex, then exhaustively deletes degree-1 vertices inside the
/// expanded components.
pub fn apply_rule6(inst: &Instance, v: VertexId, s_v: &VertexSet) -> Result<Instance> {
    let g = inst.graph();
    if !g.has_vertex(v) {
        return Err(Error::UnknownVertex(v));
    }
    let internal = |msg: String| Err(Error::Internal(msg));
    if s_v.contains(&v) || s_v.iter().any(|w| !g.has_vertex(*w)) {
        return internal("rewiring hitter must be a vertex set avoiding v".into());
    }
    if s_v.is_empty() {
        return internal("rewiring needs a nonempty hitter".into());
    }
    if crate::obstruction::has_obstruction_through(&g.induced_delete(s_v).unwrap(), v)? {
        return internal("rewiring requires a hitter eliminating obstructions through v".into());
    }

    let comps = eligible_components(g, v, s_v);
    let xs: Vec<VertexId> = s_v.iter().copied().collect();
    if comps.len() < 3 * xs.len() {
        return internal(format!(
            "rewiring needs at least 3|X| eligible components, got {} for |X| = {}",
            comps.len(),
            xs.len()
        ));
    }
    let adj: Vec<Vec<usize>> = xs
        .iter()
        .map(|&x| {
            comps
                .iter()
                .enumerate()
                .filter(|(_, c)| c.iter().any(|w| g.neighbors(x).contains(w)))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let expansion = crate::expansion::expand(xs.len(), comps.len(), &adj, 3)?;

    let before = g.n() + g.m_star();

    // Edge removals between v and the expanded components.
    let mut removed_edges = Vec::new();
    let expanded: VertexSet =
        expansion.y_prime.iter().flat_map(|&ci| comps[ci].iter().copied()).collect();
    for &w in g.neighbors(v) {
        if expanded.contains(&w) {
            removed_edges.push((v, w));
        }
    }

    // Two fresh length-two paths from v to each expanded hitter vertex.
    let mut added = Vec::new();
    let mut added_edges = Vec::new();
    let mut fresh = inst.next_id;
    let mut assignment = Vec::new();
    for &xi in &expansion.x_prime {
        let x = xs[xi];
        for _ in 0..2 {
            added.push(fresh);
            added_edges.push((v, fresh));
            added_edges.push((fresh, x));
            fresh += 1;
        }
        let img: Vec<VertexId> = expansion
            .phi
            .iter()
            .find(|(px, _)| *px == xi)
            .map(|(_, ys)| ys.iter().map(|&ci| *comps[ci].first().unwrap()).collect())
            .unwrap();
        assignment.push((x, img));
    }

    // Cascading degree-1 cleanup inside the expanded components, computed
    // on a scratch copy so the event stays a pure edit list.
    let mut scratch = g.clone();
    for &(a, b) in &removed_edges {
        scratch.remove_edge_mut(a, b);
    }
    let mut removed = Vec::new();
    let mut alive: VertexSet = expanded.clone();
    loop {
        let Some(&w) = alive.iter().find(|&&w| scratch.degree(w) == 1) else { break };
        scratch.remove_vertex_mut(w);
        alive.remove(&w);
        removed.push(w);
    }

    let next = inst.child(ReductionEvent {
        rule: Rule::Rewire.id().into(),
        removed,
        added,
        params: Some(EventParams {
            anchor: Some(v),
            removed_edges,
            added_edges,
            hitter: Some(xs),
            assignment,
            ..Default::default()
        }),
        ..Default::default()
    });
    let after = next.graph().n() + next.graph().m_star();
    if after >= before {
        debug_assert!(false, "rewiring must decrease n + m*");
        return internal(format!("rewiring failed to decrease n + m*: {before} -> {after}"));
    }
    Ok(next)
}

/// `g1(k, l) = 6k²(l + 14k)² + 2k(l + 14k)`; always even.
pub fn g1(k: u64, l: u64) -> u128 {
    let m = (l + 14 * k) as u128;
    let k = k as u128;
    6 * k * k * m * m + 2 * k * m
}

/// Twice `g2(k, l) = (k+1)² + 7k² + k(l + 14k)/2`, which may be
/// half-integral; callers divide after multiplying.
pub fn g2_twice(k: u64, l: u64) -> u128 {
    let m = (l + 14 * k) as u128;
    let k = k as u128;
    2 * ((k + 1) * (k + 1) + 7 * k * k) + k * m
}

pub fn g2(k: u64, l: u64) -> f64 {
    g2_twice(k, l) as f64 / 2.0
}

/// The kernel size bound `k + g1(k, 29k) * g2(k, 29k)`, exact: `g1` is
/// even, so the product with the half-integral `g2` is an integer.
pub fn size_bound(k: u64) -> u128 {
    let l = 29 * k;
    k as u128 + g1(k, l) * g2_twice(k, l) / 2
}

/// Options for the driver.
#[derive(Clone, Copy, Debug)]
pub struct KernelOptions {
    /// Number of threads probing vertices concurrently; 1 = sequential.
    pub jobs: usize,
    /// Hard ceiling on graph-changing events, as a multiple of `n + m`.
    pub event_ceiling_factor: usize,
}

impl Default for KernelOptions {
    fn default() -> Self {
        KernelOptions { jobs: 1, event_ceiling_factor: 10 }
    }
}

/// Exhaustively reduces the instance. Returns a decided answer, or a
/// reduced instance strictly below the size bound.
pub fn kernelize(inst: Instance, opts: &KernelOptions) -> Result<KernelResult> {
    let ceiling = opts.event_ceiling_factor * (inst.graph().n() + inst.graph().m()) + 16;
    let mut cur = inst;
    loop {
        let rule_events =
            cur.trace().iter().filter(|e| e.rule != Rule::Probe.id()).count();
        if rule_events > ceiling {
            return Err(Error::Internal(format!(
                "kernelization exceeded its event ceiling of {ceiling}"
            )));
        }

        // Cheap local rules first, to fixpoint one at a time. The twin
        // rule only applies while the budget is positive.
        let before_n = cur.graph().n();
        if let Some(next) = apply_rule1(&cur)
            .or_else(|| apply_rule2(&cur))
            .or_else(|| if cur.k() >= 1 { apply_rule3(&cur) } else { None })
            .or_else(|| apply_rule4(&cur))
        {
            debug_assert!(next.graph().n() < before_n, "local rules must shrink n");
            cur = next;
            continue;
        }

        if cur.graph().is_empty() {
            return Ok(KernelResult::Answer(true));
        }
        if cur.k() == 0 {
            // Rule 1 is exhausted, so every component carries an obstruction.
            return Ok(KernelResult::Answer(false));
        }

        // Probe every vertex; rule 5 acts on the first non-hitter outcome.
        let outcomes = probe_all(&cur, opts.jobs)?;
        cur.probes += outcomes.len() as u64;
        let mut hitters: Vec<(VertexId, VertexSet, usize)> = Vec::new();
        let mut acted = false;
        for (v, outcome) in outcomes {
            match outcome {
                ProbeOutcome::DisjointObstructions(_) => {
                    cur.log_probe(v, "disjoint");
                    return Ok(KernelResult::Answer(false));
                }
                ProbeOutcome::FlowerAt(center, _) => {
                    cur.log_probe(v, "flower");
                    cur = cur.child(ReductionEvent {
                        rule: Rule::Flower.id().into(),
                        removed: vec![center],
                        params: Some(EventParams {
                            anchor: Some(center),
                            k_decrease: Some(1),
                            ..Default::default()
                        }),
                        ..Default::default()
                    });
                    acted = true;
                    break;
                }
                ProbeOutcome::Hitter { s_v, clique_components } => {
                    hitters.push((v, s_v, clique_components));
                }
            }
        }
        if acted {
            continue;
        }

        let k = cur.k() as u64;
        if (cur.graph().n() as u128) < size_bound(k) {
            return Ok(KernelResult::Reduced(Box::new(cur)));
        }

        // Rule 6 on the lowest-id vertex with enough clique components.
        let mut rewired = false;
        for (v, s_v, clique_components) in &hitters {
            if (*clique_components as u64) < 22 * k {
                continue;
            }
            // If more than k surviving components carry an obstruction,
            // they are pairwise disjoint witnesses: a NO.
            let mut cut = s_v.clone();
            cut.insert(*v);
            let rest = cur.graph().induced_delete(&cut).unwrap();
            let obstructed = rest
                .components()
                .into_iter()
                .filter(|c| find_obstruction(&cur.graph().induced_subgraph(c)).is_some())
                .count();
            if obstructed > cur.k() as usize {
                return Ok(KernelResult::Answer(false));
            }
            let eligible = eligible_components(cur.graph(), *v, s_v);
            if (eligible.len() as u64) < 21 * k {
                continue;
            }
            cur = apply_rule6(&cur, *v, s_v)?;
            rewired = true;
            break;
        }
        if rewired {
            continue;
        }

        // No qualifying vertex on an instance at or above the size bound.
        return Ok(KernelResult::Answer(false));
    }
}

fn probe_all(inst: &Instance, jobs: usize) -> Result<Vec<(VertexId, ProbeOutcome)>> {
    let vertices: Vec<VertexId> = inst.graph().vertices().collect();
    let k = inst.k() as usize;
    if jobs <= 1 {
        // Sequential probing stops at the first non-hitter; the remaining
        // probes would be stale after the rule fires anyway.
        let mut out = Vec::new();
        for v in vertices {
            let outcome = probe_vertex(inst.graph(), v, k)?;
            let stop = !matches!(outcome, ProbeOutcome::Hitter { .. });
            out.push((v, outcome));
            if stop {
                break;
            }
        }
        return Ok(out);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let graph = inst.graph();
    pool.install(|| {
        use rayon::prelude::*;
        vertices
            .par_iter()
            .map(|&v| probe_vertex(graph, v, k).map(|o| (v, o)))
            .collect::<Result<Vec<_>>>()
    })
}
