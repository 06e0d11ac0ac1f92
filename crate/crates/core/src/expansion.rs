//! Constructive expansion subroutine over a bipartite relation.
//!
//! Given parts `X` and `Y` with `|Y| >= alpha * |X|` and every element of
//! `Y` seeing at least one element of `X`, [`expand`] returns nonempty
//! `X' ⊆ X`, `Y' ⊆ Y` and an assignment of exactly `alpha` private
//! `Y'`-elements to each member of `X'`, such that `Y'` has no neighbors in
//! `X \ X'`. Elements are adressed by their positions in the input slices.

use crate::error::{Error, Result};

/// Output of [`expand`]: index sets into the original `X` and `Y`, and the
/// assignment `phi` mapping each member of `x_prime` to its `alpha`
/// private members of `y_prime`.
#[derive(Clone, Debug)]
pub struct ExpansionResult {
    pub x_prime: Vec<usize>,
    pub y_prime: Vec<usize>,
    pub phi: Vec<(usize, Vec<usize>)>,
}

impl ExpansionResult {
    /// Checks the three contract conditions plus nonemptiness in
    /// `O(|X| * |Y|)`; `adj[x]` lists the neighbors of `x` in `Y`.
    pub fn check(&self, x_count: usize, y_count: usize, adj: &[Vec<usize>], alpha: usize) -> bool {
        if self.x_prime.is_empty() || self.y_prime.is_empty() {
            return false;
        }
        if self.x_prime.iter().any(|&x| x >= x_count) || self.y_prime.iter().any(|&y| y >= y_count)
        {
            return false;
        }
        let in_y_prime = |y: usize| self.y_prime.contains(&y);
        // N(Y') ∩ X must be exactly X'.
        let mut seen_x: Vec<bool> = vec![false; x_count];
        for (x, nbrs) in adj.iter().enumerate() {
            if nbrs.iter().any(|&y| in_y_prime(y)) {
                seen_x[x] = true;
            }
        }
        for x in 0..x_count {
            if seen_x[x] != self.x_prime.contains(&x) {
                return false;
            }
        }
        // phi assigns alpha neighbors from Y', pairwise disjoint images.
        if self.phi.len() != self.x_prime.len() {
            return false;
        }
        let mut used_y: Vec<bool> = vec![false; y_count];
        for (x, img) in &self.phi {
            if !self.x_prime.contains(x) || img.len() != alpha {
                return false;
            }
            for &y in img {
                if !in_y_prime(y) || !adj[*x].contains(&y) || used_y[y] {
                    return false;
                }
                used_y[y] = true;
            }
        }
        true
    }
}

/// Finds an expansion. `adj[x]` lists the `Y`-positions adjacent to `x`.
///
/// Works by saturating every `X`-element with `alpha` flow units toward
/// distinct `Y`-elements; when saturation fails, the residual-reachable
/// part of `X` violates the counting condition, and discarding it together
/// with its entire `Y`-neighborhood leaves a strictly smaller instance that
/// still satisfies the preconditions. Augmentation scans in lexicographic
/// order, so the assignment is reproducible.
pub fn expand(x_count: usize, y_count: usize, adj: &[Vec<usize>], alpha: usize) -> Result<ExpansionResult> {
    if x_count == 0 {
        return Err(Error::ExpansionPrecondition("X must be nonempty".into()));
    }
    if alpha == 0 {
        return Err(Error::ExpansionPrecondition("alpha must be positive".into()));
    }
    if adj.len() != x_count {
        return Err(Error::ExpansionPrecondition("adjacency must cover X".into()));
    }
    if y_count < alpha * x_count {
        return Err(Error::ExpansionPrecondition(format!(
            "need |Y| >= alpha * |X|, got {y_count} < {alpha} * {x_count}"
        )));
    }
    let mut y_has_neighbor = vec![false; y_count];
    for nbrs in adj {
        for &y in nbrs {
            if y >= y_count {
                return Err(Error::ExpansionPrecondition(format!("y index {y} out of range")));
            }
            y_has_neighbor[y] = true;
        }
    }
    if !y_has_neighbor.iter().all(|&b| b) {
        return Err(Error::ExpansionPrecondition("every y needs a neighbor in X".into()));
    }

    let mut live_x: Vec<usize> = (0..x_count).collect();
    let mut live_y: Vec<bool> = vec![true; y_count];
    loop {
        // assigned_to[y] = Some(x) when y carries a unit for x.
        let mut assigned_to: Vec<Option<usize>> = vec![None; y_count];
        let mut load: Vec<usize> = vec![0; x_count];
        for &x in &live_x {
            while load[x] < alpha {
                if !augment(x, adj, &live_y, &mut assigned_to) {
                    break;
                }
                load[x] += 1;
            }
        }
        if live_x.iter().all(|&x| load[x] == alpha) {
            let x_prime = live_x.clone();
            let mut phi: Vec<(usize, Vec<usize>)> =
                x_prime.iter().map(|&x| (x, Vec::new())).collect();
            let mut y_prime = Vec::new();
            for (y, who) in assigned_to.iter().enumerate() {
                if let Some(x) = who {
                    phi.iter_mut().find(|(px, _)| px == x).unwrap().1.push(y);
                    y_prime.push(y);
                }
            }
            let result = ExpansionResult { x_prime, y_prime, phi };
            debug_assert!(result.check(x_count, y_count, adj, alpha));
            return Ok(result);
        }

        // Residual-reachable X-part from any unsaturated element: its whole
        // neighborhood is assigned within it, so it violates the counting
        // condition and can be discarded with its neighborhood.
        let mut in_t = vec![false; x_count];
        let mut queue: Vec<usize> =
            live_x.iter().copied().filter(|&x| load[x] < alpha).collect();
        for &x in &queue {
            in_t[x] = true;
        }
        while let Some(x) = queue.pop() {
            for &y in &adj[x] {
                if !live_y[y] {
                    continue;
                }
                if let Some(xa) = assigned_to[y] {
                    if !in_t[xa] {
                        in_t[xa] = true;
                        queue.push(xa);
                    }
                }
            }
        }
        let dropped: Vec<usize> = live_x.iter().copied().filter(|&x| in_t[x]).collect();
        debug_assert!(!dropped.is_empty() && dropped.len() < live_x.len());
        for &x in &dropped {
            for &y in &adj[x] {
                live_y[y] = false;
            }
        }
        live_x.retain(|&x| !in_t[x]);
        if live_x.is_empty() {
            return Err(Error::Internal("expansion discarded all of X".into()));
        }
    }
}

/// Single augmenting-path search for `x`, alternating unassigned and
/// assigned `y`-slots, in lexicographic order. Rerouting never changes the
/// load of an intermediate element, so saturated members stay saturated.
fn augment(
    x: usize,
    adj: &[Vec<usize>],
    live_y: &[bool],
    assigned_to: &mut Vec<Option<usize>>,
) -> bool {
    let y_count = assigned_to.len();
    let mut visited_y = vec![false; y_count];
    let mut parent_y: Vec<Option<(usize, usize)>> = vec![None; y_count]; // (x, prev_y or marker)
    let mut sorted_adj: Vec<usize> = adj[x].iter().copied().filter(|&y| live_y[y]).collect();
    sorted_adj.sort_unstable();
    let mut frontier: Vec<(usize, usize)> = Vec::new(); // (y, coming from x)
    for &y in &sorted_adj {
        if !visited_y[y] {
            visited_y[y] = true;
            parent_y[y] = Some((x, usize::MAX));
            frontier.push((y, x));
        }
    }
    let mut qi = 0;
    while qi < frontier.len() {
        let (y, _) = frontier[qi];
        qi += 1;
        match assigned_to[y] {
            None => {
                // Free slot: flip the alternating path back to x.
                let mut cur = y;
                loop {
                    let (px, prev) = parent_y[cur].unwrap();
                    assigned_to[cur] = Some(px);
                    if prev == usize::MAX {
                        break;
                    }
                    cur = prev;
                }
                return true;
            }
            Some(xa) => {
                // Try to reroute one of xa's units elsewhere.
                let mut next: Vec<usize> =
                    adj[xa].iter().copied().filter(|&z| live_y[z] && !visited_y[z]).collect();
                next.sort_unstable();
                for z in next {
                    visited_y[z] = true;
                    parent_y[z] = Some((xa, y));
                    frontier.push((z, xa));
                }
            }
        }
    }
    false
}
