//! FPT pipeline for feedback-vertex-set discovery: enumerate compact
//! representations, match tokens to classes at minimum cost, then realize
//! the cheapest matching as a slide sequence.

mod compact;
mod realize;

pub use compact::{enumerate_compact_representations, CompactRepresentation};
pub use realize::{realize_matching, RealizeError};

use crate::assignment::{assign_or_empty, CostMatrix};
use crate::error::SolveError;
use crate::graph::{Graph, Vertex};
use crate::instance::{Configuration, Discovery, DiscoveryInstance, Problem};

/// Complete bipartite graph between tokens and classes, weighted by distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateBipartite {
    pub token_side: Vec<Vertex>,
    pub class_side: Vec<Vec<Vertex>>,
    /// `weights.get(i, j)` is the distance from token `i` to the nearest vertex of class `j`.
    pub weights: CostMatrix,
    /// Nearest vertex of class `j` for token `i`, smallest index on ties.
    nearest: Vec<Vertex>,
}

impl CandidateBipartite {
    pub fn nearest(&self, token: usize, class: usize) -> Vertex {
        self.nearest[token * self.class_side.len() + class]
    }
}

pub fn build_candidate_bipartite(
    g: &Graph,
    start: &Configuration,
    rep: &CompactRepresentation,
) -> Result<CandidateBipartite, SolveError> {
    let q = rep.classes.len();
    if q > start.len() {
        return Err(SolveError::TooManyClasses { classes: q, tokens: start.len() });
    }
    let token_side: Vec<Vertex> = start.iter().copied().collect();
    let mut nearest = Vec::with_capacity(token_side.len() * q);
    let mut cost = Vec::with_capacity(token_side.len() * q);
    for &u in &token_side {
        let dist = g.hop_distances(u)?;
        for class in &rep.classes {
            let &best = class.iter().min_by_key(|&&y| (dist[y], y)).expect("classes are non-empty");
            nearest.push(best);
            cost.push(dist[best] as u64);
        }
    }
    let weights = CostMatrix::from_fn(token_side.len(), q, |i, j| Some(cost[i * q + j]));
    Ok(CandidateBipartite { token_side, class_side: rep.classes.clone(), weights, nearest })
}

/// Decides feedback-vertex-set discovery; on a yes-instance returns a
/// shortest witness.
pub fn solve_fvsd_fpt(inst: &DiscoveryInstance) -> Result<Option<Discovery>, SolveError> {
    solve_with_reps(inst, &enumerate_compact_representations(&inst.graph, inst.k()))
}

/// As [`solve_fvsd_fpt`] over a given representation list.
pub fn solve_with_reps(
    inst: &DiscoveryInstance,
    reps: &[CompactRepresentation],
) -> Result<Option<Discovery>, SolveError> {
    if inst.kind != Problem::FeedbackVertexSet {
        return Err(SolveError::UnsupportedProblem { method: "fvs-fpt", kind: inst.kind });
    }
    inst.require_connected()?;
    let mut best: Option<(u64, Vec<(Vertex, Vertex)>)> = None;
    for rep in reps.iter().filter(|r| r.classes.len() <= inst.k()) {
        let h = build_candidate_bipartite(&inst.graph, &inst.start, rep)?;
        let a = assign_or_empty(&h.weights).expect("all weights are finite");
        if best.as_ref().is_some_and(|(total, _)| *total <= a.total) {
            continue;
        }
        let targets = a.pairs.iter().map(|&(i, j)| (h.token_side[i], h.nearest(i, j))).collect();
        best = Some((a.total, targets));
    }
    match best {
        Some((total, targets)) if total as usize <= inst.budget => {
            let witness = realize_matching(&inst.graph, &inst.start, &targets)?;
            Ok(Some(Discovery { steps: witness.len(), witness }))
        }
        _ => Ok(None),
    }
}
