//! Discovery on split graphs: enumerate the polynomially many candidate
//! solutions, then match tokens to each candidate at minimum cost.
//!
//! All enumerators work on the repartitioned split partition, in which every
//! clique vertex has a neighbor on the independent side.

use std::collections::BTreeSet;

use crate::assignment::{assign_or_empty, CostMatrix};
use crate::error::SolveError;
use crate::fvs::realize_matching;
use crate::graph::{Dsu, Graph, SplitPartition, Vertex, VertexSet};
use crate::instance::{Discovery, DiscoveryInstance, Problem};

fn partition(g: &Graph) -> Result<SplitPartition, SolveError> {
    g.split_partition().ok_or(SolveError::NotSplit)
}

fn independent_neighbors(g: &Graph, p: &SplitPartition, v: Vertex) -> VertexSet {
    g.neighbors(v).iter().copied().filter(|w| p.independent.contains(w)).collect()
}

/// `Q` and `(Q - v) + (N(v) ∩ I)` for each clique vertex `v`: exactly `|Q| + 1` sets.
pub fn enumerate_minimal_vertex_covers_split(g: &Graph) -> Result<Vec<VertexSet>, SolveError> {
    let p = partition(g)?;
    let mut out = vec![p.clique.clone()];
    for &v in &p.clique {
        let mut cover = p.clique.clone();
        cover.remove(&v);
        cover.extend(independent_neighbors(g, &p, v));
        out.push(cover);
    }
    Ok(out)
}

/// `I` and `{v} + (I - N(v))` for each clique vertex `v`.
pub fn enumerate_maximal_independent_sets_split(g: &Graph) -> Result<Vec<VertexSet>, SolveError> {
    let p = partition(g)?;
    let mut out = vec![p.independent.clone()];
    for &v in &p.clique {
        let mut set: VertexSet = p.independent.difference(&independent_neighbors(g, &p, v)).copied().collect();
        set.insert(v);
        if !out.contains(&set) {
            out.push(set);
        }
    }
    Ok(out)
}

/// At most two clique vertices survive a feedback vertex set, and two survivors
/// force out their common independent-side neighbors.
pub fn enumerate_minimal_fvs_split(g: &Graph) -> Result<Vec<VertexSet>, SolveError> {
    let p = partition(g)?;
    let clique: Vec<Vertex> = p.clique.iter().copied().collect();
    let mut candidates: Vec<VertexSet> = Vec::new();
    for (i, &u) in clique.iter().enumerate() {
        let nu = independent_neighbors(g, &p, u);
        for &v in &clique[i + 1..] {
            let mut set = p.clique.clone();
            set.remove(&u);
            set.remove(&v);
            set.extend(nu.intersection(&independent_neighbors(g, &p, v)));
            candidates.push(set);
        }
        let mut set = p.clique.clone();
        set.remove(&u);
        candidates.push(set);
    }
    candidates.push(p.clique.clone());

    let mut out: Vec<VertexSet> = Vec::new();
    let mut seen = BTreeSet::new();
    for set in candidates {
        if seen.insert(set.clone()) && is_minimal_fvs(g, &set) {
            out.push(set);
        }
    }
    Ok(out)
}

/// `set` is a feedback vertex set and no single vertex can be dropped from it.
fn is_minimal_fvs(g: &Graph, set: &VertexSet) -> bool {
    let mut dsu = Dsu::new(g.n());
    for &(u, v) in g.edges() {
        if !set.contains(&u) && !set.contains(&v) && !dsu.union(u, v) {
            return false;
        }
    }
    // putting v back closes a cycle iff two of its remaining neighbors share a tree
    set.iter().all(|&v| {
        let mut roots = BTreeSet::new();
        g.neighbors(v).iter().filter(|w| !set.contains(w)).any(|&w| !roots.insert(dsu.find(w)))
    })
}

/// Decides VC, IS and FVS discovery on a connected split graph; on a
/// yes-instance returns a shortest witness.
pub fn solve_split(inst: &DiscoveryInstance) -> Result<Option<Discovery>, SolveError> {
    let g = &inst.graph;
    let k = inst.k();
    let candidates: Vec<VertexSet> = match inst.kind {
        Problem::VertexCover => enumerate_minimal_vertex_covers_split(g)?,
        Problem::FeedbackVertexSet => enumerate_minimal_fvs_split(g)?,
        Problem::IndependentSet => enumerate_maximal_independent_sets_split(g)?,
        Problem::DominatingSet => {
            return Err(SolveError::UnsupportedProblem { method: "split", kind: inst.kind });
        }
    };
    inst.require_connected()?;
    let fits = |c: &VertexSet| if inst.kind == Problem::IndependentSet { c.len() >= k } else { c.len() <= k };

    let tokens: Vec<Vertex> = inst.start.iter().copied().collect();
    let dist: Vec<Vec<usize>> = tokens.iter().map(|&u| g.hop_distances(u)).collect::<Result<_, _>>()?;
    let mut best: Option<(u64, Vec<(Vertex, Vertex)>)> = None;
    for cand in candidates.iter().filter(|c| fits(c)) {
        let cand: Vec<Vertex> = cand.iter().copied().collect();
        let cost = CostMatrix::from_fn(tokens.len(), cand.len(), |i, j| Some(dist[i][cand[j]] as u64));
        let a = assign_or_empty(&cost).expect("all weights are finite");
        if best.as_ref().is_some_and(|(total, _)| *total <= a.total) {
            continue;
        }
        best = Some((a.total, a.pairs.iter().map(|&(i, j)| (tokens[i], cand[j])).collect()));
    }
    match best {
        Some((total, targets)) if total as usize <= inst.budget => {
            let witness = realize_matching(g, &inst.start, &targets)?;
            Ok(Some(Discovery { steps: witness.len(), witness }))
        }
        _ => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::instance::validate_sequence;
    use crate::oracle::discover_min_moves;

    fn set(items: &[usize]) -> VertexSet {
        items.iter().copied().collect()
    }

    // Q = {a, b}, I = {c, d}
    fn small() -> Graph {
        Graph::from_names(&["a", "b", "c", "d"], &[("a", "b"), ("a", "c"), ("b", "d")]).unwrap()
    }

    fn sorted(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
        sets.sort();
        sets
    }

    #[test]
    fn vertex_covers() {
        assert_eq!(
            sorted(enumerate_minimal_vertex_covers_split(&small()).unwrap()),
            sorted(vec![set(&[0, 1]), set(&[1, 2]), set(&[0, 3])])
        );
        assert_eq!(sorted(enumerate_minimal_vertex_covers_split(&path(2)).unwrap()), vec![set(&[0]), set(&[1])]);
        assert_eq!(sorted(enumerate_minimal_vertex_covers_split(&star(3)).unwrap()), vec![set(&[0]), set(&[1, 2, 3])]);
        assert_eq!(enumerate_minimal_vertex_covers_split(&cycle(4)), Err(SolveError::NotSplit));
    }

    #[test]
    fn independent_sets() {
        assert_eq!(
            sorted(enumerate_maximal_independent_sets_split(&small()).unwrap()),
            sorted(vec![set(&[2, 3]), set(&[0, 3]), set(&[1, 2])])
        );
        assert_eq!(
            sorted(enumerate_maximal_independent_sets_split(&complete(3)).unwrap()),
            vec![set(&[0]), set(&[1]), set(&[2])]
        );
        assert_eq!(
            sorted(enumerate_maximal_independent_sets_split(&star(3)).unwrap()),
            vec![set(&[0]), set(&[1, 2, 3])]
        );
    }

    #[test]
    fn feedback_vertex_sets() {
        let g = Graph::from_names(&["a", "b", "c", "x"], &[("a", "b"), ("b", "c"), ("a", "c"), ("x", "a"), ("x", "b")])
            .unwrap();
        assert_eq!(sorted(enumerate_minimal_fvs_split(&g).unwrap()), vec![set(&[0]), set(&[1]), set(&[2, 3])]);
        assert_eq!(enumerate_minimal_fvs_split(&star(3)).unwrap(), vec![set(&[])]);
        let pairs = sorted(enumerate_minimal_fvs_split(&complete(4)).unwrap());
        assert_eq!(pairs.len(), 6);
        assert!(pairs.iter().all(|s| s.len() == 2));
    }

    #[test]
    fn documented_solves() {
        let vc = DiscoveryInstance::new(small(), Problem::VertexCover, set(&[2, 3]), 1).unwrap();
        let d = solve_split(&vc).unwrap().unwrap();
        assert_eq!(d.steps, 1);
        assert!(validate_sequence(&vc, &d.witness).unwrap().feasible);

        let is = DiscoveryInstance::new(small(), Problem::IndependentSet, set(&[0, 1]), 2).unwrap();
        assert_eq!(solve_split(&is).unwrap().map(|d| d.steps), Some(1));

        let g = Graph::from_names(&["a", "b", "c", "x"], &[("a", "b"), ("b", "c"), ("a", "c"), ("x", "a")]).unwrap();
        let fvs = DiscoveryInstance::new(g, Problem::FeedbackVertexSet, set(&[3]), 1).unwrap();
        let expected = discover_min_moves(&fvs).unwrap().map(|d| d.steps);
        assert_eq!(solve_split(&fvs).unwrap().map(|d| d.steps), expected);
        assert_eq!(expected, Some(1));
    }

    #[test]
    fn rejects_dominating_set() {
        let ds = DiscoveryInstance::new(small(), Problem::DominatingSet, set(&[2]), 1).unwrap();
        assert!(matches!(solve_split(&ds), Err(SolveError::UnsupportedProblem { .. })));
    }
}
