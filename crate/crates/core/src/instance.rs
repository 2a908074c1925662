//! Discovery instances, token moves and feasibility predicates.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex, VertexSet};

/// A configuration is a set of occupied vertices, one token each.
pub type Configuration = VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Problem {
    VertexCover,
    IndependentSet,
    DominatingSet,
    FeedbackVertexSet,
}

impl Problem {
    pub const ALL: [Problem; 4] =
        [Problem::VertexCover, Problem::IndependentSet, Problem::DominatingSet, Problem::FeedbackVertexSet];

    pub fn code(self) -> &'static str {
        match self {
            Problem::VertexCover => "VC",
            Problem::IndependentSet => "IS",
            Problem::DominatingSet => "DS",
            Problem::FeedbackVertexSet => "FVS",
        }
    }

    /// Feasibility of `set` for this problem on `g`.
    pub fn is_solution(self, g: &Graph, set: &VertexSet) -> bool {
        let mut mask = vec![false; g.n()];
        for &v in set {
            mask[v] = true;
        }
        self.is_solution_mask(g, &mask)
    }

    pub(crate) fn is_solution_mask(self, g: &Graph, inside: &[bool]) -> bool {
        match self {
            Problem::VertexCover => g.edges().iter().all(|&(u, v)| inside[u] || inside[v]),
            Problem::IndependentSet => g.edges().iter().all(|&(u, v)| !(inside[u] && inside[v])),
            Problem::DominatingSet => g.vertices().all(|v| inside[v] || g.neighbors(v).iter().any(|&w| inside[w])),
            Problem::FeedbackVertexSet => g.is_forest_without(inside),
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "VC" => Ok(Problem::VertexCover),
            "IS" => Ok(Problem::IndependentSet),
            "DS" => Ok(Problem::DominatingSet),
            "FVS" => Ok(Problem::FeedbackVertexSet),
            other => Err(format!("unknown problem `{other}` (expected VC, IS, DS or FVS)")),
        }
    }
}

/// Checks whether `set` is a solution of `kind` on `g`.
pub fn check_solution(g: &Graph, kind: Problem, set: &VertexSet) -> bool {
    kind.is_solution(g, set)
}

/// Slide of one token along an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Move {
    pub from: Vertex,
    pub to: Vertex,
}

impl Move {
    pub fn new(from: Vertex, to: Vertex) -> Self {
        Move { from, to }
    }
}

pub type MoveSequence = Vec<Move>;

/// A successful discovery: the minimum number of moves and a witness of that length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discovery {
    pub steps: usize,
    pub witness: MoveSequence,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscoveryInstance {
    pub graph: Graph,
    pub kind: Problem,
    pub start: Configuration,
    pub budget: usize,
}

impl DiscoveryInstance {
    pub fn new(graph: Graph, kind: Problem, start: Configuration, budget: usize) -> Result<Self, GraphError> {
        if let Some(&v) = start.iter().find(|&&v| v >= graph.n()) {
            return Err(GraphError::UnknownVertex(format!("#{v}")));
        }
        Ok(DiscoveryInstance { graph, kind, start, budget })
    }

    /// Number of tokens.
    pub fn k(&self) -> usize {
        self.start.len()
    }

    pub fn with_budget(&self, budget: usize) -> Self {
        DiscoveryInstance { budget, ..self.clone() }
    }

    pub(crate) fn require_connected(&self) -> Result<(), GraphError> {
        if self.graph.is_connected() {
            Ok(())
        } else {
            Err(GraphError::Disconnected)
        }
    }
}

/// Caps the budget at `k * diam(G)`.
pub fn normalize_budget(inst: &DiscoveryInstance) -> Result<DiscoveryInstance, GraphError> {
    let cap = inst.k() * inst.graph.diameter()?;
    Ok(inst.with_budget(inst.budget.min(cap)))
}

/// True iff `b` arises from `a` by sliding one token along an edge to a free vertex.
pub fn configurations_adjacent(g: &Graph, a: &Configuration, b: &Configuration) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut left = a.difference(b);
    let mut entered = b.difference(a);
    match (left.next(), left.next(), entered.next(), entered.next()) {
        (Some(&x), None, Some(&y), None) => g.has_edge(x, y),
        _ => false,
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error("move {step}: no token on `{vertex}`")]
    FromUnoccupied { step: usize, vertex: String },
    #[error("move {step}: destination `{vertex}` already occupied")]
    ToOccupied { step: usize, vertex: String },
    #[error("move {step}: `{from}` and `{to}` are not adjacent")]
    NonEdge { step: usize, from: String, to: String },
    #[error("sequence uses {used} moves but the budget is {budget}")]
    BudgetExceeded { used: usize, budget: usize },
}

/// Outcome of replaying a valid move sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Replay {
    pub final_config: Configuration,
    pub steps: usize,
    /// Whether the final configuration solves the instance's problem.
    pub feasible: bool,
}

/// Replays `seq` from the instance's start configuration.
pub fn validate_sequence(inst: &DiscoveryInstance, seq: &[Move]) -> Result<Replay, SequenceError> {
    let g = &inst.graph;
    let mut occupied = vec![false; g.n()];
    for &v in &inst.start {
        occupied[v] = true;
    }
    for (step, mv) in seq.iter().enumerate() {
        let step = step + 1;
        if !occupied[mv.from] {
            return Err(SequenceError::FromUnoccupied { step, vertex: g.name(mv.from).into() });
        }
        if occupied[mv.to] {
            return Err(SequenceError::ToOccupied { step, vertex: g.name(mv.to).into() });
        }
        if !g.has_edge(mv.from, mv.to) {
            return Err(SequenceError::NonEdge { step, from: g.name(mv.from).into(), to: g.name(mv.to).into() });
        }
        occupied[mv.from] = false;
        occupied[mv.to] = true;
    }
    if seq.len() > inst.budget {
        return Err(SequenceError::BudgetExceeded { used: seq.len(), budget: inst.budget });
    }
    let feasible = inst.kind.is_solution_mask(g, &occupied);
    let final_config = g.vertices().filter(|&v| occupied[v]).collect();
    Ok(Replay { final_config, steps: seq.len(), feasible })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn set(items: &[usize]) -> VertexSet {
        items.iter().copied().collect()
    }

    #[test]
    fn feasibility_predicates() {
        assert!(check_solution(&complete(3), Problem::VertexCover, &set(&[0, 1])));
        assert!(!check_solution(&cycle(4), Problem::FeedbackVertexSet, &set(&[])));
        assert!(check_solution(&path(3), Problem::DominatingSet, &set(&[1])));
        assert!(check_solution(&cycle(4), Problem::IndependentSet, &set(&[0, 2])));
        assert!(!check_solution(&cycle(4), Problem::IndependentSet, &set(&[0, 1])));
    }

    #[test]
    fn adjacency_of_configurations() {
        let p3 = path(3);
        assert!(configurations_adjacent(&p3, &set(&[0]), &set(&[1])));
        assert!(!configurations_adjacent(&p3, &set(&[0]), &set(&[2])));
        assert!(!configurations_adjacent(&p3, &set(&[0, 1]), &set(&[1, 2])));
        assert!(configurations_adjacent(&p3, &set(&[0, 1]), &set(&[0, 2])));
        assert!(!configurations_adjacent(&p3, &set(&[0]), &set(&[0])));
    }

    #[test]
    fn replay() {
        let inst = DiscoveryInstance::new(path(3), Problem::VertexCover, set(&[0]), 1).unwrap();
        let r = validate_sequence(&inst, &[Move::new(0, 1)]).unwrap();
        assert_eq!(r.final_config, set(&[1]));
        assert_eq!(r.steps, 1);
        assert!(r.feasible);
        assert!(matches!(validate_sequence(&inst, &[Move::new(0, 2)]), Err(SequenceError::NonEdge { .. })));
        assert!(matches!(validate_sequence(&inst, &[Move::new(1, 2)]), Err(SequenceError::FromUnoccupied { .. })));
        assert!(matches!(
            validate_sequence(&inst, &[Move::new(0, 1), Move::new(1, 2)]),
            Err(SequenceError::BudgetExceeded { used: 2, budget: 1 })
        ));
        let two = DiscoveryInstance::new(path(3), Problem::VertexCover, set(&[0, 1]), 3).unwrap();
        assert!(matches!(validate_sequence(&two, &[Move::new(0, 1)]), Err(SequenceError::ToOccupied { .. })));
    }

    #[test]
    fn budget_normalization() {
        let k3 = DiscoveryInstance::new(complete(3), Problem::VertexCover, set(&[0, 1]), 100).unwrap();
        assert_eq!(normalize_budget(&k3).unwrap().budget, 2);
        let p4 = DiscoveryInstance::new(path(4), Problem::VertexCover, set(&[0]), 2).unwrap();
        assert_eq!(normalize_budget(&p4).unwrap().budget, 2);
        let p4b = DiscoveryInstance::new(path(4), Problem::VertexCover, set(&[0, 1]), 10).unwrap();
        assert_eq!(normalize_budget(&p4b).unwrap().budget, 6);
        let disc = DiscoveryInstance::new(Graph::numbered(2, []).unwrap(), Problem::VertexCover, set(&[0]), 3).unwrap();
        assert_eq!(normalize_budget(&disc), Err(GraphError::Disconnected));
    }

    #[test]
    fn problem_codes_round_trip() {
        for p in Problem::ALL {
            assert_eq!(p.code().parse::<Problem>().unwrap(), p);
        }
        assert!("XY".parse::<Problem>().is_err());
    }
}
