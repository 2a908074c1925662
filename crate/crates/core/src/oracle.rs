//! Exhaustive breadth-first search over token configurations.
//!
//! This is the reference every other solver is checked against, so it does
//! no pruning: states are canonical sorted vertex tuples, the visited map is
//! exact, and exceeding the state cap is an error rather than a truncation.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{GraphError, Vertex};
use crate::instance::{Discovery, DiscoveryInstance, Move, MoveSequence};

pub const DEFAULT_STATE_CAP: usize = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("configuration space exceeds the cap of {0} states")]
    StateCapExceeded(usize),
    #[error("graph has {0} vertices; the oracle supports at most 65536")]
    TooLarge(usize),
}

type State = Box<[u16]>;

/// Shortest discovery within the budget, using the default state cap.
pub fn discover_min_moves(inst: &DiscoveryInstance) -> Result<Option<Discovery>, OracleError> {
    discover_min_moves_capped(inst, DEFAULT_STATE_CAP)
}

pub fn discover_min_moves_capped(inst: &DiscoveryInstance, state_cap: usize) -> Result<Option<Discovery>, OracleError> {
    inst.require_connected()?;
    let g = &inst.graph;
    if g.n() > usize::from(u16::MAX) + 1 {
        return Err(OracleError::TooLarge(g.n()));
    }
    let mut occupied = vec![false; g.n()];
    let is_goal = |state: &[u16], occupied: &mut Vec<bool>| {
        occupied.iter_mut().for_each(|o| *o = false);
        for &v in state {
            occupied[v as usize] = true;
        }
        inst.kind.is_solution_mask(g, occupied)
    };

    let start: State = inst.start.iter().map(|&v| v as u16).collect();
    if is_goal(&start, &mut occupied) {
        return Ok(Some(Discovery { steps: 0, witness: Vec::new() }));
    }

    let mut states: Vec<State> = vec![start.clone()];
    // parent index and the move that produced each state
    let mut parent: Vec<(u32, Move)> = vec![(0, Move::new(0, 0))];
    let mut seen: HashMap<State, u32> = HashMap::new();
    seen.insert(start, 0);

    let mut frontier = 0..1;
    for depth in 1..=inst.budget {
        let level_end = states.len();
        for idx in frontier.clone() {
            let state = states[idx].clone();
            for (pos, &from) in state.iter().enumerate() {
                for &to in g.neighbors(from as Vertex) {
                    let to16 = to as u16;
                    if state.binary_search(&to16).is_ok() {
                        continue;
                    }
                    let mut next: Vec<u16> = state.to_vec();
                    next.remove(pos);
                    let at = next.binary_search(&to16).unwrap_err();
                    next.insert(at, to16);
                    let next: State = next.into_boxed_slice();
                    if seen.contains_key(&next) {
                        continue;
                    }
                    if states.len() >= state_cap {
                        return Err(OracleError::StateCapExceeded(state_cap));
                    }
                    let id = states.len() as u32;
                    let mv = Move::new(from as Vertex, to);
                    let goal = is_goal(&next, &mut occupied);
                    seen.insert(next.clone(), id);
                    states.push(next);
                    parent.push((idx as u32, mv));
                    if goal {
                        return Ok(Some(Discovery { steps: depth, witness: trace(&parent, id) }));
                    }
                }
            }
        }
        if states.len() == level_end {
            break;
        }
        frontier = level_end..states.len();
    }
    Ok(None)
}

fn trace(parent: &[(u32, Move)], mut id: u32) -> MoveSequence {
    let mut moves = Vec::new();
    while id != 0 {
        let (p, mv) = parent[id as usize];
        moves.push(mv);
        id = p;
    }
    moves.reverse();
    moves
}

/// Whether some feasible configuration is reachable within the budget.
pub fn decide(inst: &DiscoveryInstance) -> Result<bool, OracleError> {
    Ok(discover_min_moves(inst)?.is_some())
}
