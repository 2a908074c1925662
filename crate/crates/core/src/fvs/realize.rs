//! Turning a token-to-target assignment into an actual slide sequence.
//!
//! A token heads for its target along a shortest path. Tokens sitting on
//! that path are not obstacles: the path is walked as a chain of shifts, the
//! token nearest the target moving first, so the net effect is one token
//! leaving the start of the path and one arriving at its end, with exactly
//! `dist` slides. If the target itself is occupied, the two tokens exchange
//! targets, which never increases the remaining total distance.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::instance::{Configuration, Move, MoveSequence};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealizeError {
    #[error("invalid target assignment: {0}")]
    InvalidTarget(String),
    #[error("move scheduling did not terminate")]
    Deadlock,
}

/// Moves the tokens of `start` so that every target in `targets` ends up
/// occupied. `targets` maps start vertices to pairwise distinct target vertices;
/// tokens not listed stay put unless displaced.
pub fn realize_matching(
    g: &Graph,
    start: &Configuration,
    targets: &[(Vertex, Vertex)],
) -> Result<MoveSequence, RealizeError> {
    let mut pos: Vec<Vertex> = start.iter().copied().collect();
    let slot: HashMap<Vertex, usize> = pos.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut goal: Vec<Option<Vertex>> = vec![None; pos.len()];
    let mut seen = BTreeSet::new();
    for &(from, to) in targets {
        let &i =
            slot.get(&from).ok_or_else(|| RealizeError::InvalidTarget(format!("no token on `{}`", g.name(from))))?;
        if to >= g.n() {
            return Err(RealizeError::InvalidTarget(format!("unknown vertex #{to}")));
        }
        if goal[i].replace(to).is_some() || !seen.insert(to) {
            return Err(RealizeError::InvalidTarget(format!("`{}` or `{}` listed twice", g.name(from), g.name(to))));
        }
    }

    let mut owner: Vec<Option<usize>> = vec![None; g.n()];
    for (i, &v) in pos.iter().enumerate() {
        owner[v] = Some(i);
    }
    // distances towards each target
    let mut towards: HashMap<Vertex, Vec<Option<usize>>> = HashMap::new();
    let mut moves = Vec::new();
    let guard = 2 * pos.len() + 1;

    for _ in 0..guard {
        let Some(i) = (0..pos.len()).find(|&i| goal[i].is_some_and(|t| t != pos[i])) else {
            return Ok(moves);
        };
        let t = goal[i].unwrap();
        if let Some(j) = owner[t] {
            goal.swap(i, j);
            continue;
        }
        let dist = towards.entry(t).or_insert_with(|| g.distances_from(t));
        let mut path = vec![pos[i]];
        let mut at = pos[i];
        let Some(mut d) = dist[at] else {
            return Err(RealizeError::InvalidTarget(format!("`{}` cannot reach `{}`", g.name(at), g.name(t))));
        };
        while d > 0 {
            at = *g.neighbors(at).iter().find(|&&w| dist[w] == Some(d - 1)).unwrap();
            path.push(at);
            d -= 1;
        }
        // (path index, token) for every token on the path, in path order
        let occ: Vec<(usize, usize)> =
            path.iter().enumerate().filter_map(|(s, &v)| owner[v].map(|who| (s, who))).collect();
        let mut end = path.len() - 1;
        for &(s, who) in occ.iter().rev() {
            for w in path[s..=end].windows(2) {
                moves.push(Move::new(w[0], w[1]));
            }
            owner[path[s]] = None;
            owner[path[end]] = Some(who);
            pos[who] = path[end];
            end = s;
        }
        // every token takes over the target of the token it replaced
        let old: Vec<Option<Vertex>> = occ.iter().map(|&(_, who)| goal[who]).collect();
        for j in 1..occ.len() {
            goal[occ[j - 1].1] = old[j];
        }
        goal[occ[occ.len() - 1].1] = Some(t);
    }
    Err(RealizeError::Deadlock)
}
