//! Seeded generators and brute-force references shared by the integration tests.
#![allow(dead_code)]

pub mod corpus;

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tokslide::instance::validate_sequence;
use tokslide::{Discovery, DiscoveryInstance, Graph, Problem, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random spanning tree plus each remaining pair with probability `p`.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = BTreeSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (order[i], order[j]);
        edges.insert((a.min(b), a.max(b)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    Graph::numbered(n, edges).unwrap()
}

/// Connected split graph on `n` vertices with a shuffled clique/independent layout.
pub fn random_split_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let q = if n == 1 { 1 } else { rng.gen_range(1..n) };
    let (clique, independent) = order.split_at(q);
    let mut edges = BTreeSet::new();
    for (i, &a) in clique.iter().enumerate() {
        for &b in &clique[i + 1..] {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    let density: f64 = rng.gen_range(0.1..0.8);
    for &x in independent {
        let forced = clique[rng.gen_range(0..q)];
        for &c in clique {
            if c == forced || rng.gen_bool(density) {
                edges.insert((x.min(c), x.max(c)));
            }
        }
    }
    Graph::numbered(n, edges).unwrap()
}

pub fn random_configuration(rng: &mut ChaCha8Rng, n: usize, k: usize) -> VertexSet {
    let mut vs: Vec<usize> = (0..n).collect();
    vs.shuffle(rng);
    vs.into_iter().take(k).collect()
}

/// All `k`-subsets of `0..n`.
pub fn combinations(n: usize, k: usize) -> Vec<VertexSet> {
    fn go(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
        if cur.len() == k {
            out.push(cur.iter().copied().collect());
            return;
        }
        for v in from..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            go(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

pub fn mask_to_set(mask: u32) -> VertexSet {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Every subset of the vertex set satisfying `kind`.
pub fn solutions(g: &Graph, kind: Problem) -> Vec<VertexSet> {
    (0u32..1 << g.n()).map(mask_to_set).filter(|s| kind.is_solution(g, s)).collect()
}

/// Inclusion-minimal feedback vertex sets, by exhaustive search.
pub fn minimal_fvs(g: &Graph) -> BTreeSet<VertexSet> {
    let all: BTreeSet<VertexSet> = solutions(g, Problem::FeedbackVertexSet).into_iter().collect();
    all.iter()
        .filter(|s| {
            s.iter().all(|v| {
                let mut smaller = (*s).clone();
                smaller.remove(v);
                !all.contains(&smaller)
            })
        })
        .cloned()
        .collect()
}

/// Inclusion-maximal independent sets, by exhaustive search.
pub fn maximal_independent_sets(g: &Graph) -> BTreeSet<VertexSet> {
    solutions(g, Problem::IndependentSet)
        .into_iter()
        .filter(|s| g.vertices().filter(|v| !s.contains(v)).all(|v| g.neighbors(v).iter().any(|w| s.contains(w))))
        .collect()
}

/// Whether `g` has a solution of exactly `k` vertices.
pub fn has_solution_of_size(g: &Graph, kind: Problem, k: usize) -> bool {
    k <= g.n() && combinations(g.n(), k).iter().any(|s| kind.is_solution(g, s))
}

/// Whether `g` has a solution of at most `k` vertices.
pub fn has_solution_at_most(g: &Graph, kind: Problem, k: usize) -> bool {
    (0..=k.min(g.n())).any(|size| has_solution_of_size(g, kind, size))
}

/// Checks the witness contract: a valid replay within budget, ending feasible,
/// whose length equals the reported step count.
pub fn witness_ok(inst: &DiscoveryInstance, d: &Discovery) -> Result<(), String> {
    let replay = validate_sequence(inst, &d.witness).map_err(|e| e.to_string())?;
    if !replay.feasible {
        return Err("final configuration is not a solution".into());
    }
    if replay.steps != d.steps {
        return Err(format!("witness has {} moves but {} were reported", replay.steps, d.steps));
    }
    Ok(())
}
