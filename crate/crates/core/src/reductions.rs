//! Instance generators for the hardness reductions and the diameter gadgets.

use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};
use crate::instance::{Configuration, DiscoveryInstance, Move, MoveSequence, Problem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("universe size {0} is not a multiple of three")]
    UniverseSize(usize),
    #[error("set {set}: element {element} outside 1..={size}")]
    ElementOutOfRange { set: usize, element: usize, size: usize },
    #[error("set {0} repeats an element")]
    RepeatedElement(usize),
    #[error("not an exact cover: {0}")]
    NotExact(String),
    #[error("expected a {expected} instance, got {got}")]
    WrongProblem { expected: Problem, got: Problem },
    #[error("placement has {got} tokens, expected {expected}")]
    PlacementSize { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Exact cover by 3-sets over the universe `1..=size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct X3cInstance {
    size: usize,
    family: Vec<[usize; 3]>,
}

impl X3cInstance {
    /// Elements are 1-based; each triple is stored sorted.
    pub fn new(size: usize, family: Vec<[usize; 3]>) -> Result<Self, ReductionError> {
        if !size.is_multiple_of(3) {
            return Err(ReductionError::UniverseSize(size));
        }
        let mut sorted = Vec::with_capacity(family.len());
        for (i, mut set) in family.into_iter().enumerate() {
            if let Some(&element) = set.iter().find(|&&e| e == 0 || e > size) {
                return Err(ReductionError::ElementOutOfRange { set: i + 1, element, size });
            }
            set.sort_unstable();
            if set[0] == set[1] || set[1] == set[2] {
                return Err(ReductionError::RepeatedElement(i + 1));
            }
            sorted.push(set);
        }
        Ok(X3cInstance { size, family: sorted })
    }

    pub fn universe_size(&self) -> usize {
        self.size
    }

    pub fn family(&self) -> &[[usize; 3]] {
        &self.family
    }

    /// `n`, the number of sets in an exact cover.
    pub fn n(&self) -> usize {
        self.size / 3
    }

    /// Checks that the 0-based family indices in `cover` form an exact cover.
    pub fn check_cover(&self, cover: &[usize]) -> Result<(), ReductionError> {
        let mut hit = vec![false; self.size + 1];
        let mut used = HashSet::new();
        for &i in cover {
            let set = self.family.get(i).ok_or_else(|| ReductionError::NotExact(format!("no set with index {i}")))?;
            if !used.insert(i) {
                return Err(ReductionError::NotExact(format!("set {i} chosen twice")));
            }
            for &e in set {
                if std::mem::replace(&mut hit[e], true) {
                    return Err(ReductionError::NotExact(format!("element {e} covered twice")));
                }
            }
        }
        if let Some(e) = (1..=self.size).find(|&e| !hit[e]) {
            return Err(ReductionError::NotExact(format!("element {e} uncovered")));
        }
        Ok(())
    }

    /// Brute-force search for an exact cover.
    pub fn has_exact_cover(&self) -> bool {
        fn go(x: &X3cInstance, covered: &mut Vec<bool>, from: usize) -> bool {
            let Some(e) = (1..=x.size).find(|&e| !covered[e]) else {
                return true;
            };
            for i in from..x.family.len() {
                let set = x.family[i];
                if set.contains(&e) && set.iter().all(|&f| !covered[f]) {
                    set.iter().for_each(|&f| covered[f] = true);
                    let found = go(x, covered, 0);
                    set.iter().for_each(|&f| covered[f] = false);
                    if found {
                        return true;
                    }
                }
            }
            false
        }
        go(self, &mut vec![false; self.size + 1], 0)
    }
}

fn clique_name(j: usize) -> String {
    format!("q{j}")
}

fn root_name(i: usize) -> String {
    format!("v{i}")
}

fn leaf_name(i: usize, j: usize) -> String {
    format!("v{i}^{j}")
}

/// Vertex-cover discovery instance: a clique `q0..q{3n}` and, per set, a star
/// whose five vertices see the clique vertices of the set's elements. Tokens
/// sit on all star leaves and the budget is `4n`.
pub fn x3c_to_vcd(x: &X3cInstance) -> DiscoveryInstance {
    let q = x.size + 1;
    let mut names: Vec<String> = (0..q).map(clique_name).collect();
    let mut edges: Vec<(Vertex, Vertex)> = (0..q).flat_map(|a| (a + 1..q).map(move |b| (a, b))).collect();
    let mut start = Configuration::new();
    for (i, set) in x.family.iter().enumerate() {
        let root = names.len();
        names.push(root_name(i + 1));
        for j in 1..=4 {
            names.push(leaf_name(i + 1, j));
            edges.push((root, root + j));
            start.insert(root + j);
        }
        for star_vertex in root..root + 5 {
            edges.extend(set.iter().map(|&e| (e, star_vertex)));
        }
    }
    let graph = Graph::from_index_edges(names, edges).expect("generated names are unique");
    debug_assert!(graph.is_connected() && graph.is_chordal());
    DiscoveryInstance::new(graph, Problem::VertexCover, start, 4 * x.n()).expect("tokens lie in the graph")
}

/// The `4n` slides turning an exact cover into a vertex cover of the
/// [`x3c_to_vcd`] instance. `cover` holds 0-based family indices.
pub fn x3c_witness_to_moves(x: &X3cInstance, cover: &[usize]) -> Result<MoveSequence, ReductionError> {
    x.check_cover(cover)?;
    let mut chosen = cover.to_vec();
    chosen.sort_unstable();
    // vertex ids follow the layout of x3c_to_vcd
    let q = x.size + 1;
    let root = |i: usize| q + 5 * i;
    let mut moves = Vec::with_capacity(4 * chosen.len());
    for i in chosen {
        for (leaf, &e) in (2..=4).zip(&x.family[i]) {
            moves.push(Move::new(root(i) + leaf, e));
        }
        moves.push(Move::new(root(i) + 1, root(i)));
    }
    Ok(moves)
}

/// A name not yet taken, derived from `base`.
fn fresh(base: String, taken: &mut HashSet<String>) -> String {
    let mut name = base;
    while taken.contains(&name) {
        name.push('\'');
    }
    taken.insert(name.clone());
    name
}

fn extend(g: &Graph, added: Vec<String>, edges: Vec<(Vertex, Vertex)>) -> Graph {
    let names: Vec<String> = g.names().iter().cloned().chain(added).collect();
    Graph::from_index_edges(names, g.edges().iter().copied().chain(edges)).expect("fresh names are unique")
}

/// Replaces every edge `uv` by a triangle on `u`, `v` and a new vertex `e_u_v`.
pub fn vcd_to_fvsd(inst: &DiscoveryInstance) -> Result<DiscoveryInstance, ReductionError> {
    if inst.kind != Problem::VertexCover {
        return Err(ReductionError::WrongProblem { expected: Problem::VertexCover, got: inst.kind });
    }
    let g = &inst.graph;
    let mut taken: HashSet<String> = g.names().iter().cloned().collect();
    let mut added = Vec::new();
    let mut edges = Vec::new();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let e = g.n() + i;
        added.push(fresh(format!("e_{}_{}", g.name(u), g.name(v)), &mut taken));
        edges.extend([(u, e), (v, e)]);
    }
    let graph = extend(g, added, edges);
    Ok(DiscoveryInstance::new(graph, Problem::FeedbackVertexSet, inst.start.clone(), inst.budget)?)
}

/// Adds a universal vertex `u`; vertex covers grow by exactly one.
pub fn diameterize_vc(g: &Graph, k: usize) -> (Graph, usize) {
    let mut taken: HashSet<String> = g.names().iter().cloned().collect();
    let u = g.n();
    let graph = extend(g, vec![fresh("u".into(), &mut taken)], g.vertices().map(|v| (v, u)).collect());
    (graph, k + 1)
}

/// Adds a universal vertex `s` and `k + 2` triangles hanging off it, which
/// force `s` into every feedback vertex set of size at most `k + 1`.
pub fn diameterize_fvs(g: &Graph, k: usize) -> (Graph, usize) {
    let mut taken: HashSet<String> = g.names().iter().cloned().collect();
    let s = g.n();
    let mut added = vec![fresh("s".into(), &mut taken)];
    let mut edges: Vec<(Vertex, Vertex)> = g.vertices().map(|v| (v, s)).collect();
    for i in 1..=k + 2 {
        let a = s + 2 * i - 1;
        added.push(fresh(format!("t{i}^1"), &mut taken));
        added.push(fresh(format!("t{i}^2"), &mut taken));
        edges.extend([(s, a), (s, a + 1), (a, a + 1)]);
    }
    (extend(g, added, edges), k + 1)
}

/// The discovery instance with budget `k * diam(g)`, which is a yes-instance
/// iff `g` has a solution of size `k`.
pub fn search_to_discovery(
    g: &Graph,
    kind: Problem,
    k: usize,
    placement: &Configuration,
) -> Result<DiscoveryInstance, ReductionError> {
    if placement.len() != k {
        return Err(ReductionError::PlacementSize { expected: k, got: placement.len() });
    }
    let budget = k * g.diameter()?;
    Ok(DiscoveryInstance::new(g.clone(), kind, placement.clone(), budget)?)
}

/// The lowest-indexed `k` vertices, a canonical placement.
pub fn first_vertices(g: &Graph, k: usize) -> Configuration {
    g.vertices().take(k).collect::<BTreeSet<_>>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::instance::validate_sequence;
    use crate::oracle::decide;

    pub(crate) fn six_set_example() -> X3cInstance {
        X3cInstance::new(9, vec![[1, 2, 3], [2, 3, 4], [1, 5, 6], [5, 6, 7], [6, 7, 8], [7, 8, 9]]).unwrap()
    }

    #[test]
    fn x3c_validation() {
        assert_eq!(X3cInstance::new(4, vec![]), Err(ReductionError::UniverseSize(4)));
        assert!(matches!(X3cInstance::new(3, vec![[1, 2, 4]]), Err(ReductionError::ElementOutOfRange { .. })));
        assert_eq!(X3cInstance::new(3, vec![[1, 1, 2]]), Err(ReductionError::RepeatedElement(1)));
        assert!(six_set_example().has_exact_cover());
        assert!(!X3cInstance::new(6, vec![[1, 2, 3], [3, 4, 5]]).unwrap().has_exact_cover());
    }

    #[test]
    fn six_set_example_construction() {
        let x = six_set_example();
        let inst = x3c_to_vcd(&x);
        assert_eq!((inst.graph.n(), inst.k(), inst.budget), (40, 24, 12));
        assert!(inst.graph.is_chordal() && inst.graph.is_connected());
        let moves = x3c_witness_to_moves(&x, &[1, 2, 5]).unwrap();
        assert_eq!(moves.len(), 12);
        assert!(validate_sequence(&inst, &moves).unwrap().feasible);
        assert!(matches!(x3c_witness_to_moves(&x, &[0, 1]), Err(ReductionError::NotExact(_))));
    }

    #[test]
    fn small_x3c_instances() {
        let one = X3cInstance::new(3, vec![[1, 2, 3]]).unwrap();
        let inst = x3c_to_vcd(&one);
        assert_eq!((inst.graph.n(), inst.k(), inst.budget), (9, 4, 4));
        let moves = x3c_witness_to_moves(&one, &[0]).unwrap();
        assert_eq!(moves.len(), 4);
        assert!(validate_sequence(&inst, &moves).unwrap().feasible);
        assert_eq!(inst.graph.name(moves[0].from), "v1^2");

        let none = x3c_to_vcd(&X3cInstance::new(3, vec![]).unwrap());
        assert_eq!((none.graph.n(), none.k(), none.budget), (4, 0, 4));
        assert!(!decide(&none).unwrap());
    }

    #[test]
    fn triangulation() {
        let edge = Graph::from_names(&["a", "b"], &[("a", "b")]).unwrap();
        let inst = DiscoveryInstance::new(edge, Problem::VertexCover, [0].into(), 0).unwrap();
        let t = vcd_to_fvsd(&inst).unwrap();
        assert_eq!((t.graph.n(), t.graph.m(), t.kind), (3, 3, Problem::FeedbackVertexSet));
        assert_eq!(t.graph.name(2), "e_a_b");

        let p3 = DiscoveryInstance::new(path(3), Problem::VertexCover, [0].into(), 1).unwrap();
        let t = vcd_to_fvsd(&p3).unwrap();
        assert_eq!(t.graph.n(), 5);
        assert!(t.graph.is_chordal());
        assert!(decide(&p3).unwrap() && decide(&t).unwrap());
        assert!(vcd_to_fvsd(&t).is_err());
    }

    #[test]
    fn diameter_gadgets() {
        let (g, k) = diameterize_vc(&path(3), 1);
        assert_eq!((g.n(), g.diameter().unwrap(), k), (4, 2, 2));
        let (g, k) = diameterize_vc(&complete(3), 2);
        assert_eq!((g.m(), g.diameter().unwrap(), k), (6, 1, 3));

        let (g, k) = diameterize_fvs(&cycle(4), 1);
        assert_eq!((g.n(), k), (11, 2));
        assert!(g.diameter().unwrap() <= 2);

        // a vertex named `s` already exists
        let named = Graph::from_names(&["s", "x"], &[("s", "x")]).unwrap();
        let (g, _) = diameterize_fvs(&named, 0);
        assert_eq!(g.name(2), "s'");
    }

    #[test]
    fn search_instances() {
        let k3 = search_to_discovery(&complete(3), Problem::VertexCover, 2, &[0, 1].into()).unwrap();
        assert_eq!(k3.budget, 2);
        let p4 = search_to_discovery(&path(4), Problem::FeedbackVertexSet, 1, &[0].into()).unwrap();
        assert_eq!(p4.budget, 3);
        assert!(matches!(
            search_to_discovery(&path(4), Problem::VertexCover, 2, &[0].into()),
            Err(ReductionError::PlacementSize { expected: 2, got: 1 })
        ));
        assert_eq!(first_vertices(&path(4), 2), [0, 1].into());
    }
}
