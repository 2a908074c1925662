//! Simple undirected graphs with named vertices.
//!
//! Vertices are addressed by dense indices (`Vertex`) in declaration order;
//! names are kept only for I/O and diagnostics.

use std::collections::{BTreeSet, HashMap, VecDeque};

use thiserror::Error;

pub type Vertex = usize;

/// A vertex subset. Configurations, solutions and candidate sets all use this.
pub type VertexSet = BTreeSet<Vertex>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("graph is disconnected")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, Vertex>,
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    /// Builds a graph from vertex names and name pairs.
    pub fn from_names<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self, GraphError> {
        let names: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(name.clone()));
            }
        }
        let mut pairs = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let u = *index.get(a.as_ref()).ok_or_else(|| GraphError::UnknownVertex(a.as_ref().to_string()))?;
            let v = *index.get(b.as_ref()).ok_or_else(|| GraphError::UnknownVertex(b.as_ref().to_string()))?;
            pairs.push((u, v));
        }
        Self::assemble(names, index, pairs)
    }

    /// Builds a graph from owned names and index pairs.
    pub fn from_index_edges(
        names: Vec<String>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(name.clone()));
            }
        }
        let pairs: Vec<_> = edges.into_iter().collect();
        for &(u, v) in &pairs {
            for w in [u, v] {
                if w >= names.len() {
                    return Err(GraphError::UnknownVertex(format!("#{w}")));
                }
            }
        }
        Self::assemble(names, index, pairs)
    }

    /// Graph on `n` vertices named `v1..vn`.
    pub fn numbered(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        Self::from_index_edges((1..=n).map(|i| format!("v{i}")).collect(), edges)
    }

    fn assemble(
        names: Vec<String>,
        index: HashMap<String, Vertex>,
        pairs: Vec<(Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); names.len()];
        let mut seen = std::collections::HashSet::with_capacity(pairs.len());
        let mut edges = Vec::with_capacity(pairs.len());
        for (u, v) in pairs {
            if u == v {
                return Err(GraphError::SelfLoop(names[u].clone()));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(names[u].clone(), names[v].clone()));
            }
            adj[u].push(v);
            adj[v].push(u);
            edges.push(key);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { names, index, adj, edges })
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.index.get(name).copied()
    }

    pub fn vertex_id(&self, name: &str) -> Result<Vertex, GraphError> {
        self.vertex(name).ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    /// Resolves a list of names into a vertex set.
    pub fn vertex_set<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet, GraphError> {
        names.iter().map(|s| self.vertex_id(s.as_ref())).collect()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in insertion order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Breadth-first hop counts from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap() + 1;
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Distances from `source` in a connected graph.
    pub(crate) fn hop_distances(&self, source: Vertex) -> Result<Vec<usize>, GraphError> {
        self.distances_from(source).into_iter().map(|d| d.ok_or(GraphError::Disconnected)).collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.distances_from(0).iter().all(Option::is_some)
    }

    pub fn diameter(&self) -> Result<usize, GraphError> {
        let mut best = 0;
        for v in self.vertices() {
            for d in self.distances_from(v) {
                best = best.max(d.ok_or(GraphError::Disconnected)?);
            }
        }
        Ok(best)
    }

    /// True when `G - removed` has no cycle.
    pub fn is_forest_without(&self, removed: &[bool]) -> bool {
        let mut dsu = Dsu::new(self.n());
        self.edges.iter().filter(|&&(u, v)| !removed[u] && !removed[v]).all(|&(u, v)| dsu.union(u, v))
    }

    /// Recognizes split graphs and returns a partition in which every clique
    /// vertex has a neighbor on the independent side.
    pub fn split_partition(&self) -> Option<SplitPartition> {
        let n = self.n();
        let mut order: Vec<Vertex> = self.vertices().collect();
        order.sort_by(|&a, &b| self.degree(b).cmp(&self.degree(a)).then(a.cmp(&b)));
        let deg = |i: usize| self.degree(order[i]);
        // Largest m with d_m >= m - 1 (1-based), then the degree-sum test.
        let mut m = 0;
        for i in 0..n {
            if deg(i) >= i {
                m = i + 1;
            }
        }
        let head: usize = (0..m).map(deg).sum();
        let tail: usize = (m..n).map(deg).sum();
        if head != m * m.saturating_sub(1) + tail {
            return None;
        }
        let mut clique: VertexSet = order[..m].iter().copied().collect();
        let mut independent: VertexSet = order[m..].iter().copied().collect();
        // At most one clique vertex can lack an independent-side neighbor once
        // another such vertex has moved across.
        if let Some(&u) = clique.iter().rev().find(|&&u| !self.neighbors(u).iter().any(|w| independent.contains(w))) {
            clique.remove(&u);
            independent.insert(u);
        }
        let partition = SplitPartition { clique, independent };
        partition.is_valid_for(self).then_some(partition)
    }

    /// Chordality via maximum-cardinality search and a perfect-elimination check.
    pub fn is_chordal(&self) -> bool {
        let n = self.n();
        let mut weight = vec![0usize; n];
        let mut numbered = vec![false; n];
        // position[v] = index in the visit order
        let mut position = vec![0usize; n];
        let mut visit = Vec::with_capacity(n);
        for step in 0..n {
            let v =
                (0..n).filter(|&v| !numbered[v]).max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a))).unwrap();
            numbered[v] = true;
            position[v] = step;
            visit.push(v);
            for &w in &self.adj[v] {
                if !numbered[w] {
                    weight[w] += 1;
                }
            }
        }
        // The reverse visit order is a perfect elimination ordering iff chordal.
        // For each v, its earlier-visited neighbors must form a clique; it is
        // enough to check them against the latest such neighbor.
        for &v in &visit {
            let earlier: Vec<Vertex> = self.adj[v].iter().copied().filter(|&w| position[w] < position[v]).collect();
            let Some(&parent) = earlier.iter().max_by_key(|&&w| position[w]) else {
                continue;
            };
            for &w in &earlier {
                if w != parent && !self.has_edge(parent, w) {
                    return false;
                }
            }
        }
        true
    }
}

/// Clique/independent partition of a split graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

impl SplitPartition {
    /// Checks the partition invariants, including the repartitioned form.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.clique.len() + self.independent.len() != g.n()
            || self.clique.intersection(&self.independent).next().is_some()
        {
            return false;
        }
        let clique: Vec<_> = self.clique.iter().copied().collect();
        for (i, &u) in clique.iter().enumerate() {
            if clique[i + 1..].iter().any(|&v| !g.has_edge(u, v)) {
                return false;
            }
            if !g.neighbors(u).iter().any(|w| self.independent.contains(w)) {
                return false;
            }
        }
        self.independent.iter().all(|&u| g.neighbors(u).iter().all(|w| !self.independent.contains(w)))
    }
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already connected.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn path(n: usize) -> Graph {
        Graph::numbered(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::numbered(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let names: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Graph::from_index_edges(names, edges).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::numbered(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn build_rejects_bad_input() {
        let g = Graph::from_names(&["a", "b"], &[("a", "b")]).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert_eq!(complete(3).m(), 3);
        assert_eq!(Graph::from_names(&["a"], &[("a", "a")]), Err(GraphError::SelfLoop("a".into())));
        assert!(matches!(
            Graph::from_names(&["a", "b"], &[("a", "b"), ("b", "a")]),
            Err(GraphError::DuplicateEdge(..))
        ));
        assert!(matches!(Graph::from_names(&["a"], &[("a", "z")]), Err(GraphError::UnknownVertex(_))));
        assert!(matches!(Graph::from_names(&["a", "a"], &[]), Err(GraphError::DuplicateVertex(_))));
    }

    #[test]
    fn distances_and_diameter() {
        let p3 = path(3);
        assert_eq!(p3.distances_from(0), vec![Some(0), Some(1), Some(2)]);
        assert_eq!(complete(3).distances_from(0), vec![Some(0), Some(1), Some(1)]);
        assert_eq!(path(4).diameter(), Ok(3));
        assert_eq!(complete(5).diameter(), Ok(1));
        let split = Graph::numbered(2, []).unwrap();
        assert_eq!(split.diameter(), Err(GraphError::Disconnected));
        assert_eq!(split.distances_from(0)[1], None);
    }

    #[test]
    fn connectivity() {
        assert!(path(3).is_connected());
        assert!(!Graph::numbered(2, []).unwrap().is_connected());
        assert!(Graph::numbered(1, []).unwrap().is_connected());
    }

    #[test]
    fn split_recognition() {
        let g = Graph::from_names(&["a", "b", "c", "d"], &[("a", "b"), ("a", "c"), ("b", "d")]).unwrap();
        let p = g.split_partition().unwrap();
        assert_eq!(p.clique, g.vertex_set(&["a", "b"]).unwrap());
        assert_eq!(p.independent, g.vertex_set(&["c", "d"]).unwrap());
        assert_eq!(cycle(4).split_partition(), None);
        let s = star(3).split_partition().unwrap();
        assert_eq!(s.clique, [0].into());
        assert_eq!(s.independent, [1, 2, 3].into());
        let k3 = complete(3).split_partition().unwrap();
        assert_eq!(k3.clique.len(), 2);
        assert_eq!(k3.independent.len(), 1);
    }

    #[test]
    fn chordality() {
        assert!(!cycle(4).is_chordal());
        assert!(!cycle(5).is_chordal());
        assert!(complete(4).is_chordal());
        assert!(path(5).is_chordal());
        // C4 plus a chord
        let g = Graph::numbered(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(g.is_chordal());
    }

    #[test]
    fn forest_test() {
        let c4 = cycle(4);
        assert!(!c4.is_forest_without(&[false; 4]));
        assert!(c4.is_forest_without(&[true, false, false, false]));
    }
}
