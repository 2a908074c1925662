//! Branching enumerator of k-compact representations.
//!
//! Once bridges and acyclic parts are dropped, every vertex is either a branch
//! vertex (degree at least three) or lies on a maximal path of degree-2
//! vertices. A cycle through one
//! vertex of such a path runs through all of it, so deleting any single path
//! vertex has the same effect on cycles as deleting the whole path. Branching
//! on the elements of a shortest cycle therefore yields classes from which any
//! one-per-class choice is a feedback vertex set.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::graph::{Dsu, Graph, Vertex};

/// Pairwise disjoint classes; picking one vertex from each gives a feedback vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompactRepresentation {
    /// Sorted vertex lists, ordered by smallest vertex.
    pub classes: Vec<Vec<Vertex>>,
}

impl CompactRepresentation {
    /// Whether `set` takes exactly one vertex from every class.
    pub fn represents(&self, set: &BTreeSet<Vertex>) -> bool {
        self.classes.iter().all(|c| c.iter().filter(|v| set.contains(v)).count() == 1)
    }

    /// Every one-per-class selection.
    pub fn selections(&self) -> Vec<Vec<Vertex>> {
        let mut out = vec![Vec::new()];
        for class in &self.classes {
            out = out
                .into_iter()
                .flat_map(|partial| {
                    class.iter().map(move |&v| {
                        let mut next = partial.clone();
                        next.push(v);
                        next
                    })
                })
                .collect();
        }
        out
    }
}

/// A list covering every minimal feedback vertex set of size at most `k`.
pub fn enumerate_compact_representations(g: &Graph, k: usize) -> Vec<CompactRepresentation> {
    let mut found = BTreeSet::new();
    let mut removed = vec![false; g.n()];
    branch(g, k, &mut removed, &mut Vec::new(), &mut found);
    found.into_iter().collect()
}

fn branch(
    g: &Graph,
    k: usize,
    removed: &mut Vec<bool>,
    classes: &mut Vec<Vec<Vertex>>,
    found: &mut BTreeSet<CompactRepresentation>,
) {
    let adj = cyclic_adjacency(g, removed);
    let alive: Vec<Vertex> = g.vertices().filter(|&v| !adj[v].is_empty()).collect();
    let degree = |v: Vertex| adj[v].len();

    // degree-2 vertices grouped into maximal paths (or whole cycles)
    let mut dsu = Dsu::new(g.n());
    for &v in &alive {
        if degree(v) == 2 {
            for &w in &adj[v] {
                if degree(w) == 2 {
                    dsu.union(v, w);
                }
            }
        }
    }
    let element_of = |v: Vertex, dsu: &mut Dsu| if degree(v) == 2 { dsu.find(v) } else { usize::MAX - v };

    if alive.iter().all(|&v| degree(v) == 2) {
        // vertex-disjoint cycles, one class each
        let mut cycles: Vec<Vec<Vertex>> = Vec::new();
        let mut slot_of = HashMap::new();
        for &v in &alive {
            let slot = *slot_of.entry(dsu.find(v)).or_insert_with(|| {
                cycles.push(Vec::new());
                cycles.len() - 1
            });
            cycles[slot].push(v);
        }
        if cycles.len() <= k {
            let mut all = classes.clone();
            all.extend(cycles);
            all.sort();
            found.insert(CompactRepresentation { classes: all });
        }
        return;
    }
    if k == 0 {
        return;
    }

    let cycle = shortest_cycle(&adj, &alive).expect("a vertex of degree three lies on a cycle");
    let mut elements: Vec<usize> = Vec::new();
    for &v in &cycle {
        let e = element_of(v, &mut dsu);
        if !elements.contains(&e) {
            elements.push(e);
        }
    }
    let mut choices: Vec<Vec<Vertex>> = elements
        .into_iter()
        .map(|e| alive.iter().copied().filter(|&v| element_of(v, &mut dsu) == e).collect())
        .collect();
    choices.sort();

    for class in choices {
        for &v in &class {
            removed[v] = true;
        }
        classes.push(class);
        branch(g, k - 1, removed, classes, found);
        let class = classes.pop().unwrap();
        for v in class {
            removed[v] = false;
        }
    }
}

/// Adjacency of `g - removed` restricted to edges that lie on a cycle,
/// i.e. with all bridges dropped.
fn cyclic_adjacency(g: &Graph, removed: &[bool]) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut bridges = HashSet::new();
    let mut timer = 0;
    for root in g.vertices().filter(|&v| !removed[v]) {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, parent, next neighbor index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if let Some(&w) = g.neighbors(v).get(top.2) {
                top.2 += 1;
                if removed[w] || w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        bridges.insert((parent.min(v), parent.max(v)));
                    }
                }
            }
        }
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        if !removed[u] && !removed[v] && !bridges.contains(&(u, v)) {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

/// Vertex list of a shortest cycle.
fn shortest_cycle(adj: &[Vec<Vertex>], roots: &[Vertex]) -> Option<Vec<Vertex>> {
    let mut best: Option<Vec<Vertex>> = None;
    for &root in roots {
        let mut dist = vec![usize::MAX; adj.len()];
        let mut parent = vec![usize::MAX; adj.len()];
        let mut queue = VecDeque::from([root]);
        dist[root] = 0;
        'bfs: while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if y == parent[x] {
                    continue;
                }
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else {
                    let len = dist[x] + dist[y] + 1;
                    if best.as_ref().is_none_or(|b| len < b.len()) {
                        let mut walk = Vec::new();
                        for mut z in [x, y] {
                            while z != usize::MAX {
                                if !walk.contains(&z) {
                                    walk.push(z);
                                }
                                z = parent[z];
                            }
                        }
                        best = Some(walk);
                    }
                    break 'bfs;
                }
            }
        }
    }
    best
}
