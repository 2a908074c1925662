//! Graphs paired with irredundant expressions of width at most three.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tokslide::cw::{parse_expression, Expression};
use tokslide::Graph;

pub struct Entry {
    pub name: String,
    pub graph: Graph,
    pub expr: Expression,
}

fn entry(name: String, vertices: usize, edges: &[(usize, usize)], text: &str) -> Entry {
    let graph = Graph::numbered(vertices, edges.iter().copied()).unwrap();
    let expr = parse_expression(text).unwrap_or_else(|e| panic!("{name}: {e}"));
    Entry { name, graph, expr }
}

/// Width 3: the subtree root carries label 2, everything below it label 1.
fn tree_expr(children: &[Vec<usize>], v: usize) -> String {
    let mut s = format!("(i v{} 2)", v + 1);
    for &c in &children[v] {
        s = format!("(r 3 1 (j 2 3 (u {s} (r 2 3 {}))))", tree_expr(children, c));
    }
    s
}

/// `parent[v] < v` for every non-root vertex.
pub fn tree(name: String, parent: &[usize]) -> Entry {
    let n = parent.len() + 1;
    let mut children = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for (i, &p) in parent.iter().enumerate() {
        children[p].push(i + 1);
        edges.push((p, i + 1));
    }
    entry(name, n, &edges, &tree_expr(&children, 0))
}

/// Width 2 cograph with every vertex finally on label 1.
fn cograph_expr(rng: &mut ChaCha8Rng, vs: &[usize], join: bool, edges: &mut Vec<(usize, usize)>) -> String {
    if vs.len() == 1 {
        return format!("(i v{} 1)", vs[0] + 1);
    }
    let cut = rng.gen_range(1..vs.len());
    let (a, b) = vs.split_at(cut);
    let left = cograph_expr(rng, a, !join, edges);
    let right = cograph_expr(rng, b, !join, edges);
    if join {
        edges.extend(a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))));
        format!("(r 2 1 (j 1 2 (u {left} (r 1 2 {right}))))")
    } else {
        format!("(u {left} {right})")
    }
}

fn forced_cograph(vs: &[usize], ops: &dyn Fn(usize) -> bool, depth: usize, edges: &mut Vec<(usize, usize)>) -> String {
    if vs.len() == 1 {
        return format!("(i v{} 1)", vs[0] + 1);
    }
    let (a, b) = vs.split_at(1);
    let left = forced_cograph(a, ops, depth + 1, edges);
    let right = forced_cograph(b, ops, depth + 1, edges);
    if ops(depth) {
        edges.extend(b.iter().map(|&y| (a[0], y)));
        format!("(r 2 1 (j 1 2 (u {left} (r 1 2 {right}))))")
    } else {
        format!("(u {left} {right})")
    }
}

pub fn complete(n: usize) -> Entry {
    let vs: Vec<usize> = (0..n).collect();
    let mut edges = Vec::new();
    let text = forced_cograph(&vs, &|_| true, 0, &mut edges);
    entry(format!("K{n}"), n, &edges, &text)
}

pub fn complete_bipartite(a: usize, b: usize) -> Entry {
    let side = |range: std::ops::Range<usize>, label: u32| {
        range.map(|v| format!("(i v{} {label})", v + 1)).reduce(|x, y| format!("(u {x} {y})")).unwrap()
    };
    let text = format!("(j 1 2 (u {} {}))", side(0..a, 1), side(a..a + b, 2));
    let edges: Vec<(usize, usize)> = (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))).collect();
    entry(format!("K{a},{b}"), a + b, &edges, &text)
}

pub fn random_cograph(rng: &mut ChaCha8Rng, n: usize, tag: usize) -> Entry {
    let mut vs: Vec<usize> = (0..n).collect();
    vs.shuffle(rng);
    let mut edges = Vec::new();
    // a join at the top keeps the graph connected
    let text = cograph_expr(rng, &vs, true, &mut edges);
    entry(format!("cograph{tag}-n{n}"), n, &edges, &text)
}

pub fn c5() -> Entry {
    let text = "(j 1 3 (u (r 3 2 (j 2 3 (u (j 1 2 (u (i v1 2) (i v2 1))) (j 1 3 (u (i v4 1) (i v5 3)))))) (i v3 3)))";
    entry("C5".into(), 5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)], text)
}

/// Paths, stars, random trees, cliques, complete bipartite graphs, random
/// cographs and a five-cycle; every entry has at most eight vertices.
pub fn cw_corpus(rng: &mut ChaCha8Rng) -> Vec<Entry> {
    let mut out = Vec::new();
    for n in 2..=8 {
        let parent: Vec<usize> = (0..n - 1).collect();
        out.push(tree(format!("P{n}"), &parent));
    }
    for leaves in 2..=7 {
        out.push(tree(format!("star{leaves}"), &vec![0; leaves]));
    }
    for (tag, n) in (5..=8).enumerate() {
        let parent: Vec<usize> = (1..n).map(|v| rng.gen_range(0..v)).collect();
        out.push(tree(format!("tree{tag}-n{n}"), &parent));
    }
    for n in 3..=6 {
        out.push(complete(n));
    }
    for (a, b) in [(2, 2), (2, 3), (3, 3), (2, 4), (3, 4)] {
        out.push(complete_bipartite(a, b));
    }
    for (tag, n) in [4, 5, 6, 6, 7, 7, 8].into_iter().enumerate() {
        out.push(random_cograph(rng, n, tag));
    }
    out.push(c5());
    out
}
