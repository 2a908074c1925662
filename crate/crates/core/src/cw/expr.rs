//! Parsing and evaluation of w-expressions.
//!
//! Text form, whitespace-insensitive:
//! `(i <name> <label>)`, `(u <e1> <e2>)`, `(r <from> <to> <e>)`, `(j <a> <b> <e>)`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub type Label = u32;
pub type NodeId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("vertex `{0}` is introduced more than once")]
    DuplicateVertex(String),
    #[error("label `{0}` is not a positive integer")]
    BadLabel(String),
    #[error("relabel/join with identical labels {0}")]
    SameLabels(Label),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprNode {
    Introduce { name: String, label: Label },
    Union(NodeId, NodeId),
    Relabel { from: Label, to: Label, child: NodeId },
    Join { a: Label, b: Label, child: NodeId },
}

/// A w-expression stored in post-order: children precede their parent and
/// the root is the last node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expression {
    nodes: Vec<ExprNode>,
    width: Label,
    /// Half-open range of leaf positions covered by each node.
    spans: Vec<(usize, usize)>,
}

impl Expression {
    pub fn nodes(&self) -> &[ExprNode] {
        &self.nodes
    }

    pub fn root(&self) -> NodeId {
        self.nodes.len() - 1
    }

    /// Largest label used.
    pub fn width(&self) -> Label {
        self.width
    }

    /// Vertex names in leaf order; this is also the vertex order of [`evaluate`].
    pub fn leaf_names(&self) -> Vec<&str> {
        self.nodes
            .iter()
            .filter_map(|n| match n {
                ExprNode::Introduce { name, .. } => Some(name.as_str()),
                _ => None,
            })
            .collect()
    }

    /// Leaf positions (= evaluated vertex indices) below `node`.
    pub fn span(&self, node: NodeId) -> std::ops::Range<Vertex> {
        let (lo, hi) = self.spans[node];
        lo..hi
    }

    fn from_nodes(nodes: Vec<ExprNode>) -> Self {
        let mut spans: Vec<(usize, usize)> = Vec::with_capacity(nodes.len());
        let mut leaves = 0;
        let mut width = 0;
        for node in &nodes {
            let span = match *node {
                ExprNode::Introduce { label, .. } => {
                    width = width.max(label);
                    leaves += 1;
                    (leaves - 1, leaves)
                }
                ExprNode::Union(l, r) => (spans[l].0, spans[r].1),
                ExprNode::Relabel { from, to, child } => {
                    width = width.max(from).max(to);
                    spans[child]
                }
                ExprNode::Join { a, b, child } => {
                    width = width.max(a).max(b);
                    spans[child]
                }
            };
            spans.push(span);
        }
        Expression { nodes, width, spans }
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(e: &Expression, id: NodeId, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match &e.nodes[id] {
                ExprNode::Introduce { name, label } => write!(f, "(i {name} {label})"),
                ExprNode::Union(l, r) => {
                    f.write_str("(u ")?;
                    go(e, *l, f)?;
                    f.write_str(" ")?;
                    go(e, *r, f)?;
                    f.write_str(")")
                }
                ExprNode::Relabel { from, to, child } => {
                    write!(f, "(r {from} {to} ")?;
                    go(e, *child, f)?;
                    f.write_str(")")
                }
                ExprNode::Join { a, b, child } => {
                    write!(f, "(j {a} {b} ")?;
                    go(e, *child, f)?;
                    f.write_str(")")
                }
            }
        }
        go(self, self.root(), f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token<'a> {
    Open,
    Close,
    Atom(&'a str),
}

fn tokenize(text: &str) -> Vec<(usize, Token<'_>)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        let delimiter = ch == '(' || ch == ')' || ch.is_whitespace();
        if delimiter {
            if let Some(s) = start.take() {
                out.push((s, Token::Atom(&text[s..i])));
            }
            match ch {
                '(' => out.push((i, Token::Open)),
                ')' => out.push((i, Token::Close)),
                _ => {}
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, Token::Atom(&text[s..])));
    }
    out
}

struct Parser<'a> {
    tokens: Vec<(usize, Token<'a>)>,
    pos: usize,
    end: usize,
    nodes: Vec<ExprNode>,
    names: HashSet<String>,
}

impl<'a> Parser<'a> {
    fn err(&self, message: impl Into<String>) -> ExprError {
        let pos = self.tokens.get(self.pos).map_or(self.end, |t| t.0);
        ExprError::Syntax { pos, message: message.into() }
    }

    fn next(&mut self) -> Option<Token<'a>> {
        let t = self.tokens.get(self.pos).map(|t| t.1.clone());
        self.pos += 1;
        t
    }

    fn atom(&mut self, what: &str) -> Result<&'a str, ExprError> {
        match self.tokens.get(self.pos).map(|t| t.1.clone()) {
            Some(Token::Atom(a)) => {
                self.pos += 1;
                Ok(a)
            }
            _ => Err(self.err(format!("expected {what}"))),
        }
    }

    fn label(&mut self) -> Result<Label, ExprError> {
        let word = self.atom("a label")?;
        match word.parse::<Label>() {
            Ok(l) if l > 0 => Ok(l),
            _ => Err(ExprError::BadLabel(word.to_string())),
        }
    }

    fn close(&mut self) -> Result<(), ExprError> {
        match self.next() {
            Some(Token::Close) => Ok(()),
            _ => {
                self.pos -= 1;
                Err(self.err("expected `)`"))
            }
        }
    }

    fn expr(&mut self) -> Result<NodeId, ExprError> {
        match self.next() {
            Some(Token::Open) => {}
            _ => {
                self.pos -= 1;
                return Err(self.err("expected `(`"));
            }
        }
        let op = self.atom("an operator")?;
        let node = match op {
            "i" => {
                let name = self.atom("a vertex name")?.to_string();
                let label = self.label()?;
                if !self.names.insert(name.clone()) {
                    return Err(ExprError::DuplicateVertex(name));
                }
                ExprNode::Introduce { name, label }
            }
            "u" => {
                let l = self.expr()?;
                let r = self.expr()?;
                ExprNode::Union(l, r)
            }
            "r" | "j" => {
                let a = self.label()?;
                let b = self.label()?;
                if a == b {
                    return Err(ExprError::SameLabels(a));
                }
                let child = self.expr()?;
                if op == "r" {
                    ExprNode::Relabel { from: a, to: b, child }
                } else {
                    ExprNode::Join { a, b, child }
                }
            }
            other => {
                self.pos -= 1;
                return Err(self.err(format!("unknown operator `{other}`")));
            }
        };
        self.close()?;
        self.nodes.push(node);
        Ok(self.nodes.len() - 1)
    }
}

pub fn parse_expression(text: &str) -> Result<Expression, ExprError> {
    let mut p = Parser { tokens: tokenize(text), pos: 0, end: text.len(), nodes: Vec::new(), names: HashSet::new() };
    p.expr()?;
    if p.pos < p.tokens.len() {
        return Err(p.err("trailing input"));
    }
    Ok(Expression::from_nodes(p.nodes))
}

/// A graph whose vertices carry labels in `1..=w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<Label>,
}

impl LabeledGraph {
    pub fn label_of(&self, v: Vertex) -> Label {
        self.labels[v]
    }

    /// Vertices carrying `label`.
    pub fn label_set(&self, label: Label) -> BTreeSet<Vertex> {
        self.graph.vertices().filter(|&v| self.labels[v] == label).collect()
    }
}

/// A join that re-adds an edge some earlier join already created.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub node: NodeId,
    pub edge: (String, String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "join node {} re-adds edge {}-{}", self.node, self.edge.0, self.edge.1)
    }
}

struct Trace {
    labels: Vec<Label>,
    edges: Vec<(Vertex, Vertex)>,
    violations: Vec<Violation>,
    empty_joins: Vec<NodeId>,
    snapshots: Option<Vec<LabeledGraph>>,
}

fn run(expr: &Expression, snapshots: bool) -> Trace {
    let names = expr.leaf_names();
    let mut labels: Vec<Label> = Vec::with_capacity(names.len());
    let mut present: HashSet<(Vertex, Vertex)> = HashSet::new();
    let mut edges = Vec::new();
    let mut violations = Vec::new();
    let mut empty_joins = Vec::new();
    let mut shots = snapshots.then(Vec::new);

    for (id, node) in expr.nodes.iter().enumerate() {
        let span = expr.span(id);
        match *node {
            ExprNode::Introduce { label, .. } => labels.push(label),
            ExprNode::Union(..) => {}
            ExprNode::Relabel { from, to, .. } => {
                for v in span.clone() {
                    if labels[v] == from {
                        labels[v] = to;
                    }
                }
            }
            ExprNode::Join { a, b, .. } => {
                let side_a: Vec<Vertex> = span.clone().filter(|&v| labels[v] == a).collect();
                let side_b: Vec<Vertex> = span.clone().filter(|&v| labels[v] == b).collect();
                if side_a.is_empty() || side_b.is_empty() {
                    empty_joins.push(id);
                }
                for &u in &side_a {
                    for &v in &side_b {
                        let key = (u.min(v), u.max(v));
                        if present.insert(key) {
                            edges.push(key);
                        } else {
                            violations.push(Violation {
                                node: id,
                                edge: (names[key.0].to_string(), names[key.1].to_string()),
                            });
                        }
                    }
                }
            }
        }
        if let Some(shots) = shots.as_mut() {
            let (lo, hi) = (span.start, span.end);
            let local: Vec<(Vertex, Vertex)> =
                edges.iter().filter(|&&(u, v)| u >= lo && v < hi).map(|&(u, v)| (u - lo, v - lo)).collect();
            let graph = Graph::from_index_edges(names[lo..hi].iter().map(|s| s.to_string()).collect(), local)
                .expect("expression evaluation yields a simple graph");
            shots.push(LabeledGraph { graph, labels: labels[lo..hi].to_vec() });
        }
    }
    Trace { labels, edges, violations, empty_joins, snapshots: shots }
}

/// Evaluates the expression bottom-up. Vertices are numbered in leaf order.
pub fn evaluate(expr: &Expression) -> LabeledGraph {
    let trace = run(expr, false);
    let names = expr.leaf_names().into_iter().map(String::from).collect();
    let graph = Graph::from_index_edges(names, trace.edges).expect("expression evaluation yields a simple graph");
    LabeledGraph { graph, labels: trace.labels }
}

/// Evaluates the expression and returns the labeled graph of every node,
/// indexed by node id, with the root's graph last.
pub fn evaluate_with_snapshots(expr: &Expression) -> Vec<LabeledGraph> {
    run(expr, true).snapshots.unwrap()
}

/// Joins that add an edge which already exists. Empty iff irredundant.
pub fn check_irredundant(expr: &Expression) -> Vec<Violation> {
    run(expr, false).violations
}

/// Join nodes with an empty side; they add no edges and are harmless.
pub fn empty_joins(expr: &Expression) -> Vec<NodeId> {
    run(expr, false).empty_joins
}

/// Whether the expression denotes `g` (same vertex names, same edges).
pub fn check_matches(expr: &Expression, g: &Graph) -> bool {
    let lg = evaluate(expr);
    let h = &lg.graph;
    if h.n() != g.n() || h.m() != g.m() {
        return false;
    }
    let mut map = HashMap::with_capacity(h.n());
    for v in h.vertices() {
        match g.vertex(h.name(v)) {
            Some(w) => map.insert(v, w),
            None => return false,
        };
    }
    h.edges().iter().all(|&(u, v)| g.has_edge(map[&u], map[&v]))
}
