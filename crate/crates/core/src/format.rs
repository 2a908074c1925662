//! Line-oriented text formats for graphs, instances, move files and X3C inputs.
//!
//! ```text
//! # comment
//! graph 3 2
//! v a
//! v b
//! v c
//! e a b
//! e b c
//! problem VC
//! tokens a
//! budget 1
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::instance::{DiscoveryInstance, Move, MoveSequence, Problem};
use crate::reductions::X3cInstance;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input: {0}")]
    Eof(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

type TokenLines<'a> = Box<dyn Iterator<Item = (usize, Vec<&'a str>)> + 'a>;

struct Lines<'a> {
    inner: std::iter::Peekable<TokenLines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it = text.lines().enumerate().filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let words: Vec<&str> = body.split_whitespace().collect();
            (!words.is_empty()).then_some((i + 1, words))
        });
        let boxed: Box<dyn Iterator<Item = (usize, Vec<&'a str>)> + 'a> = Box::new(it);
        Lines { inner: boxed.peekable() }
    }

    fn next_with(&mut self, keyword: &str) -> Result<(usize, Vec<&'a str>), ParseError> {
        let (line, words) = self.inner.next().ok_or_else(|| ParseError::Eof(format!("expected `{keyword}`")))?;
        if words[0] != keyword {
            return Err(syntax(line, format!("expected `{keyword}`, found `{}`", words[0])));
        }
        Ok((line, words))
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.inner.next() {
            None => Ok(()),
            Some((line, words)) => Err(syntax(line, format!("unexpected `{}`", words[0]))),
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

fn arity(line: usize, words: &[&str], n: usize) -> Result<(), ParseError> {
    if words.len() != n {
        return Err(syntax(line, format!("`{}` takes {} argument(s)", words[0], n - 1)));
    }
    Ok(())
}

fn number(line: usize, word: &str) -> Result<usize, ParseError> {
    word.parse().map_err(|_| syntax(line, format!("expected a non-negative integer, found `{word}`")))
}

fn read_graph(lines: &mut Lines<'_>) -> Result<Graph, ParseError> {
    let (line, header) = lines.next_with("graph")?;
    arity(line, &header, 3)?;
    let n = number(line, header[1])?;
    let m = number(line, header[2])?;
    let mut names = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, words) = lines.next_with("v")?;
        arity(line, &words, 2)?;
        names.push(words[1]);
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, words) = lines.next_with("e")?;
        arity(line, &words, 3)?;
        edges.push((words[1], words[2]));
    }
    Ok(Graph::from_names(&names, &edges)?)
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = Lines::new(text);
    let g = read_graph(&mut lines)?;
    lines.finish()?;
    Ok(g)
}

/// Reads the graph block of either a graph or an instance file.
pub fn parse_graph_prefix(text: &str) -> Result<Graph, ParseError> {
    read_graph(&mut Lines::new(text))
}

pub fn parse_instance(text: &str) -> Result<DiscoveryInstance, ParseError> {
    let mut lines = Lines::new(text);
    let graph = read_graph(&mut lines)?;
    let (line, words) = lines.next_with("problem")?;
    arity(line, &words, 2)?;
    let kind: Problem = words[1].parse().map_err(|e: String| syntax(line, e))?;
    let (line, words) = lines.next_with("tokens")?;
    let start = graph.vertex_set(&words[1..])?;
    if start.len() != words.len() - 1 {
        return Err(syntax(line, "a vertex holds at most one token"));
    }
    let (line, words) = lines.next_with("budget")?;
    arity(line, &words, 2)?;
    let budget = number(line, words[1])?;
    lines.finish()?;
    Ok(DiscoveryInstance::new(graph, kind, start, budget)?)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("graph {} {}\n", g.n(), g.m());
    for v in g.vertices() {
        let _ = writeln!(out, "v {}", g.name(v));
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", g.name(u), g.name(v));
    }
    out
}

pub fn write_instance(inst: &DiscoveryInstance) -> String {
    let g = &inst.graph;
    let mut out = write_graph(g);
    let _ = writeln!(out, "problem {}", inst.kind);
    out.push_str("tokens");
    for name in sorted_names(g, inst.start.iter().copied()) {
        out.push(' ');
        out.push_str(name);
    }
    let _ = writeln!(out, "\nbudget {}", inst.budget);
    out
}

/// Names of `vertices`, sorted.
pub fn sorted_names(g: &Graph, vertices: impl IntoIterator<Item = usize>) -> Vec<&str> {
    let mut names: Vec<&str> = vertices.into_iter().map(|v| g.name(v)).collect();
    names.sort_unstable();
    names
}

/// `{a, b, c}` with names sorted.
pub fn format_set(g: &Graph, vertices: impl IntoIterator<Item = usize>) -> String {
    format!("{{{}}}", sorted_names(g, vertices).join(", "))
}

pub fn parse_moves(text: &str, g: &Graph) -> Result<MoveSequence, ParseError> {
    let mut lines = Lines::new(text);
    let mut moves = Vec::new();
    while lines.inner.peek().is_some() {
        let (line, words) = lines.next_with("move")?;
        arity(line, &words, 3)?;
        moves.push(Move::new(g.vertex_id(words[1])?, g.vertex_id(words[2])?));
    }
    Ok(moves)
}

pub fn write_moves(g: &Graph, moves: &[Move]) -> String {
    moves.iter().map(|m| format!("move {} {}\n", g.name(m.from), g.name(m.to))).collect()
}

/// `x3c <3n> <m>` followed by `m` lines of three 1-based element indices.
pub fn parse_x3c(text: &str) -> Result<X3cInstance, ParseError> {
    let mut lines = Lines::new(text);
    let (line, header) = lines.next_with("x3c")?;
    arity(line, &header, 3)?;
    let size = number(line, header[1])?;
    let m = number(line, header[2])?;
    let mut family = Vec::with_capacity(m);
    for i in 0..m {
        let (line, words) =
            lines.inner.next().ok_or_else(|| ParseError::Eof(format!("expected set {} of {m}", i + 1)))?;
        if words.len() != 3 {
            return Err(syntax(line, "each set lists exactly three elements"));
        }
        let mut set = [0usize; 3];
        for (slot, word) in set.iter_mut().zip(&words) {
            *slot = number(line, word)?;
        }
        family.push(set);
    }
    lines.finish()?;
    X3cInstance::new(size, family).map_err(|e| syntax(line, e.to_string()))
}

pub fn write_x3c(x: &X3cInstance) -> String {
    let mut out = format!("x3c {} {}\n", x.universe_size(), x.family().len());
    for set in x.family() {
        let _ = writeln!(out, "{} {} {}", set[0], set[1], set[2]);
    }
    out
}
