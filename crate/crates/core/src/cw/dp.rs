//! Vertex-cover discovery by dynamic programming over an irredundant
//! w-expression.
//!
//! Every node `t` keeps the set of tuples `(moves, K, A, P)` that are
//! realisable in `G_t` extended by one virtual vertex adjacent to all of
//! `G_t`, which stands in for the rest of the graph:
//!
//! * `moves`: slides performed inside `G_t`,
//! * `K(z)`: tokens finally resting on `z`-vertices (and those vertices
//!   belong to a vertex cover of `G_t` consistent with the final tokens),
//! * `A(z)` / `P(z)`: slides from / to the virtual vertex into / out of
//!   the `z`-vertices, not yet paid for.
//!
//! A join `η(a, b)` turns `f` pending a→b transfers and `g` pending b→a
//! transfers into real slides across the new edges, paying `f + g` moves.
//! The instance is a yes-instance iff the root holds a tuple with `A ≡ P ≡ 0`.

use std::collections::HashSet;

use crate::cw::expr::{check_irredundant, check_matches, ExprNode, Expression, Label};
use crate::error::SolveError;
use crate::instance::{DiscoveryInstance, Problem};

/// Per-node quantities the validity test needs. Vectors are indexed by `label - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeContext {
    pub label_sizes: Vec<usize>,
    pub initial_tokens: Vec<usize>,
    pub k: usize,
    pub budget: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DpTuple {
    pub moves: usize,
    pub tokens: Vec<usize>,
    pub absorb: Vec<usize>,
    pub project: Vec<usize>,
}

/// `[moves, K(1..=w), A(1..=w), P(1..=w)]`
type Packed = Box<[u16]>;

fn pack(t: &DpTuple) -> Option<Packed> {
    let w = t.tokens.len();
    if t.absorb.len() != w || t.project.len() != w {
        return None;
    }
    std::iter::once(t.moves)
        .chain(t.tokens.iter().copied())
        .chain(t.absorb.iter().copied())
        .chain(t.project.iter().copied())
        .map(|x| u16::try_from(x).ok())
        .collect()
}

fn unpack(p: &[u16], w: usize) -> DpTuple {
    let part = |r: std::ops::Range<usize>| p[r].iter().map(|&x| x as usize).collect();
    DpTuple {
        moves: p[0] as usize,
        tokens: part(1..1 + w),
        absorb: part(1 + w..1 + 2 * w),
        project: part(1 + 2 * w..1 + 3 * w),
    }
}

/// Conditions (a)-(c), the domain bound `A(z), P(z) <= budget`, and token
/// conservation (d). Joins turn a pending `i -> v* -> j` transfer into a real
/// `i -> j` slide without touching `K`, so after a join the balance
/// `|S ∩ U_z| + A(z) - P(z) = K(z)` only holds summed over all labels; that
/// is the form checked here, together with `K(z) <= |U_z|`. The per-vertex
/// equation is enforced when introduce tables are built.
pub fn is_valid_tuple(ctx: &NodeContext, s: &DpTuple) -> bool {
    let w = ctx.label_sizes.len();
    match pack(s) {
        Some(p) if s.tokens.len() == w => valid(ctx, &p),
        _ => false,
    }
}

fn valid(ctx: &NodeContext, p: &[u16]) -> bool {
    let w = ctx.label_sizes.len();
    let b = ctx.budget;
    if p[0] as usize > b {
        return false;
    }
    let (mut tokens, mut absorbed, mut projected, mut initial) = (0, 0, 0, 0);
    for z in 0..w {
        let (kz, az, pz) = (p[1 + z] as usize, p[1 + w + z] as usize, p[1 + 2 * w + z] as usize);
        if az > b || pz > b {
            return false;
        }
        let size = ctx.label_sizes[z];
        if size == 0 && (kz | az | pz) != 0 {
            return false;
        }
        if kz > size {
            return false;
        }
        tokens += kz;
        absorbed += az;
        projected += pz;
        initial += ctx.initial_tokens[z];
    }
    tokens <= ctx.k && initial + absorbed == projected + tokens
}

/// Each pending transfer still costs one slide at some later join.
fn can_settle(ctx: &NodeContext, p: &[u16]) -> bool {
    let w = ctx.label_sizes.len();
    let absorbed: usize = p[1 + w..1 + 2 * w].iter().map(|&x| x as usize).sum();
    let projected: usize = p[1 + 2 * w..].iter().map(|&x| x as usize).sum();
    p[0] as usize + absorbed.max(projected) <= ctx.budget
}

/// The set of true entries of one node's table, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpTable {
    width: usize,
    entries: Vec<Packed>,
}

impl DpTable {
    fn from_set(width: usize, set: HashSet<Packed>) -> Self {
        let mut entries: Vec<Packed> = set.into_iter().collect();
        entries.sort_unstable();
        DpTable { width, entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, t: &DpTuple) -> bool {
        pack(t).is_some_and(|p| self.entries.binary_search(&p).is_ok())
    }

    pub fn iter(&self) -> impl Iterator<Item = DpTuple> + '_ {
        self.entries.iter().map(|p| unpack(p, self.width))
    }

    /// Smallest `moves` among tuples with no pending transfers.
    pub fn min_settled_moves(&self) -> Option<usize> {
        let w = self.width;
        self.entries.iter().filter(|p| p[1 + w..].iter().all(|&x| x == 0)).map(|p| p[0] as usize).min()
    }
}

fn prepare(expr: &Expression, inst: &DiscoveryInstance) -> Result<Vec<bool>, SolveError> {
    if inst.kind != Problem::VertexCover {
        return Err(SolveError::UnsupportedProblem { method: "cw", kind: inst.kind });
    }
    inst.require_connected()?;
    let violations = check_irredundant(expr);
    if !violations.is_empty() {
        return Err(SolveError::RedundantExpression(violations));
    }
    if !check_matches(expr, &inst.graph) {
        return Err(SolveError::ExpressionMismatch);
    }
    // token flags in leaf order
    Ok(expr
        .leaf_names()
        .iter()
        .map(|name| inst.start.contains(&inst.graph.vertex(name).expect("checked by check_matches")))
        .collect())
}

fn run(expr: &Expression, inst: &DiscoveryInstance, keep_all: bool) -> Result<Vec<(NodeContext, DpTable)>, SolveError> {
    let token_at = prepare(expr, inst)?;
    let w = expr.width() as usize;
    // budgets beyond k * diam add nothing; sums of two entries must fit in u16
    let b = inst.budget.min(inst.k() * inst.graph.diameter()?);
    if 2 * b.max(token_at.len()) > usize::from(u16::MAX) {
        return Err(SolveError::TooLarge(b.max(token_at.len())));
    }
    let idx = |label: Label| label as usize - 1;

    let mut labels: Vec<Label> = Vec::with_capacity(token_at.len());
    let mut tables: Vec<Option<(NodeContext, DpTable)>> = Vec::with_capacity(expr.nodes().len());

    for (id, node) in expr.nodes().iter().enumerate() {
        match *node {
            ExprNode::Introduce { label, .. } => labels.push(label),
            ExprNode::Relabel { from, to, .. } => {
                for v in expr.span(id) {
                    if labels[v] == from {
                        labels[v] = to;
                    }
                }
            }
            _ => {}
        }
        let mut ctx = NodeContext { label_sizes: vec![0; w], initial_tokens: vec![0; w], k: inst.k(), budget: b };
        for v in expr.span(id) {
            ctx.label_sizes[idx(labels[v])] += 1;
            if token_at[v] {
                ctx.initial_tokens[idx(labels[v])] += 1;
            }
        }

        let mut out: HashSet<Packed> = HashSet::new();
        let take = |child: usize, tables: &mut Vec<Option<(NodeContext, DpTable)>>| {
            if keep_all {
                tables[child].as_ref().unwrap().1.entries.clone()
            } else {
                tables[child].take().unwrap().1.entries
            }
        };
        match *node {
            ExprNode::Introduce { label, .. } => {
                let z = idx(label);
                let s = ctx.initial_tokens[z];
                for a in 0..=b {
                    for p in 0..=b {
                        if s + a < p || s + a - p > 1 {
                            continue;
                        }
                        let mut t = vec![0u16; 1 + 3 * w];
                        t[1 + z] = (s + a - p) as u16;
                        t[1 + w + z] = a as u16;
                        t[1 + 2 * w + z] = p as u16;
                        if valid(&ctx, &t) && can_settle(&ctx, &t) {
                            out.insert(t.into_boxed_slice());
                        }
                    }
                }
            }
            ExprNode::Union(l, r) => {
                let left = take(l, &mut tables);
                let right = take(r, &mut tables);
                let mut t = vec![0u16; 1 + 3 * w];
                for x in &left {
                    for y in &right {
                        if (x[0] + y[0]) as usize > b {
                            continue;
                        }
                        for (slot, (a, c)) in t.iter_mut().zip(x.iter().zip(y.iter())) {
                            *slot = a + c;
                        }
                        if valid(&ctx, &t) && can_settle(&ctx, &t) {
                            out.insert(t.clone().into_boxed_slice());
                        }
                    }
                }
            }
            ExprNode::Relabel { from, to, child } => {
                let (i, j) = (idx(from), idx(to));
                for x in take(child, &mut tables) {
                    let mut t = x.to_vec();
                    for base in [1, 1 + w, 1 + 2 * w] {
                        t[base + j] += t[base + i];
                        t[base + i] = 0;
                    }
                    if valid(&ctx, &t) && can_settle(&ctx, &t) {
                        out.insert(t.into_boxed_slice());
                    }
                }
            }
            ExprNode::Join { a, b: lb, child } => {
                let (i, j) = (idx(a), idx(lb));
                for x in take(child, &mut tables) {
                    // every new i-j edge needs a covered endpoint
                    if (x[1 + i] as usize) < ctx.label_sizes[i] && (x[1 + j] as usize) < ctx.label_sizes[j] {
                        continue;
                    }
                    let (ai, aj) = (x[1 + w + i], x[1 + w + j]);
                    let (pi, pj) = (x[1 + 2 * w + i], x[1 + 2 * w + j]);
                    // f transfers i -> j, g transfers j -> i
                    for f in 0..=pi.min(aj) {
                        for g in 0..=ai.min(pj) {
                            if (x[0] + f + g) as usize > b {
                                break;
                            }
                            let mut t = x.to_vec();
                            t[0] += f + g;
                            t[1 + w + i] = ai - g;
                            t[1 + w + j] = aj - f;
                            t[1 + 2 * w + i] = pi - f;
                            t[1 + 2 * w + j] = pj - g;
                            if valid(&ctx, &t) && can_settle(&ctx, &t) {
                                out.insert(t.into_boxed_slice());
                            }
                        }
                    }
                }
            }
        }
        tables.push(Some((ctx, DpTable::from_set(w, out))));
    }
    Ok(tables.into_iter().flatten().collect())
}

/// Root table of the DP.
pub fn compute_tables(expr: &Expression, inst: &DiscoveryInstance) -> Result<DpTable, SolveError> {
    Ok(run(expr, inst, false)?.pop().expect("expression has a root").1)
}

/// Context and table of every node, indexed by node id.
pub fn compute_node_tables(
    expr: &Expression,
    inst: &DiscoveryInstance,
) -> Result<Vec<(NodeContext, DpTable)>, SolveError> {
    run(expr, inst, true)
}

/// Decides vertex-cover discovery; on a yes-instance returns the minimum
/// number of moves.
pub fn solve_vcd_cw(expr: &Expression, inst: &DiscoveryInstance) -> Result<Option<usize>, SolveError> {
    Ok(compute_tables(expr, inst)?.min_settled_moves())
}
