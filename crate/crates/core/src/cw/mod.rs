//! Clique-width expressions and the vertex-cover discovery DP over them.

mod dp;
mod expr;

pub use dp::{compute_node_tables, compute_tables, is_valid_tuple, solve_vcd_cw, DpTable, DpTuple, NodeContext};
pub use expr::{
    check_irredundant, check_matches, empty_joins, evaluate, evaluate_with_snapshots, parse_expression, ExprError,
    ExprNode, Expression, Label, LabeledGraph, NodeId, Violation,
};
