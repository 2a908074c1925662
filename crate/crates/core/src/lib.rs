//! Solution discovery under token sliding.
//!
//! Tokens sit on distinct vertices of a graph and move one at a time along
//! edges onto free vertices. Discovery asks whether some configuration that
//! is a vertex cover, independent set, dominating set or feedback vertex set
//! can be reached within a move budget.

pub mod assignment;
pub mod cw;
pub mod error;
pub mod format;
pub mod fvs;
pub mod graph;
pub mod instance;
pub mod oracle;
pub mod reductions;
pub mod split;

pub use error::SolveError;
pub use graph::{Graph, GraphError, Vertex, VertexSet};
pub use instance::{
    check_solution, configurations_adjacent, normalize_budget, validate_sequence, Configuration, Discovery,
    DiscoveryInstance, Move, MoveSequence, Problem, Replay, SequenceError,
};
