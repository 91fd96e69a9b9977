//! Truchet-tile picture of an ant universe.
//!
//! Every cell carries two quarter-circle arcs whose orientation encodes the
//! turn of its current state. The ant rides these arcs; they join up into
//! disjoint closed contours. For even run-length rules, hot tiles also carry
//! a diagonal, giving the diagonals graph.

mod contour;
mod diagonals;
mod tile;
mod verify;

use thiserror::Error;

use crate::engine::{AntPose, Cell};
use crate::rules::RuleError;

pub use contour::{contours_through, edge_midpoint2, principal_contour, trace_contour, Contour};
pub use diagonals::{corner_degree, diagonals_graph, even_degree_holds, Components, DiagonalsGraph};
pub use tile::{edge_corner, orientation, tile_geometry, Arc, CellKind, Diagonal, TileOrientation};
pub use verify::{
    neighborhood_parity_violations, run_tour, run_tours, split_check, verify_lemma1, verify_lemma2,
    verify_property1, ParityViolation, SplitReport, TourReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TruchetError {
    #[error("contour from {start:?} did not close within {cap} arcs")]
    StepCap { cap: u64, start: AntPose },
    #[error("ant is not home (pose {0:?})")]
    NotHome(AntPose),
    #[error("no home return within {cap} steps of t={start_time}")]
    NoReturn { cap: u64, start_time: u64 },
    #[error("cell {0} is not visited twice by the contour")]
    NotTwiceVisited(Cell),
    #[error("precondition failed: {0}")]
    Precondition(&'static str),
    #[error(transparent)]
    Rule(#[from] RuleError),
}
