//! Generalized Langton's ants ("n-state ants") on an unbounded grid.
//!
//! * [`rules`]: rule-strings, ant codes, the even run-length property and
//!   hot/cold states.
//! * [`engine`]: the automaton itself on a sparse grid.
//! * [`truchet`]: the Truchet-tile picture, contour tracing, the diagonals
//!   graph and empirical checks of the contour-following mechanism.
//! * [`symmetry`]: central and bilateral symmetry of the track.
//! * [`behavior`]: highway detection, unboundedness probes, rule sweeps.
//! * [`render`]: P3 pixmaps of cell states and SVG Truchet pictures.
//! * [`snapshot`]: the `ANTSNAP 1` text format.

pub mod behavior;
pub mod config;
pub mod engine;
pub mod render;
pub mod rules;
pub mod snapshot;
pub mod symmetry;
pub mod truchet;

pub use engine::{AntPose, BoundingBox, Cell, Corner, EngineError, Heading, Universe};
pub use rules::{RuleError, RuleString, Turn};
