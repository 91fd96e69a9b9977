//! Defaults shared by the library, the CLI and the reports it prints.

/// Upper bound on steps for a single contour trace or home-to-home tour.
pub const DEFAULT_STEP_CAP: u64 = 10_000_000;

/// Symmetric home returns, late in the run, needed to call a rule
/// recurrently symmetric.
pub const DEFAULT_SYMMETRIC_RETURNS: usize = 5;

/// Longest highway period searched for.
pub const DEFAULT_PERIOD_CAP: u64 = 1_000;

/// Radius of the square window compared around the ant when looking for a
/// highway.
pub const DEFAULT_HIGHWAY_WINDOW: u32 = 2;

/// Consecutive periods a highway must be seen to repeat.
pub const HIGHWAY_MIN_PERIODS: u64 = 3;

/// Pixels per cell in raster output.
pub const DEFAULT_PIXELS_PER_CELL: u32 = 4;

/// Background for unvisited cells; not a grey, so never a state colour.
pub const BACKGROUND_RGB: [u8; 3] = [176, 196, 222];

/// Cells of untouched plane drawn around the track in Truchet pictures.
pub const DEFAULT_TRUCHET_MARGIN: i64 = 1;
