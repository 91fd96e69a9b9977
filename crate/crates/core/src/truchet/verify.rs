//! Empirical checks of the contour-following mechanism behind recurrent
//! symmetry.

use rustc_hash::FxHashMap;

use super::contour::{principal_contour, trace_with, Contour};
use super::diagonals::{corner_degree, diagonals_graph, even_degree_holds};
use super::tile::{tile_geometry, Arc};
use super::TruchetError;
use crate::engine::{AntPose, Cell, Corner, Universe};

/// What happened on one home-to-home tour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TourReport {
    pub start_time: u64,
    pub return_time: u64,
    pub contour_len: usize,
    /// The ant's path equalled the principal contour arc for arc.
    pub follows_principal: bool,
    /// Cells the principal contour passes through twice.
    pub twice_visited: Vec<Cell>,
    /// Twice-visited cells that were hot at the start of the tour; empty
    /// whenever no-switch-on-first-visit holds. Always empty for rules
    /// without the even run-length property (hot/cold is undefined there).
    pub hot_twice_visited: Vec<Cell>,
    /// Even diagonal-degree property at departure and at return; `None` for
    /// rules without the even run-length property.
    pub even_before: Option<bool>,
    pub even_after: Option<bool>,
}

impl TourReport {
    pub fn property1_holds(&self) -> bool {
        self.hot_twice_visited.is_empty()
    }

    pub fn all_pass(&self) -> bool {
        self.follows_principal
            && self.property1_holds()
            && self.even_before != Some(false)
            && self.even_after != Some(false)
    }
}

/// Runs `u` from home to its next home return and reports against the
/// principal contour traced at departure.
pub fn run_tour(u: &mut Universe, cap: u64) -> Result<TourReport, TruchetError> {
    let contour = principal_contour(u, cap)?;
    let heat = u.rule().heat().ok();
    let twice_visited = contour.twice_visited_cells();
    let hot_twice_visited = match heat {
        Some(h) => twice_visited
            .iter()
            .copied()
            .filter(|&c| h.hot(u.state(c)))
            .collect(),
        None => Vec::new(),
    };
    let even_before = heat.map(|_| even_degree_holds(u)).transpose()?;
    let start_time = u.time();

    let expected = contour.arcs();
    let mut follows = true;
    let mut k = 0usize;
    loop {
        if k as u64 >= cap {
            return Err(TruchetError::NoReturn { cap, start_time });
        }
        let m = u.step();
        let arc = Arc {
            cell: m.cell,
            entry: m.heading_in.opposite(),
            exit: m.heading_out,
        };
        if expected.get(k) != Some(&arc) {
            follows = false;
        }
        k += 1;
        if u.is_home() {
            break;
        }
    }
    follows &= k == expected.len();
    let even_after = heat.map(|_| even_degree_holds(u)).transpose()?;
    Ok(TourReport {
        start_time,
        return_time: u.time(),
        contour_len: expected.len(),
        follows_principal: follows,
        twice_visited,
        hot_twice_visited,
        even_before,
        even_after,
    })
}

/// Tours `count` times from the current (home) configuration.
pub fn run_tours(u: &mut Universe, count: usize, cap: u64) -> Result<Vec<TourReport>, TruchetError> {
    (0..count).map(|_| run_tour(u, cap)).collect()
}

/// Does the ant, starting at home, trace exactly the principal contour before
/// it next returns home?
pub fn verify_lemma1(u: &Universe, cap: u64) -> Result<bool, TruchetError> {
    Ok(run_tour(&mut u.clone(), cap)?.follows_principal)
}

/// Is the even diagonal-degree property restored after one tour? Requires it
/// to hold at departure.
pub fn verify_lemma2(u: &Universe, cap: u64) -> Result<bool, TruchetError> {
    if !u.is_home() {
        return Err(TruchetError::NotHome(u.pose()));
    }
    if !even_degree_holds(u)? {
        return Err(TruchetError::Precondition(
            "even diagonal-degree property fails at departure",
        ));
    }
    let r = run_tour(&mut u.clone(), cap)?;
    Ok(r.even_after == Some(true))
}

/// No cell the principal contour passes twice is hot.
pub fn verify_property1(u: &Universe, cap: u64) -> Result<bool, TruchetError> {
    let heat = u.rule().heat()?;
    let c = principal_contour(u, cap)?;
    Ok(c.twice_visited_cells()
        .into_iter()
        .all(|cell| heat.cold(u.state(cell))))
}

/// Outcome of flipping one twice-visited tile of a contour.
#[derive(Debug, Clone)]
pub struct SplitReport {
    pub cell: Cell,
    /// Contours through the tile after the flip: two when the curve splits.
    pub contours: Vec<Contour>,
    /// The endpoints of the tile's diagonal fall in different components of
    /// the diagonals graph once that diagonal is deleted.
    pub disjoint_components: bool,
    /// One resulting contour encloses the other.
    pub nested: bool,
}

impl SplitReport {
    pub fn split_count(&self) -> usize {
        self.contours.len()
    }
}

/// Flips the tile at `cell`, which `contour` must pass through twice, and
/// re-traces from both of the contour's entries into it.
pub fn split_check(
    u: &Universe,
    contour: &Contour,
    cell: Cell,
    cap: u64,
) -> Result<SplitReport, TruchetError> {
    let entries: Vec<AntPose> = contour.poses().filter(|p| p.target == cell).collect();
    let [first, second] = entries[..] else {
        return Err(TruchetError::NotTwiceVisited(cell));
    };
    let graph = diagonals_graph(u)?;

    let rule = u.rule();
    let letter = rule.turn(u.state(cell));
    let flipped = letter.flipped();
    let turn_at = |c: Cell| {
        if c == cell {
            flipped
        } else {
            rule.turn(u.state(c))
        }
    };
    let a = trace_with(first, cap, turn_at)?;
    let contours = if a.contains_pose(second) {
        vec![a]
    } else {
        let b = trace_with(second, cap, turn_at)?;
        vec![a, b]
    };
    let nested = match &contours[..] {
        [a, b] => a.encloses(b) || b.encloses(a),
        _ => false,
    };

    let d = tile_geometry(cell, letter).1;
    let components = graph.without_cell(cell).components();
    Ok(SplitReport {
        cell,
        contours,
        disjoint_components: !components.connected(d.a, d.b),
        nested,
    })
}

/// A transit of the four cells around a corner that changed the parity of
/// the corner's diagonal degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityViolation {
    pub corner: Corner,
    pub entered_at: u64,
    pub left_at: u64,
}

/// Steps a copy of `u` for `steps` steps and checks that every completed
/// transit of a corner's 4-cell neighborhood leaves the parity of that
/// corner's diagonal degree unchanged. A transit is a maximal run of
/// consecutive steps through cells touching the corner; runs already under
/// way at the start, or unfinished at the end, are ignored.
pub fn neighborhood_parity_violations(
    u: &Universe,
    steps: u64,
) -> Result<Vec<ParityViolation>, TruchetError> {
    let heat = u.rule().heat()?;
    let mut u = u.clone();
    let pose = u.pose();
    let behind = pose.target.neighbor(pose.heading.opposite());

    // corner -> (entered_at, parity at entry); `None` marks a transit that
    // began before we started watching.
    let mut active: FxHashMap<Corner, Option<(u64, u32)>> = FxHashMap::default();
    for v in behind.corners() {
        active.insert(v, None);
    }
    let mut violations = Vec::new();
    for _ in 0..steps {
        let cell = u.pose().target;
        let here = cell.corners();
        let now = u.time();
        active.retain(|v, entry| {
            if here.contains(v) {
                return true;
            }
            if let Some((entered_at, parity)) = *entry {
                if corner_degree(&u, heat, *v) % 2 != parity {
                    violations.push(ParityViolation {
                        corner: *v,
                        entered_at,
                        left_at: now,
                    });
                }
            }
            false
        });
        for v in here {
            active
                .entry(v)
                .or_insert_with(|| Some((now, corner_degree(&u, heat, v) % 2)));
        }
        u.step();
    }
    violations.sort_by_key(|v| (v.entered_at, v.corner));
    Ok(violations)
}
