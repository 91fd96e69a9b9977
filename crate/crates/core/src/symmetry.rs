//! Central and bilateral symmetry of the track.
//!
//! A configuration is symmetric under an isometry when the isometry maps the
//! visited set onto itself and preserves every cell's state. Any global
//! symmetry must fix the bounding box, so the candidate anchors are its
//! centre and midlines.

use std::fmt;

use crate::engine::{Cell, EngineError, Universe};
use crate::rules::RuleString;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsometryKind {
    PointReflection,
    /// Reflection in a vertical line.
    MirrorVertical,
    /// Reflection in a horizontal line.
    MirrorHorizontal,
    /// Reflection in a line of slope +1.
    MirrorDiagonal,
    /// Reflection in a line of slope −1.
    MirrorAntiDiagonal,
}

impl IsometryKind {
    pub fn name(self) -> &'static str {
        match self {
            IsometryKind::PointReflection => "point",
            IsometryKind::MirrorVertical => "mirror-vertical",
            IsometryKind::MirrorHorizontal => "mirror-horizontal",
            IsometryKind::MirrorDiagonal => "mirror-diagonal",
            IsometryKind::MirrorAntiDiagonal => "mirror-antidiagonal",
        }
    }

    pub fn is_mirror(self) -> bool {
        self != IsometryKind::PointReflection
    }
}

/// An involutive isometry of the cell lattice. The anchor is a point of the
/// plane stored in doubled coordinates, so half-integers are exact: it is the
/// reflection centre, or any point on the mirror axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Isometry {
    pub kind: IsometryKind,
    pub anchor2: (i64, i64),
}

impl Isometry {
    pub fn new(kind: IsometryKind, anchor2: (i64, i64)) -> Self {
        Isometry { kind, anchor2 }
    }

    /// Anchor in plane coordinates.
    pub fn anchor(&self) -> (f64, f64) {
        (self.anchor2.0 as f64 / 2.0, self.anchor2.1 as f64 / 2.0)
    }

    /// Image of a cell, or `None` if the isometry does not map cells to cells
    /// (a diagonal axis through the wrong points).
    pub fn apply(&self, c: Cell) -> Option<Cell> {
        let (ax, ay) = self.anchor2;
        // Cell centres are (2x+1, 2y+1) in doubled coordinates.
        match self.kind {
            IsometryKind::PointReflection => Some(Cell::new(ax - c.x - 1, ay - c.y - 1)),
            IsometryKind::MirrorVertical => Some(Cell::new(ax - c.x - 1, c.y)),
            IsometryKind::MirrorHorizontal => Some(Cell::new(c.x, ay - c.y - 1)),
            IsometryKind::MirrorDiagonal => {
                let d = ax - ay;
                (d % 2 == 0).then(|| Cell::new(c.y + d / 2, c.x - d / 2))
            }
            IsometryKind::MirrorAntiDiagonal => {
                let s = ax + ay;
                (s % 2 == 0).then(|| Cell::new(s / 2 - c.y - 1, s / 2 - c.x - 1))
            }
        }
    }
}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = self.anchor();
        write!(f, "{} {} {}", self.kind.name(), x, y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    pub time: u64,
    pub found: Vec<Isometry>,
}

impl SymmetryReport {
    pub fn has(&self, kind: IsometryKind) -> bool {
        self.found.iter().any(|i| i.kind == kind)
    }

    pub fn has_mirror(&self) -> bool {
        self.found.iter().any(|i| i.kind.is_mirror())
    }
}

pub fn check_isometry(u: &Universe, iso: Isometry) -> bool {
    u.cells().filter(|&(_, _, v)| v).all(|(c, s, _)| {
        iso.apply(c)
            .is_some_and(|m| u.is_visited(m) && u.state(m) == s)
    })
}

/// Candidate isometries fixing the track's bounding box.
pub fn candidates(u: &Universe, include_diagonals: bool) -> Result<Vec<Isometry>, EngineError> {
    let bb = u.bounding_box()?;
    let anchor2 = (bb.min_x + bb.max_x + 1, bb.min_y + bb.max_y + 1);
    let mut kinds = vec![
        IsometryKind::PointReflection,
        IsometryKind::MirrorVertical,
        IsometryKind::MirrorHorizontal,
    ];
    if include_diagonals && bb.width() == bb.height() {
        kinds.extend([IsometryKind::MirrorDiagonal, IsometryKind::MirrorAntiDiagonal]);
    }
    Ok(kinds.into_iter().map(|k| Isometry::new(k, anchor2)).collect())
}

pub fn detect_symmetries(u: &Universe, include_diagonals: bool) -> Result<SymmetryReport, EngineError> {
    let found = candidates(u, include_diagonals)?
        .into_iter()
        .filter(|&iso| check_isometry(u, iso))
        .collect();
    Ok(SymmetryReport {
        time: u.time(),
        found,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sampling {
    EveryStep,
    HomeReturn,
}

/// Runs `rule` from scratch to `horizon` and reports every sampled time with
/// at least one symmetry.
pub fn symmetry_scan(
    rule: &RuleString,
    horizon: u64,
    sampling: Sampling,
    include_diagonals: bool,
) -> Vec<SymmetryReport> {
    let mut u = Universe::new(rule.clone());
    let mut out = Vec::new();
    while u.time() < horizon {
        u.step();
        if sampling == Sampling::HomeReturn && !u.is_home() {
            continue;
        }
        let report = detect_symmetries(&u, include_diagonals).expect("track is nonempty after a step");
        if !report.found.is_empty() {
            out.push(report);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use IsometryKind::*;

    fn run(code: u64, t: u64) -> Universe {
        let mut u = Universe::new(RuleString::from_code(code).unwrap());
        u.run(t);
        u
    }

    #[test]
    fn involutions() {
        let cells = [Cell::new(0, 0), Cell::new(3, -2), Cell::new(-5, 7)];
        for kind in [PointReflection, MirrorVertical, MirrorHorizontal, MirrorDiagonal, MirrorAntiDiagonal] {
            for anchor2 in [(0, 0), (1, 1), (2, 0), (3, 5)] {
                let iso = Isometry::new(kind, anchor2);
                for c in cells {
                    if let Some(m) = iso.apply(c) {
                        assert_eq!(iso.apply(m), Some(c), "{iso} on {c}");
                    }
                }
            }
        }
    }

    #[test]
    fn single_cell_has_all_symmetries() {
        let u = run(2, 1);
        let iso = Isometry::new(PointReflection, (1, 1));
        assert!(check_isometry(&u, iso));
        let r = detect_symmetries(&u, true).unwrap();
        assert_eq!(r.found.len(), 5);
    }

    #[test]
    fn ant12_mirror_at_four() {
        let u = run(12, 4);
        // The vertical line x = 1 through the home edge.
        assert!(check_isometry(&u, Isometry::new(MirrorVertical, (2, 0))));
        assert!(detect_symmetries(&u, false).unwrap().has(MirrorVertical));
    }

    #[test]
    fn empty_track_is_an_error() {
        assert_eq!(
            detect_symmetries(&run(2, 0), false),
            Err(EngineError::EmptyTrack)
        );
    }

    #[test]
    fn display() {
        let iso = Isometry::new(MirrorVertical, (1, -3));
        assert_eq!(iso.to_string(), "mirror-vertical 0.5 -1.5");
    }
}
