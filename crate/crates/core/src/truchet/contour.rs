use rustc_hash::{FxHashMap, FxHashSet};

use super::tile::{Arc, CellKind};
use super::TruchetError;
use crate::engine::{AntPose, BoundingBox, Cell, Heading, Universe};
use crate::rules::Turn;

/// A closed, directed Truchet curve: consecutive arcs share an edge midpoint
/// and the last arc's exit meets the first arc's entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contour {
    start: AntPose,
    arcs: Vec<Arc>,
}

impl Contour {
    pub fn start(&self) -> AntPose {
        self.start
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Poses at which the ant would enter each arc's cell.
    pub fn poses(&self) -> impl Iterator<Item = AntPose> + '_ {
        self.arcs
            .iter()
            .map(|a| AntPose::new(a.cell, a.entry.opposite()))
    }

    pub fn contains_pose(&self, pose: AntPose) -> bool {
        self.poses().any(|p| p == pose)
    }

    pub fn undirected_arcs(&self) -> FxHashSet<(Cell, Heading, Heading)> {
        self.arcs.iter().map(|a| a.undirected()).collect()
    }

    /// Cells the contour passes through twice (once per arc), in order of
    /// first appearance.
    pub fn twice_visited_cells(&self) -> Vec<Cell> {
        let mut count: FxHashMap<Cell, u8> = FxHashMap::default();
        for a in &self.arcs {
            *count.entry(a.cell).or_default() += 1;
        }
        let mut seen = FxHashSet::default();
        self.arcs
            .iter()
            .map(|a| a.cell)
            .filter(|c| count[c] == 2 && seen.insert(*c))
            .collect()
    }

    /// Polygon through the edge midpoints, in doubled integer coordinates.
    pub fn midpoint_polygon(&self) -> Vec<(i64, i64)> {
        self.arcs
            .iter()
            .map(|a| edge_midpoint2(a.cell, a.entry))
            .collect()
    }

    /// Whether `other` lies inside this contour. The two must be disjoint.
    pub fn encloses(&self, other: &Contour) -> bool {
        let p = edge_midpoint2(other.arcs[0].cell, other.arcs[0].entry);
        point_in_polygon(p, &self.midpoint_polygon())
    }

    pub fn is_closed(&self) -> bool {
        match (self.arcs.first(), self.arcs.last()) {
            (Some(first), Some(last)) => {
                last.cell.neighbor(last.exit) == first.cell
                    && last.exit == first.entry.opposite()
                    && self
                        .arcs
                        .windows(2)
                        .all(|w| w[0].cell.neighbor(w[0].exit) == w[1].cell && w[0].exit == w[1].entry.opposite())
            }
            _ => false,
        }
    }

    /// No directed edge position occurs twice.
    pub fn is_simple(&self) -> bool {
        let mut seen = FxHashSet::default();
        self.poses().all(|p| seen.insert(p))
    }

    pub fn bounding_box(&self) -> BoundingBox {
        let mut bb = BoundingBox::of_cell(self.arcs[0].cell);
        for a in &self.arcs[1..] {
            bb.include(a.cell);
        }
        bb
    }
}

/// Midpoint of the `edge` side of `cell`, doubled so it is integral.
pub fn edge_midpoint2(cell: Cell, edge: Heading) -> (i64, i64) {
    let (x, y) = (2 * cell.x, 2 * cell.y);
    match edge {
        Heading::N => (x + 1, y + 2),
        Heading::S => (x + 1, y),
        Heading::E => (x + 2, y + 1),
        Heading::W => (x, y + 1),
    }
}

/// Even-odd test with a ray towards `+x`. Polygon edges have slope ±1, so
/// the crossing abscissa is exact in integers.
fn point_in_polygon(p: (i64, i64), poly: &[(i64, i64)]) -> bool {
    let (px, py) = p;
    let mut inside = false;
    for i in 0..poly.len() {
        let (xi, yi) = poly[i];
        let (xj, yj) = poly[(i + 1) % poly.len()];
        if (yi > py) != (yj > py) {
            let x = xi + (py - yi) * (xj - xi) / (yj - yi);
            if px < x {
                inside = !inside;
            }
        }
    }
    inside
}

/// Follows the Truchet arcs from `start`, reading each cell's turn through
/// `turn_at`, until `start` recurs.
pub(crate) fn trace_with(
    start: AntPose,
    cap: u64,
    mut turn_at: impl FnMut(Cell) -> Turn,
) -> Result<Contour, TruchetError> {
    let mut arcs = Vec::new();
    let mut pose = start;
    loop {
        if arcs.len() as u64 >= cap {
            return Err(TruchetError::StepCap { cap, start });
        }
        let arc = Arc::traced(pose.target, pose.heading, turn_at(pose.target));
        arcs.push(arc);
        pose = AntPose::new(arc.cell.neighbor(arc.exit), arc.exit);
        if pose == start {
            return Ok(Contour { start, arcs });
        }
    }
}

/// Traces the contour through `start` without touching any cell state.
pub fn trace_contour(u: &Universe, start: AntPose, cap: u64) -> Result<Contour, TruchetError> {
    let rule = u.rule();
    trace_with(start, cap, |c| rule.turn(u.state(c)))
}

/// The contour through the ant's home edge, in the home heading.
pub fn principal_contour(u: &Universe, cap: u64) -> Result<Contour, TruchetError> {
    if !u.is_home() {
        return Err(TruchetError::NotHome(u.pose()));
    }
    trace_contour(u, AntPose::HOME, cap)
}

/// Partitions every arc of the cells in `region` into undirected contours.
/// Contours may leave the region; each is listed once.
pub fn contours_through(
    u: &Universe,
    region: BoundingBox,
    cap: u64,
) -> Result<Vec<Contour>, TruchetError> {
    let mut assigned: FxHashSet<(Cell, Heading, Heading)> = FxHashSet::default();
    let mut out = Vec::new();
    for y in region.min_y..=region.max_y {
        for x in region.min_x..=region.max_x {
            let cell = Cell::new(x, y);
            for h in CellKind::of(cell).entry_headings() {
                let arc = Arc::traced(cell, h, u.rule().turn(u.state(cell)));
                if assigned.contains(&arc.undirected()) {
                    continue;
                }
                let c = trace_contour(u, AntPose::new(cell, h), cap)?;
                assigned.extend(c.arcs.iter().map(|a| a.undirected()));
                out.push(c);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::DEFAULT_STEP_CAP;
    use crate::rules::RuleString;

    fn fresh(code: u64) -> Universe {
        Universe::new(RuleString::from_code(code).unwrap())
    }

    #[test]
    fn initial_home_circle() {
        let u = fresh(12);
        let c = principal_contour(&u, DEFAULT_STEP_CAP).unwrap();
        let cells: Vec<Cell> = c.arcs().iter().map(|a| a.cell).collect();
        assert_eq!(
            cells,
            vec![Cell::new(0, 0), Cell::new(0, -1), Cell::new(1, -1), Cell::new(1, 0)]
        );
        assert!(c.is_closed());
        assert!(c.is_simple());
        assert!(c.twice_visited_cells().is_empty());
    }

    #[test]
    fn reverse_trace_same_arcs() {
        let mut u = fresh(2);
        u.run(200);
        let start = AntPose::new(Cell::new(0, 0), Heading::W);
        let fwd = trace_contour(&u, start, DEFAULT_STEP_CAP).unwrap();
        let last = fwd.arcs().last().unwrap();
        let back = trace_contour(
            &u,
            AntPose::new(last.cell, last.exit.opposite()),
            DEFAULT_STEP_CAP,
        )
        .unwrap();
        assert_eq!(fwd.undirected_arcs(), back.undirected_arcs());
        assert_eq!(fwd.len(), back.len());
    }

    #[test]
    fn step_cap() {
        let u = fresh(2);
        assert!(matches!(
            trace_contour(&u, AntPose::HOME, 3),
            Err(TruchetError::StepCap { cap: 3, .. })
        ));
    }

    #[test]
    fn principal_requires_home() {
        let mut u = fresh(2);
        u.step();
        assert!(matches!(
            principal_contour(&u, 100),
            Err(TruchetError::NotHome(_))
        ));
    }

    #[test]
    fn point_in_diamond() {
        let square = vec![(0, 3), (3, 0), (6, 3), (3, 6)];
        assert!(point_in_polygon((3, 3), &square));
        assert!(point_in_polygon((1, 3), &square));
        assert!(!point_in_polygon((7, 3), &square));
        assert!(!point_in_polygon((3, 7), &square));
    }
}
