//! The ant automaton on an unbounded, sparsely stored grid.
//!
//! Cell `(x, y)` is the unit square `[x, x+1] × [y, y+1]`, with `E = +x` and
//! `N = +y`. The ant's pose is the cell it is about to enter together with its
//! heading; home is the edge between `(0, 0)` and `(1, 0)`, heading west.

use std::fmt;

use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::rules::{RuleString, Turn};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("the track is empty")]
    EmptyTrack,
    #[error("cannot run back in time from {now} to {target}")]
    TimeInPast { now: u64, target: u64 },
    #[error("state {state} is out of range 1..={n}")]
    StateOutOfRange { state: u8, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Heading {
    N,
    E,
    S,
    W,
}

impl Heading {
    pub const ALL: [Heading; 4] = [Heading::N, Heading::E, Heading::S, Heading::W];

    /// Quarter turn counterclockwise.
    #[inline]
    pub fn left(self) -> Heading {
        match self {
            Heading::N => Heading::W,
            Heading::W => Heading::S,
            Heading::S => Heading::E,
            Heading::E => Heading::N,
        }
    }

    #[inline]
    pub fn right(self) -> Heading {
        match self {
            Heading::N => Heading::E,
            Heading::E => Heading::S,
            Heading::S => Heading::W,
            Heading::W => Heading::N,
        }
    }

    #[inline]
    pub fn opposite(self) -> Heading {
        self.left().left()
    }

    #[inline]
    pub fn turned(self, turn: Turn) -> Heading {
        match turn {
            Turn::L => self.left(),
            Turn::R => self.right(),
        }
    }

    #[inline]
    pub fn delta(self) -> (i64, i64) {
        match self {
            Heading::N => (0, 1),
            Heading::E => (1, 0),
            Heading::S => (0, -1),
            Heading::W => (-1, 0),
        }
    }

    pub fn is_horizontal(self) -> bool {
        matches!(self, Heading::E | Heading::W)
    }

    pub fn as_char(self) -> char {
        match self {
            Heading::N => 'N',
            Heading::E => 'E',
            Heading::S => 'S',
            Heading::W => 'W',
        }
    }

    pub fn from_char(c: char) -> Option<Heading> {
        match c {
            'N' => Some(Heading::N),
            'E' => Some(Heading::E),
            'S' => Some(Heading::S),
            'W' => Some(Heading::W),
            _ => None,
        }
    }
}

impl fmt::Display for Heading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub x: i64,
    pub y: i64,
}

impl Cell {
    pub const fn new(x: i64, y: i64) -> Self {
        Cell { x, y }
    }

    #[inline]
    pub fn neighbor(self, h: Heading) -> Cell {
        let (dx, dy) = h.delta();
        Cell::new(self.x + dx, self.y + dy)
    }

    /// H-cells are entered horizontally; they sit on the even checkerboard
    /// squares, anchored by the home cell.
    #[inline]
    pub fn is_h_cell(self) -> bool {
        (self.x + self.y).rem_euclid(2) == 0
    }

    /// Lattice corners `(x, y)`, `(x+1, y)`, `(x, y+1)`, `(x+1, y+1)`.
    pub fn corners(self) -> [Corner; 4] {
        let Cell { x, y } = self;
        [
            Corner::new(x, y),
            Corner::new(x + 1, y),
            Corner::new(x, y + 1),
            Corner::new(x + 1, y + 1),
        ]
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A lattice point (corner of cells).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corner {
    pub x: i64,
    pub y: i64,
}

impl Corner {
    pub const fn new(x: i64, y: i64) -> Self {
        Corner { x, y }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AntPose {
    pub target: Cell,
    pub heading: Heading,
}

impl AntPose {
    pub const HOME: AntPose = AntPose {
        target: Cell::new(0, 0),
        heading: Heading::W,
    };

    pub fn new(target: Cell, heading: Heading) -> Self {
        AntPose { target, heading }
    }

    /// Whether the heading agrees with the checkerboard class of the target.
    pub fn is_lattice_consistent(&self) -> bool {
        self.heading.is_horizontal() == self.target.is_h_cell()
    }
}

/// One step of the ant: the cell it crossed and how.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Move {
    pub cell: Cell,
    pub heading_in: Heading,
    pub heading_out: Heading,
    pub state_before: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct CellData {
    state: u8,
    visited: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundingBox {
    pub min_x: i64,
    pub max_x: i64,
    pub min_y: i64,
    pub max_y: i64,
}

impl BoundingBox {
    pub fn of_cell(c: Cell) -> Self {
        BoundingBox {
            min_x: c.x,
            max_x: c.x,
            min_y: c.y,
            max_y: c.y,
        }
    }

    pub fn include(&mut self, c: Cell) {
        self.min_x = self.min_x.min(c.x);
        self.max_x = self.max_x.max(c.x);
        self.min_y = self.min_y.min(c.y);
        self.max_y = self.max_y.max(c.y);
    }

    pub fn width(&self) -> u64 {
        (self.max_x - self.min_x + 1) as u64
    }

    pub fn height(&self) -> u64 {
        (self.max_y - self.min_y + 1) as u64
    }

    /// Larger side, in cells.
    pub fn diameter(&self) -> u64 {
        self.width().max(self.height())
    }

    pub fn contains(&self, c: Cell) -> bool {
        (self.min_x..=self.max_x).contains(&c.x) && (self.min_y..=self.max_y).contains(&c.y)
    }

    pub fn grown(&self, margin: i64) -> Self {
        BoundingBox {
            min_x: self.min_x - margin,
            max_x: self.max_x + margin,
            min_y: self.min_y - margin,
            max_y: self.max_y + margin,
        }
    }

    /// Cells row by row, top row first.
    pub fn cells_top_down(&self) -> impl Iterator<Item = Cell> + '_ {
        (self.min_y..=self.max_y)
            .rev()
            .flat_map(move |y| (self.min_x..=self.max_x).map(move |x| Cell::new(x, y)))
    }
}

/// The ant's world: rule, sparse cell states, track, pose and clock.
///
/// Cells absent from the map are in state 1 and unvisited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    rule: RuleString,
    cells: FxHashMap<Cell, CellData>,
    visited_count: usize,
    pose: AntPose,
    time: u64,
}

impl Universe {
    pub fn new(rule: RuleString) -> Self {
        Universe {
            rule,
            cells: FxHashMap::default(),
            visited_count: 0,
            pose: AntPose::HOME,
            time: 0,
        }
    }

    pub fn rule(&self) -> &RuleString {
        &self.rule
    }

    pub fn pose(&self) -> AntPose {
        self.pose
    }

    pub fn time(&self) -> u64 {
        self.time
    }

    pub fn is_home(&self) -> bool {
        self.pose == AntPose::HOME
    }

    #[inline]
    pub fn state(&self, c: Cell) -> u8 {
        self.cells.get(&c).map_or(1, |d| d.state)
    }

    pub fn is_visited(&self, c: Cell) -> bool {
        self.cells.get(&c).is_some_and(|d| d.visited)
    }

    pub fn visited_count(&self) -> usize {
        self.visited_count
    }

    /// Every stored cell with its state and visited flag, in arbitrary order.
    pub fn cells(&self) -> impl Iterator<Item = (Cell, u8, bool)> + '_ {
        self.cells.iter().map(|(&c, d)| (c, d.state, d.visited))
    }

    /// Stored cells sorted by `(x, y)`.
    pub fn sorted_cells(&self) -> Vec<(Cell, u8, bool)> {
        let mut v: Vec<_> = self.cells().collect();
        v.sort_unstable_by_key(|&(c, _, _)| c);
        v
    }

    pub fn visited_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells().filter(|&(_, _, v)| v).map(|(c, _, _)| c)
    }

    /// Sets a cell's state without moving the ant.
    pub fn set_state(&mut self, c: Cell, state: u8) -> Result<(), EngineError> {
        self.check_state(state)?;
        let d = self.cells.entry(c).or_insert(CellData {
            state: 1,
            visited: false,
        });
        d.state = state;
        if d.state == 1 && !d.visited {
            self.cells.remove(&c);
        }
        Ok(())
    }

    pub fn mark_visited(&mut self, c: Cell) {
        let d = self.cells.entry(c).or_insert(CellData {
            state: 1,
            visited: false,
        });
        if !d.visited {
            d.visited = true;
            self.visited_count += 1;
        }
    }

    pub fn set_pose(&mut self, pose: AntPose) {
        self.pose = pose;
    }

    pub fn set_time(&mut self, time: u64) {
        self.time = time;
    }

    fn check_state(&self, state: u8) -> Result<(), EngineError> {
        if state == 0 || usize::from(state) > self.rule.n() {
            return Err(EngineError::StateOutOfRange {
                state,
                n: self.rule.n(),
            });
        }
        Ok(())
    }

    /// Enter the target cell, turn per its state, advance the state, and move
    /// on to the neighbor in the new heading.
    #[inline]
    pub fn step(&mut self) -> Move {
        let cell = self.pose.target;
        let d = self.cells.entry(cell).or_insert(CellData {
            state: 1,
            visited: false,
        });
        if !d.visited {
            d.visited = true;
            self.visited_count += 1;
        }
        let state_before = d.state;
        let heading_in = self.pose.heading;
        let heading_out = heading_in.turned(self.rule.turn(state_before));
        d.state = self.rule.next_state(state_before);
        self.pose = AntPose::new(cell.neighbor(heading_out), heading_out);
        self.time += 1;
        Move {
            cell,
            heading_in,
            heading_out,
            state_before,
        }
    }

    pub fn run(&mut self, steps: u64) {
        for _ in 0..steps {
            self.step();
        }
    }

    pub fn run_until(&mut self, t: u64) -> Result<(), EngineError> {
        if t < self.time {
            return Err(EngineError::TimeInPast {
                now: self.time,
                target: t,
            });
        }
        self.run(t - self.time);
        Ok(())
    }

    /// Steps until the ant is home again, giving up after `cap` steps.
    /// Returns the number of steps taken.
    pub fn run_to_home(&mut self, cap: u64) -> Option<u64> {
        for k in 1..=cap {
            self.step();
            if self.is_home() {
                return Some(k);
            }
        }
        None
    }

    /// Times `t` in `(now, horizon]` at which the ant is back in its initial
    /// pose. Runs on a copy.
    pub fn home_return_times(&self, horizon: u64) -> Vec<u64> {
        let mut u = self.clone();
        let mut out = Vec::new();
        while u.time < horizon {
            u.step();
            if u.is_home() {
                out.push(u.time);
            }
        }
        out
    }

    pub fn bounding_box(&self) -> Result<BoundingBox, EngineError> {
        let mut it = self.visited_cells();
        let first = it.next().ok_or(EngineError::EmptyTrack)?;
        let mut bb = BoundingBox::of_cell(first);
        for c in it {
            bb.include(c);
        }
        Ok(bb)
    }
}

/// Runs a fresh universe for `rule` and lists its home-return times up to
/// `horizon`.
pub fn home_return_times(rule: &RuleString, horizon: u64) -> Vec<u64> {
    Universe::new(rule.clone()).home_return_times(horizon)
}
