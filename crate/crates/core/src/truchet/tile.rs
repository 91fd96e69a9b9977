use crate::engine::{Cell, Corner, Heading};
use crate::rules::Turn;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellKind {
    /// Entered horizontally, left by a vertical move.
    H,
    /// Entered vertically, left by a horizontal move.
    V,
}

impl CellKind {
    pub fn of(cell: Cell) -> CellKind {
        if cell.is_h_cell() {
            CellKind::H
        } else {
            CellKind::V
        }
    }

    /// Headings with which the ant can enter a cell of this kind.
    pub fn entry_headings(self) -> [Heading; 2] {
        match self {
            CellKind::H => [Heading::E, Heading::W],
            CellKind::V => [Heading::N, Heading::S],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TileOrientation {
    pub kind: CellKind,
    pub letter: Turn,
}

/// A quarter-circle arc joining the midpoints of two adjacent edges of a
/// cell, directed from `entry` to `exit`. Edges are named by the side of the
/// cell they lie on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub cell: Cell,
    pub entry: Heading,
    pub exit: Heading,
}

impl Arc {
    /// The arc of a tile holding `letter` that starts on the edge crossed by
    /// `heading`. Entering along the cell's own axis this is the ant's turn;
    /// entering across it (a contour walked backwards) the turn is mirrored.
    #[inline]
    pub fn traced(cell: Cell, heading: Heading, letter: Turn) -> Arc {
        let turn = if heading.is_horizontal() == cell.is_h_cell() {
            letter
        } else {
            letter.flipped()
        };
        Arc {
            cell,
            entry: heading.opposite(),
            exit: heading.turned(turn),
        }
    }

    pub fn reversed(self) -> Arc {
        Arc {
            cell: self.cell,
            entry: self.exit,
            exit: self.entry,
        }
    }

    /// Direction-free identity of the arc.
    pub fn undirected(self) -> (Cell, Heading, Heading) {
        let (a, b) = if self.entry <= self.exit {
            (self.entry, self.exit)
        } else {
            (self.exit, self.entry)
        };
        (self.cell, a, b)
    }

    /// The lattice corner the arc is centred on.
    pub fn center(self) -> Corner {
        edge_corner(self.cell, self.entry, self.exit)
    }
}

/// A diagonal of a tile, with endpoints in sorted order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagonal {
    pub a: Corner,
    pub b: Corner,
}

impl Diagonal {
    fn new(p: Corner, q: Corner) -> Self {
        if p <= q {
            Diagonal { a: p, b: q }
        } else {
            Diagonal { a: q, b: p }
        }
    }

    pub fn touches(&self, v: Corner) -> bool {
        self.a == v || self.b == v
    }
}

/// Corner shared by two adjacent edges of `cell`.
pub fn edge_corner(cell: Cell, e1: Heading, e2: Heading) -> Corner {
    let mut x = cell.x;
    let mut y = cell.y;
    for e in [e1, e2] {
        match e {
            Heading::N => y += 1,
            Heading::E => x += 1,
            Heading::S | Heading::W => {}
        }
    }
    debug_assert!(e1.is_horizontal() != e2.is_horizontal(), "edges not adjacent");
    Corner::new(x, y)
}

/// The undirected arc pair and diagonal of a tile placed at `cell`.
///
/// Arcs follow from the turn rule: an ant entering with heading `h` exits
/// through edge `h.turned(letter)`. The diagonal joins the two corners not
/// cut off by either arc, so it never crosses the tile's own arcs.
pub fn tile_geometry(cell: Cell, letter: Turn) -> ([Arc; 2], Diagonal) {
    let kind = CellKind::of(cell);
    let arcs = kind.entry_headings().map(|h| Arc::traced(cell, h, letter));
    let cut = arcs.map(Arc::center);
    let mut free = cell.corners().into_iter().filter(|c| !cut.contains(c));
    let p = free.next().expect("two free corners");
    let q = free.next().expect("two free corners");
    (arcs, Diagonal::new(p, q))
}

/// Orientation of the tile at `cell` when it holds `letter`.
pub fn orientation(cell: Cell, letter: Turn) -> TileOrientation {
    TileOrientation {
        kind: CellKind::of(cell),
        letter,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Heading::*;

    fn edge_pairs(arcs: [Arc; 2]) -> Vec<(Heading, Heading)> {
        let mut v: Vec<_> = arcs.iter().map(|a| (a.entry, a.exit)).collect();
        v.sort();
        v
    }

    #[test]
    fn table() {
        // Cell [0,1]x[0,1] is an H-cell, [1,2]x[0,1] a V-cell.
        let h = Cell::new(0, 0);
        let v = Cell::new(1, 0);
        let ne_sw = |c: Cell| Diagonal::new(Corner::new(c.x + 1, c.y + 1), Corner::new(c.x, c.y));
        let nw_se = |c: Cell| Diagonal::new(Corner::new(c.x, c.y + 1), Corner::new(c.x + 1, c.y));

        let (arcs, d) = tile_geometry(h, Turn::L);
        assert_eq!(edge_pairs(arcs), vec![(E, S), (W, N)]);
        assert_eq!(d, ne_sw(h));

        let (arcs, d) = tile_geometry(h, Turn::R);
        assert_eq!(edge_pairs(arcs), vec![(E, N), (W, S)]);
        assert_eq!(d, nw_se(h));

        let (arcs, d) = tile_geometry(v, Turn::L);
        assert_eq!(edge_pairs(arcs), vec![(N, E), (S, W)]);
        assert_eq!(d, nw_se(v));

        let (arcs, d) = tile_geometry(v, Turn::R);
        assert_eq!(edge_pairs(arcs), vec![(N, W), (S, E)]);
        assert_eq!(d, ne_sw(v));
    }

    #[test]
    fn h_l_entering_west_exits_north() {
        let a = Arc::traced(Cell::new(0, 0), E, Turn::L);
        assert_eq!((a.entry, a.exit), (W, N));
        let a = Arc::traced(Cell::new(1, 0), N, Turn::L);
        assert_eq!((a.entry, a.exit), (S, W));
    }

    #[test]
    fn off_axis_entry_walks_the_same_arc_backwards() {
        for cell in [Cell::new(0, 0), Cell::new(1, 0)] {
            for letter in [Turn::L, Turn::R] {
                let (arcs, _) = tile_geometry(cell, letter);
                for a in arcs {
                    let back = Arc::traced(cell, a.exit.opposite(), letter);
                    assert_eq!(back, a.reversed());
                }
            }
        }
    }

    #[test]
    fn flipping_swaps_diagonal() {
        for c in [Cell::new(0, 0), Cell::new(0, 1), Cell::new(-3, 2)] {
            let (_, dl) = tile_geometry(c, Turn::L);
            let (_, dr) = tile_geometry(c, Turn::R);
            assert_ne!(dl, dr);
        }
    }
}
