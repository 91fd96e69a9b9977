use rustc_hash::FxHashMap;

use super::tile::{tile_geometry, Diagonal};
use super::TruchetError;
use crate::engine::{BoundingBox, Cell, Corner, Universe};
use crate::rules::Heat;

/// One diagonal per hot tile, on lattice corners.
///
/// When state 1 is cold (runs aligned at state 1, e.g. LLRR) the untouched
/// plane contributes nothing and the graph is finite. When state 1 is hot
/// (e.g. LRRL) every untouched tile carries a diagonal too; the graph is then
/// built over the stored cells' bounding box grown by one, and only corners
/// whose four incident cells all lie in that window have exact degrees.
#[derive(Debug, Clone)]
pub struct DiagonalsGraph {
    edges: Vec<(Cell, Diagonal)>,
    window: Option<BoundingBox>,
}

impl DiagonalsGraph {
    pub fn edges(&self) -> impl Iterator<Item = Diagonal> + '_ {
        self.edges.iter().map(|&(_, d)| d)
    }

    /// Edges with the tile they belong to.
    pub fn tile_edges(&self) -> &[(Cell, Diagonal)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `Some` when the untouched plane is hot and the graph is windowed.
    pub fn window(&self) -> Option<BoundingBox> {
        self.window
    }

    pub fn degrees(&self) -> FxHashMap<Corner, u32> {
        let mut deg = FxHashMap::default();
        for &(_, d) in &self.edges {
            *deg.entry(d.a).or_default() += 1;
            *deg.entry(d.b).or_default() += 1;
        }
        deg
    }

    fn is_exact(&self, v: Corner) -> bool {
        match self.window {
            None => true,
            Some(w) => w.min_x < v.x && v.x <= w.max_x && w.min_y < v.y && v.y <= w.max_y,
        }
    }

    /// Degrees at corners whose value reflects the whole plane.
    pub fn exact_degrees(&self) -> impl Iterator<Item = (Corner, u32)> + '_ {
        self.degrees().into_iter().filter(|&(v, _)| self.is_exact(v))
    }

    /// Every (exactly known) vertex has degree 0, 2 or 4.
    pub fn even_degree_holds(&self) -> bool {
        self.exact_degrees().all(|(_, d)| d % 2 == 0)
    }

    pub fn odd_vertex_count(&self) -> usize {
        self.degrees().values().filter(|&&d| d % 2 == 1).count()
    }

    /// Components of the edge-induced subgraph; isolated lattice points are
    /// not vertices.
    pub fn components(&self) -> Components {
        Components::of(self.edges.iter().map(|&(_, d)| d))
    }

    /// The graph with `cell`'s diagonal removed.
    pub fn without_cell(&self, cell: Cell) -> DiagonalsGraph {
        DiagonalsGraph {
            edges: self.edges.iter().copied().filter(|&(c, _)| c != cell).collect(),
            window: self.window,
        }
    }
}

/// Connected components of a set of diagonal edges.
#[derive(Debug, Clone)]
pub struct Components {
    index: FxHashMap<Corner, usize>,
    parent: Vec<usize>,
}

impl Components {
    fn of(edges: impl Iterator<Item = Diagonal>) -> Self {
        let mut c = Components {
            index: FxHashMap::default(),
            parent: Vec::new(),
        };
        for d in edges {
            let a = c.intern(d.a);
            let b = c.intern(d.b);
            c.union(a, b);
        }
        c
    }

    fn intern(&mut self, v: Corner) -> usize {
        let next = self.parent.len();
        let i = *self.index.entry(v).or_insert(next);
        if i == next {
            self.parent.push(i);
        }
        i
    }

    fn find(&self, mut i: usize) -> usize {
        while self.parent[i] != i {
            i = self.parent[i];
        }
        i
    }

    fn find_mut(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find_mut(a), self.find_mut(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    pub fn count(&self) -> usize {
        (0..self.parent.len()).filter(|&i| self.parent[i] == i).count()
    }

    /// Component id of `v`, or `None` if `v` is not an edge endpoint.
    pub fn component_of(&self, v: Corner) -> Option<usize> {
        self.index.get(&v).map(|&i| self.find(i))
    }

    /// Whether `p` and `q` lie in the same component. A corner with no edges
    /// is only connected to itself.
    pub fn connected(&self, p: Corner, q: Corner) -> bool {
        if p == q {
            return true;
        }
        match (self.component_of(p), self.component_of(q)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    /// Vertices grouped per component root.
    pub fn groups(&self) -> FxHashMap<usize, Vec<Corner>> {
        let mut g: FxHashMap<usize, Vec<Corner>> = FxHashMap::default();
        for (&v, &i) in &self.index {
            g.entry(self.find(i)).or_default().push(v);
        }
        g
    }
}

/// Builds the diagonals graph; the rule must have the even run-length
/// property.
pub fn diagonals_graph(u: &Universe) -> Result<DiagonalsGraph, TruchetError> {
    let heat = u.rule().heat()?;
    let rule = u.rule();
    let diagonal = |c: Cell| tile_geometry(c, rule.turn(u.state(c))).1;
    if heat.cold(1) {
        let mut edges: Vec<(Cell, Diagonal)> = u
            .cells()
            .filter(|&(_, s, _)| heat.hot(s))
            .map(|(c, _, _)| (c, diagonal(c)))
            .collect();
        edges.sort_unstable();
        return Ok(DiagonalsGraph {
            edges,
            window: None,
        });
    }
    let window = stored_box(u)
        .unwrap_or(BoundingBox::of_cell(Cell::new(0, 0)))
        .grown(1);
    let edges = window
        .cells_top_down()
        .filter(|&c| heat.hot(u.state(c)))
        .map(|c| (c, diagonal(c)))
        .collect();
    Ok(DiagonalsGraph {
        edges,
        window: Some(window),
    })
}

fn stored_box(u: &Universe) -> Option<BoundingBox> {
    let mut it = u.cells().map(|(c, _, _)| c);
    let mut bb = BoundingBox::of_cell(it.next()?);
    for c in it {
        bb.include(c);
    }
    Some(bb)
}

/// Number of hot tiles around `v` whose diagonal ends at `v`.
pub fn corner_degree(u: &Universe, heat: Heat, v: Corner) -> u32 {
    let rule = u.rule();
    [
        Cell::new(v.x - 1, v.y - 1),
        Cell::new(v.x, v.y - 1),
        Cell::new(v.x - 1, v.y),
        Cell::new(v.x, v.y),
    ]
    .into_iter()
    .filter(|&c| {
        let s = u.state(c);
        heat.hot(s) && tile_geometry(c, rule.turn(s)).1.touches(v)
    })
    .count() as u32
}

/// Builds the graph and checks the even-degree property.
pub fn even_degree_holds(u: &Universe) -> Result<bool, TruchetError> {
    Ok(diagonals_graph(u)?.even_degree_holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::RuleString;

    fn universe(code: u64) -> Universe {
        Universe::new(RuleString::from_code(code).unwrap())
    }

    #[test]
    fn initial_graph_is_empty() {
        let g = diagonals_graph(&universe(12)).unwrap();
        assert!(g.is_empty());
        assert!(g.even_degree_holds());
        assert_eq!(g.components().count(), 0);
    }

    #[test]
    fn ant12_after_first_tour() {
        let mut u = universe(12);
        u.run(4);
        let g = diagonals_graph(&u).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert!(g.degrees().values().all(|&d| d == 2));
        assert!(g.even_degree_holds());
        assert_eq!(g.components().count(), 1);
        assert_eq!(g.odd_vertex_count() % 2, 0);
    }

    #[test]
    fn rejects_odd_runs() {
        assert!(matches!(
            diagonals_graph(&universe(2)),
            Err(TruchetError::Rule(_))
        ));
    }

    #[test]
    fn hot_plane_default_pattern_is_even() {
        // LRRL: state 1 is hot, so the untouched plane is a lattice of
        // diamonds with every corner of degree 0 or 4.
        let u = universe(9);
        let heat = u.rule().heat().unwrap();
        for x in -3..3 {
            for y in -3..3 {
                let d = corner_degree(&u, heat, Corner::new(x, y));
                assert!(d == 0 || d == 4, "corner ({x}, {y}) has degree {d}");
            }
        }
        let g = diagonals_graph(&u).unwrap();
        assert!(g.window().is_some());
        assert!(g.even_degree_holds());
    }

    #[test]
    fn corner_degree_matches_graph() {
        let mut u = universe(48);
        u.run(500);
        let heat = u.rule().heat().unwrap();
        let g = diagonals_graph(&u).unwrap();
        for (v, d) in g.exact_degrees() {
            assert_eq!(corner_degree(&u, heat, v), d);
        }
    }

    #[test]
    fn components_connectivity() {
        let d = |a: (i64, i64), b: (i64, i64)| Diagonal {
            a: Corner::new(a.0, a.1),
            b: Corner::new(b.0, b.1),
        };
        let c = Components::of(
            [d((0, 0), (1, 1)), d((1, 1), (2, 0)), d((5, 5), (6, 6))].into_iter(),
        );
        assert_eq!(c.count(), 2);
        assert!(c.connected(Corner::new(0, 0), Corner::new(2, 0)));
        assert!(!c.connected(Corner::new(0, 0), Corner::new(6, 6)));
        assert!(!c.connected(Corner::new(0, 0), Corner::new(9, 9)));
        assert!(c.connected(Corner::new(9, 9), Corner::new(9, 9)));
    }
}
