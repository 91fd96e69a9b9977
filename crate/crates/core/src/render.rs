//! Pictures: plain-text P3 pixmaps of cell states, SVG Truchet drawings.
//!
//! Model space has `y` pointing up; both emitters flip to screen rows.

use std::fmt::Write as _;

use rustc_hash::FxHashSet;
use thiserror::Error;

use crate::config::{BACKGROUND_RGB, DEFAULT_STEP_CAP, DEFAULT_TRUCHET_MARGIN};
use crate::engine::{BoundingBox, Cell, EngineError, Heading, Universe};
use crate::truchet::{edge_corner, principal_contour, tile_geometry, TruchetError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Truchet(#[from] TruchetError),
    #[error("palette has {got} entries, rule has {want} states")]
    PaletteSize { got: usize, want: usize },
    #[error("palette must be strictly decreasing from state 1 (lightest) to state n (darkest)")]
    PaletteOrder,
}

/// Grey level per state, `greys[k - 1]` for state `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Palette {
    greys: Vec<u8>,
}

impl Palette {
    /// Evenly spaced greys, white for state 1 down to black for state `n`.
    pub fn evenly_spaced(n: usize) -> Self {
        let greys = if n <= 1 {
            vec![255]
        } else {
            (0..n)
                .map(|k| ((255 * (n - 1 - k) + (n - 1) / 2) / (n - 1)) as u8)
                .collect()
        };
        Palette { greys }
    }

    pub fn new(greys: Vec<u8>) -> Result<Self, RenderError> {
        if greys.windows(2).any(|w| w[0] <= w[1]) {
            return Err(RenderError::PaletteOrder);
        }
        Ok(Palette { greys })
    }

    pub fn grey(&self, state: u8) -> u8 {
        self.greys[usize::from(state) - 1]
    }

    pub fn len(&self) -> usize {
        self.greys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.greys.is_empty()
    }
}

/// An RGB raster, rows top to bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pixmap {
    pub width: u32,
    pub height: u32,
    pub pixels: Vec<[u8; 3]>,
}

impl Pixmap {
    /// Plain-text portable pixmap, one pixel per line.
    pub fn to_p3(&self) -> String {
        let mut out = String::with_capacity(self.pixels.len() * 12 + 32);
        let _ = write!(out, "P3\n{} {}\n255\n", self.width, self.height);
        for [r, g, b] in &self.pixels {
            let _ = writeln!(out, "{r} {g} {b}");
        }
        out
    }

    /// RGBA bytes for an HTML canvas.
    pub fn to_rgba(&self) -> Vec<u8> {
        self.pixels
            .iter()
            .flat_map(|&[r, g, b]| [r, g, b, 255])
            .collect()
    }
}

/// One `scale × scale` block per cell of the track's bounding box.
pub fn render_states(u: &Universe, palette: &Palette, scale: u32) -> Result<Pixmap, RenderError> {
    if palette.len() != u.rule().n() {
        return Err(RenderError::PaletteSize {
            got: palette.len(),
            want: u.rule().n(),
        });
    }
    let bb = u.bounding_box()?;
    let scale = scale.max(1);
    let width = bb.width() as u32 * scale;
    let height = bb.height() as u32 * scale;
    let mut pixels = Vec::with_capacity((width * height) as usize);
    for y in (bb.min_y..=bb.max_y).rev() {
        let row: Vec<[u8; 3]> = (bb.min_x..=bb.max_x)
            .flat_map(|x| {
                let c = Cell::new(x, y);
                let rgb = if u.is_visited(c) {
                    let g = palette.grey(u.state(c));
                    [g, g, g]
                } else {
                    BACKGROUND_RGB
                };
                std::iter::repeat_n(rgb, scale as usize)
            })
            .collect();
        for _ in 0..scale {
            pixels.extend_from_slice(&row);
        }
    }
    Ok(Pixmap {
        width,
        height,
        pixels,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruchetStyle {
    pub diagonals: bool,
    pub highlight_principal: bool,
    pub margin: i64,
}

impl Default for TruchetStyle {
    fn default() -> Self {
        TruchetStyle {
            diagonals: false,
            highlight_principal: false,
            margin: DEFAULT_TRUCHET_MARGIN,
        }
    }
}

/// Cells drawn by [`render_truchet`]: the track and the home edge's two
/// cells, grown by `margin`, and widened to hold the principal contour when
/// it is highlighted.
pub fn truchet_region(u: &Universe, style: &TruchetStyle) -> Result<BoundingBox, RenderError> {
    let mut bb = BoundingBox::of_cell(Cell::new(0, 0));
    bb.include(Cell::new(1, 0));
    for c in u.visited_cells() {
        bb.include(c);
    }
    let mut bb = bb.grown(style.margin.max(0));
    if style.highlight_principal {
        let p = principal_contour(u, DEFAULT_STEP_CAP)?;
        for a in p.arcs() {
            bb.include(a.cell);
        }
    }
    Ok(bb)
}

fn screen(x: i64, y2: i64) -> (f64, f64) {
    (x as f64, -(y2 as f64))
}

fn edge_point(c: Cell, e: Heading) -> (f64, f64) {
    let (x, y) = (c.x as f64, c.y as f64);
    let (mx, my) = match e {
        Heading::N => (x + 0.5, y + 1.0),
        Heading::S => (x + 0.5, y),
        Heading::E => (x + 1.0, y + 0.5),
        Heading::W => (x, y + 0.5),
    };
    (mx, -my)
}

/// SVG with one `<path>` per quarter-circle arc and, optionally, one
/// `<line>` per hot-tile diagonal. The `viewBox` is the drawn region in cell
/// units.
pub fn render_truchet(u: &Universe, style: &TruchetStyle) -> Result<String, RenderError> {
    let region = truchet_region(u, style)?;
    let heat = if style.diagonals {
        Some(u.rule().heat().map_err(TruchetError::from)?)
    } else {
        None
    };
    let principal: FxHashSet<_> = if style.highlight_principal {
        principal_contour(u, DEFAULT_STEP_CAP)?
            .arcs()
            .iter()
            .map(|a| a.undirected())
            .collect()
    } else {
        FxHashSet::default()
    };

    let (vx, vy) = screen(region.min_x, region.max_y + 1);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vx} {vy} {} {}" width="{}" height="{}">"#,
        region.width(),
        region.height(),
        region.width() * 12,
        region.height() * 12,
    );
    out.push_str(
        "<style>path{fill:none;stroke:#222;stroke-width:0.08}path.principal{stroke:#c00;stroke-width:0.16}line{stroke:#2a6;stroke-width:0.06}</style>\n",
    );

    let rule = u.rule();
    for c in region.cells_top_down() {
        let state = u.state(c);
        let (arcs, diagonal) = tile_geometry(c, rule.turn(state));
        for a in arcs {
            let (sx, sy) = edge_point(c, a.entry);
            let (ex, ey) = edge_point(c, a.exit);
            let k = edge_corner(c, a.entry, a.exit);
            let (cx, cy) = (k.x as f64, -(k.y as f64));
            // Screen y points down, so a positive cross product is clockwise.
            let cross = (sx - cx) * (ey - cy) - (sy - cy) * (ex - cx);
            let sweep = u8::from(cross > 0.0);
            let class = if principal.contains(&a.undirected()) {
                r#" class="principal""#
            } else {
                ""
            };
            let _ = writeln!(out, r#"<path{class} d="M{sx} {sy}A0.5 0.5 0 0 {sweep} {ex} {ey}"/>"#);
        }
        if let Some(h) = heat {
            if h.hot(state) {
                let (x1, y1) = screen(diagonal.a.x, diagonal.a.y);
                let (x2, y2) = screen(diagonal.b.x, diagonal.b.y);
                let _ = writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
