//! Plain-Rust state behind the browser bindings, testable off the browser.

use ant_core::config::DEFAULT_STEP_CAP;
use ant_core::render::{render_states, render_truchet, Palette, Pixmap, TruchetStyle};
use ant_core::symmetry::{detect_symmetries, symmetry_scan, Sampling};
use ant_core::{RuleString, Universe};

/// Largest number of cells on a side we will rasterize for the canvas.
const MAX_RASTER_SIDE: u64 = 1_024;

pub struct Demo {
    universe: Universe,
    palette: Palette,
}

impl Demo {
    pub fn new(rule: &str) -> Result<Demo, String> {
        let rule = RuleString::parse_spec(rule).map_err(|e| e.to_string())?;
        let palette = Palette::evenly_spaced(rule.n());
        Ok(Demo {
            universe: Universe::new(rule),
            palette,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn step(&mut self, n: u32) {
        self.universe.run(u64::from(n));
    }

    /// Advances to the next home return, if one comes within `cap` steps.
    pub fn next_home(&mut self, cap: u32) -> bool {
        let mut probe = self.universe.clone();
        match probe.run_to_home(u64::from(cap)) {
            Some(_) => {
                self.universe = probe;
                true
            }
            None => false,
        }
    }

    /// Cell-state raster of the track, or `None` before the first step.
    pub fn raster(&self, scale: u32) -> Option<Pixmap> {
        let bb = self.universe.bounding_box().ok()?;
        let scale = if bb.diameter() * u64::from(scale) > MAX_RASTER_SIDE {
            (MAX_RASTER_SIDE / bb.diameter()).max(1) as u32
        } else {
            scale
        };
        render_states(&self.universe, &self.palette, scale).ok()
    }

    pub fn truchet_svg(&self, diagonals: bool, highlight: bool) -> Result<String, String> {
        let style = TruchetStyle {
            diagonals,
            highlight_principal: highlight && self.universe.is_home(),
            ..TruchetStyle::default()
        };
        render_truchet(&self.universe, &style).map_err(|e| e.to_string())
    }

    /// Symmetries of the current configuration, one per line.
    pub fn symmetries(&self) -> String {
        match detect_symmetries(&self.universe, false) {
            Ok(r) => r.found.iter().map(|i| format!("{i}\n")).collect(),
            Err(_) => String::new(),
        }
    }

    pub fn contour_summary(&self) -> String {
        if !self.universe.is_home() {
            return "ant is away from home".to_string();
        }
        match ant_core::truchet::principal_contour(&self.universe, DEFAULT_STEP_CAP) {
            Ok(c) => format!(
                "principal contour: {} arcs, {} twice-visited cells",
                c.len(),
                c.twice_visited_cells().len()
            ),
            Err(e) => e.to_string(),
        }
    }
}

/// `t kind anchorX anchorY` lines for every symmetric sampled time.
pub fn scan(rule: &str, horizon: u32, on_return: bool) -> Result<String, String> {
    let rule = RuleString::parse_spec(rule).map_err(|e| e.to_string())?;
    let sampling = if on_return {
        Sampling::HomeReturn
    } else {
        Sampling::EveryStep
    };
    let mut out = String::new();
    for r in symmetry_scan(&rule, u64::from(horizon), sampling, false) {
        for iso in &r.found {
            out.push_str(&format!("{} {iso}\n", r.time));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stepping_and_raster() {
        let mut d = Demo::new("LR").unwrap();
        assert!(d.raster(4).is_none());
        d.step(10);
        let p = d.raster(4).unwrap();
        assert_eq!(p.to_rgba().len() as u32, p.width * p.height * 4);
    }

    #[test]
    fn home_hopping() {
        let mut d = Demo::new("12").unwrap();
        assert!(d.next_home(100));
        assert_eq!(d.universe().time(), 4);
        assert!(d.next_home(100));
        assert_eq!(d.universe().time(), 8);
        assert!(d.symmetries().contains("mirror-vertical"));
        assert!(d.contour_summary().starts_with("principal contour"));
        let svg = d.truchet_svg(true, true).unwrap();
        assert!(svg.contains("principal"));
    }

    #[test]
    fn bad_rule() {
        assert!(Demo::new("LXR").is_err());
        assert!(scan("", 10, true).is_err());
    }

    #[test]
    fn scan_lists_ant12_returns() {
        let s = scan("LLRR", 40, true).unwrap();
        for t in ["4 ", "8 ", "28 ", "32 "] {
            assert!(s.lines().any(|l| l.starts_with(t)), "{t}");
        }
    }
}
