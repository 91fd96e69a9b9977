//! Long-run behavior: highways, escape from balls, and rule sweeps.

use std::fmt;

use crate::config::{
    DEFAULT_HIGHWAY_WINDOW, DEFAULT_PERIOD_CAP, DEFAULT_SYMMETRIC_RETURNS, HIGHWAY_MIN_PERIODS,
};
use crate::engine::{AntPose, Cell, Universe};
use crate::rules::RuleString;
use crate::symmetry::detect_symmetries;
use crate::truchet::even_degree_holds;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HighwayReport {
    pub detected: bool,
    pub onset_time: u64,
    pub period: u64,
    /// Translation of the ant per period.
    pub displacement: (i64, i64),
}

impl HighwayReport {
    const NONE: HighwayReport = HighwayReport {
        detected: false,
        onset_time: 0,
        period: 0,
        displacement: (0, 0),
    };
}

/// Records, at every time step, the ant's pose and the states in a square
/// window around the cell it is about to enter.
#[derive(Debug, Clone)]
pub struct HighwayTracker {
    radius: i64,
    side: usize,
    poses: Vec<AntPose>,
    windows: Vec<u8>,
}

impl HighwayTracker {
    pub fn new(radius: u32) -> Self {
        let radius = i64::from(radius.max(1));
        let side = (2 * radius + 1) as usize;
        HighwayTracker {
            radius,
            side,
            poses: Vec::new(),
            windows: Vec::new(),
        }
    }

    /// Call once per time step, starting at the universe's current time.
    pub fn record(&mut self, u: &Universe) {
        let pose = u.pose();
        self.poses.push(pose);
        let Cell { x, y } = pose.target;
        for dy in -self.radius..=self.radius {
            for dx in -self.radius..=self.radius {
                self.windows.push(u.state(Cell::new(x + dx, y + dy)));
            }
        }
    }

    fn window(&self, t: usize) -> &[u8] {
        let w = self.side * self.side;
        &self.windows[t * w..(t + 1) * w]
    }

    fn repeats(&self, t: usize, p: usize, d: (i64, i64)) -> bool {
        let (a, b) = (self.poses[t], self.poses[t + p]);
        a.heading == b.heading
            && (b.target.x - a.target.x, b.target.y - a.target.y) == d
            && self.window(t) == self.window(t + p)
    }

    /// Least period `p ≤ period_cap` whose pattern holds from some onset up
    /// to the last recorded step, over at least [`HIGHWAY_MIN_PERIODS`]
    /// periods, with nonzero displacement. `time0` is the universe time of
    /// the first record.
    pub fn finish(&self, time0: u64, period_cap: u64) -> HighwayReport {
        let last = match self.poses.len().checked_sub(1) {
            Some(l) => l,
            None => return HighwayReport::NONE,
        };
        for p in 1..=(period_cap as usize).min(last) {
            let (a, b) = (self.poses[last - p].target, self.poses[last].target);
            let d = (b.x - a.x, b.y - a.y);
            if d == (0, 0) {
                continue;
            }
            let mut onset = last - p + 1;
            while onset > 0 && self.repeats(onset - 1, p, d) {
                onset -= 1;
            }
            if onset <= last - p && (last - onset) as u64 >= HIGHWAY_MIN_PERIODS * p as u64 {
                return HighwayReport {
                    detected: true,
                    onset_time: time0 + onset as u64,
                    period: p as u64,
                    displacement: d,
                };
            }
        }
        HighwayReport::NONE
    }
}

/// Runs `rule` from scratch for `horizon` steps and looks for a highway.
pub fn detect_highway(rule: &RuleString, horizon: u64, window: u32, period_cap: u64) -> HighwayReport {
    let mut u = Universe::new(rule.clone());
    let mut tracker = HighwayTracker::new(window);
    tracker.record(&u);
    for _ in 0..horizon {
        u.step();
        tracker.record(&u);
    }
    tracker.finish(0, period_cap)
}

/// For each radius (ascending), the first time a visited cell lies at
/// Chebyshev distance `≥ r` from the home cell, or `None` within `horizon`.
pub fn unboundedness_probe(rule: &RuleString, radii: &[u64], horizon: u64) -> Vec<(u64, Option<u64>)> {
    let mut u = Universe::new(rule.clone());
    let mut out: Vec<(u64, Option<u64>)> = radii.iter().map(|&r| (r, None)).collect();
    let mut next = 0;
    let mut reach = 0u64;
    while next < out.len() && u.time() < horizon {
        let m = u.step();
        reach = reach.max(m.cell.x.unsigned_abs().max(m.cell.y.unsigned_abs()));
        while next < out.len() && reach >= out[next].0 {
            out[next].1 = Some(u.time());
            next += 1;
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Highway,
    RecurrentSymmetry,
    /// All-`L` rule: the ant circles its home corner forever.
    Degenerate,
    Undetermined,
}

impl Classification {
    pub fn name(self) -> &'static str {
        match self {
            Classification::Highway => "highway",
            Classification::RecurrentSymmetry => "recurrentSymmetry",
            Classification::Degenerate => "degenerate",
            Classification::Undetermined => "undetermined",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub horizon: u64,
    /// Symmetric home returns in the second half of the horizon needed for
    /// `RecurrentSymmetry`. Early symmetric returns are common and transient.
    pub k: usize,
    pub window: u32,
    pub period_cap: u64,
}

impl SweepConfig {
    pub fn new(horizon: u64) -> Self {
        SweepConfig {
            horizon,
            k: DEFAULT_SYMMETRIC_RETURNS,
            window: DEFAULT_HIGHWAY_WINDOW,
            period_cap: DEFAULT_PERIOD_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub code: u64,
    pub letters: String,
    pub even_run_length: bool,
    pub classification: Classification,
    pub home_returns: usize,
    pub symmetric_returns: usize,
    /// Symmetric home returns after `horizon / 2`.
    pub late_symmetric_returns: usize,
    /// First few symmetric home-return times.
    pub symmetric_times: Vec<u64>,
    pub highway: HighwayReport,
    /// Home returns at which the even diagonal-degree property failed; `None`
    /// for rules without the even run-length property.
    pub even_degree_failures: Option<usize>,
}

impl SweepRow {
    /// Recomputes the classification from the stored evidence.
    pub fn classify(&self, k: usize) -> Classification {
        if self.letters.bytes().all(|b| b == b'L') {
            Classification::Degenerate
        } else if self.late_symmetric_returns >= k {
            Classification::RecurrentSymmetry
        } else if self.highway.detected {
            Classification::Highway
        } else {
            Classification::Undetermined
        }
    }

    /// `code letters evenRunLength classification evidence`
    pub fn to_line(&self) -> String {
        let h = &self.highway;
        let highway = if h.detected {
            format!(
                "highway=onset:{},period:{},disp:{},{}",
                h.onset_time, h.period, h.displacement.0, h.displacement.1
            )
        } else {
            "highway=none".to_string()
        };
        let times: Vec<String> = self.symmetric_times.iter().map(u64::to_string).collect();
        let even = match self.even_degree_failures {
            Some(n) => format!(" evenDegreeFailures={n}"),
            None => String::new(),
        };
        format!(
            "{} {} {} {} returns={} symmetric={} late={} times={} {}{}",
            self.code,
            self.letters,
            self.even_run_length,
            self.classification,
            self.home_returns,
            self.symmetric_returns,
            self.late_symmetric_returns,
            if times.is_empty() { "-".to_string() } else { times.join(",") },
            highway,
            even,
        )
    }
}

const SYMMETRIC_TIMES_KEPT: usize = 8;

pub fn sweep_rule(rule: &RuleString, cfg: &SweepConfig) -> SweepRow {
    let even_run_length = rule.has_even_run_length();
    let mut u = Universe::new(rule.clone());
    let mut tracker = HighwayTracker::new(cfg.window);
    tracker.record(&u);
    let mut home_returns = 0;
    let mut symmetric_times = Vec::new();
    let mut symmetric_returns = 0;
    let mut late_symmetric_returns = 0;
    let half = cfg.horizon / 2;
    let mut even_failures = even_run_length.then_some(0usize);
    for _ in 0..cfg.horizon {
        u.step();
        tracker.record(&u);
        if !u.is_home() {
            continue;
        }
        home_returns += 1;
        let report = detect_symmetries(&u, false).expect("nonempty track");
        if report.has_mirror() {
            symmetric_returns += 1;
            if u.time() > half {
                late_symmetric_returns += 1;
            }
            if symmetric_times.len() < SYMMETRIC_TIMES_KEPT {
                symmetric_times.push(u.time());
            }
        }
        if let Some(f) = even_failures.as_mut() {
            if !even_degree_holds(&u).unwrap_or(false) {
                *f += 1;
            }
        }
    }
    let mut row = SweepRow {
        code: rule.code(),
        letters: rule.to_string(),
        even_run_length,
        classification: Classification::Undetermined,
        home_returns,
        symmetric_returns,
        late_symmetric_returns,
        symmetric_times,
        highway: tracker.finish(0, cfg.period_cap),
        even_degree_failures: even_failures,
    };
    row.classification = row.classify(cfg.k);
    row
}

/// Every rule of length `n` starting with `L`, ascending by code.
pub fn sweep(n: usize, cfg: &SweepConfig) -> Vec<SweepRow> {
    assert!((1..=32).contains(&n), "sweep length {n} out of range");
    let codes: Vec<u64> = ((1u64 << (n - 1))..(1u64 << n)).collect();
    let run = |&code: &u64| sweep_rule(&RuleString::from_code(code).expect("nonzero"), cfg);
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        codes.par_iter().map(run).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        codes.iter().map(run).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rule(code: u64) -> RuleString {
        RuleString::from_code(code).unwrap()
    }

    #[test]
    fn circler_is_not_a_highway() {
        let r = detect_highway(&RuleString::parse("L").unwrap(), 2_000, 2, 100);
        assert!(!r.detected);
    }

    #[test]
    fn probe_radius_zero_escapes_at_first_step() {
        let p = unboundedness_probe(&rule(2), &[0, 5], 1_000);
        assert_eq!(p[0], (0, Some(1)));
        assert!(p[1].1.unwrap() < 1_000);
    }

    #[test]
    fn probe_horizon_reached() {
        let p = unboundedness_probe(&rule(3), &[0, 3], 500);
        assert_eq!(p, vec![(0, Some(1)), (3, None)]);
    }

    #[test]
    fn n2_sweep() {
        let rows = sweep(2, &SweepConfig::new(15_000));
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].code, 2);
        assert_eq!(rows[0].classification, Classification::Highway);
        assert_eq!(rows[1].code, 3);
        assert_eq!(rows[1].classification, Classification::Degenerate);
        for r in &rows {
            assert_eq!(r.classify(DEFAULT_SYMMETRIC_RETURNS), r.classification);
        }
    }
}
