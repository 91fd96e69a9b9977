//! Line-oriented text snapshots of a [`Universe`].
//!
//! ```text
//! ANTSNAP 1
//! LLRR
//! 4
//! 0 0 W
//! 0 -1 2 1
//! ...
//! ```
//!
//! Line 4 is the pose (`x y heading` of the cell about to be entered). Each
//! following line is `x y state visited` for a cell whose state is not 1 or
//! that has been visited, sorted by `(x, y)`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::engine::{AntPose, Cell, Heading, Universe};
use crate::rules::{RuleError, RuleString};

pub const MAGIC: &str = "ANTSNAP 1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SnapshotError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line 2: {0}")]
    Rule(#[from] RuleError),
    #[error("unexpected end of snapshot (missing {0})")]
    Truncated(&'static str),
}

fn syntax(line: usize, msg: impl Into<String>) -> SnapshotError {
    SnapshotError::Syntax {
        line,
        msg: msg.into(),
    }
}

pub fn to_string(u: &Universe) -> String {
    let mut out = String::new();
    let pose = u.pose();
    let _ = writeln!(out, "{MAGIC}");
    let _ = writeln!(out, "{}", u.rule());
    let _ = writeln!(out, "{}", u.time());
    let _ = writeln!(out, "{} {} {}", pose.target.x, pose.target.y, pose.heading);
    for (c, state, visited) in u.sorted_cells() {
        let _ = writeln!(out, "{} {} {} {}", c.x, c.y, state, u8::from(visited));
    }
    out
}

pub fn from_str(text: &str) -> Result<Universe, SnapshotError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end()));

    let (n, magic) = lines.next().ok_or(SnapshotError::Truncated("header"))?;
    if magic != MAGIC {
        return Err(syntax(n, format!("expected {MAGIC:?}, found {magic:?}")));
    }
    let (_, rule) = lines.next().ok_or(SnapshotError::Truncated("rule"))?;
    let rule = RuleString::parse(rule)?;
    let (n, time) = lines.next().ok_or(SnapshotError::Truncated("time"))?;
    let time: u64 = time
        .parse()
        .map_err(|_| syntax(n, format!("bad time {time:?}")))?;

    let (n, pose) = lines.next().ok_or(SnapshotError::Truncated("pose"))?;
    let fields: Vec<&str> = pose.split_whitespace().collect();
    let [x, y, h] = fields[..] else {
        return Err(syntax(n, "pose needs `x y heading`"));
    };
    let heading = match h.chars().collect::<Vec<_>>()[..] {
        [c] => Heading::from_char(c),
        _ => None,
    }
    .ok_or_else(|| syntax(n, format!("bad heading {h:?}")))?;
    let target = Cell::new(parse_coord(n, x)?, parse_coord(n, y)?);

    let mut u = Universe::new(rule);
    u.set_pose(AntPose::new(target, heading));
    u.set_time(time);

    let mut seen = rustc_hash::FxHashSet::default();
    for (n, line) in lines {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [x, y, s, v] = fields[..] else {
            return Err(syntax(n, "cell line needs `x y state visited`"));
        };
        let c = Cell::new(parse_coord(n, x)?, parse_coord(n, y)?);
        if !seen.insert(c) {
            return Err(syntax(n, format!("duplicate cell {c}")));
        }
        let state: u8 = s
            .parse()
            .map_err(|_| syntax(n, format!("bad state {s:?}")))?;
        u.set_state(c, state).map_err(|e| syntax(n, e.to_string()))?;
        match v {
            "1" => u.mark_visited(c),
            "0" => {}
            _ => return Err(syntax(n, format!("visited flag must be 0 or 1, found {v:?}"))),
        }
    }
    Ok(u)
}

fn parse_coord(line: usize, s: &str) -> Result<i64, SnapshotError> {
    s.parse()
        .map_err(|_| syntax(line, format!("bad coordinate {s:?}")))
}
