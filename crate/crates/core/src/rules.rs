//! Rule-strings: the ant's genome.
//!
//! A rule-string is a cyclic word over `{L, R}`. Letter `k` (1-based) is the
//! turn the ant takes on entering a cell in state `k`. Reading the word in
//! binary with `L = 1`, `R = 0` (most significant bit first) gives the ant's
//! code, so `LR` is ant 2 and `LLRRRLR` is ant 98.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Longest rule-string whose code still fits a `u64`.
pub const MAX_LETTERS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("rule-string is empty")]
    Empty,
    #[error("illegal character {found:?} at position {position} (expected L or R)")]
    IllegalChar { position: usize, found: char },
    #[error("rule-string has {0} letters, at most {MAX_LETTERS} are supported")]
    TooLong(usize),
    #[error("ant code must be positive")]
    ZeroCode,
    #[error("invalid ant code {0:?}")]
    BadCode(String),
    #[error("state {state} is out of range 1..={n}")]
    StateOutOfRange { state: u8, n: usize },
    #[error("rule {0} lacks the even run-length property; hot/cold is undefined")]
    NotEvenRunLength(RuleString),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Turn {
    L,
    R,
}

impl Turn {
    pub fn flipped(self) -> Turn {
        match self {
            Turn::L => Turn::R,
            Turn::R => Turn::L,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Turn::L => 'L',
            Turn::R => 'R',
        }
    }
}

/// An ant's rule-string. States are numbered `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RuleString {
    letters: Vec<Turn>,
    code: u64,
}

impl RuleString {
    pub fn parse(text: &str) -> Result<Self, RuleError> {
        if text.is_empty() {
            return Err(RuleError::Empty);
        }
        let letters = text
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'L' => Ok(Turn::L),
                'R' => Ok(Turn::R),
                found => Err(RuleError::IllegalChar { position: i + 1, found }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_letters(letters)
    }

    pub fn from_letters(letters: Vec<Turn>) -> Result<Self, RuleError> {
        if letters.is_empty() {
            return Err(RuleError::Empty);
        }
        if letters.len() > MAX_LETTERS {
            return Err(RuleError::TooLong(letters.len()));
        }
        let code = letters
            .iter()
            .fold(0u64, |acc, &t| (acc << 1) | u64::from(t == Turn::L));
        Ok(RuleString { letters, code })
    }

    /// Rebuilds the rule-string from its code; the leading 1 bit becomes the
    /// leading `L`.
    pub fn from_code(code: u64) -> Result<Self, RuleError> {
        if code == 0 {
            return Err(RuleError::ZeroCode);
        }
        let bits = 64 - code.leading_zeros() as usize;
        let letters = (0..bits)
            .rev()
            .map(|b| if code >> b & 1 == 1 { Turn::L } else { Turn::R })
            .collect();
        Ok(RuleString { letters, code })
    }

    /// Accepts either letter text (`LLRR`) or a decimal code (`12`).
    pub fn parse_spec(text: &str) -> Result<Self, RuleError> {
        let text = text.trim();
        if !text.is_empty() && text.bytes().all(|b| b.is_ascii_digit()) {
            let code = text
                .parse::<u64>()
                .map_err(|_| RuleError::BadCode(text.to_string()))?;
            Self::from_code(code)
        } else {
            Self::parse(text)
        }
    }

    pub fn letters(&self) -> &[Turn] {
        &self.letters
    }

    pub fn code(&self) -> u64 {
        self.code
    }

    /// Number of states.
    pub fn n(&self) -> usize {
        self.letters.len()
    }

    /// Turn taken in `state` (1-based).
    ///
    /// # Panics
    /// If `state` is outside `1..=n`.
    #[inline]
    pub fn turn(&self, state: u8) -> Turn {
        self.letters[usize::from(state) - 1]
    }

    /// State following `state` when the ant leaves the cell, wrapping `n` to 1.
    #[inline]
    pub fn next_state(&self, state: u8) -> u8 {
        if usize::from(state) >= self.letters.len() {
            1
        } else {
            state + 1
        }
    }

    /// True when no letter is `R`: the ant circles forever.
    pub fn is_degenerate(&self) -> bool {
        self.letters.iter().all(|&t| t == Turn::L)
    }

    pub fn run_structure(&self) -> RunStructure {
        RunStructure::of(&self.letters)
    }

    pub fn has_even_run_length(&self) -> bool {
        self.run_structure().even_run_length
    }

    /// Hot/cold classifier for an even run-length rule.
    pub fn heat(&self) -> Result<Heat, RuleError> {
        Heat::new(self)
    }

    pub fn is_cold(&self, state: u8) -> Result<bool, RuleError> {
        self.heat()?.check_cold(state)
    }

    pub fn is_hot(&self, state: u8) -> Result<bool, RuleError> {
        self.is_cold(state).map(|c| !c)
    }
}

impl fmt::Display for RuleString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.letters {
            write!(f, "{}", t.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for RuleString {
    type Err = RuleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// Maximal runs of equal letters, read cyclically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunStructure {
    /// `(letter, length)` pairs. The first run starts at `start_state`.
    pub cyclic_runs: Vec<(Turn, usize)>,
    /// 1-based state at which the first listed run begins.
    pub start_state: usize,
    pub even_run_length: bool,
}

impl RunStructure {
    fn of(letters: &[Turn]) -> Self {
        let n = letters.len();
        if letters.iter().all(|&t| t == letters[0]) {
            return RunStructure {
                cyclic_runs: vec![(letters[0], n)],
                start_state: 1,
                even_run_length: n.is_multiple_of(2),
            };
        }
        // Rotate so that we start on a run boundary; the final run then never
        // wraps into the first.
        let start = (0..n)
            .find(|&i| letters[i] != letters[(i + n - 1) % n])
            .expect("non-constant word has a boundary");
        let mut runs: Vec<(Turn, usize)> = Vec::new();
        for k in 0..n {
            let t = letters[(start + k) % n];
            match runs.last_mut() {
                Some((last, len)) if *last == t => *len += 1,
                _ => runs.push((t, 1)),
            }
        }
        let even_run_length = runs.iter().all(|&(_, len)| len % 2 == 0);
        RunStructure {
            cyclic_runs: runs,
            start_state: start + 1,
            even_run_length,
        }
    }
}

/// Hot/cold classification of states for an even run-length rule.
///
/// Split every cyclic run into pairs of equal letters. The first state of a
/// pair is cold: its next visit cannot change the turn. The second is hot.
/// Cold states are therefore the odd states when runs begin at odd positions
/// (LLRR), the even states otherwise (LRRL).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Heat {
    cold_parity: u8,
    n: usize,
}

impl Heat {
    pub fn new(rule: &RuleString) -> Result<Self, RuleError> {
        let runs = rule.run_structure();
        if !runs.even_run_length {
            return Err(RuleError::NotEvenRunLength(rule.clone()));
        }
        Ok(Heat {
            cold_parity: (runs.start_state % 2) as u8,
            n: rule.n(),
        })
    }

    /// Unchecked classification for a state already known to be in range.
    #[inline]
    pub fn cold(&self, state: u8) -> bool {
        state % 2 == self.cold_parity
    }

    #[inline]
    pub fn hot(&self, state: u8) -> bool {
        !self.cold(state)
    }

    pub fn check_cold(&self, state: u8) -> Result<bool, RuleError> {
        if state == 0 || usize::from(state) > self.n {
            return Err(RuleError::StateOutOfRange { state, n: self.n });
        }
        Ok(self.cold(state))
    }
}

/// Every code of length `n` (leading `L`) with the even run-length property,
/// ascending, including the all-`L` circler.
pub fn even_run_length_codes(n: usize) -> Vec<u64> {
    assert!((1..=MAX_LETTERS).contains(&n), "length {n} out of range");
    let lo = 1u64 << (n - 1);
    let hi = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (lo..=hi)
        .filter(|&c| {
            RuleString::from_code(c)
                .map(|r| r.has_even_run_length())
                .unwrap_or(false)
        })
        .collect()
}

/// Codes of length `n` expected to show recurrent bilateral symmetry: the even
/// run-length rules, minus the degenerate all-`L` circler.
pub fn recurrent_symmetry_candidates(n: usize) -> Vec<u64> {
    even_run_length_codes(n)
        .into_iter()
        .filter(|&c| c.count_ones() as usize != n)
        .collect()
}
