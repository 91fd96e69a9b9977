//! `ants`: simulate n-state ants, check their symmetry and Truchet
//! structure, and write pictures.
//!
//! Exit status: 0 success, 1 a verification failed, 2 bad usage or input.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use ant_core::behavior::{sweep, unboundedness_probe, Classification, SweepConfig};
use ant_core::config::{
    DEFAULT_HIGHWAY_WINDOW, DEFAULT_PERIOD_CAP, DEFAULT_PIXELS_PER_CELL, DEFAULT_STEP_CAP,
    DEFAULT_SYMMETRIC_RETURNS, DEFAULT_TRUCHET_MARGIN,
};
use ant_core::render::{render_states, render_truchet, truchet_region, Palette, TruchetStyle};
use ant_core::symmetry::{symmetry_scan, Sampling};
use ant_core::truchet::{contours_through, diagonals_graph, principal_contour, run_tour, TruchetError};
use ant_core::{snapshot, RuleString, Universe};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "ants", version, about = "Generalized Langton's ants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Rule-string (`LLRR`) or decimal code (`12`).
    #[arg(long, value_parser = parse_rule)]
    rule: Option<RuleString>,
    /// Decimal ant code.
    #[arg(long, value_parser = parse_code)]
    code: Option<RuleString>,
    /// Continue from a saved snapshot.
    #[arg(long, value_name = "FILE")]
    from: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Simulate and print or save the resulting snapshot.
    Run {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        steps: u64,
        /// Write the snapshot here instead of standard output.
        #[arg(long, value_name = "FILE")]
        snapshot: Option<PathBuf>,
    },
    /// List times at which the track is symmetric: `t kind anchorX anchorY`.
    Symmetry {
        #[arg(long, value_parser = parse_rule)]
        rule: RuleString,
        #[arg(long)]
        horizon: u64,
        /// Sample only home returns.
        #[arg(long)]
        on_return: bool,
        /// Also try diagonal mirrors when the bounding box is square.
        #[arg(long)]
        diagonals: bool,
    },
    /// Dump Truchet contours (`x y entryEdge exitEdge` per arc) of a snapshot.
    Contours {
        #[arg(long, value_name = "FILE")]
        snapshot: PathBuf,
        /// Only the contour through the home edge.
        #[arg(long)]
        principal: bool,
        /// Also list hot-tile diagonals as `x1 y1 x2 y2`.
        #[arg(long)]
        diagonals: bool,
        #[arg(long, default_value_t = DEFAULT_STEP_CAP)]
        cap: u64,
    },
    /// Check contour following, the no-switch rule and even diagonal degree
    /// over consecutive home-to-home tours.
    Verify {
        #[arg(long, value_parser = parse_rule)]
        rule: RuleString,
        #[arg(long)]
        returns: usize,
        /// Step cap for a single tour.
        #[arg(long, default_value_t = DEFAULT_STEP_CAP)]
        cap: u64,
    },
    /// Classify every rule of a given length.
    Sweep {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        horizon: u64,
        /// Symmetric home returns in the second half of the run needed for
        /// `recurrentSymmetry`.
        #[arg(long, default_value_t = DEFAULT_SYMMETRIC_RETURNS)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_HIGHWAY_WINDOW)]
        window: u32,
        #[arg(long, default_value_t = DEFAULT_PERIOD_CAP)]
        period_cap: u64,
    },
    /// Draw a snapshot as a P3 pixmap (`states`) or SVG (`truchet`, `diagonals`).
    Render {
        #[arg(long, value_name = "FILE")]
        snapshot: PathBuf,
        #[arg(long, value_enum)]
        style: Style,
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
        /// Pixels per cell for `states`.
        #[arg(long, default_value_t = DEFAULT_PIXELS_PER_CELL)]
        scale: u32,
        /// Stroke the principal contour; the ant must be home.
        #[arg(long)]
        principal: bool,
        #[arg(long, default_value_t = DEFAULT_TRUCHET_MARGIN)]
        margin: i64,
    },
    /// First time the track reaches each radius.
    Probe {
        #[arg(long, value_parser = parse_rule)]
        rule: RuleString,
        #[arg(long, value_delimiter = ',', required = true)]
        radii: Vec<u64>,
        #[arg(long)]
        horizon: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Style {
    States,
    Truchet,
    Diagonals,
}

fn parse_rule(s: &str) -> Result<RuleString, String> {
    RuleString::parse_spec(s).map_err(|e| e.to_string())
}

fn parse_code(s: &str) -> Result<RuleString, String> {
    let code: u64 = s.parse().map_err(|_| format!("not a decimal code: {s:?}"))?;
    RuleString::from_code(code).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl Failure {
    fn usage(e: impl std::fmt::Display) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("ants: verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("ants: {msg}");
            ExitCode::from(2)
        }
    }
}

fn execute(command: Command) -> Outcome {
    match command {
        Command::Run {
            source,
            steps,
            snapshot,
        } => run(source, steps, snapshot),
        Command::Symmetry {
            rule,
            horizon,
            on_return,
            diagonals,
        } => symmetry(&rule, horizon, on_return, diagonals),
        Command::Contours {
            snapshot,
            principal,
            diagonals,
            cap,
        } => contours(&snapshot, principal, diagonals, cap),
        Command::Verify { rule, returns, cap } => verify(&rule, returns, cap),
        Command::Sweep {
            length,
            horizon,
            k,
            window,
            period_cap,
        } => sweep_report(
            length,
            SweepConfig {
                horizon,
                k,
                window,
                period_cap,
            },
        ),
        Command::Render {
            snapshot,
            style,
            out,
            scale,
            principal,
            margin,
        } => render(&snapshot, style, &out, scale, principal, margin),
        Command::Probe {
            rule,
            radii,
            horizon,
        } => probe(&rule, &radii, horizon),
    }
}

fn load(path: &Path) -> Result<Universe, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    snapshot::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn save(path: &Path, contents: &str) -> Outcome {
    fs::write(path, contents)
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn run(source: Source, steps: u64, out: Option<PathBuf>) -> Outcome {
    let mut u = match (source.rule.or(source.code), source.from) {
        (Some(rule), None) => Universe::new(rule),
        (None, Some(path)) => load(&path)?,
        _ => unreachable!("clap enforces exactly one source"),
    };
    u.run(steps);
    let text = snapshot::to_string(&u);
    match out {
        Some(path) => {
            save(&path, &text)?;
            let p = u.pose();
            println!(
                "time={} pose={} {} {} home={} visited={}",
                u.time(),
                p.target.x,
                p.target.y,
                p.heading,
                u.is_home(),
                u.visited_count()
            );
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn symmetry(rule: &RuleString, horizon: u64, on_return: bool, diagonals: bool) -> Outcome {
    let sampling = if on_return {
        Sampling::HomeReturn
    } else {
        Sampling::EveryStep
    };
    println!(
        "# symmetry rule={rule} code={} horizon={horizon} sampling={} diagonals={diagonals}",
        rule.code(),
        if on_return { "home-return" } else { "every-step" },
    );
    let mut out = String::new();
    for report in symmetry_scan(rule, horizon, sampling, diagonals) {
        for iso in &report.found {
            let _ = writeln!(out, "{} {iso}", report.time);
        }
    }
    print!("{out}");
    Ok(())
}

fn contours(path: &Path, principal: bool, diagonals: bool, cap: u64) -> Outcome {
    let u = load(path)?;
    let list = if principal {
        vec![principal_contour(&u, cap).map_err(Failure::usage)?]
    } else {
        let style = TruchetStyle {
            margin: 0,
            ..TruchetStyle::default()
        };
        let region = truchet_region(&u, &style).map_err(Failure::usage)?;
        contours_through(&u, region, cap).map_err(Failure::usage)?
    };
    let mut out = String::new();
    let _ = writeln!(out, "# contours time={} count={}", u.time(), list.len());
    for (i, c) in list.iter().enumerate() {
        let twice: Vec<String> = c
            .twice_visited_cells()
            .iter()
            .map(|c| format!("{},{}", c.x, c.y))
            .collect();
        let _ = writeln!(
            out,
            "contour {i} arcs={} twice={}",
            c.len(),
            if twice.is_empty() { "-".into() } else { twice.join(";") }
        );
        for a in c.arcs() {
            let _ = writeln!(out, "{} {} {} {}", a.cell.x, a.cell.y, a.entry, a.exit);
        }
    }
    if diagonals {
        let g = diagonals_graph(&u).map_err(Failure::usage)?;
        let _ = writeln!(
            out,
            "# diagonals edges={} components={} evenDegree={}",
            g.edge_count(),
            g.components().count(),
            g.even_degree_holds()
        );
        for d in g.edges() {
            let _ = writeln!(out, "{} {} {} {}", d.a.x, d.a.y, d.b.x, d.b.y);
        }
    }
    print!("{out}");
    Ok(())
}

fn verify(rule: &RuleString, returns: usize, cap: u64) -> Outcome {
    let even = rule.has_even_run_length();
    println!(
        "# verify rule={rule} code={} returns={returns} cap={cap} evenRunLength={even}",
        rule.code()
    );
    let mut u = Universe::new(rule.clone());
    let mut failed = 0;
    let flag = |b: Option<bool>| match b {
        Some(b) => b.to_string(),
        None => "n/a".to_string(),
    };
    for i in 1..=returns {
        let r = match run_tour(&mut u, cap) {
            Ok(r) => r,
            Err(e @ TruchetError::NoReturn { .. }) => {
                return Err(Failure::Verification(format!("tour {i}: {e}")))
            }
            Err(e) => return Err(Failure::usage(e)),
        };
        let property1 = even.then(|| r.property1_holds());
        println!(
            "tour {i} start={} return={} arcs={} lemma1={} property1={} evenBefore={} evenAfter={}",
            r.start_time,
            r.return_time,
            r.contour_len,
            r.follows_principal,
            flag(property1),
            flag(r.even_before),
            flag(r.even_after),
        );
        if !r.all_pass() {
            failed += 1;
        }
    }
    if failed > 0 {
        return Err(Failure::Verification(format!("{failed} of {returns} tours")));
    }
    println!("# all {returns} tours pass");
    Ok(())
}

fn sweep_report(length: usize, cfg: SweepConfig) -> Outcome {
    if !(2..=12).contains(&length) {
        return Err(Failure::Usage(format!("--length must be in 2..=12, got {length}")));
    }
    println!(
        "# sweep length={length} horizon={} k={} window={} periodCap={}",
        cfg.horizon, cfg.k, cfg.window, cfg.period_cap
    );
    let rows = sweep(length, &cfg);
    for r in &rows {
        println!("{}", r.to_line());
    }
    let recurrent: Vec<String> = rows
        .iter()
        .filter(|r| r.classification == Classification::RecurrentSymmetry)
        .map(|r| r.code.to_string())
        .collect();
    println!("# recurrentSymmetry {}", recurrent.join(","));
    Ok(())
}

fn render(path: &Path, style: Style, out: &Path, scale: u32, principal: bool, margin: i64) -> Outcome {
    if principal && style == Style::States {
        return Err(Failure::Usage("--principal needs a Truchet style".into()));
    }
    let u = load(path)?;
    let text = match style {
        Style::States => render_states(&u, &Palette::evenly_spaced(u.rule().n()), scale)
            .map_err(Failure::usage)?
            .to_p3(),
        Style::Truchet | Style::Diagonals => {
            let style = TruchetStyle {
                diagonals: style == Style::Diagonals,
                highlight_principal: principal,
                margin,
            };
            render_truchet(&u, &style).map_err(Failure::usage)?
        }
    };
    save(out, &text)
}

fn probe(rule: &RuleString, radii: &[u64], horizon: u64) -> Outcome {
    if radii.windows(2).any(|w| w[0] > w[1]) {
        return Err(Failure::Usage("--radii must be ascending".into()));
    }
    println!("# probe rule={rule} code={} horizon={horizon}", rule.code());
    for (r, t) in unboundedness_probe(rule, radii, horizon) {
        match t {
            Some(t) => println!("{r} {t}"),
            None => println!("{r} none"),
        }
    }
    Ok(())
}
