use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use wallcross_core::chern::{ChernCharacter, StabilityPoint};
use wallcross_core::lambdawalls::{self, PlotRequest, WallId};
use wallcross_core::rational::{parse_rational, Rational};
use wallcross_core::{chow, idealsuite, tiltwalls};

#[derive(Parser)]
#[command(name = "wallcross", version, about = "Exact wall-crossing checks for skew lines in P3")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate tilt destabilizers along a vertical ray and their walls
    TiltWall {
        #[arg(long, allow_hyphen_values = true)]
        chern: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-2")]
        beta0: i64,
        #[arg(long, default_value_t = 10)]
        rank_bound: u32,
    },
    /// Evaluate the two lambda-walls and the chamber at a point
    Lambda {
        #[arg(long, allow_hyphen_values = true, default_value = "1,0,-2,2")]
        chern: String,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        /// point as "alpha,beta"
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Sample the walls and write CSV (and optionally SVG)
    Plot {
        #[arg(long, allow_hyphen_values = true, default_value = "1,0,-2,2")]
        chern: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1/3")]
        s: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-4")]
        beta_min: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-1")]
        beta_max: String,
        #[arg(long, default_value_t = 61)]
        samples: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "-2")]
        beta0: i64,
        /// CSV destination; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run an ideal-limit verification manifest
    Ideals {
        /// "paper" for the built-in suite, otherwise a manifest path
        #[arg(long, default_value = "paper")]
        suite: String,
    },
    /// Chow ring and cone computations on the Hilbert scheme component
    Chow {
        #[arg(value_enum)]
        which: ChowCommand,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ChowCommand {
    Todd,
    C1e,
    Mori,
}

struct Outcome {
    output: String,
    verified: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, verified: true }
    }
}

type CliResult = Result<Outcome, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            if outcome.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> CliResult {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::TiltWall { chern, beta0, rank_bound } => tilt_wall(chern, *beta0, *rank_bound, json),
        Command::Lambda { chern, s, at } => lambda(chern, s, at, json),
        Command::Plot { chern, s, beta_min, beta_max, samples, beta0, out, svg } => {
            let req = PlotRequest {
                class: parse_chern(chern)?,
                beta0: Rational::from_integer((*beta0).into()),
                s: parse_positive_s(s)?,
                beta_min: parse_rat(beta_min, "--beta-min")?,
                beta_max: parse_rat(beta_max, "--beta-max")?,
                samples: *samples,
            };
            plot(&req, out.as_ref(), svg.as_ref(), json)
        }
        Command::Ideals { suite } => ideals(suite, json),
        Command::Chow { which } => Ok(Outcome::ok(chow_cmd(*which, json))),
    }
}

fn parse_chern(text: &str) -> Result<ChernCharacter, String> {
    text.parse().map_err(|e| format!("--chern {text:?}: {e}"))
}

fn parse_rat(text: &str, flag: &str) -> Result<Rational, String> {
    parse_rational(text.trim()).ok_or_else(|| format!("{flag} {text:?} is not a rational number"))
}

fn parse_positive_s(text: &str) -> Result<Rational, String> {
    let s = parse_rat(text, "--s")?;
    if s <= Rational::from_integer(0.into()) {
        return Err(format!("--s {text}: s>0 is required"));
    }
    Ok(s)
}

fn to_json(v: &Value) -> String {
    let mut out = serde_json::to_string_pretty(v).expect("json values always serialize");
    out.push('\n');
    out
}

fn tilt_wall(chern: &str, beta0: i64, rank_bound: u32, json: bool) -> CliResult {
    let v = parse_chern(chern)?;
    let b0 = Rational::from_integer(beta0.into());
    let found = tiltwalls::enumerate_destabilizers(&v, &b0, rank_bound).map_err(|e| e.to_string())?;
    let mut rows = Vec::new();
    for cand in &found {
        let wall = cand.wall().map_err(|e| e.to_string())?;
        rows.push((cand, cand.candidate.untwist(&b0), cand.complement.untwist(&b0), wall));
    }
    if json {
        let items: Vec<Value> = rows
            .iter()
            .map(|(cand, f, g, wall)| {
                json!({
                    "candidate": cand.candidate,
                    "complement": cand.complement,
                    "subobject": f,
                    "quotient": g,
                    "wall": wall,
                })
            })
            .collect();
        let doc = json!({
            "chern": v,
            "beta0": beta0,
            "rank_bound": rank_bound,
            "candidates": items,
        });
        return Ok(Outcome::ok(to_json(&doc)));
    }
    let mut out = format!("class {v} along beta = {beta0}, |rank| <= {rank_bound}\n");
    if rows.is_empty() {
        out.push_str("no candidates\n");
    }
    for (i, (cand, f, g, wall)) in rows.iter().enumerate() {
        let (a, b) = (&cand.candidate, &cand.complement);
        out.push_str(&format!(
            "pair {}: twisted ({}, {}, {}) + ({}, {}, {})\n  subobject ch = ({f})\n  quotient ch = ({g})\n  wall: {wall}\n",
            i + 1,
            a.r,
            a.c,
            a.d,
            b.r,
            b.c,
            b.d
        ));
    }
    Ok(Outcome::ok(out))
}

fn lambda(chern: &str, s: &str, at: &str, json: bool) -> CliResult {
    let v = parse_chern(chern)?;
    let s = parse_positive_s(s)?;
    let (alpha, beta) = at
        .split_once(',')
        .ok_or_else(|| format!("--at {at:?}: expected \"alpha,beta\""))?;
    let alpha = parse_rat(alpha, "--at alpha")?;
    let beta = parse_rat(beta, "--at beta")?;
    let p = StabilityPoint::new(alpha, beta)
        .and_then(|p| p.with_s(s.clone()))
        .map_err(|e| e.to_string())?;

    let mut walls = Vec::new();
    for id in [WallId::W1, WallId::W2] {
        let w = lambdawalls::skew_lines_wall(id);
        let value = w.value_at(&p).map_err(|e| e.to_string())?;
        let derivative = lambdawalls::phi_alpha_derivative_at(&w, &p).map_err(|e| e.to_string())?;
        let slope = lambdawalls::wall_slope_at(&w, &p);
        walls.push((id, w, value, derivative, slope));
    }
    let chamber = lambdawalls::classify_chamber(&v, &p).map(|c| c.to_string()).map_err(|e| e.to_string());

    if json {
        let items: Vec<Value> = walls
            .iter()
            .map(|(id, w, value, derivative, slope)| {
                json!({
                    "wall": id.to_string(),
                    "phi": w.polynomial().to_string(),
                    "value": value.to_string(),
                    "alpha_derivative": derivative.to_string(),
                    "slope": slope.as_ref().ok().map(|x| x.to_string()),
                    "note": slope.as_ref().err().map(|e| e.to_string()),
                })
            })
            .collect();
        let doc = json!({
            "chern": v,
            "s": s.to_string(),
            "alpha": p.alpha().to_string(),
            "beta": p.beta().to_string(),
            "walls": items,
            "chamber": chamber.as_ref().ok(),
            "chamber_note": chamber.as_ref().err(),
        });
        return Ok(Outcome::ok(to_json(&doc)));
    }
    let mut out = format!("class {v} at (alpha, beta) = ({}, {}), s = {s}\n", p.alpha(), p.beta());
    for (id, w, value, derivative, slope) in &walls {
        out.push_str(&format!("{id}: Phi = {}\n", w.polynomial()));
        out.push_str(&format!("  value = {value}\n  dPhi/dalpha = {derivative}\n"));
        match slope {
            Ok(x) => out.push_str(&format!("  slope dalpha/dbeta = {x}\n")),
            Err(e) => out.push_str(&format!("  slope: {e}\n")),
        }
    }
    match chamber {
        Ok(c) => out.push_str(&format!("chamber: {c}\n")),
        Err(e) => out.push_str(&format!("chamber: {e}\n")),
    }
    Ok(Outcome::ok(out))
}

fn plot(req: &PlotRequest, out: Option<&PathBuf>, svg: Option<&PathBuf>, json: bool) -> CliResult {
    let rows = lambdawalls::plot_rows(req).map_err(|e| e.to_string())?;
    let csv = lambdawalls::plot_csv(&rows);
    if let Some(path) = svg {
        fs::write(path, lambdawalls::plot_svg(&rows, req)).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    let Some(path) = out else {
        return Ok(Outcome::ok(csv));
    };
    fs::write(path, &csv).map_err(|e| format!("{}: {e}", path.display()))?;
    let text = if json {
        to_json(&json!({
            "csv": path.display().to_string(),
            "svg": svg.map(|p| p.display().to_string()),
            "rows": rows.len(),
        }))
    } else {
        format!("wrote {} rows to {}\n", rows.len(), path.display())
    };
    Ok(Outcome::ok(text))
}

fn ideals(suite: &str, json: bool) -> CliResult {
    let reports = if suite == "paper" {
        idealsuite::run_paper_suite()
    } else {
        let text = fs::read_to_string(suite).map_err(|e| format!("{suite}: {e}"))?;
        idealsuite::run_manifest(&text).map_err(|e| format!("{suite}: {e}"))?
    };
    let passed = reports.iter().filter(|r| r.pass).count();
    let verified = passed == reports.len();
    let output = if json {
        to_json(&serde_json::to_value(&reports).map_err(|e| e.to_string())?)
    } else {
        let mut out = String::new();
        for r in &reports {
            out.push_str(&r.to_string());
        }
        out.push_str(&format!("{passed}/{} scenarios passed\n", reports.len()));
        out
    };
    Ok(Outcome { output, verified })
}

fn chow_cmd(which: ChowCommand, json: bool) -> String {
    match which {
        ChowCommand::Todd => {
            let t = chow::todd_p3().to_string();
            if json { to_json(&json!({ "todd": t })) } else { format!("{t}\n") }
        }
        ChowCommand::C1e => {
            let c = chow::grr_c1_pushforward().to_string();
            if json { to_json(&json!({ "c1": c })) } else { format!("{c}\n") }
        }
        ChowCommand::Mori => {
            let report = chow::mori_report();
            if json {
                to_json(&serde_json::to_value(&report).expect("report serializes"))
            } else {
                report.to_string()
            }
        }
    }
}
