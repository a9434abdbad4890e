//! Command-line front end: reads an input document naming a space and two
//! possibility distributions, and runs the conjunction analyses.
//!
//! Exit codes are part of the contract, chosen for scriptability in batch
//! elicitation pipelines: 0 when the conjunction is a possibility measure
//! (or the command simply succeeded), 1 when it is not, 2 on sure loss,
//! 64 for usage, I/O and parse errors.

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use posscon::adjust::{adjust_comonotone, adjust_pairwise, Adjustment};
use posscon::capacity::{conjunction, is_maxitive, possibility_measure};
use posscon::closure::diagnose;
use posscon::credal::{natural_extension_table, CredalPolytope};
use posscon::game::{build_game, dominance_eliminate, line_diagram, pure_equilibrium, Removed};
use posscon::input::{load_document, NormalizeMode};
use posscon::report::{
    adjustment_json, emit_report, event_table_json, render_svg, values_json, PlotSpec,
};
use posscon::{Error, PossibilityDistribution, Rational};
use serde_json::json;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "posscon",
    version,
    about = "Exact analysis of the conjunction (pointwise minimum) of two possibility measures"
)]
struct Cli {
    /// Input document path, or `-` for standard input.
    #[arg(long, global = true, default_value = "-")]
    input: String,

    /// Accept unnormalized distributions by rescaling (`max` divides each
    /// distribution by its maximum).
    #[arg(long, global = true, value_enum)]
    normalize: Option<NormalizeArg>,

    /// Also run the union-convexity check (vertex enumeration; needs a
    /// space of at most 8 elements).
    #[arg(long, global = true)]
    convexity: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum NormalizeArg {
    Max,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Comonotone,
    Pairwise,
}

#[derive(Subcommand)]
enum Command {
    /// Full diagnosis: sure loss, coherence, 2-alternation, possibility,
    /// natural extension, violating pairs and witnesses.
    Check,
    /// The conjunction event table, plus the distribution form when the
    /// table is maxitive.
    Conjoin,
    /// The natural extension on every event.
    Natext,
    /// Correct the distributions upward so their conjunction is a
    /// possibility measure.
    Adjust {
        #[arg(long, value_enum)]
        strategy: StrategyArg,
    },
    /// Render the game-theoretic line diagram as SVG.
    Plot {
        /// Output file for the SVG document.
        #[arg(long)]
        out: PathBuf,
        /// Overlay the corrected distributions as dashed lines.
        #[arg(long)]
        with_adjustment: bool,
        /// Correction strategy for the overlay.
        #[arg(long, value_enum, default_value_t = StrategyArg::Comonotone)]
        strategy: StrategyArg,
    },
    /// Payoff matrix, dominance eliminations and pure equilibrium for the
    /// game on one event.
    Game {
        /// Comma-separated element labels.
        #[arg(long)]
        event: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let kind = e.kind();
            let _ = e.print();
            return match kind {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(64),
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            if err.downcast_ref::<Error>() == Some(&Error::SureLoss) {
                eprintln!("error: {err:#}");
                return ExitCode::from(2);
            }
            eprintln!("error: {err:#}");
            ExitCode::from(64)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let text = if cli.input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading standard input")?;
        buf
    } else {
        std::fs::read_to_string(&cli.input)
            .with_context(|| format!("reading input file `{}`", cli.input))?
    };
    let mode = match cli.normalize {
        Some(NormalizeArg::Max) => NormalizeMode::Max,
        None => NormalizeMode::Reject,
    };
    let (pi1, pi2) = load_document(&text, mode)?;

    match cli.command {
        Command::Check => cmd_check(&pi1, &pi2, cli.convexity),
        Command::Conjoin => cmd_conjoin(&pi1, &pi2),
        Command::Natext => cmd_natext(&pi1, &pi2),
        Command::Adjust { strategy } => cmd_adjust(&pi1, &pi2, strategy),
        Command::Plot {
            out,
            with_adjustment,
            strategy,
        } => cmd_plot(&pi1, &pi2, &out, with_adjustment, strategy),
        Command::Game { event } => cmd_game(&pi1, &pi2, &event),
    }
}

fn cmd_check(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
    convexity: bool,
) -> Result<ExitCode> {
    let d = diagnose(pi1, pi2, convexity)?;
    println!("{}", emit_report(&d, None));
    Ok(if !d.avoids_sure_loss {
        ExitCode::from(2)
    } else if d.conjunction_is_possibility {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_conjoin(pi1: &PossibilityDistribution, pi2: &PossibilityDistribution) -> Result<ExitCode> {
    let conj = conjunction(&possibility_measure(pi1), &possibility_measure(pi2))?;
    let maxitive = is_maxitive(&conj);
    let (table, table_decimal) = event_table_json(&conj);
    let distribution = maxitive.then(|| conj.singleton_values());
    let doc = json!({
        "schema": 1,
        "space": pi1.space().labels(),
        "maxitive": maxitive,
        "distribution": distribution.as_ref().map(|v| v.iter().map(Rational::to_string).collect::<Vec<_>>()),
        "distribution_decimal": distribution.as_ref().map(|v| v.iter().map(|x| x.decimal(6)).collect::<Vec<_>>()),
        "table": table,
        "table_decimal": table_decimal,
    });
    println!("{doc}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_natext(pi1: &PossibilityDistribution, pi2: &PossibilityDistribution) -> Result<ExitCode> {
    let conj = conjunction(&possibility_measure(pi1), &possibility_measure(pi2))?;
    let table = natural_extension_table(&CredalPolytope::of(&conj))?;
    let coherent = table == conj;
    let (frac, dec) = event_table_json(&table);
    let doc = json!({
        "schema": 1,
        "space": pi1.space().labels(),
        "coherent_conjunction": coherent,
        "table": frac,
        "table_decimal": dec,
    });
    println!("{doc}");
    Ok(ExitCode::SUCCESS)
}

fn make_adjustment(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
    strategy: StrategyArg,
) -> Result<Adjustment, Error> {
    match strategy {
        StrategyArg::Comonotone => adjust_comonotone(pi1, pi2),
        StrategyArg::Pairwise => adjust_pairwise(pi1, pi2),
    }
}

fn cmd_adjust(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
    strategy: StrategyArg,
) -> Result<ExitCode> {
    let adj = make_adjustment(pi1, pi2, strategy)?;
    let conj_values = adj.pi1_out.pointwise_min(&adj.pi2_out)?;
    let doc = json!({
        "schema": 1,
        "adjustment": adjustment_json(&adj),
        "conjunction_distribution": values_json(&conj_values),
    });
    println!("{doc}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_plot(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
    out: &PathBuf,
    with_adjustment: bool,
    strategy: StrategyArg,
) -> Result<ExitCode> {
    let full = pi1.space().full_event();
    let mut spec = PlotSpec::new(line_diagram(pi1, pi2, full)?);
    if with_adjustment {
        let adj = make_adjustment(pi1, pi2, strategy)?;
        spec = spec.with_adjusted(line_diagram(&adj.pi1_out, &adj.pi2_out, full)?);
    }
    std::fs::write(out, render_svg(&spec))
        .with_context(|| format!("writing SVG to `{}`", out.display()))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_game(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
    event: &str,
) -> Result<ExitCode> {
    let labels: Vec<&str> = event
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    if labels.is_empty() {
        return Err(Error::EmptyEvent.into());
    }
    let a = pi1.space().event_from_labels(&labels)?;
    let g = build_game(pi1, pi2, a)?;
    let reduced = dominance_eliminate(&g);
    let equilibrium = pure_equilibrium(&g);

    let row_json = |row: &[Rational]| -> Vec<String> { row.iter().map(Rational::to_string).collect() };
    let doc = json!({
        "schema": 1,
        "event": g.labels(),
        "matrix": [row_json(g.row(0)), row_json(g.row(1))],
        "eliminations": reduced.steps.iter().map(|s| json!({
            "kind": match s.kind { Removed::Column => "column", Removed::Row => "row" },
            "index": s.index + 1,
            "dominated_by": s.dominated_by + 1,
        })).collect::<Vec<_>>(),
        "reduced": {
            "rows": reduced.rows.iter().map(|r| row_json(r)).collect::<Vec<_>>(),
            "kept_rows": reduced.kept_rows.iter().map(|r| r + 1).collect::<Vec<_>>(),
            "kept_cols": reduced.kept_cols.iter().map(|c| c + 1).collect::<Vec<_>>(),
        },
        "equilibrium": equilibrium.map(|eq| {
            let (alpha, beta) = eq.one_based();
            json!({
                "alpha": alpha,
                "beta": beta,
                "column": g.labels().get(eq.col),
            })
        }),
    });
    println!("{doc}");
    Ok(ExitCode::SUCCESS)
}
