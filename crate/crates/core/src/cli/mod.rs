//! Command-line front end.
//!
//! Exit codes: `0` success, `1` internal invariant violation or failed check,
//! `2` bad input.

pub mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::checks::{run_suite, Suite};
use crate::error::HodgeError;
use crate::goettsche::{hilbert_scheme_diamond, surface_diamond, GoettscheConfig, SurfaceKind, DEFAULT_MAX_N};
use crate::og6::{run_full_pipeline, NamedConstants, PipelineConfig, OG6_B2, OG6_CHI_TOP};

/// Environment variable overriding the cap on `n` for Hilbert schemes.
pub const MAX_N_ENV: &str = "HODGE_MAX_N";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SurfaceArg {
    K3,
    Abelian,
}

impl From<SurfaceArg> for SurfaceKind {
    fn from(s: SurfaceArg) -> Self {
        match s {
            SurfaceArg::K3 => SurfaceKind::K3,
            SurfaceArg::Abelian => SurfaceKind::Abelian,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "ihs-hodge", version, about = "Hodge, Betti and Chern numbers of hyperkähler manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Derive the Hodge diamond, Betti and Chern numbers of OG6.
    Og6 {
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Also print every intermediate table of the derivation.
        #[arg(long)]
        trace: bool,
        #[arg(long, default_value_t = OG6_B2, allow_hyphen_values = true)]
        b2: i64,
        #[arg(long, default_value_t = OG6_CHI_TOP, allow_hyphen_values = true)]
        chi: i64,
    },
    /// Hodge diamond of the Hilbert scheme of n points on a surface.
    Hilb {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = SurfaceArg::K3)]
        surface: SurfaceArg,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Run a named invariant suite.
    Check {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

fn exit_code(e: &HodgeError) -> i32 {
    if e.is_internal() {
        EXIT_INTERNAL
    } else {
        EXIT_BAD_INPUT
    }
}

fn max_n_from_env() -> Result<u32, String> {
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| format!("{MAX_N_ENV} must be a nonnegative integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn cmd_og6(format: OutputFormat, trace: bool, b2: i64, chi: i64, out: &mut dyn Write) -> Result<(), HodgeError> {
    let config = PipelineConfig { b2, chi_top: chi, constants: NamedConstants::default() };
    let result = run_full_pipeline(config)?;
    let text = match format {
        OutputFormat::Text => {
            let mut s = format!("Hodge diamond of OG6 (complex dimension 6)\n\n{}\n", render::diamond_text(&result.diamond));
            s.push_str(&render::betti_text(&result.betti));
            s.push_str(&render::chern_text(&result.chern));
            if trace {
                s.push('\n');
                s.push_str(&render::trace_text(&result.trace));
            }
            s
        }
        OutputFormat::Json => {
            let mut value = json!({
                "diamond": result.diamond,
                "betti": result.betti,
                "chern": result.chern,
            });
            if trace {
                value["trace"] = serde_json::to_value(&result.trace).expect("trace serializes");
            }
            format!("{value}\n")
        }
        OutputFormat::Latex => {
            let mut s = render::diamond_latex(&result.diamond);
            s.push_str(&render::betti_latex(&result.betti));
            if trace {
                for step in &result.trace.steps {
                    s.push_str(&format!("% {}\n", step.stage.as_str()));
                    s.push_str(&render::diamond_latex(&step.output));
                }
            }
            s
        }
    };
    write_out(out, &text)
}

fn cmd_hilb(n: u32, surface: SurfaceKind, format: OutputFormat, max_n: u32, out: &mut dyn Write) -> Result<(), HodgeError> {
    let d = hilbert_scheme_diamond(&surface_diamond(surface), n, GoettscheConfig { max_n })?;
    let text = match format {
        OutputFormat::Text => {
            let mut s = format!("Hodge diamond of {surface}^[{n}] (complex dimension {})\n\n", 2 * n);
            s.push_str(&render::diamond_text(&d));
            s.push('\n');
            s.push_str(&render::betti_text(&d.betti()?));
            s
        }
        OutputFormat::Json => format!("{}\n", d.to_json()),
        OutputFormat::Latex => render::diamond_latex(&d),
    };
    write_out(out, &text)
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), HodgeError> {
    out.write_all(text.as_bytes()).map_err(|e| HodgeError::Inconsistent(format!("cannot write output: {e}")))
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(rendered.as_bytes());
            return if code == 0 { EXIT_OK } else { EXIT_BAD_INPUT };
        }
    };

    let result = match cli.command {
        Command::Og6 { format, trace, b2, chi } => cmd_og6(format, trace, b2, chi, out),
        Command::Hilb { n, surface, format } => match max_n_from_env() {
            Ok(max_n) => cmd_hilb(n, surface.into(), format, max_n, out),
            Err(msg) => {
                let _ = writeln!(err, "error: {msg}");
                return EXIT_BAD_INPUT;
            }
        },
        Command::Check { suite } => {
            let outcomes = run_suite(suite);
            let mut text = String::new();
            for o in &outcomes {
                text.push_str(&format!("{o}\n"));
            }
            let failed = outcomes.iter().filter(|o| !o.passed()).count();
            text.push_str(&format!("{} checks, {} failed\n", outcomes.len(), failed));
            if let Err(e) = write_out(out, &text) {
                let _ = writeln!(err, "error: {e}");
                return EXIT_INTERNAL;
            }
            return if failed == 0 { EXIT_OK } else { EXIT_INTERNAL };
        }
    };

    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
