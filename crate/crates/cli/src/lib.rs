//! The `ncarc` command line.
//!
//! Exit status: 0 on success, 1 when a check fails, 2 on usage or parse
//! errors. Commands that enumerate `S_n` refuse `n` above the limit in
//! `NCARC_MAX_N` (default 9).

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use noncrossing::dot::{export_forcing, export_weak};
use noncrossing::render::{render_ascii, render_svg};
use noncrossing::report::verify_report_with_limit;
use noncrossing::text::{
    format_arcset, format_diagram, parse_arc, parse_arcset, parse_diagram, parse_permutation,
};
use noncrossing::{
    complex_faces, count_by_arcs, delta, ArcSet, Congruence, Error, NamedCongruence,
};

pub const LIMIT_VAR: &str = "NCARC_MAX_N";
pub const DEFAULT_LIMIT: usize = 9;

#[derive(Parser, Debug)]
#[command(
    name = "ncarc",
    version,
    about = "Noncrossing arc diagrams and weak order quotients"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Diagram of a permutation.
    Delta {
        /// Permutation; read from stdin when absent.
        perm: Option<String>,
    },
    /// Permutation of a diagram.
    Inverse {
        /// Diagram text; arguments are joined by newlines. Read from stdin when absent.
        diagram: Vec<String>,
    },
    /// List uncontracted permutations with their diagrams.
    Enumerate {
        #[command(flatten)]
        target: Target,
        /// Print diagram counts by number of arcs instead.
        #[arg(long)]
        by_arcs: bool,
    },
    /// Bottom element of the congruence class of a permutation.
    Project {
        #[command(flatten)]
        target: Target,
        perm: Option<String>,
    },
    /// Draw a diagram.
    Render {
        #[arg(long, conflicts_with = "svg", required_unless_present = "svg")]
        ascii: bool,
        #[arg(long)]
        svg: bool,
        diagram: Vec<String>,
    },
    /// Graphviz export of the forcing order or of the weak order.
    Export {
        #[arg(long, conflicts_with = "weak", required_unless_present = "weak")]
        forcing: bool,
        #[arg(long)]
        weak: bool,
        #[command(flatten)]
        target: Target,
    },
    /// Faces of the canonical join complex, one diagram per line.
    Complex {
        #[command(flatten)]
        target: Target,
    },
    /// Check the enumerative statements exhaustively for n = 1..=N.
    Verify {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        json: bool,
    },
    /// Parse a value and print its canonical form.
    Format {
        #[arg(value_enum)]
        kind: Kind,
        /// Number of points, for arcs. Defaults to the upper endpoint.
        #[arg(long)]
        n: Option<usize>,
        text: Vec<String>,
    },
}

#[derive(Args, Debug)]
struct Target {
    #[arg(long)]
    n: usize,
    /// tamari, baxter, cambrian:<LR...>, clumped:<k>, maxlen:<k>, or
    /// @<file> holding an arc set.
    #[arg(long)]
    congruence: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Permutation,
    Arc,
    Diagram,
    Arcset,
}

/// A failed command: message for stderr and exit status.
#[derive(Debug)]
struct Failure {
    status: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::CrossCheck(_) => 1,
            _ => 2,
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        status: 2,
        message: message.into(),
    }
}

pub fn limit_from_env() -> usize {
    std::env::var(LIMIT_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_LIMIT)
}

/// Runs one invocation. `args` excludes the program name.
pub fn run(args: &[String], stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    run_with_limit(args, limit_from_env(), stdin, out, err)
}

pub fn run_with_limit(
    args: &[String],
    limit: usize,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let argv = std::iter::once("ncarc".to_string()).chain(args.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if status == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return status;
        }
    };
    match execute(cli.command, limit, stdin) {
        Ok((text, status)) => {
            let _ = out.write_all(text.as_bytes());
            status
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.status
        }
    }
}

fn input(parts: Vec<String>, stdin: &mut dyn Read) -> Result<String, Failure> {
    if !parts.is_empty() {
        return Ok(parts.join("\n"));
    }
    let mut text = String::new();
    stdin
        .read_to_string(&mut text)
        .map_err(|e| usage(format!("reading stdin: {e}")))?;
    Ok(text)
}

fn check_limit(n: usize, limit: usize) -> Result<(), Failure> {
    if n == 0 {
        return Err(usage("n must be at least 1"));
    }
    if n > limit {
        return Err(Error::LimitExceeded { n, limit }.into());
    }
    Ok(())
}

fn congruence(target: &Target) -> Result<Congruence, Failure> {
    let set = match target.congruence.as_deref() {
        None => ArcSet::all(target.n),
        Some(spec) => match spec.strip_prefix('@') {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| usage(format!("reading {path}: {e}")))?;
                let set = parse_arcset(&text)?;
                if set.n() != target.n {
                    return Err(Error::SizeMismatch {
                        expected: target.n,
                        found: set.n(),
                    }
                    .into());
                }
                set
            }
            None => spec.parse::<NamedCongruence>()?.arc_set(target.n)?,
        },
    };
    Ok(Congruence::new(set)?)
}

fn execute(command: Command, limit: usize, stdin: &mut dyn Read) -> Result<(String, i32), Failure> {
    let text = match command {
        Command::Delta { perm } => {
            let x = parse_permutation(&input(perm.into_iter().collect(), stdin)?)?;
            format!("{}\n", format_diagram(&delta(&x)))
        }
        Command::Inverse { diagram } => {
            let d = parse_diagram(&input(diagram, stdin)?)?;
            format!("{}\n", d.to_permutation())
        }
        Command::Enumerate { target, by_arcs } => {
            check_limit(target.n, limit)?;
            let c = congruence(&target)?;
            if by_arcs {
                let label = target.congruence.as_deref().unwrap_or("all");
                format!("{}\n", count_by_arcs(&c, label))
            } else {
                let perms = c.uncontracted_permutations()?;
                let mut text = String::new();
                for x in &perms {
                    text.push_str(&format!("{x}\t{}\n", delta(x)));
                }
                text.push_str(&format!("total {}\n", perms.len()));
                text
            }
        }
        Command::Project { target, perm } => {
            check_limit(target.n, limit)?;
            let c = congruence(&target)?;
            let x = parse_permutation(&input(perm.into_iter().collect(), stdin)?)?;
            format!("{}\n", c.project_down(&x)?)
        }
        Command::Render { svg, diagram, .. } => {
            let d = parse_diagram(&input(diagram, stdin)?)?;
            if svg {
                render_svg(&d)
            } else {
                render_ascii(&d)
            }
        }
        Command::Export {
            forcing, target, ..
        } => {
            check_limit(target.n, limit)?;
            if forcing {
                if target.congruence.is_some() {
                    return Err(usage("--congruence applies to --weak only"));
                }
                export_forcing(target.n)
            } else {
                let c = target
                    .congruence
                    .as_ref()
                    .map(|_| congruence(&target))
                    .transpose()?;
                export_weak(target.n, c.as_ref())
            }
        }
        Command::Complex { target } => {
            check_limit(target.n, limit)?;
            let faces = complex_faces(&congruence(&target)?);
            let mut text = format!("n={}\n", target.n);
            for face in &faces {
                text.push_str(&format!("{face}\n"));
            }
            text
        }
        Command::Verify { n_max, json } => {
            let report = verify_report_with_limit(n_max, limit)?;
            let status = if report.passed() { 0 } else { 1 };
            let text = if json {
                format!("{}\n", report.to_json())
            } else {
                format!("{report}\n")
            };
            return Ok((text, status));
        }
        Command::Format { kind, n, text } => {
            let text = input(text, stdin)?;
            match kind {
                Kind::Permutation => format!("{}\n", parse_permutation(&text)?),
                Kind::Arc => {
                    let token = text.trim();
                    let n = match n {
                        Some(n) => n,
                        None => token
                            .split_once('-')
                            .map(|(_, r)| {
                                r.chars()
                                    .take_while(char::is_ascii_digit)
                                    .collect::<String>()
                            })
                            .and_then(|d| d.parse().ok())
                            .ok_or_else(|| usage("cannot infer n; pass --n"))?,
                    };
                    format!("{}\n", parse_arc(token, n, 0)?)
                }
                Kind::Diagram => format!("{}\n", format_diagram(&parse_diagram(&text)?)),
                Kind::Arcset => format!("{}\n", format_arcset(&parse_arcset(&text)?)),
            }
        }
    };
    Ok((text, 0))
}
