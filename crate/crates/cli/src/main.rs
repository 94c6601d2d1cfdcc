use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use superch::charfn::{check_equivalence, full_char_poly, h_via_a, h_via_d};
use superch::identity::{identity_coeffs, newton_coeffs, osp_specialize};
use superch::render;
use superch::supermatrix::random_supermatrix;
use superch::verifier::{verify_batch, verify_identity_batch};
use superch::{CHIdentity, SuperMatrix};

const DEFAULT_SEED: u64 = 1;

#[derive(Parser)]
#[command(
    name = "superch",
    version,
    about = "Cayley-Hamilton identities for (p,q) supermatrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for random sampling.
    #[arg(long, global = true, env = "SUPERCH_DEFAULT_SEED")]
    seed: Option<u64>,

    /// Number of verification trials.
    #[arg(long, global = true, default_value_t = 25)]
    trials: usize,

    /// Number of Grassmann generators.
    #[arg(long, global = true, default_value_t = 6)]
    generators: usize,

    /// Highest soul grade in random entries.
    #[arg(long = "soul-grade", global = true, default_value_t = 3)]
    soul_grade: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Derive the identity for (p,q) supermatrices.
    Derive {
        p: usize,
        q: usize,
        /// Specialize to orthosymplectic supermatrices (q even).
        #[arg(long)]
        osp: bool,
    },
    /// Check the identity on random supermatrices.
    Verify {
        p: usize,
        q: usize,
        /// Specialize to orthosymplectic supermatrices (q even).
        #[arg(long)]
        osp: bool,
        /// Verify an identity loaded from a JSON file instead of deriving one.
        #[arg(long)]
        identity: Option<PathBuf>,
    },
    /// Print both ratio forms of the characteristic function of a sample.
    Charfn {
        p: usize,
        q: usize,
        /// Supermatrix JSON file to use instead of a random sample.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Print the Newton coefficients b_0..b_k in n symbols.
    Newton { n: usize, k: usize },
}

enum Failure {
    Usage(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn check_dims(p: usize, q: usize, osp: bool) -> Result<(), Failure> {
    if p == 0 || q == 0 {
        return Err(Failure::Usage(format!(
            "p and q must both be at least 1, got ({p},{q})"
        )));
    }
    if osp && q % 2 == 1 {
        return Err(Failure::Usage(format!("--osp needs an even q, got {q}")));
    }
    Ok(())
}

fn derive(p: usize, q: usize, osp: bool) -> Result<CHIdentity, Failure> {
    let id = identity_coeffs(p, q)?;
    Ok(if osp { osp_specialize(&id)? } else { id })
}

fn render_identity(id: &CHIdentity, format: Format) -> String {
    match format {
        Format::Text => render::to_text(id),
        Format::Json => render::to_json(id) + "\n",
        Format::Latex => render::to_latex(id),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    match &cli.command {
        Command::Derive { p, q, osp } => {
            check_dims(*p, *q, *osp)?;
            emit(cli, &render_identity(&derive(*p, *q, *osp)?, cli.format))
        }
        Command::Verify {
            p,
            q,
            osp,
            identity,
        } => {
            check_dims(*p, *q, *osp)?;
            if cli.format == Format::Latex {
                return Err(Failure::Usage("verify reports are text or json".into()));
            }
            let report = match identity {
                Some(path) => {
                    let src = fs::read_to_string(path)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    let id = render::from_json(&src)?;
                    if (id.p(), id.q()) != (*p, *q) {
                        return Err(Failure::Usage(format!(
                            "identity file is for ({},{})",
                            id.p(),
                            id.q()
                        )));
                    }
                    verify_identity_batch(&id, cli.trials, seed, cli.generators, cli.soul_grade)?
                }
                None if *osp => verify_identity_batch(
                    &derive(*p, *q, true)?,
                    cli.trials,
                    seed,
                    cli.generators,
                    cli.soul_grade,
                )?,
                None => verify_batch(*p, *q, cli.trials, seed, cli.generators, cli.soul_grade)?,
            };
            match cli.format {
                Format::Json => {
                    let json = serde_json::to_string_pretty(&report.to_json_value())? + "\n";
                    emit(cli, &json)?;
                    if cli.out.is_some() {
                        println!("{}", report.summary());
                    } else {
                        eprintln!("{}", report.summary());
                    }
                }
                _ => {
                    let mut text = report.summary() + "\n";
                    for o in report.outcomes.iter().filter(|o| o.residual.is_some()) {
                        text.push_str(&format!(
                            "trial {} (seed {}) residual:\n{}",
                            o.trial,
                            o.seed,
                            o.residual.as_ref().unwrap()
                        ));
                    }
                    emit(cli, &text)?;
                }
            }
            if report.succeeded() {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Charfn { p, q, input } => {
            check_dims(*p, *q, false)?;
            let m = match input {
                Some(path) => {
                    let src = fs::read_to_string(path)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    let m = SuperMatrix::from_json(&src)?;
                    if (m.p(), m.q()) != (*p, *q) {
                        return Err(Failure::Usage(format!(
                            "input is a ({},{}) supermatrix",
                            m.p(),
                            m.q()
                        )));
                    }
                    m
                }
                None => random_supermatrix(*p, *q, cli.generators, seed, cli.soul_grade)?,
            };
            let (hd, ha) = (h_via_d(&m)?, h_via_a(&m)?);
            let equivalent = check_equivalence(&m)?;
            let full = full_char_poly(&m)?;
            let text = match cli.format {
                Format::Json => {
                    let v = serde_json::json!({
                        "matrix": serde_json::to_value(&m)?,
                        "via_d": hd.to_json_value(),
                        "via_a": ha.to_json_value(),
                        "equivalent": equivalent,
                        "full_char_poly": full.to_json_value(),
                        "full_degree": full.degree(),
                    });
                    serde_json::to_string_pretty(&v)? + "\n"
                }
                Format::Latex => format!(
                    "h(x) = {}\nh(x) = {}\n\\mathcal{{P}}(x) = {}\n",
                    hd.to_latex(),
                    ha.to_latex(),
                    full.to_latex()
                ),
                Format::Text => format!(
                    "M =\n{m}via d: {}\nvia a: {}\nequivalence={equivalent}\nP(x) degree {}: {full}\n",
                    hd.to_text(),
                    ha.to_text(),
                    full.degree().unwrap_or(0)
                ),
            };
            emit(cli, &text)
        }
        Command::Newton { n, k } => {
            let b = newton_coeffs(*n, *k)?;
            let text = match cli.format {
                Format::Json => {
                    let v: Vec<_> = b.iter().map(|c| c.to_json_value()).collect();
                    serde_json::to_string_pretty(&v)? + "\n"
                }
                Format::Latex => b
                    .iter()
                    .enumerate()
                    .map(|(j, c)| format!("b_{{{j}}} = {}\n", c.to_latex()))
                    .collect(),
                Format::Text => b
                    .iter()
                    .enumerate()
                    .map(|(j, c)| format!("b{j} = {c}\n"))
                    .collect(),
            };
            emit(cli, &text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
