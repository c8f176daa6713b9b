//! `pbei`: parity binomial edge ideals from the command line.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pbei::algebra::PrimeField;
use pbei::betti::{koszul_betti_with, BettiError, BettiOptions};
use pbei::graphs::{classify_pure, detect_shape, Graph};
use pbei::groebner::{ideal_intersection, min_generator_degrees, write_golden};
use pbei::ideals::{edge_ideal_of_kind, parity_binomial_edge_ideal, EdgeIdealKind};
use pbei::verify::{
    sweep, verify_case_graphs, verify_disconnected, verify_exact_sequences, verify_lemmas, Report,
    VerifyError, VerifyOptions,
};

#[derive(Parser)]
#[command(
    name = "pbei",
    version,
    about = "Parity binomial edge ideals and their Betti tables"
)]
struct Cli {
    /// Worker threads; 0 uses every core, 1 is fully serial.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Prime modulus of the coefficient field.
    #[arg(long, global = true, env = "PBEI_PRIME", default_value_t = 32003)]
    prime: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Parity,
    Bei,
}

#[derive(Clone, Copy, Default, PartialEq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generators of an edge ideal.
    Ideal {
        graph: String,
        #[arg(long, value_enum, default_value = "parity")]
        kind: Kind,
    },
    /// Print the reduced Groebner basis of J_G in golden-file format.
    Gb { graph: String },
    /// Graded Betti numbers of R/J_G inside a window.
    Betti {
        graph: String,
        #[arg(long)]
        imax: usize,
        #[arg(long)]
        jmax: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Cap on either dimension of a boundary matrix.
        #[arg(long, default_value_t = pbei::betti::DEFAULT_MAX_COLUMNS)]
        max_columns: usize,
    },
    /// Predicted purity of the resolution of J_G.
    Classify {
        graph: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Generators and minimal generator degrees of J_G1 ∩ J_G2.
    Intersect { first: String, second: String },
    /// Replay the verification reports. With no flags, runs all but the
    /// sweep.
    Verify {
        #[arg(long)]
        lemmas: bool,
        #[arg(long)]
        sequences: bool,
        #[arg(long)]
        cases: bool,
        /// Sweep connected graphs on up to N vertices (also runs the
        /// disjoint-union checks).
        #[arg(long, value_name = "N")]
        sweep: Option<usize>,
        #[arg(long, default_value_t = 8)]
        imax: usize,
        #[arg(long, default_value_t = 12)]
        jmax: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Verification,
    Cap(String),
}

impl From<BettiError> for Failure {
    fn from(e: BettiError) -> Self {
        if e.is_resource_cap() {
            Failure::Cap(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        if e.is_resource_cap() {
            Failure::Cap(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

/// A descriptor such as `cycle:5`, or the JSON form `{"n": .., "edges": ..}`.
fn parse_graph(s: &str) -> Result<Graph, Failure> {
    if s.trim_start().starts_with('{') {
        serde_json::from_str(s).map_err(usage)
    } else {
        s.parse().map_err(usage)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let field = PrimeField::new(cli.prime).map_err(usage)?;
    match cli.command {
        Command::Ideal { graph, kind } => {
            let kind = match kind {
                Kind::Parity => EdgeIdealKind::Parity,
                Kind::Bei => EdgeIdealKind::Binomial,
            };
            let j = edge_ideal_of_kind(&parse_graph(&graph)?, kind, field).map_err(usage)?;
            for g in j.generators() {
                println!("{g}");
            }
        }
        Command::Gb { graph } => {
            let j = parity_binomial_edge_ideal(&parse_graph(&graph)?, field).map_err(usage)?;
            print!("{}", write_golden(j.ring(), j.groebner_basis()));
        }
        Command::Betti {
            graph,
            imax,
            jmax,
            format,
            max_columns,
        } => {
            let j = parity_binomial_edge_ideal(&parse_graph(&graph)?, field).map_err(usage)?;
            let opts = BettiOptions {
                jobs: cli.jobs,
                max_columns,
                ..BettiOptions::default()
            };
            let t = koszul_betti_with(&j, imax, jmax, &opts)?;
            match format {
                Format::Text => println!("{t}"),
                Format::Json => println!("{}", t.to_json()),
            }
        }
        Command::Classify { graph, format } => {
            let g = parse_graph(&graph)?;
            let c = classify_pure(&g);
            match format {
                Format::Text => {
                    println!("{}: {}", if c.pure { "pure" } else { "impure" }, c.reason);
                    if let Ok(shape) = detect_shape(&g) {
                        println!("shape: {shape}");
                    }
                }
                Format::Json => println!("{}", serde_json::to_string(&c).expect("serializable")),
            }
        }
        Command::Intersect { first, second } => {
            let (a, b) = (parse_graph(&first)?, parse_graph(&second)?);
            // pad the smaller graph so both ideals live in one ring
            let n = a.n().max(b.n());
            let pad = |g: Graph| {
                if g.n() < n {
                    g.disjoint_union(&Graph::empty(n - g.n()))
                } else {
                    g
                }
            };
            let ja = parity_binomial_edge_ideal(&pad(a), field).map_err(usage)?;
            let jb = parity_binomial_edge_ideal(&pad(b), field).map_err(usage)?;
            let meet = ideal_intersection(&ja, &jb).map_err(usage)?;
            for g in meet.generators() {
                println!("{g}");
            }
            let degrees = min_generator_degrees(&meet).map_err(usage)?;
            println!("min generator degrees: {degrees:?}");
        }
        Command::Verify {
            lemmas,
            sequences,
            cases,
            sweep: sweep_n,
            imax,
            jmax,
            format,
        } => {
            let opts = VerifyOptions {
                field,
                jobs: cli.jobs,
            };
            let all = !(lemmas || sequences || cases || sweep_n.is_some());
            let mut reports: Vec<Report> = Vec::new();
            let mut ok = true;
            type Step = fn(&VerifyOptions) -> Result<Report, VerifyError>;
            let steps: [(bool, &str, Step); 3] = [
                (lemmas || all, "lemmas", verify_lemmas),
                (sequences || all, "exact sequences", verify_exact_sequences),
                (cases || all, "case graphs", verify_case_graphs),
            ];
            for (wanted, name, step) in steps {
                if wanted {
                    eprintln!("verifying {name}");
                    reports.push(step(&opts)?);
                }
            }
            if sweep_n.is_some() || all {
                eprintln!("verifying disjoint unions");
                reports.push(verify_disconnected(&opts)?);
            }
            let swept = match sweep_n {
                Some(n) => {
                    eprintln!("sweeping connected graphs on <= {n} vertices");
                    Some(sweep(n, (imax, jmax), &opts)?)
                }
                None => None,
            };
            ok &= reports.iter().all(Report::passed);
            ok &= swept.as_ref().is_none_or(|s| s.passed());
            match format {
                Format::Text => {
                    for r in &reports {
                        println!("{r}\n");
                    }
                    if let Some(s) = &swept {
                        println!("{s}");
                    }
                }
                Format::Json => {
                    let value = serde_json::json!({
                        "reports": reports,
                        "sweep": swept,
                        "passed": ok,
                    });
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&value).expect("serializable")
                    );
                }
            }
            if !ok {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("resource cap exceeded: {msg}");
            ExitCode::from(3)
        }
    }
}
