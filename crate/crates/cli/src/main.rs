use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;
use sqfree_cli::certificate::{self, Certificate};
use sqfree_cli::corpus;
use sqfree_cli::instance::{self, Instance, InputError};
use sqfree_cli::job::Job;
use sqfree_cli::repro::{self, Section};
use sqfree_core::covering::PathPattern;
use sqfree_core::paths::{enumerate_t_paths, path_ideal};
use sqfree_core::symbolic::SquarefreeIdeal;

/// Symbolic vs ordinary powers of squarefree monomial ideals.
///
/// Exit codes: 0 the property holds, 1 it fails (a certificate is printed),
/// 2 input error, 3 a cost guard was exceeded. Instance arguments are file
/// paths or `corpus:NAME` for a bundled instance.
#[derive(Parser)]
#[command(name = "sqfree", version)]
struct Cli {
    /// Directory for certificate files (also taken from SQFREE_OUT_DIR).
    #[arg(long, global = true, env = "SQFREE_OUT_DIR")]
    out_dir: Option<PathBuf>,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = repro::DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the minimal generators of I^(n).
    Symbolic {
        #[arg(long)]
        ideal: String,
        #[arg(short)]
        n: u32,
    },
    /// Decide I^(n) = I^n (or every level up to n with --up-to).
    Equality {
        #[arg(long)]
        ideal: String,
        #[arg(short)]
        n: u32,
        #[arg(long)]
        up_to: bool,
    },
    /// LP value and alpha(I^(m))/m bounds on the Waldschmidt constant.
    Waldschmidt {
        #[arg(long)]
        ideal: String,
        #[arg(short, default_value_t = 3)]
        m: u32,
    },
    /// König property on every minor.
    Packing {
        #[arg(long)]
        hypergraph: String,
    },
    /// Search weights in {0..cmax}^n for a covering/packing gap.
    Mengerian {
        #[arg(long)]
        hypergraph: String,
        #[arg(long, default_value_t = 1)]
        cmax: u32,
        /// Also compare with I^(n) = I^n for n up to this level.
        #[arg(long)]
        cross_check: Option<u32>,
    },
    /// Bad-triple criterion for 3-uniform 3-partite hypergraphs.
    Badness {
        #[arg(long)]
        hypergraph: String,
    },
    /// Find an r-partition meeting every edge once per class.
    Partition {
        #[arg(long)]
        hypergraph: String,
        #[arg(short)]
        r: usize,
    },
    /// Paths on t vertices of a graph and their ideal.
    PathIdeal {
        #[arg(long)]
        graph: String,
        #[arg(short, default_value_t = 3)]
        t: usize,
    },
    /// Predict and check I_3(G)^(n) = I_3(G)^n for a connected graph.
    ClassifyCubic {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 3)]
        budget: u32,
    },
    /// Scan the covering matrices of the two applications.
    Application {
        #[arg(long)]
        which: u8,
        #[arg(short)]
        p: usize,
        #[arg(long, default_value_t = 2)]
        amax: u32,
        /// Reading of the last row of the banded matrix (application 2).
        #[arg(long, value_parser = parse_pattern)]
        pattern: Option<PathPattern>,
    },
    /// Check an instance file against its schema.
    Validate {
        #[arg(long)]
        hypergraph: String,
        /// Also require every vertex to lie in an edge.
        #[arg(long)]
        strict: bool,
    },
    /// List or print the bundled instances.
    Corpus { name: Option<String> },
    /// Run the reproduction suite and write certificates.
    Repro {
        #[arg(value_enum, default_value_t = Section::All)]
        section: Section,
    },
    /// Re-check a certificate against a fresh computation.
    Verify {
        #[arg(long)]
        certificate: PathBuf,
    },
}

fn parse_pattern(s: &str) -> Result<PathPattern, String> {
    serde_json::from_value(json!(s)).map_err(|_| format!("unknown pattern {s:?} (band, tail-singleton)"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    let guard = e.chain().any(|c| c.downcast_ref::<sqfree_core::Error>().is_some_and(|e| e.is_guard()));
    if guard {
        3
    } else {
        2
    }
}

fn print_json(value: &impl serde::Serialize) -> Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Issues, prints and optionally stores a certificate; returns the verdict.
fn certify(cli: &Cli, job: Job, instance: Instance) -> Result<bool> {
    let c = Certificate::issue(job, instance)?;
    print!("{}", c.to_pretty_json());
    if let Some(dir) = &cli.out_dir {
        let path = c.write_atomic(dir, &c.file_stem())?;
        eprintln!("wrote {}", path.display());
    }
    Ok(c.holds)
}

fn load_ideal(src: &str) -> Result<Instance> {
    Ok(Instance::of_ideal(&instance::ideal(&instance::load(src)?)?))
}

fn load_hypergraph(src: &str) -> Result<Instance> {
    Ok(Instance::of_hypergraph(&instance::hypergraph(&instance::load(src)?, false)?))
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Symbolic { ideal, n } => {
            let i = SquarefreeIdeal::new(instance::ideal(&instance::load(ideal)?)?)?;
            let power = i.symbolic_power(*n)?;
            let gens: Vec<String> = power.generators().iter().map(|g| g.to_string()).collect();
            print_json(&json!({ "n": n, "generators": gens }))?;
            Ok(true)
        }
        Command::Equality { ideal, n, up_to } => certify(cli, Job::Equality { n: *n, up_to: *up_to }, load_ideal(ideal)?),
        Command::Waldschmidt { ideal, m } => certify(cli, Job::Waldschmidt { depth: *m }, load_ideal(ideal)?),
        Command::Packing { hypergraph } => certify(cli, Job::Packing, load_hypergraph(hypergraph)?),
        Command::Mengerian { hypergraph, cmax, cross_check } => {
            certify(cli, Job::Mengerian { c_max: *cmax, cross_check: *cross_check }, load_hypergraph(hypergraph)?)
        }
        Command::Badness { hypergraph } => certify(cli, Job::Badness, load_hypergraph(hypergraph)?),
        Command::Partition { hypergraph, r } => certify(cli, Job::Partition { r: *r }, load_hypergraph(hypergraph)?),
        Command::PathIdeal { graph, t } => {
            let g = instance::graph(&instance::load(graph)?)?;
            let paths = enumerate_t_paths(&g, *t)?;
            let gens: Vec<String> = path_ideal(&g, *t)?.generators().iter().map(|m| m.to_string()).collect();
            print_json(&json!({ "t": t, "paths": paths.paths, "generators": gens }))?;
            Ok(true)
        }
        Command::ClassifyCubic { graph, budget } => {
            let g = instance::graph(&instance::load(graph)?)?;
            certify(cli, Job::ClassifyCubic { budget: *budget }, Instance::of_graph(&g))
        }
        Command::Application { which, p, amax, pattern } => {
            if !matches!(which, 1 | 2) {
                return Err(InputError::Schema { path: "--which".into(), message: "must be 1 or 2".into() }.into());
            }
            let job = Job::Application { which: *which, p: *p, a_max: *amax, pattern: *pattern };
            certify(cli, job, Instance::None)
        }
        Command::Validate { hypergraph, strict } => {
            let h = instance::hypergraph(&instance::load(hypergraph)?, *strict)?;
            print_json(&h)?;
            Ok(true)
        }
        Command::Corpus { name: None } => {
            for e in corpus::ENTRIES {
                println!("{:<22} {:<11} {}", e.name, serde_json::to_value(e.kind)?.as_str().unwrap_or(""), e.description);
            }
            Ok(true)
        }
        Command::Corpus { name: Some(name) } => {
            let e = corpus::get(name).with_context(|| format!("no corpus entry named {name:?}"))?;
            print!("{}", e.text);
            Ok(true)
        }
        Command::Repro { section } => {
            let dir = cli.out_dir.clone().unwrap_or_else(|| PathBuf::from("sqfree-certificates"));
            let results = repro::run(*section, cli.seed, &dir)?;
            for r in &results {
                println!("{} {:<28} {} ({})", if r.passed { "PASS" } else { "FAIL" }, r.id, r.title, r.detail);
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            println!("{} items, {failed} failed; files in {}", results.len(), dir.display());
            Ok(failed == 0)
        }
        Command::Verify { certificate } => {
            let text = std::fs::read_to_string(certificate)
                .map_err(|e| InputError::Read { file: certificate.display().to_string(), message: e.to_string() })?;
            let v = certificate::verify(&text)?;
            print_json(&v)?;
            Ok(v.valid)
        }
    }
}
