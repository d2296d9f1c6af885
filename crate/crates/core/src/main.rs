use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use herg::corpus::{corpus, gen};
use herg::dual::dual;
use herg::invariants::{duality_subst, expand_x, invariant, InvariantKind, InvariantValue};
use herg::io::{parse, serialize};
use herg::iso::isomorphic;
use herg::topology::{classify, components, embedding_signature, trace_boundary};
use herg::verify::{verify_all, Suite};
use herg::Herg;

#[derive(Parser)]
#[command(name = "herg", version, about = "Half-edge ribbon graphs: topology, duality and polynomial invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print counts and surface data as `key = value` lines.
    Info { file: PathBuf },
    /// Write the geometric dual.
    Dual {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print a polynomial invariant.
    Poly {
        file: PathBuf,
        #[arg(long)]
        kind: InvariantKind,
        /// Only `duality` is supported.
        #[arg(long, value_parser = ["duality"])]
        subst: Option<String>,
        /// Print `x` instead of `xm1 = x - 1`.
        #[arg(long)]
        expand_x: bool,
    },
    /// Exit 0 iff the two graphs are isomorphic.
    Iso {
        file1: PathBuf,
        file2: PathBuf,
        /// Also allow a global mirror image.
        #[arg(long)]
        reflect: bool,
    },
    /// Generate a seeded random graph.
    Gen {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        halves: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        twists: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check identities on one file or on the generated corpus.
    Verify {
        #[arg(required_unless_present = "corpus", conflicts_with = "corpus")]
        file: Option<PathBuf>,
        #[arg(long)]
        corpus: bool,
        #[arg(long, default_value_t = 6)]
        max_edges: usize,
        #[arg(long, default_value_t = 3)]
        seed: u64,
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
}

fn load(path: &Path) -> Result<Herg> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn info(g: &Herg) {
    let faces = trace_boundary(g);
    let cls = classify(g);
    let sig = embedding_signature(g);
    let rows: [(&str, String); 14] = [
        ("v", g.vertex_count().to_string()),
        ("e", g.edge_count().to_string()),
        ("|H|", g.half_count().to_string()),
        ("k", components(g).0.to_string()),
        ("f_int", faces.f_int.to_string()),
        ("f_ext", faces.f_ext.to_string()),
        ("C_ext", faces.c_ext.to_string()),
        ("V_int", cls.v_int.to_string()),
        ("V_ext", cls.v_ext.to_string()),
        ("chi", sig.chi.to_string()),
        ("gamma", sig.genus.to_string()),
        ("orientable", sig.orientable.to_string()),
        ("punctures_proper", sig.punctures_proper.to_string()),
        ("punctures_hproper", sig.punctures_hproper.to_string()),
    ];
    for (k, v) in rows {
        println!("{k} = {v}");
    }
}

fn poly(g: &Herg, kind: InvariantKind, subst: bool, expand: bool) -> Result<String> {
    let value = invariant(g, kind);
    let over_invariant_vars = matches!(kind, InvariantKind::RCut | InvariantKind::RSpan);
    if (subst || expand) && !over_invariant_vars {
        bail!("--subst and --expand-x apply to RCut and RSpan only");
    }
    let p = match value {
        InvariantValue::Plain(p) if subst => duality_subst(&p),
        InvariantValue::Plain(p) if expand => expand_x(&p),
        v => v.poly().clone(),
    };
    Ok(p.to_string())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Info { file } => info(&load(&file)?),
        Command::Dual { file, output } => emit(&serialize(&dual(&load(&file)?).0), output.as_deref())?,
        Command::Poly { file, kind, subst, expand_x } => {
            println!("{}", poly(&load(&file)?, kind, subst.is_some(), expand_x)?);
        }
        Command::Iso { file1, file2, reflect } => {
            let found = isomorphic(&load(&file1)?, &load(&file2)?, reflect).is_some();
            println!("{}", if found { "isomorphic" } else { "not isomorphic" });
            return Ok(if found { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Command::Gen { vertices, edges, halves, seed, twists, output } => {
            let g = gen(vertices, edges, halves, seed, twists)?;
            emit(&serialize(&g), output.as_deref())?;
        }
        Command::Verify { file, corpus: _, max_edges, seed, suite } => {
            let graphs = match file {
                Some(f) => vec![load(&f)?],
                None => corpus(max_edges, seed),
            };
            let report = verify_all(&graphs, suite);
            println!("{report}");
            return Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
