//! `gqv`: command-line front end for graph algebras and the quasivarieties
//! they generate.
//!
//! Exit codes: 0 affirmative verdict (or plain output), 1 negative verdict,
//! 2 usage or input error, 3 capacity error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gqv_core::algebra::{sigma, Assignment, Checker, Identity, Implication, Mode, Satisfaction};
use gqv_core::forbidden::{perfect_graph_axioms, term_graph_implication, xi_family};
use gqv_core::quasivariety::{build_sps_embedding, membership, witness_implication, Failure, MembershipEvidence};
use gqv_core::term::{graph_to_term, term_graph, Term};
use gqv_core::{Error, Graph};

#[derive(Parser)]
#[command(name = "gqv", version, about = "Graph algebras, quasi-identities and quasivariety membership")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse terms, build term graphs, and synthesize terms from rooted graphs.
    #[command(subcommand)]
    Term(TermCmd),
    /// Check an identity or implication in a graph algebra.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Decide whether W lies in the quasivariety generated by K1, K2, ...
    Member(MemberArgs),
    /// Emit identity and implication sets.
    #[command(subcommand)]
    Encode(EncodeCmd),
}

#[derive(Subcommand)]
enum TermCmd {
    /// Print the syntax tree of a term.
    Parse {
        term: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the term graph G(t) as JSON.
    Graph {
        term: String,
        /// Wrap the graph together with its root.
        #[arg(long)]
        json: bool,
    },
    /// Synthesize a term whose term graph is the given rooted graph.
    FromGraph {
        file: PathBuf,
        #[arg(long)]
        root: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct CheckOpts {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    json: bool,
    /// Run searches beyond the size guardrails.
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Fast,
    Brute,
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Check an identity `s =~ t`.
    Id {
        identity: String,
        #[arg(long, value_enum, default_value = "fast")]
        mode: ModeArg,
        #[command(flatten)]
        opts: CheckOpts,
    },
    /// Check an implication `s1 =~ t1 & ... -> s =~ t`.
    Imp {
        implication: String,
        #[command(flatten)]
        opts: CheckOpts,
    },
}

#[derive(Args)]
struct MemberArgs {
    w: PathBuf,
    k: Vec<PathBuf>,
    /// On non-membership, print a separating implication.
    #[arg(long)]
    witness: bool,
    /// On membership, print the strong pointed subproduct embedding.
    #[arg(long)]
    embed: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum EncodeCmd {
    /// The identities Σ(G).
    Sigma {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// The implication family forbidding strong images of G, with φ bounded by N.
    Xi {
        file: PathBuf,
        #[arg(long)]
        bound: usize,
        #[arg(long)]
        json: bool,
    },
    /// Implications axiomatizing perfect graphs up to C_{2k+1}.
    Perfect {
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        json: bool,
    },
    /// The single implication forbidding strong images of G(t).
    ForbidTerm {
        term: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_capacity() => 3,
            _ => 2,
        }
    }
}

type Outcome = Result<bool, CliError>;

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    Ok(Graph::parse_any(&text)?)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
}

fn tree(t: &Term, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match t {
        Term::Var(x) => out.push_str(&format!("{pad}var {x}\n")),
        Term::Inf => out.push_str(&format!("{pad}inf\n")),
        Term::App(l, r) => {
            out.push_str(&format!("{pad}app\n"));
            tree(l, depth + 1, out);
            tree(r, depth + 1, out);
        }
    }
}

fn show_assignment(h: &Assignment) -> String {
    h.iter().map(|(x, v)| format!("{x}={v}")).collect::<Vec<_>>().join(", ")
}

fn run_term(cmd: TermCmd) -> Outcome {
    match cmd {
        TermCmd::Parse { term, json } => {
            let t = Term::parse(&term)?;
            if json {
                print_json(&serde_json::to_value(&t).expect("terms serialize"));
            } else {
                let mut out = String::new();
                tree(&t, 0, &mut out);
                print!("{out}");
            }
        }
        TermCmd::Graph { term, json } => {
            let tg = term_graph(&Term::parse(&term)?)?;
            if json {
                print_json(&json!({ "root": tg.root, "graph": tg.graph }));
            } else {
                println!("{}", tg.graph.to_json());
            }
        }
        TermCmd::FromGraph { file, root, json } => {
            let t = graph_to_term(&read_graph(&file)?, &root)?;
            if json {
                print_json(&serde_json::to_value(&t).expect("terms serialize"));
            } else {
                println!("{t}");
            }
        }
    }
    Ok(true)
}

fn report_satisfaction(s: &Satisfaction, json: bool) -> bool {
    let cm = s.countermodel();
    if json {
        let verdict = if s.holds() { "holds" } else { "violated" };
        print_json(&json!({ "verdict": verdict, "countermodel": cm }));
    } else if let Some(h) = cm {
        println!("violated");
        println!("countermodel: {}", show_assignment(h));
    } else {
        println!("holds");
    }
    s.holds()
}

fn run_check(cmd: CheckCmd) -> Outcome {
    match cmd {
        CheckCmd::Id { identity, mode, opts } => {
            let g = read_graph(&opts.graph)?;
            let id = Identity::parse(&identity)?;
            let checker = Checker::new(&g).force(opts.force);
            let mode = match mode {
                ModeArg::Fast => Mode::Fast,
                ModeArg::Brute => Mode::Brute,
            };
            let s = if checker.identity(&id, mode)? {
                Satisfaction::Holds
            } else {
                let h = checker.identity_countermodel(&id)?.ok_or_else(|| {
                    Error::Internal(format!("no countermodel for the violated identity {id}"))
                })?;
                Satisfaction::Violated(h)
            };
            Ok(report_satisfaction(&s, opts.json))
        }
        CheckCmd::Imp { implication, opts } => {
            let g = read_graph(&opts.graph)?;
            let imp = Implication::parse(&implication)?;
            let s = Checker::new(&g).force(opts.force).implication(&imp)?;
            Ok(report_satisfaction(&s, opts.json))
        }
    }
}

fn describe_failure(f: &Failure) -> String {
    match f {
        Failure::Unmappable { vertex } => {
            format!("condition (a) fails: reach({vertex}) has no strong homomorphism into K")
        }
        Failure::Inseparable { pair: (a, b), .. } => {
            format!("condition (b) fails: no strong homomorphism of reach({a}) into K separates {a} and {b}")
        }
    }
}

fn run_member(args: MemberArgs) -> Outcome {
    let w = read_graph(&args.w)?;
    let k = args.k.iter().map(|p| read_graph(p)).collect::<Result<Vec<_>, _>>()?;
    let ev: MembershipEvidence = membership(&w, &k);
    if ev.verdict && args.witness {
        eprintln!("warning: --witness ignored, W is a member");
    }
    if !ev.verdict && args.embed {
        eprintln!("warning: --embed ignored, W is not a member");
    }
    let witness = if !ev.verdict && args.witness { Some(witness_implication(&w, &k)?) } else { None };
    let embedding = if ev.verdict && args.embed { Some(build_sps_embedding(&w, &k)?) } else { None };
    if args.json {
        let embedding: Option<Value> =
            embedding.map(|e| serde_json::from_str(&e.to_json()).expect("embedding JSON is valid"));
        print_json(&json!({
            "verdict": if ev.verdict { "member" } else { "non-member" },
            "evidence": ev,
            "witness": witness,
            "witness_standardized": witness.as_ref().map(Implication::standardized),
            "embedding": embedding,
        }));
    } else {
        if ev.verdict {
            println!("member");
        } else {
            println!("non-member");
            if let Some(f) = &ev.failure {
                println!("{}", describe_failure(f));
            }
        }
        if let Some(imp) = witness {
            println!("witness: {imp}");
            println!("standardized: {}", imp.standardized());
        }
        if let Some(e) = embedding {
            println!("{}", e.to_json());
        }
    }
    Ok(ev.verdict)
}

fn emit<T: serde::Serialize + std::fmt::Display>(items: &[T], json: bool) {
    if json {
        print_json(&serde_json::to_value(items).expect("formulas serialize"));
    } else {
        for i in items {
            println!("{i}");
        }
    }
}

fn run_encode(cmd: EncodeCmd) -> Outcome {
    match cmd {
        EncodeCmd::Sigma { file, json } => emit(&sigma(&read_graph(&file)?), json),
        EncodeCmd::Xi { file, bound, json } => emit(&xi_family(&read_graph(&file)?, bound)?, json),
        EncodeCmd::Perfect { kmax, json } => emit(&perfect_graph_axioms(kmax)?, json),
        EncodeCmd::ForbidTerm { term, json } => emit(&[term_graph_implication(&Term::parse(&term)?)?], json),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Term(c) => run_term(c),
        Command::Check(c) => run_check(c),
        Command::Member(a) => run_member(a),
        Command::Encode(c) => run_encode(c),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
