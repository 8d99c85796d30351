//! Command-line front end: analyze one graph, run the survey, build
//! confusion graphs, enumerate isomorphism classes.
//!
//! Exit codes: 0 success, 1 assertion/verification failure, 2 parse error,
//! 3 resource limit exceeded.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use indexcode::bounds::{self, mais, minrank2, shannon_lower_bound, verify_entropy_chain};
use indexcode::codes::{self, LinearCode};
use indexcode::confusion;
use indexcode::digraph::{self, Digraph};
use indexcode::error::Error;
use indexcode::exceptional::ExceptionalSet;
use indexcode::structure;
use indexcode::survey;

#[derive(Parser)]
#[command(
    name = "indexcode",
    about = "Exact bounds and optimal codes for unicast index coding on small graphs",
    version
)]
struct Cli {
    /// Worker threads for parallel sections (default: INDEXCODE_JOBS or all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one graph: bounds, classification, optimal code.
    Analyze {
        /// Edge-list file, inline record (e.g. "n=3; 1->2,2->3,3->1"), or - for stdin.
        graph: String,
        /// Alphabet base for the decodability check.
        #[arg(long, default_value_t = 2)]
        m: u32,
        /// Vector length per message for the decodability check (defaults to
        /// the constructed code's own t).
        #[arg(long)]
        t: Option<u32>,
        /// Report bounds and classification only, skipping code construction.
        #[arg(long)]
        bounds_only: bool,
        /// Also build the confusion graph at (m, t) and report its
        /// chromatic number, when within the size budget.
        #[arg(long)]
        confusion: bool,
        /// Dump JSON certificates (LP duals, fitting matrix, structures).
        #[arg(long)]
        certificates: bool,
    },
    /// Survey every isomorphism class on up to N vertices.
    Survey {
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Write one JSON report per line to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the confusion graph and compute its chromatic number.
    Confusion {
        graph: String,
        m: u32,
        t: u32,
        /// Export the confusion graph in DIMACS format.
        #[arg(long)]
        dimacs: Option<PathBuf>,
    },
    /// Print one representative per isomorphism class on N vertices.
    Enumerate { n: usize },
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes, like other line tools.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let jobs = cli
        .jobs
        .or_else(|| std::env::var("INDEXCODE_JOBS").ok().and_then(|v| v.parse().ok()));
    if let Some(jobs) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .ok();
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::Parse(_))
        | Some(Error::SelfLoop(_))
        | Some(Error::DuplicateArc(..))
        | Some(Error::VertexOutOfRange(..)) => 2,
        Some(Error::TooLarge(_)) | Some(Error::ArcBound(..)) | Some(Error::OrderOutOfRange(..)) => 3,
        _ => 1,
    }
}

fn load_graph(spec: &str) -> anyhow::Result<Digraph> {
    let text = if spec == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else if spec.contains("n=") {
        spec.replace(';', "\n")
    } else {
        fs::read_to_string(spec)
            .map_err(|e| Error::Parse(format!("cannot read graph file `{spec}`: {e}")))?
    };
    let mut graphs = digraph::parse_edge_lists(&text)?;
    if graphs.len() != 1 {
        anyhow::bail!(Error::Parse(format!("expected one graph record, found {}", graphs.len())));
    }
    Ok(graphs.pop().unwrap())
}

fn render_rows(code: &LinearCode) -> Vec<String> {
    code.rows
        .iter()
        .map(|row| {
            let terms: Vec<String> = (0..code.n)
                .flat_map(|i| (0..code.t).map(move |s| (i, s)))
                .filter(|&(i, s)| row[i * code.t + s] != 0)
                .map(|(i, s)| {
                    let coef = row[i * code.t + s];
                    let var = if code.t == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}[{}]", i + 1, s)
                    };
                    if coef == 1 {
                        var
                    } else {
                        format!("{coef}*{var}")
                    }
                })
                .collect();
            terms.join(" + ")
        })
        .collect()
}

fn run(cmd: Command) -> anyhow::Result<()> {
    match cmd {
        Command::Analyze { graph, m, t, bounds_only, confusion, certificates } => {
            analyze(&graph, m, t, bounds_only, confusion, certificates)
        }
        Command::Survey { n, out } => run_survey(n, out),
        Command::Confusion { graph, m, t, dimacs } => run_confusion(&graph, m, t, dimacs),
        Command::Enumerate { n } => {
            let classes = digraph::enumerate_nonisomorphic(n)?;
            let mut stdout = std::io::stdout().lock();
            for g in &classes {
                stdout.write_all(digraph::format_edge_list(g).as_bytes())?;
            }
            eprintln!("{} non-isomorphic classes on {} vertices", classes.len(), n);
            Ok(())
        }
    }
}

fn analyze(
    graph: &str,
    m: u32,
    t: Option<u32>,
    bounds_only: bool,
    with_confusion: bool,
    certificates: bool,
) -> anyhow::Result<()> {
    let g = load_graph(graph)?;
    let n = g.n();
    println!("vertices: {n}");
    println!("arcs:     {}", g.arc_count());
    let (mais_val, witness) = mais(&g);
    println!("mais:     {mais_val} (witness {witness:?})");

    let minrank = if g.arc_count() <= bounds::MAX_ARCS && n <= 8 {
        let (k, mx) = minrank2(&g)?;
        println!("minrank2: {k}");
        Some((k, mx))
    } else {
        println!("minrank2: skipped (arc count or order beyond search bound)");
        None
    };
    let shannon = if n <= 6 {
        let v = shannon_lower_bound(&g)?;
        println!("entropic: {v}");
        Some(v)
    } else {
        println!("entropic: skipped (n > 6)");
        None
    };

    // Classification and construction.
    let exc = if n == 5 { Some(ExceptionalSet::build()?) } else { None };
    let matched = match &exc {
        Some(set) => set.classify(&g)?.is_some(),
        None => false,
    };
    let code: Option<LinearCode> = if bounds_only {
        println!(
            "class:    {}",
            if matched { "exceptional (optimal rate 5/2 at even vector lengths)" } else { "bounds only requested" }
        );
        None
    } else if matched {
        println!("class:    exceptional (optimal rate 5/2 at even vector lengths)");
        Some(exc.as_ref().unwrap().vector_code(&g)?)
    } else if mais_val == 1 {
        println!("class:    standard (r = mais = 1)");
        Some(LinearCode::scalar_from_rows(n, [(0..n).collect::<Vec<_>>()]))
    } else if mais_val + 2 >= n {
        println!("class:    standard (r = mais = {mais_val})");
        Some(codes::mais_achieving_code(&g)?)
    } else if n == 5 && mais_val == 2 {
        println!("class:    standard (r = mais = 2)");
        Some(codes::length_two_code(&g)?.0)
    } else {
        println!("class:    undetermined here (bounds only; mais gap exceeds the constructions)");
        None
    };

    if let Some(code) = &code {
        let (p, ct) = code.normalized_len();
        println!("code:     p={p}, t={ct}, normalized length {}", if ct == 1 {
            format!("{p}")
        } else {
            format!("{p}/{ct}")
        });
        for (k, row) in render_rows(code).iter().enumerate() {
            println!("  y{} = {row}", k + 1);
        }
        for r in code.degenerate_rows() {
            println!("  note: row y{} is a bare message (receiver without usable side information)", r + 1);
        }
        let vt = t.unwrap_or(code.t as u32);
        let ok = codes::verify_decodable(&g, code, m, vt)?;
        println!("verified: m={m}, t={vt} -> {}", if ok { "decodable" } else { "NOT DECODABLE" });
        if !ok {
            anyhow::bail!(Error::SurveyAssertion {
                id: g.canonical_form()?.id(),
                reason: "constructed code failed verification".into(),
            });
        }
    }

    if with_confusion {
        let vt = t.unwrap_or(1);
        let cg = confusion::build_confusion(&g, m, vt)?;
        match confusion::chromatic_number(&cg) {
            confusion::Chromatic::Exact { chi, .. } => println!(
                "confusion: {} vertices, {} edges, chi={chi}, rate={:.4}",
                cg.vertices,
                cg.edges,
                confusion::exact_rate(chi, m, vt)
            ),
            confusion::Chromatic::Interval { lower, upper, .. } => println!(
                "confusion: {} vertices, {} edges, chi in [{lower}, {upper}] (not exact)",
                cg.vertices, cg.edges
            ),
        }
    }

    if certificates {
        let mut cert = serde_json::Map::new();
        cert.insert("canonical_id".into(), g.canonical_form()?.id().into());
        if let Some(v) = shannon {
            let lp = bounds::shannon_lower_bound_with_certificate(&g)?;
            cert.insert("entropic".into(), serde_json::to_value(&lp)?);
            debug_assert_eq!((*v.numer(), *v.denom()), (lp.value_num, lp.value_den));
        }
        if let Some((_, mx)) = &minrank {
            cert.insert("fitting_matrix".into(), serde_json::to_value(mx.dense())?);
        }
        if let Some(code) = &code {
            cert.insert("code".into(), serde_json::to_value(code)?);
        }
        if verify_entropy_chain(&g).is_ok() {
            cert.insert("entropy_chain".into(), "replayed: H(Y) >= 5/2".into());
        }
        if n <= 8 {
            if let Some(tc) = structure::find_tri_cycle(&g) {
                cert.insert("tri_cycle".into(), serde_json::to_value(&tc)?);
            }
        }
        println!("{}", serde_json::to_string_pretty(&serde_json::Value::Object(cert))?);
    }
    Ok(())
}

fn run_survey(n: usize, out: Option<PathBuf>) -> anyhow::Result<()> {
    let outcome = survey::full_survey(n)?;
    if let Some(path) = out {
        let mut f = fs::File::create(&path)?;
        for r in &outcome.reports {
            serde_json::to_writer(&mut f, r)?;
            f.write_all(b"\n")?;
        }
        eprintln!("wrote {} reports to {}", outcome.reports.len(), path.display());
    }
    print!("{}", outcome.summary.table_text());
    println!("{}", outcome.summary.one_line());
    if n == 5 {
        let audit = survey::audit_dense_classes()?;
        println!(
            "audit: dense classes {}, triples without cycle {}, quads without edge {}, uncovered {}",
            audit.dense_classes,
            audit.triple_without_cycle.len(),
            audit.quad_without_edge.len(),
            audit.uncovered.len()
        );
        if !audit.clean() {
            anyhow::bail!(Error::SurveyAssertion {
                id: "audit".into(),
                reason: "structural audit found violations".into(),
            });
        }
    }
    Ok(())
}

fn run_confusion(graph: &str, m: u32, t: u32, dimacs: Option<PathBuf>) -> anyhow::Result<()> {
    let g = load_graph(graph)?;
    let cg = confusion::build_confusion(&g, m, t)?;
    println!("vertices: {}", cg.vertices);
    println!("edges:    {}", cg.edges);
    if let Some(path) = dimacs {
        fs::write(&path, cg.to_dimacs())?;
        eprintln!("wrote DIMACS graph to {}", path.display());
    }
    match confusion::chromatic_number(&cg) {
        confusion::Chromatic::Exact { chi, .. } => {
            println!("chi:      {chi}");
            println!("rate:     {:.4}", confusion::exact_rate(chi, m, t));
            if (m, t) == (2, 1) {
                println!("binary-restricted length: {}", confusion::binary_restricted_length(chi));
            }
        }
        confusion::Chromatic::Interval { lower, upper, .. } => {
            println!("chi:      in [{lower}, {upper}] (search budget exceeded; not exact)");
            println!(
                "rate:     in [{:.4}, {:.4}]",
                confusion::exact_rate(lower, m, t),
                confusion::exact_rate(upper, m, t)
            );
        }
    }
    Ok(())
}
