mod output;
mod range;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use output::{emit, render, TableFormat};
use range::Span;
use supersat::constructions::{
    build_hstar, extremal_bowtie_free, realize_trifree, turan, upper_bound_graph, DegreeProfile, PartitionSpec,
    Variant,
};
use supersat::counting::{count, count_bowties, count_triangles, Count};
use supersat::formulas::{asymptotic_h, upper_bound_value, FormulaParams};
use supersat::io::{read_graph, write_graph, Format};
use supersat::optimizer::{minimize_f, DEFAULT_MAX_OFFSET};
use supersat::oracle::{ex_exact, extremal_uniqueness, h_exact, OracleConfig, DEFAULT_BUDGET};
use supersat::{Error, Graph};

#[derive(Parser)]
#[command(name = "supersat", version, about = "Bowtie counts, extremal constructions and supersaturation tables")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "SUPERSAT_THREADS")]
    threads: Option<usize>,
    /// Table format for reports.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: TableFormat,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count triangles and bowties in a graph file.
    Count {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "edge-list")]
        input_format: GraphFormat,
        /// Include per-vertex and per-edge triangle tallies.
        #[arg(long)]
        tallies: bool,
    },
    /// Build a graph family and write it as a graph file.
    Construct {
        #[arg(long, global = true, value_enum, default_value = "edge-list")]
        graph_format: GraphFormat,
        #[command(subcommand)]
        family: Family,
    },
    /// Evaluate the asymptotic formula and its parameters.
    Formula(Grid),
    /// Minimize the closed-form count over the extremal family.
    Optimize {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, default_value_t = DEFAULT_MAX_OFFSET)]
        max_offset: usize,
    },
    /// Exhaustive search on at most eight vertices.
    Oracle {
        #[command(subcommand)]
        kind: OracleKind,
        #[command(flatten)]
        opts: OracleOpts,
    },
    /// Compare oracle, optimizer, formula and upper bound over a grid.
    Verify {
        #[arg(long)]
        n_range: Span,
        #[arg(long)]
        q_range: Span,
        #[arg(long, default_value_t = DEFAULT_MAX_OFFSET)]
        max_offset: usize,
        /// Largest oracle search to attempt; larger cells are left blank.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    EdgeList,
    Graph6,
}

impl From<GraphFormat> for Format {
    fn from(f: GraphFormat) -> Self {
        match f {
            GraphFormat::EdgeList => Format::EdgeList,
            GraphFormat::Graph6 => Format::Graph6,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Larger,
    Smaller,
}

#[derive(Subcommand)]
enum Family {
    /// Complete r-partite graph with near-equal parts.
    Turan {
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
    /// T_2(n) plus one edge.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "larger")]
        variant: VariantArg,
    },
    /// T_2(n) plus q + 1 near-regular edges inside the larger part.
    UpperBound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: usize,
    },
    /// K(v1, v2) plus near-regular triangle-free graphs with b1 and b2 edges.
    Hstar {
        #[arg(long)]
        v1: usize,
        #[arg(long)]
        v2: usize,
        #[arg(long)]
        b1: usize,
        #[arg(long)]
        b2: usize,
    },
    /// Triangle-free graph with alpha vertices of degree a and beta of degree b.
    Trifree {
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        beta: usize,
        #[arg(long)]
        b: usize,
    },
    /// G(n, p) random graph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum OracleKind {
    /// Largest bowtie-free graphs.
    Ex {
        #[arg(long)]
        n: usize,
    },
    /// Fewest bowties with ex(n) + q edges.
    H {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: usize,
    },
    /// Isomorphism classes of the largest bowtie-free graphs.
    Uniqueness {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
struct OracleOpts {
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    #[arg(long, global = true, default_value_t = 10)]
    witnesses: usize,
    /// Disable bound pruning.
    #[arg(long, global = true)]
    no_prune: bool,
    /// Disable the max-degree symmetry restriction.
    #[arg(long, global = true)]
    no_symmetry: bool,
}

#[derive(Args)]
struct Grid {
    #[arg(long, conflicts_with = "n_range")]
    n: Option<usize>,
    #[arg(long, conflicts_with = "q_range")]
    q: Option<usize>,
    #[arg(long)]
    n_range: Option<Span>,
    #[arg(long)]
    q_range: Option<Span>,
}

impl Grid {
    fn cells(&self) -> Result<(Vec<(usize, usize)>, bool), Failure> {
        let pick = |single: Option<usize>, span: &Option<Span>, name: &str| match (single, span) {
            (Some(x), _) => Ok(vec![x]),
            (None, Some(s)) => Ok(s.values()),
            (None, None) => Err(Failure::Usage(format!("one of --{name} or --{name}-range is required"))),
        };
        let ns = pick(self.n, &self.n_range, "n")?;
        let qs = pick(self.q, &self.q_range, "q")?;
        let many = self.n_range.is_some() || self.q_range.is_some();
        Ok((ns.iter().flat_map(|&n| qs.iter().map(move |&q| (n, q))).collect(), many))
    }
}

enum Failure {
    Usage(String),
    Parse(String),
    Unrealizable(String),
    Invariant(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Unrealizable(_) => 3,
            Failure::Invariant(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Parse(m) | Failure::Unrealizable(m) | Failure::Invariant(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Parse { .. } | Error::UnsupportedHeader(_) => Failure::Parse(msg),
            Error::Unrealizable(reason) => Failure::Unrealizable(format!("unrealizable: {reason}")),
            Error::TooLarge { .. } | Error::BudgetExceeded { .. } => Failure::Usage(msg),
            _ => Failure::Unrealizable(msg),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

#[derive(Serialize)]
struct FormulaRow {
    n: usize,
    q: usize,
    d: usize,
    m: usize,
    e1: usize,
    e2: usize,
    value: Count,
}

#[derive(Serialize)]
struct VerifyRow {
    n: usize,
    q: usize,
    oracle: Option<Count>,
    optimizer: Option<Count>,
    realizable: Option<bool>,
    asymptotic_h: Option<Count>,
    formula_exact: Option<bool>,
    upper_bound: Option<Count>,
    upper_bound_graph: Option<Count>,
    oracle_matches: Option<bool>,
    violation: bool,
}

fn construct(family: &Family) -> Result<Graph, Failure> {
    Ok(match *family {
        Family::Turan { r, n } => {
            if r == 0 {
                return Err(Failure::Usage("--r must be at least 1".into()));
            }
            turan(r, n)
        }
        Family::Extremal { n, variant } => extremal_bowtie_free(
            n,
            match variant {
                VariantArg::Larger => Variant::LargerPart,
                VariantArg::Smaller => Variant::SmallerPart,
            },
        )?,
        Family::UpperBound { n, q } => upper_bound_graph(n, q)?,
        Family::Hstar { v1, v2, b1, b2 } => build_hstar(&PartitionSpec::near_regular(v1, v2, b1, b2)?)?,
        Family::Trifree { alpha, a, beta, b } => realize_trifree(&DegreeProfile::new(alpha, a, beta, b))?,
        Family::Random { n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Failure::Usage(format!("--p must lie in [0, 1], got {p}")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            Graph::from_edges(n, slots.into_iter().filter(|_| rng.gen_bool(p)))?
        }
    })
}

fn verify_row(n: usize, q: usize, max_offset: usize, budget: u128) -> VerifyRow {
    let oracle_cfg = OracleConfig { budget, witness_cap: 0, ..OracleConfig::default() };
    let oracle = (n <= 8).then(|| h_exact(n, q, &oracle_cfg).ok().map(|r| r.optimum)).flatten();
    let opt = minimize_f(n, q, max_offset).ok();
    let optimizer = opt.as_ref().map(|r| r.min_value);
    let asym = FormulaParams::new(n, q).and_then(|p| asymptotic_h(&p)).ok();
    let upper_bound = upper_bound_value(n, q).ok();
    let ub_graph = upper_bound_graph(n, q).ok().and_then(|g| count_bowties(&g).ok());
    let both = |a: Option<Count>, b: Option<Count>| Some((a?, b?));
    let violation = both(oracle, optimizer).is_some_and(|(h, t)| h > t)
        || both(ub_graph, upper_bound).is_some_and(|(c, b)| c > b);
    VerifyRow {
        n,
        q,
        oracle,
        optimizer,
        realizable: opt.as_ref().map(|r| r.realizable),
        asymptotic_h: asym,
        formula_exact: if n % 4 == 0 { both(optimizer, asym).map(|(t, h)| t == h) } else { None },
        upper_bound,
        upper_bound_graph: ub_graph,
        oracle_matches: both(oracle, optimizer).map(|(h, t)| h == t),
        violation,
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(Failure::Usage("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let out = cli.out.as_deref();
    let fmt = cli.format;
    match &cli.command {
        Command::Count { file, input_format, tallies } => {
            let bytes = std::fs::read(file).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
            let g = read_graph(&bytes, (*input_format).into())?;
            let report = if *tallies { count_triangles(&g)? } else { count(&g)? };
            emit(render(&[report], false, fmt).as_bytes(), out)?;
        }
        Command::Construct { graph_format, family } => {
            let g = construct(family)?;
            emit(&write_graph(&g, (*graph_format).into()), out)?;
        }
        Command::Formula(grid) => {
            let (cells, many) = grid.cells()?;
            let rows = cells
                .into_iter()
                .map(|(n, q)| {
                    let p = FormulaParams::new(n, q)?;
                    Ok(FormulaRow { n, q, d: p.d, m: p.m, e1: p.e1, e2: p.e2, value: asymptotic_h(&p)? })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            emit(render(&rows, many, fmt).as_bytes(), out)?;
        }
        Command::Optimize { grid, max_offset } => {
            let (cells, many) = grid.cells()?;
            let rows = cells
                .into_iter()
                .map(|(n, q)| minimize_f(n, q, *max_offset))
                .collect::<Result<Vec<_>, Error>>()?;
            for r in rows.iter().filter(|r| !r.realizable) {
                eprintln!(
                    "warning: no cell is triangle-free realizable for n = {}, q = {}; reporting the relaxed minimum",
                    r.n, r.q
                );
            }
            emit(render(&rows, many, fmt).as_bytes(), out)?;
        }
        Command::Oracle { kind, opts } => {
            let cfg = OracleConfig {
                threads: None,
                budget: opts.budget,
                witness_cap: opts.witnesses,
                bound_pruning: !opts.no_prune,
                symmetry: !opts.no_symmetry,
                ..OracleConfig::default()
            };
            let text = match *kind {
                OracleKind::Ex { n } => render(&[ex_exact(n, &cfg)?], false, fmt),
                OracleKind::H { n, q } => render(&[h_exact(n, q, &cfg)?], false, fmt),
                OracleKind::Uniqueness { n } => render(&[extremal_uniqueness(n, &cfg)?], false, fmt),
            };
            emit(text.as_bytes(), out)?;
        }
        Command::Verify { n_range, q_range, max_offset, budget } => {
            let rows: Vec<VerifyRow> = n_range
                .values()
                .into_iter()
                .flat_map(|n| q_range.values().into_iter().map(move |q| (n, q)))
                .map(|(n, q)| verify_row(n, q, *max_offset, *budget))
                .collect();
            emit(render(&rows, true, fmt).as_bytes(), out)?;
            let bad: Vec<String> = rows.iter().filter(|r| r.violation).map(|r| format!("({},{})", r.n, r.q)).collect();
            if !bad.is_empty() {
                return Err(Failure::Invariant(format!("invariant violated at {}", bad.join(" "))));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("supersat: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
