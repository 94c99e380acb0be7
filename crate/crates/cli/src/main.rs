use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use zeta_slp::labeling::{dual_labeling, is_u_labeling_with, make_injective, semimodular_labeling};
use zeta_slp::oracle::{verify_slp_with, Verdict};
use zeta_slp::transforms::{
    compile_mobius_bjorklund, compile_mobius_edges, compile_zeta_bjorklund, compile_zeta_edges,
};
use zeta_slp::{generators, EdgeLabeling, JirOrder, Kind, LatticeInfo, Poset, Slp, Strategy};

/// Each invocation runs on one thread.
const STRATEGY: Strategy = Strategy::Sequential;

fn lattice(poset: &Poset) -> zeta_slp::Result<LatticeInfo> {
    LatticeInfo::with_strategy(poset, STRATEGY)
}

#[derive(Parser)]
#[command(name = "zeta-slp", version, about = "Compile zeta and Möbius transforms of finite lattices into straight-line programs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named poset family in poset file format.
    Gen {
        #[arg(value_enum)]
        family: Family,
        /// Size parameter (chain length, boolean rank, N, partition size, k).
        param: Option<u64>,
        /// Emit the order dual instead.
        #[arg(long)]
        dual: bool,
    },
    /// Report size parameters and structural predicates.
    Analyze {
        /// Poset file, `-` or omitted for stdin.
        poset: Option<PathBuf>,
    },
    /// Compile a transform into a straight-line program.
    Compile {
        poset: PathBuf,
        #[arg(long, value_enum)]
        algorithm: Algorithm,
        #[arg(long, value_enum, default_value_t = OrderArg::Height)]
        order: OrderArg,
        /// `semimodular` or `file:<path>` (edge algorithms only).
        #[arg(long, default_value = "semimodular")]
        labeling: String,
        /// Relabel ties before compiling along edges.
        #[arg(long)]
        injectivize: bool,
    },
    /// Build, transform or check an edge labeling.
    Label {
        poset: PathBuf,
        /// Start from the semimodular labeling (default when no --input).
        #[arg(long, conflicts_with = "input")]
        semimodular: bool,
        /// Start from a labeling file.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OrderArg::Height)]
        order: OrderArg,
        /// Negate labels and move to the dual poset.
        #[arg(long)]
        dual: bool,
        #[arg(long)]
        make_injective: bool,
        /// Print the unique-rising-chain verdict instead of the labeling.
        #[arg(long)]
        check: bool,
    },
    /// Check a program against the exact ζ or μ matrix.
    Verify {
        poset: PathBuf,
        slp: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Tabulate program lengths across the built-in families.
    Bench,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Chain,
    Boolean,
    Divisor,
    Partition,
    Pentagon,
    Hexagon,
    ParallelChains,
    Figure1,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    ZetaBjorklund,
    MobiusBjorklund,
    ZetaEdges,
    MobiusEdges,
}

impl Algorithm {
    fn label(self) -> &'static str {
        match self {
            Algorithm::ZetaBjorklund => "zeta-bjorklund",
            Algorithm::MobiusBjorklund => "mobius-bjorklund",
            Algorithm::ZetaEdges => "zeta-edges",
            Algorithm::MobiusEdges => "mobius-edges",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Height,
    Id,
    ReverseHeight,
}

impl OrderArg {
    fn build(self, lattice: &LatticeInfo) -> JirOrder {
        match self {
            OrderArg::Height => JirOrder::by_height(lattice),
            OrderArg::Id => JirOrder::by_id(lattice),
            OrderArg::ReverseHeight => JirOrder::by_reverse_height(lattice),
        }
    }

    fn label(self) -> &'static str {
        match self {
            OrderArg::Height => "height",
            OrderArg::Id => "id",
            OrderArg::ReverseHeight => "reverse-height",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Zeta,
    Moebius,
}

/// Failure modes mapped onto exit codes.
enum Failure {
    /// Usage or parse error (exit 2).
    Usage(String),
    /// The checked object is wrong (exit 1).
    Rejected(String),
}

impl From<zeta_slp::Error> for Failure {
    fn from(e: zeta_slp::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult = Result<String, Failure>;

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        None => read_stdin(),
        Some(p) if p.as_os_str() == "-" => read_stdin(),
        Some(p) => fs::read_to_string(p)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display()))),
    }
}

fn read_stdin() -> Result<String, Failure> {
    let mut text = String::new();
    io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
    Ok(text)
}

fn load_poset(path: Option<&Path>) -> Result<Poset, Failure> {
    Ok(Poset::parse(&read_input(path)?)?)
}

fn gen(family: Family, param: Option<u64>, dual: bool) -> CliResult {
    let need = |what: &str| {
        param.ok_or_else(|| Failure::Usage(format!("this family needs a {what} parameter")))
    };
    let small = |what: &str| need(what).map(|p| p as usize);
    let poset = match family {
        Family::Chain => generators::chain(small("length")?)?,
        Family::Boolean => generators::boolean(small("rank")?)?,
        Family::Divisor => generators::divisor(need("N")?)?,
        Family::Partition => generators::partition(small("size")?)?,
        Family::ParallelChains => generators::parallel_chains(small("k")?)?,
        Family::Pentagon => generators::pentagon(),
        Family::Hexagon => generators::hexagon(),
        Family::Figure1 => generators::figure1(),
    };
    Ok(if dual { poset.dual() } else { poset }.to_text())
}

fn analyze(path: Option<&Path>) -> CliResult {
    let poset = load_poset(path)?;
    let mut out = String::new();
    writeln!(out, "v={}", poset.len()).unwrap();
    writeln!(out, "n={}", poset.join_irreducibles().len()).unwrap();
    writeln!(out, "e={}", poset.edge_count()).unwrap();
    match lattice(&poset) {
        Ok(l) => {
            let semimodular = l.is_semimodular();
            let u_labeled = semimodular
                && semimodular_labeling(&l, &JirOrder::by_height(&l))
                    .map(|lab| is_u_labeling_with(&poset, &lab, STRATEGY).is_u_labeling())
                    .unwrap_or(false);
            writeln!(out, "lattice=true").unwrap();
            writeln!(out, "atomic={}", l.is_atomic()).unwrap();
            writeln!(out, "semimodular={semimodular}").unwrap();
            writeln!(out, "geometric={}", l.is_geometric()).unwrap();
            writeln!(out, "cover_condition={}", l.satisfies_cover_condition()).unwrap();
            writeln!(out, "semimodular_u_labeling={u_labeled}").unwrap();
        }
        Err(reason) => {
            writeln!(out, "lattice=false").unwrap();
            writeln!(out, "reason={reason}").unwrap();
            for key in ["atomic", "semimodular", "geometric", "cover_condition", "semimodular_u_labeling"] {
                writeln!(out, "{key}=n/a").unwrap();
            }
        }
    }
    Ok(out)
}

fn edge_labeling(
    poset: &Poset,
    spec: &str,
    order: OrderArg,
    injectivize: bool,
) -> Result<EdgeLabeling, Failure> {
    let labeling = if spec == "semimodular" {
        let l = lattice(poset)?;
        semimodular_labeling(&l, &order.build(&l))?
    } else if let Some(path) = spec.strip_prefix("file:") {
        EdgeLabeling::parse(poset, &read_input(Some(Path::new(path)))?)?
    } else {
        return Err(Failure::Usage(format!(
            "--labeling must be `semimodular` or `file:<path>`, got `{spec}`"
        )));
    };
    Ok(if injectivize {
        make_injective(poset, &labeling)
    } else {
        labeling
    })
}

fn compile_program(
    poset: &Poset,
    algorithm: Algorithm,
    order: OrderArg,
    labeling: &str,
    injectivize: bool,
) -> Result<Slp, Failure> {
    Ok(match algorithm {
        Algorithm::ZetaBjorklund | Algorithm::MobiusBjorklund => {
            let l = lattice(poset)?;
            let ord = order.build(&l);
            if algorithm == Algorithm::ZetaBjorklund {
                compile_zeta_bjorklund(&l, &ord)
            } else {
                compile_mobius_bjorklund(&l, &ord)
            }
        }
        Algorithm::ZetaEdges => {
            compile_zeta_edges(poset, &edge_labeling(poset, labeling, order, injectivize)?)?
        }
        Algorithm::MobiusEdges => {
            compile_mobius_edges(poset, &edge_labeling(poset, labeling, order, injectivize)?)?
        }
    })
}

fn label(
    poset: &Path,
    input: Option<&Path>,
    order: OrderArg,
    dual: bool,
    injective: bool,
    check: bool,
) -> CliResult {
    let mut poset = load_poset(Some(poset))?;
    let mut labeling = match input {
        Some(path) => EdgeLabeling::parse(&poset, &read_input(Some(path))?)?,
        None => {
            let l = lattice(&poset)?;
            semimodular_labeling(&l, &order.build(&l))?
        }
    };
    if dual {
        labeling = dual_labeling(&labeling);
        poset = poset.dual();
    }
    if injective {
        labeling = make_injective(&poset, &labeling);
    }
    if !check {
        return Ok(labeling.to_text(&poset));
    }
    let report = is_u_labeling_with(&poset, &labeling, STRATEGY);
    match report.witness() {
        None => Ok("u_labeling=true\n".into()),
        Some((x, y, count)) => Err(Failure::Rejected(format!(
            "u_labeling=false\nwitness={} {}\nrising_chains={}\n",
            poset.name(x),
            poset.name(y),
            if count >= 2 { "2+".to_string() } else { count.to_string() }
        ))),
    }
}

fn verify(poset: &Path, slp: &Path, kind: KindArg) -> CliResult {
    let poset = load_poset(Some(poset))?;
    let program = Slp::parse(&read_input(Some(slp))?)?;
    let kind = match kind {
        KindArg::Zeta => Kind::Zeta,
        KindArg::Moebius => Kind::Moebius,
    };
    match verify_slp_with(&poset, &program, kind, STRATEGY)? {
        Verdict::Match => Ok(format!("ok: {} operations compute {kind}\n", program.len())),
        Verdict::Mismatch(d) => Err(Failure::Rejected(format!(
            "mismatch at ({}, {}): got {}, want {}\n",
            poset.name(d.row),
            poset.name(d.col),
            d.got,
            d.want
        ))),
    }
}

fn bench() -> CliResult {
    let mut instances: Vec<(String, String, Poset)> = Vec::new();
    let mut push = |family: &str, size: String, p: Poset| instances.push((family.into(), size, p));
    for v in [4, 16, 64] {
        push("chain", v.to_string(), generators::chain(v).unwrap());
    }
    for n in [3, 5, 8] {
        push("boolean", n.to_string(), generators::boolean(n).unwrap());
    }
    for n in [12, 360, 1024] {
        push("divisor", n.to_string(), generators::divisor(n).unwrap());
    }
    for m in [4, 5] {
        push("partition", m.to_string(), generators::partition(m).unwrap());
    }
    push("figure1", "-".into(), generators::figure1());
    push("figure1-dual", "-".into(), generators::figure1().dual());
    push("pentagon", "-".into(), generators::pentagon());
    push("hexagon", "-".into(), generators::hexagon());
    for k in [2, 3, 4] {
        push("parallel-chains", k.to_string(), generators::parallel_chains(k).unwrap());
    }

    let mut out = format!(
        "{:<16} {:>6} {:<16} {:<15} {:>7} {:>6} {:>8}\n",
        "family", "size", "algorithm", "order", "length", "e", "length/e"
    );
    let mut row = |family: &str, size: &str, alg: Algorithm, order: &str, len: usize, e: usize| {
        let ratio = if e == 0 { "-".to_string() } else { format!("{:.3}", len as f64 / e as f64) };
        writeln!(
            out,
            "{family:<16} {size:>6} {:<16} {order:<15} {len:>7} {e:>6} {ratio:>8}",
            alg.label()
        )
        .unwrap();
    };
    for (family, size, poset) in &instances {
        let e = poset.edge_count();
        let l = lattice(poset).expect("built-in families are lattices");
        for order in [OrderArg::Height, OrderArg::Id, OrderArg::ReverseHeight] {
            let program = compile_zeta_bjorklund(&l, &order.build(&l));
            row(family, size, Algorithm::ZetaBjorklund, order.label(), program.len(), e);
        }
        let u_labeling = if l.is_semimodular() {
            semimodular_labeling(&l, &JirOrder::by_height(&l)).ok()
        } else if family == "figure1-dual" {
            let primal = lattice(&poset.dual()).unwrap();
            semimodular_labeling(&primal, &JirOrder::by_height(&primal))
                .ok()
                .map(|lab| dual_labeling(&lab))
        } else {
            None
        };
        if let Some(lab) = u_labeling {
            let program = compile_zeta_edges(poset, &make_injective(poset, &lab))?;
            row(family, size, Algorithm::ZetaEdges, "labeling", program.len(), e);
        }
    }
    Ok(out)
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Gen { family, param, dual } => gen(family, param, dual),
        Command::Analyze { poset } => analyze(poset.as_deref()),
        Command::Compile { poset, algorithm, order, labeling, injectivize } => {
            let poset = load_poset(Some(&poset))?;
            Ok(compile_program(&poset, algorithm, order, &labeling, injectivize)?.to_text())
        }
        Command::Label { poset, semimodular: _, input, order, dual, make_injective, check } => {
            label(&poset, input.as_deref(), order, dual, make_injective, check)
        }
        Command::Verify { poset, slp, kind } => verify(&poset, &slp, kind),
        Command::Bench => bench(),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Rejected(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
