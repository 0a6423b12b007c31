//! `gged` command-line front end.
//!
//! Exit codes: 0 ok, 1 property or oracle failure, 2 parse error,
//! 3 precondition violated.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use gged::dispersal::{disperse, DispersalInstance};
use gged::editor::{solve, Property};
use gged::geometry::{IntervalCollection, Metric, Point};
use gged::graph::{build_disk_graph, build_interval_graph, has_k_clique, is_acyclic, is_edgeless, max_clique_interval};
use gged::io::{emit_instance, parse_instance, Instance};
use gged::oracle::cross_validate;
use gged::random::{self, PRNG_ALGORITHM};
use gged::reductions::disks::GadgetDiskCollection;
use gged::reductions::gadgets::{build_cell_gadget, build_clause_gadget, build_variable_gadget};
use gged::reductions::layout::{evaluate, worked_component, Assembly};
use gged::reductions::svg::render_svg;
use gged::reductions::three_partition::{
    build_3partition_instance, certificate_cost, certificate_movement, random_yes_instance, ThreePartitionInstance,
};
use gged::Rational;

#[derive(Parser)]
#[command(name = "gged", version, about = "Geometric graph edit distance on interval and disk graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum PropertyArg {
    Edgeless,
    Acyclic,
    KcliqueFree,
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetKind {
    Cell,
    Clause,
    Variable,
    Component,
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    L1,
    L2,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Metric {
        match m {
            MetricArg::L1 => Metric::L1,
            MetricArg::L2 => Metric::L2,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Minimum-movement dispersal of unit intervals.
    Disperse {
        #[arg(long)]
        input: PathBuf,
        /// Separation; defaults to the file's "s", then 1.
        #[arg(long)]
        s: Option<String>,
        #[arg(long, conflicts_with = "table")]
        json: bool,
        #[arg(long)]
        table: bool,
    },
    /// Optimal edit of a unit interval graph into a property.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        property: PropertyArg,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Randomized cross-check of the solver against brute force.
    Oracle {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Weighted interval instance from a 3-Partition instance.
    #[command(name = "gen-3partition")]
    Gen3Partition {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        b: u64,
        /// Comma-separated sizes; a random yes-instance when omitted.
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<u64>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit the certificate placement instead of the initial one.
        #[arg(long)]
        solved: bool,
    },
    /// Disk collection of a gadget as JSON, optionally rendered as SVG.
    GenGadget {
        #[arg(long, value_enum)]
        kind: GadgetKind,
        #[arg(long, value_enum, default_value = "l2")]
        metric: MetricArg,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Truth values of x1 x2 x4 as `t`/`f` letters, component only; emits the moved state.
        #[arg(long)]
        assignment: Option<String>,
    },
    /// Checks a graph property of an instance file at its current positions.
    CheckGraph {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        property: PropertyArg,
        #[arg(long)]
        k: Option<usize>,
        /// Also print the edge list as JSON.
        #[arg(long)]
        edges: bool,
    },
    /// Timing of the dispersal solver on random unit intervals.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "1e3,2e3,4e3,8e3,16e3,32e3,64e3,128e3,256e3,512e3,1e6")]
        sizes: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Property(String),
    Parse(String),
    Precondition(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Property(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Precondition(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Property(m) | Failure::Parse(m) | Failure::Precondition(m) => m,
        }
    }
}

type CmdResult = Result<(), Failure>;

fn read_instance(path: &Path) -> Result<Instance, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    parse_instance(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn unit_centers(inst: Instance) -> Result<(Vec<Rational>, Option<Rational>), Failure> {
    match inst {
        Instance::UnitIntervals { centers, s } => Ok((centers, s)),
        Instance::WeightedIntervals { intervals, s } if intervals.is_unit() => Ok((intervals.centers(), s)),
        other => Err(Failure::Precondition(format!("expected unit intervals, got {:?}", other.kind()))),
    }
}

fn property(arg: PropertyArg, k: Option<usize>) -> Result<Property, Failure> {
    match (arg, k) {
        (PropertyArg::Edgeless, _) => Ok(Property::Edgeless),
        (PropertyArg::Acyclic, _) => Ok(Property::Acyclic),
        (PropertyArg::KcliqueFree, Some(k)) if k >= 2 => Ok(Property::KCliqueFree(k)),
        (PropertyArg::KcliqueFree, Some(k)) => Err(Failure::Precondition(format!("k must be at least 2, got {k}"))),
        (PropertyArg::KcliqueFree, None) => Err(Failure::Parse("kclique-free needs --k".into())),
    }
}

/// Writes to stdout, treating a closed pipe (`| head`) as a normal end.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{text}").and_then(|_| out.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

fn print_prng(seed: u64) {
    println!("# prng {PRNG_ALGORITHM} seed={seed}");
}

fn cmd_disperse(input: &Path, s: Option<String>, json: bool) -> CmdResult {
    let (centers, file_s) = unit_centers(read_instance(input)?)?;
    let s = match s {
        Some(text) => text.parse::<Rational>().map_err(|e| Failure::Parse(format!("--s: {e}")))?,
        None => file_s.unwrap_or_else(Rational::one),
    };
    let instance = DispersalInstance::unit(&centers, s.clone()).map_err(|e| Failure::Precondition(e.to_string()))?;
    let out = disperse(&instance);
    if json {
        let doc = json!({
            "s": s,
            "total": out.total,
            "displacements": out.movement.displacements(),
            "final_centers": out.final_centers,
        });
        emit(&serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        println!("s {s}");
        println!("total {}", out.total);
        println!("{:>6}  {:>14}  {:>14}  {:>14}", "id", "center", "displacement", "final");
        for (i, c) in centers.iter().enumerate() {
            println!(
                "{:>6}  {:>14}  {:>14}  {:>14}",
                i,
                c.to_string(),
                out.movement.displacements()[i].to_string(),
                out.final_centers[i].to_string()
            );
        }
    }
    Ok(())
}

fn cmd_solve(input: &Path, prop: PropertyArg, k: Option<usize>, json: bool) -> CmdResult {
    let (centers, _) = unit_centers(read_instance(input)?)?;
    let property = property(prop, k)?;
    let result = solve(&IntervalCollection::unit(&centers), property).map_err(|e| match e {
        gged::editor::EditError::PostCondition(_) => Failure::Property(e.to_string()),
        _ => Failure::Precondition(e.to_string()),
    })?;
    if json {
        emit(&serde_json::to_string_pretty(&result).expect("serializable"));
    } else {
        println!("property {property:?}");
        println!("total {}", result.total);
        for (i, it) in result.final_intervals.items.iter().enumerate() {
            println!("{i} {} -> {}", centers[i], it.center);
        }
    }
    Ok(())
}

fn cmd_oracle(max_n: usize, trials: usize, seed: u64) -> CmdResult {
    print_prng(seed);
    let report = cross_validate(max_n, trials, seed);
    for m in &report.mismatches {
        println!("mismatch {m}");
    }
    println!("trials {} max_n {max_n} mismatches {}", report.trials, report.mismatches.len());
    if report.mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Property(format!("{} mismatches", report.mismatches.len())))
    }
}

fn cmd_gen_3partition(m: usize, b: u64, sizes: Option<Vec<u64>>, seed: u64, solved: bool) -> CmdResult {
    let (tp, triples) = match sizes {
        Some(sizes) => {
            if sizes.len() != 3 * m {
                return Err(Failure::Precondition(format!("expected {} sizes, got {}", 3 * m, sizes.len())));
            }
            let tp = ThreePartitionInstance::new(sizes, b).map_err(|e| Failure::Precondition(e.to_string()))?;
            (tp, None)
        }
        None => {
            eprintln!("# prng {PRNG_ALGORITHM} seed={seed}");
            let mut rng = random::rng(seed);
            let (tp, t) = random_yes_instance(&mut rng, m, b)
                .ok_or_else(|| Failure::Precondition(format!("no sizes in (B/4, B/2) for B = {b}")))?;
            (tp, Some(t))
        }
    };
    let inst = build_3partition_instance(&tp).map_err(|e| Failure::Precondition(e.to_string()))?;
    eprintln!("# sizes {:?} B {} budget {}", tp.sizes, tp.b, inst.budget);
    let mut intervals = inst.intervals.clone();
    if let Some(t) = &triples {
        eprintln!("# partition {t:?} certificate cost {}", certificate_cost(&tp, t));
        if solved {
            let d = certificate_movement(&inst, t).map_err(|e| Failure::Property(e.to_string()))?;
            for (it, di) in intervals.items.iter_mut().zip(d.displacements()) {
                it.center = &it.center + di;
            }
        }
    } else if solved {
        return Err(Failure::Precondition("--solved needs a generated yes-instance".into()));
    }
    emit(&emit_instance(&Instance::WeightedIntervals { intervals, s: None }));
    Ok(())
}

fn cmd_gen_gadget(kind: GadgetKind, metric: Metric, svg: Option<PathBuf>, assignment: Option<String>) -> CmdResult {
    let origin = Point::from_ints(0, 0);
    if assignment.is_some() && !matches!(kind, GadgetKind::Component) {
        return Err(Failure::Precondition("--assignment applies to --kind component".into()));
    }
    let coll: GadgetDiskCollection = match kind {
        GadgetKind::Cell => build_cell_gadget(&origin, metric),
        GadgetKind::Clause => build_clause_gadget(&origin, false, metric),
        GadgetKind::Variable => build_variable_gadget(&origin, false, metric),
        GadgetKind::Component => {
            let spec = worked_component();
            let mut asm = Assembly::build(&spec, metric);
            if let Some(a) = assignment {
                let values: Vec<bool> = a
                    .chars()
                    .map(|c| match c {
                        't' | 'T' | '1' => Ok(true),
                        'f' | 'F' | '0' => Ok(false),
                        _ => Err(Failure::Parse(format!("bad assignment letter {c:?}"))),
                    })
                    .collect::<Result<_, _>>()?;
                if values.len() != spec.variables.len() {
                    return Err(Failure::Parse(format!("expected {} truth values", spec.variables.len())));
                }
                if !evaluate(&spec, &values) {
                    return Err(Failure::Property("assignment does not satisfy the clause".into()));
                }
                let report = asm.run(&values).map_err(|e| Failure::Property(e.to_string()))?;
                eprintln!(
                    "# chain steps {} max cost {} edgeless {}",
                    report.steps, report.max_weighted_cost_text, report.final_edgeless
                );
            }
            asm.disks
        }
    };
    eprintln!("# {} disks", coll.len());
    if let Some(path) = svg {
        fs::write(&path, render_svg(&coll))
            .map_err(|e| Failure::Precondition(format!("{}: {e}", path.display())))?;
    }
    emit(&emit_instance(&Instance::Disks(coll)));
    Ok(())
}

fn cmd_check_graph(input: &Path, prop: PropertyArg, k: Option<usize>, edges: bool) -> CmdResult {
    let inst = read_instance(input)?;
    let property = property(prop, k)?;
    let (graph, sorted) = match inst {
        Instance::UnitIntervals { centers, .. } => {
            let c = IntervalCollection::unit(&centers);
            (build_interval_graph(&c), Some(c.sorted()))
        }
        Instance::WeightedIntervals { intervals, .. } => (build_interval_graph(&intervals), Some(intervals.sorted())),
        Instance::Disks(coll) => (build_disk_graph(&coll.disks), None),
    };
    if edges {
        emit(&serde_json::to_string(&graph.edge_list()).expect("serializable"));
    }
    let holds = match property {
        Property::Edgeless => is_edgeless(&graph),
        Property::Acyclic => is_acyclic(&graph),
        Property::KCliqueFree(k) => match &sorted {
            Some(s) => max_clique_interval(s).map_err(|e| Failure::Precondition(e.to_string()))? < k,
            None => !has_k_clique(&graph, k).map_err(|e| Failure::Precondition(e.to_string()))?,
        },
    };
    println!(
        "vertices {} edges {} property {property:?} {}",
        graph.vertex_count(),
        graph.edge_count(),
        if holds { "holds" } else { "violated" }
    );
    if holds {
        Ok(())
    } else {
        Err(Failure::Property(format!("{property:?} violated")))
    }
}

fn parse_size(s: &str) -> Result<usize, Failure> {
    let bad = || Failure::Parse(format!("bad size {s:?}"));
    if let Ok(n) = s.trim().parse::<usize>() {
        return Ok(n);
    }
    let v: f64 = s.trim().parse().map_err(|_| bad())?;
    if v >= 0.0 && v.fract() == 0.0 && v <= 1e12 {
        Ok(v as usize)
    } else {
        Err(bad())
    }
}

fn cmd_bench(sizes: &[String], seed: u64) -> CmdResult {
    let sizes: Vec<usize> = sizes.iter().map(|s| parse_size(s)).collect::<Result<_, _>>()?;
    print_prng(seed);
    println!("{:>9}  {:>11}  {:>16}  {:>8}", "n", "seconds", "ns/(n log2 n)", "ratio");
    let mut prev: Option<(usize, f64)> = None;
    for &n in &sizes {
        let mut rng = random::rng(seed ^ n as u64);
        let centers = random::bench_centers(&mut rng, n);
        let instance = DispersalInstance::unit(&centers, Rational::one()).expect("unit instance");
        let start = Instant::now();
        let out = disperse(&instance);
        let secs = start.elapsed().as_secs_f64();
        std::hint::black_box(&out.total);
        let nlogn = (n.max(2) as f64) * (n.max(2) as f64).log2();
        let ratio = match prev {
            Some((pn, pt)) if pt > 0.0 && n == 2 * pn => format!("{:.2}", secs / pt),
            _ => "-".into(),
        };
        println!("{n:>9}  {secs:>11.4}  {:>16.2}  {ratio:>8}", secs * 1e9 / nlogn);
        prev = Some((n, secs));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Disperse { input, s, json, table: _ } => cmd_disperse(&input, s, json),
        Command::Solve { input, property, k, json } => cmd_solve(&input, property, k, json),
        Command::Oracle { max_n, trials, seed } => cmd_oracle(max_n, trials, seed),
        Command::Gen3Partition { m, b, sizes, seed, solved } => cmd_gen_3partition(m, b, sizes, seed, solved),
        Command::GenGadget { kind, metric, svg, assignment } => cmd_gen_gadget(kind, metric.into(), svg, assignment),
        Command::CheckGraph { input, property, k, edges } => cmd_check_graph(&input, property, k, edges),
        Command::Bench { sizes, seed } => cmd_bench(&sizes, seed),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
