//! Command definitions and their execution.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use optcs::games::{GameInstance, Wvg};
use optcs::reductions::{
    gen_gg_from_maxcut, gen_mwc_from_clique, gen_threshold_embedding, gen_wvg_from_partition, EmbeddingTarget,
    Relation, ReductionInstance,
};
use optcs::solve::{
    solve_with_types, validate_type_partition, wvg_greedy_2approx, TypeCheck, DEFAULT_BRUTE_CAP, DEFAULT_DP_BUDGET,
    DEFAULT_VALIDATE_CAP, DP_WARN_CELLS,
};
use optcs::{brute_force_optcs, sample, solve_optcs, SolverConfig, Strategy, TypePartition, Welfare};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::instance::{parse_instance, parse_lists, parse_members, serialize_instance};
use crate::report::{verify, ResultFile};
use crate::CliError;

/// Environment variable overriding the exhaustive-search player cap.
pub const BRUTE_CAP_ENV: &str = "COALITION_BRUTE_CAP";

#[derive(Debug, Parser)]
#[command(name = "optcs", version, about = "Optimal coalition structures for compact coalitional games")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute an optimal (or 2-approximate) coalition structure.
    Solve(SolveArgs),
    /// Evaluate one coalition.
    Value(ValueArgs),
    /// Generate an instance from a hardness reduction.
    Gen(GenArgs),
    /// Check a candidate type-partition exhaustively.
    ValidateTypes(ValidateArgs),
    /// Run a benchmark family and print CSV.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Auto,
    Brute,
    Dp,
    Approx,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::Brute => Strategy::Brute,
            StrategyArg::Dp => Strategy::Dp,
            StrategyArg::Approx => Strategy::Approx,
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Instance file, or `-` for stdin.
    pub instance: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    pub strategy: StrategyArg,
    /// Largest type grid the dispatcher fills before falling back.
    #[arg(long, default_value_t = DEFAULT_DP_BUDGET)]
    pub dp_budget: usize,
    /// Player cap for exhaustive search (overrides COALITION_BRUTE_CAP).
    #[arg(long)]
    pub brute_cap: Option<usize>,
    /// Run the typed DP under this type-partition, e.g. `[[0,1],[2,3]]`.
    #[arg(long)]
    pub types: Option<String>,
    /// Write elapsed_ms as 0.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Args)]
pub struct ValueArgs {
    pub instance: PathBuf,
    /// Players of the coalition, e.g. `[0,2]`.
    #[arg(long)]
    pub coalition: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReductionArg {
    Partition,
    Maxcut,
    Clique,
    Threshold,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    Nfg,
    Matching,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub reduction: ReductionArg,
    /// Partition items, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub values: Vec<u64>,
    /// Number of parts for `partition`.
    #[arg(long)]
    pub k: Option<usize>,
    /// Vertex count of the source graph (`maxcut`, `clique`).
    #[arg(long)]
    pub vertices: Option<usize>,
    /// Source edges as JSON: `[[u,v,w],...]` for maxcut, `[[u,v],...]` for clique.
    #[arg(long)]
    pub edges: Option<String>,
    /// Quota of the source WVG for `threshold`.
    #[arg(long)]
    pub quota: Option<u64>,
    /// Weights of the source WVG for `threshold`, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub weights: Vec<u64>,
    #[arg(long, value_enum, default_value = "nfg")]
    pub target: TargetArg,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    pub instance: PathBuf,
    /// Candidate classes, e.g. `[[0,2],[1,3]]`.
    #[arg(long)]
    pub partition: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Two weight classes, solved by the typed DP.
    WvgDp,
    /// Random weights, greedy against the exact optimum when affordable.
    WvgGreedy,
    /// Copies of the greedy tight example [10; 8,8,2,2].
    WvgTight,
    /// Random connected multigraphs, spanning tree packing.
    Scg,
    /// Random flow networks.
    Nfg,
    /// Max-cut reduction graph games, brute force.
    Maxcut,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Instance sizes, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long)]
    pub brute_cap: Option<usize>,
}

/// Flag, then environment, then the built-in default.
pub fn resolve_brute_cap(flag: Option<usize>, env: Option<&str>) -> Result<usize, CliError> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match env {
        Some(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Schema(format!("{BRUTE_CAP_ENV} must be a non-negative integer, got {v:?}"))),
        None => Ok(DEFAULT_BRUTE_CAP),
    }
}

fn env_cap() -> Option<String> {
    std::env::var(BRUTE_CAP_ENV).ok()
}

fn read_instance(path: &PathBuf) -> Result<GameInstance, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Io { path: "-".into(), source: e })?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), source: e })?
    };
    parse_instance(&text)
}

/// Executes one command, writing results to `out` and notes to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Solve(args) => solve(args, out, err),
        Command::Value(args) => {
            let game = read_instance(&args.instance)?;
            let c = parse_members(&args.coalition, "--coalition")?;
            let v = game.evaluate(&c)?;
            emit(out, &json!({ "coalition": c.to_vec(), "value": v }).to_string())
        }
        Command::Gen(args) => {
            let r = generate(&args)?;
            writeln!(err, "reduction {}: {}", r.provenance.reduction, r.provenance.describe()).ok();
            emit(out, &serialize_instance(&r.game))
        }
        Command::ValidateTypes(args) => {
            let game = read_instance(&args.instance)?;
            let types = TypePartition::from_lists(game.num_players(), parse_lists(&args.partition, "--partition")?)?;
            let doc = match validate_type_partition(&game, &types, DEFAULT_VALIDATE_CAP)? {
                TypeCheck::Valid => json!({ "valid": true, "witness": null }),
                TypeCheck::Violated { i, j, coalition, with_i, with_j } => json!({
                    "valid": false,
                    "witness": { "i": i, "j": j, "coalition": coalition.to_vec(), "value_with_i": with_i, "value_with_j": with_j },
                }),
            };
            emit(out, &doc.to_string())
        }
        Command::Bench(args) => bench(args, out, err),
    }
}

fn emit(out: &mut dyn Write, line: &str) -> Result<(), CliError> {
    writeln!(out, "{line}").map_err(|e| CliError::Io { path: "stdout".into(), source: e })
}

fn solve(args: SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let game = read_instance(&args.instance)?;
    let config = SolverConfig {
        dp_budget: args.dp_budget,
        brute_cap: resolve_brute_cap(args.brute_cap, env_cap().as_deref())?,
    };
    let result = match &args.types {
        Some(text) => {
            let types = TypePartition::from_lists(game.num_players(), parse_lists(text, "--types")?)?;
            warn_grid(&types, err);
            if game.num_players() <= DEFAULT_VALIDATE_CAP {
                if let TypeCheck::Violated { i, j, coalition, .. } =
                    validate_type_partition(&game, &types, DEFAULT_VALIDATE_CAP)?
                {
                    return Err(CliError::Schema(format!(
                        "--types is not a valid type-partition: players {i} and {j} differ against {coalition}"
                    )));
                }
            } else {
                writeln!(err, "note: optimality assumes the supplied classes are strategically equivalent").ok();
            }
            solve_with_types(&game, &types)?
        }
        None => {
            if matches!(args.strategy, StrategyArg::Auto | StrategyArg::Dp) {
                if let Ok(types) = game.extract_type_partition() {
                    warn_grid(&types, err);
                }
            }
            solve_optcs(&game, args.strategy.into(), &config)?
        }
    };
    let doc = ResultFile::new(&result, !args.no_timing);
    verify(&game, &doc)?;
    emit(out, &doc.to_json())
}

fn warn_grid(types: &TypePartition, err: &mut dyn Write) {
    match types.grid_cells() {
        Some(c) if c <= DP_WARN_CELLS => {}
        Some(c) => {
            writeln!(err, "warning: type grid has {c} cells (k = {}); the DP may be slow", types.k()).ok();
        }
        None => {
            writeln!(err, "warning: type grid size overflows (k = {})", types.k()).ok();
        }
    }
}

fn need<T>(v: Option<T>, flag: &str, reduction: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Schema(format!("--reduction {reduction} needs {flag}")))
}

fn generate(args: &GenArgs) -> Result<ReductionInstance, CliError> {
    let bad_edges = |e: serde_json::Error| CliError::Schema(format!("--edges: {e}"));
    Ok(match args.reduction {
        ReductionArg::Partition => {
            if args.values.is_empty() {
                return Err(CliError::Schema("--reduction partition needs --values".into()));
            }
            gen_wvg_from_partition(&args.values, need(args.k, "--k", "partition")?)?
        }
        ReductionArg::Maxcut => {
            let edges: Vec<(usize, usize, u64)> =
                serde_json::from_str(&need(args.edges.clone(), "--edges", "maxcut")?).map_err(bad_edges)?;
            gen_gg_from_maxcut(need(args.vertices, "--vertices", "maxcut")?, &edges)?
        }
        ReductionArg::Clique => {
            let edges: Vec<(usize, usize)> =
                serde_json::from_str(&need(args.edges.clone(), "--edges", "clique")?).map_err(bad_edges)?;
            gen_mwc_from_clique(need(args.vertices, "--vertices", "clique")?, &edges)?
        }
        ReductionArg::Threshold => {
            let wvg = Wvg::new(need(args.quota, "--quota", "threshold")?, args.weights.clone())?;
            let target = match args.target {
                TargetArg::Nfg => EmbeddingTarget::ThresholdNfg,
                TargetArg::Matching => EmbeddingTarget::ThresholdMatching,
            };
            gen_threshold_embedding(&wvg, target)?
        }
    })
}

struct Row {
    n: usize,
    k: Option<usize>,
    welfare: Option<Welfare>,
    optimum: Option<Welfare>,
    elapsed_ms: f64,
}

fn bench(args: BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let cap = resolve_brute_cap(args.brute_cap, env_cap().as_deref())?;
    let family = args.family.to_possible_value().expect("no skipped variants").get_name().to_string();
    emit(out, "family,n,k,welfare,optimum,ratio,elapsed_ms")?;
    for &n in &args.sizes {
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let row = match bench_one(args.family, n, cap, &mut rng) {
            Ok(row) => row,
            Err(e) if e.exit_code() == 2 => {
                writeln!(err, "n = {n}: {e}").ok();
                Row { n, k: None, welfare: None, optimum: None, elapsed_ms: 0.0 }
            }
            Err(e) => return Err(e),
        };
        let cell = |v: Option<Welfare>| v.map(|w| w.to_string()).unwrap_or_default();
        let ratio = match (row.welfare, row.optimum) {
            (Some(w), Some(o)) if o > 0 => format!("{:.4}", w as f64 / o as f64),
            (Some(_), Some(_)) => "1.0000".into(),
            _ => String::new(),
        };
        emit(
            out,
            &format!(
                "{family},{},{},{},{},{ratio},{:.3}",
                row.n,
                row.k.map(|k| k.to_string()).unwrap_or_default(),
                cell(row.welfare),
                cell(row.optimum),
                row.elapsed_ms
            ),
        )?;
    }
    Ok(())
}

fn exact_optimum(game: &GameInstance, cap: usize) -> Option<Welfare> {
    if game.num_players() <= cap {
        return brute_force_optcs(game, cap).ok().map(|r| r.welfare);
    }
    let types = game.extract_type_partition().ok()?;
    if types.grid_cells()? > DEFAULT_DP_BUDGET {
        return None;
    }
    solve_with_types(game, &types).ok().map(|r| r.welfare)
}

fn bench_one(family: Family, n: usize, cap: usize, rng: &mut ChaCha8Rng) -> Result<Row, CliError> {
    let config = SolverConfig { brute_cap: cap, ..SolverConfig::default() };
    let start = Instant::now();
    let timed = |start: Instant| start.elapsed().as_secs_f64() * 1e3;
    Ok(match family {
        Family::WvgDp => {
            let game = GameInstance::Wvg(sample::two_type_wvg(n));
            let r = solve_optcs(&game, Strategy::Dp, &config)?;
            let k = game.extract_type_partition()?.k();
            Row { n, k: Some(k), welfare: Some(r.welfare), optimum: Some(r.welfare), elapsed_ms: timed(start) }
        }
        Family::WvgGreedy | Family::WvgTight => {
            let wvg = if family == Family::WvgTight {
                let copies = n.div_ceil(4).max(1);
                let weights = (0..copies).flat_map(|_| [8, 8, 2, 2]).collect();
                Wvg::new(10, weights)?
            } else {
                sample::wvg(rng, n, 20)
            };
            let r = wvg_greedy_2approx(&wvg);
            let elapsed_ms = timed(start);
            let game = GameInstance::Wvg(wvg);
            let k = game.extract_type_partition()?.k();
            Row { n: game.num_players(), k: Some(k), welfare: Some(r.welfare), optimum: exact_optimum(&game, cap), elapsed_ms }
        }
        Family::Scg => {
            let v = n.max(2);
            let edges = sample::connected_multigraph(rng, v, 2 * v);
            let game = GameInstance::Scg(optcs::games::Scg::new(v, edges)?);
            let r = solve_optcs(&game, Strategy::Auto, &config)?;
            Row { n: v, k: None, welfare: Some(r.welfare), optimum: Some(r.welfare), elapsed_ms: timed(start) }
        }
        Family::Nfg => {
            let game = GameInstance::Nfg(sample::nfg(rng, n, 3 * n));
            let r = solve_optcs(&game, Strategy::Auto, &config)?;
            Row { n, k: None, welfare: Some(r.welfare), optimum: Some(r.welfare), elapsed_ms: timed(start) }
        }
        Family::Maxcut => {
            let v = n.max(2);
            let edges = sample::connected_multigraph(rng, v, v)
                .into_iter()
                .enumerate()
                .map(|(i, (a, b))| (a, b, 1 + (i as u64 % 3)))
                .collect::<Vec<_>>();
            let inst = gen_gg_from_maxcut(v, &edges)?;
            let r = solve_optcs(&inst.game, Strategy::Auto, &config)?;
            let elapsed_ms = timed(start);
            let optimum = match inst.provenance.expected()? {
                Relation::Equals(w) => Some(w),
                Relation::LessThan(_) => None,
            };
            Row { n: v, k: None, welfare: Some(r.welfare), optimum, elapsed_ms }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_cap_precedence() {
        assert_eq!(resolve_brute_cap(Some(5), Some("9")).unwrap(), 5);
        assert_eq!(resolve_brute_cap(None, Some("9")).unwrap(), 9);
        assert_eq!(resolve_brute_cap(None, None).unwrap(), DEFAULT_BRUTE_CAP);
        assert!(resolve_brute_cap(None, Some("many")).is_err());
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
