//! Command-line front end: degree-set figures, dimension tables, bound
//! tables, local-correction experiments, PIR demos and privacy audits.
//!
//! Every subcommand is a thin wrapper over the library; identical flags and
//! seed produce byte-identical output files.

use clap::{Parser, Subcommand, ValueEnum};
use etalift::code::{wrm_degree_set, CodeKind, DegreeSet, MonomialCode};
use etalift::gf::{Fe, Field};
use etalift::lift::{lift_code, lift_degree_set};
use etalift::local::{success_rate_experiment, trial_rng, ErrorModel, ExperimentResult};
use etalift::pir::{AdversaryConfig, AuditMode, ByzantineStrategy, PirSystem};
use etalift::viz;
use rand::Rng;
use std::error::Error;
use std::io::Write;
use std::path::PathBuf;

const DEFAULT_SEED: u64 = 42;

#[derive(Parser)]
#[command(name = "etalift", version, about = "Weighted Reed-Muller and eta-lifted Reed-Solomon codes: tables, figures, local correction and PIR simulation")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Render the degree set of a code (ASCII or PGM)
    Degreeset(DegreesetArgs),
    /// Exact dimension table over a range of field exponents (CSV)
    DimTable(DimTableArgs),
    /// Counting sequences and asymptotic-rate lower bounds (CSV)
    Bounds(BoundsArgs),
    /// Seeded local-correction failure-rate experiment (CSV)
    LocalExp(LocalExpArgs),
    /// PIR retrievals with fault injection (JSON transcript or CSV batch)
    PirDemo(PirDemoArgs),
    /// Collusion privacy audit, exact or sampled (CSV)
    PrivacyAudit(PrivacyAuditArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Wrm,
    Lift,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Ascii,
    Pgm,
    Pgm5,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Uniform,
    ColumnBurst,
    LineAdversarial,
}

impl From<ModelArg> for ErrorModel {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Uniform => ErrorModel::Uniform,
            ModelArg::ColumnBurst => ErrorModel::ColumnBurst,
            ModelArg::LineAdversarial => ErrorModel::LineAdversarial,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    ConstOffset,
    Random,
    WorstCase,
}

#[derive(Parser)]
struct DegreesetArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    e: u32,
    #[arg(long)]
    eta: u32,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    alpha: Option<u64>,
    #[arg(long)]
    c: Option<u32>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long, value_enum, default_value_t = KindArg::Lift)]
    kind: KindArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Ascii)]
    format: FormatArg,
    /// Shade cells by covering block scale (needs --alpha or --c)
    #[arg(long)]
    shade: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Parser)]
struct DimTableArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    eta: u32,
    #[arg(long)]
    alpha: Option<u64>,
    #[arg(long)]
    c: Option<u32>,
    /// Field exponent or range, e.g. "6" or "3..10" (inclusive)
    #[arg(long)]
    e: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Parser)]
struct BoundsArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    eta: u32,
    /// Emit the asymptotic-rate lower bound for this c
    #[arg(long)]
    c: Option<u32>,
    /// Emit the T/W/N sequence table up to m-max instead
    #[arg(long)]
    sequences: bool,
    #[arg(long, default_value_t = 2)]
    alpha: u64,
    #[arg(long, default_value_t = 12)]
    m_max: u32,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Parser)]
struct LocalExpArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    e: u32,
    #[arg(long)]
    eta: u32,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long, value_enum, default_value_t = KindArg::Wrm)]
    kind: KindArg,
    #[arg(long)]
    delta: f64,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, value_enum, default_value_t = ModelArg::Uniform)]
    error_model: ModelArg,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Parser)]
struct PirDemoArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    e: u32,
    #[arg(long)]
    eta: u32,
    /// Defaults to q - u - 2b - 2, the largest robust degree
    #[arg(long)]
    d: Option<u32>,
    #[arg(long, value_enum, default_value_t = KindArg::Wrm)]
    kind: KindArg,
    #[arg(long, default_value_t = 0)]
    b: u32,
    #[arg(long, default_value_t = 0)]
    u: u32,
    #[arg(long, value_enum, default_value_t = StrategyArg::ConstOffset)]
    strategy: StrategyArg,
    #[arg(long, default_value_t = 0)]
    index: usize,
    /// More than one trial emits a CSV batch cycling over all indices
    #[arg(long, default_value_t = 1)]
    trials: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Parser)]
struct PrivacyAuditArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    e: u32,
    #[arg(long)]
    eta: u32,
    #[arg(long)]
    tau: u32,
    /// Defaults to q - 2
    #[arg(long)]
    d: Option<u32>,
    #[arg(long, value_enum, default_value_t = KindArg::Wrm)]
    kind: KindArg,
    /// Run the sampled (non-certifying) audit with this many samples
    #[arg(long)]
    sampled: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Degreeset(args) => cmd_degreeset(args),
        Cmd::DimTable(args) => cmd_dim_table(args),
        Cmd::Bounds(args) => cmd_bounds(args),
        Cmd::LocalExp(args) => cmd_local_exp(args),
        Cmd::PirDemo(args) => cmd_pir_demo(args),
        Cmd::PrivacyAudit(args) => cmd_privacy_audit(args),
    };
    if let Err(err) = result {
        eprintln!("error: {err}");
        std::process::exit(1);
    }
}

fn write_output(out: Option<PathBuf>, bytes: &[u8]) -> Result<(), Box<dyn Error>> {
    match out {
        Some(path) => std::fs::write(path, bytes)?,
        None => std::io::stdout().write_all(bytes)?,
    }
    Ok(())
}

/// Resolves the degree from exactly one of --d / --alpha / --c / --gamma.
fn resolve_degree(
    q: u32,
    p: u32,
    e: u32,
    d: Option<u32>,
    alpha: Option<u64>,
    c: Option<u32>,
    gamma: Option<f64>,
) -> Result<(u32, Option<u64>), Box<dyn Error>> {
    let given = [d.is_some(), alpha.is_some(), c.is_some(), gamma.is_some()]
        .iter()
        .filter(|&&b| b)
        .count();
    if given != 1 {
        return Err("specify exactly one of --d, --alpha, --c, --gamma".into());
    }
    if let Some(d) = d {
        return Ok((d, None));
    }
    if let Some(alpha) = alpha {
        if alpha == 0 || alpha > q as u64 {
            return Err(format!("--alpha must be in [1, {q}]").into());
        }
        return Ok(((q as u64 - alpha) as u32, Some(alpha)));
    }
    if let Some(c) = c {
        if c >= e {
            return Err("--c must be smaller than --e".into());
        }
        let alpha = (p as u64).pow(e - c);
        return Ok(((q as u64 - alpha) as u32, Some(alpha)));
    }
    let gamma = gamma.unwrap();
    if !(0.0..1.0).contains(&gamma) {
        return Err("--gamma must be in [0, 1)".into());
    }
    Ok(((gamma * q as f64).floor() as u32, None))
}

fn degree_set_for(
    field: &Field,
    kind: KindArg,
    eta: u32,
    d: u32,
) -> Result<DegreeSet, Box<dyn Error>> {
    Ok(match kind {
        KindArg::Wrm => wrm_degree_set(field, eta, d as i64)?,
        KindArg::Lift => lift_degree_set(field, eta, d)?,
    })
}

fn code_for(
    field: &Field,
    kind: KindArg,
    eta: u32,
    d: u32,
) -> Result<MonomialCode, Box<dyn Error>> {
    let code = match kind {
        KindArg::Wrm => MonomialCode::wrm(field, eta, d as i64)?,
        KindArg::Lift => lift_code(field, eta, d)?,
    };
    assert!(matches!(code.kind(), CodeKind::Wrm | CodeKind::Lift));
    Ok(code)
}

fn cmd_degreeset(args: DegreesetArgs) -> Result<(), Box<dyn Error>> {
    let field = Field::new(args.p, args.e)?;
    let (d, alpha) =
        resolve_degree(field.q(), args.p, args.e, args.d, args.alpha, args.c, args.gamma)?;
    let ds = degree_set_for(&field, args.kind, args.eta, d)?;
    let bytes: Vec<u8> = match (args.format, args.shade) {
        (FormatArg::Ascii, false) => viz::ascii_grid(&ds).into_bytes(),
        (FormatArg::Ascii, true) => {
            return Err("--shade requires a PGM format".into());
        }
        (format, shade) => {
            let grid = if shade {
                let alpha = alpha.ok_or("--shade requires --alpha or --c")?;
                viz::shaded_grid(&ds, args.p, args.e, args.eta, alpha)
            } else {
                viz::plain_grid(&ds)
            };
            match format {
                FormatArg::Pgm => viz::pgm_p2(&grid).into_bytes(),
                FormatArg::Pgm5 => viz::pgm_p5(&grid),
                FormatArg::Ascii => unreachable!(),
            }
        }
    };
    write_output(args.out, &bytes)
}

fn parse_e_range(s: &str) -> Result<std::ops::RangeInclusive<u32>, Box<dyn Error>> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: u32 = lo.trim().parse()?;
        let hi: u32 = hi.trim().trim_start_matches('=').parse()?;
        Ok(lo..=hi)
    } else {
        let e: u32 = s.trim().parse()?;
        Ok(e..=e)
    }
}

fn cmd_dim_table(args: DimTableArgs) -> Result<(), Box<dyn Error>> {
    let family = match (args.alpha, args.c) {
        (Some(alpha), None) => viz::DegreeFamily::Alpha(alpha),
        (None, Some(c)) => viz::DegreeFamily::C(c),
        _ => return Err("specify exactly one of --alpha, --c".into()),
    };
    let rows = viz::dim_table(args.p, args.eta, family, parse_e_range(&args.e)?)?;
    write_output(args.out, viz::dim_table_csv(&rows).as_bytes())
}

fn cmd_bounds(args: BoundsArgs) -> Result<(), Box<dyn Error>> {
    let csv = if args.sequences {
        viz::sequence_table_csv(args.p, args.eta, args.alpha, args.m_max)
    } else {
        let c = args.c.ok_or("specify --c (or --sequences)")?;
        viz::rate_bound_csv(args.p, args.eta, c)
    };
    write_output(args.out, csv.as_bytes())
}

fn cmd_local_exp(args: LocalExpArgs) -> Result<(), Box<dyn Error>> {
    let field = Field::new(args.p, args.e)?;
    let (d, _) = resolve_degree(
        field.q(),
        args.p,
        args.e,
        args.d,
        None,
        None,
        args.gamma,
    )?;
    let code = code_for(&field, args.kind, args.eta, d)?;
    let result = success_rate_experiment(
        &code,
        args.delta,
        args.trials,
        args.error_model.into(),
        args.seed,
    )?;
    let csv = format!("{}\n{}\n", ExperimentResult::csv_header(), result.csv_row());
    write_output(args.out, csv.as_bytes())
}

fn cmd_pir_demo(args: PirDemoArgs) -> Result<(), Box<dyn Error>> {
    let field = Field::new(args.p, args.e)?;
    let q = field.q();
    let budget = args.u as u64 + 2 * args.b as u64 + 2;
    let d = match args.d {
        Some(d) => d,
        None => {
            let d = q as i64 - budget as i64;
            if d < 0 {
                return Err("q - u - 2b - 2 is negative; give --d explicitly".into());
            }
            d as u32
        }
    };
    let code = code_for(&field, args.kind, args.eta, d)?;
    let mut rng = trial_rng(args.seed, u64::MAX);
    let database: Vec<Fe> = (0..code.dim())
        .map(|_| Fe(rng.random_range(0..q)))
        .collect();
    let sys = PirSystem::init(code, &database)?;

    let adversary_for = |rng: &mut rand_chacha::ChaCha8Rng| -> AdversaryConfig {
        let mut ids: Vec<u32> = (0..q).collect();
        for k in 0..(args.b + args.u) as usize {
            let j = rng.random_range(k..q as usize);
            ids.swap(k, j);
        }
        let strategy = match args.strategy {
            StrategyArg::ConstOffset => ByzantineStrategy::ConstantOffset(Fe(1)),
            StrategyArg::Random => ByzantineStrategy::RandomSymbol,
            StrategyArg::WorstCase => ByzantineStrategy::WorstCaseSearch,
        };
        AdversaryConfig {
            byzantine: ids[..args.b as usize].to_vec(),
            strategy,
            unresponsive: ids[args.b as usize..(args.b + args.u) as usize].to_vec(),
        }
    };

    if args.trials <= 1 {
        let mut rng = trial_rng(args.seed, 1);
        let adversary = adversary_for(&mut rng);
        let transcript = sys.retrieve(args.index, &adversary, args.seed)?;
        let mut json = transcript.to_json();
        json.push('\n');
        write_output(args.out, json.as_bytes())
    } else {
        let mut csv = String::from("trial,index,t0,ok,recovered,bits_up,bits_down\n");
        for trial in 0..args.trials {
            let mut rng = trial_rng(args.seed, trial + 1);
            let adversary = adversary_for(&mut rng);
            let index = (args.index + trial as usize) % sys.dim();
            let t = sys.retrieve(index, &adversary, args.seed.wrapping_add(trial))?;
            csv.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                trial,
                index,
                t.t0,
                t.ok,
                t.recovered.map_or(String::new(), |v| v.to_string()),
                t.bits_up,
                t.bits_down
            ));
        }
        write_output(args.out, csv.as_bytes())
    }
}

fn cmd_privacy_audit(args: PrivacyAuditArgs) -> Result<(), Box<dyn Error>> {
    let field = Field::new(args.p, args.e)?;
    let q = field.q();
    let d = args.d.unwrap_or(q - 2);
    let code = code_for(&field, args.kind, args.eta, d)?;
    let mut rng = trial_rng(args.seed, u64::MAX);
    let database: Vec<Fe> = (0..code.dim())
        .map(|_| Fe(rng.random_range(0..q)))
        .collect();
    let sys = PirSystem::init(code, &database)?;
    let mode = match args.sampled {
        Some(samples) => AuditMode::Sampled {
            samples,
            seed: args.seed,
        },
        None => AuditMode::Exact,
    };
    let report = sys.privacy_audit(args.tau, mode)?;
    let csv = format!(
        "{}\n{}\n",
        etalift::pir::AuditReport::csv_header(),
        report.csv_row()
    );
    write_output(args.out, csv.as_bytes())
}
