//! Command-line front end for the double circulant code workbench.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num::{BigInt, BigRational};

use dcc::circulant::{build_bordered, build_pure, cyclic_canonical, DccSpec, Family, FirstRow};
use dcc::classify::{search_optimal, SearchConfig};
use dcc::gf2::LinearCode;
use dcc::gleason::{doubly_even_extremal, solve_parametric, GleasonBasis, ParametricWE};
use dcc::perf::{bdd_error_probability, decimal15, lex_compare, theorem1_report, BddChannel, FamilySummary};
use dcc::refdata::{table2, table2_row, table3, table4, SpotRow};
use dcc::shadow::{bound_beta_54, derive_families};
use dcc::wdist::{bounded_distribution, full_distribution, min_weight, WeightDistribution};
use dcc::Error;

#[derive(Parser)]
#[command(name = "dcc", version, about = "Double circulant even code workbench")]
struct Cli {
    /// Worker threads for enumeration and classification (default: all cores,
    /// or the DCC_JOBS environment variable).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Allow operations projected to run for a long time.
    #[arg(long, global = true)]
    extended: bool,
    /// Print a timing footer after the result.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CodeSpecArgs {
    /// Code family: pure or bordered.
    #[arg(long)]
    family: Family,
    /// First row as a 0/1 string (length n for pure, n-1 for bordered).
    #[arg(long)]
    row: String,
}

impl CodeSpecArgs {
    fn build(&self) -> Result<(DccSpec, LinearCode), Error> {
        let row: FirstRow = self.row.parse()?;
        let spec = match self.family {
            Family::Pure => DccSpec::pure(row)?,
            Family::Bordered => DccSpec::bordered(row)?,
        };
        let code = spec.build()?;
        Ok((spec, code))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a double circulant code and print its parameters.
    Build(CodeSpecArgs),
    /// Weight distribution of a double circulant code.
    Wdist {
        #[command(flatten)]
        spec: CodeSpecArgs,
        /// Only compute coefficients up to this weight.
        #[arg(long)]
        upto: Option<usize>,
    },
    /// Minimum weight of a double circulant code.
    Minwt(CodeSpecArgs),
    /// Classify optimal double circulant even codes that are not self-dual.
    Classify {
        /// Code length 2n.
        #[arg(long)]
        length: usize,
        #[arg(long)]
        family: Family,
        /// Check one first row instead of running the full search.
        #[arg(long)]
        spot_check: Option<String>,
    },
    /// Compare two codes under the lexicographic performance order.
    Compare {
        /// Left code: pure:<row>, bordered:<row>, or we:<2n>:<d>:a=..[,b=..].
        #[arg(long)]
        left: String,
        /// Right code, same syntax.
        #[arg(long)]
        right: String,
    },
    /// Possible weight enumerators of formally self-dual even codes.
    Gleason {
        /// Code length 2n.
        #[arg(long)]
        length: usize,
        /// Design minimum weight.
        #[arg(long, required_unless_present = "extremal")]
        d: Option<usize>,
        /// Print the extremal doubly even enumerator instead.
        #[arg(long)]
        extremal: bool,
    },
    /// Shadow enumerator families of singly even self-dual codes.
    Shadow {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        d: usize,
        /// Also list the surviving length-54 parameter values under
        /// A_10 < MAX.
        #[arg(long)]
        max_a10: Option<u128>,
    },
    /// Exact bounded-distance-decoding miscorrection probability.
    Bddprob {
        #[command(flatten)]
        spec: CodeSpecArgs,
        /// Symbol error probability as a fraction, e.g. 1/1000.
        #[arg(long)]
        p: String,
        /// Decoding radius; defaults to floor((d-1)/2).
        #[arg(long)]
        t: Option<usize>,
    },
    /// Reproduce the bundled tables.
    Tables {
        /// Which table to reproduce (1, 2, 3 or 4).
        #[arg(long)]
        reproduce: usize,
        /// Largest code length to include.
        #[arg(long)]
        max_length: Option<usize>,
    },
}

fn parse_fraction(s: &str) -> Result<BigRational, Error> {
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim())
            .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let den = BigInt::from_str(den.trim())
            .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        if den == BigInt::from(0) {
            return Err(Error::Parse("zero denominator".into()));
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some(rest) = s.strip_prefix("0.") {
        let digits = rest.trim();
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad probability {s:?}")));
        }
        let num = BigInt::from_str(digits).unwrap();
        let den = num::pow::pow(BigInt::from(10), digits.len());
        return Ok(BigRational::new(num, den));
    }
    Err(Error::Parse(format!("expected a fraction like 1/1000, got {s:?}")))
}

// One side of a comparison: a concrete double circulant code or an
// instantiated enumerator family.
fn parse_side(s: &str) -> Result<WeightDistribution, Error> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        ["pure", row] => {
            let code = build_pure(&DccSpec::pure(row.parse()?)?)?;
            full_distribution(&code)
        }
        ["bordered", row] => {
            let code = build_bordered(&DccSpec::bordered(row.parse()?)?)?;
            full_distribution(&code)
        }
        ["we", n2, d, assigns] => {
            let n2: usize = n2.parse().map_err(|_| Error::Parse("bad length".into()))?;
            let d: usize = d.parse().map_err(|_| Error::Parse("bad d".into()))?;
            let we = solve_parametric(n2, d, GleasonBasis::FsdEven)?;
            let values = parse_assignments(assigns, &we)?;
            we.instantiate(&values)
        }
        _ => Err(Error::Parse(format!(
            "expected pure:<row>, bordered:<row> or we:<2n>:<d>:a=..., got {s:?}"
        ))),
    }
}

fn parse_assignments(s: &str, we: &ParametricWE) -> Result<Vec<BigInt>, Error> {
    let mut values = vec![None; we.nparams()];
    for part in s.split(',') {
        let (name, val) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected name=value, got {part:?}")))?;
        let idx = we
            .free_params
            .iter()
            .position(|p| p == name.trim())
            .ok_or_else(|| Error::Parse(format!("unknown parameter {name:?}")))?;
        values[idx] = Some(
            BigInt::from_str(val.trim()).map_err(|_| Error::Parse(format!("bad value {val:?}")))?,
        );
    }
    values
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| Error::Parse(format!("parameter {} not assigned", we.free_params[i])))
        })
        .collect()
}

fn triple_string(t: (u128, u128, u128)) -> String {
    format!("({},{},{})", t.0, t.1, t.2)
}

fn projected_steps(spec: &DccSpec, upto: Option<usize>) -> f64 {
    let k = spec.n as u32;
    match upto {
        None => 2f64.powi(k as i32),
        Some(w) => {
            let mut total = 0f64;
            let mut c = 1f64;
            for i in 0..=w.min(spec.n) {
                if i > 0 {
                    c = c * (spec.n - i + 1) as f64 / i as f64;
                }
                total += c;
            }
            total
        }
    }
}

const EXTENDED_STEP_LIMIT: f64 = 1.5e9;

fn run(cli: &Cli) -> Result<(), Error> {
    match &cli.command {
        Command::Build(args) => {
            let (spec, code) = args.build()?;
            println!(
                "[{}, {}] {} double circulant code",
                code.length(),
                code.dimension(),
                spec.family
            );
            println!("first row: {}", spec.first_row);
            if spec.family == Family::Bordered {
                println!("alpha: {}", u8::from(spec.alpha));
            }
            println!("canonical first row: {}", cyclic_canonical(&spec.first_row));
            println!("even: {}", code.is_even());
            println!("self-dual: {}", code.is_self_dual());
        }
        Command::Wdist { spec, upto } => {
            let (dcc_spec, code) = spec.build()?;
            if !cli.extended && projected_steps(&dcc_spec, *upto) > EXTENDED_STEP_LIMIT {
                return Err(Error::BudgetExceeded(
                    "projected enumeration is large; pass --extended to run it".into(),
                ));
            }
            match upto {
                None => {
                    let wd = full_distribution(&code)?;
                    let d = wd.min_weight().ok_or(Error::ZeroCode)?;
                    println!("{wd}");
                    println!("d = {d}, triple = {}", triple_string(wd.triple(d)));
                }
                Some(w) => {
                    let pd = bounded_distribution(&code, *w)?;
                    let pairs: Vec<String> = (0..=pd.cutoff())
                        .filter(|&i| pd.count(i) > 0)
                        .map(|i| format!("{i}:{}", pd.count(i)))
                        .collect();
                    println!("{}", pairs.join(" "));
                    if let Some(d) = (1..=pd.cutoff()).find(|&i| pd.count(i) > 0) {
                        if d + 4 <= pd.cutoff() {
                            println!("d = {d}, triple = {}", triple_string(pd.triple(d)));
                        } else {
                            println!("d = {d}");
                        }
                    }
                }
            }
        }
        Command::Minwt(args) => {
            let (_, code) = args.build()?;
            println!("{}", min_weight(&code)?);
        }
        Command::Classify { length, family, spot_check } => {
            if length % 2 != 0 {
                return Err(Error::InvalidArgument("length must be even".into()));
            }
            let n = length / 2;
            if let Some(row) = spot_check {
                let row: FirstRow = row.parse()?;
                let spec = match family {
                    Family::Pure => DccSpec::pure(row)?,
                    Family::Bordered => DccSpec::bordered(row)?,
                };
                if spec.length() != *length {
                    return Err(Error::LengthMismatch {
                        expected: *length,
                        got: spec.length(),
                    });
                }
                if !cli.extended && projected_steps(&spec, None) > EXTENDED_STEP_LIMIT {
                    return Err(Error::BudgetExceeded(
                        "spot check at this length needs --extended".into(),
                    ));
                }
                let code = spec.build()?;
                let d = min_weight(&code)?;
                let wd = full_distribution(&code)?;
                println!(
                    "{} {} d={} triple={}",
                    spec.family,
                    spec.first_row,
                    d,
                    triple_string(wd.triple(d))
                );
                return Ok(());
            }
            let mut config = SearchConfig::new(n, *family);
            if let Some(jobs) = effective_jobs(cli) {
                config.worker_count = jobs;
            }
            if cli.extended {
                config.max_half_length = n;
            }
            let report = search_optimal(&config)?;
            println!(
                "2n={} family={} d={} A-triple={} inequivalent={}",
                report.n2,
                report.family,
                report.d,
                triple_string(report.triple),
                report.count
            );
            for row in &report.representatives {
                println!("  {row}");
            }
        }
        Command::Compare { left, right } => {
            let lwd = parse_side(left)?;
            let rwd = parse_side(right)?;
            let verdict = lex_compare(&lwd, &rwd)?;
            println!("{verdict}");
        }
        Command::Gleason { length, d, extremal } => {
            if *extremal {
                let wd = doubly_even_extremal(*length)?;
                println!("{wd}");
                return Ok(());
            }
            let d = d.expect("required unless extremal");
            let we = solve_parametric(*length, d, GleasonBasis::FsdEven)?;
            println!("{}", header_row(&we));
            println!("{}", we.table_row());
        }
        Command::Shadow { length, d, max_a10 } => {
            let families = derive_families(*length, *d)?;
            if families.is_empty() {
                println!("no feasible families for length {length}, d = {d}");
                return Ok(());
            }
            for fam in &families {
                println!("W_{}(C) = {}", fam.label, fam.display_code());
                println!("W_{}(S) = {}", fam.label, fam.display_shadow());
            }
            if *length == 112 {
                println!(
                    "note: the existence of an extremal singly even self-dual code of \
                     length 112 is unknown"
                );
            }
            if let Some(cap) = max_a10 {
                for fam in &families {
                    let range = bound_beta_54(fam, *cap)?;
                    let desc = if range.is_empty() {
                        "excluded".to_string()
                    } else {
                        format!("{:?}", range)
                    };
                    println!("W_{} under A_{} < {}: {}", fam.label, d, cap, desc);
                }
            }
        }
        Command::Bddprob { spec, p, t } => {
            let (dcc_spec, code) = spec.build()?;
            if !cli.extended && projected_steps(&dcc_spec, None) > EXTENDED_STEP_LIMIT {
                return Err(Error::BudgetExceeded(
                    "distribution enumeration at this length needs --extended".into(),
                ));
            }
            let wd = full_distribution(&code)?;
            let d = wd.min_weight().ok_or(Error::ZeroCode)?;
            let p = parse_fraction(p)?;
            let channel = match t {
                Some(t) => BddChannel::new(p, *t)?,
                None => BddChannel::for_min_weight(p, d)?,
            };
            let prob = bdd_error_probability(&wd, &channel)?;
            println!("t = {}", channel.t());
            println!("exact: {}/{}", prob.numer(), prob.denom());
            println!("decimal: {}", decimal15(&prob));
        }
        Command::Tables { reproduce, max_length } => {
            run_tables(cli, *reproduce, *max_length)?;
        }
    }
    Ok(())
}

fn header_row(we: &ParametricWE) -> String {
    format!(
        "(2n, d) & A_0 & A_{} & A_{} & A_{} & A_{}",
        we.d,
        we.d + 2,
        we.d + 4,
        we.d + 6
    )
}

fn spot_check_row(row: &SpotRow, extended: bool) -> Result<String, Error> {
    let spec = match row.family {
        Family::Pure => DccSpec::pure(row.first_row.clone())?,
        Family::Bordered => DccSpec::bordered(row.first_row.clone())?,
    };
    if !extended && projected_steps(&spec, None) > EXTENDED_STEP_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "row {} needs --extended",
            row.name
        )));
    }
    let code = spec.build()?;
    let d = min_weight(&code)?;
    let wd = full_distribution(&code)?;
    Ok(format!(
        "{} & {} & {} & {}",
        row.name,
        row.first_row,
        d,
        triple_string(wd.triple(d))
    ))
}

fn run_tables(cli: &Cli, which: usize, max_length: Option<usize>) -> Result<(), Error> {
    let cap = max_length.unwrap_or(if cli.extended { 72 } else { 56 });
    match which {
        1 => {
            let pairs: Vec<(usize, usize)> = vec![
                (32, 8), (34, 8), (36, 8), (38, 8), (40, 8),
                (42, 10), (44, 10), (46, 10), (48, 10), (50, 10), (52, 10), (54, 10),
                (56, 12), (58, 12), (60, 12), (62, 12), (64, 12), (66, 12), (68, 12),
                (70, 12), (72, 14),
            ];
            println!("(2n, d) & A_0 & A_d & A_d+2 & A_d+4 & A_d+6");
            for (n2, d) in pairs.into_iter().filter(|&(n2, _)| n2 <= cap) {
                let we = solve_parametric(n2, d, GleasonBasis::FsdEven)?;
                println!("{}", we.table_row());
            }
        }
        2 => {
            println!("2n & d_P & A_dP & N_P & d_B & A_dB & N_B & d_SD & A_SD & ref");
            for row in table2().iter().filter(|r| r.n2 <= cap.min(40)) {
                let n = row.n2 / 2;
                let mut pure_cfg = SearchConfig::new(n, Family::Pure);
                let mut bord_cfg = SearchConfig::new(n, Family::Bordered);
                if let Some(jobs) = effective_jobs(cli) {
                    pure_cfg.worker_count = jobs;
                    bord_cfg.worker_count = jobs;
                }
                let p = search_optimal(&pure_cfg)?;
                let b = search_optimal(&bord_cfg)?;
                println!(
                    "{} & {} & {} & {} & {} & {} & {} & {} & {} & {}",
                    row.n2,
                    p.d,
                    p.triple.0,
                    p.count,
                    b.d,
                    b.triple.0,
                    b.count,
                    row.d_sd,
                    row.a_sd,
                    row.citation
                );
            }
            if cap > 40 {
                println!("# lengths above 40 are covered by per-row spot checks (table 3/4)");
            }
        }
        3 => {
            println!("code & first row & d & (A_d,A_d+2,A_d+4)");
            for row in table3().iter().filter(|r| r.n2 <= cap) {
                println!("{}", spot_check_row(row, cli.extended)?);
            }
        }
        4 => {
            println!("code & first row & d & (A_d,A_d+2,A_d+4)");
            for row in table4().iter().filter(|r| r.n2 <= cap) {
                println!("{}", spot_check_row(row, cli.extended)?);
            }
        }
        other => {
            return Err(Error::InvalidArgument(format!("no table {other}")));
        }
    }
    Ok(())
}

fn effective_jobs(cli: &Cli) -> Option<usize> {
    cli.jobs.or_else(|| {
        std::env::var("DCC_JOBS").ok().and_then(|v| v.parse().ok())
    })
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse(_) | Error::InvalidArgument(_) => 2,
        Error::BudgetExceeded(_) | Error::CanonBudget { .. } => 3,
        Error::Infeasible(_) => 4,
        Error::NotMember(_) | Error::NonIntegral(_) | Error::NegativeCoefficient { .. } => 5,
        Error::IncompleteReference(_) => 6,
        _ => 1,
    }
}

// Verdict summary over the bundled reference table, used by `tables
// --reproduce 2` callers wanting the comparison column.
#[allow(dead_code)]
fn verdict_line(n2: usize) -> Result<String, Error> {
    let row = table2_row(n2)?;
    let verdict = theorem1_report(
        FamilySummary { d: row.d_pure, a_d: row.a_pure },
        FamilySummary { d: row.d_bordered, a_d: row.a_bordered },
        &row.reference(),
    )?;
    Ok(format!("{n2}: {verdict}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = effective_jobs(&cli) {
        // Fan-out for wdist and classify runs through the global pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let started = std::time::Instant::now();
    let result = run(&cli);
    if cli.timing {
        eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
