use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lcd_cyclic::codes::{min_distance, CyclicCode};
use lcd_cyclic::constructions::{
    anti_bch, bch, count_reversible, enumerate_reversible, grm_star, projective_bch, reversible_bch,
    reversible_grm, reversible_projective_bch, BchSpec, Construction, GrmSpec, ProjSpec,
    ReversiblePattern,
};
use lcd_cyclic::cosets::{audit_leader_lemma, partition, LeaderLemma};
use lcd_cyclic::cyclotomic::{factor_xn_minus_1, FieldRegistry};
use lcd_cyclic::poly::Poly;
use lcd_cyclic::report::{
    analyze, analyze_code, analyze_construction, CodeReport, ModulusOverride, OutputFormat, RunConfig, CSV_HEADER,
};
use lcd_cyclic::repro::{verify_paper, Suite, Verdict};
use lcd_cyclic::Error;

/// Construct, analyze and verify LCD (reversible) cyclic codes.
#[derive(Parser)]
#[command(name = "lcd-cyclic", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// Largest number of normalized codewords enumerated exhaustively
    #[arg(long, global = true, default_value_t = 1 << 22)]
    cap: u128,
    /// Largest message support tried by the witness search
    #[arg(long = "witness-support", global = true, default_value_t = 4)]
    witness_support: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    output: Format,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Pin the modulus of GF(p^e): `--modulus 2 5 1,0,1,0,0,1` (constant term first)
    #[arg(long, global = true, num_args = 3, value_names = ["P", "E", "COEFFS"], action = clap::ArgAction::Append)]
    modulus: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Describe GF(p^e): modulus and primitive element
    Field { p: u64, e: u32 },
    /// q-cyclotomic cosets modulo n, with the leader sets
    Cosets { n: u64, q: u64 },
    /// Irreducible factors of x^n - 1 over GF(q)
    Factor { n: u64, q: u64 },
    /// Compare a coset-leader lemma with the brute-force partition
    Audit {
        #[command(subcommand)]
        lemma: AuditCmd,
    },
    /// BCH code C(q,n,delta,b)
    Bch {
        q: u64,
        n: u64,
        delta: u64,
        #[arg(allow_hyphen_values = true)]
        b: i64,
    },
    /// Reversible BCH code of length q^ell + 1
    Anti { q: u64, ell: u32, delta: u64 },
    /// Punctured generalized Reed-Muller code of order ell, length q^m - 1
    Grm {
        q: u64,
        m: u32,
        ell: u64,
        /// (x-1) lcm(g_R, g_R*) instead
        #[arg(long)]
        reversible: bool,
    },
    /// Narrow-sense BCH code of length (q^m - 1)/(q - 1)
    Proj {
        q: u64,
        m: u32,
        delta: u64,
        /// C(q,n,2 delta,1-delta) instead
        #[arg(long)]
        reversible: bool,
    },
    /// List or count every reversible cyclic code of length n
    Reversible {
        #[command(subcommand)]
        action: ReversibleCmd,
    },
    /// Full report for a generator polynomial, e.g. "(x+1)*(x^6+x^3+1)"
    Analyze { n: usize, q: u64, generator: String },
    /// Minimum distance only
    Mindist { n: usize, q: u64, generator: String },
    /// Rebuild the worked examples and compare with the printed parameters
    VerifyPaper {
        #[arg(value_enum, default_value_t = SuiteArg::Fast)]
        suite: SuiteArg,
    },
}

#[derive(Subcommand)]
enum AuditCmd {
    Aks { q: u64, n: u64 },
    Anti { q: u64, ell: u32 },
    ProjectiveEven { q: u64, m: u32 },
}

#[derive(Subcommand)]
enum ReversibleCmd {
    List {
        n: u64,
        q: u64,
        #[arg(long)]
        limit: Option<u128>,
    },
    Count { n: u64, q: u64 },
    /// BCH code with a designed-distance window symmetric under i -> n - i
    Bch {
        #[arg(value_enum)]
        pattern: Pattern,
        q: u64,
        n: u64,
        t: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Pattern {
    ZeroCentered,
    OddMid,
    EvenMid,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Fast,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::PredictionMismatch { .. } | Error::Inconsistent(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn config(g: &Global) -> Result<RunConfig, Error> {
    let mut overrides = Vec::new();
    for chunk in g.modulus.chunks(3) {
        let bad = |what: &str| Error::Parse(format!("--modulus {what}: {}", chunk.join(" ")));
        let p = chunk[0].parse().map_err(|_| bad("p"))?;
        let e = chunk[1].parse().map_err(|_| bad("e"))?;
        let coeffs = chunk[2]
            .split(',')
            .map(|c| c.trim().parse())
            .collect::<Result<Vec<u64>, _>>()
            .map_err(|_| bad("coefficients"))?;
        overrides.push(ModulusOverride { p, e, coeffs });
    }
    Ok(RunConfig {
        exhaustive_cap: g.cap,
        witness_support_max: g.witness_support,
        output: match g.output {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
            Format::Text => OutputFormat::Text,
        },
        threads: g.threads,
        field_modulus_overrides: overrides,
    })
}

fn emit_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn emit_reports(reports: &[CodeReport], cfg: &RunConfig) {
    match cfg.output {
        OutputFormat::Json if reports.len() == 1 => emit_json(&reports[0]),
        OutputFormat::Json => emit_json(&reports),
        OutputFormat::Csv => {
            println!("{CSV_HEADER}");
            for r in reports {
                println!("{}", r.csv_row(""));
            }
        }
        OutputFormat::Text => {
            for r in reports {
                println!("{}", r.text());
            }
        }
    }
}

fn emit_construction(c: &Construction, cfg: &RunConfig, reg: &FieldRegistry) -> Result<(), Error> {
    let r = analyze_construction(c, cfg, reg)?;
    emit_reports(&[r], cfg);
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let cfg = config(&cli.global)?;
    let reg = cfg.registry()?;
    match cli.cmd {
        Cmd::Field { p, e } => emit_json(&reg.field(p, e)?.describe()),
        Cmd::Cosets { n, q } => emit_json(&partition(n, q)?),
        Cmd::Factor { n, q } => {
            #[derive(Serialize)]
            struct Factor {
                leader: u64,
                degree: usize,
                self_reciprocal: bool,
                poly: String,
            }
            let mut out = Vec::new();
            for (leader, f) in factor_xn_minus_1(&reg, n, q)? {
                out.push(Factor {
                    leader,
                    degree: f.degree().unwrap_or(0),
                    self_reciprocal: f.is_self_reciprocal()?,
                    poly: f.to_string(),
                });
            }
            emit_json(&out);
        }
        Cmd::Audit { lemma } => {
            let lemma = match lemma {
                AuditCmd::Aks { q, n } => LeaderLemma::Aks { q, n },
                AuditCmd::Anti { q, ell } => LeaderLemma::Anti { q, ell },
                AuditCmd::ProjectiveEven { q, m } => LeaderLemma::ProjectiveEven { q, m },
            };
            let report = audit_leader_lemma(lemma)?;
            emit_json(&report);
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::Bch { q, n, delta, b } => emit_construction(&bch(BchSpec { q, n, delta, b }, &reg)?, &cfg, &reg)?,
        Cmd::Anti { q, ell, delta } => emit_construction(&anti_bch(q, ell, delta, &reg)?, &cfg, &reg)?,
        Cmd::Grm { q, m, ell, reversible } => {
            let spec = GrmSpec { q, m, ell };
            let c = if reversible { reversible_grm(spec, &reg)? } else { grm_star(spec, &reg)? };
            emit_construction(&c, &cfg, &reg)?;
        }
        Cmd::Proj { q, m, delta, reversible } => {
            let spec = ProjSpec { q, m, delta };
            let c = if reversible {
                reversible_projective_bch(spec, &reg)?
            } else {
                projective_bch(spec, &reg)?
            };
            emit_construction(&c, &cfg, &reg)?;
        }
        Cmd::Reversible { action } => match action {
            ReversibleCmd::Count { n, q } => emit_json(&count_reversible(n, q, &reg)?),
            ReversibleCmd::Bch { pattern, q, n, t } => {
                let p = match pattern {
                    Pattern::ZeroCentered => ReversiblePattern::ZeroCentered,
                    Pattern::OddMid => ReversiblePattern::OddMid,
                    Pattern::EvenMid => ReversiblePattern::EvenMid,
                };
                emit_construction(&reversible_bch(p, q, n, t, &reg)?, &cfg, &reg)?;
            }
            ReversibleCmd::List { n, q, limit } => {
                let codes = enumerate_reversible(n, q, limit, &reg)?;
                let mut reports = Vec::new();
                for (rank, code) in (1u128..).zip(codes) {
                    reports.push(analyze_code(&code, Some(format!("rev-{n}-{q}-{rank}")), None, &cfg, &reg)?);
                }
                emit_reports(&reports, &cfg);
            }
        },
        Cmd::Analyze { n, q, generator } => emit_reports(&[analyze(n, q, &generator, &cfg, &reg)?], &cfg),
        Cmd::Mindist { n, q, generator } => {
            let f = reg.base(q)?;
            let code = CyclicCode::from_generator(n, Poly::parse(&f, &generator)?)?;
            let sf = reg.splitting(n as u64, q)?;
            let budget = cfg.budget()?;
            let d = cfg.install(|| min_distance(&code, Some(&sf), &budget))??;
            match cfg.output {
                OutputFormat::Json => emit_json(&d),
                _ => {
                    let (lo, hi) = d.interval();
                    match (d.d_exact, hi) {
                        (Some(e), _) => println!("d = {e} ({:?})", d.provenance),
                        (None, Some(h)) => println!("{lo} <= d <= {h}"),
                        (None, None) => println!("d >= {lo}"),
                    }
                }
            }
        }
        Cmd::VerifyPaper { suite } => {
            let suite = match suite {
                SuiteArg::All => Suite::All,
                SuiteArg::Fast => Suite::Fast,
            };
            let records = verify_paper(suite, &cfg)?;
            match cfg.output {
                OutputFormat::Json => emit_json(&records),
                OutputFormat::Csv => {
                    println!("{CSV_HEADER}");
                    for r in &records {
                        println!("{}", r.csv_row());
                    }
                }
                OutputFormat::Text => {
                    for r in &records {
                        let params = r.report.as_ref().map(|c| c.params_triple()).unwrap_or_else(|| {
                            r.measured_count.map(|c| c.to_string()).unwrap_or_default()
                        });
                        println!("{:<14} {:<17} {:<16} {}", r.label, r.verdict.as_str(), params, r.note);
                    }
                }
            }
            if records.iter().any(|r| r.verdict == Verdict::Mismatch) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
