//! Argument parsing and dispatch for the `golay` binary.
//!
//! Exit codes: 0 on success, 1 on usage or validation errors, 2 when a
//! verification runs but a checked property does not hold.

use std::io::BufRead;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::analysis::{incidence_matrix, table1, verify_properties};
use crate::codec::{build_trellis, decode_ml, decode_trellis, encode, simulate_bsc};
use crate::component::{
    build_systematic, enumerate_valid_permutations, G78Choices, ParitySubmatrix,
    NUMBERED_PERMUTATIONS,
};
use crate::error::Error;
use crate::gf2::BitVector;
use crate::golay::{
    build_variant, check_forney_equivalence, check_turyn_equivalence, direct_sum, sweep_companions,
    verify_golay, K, N,
};

#[derive(Parser, Debug)]
#[command(
    name = "golay",
    version,
    about = "Build, verify and decode the (24,12,8) Golay code as a direct sum of array codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct CodeArgs {
    /// Parity rows of the systematic seed, e.g. 1101,0111,1110,1011
    #[arg(long = "p")]
    parity: Option<String>,
    /// Companion code C'(r), 1..=8
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=8))]
    variant: Option<u8>,
    /// x,y,r71,r72,r81,r82 for the non-systematic companions
    #[arg(long)]
    g78: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct OutputArgs {
    /// Write output here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
    /// Weight-4 table only
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum DecoderKind {
    Ml,
    Trellis,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the 12x24 generator matrix
    Construct {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Verify one construction, or sweep every seed and companion
    Verify {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the weight-4 codeword table, or the incidence matrix with --q
    Table {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long)]
        q: bool,
    },
    /// Encode 12-symbol messages
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Messages; read from standard input when omitted
        words: Vec<String>,
    },
    /// Decode 24-symbol received words
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long, value_enum, default_value_t = DecoderKind::Trellis)]
        decoder: DecoderKind,
        /// Received words; read from standard input when omitted
        words: Vec<String>,
    },
    /// Monte Carlo simulation over a binary symmetric channel
    Simulate {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long = "p-flip")]
        p_flip: f64,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Subcmd {
    Construct,
    Verify,
    Table {
        incidence: bool,
    },
    Encode {
        words: Vec<String>,
    },
    Decode {
        words: Vec<String>,
        decoder: DecoderKind,
    },
    Simulate {
        p: f64,
        trials: u64,
        seed: u64,
    },
}

/// A parsed and validated invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct CliConfig {
    pub subcommand: Subcmd,
    pub parity: ParitySubmatrix,
    pub variant: Option<usize>,
    pub g78: G78Choices,
    pub out: Option<PathBuf>,
    pub format: Format,
}

#[derive(Debug)]
pub enum CliError {
    /// Help or version text requested; print and exit 0.
    Info(String),
    /// Usage or validation failure; exit 1.
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Info(_) => 0,
            CliError::Usage(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Output of a successful dispatch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub text: String,
    pub exit_code: u8,
}

impl RunOutput {
    fn ok(text: String) -> Self {
        Self { text, exit_code: 0 }
    }

    fn checked(text: String, passed: bool) -> Self {
        Self {
            text,
            exit_code: if passed { 0 } else { 2 },
        }
    }
}

pub fn parse_and_validate<I, S>(argv: I) -> Result<CliConfig, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    if argv.len() <= 1 {
        let mut cmd = <Cli as clap::CommandFactory>::command();
        return Err(CliError::Usage(cmd.render_help().to_string()));
    }
    let cli = Cli::try_parse_from(argv).map_err(|e| {
        use clap::error::ErrorKind::*;
        match e.kind() {
            DisplayHelp | DisplayVersion => CliError::Info(e.to_string()),
            _ => CliError::Usage(
                e.to_string()
                    .lines()
                    .next()
                    .unwrap_or("invalid arguments")
                    .to_string(),
            ),
        }
    })?;
    let (code, output, subcommand) = match cli.command {
        Command::Construct { code, output } => (code, output, Subcmd::Construct),
        Command::Verify { code, output } => (code, output, Subcmd::Verify),
        Command::Table { code, output, q } => (code, output, Subcmd::Table { incidence: q }),
        Command::Encode {
            code,
            output,
            words,
        } => (code, output, Subcmd::Encode { words }),
        Command::Decode {
            code,
            output,
            decoder,
            words,
        } => (code, output, Subcmd::Decode { words, decoder }),
        Command::Simulate {
            code,
            output,
            p_flip,
            trials,
            seed,
        } => {
            if !(0.0..=1.0).contains(&p_flip) {
                return Err(Error::InvalidProbability(p_flip).into());
            }
            if trials == 0 {
                return Err(Error::InvalidTrials.into());
            }
            (
                code,
                output,
                Subcmd::Simulate {
                    p: p_flip,
                    trials,
                    seed,
                },
            )
        }
    };
    if output.format == Format::Csv && !matches!(subcommand, Subcmd::Table { incidence: false }) {
        return Err(CliError::Usage(
            "--format csv is only available for the weight-4 table".into(),
        ));
    }
    let parity = match code.parity {
        Some(s) => s.parse()?,
        None => ParitySubmatrix::example(),
    };
    let g78 = match code.g78 {
        Some(s) => s.parse()?,
        None => G78Choices::example(),
    };
    Ok(CliConfig {
        subcommand,
        parity,
        variant: code.variant.map(usize::from),
        g78,
        out: output.out,
        format: output.format,
    })
}

fn read_words(args: &[String], input: &mut dyn BufRead) -> Result<Vec<String>, CliError> {
    if !args.is_empty() {
        return Ok(args.to_vec());
    }
    let mut words = Vec::new();
    for line in input.lines() {
        let line = line.map_err(|e| CliError::Usage(format!("reading input: {e}")))?;
        let line = line.trim();
        if !line.is_empty() {
            words.push(line.to_string());
        }
    }
    Ok(words)
}

fn parse_word(s: &str, len: usize) -> Result<BitVector, CliError> {
    if s.len() != len || !s.bytes().all(|b| b == b'0' || b == b'1') {
        return Err(CliError::Usage(format!(
            "expected a {len}-character 0/1 string, got {s:?}"
        )));
    }
    Ok(s.parse()?)
}

#[derive(Serialize)]
struct SweepSummary {
    seeds: usize,
    codes_checked: usize,
    codes_golay: usize,
    valid_permutations: Vec<[u8; 4]>,
    permutation_census_ok: bool,
    properties_ok: bool,
    bibd: Option<[usize; 5]>,
    turyn: bool,
    forney: bool,
    pass: bool,
}

fn full_sweep(cfg: &CliConfig) -> Result<SweepSummary, CliError> {
    let seeds = ParitySubmatrix::all_orderings();
    let results = seeds
        .par_iter()
        .map(|p| -> Result<Vec<bool>, Error> {
            let seed = build_systematic(p);
            let companions = sweep_companions(p)?;
            let mut ok = companions
                .iter()
                .map(|c| direct_sum(&seed, c).map(|g| verify_golay(&g).is_golay()))
                .collect::<Result<Vec<_>, _>>()?;
            // exactly eight companions are expected per seed
            if companions.len() != 8 {
                ok.push(false);
            }
            Ok(ok)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let checks: Vec<bool> = results.into_iter().flatten().collect();

    let valid = enumerate_valid_permutations();
    let mut numbered = NUMBERED_PERMUTATIONS.to_vec();
    numbered.sort();
    let listed: Vec<[u8; 4]> = valid.iter().map(|l| l.mapping()).collect();
    let permutation_census_ok = listed == numbered;

    let table = table1(&cfg.parity, &cfg.g78)?;
    let properties_ok = verify_properties(&table).all_ok();
    let bibd = incidence_matrix(&table)
        .ok()
        .and_then(|q| q.params)
        .map(|d| [d.v, d.b, d.r, d.k, d.lambda]);
    let turyn = check_turyn_equivalence();
    let forney = check_forney_equivalence();
    let codes_golay = checks.iter().filter(|&&b| b).count();
    let pass = codes_golay == checks.len()
        && checks.len() == seeds.len() * 8
        && permutation_census_ok
        && properties_ok
        && bibd == Some([8, 56, 14, 2, 2])
        && turyn
        && forney;
    Ok(SweepSummary {
        seeds: seeds.len(),
        codes_checked: checks.len(),
        codes_golay,
        valid_permutations: listed,
        permutation_census_ok,
        properties_ok,
        bibd,
        turyn,
        forney,
        pass,
    })
}

fn sweep_text(s: &SweepSummary) -> String {
    let perms: Vec<String> = s
        .valid_permutations
        .iter()
        .map(|[a, b, c, d]| format!("{a}{b}{c}{d}"))
        .collect();
    let bibd = s
        .bibd
        .map(|p| format!("{},{},{},{},{}", p[0], p[1], p[2], p[3], p[4]))
        .unwrap_or_else(|| "none".into());
    format!(
        "seeds: {}\ncodes_checked: {}\ncodes_golay: {}\nvalid_permutations: {}\npermutation_census_ok: {}\nproperties_ok: {}\nbibd: {}\nturyn: {}\nforney: {}\nresult: {}\n",
        s.seeds,
        s.codes_checked,
        s.codes_golay,
        perms.join(" "),
        s.permutation_census_ok,
        s.properties_ok,
        bibd,
        s.turyn,
        s.forney,
        if s.pass { "pass" } else { "FAIL" }
    )
}

/// Executes a validated configuration. Encode/decode read from `input` when
/// no words are given on the command line.
pub fn run(cfg: &CliConfig, input: &mut dyn BufRead) -> Result<RunOutput, CliError> {
    let variant = cfg.variant.unwrap_or(1);
    let machine = cfg.format == Format::Machine;
    match &cfg.subcommand {
        Subcmd::Construct => {
            let g = build_variant(&cfg.parity, variant, &cfg.g78)?;
            let text = if machine {
                let rows: Vec<String> =
                    g.generator().rows().iter().map(|r| r.to_string()).collect();
                let doc = json!({
                    "p": cfg.parity.to_string(),
                    "variant": variant,
                    "generator": rows,
                });
                serde_json::to_string_pretty(&doc).unwrap() + "\n"
            } else {
                g.generator().to_text()
            };
            Ok(RunOutput::ok(text))
        }
        Subcmd::Verify => match cfg.variant {
            Some(v) => {
                let report = verify_golay(&build_variant(&cfg.parity, v, &cfg.g78)?);
                let text = if machine {
                    report.to_json() + "\n"
                } else {
                    report.to_text()
                };
                Ok(RunOutput::checked(text, report.is_golay()))
            }
            None => {
                let summary = full_sweep(cfg)?;
                let text = if machine {
                    serde_json::to_string_pretty(&summary).unwrap() + "\n"
                } else {
                    sweep_text(&summary)
                };
                Ok(RunOutput::checked(text, summary.pass))
            }
        },
        Subcmd::Table { incidence } => {
            let table = table1(&cfg.parity, &cfg.g78)?;
            if *incidence {
                let q = match incidence_matrix(&table) {
                    Ok(q) => q,
                    Err(e) => return Ok(RunOutput::checked(format!("{e}\n"), false)),
                };
                let text = if machine {
                    let rows: Vec<String> =
                        q.entries.rows().iter().map(|r| r.to_string()).collect();
                    serde_json::to_string_pretty(&json!({
                        "columns": q.columns,
                        "rows": rows,
                        "params": q.params,
                    }))
                    .unwrap()
                        + "\n"
                } else {
                    let cols: Vec<String> = q.columns.iter().map(u8::to_string).collect();
                    let params = q
                        .params
                        .map(|d| {
                            format!(
                                "v={} b={} r={} k={} lambda={}",
                                d.v, d.b, d.r, d.k, d.lambda
                            )
                        })
                        .unwrap_or_else(|| "not a balanced design".into());
                    format!(
                        "# {params}\n# columns: {}\n{}",
                        cols.join(" "),
                        q.entries.to_text()
                    )
                };
                return Ok(RunOutput::checked(text, q.params.is_some()));
            }
            let text = match cfg.format {
                Format::Text => table.to_text(),
                Format::Csv => table.to_csv(),
                Format::Machine => table.to_json() + "\n",
            };
            Ok(RunOutput::ok(text))
        }
        Subcmd::Encode { words } => {
            let g = build_variant(&cfg.parity, variant, &cfg.g78)?;
            let mut pairs = Vec::new();
            for w in read_words(words, input)? {
                let msg = parse_word(&w, K)?;
                pairs.push((msg.clone(), encode(&msg, &g)?));
            }
            let text = if machine {
                let docs: Vec<_> = pairs
                    .iter()
                    .map(|(m, c)| json!({"message": m.to_string(), "codeword": c.to_string()}))
                    .collect();
                serde_json::to_string_pretty(&docs).unwrap() + "\n"
            } else {
                pairs.iter().map(|(_, c)| format!("{c}\n")).collect()
            };
            Ok(RunOutput::ok(text))
        }
        Subcmd::Decode { words, decoder } => {
            let g = build_variant(&cfg.parity, variant, &cfg.g78)?;
            let trellis = (*decoder == DecoderKind::Trellis).then(|| build_trellis(&g));
            let mut results = Vec::new();
            for w in read_words(words, input)? {
                let r = parse_word(&w, N)?;
                let res = match &trellis {
                    Some(t) => decode_trellis(&r, t)?,
                    None => decode_ml(&r, &g)?,
                };
                results.push((r, res));
            }
            let text = if machine {
                let docs: Vec<_> = results
                    .iter()
                    .map(|(r, d)| {
                        json!({
                            "received": r.to_string(),
                            "codeword": d.codeword.to_string(),
                            "message": d.message.to_string(),
                            "distance": d.distance,
                            "tie": d.tie,
                        })
                    })
                    .collect();
                serde_json::to_string_pretty(&docs).unwrap() + "\n"
            } else {
                results
                    .iter()
                    .map(|(_, d)| {
                        format!("{} {} {} {}\n", d.codeword, d.message, d.distance, d.tie)
                    })
                    .collect()
            };
            Ok(RunOutput::ok(text))
        }
        Subcmd::Simulate { p, trials, seed } => {
            let g = build_variant(&cfg.parity, variant, &cfg.g78)?;
            let stats = simulate_bsc(&g, *p, *trials, *seed)?;
            let text = if machine {
                stats.to_json() + "\n"
            } else {
                stats.to_text()
            };
            Ok(RunOutput::ok(text))
        }
    }
}
