//! The `littlewood` command line. Exit codes: 0 success, 1 usage or parse
//! error, 2 rule disagreement or failed verification.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use littlewood_core::betti::presentation;
use littlewood_core::complex::{complex_terms, enumerate_q};
use littlewood_core::modrule::{modify, modify_checked, Rule};
use littlewood_core::verify::{betti_table, VerificationReport};
use littlewood_core::{Error, Group, Label, ModOutcome, Partition, PartitionPair};
use serde::Serialize;

use crate::batch;
use crate::format::{
    betti_csv, family_text, BettiRecord, ModruleRecord, PresentationRecord, QsetRecord, ReportRecord, TermsRecord,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_FAILURE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "littlewood", version, about = "Homology of Littlewood complexes via modification rules")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    pub output: Output,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupName {
    Sp,
    O,
    Gl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RuleChoice {
    Both,
    Strip,
    Weyl,
}

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    #[arg(long, value_enum)]
    pub group: GroupName,
    /// `n` for sp and gl, `m` for o.
    #[arg(long)]
    pub dim: usize,
}

impl GroupArgs {
    fn group(&self) -> Group {
        match self.group {
            GroupName::Sp => Group::Sp(self.dim),
            GroupName::O => Group::O(self.dim),
            GroupName::Gl => Group::Gl(self.dim),
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct LabelArgs {
    /// Comma-separated parts; `0` is the empty partition.
    #[arg(long)]
    pub lambda: Partition,
    /// Second partition of a gl label.
    #[arg(long)]
    pub lambda2: Option<Partition>,
}

#[derive(Args, Debug, Clone)]
pub struct OptionalLabelArgs {
    #[arg(long)]
    pub lambda: Option<Partition>,
    #[arg(long, requires = "lambda")]
    pub lambda2: Option<Partition>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Degree and target of the homology of one complex.
    Modrule {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        label: LabelArgs,
        #[arg(long, value_enum, default_value_t = RuleChoice::Both)]
        rule: RuleChoice,
    },
    /// Terms of the complex by homological degree.
    Terms {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        label: LabelArgs,
        /// Highest degree listed.
        #[arg(long)]
        max: Option<usize>,
    },
    /// Labels whose homology is `[target]`, by degree (default target empty).
    Betti {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        target: OptionalLabelArgs,
        /// Largest internal degree.
        #[arg(long, default_value_t = 8)]
        max_size: usize,
    },
    /// Generator and relation of the module with the given label.
    Presentation {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        label: LabelArgs,
    },
    /// The family Q_ε up to a size bound.
    Qset {
        #[arg(long, allow_negative_numbers = true, value_parser = clap::value_parser!(i8).range(-1..=1))]
        epsilon: i8,
        #[arg(long)]
        max: usize,
    },
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Args, Debug, Clone)]
pub struct SampleArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Evaluation points per case.
    #[arg(long, default_value_t = 3)]
    pub points: usize,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Euler characteristic of each complex against its predicted homology.
    Euler {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        label: OptionalLabelArgs,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[command(flatten)]
        sample: SampleArgs,
    },
    /// Regular Bott inputs against rule preimages, for labels with at most
    /// n rows (n = dim for sp and gl, ⌊dim/2⌋ for o).
    Bijection {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        label: OptionalLabelArgs,
        #[arg(long, default_value_t = 5)]
        max_size: usize,
        /// Largest |μ| enumerated.
        #[arg(long, default_value_t = 8)]
        bound: usize,
    },
    /// Character of `[λ]` of Sp(2n) against the alternating sum of skew characters.
    Littlewood {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[command(flatten)]
        sample: SampleArgs,
    },
    /// Plethysm identities in every dimension and degree up to the bounds.
    Plethysm {
        #[arg(long, default_value_t = 5)]
        dim: usize,
        /// Largest degree.
        #[arg(long, default_value_t = 5)]
        max_size: usize,
        #[command(flatten)]
        sample: SampleArgs,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::RuleDisagreement { .. } | Error::SingularEvaluation | Error::WindowTooShort { .. } => EXIT_FAILURE,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_FAILURE, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn build_label(group: Group, lambda: Partition, lambda2: Option<Partition>) -> Result<Label, Failure> {
    match (group.takes_pairs(), lambda2) {
        (true, second) => Ok(Label::Pair(PartitionPair::new(lambda, second.unwrap_or_default()))),
        (false, None) => Ok(Label::Single(lambda)),
        (false, Some(_)) => Err(usage("--lambda2 is accepted only with --group gl")),
    }
}

fn optional_label(group: Group, args: &OptionalLabelArgs) -> Result<Option<Label>, Failure> {
    match &args.lambda {
        None => Ok(None),
        Some(l) => build_label(group, l.clone(), args.lambda2.clone()).map(Some),
    }
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string(value).map_err(|e| Failure { code: EXIT_FAILURE, message: e.to_string() })?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn reject_csv(output: Output) -> Result<(), Failure> {
    if output == Output::Csv {
        return Err(usage("--output csv is available only for betti"));
    }
    Ok(())
}

fn outcome_text(outcome: &ModOutcome<Label>) -> String {
    match outcome {
        ModOutcome::Vanishing => "vanishes".into(),
        ModOutcome::Concentrated { degree, tau } => format!("degree {degree}, tau {tau}"),
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let shown = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{shown}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{shown}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<u8, Failure> {
    match &cli.command {
        Command::Modrule { group, label, rule } => cmd_modrule(cli.output, group, label, *rule, out),
        Command::Terms { group, label, max } => cmd_terms(cli.output, group, label, *max, out),
        Command::Betti { group, target, max_size } => cmd_betti(cli.output, group, target, *max_size, out),
        Command::Presentation { group, label } => cmd_presentation(cli.output, group, label, out),
        Command::Qset { epsilon, max } => cmd_qset(cli.output, *epsilon, *max, out),
        Command::Verify(v) => cmd_verify(cli.output, v, out),
    }
}

fn cmd_modrule(
    output: Output,
    group: &GroupArgs,
    label: &LabelArgs,
    rule: RuleChoice,
    out: &mut dyn Write,
) -> Result<u8, Failure> {
    reject_csv(output)?;
    let g = group.group();
    let label = build_label(g, label.lambda.clone(), label.lambda2.clone())?;
    let (outcome, name) = match rule {
        RuleChoice::Both => (modify_checked(g, &label)?, "both"),
        RuleChoice::Strip => (modify(g, &label, Rule::Strip)?, Rule::Strip.name()),
        RuleChoice::Weyl => (modify(g, &label, Rule::Weyl)?, Rule::Weyl.name()),
    };
    match output {
        Output::Json => json_line(out, &ModruleRecord::new(g, &label, &outcome, name))?,
        _ => writeln!(out, "{}", outcome_text(&outcome))?,
    }
    Ok(EXIT_OK)
}

fn cmd_terms(
    output: Output,
    group: &GroupArgs,
    label: &LabelArgs,
    max: Option<usize>,
    out: &mut dyn Write,
) -> Result<u8, Failure> {
    reject_csv(output)?;
    let g = group.group();
    let label = build_label(g, label.lambda.clone(), label.lambda2.clone())?;
    let terms = complex_terms(g, &label, max)?;
    match output {
        Output::Json => json_line(out, &TermsRecord::from(&terms))?,
        _ => {
            for (i, summands) in terms.degrees.iter().enumerate() {
                if summands.is_empty() {
                    continue;
                }
                let listed: Vec<String> = summands.iter().map(ToString::to_string).collect();
                writeln!(out, "{i}: {}", listed.join(" + "))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_betti(
    output: Output,
    group: &GroupArgs,
    target: &OptionalLabelArgs,
    max_size: usize,
    out: &mut dyn Write,
) -> Result<u8, Failure> {
    let g = group.group();
    let target = optional_label(g, target)?;
    let table = betti_table(g, max_size, target.as_ref())?;
    match output {
        Output::Json => json_line(out, &BettiRecord::from(&table))?,
        Output::Csv => {
            let csv = betti_csv(&table).map_err(|e| Failure { code: EXIT_FAILURE, message: e.to_string() })?;
            write!(out, "{csv}")?;
        }
        Output::Text => {
            for (i, d, l) in table.rows() {
                writeln!(out, "{i} {d} {l}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_presentation(output: Output, group: &GroupArgs, label: &LabelArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    reject_csv(output)?;
    let g = group.group();
    let label = build_label(g, label.lambda.clone(), label.lambda2.clone())?;
    let p = presentation(g, &label)?;
    match output {
        Output::Json => json_line(
            out,
            &PresentationRecord {
                group: g.name().into(),
                dim: g.dim(),
                generator: p.generator.to_text(),
                relation: p.relation.to_text(),
            },
        )?,
        _ => {
            writeln!(out, "generator {}", p.generator)?;
            writeln!(out, "relation {}", p.relation)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_qset(output: Output, epsilon: i8, max: usize, out: &mut dyn Write) -> Result<u8, Failure> {
    reject_csv(output)?;
    let family = enumerate_q(epsilon, max);
    match output {
        Output::Json => json_line(
            out,
            &QsetRecord { epsilon, max, partitions: family.iter().map(|p| p.parts().to_vec()).collect() },
        )?,
        _ => writeln!(out, "{}", family_text(&family))?,
    }
    Ok(EXIT_OK)
}

fn labels_for(group: Group, label: &OptionalLabelArgs, max_size: usize, bijective: bool) -> Result<Vec<Label>, Failure> {
    Ok(match optional_label(group, label)? {
        Some(l) => vec![l],
        None if bijective => batch::bijection_labels_up_to(group, max_size),
        None => batch::labels_up_to(group, max_size),
    })
}

fn cmd_verify(output: Output, command: &VerifyCommand, out: &mut dyn Write) -> Result<u8, Failure> {
    reject_csv(output)?;
    let reports = match command {
        VerifyCommand::Euler { group, label, max_size, sample } => {
            let g = group.group();
            let labels = labels_for(g, label, *max_size, false)?;
            batch::euler_batch(g, &labels, sample.seed, sample.points)?
        }
        VerifyCommand::Bijection { group, label, max_size, bound } => {
            let g = group.group();
            let labels = labels_for(g, label, *max_size, true)?;
            batch::bijection_batch(g, &labels, *bound)?
        }
        VerifyCommand::Littlewood { dim, max_size, sample } => {
            batch::littlewood_batch(*dim, *max_size, sample.seed, sample.points)?
        }
        VerifyCommand::Plethysm { dim, max_size, sample } => {
            if 2 * dim > crate::points::PRIMES.len() {
                return Err(usage(format!("--dim is at most {}", crate::points::PRIMES.len() / 2)));
            }
            batch::plethysm_batch(*dim, *max_size, sample.seed, sample.points)
        }
    };
    emit_reports(output, &reports, out)
}

fn emit_reports(output: Output, reports: &[VerificationReport], out: &mut dyn Write) -> Result<u8, Failure> {
    let failed = reports.iter().filter(|r| !r.passed).count();
    match output {
        Output::Json => {
            for r in reports {
                json_line(out, &ReportRecord::from(r))?;
            }
        }
        _ => {
            for r in reports {
                let status = if r.passed { "PASS" } else { "FAIL" };
                write!(out, "{status} {} {}", r.id, r.params)?;
                if let Some(seed) = r.seed {
                    write!(out, " seed={seed}")?;
                }
                if let Some(w) = &r.witness {
                    write!(out, " witness: {w}")?;
                }
                writeln!(out)?;
            }
            writeln!(out, "{} checks, {failed} failed", reports.len())?;
        }
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILURE })
}
