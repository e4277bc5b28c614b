//! `axial`: verification and replication front end.
//!
//! Exit status is 0 when every check passes, 1 when a check fails and 2 when
//! the input could not be read or understood.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use axial_core::algebra::{axis_reports, AlgebraError, AxisReport, FusionLaw, Verdict};
use axial_core::axet::{AxetError, AxetKind, C2Axet};
use axial_core::catalog::{self, CatalogError};
use axial_core::io::{parse_algebra, parse_axet, parse_scalar, serialize_algebra, serialize_axet, AlgebraDocument, IoError};
use axial_core::replicate::{self, Check, Report, ReplicateError};
use axial_core::{Field, FieldError, Scalar};
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

#[derive(Parser)]
#[command(name = "axial", version, about = "Exact verification of axial algebras and C2-axets")]
struct Cli {
    /// Output format for reports.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Check A1-A4 for every axis listed in an .axalg document.
    Verify(VerifyArgs),
    /// Built-in algebras.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Build, close and classify C2-axets.
    #[command(subcommand)]
    Axet(AxetCommand),
    /// Rerun the computations behind the skew-axet non-existence arguments.
    #[command(subcommand)]
    Replicate(ReplicateCommand),
}

#[derive(Args, Clone, Default)]
struct Parameters {
    /// Value for alpha, as an expression in the base field.
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Value for beta.
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
    beta: Option<String>,
    /// Value for eta (Jordan type).
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
    eta: Option<String>,
    /// Work over F_p instead of Q.
    #[arg(long = "char", value_name = "P")]
    characteristic: Option<u64>,
}

impl Parameters {
    fn given(&self) -> Vec<(&'static str, &str)> {
        [("alpha", &self.alpha), ("beta", &self.beta), ("eta", &self.eta)]
            .into_iter()
            .filter_map(|(n, v)| v.as_deref().map(|v| (n, v)))
            .collect()
    }
}

#[derive(Args)]
struct VerifyArgs {
    file: PathBuf,
    #[command(flatten)]
    params: Parameters,
    /// Report A4 failures without failing the run.
    #[arg(long)]
    allow_nonprimitive: bool,
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List the built-in algebras.
    List,
    /// Print an .axalg document for a built-in algebra.
    Build {
        name: String,
        #[command(flatten)]
        params: Parameters,
        /// Write the document here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum AxetCommand {
    /// Print an .axet document for X(n) or X'(k+2k).
    Build {
        #[arg(value_enum)]
        kind: AxetFamily,
        parameter: usize,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Smallest subaxet containing the given points (labels when the axet has them).
    Closure {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        points: Vec<i64>,
    },
    /// Check the axet axioms and identify the axet.
    Classify { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum AxetFamily {
    Regular,
    Skew,
}

#[derive(Subcommand)]
enum ReplicateCommand {
    /// Characteristic constraints for the 6A quotient parameters.
    #[command(name = "lemma-6Aquot")]
    Lemma6AQuot,
    /// Residual of the eigenvector equation for 1 - c in 6A.
    #[command(name = "lemma-6A")]
    Lemma6A {
        #[arg(long = "char", value_name = "P")]
        characteristic: Option<u64>,
    },
    /// Census and subaxets of X'(k+2k).
    Axets {
        #[arg(long, default_value_t = 64)]
        kmax: usize,
    },
    /// Congruence witnesses and the even-case label trace.
    EvenCase {
        #[arg(long, default_value_t = 16)]
        qmax: u64,
    },
    /// s-vector and eigenvector identities in the 6A family.
    FamilyLemmas,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    File { path: String, source: std::io::Error },
    #[error("{path}: {source} (at {location})", location = source.location())]
    Document { path: String, source: IoError },
    #[error("--{name}: {source}")]
    Expression { name: String, source: IoError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Axet(#[from] AxetError),
    #[error(transparent)]
    Replicate(#[from] ReplicateError),
}

enum Output {
    Report(Report),
    Text(String),
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::File { path: path.display().to_string(), source })
}

fn write_or_print(text: String, output: Option<&Path>) -> Result<Output, CliError> {
    match output {
        Some(p) => {
            fs::write(p, &text).map_err(|source| CliError::File { path: p.display().to_string(), source })?;
            Ok(Output::Text(String::new()))
        }
        None => Ok(Output::Text(text)),
    }
}

fn expression(name: &str, text: &str, field: &Field) -> Result<Scalar, CliError> {
    parse_scalar(text, field).map_err(|source| CliError::Expression { name: name.into(), source })
}

fn base_field(characteristic: Option<u64>) -> Result<Field, CliError> {
    Ok(match characteristic {
        None => Field::rationals(),
        Some(p) => Field::prime(p)?,
    })
}

fn verdict_check(axis: &str, tag: &str, what: &str, v: &Verdict, waived: bool) -> Check {
    let passed = v.is_pass() || waived;
    let mut c = Check::new(format!("axis {axis}: {tag} {what}"), passed);
    match v {
        Verdict::Pass => {}
        Verdict::Fail(why) if waived => c = c.with("waived", why),
        Verdict::Fail(why) => c = c.with("violated", format!("{tag}: {why}")),
        Verdict::NotEvaluated(why) => c = c.with("not evaluated", why),
    }
    c
}

fn axis_checks(doc: &AlgebraDocument, index: usize, r: &AxisReport, allow_nonprimitive: bool) -> Vec<Check> {
    let alg = &doc.algebra;
    let name = &alg.names()[index];
    let mut a2 = verdict_check(name, "A2", "semisimple with spectrum in the fusion set", &r.a2, false);
    if !r.dims.is_empty() {
        let dims: Vec<String> = r.dims.iter().map(|(e, d)| format!("{e}:{d}")).collect();
        a2 = a2.with("eigenspace dimensions", dims.join(" "));
    }
    let mut a3 = verdict_check(name, "A3", "eigenspace products obey the fusion law", &r.a3, false);
    for v in r.violations.iter().take(3) {
        let allowed: Vec<String> = v.allowed.iter().map(|e| e.to_string()).collect();
        a3 = a3
            .with(
                format!("{} x {} (vectors {}, {})", v.left, v.right, v.left_index, v.right_index),
                format!("{} outside span of {{{}}}", alg.describe(&v.product), allowed.join(", ")),
            )
            .with("certificate", alg.describe(&v.certificate));
    }
    vec![
        verdict_check(name, "A1", "idempotent", &r.a1, false),
        a2,
        a3,
        verdict_check(name, "A4", "primitive", &r.a4, allow_nonprimitive),
    ]
}

fn fusion_echo(law: &FusionLaw) -> Vec<String> {
    let mut lines = vec![match law.beta() {
        Some(b) => format!("fusion law M(alpha, beta) with alpha = {}, beta = {}", law.alpha(), b),
        None => format!("fusion law J(eta) with eta = {}", law.alpha()),
    }];
    let eig = law.eigenvalues();
    for (i, &l) in eig.iter().enumerate() {
        for &r in &eig[i..] {
            let out: Vec<String> = law.fuse(l, r).iter().map(|e| e.to_string()).collect();
            lines.push(format!("{l} * {r} -> {{{}}}", out.join(", ")));
        }
    }
    lines
}

fn verify(args: &VerifyArgs) -> Result<Report, CliError> {
    let path = args.file.display().to_string();
    let text = read(&args.file)?;
    let mut doc = parse_algebra(&text).map_err(|source| CliError::Document { path: path.clone(), source })?;
    let given = args.params.given();
    let vars = doc.algebra.field().variables().to_vec();
    if !given.is_empty() || args.params.characteristic.is_some() {
        if vars.is_empty() {
            return Err(CliError::Usage(format!(
                "{path}: parameters and --char apply only to documents over a function field, this one is over {}",
                doc.algebra.field()
            )));
        }
        let base = match args.params.characteristic {
            Some(p) => Field::prime(p)?,
            None => doc.algebra.field().base().clone(),
        };
        let mut assignments = BTreeMap::new();
        for (name, value) in &given {
            if !vars.iter().any(|v| v == name) {
                return Err(CliError::Usage(format!("{path}: the document has no variable {name}")));
            }
            assignments.insert(name.to_string(), expression(name, value, &base)?);
        }
        if let Some(missing) = vars.iter().find(|v| !assignments.contains_key(*v)) {
            return Err(CliError::Usage(format!("{path}: no value given for {missing}")));
        }
        doc = doc.specialize(&assignments)?;
    }

    let alg = &doc.algebra;
    let mut report = Report::new(
        format!("verify {path}"),
        format!("{} axes of a {}-dimensional algebra over {}", doc.axes.len(), alg.dim(), alg.field()),
    );
    for line in fusion_echo(&doc.law) {
        report.note(line);
    }
    let vectors: Vec<_> = doc.axes.iter().map(|&i| alg.basis(i)).collect();
    let reports = axis_reports(alg, &vectors, &doc.law)?;
    for (&i, r) in doc.axes.iter().zip(&reports) {
        for c in axis_checks(&doc, i, r, args.allow_nonprimitive) {
            report.push(c);
        }
    }
    Ok(report)
}

fn catalog_list(format: Format) -> Result<Output, CliError> {
    let q = Field::rationals();
    let mut rows = Vec::new();
    for name in catalog::NAMES {
        let e = catalog::build(name, &q, None)?;
        rows.push(serde_json::json!({
            "name": e.name,
            "dim": e.algebra.dim(),
            "field": e.algebra.field().to_string(),
            "axes": e.axes.len(),
            "axet": e.expected.to_string(),
            "constraints": e.constraints,
        }));
    }
    Ok(Output::Text(match format {
        Format::Machine => serde_json::to_string_pretty(&rows).expect("serializable") + "\n",
        Format::Text => rows
            .iter()
            .map(|r| {
                format!(
                    "{:<3} dim {:<2} over {:<15} {} axes, {:<6} {}\n",
                    r["name"].as_str().unwrap_or_default(),
                    r["dim"],
                    r["field"].as_str().unwrap_or_default(),
                    r["axes"],
                    r["axet"].as_str().unwrap_or_default(),
                    r["constraints"].as_str().unwrap_or_default()
                )
            })
            .collect(),
    }))
}

fn catalog_build(name: &str, params: &Parameters, output: Option<&Path>) -> Result<Output, CliError> {
    let base = base_field(params.characteristic)?;
    let value = |n: &str, t: &Option<String>| t.as_deref().map(|t| expression(n, t, &base)).transpose();
    let (alpha, beta, eta) = (value("alpha", &params.alpha)?, value("beta", &params.beta)?, value("eta", &params.eta)?);
    let unexpected = |flag: &str| CliError::Usage(format!("{name} does not take --{flag}"));
    let entry = match name {
        "2B" => {
            if eta.is_some() {
                return Err(unexpected("eta"));
            }
            match (alpha, beta) {
                (Some(a), Some(b)) => catalog::build_2b(&FusionLaw::monster(a, b)?),
                (None, None) => catalog::build_2b_generic(&base)?,
                _ => return Err(CliError::Usage("2B takes both --alpha and --beta or neither".into())),
            }
        }
        "3C" => {
            if alpha.is_some() || beta.is_some() {
                return Err(unexpected(if alpha.is_some() { "alpha" } else { "beta" }));
            }
            catalog::build("3C", &base, eta.as_ref())?
        }
        "6A" => {
            if beta.is_some() || eta.is_some() {
                return Err(CliError::Usage("6A takes only --alpha; beta is determined by alpha".into()));
            }
            catalog::build("6A", &base, alpha.as_ref())?
        }
        other => return Err(CatalogError::UnknownEntry(other.to_string()).into()),
    };
    write_or_print(serialize_algebra(&AlgebraDocument::from(&entry)), output)
}

fn load_axet(path: &Path) -> Result<C2Axet, CliError> {
    parse_axet(&read(path)?).map_err(|source| CliError::Document { path: path.display().to_string(), source })
}

fn axet_closure(path: &Path, points: &[i64]) -> Result<Report, CliError> {
    let x = load_axet(path)?;
    let resolve = |p: i64| -> Result<usize, CliError> {
        if x.labels().is_some() {
            x.point_of_label(p).ok_or_else(|| CliError::Usage(format!("no point has label {p}")))
        } else {
            usize::try_from(p)
                .ok()
                .filter(|&i| i < x.size())
                .ok_or_else(|| CliError::Usage(format!("point {p} out of range for size {}", x.size())))
        }
    };
    let z = points.iter().map(|&p| resolve(p)).collect::<Result<Vec<_>, _>>()?;
    let sub = x.closure(&z)?;
    let names: Vec<String> =
        sub.points.iter().map(|&p| x.label(p).map_or_else(|| p.to_string(), |l| format!("a_{l}"))).collect();
    let kind = match sub.axet.classify_2gen() {
        Ok(k) => k.to_string(),
        Err(e) => e.to_string(),
    };
    let mut report = Report::new(
        format!("axet closure {} --points {}", path.display(), points.iter().map(i64::to_string).collect::<Vec<_>>().join(",")),
        format!("closure in {} of {} points", x.kind(), x.size()),
    );
    report.push(
        Check::new("closure", true)
            .with("size", sub.points.len())
            .with("points", names.join(" "))
            .with("kind", kind),
    );
    Ok(report)
}

fn axet_classify(path: &Path) -> Result<Report, CliError> {
    let x = load_axet(path)?;
    let mut report = Report::new(format!("axet classify {}", path.display()), format!("axet of {} points", x.size()));
    let broken = x.check_axioms();
    let mut axioms = Check::new("tau maps are involutions fixing their point and closed under conjugation", broken.is_empty());
    for b in broken.iter().take(5) {
        axioms = axioms.with("violation", b);
    }
    report.push(axioms);
    let check = match x.classify_2gen() {
        Ok(k) => {
            let declared = x.kind();
            let agrees = declared == AxetKind::Abstract || declared == k;
            Check::new("2-generated and identified", agrees).with("kind", k).with("declared", declared)
        }
        Err(e) => Check::new("2-generated and identified", false).with("reason", e),
    };
    report.push(check);
    Ok(report)
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    Ok(match &cli.command {
        Command::Verify(args) => Output::Report(verify(args)?),
        Command::Catalog(CatalogCommand::List) => catalog_list(cli.format)?,
        Command::Catalog(CatalogCommand::Build { name, params, output }) => catalog_build(name, params, output.as_deref())?,
        Command::Axet(AxetCommand::Build { kind, parameter, output }) => {
            let x = match kind {
                AxetFamily::Regular => C2Axet::regular(*parameter)?,
                AxetFamily::Skew => C2Axet::skew(*parameter)?,
            };
            write_or_print(serialize_axet(&x), output.as_deref())?
        }
        Command::Axet(AxetCommand::Closure { file, points }) => Output::Report(axet_closure(file, points)?),
        Command::Axet(AxetCommand::Classify { file }) => Output::Report(axet_classify(file)?),
        Command::Replicate(r) => Output::Report(match r {
            ReplicateCommand::Lemma6AQuot => replicate::lemma_6a_quot()?,
            ReplicateCommand::Lemma6A { characteristic } => replicate::lemma_6a(*characteristic)?,
            ReplicateCommand::Axets { kmax } => replicate::axets(*kmax)?,
            ReplicateCommand::EvenCase { qmax } => replicate::even_case(*qmax)?,
            ReplicateCommand::FamilyLemmas => replicate::family_lemmas()?,
        }),
    })
}

fn color_enabled() -> bool {
    std::env::var("AXIAL_COLOR").is_ok_and(|v| matches!(v.as_str(), "1" | "always" | "true" | "yes"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Output::Text(t)) => {
            print!("{t}");
            ExitCode::SUCCESS
        }
        Ok(Output::Report(r)) => {
            match cli.format {
                Format::Text => print!("{}", r.render_text(color_enabled())),
                Format::Machine => println!("{}", serde_json::to_string_pretty(&r.to_json()).expect("serializable")),
            }
            if r.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
