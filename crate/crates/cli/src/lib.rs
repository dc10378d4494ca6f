//! The `moisil` command-line front end.
//!
//! Every command reads at most one document (from a file argument or standard
//! input) and produces a [`Report`]. Exit codes: 0 pass, 1 a verified
//! failure, 2 a usage or input error.

pub mod document;
pub mod samples;

use std::collections::BTreeMap;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use moisil::boolalg::{Elem, FiniteBooleanAlgebra};
use moisil::construct::{
    build_j, build_t, lambda_functor, sigma, IdealSequenceObject, NaturalityConfig, TupleAlgebra,
};
use moisil::lm::{
    boolean_center, canonical, check_axioms, check_derived_props, j_to_phi, moisil_represent,
    phi_to_j, AxiomSystem, LMAlgebra, Signature,
};
use moisil::mvn::{
    check_l_proper, check_mv_axioms, check_mvn_axioms, check_somv_condition, mv_chain, SomvInput,
};
use moisil::stone::{check_space_roundtrip, check_stone_roundtrip, theta_a, theta_t};
use moisil::suites::{self, Family};
use moisil::{AxiomReport, Witness};

pub use document::{canonical_json, parse_document, Document, ParseError};

#[derive(Debug, Parser)]
#[command(
    name = "moisil",
    version,
    about = "Finite Łukasiewicz–Moisil algebra workbench"
)]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Print only the produced document instead of the full report.
    #[arg(long, global = true)]
    pub raw: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a document.
    Gen {
        #[arg(value_enum)]
        what: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        atoms: usize,
        /// Ideal generators `g_1,…,g_{n-1}` as atom bit masks (for `sigma`).
        #[arg(long, value_delimiter = ',')]
        generators: Vec<Elem>,
    },
    /// Check an axiom system or condition.
    Check {
        #[arg(long, value_enum)]
        system: SystemArg,
        /// The `n` of the MV_n schemata.
        #[arg(long)]
        n: Option<usize>,
        file: Option<String>,
    },
    /// Convert an LM algebra between the φ and J signatures.
    Convert {
        #[arg(long, value_enum)]
        to: SignatureArg,
        file: Option<String>,
    },
    /// The Boolean center of an LM algebra.
    Center { file: Option<String> },
    /// The ideal-sequence object of a J-signature LM algebra.
    Lambda { file: Option<String> },
    /// The J-signature LM algebra of an ideal-sequence object.
    Sigma { file: Option<String> },
    /// Dualize an ideal-sequence object into a space, or back.
    Dualize {
        /// Also dualize back and check the round trip.
        #[arg(long)]
        roundtrip: bool,
        file: Option<String>,
    },
    /// The Moisil representation of a φ-signature LM algebra.
    Represent { file: Option<String> },
    /// Run verification suites over generated instances.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 2)]
        max_atoms: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Canonical,
    T,
    J,
    Sigma,
    Mvchain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SystemArg {
    #[value(name = "L")]
    L,
    #[value(name = "Lalt")]
    Lalt,
    #[value(name = "J")]
    J,
    Derived,
    Mv,
    Mvn,
    Proper,
    Somv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignatureArg {
    Phi,
    J,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    Adjunction,
    Equivalence,
    Duality,
    Mv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub law: String,
    pub witness: Option<Witness>,
    pub rendered: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorInfo {
    pub class: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Stats {
    pub laws_checked: u64,
    pub sizes: BTreeMap<String, usize>,
    pub wall_time_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub verdict: Verdict,
    pub violations: Vec<Violation>,
    pub stats: Stats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    fn new(command: Vec<String>) -> Self {
        Report {
            command,
            verdict: Verdict::Pass,
            violations: Vec::new(),
            stats: Stats {
                laws_checked: 0,
                sizes: BTreeMap::new(),
                wall_time_ms: 0,
            },
            output: None,
            error: None,
            notes: Vec::new(),
        }
    }

    fn fail_with(&mut self, class: &str, message: impl Into<String>) {
        self.verdict = Verdict::Error;
        self.error = Some(ErrorInfo {
            class: class.into(),
            message: message.into(),
        });
    }

    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Error => 2,
        }
    }
}

/// What to print and how, after a run.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub format: Format,
    pub raw: bool,
    /// Help or version text from the argument parser.
    pub message: Option<String>,
}

impl Outcome {
    pub fn code(&self) -> i32 {
        self.report.exit_code()
    }

    pub fn render(&self) -> String {
        if let Some(message) = &self.message {
            return message.clone();
        }
        if self.raw {
            if let Some(out) = &self.report.output {
                return canonical_json(out);
            }
        }
        emit_report(&self.report, self.format)
    }
}

/// Whether a command failed on its input or on the law it was checking.
enum Failure {
    Input(String, String),
    Core(moisil::Error),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Input(e.class().into(), e.to_string())
    }
}

impl From<moisil::Error> for Failure {
    fn from(e: moisil::Error) -> Self {
        Failure::Core(e)
    }
}

type Run<T> = Result<T, Failure>;

/// Parses `argv` (including the program name) and runs the command.
/// `read` resolves a file argument, or standard input for `None`.
pub fn run_command<F>(argv: &[String], mut read: F) -> Outcome
where
    F: FnMut(Option<&str>) -> std::io::Result<String>,
{
    let start = Instant::now();
    let mut report = Report::new(argv.iter().skip(1).cloned().collect());
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational =
                matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            if informational {
                return Outcome {
                    report,
                    format: Format::Text,
                    raw: false,
                    message: Some(e.to_string()),
                };
            }
            report.fail_with("usage", e.to_string());
            return Outcome {
                report,
                format: Format::Json,
                raw: false,
                message: None,
            };
        }
    };
    let result = dispatch(&cli.command, &mut report, &mut read);
    match result {
        Ok(()) => {}
        Err(Failure::Input(class, message)) => report.fail_with(&class, message),
        Err(Failure::Core(e)) => match e.report() {
            Some(r) => {
                let before = report.violations.len();
                record(&mut report, r, None);
                if report.violations.len() == before {
                    report.violations.push(Violation {
                        law: r.system.clone(),
                        witness: None,
                        rendered: e.to_string(),
                    });
                }
                report.notes.push(e.to_string());
                report.verdict = Verdict::Fail;
            }
            None => report.fail_with("input", e.to_string()),
        },
    }
    if report.verdict == Verdict::Pass && !report.violations.is_empty() {
        report.verdict = Verdict::Fail;
    }
    report.stats.wall_time_ms = start.elapsed().as_millis() as u64;
    Outcome {
        report,
        format: cli.format,
        raw: cli.raw,
        message: None,
    }
}

/// Runs a command line against files on disk and the given stdin text.
pub fn run_with_stdin(argv: &[&str], stdin: &str) -> Outcome {
    let argv: Vec<String> = argv.iter().map(|s| s.to_string()).collect();
    run_command(&argv, |file| match file {
        Some(path) => std::fs::read_to_string(path),
        None => Ok(stdin.to_string()),
    })
}

fn record(report: &mut Report, axioms: &AxiomReport, doc: Option<&Document>) {
    report.stats.laws_checked += axioms.laws_checked();
    for f in axioms.failures() {
        let rendered = match &f.witness {
            Some(w) => {
                let names: Vec<String> = w
                    .elements
                    .iter()
                    .map(|&x| doc.map_or_else(|| format!("#{x}"), |d| d.render_element(x)))
                    .collect();
                let mut text = format!("{} fails", f.law);
                if !w.indices.is_empty() {
                    text.push_str(&format!(" at indices {:?}", w.indices));
                }
                match names.len() {
                    0 => {}
                    1 => text.push_str(&format!(" on {}", names[0])),
                    _ => text.push_str(&format!(" on ({})", names.join(", "))),
                }
                text
            }
            None => format!("{} fails", f.law),
        };
        let rendered = match &f.note {
            Some(note) => format!("{rendered}; {note}"),
            None => rendered,
        };
        report.violations.push(Violation {
            law: f.law.clone(),
            witness: f.witness.clone(),
            rendered,
        });
    }
    report.notes.extend(axioms.notes.iter().cloned());
}

fn read_doc<F>(read: &mut F, file: &Option<String>, report: &mut Report) -> Run<Document>
where
    F: FnMut(Option<&str>) -> std::io::Result<String>,
{
    let text = read(file.as_deref())
        .map_err(|e| Failure::Input("io".into(), format!("cannot read input: {e}")))?;
    let doc = parse_document(&text)?;
    let size = match &doc {
        Document::Bool(b) => b.size(),
        Document::Lm { algebra, .. } => algebra.size(),
        Document::BoolIdeals(obj) => obj.base().size(),
        Document::Space(x) => x.point_count(),
        Document::Mv(a) => a.size(),
    };
    report
        .stats
        .sizes
        .insert(format!("input_{}", doc.kind()), size);
    Ok(doc)
}

fn expect_lm(doc: Document) -> Run<(LMAlgebra, Option<Vec<String>>)> {
    match doc {
        Document::Lm { algebra, labels } => Ok((algebra, labels)),
        other => Err(wrong_kind("lm", &other)),
    }
}

fn wrong_kind(expected: &str, got: &Document) -> Failure {
    Failure::Input(
        "schema".into(),
        format!("expected a `{expected}` document, got `{}`", got.kind()),
    )
}

fn tuple_labels(t: &TupleAlgebra) -> Vec<String> {
    (0..t.size()).map(|x| t.render(x)).collect()
}

fn chain_labels(n: usize) -> Vec<String> {
    (0..=n)
        .map(|j| match j {
            0 => "0".to_string(),
            j if j == n => "1".to_string(),
            j => format!("{j}/{n}"),
        })
        .collect()
}

fn set_output(report: &mut Report, doc: &Document) {
    report.output = Some(doc.to_value());
}

fn dispatch<F>(command: &Command, report: &mut Report, read: &mut F) -> Run<()>
where
    F: FnMut(Option<&str>) -> std::io::Result<String>,
{
    match command {
        Command::Gen {
            what,
            n,
            atoms,
            generators,
        } => {
            let base = || FiniteBooleanAlgebra::with_atoms(*atoms);
            let doc = match what {
                GenKind::Canonical => Document::Lm {
                    algebra: canonical(*n)?,
                    labels: Some(chain_labels(*n)),
                },
                GenKind::T => {
                    let t = build_t(&base()?, *n)?;
                    Document::Lm {
                        labels: Some(tuple_labels(&t)),
                        algebra: t.into_algebra(),
                    }
                }
                GenKind::J => {
                    let j = build_j(&base()?, *n)?;
                    Document::Lm {
                        labels: Some(tuple_labels(&j)),
                        algebra: j.into_algebra(),
                    }
                }
                GenKind::Sigma => {
                    let gens = if generators.is_empty() {
                        vec![base()?.top(); n.saturating_sub(1)]
                    } else {
                        generators.clone()
                    };
                    let obj = IdealSequenceObject::new(base()?, *n, &gens)
                        .map_err(|e| Failure::Input("invariant".into(), e.to_string()))?;
                    let s = sigma(&obj)?;
                    Document::Lm {
                        labels: Some(tuple_labels(&s)),
                        algebra: s.into_algebra(),
                    }
                }
                GenKind::Mvchain => Document::Mv(mv_chain(*n)?),
            };
            report.stats.sizes.insert("output".into(), doc_size(&doc));
            set_output(report, &doc);
        }
        Command::Check { system, n, file } => {
            let doc = read_doc(read, file, report)?;
            let axioms = match (system, &doc) {
                (SystemArg::L | SystemArg::Lalt | SystemArg::J, Document::Lm { algebra, .. }) => {
                    let sys = match system {
                        SystemArg::L => AxiomSystem::L,
                        SystemArg::Lalt => AxiomSystem::LAlt,
                        _ => AxiomSystem::J,
                    };
                    check_axioms(algebra, sys)?
                }
                (SystemArg::Derived, Document::Lm { algebra, .. }) => check_derived_props(algebra)?,
                (SystemArg::Mv, Document::Mv(a)) => check_mv_axioms(a),
                (SystemArg::Mvn, Document::Mv(a)) => {
                    let n = n.ok_or_else(|| {
                        Failure::Input("usage".into(), "--system mvn requires --n".into())
                    })?;
                    check_mvn_axioms(a, n)
                }
                (SystemArg::Proper, Document::BoolIdeals(obj)) => check_l_proper(obj),
                (SystemArg::Somv, Document::BoolIdeals(obj)) => {
                    check_somv_condition(SomvInput::Ideals(obj))
                }
                (SystemArg::Somv, Document::Space(x)) => check_somv_condition(SomvInput::Space(x)),
                (_, other) => {
                    return Err(Failure::Input(
                        "schema".into(),
                        format!(
                            "--system {system:?} does not apply to a `{}` document",
                            other.kind()
                        ),
                    ))
                }
            };
            record(report, &axioms, Some(&doc));
        }
        Command::Convert { to, file } => {
            let (algebra, labels) = expect_lm(read_doc(read, file, report)?)?;
            let converted = match (to, algebra.signature()) {
                (SignatureArg::J, Signature::Phi) => phi_to_j(&algebra)?,
                (SignatureArg::Phi, Signature::J) => j_to_phi(&algebra)?,
                (_, sig) => {
                    return Err(Failure::Input(
                        "schema".into(),
                        format!("document already has the {sig} signature"),
                    ))
                }
            };
            set_output(
                report,
                &Document::Lm {
                    algebra: converted,
                    labels,
                },
            );
        }
        Command::Center { file } => {
            let (algebra, _) = expect_lm(read_doc(read, file, report)?)?;
            let center = boolean_center(&algebra)?;
            report
                .stats
                .sizes
                .insert("center".into(), center.elements().len());
            set_output(report, &Document::Bool(center.algebra().clone()));
        }
        Command::Lambda { file } => {
            let (algebra, _) = expect_lm(read_doc(read, file, report)?)?;
            let obj = lambda_functor(&algebra)?;
            set_output(report, &Document::BoolIdeals(obj));
        }
        Command::Sigma { file } => {
            let doc = read_doc(read, file, report)?;
            let Document::BoolIdeals(obj) = doc else {
                return Err(wrong_kind("boolideals", &doc));
            };
            let s = sigma(&obj)?;
            report.stats.sizes.insert("output".into(), s.size());
            set_output(
                report,
                &Document::Lm {
                    labels: Some(tuple_labels(&s)),
                    algebra: s.into_algebra(),
                },
            );
        }
        Command::Dualize { roundtrip, file } => {
            let doc = read_doc(read, file, report)?;
            let cfg = NaturalityConfig::default();
            match &doc {
                Document::BoolIdeals(obj) => {
                    let x = theta_a(obj)?;
                    if *roundtrip {
                        let back = theta_t(&x)?;
                        let same = back.n() == obj.n()
                            && back.base().atom_count() == obj.base().atom_count()
                            && back.generators() == obj.generators();
                        let mut r = check_stone_roundtrip(obj, &cfg)?;
                        r.record("dualize-twice-is-identity-up-to-renaming", same, 1, None);
                        record(report, &r, Some(&doc));
                    }
                    set_output(report, &Document::Space(x));
                }
                Document::Space(x) => {
                    let obj = theta_t(x)?;
                    if *roundtrip {
                        let back = theta_a(&obj)?;
                        let same = back.n() == x.n()
                            && back.point_count() == x.point_count()
                            && back.opens() == x.opens();
                        let mut r = check_space_roundtrip(x, &cfg)?;
                        r.record("dualize-twice-is-identity-up-to-renaming", same, 1, None);
                        record(report, &r, Some(&doc));
                    }
                    set_output(report, &Document::BoolIdeals(obj));
                }
                other => return Err(wrong_kind("boolideals` or `space", other)),
            }
        }
        Command::Represent { file } => {
            let (algebra, _) = expect_lm(read_doc(read, file, report)?)?;
            let rep = moisil_represent(&algebra)?;
            record(report, &rep.report, None);
            report.output = Some(json!({
                "n": rep.n,
                "ultrafilters": rep.ultrafilters,
                "components": rep.components,
                "images": rep.images,
                "onto_full_power": rep.is_onto_full_power(),
            }));
        }
        Command::Verify {
            suite,
            max_atoms,
            max_n,
            seed,
        } => {
            let cfg = NaturalityConfig {
                seed: *seed,
                ..NaturalityConfig::default()
            };
            let family = Family::bounded(*max_atoms, *max_n);
            let instances = suites::instances(&family)?;
            report
                .stats
                .sizes
                .insert("instances".into(), instances.len());
            let mut reports = Vec::new();
            let all = *suite == SuiteArg::All;
            if all {
                reports.push(suites::axioms(*max_n, 100, *seed)?);
                reports.push(suites::definitions(&instances)?);
                reports.push(suites::cardinality(*max_atoms, *max_n)?);
                reports.push(suites::closed_forms(*max_atoms, *max_n)?);
                reports.push(suites::represent(&instances)?);
            }
            if all || *suite == SuiteArg::Adjunction {
                reports.push(suites::adjunction(&instances)?);
            }
            if all || *suite == SuiteArg::Equivalence {
                reports.push(suites::equivalence(&instances, *max_atoms, *max_n, &cfg)?);
            }
            if all || *suite == SuiteArg::Duality {
                reports.push(suites::duality(*max_atoms, *max_n, &cfg)?);
            }
            if all || *suite == SuiteArg::Mv {
                reports.push(suites::mv(*max_n, *max_atoms, *seed)?);
            }
            for r in &reports {
                record(report, r, None);
            }
            report.stats.sizes.insert("suites".into(), reports.len());
        }
    }
    Ok(())
}

fn doc_size(doc: &Document) -> usize {
    match doc {
        Document::Bool(b) => b.size(),
        Document::Lm { algebra, .. } => algebra.size(),
        Document::BoolIdeals(obj) => obj.base().size(),
        Document::Space(x) => x.point_count(),
        Document::Mv(a) => a.size(),
    }
}

/// JSON is canonical (sorted keys, one line); text is for people.
pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => canonical_json(&serde_json::to_value(report).expect("reports serialize")),
        Format::Text => {
            let verdict = match report.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "fail",
                Verdict::Error => "error",
            };
            let mut out = format!(
                "command: {}\nverdict: {verdict}\n",
                report.command.join(" ")
            );
            if let Some(e) = &report.error {
                out.push_str(&format!("error ({}): {}\n", e.class, e.message));
            }
            for v in &report.violations {
                out.push_str(&format!("violation: {}\n", v.rendered));
            }
            for n in &report.notes {
                out.push_str(&format!("note: {n}\n"));
            }
            out.push_str(&format!(
                "laws checked: {}, wall time: {} ms\n",
                report.stats.laws_checked, report.stats.wall_time_ms
            ));
            for (k, v) in &report.stats.sizes {
                out.push_str(&format!("size {k}: {v}\n"));
            }
            if let Some(output) = &report.output {
                out.push_str(&canonical_json(output));
            }
            out
        }
    }
}
