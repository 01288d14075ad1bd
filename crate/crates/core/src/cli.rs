//! Command-line front end and the JSON input schema.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::conegeom::{Divisor, FaceSet};
use crate::error::{Error, Result};
use crate::intlat::RatVec;
use crate::nashmap::{analyze_variety, BranchInput, Contact, Diagnostic, VarietyReport};
use crate::oracle;
use crate::qobranch::{build_tower, BranchSpec};
use crate::SCHEMA_VERSION;

/// Input description of a reducible quasi-ordinary germ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VarietyFile {
    pub schema_version: u32,
    pub dim: usize,
    pub branches: Vec<BranchEntry>,
    #[serde(default)]
    pub contacts: Vec<ContactEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BranchEntry {
    pub label: String,
    #[serde(default)]
    pub char_exponents: Vec<RatVec>,
    /// 1-based index sets.
    #[serde(default)]
    pub sing_faces: Vec<Vec<usize>>,
    #[serde(default)]
    pub extra_faces: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContactEntry {
    pub from_label: String,
    pub to_label: String,
    pub exponent: RatVec,
}

/// Failure while reading or validating an input file.
#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error(transparent)]
    Domain(#[from] Error),
}

impl VarietyFile {
    pub fn parse(text: &str) -> std::result::Result<VarietyFile, InputError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let file: VarietyFile = serde_path_to_error::deserialize(de).map_err(|e| InputError::Schema {
            path: e.path().to_string(),
            message: e.inner().to_string(),
        })?;
        if file.schema_version != SCHEMA_VERSION {
            return Err(InputError::Schema {
                path: "schema_version".into(),
                message: format!("unsupported version {}, expected {SCHEMA_VERSION}", file.schema_version),
            });
        }
        Ok(file)
    }

    /// Converts to analysis inputs, attaching each contact to its `from_label`.
    pub fn to_inputs(&self) -> Result<Vec<BranchInput>> {
        let faces = |sets: &[Vec<usize>], label: &str| {
            sets.iter()
                .map(|s| FaceSet::from_one_based(s, self.dim))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| e.in_branch(label))
        };
        let mut inputs = Vec::with_capacity(self.branches.len());
        for b in &self.branches {
            if inputs.iter().any(|i: &BranchInput| i.spec.label == b.label) {
                return Err(Error::DuplicateLabel(b.label.clone()));
            }
            let mut input = BranchInput::new(BranchSpec::new(&b.label, self.dim, b.char_exponents.clone()));
            input.sing_faces = faces(&b.sing_faces, &b.label)?;
            input.extra_faces = faces(&b.extra_faces, &b.label)?;
            inputs.push(input);
        }
        for c in &self.contacts {
            let target = inputs
                .iter_mut()
                .find(|i| i.spec.label == c.from_label)
                .ok_or_else(|| Error::UnknownLabel(c.from_label.clone()))?;
            target.contacts.push(Contact {
                with: c.to_label.clone(),
                exponent: c.exponent.clone(),
            });
        }
        Ok(inputs)
    }
}

#[derive(Debug, Parser)]
#[command(name = "qonash", version, about = "Essential divisors and Nash components of quasi-ordinary germs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze a germ description file ("-" reads stdin).
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Recompute minimal vectors and face indices by exhaustive search.
        #[arg(long)]
        oracle_check: bool,
        #[arg(long, default_value_t = 8)]
        max_dim: usize,
        /// Largest accepted `[M : Z^d]` per branch.
        #[arg(long, default_value_t = 1_000_000)]
        max_index: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_ORACLE: i32 = 3;

/// Runs the CLI; returns the process exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let Command::Analyze {
        file,
        format,
        oracle_check,
        max_dim,
        max_index,
    } = cli.command;

    let mut text = String::new();
    let read = if file.as_os_str() == "-" {
        stdin.read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(&file).map(|t| text = t)
    };
    if let Err(e) = read {
        report_error(stderr, format, "IO", None, &format!("{}: {e}", file.display()));
        return EXIT_INPUT;
    }

    let report = match analyze_text(&text, max_dim, max_index) {
        Ok(r) => r,
        Err(InputError::Schema { path, message }) => {
            report_error(stderr, format, "SCHEMA", None, &format!("{path}: {message}"));
            return EXIT_INPUT;
        }
        Err(InputError::Domain(e)) => {
            let message = match &e {
                Error::Branch { source, .. } => source.to_string(),
                other => other.to_string(),
            };
            report_error(stderr, format, e.code(), e.branch(), &message);
            return EXIT_DOMAIN;
        }
    };

    for w in &report.warnings {
        let _ = writeln!(stderr, "warning: {w}");
    }

    if oracle_check {
        match cross_check(&report) {
            Ok(mismatches) if mismatches.is_empty() => {
                let _ = writeln!(stderr, "oracle check passed");
            }
            Ok(mismatches) => {
                for m in mismatches {
                    let _ = writeln!(stderr, "oracle mismatch: {m}");
                }
                return EXIT_ORACLE;
            }
            Err(e) => {
                report_error(stderr, format, e.code(), e.branch(), &e.to_string());
                return EXIT_ORACLE;
            }
        }
    }

    let out = match format {
        Format::Json => to_json(&report),
        Format::Text => to_text(&report),
    };
    if stdout.write_all(out.as_bytes()).is_err() {
        return EXIT_INPUT;
    }
    EXIT_OK
}

/// Parses, applies the size guards and analyzes.
pub fn analyze_text(text: &str, max_dim: usize, max_index: u64) -> std::result::Result<VarietyReport, InputError> {
    let file = VarietyFile::parse(text)?;
    if file.dim > max_dim {
        return Err(Error::LimitExceeded {
            what: format!("dimension {}", file.dim),
            limit: max_dim as u64,
        }
        .into());
    }
    let inputs = file.to_inputs()?;
    for input in &inputs {
        let degree = build_tower(&input.spec)
            .map_err(|e| e.in_branch(&input.spec.label))?
            .degree_n;
        if degree > max_index {
            return Err(Error::LimitExceeded {
                what: format!("lattice index {degree}"),
                limit: max_index,
            }
            .in_branch(&input.spec.label)
            .into());
        }
    }
    Ok(analyze_variety(&inputs)?)
}

fn report_error(stderr: &mut dyn Write, format: Format, code: &str, branch: Option<&str>, message: &str) {
    let _ = match format {
        Format::Json => writeln!(
            stderr,
            "{}",
            serde_json::json!({ "error": { "code": code, "branch": branch, "message": message } })
        ),
        Format::Text => match branch {
            Some(b) => writeln!(stderr, "error[{code}] in branch '{b}': {message}"),
            None => writeln!(stderr, "error[{code}]: {message}"),
        },
    };
}

/// Recomputes `S_min` and every face index with the exhaustive oracle.
/// Returns one line per disagreement.
pub fn cross_check(report: &VarietyReport) -> Result<Vec<String>> {
    let mut mismatches = Vec::new();
    for b in &report.branches {
        let n = &b.lattices.n;
        let bound = oracle::edge_bound(n)?;
        let brute = oracle::brute_minimal_s(n, bound)?;
        let fast: Vec<RatVec> = b.s_min.iter().map(|d| d.vector.clone()).collect();
        if brute != fast {
            mismatches.push(format!("branch '{}': minimal vectors {fast:?} vs exhaustive {brute:?}", b.label));
        }
        for f in &b.faces {
            let axes: Vec<usize> = f.indices.axes().collect();
            let idx = oracle::brute_face_index(n, &axes)?;
            if idx != f.index {
                mismatches.push(format!(
                    "branch '{}': face {} index {} vs exhaustive {idx}",
                    b.label, f.indices, f.index
                ));
            }
        }
    }
    Ok(mismatches)
}

/// Machine-readable report: objects indented, arrays without objects on one
/// line.
pub fn to_json(report: &VarietyReport) -> String {
    let value = serde_json::to_value(report).expect("report values fit the wire format");
    let mut s = String::new();
    write_value(&mut s, &value, 0);
    s.push('\n');
    s
}

fn has_object(v: &serde_json::Value) -> bool {
    match v {
        serde_json::Value::Object(_) => true,
        serde_json::Value::Array(items) => items.iter().any(has_object),
        _ => false,
    }
}

fn write_value(out: &mut String, v: &serde_json::Value, depth: usize) {
    use serde_json::Value;
    let pad = |out: &mut String, d: usize| out.extend(std::iter::repeat_n("  ", d));
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, item)) in map.iter().enumerate() {
                pad(out, depth + 1);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, item, depth + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push('}');
        }
        Value::Array(items) if has_object(v) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                pad(out, depth + 1);
                write_value(out, item, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

fn divisor_list(ds: &[Divisor]) -> String {
    if ds.is_empty() {
        return "none".into();
    }
    ds.iter()
        .map(|d| {
            if d.multiplicity == 1 {
                d.vector.to_string()
            } else {
                format!("{} = {}·{}", d.vector, d.multiplicity, d.primitive)
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn to_text(report: &VarietyReport) -> String {
    let mut s = String::new();
    for b in &report.branches {
        let l = &b.lattices;
        let _ = writeln!(s, "branch {} (degree {})", b.label, l.degree_n);
        for (j, m) in l.tower.iter().enumerate() {
            match j.checked_sub(1).map(|k| l.step_indices[k]) {
                Some(step) => {
                    let _ = writeln!(s, "  M{j} = {m}  [M{j}:M{}] = {step}", j - 1);
                }
                None => {
                    let _ = writeln!(s, "  M{j} = {m}");
                }
            }
        }
        let _ = writeln!(s, "  N = {}", l.n);
        let _ = writeln!(s, "  faces:");
        for f in &b.faces {
            let gens: Vec<String> = f.primgens.iter().map(ToString::to_string).collect();
            let _ = writeln!(
                s,
                "    {:<12} {:<8} index {:<6} generators {}",
                f.indices.to_string(),
                if f.regular { "regular" } else { "singular" },
                f.index,
                gens.join(" ")
            );
        }
        let relevant: Vec<String> = b.relevant.faces().iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "  relevant faces: {}", if relevant.is_empty() { "none".into() } else { relevant.join(" ") });
        let _ = writeln!(s, "  minimal vectors S: {}", divisor_list(&b.s_min));
        let _ = writeln!(s, "  E: {}", divisor_list(&b.e));
        let _ = writeln!(s, "  V: {}", divisor_list(&b.v));
        let _ = writeln!(s, "  nash components: {}", b.nash_count);
        for d in &b.diagnostics {
            let _ = match d {
                Diagnostic::LemmaMinViolation { barycenter, dominated_by } => {
                    writeln!(s, "  diagnostic: barycenter {barycenter} lies above {dominated_by}")
                }
                Diagnostic::EmptyB => writeln!(s, "  diagnostic: no relevant faces"),
            };
        }
    }
    let _ = writeln!(s, "total nash components: {}", report.total_nash);
    let _ = writeln!(s, "total essential divisors: {}", report.total_essential);
    s
}
