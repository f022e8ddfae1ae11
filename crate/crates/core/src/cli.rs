//! Command-line front end: field selection, census runs, classification
//! queries, catalog dumps and map checks.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{act, AlgebraError, GlGroup, StructureMatrix};
use crate::census::{verify_partition, CensusError, Classification, Classifier};
use crate::families::{catalog, reduce_fifth_family, representative, FamilyError};
use crate::field::{FieldError, FieldSpec};
use crate::orbitmap::{f_associativity_check, f_formal_check, orbit_graph, OrbitMapError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INCONSISTENT: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "twodim",
    version,
    about = "Census and classification of two-dimensional algebras over GF(p^n)"
)]
pub struct RunConfig {
    /// Field characteristic.
    #[arg(long, global = true)]
    pub p: Option<u32>,
    /// Extension degree.
    #[arg(long, global = true, default_value_t = 1)]
    pub n: u32,
    /// Monic modulus coefficients, constant term first, e.g. `1,1,1`.
    #[arg(long, global = true, value_delimiter = ',')]
    pub modulus: Option<Vec<u32>>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate all orbits and compare with the catalog and the formulas.
    Census,
    /// Match a matrix `a1,a2,a3,a4,b1,b2,b3,b4` against the catalog.
    Classify { matrix: String },
    /// Decide whether two matrices define isomorphic algebras.
    Isotest { a: String, b: String },
    /// List every catalog class with its representative.
    Catalog,
    /// Check the composition law of the β′ map and export its graph.
    Orbitmap,
    /// Describe the field.
    Field {
        /// Include addition and multiplication tables.
        #[arg(long)]
        tables: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("missing --p")]
    MissingPrime,
    #[error("--jobs must be at least 1")]
    ZeroJobs,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Census(#[from] CensusError),
    #[error(transparent)]
    OrbitMap(#[from] OrbitMapError),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// Rendered report and exit status of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub status: i32,
    pub body: String,
}

impl RunOutput {
    fn ok(body: String) -> Self {
        RunOutput {
            status: EXIT_OK,
            body,
        }
    }
}

impl RunConfig {
    pub fn field(&self) -> Result<FieldSpec, CliError> {
        let p = self.p.ok_or(CliError::MissingPrime)?;
        Ok(FieldSpec::new(p, self.n, self.modulus.clone())?)
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn csv_string(rows: &[Vec<String>]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(r)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn flat(a: &StructureMatrix<'_>) -> String {
    a.indices().map(|i| i.to_string()).join(",")
}

/// Runs the configured command on a pool of `jobs` threads.
pub fn run(config: &RunConfig) -> Result<RunOutput, CliError> {
    if config.jobs == 0 {
        return Err(CliError::ZeroJobs);
    }
    let field = config.field()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()?;
    pool.install(|| match &config.command {
        Command::Census => cmd_census(&field, config.format),
        Command::Classify { matrix } => cmd_classify(&field, config.format, matrix),
        Command::Isotest { a, b } => cmd_isotest(&field, config.format, a, b),
        Command::Catalog => cmd_catalog(&field, config.format),
        Command::Orbitmap => cmd_orbitmap(&field, config.format),
        Command::Field { tables } => cmd_field(&field, config.format, *tables),
    })
}

pub fn cmd_census(field: &FieldSpec, format: Format) -> Result<RunOutput, CliError> {
    let report = verify_partition(field)?;
    let body = match format {
        Format::Text => report.to_text(),
        Format::Json => to_json(&report)?,
        Format::Csv => report.to_csv()?,
    };
    let status = if report.consistency_failures().is_empty() {
        EXIT_OK
    } else {
        EXIT_INCONSISTENT
    };
    Ok(RunOutput { status, body })
}

pub fn cmd_classify(
    field: &FieldSpec,
    format: Format,
    matrix: &str,
) -> Result<RunOutput, CliError> {
    let a = StructureMatrix::parse_flat(field, matrix)?;
    let classifier = Classifier::new(field)?;
    let fifth = if a.is_fifth_shape() && !a.is_zero() {
        let r = reduce_fifth_family(&a)?;
        let verified = act(&r.witness, &a) == representative(&r.class, field)?;
        Some(json!({
            "class": r.class,
            "label": r.class.to_string(),
            "branch": r.branch,
            "witness": r.witness,
            "verified": verified,
        }))
    } else {
        None
    };
    let (value, status) = match classifier.classify(&a) {
        Ok(Classification::Trivial) => (json!({ "result": "trivial" }), EXIT_OK),
        Ok(Classification::Family { class, witness }) => {
            let rep = representative(&class, field)?;
            let verified = act(&witness, &a) == rep;
            let status = if verified { EXIT_OK } else { EXIT_INCONSISTENT };
            (
                json!({
                    "result": "family",
                    "class": class,
                    "label": class.to_string(),
                    "representative": rep.indices(),
                    "witness": witness,
                    "verified": verified,
                }),
                status,
            )
        }
        Err(CensusError::Overlap {
            matches, witnesses, ..
        }) => (
            json!({ "result": "overlap", "matches": matches, "witnesses": witnesses }),
            EXIT_INCONSISTENT,
        ),
        Err(CensusError::NoMatch { .. }) => (json!({ "result": "no match" }), EXIT_INCONSISTENT),
        Err(e) => return Err(e.into()),
    };
    let mut doc = json!({
        "schema": crate::census::REPORT_SCHEMA,
        "field": field.description(),
        "matrix": a.indices(),
    });
    doc.as_object_mut()
        .expect("object")
        .extend(value.as_object().expect("object").clone());
    if let Some(f) = fifth {
        doc["fifth_reduction"] = f;
    }
    let body = match format {
        Format::Json => to_json(&doc)?,
        Format::Text => classify_text(&a, &doc),
        Format::Csv => {
            let w = &doc["witness"];
            csv_string(&[
                ["matrix", "result", "label", "xi1", "eta1", "xi2", "eta2"]
                    .map(String::from)
                    .to_vec(),
                vec![
                    flat(&a),
                    doc["result"].as_str().unwrap_or_default().to_string(),
                    doc["label"].as_str().unwrap_or_default().to_string(),
                    w["xi1"].to_string(),
                    w["eta1"].to_string(),
                    w["xi2"].to_string(),
                    w["eta2"].to_string(),
                ],
            ])?
            .replace("null", "")
        }
    };
    Ok(RunOutput { status, body })
}

fn witness_text(w: &Value) -> String {
    format!(
        "ξ₁={} η₁={} ξ₂={} η₂={}",
        w["xi1"], w["eta1"], w["xi2"], w["eta2"]
    )
}

fn classify_text(a: &StructureMatrix<'_>, doc: &Value) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "matrix {a}");
    match doc["result"].as_str() {
        Some("trivial") => {
            let _ = writeln!(s, "trivial algebra");
        }
        Some("family") => {
            let _ = writeln!(s, "class {}", doc["label"].as_str().unwrap_or_default());
            let _ = writeln!(s, "representative {}", doc["representative"]);
            let _ = writeln!(
                s,
                "witness {} (verified: {})",
                witness_text(&doc["witness"]),
                doc["verified"]
            );
        }
        Some("overlap") => {
            let _ = writeln!(s, "matches several classes: {}", doc["matches"]);
            for w in doc["witnesses"].as_array().into_iter().flatten() {
                let _ = writeln!(
                    s,
                    "  {} -> {} via {}",
                    w["from"].as_str().unwrap_or_default(),
                    w["to"].as_str().unwrap_or_default(),
                    witness_text(w)
                );
            }
        }
        _ => {
            let _ = writeln!(s, "no catalog class matches");
        }
    }
    if let Some(f) = doc.get("fifth_reduction") {
        let _ = writeln!(
            s,
            "fifth-subset reduction: branch \"{}\" then moves to {} via {}",
            f["branch"].as_str().unwrap_or_default(),
            f["label"].as_str().unwrap_or_default(),
            witness_text(&f["witness"])
        );
    }
    s
}

pub fn cmd_isotest(
    field: &FieldSpec,
    format: Format,
    a: &str,
    b: &str,
) -> Result<RunOutput, CliError> {
    let a = StructureMatrix::parse_flat(field, a)?;
    let b = StructureMatrix::parse_flat(field, b)?;
    let group = GlGroup::new(field);
    let witness = group.is_isomorphic(&a, &b)?;
    let verified = witness.map(|g| act(&g, &a) == b);
    let (ia, ib) = (group.invariants(&a), group.invariants(&b));
    let distinguishing = if witness.is_none() {
        ia.first_difference(&ib)
    } else {
        None
    };
    let doc = json!({
        "schema": crate::census::REPORT_SCHEMA,
        "field": field.description(),
        "a": a.indices(),
        "b": b.indices(),
        "isomorphic": witness.is_some(),
        "witness": witness,
        "verified": verified,
        "distinguishing_invariant": distinguishing,
        "invariants_a": ia,
        "invariants_b": ib,
    });
    let status = if verified == Some(false) {
        EXIT_INCONSISTENT
    } else {
        EXIT_OK
    };
    let body = match format {
        Format::Json => to_json(&doc)?,
        Format::Csv => csv_string(&[
            [
                "a",
                "b",
                "isomorphic",
                "witness",
                "distinguishing_invariant",
            ]
            .map(String::from)
            .to_vec(),
            vec![
                flat(&a),
                flat(&b),
                witness.is_some().to_string(),
                witness.map(|g| g.to_string()).unwrap_or_default(),
                distinguishing.unwrap_or_default().to_string(),
            ],
        ])?,
        Format::Text => {
            let mut s = String::new();
            match witness {
                Some(g) => {
                    let _ = writeln!(s, "isomorphic: {g}");
                    let _ = writeln!(s, "act(g, A) = B verified: {}", verified == Some(true));
                }
                None => {
                    let _ = writeln!(s, "non-isomorphic");
                    match distinguishing {
                        Some(name) => {
                            let _ = writeln!(s, "distinguished by {name}");
                        }
                        None => {
                            let _ = writeln!(
                                s,
                                "no fingerprint field differs; exhaustive search found no witness"
                            );
                        }
                    }
                }
            }
            s
        }
    };
    Ok(RunOutput { status, body })
}

pub fn cmd_catalog(field: &FieldSpec, format: Format) -> Result<RunOutput, CliError> {
    let entries = catalog(field)?;
    let mut rows = vec![[
        "family",
        "class",
        "params",
        "matrix",
        "computed_count",
        "closed_form_count",
    ]
    .map(String::from)
    .to_vec()];
    for e in &entries {
        for cls in &e.representatives {
            let rep = representative(cls, field)?;
            rows.push(vec![
                e.family.clone(),
                cls.to_string(),
                cls.params
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                flat(&rep),
                e.computed_count.to_string(),
                e.closed_form_count.map_or(String::new(), |c| c.to_string()),
            ]);
        }
    }
    let body = match format {
        Format::Csv => csv_string(&rows)?,
        Format::Json => {
            let items: Vec<Value> = entries
                .iter()
                .map(|e| {
                    let reps: Vec<Value> = e
                        .representatives
                        .iter()
                        .map(|c| {
                            let m = representative(c, field)
                                .map(|m| m.indices())
                                .unwrap_or_default();
                            json!({ "class": c, "label": c.to_string(), "matrix": m })
                        })
                        .collect();
                    json!({
                        "family": e.family,
                        "computed_count": e.computed_count,
                        "closed_form_count": e.closed_form_count,
                        "representatives": reps,
                    })
                })
                .collect();
            to_json(
                &json!({ "schema": crate::census::REPORT_SCHEMA, "field": field.description(), "families": items }),
            )?
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "{:<18}{:<12}{:<18}{:>10}{:>13}",
                "class", "params", "matrix", "computed", "closed form"
            );
            for r in &rows[1..] {
                let cf = if r[5].is_empty() { "-" } else { &r[5] };
                let _ = writeln!(
                    s,
                    "{:<18}{:<12}{:<18}{:>10}{:>13}",
                    r[1], r[2], r[3], r[4], cf
                );
            }
            s
        }
    };
    Ok(RunOutput::ok(body))
}

pub fn cmd_orbitmap(field: &FieldSpec, format: Format) -> Result<RunOutput, CliError> {
    let check = f_associativity_check(field)?;
    let formal = f_formal_check(field)?;
    let graph = orbit_graph(field)?;
    let status = if check.violations.is_empty() && formal.failing_pairs.is_empty() {
        EXIT_OK
    } else {
        EXIT_INCONSISTENT
    };
    let body = match format {
        Format::Json => to_json(&json!({
            "schema": crate::census::REPORT_SCHEMA,
            "field": field.description(),
            "associativity": check,
            "formal": formal,
            "graph": graph,
        }))?,
        Format::Csv => {
            let mut rows = vec![["a", "t", "value", "admissible"].map(String::from).to_vec()];
            rows.extend(graph.edges.iter().map(|e| {
                vec![
                    e.a.to_string(),
                    e.t.to_string(),
                    e.value.to_string(),
                    e.admissible.to_string(),
                ]
            }));
            csv_string(&rows)?
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "{} violations ({} fully-defined triples of {})",
                check.violations.len(),
                check.defined_triples,
                check.triples
            );
            for v in check.violations.iter().take(10) {
                let _ = writeln!(
                    s,
                    "  a={} s={} t={}: f(f(a,s),t)={} f(a,f(s,t))={}",
                    v.a, v.s, v.t, v.lhs, v.rhs
                );
            }
            let _ = writeln!(
                s,
                "formal check: {} of {} (a,s) pairs differ as functions of t",
                formal.failing_pairs.len(),
                formal.pairs_checked
            );
            let _ = writeln!(
                s,
                "reachability classes (admissible edges): {:?}",
                graph.classes
            );
            let _ = writeln!(
                s,
                "reachability classes (all edges): {:?}",
                graph.unrestricted_classes
            );
            let _ = writeln!(s, "parameter orbits: {:?}", graph.family_classes);
            let _ = writeln!(
                s,
                "refines parameter orbits: {}",
                graph.refines_family_orbits
            );
            let _ = writeln!(s, "edges (a t f(a,t)):");
            s.push_str(&graph.edge_list());
            s
        }
    };
    Ok(RunOutput { status, body })
}

pub fn cmd_field(field: &FieldSpec, format: Format, tables: bool) -> Result<RunOutput, CliError> {
    let squares = field.power_cosets(2)?;
    let cubes = field.power_cosets(3)?;
    let elements: Vec<Value> = field
        .elements()
        .map(|e| json!({ "index": e.index(), "coeffs": e.coeffs() }))
        .collect();
    let add: Vec<Vec<usize>> = field
        .elements()
        .map(|x| field.elements().map(|y| (x + y).index()).collect())
        .collect();
    let mul: Vec<Vec<usize>> = field
        .elements()
        .map(|x| field.elements().map(|y| (x * y).index()).collect())
        .collect();
    let body = match format {
        Format::Json => {
            let mut doc = json!({
                "schema": crate::census::REPORT_SCHEMA,
                "field": field.description(),
                "q": field.q(),
                "generator": field.generator().index(),
                "square_class_representatives": squares.reps,
                "cube_class_representatives": cubes.reps,
                "elements": elements,
            });
            if tables {
                doc["add"] = json!(add);
                doc["mul"] = json!(mul);
            }
            to_json(&doc)?
        }
        Format::Csv => {
            let mut rows = vec![["index", "coeffs", "square_class", "cube_class"]
                .map(String::from)
                .to_vec()];
            for e in field.elements() {
                rows.push(vec![
                    e.index().to_string(),
                    e.coeffs()
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                    squares.class_of(e).to_string(),
                    cubes.class_of(e).to_string(),
                ]);
            }
            csv_string(&rows)?
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "GF({}) = GF({})[x]/({:?})",
                field.q(),
                field.p(),
                field.modulus()
            );
            let _ = writeln!(s, "generator {}", field.generator());
            let _ = writeln!(s, "square classes {:?}", squares.reps);
            let _ = writeln!(s, "cube classes {:?}", cubes.reps);
            for e in field.elements() {
                let _ = writeln!(s, "{:>4}  {:?}", e.index(), e.coeffs());
            }
            if tables {
                for (name, t) in [("+", &add), ("*", &mul)] {
                    let _ = writeln!(s, "{name}");
                    for row in t {
                        let cells: Vec<String> = row.iter().map(|v| format!("{v:>4}")).collect();
                        let _ = writeln!(s, "{}", cells.join(""));
                    }
                }
            }
            s
        }
    };
    Ok(RunOutput::ok(body))
}

/// Parses arguments, runs the command, writes the report and returns the
/// process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let output = match run(&config) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &config.out {
        Some(path) => std::fs::write(path, &output.body),
        None => std::io::stdout().write_all(output.body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    output.status
}
