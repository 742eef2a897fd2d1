//! The `liecx` command-line front end.
//!
//! Every subcommand loads what it needs, recomputes the requested facts
//! from scratch, and writes a single JSON report (stdout by default,
//! `--output FILE` otherwise).  Reports are deterministic: inputs are
//! sorted, map keys are ordered, and field order is fixed, so two runs
//! over the same corpus produce byte-identical bytes.
//!
//! Exit codes: `0` — everything verified; `1` — a verification failed
//! (a curve does not replay, a certificate does not hold, a table row
//! disagrees, an input bracket is invalid); `2` — usage, I/O, or corpus
//! errors.
//!
//! The corpus directory resolves as: `LIECX_CORPUS` environment
//! variable, then `--corpus-dir`, then the corpus bundled with the
//! crate.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::algebra_core::Bracket;
use crate::catalog::{default_samples, family_names, family_params};
use crate::corpus::{self, BracketDto, Corpus, TableDto, TableRowDto};
use crate::deformation;
use crate::degeneration::{
    consistency_conflicts, figure_edges, hasse_dot, verify_claim, Claim, ClaimOutcome,
    ExactStatus, Mode, FIGURES,
};
use crate::invariants::{kappa_signature, validate_bracket, InvariantProfile};

/// Exact verification toolkit for degenerations of four-dimensional
/// real Lie algebras with complex structures.
#[derive(Parser)]
#[command(name = "liecx", version, about)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

/// Options shared by all subcommands.
#[derive(Args, Clone, Debug)]
pub struct RunConfig {
    /// Verification engines to run: exact, numeric, or both.
    #[arg(long, global = true, default_value = "both", value_parser = parse_mode)]
    pub mode: Mode,
    /// Residual tolerance for the numeric engine.
    #[arg(long, global = true, default_value_t = crate::degeneration::DEFAULT_TOL)]
    pub tol: f64,
    /// Corpus directory (the LIECX_CORPUS environment variable wins).
    #[arg(long, global = true, value_name = "DIR")]
    pub corpus_dir: Option<PathBuf>,
    /// Write the JSON report to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
    /// Worker threads for curve replay.
    #[arg(long, global = true, default_value_t = 1)]
    pub parallelism: usize,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

#[derive(Subcommand)]
pub enum Command {
    /// List the built-in families and default samples.
    Catalog,
    /// Validate bracket files: Jacobi identity and integrability.
    Check {
        /// Bracket JSON files to validate.
        #[arg(required = true, value_name = "FILE")]
        files: Vec<PathBuf>,
    },
    /// Compute the invariant profile of every catalog sample.
    Invariants {
        /// Restrict to these sample ids (default: all).
        #[arg(long = "id", value_name = "ID")]
        ids: Vec<String>,
    },
    /// Recompute the classification table and compare with the corpus.
    Table3,
    /// Replay degeneration claims exactly and numerically.
    VerifyDegeneration {
        /// Restrict to these claim names (default: all).
        #[arg(long = "name", value_name = "NAME")]
        names: Vec<String>,
    },
    /// Evaluate non-degeneration certificates.
    VerifyCertificate {
        /// Restrict to these certificate names (default: all).
        #[arg(long = "name", value_name = "NAME")]
        names: Vec<String>,
    },
    /// Emit the degeneration diagrams as Graphviz documents.
    Hasse {
        /// Restrict to one figure (default: all five).
        #[arg(long, value_name = "FIGURE")]
        figure: Option<String>,
        /// Also write one .dot file per figure into this directory.
        #[arg(long, value_name = "DIR")]
        dir: Option<PathBuf>,
    },
    /// Compute deformation cohomology of the catalog samples.
    Cohomology {
        /// Restrict to these sample ids (default: all).
        #[arg(long = "id", value_name = "ID")]
        ids: Vec<String>,
    },
}

/// Entry point used by the `liecx` binary.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(ok) => {
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Runs one parsed invocation; `Ok(false)` means "report written, but
/// something failed verification" (exit code 1).
pub fn run(cli: &Cli) -> Result<bool> {
    let (report, ok) = match &cli.command {
        Command::Catalog => catalog_report()?,
        Command::Check { files } => check_report(files)?,
        Command::Invariants { ids } => invariants_report(&load(&cli.config)?, ids)?,
        Command::Table3 => table3_report(&load(&cli.config)?),
        Command::VerifyDegeneration { names } => {
            degeneration_report(&load(&cli.config)?, names, &cli.config)?
        }
        Command::VerifyCertificate { names } => certificate_report(&load(&cli.config)?, names)?,
        Command::Hasse { figure, dir } => hasse_report(&load(&cli.config)?, figure.as_deref(), dir.as_deref())?,
        Command::Cohomology { ids } => cohomology_report(&load(&cli.config)?, ids)?,
    };
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    match &cli.config.output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ok)
}

fn load(config: &RunConfig) -> Result<Corpus> {
    let dir = corpus::resolve_corpus_dir(config.corpus_dir.as_deref());
    corpus::load_corpus(&dir).with_context(|| format!("loading corpus from {}", dir.display()))
}

// ----------------------------------------------------------------------
// catalog
// ----------------------------------------------------------------------

#[derive(Serialize)]
struct FamilyReport {
    name: String,
    params: Vec<String>,
}

#[derive(Serialize)]
struct SampleReport {
    id: String,
    label: String,
    j_class: String,
    unimodular: bool,
    derived_dim: usize,
    bracket: BracketDto,
}

#[derive(Serialize)]
struct CatalogReport {
    families: Vec<FamilyReport>,
    samples: Vec<SampleReport>,
}

fn catalog_report() -> Result<(serde_json::Value, bool)> {
    let families = family_names()
        .into_iter()
        .map(|name| FamilyReport {
            name: name.to_string(),
            params: family_params(name)
                .unwrap_or_default()
                .iter()
                .map(ToString::to_string)
                .collect(),
        })
        .collect();
    let mut samples = Vec::new();
    for s in default_samples() {
        let b = s.bracket()?;
        samples.push(SampleReport {
            id: s.id(),
            label: s.label.clone(),
            j_class: b.j_class().as_str().to_string(),
            unimodular: b.is_unimodular(),
            derived_dim: b.derived_dim(),
            bracket: BracketDto::from_bracket(&b),
        });
    }
    Ok((serde_json::to_value(CatalogReport { families, samples })?, true))
}

// ----------------------------------------------------------------------
// check
// ----------------------------------------------------------------------

#[derive(Serialize)]
struct CheckResult {
    file: String,
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct CheckReport {
    results: Vec<CheckResult>,
    valid: bool,
}

fn check_report(files: &[PathBuf]) -> Result<(serde_json::Value, bool)> {
    let mut results = Vec::new();
    for path in files {
        let verdict = corpus::load_bracket_file(path)
            .map_err(|e| format!("{e:#}"))
            .and_then(|b| validate_bracket(&b));
        results.push(CheckResult {
            file: path.display().to_string(),
            valid: verdict.is_ok(),
            error: verdict.err(),
        });
    }
    let valid = results.iter().all(|r| r.valid);
    Ok((serde_json::to_value(CheckReport { results, valid })?, valid))
}

// ----------------------------------------------------------------------
// invariants
// ----------------------------------------------------------------------

#[derive(Serialize)]
struct InvariantRow {
    id: String,
    der: usize,
    der_j: usize,
    orbit_dim: usize,
    unimodular: bool,
    j_class: String,
    derived_dim: usize,
    kappa_0_signature: String,
    column: String,
}

#[derive(Serialize)]
struct InvariantsReport {
    samples: Vec<InvariantRow>,
}

fn select<'a, T>(all: &'a [T], wanted: &[String], key: impl Fn(&T) -> &str, what: &str) -> Result<Vec<&'a T>> {
    if wanted.is_empty() {
        return Ok(all.iter().collect());
    }
    let mut out = Vec::with_capacity(wanted.len());
    for w in wanted {
        match all.iter().find(|x| key(x) == w) {
            Some(x) => out.push(x),
            None => bail!("unknown {what} {w:?}"),
        }
    }
    Ok(out)
}

fn invariants_report(corpus: &Corpus, ids: &[String]) -> Result<(serde_json::Value, bool)> {
    let chosen = select(&corpus.catalog, ids, |s| &s.id, "sample id")?;
    let zero = crate::exact_linalg::rat(0);
    let samples = chosen
        .into_iter()
        .map(|s| {
            let p = InvariantProfile::of(&s.bracket);
            InvariantRow {
                id: s.id.clone(),
                der: p.der_dim,
                der_j: p.j_der_dim,
                orbit_dim: 8 - p.j_der_dim,
                unimodular: p.unimodular,
                j_class: p.j_class.as_str().to_string(),
                derived_dim: p.derived_dim,
                kappa_0_signature: kappa_signature(&s.bracket, &zero).to_string(),
                column: p.column().to_string(),
            }
        })
        .collect();
    Ok((serde_json::to_value(InvariantsReport { samples })?, true))
}

// ----------------------------------------------------------------------
// table3
// ----------------------------------------------------------------------

#[derive(Serialize)]
struct TableReport {
    rows: Vec<TableRowDto>,
    matches_expected: bool,
    mismatches: Vec<String>,
}

/// Recomputes the classification table from a list of samples.
pub fn compute_table(samples: &[(String, Bracket)]) -> TableDto {
    let mut cells: BTreeMap<(usize, usize), (Vec<String>, Vec<String>, Vec<String>)> =
        BTreeMap::new();
    for (id, bracket) in samples {
        let p = InvariantProfile::of(bracket);
        let cell = cells.entry((p.j_der_dim, p.der_dim)).or_default();
        match p.column() {
            "abelian" => cell.2.push(id.clone()),
            "unimodular" => cell.1.push(id.clone()),
            _ => cell.0.push(id.clone()),
        }
    }
    let rows = cells
        .into_iter()
        .map(|((der_j, der), (mut plain, mut unimodular, mut abelian))| {
            plain.sort();
            unimodular.sort();
            abelian.sort();
            TableRowDto { abelian, der, der_j, plain, unimodular }
        })
        .collect();
    TableDto { rows }
}

fn table3_report(corpus: &Corpus) -> (serde_json::Value, bool) {
    let samples: Vec<(String, Bracket)> = corpus
        .catalog
        .iter()
        .map(|s| (s.id.clone(), s.bracket.clone()))
        .collect();
    let computed = compute_table(&samples);
    let mut mismatches = Vec::new();
    let expected: BTreeMap<(usize, usize), &TableRowDto> = corpus
        .table
        .rows
        .iter()
        .map(|r| ((r.der_j, r.der), r))
        .collect();
    let got: BTreeMap<(usize, usize), &TableRowDto> =
        computed.rows.iter().map(|r| ((r.der_j, r.der), r)).collect();
    for key in expected.keys().chain(got.keys()) {
        match (expected.get(key), got.get(key)) {
            (Some(e), Some(g)) if e != g => {
                mismatches.push(format!("row (der_j={}, der={}) differs", key.0, key.1));
            }
            (Some(_), None) => {
                mismatches.push(format!("row (der_j={}, der={}) missing", key.0, key.1));
            }
            (None, Some(_)) => {
                mismatches.push(format!("row (der_j={}, der={}) unexpected", key.0, key.1));
            }
            _ => {}
        }
    }
    mismatches.sort();
    mismatches.dedup();
    let ok = mismatches.is_empty();
    let report = TableReport { rows: computed.rows, matches_expected: ok, mismatches };
    (serde_json::to_value(report).expect("table report serializes"), ok)
}

// ----------------------------------------------------------------------
// verify-degeneration
// ----------------------------------------------------------------------

#[derive(Serialize)]
struct PointResult {
    t: f64,
    residual: f64,
    worst: [usize; 3],
}

#[derive(Serialize)]
struct NumericResult {
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    points: Vec<PointResult>,
    monotone: bool,
    final_within_tol: bool,
}

#[derive(Serialize)]
struct EdgeResult {
    source_der_j: usize,
    target_der_j: usize,
    source_der: usize,
    target_der: usize,
    accepted: bool,
}

#[derive(Serialize)]
struct ClaimResult {
    name: String,
    source: String,
    target: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    numeric: Option<NumericResult>,
    edge: EdgeResult,
    pass: bool,
}

#[derive(Serialize)]
struct DegenerationReport {
    mode: String,
    tol: f64,
    results: Vec<ClaimResult>,
    passed: usize,
    failed: usize,
}

/// Replays claims on up to `workers` threads, preserving input order.
pub fn run_claims(claims: &[&Claim], mode: Mode, tol: f64, workers: usize) -> Vec<ClaimOutcome> {
    if workers <= 1 || claims.len() <= 1 {
        return claims.iter().map(|c| verify_claim(c, mode, tol)).collect();
    }
    let next = AtomicUsize::new(0);
    let mut results: Vec<Option<ClaimOutcome>> = Vec::new();
    results.resize_with(claims.len(), || None);
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers.min(claims.len()))
            .map(|_| {
                scope.spawn(|| {
                    let mut mine = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= claims.len() {
                            break;
                        }
                        mine.push((i, verify_claim(claims[i], mode, tol)));
                    }
                    mine
                })
            })
            .collect();
        for handle in handles {
            for (i, outcome) in handle.join().expect("replay worker panicked") {
                results[i] = Some(outcome);
            }
        }
    });
    results.into_iter().map(|r| r.expect("every claim replayed")).collect()
}

fn claim_result(outcome: &ClaimOutcome) -> ClaimResult {
    let pass = outcome.pass();
    let exact = outcome.exact.as_ref().map(|s| match s {
        ExactStatus::Verified => "verified".to_string(),
        ExactStatus::Skipped => "skipped (numeric-only curve)".to_string(),
        ExactStatus::Failed(e) => format!("failed: {e}"),
    });
    let numeric = outcome.numeric.as_ref().map(|n| match n {
        Ok(l) => NumericResult {
            error: None,
            points: l
                .points
                .iter()
                .map(|p| PointResult {
                    t: p.t,
                    residual: p.residual,
                    worst: [p.worst.0 + 1, p.worst.1 + 1, p.worst.2 + 1],
                })
                .collect(),
            monotone: l.monotone,
            final_within_tol: l.final_within_tol,
        },
        Err(e) => NumericResult {
            error: Some(e.to_string()),
            points: Vec::new(),
            monotone: false,
            final_within_tol: false,
        },
    });
    ClaimResult {
        name: outcome.name.clone(),
        source: outcome.source_id.clone(),
        target: outcome.target_id.clone(),
        exact,
        numeric,
        edge: EdgeResult {
            source_der_j: outcome.edge.source_der_j,
            target_der_j: outcome.edge.target_der_j,
            source_der: outcome.edge.source_der,
            target_der: outcome.edge.target_der,
            accepted: outcome.edge.accepted,
        },
        pass,
    }
}

fn degeneration_report(
    corpus: &Corpus,
    names: &[String],
    config: &RunConfig,
) -> Result<(serde_json::Value, bool)> {
    let chosen = select(&corpus.claims, names, |c| &c.name, "claim")?;
    let outcomes = run_claims(&chosen, config.mode, config.tol, config.parallelism.max(1));
    let results: Vec<ClaimResult> = outcomes.iter().map(claim_result).collect();
    let passed = results.iter().filter(|r| r.pass).count();
    let failed = results.len() - passed;
    let ok = failed == 0;
    let report = DegenerationReport {
        mode: config.mode.to_string(),
        tol: config.tol,
        results,
        passed,
        failed,
    };
    Ok((serde_json::to_value(report)?, ok))
}

// ----------------------------------------------------------------------
// verify-certificate
// ----------------------------------------------------------------------

#[derive(Serialize)]
struct CertResult {
    name: String,
    source: String,
    target: String,
    accepted: bool,
    evidence: String,
}

#[derive(Serialize)]
struct CertificateReport {
    results: Vec<CertResult>,
    accepted: usize,
    rejected: usize,
}

fn certificate_report(corpus: &Corpus, names: &[String]) -> Result<(serde_json::Value, bool)> {
    let chosen = select(&corpus.certificates, names, |c| &c.name, "certificate")?;
    let results: Vec<CertResult> = chosen
        .into_iter()
        .map(|c| {
            let check = c.check();
            CertResult {
                name: c.name.clone(),
                source: c.source_id.clone(),
                target: c.target_id.clone(),
                accepted: check.accepted,
                evidence: check.evidence,
            }
        })
        .collect();
    let accepted = results.iter().filter(|r| r.accepted).count();
    let rejected = results.len() - accepted;
    let ok = rejected == 0;
    Ok((
        serde_json::to_value(CertificateReport { results, accepted, rejected })?,
        ok,
    ))
}

// ----------------------------------------------------------------------
// hasse
// ----------------------------------------------------------------------

#[derive(Serialize)]
struct FigureReport {
    name: String,
    nodes: usize,
    edges: Vec<[String; 2]>,
    dot: String,
}

#[derive(Serialize)]
struct HasseReport {
    figures: Vec<FigureReport>,
    conflicts: Vec<[String; 2]>,
    consistent: bool,
}

fn hasse_report(
    corpus: &Corpus,
    figure: Option<&str>,
    dir: Option<&std::path::Path>,
) -> Result<(serde_json::Value, bool)> {
    let wanted: Vec<&str> = match figure {
        Some(f) => {
            if !FIGURES.contains(&f) {
                bail!("unknown figure {f:?} (expected one of {})", FIGURES.join(", "));
            }
            vec![f]
        }
        None => FIGURES.to_vec(),
    };
    let mut figures = Vec::new();
    for name in wanted {
        let edges = figure_edges(&corpus.claims, name);
        let dot = hasse_dot(name, &edges);
        if let Some(dir) = dir {
            fs::create_dir_all(dir)?;
            let path = dir.join(format!("{name}.dot"));
            fs::write(&path, &dot).with_context(|| format!("writing {}", path.display()))?;
        }
        figures.push(FigureReport {
            name: name.to_string(),
            nodes: edges
                .iter()
                .flat_map(|(s, t)| [s, t])
                .collect::<std::collections::BTreeSet<_>>()
                .len(),
            edges: edges.into_iter().map(|(s, t)| [s, t]).collect(),
            dot,
        });
    }
    // Every directed pair must not be simultaneously claimed and refuted.
    let claimed: Vec<(String, String)> = corpus
        .claims
        .iter()
        .map(|c| (c.source_id.clone(), c.target_id.clone()))
        .collect();
    let certified: Vec<(String, String)> = corpus
        .certificates
        .iter()
        .map(|c| (c.source_id.clone(), c.target_id.clone()))
        .collect();
    let conflicts: Vec<[String; 2]> = consistency_conflicts(&claimed, &certified)
        .into_iter()
        .map(|(s, t)| [s, t])
        .collect();
    let consistent = conflicts.is_empty();
    Ok((
        serde_json::to_value(HasseReport { figures, conflicts, consistent })?,
        consistent,
    ))
}

// ----------------------------------------------------------------------
// cohomology
// ----------------------------------------------------------------------

#[derive(Serialize)]
struct CohomologyRow {
    id: String,
    z2: usize,
    b2: usize,
    h2: usize,
    rigid: bool,
}

#[derive(Serialize)]
struct CohomologyReport {
    dim_c2: usize,
    dim_c2_j: usize,
    dim_c2_abelian: usize,
    results: Vec<CohomologyRow>,
}

fn cohomology_report(corpus: &Corpus, ids: &[String]) -> Result<(serde_json::Value, bool)> {
    let chosen = select(&corpus.catalog, ids, |s| &s.id, "sample id")?;
    let results = chosen
        .into_iter()
        .map(|s| {
            let c = deformation::cohomology(&s.bracket);
            CohomologyRow {
                id: s.id.clone(),
                z2: c.z2,
                b2: c.b2,
                h2: c.h2,
                rigid: c.h2 == 0,
            }
        })
        .collect();
    let report = CohomologyReport {
        dim_c2: deformation::c2_dim(),
        dim_c2_j: deformation::c2j_basis().len(),
        dim_c2_abelian: deformation::abelian_cochain_dim(),
        results,
    };
    Ok((serde_json::to_value(report)?, true))
}

// ----------------------------------------------------------------------
