//! On-disk corpus: JSON schemas and loading.
//!
//! The corpus lives in a directory with four parts:
//!
//! ```text
//! catalog/*.json        the sample brackets, one file each
//! claims/*.json         degeneration claims with their witness curves
//! certificates/*.json   non-degeneration certificates
//! expected/table3.json  the invariant table the catalog must reproduce
//! ```
//!
//! All scalars are strings — `"p/q"` in lowest terms, or a plain decimal
//! inside curves flagged `numeric_only`.  Deserialization is strict:
//! structure constants must parse as exact rationals, index pairs must
//! satisfy `i < j`, and every claim or certificate endpoint is rebuilt
//! from its family name and compared against the embedded tensor, so a
//! corrupted corpus fails loudly at load time.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};
use serde::{Deserialize, Serialize};

use crate::algebra_core::{Bracket, DIM};
use crate::catalog::{self, Sample};
use crate::degeneration::{
    Certificate, Claim, Condition, Curve, Predicate, SemicontinuousDim, Separator,
};
use crate::exact_linalg::{parse_number, parse_rat, rat_string, Laurent, Rat};

/// Environment variable that overrides every other corpus-directory choice.
pub const CORPUS_ENV: &str = "LIECX_CORPUS";

/// The corpus bundled with the crate sources.
pub fn bundled_corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

/// Resolves the corpus directory: the `LIECX_CORPUS` environment
/// variable wins, then an explicit path, then the bundled corpus.
pub fn resolve_corpus_dir(explicit: Option<&Path>) -> PathBuf {
    if let Ok(env) = std::env::var(CORPUS_ENV) {
        if !env.is_empty() {
            return PathBuf::from(env);
        }
    }
    explicit.map_or_else(bundled_corpus_dir, Path::to_path_buf)
}

// ----------------------------------------------------------------------
// wire types
// ----------------------------------------------------------------------

/// One structure constant `[e_i, e_j] ∋ coeff · e_k` (indices 1-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDto {
    pub coeff: String,
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

/// A bracket as stored on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketDto {
    pub dim: usize,
    pub terms: Vec<TermDto>,
}

impl BracketDto {
    pub fn to_bracket(&self) -> Result<Bracket> {
        ensure!(self.dim == DIM, "unsupported dimension {}", self.dim);
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            ensure!(
                (1..=DIM).contains(&t.i) && (1..=DIM).contains(&t.j) && (1..=DIM).contains(&t.k),
                "term index out of range in ({}, {}; {})",
                t.i,
                t.j,
                t.k
            );
            ensure!(t.i < t.j, "terms must have i < j, got ({}, {})", t.i, t.j);
            let c = parse_rat(&t.coeff).map_err(anyhow::Error::msg)?;
            terms.push((t.i - 1, t.j - 1, t.k - 1, c));
        }
        Ok(Bracket::from_terms(terms))
    }

    pub fn from_bracket(b: &Bracket) -> Self {
        let mut terms = Vec::new();
        for i in 0..DIM {
            for j in i + 1..DIM {
                for k in 0..DIM {
                    let c = b.coeff(i, j, k);
                    if !num_traits::Zero::is_zero(c) {
                        terms.push(TermDto {
                            coeff: rat_string(c),
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                        });
                    }
                }
            }
        }
        BracketDto { dim: DIM, terms }
    }
}

/// A catalog file: a bracket plus its family name and parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntryDto {
    pub dim: usize,
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub terms: Vec<TermDto>,
}

/// One Laurent term of a curve entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveTermDto {
    pub coeff: String,
    pub power: i64,
}

/// A matrix curve as stored on disk: a 4x4 grid of term lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveDto {
    pub entries: Vec<Vec<Vec<CurveTermDto>>>,
    pub numeric_only: bool,
}

impl CurveDto {
    pub fn to_curve(&self) -> Result<Curve> {
        ensure!(
            self.entries.len() == DIM && self.entries.iter().all(|r| r.len() == DIM),
            "curve grid must be 4x4"
        );
        let mut grid = Vec::with_capacity(DIM);
        for row in &self.entries {
            let mut out = Vec::with_capacity(DIM);
            for entry in row {
                let mut l = Laurent::zero();
                for term in entry {
                    let c = parse_number(&term.coeff).map_err(anyhow::Error::msg)?;
                    l.add_term(c, term.power);
                }
                out.push(l);
            }
            grid.push(out);
        }
        Ok(Curve::new(grid, self.numeric_only))
    }
}

/// A degeneration-claim file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimDto {
    pub name: String,
    pub figures: Vec<String>,
    pub source_name: String,
    pub target_name: String,
    pub source: BracketDto,
    pub target: BracketDto,
    pub curve: CurveDto,
}

/// A non-degeneration-certificate file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDto {
    pub name: String,
    pub source_name: String,
    pub target_name: String,
    pub source: BracketDto,
    pub target: BracketDto,
    pub predicate: PredicateDto,
}

/// Wire form of [`Predicate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum PredicateDto {
    DimensionDrop {
        invariant: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alpha: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        beta: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        gamma: Option<String>,
    },
    ClosedConditionBroken {
        condition: ConditionDto,
    },
    SignatureGrowth {
        g: String,
    },
    TransformThenCheck {
        phi: Vec<String>,
        inner: Box<PredicateDto>,
    },
    DerivedDimGrowth,
    EqualOrbitDimDistinct {
        separator: SeparatorDto,
    },
}

/// Wire form of [`Condition`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConditionDto {
    Unimodular,
    KappaZero { g: String },
    PsiZero { f: String, g: String },
}

/// Wire form of [`Separator`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SeparatorDto {
    Unimodular,
    KappaSignature { g: String },
}

fn scalar(s: &str) -> Result<Rat> {
    parse_rat(s).map_err(anyhow::Error::msg)
}

impl PredicateDto {
    pub fn to_predicate(&self) -> Result<Predicate> {
        Ok(match self {
            PredicateDto::DimensionDrop { invariant, alpha, beta, gamma } => {
                let invariant = match invariant.as_str() {
                    "der" => SemicontinuousDim::Der,
                    "der_j" => SemicontinuousDim::DerJ,
                    "abg" => {
                        let get = |o: &Option<String>, name| {
                            o.as_deref()
                                .with_context(|| format!("abg dimension drop needs {name}"))
                                .and_then(scalar)
                        };
                        SemicontinuousDim::Abg {
                            alpha: get(alpha, "alpha")?,
                            beta: get(beta, "beta")?,
                            gamma: get(gamma, "gamma")?,
                        }
                    }
                    other => bail!("unknown dimension invariant {other:?}"),
                };
                Predicate::DimensionDrop { invariant }
            }
            PredicateDto::ClosedConditionBroken { condition } => Predicate::ClosedConditionBroken {
                condition: match condition {
                    ConditionDto::Unimodular => Condition::Unimodular,
                    ConditionDto::KappaZero { g } => Condition::KappaZero { g: scalar(g)? },
                    ConditionDto::PsiZero { f, g } => Condition::PsiZero {
                        f: scalar(f)?,
                        g: scalar(g)?,
                    },
                },
            },
            PredicateDto::SignatureGrowth { g } => Predicate::SignatureGrowth { g: scalar(g)? },
            PredicateDto::TransformThenCheck { phi, inner } => {
                ensure!(phi.len() == 8, "phi needs exactly 8 coefficients");
                let mut coeffs = Vec::with_capacity(8);
                for c in phi {
                    coeffs.push(scalar(c)?);
                }
                Predicate::TransformThenCheck {
                    phi: coeffs.try_into().expect("length checked"),
                    inner: Box::new(inner.to_predicate()?),
                }
            }
            PredicateDto::DerivedDimGrowth => Predicate::DerivedDimGrowth,
            PredicateDto::EqualOrbitDimDistinct { separator } => Predicate::EqualOrbitDimDistinct {
                separator: match separator {
                    SeparatorDto::Unimodular => Separator::Unimodular,
                    SeparatorDto::KappaSignature { g } => {
                        Separator::KappaSignature { g: scalar(g)? }
                    }
                },
            },
        })
    }
}

/// Expected invariant table: one row per `(dim Der_J, dim Der)` class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRowDto {
    pub abelian: Vec<String>,
    pub der: usize,
    pub der_j: usize,
    pub plain: Vec<String>,
    pub unimodular: Vec<String>,
}

/// Wrapper for `expected/table3.json`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDto {
    pub rows: Vec<TableRowDto>,
}

// ----------------------------------------------------------------------
// loading
// ----------------------------------------------------------------------

/// A catalog entry decoded all the way to a bracket.
#[derive(Clone, Debug)]
pub struct CatalogSample {
    pub id: String,
    pub sample: Sample,
    pub bracket: Bracket,
}

/// Everything the corpus directory contains, decoded and cross-checked.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub catalog: Vec<CatalogSample>,
    pub claims: Vec<Claim>,
    pub certificates: Vec<Certificate>,
    pub table: TableDto,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// All `*.json` files of a directory, sorted by file name.
fn json_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for entry in fs::read_dir(dir).with_context(|| format!("listing {}", dir.display()))? {
        let path = entry?.path();
        if path.extension().is_some_and(|e| e == "json") {
            out.push(path);
        }
    }
    out.sort();
    Ok(out)
}

/// Rebuilds the bracket a name stands for and checks the embedded tensor
/// against it.
fn checked_endpoint(name: &str, dto: &BracketDto) -> Result<Bracket> {
    let embedded = dto.to_bracket()?;
    let sample = catalog::parse_id(name)?;
    let built = sample.bracket()?;
    ensure!(
        embedded == built,
        "embedded tensor for {name:?} disagrees with its catalog family"
    );
    Ok(embedded)
}

/// Loads and decodes one catalog file.
fn load_catalog_entry(path: &Path) -> Result<CatalogSample> {
    let dto: CatalogEntryDto = read_json(path)?;
    let order = catalog::family_params(&dto.name)
        .with_context(|| format!("unknown family {:?}", dto.name))?;
    ensure!(
        dto.params.len() == order.len(),
        "family {:?} expects {} parameter(s), file has {}",
        dto.name,
        order.len(),
        dto.params.len()
    );
    let mut params = Vec::with_capacity(order.len());
    for &p in order {
        let v = dto
            .params
            .get(p)
            .with_context(|| format!("family {:?} is missing parameter {p:?}", dto.name))?;
        params.push((p, scalar(v)?));
    }
    let sample = Sample::new(&dto.name, &params);
    let bracket = BracketDto { dim: dto.dim, terms: dto.terms.clone() }.to_bracket()?;
    ensure!(
        bracket == sample.bracket()?,
        "stored tensor for {} disagrees with its family definition",
        sample.id()
    );
    Ok(CatalogSample { id: sample.id(), sample, bracket })
}

/// Loads the whole corpus, validating every cross-reference.
pub fn load_corpus(dir: &Path) -> Result<Corpus> {
    let mut catalog_samples = Vec::new();
    for path in json_files(&dir.join("catalog"))? {
        catalog_samples
            .push(load_catalog_entry(&path).with_context(|| format!("in {}", path.display()))?);
    }

    let mut claims = Vec::new();
    for path in json_files(&dir.join("claims"))? {
        let load = || -> Result<Claim> {
            let dto: ClaimDto = read_json(&path)?;
            Ok(Claim {
                source: checked_endpoint(&dto.source_name, &dto.source)?,
                target: checked_endpoint(&dto.target_name, &dto.target)?,
                curve: dto.curve.to_curve()?,
                name: dto.name,
                figures: dto.figures,
                source_id: dto.source_name,
                target_id: dto.target_name,
            })
        };
        claims.push(load().with_context(|| format!("in {}", path.display()))?);
    }

    let mut certificates = Vec::new();
    for path in json_files(&dir.join("certificates"))? {
        let load = || -> Result<Certificate> {
            let dto: CertificateDto = read_json(&path)?;
            Ok(Certificate {
                source: checked_endpoint(&dto.source_name, &dto.source)?,
                target: checked_endpoint(&dto.target_name, &dto.target)?,
                predicate: dto.predicate.to_predicate()?,
                name: dto.name,
                source_id: dto.source_name,
                target_id: dto.target_name,
            })
        };
        certificates.push(load().with_context(|| format!("in {}", path.display()))?);
    }

    let table = read_json(&dir.join("expected").join("table3.json"))?;
    Ok(Corpus { catalog: catalog_samples, claims, certificates, table })
}

/// Reads a single bracket file (either a bare tensor or a catalog entry;
/// only `dim` and `terms` are used) — the input format of `liecx check`.
pub fn load_bracket_file(path: &Path) -> Result<Bracket> {
    let dto: BracketDto = read_json(path)?;
    dto.to_bracket()
}
