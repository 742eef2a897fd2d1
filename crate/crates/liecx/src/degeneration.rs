//! Degeneration curves, non-degeneration certificates, and the Hasse
//! diagrams that summarize both.
//!
//! A *degeneration claim* `mu -> lambda` is witnessed by a curve `g(t)`
//! in the group of invertible matrices commuting with `J`, such that the
//! transported brackets `g(t) . mu` converge to `lambda` as `t -> oo`.
//! Curves are polynomial in `u = e^t` (Laurent, so negative powers are
//! allowed), which makes the limit an exact degree computation: every
//! structure constant of `g(t) . mu` is a ratio of Laurent polynomials.
//!
//! A *non-degeneration certificate* `mu -/-> lambda` cites an invariant
//! that behaves semicontinuously along orbit closures and whose values on
//! `mu` and `lambda` are incompatible with `lambda` lying in the closure
//! of the orbit of `mu`.  Each [`Predicate`] variant encodes one such
//! argument; [`evaluate_predicate`] re-derives both sides from scratch.
//!
//! The numeric mode re-runs every curve in binary64 at a ladder of times
//! and checks that the residual against the target decreases to below a
//! tolerance — a redundant, independent confirmation of the exact limit.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_traits::Zero;
use thiserror::Error;

use crate::algebra_core::{j_matrix, Bracket, DIM};
use crate::exact_linalg::{rat_string, rat_to_f64, Laurent, Limit, Mat, Rat, RationalFunction, Signature};
use crate::invariants::{abg_derivation_dim, derivation_dim, j_derivation_dim, kappa, kappa_signature, psi};

/// Times (in `t`) at which the numeric ladder samples every curve.
pub const DEFAULT_TIMES: [f64; 5] = [4.0, 8.0, 12.0, 16.0, 20.0];

/// Default residual tolerance for the numeric mode.
pub const DEFAULT_TOL: f64 = 1e-9;

// ----------------------------------------------------------------------
// curves
// ----------------------------------------------------------------------

/// A matrix curve `g(t)` with entries Laurent in `u = e^t`.
///
/// `numeric_only` marks curves whose printed coefficients are decimal
/// approximations of irrational constants; such curves are exercised by
/// the numeric ladder but excluded from exact replay.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    entries: Vec<Vec<Laurent>>,
    numeric_only: bool,
}

impl Curve {
    pub fn new(entries: Vec<Vec<Laurent>>, numeric_only: bool) -> Self {
        assert_eq!(entries.len(), DIM, "curve must be 4x4");
        assert!(entries.iter().all(|r| r.len() == DIM), "curve must be 4x4");
        Curve { entries, numeric_only }
    }

    pub fn identity() -> Self {
        let mut entries = vec![vec![Laurent::zero(); DIM]; DIM];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = Laurent::one();
        }
        Curve::new(entries, false)
    }

    pub fn numeric_only(&self) -> bool {
        self.numeric_only
    }

    pub fn entry(&self, r: usize, c: usize) -> &Laurent {
        &self.entries[r][c]
    }

    /// Evaluates the curve at a rational value of `u` (not of `t`).
    pub fn eval_at_u(&self, u: &Rat) -> Mat {
        let mut m = Mat::zero(DIM, DIM);
        for r in 0..DIM {
            for c in 0..DIM {
                m[(r, c)] = self.entries[r][c].eval_rat(u);
            }
        }
        m
    }

    /// Evaluates the curve in binary64 at time `t` (so `u = e^t`).
    pub fn eval_f64(&self, t: f64) -> [[f64; 4]; 4] {
        let mut m = [[0.0; 4]; 4];
        for r in 0..DIM {
            for c in 0..DIM {
                m[r][c] = self.entries[r][c].eval_exp(t);
            }
        }
        m
    }

    /// Whether `J g(t) = g(t) J` holds identically in `u`.
    pub fn commutes_with_j(&self) -> bool {
        let j = j_matrix();
        for r in 0..DIM {
            for c in 0..DIM {
                let mut diff = Laurent::zero();
                for k in 0..DIM {
                    diff = diff.add(&self.entries[k][c].scale(&j[(r, k)]));
                    diff = diff.sub(&self.entries[r][k].scale(&j[(k, c)]));
                }
                if !diff.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Determinant as a Laurent polynomial (permanent-style expansion
    /// over the 24 permutations; the size is fixed at 4).
    pub fn det(&self) -> Laurent {
        let mut det = Laurent::zero();
        let perms = permutations4();
        for (perm, sign) in perms {
            let mut prod = Laurent::one();
            for (r, c) in perm.iter().enumerate() {
                prod = prod.mul(&self.entries[r][*c]);
            }
            if sign > 0 {
                det = det.add(&prod);
            } else {
                det = det.sub(&prod);
            }
        }
        det
    }

    /// Adjugate matrix, so that `g * adj(g) = det(g) * Id`.
    fn adjugate(&self) -> Vec<Vec<Laurent>> {
        let mut adj = vec![vec![Laurent::zero(); DIM]; DIM];
        for r in 0..DIM {
            for c in 0..DIM {
                let minor = self.minor3(c, r);
                adj[r][c] = if (r + c) % 2 == 0 { minor } else { minor.neg() };
            }
        }
        adj
    }

    /// 3x3 minor obtained by deleting row `dr` and column `dc`.
    fn minor3(&self, dr: usize, dc: usize) -> Laurent {
        let rows: Vec<usize> = (0..DIM).filter(|&r| r != dr).collect();
        let cols: Vec<usize> = (0..DIM).filter(|&c| c != dc).collect();
        let e = |i: usize, j: usize| &self.entries[rows[i]][cols[j]];
        let mut det = Laurent::zero();
        det = det.add(&e(0, 0).mul(&e(1, 1).mul(e(2, 2)).sub(&e(1, 2).mul(e(2, 1)))));
        det = det.sub(&e(0, 1).mul(&e(1, 0).mul(e(2, 2)).sub(&e(1, 2).mul(e(2, 0)))));
        det = det.add(&e(0, 2).mul(&e(1, 0).mul(e(2, 1)).sub(&e(1, 1).mul(e(2, 0)))));
        det
    }
}

/// All 24 permutations of `{0,1,2,3}` with their signs (by inversion count).
fn permutations4() -> Vec<([usize; 4], i32)> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if p.iter().collect::<BTreeSet<_>>().len() != 4 {
                        continue;
                    }
                    let mut inversions = 0;
                    for i in 0..4 {
                        for j in i + 1..4 {
                            if p[i] > p[j] {
                                inversions += 1;
                            }
                        }
                    }
                    out.push((p, if inversions % 2 == 0 { 1 } else { -1 }));
                }
            }
        }
    }
    out
}

// ----------------------------------------------------------------------
// exact replay
// ----------------------------------------------------------------------

/// Why an exact replay could not confirm a curve.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ReplayError {
    #[error("curve is marked numeric-only; exact replay is not meaningful")]
    NumericOnly,
    #[error("curve does not commute with J")]
    NotCompatible,
    #[error("curve has identically zero determinant")]
    Singular,
    #[error("structure constant ({i},{j};{k}) diverges as t -> oo")]
    DivergentLimit { i: usize, j: usize, k: usize },
    #[error("structure constant ({i},{j};{k}) has a 0/0 limit")]
    UndefinedLimit { i: usize, j: usize, k: usize },
    #[error("limit bracket differs from the declared target")]
    WrongLimit { limit: Box<Bracket> },
}

/// Structure constants of `g(t) . mu` as rational functions of `u`.
///
/// Uses `g . mu (x, y) = g mu(g^-1 x, g^-1 y)` with `g^-1 = adj(g)/det(g)`,
/// so each constant is (Laurent polynomial) / det(g)^2.
pub fn acted_constants(curve: &Curve, source: &Bracket) -> Result<Vec<RationalFunction>, ReplayError> {
    if !curve.commutes_with_j() {
        return Err(ReplayError::NotCompatible);
    }
    let det = curve.det();
    if det.is_zero() {
        return Err(ReplayError::Singular);
    }
    let adj = curve.adjugate();
    let det2 = det.mul(&det);
    let mut out = Vec::with_capacity(6 * DIM);
    for i in 0..DIM {
        for j in i + 1..DIM {
            // w = mu(adj e_i, adj e_j), componentwise Laurent.
            let mut w = vec![Laurent::zero(); DIM];
            for p in 0..DIM {
                for q in 0..DIM {
                    if p == q {
                        continue;
                    }
                    let scale = adj[p][i].mul(&adj[q][j]);
                    for (k, wk) in w.iter_mut().enumerate() {
                        let c = source.coeff(p, q, k);
                        if !c.is_zero() {
                            *wk = wk.add(&scale.scale(c));
                        }
                    }
                }
            }
            // v = g w, then divide by det^2.
            for m in 0..DIM {
                let mut v = Laurent::zero();
                for (k, wk) in w.iter().enumerate() {
                    v = v.add(&wk.mul(curve.entry(m, k)));
                }
                out.push(RationalFunction::new(v, det2.clone()));
            }
        }
    }
    Ok(out)
}

/// Exact limit of `g(t) . mu` as `t -> oo`, if every constant converges.
pub fn exact_limit(curve: &Curve, source: &Bracket) -> Result<Bracket, ReplayError> {
    if curve.numeric_only() {
        return Err(ReplayError::NumericOnly);
    }
    let constants = acted_constants(curve, source)?;
    let mut terms = Vec::new();
    let mut idx = 0;
    for i in 0..DIM {
        for j in i + 1..DIM {
            for k in 0..DIM {
                match constants[idx].limit_at_infinity() {
                    Limit::Scalar(s) => {
                        if !s.is_zero() {
                            terms.push((i, j, k, s));
                        }
                    }
                    Limit::Infinite => return Err(ReplayError::DivergentLimit { i, j, k }),
                    Limit::Undefined => return Err(ReplayError::UndefinedLimit { i, j, k }),
                }
                idx += 1;
            }
        }
    }
    Ok(Bracket::from_terms(terms))
}

/// Exact replay: the limit must exist and equal the declared target.
pub fn verify_exact(curve: &Curve, source: &Bracket, target: &Bracket) -> Result<(), ReplayError> {
    let limit = exact_limit(curve, source)?;
    if &limit == target {
        Ok(())
    } else {
        Err(ReplayError::WrongLimit { limit: Box::new(limit) })
    }
}

// ----------------------------------------------------------------------
// numeric replay
// ----------------------------------------------------------------------

/// One rung of the numeric ladder.
#[derive(Clone, Copy, Debug)]
pub struct LadderPoint {
    pub t: f64,
    /// Max-abs deviation of the transported constants from the target.
    pub residual: f64,
    /// Structure constant `(i, j; k)` attaining the residual.
    pub worst: (usize, usize, usize),
}

/// Transcript of a numeric replay.
#[derive(Clone, Debug)]
pub struct NumericLadder {
    pub points: Vec<LadderPoint>,
    pub tol: f64,
    /// Residuals never increase along the ladder (up to fp slack).
    pub monotone: bool,
    /// Final residual is below `tol`.
    pub final_within_tol: bool,
}

impl NumericLadder {
    pub fn pass(&self) -> bool {
        self.monotone && self.final_within_tol
    }

    pub fn final_residual(&self) -> f64 {
        self.points.last().map_or(f64::INFINITY, |p| p.residual)
    }
}

/// Runs the curve at the given times and measures how fast the
/// transported constants approach the target.
///
/// The transported constants are formed once, exactly, as ratios of
/// Laurent polynomials; only the evaluation at each `t` is floating
/// point.  (Inverting `g(t)` in binary64 instead would amplify roundoff
/// by the largest entry — about `e^{2t} * eps`, which is ~50 at `t = 20`
/// — and no ladder could ever reach a 1e-9 residual.)
pub fn numeric_ladder(
    curve: &Curve,
    source: &Bracket,
    target: &Bracket,
    times: &[f64],
    tol: f64,
) -> Result<NumericLadder, ReplayError> {
    let constants = acted_constants(curve, source)?;
    let mut targets = Vec::with_capacity(constants.len());
    for i in 0..DIM {
        for j in i + 1..DIM {
            for k in 0..DIM {
                targets.push(((i, j, k), rat_to_f64(target.coeff(i, j, k))));
            }
        }
    }
    let mut points = Vec::with_capacity(times.len());
    for &t in times {
        let mut residual = 0.0f64;
        let mut worst = (0, 1, 0);
        for (rf, ((i, j, k), tgt)) in constants.iter().zip(&targets) {
            let dev = (rf.eval_exp(t) - tgt).abs();
            if !(dev <= residual) {
                residual = dev;
                worst = (*i, *j, *k);
            }
        }
        points.push(LadderPoint { t, residual, worst });
    }
    let monotone = points.windows(2).all(|w| w[1].residual <= w[0].residual + 1e-12);
    let final_within_tol = points.last().is_some_and(|p| p.residual < tol);
    Ok(NumericLadder { points, tol, monotone, final_within_tol })
}

// ----------------------------------------------------------------------
// proper edges
// ----------------------------------------------------------------------

/// Derivation-dimension bookkeeping for one directed edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeCheck {
    pub source_der_j: usize,
    pub target_der_j: usize,
    pub source_der: usize,
    pub target_der: usize,
    pub accepted: bool,
}

/// A degeneration to a genuinely smaller orbit must strictly increase
/// the `J`-derivation dimension (equivalently: strictly drop the orbit
/// dimension) and cannot decrease the plain derivation dimension.  Equal
/// source and target make the edge vacuous and it is accepted as such.
pub fn check_proper_edge(source: &Bracket, target: &Bracket) -> EdgeCheck {
    let source_der_j = j_derivation_dim(source);
    let target_der_j = j_derivation_dim(target);
    let source_der = derivation_dim(source);
    let target_der = derivation_dim(target);
    let accepted = if source == target {
        true
    } else {
        target_der_j > source_der_j && target_der >= source_der
    };
    EdgeCheck { source_der_j, target_der_j, source_der, target_der, accepted }
}

// ----------------------------------------------------------------------
// whole-claim verification
// ----------------------------------------------------------------------

/// Which replay engines to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Numeric,
    #[default]
    Both,
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Mode::Exact),
            "numeric" => Ok(Mode::Numeric),
            "both" => Ok(Mode::Both),
            other => Err(format!("unknown mode {other:?} (expected exact, numeric, or both)")),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Numeric => "numeric",
            Mode::Both => "both",
        })
    }
}

/// A degeneration claim, fully decoded.
#[derive(Clone, Debug)]
pub struct Claim {
    pub name: String,
    pub figures: Vec<String>,
    pub source_id: String,
    pub target_id: String,
    pub source: Bracket,
    pub target: Bracket,
    pub curve: Curve,
}

/// Outcome of the exact engine on one claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactStatus {
    Verified,
    /// Numeric-only curves cannot be replayed exactly.
    Skipped,
    Failed(String),
}

/// Everything `verify_claim` learned about one claim.
#[derive(Clone, Debug)]
pub struct ClaimOutcome {
    pub name: String,
    pub source_id: String,
    pub target_id: String,
    pub exact: Option<ExactStatus>,
    pub numeric: Option<Result<NumericLadder, ReplayError>>,
    pub edge: EdgeCheck,
}

impl ClaimOutcome {
    pub fn pass(&self) -> bool {
        let exact_ok = match &self.exact {
            None => true,
            Some(ExactStatus::Verified | ExactStatus::Skipped) => true,
            Some(ExactStatus::Failed(_)) => false,
        };
        let numeric_ok = match &self.numeric {
            None => true,
            Some(Ok(l)) => l.pass(),
            Some(Err(_)) => false,
        };
        // A claim whose curve is numeric-only must at least pass numerically.
        let covered = self.exact == Some(ExactStatus::Verified)
            || matches!(&self.numeric, Some(Ok(l)) if l.pass());
        exact_ok && numeric_ok && covered && self.edge.accepted
    }
}

/// Replays one claim with the requested engines and checks the edge.
pub fn verify_claim(claim: &Claim, mode: Mode, tol: f64) -> ClaimOutcome {
    let exact = match mode {
        Mode::Numeric => None,
        Mode::Exact | Mode::Both => Some(if claim.curve.numeric_only() {
            ExactStatus::Skipped
        } else {
            match verify_exact(&claim.curve, &claim.source, &claim.target) {
                Ok(()) => ExactStatus::Verified,
                Err(e) => ExactStatus::Failed(e.to_string()),
            }
        }),
    };
    let numeric = match (mode, &exact) {
        (Mode::Exact, Some(ExactStatus::Skipped)) | (Mode::Numeric | Mode::Both, _) => Some(
            numeric_ladder(&claim.curve, &claim.source, &claim.target, &DEFAULT_TIMES, tol),
        ),
        (Mode::Exact, _) => None,
    };
    ClaimOutcome {
        name: claim.name.clone(),
        source_id: claim.source_id.clone(),
        target_id: claim.target_id.clone(),
        exact,
        numeric,
        edge: check_proper_edge(&claim.source, &claim.target),
    }
}

// ----------------------------------------------------------------------
// certificates
// ----------------------------------------------------------------------

/// Closed, isomorphism-invariant conditions: once true on an orbit they
/// stay true on its closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Condition {
    Unimodular,
    KappaZero { g: Rat },
    PsiZero { f: Rat, g: Rat },
}

/// Orbit invariants that can tell two brackets with equal orbit
/// dimension apart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Separator {
    Unimodular,
    KappaSignature { g: Rat },
}

/// Dimensions that can only grow along a degeneration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemicontinuousDim {
    Der,
    DerJ,
    Abg { alpha: Rat, beta: Rat, gamma: Rat },
}

impl SemicontinuousDim {
    fn eval(&self, b: &Bracket) -> usize {
        match self {
            SemicontinuousDim::Der => derivation_dim(b),
            SemicontinuousDim::DerJ => j_derivation_dim(b),
            SemicontinuousDim::Abg { alpha, beta, gamma } => abg_derivation_dim(b, alpha, beta, gamma),
        }
    }

    fn describe(&self) -> String {
        match self {
            SemicontinuousDim::Der => "dim Der".into(),
            SemicontinuousDim::DerJ => "dim Der_J".into(),
            SemicontinuousDim::Abg { alpha, beta, gamma } => format!(
                "dim Der_({},{},{})",
                rat_string(alpha),
                rat_string(beta),
                rat_string(gamma)
            ),
        }
    }
}

/// One semicontinuity argument ruling out a degeneration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Predicate {
    /// A dimension that must not decrease along a degeneration does.
    DimensionDrop { invariant: SemicontinuousDim },
    /// The source satisfies a closed invariant condition, the target breaks it.
    ClosedConditionBroken { condition: Condition },
    /// `n+` or `n-` of a twisted Killing form grows, impossible under
    /// congruence followed by a limit.
    SignatureGrowth { g: Rat },
    /// Apply an equivariant transform to both sides first.
    TransformThenCheck { phi: [Rat; 8], inner: Box<Predicate> },
    /// The derived-subalgebra dimension grows; it can only shrink in a limit.
    DerivedDimGrowth,
    /// Equal full orbit dimensions (equal `dim Der`) force the target of
    /// a would-be degeneration to be isomorphic to the source as a Lie
    /// algebra; an isomorphism invariant separates them.
    EqualOrbitDimDistinct { separator: Separator },
}

/// Verdict plus a human-readable account of the numbers behind it.
#[derive(Clone, Debug)]
pub struct CertificateCheck {
    pub accepted: bool,
    pub evidence: String,
}

fn describe_signature(s: &Signature) -> String {
    format!("(n+, n0, n-) = ({}, {}, {})", s.n_plus, s.n_zero, s.n_minus)
}

/// Recomputes both sides of a predicate and decides whether it really
/// obstructs `source ->> target`.
pub fn evaluate_predicate(p: &Predicate, source: &Bracket, target: &Bracket) -> CertificateCheck {
    match p {
        Predicate::DimensionDrop { invariant } => {
            let s = invariant.eval(source);
            let t = invariant.eval(target);
            CertificateCheck {
                accepted: t < s,
                evidence: format!(
                    "{}: source {s}, target {t}; a degeneration can only increase it",
                    invariant.describe()
                ),
            }
        }
        Predicate::ClosedConditionBroken { condition } => {
            let (held, broken, name) = match condition {
                Condition::Unimodular => (
                    source.is_unimodular(),
                    !target.is_unimodular(),
                    "unimodularity".to_string(),
                ),
                Condition::KappaZero { g } => (
                    kappa(source, g).is_zero(),
                    !kappa(target, g).is_zero(),
                    format!("kappa_{} = 0", rat_string(g)),
                ),
                Condition::PsiZero { f, g } => (
                    psi(source, f, g).is_zero(),
                    !psi(target, f, g).is_zero(),
                    format!("Psi_({},{}) = 0", rat_string(f), rat_string(g)),
                ),
            };
            CertificateCheck {
                accepted: held && broken,
                evidence: format!(
                    "closed condition [{name}]: holds on source: {held}, broken on target: {broken}"
                ),
            }
        }
        Predicate::SignatureGrowth { g } => {
            let s = kappa_signature(source, g);
            let t = kappa_signature(target, g);
            CertificateCheck {
                accepted: t.n_plus > s.n_plus || t.n_minus > s.n_minus,
                evidence: format!(
                    "kappa_{} signature: source {}, target {}; n+ and n- cannot grow in a limit",
                    rat_string(g),
                    describe_signature(&s),
                    describe_signature(&t)
                ),
            }
        }
        Predicate::TransformThenCheck { phi, inner } => {
            let s = source.phi_transform(phi);
            let t = target.phi_transform(phi);
            let sub = evaluate_predicate(inner, &s, &t);
            CertificateCheck {
                accepted: sub.accepted,
                evidence: format!(
                    "after the equivariant transform phi_({}): {}",
                    phi.iter().map(rat_string).collect::<Vec<_>>().join(","),
                    sub.evidence
                ),
            }
        }
        Predicate::DerivedDimGrowth => {
            let s = source.derived_dim();
            let t = target.derived_dim();
            CertificateCheck {
                accepted: t > s,
                evidence: format!(
                    "dim [g, g]: source {s}, target {t}; the derived dimension cannot grow in a limit"
                ),
            }
        }
        Predicate::EqualOrbitDimDistinct { separator } => {
            let s_d = derivation_dim(source);
            let t_d = derivation_dim(target);
            if s_d != t_d {
                return CertificateCheck {
                    accepted: false,
                    evidence: format!(
                        "full orbit dimensions differ (dim Der {s_d} vs {t_d}); this argument needs them equal"
                    ),
                };
            }
            let (distinct, detail) = match separator {
                Separator::Unimodular => {
                    let (a, b) = (source.is_unimodular(), target.is_unimodular());
                    (a != b, format!("unimodular: source {a}, target {b}"))
                }
                Separator::KappaSignature { g } => {
                    let (a, b) = (kappa_signature(source, g), kappa_signature(target, g));
                    (
                        a != b,
                        format!(
                            "kappa_{} signature: source {}, target {}",
                            rat_string(g),
                            describe_signature(&a),
                            describe_signature(&b)
                        ),
                    )
                }
            };
            CertificateCheck {
                accepted: distinct,
                evidence: format!(
                    "equal full orbit dimensions (dim Der = {s_d}), so a degeneration would force \
                     isomorphic algebras, but {detail}"
                ),
            }
        }
    }
}

/// A non-degeneration certificate, fully decoded.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub name: String,
    pub source_id: String,
    pub target_id: String,
    pub source: Bracket,
    pub target: Bracket,
    pub predicate: Predicate,
}

impl Certificate {
    pub fn check(&self) -> CertificateCheck {
        evaluate_predicate(&self.predicate, &self.source, &self.target)
    }
}

// ----------------------------------------------------------------------
// Hasse diagrams
// ----------------------------------------------------------------------

/// The five diagram slices of the classification.
pub const FIGURES: [&str; 5] = ["unimodular", "abelian", "general_a", "general_b", "general_c"];

/// Directed edges (source id, target id) of one figure, deduplicated and
/// sorted, as extracted from a claim list.
pub fn figure_edges(claims: &[Claim], figure: &str) -> Vec<(String, String)> {
    let set: BTreeSet<(String, String)> = claims
        .iter()
        .filter(|c| c.figures.iter().any(|f| f == figure))
        .map(|c| (c.source_id.clone(), c.target_id.clone()))
        .collect();
    set.into_iter().collect()
}

/// Renders one figure as a deterministic Graphviz document: nodes first
/// (sorted), then edges (sorted), one per line.
pub fn hasse_dot(figure: &str, edges: &[(String, String)]) -> String {
    let mut nodes = BTreeSet::new();
    for (s, t) in edges {
        nodes.insert(s.as_str());
        nodes.insert(t.as_str());
    }
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{figure}\" {{");
    let _ = writeln!(out, "    rankdir = BT;");
    let _ = writeln!(out, "    node [shape = box, fontname = \"Helvetica\"];");
    let _ = writeln!(out);
    for n in &nodes {
        let _ = writeln!(out, "    \"{n}\";");
    }
    let _ = writeln!(out);
    let mut sorted: Vec<_> = edges.to_vec();
    sorted.sort();
    sorted.dedup();
    for (s, t) in &sorted {
        let _ = writeln!(out, "    \"{s}\" -> \"{t}\";");
    }
    out.push_str("}\n");
    out
}

/// Directed pairs claimed to degenerate that are also certified *not*
/// to: any output here means the corpus contradicts itself.
pub fn consistency_conflicts(
    claimed: &[(String, String)],
    certified: &[(String, String)],
) -> Vec<(String, String)> {
    let claimed: BTreeSet<_> = claimed.iter().cloned().collect();
    let certified: BTreeSet<_> = certified.iter().cloned().collect();
    claimed.intersection(&certified).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exact_linalg::{frac, rat};

    fn sample(id: &str) -> Bracket {
        catalog::parse_id(id).unwrap().bracket().unwrap()
    }

    fn diag_curve(powers: [i64; 4]) -> Curve {
        let mut entries = vec![vec![Laurent::zero(); 4]; 4];
        for (i, p) in powers.into_iter().enumerate() {
            entries[i][i] = Laurent::term(rat(1), p);
        }
        Curve::new(entries, false)
    }

    #[test]
    fn permutation_signs_give_the_right_determinant() {
        // det of a generic-looking rational matrix, cross-checked
        // against the exact matrix determinant.
        let m = Mat::from_i64(&[
            &[2, 1, 0, 3],
            &[-1, 4, 1, 0],
            &[0, 2, -3, 1],
            &[5, 0, 1, 1],
        ]);
        let mut entries = vec![vec![Laurent::zero(); 4]; 4];
        for r in 0..4 {
            for c in 0..4 {
                entries[r][c] = Laurent::constant(m[(r, c)].clone());
            }
        }
        let curve = Curve::new(entries, false);
        assert_eq!(curve.det(), Laurent::constant(m.det()));
    }

    #[test]
    fn identity_curve_replays_to_the_source() {
        let mu = sample("mu14");
        assert_eq!(exact_limit(&Curve::identity(), &mu).unwrap(), mu);
    }

    #[test]
    fn uniform_scaling_degenerates_everything_to_abelian() {
        // g = u Id contracts: g.mu = u^-1 mu -> 0.
        let curve = diag_curve([1, 1, 1, 1]);
        let mu = sample("mu14");
        assert_eq!(exact_limit(&curve, &mu).unwrap(), sample("mu0"));
        let edge = check_proper_edge(&mu, &sample("mu0"));
        assert!(edge.accepted);
        // ... and the inverse scaling blows the constants up.
        let inverse = diag_curve([-1, -1, -1, -1]);
        assert!(matches!(
            exact_limit(&inverse, &mu),
            Err(ReplayError::DivergentLimit { .. })
        ));
    }

    #[test]
    fn curves_outside_the_group_are_rejected() {
        let skew = diag_curve([1, 0, 0, 0]);
        assert!(!skew.commutes_with_j());
        assert_eq!(
            exact_limit(&skew, &sample("mu1")).unwrap_err(),
            ReplayError::NotCompatible
        );

        let mut entries = vec![vec![Laurent::zero(); 4]; 4];
        entries[0][0] = Laurent::one();
        entries[2][2] = Laurent::one();
        let singular = Curve::new(entries, false);
        assert!(singular.commutes_with_j());
        assert_eq!(
            exact_limit(&singular, &sample("mu1")).unwrap_err(),
            ReplayError::Singular
        );
    }

    #[test]
    fn numeric_ladder_tracks_the_exact_limit() {
        // Speed matters: u^2 Id contracts like e^-2t, comfortably below
        // the default tolerance at t = 20; u Id only reaches ~4e-9.
        let curve = diag_curve([2, 2, 2, 2]);
        let mu = sample("mu14");
        let ladder =
            numeric_ladder(&curve, &mu, &sample("mu0"), &DEFAULT_TIMES, DEFAULT_TOL).unwrap();
        assert!(ladder.pass(), "{ladder:?}");
        let slow = diag_curve([1, 1, 1, 1]);
        let slow_ladder =
            numeric_ladder(&slow, &mu, &sample("mu0"), &DEFAULT_TIMES, DEFAULT_TOL).unwrap();
        assert!(slow_ladder.monotone && !slow_ladder.final_within_tol);
        // Against the wrong target the residual stalls at a constant.
        let bad = numeric_ladder(&curve, &mu, &mu, &DEFAULT_TIMES, DEFAULT_TOL).unwrap();
        assert!(!bad.final_within_tol);
    }

    #[test]
    fn predicates_recompute_both_sides() {
        let nilpotent = sample("mu1");
        let solvable = sample("mu6[a=0,b=0]");
        let semisimple = sample("mu8-[t=0]");

        // Unimodularity is closed: it holds on mu1, fails on mu6[0,0].
        let p = Predicate::ClosedConditionBroken { condition: Condition::Unimodular };
        assert!(evaluate_predicate(&p, &nilpotent, &solvable).accepted);
        assert!(!evaluate_predicate(&p, &solvable, &nilpotent).accepted);

        // kappa_0 of a 2-step nilpotent bracket vanishes; sl2 has
        // signature (2,1,1), so n+ grows: no degeneration sl2 <- ... mu1.
        let p = Predicate::SignatureGrowth { g: rat(0) };
        assert!(evaluate_predicate(&p, &nilpotent, &semisimple).accepted);
        assert!(!evaluate_predicate(&p, &semisimple, &nilpotent).accepted);

        // Derived dimension of sl2 x R is 3, of mu1 is 1.
        let p = Predicate::DerivedDimGrowth;
        assert!(evaluate_predicate(&p, &nilpotent, &semisimple).accepted);
        assert!(!evaluate_predicate(&p, &semisimple, &nilpotent).accepted);

        // Transforming both sides by phi = id keeps verdicts.
        let id = [rat(1), rat(0), rat(0), rat(0), rat(0), rat(0), rat(0), rat(0)];
        let p = Predicate::TransformThenCheck {
            phi: id,
            inner: Box::new(Predicate::DerivedDimGrowth),
        };
        assert!(evaluate_predicate(&p, &nilpotent, &semisimple).accepted);
    }

    #[test]
    fn equal_orbit_dim_needs_equal_dimensions() {
        let a = sample("mu8+[t=0]");
        let b = sample("mu8-[t=0]");
        // Same dim Der = 4, different kappa_0 signatures (so3 vs sl2).
        let p = Predicate::EqualOrbitDimDistinct {
            separator: Separator::KappaSignature { g: rat(0) },
        };
        assert!(evaluate_predicate(&p, &a, &b).accepted);
        // Different orbit dimensions: the argument does not apply.
        let c = sample("mu1");
        assert!(!evaluate_predicate(&p, &a, &c).accepted);
    }

    #[test]
    fn dot_output_is_deterministic() {
        let edges = vec![
            ("mu2".to_string(), "mu0".to_string()),
            ("mu1".to_string(), "mu0".to_string()),
            ("mu2".to_string(), "mu0".to_string()),
        ];
        let dot = hasse_dot("demo", &edges);
        let expected = "digraph \"demo\" {\n    rankdir = BT;\n    node [shape = box, \
                        fontname = \"Helvetica\"];\n\n    \"mu0\";\n    \"mu1\";\n    \"mu2\";\n\n    \
                        \"mu1\" -> \"mu0\";\n    \"mu2\" -> \"mu0\";\n}\n";
        assert_eq!(dot, expected);
    }

    #[test]
    fn conflicting_corpora_are_detected() {
        let claimed = vec![("a".to_string(), "b".to_string())];
        let certified = vec![
            ("a".to_string(), "b".to_string()),
            ("a".to_string(), "c".to_string()),
        ];
        assert_eq!(
            consistency_conflicts(&claimed, &certified),
            vec![("a".to_string(), "b".to_string())]
        );
    }

    #[test]
    fn fractional_coefficients_survive_the_round_trip() {
        // A two-term entry with rational coefficients evaluates exactly.
        let mut entries = vec![vec![Laurent::zero(); 4]; 4];
        for i in 0..4 {
            entries[i][i] = Laurent::one();
        }
        entries[1][0] = Laurent::from_terms([(frac(1, 2), 1), (rat(-2), -1)]);
        entries[3][2] = Laurent::from_terms([(frac(1, 2), 1), (rat(-2), -1)]);
        let curve = Curve::new(entries, false);
        assert!(curve.commutes_with_j());
        let m = curve.eval_at_u(&rat(2));
        assert_eq!(m[(1, 0)], rat(0)); // 1/2 * 2 - 2 * 1/2
    }
}
