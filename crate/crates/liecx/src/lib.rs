//! Exact-arithmetic toolkit for degenerations of four-dimensional real
//! Lie algebras endowed with complex structures.
//!
//! The crate fixes the standard complex structure `J` on `R^4` and works
//! throughout with Lie brackets *compatible* with it (vanishing Nijenhuis
//! tensor).  Everything is computed over the rationals — ranks,
//! signatures, derivation algebras, curve limits — so every reported
//! number is a theorem, not a numerical estimate.
//!
//! The main capabilities, one module each:
//!
//! * [`exact_linalg`] — rational matrices, fraction-free rank and
//!   determinant, nullspaces, signatures of symmetric forms, and Laurent
//!   polynomials in `u = e^t` with limits at infinity.
//! * [`algebra_core`] — skew bilinear brackets via structure constants,
//!   Jacobi and integrability tests, the compatible-group action, and the
//!   `phi`/`psi`/`theta` bracket transforms.
//! * [`catalog`] — the eighteen families of compatible brackets and the
//!   default sample set used by the verification corpus.
//! * [`invariants`] — derivation algebras (plain, `J`-commuting, and
//!   `(alpha,beta,gamma)`-twisted), the twisted Killing forms `kappa_g`,
//!   and the cubic forms `Psi_{f,g}`.
//! * [`deformation`] — Chevalley-Eilenberg cohomology restricted to
//!   `J`-compatible cochains; `h2 = 0` certifies rigidity.
//! * [`degeneration`] — curve replay: evaluating group curves on
//!   brackets, taking exact limits, numeric residual ladders, proper-edge
//!   checks, non-degeneration certificates, and Hasse-diagram export.
//! * [`corpus`] — (de)serialization of the JSON corpus: catalog samples,
//!   degeneration claims, certificates, and expected invariant tables.
//! * [`cli`] — the `liecx` command-line front end and its report types.
//!
//! The `examples/` directory of the repository demonstrates each
//! capability end to end; the `liecx` binary drives the same library
//! functions for scripted use.

pub mod algebra_core;
pub mod catalog;
pub mod cli;
pub mod corpus;
pub mod deformation;
pub mod degeneration;
pub mod exact_linalg;
pub mod invariants;
