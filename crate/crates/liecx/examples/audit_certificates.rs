//! Check every non-degeneration certificate and print its evidence.
//!
//! A certificate encodes one semicontinuity or closed-condition
//! argument: an invariant that can only move one way along a
//! degeneration (derivation dimensions grow, signatures shrink, closed
//! conditions persist, ...) is evaluated on both endpoints, and the
//! certificate is accepted exactly when the invariant moves the
//! forbidden way — proving the degeneration impossible.
//!
//! ```text
//! cargo run --example audit_certificates
//! ```

use liecx::degeneration::{Certificate, Predicate};

fn kind(p: &Predicate) -> &'static str {
    match p {
        Predicate::DimensionDrop { .. } => "dimension drop",
        Predicate::ClosedConditionBroken { .. } => "closed condition broken",
        Predicate::SignatureGrowth { .. } => "signature growth",
        Predicate::TransformThenCheck { .. } => "transform, then check",
        Predicate::DerivedDimGrowth => "derived dimension growth",
        Predicate::EqualOrbitDimDistinct { .. } => "equal orbit dimension",
    }
}

fn main() -> anyhow::Result<()> {
    let corpus = liecx::corpus::load_corpus(&liecx::corpus::resolve_corpus_dir(None))?;

    let mut by_kind: Vec<(&'static str, Vec<&Certificate>)> = Vec::new();
    for cert in &corpus.certificates {
        let k = kind(&cert.predicate);
        match by_kind.iter_mut().find(|(name, _)| *name == k) {
            Some((_, list)) => list.push(cert),
            None => by_kind.push((k, vec![cert])),
        }
    }

    let mut rejected = 0usize;
    for (kind_name, certs) in &by_kind {
        println!("\n== {kind_name} ({}) ==", certs.len());
        for cert in certs {
            let check = cert.check();
            let verdict = if check.accepted { "ok " } else { "REJ" };
            if !check.accepted {
                rejected += 1;
            }
            println!("  [{verdict}] {}  ({} -/-> {})", cert.name, cert.source_id, cert.target_id);
            println!("        {}", check.evidence);
        }
    }

    println!("\n{} certificates, {} rejected", corpus.certificates.len(), rejected);
    anyhow::ensure!(rejected == 0, "{rejected} certificates rejected");
    Ok(())
}
