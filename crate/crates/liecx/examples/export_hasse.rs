//! Assemble the Hasse diagrams of the degeneration order and write them
//! as Graphviz DOT files.
//!
//! Each figure collects the verified claims tagged with its name; the
//! nodes are catalog sample ids and an edge `s -> t` means "s properly
//! degenerates to t".  Before exporting, every edge is re-checked
//! against the order invariants (strict growth of `dim Der_J`,
//! non-strict growth of `dim Der`), and the claim corpus is checked for
//! conflicts against the certificate corpus — no pair may be both
//! claimed and refuted.
//!
//! ```text
//! cargo run --example export_hasse [out-dir]    # default: hasse-out/
//! dot -Tsvg hasse-out/unimodular.dot -o unimodular.svg
//! ```

use liecx::degeneration::{check_proper_edge, consistency_conflicts, figure_edges, hasse_dot, FIGURES};

fn main() -> anyhow::Result<()> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "hasse-out".to_string());
    let out = std::path::Path::new(&out);
    let corpus = liecx::corpus::load_corpus(&liecx::corpus::resolve_corpus_dir(None))?;

    // Edge endpoints are catalog ids, but not necessarily default
    // samples (a curve may land on any member of a family), so resolve
    // them through the id parser rather than the default-sample list.
    let by_id = |id: &str| -> anyhow::Result<liecx::algebra_core::Bracket> {
        Ok(liecx::catalog::parse_id(id)?.bracket()?)
    };

    std::fs::create_dir_all(out)?;
    for figure in FIGURES {
        let edges = figure_edges(&corpus.claims, figure);
        for (s, t) in &edges {
            let edge = check_proper_edge(&by_id(s)?, &by_id(t)?);
            anyhow::ensure!(
                edge.accepted,
                "edge {s} -> {t} violates the order invariants: \
                 der_j {} -> {}, der {} -> {}",
                edge.source_der_j,
                edge.target_der_j,
                edge.source_der,
                edge.target_der,
            );
        }
        let path = out.join(format!("{figure}.dot"));
        std::fs::write(&path, hasse_dot(figure, &edges))?;
        println!("{}: {} edges, all proper", path.display(), edges.len());
    }

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
    let conflicts = consistency_conflicts(&claimed, &certified);
    anyhow::ensure!(
        conflicts.is_empty(),
        "pairs both claimed and refuted: {conflicts:?}"
    );
    println!("claims and certificates are consistent (no pair is both claimed and refuted)");
    Ok(())
}
