//! Recompute the classification table and diff it against the shipped
//! expectation.
//!
//! Every default sample is classified by the pair
//! `(dim Der_J, dim Der)` — the dimensions of the holomorphic and the
//! full derivation algebra — and placed into one of three columns
//! (abelian-type structures, other unimodular algebras, the rest).
//! The result is printed as a text table and compared cell by cell with
//! `data/expected/table3.json`.
//!
//! ```text
//! cargo run --example invariant_table
//! ```

use liecx::cli::compute_table;
use liecx::corpus::{load_corpus, resolve_corpus_dir};

fn main() -> anyhow::Result<()> {
    let corpus = load_corpus(&resolve_corpus_dir(None))?;
    let samples: Vec<(String, liecx::algebra_core::Bracket)> = corpus
        .catalog
        .iter()
        .map(|s| (s.id.clone(), s.bracket.clone()))
        .collect();
    let table = compute_table(&samples);

    println!("(der_J, der) | abelian-type | unimodular | rest");
    println!("-------------+--------------+------------+-----");
    for row in &table.rows {
        println!(
            "   ({}, {:>2})   | {} | {} | {}",
            row.der_j,
            row.der,
            cell(&row.abelian),
            cell(&row.unimodular),
            cell(&row.plain),
        );
    }

    if table == corpus.table {
        println!("\nall {} rows match the expected table", table.rows.len());
        Ok(())
    } else {
        anyhow::bail!("computed table deviates from data/expected/table3.json");
    }
}

fn cell(ids: &[String]) -> String {
    if ids.is_empty() {
        "-".to_string()
    } else {
        ids.join(", ")
    }
}
