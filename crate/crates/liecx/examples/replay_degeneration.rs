//! Replay one degeneration claim in full detail.
//!
//! A claim ships a curve `g(t)` in the group of J-commuting matrices,
//! stored as Laurent polynomials in `u = e^t`.  The replay transports
//! the source bracket along the curve, takes the limit `t -> infinity`
//! of every structure constant as an exact degree comparison, and — as
//! an independent check — evaluates the transported constants at a
//! ladder of finite times, watching the residual against the target
//! fall monotonically below tolerance.
//!
//! ```text
//! cargo run --example replay_degeneration                        # a rational curve
//! cargo run --example replay_degeneration fig5_d4h_J3_to_d4h_J1  # the numeric-only one
//! ```

use liecx::degeneration::{numeric_ladder, verify_exact, DEFAULT_TIMES, DEFAULT_TOL};

fn main() -> anyhow::Result<()> {
    let name = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "fig1_d4_J1_to_rh3".to_string());

    let corpus = liecx::corpus::load_corpus(&liecx::corpus::resolve_corpus_dir(None))?;
    let claim = corpus
        .claims
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| anyhow::anyhow!("no claim named {name:?} in the corpus"))?;

    println!("claim  {}", claim.name);
    println!("source {}:  {}", claim.source_id, claim.source);
    println!("target {}:  {}", claim.target_id, claim.target);

    println!("\ncurve g(t), entries Laurent in u = e^t:");
    for r in 0..4 {
        let row: Vec<String> = (0..4).map(|c| claim.curve.entry(r, c).to_string()).collect();
        println!("    [ {} ]", row.join(" | "));
    }
    println!("det g = {}", claim.curve.det());

    if claim.curve.numeric_only() {
        println!("\nexact replay: skipped (curve has decimal coefficients)");
    } else {
        verify_exact(&claim.curve, &claim.source, &claim.target)?;
        println!("\nexact replay: every transported constant tends to the target value");
    }

    let ladder = numeric_ladder(&claim.curve, &claim.source, &claim.target, &DEFAULT_TIMES, DEFAULT_TOL)?;
    println!("\nnumeric ladder (tolerance {:.0e} at the last rung):", ladder.tol);
    for p in &ladder.points {
        println!(
            "    t = {:>2}:  residual {:>12.3e}   worst constant ({}, {}; {})",
            p.t,
            p.residual,
            p.worst.0 + 1,
            p.worst.1 + 1,
            p.worst.2 + 1,
        );
    }
    println!(
        "    monotone: {}, final within tolerance: {}",
        ladder.monotone, ladder.final_within_tol
    );
    anyhow::ensure!(ladder.pass(), "numeric ladder failed");
    Ok(())
}
