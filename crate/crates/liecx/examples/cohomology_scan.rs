//! Scan the catalog's deformation cohomology and test a linear
//! deformation.
//!
//! For each sample this computes, inside the 20-dimensional space of
//! J-compatible 2-cochains, the cocycles `z2 = dim ker delta_2`, the
//! coboundaries `b2 = dim im delta_1` (always `8 - dim Der_J`), and
//! `h2 = z2 - b2`.  A sample with `h2 = 0` is rigid: its orbit is open,
//! so it cannot be a proper limit of anything nearby.
//!
//! The scan ends with a worked deformation: a cocycle on a non-rigid
//! sample that actually integrates to a one-parameter family of
//! compatible Lie brackets.
//!
//! ```text
//! cargo run --example cohomology_scan
//! ```

use liecx::algebra_core::Bracket;
use liecx::deformation::{abelian_cochain_dim, c2_dim, c2j_basis, cohomology, linear_deformation_check};
use liecx::exact_linalg::rat;

fn main() -> anyhow::Result<()> {
    let corpus = liecx::corpus::load_corpus(&liecx::corpus::resolve_corpus_dir(None))?;

    println!(
        "cochain spaces: dim C2 = {}, J-compatible part = {}, abelian-type part = {}",
        c2_dim(),
        c2j_basis().len(),
        abelian_cochain_dim(),
    );

    println!("\n{:<22} z2  b2  h2", "sample");
    let mut rigid = Vec::new();
    for s in &corpus.catalog {
        let c = cohomology(&s.bracket);
        let mark = if c.h2 == 0 {
            rigid.push(s.id.clone());
            "  <- rigid"
        } else {
            ""
        };
        println!("{:<22} {:>2}  {:>2}  {:>2}{mark}", s.id, c.z2, c.b2, c.h2);
    }
    println!("\nrigid samples (open orbits): {}", rigid.join(", "));

    // A genuine deformation: on the split form (h2 = 1) the cocycle
    // lambda(e1, e3) = e4 is the direction that moves the sample along
    // its own one-parameter family, so mu + t*lambda stays a compatible
    // Lie bracket for every t.
    let base = corpus
        .catalog
        .iter()
        .find(|s| s.id == "mu8-[t=0]")
        .expect("catalog contains the split form at t = 0");
    let lambda = Bracket::from_terms([(0, 2, 3, rat(1))]);
    linear_deformation_check(&base.bracket, &lambda)
        .map_err(anyhow::Error::msg)?;
    let h2 = cohomology(&base.bracket).h2;
    println!(
        "\n{}: h2 = {h2}; mu + t*lambda with lambda = {lambda} stays a compatible Lie bracket",
        base.id
    );
    Ok(())
}
