//! Walk the catalog: every family, every default sample, and the basic
//! facts the rest of the toolkit builds on.
//!
//! For each sample this prints the classical name, the structure
//! constants, how the bracket interacts with the complex structure
//! (abelian / bi-invariant / generic), and whether it is unimodular —
//! all decided exactly, over the rationals.
//!
//! ```text
//! cargo run --example catalog_tour
//! ```

use liecx::catalog::{default_samples, family_names, family_params};

fn main() -> anyhow::Result<()> {
    let families = family_names();
    println!("{} families:", families.len());
    for name in &families {
        let params = family_params(name).unwrap_or_default();
        if params.is_empty() {
            println!("  {name}");
        } else {
            println!("  {name}({})", params.join(", "));
        }
    }

    let samples = default_samples();
    println!("\n{} default samples:", samples.len());
    for sample in samples {
        let bracket = sample.bracket()?;
        let label = if sample.label.is_empty() {
            String::new()
        } else {
            format!("  ({})", sample.label)
        };
        println!("\n* {}{label}", sample.id());
        println!("    bracket:    {bracket}");
        println!("    J-class:    {}", bracket.j_class());
        println!("    unimodular: {}", bracket.is_unimodular());
        println!("    derived:    dim {}", bracket.derived_dim());
    }
    Ok(())
}
