//! Punctured generalized Reed-Muller codes and their reversible companions.

use lcd_cyclic::constructions::{eq9_dimension, grm_star, reversible_grm, GrmSpec};
use lcd_cyclic::report::{analyze_construction, RunConfig};

fn main() -> lcd_cyclic::Result<()> {
    let cfg = RunConfig {
        field_modulus_overrides: RunConfig::paper_moduli(),
        ..RunConfig::default()
    };
    let reg = cfg.registry()?;
    for (q, m, ell) in [(2, 5, 3), (2, 6, 4), (3, 3, 3)] {
        let spec = GrmSpec { q, m, ell };
        let star = grm_star(spec, &reg)?;
        println!("{} k={} (closed form {})", star.label, star.code.k(), eq9_dimension(q, m, ell));
        let rev = reversible_grm(spec, &reg)?;
        println!("  {}", analyze_construction(&rev, &cfg, &reg)?.text());
        println!("  g = {}", rev.code.generator());
    }
    Ok(())
}
