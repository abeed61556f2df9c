//! Narrow-sense BCH codes of length (q^m - 1)/(q - 1) and the reversible
//! codes built from them.

use lcd_cyclic::constructions::{projective_bch, reversible_projective_bch, ProjSpec};
use lcd_cyclic::report::{analyze_construction, RunConfig};

fn main() -> lcd_cyclic::Result<()> {
    let cfg = RunConfig::default();
    let reg = cfg.registry()?;
    for (q, m, delta) in [(3, 4, 3), (3, 4, 9), (4, 4, 3), (5, 3, 4)] {
        let spec = ProjSpec { q, m, delta };
        let c = projective_bch(spec, &reg)?;
        println!("{:<12} k={} predicted={:?}", c.label, c.code.k(), c.predicted_k);
        let r = reversible_projective_bch(spec, &reg)?;
        let rep = analyze_construction(&r, &cfg, &reg)?;
        println!("  {} params={:?}", rep.text(), r.params);
    }
    Ok(())
}
