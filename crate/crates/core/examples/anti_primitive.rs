//! Reversible BCH codes of length q^ell + 1.

use lcd_cyclic::constructions::anti_bch;
use lcd_cyclic::report::{analyze_construction, RunConfig};

fn main() -> lcd_cyclic::Result<()> {
    let cfg = RunConfig::default();
    let reg = cfg.registry()?;
    for (q, ell, delta) in [(2, 3, 4), (2, 4, 4), (2, 5, 6), (3, 3, 3), (3, 3, 5)] {
        let c = anti_bch(q, ell, delta, &reg)?;
        let r = analyze_construction(&c, &cfg, &reg)?;
        println!("{:<14} predicted k={:?} {}", c.label, c.predicted_k, r.text());
    }
    // The closed form fails here: 3 divides 9 and C_3 = {3, 6}.
    match anti_bch(2, 3, 5, &reg) {
        Ok(c) => println!("{}: k = {}", c.label, c.code.k()),
        Err(e) => println!("C(2,9,5,0): {e}"),
    }
    Ok(())
}
