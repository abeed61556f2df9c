//! BCH codes, plain and with a reversible designed-distance window.

use lcd_cyclic::constructions::{bch, reversible_bch, BchSpec, ReversiblePattern};
use lcd_cyclic::report::{analyze_construction, RunConfig};

fn main() -> lcd_cyclic::Result<()> {
    let cfg = RunConfig::default();
    let reg = cfg.registry()?;
    let plain = bch(BchSpec { q: 2, n: 31, delta: 5, b: 1 }, &reg)?;
    let windows = [
        reversible_bch(ReversiblePattern::ZeroCentered, 2, 31, 2, &reg)?,
        reversible_bch(ReversiblePattern::OddMid, 2, 31, 3, &reg)?,
        reversible_bch(ReversiblePattern::EvenMid, 3, 20, 2, &reg)?,
    ];
    for c in std::iter::once(&plain).chain(&windows) {
        println!("{}", analyze_construction(c, &cfg, &reg)?.text());
    }
    Ok(())
}
