//! Count and list every reversible cyclic code of a given length.

use lcd_cyclic::constructions::{count_reversible, enumerate_reversible};
use lcd_cyclic::cyclotomic::FieldRegistry;

fn main() -> lcd_cyclic::Result<()> {
    let reg = FieldRegistry::new();
    for (n, q) in [(7, 2), (15, 2), (26, 3), (127, 2), (1023, 2)] {
        let c = count_reversible(n, q, &reg)?;
        println!("n={n} q={q}: |Pi|={} count={} corollary={:?}", c.pi_size, c.count, c.corollary);
    }
    for code in enumerate_reversible(15, 2, Some(5), &reg)? {
        println!("[15,{}] g = {}", code.k(), code.generator());
    }
    Ok(())
}
