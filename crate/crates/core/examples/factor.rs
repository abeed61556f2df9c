//! Irreducible factors of x^n - 1 over GF(q).

use lcd_cyclic::cyclotomic::{factor_xn_minus_1, FieldRegistry};

fn main() -> lcd_cyclic::Result<()> {
    let reg = FieldRegistry::new();
    for (n, q) in [(15, 2), (13, 3), (21, 4)] {
        println!("x^{n} - 1 over GF({q}):");
        for (leader, f) in factor_xn_minus_1(&reg, n, q)? {
            println!("  m_{leader:<3} {f}  self-reciprocal={}", f.is_self_reciprocal()?);
        }
    }
    Ok(())
}
