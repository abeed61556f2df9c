//! GF(2^5) under a pinned modulus, and a default GF(3^4).

use lcd_cyclic::cyclotomic::FieldRegistry;

fn main() -> lcd_cyclic::Result<()> {
    let reg = FieldRegistry::new().with_override(2, &[1, 0, 1, 0, 0, 1])?;
    let f = reg.field(2, 5)?;
    println!("{f:?}");

    let a = f.generator();
    let mut x = f.one();
    for _ in 0..31 {
        x = x.mul(&a)?;
    }
    println!("alpha^31 = 1: {}", x == f.one());
    let b = a.mul(&a)?.add(&f.one())?;
    println!("(alpha^2 + 1) * (alpha^2 + 1)^-1 = {:?}", b.mul(&b.inv()?)?.digits());

    let g = reg.field(3, 4)?;
    println!("{}", serde_json::to_string(&g.describe()).expect("serializable"));
    Ok(())
}
