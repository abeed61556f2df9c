//! Full report for a generator polynomial given as text.
//!
//! `cargo run --example analyze -- 9 2 "(x+1)*(x^6+x^3+1)"`

use lcd_cyclic::codes::{CyclicCode, LcdMethod};
use lcd_cyclic::poly::Poly;
use lcd_cyclic::report::{analyze, RunConfig};

fn main() -> lcd_cyclic::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (n, q, g) = match &args[..] {
        [n, q, g] => (n.parse().expect("n"), q.parse().expect("q"), g.clone()),
        _ => (9, 2, "(x+1)*(x^6+x^3+1)".to_string()),
    };
    let cfg = RunConfig::default();
    let reg = cfg.registry()?;
    let report = analyze(n, q, &g, &cfg, &reg)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));

    let code = CyclicCode::from_generator(n, Poly::parse(&reg.base(q)?, &g)?)?;
    let dual = code.dual();
    println!("dual: [{}, {}], lcd by Gram = {}", dual.n(), dual.k(), code.is_lcd(LcdMethod::Gram, None)?);
    println!("hull dimension = {}", code.hull().k());
    Ok(())
}
