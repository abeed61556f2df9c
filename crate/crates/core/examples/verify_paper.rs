//! Rebuild the fast set of worked examples and print one verdict per entry.

use lcd_cyclic::report::RunConfig;
use lcd_cyclic::repro::{verify_paper, Suite};

fn main() -> lcd_cyclic::Result<()> {
    let records = verify_paper(Suite::Fast, &RunConfig::default())?;
    for r in &records {
        let params = r.report.as_ref().map(|c| c.params_triple()).unwrap_or_default();
        println!("{:<14} {:<17} {params}", r.label, r.verdict.as_str());
    }
    Ok(())
}
