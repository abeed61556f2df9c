//! Cyclotomic cosets and a coset-leader audit.
//!
//! `cargo run --example cosets -- 33 2`

use lcd_cyclic::cosets::{audit_leader_lemma, partition, LeaderLemma};

fn main() -> lcd_cyclic::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, q) = match args[..] {
        [n, q] => (n, q),
        _ => (33, 2),
    };
    let part = partition(n, q)?;
    for (leader, members) in &part.cosets {
        let tag = if part.is_self_paired(*leader) { " (self-paired)" } else { "" };
        println!("C_{leader} = {members:?}{tag}");
    }
    println!("|Gamma| = {}, |Pi| = {}", part.gamma.len(), part.pi.len());

    for lemma in [LeaderLemma::Anti { q: 2, ell: 3 }, LeaderLemma::Anti { q: 2, ell: 5 }] {
        let r = audit_leader_lemma(lemma)?;
        println!("{lemma:?}: checked {}, counterexamples {:?}", r.checked, r.counterexamples);
    }
    Ok(())
}
