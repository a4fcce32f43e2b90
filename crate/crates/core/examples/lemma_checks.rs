//! Runs the numeric lemma suites and the displayed-polynomial identities on
//! a small grid.
//!
//!     cargo run --release --example lemma_checks -- n=4..8,samples=50

use matchspec::enumeration::{verify_charpoly_identities, verify_lemma, LemmaGrid, LemmaId};

fn main() -> matchspec::Result<()> {
    let grid = match std::env::args().nth(1) {
        Some(text) => LemmaGrid::parse(&text)?,
        None => LemmaGrid::new(4, 8),
    };
    for id in LemmaId::ALL {
        let g = LemmaGrid { n_max: grid.n_max.min(id.cap()), ..grid.clone() };
        let r = verify_lemma(id, &g)?;
        println!(
            "{:<6} {:>6} instances  gap {:.1e}  margin {:?}  {}",
            r.lemma,
            r.instances,
            r.max_equality_gap,
            r.min_strict_margin,
            if r.passed() { "ok" } else { "VIOLATED" }
        );
        for v in r.violations.iter().take(3) {
            println!("    {v}");
        }
    }
    let r = verify_charpoly_identities(&grid);
    println!("charpolys {} instances {}", r.instances, if r.passed() { "ok" } else { "MISMATCH" });
    Ok(())
}
