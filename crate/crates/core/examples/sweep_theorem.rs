//! Exhaustive check of one theorem over all connected graphs of an order,
//! from the built-in generator (n <= 7) or a graph6 file.
//!
//!     cargo run --release --example sweep_theorem -- t13 6
//!     cargo run --release --example sweep_theorem -- t16 crates/core/fixtures/con8.g6

use std::path::PathBuf;

use matchspec::enumeration::{sweep_theorem, GraphSource, SweepFilters};
use matchspec::theorems::{TheoremId, SPECTRAL_TOLERANCE};

fn main() -> matchspec::Result<()> {
    let mut args = std::env::args().skip(1);
    let t = TheoremId::parse(&args.next().unwrap_or_else(|| "t11".into()), 1)?;
    let src = match args.next() {
        Some(a) => match a.parse() {
            Ok(n) => GraphSource::BuiltIn(n),
            Err(_) => GraphSource::File(PathBuf::from(a)),
        },
        None => GraphSource::BuiltIn(6),
    };
    let filters = SweepFilters { min_degree: t.is_exclusion().then_some(2) };
    let r = sweep_theorem(&src, t, &filters, 1, SPECTRAL_TOLERANCE)?;
    println!(
        "{} n={} scanned {} filtered {} hypothesis {}",
        r.theorem, r.n, r.graphs_scanned, r.filtered_out, r.hypothesis_count
    );
    for e in &r.exceptions_found {
        println!("  {} m={} gap {:+.3e} {:?}", e.graph6, e.size, e.threshold_gap, e.family);
    }
    println!("{}", if r.passed() { "no counterexamples" } else { "COUNTEREXAMPLES FOUND" });
    Ok(())
}
