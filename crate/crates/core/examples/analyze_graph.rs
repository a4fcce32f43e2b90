//! Decides matching extension and exclusion for one graph, directly and by
//! the structural criteria, and evaluates every theorem on it.
//!
//!     cargo run --example analyze_graph -- 'E@~w'

use matchspec::graph6::parse_graph6;
use matchspec::matching::{is_1_excludable, is_1_excludable_criterion, is_k_extendable, max_matching};
use matchspec::spectral::spectral_radius;
use matchspec::theorems::{theorem_verdict, TheoremId};

fn main() -> matchspec::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "E@~w".into());
    let g = parse_graph6(&text)?;
    println!("n = {}, m = {}, min degree = {}", g.order(), g.size(), g.min_degree());
    println!("maximum matching {:?}", max_matching(&g).edges);
    println!("rho = {:.6}", spectral_radius(&g).rho);

    let ext = is_k_extendable(&g, 1);
    println!("1-extendable: {} {:?}", ext.holds, ext.witness);
    let exc = is_1_excludable(&g);
    println!("1-excludable: {} {:?}", exc.holds, exc.witness);
    if g.is_connected() {
        println!("criterion agrees: {}", is_1_excludable_criterion(&g)?.holds == exc.holds);
    }

    for t in [TheoremId::T11 { k: 1 }, TheoremId::T14 { k: 1 }, TheoremId::T13, TheoremId::T16] {
        match theorem_verdict(&g, t) {
            Ok(v) => println!(
                "{t}: hypothesis {} conclusion {} exception {:?}",
                v.hypothesis_met, v.conclusion_met, v.exception
            ),
            Err(e) => println!("{t}: {e}"),
        }
    }
    Ok(())
}
