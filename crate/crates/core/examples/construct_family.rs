//! Builds graphs from family expressions and named shortcuts and prints
//! their graph6 codes.
//!
//!     cargo run --example construct_family -- 'K3 v (K2 u 3K1)'

use matchspec::families::{build, parse_family};
use matchspec::graph6::to_graph6;

fn main() -> matchspec::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let exprs = if args.is_empty() {
        vec!["thm13-f2".to_string(), "K1 v (K2 u K7)".into(), "K(3)+K(5)".into(), "w2:n=10".into()]
    } else {
        args
    };
    for e in exprs {
        let spec = parse_family(&e)?;
        let g = build(&spec)?;
        println!("{e:<20} {spec:<28} n={:<3} m={:<3} {}", g.order(), g.size(), to_graph6(&g)?);
    }
    Ok(())
}
