//! Equitable quotient of a family under its canonical partition, its exact
//! characteristic polynomial and largest root against the adjacency
//! spectral radius.
//!
//!     cargo run --example quotient_charpoly -- 'thm13-f3:n=10'

use matchspec::families::{build, canonical_partition, parse_family};
use matchspec::spectral::{largest_root, quotient_matrix, spectral_radius};

fn main() -> matchspec::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "thm13-f3:n=10".into());
    let spec = parse_family(&text)?;
    let g = build(&spec)?;
    let part = canonical_partition(&spec)?;
    let q = quotient_matrix(&g, &part)?;
    println!("blocks {:?}", part.sizes());
    for row in q.to_f64() {
        println!("  {row:?}");
    }
    let p = q.characteristic_polynomial()?;
    println!("charpoly {p}");
    println!("largest root {:.12}", largest_root(&p)?);
    println!("rho(A)       {:.12}", spectral_radius(&g).rho);
    Ok(())
}
