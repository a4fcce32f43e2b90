//! Isomorphism testing and canonical labelling; recognizes which registered
//! family a relabelled graph belongs to.

use matchspec::enumeration::registry;
use matchspec::families::{build, parse_family, recognize, FamilySpec};
use matchspec::graph6::to_graph6;
use matchspec::iso::{are_isomorphic, canonical_form};

fn main() -> matchspec::Result<()> {
    let g = build(&parse_family("K4 v (K2 u 4K1)")?)?;
    let perm: Vec<usize> = (0..g.order()).rev().collect();
    let h = g.relabel(&perm)?;
    println!("{} relabelled {}", to_graph6(&g)?, to_graph6(&h)?);
    println!("isomorphic: {}", are_isomorphic(&g, &h));
    println!("canonical  {} / {}", to_graph6(&canonical_form(&g))?, to_graph6(&canonical_form(&h))?);
    let ids: Vec<_> = registry(h.order())
        .into_iter()
        .filter_map(|s| match s {
            FamilySpec::Named(id) => Some(id),
            _ => None,
        })
        .collect();
    println!("recognized as {:?}", recognize(&h, &ids));
    Ok(())
}
