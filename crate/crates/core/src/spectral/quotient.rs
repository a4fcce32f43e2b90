use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{low_mask, Graph, VertexSet};
use crate::spectral::poly::{characteristic_polynomial, characteristic_polynomial_rational, Polynomial};

/// Ordered vertex partition `V = V_1 ∪ ... ∪ V_s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    blocks: Vec<VertexSet>,
}

impl Partition {
    /// Validates that the blocks are nonempty, disjoint and cover `0..n`.
    pub fn new(n: usize, blocks: Vec<VertexSet>) -> Result<Self> {
        let mut seen = 0u64;
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            }
            if seen & b.0 != 0 {
                return Err(Error::InvalidPartition(format!("block {i} overlaps an earlier block")));
            }
            seen |= b.0;
        }
        if seen != low_mask(n) {
            return Err(Error::InvalidPartition(format!("blocks do not cover 0..{n}")));
        }
        Ok(Partition { blocks })
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }
}

/// Matrix of average block row sums `q_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub entries: Vec<Vec<Ratio<i128>>>,
    /// Every vertex of block `i` has exactly `q_ij` neighbors in block `j`.
    pub equitable: bool,
}

impl QuotientMatrix {
    /// Integer entries, if all are integral (always true when equitable).
    pub fn integer_entries(&self) -> Option<Vec<Vec<i128>>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|q| q.is_integer().then(|| q.to_integer())).collect())
            .collect()
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|q| *q.numer() as f64 / *q.denom() as f64).collect())
            .collect()
    }

    /// Exact characteristic polynomial. Fails for non-integral entries; use
    /// [`QuotientMatrix::characteristic_polynomial_rational`] there.
    pub fn characteristic_polynomial(&self) -> Result<Polynomial> {
        let m = self
            .integer_entries()
            .ok_or_else(|| Error::InvalidPartition("quotient has non-integral entries".into()))?;
        characteristic_polynomial(&m)
    }

    pub fn characteristic_polynomial_rational(&self) -> Result<Vec<Ratio<i128>>> {
        characteristic_polynomial_rational(&self.entries)
    }
}

pub fn quotient_matrix(g: &Graph, p: &Partition) -> Result<QuotientMatrix> {
    let p = Partition::new(g.order(), p.blocks.clone())?;
    let mut equitable = true;
    let entries = p
        .blocks
        .iter()
        .map(|bi| {
            p.blocks
                .iter()
                .map(|bj| {
                    let counts: Vec<u32> =
                        bi.iter().map(|v| (g.neighbors(v).0 & bj.0).count_ones()).collect();
                    if counts.windows(2).any(|w| w[0] != w[1]) {
                        equitable = false;
                    }
                    let total: i128 = counts.iter().map(|&c| c as i128).sum();
                    Ratio::new(total, bi.len() as i128)
                })
                .collect()
        })
        .collect();
    Ok(QuotientMatrix { entries, equitable })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::poly::largest_root;

    fn ints(q: &QuotientMatrix) -> Vec<Vec<i128>> {
        q.integer_entries().unwrap()
    }

    #[test]
    fn join_quotients() {
        let g = Graph::complete(2).unwrap().join(&Graph::empty(4).unwrap()).unwrap();
        let p = Partition::new(6, vec![VertexSet::from_slice(&[0, 1]), VertexSet::from_slice(&[2, 3, 4, 5])])
            .unwrap();
        let q = quotient_matrix(&g, &p).unwrap();
        assert!(q.equitable);
        assert_eq!(ints(&q), vec![vec![1, 4], vec![2, 0]]);
        let poly = q.characteristic_polynomial().unwrap();
        assert_eq!(poly, Polynomial::from_descending(&[1, -1, -8]));
        assert!((largest_root(&poly).unwrap() - (1.0 + 33f64.sqrt()) / 2.0).abs() < 1e-12);

        let g = Graph::complete(3).unwrap().join(&Graph::empty(3).unwrap()).unwrap();
        let p = Partition::new(6, vec![VertexSet::from_slice(&[0, 1, 2]), VertexSet::from_slice(&[3, 4, 5])])
            .unwrap();
        let q = quotient_matrix(&g, &p).unwrap();
        assert_eq!(ints(&q), vec![vec![2, 3], vec![3, 0]]);
        let poly = q.characteristic_polynomial().unwrap();
        assert_eq!(poly, Polynomial::from_descending(&[1, -2, -9]));
        assert!((largest_root(&poly).unwrap() - (1.0 + 10f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn path_and_non_equitable() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let p = Partition::new(3, vec![VertexSet::from_slice(&[0, 2]), VertexSet::from_slice(&[1])]).unwrap();
        let q = quotient_matrix(&p3, &p).unwrap();
        assert!(q.equitable);
        assert_eq!(ints(&q), vec![vec![0, 1], vec![2, 0]]);

        let p = Partition::new(3, vec![VertexSet::from_slice(&[0, 1]), VertexSet::from_slice(&[2])]).unwrap();
        let q = quotient_matrix(&p3, &p).unwrap();
        assert!(!q.equitable);
        assert_eq!(q.entries[0][1], Ratio::new(1, 2));
        assert!(q.characteristic_polynomial().is_err());
        assert!(q.characteristic_polynomial_rational().is_ok());
    }

    #[test]
    fn bad_partitions() {
        assert!(Partition::new(3, vec![VertexSet::from_slice(&[0, 1])]).is_err());
        assert!(Partition::new(2, vec![VertexSet::from_slice(&[0, 1]), VertexSet::from_slice(&[1])]).is_err());
        assert!(Partition::new(2, vec![VertexSet::from_slice(&[0, 1]), VertexSet::EMPTY]).is_err());
    }
}
