use serde::Serialize;

use crate::graph::Graph;

/// Convergence target for the off-diagonal Frobenius norm in Jacobi sweeps.
pub const JACOBI_TOLERANCE: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Spectral radius with its Perron vector and solver diagnostics.
#[derive(Clone, Debug, Serialize)]
pub struct SpectralResult {
    pub rho: f64,
    /// Unit (`l2`) eigenvector for `rho`, sign fixed so its entries sum to a
    /// nonnegative value. Strictly positive when the graph is connected.
    pub perron: Vec<f64>,
    pub iterations: usize,
    /// `max_i |(A x - rho x)_i|`.
    pub residual: f64,
}

fn off_norm(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += a[i][j] * a[i][j];
        }
    }
    (2.0 * s).sqrt()
}

/// Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations.
/// Returns eigenvalues in descending order with matching eigenvectors
/// (`vectors[i]` belongs to `values[i]`), plus the number of sweeps.
pub fn symmetric_eigen(matrix: &[Vec<f64>]) -> (Vec<f64>, Vec<Vec<f64>>, usize) {
    let n = matrix.len();
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let scale = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    let mut sweeps = 0;
    while sweeps < MAX_SWEEPS && off_norm(&a) > JACOBI_TOLERANCE * scale {
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let vp = row[p];
                    let vq = row[q];
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j][j].total_cmp(&a[i][i]));
    let values = order.iter().map(|&i| a[i][i]).collect();
    let vectors = order
        .iter()
        .map(|&i| (0..n).map(|k| v[k][i]).collect())
        .collect();
    (values, vectors, sweeps)
}

fn float_adjacency(g: &Graph) -> Vec<Vec<f64>> {
    g.adjacency_matrix()
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as f64).collect())
        .collect()
}

/// All adjacency eigenvalues, descending.
pub fn eigenvalues(g: &Graph) -> Vec<f64> {
    symmetric_eigen(&float_adjacency(g)).0
}

fn residual(g: &Graph, rho: f64, x: &[f64]) -> f64 {
    (0..g.order())
        .map(|v| {
            let ax: f64 = g.neighbors(v).iter().map(|w| x[w]).sum();
            (ax - rho * x[v]).abs()
        })
        .fold(0.0, f64::max)
}

fn fix_sign_and_normalize(x: &mut [f64]) {
    let sum: f64 = x.iter().sum();
    let norm = x.iter().map(|t| t * t).sum::<f64>().sqrt();
    let s = if sum < 0.0 { -1.0 } else { 1.0 } / norm;
    x.iter_mut().for_each(|t| *t *= s);
}

/// Spectral radius and Perron vector from the Jacobi eigensolver.
pub fn spectral_radius(g: &Graph) -> SpectralResult {
    if g.order() == 0 {
        return SpectralResult { rho: 0.0, perron: Vec::new(), iterations: 0, residual: 0.0 };
    }
    let (values, mut vectors, sweeps) = symmetric_eigen(&float_adjacency(g));
    let rho = values[0];
    let mut perron = vectors.swap_remove(0);
    fix_sign_and_normalize(&mut perron);
    let residual = residual(g, rho, &perron);
    SpectralResult { rho, perron, iterations: sweeps, residual }
}

/// Power iteration on `A + I` (the shift keeps bipartite graphs from
/// oscillating). Intended only as an independent cross-check.
pub fn power_iteration(g: &Graph, tolerance: f64, max_iterations: usize) -> SpectralResult {
    let n = g.order();
    if n == 0 {
        return SpectralResult { rho: 0.0, perron: Vec::new(), iterations: 0, residual: 0.0 };
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut iterations = 0;
    for it in 1..=max_iterations {
        iterations = it;
        let mut y: Vec<f64> =
            (0..n).map(|v| x[v] + g.neighbors(v).iter().map(|w| x[w]).sum::<f64>()).collect();
        let norm = y.iter().map(|t| t * t).sum::<f64>().sqrt();
        y.iter_mut().for_each(|t| *t /= norm);
        x = y;
        if residual(g, norm - 1.0, &x) <= tolerance {
            break;
        }
    }
    // Rayleigh quotient is more accurate than the norm ratio
    let ax: Vec<f64> = (0..n).map(|v| g.neighbors(v).iter().map(|w| x[w]).sum()).collect();
    let rho: f64 = ax.iter().zip(&x).map(|(a, b)| a * b).sum();
    fix_sign_and_normalize(&mut x);
    SpectralResult { residual: residual(g, rho, &x), rho, perron: x, iterations }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn complete_and_cycle_spectra() {
        let ev = eigenvalues(&Graph::complete(4).unwrap());
        for (got, want) in ev.iter().zip([3.0, -1.0, -1.0, -1.0]) {
            assert!(close(*got, want, 1e-12));
        }
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        for (got, want) in eigenvalues(&c4).iter().zip([2.0, 0.0, 0.0, -2.0]) {
            assert!(close(*got, want, 1e-12));
        }
    }

    #[test]
    fn perron_vector_of_join() {
        let g = Graph::complete(2).unwrap().join(&Graph::empty(4).unwrap()).unwrap();
        let r = spectral_radius(&g);
        assert!(close(r.rho, (1.0 + 33f64.sqrt()) / 2.0, 1e-12));
        assert!(r.residual <= 1e-10);
        assert!(r.perron.iter().all(|&t| t > 0.0));
        let norm: f64 = r.perron.iter().map(|t| t * t).sum();
        assert!(close(norm, 1.0, 1e-12));
        let p = power_iteration(&g, 1e-12, 100_000);
        assert!(close(p.rho, r.rho, 1e-9));
    }

    #[test]
    fn regular_graphs() {
        for n in 1..10 {
            let r = spectral_radius(&Graph::complete(n).unwrap());
            assert!(close(r.rho, (n - 1) as f64, 1e-10));
        }
        let k33 = Graph::empty(3).unwrap().join(&Graph::empty(3).unwrap()).unwrap();
        assert!(close(power_iteration(&k33, 1e-12, 100_000).rho, 3.0, 1e-9));
    }
}
