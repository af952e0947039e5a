//! Cyclic Jacobi rotations for dense symmetric matrices.

use crate::error::{Error, Result};
use crate::matrix::RealMatrix;

pub const MAX_SWEEPS: usize = 100;
/// Convergence threshold on the off-diagonal Frobenius norm, relative to
/// `1 + ||M||_F`.
pub const DEFAULT_TOL: f64 = 1e-14;
/// Largest tolerated `|M_ij - M_ji|` before the solver refuses the input.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Eigenvalues in ascending order, with eigenvectors as the matching
/// columns of `vectors` when requested.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: Option<RealMatrix>,
    pub sweeps: usize,
}

fn off_norm(a: &RealMatrix) -> f64 {
    let n = a.order();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a.get(i, j) * a.get(i, j);
            }
        }
    }
    s.sqrt()
}

pub fn jacobi(m: &RealMatrix, tol: f64, want_vectors: bool) -> Result<EigenDecomposition> {
    let asym = m.max_asymmetry();
    if asym > SYMMETRY_TOL {
        return Err(Error::NotSymmetric(asym));
    }
    let n = m.order();
    let mut a = m.clone();
    // symmetrise exactly so rotations see a single value per pair
    for i in 0..n {
        for j in 0..i {
            let v = 0.5 * (a.get(i, j) + a.get(j, i));
            a.set(i, j, v);
            a.set(j, i, v);
        }
    }
    let mut v = want_vectors.then(|| {
        let mut id = RealMatrix::zeros(n);
        for i in 0..n {
            id.set(i, i, 1.0);
        }
        id
    });
    let threshold = tol * (1.0 + m.frobenius());
    let mut sweeps = 0;
    loop {
        if off_norm(&a) < threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = a.get(p, p);
                let aqq = a.get(q, q);
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                a.set(p, p, app - t * apq);
                a.set(q, q, aqq + t * apq);
                a.set(p, q, 0.0);
                a.set(q, p, 0.0);
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a.get(r, p);
                    let arq = a.get(r, q);
                    let np = c * arp - s * arq;
                    let nq = s * arp + c * arq;
                    a.set(r, p, np);
                    a.set(p, r, np);
                    a.set(r, q, nq);
                    a.set(q, r, nq);
                }
                if let Some(v) = v.as_mut() {
                    for r in 0..n {
                        let vrp = v.get(r, p);
                        let vrq = v.get(r, q);
                        v.set(r, p, c * vrp - s * vrq);
                        v.set(r, q, s * vrp + c * vrq);
                    }
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(i, i).total_cmp(&a.get(j, j)));
    let values = order.iter().map(|&i| a.get(i, i)).collect();
    let vectors = v.map(|v| {
        let mut sorted = RealMatrix::zeros(n);
        for (new_col, &old_col) in order.iter().enumerate() {
            for r in 0..n {
                sorted.set(r, new_col, v.get(r, old_col));
            }
        }
        sorted
    });
    Ok(EigenDecomposition {
        values,
        vectors,
        sweeps,
    })
}

/// Ascending eigenvalues of a symmetric matrix.
pub fn eigenvalues(m: &RealMatrix) -> Result<Vec<f64>> {
    Ok(jacobi(m, DEFAULT_TOL, false)?.values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn diagonal_and_zero() {
        let z = RealMatrix::zeros(4);
        assert_eq!(eigenvalues(&z).unwrap(), vec![0.0; 4]);
        let d = RealMatrix::from_rows(&[vec![3.0, 0.0], vec![0.0, -1.0]]);
        assert_eq!(eigenvalues(&d).unwrap(), vec![-1.0, 3.0]);
    }

    #[test]
    fn path_three() {
        let m = RealMatrix::from_rows(&[
            vec![0.0, 1.0, 0.0],
            vec![1.0, 0.0, 1.0],
            vec![0.0, 1.0, 0.0],
        ]);
        let ev = eigenvalues(&m).unwrap();
        let want = [-(2f64.sqrt()), 0.0, 2f64.sqrt()];
        for (a, b) in ev.iter().zip(want) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn vectors_diagonalise() {
        let n = 7;
        let mut m = RealMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, ((i * j + i + j) % 5) as f64 - 2.0);
            }
        }
        for i in 0..n {
            for j in 0..i {
                let v = m.get(i, j);
                m.set(j, i, v);
            }
        }
        let d = jacobi(&m, DEFAULT_TOL, true).unwrap();
        let v = d.vectors.unwrap();
        for k in 0..n {
            for r in 0..n {
                let mv: f64 = (0..n).map(|c| m.get(r, c) * v.get(c, k)).sum();
                assert!((mv - d.values[k] * v.get(r, k)).abs() < 1e-10);
            }
        }
        // trace check
        let tr: f64 = (0..n).map(|i| m.get(i, i)).sum();
        assert!((tr - d.values.iter().sum::<f64>()).abs() < 1e-10);
    }

    #[test]
    fn cycle_closed_form() {
        let n = 9;
        let mut m = RealMatrix::zeros(n);
        for i in 0..n {
            m.set(i, (i + 1) % n, 1.0);
            m.set((i + 1) % n, i, 1.0);
        }
        let ev = eigenvalues(&m).unwrap();
        let mut want: Vec<f64> = (1..=n).map(|i| 2.0 * (2.0 * PI * i as f64 / n as f64).cos()).collect();
        want.sort_by(f64::total_cmp);
        for (a, b) in ev.iter().zip(&want) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_asymmetric() {
        let m = RealMatrix::from_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]);
        assert!(matches!(eigenvalues(&m), Err(Error::NotSymmetric(_))));
    }
}
