//! Eigenvalues: a numeric Jacobi solver, exact characteristic polynomials
//! and the closed-form spectra of the families built elsewhere in the crate.

pub mod charpoly;
pub mod corona;
pub mod eigen;
pub mod loose;
pub mod multipartite;
pub mod perron;
pub mod poly;

use serde::Serialize;

use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::matrix::RealMatrix;

pub use charpoly::charpoly_exact;
pub use corona::{edge_corona_charpoly, edge_corona_spectrum, vertex_corona_spectrum, CoronaBranch, CoronaSpectrum};
pub use eigen::{eigenvalues, jacobi, EigenDecomposition};
pub use loose::{loose_cycle_spectrum, loose_path_g_route, loose_path_spectrum, LoosePathSpectrum};
pub use multipartite::{equal_blocks_spectrum, multipartite_charpoly, scaling_check};
pub use perron::{perron, PerronReport};
pub use poly::{RationalPoly, RealPoly};

/// Default tolerance for merging nearly equal eigenvalues.
pub const GROUP_TOL: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectrumSource {
    Numeric,
    ClosedForm,
    ExactRoots,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Eigenvalue {
    pub value: f64,
    pub multiplicity: usize,
}

/// A sorted eigenvalue multiset with multiplicities.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub eigenvalues: Vec<Eigenvalue>,
    pub source: SpectrumSource,
    pub tolerance: f64,
}

impl SpectrumReport {
    /// Group `values` into clusters whose consecutive gaps are at most `tol`;
    /// each cluster is reported at its mean.
    pub fn from_values(values: &[f64], source: SpectrumSource, tol: f64) -> Self {
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        let mut eigenvalues: Vec<Eigenvalue> = Vec::new();
        let mut cluster: Vec<f64> = Vec::new();
        let flush = |cluster: &mut Vec<f64>, out: &mut Vec<Eigenvalue>| {
            if !cluster.is_empty() {
                let mean = cluster.iter().sum::<f64>() / cluster.len() as f64;
                out.push(Eigenvalue {
                    value: mean,
                    multiplicity: cluster.len(),
                });
                cluster.clear();
            }
        };
        for v in sorted {
            if let Some(&last) = cluster.last() {
                if v - last > tol {
                    flush(&mut cluster, &mut eigenvalues);
                }
            }
            cluster.push(v);
        }
        flush(&mut cluster, &mut eigenvalues);
        Self {
            eigenvalues,
            source,
            tolerance: tol,
        }
    }

    pub fn order(&self) -> usize {
        self.eigenvalues.iter().map(|e| e.multiplicity).sum()
    }

    /// The multiset expanded back into a sorted list.
    pub fn flat(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.value, e.multiplicity))
            .collect()
    }

    /// Total multiplicity of eigenvalues within `tol` of `x`.
    pub fn multiplicity_near(&self, x: f64, tol: f64) -> usize {
        self.eigenvalues
            .iter()
            .filter(|e| (e.value - x).abs() <= tol)
            .map(|e| e.multiplicity)
            .sum()
    }
}

/// Numeric spectrum of a symmetric matrix, grouped at [`GROUP_TOL`].
pub fn eig_sym(m: &RealMatrix, tol: f64) -> Result<SpectrumReport> {
    let d = jacobi(m, tol, false)?;
    Ok(SpectrumReport::from_values(&d.values, SpectrumSource::Numeric, GROUP_TOL))
}

/// Sorted numeric adjacency eigenvalues of `h`.
pub fn adjacency_eigenvalues(h: &Hypergraph) -> Result<Vec<f64>> {
    eigenvalues(&h.adjacency_matrix()?.to_real())
}

/// Largest elementwise deviation between two multisets, after sorting.
/// `None` when the sizes differ.
pub fn max_deviation(a: &[f64], b: &[f64]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    Some(a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max))
}

/// True when every value of `sub` can be matched to a distinct value of
/// `sup` within `tol` (greedy on sorted lists, adequate for well-separated
/// clusters).
pub fn contains_multiset(sup: &[f64], sub: &[f64], tol: f64) -> bool {
    let mut used = vec![false; sup.len()];
    let mut sub = sub.to_vec();
    sub.sort_by(f64::total_cmp);
    'outer: for x in sub {
        let mut best: Option<(usize, f64)> = None;
        for (i, y) in sup.iter().enumerate() {
            if used[i] {
                continue;
            }
            let d = (x - y).abs();
            if d <= tol && best.is_none_or(|(_, bd)| d < bd) {
                best = Some((i, d));
            }
        }
        match best {
            Some((i, _)) => {
                used[i] = true;
                continue 'outer;
            }
            None => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grouping() {
        let r = SpectrumReport::from_values(&[1.0, -0.5, -0.5 + 1e-9], SpectrumSource::Numeric, GROUP_TOL);
        assert_eq!(r.eigenvalues.len(), 2);
        assert_eq!(r.eigenvalues[0].multiplicity, 2);
        assert_eq!(r.order(), 3);
        assert_eq!(r.flat().len(), 3);
        assert_eq!(r.multiplicity_near(-0.5, 1e-6), 2);
    }

    #[test]
    fn deviation_and_containment() {
        assert_eq!(max_deviation(&[1.0, 2.0], &[2.0, 1.0]), Some(0.0));
        assert_eq!(max_deviation(&[1.0], &[1.0, 2.0]), None);
        assert!(contains_multiset(&[0.0, 0.0, 1.0], &[0.0, 0.0], 1e-9));
        assert!(!contains_multiset(&[0.0, 1.0], &[0.0, 0.0], 1e-9));
    }
}
