use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::spectra::eigen::{jacobi, DEFAULT_TOL};

#[derive(Clone, Debug, Serialize)]
pub struct PerronReport {
    pub value: f64,
    /// Distance to the second largest eigenvalue (infinite for order 1).
    pub gap: f64,
    pub simple: bool,
    /// Smallest entry of the sign-normalised leading eigenvector.
    pub min_entry: f64,
    pub positive_vector: bool,
}

/// Largest adjacency eigenvalue of a connected hypergraph, with its
/// simplicity and eigenvector positivity checked.
pub fn perron(h: &Hypergraph) -> Result<PerronReport> {
    if !h.is_connected() {
        return Err(Error::NotConnected);
    }
    let a = h.adjacency_matrix()?.to_real();
    let d = jacobi(&a, DEFAULT_TOL, true)?;
    let n = d.values.len();
    let value = d.values[n - 1];
    let gap = if n > 1 { value - d.values[n - 2] } else { f64::INFINITY };
    let v = d.vectors.expect("vectors requested");
    let col: Vec<f64> = (0..n).map(|r| v.get(r, n - 1)).collect();
    let sign = if col.iter().sum::<f64>() < 0.0 { -1.0 } else { 1.0 };
    let min_entry = col.iter().map(|x| x * sign).fold(f64::INFINITY, f64::min);
    Ok(PerronReport {
        value,
        gap,
        simple: gap > 1e-9,
        min_entry,
        positive_vector: min_entry > -1e-9,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_uniform, empty_uniform, loose_path};
    use crate::rational::int;

    #[test]
    fn regular_gives_valency() {
        let h = complete_uniform(3, 5, int(1)).unwrap();
        let p = perron(&h).unwrap();
        assert!((p.value - 6.0).abs() < 1e-10);
        assert!(p.simple && p.positive_vector);
        let p = perron(&complete_uniform(3, 3, int(1)).unwrap()).unwrap();
        assert!((p.value - 1.0).abs() < 1e-10);
    }

    #[test]
    fn path_is_simple() {
        let p = perron(&loose_path(3, 1, 2).unwrap()).unwrap();
        assert!(p.simple && p.positive_vector);
    }

    #[test]
    fn disconnected_rejected() {
        assert!(matches!(perron(&empty_uniform(3, 2)), Err(Error::NotConnected)));
    }
}
