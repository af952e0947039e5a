//! Complete m-partite m-uniform hypergraphs: characteristic polynomial,
//! the two-size spectrum and the nonzero-spectrum scaling law.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{complete_multipartite, PartiteMode};
use crate::rational::{self, Rational};
use crate::spectra::poly::RationalPoly;
use crate::spectra::{adjacency_eigenvalues, SpectrumReport, SpectrumSource, GROUP_TOL};

/// `s_i = prod_{j != i} n_j`.
pub fn block_products(sizes: &[usize]) -> Vec<Rational> {
    (0..sizes.len())
        .map(|i| {
            sizes
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(rational::one(), |acc, (_, &n)| acc * rational::int(n as i64))
        })
        .collect()
}

/// Elementary symmetric polynomials `sigma_0..sigma_k` of `values`.
pub fn elementary_symmetric(values: &[Rational]) -> Vec<Rational> {
    let mut e = vec![rational::zero(); values.len() + 1];
    e[0] = rational::one();
    for (done, v) in values.iter().enumerate() {
        for i in (1..=done + 1).rev() {
            let add = &e[i - 1] * v;
            e[i] += add;
        }
    }
    e
}

/// `x^(n-m) (x^m - sum_{i=2}^m (i-1)/(m-1)^i sigma_i(s) x^(m-i))`.
pub fn multipartite_charpoly(m: usize, sizes: &[usize]) -> Result<RationalPoly> {
    if m < 2 || sizes.len() != m {
        return Err(Error::ArityError(format!(
            "need exactly m = {m} parts, got {}",
            sizes.len()
        )));
    }
    if sizes.contains(&0) {
        return Err(Error::ArityError("part sizes must be positive".into()));
    }
    let n: usize = sizes.iter().sum();
    let sigma = elementary_symmetric(&block_products(sizes));
    let mut inner = vec![rational::zero(); m + 1];
    inner[m] = rational::one();
    let m1 = rational::int(m as i64 - 1);
    for i in 2..=m {
        let coef = rational::int(i as i64 - 1) / num_traits::pow(m1.clone(), i) * &sigma[i];
        inner[m - i] -= coef;
    }
    let inner = RationalPoly::from_coeffs(inner);
    Ok(&inner * &RationalPoly::monomial(rational::one(), n - m))
}

/// Closed-form spectrum for `l1` parts of size `n1` and `l2` parts of size
/// `n2`, with `l1 + l2 = m`.
pub fn equal_blocks_spectrum(m: usize, n1: usize, l1: usize, n2: usize, l2: usize) -> Result<SpectrumReport> {
    if l1 == 0 || l2 == 0 || l1 + l2 != m || n1 == 0 || n2 == 0 {
        return Err(Error::ArityError(format!(
            "need l1, l2 >= 1 with l1 + l2 = m and positive sizes (m={m}, l1={l1}, l2={l2})"
        )));
    }
    let pw = |b: usize, e: usize| (b as f64).powi(e as i32);
    let s1 = pw(n1, l1 - 1) * pw(n2, l2);
    let s2 = pw(n1, l1) * pw(n2, l2 - 1);
    let (l1f, l2f) = (l1 as f64, l2 as f64);
    let t = s1 * (l1f - 1.0) + s2 * (l2f - 1.0);
    let disc = (t * t + 4.0 * s1 * s2 * (l1f + l2f - 1.0)).sqrt();
    let m1 = (m - 1) as f64;
    let mut values = vec![(t + disc) / 2.0 / m1, (t - disc) / 2.0 / m1];
    values.extend(std::iter::repeat_n(-s1 / m1, l1 - 1));
    values.extend(std::iter::repeat_n(-s2 / m1, l2 - 1));
    values.extend(std::iter::repeat_n(0.0, l1 * n1 + l2 * n2 - m));
    Ok(SpectrumReport::from_values(&values, SpectrumSource::ClosedForm, GROUP_TOL))
}

#[derive(Clone, Debug, Serialize)]
pub struct ScalingCheck {
    pub holds: bool,
    pub factor: f64,
    /// Nonzero eigenvalues of the original, multiplied by `factor`.
    pub scaled: Vec<f64>,
    /// Nonzero eigenvalues of the blown-up hypergraph.
    pub observed: Vec<f64>,
    pub max_relative_deviation: f64,
}

/// Compare the nonzero spectrum of `K^m_{sizes}` times `r^(m-1)` with the
/// nonzero spectrum of `K^m_{r * sizes}`, within `1e-8` relative.
pub fn scaling_check(m: usize, sizes: &[usize], r: usize) -> Result<ScalingCheck> {
    if sizes.len() != m {
        return Err(Error::ArityError(format!("need exactly m = {m} parts")));
    }
    if r == 0 {
        return Err(Error::ArityError("scale factor must be at least 1".into()));
    }
    let big: Vec<usize> = sizes.iter().map(|n| n * r).collect();
    let a = adjacency_eigenvalues(&complete_multipartite(m, sizes, PartiteMode::Weak)?)?;
    let b = adjacency_eigenvalues(&complete_multipartite(m, &big, PartiteMode::Weak)?)?;
    let factor = (r as f64).powi(m as i32 - 1);
    let nonzero = |v: Vec<f64>| -> Vec<f64> {
        let scale = v.iter().fold(1.0f64, |acc, x| acc.max(x.abs()));
        v.into_iter().filter(|x| x.abs() > 1e-9 * scale).collect()
    };
    let mut scaled: Vec<f64> = nonzero(a).into_iter().map(|x| x * factor).collect();
    let mut observed = nonzero(b);
    scaled.sort_by(f64::total_cmp);
    observed.sort_by(f64::total_cmp);
    let mut dev = if scaled.len() == observed.len() { 0.0 } else { f64::INFINITY };
    if dev == 0.0 {
        for (x, y) in scaled.iter().zip(&observed) {
            dev = f64::max(dev, (x - y).abs() / y.abs().max(1e-300));
        }
    }
    Ok(ScalingCheck {
        holds: dev <= 1e-8,
        factor,
        scaled,
        observed,
        max_relative_deviation: dev,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::spectra::charpoly_exact;

    #[test]
    fn charpoly_examples() {
        assert_eq!(
            multipartite_charpoly(3, &[2, 2, 2]).unwrap(),
            RationalPoly::from_ints(&[0, 0, 0, -16, -12, 0, 1])
        );
        let p = multipartite_charpoly(3, &[1, 1, 1]).unwrap();
        let want = &RationalPoly::linear_root(int(1)) * &RationalPoly::linear_root(rational::ratio(-1, 2)).pow(2);
        assert_eq!(p, want);
        let h = complete_multipartite(3, &[1, 1, 2], PartiteMode::Weak).unwrap();
        assert_eq!(
            multipartite_charpoly(3, &[1, 1, 2]).unwrap(),
            charpoly_exact(&h.adjacency_matrix().unwrap()).unwrap()
        );
        assert!(multipartite_charpoly(3, &[1, 1]).is_err());
    }

    #[test]
    fn zero_multiplicity_is_n_minus_m() {
        for sizes in [[1usize, 2, 3], [2, 2, 3], [1, 1, 4]] {
            let p = multipartite_charpoly(3, &sizes).unwrap();
            let n: usize = sizes.iter().sum();
            let zeros = p.coeffs().iter().take_while(|c| c == &&rational::zero()).count();
            assert_eq!(zeros, n - 3);
        }
    }

    #[test]
    fn two_block_example() {
        let r = equal_blocks_spectrum(3, 1, 2, 2, 1).unwrap();
        let v = r.flat();
        let s5 = 5f64.sqrt();
        let mut want = vec![(1.0 - s5) / 2.0, -1.0, 0.0, (1.0 + s5) / 2.0];
        want.sort_by(f64::total_cmp);
        for (a, b) in v.iter().zip(&want) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!(v.iter().sum::<f64>().abs() < 1e-12);
        assert!(equal_blocks_spectrum(3, 1, 3, 2, 0).is_err());
    }

    #[test]
    fn two_block_matches_numeric() {
        for (m, n1, l1, n2, l2) in [(3, 1, 2, 2, 1), (4, 2, 2, 1, 2), (4, 1, 1, 3, 3), (3, 2, 1, 2, 2)] {
            let mut sizes = vec![n1; l1];
            sizes.extend(vec![n2; l2]);
            let h = complete_multipartite(m, &sizes, PartiteMode::Weak).unwrap();
            let obs = adjacency_eigenvalues(&h).unwrap();
            let pred = equal_blocks_spectrum(m, n1, l1, n2, l2).unwrap().flat();
            assert!(crate::spectra::max_deviation(&obs, &pred).unwrap() < 1e-8);
        }
    }

    #[test]
    fn scaling() {
        let c = scaling_check(3, &[1, 1, 1], 2).unwrap();
        assert!(c.holds);
        assert!((c.observed[2] - 4.0).abs() < 1e-9);
        assert!(scaling_check(3, &[1, 1, 2], 1).unwrap().holds);
        assert!(scaling_check(3, &[1, 1, 2], 2).unwrap().holds);
    }
}
