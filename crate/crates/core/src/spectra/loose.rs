//! Closed-form spectra of s-loose cycles and s-loose paths.
//!
//! Both families reduce to a weighted graph `G` with `A_H = A_G / (m - 1)`.
//! Eigenvalues of `G` are reported here already divided by `m - 1`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectra::poly::RealPoly;
use crate::spectra::{SpectrumReport, SpectrumSource, GROUP_TOL};

fn check_regime(m: usize, s: usize) -> Result<()> {
    if s == 0 {
        return Err(Error::BadLooseness("s must be at least 1".into()));
    }
    if m < 2 * s {
        return Err(Error::UnsupportedRegime(format!(
            "no closed form for m = {m} < 2s = {}",
            2 * s
        )));
    }
    Ok(())
}

fn repeat(v: f64, k: usize) -> impl Iterator<Item = f64> {
    std::iter::repeat_n(v, k)
}

/// Full spectrum of the s-loose cycle with `n` edges.
pub fn loose_cycle_spectrum(m: usize, s: usize, n: usize) -> Result<SpectrumReport> {
    check_regime(m, s)?;
    if n < 2 || n * (m - s) <= m {
        return Err(Error::DegenerateCycle(format!(
            "cycle with m = {m}, s = {s}, n = {n} repeats an edge"
        )));
    }
    let (mf, sf) = (m as f64, s as f64);
    let mut values = Vec::with_capacity(n * (m - s));
    if m == 2 * s {
        let d = 2.0 * sf - 1.0;
        values.extend(repeat(-2.0 / d, n * (s - 1)));
        for i in 1..=n {
            let c = (2.0 * PI * i as f64 / n as f64).cos();
            values.push(2.0 / d * (sf - 1.0 + sf * c));
        }
    } else {
        let m1 = mf - 1.0;
        values.extend(repeat(-1.0 / m1, n * (m - 2 * s - 1)));
        values.extend(repeat(-2.0 / m1, n * (s - 1)));
        for i in 1..=n {
            let c = (2.0 * PI * i as f64 / n as f64).cos();
            let p = mf - 3.0 + 2.0 * sf * c;
            let disc = (p * p + 8.0 * (mf - sf - 1.0 + sf * c)).sqrt();
            values.push((p + disc) / 2.0 / m1);
            values.push((p - disc) / 2.0 / m1);
        }
    }
    Ok(SpectrumReport::from_values(&values, SpectrumSource::ClosedForm, GROUP_TOL))
}

#[derive(Clone, Debug, Serialize)]
pub struct LoosePathSpectrum {
    pub report: SpectrumReport,
    /// Eigenvalues given explicitly, with the multiplicity the construction
    /// guarantees.
    pub explicit: Vec<(f64, usize)>,
    /// Roots of the reduced polynomial, already scaled.
    pub polynomial_roots: Vec<f64>,
    /// The reduced polynomial in the unscaled variable.
    pub polynomial: RealPoly,
    /// `|remainder| / scale` of the division by the removable linear factor;
    /// zero when no division was needed.
    pub removable_residual: f64,
}

/// `prod_{i=1}^{count} q(cos(pi i / (count + 1)))`, with the convention that
/// a product over `-1` factors vanishes.
fn cos_product(count: isize, q: impl Fn(f64) -> RealPoly) -> RealPoly {
    if count < 0 {
        return RealPoly::default();
    }
    let mut p = RealPoly::one();
    for i in 1..=count {
        let c = (PI * i as f64 / (count + 1) as f64).cos();
        p = p.mul(&q(c));
    }
    p
}

/// Value of [`cos_product`] at `x`, evaluated factor by factor.
fn cos_product_at(count: isize, q: impl Fn(f64) -> f64) -> f64 {
    if count < 0 {
        return 0.0;
    }
    (1..=count).map(|i| q((PI * i as f64 / (count + 1) as f64).cos())).product()
}

/// Roots of `f` in `[-bound, bound]` located by sign changes on a grid that
/// is refined until exactly `expected` brackets appear, then bisected.
/// `None` when that count is never reached (e.g. a repeated root).
fn bracket_roots(f: impl Fn(f64) -> f64, expected: usize, bound: f64) -> Option<Vec<f64>> {
    let mut samples = 64 * expected.max(1);
    while samples <= 1 << 20 {
        let h = 2.0 * bound / samples as f64;
        let xs: Vec<f64> = (0..=samples).map(|i| -bound + h * i as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
        if ys.iter().any(|y| !y.is_finite()) {
            return None;
        }
        let mut brackets = Vec::new();
        for i in 0..samples {
            if ys[i] == 0.0 {
                brackets.push((xs[i], xs[i]));
            } else if ys[i] * ys[i + 1] < 0.0 {
                brackets.push((xs[i], xs[i + 1]));
            }
        }
        if brackets.len() == expected {
            return Some(
                brackets
                    .into_iter()
                    .map(|(mut a, mut b)| {
                        let fa = f(a);
                        while b - a > 4.0 * f64::EPSILON * (1.0 + a.abs()) {
                            let mid = 0.5 * (a + b);
                            let fm = f(mid);
                            if fm == 0.0 {
                                return mid;
                            }
                            if (fm < 0.0) == (fa < 0.0) {
                                a = mid;
                            } else {
                                b = mid;
                            }
                        }
                        0.5 * (a + b)
                    })
                    .collect(),
            );
        }
        samples *= 2;
    }
    None
}

/// Full spectrum of the s-loose path with `n` edges.
pub fn loose_path_spectrum(m: usize, s: usize, n: usize) -> Result<LoosePathSpectrum> {
    check_regime(m, s)?;
    if n == 0 {
        return Err(Error::TooSmall("a path needs at least one edge".into()));
    }
    let (mf, sf) = (m as f64, s as f64);
    let m1 = mf - 1.0;
    if n == 1 {
        let values: Vec<f64> = std::iter::once(1.0).chain(repeat(-1.0 / m1, m - 1)).collect();
        return Ok(LoosePathSpectrum {
            report: SpectrumReport::from_values(&values, SpectrumSource::ClosedForm, GROUP_TOL),
            explicit: vec![(1.0, 1), (-1.0 / m1, m - 1)],
            polynomial_roots: Vec::new(),
            polynomial: RealPoly::default(),
            removable_residual: 0.0,
        });
    }
    let ni = n as isize;
    let s2 = sf * sf;
    // The expanded polynomial has degree about 3n; its power-basis
    // coefficients lose clustered roots for large n, so roots are bracketed
    // on the factored form and the expansion is kept only for reporting and
    // as a fallback.
    let (explicit, polynomial, roots, removable_residual, scale) = if m > 2 * s {
        let qc = |c: f64| (-2.0 * (mf - sf - 1.0 + sf * c), -(mf - 3.0 + 2.0 * sf * c));
        let quad = |c: f64| {
            let (a, b) = qc(c);
            RealPoly::quadratic(a, b, 1.0)
        };
        let f: Vec<RealPoly> = (1..=3).map(|j| cos_product(ni - j, quad)).collect();
        let mm = RealPoly::linear(mf - sf - 1.0, -1.0);
        let one_x = RealPoly::linear(1.0, 1.0);
        let numerator = mm
            .mul(&mm)
            .mul(&f[0])
            .add(&one_x.mul(&mm).mul(&f[1]).scale(2.0 * s2))
            .add(&one_x.mul(&one_x).mul(&f[2]).scale(s2 * s2));
        let terms = |x: f64| {
            let fx: Vec<f64> = (1..=3)
                .map(|j| {
                    cos_product_at(ni - j, |c| {
                        let (a, b) = qc(c);
                        a + x * (b + x)
                    })
                })
                .collect();
            let (mmx, ox) = (mf - sf - 1.0 - x, 1.0 + x);
            [mmx * mmx * fx[0], 2.0 * s2 * ox * mmx * fx[1], s2 * s2 * ox * ox * fx[2]]
        };
        let x0 = mf - 2.0 * sf - 1.0;
        let t0 = terms(x0);
        let residual = t0.iter().sum::<f64>().abs() / t0.iter().map(|t| t.abs()).sum::<f64>().max(f64::MIN_POSITIVE);
        let (q, _) = numerator.deflate(x0);
        let bracketed = numerator.degree().and_then(|d| {
            let mut r = bracket_roots(|x| terms(x).iter().sum(), d, numerator.fujiwara_bound() * 1.01 + 1e-6)?;
            let i = (0..r.len()).min_by(|&a, &b| (r[a] - x0).abs().total_cmp(&(r[b] - x0).abs()))?;
            ((r[i] - x0).abs() <= 1e-8 * (1.0 + x0.abs())).then(|| {
                r.remove(i);
                r
            })
        });
        let explicit = vec![
            (-1.0 / m1, n * (m - 1) - 2 * s * (n - 1)),
            (-2.0 / m1, (n - 1) * (s - 1)),
        ];
        // dividing by (x0 - x) flips the sign of the quotient
        (explicit, q.scale(-1.0), bracketed, residual, m1)
    } else {
        let lc = |c: f64| 2.0 * sf - 2.0 + 2.0 * sf * c;
        let lin = |c: f64| RealPoly::linear(lc(c), -1.0);
        let t: Vec<RealPoly> = (1..=3).map(|j| cos_product(ni - j, lin)).collect();
        let xs = RealPoly::linear(1.0 - sf, 1.0);
        let poly = xs
            .mul(&xs)
            .mul(&t[0])
            .add(&xs.mul(&t[1]).scale(2.0 * s2))
            .add(&t[2].scale(s2 * s2));
        let eval = |x: f64| {
            let tx: Vec<f64> = (1..=3).map(|j| cos_product_at(ni - j, |c| lc(c) - x)).collect();
            let xsx = 1.0 - sf + x;
            xsx * xsx * tx[0] + 2.0 * s2 * xsx * tx[1] + s2 * s2 * tx[2]
        };
        let bracketed = poly.degree().and_then(|d| bracket_roots(eval, d, poly.fujiwara_bound() * 1.01 + 1e-6));
        let explicit = vec![(-1.0 / m1, 2 * (s - 1)), (-2.0 / m1, (n - 1) * (s - 1))];
        (explicit, poly, bracketed, 0.0, 2.0 * sf - 1.0)
    };
    if removable_residual > 1e-9 {
        return Err(Error::HypothesisViolated(format!(
            "linear factor does not divide the path polynomial (relative remainder {removable_residual:e})"
        )));
    }
    let roots = match roots {
        Some(r) => r,
        None => polynomial.real_roots()?,
    };
    let polynomial_roots: Vec<f64> = roots.into_iter().map(|r| r / scale).collect();
    let mut values: Vec<f64> = explicit.iter().flat_map(|&(v, k)| repeat(v, k)).collect();
    values.extend(&polynomial_roots);
    Ok(LoosePathSpectrum {
        report: SpectrumReport::from_values(&values, SpectrumSource::ClosedForm, GROUP_TOL),
        explicit,
        polynomial_roots,
        polynomial,
        removable_residual,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GRoute {
    /// `g = g_1 + 2(m-2) g_2 + (m-2)^2 g_3` in the unscaled variable.
    pub g: RealPoly,
    /// Relative remainders of dividing `g` twice by `x + 1`.
    pub double_root_residual: f64,
    /// Full scaled spectrum: `-1` with multiplicity `n(m-3)` and the roots of
    /// `g / (m - 3 - x)`, all divided by `m - 1`.
    pub eigenvalues: Vec<f64>,
}

/// Spectrum of the loose path (s = 1) through its edge-corona description
/// `P_{n+1}` with `K_{m-2}` attached to every edge.
///
/// Uses `u = -1 - x` and `v = x(x - m + 3) - 2(m - 2)` in
/// `g_j = prod_{i=1}^{n-j+2} (2u cos(pi i / (n-j+3)) + v)`.
pub fn loose_path_g_route(m: usize, n: usize) -> Result<GRoute> {
    if m < 3 {
        return Err(Error::UnsupportedRegime("the edge-corona route needs m >= 3".into()));
    }
    if n == 0 {
        return Err(Error::TooSmall("a path needs at least one edge".into()));
    }
    let mf = m as f64;
    let term = |c: f64| {
        // 2(-1-x)c + x^2 - (m-3)x - 2(m-2)
        RealPoly::quadratic(-2.0 * c - 2.0 * (mf - 2.0), -2.0 * c - (mf - 3.0), 1.0)
    };
    let ni = n as isize;
    let g: Vec<RealPoly> = (1..=3).map(|j| cos_product(ni - j + 2, term)).collect();
    let k = mf - 2.0;
    let g = g[0].add(&g[1].scale(2.0 * k)).add(&g[2].scale(k * k));

    let (q1, r1) = g.deflate(-1.0);
    let (_, r2) = q1.deflate(-1.0);
    let double_root_residual = f64::max(
        r1.abs() / g.abs_eval(-1.0).max(f64::MIN_POSITIVE),
        r2.abs() / q1.abs_eval(-1.0).max(f64::MIN_POSITIVE),
    );

    let x0 = mf - 3.0;
    let (reduced, rem) = g.deflate(x0);
    let rem_rel = rem.abs() / g.abs_eval(x0).max(f64::MIN_POSITIVE);
    if rem_rel > 1e-9 {
        return Err(Error::HypothesisViolated(format!(
            "(m - 3 - x) does not divide g (relative remainder {rem_rel:e})"
        )));
    }
    let mut eigenvalues: Vec<f64> = repeat(-1.0, n * (m - 3)).collect();
    eigenvalues.extend(reduced.real_roots()?);
    let m1 = mf - 1.0;
    for v in &mut eigenvalues {
        *v /= m1;
    }
    eigenvalues.sort_by(f64::total_cmp);
    Ok(GRoute {
        g,
        double_root_residual,
        eigenvalues,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{loose_cycle, loose_path};
    use crate::spectra::{adjacency_eigenvalues, max_deviation};

    fn numeric_cycle(m: usize, s: usize, n: usize) -> Vec<f64> {
        adjacency_eigenvalues(&loose_cycle(m, s, n).unwrap()).unwrap()
    }

    fn numeric_path(m: usize, s: usize, n: usize) -> Vec<f64> {
        adjacency_eigenvalues(&loose_path(m, s, n).unwrap()).unwrap()
    }

    #[test]
    fn cycle_three_one_three() {
        let r = loose_cycle_spectrum(3, 1, 3).unwrap().flat();
        let s5 = 5f64.sqrt();
        let mut want = vec![(1.0 + s5) / 2.0, (1.0 - s5) / 2.0];
        want.extend([(-1.0 + s5) / 4.0; 2]);
        want.extend([(-1.0 - s5) / 4.0; 2]);
        assert!(max_deviation(&r, &want).unwrap() < 1e-12);
    }

    #[test]
    fn cycles_match_numeric() {
        for (m, s, n) in [(4, 2, 4), (4, 2, 3), (6, 3, 5), (3, 1, 3), (3, 1, 4), (4, 1, 5), (5, 2, 3), (5, 1, 2), (7, 2, 4), (3, 1, 2)] {
            let pred = loose_cycle_spectrum(m, s, n).unwrap().flat();
            let obs = numeric_cycle(m, s, n);
            let dev = max_deviation(&pred, &obs).unwrap();
            assert!(dev < 1e-8, "({m},{s},{n}) deviation {dev}");
        }
    }

    #[test]
    fn cycle_regimes() {
        assert!(matches!(loose_cycle_spectrum(3, 2, 3), Err(Error::UnsupportedRegime(_))));
        assert!(loose_cycle_spectrum(4, 2, 2).is_err());
    }

    #[test]
    fn paths_match_numeric() {
        for (m, s, n) in [(3, 1, 1), (3, 1, 2), (3, 1, 3), (4, 1, 3), (4, 2, 3), (4, 2, 2), (5, 2, 4), (6, 2, 3), (6, 3, 4), (5, 1, 5)] {
            let p = loose_path_spectrum(m, s, n).unwrap();
            let obs = numeric_path(m, s, n);
            let dev = max_deviation(&p.report.flat(), &obs).unwrap();
            assert!(dev < 1e-6, "({m},{s},{n}) deviation {dev}");
            if n >= 2 {
                let expected_roots = if m > 2 * s { 2 * n - 1 } else { n + 1 };
                assert_eq!(p.polynomial_roots.len(), expected_roots);
            }
        }
    }

    #[test]
    fn g_route_agrees_with_f_route() {
        for (m, n) in [(3, 2), (3, 3), (4, 3), (5, 4), (3, 1)] {
            let g = loose_path_g_route(m, n).unwrap();
            let f = loose_path_spectrum(m, 1, n).unwrap();
            assert!(max_deviation(&g.eigenvalues, &f.report.flat()).unwrap() < 1e-6);
            assert!(g.double_root_residual < 1e-8, "({m},{n}) {}", g.double_root_residual);
        }
    }

    #[test]
    fn long_paths_keep_real_roots() {
        for (m, s, n) in [(4, 1, 24), (3, 1, 20), (5, 2, 14), (4, 2, 16)] {
            let lp = loose_path_spectrum(m, s, n).unwrap();
            let dev = max_deviation(&lp.report.flat(), &numeric_path(m, s, n)).unwrap();
            assert!(dev < 1e-10, "({m},{s},{n}): {dev:e}");
        }
    }
}
