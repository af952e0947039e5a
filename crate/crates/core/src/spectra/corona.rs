//! Predicted spectra of vertex and edge coronas from their constants.

use serde::Serialize;

use crate::corona::{CoronaConstants, CoronaKind};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::matrix::RealMatrix;
use crate::rational::{self, Rational};
use crate::spectra::poly::poly_determinant;
use crate::spectra::{eigenvalues, RationalPoly, SpectrumReport, SpectrumSource, GROUP_TOL};

/// Which closed form produced a corona spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoronaBranch {
    /// One vertex per cell.
    SingleVertexCells,
    /// One cell and a regular base.
    SingleCell,
    /// Eigenvalues of the `2n x 2n` matrix left after removing copy modes.
    Reduced,
    /// Regular base with at least as many edges as vertices.
    RegularBase,
    /// Exact characteristic polynomial of the reduced system.
    Polynomial,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoronaSpectrum {
    pub report: SpectrumReport,
    pub branch: CoronaBranch,
    /// Valency of the attached hypergraphs plus `(n1 - 1) c`.
    pub copy_constant: f64,
    /// Characteristic polynomial of the reduced system on the polynomial branch.
    pub polynomial: Option<RationalPoly>,
}

fn common_regular(members: &[Hypergraph]) -> Result<(usize, Rational)> {
    let first = members
        .first()
        .ok_or_else(|| Error::HypothesisViolated("no attached hypergraphs".into()))?;
    let n1 = first.n();
    let r1 = first
        .regularity()
        .ok_or_else(|| Error::HypothesisViolated("attached hypergraph 1 is not regular".into()))?;
    for (i, h) in members.iter().enumerate() {
        if h.n() != n1 || h.regularity().as_ref() != Some(&r1) {
            return Err(Error::HypothesisViolated(format!(
                "attached hypergraph {} differs in order or valency from the first",
                i + 1
            )));
        }
    }
    Ok((n1, r1))
}

/// All eigenvalues of a regular hypergraph except one copy of its valency.
fn non_perron(h: &Hypergraph, r: f64) -> Result<Vec<f64>> {
    let mut vals = eigenvalues(&h.adjacency_matrix()?.to_real())?;
    if let Some(i) = vals
        .iter()
        .enumerate()
        .min_by(|a, b| (a.1 - r).abs().total_cmp(&(b.1 - r).abs()))
        .map(|(i, _)| i)
    {
        vals.remove(i);
    }
    Ok(vals)
}

fn quadratic_pair(sum: f64, diff: f64, cross: f64) -> [f64; 2] {
    let root = (diff * diff + cross).sqrt();
    [(sum + root) / 2.0, (sum - root) / 2.0]
}

fn check_kind(k: &CoronaConstants, want: CoronaKind) -> Result<()> {
    if k.kind == want {
        Ok(())
    } else {
        Err(Error::HypothesisViolated(format!("expected {want:?} corona constants")))
    }
}

/// Spectrum of `vertex_corona(h0, k, p, members)`: `lambda - c` for every
/// non-Perron member eigenvalue on each copy, plus the closed form for
/// `p = 1` or `k = 1` with a regular base, else the reduced matrix.
pub fn vertex_corona_spectrum(
    h0: &Hypergraph,
    k: usize,
    p: usize,
    members: &[Hypergraph],
    constants: &CoronaConstants,
) -> Result<CoronaSpectrum> {
    check_kind(constants, CoronaKind::Vertex)?;
    let n = h0.n();
    if k * p != n || members.len() != k {
        return Err(Error::PartitionMismatch(format!("{k} cells of size {p} for {n} base vertices")));
    }
    let (n1, r1) = common_regular(members)?;
    let (a, b, c) = (
        rational::to_f64(&constants.a),
        rational::to_f64(&constants.b),
        rational::to_f64(&constants.c),
    );
    let big_r = rational::to_f64(&r1) + (n1 as f64 - 1.0) * c;
    let mut values = Vec::with_capacity(n * (n1 + 1));
    for h in members {
        let lam = non_perron(h, rational::to_f64(&r1))?;
        for _ in 0..p {
            values.extend(lam.iter().map(|l| l - c));
        }
    }
    let mu = eigenvalues(&h0.adjacency_matrix()?.to_real())?;
    let cross = 4.0 * b * b * n1 as f64;
    let branch = if p == 1 {
        for &m in &mu {
            values.extend(quadratic_pair(big_r + m, big_r - m, cross));
        }
        CoronaBranch::SingleVertexCells
    } else if let (1, Some(r0)) = (k, h0.regularity()) {
        let r0 = rational::to_f64(&r0);
        values.extend(std::iter::repeat_n(big_r, n - 1));
        values.extend(non_perron(h0, r0)?.into_iter().map(|x| x - a));
        let top = r0 + (n as f64 - 1.0) * a;
        let nf = n as f64;
        values.extend(quadratic_pair(big_r + top, big_r - top, cross * nf * nf));
        CoronaBranch::SingleCell
    } else {
        let a0 = h0.adjacency_matrix()?.to_real();
        let mut m = RealMatrix::zeros(2 * n);
        let coupling = b * (n1 as f64).sqrt();
        for i in 0..n {
            for j in 0..n {
                let same = i / p == j / p;
                let mut v = a0.get(i, j);
                if same && i != j {
                    v += a;
                }
                m.set(i, j, v);
                if same {
                    m.set(i, n + j, coupling);
                    m.set(n + j, i, coupling);
                }
            }
            m.set(n + i, n + i, big_r);
        }
        values.extend(eigenvalues(&m)?);
        CoronaBranch::Reduced
    };
    Ok(CoronaSpectrum {
        report: SpectrumReport::from_values(&values, SpectrumSource::ClosedForm, GROUP_TOL),
        branch,
        copy_constant: big_r,
        polynomial: None,
    })
}

/// Characteristic polynomial of the edge corona restricted to vectors
/// constant on every copy:
/// `det((x - R)(x I - A_0 - alpha K) - b^2 n1 (K + D)) (x - R)^(k - n)`,
/// with `K` the codegree matrix, `D` the degree matrix and `alpha` the
/// per shared edge increment.
pub fn edge_corona_reduced_charpoly(h0: &Hypergraph, n1: usize, r1: &Rational, constants: &CoronaConstants, m: usize) -> Result<RationalPoly> {
    check_kind(constants, CoronaKind::Edge)?;
    let n = h0.n();
    let k = h0.edge_count();
    let a0 = h0.adjacency_matrix()?;
    let alpha = constants.edge_increment(m);
    let big_r = r1 + rational::int(n1 as i64 - 1) * &constants.c;
    let bb = &constants.b * &constants.b * rational::int(n1 as i64);
    let x_minus_r = RationalPoly::linear_root(big_r.clone());
    let mut rows = vec![vec![RationalPoly::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let (kij, dij) = if i == j {
                (rational::zero(), rational::int(h0.degree(i + 1) as i64))
            } else {
                (rational::int(h0.codegree(i + 1, j + 1)? as i64), rational::zero())
            };
            // (x - R)(x delta_ij - A0_ij - alpha K_ij) - bb (K_ij + D_ij)
            let mut inner = RationalPoly::constant(-(a0.get(i, j) + &alpha * &kij));
            if i == j {
                inner = &inner + &RationalPoly::x();
            }
            let entry = &(&x_minus_r * &inner) - &RationalPoly::constant(&bb * (kij + dij));
            rows[i][j] = entry;
        }
    }
    let det = poly_determinant(rows)?;
    if k >= n {
        Ok(&det * &x_minus_r.pow(k - n))
    } else {
        det.exact_div(&x_minus_r.pow(n - k))
    }
}

/// Spectrum of `edge_corona(h0, members)`: `lambda - c` for every
/// non-Perron member eigenvalue, plus either the closed form for an
/// unweighted `m`-uniform regular base with `k >= n`, or the roots of the
/// reduced characteristic polynomial.
pub fn edge_corona_spectrum(h0: &Hypergraph, members: &[Hypergraph], constants: &CoronaConstants, m: usize) -> Result<CoronaSpectrum> {
    check_kind(constants, CoronaKind::Edge)?;
    let n = h0.n();
    let k = h0.edge_count();
    if members.len() != k {
        return Err(Error::CountMismatch(format!("{} members for {k} base edges", members.len())));
    }
    let (n1, r1) = common_regular(members)?;
    let (a, b, c) = (
        rational::to_f64(&constants.a),
        rational::to_f64(&constants.b),
        rational::to_f64(&constants.c),
    );
    let big_r = rational::to_f64(&r1) + (n1 as f64 - 1.0) * c;
    let mut values = Vec::with_capacity(n + k * n1);
    for h in members {
        values.extend(non_perron(h, rational::to_f64(&r1))?.into_iter().map(|l| l - c));
    }
    let closed = h0.is_unweighted() && h0.uniformity() == Some(m) && k >= n;
    let regular = h0.regularity();
    let (branch, polynomial) = match (closed, regular) {
        (true, Some(r)) => {
            let r = rational::to_f64(&r);
            values.extend(std::iter::repeat_n(big_r, k - n));
            let cross = 4.0 * b * b * n1 as f64;
            for mu in eigenvalues(&h0.adjacency_matrix()?.to_real())? {
                let t = (a + 1.0) * mu;
                values.extend(quadratic_pair(big_r + t, big_r - t, cross * ((m as f64 - 1.0) * mu + r)));
            }
            (CoronaBranch::RegularBase, None)
        }
        _ => {
            let poly = edge_corona_reduced_charpoly(h0, n1, &r1, constants, m)?;
            values.extend(poly.real_roots()?);
            (CoronaBranch::Polynomial, Some(poly))
        }
    };
    Ok(CoronaSpectrum {
        report: SpectrumReport::from_values(&values, SpectrumSource::ClosedForm, GROUP_TOL),
        branch,
        copy_constant: big_r,
        polynomial,
    })
}

/// Exact characteristic polynomial of an edge corona assembled from its
/// parts: the reduced polynomial times `(x - lambda + c)` over every
/// non-Perron member eigenvalue, the latter taken from exact charpolys.
pub fn edge_corona_charpoly(h0: &Hypergraph, members: &[Hypergraph], constants: &CoronaConstants, m: usize) -> Result<RationalPoly> {
    let (n1, r1) = common_regular(members)?;
    let mut out = edge_corona_reduced_charpoly(h0, n1, &r1, constants, m)?;
    for h in members {
        let f = crate::spectra::charpoly_exact(&h.adjacency_matrix()?)?;
        let g = f.exact_div(&RationalPoly::linear_root(r1.clone()))?;
        out = &out * &shift_roots(&g, &constants.c);
    }
    Ok(out)
}

/// `g(x + c)`: the polynomial whose roots are those of `g` minus `c`.
fn shift_roots(g: &RationalPoly, c: &Rational) -> RationalPoly {
    let step = &RationalPoly::x() + &RationalPoly::constant(c.clone());
    let mut out = RationalPoly::zero();
    for coeff in g.coeffs().iter().rev() {
        out = &(&out * &step) + &RationalPoly::constant(coeff.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corona::{corona_constants_oracle, edge_corona, extract_edge_constants, vertex_corona, CoronaGeometry};
    use crate::generators::{complete_multipartite, complete_uniform, cycle_graph, empty_uniform, loose_cycle, loose_path, PartiteMode};
    use crate::rational::int;
    use crate::spectra::{adjacency_eigenvalues, charpoly_exact, loose_cycle_spectrum, max_deviation};

    fn vconst(m: usize, n: usize, n1: usize, p: usize) -> CoronaConstants {
        corona_constants_oracle(CoronaKind::Vertex, CoronaGeometry::vertex(m, n, n1, p)).unwrap()
    }

    fn econst(m: usize, n: usize, n1: usize) -> CoronaConstants {
        corona_constants_oracle(CoronaKind::Edge, CoronaGeometry::edge(m, n, n1)).unwrap()
    }

    fn assert_vertex(h0: &Hypergraph, k: usize, p: usize, members: &[Hypergraph], m: usize, want: CoronaBranch) {
        let h = vertex_corona(h0, k, p, members, m).unwrap();
        let s = vertex_corona_spectrum(h0, k, p, members, &vconst(m, h0.n(), members[0].n(), p)).unwrap();
        assert_eq!(s.branch, want);
        let dev = max_deviation(&s.report.flat(), &adjacency_eigenvalues(&h).unwrap()).unwrap();
        assert!(dev < 1e-8, "deviation {dev}");
    }

    #[test]
    fn vertex_single_cells() {
        let h0 = complete_multipartite(3, &[1, 1, 1], PartiteMode::Weak).unwrap();
        assert_vertex(&h0, 3, 1, &vec![empty_uniform(3, 1); 3], 3, CoronaBranch::SingleVertexCells);
        let k4 = complete_uniform(3, 4, int(1)).unwrap();
        assert_vertex(&h0, 3, 1, &vec![k4; 3], 3, CoronaBranch::SingleVertexCells);
    }

    #[test]
    fn vertex_single_cell() {
        let k4 = complete_uniform(3, 4, int(1)).unwrap();
        assert_vertex(&k4, 1, 4, &[empty_uniform(3, 1)], 3, CoronaBranch::SingleCell);
        assert_vertex(&k4, 1, 4, &[empty_uniform(3, 2)], 3, CoronaBranch::SingleCell);
        let k3 = complete_uniform(3, 3, int(1)).unwrap();
        assert_vertex(&k3, 1, 3, std::slice::from_ref(&k3), 3, CoronaBranch::SingleCell);
    }

    #[test]
    fn vertex_reduced() {
        let h0 = loose_path(3, 1, 2).unwrap();
        // five base vertices cannot be cut into cells of two, so use six
        let h0b = loose_cycle(3, 1, 3).unwrap();
        assert_vertex(&h0b, 3, 2, &vec![empty_uniform(3, 2); 3], 3, CoronaBranch::Reduced);
        assert_vertex(&h0, 5, 1, &vec![empty_uniform(3, 2); 5], 3, CoronaBranch::SingleVertexCells);
    }

    #[test]
    fn vertex_non_regular_members_rejected() {
        let h0 = complete_uniform(3, 3, int(1)).unwrap();
        let members = vec![loose_path(3, 1, 2).unwrap(); 3];
        assert!(matches!(
            vertex_corona_spectrum(&h0, 3, 1, &members, &vconst(3, 3, 5, 1)),
            Err(Error::HypothesisViolated(_))
        ));
    }

    fn assert_edge(h0: &Hypergraph, members: &[Hypergraph], m: usize, want: CoronaBranch) {
        let h = edge_corona(h0, members, m).unwrap();
        let k = extract_edge_constants(&h, h0, members, m).unwrap();
        let s = edge_corona_spectrum(h0, members, &k, m).unwrap();
        assert_eq!(s.branch, want);
        let dev = max_deviation(&s.report.flat(), &adjacency_eigenvalues(&h).unwrap()).unwrap();
        assert!(dev < 1e-8, "deviation {dev}");
    }

    #[test]
    fn edge_regular_base() {
        let k4 = complete_uniform(3, 4, int(1)).unwrap();
        assert_edge(&k4, &vec![empty_uniform(3, 2); 4], 3, CoronaBranch::RegularBase);
        let k3 = complete_uniform(3, 3, int(1)).unwrap();
        assert_edge(&k4, &vec![k3; 4], 3, CoronaBranch::RegularBase);
        assert_edge(&cycle_graph(5).unwrap(), &vec![empty_uniform(2, 1); 5], 2, CoronaBranch::RegularBase);
    }

    #[test]
    fn edge_polynomial_branch() {
        // fewer edges than vertices
        assert_edge(&complete_uniform(3, 3, int(1)).unwrap(), &[empty_uniform(3, 2)], 3, CoronaBranch::Polynomial);
        // irregular base
        assert_edge(&loose_path(3, 1, 3).unwrap(), &vec![empty_uniform(3, 2); 3], 3, CoronaBranch::Polynomial);
    }

    #[test]
    fn polynomial_agrees_with_closed_form() {
        let k4 = complete_uniform(3, 4, int(1)).unwrap();
        let members = vec![empty_uniform(3, 2); 4];
        let k = econst(3, 4, 2);
        let closed = edge_corona_spectrum(&k4, &members, &k, 3).unwrap();
        let poly = edge_corona_reduced_charpoly(&k4, 2, &int(0), &k, 3).unwrap();
        let mut vals = poly.real_roots().unwrap();
        vals.extend(std::iter::repeat_n(-rational::to_f64(&k.c), 4));
        let want = SpectrumReport::from_values(&vals, SpectrumSource::ExactRoots, GROUP_TOL);
        assert!(max_deviation(&closed.report.flat(), &want.flat()).unwrap() < 1e-8);
    }

    #[test]
    fn exact_charpoly_matches() {
        let k4 = complete_uniform(3, 4, int(1)).unwrap();
        let members = vec![complete_uniform(3, 3, int(1)).unwrap(); 4];
        let h = edge_corona(&k4, &members, 3).unwrap();
        let k = extract_edge_constants(&h, &k4, &members, 3).unwrap();
        let f = edge_corona_charpoly(&k4, &members, &k, 3).unwrap();
        assert_eq!(f.monic(), charpoly_exact(&h.adjacency_matrix().unwrap()).unwrap());
    }

    #[test]
    fn s1_loose_cycle_by_edge_corona() {
        for (m, n) in [(3, 3), (4, 4), (5, 5), (3, 6)] {
            let base = Hypergraph::new(n, (1..=n).map(|i| (vec![i, i % n + 1], int(0)))).unwrap();
            let members = vec![empty_uniform(m, m - 2); n];
            let k = corona_constants_oracle(
                CoronaKind::Edge,
                CoronaGeometry { base_arity: 2, ..CoronaGeometry::edge(m, n, m - 2) },
            )
            .unwrap();
            let s = edge_corona_spectrum(&base, &members, &k, m).unwrap();
            let closed = loose_cycle_spectrum(m, 1, n).unwrap();
            assert!(max_deviation(&s.report.flat(), &closed.flat()).unwrap() < 1e-8);
            let direct = adjacency_eigenvalues(&loose_cycle(m, 1, n).unwrap()).unwrap();
            assert!(max_deviation(&s.report.flat(), &direct).unwrap() < 1e-8);
        }
    }
}
