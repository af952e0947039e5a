//! Switching at a special cell `D`, cospectrality certificates and
//! families of cospectral pairs grown by vertex coronas.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::corona::vertex_corona;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::limits::{MAX_CHARPOLY_ORDER, MAX_ISO_VERTICES};
use crate::rational::{self, Rational};
use crate::spectra::{adjacency_eigenvalues, charpoly_exact, max_deviation};

/// Cells `V_1..V_k` of even size and the special cell `D` of size `m - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwitchingPartition {
    pub cells: Vec<Vec<usize>>,
    pub d: Vec<usize>,
}

impl SwitchingPartition {
    /// Validates shape against `h`: disjoint cells covering every vertex,
    /// nonempty even cells and `|D| = m - 1`.
    pub fn new(h: &Hypergraph, m: usize, cells: Vec<Vec<usize>>, d: Vec<usize>) -> Result<Self> {
        let bad = |msg: String| Err(Error::MalformedPartition(msg));
        if m < 2 || d.len() != m - 1 {
            return bad(format!("D has {} vertices, expected m - 1 = {}", d.len(), m.saturating_sub(1)));
        }
        let mut seen = vec![false; h.n() + 1];
        let mut norm = |set: &[usize]| -> Result<Vec<usize>> {
            let mut s = set.to_vec();
            s.sort_unstable();
            for &v in &s {
                if v == 0 || v > h.n() {
                    return Err(Error::MalformedPartition(format!("vertex {v} outside 1..={}", h.n())));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::MalformedPartition(format!("vertex {v} appears twice")));
                }
            }
            Ok(s)
        };
        let d = norm(&d)?;
        let mut out = Vec::with_capacity(cells.len());
        for c in &cells {
            if c.is_empty() || c.len() % 2 == 1 {
                return bad(format!("cell {c:?} must have positive even size"));
            }
            out.push(norm(c)?);
        }
        if let Some(v) = (1..=h.n()).find(|&v| !seen[v]) {
            return bad(format!("vertex {v} is not covered"));
        }
        Ok(Self { cells: out, d })
    }
}

/// Outcome of checking the two switching conditions.
#[derive(Clone, Debug, Serialize)]
pub struct SwitchCheck {
    pub valid: bool,
    /// First violated condition (1 or 2) with a witness, when invalid.
    pub violation: Option<String>,
    /// `|N(D) n V_p|` per cell.
    pub neighbours_per_cell: Vec<usize>,
}

fn require_switchable(h: &Hypergraph, m: usize) -> Result<()> {
    if !h.is_unweighted() {
        return Err(Error::NotSwitchable("switching needs an unweighted hypergraph".into()));
    }
    if !h.fits_arity(m) {
        return Err(Error::NotSwitchable(format!("hypergraph is not {m}-uniform")));
    }
    Ok(())
}

/// `N(D)`: vertices `v` with `D u {v}` an edge.
fn neighbourhood(h: &Hypergraph, d: &[usize]) -> BTreeSet<usize> {
    h.edges()
        .iter()
        .filter(|e| d.iter().all(|&u| e.contains(u)) && e.len() == d.len() + 1)
        .flat_map(|e| e.vertices().iter().copied().filter(|v| !d.contains(v)))
        .collect()
}

/// Checks the row-sum condition between cells and the `D` incidence
/// condition, exactly.
pub fn check_switching_partition(h: &Hypergraph, m: usize, rho: &SwitchingPartition) -> Result<SwitchCheck> {
    require_switchable(h, m)?;
    let a = h.adjacency_matrix()?;
    let k = rho.cells.len();
    let nd = neighbourhood(h, &rho.d);
    let counts: Vec<usize> = rho.cells.iter().map(|c| c.iter().filter(|v| nd.contains(v)).count()).collect();
    let fail = |msg: String| {
        Ok(SwitchCheck {
            valid: false,
            violation: Some(msg),
            neighbours_per_cell: counts.clone(),
        })
    };
    let mut sums = vec![vec![rational::zero(); k]; k];
    for p in 0..k {
        for q in 0..k {
            let row_sum = |i: usize| -> Rational { rho.cells[q].iter().map(|&j| a.get(i - 1, j - 1)).sum() };
            let first = row_sum(rho.cells[p][0]);
            for &i in &rho.cells[p][1..] {
                let s = row_sum(i);
                if s != first {
                    return fail(format!(
                        "condition 1: vertices {} and {i} of cell {} have row sums {} and {} into cell {}",
                        rho.cells[p][0],
                        p + 1,
                        rational::format_rational(&first),
                        rational::format_rational(&s),
                        q + 1
                    ));
                }
            }
            sums[p][q] = first;
        }
    }
    for p in 0..k {
        for q in p + 1..k {
            if sums[p][q] != sums[q][p] {
                return fail(format!("condition 1: cell sums B'_{}{} != B'_{}{}", p + 1, q + 1, q + 1, p + 1));
            }
        }
    }
    for e in h.edges() {
        let meet = rho.d.iter().filter(|&&u| e.contains(u)).count();
        if meet != 0 && meet != m - 1 {
            return fail(format!("condition 2: edge {:?} meets D in {meet} vertices", e.vertices()));
        }
    }
    for (p, (&cnt, cell)) in counts.iter().zip(&rho.cells).enumerate() {
        let t = cell.len() / 2;
        if cnt != 0 && cnt != t && cnt != 2 * t {
            return fail(format!("condition 2: |N(D) n V_{}| = {cnt}, expected 0, {t} or {}", p + 1, 2 * t));
        }
    }
    Ok(SwitchCheck {
        valid: true,
        violation: None,
        neighbours_per_cell: counts,
    })
}

/// Exchanges `D u {v}` edges inside every cell that `D` sees half of.
pub fn gm_switch(h: &Hypergraph, m: usize, rho: &SwitchingPartition) -> Result<Hypergraph> {
    let check = check_switching_partition(h, m, rho)?;
    if let Some(v) = check.violation {
        return Err(Error::NotSwitchable(v));
    }
    let nd = neighbourhood(h, &rho.d);
    let with_d = |v: usize| {
        let mut e = rho.d.clone();
        e.push(v);
        e.sort_unstable();
        e
    };
    let mut remove = BTreeSet::new();
    let mut add = Vec::new();
    for (cell, &cnt) in rho.cells.iter().zip(&check.neighbours_per_cell) {
        if cnt * 2 != cell.len() {
            continue;
        }
        for &v in cell {
            if nd.contains(&v) {
                remove.insert(with_d(v));
            } else {
                add.push(with_d(v));
            }
        }
    }
    let edges = h
        .edges()
        .iter()
        .map(|e| e.vertices().to_vec())
        .filter(|e| !remove.contains(e))
        .chain(add);
    let mut out = Hypergraph::unweighted(h.n(), edges)?;
    if let Some(r) = h.declared_rank() {
        out = out.with_declared_rank(r);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CospectralMode {
    Exact,
    Numeric,
    /// Exact up to the characteristic polynomial size guard, numeric above.
    Auto,
}

/// Tolerance for numeric cospectrality.
pub const NUMERIC_COSPECTRAL_TOL: f64 = 1e-8;

#[derive(Clone, Debug, Serialize)]
pub struct CospectralCheck {
    pub cospectral: bool,
    pub mode: CospectralMode,
    /// Largest eigenvalue difference (numeric mode only).
    pub max_deviation: Option<f64>,
}

pub fn are_cospectral(h1: &Hypergraph, h2: &Hypergraph, mode: CospectralMode) -> Result<CospectralCheck> {
    if h1.n() != h2.n() {
        return Err(Error::SizeMismatch(h1.n(), h2.n()));
    }
    let mode = match mode {
        CospectralMode::Auto if h1.n() <= MAX_CHARPOLY_ORDER => CospectralMode::Exact,
        CospectralMode::Auto => CospectralMode::Numeric,
        other => other,
    };
    if mode == CospectralMode::Exact {
        let f = charpoly_exact(&h1.adjacency_matrix()?)?;
        let g = charpoly_exact(&h2.adjacency_matrix()?)?;
        return Ok(CospectralCheck {
            cospectral: f == g,
            mode,
            max_deviation: None,
        });
    }
    let dev = max_deviation(&adjacency_eigenvalues(h1)?, &adjacency_eigenvalues(h2)?).unwrap_or(f64::INFINITY);
    Ok(CospectralCheck {
        cospectral: dev <= NUMERIC_COSPECTRAL_TOL,
        mode,
        max_deviation: Some(dev),
    })
}

/// A certified pair with its isomorphism status.
#[derive(Clone, Debug, Serialize)]
pub struct CospectralPair {
    pub h: Hypergraph,
    pub g: Hypergraph,
    pub depth: usize,
    pub certificate: CospectralCheck,
    /// `None` when the order is above the isomorphism search guard.
    pub isomorphic: Option<bool>,
    pub status: PairStatus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairStatus {
    NonIsomorphic,
    Isomorphic,
    CospectralOnly,
}

fn certify(h: Hypergraph, g: Hypergraph, depth: usize, mode: CospectralMode) -> Result<CospectralPair> {
    let certificate = are_cospectral(&h, &g, mode)?;
    if !certificate.cospectral {
        return Err(Error::HypothesisViolated(format!("pair at depth {depth} is not cospectral")));
    }
    let isomorphic = if h.n() <= MAX_ISO_VERTICES {
        Some(h.is_isomorphic(&g)?)
    } else {
        None
    };
    let status = match isomorphic {
        Some(true) => PairStatus::Isomorphic,
        Some(false) => PairStatus::NonIsomorphic,
        None => PairStatus::CospectralOnly,
    };
    Ok(CospectralPair {
        h,
        g,
        depth,
        certificate,
        isomorphic,
        status,
    })
}

/// `(H, H_rho)` on `V_1 u D`: `H_1` plus `D u {v}` for `v` in `V_2`, and
/// `H_1` plus `D u {v}` for `v` outside `V_2`. `D` is `m - 1` fresh
/// vertices after those of `H_1`.
pub fn build_switch_seed(h1: &Hypergraph, v2: &[usize], m: usize) -> Result<CospectralPair> {
    if h1.regularity().is_none() {
        return Err(Error::NotRegular("seed hypergraph".into()));
    }
    if !h1.fits_arity(m) || m < 2 {
        return Err(Error::ArityError(format!("seed hypergraph is not {m}-uniform")));
    }
    let n1 = h1.n();
    let v2: BTreeSet<usize> = v2.iter().copied().collect();
    if n1 % 2 == 1 || v2.len() * 2 != n1 || v2.iter().any(|&v| v == 0 || v > n1) {
        return Err(Error::BadSubsetSize(format!(
            "need {} distinct vertices of 1..={n1}, got {v2:?}",
            n1 / 2
        )));
    }
    let d: Vec<usize> = (n1 + 1..n1 + m).collect();
    let base = || h1.edges().iter().map(|e| (e.vertices().to_vec(), e.weight().clone()));
    let with_d = |v: usize| {
        let mut e = vec![v];
        e.extend(&d);
        (e, rational::one())
    };
    let n = n1 + m - 1;
    let h = Hypergraph::new(n, base().chain(v2.iter().map(|&v| with_d(v))))?.with_declared_rank(m);
    let g = Hypergraph::new(n, base().chain((1..=n1).filter(|v| !v2.contains(v)).map(with_d)))?.with_declared_rank(m);
    certify(h, g, 0, CospectralMode::Exact)
}

/// The hypergraphs of the worked switching example on eight vertices.
pub fn example_pair() -> (Hypergraph, Hypergraph) {
    let common = [[1, 2, 3], [3, 4, 5], [5, 6, 1], [2, 4, 6]];
    let h = common.iter().chain(&[[7, 8, 3], [7, 8, 4], [7, 8, 5]]).map(|e| e.to_vec());
    let g = common.iter().chain(&[[7, 8, 1], [7, 8, 2], [7, 8, 6]]).map(|e| e.to_vec());
    (
        Hypergraph::unweighted(8, h).expect("valid edges").with_declared_rank(3),
        Hypergraph::unweighted(8, g).expect("valid edges").with_declared_rank(3),
    )
}

/// Repeatedly attaches a copy of `h_att` to every vertex of both sides
/// (vertex corona with cells of size one). Depth 0 returns the input pair.
pub fn corona_cospectral_family(
    h0: &Hypergraph,
    g0: &Hypergraph,
    h_att: &Hypergraph,
    m: usize,
    depth: usize,
) -> Result<Vec<CospectralPair>> {
    if h_att.regularity().is_none() {
        return Err(Error::HypothesisViolated("attached hypergraph is not regular".into()));
    }
    let mut out = vec![certify(h0.clone(), g0.clone(), 0, CospectralMode::Auto)
        .map_err(|_| Error::HypothesisViolated("input pair is not cospectral".into()))?];
    let (mut h, mut g) = (h0.clone(), g0.clone());
    for level in 1..=depth {
        let n = h.n();
        let members = vec![h_att.clone(); n];
        h = vertex_corona(&h, n, 1, &members, m)?;
        g = vertex_corona(&g, n, 1, &members, m)?;
        out.push(certify(h.clone(), g.clone(), level, CospectralMode::Auto)?);
    }
    Ok(out)
}
