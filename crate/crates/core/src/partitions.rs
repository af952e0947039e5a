//! Equitable partitions, quotient matrices and automorphism orbits.
//!
//! All row sums are compared exactly.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::iso;
use crate::limits::{self, MAX_ORBIT_VERTICES};
use crate::matrix::RationalMatrix;
use crate::rational::{self, Rational};

/// Ordered disjoint cover of `1..=n` by nonempty cells. Cells are sorted
/// internally and ordered by their smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Partition {
    n: usize,
    cells: Vec<Vec<usize>>,
}

impl TryFrom<Vec<Vec<usize>>> for Partition {
    type Error = Error;
    fn try_from(cells: Vec<Vec<usize>>) -> Result<Self> {
        let n = cells.iter().map(Vec::len).sum();
        Partition::new(n, cells)
    }
}

impl From<Partition> for Vec<Vec<usize>> {
    fn from(p: Partition) -> Self {
        p.cells
    }
}

impl Partition {
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut out = Vec::with_capacity(cells.len());
        for mut c in cells {
            if c.is_empty() {
                return Err(Error::MalformedPartition("empty cell".into()));
            }
            c.sort_unstable();
            for &v in &c {
                if v == 0 || v > n {
                    return Err(Error::MalformedPartition(format!("vertex {v} outside 1..={n}")));
                }
                if seen[v] {
                    return Err(Error::MalformedPartition(format!("vertex {v} appears twice")));
                }
                seen[v] = true;
            }
            out.push(c);
        }
        if let Some(v) = (1..=n).find(|&v| !seen[v]) {
            return Err(Error::MalformedPartition(format!("vertex {v} is not covered")));
        }
        out.sort_by_key(|c| c[0]);
        Ok(Self { n, cells: out })
    }

    pub fn single_cell(n: usize) -> Self {
        Self {
            n,
            cells: vec![(1..=n).collect()],
        }
    }

    pub fn discrete(n: usize) -> Self {
        Self {
            n,
            cells: (1..=n).map(|v| vec![v]).collect(),
        }
    }

    /// Consecutive blocks of the given sizes.
    pub fn from_sizes(sizes: &[usize]) -> Result<Self> {
        let n = sizes.iter().sum();
        let mut start = 1;
        let cells = sizes
            .iter()
            .map(|&s| {
                let c: Vec<usize> = (start..start + s).collect();
                start += s;
                c
            })
            .collect();
        Self::new(n, cells)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Zero-based cell index of every vertex, indexed by `v - 1`.
    pub fn cell_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n];
        for (c, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                idx[v - 1] = c;
            }
        }
        idx
    }

    /// True when every cell of `self` lies inside a cell of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        let idx = other.cell_index();
        self.cells
            .iter()
            .all(|c| c.iter().all(|&v| idx[v - 1] == idx[c[0] - 1]))
    }
}

/// Two vertices of cell `p` whose row sums toward cell `q` differ.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub p: usize,
    pub q: usize,
    pub i: usize,
    pub i_prime: usize,
    #[serde(with = "rational::serde_rational")]
    pub sum_i: Rational,
    #[serde(with = "rational::serde_rational")]
    pub sum_i_prime: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EquitableCheck {
    pub equitable: bool,
    pub witness: Option<Witness>,
}

fn check_order(a: &RationalMatrix, pi: &Partition) -> Result<()> {
    if a.order() != pi.n() {
        return Err(Error::SizeMismatch(a.order(), pi.n()));
    }
    Ok(())
}

/// Row sums `sum_{j in C_q} A_ij` for every vertex `i` and cell `q`.
fn cell_sums(a: &RationalMatrix, pi: &Partition) -> Vec<Vec<Rational>> {
    let idx = pi.cell_index();
    (0..a.order())
        .map(|i| {
            let mut s = vec![rational::zero(); pi.len()];
            for (j, x) in a.row(i).iter().enumerate() {
                s[idx[j]] += x;
            }
            s
        })
        .collect()
}

pub fn is_equitable_matrix(a: &RationalMatrix, pi: &Partition) -> Result<EquitableCheck> {
    check_order(a, pi)?;
    let sums = cell_sums(a, pi);
    for (p, cell) in pi.cells().iter().enumerate() {
        let first = cell[0];
        for &i in &cell[1..] {
            for q in 0..pi.len() {
                if sums[i - 1][q] != sums[first - 1][q] {
                    return Ok(EquitableCheck {
                        equitable: false,
                        witness: Some(Witness {
                            p: p + 1,
                            q: q + 1,
                            i: first,
                            i_prime: i,
                            sum_i: sums[first - 1][q].clone(),
                            sum_i_prime: sums[i - 1][q].clone(),
                        }),
                    });
                }
            }
        }
    }
    Ok(EquitableCheck {
        equitable: true,
        witness: None,
    })
}

pub fn is_equitable(h: &Hypergraph, pi: &Partition) -> Result<EquitableCheck> {
    is_equitable_matrix(&h.adjacency_matrix()?, pi)
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientResult {
    pub b: RationalMatrix,
    /// `(n, k)`: the shape of the characteristic matrix `P`.
    pub p_dims: (usize, usize),
}

/// Exact check of `A P = P B` for the 0/1 characteristic matrix `P`.
pub fn satisfies_quotient(a: &RationalMatrix, pi: &Partition, b: &RationalMatrix) -> bool {
    if a.order() != pi.n() || b.order() != pi.len() {
        return false;
    }
    let idx = pi.cell_index();
    let sums = cell_sums(a, pi);
    (0..a.order()).all(|i| (0..pi.len()).all(|q| &sums[i][q] == b.get(idx[i], q)))
}

pub fn quotient_of_matrix(a: &RationalMatrix, pi: &Partition) -> Result<QuotientResult> {
    let check = is_equitable_matrix(a, pi)?;
    if let Some(w) = check.witness {
        return Err(Error::NotEquitable(format!(
            "vertices {} and {} of cell {} send {} and {} into cell {}",
            w.i,
            w.i_prime,
            w.p,
            rational::format_rational(&w.sum_i),
            rational::format_rational(&w.sum_i_prime),
            w.q
        )));
    }
    let sums = cell_sums(a, pi);
    let k = pi.len();
    let mut b = RationalMatrix::zeros(k);
    for (p, cell) in pi.cells().iter().enumerate() {
        for q in 0..k {
            b.set(p, q, sums[cell[0] - 1][q].clone());
        }
    }
    debug_assert!(satisfies_quotient(a, pi, &b));
    Ok(QuotientResult {
        b,
        p_dims: (pi.n(), k),
    })
}

pub fn quotient_matrix(h: &Hypergraph, pi: &Partition) -> Result<QuotientResult> {
    quotient_of_matrix(&h.adjacency_matrix()?, pi)
}

/// Coarsest equitable partition refining `seed` (default: one cell).
///
/// Each pass splits every cell by the vector of row sums toward the current
/// cells; the pass is repeated until nothing splits.
pub fn coarsest_equitable_partition(h: &Hypergraph, seed: Option<&Partition>) -> Result<Partition> {
    let a = h.adjacency_matrix()?;
    let mut current = match seed {
        Some(s) => {
            check_order(&a, s)?;
            s.clone()
        }
        None => Partition::single_cell(h.n()),
    };
    loop {
        let sums = cell_sums(&a, &current);
        let mut next = Vec::new();
        for cell in current.cells() {
            let mut groups: BTreeMap<&Vec<Rational>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                groups.entry(&sums[v - 1]).or_default().push(v);
            }
            next.extend(groups.into_values());
        }
        let refined = Partition::new(h.n(), next)?;
        if refined.len() == current.len() {
            return Ok(refined);
        }
        current = refined;
    }
}

/// Orbits of the full automorphism group, found by exhaustive search.
pub fn orbit_partition(h: &Hypergraph) -> Result<Partition> {
    limits::check("orbit partition vertices", h.n(), MAX_ORBIT_VERTICES)?;
    let n = h.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for perm in iso::automorphisms(h) {
        for (v, &img) in perm.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, img - 1));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        cells.entry(r).or_default().push(v + 1);
    }
    Partition::new(n, cells.into_values().collect())
}
