//! Named hypergraph families.
//!
//! Multipartite vertex blocks are laid out consecutively: part 1 is
//! `1..=n_1`, part 2 is `n_1+1..=n_1+n_2`, and so on. Quotient-matrix code
//! relies on this layout to build partitions positionally.

use serde::{Deserialize, Serialize};

use crate::combinatorics::{crossing_subsets, k_subsets};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::rational::{self, Rational};

/// Which multipartite edge rule to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PartiteMode {
    /// Edges meet every part (`m >= k`).
    Weak,
    /// Edges meet each part at most once (`m <= k`).
    Strong,
}

/// `K^m_n`: every `m`-subset of `{1..n}` at weight `w`.
pub fn complete_uniform(m: usize, n: usize, w: Rational) -> Result<Hypergraph> {
    if m < 2 || m > n {
        return Err(Error::BadArity(format!("K^m_n needs 2 <= m <= n, got m={m}, n={n}")));
    }
    let all: Vec<usize> = (1..=n).collect();
    let edges = k_subsets(&all, m).into_iter().map(|e| (e, w.clone()));
    Ok(Hypergraph::new(n, edges)?
        .with_declared_rank(m)
        .with_label(format!("K^{m}_{n}")))
}

/// The edgeless complement of `K^m_n`, tagged with rank `m`.
///
/// # Panics
/// If `n == 0`.
pub fn empty_uniform(m: usize, n: usize) -> Hypergraph {
    Hypergraph::unweighted(n, Vec::<Vec<usize>>::new())
        .expect("empty_uniform needs n >= 1")
        .with_declared_rank(m)
        .with_label(format!("empty^{m}_{n}"))
}

/// Complete `m`-uniform weak or strong multipartite hypergraph.
pub fn complete_multipartite(m: usize, sizes: &[usize], mode: PartiteMode) -> Result<Hypergraph> {
    let k = sizes.len();
    if k == 0 || sizes.contains(&0) {
        return Err(Error::ModeArityMismatch("every part needs at least one vertex".into()));
    }
    if m < 2 {
        return Err(Error::ModeArityMismatch(format!("m must be at least 2, got {m}")));
    }
    let blocks = consecutive_blocks(sizes);
    let n: usize = sizes.iter().sum();
    let edges: Vec<Vec<usize>> = match mode {
        PartiteMode::Weak => {
            if m < k {
                return Err(Error::ModeArityMismatch(format!("weak mode needs m >= k, got m={m}, k={k}")));
            }
            crossing_subsets(&blocks, m)
        }
        PartiteMode::Strong => {
            if m > k {
                return Err(Error::ModeArityMismatch(format!("strong mode needs m <= k, got m={m}, k={k}")));
            }
            let parts: Vec<usize> = (0..k).collect();
            let mut out = Vec::new();
            for chosen in k_subsets(&parts, m) {
                let picked: Vec<Vec<usize>> = chosen.iter().map(|&p| blocks[p].clone()).collect();
                out.extend(crossing_subsets(&picked, m));
            }
            out
        }
    };
    let sizes_txt: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
    Ok(Hypergraph::unweighted(n, edges)?
        .with_declared_rank(m)
        .with_label(format!("K^{m}_{{{}}}", sizes_txt.join(","))))
}

/// Consecutive 1-based vertex blocks of the given sizes.
pub fn consecutive_blocks(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut start = 1;
    sizes
        .iter()
        .map(|&s| {
            let b: Vec<usize> = (start..start + s).collect();
            start += s;
            b
        })
        .collect()
}

fn check_looseness(m: usize, s: usize) -> Result<()> {
    if s < 1 || 2 * s > m {
        return Err(Error::BadLooseness(format!("need 1 <= s and 2s <= m, got m={m}, s={s}")));
    }
    Ok(())
}

/// `s`-loose path with `n` edges on `m + (n-1)(m-s)` vertices.
pub fn loose_path(m: usize, s: usize, n: usize) -> Result<Hypergraph> {
    check_looseness(m, s)?;
    if n < 1 {
        return Err(Error::BadLooseness("a loose path needs at least one edge".into()));
    }
    let step = m - s;
    let verts = m + (n - 1) * step;
    let edges = (0..n).map(|i| (i * step + 1..=i * step + m).collect::<Vec<_>>());
    Ok(Hypergraph::unweighted(verts, edges)?
        .with_declared_rank(m)
        .with_label(format!("P^({m})_L({s};{n})")))
}

/// `s`-loose cycle with `n` edges on `n(m-s)` vertices; the last edge wraps
/// around to `1..=s`.
pub fn loose_cycle(m: usize, s: usize, n: usize) -> Result<Hypergraph> {
    check_looseness(m, s)?;
    if n < 2 {
        return Err(Error::DegenerateCycle("a loose cycle needs n >= 2 edges".into()));
    }
    let step = m - s;
    let verts = n * step;
    if verts <= m {
        return Err(Error::DegenerateCycle(format!("n(m-s) = {verts} <= m = {m} repeats an edge")));
    }
    let edges = (0..n).map(|i| {
        (i * step..i * step + m)
            .map(|x| x % verts + 1)
            .collect::<Vec<_>>()
    });
    Ok(Hypergraph::unweighted(verts, edges)?
        .with_declared_rank(m)
        .with_label(format!("C^({m})_L({s};{n})")))
}

pub fn path_graph(n: usize) -> Result<Hypergraph> {
    if n < 1 {
        return Err(Error::TooSmall("path needs n >= 1".into()));
    }
    Ok(Hypergraph::unweighted(n, (1..n).map(|i| vec![i, i + 1]))?
        .with_declared_rank(2)
        .with_label(format!("P_{n}")))
}

pub fn cycle_graph(n: usize) -> Result<Hypergraph> {
    if n < 3 {
        return Err(Error::TooSmall("cycle needs n >= 3".into()));
    }
    Ok(Hypergraph::unweighted(n, (1..=n).map(|i| vec![i, i % n + 1]))?
        .with_declared_rank(2)
        .with_label(format!("C_{n}")))
}

pub fn complete_graph(n: usize, w: Rational) -> Result<Hypergraph> {
    if n < 1 {
        return Err(Error::TooSmall("complete graph needs n >= 1".into()));
    }
    let all: Vec<usize> = (1..=n).collect();
    let edges = k_subsets(&all, 2).into_iter().map(|e| (e, w.clone()));
    Ok(Hypergraph::new(n, edges)?
        .with_declared_rank(2)
        .with_label(format!("K_{n}")))
}

/// `K_n` with unit weights.
pub fn complete_graph_unit(n: usize) -> Result<Hypergraph> {
    complete_graph(n, rational::one())
}
