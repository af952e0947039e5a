//! Weighted general hypergraphs and their adjacency matrix
//! `A_ij = sum over edges e containing i and j of w_e / (|e| - 1)`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::iso;
use crate::matrix::RationalMatrix;
use crate::rational::{self, serde_rational, Rational};

/// A weighted edge. Vertices are 1-based and sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    vertices: Vec<usize>,
    weight: Rational,
}

impl Edge {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn weight(&self) -> &Rational {
        &self.weight
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// Vertex set `{1..n}` plus a set of weighted edges.
///
/// Immutable once built: every constructor validates and canonicalises
/// (vertices sorted inside edges, edges sorted lexicographically).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Edge>,
    label: Option<String>,
    declared_rank: Option<usize>,
}

impl Hypergraph {
    /// Validate and build. Duplicate edges are an error, not a merge.
    pub fn new<I, V>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (V, Rational)>,
        V: IntoIterator<Item = usize>,
    {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut out = Vec::new();
        for (index, (vs, w)) in edges.into_iter().enumerate() {
            let set: BTreeSet<usize> = vs.into_iter().collect();
            if set.is_empty() {
                return Err(Error::EmptyEdge { index });
            }
            if let Some(&bad) = set.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::VertexOutOfRange { vertex: bad, n });
            }
            let vertices: Vec<usize> = set.into_iter().collect();
            if rational::is_negative(&w) {
                return Err(Error::NegativeWeight {
                    edge: vertices,
                    weight: rational::format_rational(&w),
                });
            }
            out.push(Edge {
                vertices,
                weight: w,
            });
        }
        out.sort();
        for pair in out.windows(2) {
            if pair[0].vertices == pair[1].vertices {
                return Err(Error::DuplicateEdge {
                    edge: pair[0].vertices.clone(),
                });
            }
        }
        Ok(Self {
            n,
            edges: out,
            label: None,
            declared_rank: None,
        })
    }

    /// All edges at weight 1.
    pub fn unweighted<I, V>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: IntoIterator<Item = usize>,
    {
        Self::new(n, edges.into_iter().map(|e| (e, rational::one())))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Record the uniformity an edgeless hypergraph stands in for.
    pub fn with_declared_rank(mut self, m: usize) -> Self {
        self.declared_rank = Some(m);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn declared_rank(&self) -> Option<usize> {
        self.declared_rank
    }

    pub fn has_edge(&self, vertices: &[usize]) -> bool {
        let mut key = vertices.to_vec();
        key.sort_unstable();
        self.edges
            .binary_search_by(|e| e.vertices.as_slice().cmp(key.as_slice()))
            .is_ok()
    }

    pub fn is_unweighted(&self) -> bool {
        self.edges.iter().all(|e| e.weight.is_one())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn adjacency_matrix(&self) -> Result<RationalMatrix> {
        let mut a = RationalMatrix::zeros(self.n);
        for e in &self.edges {
            if e.len() == 1 {
                return Err(Error::SingletonEdge {
                    edge: e.vertices.clone(),
                });
            }
            if e.weight.is_zero() {
                continue;
            }
            let share = &e.weight / rational::int(e.len() as i64 - 1);
            for (x, &i) in e.vertices.iter().enumerate() {
                for &j in &e.vertices[x + 1..] {
                    a.add_at(i - 1, j - 1, &share);
                    a.add_at(j - 1, i - 1, &share);
                }
            }
        }
        Ok(a)
    }

    /// `d_i`: total weight of the edges through `i`.
    pub fn valency(&self, i: usize) -> Result<Rational> {
        self.check_vertex(i)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| e.contains(i))
            .map(|e| e.weight.clone())
            .sum())
    }

    pub fn valencies(&self) -> Vec<Rational> {
        let mut d = vec![Rational::zero(); self.n];
        for e in &self.edges {
            for &v in &e.vertices {
                d[v - 1] += &e.weight;
            }
        }
        d
    }

    /// Number of edges through vertex `i`, ignoring weights.
    pub fn degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(i)).count()
    }

    /// `Some(m)` if every edge has `m` vertices. An edgeless hypergraph
    /// reports its declared rank, if any.
    pub fn uniformity(&self) -> Option<usize> {
        let first = match self.edges.first() {
            Some(e) => e.len(),
            None => return self.declared_rank,
        };
        self.edges.iter().all(|e| e.len() == first).then_some(first)
    }

    /// Whether this hypergraph can take part in an `m`-uniform construction.
    pub fn fits_arity(&self, m: usize) -> bool {
        self.edges.iter().all(|e| e.len() == m) && self.declared_rank.is_none_or(|r| r == m)
    }

    /// `Some(r)` when every valency equals `r`.
    pub fn regularity(&self) -> Option<Rational> {
        let d = self.valencies();
        let first = d[0].clone();
        d.iter().all(|x| *x == first).then_some(first)
    }

    pub fn is_regular(&self) -> bool {
        self.regularity().is_some()
    }

    /// One component under "shares an edge" reachability.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            let root = find(&mut parent, e.vertices[0]);
            for &v in &e.vertices[1..] {
                let r = find(&mut parent, v);
                parent[r] = root;
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for v in 1..=self.n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        let mut comps: Vec<Vec<usize>> = groups.into_values().collect();
        comps.sort();
        comps
    }

    /// Number of edges containing both `i` and `j`.
    pub fn codegree(&self, i: usize, j: usize) -> Result<usize> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::BadArity("codegree needs two distinct vertices".into()));
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| e.contains(i) && e.contains(j))
            .count())
    }

    /// Sub-hypergraph on `subset`, keeping edges contained in it. Vertices are
    /// renumbered `1..=|subset|` in increasing order; the returned map sends
    /// new vertex `k` (at index `k-1`) to its old label.
    pub fn induced(&self, subset: &[usize]) -> Result<(Hypergraph, Vec<usize>)> {
        let keep: BTreeSet<usize> = subset.iter().copied().collect();
        if keep.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        for &v in &keep {
            self.check_vertex(v)?;
        }
        let map: Vec<usize> = keep.iter().copied().collect();
        let mut new_label = vec![0; self.n + 1];
        for (k, &v) in map.iter().enumerate() {
            new_label[v] = k + 1;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.vertices.iter().all(|v| keep.contains(v)))
            .map(|e| {
                (
                    e.vertices.iter().map(|&v| new_label[v]).collect::<Vec<_>>(),
                    e.weight.clone(),
                )
            });
        let mut h = Hypergraph::new(map.len(), edges)?;
        h.declared_rank = self.uniformity();
        Ok((h, map))
    }

    /// Image under `perm`, where vertex `v` goes to `perm[v-1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Hypergraph> {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|e| {
            (
                e.vertices.iter().map(|&v| perm[v - 1]).collect::<Vec<_>>(),
                e.weight.clone(),
            )
        });
        let mut h = Hypergraph::new(self.n, edges)?;
        h.declared_rank = self.declared_rank;
        h.label = self.label.clone();
        Ok(h)
    }

    /// Brute-force isomorphism test, limited to 10 vertices.
    pub fn is_isomorphic(&self, other: &Hypergraph) -> Result<bool> {
        const LIMIT: usize = 10;
        if self.n.max(other.n) > LIMIT {
            return Err(Error::TooLarge {
                what: "isomorphism search",
                size: self.n.max(other.n),
                limit: LIMIT,
            });
        }
        Ok(iso::find_isomorphism(self, other).is_some())
    }

    pub fn to_json(&self) -> HypergraphJson {
        HypergraphJson {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|e| EdgeJson {
                    v: e.vertices.clone(),
                    w: e.weight.clone(),
                })
                .collect(),
            label: self.label.clone(),
            m: if self.edges.is_empty() {
                self.declared_rank
            } else {
                None
            },
        }
    }

    pub fn from_json(j: HypergraphJson) -> Result<Self> {
        let mut h = Hypergraph::new(j.n, j.edges.into_iter().map(|e| (e.v, e.w)))?;
        h.label = j.label;
        h.declared_rank = j.m;
        Ok(h)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("hypergraph serialises")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: HypergraphJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(j)
    }

    /// Sorted edge-size/weight profile of each vertex; an isomorphism invariant.
    pub(crate) fn incidence_profile(&self, v: usize) -> Vec<(usize, Rational)> {
        let mut p: Vec<(usize, Rational)> = self
            .edges
            .iter()
            .filter(|e| e.contains(v))
            .map(|e| (e.len(), e.weight.clone()))
            .collect();
        p.sort();
        p
    }
}

impl Serialize for Hypergraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// On-disk form: `{"n": 4, "edges": [{"v": [1,2,3], "w": "1/2"}], "label": "..."}`.
/// `m` optionally records the declared uniformity of an edgeless hypergraph.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub n: usize,
    pub edges: Vec<EdgeJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeJson {
    pub v: Vec<usize>,
    #[serde(with = "serde_rational", default = "rational::one")]
    pub w: Rational,
}
