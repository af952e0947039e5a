//! Backtracking vertex-bijection search shared by the isomorphism test and
//! the automorphism-orbit computation. Candidates are pruned by the incidence
//! profile of each vertex and by the edge profile of every assigned pair.

use crate::hypergraph::Hypergraph;
use crate::rational::Rational;

type Profile = Vec<(usize, Rational)>;

struct Side<'a> {
    h: &'a Hypergraph,
    vertex: Vec<Profile>,
    pair: Vec<Vec<Profile>>,
}

impl<'a> Side<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        let n = h.n();
        let vertex = (1..=n).map(|v| h.incidence_profile(v)).collect();
        let mut pair = vec![vec![Vec::new(); n]; n];
        for e in h.edges() {
            let vs = e.vertices();
            for (x, &i) in vs.iter().enumerate() {
                for &j in &vs[x + 1..] {
                    pair[i - 1][j - 1].push((e.len(), e.weight().clone()));
                    pair[j - 1][i - 1].push((e.len(), e.weight().clone()));
                }
            }
        }
        for row in &mut pair {
            for p in row.iter_mut() {
                p.sort();
            }
        }
        Self { h, vertex, pair }
    }
}

fn edge_profile(h: &Hypergraph) -> Vec<(usize, Rational)> {
    let mut p: Vec<_> = h.edges().iter().map(|e| (e.len(), e.weight().clone())).collect();
    p.sort();
    p
}

fn maps_edges(a: &Hypergraph, b: &Hypergraph, map: &[usize]) -> bool {
    a.edges().iter().all(|e| {
        let mut img: Vec<usize> = e.vertices().iter().map(|&v| map[v - 1]).collect();
        img.sort_unstable();
        b.edges()
            .binary_search_by(|f| f.vertices().cmp(img.as_slice()))
            .map(|k| b.edges()[k].weight() == e.weight())
            .unwrap_or(false)
    })
}

/// Visit every bijection `a -> b` that preserves the weighted edge set.
/// `visit` returns false to stop early.
fn search(a: &Hypergraph, b: &Hypergraph, visit: &mut dyn FnMut(&[usize]) -> bool) {
    if a.n() != b.n() || a.edge_count() != b.edge_count() || edge_profile(a) != edge_profile(b) {
        return;
    }
    let sa = Side::new(a);
    let sb = Side::new(b);
    let n = a.n();
    let mut map = vec![0usize; n];
    let mut used = vec![false; n];

    fn rec(
        depth: usize,
        sa: &Side,
        sb: &Side,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let n = map.len();
        if depth == n {
            if maps_edges(sa.h, sb.h, map) {
                return visit(map);
            }
            return true;
        }
        for w in 0..n {
            if used[w] || sa.vertex[depth] != sb.vertex[w] {
                continue;
            }
            let consistent = (0..depth).all(|u| sa.pair[u][depth] == sb.pair[map[u] - 1][w]);
            if !consistent {
                continue;
            }
            used[w] = true;
            map[depth] = w + 1;
            let go_on = rec(depth + 1, sa, sb, map, used, visit);
            used[w] = false;
            if !go_on {
                return false;
            }
        }
        true
    }

    rec(0, &sa, &sb, &mut map, &mut used, visit);
}

/// Some vertex map `v -> map[v-1]` carrying `a` onto `b`.
pub fn find_isomorphism(a: &Hypergraph, b: &Hypergraph) -> Option<Vec<usize>> {
    let mut found = None;
    search(a, b, &mut |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

/// Every automorphism of `h`, as vertex maps.
pub fn automorphisms(h: &Hypergraph) -> Vec<Vec<usize>> {
    let mut all = Vec::new();
    search(h, h, &mut |m| {
        all.push(m.to_vec());
        true
    });
    all
}
