//! Sub-joins, generalized vertex coronas and edge coronas.
//!
//! Layout: the base hypergraph keeps vertices `1..=n`; attached copies
//! follow in attachment order. Cross edges always have weight 1.

use num_traits::Zero;
use serde::Serialize;

use crate::combinatorics::crossing_subsets;
use crate::error::{Error, Result};
use crate::generators::{complete_uniform, empty_uniform};
use crate::hypergraph::Hypergraph;
use crate::limits;
use crate::matrix::RationalMatrix;
use crate::rational::{self, binom, Rational};

/// One attachment: base vertices joined with a fresh copy of `member`.
struct Attachment<'a> {
    base: Vec<usize>,
    member: &'a Hypergraph,
}

fn attach(h: &Hypergraph, attachments: &[Attachment<'_>], m: usize) -> Result<Hypergraph> {
    let total = h.n() + attachments.iter().map(|a| a.member.n()).sum::<usize>();
    let mut edges: Vec<(Vec<usize>, Rational)> = h
        .edges()
        .iter()
        .map(|e| (e.vertices().to_vec(), e.weight().clone()))
        .collect();
    let mut offset = h.n();
    for a in attachments {
        if a.base.is_empty() {
            return Err(Error::ArityError("a join needs a nonempty base side".into()));
        }
        let copy: Vec<usize> = (offset + 1..=offset + a.member.n()).collect();
        limits::check_enum("corona join vertices", a.base.len() + copy.len())?;
        for e in a.member.edges() {
            edges.push((e.vertices().iter().map(|v| v + offset).collect(), e.weight().clone()));
        }
        for s in crossing_subsets(&[a.base.clone(), copy], m) {
            edges.push((s, rational::one()));
        }
        offset += a.member.n();
    }
    let out = Hypergraph::new(total, edges)?;
    Ok(out.with_declared_rank(m))
}

fn check_uniform(h: &Hypergraph, m: usize, what: &str) -> Result<()> {
    if h.fits_arity(m) {
        Ok(())
    } else {
        Err(Error::ArityError(format!("{what} is not {m}-uniform")))
    }
}

/// `V' (+) H''`: `h` plus a fresh copy of `other` and every `m`-subset of
/// `V' u V(H'')` that meets both sides.
pub fn sub_join(h: &Hypergraph, subset: &[usize], other: &Hypergraph, m: usize) -> Result<Hypergraph> {
    check_uniform(h, m, "base")?;
    check_uniform(other, m, "attached hypergraph")?;
    if let Some(&v) = subset.iter().find(|&&v| v == 0 || v > h.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: h.n() });
    }
    let mut base = subset.to_vec();
    base.sort_unstable();
    base.dedup();
    attach(h, &[Attachment { base, member: other }], m)
}

/// Generalized vertex corona: `V_0` is cut into `k` consecutive cells of
/// size `p`, and cell `i` is joined with each of `p` copies of `members[i]`.
/// Copies are laid out in (cell, copy) order.
pub fn vertex_corona(h0: &Hypergraph, k: usize, p: usize, members: &[Hypergraph], m: usize) -> Result<Hypergraph> {
    if k == 0 || p == 0 || k * p != h0.n() {
        return Err(Error::PartitionMismatch(format!(
            "{k} cells of size {p} do not cover {} base vertices",
            h0.n()
        )));
    }
    if members.len() != k {
        return Err(Error::PartitionMismatch(format!("{} members for {k} cells", members.len())));
    }
    check_uniform(h0, m, "base")?;
    for (i, h) in members.iter().enumerate() {
        check_uniform(h, m, &format!("member {}", i + 1))?;
    }
    let mut atts = Vec::with_capacity(k * p);
    for (i, member) in members.iter().enumerate() {
        let cell: Vec<usize> = (i * p + 1..=(i + 1) * p).collect();
        for _ in 0..p {
            atts.push(Attachment {
                base: cell.clone(),
                member,
            });
        }
    }
    attach(h0, &atts, m)
}

/// Edge corona: edge `e_i` of `h0` is joined with its own copy of
/// `members[i]`. Base edges may be smaller than `m`.
pub fn edge_corona(h0: &Hypergraph, members: &[Hypergraph], m: usize) -> Result<Hypergraph> {
    if members.len() != h0.edge_count() {
        return Err(Error::CountMismatch(format!(
            "{} members for {} base edges",
            members.len(),
            h0.edge_count()
        )));
    }
    if let Some(e) = h0.edges().iter().find(|e| e.len() > m || e.len() < 2) {
        return Err(Error::ArityError(format!("base edge {:?} does not fit arity {m}", e.vertices())));
    }
    for (i, h) in members.iter().enumerate() {
        check_uniform(h, m, &format!("member {}", i + 1))?;
    }
    for (e, h) in h0.edges().iter().zip(members) {
        if e.len() + h.n() < m {
            return Err(Error::InsufficientVertices(format!(
                "edge {:?} and a {}-vertex member cannot hold an {m}-edge",
                e.vertices(),
                h.n()
            )));
        }
    }
    let atts: Vec<Attachment<'_>> = h0
        .edges()
        .iter()
        .zip(members)
        .map(|(e, member)| Attachment {
            base: e.vertices().to_vec(),
            member,
        })
        .collect();
    attach(h0, &atts, m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoronaKind {
    Vertex,
    Edge,
}

/// Sizes that determine the constants: arity `m`, base order `n`, member
/// order `n1`, cell size `p` (vertex corona) and base edge size (edge
/// corona, `m` unless the base has smaller edges).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoronaGeometry {
    pub m: usize,
    pub n: usize,
    pub n1: usize,
    pub p: usize,
    pub base_arity: usize,
}

impl CoronaGeometry {
    pub fn vertex(m: usize, n: usize, n1: usize, p: usize) -> Self {
        Self { m, n, n1, p, base_arity: m }
    }

    pub fn edge(m: usize, n: usize, n1: usize) -> Self {
        Self { m, n, n1, p: 1, base_arity: m }
    }

    fn validate(&self, kind: CoronaKind) -> Result<()> {
        if self.m < 2 || self.n1 == 0 {
            return Err(Error::ArityError(format!("need m >= 2 and n1 >= 1, got {self:?}")));
        }
        match kind {
            CoronaKind::Vertex if self.p == 0 => Err(Error::PartitionMismatch("cell size must be positive".into())),
            CoronaKind::Edge if self.base_arity < 2 || self.base_arity > self.m => {
                Err(Error::ArityError(format!("base edges of size {} for arity {}", self.base_arity, self.m)))
            }
            CoronaKind::Edge if self.base_arity + self.n1 < self.m => Err(Error::InsufficientVertices(format!(
                "{} + {} vertices cannot hold an {}-edge",
                self.base_arity, self.n1, self.m
            ))),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstantsSource {
    /// Read off a constructed instance.
    Oracle,
    /// Evaluated from the binomial counts.
    Formula,
    /// The previously published expressions, evaluated verbatim.
    Published,
}

/// Corona constants. For vertex coronas `a` is the within-cell base
/// increment; for edge coronas it is the multiplier in `(a + 1) A_0`.
/// `b` is the base-to-copy entry and `c` the within-copy increment.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoronaConstants {
    pub kind: CoronaKind,
    #[serde(with = "rational::serde_rational")]
    pub a: Rational,
    #[serde(with = "rational::serde_rational")]
    pub b: Rational,
    #[serde(with = "rational::serde_rational")]
    pub c: Rational,
    /// No pair of vertices exists to define `a` (cells of size 1).
    pub a_vacuous: bool,
    /// No pair of vertices exists to define `c` (members of order 1).
    pub c_vacuous: bool,
    pub source: ConstantsSource,
}

impl CoronaConstants {
    /// Per shared base edge increment for edge coronas, `a / (m - 1)`.
    pub fn edge_increment(&self, m: usize) -> Rational {
        &self.a / rational::int(m as i64 - 1)
    }
}

fn b2(a: usize, b: usize) -> Rational {
    Rational::from_integer(binom(a as i64, b as i64))
}

/// Constants from the binomial counts of cross edges through a fixed pair.
pub fn corona_constants_formula(kind: CoronaKind, g: CoronaGeometry) -> Result<CoronaConstants> {
    g.validate(kind)?;
    let (m, n1) = (g.m, g.n1);
    let d = rational::int(m as i64 - 1);
    let out = match kind {
        CoronaKind::Vertex => {
            let p = g.p;
            let through = b2(p + n1 - 2, m - 2);
            let inside_base = if p >= 2 { b2(p - 2, m - 2) } else { rational::zero() };
            let inside_copy = if n1 >= 2 { b2(n1 - 2, m - 2) } else { rational::zero() };
            CoronaConstants {
                kind,
                a: if p >= 2 {
                    rational::int(p as i64) * (&through - inside_base) / &d
                } else {
                    rational::zero()
                },
                b: &through / &d,
                c: if n1 >= 2 { (&through - inside_copy) / &d } else { rational::zero() },
                a_vacuous: p < 2,
                c_vacuous: n1 < 2,
                source: ConstantsSource::Formula,
            }
        }
        CoronaKind::Edge => {
            let s = g.base_arity;
            let through = b2(s + n1 - 2, m - 2);
            let base_edge = if s == m { rational::one() } else { rational::zero() };
            let inside_copy = if n1 >= 2 { b2(n1 - 2, m - 2) } else { rational::zero() };
            CoronaConstants {
                kind,
                a: &through - base_edge,
                b: &through / &d,
                c: if n1 >= 2 { (&through - inside_copy) / &d } else { rational::zero() },
                a_vacuous: false,
                c_vacuous: n1 < 2,
                source: ConstantsSource::Formula,
            }
        }
    };
    Ok(out)
}

/// The previously published closed forms, evaluated as printed (binomials
/// with out-of-range arguments are zero).
pub fn corona_constants_published(kind: CoronaKind, g: CoronaGeometry) -> Result<CoronaConstants> {
    g.validate(kind)?;
    let (m, n, n1) = (g.m as i64, g.n as i64, g.n1 as i64);
    let bq = |a: i64, b: i64| Rational::from_integer(binom(a, b));
    let d = rational::int(m - 1);
    let out = match kind {
        CoronaKind::Vertex => CoronaConstants {
            kind,
            a: rational::int(g.p as i64) / &d * (bq(n + n1 - 2, m - 2) - bq(n, m - 2)),
            b: bq(n + n1 - 2, m - 1),
            c: (bq(n + n1 - 2, m - 2) - bq(n1 - 2, m - 2)) / &d,
            a_vacuous: g.p < 2,
            c_vacuous: n1 < 2,
            source: ConstantsSource::Published,
        },
        CoronaKind::Edge => CoronaConstants {
            kind,
            a: bq(m + n1 - 2, m - 2) - rational::one(),
            b: bq(n + n1 - 2, m - 2) / &d,
            c: bq(m + n1 - 2, m - 2) - bq(n1 - 2, m - 2),
            a_vacuous: false,
            c_vacuous: n1 < 2,
            source: ConstantsSource::Published,
        },
    };
    Ok(out)
}

/// Records a value that must be equal everywhere it is probed.
struct Probe {
    name: &'static str,
    value: Option<Rational>,
}

impl Probe {
    fn new(name: &'static str) -> Self {
        Self { name, value: None }
    }

    fn see(&mut self, v: Rational, at: (usize, usize)) -> Result<()> {
        match &self.value {
            None => {
                self.value = Some(v);
                Ok(())
            }
            Some(x) if *x == v => Ok(()),
            Some(x) => Err(Error::NonConstantBlock(format!(
                "{} is {} at ({}, {}) but {} elsewhere",
                self.name,
                rational::format_rational(&v),
                at.0 + 1,
                at.1 + 1,
                rational::format_rational(x)
            ))),
        }
    }

    fn get(self) -> (Rational, bool) {
        match self.value {
            Some(v) => (v, false),
            None => (rational::zero(), true),
        }
    }
}

fn expect_zero(v: &Rational, what: &str, at: (usize, usize)) -> Result<()> {
    if v.is_zero() {
        Ok(())
    } else {
        Err(Error::NonConstantBlock(format!(
            "{what} entry ({}, {}) is {} instead of 0",
            at.0 + 1,
            at.1 + 1,
            rational::format_rational(v)
        )))
    }
}

/// Checks the copy blocks (`A_{H_i} + c (J - I)` on the diagonal, zero
/// between copies) and returns the within-copy probe.
fn scan_copies(a: &RationalMatrix, n: usize, members: &[&Hypergraph], c: &mut Probe) -> Result<Vec<usize>> {
    let mut offsets = Vec::with_capacity(members.len());
    let mut off = n;
    for h in members {
        offsets.push(off);
        off += h.n();
    }
    for (x, h) in members.iter().enumerate() {
        let ah = h.adjacency_matrix()?;
        let ox = offsets[x];
        for i in 0..h.n() {
            for y in 0..members.len() {
                let oy = offsets[y];
                for j in 0..members[y].n() {
                    let v = a.get(ox + i, oy + j);
                    if x == y {
                        if i != j {
                            c.see(v - ah.get(i, j), (ox + i, oy + j))?;
                        }
                    } else {
                        expect_zero(v, "copy-to-copy", (ox + i, oy + j))?;
                    }
                }
            }
        }
    }
    Ok(offsets)
}

/// Reads `(a, b, c)` off a vertex corona built from consecutive cells of
/// size `p`, checking that every block has the closed-form shape.
pub fn extract_vertex_constants(
    corona: &Hypergraph,
    h0: &Hypergraph,
    p: usize,
    members: &[Hypergraph],
) -> Result<CoronaConstants> {
    let a = corona.adjacency_matrix()?;
    let a0 = h0.adjacency_matrix()?;
    let n = h0.n();
    let cell = |v: usize| v / p;
    let (mut pa, mut pb, mut pc) = (Probe::new("a"), Probe::new("b"), Probe::new("c"));
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let inc = a.get(i, j) - a0.get(i, j);
            if cell(i) == cell(j) {
                pa.see(inc, (i, j))?;
            } else {
                expect_zero(&inc, "cross-cell base", (i, j))?;
            }
        }
    }
    let copies: Vec<&Hypergraph> = members.iter().flat_map(|h| std::iter::repeat_n(h, p)).collect();
    let offsets = scan_copies(&a, n, &copies, &mut pc)?;
    for (idx, h) in copies.iter().enumerate() {
        let owner = idx / p;
        for u in 0..n {
            for j in 0..h.n() {
                let v = a.get(u, offsets[idx] + j);
                if cell(u) == owner {
                    pb.see(v.clone(), (u, offsets[idx] + j))?;
                } else {
                    expect_zero(v, "base-to-foreign-copy", (u, offsets[idx] + j))?;
                }
            }
        }
    }
    let (a, a_vacuous) = pa.get();
    let (b, _) = pb.get();
    let (c, c_vacuous) = pc.get();
    Ok(CoronaConstants {
        kind: CoronaKind::Vertex,
        a,
        b,
        c,
        a_vacuous,
        c_vacuous,
        source: ConstantsSource::Oracle,
    })
}

/// Reads `(a, b, c)` off an edge corona. The base increment must equal a
/// common multiple of the codegree matrix; `a` is that multiple times
/// `m - 1`.
pub fn extract_edge_constants(
    corona: &Hypergraph,
    h0: &Hypergraph,
    members: &[Hypergraph],
    m: usize,
) -> Result<CoronaConstants> {
    let a = corona.adjacency_matrix()?;
    let a0 = h0.adjacency_matrix()?;
    let n = h0.n();
    let mut pa = Probe::new("a");
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let inc = a.get(i, j) - a0.get(i, j);
            let cd = h0.codegree(i + 1, j + 1)?;
            if cd == 0 {
                expect_zero(&inc, "base pair outside every edge", (i, j))?;
            } else {
                pa.see(inc * rational::int(m as i64 - 1) / rational::int(cd as i64), (i, j))?;
            }
        }
    }
    let (mut pb, mut pc) = (Probe::new("b"), Probe::new("c"));
    let refs: Vec<&Hypergraph> = members.iter().collect();
    let offsets = scan_copies(&a, n, &refs, &mut pc)?;
    for (idx, (e, h)) in h0.edges().iter().zip(members).enumerate() {
        for u in 0..n {
            for j in 0..h.n() {
                let at = (u, offsets[idx] + j);
                let v = a.get(at.0, at.1);
                if e.contains(u + 1) {
                    pb.see(v.clone(), at)?;
                } else {
                    expect_zero(v, "base-to-foreign-copy", at)?;
                }
            }
        }
    }
    let (a, _) = pa.get();
    let (b, _) = pb.get();
    let (c, c_vacuous) = pc.get();
    Ok(CoronaConstants {
        kind: CoronaKind::Edge,
        a,
        b,
        c,
        a_vacuous: false,
        c_vacuous,
        source: ConstantsSource::Oracle,
    })
}

/// Constants read off a small edgeless instance of the given geometry.
pub fn corona_constants_oracle(kind: CoronaKind, g: CoronaGeometry) -> Result<CoronaConstants> {
    g.validate(kind)?;
    match kind {
        CoronaKind::Vertex => {
            let h0 = empty_uniform(g.m, g.p);
            let members = vec![empty_uniform(g.m, g.n1)];
            let corona = vertex_corona(&h0, 1, g.p, &members, g.m)?;
            extract_vertex_constants(&corona, &h0, g.p, &members)
        }
        CoronaKind::Edge => {
            let h0 = complete_uniform(g.base_arity, g.base_arity, rational::one())?;
            let members = vec![empty_uniform(g.m, g.n1)];
            let corona = edge_corona(&h0, &members, g.m)?;
            extract_edge_constants(&corona, &h0, &members, g.m)
        }
    }
}

/// One constant compared across sources.
#[derive(Clone, Debug, Serialize)]
pub struct ConstantComparison {
    pub name: &'static str,
    #[serde(with = "rational::serde_rational")]
    pub oracle: Rational,
    #[serde(with = "rational::serde_rational")]
    pub published: Rational,
    pub vacuous: bool,
    pub agree: bool,
}

/// Oracle against published constants; vacuous constants are listed but
/// never count as disagreements.
pub fn compare_constants(oracle: &CoronaConstants, published: &CoronaConstants) -> Vec<ConstantComparison> {
    let row = |name, o: &Rational, p: &Rational, vacuous: bool| ConstantComparison {
        name,
        oracle: o.clone(),
        published: p.clone(),
        vacuous,
        agree: vacuous || o == p,
    };
    vec![
        row("a", &oracle.a, &published.a, oracle.a_vacuous),
        row("b", &oracle.b, &published.b, false),
        row("c", &oracle.c, &published.c, oracle.c_vacuous),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_multipartite, cycle_graph, loose_cycle, PartiteMode};
    use crate::rational::{int, ratio};

    fn single_edge() -> Hypergraph {
        complete_uniform(3, 3, int(1)).unwrap()
    }

    #[test]
    fn sub_join_examples() {
        let h = sub_join(&single_edge(), &[1], &empty_uniform(3, 2), 3).unwrap();
        assert_eq!(h.n(), 5);
        assert_eq!(h.edge_count(), 2);
        assert!(h.has_edge(&[1, 4, 5]));
        assert!(matches!(
            sub_join(&single_edge(), &[], &empty_uniform(3, 2), 3),
            Err(Error::ArityError(_))
        ));
        let h = sub_join(&single_edge(), &[1, 2], &empty_uniform(3, 2), 3).unwrap();
        assert_eq!(h.edge_count(), 1 + 4);
    }

    #[test]
    fn vertex_corona_layout() {
        let members = vec![empty_uniform(3, 1); 3];
        let h = vertex_corona(&single_edge(), 3, 1, &members, 3).unwrap();
        assert_eq!(h.n(), 6);
        // a cell of one vertex and a copy of one vertex cannot hold a 3-edge
        assert_eq!(h.edge_count(), 1);
        let members = vec![empty_uniform(3, 2); 3];
        let h = vertex_corona(&single_edge(), 3, 1, &members, 3).unwrap();
        assert_eq!(h.n(), 9);
        assert!(h.has_edge(&[1, 4, 5]) && h.has_edge(&[2, 6, 7]) && h.has_edge(&[3, 8, 9]));
        assert!(matches!(
            vertex_corona(&single_edge(), 2, 1, &members, 3),
            Err(Error::PartitionMismatch(_))
        ));
    }

    #[test]
    fn edge_corona_counts() {
        let h = edge_corona(&single_edge(), &[empty_uniform(3, 2)], 3).unwrap();
        assert_eq!(h.edge_count(), 1 + 9);
        assert!(matches!(edge_corona(&single_edge(), &[], 3), Err(Error::CountMismatch(_))));
        let c3 = cycle_graph(3).unwrap();
        let h = edge_corona(&c3, &vec![empty_uniform(2, 1); 3], 2).unwrap();
        assert_eq!(h.n(), 6);
        assert_eq!(h.edge_count(), 3 + 6);
    }

    #[test]
    fn zero_weight_cycle_gives_loose_cycle() {
        for (m, n) in [(3, 3), (4, 4), (5, 3)] {
            let base = Hypergraph::new(n, (1..=n).map(|i| (vec![i, i % n + 1], int(0)))).unwrap();
            let members = vec![empty_uniform(m, m - 2); n];
            let h = edge_corona(&base, &members, m).unwrap();
            let want = loose_cycle(m, 1, n).unwrap();
            let (x, y) = (h.adjacency_matrix().unwrap(), want.adjacency_matrix().unwrap());
            assert_eq!(charpoly(&x), charpoly(&y));
        }
    }

    fn charpoly(a: &RationalMatrix) -> crate::spectra::RationalPoly {
        crate::spectra::charpoly_exact(a).unwrap()
    }

    #[test]
    fn oracle_matches_formula() {
        for m in 2..=5 {
            for n1 in 1..=4 {
                for p in 1..=4 {
                    let g = CoronaGeometry::vertex(m, p, n1, p);
                    let o = corona_constants_oracle(CoronaKind::Vertex, g).unwrap();
                    let f = corona_constants_formula(CoronaKind::Vertex, g).unwrap();
                    assert_eq!((&o.a, &o.b, &o.c), (&f.a, &f.b, &f.c), "vertex {g:?}");
                    assert_eq!((o.a_vacuous, o.c_vacuous), (f.a_vacuous, f.c_vacuous));
                }
                for s in 2..=m {
                    if s + n1 < m {
                        continue;
                    }
                    let g = CoronaGeometry { base_arity: s, ..CoronaGeometry::edge(m, s, n1) };
                    let o = corona_constants_oracle(CoronaKind::Edge, g).unwrap();
                    let f = corona_constants_formula(CoronaKind::Edge, g).unwrap();
                    assert_eq!((&o.a, &o.b, &o.c), (&f.a, &f.b, &f.c), "edge {g:?}");
                }
            }
        }
    }

    #[test]
    fn edge_constants_examples() {
        let g = CoronaGeometry::edge(3, 3, 2);
        let o = corona_constants_oracle(CoronaKind::Edge, g).unwrap();
        assert_eq!(o.a, int(2));
        assert_eq!(o.b, ratio(3, 2));
        assert_eq!(o.c, ratio(3, 2));
        let p = corona_constants_published(CoronaKind::Edge, g).unwrap();
        assert_eq!(p.a, int(2));
        assert_eq!(p.c, int(3));
        let cmp = compare_constants(&o, &p);
        assert!(cmp[0].agree && !cmp[2].agree);
    }

    #[test]
    fn vertex_constants_examples() {
        let g = CoronaGeometry::vertex(3, 3, 1, 1);
        let o = corona_constants_oracle(CoronaKind::Vertex, g).unwrap();
        assert!(o.a_vacuous && o.c_vacuous);
        assert_eq!(o.a, int(0));
        let p = corona_constants_published(CoronaKind::Vertex, g).unwrap();
        assert_eq!(p.a, ratio(-1, 2));
        assert!(compare_constants(&o, &p)[0].agree);
    }

    #[test]
    fn extraction_on_real_instances() {
        let h0 = complete_multipartite(3, &[1, 1, 1], PartiteMode::Weak).unwrap();
        let k4 = complete_uniform(3, 4, int(1)).unwrap();
        let members = vec![k4.clone(), k4.clone(), k4];
        let h = vertex_corona(&h0, 3, 1, &members, 3).unwrap();
        let o = extract_vertex_constants(&h, &h0, 1, &members).unwrap();
        let f = corona_constants_formula(CoronaKind::Vertex, CoronaGeometry::vertex(3, 3, 4, 1)).unwrap();
        assert_eq!((o.b, o.c), (f.b, f.c));

        let base = complete_uniform(3, 4, int(1)).unwrap();
        let members = vec![empty_uniform(3, 2); 4];
        let h = edge_corona(&base, &members, 3).unwrap();
        let o = extract_edge_constants(&h, &base, &members, 3).unwrap();
        let f = corona_constants_formula(CoronaKind::Edge, CoronaGeometry::edge(3, 4, 2)).unwrap();
        assert_eq!((o.a, o.b, o.c), (f.a, f.b, f.c));
    }

    #[test]
    fn uneven_members_are_not_constant() {
        let h0 = empty_uniform(3, 2);
        let members = vec![complete_uniform(3, 3, int(1)).unwrap(), empty_uniform(3, 4)];
        let h = vertex_corona(&h0, 2, 1, &members, 3).unwrap();
        assert!(matches!(
            extract_vertex_constants(&h, &h0, 1, &members),
            Err(Error::NonConstantBlock(_))
        ));
    }
}
