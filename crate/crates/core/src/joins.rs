//! Weighted joins of hypergraph families, optionally laid out on a backbone.
//!
//! A backbone edge `e` over participants `S_e` contributes, for every
//! cardinality `m` it carries, all `m`-subsets of the union of the blocks in
//! `S_e` that meet every block, at weight `w_m`. The uniform join is the
//! special case of a single cardinality, and the join of a set is a backbone
//! with one edge.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::combinatorics::{bounded_compositions, crossing_subsets};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::limits::{self, MAX_ORACLE_VERTICES};
use crate::matrix::RationalMatrix;
use crate::partitions::Partition;
use crate::rational::{self, binom, Rational};
use crate::spectra::{eigenvalues, SpectrumReport, SpectrumSource};

/// Which join coefficient to compute; indices are 1-based positions in the
/// size vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coeff {
    Pp(usize),
    Pq(usize, usize),
}

fn check_coeff(sizes: &[usize], m: usize, which: Coeff) -> Result<()> {
    let k = sizes.len();
    if m < 2 {
        return Err(Error::ArityError(format!("arity m = {m} must be at least 2")));
    }
    if k == 0 || k > m {
        return Err(Error::ArityError(format!("need 1 <= k <= m, got k = {k}, m = {m}")));
    }
    if sizes.contains(&0) {
        return Err(Error::ArityError("block sizes must be positive".into()));
    }
    let in_range = |p: usize| (1..=k).contains(&p);
    match which {
        Coeff::Pp(p) => {
            if !in_range(p) {
                return Err(Error::ArityError(format!("block {p} outside 1..={k}")));
            }
            if sizes[p - 1] < 2 {
                return Err(Error::ArityError(format!("block {p} needs at least two vertices")));
            }
        }
        Coeff::Pq(p, q) => {
            if !in_range(p) || !in_range(q) || p == q {
                return Err(Error::ArityError(format!("need distinct blocks in 1..={k}, got {p}, {q}")));
            }
        }
    }
    Ok(())
}

/// Closed-form coefficient: a sum of binomial products over compositions of
/// `m - 2`, divided by `m - 1`.
pub fn join_coeff(sizes: &[usize], m: usize, which: Coeff) -> Result<Rational> {
    check_coeff(sizes, m, which)?;
    let k = sizes.len();
    // upper indices of the binomials and lower bounds of the parts
    let mut tops: Vec<i64> = sizes.iter().map(|&n| n as i64).collect();
    let mut mins = vec![1usize; k];
    match which {
        Coeff::Pp(p) => {
            tops[p - 1] -= 2;
            mins[p - 1] = 0;
        }
        Coeff::Pq(p, q) => {
            tops[p - 1] -= 1;
            tops[q - 1] -= 1;
            mins[p - 1] = 0;
            mins[q - 1] = 0;
        }
    }
    let maxs = vec![m - 2; k];
    let mut total = num_bigint::BigInt::zero();
    for comp in bounded_compositions(m - 2, &mins, &maxs) {
        let mut term = num_bigint::BigInt::from(1);
        for (top, &i) in tops.iter().zip(&comp) {
            term *= binom(*top, i as i64);
            if term.is_zero() {
                break;
            }
        }
        total += term;
    }
    Ok(Rational::new(total, (m as i64 - 1).into()))
}

pub fn join_coeff_pp(sizes: &[usize], m: usize, p: usize) -> Result<Rational> {
    join_coeff(sizes, m, Coeff::Pp(p))
}

pub fn join_coeff_pq(sizes: &[usize], m: usize, p: usize, q: usize) -> Result<Rational> {
    join_coeff(sizes, m, Coeff::Pq(p, q))
}

/// The same coefficient by listing every crossing `m`-subset and counting
/// those through a fixed pair of vertices.
pub fn join_coeff_oracle(sizes: &[usize], m: usize, which: Coeff) -> Result<Rational> {
    check_coeff(sizes, m, which)?;
    limits::check("coefficient oracle vertices", sizes.iter().sum(), MAX_ORACLE_VERTICES)?;
    let blocks = crate::generators::consecutive_blocks(sizes);
    let (u, v) = match which {
        Coeff::Pp(p) => (blocks[p - 1][0], blocks[p - 1][1]),
        Coeff::Pq(p, q) => (blocks[p - 1][0], blocks[q - 1][0]),
    };
    let count = crossing_subsets(&blocks, m)
        .iter()
        .filter(|e| e.contains(&u) && e.contains(&v))
        .count();
    Ok(rational::ratio(count as i64, m as i64 - 1))
}

/// Cross-edge weights keyed by cardinality.
pub type CardinalityWeights = BTreeMap<usize, Rational>;

/// Members of a join of a set together with their cross-edge weights.
#[derive(Clone, Debug)]
pub struct JoinFamily {
    pub members: Vec<Hypergraph>,
    pub weights: CardinalityWeights,
}

impl JoinFamily {
    /// Uniform join: every member must be `m`-uniform (or edgeless) and
    /// `k <= m`.
    pub fn uniform(members: Vec<Hypergraph>, m: usize, ws: Rational) -> Result<Self> {
        let k = members.len();
        if k > m {
            return Err(Error::ArityError(format!("{k} members exceed arity m = {m}")));
        }
        if let Some(i) = members.iter().position(|h| !h.fits_arity(m)) {
            return Err(Error::ArityError(format!("member {} is not {m}-uniform", i + 1)));
        }
        Ok(Self {
            members,
            weights: BTreeMap::from([(m, ws)]),
        })
    }

    /// Non-uniform join with one weight per cardinality.
    pub fn nonuniform(members: Vec<Hypergraph>, weights: CardinalityWeights) -> Self {
        Self { members, weights }
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(Hypergraph::n).collect()
    }

    /// The equivalent backbone plan: one backbone edge over all members.
    pub fn to_plan(&self) -> Result<BackbonePlan> {
        let k = self.members.len();
        if k == 0 {
            return Err(Error::ArityError("a join needs at least one member".into()));
        }
        if k == 1 {
            // nothing to cross: the single member is returned unchanged
            let backbone = Hypergraph::unweighted(1, Vec::<Vec<usize>>::new())?;
            return BackbonePlan::nonuniform(backbone, self.members.clone(), Vec::new());
        }
        let backbone = Hypergraph::unweighted(k, [(1..=k).collect::<Vec<_>>()])?;
        BackbonePlan::nonuniform(backbone, self.members.clone(), vec![self.weights.clone()])
    }
}

/// A backbone hypergraph, one participant per backbone vertex, and for each
/// backbone edge (in the backbone's edge order) the cardinalities and
/// weights of its cross edges.
#[derive(Clone, Debug)]
pub struct BackbonePlan {
    pub backbone: Hypergraph,
    pub participants: Vec<Hypergraph>,
    pub edge_weights: Vec<CardinalityWeights>,
}

impl BackbonePlan {
    /// Uniform plan: backbone edge `e` carries arity `m` at weight `W_b(e)`.
    pub fn uniform(backbone: Hypergraph, participants: Vec<Hypergraph>, m: usize) -> Result<Self> {
        if let Some(e) = backbone.edges().iter().find(|e| e.len() > m) {
            return Err(Error::ArityError(format!(
                "backbone edge {:?} is larger than m = {m}",
                e.vertices()
            )));
        }
        if let Some(i) = participants.iter().position(|h| !h.fits_arity(m)) {
            return Err(Error::ArityError(format!("participant {} is not {m}-uniform", i + 1)));
        }
        let edge_weights = backbone
            .edges()
            .iter()
            .map(|e| BTreeMap::from([(m, e.weight().clone())]))
            .collect();
        Self::nonuniform(backbone, participants, edge_weights)
    }

    /// Plan with explicit cardinality sets `T_e` and weights per edge.
    pub fn nonuniform(
        backbone: Hypergraph,
        participants: Vec<Hypergraph>,
        edge_weights: Vec<CardinalityWeights>,
    ) -> Result<Self> {
        if participants.len() != backbone.n() {
            return Err(Error::CountMismatch(format!(
                "{} participants for a backbone on {} vertices",
                participants.len(),
                backbone.n()
            )));
        }
        if edge_weights.len() != backbone.edge_count() {
            return Err(Error::CountMismatch(format!(
                "{} cardinality sets for {} backbone edges",
                edge_weights.len(),
                backbone.edge_count()
            )));
        }
        let plan = Self {
            backbone,
            participants,
            edge_weights,
        };
        for (e, t) in plan.backbone.edges().iter().zip(&plan.edge_weights) {
            if e.len() < 2 {
                return Err(Error::ArityError(format!(
                    "backbone edge {:?} must join at least two participants",
                    e.vertices()
                )));
            }
            let total = plan.edge_sizes(e.vertices()).iter().sum::<usize>();
            for (&card, w) in t {
                if rational::is_negative(w) {
                    return Err(Error::NegativeWeight {
                        edge: e.vertices().to_vec(),
                        weight: rational::format_rational(w),
                    });
                }
                if card < e.len() {
                    return Err(Error::BadCardinalitySet(format!(
                        "cardinality {card} cannot meet {} blocks",
                        e.len()
                    )));
                }
                if card > total {
                    return Err(Error::InsufficientVertices(format!(
                        "cardinality {card} exceeds the {total} vertices of blocks {:?}",
                        e.vertices()
                    )));
                }
            }
        }
        Ok(plan)
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.participants.iter().map(Hypergraph::n).collect()
    }

    fn edge_sizes(&self, e: &[usize]) -> Vec<usize> {
        e.iter().map(|&j| self.participants[j - 1].n()).collect()
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        crate::generators::consecutive_blocks(&self.sizes())
    }

    /// The block partition `{V_1, .., V_n}` of the joined hypergraph.
    pub fn partition(&self) -> Result<Partition> {
        Partition::from_sizes(&self.sizes())
    }

    /// `sum over backbone edges e containing p of sum_m w_m d^{S_e(m)}_{pp}`
    /// (zero when block `p` has a single vertex).
    pub fn diagonal_shift(&self, p: usize) -> Result<Rational> {
        let mut total = rational::zero();
        if self.participants[p - 1].n() < 2 {
            return Ok(total);
        }
        for (e, t) in self.backbone.edges().iter().zip(&self.edge_weights) {
            if let Some(pos) = e.vertices().iter().position(|&v| v == p) {
                let sizes = self.edge_sizes(e.vertices());
                for (&card, w) in t {
                    total += w * join_coeff(&sizes, card, Coeff::Pp(pos + 1))?;
                }
            }
        }
        Ok(total)
    }

    /// `sum over backbone edges e containing p and q of sum_m w_m d^{S_e(m)}_{pq}`.
    pub fn cross_coefficient(&self, p: usize, q: usize) -> Result<Rational> {
        let mut total = rational::zero();
        for (e, t) in self.backbone.edges().iter().zip(&self.edge_weights) {
            let vs = e.vertices();
            let (Some(a), Some(b)) = (vs.iter().position(|&v| v == p), vs.iter().position(|&v| v == q)) else {
                continue;
            };
            let sizes = self.edge_sizes(vs);
            for (&card, w) in t {
                total += w * join_coeff(&sizes, card, Coeff::Pq(a + 1, b + 1))?;
            }
        }
        Ok(total)
    }
}

/// Build the joined hypergraph: participant blocks laid out consecutively,
/// participant edges kept with their weights, cross edges added per backbone
/// edge and cardinality.
pub fn join_on_backbone_nonuniform(plan: &BackbonePlan) -> Result<Hypergraph> {
    let sizes = plan.sizes();
    let n: usize = sizes.iter().sum();
    limits::check_enum("join vertices", n)?;
    if n == 0 {
        return Err(Error::NoVertices);
    }
    let blocks = plan.blocks();
    let mut edges: Vec<(Vec<usize>, Rational)> = Vec::new();
    for (h, block) in plan.participants.iter().zip(&blocks) {
        let offset = block.first().map_or(0, |f| f - 1);
        for e in h.edges() {
            edges.push((e.vertices().iter().map(|v| v + offset).collect(), e.weight().clone()));
        }
    }
    for (e, t) in plan.backbone.edges().iter().zip(&plan.edge_weights) {
        let local: Vec<Vec<usize>> = e.vertices().iter().map(|&j| blocks[j - 1].clone()).collect();
        for (&card, w) in t {
            for s in crossing_subsets(&local, card) {
                edges.push((s, w.clone()));
            }
        }
    }
    let mut h = Hypergraph::new(n, edges)?;
    let ranks: Vec<usize> = plan
        .participants
        .iter()
        .filter_map(Hypergraph::declared_rank)
        .chain(plan.edge_weights.iter().flat_map(|t| t.keys().copied()))
        .collect();
    if let Some(&r) = ranks.first() {
        if ranks.iter().all(|&x| x == r) {
            h = h.with_declared_rank(r);
        }
    }
    Ok(h)
}

/// Uniform join on a backbone.
pub fn join_on_backbone(backbone: &Hypergraph, participants: &[Hypergraph], m: usize) -> Result<Hypergraph> {
    join_on_backbone_nonuniform(&BackbonePlan::uniform(backbone.clone(), participants.to_vec(), m)?)
}

/// Uniform join of a set.
pub fn join_set(family: &JoinFamily) -> Result<Hypergraph> {
    join_on_backbone_nonuniform(&family.to_plan()?)
}

/// Non-uniform join of a set; the cardinalities must lie in `k..=sum n_i`.
pub fn join_set_nonuniform(family: &JoinFamily) -> Result<Hypergraph> {
    let k = family.members.len();
    let total: usize = family.sizes().iter().sum();
    if let Some(&bad) = family.weights.keys().find(|&&c| c < k || c > total) {
        return Err(Error::BadCardinalitySet(format!(
            "cardinality {bad} is outside {k}..={total}"
        )));
    }
    join_set(family)
}

/// The adjacency matrix assembled from the participants' adjacencies and
/// the join coefficients, without building any edges.
pub fn block_formula_adjacency(plan: &BackbonePlan) -> Result<RationalMatrix> {
    let blocks = plan.blocks();
    let n: usize = plan.sizes().iter().sum();
    let mut a = RationalMatrix::zeros(n);
    let k = blocks.len();
    for p in 1..=k {
        let ap = plan.participants[p - 1].adjacency_matrix()?;
        let shift = plan.diagonal_shift(p)?;
        let bp = &blocks[p - 1];
        for (x, &i) in bp.iter().enumerate() {
            for (y, &j) in bp.iter().enumerate() {
                if i != j {
                    a.set(i - 1, j - 1, ap.get(x, y) + &shift);
                }
            }
        }
        for q in 1..=k {
            if q == p {
                continue;
            }
            let c = plan.cross_coefficient(p, q)?;
            if c.is_zero() {
                continue;
            }
            for &i in bp {
                for &j in &blocks[q - 1] {
                    a.set(i - 1, j - 1, c.clone());
                }
            }
        }
    }
    Ok(a)
}

/// Quotient of the block partition for regular participants:
/// `B_pp = r_p + (n_p - 1) shift_p`, `B_pq = n_q coeff_pq`.
pub fn quotient_from_regular_join(plan: &BackbonePlan) -> Result<RationalMatrix> {
    let k = plan.participants.len();
    let mut b = RationalMatrix::zeros(k);
    for p in 1..=k {
        let hp = &plan.participants[p - 1];
        let r = hp
            .regularity()
            .ok_or_else(|| Error::NotRegular(format!("participant {p}")))?;
        let np = rational::int(hp.n() as i64);
        b.set(p - 1, p - 1, r + (np - rational::one()) * plan.diagonal_shift(p)?);
        for q in 1..=k {
            if q != p {
                let nq = rational::int(plan.participants[q - 1].n() as i64);
                b.set(p - 1, q - 1, nq * plan.cross_coefficient(p, q)?);
            }
        }
    }
    Ok(b)
}

/// A shifted participant eigenvalue predicted to appear in the join.
#[derive(Clone, Debug, Serialize)]
pub struct ShiftPrediction {
    pub participant: usize,
    pub lambda: f64,
    pub shifted: f64,
    pub multiplicity: usize,
}

/// Grouping tolerance for participant eigenvalues.
pub const PARTICIPANT_GROUP_TOL: f64 = 1e-9;

/// For every regular participant `p` and every eigenvalue `lambda` of
/// `A_{H_p}` other than one copy of its valency, `lambda - shift_p` with
/// the multiplicity of `lambda`.
pub fn predicted_shifted_eigenvalues(plan: &BackbonePlan) -> Result<Vec<ShiftPrediction>> {
    let mut out = Vec::new();
    for (idx, hp) in plan.participants.iter().enumerate() {
        let p = idx + 1;
        let r = hp
            .regularity()
            .ok_or_else(|| Error::NotRegular(format!("participant {p}")))?;
        let r = rational::to_f64(&r);
        let mut vals = eigenvalues(&hp.adjacency_matrix()?.to_real())?;
        // drop the copy of r carried by the all-ones vector
        let pos = vals
            .iter()
            .enumerate()
            .min_by(|a, b| (a.1 - r).abs().total_cmp(&(b.1 - r).abs()))
            .map(|(i, _)| i);
        if let Some(i) = pos {
            vals.remove(i);
        }
        if vals.is_empty() {
            continue;
        }
        let shift = rational::to_f64(&plan.diagonal_shift(p)?);
        let grouped = SpectrumReport::from_values(&vals, SpectrumSource::Numeric, PARTICIPANT_GROUP_TOL);
        for e in grouped.eigenvalues {
            out.push(ShiftPrediction {
                participant: p,
                lambda: e.value,
                shifted: e.value - shift,
                multiplicity: e.multiplicity,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        complete_graph_unit, complete_multipartite, complete_uniform, cycle_graph, empty_uniform, path_graph,
        PartiteMode,
    };
    use crate::partitions::satisfies_quotient;
    use crate::rational::{int, ratio};
    use crate::spectra::adjacency_eigenvalues;

    #[test]
    fn coefficient_examples() {
        assert_eq!(join_coeff_pp(&[2, 2], 3, 1).unwrap(), int(1));
        assert_eq!(join_coeff_pq(&[2, 2], 3, 1, 2).unwrap(), int(1));
        assert_eq!(join_coeff_pq(&[1, 1, 1], 3, 1, 2).unwrap(), ratio(1, 2));
        for which in [Coeff::Pp(1), Coeff::Pq(1, 2)] {
            assert_eq!(
                join_coeff(&[2, 2], 3, which).unwrap(),
                join_coeff_oracle(&[2, 2], 3, which).unwrap()
            );
        }
        assert!(join_coeff_pp(&[1, 2], 3, 1).is_err());
        assert!(join_coeff_pq(&[1, 1, 1, 1], 3, 1, 2).is_err());
        assert!(join_coeff_pq(&[2, 2], 3, 1, 1).is_err());
    }

    #[test]
    fn join_set_examples() {
        let members = vec![empty_uniform(3, 1), empty_uniform(3, 1), empty_uniform(3, 2)];
        let h = join_set(&JoinFamily::uniform(members, 3, int(1)).unwrap()).unwrap();
        let want = complete_multipartite(3, &[1, 1, 2], PartiteMode::Weak).unwrap();
        assert_eq!(h.edges(), want.edges());

        let members = vec![empty_uniform(3, 2), empty_uniform(3, 3), empty_uniform(3, 1)];
        let h = join_set(&JoinFamily::uniform(members, 3, int(1)).unwrap()).unwrap();
        let want = complete_multipartite(3, &[2, 3, 1], PartiteMode::Weak).unwrap();
        assert_eq!(h.edges(), want.edges());
    }

    #[test]
    fn zero_weight_is_block_diagonal() {
        let k3 = complete_uniform(3, 3, int(1)).unwrap();
        let fam = JoinFamily::uniform(vec![k3.clone(), k3.clone()], 3, int(0)).unwrap();
        let h = join_set(&fam).unwrap();
        assert!(h.edge_count() > 2);
        let a = h.adjacency_matrix().unwrap();
        for i in 0..3 {
            for j in 3..6 {
                assert!(a.get(i, j).is_zero());
            }
        }
    }

    #[test]
    fn insufficient_vertices() {
        let fam = JoinFamily::uniform(vec![empty_uniform(4, 1), empty_uniform(4, 2)], 4, int(1)).unwrap();
        assert!(matches!(join_set(&fam), Err(Error::InsufficientVertices(_))));
    }

    #[test]
    fn backbone_examples() {
        let parts = vec![empty_uniform(3, 2), empty_uniform(3, 2)];
        let a = join_on_backbone(&path_graph(2).unwrap(), &parts, 3).unwrap();
        let b = join_set(&JoinFamily::uniform(parts, 3, int(1)).unwrap()).unwrap();
        assert_eq!(a.edges(), b.edges());

        let parts = vec![empty_uniform(3, 2), empty_uniform(3, 3), empty_uniform(3, 4)];
        let h = join_on_backbone(&complete_uniform(3, 3, int(1)).unwrap(), &parts, 3).unwrap();
        let want = complete_multipartite(3, &[2, 3, 4], PartiteMode::Weak).unwrap();
        assert_eq!(h.edges(), want.edges());

        let parts = vec![empty_uniform(3, 2); 3];
        let h = join_on_backbone(&cycle_graph(3).unwrap(), &parts, 3).unwrap();
        assert_eq!(h.n(), 6);
        assert_eq!(h.edge_count(), 3 * 4);
    }

    #[test]
    fn backbone_larger_than_arity() {
        // K^3_4 backbone with four parts gives the strong 4-partite hypergraph
        let parts = vec![empty_uniform(3, 1), empty_uniform(3, 2), empty_uniform(3, 1), empty_uniform(3, 2)];
        let h = join_on_backbone(&complete_uniform(3, 4, int(1)).unwrap(), &parts, 3).unwrap();
        let want = complete_multipartite(3, &[1, 2, 1, 2], PartiteMode::Strong).unwrap();
        assert_eq!(h.edges(), want.edges());
        assert!(join_on_backbone(&complete_uniform(4, 4, int(1)).unwrap(), &parts, 3).is_err());
    }

    #[test]
    fn nonuniform_examples() {
        let w = BTreeMap::from([(2, int(1))]);
        let h = join_set_nonuniform(&JoinFamily::nonuniform(vec![empty_uniform(2, 1), empty_uniform(2, 1)], w)).unwrap();
        assert_eq!(h.edge_count(), 1);

        let w = BTreeMap::from([(2, int(1)), (3, int(1))]);
        let fam = JoinFamily::nonuniform(vec![empty_uniform(3, 2), empty_uniform(3, 2)], w);
        let h = join_set_nonuniform(&fam).unwrap();
        assert_eq!(h.edge_count(), 4 + 4);
        let plan = fam.to_plan().unwrap();
        assert_eq!(block_formula_adjacency(&plan).unwrap(), h.adjacency_matrix().unwrap());

        let h = join_set_nonuniform(&JoinFamily::nonuniform(vec![empty_uniform(3, 2), empty_uniform(3, 2)], BTreeMap::new())).unwrap();
        assert_eq!(h.edge_count(), 0);

        let w = BTreeMap::from([(1, int(1))]);
        let fam = JoinFamily::nonuniform(vec![empty_uniform(3, 2), empty_uniform(3, 2)], w);
        assert!(matches!(join_set_nonuniform(&fam), Err(Error::BadCardinalitySet(_))));
    }

    #[test]
    fn quotient_and_block_formula() {
        let k3 = complete_uniform(3, 3, int(1)).unwrap();
        let k4 = complete_uniform(3, 4, int(1)).unwrap();
        let e2 = empty_uniform(3, 2);
        let backbone = Hypergraph::new(3, [(vec![1, 2], ratio(3, 2)), (vec![2, 3], int(1)), (vec![1, 2, 3], ratio(1, 2))]).unwrap();
        let plan = BackbonePlan::uniform(backbone, vec![k3, k4, e2], 3).unwrap();
        let h = join_on_backbone_nonuniform(&plan).unwrap();
        let a = h.adjacency_matrix().unwrap();
        assert_eq!(block_formula_adjacency(&plan).unwrap(), a);
        let b = quotient_from_regular_join(&plan).unwrap();
        assert!(satisfies_quotient(&a, &plan.partition().unwrap(), &b));
    }

    #[test]
    fn example_quotient_values() {
        let parts = vec![empty_uniform(3, 2); 3];
        let plan = BackbonePlan::uniform(complete_uniform(3, 3, int(1)).unwrap(), parts, 3).unwrap();
        let b = quotient_from_regular_join(&plan).unwrap();
        let (z, t) = (int(0), int(2));
        let want = RationalMatrix::from_rows(vec![
            vec![z.clone(), t.clone(), t.clone()],
            vec![t.clone(), z.clone(), t.clone()],
            vec![t.clone(), t, z],
        ]);
        assert_eq!(b, want);
        let single = JoinFamily::uniform(vec![complete_uniform(3, 4, int(1)).unwrap()], 3, int(1)).unwrap();
        let b = quotient_from_regular_join(&single.to_plan().unwrap()).unwrap();
        assert_eq!(b, RationalMatrix::from_rows(vec![vec![int(3)]]));
    }

    #[test]
    fn shifted_eigenvalues_appear() {
        let parts = vec![empty_uniform(3, 2), empty_uniform(3, 3), empty_uniform(3, 4)];
        let plan = BackbonePlan::uniform(complete_uniform(3, 3, int(1)).unwrap(), parts, 3).unwrap();
        let h = join_on_backbone_nonuniform(&plan).unwrap();
        let spec = SpectrumReport::from_values(&adjacency_eigenvalues(&h).unwrap(), SpectrumSource::Numeric, 1e-7);
        for pred in predicted_shifted_eigenvalues(&plan).unwrap() {
            let d = join_coeff_pp(&plan.sizes(), 3, pred.participant).unwrap();
            assert!((pred.shifted + rational::to_f64(&d)).abs() < 1e-12);
            assert_eq!(pred.multiplicity, plan.sizes()[pred.participant - 1] - 1);
            assert!(spec.multiplicity_near(pred.shifted, 1e-7) >= pred.multiplicity);
        }
    }

    #[test]
    fn graph_join_sanity() {
        // K_2 joined with K_1 as graphs is K_3
        let fam = JoinFamily::uniform(vec![complete_graph_unit(2).unwrap(), empty_uniform(2, 1)], 2, int(1)).unwrap();
        let plan = fam.to_plan().unwrap();
        let preds = predicted_shifted_eigenvalues(&plan).unwrap();
        assert_eq!(preds.len(), 1);
        assert!((preds[0].shifted + 1.0).abs() < 1e-12);
        let h = join_set(&fam).unwrap();
        assert_eq!(h.edges(), complete_graph_unit(3).unwrap().edges());
    }

    #[test]
    fn irregular_participant_rejected() {
        let p = crate::generators::loose_path(3, 1, 2).unwrap();
        let plan = BackbonePlan::uniform(path_graph(2).unwrap(), vec![p, empty_uniform(3, 1)], 3).unwrap();
        assert!(matches!(predicted_shifted_eigenvalues(&plan), Err(Error::NotRegular(_))));
        assert!(matches!(quotient_from_regular_join(&plan), Err(Error::NotRegular(_))));
    }
}
