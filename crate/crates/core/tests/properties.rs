use std::collections::BTreeSet;

use hyperspectra::cospectral::{are_cospectral, example_pair, gm_switch, CospectralMode, SwitchingPartition};
use hyperspectra::generators::empty_uniform;
use hyperspectra::joins::{
    join_coeff, join_coeff_oracle, join_on_backbone_nonuniform, quotient_from_regular_join, BackbonePlan, Coeff,
    JoinFamily,
};
use hyperspectra::partitions::{coarsest_equitable_partition, is_equitable, orbit_partition, satisfies_quotient};
use hyperspectra::rational::{self, int, ratio};
use hyperspectra::spectra::{adjacency_eigenvalues, charpoly_exact, max_deviation};
use hyperspectra::{Hypergraph, Partition, Rational};
use proptest::prelude::*;
use proptest::sample::subsequence;

/// Weighted hypergraphs on 2..=`max_n` vertices with edges of size 2..=4.
fn hypergraph(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (2..=max_n).prop_flat_map(|n| {
        let edge = (2..=n.min(4)).prop_flat_map(move |k| subsequence((1..=n).collect::<Vec<_>>(), k));
        let weight = (0i64..=4, 1i64..=3).prop_map(|(a, b)| ratio(a, b));
        prop::collection::vec((edge, weight), 0..8).prop_map(move |edges| {
            let mut seen = BTreeSet::new();
            let unique: Vec<(Vec<usize>, Rational)> =
                edges.into_iter().filter(|(e, _)| seen.insert(e.clone())).collect();
            Hypergraph::new(n, unique).expect("generated edges are valid")
        })
    })
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (Hypergraph, Vec<usize>)> {
    hypergraph(max_n).prop_flat_map(|h| {
        let perm = Just((1..=h.n()).collect::<Vec<_>>()).prop_shuffle();
        (Just(h), perm)
    })
}

/// Every set partition of `1..=n`, by restricted growth strings.
fn all_partitions(n: usize) -> Vec<Partition> {
    fn grow(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Partition>) {
        if prefix.len() == n {
            let blocks = prefix.iter().max().map_or(0, |&b| b + 1);
            let mut cells = vec![Vec::new(); blocks];
            for (v, &b) in prefix.iter().enumerate() {
                cells[b].push(v + 1);
            }
            out.push(Partition::new(n, cells).unwrap());
            return;
        }
        let next = prefix.iter().max().map_or(0, |&b| b + 1);
        for b in 0..=next {
            prefix.push(b);
            grow(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), n, &mut out);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn row_sums_are_valencies(h in hypergraph(7)) {
        let a = h.adjacency_matrix().unwrap();
        for i in 0..h.n() {
            let row: Rational = a.row(i).iter().sum();
            prop_assert_eq!(row, h.valency(i + 1).unwrap());
        }
    }

    #[test]
    fn adjacency_is_symmetric_with_zero_trace(h in hypergraph(7)) {
        let a = h.adjacency_matrix().unwrap();
        prop_assert!(a.is_symmetric());
        prop_assert_eq!(a.trace(), rational::zero());
    }

    #[test]
    fn trace_identities(h in hypergraph(7)) {
        let a = h.adjacency_matrix().unwrap();
        let f = charpoly_exact(&a).unwrap();
        let n = h.n();
        // x^n - (tr A) x^(n-1) + ((tr A)^2 - tr A^2)/2 x^(n-2) - ...
        let tr2 = a.mul(&a).trace();
        prop_assert_eq!(f.coeff(n - 1), rational::zero());
        prop_assert_eq!(f.coeff(n - 2), -tr2.clone() / int(2));
        let values = adjacency_eigenvalues(&h).unwrap();
        let sum_sq: f64 = values.iter().map(|x| x * x).sum();
        prop_assert!((sum_sq - rational::to_f64(&tr2)).abs() <= 1e-9 * (1.0 + sum_sq));
    }

    #[test]
    fn relabelling_preserves_spectrum((h, perm) in with_permutation(7)) {
        let g = h.relabel(&perm).unwrap();
        prop_assert_eq!(
            charpoly_exact(&h.adjacency_matrix().unwrap()).unwrap(),
            charpoly_exact(&g.adjacency_matrix().unwrap()).unwrap()
        );
        let d = max_deviation(&adjacency_eigenvalues(&h).unwrap(), &adjacency_eigenvalues(&g).unwrap()).unwrap();
        prop_assert!(d <= 1e-10);
    }

    #[test]
    fn coarsest_partition_is_equitable_and_stable(h in hypergraph(7)) {
        let pi = coarsest_equitable_partition(&h, None).unwrap();
        prop_assert!(is_equitable(&h, &pi).unwrap().equitable);
        let again = coarsest_equitable_partition(&h, Some(&pi)).unwrap();
        prop_assert_eq!(&again, &pi);
    }

    #[test]
    fn coarsest_partition_is_maximal(h in hypergraph(6)) {
        let coarsest = coarsest_equitable_partition(&h, None).unwrap();
        for pi in all_partitions(h.n()) {
            if is_equitable(&h, &pi).unwrap().equitable {
                prop_assert!(pi.refines(&coarsest));
            }
        }
    }

    #[test]
    fn orbits_refine_the_coarsest_partition(h in hypergraph(6)) {
        let orbits = orbit_partition(&h).unwrap();
        prop_assert!(is_equitable(&h, &orbits).unwrap().equitable);
        prop_assert!(orbits.refines(&coarsest_equitable_partition(&h, None).unwrap()));
    }

    #[test]
    fn coefficient_formula_matches_enumeration(
        m in 2usize..=6,
        sizes in prop::collection::vec(1usize..=4, 1..=4),
        pick in (0usize..4, 0usize..4),
    ) {
        prop_assume!(sizes.len() <= m && sizes.iter().sum::<usize>() <= 12);
        let k = sizes.len();
        let (p, q) = (pick.0 % k + 1, pick.1 % k + 1);
        let which = if p == q { Coeff::Pp(p) } else { Coeff::Pq(p, q) };
        prop_assume!(p != q || sizes[p - 1] >= 2);
        prop_assert_eq!(join_coeff(&sizes, m, which).unwrap(), join_coeff_oracle(&sizes, m, which).unwrap());
    }

    #[test]
    fn switching_is_an_involution(perm in Just((1..=8).collect::<Vec<usize>>()).prop_shuffle()) {
        let (h0, _) = example_pair();
        let h = h0.relabel(&perm).unwrap();
        let map = |vs: &[usize]| vs.iter().map(|&v| perm[v - 1]).collect::<Vec<_>>();
        let rho = SwitchingPartition::new(&h, 3, vec![map(&[1, 2, 3, 4, 5, 6])], map(&[7, 8])).unwrap();
        let once = gm_switch(&h, 3, &rho).unwrap();
        let twice = gm_switch(&once, 3, &rho).unwrap();
        prop_assert_eq!(twice.edges(), h.edges());
        prop_assert!(are_cospectral(&h, &once, CospectralMode::Exact).unwrap().cospectral);
    }

    #[test]
    fn nonuniform_join_quotient(
        sizes in prop::collection::vec(1usize..=3, 2..=3),
        w2 in 0i64..=3,
        w3 in 1i64..=3,
    ) {
        let total: usize = sizes.iter().sum();
        let k = sizes.len();
        let mut weights = std::collections::BTreeMap::new();
        for (card, w) in [(2usize, int(w2)), (3, ratio(w3, 2)), (4, int(1))] {
            if (k..=total).contains(&card) {
                weights.insert(card, w);
            }
        }
        prop_assume!(!weights.is_empty());
        let members: Vec<Hypergraph> = sizes.iter().map(|&n| empty_uniform(2, n)).collect();
        let plan = JoinFamily::nonuniform(members, weights).to_plan().unwrap();
        let h = join_on_backbone_nonuniform(&plan).unwrap();
        let b = quotient_from_regular_join(&plan).unwrap();
        prop_assert!(satisfies_quotient(&h.adjacency_matrix().unwrap(), &plan.partition().unwrap(), &b));
    }
}

#[test]
fn coarsest_partition_is_maximal_exhaustively() {
    let cases = [
        Hypergraph::unweighted(5, [[1, 2, 3], [3, 4, 5]]).unwrap(),
        Hypergraph::unweighted(6, [vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5], vec![5, 6]]).unwrap(),
        Hypergraph::new(4, [(vec![1, 2, 3], int(2)), (vec![2, 3, 4], int(1))]).unwrap(),
        Hypergraph::unweighted(6, [[1, 2, 3], [4, 5, 6], [1, 4, 5]]).unwrap(),
        empty_uniform(3, 4),
    ];
    for h in cases {
        let coarsest = coarsest_equitable_partition(&h, None).unwrap();
        for pi in all_partitions(h.n()) {
            if is_equitable(&h, &pi).unwrap().equitable {
                assert!(pi.refines(&coarsest), "{:?} is equitable but not below {:?}", pi.cells(), coarsest.cells());
            }
        }
    }
}

#[test]
fn backbone_plan_quotient_on_weighted_cycle() {
    let backbone = Hypergraph::new(
        4,
        [(vec![1, 2], int(1)), (vec![2, 3], int(2)), (vec![3, 4], ratio(1, 2)), (vec![1, 4], int(3))],
    )
    .unwrap();
    let parts = vec![empty_uniform(3, 2), empty_uniform(3, 3), empty_uniform(3, 1), empty_uniform(3, 2)];
    let plan = BackbonePlan::uniform(backbone, parts, 3).unwrap();
    let h = join_on_backbone_nonuniform(&plan).unwrap();
    let b = quotient_from_regular_join(&plan).unwrap();
    assert!(satisfies_quotient(&h.adjacency_matrix().unwrap(), &plan.partition().unwrap(), &b));
}
