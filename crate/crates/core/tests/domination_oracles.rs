//! Solvers and prefix decisions against plain subset enumeration.

use proptest::prelude::*;

use cyclic_cert::domination::{
    is_paired_dominating, max_minimal_parameter, min_parameter, CyclicInstance, SetKind, Variant,
};
use cyclic_cert::graph::{
    cartesian_cycles, column_shift_symmetry, columns_partition, cycle, CyclicSymmetry,
    VertexPartition,
};
use cyclic_cert::{Budget, Direction, Graph, Rational, VertexSet};

fn open_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect()
}

fn dominates(open: &[u64], s: u64) -> bool {
    (0..open.len()).all(|u| s >> u & 1 == 1 || open[u] & s != 0)
}

fn totally_dominates(open: &[u64], s: u64) -> bool {
    (0..open.len()).all(|u| open[u] & s != 0)
}

fn has_matching(open: &[u64], s: u64) -> bool {
    if s == 0 {
        return true;
    }
    let u = s.trailing_zeros();
    let rest = s & !(1 << u);
    (0..open.len()).any(|w| {
        rest >> w & 1 == 1 && open[u as usize] >> w & 1 == 1 && has_matching(open, rest & !(1 << w))
    })
}

/// `(gamma, gamma_t, gamma_p, Gamma, Gamma_t)` by enumerating every subset;
/// minimality by "no proper subset qualifies".
fn brute_parameters(g: &Graph) -> [Option<usize>; 5] {
    let n = g.n();
    let open = open_masks(g);
    let size = 1usize << n;
    let dom: Vec<bool> = (0..size as u64).map(|s| dominates(&open, s)).collect();
    let td: Vec<bool> = (0..size as u64)
        .map(|s| totally_dominates(&open, s))
        .collect();
    let below = |table: &[bool]| {
        let mut c = table.to_vec();
        for s in 0..size {
            for v in 0..n {
                if s >> v & 1 == 1 && c[s & !(1 << v)] {
                    c[s] = true;
                }
            }
        }
        c
    };
    let (dom_below, td_below) = (below(&dom), below(&td));
    let mut out = [None; 5];
    let mut improve = |slot: usize, value: usize, smaller: bool| {
        let cur = &mut out[slot];
        if cur.is_none_or(|c| if smaller { value < c } else { value > c }) {
            *cur = Some(value);
        }
    };
    for s in 0..size {
        let k = (s as u64).count_ones() as usize;
        let proper = |c: &[bool]| (0..n).any(|v| s >> v & 1 == 1 && c[s & !(1 << v)]);
        if dom[s] {
            improve(0, k, true);
            if has_matching(&open, s as u64) {
                improve(2, k, true);
            }
            if !proper(&dom_below) {
                improve(3, k, false);
            }
        }
        if td[s] {
            improve(1, k, true);
            if !proper(&td_below) {
                improve(4, k, false);
            }
        }
    }
    out
}

fn graph_on(n: usize) -> impl Strategy<Value = Graph> {
    prop::collection::vec(prop::bool::weighted(0.4), n * (n - 1) / 2).prop_map(move |bits| {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn solvers_match_subset_enumeration(g in (2usize..=9).prop_flat_map(graph_on)) {
        let brute = brute_parameters(&g);
        let b = Budget::default();
        let ok = |r: Result<cyclic_cert::domination::SolveReport, _>| r.ok().map(|r| r.value);
        prop_assert_eq!(ok(min_parameter(&g, Variant::Dominating, b)), brute[0]);
        if g.isolated_vertex().is_none() {
            prop_assert_eq!(ok(min_parameter(&g, Variant::TotalDominating, b)), brute[1]);
            prop_assert_eq!(ok(max_minimal_parameter(&g, Variant::TotalDominating, b)), brute[4]);
        }
        prop_assert_eq!(ok(min_parameter(&g, Variant::PairedDominating, b)), brute[2]);
        prop_assert_eq!(ok(max_minimal_parameter(&g, Variant::Dominating, b)), brute[3]);
        if let Ok(rep) = min_parameter(&g, Variant::PairedDominating, b) {
            prop_assert!(is_paired_dominating(&g, &rep.witness));
            prop_assert_eq!(rep.witness.len(), rep.value);
        }
    }
}

fn torus(m: usize, n: usize) -> (Graph, VertexPartition, CyclicSymmetry) {
    (
        cartesian_cycles(m, n).unwrap(),
        columns_partition(m, n).unwrap(),
        column_shift_symmetry(m, n),
    )
}

#[test]
fn torus_values_match_enumeration() {
    for (m, n) in [(3, 3), (4, 3), (5, 3), (4, 4), (5, 4)] {
        let g = cartesian_cycles(m, n).unwrap();
        let brute = brute_parameters(&g);
        let b = Budget::default();
        assert_eq!(
            Some(min_parameter(&g, Variant::Dominating, b).unwrap().value),
            brute[0]
        );
        assert_eq!(
            Some(
                min_parameter(&g, Variant::TotalDominating, b)
                    .unwrap()
                    .value
            ),
            brute[1]
        );
        assert_eq!(
            Some(
                min_parameter(&g, Variant::PairedDominating, b)
                    .unwrap()
                    .value
            ),
            brute[2]
        );
        assert_eq!(
            Some(
                max_minimal_parameter(&g, Variant::TotalDominating, b)
                    .unwrap()
                    .value
            ),
            brute[4]
        );
    }
    assert_eq!(
        brute_parameters(&cartesian_cycles(5, 3).unwrap())[2],
        Some(4)
    );
    assert_eq!(
        brute_parameters(&cartesian_cycles(5, 4).unwrap())[2],
        Some(6)
    );
    assert_eq!(
        brute_parameters(&cartesian_cycles(4, 4).unwrap())[4],
        Some(8)
    );
}

#[test]
fn decision_equals_solver_for_every_h() {
    for (m, n) in [(3, 3), (4, 3), (5, 3)] {
        let (g, p, s) = torus(m, n);
        let inst = CyclicInstance::new(&g, &p, &s).unwrap();
        for variant in [
            Variant::Dominating,
            Variant::TotalDominating,
            Variant::PairedDominating,
        ] {
            let value = min_parameter(&g, variant, Budget::default()).unwrap().value;
            for h in 1..=g.n() {
                let d = inst
                    .decide_parameter(variant, h as i64, Rational::HALF, Budget::default())
                    .unwrap();
                assert_eq!(d.holds, value == h, "C{m}xC{n} {variant:?} h={h}");
                if let Some(w) = &d.witness {
                    assert!(variant.accepts(&g, w).unwrap());
                    assert_eq!(d.certificate.as_ref().map(|c| c.k), Some(1));
                }
            }
        }
        let upper = max_minimal_parameter(&g, Variant::TotalDominating, Budget::default())
            .unwrap()
            .value;
        for h in 1..=g.n() {
            let d = inst
                .decide_upper_parameter(
                    Variant::TotalDominating,
                    h as i64,
                    Rational::HALF,
                    Budget::default(),
                )
                .unwrap();
            assert_eq!(d.holds, upper == h, "C{m}xC{n} upper h={h}");
        }
        if g.regular_degree().is_some() {
            let gamma = min_parameter(&g, Variant::Dominating, Budget::default())
                .unwrap()
                .value;
            for h in 1..=g.n() {
                let d = inst
                    .decide_domination_via_rd(h as i64, Rational::HALF, Budget::default())
                    .unwrap();
                assert_eq!(d.holds, gamma == h, "C{m}xC{n} rd h={h}");
            }
        }
    }
}

#[test]
fn part_counts_add_up() {
    let (g, p, s) = torus(5, 4);
    let inst = CyclicInstance::new(&g, &p, &s).unwrap();
    for mask in [0u64, 0b1011, 0xF0F0F, (1 << 20) - 1] {
        let set = VertexSet::from_mask(20, mask);
        assert_eq!(inst.part_counts(&set).iter().sum::<i64>(), set.len() as i64);
    }
}

#[test]
fn prefix_search_respects_its_bound() {
    // On C_8 with singleton parts every dominating set found below 3 + 1/2
    // keeps each prefix under j * 3.5 / 8.
    let g = cycle(8).unwrap();
    let p = VertexPartition::new(8, (0..8).map(|v| vec![v]).collect()).unwrap();
    let shift = CyclicSymmetry::new((0..8).map(|v| (v + 1) % 8).collect()).unwrap();
    let inst = CyclicInstance::new(&g, &p, &shift).unwrap();
    let bound = Rational::from_integer(3) + Rational::HALF;
    let rep = inst
        .prefix_pruned_search(
            SetKind::Dominating,
            bound,
            Direction::Below,
            Budget::default(),
        )
        .unwrap();
    let w = rep.witness.unwrap();
    let mut prefix = 0;
    for (j, c) in inst.part_counts(&w).into_iter().enumerate() {
        prefix += c;
        assert!(Rational::from_integer(prefix * 8) < bound * (j as i64 + 1));
    }
    // gamma(C_8) = 3, so nothing fits under 2 + 1/2 and the bound must prune.
    let none = inst
        .prefix_pruned_search(
            SetKind::Dominating,
            bound - Rational::ONE,
            Direction::Below,
            Budget::default(),
        )
        .unwrap();
    assert!(none.witness.is_none());
    assert!(none.pruned_by_prefix > 0);
}
