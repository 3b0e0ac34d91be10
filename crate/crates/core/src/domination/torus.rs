//! Closed forms and checks for domination parameters of `C_m [] C_n`.

use std::time::Instant;

use serde::Serialize;

use super::{max_minimal_parameter, min_parameter, CyclicInstance, DominationError, Variant};
use crate::budget::Budget;
use crate::graph::{cartesian_cycles, column_shift_symmetry, columns_partition, Graph};
use crate::rational::Rational;

/// Largest graph on which the reproduction rows also run the plain
/// exhaustive `Gamma_t` enumeration.
const PLAIN_UPPER_LIMIT: usize = 20;

/// `ceil(4n/3)`, plus one when `n = 2 (mod 3)`.
pub fn h_pair(n: usize) -> usize {
    (4 * n).div_ceil(3) + usize::from(n % 3 == 2)
}

/// Smallest even integer at least `|V| / Delta`.
pub fn paired_lower_bound(g: &Graph) -> usize {
    let delta = g.max_degree();
    if delta == 0 {
        return g.n() + g.n() % 2;
    }
    let half = g.n().div_ceil(2 * delta);
    2 * half
}

fn torus_instance<T>(
    m: usize,
    n: usize,
    f: impl FnOnce(&CyclicInstance) -> Result<T, DominationError>,
) -> Result<T, DominationError> {
    let g = cartesian_cycles(m, n)?;
    let p = columns_partition(m, n)?;
    let shift = column_shift_symmetry(m, n);
    let inst = CyclicInstance::new(&g, &p, &shift)?;
    f(&inst)
}

/// `gamma_p(C_5 [] C_n) == h_pair(n)`, decided with the two prefix searches.
pub fn verify_theorem_t1(n: usize, budget: Budget) -> Result<bool, DominationError> {
    torus_instance(5, n, |inst| {
        inst.decide_parameter(
            Variant::PairedDominating,
            h_pair(n) as i64,
            Rational::HALF,
            budget,
        )
        .map(|d| d.holds)
    })
}

/// `Gamma_t(C_4 [] C_n) == 2n`, decided with the two prefix searches over
/// minimal total dominating sets.
pub fn verify_theorem_n4(n: usize, budget: Budget) -> Result<bool, DominationError> {
    torus_instance(4, n, |inst| {
        inst.decide_upper_parameter(
            Variant::TotalDominating,
            2 * n as i64,
            Rational::HALF,
            budget,
        )
        .map(|d| d.holds)
    })
}

/// One row of a reproduction table: the closed-form value, the prefix
/// decision, and an independent plain solver value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReproductionRow {
    pub graph: String,
    pub parameter: &'static str,
    pub n: usize,
    pub expected: usize,
    pub decision_holds: bool,
    pub solver_value: Option<usize>,
    pub nodes_explored: u64,
    pub pruned_by_prefix: u64,
    pub millis: u128,
    pub pass: bool,
}

pub fn reproduce_t1(n: usize, budget: Budget) -> Result<ReproductionRow, DominationError> {
    let start = Instant::now();
    let expected = h_pair(n);
    let decision = torus_instance(5, n, |inst| {
        inst.decide_parameter(
            Variant::PairedDominating,
            expected as i64,
            Rational::HALF,
            budget,
        )
    })?;
    let plain = min_parameter(&cartesian_cycles(5, n)?, Variant::PairedDominating, budget)?;
    Ok(ReproductionRow {
        graph: format!("C5xC{n}"),
        parameter: "paired-domination",
        n,
        expected,
        decision_holds: decision.holds,
        solver_value: Some(plain.value),
        nodes_explored: decision.nodes_explored,
        pruned_by_prefix: decision.pruned_by_prefix,
        millis: start.elapsed().as_millis(),
        pass: decision.holds && plain.value == expected,
    })
}

pub fn reproduce_n4(n: usize, budget: Budget) -> Result<ReproductionRow, DominationError> {
    let start = Instant::now();
    let expected = 2 * n;
    let decision = torus_instance(4, n, |inst| {
        inst.decide_upper_parameter(
            Variant::TotalDominating,
            expected as i64,
            Rational::HALF,
            budget,
        )
    })?;
    let plain = if 4 * n <= PLAIN_UPPER_LIMIT {
        Some(
            max_minimal_parameter(&cartesian_cycles(4, n)?, Variant::TotalDominating, budget)?
                .value,
        )
    } else {
        None
    };
    Ok(ReproductionRow {
        graph: format!("C4xC{n}"),
        parameter: "upper-total-domination",
        n,
        expected,
        decision_holds: decision.holds,
        solver_value: plain,
        nodes_explored: decision.nodes_explored,
        pruned_by_prefix: decision.pruned_by_prefix,
        millis: start.elapsed().as_millis(),
        pass: decision.holds && plain.is_none_or(|v| v == expected),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    #[test]
    fn closed_form_values() {
        let values: Vec<usize> = (3..=8).map(h_pair).collect();
        assert_eq!(values, vec![4, 6, 8, 8, 10, 12]);
    }

    #[test]
    fn lower_bound_values() {
        assert_eq!(paired_lower_bound(&cartesian_cycles(5, 3).unwrap()), 4);
        assert_eq!(paired_lower_bound(&cycle(6).unwrap()), 4);
        assert_eq!(paired_lower_bound(&cycle(8).unwrap()), 4);
        assert_eq!(paired_lower_bound(&Graph::empty(3)), 4);
    }

    #[test]
    fn small_torus_instances() {
        assert!(verify_theorem_t1(3, Budget::default()).unwrap());
        assert!(verify_theorem_n4(3, Budget::default()).unwrap());
        let row = reproduce_t1(4, Budget::default()).unwrap();
        assert!(row.pass, "{row:?}");
    }
}
