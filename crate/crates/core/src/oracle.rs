//! Independent cross-checks of the closed-form results.
//!
//! * `c = 1`: the formula against the exterior square and against Schur's
//!   direct-product recursion.
//! * Witt counts against explicit Hall-basis enumeration.
//! * Iterated Witt counts against explicit iterated basic-commutator sets.
//!
//! All comparisons are exact.

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::abelian::{direct_sum, exterior_square, tensor_product, FgAbelianGroup};
use crate::arith::{divisors, iterated_witt, power, witt, BigCount};
use crate::class_row::ClassRow;
use crate::error::{Error, Result, DEFAULT_RESOURCE_CAP};
use crate::hall::{Alphabet, Hall};
use crate::multiplier::nilpotent_multiplier;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckValue {
    Group(FgAbelianGroup),
    Count(BigCount),
}

impl fmt::Display for CheckValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckValue::Group(g) => write!(f, "{g}"),
            CheckValue::Count(c) => write!(f, "{c}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub instance: String,
    pub expected: CheckValue,
    pub actual: CheckValue,
    pub pass: bool,
}

impl CheckOutcome {
    pub fn new(name: &str, instance: String, expected: CheckValue, actual: CheckValue) -> Self {
        let pass = expected == actual;
        CheckOutcome {
            name: name.to_string(),
            instance,
            expected,
            actual,
            pass,
        }
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} [{}]: expected {}, got {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.instance,
            self.expected,
            self.actual
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl SweepReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.outcomes.iter().filter(|o| !o.pass)
    }

    pub fn len(&self) -> usize {
        self.outcomes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.outcomes.is_empty()
    }

    pub fn extend(&mut self, other: SweepReport) {
        self.outcomes.extend(other.outcomes);
    }
}

/// Schur multiplier by peeling one cyclic summand at a time:
/// `M(G' + Z/r) = M(G') + (G' ⊗ Z/r)`, `M(cyclic) = 0`.
pub fn schur_recursion_of(orders: &[BigUint]) -> FgAbelianGroup {
    let mut acc = FgAbelianGroup::trivial();
    let mut multiplier = FgAbelianGroup::trivial();
    for r in orders {
        let cyclic = FgAbelianGroup::from_cyclic_orders([r.clone()]);
        multiplier = direct_sum(&multiplier, &tensor_product(&acc, &cyclic));
        acc = direct_sum(&acc, &cyclic);
    }
    multiplier
}

pub fn schur_recursion(g: &FgAbelianGroup) -> Result<FgAbelianGroup> {
    Ok(schur_recursion_of(&g.cyclic_orders(DEFAULT_RESOURCE_CAP)?))
}

/// Every canonical group with `m + k <= max_rank` and invariant factors taken
/// from divisor chains with `n1 <= max_factor`, ordered by `m + k`, then `m`
/// descending, then the factor chain.
pub fn canonical_instances(max_rank: u32, max_factor: u64) -> Vec<FgAbelianGroup> {
    fn chains(len: u32, bound: u64, top: bool, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if len == 0 {
            out.push(prefix.clone());
            return;
        }
        let last = prefix.last().copied();
        for n in (2..=bound).rev() {
            if !top && last.is_some_and(|l| l % n != 0) {
                continue;
            }
            prefix.push(n);
            chains(len - 1, n, false, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for total in 0..=max_rank {
        for k in 0..=total {
            let m = (total - k) as u64;
            let mut cs = Vec::new();
            chains(k, max_factor, true, &mut Vec::new(), &mut cs);
            cs.sort();
            for c in cs {
                out.push(FgAbelianGroup::new(m, &c).expect("divisor chains are canonical"));
            }
        }
    }
    out
}

/// Three-way comparison of the `c = 1` formula, the exterior square and the
/// Schur recursion over `canonical_instances(max_rank, max_factor)`.
pub fn sweep_schur(max_rank: u32, max_factor: u64) -> Result<SweepReport> {
    if max_rank == 0 {
        return Err(Error::invalid("max_rank must be at least 1"));
    }
    if max_factor == 0 {
        return Err(Error::invalid("max_factor must be at least 1"));
    }
    let instances = canonical_instances(max_rank, max_factor);
    let nested: Vec<Result<Vec<CheckOutcome>>> = instances
        .par_iter()
        .map(|g| {
            let formula = nilpotent_multiplier(g, 1)?.result;
            let exterior = exterior_square(g);
            let recursion = schur_recursion(g)?;
            let label = g.to_string();
            Ok(vec![
                CheckOutcome::new(
                    "formula=exterior",
                    label.clone(),
                    CheckValue::Group(exterior.clone()),
                    CheckValue::Group(formula.clone()),
                ),
                CheckOutcome::new(
                    "formula=recursion",
                    label.clone(),
                    CheckValue::Group(recursion.clone()),
                    CheckValue::Group(formula),
                ),
                CheckOutcome::new(
                    "exterior=recursion",
                    label,
                    CheckValue::Group(recursion),
                    CheckValue::Group(exterior),
                ),
            ])
        })
        .collect();
    let mut report = SweepReport::default();
    for r in nested {
        report.outcomes.extend(r?);
    }
    Ok(report)
}

/// `sum_{m | n} m * chi_m(d) = d^n` for `1 <= d <= max_d`, `1 <= n <= max_n`.
pub fn check_mobius_inversion(max_d: u64, max_n: u32) -> SweepReport {
    let grid: Vec<(u64, u32)> = (1..=max_d).flat_map(|d| (1..=max_n).map(move |n| (d, n))).collect();
    let outcomes = grid
        .par_iter()
        .map(|&(d, n)| {
            let d_count = BigCount::from(d);
            let lhs: BigCount = divisors(n)
                .into_iter()
                .map(|m| &BigCount::from(m) * &witt(m, d).expect("weight >= 1"))
                .sum();
            CheckOutcome::new(
                "mobius-inversion",
                format!("d={d} n={n}"),
                CheckValue::Count(power(&d_count, n)),
                CheckValue::Count(lhs),
            )
        })
        .collect();
    SweepReport { outcomes }
}

/// Enumerated basic-commutator counts against the Witt formula, plus the
/// inversion identity, on `1 <= d <= max_d`, `1 <= n <= max_weight`.
pub fn sweep_counts(max_d: u32, max_weight: u32) -> Result<SweepReport> {
    sweep_counts_with(Hall::default(), max_d, max_weight)
}

pub fn sweep_counts_with(hall: Hall, max_d: u32, max_weight: u32) -> Result<SweepReport> {
    if max_d == 0 || max_weight == 0 {
        return Err(Error::invalid("max_d and max_weight must be at least 1"));
    }
    let grid: Vec<(u32, u32)> = (1..=max_d)
        .flat_map(|d| (1..=max_weight).map(move |n| (d, n)))
        .collect();
    let results: Vec<Result<CheckOutcome>> = grid
        .par_iter()
        .map(|&(d, n)| {
            let enumerated = hall.count_basic(&Alphabet::base(d), n)?;
            Ok(CheckOutcome::new(
                "basic-count",
                format!("d={d} n={n}"),
                CheckValue::Count(witt(n, d)?),
                CheckValue::Count(enumerated),
            ))
        })
        .collect();
    let mut report = SweepReport::default();
    for r in results {
        report.outcomes.push(r?);
    }
    report.extend(check_mobius_inversion(max_d as u64, max_weight));
    Ok(report)
}

/// Enumerated iterated basic-commutator sets against `iterated_witt`.
pub fn sweep_iterated(rows: &[ClassRow], max_d: u32) -> Result<SweepReport> {
    sweep_iterated_with(Hall::default(), rows, max_d)
}

pub fn sweep_iterated_with(hall: Hall, rows: &[ClassRow], max_d: u32) -> Result<SweepReport> {
    if max_d == 0 {
        return Err(Error::invalid("max_d must be at least 1"));
    }
    if rows.is_empty() {
        return Err(Error::invalid("at least one class row is required"));
    }
    let grid: Vec<(&ClassRow, u32)> = rows.iter().flat_map(|r| (1..=max_d).map(move |d| (r, d))).collect();
    let results: Vec<Result<CheckOutcome>> = grid
        .par_iter()
        .map(|&(row, d)| {
            let predicted = iterated_witt(row, d)?;
            let set = hall.iterated_basic_set(row, d)?;
            if set.members.is_none() {
                return Err(Error::resource(
                    format!("iterated set for row {row} on {d} letters"),
                    predicted,
                    hall.cap,
                ));
            }
            Ok(CheckOutcome::new(
                "iterated-count",
                format!("row={row} d={d}"),
                CheckValue::Count(predicted),
                CheckValue::Count(set.count),
            ))
        })
        .collect();
    let mut report = SweepReport::default();
    for r in results {
        report.outcomes.push(r?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn grp(m: u64, f: &[u64]) -> FgAbelianGroup {
        FgAbelianGroup::new(m, f).unwrap()
    }

    fn row(r: &[u32]) -> ClassRow {
        ClassRow::new(r.to_vec()).unwrap()
    }

    #[test]
    fn recursion_base_cases() {
        assert!(schur_recursion(&grp(0, &[7])).unwrap().is_trivial());
        assert!(schur_recursion(&grp(1, &[])).unwrap().is_trivial());
        assert!(schur_recursion(&FgAbelianGroup::trivial()).unwrap().is_trivial());
        assert_eq!(schur_recursion(&grp(0, &[12, 6, 2])).unwrap(), grp(0, &[6, 2, 2]));
        for m in 0..7u64 {
            let expected = witt(2, m).unwrap().to_u64().unwrap();
            assert_eq!(schur_recursion(&grp(m, &[])).unwrap(), grp(expected, &[]));
        }
    }

    #[test]
    fn recursion_ignores_peeling_order() {
        let orders = [u(0), u(12), u(0), u(6), u(2), u(4)];
        let base = schur_recursion_of(&orders);
        let mut perm = orders.to_vec();
        perm.reverse();
        assert_eq!(schur_recursion_of(&perm), base);
        perm.rotate_left(2);
        assert_eq!(schur_recursion_of(&perm), base);
    }

    #[test]
    fn smallest_schur_sweep() {
        let r = sweep_schur(1, 2).unwrap();
        assert!(r.all_pass());
        let labels: Vec<&str> = r.outcomes.iter().map(|o| o.instance.as_str()).collect();
        assert_eq!(labels, ["0", "0", "0", "Z", "Z", "Z", "Z/2", "Z/2", "Z/2"]);
        assert!(sweep_schur(0, 2).is_err());
    }

    #[test]
    fn moderate_schur_sweep() {
        let r = sweep_schur(3, 12).unwrap();
        assert!(r.all_pass(), "{:?}", r.failures().next());
    }

    #[test]
    fn instances_are_canonical_and_distinct() {
        let inst = canonical_instances(3, 12);
        let set: std::collections::HashSet<_> = inst.iter().collect();
        assert_eq!(set.len(), inst.len());
        // 1 trivial + (Z + 11 cyclic) + (Z^2 + 11 Z+cyclic + pairs) ...
        assert!(inst.contains(&grp(1, &[12, 6])));
        assert!(!inst.iter().any(|g| g.torsion_runs().iter().any(|(f, _)| *f > u(12))));
    }

    #[test]
    fn count_sweeps() {
        let r = sweep_counts(2, 5).unwrap();
        assert!(r.all_pass());
        assert!(r
            .outcomes
            .iter()
            .any(|o| o.instance == "d=2 n=5" && o.name == "basic-count" && o.actual == CheckValue::Count(6u64.into())));
        let r = sweep_counts(4, 4).unwrap();
        assert!(r.all_pass());
        assert!(r
            .outcomes
            .iter()
            .any(|o| o.instance == "d=4 n=4" && o.actual == CheckValue::Count(60u64.into())));
        let r = sweep_counts(1, 6).unwrap();
        assert!(r.all_pass());
        assert!(sweep_counts_with(Hall::with_cap(10), 3, 5).is_err());
    }

    #[test]
    fn iterated_sweeps() {
        let r = sweep_iterated(&[row(&[1, 1])], 4).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.outcomes[2].actual, CheckValue::Count(3u64.into()));
        assert_eq!(r.outcomes[3].actual, CheckValue::Count(15u64.into()));
        let r = sweep_iterated(&[row(&[2])], 1).unwrap();
        assert_eq!(r.outcomes[0].actual, CheckValue::Count(BigCount::zero()));
        assert!(sweep_iterated_with(Hall::with_cap(5), &[row(&[1, 1])], 4).is_err());
    }

    #[test]
    fn letter_profile_matches_multiplicity_differences() {
        // members of E_t that use only x1..x_i number f_i, so those whose
        // largest letter is x_i number f_i - f_{i-1}
        for r in [&[1u32, 1][..], &[2, 1], &[1, 2], &[1, 1, 1]] {
            let r = row(r);
            let d = 3;
            let members = Hall::default().iterated_basic_set(&r, d).unwrap().members.unwrap();
            for i in 1..=d {
                let within = members.iter().filter(|c| c.max_letter() <= i).count();
                assert_eq!(BigCount::from(within), iterated_witt(&r, i).unwrap(), "row {r} i {i}");
            }
        }
    }

    #[test]
    fn outcomes_are_deterministic() {
        assert_eq!(sweep_schur(2, 8).unwrap(), sweep_schur(2, 8).unwrap());
        assert_eq!(sweep_counts(3, 4).unwrap(), sweep_counts(3, 4).unwrap());
    }
}
