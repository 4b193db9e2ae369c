use baer_core::abelian::{exterior_square, FgAbelianGroup};
use baer_core::arith::{iterated_witt, BigCount};
use baer_core::oracle::schur_recursion;
use baer_core::{nilpotent_multiplier, polynilpotent_multiplier, solvable_multiplier, ClassRow};
use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;

fn group_strategy() -> impl Strategy<Value = FgAbelianGroup> {
    (0u64..4, prop::collection::vec(2u64..13, 0..3)).prop_map(|(m, orders)| {
        let orders = std::iter::repeat_n(BigUint::zero(), m as usize).chain(orders.into_iter().map(BigUint::from));
        FgAbelianGroup::from_cyclic_orders(orders)
    })
}

fn row_strategy() -> impl Strategy<Value = ClassRow> {
    prop::collection::vec(1u32..4, 1..4).prop_map(|r| ClassRow::new(r).unwrap())
}

proptest! {
    #[test]
    fn result_is_assembled_from_f_values(g in group_strategy(), row in row_strategy()) {
        let rep = polynilpotent_multiplier(&g, &row).unwrap();
        let m = g.free_rank().to_u64().unwrap();
        let factors = g.invariant_factors(100).unwrap();
        prop_assert_eq!(rep.f_values.len(), factors.len() + 1);
        for (j, f) in rep.f_values.iter().enumerate() {
            prop_assert_eq!(f, &iterated_witt(&row, m + j as u64).unwrap());
        }
        // rebuild the expected multiset of cyclic orders by hand
        prop_assume!(rep.f_values.last().unwrap().to_u64().is_some_and(|f| f <= 200_000));
        let mut orders: Vec<BigUint> = Vec::new();
        for _ in 0..rep.f_values[0].to_u64().unwrap() {
            orders.push(BigUint::zero());
        }
        for (j, n) in factors.iter().enumerate() {
            let lo = rep.f_values[j].to_u64().unwrap();
            let hi = rep.f_values[j + 1].to_u64().unwrap();
            prop_assert!(hi >= lo);
            for _ in lo..hi {
                orders.push(n.clone());
            }
        }
        prop_assert_eq!(&rep.result, &FgAbelianGroup::from_cyclic_orders(orders));
        prop_assert_eq!(rep.result.free_rank(), &rep.f_values[0]);
    }

    #[test]
    fn torsion_exponent_divides_input_exponent(g in group_strategy(), row in row_strategy()) {
        let rep = polynilpotent_multiplier(&g, &row).unwrap();
        let input = g.invariant_factors(100).unwrap();
        if let Some(n1) = input.first() {
            for (q, _) in rep.result.torsion_runs() {
                prop_assert!((n1 % q).is_zero());
            }
        } else {
            prop_assert!(rep.result.torsion_runs().is_empty());
        }
    }

    #[test]
    fn class_one_is_exterior_square(g in group_strategy()) {
        let rep = nilpotent_multiplier(&g, 1).unwrap();
        prop_assert_eq!(&rep.result, &exterior_square(&g));
        prop_assert_eq!(&rep.result, &schur_recursion(&g).unwrap());
    }

    #[test]
    fn named_varieties_are_rows(g in group_strategy(), k in 1u32..4) {
        prop_assert_eq!(
            nilpotent_multiplier(&g, k).unwrap(),
            polynilpotent_multiplier(&g, &ClassRow::new(vec![k]).unwrap()).unwrap()
        );
        prop_assert_eq!(
            solvable_multiplier(&g, k).unwrap(),
            polynilpotent_multiplier(&g, &ClassRow::new(vec![1; k as usize]).unwrap()).unwrap()
        );
    }
}

#[test]
fn cyclic_groups_have_trivial_multipliers() {
    for n in [0u64, 2, 3, 12, 97] {
        let g = FgAbelianGroup::from_cyclic_orders([BigUint::from(n)]);
        for row in [vec![1], vec![3], vec![1, 1], vec![2, 1, 3]] {
            let rep = polynilpotent_multiplier(&g, &ClassRow::new(row).unwrap()).unwrap();
            assert!(rep.result.is_trivial());
        }
    }
}

#[test]
fn multiplicities_telescope() {
    let g = FgAbelianGroup::new(1, &[12, 6, 6, 2]).unwrap();
    let rep = polynilpotent_multiplier(&g, &ClassRow::new(vec![2, 1]).unwrap()).unwrap();
    let total: BigCount = rep.multiplicities.iter().cloned().sum();
    assert_eq!(&total, rep.f_values.last().unwrap());
}
