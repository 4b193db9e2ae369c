//! Closed-form polynilpotent multipliers of finitely generated abelian groups.
//!
//! For `G = Z^(m) + Z/n1 + ... + Z/nk` (with `n_{i+1} | n_i`) and class row
//! `(c1, ..., ct)`, the multiplier is
//!
//! ```text
//! Z^(f_m) + Z/n1^(f_{m+1} - f_m) + ... + Z/nk^(f_{m+k} - f_{m+k-1})
//! ```
//!
//! where `f_i = chi_{ct+1}( ... chi_{c1+1}(i) ... )` and `chi` is the Witt
//! count. The nilpotent, metabelian and solvable multipliers are the rows
//! `(c)`, `(1,1)` and `(1,...,1)`.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::abelian::FgAbelianGroup;
use crate::arith::{iterated_witt, BigCount};
use crate::class_row::ClassRow;
use crate::error::{Error, Result, DEFAULT_RESOURCE_CAP};

/// One summand `Z/order^(multiplicity)` of the result as the formula writes
/// it; `order == 0` is `Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperTerm {
    pub order: BigUint,
    pub multiplicity: BigCount,
}

impl PaperTerm {
    fn render(&self) -> String {
        if self.order.is_zero() {
            format!("Z^({})", self.multiplicity)
        } else {
            format!("Z/{}^({})", self.order, self.multiplicity)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierReport {
    pub input_group: FgAbelianGroup,
    pub class_row: ClassRow,
    /// `f_m, f_{m+1}, ..., f_{m+k}`.
    pub f_values: Vec<BigCount>,
    /// `f_m, f_{m+1} - f_m, ..., f_{m+k} - f_{m+k-1}`.
    pub multiplicities: Vec<BigCount>,
    /// One term per cyclic factor of the input (the free part first), in the
    /// order the formula lists them; zero multiplicities included.
    pub paper_shape: Vec<PaperTerm>,
    pub result: FgAbelianGroup,
}

impl MultiplierReport {
    /// `Z^(a) + Z/n1^(b) + ...`, omitting zero terms; `0` if all vanish.
    pub fn paper_shape_text(&self) -> String {
        let terms: Vec<String> = self
            .paper_shape
            .iter()
            .filter(|t| !t.multiplicity.is_zero())
            .map(PaperTerm::render)
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    /// Index `i` of `f_values[0]`, i.e. the free rank `m` of the input.
    pub fn first_index(&self) -> &BigCount {
        self.input_group.free_rank()
    }
}

/// Multiplier with respect to the polynilpotent variety of the given row.
pub fn polynilpotent_multiplier(g: &FgAbelianGroup, row: &ClassRow) -> Result<MultiplierReport> {
    let m = g.free_rank().clone();
    let factors = g.invariant_factors(DEFAULT_RESOURCE_CAP)?;

    let mut f_values = Vec::with_capacity(factors.len() + 1);
    let mut index = m.clone();
    for _ in 0..=factors.len() {
        f_values.push(iterated_witt(row, index.clone())?);
        index += &BigCount::from(1u64);
    }

    let mut multiplicities = Vec::with_capacity(f_values.len());
    multiplicities.push(f_values[0].clone());
    for pair in f_values.windows(2) {
        let diff = pair[1]
            .checked_sub(&pair[0])
            .ok_or_else(|| Error::Internal(format!("f-values decrease for row {row}: {} then {}", pair[0], pair[1])))?;
        multiplicities.push(diff);
    }

    let orders = std::iter::once(BigUint::zero()).chain(factors);
    let paper_shape: Vec<PaperTerm> = orders
        .zip(multiplicities.iter().cloned())
        .map(|(order, multiplicity)| PaperTerm { order, multiplicity })
        .collect();
    let result =
        FgAbelianGroup::from_cyclic_multiset(paper_shape.iter().map(|t| (t.order.clone(), t.multiplicity.clone())));

    Ok(MultiplierReport {
        input_group: g.clone(),
        class_row: row.clone(),
        f_values,
        multiplicities,
        paper_shape,
        result,
    })
}

/// The `c`-nilpotent multiplier.
pub fn nilpotent_multiplier(g: &FgAbelianGroup, c: u32) -> Result<MultiplierReport> {
    polynilpotent_multiplier(g, &ClassRow::nilpotent(c)?)
}

/// The multiplier for metabelian groups, row `(1,1)`.
pub fn metabelian_multiplier(g: &FgAbelianGroup) -> Result<MultiplierReport> {
    polynilpotent_multiplier(g, &ClassRow::solvable(2)?)
}

/// The `l`-solvable multiplier; `l = 1` is the Schur multiplier.
pub fn solvable_multiplier(g: &FgAbelianGroup, l: u32) -> Result<MultiplierReport> {
    polynilpotent_multiplier(g, &ClassRow::solvable(l)?)
}
