//! Finitely generated abelian groups in invariant-factor form.
//!
//! A group is stored as `Z^(free_rank) + Z/n1^(e1) + Z/n2^(e2) + ...` with
//! `n1 > n2 > ...`, `n_{i+1} | n_i` and every `n_i >= 2`. Repeated factors
//! are run-length encoded, so groups with astronomically many summands (as
//! produced by multiplier formulas) stay symbolic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::BigCount;
use crate::error::{Error, Result};

/// Dense integer matrix, row-major. Columns are generators, rows relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::invalid(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntegerMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers. All rows must have
    /// `cols` entries.
    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::invalid(format!(
                    "relation row {} has {} entries, expected {cols}",
                    i + 1,
                    r.len()
                )));
            }
            entries.extend(r.iter().map(|&v| BigInt::from(v)));
        }
        Ok(IntegerMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    fn at(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }

    pub fn mul(&self, rhs: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = IntegerMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * rhs.get(k, j);
                    *out.at(i, j) += prod;
                }
            }
        }
        Ok(out)
    }

    /// Determinant of a square matrix by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::invalid("determinant of a non-square matrix"));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    *a.at(i, j) = v;
                }
            }
            prev = a.get(k, k).clone();
        }
        Ok(sign * a.get(n - 1, n - 1))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(source, j) * factor;
            *self.at(target, j) += v;
        }
    }

    /// col[target] += factor * col[source]
    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, source) * factor;
            *self.at(i, target) += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            *self.at(i, j) = v;
        }
    }
}

/// Diagonal `d1 | d2 | ...` (zeros last) and, on request, unimodular `U`,
/// `V` with `U * M * V = diag`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub diagonal: Vec<BigUint>,
    pub transforms: Option<(IntegerMatrix, IntegerMatrix)>,
}

struct Reduction {
    a: IntegerMatrix,
    u: Option<IntegerMatrix>,
    v: Option<IntegerMatrix>,
}

impl Reduction {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
    }
    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
    }
    fn add_row(&mut self, t: usize, s: usize, f: &BigInt) {
        self.a.add_row(t, s, f);
        if let Some(u) = &mut self.u {
            u.add_row(t, s, f);
        }
    }
    fn add_col(&mut self, t: usize, s: usize, f: &BigInt) {
        self.a.add_col(t, s, f);
        if let Some(v) = &mut self.v {
            v.add_col(t, s, f);
        }
    }
    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(u) = &mut self.u {
            u.negate_row(i);
        }
    }

    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, &BigInt)> = None;
        for i in t..self.a.rows {
            for j in t..self.a.cols {
                let v = self.a.get(i, j);
                if v.is_zero() {
                    continue;
                }
                if best.is_none_or(|(_, _, b)| v.abs() < b.abs()) {
                    best = Some((i, j, v));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }
}

/// Smith normal form by row and column reduction, pivoting on the entry of
/// least absolute value.
pub fn smith_normal_form(m: &IntegerMatrix, with_transforms: bool) -> SmithForm {
    let mut r = Reduction {
        a: m.clone(),
        u: with_transforms.then(|| IntegerMatrix::identity(m.rows)),
        v: with_transforms.then(|| IntegerMatrix::identity(m.cols)),
    };
    let steps = m.rows.min(m.cols);
    let mut rank = 0;
    'diag: for t in 0..steps {
        loop {
            let Some((pi, pj)) = r.min_pivot(t) else {
                break 'diag;
            };
            r.swap_rows(t, pi);
            r.swap_cols(t, pj);
            let pivot = r.a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..r.a.rows {
                let q = r.a.get(i, t) / &pivot;
                if !q.is_zero() {
                    r.add_row(i, t, &-q);
                }
                clean &= r.a.get(i, t).is_zero();
            }
            for j in t + 1..r.a.cols {
                let q = r.a.get(t, j) / &pivot;
                if !q.is_zero() {
                    r.add_col(j, t, &-q);
                }
                clean &= r.a.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            let stray = (t + 1..r.a.rows).find(|&i| (t + 1..r.a.cols).any(|j| !r.a.get(i, j).is_multiple_of(&pivot)));
            match stray {
                Some(i) => r.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if r.a.get(t, t).is_negative() {
            r.negate_row(t);
        }
        rank = t + 1;
    }
    let mut diagonal: Vec<BigUint> = (0..rank).map(|t| r.a.get(t, t).magnitude().clone()).collect();
    diagonal.resize(steps, BigUint::zero());
    SmithForm {
        diagonal,
        transforms: r.u.zip(r.v),
    }
}

/// A finitely generated abelian group in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FgAbelianGroup {
    free_rank: BigCount,
    // (factor, multiplicity): factors strictly decreasing along a divisor
    // chain, all >= 2, multiplicities >= 1
    torsion: Vec<(BigUint, BigCount)>,
}

impl FgAbelianGroup {
    pub fn trivial() -> Self {
        FgAbelianGroup {
            free_rank: BigCount::zero(),
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: impl Into<BigCount>) -> Self {
        FgAbelianGroup {
            free_rank: rank.into(),
            torsion: Vec::new(),
        }
    }

    /// `Z^free_rank + Z/factors[0] + ...`; `factors` must already be a
    /// descending divisor chain of integers `>= 2`.
    pub fn new(free_rank: u64, factors: &[u64]) -> Result<Self> {
        let factors: Vec<BigUint> = factors.iter().map(|&f| BigUint::from(f)).collect();
        Self::from_invariant_factors(BigCount::from(free_rank), &factors)
    }

    pub fn from_invariant_factors(free_rank: BigCount, factors: &[BigUint]) -> Result<Self> {
        for (i, f) in factors.iter().enumerate() {
            if *f < BigUint::from(2u32) {
                return Err(Error::invalid(format!("invariant factor {f} must be at least 2")));
            }
            if i > 0 && !factors[i - 1].is_multiple_of(f) {
                return Err(Error::invalid(format!(
                    "invariant factors must satisfy n_(i+1) | n_i: {} does not divide {}",
                    f,
                    factors[i - 1]
                )));
            }
        }
        let mut torsion: Vec<(BigUint, BigCount)> = Vec::new();
        for f in factors {
            match torsion.last_mut() {
                Some((last, count)) if last == f => *count += &BigCount::from(1u64),
                _ => torsion.push((f.clone(), BigCount::from(1u64))),
            }
        }
        Ok(FgAbelianGroup { free_rank, torsion })
    }

    /// Canonical form of a direct sum of cyclic groups. Order `0` is `Z`,
    /// order `1` is trivial.
    pub fn from_cyclic_orders<I>(orders: I) -> Self
    where
        I: IntoIterator<Item = BigUint>,
    {
        Self::from_cyclic_multiset(orders.into_iter().map(|o| (o, BigCount::from(1u64))))
    }

    /// Canonical form of `sum Z/order^(count)`. Order `0` is `Z`.
    pub fn from_cyclic_multiset<I>(summands: I) -> Self
    where
        I: IntoIterator<Item = (BigUint, BigCount)>,
    {
        let mut free_rank = BigCount::zero();
        let mut finite: BTreeMap<BigUint, BigCount> = BTreeMap::new();
        for (order, count) in summands {
            if count.is_zero() || order.is_one() {
                continue;
            }
            if order.is_zero() {
                free_rank += &count;
            } else {
                *finite.entry(order).or_default() += &count;
            }
        }
        FgAbelianGroup {
            free_rank,
            torsion: invariant_factors_of(finite),
        }
    }

    pub fn free_rank(&self) -> &BigCount {
        &self.free_rank
    }

    /// `(factor, multiplicity)` runs in descending divisibility order.
    pub fn torsion_runs(&self) -> &[(BigUint, BigCount)] {
        &self.torsion
    }

    /// Number of finite cyclic summands, `k`.
    pub fn torsion_count(&self) -> BigCount {
        self.torsion.iter().map(|(_, c)| c.clone()).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank.is_zero() && self.torsion.is_empty()
    }

    /// Invariant factors written out one per summand, `n1, n2, ...`.
    pub fn invariant_factors(&self, limit: u64) -> Result<Vec<BigUint>> {
        let k = self.torsion_count();
        if k.to_u64().is_none_or(|k| k > limit) {
            return Err(Error::resource("invariant factor list", k, limit));
        }
        let mut out = Vec::new();
        for (f, c) in &self.torsion {
            for _ in 0..c.to_u64().unwrap_or(0) {
                out.push(f.clone());
            }
        }
        Ok(out)
    }

    /// Cyclic decomposition `r1, ..., rs`: `free_rank` zeros, then the
    /// invariant factors.
    pub fn cyclic_orders(&self, limit: u64) -> Result<Vec<BigUint>> {
        let m = self.free_rank.to_u64().filter(|&m| m <= limit);
        let Some(m) = m else {
            return Err(Error::resource("cyclic decomposition", self.free_rank.clone(), limit));
        };
        let mut out = vec![BigUint::zero(); m as usize];
        out.extend(self.invariant_factors(limit.saturating_sub(m))?);
        Ok(out)
    }

    /// Order-0-for-`Z` runs: `(0, free_rank)` first when nonzero.
    fn cyclic_runs(&self) -> Vec<(BigUint, BigCount)> {
        let mut runs = Vec::with_capacity(self.torsion.len() + 1);
        if !self.free_rank.is_zero() {
            runs.push((BigUint::zero(), self.free_rank.clone()));
        }
        runs.extend(self.torsion.iter().cloned());
        runs
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        match self.free_rank.to_u64() {
            Some(0) => {}
            Some(1) => terms.push("Z".to_string()),
            _ => terms.push(format!("Z^{}", self.free_rank)),
        }
        for (factor, count) in &self.torsion {
            match count.to_u64() {
                Some(c) if c <= 8 => {
                    for _ in 0..c {
                        terms.push(format!("Z/{factor}"));
                    }
                }
                _ => terms.push(format!("Z/{factor}^({count})")),
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Pairwise coprime numbers `q` such that every input is a product of powers
/// of them.
fn coprime_base<'a>(numbers: impl IntoIterator<Item = &'a BigUint>) -> Vec<BigUint> {
    let mut base: Vec<BigUint> = Vec::new();
    for n in numbers {
        let mut work = vec![n.clone()];
        while let Some(a) = work.pop() {
            if a.is_one() {
                continue;
            }
            match base.iter().position(|b| !a.gcd(b).is_one()) {
                Some(pos) => {
                    let b = base.swap_remove(pos);
                    let g = a.gcd(&b);
                    work.push(&a / &g);
                    work.push(&b / &g);
                    work.push(g);
                }
                None => base.push(a),
            }
        }
    }
    base.sort();
    base
}

/// Invariant factors of `sum Z/order^(count)` over finite orders `>= 2`.
///
/// Splits every order over a coprime base; for each base element the
/// exponents sorted descending give its contribution to the first, second,
/// ... invariant factor. Positions are handled as runs so multiplicities may
/// be arbitrarily large.
fn invariant_factors_of(finite: BTreeMap<BigUint, BigCount>) -> Vec<(BigUint, BigCount)> {
    if finite.is_empty() {
        return Vec::new();
    }
    let base = coprime_base(finite.keys());
    // for each base element: (exponent, count) descending by exponent
    let mut columns: Vec<Vec<(u32, BigCount)>> = Vec::with_capacity(base.len());
    for q in &base {
        let mut by_exp: BTreeMap<u32, BigCount> = BTreeMap::new();
        for (order, count) in &finite {
            let mut rest = order.clone();
            let mut e = 0u32;
            while rest.is_multiple_of(q) {
                rest /= q;
                e += 1;
            }
            if e > 0 {
                *by_exp.entry(e).or_default() += count;
            }
        }
        columns.push(by_exp.into_iter().rev().collect());
    }
    // breakpoints: cumulative run ends across all columns
    let mut ends: Vec<BigCount> = Vec::new();
    for col in &columns {
        let mut acc = BigCount::zero();
        for (_, c) in col {
            acc += c;
            ends.push(acc.clone());
        }
    }
    ends.sort();
    ends.dedup();

    let mut cursors: Vec<(usize, BigCount)> = columns
        .iter()
        .map(|c| (0, c.first().map(|x| x.1.clone()).unwrap_or_default()))
        .collect();
    let mut start = BigCount::zero();
    let mut runs: Vec<(BigUint, BigCount)> = Vec::new();
    for end in ends {
        let mut factor = BigUint::one();
        for ((q, col), (idx, col_end)) in base.iter().zip(&columns).zip(cursors.iter_mut()) {
            while *idx < col.len() && *col_end <= start {
                *idx += 1;
                if *idx < col.len() {
                    *col_end += &col[*idx].1;
                }
            }
            if *idx < col.len() {
                factor *= q.pow(col[*idx].0);
            }
        }
        let len = end.checked_sub(&start).expect("breakpoints ascend");
        match runs.last_mut() {
            Some((f, c)) if *f == factor => *c += &len,
            _ => runs.push((factor, len)),
        }
        start = end;
    }
    runs
}

/// Canonical form of the group presented by `generators` generators and the
/// rows of `relations`.
pub fn canonicalize(generators: usize, relations: &IntegerMatrix) -> Result<FgAbelianGroup> {
    if relations.cols() != generators && !(relations.rows() == 0 && relations.cols() == 0) {
        return Err(Error::invalid(format!(
            "relation matrix has {} columns but there are {generators} generators",
            relations.cols()
        )));
    }
    let snf = smith_normal_form(relations, false);
    let nonzero: Vec<BigUint> = snf.diagonal.into_iter().filter(|d| !d.is_zero()).collect();
    let free = generators - nonzero.len();
    let mut factors: Vec<BigUint> = nonzero.into_iter().filter(|d| !d.is_one()).collect();
    factors.reverse();
    FgAbelianGroup::from_invariant_factors(BigCount::from(free), &factors)
}

pub fn direct_sum(g: &FgAbelianGroup, h: &FgAbelianGroup) -> FgAbelianGroup {
    FgAbelianGroup::from_cyclic_multiset(g.cyclic_runs().into_iter().chain(h.cyclic_runs()))
}

/// Order parameter of `Z/r ⊗ Z/s` with `0` standing for `Z`.
pub fn tensor_cyclic(r: &BigUint, s: &BigUint) -> BigUint {
    r.gcd(s)
}

pub fn tensor_product(g: &FgAbelianGroup, h: &FgAbelianGroup) -> FgAbelianGroup {
    let gr = g.cyclic_runs();
    let hr = h.cyclic_runs();
    FgAbelianGroup::from_cyclic_multiset(
        gr.iter()
            .flat_map(|(r, a)| hr.iter().map(move |(s, b)| (tensor_cyclic(r, s), a * b))),
    )
}

/// `G ∧ G`: one `Z/gcd(r_i, r_j)` for every pair `i < j` of cyclic summands.
pub fn exterior_square(g: &FgAbelianGroup) -> FgAbelianGroup {
    let runs = g.cyclic_runs();
    let mut summands = Vec::new();
    for (i, (r, a)) in runs.iter().enumerate() {
        summands.push((r.clone(), a.pairs()));
        for (s, b) in &runs[i + 1..] {
            summands.push((tensor_cyclic(r, s), a * b));
        }
    }
    FgAbelianGroup::from_cyclic_multiset(summands)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bigint(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn grp(m: u64, f: &[u64]) -> FgAbelianGroup {
        FgAbelianGroup::new(m, f).unwrap()
    }

    fn mat(cols: usize, rows: &[Vec<i64>]) -> IntegerMatrix {
        IntegerMatrix::from_rows(cols, rows).unwrap()
    }

    fn check_transforms(m: &IntegerMatrix) -> Vec<BigUint> {
        let snf = smith_normal_form(m, true);
        let (uu, vv) = snf.transforms.clone().unwrap();
        let d = uu.mul(m).unwrap().mul(&vv).unwrap();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let expected = if i == j {
                    BigInt::from(snf.diagonal[i].clone())
                } else {
                    BigInt::zero()
                };
                assert_eq!(d.get(i, j), &expected, "entry ({i},{j}) of U*M*V");
            }
        }
        assert_eq!(uu.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(vv.determinant().unwrap().abs(), BigInt::one());
        snf.diagonal
    }

    #[test]
    fn snf_examples() {
        assert_eq!(check_transforms(&mat(2, &[vec![2, 0], vec![0, 6]])), vec![u(2), u(6)]);
        assert_eq!(check_transforms(&mat(2, &[vec![4, 0], vec![0, 6]])), vec![u(2), u(12)]);
        assert!(smith_normal_form(&IntegerMatrix::zeros(0, 0), true).diagonal.is_empty());
        assert_eq!(
            check_transforms(&mat(3, &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])),
            vec![u(2), u(6), u(12)]
        );
        assert_eq!(
            check_transforms(&mat(3, &[vec![0, 0, 0], vec![0, 3, 0]])),
            vec![u(3), u(0)]
        );
    }

    #[test]
    fn determinant_basics() {
        assert_eq!(mat(2, &[vec![1, 2], vec![3, 4]]).determinant().unwrap(), bigint(-2));
        assert_eq!(mat(2, &[vec![0, 1], vec![1, 0]]).determinant().unwrap(), bigint(-1));
        assert_eq!(
            mat(3, &[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]])
                .determinant()
                .unwrap(),
            bigint(6)
        );
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(
            canonicalize(2, &mat(2, &[vec![2, 0], vec![0, 3]])).unwrap(),
            grp(0, &[6])
        );
        assert_eq!(canonicalize(3, &IntegerMatrix::zeros(0, 3)).unwrap(), grp(3, &[]));
        assert_eq!(
            canonicalize(2, &mat(2, &[vec![4, 0], vec![0, 6]])).unwrap(),
            grp(0, &[12, 2])
        );
        assert!(canonicalize(3, &mat(2, &[vec![1, 1]])).is_err());
    }

    #[test]
    fn new_validates_chain() {
        assert!(FgAbelianGroup::new(0, &[6, 4]).is_err());
        assert!(FgAbelianGroup::new(0, &[1]).is_err());
        assert!(FgAbelianGroup::new(0, &[2, 4]).is_err());
        assert!(FgAbelianGroup::new(1, &[12, 6, 2, 2]).is_ok());
    }

    #[test]
    fn cyclic_orders_canonicalize() {
        let g = FgAbelianGroup::from_cyclic_orders([u(6), u(4)]);
        assert_eq!(g, grp(0, &[12, 2]));
        let g = FgAbelianGroup::from_cyclic_orders([u(0), u(1), u(2), u(3), u(4), u(9)]);
        assert_eq!(g, grp(1, &[36, 6]));
        assert!(FgAbelianGroup::from_cyclic_orders([u(1), u(1)]).is_trivial());
    }

    #[test]
    fn huge_multiplicities_stay_symbolic() {
        let big: BigCount = "1000000000000000000000".parse().unwrap();
        let g = FgAbelianGroup::from_cyclic_multiset([(u(2), big.clone()), (u(3), BigCount::from(1u64))]);
        assert_eq!(g.torsion_runs()[0], (u(6), BigCount::from(1u64)));
        assert_eq!(g.torsion_runs()[1].0, u(2));
        assert_eq!(g.to_string(), "Z/6 + Z/2^(999999999999999999999)");
        assert!(g.invariant_factors(1000).is_err());
    }

    #[test]
    fn direct_sum_examples() {
        assert_eq!(direct_sum(&grp(2, &[]), &FgAbelianGroup::trivial()), grp(2, &[]));
        assert_eq!(direct_sum(&grp(0, &[6]), &grp(0, &[4])), grp(0, &[12, 2]));
        assert_eq!(direct_sum(&grp(1, &[2]), &grp(0, &[2])), grp(1, &[2, 2]));
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(tensor_cyclic(&u(0), &u(0)), u(0));
        assert_eq!(tensor_cyclic(&u(12), &u(6)), u(6));
        assert_eq!(tensor_cyclic(&u(5), &u(0)), u(5));
        assert_eq!(tensor_product(&grp(2, &[]), &grp(3, &[])), grp(6, &[]));
        assert_eq!(tensor_product(&grp(0, &[4, 2]), &grp(0, &[2])), grp(0, &[2, 2]));
        assert!(tensor_product(&FgAbelianGroup::trivial(), &grp(2, &[6])).is_trivial());
        assert_eq!(tensor_product(&grp(1, &[4]), &grp(1, &[6])), grp(1, &[12, 2, 2]));
    }

    #[test]
    fn exterior_square_examples() {
        assert!(exterior_square(&grp(1, &[])).is_trivial());
        assert_eq!(exterior_square(&grp(2, &[])), grp(1, &[]));
        assert_eq!(exterior_square(&grp(0, &[12, 6, 2])), grp(0, &[6, 2, 2]));
        for m in 0..=6u64 {
            assert_eq!(
                exterior_square(&grp(m, &[])),
                grp(crate::arith::witt(2, m).unwrap().to_u64().unwrap(), &[])
            );
            assert_eq!(
                m * m.saturating_sub(1) / 2,
                crate::arith::witt(2, m).unwrap().to_u64().unwrap()
            );
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(FgAbelianGroup::trivial().to_string(), "0");
        assert_eq!(grp(1, &[]).to_string(), "Z");
        assert_eq!(grp(2, &[12, 6, 2]).to_string(), "Z^2 + Z/12 + Z/6 + Z/2");
    }

    #[test]
    fn coprime_base_refines() {
        let nums = [u(12), u(18), u(35)];
        let base = coprime_base(nums.iter());
        for (i, a) in base.iter().enumerate() {
            for b in &base[i + 1..] {
                assert!(a.gcd(b).is_one());
            }
        }
        assert_eq!(base, vec![u(2), u(3), u(35)]);
    }
}
