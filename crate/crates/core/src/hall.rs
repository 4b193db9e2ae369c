//! Basic commutators, standard invertators and the generating sets
//! `A_{m,n}` and `B_{m,n}`, enumerated explicitly so that every count
//! predicted by the Witt formula can be checked against an actual list.
//!
//! Bracket convention: a basic commutator of weight at least two is written
//! `[u, v]` with `u > v` in the Hall order, and when `u = [u1, u2]` we also
//! require `u2 <= v`. Left-normed words `[c, a1, ..., ap]` with
//! `c > a1 <= a2 <= ...` are therefore written exactly as they appear in the
//! standard-invertator notation. The opposite convention (`[a, b]` with
//! `a < b` and `b = [b1, b2] => b2 <= a`) is the mirror image under
//! `[u, v] <-> [v, u]`; counts and set sizes are identical.
//!
//! Hall order: lower weight first; within a weight, lexicographic on
//! `(left, right)`, recursively; letters by index.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::arith::{witt, BigCount};
use crate::class_row::ClassRow;
use crate::error::{Error, Result, DEFAULT_RESOURCE_CAP};

/// A bracket tree over indexed letters.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Commutator(Arc<Node>);

#[derive(PartialEq, Eq, Hash)]
enum Node {
    Leaf(u32),
    Bracket {
        left: Commutator,
        right: Commutator,
        weight: u32,
    },
}

impl Commutator {
    /// The letter with 1-based index `index`.
    pub fn leaf(index: u32) -> Self {
        assert!(index >= 1, "letters are indexed from 1");
        Commutator(Arc::new(Node::Leaf(index)))
    }

    pub fn bracket(left: Commutator, right: Commutator) -> Self {
        let weight = left.weight() + right.weight();
        Commutator(Arc::new(Node::Bracket { left, right, weight }))
    }

    /// The left-normed commutator `[head, a1, ..., ap]`.
    pub fn left_normed<'a>(head: &Commutator, rest: impl IntoIterator<Item = &'a Commutator>) -> Self {
        rest.into_iter()
            .fold(head.clone(), |acc, a| Commutator::bracket(acc, a.clone()))
    }

    pub fn weight(&self) -> u32 {
        match &*self.0 {
            Node::Leaf(_) => 1,
            Node::Bracket { weight, .. } => *weight,
        }
    }

    pub fn as_leaf(&self) -> Option<u32> {
        match &*self.0 {
            Node::Leaf(i) => Some(*i),
            Node::Bracket { .. } => None,
        }
    }

    pub fn components(&self) -> Option<(&Commutator, &Commutator)> {
        match &*self.0 {
            Node::Leaf(_) => None,
            Node::Bracket { left, right, .. } => Some((left, right)),
        }
    }

    /// Replaces every leaf `i` by `letters[i - 1]`.
    pub fn substitute(&self, letters: &[Commutator]) -> Commutator {
        match &*self.0 {
            Node::Leaf(i) => letters[*i as usize - 1].clone(),
            Node::Bracket { left, right, .. } => {
                Commutator::bracket(left.substitute(letters), right.substitute(letters))
            }
        }
    }

    /// Largest letter index occurring in the tree.
    pub fn max_letter(&self) -> u32 {
        match &*self.0 {
            Node::Leaf(i) => *i,
            Node::Bracket { left, right, .. } => left.max_letter().max(right.max_letter()),
        }
    }

    pub fn contains_letter(&self, letter: u32) -> bool {
        match &*self.0 {
            Node::Leaf(i) => *i == letter,
            Node::Bracket { left, right, .. } => left.contains_letter(letter) || right.contains_letter(letter),
        }
    }

    /// Right components met while walking down the left spine, outermost
    /// first, together with the spine node reached at each step.
    fn left_spine(&self) -> Vec<(&Commutator, &Commutator)> {
        let mut out = Vec::new();
        let mut cur = self;
        while let Some((l, r)) = cur.components() {
            out.push((cur, r));
            cur = l;
        }
        out
    }
}

/// Hall order on commutators.
pub fn hall_cmp(a: &Commutator, b: &Commutator) -> Ordering {
    if Arc::ptr_eq(&a.0, &b.0) {
        return Ordering::Equal;
    }
    match a.weight().cmp(&b.weight()) {
        Ordering::Equal => {}
        other => return other,
    }
    match (&*a.0, &*b.0) {
        (Node::Leaf(i), Node::Leaf(j)) => i.cmp(j),
        (
            Node::Bracket {
                left: l1, right: r1, ..
            },
            Node::Bracket {
                left: l2, right: r2, ..
            },
        ) => hall_cmp(l1, l2).then_with(|| hall_cmp(r1, r2)),
        // equal weight rules out leaf against bracket
        _ => unreachable!("leaf and bracket of equal weight"),
    }
}

impl Ord for Commutator {
    fn cmp(&self, other: &Self) -> Ordering {
        hall_cmp(self, other)
    }
}

impl PartialOrd for Commutator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Commutator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Node::Leaf(i) => write!(f, "x{i}"),
            Node::Bracket { left, right, .. } => write!(f, "[{left},{right}]"),
        }
    }
}

impl fmt::Debug for Commutator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Ordered set of letters that commutators are built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Alphabet {
    /// Free generators `x1, ..., xd`.
    Base(u32),
    /// Commutators over the base letters, used as letters in their own right.
    /// Letter `i` is `letters[i - 1]`; the list is strictly increasing in
    /// Hall order.
    Derived(Vec<Commutator>),
}

impl Alphabet {
    pub fn base(d: u32) -> Self {
        Alphabet::Base(d)
    }

    pub fn derived(letters: Vec<Commutator>) -> Result<Self> {
        for pair in letters.windows(2) {
            if hall_cmp(&pair[0], &pair[1]) != Ordering::Less {
                return Err(Error::invalid(format!(
                    "derived alphabet must be strictly increasing in Hall order: {} then {}",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(Alphabet::Derived(letters))
    }

    pub fn len(&self) -> usize {
        match self {
            Alphabet::Base(d) => *d as usize,
            Alphabet::Derived(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Letter `i` (1-based) as a commutator over the base letters.
    pub fn letter(&self, i: u32) -> Commutator {
        match self {
            Alphabet::Base(_) => Commutator::leaf(i),
            Alphabet::Derived(v) => v[i as usize - 1].clone(),
        }
    }

    /// Rewrites a commutator over this alphabet as one over the base letters.
    pub fn expand(&self, c: &Commutator) -> Commutator {
        match self {
            Alphabet::Base(_) => c.clone(),
            Alphabet::Derived(v) => c.substitute(v),
        }
    }

    /// Weight over the base letters of a commutator written in this alphabet.
    pub fn base_weight(&self, c: &Commutator) -> u32 {
        match self {
            Alphabet::Base(_) => c.weight(),
            Alphabet::Derived(_) => self.expand(c).weight(),
        }
    }

    fn letter_count(&self) -> Result<u32> {
        if self.is_empty() {
            return Err(Error::invalid("alphabet is empty"));
        }
        u32::try_from(self.len()).map_err(|_| Error::invalid("alphabet too large"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn exponent(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// `[head, a1, ..., ap, b1^s1, ..., bq^sq]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardInvertator {
    pub head: Commutator,
    pub prefix: Vec<Commutator>,
    pub tail: Vec<(Commutator, Sign)>,
}

impl StandardInvertator {
    pub fn weight(&self) -> u32 {
        self.head.weight()
            + self.prefix.iter().map(Commutator::weight).sum::<u32>()
            + self.tail.iter().map(|(c, _)| c.weight()).sum::<u32>()
    }

    /// All components after the head, prefix then tail.
    pub fn components(&self) -> impl Iterator<Item = &Commutator> {
        self.prefix.iter().chain(self.tail.iter().map(|(c, _)| c))
    }

    /// The plain left-normed commutator, when every tail exponent is `+1`.
    pub fn as_commutator(&self) -> Option<Commutator> {
        if self.tail.iter().any(|(_, s)| *s == Sign::Minus) {
            return None;
        }
        Some(Commutator::left_normed(&self.head, self.components()))
    }

    fn sort_key(&self) -> (u32, Vec<&Commutator>, Vec<Sign>) {
        let mut seq = vec![&self.head];
        seq.extend(self.components());
        (self.weight(), seq, self.tail.iter().map(|(_, s)| *s).collect())
    }
}

impl fmt::Display for StandardInvertator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.head)?;
        for a in &self.prefix {
            write!(f, ",{a}")?;
        }
        for (b, s) in &self.tail {
            match s {
                Sign::Plus => write!(f, ",{b}^+1")?,
                Sign::Minus => write!(f, ",{b}^-1")?,
            }
        }
        write!(f, "]")
    }
}

/// Result of iterating basic-commutator construction along a class row.
#[derive(Debug, Clone)]
pub struct IteratedSet {
    pub count: BigCount,
    /// Members written over the base letters, in Hall order of the last
    /// level. `None` when the final level exceeds the enumeration cap.
    pub members: Option<Vec<Commutator>>,
}

struct Entry {
    tree: Commutator,
    right_rank: Option<usize>,
}

/// All basic commutators on `letters` letters up to some weight. Position in
/// `entries` is the Hall rank.
struct HallBasis {
    letters: u32,
    entries: Vec<Entry>,
    // level_start[w - 1]..level_start[w] holds weight w
    level_start: Vec<usize>,
    cap: u64,
}

impl HallBasis {
    fn new(letters: u32, cap: u64) -> Self {
        let entries = (1..=letters)
            .map(|i| Entry {
                tree: Commutator::leaf(i),
                right_rank: None,
            })
            .collect();
        HallBasis {
            letters,
            entries,
            level_start: vec![0, letters as usize],
            cap,
        }
    }

    fn top_weight(&self) -> u32 {
        (self.level_start.len() - 1) as u32
    }

    fn level(&self, weight: u32) -> std::ops::Range<usize> {
        self.level_start[weight as usize - 1]..self.level_start[weight as usize]
    }

    fn extend_to(&mut self, weight: u32) -> Result<()> {
        while self.top_weight() < weight {
            let n = self.top_weight() + 1;
            let predicted = witt(n, self.letters)?;
            if predicted.to_u64().is_none_or(|p| p > self.cap) {
                return Err(Error::resource(
                    format!("basic commutators of weight {n} on {} letters", self.letters),
                    predicted,
                    self.cap,
                ));
            }
            let mut fresh: Vec<(usize, usize)> = Vec::new();
            for left_weight in 1..n {
                let right_weight = n - left_weight;
                for u in self.level(left_weight) {
                    for v in self.level(right_weight) {
                        if u <= v {
                            continue;
                        }
                        if let Some(ur) = self.entries[u].right_rank {
                            if ur > v {
                                continue;
                            }
                        }
                        fresh.push((u, v));
                    }
                }
            }
            fresh.sort_unstable();
            for (u, v) in fresh {
                let tree = Commutator::bracket(self.entries[u].tree.clone(), self.entries[v].tree.clone());
                self.entries.push(Entry {
                    tree,
                    right_rank: Some(v),
                });
            }
            self.level_start.push(self.entries.len());
        }
        Ok(())
    }

    fn trees(&self, range: std::ops::Range<usize>) -> Vec<Commutator> {
        self.entries[range].iter().map(|e| e.tree.clone()).collect()
    }
}

/// Enumeration engine with a resource cap on materialized sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hall {
    pub cap: u64,
}

impl Default for Hall {
    fn default() -> Self {
        Hall {
            cap: DEFAULT_RESOURCE_CAP,
        }
    }
}

impl Hall {
    pub fn with_cap(cap: u64) -> Self {
        Hall { cap }
    }

    /// Basic commutators of exactly `weight`, in Hall order. Leaves refer to
    /// letters of `alphabet` by position.
    pub fn enumerate_basic(&self, alphabet: &Alphabet, weight: u32) -> Result<Vec<Commutator>> {
        if weight == 0 {
            return Err(Error::invalid("weight must be at least 1"));
        }
        let letters = alphabet.letter_count()?;
        let mut basis = HallBasis::new(letters, self.cap);
        basis.extend_to(weight)?;
        Ok(basis.trees(basis.level(weight)))
    }

    /// Size of the enumerated set. This materializes the set, so it is
    /// subject to the cap; use `arith::witt` for the closed form.
    pub fn count_basic(&self, alphabet: &Alphabet, weight: u32) -> Result<BigCount> {
        Ok(BigCount::from(self.enumerate_basic(alphabet, weight)?.len()))
    }

    /// `A_{m,n}`: basic commutators of weight `n` of the form
    /// `[c, a1, ..., ap]` with `c` and every `ai` of weight below `m`.
    pub fn generate_a_set(&self, m: u32, n: u32, alphabet: &Alphabet) -> Result<Vec<Commutator>> {
        check_window(m, n)?;
        let all = self.enumerate_basic(alphabet, n)?;
        Ok(all.into_iter().filter(|c| has_a_shape(c, m)).collect())
    }

    /// `B_{m,n}` truncated to total weight `weight_cap`, ordered by weight,
    /// then by the component sequence, then by the tail signs.
    pub fn generate_b_set(
        &self,
        m: u32,
        n: u32,
        alphabet: &Alphabet,
        weight_cap: u32,
    ) -> Result<Vec<StandardInvertator>> {
        check_window(m, n)?;
        if weight_cap < n {
            return Err(Error::invalid(format!(
                "weight cap {weight_cap} is below n = {n}; every member of B_{{m,n}} has weight at least n"
            )));
        }
        let letters = alphabet.letter_count()?;
        let mut basis = HallBasis::new(letters, self.cap);
        basis.extend_to(m - 1)?;
        let pool = 0..basis.level_start[m as usize - 1];

        let mut out = Vec::new();
        let mut seq: Vec<usize> = Vec::new();
        for head in pool.clone() {
            let head_weight = basis.entries[head].tree.weight();
            for first in pool.start..head {
                if let Some(hr) = basis.entries[head].right_rank {
                    if hr > first {
                        continue;
                    }
                }
                seq.clear();
                seq.push(first);
                let w = head_weight + basis.entries[first].tree.weight();
                self.extend_b(&basis, &pool, head, &mut seq, w, n, weight_cap, &mut out)?;
            }
        }
        out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_b(
        &self,
        basis: &HallBasis,
        pool: &std::ops::Range<usize>,
        head: usize,
        seq: &mut Vec<usize>,
        weight: u32,
        n: u32,
        weight_cap: u32,
        out: &mut Vec<StandardInvertator>,
    ) -> Result<()> {
        if weight > weight_cap {
            return Ok(());
        }
        if weight >= n {
            emit_invertators(basis, head, seq, n, out);
            if out.len() as u64 > self.cap {
                return Err(Error::resource(
                    "standard invertators",
                    format!("more than {}", self.cap),
                    self.cap,
                ));
            }
        }
        let last = *seq.last().expect("sequence is never empty");
        for next in last..pool.end {
            let w = weight + basis.entries[next].tree.weight();
            if w > weight_cap {
                continue;
            }
            seq.push(next);
            self.extend_b(basis, pool, head, seq, w, n, weight_cap, out)?;
            seq.pop();
        }
        Ok(())
    }

    /// `E_t` for the row: basic commutators of weight `c1 + 1` on the `d`
    /// base letters, then of weight `c2 + 1` on those, and so on.
    pub fn iterated_basic_set(&self, row: &ClassRow, d: u32) -> Result<IteratedSet> {
        if d == 0 {
            return Err(Error::invalid("number of letters must be at least 1"));
        }
        let mut alphabet = Alphabet::base(d);
        let weights: Vec<u32> = row.weights().collect();
        let mut members = Vec::new();
        for (level, &weight) in weights.iter().enumerate() {
            let last = level + 1 == weights.len();
            let predicted = witt(weight, alphabet.len())?;
            let over = predicted.to_u64().is_none_or(|p| p > self.cap);
            if over && last {
                return Ok(IteratedSet {
                    count: predicted,
                    members: None,
                });
            }
            if over {
                return Err(Error::resource(
                    format!("level {} of the iterated set", level + 1),
                    predicted,
                    self.cap,
                ));
            }
            if alphabet.is_empty() {
                members.clear();
                break;
            }
            members = self
                .enumerate_basic(&alphabet, weight)?
                .iter()
                .map(|c| alphabet.expand(c))
                .collect();
            if !last {
                alphabet = Alphabet::derived(members.clone())?;
            }
        }
        Ok(IteratedSet {
            count: BigCount::from(members.len()),
            members: Some(members),
        })
    }
}

fn check_window(m: u32, n: u32) -> Result<()> {
    if m < 2 || n < m {
        return Err(Error::invalid(format!("need 2 <= m <= n, got m = {m}, n = {n}")));
    }
    Ok(())
}

/// Walks the left spine: every spine node of weight `>= m` must have a right
/// component of weight `< m`, and the first spine node below `m` is the head.
fn has_a_shape(c: &Commutator, m: u32) -> bool {
    for (node, right) in c.left_spine() {
        if node.weight() < m {
            return true;
        }
        if right.weight() >= m {
            return false;
        }
    }
    // reached a letter
    true
}

fn emit_invertators(basis: &HallBasis, head: usize, seq: &[usize], n: u32, out: &mut Vec<StandardInvertator>) {
    let tree = |i: usize| basis.entries[i].tree.clone();
    let mut w = basis.entries[head].tree.weight();
    let mut p = 0;
    while p < seq.len() {
        let next = w + basis.entries[seq[p]].tree.weight();
        if next >= n {
            break;
        }
        w = next;
        p += 1;
    }
    debug_assert!(p < seq.len());
    let tail = &seq[p..];
    // runs of equal tail letters share one sign
    let mut runs: Vec<usize> = Vec::new();
    for (i, &letter) in tail.iter().enumerate() {
        if i == 0 || tail[i - 1] != letter {
            runs.push(1);
        } else {
            *runs.last_mut().unwrap() += 1;
        }
    }
    let prefix: Vec<Commutator> = seq[..p].iter().map(|&i| tree(i)).collect();
    for mask in 0u64..(1u64 << runs.len()) {
        let mut signed = Vec::with_capacity(tail.len());
        let mut pos = 0;
        for (r, &len) in runs.iter().enumerate() {
            let sign = if mask >> (runs.len() - 1 - r) & 1 == 1 {
                Sign::Plus
            } else {
                Sign::Minus
            };
            for &letter in &tail[pos..pos + len] {
                signed.push((tree(letter), sign));
            }
            pos += len;
        }
        out.push(StandardInvertator {
            head: tree(head),
            prefix: prefix.clone(),
            tail: signed,
        });
    }
}

/// Checks the basic-commutator conditions directly on the tree, over an
/// alphabet of `letters` letters.
pub fn is_basic(c: &Commutator, letters: u32) -> bool {
    match c.components() {
        None => c.as_leaf().is_some_and(|i| i >= 1 && i <= letters),
        Some((u, v)) => {
            if !is_basic(u, letters) || !is_basic(v, letters) {
                return false;
            }
            if u <= v {
                return false;
            }
            match u.components() {
                Some((_, u2)) => u2 <= v,
                None => true,
            }
        }
    }
}

/// Membership test for `A_{m,n}`.
pub fn is_in_a_set(c: &Commutator, m: u32, n: u32, letters: u32) -> bool {
    c.weight() == n && is_basic(c, letters) && has_a_shape(c, m)
}

/// Membership test for `B_{m,n}`.
pub fn is_in_b_set(inv: &StandardInvertator, m: u32, n: u32, letters: u32) -> bool {
    let comps: Vec<&Commutator> = std::iter::once(&inv.head).chain(inv.components()).collect();
    let q = comps.len() - 1;
    let p = inv.prefix.len();
    if p >= q {
        return false;
    }
    if comps.iter().any(|c| !is_basic(c, letters) || c.weight() >= m) {
        return false;
    }
    // head > a1 <= a2 <= ... <= aq
    if comps[0] <= comps[1] || comps[1..].windows(2).any(|w| w[0] > w[1]) {
        return false;
    }
    if let Some((_, b2)) = inv.head.components() {
        if b2 > comps[1] {
            return false;
        }
    }
    for (i, (bi, si)) in inv.tail.iter().enumerate() {
        for (bj, sj) in &inv.tail[i + 1..] {
            if bi == bj && si != sj {
                return false;
            }
        }
    }
    let prefix_weight: u32 = comps[..=p].iter().map(|c| c.weight()).sum();
    let with_next = prefix_weight + comps[p + 1].weight();
    prefix_weight < n && n <= with_next
}

/// The set `A_{m,m} ∪ ... ∪ A_{m,n-1} ∪ B_{m,n}` has distinct members; this
/// returns any element written twice, comparing all-positive invertators as
/// plain commutators.
pub fn find_overlap(a_sets: &[Vec<Commutator>], b_set: &[StandardInvertator]) -> Option<String> {
    let mut seen: HashSet<Commutator> = HashSet::new();
    for c in a_sets.iter().flatten() {
        if !seen.insert(c.clone()) {
            return Some(c.to_string());
        }
    }
    let mut seen_inv: HashSet<&StandardInvertator> = HashSet::new();
    for inv in b_set {
        if !seen_inv.insert(inv) {
            return Some(inv.to_string());
        }
        if let Some(c) = inv.as_commutator() {
            if seen.contains(&c) {
                return Some(inv.to_string());
            }
        }
    }
    None
}

pub fn enumerate_basic(alphabet: &Alphabet, weight: u32) -> Result<Vec<Commutator>> {
    Hall::default().enumerate_basic(alphabet, weight)
}

pub fn count_basic(alphabet: &Alphabet, weight: u32) -> Result<BigCount> {
    Hall::default().count_basic(alphabet, weight)
}

pub fn generate_a_set(m: u32, n: u32, alphabet: &Alphabet) -> Result<Vec<Commutator>> {
    Hall::default().generate_a_set(m, n, alphabet)
}

pub fn generate_b_set(m: u32, n: u32, alphabet: &Alphabet, weight_cap: u32) -> Result<Vec<StandardInvertator>> {
    Hall::default().generate_b_set(m, n, alphabet, weight_cap)
}

pub fn iterated_basic_set(row: &ClassRow, d: u32) -> Result<IteratedSet> {
    Hall::default().iterated_basic_set(row, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::iterated_witt;

    fn x(i: u32) -> Commutator {
        Commutator::leaf(i)
    }

    fn br(a: Commutator, b: Commutator) -> Commutator {
        Commutator::bracket(a, b)
    }

    fn row(r: &[u32]) -> ClassRow {
        ClassRow::new(r.to_vec()).unwrap()
    }

    /// Brute force: every bracket tree of the given weight over `d` letters,
    /// filtered by `is_basic`.
    fn all_trees(d: u32, weight: u32) -> Vec<Commutator> {
        if weight == 1 {
            return (1..=d).map(x).collect();
        }
        let mut out = Vec::new();
        for lw in 1..weight {
            for l in all_trees(d, lw) {
                for r in all_trees(d, weight - lw) {
                    out.push(br(l.clone(), r));
                }
            }
        }
        out
    }

    #[test]
    fn weight_one_is_the_alphabet() {
        let got = enumerate_basic(&Alphabet::base(3), 1).unwrap();
        assert_eq!(got, vec![x(1), x(2), x(3)]);
    }

    #[test]
    fn weight_three_on_two_letters() {
        let got = enumerate_basic(&Alphabet::base(2), 3).unwrap();
        assert_eq!(got.len(), 2);
        assert_eq!(got[0], br(br(x(2), x(1)), x(1)));
        assert_eq!(got[1], br(br(x(2), x(1)), x(2)));
        assert_eq!(got[0].to_string(), "[[x2,x1],x1]");
    }

    #[test]
    fn one_letter_has_no_brackets() {
        for w in 2..8 {
            assert!(enumerate_basic(&Alphabet::base(1), w).unwrap().is_empty());
        }
        assert_eq!(count_basic(&Alphabet::base(1), 5).unwrap(), BigCount::zero());
    }

    #[test]
    fn counts() {
        assert_eq!(count_basic(&Alphabet::base(4), 2).unwrap(), 6u64.into());
        assert_eq!(count_basic(&Alphabet::base(3), 3).unwrap(), 8u64.into());
    }

    #[test]
    fn matches_brute_force_filter() {
        for d in 1..=3 {
            for w in 1..=5 {
                let mut brute: Vec<Commutator> = all_trees(d, w).into_iter().filter(|c| is_basic(c, d)).collect();
                brute.sort();
                assert_eq!(enumerate_basic(&Alphabet::base(d), w).unwrap(), brute, "d={d} w={w}");
            }
        }
    }

    #[test]
    fn count_equals_witt() {
        for d in 1..=4u32 {
            for w in 1..=6 {
                let list = enumerate_basic(&Alphabet::base(d), w).unwrap();
                assert_eq!(BigCount::from(list.len()), witt(w, d).unwrap(), "d={d} w={w}");
                assert!(list.iter().all(|c| is_basic(c, d)));
                assert!(list.windows(2).all(|p| p[0] < p[1]));
            }
        }
    }

    #[test]
    fn rejects_empty_alphabet_and_zero_weight() {
        assert!(matches!(
            enumerate_basic(&Alphabet::base(0), 2),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            enumerate_basic(&Alphabet::base(2), 0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn resource_guard_trips() {
        let hall = Hall::with_cap(100);
        // chi_6(3) = 116
        assert!(matches!(
            hall.enumerate_basic(&Alphabet::base(3), 6),
            Err(Error::ResourceLimit { .. })
        ));
        assert_eq!(hall.enumerate_basic(&Alphabet::base(3), 5).unwrap().len(), 48);
    }

    #[test]
    fn a_sets() {
        let two = Alphabet::base(2);
        assert_eq!(generate_a_set(2, 2, &two).unwrap(), vec![br(x(2), x(1))]);
        assert_eq!(generate_a_set(3, 3, &two).unwrap().len(), 2);
        assert!(generate_a_set(2, 2, &Alphabet::base(1)).unwrap().is_empty());
        assert!(generate_a_set(1, 2, &two).is_err());
        assert!(generate_a_set(3, 2, &two).is_err());
        for m in 2..=4 {
            for d in 1..=3 {
                let alpha = Alphabet::base(d);
                assert_eq!(
                    generate_a_set(m, m, &alpha).unwrap(),
                    enumerate_basic(&alpha, m).unwrap()
                );
            }
        }
    }

    #[test]
    fn a_set_shapes() {
        // [[x2,x1],[x2,x1,x1]] is not of the form [c, a1, ...] with components of weight < 3
        let d = 2;
        let a34 = generate_a_set(3, 4, &Alphabet::base(d)).unwrap();
        for c in &a34 {
            assert!(is_in_a_set(c, 3, 4, d));
        }
        // left-normed ones: [x2,x1,x1,x1], [x2,x1,x1,x2], [x2,x1,x2,x2]
        assert_eq!(a34.len(), 3);
        // weight 4 basics on 2 letters: chi_4(2) = 3, all left normed
        let a25 = generate_a_set(2, 5, &Alphabet::base(2)).unwrap();
        assert!(a25.iter().all(|c| c.left_spine().iter().all(|(_, r)| r.weight() == 1)));
    }

    #[test]
    fn b_set_small_cases() {
        assert!(generate_b_set(2, 3, &Alphabet::base(1), 4).unwrap().is_empty());
        assert!(generate_b_set(2, 3, &Alphabet::base(2), 2).is_err());
        let b = generate_b_set(2, 3, &Alphabet::base(2), 3).unwrap();
        let rendered: Vec<String> = b.iter().map(|i| i.to_string()).collect();
        assert_eq!(
            rendered,
            vec!["[x2,x1,x1^-1]", "[x2,x1,x1^+1]", "[x2,x1,x2^-1]", "[x2,x1,x2^+1]"]
        );
        for inv in &b {
            assert!(is_in_b_set(inv, 2, 3, 2));
            assert_eq!(inv.prefix.len(), 1);
            assert_eq!(inv.tail.len(), 1);
        }
    }

    #[test]
    fn b_set_signs_shared_by_equal_letters() {
        let b = generate_b_set(2, 3, &Alphabet::base(2), 4).unwrap();
        // [x2,x1,x1^s,x1^s] only with matching signs
        let doubles: Vec<_> = b
            .iter()
            .filter(|i| i.tail.len() == 2 && i.tail[0].0 == i.tail[1].0)
            .collect();
        assert!(!doubles.is_empty());
        assert!(doubles.iter().all(|i| i.tail[0].1 == i.tail[1].1));
        assert!(b.iter().all(|i| is_in_b_set(i, 2, 3, 2)));
    }

    #[test]
    fn b_validator_rejects_bad_words() {
        let ok = StandardInvertator {
            head: x(2),
            prefix: vec![x(1)],
            tail: vec![(x(1), Sign::Plus)],
        };
        assert!(is_in_b_set(&ok, 2, 3, 2));
        let mut bad = ok.clone();
        bad.head = x(1);
        assert!(!is_in_b_set(&bad, 2, 3, 2));
        let mut bad = ok.clone();
        bad.tail = vec![(x(1), Sign::Plus), (x(1), Sign::Minus)];
        assert!(!is_in_b_set(&bad, 2, 3, 2));
        let mut bad = ok.clone();
        bad.prefix.clear();
        assert!(!is_in_b_set(&bad, 2, 3, 2));
        let mut bad = ok;
        bad.tail.clear();
        assert!(!is_in_b_set(&bad, 2, 3, 2));
    }

    #[test]
    fn iterated_sets() {
        let r = iterated_basic_set(&row(&[1, 1]), 3).unwrap();
        assert_eq!(r.count, 3u64.into());
        let members = r.members.unwrap();
        assert!(members.iter().all(|c| c.weight() == 4));
        assert_eq!(iterated_basic_set(&row(&[2]), 2).unwrap().count, 2u64.into());
        assert_eq!(iterated_basic_set(&row(&[1]), 1).unwrap().count, BigCount::zero());
        assert_eq!(iterated_basic_set(&row(&[1, 1]), 4).unwrap().count, 15u64.into());
        for r in [&[1u32, 1][..], &[1, 2], &[2, 1], &[1, 1, 1]] {
            for d in 1..=3 {
                let set = iterated_basic_set(&row(r), d).unwrap();
                assert_eq!(set.count, iterated_witt(&row(r), d).unwrap());
            }
        }
    }

    #[test]
    fn iterated_over_cap_returns_prediction() {
        let hall = Hall::with_cap(10);
        // (1,1) on 5 letters: chi_2(10) = 45
        let s = hall.iterated_basic_set(&row(&[1, 1]), 5).unwrap();
        assert_eq!(s.count, 45u64.into());
        assert!(s.members.is_none());
        // (1,1,1) on 6: the middle level chi_2(15) = 105 is over the cap
        assert!(matches!(
            hall.iterated_basic_set(&row(&[1, 1, 1]), 6),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn derived_alphabet_must_be_sorted() {
        assert!(Alphabet::derived(vec![br(x(2), x(1)), x(1)]).is_err());
        assert!(Alphabet::derived(vec![x(1), x(1)]).is_err());
        let alpha = Alphabet::derived(vec![br(x(2), x(1)), br(x(3), x(1))]).unwrap();
        assert_eq!(alpha.base_weight(&br(x(2), x(1))), 4);
        assert_eq!(alpha.expand(&br(x(2), x(1))).to_string(), "[[x3,x1],[x2,x1]]");
    }
}
