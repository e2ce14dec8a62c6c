//! Binary relations on a small finite support `{1..n}` and the poset
//! primitives built on them.
//!
//! A relation is a dense bit matrix: row `x` holds the set of `y` with
//! `(x, y)` in the relation. Supports of up to [`MAX_SUPPORT`] labels are
//! handled.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_SUPPORT: usize = 64;

/// A set of labels drawn from `{1..64}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelSet(u64);

impl LabelSet {
    pub const EMPTY: LabelSet = LabelSet(0);

    pub fn from_bits(bits: u64) -> Self {
        LabelSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{lo..=hi}`; empty when `lo > hi`.
    pub fn range(lo: usize, hi: usize) -> Self {
        (lo..=hi).collect()
    }

    pub fn insert(&mut self, label: usize) {
        debug_assert!((1..=MAX_SUPPORT).contains(&label));
        self.0 |= 1 << (label - 1);
    }

    pub fn remove(&mut self, label: usize) {
        self.0 &= !(1 << (label - 1));
    }

    pub fn contains(self, label: usize) -> bool {
        (1..=MAX_SUPPORT).contains(&label) && self.0 & (1 << (label - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: LabelSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_superset(self, other: LabelSet) -> bool {
        other.is_subset(self)
    }

    pub fn union(self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 | other.0)
    }

    pub fn intersection(self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 & other.0)
    }

    pub fn difference(self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let low = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(low + 1)
        })
    }
}

impl FromIterator<usize> for LabelSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = LabelSet::EMPTY;
        for label in iter {
            set.insert(label);
        }
        set
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for LabelSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for LabelSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(deserializer)?;
        if let Some(bad) = labels.iter().find(|&&l| !(1..=MAX_SUPPORT).contains(&l)) {
            return Err(serde::de::Error::custom(format!(
                "label {bad} out of range"
            )));
        }
        Ok(labels.into_iter().collect())
    }
}

/// A binary relation on `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryRelation {
    n: usize,
    rows: Vec<LabelSet>,
}

impl BinaryRelation {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_SUPPORT, "support {n} exceeds {MAX_SUPPORT}");
        BinaryRelation {
            n,
            rows: vec![LabelSet::EMPTY; n],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut rel = Self::empty(n);
        let all = LabelSet::range(1, n);
        rel.rows.iter_mut().for_each(|row| *row = all);
        rel
    }

    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_SUPPORT {
            return Err(Error::OutOfRange {
                what: "support size",
                value: n,
                min: 0,
                max: MAX_SUPPORT,
            });
        }
        let mut rel = Self::empty(n);
        for (x, y) in pairs {
            rel.check_label(x)?;
            rel.check_label(y)?;
            rel.insert(x, y);
        }
        Ok(rel)
    }

    /// The strict chain `1 < 2 < … < n`.
    pub fn chain(n: usize) -> Self {
        let mut rel = Self::empty(n);
        for x in 1..=n {
            rel.rows[x - 1] = LabelSet::range(x + 1, n);
        }
        rel
    }

    pub fn antichain(n: usize) -> Self {
        Self::empty(n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn check_label(&self, label: usize) -> Result<()> {
        if (1..=self.n).contains(&label) {
            Ok(())
        } else {
            Err(Error::LabelOutOfRange { label, n: self.n })
        }
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        (1..=self.n).contains(&x) && self.rows[x - 1].contains(y)
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        self.rows[x - 1].insert(y);
    }

    pub fn remove(&mut self, x: usize, y: usize) {
        self.rows[x - 1].remove(y);
    }

    /// `{y : x R y}`, unchecked.
    pub fn row(&self, x: usize) -> LabelSet {
        self.rows[x - 1]
    }

    /// `{y : y R x}`, unchecked.
    pub fn column(&self, x: usize) -> LabelSet {
        (1..=self.n)
            .filter(|&y| self.rows[y - 1].contains(x))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    /// Pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.n).flat_map(move |x| self.rows[x - 1].iter().map(move |y| (x, y)))
    }

    pub fn inverse(&self) -> Self {
        let mut out = Self::empty(self.n);
        for (x, y) in self.pairs() {
            out.insert(y, x);
        }
        out
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_support(other)?;
        Ok(self.zip_rows(other, LabelSet::union))
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.same_support(other)?;
        Ok(self.zip_rows(other, LabelSet::difference))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.n == other.n
            && self
                .rows
                .iter()
                .zip(&other.rows)
                .all(|(a, b)| a.is_subset(*b))
    }

    fn zip_rows(&self, other: &Self, op: impl Fn(LabelSet, LabelSet) -> LabelSet) -> Self {
        BinaryRelation {
            n: self.n,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    fn same_support(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::SupportMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    /// `x (a ∘ b) y` iff there is a `z` with `x a z` and `z b y`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.same_support(other)?;
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .fold(LabelSet::EMPTY, |acc, z| acc.union(other.row(z)))
            })
            .collect();
        Ok(BinaryRelation { n: self.n, rows })
    }

    /// `a ∪ a⁻¹`.
    pub fn symmetric_closure(&self) -> Self {
        self.zip_rows(&self.inverse(), LabelSet::union)
    }

    /// Complement over the full square `{1..n}²`, diagonal included.
    pub fn complement(&self) -> Self {
        let all = LabelSet::range(1, self.n);
        BinaryRelation {
            n: self.n,
            rows: self.rows.iter().map(|r| all.difference(*r)).collect(),
        }
    }

    pub fn transitive_closure(&self) -> Self {
        // Warshall over bit rows.
        let mut rows = self.rows.clone();
        for k in 1..=self.n {
            let via = rows[k - 1];
            for row in rows.iter_mut() {
                if row.contains(k) {
                    *row = row.union(via);
                }
            }
        }
        BinaryRelation { n: self.n, rows }
    }

    pub fn is_irreflexive(&self) -> bool {
        (1..=self.n).all(|x| !self.contains(x, x))
    }

    pub fn is_transitive(&self) -> bool {
        (1..=self.n).all(|x| {
            self.row(x)
                .iter()
                .all(|y| self.row(y).is_subset(self.row(x)))
        })
    }

    pub fn is_strict_order(&self) -> bool {
        self.is_irreflexive() && self.is_transitive()
    }

    /// `R(k)`, the principal filter of `k` without `k` itself.
    pub fn principal_filter(&self, k: usize) -> Result<LabelSet> {
        self.check_label(k)?;
        let mut set = self.row(k);
        set.remove(k);
        Ok(set)
    }

    /// `R⁻¹(k)`, the principal ideal of `k` without `k` itself.
    pub fn principal_ideal(&self, k: usize) -> Result<LabelSet> {
        self.check_label(k)?;
        let mut set = self.column(k);
        set.remove(k);
        Ok(set)
    }

    /// The relation induced on `labels`, renumbered `1..labels.len()` in
    /// the given order.
    pub fn induced(&self, labels: &[usize]) -> Self {
        let mut out = Self::empty(labels.len());
        for (i, &x) in labels.iter().enumerate() {
            for (j, &y) in labels.iter().enumerate() {
                if self.contains(x, y) {
                    out.insert(i + 1, j + 1);
                }
            }
        }
        out
    }

    /// Renames labels: `x` becomes `mapping[x - 1]`.
    pub fn relabel(&self, mapping: &[usize]) -> Self {
        assert_eq!(mapping.len(), self.n);
        let mut out = Self::empty(self.n);
        for (x, y) in self.pairs() {
            out.insert(mapping[x - 1], mapping[y - 1]);
        }
        out
    }

    /// `x` and `y` are incomparable and have the same strict up- and
    /// down-sets outside `{x, y}`; equivalently the transposition of `x`
    /// and `y` is an automorphism.
    pub fn are_order_equivalent(&self, x: usize, y: usize) -> Result<bool> {
        self.check_label(x)?;
        self.check_label(y)?;
        if x == y {
            return Ok(true);
        }
        if self.contains(x, y) || self.contains(y, x) {
            return Ok(false);
        }
        let mut pair = LabelSet::EMPTY;
        pair.insert(x);
        pair.insert(y);
        let up_same = self.row(x).difference(pair) == self.row(y).difference(pair);
        let down_same = self.column(x).difference(pair) == self.column(y).difference(pair);
        Ok(up_same && down_same)
    }

    pub fn contains_pattern(&self, pattern: ForbiddenPattern) -> bool {
        let target = pattern.relation();
        if self.n < 4 {
            return false;
        }
        let mut chosen = Vec::with_capacity(4);
        self.any_subset(1, &mut chosen, &target)
    }

    fn any_subset(&self, start: usize, chosen: &mut Vec<usize>, target: &Self) -> bool {
        if chosen.len() == 4 {
            return are_isomorphic(&self.induced(chosen), target);
        }
        for x in start..=self.n {
            if self.n - x + 1 < 4 - chosen.len() {
                break;
            }
            chosen.push(x);
            let found = self.any_subset(x + 1, chosen, target);
            chosen.pop();
            if found {
                return true;
            }
        }
        false
    }
}

impl fmt::Debug for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryRelation(n={}, ", self.n)?;
        f.debug_set().entries(self.pairs()).finish()?;
        write!(f, ")")
    }
}

/// Order isomorphism by degree pruning and backtracking.
pub fn are_isomorphic(a: &BinaryRelation, b: &BinaryRelation) -> bool {
    if a.n != b.n || a.len() != b.len() {
        return false;
    }
    let degrees = |r: &BinaryRelation| -> Vec<(usize, usize)> {
        (1..=r.n)
            .map(|x| (r.row(x).len(), r.column(x).len()))
            .collect()
    };
    let (da, db) = (degrees(a), degrees(b));
    let mut sa = da.clone();
    let mut sb = db.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    let mut image = vec![0usize; a.n];
    let mut used = LabelSet::EMPTY;
    extend_isomorphism(a, b, &da, &db, 1, &mut image, &mut used)
}

fn extend_isomorphism(
    a: &BinaryRelation,
    b: &BinaryRelation,
    da: &[(usize, usize)],
    db: &[(usize, usize)],
    x: usize,
    image: &mut [usize],
    used: &mut LabelSet,
) -> bool {
    if x > a.n {
        return true;
    }
    for candidate in 1..=b.n {
        if used.contains(candidate) || da[x - 1] != db[candidate - 1] {
            continue;
        }
        let consistent = (1..x).all(|w| {
            let v = image[w - 1];
            a.contains(w, x) == b.contains(v, candidate)
                && a.contains(x, w) == b.contains(candidate, v)
        }) && a.contains(x, x) == b.contains(candidate, candidate);
        if !consistent {
            continue;
        }
        image[x - 1] = candidate;
        used.insert(candidate);
        if extend_isomorphism(a, b, da, db, x + 1, image, used) {
            return true;
        }
        used.remove(candidate);
    }
    false
}

/// The two four-element posets whose absence characterizes series
/// parallel interval orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ForbiddenPattern {
    /// Two disjoint 2-chains: `1 < 2`, `3 < 4`.
    TwoPlusTwo,
    /// The zigzag `1 < 2 > 3 < 4` (the N poset).
    FenceFour,
}

impl ForbiddenPattern {
    pub const ALL: [ForbiddenPattern; 2] =
        [ForbiddenPattern::TwoPlusTwo, ForbiddenPattern::FenceFour];

    pub fn relation(self) -> BinaryRelation {
        let pairs: &[(usize, usize)] = match self {
            ForbiddenPattern::TwoPlusTwo => &[(1, 2), (3, 4)],
            ForbiddenPattern::FenceFour => &[(1, 2), (3, 2), (3, 4)],
        };
        BinaryRelation::from_pairs(4, pairs.iter().copied()).expect("fixed pattern")
    }
}
