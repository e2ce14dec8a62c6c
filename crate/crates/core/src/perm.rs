//! Permutations in one-line notation, 312-avoidance, the bijection with
//! series parallel interval orders, and the weak and strong Bruhat orders.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::relation::{BinaryRelation, LabelSet, MAX_SUPPORT};
use crate::spio::Spio;

/// Largest `n` for which the reduction search over all of `S_n` runs.
pub const MAX_BFS_SIZE: usize = 7;
pub const MAX_ENUMERATED_SIZE: usize = 8;

/// `a₁a₂…aₙ`, a bijection on `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n > MAX_SUPPORT {
            return Err(Error::OutOfRange {
                what: "permutation length",
                value: n,
                min: 0,
                max: MAX_SUPPORT,
            });
        }
        let mut seen = LabelSet::EMPTY;
        for &v in &values {
            if !(1..=n).contains(&v) || seen.contains(v) {
                return Err(Error::Parse(format!(
                    "{values:?} is not a permutation of 1..{n}"
                )));
            }
            seen.insert(v);
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    pub fn reversed(n: usize) -> Self {
        Permutation {
            values: (1..=n).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `π(i)`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// 1-based position of every value, indexed by `value - 1`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.n()];
        for (i, &v) in self.values.iter().enumerate() {
            pos[v - 1] = i + 1;
        }
        pos
    }

    fn swapped(&self, i: usize, j: usize) -> Self {
        let mut values = self.values.clone();
        values.swap(i, j);
        Permutation { values }
    }

    /// Every permutation obtained by swapping an inverted pair.
    pub fn reductions(&self) -> impl Iterator<Item = Permutation> + '_ {
        let n = self.n();
        (0..n).flat_map(move |i| {
            (i + 1..n)
                .filter(move |&j| self.values[i] > self.values[j])
                .map(move |j| self.swapped(i, j))
        })
    }

    /// Every permutation obtained by swapping an adjacent inverted pair.
    pub fn simple_reductions(&self) -> impl Iterator<Item = Permutation> + '_ {
        (0..self.n().saturating_sub(1))
            .filter(|&i| self.values[i] > self.values[i + 1])
            .map(|i| self.swapped(i, i + 1))
    }

    pub fn inversion_count(&self) -> usize {
        let v = &self.values;
        (0..v.len())
            .map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count())
            .sum()
    }

    fn require_avoider(&self) -> Result<()> {
        if avoids_312(self) {
            Ok(())
        } else {
            Err(Error::Not312Avoiding(self.to_string()))
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() <= 9 { "" } else { "," };
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Contiguous digits (`2146753`) or comma-separated values.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values = if s.is_empty() {
            Vec::new()
        } else if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("unexpected {c:?} in permutation")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(values)
    }
}

/// No `i < j < k` with `a_j < a_k < a_i`.
pub fn avoids_312(p: &Permutation) -> bool {
    // An ascent a_j < a_k with some earlier a_i above a_k.
    let v = &p.values;
    let n = v.len();
    for j in 0..n {
        for k in j + 1..n {
            if v[j] < v[k] && v[..j].iter().any(|&a| a > v[k]) {
                return false;
            }
        }
    }
    true
}

/// `E(π)`: pairs `(a_i, a_j)` with `i < j` and `a_i > a_j`, as a relation
/// on values.
pub fn inversions(p: &Permutation) -> BinaryRelation {
    let v = &p.values;
    let mut e = BinaryRelation::empty(v.len());
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                e.insert(v[i], v[j]);
            }
        }
    }
    e
}

fn check_value(p: &Permutation, v: usize) -> Result<()> {
    if (1..=p.n()).contains(&v) {
        Ok(())
    } else {
        Err(Error::LabelOutOfRange { label: v, n: p.n() })
    }
}

/// `f_π(v)`: values greater than `v` appearing after it.
pub fn filter_set(p: &Permutation, v: usize) -> Result<LabelSet> {
    check_value(p, v)?;
    let pos = p.positions()[v - 1];
    Ok(p.values[pos..].iter().copied().filter(|&w| w > v).collect())
}

/// `i_π(v)`: values smaller than `v` appearing before it.
pub fn ideal_set(p: &Permutation, v: usize) -> Result<LabelSet> {
    check_value(p, v)?;
    let pos = p.positions()[v - 1];
    Ok(p.values[..pos - 1]
        .iter()
        .copied()
        .filter(|&w| w < v)
        .collect())
}

/// Prefix maxima `max_π(k)`.
pub fn max_vector(p: &Permutation) -> Vec<usize> {
    p.values
        .iter()
        .scan(0, |m, &v| {
            *m = (*m).max(v);
            Some(*m)
        })
        .collect()
}

/// All `m` with `m = n` or `m` appearing before `m + 1`.
pub fn consecutive_noninversions(p: &Permutation) -> LabelSet {
    let n = p.n();
    let pos = p.positions();
    (1..=n).filter(|&m| m == n || pos[m - 1] < pos[m]).collect()
}

/// The permutation listing labels by decreasing filter, ties broken by
/// decreasing label. The input must be canonically labelled.
pub fn spio_to_perm(a: &Spio) -> Result<Permutation> {
    if !a.is_canonical() {
        return Err(Error::NotCanonical);
    }
    let rel = a.relation();
    let n = rel.n();
    let filters: Vec<LabelSet> = (1..=n).map(|k| rel.row(k)).collect();
    for f in &filters {
        for g in &filters {
            if !f.is_subset(*g) && !g.is_subset(*f) {
                return Err(Error::FiltersNotNested);
            }
        }
    }
    let mut labels: Vec<usize> = (1..=n).collect();
    // Nested filters: inclusion agrees with size.
    labels.sort_by(|&k, &j| {
        filters[j - 1]
            .len()
            .cmp(&filters[k - 1].len())
            .then(j.cmp(&k))
    });
    Permutation::new(labels)
}

/// `x R y` iff `y > x` and `y` follows `x`.
pub fn perm_to_spio(p: &Permutation) -> Result<Spio> {
    p.require_avoider()?;
    let n = p.n();
    let mut rel = BinaryRelation::empty(n);
    for (i, &x) in p.values.iter().enumerate() {
        for &y in &p.values[i + 1..] {
            if y > x {
                rel.insert(x, y);
            }
        }
    }
    let spio = Spio::new(rel)?;
    debug_assert!(spio.is_canonical());
    Ok(spio)
}

fn same_length(p1: &Permutation, p2: &Permutation) -> Result<()> {
    if p1.n() == p2.n() {
        Ok(())
    } else {
        Err(Error::SupportMismatch {
            left: p1.n(),
            right: p2.n(),
        })
    }
}

/// Weak Bruhat order by inversion sets: `E(π₁) ⊆ E(π₂)`.
pub fn leq_weak_bruhat(p1: &Permutation, p2: &Permutation) -> Result<bool> {
    same_length(p1, p2)?;
    Ok(inversions(p1).is_subset(&inversions(p2)))
}

/// Weak Bruhat order by searching simple reductions down from `p2`.
pub fn leq_weak_bruhat_bfs(p1: &Permutation, p2: &Permutation) -> Result<bool> {
    same_length(p1, p2)?;
    check_bfs_size(p1.n())?;
    Ok(reachable_below(p2, p1, |p| p.simple_reductions().collect()))
}

/// Strong Bruhat order by searching reductions down from `p2` over all of
/// `S_n`; intermediate permutations may contain 312.
///
/// Past the search limit, two 312-avoiders are compared by prefix maxima
/// (checked against the search up to the limit); anything else is an error.
pub fn leq_strong_bruhat(p1: &Permutation, p2: &Permutation) -> Result<bool> {
    same_length(p1, p2)?;
    if p1.n() > MAX_BFS_SIZE && avoids_312(p1) && avoids_312(p2) {
        return leq_strong_bruhat_max(p1, p2);
    }
    check_bfs_size(p1.n())?;
    Ok(reachable_below(p2, p1, |p| p.reductions().collect()))
}

/// Strong Bruhat order on `Av(312)` by prefix maxima.
pub fn leq_strong_bruhat_max(p1: &Permutation, p2: &Permutation) -> Result<bool> {
    same_length(p1, p2)?;
    p1.require_avoider()?;
    p2.require_avoider()?;
    Ok(max_vector(p1)
        .iter()
        .zip(max_vector(p2))
        .all(|(a, b)| *a <= b))
}

fn check_bfs_size(n: usize) -> Result<()> {
    if n <= MAX_BFS_SIZE {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what: "permutation length for reduction search",
            value: n,
            min: 0,
            max: MAX_BFS_SIZE,
        })
    }
}

fn reachable_below(
    from: &Permutation,
    target: &Permutation,
    moves: impl Fn(&Permutation) -> Vec<Permutation>,
) -> bool {
    let target_inv = target.inversion_count();
    let mut seen = HashSet::from([from.clone()]);
    let mut queue = VecDeque::from([from.clone()]);
    while let Some(p) = queue.pop_front() {
        if p == *target {
            return true;
        }
        for q in moves(&p) {
            // Every reduction strictly lowers the inversion count.
            if q.inversion_count() >= target_inv && seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    false
}

/// The sequence is a chain of reductions, each step swapping one
/// inverted pair of the previous permutation.
pub fn is_reduction_sequence(chain: &[Permutation]) -> bool {
    chain
        .windows(2)
        .all(|w| w[0].reductions().any(|r| r == w[1]))
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut current: Vec<usize> = (1..=n).collect();
    let mut out = vec![Permutation {
        values: current.clone(),
    }];
    // Standard next-permutation step.
    while let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) {
        let j = (i..n)
            .rev()
            .find(|&j| current[j] > current[i - 1])
            .expect("pivot");
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(Permutation {
            values: current.clone(),
        });
    }
    out
}

/// `Av_n(312)` in lexicographic order.
pub fn enumerate_av312(n: usize) -> Result<Vec<Permutation>> {
    if n > MAX_ENUMERATED_SIZE {
        return Err(Error::OutOfRange {
            what: "permutation length",
            value: n,
            min: 0,
            max: MAX_ENUMERATED_SIZE,
        });
    }
    Ok(all_permutations(n).into_iter().filter(avoids_312).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BruhatKind {
    Weak,
    Strong,
}

/// Precomputed Bruhat comparisons over all of `S_n`, derived from the
/// reduction moves alone. Read-only once built.
#[derive(Clone, Debug)]
pub struct BruhatTable {
    kind: BruhatKind,
    perms: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    /// `below[i]` is the down-set of `perms[i]` as a bitset over indices.
    below: Vec<Vec<u64>>,
}

impl BruhatTable {
    pub fn build(kind: BruhatKind, n: usize) -> Result<Self> {
        check_bfs_size(n)?;
        let perms = all_permutations(n);
        let index: HashMap<Permutation, usize> = perms
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let words = perms.len().div_ceil(64);
        let mut below = vec![vec![0u64; words]; perms.len()];
        let mut by_length: Vec<usize> = (0..perms.len()).collect();
        by_length.sort_by_key(|&i| perms[i].inversion_count());
        for &i in &by_length {
            let mut down = vec![0u64; words];
            down[i / 64] |= 1 << (i % 64);
            let moves: Vec<Permutation> = match kind {
                BruhatKind::Weak => perms[i].simple_reductions().collect(),
                BruhatKind::Strong => perms[i].reductions().collect(),
            };
            for q in moves {
                let j = index[&q];
                for (d, s) in down.iter_mut().zip(&below[j]) {
                    *d |= s;
                }
            }
            below[i] = down;
        }
        Ok(BruhatTable {
            kind,
            perms,
            index,
            below,
        })
    }

    pub fn kind(&self) -> BruhatKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.perms.first().map_or(0, Permutation::n)
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn leq(&self, p1: &Permutation, p2: &Permutation) -> Result<bool> {
        same_length(p1, p2)?;
        let lookup = |p: &Permutation| {
            self.index.get(p).copied().ok_or(Error::SupportMismatch {
                left: p.n(),
                right: self.n(),
            })
        };
        let (i, j) = (lookup(p1)?, lookup(p2)?);
        Ok(self.below[j][i / 64] & (1 << (i % 64)) != 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("2146753").values(), &[2, 1, 4, 6, 7, 5, 3]);
        let long = Permutation::reversed(10);
        assert_eq!(long.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(long.to_string().parse::<Permutation>().unwrap(), long);
        assert!("122".parse::<Permutation>().is_err());
        assert!("14".parse::<Permutation>().is_err());
        assert!("1a".parse::<Permutation>().is_err());
        assert_eq!(p("").n(), 0);
    }

    #[test]
    fn avoidance_examples() {
        assert!(avoids_312(&p("2146753")));
        assert!(!avoids_312(&p("312")));
        assert!(!avoids_312(&p("768453921")));
        assert!(avoids_312(&p("468753921")));
        assert!(avoids_312(&p("768543921")));
    }

    #[test]
    fn avoidance_matches_brute_force_triples() {
        for n in 0..=6 {
            for q in all_permutations(n) {
                let v = q.values();
                let mut has = false;
                for i in 0..n {
                    for j in i + 1..n {
                        for k in j + 1..n {
                            has |= v[j] < v[k] && v[k] < v[i];
                        }
                    }
                }
                assert_eq!(avoids_312(&q), !has, "{q}");
            }
        }
    }

    #[test]
    fn bijection_examples() {
        let filt = perm_to_spio(&p("2146753")).unwrap();
        let expected: [&[usize]; 7] = [
            &[3, 4, 5, 6, 7],
            &[3, 4, 5, 6, 7],
            &[],
            &[5, 6, 7],
            &[],
            &[7],
            &[],
        ];
        for (k, f) in expected.iter().enumerate() {
            assert_eq!(filt.filter(k + 1).unwrap(), f.iter().copied().collect());
        }
        assert_eq!(spio_to_perm(&filt).unwrap(), p("2146753"));
        for n in 0..=6 {
            let chain = perm_to_spio(&Permutation::identity(n)).unwrap();
            assert_eq!(chain.relation(), &BinaryRelation::chain(n));
            let anti = perm_to_spio(&Permutation::reversed(n)).unwrap();
            assert_eq!(anti.relation(), &BinaryRelation::antichain(n));
            assert_eq!(spio_to_perm(&chain).unwrap(), Permutation::identity(n));
            assert_eq!(spio_to_perm(&anti).unwrap(), Permutation::reversed(n));
        }
        assert!(matches!(
            perm_to_spio(&p("312")),
            Err(Error::Not312Avoiding(_))
        ));
    }

    #[test]
    fn spio_to_perm_requires_canonical_labels() {
        let reversed = BinaryRelation::chain(3).relabel(&[3, 2, 1]);
        let spio = Spio::new(reversed).unwrap();
        assert_eq!(spio_to_perm(&spio), Err(Error::NotCanonical));
    }

    #[test]
    fn inversion_examples() {
        assert!(inversions(&Permutation::identity(5)).is_empty());
        assert_eq!(
            inversions(&p("21")).pairs().collect::<Vec<_>>(),
            vec![(2, 1)]
        );
        for n in 0..=6 {
            assert_eq!(
                inversions(&Permutation::reversed(n)).len(),
                n * n.saturating_sub(1) / 2
            );
        }
    }

    #[test]
    fn weak_bruhat_examples() {
        let q = p("2413");
        assert!(leq_weak_bruhat(&q, &q).unwrap());
        assert!(leq_weak_bruhat(&Permutation::identity(4), &q).unwrap());
        // E(213) = {(2,1)} ⊂ E(231) = {(2,1),(3,1)}.
        assert!(leq_weak_bruhat(&p("213"), &p("231")).unwrap());
        assert!(!leq_weak_bruhat(&p("231"), &p("213")).unwrap());
        // E(132) = {(3,2)} and E(213) = {(2,1)} are not nested.
        assert!(!leq_weak_bruhat(&p("132"), &p("213")).unwrap());
        assert!(!leq_weak_bruhat(&p("213"), &p("132")).unwrap());
        assert!(leq_weak_bruhat(&p("12"), &p("123")).is_err());
    }

    #[test]
    fn weak_bruhat_routes_agree() {
        for n in 0..=5 {
            let all = all_permutations(n);
            let table = BruhatTable::build(BruhatKind::Weak, n).unwrap();
            for a in &all {
                for b in &all {
                    let by_inv = leq_weak_bruhat(a, b).unwrap();
                    assert_eq!(by_inv, table.leq(a, b).unwrap(), "{a} {b}");
                    if n <= 4 {
                        assert_eq!(by_inv, leq_weak_bruhat_bfs(a, b).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn strong_bruhat_worked_example() {
        let (p1, p2) = (p("468753921"), p("768543921"));
        assert_eq!(max_vector(&p1), [4, 6, 8, 8, 8, 8, 9, 9, 9]);
        assert_eq!(max_vector(&p2), [7, 7, 8, 8, 8, 8, 9, 9, 9]);
        assert!(leq_strong_bruhat_max(&p1, &p2).unwrap());
        assert!(is_reduction_sequence(&[
            p2.clone(),
            p("768453921"),
            p1.clone()
        ]));
        assert!(!is_reduction_sequence(&[p1.clone(), p2.clone()]));
        // Nine letters is past the search limit: avoiders use prefix maxima.
        assert!(leq_strong_bruhat(&p1, &p2).unwrap());
        assert!(!leq_strong_bruhat(&p2, &p1).unwrap());
        assert!(leq_strong_bruhat(&p1, &p("768453921")).is_err());
        assert!(leq_strong_bruhat_max(&p("312"), &p("321")).is_err());
    }

    #[test]
    fn strong_bruhat_basics() {
        let q = p("3142");
        assert!(leq_strong_bruhat(&q, &q).unwrap());
        assert!(leq_strong_bruhat(&Permutation::identity(4), &q).unwrap());
        assert!(!leq_strong_bruhat(&q, &Permutation::identity(4)).unwrap());
        let table = BruhatTable::build(BruhatKind::Strong, 4).unwrap();
        for a in all_permutations(4) {
            for b in all_permutations(4) {
                let strong = leq_strong_bruhat(&a, &b).unwrap();
                assert_eq!(strong, table.leq(&a, &b).unwrap());
                if leq_weak_bruhat(&a, &b).unwrap() {
                    assert!(strong);
                }
            }
        }
    }

    #[test]
    fn max_vector_and_noninversions() {
        assert_eq!(max_vector(&Permutation::identity(4)), [1, 2, 3, 4]);
        assert_eq!(
            consecutive_noninversions(&Permutation::identity(4)),
            LabelSet::range(1, 4)
        );
        assert_eq!(
            consecutive_noninversions(&Permutation::reversed(5)),
            LabelSet::range(5, 5)
        );
        let q = p("2146753");
        assert_eq!(max_vector(&q), [2, 2, 4, 6, 7, 7, 7]);
        let components: LabelSet = max_vector(&q).into_iter().collect();
        assert_eq!(consecutive_noninversions(&q), components);
        assert_eq!(
            consecutive_noninversions(&q),
            [2, 4, 6, 7].into_iter().collect()
        );
    }

    #[test]
    fn filter_and_ideal_sets() {
        let id = Permutation::identity(5);
        assert_eq!(filter_set(&id, 1).unwrap(), LabelSet::range(2, 5));
        assert!(ideal_set(&id, 1).unwrap().is_empty());
        let q = p("2146753");
        assert_eq!(filter_set(&q, 4).unwrap(), [5, 6, 7].into_iter().collect());
        assert_eq!(
            ideal_set(&q, 7).unwrap(),
            [1, 2, 4, 6].into_iter().collect()
        );
        assert!(filter_set(&q, 8).is_err());
        // Filter, ideal, the value itself and the rest partition 1..n.
        for r in all_permutations(5) {
            let pos = r.positions();
            for v in 1..=5 {
                let f = filter_set(&r, v).unwrap();
                let i = ideal_set(&r, v).unwrap();
                let rest: LabelSet = (1..=5)
                    .filter(|&w| w != v && ((w > v) == (pos[w - 1] < pos[v - 1])))
                    .collect();
                assert!(f.intersection(i).is_empty());
                assert!(f.union(i).intersection(rest).is_empty());
                let mut all = f.union(i).union(rest);
                all.insert(v);
                assert_eq!(all, LabelSet::range(1, 5));
            }
        }
    }

    #[test]
    fn av312_enumeration() {
        let three: Vec<String> = enumerate_av312(3)
            .unwrap()
            .iter()
            .map(|q| q.to_string())
            .collect();
        assert_eq!(three, ["123", "132", "213", "231", "321"]);
        assert_eq!(enumerate_av312(1).unwrap(), vec![p("1")]);
        assert_eq!(enumerate_av312(8).unwrap().len(), 1430);
        assert!(enumerate_av312(9).is_err());
    }
}
