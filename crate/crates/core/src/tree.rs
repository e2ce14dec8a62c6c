//! Planar rooted trees, Dyck paths, and the bijection `ρ` from trees with
//! `n + 1` nodes onto series parallel interval orders of size `n`.
//!
//! Trees are always stored preorder-labelled: the root is `1` and each
//! subtree occupies a consecutive block of labels. The text encoding is a
//! balanced-parenthesis word where every child contributes
//! `"(" + encoding(child) + ")"`, left to right; the single-node tree is
//! the empty string. Read with `(` as `U` and `)` as `D` this is exactly
//! the Dyck path produced by [`tree_to_dyck`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::relation::{BinaryRelation, LabelSet, MAX_SUPPORT};
use crate::spio::Spio;

pub const MAX_ENUMERATED_NODES: usize = 9;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlanarTree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    subtree: Vec<usize>,
}

impl PlanarTree {
    /// Builds a tree from parent links (`parents[k - 1]` is the parent of
    /// node `k`, `None` for the root). Siblings are ordered by label and the
    /// result is renumbered in preorder.
    pub fn from_parents(parents: &[Option<usize>]) -> Result<Self> {
        let m = parents.len();
        if m == 0 || m > MAX_SUPPORT {
            return Err(Error::OutOfRange {
                what: "tree size",
                value: m,
                min: 1,
                max: MAX_SUPPORT,
            });
        }
        let roots: Vec<usize> = (1..=m).filter(|&k| parents[k - 1].is_none()).collect();
        let [root] = roots[..] else {
            return Err(Error::Parse(format!(
                "expected exactly one root, found {}",
                roots.len()
            )));
        };
        let mut children = vec![Vec::new(); m];
        for (k, p) in parents.iter().enumerate() {
            if let Some(p) = *p {
                if !(1..=m).contains(&p) {
                    return Err(Error::LabelOutOfRange { label: p, n: m });
                }
                children[p - 1].push(k + 1);
            }
        }
        // Preorder renumbering; also detects nodes unreachable from the root.
        let mut order = Vec::with_capacity(m);
        let mut stack = vec![root];
        while let Some(node) = stack.pop() {
            if order.len() == m {
                return Err(Error::Parse("parent links contain a cycle".into()));
            }
            order.push(node);
            stack.extend(children[node - 1].iter().rev());
        }
        if order.len() != m {
            return Err(Error::Parse("parent links contain a cycle".into()));
        }
        let mut new_label = vec![0; m];
        for (i, &old) in order.iter().enumerate() {
            new_label[old - 1] = i + 1;
        }
        let relabelled: Vec<Option<usize>> = order
            .iter()
            .map(|&old| parents[old - 1].map(|p| new_label[p - 1]))
            .collect();
        Ok(Self::from_preorder_parents(relabelled))
    }

    fn from_preorder_parents(parent: Vec<Option<usize>>) -> Self {
        let m = parent.len();
        let mut children = vec![Vec::new(); m];
        for (k, p) in parent.iter().enumerate() {
            if let Some(p) = p {
                children[p - 1].push(k + 1);
            }
        }
        let mut subtree = vec![1; m];
        for k in (2..=m).rev() {
            let p = parent[k - 1].expect("non-root");
            subtree[p - 1] += subtree[k - 1];
        }
        PlanarTree {
            parent,
            children,
            subtree,
        }
    }

    /// Root with `leaves` children.
    pub fn star(leaves: usize) -> Self {
        let parent = std::iter::once(None)
            .chain((0..leaves).map(|_| Some(1)))
            .collect();
        Self::from_preorder_parents(parent)
    }

    /// A single branch with `nodes` nodes.
    pub fn path(nodes: usize) -> Self {
        assert!(nodes >= 1);
        let parent = (0..nodes)
            .map(|k| if k == 0 { None } else { Some(k) })
            .collect();
        Self::from_preorder_parents(parent)
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    /// Size of the poset `ρ(self)`, i.e. the number of non-root nodes.
    pub fn size(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn parent(&self, k: usize) -> Option<usize> {
        self.parent[k - 1]
    }

    pub fn children(&self, k: usize) -> &[usize] {
        &self.children[k - 1]
    }

    fn check(&self, k: usize) -> Result<()> {
        if (1..=self.node_count()).contains(&k) {
            Ok(())
        } else {
            Err(Error::LabelOutOfRange {
                label: k,
                n: self.node_count(),
            })
        }
    }

    pub fn depth(&self, k: usize) -> usize {
        std::iter::successors(self.parent[k - 1], |&p| self.parent[p - 1]).count()
    }

    /// `h_T(k)`.
    pub fn ancestors(&self, k: usize) -> Result<LabelSet> {
        self.check(k)?;
        Ok(std::iter::successors(self.parent[k - 1], |&p| self.parent[p - 1]).collect())
    }

    /// `u_T(k)`; always the block `{k+1, …, k+|u_T(k)|}`.
    pub fn descendants(&self, k: usize) -> Result<LabelSet> {
        self.check(k)?;
        Ok(LabelSet::range(k + 1, k + self.subtree[k - 1] - 1))
    }

    pub fn descendant_count(&self, k: usize) -> usize {
        self.subtree[k - 1] - 1
    }

    /// `d_T(k) = u_T(k) ∪ h_T(k)`.
    pub fn lineage(&self, k: usize) -> Result<LabelSet> {
        Ok(self.ancestors(k)?.union(self.descendants(k)?))
    }

    /// `x` is a proper ancestor of `y`.
    pub fn is_ancestor(&self, x: usize, y: usize) -> bool {
        x < y && y < x + self.subtree[x - 1]
    }

    pub fn encode(&self) -> String {
        tree_to_dyck(self)
            .to_string()
            .replace('U', "(")
            .replace('D', ")")
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl fmt::Debug for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlanarTree({:?})", self.encode())
    }
}

impl FromStr for PlanarTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parent = vec![None];
        let mut open = vec![1usize];
        for ch in s.trim().chars() {
            match ch {
                '(' => {
                    parent.push(Some(*open.last().expect("root stays open")));
                    open.push(parent.len());
                }
                ')' => {
                    if open.len() == 1 {
                        return Err(Error::Parse(format!("unbalanced tree encoding {s:?}")));
                    }
                    open.pop();
                }
                other => {
                    return Err(Error::Parse(format!(
                        "unexpected {other:?} in tree encoding"
                    )));
                }
            }
            if parent.len() > MAX_SUPPORT {
                return Err(Error::OutOfRange {
                    what: "tree size",
                    value: parent.len(),
                    min: 1,
                    max: MAX_SUPPORT,
                });
            }
        }
        if open.len() != 1 {
            return Err(Error::Parse(format!("unbalanced tree encoding {s:?}")));
        }
        Ok(PlanarTree::from_preorder_parents(parent))
    }
}

/// All planar rooted trees with `m` nodes, ordered by their encoding.
pub fn enumerate_trees(m: usize) -> Result<Vec<PlanarTree>> {
    if !(1..=MAX_ENUMERATED_NODES).contains(&m) {
        return Err(Error::OutOfRange {
            what: "tree node count",
            value: m,
            min: 1,
            max: MAX_ENUMERATED_NODES,
        });
    }
    Ok(DyckPath::enumerate(m - 1)
        .iter()
        .map(dyck_to_tree)
        .collect())
}

/// `ρ`: non-root nodes, `x R y` when neither is an ancestor of the other
/// and `x` lies to the left of `y`. Node `k + 1` becomes label `k`.
pub fn rho(t: &PlanarTree) -> Spio {
    let n = t.size();
    let mut rel = BinaryRelation::empty(n);
    for x in 1..=n {
        for y in x + 1..=n {
            if !t.is_ancestor(x + 1, y + 1) {
                rel.insert(x, y);
            }
        }
    }
    Spio::from_canonical_unchecked(rel)
}

/// The tree `t` with `rho(t) == a`; `a` must be canonically labelled.
///
/// Label `k` becomes node `k + 1`, whose parent is the node of the largest
/// `j < k` incomparable to `k` (a tree ancestor), or the root.
pub fn rho_inverse(a: &Spio) -> Result<PlanarTree> {
    let rel = a.relation();
    let n = rel.n();
    let parents: Vec<Option<usize>> = std::iter::once(None)
        .chain((1..=n).map(|k| {
            let parent = (1..k)
                .rev()
                .find(|&j| !rel.contains(j, k) && !rel.contains(k, j))
                .map_or(1, |j| j + 1);
            Some(parent)
        }))
        .collect();
    let tree = PlanarTree::from_parents(&parents)?;
    if rho(&tree).relation() != rel {
        return Err(Error::RoundTrip);
    }
    Ok(tree)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

/// A balanced word over `{U, D}` with no prefix dipping below zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: isize = 0;
        for step in &steps {
            height += if *step == Step::Up { 1 } else { -1 };
            if height < 0 {
                return Err(Error::Parse("Dyck path dips below zero".into()));
            }
        }
        if height != 0 {
            return Err(Error::Parse("Dyck path does not return to zero".into()));
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Semilength.
    pub fn size(&self) -> usize {
        self.steps.len() / 2
    }

    /// Height after each prefix, starting with the empty prefix.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = 0usize;
        std::iter::once(0)
            .chain(self.steps.iter().map(|s| {
                match s {
                    Step::Up => h += 1,
                    Step::Down => h -= 1,
                }
                h
            }))
            .collect()
    }

    /// Path whose height profile is `heights` (which must start and end at
    /// zero and move by ±1).
    pub fn from_heights(heights: &[usize]) -> Result<Self> {
        if heights.first() != Some(&0) {
            return Err(Error::Parse("height profile must start at 0".into()));
        }
        let steps = heights
            .windows(2)
            .map(|w| match w[1] as isize - w[0] as isize {
                1 => Ok(Step::Up),
                -1 => Ok(Step::Down),
                _ => Err(Error::Parse("height profile must move by ±1".into())),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }

    /// All Dyck paths of semilength `n`, in lexicographic order of their
    /// text encoding (`D` < `U`).
    pub fn enumerate(n: usize) -> Vec<DyckPath> {
        fn go(ups: usize, downs: usize, n: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
            if ups == n && downs == n {
                out.push(DyckPath { steps: cur.clone() });
                return;
            }
            if downs < ups {
                cur.push(Step::Down);
                go(ups, downs + 1, n, cur, out);
                cur.pop();
            }
            if ups < n {
                cur.push(Step::Up);
                go(ups + 1, downs, n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(0, 0, n, &mut Vec::with_capacity(2 * n), &mut out);
        out
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == Step::Up { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({self})")
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' => Ok(Step::Up),
                'D' => Ok(Step::Down),
                other => Err(Error::Parse(format!("unexpected {other:?} in Dyck path"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

/// Preorder walk: `U` on descending an edge, `D` on climbing back.
pub fn tree_to_dyck(t: &PlanarTree) -> DyckPath {
    fn walk(t: &PlanarTree, k: usize, steps: &mut Vec<Step>) {
        for &c in t.children(k) {
            steps.push(Step::Up);
            walk(t, c, steps);
            steps.push(Step::Down);
        }
    }
    let mut steps = Vec::with_capacity(2 * t.size());
    walk(t, 1, &mut steps);
    DyckPath { steps }
}

pub fn dyck_to_tree(p: &DyckPath) -> PlanarTree {
    let mut parent = vec![None];
    let mut open = vec![1usize];
    for step in &p.steps {
        match step {
            Step::Up => {
                parent.push(Some(*open.last().expect("valid path")));
                open.push(parent.len());
            }
            Step::Down => {
                open.pop();
            }
        }
    }
    PlanarTree::from_preorder_parents(parent)
}

/// `p` lies weakly below `q`.
pub fn dyck_dominates(p: &DyckPath, q: &DyckPath) -> Result<bool> {
    if p.steps.len() != q.steps.len() {
        return Err(Error::SupportMismatch {
            left: p.size(),
            right: q.size(),
        });
    }
    Ok(p.heights().iter().zip(q.heights()).all(|(a, b)| *a <= b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> PlanarTree {
        s.parse().unwrap()
    }

    /// Recursive count of planar trees: a tree with `m` nodes is a root
    /// over an ordered forest with `m - 1` nodes.
    fn forest_count(nodes: usize, memo: &mut Vec<Option<u64>>) -> u64 {
        if let Some(c) = memo[nodes] {
            return c;
        }
        let c = if nodes == 0 {
            1
        } else {
            (1..=nodes)
                .map(|first| forest_count(first - 1, memo) * forest_count(nodes - first, memo))
                .sum()
        };
        memo[nodes] = Some(c);
        c
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_trees(2).unwrap().len(), 1);
        assert_eq!(enumerate_trees(4).unwrap().len(), 5);
        assert_eq!(enumerate_trees(6).unwrap().len(), 42);
        let mut memo = vec![None; 10];
        for m in 1..=9 {
            assert_eq!(
                enumerate_trees(m).unwrap().len() as u64,
                forest_count(m - 1, &mut memo)
            );
        }
        assert!(enumerate_trees(0).is_err());
        assert!(enumerate_trees(10).is_err());
    }

    #[test]
    fn encoding_round_trip() {
        assert_eq!(PlanarTree::star(3).encode(), "()()()");
        assert_eq!(PlanarTree::path(4).encode(), "((()))");
        assert_eq!(t(""), PlanarTree::path(1));
        for tree in enumerate_trees(6).unwrap() {
            assert_eq!(t(&tree.encode()), tree);
        }
        assert!("(()".parse::<PlanarTree>().is_err());
        assert!("())(".parse::<PlanarTree>().is_err());
        assert!("(x)".parse::<PlanarTree>().is_err());
    }

    #[test]
    fn from_parents_normalizes_to_preorder() {
        // Root 3 with children 1 and 2; node 1 has child 4.
        let tree = PlanarTree::from_parents(&[Some(3), Some(3), None, Some(1)]).unwrap();
        assert_eq!(tree.encode(), "(())()");
        assert!(PlanarTree::from_parents(&[None, None]).is_err());
        assert!(PlanarTree::from_parents(&[None, Some(3), Some(2)]).is_err());
    }

    #[test]
    fn ancestor_examples() {
        let star = PlanarTree::star(3);
        assert!(star.ancestors(1).unwrap().is_empty());
        let path = PlanarTree::path(5);
        assert_eq!(path.ancestors(5).unwrap(), LabelSet::range(1, 4));
        for m in 1..=7 {
            for tree in enumerate_trees(m).unwrap() {
                for k in 1..=m {
                    let u = tree.descendants(k).unwrap();
                    assert_eq!(u, LabelSet::range(k + 1, k + u.len()));
                    assert_eq!(tree.ancestors(k).unwrap().len(), tree.depth(k));
                    assert_eq!(
                        tree.lineage(k).unwrap(),
                        u.union(tree.ancestors(k).unwrap())
                    );
                }
            }
        }
        assert!(star.ancestors(5).is_err());
    }

    #[test]
    fn rho_examples() {
        for n in 0..=6 {
            assert_eq!(
                rho(&PlanarTree::path(n + 1)).relation(),
                &BinaryRelation::antichain(n)
            );
            assert_eq!(
                rho(&PlanarTree::star(n)).relation(),
                &BinaryRelation::chain(n)
            );
        }
        // Root with children a, b; a has children c, d. Preorder: 1 root,
        // 2 = a, 3 = c, 4 = d, 5 = b. Poset labels (node - 1): a=1, c=2,
        // d=3, b=4. Pairs: c<d, c<b, d<b, a<b; a is an ancestor of c and d.
        let tree = t("(()())()");
        let expected = BinaryRelation::from_pairs(4, [(1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(rho(&tree).relation(), &expected);
    }

    #[test]
    fn rho_inverse_examples() {
        for n in 0..=5 {
            let anti = Spio::new(BinaryRelation::antichain(n)).unwrap();
            assert_eq!(rho_inverse(&anti).unwrap(), PlanarTree::path(n + 1));
            let chain = Spio::new(BinaryRelation::chain(n)).unwrap();
            assert_eq!(rho_inverse(&chain).unwrap(), PlanarTree::star(n));
        }
        for m in 1..=8 {
            for tree in enumerate_trees(m).unwrap() {
                assert_eq!(rho_inverse(&rho(&tree)).unwrap(), tree);
            }
        }
    }

    #[test]
    fn rho_inverse_rejects_non_canonical_labelling() {
        // Chain 1 < 2 plus isolated 3: canonical form puts the isolated
        // element first, so this labelling cannot round-trip.
        let rel = BinaryRelation::from_pairs(3, [(2, 3)]).unwrap();
        let spio = Spio::new(rel.relabel(&[2, 3, 1])).unwrap();
        assert!(!spio.is_canonical());
        assert_eq!(rho_inverse(&spio), Err(Error::RoundTrip));
    }

    #[test]
    fn tree_to_dyck_examples() {
        assert_eq!(tree_to_dyck(&PlanarTree::star(3)).to_string(), "UDUDUD");
        assert_eq!(tree_to_dyck(&PlanarTree::path(4)).to_string(), "UUUDDD");
        let mut paths: Vec<DyckPath> = enumerate_trees(4)
            .unwrap()
            .iter()
            .map(tree_to_dyck)
            .collect();
        paths.sort();
        paths.dedup();
        let mut all = DyckPath::enumerate(3);
        all.sort();
        assert_eq!(paths, all);
    }

    #[test]
    fn height_at_first_visit_is_depth() {
        for m in 1..=7 {
            for tree in enumerate_trees(m).unwrap() {
                let heights = tree_to_dyck(&tree).heights();
                // The (k-1)-th up step enters node k.
                let ups: Vec<usize> = tree_to_dyck(&tree)
                    .steps()
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| **s == Step::Up)
                    .map(|(i, _)| i + 1)
                    .collect();
                for k in 2..=m {
                    assert_eq!(heights[ups[k - 2]], tree.ancestors(k).unwrap().len());
                }
            }
        }
    }

    #[test]
    fn domination_examples() {
        let saw: DyckPath = "UDUDUD".parse().unwrap();
        let peak: DyckPath = "UUUDDD".parse().unwrap();
        assert!(dyck_dominates(&saw, &saw).unwrap());
        assert!(dyck_dominates(&saw, &peak).unwrap());
        assert!(!dyck_dominates(&peak, &saw).unwrap());
        assert!(dyck_dominates(&saw, &"UD".parse().unwrap()).is_err());
        assert!("UDD".parse::<DyckPath>().is_err());
        assert!("DU".parse::<DyckPath>().is_err());
        assert_eq!(DyckPath::from_heights(&peak.heights()).unwrap(), peak);
    }
}
