//! The Dyck (Stanley) and Tamari orders on series parallel interval
//! orders and on planar trees, the refinement between them, and brute
//! force lattice operations.
//!
//! On posets both orders read off principal ideals and filters of the
//! canonical labelling:
//!
//! * Dyck: `a ≤ b` iff `|a⁻¹(k)| ≥ |b⁻¹(k)|` for every `k`;
//! * Tamari: `a ≤ b` iff `a(k) ⊇ b(k)` for every `k`.
//!
//! On trees they compare ancestor counts and descendant counts node by
//! node. The Bruhat orders are reached through [`spio_to_perm`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{leq_strong_bruhat_max, leq_weak_bruhat, spio_to_perm, BruhatKind, BruhatTable};
use crate::spio::{enumerate_spios, Spio};
use crate::tree::PlanarTree;

pub const MAX_TABLE_SIZE: usize = 7;
pub const MAX_BRUHAT_TABLE_SIZE: usize = 6;
pub const MAX_LATTICE_SIZE: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CatalanOrder {
    Dyck,
    Tamari,
    WeakBruhat,
    StrongBruhat,
}

impl CatalanOrder {
    pub const ALL: [CatalanOrder; 4] = [
        CatalanOrder::Dyck,
        CatalanOrder::Tamari,
        CatalanOrder::WeakBruhat,
        CatalanOrder::StrongBruhat,
    ];

    /// Short name used on the command line.
    pub fn flag(self) -> &'static str {
        match self {
            CatalanOrder::Dyck => "dyck",
            CatalanOrder::Tamari => "tamari",
            CatalanOrder::WeakBruhat => "weak",
            CatalanOrder::StrongBruhat => "strong",
        }
    }

    pub fn is_bruhat(self) -> bool {
        matches!(self, CatalanOrder::WeakBruhat | CatalanOrder::StrongBruhat)
    }
}

impl fmt::Display for CatalanOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for CatalanOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dyck" | "stanley" => Ok(CatalanOrder::Dyck),
            "tamari" => Ok(CatalanOrder::Tamari),
            "weak" | "weakbruhat" => Ok(CatalanOrder::WeakBruhat),
            "strong" | "strongbruhat" => Ok(CatalanOrder::StrongBruhat),
            _ => Err(Error::Parse(format!("unknown order {s:?}"))),
        }
    }
}

/// A result computed after bringing the inputs into canonical labelling;
/// `relabelled` records whether that was needed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Relabelled<T> {
    pub value: T,
    pub relabelled: bool,
}

fn comparable_inputs(a: &Spio, b: &Spio) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::SupportMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    if !a.is_canonical() || !b.is_canonical() {
        return Err(Error::NotCanonical);
    }
    Ok(())
}

fn with_relabelling(
    a: &Spio,
    b: &Spio,
    cmp: impl Fn(&Spio, &Spio) -> Result<bool>,
) -> Result<Relabelled<bool>> {
    let relabelled = !a.is_canonical() || !b.is_canonical();
    let value = if relabelled {
        cmp(&a.relabel_by_preorder(), &b.relabel_by_preorder())?
    } else {
        cmp(a, b)?
    };
    Ok(Relabelled { value, relabelled })
}

pub fn leq_dyck(a: &Spio, b: &Spio) -> Result<bool> {
    comparable_inputs(a, b)?;
    let (ra, rb) = (a.relation(), b.relation());
    Ok((1..=a.n()).all(|k| ra.column(k).len() >= rb.column(k).len()))
}

pub fn leq_dyck_relabelling(a: &Spio, b: &Spio) -> Result<Relabelled<bool>> {
    with_relabelling(a, b, leq_dyck)
}

/// Tamari order by filter inclusion, `a(k) ⊇ b(k)`.
pub fn leq_tamari_subset(a: &Spio, b: &Spio) -> Result<bool> {
    comparable_inputs(a, b)?;
    let (ra, rb) = (a.relation(), b.relation());
    Ok((1..=a.n()).all(|k| ra.row(k).is_superset(rb.row(k))))
}

/// Tamari order by filter sizes, `|a(k)| ≥ |b(k)|`.
pub fn leq_tamari_cardinality(a: &Spio, b: &Spio) -> Result<bool> {
    comparable_inputs(a, b)?;
    let (ra, rb) = (a.relation(), b.relation());
    Ok((1..=a.n()).all(|k| ra.row(k).len() >= rb.row(k).len()))
}

pub fn leq_tamari(a: &Spio, b: &Spio) -> Result<bool> {
    let by_subset = leq_tamari_subset(a, b)?;
    debug_assert_eq!(by_subset, leq_tamari_cardinality(a, b)?);
    Ok(by_subset)
}

pub fn leq_tamari_relabelling(a: &Spio, b: &Spio) -> Result<Relabelled<bool>> {
    with_relabelling(a, b, leq_tamari)
}

fn same_nodes(t1: &PlanarTree, t2: &PlanarTree) -> Result<()> {
    if t1.node_count() == t2.node_count() {
        Ok(())
    } else {
        Err(Error::SupportMismatch {
            left: t1.node_count(),
            right: t2.node_count(),
        })
    }
}

/// `|h_{T₁}(k)| ≤ |h_{T₂}(k)|` for every node.
pub fn leq_dyck_tree(t1: &PlanarTree, t2: &PlanarTree) -> Result<bool> {
    same_nodes(t1, t2)?;
    Ok((1..=t1.node_count()).all(|k| t1.depth(k) <= t2.depth(k)))
}

/// `|u_{T₁}(k)| ≤ |u_{T₂}(k)|` for every node.
pub fn leq_tamari_tree(t1: &PlanarTree, t2: &PlanarTree) -> Result<bool> {
    same_nodes(t1, t2)?;
    Ok((1..=t1.node_count()).all(|k| t1.descendant_count(k) <= t2.descendant_count(k)))
}

/// `u_{T₁}(k) ⊆ u_{T₂}(k)` for every node.
pub fn leq_tamari_tree_subset(t1: &PlanarTree, t2: &PlanarTree) -> Result<bool> {
    same_nodes(t1, t2)?;
    for k in 1..=t1.node_count() {
        if !t1.descendants(k)?.is_subset(t2.descendants(k)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `d_{T₁}(k) ⊆ d_{T₂}(k)` for every node.
pub fn leq_tamari_tree_lineage(t1: &PlanarTree, t2: &PlanarTree) -> Result<bool> {
    same_nodes(t1, t2)?;
    for k in 1..=t1.node_count() {
        if !t1.lineage(k)?.is_subset(t2.lineage(k)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Compares two canonical posets in any of the four orders. The Bruhat
/// orders go through the permutation bijection; strong Bruhat uses the
/// prefix-maximum characterization.
pub fn leq(order: CatalanOrder, a: &Spio, b: &Spio) -> Result<bool> {
    match order {
        CatalanOrder::Dyck => leq_dyck(a, b),
        CatalanOrder::Tamari => leq_tamari(a, b),
        CatalanOrder::WeakBruhat => {
            comparable_inputs(a, b)?;
            leq_weak_bruhat(&spio_to_perm(a)?, &spio_to_perm(b)?)
        }
        CatalanOrder::StrongBruhat => {
            comparable_inputs(a, b)?;
            leq_strong_bruhat_max(&spio_to_perm(a)?, &spio_to_perm(b)?)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementReport {
    pub n: usize,
    pub pairs_checked: usize,
    /// Pairs Tamari-comparable but not Dyck-comparable.
    pub counterexamples: Vec<(Spio, Spio)>,
    /// Pairs with nested filters whose ideals are not nested the other way.
    pub ideal_step_failures: Vec<(Spio, Spio)>,
}

impl RefinementReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty() && self.ideal_step_failures.is_empty()
    }
}

/// Checks `a ≤_T b ⇒ a ≤_D b` over every pair of size `n`, together with
/// the intermediate step `a(k) ⊇ b(k) ∀k ⇒ a⁻¹(k) ⊇ b⁻¹(k) ∀k`.
pub fn check_refinement(n: usize) -> Result<RefinementReport> {
    check_size("poset size", n, MAX_TABLE_SIZE)?;
    let all = enumerate_spios(n)?;
    let mut report = RefinementReport {
        n,
        pairs_checked: 0,
        counterexamples: Vec::new(),
        ideal_step_failures: Vec::new(),
    };
    for a in &all {
        for b in &all {
            report.pairs_checked += 1;
            if !leq_tamari(a, b)? {
                continue;
            }
            if !leq_dyck(a, b)? {
                report.counterexamples.push((a.clone(), b.clone()));
            }
            let (ra, rb) = (a.relation(), b.relation());
            if !(1..=n).all(|k| ra.column(k).is_superset(rb.column(k))) {
                report.ideal_step_failures.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(report)
}

fn check_size(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n <= max {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what,
            value: n,
            min: 0,
            max,
        })
    }
}

/// The full comparison matrix of one order over all canonical posets of a
/// given size. Strong Bruhat comparisons come from reduction reachability
/// over all of `S_n`, weak Bruhat from inversion sets.
#[derive(Clone, Debug)]
pub struct OrderTable {
    order: CatalanOrder,
    n: usize,
    elements: Vec<Spio>,
    leq: Vec<Vec<bool>>,
}

impl OrderTable {
    pub fn build(order: CatalanOrder, n: usize) -> Result<Self> {
        let max = if order.is_bruhat() {
            MAX_BRUHAT_TABLE_SIZE
        } else {
            MAX_TABLE_SIZE
        };
        check_size("order size", n, max)?;
        let elements = enumerate_spios(n)?;
        let leq = match order {
            CatalanOrder::Dyck | CatalanOrder::Tamari => {
                pairwise(&elements, |a, b| leq(order, a, b))?
            }
            CatalanOrder::WeakBruhat | CatalanOrder::StrongBruhat => {
                let kind = if order == CatalanOrder::WeakBruhat {
                    BruhatKind::Weak
                } else {
                    BruhatKind::Strong
                };
                let perms = elements
                    .iter()
                    .map(spio_to_perm)
                    .collect::<Result<Vec<_>>>()?;
                let table = (kind == BruhatKind::Strong)
                    .then(|| BruhatTable::build(kind, n))
                    .transpose()?;
                let mut rows = vec![vec![false; perms.len()]; perms.len()];
                for (i, p) in perms.iter().enumerate() {
                    for (j, q) in perms.iter().enumerate() {
                        rows[i][j] = match &table {
                            Some(t) => t.leq(p, q)?,
                            None => leq_weak_bruhat(p, q)?,
                        };
                    }
                }
                rows
            }
        };
        Ok(OrderTable {
            order,
            n,
            elements,
            leq,
        })
    }

    pub fn order(&self) -> CatalanOrder {
        self.order
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[Spio] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn index_of(&self, s: &Spio) -> Option<usize> {
        self.elements.iter().position(|e| e == s)
    }

    /// Reflexive, antisymmetric and transitive.
    pub fn is_partial_order(&self) -> bool {
        let m = self.len();
        (0..m).all(|i| self.leq[i][i])
            && (0..m).all(|i| (0..m).all(|j| i == j || !(self.leq[i][j] && self.leq[j][i])))
            && (0..m).all(|i| {
                (0..m).all(|j| !self.leq[i][j] || (0..m).all(|k| !self.leq[j][k] || self.leq[i][k]))
            })
    }

    /// Number of pairs `i ≠ j` with `i ≤ j`.
    pub fn comparable_pairs(&self) -> usize {
        let m = self.len();
        (0..m)
            .map(|i| (0..m).filter(|&j| i != j && self.leq[i][j]).count())
            .sum()
    }

    /// Greatest lower bound by exhaustive search; an error means the
    /// order is not a lattice.
    pub fn meet_index(&self, i: usize, j: usize) -> Result<usize> {
        self.extremal_bound(i, j, true)
    }

    pub fn join_index(&self, i: usize, j: usize) -> Result<usize> {
        self.extremal_bound(i, j, false)
    }

    fn extremal_bound(&self, i: usize, j: usize, lower: bool) -> Result<usize> {
        let le = |x: usize, y: usize| {
            if lower {
                self.leq[x][y]
            } else {
                self.leq[y][x]
            }
        };
        let bounds: Vec<usize> = (0..self.len()).filter(|&k| le(k, i) && le(k, j)).collect();
        let best: Vec<usize> = bounds
            .iter()
            .copied()
            .filter(|&k| bounds.iter().all(|&other| le(other, k)))
            .collect();
        match best[..] {
            [k] => Ok(k),
            _ => Err(Error::NotALattice(format!(
                "{} {} of elements {i} and {j} in {} order: {} candidates",
                if lower { "meet" } else { "join" },
                if best.is_empty() {
                    "missing"
                } else {
                    "ambiguous"
                },
                self.order,
                best.len()
            ))),
        }
    }
}

fn pairwise(
    elements: &[Spio],
    cmp: impl Fn(&Spio, &Spio) -> Result<bool>,
) -> Result<Vec<Vec<bool>>> {
    elements
        .iter()
        .map(|a| elements.iter().map(|b| cmp(a, b)).collect())
        .collect()
}

fn lattice_operation(order: CatalanOrder, a: &Spio, b: &Spio, lower: bool) -> Result<Spio> {
    comparable_inputs(a, b)?;
    check_size("lattice size", a.n(), MAX_LATTICE_SIZE)?;
    let table = OrderTable::build(order, a.n())?;
    let i = table.index_of(a).ok_or(Error::NotCanonical)?;
    let j = table.index_of(b).ok_or(Error::NotCanonical)?;
    let k = if lower {
        table.meet_index(i, j)?
    } else {
        table.join_index(i, j)?
    };
    Ok(table.elements[k].clone())
}

pub fn meet(order: CatalanOrder, a: &Spio, b: &Spio) -> Result<Spio> {
    lattice_operation(order, a, b, true)
}

pub fn join(order: CatalanOrder, a: &Spio, b: &Spio) -> Result<Spio> {
    lattice_operation(order, a, b, false)
}
