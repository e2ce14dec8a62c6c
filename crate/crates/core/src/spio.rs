//! Series parallel interval orders: recognition, the auxiliary relation
//! `Z`, preorder linear extensions, canonical labelling and enumeration.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relation::{BinaryRelation, ForbiddenPattern, LabelSet};
use crate::tree::{enumerate_trees, rho};

pub const MAX_ENUMERATED_SIZE: usize = 8;

/// A strict order avoiding both `2+2` and the fence of order four.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Spio {
    relation: BinaryRelation,
}

/// `relation` is a strict order with no induced `2+2` or fence.
pub fn is_spio(relation: &BinaryRelation) -> bool {
    relation.is_strict_order()
        && ForbiddenPattern::ALL
            .iter()
            .all(|&p| !relation.contains_pattern(p))
}

/// `Z = ((R̄)ᶜ ∘ R̄) \ R̄`.
pub fn z_relation(relation: &BinaryRelation) -> BinaryRelation {
    let sym = relation.symmetric_closure();
    let z = sym
        .complement()
        .compose(&sym)
        .and_then(|c| c.difference(&sym))
        .expect("same support");
    debug_assert_eq!(z, z_relation_pointwise(relation));
    z
}

/// `x Z y` iff `x` and `y` are incomparable and some `z` is comparable to
/// `y` but not to `x`.
pub fn z_relation_pointwise(relation: &BinaryRelation) -> BinaryRelation {
    let n = relation.n();
    let sym = relation.symmetric_closure();
    let mut z = BinaryRelation::empty(n);
    for x in 1..=n {
        for y in 1..=n {
            if sym.contains(x, y) {
                continue;
            }
            if (1..=n).any(|w| sym.contains(w, y) && !sym.contains(w, x)) {
                z.insert(x, y);
            }
        }
    }
    z
}

/// A total order on the support; `order()[i]` is the element in position
/// `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinearExtension(Vec<usize>);

impl LinearExtension {
    pub fn order(&self) -> &[usize] {
        &self.0
    }

    /// 1-based position of every element, indexed by `label - 1`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            pos[x - 1] = i + 1;
        }
        pos
    }

    /// Every pair of `relation` goes forward in this order.
    pub fn respects(&self, relation: &BinaryRelation) -> bool {
        let pos = self.positions();
        relation.pairs().all(|(x, y)| pos[x - 1] < pos[y - 1])
    }
}

/// `R ∪ Z` for a strict order `R`.
fn preorder_constraints(relation: &BinaryRelation) -> BinaryRelation {
    relation.union(&z_relation(relation)).expect("same support")
}

/// Topological sort of `R ∪ Z`, always taking the smallest available
/// label. Fails when `R ∪ Z` has a cycle, which happens exactly for
/// strict orders outside the class.
pub fn preorder_linear_extension(relation: &BinaryRelation) -> Result<LinearExtension> {
    let n = relation.n();
    let constraints = preorder_constraints(relation);
    let preds: Vec<LabelSet> = (1..=n).map(|y| constraints.column(y)).collect();
    let mut placed = LabelSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (1..=n)
            .find(|&y| !placed.contains(y) && preds[y - 1].is_subset(placed))
            .ok_or(Error::CyclicPreorder)?;
        placed.insert(next);
        order.push(next);
    }
    Ok(LinearExtension(order))
}

/// Every linear extension of `R ∪ Z`, by backtracking. Empty when none
/// exists.
pub fn all_preorder_linear_extensions(relation: &BinaryRelation) -> Vec<LinearExtension> {
    fn go(
        preds: &[LabelSet],
        placed: LabelSet,
        order: &mut Vec<usize>,
        out: &mut Vec<LinearExtension>,
    ) {
        let n = preds.len();
        if order.len() == n {
            out.push(LinearExtension(order.clone()));
            return;
        }
        for y in 1..=n {
            if !placed.contains(y) && preds[y - 1].is_subset(placed) {
                let mut next = placed;
                next.insert(y);
                order.push(y);
                go(preds, next, order, out);
                order.pop();
            }
        }
    }
    let constraints = preorder_constraints(relation);
    let preds: Vec<LabelSet> = (1..=relation.n()).map(|y| constraints.column(y)).collect();
    let mut out = Vec::new();
    go(&preds, LabelSet::EMPTY, &mut Vec::new(), &mut out);
    out
}

impl Spio {
    pub fn new(relation: BinaryRelation) -> Result<Self> {
        if !relation.is_strict_order() {
            return Err(Error::NotStrictOrder);
        }
        if !is_spio(&relation) {
            return Err(Error::NotSpio);
        }
        Ok(Spio { relation })
    }

    pub(crate) fn from_canonical_unchecked(relation: BinaryRelation) -> Self {
        let spio = Spio { relation };
        debug_assert!(is_spio(&spio.relation));
        debug_assert!(spio.is_canonical());
        spio
    }

    pub fn relation(&self) -> &BinaryRelation {
        &self.relation
    }

    pub fn into_relation(self) -> BinaryRelation {
        self.relation
    }

    pub fn n(&self) -> usize {
        self.relation.n()
    }

    pub fn z_relation(&self) -> BinaryRelation {
        z_relation(&self.relation)
    }

    pub fn preorder_linear_extension(&self) -> LinearExtension {
        preorder_linear_extension(&self.relation).expect("R ∪ Z is acyclic for every member")
    }

    /// The labels already follow the preorder linear extension: every pair
    /// of `R ∪ Z` is increasing.
    pub fn is_canonical(&self) -> bool {
        preorder_constraints(&self.relation)
            .pairs()
            .all(|(x, y)| x < y)
    }

    /// Renames labels so that label `i` is the `i`-th element of the
    /// preorder linear extension.
    pub fn relabel_by_preorder(&self) -> Spio {
        self.relabel_by(&self.preorder_linear_extension())
    }

    pub(crate) fn relabel_by(&self, extension: &LinearExtension) -> Spio {
        Spio {
            relation: self.relation.relabel(&extension.positions()),
        }
    }

    /// `R(k)`.
    pub fn filter(&self, k: usize) -> Result<LabelSet> {
        self.relation.principal_filter(k)
    }

    /// `R⁻¹(k)`.
    pub fn ideal(&self, k: usize) -> Result<LabelSet> {
        self.relation.principal_ideal(k)
    }

    pub fn to_document(&self) -> PosetDocument {
        PosetDocument {
            n: self.n(),
            pairs: self.relation.pairs().map(|(x, y)| [x, y]).collect(),
            canonical: Some(self.is_canonical()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("plain data")
    }
}

impl fmt::Debug for Spio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Spio{:?}", self.relation)
    }
}

/// Compact JSON, the text encoding used for posets.
impl fmt::Display for Spio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

impl FromStr for Spio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let doc: PosetDocument =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Spio::try_from(doc)
    }
}

/// Wire form of a poset: `{"n": 3, "pairs": [[1,2],…], "canonical": true}`.
/// `pairs` lists the full strict order in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDocument {
    pub n: usize,
    pub pairs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical: Option<bool>,
}

impl TryFrom<PosetDocument> for Spio {
    type Error = Error;

    fn try_from(doc: PosetDocument) -> Result<Self> {
        let rel = BinaryRelation::from_pairs(doc.n, doc.pairs.iter().map(|p| (p[0], p[1])))?;
        let spio = Spio::new(rel)?;
        if let Some(claimed) = doc.canonical {
            if claimed != spio.is_canonical() {
                return Err(Error::Parse(format!(
                    "\"canonical\": {claimed} does not match the labelling"
                )));
            }
        }
        Ok(spio)
    }
}

/// Every member of size `n`, canonically labelled, in the order of the
/// trees they come from.
pub fn enumerate_spios(n: usize) -> Result<Vec<Spio>> {
    if n > MAX_ENUMERATED_SIZE {
        return Err(Error::OutOfRange {
            what: "poset size",
            value: n,
            min: 0,
            max: MAX_ENUMERATED_SIZE,
        });
    }
    let spios: Vec<Spio> = enumerate_trees(n + 1)?.iter().map(rho).collect();
    debug_assert!({
        let mut rels: Vec<_> = spios.iter().map(|s| s.relation.clone()).collect();
        rels.sort();
        rels.dedup();
        rels.len() == spios.len()
    });
    Ok(spios)
}
