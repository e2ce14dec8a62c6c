//! Exhaustive machine checks of every structural claim, each run over all
//! objects up to a size bound.
//!
//! Claims are independent of one another and run on separate threads; the
//! report keeps a fixed order.

use std::collections::BTreeSet;
use std::fmt;
use std::thread;

use crate::catalan_number;
use crate::error::{Error, Result};
use crate::orders::{
    self, leq_dyck, leq_dyck_tree, leq_tamari_cardinality, leq_tamari_subset, leq_tamari_tree,
    leq_tamari_tree_lineage, leq_tamari_tree_subset, CatalanOrder, OrderTable,
};
use crate::perm::{
    self, all_permutations, avoids_312, consecutive_noninversions, enumerate_av312, filter_set,
    ideal_set, inversions, is_reduction_sequence, leq_strong_bruhat_max, leq_weak_bruhat,
    max_vector, perm_to_spio, spio_to_perm, BruhatKind, BruhatTable, Permutation,
};
use crate::relation::{are_isomorphic, BinaryRelation, ForbiddenPattern, LabelSet};
use crate::spio::{
    all_preorder_linear_extensions, enumerate_spios, is_spio, preorder_linear_extension,
    z_relation, z_relation_pointwise, Spio,
};
use crate::tree::{
    dyck_dominates, enumerate_trees, rho, rho_inverse, tree_to_dyck, DyckPath, Step,
};

pub const MAX_VERIFY_SIZE: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub id: String,
    /// Sizes covered, e.g. `n=0..6`.
    pub range: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for ClaimResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "pass" } else { "FAIL" };
        write!(f, "[{verdict}] {} {}: {}", self.id, self.range, self.detail)
    }
}

type Outcome = std::result::Result<String, String>;

struct Claim {
    id: &'static str,
    /// Largest size this claim is run at, whatever the requested bound.
    cap: usize,
    run: fn(usize) -> Outcome,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

const CLAIMS: &[Claim] = &[
    Claim {
        id: "spio-brute-force",
        cap: 5,
        run: spio_brute_force,
    },
    Claim {
        id: "pattern-oracle",
        cap: 5,
        run: pattern_oracle,
    },
    Claim {
        id: "order-equivalence-oracle",
        cap: 5,
        run: order_equivalence_oracle,
    },
    Claim {
        id: "z-formula",
        cap: 7,
        run: z_formula,
    },
    Claim {
        id: "preorder-existence",
        cap: 7,
        run: preorder_existence,
    },
    Claim {
        id: "preorder-uniqueness",
        cap: 6,
        run: preorder_uniqueness,
    },
    Claim {
        id: "preorder-lemma",
        cap: 6,
        run: preorder_lemma,
    },
    Claim {
        id: "preorder-non-members",
        cap: 0,
        run: preorder_non_members,
    },
    Claim {
        id: "rho-bijection",
        cap: 7,
        run: rho_bijection,
    },
    Claim {
        id: "tree-dyck-bijection",
        cap: 7,
        run: tree_dyck_bijection,
    },
    Claim {
        id: "dyck-equivalence",
        cap: 6,
        run: dyck_equivalence,
    },
    Claim {
        id: "tamari-equivalence",
        cap: 6,
        run: tamari_equivalence,
    },
    Claim {
        id: "partial-orders",
        cap: 6,
        run: partial_orders,
    },
    Claim {
        id: "lattice",
        cap: 6,
        run: lattice,
    },
    Claim {
        id: "refinement",
        cap: 7,
        run: refinement,
    },
    Claim {
        id: "filter-example",
        cap: 0,
        run: filter_example,
    },
    Claim {
        id: "perm-bijection",
        cap: 7,
        run: perm_bijection,
    },
    Claim {
        id: "tiebreak-invariance",
        cap: 6,
        run: tiebreak_invariance,
    },
    Claim {
        id: "weak-bruhat-routes",
        cap: 6,
        run: weak_bruhat_routes,
    },
    Claim {
        id: "inversion-filter-prop",
        cap: 6,
        run: inversion_filter_prop,
    },
    Claim {
        id: "tamari-weak-iso",
        cap: 6,
        run: tamari_weak_iso,
    },
    Claim {
        id: "bruhat-example",
        cap: 0,
        run: bruhat_example,
    },
    Claim {
        id: "strong-max-characterization",
        cap: 6,
        run: strong_max_characterization,
    },
    Claim {
        id: "ideal-max-prop",
        cap: 6,
        run: ideal_max_prop,
    },
    Claim {
        id: "dyck-strong-iso",
        cap: 6,
        run: dyck_strong_iso,
    },
    Claim {
        id: "noninversion-lemma",
        cap: 7,
        run: noninversion_lemma,
    },
];

/// Runs every claim up to `max_n` (clipped per claim) and reports one line
/// per claim, plus one Catalan count line per size.
pub fn verify(max_n: usize) -> Result<Vec<ClaimResult>> {
    if !(1..=MAX_VERIFY_SIZE).contains(&max_n) {
        return Err(Error::OutOfRange {
            what: "max-n",
            value: max_n,
            min: 1,
            max: MAX_VERIFY_SIZE,
        });
    }
    let mut report: Vec<ClaimResult> = (0..=max_n).map(catalan_count).collect();
    let claimed: Vec<ClaimResult> = thread::scope(|scope| {
        let handles: Vec<_> = CLAIMS
            .iter()
            .map(|claim| {
                let upto = claim.cap.min(max_n);
                let handle = scope.spawn(move || (claim.run)(upto));
                (claim, upto, handle)
            })
            .collect();
        handles
            .into_iter()
            .map(|(claim, upto, handle)| {
                let outcome = handle
                    .join()
                    .unwrap_or_else(|_| Err("check panicked".to_string()));
                let range = if claim.cap == 0 {
                    "example".to_string()
                } else {
                    format!("n=0..{upto}")
                };
                let (passed, detail) = match outcome {
                    Ok(d) => (true, d),
                    Err(d) => (false, d),
                };
                ClaimResult {
                    id: claim.id.to_string(),
                    range,
                    passed,
                    detail,
                }
            })
            .collect()
    });
    report.extend(claimed);
    Ok(report)
}

fn catalan_count(n: usize) -> ClaimResult {
    let expected = catalan_number(n as u64) as usize;
    let counts = (|| -> Result<[usize; 3]> {
        Ok([
            enumerate_trees(n + 1)?.len(),
            enumerate_spios(n)?.len(),
            enumerate_av312(n)?.len(),
        ])
    })();
    let (passed, detail) = match counts {
        Ok(c) if c.iter().all(|&x| x == expected) => (true, expected.to_string()),
        Ok(c) => (
            false,
            format!("expected {expected}, got trees/posets/perms = {c:?}"),
        ),
        Err(e) => (false, e.to_string()),
    };
    ClaimResult {
        id: "catalan-count".into(),
        range: format!("n={n}"),
        passed,
        detail,
    }
}

/// Every labelled strict order on `{1..n}`: each unordered pair is below,
/// above or incomparable, kept when transitive.
pub fn all_strict_orders(n: usize) -> Vec<BinaryRelation> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|x| (x + 1..=n).map(move |y| (x, y)))
        .collect();
    let total = 3usize.pow(pairs.len() as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        let mut rel = BinaryRelation::empty(n);
        for &(x, y) in &pairs {
            match code % 3 {
                1 => rel.insert(x, y),
                2 => rel.insert(y, x),
                _ => {}
            }
            code /= 3;
        }
        if rel.is_transitive() {
            out.push(rel);
        }
    }
    out
}

/// Pattern containment by trying every 4-subset under every injective map.
pub fn contains_pattern_brute_force(rel: &BinaryRelation, pattern: ForbiddenPattern) -> bool {
    let target = pattern.relation();
    let n = rel.n();
    let maps = all_permutations(4);
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for d in c + 1..=n {
                    let subset = [a, b, c, d];
                    for m in &maps {
                        let img: Vec<usize> = m.values().iter().map(|&i| subset[i - 1]).collect();
                        let iso = (1..=4).all(|i| {
                            (1..=4).all(|j| {
                                target.contains(i, j) == rel.contains(img[i - 1], img[j - 1])
                            })
                        });
                        if iso {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

fn spio_brute_force(upto: usize) -> Outcome {
    let mut total = 0;
    for n in 0..=upto {
        let members: Vec<BinaryRelation> =
            all_strict_orders(n).into_iter().filter(is_spio).collect();
        let canonical: BTreeSet<BinaryRelation> = members
            .iter()
            .map(|r| lift(Spio::new(r.clone())).map(|s| s.relabel_by_preorder().into_relation()))
            .collect::<std::result::Result<_, _>>()?;
        let mut classes: Vec<&BinaryRelation> = Vec::new();
        for r in &members {
            if !classes.iter().any(|c| are_isomorphic(c, r)) {
                classes.push(r);
            }
        }
        let enumerated: BTreeSet<BinaryRelation> = lift(enumerate_spios(n))?
            .into_iter()
            .map(Spio::into_relation)
            .collect();
        ensure(classes.len() == enumerated.len(), || {
            format!(
                "n={n}: {} isomorphism classes vs {} enumerated",
                classes.len(),
                enumerated.len()
            )
        })?;
        ensure(canonical == enumerated, || {
            format!("n={n}: canonical forms differ from enumeration")
        })?;
        total += members.len();
    }
    Ok(format!(
        "{total} labelled members reduce to the enumerated classes"
    ))
}

fn pattern_oracle(upto: usize) -> Outcome {
    let mut checked = 0;
    for n in 0..=upto {
        for rel in all_strict_orders(n) {
            for p in ForbiddenPattern::ALL {
                ensure(
                    rel.contains_pattern(p) == contains_pattern_brute_force(&rel, p),
                    || format!("{rel:?} vs {p:?}"),
                )?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} strict orders"))
}

fn order_equivalence_oracle(upto: usize) -> Outcome {
    let mut checked = 0;
    for n in 0..=upto {
        for rel in all_strict_orders(n) {
            for x in 1..=n {
                for y in x + 1..=n {
                    let mut swap: Vec<usize> = (1..=n).collect();
                    swap.swap(x - 1, y - 1);
                    let automorphism = rel.relabel(&swap) == rel;
                    ensure(
                        lift(rel.are_order_equivalent(x, y))? == automorphism,
                        || format!("{rel:?}: {x} {y}"),
                    )?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} element pairs"))
}

fn z_formula(upto: usize) -> Outcome {
    let mut checked = 0;
    for n in 0..=upto {
        for s in lift(enumerate_spios(n))? {
            ensure(
                z_relation(s.relation()) == z_relation_pointwise(s.relation()),
                || format!("{s:?}"),
            )?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} posets, composition and pointwise forms agree"
    ))
}

/// Reversed labelling, a generic non-canonical relabelling.
fn scrambled(s: &Spio) -> Spio {
    let n = s.n();
    let rev: Vec<usize> = (1..=n).rev().collect();
    Spio::new(s.relation().relabel(&rev)).expect("relabelling preserves membership")
}

fn preorder_existence(upto: usize) -> Outcome {
    let mut checked = 0;
    for n in 0..=upto {
        for s in lift(enumerate_spios(n))? {
            for candidate in [s.clone(), scrambled(&s)] {
                let ext = lift(preorder_linear_extension(candidate.relation()))?;
                ensure(ext.respects(candidate.relation()), || {
                    format!("{candidate:?}")
                })?;
                ensure(ext.respects(&candidate.z_relation()), || {
                    format!("{candidate:?}")
                })?;
                ensure(candidate.relabel_by_preorder() == s, || {
                    format!("{candidate:?}")
                })?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} posets, original and reversed labelling"))
}

fn preorder_uniqueness(upto: usize) -> Outcome {
    let mut extensions = 0;
    for n in 0..=upto {
        for s in lift(enumerate_spios(n))? {
            let all = all_preorder_linear_extensions(s.relation());
            ensure(!all.is_empty(), || format!("{s:?} has none"))?;
            extensions += all.len();
            // Elements seen at each position across all extensions; the
            // claim is that any two of them are order equivalent.
            for p in 0..n {
                let seen: LabelSet = all.iter().map(|e| e.order()[p]).collect();
                for x in seen.iter() {
                    for y in seen.iter() {
                        ensure(lift(s.relation().are_order_equivalent(x, y))?, || {
                            format!("{s:?}: {x} and {y} share position {}", p + 1)
                        })?;
                    }
                }
            }
        }
    }
    Ok(format!("{extensions} extensions enumerated"))
}

fn preorder_lemma(upto: usize) -> Outcome {
    let mut checked = 0;
    for n in 0..=upto {
        for s in lift(enumerate_spios(n))? {
            let all = all_preorder_linear_extensions(s.relation());
            // before[x][y]: some extension puts x before y.
            let mut before = vec![vec![false; n + 1]; n + 1];
            for e in &all {
                let pos = e.positions();
                for x in 1..=n {
                    for y in 1..=n {
                        before[x][y] |= pos[x - 1] < pos[y - 1];
                    }
                }
            }
            let swapped = (1..=n)
                .flat_map(|x| (x + 1..=n).map(move |y| (x, y)))
                .filter(|&(x, y)| before[x][y] && before[y][x]);
            for (x, y) in swapped {
                ensure(lift(s.relation().are_order_equivalent(x, y))?, || {
                    format!("{s:?}: {x} {y}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} oppositely ordered pairs, all order equivalent"
    ))
}

fn preorder_non_members(_: usize) -> Outcome {
    for p in ForbiddenPattern::ALL {
        let rel = p.relation();
        ensure(
            preorder_linear_extension(&rel) == Err(Error::CyclicPreorder),
            || format!("{p:?} has an extension"),
        )?;
        ensure(all_preorder_linear_extensions(&rel).is_empty(), || {
            format!("{p:?}")
        })?;
    }
    Ok("2+2 and the fence admit no preorder linear extension".into())
}

fn rho_bijection(upto: usize) -> Outcome {
    let mut checked = 0;
    for n in 0..=upto {
        let trees = lift(enumerate_trees(n + 1))?;
        let mut images = BTreeSet::new();
        for t in &trees {
            let s = rho(t);
            ensure(is_spio(s.relation()), || format!("{t}"))?;
            ensure(s.relabel_by_preorder() == s, || {
                format!("{t}: preorder labelling")
            })?;
            ensure(lift(rho_inverse(&s))? == *t, || format!("{t}: round trip"))?;
            images.insert(s.into_relation());
        }
        ensure(images.len() == trees.len(), || {
            format!("n={n}: not injective")
        })?;
        ensure(images.len() as u64 == catalan_number(n as u64), || {
            format!("n={n}: count")
        })?;
        checked += trees.len();
    }
    Ok(format!("{checked} trees"))
}

fn tree_dyck_bijection(upto: usize) -> Outcome {
    let mut checked = 0;
    for n in 0..=upto {
        let trees = lift(enumerate_trees(n + 1))?;
        let paths: BTreeSet<DyckPath> = trees.iter().map(tree_to_dyck).collect();
        let all: BTreeSet<DyckPath> = DyckPath::enumerate(n).into_iter().collect();
        ensure(paths == all, || format!("n={n}: not onto"))?;
        for t in &trees {
            let path = tree_to_dyck(t);
            let heights = path.heights();
            let up_ends = path
                .steps()
                .iter()
                .enumerate()
                .filter(|(_, s)| **s == Step::Up)
                .map(|(i, _)| i + 1);
            for (k, idx) in (2..=n + 1).zip(up_ends) {
                ensure(heights[idx] == lift(t.ancestors(k))?.len(), || {
                    format!("{t}: node {k}")
                })?;
            }
        }
        checked += trees.len();
    }
    Ok(format!("{checked} trees"))
}

fn dyck_equivalence(upto: usize) -> Outcome {
    let mut checked = 0;
    for n in 0..=upto {
        let trees = lift(enumerate_trees(n + 1))?;
        for t1 in &trees {
            for t2 in &trees {
                let by_tree = lift(leq_dyck_tree(t1, t2))?;
                let by_ideals = lift(leq_dyck(&rho(t1), &rho(t2)))?;
                let by_path = lift(dyck_dominates(&tree_to_dyck(t1), &tree_to_dyck(t2)))?;
                ensure(by_tree == by_ideals && by_tree == by_path, || {
                    format!("{t1} {t2}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} pairs, ancestors = ideals = path domination"
    ))
}

fn tamari_equivalence(upto: usize) -> Outcome {
    let mut checked = 0;
    for n in 0..=upto {
        let trees = lift(enumerate_trees(n + 1))?;
        for t1 in &trees {
            for t2 in &trees {
                let (a, b) = (rho(t1), rho(t2));
                let forms = [
                    lift(leq_tamari_tree(t1, t2))?,
                    lift(leq_tamari_tree_subset(t1, t2))?,
                    lift(leq_tamari_tree_lineage(t1, t2))?,
                    lift(leq_tamari_subset(&a, &b))?,
                    lift(leq_tamari_cardinality(&a, &b))?,
                ];
                ensure(forms.iter().all(|&f| f == forms[0]), || {
                    format!("{t1} {t2}: {forms:?}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} pairs, five characterizations agree"))
}

fn partial_orders(upto: usize) -> Outcome {
    for n in 0..=upto {
        for order in CatalanOrder::ALL {
            let table = lift(OrderTable::build(order, n))?;
            ensure(table.is_partial_order(), || format!("{order} n={n}"))?;
        }
    }
    Ok("all four orders are reflexive, antisymmetric and transitive".into())
}

fn lattice(upto: usize) -> Outcome {
    let mut pairs = 0;
    for n in 0..=upto {
        for order in [CatalanOrder::Dyck, CatalanOrder::Tamari] {
            let table = lift(OrderTable::build(order, n))?;
            let paths: Vec<Vec<usize>> = table
                .elements()
                .iter()
                .map(|s| lift(rho_inverse(s)).map(|t| tree_to_dyck(&t).heights()))
                .collect::<std::result::Result<_, _>>()?;
            for i in 0..table.len() {
                for j in 0..table.len() {
                    let m = lift(table.meet_index(i, j))?;
                    lift(table.join_index(i, j))?;
                    if order == CatalanOrder::Dyck {
                        let min: Vec<usize> = paths[i]
                            .iter()
                            .zip(&paths[j])
                            .map(|(a, b)| *a.min(b))
                            .collect();
                        ensure(paths[m] == min, || format!("n={n}: meet of {i} {j}"))?;
                    }
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} pairs have a unique meet and join"))
}

fn refinement(upto: usize) -> Outcome {
    let mut pairs = 0;
    for n in 0..=upto {
        let report = lift(orders::check_refinement(n))?;
        ensure(report.holds(), || {
            format!(
                "n={n}: {} counterexamples, {} ideal-step failures",
                report.counterexamples.len(),
                report.ideal_step_failures.len()
            )
        })?;
        pairs += report.pairs_checked;
    }
    Ok(format!("0 counterexamples over {pairs} pairs"))
}

/// The seven-element example: filters `{3..7}, {3..7}, ∅, {5,6,7}, ∅, {7}, ∅`.
pub fn filter_example_poset() -> Spio {
    let filters: [&[usize]; 7] = [
        &[3, 4, 5, 6, 7],
        &[3, 4, 5, 6, 7],
        &[],
        &[5, 6, 7],
        &[],
        &[7],
        &[],
    ];
    let pairs = filters
        .iter()
        .enumerate()
        .flat_map(|(x, ys)| ys.iter().map(move |&y| (x + 1, y)));
    Spio::new(BinaryRelation::from_pairs(7, pairs).expect("in range")).expect("member")
}

fn filter_example(_: usize) -> Outcome {
    let s = filter_example_poset();
    let p = lift(spio_to_perm(&s))?;
    ensure(p.to_string() == "2146753", || format!("got {p}"))?;
    ensure(lift(perm_to_spio(&p))? == s, || "inverse differs".into())?;
    Ok("filter chain gives 2146753".into())
}

fn perm_bijection(upto: usize) -> Outcome {
    let mut checked = 0;
    for n in 0..=upto {
        let spios = lift(enumerate_spios(n))?;
        let perms: BTreeSet<Permutation> = spios
            .iter()
            .map(|s| lift(spio_to_perm(s)))
            .collect::<std::result::Result<_, _>>()?;
        let av: BTreeSet<Permutation> = lift(enumerate_av312(n))?.into_iter().collect();
        ensure(perms == av, || format!("n={n}: image is not Av(312)"))?;
        for s in &spios {
            ensure(lift(perm_to_spio(&lift(spio_to_perm(s))?))? == *s, || {
                format!("{s:?}")
            })?;
        }
        for p in &av {
            ensure(lift(spio_to_perm(&lift(perm_to_spio(p))?))? == *p, || {
                format!("{p}")
            })?;
        }
        checked += spios.len();
    }
    Ok(format!("{checked} posets"))
}

fn tiebreak_invariance(upto: usize) -> Outcome {
    let mut checked = 0;
    for n in 0..=upto {
        for s in lift(enumerate_spios(n))? {
            let expected = lift(spio_to_perm(&s))?;
            let scrambled = scrambled(&s);
            for ext in all_preorder_linear_extensions(scrambled.relation()) {
                let relabelled = scrambled.relabel_by(&ext);
                ensure(relabelled == s, || {
                    format!("{s:?}: extension {:?}", ext.order())
                })?;
                ensure(lift(spio_to_perm(&relabelled))? == expected, || {
                    format!("{s:?}")
                })?;
                checked += 1;
            }
            for x in 1..=n {
                for y in x + 1..=n {
                    if lift(s.relation().are_order_equivalent(x, y))? {
                        let mut swap: Vec<usize> = (1..=n).collect();
                        swap.swap(x - 1, y - 1);
                        let swapped = lift(Spio::new(s.relation().relabel(&swap)))?;
                        ensure(lift(spio_to_perm(&swapped))? == expected, || {
                            format!("{s:?}")
                        })?;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} extensions give the same permutation"))
}

fn weak_bruhat_routes(upto: usize) -> Outcome {
    let mut pairs = 0;
    for n in 0..=upto {
        let table = lift(BruhatTable::build(BruhatKind::Weak, n))?;
        let all = all_permutations(n);
        for a in &all {
            for b in &all {
                ensure(
                    lift(table.leq(a, b))? == lift(leq_weak_bruhat(a, b))?,
                    || format!("{a} {b}"),
                )?;
                pairs += 1;
            }
        }
    }
    Ok(format!(
        "{pairs} pairs of S_n, inversions = simple reductions"
    ))
}

fn filters_contain(p1: &Permutation, p2: &Permutation) -> Result<bool> {
    for k in 1..=p1.n() {
        if !filter_set(p1, k)?.is_superset(filter_set(p2, k)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn inversion_filter_prop(upto: usize) -> Outcome {
    let mut pairs = 0;
    for n in 0..=upto {
        // Stated for arbitrary permutations; all of S_n up to 5.
        let universe = if n <= 5 {
            all_permutations(n)
        } else {
            lift(enumerate_av312(n))?
        };
        for a in &universe {
            for b in &universe {
                let by_inv = inversions(a).is_subset(&inversions(b));
                ensure(by_inv == lift(filters_contain(a, b))?, || {
                    format!("{a} {b}")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn tamari_weak_iso(upto: usize) -> Outcome {
    let mut pairs = 0;
    for n in 0..=upto {
        let table = lift(BruhatTable::build(BruhatKind::Weak, n))?;
        let spios = lift(enumerate_spios(n))?;
        let perms: Vec<Permutation> = spios
            .iter()
            .map(|s| lift(spio_to_perm(s)))
            .collect::<std::result::Result<_, _>>()?;
        for (a, pa) in spios.iter().zip(&perms) {
            for (b, pb) in spios.iter().zip(&perms) {
                ensure(
                    lift(orders::leq_tamari(a, b))? == lift(table.leq(pa, pb))?,
                    || format!("{pa} {pb}"),
                )?;
                pairs += 1;
            }
        }
    }
    Ok(format!(
        "{pairs} pairs, against simple-reduction reachability"
    ))
}

fn bruhat_example(_: usize) -> Outcome {
    let p = |s: &str| lift(s.parse::<Permutation>());
    let (p1, mid, p2) = (p("468753921")?, p("768453921")?, p("768543921")?);
    ensure(max_vector(&p1) == [4, 6, 8, 8, 8, 8, 9, 9, 9], || {
        "max vector of π₁".into()
    })?;
    ensure(max_vector(&p2) == [7, 7, 8, 8, 8, 8, 9, 9, 9], || {
        "max vector of π₂".into()
    })?;
    ensure(
        avoids_312(&p1) && avoids_312(&p2) && !avoids_312(&mid),
        || "avoidance".into(),
    )?;
    ensure(
        is_reduction_sequence(&[p2.clone(), mid, p1.clone()]),
        || "reduction chain".into(),
    )?;
    ensure(lift(leq_strong_bruhat_max(&p1, &p2))?, || {
        "max comparison".into()
    })?;
    Ok("reduction chain valid, π₁ ≤ π₂".into())
}

fn strong_max_characterization(upto: usize) -> Outcome {
    let mut pairs = 0;
    for n in 0..=upto {
        let table = lift(BruhatTable::build(BruhatKind::Strong, n))?;
        let av = lift(enumerate_av312(n))?;
        for a in &av {
            for b in &av {
                ensure(
                    lift(table.leq(a, b))? == lift(leq_strong_bruhat_max(a, b))?,
                    || format!("{a} {b}"),
                )?;
                pairs += 1;
            }
        }
    }
    Ok(format!(
        "{pairs} pairs, against reduction reachability over S_n"
    ))
}

fn ideal_max_prop(upto: usize) -> Outcome {
    let mut pairs = 0;
    for n in 0..=upto {
        let av = lift(enumerate_av312(n))?;
        let ideals: Vec<Vec<usize>> = av
            .iter()
            .map(|p| {
                (1..=n)
                    .map(|k| ideal_set(p, k).map(LabelSet::len))
                    .collect::<Result<_>>()
            })
            .collect::<Result<_>>()
            .map_err(|e| e.to_string())?;
        for (i, a) in av.iter().enumerate() {
            for (j, b) in av.iter().enumerate() {
                let by_ideals = ideals[i].iter().zip(&ideals[j]).all(|(x, y)| x >= y);
                let by_max = max_vector(a)
                    .iter()
                    .zip(max_vector(b))
                    .all(|(x, y)| *x <= y);
                ensure(by_ideals == by_max, || format!("{a} {b}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn dyck_strong_iso(upto: usize) -> Outcome {
    let mut pairs = 0;
    for n in 0..=upto {
        let table = lift(BruhatTable::build(BruhatKind::Strong, n))?;
        let spios = lift(enumerate_spios(n))?;
        let perms: Vec<Permutation> = spios
            .iter()
            .map(|s| lift(spio_to_perm(s)))
            .collect::<std::result::Result<_, _>>()?;
        for (a, pa) in spios.iter().zip(&perms) {
            for (b, pb) in spios.iter().zip(&perms) {
                ensure(lift(leq_dyck(a, b))? == lift(table.leq(pa, pb))?, || {
                    format!("{pa} {pb}")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!(
        "{pairs} pairs, against reduction reachability over S_n"
    ))
}

/// Items i–v of the consecutive-noninversion lemma for one avoider.
pub fn check_noninversion_lemma(p: &Permutation) -> std::result::Result<(), String> {
    let n = p.n();
    let cni = consecutive_noninversions(p);
    let isize_of = |v: usize| lift(ideal_set(p, v)).map(LabelSet::len);
    let ideals: Vec<usize> = (1..=n)
        .map(isize_of)
        .collect::<std::result::Result<_, _>>()?;
    let pos = p.positions();
    let maxv = max_vector(p);
    for m in 1..=n {
        let item_i = m == n || ideals[m - 1] != ideals[m];
        ensure(cni.contains(m) == item_i, || format!("{p}: item i at {m}"))?;
        if cni.contains(m) {
            let k = ideals[m - 1];
            ensure(p.at(k + 1) == m, || format!("{p}: item iii at {m}"))?;
        }
        let left_to_right_max = p.values()[..pos[m - 1] - 1].iter().all(|&w| w < m);
        ensure(cni.contains(m) == left_to_right_max, || {
            format!("{p}: item iv at {m}")
        })?;
    }
    for j in 1..=n {
        for k in j + 1..=n {
            ensure(ideals[j - 1] <= ideals[k - 1], || {
                format!("{p}: item ii at {j},{k}")
            })?;
        }
    }
    let components: LabelSet = maxv.iter().copied().collect();
    ensure(components == cni, || format!("{p}: item v, components"))?;
    for m in cni.iter() {
        let first = maxv.iter().position(|&v| v == m).map(|i| i + 1);
        ensure(first == Some(pos[m - 1]), || {
            format!("{p}: item v, index of {m}")
        })?;
    }
    Ok(())
}

fn noninversion_lemma(upto: usize) -> Outcome {
    let mut checked = 0;
    for n in 0..=upto {
        for p in lift(perm::enumerate_av312(n))? {
            check_noninversion_lemma(&p)?;
            checked += 1;
        }
    }
    Ok(format!("{checked} avoiders satisfy items i-v"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strict_order_counts() {
        // Labelled posets on n points: 1, 1, 3, 19, 219, 4231.
        let counts: Vec<usize> = (0..=5).map(|n| all_strict_orders(n).len()).collect();
        assert_eq!(counts, [1, 1, 3, 19, 219, 4231]);
    }

    #[test]
    fn verify_small() {
        let report = verify(3).unwrap();
        assert!(report.iter().all(|r| r.passed), "{report:#?}");
        assert!(report
            .iter()
            .any(|r| r.to_string().contains("catalan-count n=3: 5")));
        assert!(verify(0).is_err());
        assert!(verify(8).is_err());
    }

    #[test]
    fn noninversion_lemma_rejects_312() {
        let p: Permutation = "312".parse().unwrap();
        assert!(check_noninversion_lemma(&p).is_err());
    }
}
