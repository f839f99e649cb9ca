//! Deciding whether Ω has a total order making every set of a family convex.
//!
//! The decision closes the family under the patchwork operations, giving up
//! as soon as the closure is larger than any convex patchwork on `n`
//! generators can be. Otherwise the autonomy tree decides: a node whose cohort
//! is a complete graph yields three pairwise adjacent sets, and when there is
//! none the tree is flattened into an ordering, path cohorts in path order and
//! edgeless cohorts side by side followed by their non-cohort elements.

use std::collections::HashMap;

use crate::closure::{close_bounded, ClosureOutcome, Patchwork};
use crate::error::{Error, Result};
use crate::setcore::{GroundSet, SetFamily, SubsetMask};
use crate::structure::{autonomy_tree, is_adjacent, AutonomyTree, CaseLabel, NodeId};
use crate::testkit::max_convex_patchwork_size;

/// Partition of Ω into classes of points lying in exactly the same sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMap {
    width: usize,
    classes: Vec<SubsetMask>,
    representatives: Vec<usize>,
    signatures: Vec<Vec<bool>>,
}

impl QuotientMap {
    /// Blocks, ordered by their least element.
    pub fn classes(&self) -> &[SubsetMask] {
        &self.classes
    }

    /// Least element of each block.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    /// Per block, membership in each set of the original family (canonical order).
    pub fn signatures(&self) -> &[Vec<bool>] {
        &self.signatures
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.classes.len() == self.width
    }

    /// The subset of Ω made of the blocks indexed by `reduced`.
    pub fn lift_mask(&self, reduced: &SubsetMask) -> SubsetMask {
        let mut out = SubsetMask::empty(self.width);
        for k in reduced.iter() {
            out.union_with(&self.classes[k]);
        }
        out
    }
}

/// Collapses points with identical membership signatures to one representative.
pub fn quotient(f: &SetFamily) -> (SetFamily, QuotientMap) {
    let width = f.width();
    let mut by_signature: HashMap<Vec<bool>, usize> = HashMap::new();
    let mut map = QuotientMap {
        width,
        classes: Vec::new(),
        representatives: Vec::new(),
        signatures: Vec::new(),
    };
    for e in 0..width {
        let sig: Vec<bool> = f.sets().iter().map(|s| s.contains(e)).collect();
        let k = *by_signature.entry(sig.clone()).or_insert_with(|| {
            map.classes.push(SubsetMask::empty(width));
            map.representatives.push(e);
            map.signatures.push(sig);
            map.classes.len() - 1
        });
        map.classes[k].insert(e);
    }
    let k = map.classes.len();
    let ground = GroundSet::new(
        map.representatives
            .iter()
            .map(|&r| f.ground().label(r).to_string()),
    )
    .expect("representative labels are distinct");
    let sets = f.sets().iter().map(|s| {
        SubsetMask::from_indices(
            k,
            map.representatives
                .iter()
                .enumerate()
                .filter(|(_, &r)| s.contains(r))
                .map(|(i, _)| i),
        )
    });
    let reduced = SetFamily::new(ground, sets).expect("reduced sets have the reduced width");
    debug_assert_eq!(reduced.len(), f.len());
    (reduced, map)
}

/// Expands an order of the blocks to an order of Ω: blocks stay contiguous,
/// points inside a block keep ground order.
pub fn lift_order(reduced_order: &[usize], map: &QuotientMap) -> Result<Vec<usize>> {
    if reduced_order.len() != map.len() {
        return Err(Error::Contract(format!(
            "order has {} entries but the quotient has {} classes",
            reduced_order.len(),
            map.len()
        )));
    }
    let mut out = Vec::with_capacity(map.width);
    for &k in reduced_order {
        let block = map
            .classes
            .get(k)
            .ok_or_else(|| Error::Contract(format!("class {k} out of range")))?;
        out.extend(block.iter());
    }
    if out.len() != map.width {
        return Err(Error::Contract("reduced order is not a permutation".into()));
    }
    Ok(out)
}

/// Three pairwise adjacent sets from the first node (in canonical order)
/// whose cohort graph is complete.
pub fn find_adjacent_triple(p: &Patchwork, tree: &AutonomyTree) -> Option<[SubsetMask; 3]> {
    let id = tree
        .ids()
        .find(|&id| tree.node(id).label == CaseLabel::CompleteI)?;
    let c = &tree.node(id).children;
    let triple = [0, 1, 2].map(|i| tree.node(c[i]).mask.clone());
    debug_assert!(is_adjacent_triple(p, &triple));
    Some(triple)
}

/// Three nonempty pairwise disjoint members with pairwise unions in `p`.
pub fn is_adjacent_triple(p: &Patchwork, triple: &[SubsetMask; 3]) -> bool {
    let [a, b, c] = triple;
    triple.iter().all(|m| p.contains(m))
        && is_adjacent(p, a, b)
        && is_adjacent(p, b, c)
        && is_adjacent(p, a, c)
}

/// Flattens a tree with no complete cohort into an order of Ω under which
/// every member of `p` is convex.
pub fn construct_order(p: &Patchwork, tree: &AutonomyTree) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(p.ground().len());
    emit(tree, tree.root(), &mut out)?;
    Ok(out)
}

fn emit(tree: &AutonomyTree, id: NodeId, out: &mut Vec<usize>) -> Result<()> {
    let node = tree.node(id);
    match &node.label {
        CaseLabel::CompleteI => Err(Error::Contract(format!(
            "node {id} has a complete cohort; no convex ordering exists"
        ))),
        CaseLabel::PathII(order) => order.iter().try_for_each(|&c| emit(tree, c, out)),
        CaseLabel::EdgelessIII => {
            for &c in &node.children {
                emit(tree, c, out)?;
            }
            out.extend(node.non_cohort.iter());
            Ok(())
        }
    }
}

/// Why an order fails to make a family convex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConvexityViolation {
    NotAPermutation,
    /// `low < mid < high` in the order, `low` and `high` in `set`, `mid` not.
    Split {
        set: SubsetMask,
        low: usize,
        mid: usize,
        high: usize,
    },
}

/// Checks that every set of `f` is convex under `order` (a list of element
/// indices, least first).
pub fn verify_order(f: &SetFamily, order: &[usize]) -> std::result::Result<(), ConvexityViolation> {
    let n = f.width();
    if order.len() != n {
        return Err(ConvexityViolation::NotAPermutation);
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &e) in order.iter().enumerate() {
        if e >= n || pos[e] != usize::MAX {
            return Err(ConvexityViolation::NotAPermutation);
        }
        pos[e] = i;
    }
    for s in f.sets() {
        let Some(lo) = s.iter().map(|e| pos[e]).min() else {
            continue;
        };
        let hi = s.iter().map(|e| pos[e]).max().unwrap_or(lo);
        if hi - lo + 1 == s.len() {
            continue;
        }
        let mid = (lo..=hi)
            .map(|i| order[i])
            .find(|&e| !s.contains(e))
            .expect("a gap exists when the span exceeds the size");
        return Err(ConvexityViolation::Split {
            set: s.clone(),
            low: order[lo],
            mid,
            high: order[hi],
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Three pairwise adjacent members of the closure.
    AdjacentTriple([SubsetMask; 3]),
    /// The closure grew past the largest size a convex patchwork can have.
    ClosureBoundExceeded { bound: usize, reached: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Element indices, least first.
    Orderable(Vec<usize>),
    NotOrderable(Certificate),
}

impl Verdict {
    pub fn is_orderable(&self) -> bool {
        matches!(self, Verdict::Orderable(_))
    }

    pub fn order(&self) -> Option<&[usize]> {
        match self {
            Verdict::Orderable(o) => Some(o),
            Verdict::NotOrderable(_) => None,
        }
    }

    pub fn to_json(&self, ground: &GroundSet) -> serde_json::Value {
        match self {
            Verdict::Orderable(order) => serde_json::json!({
                "orderable": true,
                "order": order.iter().map(|&i| ground.label(i)).collect::<Vec<_>>(),
                "certificate": null,
            }),
            Verdict::NotOrderable(Certificate::AdjacentTriple(t)) => serde_json::json!({
                "orderable": false,
                "order": null,
                "certificate": {
                    "kind": "adjacent_triple",
                    "sets": t.iter().map(|m| ground.labels_of(m)).collect::<Vec<_>>(),
                },
            }),
            Verdict::NotOrderable(Certificate::ClosureBoundExceeded { bound, reached }) => {
                serde_json::json!({
                    "orderable": false,
                    "order": null,
                    "certificate": {
                        "kind": "closure_bound_exceeded",
                        "bound": bound,
                        "reached": reached,
                    },
                })
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecideOptions {
    /// Collapse indistinguishable points first when |Ω| > 2^n.
    pub quotient: bool,
    /// When the convex bound is exceeded, keep closing up to this many
    /// members to exhibit an adjacent triple instead.
    pub find_triple_cap: Option<usize>,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions {
            quotient: true,
            find_triple_cap: None,
        }
    }
}

/// A verdict plus the intermediate structures, which describe the reduced
/// family when a quotient was taken.
#[derive(Debug, Clone)]
pub struct Decision {
    pub verdict: Verdict,
    pub quotient: Option<QuotientMap>,
    pub patchwork: Option<Patchwork>,
    pub tree: Option<AutonomyTree>,
}

/// Largest closure an orderable family on `n` distinct generators can have.
pub fn rejection_bound(n: usize) -> usize {
    usize::try_from(max_convex_patchwork_size(n as u64)).unwrap_or(usize::MAX)
}

pub fn decide(f: &SetFamily, opts: &DecideOptions) -> Result<Decision> {
    let mut decision = Decision {
        verdict: Verdict::Orderable(Vec::new()),
        quotient: None,
        patchwork: None,
        tree: None,
    };
    if f.width() == 0 {
        return Ok(decision);
    }
    let n = f.len();
    let reduce = opts.quotient
        && u32::try_from(n)
            .ok()
            .and_then(|n| 1usize.checked_shl(n))
            .is_some_and(|cap| f.width() > cap);
    let (work, map) = if reduce {
        let (reduced, map) = quotient(f);
        (reduced, Some(map))
    } else {
        (f.clone(), None)
    };
    let lift = |m: &SubsetMask| match &map {
        Some(q) => q.lift_mask(m),
        None => m.clone(),
    };

    let bound = rejection_bound(n);
    let p = match close_bounded(&work, bound) {
        ClosureOutcome::Closed(p) => p,
        ClosureOutcome::Exceeded { reached, bound } => {
            let fallback =
                Verdict::NotOrderable(Certificate::ClosureBoundExceeded { bound, reached });
            let Some(cap) = opts.find_triple_cap else {
                decision.verdict = fallback;
                decision.quotient = map;
                return Ok(decision);
            };
            match close_bounded(&work, cap.max(bound)) {
                ClosureOutcome::Closed(p) => p,
                ClosureOutcome::Exceeded { .. } => {
                    decision.verdict = fallback;
                    decision.quotient = map;
                    return Ok(decision);
                }
            }
        }
    };
    let tree = autonomy_tree(&p)?;
    if let Some(triple) = find_adjacent_triple(&p, &tree) {
        decision.verdict =
            Verdict::NotOrderable(Certificate::AdjacentTriple(triple.map(|m| lift(&m))));
    } else {
        let order = construct_order(&p, &tree)?;
        if let Err(v) = verify_order(p.family(), &order) {
            return Err(Error::Contract(format!(
                "constructed order fails on the closure: {v:?}"
            )));
        }
        let order = match &map {
            Some(q) => lift_order(&order, q)?,
            None => order,
        };
        if let Err(v) = verify_order(f, &order) {
            return Err(Error::Contract(format!(
                "lifted order fails on the input: {v:?}"
            )));
        }
        decision.verdict = Verdict::Orderable(order);
    }
    decision.quotient = map;
    decision.patchwork = Some(p);
    decision.tree = Some(tree);
    Ok(decision)
}
