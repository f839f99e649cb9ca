//! Extremal families, size bounds, and brute-force oracles used by the
//! exhaustive and randomized test suites.

use itertools::Itertools;

use crate::closure::{close, Patchwork};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orderability::verify_order;
use crate::setcore::{GroundSet, SetFamily, SubsetMask};
use crate::structure::{
    autonomy_tree, classify_node, cohort_adjacency, is_adjacent, maximal_autonomous_decomposition,
    AutonomyTree, CaseLabel,
};

/// Largest possible patchwork generated by `n` sets: `2^(2^n - 1) + 1`.
/// Only defined for `n <= 6`, where it fits in a `u64`.
pub fn max_patchwork_size(n: usize) -> Result<u64> {
    if n > 6 {
        return Err(Error::CapExceeded {
            what: "generator count for the general size bound",
            value: n,
            cap: 6,
        });
    }
    Ok((1u64 << ((1u64 << n) - 1)) + 1)
}

/// Largest possible patchwork generated by `n` sets that are simultaneously
/// convex under some order: `2n² - n + 2`. Saturates instead of overflowing.
pub fn max_convex_patchwork_size(n: u64) -> u64 {
    let n = n as u128;
    (n * n)
        .checked_mul(2)
        .and_then(|v| u64::try_from(v - n + 2).ok())
        .unwrap_or(u64::MAX)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub general_bound: Option<u64>,
    pub convex_bound: u64,
    pub achieved: usize,
}

pub fn bound_report(f: &SetFamily) -> BoundReport {
    let n = f.len();
    BoundReport {
        n,
        general_bound: max_patchwork_size(n).ok(),
        convex_bound: max_convex_patchwork_size(n as u64),
        achieved: close(f).len(),
    }
}

/// Ω is the set of subsets of `{1..n}` (labels are sorted digit strings,
/// `""` for the empty subset), generated by `X_i = {a : i ∈ a}`.
pub fn powerset_example(n: usize) -> Result<SetFamily> {
    if n > 4 {
        return Err(Error::CapExceeded {
            what: "powerset example size",
            value: n,
            cap: 4,
        });
    }
    let points = 1usize << n;
    let label = |a: usize| (1..=n).filter(|i| a >> (i - 1) & 1 == 1).join("");
    let ground = GroundSet::new((0..points).map(label))?;
    let sets = (1..=n)
        .map(|i| SubsetMask::from_indices(points, (0..points).filter(|a| a >> (i - 1) & 1 == 1)));
    SetFamily::new(ground, sets)
}

/// Ω is the integers `-n..=n`, generated by the `n` windows `[-n+i, i-1]`.
pub fn interval_example(n: usize) -> Result<SetFamily> {
    if n == 0 {
        return Err(Error::Contract("interval example needs n >= 1".into()));
    }
    let n = n as i64;
    let ground = GroundSet::new((-n..=n).map(|k| k.to_string()))?;
    let width = ground.len();
    let idx = |k: i64| (k + n) as usize;
    let sets = (1..=n).map(|i| SubsetMask::from_indices(width, (-n + i..=i - 1).map(idx)));
    SetFamily::new(ground, sets)
}

/// Largest ground set [`brute_force_decide`] accepts.
pub const BRUTE_FORCE_CAP: usize = 8;

/// Tries every order of Ω in lexicographic order and returns the first one
/// making all sets convex.
pub fn brute_force_decide(f: &SetFamily) -> Result<Option<Vec<usize>>> {
    let n = f.width();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::CapExceeded {
            what: "brute-force ground set size",
            value: n,
            cap: BRUTE_FORCE_CAP,
        });
    }
    Ok((0..n)
        .permutations(n)
        .find(|order| verify_order(f, order).is_ok()))
}

/// Every family of distinct subsets of an `omega_size`-point set with at most
/// `max_sets` members, or every family at all when `max_sets` is `None`.
/// Ground labels are `a`, `b`, `c`, `d`.
pub fn enumerate_families(
    omega_size: usize,
    max_sets: Option<usize>,
) -> Result<Box<dyn Iterator<Item = SetFamily>>> {
    if omega_size > 4 {
        return Err(Error::CapExceeded {
            what: "enumeration ground set size",
            value: omega_size,
            cap: 4,
        });
    }
    let ground = GroundSet::new(["a", "b", "c", "d"].iter().take(omega_size).copied())?;
    let subsets: Vec<SubsetMask> = (0..1usize << omega_size)
        .map(|bits| {
            SubsetMask::from_indices(omega_size, (0..omega_size).filter(|i| bits >> i & 1 == 1))
        })
        .collect();
    let build =
        move |picked: Vec<SubsetMask>| SetFamily::new(ground.clone(), picked).expect("same width");
    match max_sets {
        Some(k) => {
            let k = k.min(subsets.len());
            Ok(Box::new((0..=k).flat_map(move |size| {
                let build = build.clone();
                subsets.clone().into_iter().combinations(size).map(build)
            })))
        }
        None => {
            if omega_size > 3 {
                return Err(Error::CapExceeded {
                    what: "full enumeration ground set size",
                    value: omega_size,
                    cap: 3,
                });
            }
            let m = subsets.len();
            Ok(Box::new((0u64..1 << m).map(move |pick| {
                build(
                    (0..m)
                        .filter(|i| pick >> i & 1 == 1)
                        .map(|i| subsets[i].clone())
                        .collect(),
                )
            })))
        }
    }
}

/// Checks the structural laws of a finite patchwork and its autonomy tree,
/// returning one message per violation.
///
/// Covered: laminarity of autonomous sets; every nonempty member is the
/// disjoint union of its maximal autonomous subsets; those parts induce a
/// connected cohort adjacency graph and, conversely, every connected
/// subfamily of a cohort has its union in `p`; a cohort vertex of degree at
/// least three or a cycle forces its component to be a clique; every node
/// gets exactly one case label; complete and path cohorts cover their node.
///
/// Connected subfamilies are enumerated exhaustively, so cohorts are limited
/// to 16 members.
pub fn structure_law_violations(p: &Patchwork, tree: &AutonomyTree) -> Vec<String> {
    let mut out = Vec::new();
    let g = p.ground();
    let nodes = tree.nodes();

    for (i, a) in nodes.iter().enumerate() {
        for b in &nodes[i + 1..] {
            let (a, b) = (&a.mask, &b.mask);
            if !(a.is_disjoint(b) || a.is_subset(b) || b.is_subset(a)) {
                out.push(format!(
                    "autonomous {} and {} overlap",
                    g.render(a),
                    g.render(b)
                ));
            }
        }
    }

    let mut once = SubsetMask::empty(g.len());
    for n in nodes {
        if once.intersects(&n.non_cohort) {
            out.push(format!(
                "non-cohort elements of {} also belong elsewhere",
                g.render(&n.mask)
            ));
        }
        once.union_with(&n.non_cohort);
    }
    if !once.is_full() {
        out.push("some element is a non-cohort element of no node".into());
    }

    for a in p.members().iter().filter(|a| !a.is_empty()) {
        let parts = match maximal_autonomous_decomposition(p, tree, a) {
            Ok(parts) => parts,
            Err(e) => {
                out.push(e.to_string());
                continue;
            }
        };
        let mut union = SubsetMask::empty(g.len());
        for (i, part) in parts.iter().enumerate() {
            if parts[i + 1..].iter().any(|q| q.intersects(part)) {
                out.push(format!("decomposition of {} is not disjoint", g.render(a)));
            }
            union.union_with(part);
        }
        if union != *a {
            out.push(format!(
                "decomposition of {} does not cover it",
                g.render(a)
            ));
        }
        if parts.len() >= 2 && !parts_connected(p, &parts) {
            out.push(format!(
                "decomposition of {} is not adjacency-connected",
                g.render(a)
            ));
        }
        if parts.len() >= 2 {
            let parents: Vec<_> = parts
                .iter()
                .map(|m| tree.find(m).and_then(|id| tree.node(id).parent))
                .collect();
            if parents.iter().any(|x| x.is_none() || *x != parents[0]) {
                out.push(format!(
                    "parts of {} come from different cohorts",
                    g.render(a)
                ));
            }
        }
    }

    for id in tree.ids() {
        let node = tree.node(id);
        let adj = cohort_adjacency(p, tree, id);
        let k = adj.vertex_count();

        match classify_node(p, tree, id) {
            Ok(label) if label.same_as(&node.label) => {}
            Ok(label) => out.push(format!(
                "node {} reclassified from {:?} to {:?}",
                g.render(&node.mask),
                node.label,
                label
            )),
            Err(e) => out.push(e.to_string()),
        }
        let matches_case = [
            k >= 3 && adj.is_complete() && node.non_cohort.is_empty(),
            adj.edge_count() > 0 && adj.path_order().is_some() && node.non_cohort.is_empty(),
            adj.edge_count() == 0,
        ];
        if matches_case.iter().filter(|&&m| m).count() != 1 {
            out.push(format!(
                "node {} fits {matches_case:?} cases",
                g.render(&node.mask)
            ));
        }
        if matches!(node.label, CaseLabel::CompleteI | CaseLabel::PathII(_))
            && !node.non_cohort.is_empty()
        {
            out.push(format!(
                "edged cohort under {} does not cover it",
                g.render(&node.mask)
            ));
        }

        for comp in adj.components() {
            let branching = comp.iter().any(|u| adj.degree(u) >= 3);
            let edges: usize = comp.iter().map(|u| adj.degree(u)).sum::<usize>() / 2;
            let cyclic = edges >= comp.len() && comp.len() >= 3;
            if (branching || cyclic) && !adj.is_clique(&comp) {
                out.push(format!(
                    "cohort under {} has a branching or cyclic component that is not a clique",
                    g.render(&node.mask)
                ));
            }
        }
    }

    // Any family of autonomous sets with connected adjacency graph has its
    // union in the patchwork, not only subfamilies of a single cohort.
    let k = nodes.len();
    if k > 16 {
        out.push(format!(
            "{k} autonomous sets are too many to enumerate subfamilies"
        ));
        return out;
    }
    let mut adj = Graph::new(vec![String::new(); k]);
    for i in 0..k {
        for j in i + 1..k {
            if is_adjacent(p, &nodes[i].mask, &nodes[j].mask) {
                adj.add_edge(i, j);
            }
        }
    }
    for pick in 1u32..(1 << k) {
        let sub = SubsetMask::from_indices(k, (0..k).filter(|i| pick >> i & 1 == 1));
        if !adj.induces_connected(&sub) {
            continue;
        }
        let mut union = SubsetMask::empty(g.len());
        for i in sub.iter() {
            union.union_with(&nodes[i].mask);
        }
        if !p.contains(&union) {
            out.push(format!(
                "connected family of autonomous sets has union {} outside the patchwork",
                g.render(&union)
            ));
        }
    }
    out
}

fn parts_connected(p: &Patchwork, parts: &[SubsetMask]) -> bool {
    let k = parts.len();
    let mut reached = vec![false; k];
    reached[0] = true;
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..k {
            if !reached[j] && is_adjacent(p, &parts[i], &parts[j]) {
                reached[j] = true;
                stack.push(j);
            }
        }
    }
    reached.into_iter().all(|r| r)
}

/// Convenience: closure, tree and law check in one step.
pub fn check_structure_laws(f: &SetFamily) -> Result<Vec<String>> {
    let p = close(f);
    if p.ground().is_empty() {
        return Ok(Vec::new());
    }
    let tree = autonomy_tree(&p)?;
    Ok(structure_law_violations(&p, &tree))
}
