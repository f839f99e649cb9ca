//! Intersection graphs, interval representations and a brute-force
//! interval-graph recognizer.
//!
//! A family is orderable exactly when the intersection graph of its nonempty
//! sets together with all singletons of Ω is an interval graph. This module
//! provides both sides of that equivalence so they can be checked against
//! [`decide`](crate::orderability::decide).

use std::collections::HashSet;

use crate::error::{Error, Result};
pub use crate::graph::Graph;
use crate::setcore::{SetFamily, SubsetMask};

/// Default vertex cap for [`is_interval_graph_oracle`].
pub const ORACLE_CAP: usize = 10;

/// The nonempty sets of `f` together with every singleton of Ω.
pub fn c_plus(f: &SetFamily) -> SetFamily {
    let n = f.width();
    let sets = f
        .sets()
        .iter()
        .filter(|s| !s.is_empty())
        .cloned()
        .chain((0..n).map(|i| SubsetMask::from_indices(n, [i])));
    SetFamily::new(f.ground().clone(), sets).expect("same ground set")
}

/// One vertex per set of `f` (canonical order), with an edge when two sets meet.
pub fn intersection_graph(f: &SetFamily) -> Graph {
    let sets = f.sets();
    let mut g = Graph::new(sets.iter().map(|s| f.ground().render(s)).collect());
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i].intersects(&sets[j]) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Closed integer interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

/// Intervals for the nonempty sets of a family, aligned with `sets`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalRep {
    pub sets: Vec<SubsetMask>,
    pub intervals: Vec<Interval>,
}

impl IntervalRep {
    /// Graph on the represented sets with an edge when their intervals meet.
    pub fn intersection_pattern(&self) -> Vec<(usize, usize)> {
        let iv = &self.intervals;
        (0..iv.len())
            .flat_map(|i| (i + 1..iv.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| iv[i].intersects(&iv[j]))
            .collect()
    }
}

/// The element at (1-based) position `i` of `order` gets the base interval
/// `[2i, 2i+1]`; each nonempty set maps to the hull of its members' base
/// intervals. Fails if some set is not convex under `order`.
pub fn interval_representation(order: &[usize], f: &SetFamily) -> Result<IntervalRep> {
    let n = f.width();
    let mut pos = vec![usize::MAX; n];
    for (i, &e) in order.iter().enumerate() {
        if e >= n || pos[e] != usize::MAX {
            return Err(Error::Contract(
                "order is not a permutation of the ground set".into(),
            ));
        }
        pos[e] = i + 1;
    }
    if order.len() != n {
        return Err(Error::Contract(
            "order is not a permutation of the ground set".into(),
        ));
    }
    let mut rep = IntervalRep {
        sets: Vec::new(),
        intervals: Vec::new(),
    };
    for s in f.sets().iter().filter(|s| !s.is_empty()) {
        let lo = s.iter().map(|e| pos[e]).min().unwrap_or_default();
        let hi = s.iter().map(|e| pos[e]).max().unwrap_or_default();
        if hi - lo + 1 != s.len() {
            return Err(Error::Contract(format!(
                "{} is not convex under the given order",
                f.ground().render(s)
            )));
        }
        rep.sets.push(s.clone());
        rep.intervals.push(Interval {
            lo: 2 * lo as i64,
            hi: 2 * hi as i64 + 1,
        });
    }
    Ok(rep)
}

/// Exhaustive search for a vertex order in which `u < v < w` and `uw ∈ E`
/// force `uv ∈ E`; such an order exists exactly for interval graphs.
///
/// Orders are built one vertex at a time. A placed vertex stays *open* while it
/// is adjacent to everything placed after it, and a new vertex may only be
/// appended if all of its placed neighbours are still open. Dead
/// `(placed, open)` states are memoized, so the search visits each state once.
pub fn is_interval_graph_oracle(g: &Graph) -> Result<bool> {
    is_interval_graph_oracle_capped(g, ORACLE_CAP)
}

pub fn is_interval_graph_oracle_capped(g: &Graph, cap: usize) -> Result<bool> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "interval oracle vertex count",
            value: n,
            cap,
        });
    }
    let mut dead = HashSet::new();
    Ok(extend(
        g,
        &SubsetMask::empty(n),
        &SubsetMask::empty(n),
        &mut dead,
    ))
}

fn extend(
    g: &Graph,
    placed: &SubsetMask,
    open: &SubsetMask,
    dead: &mut HashSet<(SubsetMask, SubsetMask)>,
) -> bool {
    let n = g.vertex_count();
    if placed.len() == n {
        return true;
    }
    if dead.contains(&(placed.clone(), open.clone())) {
        return false;
    }
    for w in (0..n).filter(|&w| !placed.contains(w)) {
        let earlier_neighbours = g.neighbors(w).intersection(placed);
        if !earlier_neighbours.is_subset(open) {
            continue;
        }
        let mut next_placed = placed.clone();
        next_placed.insert(w);
        let mut next_open = open.intersection(g.neighbors(w));
        next_open.insert(w);
        if extend(g, &next_placed, &next_open, dead) {
            return true;
        }
    }
    dead.insert((placed.clone(), open.clone()));
    false
}

/// Whether the intersection graph of `c_plus(f)` is an interval graph.
pub fn morris_check(f: &SetFamily) -> Result<bool> {
    is_interval_graph_oracle(&intersection_graph(&c_plus(f)))
}

pub fn to_dot(g: &Graph) -> String {
    g.to_dot()
}
