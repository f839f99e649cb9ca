//! Patchwork closure of a set family.
//!
//! A patchwork contains ∅ and Ω, and for every overlapping pair `A`, `B`
//! also contains `A ∪ B`, `A ∩ B`, `A ∖ B` and `B ∖ A`. The closure is
//! computed with a worklist: every member is paired exactly once with each
//! member inserted before it, and new members are appended to the list.

use std::collections::{HashMap, HashSet};

use crate::setcore::{GroundSet, SetFamily, SubsetMask};

/// A family closed under the partial patchwork operations.
#[derive(Debug, Clone)]
pub struct Patchwork {
    family: SetFamily,
    member_index: HashMap<SubsetMask, usize>,
    generator_count: usize,
}

impl Patchwork {
    pub(crate) fn from_members(
        ground: GroundSet,
        members: Vec<SubsetMask>,
        generator_count: usize,
    ) -> Self {
        let family =
            SetFamily::new(ground, members).expect("closure members share the ground width");
        let member_index = family
            .sets()
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        Patchwork {
            family,
            member_index,
            generator_count,
        }
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn ground(&self) -> &GroundSet {
        self.family.ground()
    }

    /// Members in canonical order.
    pub fn members(&self) -> &[SubsetMask] {
        self.family.sets()
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    pub fn contains(&self, mask: &SubsetMask) -> bool {
        self.member_index.contains_key(mask)
    }

    pub fn position(&self, mask: &SubsetMask) -> Option<usize> {
        self.member_index.get(mask).copied()
    }

    /// Number of distinct sets the closure was generated from.
    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn into_family(self) -> SetFamily {
        self.family
    }
}

#[derive(Debug, Clone)]
pub enum ClosureOutcome {
    Closed(Patchwork),
    /// The worklist family grew past `bound`; `reached` is its size at that moment.
    Exceeded {
        reached: usize,
        bound: usize,
    },
}

impl ClosureOutcome {
    pub fn closed(self) -> Option<Patchwork> {
        match self {
            ClosureOutcome::Closed(p) => Some(p),
            ClosureOutcome::Exceeded { .. } => None,
        }
    }
}

struct Worklist {
    members: Vec<SubsetMask>,
    seen: HashSet<SubsetMask>,
}

impl Worklist {
    fn push(&mut self, mask: SubsetMask) {
        if self.seen.insert(mask.clone()) {
            self.members.push(mask);
        }
    }
}

fn run(f: &SetFamily, bound: Option<usize>) -> ClosureOutcome {
    let ground = f.ground();
    let mut work = Worklist {
        members: Vec::new(),
        seen: HashSet::new(),
    };
    work.push(ground.empty_mask());
    work.push(ground.full_mask());
    for s in f.sets() {
        work.push(s.clone());
    }
    let exceeded = |len: usize| bound.is_some_and(|b| len > b);
    if let Some(b) = bound {
        if exceeded(work.members.len()) {
            return ClosureOutcome::Exceeded {
                reached: work.members.len(),
                bound: b,
            };
        }
    }

    let mut next = 1;
    while next < work.members.len() {
        for earlier in 0..next {
            let a = &work.members[next];
            let b = &work.members[earlier];
            if !a.overlaps(b) {
                continue;
            }
            let derived = [
                a.union(b),
                a.intersection(b),
                a.difference(b),
                b.difference(a),
            ];
            for d in derived {
                work.push(d);
                if exceeded(work.members.len()) {
                    return ClosureOutcome::Exceeded {
                        reached: work.members.len(),
                        bound: bound.unwrap_or_default(),
                    };
                }
            }
        }
        next += 1;
    }
    ClosureOutcome::Closed(Patchwork::from_members(
        ground.clone(),
        work.members,
        f.len(),
    ))
}

/// The least patchwork containing `f`, ∅ and Ω.
pub fn close(f: &SetFamily) -> Patchwork {
    match run(f, None) {
        ClosureOutcome::Closed(p) => p,
        ClosureOutcome::Exceeded { .. } => unreachable!("unbounded closure cannot exceed"),
    }
}

/// Like [`close`], but stops as soon as the family has more than `bound` members.
pub fn close_bounded(f: &SetFamily, bound: usize) -> ClosureOutcome {
    run(f, Some(bound))
}

/// A closure defect: `missing` should be present because of `pair`
/// (`None` when ∅ or Ω itself is missing).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureViolation {
    pub pair: Option<(SubsetMask, SubsetMask)>,
    pub missing: SubsetMask,
}

/// Checks the patchwork axioms, reporting the first defect in canonical order.
pub fn is_patchwork(f: &SetFamily) -> Result<(), ClosureViolation> {
    let ground = f.ground();
    for required in [ground.empty_mask(), ground.full_mask()] {
        if !f.contains(&required) {
            return Err(ClosureViolation {
                pair: None,
                missing: required,
            });
        }
    }
    let sets = f.sets();
    for (i, a) in sets.iter().enumerate() {
        for b in &sets[i + 1..] {
            if !a.overlaps(b) {
                continue;
            }
            for d in [
                a.intersection(b),
                a.union(b),
                a.difference(b),
                b.difference(a),
            ] {
                if !f.contains(&d) {
                    return Err(ClosureViolation {
                        pair: Some((a.clone(), b.clone())),
                        missing: d,
                    });
                }
            }
        }
    }
    Ok(())
}
