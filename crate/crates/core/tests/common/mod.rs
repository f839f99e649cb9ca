//! Seeded generators shared by the integration tests.

#![allow(dead_code)]

use patchwork::intervalgraph::c_plus;
use patchwork::structure::{GraphKind, SpecNode};
use patchwork::{GroundSet, SetFamily, SubsetMask, TreeSpec};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_c0de;

pub fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

pub fn ground(n: usize) -> GroundSet {
    GroundSet::new((0..n).map(|i| format!("p{i}"))).unwrap()
}

pub fn random_mask(rng: &mut impl Rng, width: usize) -> SubsetMask {
    SubsetMask::from_indices(width, (0..width).filter(|_| rng.gen_bool(0.5)))
}

/// Up to `max_sets` uniformly random subsets of an `omega`-point ground set.
pub fn random_family(rng: &mut impl Rng, omega: usize, max_sets: usize) -> SetFamily {
    let k = rng.gen_range(0..=max_sets);
    let sets: Vec<_> = (0..k).map(|_| random_mask(rng, omega)).collect();
    SetFamily::new(ground(omega), sets).unwrap()
}

/// At most 4 sets on at most 6 points, with 𝒞⁺ of at most 10 sets.
pub fn random_small_cplus_family(rng: &mut impl Rng) -> SetFamily {
    loop {
        let omega = rng.gen_range(1..=6);
        let f = random_family(rng, omega, 4);
        if c_plus(&f).len() <= 10 {
            return f;
        }
    }
}

/// 100 points with 3 generators. With `orderable` the generators are
/// intervals of a hidden shuffled order, otherwise uniform random subsets.
pub fn quotient_instance(rng: &mut impl Rng, orderable: bool) -> SetFamily {
    const N: usize = 100;
    let sets: Vec<SubsetMask> = if orderable {
        let mut hidden: Vec<usize> = (0..N).collect();
        hidden.shuffle(rng);
        (0..3)
            .map(|_| {
                let a = rng.gen_range(0..N);
                let b = rng.gen_range(0..N);
                let (lo, hi) = (a.min(b), a.max(b));
                SubsetMask::from_indices(N, hidden[lo..=hi].iter().copied())
            })
            .collect()
    } else {
        (0..3).map(|_| random_mask(rng, N)).collect()
    };
    SetFamily::new(ground(N), sets).unwrap()
}

struct SpecGen<'a, R: Rng> {
    rng: &'a mut R,
    next_label: usize,
}

impl<R: Rng> SpecGen<'_, R> {
    fn labels(&mut self, k: usize) -> Vec<String> {
        (0..k)
            .map(|_| {
                self.next_label += 1;
                format!("l{}", self.next_label - 1)
            })
            .collect()
    }

    fn node(&mut self, depth: usize) -> SpecNode {
        let leaf = depth >= 3 || self.rng.gen_bool(0.35);
        if leaf {
            let k = self.rng.gen_range(1..=2);
            return SpecNode {
                kind: GraphKind::Edgeless,
                labels: self.labels(k),
                children: Vec::new(),
            };
        }
        match self.rng.gen_range(0..3) {
            0 => {
                let k = self.rng.gen_range(3..=4);
                let children = (0..k).map(|_| self.node(depth + 1)).collect();
                SpecNode {
                    kind: GraphKind::Complete,
                    labels: Vec::new(),
                    children,
                }
            }
            1 => {
                let k = self.rng.gen_range(2..=4);
                let children = (0..k).map(|_| self.node(depth + 1)).collect();
                SpecNode {
                    kind: GraphKind::Path,
                    labels: Vec::new(),
                    children,
                }
            }
            _ => {
                let k = self.rng.gen_range(0..=3);
                let own = if k <= 1 || self.rng.gen_bool(0.5) {
                    self.rng.gen_range(1..=2)
                } else {
                    0
                };
                let labels = self.labels(own);
                let children = (0..k).map(|_| self.node(depth + 1)).collect();
                SpecNode {
                    kind: GraphKind::Edgeless,
                    labels,
                    children,
                }
            }
        }
    }
}

/// A valid tree spec with at most `max_labels` labels in total.
pub fn random_tree_spec(rng: &mut impl Rng, max_labels: usize) -> TreeSpec {
    loop {
        let mut gen = SpecGen {
            rng: &mut *rng,
            next_label: 0,
        };
        let node = gen.node(0);
        if gen.next_label <= max_labels {
            let spec = TreeSpec { node };
            spec.validate().expect("generator only builds valid specs");
            return spec;
        }
    }
}
