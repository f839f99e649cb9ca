//! Ground sets, subset masks and set families.
//!
//! Everything downstream works on element indices. Labels only matter at
//! the edges: when an instance is parsed and when results are printed.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD: usize = 64;

/// The finite universe, with stable labels and positional indices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut ground = GroundSet::default();
        for label in labels {
            let label = label.into();
            if ground.index.contains_key(&label) {
                return Err(Error::DuplicateLabel(label));
            }
            ground.index.insert(label.clone(), ground.labels.len());
            ground.labels.push(label);
        }
        Ok(ground)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn empty_mask(&self) -> SubsetMask {
        SubsetMask::empty(self.len())
    }

    pub fn full_mask(&self) -> SubsetMask {
        SubsetMask::full(self.len())
    }

    pub fn mask_of<I, S>(&self, labels: I) -> Result<SubsetMask>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut mask = self.empty_mask();
        for label in labels {
            let label = label.as_ref();
            let i = self
                .index_of(label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            mask.insert(i);
        }
        Ok(mask)
    }

    /// Labels of the members of `mask`, in ground order.
    pub fn labels_of(&self, mask: &SubsetMask) -> Vec<String> {
        mask.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// Human-readable `{a,b,c}` rendering of a mask.
    pub fn render(&self, mask: &SubsetMask) -> String {
        format!("{{{}}}", self.labels_of(mask).join(","))
    }
}

/// A subset of a ground set of fixed width, stored as packed 64-bit words.
///
/// The derived `Eq`/`Hash` are bitwise. `Ord` is the canonical family order:
/// smaller popcount first, then the lexicographically smaller sorted list of
/// member indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    width: usize,
    words: Vec<u64>,
}

impl SubsetMask {
    pub fn empty(width: usize) -> Self {
        SubsetMask {
            width,
            words: vec![0; width.div_ceil(WORD)],
        }
    }

    pub fn full(width: usize) -> Self {
        let mut mask = Self::empty(width);
        for w in mask.words.iter_mut() {
            *w = !0;
        }
        mask.trim();
        mask
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, indices: I) -> Self {
        let mut mask = Self::empty(width);
        for i in indices {
            mask.insert(i);
        }
        mask
    }

    fn trim(&mut self) {
        let rem = self.width % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn insert(&mut self, i: usize) {
        assert!(
            i < self.width,
            "index {i} out of range for width {}",
            self.width
        );
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(
            i < self.width,
            "index {i} out of range for width {}",
            self.width
        );
        self.words[i / WORD] &= !(1 << (i % WORD));
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.width && self.words[i / WORD] & (1 << (i % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.width
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + bit)
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn check_width(&self, other: &Self) -> Result<()> {
        if self.width == other.width {
            Ok(())
        } else {
            Err(Error::WidthMismatch {
                left: self.width,
                right: other.width,
            })
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        debug_assert_eq!(self.width, other.width);
        SubsetMask {
            width: self.width,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        let mut mask = SubsetMask {
            width: self.width,
            words: self.words.iter().map(|w| !w).collect(),
        };
        mask.trim();
        mask
    }

    pub fn union_with(&mut self, other: &Self) {
        debug_assert_eq!(self.width, other.width);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Same-width variant of [`overlap`] without the width check.
    pub fn overlaps(&self, other: &Self) -> bool {
        let mut meet = false;
        let mut left = false;
        let mut right = false;
        for (&a, &b) in self.words.iter().zip(&other.words) {
            meet |= a & b != 0;
            left |= a & !b != 0;
            right |= b & !a != 0;
        }
        meet && left && right
    }

    /// Re-index a mask through `map`, where `map[i]` is the new position of
    /// old element `i`.
    pub fn remap(&self, map: &[usize], new_width: usize) -> Self {
        Self::from_indices(new_width, self.iter().map(|i| map[i]))
    }
}

impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.width
            .cmp(&other.width)
            .then_with(|| self.len().cmp(&other.len()))
            .then_with(|| {
                // With equal popcounts, the lowest differing bit belongs to
                // the mask whose sorted index list is lexicographically smaller.
                for (&a, &b) in self.words.iter().zip(&other.words) {
                    let diff = a ^ b;
                    if diff != 0 {
                        let low = diff & diff.wrapping_neg();
                        return if a & low != 0 {
                            Ordering::Less
                        } else {
                            Ordering::Greater
                        };
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// True iff `a` and `b` meet and neither contains the other.
pub fn overlap(a: &SubsetMask, b: &SubsetMask) -> Result<bool> {
    a.check_width(b)?;
    Ok(a.overlaps(b))
}

/// A deduplicated family of subsets of one ground set, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    ground: GroundSet,
    sets: Vec<SubsetMask>,
}

impl SetFamily {
    pub fn new(ground: GroundSet, sets: impl IntoIterator<Item = SubsetMask>) -> Result<Self> {
        let mut sets: Vec<SubsetMask> = sets.into_iter().collect();
        for s in &sets {
            if s.width() != ground.len() {
                return Err(Error::WidthMismatch {
                    left: s.width(),
                    right: ground.len(),
                });
            }
        }
        sets.sort();
        sets.dedup();
        Ok(SetFamily { ground, sets })
    }

    /// Builds a family from label lists.
    pub fn from_labels<S: AsRef<str>>(omega: &[S], sets: &[Vec<S>]) -> Result<Self> {
        let ground = GroundSet::new(omega.iter().map(|s| s.as_ref().to_string()))?;
        let masks = sets
            .iter()
            .map(|set| ground.mask_of(set.iter().map(|s| s.as_ref())))
            .collect::<Result<Vec<_>>>()?;
        SetFamily::new(ground, masks)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn sets(&self) -> &[SubsetMask] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn width(&self) -> usize {
        self.ground.len()
    }

    pub fn contains(&self, mask: &SubsetMask) -> bool {
        self.sets.binary_search(mask).is_ok()
    }

    pub fn into_parts(self) -> (GroundSet, Vec<SubsetMask>) {
        (self.ground, self.sets)
    }

    /// The same family over a reordered ground set. `perm[k]` is the old
    /// index of the element placed at new position `k`.
    pub fn reorder_ground(&self, perm: &[usize]) -> Result<Self> {
        let n = self.width();
        let mut old_to_new = vec![usize::MAX; n];
        for (new, &old) in perm.iter().enumerate() {
            old_to_new[old] = new;
        }
        let ground = GroundSet::new(perm.iter().map(|&old| self.ground.label(old).to_string()))?;
        let sets = self.sets.iter().map(|s| s.remap(&old_to_new, n));
        SetFamily::new(ground, sets)
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Instance {
    omega: Vec<String>,
    sets: Vec<Vec<String>>,
}

/// Parses the `{"omega": [...], "sets": [[...], ...]}` instance format.
pub fn parse_family(text: &str) -> Result<SetFamily> {
    let inst: Instance = serde_json::from_str(text)?;
    SetFamily::from_labels(&inst.omega, &inst.sets)
}

pub fn family_to_json(f: &SetFamily) -> serde_json::Value {
    serde_json::json!({
        "omega": f.ground.labels(),
        "sets": f.sets.iter().map(|s| f.ground.labels_of(s)).collect::<Vec<_>>(),
    })
}

/// Compact canonical serialization; `parse_family` inverts it exactly.
pub fn serialize_family(f: &SetFamily) -> String {
    let inst = Instance {
        omega: f.ground.labels().to_vec(),
        sets: f.sets.iter().map(|s| f.ground.labels_of(s)).collect(),
    };
    serde_json::to_string(&inst).expect("instance serialization is infallible")
}
