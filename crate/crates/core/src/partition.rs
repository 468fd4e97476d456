//! Integer partitions and their bead combinatorics.
//!
//! Key items:
//! * [`Partition`] - weakly decreasing positive parts, exact size bookkeeping
//! * [`BetaSet`] - first-column hook lengths ("beads on an abacus")
//! * [`Partition::border_strip_removals`] - all ways to remove a border strip
//! * [`Partition::two_core`], [`Partition::two_quotient`] - domino calculus
//! * [`Partition::parity_exponent`] - the mod-2 exponent that decides the
//!   quadratic character-field twist in the split linear series
//!
//! All border-strip bookkeeping goes through beta-sets: removing a strip of
//! size `k` is moving one bead down by `k`, the strip height is the number of
//! beads jumped over, and the sign is `(-1)^height`. Results are independent
//! of how many trailing zero rows the beta-set encodes; the tests check this.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// A partition of a non-negative integer: weakly decreasing positive parts.
///
/// The empty partition is allowed. Ordering is lexicographic on the part
/// sequence, which is the deterministic order used for enumerations.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting zero or increasing parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format_parts(&parts)));
            }
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format_parts(&parts)));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells (the integer being partitioned).
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let mut out = Vec::new();
        if let Some(&first) = self.parts.first() {
            out.reserve(first as usize);
            for j in 1..=first {
                out.push(self.parts.iter().take_while(|&&p| p >= j).count() as u32);
            }
        }
        Partition { parts: out }
    }

    /// Beta-set with exactly `beads` beads: `{lambda_i + (beads - i)}` for
    /// `i = 1..=beads`, rows beyond the partition counting as zero.
    pub fn beta_set(&self, beads: u32) -> Result<BetaSet> {
        BetaSet::from_partition(self, beads)
    }

    /// All removals of a border strip of `strip_size` cells, ordered by the
    /// moved bead, largest first.
    pub fn border_strip_removals(&self, strip_size: u32) -> Vec<StripRemoval> {
        if strip_size == 0 {
            return Vec::new();
        }
        let beads = self
            .beta_set(self.len() as u32)
            .expect("bead count equals row count");
        let mut out = Vec::new();
        for (i, &x) in beads.beads().iter().enumerate() {
            if x < strip_size {
                continue;
            }
            let target = x - strip_size;
            if beads.beads().contains(&target) {
                continue;
            }
            // Beads strictly between target and x; beads are descending, so
            // they all sit after position i.
            let jumped = beads.beads()[i + 1..]
                .iter()
                .filter(|&&y| y > target)
                .count() as u32;
            let mut moved: Vec<u32> = beads.beads().to_vec();
            moved[i] = target;
            moved.sort_unstable_by(|a, b| b.cmp(a));
            let remainder = BetaSet::from_sorted(moved).to_partition();
            out.push(StripRemoval {
                remainder,
                height: jumped,
            });
        }
        out
    }

    /// All ways of adding a border strip of `strip_size` cells (the inverse
    /// of [`Self::border_strip_removals`]), used as an independent check.
    pub fn border_strip_additions(&self, strip_size: u32) -> Vec<Partition> {
        if strip_size == 0 {
            return Vec::new();
        }
        // Enough beads that every addition is a bead move upwards.
        let beads = self
            .beta_set(self.len() as u32 + strip_size)
            .expect("bead count exceeds row count");
        let mut out = Vec::new();
        for &x in beads.beads() {
            let target = x + strip_size;
            if beads.beads().contains(&target) {
                continue;
            }
            let mut moved: Vec<u32> = beads.beads().to_vec();
            let idx = moved.iter().position(|&y| y == x).expect("bead present");
            moved[idx] = target;
            moved.sort_unstable_by(|a, b| b.cmp(a));
            out.push(BetaSet::from_sorted(moved).to_partition());
        }
        out
    }

    /// The 2-core: what is left after removing dominoes as long as possible.
    /// Computed by letting all beads of each parity sink; the result does not
    /// depend on the removal order.
    pub fn two_core(&self) -> Partition {
        let beads = self.normalized_beta();
        let evens = beads.beads().iter().filter(|&&x| x % 2 == 0).count() as u32;
        let odds = beads.beads().len() as u32 - evens;
        let mut sunk: Vec<u32> = (0..evens).map(|j| 2 * j).collect();
        sunk.extend((0..odds).map(|j| 2 * j + 1));
        sunk.sort_unstable_by(|a, b| b.cmp(a));
        BetaSet::from_sorted(sunk).to_partition()
    }

    /// The 2-quotient `(q0, q1)` with respect to a beta-set whose bead count
    /// is the smallest even integer >= number of rows. `q0` collects the even
    /// beads (halved), `q1` the odd beads (shifted down and halved). With
    /// this convention `size = two_core.size + 2 * (q0.size + q1.size)`.
    pub fn two_quotient(&self) -> (Partition, Partition) {
        let beads = self.normalized_beta();
        let evens: Vec<u32> = beads
            .beads()
            .iter()
            .filter(|&&x| x % 2 == 0)
            .map(|&x| x / 2)
            .collect();
        let odds: Vec<u32> = beads
            .beads()
            .iter()
            .filter(|&&x| x % 2 == 1)
            .map(|&x| (x - 1) / 2)
            .collect();
        (
            BetaSet::from_sorted(evens).to_partition(),
            BetaSet::from_sorted(odds).to_partition(),
        )
    }

    /// `Some(t)` when the partition is the staircase `(t, t-1, ..., 1)`;
    /// the empty partition is the staircase with `t = 0`.
    pub fn staircase_parameter(&self) -> Option<u32> {
        let t = self.parts.len() as u32;
        for (i, &p) in self.parts.iter().enumerate() {
            if p != t - i as u32 {
                return None;
            }
        }
        Some(t)
    }

    pub fn is_staircase(&self) -> bool {
        self.staircase_parameter().is_some()
    }

    /// The staircase partition `(t, t-1, ..., 1)`.
    pub fn staircase(t: u32) -> Partition {
        Partition {
            parts: (1..=t).rev().collect(),
        }
    }

    /// Parity of `sum C(lambda_i, 2) - sum C(lambda'_j, 2) + C(n, 2)`.
    ///
    /// This is the exponent that decides whether the split linear-series
    /// character picks up a quadratic twist; returned as 0 or 1.
    pub fn parity_exponent(&self) -> u8 {
        let conj = self.conjugate();
        let rows: i64 = self.parts.iter().map(|&p| choose2(p)).sum();
        let cols: i64 = conj.parts.iter().map(|&p| choose2(p)).sum();
        let total = rows - cols + choose2(self.size());
        (total.rem_euclid(2)) as u8
    }

    /// Beta-set with the smallest even bead count covering all rows.
    fn normalized_beta(&self) -> BetaSet {
        let rows = self.len() as u32;
        let beads = rows + (rows % 2);
        self.beta_set(beads.max(2))
            .expect("normalized bead count covers all rows")
    }

    /// All partitions of `n` in ascending lexicographic order of the part
    /// sequence, e.g. `[1,1,1] < [2,1] < [3]`.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        descend(n, n, &mut stack, &mut out);
        out
    }
}

fn choose2(x: u32) -> i64 {
    let x = x as i64;
    x * (x - 1) / 2
}

/// Extends the weakly decreasing prefix in `stack` to partitions of
/// `remaining` with parts at most `cap`. Trying smaller parts first emits
/// the completed part sequences in ascending lexicographic order.
fn descend(remaining: u32, cap: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    for part in 1..=cap.min(remaining) {
        stack.push(part);
        descend(remaining - part, part, stack, out);
        stack.pop();
    }
}

fn format_parts(parts: &[u32]) -> String {
    use core::fmt::Write;
    let mut s = String::from("[");
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{p}");
    }
    s.push(']');
    s
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_parts(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `[3,1,1]`; the empty partition is `[]`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidPartition(String::from(s)))?;
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in inner.split(',') {
            let p: u32 = tok
                .parse()
                .map_err(|_| Error::InvalidPartition(String::from(s)))?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}

/// A strictly decreasing set of bead positions encoding a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaSet {
    beads: Vec<u32>,
}

impl BetaSet {
    /// Beads `lambda_i + (beads - i)`, `i = 1..=beads` (1-indexed rows).
    pub fn from_partition(p: &Partition, beads: u32) -> Result<Self> {
        let rows = p.len() as u32;
        if beads < rows {
            return Err(Error::BeadCountTooSmall { beads, rows });
        }
        let mut v = Vec::with_capacity(beads as usize);
        for i in 1..=beads {
            let part = if i <= rows {
                p.parts[(i - 1) as usize]
            } else {
                0
            };
            v.push(part + beads - i);
        }
        Ok(BetaSet { beads: v })
    }

    /// Wraps a descending list of distinct bead positions.
    fn from_sorted(beads: Vec<u32>) -> Self {
        debug_assert!(beads.windows(2).all(|w| w[0] > w[1]));
        BetaSet { beads }
    }

    /// Bead positions, strictly decreasing.
    pub fn beads(&self) -> &[u32] {
        &self.beads
    }

    /// Inverse of [`BetaSet::from_partition`]: `lambda_i = bead_i - (b - i)`.
    pub fn to_partition(&self) -> Partition {
        let b = self.beads.len() as u32;
        let parts: Vec<u32> = self
            .beads
            .iter()
            .enumerate()
            .map(|(idx, &x)| x - (b - 1 - idx as u32))
            .filter(|&p| p > 0)
            .collect();
        Partition { parts }
    }
}

/// One way of removing a border strip: what remains, and how many rows the
/// strip spanned beyond the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripRemoval {
    pub remainder: Partition,
    pub height: u32,
}

impl StripRemoval {
    /// `(-1)^height`, the sign the strip contributes to a character value.
    pub fn sign(&self) -> i64 {
        if self.height % 2 == 0 {
            1
        } else {
            -1
        }
    }
}
