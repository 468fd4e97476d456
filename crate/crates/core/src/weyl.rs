//! Character values of Weyl groups of types A and B.
//!
//! * [`sym_character`] - irreducible character values of the symmetric group
//!   `S_n`, labels and classes both partitions of `n`
//! * [`hyperoct_character`] - irreducible character values of the
//!   hyperoctahedral group (type `B_n`), labels bipartitions, classes signed
//!   cycle types
//! * [`parabolic_multiplicity_type_a`] / [`parabolic_multiplicity_type_b`] -
//!   multiplicity of a character in the permutation character on a standard
//!   parabolic subgroup, computed by explicit summation over the subgroup
//!
//! Both character recursions remove one border strip per cycle, largest
//! cycle first; the value is a class function, so the stripping order only
//! matters for memoisation. Labelling conventions for type B: `((n); ())` is
//! the trivial character, and `((); (1^n))` takes value
//! `sign(underlying permutation) * (-1)^(number of sign changes)`; the first
//! component of the label responds to cycle lengths only, the second picks up
//! an extra minus sign on negative cycles.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::partition::Partition;
use crate::perm::{subgroup_closure, Perm, SignedPerm};
use crate::{Error, Result};

/// Cycle type of a permutation: a partition of the degree.
pub type CycleType = Partition;

/// An ordered pair of partitions labelling a hyperoctahedral character.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BiPartition {
    alpha: Partition,
    beta: Partition,
}

impl BiPartition {
    pub fn new(alpha: Partition, beta: Partition) -> Self {
        BiPartition { alpha, beta }
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn size(&self) -> u32 {
        self.alpha.size() + self.beta.size()
    }

    /// All bipartitions of `n`, grouped by the size of the first component
    /// (largest first); within a group both components run in descending
    /// lexicographic order. Descending lexicographic order refines dominance,
    /// which is what the table orthogonalisation relies on.
    pub fn all(n: u32) -> Vec<BiPartition> {
        let mut out = Vec::new();
        for a in (0..=n).rev() {
            let mut alphas = Partition::all(a);
            alphas.reverse();
            let mut betas = Partition::all(n - a);
            betas.reverse();
            for alpha in &alphas {
                for beta in &betas {
                    out.push(BiPartition::new(alpha.clone(), beta.clone()));
                }
            }
        }
        out
    }
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha, self.beta)
    }
}

impl FromStr for BiPartition {
    type Err = Error;

    /// Parses `([3,1],[2])`.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = split_pair(s)?;
        Ok(BiPartition::new(a.parse()?, b.parse()?))
    }
}

/// Conjugacy class data of a signed permutation: cycle lengths split by the
/// sign of each cycle.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignedCycleType {
    positive: Partition,
    negative: Partition,
}

impl SignedCycleType {
    pub fn new(positive: Partition, negative: Partition) -> Self {
        SignedCycleType { positive, negative }
    }

    pub fn positive(&self) -> &Partition {
        &self.positive
    }

    pub fn negative(&self) -> &Partition {
        &self.negative
    }

    pub fn size(&self) -> u32 {
        self.positive.size() + self.negative.size()
    }

    /// All signed cycle types of rank `n`, in a deterministic order.
    pub fn all(n: u32) -> Vec<SignedCycleType> {
        BiPartition::all(n)
            .into_iter()
            .map(|bp| SignedCycleType::new(bp.alpha, bp.beta))
            .collect()
    }
}

impl fmt::Display for SignedCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.positive, self.negative)
    }
}

impl FromStr for SignedCycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = split_pair(s)?;
        Ok(SignedCycleType::new(a.parse()?, b.parse()?))
    }
}

fn split_pair(s: &str) -> Result<(&str, &str)> {
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::InvalidLabel(alloc::string::String::from(s)))?;
    // The separator is the comma between the closing and opening brackets.
    let sep = inner
        .find("],[")
        .ok_or_else(|| Error::InvalidLabel(alloc::string::String::from(s)))?;
    Ok((&inner[..sep + 1], &inner[sep + 2..]))
}

/// Irreducible character value of `S_n`: label and class are partitions of
/// the same `n`.
pub fn sym_character(label: &Partition, class: &CycleType) -> Result<i64> {
    if label.size() != class.size() {
        return Err(Error::SizeMismatch {
            expected: label.size(),
            found: class.size(),
        });
    }
    let mut memo = BTreeMap::new();
    Ok(sym_rec(label, class.parts(), &mut memo))
}

fn sym_rec(label: &Partition, cycles: &[u32], memo: &mut BTreeMap<(Partition, usize), i64>) -> i64 {
    if cycles.is_empty() {
        return 1;
    }
    let key = (label.clone(), cycles.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = cycles[0];
    let mut total = 0i64;
    for removal in label.border_strip_removals(k) {
        total += removal.sign() * sym_rec(&removal.remainder, &cycles[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// Irreducible character value of the hyperoctahedral group of rank `n`.
pub fn hyperoct_character(label: &BiPartition, class: &SignedCycleType) -> Result<i64> {
    if label.size() != class.size() {
        return Err(Error::SizeMismatch {
            expected: label.size(),
            found: class.size(),
        });
    }
    // Flatten to (length, is_negative), largest cycles first.
    let mut cycles: Vec<(u32, bool)> = class
        .positive
        .parts()
        .iter()
        .map(|&k| (k, false))
        .chain(class.negative.parts().iter().map(|&k| (k, true)))
        .collect();
    cycles.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1)));
    let mut memo = BTreeMap::new();
    Ok(hyp_rec(label, &cycles, &mut memo))
}

fn hyp_rec(
    label: &BiPartition,
    cycles: &[(u32, bool)],
    memo: &mut BTreeMap<(BiPartition, usize), i64>,
) -> i64 {
    if cycles.is_empty() {
        return 1;
    }
    let key = (label.clone(), cycles.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let (k, negative) = cycles[0];
    let mut total = 0i64;
    for removal in label.alpha.border_strip_removals(k) {
        let rest = BiPartition::new(removal.remainder.clone(), label.beta.clone());
        total += removal.sign() * hyp_rec(&rest, &cycles[1..], memo);
    }
    let beta_weight = if negative { -1 } else { 1 };
    for removal in label.beta.border_strip_removals(k) {
        let rest = BiPartition::new(label.alpha.clone(), removal.remainder.clone());
        total += beta_weight * removal.sign() * hyp_rec(&rest, &cycles[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// The cycle type `(2t-1, 2t-5, 2t-9, ...)` whose character value on the
/// staircase label is a sign. Its parts sum to `t(t+1)/2`.
pub fn staircase_cycle_type(t: u32) -> CycleType {
    let mut parts = Vec::new();
    let mut k = 2 * t as i64 - 1;
    while k > 0 {
        parts.push(k as u32);
        k -= 4;
    }
    let ct = Partition::from_unsorted(parts);
    debug_assert_eq!(ct.size(), t * (t + 1) / 2);
    ct
}

const PARABOLIC_A_MAX: u32 = 7;
const PARABOLIC_B_MAX: u32 = 4;

/// Multiplicity of the character labelled `label` in the permutation
/// character of `S_n` on the standard parabolic generated by the simple
/// transpositions `s_i` (1-indexed) in `subset`. Summation over the subgroup.
pub fn parabolic_multiplicity_type_a(n: u32, subset: &[usize], label: &Partition) -> Result<i64> {
    if n > PARABOLIC_A_MAX {
        return Err(Error::CapabilityExceeded {
            what: "type A parabolic multiplicity",
            limit: PARABOLIC_A_MAX,
        });
    }
    if label.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: label.size(),
        });
    }
    if subset.iter().any(|&i| i == 0 || i >= n as usize) {
        return Err(Error::InvalidLabel(alloc::string::String::from(
            "type A simple reflections are indexed 1..n-1",
        )));
    }
    let gens: Vec<Perm> = subset
        .iter()
        .map(|&i| {
            let mut images: Vec<u8> = (0..n as u8).collect();
            images.swap(i - 1, i);
            Perm::from_images(images)
        })
        .collect();
    let members = subgroup_closure(Perm::identity(n as usize), &gens, |a, b| a.compose(b));
    let mut by_type: BTreeMap<Partition, i64> = BTreeMap::new();
    for w in &members {
        *by_type.entry(w.cycle_type()).or_insert(0) += 1;
    }
    let mut total = 0i64;
    for (t, count) in &by_type {
        total += count * sym_character(label, t)?;
    }
    let order = members.len() as i64;
    debug_assert_eq!(total.rem_euclid(order), 0);
    Ok(total / order)
}

/// Same as [`parabolic_multiplicity_type_a`] for the hyperoctahedral group:
/// generator index 0 is the sign flip, index `i >= 1` the transposition
/// `(i-1, i)`.
pub fn parabolic_multiplicity_type_b(n: u32, subset: &[usize], label: &BiPartition) -> Result<i64> {
    if n > PARABOLIC_B_MAX {
        return Err(Error::CapabilityExceeded {
            what: "type B parabolic multiplicity",
            limit: PARABOLIC_B_MAX,
        });
    }
    if label.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: label.size(),
        });
    }
    if subset.iter().any(|&i| i >= n as usize) {
        return Err(Error::InvalidLabel(alloc::string::String::from(
            "type B simple reflections are indexed 0..n-1",
        )));
    }
    let gens: Vec<SignedPerm> = subset
        .iter()
        .map(|&i| SignedPerm::simple_reflection(n as usize, i))
        .collect();
    let members = subgroup_closure(SignedPerm::identity(n as usize), &gens, |a, b| a.compose(b));
    let mut by_type: BTreeMap<SignedCycleType, i64> = BTreeMap::new();
    for w in &members {
        *by_type.entry(w.signed_cycle_type()).or_insert(0) += 1;
    }
    let mut total = 0i64;
    for (t, count) in &by_type {
        total += count * hyperoct_character(label, t)?;
    }
    let order = members.len() as i64;
    debug_assert_eq!(total.rem_euclid(order), 0);
    Ok(total / order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn bp(a: &[u32], b: &[u32]) -> BiPartition {
        BiPartition::new(p(a), p(b))
    }

    fn sct(pos: &[u32], neg: &[u32]) -> SignedCycleType {
        SignedCycleType::new(p(pos), p(neg))
    }

    #[test]
    fn sym_small_values() {
        assert_eq!(sym_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(sym_character(&p(&[2, 2]), &p(&[2, 2])).unwrap(), 2);
        assert_eq!(sym_character(&p(&[3, 2, 1]), &p(&[5, 1])).unwrap(), 1);
        // Dimension of the staircase label of S_3 is 2.
        assert_eq!(sym_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
    }

    #[test]
    fn sym_size_mismatch() {
        assert!(sym_character(&p(&[2, 1]), &p(&[2, 2])).is_err());
    }

    #[test]
    fn trivial_and_sign_rows() {
        for class in Partition::all(6) {
            assert_eq!(sym_character(&p(&[6]), &class).unwrap(), 1);
            let transpositions: u32 = class.parts().iter().map(|&k| k - 1).sum();
            let sign = if transpositions % 2 == 0 { 1 } else { -1 };
            assert_eq!(sym_character(&p(&[1; 6]), &class).unwrap(), sign);
        }
    }

    #[test]
    fn hyperoct_rank_one_table() {
        // W(B_1) has two classes and the character table [[1,1],[1,-1]].
        let id = sct(&[1], &[]);
        let flip = sct(&[], &[1]);
        let triv = bp(&[1], &[]);
        let sgn = bp(&[], &[1]);
        assert_eq!(hyperoct_character(&triv, &id).unwrap(), 1);
        assert_eq!(hyperoct_character(&triv, &flip).unwrap(), 1);
        assert_eq!(hyperoct_character(&sgn, &id).unwrap(), 1);
        assert_eq!(hyperoct_character(&sgn, &flip).unwrap(), -1);
    }

    #[test]
    fn hyperoct_conventions() {
        // ((n); ()) is trivial.
        for class in SignedCycleType::all(3) {
            assert_eq!(hyperoct_character(&bp(&[3], &[]), &class).unwrap(), 1);
        }
        // ((1);(1)) has dimension 2.
        assert_eq!(
            hyperoct_character(&bp(&[1], &[1]), &sct(&[1, 1], &[])).unwrap(),
            2
        );
        // ((); (1^n)) is sign times sign-of-sign-changes.
        for class in SignedCycleType::all(3) {
            let perm_sign: u32 = class
                .positive()
                .parts()
                .iter()
                .chain(class.negative().parts())
                .map(|&k| k - 1)
                .sum();
            let flips = class.negative().len() as u32;
            let expect = if (perm_sign + flips) % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                hyperoct_character(&bp(&[], &[1, 1, 1]), &class).unwrap(),
                expect
            );
        }
    }

    #[test]
    fn staircase_cycle_types() {
        assert_eq!(staircase_cycle_type(2), p(&[3]));
        assert_eq!(staircase_cycle_type(3), p(&[5, 1]));
        assert_eq!(staircase_cycle_type(6), p(&[11, 7, 3]));
    }

    #[test]
    fn parabolic_examples() {
        // S_2 inside S_3 against the 2-dimensional label.
        assert_eq!(
            parabolic_multiplicity_type_a(3, &[1], &p(&[2, 1])).unwrap(),
            1
        );
        // The full group: only the trivial label survives.
        assert_eq!(
            parabolic_multiplicity_type_a(3, &[1, 2], &p(&[3])).unwrap(),
            1
        );
        assert_eq!(
            parabolic_multiplicity_type_a(3, &[1, 2], &p(&[2, 1])).unwrap(),
            0
        );
        // One reflection inside W(B_2) against the reflection label.
        assert_eq!(
            parabolic_multiplicity_type_b(2, &[0], &bp(&[1], &[1])).unwrap(),
            1
        );
    }

    #[test]
    fn bipartition_parse_round_trip() {
        for s in ["([3,1],[2])", "([],[1,1])", "([2],[])"] {
            let b: BiPartition = s.parse().unwrap();
            assert_eq!(alloc::format!("{b}"), s);
        }
    }
}
