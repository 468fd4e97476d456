//! Brute-force character tables, independent of the strip-removal recursion.
//!
//! The symmetric-group table is built from Young permutation characters:
//! count cosets fixed by an element (explicit orbit counting), then
//! orthogonalise in an order refining dominance. The hyperoctahedral table is
//! built the same way from characters induced off block subgroups, with the
//! sign character on the second family of blocks. Neither route shares code
//! with [`crate::weyl`]; agreement of the two is a test, not an assumption.
//!
//! All inner products are exact: sums of `class size * value * value` must
//! divide by the group order, and the code asserts that they do.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::partition::Partition;
use crate::perm::{Perm, SignedPerm};
use crate::weyl::{BiPartition, CycleType, SignedCycleType};
use crate::{Error, Result};

const SYM_TABLE_MAX: u32 = 7;
const HYP_TABLE_MAX: u32 = 4;
const COMMUTING_MAX: u32 = 8;

/// A square character table: one row per label, one column per class.
#[derive(Debug, Clone)]
pub struct CharTable<L, C> {
    pub labels: Vec<L>,
    pub classes: Vec<C>,
    pub class_sizes: Vec<u64>,
    pub group_order: u64,
    /// `values[i][j]` is the value of row `i` on class `j`.
    pub values: Vec<Vec<i64>>,
}

impl<L: PartialEq, C> CharTable<L, C> {
    pub fn row(&self, label: &L) -> Option<&[i64]> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| self.values[i].as_slice())
    }

    /// Class-size-weighted inner product of two rows, times the group order.
    pub fn raw_inner(&self, a: &[i64], b: &[i64]) -> i64 {
        a.iter()
            .zip(b)
            .zip(&self.class_sizes)
            .map(|((&x, &y), &s)| s as i64 * x * y)
            .sum()
    }
}

/// Number of ordered set partitions with block sizes `composition` fixed by
/// a permutation of cycle type `class`. This is the value of the Young
/// permutation character, computed by explicitly enumerating the cosets.
pub fn young_permutation_character(composition: &[u32], class: &CycleType) -> Result<u64> {
    let n: u32 = composition.iter().sum();
    if n != class.size() {
        return Err(Error::SizeMismatch {
            expected: n,
            found: class.size(),
        });
    }
    if n > SYM_TABLE_MAX {
        return Err(Error::CapabilityExceeded {
            what: "Young permutation character",
            limit: SYM_TABLE_MAX,
        });
    }
    let w = Perm::with_cycle_type(class);
    let mut remaining: Vec<u32> = composition.to_vec();
    let mut assignment = alloc::vec![0u8; n as usize];
    let mut count = 0u64;
    assign(&w, &mut remaining, &mut assignment, 0, &mut count);
    Ok(count)
}

/// Fills block labels position by position, counting assignments that the
/// permutation stabilises blockwise.
fn assign(
    w: &Perm,
    remaining: &mut Vec<u32>,
    assignment: &mut Vec<u8>,
    at: usize,
    count: &mut u64,
) {
    if at == assignment.len() {
        if (0..assignment.len()).all(|i| assignment[w.image(i)] == assignment[i]) {
            *count += 1;
        }
        return;
    }
    for b in 0..remaining.len() {
        if remaining[b] == 0 {
            continue;
        }
        remaining[b] -= 1;
        assignment[at] = b as u8;
        assign(w, remaining, assignment, at + 1, count);
        remaining[b] += 1;
    }
}

/// Conjugacy class list of `S_n` from full enumeration: classes in
/// descending lexicographic order with their sizes.
fn sym_classes(n: u32) -> (Vec<CycleType>, Vec<u64>) {
    let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
    for w in Perm::enumerate(n as usize) {
        *counts.entry(w.cycle_type()).or_insert(0) += 1;
    }
    let mut classes: Vec<CycleType> = counts.keys().cloned().collect();
    classes.reverse();
    let sizes = classes.iter().map(|c| counts[c]).collect();
    (classes, sizes)
}

/// Character table of `S_n` obtained by orthogonalising Young permutation
/// characters in descending lexicographic label order (which refines
/// dominance, so the leftover after subtraction is irreducible).
pub fn sym_character_table(n: u32) -> Result<CharTable<Partition, CycleType>> {
    if n > SYM_TABLE_MAX {
        return Err(Error::CapabilityExceeded {
            what: "symmetric group oracle table",
            limit: SYM_TABLE_MAX,
        });
    }
    let (classes, class_sizes) = sym_classes(n);
    let group_order: u64 = class_sizes.iter().sum();
    let mut labels = Partition::all(n);
    labels.reverse();
    let mut table = CharTable {
        labels: Vec::new(),
        classes,
        class_sizes,
        group_order,
        values: Vec::new(),
    };
    let identity = table
        .classes
        .iter()
        .position(|c| c.parts().iter().all(|&k| k == 1))
        .expect("identity class present");
    for label in labels {
        let mut row: Vec<i64> = table
            .classes
            .iter()
            .map(|c| young_permutation_character(label.parts(), c).map(|v| v as i64))
            .collect::<Result<_>>()?;
        for prev in &table.values {
            let raw = table.raw_inner(&row, prev);
            assert_eq!(
                raw.rem_euclid(group_order as i64),
                0,
                "non-integral multiplicity"
            );
            let mult = raw / group_order as i64;
            for (r, p) in row.iter_mut().zip(prev) {
                *r -= mult * p;
            }
        }
        assert_eq!(
            table.raw_inner(&row, &row),
            group_order as i64,
            "residue of {label} is not irreducible"
        );
        assert!(row[identity] > 0);
        table.labels.push(label);
        table.values.push(row);
    }
    Ok(table)
}

/// Signed-permutation classes of rank `n` with sizes and representatives.
fn hyp_classes(n: u32) -> (Vec<SignedCycleType>, Vec<u64>, Vec<SignedPerm>) {
    let mut counts: BTreeMap<SignedCycleType, (u64, SignedPerm)> = BTreeMap::new();
    for w in SignedPerm::enumerate(n as usize) {
        let t = w.signed_cycle_type();
        counts.entry(t).and_modify(|e| e.0 += 1).or_insert((1, w));
    }
    let order: Vec<SignedCycleType> = SignedCycleType::all(n);
    debug_assert_eq!(order.len(), counts.len());
    let mut sizes = Vec::with_capacity(order.len());
    let mut reps = Vec::with_capacity(order.len());
    for c in &order {
        let (size, rep) = counts.get(c).expect("every signed type occurs").clone();
        sizes.push(size);
        reps.push(rep);
    }
    (order, sizes, reps)
}

/// Value on `rep` of the character induced from the block subgroup attached
/// to `(alpha, beta)`: trivial on the alpha blocks, parity of sign changes on
/// the beta blocks. Direct summation over the whole group.
fn induced_block_character(
    group: &[SignedPerm],
    alpha: &Partition,
    beta: &Partition,
    rep: &SignedPerm,
) -> i64 {
    let n = rep.degree();
    // Block boundaries: alpha blocks first, then beta blocks.
    let mut bounds = Vec::new();
    let mut lo = 0usize;
    for &c in alpha.parts().iter().chain(beta.parts()) {
        bounds.push((lo, lo + c as usize));
        lo += c as usize;
    }
    debug_assert_eq!(lo, n);
    let beta_start = alpha.size() as usize;
    let mut subgroup_order = 1u64;
    for &(a, b) in &bounds {
        let size = (b - a) as u64;
        subgroup_order *= 1u64 << size;
        subgroup_order *= (1..=size).product::<u64>().max(1);
    }
    let mut total = 0i64;
    'outer: for x in group {
        let h = x.compose(rep).compose(&x.inverse());
        for &(a, b) in &bounds {
            for i in a..b {
                let img = h.image_of(i);
                if img < a || img >= b {
                    continue 'outer;
                }
            }
        }
        let mut flips = 0u32;
        for i in beta_start..n {
            if h.flip_of(i) {
                flips += 1;
            }
        }
        total += if flips % 2 == 0 { 1 } else { -1 };
    }
    assert_eq!(total.rem_euclid(subgroup_order as i64), 0);
    total / subgroup_order as i64
}

/// Character table of the hyperoctahedral group of rank `n` built from
/// induced block characters and orthogonalisation; labels match the
/// conventions of [`crate::weyl::hyperoct_character`].
pub fn hyperoct_character_table(n: u32) -> Result<CharTable<BiPartition, SignedCycleType>> {
    if n > HYP_TABLE_MAX {
        return Err(Error::CapabilityExceeded {
            what: "hyperoctahedral oracle table",
            limit: HYP_TABLE_MAX,
        });
    }
    let group = SignedPerm::enumerate(n as usize);
    let (classes, class_sizes, reps) = hyp_classes(n);
    let group_order = group.len() as u64;
    let labels = BiPartition::all(n);
    let mut table = CharTable {
        labels: Vec::new(),
        classes,
        class_sizes,
        group_order,
        values: Vec::new(),
    };
    let identity = table
        .classes
        .iter()
        .position(|c| c.negative().is_empty() && c.positive().parts().iter().all(|&k| k == 1))
        .expect("identity class present");
    for label in labels {
        let mut row: Vec<i64> = reps
            .iter()
            .map(|rep| induced_block_character(&group, label.alpha(), label.beta(), rep))
            .collect();
        for prev in &table.values {
            let raw = table.raw_inner(&row, prev);
            assert_eq!(raw.rem_euclid(group_order as i64), 0);
            let mult = raw / group_order as i64;
            for (r, p) in row.iter_mut().zip(prev) {
                *r -= mult * p;
            }
        }
        assert_eq!(
            table.raw_inner(&row, &row),
            group_order as i64,
            "residue of {label} is not irreducible"
        );
        assert!(row[identity] > 0);
        table.labels.push(label);
        table.values.push(row);
    }
    Ok(table)
}

/// Whether some element of cycle type `mu` commutes with some element of
/// cycle type `nu` in `S_n`. Exhaustive: fixes a canonical element of type
/// `mu` and scans the whole group.
pub fn commuting_types_exist(mu: &CycleType, nu: &CycleType) -> Result<bool> {
    if mu.size() != nu.size() {
        return Err(Error::SizeMismatch {
            expected: mu.size(),
            found: nu.size(),
        });
    }
    let n = mu.size();
    if n > COMMUTING_MAX {
        return Err(Error::CapabilityExceeded {
            what: "commuting-type search",
            limit: COMMUTING_MAX,
        });
    }
    let w = Perm::with_cycle_type(mu);
    for x in Perm::enumerate(n as usize) {
        if x.commutes_with(&w) && &x.cycle_type() == nu {
            return Ok(true);
        }
    }
    Ok(false)
}
