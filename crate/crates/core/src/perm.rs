//! Concrete permutations and signed permutations on `{1..n}`.
//!
//! Deliberately plain: dense image vectors, full enumeration, breadth-first
//! subgroup closure. Everything here is sized for the brute-force bounds of
//! the oracles (symmetric groups up to degree 8, signed groups up to rank 4),
//! where clarity beats cleverness.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::partition::Partition;
use crate::weyl::SignedCycleType;

/// A permutation stored as images: `perm[i]` is the image of point `i`
/// (0-indexed internally).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n as u8).collect(),
        }
    }

    pub fn from_images(images: Vec<u8>) -> Perm {
        debug_assert!({
            let mut seen = images.clone();
            seen.sort_unstable();
            seen.iter().enumerate().all(|(i, &x)| x as usize == i)
        });
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// `self * other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            images: other
                .images
                .iter()
                .map(|&i| self.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = alloc::vec![0u8; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u8;
        }
        Perm { images }
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// Cycle lengths as a partition of the degree.
    pub fn cycle_type(&self) -> Partition {
        let n = self.images.len();
        let mut seen = alloc::vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_unsorted(lengths)
    }

    /// A canonical element with the given cycle type: consecutive cycles.
    pub fn with_cycle_type(t: &Partition) -> Perm {
        let n = t.size() as usize;
        let mut images = alloc::vec![0u8; n];
        let mut base = 0usize;
        for &len in t.parts() {
            let len = len as usize;
            for k in 0..len {
                images[base + k] = (base + (k + 1) % len) as u8;
            }
            base += len;
        }
        Perm { images }
    }

    /// All `n!` permutations of degree `n`, in a deterministic order.
    pub fn enumerate(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut images: Vec<u8> = (0..n as u8).collect();
        permute(&mut images, 0, &mut out);
        out
    }
}

fn permute(images: &mut Vec<u8>, at: usize, out: &mut Vec<Perm>) {
    if at == images.len() {
        out.push(Perm {
            images: images.clone(),
        });
        return;
    }
    for i in at..images.len() {
        images.swap(at, i);
        permute(images, at + 1, out);
        images.swap(at, i);
    }
}

/// A signed permutation: `i` maps to `sign[i] * perm[i]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignedPerm {
    perm: Perm,
    /// `true` entries flip the sign of the image.
    flips: Vec<bool>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> SignedPerm {
        SignedPerm {
            perm: Perm::identity(n),
            flips: alloc::vec![false; n],
        }
    }

    pub fn new(perm: Perm, flips: Vec<bool>) -> SignedPerm {
        debug_assert_eq!(perm.degree(), flips.len());
        SignedPerm { perm, flips }
    }

    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    /// Underlying unsigned image of coordinate `i`.
    pub fn image_of(&self, i: usize) -> usize {
        self.perm.image(i)
    }

    /// Whether the image of coordinate `i` carries a sign flip.
    pub fn flip_of(&self, i: usize) -> bool {
        self.flips[i]
    }

    /// `self * other`: apply `other` first. Signs multiply along the way.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let n = self.degree();
        let mut images = Vec::with_capacity(n);
        let mut flips = Vec::with_capacity(n);
        for i in 0..n {
            let mid = other.perm.image(i);
            images.push(self.perm.images[mid]);
            flips.push(other.flips[i] ^ self.flips[mid]);
        }
        SignedPerm {
            perm: Perm { images },
            flips,
        }
    }

    pub fn inverse(&self) -> SignedPerm {
        let n = self.degree();
        let inv = self.perm.inverse();
        let mut flips = alloc::vec![false; n];
        for i in 0..n {
            flips[self.perm.image(i)] = self.flips[i];
        }
        SignedPerm { perm: inv, flips }
    }

    /// Cycle lengths split by cycle sign: the sign of a cycle is the product
    /// of the flips along it.
    pub fn signed_cycle_type(&self) -> SignedCycleType {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut flip = false;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                flip ^= self.flips[i];
                i = self.perm.image(i);
                len += 1;
            }
            if flip {
                neg.push(len);
            } else {
                pos.push(len);
            }
        }
        SignedCycleType::new(Partition::from_unsorted(pos), Partition::from_unsorted(neg))
    }

    /// All `2^n n!` signed permutations of rank `n`.
    pub fn enumerate(n: usize) -> Vec<SignedPerm> {
        let perms = Perm::enumerate(n);
        let mut out = Vec::with_capacity(perms.len() << n);
        for perm in &perms {
            for mask in 0u32..(1 << n) {
                let flips = (0..n).map(|i| mask & (1 << i) != 0).collect();
                out.push(SignedPerm {
                    perm: perm.clone(),
                    flips,
                });
            }
        }
        out
    }

    /// Simple reflections of the rank-`n` hyperoctahedral group: index 0 is
    /// the sign flip of the first coordinate, index `i >= 1` swaps `i-1, i`.
    pub fn simple_reflection(n: usize, index: usize) -> SignedPerm {
        let mut g = SignedPerm::identity(n);
        if index == 0 {
            g.flips[0] = true;
        } else {
            g.perm.images.swap(index - 1, index);
        }
        g
    }
}

/// Breadth-first closure of a generating set inside a finite group given by
/// its composition law.
pub fn subgroup_closure<T: Ord + Clone>(
    identity: T,
    gens: &[T],
    mul: impl Fn(&T, &T) -> T,
) -> Vec<T> {
    let mut known: BTreeSet<T> = BTreeSet::new();
    known.insert(identity.clone());
    let mut frontier = alloc::vec![identity];
    while let Some(g) = frontier.pop() {
        for h in gens {
            let next = mul(&g, h);
            if known.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    known.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_counts() {
        assert_eq!(Perm::enumerate(4).len(), 24);
        assert_eq!(SignedPerm::enumerate(3).len(), 48);
    }

    #[test]
    fn cycle_type_round_trip() {
        for t in Partition::all(6) {
            let w = Perm::with_cycle_type(&t);
            assert_eq!(w.cycle_type(), t);
        }
    }

    #[test]
    fn compose_and_inverse() {
        for w in Perm::enumerate(4) {
            assert_eq!(w.compose(&w.inverse()), Perm::identity(4));
        }
        for w in SignedPerm::enumerate(2) {
            assert_eq!(w.compose(&w.inverse()), SignedPerm::identity(2));
        }
    }

    #[test]
    fn signed_cycle_signs() {
        // The sign flip of coordinate 0 is a negative 1-cycle.
        let t = SignedPerm::simple_reflection(2, 0);
        let ct = t.signed_cycle_type();
        assert_eq!(ct.negative().parts(), &[1]);
        assert_eq!(ct.positive().parts(), &[1]);
    }

    #[test]
    fn closure_generates_whole_group() {
        let gens: Vec<SignedPerm> = (0..3)
            .map(|i| SignedPerm::simple_reflection(3, i))
            .collect();
        let all = subgroup_closure(SignedPerm::identity(3), &gens, |a, b| a.compose(b));
        assert_eq!(all.len(), 48);
    }
}
