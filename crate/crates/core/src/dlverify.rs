//! Hypothesis checks for the multiplicity argument in the unitary series.
//!
//! The eigenvalue-root computation for a cuspidal unitary character leans on
//! finding a virtual character whose pairing with the character is odd and
//! whose defining class splits into an automorphism orbit of full length.
//! This module makes both conditions checkable: exact multiplicities from
//! the symmetric-group recursion, and the orbit condition reduced to a
//! commuting-element search against the longest element's cycle type.

use crate::oracle::commuting_types_exist;
use crate::partition::Partition;
use crate::weyl::{sym_character, CycleType};
use crate::{Error, Result};

const DL_MULT_MAX: u32 = 30;

/// Orbit length of the automorphism on the relevant classes.
const DELTA: u8 = 2;

/// Pairing of the label's character with the class function attached to a
/// class: the character value, computed exactly.
pub fn dl_multiplicity_type_a(label: &Partition, class: &CycleType) -> Result<i64> {
    if label.size() > DL_MULT_MAX {
        return Err(Error::CapabilityExceeded {
            what: "multiplicity computation",
            limit: DL_MULT_MAX,
        });
    }
    sym_character(label, class)
}

/// Cycle type of the longest element: `floor(n/2)` transpositions plus a
/// fixed point when `n` is odd.
pub fn longest_element_type(n: u32) -> Partition {
    let mut parts = alloc::vec![2u32; (n / 2) as usize];
    if n % 2 == 1 {
        parts.push(1);
    }
    Partition::new(parts).expect("weakly decreasing by construction")
}

/// Whether the class of type `mu` contains an element fixed by the
/// automorphism, i.e. commuting with an involution of longest-element type.
pub fn sigma_fixed_in_class(mu: &CycleType) -> Result<bool> {
    commuting_types_exist(mu, &longest_element_type(mu.size()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrobHypothesisReport {
    /// The class contains an automorphism-fixed element.
    pub sigma_fixed: bool,
    /// 1 when fixed, otherwise the full automorphism order.
    pub orbit_length: u8,
    pub multiplicity: i64,
    /// Both conditions hold: full orbit and odd multiplicity.
    pub satisfied: bool,
}

/// Checks the two hypotheses for the pair `(label, class)`.
pub fn verify_frob_hypotheses(
    label: &Partition,
    class: &CycleType,
) -> Result<FrobHypothesisReport> {
    if label.size() != class.size() {
        return Err(Error::SizeMismatch {
            expected: label.size(),
            found: class.size(),
        });
    }
    let sigma_fixed = sigma_fixed_in_class(class)?;
    let orbit_length = if sigma_fixed { 1 } else { DELTA };
    let multiplicity = dl_multiplicity_type_a(label, class)?;
    let satisfied = orbit_length == DELTA && multiplicity.rem_euclid(DELTA as i64) != 0;
    Ok(FrobHypothesisReport {
        sigma_fixed,
        orbit_length,
        multiplicity,
        satisfied,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn longest_element_types() {
        assert_eq!(longest_element_type(3), p(&[2, 1]));
        assert_eq!(longest_element_type(6), p(&[2, 2, 2]));
        assert_eq!(longest_element_type(1), p(&[1]));
    }

    #[test]
    fn three_cycle_has_full_orbit() {
        let r = verify_frob_hypotheses(&p(&[2, 1]), &p(&[3])).unwrap();
        assert!(!r.sigma_fixed);
        assert_eq!(r.orbit_length, 2);
        assert_eq!(r.multiplicity, -1);
        assert!(r.satisfied);
    }

    #[test]
    fn identity_class_is_fixed() {
        let r = verify_frob_hypotheses(&p(&[3]), &p(&[1, 1, 1])).unwrap();
        assert!(r.sigma_fixed);
        assert_eq!(r.orbit_length, 1);
        assert_eq!(r.multiplicity, 1);
        assert!(!r.satisfied);
    }

    #[test]
    fn staircase_six_example() {
        let r = verify_frob_hypotheses(&p(&[3, 2, 1]), &p(&[5, 1])).unwrap();
        assert!(!r.sigma_fixed);
        assert_eq!(r.multiplicity, 1);
        assert!(r.satisfied);
    }

    #[test]
    fn caps_are_enforced() {
        let big = Partition::new(alloc::vec![31]).unwrap();
        assert!(matches!(
            dl_multiplicity_type_a(&big, &big),
            Err(Error::CapabilityExceeded { .. })
        ));
        // The orbit check needs the exhaustive search, capped lower.
        let nine = Partition::new(alloc::vec![9]).unwrap();
        assert!(matches!(
            verify_frob_hypotheses(&nine, &nine),
            Err(Error::CapabilityExceeded { .. })
        ));
    }

    #[test]
    fn size_mismatch_rejected() {
        assert!(matches!(
            verify_frob_hypotheses(&p(&[2, 1]), &p(&[4])),
            Err(Error::SizeMismatch { .. })
        ));
    }
}
