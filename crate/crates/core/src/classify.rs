//! Classification of extension fields.
//!
//! Given a record for a character stable under the graph automorphism, the
//! classifier determines the character field of its extensions to the
//! extended group, symbolically in `q` and, on request, resolved at a
//! concrete prime power.
//!
//! Dispatch, by series and Harish-Chandra placement:
//!
//! - linear series: rational or `Q(sqrt(q))` according to a parity invariant
//!   of the label partition,
//! - unitary series: cuspidals (staircase labels) through the eigenvalue
//!   square root, the rest through the residue mod 4 of the 2-core size,
//! - orthogonal series: cuspidals through the eigenvalue root, pair labels
//!   are always rational,
//! - fixed tables: the pinned field, falling back to the eigenvalue root
//!   for cuspidal records loaded without one.
//!
//! Every answer carries an opaque rule tag naming the result it came from;
//! the tags are part of the output format and never change spelling.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::field::{delta_root_field, FieldDesc};
use crate::groups::{builtin_records, find_record, HcTag, Label, Series, UnipotentCharRecord};
use crate::partition::Partition;
use crate::{Error, Result};

/// Rule tags, emitted verbatim in output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    Thm1,
    Thm31,
    Thm32,
    Thm33,
    Prop42,
    BrunatB2,
    BrunatG2,
    D4Gamma,
}

impl core::fmt::Display for Rule {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Rule::Thm1 => "Thm1",
            Rule::Thm31 => "Thm3.1",
            Rule::Thm32 => "Thm3.2",
            Rule::Thm33 => "Thm3.3",
            Rule::Prop42 => "Prop4.2",
            Rule::BrunatB2 => "BrunatB2",
            Rule::BrunatG2 => "BrunatG2",
            Rule::D4Gamma => "D4Gamma",
        })
    }
}

/// Isomorphism type of the relative Weyl group of a Harish-Chandra series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelativeWeylType {
    A(u32),
    B(u32),
    G2,
    F4,
    E6,
    /// Rank-4 orthogonal Weyl group carrying extra graph symmetry.
    D4,
    Trivial,
}

/// Where a character sits in the Harish-Chandra partition of the series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HcPlacement {
    pub support: HcTag,
    pub relative: RelativeWeylType,
}

/// Outcome of a classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    /// Field of the minimal extension, symbolic in `q`.
    pub formal: FieldDesc,
    /// The same field at the requested prime power, if one was given.
    pub resolved: Option<FieldDesc>,
    pub rule: Rule,
    /// Formal fields of all extensions, minimal first.
    pub extension_fields: Vec<FieldDesc>,
}

impl ClassificationResult {
    /// The field to report: resolved when available, formal otherwise.
    pub fn reported(&self) -> &FieldDesc {
        self.resolved.as_ref().unwrap_or(&self.formal)
    }
}

/// Whether the record describes a cuspidal character.
pub fn is_cuspidal(record: &UnipotentCharRecord) -> bool {
    match record.series {
        Series::A => false,
        Series::TwistedA => matches!(&record.label, Label::Part(p) if p.is_staircase()),
        Series::D | Series::TwistedD => record.label == Label::Cuspidal,
        _ => record.hc == Some(HcTag::Cuspidal),
    }
}

fn require_omega(record: &UnipotentCharRecord) -> Result<crate::field::FrobeniusEigenvalue> {
    record.omega.ok_or(Error::MissingRecordData {
        label: record.label.to_string(),
        field: "omega",
    })
}

fn series_rule(series: Series, cuspidal: bool) -> Result<Rule> {
    Ok(match series {
        Series::A => Rule::Thm31,
        Series::TwistedA | Series::D | Series::TwistedD => {
            if cuspidal {
                Rule::Thm1
            } else {
                Rule::Thm33
            }
        }
        Series::E6 => {
            if cuspidal {
                Rule::Thm1
            } else {
                Rule::Thm32
            }
        }
        Series::TwistedE6 => {
            if cuspidal {
                Rule::Thm1
            } else {
                Rule::Thm33
            }
        }
        Series::TrialityD4 => {
            if cuspidal {
                Rule::Thm1
            } else {
                return Err(Error::OutOfScope(alloc::format!(
                    "no classification rule for non-cuspidal characters of series {}",
                    series.tag()
                )));
            }
        }
        Series::B2Exceptional => Rule::BrunatB2,
        Series::G2Exceptional => Rule::BrunatG2,
        Series::F4Exceptional => Rule::Prop42,
        Series::D4Full => Rule::D4Gamma,
    })
}

/// Formal fields of all extensions given the minimal one. Order-2 and
/// order-6 automorphism groups have two extensions over the same field; the
/// order-3 group has a rational one and a conjugate pair over `Q(zeta3)`.
fn galois_pattern(series: Series, formal: &FieldDesc) -> Result<Vec<FieldDesc>> {
    match series.extension_count() {
        2 => Ok(alloc::vec![formal.clone(), formal.clone()]),
        3 => {
            if *formal == FieldDesc::Rational {
                Ok(alloc::vec![
                    FieldDesc::Rational,
                    FieldDesc::Eisenstein,
                    FieldDesc::Eisenstein,
                ])
            } else {
                Err(Error::OutOfScope(alloc::format!(
                    "order-3 extension pattern over non-rational field {formal}"
                )))
            }
        }
        other => Err(Error::CapabilityExceeded {
            what: "extension count",
            limit: other as u32,
        }),
    }
}

/// Residue class test for the unitary non-cuspidal branch: the field is
/// imaginary exactly when the 2-core size is 2 or 3 mod 4.
fn unitary_core_field(core: &Partition) -> FieldDesc {
    if matches!(core.size() % 4, 2 | 3) {
        FieldDesc::quadratic(true, 1, true)
    } else {
        FieldDesc::Rational
    }
}

/// Classifies the extensions of the character described by `record`.
///
/// With `q = None` the answer stays symbolic; with a concrete `q` it is
/// additionally resolved (after validating `q` against the series).
pub fn extension_field(
    record: &UnipotentCharRecord,
    q: Option<u64>,
) -> Result<ClassificationResult> {
    record.validate()?;
    match record.sigma_invariant {
        Some(true) => {}
        Some(false) => return Err(Error::NotSigmaInvariant(record.label.to_string())),
        None => {
            return Err(Error::MissingRecordData {
                label: record.label.to_string(),
                field: "sigma_inv",
            })
        }
    }
    let cuspidal = is_cuspidal(record);
    let rule = series_rule(record.series, cuspidal)?;
    let formal = match (record.series, &record.label) {
        (Series::A, Label::Part(p)) => {
            if p.parity_exponent() == 1 {
                FieldDesc::quadratic(false, 1, true)
            } else {
                FieldDesc::Rational
            }
        }
        (Series::TwistedA, Label::Part(p)) => {
            if cuspidal {
                delta_root_field(&require_omega(record)?, 2)?
            } else {
                unitary_core_field(&p.two_core())
            }
        }
        (Series::D | Series::TwistedD, Label::Cuspidal) => {
            delta_root_field(&require_omega(record)?, record.series.delta())?
        }
        (Series::D | Series::TwistedD, Label::Pair(_)) => FieldDesc::Rational,
        _ => match &record.ext {
            Some(ext) => ext.clone(),
            // Records loaded without a pinned field: cuspidals go through
            // the eigenvalue root, rational principal-series characters
            // extend rationally.
            None if cuspidal => delta_root_field(&require_omega(record)?, record.series.delta())?,
            None if record.rho_field == Some(FieldDesc::Rational) => FieldDesc::Rational,
            None => {
                return Err(Error::OutOfScope(alloc::format!(
                    "no rule covers non-cuspidal character {} with irrational field",
                    record.label
                )))
            }
        },
    };
    let extension_fields = galois_pattern(record.series, &formal)?;
    let resolved = match q {
        Some(q) => {
            record.series.validate_q(q)?;
            Some(formal.resolve(q)?)
        }
        None => None,
    };
    Ok(ClassificationResult {
        formal,
        resolved,
        rule,
        extension_fields,
    })
}

/// Consistency of the stored Frobenius-Schur indicator with the classified
/// field: the preferred extension is real-valued exactly when the indicator
/// is +1. Scope: cuspidal characters with real character field under the
/// standard graph automorphism.
pub fn fs_consistency(record: &UnipotentCharRecord) -> Result<bool> {
    if matches!(
        record.series,
        Series::B2Exceptional | Series::G2Exceptional | Series::F4Exceptional
    ) {
        return Err(Error::OutOfScope(alloc::format!(
            "indicator comparison is not defined for the exceptional automorphism of series {}",
            record.series.tag()
        )));
    }
    if !is_cuspidal(record) {
        return Err(Error::OutOfScope(alloc::format!(
            "indicator comparison applies to cuspidal characters only, not {}",
            record.label
        )));
    }
    let rho = record.rho_field.as_ref().ok_or(Error::MissingRecordData {
        label: record.label.to_string(),
        field: "rho_field",
    })?;
    if !rho.is_real() {
        return Err(Error::OutOfScope(alloc::format!(
            "indicator comparison needs a real character field, {} has {rho}",
            record.label
        )));
    }
    let fs = record.fs.ok_or(Error::MissingRecordData {
        label: record.label.to_string(),
        field: "fs",
    })?;
    let result = extension_field(record, None)?;
    Ok(result.formal.is_real() == (fs == crate::groups::FsIndicator::Plus))
}

/// Harish-Chandra placement, including the relative Weyl group type.
pub fn hc_series(record: &UnipotentCharRecord) -> Result<HcPlacement> {
    record.validate()?;
    let support = record.hc.clone().ok_or(Error::MissingRecordData {
        label: record.label.to_string(),
        field: "hc",
    })?;
    let relative = match (&support, record.series) {
        (HcTag::Cuspidal, _) => RelativeWeylType::Trivial,
        (HcTag::Principal, Series::A) => RelativeWeylType::A(record.n - 1),
        (HcTag::Principal, Series::B2Exceptional) => RelativeWeylType::B(2),
        (HcTag::Principal, Series::G2Exceptional | Series::TrialityD4) => RelativeWeylType::G2,
        (HcTag::Principal, Series::F4Exceptional | Series::TwistedE6) => RelativeWeylType::F4,
        (HcTag::Principal, Series::E6) => RelativeWeylType::E6,
        (HcTag::Principal, Series::D4Full) => RelativeWeylType::D4,
        (HcTag::Core(core), Series::TwistedA) => {
            let m = core.size();
            if m > record.n || (record.n - m) % 2 != 0 {
                return Err(Error::InvalidLabel(support.to_string()));
            }
            if m == record.n {
                RelativeWeylType::Trivial
            } else {
                RelativeWeylType::B((record.n - m) / 2)
            }
        }
        (HcTag::Named(name), Series::F4Exceptional) if name == "B2-series" => {
            RelativeWeylType::B(2)
        }
        (HcTag::Named(name), Series::E6) if name == "D4-series" => RelativeWeylType::A(2),
        (HcTag::Named(name), Series::TwistedE6) if name == "2A5-series" => RelativeWeylType::A(1),
        _ => {
            return Err(Error::InsufficientData(alloc::format!(
                "unrecognised Harish-Chandra tag {support} in series {}",
                record.series.tag()
            )))
        }
    };
    Ok(HcPlacement { support, relative })
}

/// Lookup plus classification over the built-in tables extended by loaded
/// records. Loaded records win on exact label collision.
#[derive(Debug, Default)]
pub struct Classifier {
    extra: Vec<UnipotentCharRecord>,
}

impl Classifier {
    pub fn new() -> Classifier {
        Classifier { extra: Vec::new() }
    }

    pub fn with_records(extra: Vec<UnipotentCharRecord>) -> Classifier {
        Classifier { extra }
    }

    pub fn find(&self, series: Series, n: u32, label: &Label) -> Result<UnipotentCharRecord> {
        series.validate_rank(n)?;
        if let Some(r) = self
            .extra
            .iter()
            .find(|r| r.series == series && r.n == n && &r.label == label)
        {
            return Ok(r.clone());
        }
        match find_record(series, n, label) {
            Ok(r) => Ok(r),
            Err(e) => {
                if let Label::Name(name) = label {
                    if let Some(r) = self.extra.iter().find(|r| {
                        r.series == series
                            && r.n == n
                            && r.hc.as_ref().is_some_and(|h| &h.to_string() == name)
                    }) {
                        return Ok(r.clone());
                    }
                }
                Err(e)
            }
        }
    }

    /// All records of the series at rank `n`: the built-in table with loaded
    /// records substituted on label collision and appended otherwise.
    pub fn enumerate(&self, series: Series, n: u32) -> Result<Vec<UnipotentCharRecord>> {
        series.validate_rank(n)?;
        let mut extras: Vec<UnipotentCharRecord> = self
            .extra
            .iter()
            .filter(|r| r.series == series && r.n == n)
            .cloned()
            .collect();
        extras.sort_by_key(|r| r.label.to_string());
        match builtin_records(series, n) {
            Ok(mut records) => {
                for e in extras {
                    if let Some(slot) = records.iter_mut().find(|r| r.label == e.label) {
                        *slot = e;
                    } else {
                        records.push(e);
                    }
                }
                Ok(records)
            }
            Err(err) if err.is_insufficient_data() && !extras.is_empty() => Ok(extras),
            Err(err) => Err(err),
        }
    }

    pub fn sigma_invariant(&self, series: Series, n: u32, label: &Label) -> Result<bool> {
        let record = self.find(series, n, label)?;
        record.sigma_invariant.ok_or(Error::MissingRecordData {
            label: record.label.to_string(),
            field: "sigma_inv",
        })
    }

    pub fn classify(
        &self,
        series: Series,
        n: u32,
        label: &Label,
        q: Option<u64>,
    ) -> Result<(UnipotentCharRecord, ClassificationResult)> {
        let record = self.find(series, n, label)?;
        let result = extension_field(&record, q)?;
        Ok((record, result))
    }
}
