//! Series descriptors, character labels, and the built-in character data.
//!
//! A *series* names a family of finite reductive groups together with the
//! graph automorphism whose extensions we classify. Each series fixes:
//!
//! - `delta`: the precision (in powers of `q`) to which Frobenius
//!   eigenvalues are defined,
//! - the order of the automorphism group acting on the characters,
//! - constraints on the rank `n` and on admissible `q`,
//! - a labelling scheme for unipotent characters.
//!
//! Character data comes in [`UnipotentCharRecord`] values. For the linear
//! and unitary series the records are generated from partition combinatorics
//! for any rank; for the exceptional series they are fixed finite tables;
//! for the orthogonal series individual records are synthesised per query.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::field::{prime_power, FieldDesc, FrobeniusEigenvalue, Unit};
use crate::partition::Partition;
use crate::weyl::BiPartition;
use crate::{Error, Result};

/// A family of groups-with-automorphism, identified by its tag in queries
/// and record files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Series {
    /// Linear groups, order-2 graph automorphism. Tag `A`.
    A,
    /// Unitary groups. Tag `2A`.
    TwistedA,
    /// Split even orthogonal groups. Tag `D`.
    D,
    /// Non-split even orthogonal groups. Tag `2D`.
    TwistedD,
    /// Triality orthogonal groups, order-3 automorphism. Tag `3D4`.
    TrialityD4,
    /// Rank-4 orthogonal groups with the full graph-automorphism group.
    /// Tag `D4S3`.
    D4Full,
    /// Split E6. Tag `E6`.
    E6,
    /// Twisted E6. Tag `2E6`.
    TwistedE6,
    /// B2 at `q = 2^(2f+1)` with the exceptional graph automorphism.
    /// Tag `B2x`.
    B2Exceptional,
    /// G2 at `q = 3^(2f+1)` with the exceptional graph automorphism.
    /// Tag `G2x`.
    G2Exceptional,
    /// F4 at `q = 2^(2f+1)` with the exceptional graph automorphism.
    /// Tag `F4x`.
    F4Exceptional,
}

pub const ALL_SERIES: [Series; 11] = [
    Series::A,
    Series::TwistedA,
    Series::D,
    Series::TwistedD,
    Series::TrialityD4,
    Series::D4Full,
    Series::E6,
    Series::TwistedE6,
    Series::B2Exceptional,
    Series::G2Exceptional,
    Series::F4Exceptional,
];

impl Series {
    pub fn tag(self) -> &'static str {
        match self {
            Series::A => "A",
            Series::TwistedA => "2A",
            Series::D => "D",
            Series::TwistedD => "2D",
            Series::TrialityD4 => "3D4",
            Series::D4Full => "D4S3",
            Series::E6 => "E6",
            Series::TwistedE6 => "2E6",
            Series::B2Exceptional => "B2x",
            Series::G2Exceptional => "G2x",
            Series::F4Exceptional => "F4x",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Series> {
        ALL_SERIES
            .iter()
            .copied()
            .find(|s| s.tag() == tag)
            .ok_or_else(|| Error::UnknownSeries(String::from(tag)))
    }

    /// Precision of Frobenius eigenvalues: they are well defined modulo
    /// integer powers of `q^delta`.
    pub fn delta(self) -> u8 {
        match self {
            Series::TwistedA | Series::TwistedD | Series::TwistedE6 => 2,
            Series::TrialityD4 => 3,
            _ => 1,
        }
    }

    /// Order of the automorphism group whose extensions are classified.
    pub fn automorphism_order(self) -> u8 {
        match self {
            Series::TrialityD4 => 3,
            Series::D4Full => 6,
            _ => 2,
        }
    }

    /// Number of extensions a stable character has, equal to the number of
    /// linear characters of the automorphism group.
    pub fn extension_count(self) -> u8 {
        match self {
            Series::TrialityD4 => 3,
            _ => 2,
        }
    }

    /// Rank fixed by the series, when there is one.
    pub fn fixed_rank(self) -> Option<u32> {
        match self {
            Series::B2Exceptional | Series::G2Exceptional => Some(2),
            Series::TrialityD4 | Series::D4Full | Series::F4Exceptional => Some(4),
            Series::E6 | Series::TwistedE6 => Some(6),
            _ => None,
        }
    }

    fn rank_requirement(self) -> &'static str {
        match self {
            Series::A => ">= 2",
            Series::TwistedA => ">= 3",
            Series::D | Series::TwistedD => ">= 4",
            Series::B2Exceptional | Series::G2Exceptional => "= 2",
            Series::TrialityD4 | Series::D4Full | Series::F4Exceptional => "= 4",
            Series::E6 | Series::TwistedE6 => "= 6",
        }
    }

    pub fn validate_rank(self, n: u32) -> Result<()> {
        let ok = match self {
            Series::A => n >= 2,
            Series::TwistedA => n >= 3,
            Series::D | Series::TwistedD => n >= 4,
            _ => Some(n) == self.fixed_rank(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::RankConstraint {
                series: self.tag(),
                n,
                expected: self.rank_requirement(),
            })
        }
    }

    /// Checks `q` is a prime power satisfying the defining constraint of the
    /// series and returns its factorisation.
    pub fn validate_q(self, q: u64) -> Result<(u64, u32)> {
        let (p, a) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let expected = match self {
            Series::B2Exceptional | Series::F4Exceptional => "2^(2f+1)",
            Series::G2Exceptional => "3^(2f+1)",
            _ => return Ok((p, a)),
        };
        let base = if self == Series::G2Exceptional { 3 } else { 2 };
        if p != base || a % 2 == 0 {
            return Err(Error::QConstraint {
                series: self.tag(),
                expected,
                q,
            });
        }
        Ok((p, a))
    }

    /// Whether the built-in table lists every unipotent character of the
    /// series (as opposed to only the named ones).
    pub fn table_complete(self) -> bool {
        matches!(
            self,
            Series::A
                | Series::TwistedA
                | Series::B2Exceptional
                | Series::G2Exceptional
                | Series::TrialityD4
        )
    }
}

impl core::fmt::Display for Series {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.tag())
    }
}

/// A validated group-with-automorphism query target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupDescriptor {
    pub series: Series,
    pub n: u32,
    /// Concrete prime power, or `None` for a formal (symbolic-`q`) query.
    pub q: Option<u64>,
}

/// Resolves a series tag, optional rank, and optional `q` into a validated
/// descriptor. Fixed-rank series may omit `n`.
pub fn parse_group(tag: &str, n: Option<u32>, q: Option<u64>) -> Result<GroupDescriptor> {
    let series = Series::from_tag(tag)?;
    let n = match (series.fixed_rank(), n) {
        (Some(r), None) => r,
        (_, Some(m)) => {
            series.validate_rank(m)?;
            m
        }
        (None, None) => {
            return Err(Error::RankConstraint {
                series: series.tag(),
                n: 0,
                expected: series.rank_requirement(),
            })
        }
    };
    if let Some(q) = q {
        series.validate_q(q)?;
    }
    Ok(GroupDescriptor { series, n, q })
}

/// Label of a unipotent character, in the scheme of its series.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Label {
    /// Partition label (series `A`, `2A`).
    Part(Partition),
    /// Unordered pair of partitions (series `D`, `2D`); kept with the
    /// lexicographically larger component first.
    Pair(BiPartition),
    /// The distinguished cuspidal character of an orthogonal series.
    Cuspidal,
    /// Free-form name from a fixed table.
    Name(String),
}

impl core::fmt::Display for Label {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Label::Part(p) => write!(f, "{p}"),
            Label::Pair(b) => write!(f, "{b}"),
            Label::Cuspidal => f.write_str("cuspidal"),
            Label::Name(s) => f.write_str(s),
        }
    }
}

/// Parses a label string in the scheme of `series`.
pub fn parse_label(series: Series, s: &str) -> Result<Label> {
    if s.is_empty() || !s.is_ascii() || s.contains(char::is_whitespace) {
        return Err(Error::InvalidLabel(String::from(s)));
    }
    match series {
        Series::A | Series::TwistedA => Ok(Label::Part(s.parse()?)),
        Series::D | Series::TwistedD => {
            if s == "cuspidal" {
                Ok(Label::Cuspidal)
            } else {
                let pair: BiPartition = s.parse()?;
                Ok(Label::Pair(order_pair(pair)))
            }
        }
        _ => Ok(Label::Name(String::from(s))),
    }
}

/// Canonical form of an unordered pair: larger component first.
fn order_pair(pair: BiPartition) -> BiPartition {
    if pair.beta() > pair.alpha() {
        BiPartition::new(pair.beta().clone(), pair.alpha().clone())
    } else {
        pair
    }
}

/// Harish-Chandra placement of a character, as recorded in tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HcTag {
    Principal,
    Cuspidal,
    /// Series over the cuspidal of a smaller unitary group: its 2-core.
    Core(Partition),
    /// Named series over a tabulated cuspidal.
    Named(String),
}

impl core::fmt::Display for HcTag {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            HcTag::Principal => f.write_str("principal"),
            HcTag::Cuspidal => f.write_str("cuspidal"),
            HcTag::Core(p) => write!(f, "{p}"),
            HcTag::Named(s) => f.write_str(s),
        }
    }
}

impl core::str::FromStr for HcTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<HcTag> {
        Ok(match s {
            "principal" => HcTag::Principal,
            "cuspidal" => HcTag::Cuspidal,
            _ if s.starts_with('[') => HcTag::Core(s.parse()?),
            "" => return Err(Error::InvalidLabel(String::from(s))),
            _ => HcTag::Named(String::from(s)),
        })
    }
}

/// Frobenius-Schur indicator of an extension-relevant character.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FsIndicator {
    Plus,
    Zero,
    Minus,
}

impl FsIndicator {
    pub fn value(self) -> i8 {
        match self {
            FsIndicator::Plus => 1,
            FsIndicator::Zero => 0,
            FsIndicator::Minus => -1,
        }
    }
}

impl core::fmt::Display for FsIndicator {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            FsIndicator::Plus => "+1",
            FsIndicator::Zero => "0",
            FsIndicator::Minus => "-1",
        })
    }
}

impl core::str::FromStr for FsIndicator {
    type Err = Error;

    fn from_str(s: &str) -> Result<FsIndicator> {
        Ok(match s {
            "+1" => FsIndicator::Plus,
            "0" => FsIndicator::Zero,
            "-1" => FsIndicator::Minus,
            _ => return Err(Error::InvalidLabel(String::from(s))),
        })
    }
}

/// Everything the classifier may need to know about one unipotent
/// character. `None` fields mean the data is not known to the table, not
/// that it does not exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnipotentCharRecord {
    pub series: Series,
    pub n: u32,
    pub label: Label,
    /// Frobenius eigenvalue, defined modulo `q^delta`.
    pub omega: Option<FrobeniusEigenvalue>,
    /// Whether the character is fixed by the graph automorphism.
    pub sigma_invariant: Option<bool>,
    /// Character field of the character itself (not of an extension).
    pub rho_field: Option<FieldDesc>,
    pub hc: Option<HcTag>,
    /// Frobenius-Schur indicator of the preferred extension.
    pub fs: Option<FsIndicator>,
    /// Extension field pinned directly by the table, bypassing the general
    /// rules. Never serialised into record lines.
    pub ext: Option<FieldDesc>,
}

impl UnipotentCharRecord {
    fn new(series: Series, n: u32, label: Label) -> UnipotentCharRecord {
        UnipotentCharRecord {
            series,
            n,
            label,
            omega: None,
            sigma_invariant: Some(true),
            rho_field: Some(FieldDesc::Rational),
            hc: Some(HcTag::Principal),
            fs: None,
            ext: None,
        }
    }

    fn named(series: Series, n: u32, label: &str) -> UnipotentCharRecord {
        UnipotentCharRecord::new(series, n, Label::Name(String::from(label)))
    }

    fn omega(mut self, unit: Unit, q_exp: u32) -> Self {
        self.omega = Some(FrobeniusEigenvalue::new(unit, q_exp));
        self
    }

    fn rho(mut self, field: FieldDesc) -> Self {
        self.rho_field = Some(field);
        self
    }

    fn hc(mut self, hc: HcTag) -> Self {
        self.hc = Some(hc);
        self
    }

    fn fs(mut self, fs: FsIndicator) -> Self {
        self.fs = Some(fs);
        self
    }

    fn ext(mut self, field: FieldDesc) -> Self {
        self.ext = Some(field);
        self
    }

    /// Marks the character as moved by the automorphism.
    fn swapped(mut self) -> Self {
        self.sigma_invariant = Some(false);
        self
    }

    fn sigma_unknown(mut self) -> Self {
        self.sigma_invariant = None;
        self
    }

    /// Structural checks a record must pass regardless of origin.
    pub fn validate(&self) -> Result<()> {
        self.series.validate_rank(self.n)?;
        let label_fits = match (&self.label, self.series) {
            (Label::Part(p), Series::A | Series::TwistedA) => p.size() == self.n,
            (Label::Pair(b), Series::D | Series::TwistedD) => b.size() == self.n,
            (Label::Cuspidal, Series::D | Series::TwistedD) => true,
            (Label::Name(_), s) => !matches!(
                s,
                Series::A | Series::TwistedA | Series::D | Series::TwistedD
            ),
            _ => false,
        };
        if !label_fits {
            return Err(Error::InvalidLabel(self.label.to_string()));
        }
        Ok(())
    }
}

fn binom2(m: u32) -> u32 {
    m * m.saturating_sub(1) / 2
}

/// Record for one linear-series label: stable under the automorphism, in
/// the principal series with eigenvalue 1.
fn a_record(n: u32, p: Partition) -> UnipotentCharRecord {
    UnipotentCharRecord::new(Series::A, n, Label::Part(p)).omega(Unit::One, 0)
}

fn a_records(n: u32) -> Vec<UnipotentCharRecord> {
    Partition::all(n)
        .into_iter()
        .map(|p| a_record(n, p))
        .collect()
}

/// Record for one unitary-series label. The eigenvalue is `(-q)` to the
/// power `m(m-1)/2` where `m` is the size of the 2-core; the character sits
/// over the cuspidal indexed by that core. Staircase labels are the
/// cuspidals and carry an explicit Frobenius-Schur indicator.
fn twisted_a_record(n: u32, p: Partition) -> UnipotentCharRecord {
    let core = p.two_core();
    let m = core.size();
    let mut r =
        UnipotentCharRecord::new(Series::TwistedA, n, Label::Part(p.clone())).hc(HcTag::Core(core));
    r.omega = Some(FrobeniusEigenvalue::neg_q_pow(binom2(m)));
    if p.is_staircase() {
        r = r.fs(if (n / 2) % 2 == 0 {
            FsIndicator::Plus
        } else {
            FsIndicator::Minus
        });
    }
    r
}

fn twisted_a_records(n: u32) -> Vec<UnipotentCharRecord> {
    Partition::all(n)
        .into_iter()
        .map(|p| twisted_a_record(n, p))
        .collect()
}

fn b2x_records() -> Vec<UnipotentCharRecord> {
    let s = Series::B2Exceptional;
    alloc::vec![
        UnipotentCharRecord::named(s, 2, "phi(1,0)")
            .omega(Unit::One, 0)
            .ext(FieldDesc::Rational),
        UnipotentCharRecord::named(s, 2, "phi(2,1)")
            .omega(Unit::One, 0)
            .ext(FieldDesc::Rational),
        UnipotentCharRecord::named(s, 2, "phi(1,4)")
            .omega(Unit::One, 0)
            .ext(FieldDesc::Rational),
        UnipotentCharRecord::named(s, 2, "phi(1,2)'")
            .omega(Unit::One, 0)
            .swapped(),
        UnipotentCharRecord::named(s, 2, "phi(1,2)''")
            .omega(Unit::One, 0)
            .swapped(),
        UnipotentCharRecord::named(s, 2, "B2")
            .omega(Unit::MinusOne, 0)
            .hc(HcTag::Cuspidal)
            .fs(FsIndicator::Plus)
            .ext(FieldDesc::Rational),
    ]
}

fn g2x_records() -> Vec<UnipotentCharRecord> {
    let s = Series::G2Exceptional;
    alloc::vec![
        UnipotentCharRecord::named(s, 2, "phi(1,0)")
            .omega(Unit::One, 0)
            .ext(FieldDesc::Rational),
        UnipotentCharRecord::named(s, 2, "phi(1,6)")
            .omega(Unit::One, 0)
            .ext(FieldDesc::Rational),
        UnipotentCharRecord::named(s, 2, "phi(2,1)")
            .omega(Unit::One, 0)
            .ext(FieldDesc::Rational),
        // The extension field is independent of which q = 3^(2f+1) is taken.
        UnipotentCharRecord::named(s, 2, "phi(2,2)")
            .omega(Unit::One, 0)
            .ext(FieldDesc::quadratic(false, 3, false)),
        UnipotentCharRecord::named(s, 2, "phi(1,3)'")
            .omega(Unit::One, 0)
            .swapped(),
        UnipotentCharRecord::named(s, 2, "phi(1,3)''")
            .omega(Unit::One, 0)
            .swapped(),
        UnipotentCharRecord::named(s, 2, "G2[1]")
            .omega(Unit::One, 0)
            .hc(HcTag::Cuspidal)
            .fs(FsIndicator::Plus)
            .ext(FieldDesc::Eisenstein),
        UnipotentCharRecord::named(s, 2, "G2[-1]")
            .omega(Unit::MinusOne, 0)
            .hc(HcTag::Cuspidal)
            .fs(FsIndicator::Plus)
            .ext(FieldDesc::Rational),
        UnipotentCharRecord::named(s, 2, "G2[theta]")
            .omega(Unit::Zeta3, 0)
            .hc(HcTag::Cuspidal)
            .rho(FieldDesc::Eisenstein)
            .fs(FsIndicator::Zero)
            .ext(FieldDesc::Eisenstein),
        UnipotentCharRecord::named(s, 2, "G2[theta^2]")
            .omega(Unit::Zeta3Sq, 0)
            .hc(HcTag::Cuspidal)
            .rho(FieldDesc::Eisenstein)
            .fs(FsIndicator::Zero)
            .ext(FieldDesc::Eisenstein),
    ]
}

fn f4x_records() -> Vec<UnipotentCharRecord> {
    let s = Series::F4Exceptional;
    let principal = [
        "phi(1,0)",
        "phi(4,1)",
        "phi(9,2)",
        "phi(12,4)",
        "phi(6,6)'",
        "phi(6,6)''",
        "phi(4,8)",
        "phi(9,10)",
        "phi(4,13)",
        "phi(1,24)",
        "phi(16,5)",
    ];
    let mut out: Vec<UnipotentCharRecord> = principal
        .iter()
        .map(|l| {
            let ext = if *l == "phi(16,5)" {
                FieldDesc::quadratic(false, 2, false)
            } else {
                FieldDesc::Rational
            };
            UnipotentCharRecord::named(s, 4, l)
                .omega(Unit::One, 0)
                .ext(ext)
        })
        .collect();
    for l in ["B2,1", "B2,r", "B2,eps"] {
        out.push(
            UnipotentCharRecord::named(s, 4, l)
                .omega(Unit::MinusOne, 0)
                .hc(HcTag::Named(String::from("B2-series")))
                .ext(FieldDesc::Rational),
        );
    }
    for (l, unit, rho, fs, ext) in [
        (
            "F4^I[1]",
            Unit::One,
            FieldDesc::Rational,
            FsIndicator::Plus,
            FieldDesc::Rational,
        ),
        (
            "F4^II[1]",
            Unit::One,
            FieldDesc::Rational,
            FsIndicator::Plus,
            FieldDesc::Rational,
        ),
        (
            "F4[-1]",
            Unit::MinusOne,
            FieldDesc::Rational,
            FsIndicator::Plus,
            FieldDesc::quadratic(true, 2, false),
        ),
        (
            "F4[i]",
            Unit::I,
            FieldDesc::Gaussian,
            FsIndicator::Zero,
            FieldDesc::Gaussian,
        ),
        (
            "F4[-i]",
            Unit::MinusI,
            FieldDesc::Gaussian,
            FsIndicator::Zero,
            FieldDesc::Gaussian,
        ),
        (
            "F4[theta]",
            Unit::Zeta3,
            FieldDesc::Eisenstein,
            FsIndicator::Zero,
            FieldDesc::Eisenstein,
        ),
        (
            "F4[theta^2]",
            Unit::Zeta3Sq,
            FieldDesc::Eisenstein,
            FsIndicator::Zero,
            FieldDesc::Eisenstein,
        ),
    ] {
        out.push(
            UnipotentCharRecord::named(s, 4, l)
                .omega(unit, 0)
                .hc(HcTag::Cuspidal)
                .rho(rho)
                .fs(fs)
                .ext(ext),
        );
    }
    out
}

fn e6_records() -> Vec<UnipotentCharRecord> {
    let s = Series::E6;
    let mut out = alloc::vec![
        UnipotentCharRecord::named(s, 6, "E6[theta]")
            .omega(Unit::Zeta3, 0)
            .hc(HcTag::Cuspidal)
            .rho(FieldDesc::Eisenstein)
            .fs(FsIndicator::Zero)
            .ext(FieldDesc::Eisenstein),
        UnipotentCharRecord::named(s, 6, "E6[theta^2]")
            .omega(Unit::Zeta3Sq, 0)
            .hc(HcTag::Cuspidal)
            .rho(FieldDesc::Eisenstein)
            .fs(FsIndicator::Zero)
            .ext(FieldDesc::Eisenstein),
        UnipotentCharRecord::named(s, 6, "phi(64,4)")
            .omega(Unit::One, 0)
            .ext(FieldDesc::quadratic(false, 1, true)),
        UnipotentCharRecord::named(s, 6, "phi(64,13)")
            .omega(Unit::One, 0)
            .ext(FieldDesc::quadratic(false, 1, true)),
    ];
    for l in ["D4,1", "D4,r", "D4,eps"] {
        out.push(
            UnipotentCharRecord::named(s, 6, l)
                .omega(Unit::One, 0)
                .hc(HcTag::Named(String::from("D4-series")))
                .ext(FieldDesc::Rational),
        );
    }
    out
}

fn twisted_e6_records() -> Vec<UnipotentCharRecord> {
    let s = Series::TwistedE6;
    alloc::vec![
        UnipotentCharRecord::named(s, 6, "2E6[1]")
            .omega(Unit::One, 0)
            .hc(HcTag::Cuspidal)
            .fs(FsIndicator::Plus)
            .ext(FieldDesc::Rational),
        UnipotentCharRecord::named(s, 6, "2E6[theta]")
            .omega(Unit::Zeta3, 0)
            .hc(HcTag::Cuspidal)
            .rho(FieldDesc::Eisenstein)
            .fs(FsIndicator::Zero)
            .ext(FieldDesc::Eisenstein),
        UnipotentCharRecord::named(s, 6, "2E6[theta^2]")
            .omega(Unit::Zeta3Sq, 0)
            .hc(HcTag::Cuspidal)
            .rho(FieldDesc::Eisenstein)
            .fs(FsIndicator::Zero)
            .ext(FieldDesc::Eisenstein),
        UnipotentCharRecord::named(s, 6, "phi(64,4)")
            .omega(Unit::MinusOne, 15)
            .hc(HcTag::Named(String::from("2A5-series")))
            .ext(FieldDesc::quadratic(true, 1, true)),
        UnipotentCharRecord::named(s, 6, "phi(64,13)")
            .omega(Unit::MinusOne, 15)
            .hc(HcTag::Named(String::from("2A5-series")))
            .ext(FieldDesc::quadratic(true, 1, true)),
    ]
}

fn triality_d4_records() -> Vec<UnipotentCharRecord> {
    let s = Series::TrialityD4;
    let mut out: Vec<UnipotentCharRecord> = [
        "phi(1,0)",
        "phi(1,6)",
        "phi(1,3)'",
        "phi(1,3)''",
        "phi(2,1)",
        "phi(2,2)",
    ]
    .iter()
    .map(|l| {
        UnipotentCharRecord::named(s, 4, l)
            .omega(Unit::One, 0)
            .sigma_unknown()
    })
    .collect();
    out.push(
        UnipotentCharRecord::named(s, 4, "3D4[1]")
            .omega(Unit::One, 0)
            .hc(HcTag::Cuspidal)
            .fs(FsIndicator::Plus)
            .ext(FieldDesc::Rational),
    );
    out.push(
        UnipotentCharRecord::named(s, 4, "3D4[-1]")
            .omega(Unit::MinusOne, 0)
            .hc(HcTag::Cuspidal)
            .fs(FsIndicator::Plus)
            .ext(FieldDesc::Rational),
    );
    out
}

fn d4_full_records() -> Vec<UnipotentCharRecord> {
    let s = Series::D4Full;
    alloc::vec![
        UnipotentCharRecord::named(s, 4, "phi(1,0)")
            .omega(Unit::One, 0)
            .ext(FieldDesc::Rational),
        UnipotentCharRecord::named(s, 4, "phi(1,12)")
            .omega(Unit::One, 0)
            .ext(FieldDesc::Rational),
        UnipotentCharRecord::named(s, 4, "D4")
            .omega(Unit::One, 0)
            .hc(HcTag::Cuspidal)
            .fs(FsIndicator::Plus)
            .ext(FieldDesc::Rational),
    ]
}

/// The built-in records of a series at rank `n`, in enumeration order:
/// ascending lexicographic for partition labels, label-string order for
/// fixed tables.
pub fn builtin_records(series: Series, n: u32) -> Result<Vec<UnipotentCharRecord>> {
    series.validate_rank(n)?;
    let mut records = match series {
        Series::A => a_records(n),
        Series::TwistedA => twisted_a_records(n),
        Series::D | Series::TwistedD => {
            return Err(Error::InsufficientData(format!(
                "series {} has no built-in table; query individual labels",
                series.tag()
            )))
        }
        Series::B2Exceptional => b2x_records(),
        Series::G2Exceptional => g2x_records(),
        Series::F4Exceptional => f4x_records(),
        Series::E6 => e6_records(),
        Series::TwistedE6 => twisted_e6_records(),
        Series::TrialityD4 => triality_d4_records(),
        Series::D4Full => d4_full_records(),
    };
    if !matches!(series, Series::A | Series::TwistedA) {
        records.sort_by_key(|r| r.label.to_string());
    }
    Ok(records)
}

/// Whether the orthogonal series of rank `n` has a cuspidal unipotent
/// character: split case at `n = (2t)^2`, non-split at odd squares.
pub fn d_series_has_cuspidal(series: Series, n: u32) -> bool {
    let root = n.isqrt();
    if root * root != n {
        return false;
    }
    match series {
        Series::D => root % 2 == 0,
        Series::TwistedD => root % 2 == 1,
        _ => false,
    }
}

/// Synthesises the record for one orthogonal-series label.
fn d_series_record(series: Series, n: u32, label: &Label) -> Result<UnipotentCharRecord> {
    match label {
        Label::Cuspidal => {
            if !d_series_has_cuspidal(series, n) {
                return Err(Error::InvalidLabel(format!(
                    "series {} of rank {n} has no cuspidal unipotent character",
                    series.tag()
                )));
            }
            Ok(UnipotentCharRecord::new(series, n, Label::Cuspidal)
                .omega(Unit::One, 0)
                .hc(HcTag::Cuspidal))
        }
        Label::Pair(pair) => {
            if pair.size() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: pair.size(),
                });
            }
            if pair.alpha() == pair.beta() {
                return match series {
                    // A degenerate label names two characters, each moved by
                    // the automorphism.
                    Series::D => Err(Error::NotSigmaInvariant(label.to_string())),
                    _ => Err(Error::InvalidLabel(format!(
                        "degenerate pair {label} does not label a character of series {}",
                        series.tag()
                    ))),
                };
            }
            let mut r = UnipotentCharRecord::new(series, n, Label::Pair(order_pair(pair.clone())));
            r.hc = None;
            Ok(r)
        }
        other => Err(Error::InvalidLabel(other.to_string())),
    }
}

/// Looks up the record for a label, synthesising orthogonal-series records
/// and accepting a Harish-Chandra tag as an alias when it pins down the
/// classification.
pub fn find_record(series: Series, n: u32, label: &Label) -> Result<UnipotentCharRecord> {
    series.validate_rank(n)?;
    if matches!(series, Series::D | Series::TwistedD) {
        return d_series_record(series, n, label);
    }
    // Partition-labelled series admit point lookups; materialising the
    // table first would cost one record per partition of `n`.
    if matches!(series, Series::A | Series::TwistedA) {
        let Label::Part(p) = label else {
            return Err(Error::InvalidLabel(label.to_string()));
        };
        if p.size() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: p.size(),
            });
        }
        return Ok(match series {
            Series::A => a_record(n, p.clone()),
            _ => twisted_a_record(n, p.clone()),
        });
    }
    let records = builtin_records(series, n)?;
    if let Some(r) = records.iter().find(|r| &r.label == label) {
        return Ok(r.clone());
    }
    if let Label::Name(name) = label {
        if let Some(r) = records
            .iter()
            .find(|r| r.hc.as_ref().is_some_and(|h| &h.to_string() == name))
        {
            return Ok(r.clone());
        }
    }
    if series.table_complete() {
        Err(Error::InvalidLabel(format!(
            "{label} does not label a unipotent character of series {} at rank {n}",
            series.tag()
        )))
    } else {
        Err(Error::InsufficientData(format!(
            "no built-in record for label {label} in series {}",
            series.tag()
        )))
    }
}
