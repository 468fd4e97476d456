//! Exact arithmetic for Frobenius eigenvalues and the small fields their
//! roots generate.
//!
//! Everything here is symbolic: an eigenvalue is a root of unity times an
//! integer power of `q`, a field is one of finitely many descriptors. There
//! is no floating point and no approximation anywhere in the crate.
//!
//! - [`Unit`]: the root-of-unity part, one of `1, -1, i, -i, zeta3, zeta3^2`.
//! - [`FrobeniusEigenvalue`]: `unit * q^e` with a non-negative exponent.
//! - [`FieldDesc`]: `Q`, `Q(i)`, `Q(zeta3)`, or a real-or-imaginary quadratic
//!   extension whose radicand may carry a formal factor of `q`.
//! - [`delta_root_field`]: the field generated by a `delta`-th root of an
//!   eigenvalue, when that root lands in the list above.

use core::fmt;
use core::str::FromStr;

use alloc::string::String;

use crate::{Error, Result};

/// Root of unity occurring as the unit part of a Frobenius eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Unit {
    One,
    MinusOne,
    I,
    MinusI,
    Zeta3,
    Zeta3Sq,
}

impl Unit {
    pub fn name(self) -> &'static str {
        match self {
            Unit::One => "1",
            Unit::MinusOne => "-1",
            Unit::I => "i",
            Unit::MinusI => "-i",
            Unit::Zeta3 => "zeta3",
            Unit::Zeta3Sq => "zeta3^2",
        }
    }

    /// Smallest field containing the unit.
    pub fn field(self) -> FieldDesc {
        match self {
            Unit::One | Unit::MinusOne => FieldDesc::Rational,
            Unit::I | Unit::MinusI => FieldDesc::Gaussian,
            Unit::Zeta3 | Unit::Zeta3Sq => FieldDesc::Eisenstein,
        }
    }

    pub fn is_real(self) -> bool {
        matches!(self, Unit::One | Unit::MinusOne)
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Unit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Unit> {
        Ok(match s {
            "1" => Unit::One,
            "-1" => Unit::MinusOne,
            "i" => Unit::I,
            "-i" => Unit::MinusI,
            "zeta3" => Unit::Zeta3,
            "zeta3^2" => Unit::Zeta3Sq,
            _ => return Err(Error::InvalidLabel(String::from(s))),
        })
    }
}

/// A Frobenius eigenvalue `unit * q^e`, kept symbolic in `q`.
///
/// Eigenvalues enter the field computations only through their residue
/// modulo integer powers of `q^delta`, so `q_exp` stores whatever exponent
/// the construction produced and comparisons reduce it as needed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrobeniusEigenvalue {
    pub unit: Unit,
    pub q_exp: u32,
}

impl FrobeniusEigenvalue {
    pub fn new(unit: Unit, q_exp: u32) -> FrobeniusEigenvalue {
        FrobeniusEigenvalue { unit, q_exp }
    }

    /// The eigenvalue `(-q)^e`.
    pub fn neg_q_pow(e: u32) -> FrobeniusEigenvalue {
        let unit = if e % 2 == 0 {
            Unit::One
        } else {
            Unit::MinusOne
        };
        FrobeniusEigenvalue { unit, q_exp: e }
    }

    /// Plain root of unity, no `q` part.
    pub fn of_unit(unit: Unit) -> FrobeniusEigenvalue {
        FrobeniusEigenvalue { unit, q_exp: 0 }
    }

    /// Equality up to integer powers of `q^delta`, the precision to which
    /// eigenvalues are defined.
    pub fn eq_mod_q_delta(&self, other: &FrobeniusEigenvalue, delta: u8) -> bool {
        self.unit == other.unit && self.q_exp % delta as u32 == other.q_exp % delta as u32
    }
}

impl fmt::Display for FrobeniusEigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*q^{}", self.unit, self.q_exp)
    }
}

impl FromStr for FrobeniusEigenvalue {
    type Err = Error;

    fn from_str(s: &str) -> Result<FrobeniusEigenvalue> {
        // Split on the rightmost "*q^" so unit spellings containing '^'
        // (zeta3^2) survive.
        let at = s
            .rfind("*q^")
            .ok_or_else(|| Error::InvalidLabel(String::from(s)))?;
        let unit: Unit = s[..at].parse()?;
        let q_exp: u32 = s[at + 3..]
            .parse()
            .map_err(|_| Error::InvalidLabel(String::from(s)))?;
        Ok(FrobeniusEigenvalue { unit, q_exp })
    }
}

/// One of the fields a classified extension can generate.
///
/// `Quadratic` radicands are canonical: squarefree, and never reducible to
/// one of the named variants. Construct through [`FieldDesc::quadratic`] to
/// keep that invariant; `PartialEq` is then field equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldDesc {
    /// `Q`.
    Rational,
    /// `Q(i)`.
    Gaussian,
    /// `Q(zeta3)`, equal to `Q(sqrt(-3))`.
    Eisenstein,
    /// `Q(sqrt(d))` with `d = (-1 if negative)(radicand)(q if with_q)`.
    Quadratic {
        negative: bool,
        radicand: u64,
        with_q: bool,
    },
}

impl FieldDesc {
    /// Canonicalising constructor: strips square factors from the radicand
    /// and collapses to a named variant when possible.
    pub fn quadratic(negative: bool, radicand: u64, with_q: bool) -> FieldDesc {
        assert!(radicand > 0, "quadratic radicand must be positive");
        let r = squarefree_kernel(radicand);
        if with_q {
            return FieldDesc::Quadratic {
                negative,
                radicand: r,
                with_q: true,
            };
        }
        match (negative, r) {
            (false, 1) => FieldDesc::Rational,
            (true, 1) => FieldDesc::Gaussian,
            (true, 3) => FieldDesc::Eisenstein,
            _ => FieldDesc::Quadratic {
                negative,
                radicand: r,
                with_q: false,
            },
        }
    }

    /// Whether the descriptor still mentions the formal symbol `q`.
    pub fn is_formal(&self) -> bool {
        matches!(self, FieldDesc::Quadratic { with_q: true, .. })
    }

    /// Whether the field embeds in the reals. Formal radicands with `q`
    /// count `q` as positive.
    pub fn is_real(&self) -> bool {
        match self {
            FieldDesc::Rational => true,
            FieldDesc::Gaussian | FieldDesc::Eisenstein => false,
            FieldDesc::Quadratic { negative, .. } => !negative,
        }
    }

    /// Substitutes a concrete prime power for `q` and recanonicalises.
    pub fn resolve(&self, q: u64) -> Result<FieldDesc> {
        let (p, a) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Ok(match *self {
            FieldDesc::Quadratic {
                negative,
                radicand,
                with_q: true,
            } => {
                // radicand is squarefree, so it carries p at most once.
                let mut r = radicand;
                let mut e = a;
                if r % p == 0 {
                    r /= p;
                    e += 1;
                }
                if e % 2 == 1 {
                    FieldDesc::quadratic(negative, r * p, false)
                } else {
                    FieldDesc::quadratic(negative, r, false)
                }
            }
            ref done => done.clone(),
        })
    }

    /// Field equality. Formal and resolved descriptors are incomparable;
    /// resolve first.
    pub fn field_equal(&self, other: &FieldDesc) -> Result<bool> {
        if self.is_formal() != other.is_formal() {
            return Err(Error::MixedFieldComparison);
        }
        Ok(self == other)
    }
}

impl FromStr for FieldDesc {
    type Err = Error;

    fn from_str(s: &str) -> Result<FieldDesc> {
        match s {
            "Q" => return Ok(FieldDesc::Rational),
            "Q(i)" => return Ok(FieldDesc::Gaussian),
            "Q(zeta3)" => return Ok(FieldDesc::Eisenstein),
            _ => {}
        }
        let inner = s
            .strip_prefix("Q(sqrt(")
            .and_then(|t| t.strip_suffix("))"))
            .ok_or_else(|| Error::InvalidLabel(String::from(s)))?;
        let (negative, body) = match inner.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, inner),
        };
        let (digits, with_q) = match body.strip_suffix("*q") {
            Some(head) => (head, true),
            None if body == "q" => ("1", true),
            None => (body, false),
        };
        let radicand: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidLabel(String::from(s)))?;
        if radicand == 0 {
            return Err(Error::InvalidLabel(String::from(s)));
        }
        Ok(FieldDesc::quadratic(negative, radicand, with_q))
    }
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FieldDesc::Rational => f.write_str("Q"),
            FieldDesc::Gaussian => f.write_str("Q(i)"),
            FieldDesc::Eisenstein => f.write_str("Q(zeta3)"),
            FieldDesc::Quadratic {
                negative,
                radicand,
                with_q,
            } => {
                f.write_str("Q(sqrt(")?;
                if negative {
                    f.write_str("-")?;
                }
                match (radicand, with_q) {
                    (1, true) => f.write_str("q")?,
                    (r, true) => write!(f, "{r}*q")?,
                    (r, false) => write!(f, "{r}")?,
                }
                f.write_str("))")
            }
        }
    }
}

/// Field generated by a `delta`-th root of the eigenvalue, for the orders
/// `delta = 1, 2, 3` that occur.
///
/// The eigenvalue is only determined up to integer powers of `q^delta`;
/// shifting the exponent by `delta` multiplies the chosen root by `q`, which
/// lies in every field below, so the result is independent of the
/// representative. Only the exponent's residue mod `delta` enters.
pub fn delta_root_field(omega: &FrobeniusEigenvalue, delta: u8) -> Result<FieldDesc> {
    match delta {
        1 => Ok(omega.unit.field()),
        2 => {
            let odd = omega.q_exp % 2 == 1;
            match (omega.unit, odd) {
                (Unit::One, false) => Ok(FieldDesc::Rational),
                (Unit::One, true) => Ok(FieldDesc::quadratic(false, 1, true)),
                (Unit::MinusOne, false) => Ok(FieldDesc::Gaussian),
                (Unit::MinusOne, true) => Ok(FieldDesc::quadratic(true, 1, true)),
                // sqrt(zeta3) = -zeta3^2 stays inside Q(zeta3).
                (Unit::Zeta3 | Unit::Zeta3Sq, false) => Ok(FieldDesc::Eisenstein),
                (Unit::Zeta3 | Unit::Zeta3Sq, true) => Err(Error::UnsupportedUnit {
                    unit: "zeta3 with odd q-exponent",
                    delta,
                }),
                (Unit::I | Unit::MinusI, _) => Err(Error::UnsupportedUnit {
                    unit: omega.unit.name(),
                    delta,
                }),
            }
        }
        3 => {
            if omega.q_exp % 3 != 0 {
                return Err(Error::NonIntegralRoot {
                    q_exp: omega.q_exp,
                    delta,
                });
            }
            match omega.unit {
                // Cube roots of 1 and -1 are 1 and -1.
                Unit::One | Unit::MinusOne => Ok(FieldDesc::Rational),
                u => Err(Error::UnsupportedUnit {
                    unit: u.name(),
                    delta,
                }),
            }
        }
        _ => Err(Error::CapabilityExceeded {
            what: "root order",
            limit: 3,
        }),
    }
}

/// Writes `q` as `p^a` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = smallest_prime_factor(q);
    let mut rest = q;
    let mut a = 0u32;
    while rest % p == 0 {
        rest /= p;
        a += 1;
    }
    (rest == 1).then_some((p, a))
}

fn smallest_prime_factor(x: u64) -> u64 {
    if x % 2 == 0 {
        return 2;
    }
    let mut d = 3u64;
    while d * d <= x {
        if x % d == 0 {
            return d;
        }
        d += 2;
    }
    x
}

/// Product of the primes dividing `x` to an odd power.
fn squarefree_kernel(mut x: u64) -> u64 {
    debug_assert!(x > 0);
    let mut kernel = 1u64;
    let mut d = 2u64;
    while d * d <= x {
        if x % d == 0 {
            let mut e = 0u32;
            while x % d == 0 {
                x /= d;
                e += 1;
            }
            if e % 2 == 1 {
                kernel *= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    // Whatever is left is 1 or a single prime.
    kernel * x
}
