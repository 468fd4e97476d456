//! Self-check suites behind `uch verify`.
//!
//! Each suite recomputes a family of facts two independent ways and reports
//! the number of checks together with any mismatches. Suites:
//!
//! * `mn-oracle` - character recursions against the permutation-character
//!   tables, plus exact orthonormality of those tables
//! * `cores` - order independence of repeated domino removal and the cell
//!   count identity for core and quotient
//! * `parity` - the discriminant parity exponent against closed forms on
//!   rows, columns, hooks and staircases, plus the floor(n/2) vs C(n,2)
//!   congruence and conjugation symmetry
//! * `staircase` - staircase character values on their distinguished class
//!   are signs
//! * `fs` - Frobenius-Schur indicators in the tables match the reality of
//!   the extension field
//! * `frob-hypotheses` - pinned orbit/multiplicity examples and an existence
//!   scan for classes meeting both hypotheses
//! * `parabolic` - parabolic restriction multiplicities are nonnegative,
//!   account for the full index, and reach multiplicity one for every label
//!
//! `max_n` caps rank-like scan sizes and `max_t` staircase parameters; both
//! default per suite and are clamped to the capability bounds of the
//! underlying operations.

use std::collections::{BTreeMap, BTreeSet};

use uch_core::classify::{fs_consistency, Classifier};
use uch_core::dlverify::verify_frob_hypotheses;
use uch_core::groups::{parse_label, Series};
use uch_core::oracle::{hyperoct_character_table, sym_character_table};
use uch_core::partition::Partition;
use uch_core::perm::{subgroup_closure, Perm, SignedPerm};
use uch_core::weyl::{
    hyperoct_character, parabolic_multiplicity_type_a, parabolic_multiplicity_type_b,
    staircase_cycle_type, sym_character, BiPartition, SignedCycleType,
};

pub const SUITE_NAMES: [&str; 7] = [
    "mn-oracle",
    "cores",
    "parity",
    "staircase",
    "fs",
    "frob-hypotheses",
    "parabolic",
];

/// Result of one suite run.
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checks: u64,
    pub failures: Vec<String>,
    /// Informational lines, printed indented under the summary.
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.passed() {
            format!("suite {}: {} checks, ok", self.name, self.checks)
        } else {
            format!(
                "suite {}: {} checks, {} FAILED",
                self.name,
                self.checks,
                self.failures.len()
            )
        }
    }
}

struct Check {
    name: &'static str,
    checks: u64,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Check {
    fn new(name: &'static str) -> Check {
        Check {
            name,
            checks: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn is(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn note(&mut self, line: String) {
        self.notes.push(line);
    }

    fn done(self) -> SuiteOutcome {
        SuiteOutcome {
            name: self.name,
            checks: self.checks,
            failures: self.failures,
            notes: self.notes,
        }
    }
}

/// Runs the named suite; `None` when the name is unknown.
pub fn run_suite(name: &str, max_n: Option<u32>, max_t: Option<u32>) -> Option<SuiteOutcome> {
    match name {
        "mn-oracle" => Some(mn_oracle(max_n)),
        "cores" => Some(cores(max_n)),
        "parity" => Some(parity(max_n)),
        "staircase" => Some(staircase(max_t)),
        "fs" => Some(fs()),
        "frob-hypotheses" => Some(frob_hypotheses(max_n)),
        "parabolic" => Some(parabolic(max_n)),
        _ => None,
    }
}

pub fn run_all(max_n: Option<u32>, max_t: Option<u32>) -> Vec<SuiteOutcome> {
    SUITE_NAMES
        .iter()
        .map(|name| run_suite(name, max_n, max_t).expect("listed suite exists"))
        .collect()
}

fn mn_oracle(max_n: Option<u32>) -> SuiteOutcome {
    let mut c = Check::new("mn-oracle");
    let a_hi = max_n.unwrap_or(6).min(7);
    let b_hi = max_n.unwrap_or(4).min(4);
    for n in 1..=a_hi {
        let table = sym_character_table(n).expect("within table bound");
        for (i, label) in table.labels.iter().enumerate() {
            for (j, class) in table.classes.iter().enumerate() {
                let rec = sym_character(label, class).expect("sizes match");
                c.is(rec == table.values[i][j], || {
                    format!(
                        "S_{n} value at ({label}, {class}): {rec} vs table {}",
                        table.values[i][j]
                    )
                });
            }
        }
        // Exact row orthonormality over the integers.
        for i in 0..table.values.len() {
            for j in 0..table.values.len() {
                let inner = table.raw_inner(&table.values[i], &table.values[j]);
                let expect = if i == j { table.group_order as i64 } else { 0 };
                c.is(inner == expect, || {
                    format!("S_{n} rows {i},{j}: inner {inner} vs {expect}")
                });
            }
        }
    }
    for n in 1..=b_hi {
        let table = hyperoct_character_table(n).expect("within table bound");
        for (i, label) in table.labels.iter().enumerate() {
            for (j, class) in table.classes.iter().enumerate() {
                let rec = hyperoct_character(label, class).expect("sizes match");
                c.is(rec == table.values[i][j], || {
                    format!(
                        "B_{n} value at ({label}, {class}): {rec} vs table {}",
                        table.values[i][j]
                    )
                });
            }
        }
        for i in 0..table.values.len() {
            for j in 0..table.values.len() {
                let inner = table.raw_inner(&table.values[i], &table.values[j]);
                let expect = if i == j { table.group_order as i64 } else { 0 };
                c.is(inner == expect, || {
                    format!("B_{n} rows {i},{j}: inner {inner} vs {expect}")
                });
            }
        }
    }
    c.done()
}

/// All partitions reachable from `p` by removing dominoes until none remain.
fn domino_terminals(
    p: &Partition,
    memo: &mut BTreeMap<Partition, BTreeSet<Partition>>,
) -> BTreeSet<Partition> {
    if let Some(hit) = memo.get(p) {
        return hit.clone();
    }
    let removals = p.border_strip_removals(2);
    let set: BTreeSet<Partition> = if removals.is_empty() {
        core::iter::once(p.clone()).collect()
    } else {
        removals
            .iter()
            .flat_map(|r| domino_terminals(&r.remainder, memo))
            .collect()
    };
    memo.insert(p.clone(), set.clone());
    set
}

fn cores(max_n: Option<u32>) -> SuiteOutcome {
    let mut c = Check::new("cores");
    let scan_hi = max_n.unwrap_or(10);
    let identity_hi = max_n.unwrap_or(12);
    let mut memo = BTreeMap::new();
    for n in 0..=scan_hi {
        for p in Partition::all(n) {
            let terminals = domino_terminals(&p, &mut memo);
            c.is(terminals.len() == 1, || {
                format!("{p}: {} distinct domino terminals", terminals.len())
            });
            let core = p.two_core();
            c.is(terminals.contains(&core), || {
                format!("{p}: terminal set misses computed core {core}")
            });
        }
    }
    for n in 0..=identity_hi {
        for p in Partition::all(n) {
            let core = p.two_core();
            let (q0, q1) = p.two_quotient();
            c.is(
                p.size() == core.size() + 2 * (q0.size() + q1.size()),
                || {
                    format!(
                        "{p}: cells {} != core {} + 2*quotient {}",
                        p.size(),
                        core.size(),
                        q0.size() + q1.size()
                    )
                },
            );
            c.is(core.is_staircase(), || {
                format!("{p}: core {core} is not a staircase")
            });
        }
    }
    c.done()
}

fn c2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

fn parity(max_n: Option<u32>) -> SuiteOutcome {
    let mut c = Check::new("parity");
    let cap = max_n.unwrap_or(10_000);
    // floor(n/2) and C(n,2) always agree modulo 2; this parity decides both
    // the indicator of the preferred extension and the field it generates.
    for n in 0..=cap as u64 {
        c.is((n / 2) % 2 == c2(n) % 2, || {
            format!("n={n}: floor(n/2) and C(n,2) disagree mod 2")
        });
    }
    let pinned: [(&[u32], u8); 5] = [
        (&[2, 1], 1),
        (&[3], 0),
        (&[1, 1, 1], 0),
        (&[2], 0),
        (&[1, 1], 0),
    ];
    for (parts, expect) in pinned {
        let p = Partition::new(parts.to_vec()).unwrap();
        let got = p.parity_exponent();
        c.is(got == expect, || format!("{p}: parity {got} vs {expect}"));
    }
    for n in 0..=8.min(cap) {
        for p in Partition::all(n) {
            let q = p.conjugate();
            c.is(p.parity_exponent() == q.parity_exponent(), || {
                format!("{p}: parity differs from conjugate")
            });
        }
    }
    // Closed forms on large families. Rows and columns always have even
    // exponent; hooks reduce to binomials; staircases to C(n,2).
    let big: Vec<u32> = [1u32, 2, 3, 10, 317, 5000, 9999, 10_000]
        .into_iter()
        .filter(|&m| m <= cap)
        .collect();
    for &m in &big {
        let row = Partition::new(vec![m]).unwrap();
        c.is(row.parity_exponent() == 0, || {
            format!("row [{m}]: parity not 0")
        });
        let col = Partition::new(vec![1; m as usize]).unwrap();
        c.is(col.parity_exponent() == 0, || {
            format!("column 1^{m}: parity not 0")
        });
    }
    for &a in &big {
        for &b in &big {
            if a + b > cap {
                continue;
            }
            let mut parts = vec![1u32; (b + 1) as usize];
            parts[0] = a;
            let hook = Partition::new(parts).unwrap();
            let expect = ((c2(a as u64) + c2(b as u64 + 1) + c2((a + b) as u64)) % 2) as u8;
            c.is(hook.parity_exponent() == expect, || {
                format!("hook ({a},1^{b}): parity vs closed form")
            });
        }
    }
    let mut t = 0;
    while Partition::staircase(t).size() <= cap {
        let st = Partition::staircase(t);
        let expect = (c2(st.size() as u64) % 2) as u8;
        c.is(st.parity_exponent() == expect, || {
            format!("staircase t={t}: parity vs C(n,2)")
        });
        t += 1;
    }
    c.done()
}

fn staircase(max_t: Option<u32>) -> SuiteOutcome {
    let mut c = Check::new("staircase");
    for t in 2..=max_t.unwrap_or(6) {
        let label = Partition::staircase(t);
        let class = staircase_cycle_type(t);
        let v = sym_character(&label, &class).expect("sizes match");
        c.is(v.abs() == 1, || {
            format!("t={t}: character value {v} is not a sign")
        });
        c.note(format!("t={t}: value {v} on class {class}"));
    }
    c.done()
}

fn fs() -> SuiteOutcome {
    let mut c = Check::new("fs");
    let classifier = Classifier::new();
    for t in 2..=5 {
        let label = parse_label(Series::TwistedA, &Partition::staircase(t).to_string()).unwrap();
        let n = t * (t + 1) / 2;
        let record = classifier.find(Series::TwistedA, n, &label).unwrap();
        match fs_consistency(&record) {
            Ok(true) => c.is(true, String::new),
            Ok(false) => c.is(false, || {
                format!("2A staircase n={n}: indicator contradicts field")
            }),
            Err(e) => c.is(false, || format!("2A staircase n={n}: {e}")),
        }
    }
    let tabulated = [
        ("2E6", 6, "2E6[1]"),
        ("3D4", 4, "3D4[1]"),
        ("3D4", 4, "3D4[-1]"),
        ("D4S3", 4, "D4"),
    ];
    for (tag, n, name) in tabulated {
        let series = Series::from_tag(tag).unwrap();
        let label = parse_label(series, name).unwrap();
        let record = classifier.find(series, n, &label).unwrap();
        match fs_consistency(&record) {
            Ok(true) => c.is(true, String::new),
            Ok(false) => c.is(false, || {
                format!("{tag} {name}: indicator contradicts field")
            }),
            Err(e) => c.is(false, || format!("{tag} {name}: {e}")),
        }
    }
    c.done()
}

fn frob_hypotheses(max_n: Option<u32>) -> SuiteOutcome {
    let mut c = Check::new("frob-hypotheses");
    let cases: [(&[u32], &[u32], bool, i64); 3] = [
        (&[2, 1], &[3], true, -1),
        (&[3], &[1, 1, 1], false, 0),
        (&[3, 2, 1], &[5, 1], true, 1),
    ];
    for (label, class, satisfied, mult) in cases {
        let label = Partition::new(label.to_vec()).unwrap();
        let class = Partition::new(class.to_vec()).unwrap();
        let report = verify_frob_hypotheses(&label, &class).unwrap();
        c.is(report.satisfied == satisfied, || {
            format!(
                "({label}, {class}): satisfied {} vs {satisfied}",
                report.satisfied
            )
        });
        if satisfied {
            c.is(report.multiplicity == mult, || {
                format!(
                    "({label}, {class}): multiplicity {} vs {mult}",
                    report.multiplicity
                )
            });
        }
    }
    let cap = max_n.unwrap_or(6).min(8);
    for t in 2.. {
        let n = t * (t + 1) / 2;
        if n > cap {
            break;
        }
        let label = Partition::staircase(t);
        let hit = Partition::all(n).iter().any(|class| {
            verify_frob_hypotheses(&label, class)
                .map(|r| r.satisfied)
                .unwrap_or(false)
        });
        c.is(hit, || {
            format!("staircase n={n}: no class meets both hypotheses")
        });
    }
    c.done()
}

fn swap_perm(n: usize, i: usize) -> Perm {
    let mut images: Vec<u8> = (0..n as u8).collect();
    images.swap(i - 1, i);
    Perm::from_images(images)
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn parabolic(max_n: Option<u32>) -> SuiteOutcome {
    let mut c = Check::new("parabolic");
    let a_hi = max_n.unwrap_or(4).min(7);
    let b_hi = max_n.unwrap_or(4).min(4);
    for n in 2..=a_hi {
        let labels = Partition::all(n);
        let trivial_class = Partition::new(vec![1; n as usize]).unwrap();
        let dims: Vec<i64> = labels
            .iter()
            .map(|l| sym_character(l, &trivial_class).unwrap())
            .collect();
        let full = (1u32 << (n - 1)) - 1;
        // mults[i][mask] over all labels and generator subsets.
        let mut mults = vec![vec![0i64; 1 << (n - 1)]; labels.len()];
        for mask in 0u32..(1 << (n - 1)) {
            let subset: Vec<usize> = (1..n as usize)
                .filter(|i| mask >> (i - 1) & 1 == 1)
                .collect();
            let gens: Vec<Perm> = subset.iter().map(|&i| swap_perm(n as usize, i)).collect();
            let order = subgroup_closure(Perm::identity(n as usize), &gens, |a, b| a.compose(b))
                .len() as i64;
            let index = factorial(n as u64) as i64 / order;
            let mut total = 0i64;
            for ((label, &dim), row) in labels.iter().zip(&dims).zip(&mut mults) {
                let mult = parabolic_multiplicity_type_a(n, &subset, label).unwrap();
                c.is(mult >= 0, || {
                    format!("A n={n} subset {subset:?} label {label}: multiplicity {mult} < 0")
                });
                row[mask as usize] = mult;
                total += mult * dim;
            }
            c.is(total == index, || {
                format!("A n={n} subset {subset:?}: weighted sum {total} vs index {index}")
            });
        }
        let trivial_label = Partition::new(vec![n]).unwrap();
        for (label, row) in labels.iter().zip(&mults) {
            let ok = (0..row.len())
                .any(|mask| row[mask] == 1 && (mask as u32 != full || *label == trivial_label));
            c.is(ok, || {
                format!("A n={n} label {label}: no proper parabolic with multiplicity one")
            });
        }
    }
    for n in 2..=b_hi {
        let labels = BiPartition::all(n);
        let trivial_class = SignedCycleType::new(
            Partition::new(vec![1; n as usize]).unwrap(),
            Partition::empty(),
        );
        let dims: Vec<i64> = labels
            .iter()
            .map(|l| hyperoct_character(l, &trivial_class).unwrap())
            .collect();
        let group = (1u64 << n) * factorial(n as u64);
        let full = (1u32 << n) - 1;
        let mut mults = vec![vec![0i64; 1 << n]; labels.len()];
        for mask in 0u32..(1 << n) {
            let subset: Vec<usize> = (0..n as usize).filter(|i| mask >> i & 1 == 1).collect();
            let gens: Vec<SignedPerm> = subset
                .iter()
                .map(|&i| SignedPerm::simple_reflection(n as usize, i))
                .collect();
            let order = subgroup_closure(SignedPerm::identity(n as usize), &gens, |a, b| {
                a.compose(b)
            })
            .len() as i64;
            let index = group as i64 / order;
            let mut total = 0i64;
            for ((label, &dim), row) in labels.iter().zip(&dims).zip(&mut mults) {
                let mult = parabolic_multiplicity_type_b(n, &subset, label).unwrap();
                c.is(mult >= 0, || {
                    format!("B n={n} subset {subset:?} label {label}: multiplicity {mult} < 0")
                });
                row[mask as usize] = mult;
                total += mult * dim;
            }
            c.is(total == index, || {
                format!("B n={n} subset {subset:?}: weighted sum {total} vs index {index}")
            });
        }
        let trivial_label = BiPartition::new(Partition::new(vec![n]).unwrap(), Partition::empty());
        for (label, row) in labels.iter().zip(&mults) {
            let ok = (0..row.len())
                .any(|mask| row[mask] == 1 && (mask as u32 != full || *label == trivial_label));
            c.is(ok, || {
                format!("B n={n} label {label}: no proper parabolic with multiplicity one")
            });
        }
    }
    c.done()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_suite_passes() {
        for outcome in run_all(None, None) {
            assert!(outcome.passed(), "{}: {:?}", outcome.name, outcome.failures);
            assert!(outcome.checks > 0);
        }
    }

    #[test]
    fn unknown_suite_is_none() {
        assert!(run_suite("no-such-suite", None, None).is_none());
    }

    #[test]
    fn caps_shrink_the_scans() {
        let small = run_suite("staircase", None, Some(3)).unwrap();
        assert_eq!(small.checks, 2);
        assert!(small.passed());
    }
}
