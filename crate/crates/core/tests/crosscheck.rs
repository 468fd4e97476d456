//! Cross-checks between the recursive character values and the brute-force
//! oracle tables, plus order-independence of the domino core.

use std::collections::BTreeSet;

use uch_core::oracle::{hyperoct_character_table, sym_character_table};
use uch_core::partition::Partition;
use uch_core::weyl::{hyperoct_character, sym_character};

#[test]
fn recursion_matches_oracle_tables_for_symmetric_groups() {
    for n in 1..=6u32 {
        let table = sym_character_table(n).unwrap();
        for (i, label) in table.labels.iter().enumerate() {
            for (j, class) in table.classes.iter().enumerate() {
                assert_eq!(
                    sym_character(label, class).unwrap(),
                    table.values[i][j],
                    "n = {n}, label {label}, class {class}"
                );
            }
        }
    }
}

#[test]
fn recursion_matches_oracle_tables_for_hyperoctahedral_groups() {
    for n in 1..=3u32 {
        let table = hyperoct_character_table(n).unwrap();
        for (i, label) in table.labels.iter().enumerate() {
            for (j, class) in table.classes.iter().enumerate() {
                assert_eq!(
                    hyperoct_character(label, class).unwrap(),
                    table.values[i][j],
                    "n = {n}, label {label}, class {class}"
                );
            }
        }
    }
}

#[test]
fn oracle_rows_are_exactly_orthonormal() {
    let table = sym_character_table(6).unwrap();
    for i in 0..table.labels.len() {
        for j in 0..table.labels.len() {
            let want = if i == j { table.group_order as i64 } else { 0 };
            assert_eq!(table.raw_inner(&table.values[i], &table.values[j]), want);
        }
    }
    let table = hyperoct_character_table(3).unwrap();
    for i in 0..table.labels.len() {
        for j in 0..table.labels.len() {
            let want = if i == j { table.group_order as i64 } else { 0 };
            assert_eq!(table.raw_inner(&table.values[i], &table.values[j]), want);
        }
    }
}

/// Strips dominoes in every possible order and collects the partitions that
/// admit no further removal.
fn domino_terminals(p: &Partition, seen: &mut BTreeSet<Partition>) {
    let removals = p.border_strip_removals(2);
    if removals.is_empty() {
        seen.insert(p.clone());
        return;
    }
    for r in removals {
        domino_terminals(&r.remainder, seen);
    }
}

#[test]
fn domino_core_is_independent_of_removal_order() {
    for n in 0..=10u32 {
        for p in Partition::all(n) {
            let mut terminals = BTreeSet::new();
            domino_terminals(&p, &mut terminals);
            assert_eq!(terminals.len(), 1, "ambiguous core for {p}");
            assert_eq!(
                terminals.into_iter().next().unwrap(),
                p.two_core(),
                "core mismatch for {p}"
            );
        }
    }
}

#[test]
fn dimensions_count_standard_tableaux() {
    // Dimension column of the oracle equals the recursion's value at the
    // identity, and the sum of squares is the group order.
    for n in 1..=6u32 {
        let table = sym_character_table(n).unwrap();
        let id = Partition::new(vec![1; n as usize]).unwrap();
        let mut squares = 0i64;
        for label in &table.labels {
            let dim = sym_character(label, &id).unwrap();
            assert!(dim > 0);
            squares += dim * dim;
        }
        assert_eq!(squares, table.group_order as i64);
    }
}
