//! Every in-scope statement maps to registered claims, and every registered
//! claim belongs to exactly one statement.

use std::collections::BTreeSet;

use graphpow_harness::claims::registry;

const STATEMENTS: &[(&str, &[&str])] = &[
    ("power identities and distances", &["L2.i", "L2.ii", "L2.iii"]),
    ("automorphism subgroups of powers", &["T2.2.i", "T2.2.ii"]),
    ("D monotone under powers", &["C2.3.i", "C2.3.ii"]),
    ("center ball lower bound", &["T2.4"]),
    ("cube of a connected graph is traceable", &["T2.5"]),
    ("D' of high powers, order at least 7", &["C2.5"]),
    ("small orders", &["R2.6"]),
    ("D of path powers", &["T2.7", "T2.7.cons"]),
    ("D' of path powers", &["C2.8"]),
    ("D' of powers m >= 3", &["C2.9"]),
    ("edge count and D' of squares", &["C2.HAM"]),
    ("automorphisms of cycle powers", &["T2.10"]),
    ("D and D' of cycle powers", &["C2.11.i", "C2.11.ii"]),
    ("Aut(G) = Aut(G^2) conjecture", &["CONJ.i", "CONJ.ii"]),
    ("paths and cycles under subdivision", &["S3.P", "S3.C", "S4.P", "S4.C"]),
    ("restriction of subdivision automorphisms", &["L3.1"]),
    ("superedge images", &["O3.2"]),
    ("subdivision keeps the group", &["C3.4.i", "C3.4.ii"]),
    ("total distinguishing bound", &["T3.6"]),
    ("double subdivision and D''", &["T3.7", "C3.7"]),
    ("sphere bound", &["T3.8", "T3.8.cons"]),
    ("stars attain the sphere bound", &["T3.9", "T3.9.cons"]),
    ("edge to vertex transfer", &["T4.1", "T4.1.cons"]),
    ("pair bound for halves", &["T4.2", "T4.2.cons"]),
    ("tuple bound", &["T4.3", "T4.3.cons"]),
    ("comparison of the two bounds", &["R4.lambda"]),
    ("fractional powers", &["C4.4", "C4.5.i", "C4.5.ii"]),
];

#[test]
fn registry_matches_statement_list() {
    let mapped: Vec<&str> = STATEMENTS.iter().flat_map(|(_, ids)| ids.iter().copied()).collect();
    let unique: BTreeSet<&str> = mapped.iter().copied().collect();
    assert_eq!(unique.len(), mapped.len(), "a claim is mapped twice");
    let registered: BTreeSet<&str> = registry().iter().map(|c| c.id).collect();
    assert_eq!(registered, unique);
}

#[test]
fn only_conjectures_are_report_only() {
    let report_only: BTreeSet<&str> = registry()
        .iter()
        .filter(|c| c.report_only)
        .map(|c| c.id)
        .collect();
    assert_eq!(report_only, BTreeSet::from(["CONJ.i", "CONJ.ii"]));
}

#[test]
fn descriptions_are_present() {
    assert!(registry().iter().all(|c| !c.description.is_empty()));
}
