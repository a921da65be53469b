//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (run with `--nocapture` to see them all).
//!
//! Criteria 1–8 drive the built-in verification grid; criterion 9
//! exercises the parser corpus and the `dimlat selftest` binary.

use std::process::Command;
use std::time::Instant;

use dimlat::cli::{parse, print_script, DiagnosticKind};
use dimlat::selftest;

fn check_criterion(index: usize, millis_budget: u128) {
    let result = selftest::run_one(index);
    let status = if result.passed { "PASS" } else { "FAIL" };
    println!(
        "criterion {} ({}): {} — {} [{} ms]",
        result.index, result.name, status, result.detail, result.millis
    );
    assert!(
        result.passed,
        "criterion {} failed: {}",
        index, result.detail
    );
    assert!(
        result.millis < millis_budget,
        "criterion {} took {} ms, budget {} ms",
        index,
        result.millis,
        millis_budget
    );
}

#[test]
fn criterion_1_complete_lattice_oracle_equivalence() {
    check_criterion(1, 60_000);
}

#[test]
fn criterion_2_least_upper_bound_certification() {
    check_criterion(2, 300_000);
}

#[test]
fn criterion_3_lattice_and_monoid_laws() {
    check_criterion(3, 300_000);
}

#[test]
fn criterion_4_cardinal_arithmetic_laws() {
    check_criterion(4, 300_000);
}

#[test]
fn criterion_5_finite_dimensional_ground_truth() {
    check_criterion(5, 300_000);
}

#[test]
fn criterion_6_closure_formulas() {
    check_criterion(6, 300_000);
}

#[test]
fn criterion_7_separation_predicates() {
    check_criterion(7, 300_000);
}

#[test]
fn criterion_8_representation_bounds() {
    check_criterion(8, 300_000);
}

/// Twenty scripts covering every statement form: all five atom types,
/// rational/integer/aleph values, explicit and described families with
/// every interval flavor, and every query keyword.
const CORPUS: &[&str] = &[
    "algebra M { atom a : II_1; } elem p over M = { a: 1/2 }; leq p p;",
    "algebra M { atom a : I_fin(3); atom b : I_inf(aleph 1); } unit M;",
    "algebra M { atom a : II_inf(aleph 0); atom b : III(aleph 2); } is_T0 M; is_T1 M; is_normal M;",
    "algebra M { atom a : II_1; }\nelem p over M = { a: 1/3 };\nelem q over M = { a: 2/3 };\nadd p q;",
    "algebra M { atom a : II_inf(aleph 1); atom b : III(aleph 1); }\n\
     elem p over M = { a: 1/2, b: aleph 0 };\n\
     elem q over M = { a: 2, b: aleph 1 };\n\
     meet p q; join p q;",
    "algebra M { atom a : II_inf(aleph 0); }\n\
     elem x over M = { a: 1/2 };\nelem y over M = { a: 3 };\n\
     family F = [ x y ];\nsup F; inf F;",
    "algebra M { atom a : II_inf(aleph 1); }\nfamily F over M described { a: naturals };\nsup F;",
    "algebra M { atom a : II_inf(aleph 0); }\nfamily F over M described { a: (1, 2] };\ninf F;",
    "algebra M { atom a : II_1; atom b : II_1; }\n\
     family F over M described { a: [0, 1), b: {0, 1/2, 1} };\nsup F;",
    "algebra M { atom a : II_inf(aleph 2); }\n\
     family F over M described { a: (0, 1] {7/2} naturals aleph 0 aleph 2 };\nsup F; inf F;",
    "algebra M { atom a : II_inf(aleph 1); }\nelem p over M = { a: 1 };\nclosure p;",
    "algebra M { atom a : II_1; }\nelem p over M = { a: 1/2 };\nelem q over M = { a: 1/2 };\nin_closure p q;",
    "algebra M { atom a : III(aleph 1); }\nelem p over M = { a: aleph 0 };\nelem q over M = { a: aleph 1 };\nin_closure q p;",
    "algebra M { atom a : II_inf(aleph 0); }\nelem p over M = { a: 3/2 };\nformal_sum p;",
    "oracle_check (2); oracle_check (2, 3); oracle_check (1, 2, 2);",
    "algebra B { atom a : II_inf(aleph 0); }\n\
     elem x over B = { a: 1/2 };\nelem y over B = { a: 2 };\nelem z over B = { a: aleph 0 };\n\
     family F = [ x y z ];\nrep_sub F; rep_super F;",
    "algebra M { atom a : I_fin(2); atom b : I_fin(3); }\n\
     elem p over M = { a: 1/2, b: 2/3 };\nelem q over M = { a: 1, b: 1/3 };\n\
     leq p q; meet p q; join p q;",
    "algebra M { atom a : I_inf(aleph 0); }\nelem p over M = { a: 5 };\nelem q over M = { a: aleph 0 };\nadd p q; closure q;",
    "algebra M { atom a : II_1; atom b : I_fin(2); }\n\
     elem p over M = { a: 1/2, b: 1/2 };\nelem q over M = { a: 3/4, b: 1 };\n\
     family F = [ p q ];\nclosure F; in_closure p F;",
    "algebra M { atom a : II_inf(aleph 1); atom b : III(aleph 2); atom c : I_fin(4); }\n\
     elem p over M = { a: 7/3, b: aleph 1, c: 3/4 };\n\
     unit M; formal_sum p; closure p; is_T0 M;",
];

/// Malformed inputs with the diagnostic kind and position they must
/// produce.
const MALFORMED: &[(&str, DiagnosticKind, u32, u32)] = &[
    // lexical: stray character
    (
        "algebra M {\n  atom a : II_1;\n  @\n}",
        DiagnosticKind::Lexical,
        3,
        3,
    ),
    // syntax: missing semicolon after an atom declaration
    ("algebra M { atom a : II_1 }", DiagnosticKind::Syntax, 1, 27),
    // syntax: empty algebra body
    ("algebra M { }", DiagnosticKind::Syntax, 1, 13),
    // syntax: reserved word as a name
    (
        "algebra inf { atom a : II_1; }",
        DiagnosticKind::Syntax,
        1,
        9,
    ),
    // syntax: not a statement
    ("frobnicate x;", DiagnosticKind::Syntax, 1, 1),
    // syntax: missing semicolon after a query
    (
        "algebra M { atom a : II_1; }\nelem p over M = { a: 1 };\nleq p p",
        DiagnosticKind::Syntax,
        3,
        8,
    ),
    // binding: unbound algebra
    ("elem p over Q = { a: 1 };", DiagnosticKind::Binding, 1, 13),
    // binding: unbound element inside a family
    (
        "algebra M { atom a : II_1; }\nfamily F = [ x ];",
        DiagnosticKind::Binding,
        2,
        14,
    ),
    // binding: duplicate atom id
    (
        "algebra M { atom a : II_1; atom a : II_1; }",
        DiagnosticKind::Binding,
        1,
        33,
    ),
    // binding: atom listed twice in an element
    (
        "algebra M { atom a : II_1; }\nelem p over M = { a: 1, a: 2 };",
        DiagnosticKind::Binding,
        2,
        25,
    ),
    // binding: missing atom in an element
    (
        "algebra M { atom a : II_1; atom b : II_1; }\nelem p over M = { a: 1 };",
        DiagnosticKind::Binding,
        2,
        24,
    ),
    // binding: query on an unbound name
    (
        "algebra M { atom a : II_1; }\nleq p p;",
        DiagnosticKind::Binding,
        2,
        5,
    ),
    // domain: aleph value on a II_1 atom
    (
        "algebra M { atom a : II_1; }\nelem p over M = { a: aleph 0 };",
        DiagnosticKind::Domain,
        2,
        22,
    ),
    // domain: zero matrix order
    (
        "algebra M { atom a : I_fin(0); }",
        DiagnosticKind::Domain,
        1,
        28,
    ),
    // domain: aleph level beyond the configured maximum
    (
        "algebra M { atom a : III(aleph 99); }",
        DiagnosticKind::Domain,
        1,
        32,
    ),
    // domain: zero denominator
    (
        "algebra M { atom a : II_1; }\nelem p over M = { a: 1/0 };",
        DiagnosticKind::Domain,
        2,
        24,
    ),
    // domain: empty interval in a described family
    (
        "algebra M { atom a : II_inf(aleph 0); }\nfamily F over M described { a: (1, 1) };",
        DiagnosticKind::Domain,
        2,
        32,
    ),
    // domain: interval on a type III atom
    (
        "algebra M { atom a : III(aleph 0); }\nfamily F over M described { a: [0, 1] };",
        DiagnosticKind::Domain,
        2,
        32,
    ),
];

#[test]
fn criterion_9_parser_round_trip_and_selftest_binary() {
    let start = Instant::now();

    // round-trip identity over the corpus
    assert_eq!(CORPUS.len(), 20);
    for (i, text) in CORPUS.iter().enumerate() {
        let script = parse(text).unwrap_or_else(|e| panic!("corpus script {} rejected: {}", i, e));
        let printed = print_script(&script);
        let reparsed = parse(&printed)
            .unwrap_or_else(|e| panic!("printed corpus script {} rejected: {}\n{}", i, e, printed));
        assert_eq!(
            script, reparsed,
            "corpus script {} changed under printing:\n{}",
            i, printed
        );
    }

    // every malformed input yields the right diagnostic at the right spot
    for (i, (text, kind, line, col)) in MALFORMED.iter().enumerate() {
        let err = parse(text)
            .err()
            .unwrap_or_else(|| panic!("malformed script {} was accepted:\n{}", i, text));
        assert_eq!(
            err.kind, *kind,
            "malformed script {}: kind {:?}, got {}",
            i, kind, err
        );
        assert_eq!(
            (err.line, err.col),
            (*line, *col),
            "malformed script {}: expected {}:{}, got {}:{} ({})",
            i,
            line,
            col,
            err.line,
            err.col,
            err.message
        );
    }

    // the shipped binary runs the verification grid and exits cleanly
    let output = Command::new(env!("CARGO_BIN_EXE_dimlat"))
        .arg("selftest")
        .output()
        .expect("selftest binary runs");
    let stdout = String::from_utf8_lossy(&output.stdout);
    let elapsed = start.elapsed();
    assert!(
        output.status.success(),
        "selftest exited with {:?}:\n{}",
        output.status.code(),
        stdout
    );
    for index in 1..=8 {
        assert!(
            stdout.contains(&format!("criterion {} (", index)),
            "selftest output misses criterion {}:\n{}",
            index,
            stdout
        );
    }
    assert!(
        !stdout.contains("FAIL"),
        "selftest reported a failure:\n{}",
        stdout
    );
    assert!(
        elapsed.as_secs() < 300,
        "criterion 9 took {} s, budget 300 s",
        elapsed.as_secs()
    );
    println!(
        "criterion 9 (parser round-trip, diagnostics, selftest binary): PASS — {} scripts round-trip, {} diagnostics located, selftest green [{} ms]",
        CORPUS.len(),
        MALFORMED.len(),
        elapsed.as_millis()
    );
}
