//! End-to-end verification of every shipped guarantee, one test per
//! criterion, each printing a PASS line with its timing against the stated
//! budget. Run with `cargo test -p schubert-core --test acceptance`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use schubert_core::{
    all_permutations, analyze, buchberger_check, canonical_elusive_at, cross_check, elusive_minors,
    essential_set, is_elusive, minimality_certificates, minor_polynomial, reduce, rothe_diagram,
    shift, Axis, BuchbergerLimits, Minor, Permutation, Poly, TermOrder,
};

fn p(text: &str) -> Permutation {
    text.parse().unwrap()
}

fn m(rows: &[usize], cols: &[usize]) -> Minor {
    Minor::new(rows.to_vec(), cols.to_vec()).unwrap()
}

fn pass(name: &str, detail: &str, elapsed: Duration, budget: Duration) {
    println!("criterion {name}: PASS — {detail} ({elapsed:.2?}, budget {budget:.2?})");
    assert!(
        elapsed <= budget,
        "criterion {name} exceeded its budget: {elapsed:?} > {budget:?}"
    );
}

#[test]
fn criterion_01_w3142_minimal_generators() {
    let w = p("3142");
    let _ = elusive_minors(&w); // warm-up
    let start = Instant::now();
    let gens = elusive_minors(&w);
    let elapsed = start.elapsed();

    let essential: Vec<&Minor> = gens.essential.iter().map(|em| &em.minor).collect();
    assert_eq!(
        essential,
        vec![
            &m(&[1], &[1]),
            &m(&[1], &[2]),
            &m(&[1, 2], &[1, 2]),
            &m(&[1, 3], &[1, 2]),
            &m(&[2, 3], &[1, 2]),
        ]
    );
    assert_eq!(
        gens.elusive,
        vec![m(&[1], &[1]), m(&[1], &[2]), m(&[2, 3], &[1, 2])]
    );
    pass(
        "01",
        "3142 essential = {x11, x12, three 2x2}, elusive drops the two dispensable 2x2",
        elapsed,
        Duration::from_millis(1),
    );
}

#[test]
fn criterion_02_w619723458_histogram() {
    let w = p("6,1,9,7,2,3,4,5,8");
    let _ = elusive_minors(&w); // warm-up
    let start = Instant::now();
    let gens = elusive_minors(&w);
    let elusive_example = is_elusive(&m(&[1, 2, 3], &[5, 7, 8]), &w).unwrap();
    let dispensable_example = is_elusive(&m(&[1, 2, 3], &[4, 5, 8]), &w).unwrap();
    let elapsed = start.elapsed();

    assert_eq!(
        gens.degree_histogram,
        BTreeMap::from([(1usize, 5usize), (2, 30), (3, 16)])
    );
    assert!(elusive_example);
    assert!(!dispensable_example);
    pass(
        "02",
        "619723458 histogram {1:5, 2:30, 3:16}; m[{1,2,3},{5,7,8}] elusive, m[{1,2,3},{4,5,8}] not",
        elapsed,
        Duration::from_millis(10),
    );
}

#[test]
fn criterion_03_w13865742_histogram() {
    let w = p("13865742");
    let _ = elusive_minors(&w); // warm-up
    let start = Instant::now();
    let gens = elusive_minors(&w);
    let elapsed = start.elapsed();

    assert_eq!(gens.elusive.len(), 104);
    assert_eq!(
        gens.degree_histogram,
        BTreeMap::from([(2usize, 21usize), (3, 83)])
    );
    pass(
        "03",
        "13865742 has 104 minimal generators: 21 of degree 2, 83 of degree 3",
        elapsed,
        Duration::from_secs_f64(0.05),
    );
}

#[test]
fn criterion_04_minimality_certificates_s5() {
    let start = Instant::now();
    let mut certificates = 0usize;
    for w in all_permutations(5) {
        let gens = elusive_minors(&w);
        let certs = minimality_certificates(&w).unwrap();
        assert_eq!(certs.len(), gens.elusive.len());
        for c in &certs {
            assert_eq!(c.value_at_point.abs(), 1);
            assert_eq!(c.vanishing_checked, gens.essential_count() - 1);
        }
        certificates += certs.len();
    }
    let elapsed = start.elapsed();
    pass(
        "04",
        &format!(
            "all {certificates} witness certificates over S_5 evaluate to ±1 and vanish elsewhere"
        ),
        elapsed,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_05_generation_s5() {
    let start = Instant::now();
    let order = TermOrder::antidiagonal(5);
    let mut reductions = 0usize;
    for w in all_permutations(5) {
        let gens = elusive_minors(&w);
        let basis: Vec<Poly> = gens.elusive.iter().map(minor_polynomial).collect();
        for em in &gens.essential {
            let trace = reduce(&minor_polynomial::<i64>(&em.minor), &basis, &order);
            assert!(
                trace.remainder.is_zero(),
                "w = {w}: {} does not reduce to zero",
                em.minor
            );
            assert!(trace.verify(&basis, &order));
            reductions += 1;
        }
    }
    let elapsed = start.elapsed();
    pass(
        "05",
        &format!("{reductions} essential minors over S_5 reduce to 0 against the elusive basis"),
        elapsed,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_06_groebner_s4() {
    let start = Instant::now();
    let limits = BuchbergerLimits::default();
    let mut antidiagonal_runs = 0usize;
    let mut diagonal_runs = 0usize;
    for w in all_permutations(4) {
        let outcome = buchberger_check::<i64>(&w, &TermOrder::antidiagonal(4), &limits).unwrap();
        assert!(outcome.passed(), "antidiagonal Buchberger failed for {w}");
        antidiagonal_runs += 1;
        if w.is_vexillary() {
            let outcome = buchberger_check::<i64>(&w, &TermOrder::diagonal(4), &limits).unwrap();
            assert!(
                outcome.passed(),
                "diagonal Buchberger failed for vexillary {w}"
            );
            diagonal_runs += 1;
        }
    }
    assert_eq!(antidiagonal_runs, 24);
    assert_eq!(diagonal_runs, 23); // every member of S_4 except 2143
    let elapsed = start.elapsed();
    pass(
        "06",
        "Buchberger passes on all of S_4 (antidiagonal) and all vexillary members (diagonal)",
        elapsed,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_07_ci_cross_check_n4_to_n7() {
    let mut counts = Vec::new();
    let mut n7_elapsed = Duration::ZERO;
    for n in 4..=7 {
        let start = Instant::now();
        let report = cross_check(n, 7).unwrap();
        let elapsed = start.elapsed();
        assert!(report.disagreements.is_empty());
        assert_eq!(report.total, (1..=n).product::<usize>());
        counts.push((n, report.ci_count));
        if n == 7 {
            n7_elapsed = elapsed;
        }
    }
    assert_eq!(counts[0], (4, 21));
    pass(
        "07",
        &format!("count and pattern CI deciders agree on S_4..S_7; CI counts {counts:?}"),
        n7_elapsed,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_08_implied_patterns_s7() {
    let start = Instant::now();
    let short: Vec<Permutation> = ["1342", "1432", "1423"].iter().map(|t| p(t)).collect();
    let long: Vec<Permutation> = ["3,1,5,2,4", "2,4,1,5,3", "3,5,1,6,2,4"]
        .iter()
        .map(|t| p(t))
        .collect();
    let mut avoiders = 0usize;
    for w in all_permutations(7) {
        if short.iter().all(|u| w.avoids(u)) {
            avoiders += 1;
            for u in &long {
                assert!(
                    w.avoids(u),
                    "w = {w} avoids the size-4 patterns but contains {u}"
                );
            }
        }
    }
    let elapsed = start.elapsed();
    pass(
        "08",
        &format!("all {avoiders} size-4-avoiding members of S_7 avoid 31524, 24153, 351624"),
        elapsed,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_09_structural_properties_to_n6() {
    let start = Instant::now();
    for n in 1..=6 {
        for w in all_permutations(n) {
            let diagram = rothe_diagram(&w);
            assert_eq!(diagram.len(), w.length());
            assert_eq!(rothe_diagram(&w.inverse()), diagram.transpose());

            let gens = elusive_minors(&w);

            // every diagram cell is the southeast corner of an elusive minor
            for b in diagram.cells() {
                let witness = canonical_elusive_at(b, &w).unwrap();
                assert_eq!(witness.se_corner(), b);
                assert!(gens.elusive.binary_search(&witness).is_ok());
            }

            // rank bounds along elusive rows and columns
            for em in &gens.essential {
                if gens.elusive.binary_search(&em.minor).is_err() {
                    continue;
                }
                let size = em.minor.size();
                for cell in &em.belongs_to {
                    for k in 1..size {
                        assert!(w.rank(em.minor.rows()[k - 1], cell.cell.j) >= k);
                        assert!(w.rank(cell.cell.i, em.minor.cols()[k - 1]) >= k);
                    }
                }
            }

            // shifting a row or column outward preserves elusiveness
            for minor in &gens.elusive {
                for axis in [Axis::Rows, Axis::Columns] {
                    let set = match axis {
                        Axis::Rows => minor.rows().to_vec(),
                        Axis::Columns => minor.cols().to_vec(),
                    };
                    for &from in &set {
                        for to in from + 1..=n {
                            if set.contains(&to) {
                                continue;
                            }
                            let shifted = shift(minor, axis, from, to).unwrap();
                            // an Err means the shift left every essential rectangle
                            if let Ok(still) = is_elusive(&shifted, &w) {
                                assert!(
                                    still,
                                    "w = {w}: shifting {minor} to {shifted} lost elusiveness"
                                );
                            }
                        }
                    }
                }
            }

            // essential cells of a vexillary permutation form an antichain
            if w.is_vexillary() {
                let ess = essential_set(&w);
                for a in &ess {
                    for b in &ess {
                        assert!(!(a.cell.i < b.cell.i && a.cell.j < b.cell.j));
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    pass(
        "09",
        "diagram size, transpose duality, corner coverage, rank bounds, shifting, antichain (n ≤ 6)",
        elapsed,
        Duration::from_secs(30),
    );
}

#[test]
fn analysis_report_consistency_s4() {
    // reports stay internally consistent: histogram sums, counts, CI fields
    for w in all_permutations(4) {
        let report = analyze(&w, true).unwrap();
        assert_eq!(
            report.histogram.values().sum::<usize>(),
            report.elusive.len()
        );
        assert_eq!(report.ci.elusive_count, report.elusive.len());
        assert_eq!(report.ci.length, report.length);
        assert_eq!(report.certificates.unwrap().len(), report.elusive.len());
    }
}
