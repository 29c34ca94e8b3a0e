use negalcd::defining_set::{DistanceClaim, Family};
use negalcd::distance::MdsVerdict;
use negalcd::report::{CodeReport, ReportOptions, Verdict};
use negalcd::tables::{printed_row_verdicts, reproduce_table, TableRow};

fn show(rows: &[TableRow]) {
    for r in rows {
        eprintln!(
            "T{} row {} {:?} {:<10} printed {:<16} derived {:<18} {} {:?}",
            r.table,
            r.printed_row,
            r.params,
            r.family.name(),
            r.paper_claim.to_string(),
            r.derived_value,
            r.verdict,
            r.report.distance_evidence
        );
    }
}

fn sandwich(r: &CodeReport) {
    if let Some(d) = r.d_exact {
        assert!(r.bch_bound <= d && d <= r.n - r.k + 1, "{}", r.label());
    }
}

#[test]
fn table_1_matches_with_exact_distances() {
    let rows = reproduce_table(1, ReportOptions::default()).unwrap();
    show(&rows);
    assert_eq!(printed_row_verdicts(&rows).len(), 8);
    for r in &rows {
        assert_eq!(r.verdict, Verdict::Match, "{}", r.derived_value);
        assert!(r.report.d_exact.is_some());
        assert_eq!(r.report.mds, MdsVerdict::True);
        sandwich(&r.report);
        if r.family == Family::E1Even {
            assert!(r.report.notes.iter().any(|n| n.contains("lambda+1")));
        }
    }
}

#[test]
fn table_2_matches_with_exact_distances() {
    let rows = reproduce_table(2, ReportOptions::default()).unwrap();
    show(&rows);
    let printed = printed_row_verdicts(&rows);
    assert_eq!(printed.len(), 10);
    assert!(printed.iter().all(|&(_, v)| v == Verdict::Match));
    for r in &rows {
        assert!(r.report.d_exact.is_some());
        sandwich(&r.report);
    }
}

#[test]
fn table_3_dimensions_bounds_and_lcd() {
    let rows = reproduce_table(3, ReportOptions::default()).unwrap();
    show(&rows);
    for r in &rows {
        let q = r.params.q;
        let lambda = r.params.lambda.unwrap();
        assert_eq!(r.report.k, 4 * lambda);
        assert!(r.report.bch_bound >= (q + 3) / 2 - 2 * lambda);
        let e = r.report.lcd.euclidean;
        assert!(e.lcd && e.hull == Some(0) && e.hull_gram == Some(0));
        assert_eq!(r.verdict, Verdict::Match);
        sandwich(&r.report);
    }
}

#[test]
fn tables_4_and_5_match_theorem_formulas() {
    for t in [4, 5] {
        let rows = reproduce_table(t, ReportOptions::default()).unwrap();
        show(&rows);
        for r in &rows {
            let exact = r.report.d_exact.expect("exact distance");
            assert_eq!(r.theorem_claim.k, r.report.k);
            assert_eq!(r.theorem_claim.d, DistanceClaim::Exact(exact));
            assert!(r.report.lcd.hermitian.unwrap().all_agree_lcd());
            sandwich(&r.report);
            if t == 4 && r.printed_row == 1 {
                assert_eq!(r.verdict, Verdict::PaperTypoSuspected);
                assert_eq!(r.derived_value, "[4,2,3]_25");
            } else {
                assert_eq!(r.verdict, Verdict::Match, "{}", r.derived_value);
            }
        }
    }
}

#[test]
fn table_6_cardinalities_bounds_and_lcd() {
    let rows = reproduce_table(6, ReportOptions::default()).unwrap();
    show(&rows);
    for r in &rows {
        let q = r.params.q;
        let l = r.params.l.unwrap();
        let (k, z) = if q % 4 == 1 { (4 * l, q * q - 4 * l + 1) } else { (4 * l + 1, q * q - 4 * l) };
        assert_eq!(r.report.k, k);
        assert_eq!(r.report.z.len() as u64, z);
        assert!(r.report.lcd.hermitian.unwrap().all_agree_lcd());
        if q <= 5 {
            assert!(r.report.bch_bound >= (q * q - 4 * l + 3) / 2);
        }
        assert_ne!(r.verdict, Verdict::Mismatch);
        sandwich(&r.report);
    }
}
