use std::collections::BTreeSet;

use negalcd::code::{build_code, build_family_code};
use negalcd::defining_set::{Construction, Params};
use negalcd::report::{CodeReport, Coefficient, ReportOptions};

fn round_trip(r: &CodeReport) {
    let text = serde_json::to_string(r).unwrap();
    let back: CodeReport = serde_json::from_str(&text).unwrap();
    assert_eq!(&back, r);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in ["family", "q", "n", "Z", "g", "k", "bch_bound", "lcd", "mds", "evidence", "notes"] {
        assert!(key == "family" && r.family.is_none() || value.get(key).is_some(), "missing {key}");
    }
    assert!(value.get("d_exact").is_some() != value.get("d_bracket").is_some());
}

#[test]
fn reports_round_trip_through_json() {
    let cases = [
        (Construction::E2, Params::lambda(7, Some(4), 1)),
        (Construction::E3, Params::lambda(19, None, 3)),
        (Construction::H1, Params::gamma_l(13, 1, 1)),
        (Construction::H3, Params::l(3, None, 2)),
        (Construction::H1NonMds, Params::gamma_l(13, 1, 0)),
    ];
    for (c, p) in cases {
        let set = c.build(&p).unwrap();
        let r = CodeReport::build(&build_family_code(&set).unwrap(), ReportOptions::default()).unwrap();
        round_trip(&r);
    }
    let z: BTreeSet<u64> = [3, 5, 7, 9].into_iter().collect();
    let r = CodeReport::build(&build_code(13, 6, &z).unwrap(), ReportOptions::default()).unwrap();
    round_trip(&r);
}

#[test]
fn polynomials_serialize_constant_term_first() {
    let z: BTreeSet<u64> = [3, 5, 7, 9].into_iter().collect();
    let r = CodeReport::build(&build_code(13, 6, &z).unwrap(), ReportOptions::default()).unwrap();
    let g: Vec<Coefficient> = [1, 9, 2, 9, 1].into_iter().map(Coefficient::Int).collect();
    assert_eq!(r.g, g);
    assert_eq!(serde_json::to_value(&r.g).unwrap(), serde_json::json!([1, 9, 2, 9, 1]));

    let set = Construction::H3.build(&Params::l(3, None, 2)).unwrap();
    let r = CodeReport::build(&build_family_code(&set).unwrap(), ReportOptions::default()).unwrap();
    assert_eq!(r.label(), "[10,9,2]_9");
    assert!(r.g.iter().all(|c| matches!(c, Coefficient::Tuple(t) if t.len() == 2)));
}

#[test]
fn reports_are_deterministic() {
    let set = Construction::H2.build(&Params::gamma_l(11, 1, 2)).unwrap();
    let a = CodeReport::build(&build_family_code(&set).unwrap(), ReportOptions::default()).unwrap();
    let b = CodeReport::build(&build_family_code(&set).unwrap(), ReportOptions::default()).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}
