use negalcd::lemmas::{check_lemma, CosetLemma};

#[test]
fn closed_forms_match_orbits_up_to_two_n_200() {
    for lemma in CosetLemma::ALL {
        let cases = lemma.admissible(200, 400);
        assert!(!cases.is_empty(), "{lemma:?} has no admissible lengths");
        for (q, n) in cases {
            let r = check_lemma(lemma, q, n).unwrap();
            assert!(r.mismatches.is_empty(), "{lemma:?} q={q} n={n}: {:?}", r.mismatches);
        }
    }
}

#[test]
fn hermitian_divisor_covers_both_parities() {
    let cases = CosetLemma::HermitianDivisor.admissible(200, 400);
    assert!(cases.iter().any(|&(q, n)| ((q - 1) / n) % 2 == 1));
    assert!(cases.iter().any(|&(q, n)| ((q - 1) / n) % 2 == 0));
}
