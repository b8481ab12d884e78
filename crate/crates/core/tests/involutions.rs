use qhyperboloid::involution::{check_extension_consistency, check_involution, classify_involutions, InvolutionCandidate};
use qhyperboloid::QScalar;

#[test]
fn classification_at_sampled_q() {
    let h = QScalar::from_int(3);
    for q in [QScalar::from_int(2), QScalar::from_ratio(1, 3), QScalar::from_int(-2)] {
        let found = classify_involutions(&h, &q).unwrap();
        assert_eq!(found.len(), 2, "q = {q}");
        for j in &found {
            assert!(check_involution(j, &h, &q));
            assert!(check_extension_consistency(j, &h, &QScalar::from_int(5), &q).unwrap());
        }
    }
}

#[test]
fn compact_form_is_rejected_away_from_one() {
    let h = QScalar::from_int(2);
    for q in [QScalar::from_int(2), QScalar::from_ratio(-1, 2)] {
        assert!(!check_involution(&InvolutionCandidate::compact(), &h, &q));
    }
}

#[test]
fn classical_point_is_degenerate() {
    assert!(classify_involutions(&QScalar::from_int(2), &QScalar::from_int(-1)).is_err());
}
