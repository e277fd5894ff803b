use syzcover::oracle::{cross_check, Oracle, MIN_POINTS};

#[test]
fn every_identity_survives_evaluation() {
    for p in [3u64, 5, 7, 11, 13] {
        let oracle = Oracle::new(p, MIN_POINTS, 7).unwrap();
        assert_eq!(oracle.fermat_points.len(), MIN_POINTS);
        assert_eq!(oracle.base_points.len(), MIN_POINTS);
        assert!(!oracle.w0_points.is_empty());
        for (name, verdict) in oracle.run_all() {
            assert!(verdict.is_ok(), "p={p} {name}: {verdict:?}");
        }
    }
}

#[test]
fn point_count_is_raised_to_the_minimum() {
    cross_check(5, 3, 1).unwrap();
}

#[test]
fn oracle_sees_a_broken_entry() {
    let mut oracle = Oracle::new(5, MIN_POINTS, 2).unwrap();
    let entry = oracle.catalog.get_mut("R2");
    entry.components[1] = -entry.components[1].clone();
    assert!(oracle.catalog().is_err());
    let phi = oracle.catalog.get_mut("phi(e3)");
    phi.components[2] = phi.components[2].clone() + phi.components[2].clone();
    assert!(oracle.kernels().is_err());
}
