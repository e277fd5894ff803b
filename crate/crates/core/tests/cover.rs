use std::sync::Arc;

use syzcover::cover::*;
use syzcover::curve::{CurveContext, FormalPolynomial, FormalVars, LocalFraction};
use syzcover::field::{make_extension_field, solve_power_equation, PrimeFieldElement};
use syzcover::{Matrix, Ring};

const PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

fn fermat(p: u64) -> Arc<CurveContext> {
    CurveContext::fermat(p).unwrap()
}

#[test]
fn transition_matrix_from_first_principles() {
    for p in PRIMES {
        let ctx = fermat(p);
        check_transition(&ctx).unwrap();
        let t = transition_matrix(&ctx);
        assert_eq!(t.det(), LocalFraction::constant(&ctx, 1));
        assert_eq!(*t.get(0, 1), LocalFraction::monomial(&ctx, -1, (0, 0, 1), (1, 0)));
    }
}

#[test]
fn frobenius_matrices_change_bases() {
    for p in PRIMES {
        check_h_matrices(&fermat(p)).unwrap();
    }
}

#[test]
fn h_matrix_entries_and_determinants() {
    let ctx = fermat(5);
    let (h_u, h_w) = h_matrices(&ctx);
    let expected_21 = LocalFraction::constant(&ctx, 1) - LocalFraction::monomial(&ctx, 1, (0, 6, 0), (6, 0));
    assert_eq!(*h_u.get(1, 0), expected_21);
    assert_eq!(h_u.det(), LocalFraction::constant(&ctx, -2));
    assert_eq!(h_w.det(), LocalFraction::constant(&ctx, -2));
}

#[test]
fn base_change_rejects_transposed_h() {
    let ctx = fermat(3);
    let (h_u, _) = h_matrices(&ctx);
    let bases = ChartBases::new(&ctx);
    assert!(check_change_of_basis("H_U", &h_u.transpose(), &bases.u_frobenius, &bases.u_prime).is_err());
}

#[test]
fn cocycle_holds_for_all_primes() {
    for p in PRIMES {
        cocycle_check(&fermat(p)).unwrap();
    }
}

#[test]
fn cocycle_detects_transposed_h_w() {
    for p in [3, 11] {
        let ctx = fermat(p);
        let t = transition_matrix(&ctx);
        let (h_u, h_w) = h_matrices(&ctx);
        assert!(!cocycle_holds(&t, &h_u, &h_w.transpose()));
    }
}

#[test]
fn relations_match_displayed_presentation() {
    for p in PRIMES {
        let data = build_cover(p).unwrap();
        assert_eq!(data.relations_u.len(), 4);
        assert_eq!(data.relations_w.len(), 4);
        check_relations(&data).unwrap();
    }
}

#[test]
fn relation_degrees_split_into_leading_and_det_parts() {
    for p in [3u64, 5, 7] {
        let data = build_cover(p).unwrap();
        for rel in data.relations_u.iter().chain(&data.relations_w) {
            assert_eq!(rel.formal_degrees(), vec![2, p as u32 + 1]);
        }
    }
}

#[test]
fn first_relation_for_p3() {
    let ctx = fermat(3);
    let data = build_relations(&ctx);
    let v = FormalPolynomial::vars_of(&ctx, FormalVars::Abcd);
    let det = v[0].clone() * v[3].clone() - v[1].clone() * v[2].clone();
    let lead = v[0].pow(3) * v[3].clone() - v[2].clone() * v[1].pow(3);
    let u4 = u_clearing(&ctx, FormalVars::Abcd);
    let h11 = LocalFraction::monomial(&ctx, 1, (0, 2, 2), (4, 0));
    assert_eq!(data.relations_u[0], (lead - det.scale(&h11)) * u4);
}

#[test]
fn gluing_is_a_equals_t_b() {
    for p in PRIMES {
        gluing_substitution_check(&fermat(p)).unwrap();
    }
}

#[test]
fn gluing_entry_c() {
    let ctx = fermat(5);
    let c = &gluing_substitution(&ctx)[2];
    let g = FormalPolynomial::vars_of(&ctx, FormalVars::AlphaDelta);
    let expected = g[0].scale(&LocalFraction::monomial(&ctx, 1, (1, 0, 0), (0, 1)))
        + g[2].scale(&LocalFraction::monomial(&ctx, 1, (0, 2, 0), (1, 1)));
    assert_eq!(*c, expected);
}

#[test]
fn gluing_with_inverse_transition_fails() {
    let ctx = fermat(3);
    let t_inv = transition_matrix(&ctx).inverse().unwrap();
    assert!(check_gluing_with(&ctx, &t_inv).is_err());
}

#[test]
fn section_ring_identities() {
    for p in PRIMES {
        let ctx = fermat(p);
        section_ring_identity_check(&ctx).unwrap();
        assert!(section_ring_difference(&ctx, SectionIdentity::Alpha).is_zero());
        assert!(section_ring_difference(&ctx, SectionIdentity::Beta).is_zero());
        assert!(!section_ring_difference(&ctx, SectionIdentity::BetaWithU).is_zero());
    }
}

#[test]
fn determinant_periodicity() {
    for p in PRIMES {
        det_periodicity_check(&fermat(p)).unwrap();
    }
}

#[test]
fn no_fourth_root_of_minus_two_in_f5() {
    let f5 = make_extension_field(5, 1).unwrap();
    assert!(solve_power_equation(&f5, 4, &f5.from_i64(-2)).unwrap().is_empty());
    let f625 = make_extension_field(5, 4).unwrap();
    assert_eq!(solve_power_equation(&f625, 4, &f625.from_i64(-2)).unwrap().len(), 4);
}

#[test]
fn w0_specialization_matches_generators() {
    for p in PRIMES {
        specialize_w0(&fermat(p)).unwrap();
    }
}

#[test]
fn w0_second_generator_shape() {
    let ctx = fermat(3);
    let g = &w0_generators(&ctx)[1];
    let v = FormalPolynomial::vars_of(&ctx, FormalVars::AbcdDet);
    let expected = v[1].pow(3) * v[0].clone() - v[0].pow(3) * v[1].clone() - v[4].clone();
    assert_eq!(*g, expected);
}

#[test]
fn matrix_shift_identities_on_samples() {
    for n in [2, 3] {
        matrix_ideal_shift_check(7, n, 100, 0).unwrap();
    }
}

#[test]
fn matrix_shift_trivial_cases() {
    let e = |x: i64| PrimeFieldElement::new(x, 7);
    let b = Matrix::from_rows(vec![vec![e(2), e(1)], vec![e(5), e(3)]]);
    let c = Matrix::from_rows(vec![vec![e(4), e(0)], vec![e(6), e(1)]]);
    let a = c.mul(&b);
    assert!(shift_identities_hold(&a, &b, &c).unwrap());
    let g = a.mul(&b.inverse().unwrap()).sub(&c);
    assert!(g.rows().iter().flatten().all(|x| x.is_zero()));
    let id = Matrix::identity_like(&e(1), 2);
    let a2 = Matrix::from_rows(vec![vec![e(3), e(1)], vec![e(0), e(2)]]);
    assert_eq!(a2.mul(&id.inverse().unwrap()).sub(&c), a2.sub(&c.mul(&id)));
    let singular = Matrix::from_rows(vec![vec![e(1), e(2)], vec![e(2), e(4)]]);
    assert!(shift_identities_hold(&a, &singular, &c).is_err());
}
