use quintuple::algebra::rat;
use quintuple::qcomb::tri;
use quintuple::verify::*;

#[test]
fn finite_sum_evaluates_to_one_at_sampled_points() {
    for m in 0..=6 {
        let sum = finite_quintuple_sum(m);
        let mut sampler = Sampler::new(2024, u64::from(m));
        let mut hits = 0;
        let mut draws = 0;
        while hits < 20 {
            draws += 1;
            assert!(draws < 20 * RESAMPLE_BUDGET, "no admissible points for m={m}");
            let p = sampler.point();
            if let Ok(v) = sum.eval(&p.q, &p.x) {
                assert_eq!(v, rat(1), "m={m} at {p}");
                hits += 1;
            }
        }
    }
}

#[test]
fn series_identity_holds_at_every_order_up_to_60() {
    let lhs = quintuple_lhs_series(60);
    let rhs = quintuple_rhs_series(60);
    assert_eq!(lhs, rhs);
    for t in [0u32, 1, 2, 5, 13, 29] {
        assert_eq!(quintuple_lhs_series(t), quintuple_rhs_series(t), "T={t}");
        assert_eq!(quintuple_lhs_series(t).poly(), &lhs.poly().truncate_q(i64::from(t)), "T={t}");
    }
}

#[test]
fn bilateral_exponent_matches_quintuple_exponent() {
    for k in -50i64..=50 {
        assert_eq!(k * k + tri(k), 3 * tri(k) + k);
        assert_eq!(3 * tri(k) + k, k * (3 * k - 1) / 2);
    }
}

#[test]
fn extended_index_cases_are_in_the_grid() {
    let r = verify_bilateral(4, 1);
    assert!(r.passed());
    assert_eq!(r.param("extended_index"), Some(&ParamValue::Int(1)));
}

#[test]
fn every_mutation_yields_a_coefficient_witness() {
    let cases = [
        verify_finite_quintuple_with(3, Some(Mutation::DropFactor)),
        verify_bilateral_with(2, 2, Some(Mutation::AlterExponent)),
        verify_quintuple_with(10, Some(Mutation::AlterExponent)),
        verify_product_relation_with(10, Some(Mutation::DropFactor)),
    ];
    for r in cases {
        match r.witness {
            Some(Witness::Coefficient { lhs, rhs, .. }) => assert_ne!(lhs, rhs),
            other => panic!("{}: unexpected witness {other:?}", r.identity),
        }
    }
}

#[test]
fn unsupported_mutation_is_an_error() {
    let err = Check::DixonLimit { m: 2 }.run(Some(Mutation::DropFactor)).unwrap_err();
    assert!(matches!(err, VerifyError::UnsupportedMutation { .. }));
}

#[test]
fn qdixon_specialization_agrees_with_sampled_points() {
    let r = verify_qdixon_specialized(5, 5, 10, 9).unwrap();
    assert!(r.passed());
    for p in &r.samples {
        assert_eq!(p.m_param, p.q.pow(-5));
        assert!(p.q != rat(1) && p.q != rat(-1));
    }
}
