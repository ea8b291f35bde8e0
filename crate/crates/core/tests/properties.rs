use num_bigint::BigInt;
use proptest::prelude::*;

use mbar0n::combinat::{power_sum_direct, power_sum_faulhaber, stirling_first, stirling_second};
use mbar0n::poly::EllPoly;
use mbar0n::ppoly::positivity_certificate;
use mbar0n::ring::{q, qf, Q};
use mbar0n::series::{TruncSeries, Var};

const ORDER: usize = 7;

fn coeffs(len: usize) -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec((-9i64..=9, 1i64..=4), len).prop_map(|v| v.into_iter().map(|(n, d)| qf(n, d)).collect())
}

fn series() -> impl Strategy<Value = TruncSeries<Q>> {
    coeffs(ORDER + 1).prop_map(|c| TruncSeries::new(Var::X, ORDER, c))
}

/// Series with zero constant term.
fn small() -> impl Strategy<Value = TruncSeries<Q>> {
    coeffs(ORDER).prop_map(|mut c| {
        c.insert(0, q(0));
        TruncSeries::new(Var::X, ORDER, c)
    })
}

fn unit_linear() -> impl Strategy<Value = TruncSeries<Q>> {
    (coeffs(ORDER - 1), prop_oneof![Just(1i64), Just(-1), Just(2), Just(3)]).prop_map(|(mut c, a)| {
        c.insert(0, q(a));
        c.insert(0, q(0));
        TruncSeries::new(Var::X, ORDER, c)
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a);
    }

    #[test]
    fn exp_log_inverse(f in small()) {
        let e = f.exp().unwrap();
        prop_assert_eq!(e.log().unwrap(), f.clone());
        let one_plus = &TruncSeries::one_at(Var::X, ORDER) + &f;
        prop_assert_eq!(one_plus.log().unwrap().exp().unwrap(), one_plus);
    }

    #[test]
    fn exp_is_a_homomorphism(f in small(), g in small()) {
        prop_assert_eq!((&f + &g).exp().unwrap(), &f.exp().unwrap() * &g.exp().unwrap());
    }

    #[test]
    fn pow_adds_exponents(f in small(), a in (-5i64..=5, 1i64..=3), b in (-5i64..=5, 1i64..=3)) {
        let base = &TruncSeries::one_at(Var::X, ORDER) + &f;
        let (a, b) = (qf(a.0, a.1), qf(b.0, b.1));
        let lhs = base.pow(&(&a + &b)).unwrap();
        let rhs = &base.pow(&a).unwrap() * &base.pow(&b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn integer_pow_matches_rational_pow(f in small(), e in -4i64..=6) {
        let base = &TruncSeries::one_at(Var::X, ORDER) + &f;
        prop_assert_eq!(base.powi(e).unwrap(), base.pow(&q(e)).unwrap());
    }

    #[test]
    fn inverse_is_inverse(f in small()) {
        let u = &TruncSeries::one_at(Var::X, ORDER) + &f;
        prop_assert_eq!(&u * &u.inv().unwrap(), TruncSeries::one_at(Var::X, ORDER));
    }

    #[test]
    fn lagrange_matches_reversion(g in unit_linear()) {
        let f = g.revert().unwrap();
        prop_assert_eq!(g.compose(&f).unwrap(), TruncSeries::variable(Var::X, ORDER));
        let mut fact = q(1);
        for n in 1..=ORDER {
            fact *= q(n as i64);
            prop_assert_eq!(g.lagrange_invert(n).unwrap(), f.coeff(n) * &fact);
        }
    }

    #[test]
    fn faulhaber_matches_direct_sum(n in 0u64..=200, i in 0u32..=30) {
        prop_assert_eq!(power_sum_faulhaber(&BigInt::from(n), i), power_sum_direct(n, i));
    }

    #[test]
    fn positivity_certificate_is_sound(c in prop::collection::vec(-6i64..=6, 1..6)) {
        let p = EllPoly::from_ints(&c);
        prop_assume!(!p.is_zero());
        let cert = positivity_certificate(&p).unwrap();
        let negatives: Vec<BigInt> =
            (0..60i64).filter(|&l| p.eval(&q(l)) < q(0)).map(BigInt::from).collect();
        prop_assert_eq!(cert.nonneg, negatives.is_empty() && !cert.negative_beyond_bound);
        if !cert.negative_beyond_bound {
            prop_assert_eq!(cert.witnesses, negatives);
        }
    }
}

#[test]
fn stirling_matrices_are_inverse() {
    for size in [1usize, 7, 40] {
        for a in 0..size {
            for b in 0..size {
                let sum: BigInt = (0..size).map(|c| stirling_first(a, c) * stirling_second(c, b)).sum();
                assert_eq!(sum, BigInt::from(u8::from(a == b)), "N = {size}, ({a}, {b})");
            }
        }
    }
}
