//! Exact checkers for the combinatorial identities behind the closed forms
//! of `M̂`: two Lagrange-series binomial identities, the `E(ℓ)` convolution,
//! the initial-condition series and its Bernoulli-number reformulation.
//!
//! Every checker returns a [`VerifyReport`]; a failing report carries the
//! first offending parameter or coefficient.
//!
//! The Bernoulli reformulation only holds when its symbols are read with
//! `B₁ = -1/2` (the power sum `Σ_{j<k} jⁱ` is what appears). The checker
//! evaluates it that way and notes how the individual low-order displays
//! behave under `B₁ = +1/2`.

use num_bigint::BigInt;

use crate::classes::{exp_coeff, keel_oracle};
use crate::combinat::{bernoulli, bernoulli_minus, binomial, binomial_usize, factorial_q};
use crate::poly::LPoly;
use crate::report::VerifyReport;
use crate::ring::{q, q_pow, qi, Ring, Q};
use crate::series::{TruncSeries, Var};

/// `Σ_{ℓ+m=k-1} C(w(ℓ+1)-1, ℓ) C(w(m+1)-2, m)/(m+1)` and `C(w(k+1)-2, k-1)`.
pub fn vandermonde_sides(k: usize, w: usize) -> (Q, Q) {
    let mut lhs = Q::zero();
    for ell in 0..k {
        let m = k - 1 - ell;
        let a = binomial(&BigInt::from(w * (ell + 1) - 1), ell);
        let b = binomial(&(BigInt::from(w * (m + 1)) - 2), m);
        lhs += qi(&(a * b)) / q(m as i64 + 1);
    }
    let rhs = qi(&binomial(&(BigInt::from(w * (k + 1)) - 2), k - 1));
    (lhs, rhs)
}

pub fn check_vandermonde_conv(k: usize, w: usize) -> VerifyReport {
    assert!(k >= 1 && w >= 1);
    let mut r = VerifyReport::new("vandermonde convolution").param("k", k).param("w", w);
    let (lhs, rhs) = vandermonde_sides(k, w);
    r.check(lhs == rhs, || format!("lhs {lhs} != rhs {rhs}"));
    r
}

/// `Σ_ℓ α/(α+ℓβ) C(α+ℓβ, ℓ) yˡ` with `y = s(1+s)^{-β}`, through `s^{order}`.
pub fn lagrange_pow_lhs(alpha: usize, beta: usize, order: usize) -> TruncSeries<Q> {
    let one_plus_s = TruncSeries::from_ints(Var::S, order, &[1, 1]);
    let y = one_plus_s.powi(-(beta as i64)).unwrap().shift(1);
    let mut acc = TruncSeries::zero_at(Var::S, order);
    let mut y_pow = TruncSeries::one_at(Var::S, order);
    for ell in 0..=order {
        let top = alpha + ell * beta;
        let c = q(alpha as i64) / q(top as i64) * qi(&binomial_usize(top, ell));
        acc = &acc + &y_pow.scale(&c);
        y_pow = &y_pow * &y;
    }
    acc
}

/// `(1+s)^α = Σ_ℓ α/(α+ℓβ) C(α+ℓβ, ℓ) yˡ`, `y = s(1+s)^{-β}`, through `s^{order}`.
pub fn check_lagrange_pow(alpha: usize, beta: usize, order: usize) -> VerifyReport {
    assert!(alpha >= 1 && beta >= 1);
    let mut r = VerifyReport::new("lagrange power series")
        .param("alpha", alpha)
        .param("beta", beta)
        .param("order", order);
    let lhs = lagrange_pow_lhs(alpha, beta, order);
    let rhs = TruncSeries::new(
        Var::S,
        order,
        (0..=alpha).map(|i| qi(&binomial_usize(alpha, i))).collect(),
    );
    if let Some(i) = (0..=order).find(|&i| lhs.coeff(i) != rhs.coeff(i)) {
        r.fail(format!("coefficient of s^{i}: {} != {}", lhs.coeff(i), rhs.coeff(i)));
    }
    r
}

/// `E(ℓ) = (ℓ+1)^ℓ/(ℓ+1)! · Π_{j<ℓ} (1 - jL/(ℓ+1))`.
pub fn e_poly(ell: usize) -> LPoly {
    let l1 = q(ell as i64 + 1);
    let mut p = LPoly::constant(q_pow(&l1, ell as i64) / factorial_q(ell + 1));
    for j in 0..ell {
        p = &p * &LPoly::linear(q(1), -(q(j as i64) / &l1));
    }
    p
}

/// `Σ_{ℓ+m=k-1} E(ℓ) E(m) (1 + ℓ(1-L)) = k E(k)` in `Q[L]`.
pub fn check_e_identity(k: usize) -> VerifyReport {
    assert!(k >= 1);
    let mut r = VerifyReport::new("E convolution").param("k", k);
    let mut lhs = LPoly::zero();
    for ell in 0..k {
        let m = k - 1 - ell;
        let f = LPoly::linear(q(1 + ell as i64), q(-(ell as i64)));
        lhs = &lhs + &(&(&e_poly(ell) * &e_poly(m)) * &f);
    }
    let rhs = e_poly(k).scale(&q(k as i64));
    r.check(lhs == rhs, || format!("{} != {}", lhs.display("L"), rhs.display("L")));
    r
}

/// `ℓ`-th term `(ℓ+1)^ℓ/(ℓ+1)! (1-L²)^{(1+ℓ)/L-ℓ} Π_{j<ℓ}(1 - jL/(ℓ+1)) L^ℓ`
/// of the initial-condition series, through `L^{order}`.
pub fn initial_condition_row(ell: usize, order: usize) -> TruncSeries<Q> {
    if ell > order {
        return TruncSeries::zero_at(Var::L, order);
    }
    let w = order - ell;
    let log = TruncSeries::from_fn(Var::L, w + 1, |i| {
        if i > 0 && i % 2 == 0 {
            q(-2) / q(i as i64)
        } else {
            Q::zero()
        }
    });
    let l1 = q(ell as i64 + 1);
    let e = &log.divide_by_variable().unwrap().scale(&l1) - &log.truncate(w).scale(&q(ell as i64));
    let mut s = e.exp().unwrap();
    for j in 0..ell {
        s = &s * &TruncSeries::new(Var::L, w, vec![q(1), -(q(j as i64) / &l1)]);
    }
    let pref = q_pow(&l1, ell as i64) / factorial_q(ell + 1);
    TruncSeries::new(Var::L, order, s.coeffs().to_vec()).scale(&pref).shift(ell)
}

/// The initial-condition series sums to exactly `1` through `L^{order}`.
pub fn check_initial_condition(order: usize) -> VerifyReport {
    assert!(order >= 1);
    let mut r = VerifyReport::new("initial condition").param("order", order);
    let total = (0..=order).fold(TruncSeries::zero_at(Var::L, order), |acc, l| {
        &acc + &initial_condition_row(l, order)
    });
    let one = TruncSeries::one_at(Var::L, order);
    if let Some(i) = (0..=order).find(|&i| total.coeff(i) != one.coeff(i)) {
        r.fail(format!("coefficient of L^{i} is {}", total.coeff(i)));
    }
    r
}

/// `A_{ki}` with the Bernoulli symbols supplied by `b`:
/// `-2(k+1)/(i+1)` (odd `i`) or `2k/i` (even `i`), minus
/// `(1/(i(i+1)(k+1)^i)) Σ_{j≤i} C(i+1, j) k^{i-j+1} B_j`.
pub fn a_ki(k: usize, i: usize, b: impl Fn(usize) -> Q) -> Q {
    assert!(i >= 1);
    let (k_, i_) = (k as i64, i as i64);
    let head = if i % 2 == 1 { q(-2 * (k_ + 1)) / q(i_ + 1) } else { q(2 * k_) / q(i_) };
    let mut sum = Q::zero();
    for j in 0..=i {
        sum += qi(&binomial_usize(i + 1, j)) * q_pow(&q(k_), (i - j + 1) as i64) * b(j);
    }
    head - sum / (q(i_ * (i_ + 1)) * q_pow(&q(k_ + 1), i_))
}

/// `Σ_{k≤ℓ} (k+1)^k/(k+1)! · [L^{ℓ-k}] exp(Σᵢ A_{ki} Lⁱ)`; zero for `ℓ ≥ 1`
/// when the symbols are read correctly.
pub fn bernoulli_identity_value(ell: usize, b: impl Fn(usize) -> Q + Copy) -> Q {
    let mut acc = Q::zero();
    for k in 0..=ell {
        let r = ell - k;
        let mut c = vec![Q::zero(); r + 1];
        for (i, ci) in c.iter_mut().enumerate().skip(1) {
            *ci = a_ki(k, i, b);
        }
        acc += q_pow(&q(k as i64 + 1), k as i64) / factorial_q(k + 1) * exp_coeff(&c, r);
    }
    acc
}

/// The three low-order displays, as `(lhs, rhs)` with `B₀ … B₃` from `b`.
pub fn bernoulli_displays(b: impl Fn(usize) -> Q) -> [(Q, Q); 3] {
    let (b0, b1, b2, b3) = (b(0), b(1), b(2), b(3));
    let h = |n: i64, d: i64| Q::new(n.into(), d.into());
    let s = &b0 + &b1 * q(2);
    let d1 = (b1.clone(), -h(1, 2) * &b0);
    let d2 = (
        b2.clone(),
        q(4) - h(13, 3) * &b0 - &b1 + h(1, 4) * &s * &s,
    );
    let d3 = (
        b3,
        q(12) - h(259, 12) * &b0 - q(15) * &b1 + h(1, 2) * &b2 + h(27, 4) * &b0 * &b0 + h(45, 4) * &b0 * &b1
            + h(3, 4) * &b0 * &b2
            + h(7, 2) * &b1 * &b1
            + h(3, 2) * &b1 * &b2
            - h(1, 16) * &s * &s * &s,
    );
    [d1, d2, d3]
}

/// The Bernoulli reformulation of the initial condition for `1 ≤ ℓ ≤ ℓ_max`,
/// and the displayed `B₂`, `B₃` identities.
pub fn check_bernoulli_identities(ell_max: usize) -> VerifyReport {
    assert!(ell_max >= 1);
    let mut r = VerifyReport::new("bernoulli identities").param("ell_max", ell_max);
    for ell in 1..=ell_max {
        let v = bernoulli_identity_value(ell, bernoulli_minus);
        r.check(v.is_zero(), || format!("ℓ = {ell}: sum is {v}"));
    }
    let minus = bernoulli_displays(bernoulli_minus);
    let plus = bernoulli_displays(bernoulli);
    r.check(minus[1].0 == minus[1].1, || "B₂ display fails with B₁ = -1/2".into());
    r.check(plus[1].0 == plus[1].1, || "B₂ display fails with B₁ = +1/2".into());
    r.check(minus[2].0 == minus[2].1, || "B₃ display fails with B₁ = -1/2".into());
    r.check(minus[0].0 == minus[0].1, || "B₁ display fails with B₁ = -1/2".into());
    let plus_holds: Vec<String> = plus
        .iter()
        .enumerate()
        .map(|(i, (a, b))| format!("B{} display {}", i + 1, if a == b { "holds" } else { "fails" }))
        .collect();
    let plus_fail = (1..=ell_max)
        .map(|l| (l, bernoulli_identity_value(l, bernoulli)))
        .find(|(_, v)| !v.is_zero());
    let plus_fail = match plus_fail {
        Some((l, v)) => format!("the sum first fails at l = {l} with value {v}"),
        None => format!("the sum holds through l = {ell_max}"),
    };
    r.note(format!(
        "symbols read as B1 = -1/2 (the power sum over j < k); under B1 = +1/2: {}; {plus_fail}",
        plus_holds.join(", "),
    ))
}

/// `M̂ = Σ_ℓ (ℓ+1)^ℓ/(ℓ+1)! ((1-L)(1+(z+1)L))^{(ℓ+1)/L-ℓ} Π_{j<ℓ}(1 - jL/(ℓ+1)) L^ℓ`
/// as an `L`-series through `L^{l_order}` with `z`-series coefficients
/// through `z^{z_order}`.
pub fn mhat_closed_form(z_order: usize, l_order: usize) -> TruncSeries<TruncSeries<Q>> {
    let zc = |c: Q| TruncSeries::constant(Var::Z, z_order, c);
    let one_plus_z = TruncSeries::from_ints(Var::Z, z_order, &[1, 1]);
    // log u = log(1-L) + log(1+(1+z)L), through L^{l_order+1}
    let log_u = TruncSeries::from_fn(Var::L, l_order + 1, |i| {
        if i == 0 {
            return TruncSeries::zero_at(Var::Z, z_order);
        }
        let ii = q(i as i64);
        let alt = if i % 2 == 1 { q(1) } else { q(-1) };
        &one_plus_z.powi(i as i64).unwrap().scale(&(alt / &ii)) + &zc(q(-1) / &ii)
    });
    let over_l = log_u.divide_by_variable().unwrap();
    let mut total = TruncSeries::zero_at(Var::L, l_order);
    for ell in 0..=l_order {
        let l1 = q(ell as i64 + 1);
        let e = &over_l.scale(&l1) - &log_u.truncate(l_order).scale(&q(ell as i64));
        // The L⁰ coefficient of e is (ℓ+1)z; exponentiate it in the z ring.
        let c0 = e.coeff(0);
        let rest = &e - &TruncSeries::constant(Var::L, l_order, c0.clone());
        let mut s = rest.exp().unwrap().mul_coeff(&c0.exp().unwrap());
        for j in 0..ell {
            let f = TruncSeries::new(Var::L, l_order, vec![zc(q(1)), zc(-(q(j as i64) / &l1))]);
            s = &s * &f;
        }
        let pref = q_pow(&l1, ell as i64) / factorial_q(ell + 1);
        total = &total + &s.scale(&pref).shift(ell);
    }
    total
}

/// The closed form of `M̂` agrees with the oracle through `(z^{z_order}, L^{l_order})`.
pub fn check_closed_form(z_order: usize, l_order: usize) -> VerifyReport {
    let mut r = VerifyReport::new("closed form of M̂")
        .param("z_order", z_order)
        .param("l_order", l_order);
    let s = mhat_closed_form(z_order, l_order);
    let oracle = keel_oracle(z_order + 1, l_order);
    'outer: for zi in 0..=z_order {
        for li in 0..=l_order {
            let (got, want) = (s.coeff(li).coeff(zi), oracle.m[zi].coeff(li));
            if got != want {
                r.fail(format!("coefficient of z^{zi} L^{li}: {got} != {want}"));
                break 'outer;
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qf;

    #[test]
    fn vandermonde() {
        assert_eq!(vandermonde_sides(3, 2), (q(15), q(15)));
        for w in 1..6 {
            assert_eq!(vandermonde_sides(1, w), (q(1), q(1)));
        }
        assert!(check_vandermonde_conv(7, 5).passed);
    }

    #[test]
    fn lagrange_pow() {
        assert!(check_lagrange_pow(1, 1, 6).passed);
        assert!(check_lagrange_pow(3, 3, 8).passed);
        assert_eq!(lagrange_pow_lhs(4, 2, 0).coeff(0), q(1));
    }

    #[test]
    fn e_identity() {
        let e3 = e_poly(3).scale(&q(3));
        let want = &LPoly::linear(q(1), qf(-1, 4)) * &LPoly::linear(q(1), qf(-1, 2));
        assert_eq!(e3, want.scale(&q(8)));
        assert!(check_e_identity(1).passed);
        assert!(check_e_identity(3).passed);
    }

    #[test]
    fn initial_rows() {
        let rows = [
            vec![q(1), q(-1), qf(1, 2), qf(-2, 3), qf(13, 24)],
            vec![q(0), q(1), q(-2), q(3), qf(-13, 3)],
            vec![q(0), q(0), qf(3, 2), q(-5), qf(45, 4)],
            vec![q(0), q(0), q(0), qf(8, 3), qf(-38, 3)],
        ];
        for (l, want) in rows.iter().enumerate() {
            let got: Vec<Q> = (0..=4).map(|i| initial_condition_row(l, 4).coeff(i)).collect();
            assert_eq!(&got, want, "row {l}");
        }
        assert!(check_initial_condition(1).passed);
        assert!(check_initial_condition(8).passed);
    }

    #[test]
    fn bernoulli_forms() {
        let r = check_bernoulli_identities(5);
        assert!(r.passed, "{r}");
        let plus = bernoulli_displays(bernoulli);
        assert_eq!(plus[1].1, qf(1, 6));
        assert_ne!(plus[0].0, plus[0].1);
    }

    #[test]
    fn closed_form_small() {
        let r = check_closed_form(6, 4);
        assert!(r.passed, "{r}");
    }
}
