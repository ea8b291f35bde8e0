//! Tree-function expressions: the series `T(t) = Σ n^{n-1} tⁿ/n!`, the
//! polynomials `Fₘ(z, τ)`, the reconstruction of `M̂` from `T(e^z L)`, the
//! Stirling-column numerators `σₐ(x)` and the trace-diagonal polynomials
//! `aₙ(k)`.

use num_traits::Signed;

use crate::classes::{euler_char, keel_oracle, stirling_trace, Formula};
use crate::combinat::{factorial, factorial_q, stirling_second};
use crate::poly::{BiPoly, EllPoly, ZPoly};
use crate::ppoly::p_polynomial;
use crate::report::VerifyReport;
use crate::ring::{q, q_pow, qi, Ring, Q};
use crate::series::{TruncSeries, Var};

/// `T(t) = Σ_{n≥1} n^{n-1} tⁿ / n!` through `t^{order}`; asserts
/// `T = t·e^T` to that order.
pub fn tree_series(order: usize) -> TruncSeries<Q> {
    assert!(order >= 1);
    let t = TruncSeries::from_fn(Var::T, order, |n| {
        if n == 0 {
            Q::zero()
        } else {
            q_pow(&q(n as i64), n as i64 - 1) / factorial_q(n)
        }
    });
    let rhs = (&TruncSeries::variable(Var::T, order) * &t.exp().unwrap()).truncate(order);
    assert_eq!(t, rhs, "tree series fails T = t e^T");
    t
}

/// Extra `τ` orders examined past `3m-1` when checking that `Fₘ` terminates.
pub const F_WINDOW: usize = 4;

/// `Fₘ(z, τ)`; `F₀` is not a polynomial but `1/(1-τ)`.
#[derive(Clone, Debug, PartialEq)]
pub enum FmPoly {
    /// `F₀ = 1/(1-τ)`.
    Geometric,
    /// Outer variable `τ`, coefficients polynomials in `z`.
    Poly { m: usize, poly: BiPoly },
}

impl FmPoly {
    pub fn poly(&self) -> Option<&BiPoly> {
        match self {
            FmPoly::Geometric => None,
            FmPoly::Poly { poly, .. } => Some(poly),
        }
    }

    /// Coefficient of `zʲ` as a polynomial in `τ`.
    pub fn z_coeff(&self, j: usize) -> EllPoly {
        let p = self.poly().expect("F₀ has no polynomial form");
        EllPoly::new(p.coeffs().iter().map(|c| c.coeff(j)).collect())
    }
}

/// `Σ_{ℓ≤W} p⁽ᵐ⁺ˡ⁾ₘ(z) (1-τ)^{2m-1} e^{-(ℓ+1)τ} τ^ℓ` as a `τ`-series through
/// `τ^W` with coefficients in `Q[z]`.
pub fn f_m_series(m: usize, w: usize) -> TruncSeries<ZPoly> {
    let one_minus = TruncSeries::new(Var::TAU, w, vec![ZPoly::one(), ZPoly::constant(q(-1))])
        .powi(2 * m as i64 - 1)
        .unwrap();
    let mut acc = TruncSeries::zero_at(Var::TAU, w);
    for ell in 0..=w {
        let a = -q(ell as i64 + 1);
        let e = TruncSeries::from_fn(Var::TAU, w, |i| ZPoly::constant(q_pow(&a, i as i64) / factorial_q(i)));
        let p = p_polynomial(m + ell, m);
        let term = e.shift(ell).mul_coeff(&p);
        acc = &acc + &term;
    }
    &acc * &one_minus
}

/// `Fₘ(z, τ)` for `m ≥ 1`, from its congruence modulo `τ^{3m}`. The series is
/// computed [`F_WINDOW`] orders further and must vanish there.
pub fn f_m_polynomial(m: usize) -> FmPoly {
    if m == 0 {
        return FmPoly::Geometric;
    }
    let top = 3 * m - 1;
    let s = f_m_series(m, top + F_WINDOW);
    for i in (top + 1)..=(top + F_WINDOW) {
        assert!(s.coeff(i).is_zero(), "F_{m} does not terminate: τ^{i} coefficient is nonzero");
    }
    let poly = BiPoly::new(s.coeffs().to_vec());
    for c in poly.coeffs() {
        assert!(c.degree().map_or(true, |d| d <= 2 * m), "F_{m} has z-degree above 2m");
    }
    FmPoly::Poly { m, poly }
}

/// `M̂` through `(z^{n_max-1}, L^{l_order})` from
/// `M̂ = (T/L) Σ_{m≥0} (-1)ᵐ Fₘ(z, T) (1-T)^{1-2m} Lᵐ`, `T = T(e^z L)`,
/// summing `m ≤ m_max`. The `m = 0` term is `1`.
///
/// Returned as an `L`-series with `z`-series coefficients.
pub fn mhat_tree_series(n_max: usize, l_order: usize, m_max: usize) -> TruncSeries<TruncSeries<Q>> {
    let zo = n_max - 1;
    let exp_nz = |n: usize| TruncSeries::from_fn(Var::Z, zo, |i| q_pow(&q(n as i64), i as i64) / factorial_q(i));
    // T/L = Σ_{n≥1} n^{n-1} e^{nz} L^{n-1} / n!
    let t_over_l = TruncSeries::new(
        Var::L,
        l_order,
        (1..=l_order + 1)
            .map(|n| exp_nz(n).scale(&(q_pow(&q(n as i64), n as i64 - 1) / factorial_q(n))))
            .collect(),
    );
    let t = t_over_l.shift(1);
    let one = TruncSeries::one_at(Var::L, l_order);
    let one_minus_t = &one - &t;
    let mut bracket = one.clone();
    for m in 1..=m_max {
        let fm = f_m_polynomial(m);
        let poly = fm.poly().unwrap();
        // Horner in τ = T
        let mut val = TruncSeries::zero_at(Var::L, l_order);
        for c in poly.coeffs().iter().rev() {
            let cz = TruncSeries::from_poly(Var::Z, zo, c);
            val = &(&val * &t) + &TruncSeries::constant(Var::L, l_order, cz);
        }
        let term = (&val * &one_minus_t.powi(1 - 2 * m as i64).unwrap()).shift(m);
        bracket = if m % 2 == 0 { &bracket + &term } else { &bracket - &term };
    }
    &t_over_l * &bracket
}

/// Compares [`mhat_tree_series`] with the oracle through
/// `(z^{n_max-1}, L^{l_order})`, and checks that one more `m` changes nothing.
pub fn mhat_from_tree(n_max: usize, l_order: usize, m_max: usize) -> (TruncSeries<TruncSeries<Q>>, VerifyReport) {
    assert!(m_max >= l_order, "need m_max >= l_order");
    let mut report = VerifyReport::new("tree-function reconstruction")
        .param("n_max", n_max)
        .param("l_order", l_order)
        .param("m_max", m_max);
    let s = mhat_tree_series(n_max, l_order, m_max);
    let s_next = mhat_tree_series(n_max, l_order, m_max + 1);
    report.check(s == s_next, || format!("not stable when m_max grows to {}", m_max + 1));
    let oracle = keel_oracle(n_max, l_order);
    'outer: for r in 0..n_max {
        for i in 0..=l_order {
            let got = s.coeff(i).coeff(r);
            let want = oracle.m[r].coeff(i);
            if got != want {
                report.fail(format!("coefficient of z^{r} L^{i}: tree gives {got}, oracle {want}"));
                break 'outer;
            }
        }
    }
    (s, report)
}

/// `σₐ(x)`: `σ₁ = 1` and
/// `σₐ = (1-x)(σₐ₋₁ + x σₐ₋₁′) + (2a-3) x σₐ₋₁`. Degree `a-2` for `a ≥ 2`,
/// leading coefficient `(a-1)!`, positive integer coefficients.
pub fn sigma_poly(a: usize) -> EllPoly {
    assert!(a >= 1);
    let x = EllPoly::x();
    let one_minus_x = EllPoly::linear(q(1), q(-1));
    let mut s = EllPoly::one();
    for b in 2..=a {
        let inner = &s + &(&x * &s.derivative());
        s = &(&one_minus_x * &inner) + &(&x * &s).scale(&q(2 * b as i64 - 3));
    }
    if a >= 2 {
        assert_eq!(s.degree(), Some(a - 2), "σ_{a} has the wrong degree");
        assert_eq!(s.leading(), Some(&qi(&factorial(a - 1))), "σ_{a} has the wrong leading coefficient");
    }
    assert!(
        s.coeffs().iter().all(|c| c.is_integer() && c.is_positive()),
        "σ_{a} has a coefficient that is not a positive integer"
    );
    s
}

/// `Σ_{N≤order} S(N+a, N+1) x^N · (1-x)^{2a-1}` through `x^{order}`.
pub fn sigma_generating(a: usize, order: usize) -> EllPoly {
    let col = EllPoly::new((0..=order).map(|n| qi(&stirling_second(n + a, n + 1))).collect());
    let f = EllPoly::linear(q(1), q(-1)).pow(2 * a as u32 - 1);
    col.mul_trunc(&f, order)
}

/// `aₙ(k) = Σ_ℓ b_ℓ C(k+n-ℓ-2, n-ℓ-2)`, where `[M̄₀,ₙ] = Σ b_ℓ (1-L)^ℓ`.
/// Its value at `k` is the `L^k` coefficient of the shifted trace.
pub fn a_n_polynomial(n: usize) -> EllPoly {
    assert!(n >= 3);
    let class = Formula::Keel.class(n).poly;
    let b = class.compose(&EllPoly::linear(q(1), q(-1)));
    assert_eq!(qi(&euler_char(n)), b.coeff(0), "b₀ is not the Euler characteristic");
    let mut acc = EllPoly::zero();
    for (ell, bl) in b.coeffs().iter().enumerate() {
        // C(k + c, c) = (k+1)⋯(k+c)/c!
        let c = n - ell - 2;
        let mut binom = EllPoly::one();
        for i in 1..=c {
            binom = &binom * &EllPoly::linear(q(i as i64), q(1));
        }
        acc = &acc + &binom.scale(&(bl / factorial_q(c)));
    }
    assert_eq!(acc.degree(), Some(n - 2), "a_{n} has the wrong degree");
    let (tr, _) = stirling_trace(n, 6.max(n - 3));
    for k in 0..=6 {
        assert_eq!(acc.eval(&q(k)), tr.coeff(k as usize), "a_{n}({k}) differs from the trace");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qf;

    #[test]
    fn tree() {
        let t = tree_series(4);
        assert_eq!(t.coeffs(), &[q(0), q(1), q(1), qf(3, 2), qf(8, 3)]);
        let g = TruncSeries::from_fn(Var::X, 8, |i| {
            if i == 0 {
                q(0)
            } else {
                q_pow(&q(-1), i as i64 - 1) / factorial_q(i - 1)
            }
        });
        let t8 = tree_series(8);
        for n in 1..=8 {
            assert_eq!(g.lagrange_invert(n).unwrap() / factorial_q(n), t8.coeff(n));
        }
    }

    #[test]
    fn f1_and_f2() {
        let f1 = f_m_polynomial(1);
        assert_eq!(f1.z_coeff(2), EllPoly::constant(qf(1, 2)));
        assert_eq!(f1.z_coeff(1), EllPoly::from_ints(&[1, 1]));
        assert_eq!(f1.z_coeff(0), EllPoly::new(vec![q(1), q(0), qf(1, 2)]));
        let f2 = f_m_polynomial(2);
        assert_eq!(f2.z_coeff(4), EllPoly::constant(qf(1, 8)));
        assert_eq!(f2.z_coeff(3), EllPoly::from_ints(&[5, 2, -1]).scale(&qf(1, 6)));
        assert_eq!(f2.z_coeff(0), EllPoly::from_ints(&[12, 24, -12, 8, -1, -4]).scale(&qf(1, 24)));
        assert_eq!(f_m_polynomial(0), FmPoly::Geometric);
    }

    #[test]
    fn reconstruction_small() {
        let (s, r) = mhat_from_tree(6, 3, 3);
        assert!(r.passed, "{r}");
        assert_eq!(s.coeff(0).coeff(0), q(1));
    }

    #[test]
    fn sigma() {
        assert_eq!(sigma_poly(1), EllPoly::one());
        assert_eq!(sigma_poly(2), EllPoly::one());
        assert_eq!(sigma_poly(4).leading(), Some(&q(6)));
        for a in 1..=6 {
            assert_eq!(sigma_generating(a, 20), sigma_poly(a), "a={a}");
        }
    }

    #[test]
    fn a6() {
        let want = EllPoly::new(vec![q(1), qf(29, 6), qf(97, 12), qf(17, 3), qf(17, 12)]);
        assert_eq!(a_n_polynomial(6), want);
    }
}
