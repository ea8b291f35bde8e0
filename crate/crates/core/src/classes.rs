//! Grothendieck classes of `M̄₀,ₙ` and their Betti numbers, by every route.
//!
//! The class is a polynomial in `L` of degree `n-3` whose coefficients are the
//! even Betti numbers. All routes below must agree exactly:
//!
//! * [`keel_oracle`]: coefficient recursion of the ODE for the generating
//!   function `M̂ = 1 + z + Σ_{n≥3} [M̄₀,ₙ] z^{n-1}/(n-1)!`. Ground truth.
//! * [`class_stirling`] / [`betti_stirling`]: double and triple sums of
//!   Stirling numbers of both kinds.
//! * [`class_ell_sum`]: a sum over `ℓ` of explicit `L`-series, each vanishing
//!   below `L^ℓ`.
//! * [`betti_bernoulli`]: the same `ℓ`-sum coefficientwise, with the power
//!   sums written through Bernoulli numbers.
//! * [`class_getzler`]: Lagrange inversion of Getzler's series.
//! * [`stirling_trace`]: a shifted trace of the product of the two Stirling
//!   matrices, times `(1-L)^{n-1}`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::combinat::{
    bernoulli_minus, binomial_usize, factorial_q, faulhaber_sum, stirling_first,
    stirling_second,
};
use crate::poly::LPoly;
use crate::report::VerifyReport;
use crate::ring::{q, q_pow, qi, Ring, Q};
use crate::series::{TruncSeries, Var};

/// `[M̄₀,ₙ]` as a polynomial in `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrothendieckClass {
    pub n: usize,
    pub poly: LPoly,
}

impl GrothendieckClass {
    /// Wraps `poly`; panics unless it has degree exactly `n-3`.
    pub fn new(n: usize, poly: LPoly) -> Self {
        assert!(n >= 3, "classes are defined for n >= 3");
        assert_eq!(
            poly.degree(),
            Some(n - 3),
            "class of M0,{n} must have degree {}: got {}",
            n - 3,
            poly.display("L")
        );
        GrothendieckClass { n, poly }
    }

    /// `rk H^{2ℓ}`; zero past the top degree.
    pub fn betti(&self, ell: usize) -> BigInt {
        let c = self.poly.coeff(ell);
        assert!(c.is_integer(), "non-integral Betti number");
        c.to_integer()
    }

    pub fn bettis(&self) -> Vec<BigInt> {
        (0..=self.n - 3).map(|l| self.betti(l)).collect()
    }

    /// Sum of the Betti numbers: the class at `L = 1`.
    pub fn euler_char(&self) -> BigInt {
        self.bettis().into_iter().sum()
    }

    /// Violations of: degree `n-3`, constant term one, positive integer
    /// coefficients, palindromic. Empty when the class is well formed.
    pub fn structural_defects(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.poly.degree() != Some(self.n - 3) {
            out.push(format!("degree {:?} != {}", self.poly.degree(), self.n - 3));
        }
        if self.poly.coeff(0) != q(1) {
            out.push(format!("constant term {}", self.poly.coeff(0)));
        }
        for (i, c) in self.poly.coeffs().iter().enumerate() {
            if !c.is_integer() || !c.is_positive() {
                out.push(format!("coefficient of L^{i} is {c}"));
            }
        }
        if !self.poly.is_palindromic() {
            out.push("not palindromic".into());
        }
        out
    }
}

impl fmt::Display for GrothendieckClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly.display("L"))
    }
}

/// Coefficients `m_r ∈ Q[L]` of `M̂ = Σ m_r z^r`, for `r ≤ z_order`, each
/// truncated after `L^{l_order}`.
#[derive(Clone, Debug, PartialEq)]
pub struct MHatSeries {
    pub z_order: usize,
    pub l_order: usize,
    pub m: Vec<LPoly>,
}

impl MHatSeries {
    /// `(n-1)! · m_{n-1}`
    pub fn class_poly(&self, n: usize) -> LPoly {
        assert!(n >= 1 && n - 1 <= self.z_order, "n = {n} outside the computed range");
        self.m[n - 1].scale(&factorial_q(n - 1))
    }

    pub fn class(&self, n: usize) -> GrothendieckClass {
        GrothendieckClass::new(n, self.class_poly(n))
    }

    /// `M̂` as a `z`-series with polynomial coefficients.
    pub fn to_series(&self) -> TruncSeries<LPoly> {
        TruncSeries::new(Var::Z, self.z_order, self.m.clone())
    }
}

/// Solves the ODE for `M̂` coefficientwise:
/// `(r+1) m_{r+1} = (1 - rL) m_r + L Σ_{i<r} (i+1) m_{i+1} m_{r-i}`, `m₀ = 1`.
///
/// Returns `m₀ … m_{n_max-1}`, so every class with `n ≤ n_max` is available.
/// The recursion is run without truncation; `L_order` only trims the output.
pub fn keel_oracle(n_max: usize, l_order: usize) -> MHatSeries {
    let z_order = n_max.max(3) - 1;
    let l = LPoly::x();
    let mut m: Vec<LPoly> = vec![LPoly::one()];
    for r in 0..z_order {
        let mut conv = LPoly::zero();
        for i in 0..r {
            conv = &conv + &(&m[i + 1] * &m[r - i]).scale(&q(i as i64 + 1));
        }
        let lin = LPoly::linear(q(1), q(-(r as i64)));
        let next = &(&lin * &m[r]) + &(&l * &conv);
        m.push(next.scale(&Q::new(1.into(), (r as i64 + 1).into())));
    }
    MHatSeries {
        z_order,
        l_order,
        m: m.into_iter().map(|p| p.truncate(l_order)).collect(),
    }
}

/// `(1 - L)^e` with every term above `L^{max_deg}` dropped.
pub fn one_minus_l_pow(e: usize, max_deg: usize) -> LPoly {
    LPoly::new(
        (0..=e.min(max_deg))
            .map(|i| {
                let c = qi(&binomial_usize(e, i));
                if i % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect(),
    )
}

/// Multiplies a series known to `L^{order}` by `(1-L)^{n-1}` and checks that
/// the product is a polynomial of degree `≤ n-3` within the visible window.
fn reduce_to_class(n: usize, series: &LPoly, order: usize, route: &str) -> GrothendieckClass {
    let prod = series.mul_trunc(&one_minus_l_pow(n - 1, order), order);
    for i in (n - 2)..=order {
        assert!(
            prod.coeff(i).is_zero(),
            "{route}: (1-L)^{} times the series has a nonzero L^{i} term for n = {n}",
            n - 1
        );
    }
    GrothendieckClass::new(n, prod)
}

/// Stirling double sum
/// `Σ_k Σ_j s(k+n-1, k+n-1-j) S(k+n-1-j, k+1) L^{k+j}` through `L^{order}`.
/// Only `j ≤ n-2` contributes.
pub fn stirling_double_sum(n: usize, order: usize) -> LPoly {
    let mut c = vec![Q::zero(); order + 1];
    for k in 0..=order {
        for j in 0..=(n - 2).min(order - k) {
            let a = k + n - 1;
            let t = stirling_first(a, a - j) * stirling_second(a - j, k + 1);
            c[k + j] += Q::from_integer(t);
        }
    }
    LPoly::new(c)
}

/// `[M̄₀,ₙ] = (1-L)^{n-1} Σ_{k,j} s(k+n-1, k+n-1-j) S(k+n-1-j, k+1) L^{k+j}`.
///
/// The double sum is taken through `L^{2n-5}`; the product must vanish in
/// degrees `n-2 … 2n-5`.
pub fn class_stirling(n: usize) -> GrothendieckClass {
    assert!(n >= 3);
    let order = 2 * n - 5;
    reduce_to_class(n, &stirling_double_sum(n, order), order, "stirling")
}

/// `rk H^{2ℓ}` as the triple sum
/// `Σ_{j+k ≤ ℓ} (-1)^{ℓ-j-k} C(n-1, ℓ-j-k) s(k+n-1, k+n-1-j) S(k+n-1-j, k+1)`.
pub fn betti_stirling(n: usize, ell: usize) -> BigInt {
    assert!(n >= 3);
    if ell > n - 3 {
        return BigInt::from(0);
    }
    let mut acc = BigInt::from(0);
    for j in 0..=ell.min(n - 2) {
        for k in 0..=(ell - j) {
            let e = ell - j - k;
            let a = k + n - 1;
            let t = binomial_usize(n - 1, e) * stirling_first(a, a - j) * stirling_second(a - j, k + 1);
            if e % 2 == 1 {
                acc -= t;
            } else {
                acc += t;
            }
        }
    }
    acc
}

/// The `ℓ`-th summand of the `ℓ`-sum formula as an `L`-series through
/// `L^{order}`:
/// `(ℓ+1)^{ℓ+n-1}/(ℓ+1)! · (1-L²)^{(ℓ+1)/L} (1-L)^{-ℓ} (1+L)^{-(ℓ+n-1)}
///  · Π_{j<ℓ+n-1} (1 - jL/(ℓ+1)) · L^ℓ`.
///
/// It vanishes below `L^ℓ`.
pub fn ell_summand(n: usize, ell: usize, order: usize) -> TruncSeries<Q> {
    let var = Var::L;
    if ell > order {
        return TruncSeries::zero_at(var, order);
    }
    let w = order - ell;
    let l1 = q(ell as i64 + 1);
    let log_1ml2 = TruncSeries::from_fn(var, w + 1, |i| {
        if i % 2 == 0 && i > 0 {
            q(-2) / q(i as i64)
        } else {
            Q::zero()
        }
    });
    let log_1ml = TruncSeries::from_fn(var, w, |i| if i == 0 { Q::zero() } else { q(-1) / q(i as i64) });
    let log_1pl = TruncSeries::from_fn(var, w, |i| {
        if i == 0 {
            Q::zero()
        } else if i % 2 == 1 {
            q(1) / q(i as i64)
        } else {
            q(-1) / q(i as i64)
        }
    });
    // (ℓ+1)/L · log(1-L²) has no pole since log(1-L²) starts at L².
    let exponent = &(&log_1ml2.divide_by_variable().unwrap().scale(&l1) - &log_1ml.scale(&q(ell as i64)))
        - &log_1pl.scale(&q((ell + n - 1) as i64));
    let mut s = exponent.exp().expect("exponent has zero constant term");
    let mut prod = LPoly::one();
    for j in 0..(ell + n - 1) {
        prod = prod.mul_trunc(&LPoly::linear(q(1), -(q(j as i64) / &l1)), w);
    }
    s = &s * &TruncSeries::from_poly(var, w, &prod);
    let pref = q_pow(&l1, (ell + n - 1) as i64) / factorial_q(ell + 1);
    let s = TruncSeries::new(var, order, s.coeffs().to_vec()).scale(&pref);
    s.shift(ell)
}

/// Class from the `ℓ`-sum, together with the summands `ℓ = 0 … n-3`, each
/// as a series through `L^{n-3}`.
pub fn class_ell_sum(n: usize) -> (GrothendieckClass, Vec<TruncSeries<Q>>) {
    assert!(n >= 3);
    let order = n - 3;
    let summands: Vec<TruncSeries<Q>> = (0..=order).map(|l| ell_summand(n, l, order)).collect();
    for (l, s) in summands.iter().enumerate() {
        assert!(
            s.valuation().map_or(true, |v| v >= l),
            "ell-sum summand {l} for n = {n} does not vanish below L^{l}"
        );
    }
    let total = summands
        .iter()
        .fold(TruncSeries::zero_at(Var::L, order), |acc, s| &acc + s);
    (GrothendieckClass::new(n, total.to_poly()), summands)
}

/// `C_{nki}` from the power sum `Σ_{j ≤ k+n-2} jⁱ`.
pub fn c_nki_power_sum(n: usize, k: usize, i: usize) -> Q {
    let (n_, k_, i_) = (n as i64, k as i64, i as i64);
    let sign = if i % 2 == 0 { 1 } else { -1 };
    let head = q(sign * (2 * k_ * i_ + n_ * i_ + k_ + n_ - 1) + k_ - i_) / q(i_ * (i_ + 1));
    let top = k + n;
    let sum = if top >= 2 { faulhaber_sum((top - 2) as u64, i as u32) } else { BigInt::from(0) };
    head - qi(&sum) / (q(i_) * q_pow(&q(k_ + 1), i_))
}

/// `C_{nki}` with the power sum replaced by its Bernoulli expansion
/// `Σ_{j<N} jⁱ = (1/(i+1)) Σ_j C(i+1, j) B⁻_j N^{i+1-j}`, `N = k+n-1`,
/// where `B⁻_j` is the Bernoulli number with `B₁ = -1/2`.
pub fn c_nki_bernoulli(n: usize, k: usize, i: usize) -> Q {
    let (n_, k_, i_) = (n as i64, k as i64, i as i64);
    let sign = if i % 2 == 0 { 1 } else { -1 };
    let big_n = q(k_ + n_ - 1);
    let mut sum = Q::zero();
    for j in 0..=i {
        sum += qi(&binomial_usize(i + 1, j)) * bernoulli_minus(j) * q_pow(&big_n, (i - j + 1) as i64);
    }
    let head = q(sign * (2 * k_ * i_ + n_ * i_ + k_ + n_ - 1) + k_ - i_);
    (head - sum / q_pow(&q(k_ + 1), i_)) / q(i_ * (i_ + 1))
}

/// `[L^r] exp(Σ_{i≥1} cᵢ Lⁱ)` by the exponential recurrence; `c[0]` is ignored.
pub fn exp_coeff(c: &[Q], r: usize) -> Q {
    let s = TruncSeries::from_fn(Var::L, r, |i| if i == 0 { Q::zero() } else { c[i].clone() });
    s.exp().unwrap().coeff(r)
}

/// `[L^r] exp(Σ cᵢ Lⁱ)` as a sum over compositions `r = r₁ + … + r_s` of
/// `Π c_{rᵢ} / s!`.
pub fn exp_coeff_compositions(c: &[Q], r: usize) -> Q {
    fn walk(c: &[Q], left: usize, parts: usize, prod: Q, acc: &mut Q) {
        if left == 0 {
            *acc += prod / factorial_q(parts);
            return;
        }
        for first in 1..=left {
            walk(c, left - first, parts + 1, &prod * &c[first], acc);
        }
    }
    let mut acc = Q::zero();
    walk(c, r, 0, q(1), &mut acc);
    acc
}

/// `rk H^{2ℓ} = Σ_{k ≤ ℓ} (k+1)^{k+n-1}/(k+1)! · [L^{ℓ-k}] exp(Σᵢ C_{nki} Lⁱ)`.
///
/// Each `C_{nki}` is computed from the power sum and from its Bernoulli
/// form; the two must agree. For `ℓ - k ≤ 6` the exponential coefficient is
/// also checked against the composition sum.
pub fn betti_bernoulli(n: usize, ell: usize) -> BigInt {
    if n < 3 {
        return BigInt::from(if ell == 0 { 1 } else { 0 });
    }
    let mut acc = Q::zero();
    for k in 0..=ell {
        let r = ell - k;
        let mut c = vec![Q::zero(); r + 1];
        for (i, ci) in c.iter_mut().enumerate().skip(1) {
            let direct = c_nki_power_sum(n, k, i);
            let bern = c_nki_bernoulli(n, k, i);
            assert_eq!(direct, bern, "C_(n={n},k={k},i={i}) disagrees between power sum and Bernoulli form");
            *ci = direct;
        }
        let e = exp_coeff(&c, r);
        if r <= 6 {
            assert_eq!(e, exp_coeff_compositions(&c, r), "composition sum disagrees at n={n} k={k}");
        }
        let k1 = q(k as i64 + 1);
        acc += q_pow(&k1, (k + n - 1) as i64) / factorial_q(k + 1) * e;
    }
    assert!(acc.is_integer(), "non-integral Betti number from the Bernoulli route");
    acc.to_integer()
}

/// Class from [`betti_bernoulli`], one coefficient at a time.
pub fn class_bernoulli(n: usize) -> GrothendieckClass {
    let c = (0..=n - 3).map(|l| qi(&betti_bernoulli(n, l))).collect();
    GrothendieckClass::new(n, LPoly::new(c))
}

/// `(1+x)^L` as an `x`-series over `Q[L]`.
pub fn one_plus_x_pow_l(order: usize) -> TruncSeries<LPoly> {
    let base = TruncSeries::new(Var::X, order, vec![LPoly::one(), LPoly::one()]);
    base.pow(&LPoly::x()).expect("constant term one")
}

/// Denominator `1 + L²x - (1+x)^L`, divided by `L(L-1)x`. A unit series.
fn getzler_unit(order: usize) -> TruncSeries<LPoly> {
    let l = LPoly::x();
    let l2 = &l * &l;
    let lin = TruncSeries::new(Var::X, order + 1, vec![LPoly::one(), l2]);
    let den = &lin - &one_plus_x_pow_l(order + 1);
    let den = den.divide_by_variable().expect("denominator vanishes at x = 0");
    let ll1 = LPoly::new(vec![q(0), q(-1), q(1)]);
    TruncSeries::new(
        Var::X,
        order,
        den.coeffs().iter().map(|c| c.exact_div(&ll1)).collect(),
    )
}

/// Getzler's series `h(x) = L(L-1)x / (1 + L²x - (1+x)^L)` divided by `x`,
/// which is a unit series with polynomial coefficients.
pub fn getzler_series(order: usize) -> TruncSeries<LPoly> {
    getzler_unit(order).inv().expect("unit series")
}

/// `[M̄₀,ₙ] = (n-2)! · [x^{n-2}] (h(x)/x)^{n-1}` by Lagrange inversion.
pub fn class_getzler(n: usize) -> GrothendieckClass {
    assert!(n >= 3);
    let h = getzler_series(n - 2);
    let c = h.powi((n - 1) as i64).unwrap().coeff(n - 2);
    GrothendieckClass::new(n, c.scale(&factorial_q(n - 2)))
}

/// Entry `(a, b)` of `1_L 𝔰 1_{L⁻¹} 𝔖 1_L`: `Σ_c s(a,c) S(c,b) L^{a+b-c-1}`,
/// truncated after `L^{order}`. Indices start at one.
pub fn stirling_matrix_entry(a: usize, b: usize, order: usize) -> LPoly {
    let mut c = vec![Q::zero(); order + 1];
    for cc in b..=a {
        let p = a + b - cc - 1;
        if p <= order {
            c[p] += Q::from_integer(stirling_first(a, cc) * stirling_second(cc, b));
        }
    }
    LPoly::new(c)
}

/// Shifted trace `tr_{n-2}`: the sum of entries `(k+n-1, k+1)`, `k ≥ 0`, as
/// an `L`-series through `L^{order}`, and the class `(1-L)^{n-1}·trace`.
///
/// Entry `(k+n-1, k+1)` starts at `L^k`, so `k ≤ order` suffices.
pub fn stirling_trace(n: usize, order: usize) -> (TruncSeries<Q>, GrothendieckClass) {
    assert!(n >= 3 && order >= n - 3, "need n >= 3 and order >= n-3");
    let mut tr = LPoly::zero();
    for k in 0..=order {
        tr = &tr + &stirling_matrix_entry(k + n - 1, k + 1, order);
    }
    let class = reduce_to_class(n, &tr, order, "trace");
    (TruncSeries::from_poly(Var::L, order, &tr), class)
}

/// Class via the shifted trace, taken through `L^{2n-5}`.
pub fn class_trace(n: usize) -> GrothendieckClass {
    stirling_trace(n, 2 * n - 5).1
}

/// `M̂^L - L²M̂ - (1-L)(1+(z+1)L)` for the given `M̂`, through its `z`-order.
pub fn functional_equation_lhs(mhat: &TruncSeries<LPoly>) -> TruncSeries<LPoly> {
    let order = mhat.order();
    let l = LPoly::x();
    let powered = mhat.pow(&l).expect("M̂ has constant term one");
    let one_minus_l = LPoly::linear(q(1), q(-1));
    let rhs = TruncSeries::new(
        Var::Z,
        order,
        vec![&one_minus_l * &LPoly::linear(q(1), q(1)), &one_minus_l * &l],
    );
    &(&powered - &mhat.mul_coeff(&(&l * &l))) - &rhs
}

/// Residual check of the functional equation for a given `M̂`: every `z`
/// coefficient must vanish.
pub fn functional_equation_report(mhat: &TruncSeries<LPoly>) -> VerifyReport {
    let res = functional_equation_lhs(mhat);
    let mut report = VerifyReport::new("functional equation").param("z_order", mhat.order());
    if let Some(r) = res.valuation() {
        let c = res.coeff(r);
        let i = c.coeffs().iter().position(|x| !x.is_zero()).unwrap_or(0);
        report.fail(format!("coefficient of z^{r} L^{i} is {}", c.coeff(i)));
    }
    report
}

/// The oracle's `M̂` must satisfy the functional equation through `z^{n_max-1}`.
pub fn functional_equation_residual(n_max: usize) -> VerifyReport {
    let mhat = keel_oracle(n_max, n_max).to_series();
    functional_equation_report(&mhat).param("n_max", n_max)
}

/// Euler characteristic of `M̄₀,ₙ`: the class at `L = 1`.
pub fn euler_char(n: usize) -> BigInt {
    keel_oracle(n, n).class(n).euler_char()
}

/// `χ̂ = Σ χ(M̄₀,ₙ) z^{n-1}/(n-1)!` from `χ̂' = χ̂/(2 + z - χ̂)`, `χ̂(0) = 1`,
/// through `z^{order}`. Coefficientwise this is the oracle recursion at `L = 1`.
pub fn chi_series(order: usize) -> TruncSeries<Q> {
    let mut c: Vec<Q> = vec![q(1)];
    for r in 0..order {
        let mut acc = q(1 - r as i64) * &c[r];
        for i in 0..r {
            acc += q(i as i64 + 1) * &c[i + 1] * &c[r - i];
        }
        c.push(acc / q(r as i64 + 1));
    }
    TruncSeries::new(Var::Z, order, c)
}

/// `(n-1)!`-scaled coefficients of [`chi_series`].
pub fn chi_values(order: usize) -> Vec<BigInt> {
    let s = chi_series(order);
    (0..=order)
        .map(|r| (s.coeff(r) * factorial_q(r)).to_integer())
        .collect()
}

/// Named route to a class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Stirling,
    Keel,
    EllSum,
    Getzler,
    Trace,
    Bernoulli,
}

impl Formula {
    /// The five routes that produce a whole class at once.
    pub const CLASS_ROUTES: [Formula; 5] =
        [Formula::Stirling, Formula::Keel, Formula::EllSum, Formula::Getzler, Formula::Trace];

    pub fn name(self) -> &'static str {
        match self {
            Formula::Stirling => "stirling",
            Formula::Keel => "keel",
            Formula::EllSum => "ellsum",
            Formula::Getzler => "getzler",
            Formula::Trace => "trace",
            Formula::Bernoulli => "bernoulli",
        }
    }

    pub fn class(self, n: usize) -> GrothendieckClass {
        match self {
            Formula::Stirling => class_stirling(n),
            Formula::Keel => keel_oracle(n, n).class(n),
            Formula::EllSum => class_ell_sum(n).0,
            Formula::Getzler => class_getzler(n),
            Formula::Trace => class_trace(n),
            Formula::Bernoulli => class_bernoulli(n),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly_q(v: &[i64]) -> LPoly {
        LPoly::from_ints(v)
    }
    use crate::ring::qf;

    #[test]
    fn oracle_small_classes() {
        let m = keel_oracle(7, 7);
        assert_eq!(m.m[1], poly_q(&[1]));
        assert_eq!(m.m[2], LPoly::constant(qf(1, 2)));
        assert_eq!(m.class_poly(3), poly_q(&[1]));
        assert_eq!(m.class_poly(4), poly_q(&[1, 1]));
        assert_eq!(m.class_poly(5), poly_q(&[1, 5, 1]));
        assert_eq!(m.class_poly(6), poly_q(&[1, 16, 16, 1]));
    }

    #[test]
    fn stirling_routes() {
        assert_eq!(class_stirling(3).poly, poly_q(&[1]));
        assert_eq!(class_stirling(6).poly, poly_q(&[1, 16, 16, 1]));
        assert_eq!(class_stirling(10).betti(3), BigInt::from(63173));
        assert_eq!(betti_stirling(5, 3), BigInt::from(0));
        assert_eq!(betti_stirling(10, 3), BigInt::from(63173));
        for n in 3..12 {
            assert_eq!(betti_stirling(n, 0), BigInt::from(1));
        }
    }

    #[test]
    fn ell_sum_rows() {
        let s0 = ell_summand(6, 0, 6);
        let want0 = [q(1), q(-16), qf(231, 2), qf(-3109, 6), qf(40549, 24), qf(-265223, 60), qf(7126141, 720)];
        assert_eq!(s0.coeffs(), &want0);
        let s2 = ell_summand(6, 2, 6);
        assert_eq!(s2.coeff(2), qf(729, 2));
        assert_eq!(s2.coeff(1), q(0));
        let (c, _) = class_ell_sum(6);
        assert_eq!(c.poly, poly_q(&[1, 16, 16, 1]));
    }

    #[test]
    fn bernoulli_route() {
        assert_eq!(betti_bernoulli(10, 3), BigInt::from(63173));
        assert_eq!(betti_bernoulli(5, 3), BigInt::from(0));
        assert_eq!(betti_bernoulli(2, 0), BigInt::from(1));
        assert_eq!(betti_bernoulli(1, 1), BigInt::from(0));
        assert_eq!(class_bernoulli(6).poly, poly_q(&[1, 16, 16, 1]));
    }

    #[test]
    fn getzler_route() {
        assert_eq!(class_getzler(3).poly, poly_q(&[1]));
        assert_eq!(class_getzler(4).poly, poly_q(&[1, 1]));
        assert_eq!(class_getzler(6).poly, poly_q(&[1, 16, 16, 1]));
    }

    #[test]
    fn trace_route() {
        let (tr, class) = stirling_trace(6, 4);
        assert_eq!(tr.coeffs(), &[q(1), q(21), q(111), q(356), q(875)]);
        assert_eq!(class.poly, poly_q(&[1, 16, 16, 1]));
        assert_eq!(stirling_trace(3, 3).0.coeff(0), q(1));
    }

    #[test]
    fn functional_equation() {
        assert!(functional_equation_residual(3).passed);
        assert!(functional_equation_residual(8).passed);
        let mhat = keel_oracle(8, 8).to_series();
        let mut m = keel_oracle(8, 8).m;
        m[5] = &m[5] + &LPoly::one();
        let bumped = TruncSeries::new(Var::Z, mhat.order(), m);
        let r = functional_equation_report(&bumped);
        assert!(!r.passed);
        assert!(r.witness.unwrap().starts_with("coefficient of z^5"));
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(chi_values(6), [1, 1, 1, 2, 7, 34, 213].map(BigInt::from));
        assert_eq!(euler_char(6), BigInt::from(34));
        assert_eq!(euler_char(3), BigInt::from(1));
    }
}
