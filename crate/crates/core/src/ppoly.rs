//! The polynomial families `p⁽ᵏ⁾ₘ(z)`, `Δₘⱼ(ℓ)`, `βₘ(ℓ)`, `Γₘⱼ(ℓ)`, the
//! Betti formula through `Γ`, and the ultra-log-concavity certifier.
//!
//! `Δ` and `β` are computed symbolically in `ℓ`:
//!
//! * `Σ Δₘⱼ(ℓ) zʲ uᵐ = exp(Σ_{i≥1} Σ_{j≤i+1} δᵢⱼ(ℓ) zʲ uⁱ)` with `δᵢⱼ` in
//!   closed form;
//! * `Σ βₘ(ℓ) uᵐ = Π_{j<ℓ} (1 + ju) = exp(Σᵢ (-1)^{i+1} Pᵢ(ℓ) uⁱ / i)` where
//!   `Pᵢ(ℓ) = Σ_{j<ℓ} jⁱ` is written with Bernoulli numbers;
//! * `Γₘⱼ = Σ_{m₁+m₂=m} Δ_{m₁j} β_{m₂}`;
//! * `c⁽ᵏ⁾ₘⱼ = (k-m+1)^{k-2m+j} / (k-m+1)! · Γₘⱼ(k-m)`.
//!
//! The tables behind [`delta_series`] and [`beta_poly`] are filled
//! incrementally and shared process-wide.

use std::collections::BTreeSet;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::classes::keel_oracle;
use crate::combinat::{bernoulli_minus, binomial_usize, factorial_q};
use crate::poly::{EllPoly, Poly, ZPoly};
use crate::report::VerifyReport;
use crate::ring::{q, q_pow, qi, Ring, Q};
use crate::series::{exp_step, TruncSeries, Var};

/// Polynomial in `z` with coefficients in `Q[ℓ]`.
pub type ZEllPoly = Poly<EllPoly>;

/// `δᵢⱼ(ℓ)`, the coefficient of `zʲuⁱ` in the exponent generating `Δ`.
pub fn delta_exponent_coeff(i: usize, j: usize) -> EllPoly {
    assert!(i >= 1);
    let l1 = EllPoly::linear(q(1), q(1));
    let ii = i as i64;
    if j == 0 {
        if i % 2 == 1 {
            l1.pow(i as u32 + 1).scale(&(q(2) / q(ii + 1)))
        } else {
            (&l1.pow(i as u32) * &EllPoly::x()).scale(&(q(2) / q(ii)))
        }
    } else if j <= i {
        // ℓ(i-j) + i + ℓ + ℓi
        let lin = EllPoly::linear(q(ii), q(2 * ii - j as i64 + 1));
        (&l1.pow((i - j) as u32) * &lin).scale(&(qi(&binomial_usize(i + 1, j)) / q(ii * (ii + 1))))
    } else if j == i + 1 {
        EllPoly::constant(q(1) / q(ii + 1))
    } else {
        EllPoly::zero()
    }
}

/// `Σⱼ δᵢⱼ(ℓ) zʲ`.
fn delta_exponent_term(i: usize) -> ZEllPoly {
    ZEllPoly::new((0..=i + 1).map(|j| delta_exponent_coeff(i, j)).collect())
}

/// `Pᵢ(ℓ) = Σ_{j<ℓ} jⁱ = (1/(i+1)) Σ_j C(i+1, j) B⁻_j ℓ^{i+1-j}`.
pub fn power_sum_poly(i: usize) -> EllPoly {
    let mut c = vec![Q::zero(); i + 2];
    for j in 0..=i {
        c[i + 1 - j] = qi(&binomial_usize(i + 1, j)) * bernoulli_minus(j) / q(i as i64 + 1);
    }
    EllPoly::new(c)
}

#[derive(Default)]
struct Tables {
    delta_weighted: Vec<ZEllPoly>,
    delta: Vec<ZEllPoly>,
    beta_weighted: Vec<EllPoly>,
    beta: Vec<EllPoly>,
}

impl Tables {
    fn extend_delta(&mut self, m: usize) {
        while self.delta_weighted.len() <= m {
            let i = self.delta_weighted.len();
            let w = if i == 0 {
                ZEllPoly::zero()
            } else {
                delta_exponent_term(i).scale(&q(i as i64))
            };
            self.delta_weighted.push(w);
        }
        if self.delta.is_empty() {
            self.delta.push(ZEllPoly::one());
        }
        while self.delta.len() <= m {
            let n = self.delta.len();
            let next = exp_step(&self.delta_weighted, &self.delta, n);
            self.delta.push(next);
        }
    }

    fn extend_beta(&mut self, m: usize) {
        while self.beta_weighted.len() <= m {
            let i = self.beta_weighted.len();
            // i · (-1)^{i+1} Pᵢ / i
            let w = if i == 0 {
                EllPoly::zero()
            } else if i % 2 == 1 {
                power_sum_poly(i)
            } else {
                -power_sum_poly(i)
            };
            self.beta_weighted.push(w);
        }
        if self.beta.is_empty() {
            self.beta.push(EllPoly::one());
        }
        while self.beta.len() <= m {
            let n = self.beta.len();
            let next = exp_step(&self.beta_weighted, &self.beta, n);
            self.beta.push(next);
        }
    }
}

static TABLES: RwLock<Tables> = RwLock::new(Tables {
    delta_weighted: Vec::new(),
    delta: Vec::new(),
    beta_weighted: Vec::new(),
    beta: Vec::new(),
});

/// Fills the shared tables through `uᵐ`. Later lookups up to `m` only read.
pub fn precompute(m: usize) {
    let ready = {
        let t = TABLES.read().unwrap();
        t.delta.len() > m && t.beta.len() > m
    };
    if !ready {
        let mut t = TABLES.write().unwrap();
        t.extend_delta(m);
        t.extend_beta(m);
    }
}

/// `Σⱼ Δₘⱼ(ℓ) zʲ`, the coefficient of `uᵐ`.
pub fn delta_series(m: usize) -> ZEllPoly {
    precompute(m);
    TABLES.read().unwrap().delta[m].clone()
}

/// `Δₘⱼ(ℓ)`; asserts degree `2m-j` and positive coefficients.
pub fn delta_poly(m: usize, j: usize) -> EllPoly {
    assert!(j <= 2 * m, "Δ_mj needs j <= 2m");
    let d = delta_series(m).coeff(j);
    assert_eq!(d.degree(), Some(2 * m - j), "Δ_({m},{j}) has the wrong degree");
    assert!(d.all_coeffs_positive(), "Δ_({m},{j}) has a nonpositive coefficient");
    d
}

/// `βₘ(ℓ) = [uᵐ] Π_{j<ℓ} (1 + ju)`.
pub fn beta_poly(m: usize) -> EllPoly {
    precompute(m);
    TABLES.read().unwrap().beta[m].clone()
}

/// `[uᵐ] Π_{j<ℓ} (1 + ju)` for one integer `ℓ`, by expanding the product.
pub fn beta_direct(m: usize, ell: u64) -> BigInt {
    let mut e = vec![BigInt::from(0); m + 1];
    e[0] = BigInt::from(1);
    for j in 0..ell {
        for d in (1..=m).rev() {
            let prev = e[d - 1].clone();
            e[d] += prev * BigInt::from(j);
        }
    }
    e[m].clone()
}

/// `Σⱼ Γₘⱼ(ℓ) zʲ`.
pub fn gamma_series(m: usize) -> ZEllPoly {
    let mut acc = ZEllPoly::zero();
    for m1 in 0..=m {
        acc = &acc + &delta_series(m1).mul_coeff(&beta_poly(m - m1));
    }
    acc
}

/// `Γₘⱼ(ℓ)`; asserts degree `2m-j`.
pub fn gamma_poly(m: usize, j: usize) -> EllPoly {
    assert!(j <= 2 * m, "Γ_mj needs j <= 2m");
    let g = gamma_series(m).coeff(j);
    assert_eq!(g.degree(), Some(2 * m - j), "Γ_({m},{j}) has the wrong degree");
    g
}

/// `Γₘ₀ … Γₘ,₂ₘ`.
pub fn gamma_row(m: usize) -> Vec<EllPoly> {
    let s = gamma_series(m);
    (0..=2 * m).map(|j| s.coeff(j)).collect()
}

/// `Γₘⱼ(ℓ) > 0` for every `j` and every integer `0 ≤ ℓ ≤ stress`.
pub fn gamma_values_positive(m: usize, stress: u64) -> Result<(), String> {
    row_values_positive(m, &gamma_row(m), stress)
}

fn row_values_positive(m: usize, row: &[EllPoly], stress: u64) -> Result<(), String> {
    for (j, g) in row.iter().enumerate() {
        for ell in 0..=stress {
            let v = g.eval(&q(ell as i64));
            if !v.is_positive() {
                return Err(format!("Γ_({m},{j})({ell}) = {v}"));
            }
        }
    }
    Ok(())
}

/// `c⁽ᵏ⁾ₘⱼ = (k-m+1)^{k-2m+j}/(k-m+1)! · Γₘⱼ(k-m)`.
pub fn p_coeff_from_gamma(k: usize, m: usize, j: usize, gamma: &EllPoly) -> Q {
    let b = k - m + 1;
    let e = k as i64 - 2 * m as i64 + j as i64;
    q_pow(&q(b as i64), e) / factorial_q(b) * gamma.eval(&q((k - m) as i64))
}

/// `p⁽ᵏ⁾ₘ(z)`; asserts degree `2m`, positive coefficients, and
/// `p⁽ᵏ⁾₀ = (k+1)ᵏ/(k+1)!`.
pub fn p_polynomial(k: usize, m: usize) -> ZPoly {
    assert!(m <= k, "p_m^(k) needs m <= k");
    let row = gamma_row(m);
    let p = ZPoly::new(
        row.iter()
            .enumerate()
            .map(|(j, g)| p_coeff_from_gamma(k, m, j, g))
            .collect(),
    );
    assert_eq!(p.degree(), Some(2 * m), "p_{m}^({k}) has the wrong degree");
    assert!(p.all_coeffs_positive(), "p_{m}^({k}) has a nonpositive coefficient");
    if m == 0 {
        let want = q_pow(&q(k as i64 + 1), k as i64) / factorial_q(k + 1);
        assert_eq!(p, ZPoly::constant(want), "p_0^({k}) is not (k+1)^k/(k+1)!");
    }
    p
}

/// `αₖ(z) = Σₘ (-1)ᵐ p⁽ᵏ⁾ₘ(z) e^{(k-m+1)z}` through `z^{order}`.
pub fn alpha_series(k: usize, order: usize) -> TruncSeries<Q> {
    let mut acc = TruncSeries::zero_at(Var::Z, order);
    for m in 0..=k {
        let a = q((k - m + 1) as i64);
        let e = TruncSeries::from_fn(Var::Z, order, |i| q_pow(&a, i as i64) / factorial_q(i));
        let term = &TruncSeries::from_poly(Var::Z, order, &p_polynomial(k, m)) * &e;
        acc = if m % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// `(n-1)! [z^{n-1}] αₖ` must be `rk H^{2k}(M̄₀,ₙ)` for every `n ≤ n_max`.
pub fn alpha_check(k: usize, n_max: usize) -> VerifyReport {
    let mut report = VerifyReport::new("alpha series").param("k", k).param("n_max", n_max);
    let order = n_max - 1;
    let alpha = alpha_series(k, order);
    let oracle = keel_oracle(n_max, k);
    for r in 0..=order {
        let got = alpha.coeff(r) * factorial_q(r);
        let want = oracle.m[r].coeff(k) * factorial_q(r);
        report.check(got == want, || format!("n = {}: alpha gives {got}, oracle {want}", r + 1));
    }
    report
}

/// `rk H^{2ℓ}(M̄₀,ₙ) = Σ_{k+m=ℓ} (-1)ᵐ (k+1)^{n-2+k-m}/k! ·
///  Σ_{j≤2m} (n-1)(n-2)⋯(n-j) Γₘⱼ(k)`.
pub fn betti_gamma(n: usize, ell: usize) -> BigInt {
    assert!(n >= 3);
    if ell > n - 3 {
        return BigInt::from(0);
    }
    let mut acc = Q::zero();
    for m in 0..=ell {
        let k = ell - m;
        let row = gamma_row(m);
        let kq = q(k as i64);
        let mut inner = Q::zero();
        let mut falling = q(1);
        for (j, g) in row.iter().enumerate() {
            if j > 0 {
                falling *= q(n as i64 - j as i64);
            }
            inner += &falling * g.eval(&kq);
        }
        let e = n as i64 - 2 + k as i64 - m as i64;
        let term = q_pow(&q(k as i64 + 1), e) / factorial_q(k) * inner;
        if m % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    assert!(acc.is_integer(), "non-integral Betti number from Γ");
    acc.to_integer()
}

/// `Σⱼ Δₘⱼ(ℓ) zʲ` for `m ≤ m_max` at one integer `ℓ`, from
/// `exp(-z - (1/u + ℓ)(log(1 + (ℓ+1)u) + log(1 - (ℓ+1+z)u)))`.
pub fn delta_at_integer(m_max: usize, ell: i64) -> Vec<ZPoly> {
    let a = q(ell + 1);
    let b = ZPoly::linear(q(ell + 1), q(1));
    let o = m_max + 1;
    let log_sum = TruncSeries::from_fn(Var::U, o, |i| {
        if i == 0 {
            return ZPoly::zero();
        }
        let ii = q(i as i64);
        let first = q_pow(&a, i as i64) / &ii;
        let first = if i % 2 == 1 { first } else { -first };
        &ZPoly::constant(first) - &b.pow(i as u32).scale(&(q(1) / ii))
    });
    let over_u = log_sum.divide_by_variable().unwrap();
    let log_sum = log_sum.truncate(m_max);
    let minus_z = TruncSeries::constant(Var::U, m_max, ZPoly::linear(q(0), q(-1)));
    let e = &(&minus_z - &over_u) - &log_sum.scale(&q(ell));
    let s = e.exp().expect("exponent has zero constant term");
    (0..=m_max).map(|m| s.coeff(m)).collect()
}

/// `Δₘⱼ` for all `j` by interpolating [`delta_at_integer`] through
/// `ℓ = 0 … 2m`.
pub fn delta_by_interpolation(m: usize) -> Vec<EllPoly> {
    let samples: Vec<Vec<ZPoly>> = (0..=2 * m as i64).map(|l| delta_at_integer(m, l)).collect();
    (0..=2 * m)
        .map(|j| {
            let pts: Vec<(Q, Q)> = samples
                .iter()
                .enumerate()
                .map(|(l, s)| (q(l as i64), s[m].coeff(j)))
                .collect();
            EllPoly::interpolate(&pts)
        })
        .collect()
}

/// `[tˡ] P(z, t, u)` through `u^{m_max}`, from the closed form
/// `(ℓ+1)^ℓ/(ℓ+1)! · e^{-(ℓ+1)z} ((1+u)(1-u(z+1)))^{-(1+ℓ(u+1))/u}
///  · Π_{j<ℓ} (1 + ju/(ℓ+1))`. Entry `m` should be `p⁽ᵐ⁺ˡ⁾ₘ(z)`.
pub fn p_generating_slice(ell: usize, m_max: usize) -> Vec<ZPoly> {
    let o = m_max + 1;
    let zp1 = ZPoly::linear(q(1), q(1));
    let log = TruncSeries::from_fn(Var::U, o, |i| {
        if i == 0 {
            return ZPoly::zero();
        }
        let ii = q(i as i64);
        let first = if i % 2 == 1 { q(1) / &ii } else { q(-1) / &ii };
        &ZPoly::constant(first) - &zp1.pow(i as u32).scale(&(q(1) / ii))
    });
    let l1 = q(ell as i64 + 1);
    let over_u = log.divide_by_variable().unwrap();
    let log = log.truncate(m_max);
    // -(ℓ+1)z cancels the constant term of -(ℓ+1) log/u.
    let shift = TruncSeries::constant(Var::U, m_max, ZPoly::linear(q(0), -l1.clone()));
    let e = &(&over_u.scale(&-l1.clone()) - &log.scale(&q(ell as i64))) + &shift;
    let mut s = e.exp().expect("exponent has zero constant term");
    for j in 0..ell {
        let f = TruncSeries::new(Var::U, m_max, vec![ZPoly::one(), ZPoly::constant(q(j as i64) / &l1)]);
        s = &s * &f;
    }
    let pref = q_pow(&l1, ell as i64) / factorial_q(ell + 1);
    (0..=m_max).map(|m| s.coeff(m).scale(&pref)).collect()
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PositivityError {
    #[error("the zero polynomial has no sign")]
    ZeroPolynomial,
}

/// Sign of `q(ℓ)` over all integers `ℓ ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Positivity {
    pub nonneg: bool,
    /// Every integer `0 ≤ ℓ ≤ bound` with `q(ℓ) < 0`.
    pub witnesses: Vec<BigInt>,
    /// `q(ℓ) < 0` for all `ℓ > bound`.
    pub negative_beyond_bound: bool,
    /// No real root exceeds this; `None` when all coefficients are `≥ 0`.
    pub bound: Option<BigInt>,
}

fn ceil_q(x: &Q) -> BigInt {
    x.ceil().to_integer()
}

/// Smallest integer `r` with `r^e ≥ x`, for `x ≥ 0`.
fn ceil_root(x: &Q, e: u32) -> BigInt {
    let c = ceil_q(x);
    let r = c.nth_root(e);
    if num_traits::pow(r.clone(), e as usize) < c {
        r + 1
    } else {
        r
    }
}

/// Upper bound on the real roots of `q` (leading coefficient made positive):
/// the smaller of Cauchy's `1 + max|aᵢ/a_d|` and `2 max (|aᵢ|/a_d)^{1/(d-i)}`
/// over the negative `aᵢ`, which bounds the positive roots.
pub fn positive_root_bound(p: &EllPoly) -> BigInt {
    let d = p.degree().expect("nonzero polynomial");
    let lead = p.coeff(d);
    let p = if lead.is_negative() { -p.clone() } else { p.clone() };
    let lead = lead.abs();
    let cauchy = BigInt::from(1) + p.coeffs()[..d]
        .iter()
        .map(|a| ceil_q(&(a.abs() / &lead)))
        .max()
        .unwrap_or_default();
    let positive = p.coeffs()[..d]
        .iter()
        .enumerate()
        .filter(|(_, a)| a.is_negative())
        .map(|(i, a)| 2 * ceil_root(&(a.abs() / &lead), (d - i) as u32))
        .max()
        .unwrap_or_default();
    cauchy.min(positive)
}

/// Decides `q(ℓ) ≥ 0` for every integer `ℓ ≥ 0`: immediate when no
/// coefficient is negative; otherwise by evaluation at `0 … bound` and the
/// sign of the leading coefficient past the bound.
pub fn positivity_certificate(p: &EllPoly) -> Result<Positivity, PositivityError> {
    let d = p.degree().ok_or(PositivityError::ZeroPolynomial)?;
    if p.coeffs().iter().all(|c| !c.is_negative()) {
        return Ok(Positivity { nonneg: true, witnesses: Vec::new(), negative_beyond_bound: false, bound: None });
    }
    let bound = positive_root_bound(p);
    let mut witnesses = Vec::new();
    let mut ell = BigInt::from(0);
    while ell <= bound {
        if p.eval(&qi(&ell)).is_negative() {
            witnesses.push(ell.clone());
        }
        ell += 1;
    }
    let negative_beyond_bound = p.coeff(d).is_negative();
    if negative_beyond_bound {
        witnesses.push(&bound + 1);
    }
    Ok(Positivity {
        nonneg: witnesses.is_empty(),
        witnesses,
        negative_beyond_bound,
        bound: Some(bound),
    })
}

/// `qⱼ(ℓ) = j(2m-j) Γₘⱼ² - (j+1)(2m-j+1) Γₘ,ⱼ₋₁ Γₘ,ⱼ₊₁` for `j = 1 … 2m-1`.
/// `p⁽ᵐ⁺ˡ⁾ₘ` is ultra-log-concave exactly when all are `≥ 0` at `ℓ`.
pub fn ulc_polys(m: usize) -> Vec<EllPoly> {
    ulc_polys_from_row(m, &gamma_row(m))
}

fn ulc_polys_from_row(m: usize, g: &[EllPoly]) -> Vec<EllPoly> {
    let mm = 2 * m as i64;
    (1..2 * m)
        .map(|j| {
            let jj = j as i64;
            let a = (&g[j] * &g[j]).scale(&q(jj * (mm - jj)));
            let b = (&g[j - 1] * &g[j + 1]).scale(&q((jj + 1) * (mm - jj + 1)));
            &a - &b
        })
        .collect()
}

/// Ultra-log-concavity of `p⁽ᵐ⁺ˡ⁾ₘ` over all integers `ℓ ≥ 0`.
#[derive(Clone, Debug)]
pub struct UlcReport {
    pub m: usize,
    pub polys: Vec<EllPoly>,
    /// Per `j = 1 … 2m-1`: `qⱼ(ℓ) ≥ 0` for every `ℓ ≥ 0`.
    pub passes: Vec<bool>,
    /// The `ℓ` at which some `qⱼ` is negative.
    pub exceptional_ell: BTreeSet<BigInt>,
    /// Some `qⱼ` is negative for every large `ℓ`.
    pub fails_eventually: bool,
}

impl UlcReport {
    pub fn all_pass(&self) -> bool {
        self.passes.iter().all(|&b| b)
    }
}

/// Certifies ultra-log-concavity for one `m`; also checks `Γₘⱼ(ℓ) > 0` for
/// `ℓ ≤ stress`.
pub fn ulc_certify(m: usize, stress: u64) -> UlcReport {
    assert!(m >= 1);
    let row = gamma_row(m);
    if let Err(w) = row_values_positive(m, &row, stress) {
        panic!("Γ is not positive: {w}");
    }
    let polys = ulc_polys_from_row(m, &row);
    let mut passes = Vec::new();
    let mut exceptional_ell = BTreeSet::new();
    let mut fails_eventually = false;
    for p in &polys {
        let cert = positivity_certificate(p).expect("qⱼ is not identically zero");
        passes.push(cert.nonneg);
        fails_eventually |= cert.negative_beyond_bound;
        let take = cert.witnesses.len() - usize::from(cert.negative_beyond_bound);
        exceptional_ell.extend(cert.witnesses.into_iter().take(take));
    }
    UlcReport { m, polys, passes, exceptional_ell, fails_eventually }
}

/// `aⱼ² ≥ aⱼ₋₁ aⱼ₊₁` for every interior `j`.
pub fn is_log_concave(seq: &[Q]) -> bool {
    seq.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

/// Coefficient sequence of `Γₘ₀` from the constant term up.
pub fn gamma_m0_coeffs(m: usize) -> Vec<Q> {
    gamma_poly(m, 0).coeffs().to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qf;

    fn ell(v: &[Q]) -> EllPoly {
        EllPoly::new(v.to_vec())
    }

    #[test]
    fn delta_fixtures() {
        let l1 = EllPoly::linear(q(1), q(1));
        assert_eq!(delta_poly(0, 0), EllPoly::one());
        assert_eq!(delta_poly(1, 0), &l1 * &l1);
        assert_eq!(delta_poly(1, 1), EllPoly::linear(q(1), q(2)));
        assert_eq!(delta_poly(1, 2), EllPoly::constant(qf(1, 2)));
        let quad = EllPoly::from_ints(&[1, 4, 1]);
        assert_eq!(delta_poly(2, 0), (&quad * &(&l1 * &l1)).scale(&qf(1, 2)));
    }

    #[test]
    fn delta_matches_integer_expansion() {
        for m in 0..=4 {
            let interp = delta_by_interpolation(m);
            for (j, p) in interp.iter().enumerate() {
                assert_eq!(*p, delta_poly(m, j), "m={m} j={j}");
            }
        }
    }

    #[test]
    fn beta_fixtures() {
        assert_eq!(beta_poly(0), EllPoly::one());
        assert_eq!(beta_poly(1), EllPoly::from_ints(&[0, -1, 1]).scale(&qf(1, 2)));
        let b2 = &EllPoly::from_ints(&[0, 2, -3, 1]) * &EllPoly::from_ints(&[-1, 3]);
        assert_eq!(beta_poly(2), b2.scale(&qf(1, 24)));
        for m in 0..6 {
            let b = beta_poly(m);
            for l in 0..(2 * m as u64 + 4) {
                assert_eq!(b.eval(&q(l as i64)), qi(&beta_direct(m, l)), "m={m} l={l}");
            }
        }
    }

    #[test]
    fn gamma_4_0() {
        let want = [
            qf(13, 24),
            qf(119, 30),
            qf(3619, 288),
            qf(2143, 96),
            qf(28867, 1152),
            qf(1341, 80),
            qf(4295, 576),
            qf(57, 32),
            qf(27, 128),
        ];
        assert_eq!(gamma_poly(4, 0), ell(&want));
        assert_eq!(gamma_poly(0, 0), EllPoly::one());
    }

    #[test]
    fn p_table_corner() {
        assert_eq!(p_polynomial(1, 1), ZPoly::new(vec![q(1), q(1), qf(1, 2)]));
        assert_eq!(
            p_polynomial(2, 2),
            ZPoly::new(vec![qf(1, 2), q(2), q(2), qf(5, 6), qf(1, 8)])
        );
        assert_eq!(p_polynomial(4, 0), ZPoly::constant(qf(125, 24)));
    }

    #[test]
    fn alpha_and_betti() {
        let a1 = alpha_series(1, 6);
        let got: Vec<Q> = (0..=6).map(|r| a1.coeff(r) * factorial_q(r)).collect();
        assert_eq!(got, [0, 0, 0, 1, 5, 16, 42].map(q));
        assert!(alpha_check(0, 8).passed);
        assert!(alpha_check(3, 10).passed);
        assert_eq!(betti_gamma(10, 3), BigInt::from(63173));
        assert_eq!(betti_gamma(5, 2), BigInt::from(1));
        for n in 3..12 {
            let closed = (BigInt::from(1) << (n - 1)) - BigInt::from((n * n - n + 2) / 2);
            if n >= 4 {
                assert_eq!(betti_gamma(n, 1), closed);
            }
            assert_eq!(betti_gamma(n, 0), BigInt::from(1));
        }
    }

    #[test]
    fn generating_slice_matches_p() {
        for l in 0..=3 {
            let slice = p_generating_slice(l, 3);
            for (m, p) in slice.iter().enumerate() {
                assert_eq!(*p, p_polynomial(m + l, m), "l={l} m={m}");
            }
        }
    }

    #[test]
    fn positivity() {
        let third = ell(&[qf(1, 12), qf(3, 4), qf(1, 4)]);
        assert!(positivity_certificate(&third).unwrap().nonneg);
        let c = positivity_certificate(&EllPoly::from_ints(&[-3, 1])).unwrap();
        assert!(!c.nonneg);
        assert_eq!(c.witnesses, [0, 1, 2].map(BigInt::from));
        let sq = ell(&[qf(1, 4), q(-1), q(1)]);
        assert!(positivity_certificate(&sq).unwrap().nonneg);
        assert_eq!(positivity_certificate(&EllPoly::zero()), Err(PositivityError::ZeroPolynomial));
        let neg = positivity_certificate(&EllPoly::from_ints(&[5, 0, -1])).unwrap();
        assert!(neg.negative_beyond_bound && !neg.nonneg);
    }

    #[test]
    fn ulc_small() {
        let r1 = ulc_certify(1, 20);
        assert_eq!(r1.polys, vec![EllPoly::from_ints(&[-1, 1, 1])]);
        assert_eq!(r1.exceptional_ell, BTreeSet::from([BigInt::from(0)]));
        let r2 = ulc_certify(2, 20);
        assert!(r2.all_pass());
    }
}
