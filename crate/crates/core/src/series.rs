//! Truncated formal power series in one named variable.
//!
//! A [`TruncSeries`] stores the coefficients of `x⁰ … x^O` for an explicit
//! truncation order `O`. Binary operations take the smaller order of their
//! operands and refuse to mix variables. The order [`EXACT`] marks a series
//! that is really a polynomial; such a series is neutral under the min-order
//! rule, which is what lets `zero()` and `one()` exist without context and
//! lets series nest as coefficients of other series.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::Poly;
use crate::ring::{q, q_to_string, Ring, Q};

/// Name of the series variable. [`Var::ANY`] matches every variable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Var(pub &'static str);

impl Var {
    pub const ANY: Var = Var("");
    pub const Z: Var = Var("z");
    pub const L: Var = Var("L");
    pub const X: Var = Var("x");
    pub const T: Var = Var("t");
    pub const U: Var = Var("u");
    pub const S: Var = Var("s");
    pub const TAU: Var = Var("τ");

    fn merge(self, other: Var) -> Result<Var, SeriesError> {
        if self == other || other == Var::ANY {
            Ok(self)
        } else if self == Var::ANY {
            Ok(other)
        } else {
            Err(SeriesError::VarMismatch(self.0, other.0))
        }
    }
}

/// Truncation order of a series that is known exactly.
pub const EXACT: usize = usize::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series in different variables: {0} and {1}")]
    VarMismatch(&'static str, &'static str),
    #[error("constant term must be zero")]
    NonZeroConstant,
    #[error("constant term must be one")]
    ConstantNotOne,
    #[error("constant term is not invertible")]
    NonUnitConstant,
    #[error("linear coefficient is not invertible")]
    NonUnitLinear,
    #[error("operation needs a finite truncation order")]
    Unbounded,
    #[error("truncation order {have} is below the required {need}")]
    OrderTooLow { have: usize, need: usize },
}

pub type Result<T, E = SeriesError> = std::result::Result<T, E>;

#[derive(Clone, PartialEq)]
pub struct TruncSeries<R> {
    var: Var,
    order: usize,
    coeffs: Vec<R>,
}

fn trimmed<R: Ring>(mut coeffs: Vec<R>, order: usize) -> Vec<R> {
    if order != EXACT {
        coeffs.truncate(order + 1);
    }
    while coeffs.last().map_or(false, Ring::is_zero) {
        coeffs.pop();
    }
    coeffs
}

impl<R: Ring> TruncSeries<R> {
    /// Series with the given coefficients; anything past `order` is dropped.
    pub fn new(var: Var, order: usize, coeffs: Vec<R>) -> Self {
        TruncSeries {
            var,
            order,
            coeffs: trimmed(coeffs, order),
        }
    }

    pub fn from_fn(var: Var, order: usize, f: impl Fn(usize) -> R) -> Self {
        assert_ne!(order, EXACT, "from_fn needs a finite order");
        Self::new(var, order, (0..=order).map(f).collect())
    }

    /// A polynomial viewed as an exact series.
    pub fn exact(var: Var, coeffs: Vec<R>) -> Self {
        Self::new(var, EXACT, coeffs)
    }

    pub fn zero_at(var: Var, order: usize) -> Self {
        Self::new(var, order, Vec::new())
    }

    pub fn constant(var: Var, order: usize, c: R) -> Self {
        Self::new(var, order, vec![c])
    }

    pub fn one_at(var: Var, order: usize) -> Self {
        Self::constant(var, order, R::one())
    }

    /// The variable `x` itself.
    pub fn variable(var: Var, order: usize) -> Self {
        Self::new(var, order, vec![R::zero(), R::one()])
    }

    pub fn from_poly(var: Var, order: usize, p: &Poly<R>) -> Self {
        Self::new(var, order, p.coeffs().to_vec())
    }

    /// Stored coefficients as a polynomial (the truncation is forgotten).
    pub fn to_poly(&self) -> Poly<R> {
        Poly::new(self.coeffs.clone())
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order == EXACT
    }

    /// Nonzero prefix of the coefficient vector.
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; panics past the truncation order.
    pub fn coeff(&self, i: usize) -> R {
        assert!(i <= self.order, "coefficient {i} beyond order {}", self.order);
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.var, order.min(self.order), self.coeffs.clone())
    }

    fn result_len(&self, order: usize, natural: usize) -> usize {
        if order == EXACT {
            natural
        } else {
            natural.min(order + 1)
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        let var = self.var.merge(rhs.var)?;
        let order = self.order.min(rhs.order);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let n = self.result_len(order, n);
        let v = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.radd(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => R::zero(),
            })
            .collect();
        Ok(Self::new(var, order, v))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&rhs.neg())
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        let var = self.var.merge(rhs.var)?;
        let order = self.order.min(rhs.order);
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero_at(var, order));
        }
        let n = self.result_len(order, self.coeffs.len() + rhs.coeffs.len() - 1);
        let mut out = vec![R::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].radd(&a.rmul(b));
                }
            }
        }
        Ok(Self::new(var, order, out))
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            var: self.var,
            order: self.order,
            coeffs: self.coeffs.iter().map(Ring::rneg).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::new(self.var, self.order, self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    pub fn mul_coeff(&self, c: &R) -> Self {
        Self::new(self.var, self.order, self.coeffs.iter().map(|a| a.rmul(c)).collect())
    }

    /// Multiplies by `x^k`, keeping the truncation order.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(self.var, self.order, v)
    }

    /// Divides by `x`; the constant term must vanish. The order drops by one.
    pub fn divide_by_variable(&self) -> Result<Self> {
        if self.coeffs.first().map_or(false, |c| !c.is_zero()) {
            return Err(SeriesError::NonZeroConstant);
        }
        let order = if self.is_exact() {
            EXACT
        } else {
            self.order.checked_sub(1).ok_or(SeriesError::OrderTooLow { have: 0, need: 1 })?
        };
        Ok(Self::new(self.var, order, self.coeffs.iter().skip(1).cloned().collect()))
    }

    pub fn derivative(&self) -> Self {
        let order = if self.is_exact() { EXACT } else { self.order.saturating_sub(1) };
        Self::new(
            self.var,
            order,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&q(i as i64)))
                .collect(),
        )
    }

    fn require_finite(&self) -> Result<()> {
        if self.is_exact() && self.coeffs.len() > 1 {
            Err(SeriesError::Unbounded)
        } else {
            Ok(())
        }
    }

    fn working_order(&self) -> usize {
        if self.is_exact() {
            0
        } else {
            self.order
        }
    }

    /// Formal exponential. The constant term must be zero.
    pub fn exp(&self) -> Result<Self> {
        if self.coeffs.first().map_or(false, |c| !c.is_zero()) {
            return Err(SeriesError::NonZeroConstant);
        }
        self.require_finite()?;
        if self.is_zero() {
            return Ok(Self::one_at(self.var, self.order));
        }
        let n_max = self.order;
        // f' = s' f  =>  n f_n = Σ_{k=1..n} k s_k f_{n-k}
        let weighted: Vec<R> = (0..=n_max)
            .map(|k| match self.coeffs.get(k) {
                Some(c) if k > 0 => c.scale(&q(k as i64)),
                _ => R::zero(),
            })
            .collect();
        let mut f: Vec<R> = Vec::with_capacity(n_max + 1);
        f.push(R::one());
        for n in 1..=n_max {
            f.push(exp_step(&weighted, &f, n));
        }
        Ok(Self::new(self.var, self.order, f))
    }

    /// Formal logarithm. The constant term must be exactly one.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs.first().map_or(true, |c| !c.is_one()) {
            return Err(SeriesError::ConstantNotOne);
        }
        self.require_finite()?;
        let n_max = self.working_order();
        // s g' = s'  =>  n g_n = n s_n - Σ_{k=1..n-1} k g_k s_{n-k}
        let s = |i: usize| self.coeffs.get(i).cloned().unwrap_or_else(R::zero);
        let mut g: Vec<R> = vec![R::zero()];
        for n in 1..=n_max {
            let mut acc = s(n).scale(&q(n as i64));
            for k in 1..n {
                let sk = s(n - k);
                if !sk.is_zero() && !g[k].is_zero() {
                    acc = acc.rsub(&g[k].scale(&q(k as i64)).rmul(&sk));
                }
            }
            g.push(acc.scale(&Q::new(BigInt::from(1), BigInt::from(n))));
        }
        Ok(Self::new(self.var, self.order, g))
    }

    /// `self^e = exp(e · log self)` for a constant term of one.
    pub fn pow(&self, e: &R) -> Result<Self> {
        self.log()?.mul_coeff(e).exp()
    }

    /// Integer power; negative exponents need an invertible constant term.
    pub fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one_at(self.var, self.order);
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.try_mul(&sq)?;
            }
            k >>= 1;
            if k > 0 {
                sq = sq.try_mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self> {
        let c0 = self.coeffs.first().ok_or(SeriesError::NonUnitConstant)?;
        let b0 = c0.try_inv().ok_or(SeriesError::NonUnitConstant)?;
        self.require_finite()?;
        let n_max = self.working_order();
        let a = |i: usize| self.coeffs.get(i);
        let mut b: Vec<R> = vec![b0.clone()];
        for n in 1..=n_max {
            let mut acc = R::zero();
            for k in 1..=n {
                if let Some(ak) = a(k) {
                    acc = acc.radd(&ak.rmul(&b[n - k]));
                }
            }
            b.push(acc.rmul(&b0).rneg());
        }
        Ok(Self::new(self.var, self.order, b))
    }

    /// `self(inner(y))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if inner.coeffs.first().map_or(false, |c| !c.is_zero()) {
            return Err(SeriesError::NonZeroConstant);
        }
        let order = if self.is_exact() { inner.order } else { self.order.min(inner.order) };
        let inner = TruncSeries {
            var: inner.var,
            order,
            coeffs: trimmed(inner.coeffs.clone(), order),
        };
        let mut acc = Self::zero_at(inner.var, order);
        for c in self.coeffs.iter().rev() {
            acc = acc.try_mul(&inner)?.try_add(&Self::constant(inner.var, order, c.clone()))?;
        }
        Ok(acc)
    }

    /// Lagrange inversion: for `g` with `g(0) = 0` and invertible `g'(0)`,
    /// returns `aₙ = (n-1)! · [x^{n-1}] (x / g)^n`, i.e. `n!` times the
    /// `n`-th coefficient of the compositional inverse of `g`.
    pub fn lagrange_invert(&self, n: usize) -> Result<R> {
        assert!(n >= 1, "lagrange_invert needs n >= 1");
        if self.order != EXACT && self.order < n {
            return Err(SeriesError::OrderTooLow { have: self.order, need: n });
        }
        let h = self.truncate(n).divide_by_variable()?;
        if h.coeffs.first().and_then(Ring::try_inv).is_none() {
            return Err(SeriesError::NonUnitLinear);
        }
        let h = if h.is_exact() { h.truncate(n - 1) } else { h };
        let phi = h.inv()?;
        let coeff = phi.powi(n as i64)?.coeff(n - 1);
        Ok(coeff.scale(&Q::from_integer(factorial_small(n - 1))))
    }

    /// Compositional inverse `f` with `self(f(y)) = y`, by fixed-point
    /// iteration (one new coefficient per pass).
    pub fn revert(&self) -> Result<Self> {
        if self.coeffs.first().map_or(false, |c| !c.is_zero()) {
            return Err(SeriesError::NonZeroConstant);
        }
        if self.is_exact() {
            return Err(SeriesError::Unbounded);
        }
        let g1_inv = self
            .coeffs
            .get(1)
            .and_then(Ring::try_inv)
            .ok_or(SeriesError::NonUnitLinear)?;
        let y = Self::variable(self.var, self.order);
        let mut f = y.mul_coeff(&g1_inv);
        for _ in 0..self.order {
            let residual = y.try_sub(&self.compose(&f)?)?;
            f = f.try_add(&residual.mul_coeff(&g1_inv))?;
        }
        Ok(f)
    }
}

/// One step of the exponential recurrence: given `k·sₖ` for `k ≤ n` and
/// `f₀ … f_{n-1}` of `f = exp(s)`, returns `fₙ`.
pub fn exp_step<R: Ring>(weighted_log: &[R], f: &[R], n: usize) -> R {
    let mut acc = R::zero();
    for k in 1..=n {
        if let Some(w) = weighted_log.get(k) {
            if !w.is_zero() && !f[n - k].is_zero() {
                acc = acc.radd(&w.rmul(&f[n - k]));
            }
        }
    }
    acc.scale(&Q::new(BigInt::from(1), BigInt::from(n)))
}

fn factorial_small(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

impl TruncSeries<Q> {
    /// `Σ cᵢ xⁱ` from small integers.
    pub fn from_ints(var: Var, order: usize, v: &[i64]) -> Self {
        Self::new(var, order, v.iter().map(|&a| q(a)).collect())
    }

    /// Human readable, with the `O(x^{n+1})` tail.
    pub fn display(&self) -> String {
        let body = self.to_poly().display(self.var.0);
        if self.is_exact() {
            body
        } else {
            format!("{body} + O({}^{})", self.var.0, self.order + 1)
        }
    }
}

impl<R: Ring> Ring for TruncSeries<R> {
    fn zero() -> Self {
        TruncSeries { var: Var::ANY, order: EXACT, coeffs: Vec::new() }
    }
    fn one() -> Self {
        TruncSeries { var: Var::ANY, order: EXACT, coeffs: vec![R::one()] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn radd(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn rsub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn rmul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn rneg(&self) -> Self {
        self.neg()
    }
    fn scale(&self, c: &Q) -> Self {
        TruncSeries::scale(self, c)
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

impl<R: Ring> Add for &TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn add(self, rhs: &TruncSeries<R>) -> TruncSeries<R> {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<R: Ring> Sub for &TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn sub(self, rhs: &TruncSeries<R>) -> TruncSeries<R> {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<R: Ring> Mul for &TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn mul(self, rhs: &TruncSeries<R>) -> TruncSeries<R> {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<R: Ring> Neg for &TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn neg(self) -> TruncSeries<R> {
        TruncSeries::neg(self)
    }
}

impl<R: Ring> fmt::Debug for TruncSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = if self.is_exact() { "exact".to_string() } else { self.order.to_string() };
        write!(f, "TruncSeries[{}; {}]{:?}", self.var.0, order, self.coeffs)
    }
}

impl fmt::Display for TruncSeries<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

/// Exact coefficients as strings, padded with zeros up to the order.
pub fn coeff_strings(s: &TruncSeries<Q>) -> Vec<String> {
    let len = if s.is_exact() { s.coeffs().len() } else { s.order() + 1 };
    (0..len).map(|i| q_to_string(&s.coeff(i))).collect()
}

/// `log(1 + a·x)` to the given order.
pub fn log1p_linear(var: Var, order: usize, a: &Q) -> TruncSeries<Q> {
    TruncSeries::from_fn(var, order, |i| {
        if i == 0 {
            Q::zero()
        } else {
            let sign = if i % 2 == 1 { q(1) } else { q(-1) };
            sign * num_traits::pow(a.clone(), i) / q(i as i64)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qf;

    fn z(order: usize, v: &[i64]) -> TruncSeries<Q> {
        TruncSeries::from_ints(Var::Z, order, v)
    }

    #[test]
    fn ring_operations() {
        assert_eq!(&z(5, &[1, 1]) * &z(5, &[1, -1]), z(5, &[1, 0, -1]));
        assert_eq!(&z(5, &[1, 1]) * &z(5, &[1, 1]), z(5, &[1, 2, 1]));
        assert_eq!(z(3, &[1, 2, 3, 4]).shift(1), z(3, &[0, 1, 2, 3]));
        // min order
        assert_eq!((&z(2, &[1]) + &z(7, &[0, 0, 0, 5])).order(), 2);
    }

    #[test]
    fn variable_mismatch_is_an_error() {
        let a = z(3, &[1, 1]);
        let b = TruncSeries::from_ints(Var::L, 3, &[1, 1]);
        assert_eq!(a.try_mul(&b), Err(SeriesError::VarMismatch("z", "L")));
    }

    #[test]
    fn exp_and_log() {
        let e = z(4, &[0, 1]).exp().unwrap();
        assert_eq!(e.coeffs(), &[q(1), q(1), qf(1, 2), qf(1, 6), qf(1, 24)]);
        let l = z(3, &[1, -1]).log().unwrap();
        assert_eq!(l.coeffs(), &[q(0), q(-1), qf(-1, 2), qf(-1, 3)]);
        let back = z(8, &[1, 1]).log().unwrap().exp().unwrap();
        assert_eq!(back, z(8, &[1, 1]));
        assert_eq!(z(3, &[1, 1]).exp(), Err(SeriesError::NonZeroConstant));
        assert_eq!(z(3, &[2, 1]).log(), Err(SeriesError::ConstantNotOne));
    }

    #[test]
    fn rational_powers() {
        let r = z(2, &[1, 1]).pow(&qf(1, 2)).unwrap();
        assert_eq!(r.coeffs(), &[q(1), qf(1, 2), qf(-1, 8)]);
        // (1 - L^2)^{1/L} = exp(log(1 - L^2) / L)
        let l = TruncSeries::from_ints(Var::L, 5, &[1, 0, -1]).log().unwrap();
        let e = l.divide_by_variable().unwrap().exp().unwrap();
        assert_eq!(e.coeffs(), &[q(1), q(-1), qf(1, 2), qf(-2, 3), qf(13, 24)]);
    }

    #[test]
    fn binomial_series_over_polynomials() {
        // (1 + x)^L over Q[L]
        let one_plus_x: TruncSeries<Poly<Q>> =
            TruncSeries::new(Var::X, 2, vec![Poly::one(), Poly::one()]);
        let r = one_plus_x.pow(&Poly::x()).unwrap();
        assert_eq!(r.coeff(1), Poly::x());
        assert_eq!(r.coeff(2), Poly::new(vec![q(0), qf(-1, 2), qf(1, 2)]));
    }

    #[test]
    fn composition() {
        let exp = z(6, &[0, 1]).exp().unwrap();
        let two_z = z(6, &[0, 2]);
        let c = exp.compose(&two_z).unwrap();
        for n in 0..=6u32 {
            let fact: i64 = (1..=n as i64).product();
            assert_eq!(c.coeff(n as usize), qf(2i64.pow(n), fact));
        }
        let geom = TruncSeries::from_ints(Var::X, 8, &[1; 9]);
        let sq = TruncSeries::from_ints(Var::X, 8, &[0, 0, 1]);
        assert_eq!(geom.compose(&sq).unwrap(), TruncSeries::from_ints(Var::X, 8, &[1, 0, 1, 0, 1, 0, 1, 0, 1]));
        assert_eq!(geom.compose(&geom), Err(SeriesError::NonZeroConstant));
    }

    #[test]
    fn inversion_and_lagrange() {
        let g = TruncSeries::from_ints(Var::X, 6, &[0, 1]);
        for n in 1..=6 {
            let a = g.lagrange_invert(n).unwrap();
            assert_eq!(a, if n == 1 { q(1) } else { q(0) });
        }
        // g = x - x^2: inverse is the Catalan series (1 - sqrt(1 - 4y)) / 2
        let g = TruncSeries::from_ints(Var::X, 6, &[0, 1, -1]);
        let f = g.revert().unwrap();
        assert_eq!(f.coeffs(), &[q(0), q(1), q(1), q(2), q(5), q(14), q(42)]);
        assert_eq!(g.lagrange_invert(3).unwrap(), q(2 * 6));
        assert_eq!(
            TruncSeries::from_ints(Var::X, 3, &[0, 0, 1]).lagrange_invert(2),
            Err(SeriesError::NonUnitLinear)
        );
    }

    #[test]
    fn nested_series_as_coefficients() {
        // series in L whose coefficients are series in z
        let ez = z(4, &[0, 1]).exp().unwrap();
        let s: TruncSeries<TruncSeries<Q>> =
            TruncSeries::new(Var::L, 3, vec![TruncSeries::<Q>::zero(), ez.clone()]);
        let sq = &s * &s;
        assert_eq!(sq.coeff(2), &ez * &ez);
        let one_minus = &TruncSeries::one_at(Var::L, 3) - &s;
        let inv = one_minus.inv().unwrap();
        assert_eq!(inv.coeff(3), &(&ez * &ez) * &ez);
    }
}
