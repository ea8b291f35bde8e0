//! The acceptance checks, one function per criterion, each returning a
//! single [`VerifyReport`]. Work inside a criterion is spread over rayon's
//! pool; an assertion that fires inside the library turns into a failing
//! report rather than a panic.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::classes::{
    betti_bernoulli, betti_stirling, chi_values, class_ell_sum, class_getzler, class_stirling, class_trace,
    functional_equation_residual, keel_oracle, stirling_trace, GrothendieckClass,
};
use crate::combinat::{binomial_usize, factorial, factorial_q};
use crate::identities::{
    check_bernoulli_identities, check_closed_form, check_e_identity, check_initial_condition, check_lagrange_pow,
    check_vandermonde_conv, initial_condition_row,
};
use crate::lambert::{a_n_polynomial, f_m_polynomial, mhat_from_tree, sigma_generating, sigma_poly};
use crate::poly::{EllPoly, LPoly, ZPoly};
use crate::ppoly::{
    betti_gamma, delta_poly, gamma_m0_coeffs, gamma_poly, is_log_concave, p_polynomial, precompute, ulc_certify,
};
use crate::report::VerifyReport;
use crate::ring::{q, qf, qi, Q};

/// Ranges for the suite. The defaults are the desk-scale acceptance ranges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Largest `n` for class agreement and structural checks.
    pub n_max: usize,
    /// Largest `m` for ultra-log-concavity certification.
    pub m_max: usize,
    /// `ℓ` values past which `Γ` positivity is also checked by direct evaluation.
    pub stress: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { n_max: 25, m_max: 30, stress: 10 }
    }
}

/// Which criteria to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Identities,
    Crosscheck,
}

impl Suite {
    pub fn criteria(self) -> &'static [usize] {
        match self {
            Suite::All => &[1, 2, 3, 4, 5, 6, 7, 8, 9],
            Suite::Identities => &[8],
            Suite::Crosscheck => &[1, 2, 3, 6, 7],
        }
    }
}

pub const CRITERIA: usize = 9;

/// Runs `f`, turning a panic into a failing report named `name`.
pub fn guarded(name: &str, f: impl FnOnce() -> VerifyReport) -> VerifyReport {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(r) => r,
        Err(e) => {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            let mut r = VerifyReport::new(name);
            r.fail(format!("panicked: {msg}"));
            r
        }
    }
}

pub fn criterion(i: usize, cfg: &SuiteConfig) -> VerifyReport {
    let name = criterion_name(i);
    guarded(name, || {
        let mut r = match i {
            1 => five_way_agreement(cfg.n_max),
            2 => class_fixtures(),
            3 => euler_characteristics(),
            4 => p_table(),
            5 => ulc_range(cfg.m_max, cfg.stress),
            6 => tree_function(),
            7 => trace_fixtures(),
            8 => identity_suites(),
            9 => structural(cfg.n_max),
            _ => panic!("no criterion {i}"),
        };
        r.name = format!("{i}. {name}");
        r
    })
}

pub fn criterion_name(i: usize) -> &'static str {
    match i {
        1 => "five-way class agreement",
        2 => "class and Betti fixtures",
        3 => "Euler characteristics",
        4 => "p, Δ and Γ tables",
        5 => "ultra-log-concavity",
        6 => "tree-function polynomials",
        7 => "shifted traces",
        8 => "identity suites",
        9 => "structural properties",
        _ => "unknown",
    }
}

/// Runs the criteria of `suite` in order.
pub fn run(suite: Suite, cfg: &SuiteConfig) -> Vec<VerifyReport> {
    suite.criteria().iter().map(|&i| criterion(i, cfg)).collect()
}

fn class_poly(c: &[i64]) -> LPoly {
    LPoly::from_ints(c)
}

fn z_poly(c: &[(i64, i64)]) -> ZPoly {
    ZPoly::new(c.iter().map(|&(n, d)| qf(n, d)).collect())
}

/// All five class routes, for `3 ≤ n ≤ n_max`.
pub fn five_way_agreement(n_max: usize) -> VerifyReport {
    let mut r = VerifyReport::new("five-way class agreement").param("n_max", n_max);
    let oracle = keel_oracle(n_max, n_max);
    let failures: Vec<String> = (3..=n_max)
        .into_par_iter()
        .filter_map(|n| {
            let keel = oracle.class(n);
            let others = [
                ("stirling", class_stirling(n)),
                ("ellsum", class_ell_sum(n).0),
                ("getzler", class_getzler(n)),
                ("trace", class_trace(n)),
            ];
            others
                .into_iter()
                .find(|(_, c)| *c != keel)
                .map(|(name, c)| format!("n = {n}: {name} gives {c}, keel gives {keel}"))
        })
        .collect();
    if let Some(w) = failures.into_iter().next() {
        r.fail(w);
    }
    r
}

/// `[M̄₀,₆]`, two Betti numbers by three routes, and `rk H²` in closed form.
pub fn class_fixtures() -> VerifyReport {
    let mut r = VerifyReport::new("class and Betti fixtures");
    let c6 = class_stirling(6);
    r.check(c6.poly == class_poly(&[1, 16, 16, 1]), || format!("[M̄(0,6)] = {c6}"));
    type Route = fn(usize, usize) -> BigInt;
    let routes: [(&str, Route); 3] =
        [("stirling", betti_stirling), ("bernoulli", betti_bernoulli), ("gamma", betti_gamma)];
    for (name, f) in routes {
        for (n, ell, want) in [(5, 3, 0), (10, 3, 63173)] {
            let got = f(n, ell);
            r.check(got == BigInt::from(want), || format!("{name}: rk H^{} of M̄(0,{n}) is {got}", 2 * ell));
        }
    }
    for n in 3..=20usize {
        let want = (BigInt::from(1) << (n - 1)) - BigInt::from((n * n - n + 2) / 2);
        for (name, f) in routes {
            let got = f(n, 1);
            r.check(got == want, || format!("{name}: rk H^2 of M̄(0,{n}) is {got}, expected {want}"));
        }
    }
    r
}

/// `χ̂` through `z⁶`, and Betti sums against `χ̂` for `n ≤ 20`.
pub fn euler_characteristics() -> VerifyReport {
    let mut r = VerifyReport::new("Euler characteristics");
    let chi = chi_values(19);
    let head: Vec<BigInt> = chi[..7].to_vec();
    let want = [1, 1, 1, 2, 7, 34, 213].map(BigInt::from);
    r.check(head == want, || format!("χ̂ coefficients {head:?}"));
    for n in 3..=20 {
        let sum = class_stirling(n).euler_char();
        r.check(sum == chi[n - 1], || format!("n = {n}: Betti sum {sum} != χ {}", chi[n - 1]));
    }
    r
}

/// Reference values of `p⁽ᵏ⁾ₘ` for `k ≤ 4`.
pub fn p_table_fixture() -> Vec<((usize, usize), ZPoly)> {
    vec![
        ((0, 0), z_poly(&[(1, 1)])),
        ((1, 0), z_poly(&[(1, 1)])),
        ((1, 1), z_poly(&[(1, 1), (1, 1), (1, 2)])),
        ((2, 0), z_poly(&[(3, 2)])),
        ((2, 1), z_poly(&[(2, 1), (3, 1), (1, 1)])),
        ((2, 2), z_poly(&[(1, 2), (2, 1), (2, 1), (5, 6), (1, 8)])),
        ((3, 0), z_poly(&[(8, 3)])),
        ((3, 1), z_poly(&[(5, 1), (15, 2), (9, 4)])),
        ((3, 2), z_poly(&[(3, 1), (9, 1), (9, 1), (11, 3), (1, 2)])),
        ((3, 3), z_poly(&[(2, 3), (5, 2), (17, 4), (7, 2), (35, 24), (7, 24), (1, 48)])),
        ((4, 0), z_poly(&[(125, 24)])),
        ((4, 1), z_poly(&[(38, 3), (56, 3), (16, 3)])),
        ((4, 2), z_poly(&[(45, 4), (65, 2), (129, 4), (51, 4), (27, 16)])),
        ((4, 3), z_poly(&[(13, 3), (18, 1), (30, 1), (74, 3), (21, 2), (13, 6), (1, 6)])),
        (
            (4, 4),
            z_poly(&[(13, 24), (19, 6), (85, 12), (103, 12), (289, 48), (49, 20), (5, 9), (1, 16), (1, 384)]),
        ),
    ]
}

/// Reference value of `Γ₄,₀`, constant term first.
pub fn gamma_4_0_fixture() -> EllPoly {
    EllPoly::new(
        [(13, 24), (119, 30), (3619, 288), (2143, 96), (28867, 1152), (1341, 80), (4295, 576), (57, 32), (27, 128)]
            .iter()
            .map(|&(n, d)| qf(n, d))
            .collect(),
    )
}

/// The `ℓ²` coefficient of `Γ₂₁,₀`.
pub fn gamma_21_0_l2() -> Q {
    Q::new(
        "-97330536888617758406393".parse().unwrap(),
        "2248001455555215360000".parse().unwrap(),
    )
}

pub fn p_table() -> VerifyReport {
    let mut r = VerifyReport::new("p, Δ and Γ tables");
    for ((k, m), want) in p_table_fixture() {
        let got = p_polynomial(k, m);
        r.check(got == want, || format!("p({k},{m}) = {}", got.display("z")));
    }
    let l1 = EllPoly::linear(q(1), q(1));
    let deltas = [
        ((0, 0), EllPoly::one()),
        ((1, 0), &l1 * &l1),
        ((1, 1), EllPoly::linear(q(1), q(2))),
        ((1, 2), EllPoly::constant(qf(1, 2))),
        ((2, 0), (&EllPoly::from_ints(&[1, 4, 1]) * &(&l1 * &l1)).scale(&qf(1, 2))),
    ];
    for ((m, j), want) in deltas {
        let got = delta_poly(m, j);
        r.check(got == want, || format!("Δ({m},{j}) = {}", got.display("l")));
    }
    let g4 = gamma_poly(4, 0);
    r.check(g4 == gamma_4_0_fixture(), || format!("Γ(4,0) = {}", g4.display("l")));
    let c = gamma_poly(21, 0).coeff(2);
    r.check(c == gamma_21_0_l2(), || format!("ℓ² coefficient of Γ(21,0) is {c}"));
    r
}

/// Every `m` in range certified; the only exceptions are `ℓ = 0` at `m = 1, 3, 5`.
pub fn ulc_range(m_max: usize, stress: u64) -> VerifyReport {
    let mut r = VerifyReport::new("ultra-log-concavity").param("m_max", m_max);
    precompute(m_max.max(20));
    let reports: Vec<_> = (1..=m_max).into_par_iter().map(|m| ulc_certify(m, stress)).collect();
    for rep in &reports {
        let expected: BTreeSet<BigInt> =
            if rep.m <= 5 && rep.m % 2 == 1 { BTreeSet::from([BigInt::from(0)]) } else { BTreeSet::new() };
        r.check(!rep.fails_eventually, || format!("m = {}: some qⱼ is eventually negative", rep.m));
        r.check(rep.exceptional_ell == expected, || {
            format!("m = {}: exceptional ℓ {:?}, expected {:?}", rep.m, rep.exceptional_ell, expected)
        });
    }
    let g20 = gamma_m0_coeffs(20);
    r.check(!is_log_concave(&g20), || "Γ(20,0) is log-concave".into());
    r
}

/// `F₁`, `F₂` against the displayed numerators, the tree reconstruction of
/// `M̂`, and termination of `Fₘ` for `m ≤ 6`.
pub fn tree_function() -> VerifyReport {
    let mut r = VerifyReport::new("tree-function polynomials");
    let tp = |c: &[(i64, i64)]| EllPoly::new(c.iter().map(|&(n, d)| qf(n, d)).collect());
    let f1 = f_m_polynomial(1);
    let f1_want = [tp(&[(1, 1), (0, 1), (1, 2)]), tp(&[(1, 1), (1, 1)]), tp(&[(1, 2)])];
    for (j, want) in f1_want.iter().enumerate() {
        let got = f1.z_coeff(j);
        r.check(got == *want, || format!("F1, z^{j} coefficient {}", got.display("T")));
    }
    let f2 = f_m_polynomial(2);
    let f2_want = [
        tp(&[(12, 24), (24, 24), (-12, 24), (8, 24), (-1, 24), (-4, 24)]),
        tp(&[(4, 2), (2, 2), (1, 2), (0, 1), (-1, 2)]),
        tp(&[(8, 4), (4, 4), (1, 4), (-2, 4)]),
        tp(&[(5, 6), (2, 6), (-1, 6)]),
        tp(&[(1, 8)]),
    ];
    for (j, want) in f2_want.iter().enumerate() {
        let got = f2.z_coeff(j);
        r.check(got == *want, || format!("F2, z^{j} coefficient {}", got.display("T")));
    }
    for m in 1..=6 {
        let f = f_m_polynomial(m);
        let deg = f.poly().and_then(|p| p.degree()).unwrap_or(0);
        r.check(deg < 3 * m, || format!("F{m} has τ-degree {deg}"));
    }
    let (_, rep) = mhat_from_tree(10, 6, 6);
    r.absorb(rep);
    r
}

/// `tr₄` through `L⁸` and the trace-diagonal polynomial `a₆`.
pub fn trace_fixtures() -> VerifyReport {
    let mut r = VerifyReport::new("shifted traces");
    let (tr, class) = stirling_trace(6, 8);
    let head: Vec<Q> = (0..=4).map(|i| tr.coeff(i)).collect();
    r.check(head == [1, 21, 111, 356, 875].map(q), || format!("tr4 begins {}", tr.display()));
    // [M̄₀,₆] / (1-L)⁵ through L⁸, from the binomial series
    for i in 0..=8usize {
        let want: Q = (0..=3.min(i))
            .map(|j| class_poly(&[1, 16, 16, 1]).coeff(j) * qi(&binomial_usize(i - j + 4, 4)))
            .sum();
        r.check(tr.coeff(i) == want, || format!("tr4: coefficient of L^{i} is {}", tr.coeff(i)));
    }
    r.check(class.poly == class_poly(&[1, 16, 16, 1]), || format!("(1-L)^5 tr4 = {class}"));
    let a6 = a_n_polynomial(6);
    let want = EllPoly::new(vec![q(1), qf(29, 6), qf(97, 12), qf(17, 3), qf(17, 12)]);
    r.check(a6 == want, || format!("a6 = {}", a6.display("k")));
    let chi = chi_values(5)[5].clone();
    let lead = qi(&chi) / factorial_q(4);
    r.check(a6.leading() == Some(&lead), || format!("a6 leading coefficient is not χ/4! = {lead}"));
    r
}

/// Every identity checker over its configured range.
pub fn identity_suites() -> VerifyReport {
    let mut r = VerifyReport::new("identity suites");
    let kw: Vec<(usize, usize)> = (1..=20).flat_map(|k| (1..=20).map(move |w| (k, w))).collect();
    let mut reports: Vec<VerifyReport> = kw.par_iter().map(|&(k, w)| check_vandermonde_conv(k, w)).collect();
    let ab: Vec<(usize, usize)> = (1..=8).flat_map(|a| (1..=8).map(move |b| (a, b))).collect();
    reports.extend(ab.par_iter().map(|&(a, b)| check_lagrange_pow(a, b, 12)).collect::<Vec<_>>());
    reports.extend((1..=40).into_par_iter().map(check_e_identity).collect::<Vec<_>>());
    reports.push(check_initial_condition(20));
    reports.push(check_bernoulli_identities(12));
    reports.push(check_closed_form(10, 8));
    for rep in reports {
        r.absorb(rep);
    }
    // α = β = m turns the coefficients into 1/(ℓ+1) C(m(ℓ+1), ℓ)
    for m in 2..=8usize {
        for ell in 0..=12usize {
            let general = q(m as i64) / q((m + ell * m) as i64) * qi(&binomial_usize(m + ell * m, ell));
            let special = qi(&binomial_usize(m * (ell + 1), ell)) / q(ell as i64 + 1);
            r.check(general == special, || format!("(m, m) specialization fails at m = {m}, ℓ = {ell}"));
        }
    }
    let rows = [
        vec![q(1), q(-1), qf(1, 2), qf(-2, 3), qf(13, 24)],
        vec![q(0), q(1), q(-2), q(3), qf(-13, 3)],
        vec![q(0), q(0), qf(3, 2), q(-5), qf(45, 4)],
        vec![q(0), q(0), q(0), qf(8, 3), qf(-38, 3)],
    ];
    for (ell, want) in rows.iter().enumerate() {
        let row = initial_condition_row(ell, 4);
        let got: Vec<Q> = (0..=4).map(|i| row.coeff(i)).collect();
        r.check(got == *want, || format!("initial-condition row {ell} is {}", row.display()));
    }
    for a in 1..=10usize {
        let s = sigma_poly(a);
        let gen = sigma_generating(a, 20);
        r.check(s == gen, || format!("σ{a} differs from its generating identity"));
        if a >= 2 {
            let lead = qi(&factorial(a - 1));
            r.check(s.leading() == Some(&lead), || format!("σ{a} has leading coefficient {:?}", s.leading()));
        }
    }
    r
}

/// Palindromic positive integer classes of degree `n-3` with constant term
/// `1`, and `ℓ`-summands vanishing below `L^ℓ`.
pub fn structural(n_max: usize) -> VerifyReport {
    let mut r = VerifyReport::new("structural properties").param("n_max", n_max);
    let failures: Vec<String> = (3..=n_max)
        .into_par_iter()
        .flat_map_iter(|n| {
            let (class, summands) = class_ell_sum(n);
            let classes: [(&str, GrothendieckClass); 4] = [
                ("stirling", class_stirling(n)),
                ("ellsum", class),
                ("getzler", class_getzler(n)),
                ("trace", class_trace(n)),
            ];
            let mut out: Vec<String> = classes
                .iter()
                .flat_map(|(name, c)| c.structural_defects().into_iter().map(move |d| format!("n = {n}, {name}: {d}")))
                .collect();
            for (ell, s) in summands.iter().enumerate() {
                if let Some(v) = s.valuation() {
                    if v < ell {
                        out.push(format!("n = {n}: summand {ell} starts at L^{v}"));
                    }
                }
            }
            out
        })
        .collect();
    if let Some(w) = failures.into_iter().next() {
        r.fail(w);
    }
    let fe = functional_equation_residual(n_max.min(12));
    r.absorb(fe);
    r
}
