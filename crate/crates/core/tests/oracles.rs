//! Library results against small independent implementations.

use num_bigint::BigInt;
use num_rational::BigRational;

use mbar0n::classes::{betti_bernoulli, betti_stirling, chi_values, euler_char, Formula};
use mbar0n::combinat::{bernoulli, stirling_first_unsigned, stirling_second};
use mbar0n::ppoly::betti_gamma;

type IntPoly = Vec<BigInt>;

fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = vec![BigInt::from(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn add_into(acc: &mut IntPoly, p: &IntPoly, shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, BigInt::from(0));
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += c;
    }
}

fn choose(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// Keel's recursion on integer vectors:
/// `[M̄(0,n+1)] = (1+L)[M̄(0,n)] + (L/2) Σ_{j=2}^{n-2} C(n,j) [M̄(0,j+1)] [M̄(0,n-j+1)]`.
fn keel_classes(n_max: usize) -> Vec<IntPoly> {
    let mut m: Vec<IntPoly> = vec![vec![]; n_max + 1];
    m[3] = vec![BigInt::from(1)];
    for n in 3..n_max {
        let mut next = Vec::new();
        add_into(&mut next, &m[n], 0);
        add_into(&mut next, &m[n], 1);
        let mut half = Vec::new();
        for j in 2..=n - 2 {
            add_into(&mut half, &mul(&m[j + 1], &m[n - j + 1]).iter().map(|c| c * choose(n, j)).collect(), 1);
        }
        let half: IntPoly = half.into_iter().map(|c| c / 2).collect();
        add_into(&mut next, &half, 0);
        m[n + 1] = next;
    }
    m
}

#[test]
fn every_route_matches_keel_recursion() {
    let oracle = keel_classes(16);
    for n in 3..=16 {
        for f in Formula::CLASS_ROUTES.into_iter().chain([Formula::Bernoulli]) {
            let got = f.class(n).bettis();
            assert_eq!(got, oracle[n], "n = {n}, route {}", f.name());
        }
        for (ell, b) in oracle[n].iter().enumerate() {
            assert_eq!(&betti_stirling(n, ell), b);
            assert_eq!(&betti_gamma(n, ell), b);
        }
    }
    for ell in 0..=4 {
        assert_eq!(betti_bernoulli(11, ell), oracle[11][ell]);
    }
}

#[test]
fn euler_characteristic_is_class_at_one() {
    let oracle = keel_classes(18);
    let chi = chi_values(17);
    for n in 3..=18 {
        let at_one: BigInt = oracle[n].iter().sum();
        assert_eq!(euler_char(n), at_one);
        assert_eq!(chi[n - 1], at_one);
    }
}

/// Counts set partitions of `{0..n}` into `k` blocks by brute force.
fn partitions(n: usize, k: usize) -> u64 {
    fn go(i: usize, n: usize, blocks: usize, k: usize) -> u64 {
        if i == n {
            return u64::from(blocks == k);
        }
        let mut total = blocks as u64 * go(i + 1, n, blocks, k);
        if blocks < k {
            total += go(i + 1, n, blocks + 1, k);
        }
        total
    }
    go(0, n, 0, k)
}

/// Counts permutations of `{0..n}` with `k` cycles by brute force.
fn cycles(n: usize, k: usize) -> u64 {
    fn count(perm: &[usize]) -> usize {
        let mut seen = vec![false; perm.len()];
        let mut c = 0;
        for s in 0..perm.len() {
            if !seen[s] {
                c += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = perm[x];
                }
            }
        }
        c
    }
    fn go(p: &mut Vec<usize>, used: &mut Vec<bool>, k: usize) -> u64 {
        if p.len() == used.len() {
            return u64::from(count(p) == k);
        }
        let mut t = 0;
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                p.push(v);
                t += go(p, used, k);
                p.pop();
                used[v] = false;
            }
        }
        t
    }
    go(&mut Vec::new(), &mut vec![false; n], k)
}

#[test]
fn stirling_numbers_count() {
    for n in 0..=8 {
        for k in 0..=n {
            assert_eq!(stirling_second(n, k), BigInt::from(partitions(n, k)), "S({n},{k})");
            assert_eq!(stirling_first_unsigned(n, k), BigInt::from(cycles(n, k)), "c({n},{k})");
        }
    }
}

#[test]
fn bernoulli_from_generating_function() {
    // t e^t / (e^t - 1) = Σ Bⱼ tʲ/j! = e^t / a(t), a_i = 1/(i+1)!
    let n = 19;
    let a: Vec<BigRational> = (0..=n)
        .map(|i| BigRational::new(1.into(), (1..=i as u64 + 1).product::<u64>().into()))
        .collect();
    // b = e^t / a, coefficientwise division
    let mut b: Vec<BigRational> = Vec::new();
    for k in 0..=n {
        let ek = BigRational::new(1.into(), (1..=k as u64).product::<u64>().into());
        let s: BigRational = (1..=k).map(|i| &a[i] * &b[k - i]).sum();
        b.push(ek - s);
    }
    for (j, bj) in b.iter().enumerate() {
        let fact = BigRational::from_integer((1..=j as u64).product::<u64>().into());
        assert_eq!(bj * fact, bernoulli(j), "B{j}");
    }
}
