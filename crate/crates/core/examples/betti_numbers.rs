//! Individual Betti numbers from the closed Stirling, Bernoulli and Γ forms,
//! without computing the whole class.

use mbar0n::classes::{betti_bernoulli, betti_stirling};
use mbar0n::ppoly::betti_gamma;

fn main() {
    println!("{:>3} {:>4} {:>24}", "n", "ell", "rk H^{2 ell}");
    for (n, ell) in [(5, 1), (6, 1), (10, 3), (12, 4), (20, 8)] {
        let s = betti_stirling(n, ell);
        assert_eq!(s, betti_bernoulli(n, ell));
        assert_eq!(s, betti_gamma(n, ell));
        println!("{n:>3} {ell:>4} {s:>24}");
    }
}
