//! The polynomials p_m^(k)(z) and the ℓ-polynomials Δ and Γ behind them.

use mbar0n::ppoly::{delta_poly, gamma_poly, p_polynomial};

fn main() {
    for k in 0..=4 {
        for m in 0..=k {
            println!("p_{m}^({k}) = {}", p_polynomial(k, m).display("z"));
        }
    }
    for (m, j) in [(1, 0), (1, 1), (2, 0), (3, 2)] {
        println!("Delta_{m}{j} = {}", delta_poly(m, j).display("l"));
    }
    println!("Gamma_40 = {}", gamma_poly(4, 0).display("l"));
}
