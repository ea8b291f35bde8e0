//! Euler characteristics from their generating series, checked against the
//! Betti sums.

use mbar0n::classes::{chi_values, Formula};

fn main() {
    let chi = chi_values(14);
    for n in 3..=15 {
        let sum = Formula::Stirling.class(n).euler_char();
        assert_eq!(sum, chi[n - 1]);
        println!("chi(M(0,{n:>2})) = {sum}");
    }
}
