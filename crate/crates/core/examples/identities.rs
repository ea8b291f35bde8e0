//! The binomial, convolution and Bernoulli identities, checked exactly.

use mbar0n::identities::{
    check_bernoulli_identities, check_closed_form, check_e_identity, check_initial_condition, check_lagrange_pow,
    check_vandermonde_conv,
};

fn main() {
    let reports = [
        check_vandermonde_conv(3, 2),
        check_lagrange_pow(3, 3, 10),
        check_e_identity(10),
        check_initial_condition(12),
        check_bernoulli_identities(8),
        check_closed_form(8, 6),
    ];
    for r in reports {
        println!("{r}");
        for n in &r.notes {
            println!("  {n}");
        }
    }
}
