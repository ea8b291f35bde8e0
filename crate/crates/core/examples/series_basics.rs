//! Truncated power series with exact coefficients: exp, log, rational
//! powers and reversion.

use mbar0n::ring::qf;
use mbar0n::series::{TruncSeries, Var};

fn main() {
    let x = TruncSeries::from_ints(Var::X, 8, &[0, 1]);
    let e = x.exp().unwrap();
    println!("exp(x)        = {}", e.display());

    let one_plus_x = TruncSeries::from_ints(Var::X, 8, &[1, 1]);
    println!("log(1+x)      = {}", one_plus_x.log().unwrap().display());
    println!("(1+x)^(1/2)   = {}", one_plus_x.pow(&qf(1, 2)).unwrap().display());

    // x - x² reverts to the Catalan generating function.
    let g = TruncSeries::from_ints(Var::X, 8, &[0, 1, -1]);
    println!("revert(x-x^2) = {}", g.revert().unwrap().display());

    // (1 - L²)^{1/L} = exp(log(1 - L²)/L)
    let l = TruncSeries::from_ints(Var::L, 6, &[1, 0, -1]).log().unwrap();
    println!("(1-L^2)^(1/L) = {}", l.divide_by_variable().unwrap().exp().unwrap().display());
}
