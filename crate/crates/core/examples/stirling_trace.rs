//! Classes as shifted traces of a product of Stirling matrices, and the
//! polynomial a_n(k) interpolating each trace diagonal.

use mbar0n::classes::stirling_trace;
use mbar0n::lambert::a_n_polynomial;

fn main() {
    for n in 4..=7 {
        let (tr, class) = stirling_trace(n, 8);
        println!("tr_{} = {}", n - 2, tr.display());
        println!("  (1-L)^{} tr_{} = {}", n - 1, n - 2, class.poly.display("L"));
    }
    println!("a_6(k) = {}", a_n_polynomial(6).display("k"));
}
