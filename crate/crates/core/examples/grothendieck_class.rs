//! The class of M̄(0,n) by every route, with the routes compared.

use mbar0n::classes::Formula;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    let mut classes = Vec::new();
    for f in Formula::CLASS_ROUTES {
        let c = f.class(n);
        println!("{:<9} {}", f.name(), c.poly.display("L"));
        classes.push(c);
    }
    assert!(classes.windows(2).all(|w| w[0] == w[1]));
    let c = &classes[0];
    println!("palindromic: {}, Euler characteristic: {}", c.poly.is_palindromic(), c.euler_char());
}
