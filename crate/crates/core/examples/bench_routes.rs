//! Wall time and scalar multiplication counts for each class route.

use std::time::Instant;

use mbar0n::classes::Formula;
use mbar0n::ring::scalar_mul_count;

fn main() {
    let n_max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(16);
    println!("{:<10} {:>10} {:>14}", "route", "ms", "scalar muls");
    for f in Formula::CLASS_ROUTES.into_iter().chain([Formula::Bernoulli]) {
        let before = scalar_mul_count();
        let t = Instant::now();
        for n in 3..=n_max {
            f.class(n);
        }
        println!("{:<10} {:>10} {:>14}", f.name(), t.elapsed().as_millis(), scalar_mul_count() - before);
    }
}
