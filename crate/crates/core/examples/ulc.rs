//! Ultra-log-concavity certificates for the p_m^(k), uniformly in k.

use mbar0n::ppoly::{gamma_m0_coeffs, is_log_concave, precompute, ulc_certify};

fn main() {
    let m_max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(12);
    precompute(m_max);
    for m in 1..=m_max {
        let r = ulc_certify(m, 10);
        let ks: Vec<String> = r.exceptional_ell.iter().map(|l| (l + m).to_string()).collect();
        if ks.is_empty() && !r.fails_eventually {
            println!("m = {m:>2}: ultra-log-concave for all k >= m");
        } else {
            println!("m = {m:>2}: fails at k = {}", ks.join(", "));
        }
    }
    println!("Gamma_(20,0) log-concave: {}", is_log_concave(&gamma_m0_coeffs(20)));
}
