//! The tree function, the numerators F_m(z, T), and M̂ rebuilt from them.

use mbar0n::lambert::{f_m_polynomial, mhat_from_tree, tree_series};

fn main() {
    println!("T(t) = {}", tree_series(6).display());
    for m in 1..=3 {
        let f = f_m_polynomial(m);
        println!("F_{m}:");
        for j in (0..=2 * m).rev() {
            println!("  z^{j}: {}", f.z_coeff(j).display("T"));
        }
    }
    let (_, report) = mhat_from_tree(8, 4, 4);
    println!("{report}");
}
