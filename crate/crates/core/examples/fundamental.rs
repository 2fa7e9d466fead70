//! Fundamental modules: the cyclic span of xi_k in the shifted tensor power
//! and its highest-weight data.

use superyang::hw::{fundamental_module_report, fundamental_report};
use superyang::GradedSpace;

fn main() -> superyang::Result<()> {
    for (n, k) in [(1, 1), (2, 1), (2, 2), (3, 3)] {
        let s = GradedSpace::new(n)?;
        let (m, hw) = fundamental_module_report(&s, k)?;
        println!("n = {n}, k = {k}: dim {} inside {}", m.dim(), (2 * n + 1).pow(k as u32));
        for (i, l) in hw.lambda.iter().enumerate() {
            println!("  lambda_{} = {l}", i + 1);
        }
        println!("  {}", hw.summary());
        let (_, highest) = fundamental_report(&s, k)?;
        println!("  xi_k highest in the tensor: {}", highest.passed());
    }
    Ok(())
}
