//! Yang-Baxter equation for R(u) on C^(1|2n), checked exactly on a grid.

use superyang::superlin::{check_ybe, r_matrix};
use superyang::GradedSpace;

fn main() -> superyang::Result<()> {
    let s = GradedSpace::new(1)?;
    let r = r_matrix(&s);
    println!("R(u) acting e_1 (x) e_3 -> e_1 (x) e_3 for n = 1: {}", r.entry(1, 3, 1, 3));
    for n in 1..=3 {
        let report = check_ybe(&GradedSpace::new(n)?, 8)?;
        println!("{}", report.summary());
    }
    Ok(())
}
