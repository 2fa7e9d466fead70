//! V^+ and the reduction to a module over the smaller Yangian.

use superyang::rep::{compute_vplus, fundamental_tensor, reduce_rep, vector_rep};
use superyang::GradedSpace;

fn main() -> superyang::Result<()> {
    let s = GradedSpace::new(2)?;
    for m in [vector_rep(&s), fundamental_tensor(&s, 2)?] {
        let vplus = compute_vplus(&m)?;
        let (small, report) = reduce_rep(&m, None)?;
        println!(
            "dim {} -> V^+ dim {} (n = {} module of dim {}): {}",
            m.dim(),
            vplus.len(),
            small.n(),
            small.dim(),
            report.summary()
        );
    }
    Ok(())
}
