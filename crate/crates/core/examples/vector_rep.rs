//! The vector representation T(u) -> R(u): RTT, defining relations, the
//! central series and the osp(1|2n) embedding.

use superyang::rep::{check_defrel, check_rtt, central_series, osp_embed, osp_weights, vector_rep, TupleSelection};
use superyang::GradedSpace;

fn main() -> superyang::Result<()> {
    let s = GradedSpace::new(2)?;
    let v = vector_rep(&s);
    println!("dimension {}, denominator {}", v.dim(), v.denominator());
    println!("t_12(u) = {:?}", v.action(1, 2)?.iter().collect::<Vec<_>>());

    println!("{}", check_rtt(&v, None)?.summary());
    println!("{}", check_defrel(&v, None, TupleSelection::All)?.summary());
    let (c, _) = central_series(&v)?;
    println!("c(u) = {}", c.expect("scalar"));

    let (gens, report) = osp_embed(&v)?;
    println!("{}", report.summary());
    if let Some(w) = osp_weights(&v, &gens) {
        for (i, wt) in w.iter().enumerate() {
            let wt: Vec<String> = wt.iter().map(|x| x.to_string()).collect();
            println!("  e_{} has weight ({})", i + 1, wt.join(", "));
        }
    }
    Ok(())
}
