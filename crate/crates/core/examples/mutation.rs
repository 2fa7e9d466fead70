//! Deliberately broken sign conventions are caught with a witness.

use superyang::rep::{check_defrel, check_rtt, vector_rep, TupleSelection};
use superyang::superlin::check_ybe;
use superyang::{GradedSpace, Mutation};

fn main() -> superyang::Result<()> {
    for m in [Mutation::Wrap, Mutation::Theta, Mutation::QSign] {
        let s = GradedSpace::new(1)?.with_mutation(Some(m));
        let v = vector_rep(&s);
        println!("{m:?}");
        for r in [
            check_rtt(&v, None)?,
            check_ybe(&s, 8)?,
            check_defrel(&v, None, TupleSelection::All)?,
        ] {
            println!("  {}", r.summary());
        }
    }
    Ok(())
}
