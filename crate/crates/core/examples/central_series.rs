//! The central series c(u) from T(u - kappa) T^t(u) = c(u) 1.

use superyang::rep::{central_series, fundamental_tensor, twist_rep, vector_rep};
use superyang::{GradedSpace, Rat, RationalFunction};

fn main() -> superyang::Result<()> {
    let s = GradedSpace::new(1)?;
    let v = vector_rep(&s);
    let t = fundamental_tensor(&s, 2)?;
    let f = RationalFunction::linear_ratio(&Rat::from(1), &Rat::from(2));
    let w = twist_rep(&v, &f)?;
    for (name, m) in [("vector", &v), ("tensor square", &t), ("twisted vector", &w)] {
        let (c, report) = central_series(m)?;
        match c {
            Some(c) => {
                let e = c.series_expand(6)?;
                let coeffs: Vec<String> = e.coeffs().iter().map(|x| x.to_string()).collect();
                println!("{name}: c(u) = {c}");
                println!("  expansion in u^-1: [{}]", coeffs.join(", "));
            }
            None => println!("{name}: {}", report.summary()),
        }
    }
    Ok(())
}
