//! Exact arithmetic: rationals, polynomials, rational functions, series and
//! reconstruction from samples.

use superyang::arith::rational_reconstruct;
use superyang::hw::solve_shift_quotient;
use superyang::{Poly, Rat, RationalFunction};

fn main() -> superyang::Result<()> {
    let p = Poly::from_roots(&[Rat::from(1), Rat::new(-1, 2)]);
    let q = Poly::from_roots(&[Rat::from(3)]);
    let f = RationalFunction::new(&p * &q, &q * &Poly::u().pow(2))?;
    println!("f = {f}");
    println!("f(u + 1) = {}", f.shift_arg(&Rat::one()));
    println!("f expanded: {:?}", f.series_expand(4)?.coeffs());

    let samples: Vec<(Rat, Rat)> = (1..=6)
        .map(|k| Rat::from(k))
        .filter_map(|x| f.eval(&x).map(|y| (x, y)))
        .collect();
    println!("reconstructed: {}", rational_reconstruct(&samples, 2, 2)?);

    let g = RationalFunction::new(p.shift(&Rat::one()), p.clone())?;
    println!("P with P(u+1)/P(u) = {g}: {:?}", solve_shift_quotient(g.num(), g.den()));
    Ok(())
}
