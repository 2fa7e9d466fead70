//! Highest vectors and Drinfeld polynomials multiply under tensor products.

use superyang::hw::{drinfeld_of_module, hw_tensor_product_check};
use superyang::rep::{fundamental_module, shift_rep, tensor_rep, check_rtt};
use superyang::{GradedSpace, Rat};

fn main() -> superyang::Result<()> {
    let s = GradedSpace::new(2)?;
    let a = fundamental_module(&s, 1)?;
    let b = shift_rep(&fundamental_module(&s, 2)?, &Rat::new(1, 3));
    println!("{}", hw_tensor_product_check(&a, &b)?.summary());

    let t = tensor_rep(&[a.clone(), a.clone()], &[Rat::zero(), Rat::new(-1, 2)])?;
    println!("dim {}: {}", t.dim(), check_rtt(&t, None)?.summary());
    for m in [&a, &b] {
        let d = drinfeld_of_module(m)?.drinfeld;
        println!("{:?}", d.tuple().map(|t| t.polys.iter().map(|p| p.to_string()).collect::<Vec<_>>()));
    }
    Ok(())
}
