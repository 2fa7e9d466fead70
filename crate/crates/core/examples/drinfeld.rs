//! Drinfeld polynomials from highest weights, through shifts and twists.

use superyang::hw::{complete_weights, drinfeld_of_module, drinfeld_of_weights};
use superyang::rep::{shift_rep, twist_rep, vector_rep};
use superyang::{GradedSpace, Poly, Rat, RationalFunction};

fn show(label: &str, d: &superyang::hw::DrinfeldOutcome) {
    match d.tuple() {
        Some(t) => {
            let ps: Vec<String> = t.polys.iter().map(|p| p.to_string()).collect();
            println!("{label}: ({})", ps.join(", "));
        }
        None => println!("{label}: {d:?}"),
    }
}

fn main() -> superyang::Result<()> {
    let s = GradedSpace::new(2)?;
    let v = vector_rep(&s);
    show("vector", &drinfeld_of_module(&v)?.drinfeld);
    show("shifted by 5/2", &drinfeld_of_module(&shift_rep(&v, &Rat::new(5, 2)))?.drinfeld);
    let f = RationalFunction::linear_ratio(&Rat::from(3), &Rat::from(-1));
    show("twisted by (u+3)/(u-1)", &drinfeld_of_module(&twist_rep(&v, &f)?)?.drinfeld);

    // lambda_1 = u(u-2)/((u+1)(u-1)), lambda_2 = lambda_3 = 1, so P_1 = u(u-2)
    let l1 = RationalFunction::new(
        Poly::from_roots(&[Rat::zero(), Rat::from(2)]),
        Poly::from_roots(&[Rat::from(-1), Rat::one()]),
    )?;
    let one = RationalFunction::one();
    let hw = complete_weights(&[l1, one.clone(), one], &s)?;
    for (i, l) in hw.lambda.iter().enumerate() {
        println!("  lambda_{} = {l}", i + 1);
    }
    show("from weights", &drinfeld_of_weights(&hw));
    Ok(())
}
