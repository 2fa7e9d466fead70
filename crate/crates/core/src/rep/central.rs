use num_bigint::BigInt;
use num_traits::Zero;

use super::module::RepModule;
use crate::arith::{interpolate, Poly, Rat, RationalFunction};
use crate::error::Result;
use crate::report::{Report, Witness};
use crate::sparse::SpMat;
use crate::superlin::odd;

/// Computes `T(u - kappa) T^t(u)` on `C (x) V` and checks that it equals
/// `c(u) 1` for a single rational function `c(u)`, which is returned.
///
/// The block `(i, q)` of the product is
/// `sum_p (-1)^{(p + q) q} theta_p theta_q t_ip(u - kappa) t_q'p'(u)`.
/// Its entries times `D(u - kappa) D(u)` are polynomials of degree at most
/// `2 deg D`, so `2 deg D + 1` sample points decide the identity; one
/// further point confirms the interpolated `c(u)`. Since the product is a
/// scalar operator, its coefficients commute with the whole action.
pub fn central_series(rep: &RepModule) -> Result<(Option<RationalFunction>, Report)> {
    let s = rep.space();
    let nn = s.dim();
    let d = rep.dim();
    let kappa = s.kappa();
    let delta = rep.degree();
    let pts = rep.sample_points(2 * delta + 2, |u| !rep.is_pole(&(u - &kappa)));
    let dd = rep.denominator().shift(&-kappa.clone());
    let dd = &dd * rep.denominator();
    let mut samples = Vec::with_capacity(pts.len());
    let report = Report::new("central", rep.n()).module(rep.recipe().clone());
    for u in &pts {
        let a = rep.eval(&(u - &kappa))?;
        let b = rep.eval(u)?;
        let mut scalar: Option<BigInt> = None;
        for i in 1..=nn {
            for q in 1..=nn {
                let terms: Vec<(BigInt, SpMat<BigInt>)> = s
                    .indices()
                    .map(|p| {
                        let neg = odd((s.parity(p) as u32 + s.parity(q) as u32) * s.parity(q) as u32)
                            ^ (s.theta(p) * s.theta(q) < 0);
                        let c = if neg { -BigInt::from(1) } else { BigInt::from(1) };
                        (c, a.op(i, p).mul(b.op(s.prime(q), s.prime(p))))
                    })
                    .collect();
                let refs: Vec<(BigInt, &SpMat<BigInt>)> = terms.iter().map(|(c, m)| (c.clone(), m)).collect();
                let block = SpMat::linear_combination(d, d, &refs);
                let want = if i == q {
                    let c = scalar.get_or_insert_with(|| block.get(0, 0)).clone();
                    SpMat::scalar_identity(d, c)
                } else {
                    SpMat::zeros(d, d)
                };
                if let Some((r, c)) = block.first_difference(&want) {
                    let w = Witness::at((i - 1) * d + r, (q - 1) * d + c, u.clone(), None)
                        .with_message("product is not a scalar operator");
                    return Ok((None, report.outcome(Some(w))));
                }
            }
        }
        let c = scalar.unwrap_or_else(BigInt::zero);
        let value = &Rat::from_int(c) / &Rat::from_int(a.den() * b.den());
        samples.push((u.clone(), &value * &dd.eval(u)));
    }
    let (nodes, check) = samples.split_at(2 * delta + 1);
    let num = interpolate(nodes);
    for (u, y) in check {
        if &num.eval(u) != y {
            let w = Witness::message(format!("scalar values do not fit degree {}", 2 * delta)).with_u(u.clone());
            return Ok((None, report.outcome(Some(w))));
        }
    }
    let c = RationalFunction::new(num, dd)?;
    let mut report = report.outcome(None);
    report.c_series = Some(c.clone());
    Ok((Some(c), report))
}

/// `c(u)` of the vector representation, `1 - u^-2`.
pub fn vector_central_series() -> RationalFunction {
    RationalFunction::new(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[0, 0, 1])).expect("nonzero")
}
