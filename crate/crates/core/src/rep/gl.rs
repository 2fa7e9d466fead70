use num_bigint::BigInt;
use rayon::prelude::*;

use super::module::RepModule;
use super::rtt::require_grid;
use crate::error::Result;
use crate::report::{Report, Witness};
use crate::sparse::SpMat;

/// Checks the `Y(gl_n)` relations for `t°_ij(u) = t_ij(-u)`, `1 <= i, j <= n`:
/// `(u - v) [t°_ij(u), t°_kl(v)] = t°_kj(u) t°_il(v) - t°_kj(v) t°_il(u)`.
///
/// Points are taken as `u = -w` for non-poles `w`, so the operators are the
/// module's own evaluations at `w`. After clearing `D(w) D(w')` both sides
/// have degree at most `deg D + 1` in each variable.
pub fn gl_check(rep: &RepModule, grid: Option<usize>) -> Result<Report> {
    let side = require_grid(rep, grid, rep.degree() + 1)?;
    let n = rep.n();
    let d = rep.dim();
    let ws = rep.sample_points(side, |_| true);
    let evals: Vec<_> = ws.iter().map(|w| rep.eval(w)).collect::<Result<_>>()?;
    let tuples: Vec<[usize; 4]> = (0..n.pow(4))
        .map(|t| [t / n.pow(3) + 1, t / (n * n) % n + 1, t / n % n + 1, t % n + 1])
        .collect();
    let witness = tuples.par_iter().find_map_first(|&[i, j, k, l]| {
        for (a, wa) in evals.iter().zip(&ws) {
            for (b, wb) in evals.iter().zip(&ws) {
                // u - v = wb - wa
                let x = (wb - wa).numer().clone();
                let lhs = SpMat::linear_combination(
                    d,
                    d,
                    &[
                        (x.clone(), &a.op(i, j).mul(b.op(k, l))),
                        (-x, &b.op(k, l).mul(a.op(i, j))),
                    ],
                );
                let rhs = SpMat::linear_combination(
                    d,
                    d,
                    &[
                        (BigInt::from(1), &a.op(k, j).mul(b.op(i, l))),
                        (BigInt::from(-1), &b.op(k, j).mul(a.op(i, l))),
                    ],
                );
                if let Some((r, c)) = lhs.first_difference(&rhs) {
                    return Some(Witness::at(r, c, -wa.clone(), Some(-wb.clone())).with_tuple(&[i, j, k, l]));
                }
            }
        }
        None
    });
    Ok(Report::new("gl", n)
        .grid(side)
        .module(rep.recipe().clone())
        .outcome(witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{fundamental_tensor, vector_rep};
    use crate::superlin::GradedSpace;

    #[test]
    fn vector_rep_passes() {
        let v = vector_rep(&GradedSpace::new(2).unwrap());
        assert!(gl_check(&v, None).unwrap().passed());
    }

    #[test]
    fn tensor_passes() {
        let t = fundamental_tensor(&GradedSpace::new(2).unwrap(), 2).unwrap();
        assert!(gl_check(&t, None).unwrap().passed());
    }
}
