use num_bigint::BigInt;
use rayon::prelude::*;

use super::module::{NumAction, RepModule};
use super::rtt::require_grid;
use crate::arith::Rat;
use crate::error::Result;
use crate::report::{Report, Witness};
use crate::sparse::SpMat;
use crate::superlin::odd;

/// Which generator tuples `(i, j, k, l)` to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TupleSelection {
    All,
    /// `count` tuples spread evenly over the lexicographic order.
    Sample(usize),
}

impl TupleSelection {
    pub fn tuples(self, dim: usize) -> Vec<[usize; 4]> {
        let total = dim.pow(4);
        let decode = |t: usize| {
            [
                t / dim.pow(3) + 1,
                t / dim.pow(2) % dim + 1,
                t / dim % dim + 1,
                t % dim + 1,
            ]
        };
        match self {
            TupleSelection::Sample(count) if count < total => (0..count)
                .map(|t| decode(t * total / count))
                .collect(),
            _ => (0..total).map(decode).collect(),
        }
    }
}

/// Checks the expanded defining relations for every selected tuple:
/// the supercommutator `[t_ij(u), t_kl(v)]` against the first-line term
/// and the two delta correction sums, all multiplied by
/// `2(u-v)(u-v-kappa) D(u) D(v)`.
pub fn check_defrel(rep: &RepModule, grid: Option<usize>, sel: TupleSelection) -> Result<Report> {
    let side = require_grid(rep, grid, rep.degree() + 2)?;
    let pts = rep.sample_points(side, |_| true);
    let evals: Vec<_> = pts.iter().map(|u| rep.eval(u)).collect::<Result<_>>()?;
    let tuples = sel.tuples(rep.space().dim());
    let witness = tuples.par_iter().find_map_first(|t| {
        for (a, u) in evals.iter().zip(&pts) {
            for (b, v) in evals.iter().zip(&pts) {
                if let Some((row, col)) = defrel_point(rep, *t, a, b, &(u - v)) {
                    return Some(Witness::at(row, col, u.clone(), Some(v.clone())).with_tuple(t));
                }
            }
        }
        None
    });
    Ok(Report::new("defrel", rep.n())
        .grid(side)
        .module(rep.recipe().clone())
        .outcome(witness))
}

fn defrel_point(rep: &RepModule, t: [usize; 4], a: &NumAction, b: &NumAction, x: &Rat) -> Option<(usize, usize)> {
    let s = rep.space();
    let d = rep.dim();
    let [i, j, k, l] = t;
    let p = |i: usize| s.parity(i) as u32;
    let th = |i: usize, j: usize| s.theta(i) * s.theta(j) < 0;
    let x = x.numer().clone();
    let m = BigInt::from(2) * &x + BigInt::from(s.two_kappa_neg());
    let sigma = odd((p(i) + p(j)) * (p(k) + p(l)));
    let lhs = SpMat::linear_combination(
        d,
        d,
        &[
            (&x * &m, &a.op(i, j).mul(b.op(k, l))),
            (if sigma { &x * &m } else { -(&x * &m) }, &b.op(k, l).mul(a.op(i, j))),
        ],
    );
    let sa = odd(p(i) * p(j) + p(i) * p(k) + p(j) * p(k));
    let ma = if sa { -m.clone() } else { m.clone() };
    let mut parts: Vec<(BigInt, SpMat<BigInt>)> = vec![
        (ma.clone(), a.op(k, j).mul(b.op(i, l))),
        (-ma, b.op(k, j).mul(a.op(i, l))),
    ];
    let two_x = BigInt::from(2) * &x;
    if k == s.prime(i) {
        for q in s.indices() {
            let neg = odd(p(i) + p(i) * p(j) + p(j) * p(q)) ^ th(i, q);
            let c = if neg { two_x.clone() } else { -two_x.clone() };
            parts.push((c, a.op(q, j).mul(b.op(s.prime(q), l))));
        }
    }
    if l == s.prime(j) {
        for q in s.indices() {
            let neg = odd(p(j) + p(q) + p(i) * p(k) + p(j) * p(k) + p(i) * p(q)) ^ th(j, q);
            let c = if neg { -two_x.clone() } else { two_x.clone() };
            parts.push((c, b.op(k, s.prime(q)).mul(a.op(i, q))));
        }
    }
    let terms: Vec<(BigInt, &SpMat<BigInt>)> = parts.iter().map(|(c, m)| (c.clone(), m)).collect();
    let rhs = SpMat::linear_combination(d, d, &terms);
    lhs.first_difference(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{fundamental_tensor, vector_rep};
    use crate::superlin::{GradedSpace, Mutation};

    #[test]
    fn tuple_sampling() {
        assert_eq!(TupleSelection::All.tuples(3).len(), 81);
        let s = TupleSelection::Sample(50).tuples(5);
        assert_eq!(s.len(), 50);
        assert_eq!(s[0], [1, 1, 1, 1]);
        assert!(s.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(TupleSelection::Sample(500).tuples(3).len(), 81);
    }

    #[test]
    fn vector_rep_all_tuples() {
        let v = vector_rep(&GradedSpace::new(1).unwrap());
        assert!(check_defrel(&v, None, TupleSelection::All).unwrap().passed());
    }

    #[test]
    fn tensor_square_sampled() {
        let t = fundamental_tensor(&GradedSpace::new(1).unwrap(), 2).unwrap();
        assert!(check_defrel(&t, None, TupleSelection::Sample(20)).unwrap().passed());
    }

    #[test]
    fn theta_mutation_breaks_relations() {
        let s = GradedSpace::new(1).unwrap().with_mutation(Some(Mutation::Theta));
        let r = check_defrel(&vector_rep(&s), None, TupleSelection::All).unwrap();
        assert!(!r.passed());
        assert!(r.witness.unwrap().tuple.is_some());
    }
}
