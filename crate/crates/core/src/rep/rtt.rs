use rayon::prelude::*;

use num_bigint::BigInt;

use super::module::RepModule;
use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::report::{Report, Witness};
use crate::scalar::{log2_abs, Scalar};
use crate::sparse::SpMat;
use crate::superlin::{odd, r_cleared, GradedSpace, Mutation};

/// Default grid side: the per-variable degree bound `deg D + 2` of the
/// cleared identity, plus two.
pub fn default_grid(rep: &RepModule) -> usize {
    rep.degree() + 4
}

pub(crate) fn require_grid(rep: &RepModule, grid: Option<usize>, bound: usize) -> Result<usize> {
    let g = grid.unwrap_or_else(|| default_grid(rep));
    if g <= bound {
        return Err(Error::InvalidArgument(format!(
            "grid {g} does not exceed the degree bound {bound}"
        )));
    }
    Ok(g)
}

/// Checks `R(u-v) T1(u) T2(v) = T2(v) T1(u) R(u-v)` on `C (x) C (x) V`.
///
/// Both sides are multiplied by `2(u-v)(u-v-kappa) D(u) D(v)`, which makes
/// them polynomial of degree at most `deg D + 2` in each variable, and are
/// compared exactly on `grid x grid` integer points avoiding the poles of
/// `D`.
///
/// With `T(u)` wrapped as `sum e_ij (x) t_ij(u) (-1)^{ij + j}`, the block
/// `(i, j)` of `T(u)` on `C (x) V` is plainly `t_ij(u)`; the only Koszul
/// sign is the one picked up by `T1` passing the second tensor leg:
/// `T1(u)(e_j (x) e_l (x) w) = sum_p (-1)^{(p + j) l} e_p (x) e_l (x) t_pj(u) w`.
pub fn check_rtt(rep: &RepModule, grid: Option<usize>) -> Result<Report> {
    let side = require_grid(rep, grid, rep.degree() + 2)?;
    let pts = rep.sample_points(side, |_| true);
    let pairs: Vec<(Rat, Rat)> = pts
        .iter()
        .flat_map(|u| pts.iter().map(move |v| (u.clone(), v.clone())))
        .collect();
    let space = rep.space();
    let wrap = space.mutation() != Some(Mutation::Wrap);
    let found = pairs
        .par_iter()
        .map(|(u, v)| -> Result<Option<Witness>> {
            let x = (u - v).numer().clone();
            let x = i128::try_from(&x).map_err(|_| Error::InvalidArgument("grid too large".into()))?;
            let r = r_cleared(space, x);
            let (a, b) = (rep.eval(u)?, rep.eval(v)?);
            let hit = match (a.small(), b.small()) {
                (Some(sa), Some(sb)) if fits(space, rep.dim(), &r, sa.log2_max, sb.log2_max) => {
                    rtt_point(space, rep.dim(), &sa.ops, &sb.ops, &r, wrap)
                }
                _ => {
                    let rb = r.map(|x| BigInt::from(*x));
                    rtt_point(space, rep.dim(), a.ops(), b.ops(), &rb, wrap)
                }
            };
            Ok(hit.map(|(row, col)| Witness::at(row, col, u.clone(), Some(v.clone()))))
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        });
    let witness = found.transpose()?.flatten();
    Ok(Report::new("rtt", rep.n())
        .grid(side)
        .module(rep.recipe().clone())
        .outcome(witness))
}

/// Whether every intermediate of [`rtt_point`] stays below `2^126`.
fn fits(space: &GradedSpace, d: usize, r: &SpMat<i128>, la: f64, lb: f64) -> bool {
    let lr = r
        .iter()
        .map(|(_, _, x)| log2_abs(&BigInt::from(*x)))
        .fold(0.0, f64::max);
    let terms = ((space.dim() + 2) * d) as f64;
    la + lb + lr + terms.log2() + 1.0 < 126.0
}

/// Compares both sides at one point, given `den * t_ij` at `u` (`mu`) and
/// at `v` (`mv`) and the cleared R-matrix. Returns the first differing
/// `(row, col)` in column-major order of the `dim^2 d x dim^2 d` matrices.
pub(crate) fn rtt_point<T: Scalar>(
    space: &GradedSpace,
    d: usize,
    mu: &[SpMat<T>],
    mv: &[SpMat<T>],
    r: &SpMat<T>,
    koszul: bool,
) -> Option<(usize, usize)> {
    let nn = space.dim();
    let rt = r.transpose();
    let sgn = |e: bool| koszul && e;
    let mut first: Option<(usize, usize)> = None;
    for j in 0..nn {
        for l in 0..nn {
            // Y_(p,q) = (-1)^{(p+j) q} t_pj(u) t_ql(v), the (p,q),(j,l) block of T1 T2
            let y: Vec<SpMat<T>> = (0..nn * nn)
                .map(|pq| {
                    let (p, q) = (pq / nn, pq % nn);
                    let neg = sgn(odd(
                        (space.par0(p) as u32 + space.par0(j) as u32) * space.par0(q) as u32,
                    ));
                    let m = mu[p * nn + j].mul(&mv[q * nn + l]);
                    if neg {
                        m.neg()
                    } else {
                        m
                    }
                })
                .collect();
            let col = r.col(j * nn + l);
            for i in 0..nn {
                for k in 0..nn {
                    let lhs_terms: Vec<(T, &SpMat<T>)> = rt
                        .col(i * nn + k)
                        .iter()
                        .map(|(pq, c)| (c.clone(), &y[*pq as usize]))
                        .collect();
                    let lhs = SpMat::linear_combination(d, d, &lhs_terms);
                    // (T2 T1)_{(i,k),(m,q)} = (-1)^{(i+m) q} t_kq(v) t_im(u)
                    let prods: Vec<(T, SpMat<T>)> = col
                        .iter()
                        .map(|(mq, c)| {
                            let (m, q) = (*mq as usize / nn, *mq as usize % nn);
                            let neg = sgn(odd(
                                (space.par0(i) as u32 + space.par0(m) as u32) * space.par0(q) as u32,
                            ));
                            (c.signed(neg), mv[k * nn + q].mul(&mu[i * nn + m]))
                        })
                        .collect();
                    let rhs_terms: Vec<(T, &SpMat<T>)> = prods.iter().map(|(c, m)| (c.clone(), m)).collect();
                    let rhs = SpMat::linear_combination(d, d, &rhs_terms);
                    if let Some((rr, cc)) = lhs.first_difference(&rhs) {
                        let cand = ((i * nn + k) * d + rr, (j * nn + l) * d + cc);
                        if first.is_none_or(|f| (cand.1, cand.0) < (f.1, f.0)) {
                            first = Some(cand);
                        }
                    }
                }
            }
            if first.is_some() {
                return first;
            }
        }
    }
    first
}
