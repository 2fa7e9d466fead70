use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use num_bigint::BigInt;

use super::build::{fundamental_tensor, restrict};
use super::module::{NumAction, RepModule};
use super::recipe::Recipe;
use super::rtt::check_rtt;
use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::hw::xi_vector;
use crate::linalg::{clear_denominators, null_space, Echelon};
use crate::report::Report;
use crate::sparse::SpVec;
use crate::superlin::GradedSpace;

/// Evaluations at `deg D + 1` points. A polynomial operator identity of
/// degree at most `deg D` holds for all `u` once it holds at these points.
fn spanning_evaluations(rep: &RepModule) -> Result<Vec<Arc<NumAction>>> {
    rep.sample_points(rep.degree() + 1, |_| true)
        .iter()
        .map(|u| rep.eval(u))
        .collect()
}

/// Basis (reduced echelon, leading coordinate 1) of
/// `{ eta : t_ij(u) eta = 0 for all u and all (i, j) in pairs }`.
pub fn joint_kernel(rep: &RepModule, pairs: &[(usize, usize)]) -> Result<Vec<SpVec<Rat>>> {
    let evals = spanning_evaluations(rep)?;
    let mut out: Vec<SpVec<Rat>> = Vec::new();
    for bucket in rep.weight_buckets()? {
        let mut rows = Vec::new();
        for a in &evals {
            for &(i, j) in pairs {
                let m = a.op(i, j);
                let mut by_row: BTreeMap<u32, SpVec<BigInt>> = BTreeMap::new();
                for (local, &c) in bucket.iter().enumerate() {
                    for (r, v) in m.col(c) {
                        by_row.entry(*r).or_default().push((local as u32, v.clone()));
                    }
                }
                rows.extend(by_row.into_values());
            }
        }
        for v in null_space(rows, bucket.len()) {
            out.push(v.into_iter().map(|(l, x)| (bucket[l as usize] as u32, x)).collect());
        }
    }
    out.sort_by_key(|v| v[0].0);
    for v in &out {
        let w = clear_denominators(v).0;
        for a in &evals {
            for &(i, j) in pairs {
                if !a.op(i, j).mul_vec(&w).is_empty() {
                    return Err(Error::InvalidArgument(format!(
                        "kernel vector not annihilated by t_{i},{j}: weight buckets are not preserved"
                    )));
                }
            }
        }
    }
    Ok(out)
}

/// `V+`: vectors killed by `t_1j(u)` for `j > 1` and by `t_i1'(u)` for `i < 1'`.
pub fn compute_vplus(rep: &RepModule) -> Result<Vec<SpVec<Rat>>> {
    let nn = rep.space().dim();
    let pairs: Vec<(usize, usize)> = (2..=nn)
        .map(|j| (1, j))
        .chain((1..nn).map(|i| (i, nn)))
        .collect();
    joint_kernel(rep, &pairs)
}

/// Checks that `t_ij(u)` maps the span of `basis` into itself for all
/// listed pairs.
pub fn check_invariant(rep: &RepModule, basis: &[SpVec<Rat>], pairs: &[(usize, usize)]) -> Result<()> {
    let evals = spanning_evaluations(rep)?;
    let mut ech = Echelon::new();
    let ints: Vec<SpVec<BigInt>> = basis.iter().map(|b| clear_denominators(b).0).collect();
    for b in &ints {
        ech.insert(b.clone());
    }
    for &(i, j) in pairs {
        for a in &evals {
            for b in &ints {
                if !ech.reduce(a.op(i, j).mul_vec(b)).is_empty() {
                    return Err(Error::NotInvariant { i, j });
                }
            }
        }
    }
    Ok(())
}

/// The module of the algebra for `n - 1` on `V+`, with `t_ij` acting as
/// `t_{i+1, j+1}`. Invariance of `V+` is verified.
pub fn reduce_module(rep: &RepModule) -> Result<RepModule> {
    let small = rep
        .space()
        .reduced()
        .ok_or_else(|| Error::InvalidArgument("reduction needs n >= 2".into()))?;
    let basis = compute_vplus(rep)?;
    let inner: Vec<usize> = (2..rep.space().dim()).collect();
    let pairs: Vec<(usize, usize)> = inner
        .iter()
        .flat_map(|&i| inner.iter().map(move |&j| (i, j)))
        .collect();
    check_invariant(rep, &basis, &pairs)?;
    Ok(restrict(
        rep,
        &basis,
        1,
        small,
        Recipe::Reduce {
            inner: Box::new(rep.recipe().clone()),
        },
    ))
}

/// [`reduce_module`] followed by the RTT check against the smaller R-matrix.
pub fn reduce_rep(rep: &RepModule, grid: Option<usize>) -> Result<(RepModule, Report)> {
    let red = reduce_module(rep)?;
    let mut report = check_rtt(&red, grid)?;
    report.check = "reduce".into();
    report.n = rep.n();
    report.module = Some(red.recipe().clone());
    Ok((red, report))
}

/// Basis (reduced echelon) of the submodule generated by `seed`.
pub fn cyclic_span(rep: &RepModule, seed: &[(u32, Rat)]) -> Result<Vec<SpVec<Rat>>> {
    let evals = spanning_evaluations(rep)?;
    let mut ech = Echelon::new();
    let mut queue = VecDeque::new();
    let s = ech.reduce(clear_denominators(seed).0);
    if s.is_empty() {
        return Ok(Vec::new());
    }
    ech.insert_reduced(s.clone());
    queue.push_back(s);
    while let Some(v) = queue.pop_front() {
        for a in &evals {
            for op in a.ops() {
                let w = op.mul_vec(&v);
                if w.is_empty() {
                    continue;
                }
                let r = ech.reduce(w);
                if !r.is_empty() {
                    ech.insert_reduced(r.clone());
                    queue.push_back(r);
                }
            }
        }
    }
    Ok(ech.rref())
}

/// The submodule generated by the antisymmetrized vector `xi_k` inside the
/// `k`-fold tensor power of the vector representation with shifts
/// `0, 1, ..., k-1`.
pub fn fundamental_module(space: &GradedSpace, k: usize) -> Result<RepModule> {
    let tensor = fundamental_tensor(space, k)?;
    let xi = xi_vector(space, k)?;
    let seed: SpVec<Rat> = xi
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i as u32, x.clone()))
        .collect();
    let span = cyclic_span(&tensor, &seed)?;
    Ok(restrict(
        &tensor,
        &span,
        0,
        space.clone(),
        Recipe::Fundamental {
            n: space.n(),
            k,
            mutation: space.mutation(),
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{trivial_rep, vector_rep};

    fn space(n: usize) -> GradedSpace {
        GradedSpace::new(n).unwrap()
    }

    #[test]
    fn vplus_of_vector_is_e1() {
        let v = vector_rep(&space(2));
        assert_eq!(compute_vplus(&v).unwrap(), vec![vec![(0, Rat::one())]]);
    }

    #[test]
    fn vplus_of_trivial_is_everything() {
        let t = trivial_rep(&space(2));
        assert_eq!(compute_vplus(&t).unwrap().len(), 1);
    }

    #[test]
    fn reduced_vector_is_trivial() {
        let v = vector_rep(&space(2));
        let r = reduce_module(&v).unwrap();
        assert_eq!(r.dim(), 1);
        assert_eq!(r.n(), 1);
        for u in [4, 9] {
            let a = r.eval(&Rat::from(u)).unwrap();
            for i in 1..=3 {
                for j in 1..=3 {
                    let want = if i == j { Rat::one() } else { Rat::zero() };
                    assert_eq!(a.value(i, j).get(0, 0), want);
                }
            }
        }
    }

    #[test]
    fn reduction_needs_rank_two() {
        assert!(reduce_module(&vector_rep(&space(1))).is_err());
    }

    #[test]
    fn cyclic_span_of_e1_is_whole_vector_module() {
        let v = vector_rep(&space(1));
        assert_eq!(cyclic_span(&v, &[(0, Rat::one())]).unwrap().len(), 3);
    }

    #[test]
    fn vplus_is_stable() {
        let t = fundamental_tensor(&space(2), 2).unwrap();
        let basis = compute_vplus(&t).unwrap();
        let pairs: Vec<(usize, usize)> = (2..=4).flat_map(|i| (2..=4).map(move |j| (i, j))).collect();
        check_invariant(&t, &basis, &pairs).unwrap();
    }
}
