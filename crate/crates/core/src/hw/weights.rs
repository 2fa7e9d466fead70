use num_bigint::BigInt;

use crate::arith::{rational_reconstruct, Rat, RationalFunction};
use crate::error::{Error, Result};
use crate::linalg::clear_denominators;
use crate::rep::{central_series, RepModule};
use crate::report::{Report, Witness};
use crate::superlin::GradedSpace;

use super::highest::sparse_of;

/// The eigenvalues `lambda_i(u)` of `t_ii(u)` on a highest vector.
#[derive(Clone, Debug, PartialEq)]
pub struct HighestWeight {
    pub space: GradedSpace,
    /// `lambda_1, ..., lambda_{2n+1}`.
    pub lambda: Vec<RationalFunction>,
}

impl HighestWeight {
    pub fn get(&self, i: usize) -> &RationalFunction {
        &self.lambda[i - 1]
    }

    /// Componentwise product.
    pub fn product(&self, other: &HighestWeight) -> HighestWeight {
        HighestWeight {
            space: self.space.clone(),
            lambda: self.lambda.iter().zip(&other.lambda).map(|(a, b)| a * b).collect(),
        }
    }
}

/// Reads off `lambda_i(u)` from `t_ii(u) xi = lambda_i(u) xi`.
///
/// Each `t_ii` is sampled at `2 deg D + 2` points; at each point `xi` is
/// checked to be an eigenvector, the eigenvalue is read on the first
/// nonzero coordinate, and `lambda_i` is reconstructed with numerator and
/// denominator degree at most `deg D`.
pub fn extract_weights(rep: &RepModule, xi: &[Rat]) -> Result<HighestWeight> {
    let (x, _) = clear_denominators(&sparse_of(xi));
    let Some((r0, x0)) = x.first().cloned() else {
        return Err(Error::InvalidArgument("zero vector".into()));
    };
    let delta = rep.degree();
    let pts = rep.sample_points(2 * delta + 2, |_| true);
    let nn = rep.space().dim();
    let mut samples = vec![Vec::with_capacity(pts.len()); nn];
    for u in &pts {
        let a = rep.eval(u)?;
        for (i, si) in samples.iter_mut().enumerate() {
            let y = a.op(i + 1, i + 1).mul_vec(&x);
            let y0 = y
                .binary_search_by_key(&r0, |e| e.0)
                .map(|p| y[p].1.clone())
                .unwrap_or_default();
            if let Some(c) = first_mismatch(&y, &x0, &x, &y0) {
                return Err(Error::NotEigenvector {
                    index: i + 1,
                    coordinate: c as usize,
                    point: u.clone(),
                });
            }
            si.push((u.clone(), &Rat::from_int(y0) / &Rat::from_int(&x0 * a.den())));
        }
    }
    let mut lambda = Vec::with_capacity(nn);
    for (i, s) in samples.iter().enumerate() {
        let l = rational_reconstruct(s, delta, delta)?;
        if l.value_at_infinity() != Some(Rat::one()) {
            return Err(Error::InvalidArgument(format!("lambda_{} = {l} is not 1 at infinity", i + 1)));
        }
        lambda.push(l);
    }
    Ok(HighestWeight {
        space: rep.space().clone(),
        lambda,
    })
}

/// First coordinate where `a * y != b * x`.
fn first_mismatch(y: &[(u32, BigInt)], a: &BigInt, x: &[(u32, BigInt)], b: &BigInt) -> Option<u32> {
    let get = |v: &[(u32, BigInt)], i: u32| v.binary_search_by_key(&i, |e| e.0).ok().map(|p| v[p].1.clone());
    let mut idx: Vec<u32> = y.iter().chain(x).map(|e| e.0).collect();
    idx.sort_unstable();
    idx.dedup();
    idx.into_iter().find(|&i| {
        let lhs = get(y, i).map(|v| v * a).unwrap_or_default();
        let rhs = get(x, i).map(|v| v * b).unwrap_or_default();
        lhs != rhs
    })
}

/// `lambda_i(u) lambda_i'(u + s)` and `lambda_{i+1}(u) lambda_{(i+1)'}(u + s)`
/// with `s = n - i + 1/2`.
fn consistency_sides(hw: &HighestWeight, i: usize) -> (RationalFunction, RationalFunction) {
    let s = &hw.space;
    let shift = Rat::from((s.n() - i) as i64) + Rat::new(1, 2);
    let lhs = hw.get(i) * &hw.get(s.prime(i)).shift_arg(&shift);
    let rhs = hw.get(i + 1) * &hw.get(s.prime(i + 1)).shift_arg(&shift);
    (lhs, rhs)
}

/// The full tuple from `lambda_1, ..., lambda_{n+1}`, solving the
/// consistency conditions downwards from `lambda_{(n+1)'} = lambda_{n+1}`.
pub fn complete_weights(first: &[RationalFunction], space: &GradedSpace) -> Result<HighestWeight> {
    let n = space.n();
    if first.len() != n + 1 {
        return Err(Error::Mismatch(format!("expected {} series, got {}", n + 1, first.len())));
    }
    if let Some(f) = first.iter().find(|f| f.value_at_infinity() != Some(Rat::one())) {
        return Err(Error::InvalidArgument(format!("{f} is not 1 at infinity")));
    }
    let mut lambda = first.to_vec();
    lambda.resize(space.dim(), RationalFunction::one());
    for i in (1..=n).rev() {
        let s = Rat::from((n - i) as i64) + Rat::new(1, 2);
        // lambda_i'(v) = lambda_{i+1}(v - s) lambda_{(i+1)'}(v) / lambda_i(v - s)
        let num = &lambda[i].shift_arg(&-s.clone()) * &lambda[space.prime(i + 1) - 1];
        lambda[space.prime(i) - 1] = num.div(&lambda[i - 1].shift_arg(&-s))?;
    }
    let hw = HighestWeight {
        space: space.clone(),
        lambda,
    };
    debug_assert!(check_consistency(&hw).passed());
    Ok(hw)
}

/// The `n` consistency conditions
/// `lambda_i(u) lambda_i'(u + n - i + 1/2) = lambda_{i+1}(u) lambda_{(i+1)'}(u + n - i + 1/2)`.
pub fn check_consistency(hw: &HighestWeight) -> Report {
    let witness = (1..=hw.space.n()).find_map(|i| {
        let (l, r) = consistency_sides(hw, i);
        (l != r).then(|| {
            let mut w = Witness::message(format!("lhs = {l}, rhs = {r}"));
            w.index = Some(i);
            w
        })
    });
    Report::new("consistency", hw.space.n()).outcome(witness)
}

/// Compares the central series of `rep` with `lambda_1(u) lambda_1'(u + n + 1/2)`.
pub fn central_crosscheck(hw: &HighestWeight, rep: &RepModule) -> Result<Report> {
    let s = &hw.space;
    let shift = Rat::from(s.n() as i64) + Rat::new(1, 2);
    let want = hw.get(1) * &hw.get(s.prime(1)).shift_arg(&shift);
    let (c, mut report) = central_series(rep)?;
    report.check = "central_crosscheck".into();
    if let Some(c) = c {
        if c != want {
            report = report.outcome(Some(Witness::message(format!("c(u) = {c}, weights give {want}"))));
        }
    }
    Ok(report)
}
