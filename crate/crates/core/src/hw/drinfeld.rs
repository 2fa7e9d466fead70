use serde::{Deserialize, Serialize};

use crate::arith::{Poly, Rat, RationalFunction};
use crate::error::{Error, Result};
use crate::rep::{fundamental_module, fundamental_tensor, tensor_rep, Recipe, RepModule};
use crate::report::{Report, Status, Witness};
use crate::superlin::GradedSpace;

use super::highest::{find_highest_vectors, sparse_of, xi_vector};
use super::shift_quotient::solve_shift_quotient;
use super::weights::{central_crosscheck, check_consistency, extract_weights, HighestWeight};

/// Monic `P_1, ..., P_n` with `lambda_{i+1}(u) / lambda_i(u) = P_i(u + 1) / P_i(u)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DrinfeldTuple {
    pub polys: Vec<Poly>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DrinfeldOutcome {
    Tuple(DrinfeldTuple),
    Fail { fail: String },
}

impl DrinfeldOutcome {
    pub fn tuple(&self) -> Option<&DrinfeldTuple> {
        match self {
            DrinfeldOutcome::Tuple(t) => Some(t),
            DrinfeldOutcome::Fail { .. } => None,
        }
    }
}

/// Highest-weight data of one module.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HWReport {
    pub module: Recipe,
    pub xi: Vec<Rat>,
    pub lambda: Vec<RationalFunction>,
    pub drinfeld: DrinfeldOutcome,
    pub consistency: Status,
    pub central_crosscheck: Status,
}

impl HWReport {
    pub fn passed(&self) -> bool {
        self.drinfeld.tuple().is_some() && self.consistency.is_pass() && self.central_crosscheck.is_pass()
    }

    pub fn summary(&self) -> String {
        let d = match &self.drinfeld {
            DrinfeldOutcome::Tuple(t) => t.polys.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
            DrinfeldOutcome::Fail { fail } => format!("fail: {fail}"),
        };
        format!(
            "hw       [{}]: P = ({d}); consistency {:?}, central {:?}",
            self.module.describe(),
            self.consistency,
            self.central_crosscheck
        )
    }
}

/// Solves `lambda_{i+1} / lambda_i = P_i(u + 1) / P_i(u)` for each `i <= n`.
pub fn drinfeld_of_weights(hw: &HighestWeight) -> DrinfeldOutcome {
    let mut polys = Vec::with_capacity(hw.space.n());
    for i in 1..=hw.space.n() {
        let ratio = match hw.get(i + 1).div(hw.get(i)) {
            Ok(r) => r,
            Err(e) => return DrinfeldOutcome::Fail { fail: e.to_string() },
        };
        match solve_shift_quotient(ratio.num(), ratio.den()) {
            Some(p) => polys.push(p),
            None => {
                return DrinfeldOutcome::Fail {
                    fail: format!("lambda_{}/lambda_{} = {ratio} is not P(u+1)/P(u) for a polynomial P", i + 1, i),
                }
            }
        }
    }
    DrinfeldOutcome::Tuple(DrinfeldTuple { polys })
}

fn assemble(rep: &RepModule, recipe: Recipe, xi: Vec<Rat>, hw: HighestWeight) -> Result<HWReport> {
    let consistency = check_consistency(&hw).status;
    let central = central_crosscheck(&hw, rep)?.status;
    Ok(HWReport {
        module: recipe,
        xi,
        drinfeld: drinfeld_of_weights(&hw),
        lambda: hw.lambda,
        consistency,
        central_crosscheck: central,
    })
}

fn dense(v: &[(u32, Rat)], len: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); len];
    for (i, x) in v {
        out[*i as usize] = x.clone();
    }
    out
}

/// The unique highest vector of `rep` (first coordinate 1) and its weight.
fn unique_highest(rep: &RepModule) -> Result<(Vec<Rat>, HighestWeight)> {
    let hv = find_highest_vectors(rep)?;
    if hv.len() != 1 {
        return Err(Error::NonUniqueHighestVector(hv.len()));
    }
    let xi = dense(&hv[0], rep.dim());
    let hw = extract_weights(rep, &xi)?;
    Ok((xi, hw))
}

/// Highest vector, weight, consistency, central cross-check and Drinfeld
/// polynomials of a module with a one-dimensional highest space.
pub fn drinfeld_of_module(rep: &RepModule) -> Result<HWReport> {
    let (xi, hw) = unique_highest(rep)?;
    assemble(rep, rep.recipe().clone(), xi, hw)
}

/// Highest-weight data of `xi_k` in the tensor power of the vector
/// representation with shifts `0, ..., k-1`. The reported vector is `xi_k`
/// itself in tensor coordinates; the central cross-check runs on the tensor
/// module, where `c(u)` is scalar as well.
pub fn fundamental_report(space: &GradedSpace, k: usize) -> Result<(HWReport, Report)> {
    let tensor = fundamental_tensor(space, k)?;
    let xi = xi_vector(space, k)?;
    let hv = find_highest_vectors(&tensor)?;
    let hw = extract_weights(&tensor, &xi)?;
    let recipe = Recipe::Fundamental {
        n: space.n(),
        k,
        mutation: space.mutation(),
    };
    // xi_k must be annihilated by every raising operator
    let mut ech = crate::linalg::Echelon::new();
    for v in &hv {
        ech.insert(crate::linalg::clear_denominators(v).0);
    }
    let inside = ech.reduce(crate::linalg::clear_denominators(&sparse_of(&xi)).0).is_empty();
    let witness = (!inside).then(|| Witness::message("xi_k is not a highest vector"));
    let report = Report::new("highest", space.n())
        .module(recipe.clone())
        .outcome(witness);
    Ok((assemble(&tensor, recipe, xi, hw)?, report))
}

/// Tensor product of two modules with unique highest vectors `xi`, `xi'`:
/// checks that `xi (x) xi'` is killed by every `t_ij(u)`, `i < j`, that its
/// weight is the componentwise product, and that the Drinfeld polynomials
/// multiply.
pub fn hw_tensor_product_check(a: &RepModule, b: &RepModule) -> Result<Report> {
    let (xa, wa) = unique_highest(a)?;
    let (xb, wb) = unique_highest(b)?;
    let t = tensor_rep(&[a.clone(), b.clone()], &[Rat::zero(), Rat::zero()])?;
    let report = Report::new("hw_tensor", t.n()).module(t.recipe().clone());
    let xi: Vec<Rat> = xa.iter().flat_map(|x| xb.iter().map(move |y| x * y)).collect();
    let sp = sparse_of(&xi);
    let (xi_int, _) = crate::linalg::clear_denominators(&sp);
    let nn = t.space().dim();
    for u in t.sample_points(t.degree() + 1, |_| true) {
        let e = t.eval(&u)?;
        for i in 1..=nn {
            for j in i + 1..=nn {
                if !e.op(i, j).mul_vec(&xi_int).is_empty() {
                    let w = Witness::message("product vector is not annihilated")
                        .with_tuple(&[i, j])
                        .with_u(u.clone());
                    return Ok(report.outcome(Some(w)));
                }
            }
        }
    }
    let wt = extract_weights(&t, &xi)?;
    let want = wa.product(&wb);
    if let Some(i) = (0..nn).find(|&i| wt.lambda[i] != want.lambda[i]) {
        let mut w = Witness::message(format!("weight {} != product {}", wt.lambda[i], want.lambda[i]));
        w.index = Some(i + 1);
        return Ok(report.outcome(Some(w)));
    }
    let (pa, pb, pt) = (drinfeld_of_weights(&wa), drinfeld_of_weights(&wb), drinfeld_of_weights(&wt));
    let witness = match (pa.tuple(), pb.tuple(), pt.tuple()) {
        (Some(x), Some(y), Some(z)) => (0..t.n())
            .find(|&i| z.polys[i] != &x.polys[i] * &y.polys[i])
            .map(|i| {
                let mut w = Witness::message(format!(
                    "P = {} but factors give {} * {}",
                    z.polys[i], x.polys[i], y.polys[i]
                ));
                w.index = Some(i + 1);
                w
            }),
        _ => Some(Witness::message("Drinfeld polynomials could not be extracted")),
    };
    Ok(report.outcome(witness))
}

/// The fundamental module (cyclic span of `xi_k`) and its highest-weight data.
pub fn fundamental_module_report(space: &GradedSpace, k: usize) -> Result<(RepModule, HWReport)> {
    let m = fundamental_module(space, k)?;
    let r = drinfeld_of_module(&m)?;
    Ok((m, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{shift_rep, trivial_rep, twist_rep, vector_rep};

    fn space(n: usize) -> GradedSpace {
        GradedSpace::new(n).unwrap()
    }

    fn expected(n: usize, k: usize) -> Vec<Poly> {
        (1..=n)
            .map(|i| if i == k { Poly::linear_root(&Rat::from(k as i64)) } else { Poly::one() })
            .collect()
    }

    #[test]
    fn fundamental_polys() {
        for (n, k) in [(1, 1), (2, 1), (2, 2)] {
            let (_, r) = fundamental_module_report(&space(n), k).unwrap();
            assert!(r.passed(), "{}", r.summary());
            assert_eq!(r.drinfeld.tuple().unwrap().polys, expected(n, k));
            let (r2, h) = fundamental_report(&space(n), k).unwrap();
            assert!(h.passed());
            assert_eq!(r2.drinfeld, r.drinfeld);
        }
    }

    #[test]
    fn trivial_polys_are_one() {
        let r = drinfeld_of_module(&trivial_rep(&space(2))).unwrap();
        assert_eq!(r.drinfeld.tuple().unwrap().polys, vec![Poly::one(); 2]);
    }

    #[test]
    fn twist_invariance_and_shift_covariance() {
        let v = vector_rep(&space(2));
        let base = drinfeld_of_module(&v).unwrap().drinfeld;
        let f = RationalFunction::linear_ratio(&Rat::from(4), &Rat::from(1));
        assert_eq!(drinfeld_of_module(&twist_rep(&v, &f).unwrap()).unwrap().drinfeld, base);
        let a = Rat::new(1, 3);
        let shifted = drinfeld_of_module(&shift_rep(&v, &a)).unwrap();
        let want: Vec<Poly> = base.tuple().unwrap().polys.iter().map(|p| p.shift(&a)).collect();
        assert_eq!(shifted.drinfeld.tuple().unwrap().polys, want);
    }

    #[test]
    fn tensor_product_multiplies() {
        let s = space(2);
        let v = vector_rep(&s);
        assert!(hw_tensor_product_check(&v, &v).unwrap().passed());
        assert!(hw_tensor_product_check(&v, &trivial_rep(&s)).unwrap().passed());
    }

    #[test]
    fn json_shape() {
        let r = drinfeld_of_module(&vector_rep(&space(1))).unwrap();
        let j = serde_json::to_value(&r).unwrap();
        assert_eq!(j["consistency"], "pass");
        assert!(j["drinfeld"].is_array());
        let f = DrinfeldOutcome::Fail { fail: "x".into() };
        assert_eq!(serde_json::to_value(&f).unwrap()["fail"], "x");
    }
}
