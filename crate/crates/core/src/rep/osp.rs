use rayon::prelude::*;

use super::module::RepModule;
use crate::arith::Rat;
use crate::error::Result;
use crate::report::{Report, Witness};
use crate::sparse::SpMat;
use crate::superlin::{odd, GradedSpace};

/// The image of the generator `F_ij` of `osp(1|2n)` in a module.
#[derive(Clone, Debug, PartialEq)]
pub struct OspGenerator {
    pub i: usize,
    pub j: usize,
    pub matrix: SpMat<Rat>,
}

/// `(-1)^{ij + i} theta_i theta_j`, the sign in `F_ij = -F_j'i' (...)`.
fn partner_sign(s: &GradedSpace, i: usize, j: usize) -> bool {
    let (pi, pj) = (s.parity(i) as u32, s.parity(j) as u32);
    odd(pi * pj + pi) ^ (s.theta(i) * s.theta(j) < 0)
}

/// `F_ij` in the defining representation: `E_ij - E_j'i' (-1)^{ij + i} theta_i theta_j`.
pub fn defining_generator(s: &GradedSpace, i: usize, j: usize) -> SpMat<Rat> {
    let nn = s.dim();
    let c = Rat::sign(!partner_sign(s, i, j));
    SpMat::from_triplets(
        nn,
        nn,
        [(i - 1, j - 1, Rat::one()), (s.prime(j) - 1, s.prime(i) - 1, c)],
    )
}

/// `[X, Y] = XY - (-1)^{|X||Y|} YX`.
fn supercommutator(x: &SpMat<Rat>, y: &SpMat<Rat>, odd_pair: bool) -> SpMat<Rat> {
    let (a, b) = (x.mul(y), y.mul(x));
    if odd_pair {
        a.add(&b)
    } else {
        a.sub(&b)
    }
}

/// `F_ij -> (t_ij^(1) - t_j'i'^(1) (-1)^{j + ij} theta_i theta_j) (-1)^i / 2`
/// on the module, with the embedding checked.
///
/// Checks the symmetry `F_ij = -F_j'i' (-1)^{ij + i} theta_i theta_j` and,
/// for all pairs of generators, `[F_ij, F_kl] = 1/2 sum_pq x_pq F_pq` where
/// `x` is the supercommutator of the defining matrices; every element `X`
/// of `osp(1|2n)` satisfies `X = 1/2 sum_pq X_pq F_pq` in the defining
/// representation.
pub fn osp_embed(rep: &RepModule) -> Result<(Vec<OspGenerator>, Report)> {
    let s = rep.space();
    let nn = s.dim();
    let d = rep.dim();
    let mut t1 = Vec::with_capacity(nn * nn);
    for i in 1..=nn {
        for j in 1..=nn {
            t1.push(rep.first_order(i, j)?);
        }
    }
    let t1 = |i: usize, j: usize| &t1[(i - 1) * nn + (j - 1)];
    let half = Rat::new(1, 2);
    let mut gens = Vec::with_capacity(nn * nn);
    for i in 1..=nn {
        for j in 1..=nn {
            let (pi, pj) = (s.parity(i) as u32, s.parity(j) as u32);
            let c = if odd(pj + pi * pj) ^ (s.theta(i) * s.theta(j) < 0) {
                Rat::one()
            } else {
                -Rat::one()
            };
            let m = SpMat::linear_combination(d, d, &[(Rat::one(), t1(i, j)), (c, t1(s.prime(j), s.prime(i)))]);
            let sign = if odd(pi) { -half.clone() } else { half.clone() };
            gens.push(OspGenerator { i, j, matrix: m.scale(&sign) });
        }
    }
    let f = |i: usize, j: usize| &gens[(i - 1) * nn + (j - 1)].matrix;
    let report = Report::new("osp", rep.n()).module(rep.recipe().clone());

    for i in 1..=nn {
        for j in 1..=nn {
            let c = Rat::sign(!partner_sign(s, i, j));
            let partner = f(s.prime(j), s.prime(i)).scale(&c);
            if let Some((r, cc)) = f(i, j).first_difference(&partner) {
                let w = Witness {
                    row: Some(r),
                    col: Some(cc),
                    ..Default::default()
                }
                .with_tuple(&[i, j])
                .with_message("embedding symmetry fails");
                return Ok((gens, report.outcome(Some(w))));
            }
        }
    }

    let defining: Vec<SpMat<Rat>> = (1..=nn)
        .flat_map(|i| (1..=nn).map(move |j| (i, j)))
        .map(|(i, j)| defining_generator(s, i, j))
        .collect();
    let deg = |i: usize, j: usize| s.parity(i) as u32 + s.parity(j) as u32;
    let tuples: Vec<[usize; 4]> = (0..nn.pow(4))
        .map(|t| [t / nn.pow(3) + 1, t / (nn * nn) % nn + 1, t / nn % nn + 1, t % nn + 1])
        .collect();
    let witness = tuples.par_iter().find_map_first(|&[i, j, k, l]| {
        let odd_pair = odd(deg(i, j) * deg(k, l));
        let x = supercommutator(
            &defining[(i - 1) * nn + (j - 1)],
            &defining[(k - 1) * nn + (l - 1)],
            odd_pair,
        );
        let terms: Vec<(Rat, &SpMat<Rat>)> = x
            .iter()
            .map(|(p, q, v)| (v * &half, f(p + 1, q + 1)))
            .collect();
        let want = SpMat::linear_combination(d, d, &terms);
        let got = supercommutator(f(i, j), f(k, l), odd_pair);
        got.first_difference(&want).map(|(r, c)| {
            Witness {
                row: Some(r),
                col: Some(c),
                ..Default::default()
            }
            .with_tuple(&[i, j, k, l])
        })
    });
    Ok((gens, report.outcome(witness)))
}

/// Eigenvalues of `(F_11, ..., F_nn)` on the basis, when they act diagonally.
pub fn osp_weights(rep: &RepModule, gens: &[OspGenerator]) -> Option<Vec<Vec<Rat>>> {
    let nn = rep.space().dim();
    let mut out = vec![Vec::new(); rep.dim()];
    for k in 1..=rep.n() {
        let m = &gens[(k - 1) * nn + (k - 1)].matrix;
        if m.iter().any(|(r, c, _)| r != c) {
            return None;
        }
        for (c, w) in out.iter_mut().enumerate() {
            w.push(m.get(c, c));
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{fundamental_tensor, vector_rep};

    #[test]
    fn defining_generators_satisfy_symmetry() {
        let s = GradedSpace::new(1).unwrap();
        let f = defining_generator(&s, 2, 2);
        assert!(f.is_zero());
        // F_12 = E_12 - E_23 (-1)^{1} theta_1 theta_2 = E_12 + E_23
        let f = defining_generator(&s, 1, 2);
        assert_eq!(f.get(0, 1), Rat::one());
        assert_eq!(f.get(1, 2), Rat::one());
    }

    #[test]
    fn vector_rep_brackets() {
        for n in 1..=2 {
            let v = vector_rep(&GradedSpace::new(n).unwrap());
            let (gens, r) = osp_embed(&v).unwrap();
            assert!(r.passed(), "{}", r.summary());
            let mid = n + 1;
            assert!(gens[(mid - 1) * (2 * n + 1) + (mid - 1)].matrix.is_zero());
        }
    }

    #[test]
    fn vector_weights_are_distinct() {
        let v = vector_rep(&GradedSpace::new(2).unwrap());
        let (gens, _) = osp_embed(&v).unwrap();
        let w = osp_weights(&v, &gens).unwrap();
        for a in 0..w.len() {
            for b in 0..a {
                assert_ne!(w[a], w[b]);
            }
        }
    }

    #[test]
    fn tensor_brackets() {
        let t = fundamental_tensor(&GradedSpace::new(1).unwrap(), 2).unwrap();
        assert!(osp_embed(&t).unwrap().1.passed());
    }
}
