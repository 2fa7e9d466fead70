use rayon::prelude::*;

use super::space::GradedSpace;
use super::two_site::r_cleared;
use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::report::{Report, Witness};
use crate::sparse::SpMat;

/// Largest power of `u` (and of `v`) in the cleared Yang-Baxter identity:
/// each side contains two factors that are quadratic in that variable.
pub const YBE_DEGREE: usize = 4;

/// `M` acting on legs 1 and 3 of a triple tensor product; the middle basis
/// vector is passed through with its Koszul sign.
pub(crate) fn embed13(space: &GradedSpace, m: &SpMat<i128>) -> SpMat<i128> {
    let d = space.dim();
    let trip = m.iter().flat_map(|(r, c, v)| {
        let (i, k, j, l) = (r / d, r % d, c / d, c % d);
        let lk = (space.par0(k) + space.par0(l)) % 2;
        (0..d).map(move |b| {
            let neg = lk == 1 && space.odd0(b);
            ((i * d + b) * d + k, (j * d + b) * d + l, if neg { -*v } else { *v })
        })
    });
    SpMat::from_triplets(d * d * d, d * d * d, trip)
}

/// Checks `R12(u-v) R13(u) R23(v) = R23(v) R13(u) R12(u-v)` on the integer
/// grid `1..=grid` in both variables, after multiplying through by the
/// denominators of all three factors.
pub fn check_ybe(space: &GradedSpace, grid: usize) -> Result<Report> {
    if grid <= YBE_DEGREE {
        return Err(Error::InvalidArgument(format!(
            "grid {grid} does not exceed the degree bound {YBE_DEGREE}"
        )));
    }
    let d = space.dim();
    let id = SpMat::<i128>::identity(d);
    let points: Vec<(i128, i128)> = (1..=grid as i128)
        .flat_map(|u| (1..=grid as i128).map(move |v| (u, v)))
        .collect();
    let witness = points.par_iter().find_map_first(|&(u, v)| {
        let r12 = r_cleared(space, u - v).kron_signed(&id, |_| false);
        let r13 = embed13(space, &r_cleared(space, u));
        let r23 = id.kron_signed(&r_cleared(space, v), |_| false);
        let lhs = r12.mul(&r13).mul(&r23);
        let rhs = r23.mul(&r13).mul(&r12);
        lhs.first_difference(&rhs).map(|(row, col)| {
            Witness::at(row, col, Rat::from_int(u), Some(Rat::from_int(v)))
        })
    });
    Ok(Report::new("ybe", space.n()).grid(grid).outcome(witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superlin::{Mutation, TwoSiteOperator};

    #[test]
    fn embed13_is_conjugated_embed12() {
        // R13 = P23 R12 P23 with P23 the super swap of legs 2 and 3.
        for n in 1..=2 {
            let s = GradedSpace::new(n).unwrap();
            let d = s.dim();
            let id = SpMat::<i128>::identity(d);
            let m = r_cleared(&s, 3);
            let p = TwoSiteOperator::<i128>::permutation(&s);
            let p23 = id.kron_signed(p.matrix(), |_| false);
            let r12 = m.kron_signed(&id, |_| false);
            assert_eq!(embed13(&s, &m), p23.mul(&r12).mul(&p23));
        }
    }

    #[test]
    fn holds_for_small_ranks() {
        for n in 1..=2 {
            let s = GradedSpace::new(n).unwrap();
            assert!(check_ybe(&s, 8).unwrap().passed());
        }
    }

    #[test]
    fn q_sign_mutation_is_caught() {
        let s = GradedSpace::new(1).unwrap().with_mutation(Some(Mutation::QSign));
        let rep = check_ybe(&s, 6).unwrap();
        assert!(!rep.passed());
        let w = rep.witness.unwrap();
        assert!(w.row.is_some() && w.u.is_some() && w.v.is_some());
    }

    #[test]
    fn grid_must_exceed_degree() {
        let s = GradedSpace::new(1).unwrap();
        assert!(check_ybe(&s, 4).is_err());
    }
}
