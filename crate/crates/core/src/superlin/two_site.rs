use super::space::{odd, GradedSpace, Mutation};
use crate::arith::{Poly, Rat, RationalFunction};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sparse::SpMat;

/// Which tensor leg a partial super-transposition acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Leg {
    First,
    Second,
}

/// An operator on `C^(1|2n) (x) C^(1|2n)`.
///
/// Row `(i, k)` and column `(j, l)` sit at `(i-1) * dim + (k-1)` and
/// `(j-1) * dim + (l-1)`. The matrix is the action on basis tensors, so the
/// element `e_ij (x) e_kl` contributes `(-1)^{(k+l) j}` at `[(i,k), (j,l)]`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoSiteOperator<T> {
    space: GradedSpace,
    mat: SpMat<T>,
}

impl<T: Scalar> TwoSiteOperator<T> {
    pub fn from_matrix(space: &GradedSpace, mat: SpMat<T>) -> Self {
        let d2 = space.dim() * space.dim();
        assert!(mat.rows() == d2 && mat.cols() == d2, "two-site operator must be {d2} x {d2}");
        TwoSiteOperator {
            space: space.clone(),
            mat,
        }
    }

    pub fn identity(space: &GradedSpace) -> Self {
        Self::from_matrix(space, SpMat::identity(space.dim() * space.dim()))
    }

    /// `P = sum e_ij (x) e_ji (-1)^j`, i.e. `P(e_k (x) e_l) = (-1)^{kl} e_l (x) e_k`.
    pub fn permutation(space: &GradedSpace) -> Self {
        let d = space.dim();
        let trip = (0..d).flat_map(|a| {
            (0..d).map(move |b| {
                let neg = space.odd0(a) && space.odd0(b);
                (a * d + b, b * d + a, T::one().signed(neg))
            })
        });
        Self::from_matrix(space, SpMat::from_triplets(d * d, d * d, trip))
    }

    /// `Q = sum e_ij (x) e_i'j' (-1)^{ij} theta_i theta_j`.
    pub fn q_operator(space: &GradedSpace) -> Self {
        let d = space.dim();
        let trip = (0..d).flat_map(|a| {
            (0..d).map(move |b| {
                let mut neg = space.odd0(b) ^ (space.theta0(a) * space.theta0(b) < 0);
                if space.mutation() == Some(Mutation::QSign) && (a, b) == (0, 1) {
                    neg = !neg;
                }
                (a * d + space.prime0(a), b * d + space.prime0(b), T::one().signed(neg))
            })
        });
        Self::from_matrix(space, SpMat::from_triplets(d * d, d * d, trip))
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn matrix(&self) -> &SpMat<T> {
        &self.mat
    }

    /// Matrix entry at row `(i, k)`, column `(j, l)`, 1-based.
    pub fn entry(&self, i: usize, k: usize, j: usize, l: usize) -> T {
        let d = self.space.dim();
        self.mat.get((i - 1) * d + (k - 1), (j - 1) * d + (l - 1))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::from_matrix(&self.space, self.mat.mul(&rhs.mat))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::from_matrix(&self.space, self.mat.add(&rhs.mat))
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_matrix(&self.space, self.mat.scale(c))
    }

    /// Super-transposition applied to one leg, acting on matrix units by
    /// `e_ij -> e_j'i' (-1)^{ij + i} theta_i theta_j`.
    pub fn partial_transpose(&self, leg: Leg) -> Self {
        let s = &self.space;
        let d = s.dim();
        let p = |a: usize| s.par0(a) as u32;
        let unit_sign = |a: usize, b: usize| odd(p(a) * p(b) + p(a)) ^ (s.theta0(a) * s.theta0(b) < 0);
        let trip = self.mat.iter().map(|(r, c, v)| {
            let (i, k, j, l) = (r / d, r % d, c / d, c % d);
            // coefficient of e_ij (x) e_kl
            let to_unit = odd((p(k) + p(l)) * p(j));
            match leg {
                Leg::First => {
                    let (ni, nj) = (s.prime0(j), s.prime0(i));
                    let neg = to_unit ^ unit_sign(i, j) ^ odd((p(k) + p(l)) * p(nj));
                    (ni * d + k, nj * d + l, v.signed(neg))
                }
                Leg::Second => {
                    let (nk, nl) = (s.prime0(l), s.prime0(k));
                    let neg = to_unit ^ unit_sign(k, l) ^ odd((p(nk) + p(nl)) * p(j));
                    (i * d + nk, j * d + nl, v.signed(neg))
                }
            }
        });
        Self::from_matrix(s, SpMat::from_triplets(d * d, d * d, trip))
    }

    /// Conjugation by `P`, which exchanges the roles of the two legs.
    pub fn flip_legs(&self) -> Self {
        let p = Self::permutation(&self.space);
        p.mul(self).mul(&p)
    }
}

/// `R(u) = 1 - P/u + Q/(u - kappa)` with `u` the indeterminate.
pub fn r_matrix(space: &GradedSpace) -> TwoSiteOperator<RationalFunction> {
    let one = RationalFunction::one();
    let inv_u = RationalFunction::new(Poly::one(), Poly::u()).expect("nonzero");
    let inv_uk = RationalFunction::new(Poly::one(), Poly::linear_root(&space.kappa())).expect("nonzero");
    let p = TwoSiteOperator::<RationalFunction>::permutation(space);
    let q = TwoSiteOperator::<RationalFunction>::q_operator(space);
    let d2 = space.dim() * space.dim();
    let mat = SpMat::linear_combination(
        d2,
        d2,
        &[
            (one, &SpMat::identity(d2)),
            (inv_u.neg(), p.matrix()),
            (inv_uk, q.matrix()),
        ],
    );
    TwoSiteOperator::from_matrix(space, mat)
}

/// `R(u)` at a rational point.
pub fn r_at(space: &GradedSpace, u: &Rat) -> Result<TwoSiteOperator<Rat>> {
    let uk = u - &space.kappa();
    let (iu, iuk) = match (u.recip(), uk.recip()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::Pole(u.clone())),
    };
    let p = TwoSiteOperator::<Rat>::permutation(space);
    let q = TwoSiteOperator::<Rat>::q_operator(space);
    let d2 = space.dim() * space.dim();
    let mat = SpMat::linear_combination(
        d2,
        d2,
        &[(Rat::one(), &SpMat::identity(d2)), (-iu, p.matrix()), (iuk, q.matrix())],
    );
    Ok(TwoSiteOperator::from_matrix(space, mat))
}

/// `2x(x - kappa) R(x) = x(2x + 2n + 1) - (2x + 2n + 1) P + 2x Q`, an integer
/// matrix polynomial in `x` of degree 2.
pub(crate) fn r_cleared(space: &GradedSpace, x: i128) -> SpMat<i128> {
    let d2 = space.dim() * space.dim();
    let m = 2 * x + space.two_kappa_neg() as i128;
    let p = TwoSiteOperator::<i128>::permutation(space);
    let q = TwoSiteOperator::<i128>::q_operator(space);
    SpMat::linear_combination(
        d2,
        d2,
        &[(x * m, &SpMat::identity(d2)), (-m, p.matrix()), (2 * x, q.matrix())],
    )
}
