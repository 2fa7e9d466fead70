use super::space::{odd, GradedSpace};
use crate::scalar::Scalar;

/// A raw `dim x dim` matrix on `C^(1|2n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SuperMatrix<T> {
    space: GradedSpace,
    entries: Vec<T>,
}

impl<T: Scalar> SuperMatrix<T> {
    pub fn zeros(space: &GradedSpace) -> Self {
        let d = space.dim();
        SuperMatrix {
            space: space.clone(),
            entries: vec![T::zero(); d * d],
        }
    }

    pub fn identity(space: &GradedSpace) -> Self {
        let mut m = Self::zeros(space);
        for i in space.indices() {
            m.set(i, i, T::one());
        }
        m
    }

    /// The matrix unit `e_ij`.
    pub fn unit(space: &GradedSpace, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(space);
        m.set(i, j, T::one());
        m
    }

    /// Row-major entries, `entries[(i-1) * dim + (j-1)] = A_ij`.
    pub fn from_entries(space: &GradedSpace, entries: Vec<T>) -> Self {
        assert_eq!(entries.len(), space.dim() * space.dim());
        SuperMatrix {
            space: space.clone(),
            entries,
        }
    }

    /// The Gram matrix `G = [delta_{ij'} theta_i]`.
    pub fn gram(space: &GradedSpace) -> Self {
        let mut m = Self::zeros(space);
        for i in space.indices() {
            m.set(i, space.prime(i), T::from_i64(space.theta(i)));
        }
        m
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[(i - 1) * self.space.dim() + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        let d = self.space.dim();
        self.entries[(i - 1) * d + (j - 1)] = v;
    }

    /// `(A^t)_ij = A_{j'i'} (-1)^{ij + j} theta_i theta_j` (parities in the
    /// exponent).
    pub fn super_transpose(&self) -> Self {
        let s = &self.space;
        let mut out = Self::zeros(s);
        for i in s.indices() {
            for j in s.indices() {
                let (pi, pj) = (s.parity(i) as u32, s.parity(j) as u32);
                let neg = odd(pi * pj + pj) ^ (s.theta(i) * s.theta(j) < 0);
                out.set(i, j, self.get(s.prime(j), s.prime(i)).signed(neg));
            }
        }
        out
    }

    /// Ordinary (ungraded) transpose.
    pub fn transpose(&self) -> Self {
        let s = &self.space;
        let mut out = Self::zeros(s);
        for i in s.indices() {
            for j in s.indices() {
                out.set(i, j, self.get(j, i).clone());
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let s = &self.space;
        let mut out = Self::zeros(s);
        for i in s.indices() {
            for j in s.indices() {
                let mut acc = T::zero();
                for k in s.indices() {
                    acc.add_mul(self.get(i, k), rhs.get(k, j));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        SuperMatrix {
            space: self.space.clone(),
            entries,
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        SuperMatrix {
            space: self.space.clone(),
            entries: self.entries.iter().map(|a| a.mul(c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;

    fn space(n: usize) -> GradedSpace {
        GradedSpace::new(n).unwrap()
    }

    #[test]
    fn identity_is_fixed() {
        for n in 1..=3 {
            let id = SuperMatrix::<Rat>::identity(&space(n));
            assert_eq!(id.super_transpose(), id);
        }
    }

    #[test]
    fn unit_e12_for_n1() {
        // Entry (2,3) of the transpose is A_12 (-1)^{0*1+1} theta_2 theta_3 = 1.
        // With the entry sign (-1)^{ij+j} this is the element e_12 -> -e_23.
        let s = space(1);
        let t = SuperMatrix::<Rat>::unit(&s, 1, 2).super_transpose();
        assert_eq!(t, SuperMatrix::<Rat>::unit(&s, 2, 3));
    }

    #[test]
    fn involutive_on_units() {
        for n in 1..=2 {
            let s = space(n);
            for i in s.indices() {
                for j in s.indices() {
                    let e = SuperMatrix::<Rat>::unit(&s, i, j);
                    assert_eq!(e.super_transpose().super_transpose(), e);
                }
            }
        }
    }

    #[test]
    fn gram_maps_to_its_transpose() {
        // The sign rule sends G to G^T rather than to G itself: the odd
        // pairs (i, i') pick up theta_i theta_{i'} = -1 with no parity
        // correction.
        for n in 1..=3 {
            let g = SuperMatrix::<Rat>::gram(&space(n));
            assert_eq!(g.super_transpose(), g.transpose());
            assert_ne!(g.super_transpose(), g);
        }
    }
}
