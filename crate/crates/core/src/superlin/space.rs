use serde::{Deserialize, Serialize};

use crate::arith::Rat;
use crate::error::{Error, Result};

/// A deliberately corrupted sign convention, used to demonstrate that the
/// checkers notice a single wrong sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mutation {
    /// Drop the Koszul sign when wrapping `T(u)` into the first tensor leg.
    Wrap,
    /// Flip `theta_1`.
    Theta,
    /// Negate the `e_12 (x) e_1'2'` term of `Q`.
    QSign,
}

/// The superspace `C^(1|2n)` with basis `e_1, ..., e_{2n+1}`.
///
/// Public accessors take 1-based indices; the `*0` helpers take 0-based ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    n: usize,
    mutation: Option<Mutation>,
}

impl GradedSpace {
    pub fn new(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        Ok(GradedSpace { n, mutation: None })
    }

    pub fn with_mutation(mut self, m: Option<Mutation>) -> Self {
        self.mutation = m;
        self
    }

    pub fn mutation(&self) -> Option<Mutation> {
        self.mutation
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n + 1
    }

    pub fn indices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.dim()
    }

    fn check(&self, i: usize) {
        assert!(i >= 1 && i <= self.dim(), "index {i} outside 1..={}", self.dim());
    }

    /// `0` for `i = n+1`, `1` otherwise.
    pub fn parity(&self, i: usize) -> u8 {
        self.check(i);
        u8::from(i != self.n + 1)
    }

    pub fn prime(&self, i: usize) -> usize {
        self.check(i);
        2 * self.n + 2 - i
    }

    pub fn theta(&self, i: usize) -> i64 {
        self.check(i);
        let t = if i <= self.n + 1 { 1 } else { -1 };
        if i == 1 && self.mutation == Some(Mutation::Theta) {
            -t
        } else {
            t
        }
    }

    /// `kappa = -n - 1/2`.
    pub fn kappa(&self) -> Rat {
        Rat::new(-(2 * self.n as i64 + 1), 2)
    }

    /// `-2 kappa = 2n + 1`, the integer used when clearing `u - kappa`.
    pub fn two_kappa_neg(&self) -> i64 {
        2 * self.n as i64 + 1
    }

    /// The space for `n - 1`, if any; carries no mutation.
    pub fn reduced(&self) -> Option<GradedSpace> {
        (self.n >= 2).then(|| GradedSpace {
            n: self.n - 1,
            mutation: None,
        })
    }

    pub(crate) fn par0(&self, a: usize) -> u8 {
        self.parity(a + 1)
    }

    pub(crate) fn odd0(&self, a: usize) -> bool {
        self.par0(a) == 1
    }

    pub(crate) fn prime0(&self, a: usize) -> usize {
        self.prime(a + 1) - 1
    }

    pub(crate) fn theta0(&self, a: usize) -> i64 {
        self.theta(a + 1)
    }
}

/// `(-1)^e` as a sign flag.
#[inline]
pub(crate) fn odd(e: u32) -> bool {
    e % 2 == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n1_layout() {
        let s = GradedSpace::new(1).unwrap();
        assert_eq!(s.dim(), 3);
        assert_eq!((1..=3).map(|i| s.parity(i)).collect::<Vec<_>>(), [1, 0, 1]);
        assert_eq!((1..=3).map(|i| s.prime(i)).collect::<Vec<_>>(), [3, 2, 1]);
        assert_eq!((1..=3).map(|i| s.theta(i)).collect::<Vec<_>>(), [1, 1, -1]);
        assert_eq!(s.kappa(), Rat::new(-3, 2));
    }

    #[test]
    fn n2_layout() {
        let s = GradedSpace::new(2).unwrap();
        assert_eq!(s.dim(), 5);
        assert_eq!((1..=5).map(|i| s.parity(i)).collect::<Vec<_>>(), [1, 1, 0, 1, 1]);
        assert_eq!(s.kappa(), Rat::new(-5, 2));
    }

    #[test]
    fn prime_is_involution() {
        for n in 1..=4 {
            let s = GradedSpace::new(n).unwrap();
            for i in s.indices() {
                assert_eq!(s.prime(s.prime(i)), i);
            }
        }
    }

    #[test]
    fn zero_rank_rejected() {
        assert!(GradedSpace::new(0).is_err());
    }
}
