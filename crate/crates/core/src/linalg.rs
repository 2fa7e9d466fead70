//! Exact echelon forms and kernels over the integers and rationals.
//!
//! Rows are sparse. Elimination is fraction-free: a row is reduced by
//! `w <- a w - b r` and then divided by the gcd of its entries, so integer
//! growth stays bounded. Pivots are the first nonzero coordinate of a row.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Rat;
use crate::sparse::SpVec;

/// Divides by the gcd of the entries and makes the leading entry positive.
pub fn make_primitive(v: &mut SpVec<BigInt>) {
    let Some(first) = v.first() else { return };
    let mut g = first.1.abs();
    for (_, x) in v.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(x);
    }
    let flip = first.1.is_negative();
    if !g.is_one() || flip {
        if flip {
            g = -g;
        }
        for (_, x) in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// `a * w - b * r` on sparse vectors.
fn combine(a: &BigInt, w: &[(u32, BigInt)], b: &BigInt, r: &[(u32, BigInt)]) -> SpVec<BigInt> {
    let mut out = Vec::with_capacity(w.len() + r.len());
    let (mut x, mut y) = (0, 0);
    while x < w.len() || y < r.len() {
        let iw = w.get(x).map(|e| e.0).unwrap_or(u32::MAX);
        let ir = r.get(y).map(|e| e.0).unwrap_or(u32::MAX);
        let (idx, val) = if iw < ir {
            x += 1;
            (iw, a * &w[x - 1].1)
        } else if ir < iw {
            y += 1;
            (ir, -(b * &r[y - 1].1))
        } else {
            x += 1;
            y += 1;
            (iw, a * &w[x - 1].1 - b * &r[y - 1].1)
        };
        if !val.is_zero() {
            out.push((idx, val));
        }
    }
    out
}

/// Row echelon basis with pairwise distinct pivots, keyed by pivot.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<u32, SpVec<BigInt>>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon {
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SpVec<BigInt>> {
        self.rows.values()
    }

    /// Reduces `w` against the basis; the result is zero iff `w` lies in
    /// the span.
    pub fn reduce(&self, mut w: SpVec<BigInt>) -> SpVec<BigInt> {
        // Eliminating with the row of pivot p only touches indices >= p, so
        // one left-to-right sweep suffices.
        let mut k = 0;
        while k < w.len() {
            let idx = w[k].0;
            if let Some(r) = self.rows.get(&idx) {
                let (a, b) = (r[0].1.clone(), w[k].1.clone());
                let g = a.gcd(&b);
                w = combine(&(&a / &g), &w, &(&b / &g), r);
                make_primitive(&mut w);
                k = w.partition_point(|e| e.0 <= idx);
            } else {
                k += 1;
            }
        }
        w
    }

    /// Adds `w` to the span; returns whether the rank grew.
    pub fn insert(&mut self, w: SpVec<BigInt>) -> bool {
        let mut w = self.reduce(w);
        if w.is_empty() {
            return false;
        }
        make_primitive(&mut w);
        self.rows.insert(w[0].0, w);
        true
    }

    /// Adds a vector already returned nonzero by [`Self::reduce`].
    pub fn insert_reduced(&mut self, mut w: SpVec<BigInt>) {
        debug_assert!(!w.is_empty() && !self.rows.contains_key(&w[0].0));
        make_primitive(&mut w);
        self.rows.insert(w[0].0, w);
    }

    /// The reduced row echelon form: every pivot is 1 and pivot columns are
    /// zero in all other rows. Rows are sorted by pivot.
    pub fn rref(&self) -> Vec<SpVec<Rat>> {
        let mut out: Vec<SpVec<Rat>> = self
            .rows
            .values()
            .map(|r| {
                let lead = Rat::from_int(r[0].1.clone());
                r.iter()
                    .map(|(i, x)| (*i, &Rat::from_int(x.clone()) / &lead))
                    .collect()
            })
            .collect();
        for a in (0..out.len()).rev() {
            let p = out[a][0].0;
            let (head, tail) = out.split_at_mut(a);
            let pivot_row = &tail[0];
            for r in head.iter_mut() {
                if let Ok(pos) = r.binary_search_by_key(&p, |e| e.0) {
                    let f = r[pos].1.clone();
                    *r = axpy_rat(r, &-f, pivot_row);
                }
            }
        }
        out
    }
}

fn axpy_rat(w: &[(u32, Rat)], c: &Rat, r: &[(u32, Rat)]) -> SpVec<Rat> {
    let mut out = Vec::with_capacity(w.len() + r.len());
    let (mut x, mut y) = (0, 0);
    while x < w.len() || y < r.len() {
        let iw = w.get(x).map(|e| e.0).unwrap_or(u32::MAX);
        let ir = r.get(y).map(|e| e.0).unwrap_or(u32::MAX);
        let (idx, val) = if iw < ir {
            x += 1;
            (iw, w[x - 1].1.clone())
        } else if ir < iw {
            y += 1;
            (ir, c * &r[y - 1].1)
        } else {
            x += 1;
            y += 1;
            (iw, &w[x - 1].1 + &(c * &r[y - 1].1))
        };
        if !val.is_zero() {
            out.push((idx, val));
        }
    }
    out
}

/// Kernel of the matrix whose rows are given, over `ncols` columns.
///
/// The result is itself in reduced echelon form: each basis vector has a
/// leading 1, and the vectors are sorted by that leading position.
pub fn null_space(rows: impl IntoIterator<Item = SpVec<BigInt>>, ncols: usize) -> Vec<SpVec<Rat>> {
    let mut ech = Echelon::new();
    for r in rows {
        if ech.rank() == ncols {
            break;
        }
        ech.insert(r);
    }
    let rref = ech.rref();
    let pivots: Vec<u32> = rref.iter().map(|r| r[0].0).collect();
    let mut kernel = Echelon::new();
    for f in 0..ncols as u32 {
        if pivots.binary_search(&f).is_ok() {
            continue;
        }
        // x_f = 1, x_p = -R[p][f] for each pivot row p
        let mut v: Vec<(u32, Rat)> = vec![(f, Rat::one())];
        for r in &rref {
            if let Ok(pos) = r.binary_search_by_key(&f, |e| e.0) {
                v.push((r[0].0, -r[pos].1.clone()));
            }
        }
        v.sort_by_key(|e| e.0);
        kernel.insert(clear_denominators(&v).0);
    }
    kernel.rref()
}

/// Scales a rational vector to a primitive integer vector; returns the
/// vector and the factor `L` it was multiplied by.
pub fn clear_denominators(v: &[(u32, Rat)]) -> (SpVec<BigInt>, Rat) {
    let mut l = BigInt::one();
    for (_, x) in v {
        l = l.lcm(x.denom());
    }
    let lr = Rat::from_int(l);
    let out: SpVec<BigInt> = v.iter().map(|(i, x)| (*i, (x * &lr).numer().clone())).collect();
    (out, lr)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[(u32, i64)]) -> SpVec<BigInt> {
        v.iter().map(|&(i, x)| (i, BigInt::from(x))).collect()
    }

    fn dense(v: &SpVec<Rat>, n: usize) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); n];
        for (i, x) in v {
            out[*i as usize] = x.clone();
        }
        out
    }

    #[test]
    fn rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(row(&[(0, 2), (1, 4)])));
        assert!(e.insert(row(&[(1, 3), (2, 1)])));
        assert!(!e.insert(row(&[(0, 2), (1, 7), (2, 1)])));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn rref_is_reduced() {
        let mut e = Echelon::new();
        e.insert(row(&[(0, 1), (1, 2), (2, 3)]));
        e.insert(row(&[(1, 1), (2, 1)]));
        let r = e.rref();
        assert_eq!(dense(&r[0], 3), [Rat::one(), Rat::zero(), Rat::one()]);
        assert_eq!(dense(&r[1], 3), [Rat::zero(), Rat::one(), Rat::one()]);
    }

    #[test]
    fn kernel_of_small_matrix() {
        // x + y + z = 0, y - z = 0  ->  kernel spanned by (-2, 1, 1), leading 1
        // after normalization: (1, -1/2, -1/2).
        let k = null_space([row(&[(0, 1), (1, 1), (2, 1)]), row(&[(1, 1), (2, -1)])], 3);
        assert_eq!(k.len(), 1);
        assert_eq!(
            dense(&k[0], 3),
            [Rat::one(), Rat::new(-1, 2), Rat::new(-1, 2)]
        );
    }

    #[test]
    fn kernel_of_nothing_is_everything() {
        let k = null_space(Vec::<SpVec<BigInt>>::new(), 2);
        assert_eq!(k.len(), 2);
        assert_eq!(k[0], vec![(0, Rat::one())]);
    }

    #[test]
    fn clear_denominators_scales() {
        let (v, l) = clear_denominators(&[(0, Rat::new(1, 2)), (3, Rat::new(-2, 3))]);
        assert_eq!(l, Rat::from(6));
        assert_eq!(v, row(&[(0, 3), (3, -4)]));
    }
}
