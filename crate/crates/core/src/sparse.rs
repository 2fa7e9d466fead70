//! Column-compressed sparse matrices over any [`Scalar`].

use crate::scalar::Scalar;

/// A sparse vector: `(index, value)` pairs sorted by index, no explicit zeros.
pub type SpVec<T> = Vec<(u32, T)>;

#[derive(Clone, Debug, PartialEq)]
pub struct SpMat<T> {
    rows: usize,
    cols: usize,
    data: Vec<SpVec<T>>,
}

/// Dense scratch row used to accumulate sparse linear combinations.
pub struct Accumulator<T> {
    vals: Vec<T>,
    seen: Vec<bool>,
    touched: Vec<u32>,
}

impl<T: Scalar> Accumulator<T> {
    pub fn new(len: usize) -> Self {
        Accumulator {
            vals: vec![T::zero(); len],
            seen: vec![false; len],
            touched: Vec::new(),
        }
    }

    #[inline]
    fn slot(&mut self, i: u32) -> &mut T {
        let iu = i as usize;
        if !self.seen[iu] {
            self.seen[iu] = true;
            self.touched.push(i);
        }
        &mut self.vals[iu]
    }

    /// `acc[i] += a * b`
    #[inline]
    pub fn add_mul(&mut self, i: u32, a: &T, b: &T) {
        self.slot(i).add_mul(a, b);
    }

    #[inline]
    pub fn add(&mut self, i: u32, a: &T) {
        let s = self.slot(i);
        *s = s.add(a);
    }

    /// Adds `coef * v`.
    pub fn axpy(&mut self, coef: &T, v: &[(u32, T)]) {
        for (i, x) in v {
            self.add_mul(*i, coef, x);
        }
    }

    /// Drains the accumulated values into a sorted sparse vector.
    pub fn take(&mut self) -> SpVec<T> {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            let iu = i as usize;
            self.seen[iu] = false;
            let v = std::mem::replace(&mut self.vals[iu], T::zero());
            if !v.is_zero() {
                out.push((i, v));
            }
        }
        self.touched.clear();
        out
    }
}

impl<T: Scalar> SpMat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SpMat {
            rows,
            cols,
            data: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar_identity(n, T::one())
    }

    pub fn scalar_identity(n: usize, c: T) -> Self {
        if c.is_zero() {
            return Self::zeros(n, n);
        }
        SpMat {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i as u32, c.clone())]).collect(),
        }
    }

    /// Builds from a column list; each column must be sorted and zero-free.
    pub fn from_columns(rows: usize, data: Vec<SpVec<T>>) -> Self {
        debug_assert!(data
            .iter()
            .all(|c| c.windows(2).all(|w| w[0].0 < w[1].0) && c.iter().all(|(_, v)| !v.is_zero())));
        SpMat {
            rows,
            cols: data.len(),
            data,
        }
    }

    /// Builds from `(row, col, value)` triplets, summing duplicates.
    pub fn from_triplets(rows: usize, cols: usize, triplets: impl IntoIterator<Item = (usize, usize, T)>) -> Self {
        let mut per_col: Vec<Vec<(u32, T)>> = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet out of range");
            per_col[c].push((r as u32, v));
        }
        let mut acc = Accumulator::new(rows);
        let data = per_col
            .into_iter()
            .map(|col| {
                for (r, v) in &col {
                    acc.add(*r, v);
                }
                acc.take()
            })
            .collect();
        SpMat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn col(&self, c: usize) -> &[(u32, T)] {
        &self.data[c]
    }

    pub fn columns(&self) -> &[SpVec<T>] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        let col = &self.data[c];
        match col.binary_search_by_key(&(r as u32), |e| e.0) {
            Ok(k) => col[k].1.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn max_col_nnz(&self) -> usize {
        self.data.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r as usize, c, v)))
    }

    pub fn map<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> SpMat<U> {
        SpMat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|col| {
                    col.iter()
                        .filter_map(|(r, v)| {
                            let w = f(v);
                            (!w.is_zero()).then_some((*r, w))
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|v| v.mul(c))
    }

    pub fn neg(&self) -> Self {
        self.map(|v| v.neg())
    }

    pub fn mul_vec(&self, v: &[(u32, T)]) -> SpVec<T> {
        let mut acc = Accumulator::new(self.rows);
        self.mul_vec_into(v, &mut acc);
        acc.take()
    }

    /// Accumulates `self * v` without draining.
    pub fn mul_vec_into(&self, v: &[(u32, T)], acc: &mut Accumulator<T>) {
        for (k, x) in v {
            acc.axpy(x, &self.data[*k as usize]);
        }
    }

    pub fn mul(&self, rhs: &SpMat<T>) -> SpMat<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut acc = Accumulator::new(self.rows);
        let data = rhs
            .data
            .iter()
            .map(|col| {
                self.mul_vec_into(col, &mut acc);
                acc.take()
            })
            .collect();
        SpMat {
            rows: self.rows,
            cols: rhs.cols,
            data,
        }
    }

    /// `sum_t coef_t * M_t` over matrices of equal shape.
    pub fn linear_combination(rows: usize, cols: usize, terms: &[(T, &SpMat<T>)]) -> SpMat<T> {
        let mut acc = Accumulator::new(rows);
        let data = (0..cols)
            .map(|c| {
                for (coef, m) in terms {
                    debug_assert_eq!((m.rows, m.cols), (rows, cols));
                    acc.axpy(coef, &m.data[c]);
                }
                acc.take()
            })
            .collect();
        SpMat { rows, cols, data }
    }

    pub fn add(&self, rhs: &SpMat<T>) -> SpMat<T> {
        Self::linear_combination(self.rows, self.cols, &[(T::one(), self), (T::one(), rhs)])
    }

    pub fn sub(&self, rhs: &SpMat<T>) -> SpMat<T> {
        Self::linear_combination(
            self.rows,
            self.cols,
            &[(T::one(), self), (T::one().neg(), rhs)],
        )
    }

    /// Kronecker product `self (x) rhs`, negating the block in column `c` of
    /// `self` whenever `negate(c)` holds. Row index `(r1, r2)` maps to
    /// `r1 * rhs.rows + r2`.
    pub fn kron_signed(&self, rhs: &SpMat<T>, negate: impl Fn(usize) -> bool) -> SpMat<T> {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut data = Vec::with_capacity(cols);
        for (c1, col1) in self.data.iter().enumerate() {
            let neg = negate(c1);
            for col2 in &rhs.data {
                let mut out = Vec::with_capacity(col1.len() * col2.len());
                for (r1, a) in col1 {
                    let a = a.signed(neg);
                    for (r2, b) in col2 {
                        out.push((r1 * rhs.rows as u32 + r2, a.mul(b)));
                    }
                }
                data.push(out);
            }
        }
        SpMat { rows, cols, data }
    }

    /// First `(row, col)` in column-major order where the matrices differ.
    pub fn first_difference(&self, rhs: &SpMat<T>) -> Option<(usize, usize)> {
        for c in 0..self.cols {
            let (a, b) = (&self.data[c], &rhs.data[c]);
            if a != b {
                let mut i = 0;
                while i < a.len() && i < b.len() && a[i] == b[i] {
                    i += 1;
                }
                let r = match (a.get(i), b.get(i)) {
                    (Some(x), Some(y)) => x.0.min(y.0),
                    (Some(x), None) => x.0,
                    (None, Some(y)) => y.0,
                    (None, None) => unreachable!(),
                };
                return Some((r as usize, c));
            }
        }
        None
    }

    pub fn transpose(&self) -> SpMat<T> {
        let mut per_col: Vec<SpVec<T>> = vec![Vec::new(); self.rows];
        for (c, col) in self.data.iter().enumerate() {
            for (r, v) in col {
                per_col[*r as usize].push((c as u32, v.clone()));
            }
        }
        SpMat {
            rows: self.cols,
            cols: self.rows,
            data: per_col,
        }
    }

    /// Rows `r` for which `keep(r)` holds, renumbered consecutively;
    /// columns likewise.
    pub fn submatrix(&self, row_map: &[Option<u32>], cols: &[usize]) -> SpMat<T> {
        let rows = row_map.iter().filter(|r| r.is_some()).count();
        let data = cols
            .iter()
            .map(|&c| {
                self.data[c]
                    .iter()
                    .filter_map(|(r, v)| row_map[*r as usize].map(|nr| (nr, v.clone())))
                    .collect()
            })
            .collect();
        SpMat { rows, cols: cols.len(), data }
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut out = vec![vec![T::zero(); self.cols]; self.rows];
        for (r, c, v) in self.iter() {
            out[r][c] = v.clone();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: usize, cols: usize, t: &[(usize, usize, i64)]) -> SpMat<i128> {
        SpMat::from_triplets(rows, cols, t.iter().map(|&(r, c, v)| (r, c, v as i128)))
    }

    #[test]
    fn product_matches_dense() {
        let a = m(2, 3, &[(0, 0, 1), (0, 2, 2), (1, 1, 3)]);
        let b = m(3, 2, &[(0, 0, 4), (1, 1, 5), (2, 0, 6), (2, 1, -1)]);
        let p = a.mul(&b).to_dense();
        assert_eq!(p, vec![vec![16, -2], vec![0, 15]]);
    }

    #[test]
    fn cancellation_drops_entries() {
        let a = m(2, 2, &[(0, 0, 1), (0, 1, 1)]);
        let b = m(2, 1, &[(0, 0, 1), (1, 0, -1)]);
        assert!(a.mul(&b).is_zero());
    }

    #[test]
    fn kron_layout_and_signs() {
        let a = m(2, 2, &[(0, 0, 1), (1, 1, 2)]);
        let b = m(2, 2, &[(0, 1, 3)]);
        let k = a.kron_signed(&b, |c| c == 1);
        assert_eq!(k.get(0, 1), 3);
        assert_eq!(k.get(2, 3), -6);
        assert_eq!(k.nnz(), 2);
    }

    #[test]
    fn first_difference_locates_entry() {
        let a = m(3, 3, &[(0, 0, 1), (2, 1, 5)]);
        let b = m(3, 3, &[(0, 0, 1), (1, 1, 5), (2, 1, 5)]);
        assert_eq!(a.first_difference(&b), Some((1, 1)));
        assert_eq!(a.first_difference(&a), None);
    }
}
