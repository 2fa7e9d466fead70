use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::recipe::Recipe;
use crate::arith::{Poly, Rat, RationalFunction};
use crate::error::{Error, Result};
use crate::scalar::log2_abs;
use crate::sparse::{SpMat, SpVec};
use crate::superlin::GradedSpace;

/// The operators `t_ij(u0)` at one point, as `ops / den` with integer
/// matrices. `ops` is indexed by `(i-1) * dim + (j-1)`.
#[derive(Debug)]
pub struct NumAction {
    n: usize,
    den: BigInt,
    ops: Vec<SpMat<BigInt>>,
    small: OnceLock<Option<SmallAction>>,
}

/// The same operators narrowed to `i128`, with the largest magnitude.
#[derive(Debug)]
pub struct SmallAction {
    pub ops: Vec<SpMat<i128>>,
    pub log2_max: f64,
}

impl NumAction {
    pub(crate) fn new(n: usize, mut den: BigInt, mut ops: Vec<SpMat<BigInt>>) -> Self {
        if den.is_negative() {
            den = -den;
            ops = ops.iter().map(SpMat::neg).collect();
        }
        NumAction {
            n,
            den,
            ops,
            small: OnceLock::new(),
        }
    }

    fn dim(&self) -> usize {
        2 * self.n + 1
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn ops(&self) -> &[SpMat<BigInt>] {
        &self.ops
    }

    /// The integer matrix `den * t_ij(u0)`.
    pub fn op(&self, i: usize, j: usize) -> &SpMat<BigInt> {
        &self.ops[(i - 1) * self.dim() + (j - 1)]
    }

    /// `t_ij(u0)` exactly.
    pub fn value(&self, i: usize, j: usize) -> SpMat<Rat> {
        let d = Rat::from_int(self.den.clone());
        self.op(i, j).map(|x| &Rat::from_int(x.clone()) / &d)
    }

    /// An `i128` copy when every entry is below `2^100`.
    pub fn small(&self) -> Option<&SmallAction> {
        self.small
            .get_or_init(|| {
                let mut log2_max = f64::NEG_INFINITY;
                for m in &self.ops {
                    for (_, _, x) in m.iter() {
                        log2_max = log2_max.max(log2_abs(x));
                    }
                }
                if log2_max >= 100.0 {
                    return None;
                }
                let ops = self
                    .ops
                    .iter()
                    .map(|m| m.map(|x| i128::try_from(x).expect("bounded")))
                    .collect();
                Some(SmallAction { ops, log2_max })
            })
            .as_ref()
    }
}

pub(crate) struct Restriction {
    pub parent: RepModule,
    /// Integer basis vectors `L_c * b_c`, where `b_c` has a 1 at `pivots[c]`
    /// and 0 at every other pivot.
    pub cols: Vec<SpVec<BigInt>>,
    pub pivots: Vec<u32>,
    /// `L / L_c` for the common multiple `L` of the `L_c`.
    pub scales: Vec<BigInt>,
    pub lcm: BigInt,
    /// Generator `t_ij` of the restriction is `t_{i+offset, j+offset}`.
    pub offset: usize,
}

pub(crate) enum Node {
    Trivial,
    Vector,
    Tensor(Vec<(RepModule, Rat)>),
    Shift(RepModule, Rat),
    Twist(RepModule, RationalFunction),
    Restrict(Restriction),
}

pub(crate) struct Inner {
    pub space: GradedSpace,
    pub dim: usize,
    pub parity: Vec<u8>,
    pub labels: Vec<Vec<usize>>,
    pub recipe: Recipe,
    /// Monic common denominator `D(u)` of all `t_ij(u)`.
    pub den: Poly,
    pub node: Node,
    cache: Mutex<BTreeMap<Rat, Arc<NumAction>>>,
    coeffs: OnceLock<std::result::Result<Vec<Vec<SpMat<Rat>>>, String>>,
    weights: OnceLock<Vec<WeightKey>>,
}

/// Parity and, when the first-order diagonal generators act diagonally,
/// their eigenvalues on a basis vector.
pub type WeightKey = (u8, Vec<Rat>);

/// A representation of the extended Yangian on a finite-dimensional
/// superspace, given by the operators `t_ij(u)` as functions of `u`.
///
/// Operators are produced by exact evaluation at rational points; the
/// polynomial form `D(u) t_ij(u) = sum_r C_ij^(r) u^r` is derived from
/// evaluations on demand.
#[derive(Clone)]
pub struct RepModule(pub(crate) Arc<Inner>);

impl std::fmt::Debug for RepModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RepModule({}, dim {})", self.0.recipe.describe(), self.0.dim)
    }
}

impl RepModule {
    pub(crate) fn assemble(
        space: GradedSpace,
        parity: Vec<u8>,
        labels: Vec<Vec<usize>>,
        recipe: Recipe,
        den: Poly,
        node: Node,
    ) -> Self {
        debug_assert!(den.is_monic());
        RepModule(Arc::new(Inner {
            dim: parity.len(),
            space,
            parity,
            labels,
            recipe,
            den,
            node,
            cache: Mutex::new(BTreeMap::new()),
            coeffs: OnceLock::new(),
            weights: OnceLock::new(),
        }))
    }

    pub fn space(&self) -> &GradedSpace {
        &self.0.space
    }

    pub fn n(&self) -> usize {
        self.0.space.n()
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn parity(&self) -> &[u8] {
        &self.0.parity
    }

    /// Tensor words labelling the basis; restricted modules inherit the
    /// label of each basis vector's pivot coordinate.
    pub fn labels(&self) -> &[Vec<usize>] {
        &self.0.labels
    }

    pub fn recipe(&self) -> &Recipe {
        &self.0.recipe
    }

    /// `D(u)`, a monic polynomial with `D(u) t_ij(u)` polynomial for all i, j.
    pub fn denominator(&self) -> &Poly {
        &self.0.den
    }

    /// `deg D`, which also bounds the degree of every `D(u) t_ij(u)`.
    pub fn degree(&self) -> usize {
        self.0.den.deg0()
    }

    pub fn is_pole(&self, u: &Rat) -> bool {
        self.0.den.eval(u).is_zero()
    }

    /// The first integer used for sampling.
    pub fn grid_start(&self) -> i64 {
        (self.0.recipe.tensor_order() as i64 + 2).max(3)
    }

    /// `count` ascending integers from [`Self::grid_start`] avoiding the
    /// poles of `D` and any point rejected by `also`.
    pub fn sample_points(&self, count: usize, also: impl Fn(&Rat) -> bool) -> Vec<Rat> {
        let mut out = Vec::with_capacity(count);
        let mut x = self.grid_start();
        while out.len() < count {
            let u = Rat::from(x);
            if !self.is_pole(&u) && also(&u) {
                out.push(u);
            }
            x += 1;
        }
        out
    }

    /// `t_ij(u0)` for all i, j, cached per point.
    pub fn eval(&self, u: &Rat) -> Result<Arc<NumAction>> {
        if let Some(a) = self.0.cache.lock().expect("cache lock").get(u) {
            return Ok(a.clone());
        }
        if self.is_pole(u) {
            return Err(Error::Pole(u.clone()));
        }
        let a = Arc::new(self.compute(u)?);
        self.0
            .cache
            .lock()
            .expect("cache lock")
            .insert(u.clone(), a.clone());
        Ok(a)
    }

    /// `t_ij(u0)` as an exact matrix.
    pub fn value(&self, i: usize, j: usize, u: &Rat) -> Result<SpMat<Rat>> {
        Ok(self.eval(u)?.value(i, j))
    }

    fn compute(&self, u: &Rat) -> Result<NumAction> {
        let s = &self.0.space;
        let n = s.n();
        let nn = s.dim();
        match &self.0.node {
            Node::Trivial => {
                let ops = (0..nn * nn)
                    .map(|o| SpMat::scalar_identity(1, BigInt::from(i64::from(o / nn == o % nn))))
                    .collect();
                Ok(NumAction::new(n, BigInt::one(), ops))
            }
            Node::Vector => vector_action(s, u),
            Node::Tensor(factors) => {
                let mut acc: Option<(NumAction, Vec<u8>)> = None;
                for (f, shift) in factors {
                    let b = f.eval(&(u - shift))?;
                    acc = Some(match acc {
                        None => (
                            NumAction::new(n, b.den.clone(), b.ops.clone()),
                            f.parity().to_vec(),
                        ),
                        Some((a, pa)) => {
                            let c = tensor_action(s, &a, &pa, &b);
                            let pc = pa
                                .iter()
                                .flat_map(|x| f.parity().iter().map(move |y| (x + y) % 2))
                                .collect();
                            (c, pc)
                        }
                    });
                }
                Ok(acc.expect("tensor has factors").0)
            }
            Node::Shift(inner, a) => {
                let x = inner.eval(&(u + a))?;
                Ok(NumAction::new(n, x.den.clone(), x.ops.clone()))
            }
            Node::Twist(inner, f) => {
                let fv = f.eval(u).ok_or_else(|| Error::Pole(u.clone()))?;
                let x = inner.eval(u)?;
                let (p, q) = (fv.numer().clone(), fv.denom().clone());
                let ops = x.ops.iter().map(|m| m.scale(&p)).collect();
                Ok(NumAction::new(n, &x.den * &q, ops))
            }
            Node::Restrict(r) => {
                let x = r.parent.eval(u)?;
                let pn = r.parent.space().dim();
                let dim = r.cols.len();
                let mut ops = Vec::with_capacity(nn * nn);
                for i in 0..nn {
                    for j in 0..nn {
                        let m = &x.ops[(i + r.offset) * pn + (j + r.offset)];
                        let cols = (0..dim)
                            .map(|c| {
                                let img = m.mul_vec(&r.cols[c]);
                                let mut out = Vec::new();
                                for (c2, &p) in r.pivots.iter().enumerate() {
                                    if let Ok(pos) = img.binary_search_by_key(&p, |e| e.0) {
                                        out.push((c2 as u32, &img[pos].1 * &r.scales[c]));
                                    }
                                }
                                out
                            })
                            .collect();
                        ops.push(SpMat::from_columns(dim, cols));
                    }
                }
                Ok(NumAction::new(n, &x.den * &r.lcm, ops))
            }
        }
    }

    /// Matrices `C^(r)` with `D(u) t_ij(u) = sum_r C_ij^(r) u^r`, indexed
    /// `[(i-1) * dim + (j-1)][r]`, interpolated from `deg D + 1` evaluations
    /// and confirmed at one more point.
    pub fn cleared_coefficients(&self) -> Result<&[Vec<SpMat<Rat>>]> {
        self.0
            .coeffs
            .get_or_init(|| self.interpolate_coefficients().map_err(|e| e.to_string()))
            .as_ref()
            .map(Vec::as_slice)
            .map_err(|e| Error::InvalidArgument(e.clone()))
    }

    fn cleared_value(&self, u: &Rat) -> Result<Vec<SpMat<Rat>>> {
        let a = self.eval(u)?;
        let f = &self.0.den.eval(u) / &Rat::from_int(a.den.clone());
        Ok(a.ops
            .iter()
            .map(|m| m.map(|x| &Rat::from_int(x.clone()) * &f))
            .collect())
    }

    fn interpolate_coefficients(&self) -> Result<Vec<Vec<SpMat<Rat>>>> {
        let delta = self.degree();
        let pts = self.sample_points(delta + 2, |_| true);
        let (nodes, check) = pts.split_at(delta + 1);
        let values: Vec<Vec<SpMat<Rat>>> =
            nodes.iter().map(|u| self.cleared_value(u)).collect::<Result<_>>()?;
        // Lagrange basis polynomials
        let basis: Vec<Poly> = (0..nodes.len())
            .map(|m| {
                let others: Vec<Rat> = nodes
                    .iter()
                    .enumerate()
                    .filter(|(l, _)| *l != m)
                    .map(|(_, x)| x.clone())
                    .collect();
                let p = Poly::from_roots(&others);
                let c = p.eval(&nodes[m]).recip().expect("distinct nodes");
                p.scale(&c)
            })
            .collect();
        let d = self.dim();
        let nops = values[0].len();
        let mut out = Vec::with_capacity(nops);
        for o in 0..nops {
            let per_r: Vec<SpMat<Rat>> = (0..=delta)
                .map(|r| {
                    let terms: Vec<(Rat, &SpMat<Rat>)> = (0..nodes.len())
                        .map(|m| (basis[m].coeff(r), &values[m][o]))
                        .collect();
                    SpMat::linear_combination(d, d, &terms)
                })
                .collect();
            out.push(per_r);
        }
        for u in check {
            let want = self.cleared_value(u)?;
            for (o, cs) in out.iter().enumerate() {
                let terms: Vec<(Rat, &SpMat<Rat>)> =
                    cs.iter().enumerate().map(|(r, m)| (u.pow(r as u32), m)).collect();
                if SpMat::linear_combination(d, d, &terms) != want[o] {
                    return Err(Error::DegreeBound);
                }
            }
        }
        Ok(out)
    }

    /// The coefficient `t_ij^(1)` of `u^-1`.
    pub fn first_order(&self, i: usize, j: usize) -> Result<SpMat<Rat>> {
        let delta = self.degree();
        let d = self.dim();
        if delta == 0 {
            return Ok(SpMat::zeros(d, d));
        }
        let nn = self.space().dim();
        let c = &self.cleared_coefficients()?[(i - 1) * nn + (j - 1)][delta - 1];
        if i == j {
            let shift = self.0.den.coeff(delta - 1);
            Ok(c.sub(&SpMat::scalar_identity(d, shift)))
        } else {
            Ok(c.clone())
        }
    }

    /// `t_ij(u)` with rational-function entries.
    pub fn action(&self, i: usize, j: usize) -> Result<SpMat<RationalFunction>> {
        let nn = self.space().dim();
        let cs = &self.cleared_coefficients()?[(i - 1) * nn + (j - 1)];
        let d = self.dim();
        let mut trip = BTreeMap::<(usize, usize), Vec<Rat>>::new();
        for (r, m) in cs.iter().enumerate() {
            for (row, col, v) in m.iter() {
                let e = trip.entry((row, col)).or_insert_with(|| vec![Rat::zero(); cs.len()]);
                e[r] = v.clone();
            }
        }
        let den = self.0.den.clone();
        let entries = trip.into_iter().map(|((r, c), coeffs)| {
            let f = RationalFunction::new(Poly::new(coeffs), den.clone()).expect("nonzero den");
            (r, c, f)
        });
        Ok(SpMat::from_triplets(d, d, entries))
    }

    /// Weight keys of the basis vectors: the parity and, when the Cartan
    /// elements `t_kk^(1) - t_k'k'^(1)` (k <= n) act diagonally, their
    /// eigenvalues. Every `t_ij(u)` maps a weight space into a single
    /// weight space, so joint kernels split along these keys.
    pub fn weight_keys(&self) -> Result<&[WeightKey]> {
        if let Some(w) = self.0.weights.get() {
            return Ok(w);
        }
        let s = self.space();
        let d = self.dim();
        let mut diag: Vec<Vec<Rat>> = vec![Vec::with_capacity(s.n()); d];
        let mut diagonal = true;
        for k in 1..=s.n() {
            let h = self.first_order(k, k)?.sub(&self.first_order(s.prime(k), s.prime(k))?);
            if h.iter().any(|(r, c, _)| r != c) {
                diagonal = false;
                break;
            }
            for (c, dc) in diag.iter_mut().enumerate() {
                dc.push(h.get(c, c));
            }
        }
        let keys = (0..d)
            .map(|c| {
                let w = if diagonal { std::mem::take(&mut diag[c]) } else { Vec::new() };
                (self.0.parity[c], w)
            })
            .collect();
        Ok(self.0.weights.get_or_init(|| keys))
    }

    /// Basis indices grouped by weight key, in key order.
    pub fn weight_buckets(&self) -> Result<Vec<Vec<usize>>> {
        let mut map: BTreeMap<&WeightKey, Vec<usize>> = BTreeMap::new();
        for (c, k) in self.weight_keys()?.iter().enumerate() {
            map.entry(k).or_default().push(c);
        }
        Ok(map.into_values().collect())
    }
}

/// `t_ij(u) = delta_ij + u^-1 e_ij (-1)^i - (u + kappa)^-1 e_j'i' (-1)^{ij} theta_i theta_j`
/// at `u = p/q`, cleared by `p * (2p - (2n+1) q)`.
fn vector_action(s: &GradedSpace, u: &Rat) -> Result<NumAction> {
    let nn = s.dim();
    let (p, q) = (u.numer().clone(), u.denom().clone());
    let b = BigInt::from(2) * &p - BigInt::from(s.two_kappa_neg()) * &q;
    if p.is_zero() || b.is_zero() {
        return Err(Error::Pole(u.clone()));
    }
    let den = &p * &b;
    let first = &q * &b;
    let second = BigInt::from(2) * &q * &p;
    let mut ops = Vec::with_capacity(nn * nn);
    for i in 0..nn {
        for j in 0..nn {
            let mut trip = Vec::new();
            if i == j {
                for c in 0..nn {
                    trip.push((c, c, den.clone()));
                }
            }
            trip.push((i, j, if s.odd0(i) { -first.clone() } else { first.clone() }));
            let neg = !((s.odd0(i) && s.odd0(j)) ^ (s.theta0(i) * s.theta0(j) < 0));
            trip.push((s.prime0(j), s.prime0(i), if neg { -second.clone() } else { second.clone() }));
            ops.push(SpMat::from_triplets(nn, nn, trip));
        }
    }
    Ok(NumAction::new(s.n(), den, ops))
}

/// The coproduct: `t_ij -> sum_k t_ik (x) t_kj`, with
/// `(a (x) b)(v (x) w) = (-1)^{|b||v|} a v (x) b w` and `|t_kj| = k + j`.
fn tensor_action(s: &GradedSpace, a: &NumAction, pa: &[u8], b: &NumAction) -> NumAction {
    let nn = s.dim();
    let rows = a.ops[0].rows() * b.ops[0].rows();
    let mut ops = Vec::with_capacity(nn * nn);
    for i in 0..nn {
        for j in 0..nn {
            let parts: Vec<SpMat<BigInt>> = (0..nn)
                .filter_map(|k| {
                    let x = &a.ops[i * nn + k];
                    let y = &b.ops[k * nn + j];
                    if x.is_zero() || y.is_zero() {
                        return None;
                    }
                    let odd_b = s.odd0(k) ^ s.odd0(j);
                    Some(x.kron_signed(y, |c| odd_b && pa[c] == 1))
                })
                .collect();
            let terms: Vec<(BigInt, &SpMat<BigInt>)> = parts.iter().map(|m| (BigInt::one(), m)).collect();
            ops.push(SpMat::linear_combination(rows, rows, &terms));
        }
    }
    NumAction::new(s.n(), &a.den * &b.den, ops)
}
