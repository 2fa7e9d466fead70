use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::module::{Node, RepModule, Restriction};
use super::recipe::Recipe;
use crate::arith::{Poly, Rat, RationalFunction};
use crate::error::{Error, Result};
use crate::linalg::clear_denominators;
use crate::sparse::SpVec;
use crate::superlin::GradedSpace;

/// The one-dimensional module with `t_ij(u) = delta_ij`.
pub fn trivial_rep(space: &GradedSpace) -> RepModule {
    RepModule::assemble(
        space.clone(),
        vec![0],
        vec![Vec::new()],
        Recipe::Trivial {
            n: space.n(),
            mutation: space.mutation(),
        },
        Poly::one(),
        Node::Trivial,
    )
}

/// The vector representation on `C^(1|2n)`:
/// `t_ij(u) -> delta_ij + u^-1 e_ij (-1)^i - (u + kappa)^-1 e_j'i' (-1)^{ij} theta_i theta_j`.
pub fn vector_rep(space: &GradedSpace) -> RepModule {
    let den = &Poly::u() * &Poly::linear_root(&-space.kappa());
    RepModule::assemble(
        space.clone(),
        space.indices().map(|i| space.parity(i)).collect(),
        space.indices().map(|i| vec![i]).collect(),
        Recipe::Vector {
            n: space.n(),
            mutation: space.mutation(),
        },
        den,
        Node::Vector,
    )
}

/// The tensor product through the coproduct, with factor `a` evaluated at
/// `u - shifts[a]`.
pub fn tensor_rep(factors: &[RepModule], shifts: &[Rat]) -> Result<RepModule> {
    if factors.is_empty() {
        return Err(Error::InvalidArgument("tensor product of no factors".into()));
    }
    if factors.len() != shifts.len() {
        return Err(Error::Mismatch(format!(
            "{} factors but {} shifts",
            factors.len(),
            shifts.len()
        )));
    }
    let space = factors[0].space().clone();
    if factors.iter().any(|f| f.space() != &space) {
        return Err(Error::Mismatch("factors live over different spaces".into()));
    }
    let mut parity = vec![0u8];
    let mut labels = vec![Vec::new()];
    let mut den = Poly::one();
    for (f, s) in factors.iter().zip(shifts) {
        parity = parity
            .iter()
            .flat_map(|x| f.parity().iter().map(move |y| (x + y) % 2))
            .collect();
        labels = labels
            .iter()
            .flat_map(|w| {
                f.labels().iter().map(move |l| {
                    let mut w = w.clone();
                    w.extend_from_slice(l);
                    w
                })
            })
            .collect();
        den = &den * &f.denominator().shift(&-s.clone());
    }
    let recipe = Recipe::Tensor {
        factors: factors.iter().map(|f| f.recipe().clone()).collect(),
        shifts: shifts.to_vec(),
    };
    let node = Node::Tensor(factors.iter().cloned().zip(shifts.iter().cloned()).collect());
    Ok(RepModule::assemble(space, parity, labels, recipe, den, node))
}

/// `t_ij(u) -> t_ij(u + a)`. Consecutive shifts are merged, and a total
/// shift of zero gives back the unshifted module.
pub fn shift_rep(rep: &RepModule, a: &Rat) -> RepModule {
    let (base, total) = match &rep.0.node {
        Node::Shift(inner, b) => (inner.clone(), b + a),
        _ => (rep.clone(), a.clone()),
    };
    if total.is_zero() {
        return base;
    }
    RepModule::assemble(
        base.space().clone(),
        base.parity().to_vec(),
        base.labels().to_vec(),
        Recipe::Shift {
            inner: Box::new(base.recipe().clone()),
            a: total.clone(),
        },
        base.denominator().shift(&total),
        Node::Shift(base.clone(), total),
    )
}

/// `t_ij(u) -> f(u) t_ij(u)` for `f(infinity) = 1`.
pub fn twist_rep(rep: &RepModule, f: &RationalFunction) -> Result<RepModule> {
    if f.value_at_infinity() != Some(Rat::one()) {
        return Err(Error::InvalidArgument(format!(
            "twisting series must tend to 1 at infinity, got {f}"
        )));
    }
    if f.is_one() {
        return Ok(rep.clone());
    }
    Ok(RepModule::assemble(
        rep.space().clone(),
        rep.parity().to_vec(),
        rep.labels().to_vec(),
        Recipe::Twist {
            inner: Box::new(rep.recipe().clone()),
            f: f.clone(),
        },
        rep.denominator() * f.den(),
        Node::Twist(rep.clone(), f.clone()),
    ))
}

/// The action on the span of `basis` (reduced echelon, homogeneous
/// vectors), with generator `t_ij` of the result acting as
/// `t_{i+offset, j+offset}` of `parent`. Invariance is the caller's
/// responsibility.
pub(crate) fn restrict(
    parent: &RepModule,
    basis: &[SpVec<Rat>],
    offset: usize,
    space: GradedSpace,
    recipe: Recipe,
) -> RepModule {
    let mut cols = Vec::with_capacity(basis.len());
    let mut ls = Vec::with_capacity(basis.len());
    let mut pivots = Vec::with_capacity(basis.len());
    let mut lcm = BigInt::one();
    for b in basis {
        let (v, l) = clear_denominators(b);
        debug_assert!(l.is_integer());
        lcm = lcm.lcm(l.numer());
        pivots.push(b[0].0);
        ls.push(l.numer().clone());
        cols.push(v);
    }
    let scales = ls.iter().map(|l| &lcm / l).collect();
    let parity = pivots.iter().map(|&p| parent.parity()[p as usize]).collect();
    let labels = pivots
        .iter()
        .map(|&p| parent.labels()[p as usize].clone())
        .collect();
    let den = parent.denominator().clone();
    RepModule::assemble(
        space,
        parity,
        labels,
        recipe,
        den,
        Node::Restrict(Restriction {
            parent: parent.clone(),
            cols,
            pivots,
            scales,
            lcm,
            offset,
        }),
    )
}

impl RepModule {
    /// Rebuilds a module from its recipe.
    pub fn from_recipe(recipe: &Recipe) -> Result<RepModule> {
        match recipe {
            Recipe::Trivial { n, mutation } => Ok(trivial_rep(&GradedSpace::new(*n)?.with_mutation(*mutation))),
            Recipe::Vector { n, mutation } => Ok(vector_rep(&GradedSpace::new(*n)?.with_mutation(*mutation))),
            Recipe::Tensor { factors, shifts } => {
                let fs = factors.iter().map(RepModule::from_recipe).collect::<Result<Vec<_>>>()?;
                tensor_rep(&fs, shifts)
            }
            Recipe::Shift { inner, a } => Ok(shift_rep(&RepModule::from_recipe(inner)?, a)),
            Recipe::Twist { inner, f } => twist_rep(&RepModule::from_recipe(inner)?, f),
            Recipe::Reduce { inner } => Ok(super::vplus::reduce_module(&RepModule::from_recipe(inner)?)?),
            Recipe::Fundamental { n, k, mutation } => {
                super::vplus::fundamental_module(&GradedSpace::new(*n)?.with_mutation(*mutation), *k)
            }
        }
    }
}

/// The `k`-fold tensor power of the vector representation with shifts
/// `0, 1, ..., k-1`.
pub fn fundamental_tensor(space: &GradedSpace, k: usize) -> Result<RepModule> {
    if k < 1 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let v = vector_rep(space);
    let shifts: Vec<Rat> = (0..k).map(|a| Rat::from(a as i64)).collect();
    tensor_rep(&vec![v; k], &shifts)
}
