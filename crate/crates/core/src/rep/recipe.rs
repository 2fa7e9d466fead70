use serde::{Deserialize, Serialize};

use crate::arith::{Rat, RationalFunction};
use crate::superlin::Mutation;

/// How a module was built; enough to rebuild it with [`super::RepModule::from_recipe`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Recipe {
    Trivial {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        mutation: Option<Mutation>,
    },
    Vector {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        mutation: Option<Mutation>,
    },
    Tensor {
        factors: Vec<Recipe>,
        shifts: Vec<Rat>,
    },
    Shift {
        inner: Box<Recipe>,
        a: Rat,
    },
    Twist {
        inner: Box<Recipe>,
        f: RationalFunction,
    },
    /// The action of the next smaller algebra on the subspace `V+`.
    Reduce { inner: Box<Recipe> },
    /// The submodule generated by the antisymmetrized vector in the k-fold
    /// tensor power of the vector representation with shifts `0, 1, ..., k-1`.
    Fundamental {
        n: usize,
        k: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        mutation: Option<Mutation>,
    },
}

impl Recipe {
    /// The number of vector-representation factors, counted through
    /// shifts, twists and restrictions.
    pub fn tensor_order(&self) -> usize {
        match self {
            Recipe::Trivial { .. } => 0,
            Recipe::Vector { .. } => 1,
            Recipe::Tensor { factors, .. } => factors.iter().map(Recipe::tensor_order).sum(),
            Recipe::Shift { inner, .. } | Recipe::Twist { inner, .. } | Recipe::Reduce { inner } => {
                inner.tensor_order()
            }
            Recipe::Fundamental { k, .. } => *k,
        }
    }

    /// A compact human-readable description.
    pub fn describe(&self) -> String {
        match self {
            Recipe::Trivial { n, .. } => format!("trivial(n={n})"),
            Recipe::Vector { n, mutation } => match mutation {
                Some(m) => format!("vector(n={n}, mutate={m:?})"),
                None => format!("vector(n={n})"),
            },
            Recipe::Tensor { factors, shifts } => {
                let parts: Vec<String> = factors
                    .iter()
                    .zip(shifts)
                    .map(|(f, s)| {
                        if s.is_zero() {
                            f.describe()
                        } else {
                            format!("{}@{s}", f.describe())
                        }
                    })
                    .collect();
                parts.join(" x ")
            }
            Recipe::Shift { inner, a } => format!("shift({}, {a})", inner.describe()),
            Recipe::Twist { inner, f } => format!("twist({}, {f})", inner.describe()),
            Recipe::Reduce { inner } => format!("reduce({})", inner.describe()),
            Recipe::Fundamental { n, k, .. } => format!("fundamental(n={n}, k={k})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let r = Recipe::Twist {
            inner: Box::new(Recipe::Tensor {
                factors: vec![Recipe::Vector { n: 2, mutation: None }; 2],
                shifts: vec![Rat::zero(), Rat::one()],
            }),
            f: RationalFunction::linear_ratio(&Rat::one(), &Rat::zero()),
        };
        let j = serde_json::to_string(&r).unwrap();
        assert!(j.starts_with(r#"{"kind":"twist","inner":{"kind":"tensor""#));
        assert_eq!(serde_json::from_str::<Recipe>(&j).unwrap(), r);
        assert_eq!(r.tensor_order(), 2);
    }
}
