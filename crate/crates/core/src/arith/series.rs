//! Truncated series in `u^-1`, used as an output and interchange format.

use serde::{Deserialize, Serialize};

use super::{Poly, Rat};
use crate::error::{Error, Result};

/// `a_0 + a_1 u^-1 + ... + a_N u^-N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeriesRepr", into = "SeriesRepr")]
pub struct SeriesInvU {
    coeffs: Vec<Rat>,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: usize,
    coeffs: Vec<Rat>,
}

impl TryFrom<SeriesRepr> for SeriesInvU {
    type Error = String;
    fn try_from(r: SeriesRepr) -> std::result::Result<Self, String> {
        if r.coeffs.len() != r.order + 1 {
            return Err(format!(
                "series of order {} needs {} coefficients, got {}",
                r.order,
                r.order + 1,
                r.coeffs.len()
            ));
        }
        Ok(SeriesInvU { coeffs: r.coeffs })
    }
}

impl From<SeriesInvU> for SeriesRepr {
    fn from(s: SeriesInvU) -> Self {
        SeriesRepr {
            order: s.order(),
            coeffs: s.coeffs,
        }
    }
}

impl SeriesInvU {
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least the constant term");
        SeriesInvU { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, r: usize) -> &Rat {
        &self.coeffs[r]
    }

    /// Product truncated to the smaller of the two orders.
    pub fn mul_truncated(&self, other: &SeriesInvU) -> SeriesInvU {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|r| {
                (0..=r).fold(Rat::zero(), |acc, s| {
                    acc + &self.coeffs[s] * &other.coeffs[r - s]
                })
            })
            .collect();
        SeriesInvU { coeffs }
    }
}

/// Expansion of `num(u) / den(u)` at `u = infinity` through `u^-order`.
///
/// With `w = u^-1` and `d = deg den`, the quotient equals `A(w) / B(w)` where
/// `A(w) = w^d num(1/w)` and `B(w) = w^d den(1/w)`, and `B(0)` is the leading
/// coefficient of `den`.
pub fn series_of_quotient(num: &Poly, den: &Poly, order: usize) -> Result<SeriesInvU> {
    let d = den.degree().ok_or(Error::DivisionByZero)?;
    if let Some(nd) = num.degree() {
        if nd > d {
            return Err(Error::NotASeries {
                num_deg: nd,
                den_deg: d,
            });
        }
    }
    let a = |m: usize| if m <= d { num.coeff(d - m) } else { Rat::zero() };
    let b = |m: usize| if m <= d { den.coeff(d - m) } else { Rat::zero() };
    let b0 = b(0).recip().expect("leading coefficient is nonzero");
    let mut out: Vec<Rat> = Vec::with_capacity(order + 1);
    for m in 0..=order {
        let mut acc = a(m);
        for s in 1..=m.min(d) {
            acc -= &(&b(s) * &out[m - s]);
        }
        out.push(&acc * &b0);
    }
    Ok(SeriesInvU { coeffs: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::RationalFunction;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_ints(num), Poly::from_ints(den)).unwrap()
    }

    fn ints(s: &SeriesInvU) -> Vec<String> {
        s.coeffs().iter().map(Rat::to_string).collect()
    }

    #[test]
    fn geometric_expansion() {
        let s = rf(&[-1, 1], &[0, 1]).series_expand(3).unwrap();
        assert_eq!(ints(&s), ["1", "-1", "0", "0"]);
    }

    #[test]
    fn identity_expansion() {
        let s = RationalFunction::one().series_expand(5).unwrap();
        assert_eq!(ints(&s), ["1", "0", "0", "0", "0", "0"]);
    }

    #[test]
    fn long_division_oracle() {
        // (u^2 - 1)/u^2 = 1 - u^-2 by long division.
        let s = rf(&[-1, 0, 1], &[0, 0, 1]).series_expand(4).unwrap();
        assert_eq!(ints(&s), ["1", "0", "-1", "0", "0"]);
    }

    #[test]
    fn pole_at_infinity_is_rejected() {
        let e = rf(&[0, 0, 1], &[1, 1]).series_expand(2).unwrap_err();
        assert!(matches!(e, Error::NotASeries { num_deg: 2, den_deg: 1 }));
    }

    #[test]
    fn json_shape() {
        let s = rf(&[-1, 1], &[0, 1]).series_expand(2).unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"order":2,"coeffs":["1","-1","0"]}"#);
        assert_eq!(serde_json::from_str::<SeriesInvU>(&j).unwrap(), s);
        assert!(serde_json::from_str::<SeriesInvU>(r#"{"order":3,"coeffs":["1"]}"#).is_err());
    }
}
