//! Cauchy interpolation: recovering a rational function from point values.

use super::{interpolate, Poly, Rat, RationalFunction};
use crate::error::{Error, Result};

/// Reconstructs the reduced `p/q` with `deg p <= num_deg`, `deg q <= den_deg`
/// through the given samples.
///
/// The candidate comes from the first `num_deg + den_deg + 1` samples by the
/// extended Euclidean algorithm applied to the interpolating polynomial and
/// the node polynomial; it is then checked against every sample, so at least
/// one extra sample is required.
pub fn rational_reconstruct(
    samples: &[(Rat, Rat)],
    num_deg: usize,
    den_deg: usize,
) -> Result<RationalFunction> {
    let m = num_deg + den_deg + 1;
    if samples.len() < m + 1 {
        return Err(Error::InsufficientSamples {
            needed: m + 1,
            got: samples.len(),
        });
    }
    for (i, (x, _)) in samples.iter().enumerate() {
        if samples[..i].iter().any(|(y, _)| y == x) {
            return Err(Error::InvalidArgument(format!("repeated sample point {x}")));
        }
    }
    let fail = |point: &Rat| Error::InconsistentSamples {
        point: point.clone(),
        num_deg,
        den_deg,
    };

    let head = &samples[..m];
    let nodes: Vec<Rat> = head.iter().map(|(x, _)| x.clone()).collect();
    let mut r0 = Poly::from_roots(&nodes);
    let mut r1 = interpolate(head);
    let mut t0 = Poly::zero();
    let mut t1 = Poly::one();
    while r1.degree().is_some_and(|d| d > num_deg) {
        let (q, r) = r0.div_rem(&r1);
        let t = &t0 - &(&q * &t1);
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t;
    }
    if t1.deg0() > den_deg {
        return Err(fail(&head[m - 1].0));
    }
    let candidate = RationalFunction::new(r1, t1).map_err(|_| fail(&head[m - 1].0))?;
    for (x, y) in samples {
        match candidate.eval(x) {
            Some(v) if &v == y => {}
            _ => return Err(fail(x)),
        }
    }
    Ok(candidate)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(f: &RationalFunction, xs: impl IntoIterator<Item = i64>) -> Vec<(Rat, Rat)> {
        xs.into_iter()
            .map(|x| {
                let x = Rat::from(x);
                let y = f.eval(&x).unwrap();
                (x, y)
            })
            .collect()
    }

    #[test]
    fn exact_recovery() {
        let f = RationalFunction::linear_ratio(&Rat::from(2), &Rat::from(1));
        let got = rational_reconstruct(&sample(&f, 3..=6), 1, 1).unwrap();
        assert_eq!(got, f);
    }

    #[test]
    fn degenerate_degree() {
        let got = rational_reconstruct(&sample(&RationalFunction::one(), 3..=6), 1, 1).unwrap();
        assert_eq!(got, RationalFunction::one());
    }

    #[test]
    fn zero_function() {
        let got = rational_reconstruct(&sample(&RationalFunction::zero(), 1..=5), 2, 1).unwrap();
        assert!(got.is_zero());
    }

    #[test]
    fn inconsistent_samples_name_a_point() {
        // u^3 is not of degree (1, 1).
        let f = RationalFunction::from_poly(Poly::from_ints(&[0, 0, 0, 1]));
        match rational_reconstruct(&sample(&f, 1..=5), 1, 1) {
            Err(Error::InconsistentSamples { point, .. }) => {
                assert!(point >= Rat::from(1) && point <= Rat::from(5))
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn too_few_samples() {
        let f = RationalFunction::one();
        assert!(matches!(
            rational_reconstruct(&sample(&f, 1..=3), 1, 1),
            Err(Error::InsufficientSamples { needed: 4, got: 3 })
        ));
    }
}
