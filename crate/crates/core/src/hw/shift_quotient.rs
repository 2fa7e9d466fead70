use crate::arith::{Poly, Rat, RationalFunction};

/// Search limit for the dispersion.
const MAX_DISPERSION: usize = 64;

/// The largest `j` in `0..=64` with `gcd(a(u), b(u + j))` nonconstant, i.e.
/// the largest integer distance `r_b - r_a` from a root of `a` up to a root
/// of `b`.
pub fn dispersion(a: &Poly, b: &Poly) -> Option<usize> {
    (0..=MAX_DISPERSION)
        .rev()
        .find(|&j| Poly::gcd(a, &b.shift(&Rat::from(j as i64))).deg0() > 0)
}

/// The monic `P` with `P(u + 1) / P(u) = a(u) / b(u)`, if there is one.
///
/// Requires monic, coprime `a` and `b` of equal degree (`a = b` gives
/// `P = 1`). Peeling: a solution must contain `b` as a factor, and
/// `P = b P1` leaves `P1(u + 1) / P1(u) = a(u) / b(u + 1)`; each step lowers
/// the dispersion, so at most `dispersion(a, b)` steps are taken.
pub fn solve_shift_quotient(a: &Poly, b: &Poly) -> Option<Poly> {
    if a == b {
        return Some(Poly::one());
    }
    if !a.is_monic() || !b.is_monic() || a.degree() != b.degree() || Poly::gcd(a, b).deg0() > 0 {
        return None;
    }
    let cap = dispersion(a, b)?;
    let mut p = Poly::one();
    let (mut x, mut y) = (a.clone(), b.clone());
    for _ in 0..cap {
        p = &p * &y;
        let ys = y.shift(&Rat::one());
        let g = Poly::gcd(&x, &ys);
        x = x.div_rem(&g).0;
        y = ys.div_rem(&g).0;
        if x.is_one() && y.is_one() {
            let want = RationalFunction::new(a.clone(), b.clone()).ok()?;
            let got = RationalFunction::new(p.shift(&Rat::one()), p.clone()).ok()?;
            return (got == want).then_some(p);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(r: i64) -> Poly {
        Poly::linear_root(&Rat::from(r))
    }

    #[test]
    fn documented_cases() {
        assert_eq!(solve_shift_quotient(&lin(1), &lin(2)), Some(lin(2)));
        assert_eq!(solve_shift_quotient(&Poly::u(), &Poly::u()), Some(Poly::one()));
        assert_eq!(solve_shift_quotient(&lin(-1), &lin(1)), Some(&Poly::u() * &lin(1)));
        assert_eq!(
            solve_shift_quotient(&Poly::linear_root(&Rat::new(-1, 2)), &Poly::u()),
            None
        );
    }

    #[test]
    fn preconditions() {
        assert_eq!(solve_shift_quotient(&lin(1).scale(&Rat::from(2)), &lin(2)), None);
        assert_eq!(solve_shift_quotient(&(&lin(1) * &lin(3)), &lin(2)), None);
        assert_eq!(solve_shift_quotient(&(&lin(1) * &lin(2)), &(&lin(1) * &lin(5))), None);
    }

    #[test]
    fn wrong_direction_has_no_solution() {
        // P(u+1)/P(u) has the roots of P shifted down by one on top
        assert_eq!(solve_shift_quotient(&lin(2), &lin(1)), None);
    }

    #[test]
    fn dispersion_values() {
        assert_eq!(dispersion(&lin(-1), &lin(1)), Some(2));
        assert_eq!(dispersion(&lin(1), &lin(2)), Some(1));
        assert_eq!(dispersion(&Poly::u(), &Poly::linear_root(&Rat::new(1, 2))), None);
    }
}
