//! Order-by-order solver for series systems X_i = F_i(X_1..X_m, z).
//!
//! Works whenever the z^n coefficient of each right-hand side depends only on
//! coefficients of the unknowns below order n (the systems here all have this
//! shape because every unknown enters the RHS multiplied by a valuation >= 1
//! series). The final residual is checked; a nonzero residual reports the
//! first offending order as `NotTriangular`.

use super::error::AlgebraError;
use super::series::{Ring, TruncSeries};

/// Evaluates one equation's right-hand side given the current partial solutions.
pub type SeriesRhs<'a, R> = Box<dyn Fn(&[TruncSeries<R>]) -> TruncSeries<R> + 'a>;

pub fn solve_linear_series_system<R: Ring>(
    equations: &[SeriesRhs<'_, R>],
    order: usize,
) -> Result<Vec<TruncSeries<R>>, AlgebraError> {
    let m = equations.len();
    let mut sol: Vec<TruncSeries<R>> = vec![TruncSeries::zero(order); m];
    for n in 0..order {
        // evaluate at truncation n+1 with the unknowns' order-n entries still zero
        let partial: Vec<TruncSeries<R>> =
            sol.iter().map(|s| s.truncate(n + 1)).collect();
        let mut new_coeffs = Vec::with_capacity(m);
        for eq in equations {
            let rhs = eq(&partial);
            new_coeffs.push(rhs.coeff(n));
        }
        for (i, c) in new_coeffs.into_iter().enumerate() {
            let mut coeffs = sol[i].coeffs().to_vec();
            coeffs[n] = c;
            sol[i] = TruncSeries::from_coeffs(coeffs);
        }
    }
    // residual check against the full solution
    for (i, eq) in equations.iter().enumerate() {
        let rhs = eq(&sol);
        let res = sol[i].sub(&rhs);
        if let Some(bad) = res.valuation() {
            return Err(AlgebraError::NotTriangular { order: bad });
        }
    }
    Ok(sol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, Rat};

    fn s(v: &[i64], order: usize) -> TruncSeries<Rat> {
        let mut c: Vec<Rat> = v.iter().map(|&x| rat(x)).collect();
        c.resize(order, rat(0));
        TruncSeries::from_coeffs(c)
    }

    #[test]
    fn catalan_single_equation() {
        // X = z + X^2
        let n = 8;
        let eqs: Vec<SeriesRhs<'_, Rat>> = vec![Box::new(move |x: &[TruncSeries<Rat>]| {
            TruncSeries::z(x[0].order()).add(&x[0].mul(&x[0]))
        })];
        let sol = solve_linear_series_system(&eqs, n).unwrap();
        assert_eq!(sol[0], s(&[0, 1, 1, 2, 5, 14, 42, 132], n));
    }

    #[test]
    fn s_equals_d_times_d_minus_s() {
        // S = D(D-S) with D = z + z^2; fixed-point value z^2 + z^3 - z^4 + ...
        let n = 6;
        let eqs: Vec<SeriesRhs<'_, Rat>> = vec![Box::new(move |x: &[TruncSeries<Rat>]| {
            let d = s(&[0, 1, 1], x[0].order());
            d.mul(&d.sub(&x[0]))
        })];
        let sol = solve_linear_series_system(&eqs, n).unwrap();
        assert_eq!(sol[0], s(&[0, 0, 1, 1, -1, 1], n));
    }

    #[test]
    fn degenerate_zero() {
        // D = 0 -> S = 0
        let eqs: Vec<SeriesRhs<'_, Rat>> = vec![Box::new(move |x: &[TruncSeries<Rat>]| {
            TruncSeries::zero(x[0].order()).mul(&x[0])
        })];
        let sol = solve_linear_series_system(&eqs, 5).unwrap();
        assert!(sol[0].is_zero());
    }

    #[test]
    fn non_triangular_detected() {
        // X = 1 + X has no series solution: residual never vanishes
        let eqs: Vec<SeriesRhs<'_, Rat>> = vec![Box::new(move |x: &[TruncSeries<Rat>]| {
            TruncSeries::one(x[0].order()).add(&x[0])
        })];
        assert!(matches!(
            solve_linear_series_system(&eqs, 4),
            Err(AlgebraError::NotTriangular { order: 0 })
        ));
    }
}
