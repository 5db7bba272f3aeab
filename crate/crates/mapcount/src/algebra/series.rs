//! Truncated power series in z over a pluggable exact coefficient ring.
//!
//! A `TruncSeries<R>` knows its coefficients for z^0 .. z^{order-1} and
//! nothing beyond. Binary operations return the minimum valid order; shifts
//! adjust the order so that no operation ever silently extends what is known.
//! All values are immutable after construction and all operations are pure.

use std::fmt::Debug;

use num_traits::{One, Zero};

use super::error::AlgebraError;
use super::poly::PolyNu;
use super::rational::Rat;

/// Exact commutative coefficient ring.
///
/// Implemented by `Rat` (rationals), `PolyNu` (polynomials in ν) and
/// `CatalyticPoly` (polynomials in x, y, ν).
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_int(n: i64) -> Self;
    /// Multiplicative inverse when self is a unit of the ring.
    fn try_inverse(&self) -> Option<Self>;
    /// Division by a nonzero integer (all our rings are Q-algebras).
    fn div_int(&self, n: i64) -> Self;
}

impl Ring for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn is_zero(&self) -> bool {
        <Rat as Zero>::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        super::rational::rat(n)
    }
    fn try_inverse(&self) -> Option<Self> {
        if <Rat as Zero>::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn div_int(&self, n: i64) -> Self {
        self / super::rational::rat(n)
    }
}

impl Ring for PolyNu {
    fn zero() -> Self {
        PolyNu::zero()
    }
    fn one() -> Self {
        PolyNu::one()
    }
    fn is_zero(&self) -> bool {
        PolyNu::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        PolyNu::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        PolyNu::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        PolyNu::mul(self, other)
    }
    fn neg(&self) -> Self {
        PolyNu::neg(self)
    }
    fn from_int(n: i64) -> Self {
        PolyNu::constant(super::rational::rat(n))
    }
    fn try_inverse(&self) -> Option<Self> {
        // units of Q[nu] are the nonzero constants
        if self.degree() == Some(0) {
            self.coeff(0).recip().into()
        } else {
            None
        }
    }
    fn div_int(&self, n: i64) -> Self {
        self.scale(&super::rational::rat(n).recip())
    }
}

impl From<Rat> for PolyNu {
    fn from(c: Rat) -> Self {
        PolyNu::constant(c)
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<R: Ring> {
    order: usize,
    coeffs: Vec<R>,
}

impl<R: Ring> TruncSeries<R> {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            order,
            coeffs: vec![R::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(R::one(), 0, order)
    }

    /// z itself (zero when order < 2 leaves nothing to store above the cut).
    pub fn z(order: usize) -> Self {
        Self::monomial(R::one(), 1, order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Self::monomial(c, 0, order)
    }

    /// c·z^k truncated at `order`.
    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        TruncSeries {
            order: coeffs.len(),
            coeffs,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Index of the first nonzero coefficient, if any below the order.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        if order >= self.order {
            return self.clone();
        }
        TruncSeries {
            order,
            coeffs: self.coeffs[..order].to_vec(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncSeries<S> {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (0..order)
            .map(|i| self.coeffs[i].add(&other.coeffs[i]))
            .collect();
        TruncSeries { order, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (0..order)
            .map(|i| self.coeffs[i].sub(&other.coeffs[i]))
            .collect();
        TruncSeries { order, coeffs }
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    /// Cauchy product at the common valid order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut coeffs = vec![R::zero(); order];
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order - i) {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        TruncSeries { order, coeffs }
    }

    pub fn scale(&self, c: &R) -> Self {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Multiply by z^k. The result is valid to order + k.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        TruncSeries {
            order: self.order + k,
            coeffs,
        }
    }

    /// Divide by z^k; the first k coefficients must vanish. Order drops by k.
    pub fn shift_down(&self, k: usize) -> Result<Self, AlgebraError> {
        if self.order < k {
            return Err(AlgebraError::InsufficientOrder {
                need: k,
                have: self.order,
            });
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(AlgebraError::NonExactDivision {
                context: format!("series is not divisible by z^{k}"),
            });
        }
        Ok(TruncSeries {
            order: self.order - k,
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Multiplicative inverse: requires a unit constant term.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let c0 = self
            .coeffs
            .first()
            .ok_or(AlgebraError::NonUnitConstantTerm)?;
        let inv0 = c0.try_inverse().ok_or(AlgebraError::NonUnitConstantTerm)?;
        let order = self.order;
        let mut coeffs = vec![R::zero(); order];
        coeffs[0] = inv0.clone();
        for n in 1..order {
            let mut acc = R::zero();
            for j in 1..=n {
                if !self.coeffs[j].is_zero() && !coeffs[n - j].is_zero() {
                    acc = acc.add(&self.coeffs[j].mul(&coeffs[n - j]));
                }
            }
            coeffs[n] = acc.mul(&inv0).neg();
        }
        Ok(TruncSeries { order, coeffs })
    }

    /// f ∘ g by Horner; g must have zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self, AlgebraError> {
        if g.coeffs.first().map_or(false, |c| !c.is_zero()) {
            return Err(AlgebraError::NonzeroConstantTerm);
        }
        let order = self.order.min(g.order);
        if order == 0 {
            return Ok(TruncSeries::zero(0));
        }
        // f-coefficients at k >= order cannot reach below z^order since g has
        // valuation >= 1, so Horner over k < order is exact.
        let mut acc = TruncSeries::zero(order);
        let g = g.truncate(order);
        for k in (0..self.order.min(order)).rev() {
            acc = acc.mul(&g);
            acc.coeffs[0] = acc.coeffs[0].add(&self.coeffs[k]);
        }
        Ok(acc)
    }

    /// Compositional inverse of f = z·(unit): g with f(g(z)) = z.
    ///
    /// Computed by Lagrange inversion, g_n = (1/n)[u^{n-1}] (u/f(u))^n, with the
    /// powers maintained incrementally; one series product per order.
    pub fn reversion(&self) -> Result<Self, AlgebraError> {
        if self.order < 2
            || !self.coeffs[0].is_zero()
            || self.coeffs[1].try_inverse().is_none()
        {
            return Err(AlgebraError::BadValuation);
        }
        let order = self.order;
        // w = z / f(z), a unit series
        let w = self.shift_down(1)?.inverse()?; // order - 1
        let mut coeffs = vec![R::zero(); order];
        let mut wpow = TruncSeries::<R>::one(order - 1); // w^0
        for n in 1..order {
            wpow = wpow.mul(&w); // w^n, valid to order-1
            coeffs[n] = wpow.coeff(n - 1).div_int(n as i64);
        }
        Ok(TruncSeries { order, coeffs })
    }

    /// f^k by repeated multiplication.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = TruncSeries::one(self.order);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

impl TruncSeries<PolyNu> {
    /// Specialize ν to a rational value, coefficientwise.
    pub fn eval_nu(&self, at: &Rat) -> TruncSeries<Rat> {
        self.map(|p| p.eval(at))
    }

    /// Exact division of every coefficient by ν.
    pub fn div_nu(&self) -> Result<Self, AlgebraError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|p| p.div_nu())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TruncSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Largest ν-degree over all coefficients.
    pub fn nu_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|p| p.degree()).max()
    }
}

impl TruncSeries<Rat> {
    /// Lift a rational series into the PolyNu coefficient ring.
    pub fn lift_nu(&self) -> TruncSeries<PolyNu> {
        self.map(|c| PolyNu::constant(c.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, ratio};

    fn s(v: &[i64]) -> TruncSeries<Rat> {
        TruncSeries::from_coeffs(v.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn mul_examples() {
        // (1+z)(1-z) = 1 - z^2
        assert_eq!(s(&[1, 1, 0]).mul(&s(&[1, -1, 0])), s(&[1, 0, -1]));
        // identity
        let f = s(&[0, 1, 3, 12]);
        assert_eq!(f.mul(&s(&[1, 0, 0, 0])), f);
        // (1 + nu z)^2 = 1 + 2nu z + nu^2 z^2
        let nuz = TruncSeries::<PolyNu>::from_coeffs(vec![
            PolyNu::one(),
            PolyNu::nu(),
            PolyNu::zero(),
        ]);
        let sq = nuz.mul(&nuz);
        assert_eq!(sq.coeff(1), PolyNu::monomial(rat(2), 1));
        assert_eq!(sq.coeff(2), PolyNu::monomial(rat(1), 2));
    }

    #[test]
    fn order_is_min() {
        let a = s(&[1, 2, 3, 4, 5]);
        let b = s(&[1, 1]);
        assert_eq!(a.mul(&b).order(), 2);
        assert_eq!(a.add(&b).order(), 2);
    }

    #[test]
    fn inverse_geometric() {
        // 1/(1-z) = 1 + z + z^2 + ...
        let inv = s(&[1, -1, 0, 0, 0]).inverse().unwrap();
        assert_eq!(inv, s(&[1, 1, 1, 1, 1]));
        assert_eq!(s(&[1, 0, 0]).inverse().unwrap(), s(&[1, 0, 0]));
        assert!(s(&[0, 1]).inverse().is_err());
    }

    #[test]
    fn inverse_param_denominator() {
        // (1 - 2S + 2nu^2 S^3 - nu^2 S^4)^{-1} to order 4 = 1 + 2S + 4S^2 + (8-2nu^2)S^3
        let den = TruncSeries::<PolyNu>::from_coeffs(vec![
            PolyNu::one(),
            PolyNu::constant(rat(-2)),
            PolyNu::zero(),
            PolyNu::monomial(rat(2), 2),
        ]);
        let inv = den.inverse().unwrap();
        assert_eq!(inv.coeff(0), PolyNu::one());
        assert_eq!(inv.coeff(1), PolyNu::constant(rat(2)));
        assert_eq!(inv.coeff(2), PolyNu::constant(rat(4)));
        assert_eq!(
            inv.coeff(3),
            PolyNu::from_coeffs(vec![rat(8), rat(0), rat(-2)])
        );
    }

    #[test]
    fn compose_examples() {
        // f = z^2, g = z + z^2 -> z^2 + 2z^3 + z^4
        let f = s(&[0, 0, 1, 0, 0]);
        let g = s(&[0, 1, 1, 0, 0]);
        assert_eq!(f.compose(&g).unwrap(), s(&[0, 0, 1, 2, 1]));
        // g = z is the identity substitution
        let any = s(&[7, -3, 5, 11]);
        assert_eq!(any.compose(&s(&[0, 1, 0, 0])).unwrap(), any);
        assert!(any.compose(&s(&[1, 1, 0, 0])).is_err());
    }

    #[test]
    fn reversion_catalan() {
        // reversion of z - z^2 = shifted Catalan numbers
        let f = s(&[0, 1, -1, 0, 0, 0]);
        let g = f.reversion().unwrap();
        assert_eq!(g, s(&[0, 1, 1, 2, 5, 14]));
        // reversion of z/(1+z)^2
        let denom = s(&[1, 2, 1, 0, 0]).inverse().unwrap();
        let f2 = denom.shift_up(1).truncate(5);
        let g2 = f2.reversion().unwrap();
        assert_eq!(g2, s(&[0, 1, 2, 5, 14]));
        // identity
        assert_eq!(s(&[0, 1, 0]).reversion().unwrap(), s(&[0, 1, 0]));
        assert!(s(&[0, 0, 1]).reversion().is_err());
    }

    #[test]
    fn shift_contract() {
        let f = s(&[0, 0, 3, 4]);
        assert_eq!(f.shift_down(2).unwrap(), s(&[3, 4]));
        assert!(s(&[1, 2]).shift_down(1).is_err());
        assert_eq!(s(&[3, 4]).shift_up(2).order(), 4);
    }

    #[test]
    fn rational_coeff_ops() {
        let f = TruncSeries::from_coeffs(vec![ratio(1, 2), ratio(-3, 4)]);
        assert_eq!(f.scale(&rat(4)).coeff(1), rat(-3));
    }
}
