//! Sparse polynomials in the catalytic variables x, y and the marker ν.
//!
//! Storage groups the ν-direction densely (a `PolyNu` per (x,y) key) because
//! the solver's inner loops convolve ν-polynomials; the public view is the
//! sparse (x_pow, y_pow, nu_pow) -> coefficient map with no explicit zeros.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::poly::PolyNu;
use super::rational::Rat;
use super::series::Ring;

#[derive(Clone, PartialEq, Debug, Default)]
pub struct CatalyticPoly {
    terms: BTreeMap<(u32, u32), PolyNu>,
}

impl CatalyticPoly {
    pub fn zero() -> Self {
        CatalyticPoly::default()
    }

    pub fn one() -> Self {
        CatalyticPoly::from_nu_poly(0, 0, PolyNu::one())
    }

    pub fn constant(c: Rat) -> Self {
        CatalyticPoly::from_nu_poly(0, 0, PolyNu::constant(c))
    }

    /// c · x^a y^b ν^k
    pub fn monomial(c: Rat, a: u32, b: u32, k: usize) -> Self {
        CatalyticPoly::from_nu_poly(a, b, PolyNu::monomial(c, k))
    }

    pub fn from_nu_poly(a: u32, b: u32, p: PolyNu) -> Self {
        let mut terms = BTreeMap::new();
        if !p.is_zero() {
            terms.insert((a, b), p);
        }
        CatalyticPoly { terms }
    }

    /// Sparse trivariate view: ((x_pow, y_pow, nu_pow), coefficient).
    pub fn iter_terms(&self) -> impl Iterator<Item = ((u32, u32, u32), Rat)> + '_ {
        self.terms.iter().flat_map(|(&(a, b), p)| {
            p.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(k, c)| ((a, b, k as u32), c.clone()))
        })
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32, u32), Rat)>) -> Self {
        let mut out = CatalyticPoly::zero();
        for ((a, b, k), c) in terms {
            out.add_assign_nu(a, b, &PolyNu::monomial(c, k as usize));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn x_degree(&self) -> u32 {
        self.terms.keys().map(|&(a, _)| a).max().unwrap_or(0)
    }

    pub fn y_degree(&self) -> u32 {
        self.terms.keys().map(|&(_, b)| b).max().unwrap_or(0)
    }

    pub fn nu_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(|p| p.degree()).max()
    }

    fn add_assign_nu(&mut self, a: u32, b: u32, p: &PolyNu) {
        if p.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_insert_with(PolyNu::zero);
        *entry = entry.add(p);
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), p) in &other.terms {
            out.add_assign_nu(a, b, p);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CatalyticPoly {
            terms: self.terms.iter().map(|(&k, p)| (k, p.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = CatalyticPoly::zero();
        for (&(a1, b1), p) in &self.terms {
            for (&(a2, b2), q) in &other.terms {
                out.add_assign_nu(a1 + a2, b1 + b2, &p.mul(q));
            }
        }
        out
    }

    /// Multiply by x^da y^db.
    pub fn shift_xy(&self, da: u32, db: u32) -> Self {
        CatalyticPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), p)| ((a + da, b + db), p.clone()))
                .collect(),
        }
    }

    /// Multiply every coefficient by a ν-polynomial.
    pub fn scale_nu(&self, q: &PolyNu) -> Self {
        if q.is_zero() {
            return CatalyticPoly::zero();
        }
        CatalyticPoly {
            terms: self.terms.iter().map(|(&k, p)| (k, p.mul(q))).collect(),
        }
    }

    /// Set x = 1 (collapse onto the y-axis).
    pub fn slice_x1(&self) -> Self {
        let mut out = CatalyticPoly::zero();
        for (&(_, b), p) in &self.terms {
            out.add_assign_nu(0, b, p);
        }
        out
    }

    /// Set y = 1 (collapse onto the x-axis).
    pub fn slice_y1(&self) -> Self {
        let mut out = CatalyticPoly::zero();
        for (&(a, _), p) in &self.terms {
            out.add_assign_nu(a, 0, p);
        }
        out
    }

    /// Evaluate at x = y = 1.
    pub fn eval_xy1(&self) -> PolyNu {
        let mut acc = PolyNu::zero();
        for p in self.terms.values() {
            acc = acc.add(p);
        }
        acc
    }

    /// d/dx at x = y = 1: sum of a · p over terms.
    pub fn dx_at_xy1(&self) -> PolyNu {
        let mut acc = PolyNu::zero();
        for (&(a, _), p) in &self.terms {
            if a > 0 {
                acc = acc.add(&p.scale(&super::rational::rat(a as i64)));
            }
        }
        acc
    }

    /// d/dy at x = y = 1.
    pub fn dy_at_xy1(&self) -> PolyNu {
        let mut acc = PolyNu::zero();
        for (&(_, b), p) in &self.terms {
            if b > 0 {
                acc = acc.add(&p.scale(&super::rational::rat(b as i64)));
            }
        }
        acc
    }

    /// (x·P − P(1,y)) / (x − 1), exact synthetic division in x.
    pub fn divided_difference_x(&self) -> Self {
        // per y-column: numerator coefficients N_a, quotient Q_{a-1} = sum_{a' >= a} N_{a'}
        let mut cols: BTreeMap<u32, BTreeMap<u32, PolyNu>> = BTreeMap::new();
        for (&(a, b), p) in &self.terms {
            let col = cols.entry(b).or_default();
            // x·P contributes at a+1
            let e = col.entry(a + 1).or_insert_with(PolyNu::zero);
            *e = e.add(p);
            // −P(1,y) contributes at 0
            let e0 = col.entry(0).or_insert_with(PolyNu::zero);
            *e0 = e0.sub(p);
        }
        let mut out = CatalyticPoly::zero();
        for (b, col) in cols {
            let top = *col.keys().next_back().unwrap();
            let mut run = PolyNu::zero();
            for a in (1..=top).rev() {
                if let Some(p) = col.get(&a) {
                    run = run.add(p);
                }
                out.add_assign_nu(a - 1, b, &run);
            }
            // remainder is N(1) = 0 by construction
        }
        out
    }

    /// (y·P − P(x,1)) / (y − 1), exact synthetic division in y.
    pub fn divided_difference_y(&self) -> Self {
        let mut cols: BTreeMap<u32, BTreeMap<u32, PolyNu>> = BTreeMap::new();
        for (&(a, b), p) in &self.terms {
            let col = cols.entry(a).or_default();
            let e = col.entry(b + 1).or_insert_with(PolyNu::zero);
            *e = e.add(p);
            let e0 = col.entry(0).or_insert_with(PolyNu::zero);
            *e0 = e0.sub(p);
        }
        let mut out = CatalyticPoly::zero();
        for (a, col) in cols {
            let top = *col.keys().next_back().unwrap();
            let mut run = PolyNu::zero();
            for b in (1..=top).rev() {
                if let Some(p) = col.get(&b) {
                    run = run.add(p);
                }
                out.add_assign_nu(a, b - 1, &run);
            }
        }
        out
    }

    /// Specialize ν, keeping x and y.
    pub fn eval_nu(&self, at: &Rat) -> Self {
        let mut out = CatalyticPoly::zero();
        for (&(a, b), p) in &self.terms {
            out.add_assign_nu(a, b, &PolyNu::constant(p.eval(at)));
        }
        out
    }
}

impl Ring for CatalyticPoly {
    fn zero() -> Self {
        CatalyticPoly::zero()
    }
    fn one() -> Self {
        CatalyticPoly::one()
    }
    fn is_zero(&self) -> bool {
        CatalyticPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        CatalyticPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        CatalyticPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        CatalyticPoly::mul(self, other)
    }
    fn neg(&self) -> Self {
        CatalyticPoly::neg(self)
    }
    fn from_int(n: i64) -> Self {
        CatalyticPoly::constant(super::rational::rat(n))
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.terms.len() == 1 {
            if let Some(p) = self.terms.get(&(0, 0)) {
                return p.try_inverse().map(|q| CatalyticPoly::from_nu_poly(0, 0, q));
            }
        }
        None
    }
    fn div_int(&self, n: i64) -> Self {
        let inv = super::rational::rat(n).recip();
        CatalyticPoly {
            terms: self.terms.iter().map(|(&k, p)| (k, p.scale(&inv))).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn divided_difference_x_examples() {
        // P = x^2 (constant in y, nu): (x·x^2 − 1)/(x−1) = x^2 + x + 1
        let p = CatalyticPoly::monomial(rat(1), 2, 0, 0);
        let dd = p.divided_difference_x();
        let want = CatalyticPoly::from_terms(vec![
            ((0, 0, 0), rat(1)),
            ((1, 0, 0), rat(1)),
            ((2, 0, 0), rat(1)),
        ]);
        assert_eq!(dd, want);
    }

    #[test]
    fn divided_difference_identity() {
        // dd_y(P)·(y−1) = y·P − P(x,1)
        let p = CatalyticPoly::from_terms(vec![
            ((1, 2, 0), rat(3)),
            ((0, 1, 1), rat(-2)),
            ((2, 0, 2), rat(5)),
        ]);
        let dd = p.divided_difference_y();
        let y = CatalyticPoly::monomial(rat(1), 0, 1, 0);
        let lhs = dd.mul(&y.sub(&CatalyticPoly::one()));
        let rhs = y.mul(&p).sub(&p.slice_y1());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn slices_and_derivs() {
        // P = x y^2 (1+nu) + x^2 y nu  (the one-edge maps)
        let p = CatalyticPoly::from_terms(vec![
            ((1, 2, 0), rat(1)),
            ((1, 2, 1), rat(1)),
            ((2, 1, 1), rat(1)),
        ]);
        assert_eq!(
            p.eval_xy1(),
            PolyNu::from_coeffs(vec![rat(1), rat(2)])
        );
        assert_eq!(
            p.dy_at_xy1(),
            PolyNu::from_coeffs(vec![rat(2), rat(3)])
        );
        assert_eq!(p.x_degree(), 2);
        assert_eq!(p.y_degree(), 2);
        assert_eq!(p.nu_degree(), Some(1));
    }

    #[test]
    fn trivariate_roundtrip() {
        let terms = vec![((0, 0, 0), rat(2)), ((3, 1, 2), rat(-7))];
        let p = CatalyticPoly::from_terms(terms.clone());
        let got: Vec<_> = p.iter_terms().collect();
        assert_eq!(got, terms);
    }
}
