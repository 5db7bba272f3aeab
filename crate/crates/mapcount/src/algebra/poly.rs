//! Dense univariate polynomials over exact rationals.
//!
//! `PolyNu` is the workhorse coefficient type for bicoloured series: a
//! polynomial in the monochromatic-edge marker ν. (The same dense structure
//! doubles as "polynomial in z" for algebraic curves and as "polynomial in a
//! catalytic variable" inside the one-variable catalytic solver; only the
//! interpretation of the variable changes.)
//!
//! Invariants:
//! - `coeffs` has no trailing zeros
//! - the zero polynomial is the empty vector; its degree is `None`

use std::fmt;

use num_traits::{One, Zero};

use super::error::AlgebraError;
use super::rational::{fmt_rat, Rat};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolyNu {
    coeffs: Vec<Rat>,
}

impl PolyNu {
    pub fn zero() -> Self {
        PolyNu { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyNu::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = PolyNu { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The monomial c·ν^k.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return PolyNu::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        PolyNu { coeffs }
    }

    /// ν itself.
    pub fn nu() -> Self {
        PolyNu::monomial(Rat::one(), 1)
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = PolyNu { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial (the -inf sentinel).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeff(i);
            if let Some(o) = other.coeffs.get(i) {
                c += o;
            }
            coeffs.push(c);
        }
        PolyNu::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        PolyNu {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return PolyNu::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        PolyNu::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return PolyNu::zero();
        }
        PolyNu {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, at: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Exact division by ν. Errors if the constant coefficient is nonzero.
    pub fn div_nu(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Ok(PolyNu::zero());
        }
        if !self.coeffs[0].is_zero() {
            return Err(AlgebraError::NonExactDivision {
                context: "constant-in-ν coefficient is nonzero in division by ν".into(),
            });
        }
        Ok(PolyNu {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// (f(ν) − f(p)) / (ν − p) by synthetic division; always exact.
    pub fn divided_difference(&self, p: &Rat) -> Self {
        if self.coeffs.len() <= 1 {
            return PolyNu::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() - 1];
        let mut run = Rat::zero();
        for k in (1..self.coeffs.len()).rev() {
            run = run * p + &self.coeffs[k];
            out[k - 1] = run.clone();
        }
        PolyNu::from_coeffs(out)
    }

    /// Exact division by (ν − p); errors unless p is a root.
    pub fn div_exact_linear(&self, p: &Rat) -> Result<Self, AlgebraError> {
        if !self.eval(p).is_zero() {
            return Err(AlgebraError::NonExactDivision {
                context: format!("{} is not a root in exact linear division", fmt_rat(p)),
            });
        }
        Ok(self.divided_difference(p))
    }

    /// Derivative with respect to ν.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return PolyNu::zero();
        }
        PolyNu::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rat::from_integer((i as i64 + 1).into()))
                .collect(),
        )
    }

    /// Content: gcd of numerators over lcm of denominators, with the sign of
    /// the leading coefficient. Zero polynomial has content 0.
    pub fn content(&self) -> Rat {
        use num_integer::Integer;
        if self.is_zero() {
            return Rat::zero();
        }
        let mut num = num_bigint::BigInt::from(0);
        let mut den = num_bigint::BigInt::from(1);
        for c in &self.coeffs {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        let mut content = Rat::new(num, den);
        if self.leading().map_or(false, |l| l < &Rat::zero()) {
            content = -content;
        }
        content
    }

    /// Self divided by its content (primitive part, positive leading coefficient).
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return PolyNu::zero();
        }
        let c = self.content();
        PolyNu {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }
}

impl fmt::Debug for PolyNu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", fmt_rat(c))?,
                1 => write!(f, "{}*nu", fmt_rat(c))?,
                _ => write!(f, "{}*nu^{}", fmt_rat(c), k)?,
            }
        }
        Ok(())
    }
}
