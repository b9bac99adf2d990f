//! Dense univariate polynomials over exact rationals, with Jackson
//! q-derivatives in both bases.
//!
//! The q-derivative acts on coefficients:
//!
//! * D_q      (c z^m) = c [m]_q z^(m-1)
//! * D_{1/q}  (c z^m) = c q^(1-m) [m]_q z^(m-1) = c [m]_{1/q} z^(m-1)
//!
//! which agrees with the difference quotient (p(z) - p(qz)) / ((1-q)z) for
//! q < 1 and with the ordinary derivative at q = 1. The coefficient rule is
//! the implementation because it is exact and total; the quotient form is
//! kept in the test suite as an independent oracle.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::qcore::{fmt_rat, QContext, Rat};

/// Strict parity classification of a polynomial's support.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// The zero polynomial (vacuously both).
    Zero,
    /// Only even powers occur.
    Even,
    /// Only odd powers occur.
    Odd,
    /// Both parities occur.
    Mixed,
}

/// Dense polynomial in one variable z. Coefficient k is the z^k coefficient;
/// trailing zeros are always trimmed, so degree reads off the length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// c * z^deg.
    pub fn monomial(deg: usize, c: Rat) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of z^m (zero beyond the degree).
    pub fn coeff(&self, m: usize) -> Rat {
        self.coeffs.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, at: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Value at zero, i.e. the constant coefficient.
    pub fn at_zero(&self) -> Rat {
        self.coeff(0)
    }

    pub fn scalar_mul(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn scalar_div(&self, c: &Rat) -> Poly {
        assert!(!c.is_zero(), "division by zero scalar");
        self.scalar_mul(&c.clone().recip())
    }

    /// Substitute z -> c*z.
    pub fn scale_arg(&self, c: &Rat) -> Poly {
        let mut pow = Rat::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = a * &pow;
                pow *= c;
                out
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Multiply by z^k.
    pub fn mul_monomial(&self, k: usize, c: &Rat) -> Poly {
        if self.is_zero() || c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().map(|a| a * c));
        Poly { coeffs }
    }

    pub fn parity(&self) -> Parity {
        let mut even = false;
        let mut odd = false;
        for (m, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                if m % 2 == 0 {
                    even = true;
                } else {
                    odd = true;
                }
            }
        }
        match (even, odd) {
            (false, false) => Parity::Zero,
            (true, false) => Parity::Even,
            (false, true) => Parity::Odd,
            (true, true) => Parity::Mixed,
        }
    }

    /// Keep only coefficients with the given parity of exponent.
    pub fn parity_project(&self, odd: bool) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, c)| if (m % 2 == 1) == odd { c.clone() } else { Rat::zero() })
            .collect();
        Poly::from_coeffs(coeffs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match m {
                0 => write!(f, "{}", fmt_rat(&a))?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", fmt_rat(&a))?;
                    }
                    if m == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{m}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|m| self.coeff(m) + rhs.coeff(m)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|m| self.coeff(m) - rhs.coeff(m)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Poly { coeffs }
    }
}

/// Jackson q-derivative, coefficient rule c z^m -> c [m]_q z^(m-1).
pub fn dq(ctx: &QContext, p: &Poly) -> Poly {
    let coeffs = p
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(m, c)| c * ctx.q_int(m))
        .collect();
    Poly::from_coeffs(coeffs)
}

/// Inverse-base Jackson derivative, c z^m -> c [m]_{1/q} z^(m-1).
pub fn dq_inv(ctx: &QContext, p: &Poly) -> Poly {
    let coeffs = p
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(m, c)| c * ctx.q_int_inverse_base(m))
        .collect();
    Poly::from_coeffs(coeffs)
}

/// k-fold application of dq or dq_inv.
pub fn dq_iter(ctx: &QContext, p: &Poly, k: usize, inverse_base: bool) -> Poly {
    let mut out = p.clone();
    for _ in 0..k {
        out = if inverse_base { dq_inv(ctx, &out) } else { dq(ctx, &out) };
    }
    out
}

/// Jackson q-integral over [0, 1]: sum of c_m / [m+1]_q.
pub fn q_integral_unit(ctx: &QContext, p: &Poly) -> Rat {
    p.coeffs
        .iter()
        .enumerate()
        .map(|(m, c)| c / ctx.q_int(m + 1))
        .fold(Rat::zero(), |acc, t| acc + t)
}
