//! Truncated formal power series in t with polynomial coefficients in z.
//!
//! A series stores coefficients for t^0 .. t^order exactly; arithmetic never
//! claims accuracy beyond the smaller operand order. Division happens only
//! through [`TruncSeries::reciprocal`] (constant term must be a nonzero
//! scalar) or after an explicit [`TruncSeries::shift_down`] normalization, so
//! a zero constant term is always a visible, typed event rather than a
//! silent loss of terms.
//!
//! Kernels, for a polynomial argument u (the series variable is t):
//!
//! * small q-exponential  e_q(ut) = sum u^j t^j / [j]_q!
//! * big q-exponential    E_q(ut) = sum q^(j(j-1)/2) u^j t^j / [j]_q!
//! * sinh/cosh/sin/cos/tan built from e_q; Sinh/Cosh built from E_q, where
//!   Sinh_q(ut) = sum q^(n(2n+1)) (ut)^(2n+1) / [2n+1]_q! and
//!   Cosh_q(ut) = sum q^(n(2n-1)) (ut)^(2n)   / [2n]_q!
//! * t_coth: t * coth_q(ut) = cosh_q(ut) / (sinh_q(ut)/t), an even series
//!   with constant term 1/u; tanh_q likewise via the shifted quotient.
//!
//! The identities e_q(x)E_q(-x) = e_q(-x)E_q(x) = 1 make the tan/tanh/coth
//! kernels base-independent; only the small-e forms are ever expanded.

use num_traits::One;

use crate::error::{Error, Result};
use crate::qcore::{QContext, Rat};
use crate::qpoly::Poly;

/// Which q-exponential.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpKind {
    /// e_q, plain 1/[j]_q! weights.
    SmallE,
    /// E_q, extra q^(j(j-1)/2) weight.
    BigE,
}

/// Which q-trigonometric / q-hyperbolic kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HyperKind {
    Sinh,
    Cosh,
    /// Sinh built on E_q weights.
    BigSinh,
    /// Cosh built on E_q weights.
    BigCosh,
    Sin,
    Cos,
    Tan,
    /// t * coth_q(ut), even, needs invertible u.
    TCoth,
    Tanh,
}

/// Formal power series in t truncated at a fixed order, coefficients in z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Poly>, // index k holds the t^k coefficient; len = order + 1
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries { coeffs: vec![Poly::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        s.coeffs[0] = Poly::one();
        s
    }

    /// Build from explicit coefficients; the order is len - 1.
    pub fn from_polys(coeffs: Vec<Poly>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the t^0 coefficient");
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Poly {
        &self.coeffs[k]
    }

    pub fn set_coeff(&mut self, k: usize, p: Poly) {
        self.coeffs[k] = p;
    }

    /// Truncate (or zero-extend) to the given order.
    pub fn truncated(&self, order: usize) -> TruncSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Poly::zero());
        TruncSeries { coeffs }
    }

    pub fn add(&self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect();
        TruncSeries { coeffs }
    }

    pub fn sub(&self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect();
        TruncSeries { coeffs }
    }

    pub fn scalar_mul(&self, c: &Rat) -> TruncSeries {
        TruncSeries { coeffs: self.coeffs.iter().map(|p| p.scalar_mul(c)).collect() }
    }

    /// Cauchy product truncated to the smaller operand order.
    pub fn mul(&self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Poly::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if !rhs.coeffs[j].is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
                }
            }
        }
        TruncSeries { coeffs }
    }

    /// Multiplicative inverse at the same order. The constant term must be a
    /// nonzero scalar (degree-zero polynomial).
    pub fn reciprocal(&self) -> Result<TruncSeries> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() || a0.degree() != Some(0) {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = a0.coeff(0).recip();
        let order = self.order();
        let mut out = vec![Poly::zero(); order + 1];
        out[0] = Poly::constant(inv0.clone());
        for k in 1..=order {
            let mut acc = Poly::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() && !out[k - j].is_zero() {
                    acc = &acc + &(&self.coeffs[j] * &out[k - j]);
                }
            }
            out[k] = acc.scalar_mul(&-inv0.clone());
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Divide by t^k. The coefficients below t^k must vanish; the order drops
    /// by k since nothing is known about the shifted-in tail.
    pub fn shift_down(&self, k: usize) -> Result<TruncSeries> {
        assert!(k <= self.order(), "shift exceeds series order");
        for (i, c) in self.coeffs[..k].iter().enumerate() {
            if !c.is_zero() {
                return Err(Error::ShiftUnderflow { shift: k, index: i });
            }
        }
        Ok(TruncSeries { coeffs: self.coeffs[k..].to_vec() })
    }

    /// Multiply by t^k; exact, so the order grows by k.
    pub fn shift_up(&self, k: usize) -> TruncSeries {
        let mut coeffs = vec![Poly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TruncSeries { coeffs }
    }

    /// Keep only coefficients of t^k with the given exponent parity.
    pub fn parity_project(&self, odd: bool) -> TruncSeries {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if (k % 2 == 1) == odd { c.clone() } else { Poly::zero() })
            .collect();
        TruncSeries { coeffs }
    }
}

/// q-exponential series e_q(ut) or E_q(ut) to the given order.
pub fn q_exp_series(ctx: &QContext, kind: ExpKind, u: &Poly, order: usize) -> TruncSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut upow = Poly::one();
    for j in 0..=order {
        if j > 0 {
            upow = &upow * u;
        }
        let mut w = ctx.q_factorial(j).recip();
        if kind == ExpKind::BigE {
            w *= ctx.q_pow((j as i64) * (j as i64 - 1) / 2);
        }
        coeffs.push(upow.scalar_mul(&w));
    }
    TruncSeries::from_polys(coeffs)
}

fn parity_kernel(
    ctx: &QContext,
    u: &Poly,
    order: usize,
    odd: bool,
    weight: impl Fn(&QContext, usize) -> Rat,
) -> TruncSeries {
    let mut s = TruncSeries::zero(order);
    let mut upow = Poly::one();
    for j in 0..=order {
        if j > 0 {
            upow = &upow * u;
        }
        if (j % 2 == 1) == odd {
            let w = weight(ctx, j) / ctx.q_factorial(j);
            s.set_coeff(j, upow.scalar_mul(&w));
        }
    }
    s
}

/// q-trigonometric and q-hyperbolic kernels.
///
/// Quotient kinds (tan, t_coth, tanh) require the relevant divisor to be
/// invertible: the constant term after shift normalization must be a nonzero
/// scalar, which for t_coth means u itself must be a nonzero constant.
pub fn q_hyper_series(
    ctx: &QContext,
    kind: HyperKind,
    u: &Poly,
    order: usize,
) -> Result<TruncSeries> {
    let plain = |_: &QContext, _: usize| Rat::one();
    let big = |c: &QContext, j: usize| c.q_pow((j as i64) * (j as i64 - 1) / 2);
    let alt = |_: &QContext, j: usize| {
        if (j / 2) % 2 == 1 {
            -Rat::one()
        } else {
            Rat::one()
        }
    };
    match kind {
        HyperKind::Sinh => Ok(parity_kernel(ctx, u, order, true, plain)),
        HyperKind::Cosh => Ok(parity_kernel(ctx, u, order, false, plain)),
        HyperKind::BigSinh => Ok(parity_kernel(ctx, u, order, true, big)),
        HyperKind::BigCosh => Ok(parity_kernel(ctx, u, order, false, big)),
        HyperKind::Sin => Ok(parity_kernel(ctx, u, order, true, alt)),
        HyperKind::Cos => Ok(parity_kernel(ctx, u, order, false, alt)),
        HyperKind::Tan => {
            // tan = (sin/t) / cos * t
            let sin = q_hyper_series(ctx, HyperKind::Sin, u, order)?;
            let cos = q_hyper_series(ctx, HyperKind::Cos, u, order.saturating_sub(1))?;
            let shifted = sin.shift_down(1)?;
            Ok(shifted.mul(&cos.reciprocal()?).shift_up(1))
        }
        HyperKind::Tanh => {
            let sinh = q_hyper_series(ctx, HyperKind::Sinh, u, order)?;
            let cosh = q_hyper_series(ctx, HyperKind::Cosh, u, order.saturating_sub(1))?;
            let shifted = sinh.shift_down(1)?;
            Ok(shifted.mul(&cosh.reciprocal()?).shift_up(1))
        }
        HyperKind::TCoth => {
            // t*coth_q(ut) = cosh(ut) / (sinh(ut)/t); constant term is 1/u
            let sinh = q_hyper_series(ctx, HyperKind::Sinh, u, order + 1)?;
            let cosh = q_hyper_series(ctx, HyperKind::Cosh, u, order)?;
            let shifted = sinh.shift_down(1)?;
            Ok(cosh.mul(&shifted.reciprocal()?))
        }
    }
}
