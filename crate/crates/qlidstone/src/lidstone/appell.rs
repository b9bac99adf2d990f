//! q-Appell sequences and the halving bridge into the four families.
//!
//! A kind-I q-Appell sequence comes from A(t) e_q(zt) with A(0) != 0 and
//! obeys D_q a_n = [n]_q a_(n-1); kind II comes from A(t) E_q(zt) and obeys
//! the inverse-base ladder. Closed forms on the constants a_k(0):
//!
//! * kind I   a_n(z) = sum_k C(n,k) a_(n-k)(0) z^k
//! * kind II  a_n(z) = sum_k C(n,k) q^(k(k-1)/2) a_(n-k)(0) z^k
//!
//! When all odd-indexed members vanish at zero, halving the index and
//! doubling the variable produces family members: 2^(2n+1) a_(2n+1)(z/2) is
//! an odd sequence and 2^(2n) a_(2n)(z/2) an even one, landing in the first
//! or second kind according to the Appell kind of the input.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qcore::{fmt_rat, QContext, Rat};
use crate::qpoly::Poly;
use crate::qseries::ExpKind;

use super::SeqParity;

/// Build q-Appell members 0..=n_max from the constants a_k(0).
pub fn appell_from_seed(
    ctx: &QContext,
    kind: ExpKind,
    values: &[Rat],
    n_max: usize,
) -> Result<Vec<Poly>> {
    if values.len() < n_max + 1 {
        return Err(Error::SeedTooShort { need: n_max + 1, got: values.len() });
    }
    if values[0].is_zero() {
        return Err(Error::ZeroLeadSeed);
    }
    let polys = (0..=n_max)
        .map(|n| {
            let coeffs = (0..=n)
                .map(|k| {
                    let mut c = ctx.q_binomial(n, k as i64) * &values[n - k];
                    if kind == ExpKind::BigE {
                        c *= ctx.q_pow((k as i64) * (k as i64 - 1) / 2);
                    }
                    c
                })
                .collect();
            Poly::from_coeffs(coeffs)
        })
        .collect();
    Ok(polys)
}

/// Halve indices and double the variable: from q-Appell members whose
/// odd-indexed members vanish at zero, produce family members 0..=n_max of
/// the requested parity. Errors with the offending index when the
/// odd-vanishing precondition fails.
pub fn appell_to_lidstone(
    ctx: &QContext,
    parity: SeqParity,
    polys: &[Poly],
    n_max: usize,
) -> Result<Vec<Poly>> {
    let _ = ctx; // mapping is base-independent; kept for signature uniformity
    let need = match parity {
        SeqParity::Odd => 2 * n_max + 2,
        SeqParity::Even => 2 * n_max + 1,
    };
    if polys.len() < need {
        return Err(Error::SeedTooShort { need, got: polys.len() });
    }
    for (idx, p) in polys.iter().enumerate().take(need) {
        if idx % 2 == 1 && !p.at_zero().is_zero() {
            return Err(Error::PreconditionFailed(format!(
                "odd-indexed member {idx} has value {} at zero, must vanish",
                fmt_rat(&p.at_zero())
            )));
        }
    }
    let half = Rat::new(BigInt::from(1), BigInt::from(2));
    let out = (0..=n_max)
        .map(|n| {
            let (idx, exp) = match parity {
                SeqParity::Odd => (2 * n + 1, 2 * n + 1),
                SeqParity::Even => (2 * n, 2 * n),
            };
            let scale = Rat::from_integer(BigInt::from(1) << exp);
            polys[idx].scale_arg(&half).scalar_mul(&scale)
        })
        .collect();
    Ok(out)
}
