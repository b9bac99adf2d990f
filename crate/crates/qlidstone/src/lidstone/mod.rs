//! The four q-Lidstone polynomial families and their representations.
//!
//! A family is a parity (odd or even) crossed with a kind (first or second).
//! Given a seed of rationals s_0, s_2, s_4, ... with s_0 != 0, the degree-n
//! member is, writing [m] for [m]_q and C(n,k) for the Gaussian binomial:
//!
//! * odd first    p_n = sum_k C(2n+1,2k+1) s_{2(n-k)} / [2(n-k)+1] z^(2k+1)
//! * even first   w_n = sum_k C(2n,2k)     s_{2(n-k)}              z^(2k)
//! * odd second   same as odd first with an extra factor q^(k(2k+1))
//! * even second  same as even first with an extra factor q^(k(2k-1))
//!
//! First-kind members satisfy D_q^2 p_n = [2n+1][2n] p_{n-1} (odd) resp.
//! D_q^2 w_n = [2n][2n-1] w_{n-1} (even); second-kind members satisfy the
//! same relations with the inverse-base derivative. The module provides
//! four equivalent constructions (series form, recurrence, determinant,
//! production-matrix recurrence), conjugate seeds, triangular-matrix
//! representations with Toeplitz factorizations, generating-function checks,
//! q-difference equations, and a bridge to q-Appell sequences.

mod appell;
mod build;
mod matrix;
pub(crate) mod verify;

pub use appell::{appell_from_seed, appell_to_lidstone};
pub use build::{
    build_by_determinant, build_by_production, build_by_recurrence1, build_from_seed,
    defining_constant,
};
pub use matrix::{
    bareiss_det, lidstone_matrix, production_closed_form, production_matrix,
    system_inverse_matrix, toeplitz_factorization, toeplitz_inverse_cramer, Production,
    TriMatrix,
};
pub use verify::{
    compare_production_closed_form, gf_check, verify_defining_system, verify_family,
    verify_qdiffeq,
};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qcore::{fmt_rat, QContext, Rat};

/// Parity of a polynomial family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeqParity {
    Odd,
    Even,
}

/// Kind of a polynomial family: first kind differentiates with D_q, second
/// kind with the inverse-base derivative D_{1/q}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeqKind {
    First,
    Second,
}

/// One of the four families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Family {
    pub parity: SeqParity,
    pub kind: SeqKind,
}

pub const ODD_FIRST: Family = Family { parity: SeqParity::Odd, kind: SeqKind::First };
pub const EVEN_FIRST: Family = Family { parity: SeqParity::Even, kind: SeqKind::First };
pub const ODD_SECOND: Family = Family { parity: SeqParity::Odd, kind: SeqKind::Second };
pub const EVEN_SECOND: Family = Family { parity: SeqParity::Even, kind: SeqKind::Second };

pub const ALL_FAMILIES: [Family; 4] = [ODD_FIRST, EVEN_FIRST, ODD_SECOND, EVEN_SECOND];

impl Family {
    /// Stable text code: odd1, even1, odd2, even2.
    pub fn code(&self) -> &'static str {
        match (self.parity, self.kind) {
            (SeqParity::Odd, SeqKind::First) => "odd1",
            (SeqParity::Even, SeqKind::First) => "even1",
            (SeqParity::Odd, SeqKind::Second) => "odd2",
            (SeqParity::Even, SeqKind::Second) => "even2",
        }
    }

    pub fn parse(code: &str) -> Option<Family> {
        ALL_FAMILIES.into_iter().find(|f| f.code() == code)
    }

    pub fn is_odd(&self) -> bool {
        self.parity == SeqParity::Odd
    }

    /// Second-kind families differentiate with the inverse base.
    pub fn inverse_base(&self) -> bool {
        self.kind == SeqKind::Second
    }

    /// Degree of the n-th member: 2n+1 (odd) or 2n (even).
    pub fn degree(&self, n: usize) -> usize {
        if self.is_odd() {
            2 * n + 1
        } else {
            2 * n
        }
    }

    /// Factorial weight of slot j in convolutions and diagonal scalings:
    /// [2j+1]_q! for odd families, [2j]_q! for even ones.
    pub fn weight_factorial(&self, ctx: &QContext, j: usize) -> Rat {
        ctx.q_factorial(self.degree(j))
    }

    /// Exponent of the q-power that second-kind entries carry in column j of
    /// the matrix form: j(2j+1) (odd) or j(2j-1) (even). Zero for first kind.
    pub fn q_exponent(&self, j: usize) -> i64 {
        if self.kind == SeqKind::First {
            return 0;
        }
        let j = j as i64;
        if self.is_odd() {
            j * (2 * j + 1)
        } else {
            j * (2 * j - 1)
        }
    }

    /// Exponent on the leading coefficient of the n-th member (and on the
    /// monomial side of the inverse system): q_exponent of the top column.
    pub fn lead_exponent(&self, n: usize) -> i64 {
        self.q_exponent(n)
    }

    /// Denominator bracket [2(i-j)+1]_q that odd-family matrix entries carry;
    /// even entries carry none.
    fn entry_divisor(&self, ctx: &QContext, gap: usize) -> Rat {
        if self.is_odd() {
            ctx.q_int(2 * gap + 1)
        } else {
            Rat::from_integer(1.into())
        }
    }

    /// Bare convolution weight C(deg i, deg j) values_(i-j) / divisor, with
    /// no q-power. This is what the first recurrence sums against.
    pub fn plain_entry(&self, ctx: &QContext, values: &[Rat], i: usize, j: usize) -> Rat {
        if j > i {
            return Rat::zero();
        }
        let num = ctx.q_binomial(self.degree(i), self.degree(j) as i64) * &values[i - j];
        num / self.entry_divisor(ctx, i - j)
    }

    /// Matrix entry a_ij of the family matrix: the plain entry times the
    /// column power q^(q_exponent(j)) (trivial for first kind).
    pub fn matrix_entry(&self, ctx: &QContext, values: &[Rat], i: usize, j: usize) -> Rat {
        if j > i {
            return Rat::zero();
        }
        self.plain_entry(ctx, values, i, j) * ctx.q_pow(self.q_exponent(j))
    }

    /// Entry m_ij of the inverse of the family matrix, written on the
    /// conjugate seed: the first-kind inverse is the conjugate family matrix
    /// itself; second-kind inverses carry q^(-row exponent) instead of the
    /// column power.
    pub fn inverse_entry(&self, ctx: &QContext, conj_values: &[Rat], i: usize, j: usize) -> Rat {
        if j > i {
            return Rat::zero();
        }
        self.plain_entry(ctx, conj_values, i, j) * ctx.q_pow(-self.q_exponent(i))
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.code())
    }
}

/// A family together with its defining constants s_0, s_2, ..., stored by
/// half-index (values[k] is the constant with subscript 2k). The leading
/// value must be nonzero or no member of the family is well defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    pub family: Family,
    values: Vec<Rat>,
}

impl Seed {
    pub fn new(family: Family, values: Vec<Rat>) -> Result<Self> {
        match values.first() {
            None => Err(Error::SeedTooShort { need: 1, got: 0 }),
            Some(v) if v.is_zero() => Err(Error::ZeroLeadSeed),
            Some(_) => Ok(Seed { family, values }),
        }
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees at least one value
    }

    /// Error unless at least `need` values are present.
    pub fn ensure_len(&self, need: usize) -> Result<()> {
        if self.values.len() < need {
            Err(Error::SeedTooShort { need, got: self.values.len() })
        } else {
            Ok(())
        }
    }

    pub fn render_values(&self) -> String {
        self.values.iter().map(fmt_rat).collect::<Vec<_>>().join(",")
    }
}

/// Conjugate seed by forward substitution on the defining convolution
///
///   sum_j c_j s_(n-j) / (w_j w_(n-j)) = delta_(n,0),  w_j = [2j+1]_q! or [2j]_q!
///
/// so c_0 = 1/s_0 and each c_n peels off the earlier terms. The conjugate of
/// the conjugate is the original seed, and the unit seed is self-conjugate.
pub fn conjugate_seed(ctx: &QContext, seed: &Seed, n_max: usize) -> Result<Seed> {
    seed.ensure_len(n_max + 1)?;
    let s = seed.values();
    let w: Vec<Rat> = (0..=n_max).map(|j| seed.family.weight_factorial(ctx, j)).collect();
    let mut c: Vec<Rat> = Vec::with_capacity(n_max + 1);
    c.push(s[0].clone().recip());
    for n in 1..=n_max {
        let mut acc = Rat::zero();
        for j in 0..n {
            acc += &c[j] * &s[n - j] / (&w[j] * &w[n - j]);
        }
        // c_n s_0 / w_n = -acc
        c.push(-acc * &w[n] / &s[0]);
    }
    Seed::new(seed.family, c)
}

/// Conjugate seed values by explicit determinant formulas: with w_j as above,
///
///   c_n = (-1)^n (w_1 w_2 ... w_n / s_0^(n+1)) det M_n
///
/// where M_n is the n x n band matrix whose first column holds s_(2i+2)/w_(i+1)
/// and whose column j >= 1 holds s_(2(i-j)+2) / (w-factor of the gap) shifted
/// down, each entry weighted by the factorial of its row gap. Agrees with the
/// forward-substitution conjugate for every valid seed.
pub fn conjugate_seed_cramer(ctx: &QContext, seed: &Seed, n_max: usize) -> Result<Seed> {
    seed.ensure_len(n_max + 1)?;
    let s = seed.values();
    let fam = seed.family;
    let mut c: Vec<Rat> = Vec::with_capacity(n_max + 1);
    c.push(s[0].clone().recip());
    for n in 1..=n_max {
        // matrix rows i = 1..=n, cols j = 1..=n (one-based as in the formula)
        let mat: Vec<Vec<Rat>> = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| {
                        if j == 1 {
                            &s[i] / fam.weight_factorial(ctx, i)
                        } else if i + 1 >= j {
                            let gap = i + 1 - j;
                            let col_w = fam.weight_factorial(ctx, j - 1);
                            &s[gap] / (col_w * fam.weight_factorial(ctx, gap))
                        } else {
                            Rat::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let det = bareiss_det(mat);
        let mut pref = Rat::from_integer(if n % 2 == 0 { 1.into() } else { (-1).into() });
        for j in 1..=n {
            pref *= fam.weight_factorial(ctx, j);
        }
        pref /= s[0].pow(n as i32 + 1);
        c.push(pref * det);
    }
    Seed::new(seed.family, c)
}
