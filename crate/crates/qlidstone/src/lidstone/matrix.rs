//! Matrix representations: lower-triangular family matrices, their inverses,
//! Toeplitz factorizations, and lower-Hessenberg production matrices.
//!
//! With Z the column of monomials (z, z^3, z^5, ... for odd families, 1, z^2,
//! z^4, ... for even ones) and P the column of family members, the family
//! matrix A satisfies P = A Z. It factors as A = D T D^(-1) where D is the
//! diagonal of factorial weights and T is lower-triangular Toeplitz for
//! first-kind families; second-kind T carries an extra q-power per column.
//! The production matrix Pi = A S A^(-1) (S the upper shift) is lower
//! Hessenberg and rules the step recurrence p_(n+1) in terms of p_0 .. p_n.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qcore::{QContext, Rat};

use super::{Seed, SeqKind};

/// Lower-triangular matrix with exact rational entries. Row i stores columns
/// 0..=i; everything above the diagonal is identically zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriMatrix {
    rows: Vec<Vec<Rat>>,
}

impl TriMatrix {
    /// Build from an entry function over the lower triangle.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let rows = (0..dim).map(|i| (0..=i).map(|j| f(i, j)).collect()).collect();
        TriMatrix { rows }
    }

    pub fn identity(dim: usize) -> Self {
        TriMatrix::from_fn(dim, |i, j| if i == j { Rat::one() } else { Rat::zero() })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Entry (i, j); zero above the diagonal.
    pub fn get(&self, i: usize, j: usize) -> Rat {
        if j > i {
            Rat::zero()
        } else {
            self.rows[i][j].clone()
        }
    }

    pub fn mul(&self, rhs: &TriMatrix) -> TriMatrix {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        TriMatrix::from_fn(self.dim(), |i, j| {
            let mut acc = Rat::zero();
            for k in j..=i {
                acc += &self.rows[i][k] * &rhs.rows[k][j];
            }
            acc
        })
    }

    /// Inverse by forward substitution; every diagonal entry must be nonzero.
    pub fn inverse(&self) -> Result<TriMatrix> {
        let dim = self.dim();
        for i in 0..dim {
            if self.rows[i][i].is_zero() {
                return Err(Error::PreconditionFailed(format!(
                    "triangular matrix has zero diagonal entry at row {i}"
                )));
            }
        }
        let mut inv: Vec<Vec<Rat>> = (0..dim).map(|i| vec![Rat::zero(); i + 1]).collect();
        for j in 0..dim {
            inv[j][j] = self.rows[j][j].clone().recip();
            for i in (j + 1)..dim {
                let mut acc = Rat::zero();
                for k in j..i {
                    acc += &self.rows[i][k] * &inv[k][j];
                }
                inv[i][j] = -acc / &self.rows[i][i];
            }
        }
        Ok(TriMatrix { rows: inv })
    }

    /// True when entry (i, j) depends only on i - j.
    pub fn is_toeplitz(&self) -> bool {
        let dim = self.dim();
        for i in 1..dim {
            for j in 1..=i {
                if self.rows[i][j] != self.rows[i - 1][j - 1] {
                    return false;
                }
            }
        }
        true
    }

    /// Product of diagonal entries, i.e. the determinant.
    pub fn det(&self) -> Rat {
        self.rows.iter().enumerate().map(|(i, r)| &r[i]).product()
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }
}

/// Determinant by fraction-free (Bareiss) elimination. Exact over rationals;
/// the final pivot is the determinant.
pub fn bareiss_det(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    if n == 0 {
        return Rat::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    let mut sign = Rat::one();
    let mut prev = Rat::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            // pivot swap keeps the elimination defined
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Rat::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = Rat::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Family matrix A with P = A Z, dimension n+1. Needs seed values 0..=n.
pub fn lidstone_matrix(ctx: &QContext, seed: &Seed, n: usize) -> Result<TriMatrix> {
    seed.ensure_len(n + 1)?;
    Ok(TriMatrix::from_fn(n + 1, |i, j| seed.family.matrix_entry(ctx, seed.values(), i, j)))
}

/// Inverse of the family matrix, written directly on the conjugate seed.
///
/// For first-kind families this is the conjugate family's own matrix; for
/// second-kind families the q-powers move from columns to inverse row
/// scalings q^(-i(2i+1)) resp. q^(-i(2i-1)).
pub fn system_inverse_matrix(ctx: &QContext, conj: &Seed, n: usize) -> Result<TriMatrix> {
    conj.ensure_len(n + 1)?;
    Ok(TriMatrix::from_fn(n + 1, |i, j| conj.family.inverse_entry(ctx, conj.values(), i, j)))
}

/// Factor the family matrix as A = D T D^(-1): D the diagonal of [2i+1]_q!
/// resp. [2i]_q!, T Toeplitz with t_(i-j) = seed_(i-j) / w_(i-j) for first
/// kind; second-kind T picks up the column power q^(j(2j+1)) resp.
/// q^(j(2j-1)) and is then only column-scaled Toeplitz. The triple product
/// equals [`lidstone_matrix`] exactly.
pub fn toeplitz_factorization(
    ctx: &QContext,
    seed: &Seed,
    n: usize,
) -> Result<(TriMatrix, TriMatrix, TriMatrix)> {
    seed.ensure_len(n + 1)?;
    let fam = seed.family;
    let d = TriMatrix::from_fn(n + 1, |i, j| {
        if i == j {
            fam.weight_factorial(ctx, i)
        } else {
            Rat::zero()
        }
    });
    let d_inv = TriMatrix::from_fn(n + 1, |i, j| {
        if i == j {
            fam.weight_factorial(ctx, i).recip()
        } else {
            Rat::zero()
        }
    });
    let t = TriMatrix::from_fn(n + 1, |i, j| {
        &seed.values()[i - j] * ctx.q_pow(fam.q_exponent(j)) / fam.weight_factorial(ctx, i - j)
    });
    Ok((d, t, d_inv))
}

/// Invert a lower-triangular Toeplitz matrix through the band-determinant
/// formula: with first column a_0, a_1, ..., the inverse is Toeplitz with
///
///   b_0 = 1/a_0,   b_m = (-1)^m / a_0^(m+1) * det H_m,
///
/// H_m the m x m band matrix (H_m)_(i,j) = a_(i-j+1) (zero for negative
/// index). Errors on non-Toeplitz input or zero a_0.
pub fn toeplitz_inverse_cramer(t: &TriMatrix) -> Result<TriMatrix> {
    if !t.is_toeplitz() {
        return Err(Error::NotToeplitz);
    }
    let dim = t.dim();
    let a: Vec<Rat> = (0..dim).map(|m| t.get(m, 0)).collect();
    if a[0].is_zero() {
        return Err(Error::SingularToeplitz);
    }
    let mut b: Vec<Rat> = Vec::with_capacity(dim);
    b.push(a[0].clone().recip());
    for m in 1..dim {
        let h: Vec<Vec<Rat>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        if i + 1 >= j {
                            a.get(i + 1 - j).cloned().unwrap_or_else(Rat::zero)
                        } else {
                            Rat::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let det = bareiss_det(h);
        let sign = if m % 2 == 0 { Rat::one() } else { -Rat::one() };
        b.push(sign * det / a[0].pow(m as i32 + 1));
    }
    Ok(TriMatrix::from_fn(dim, |i, j| b[i - j].clone()))
}

/// Lower-Hessenberg matrix: row i stores columns 0..=i+1, so exactly one
/// band above the diagonal may be nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Production {
    rows: Vec<Vec<Rat>>,
}

impl Production {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Entry (i, j); zero beyond the superdiagonal.
    pub fn get(&self, i: usize, j: usize) -> Rat {
        if j > i + 1 {
            Rat::zero()
        } else {
            self.rows[i][j].clone()
        }
    }

    pub fn superdiagonal(&self, i: usize) -> Rat {
        self.rows[i][i + 1].clone()
    }
}

/// Production matrix Pi = A S A^(-1) with S the upper shift (S Z = z^2 Z).
///
/// Computed on (n+2)-sized truncations and cropped to rows 0..=n, so every
/// returned entry is exact. Satisfies Pi P = z^2 P row by row and drives the
/// step recurrence; a zero superdiagonal entry would make that recurrence
/// degenerate and is reported as an error.
pub fn production_matrix(ctx: &QContext, seed: &Seed, n: usize) -> Result<Production> {
    seed.ensure_len(n + 2)?;
    let a = lidstone_matrix(ctx, seed, n + 1)?;
    let b = a.inverse()?;
    // (A S)_(i,m) = a_(i,m-1), so Pi_(i,j) = sum_m a_(i,m) b_(m+1,j)
    let rows: Vec<Vec<Rat>> = (0..=n)
        .map(|i| {
            (0..=(i + 1))
                .map(|j| {
                    let mut acc = Rat::zero();
                    for m in j.saturating_sub(1)..=i {
                        acc += a.get(i, m) * b.get(m + 1, j);
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let pi = Production { rows };
    for i in 0..=n {
        if pi.rows[i][i + 1].is_zero() {
            return Err(Error::DegenerateProduction { row: i, col: i + 1 });
        }
    }
    Ok(pi)
}

/// Closed-form production entry, where one is available:
///
/// * odd first:  sum over m of C(2i+1, 2(m+j)-1) c_m s_(i-j-m+1)
///   [2(m+j)+1]_q! / ([2(i-j-m)+3]_q [2j+1]_q! [2m+1]_q!)
/// * odd second: the same skeleton times q^(1-4(m+j))
/// * even first: sum over m of C(2i, 2m) C(2(m+1), 2j) s_(i-m) c_(m-j+1)
/// * even second: none known; returns None
///
/// with s the seed, c its conjugate. Agrees entry by entry with
/// [`production_matrix`].
pub fn production_closed_form(
    ctx: &QContext,
    seed: &Seed,
    conj: &Seed,
    i: usize,
    j: usize,
) -> Option<Rat> {
    let fam = seed.family;
    if fam == super::EVEN_SECOND {
        return None;
    }
    if j > i + 1 {
        return Some(Rat::zero());
    }
    let s = seed.values();
    let c = conj.values();
    let mut acc = Rat::zero();
    if fam.is_odd() {
        // m indexes the conjugate value; seed index i-j-m+1 stays >= 0
        for m in 0..=(i + 1 - j) {
            let top = 2 * (m + j) as i64 - 1;
            let mut term = ctx.q_binomial(2 * i + 1, top) * &c[m] * &s[i + 1 - j - m]
                * ctx.q_factorial(2 * (m + j) + 1);
            term /= ctx.q_int(2 * (i + 1 - j - m) + 1)
                * ctx.q_factorial(2 * j + 1)
                * ctx.q_factorial(2 * m + 1);
            if fam.kind == SeqKind::Second {
                term *= ctx.q_pow(1 - 4 * (m + j) as i64);
            }
            acc += term;
        }
    } else {
        for m in j.saturating_sub(1)..=i {
            let term = ctx.q_binomial(2 * i, 2 * m as i64)
                * ctx.q_binomial(2 * (m + 1), 2 * j as i64)
                * &s[i - m]
                * &c[m + 1 - j];
            acc += term;
        }
    }
    Some(acc)
}
