//! The four equivalent constructions of a family from its seed.
//!
//! All four return the members 0..=n_max as exact polynomials and agree
//! coefficient by coefficient:
//!
//! * [`build_from_seed`]: the explicit series form (ground truth)
//! * [`build_by_recurrence1`]: peel lower members off the monomial using the
//!   conjugate seed
//! * [`build_by_determinant`]: Cramer's rule on the inverse system, minors by
//!   fraction-free elimination
//! * [`build_by_production`]: the production-matrix step recurrence

use num_traits::Zero;

use crate::error::Result;
use crate::qcore::{QContext, Rat};
use crate::qpoly::Poly;

use super::matrix::{bareiss_det, production_matrix};
use super::{conjugate_seed, Family, Seed};

/// Constant linking consecutive members: D^2 applied to member n gives this
/// times member n-1. Equals [2n+1]_q [2n]_q for odd families and
/// [2n]_q [2n-1]_q for even ones, in the plain base for both kinds.
pub fn defining_constant(ctx: &QContext, family: Family, n: usize) -> Rat {
    assert!(n >= 1, "defining constant links member n to n-1, needs n >= 1");
    let d = family.degree(n);
    ctx.q_int(d) * ctx.q_int(d - 1)
}

/// Explicit series form. Member n uses seed values 0..=n:
/// coefficient of z^deg(k) is C(deg(n), deg(k)) q^(colpow(k)) seed_(n-k) / div,
/// where div is [2(n-k)+1]_q for odd families and 1 for even ones.
pub fn build_from_seed(ctx: &QContext, seed: &Seed, n_max: usize) -> Result<Vec<Poly>> {
    seed.ensure_len(n_max + 1)?;
    let fam = seed.family;
    let polys = (0..=n_max)
        .map(|n| {
            let mut coeffs = vec![Rat::zero(); fam.degree(n) + 1];
            for k in 0..=n {
                coeffs[fam.degree(k)] = fam.matrix_entry(ctx, seed.values(), n, k);
            }
            Poly::from_coeffs(coeffs)
        })
        .collect();
    Ok(polys)
}

/// First recurrence: with c the conjugate seed,
///
///   member_n = (1/c_0) [ q^lead(n) z^deg(n)
///                        - sum_(k<n) C(deg n, deg k) c_(n-k) / div * member_k ]
///
/// which is forward substitution on the inverse system row by row. The
/// q-power on the monomial is 1 for first-kind families.
pub fn build_by_recurrence1(ctx: &QContext, seed: &Seed, n_max: usize) -> Result<Vec<Poly>> {
    let fam = seed.family;
    let conj = conjugate_seed(ctx, seed, n_max)?;
    let c = conj.values();
    let mut polys: Vec<Poly> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = Poly::monomial(fam.degree(n), ctx.q_pow(fam.lead_exponent(n)));
        for (k, p) in polys.iter().enumerate() {
            let w = fam.plain_entry(ctx, c, n, k);
            acc = &acc - &p.scalar_mul(&w);
        }
        polys.push(acc.scalar_div(&c[0]));
    }
    Ok(polys)
}

/// Determinant form: Cramer's rule for member n on the inverse system
/// M P = Z~, where M is the plain conjugate convolution matrix (row i scaled
/// so the q-powers sit on Z~, whose entries are q^lead(i) z^deg(i)).
/// Expanding the replaced last column,
///
///   member_n = sum_i (-1)^(i+n) q^lead(i) z^deg(i) minor_(i,n) / det M,
///
/// every minor evaluated by fraction-free elimination, det M = c_0^(n+1).
pub fn build_by_determinant(ctx: &QContext, seed: &Seed, n_max: usize) -> Result<Vec<Poly>> {
    let fam = seed.family;
    let conj = conjugate_seed(ctx, seed, n_max)?;
    let mut polys: Vec<Poly> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let m: Vec<Vec<Rat>> = (0..=n)
            .map(|i| (0..=n).map(|j| fam.plain_entry(ctx, conj.values(), i, j)).collect())
            .collect();
        let det = conj.values()[0].pow(n as i32 + 1);
        let mut acc = Poly::zero();
        for i in 0..=n {
            // minor: drop row i and column n
            let minor: Vec<Vec<Rat>> = (0..=n)
                .filter(|&r| r != i)
                .map(|r| m[r][..n].to_vec())
                .collect();
            let mut coeff = bareiss_det(minor) * ctx.q_pow(fam.lead_exponent(i));
            if (i + n) % 2 == 1 {
                coeff = -coeff;
            }
            if !coeff.is_zero() {
                acc = &acc + &Poly::monomial(fam.degree(i), coeff);
            }
        }
        polys.push(acc.scalar_div(&det));
    }
    Ok(polys)
}

/// Production recurrence: member 0 is seed_0 q^0 z^deg(0), then
///
///   member_(n+1) = ( z^2 member_n - sum_(k<=n) pi_(n,k) member_k ) / pi_(n,n+1)
///
/// with pi the production matrix.
pub fn build_by_production(ctx: &QContext, seed: &Seed, n_max: usize) -> Result<Vec<Poly>> {
    seed.ensure_len(n_max + 1)?;
    let fam = seed.family;
    let mut polys = vec![Poly::monomial(fam.degree(0), seed.values()[0].clone())];
    if n_max == 0 {
        return Ok(polys);
    }
    let pi = production_matrix(ctx, seed, n_max - 1)?;
    for n in 0..n_max {
        let mut acc = polys[n].mul_monomial(2, &Rat::from_integer(1.into()));
        for (k, p) in polys.iter().enumerate() {
            let w = pi.get(n, k);
            if !w.is_zero() {
                acc = &acc - &p.scalar_mul(&w);
            }
        }
        polys.push(acc.scalar_div(&pi.superdiagonal(n)));
    }
    Ok(polys)
}

#[cfg(test)]
mod tests {
    use super::super::{Seed, ALL_FAMILIES, EVEN_FIRST, ODD_FIRST, ODD_SECOND};
    use super::*;
    use crate::qcore::{rat, rat_int};

    fn ctx(num: i64, den: i64) -> QContext {
        QContext::new(rat(num, den)).unwrap()
    }

    fn seed_of(family: super::super::Family, vals: &[(i64, i64)]) -> Seed {
        Seed::new(family, vals.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    #[test]
    fn defining_constant_frozen_values() {
        let c = ctx(1, 2);
        // [5]_q [4]_q at q = 1/2
        assert_eq!(defining_constant(&c, ODD_SECOND, 2), rat(465, 128));
        assert_eq!(defining_constant(&c, EVEN_FIRST, 1), rat(3, 2)); // [2][1]
        let c1 = ctx(1, 1);
        assert_eq!(defining_constant(&c1, ODD_FIRST, 1), rat_int(6)); // [3][2]
    }

    #[test]
    fn series_form_frozen_members() {
        // odd first, seed (1,1): p_1 = z + z^3
        let c = ctx(1, 2);
        let s = seed_of(ODD_FIRST, &[(1, 1), (1, 1)]);
        let p = build_from_seed(&c, &s, 1).unwrap();
        assert_eq!(p[0], Poly::monomial(1, rat_int(1)));
        let expect = &Poly::monomial(3, rat_int(1)) + &Poly::monomial(1, rat_int(1));
        assert_eq!(p[1], expect);
        // odd second, seed (1,0): p_1 = q^3 z^3 = (1/8) z^3
        let s2 = seed_of(ODD_SECOND, &[(1, 1), (0, 1)]);
        let p2 = build_from_seed(&c, &s2, 1).unwrap();
        assert_eq!(p2[1], Poly::monomial(3, rat(1, 8)));
        // even first, seed (g0, g2): w_1 = g2 + g0 z^2
        let s3 = seed_of(EVEN_FIRST, &[(5, 2), (-3, 7)]);
        let p3 = build_from_seed(&c, &s3, 1).unwrap();
        assert_eq!(p3[0], Poly::constant(rat(5, 2)));
        assert_eq!(p3[1].coeff(0), rat(-3, 7));
        assert_eq!(p3[1].coeff(2), rat(5, 2));
    }

    #[test]
    fn leading_coefficients_carry_family_power() {
        let c = ctx(1, 2);
        for fam in ALL_FAMILIES {
            let s = seed_of(fam, &[(3, 2), (1, 4), (-2, 7), (1, 1)]);
            let polys = build_from_seed(&c, &s, 3).unwrap();
            for (n, p) in polys.iter().enumerate() {
                assert_eq!(p.degree(), Some(fam.degree(n)));
                let expect = c.q_pow(fam.lead_exponent(n)) * rat(3, 2);
                assert_eq!(*p.leading_coeff().unwrap(), expect, "family {fam} n={n}");
            }
        }
    }

    #[test]
    fn all_constructors_agree() {
        let c = ctx(2, 3);
        for fam in ALL_FAMILIES {
            let s = seed_of(fam, &[(1, 2), (-3, 4), (2, 5), (1, 1), (1, 3), (-2, 7)]);
            let series = build_from_seed(&c, &s, 4).unwrap();
            assert_eq!(build_by_recurrence1(&c, &s, 4).unwrap(), series, "rec1 {fam}");
            assert_eq!(build_by_determinant(&c, &s, 4).unwrap(), series, "det {fam}");
            assert_eq!(build_by_production(&c, &s, 4).unwrap(), series, "prod {fam}");
        }
    }

    #[test]
    fn constructors_agree_at_classical_base() {
        let c = ctx(1, 1);
        for fam in ALL_FAMILIES {
            let s = seed_of(fam, &[(1, 1), (1, 6), (-1, 30), (1, 42)]);
            let series = build_from_seed(&c, &s, 3).unwrap();
            assert_eq!(build_by_recurrence1(&c, &s, 3).unwrap(), series);
            assert_eq!(build_by_determinant(&c, &s, 3).unwrap(), series);
            assert_eq!(build_by_production(&c, &s, 3).unwrap(), series);
        }
    }
}
