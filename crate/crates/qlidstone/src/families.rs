//! q-Bernoulli and q-Euler polynomials, the exact number sequences attached
//! to them, and consistency suites tying both back to the four polynomial
//! families in [`crate::lidstone`].
//!
//! All four polynomial families share one generating-function denominator
//! built from S(t) = e_q(t/2) E_q(t/2):
//!
//! ```text
//!   t e_q(zt) / (S - 1)     t E_q(zt) / (S - 1)
//!   2 e_q(zt) / (S + 1)     2 E_q(zt) / (S + 1)
//! ```
//!
//! S - 1 = 2 sinh_q(t/2) E_q(t/2) and S + 1 = 2 cosh_q(t/2) E_q(t/2), so the
//! Bernoulli quotients have a simple pole-like factor t and the Euler ones an
//! invertible constant 2. The constant terms of the polynomials are the
//! q-Bernoulli and q-Euler numbers; q-tangent numbers come from tan_q.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lidstone::verify::{residual_of, scalar_residual};
use crate::lidstone::{
    build_from_seed, conjugate_seed, gf_check, verify_defining_system, Seed, EVEN_FIRST,
    EVEN_SECOND, ODD_FIRST, ODD_SECOND,
};
use crate::qcore::{fmt_rat, rat, rat_int, QContext, Rat};
use crate::qpoly::{dq, dq_inv, Poly};
use crate::qseries::{q_exp_series, q_hyper_series, ExpKind, HyperKind, TruncSeries};
use crate::report::Report;

fn pow2(k: usize) -> Rat {
    Rat::from(BigInt::one() << k)
}

/// The three number sequences the polynomial families carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumberKind {
    /// beta_n, the constant terms of both q-Bernoulli polynomial kinds.
    Bernoulli,
    /// T_n, the q-tangent numbers (coefficients of tan_q).
    Tangent,
    /// Etilde_n, the constant terms of both q-Euler polynomial kinds.
    EulerTilde,
}

pub const ALL_NUMBER_KINDS: [NumberKind; 3] =
    [NumberKind::Bernoulli, NumberKind::Tangent, NumberKind::EulerTilde];

impl NumberKind {
    pub fn code(&self) -> &'static str {
        match self {
            NumberKind::Bernoulli => "qbernoulli",
            NumberKind::Tangent => "qtangent",
            NumberKind::EulerTilde => "qeulertilde",
        }
    }

    pub fn parse(code: &str) -> Option<NumberKind> {
        ALL_NUMBER_KINDS.into_iter().find(|k| k.code() == code)
    }
}

/// Exact values for subscripts 0..=n_max.
///
/// beta: even entries from t coth_q t (beta_2n = [2n]_q! c_2n / 2^2n),
/// beta_1 = -1/2 and higher odd entries vanish, because the odd part of
/// t/(S-1) is exactly -t/2. T: [n]_q! times the tan_q coefficient, zero at
/// even subscripts. Etilde: odd entries from tanh_q
/// (Etilde_2n+1 = -[2n+1]_q! c_2n+1 / 2^2n+1), even entries delta_n0,
/// because the even part of 2/(S+1) is exactly 1.
pub fn q_number_table(ctx: &QContext, kind: NumberKind, n_max: usize) -> Result<Vec<Rat>> {
    let one = Poly::one();
    let order = n_max + 1;
    let series = match kind {
        NumberKind::Bernoulli => q_hyper_series(ctx, HyperKind::TCoth, &one, order)?,
        NumberKind::Tangent => q_hyper_series(ctx, HyperKind::Tan, &one, order)?,
        NumberKind::EulerTilde => q_hyper_series(ctx, HyperKind::Tanh, &one, order)?,
    };
    Ok((0..=n_max)
        .map(|n| {
            let c = series.coeff(n).at_zero();
            match kind {
                NumberKind::Bernoulli if n % 2 == 0 => ctx.q_factorial(n) * c / pow2(n),
                NumberKind::Bernoulli if n == 1 => rat(-1, 2),
                NumberKind::Bernoulli => Rat::zero(),
                NumberKind::Tangent => ctx.q_factorial(n) * c,
                NumberKind::EulerTilde if n % 2 == 1 => -(ctx.q_factorial(n) * c) / pow2(n),
                NumberKind::EulerTilde if n == 0 => Rat::one(),
                NumberKind::EulerTilde => Rat::zero(),
            }
        })
        .collect())
}

/// Bernoulli numbers by the recurrence sum_k C(n+1, k) B_k = 0, B_0 = 1.
/// Base-independent reference for the q = 1 limit of the beta table.
pub fn classical_bernoulli(n: usize) -> Rat {
    let mut table: Vec<Rat> = Vec::with_capacity(n + 1);
    table.push(Rat::one());
    for m in 1..=n {
        let sum: Rat = (0..m)
            .map(|k| Rat::from(binomial(BigInt::from(m + 1), BigInt::from(k))) * &table[k])
            .sum();
        table.push(-sum / rat_int(m as i64 + 1));
    }
    table[n].clone()
}

/// Tangent numbers (1, 2, 16, 272, ... at odd subscripts):
/// T_2k+1 = (-1)^k 2^(2k+2) (2^(2k+2) - 1) B_2k+2 / (2k+2).
pub fn classical_tangent(n: usize) -> Rat {
    if n % 2 == 0 {
        return Rat::zero();
    }
    let k = (n - 1) / 2;
    let sign = if k % 2 == 0 { Rat::one() } else { -Rat::one() };
    let p = pow2(2 * k + 2);
    sign * &p * (&p - Rat::one()) * classical_bernoulli(2 * k + 2) / rat_int(2 * k as i64 + 2)
}

/// q = 1 limit of the Etilde table: delta_n0 at even subscripts and
/// (-1)^(k+1) T_2k+1 / 2^(2k+1) at n = 2k+1.
pub fn classical_euler_tilde(n: usize) -> Rat {
    if n % 2 == 0 {
        return if n == 0 { Rat::one() } else { Rat::zero() };
    }
    let k = (n - 1) / 2;
    let sign = if k % 2 == 1 { Rat::one() } else { -Rat::one() };
    sign * classical_tangent(n) / pow2(n)
}

/// The convolution coupling the beta and tangent tables,
/// sum_{k=0}^{n} (-1)^k 2^2k beta_2k / [2k]_q! * T_2(n-k)+1 / [2(n-k)+1]_q!
/// which telescopes to delta_n0 because (t cot_q t)(tan_q t) = t.
pub fn verify_im_identity(ctx: &QContext, n_max: usize) -> Result<Report> {
    let beta = q_number_table(ctx, NumberKind::Bernoulli, 2 * n_max)?;
    let tang = q_number_table(ctx, NumberKind::Tangent, 2 * n_max + 1)?;
    let mut rep = Report::new("im_identity", None, fmt_rat(ctx.q()), n_max);
    for n in 0..=n_max {
        let mut sum = Rat::zero();
        for k in 0..=n {
            let sign = if k % 2 == 0 { Rat::one() } else { -Rat::one() };
            let m = n - k;
            sum += sign * pow2(2 * k) * &beta[2 * k] / ctx.q_factorial(2 * k) * &tang[2 * m + 1]
                / ctx.q_factorial(2 * m + 1);
        }
        let want = if n == 0 { Rat::one() } else { Rat::zero() };
        rep.check(format!("im({n})"), scalar_residual(&sum, &want));
    }
    Ok(rep)
}

/// The four polynomial families cut from the shared denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyKind {
    /// b_n from t e_q(zt) / (S - 1).
    BernoulliFirst,
    /// B_n from t E_q(zt) / (S - 1).
    BernoulliSecond,
    /// e_n from 2 e_q(zt) / (S + 1).
    EulerFirst,
    /// E_n from 2 E_q(zt) / (S + 1).
    EulerSecond,
}

fn shared_denominator(ctx: &QContext, order: usize) -> TruncSeries {
    let half = Poly::constant(rat(1, 2));
    let small = q_exp_series(ctx, ExpKind::SmallE, &half, order);
    let big = q_exp_series(ctx, ExpKind::BigE, &half, order);
    small.mul(&big)
}

/// Members 0..=n_max of one family by exact truncated-series division.
pub fn q_poly_family(ctx: &QContext, kind: PolyKind, n_max: usize) -> Result<Vec<Poly>> {
    let order = n_max + 1;
    let s = shared_denominator(ctx, order);
    if s.coeff(0) != &Poly::one() || s.coeff(1) != &Poly::one() {
        return Err(Error::PreconditionFailed(
            "shared generating-function denominator must be 1 + t + O(t^2)".into(),
        ));
    }
    let one = TruncSeries::one(order);
    let kernel = match kind {
        PolyKind::BernoulliFirst | PolyKind::BernoulliSecond => {
            s.sub(&one).shift_down(1)?.reciprocal()?
        }
        PolyKind::EulerFirst | PolyKind::EulerSecond => {
            s.add(&one).reciprocal()?.scalar_mul(&rat_int(2))
        }
    };
    let z = Poly::monomial(1, Rat::one());
    let exp = match kind {
        PolyKind::BernoulliFirst | PolyKind::EulerFirst => {
            q_exp_series(ctx, ExpKind::SmallE, &z, order)
        }
        PolyKind::BernoulliSecond | PolyKind::EulerSecond => {
            q_exp_series(ctx, ExpKind::BigE, &z, order)
        }
    };
    let gf = kernel.mul(&exp);
    Ok((0..=n_max).map(|n| gf.coeff(n).scalar_mul(&ctx.q_factorial(n))).collect())
}

/// The four cross-family consistency suites. Each one halves the argument of
/// a polynomial family, reads off the resulting seed, and checks the exact
/// defect against the matching family member from [`crate::lidstone`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExampleId {
    Ex1,
    Ex2,
    Ex3,
    Ex4,
}

pub const ALL_EXAMPLES: [ExampleId; 4] =
    [ExampleId::Ex1, ExampleId::Ex2, ExampleId::Ex3, ExampleId::Ex4];

impl ExampleId {
    pub fn code(&self) -> &'static str {
        match self {
            ExampleId::Ex1 => "ex1",
            ExampleId::Ex2 => "ex2",
            ExampleId::Ex3 => "ex3",
            ExampleId::Ex4 => "ex4",
        }
    }

    pub fn parse(code: &str) -> Option<ExampleId> {
        ALL_EXAMPLES.into_iter().find(|e| e.code() == code)
    }
}

pub fn example_suite(ctx: &QContext, id: ExampleId, n_max: usize) -> Result<Report> {
    match id {
        ExampleId::Ex1 => suite_ex1(ctx, n_max),
        ExampleId::Ex2 => suite_ex2(ctx, n_max),
        ExampleId::Ex3 => suite_ex3(ctx, n_max),
        ExampleId::Ex4 => suite_ex4(ctx, n_max),
    }
}

fn halved(p: &Poly, exp: usize) -> Poly {
    p.scale_arg(&rat(1, 2)).scalar_mul(&pow2(exp))
}

fn unit_values(n_max: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n_max + 1];
    v[0] = Rat::one();
    v
}

/// Odd first kind from b_n: seed alpha_2n = 2^2n [2n+1]_q beta_2n, and
/// 2^(2n+1) b_2n+1(z/2) falls short of the family member by [2n+1]_q z^2n.
fn suite_ex1(ctx: &QContext, n_max: usize) -> Result<Report> {
    let top = 2 * n_max + 1;
    let b = q_poly_family(ctx, PolyKind::BernoulliFirst, top)?;
    let beta = q_number_table(ctx, NumberKind::Bernoulli, top)?;
    let etil = q_number_table(ctx, NumberKind::EulerTilde, top)?;
    let mut rep =
        Report::new("ex1", Some(ODD_FIRST.code().to_string()), fmt_rat(ctx.q()), n_max);

    for n in 0..=top {
        rep.check(format!("constant({n})"), scalar_residual(&b[n].at_zero(), &beta[n]));
        if n > 0 {
            let step = &dq(ctx, &b[n]) - &b[n - 1].scalar_mul(&ctx.q_int(n));
            rep.check(format!("ladder({n})"), residual_of(&step));
        }
    }

    let alpha: Vec<Rat> =
        (0..=n_max).map(|n| pow2(2 * n) * ctx.q_int(2 * n + 1) * &beta[2 * n]).collect();
    let seed = Seed::new(ODD_FIRST, alpha.clone())?;
    let polys = build_from_seed(ctx, &seed, n_max)?;
    rep.assert_true(
        "system",
        verify_defining_system(ctx, &seed, &polys).passed(),
        "seed family fails its defining system",
    );

    let gamma: Vec<Rat> = (0..=n_max).map(|j| pow2(2 * j) * &beta[2 * j]).collect();
    let even_polys = build_from_seed(ctx, &Seed::new(EVEN_FIRST, gamma)?, n_max)?;

    for n in 0..=n_max {
        let f = halved(&b[2 * n + 1], 2 * n + 1);
        rep.check(format!("seed_formula({n})"), scalar_residual(&f.coeff(1), &alpha[n]));
        let want = &polys[n] - &Poly::monomial(2 * n, ctx.q_int(2 * n + 1));
        rep.check(format!("defect({n})"), residual_of(&(&f - &want)));

        let g = halved(&b[2 * n], 2 * n);
        let even_want = if n == 0 {
            even_polys[0].clone()
        } else {
            &even_polys[n] - &Poly::monomial(2 * n - 1, ctx.q_int(2 * n))
        };
        rep.check(format!("even_defect({n})"), residual_of(&(&g - &even_want)));
    }

    let order = 2 * n_max + 2;
    let z = Poly::monomial(1, Rat::one());
    let tcoth = q_hyper_series(ctx, HyperKind::TCoth, &Poly::one(), order)?;
    let sinh_z = q_hyper_series(ctx, HyperKind::Sinh, &z, order)?;
    let gf = tcoth.mul(&sinh_z.shift_down(1)?);
    for n in 0..=n_max {
        let want = polys[n].scalar_div(&ctx.q_factorial(2 * n + 1));
        rep.check(format!("gf({n})"), residual_of(&(gf.coeff(2 * n) - &want)));
    }

    let conj = conjugate_seed(ctx, &seed, n_max)?;
    for m in 0..=n_max {
        let want = -(pow2(2 * m + 1) * &etil[2 * m + 1]);
        rep.check(format!("conjugate_seed({m})"), scalar_residual(&conj.values()[m], &want));
    }
    let conj_polys = build_from_seed(ctx, &conj, n_max)?;
    for n in 0..=n_max {
        let mut want = Poly::zero();
        for k in 0..=n {
            let c = ctx.q_binomial(2 * n + 1, 2 * k as i64 + 1)
                * pow2(2 * (n - k) + 1)
                * &etil[2 * (n - k) + 1]
                / ctx.q_int(2 * (n - k) + 1);
            want = &want - &Poly::monomial(2 * k + 1, c);
        }
        rep.check(format!("conjugate_formula({n})"), residual_of(&(&conj_polys[n] - &want)));
    }
    let tanh = q_hyper_series(ctx, HyperKind::Tanh, &Poly::one(), order)?;
    let cgf = tanh.mul(&sinh_z);
    for n in 0..=n_max {
        let want = conj_polys[n].scalar_div(&ctx.q_factorial(2 * n + 1));
        rep.check(format!("conjugate_gf({n})"), residual_of(&(cgf.coeff(2 * n + 2) - &want)));
    }
    Ok(rep)
}

/// Odd second kind from B_n, with the q-Euler odd halves folded in: same
/// seed values as ex1, defect monomial picks up q^(n(2n-1)), and the
/// interpolation normalizers [2n+1]_q! (A_n) and 2/[2n+1]_q! (N_n) close.
fn suite_ex2(ctx: &QContext, n_max: usize) -> Result<Report> {
    let top = 2 * n_max + 1;
    let bb = q_poly_family(ctx, PolyKind::BernoulliSecond, top)?;
    let ee = q_poly_family(ctx, PolyKind::EulerSecond, top)?;
    let beta = q_number_table(ctx, NumberKind::Bernoulli, top)?;
    let etil = q_number_table(ctx, NumberKind::EulerTilde, top)?;
    let mut rep =
        Report::new("ex2", Some(ODD_SECOND.code().to_string()), fmt_rat(ctx.q()), n_max);

    for n in 0..=top {
        rep.check(format!("constant({n})"), scalar_residual(&bb[n].at_zero(), &beta[n]));
        if n > 0 {
            let step = &dq_inv(ctx, &bb[n]) - &bb[n - 1].scalar_mul(&ctx.q_int(n));
            rep.check(format!("ladder({n})"), residual_of(&step));
        }
    }

    let alpha: Vec<Rat> =
        (0..=n_max).map(|n| pow2(2 * n) * ctx.q_int(2 * n + 1) * &beta[2 * n]).collect();
    let seed = Seed::new(ODD_SECOND, alpha.clone())?;
    let polys = build_from_seed(ctx, &seed, n_max)?;
    rep.assert_true(
        "system",
        verify_defining_system(ctx, &seed, &polys).passed(),
        "seed family fails its defining system",
    );

    let gamma: Vec<Rat> = (0..=n_max).map(|j| pow2(2 * j) * &beta[2 * j]).collect();
    let even_polys = build_from_seed(ctx, &Seed::new(EVEN_SECOND, gamma)?, n_max)?;

    for n in 0..=n_max {
        let f = halved(&bb[2 * n + 1], 2 * n + 1);
        rep.check(format!("seed_formula({n})"), scalar_residual(&f.coeff(1), &alpha[n]));
        let deg_coeff = ctx.q_int(2 * n + 1) * ctx.q_pow(n as i64 * (2 * n as i64 - 1));
        let want = &polys[n] - &Poly::monomial(2 * n, deg_coeff.clone());
        rep.check(format!("defect({n})"), residual_of(&(&f - &want)));

        let mut explicit = Poly::zero();
        for k in 0..=n {
            let c = ctx.q_binomial(2 * n + 1, 2 * k as i64 + 1)
                * ctx.q_pow(k as i64 * (2 * k as i64 + 1))
                * pow2(2 * (n - k))
                * &beta[2 * (n - k)];
            explicit = &explicit + &Poly::monomial(2 * k + 1, c);
        }
        rep.check(format!("explicit_form({n})"), residual_of(&(&polys[n] - &explicit)));

        let a_n = f.scalar_div(&ctx.q_factorial(2 * n + 1));
        let lifted = &a_n.scalar_mul(&ctx.q_factorial(2 * n + 1))
            + &Poly::monomial(2 * n, deg_coeff);
        rep.check(format!("remark_a({n})"), residual_of(&(&lifted - &polys[n])));

        let g = halved(&bb[2 * n], 2 * n);
        let even_want = if n == 0 {
            even_polys[0].clone()
        } else {
            let c = ctx.q_int(2 * n) * ctx.q_pow((n as i64 - 1) * (2 * n as i64 - 1));
            &even_polys[n] - &Poly::monomial(2 * n - 1, c)
        };
        rep.check(format!("even_defect({n})"), residual_of(&(&g - &even_want)));
    }

    let order = 2 * n_max + 2;
    let z = Poly::monomial(1, Rat::one());
    let tcoth = q_hyper_series(ctx, HyperKind::TCoth, &Poly::one(), order)?;
    let big_sinh = q_hyper_series(ctx, HyperKind::BigSinh, &z, order)?;
    let gf = tcoth.mul(&big_sinh.shift_down(1)?);
    for n in 0..=n_max {
        let want = polys[n].scalar_div(&ctx.q_factorial(2 * n + 1));
        rep.check(format!("gf({n})"), residual_of(&(gf.coeff(2 * n) - &want)));
    }

    let conj = conjugate_seed(ctx, &seed, n_max)?;
    for m in 0..=n_max {
        let want = -(pow2(2 * m + 1) * &etil[2 * m + 1]);
        rep.check(format!("conjugate_seed({m})"), scalar_residual(&conj.values()[m], &want));
    }
    let conj_polys = build_from_seed(ctx, &conj, n_max)?;
    for n in 0..=n_max {
        let mut want = Poly::zero();
        for k in 0..=n {
            let c = ctx.q_binomial(2 * n + 1, 2 * k as i64 + 1)
                * ctx.q_pow(k as i64 * (2 * k as i64 + 1))
                * pow2(2 * (n - k) + 1)
                * &etil[2 * (n - k) + 1]
                / ctx.q_int(2 * (n - k) + 1);
            want = &want - &Poly::monomial(2 * k + 1, c);
        }
        rep.check(format!("conjugate_formula({n})"), residual_of(&(&conj_polys[n] - &want)));
    }
    let tanh = q_hyper_series(ctx, HyperKind::Tanh, &Poly::one(), order)?;
    let cgf = tanh.mul(&big_sinh);
    for n in 0..=n_max {
        let want = conj_polys[n].scalar_div(&ctx.q_factorial(2 * n + 1));
        rep.check(format!("conjugate_gf({n})"), residual_of(&(cgf.coeff(2 * n + 2) - &want)));
    }

    for n in 0..=top {
        rep.check(format!("euler_constant({n})"), scalar_residual(&ee[n].at_zero(), &etil[n]));
        if n > 0 {
            let step = &dq_inv(ctx, &ee[n]) - &ee[n - 1].scalar_mul(&ctx.q_int(n));
            rep.check(format!("euler_ladder({n})"), residual_of(&step));
        }
    }
    let unit_seed = Seed::new(ODD_SECOND, unit_values(n_max))?;
    let unit_polys = build_from_seed(ctx, &unit_seed, n_max)?;
    for n in 0..=n_max {
        let f = halved(&ee[2 * n + 1], 2 * n + 1);
        rep.check(
            format!("euler_seed({n})"),
            scalar_residual(&f.coeff(1), &unit_seed.values()[n]),
        );
        let mono = Poly::monomial(2 * n + 1, ctx.q_pow(n as i64 * (2 * n as i64 + 1)));
        rep.check(format!("euler_member({n})"), residual_of(&(&unit_polys[n] - &mono)));
        let mut want = mono;
        for j in 0..=n {
            let c = ctx.q_binomial(2 * n + 1, 2 * j as i64)
                * ctx.q_pow(j as i64 * (2 * j as i64 - 1))
                * pow2(2 * (n - j) + 1)
                * &etil[2 * (n - j) + 1];
            want = &want + &Poly::monomial(2 * j, c);
        }
        rep.check(format!("euler_defect({n})"), residual_of(&(&f - &want)));

        let n_n = halved(&ee[2 * n + 1], 2 * n + 2).scalar_div(&ctx.q_factorial(2 * n + 1));
        let scaled = f.scalar_mul(&rat_int(2)).scalar_div(&ctx.q_factorial(2 * n + 1));
        rep.check(format!("remark_n({n})"), residual_of(&(&scaled - &n_n)));
    }
    let conj_unit = conjugate_seed(ctx, &unit_seed, n_max)?;
    rep.assert_true(
        "euler_self_conjugate",
        conj_unit == unit_seed,
        "unit seed must be its own conjugate",
    );
    Ok(rep)
}

/// Even first kind from e_n: the seed collapses to (1, 0, 0, ...), the
/// weight series to 1, the family to plain monomials, and 2^2n e_2n(z/2)
/// differs from z^2n only in odd powers weighted by Etilde numbers.
fn suite_ex3(ctx: &QContext, n_max: usize) -> Result<Report> {
    let top = 2 * n_max + 1;
    let e = q_poly_family(ctx, PolyKind::EulerFirst, top)?;
    let etil = q_number_table(ctx, NumberKind::EulerTilde, top)?;
    let mut rep =
        Report::new("ex3", Some(EVEN_FIRST.code().to_string()), fmt_rat(ctx.q()), n_max);

    for n in 0..=top {
        rep.check(format!("constant({n})"), scalar_residual(&e[n].at_zero(), &etil[n]));
        if n > 0 {
            let step = &dq(ctx, &e[n]) - &e[n - 1].scalar_mul(&ctx.q_int(n));
            rep.check(format!("ladder({n})"), residual_of(&step));
        }
    }

    let unit_seed = Seed::new(EVEN_FIRST, unit_values(n_max))?;
    let polys = build_from_seed(ctx, &unit_seed, n_max)?;
    rep.assert_true(
        "system",
        verify_defining_system(ctx, &unit_seed, &polys).passed(),
        "unit-seed family fails its defining system",
    );
    rep.assert_true(
        "h_collapse",
        unit_seed.values()[0].is_one() && unit_seed.values().iter().skip(1).all(Rat::is_zero),
        "weight series is not identically 1",
    );

    for n in 0..=n_max {
        let f = halved(&e[2 * n], 2 * n);
        rep.check(
            format!("gamma_formula({n})"),
            scalar_residual(&f.at_zero(), &unit_seed.values()[n]),
        );
        rep.check(
            format!("unit_member({n})"),
            residual_of(&(&polys[n] - &Poly::monomial(2 * n, Rat::one()))),
        );
        let mut want = Poly::monomial(2 * n, Rat::one());
        for j in 0..n {
            let c = ctx.q_binomial(2 * n, 2 * j as i64 + 1)
                * pow2(2 * (n - j) - 1)
                * &etil[2 * (n - j) - 1];
            want = &want + &Poly::monomial(2 * j + 1, c);
        }
        rep.check(format!("defect({n})"), residual_of(&(&f - &want)));
    }

    let order = 2 * n_max + 2;
    let z = Poly::monomial(1, Rat::one());
    let gf = q_hyper_series(ctx, HyperKind::Cosh, &z, order)?;
    for n in 0..=n_max {
        let want = polys[n].scalar_div(&ctx.q_factorial(2 * n));
        rep.check(format!("gf({n})"), residual_of(&(gf.coeff(2 * n) - &want)));
    }
    rep.assert_true(
        "gf_suite",
        gf_check(ctx, &unit_seed, n_max)?.passed(),
        "generating-function suite failed",
    );
    Ok(rep)
}

/// Even second kind from E_n: unit seed again, self-conjugate, family member
/// q^(n(2n-1)) z^2n, and the same generating function on both sides.
fn suite_ex4(ctx: &QContext, n_max: usize) -> Result<Report> {
    let top = 2 * n_max + 1;
    let ee = q_poly_family(ctx, PolyKind::EulerSecond, top)?;
    let etil = q_number_table(ctx, NumberKind::EulerTilde, top)?;
    let mut rep =
        Report::new("ex4", Some(EVEN_SECOND.code().to_string()), fmt_rat(ctx.q()), n_max);

    for n in 0..=top {
        rep.check(format!("constant({n})"), scalar_residual(&ee[n].at_zero(), &etil[n]));
        if n > 0 {
            let step = &dq_inv(ctx, &ee[n]) - &ee[n - 1].scalar_mul(&ctx.q_int(n));
            rep.check(format!("ladder({n})"), residual_of(&step));
        }
    }
    for n in (0..=top).step_by(2) {
        let want = if n == 0 { Rat::one() } else { Rat::zero() };
        rep.check(format!("even_number_vanishes({n})"), scalar_residual(&etil[n], &want));
    }

    let unit_seed = Seed::new(EVEN_SECOND, unit_values(n_max))?;
    let polys = build_from_seed(ctx, &unit_seed, n_max)?;
    rep.assert_true(
        "system",
        verify_defining_system(ctx, &unit_seed, &polys).passed(),
        "unit-seed family fails its defining system",
    );
    let conj = conjugate_seed(ctx, &unit_seed, n_max)?;
    rep.assert_true("self_conjugate", conj == unit_seed, "unit seed must be its own conjugate");

    for n in 0..=n_max {
        let f = halved(&ee[2 * n], 2 * n);
        rep.check(
            format!("gamma_formula({n})"),
            scalar_residual(&f.at_zero(), &unit_seed.values()[n]),
        );
        let mono = Poly::monomial(2 * n, ctx.q_pow(n as i64 * (2 * n as i64 - 1)));
        rep.check(format!("unit_member({n})"), residual_of(&(&polys[n] - &mono)));
        let mut want = mono;
        for j in 0..n {
            let c = ctx.q_binomial(2 * n, 2 * j as i64 + 1)
                * ctx.q_pow(j as i64 * (2 * j as i64 + 1))
                * pow2(2 * (n - j) - 1)
                * &etil[2 * (n - j) - 1];
            want = &want + &Poly::monomial(2 * j + 1, c);
        }
        rep.check(format!("defect({n})"), residual_of(&(&f - &want)));
    }

    let order = 2 * n_max + 2;
    let z = Poly::monomial(1, Rat::one());
    let gf = q_hyper_series(ctx, HyperKind::BigCosh, &z, order)?;
    for n in 0..=n_max {
        let want = polys[n].scalar_div(&ctx.q_factorial(2 * n));
        rep.check(format!("gf({n})"), residual_of(&(gf.coeff(2 * n) - &want)));
    }
    rep.assert_true(
        "gf_suite",
        gf_check(ctx, &unit_seed, n_max)?.passed(),
        "generating-function suite failed",
    );
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lidstone::appell_from_seed;
    use crate::qcore::parse_rat;

    fn ctx(s: &str) -> QContext {
        QContext::new(parse_rat(s).unwrap()).unwrap()
    }

    fn assert_passed(rep: &Report) {
        if !rep.passed() {
            for c in rep.failures() {
                eprintln!("FAIL {}::{} {:?}", rep.suite, c.id, c.residual);
            }
            panic!("suite {} failed", rep.suite);
        }
    }

    #[test]
    fn bernoulli_numbers_frozen() {
        let c = ctx("1/2");
        let beta = q_number_table(&c, NumberKind::Bernoulli, 5).unwrap();
        assert_eq!(beta[0], rat_int(1));
        assert_eq!(beta[1], rat(-1, 2));
        assert_eq!(beta[2], rat(3, 28)); // q(1+q) / (4 [3]_q) at q = 1/2
        assert!(beta[3].is_zero() && beta[5].is_zero());
        let beta1 = q_number_table(&ctx("1"), NumberKind::Bernoulli, 4).unwrap();
        assert_eq!(beta1[2], rat(1, 6));
        assert_eq!(beta1[4], rat(-1, 30));
    }

    #[test]
    fn tangent_numbers_frozen() {
        let c = ctx("1/3");
        let t = q_number_table(&c, NumberKind::Tangent, 3).unwrap();
        assert!(t[0].is_zero() && t[2].is_zero());
        assert_eq!(t[1], rat_int(1));
        assert_eq!(t[3], rat(4, 9)); // q + q^2 at q = 1/3
        let t1 = q_number_table(&ctx("1"), NumberKind::Tangent, 7).unwrap();
        let want: Vec<Rat> = [1, 2, 16, 272].iter().map(|&v| rat_int(v)).collect();
        assert_eq!(vec![t1[1].clone(), t1[3].clone(), t1[5].clone(), t1[7].clone()], want);
    }

    #[test]
    fn euler_tilde_numbers_frozen() {
        let c = ctx("2/5");
        let e = q_number_table(&c, NumberKind::EulerTilde, 4).unwrap();
        assert_eq!(e[0], rat_int(1));
        assert_eq!(e[1], rat(-1, 2));
        assert!(e[2].is_zero() && e[4].is_zero());
        assert_eq!(e[3], rat(7, 100)); // (q + q^2) / 8 at q = 2/5
        let e1 = q_number_table(&ctx("1"), NumberKind::EulerTilde, 5).unwrap();
        assert_eq!(e1[3], rat(1, 4));
        assert_eq!(e1[5], rat(-1, 2));
    }

    #[test]
    fn classical_oracles_frozen() {
        assert_eq!(classical_bernoulli(0), rat_int(1));
        assert_eq!(classical_bernoulli(1), rat(-1, 2));
        assert_eq!(classical_bernoulli(2), rat(1, 6));
        assert!(classical_bernoulli(3).is_zero());
        assert_eq!(classical_bernoulli(4), rat(-1, 30));
        assert_eq!(classical_bernoulli(6), rat(1, 42));
        assert_eq!(classical_bernoulli(8), rat(-1, 30));
        assert_eq!(classical_tangent(1), rat_int(1));
        assert_eq!(classical_tangent(7), rat_int(272));
        assert!(classical_tangent(4).is_zero());
        assert_eq!(classical_euler_tilde(1), rat(-1, 2));
        assert_eq!(classical_euler_tilde(3), rat(1, 4));
        assert_eq!(classical_euler_tilde(6), rat_int(0));
    }

    #[test]
    fn tables_collapse_to_classical_at_q_one() {
        let c = ctx("1");
        let beta = q_number_table(&c, NumberKind::Bernoulli, 9).unwrap();
        let tang = q_number_table(&c, NumberKind::Tangent, 9).unwrap();
        let etil = q_number_table(&c, NumberKind::EulerTilde, 9).unwrap();
        for n in 0..=9 {
            assert_eq!(beta[n], classical_bernoulli(n), "beta_{n}");
            assert_eq!(tang[n], classical_tangent(n), "T_{n}");
            assert_eq!(etil[n], classical_euler_tilde(n), "Etilde_{n}");
        }
    }

    #[test]
    fn poly_families_frozen() {
        let c = ctx("1/2");
        let z_minus_half = Poly::from_coeffs(vec![rat(-1, 2), rat_int(1)]);
        for kind in [
            PolyKind::BernoulliFirst,
            PolyKind::BernoulliSecond,
            PolyKind::EulerFirst,
            PolyKind::EulerSecond,
        ] {
            let polys = q_poly_family(&c, kind, 1).unwrap();
            assert_eq!(polys[0], Poly::one(), "{kind:?}[0]");
            assert_eq!(polys[1], z_minus_half, "{kind:?}[1]");
        }
        // B_3 = q^3 z^3 - (q [3]_q / 2) z^2 + [3]_q beta_2 z at q = 1/2
        let bb = q_poly_family(&c, PolyKind::BernoulliSecond, 3).unwrap();
        let want =
            Poly::from_coeffs(vec![rat_int(0), rat(3, 16), rat(-7, 16), rat(1, 8)]);
        assert_eq!(bb[3], want);
    }

    #[test]
    fn families_match_appell_closed_form() {
        let c = ctx("1/2");
        let top = 6;
        let cases = [
            (PolyKind::BernoulliFirst, ExpKind::SmallE, NumberKind::Bernoulli),
            (PolyKind::BernoulliSecond, ExpKind::BigE, NumberKind::Bernoulli),
            (PolyKind::EulerFirst, ExpKind::SmallE, NumberKind::EulerTilde),
            (PolyKind::EulerSecond, ExpKind::BigE, NumberKind::EulerTilde),
        ];
        for (pk, ek, nk) in cases {
            let polys = q_poly_family(&c, pk, top).unwrap();
            let table = q_number_table(&c, nk, top).unwrap();
            let appell = appell_from_seed(&c, ek, &table, top).unwrap();
            assert_eq!(polys, appell, "{pk:?}");
        }
    }

    #[test]
    fn denominator_factorizations() {
        let c = ctx("2/5");
        let order = 8;
        let s = shared_denominator(&c, order);
        let s_neg = TruncSeries::from_polys(
            (0..=order)
                .map(|k| if k % 2 == 1 { -s.coeff(k) } else { s.coeff(k).clone() })
                .collect(),
        );
        assert_eq!(s.mul(&s_neg), TruncSeries::one(order));

        let half = Poly::constant(rat(1, 2));
        let big_e = q_exp_series(&c, ExpKind::BigE, &half, order);
        let sinh = q_hyper_series(&c, HyperKind::Sinh, &half, order).unwrap();
        let cosh = q_hyper_series(&c, HyperKind::Cosh, &half, order).unwrap();
        let one = TruncSeries::one(order);
        assert_eq!(s.sub(&one), sinh.mul(&big_e).scalar_mul(&rat_int(2)));
        assert_eq!(s.add(&one), cosh.mul(&big_e).scalar_mul(&rat_int(2)));
    }

    #[test]
    fn im_identity_holds() {
        for q in ["1/2", "2/5", "1"] {
            let rep = verify_im_identity(&ctx(q), 5).unwrap();
            assert_passed(&rep);
        }
    }

    #[test]
    fn example_suites_pass() {
        for q in ["1/2", "1"] {
            let c = ctx(q);
            for id in ALL_EXAMPLES {
                let rep = example_suite(&c, id, 3).unwrap();
                assert_passed(&rep);
            }
        }
    }
}
