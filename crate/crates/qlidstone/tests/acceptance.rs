//! Acceptance gates, one test per numbered criterion. Each test prints a
//! single [PASS]/[FAIL] line (visible with --nocapture) and on failure lists
//! every offending clause with its exact residual.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qlidstone::families::{
    classical_bernoulli, classical_euler_tilde, classical_tangent, example_suite, q_number_table,
    verify_im_identity, ExampleId, NumberKind, ALL_EXAMPLES,
};
use qlidstone::lidstone::{
    appell_from_seed, appell_to_lidstone, build_by_determinant, build_by_production,
    build_by_recurrence1, build_from_seed, compare_production_closed_form, conjugate_seed,
    conjugate_seed_cramer, defining_constant, gf_check, lidstone_matrix, production_matrix,
    system_inverse_matrix, toeplitz_factorization, toeplitz_inverse_cramer, verify_defining_system,
    verify_qdiffeq, Family, Seed, SeqKind, SeqParity, TriMatrix, ALL_FAMILIES, EVEN_FIRST,
    EVEN_SECOND, ODD_FIRST, ODD_SECOND,
};
use qlidstone::qpoly::{dq, dq_inv, Poly};
use qlidstone::qseries::ExpKind;
use qlidstone::report::Report;
use qlidstone::{rat, rat_int, QContext, Rat};

const SWEEP_Q: [(i64, i64); 4] = [(1, 2), (1, 3), (3, 4), (1, 1)];

fn ctx_of(num: i64, den: i64) -> QContext {
    QContext::new(rat(num, den)).expect("base in (0, 1]")
}

fn random_values(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rat> {
    (0..len)
        .map(|i| {
            let den = rng.gen_range(1..=9i64);
            let num = if i == 0 {
                let v = rng.gen_range(1..=9i64);
                if rng.gen_bool(0.5) {
                    -v
                } else {
                    v
                }
            } else {
                rng.gen_range(-9..=9i64)
            };
            rat(num, den)
        })
        .collect()
}

fn report_failures(rep: &Report) -> Vec<String> {
    rep.failures()
        .map(|c| {
            format!(
                "{} family={} q={} clause {}: {}",
                rep.suite,
                rep.family.as_deref().unwrap_or("-"),
                rep.q,
                c.id,
                c.residual.as_deref().unwrap_or("failed")
            )
        })
        .collect()
}

fn finish(line: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("[PASS] {line}");
    } else {
        println!("[FAIL] {line}");
        for f in &failures {
            println!("  - {f}");
        }
        panic!("{} failure(s): {line}", failures.len());
    }
}

#[test]
fn c01_defining_systems_on_random_seeds() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for fam in ALL_FAMILIES {
        for (num, den) in SWEEP_Q {
            let ctx = ctx_of(num, den);
            for _ in 0..5 {
                let seed = Seed::new(fam, random_values(&mut rng, 9)).expect("valid seed");
                let polys = build_from_seed(&ctx, &seed, 8).expect("family builds");
                failures.extend(report_failures(&verify_defining_system(&ctx, &seed, &polys)));
            }
        }
    }
    finish("criterion 1: defining systems, 20 random seeds per family, N=8", failures);
}

#[test]
fn c02_four_constructors_agree() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for fam in ALL_FAMILIES {
        for (num, den) in SWEEP_Q {
            let ctx = ctx_of(num, den);
            for _ in 0..5 {
                let seed = Seed::new(fam, random_values(&mut rng, 7)).expect("valid seed");
                let series = build_from_seed(&ctx, &seed, 5).expect("series form");
                let rec = build_by_recurrence1(&ctx, &seed, 5).expect("recurrence form");
                let det = build_by_determinant(&ctx, &seed, 5).expect("determinant form");
                let prod = build_by_production(&ctx, &seed, 5).expect("production form");
                for n in 0..=5usize {
                    for (route, got) in [("recurrence", &rec), ("determinant", &det), ("production", &prod)] {
                        if got[n] != series[n] {
                            failures.push(format!(
                                "family={fam} q={num}/{den} n={n}: {route} form disagrees with series form"
                            ));
                        }
                    }
                }
            }
        }
    }
    finish("criterion 2: series = recurrence = determinant = production, N=5", failures);
}

#[test]
fn c03_conjugation_involutes_and_matches_cramer() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for fam in ALL_FAMILIES {
        for (num, den) in SWEEP_Q {
            let ctx = ctx_of(num, den);
            for _ in 0..3 {
                let seed = Seed::new(fam, random_values(&mut rng, 9)).expect("valid seed");
                let conj = conjugate_seed(&ctx, &seed, 8).expect("conjugate");
                let back = conjugate_seed(&ctx, &conj, 8).expect("conjugate twice");
                if back.values() != &seed.values()[..9] {
                    failures.push(format!("family={fam} q={num}/{den}: involution broken at N=8"));
                }
                let short = Seed::new(fam, seed.values()[..7].to_vec()).expect("valid seed");
                let fwd = conjugate_seed(&ctx, &short, 6).expect("substitution conjugate");
                let cramer = conjugate_seed_cramer(&ctx, &short, 6).expect("determinant conjugate");
                if fwd != cramer {
                    failures.push(format!(
                        "family={fam} q={num}/{den}: determinant conjugate differs from substitution at N=6"
                    ));
                }
            }
        }
    }
    finish("criterion 3: conjugation involution N=8, Cramer route N=6", failures);
}

#[test]
fn c04_matrix_identities_at_dim_nine() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for fam in ALL_FAMILIES {
        for (num, den) in SWEEP_Q {
            let ctx = ctx_of(num, den);
            for _ in 0..2 {
                let seed = Seed::new(fam, random_values(&mut rng, 9)).expect("valid seed");
                let a = lidstone_matrix(&ctx, &seed, 8).expect("system matrix");
                let conj = conjugate_seed(&ctx, &seed, 8).expect("conjugate");
                let inv = system_inverse_matrix(&ctx, &conj, 8).expect("inverse matrix");
                if a.mul(&inv) != TriMatrix::identity(9) {
                    failures.push(format!("family={fam} q={num}/{den}: A * A^-1 != I"));
                }
                let (d, t, d_inv) = toeplitz_factorization(&ctx, &seed, 8).expect("factorization");
                if d.mul(&t).mul(&d_inv) != a {
                    failures.push(format!("family={fam} q={num}/{den}: D T D^-1 != A"));
                }
                if fam.kind == SeqKind::First && !t.is_toeplitz() {
                    failures.push(format!("family={fam} q={num}/{den}: first-kind factor is not Toeplitz"));
                }
                // the band-determinant inverse on the plain convolution Toeplitz
                let plain = TriMatrix::from_fn(9, |i, j| {
                    &seed.values()[i - j] / fam.weight_factorial(&ctx, i - j)
                });
                let band = toeplitz_inverse_cramer(&plain).expect("band inverse");
                if band != plain.inverse().expect("substitution inverse") {
                    failures.push(format!(
                        "family={fam} q={num}/{den}: band-determinant inverse differs from substitution"
                    ));
                }
            }
        }
    }
    finish("criterion 4: A*A^-1 = I, A = D T D^-1, Toeplitz inverse routes agree, n=8", failures);
}

#[test]
fn c05_production_closed_forms_and_eigen_rows() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for fam in ALL_FAMILIES {
        for (num, den) in SWEEP_Q {
            let ctx = ctx_of(num, den);
            for _ in 0..2 {
                let seed = Seed::new(fam, random_values(&mut rng, 8)).expect("valid seed");
                let rep =
                    compare_production_closed_form(&ctx, &seed, 5).expect("closed-form report");
                failures.extend(report_failures(&rep));
                let pi = production_matrix(&ctx, &seed, 5).expect("production matrix");
                let polys = build_from_seed(&ctx, &seed, 6).expect("members to n+1");
                for i in 0..=5usize {
                    let mut lhs = Poly::zero();
                    for j in 0..=(i + 1) {
                        lhs = &lhs + &polys[j].scalar_mul(&pi.get(i, j));
                    }
                    let rhs = polys[i].mul_monomial(2, &rat_int(1));
                    if lhs != rhs {
                        failures.push(format!(
                            "family={fam} q={num}/{den}: eigen row {i} fails: (Pi P)_i != z^2 p_i"
                        ));
                    }
                }
            }
        }
    }
    finish("criterion 5: production closed forms match, eigen rows (Pi P)_i = z^2 p_i, n=5", failures);
}

#[test]
fn c06_q_difference_equations() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for fam in ALL_FAMILIES {
        for (num, den) in SWEEP_Q {
            let ctx = ctx_of(num, den);
            for _ in 0..2 {
                let seed = Seed::new(fam, random_values(&mut rng, 7)).expect("valid seed");
                let polys = build_from_seed(&ctx, &seed, 5).expect("members");
                let conj = conjugate_seed(&ctx, &seed, 5).expect("conjugate");
                let pi = production_matrix(&ctx, &seed, 5).expect("production matrix");
                failures.extend(report_failures(&verify_qdiffeq(&ctx, &seed, &polys, &conj, &pi)));
            }
        }
    }
    finish("criterion 6: both q-difference equations, primary and conjugate, n<=5", failures);
}

#[test]
fn c07_generating_functions_to_t12() {
    let mut failures = Vec::new();
    let mut covered: BTreeSet<(String, &str)> = BTreeSet::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for fam in ALL_FAMILIES {
        for (num, den) in SWEEP_Q {
            let ctx = ctx_of(num, den);
            for _ in 0..2 {
                let seed = Seed::new(fam, random_values(&mut rng, 6)).expect("valid seed");
                // order 2*5 + 2 = 12
                let rep = gf_check(&ctx, &seed, 5).expect("gf report");
                failures.extend(report_failures(&rep));
                for side in ["primary", "conjugate"] {
                    let full = rep.clauses.iter().any(|c| c.id == format!("{side}(5)"));
                    if full {
                        covered.insert((fam.code().to_string(), side));
                    } else {
                        failures.push(format!("family={fam}: {side} identity not checked to t^12"));
                    }
                }
            }
        }
    }
    if covered.len() != 8 {
        failures.push(format!("expected 8 identities (two per family), covered {}", covered.len()));
    }
    finish("criterion 7: eight generating-function identities to t^12, N=5", failures);
}

#[test]
fn c08_convolution_identity_of_number_tables() {
    let mut failures = Vec::new();
    for (num, den) in [(1, 2), (2, 5), (1, 1)] {
        let ctx = ctx_of(num, den);
        let rep = verify_im_identity(&ctx, 6).expect("identity report");
        failures.extend(report_failures(&rep));
    }
    finish("criterion 8: Bernoulli-tangent convolution identity, n<=6, three bases", failures);
}

#[test]
fn c09_appell_ladders_and_halving_bridge() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (num, den) in SWEEP_Q {
        let ctx = ctx_of(num, den);
        // derivative ladders for both kinds, n <= 8
        let vals = random_values(&mut rng, 9);
        let small = appell_from_seed(&ctx, ExpKind::SmallE, &vals, 8).expect("kind I sequence");
        let big = appell_from_seed(&ctx, ExpKind::BigE, &vals, 8).expect("kind II sequence");
        for n in 1..=8usize {
            if dq(&ctx, &small[n]) != small[n - 1].scalar_mul(&ctx.q_int(n)) {
                failures.push(format!("q={num}/{den}: kind I ladder fails at n={n}"));
            }
            if dq_inv(&ctx, &big[n]) != big[n - 1].scalar_mul(&ctx.q_int(n)) {
                failures.push(format!("q={num}/{den}: kind II ladder fails at n={n}"));
            }
        }
        // odd-vanishing constants halve into the matching class, N = 4
        let mut even_vals = random_values(&mut rng, 10);
        for (i, v) in even_vals.iter_mut().enumerate() {
            if i % 2 == 1 {
                *v = rat_int(0);
            }
        }
        for (kind, odd_fam, even_fam) in
            [(ExpKind::SmallE, ODD_FIRST, EVEN_FIRST), (ExpKind::BigE, ODD_SECOND, EVEN_SECOND)]
        {
            let ap = appell_from_seed(&ctx, kind, &even_vals, 9).expect("sequence");
            let odd = appell_to_lidstone(&ctx, SeqParity::Odd, &ap, 4).expect("odd bridge");
            let odd_seed: Vec<Rat> = (0..=4usize)
                .map(|n| rat_int(1 << (2 * n)) * ctx.q_int(2 * n + 1) * &even_vals[2 * n])
                .collect();
            let s = Seed::new(odd_fam, odd_seed).expect("bridged seed");
            failures.extend(report_failures(&verify_defining_system(&ctx, &s, &odd)));
            if build_from_seed(&ctx, &s, 4).expect("rebuild") != odd {
                failures.push(format!("q={num}/{den} {odd_fam}: bridged members differ from rebuilt"));
            }
            let even = appell_to_lidstone(&ctx, SeqParity::Even, &ap, 4).expect("even bridge");
            let even_seed: Vec<Rat> =
                (0..=4usize).map(|n| rat_int(1 << (2 * n)) * &even_vals[2 * n]).collect();
            let s = Seed::new(even_fam, even_seed).expect("bridged seed");
            failures.extend(report_failures(&verify_defining_system(&ctx, &s, &even)));
            if build_from_seed(&ctx, &s, 4).expect("rebuild") != even {
                failures.push(format!("q={num}/{den} {even_fam}: bridged members differ from rebuilt"));
            }
            // landing in the wrong kind must be detected away from q = 1
            if (num, den) != (1, 1) {
                let wrong = Family { parity: SeqParity::Odd, kind: flip(odd_fam.kind) };
                let s = Seed::new(wrong, s_values_for_odd(&ctx, &even_vals)).expect("seed");
                if verify_defining_system(&ctx, &s, &odd).passed() {
                    failures.push(format!(
                        "q={num}/{den}: {kind:?} bridge also verifies against {wrong}, classes not separated"
                    ));
                }
            }
        }
    }
    finish("criterion 9: Appell ladders n<=8, halving bridge lands in the right class, N=4", failures);
}

fn flip(kind: SeqKind) -> SeqKind {
    match kind {
        SeqKind::First => SeqKind::Second,
        SeqKind::Second => SeqKind::First,
    }
}

fn s_values_for_odd(ctx: &QContext, even_vals: &[Rat]) -> Vec<Rat> {
    (0..=4usize).map(|n| rat_int(1 << (2 * n)) * ctx.q_int(2 * n + 1) * &even_vals[2 * n]).collect()
}

#[test]
fn c10_cross_family_suites() {
    let mut failures = Vec::new();
    for (num, den) in [(1, 2), (3, 4), (1, 1)] {
        let ctx = ctx_of(num, den);
        for id in ALL_EXAMPLES {
            let rep = example_suite(&ctx, id, 4).expect("suite runs");
            failures.extend(report_failures(&rep));
            let must_have: &[&str] = match id {
                ExampleId::Ex1 => &["seed_formula(4)"],
                ExampleId::Ex2 => &["seed_formula(4)", "remark_a(4)", "remark_n(4)"],
                ExampleId::Ex3 => &["h_collapse"],
                ExampleId::Ex4 => &[],
            };
            for want in must_have {
                if !rep.clauses.iter().any(|c| &c.id == want) {
                    failures.push(format!("{} q={num}/{den}: clause {want} missing", id.code()));
                }
            }
        }
    }
    finish(
        "criterion 10: four cross-family suites incl. seed formulas, collapse, remark constants, N=4",
        failures,
    );
}

#[test]
fn c11_classical_limit_matches_oracles() {
    let mut failures = Vec::new();
    let ctx = ctx_of(1, 1);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for fam in ALL_FAMILIES {
        let seed = Seed::new(fam, random_values(&mut rng, 6)).expect("valid seed");
        let polys = build_from_seed(&ctx, &seed, 4).expect("members");
        for n in 1..=4usize {
            let second = classical_second_derivative(&polys[n]);
            let want = polys[n - 1].scalar_mul(&defining_constant(&ctx, fam, n));
            if second != want {
                failures.push(format!(
                    "family={fam} n={n}: classical second derivative misses the step relation"
                ));
            }
        }
    }
    let bern = q_number_table(&ctx, NumberKind::Bernoulli, 9).expect("table");
    for n in 0..=9usize {
        if bern[n] != classical_bernoulli(n) {
            failures.push(format!("bernoulli[{n}] != classical value"));
        }
    }
    let tan = q_number_table(&ctx, NumberKind::Tangent, 9).expect("table");
    let tilde = q_number_table(&ctx, NumberKind::EulerTilde, 9).expect("table");
    for k in 0..=4usize {
        let n = 2 * k + 1;
        if tan[n] != classical_tangent(n) {
            failures.push(format!("tangent[{n}] != classical value"));
        }
        if tilde[n] != classical_euler_tilde(n) {
            failures.push(format!("euler_tilde[{n}] != classical value"));
        }
    }
    finish("criterion 11: q=1 collapses to classical derivatives and number tables, n<=4", failures);
}

fn classical_second_derivative(p: &Poly) -> Poly {
    let coeffs = p.coeffs();
    if coeffs.len() < 3 {
        return Poly::zero();
    }
    Poly::from_coeffs(
        (2..coeffs.len()).map(|m| &coeffs[m] * rat_int((m * (m - 1)) as i64)).collect(),
    )
}
