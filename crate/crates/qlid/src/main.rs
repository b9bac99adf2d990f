//! qlid: command-line front end for the exact q-Lidstone toolkit.
//!
//! Rationals cross the boundary as exact "p/q" strings, never floats, and
//! output is byte-identical for identical argument vectors. Exit codes:
//! 0 success / all clauses passed, 1 verification failure (the report is
//! still printed), 2 usage error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use qlidstone::families::{
    example_suite, q_number_table, verify_im_identity, ExampleId, NumberKind, ALL_EXAMPLES,
};
use qlidstone::lidstone::{
    build_from_seed, conjugate_seed, gf_check, verify_family, Family, Seed, ALL_FAMILIES,
};
use qlidstone::qpoly::Poly;
use qlidstone::report::{Report, Status};
use qlidstone::{fmt_rat, parse_rat, rat, rat_int, QContext, Rat};

#[derive(Parser)]
#[command(name = "qlid", version, about = "Exact q-Lidstone polynomial sequences toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build members 0..=n of one family from a seed
    Generate {
        /// Family code: odd1, even1, odd2, even2
        #[arg(long)]
        family: String,
        /// Base as an exact rational in (0, 1], e.g. 2/3 or 1
        #[arg(long)]
        q: String,
        /// Largest member index
        #[arg(long)]
        n: usize,
        /// Comma-separated seed constants (subscripts 0, 2, 4, ...); unit seed if omitted
        #[arg(long)]
        seed: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Conjugate a seed under the family's convolution
    Conjugate {
        /// Family code: odd1, even1, odd2, even2
        #[arg(long)]
        family: String,
        /// Base as an exact rational in (0, 1]
        #[arg(long)]
        q: String,
        /// Largest conjugate half-index
        #[arg(long)]
        n: usize,
        /// Comma-separated seed constants; unit seed if omitted
        #[arg(long)]
        seed: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Emit a number table
    Numbers {
        /// Table kind: qbernoulli, qtangent, qeulertilde
        #[arg(long)]
        kind: String,
        /// Base as an exact rational in (0, 1]
        #[arg(long)]
        q: String,
        /// How many entries of the kind's natural-parity subsequence
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run verification suites, one pass/fail line per clause
    Verify {
        /// Suite: all, odd1, even1, odd2, even2, im, examples
        #[arg(long)]
        suite: String,
        /// Base as an exact rational in (0, 1]
        #[arg(long)]
        q: String,
        /// Largest member index exercised
        #[arg(long)]
        n: usize,
        /// Explicit seed for the family suites (needs n + 2 values)
        #[arg(long)]
        seed: Option<String>,
        /// Seed for the deterministic random sweeps (default 0)
        #[arg(long)]
        rng_seed: Option<u64>,
        /// Random seeds swept per family when no explicit seed is given
        #[arg(long, default_value_t = 3)]
        sweeps: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check the generating-function identities for one family
    GfCheck {
        /// Family code: odd1, even1, odd2, even2
        #[arg(long)]
        family: String,
        /// Base as an exact rational in (0, 1]
        #[arg(long)]
        q: String,
        /// Largest member index exercised
        #[arg(long)]
        n: usize,
        /// Comma-separated seed constants; unit seed if omitted
        #[arg(long)]
        seed: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the cross-family consistency suites
    Examples {
        /// Suite id: ex1, ex2, ex3, ex4, or all
        #[arg(long, default_value = "all")]
        id: String,
        /// Base as an exact rational in (0, 1]
        #[arg(long)]
        q: String,
        /// Largest family index exercised
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

type CliResult<T> = Result<T, String>;

fn run(cmd: Cmd) -> CliResult<bool> {
    match cmd {
        Cmd::Generate { family, q, n, seed, format } => cmd_generate(&family, &q, n, &seed, format),
        Cmd::Conjugate { family, q, n, seed, format } => {
            cmd_conjugate(&family, &q, n, &seed, format)
        }
        Cmd::Numbers { kind, q, n, format } => cmd_numbers(&kind, &q, n, format),
        Cmd::Verify { suite, q, n, seed, rng_seed, sweeps, format } => {
            cmd_verify(&suite, &q, n, &seed, rng_seed, sweeps, format)
        }
        Cmd::GfCheck { family, q, n, seed, format } => cmd_gf_check(&family, &q, n, &seed, format),
        Cmd::Examples { id, q, n, format } => cmd_examples(&id, &q, n, format),
    }
}

fn context(q: &str) -> CliResult<QContext> {
    let v = parse_rat(q).map_err(|e| e.to_string())?;
    QContext::new(v).map_err(|e| e.to_string())
}

fn family_of(code: &str) -> CliResult<Family> {
    Family::parse(code)
        .ok_or_else(|| format!("unknown family '{code}' (expected odd1, even1, odd2, even2)"))
}

fn seed_values(text: &str) -> CliResult<Vec<Rat>> {
    text.split(',').map(|tok| parse_rat(tok.trim()).map_err(|e| e.to_string())).collect()
}

fn unit_values(len: usize) -> Vec<Rat> {
    let mut v = vec![rat_int(0); len];
    v[0] = rat_int(1);
    v
}

fn seed_for(family: Family, text: &Option<String>, need: usize) -> CliResult<Seed> {
    let values = match text {
        Some(s) => seed_values(s)?,
        None => unit_values(need),
    };
    let seed = Seed::new(family, values).map_err(|e| e.to_string())?;
    seed.ensure_len(need).map_err(|e| e.to_string())?;
    Ok(seed)
}

fn random_values(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rat> {
    (0..len)
        .map(|i| {
            let den = rng.gen_range(1..=9i64);
            let num = if i == 0 {
                // leading seed constant must not vanish
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

fn to_pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json rendering cannot fail")
}

fn nonzero_coeffs(p: &Poly) -> Vec<(usize, Rat)> {
    p.coeffs().iter().cloned().enumerate().filter(|(_, c)| *c != rat_int(0)).collect()
}

fn latex_rat(r: &Rat) -> String {
    if r.is_integer() {
        return r.numer().to_string();
    }
    let (sign, abs) = if r < &rat_int(0) { ("-", -r.clone()) } else { ("", r.clone()) };
    format!("{sign}\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
}

fn poly_latex(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (pow, c) in nonzero_coeffs(p).into_iter().rev() {
        let neg = c < rat_int(0);
        let mag = if neg { -c } else { c };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let var = match pow {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{{{pow}}}"),
        };
        if var.is_empty() {
            out.push_str(&latex_rat(&mag));
        } else if mag == rat_int(1) {
            out.push_str(&var);
        } else {
            out.push_str(&format!("{} {var}", latex_rat(&mag)));
        }
    }
    out
}

fn emit_rows(format: Format, key: &str, name: &str, q: &str, rows: &[(usize, Rat)]) {
    match format {
        Format::Json => {
            let mut doc = serde_json::Map::new();
            doc.insert(key.to_string(), json!(name));
            doc.insert("q".to_string(), json!(q));
            doc.insert(
                "rows".to_string(),
                json!(rows
                    .iter()
                    .map(|(n, v)| json!({"n": n, "value": fmt_rat(v)}))
                    .collect::<Vec<_>>()),
            );
            println!("{}", to_pretty(&serde_json::Value::Object(doc)));
        }
        Format::Csv => {
            println!("n,value");
            for (n, v) in rows {
                println!("{n},{}", csv_field(&fmt_rat(v)));
            }
        }
        Format::Latex => {
            println!("\\begin{{tabular}}{{rl}}");
            println!("$n$ & value \\\\");
            for (n, v) in rows {
                println!("{n} & ${}$ \\\\", latex_rat(v));
            }
            println!("\\end{{tabular}}");
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn tex_escape(s: &str) -> String {
    s.replace('_', "\\_")
}

fn emit_reports(format: Format, reports: &[Report]) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(reports).expect("json rendering cannot fail")
        ),
        Format::Csv => {
            println!("suite,family,q,clause,status,residual");
            for r in reports {
                for c in &r.clauses {
                    let status = match c.status {
                        Status::Pass => "pass",
                        Status::Fail => "fail",
                    };
                    println!(
                        "{},{},{},{},{},{}",
                        csv_field(&r.suite),
                        csv_field(r.family.as_deref().unwrap_or("")),
                        csv_field(&r.q),
                        csv_field(&c.id),
                        status,
                        csv_field(c.residual.as_deref().unwrap_or(""))
                    );
                }
            }
        }
        Format::Latex => {
            println!("\\begin{{tabular}}{{llll}}");
            println!("suite & family & clause & status \\\\");
            for r in reports {
                for c in &r.clauses {
                    let status = match c.status {
                        Status::Pass => "pass",
                        Status::Fail => "fail",
                    };
                    println!(
                        "{} & {} & {} & {} \\\\",
                        tex_escape(&r.suite),
                        tex_escape(r.family.as_deref().unwrap_or("--")),
                        tex_escape(&c.id),
                        status
                    );
                }
            }
            println!("\\end{{tabular}}");
        }
    }
}

fn summarize(reports: &[Report]) -> bool {
    let clauses: usize = reports.iter().map(|r| r.clauses.len()).sum();
    let failures: usize = reports.iter().map(|r| r.failures().count()).sum();
    if failures == 0 {
        eprintln!("{} report(s), {clauses} clause(s), all passed", reports.len());
        true
    } else {
        eprintln!("{} report(s), {clauses} clause(s), {failures} FAILED", reports.len());
        false
    }
}

fn cmd_generate(
    family: &str,
    q: &str,
    n: usize,
    seed: &Option<String>,
    format: Format,
) -> CliResult<bool> {
    let fam = family_of(family)?;
    let ctx = context(q)?;
    let seed = seed_for(fam, seed, n + 1)?;
    let polys = build_from_seed(&ctx, &seed, n).map_err(|e| e.to_string())?;
    match format {
        Format::Json => {
            let doc = json!({
                "family": fam.code(),
                "q": fmt_rat(ctx.q()),
                "polys": polys
                    .iter()
                    .enumerate()
                    .map(|(k, p)| {
                        let pairs: Vec<[String; 2]> = nonzero_coeffs(p)
                            .into_iter()
                            .map(|(pow, c)| [pow.to_string(), fmt_rat(&c)])
                            .collect();
                        json!({"n": k, "coeffs": pairs})
                    })
                    .collect::<Vec<_>>(),
            });
            println!("{}", to_pretty(&doc));
        }
        Format::Csv => {
            println!("n,power,coeff");
            for (k, p) in polys.iter().enumerate() {
                for (pow, c) in nonzero_coeffs(p) {
                    println!("{k},{pow},{}", csv_field(&fmt_rat(&c)));
                }
            }
        }
        Format::Latex => {
            println!("\\begin{{align*}}");
            for (k, p) in polys.iter().enumerate() {
                let sep = if k + 1 == polys.len() { "" } else { " \\\\" };
                println!("p_{{{k}}}(z) &= {}{sep}", poly_latex(p));
            }
            println!("\\end{{align*}}");
        }
    }
    Ok(true)
}

fn cmd_conjugate(
    family: &str,
    q: &str,
    n: usize,
    seed: &Option<String>,
    format: Format,
) -> CliResult<bool> {
    let fam = family_of(family)?;
    let ctx = context(q)?;
    let seed = seed_for(fam, seed, n + 1)?;
    let conj = conjugate_seed(&ctx, &seed, n).map_err(|e| e.to_string())?;
    let rows: Vec<(usize, Rat)> =
        conj.values().iter().cloned().enumerate().map(|(m, v)| (2 * m, v)).collect();
    emit_rows(format, "family", fam.code(), &fmt_rat(ctx.q()), &rows);
    Ok(true)
}

fn cmd_numbers(kind: &str, q: &str, n: usize, format: Format) -> CliResult<bool> {
    let k = NumberKind::parse(kind).ok_or_else(|| {
        format!("unknown kind '{kind}' (expected qbernoulli, qtangent, qeulertilde)")
    })?;
    let ctx = context(q)?;
    let start = match k {
        NumberKind::Bernoulli => 0,
        NumberKind::Tangent | NumberKind::EulerTilde => 1,
    };
    let top = if n == 0 { 0 } else { 2 * (n - 1) + start };
    let table = q_number_table(&ctx, k, top).map_err(|e| e.to_string())?;
    let rows: Vec<(usize, Rat)> = (0..n)
        .map(|i| {
            let s = 2 * i + start;
            (s, table[s].clone())
        })
        .collect();
    emit_rows(format, "kind", k.code(), &fmt_rat(ctx.q()), &rows);
    Ok(true)
}

fn cmd_verify(
    suite: &str,
    q: &str,
    n: usize,
    seed: &Option<String>,
    rng_seed: Option<u64>,
    sweeps: usize,
    format: Format,
) -> CliResult<bool> {
    let ctx = context(q)?;
    let families: Vec<Family> = match suite {
        "all" => ALL_FAMILIES.to_vec(),
        "im" | "examples" => Vec::new(),
        code => vec![family_of(code)?],
    };
    let mut reports: Vec<Report> = Vec::new();
    for fam in families {
        match seed {
            Some(_) => {
                let s = seed_for(fam, seed, n + 2)?;
                reports.push(verify_family(&ctx, &s, n).map_err(|e| e.to_string())?);
            }
            None => {
                let mut rng = ChaCha8Rng::seed_from_u64(rng_seed.unwrap_or(0));
                for _ in 0..sweeps {
                    let s = Seed::new(fam, random_values(&mut rng, n + 2))
                        .map_err(|e| e.to_string())?;
                    reports.push(verify_family(&ctx, &s, n).map_err(|e| e.to_string())?);
                }
            }
        }
    }
    if suite == "all" || suite == "im" {
        reports.push(verify_im_identity(&ctx, n).map_err(|e| e.to_string())?);
    }
    if suite == "all" || suite == "examples" {
        for id in ALL_EXAMPLES {
            reports.push(example_suite(&ctx, id, n).map_err(|e| e.to_string())?);
        }
    }
    emit_reports(format, &reports);
    Ok(summarize(&reports))
}

fn cmd_gf_check(
    family: &str,
    q: &str,
    n: usize,
    seed: &Option<String>,
    format: Format,
) -> CliResult<bool> {
    let fam = family_of(family)?;
    let ctx = context(q)?;
    let s = seed_for(fam, seed, n + 1)?;
    let reports = vec![gf_check(&ctx, &s, n).map_err(|e| e.to_string())?];
    emit_reports(format, &reports);
    Ok(summarize(&reports))
}

fn cmd_examples(id: &str, q: &str, n: usize, format: Format) -> CliResult<bool> {
    let ctx = context(q)?;
    let ids: Vec<ExampleId> = if id == "all" {
        ALL_EXAMPLES.to_vec()
    } else {
        vec![ExampleId::parse(id)
            .ok_or_else(|| format!("unknown example id '{id}' (expected ex1..ex4 or all)"))?]
    };
    let reports = ids
        .into_iter()
        .map(|i| example_suite(&ctx, i, n).map_err(|e| e.to_string()))
        .collect::<CliResult<Vec<_>>>()?;
    emit_reports(format, &reports);
    Ok(summarize(&reports))
}
