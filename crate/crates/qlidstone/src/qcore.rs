//! Exact q-arithmetic primitives.
//!
//! Everything is computed over arbitrary-precision rationals with a fixed
//! rational base q in (0, 1]. The basic quantities:
//!
//! * q-integer     [n]_q  = 1 + q + ... + q^(n-1), with [0]_q = 0
//! * q-factorial   [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1
//! * q-binomial    [n choose k]_q = [n]_q! / ([k]_q! [n-k]_q!)
//!
//! plus the inverse-base bracket [n]_{1/q} = q^(1-n) [n]_q, kept exact for
//! every q (no floating point anywhere). At q = 1 all of these collapse to
//! the classical integer values.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used everywhere in this crate.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational num/den. Panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parse "p/q" or "p" into a rational. Whitespace around the slash is not
/// accepted; the denominator must be nonzero.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::BadRational(s.to_string());
    let t = s.trim();
    match t.split_once('/') {
        None => t.parse::<BigInt>().map(Rat::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let num = p.parse::<BigInt>().map_err(|_| bad())?;
            let den = q.parse::<BigInt>().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(num, den))
        }
    }
}

/// Render a rational as "p/q", or "p" when the denominator is one.
pub fn fmt_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Shared q-arithmetic context: a fixed base and memo tables.
///
/// The base is immutable for the lifetime of the context, so every cached
/// value stays valid. Caches grow on demand. A context is cheap to create;
/// code that wants concurrency uses one context per thread.
pub struct QContext {
    q: Rat,
    ints: RefCell<Vec<Rat>>,
    facts: RefCell<Vec<Rat>>,
    binoms: RefCell<HashMap<(usize, usize), Rat>>,
}

impl QContext {
    /// New context with base q. Rejects q outside (0, 1].
    pub fn new(q: Rat) -> Result<Self> {
        if !q.is_positive() || q > Rat::one() {
            return Err(Error::BaseOutOfRange(fmt_rat(&q)));
        }
        Ok(QContext {
            q,
            ints: RefCell::new(vec![Rat::zero(), Rat::one()]),
            facts: RefCell::new(vec![Rat::one(), Rat::one()]),
            binoms: RefCell::new(HashMap::new()),
        })
    }

    /// The base q.
    pub fn q(&self) -> &Rat {
        &self.q
    }

    /// True when the base is exactly 1 (classical limit).
    pub fn is_classical(&self) -> bool {
        self.q.is_one()
    }

    /// q^e for any integer exponent, exact (negative exponents allowed).
    pub fn q_pow(&self, e: i64) -> Rat {
        self.q.pow(i32::try_from(e).expect("q exponent out of i32 range"))
    }

    /// [n]_q = 1 + q + ... + q^(n-1).
    pub fn q_int(&self, n: usize) -> Rat {
        {
            let ints = self.ints.borrow();
            if n < ints.len() {
                return ints[n].clone();
            }
        }
        let mut ints = self.ints.borrow_mut();
        // extend [k]_q = [k-1]_q + q^(k-1)
        let mut qpow = self.q.pow((ints.len() - 1) as i32);
        while ints.len() <= n {
            let next = ints.last().unwrap() + &qpow;
            ints.push(next);
            qpow *= &self.q;
        }
        ints[n].clone()
    }

    /// [n]_q! = [1]_q [2]_q ... [n]_q.
    pub fn q_factorial(&self, n: usize) -> Rat {
        {
            let facts = self.facts.borrow();
            if n < facts.len() {
                return facts[n].clone();
            }
        }
        self.q_int(n); // warm the integer cache without holding facts
        let mut facts = self.facts.borrow_mut();
        while facts.len() <= n {
            let k = facts.len();
            let next = facts.last().unwrap() * self.q_int(k);
            facts.push(next);
        }
        facts[n].clone()
    }

    /// Gaussian binomial [n choose k]_q; zero for k < 0 or k > n.
    ///
    /// k is signed so that sum skeletons may index k-1 at k = 0 and get 0.
    pub fn q_binomial(&self, n: usize, k: i64) -> Rat {
        if k < 0 || k as usize > n {
            return Rat::zero();
        }
        let k = k as usize;
        let key = (n, k.min(n - k)); // symmetry [n,k] = [n,n-k]
        if let Some(v) = self.binoms.borrow().get(&key) {
            return v.clone();
        }
        let v = self.q_factorial(n) / (self.q_factorial(key.1) * self.q_factorial(n - key.1));
        self.binoms.borrow_mut().insert(key, v.clone());
        v
    }

    /// Inverse-base bracket [n]_{1/q} = q^(1-n) [n]_q, exact for all q in (0,1].
    pub fn q_int_inverse_base(&self, n: usize) -> Rat {
        if n == 0 {
            return Rat::zero();
        }
        self.q_pow(1 - n as i64) * self.q_int(n)
    }

    /// Inverse-base factorial [n]_{1/q}! = q^(-n(n-1)/2) [n]_q!.
    pub fn q_factorial_inverse_base(&self, n: usize) -> Rat {
        let e = (n as i64) * (n as i64 - 1) / 2;
        self.q_pow(-e) * self.q_factorial(n)
    }
}
