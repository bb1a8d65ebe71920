//! Exact evaluation of the Paley index bounds. Iterated logarithms are
//! resolved by integer power comparisons only.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `⌈log_3 log_q x⌉` for integers `q >= 2`, `x >= 2`: the least integer `n`
/// (possibly negative) with `3^n >= log_q x`.
pub fn ceil_log3_log(q: &BigUint, x: &BigUint) -> Result<BigInt> {
    if *q < BigUint::from(2u32) {
        return Err(Error::Parameter(format!("logarithm base must be at least 2, got {q}")));
    }
    if *x <= BigUint::one() {
        return Err(Error::Parameter(format!("log_q {x} is not positive, so its logarithm is undefined")));
    }
    if x <= q {
        // n = -j is admissible iff x^(3^j) <= q
        let mut j = 0i64;
        let mut t = x.clone();
        loop {
            t = &t * &t * &t;
            if t > *q {
                return Ok(BigInt::from(-j));
            }
            j += 1;
        }
    }
    let mut n = 0i64;
    let mut t = q.clone();
    while t < *x {
        t = &t * &t * &t;
        n += 1;
    }
    Ok(BigInt::from(n))
}

fn check_q(q: u64) -> Result<()> {
    if q < 3 || q.is_multiple_of(2) {
        return Err(Error::Parameter(format!("q must be an odd prime power >= 3, got {q}")));
    }
    Ok(())
}

fn central_binomial(q: &BigUint) -> BigUint {
    let n = q - 1u32;
    let half = &n / 2u32;
    let mut acc = BigUint::one();
    let mut i = BigUint::zero();
    while i < half {
        // C(n, i+1) = C(n, i) * (n - i) / (i + 1)
        acc *= &n - &i;
        i += 1u32;
        acc /= &i;
    }
    acc
}

/// `⌈log_3 log_q((k-1) 2^(k-2))⌉`, the trivial induced-index bound for
/// graphs of order `k`.
pub fn thm52(q: u64, k: u64) -> Result<BigInt> {
    check_q(q)?;
    if k <= 2 {
        return Err(Error::Parameter(format!("order k must be at least 3, got {k}")));
    }
    let x = BigUint::from(k - 1) << (k - 2);
    ceil_log3_log(&BigUint::from(q), &x)
}

/// `((q-3) C(q-1, (q-1)/2) + 3)^2`.
pub fn lemma54(q: u64) -> Result<BigUint> {
    check_q(q)?;
    let qb = BigUint::from(q);
    let inner = (&qb - 3u32) * central_binomial(&qb) + 3u32;
    Ok(&inner * &inner)
}

/// `(2^q (q-2) C(q-1, (q-1)/2) + 3)^2`.
pub fn lemma58(q: u64) -> Result<BigUint> {
    check_q(q)?;
    let qb = BigUint::from(q);
    let inner = (((&qb - 2u32) * central_binomial(&qb)) << q) + 3u32;
    Ok(&inner * &inner)
}

/// `⌈log_3 log_q k⌉`, the trivial subgraph-index bound.
pub fn upper_bs(q: u64, k: u64) -> Result<BigInt> {
    check_q(q)?;
    if k <= 1 {
        return Err(Error::Parameter(format!("order k must be at least 2, got {k}")));
    }
    ceil_log3_log(&BigUint::from(q), &BigUint::from(k))
}

const MAX_SERIES_BASE: u64 = 1 << 16;

fn series_base(q: u64, m: u32) -> Result<u64> {
    check_q(q)?;
    let qm = 3u32
        .checked_pow(m)
        .and_then(|e| q.checked_pow(e))
        .filter(|&v| v <= MAX_SERIES_BASE)
        .ok_or_else(|| Error::capacity("q^(3^m)", u64::MAX, MAX_SERIES_BASE))?;
    Ok(qm)
}

/// Induced-index bound for `K_{k1,k2}`, `C_{2k1}`, `P_{k1+k2-1}` with
/// `Q = q^(3^m)`: `⌈log_3 log_q((Q-3) C(Q-1,(Q-1)/2) + 3)⌉`.
pub fn thm17_bipartite(q: u64, m: u32) -> Result<BigInt> {
    let big_q = BigUint::from(series_base(q, m)?);
    let x = (&big_q - 3u32) * central_binomial(&big_q) + 3u32;
    ceil_log3_log(&BigUint::from(q), &x)
}

/// Induced-index bound for `C_{2k1+1}`:
/// `⌈log_3 log_q(2^Q (Q-2) C(Q-1,(Q-1)/2) + 3)⌉`.
pub fn thm17_odd_cycle(q: u64, m: u32) -> Result<BigInt> {
    let qm = series_base(q, m)?;
    let big_q = BigUint::from(qm);
    let x = (((&big_q - 2u32) * central_binomial(&big_q)) << qm) + 3u32;
    ceil_log3_log(&BigUint::from(q), &x)
}

/// The least `n >= 0` with `(q^2)^(3^n) >= k`: the level of the series
/// `P((q^2)^(3^n))` whose order first reaches `k`.
pub fn paley_order_level(q: u64, k: u64) -> u32 {
    let target = BigUint::from(k);
    let mut t = BigUint::from(q) * BigUint::from(q);
    let mut n = 0;
    while t < target {
        t = &t * &t * &t;
        n += 1;
    }
    n
}
