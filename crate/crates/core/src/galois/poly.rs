//! Dense polynomials over GF(p), coefficients low degree first. A trimmed
//! polynomial has a nonzero leading coefficient; zero is the empty vector.

pub(crate) type Poly = Vec<u64>;

pub(crate) fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

/// Quotient and remainder of `a` by nonzero `b`.
pub(crate) fn divmod(a: &[u64], b: &[u64], p: u64) -> (Poly, Poly) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (vec![], r);
    }
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    let mut q = vec![0u64; r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * lead_inv % p;
        q[shift] = c;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * bi % p) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub(crate) fn rem(a: &[u64], b: &[u64], p: u64) -> Poly {
    divmod(a, b, p).1
}

pub(crate) fn monic(a: Poly, p: u64) -> Poly {
    match a.last() {
        None => a,
        Some(&l) => {
            let inv = inv_mod(l, p);
            a.into_iter().map(|c| c * inv % p).collect()
        }
    }
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(a, p)
}

/// `s` with `s·a ≡ 1 (mod m)`, for `a` coprime to `m`.
pub(crate) fn inv_poly_mod(a: &[u64], m: &[u64], p: u64) -> Option<Poly> {
    let (mut r0, mut r1) = (trim(m.to_vec()), rem(a, m, p));
    let (mut s0, mut s1): (Poly, Poly) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = divmod(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if r0.len() != 1 {
        return None;
    }
    let c = inv_mod(r0[0], p);
    Some(rem(&mul(&s0, &[c], p), m, p))
}

pub(crate) fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Poly {
    rem(&mul(a, b, p), m, p)
}

pub(crate) fn powmod(base: &[u64], mut e: u128, m: &[u64], p: u64) -> Poly {
    let mut r: Poly = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(&r, &b, m, p);
        }
        b = mulmod(&b, &b, m, p);
        e >>= 1;
    }
    r
}

/// Ben-Or's test: a monic `f` of degree `d` is irreducible iff
/// `gcd(x^(p^i) - x, f) = 1` for every `1 <= i <= d/2`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    let d = f.len().saturating_sub(1);
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x: Poly = vec![0, 1];
    let mut h = rem(&x, &f, p);
    for _ in 1..=d / 2 {
        h = powmod(&h, p as u128, &f, p);
        let g = gcd(&sub(&h, &x, p), &f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_irreducibility_checks() {
        // x^2 + 1 splits mod 5, x^2 + 2 does not
        assert!(!is_irreducible(&[1, 0, 1], 5));
        assert!(is_irreducible(&[2, 0, 1], 5));
        // (x^2 + 2)^2 has no roots but is reducible
        let sq = mul(&[2, 0, 1], &[2, 0, 1], 5);
        assert!(!is_irreducible(&sq, 5));
    }

    #[test]
    fn inverse_mod_irreducible() {
        let m = [2, 0, 1];
        let a = [3, 4];
        let inv = inv_poly_mod(&a, &m, 5).unwrap();
        assert_eq!(mulmod(&a, &inv, &m, 5), vec![1]);
    }
}
