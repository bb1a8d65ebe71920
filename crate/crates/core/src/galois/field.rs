use std::fmt;

use serde_json::{json, Value};

use super::poly::{self, Poly};
use crate::error::{Error, Result};

/// Largest field order that can be constructed.
pub const MAX_FIELD_ORDER: u64 = 1 << 31;
/// Fields up to this order get discrete log tables.
pub const TABLE_LIMIT: u64 = 1 << 21;

/// GF(p^d) described by a monic irreducible modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub p: u64,
    pub d: u32,
    /// Low-degree-first coefficients, length `d + 1`, leading coefficient 1.
    pub modulus: Vec<u64>,
}

impl FieldSpec {
    pub fn new(p: u64, d: u32, modulus: Vec<u64>) -> Result<Self> {
        check_prime_power(p, d)?;
        if modulus.len() != d as usize + 1 || modulus.last() != Some(&1) {
            return Err(Error::Parameter(format!("modulus must be monic of degree {d}")));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::Parameter(format!("modulus coefficients must lie in 0..{p}")));
        }
        if !poly::is_irreducible(&modulus, p) {
            return Err(Error::Parameter(format!("modulus {modulus:?} is reducible over GF({p})")));
        }
        Ok(FieldSpec { p, d, modulus })
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.d)
    }

    pub fn to_json(&self) -> Value {
        json!({ "p": self.p, "d": self.d, "modulus": self.modulus })
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|i| i * i <= n).all(|i| !n.is_multiple_of(i))
}

fn check_prime_power(p: u64, d: u32) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::Parameter(format!("characteristic must be an odd prime, got {p}")));
    }
    if d == 0 {
        return Err(Error::Parameter("extension degree must be at least 1".into()));
    }
    match p.checked_pow(d) {
        Some(q) if q <= MAX_FIELD_ORDER => Ok(()),
        _ => Err(Error::capacity("field order", p.checked_pow(d).unwrap_or(u64::MAX), MAX_FIELD_ORDER)),
    }
}

/// The lexicographically least monic irreducible polynomial of degree `d`
/// over GF(p), comparing coefficients from the constant term up.
pub fn find_irreducible(p: u64, d: u32) -> Result<FieldSpec> {
    check_prime_power(p, d)?;
    let q = p.pow(d);
    for t in 0..q {
        let mut modulus: Poly = (0..d).map(|i| t / p.pow(d - 1 - i) % p).collect();
        modulus.push(1);
        if poly::is_irreducible(&modulus, p) {
            return Ok(FieldSpec { p, d, modulus });
        }
    }
    Err(Error::Internal(format!("no irreducible polynomial of degree {d} over GF({p})")))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// An element of a [`Field`], identified by its index in the deterministic
/// element order. The index is `Σ c_i p^(d-1-i)` for the residue
/// `Σ c_i x^i`, so comparing indices compares coefficient sequences
/// lexicographically from the constant term up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub u32);

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Arithmetic in GF(p^d).
pub struct Field {
    spec: FieldSpec,
    q: u64,
    place: Vec<u64>,
    primitive: FieldElement,
    // exp[i] = g^i for the primitive element g; log is its inverse (log[0] unused)
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.spec.p, self.spec.d, self.spec.modulus)
    }
}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Field> {
        check_prime_power(spec.p, spec.d)?;
        let q = spec.order();
        let place = (0..spec.d).map(|i| spec.p.pow(spec.d - 1 - i)).collect();
        let mut field = Field {
            spec,
            q,
            place,
            primitive: FieldElement(0),
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.primitive = field.search_primitive();
        if q <= TABLE_LIMIT {
            let mut exp = Vec::with_capacity(q as usize - 1);
            let mut log = vec![0u32; q as usize];
            let mut cur = field.one();
            for i in 0..q - 1 {
                exp.push(cur.0);
                log[cur.0 as usize] = i as u32;
                cur = field.mul_slow(cur, field.primitive);
            }
            field.exp = exp;
            field.log = log;
        }
        Ok(field)
    }

    /// GF(p^d) with the modulus from [`find_irreducible`].
    pub fn of_order(p: u64, d: u32) -> Result<Field> {
        Field::new(find_irreducible(p, d)?)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.spec.d
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(self.place[0] as u32)
    }

    /// The prime-field element `c mod p`.
    pub fn constant(&self, c: u64) -> FieldElement {
        FieldElement((c % self.spec.p * self.place[0]) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q as u32).map(FieldElement)
    }

    pub fn element(&self, index: u64) -> Result<FieldElement> {
        if index >= self.q {
            return Err(Error::Parameter(format!("element index {index} outside GF({})", self.q)));
        }
        Ok(FieldElement(index as u32))
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.spec.d as usize {
            return Err(Error::Parameter(format!(
                "{} coefficients given for a degree-{} field",
                coeffs.len(),
                self.spec.d
            )));
        }
        let idx = coeffs
            .iter()
            .zip(&self.place)
            .map(|(&c, &w)| (c % self.spec.p) * w)
            .sum::<u64>();
        Ok(FieldElement(idx as u32))
    }

    /// Residue coefficients, constant term first, always `d` entries.
    pub fn coeffs(&self, e: FieldElement) -> Vec<u64> {
        self.place
            .iter()
            .map(|&w| e.0 as u64 / w % self.spec.p)
            .collect()
    }

    pub fn element_json(&self, e: FieldElement) -> Value {
        json!(self.coeffs(e))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.spec.p;
        if self.spec.d == 1 {
            return FieldElement(((a.0 as u64 + b.0 as u64) % p) as u32);
        }
        let (mut x, mut y, mut out, mut w) = (a.0 as u64, b.0 as u64, 0u64, 1u64);
        for _ in 0..self.spec.d {
            out += (x % p + y % p) % p * w;
            x /= p;
            y /= p;
            w *= p;
        }
        FieldElement(out as u32)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.spec.p;
        let (mut x, mut out, mut w) = (a.0 as u64, 0u64, 1u64);
        for _ in 0..self.spec.d {
            out += (p - x % p) % p * w;
            x /= p;
            w *= p;
        }
        FieldElement(out as u32)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.spec.p;
        if self.spec.d == 1 {
            return FieldElement(((a.0 as u64 + p - b.0 as u64) % p) as u32);
        }
        let (mut x, mut y, mut out, mut w) = (a.0 as u64, b.0 as u64, 0u64, 1u64);
        for _ in 0..self.spec.d {
            out += (x % p + p - y % p) % p * w;
            x /= p;
            y /= p;
            w *= p;
        }
        FieldElement(out as u32)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        if self.exp.is_empty() {
            return self.mul_slow(a, b);
        }
        let n = self.q as usize - 1;
        let s = self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize;
        FieldElement(self.exp[if s >= n { s - n } else { s }])
    }

    fn to_poly(&self, a: FieldElement) -> Poly {
        poly::trim(self.coeffs(a))
    }

    fn from_poly(&self, a: &[u64]) -> FieldElement {
        self.from_coeffs(a).expect("reduced residue")
    }

    fn mul_slow(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.spec.p;
        let prod = poly::mulmod(&self.to_poly(a), &self.to_poly(b), &self.spec.modulus, p);
        self.from_poly(&prod)
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero { q: self.q });
        }
        let inv = poly::inv_poly_mod(&self.to_poly(a), &self.spec.modulus, self.spec.p)
            .ok_or_else(|| Error::Internal("nonzero residue not invertible".into()))?;
        Ok(self.from_poly(&inv))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, e: u128) -> FieldElement {
        if e == 0 {
            return self.one();
        }
        if a.0 == 0 {
            return a;
        }
        if !self.exp.is_empty() {
            let n = self.q as u128 - 1;
            let l = self.log[a.0 as usize] as u128 * (e % n) % n;
            return FieldElement(self.exp[l as usize]);
        }
        let r = poly::powmod(&self.to_poly(a), e, &self.spec.modulus, self.spec.p);
        self.from_poly(&r)
    }

    /// Quadratic character: `Some(true)` for nonzero squares, `Some(false)`
    /// for non-squares, `None` for zero.
    pub fn is_square(&self, a: FieldElement) -> Option<bool> {
        if a.0 == 0 {
            return None;
        }
        if !self.log.is_empty() {
            return Some(self.log[a.0 as usize].is_multiple_of(2));
        }
        Some(self.pow(a, (self.q as u128 - 1) / 2) == self.one())
    }

    /// The least element of multiplicative order `q - 1`.
    pub fn primitive_element(&self) -> FieldElement {
        self.primitive
    }

    pub fn is_primitive(&self, a: FieldElement) -> bool {
        if a.0 == 0 {
            return false;
        }
        let n = self.q - 1;
        let one = self.one();
        let slow_pow = |e: u64| {
            let r = poly::powmod(&self.to_poly(a), e as u128, &self.spec.modulus, self.spec.p);
            self.from_poly(&r)
        };
        slow_pow(n) == one && prime_factors(n).into_iter().all(|r| slow_pow(n / r) != one)
    }

    fn search_primitive(&self) -> FieldElement {
        self.elements()
            .find(|&a| self.is_primitive(a))
            .expect("the multiplicative group is cyclic")
    }
}
