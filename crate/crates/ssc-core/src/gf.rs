//! Exact finite fields GF(p^n) as polynomial quotient rings.
//!
//! The modulus is pinned deterministically: among all monic irreducible
//! polynomials of degree n over GF(p), take the one whose coefficient tuple
//! (a_{n-1}, ..., a_1, a_0) below the leading 1 is lexicographically
//! smallest. Equivalently: the candidate with the smallest integer encoding
//! sum(a_i * p^i). No lookup tables, fully reproducible.
//!
//! Elements are coefficient vectors of length n with entries in [0, p).
//! The canonical enumeration order of elements is by integer encoding
//! sum(a_i * p^i); "lexicographically smallest element" below always means
//! smallest in that order.

use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("GF({base_p}^{base_n}) is not a subfield of GF({top_p}^{top_n})")]
    NotASubfield {
        base_p: u64,
        base_n: usize,
        top_p: u64,
        top_n: usize,
    },
    #[error("field order p^n does not fit in 128 bits")]
    FieldTooLarge,
}

/// A finite field GF(p^n) with a deterministic modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Field {
    p: u64,
    n: usize,
    /// Field order p^n.
    q: u128,
    /// Monic modulus, little-endian coefficients, length n+1.
    modulus: Vec<u64>,
}

/// An element of a [`Field`], as a little-endian coefficient vector of
/// length `n`. Operations live on the field object; an element is only
/// meaningful relative to the field that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FieldElem {
    coeffs: Vec<u64>,
}

impl FieldElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})/{}", self.p, self.n, poly_display(&self.modulus))
    }
}

fn poly_display(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let t = match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}x^{i}"),
        };
        terms.push(t);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= p) {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

// --- dense polynomial arithmetic over GF(p), little-endian Vec<u64> ---

fn ptrim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn pdeg(a: &[u64]) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
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
    ptrim(&mut out);
    out
}

fn psub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    ptrim(&mut out);
    out
}

fn modinv_u64(a: u64, p: u64) -> u64 {
    // extended Euclid on integers; p prime, a != 0 mod p
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let quo = r / new_r;
        (t, new_t) = (new_t, t - quo * new_t);
        (r, new_r) = (new_r, r - quo * new_r);
    }
    assert_eq!(r, 1, "not invertible");
    (t.rem_euclid(p as i128)) as u64
}

/// Remainder of a modulo b (b nonzero), over GF(p).
fn prem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = pdeg(b).expect("division by zero polynomial");
    let lead_inv = modinv_u64(b[db], p);
    let mut r = a.to_vec();
    ptrim(&mut r);
    while let Some(dr) = pdeg(&r) {
        if dr < db {
            break;
        }
        let factor = (r[dr] * lead_inv) % p;
        let shift = dr - db;
        for (i, &bc) in b.iter().enumerate() {
            let sub = (factor * bc) % p;
            r[i + shift] = (r[i + shift] + p - sub) % p;
        }
        ptrim(&mut r);
    }
    r
}

fn pgcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    ptrim(&mut x);
    ptrim(&mut y);
    while !y.is_empty() {
        let r = prem(&x, &y, p);
        x = y;
        y = r;
    }
    // normalize monic
    if let Some(d) = pdeg(&x) {
        let inv = modinv_u64(x[d], p);
        for c in &mut x {
            *c = (*c * inv) % p;
        }
    }
    x
}

fn pmulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    prem(&pmul(a, b, p), f, p)
}

/// x^e mod f over GF(p), e as u128.
fn xpowmod(mut e: u128, f: &[u64], p: u64) -> Vec<u64> {
    let mut base = prem(&[0, 1], f, p);
    let mut acc = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            acc = pmulmod(&acc, &base, f, p);
        }
        base = pmulmod(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

fn prime_factors(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Monic f of degree n >= 1 over GF(p): irreducible iff x^(p^n) == x mod f
/// and gcd(x^(p^(n/r)) - x, f) = 1 for every prime r | n.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = f.len() - 1;
    let q = match (p as u128).checked_pow(n as u32) {
        Some(q) => q,
        None => return false,
    };
    let xporn = xpowmod(q, f, p);
    let x = prem(&[0, 1], f, p);
    if xporn != x {
        return false;
    }
    for r in prime_factors(n as u128) {
        let e = (p as u128).pow((n as u128 / r) as u32);
        let g = psub(&xpowmod(e, f, p), &x, p);
        let d = pgcd(&g, f, p);
        if pdeg(&d) != Some(0) {
            return false;
        }
    }
    true
}

impl Field {
    /// Construct GF(p^n) with the deterministic modulus.
    pub fn new(p: u64, n: usize) -> Result<Field, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if n == 0 {
            return Err(GfError::DegreeZero);
        }
        let q = (p as u128)
            .checked_pow(n as u32)
            .ok_or(GfError::FieldTooLarge)?;
        let modulus = if n == 1 {
            vec![0, 1] // x itself
        } else {
            Self::smallest_irreducible(p, n)
        };
        Ok(Field { p, n, q, modulus })
    }

    fn smallest_irreducible(p: u64, n: usize) -> Vec<u64> {
        // enumerate lower coefficient tuples by integer encoding
        let count = (p as u128).pow(n as u32);
        for k in 0..count {
            let mut f = vec![0u64; n + 1];
            let mut rem = k;
            for c in f.iter_mut().take(n) {
                *c = (rem % p as u128) as u64;
                rem /= p as u128;
            }
            f[n] = 1;
            if is_irreducible(&f, p) {
                return f;
            }
        }
        unreachable!("an irreducible polynomial of every degree exists over GF(p)")
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u128 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            coeffs: vec![0; self.n],
        }
    }

    pub fn one(&self) -> FieldElem {
        self.from_u64(1)
    }

    /// The scalar c mod p as a constant element.
    pub fn from_u64(&self, c: u64) -> FieldElem {
        let mut coeffs = vec![0; self.n];
        coeffs[0] = c % self.p;
        FieldElem { coeffs }
    }

    /// Element from arbitrary little-endian coefficients (reduced mod p,
    /// truncated/padded to length n; callers pass length <= n).
    pub fn from_coeffs(&self, cs: &[u64]) -> FieldElem {
        assert!(cs.len() <= self.n, "coefficient vector longer than degree");
        let mut coeffs = vec![0; self.n];
        for (i, &c) in cs.iter().enumerate() {
            coeffs[i] = c % self.p;
        }
        FieldElem { coeffs }
    }

    /// The element with integer encoding k = sum(a_i p^i), 0 <= k < q.
    pub fn elem(&self, k: u128) -> FieldElem {
        debug_assert!(k < self.q);
        let mut coeffs = vec![0u64; self.n];
        let mut rem = k;
        for c in coeffs.iter_mut() {
            *c = (rem % self.p as u128) as u64;
            rem /= self.p as u128;
        }
        FieldElem { coeffs }
    }

    pub fn index_of(&self, a: &FieldElem) -> u128 {
        let mut k = 0u128;
        for &c in a.coeffs.iter().rev() {
            k = k * self.p as u128 + c as u128;
        }
        k
    }

    /// All elements in canonical (integer-encoding) order. Only call on
    /// fields small enough to enumerate.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.q).map(|k| self.elem(k))
    }

    /// All nonzero elements in canonical order.
    pub fn units(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (1..self.q).map(|k| self.elem(k))
    }

    pub fn is_zero(&self, a: &FieldElem) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.check(a);
        self.check(b);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        FieldElem { coeffs }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.check(a);
        self.check(b);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect();
        FieldElem { coeffs }
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        self.sub(&self.zero(), a)
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.check(a);
        self.check(b);
        let prod = pmulmod(&a.coeffs, &b.coeffs, &self.modulus, self.p);
        self.from_coeffs(&prod)
    }

    /// Multiply by an integer scalar (image of c in the prime field).
    pub fn scalar_mul(&self, c: u64, a: &FieldElem) -> FieldElem {
        let c = c % self.p;
        let coeffs = a.coeffs.iter().map(|&x| (x * c) % self.p).collect();
        FieldElem { coeffs }
    }

    pub fn inv(&self, a: &FieldElem) -> FieldElem {
        assert!(!self.is_zero(a), "inverse of zero");
        // extended Euclid in GF(p)[x] for a * s == 1 mod modulus
        let p = self.p;
        let mut r0 = self.modulus.clone();
        let mut r1 = a.coeffs.clone();
        ptrim(&mut r1);
        let mut s0: Vec<u64> = Vec::new();
        let mut s1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            // r0 = q*r1 + r, with synthetic division
            let d1 = pdeg(&r1).unwrap();
            let lead_inv = modinv_u64(r1[d1], p);
            let mut quo: Vec<u64> = vec![0; r0.len().saturating_sub(r1.len()) + 1];
            let mut rem = r0.clone();
            while let Some(dr) = pdeg(&rem) {
                if dr < d1 {
                    break;
                }
                let factor = (rem[dr] * lead_inv) % p;
                let shift = dr - d1;
                quo[shift] = factor;
                for (i, &bc) in r1.iter().enumerate() {
                    let sub = (factor * bc) % p;
                    rem[i + shift] = (rem[i + shift] + p - sub) % p;
                }
                ptrim(&mut rem);
            }
            ptrim(&mut quo);
            let s_new = psub(&s0, &pmul(&quo, &s1, p), p);
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s_new;
        }
        // r0 = gcd (a unit, degree 0 since modulus irreducible and a != 0)
        assert_eq!(pdeg(&r0), Some(0), "gcd with irreducible modulus must be 1");
        let scale = modinv_u64(r0[0], p);
        let mut out = s0;
        for c in &mut out {
            *c = (*c * scale) % p;
        }
        self.from_coeffs(&out)
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.mul(a, &self.inv(b))
    }

    pub fn pow(&self, a: &FieldElem, mut e: u128) -> FieldElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn frobenius(&self, a: &FieldElem) -> FieldElem {
        self.pow(a, self.p as u128)
    }

    /// Multiplicative order of a unit.
    pub fn mult_order(&self, a: &FieldElem) -> u128 {
        assert!(!self.is_zero(a));
        let mut ord = self.q - 1;
        for r in prime_factors(self.q - 1) {
            while ord.is_multiple_of(r) && self.pow(a, ord / r) == self.one() {
                ord /= r;
            }
        }
        ord
    }

    /// Smallest unit (canonical order) generating the multiplicative group.
    pub fn primitive_element(&self) -> FieldElem {
        for u in self.units() {
            if self.mult_order(&u) == self.q - 1 {
                return u;
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    /// Relative trace down to `base`: Tr(x) = sum of x^(q_base^i) over
    /// i = 0..m-1 where m = [self : base]. The result is returned in
    /// base-field coordinates.
    pub fn trace_to_subfield(&self, x: &FieldElem, base: &Field) -> Result<FieldElem, GfError> {
        let m = self.subfield_index(base)?;
        let mut acc = self.zero();
        let mut term = x.clone();
        for _ in 0..m {
            acc = self.add(&acc, &term);
            term = self.pow(&term, base.q);
        }
        // acc lies in the embedded copy of base; pull it back
        let emb = Embedding::new(base, self)?;
        Ok(emb.preimage(&acc).expect("trace must land in the subfield"))
    }

    fn subfield_index(&self, base: &Field) -> Result<usize, GfError> {
        if base.p != self.p || !self.n.is_multiple_of(base.n) {
            return Err(GfError::NotASubfield {
                base_p: base.p,
                base_n: base.n,
                top_p: self.p,
                top_n: self.n,
            });
        }
        Ok(self.n / base.n)
    }

    fn check(&self, a: &FieldElem) {
        debug_assert_eq!(a.coeffs.len(), self.n, "element from a different field");
    }
}

/// The fixed embedding of one field into a larger one: the base generator is
/// sent to the root of the base modulus in the top field with the smallest
/// canonical encoding. Fixed once per (base, top) pair; the identity when the
/// two fields coincide.
#[derive(Debug, Clone)]
pub struct Embedding {
    base: Field,
    top: Field,
    /// Images of the base power basis 1, g, g^2, ..., g^(base.n - 1).
    powers: Vec<FieldElem>,
}

impl Embedding {
    pub fn new(base: &Field, top: &Field) -> Result<Embedding, GfError> {
        let m = top.subfield_index(base)?;
        let gen_image = if m == 1 {
            // identity embedding: same deterministic modulus, same field
            top.from_coeffs(&[0, 1][..top.n.min(2)])
        } else {
            Self::smallest_root(base, top)
        };
        let mut powers = Vec::with_capacity(base.n);
        let mut acc = top.one();
        for _ in 0..base.n {
            powers.push(acc.clone());
            acc = top.mul(&acc, &gen_image);
        }
        Ok(Embedding {
            base: base.clone(),
            top: top.clone(),
            powers,
        })
    }

    fn smallest_root(base: &Field, top: &Field) -> FieldElem {
        // exhaustive scan in canonical order; the first root is the smallest
        for cand in top.elements() {
            // evaluate base.modulus at cand via Horner, coefficients as scalars
            let mut acc = top.zero();
            for &c in base.modulus.iter().rev() {
                acc = top.mul(&acc, &cand);
                acc = top.add(&acc, &top.from_u64(c));
            }
            if top.is_zero(&acc) {
                return cand;
            }
        }
        unreachable!("the base modulus splits in any extension of its splitting field")
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn top(&self) -> &Field {
        &self.top
    }

    pub fn apply(&self, x: &FieldElem) -> FieldElem {
        let mut acc = self.top.zero();
        for (i, pw) in self.powers.iter().enumerate() {
            let c = x.coeffs()[i];
            if c != 0 {
                acc = self.top.add(&acc, &self.top.scalar_mul(c, pw));
            }
        }
        acc
    }

    /// Solve apply(y) = x; None when x is outside the embedded subfield.
    pub fn preimage(&self, x: &FieldElem) -> Option<FieldElem> {
        // linear system over GF(p): columns are the power images
        let p = self.top.p;
        let rows = self.top.n;
        let cols = self.base.n;
        let mut m: Vec<Vec<u64>> = vec![vec![0; cols + 1]; rows];
        for (j, pw) in self.powers.iter().enumerate() {
            for i in 0..rows {
                m[i][j] = pw.coeffs()[i];
            }
        }
        for i in 0..rows {
            m[i][cols] = x.coeffs()[i];
        }
        // Gaussian elimination
        let mut pivot_row = 0usize;
        let mut pivots = Vec::new();
        for col in 0..cols {
            let Some(r) = (pivot_row..rows).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(pivot_row, r);
            let inv = modinv_u64(m[pivot_row][col], p);
            for v in m[pivot_row].iter_mut() {
                *v = (*v * inv) % p;
            }
            for r2 in 0..rows {
                if r2 != pivot_row && m[r2][col] != 0 {
                    let f = m[r2][col];
                    for c2 in 0..=cols {
                        let sub = (f * m[pivot_row][c2]) % p;
                        m[r2][c2] = (m[r2][c2] + p - sub) % p;
                    }
                }
            }
            pivots.push((pivot_row, col));
            pivot_row += 1;
        }
        // consistency: zero rows must carry zero rhs
        for r in pivot_row..rows {
            if m[r][cols] != 0 {
                return None;
            }
        }
        let mut y = vec![0u64; cols];
        for &(r, c) in &pivots {
            y[c] = m[r][cols];
        }
        Some(self.base.from_coeffs(&y))
    }
}
