//! Exact arithmetic in small finite fields `GF(p^k)`, `p^k <= 2^16`.
//!
//! Elements are stored as the integer encoding of their coefficient vector
//! over the prime field (low-degree coefficient least significant, base `p`).
//! The defining polynomial of each field is the lexicographically smallest
//! monic irreducible of degree `k` over `GF(p)`, comparing coefficients
//! low-degree-first, so every run and every implementation agrees on the
//! element encoding.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub const MAX_ORDER: u32 = 1 << 16;

/// Trial-division primality check, adequate for `p < 2^16`.
pub fn is_prime_u32(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Ascending list of distinct prime factors.
pub fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
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

// ---------------------------------------------------------------------------
// dense polynomial arithmetic over the prime field GF(p)
// (used for the defining-polynomial search and element inversion)
// ---------------------------------------------------------------------------

fn pf_trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pf_deg(v: &[u32]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

fn pf_inv_scalar(p: u32, a: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    // Fermat: a^(p-2) mod p
    let mut base = (a % p) as u64;
    let mut e = p - 2;
    let mut acc = 1u64;
    let m = p as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u32
}

fn pf_sub(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out = vec![0u32; n];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = *a.get(i).unwrap_or(&0);
        let y = *b.get(i).unwrap_or(&0);
        *slot = (x + p - y) % p;
    }
    pf_trim(&mut out);
    out
}

fn pf_mul(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
    pf_trim(&mut out);
    out
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn pf_rem(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
    let md = pf_deg(m).expect("monic modulus");
    debug_assert_eq!(m[md], 1);
    let mut r: Vec<u32> = a.to_vec();
    pf_trim(&mut r);
    while let Some(rd) = pf_deg(&r) {
        if rd < md {
            break;
        }
        let c = r[rd];
        let shift = rd - md;
        for j in 0..=md {
            let t = (c as u64 * m[j] as u64) % p as u64;
            r[shift + j] = ((r[shift + j] as u64 + p as u64 - t) % p as u64) as u32;
        }
        pf_trim(&mut r);
    }
    r
}

fn pf_divrem(p: u32, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let bd = pf_deg(b).expect("nonzero divisor");
    let lead_inv = pf_inv_scalar(p, b[bd]);
    let mut r: Vec<u32> = a.to_vec();
    pf_trim(&mut r);
    let mut q = vec![0u32; a.len().saturating_sub(bd)];
    while let Some(rd) = pf_deg(&r) {
        if rd < bd {
            break;
        }
        let c = (r[rd] as u64 * lead_inv as u64 % p as u64) as u32;
        let shift = rd - bd;
        q[shift] = c;
        for j in 0..=bd {
            let t = (c as u64 * b[j] as u64) % p as u64;
            r[shift + j] = ((r[shift + j] as u64 + p as u64 - t) % p as u64) as u32;
        }
        pf_trim(&mut r);
    }
    pf_trim(&mut q);
    (q, r)
}

fn pf_gcd(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    pf_trim(&mut a);
    pf_trim(&mut b);
    while !b.is_empty() {
        let r = pf_rem(p, &a, &pf_monic(p, &b));
        // scale-free: reduce by the monic image of b to keep values small
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        pf_monic(p, &a)
    }
}

fn pf_monic(p: u32, a: &[u32]) -> Vec<u32> {
    let d = pf_deg(a).expect("nonzero");
    if a[d] == 1 {
        return a.to_vec();
    }
    let inv = pf_inv_scalar(p, a[d]);
    let mut out: Vec<u32> = a.iter().map(|&c| (c as u64 * inv as u64 % p as u64) as u32).collect();
    pf_trim(&mut out);
    out
}

/// Extended Euclid: returns `u` with `u * a = gcd (mod m)`, for `gcd` constant.
fn pf_invert_mod(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
    // invariant: r0 = s0*a (mod m), r1 = s1*a (mod m)
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    pf_trim(&mut r1);
    let mut s0: Vec<u32> = Vec::new();
    let mut s1: Vec<u32> = vec![1];
    while !r1.is_empty() {
        let (q, r) = pf_divrem(p, &r0, &r1);
        let s = pf_sub(p, &s0, &pf_mul(p, &q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    let d = pf_deg(&r0).expect("gcd of nonzero inputs");
    assert_eq!(d, 0, "element not invertible modulo an irreducible polynomial");
    let scale = pf_inv_scalar(p, r0[0]);
    let mut out: Vec<u32> =
        s0.iter().map(|&c| (c as u64 * scale as u64 % p as u64) as u32).collect();
    pf_trim(&mut out);
    pf_rem(p, &out, m)
}

fn pf_powmod(p: u32, base: &[u32], e: u32, m: &[u32]) -> Vec<u32> {
    let mut acc: Vec<u32> = vec![1];
    let mut b = pf_rem(p, base, m);
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = pf_rem(p, &pf_mul(p, &acc, &b), m);
        }
        b = pf_rem(p, &pf_mul(p, &b, &b), m);
        e >>= 1;
    }
    acc
}

/// Deterministic irreducibility test over `GF(p)`: `f` of degree `k` is
/// irreducible iff `x^(p^k) = x (mod f)` and `gcd(x^(p^(k/r)) - x, f) = 1`
/// for every prime `r | k`.
fn pf_is_irreducible(p: u32, f: &[u32]) -> bool {
    let k = match pf_deg(f) {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(k) => k,
    };
    let x: Vec<u32> = vec![0, 1];
    let checkpoints: Vec<usize> = prime_factors(k as u32).iter().map(|&r| k / r as usize).collect();
    let mut h = x.clone();
    for j in 1..=k {
        h = pf_powmod(p, &h, p, f);
        if checkpoints.contains(&j) {
            let g = pf_gcd(p, &pf_sub(p, &h, &x), f);
            if pf_deg(&g) != Some(0) {
                return false;
            }
        }
    }
    h == pf_rem(p, &x, f)
}

// ---------------------------------------------------------------------------
// field context and elements
// ---------------------------------------------------------------------------

/// An element of `GF(q)`, tagged with the order of its owning field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement {
    field: u32,
    value: u32,
}

impl FieldElement {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field_order(&self) -> u32 {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl core::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Discrete log/antilog tables over a fixed generator; an optional
/// multiplication accelerator shared by all clones of a context.
#[derive(Debug)]
struct MulTables {
    /// `log[v]` for `v` in `1..q` (index 0 unused).
    log: Vec<u32>,
    /// `exp[i] = g^i` for `i` in `0..q-1`.
    exp: Vec<u32>,
}

/// A finite field `GF(p^k)` with its deterministic defining polynomial.
///
/// Immutable after construction; all operations are pure. Cloning shares
/// the multiplication tables.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    p: u32,
    k: u32,
    q: u32,
    /// Monic defining polynomial of degree `k` over `GF(p)`, low-to-high.
    modulus: Vec<u32>,
    tables: Option<alloc::sync::Arc<MulTables>>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &FieldCtx) -> bool {
        // (p, k) determines the field and its defining polynomial
        self.p == other.p && self.k == other.k
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    pub fn new(p: u32, k: u32) -> Result<FieldCtx> {
        if !is_prime_u32(p) {
            return Err(Error::NotPrime(p));
        }
        if k < 1 {
            return Err(Error::OrderTooLarge { p, k });
        }
        let q = (p as u64).checked_pow(k).filter(|&q| q <= MAX_ORDER as u64);
        let q = match q {
            Some(q) => q as u32,
            None => return Err(Error::OrderTooLarge { p, k }),
        };
        let modulus = Self::defining_polynomial(p, k as usize);
        let mut ctx = FieldCtx { p, k, q, modulus, tables: None };
        if k > 1 {
            ctx.tables = Some(alloc::sync::Arc::new(ctx.build_tables()));
        }
        Ok(ctx)
    }

    /// Discrete-log tables over the smallest generator; the polynomial path
    /// stays authoritative and is what fills them in.
    fn build_tables(&self) -> MulTables {
        let g = self.nth_root_of_unity(self.q - 1).expect("cyclic unit group");
        let mut log = vec![0u32; self.q as usize];
        let mut exp = vec![0u32; (self.q - 1) as usize];
        let mut acc = self.one();
        for i in 0..(self.q - 1) {
            exp[i as usize] = acc.value;
            log[acc.value as usize] = i;
            acc = self.mul_poly(acc, g);
        }
        MulTables { log, exp }
    }

    /// Smallest monic irreducible of degree `k`, where candidates are ordered
    /// lexicographically by their non-leading coefficients compared
    /// low-degree-first.
    fn defining_polynomial(p: u32, k: usize) -> Vec<u32> {
        if k == 1 {
            return vec![0, 1]; // x
        }
        let mut c = vec![0u32; k];
        loop {
            // cheap filters first: a zero constant term or a prime-field
            // root rules the candidate out before the full test
            let candidate_ok = c[0] != 0 && {
                (0..p).all(|x| {
                    let mut acc = 1u64; // leading coefficient
                    for &ci in c.iter().rev() {
                        acc = (acc * x as u64 + ci as u64) % p as u64;
                    }
                    acc != 0
                })
            };
            if candidate_ok {
                let mut f = c.clone();
                f.push(1);
                if pf_is_irreducible(p, &f) {
                    return f;
                }
            }
            let mut i = k;
            loop {
                assert!(i > 0, "an irreducible polynomial of every degree exists");
                i -= 1;
                c[i] += 1;
                if c[i] < p {
                    break;
                }
                c[i] = 0;
            }
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus_coeffs(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: self.q, value: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { field: self.q, value: 1 }
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value < self.q {
            Ok(FieldElement { field: self.q, value })
        } else {
            Err(Error::BadElementValue { value, order: self.q })
        }
    }

    /// Element from prime-field coordinates, low-degree first.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.k as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::BadElementValue { value: u32::MAX, order: self.q });
        }
        let mut value = 0u32;
        for &c in coeffs.iter().rev() {
            value = value * self.p + c;
        }
        Ok(FieldElement { field: self.q, value })
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        self.check(a);
        let mut v = a.value;
        let mut out = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    fn check(&self, a: FieldElement) {
        assert_eq!(
            a.field, self.q,
            "element of GF({}) used in GF({})",
            a.field, self.q
        );
    }

    fn encode(&self, digits: &[u32]) -> FieldElement {
        let mut value = 0u32;
        for &c in digits.iter().rev() {
            value = value * self.p + c % self.p;
        }
        FieldElement { field: self.q, value }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        if self.k == 1 {
            return FieldElement { field: self.q, value: (a.value + b.value) % self.p };
        }
        let (da, db) = (self.coeffs(a), self.coeffs(b));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.check(a);
        if self.k == 1 {
            return FieldElement { field: self.q, value: (self.p - a.value) % self.p };
        }
        let da = self.coeffs(a);
        let neg: Vec<u32> = da.iter().map(|x| (self.p - x) % self.p).collect();
        self.encode(&neg)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        if self.k == 1 {
            let v = (a.value as u64 * b.value as u64) % self.p as u64;
            return FieldElement { field: self.q, value: v as u32 };
        }
        if let Some(tables) = &self.tables {
            if a.value == 0 || b.value == 0 {
                return self.zero();
            }
            let i = tables.log[a.value as usize] as u64 + tables.log[b.value as usize] as u64;
            let value = tables.exp[(i % (self.q as u64 - 1)) as usize];
            return FieldElement { field: self.q, value };
        }
        self.mul_poly(a, b)
    }

    /// Multiplication through the coefficient polynomials; the reference
    /// route that seeds the tables.
    fn mul_poly(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let prod = pf_mul(self.p, &self.coeffs(a), &self.coeffs(b));
        let red = pf_rem(self.p, &prod, &self.modulus);
        self.encode_padded(&red)
    }

    fn encode_padded(&self, v: &[u32]) -> FieldElement {
        let mut digits = vec![0u32; self.k as usize];
        digits[..v.len()].copy_from_slice(v);
        self.encode(&digits)
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        self.check(a);
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        if self.k == 1 {
            return Ok(FieldElement { field: self.q, value: pf_inv_scalar(self.p, a.value) });
        }
        let mut poly = self.coeffs(a);
        pf_trim(&mut poly);
        let inv = pf_invert_mod(self.p, &poly, &self.modulus);
        Ok(self.encode_padded(&inv))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        self.check(a);
        let mut acc = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.p as u64)
    }

    /// Absolute trace down to `GF(p)`, returned as a residue in `0..p`.
    pub fn absolute_trace(&self, a: FieldElement) -> u32 {
        let mut acc = a;
        let mut t = a;
        for _ in 1..self.k {
            t = self.frobenius(t);
            acc = self.add(acc, t);
        }
        let c = self.coeffs(acc);
        assert!(c[1..].iter().all(|&x| x == 0), "trace must land in the prime field");
        c[0]
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(move |value| FieldElement { field: self.q, value })
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> Result<u32> {
        self.check(a);
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let mut ord = self.q - 1;
        for r in prime_factors(self.q - 1) {
            while ord.is_multiple_of(r) && self.pow(a, (ord / r) as u64) == self.one() {
                ord /= r;
            }
        }
        Ok(ord)
    }

    /// Deterministic primitive n-th root of unity: the element of exact
    /// multiplicative order `n` that is smallest in the encoding order.
    pub fn nth_root_of_unity(&self, n: u32) -> Result<FieldElement> {
        if n < 2 || !(self.q - 1).is_multiple_of(n) {
            return Err(Error::NoRootOfUnity { n, order: self.q });
        }
        let primes = prime_factors(n);
        for value in 1..self.q {
            let el = FieldElement { field: self.q, value };
            if self.pow(el, n as u64) != self.one() {
                continue;
            }
            if primes.iter().all(|&r| self.pow(el, (n / r) as u64) != self.one()) {
                return Ok(el);
            }
        }
        unreachable!("the multiplicative group is cyclic of order q-1")
    }
}

// ---------------------------------------------------------------------------
// embeddings GF(p^k) -> GF(p^(k*t))
// ---------------------------------------------------------------------------

/// A field embedding, fixed by sending the source generator to the smallest
/// root (in encoding order) of the source defining polynomial in the target.
#[derive(Debug, Clone)]
pub struct Embedding {
    src: FieldCtx,
    dst: FieldCtx,
    image: FieldElement,
}

impl Embedding {
    pub fn new(src: &FieldCtx, dst: &FieldCtx) -> Result<Embedding> {
        if src.p != dst.p || !dst.k.is_multiple_of(src.k) {
            return Err(Error::IncompatibleEmbedding { src_order: src.q, dst_order: dst.q });
        }
        let image = (0..dst.q)
            .map(|v| FieldElement { field: dst.q, value: v })
            .find(|&cand| {
                // Horner evaluation of the source modulus at `cand` in `dst`
                let mut acc = dst.zero();
                for &c in src.modulus.iter().rev() {
                    acc = dst.mul(acc, cand);
                    acc = dst.add(acc, FieldElement { field: dst.q, value: c });
                }
                acc.is_zero()
            })
            .expect("the source modulus splits in any field of compatible degree");
        Ok(Embedding { src: src.clone(), dst: dst.clone(), image })
    }

    pub fn source(&self) -> &FieldCtx {
        &self.src
    }

    pub fn target(&self) -> &FieldCtx {
        &self.dst
    }

    pub fn map(&self, a: FieldElement) -> Result<FieldElement> {
        if a.field != self.src.q {
            return Err(Error::FieldMismatch { expected: self.src.q, got: a.field });
        }
        let digits = self.src.coeffs(a);
        let mut acc = self.dst.zero();
        for &c in digits.iter().rev() {
            acc = self.dst.mul(acc, self.image);
            acc = self.dst.add(acc, FieldElement { field: self.dst.q, value: c });
        }
        Ok(acc)
    }
}

/// One-shot embedding of `a` from `src` into `target`.
pub fn embed(a: FieldElement, src: &FieldCtx, target: &FieldCtx) -> Result<FieldElement> {
    Embedding::new(src, target)?.map(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    // deterministic xorshift-style generator for the random-pair checks
    struct Rng(u64);
    impl Rng {
        fn next(&mut self) -> u64 {
            self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            self.0 >> 11
        }
        fn element(&mut self, f: &FieldCtx) -> FieldElement {
            f.element((self.next() % f.order() as u64) as u32).unwrap()
        }
    }

    #[test]
    fn make_field_examples() {
        let f9 = FieldCtx::new(3, 2).unwrap();
        assert_eq!(f9.order(), 9);
        assert_eq!(f9.characteristic(), 3);
        assert_eq!(f9.elements().count(), 9);

        let f2 = FieldCtx::new(2, 1).unwrap();
        assert_eq!(f2.elements().map(|e| e.value()).collect::<Vec<_>>(), vec![0, 1]);

        // the 3 nonzero elements of GF(4) form a cyclic group of order 3
        let f4 = FieldCtx::new(2, 2).unwrap();
        assert_eq!(f4.multiplicative_order(f4.one()).unwrap(), 1);
        for v in 2..4 {
            assert_eq!(f4.multiplicative_order(f4.element(v).unwrap()).unwrap(), 3);
        }
    }

    #[test]
    fn make_field_errors() {
        assert_eq!(FieldCtx::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FieldCtx::new(1, 1).unwrap_err(), Error::NotPrime(1));
        assert!(matches!(FieldCtx::new(2, 17), Err(Error::OrderTooLarge { .. })));
        assert!(matches!(FieldCtx::new(257, 2), Err(Error::OrderTooLarge { .. })));
        assert!(FieldCtx::new(2, 16).is_ok());
    }

    #[test]
    fn defining_polynomials_are_deterministic() {
        assert_eq!(FieldCtx::new(2, 2).unwrap().modulus_coeffs(), &[1, 1, 1]);
        assert_eq!(FieldCtx::new(3, 2).unwrap().modulus_coeffs(), &[1, 0, 1]);
        // lex order low-degree-first picks x^3 + x^2 + 1 over GF(2)
        assert_eq!(FieldCtx::new(2, 3).unwrap().modulus_coeffs(), &[1, 0, 1, 1]);
        assert_eq!(FieldCtx::new(3, 2).unwrap(), FieldCtx::new(3, 2).unwrap());
    }

    #[test]
    fn field_axioms_on_random_triples() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2), (2, 4), (13, 1)] {
            let f = FieldCtx::new(p, k).unwrap();
            let mut rng = Rng(0x9e3779b97f4a7c15 ^ (p as u64) << 8 ^ k as u64);
            for _ in 0..200 {
                let (a, b, c) = (rng.element(&f), rng.element(&f), rng.element(&f));
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.sub(f.add(a, b), b), a);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
            }
        }
    }

    #[test]
    fn fermat_holds_exhaustively_up_to_81() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (13, 1), (3, 4)] {
            let f = FieldCtx::new(p, k).unwrap();
            assert!(f.order() <= 81 || f.order() == 13);
            for a in f.elements() {
                assert_eq!(f.pow(a, f.order() as u64), a);
            }
        }
    }

    #[test]
    fn frobenius_is_additive_and_fixes_exactly_the_prime_subfield() {
        for (p, k) in [(2, 3), (3, 2), (2, 2)] {
            let f = FieldCtx::new(p, k).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
                }
            }
            let fixed = f.elements().filter(|&a| f.frobenius(a) == a).count();
            assert_eq!(fixed as u32, p);
        }
    }

    #[test]
    fn embedding_basics() {
        let f3 = FieldCtx::new(3, 1).unwrap();
        let f9 = FieldCtx::new(3, 2).unwrap();
        let e = Embedding::new(&f3, &f9).unwrap();
        assert_eq!(e.map(f3.zero()).unwrap(), f9.zero());
        assert_eq!(e.map(f3.one()).unwrap(), f9.one());
        // prime-field residues keep their coordinates
        for v in 0..3 {
            assert_eq!(e.map(f3.element(v).unwrap()).unwrap().value(), v);
        }
    }

    #[test]
    fn embedded_generator_keeps_its_order() {
        // a generator of GF(4)* has order 3; so must its image in GF(16)
        let f4 = FieldCtx::new(2, 2).unwrap();
        let f16 = FieldCtx::new(2, 4).unwrap();
        let g = f4.nth_root_of_unity(3).unwrap();
        assert_eq!(f4.multiplicative_order(g).unwrap(), 3);
        let img = embed(g, &f4, &f16).unwrap();
        assert_eq!(f16.multiplicative_order(img).unwrap(), 3);
    }

    #[test]
    fn embedding_is_a_ring_homomorphism() {
        let f4 = FieldCtx::new(2, 2).unwrap();
        let f16 = FieldCtx::new(2, 4).unwrap();
        let e = Embedding::new(&f4, &f16).unwrap();
        for a in f4.elements() {
            for b in f4.elements() {
                assert_eq!(
                    e.map(f4.add(a, b)).unwrap(),
                    f16.add(e.map(a).unwrap(), e.map(b).unwrap())
                );
                assert_eq!(
                    e.map(f4.mul(a, b)).unwrap(),
                    f16.mul(e.map(a).unwrap(), e.map(b).unwrap())
                );
            }
        }
        // image generates a subfield of order 4: exactly the solutions of a^4 = a
        let image: Vec<_> = f4.elements().map(|a| e.map(a).unwrap()).collect();
        for &x in &image {
            assert_eq!(f16.pow(x, 4), x);
        }
        assert_eq!(image.len(), 4);
    }

    #[test]
    fn embeddings_compose_along_towers() {
        let f2 = FieldCtx::new(2, 1).unwrap();
        let f4 = FieldCtx::new(2, 2).unwrap();
        let f16 = FieldCtx::new(2, 4).unwrap();
        let lift = Embedding::new(&f2, &f4).unwrap();
        let upper = Embedding::new(&f4, &f16).unwrap();
        let direct = Embedding::new(&f2, &f16).unwrap();
        for a in f2.elements() {
            assert_eq!(upper.map(lift.map(a).unwrap()).unwrap(), direct.map(a).unwrap());
        }
    }

    #[test]
    fn embedding_errors() {
        let f4 = FieldCtx::new(2, 2).unwrap();
        let f8 = FieldCtx::new(2, 3).unwrap();
        assert!(matches!(
            Embedding::new(&f4, &f8),
            Err(Error::IncompatibleEmbedding { .. })
        ));
    }

    #[test]
    fn roots_of_unity() {
        let f9 = FieldCtx::new(3, 2).unwrap();
        // order-8 root generates the whole multiplicative group
        let z = f9.nth_root_of_unity(8).unwrap();
        let powers: Vec<u32> = (0..8).map(|i| f9.pow(z, i).value()).collect();
        let mut sorted = powers.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 8, "powers must be pairwise distinct");

        // the unique element of order 2 is -1
        let m1 = f9.nth_root_of_unity(2).unwrap();
        assert_eq!(m1, f9.neg(f9.one()));

        let f8 = FieldCtx::new(2, 3).unwrap();
        assert!(matches!(f8.nth_root_of_unity(4), Err(Error::NoRootOfUnity { .. })));
    }

    #[test]
    fn root_of_unity_is_smallest_in_encoding_order() {
        let f9 = FieldCtx::new(3, 2).unwrap();
        let z = f9.nth_root_of_unity(8).unwrap();
        // exhaustive oracle: first element of exact order 8
        let expect = f9
            .elements()
            .find(|&a| !a.is_zero() && f9.multiplicative_order(a).unwrap() == 8)
            .unwrap();
        assert_eq!(z, expect);
    }

    #[test]
    fn table_multiplication_agrees_with_the_polynomial_route() {
        for (p, k) in [(2, 2), (3, 2), (2, 3), (2, 4), (3, 4), (5, 2)] {
            let f = FieldCtx::new(p, k).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul_poly(a, b));
                }
            }
        }
    }

    #[test]
    fn absolute_trace_values() {
        let f4 = FieldCtx::new(2, 2).unwrap();
        assert_eq!(f4.absolute_trace(f4.zero()), 0);
        assert_eq!(f4.absolute_trace(f4.one()), 0);
        assert_eq!(f4.absolute_trace(f4.element(2).unwrap()), 1);
        // trace is GF(p)-linear
        let f9 = FieldCtx::new(3, 2).unwrap();
        for a in f9.elements() {
            for b in f9.elements() {
                let lhs = f9.absolute_trace(f9.add(a, b));
                let rhs = (f9.absolute_trace(a) + f9.absolute_trace(b)) % 3;
                assert_eq!(lhs, rhs);
            }
        }
    }
}
