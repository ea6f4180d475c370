//! Dense univariate polynomials over `GF(q)`.
//!
//! Coefficients are stored low-to-high with no trailing zero; the zero
//! polynomial has an empty coefficient vector.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::galois::{prime_factors, FieldCtx, FieldElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    field: FieldCtx,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(field: &FieldCtx, mut coeffs: Vec<FieldElement>) -> Poly {
        for c in &coeffs {
            assert_eq!(c.field_order(), field.order(), "coefficient from a different field");
        }
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    /// Convenience constructor from raw element encodings, low-to-high.
    pub fn from_values(field: &FieldCtx, values: &[u32]) -> Result<Poly> {
        let coeffs = values.iter().map(|&v| field.element(v)).collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(field, coeffs))
    }

    pub fn zero(field: &FieldCtx) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &FieldCtx) -> Poly {
        Poly { field: field.clone(), coeffs: vec![field.one()] }
    }

    pub fn constant(field: &FieldCtx, c: FieldElement) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn x(field: &FieldCtx) -> Poly {
        Poly { field: field.clone(), coeffs: vec![field.zero(), field.one()] }
    }

    /// `c * x^d`
    pub fn monomial(field: &FieldCtx, c: FieldElement, d: usize) -> Poly {
        let mut coeffs = vec![field.zero(); d + 1];
        coeffs[d] = c;
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(self.field.one())
    }

    /// True for a plain power of `x` with unit coefficient.
    pub fn is_monic_monomial(&self) -> bool {
        match self.degree() {
            None => false,
            Some(d) => {
                self.is_monic() && self.coeffs[..d].iter().all(|c| c.is_zero())
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.field, other.field);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.field.add(self.coeff(i), other.coeff(i))).collect();
        Poly::new(&self.field, coeffs)
    }

    pub fn neg(&self) -> Poly {
        let coeffs = self.coeffs.iter().map(|&c| self.field.neg(c)).collect();
        Poly::new(&self.field, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.field, other.field);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut coeffs = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, coeffs)
    }

    pub fn mul_scalar(&self, c: FieldElement) -> Poly {
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        Poly::new(&self.field, coeffs)
    }

    /// Division with remainder: `self = q * g + r`, `deg r < deg g`.
    pub fn divrem(&self, g: &Poly) -> Result<(Poly, Poly)> {
        assert_eq!(self.field, g.field);
        let gd = g.degree().ok_or(Error::ZeroPolyDivision)?;
        let f = &self.field;
        let lead_inv = f.inv(g.leading().unwrap())?;
        let mut r = self.coeffs.clone();
        let mut q = vec![f.zero(); self.coeffs.len().saturating_sub(gd)];
        while r.len() > gd {
            let c = f.mul(*r.last().unwrap(), lead_inv);
            let shift = r.len() - 1 - gd;
            if !c.is_zero() {
                q[shift] = c;
                for j in 0..=gd {
                    let t = f.mul(c, g.coeffs[j]);
                    r[shift + j] = f.sub(r[shift + j], t);
                }
            }
            debug_assert!(r.last().unwrap().is_zero());
            r.pop();
            while r.last().map(|c| c.is_zero()).unwrap_or(false) {
                r.pop();
            }
        }
        Ok((Poly::new(f, q), Poly::new(f, r)))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        match other.divrem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) if l == self.field.one() => self.clone(),
            Some(l) => self.mul_scalar(self.field.inv(l).expect("nonzero leading coefficient")),
        }
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                // multiply by the integer i+1 inside the field
                let mut scale = f.zero();
                for _ in 0..(i as u32 + 1) % f.characteristic() {
                    scale = f.add(scale, f.one());
                }
                f.mul(c, scale)
            })
            .collect();
        Poly::new(f, coeffs)
    }

    /// A nonzero polynomial is square-free iff gcd(f, f') is constant; in
    /// characteristic p a vanishing derivative means f is a p-th power.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => {
                let d = self.derivative();
                if d.is_zero() {
                    return false;
                }
                self.gcd(&d).degree() == Some(0)
            }
        }
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = &self.field;
        let mut acc = f.zero();
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    /// Multiplicity of `alpha` as a root.
    pub fn root_multiplicity(&self, alpha: FieldElement) -> u32 {
        if self.is_zero() {
            return 0;
        }
        let lin = Poly::new(&self.field, vec![self.field.neg(alpha), self.field.one()]);
        let mut work = self.clone();
        let mut m = 0;
        loop {
            let (q, r) = work.divrem(&lin).unwrap();
            if !r.is_zero() {
                return m;
            }
            m += 1;
            work = q;
        }
    }

    /// `self^e mod m`
    pub fn powmod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut acc = Poly::one(&self.field);
        let mut base = self.divrem(m).unwrap().1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).divrem(m).unwrap().1;
            }
            base = base.mul(&base).divrem(m).unwrap().1;
            e >>= 1;
        }
        acc
    }

    /// Deterministic irreducibility test: `f` of degree `d` is irreducible
    /// over `GF(q)` iff `x^(q^d) = x (mod f)` and `gcd(x^(q^(d/r)) - x, f)`
    /// is constant for every prime `r | d`.
    pub fn is_irreducible(&self) -> bool {
        let d = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(d) => d,
        };
        let q = self.field.order() as u64;
        let x = Poly::x(&self.field);
        let monic = self.monic();
        let checkpoints: Vec<usize> =
            prime_factors(d as u32).iter().map(|&r| d / r as usize).collect();
        let mut h = x.clone();
        for j in 1..=d {
            h = h.powmod(q, &monic);
            if checkpoints.contains(&j) {
                let g = h.sub(&x).gcd(&monic);
                if g.degree() != Some(0) {
                    return false;
                }
            }
        }
        h == x.divrem(&monic).unwrap().1
    }

    fn nth_monic(field: &FieldCtx, deg: usize, index: u128) -> Poly {
        let q = field.order() as u128;
        let mut coeffs = Vec::with_capacity(deg + 1);
        let mut rest = index;
        for _ in 0..deg {
            coeffs.push(field.element((rest % q) as u32).unwrap());
            rest /= q;
        }
        coeffs.push(field.one());
        Poly::new(field, coeffs)
    }
}

impl core::fmt::Display for Poly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c.value()) {
                (0, v) => write!(f, "{v}")?,
                (1, 1) => write!(f, "x")?,
                (1, v) => write!(f, "{v}*x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, v) => write!(f, "{v}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Factors a nonzero polynomial into monic irreducibles with multiplicity;
/// the product of returned factors times the leading unit equals the input.
///
/// Strategy for the desk-scale fields this crate targets: exhaustive root
/// extraction in element order, then trial division by monic polynomials of
/// ascending degree in encoding order. Every emitted factor is re-verified
/// irreducible. Output sorted by (degree, coefficient encodings).
pub fn factor_univariate(f: &Poly) -> Result<Vec<(Poly, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let field = f.field().clone();
    let mut work = f.monic();
    let mut factors: Vec<(Poly, u32)> = Vec::new();

    // linear factors by exhaustive root extraction
    for value in 0..field.order() {
        let alpha = field.element(value).unwrap();
        if work.degree() == Some(0) {
            break;
        }
        let lin = Poly::new(&field, vec![field.neg(alpha), field.one()]);
        let mut mult = 0;
        while work.eval(alpha).is_zero() && work.degree().unwrap_or(0) >= 1 {
            let (q, r) = work.divrem(&lin)?;
            debug_assert!(r.is_zero());
            work = q;
            mult += 1;
        }
        if mult > 0 {
            factors.push((lin, mult));
        }
    }

    // higher-degree factors by trial division in deterministic order
    let mut d = 2usize;
    while work.degree().map(|wd| 2 * d <= wd).unwrap_or(false) {
        let count = (field.order() as u128).pow(d as u32);
        let mut index = 0u128;
        while index < count && work.degree().map(|wd| 2 * d <= wd).unwrap_or(false) {
            let cand = Poly::nth_monic(&field, d, index);
            if cand.divides(&work) {
                // smaller factors are already removed, so this must be irreducible
                assert!(cand.is_irreducible(), "trial division order guarantees irreducibility");
                let mut mult = 0;
                while cand.divides(&work) {
                    work = work.divrem(&cand)?.0;
                    mult += 1;
                }
                factors.push((cand, mult));
            }
            index += 1;
        }
        d += 1;
    }

    if work.degree().map(|wd| wd >= 1).unwrap_or(false) {
        assert!(work.is_irreducible(), "leftover cofactor must be irreducible");
        factors.push((work, 1));
    }

    factors.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| {
                let av: Vec<u32> = a.coeffs().iter().map(|c| c.value()).collect();
                let bv: Vec<u32> = b.coeffs().iter().map(|c| c.value()).collect();
                av.cmp(&bv)
            })
    });
    Ok(factors)
}
