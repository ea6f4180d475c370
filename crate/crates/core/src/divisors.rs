//! Places and divisors of the base rational function field `F_q(x)` and of
//! its supported extensions; divisor arithmetic, gcd, degree and principal
//! divisors of explicitly factored rational functions.
//!
//! Base-field support is restricted to rational places `P_alpha` plus the
//! infinite place; extension places come out of place decomposition and
//! carry their ramification data.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::galois::{FieldCtx, FieldElement};

/// Canonical identity of an extension `F'/F_q(x)`: family tag, geometric
/// degree, constant-field degree and the defining coefficients. Two
/// descriptors with equal keys define the same field.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtKey {
    pub base_order: u32,
    pub ext_order: u32,
    /// 0 = constant, 1 = Kummer, 2 = Artin-Schreier
    pub family: u8,
    pub geometric_degree: u32,
    pub t: u32,
    /// Defining polynomial coefficients (encodings over the base field).
    pub f_coeffs: Vec<u32>,
}

/// Which base place an extension place lies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BaseLocus {
    Finite(u32),
    Infinite,
}

/// A place of an extension field, with its decomposition data.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtPlace {
    pub ext: ExtKey,
    pub base: BaseLocus,
    pub branch: u32,
    /// Ramification index over the base place.
    pub e: u32,
    /// Relative residue degree over the base place.
    pub rel_degree: u32,
    /// Degree as a place of the extension (over its constant field).
    pub degree: u32,
    /// Residue x-coordinate (encoding over the extension constant field),
    /// present exactly when the place is rational and finite.
    pub res_x: Option<u32>,
    /// Residue y-coordinate; absent for constant extensions.
    pub res_y: Option<u32>,
}

impl ExtPlace {
    pub fn is_rational(&self) -> bool {
        self.degree == 1
    }
}

/// A place of the base rational function field or of an extension.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    /// Zero of `x - alpha` in `F_q(x)`.
    Finite { q: u32, alpha: u32 },
    /// Pole of `x` in `F_q(x)`.
    Infinite { q: u32 },
    Ext(ExtPlace),
}

impl Place {
    pub fn finite(field: &FieldCtx, alpha: FieldElement) -> Place {
        assert_eq!(alpha.field_order(), field.order());
        Place::Finite { q: field.order(), alpha: alpha.value() }
    }

    pub fn infinite(field: &FieldCtx) -> Place {
        Place::Infinite { q: field.order() }
    }

    pub fn degree(&self) -> i64 {
        match self {
            Place::Finite { .. } | Place::Infinite { .. } => 1,
            Place::Ext(p) => p.degree as i64,
        }
    }

    pub fn ambient(&self) -> Ambient {
        match self {
            Place::Finite { q, .. } | Place::Infinite { q } => Ambient::Rational { q: *q },
            Place::Ext(p) => Ambient::Extension(p.ext.clone()),
        }
    }

    pub fn is_base(&self) -> bool {
        !matches!(self, Place::Ext(_))
    }
}

impl core::fmt::Display for Place {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Place::Finite { alpha, .. } => write!(f, "P({alpha})"),
            Place::Infinite { .. } => write!(f, "P(inf)"),
            Place::Ext(p) => match (&p.base, p.res_x, p.res_y) {
                (BaseLocus::Infinite, _, _) => {
                    if p.branch == 0 {
                        write!(f, "P'(inf)")
                    } else {
                        write!(f, "P'(inf, branch={})", p.branch)
                    }
                }
                (_, Some(x), Some(y)) => write!(f, "P'(alpha={x}, beta={y})"),
                (_, Some(x), None) => write!(f, "P'(alpha={x})"),
                (BaseLocus::Finite(a), None, _) => {
                    write!(f, "P'(alpha={a}, branch={}, deg={})", p.branch, p.degree)
                }
            },
        }
    }
}

/// The function field a divisor lives in.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ambient {
    Rational { q: u32 },
    Extension(ExtKey),
}

/// Finitely supported integer combination of places, canonically sorted,
/// with no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divisor {
    ambient: Ambient,
    terms: Vec<(Place, i64)>,
}

impl Divisor {
    pub fn zero(ambient: Ambient) -> Divisor {
        Divisor { ambient, terms: Vec::new() }
    }

    pub fn single(place: Place, coeff: i64) -> Divisor {
        let ambient = place.ambient();
        let mut d = Divisor::zero(ambient);
        d.insert(place, coeff);
        d
    }

    pub fn from_terms(ambient: Ambient, terms: Vec<(Place, i64)>) -> Result<Divisor> {
        let mut d = Divisor::zero(ambient);
        for (p, c) in terms {
            if p.ambient() != d.ambient {
                return Err(Error::AmbientMismatch);
            }
            d.insert(p, c);
        }
        Ok(d)
    }

    fn insert(&mut self, place: Place, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.binary_search_by(|(p, _)| p.cmp(&place)) {
            Ok(i) => {
                self.terms[i].1 += coeff;
                if self.terms[i].1 == 0 {
                    self.terms.remove(i);
                }
            }
            Err(i) => self.terms.insert(i, (place, coeff)),
        }
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn terms(&self) -> &[(Place, i64)] {
        &self.terms
    }

    pub fn support(&self) -> impl Iterator<Item = &Place> {
        self.terms.iter().map(|(p, _)| p)
    }

    pub fn coeff(&self, place: &Place) -> i64 {
        self.terms
            .binary_search_by(|(p, _)| p.cmp(place))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    pub fn contains(&self, place: &Place) -> bool {
        self.coeff(place) != 0
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.terms.iter().map(|(p, c)| c * p.degree()).sum()
    }

    pub fn add(&self, other: &Divisor) -> Result<Divisor> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.insert(p.clone(), *c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Divisor {
        Divisor {
            ambient: self.ambient.clone(),
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Divisor) -> Result<Divisor> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: i64) -> Divisor {
        if s == 0 {
            return Divisor::zero(self.ambient.clone());
        }
        Divisor {
            ambient: self.ambient.clone(),
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c * s)).collect(),
        }
    }

    /// Coefficient-wise minimum, with absent places counting as zero.
    pub fn gcd(&self, other: &Divisor) -> Result<Divisor> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        let mut out = Divisor::zero(self.ambient.clone());
        for (p, c) in &self.terms {
            out.insert(p.clone(), (*c).min(other.coeff(p)));
        }
        for (p, c) in &other.terms {
            if !self.contains(p) {
                out.insert(p.clone(), (*c).min(0));
            }
        }
        Ok(out)
    }

    /// `self <= other` coefficient-wise.
    pub fn le(&self, other: &Divisor) -> bool {
        self.terms.iter().all(|(p, c)| *c <= other.coeff(p))
            && other.terms.iter().all(|(p, c)| self.coeff(p) <= *c)
    }

    pub fn text(&self) -> String {
        format!("{self}")
    }
}

impl core::fmt::Display for Divisor {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else if *c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{mag}*{p}")?;
            }
        }
        Ok(())
    }
}

/// Principal divisor of the factored rational function
/// `c * prod (x - alpha_i)^(e_i)`: coefficient `e_i` at `P_alpha_i` and
/// `-sum e_i` at the infinite place. Always of degree zero.
pub fn principal_divisor_rational(
    field: &FieldCtx,
    constant: FieldElement,
    factors: &[(FieldElement, i64)],
) -> Result<Divisor> {
    if constant.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut d = Divisor::zero(Ambient::Rational { q: field.order() });
    let mut total = 0i64;
    for &(alpha, e) in factors {
        d.insert(Place::finite(field, alpha), e);
        total += e;
    }
    d.insert(Place::infinite(field), -total);
    debug_assert_eq!(d.degree(), 0);
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> FieldCtx {
        FieldCtx::new(3, 2).unwrap()
    }

    fn p0(f: &FieldCtx) -> Place {
        Place::finite(f, f.zero())
    }

    fn pinf(f: &FieldCtx) -> Place {
        Place::infinite(f)
    }

    fn two_point(f: &FieldCtx, a: i64, b: i64) -> Divisor {
        Divisor::from_terms(
            Ambient::Rational { q: f.order() },
            alloc::vec![(p0(f), a), (pinf(f), b)],
        )
        .unwrap()
    }

    #[test]
    fn gcd_is_coefficientwise_min() {
        let f = f9();
        let d1 = two_point(&f, 1, 4);
        let d2 = two_point(&f, -2, 3);
        assert_eq!(d1.gcd(&d2).unwrap(), two_point(&f, -2, 3));
        assert_eq!(d1.gcd(&d1).unwrap(), d1);
        // min with an absent coefficient is min with zero
        let a = Divisor::single(p0(&f), 1);
        let b = Divisor::single(pinf(&f), 1);
        assert!(a.gcd(&b).unwrap().is_zero());
    }

    #[test]
    fn gcd_is_a_lower_bound() {
        let f = f9();
        let g = two_point(&f, 2, -1);
        let h = two_point(&f, -3, 5);
        let gcd = g.gcd(&h).unwrap();
        assert!(gcd.le(&g));
        assert!(gcd.le(&h));
    }

    #[test]
    fn degrees() {
        let f = f9();
        assert_eq!(two_point(&f, 3, 4).degree(), 7);
        assert_eq!(Divisor::zero(Ambient::Rational { q: 9 }).degree(), 0);
        // an extension place of degree f contributes coeff * f
        let ext = ExtPlace {
            ext: ExtKey {
                base_order: 9,
                ext_order: 9,
                family: 2,
                geometric_degree: 3,
                t: 1,
                f_coeffs: alloc::vec![0, 0, 0, 0, 1],
            },
            base: BaseLocus::Finite(1),
            branch: 0,
            e: 1,
            rel_degree: 2,
            degree: 2,
            res_x: None,
            res_y: None,
        };
        assert_eq!(Divisor::single(Place::Ext(ext), 3).degree(), 6);
    }

    #[test]
    fn principal_divisors() {
        let f = f9();
        let alpha = f.element(5).unwrap();
        // x - alpha
        let d = principal_divisor_rational(&f, f.one(), &[(alpha, 1)]).unwrap();
        assert_eq!(d.coeff(&Place::finite(&f, alpha)), 1);
        assert_eq!(d.coeff(&pinf(&f)), -1);
        assert_eq!(d.degree(), 0);

        // (x^2 - 1)/x = (x-1)(x+1)/x over an odd-characteristic field
        let one = f.one();
        let minus_one = f.neg(one);
        let d = principal_divisor_rational(
            &f,
            one,
            &[(one, 1), (minus_one, 1), (f.zero(), -1)],
        )
        .unwrap();
        assert_eq!(d.coeff(&Place::finite(&f, one)), 1);
        assert_eq!(d.coeff(&Place::finite(&f, minus_one)), 1);
        assert_eq!(d.coeff(&p0(&f)), -1);
        assert_eq!(d.coeff(&pinf(&f)), -1);
        assert_eq!(d.degree(), 0);

        // a nonzero constant has the zero divisor
        let d = principal_divisor_rational(&f, f.element(2).unwrap(), &[]).unwrap();
        assert!(d.is_zero());

        assert_eq!(
            principal_divisor_rational(&f, f.zero(), &[]).unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn addition_is_associative_and_commutative() {
        let f = f9();
        let mut seed = 7u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (seed >> 16) as i64 % 5 - 2
        };
        for _ in 0..100 {
            let d1 = two_point(&f, next(), next());
            let d2 = two_point(&f, next(), next());
            let d3 = two_point(&f, next(), next());
            assert_eq!(d1.add(&d2).unwrap(), d2.add(&d1).unwrap());
            assert_eq!(
                d1.add(&d2).unwrap().add(&d3).unwrap(),
                d1.add(&d2.add(&d3).unwrap()).unwrap()
            );
            assert_eq!(d1.add(&d2).unwrap().degree(), d1.degree() + d2.degree());
        }
    }

    #[test]
    fn ambient_mismatch_is_rejected() {
        let f9 = f9();
        let f5 = FieldCtx::new(5, 1).unwrap();
        let d1 = Divisor::single(p0(&f9), 1);
        let d2 = Divisor::single(p0(&f5), 1);
        assert_eq!(d1.gcd(&d2).unwrap_err(), Error::AmbientMismatch);
        assert_eq!(d1.add(&d2).unwrap_err(), Error::AmbientMismatch);
    }

    #[test]
    fn text_form() {
        let f = f9();
        let d = two_point(&f, -2, 3);
        assert_eq!(d.text(), "-2*P(0) + 3*P(inf)");
        assert_eq!(Divisor::zero(Ambient::Rational { q: 9 }).text(), "0");
        assert_eq!(two_point(&f, 1, -1).text(), "P(0) - P(inf)");
    }
}
