//! Extension descriptors `F'/F_q(x)`: constant-field extensions, Kummer
//! extensions `y^m = f(x)` with `gcd(m, q) = 1` and square-free `f`, and
//! Artin-Schreier extensions `y^p + y = f(x)` whose only pole of `f` is the
//! infinite place with order coprime to `p`.
//!
//! The supported ramification catalog is closed: anything outside it errors
//! instead of guessing different exponents.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::divisors::{Ambient, BaseLocus, Divisor, ExtKey, ExtPlace, Place};
use crate::error::{Error, Result};
use crate::fflinalg::{factor_univariate, Poly};
use crate::galois::{Embedding, FieldCtx, FieldElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtKind {
    /// `F' = F_(q^t)(x)`.
    Constant,
    /// `y^m = f(x)`.
    Kummer { m: u32, f: Poly },
    /// `y^p + y = f(x)`, `p` the characteristic.
    ArtinSchreier { f: Poly },
}

/// A degree-`m` extension of `F_q(x)` together with its constant field
/// `GF(q^t)` and derived ramification data. Immutable after construction.
#[derive(Debug, Clone)]
pub struct ExtensionDescriptor {
    base: FieldCtx,
    ext_field: FieldCtx,
    embedding: Embedding,
    kind: ExtKind,
    t: u32,
}

/// One ramified base locus with the data of the places above it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamifiedLocus {
    pub locus: LocusKind,
    /// Degree of the base place (1 for rational loci and the infinite one).
    pub base_degree: u32,
    /// Common ramification index of the places above.
    pub e: u32,
    /// Common different exponent.
    pub different_exponent: u32,
    /// Number of places of `F'` above the locus.
    pub places_above: u32,
    /// Common relative degree of those places.
    pub rel_degree: u32,
    /// Sum of their degrees as places of `F'`.
    pub sum_ext_degrees: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocusKind {
    FiniteRational(u32),
    FiniteIrreducible(Poly),
    Infinite,
}

impl LocusKind {
    pub fn text(&self) -> String {
        match self {
            LocusKind::FiniteRational(a) => format!("P({a})"),
            LocusKind::FiniteIrreducible(p) => format!("zero of {p}"),
            LocusKind::Infinite => String::from("P(inf)"),
        }
    }
}

/// Ramified loci, total different degree, and the degree of the
/// ramification divisor `R` (sum of ramified base places).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamificationRecord {
    pub loci: Vec<RamifiedLocus>,
    pub different_degree: i64,
    pub ramification_degree: i64,
    pub tame: bool,
}

impl RamificationRecord {
    pub fn all_totally_ramified_geometric(&self) -> bool {
        self.loci.iter().all(|l| l.places_above == 1)
    }
}

/// Per-place audit of the place-counting condition `e = m / m_P`.
#[derive(Debug, Clone)]
pub struct Assumption3Check {
    pub base_place: Place,
    pub m_p: usize,
    pub entries: Vec<(Place, u32)>,
    pub ok: bool,
}

#[derive(Debug, Clone)]
pub struct Assumption3Report {
    pub holds: bool,
    pub checks: Vec<Assumption3Check>,
}

impl Assumption3Report {
    pub fn violations(&self) -> Vec<String> {
        self.checks.iter().filter(|c| !c.ok).map(|c| format!("{}", c.base_place)).collect()
    }
}

impl ExtensionDescriptor {
    fn build(base: &FieldCtx, kind: ExtKind, t: u32) -> Result<ExtensionDescriptor> {
        if t < 1 {
            return Err(Error::UnsupportedConfiguration(String::from(
                "constant-field degree t must be at least 1",
            )));
        }
        let ext_field = FieldCtx::new(base.characteristic(), base.extension_degree() * t)?;
        let embedding = Embedding::new(base, &ext_field)?;
        Ok(ExtensionDescriptor { base: base.clone(), ext_field, embedding, kind, t })
    }

    pub fn constant(base: &FieldCtx, t: u32) -> Result<ExtensionDescriptor> {
        Self::build(base, ExtKind::Constant, t)
    }

    pub fn kummer(base: &FieldCtx, m: u32, f: Poly, t: u32) -> Result<ExtensionDescriptor> {
        if m < 1 {
            return Err(Error::UnsupportedConfiguration(String::from("Kummer degree must be >= 1")));
        }
        if m.is_multiple_of(base.characteristic()) {
            return Err(Error::UnsupportedConfiguration(format!(
                "Kummer degree {m} is divisible by the characteristic {}",
                base.characteristic()
            )));
        }
        if f.field() != base {
            return Err(Error::FieldMismatch {
                expected: base.order(),
                got: f.field().order(),
            });
        }
        if f.degree().is_none() {
            return Err(Error::ZeroPolynomial);
        }
        if m >= 2 {
            if f.degree() == Some(0) {
                return Err(Error::UnsupportedConfiguration(String::from(
                    "Kummer equation needs a non-constant right-hand side",
                )));
            }
            if !f.is_squarefree() {
                return Err(Error::UnsupportedConfiguration(String::from(
                    "Kummer right-hand side must be square-free",
                )));
            }
        }
        Self::build(base, ExtKind::Kummer { m, f }, t)
    }

    pub fn artin_schreier(base: &FieldCtx, f: Poly, t: u32) -> Result<ExtensionDescriptor> {
        if f.field() != base {
            return Err(Error::FieldMismatch {
                expected: base.order(),
                got: f.field().order(),
            });
        }
        let u = match f.degree() {
            None | Some(0) => {
                return Err(Error::UnsupportedConfiguration(String::from(
                    "Artin-Schreier right-hand side must be non-constant",
                )))
            }
            Some(u) => u as u32,
        };
        if u % base.characteristic() == 0 {
            return Err(Error::UnsupportedConfiguration(format!(
                "pole order {u} at infinity must be coprime to the characteristic"
            )));
        }
        Self::build(base, ExtKind::ArtinSchreier { f }, t)
    }

    /// The Hermitian field `y^p + y = x^(p+1)` over `GF(p^2)`.
    pub fn hermitian(p: u32) -> Result<ExtensionDescriptor> {
        let base = FieldCtx::new(p, 2)?;
        let f = Poly::monomial(&base, base.one(), p as usize + 1);
        Self::artin_schreier(&base, f, 1)
    }

    /// Elliptic Kummer model `y^2 = f(x)`, `deg f = 3`, odd characteristic.
    pub fn elliptic_kummer(base: &FieldCtx, f: Poly) -> Result<ExtensionDescriptor> {
        if base.characteristic() == 2 {
            return Err(Error::UnsupportedConfiguration(String::from(
                "the quadratic Kummer model needs odd characteristic",
            )));
        }
        if f.degree() != Some(3) {
            return Err(Error::UnsupportedConfiguration(String::from(
                "elliptic Kummer model needs a cubic right-hand side",
            )));
        }
        Self::kummer(base, 2, f, 1)
    }

    /// Elliptic Artin-Schreier model `y^2 + y = f(x)`, `deg f = 3`, char 2.
    pub fn elliptic_artin_schreier(base: &FieldCtx, f: Poly) -> Result<ExtensionDescriptor> {
        if base.characteristic() != 2 {
            return Err(Error::UnsupportedConfiguration(String::from(
                "the Artin-Schreier elliptic model needs characteristic 2",
            )));
        }
        if f.degree() != Some(3) {
            return Err(Error::UnsupportedConfiguration(String::from(
                "elliptic Artin-Schreier model needs a cubic right-hand side",
            )));
        }
        Self::artin_schreier(base, f, 1)
    }

    /// Hyperelliptic Kummer model `y^2 = f(x)`, `deg f = 5`, odd char.
    pub fn hyperelliptic_kummer(base: &FieldCtx, f: Poly) -> Result<ExtensionDescriptor> {
        if base.characteristic() == 2 {
            return Err(Error::UnsupportedConfiguration(String::from(
                "the quadratic Kummer model needs odd characteristic",
            )));
        }
        if f.degree() != Some(5) {
            return Err(Error::UnsupportedConfiguration(String::from(
                "hyperelliptic Kummer model needs a quintic right-hand side",
            )));
        }
        Self::kummer(base, 2, f, 1)
    }

    pub fn base(&self) -> &FieldCtx {
        &self.base
    }

    pub fn ext_field(&self) -> &FieldCtx {
        &self.ext_field
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    pub fn kind(&self) -> &ExtKind {
        &self.kind
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// `[F' : F_(q^t)(x)]`, the y-degree of the defining equation.
    pub fn geometric_degree(&self) -> u32 {
        match &self.kind {
            ExtKind::Constant => 1,
            ExtKind::Kummer { m, .. } => *m,
            ExtKind::ArtinSchreier { .. } => self.base.characteristic(),
        }
    }

    /// `[F' : F_q(x)]`.
    pub fn total_degree(&self) -> u32 {
        self.geometric_degree() * self.t
    }

    pub fn family_name(&self) -> &'static str {
        match &self.kind {
            ExtKind::Constant => "constant",
            ExtKind::Kummer { .. } => "kummer",
            ExtKind::ArtinSchreier { .. } => "artin-schreier",
        }
    }

    /// Defining right-hand side `f`, when the family has one.
    pub fn rhs(&self) -> Option<&Poly> {
        match &self.kind {
            ExtKind::Constant => None,
            ExtKind::Kummer { f, .. } | ExtKind::ArtinSchreier { f } => Some(f),
        }
    }

    pub fn ext_key(&self) -> ExtKey {
        let (family, f_coeffs) = match &self.kind {
            ExtKind::Constant => (0u8, Vec::new()),
            ExtKind::Kummer { f, .. } => {
                (1u8, f.coeffs().iter().map(|c| c.value()).collect())
            }
            ExtKind::ArtinSchreier { f } => {
                (2u8, f.coeffs().iter().map(|c| c.value()).collect())
            }
        };
        ExtKey {
            base_order: self.base.order(),
            ext_order: self.ext_field.order(),
            family,
            geometric_degree: self.geometric_degree(),
            t: self.t,
            f_coeffs,
        }
    }

    pub fn ambient(&self) -> Ambient {
        Ambient::Extension(self.ext_key())
    }

    pub fn base_ambient(&self) -> Ambient {
        Ambient::Rational { q: self.base.order() }
    }

    /// Ramification index of the unique place over `P(inf)`; errors when the
    /// configuration leaves more than one place up there.
    pub fn e_infinity(&self) -> Result<u32> {
        match &self.kind {
            ExtKind::Constant => Ok(1),
            ExtKind::ArtinSchreier { .. } => Ok(self.base.characteristic()),
            ExtKind::Kummer { m, f } => {
                let d0 = gcd_u32(*m, f.degree().unwrap() as u32);
                if d0 == 1 {
                    Ok(*m)
                } else {
                    Err(Error::UnsupportedConfiguration(format!(
                        "gcd(m, deg f) = {d0} leaves the infinite place only partially ramified"
                    )))
                }
            }
        }
    }

    /// Pole order of `y` at the place over `P(inf)` (zero for constant
    /// extensions, which have no `y`).
    pub fn y_pole_order(&self) -> u32 {
        match &self.kind {
            ExtKind::Constant => 0,
            ExtKind::Kummer { f, .. } | ExtKind::ArtinSchreier { f } => {
                f.degree().unwrap() as u32
            }
        }
    }

    pub fn infinite_place(&self) -> Result<Place> {
        Ok(self.decompose(&Place::infinite(&self.base))?[0].clone())
    }

    /// All places of `F'` above a base place, with ramification indices,
    /// relative degrees and residue coordinates. The identity
    /// `sum e*f = [F':F]` is asserted on every call.
    pub fn decompose(&self, place: &Place) -> Result<Vec<Place>> {
        let key = self.ext_key();
        let out: Vec<Place> = match place {
            Place::Ext(_) => {
                return Err(Error::UnsupportedSupport(String::from(
                    "only base places decompose in a single-hop extension",
                )))
            }
            Place::Finite { q, alpha } => {
                if *q != self.base.order() {
                    return Err(Error::AmbientMismatch);
                }
                let alpha = self.base.element(*alpha)?;
                self.decompose_finite(alpha, key)?
            }
            Place::Infinite { q } => {
                if *q != self.base.order() {
                    return Err(Error::AmbientMismatch);
                }
                self.decompose_infinite(key)?
            }
        };
        let total: u32 = out
            .iter()
            .map(|p| match p {
                Place::Ext(e) => e.e * e.rel_degree,
                _ => unreachable!(),
            })
            .sum();
        assert_eq!(total, self.total_degree(), "sum of e*f must equal [F':F]");
        Ok(out)
    }

    fn decompose_finite(&self, alpha: FieldElement, key: ExtKey) -> Result<Vec<Place>> {
        let t = self.t;
        let alpha_up = self.embedding.map(alpha)?;
        match &self.kind {
            ExtKind::Constant => Ok(vec![Place::Ext(ExtPlace {
                ext: key,
                base: BaseLocus::Finite(alpha.value()),
                branch: 0,
                e: 1,
                rel_degree: t,
                degree: 1,
                res_x: Some(alpha_up.value()),
                res_y: None,
            })]),
            ExtKind::Kummer { m, f } => {
                let c = self.embedding.map(f.eval(alpha))?;
                if c.is_zero() {
                    // simple zero of the square-free f: totally ramified, y -> 0
                    return Ok(vec![Place::Ext(ExtPlace {
                        ext: key,
                        base: BaseLocus::Finite(alpha.value()),
                        branch: 0,
                        e: *m,
                        rel_degree: t,
                        degree: 1,
                        res_x: Some(alpha_up.value()),
                        res_y: Some(0),
                    })]);
                }
                // unramified: places match the irreducible factors of y^m - c
                let ef = &self.ext_field;
                let mut eq = Poly::monomial(ef, ef.one(), *m as usize);
                eq = eq.sub(&Poly::constant(ef, c));
                self.places_from_factors(alpha, alpha_up, &eq, key)
            }
            ExtKind::ArtinSchreier { f } => {
                let c = self.embedding.map(f.eval(alpha))?;
                let ef = &self.ext_field;
                let p = ef.characteristic() as usize;
                let mut eq = Poly::monomial(ef, ef.one(), p);
                eq = eq.add(&Poly::x(ef));
                eq = eq.sub(&Poly::constant(ef, c));
                self.places_from_factors(alpha, alpha_up, &eq, key)
            }
        }
    }

    fn places_from_factors(
        &self,
        alpha: FieldElement,
        alpha_up: FieldElement,
        eq: &Poly,
        key: ExtKey,
    ) -> Result<Vec<Place>> {
        let ef = &self.ext_field;
        let factors = factor_univariate(eq)?;
        let mut out = Vec::new();
        for (branch, (g, mult)) in factors.into_iter().enumerate() {
            assert_eq!(mult, 1, "separable residual equation must be square-free");
            let d = g.degree().unwrap() as u32;
            let res_y = if d == 1 { Some(ef.neg(g.coeff(0)).value()) } else { None };
            out.push(Place::Ext(ExtPlace {
                ext: key.clone(),
                base: BaseLocus::Finite(alpha.value()),
                branch: branch as u32,
                e: 1,
                rel_degree: self.t * d,
                degree: d,
                res_x: if d == 1 { Some(alpha_up.value()) } else { None },
                res_y,
            }));
        }
        Ok(out)
    }

    fn decompose_infinite(&self, key: ExtKey) -> Result<Vec<Place>> {
        let e = match &self.kind {
            ExtKind::Constant => 1,
            ExtKind::ArtinSchreier { .. } => self.base.characteristic(),
            ExtKind::Kummer { .. } => self.e_infinity()?,
        };
        Ok(vec![Place::Ext(ExtPlace {
            ext: key,
            base: BaseLocus::Infinite,
            branch: 0,
            e,
            rel_degree: self.t,
            degree: 1,
            res_x: None,
            res_y: None,
        })])
    }

    /// Conorm of a base divisor: each place is replaced by the places above
    /// it weighted by their ramification indices. The degree law
    /// `deg Con(D) = ([F':F]/t) deg D` is asserted.
    pub fn conorm(&self, d: &Divisor) -> Result<Divisor> {
        if *d.ambient() != self.base_ambient() {
            return Err(Error::AmbientMismatch);
        }
        let mut out = Divisor::zero(self.ambient());
        for (p, c) in d.terms() {
            for above in self.decompose(p)? {
                let e = match &above {
                    Place::Ext(ep) => ep.e,
                    _ => unreachable!(),
                };
                out = out.add(&Divisor::single(above, c * e as i64))?;
            }
        }
        assert_eq!(
            out.degree(),
            self.geometric_degree() as i64 * d.degree(),
            "conorm degree law must hold"
        );
        Ok(out)
    }

    /// The ramified loci with different exponents. Tame loci get `d = e - 1`
    /// exactly; the wild Artin-Schreier place over infinity gets
    /// `d = (p - 1)(u + 1)`. Constant extensions are unramified.
    pub fn different(&self) -> Result<RamificationRecord> {
        match &self.kind {
            ExtKind::Constant => Ok(RamificationRecord {
                loci: Vec::new(),
                different_degree: 0,
                ramification_degree: 0,
                tame: true,
            }),
            ExtKind::ArtinSchreier { f } => {
                let p = self.base.characteristic();
                let u = f.degree().unwrap() as u32;
                let d = (p - 1) * (u + 1);
                let loci = vec![RamifiedLocus {
                    locus: LocusKind::Infinite,
                    base_degree: 1,
                    e: p,
                    different_exponent: d,
                    places_above: 1,
                    rel_degree: self.t,
                    sum_ext_degrees: 1,
                }];
                Ok(RamificationRecord {
                    different_degree: d as i64,
                    ramification_degree: 1,
                    tame: false,
                    loci,
                })
            }
            ExtKind::Kummer { m, f } => {
                if *m == 1 {
                    return Ok(RamificationRecord {
                        loci: Vec::new(),
                        different_degree: 0,
                        ramification_degree: 0,
                        tame: true,
                    });
                }
                let mut loci = Vec::new();
                let mut diff = 0i64;
                let mut ram_deg = 0i64;
                for (g, mult) in factor_univariate(f)? {
                    assert_eq!(mult, 1, "square-free f has simple zeros");
                    let dp = g.degree().unwrap() as u32;
                    let locus = if dp == 1 {
                        LocusKind::FiniteRational(self.base.neg(g.coeff(0)).value())
                    } else {
                        LocusKind::FiniteIrreducible(g)
                    };
                    let g0 = gcd_u32(dp, self.t);
                    loci.push(RamifiedLocus {
                        locus,
                        base_degree: dp,
                        e: *m,
                        different_exponent: m - 1,
                        places_above: g0,
                        rel_degree: self.t / g0,
                        sum_ext_degrees: dp,
                    });
                    diff += (*m as i64 - 1) * dp as i64;
                    ram_deg += dp as i64;
                }
                let d0 = gcd_u32(*m, f.degree().unwrap() as u32);
                if d0 == 1 {
                    loci.push(RamifiedLocus {
                        locus: LocusKind::Infinite,
                        base_degree: 1,
                        e: *m,
                        different_exponent: m - 1,
                        places_above: 1,
                        rel_degree: self.t,
                        sum_ext_degrees: 1,
                    });
                    diff += *m as i64 - 1;
                    ram_deg += 1;
                } else if d0 != *m {
                    return Err(Error::UnsupportedConfiguration(format!(
                        "gcd(m, deg f) = {d0} gives partial ramification over the infinite place"
                    )));
                }
                Ok(RamificationRecord {
                    loci,
                    different_degree: diff,
                    ramification_degree: ram_deg,
                    tame: true,
                })
            }
        }
    }

    /// Genus from the Hurwitz formula over a genus-zero base:
    /// `2g' - 2 = ([F':F]/t)(-2) + deg Diff`.
    pub fn genus(&self) -> Result<i64> {
        let diff = self.different()?.different_degree;
        let twice = 2 - 2 * self.geometric_degree() as i64 + diff;
        if twice % 2 != 0 || twice < 0 {
            return Err(Error::InconsistentGenus { twice_genus: twice });
        }
        Ok(twice / 2)
    }

    /// Whether `F'/F` is Galois: constant extensions always are; Kummer
    /// needs the m-th roots of unity in the constant field of `F'`;
    /// Artin-Schreier needs the full kernel of `y^p + y` up there.
    pub fn is_galois(&self) -> bool {
        match &self.kind {
            ExtKind::Constant => true,
            ExtKind::Kummer { m, .. } => (self.ext_field.order() - 1).is_multiple_of(*m),
            ExtKind::ArtinSchreier { .. } => {
                let ef = &self.ext_field;
                let p = ef.characteristic();
                let kernel = ef
                    .elements()
                    .filter(|&a| ef.add(ef.pow(a, p as u64), a).is_zero())
                    .count();
                kernel as u32 == p
            }
        }
    }

    pub fn is_tame(&self) -> bool {
        !matches!(self.kind, ExtKind::ArtinSchreier { .. })
    }

    /// Audits `e(P'|P) = m / m_P` for every place in the support of `d`,
    /// where `m_P` counts the places above `P`.
    pub fn check_assumption3(&self, d: &Divisor) -> Result<Assumption3Report> {
        if *d.ambient() != self.base_ambient() {
            return Err(Error::AmbientMismatch);
        }
        let m = self.total_degree();
        let mut checks = Vec::new();
        let mut holds = true;
        for p in d.support() {
            let above = self.decompose(p)?;
            let m_p = above.len();
            let entries: Vec<(Place, u32)> = above
                .into_iter()
                .map(|pl| {
                    let e = match &pl {
                        Place::Ext(ep) => ep.e,
                        _ => unreachable!(),
                    };
                    (pl, e)
                })
                .collect();
            let ok = entries.iter().all(|(_, e)| *e as usize * m_p == m as usize);
            holds &= ok;
            checks.push(Assumption3Check { base_place: p.clone(), m_p, entries, ok });
        }
        Ok(Assumption3Report { holds, checks })
    }
}

fn gcd_u32(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hermitian3() -> ExtensionDescriptor {
        ExtensionDescriptor::hermitian(3).unwrap()
    }

    #[test]
    fn hermitian_infinite_place_is_totally_ramified() {
        let ext = hermitian3();
        let f9 = ext.base().clone();
        let above = ext.decompose(&Place::infinite(&f9)).unwrap();
        assert_eq!(above.len(), 1);
        match &above[0] {
            Place::Ext(p) => {
                assert_eq!(p.e, 3);
                assert_eq!(p.rel_degree, 1);
                assert_eq!(p.degree, 1);
            }
            _ => panic!("expected extension place"),
        }
    }

    #[test]
    fn hermitian_finite_places_split_completely() {
        let ext = hermitian3();
        let f9 = ext.base().clone();
        for alpha in f9.elements().filter(|a| !a.is_zero()) {
            assert_eq!(f9.pow(alpha, 8), f9.one());
            let above = ext.decompose(&Place::finite(&f9, alpha)).unwrap();
            assert_eq!(above.len(), 3, "three rational places above P({alpha})");
            let rhs = f9.pow(alpha, 4);
            for pl in &above {
                match pl {
                    Place::Ext(p) => {
                        assert_eq!((p.e, p.rel_degree, p.degree), (1, 1, 1));
                        let beta = f9.element(p.res_y.unwrap()).unwrap();
                        // beta^3 + beta = alpha^4
                        assert_eq!(f9.add(f9.pow(beta, 3), beta), rhs);
                    }
                    _ => panic!("expected extension place"),
                }
            }
        }
    }

    #[test]
    fn artin_schreier_inert_place_over_gf8() {
        let f8 = FieldCtx::new(2, 3).unwrap();
        let f = Poly::monomial(&f8, f8.one(), 3); // x^3
        let ext = ExtensionDescriptor::artin_schreier(&f8, f, 1).unwrap();
        let alpha = f8
            .elements()
            .find(|&a| f8.absolute_trace(f8.pow(a, 3)) == 1)
            .expect("some cube has absolute trace 1");
        let above = ext.decompose(&Place::finite(&f8, alpha)).unwrap();
        assert_eq!(above.len(), 1);
        match &above[0] {
            Place::Ext(p) => {
                assert_eq!(p.e, 1);
                assert_eq!(p.rel_degree, 2);
                assert_eq!(p.degree, 2);
                assert!(p.res_y.is_none());
            }
            _ => panic!("expected extension place"),
        }
    }

    #[test]
    fn conorm_examples() {
        let ext = hermitian3();
        let f9 = ext.base().clone();
        let con_inf = ext.conorm(&Divisor::single(Place::infinite(&f9), 1)).unwrap();
        assert_eq!(con_inf.terms().len(), 1);
        assert_eq!(con_inf.terms()[0].1, 3);
        assert_eq!(con_inf.degree(), 3);

        // Con(P_0 - P_inf) is the divisor of x in F': zeros over 0, poles over inf
        let d = Divisor::single(Place::finite(&f9, f9.zero()), 1)
            .sub(&Divisor::single(Place::infinite(&f9), 1))
            .unwrap();
        let con = ext.conorm(&d).unwrap();
        assert_eq!(con.degree(), 0);
        // independent route: decompose both places and assemble by hand
        let mut expected = Divisor::zero(ext.ambient());
        for pl in ext.decompose(&Place::finite(&f9, f9.zero())).unwrap() {
            let e = match &pl {
                Place::Ext(p) => p.e as i64,
                _ => unreachable!(),
            };
            expected = expected.add(&Divisor::single(pl, e)).unwrap();
        }
        for pl in ext.decompose(&Place::infinite(&f9)).unwrap() {
            let e = match &pl {
                Place::Ext(p) => p.e as i64,
                _ => unreachable!(),
            };
            expected = expected.add(&Divisor::single(pl, -e)).unwrap();
        }
        assert_eq!(con, expected);

        assert!(ext.conorm(&Divisor::zero(ext.base_ambient())).unwrap().is_zero());

        // Con((x - alpha)) for a nonzero alpha: degree 0, and equal to the
        // divisor assembled independently from the two decompositions
        let alpha = f9.element(2).unwrap();
        let lin = Divisor::single(Place::finite(&f9, alpha), 1)
            .sub(&Divisor::single(Place::infinite(&f9), 1))
            .unwrap();
        let con_lin = ext.conorm(&lin).unwrap();
        assert_eq!(con_lin.degree(), 0);
        let mut assembled = Divisor::zero(ext.ambient());
        for pl in ext.decompose(&Place::finite(&f9, alpha)).unwrap() {
            let e = match &pl {
                Place::Ext(p) => p.e as i64,
                _ => unreachable!(),
            };
            assembled = assembled.add(&Divisor::single(pl, e)).unwrap();
        }
        for pl in ext.decompose(&Place::infinite(&f9)).unwrap() {
            let e = match &pl {
                Place::Ext(p) => p.e as i64,
                _ => unreachable!(),
            };
            assembled = assembled.add(&Divisor::single(pl, -e)).unwrap();
        }
        assert_eq!(con_lin, assembled);
    }

    #[test]
    fn conorm_is_additive_and_respects_degree() {
        let ext = hermitian3();
        let f9 = ext.base().clone();
        let mut seed = 11u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (seed >> 17) as i64 % 7 - 3
        };
        for _ in 0..30 {
            let d1 = Divisor::from_terms(
                ext.base_ambient(),
                vec![
                    (Place::finite(&f9, f9.zero()), next()),
                    (Place::finite(&f9, f9.one()), next()),
                    (Place::infinite(&f9), next()),
                ],
            )
            .unwrap();
            let d2 = Divisor::from_terms(
                ext.base_ambient(),
                vec![
                    (Place::finite(&f9, f9.element(5).unwrap()), next()),
                    (Place::infinite(&f9), next()),
                ],
            )
            .unwrap();
            let lhs = ext.conorm(&d1.add(&d2).unwrap()).unwrap();
            let rhs = ext.conorm(&d1).unwrap().add(&ext.conorm(&d2).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(ext.conorm(&d1).unwrap().degree(), 3 * d1.degree());
        }
    }

    #[test]
    fn different_degrees() {
        // Hermitian p=3: single wild place with d = (3-1)(4+1) = 10
        let rec = hermitian3().different().unwrap();
        assert_eq!(rec.different_degree, 10);
        assert_eq!(rec.loci.len(), 1);
        assert_eq!(rec.loci[0].different_exponent, 10);
        assert!(!rec.tame);

        // Kummer m=2 with a quintic: five zeros plus the infinite place, d = 1 each
        let f9 = FieldCtx::new(3, 2).unwrap();
        let x5 = Poly::monomial(&f9, f9.one(), 5);
        let quintic = x5.sub(&Poly::x(&f9)); // x^5 - x, five simple zeros
        let ext = ExtensionDescriptor::hyperelliptic_kummer(&f9, quintic).unwrap();
        let rec = ext.different().unwrap();
        assert_eq!(rec.different_degree, 6);
        assert_eq!(rec.ramification_degree, 6);
        assert!(rec.tame);
        assert!(rec.loci.iter().all(|l| l.different_exponent == 1));

        // constant extensions are unramified
        let c = ExtensionDescriptor::constant(&f9, 2).unwrap();
        assert_eq!(c.different().unwrap().different_degree, 0);
    }

    #[test]
    fn hurwitz_genus_matches_presets() {
        assert_eq!(hermitian3().genus().unwrap(), 3);
        assert_eq!(ExtensionDescriptor::hermitian(2).unwrap().genus().unwrap(), 1);

        let f4 = FieldCtx::new(2, 2).unwrap();
        let cubic = Poly::monomial(&f4, f4.one(), 3);
        let ell = ExtensionDescriptor::elliptic_artin_schreier(&f4, cubic).unwrap();
        assert_eq!(ell.genus().unwrap(), 1);

        let f9 = FieldCtx::new(3, 2).unwrap();
        let quintic = Poly::monomial(&f9, f9.one(), 5).sub(&Poly::x(&f9));
        let hyper = ExtensionDescriptor::hyperelliptic_kummer(&f9, quintic).unwrap();
        assert_eq!(hyper.genus().unwrap(), 2);

        let c = ExtensionDescriptor::constant(&f9, 4).unwrap();
        assert_eq!(c.genus().unwrap(), 0);
    }

    #[test]
    fn assumption3_audit() {
        // split Hermitian place: e = 1 = 3/3
        let ext = hermitian3();
        let f9 = ext.base().clone();
        let d = Divisor::single(Place::finite(&f9, f9.one()), 1);
        assert!(ext.check_assumption3(&d).unwrap().holds);

        // inert Artin-Schreier place: e = 1 but m/m_P = 2
        let f8 = FieldCtx::new(2, 3).unwrap();
        let as8 =
            ExtensionDescriptor::artin_schreier(&f8, Poly::monomial(&f8, f8.one(), 3), 1).unwrap();
        let alpha = f8.elements().find(|&a| f8.absolute_trace(f8.pow(a, 3)) == 1).unwrap();
        let d = Divisor::single(Place::finite(&f8, alpha), 1);
        let report = as8.check_assumption3(&d).unwrap();
        assert!(!report.holds);
        assert_eq!(report.violations().len(), 1);

        // an empty divisor passes vacuously
        let empty = Divisor::zero(ext.base_ambient());
        assert!(ext.check_assumption3(&empty).unwrap().holds);
    }

    #[test]
    fn kummer_validation() {
        let f9 = FieldCtx::new(3, 2).unwrap();
        let x = Poly::x(&f9);
        // x^3 is not square-free
        let cube = x.mul(&x).mul(&x);
        assert!(matches!(
            ExtensionDescriptor::kummer(&f9, 2, cube, 1),
            Err(Error::UnsupportedConfiguration(_))
        ));
        // degree divisible by the characteristic
        let ok_cubic = x.mul(&x).mul(&x).add(&Poly::x(&f9)); // x^3 + x, square-free
        assert!(matches!(
            ExtensionDescriptor::kummer(&f9, 3, ok_cubic, 1),
            Err(Error::UnsupportedConfiguration(_))
        ));
    }

    #[test]
    fn constant_extension_decomposition() {
        let f9 = FieldCtx::new(3, 2).unwrap();
        let ext = ExtensionDescriptor::constant(&f9, 2).unwrap();
        let above = ext.decompose(&Place::finite(&f9, f9.element(5).unwrap())).unwrap();
        assert_eq!(above.len(), 1);
        match &above[0] {
            Place::Ext(p) => {
                assert_eq!((p.e, p.rel_degree, p.degree), (1, 2, 1));
                assert!(p.res_x.is_some());
                assert!(p.res_y.is_none());
            }
            _ => panic!("expected extension place"),
        }
        // the place-counting condition fails for proper constant extensions
        let d = Divisor::single(Place::finite(&f9, f9.one()), 1);
        assert!(!ext.check_assumption3(&d).unwrap().holds);
    }
}
