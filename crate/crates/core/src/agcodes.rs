//! Evaluation AG codes, dual codes, hull computation by two independent
//! oracles, LCD/self-dual classification, and the two-point rational family
//! `C_ab` with its explicit dual divisor.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::divisors::{Ambient, Divisor, Place};
use crate::error::{Error, Result};
use crate::fflinalg::Matrix;
use crate::galois::{FieldCtx, FieldElement};
use crate::riemannroch::{rr_basis_rational, RRBasis};

/// An evaluation code with its divisor metadata. The generator matrix has
/// full row rank and columns in raw evaluation-place order.
#[derive(Debug, Clone)]
pub struct AGCode {
    pub field: FieldCtx,
    pub length: usize,
    pub dim: usize,
    pub gen: Matrix,
    pub places: Vec<Place>,
    pub div_d: Divisor,
    pub div_g: Divisor,
    pub div_h: Option<Divisor>,
}

/// Evaluate a Riemann-Roch basis of `L(G)` at an ordered list of rational
/// places disjoint from `supp G`. When `deg G < n` the evaluation map is
/// injective, so a rank drop signals a basis bug and errors out.
pub fn build_ag_code(
    field: &FieldCtx,
    places: &[Place],
    g: &Divisor,
    basis: &RRBasis,
) -> Result<AGCode> {
    assert_eq!(&basis.divisor, g, "basis must belong to the code divisor");
    let n = places.len();
    let mut div_d = Divisor::zero(g.ambient().clone());
    for p in places {
        if g.contains(p) {
            return Err(Error::PlaceInSupport(format!("{p}")));
        }
        if p.degree() != 1 {
            return Err(Error::NonRationalPlace(format!("{p}")));
        }
        if div_d.contains(p) {
            return Err(Error::UnsupportedSupport(format!("repeated place {p}")));
        }
        div_d = div_d.add(&Divisor::single(p.clone(), 1))?;
    }
    let mut rows = Vec::with_capacity(basis.dim());
    for func in &basis.functions {
        let row: Result<Vec<FieldElement>> =
            places.iter().map(|p| func.eval_at_place(p)).collect();
        rows.push(row?);
    }
    let eval = if rows.is_empty() {
        Matrix::zero(field, 0, n)
    } else {
        Matrix::from_rows(field, rows)
    };
    let (gen, dim) = if g.degree() < n as i64 {
        let rank = eval.rank();
        if rank != basis.dim() {
            return Err(Error::RankDeficiency { expected: basis.dim(), got: rank });
        }
        (eval, basis.dim())
    } else {
        // keep a maximal independent subset of the raw evaluation rows
        let mut kept: Vec<Vec<FieldElement>> = Vec::new();
        let mut current = Matrix::zero(field, 0, n);
        for i in 0..eval.rows() {
            let cand = current
                .stack(&Matrix::from_rows(field, vec![eval.row_vec(i)]))
                .unwrap();
            if cand.rank() > current.rank() {
                kept.push(eval.row_vec(i));
                current = cand;
            }
        }
        let k = kept.len();
        (Matrix::from_rows(field, kept), k)
    };
    Ok(AGCode {
        field: field.clone(),
        length: n,
        dim,
        gen,
        places: places.to_vec(),
        div_d,
        div_g: g.clone(),
        div_h: None,
    })
}

impl AGCode {
    /// Basis of the dual code: the right kernel of the generator under the
    /// standard bilinear form. Dimension `n - k` by rank-nullity.
    pub fn dual_matrix(&self) -> Matrix {
        self.gen.kernel_basis()
    }

    pub fn classify(&self) -> Result<Classification> {
        classify_generator(&self.gen)
    }
}

/// Hull dimension by the rank method: `k - rank(G G^T)` for a full-row-rank
/// generator.
pub fn hull_dim_rank(gen: &Matrix) -> usize {
    let k = gen.rows();
    assert_eq!(gen.rank(), k, "generator must have full row rank");
    let gram = gen.mul(&gen.transpose()).unwrap();
    k - gram.rank()
}

/// Hull basis by the intersection method: `rowspace(G) ∩ rowspace(dual)`.
/// The dimension must agree with the rank method.
pub fn hull_intersection_basis(gen: &Matrix) -> Result<Matrix> {
    let dual = gen.kernel_basis();
    let inter = gen.intersect_rowspace(&dual)?;
    let rank_method = hull_dim_rank(gen);
    if inter.rows() != rank_method {
        return Err(Error::OracleDisagreement {
            rank_method,
            intersection_method: inter.rows(),
        });
    }
    Ok(inter)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub hull_dim: usize,
    pub is_lcd: bool,
    pub is_self_dual: bool,
}

/// Verification record for one code: both oracle hull dimensions (asserted
/// equal), classification flags, the gcd-divisor data, and the formula
/// predictions with their applicability flags.
#[derive(Debug, Clone)]
pub struct HullReport {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub hull_dim_rank: usize,
    pub hull_dim_intersection: usize,
    pub is_lcd: bool,
    pub is_self_dual: bool,
    pub gcd_divisor: Divisor,
    pub gcd_degree: i64,
    pub gcd_ell: i64,
    pub gcd_special: bool,
    pub predictions: Vec<crate::conormcodes::Prediction>,
}

pub fn classify_generator(gen: &Matrix) -> Result<Classification> {
    let hull = hull_intersection_basis(gen)?;
    let hull_dim = hull.rows();
    let k = gen.rows();
    let n = gen.cols();
    let dual = gen.kernel_basis();
    let is_self_dual = n == 2 * k && gen.rowspace_eq(&dual)?;
    if is_self_dual {
        assert_eq!(hull_dim, k, "a self-dual code is its own hull");
    }
    Ok(Classification { hull_dim, is_lcd: hull_dim == 0, is_self_dual })
}

/// The explicit dual divisor `H = -(a+1) P_0 + (n-b-1) P_inf` of the
/// two-point code `C_ab`.
pub fn dual_divisor_cab(field: &FieldCtx, n: usize, a: i64, b: i64) -> Result<Divisor> {
    check_cab_window(field, n, a, b)?;
    Divisor::from_terms(
        Ambient::Rational { q: field.order() },
        vec![
            (Place::finite(field, field.zero()), -(a + 1)),
            (Place::infinite(field), n as i64 - b - 1),
        ],
    )
}

fn check_cab_window(field: &FieldCtx, n: usize, a: i64, b: i64) -> Result<()> {
    if n < 2 {
        return Err(Error::WindowViolation(format!("n must be at least 2 (got n={n})")));
    }
    let q = field.order();
    if !(q as u64 - 1).is_multiple_of(n as u64) {
        return Err(Error::WindowViolation(format!(
            "n must divide q-1 (got n={n}, q={q})"
        )));
    }
    if a + b < 0 || a + b > n as i64 - 2 {
        return Err(Error::WindowViolation(format!(
            "0 <= a+b <= n-2 required (got a+b={}, n={n})",
            a + b
        )));
    }
    if b - a < 0 || b - a > n as i64 {
        return Err(Error::WindowViolation(format!(
            "0 <= b-a <= n required (got b-a={}, n={n})",
            b - a
        )));
    }
    Ok(())
}

/// The rational two-point code `C_ab = C_L(D, a P_0 + b P_inf)` with `D` the
/// n-th roots of unity in evaluation order `1, z, z^2, ...`.
#[derive(Debug, Clone)]
pub struct TwoPointCode {
    pub code: AGCode,
    pub a: i64,
    pub b: i64,
    pub zeta: FieldElement,
}

impl TwoPointCode {
    pub fn q(&self) -> u32 {
        self.code.field.order()
    }

    pub fn n(&self) -> usize {
        self.code.length
    }

    pub fn g_divisor(&self) -> &Divisor {
        &self.code.div_g
    }

    pub fn h_divisor(&self) -> &Divisor {
        self.code.div_h.as_ref().expect("two-point codes always carry H")
    }

    /// `gcd(G, H)` of the code and dual divisors.
    pub fn gcd_divisor(&self) -> Divisor {
        self.g_divisor().gcd(self.h_divisor()).unwrap()
    }
}

/// Build `C_ab` and validate the explicit dual divisor formula: the code
/// built from `H` must span exactly the kernel of the generator.
pub fn build_cab(field: &FieldCtx, n: usize, a: i64, b: i64) -> Result<TwoPointCode> {
    check_cab_window(field, n, a, b)?;
    let zeta = field.nth_root_of_unity(n as u32)?;
    let places: Vec<Place> =
        (0..n as u64).map(|i| Place::finite(field, field.pow(zeta, i))).collect();
    let g = Divisor::from_terms(
        Ambient::Rational { q: field.order() },
        vec![
            (Place::finite(field, field.zero()), a),
            (Place::infinite(field), b),
        ],
    )?;
    let basis = rr_basis_rational(field, &g)?;
    let mut code = build_ag_code(field, &places, &g, &basis)?;

    let h = dual_divisor_cab(field, n, a, b)?;
    let basis_h = rr_basis_rational(field, &h)?;
    let code_h = build_ag_code(field, &places, &h, &basis_h)?;
    assert!(
        code_h.gen.rowspace_eq(&code.dual_matrix())?,
        "explicit dual divisor must reproduce the kernel dual"
    );
    code.div_h = Some(h);
    Ok(TwoPointCode { code, a, b, zeta })
}

/// Plain-text export: first line `q n k`, then `k` rows of `n` element
/// encodings.
pub fn generator_to_text(m: &Matrix) -> String {
    let mut out = format!("{} {} {}\n", m.field().order(), m.cols(), m.rows());
    for r in 0..m.rows() {
        let row: Vec<String> =
            m.row(r).iter().map(|e| format!("{}", e.value())).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parse the plain-text generator format back into a matrix.
pub fn generator_from_text(text: &str) -> Result<Matrix> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse(String::from("empty input")))?;
    let head: Vec<u64> = header
        .split_whitespace()
        .map(|t| t.parse::<u64>().map_err(|_| Error::Parse(format!("bad header token {t}"))))
        .collect::<Result<_>>()?;
    let [q, n, k] = head[..] else {
        return Err(Error::Parse(String::from("header must be `q n k`")));
    };
    let field = field_of_order(q as u32)?;
    let mut data = Vec::with_capacity((n * k) as usize);
    for _ in 0..k {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {k} rows")))?;
        let row: Vec<u64> = line
            .split_whitespace()
            .map(|t| t.parse::<u64>().map_err(|_| Error::Parse(format!("bad entry {t}"))))
            .collect::<core::result::Result<_, _>>()?;
        if row.len() != n as usize {
            return Err(Error::Parse(format!("row has {} entries, expected {n}", row.len())));
        }
        for v in row {
            data.push(field.element(v as u32)?);
        }
    }
    if lines.next().is_some() {
        return Err(Error::Parse(String::from("trailing data after the last row")));
    }
    Ok(Matrix::new(&field, k as usize, n as usize, data))
}

/// Reconstruct the unique field of a prime-power order.
pub fn field_of_order(q: u32) -> Result<FieldCtx> {
    if q < 2 {
        return Err(Error::Parse(format!("{q} is not a prime power")));
    }
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    let mut k = 0;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    if rest != 1 {
        return Err(Error::Parse(format!("{q} is not a prime power")));
    }
    FieldCtx::new(p, k)
}
