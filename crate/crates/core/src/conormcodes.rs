//! Conorm code construction over the supported curve extensions, the
//! constant-extension column-repetition construction, the duality audit for
//! `Con(C^perp)` versus `Con(C)^perp`, and the closed-form hull-dimension
//! predictors with their applicability conditions.
//!
//! The blanket place-counting and duality assumptions are treated as
//! auditable hypotheses: every instance carries pass/fail flags and the
//! predictor matches are reported conditionally, never assumed.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::agcodes::{
    build_ag_code, hull_dim_rank, hull_intersection_basis, AGCode, Classification, HullReport,
    TwoPointCode,
};
use crate::divisors::{Divisor, Place};
use crate::error::{Error, Result};
use crate::extensions::{Assumption3Report, ExtensionDescriptor, RamificationRecord};
use crate::fflinalg::Matrix;
use crate::galois::FieldElement;
use crate::rational::Ratio;
use crate::riemannroch::{
    conorm_two_point_basis, ell_dim_rational, ell_dim_extension, rr_basis_rational, EllReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PredictionSource {
    Prop51,
    Remark34,
    Thm32,
    Thm41,
    Cor42,
    Cor43,
    Ex52,
    Ex53,
    Ex54,
}

impl PredictionSource {
    pub fn label(&self) -> &'static str {
        match self {
            PredictionSource::Prop51 => "prop51",
            PredictionSource::Remark34 => "remark34",
            PredictionSource::Thm32 => "thm32",
            PredictionSource::Thm41 => "thm41",
            PredictionSource::Cor42 => "cor42",
            PredictionSource::Cor43 => "cor43",
            PredictionSource::Ex52 => "ex52",
            PredictionSource::Ex53 => "ex53",
            PredictionSource::Ex54 => "ex54",
        }
    }

    pub fn all() -> [PredictionSource; 9] {
        [
            PredictionSource::Prop51,
            PredictionSource::Remark34,
            PredictionSource::Thm32,
            PredictionSource::Thm41,
            PredictionSource::Cor42,
            PredictionSource::Cor43,
            PredictionSource::Ex52,
            PredictionSource::Ex53,
            PredictionSource::Ex54,
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PredictionKind {
    Equality,
    LowerBound,
}

#[derive(Debug, Clone)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
}

impl Condition {
    fn new(name: impl Into<String>, holds: bool) -> Condition {
        Condition { name: name.into(), holds }
    }
}

/// A closed-form hull-dimension claim with its hypotheses. `applicable` is
/// true exactly when every cited hypothesis passes; predictions whose source
/// additionally rests on the blanket duality assumption carry
/// `assumes_duality` so reports can separate the two.
#[derive(Debug, Clone)]
pub struct Prediction {
    pub source: PredictionSource,
    pub kind: PredictionKind,
    pub value: Ratio,
    pub integral: bool,
    pub conditions: Vec<Condition>,
    pub applicable: bool,
    pub assumes_duality: bool,
}

impl Prediction {
    fn assemble(
        source: PredictionSource,
        kind: PredictionKind,
        value: Ratio,
        conditions: Vec<Condition>,
        assumes_duality: bool,
    ) -> Prediction {
        let applicable = conditions.iter().all(|c| c.holds);
        if applicable && kind == PredictionKind::Equality {
            assert!(value.is_integer(), "equality prediction must be an integer");
        }
        Prediction {
            source,
            kind,
            integral: value.is_integer(),
            value,
            conditions,
            applicable,
            assumes_duality,
        }
    }

    /// Match against an oracle hull dimension, per kind.
    pub fn matches(&self, hull: usize) -> bool {
        if !self.applicable {
            return false;
        }
        let hull = Ratio::from_int(hull as i64);
        match self.kind {
            PredictionKind::Equality => hull == self.value,
            PredictionKind::LowerBound => hull >= self.value,
        }
    }
}

/// The duality audit: the stated necessary condition
/// `(1/t)(m n - sum m_P) = deg Diff` together with the empirical row-space
/// comparison of `Con(C^perp)` against `Con(C)^perp`.
#[derive(Debug, Clone)]
pub struct Eq5Report {
    pub necessary_lhs: Ratio,
    pub deg_diff: i64,
    pub necessary_pass: bool,
    pub empirical_equal: bool,
    pub conorm_of_dual_dim: usize,
    pub dual_of_conorm_dim: usize,
}

/// Empirical LCD-preservation audit on elliptic targets.
#[derive(Debug, Clone, Copy)]
pub struct LcdAudit {
    pub base_lcd: bool,
    pub gcd_principal: bool,
    pub conorm_lcd: bool,
}

/// A fully audited conorm-code instance.
#[derive(Debug, Clone)]
pub struct ConormInstance {
    pub base: TwoPointCode,
    pub ext: ExtensionDescriptor,
    pub code: AGCode,
    pub genus_ext: i64,
    pub deg_diff: i64,
    pub ramification: RamificationRecord,
    pub h_base: usize,
    pub h_prime_rank: usize,
    pub h_prime_intersection: usize,
    pub gcd_divisor: Divisor,
    pub gcd_ell: EllReport,
    pub con_gcd_divisor: Divisor,
    pub con_gcd_ell: EllReport,
    pub eq3: Assumption3Report,
    pub eq5: Eq5Report,
    pub predictions: Vec<Prediction>,
    pub base_class: Classification,
    pub prime_class: Classification,
    pub lcd_audit: Option<LcdAudit>,
    pub self_dual_preserved: Option<bool>,
}

impl ConormInstance {
    pub fn n_prime(&self) -> usize {
        self.code.length
    }

    pub fn k_prime(&self) -> usize {
        self.code.dim
    }
}

/// Build the conorm code of a two-point rational code: `D'` collects the
/// places above the evaluation places with coefficient one (the shape the
/// place-counting assumption guarantees), `G'` is the conorm of `G`, and the
/// codewords evaluate the shift-reduced basis of `L(G')`.
pub fn build_conorm_code(
    cab: &TwoPointCode,
    ext: &ExtensionDescriptor,
) -> Result<ConormInstance> {
    if ext.base().order() != cab.q() {
        return Err(Error::AmbientMismatch);
    }
    let eq3 = ext.check_assumption3(&cab.code.div_d)?;
    if !eq3.holds {
        return Err(Error::AssumptionViolated { places: eq3.violations() });
    }

    // D' places in base-place order, branches in decomposition order
    let mut d_prime_places: Vec<Place> = Vec::new();
    for p in &cab.code.places {
        for above in ext.decompose(p)? {
            match &above {
                Place::Ext(ep) if ep.is_rational() && ep.res_x.is_some() => {}
                _ => return Err(Error::NonRationalPlace(format!("{above}"))),
            }
            d_prime_places.push(above);
        }
    }

    let g_prime = ext.conorm(cab.g_divisor())?;
    for p in &d_prime_places {
        assert!(!g_prime.contains(p), "supp D' and supp G' must stay disjoint");
    }

    let basis = conorm_two_point_basis(ext, cab.a, cab.b)?;
    assert_eq!(basis.divisor, g_prime, "shift-reduced basis must target Con(G)");
    let code = build_ag_code(ext.ext_field(), &d_prime_places, &g_prime, &basis)?;

    let ramification = ext.different()?;
    let deg_diff = ramification.different_degree;
    let genus_ext = ext.genus()?;

    // hull oracles, base and conorm side; the classification runs the
    // intersection oracle, which itself asserts agreement with the rank one
    let h_base = hull_dim_rank(&cab.code.gen);
    let base_class = cab.code.classify()?;
    assert_eq!(base_class.hull_dim, h_base);
    let h_prime_rank = hull_dim_rank(&code.gen);
    let prime_class = code.classify()?;
    let h_prime_intersection = prime_class.hull_dim;

    // gcd chain: gcd(Con G, Con H) = Con(gcd(G, H)), then the dimension chain
    let gcd_divisor = cab.gcd_divisor();
    let h_div = cab.h_divisor().clone();
    let con_h = ext.conorm(&h_div)?;
    let con_gcd_divisor = ext.conorm(&gcd_divisor)?;
    assert_eq!(
        con_gcd_divisor,
        g_prime.gcd(&con_h)?,
        "conorm and gcd must commute"
    );
    let gcd_ell = ell_dim_rational(&gcd_divisor)?;
    let con_gcd_ell = ell_dim_extension(&con_gcd_divisor, ext)?;
    check_dimension_chain(ext, &gcd_ell, &con_gcd_ell, deg_diff);

    // duality audit
    let eq5 = check_eq5(cab, ext, &code, &d_prime_places, &con_h, deg_diff)?;

    // when the duality identity holds empirically, Con(H) really is a dual
    // divisor for C', and the hull must be the Con(gcd) code
    if eq5.empirical_equal
        && 2 * genus_ext - 2 < g_prime.degree()
        && g_prime.degree() < code.length as i64
        && !con_gcd_ell.is_special()
    {
        assert_eq!(
            h_prime_rank as i64, con_gcd_ell.ell,
            "duality-preserving instances must have the gcd-code hull"
        );
    }

    // predictors; the true dual divisor of C' is not computed, so div_h
    // stays empty on the conorm side
    let predictions = predict_hull(
        cab,
        ext,
        h_base,
        &gcd_ell,
        deg_diff,
        &ramification,
        eq3.holds,
        &eq5,
    )?;

    // empirical LCD-preservation audit on elliptic targets
    let deg_g = cab.g_divisor().degree();
    let lcd_audit = (genus_ext == 1 && deg_g > 0 && deg_g < cab.n() as i64
        && base_class.is_lcd)
        .then_some(LcdAudit {
            base_lcd: true,
            gcd_principal: gcd_ell.degree == 0 && gcd_ell.ell == 1,
            conorm_lcd: prime_class.is_lcd,
        });

    // self-dual preservation: asserted when the premise holds
    let self_dual_preserved = base_class.is_self_dual.then(|| {
        let preserved = prime_class.is_self_dual;
        if eq5.empirical_equal {
            assert!(preserved, "duality-preserving conorm must keep self-duality");
        }
        preserved
    });

    Ok(ConormInstance {
        base: cab.clone(),
        ext: ext.clone(),
        code,
        genus_ext,
        deg_diff,
        ramification,
        h_base,
        h_prime_rank,
        h_prime_intersection,
        gcd_divisor,
        gcd_ell,
        con_gcd_divisor,
        con_gcd_ell,
        eq3,
        eq5,
        predictions,
        base_class,
        prime_class,
        lcd_audit,
        self_dual_preserved,
    })
}

/// `l(Con(gcd)) >= (m/t) l(gcd) - deg Diff / 2`, with equality whenever
/// `deg gcd > 2g - 2 + (t/m) deg Diff`. Hard identity; panics on violation.
fn check_dimension_chain(
    ext: &ExtensionDescriptor,
    gcd_ell: &EllReport,
    con_gcd_ell: &EllReport,
    deg_diff: i64,
) {
    let m_geo = ext.geometric_degree() as i64;
    let lhs = Ratio::from_int(con_gcd_ell.ell);
    let bound = Ratio::from_int(m_geo * gcd_ell.ell).sub(Ratio::new(deg_diff, 2));
    assert!(lhs >= bound, "dimension chain lower bound must hold");
    // threshold: deg gcd > -2 + deg Diff / m_geo, scaled by m_geo
    if m_geo * gcd_ell.degree > -2 * m_geo + deg_diff {
        assert_eq!(lhs, bound, "dimension chain equality must hold past the threshold");
    }
}

/// The duality audit record for a built conorm instance.
fn check_eq5(
    cab: &TwoPointCode,
    ext: &ExtensionDescriptor,
    code_prime: &AGCode,
    d_prime_places: &[Place],
    con_h: &Divisor,
    deg_diff: i64,
) -> Result<Eq5Report> {
    let m = ext.total_degree() as i64;
    let n = cab.n() as i64;
    let sum_m_p: i64 = cab
        .code
        .places
        .iter()
        .map(|p| ext.decompose(p).map(|v| v.len() as i64))
        .sum::<Result<i64>>()?;
    let necessary_lhs = Ratio::new(m * n - sum_m_p, ext.t() as i64);
    let necessary_pass = necessary_lhs == Ratio::from_int(deg_diff);

    // conorm of the dual code, built through the same pipeline
    let dual_basis = conorm_two_point_basis(ext, -(cab.a + 1), n - cab.b - 1)?;
    assert_eq!(&dual_basis.divisor, con_h);
    let conorm_of_dual = build_ag_code(ext.ext_field(), d_prime_places, con_h, &dual_basis)?;
    let dual_of_conorm = code_prime.dual_matrix();
    let empirical_equal = conorm_of_dual.gen.rowspace_eq(&dual_of_conorm)?;
    Ok(Eq5Report {
        necessary_lhs,
        deg_diff,
        necessary_pass,
        empirical_equal,
        conorm_of_dual_dim: conorm_of_dual.dim,
        dual_of_conorm_dim: dual_of_conorm.rows(),
    })
}

/// Constant-extension code built two ways: by evaluating the embedded basis
/// at the (repeated) places above `D`, and by the column-repetition
/// generator. Both must agree entry-wise, and the hull dimension must equal
/// the base hull exactly.
#[derive(Debug, Clone)]
pub struct ConstantExtension {
    pub ext: ExtensionDescriptor,
    pub code: AGCode,
    pub base_hull: usize,
    pub hull: usize,
    pub necessary_lhs: Ratio,
    pub necessary_pass: bool,
    pub prediction: Prediction,
}

pub fn build_constant_ext_code(base: &AGCode, t: u32) -> Result<ConstantExtension> {
    let ext = ExtensionDescriptor::constant(&base.field, t)?;
    build_constant_ext_code_with(base, &ext)
}

/// Same construction with a caller-built descriptor, so sweeps over many
/// codes share one field-tower setup.
pub fn build_constant_ext_code_with(
    base: &AGCode,
    ext: &ExtensionDescriptor,
) -> Result<ConstantExtension> {
    let field = &base.field;
    assert_eq!(ext.family_name(), "constant", "constant-extension path only");
    assert_eq!(ext.base(), field, "descriptor base must match the code alphabet");
    let t = ext.t();
    let p = field.characteristic();
    if t.is_multiple_of(p) {
        return Err(Error::BadConstantDegree { t, characteristic: p });
    }
    let emb = ext.embedding();
    let ef = ext.ext_field();

    // column-repetition route
    let n_prime = base.length * t as usize;
    let mut kron_rows: Vec<Vec<FieldElement>> = Vec::with_capacity(base.dim);
    for r in 0..base.dim {
        let mut row = Vec::with_capacity(n_prime);
        for c in 0..base.length {
            let up = emb.map(base.gen.get(r, c))?;
            for _ in 0..t {
                row.push(up);
            }
        }
        kron_rows.push(row);
    }
    let kron = Matrix::from_rows(ef, kron_rows);

    // evaluation route: embedded basis functions at the places above D,
    // each listed t times
    let basis = rr_basis_rational(field, &base.div_g)?;
    assert_eq!(basis.dim(), base.dim, "constant path needs the full basis");
    let mut places_prime: Vec<Place> = Vec::new();
    for pl in &base.places {
        let above = ext.decompose(pl)?;
        assert_eq!(above.len(), 1, "constant extensions leave places inert");
        for _ in 0..t {
            places_prime.push(above[0].clone());
        }
    }
    let mut eval_rows: Vec<Vec<FieldElement>> = Vec::with_capacity(base.dim);
    for func in &basis.functions {
        let up = func.embed(emb)?;
        let row: Result<Vec<FieldElement>> =
            places_prime.iter().map(|p| up.eval_at_place(p)).collect();
        eval_rows.push(row?);
    }
    let eval = Matrix::from_rows(ef, eval_rows);
    assert_eq!(eval, kron, "evaluation route must reproduce the repeated-column generator");

    let base_hull = hull_dim_rank(&base.gen);
    let hull = hull_dim_rank(&kron);
    assert_eq!(hull, base_hull, "constant extensions preserve the hull dimension");
    let hull_basis = hull_intersection_basis(&kron)?;
    assert_eq!(hull_basis.rows(), hull);

    // the necessary duality condition degenerates: deg Diff = 0, while the
    // left side is n(t-1)/t for t > 1
    let m = ext.total_degree() as i64;
    let necessary_lhs = Ratio::new(m * base.length as i64 - base.length as i64, t as i64);
    let necessary_pass = necessary_lhs == Ratio::from_int(0);

    let prediction = Prediction::assemble(
        PredictionSource::Remark34,
        PredictionKind::Equality,
        Ratio::from_int(base_hull as i64),
        vec![Condition::new(
            format!("t = {t} not divisible by the characteristic {p}"),
            true,
        )],
        false,
    );

    let mut div_d = Divisor::zero(ext.ambient());
    for pl in &base.places {
        let above = ext.decompose(pl)?;
        div_d = div_d.add(&Divisor::single(above[0].clone(), 1))?;
    }
    let div_g = ext.conorm(&base.div_g)?;
    let code = AGCode {
        field: ef.clone(),
        length: n_prime,
        dim: base.dim,
        gen: kron,
        places: places_prime,
        div_d,
        div_g,
        div_h: None,
    };
    Ok(ConstantExtension {
        ext: ext.clone(),
        code,
        base_hull,
        hull,
        necessary_lhs,
        necessary_pass,
        prediction,
    })
}

/// Which of the four `(a, b)` regimes of the closed-form table applies.
fn regime(n: i64, a: i64, b: i64) -> (usize, Condition) {
    let upper = 2 * b >= n - 1;
    let (idx, name) = match (a >= 0, upper) {
        (true, true) => (1, "regime: a >= 0 and b >= (n-1)/2"),
        (true, false) => (2, "regime: a >= 0 and b < (n-1)/2"),
        (false, true) => (3, "regime: a < 0 and b >= (n-1)/2"),
        (false, false) => (4, "regime: a < 0 and b < (n-1)/2"),
    };
    (idx, Condition::new(name, true))
}

/// Closed-form hull dimension of the rational two-point code: the four-case
/// formula by regime.
pub fn prop51_value(n: i64, a: i64, b: i64) -> i64 {
    match regime(n, a, b).0 {
        1 => n - a - b - 1,
        2 => b - a,
        3 => n + a - b,
        4 => a + b + 1,
        _ => unreachable!(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaFamily {
    Prop51,
    /// Elliptic target (genus one).
    Ex52,
    /// Hyperelliptic target; carries `deg f`.
    Ex53 { deg_f: i64 },
    /// Hermitian target; carries `p`.
    Ex54 { p: i64 },
}

/// Evaluate one closed-form predictor at `(q, n, a, b)` with the base hull
/// dimension taken from the oracle. Errors when `(a, b)` violates the
/// two-point window.
pub fn predict_formulas(
    n: usize,
    a: i64,
    b: i64,
    family: FormulaFamily,
    h_base: usize,
) -> Result<Prediction> {
    let n = n as i64;
    if a + b < 0 || a + b > n - 2 || b - a < 0 || b - a > n {
        return Err(Error::WindowViolation(format!(
            "(a, b) = ({a}, {b}) outside the two-point window for n = {n}"
        )));
    }
    let h = h_base as i64;
    let (case, regime_cond) = regime(n, a, b);
    match family {
        FormulaFamily::Prop51 => Ok(Prediction::assemble(
            PredictionSource::Prop51,
            PredictionKind::Equality,
            Ratio::from_int(prop51_value(n, a, b)),
            vec![regime_cond],
            false,
        )),
        FormulaFamily::Ex52 => {
            let conditions = vec![
                regime_cond,
                Condition::new("1 < b-a", b - a > 1),
                Condition::new("b-a < n-1", b - a < n - 1),
                Condition::new("0 < a+b", a + b > 0),
                Condition::new("a+b < n-2", a + b < n - 2),
            ];
            Ok(Prediction::assemble(
                PredictionSource::Ex52,
                PredictionKind::Equality,
                Ratio::from_int(2 * h - 2),
                conditions,
                true,
            ))
        }
        FormulaFamily::Ex53 { deg_f } => {
            let half = (deg_f + 1) / 2; // ceil(m/2) for odd m
            let cond = match case {
                1 => Condition::new("n - ceil(m/2) > a+b", n - half > a + b),
                2 => Condition::new("b-a > ceil(m/2) - 1", b - a > half - 1),
                3 => Condition::new("n - ceil(m/2) + 1 > b-a", n - half + 1 > b - a),
                4 => Condition::new("a+b > ceil(m/2) - 2", a + b > half - 2),
                _ => unreachable!(),
            };
            Ok(Prediction::assemble(
                PredictionSource::Ex53,
                PredictionKind::Equality,
                Ratio::from_int(2 * h - half),
                vec![regime_cond, cond],
                true,
            ))
        }
        FormulaFamily::Ex54 { p } => {
            let two_over_p = Ratio::new(2, p);
            let cond = match case {
                1 => Condition::new(
                    "n - p + 2/p - 1 > a+b",
                    Ratio::from_int(n - p - 1).add(two_over_p) > Ratio::from_int(a + b),
                ),
                2 => Condition::new(
                    "b-a > p - 2/p",
                    Ratio::from_int(b - a) > Ratio::from_int(p).sub(two_over_p),
                ),
                3 => Condition::new(
                    "n - p + 2/p > b-a",
                    Ratio::from_int(n - p).add(two_over_p) > Ratio::from_int(b - a),
                ),
                4 => Condition::new(
                    "a+b > p - 2/p - 1",
                    Ratio::from_int(a + b) > Ratio::from_int(p - 1).sub(two_over_p),
                ),
                _ => unreachable!(),
            };
            Ok(Prediction::assemble(
                PredictionSource::Ex54,
                PredictionKind::Equality,
                Ratio::from_int(p * h - p * (p + 1) / 2 + 1),
                vec![regime_cond, cond],
                true,
            ))
        }
    }
}

/// Assemble every predictor relevant to a conorm instance. Values use the
/// oracle base hull, never the closed base formula. Corollary values are
/// cross-checked against the main ramified-extension formula whenever both
/// apply.
#[allow(clippy::too_many_arguments)]
fn predict_hull(
    cab: &TwoPointCode,
    ext: &ExtensionDescriptor,
    h_base: usize,
    gcd_ell: &EllReport,
    deg_diff: i64,
    ramification: &RamificationRecord,
    eq3_holds: bool,
    eq5: &Eq5Report,
) -> Result<Vec<Prediction>> {
    let mut out = Vec::new();
    let n = cab.n() as i64;
    let (a, b) = (cab.a, cab.b);
    let m = ext.total_degree() as i64;
    let t = ext.t() as i64;
    let m_geo = ext.geometric_degree() as i64;
    let h = h_base as i64;
    let deg_g = a + b;
    let deg_gcd = gcd_ell.degree;
    let gcd_nonspecial = !gcd_ell.is_special();
    let p_char = ext.base().characteristic() as i64;

    // unramified case with untouched constant field
    {
        let conditions = vec![
            Condition::new("extension is unramified", deg_diff == 0),
            Condition::new("t = 1", t == 1),
            Condition::new("gcd(q, m) = 1", m % p_char != 0),
            Condition::new("2g-2 < deg G < n", -2 < deg_g && deg_g < n),
            Condition::new("gcd(G, H) non-special", gcd_nonspecial),
        ];
        out.push(Prediction::assemble(
            PredictionSource::Thm32,
            PredictionKind::LowerBound,
            Ratio::from_int(m * h),
            conditions.clone(),
            false,
        ));
        let mut eq_conditions = conditions;
        eq_conditions.push(Condition::new("2g-2 < deg gcd(G, H)", deg_gcd > -2));
        out.push(Prediction::assemble(
            PredictionSource::Thm32,
            PredictionKind::Equality,
            Ratio::from_int(m * h),
            eq_conditions,
            false,
        ));
    }

    // separable ramified extension
    let thm41_value = Ratio::from_int(m_geo * h).sub(Ratio::new(deg_diff, 2));
    let thm41_threshold =
        Ratio::from_int(deg_gcd) > Ratio::from_int(-2).add(Ratio::new(t * deg_diff, m));
    {
        let conditions = vec![
            Condition::new("extension is separable", true),
            Condition::new("2g-2 < deg G < n", -2 < deg_g && deg_g < n),
            Condition::new("gcd(G, H) non-special", gcd_nonspecial),
            Condition::new("place-counting condition e = m/m_P", eq3_holds),
            Condition::new("conorm-dual identity, empirical", eq5.empirical_equal),
        ];
        out.push(Prediction::assemble(
            PredictionSource::Thm41,
            PredictionKind::LowerBound,
            thm41_value,
            conditions.clone(),
            false,
        ));
        let mut eq_conditions = conditions;
        eq_conditions.push(Condition::new(
            "deg gcd > 2g-2 + (t/m) deg Diff",
            thm41_threshold,
        ));
        out.push(Prediction::assemble(
            PredictionSource::Thm41,
            PredictionKind::Equality,
            thm41_value,
            eq_conditions,
            false,
        ));
    }

    // Galois tame corollaries
    let galois_tame = ext.is_galois() && ext.is_tame() && !ramification.loci.is_empty();
    {
        let mut weighted = 0i64;
        for locus in &ramification.loci {
            weighted += (m - (locus.places_above * locus.rel_degree) as i64)
                * locus.base_degree as i64;
        }
        let cor42_value = Ratio::from_int(m_geo * h).sub(Ratio::new(weighted, 2 * t));
        let conditions = vec![
            Condition::new("extension is Galois and tame", galois_tame),
            Condition::new("2g-2 < deg G < n", -2 < deg_g && deg_g < n),
            Condition::new("gcd(G, H) non-special", gcd_nonspecial),
            Condition::new("place-counting condition e = m/m_P", eq3_holds),
            Condition::new("conorm-dual identity, empirical", eq5.empirical_equal),
        ];
        let lower = Prediction::assemble(
            PredictionSource::Cor42,
            PredictionKind::LowerBound,
            cor42_value,
            conditions.clone(),
            false,
        );
        if galois_tame {
            // the weighted ramification sum is t * deg Diff
            assert_eq!(
                cor42_value, thm41_value,
                "tame-case value must agree with the general ramified formula"
            );
        }
        out.push(lower);
        let mut eq_conditions = conditions;
        eq_conditions.push(Condition::new(
            "deg gcd > 2g-2 + sum (1 - m_P f_P / m) deg P",
            Ratio::from_int(deg_gcd) > Ratio::from_int(-2).add(Ratio::new(weighted, m)),
        ));
        out.push(Prediction::assemble(
            PredictionSource::Cor42,
            PredictionKind::Equality,
            cor42_value,
            eq_conditions,
            false,
        ));

        // all ramified loci totally ramified
        let totally = galois_tame
            && t == 1
            && ramification.loci.iter().all(|l| l.e as i64 == m && l.places_above == 1);
        let deg_r = ramification.ramification_degree;
        let cor43_value =
            Ratio::from_int(m_geo * h).sub(Ratio::new((m - 1) * deg_r, 2 * t));
        let mut conditions43 = vec![
            Condition::new("extension is Galois and tame", galois_tame),
            Condition::new("all ramified places totally ramified", totally),
            Condition::new("2g-2 < deg G < n", -2 < deg_g && deg_g < n),
            Condition::new("gcd(G, H) non-special", gcd_nonspecial),
            Condition::new("place-counting condition e = m/m_P", eq3_holds),
            Condition::new("conorm-dual identity, empirical", eq5.empirical_equal),
        ];
        if totally {
            assert_eq!(
                cor43_value, thm41_value,
                "totally-ramified value must agree with the general ramified formula"
            );
        }
        out.push(Prediction::assemble(
            PredictionSource::Cor43,
            PredictionKind::LowerBound,
            cor43_value,
            conditions43.clone(),
            false,
        ));
        conditions43.push(Condition::new(
            "deg gcd > 2g-2 + ((m-1)/m) deg R",
            Ratio::from_int(deg_gcd)
                > Ratio::from_int(-2).add(Ratio::new((m - 1) * deg_r, m)),
        ));
        out.push(Prediction::assemble(
            PredictionSource::Cor43,
            PredictionKind::Equality,
            cor43_value,
            conditions43,
            false,
        ));
    }

    // family closed forms
    let family = family_formula(ext);
    if let Some(family) = family {
        let pred = predict_formulas(cab.n(), a, b, family, h_base)?;
        if pred.applicable {
            assert_eq!(
                pred.value, thm41_value,
                "family closed form must agree with the general ramified formula"
            );
        }
        out.push(pred);
    }
    Ok(out)
}

/// Closed-form family for an extension descriptor, when one applies.
pub fn family_formula(ext: &ExtensionDescriptor) -> Option<FormulaFamily> {
    if ext.t() != 1 {
        return None;
    }
    match ext.genus() {
        Ok(1) => Some(FormulaFamily::Ex52),
        Ok(g) if g >= 2 => {
            let rhs = ext.rhs()?;
            let deg_f = rhs.degree()? as i64;
            let p = ext.base().characteristic() as i64;
            let is_hermitian = !ext.is_tame()
                && ext.base().extension_degree() == 2
                && deg_f == p + 1
                && rhs.is_monic_monomial();
            if is_hermitian {
                Some(FormulaFamily::Ex54 { p })
            } else if ext.is_tame() && ext.geometric_degree() == 2 && deg_f == 5 {
                Some(FormulaFamily::Ex53 { deg_f })
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Hull report for a base two-point code, with the closed-form prediction.
/// The two hull oracles are asserted equal; in the two-point window the
/// hull equals the gcd code, which is also asserted.
pub fn base_hull_report(cab: &TwoPointCode) -> Result<HullReport> {
    let rank_dim = hull_dim_rank(&cab.code.gen);
    // classification runs the intersection oracle and checks agreement
    let class = cab.code.classify()?;
    assert_eq!(rank_dim, class.hull_dim, "hull oracles must agree");
    let gcd = cab.gcd_divisor();
    let gcd_ell = ell_dim_rational(&gcd)?;
    assert_eq!(
        rank_dim as i64, gcd_ell.ell,
        "two-point hulls equal the gcd-code dimension"
    );
    let prediction =
        predict_formulas(cab.n(), cab.a, cab.b, FormulaFamily::Prop51, rank_dim)?;
    Ok(HullReport {
        q: cab.q(),
        n: cab.n(),
        k: cab.code.dim,
        hull_dim_rank: rank_dim,
        hull_dim_intersection: class.hull_dim,
        is_lcd: class.is_lcd,
        is_self_dual: class.is_self_dual,
        gcd_degree: gcd.degree(),
        gcd_ell: gcd_ell.ell,
        gcd_special: gcd_ell.is_special(),
        gcd_divisor: gcd,
        predictions: vec![prediction],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::agcodes::build_cab;
    use crate::fflinalg::Poly;
    use crate::galois::FieldCtx;

    fn hermitian_instance(a: i64, b: i64) -> ConormInstance {
        let f9 = FieldCtx::new(3, 2).unwrap();
        let cab = build_cab(&f9, 8, a, b).unwrap();
        let ext = ExtensionDescriptor::hermitian(3).unwrap();
        build_conorm_code(&cab, &ext).unwrap()
    }

    #[test]
    fn hermitian_8_0_4_instance() {
        let inst = hermitian_instance(0, 4);
        assert_eq!(inst.n_prime(), 24);
        assert_eq!(inst.code.div_g.degree(), 12);
        assert_eq!(inst.k_prime(), 10); // 12 + 1 - 3
        assert_eq!(inst.h_base, 3);
        assert_eq!(inst.gcd_ell.ell, 3);
        assert_eq!(inst.con_gcd_ell.ell, 4);
        assert!(inst.eq3.holds);
        // necessary condition: (1/t)(mn - sum m_P) = 0 but deg Diff = 10
        assert_eq!(inst.eq5.necessary_lhs, Ratio::from_int(0));
        assert_eq!(inst.eq5.deg_diff, 10);
        assert!(!inst.eq5.necessary_pass);
        // both oracles agree on the conorm hull
        assert_eq!(inst.h_prime_rank, inst.h_prime_intersection);
    }

    #[test]
    fn hermitian_predictions() {
        let inst = hermitian_instance(0, 4);
        let ex54: Vec<&Prediction> = inst
            .predictions
            .iter()
            .filter(|p| p.source == PredictionSource::Ex54)
            .collect();
        assert_eq!(ex54.len(), 1);
        assert!(ex54[0].applicable);
        assert_eq!(ex54[0].value, Ratio::from_int(4)); // 3*3 - 6 + 1
        assert!(ex54[0].assumes_duality);

        let thm41_eq: Vec<&Prediction> = inst
            .predictions
            .iter()
            .filter(|p| p.source == PredictionSource::Thm41 && p.kind == PredictionKind::Equality)
            .collect();
        assert_eq!(thm41_eq[0].value, Ratio::from_int(4));
        // the duality hypothesis fails empirically, so the bound is
        // recorded as inapplicable on this instance
        assert!(!thm41_eq[0].applicable || inst.eq5.empirical_equal);

        // wild extension: the tame corollaries never apply
        assert!(inst
            .predictions
            .iter()
            .filter(|p| matches!(p.source, PredictionSource::Cor42 | PredictionSource::Cor43))
            .all(|p| !p.applicable));
    }

    #[test]
    fn trivial_kummer_extension_reproduces_the_base_code() {
        let f9 = FieldCtx::new(3, 2).unwrap();
        let cab = build_cab(&f9, 8, 1, 4).unwrap();
        let ext = ExtensionDescriptor::kummer(&f9, 1, Poly::x(&f9), 1).unwrap();
        let inst = build_conorm_code(&cab, &ext).unwrap();
        assert_eq!(inst.n_prime(), 8);
        assert_eq!(inst.k_prime(), 6);
        assert_eq!(inst.code.gen, cab.code.gen);
        assert_eq!(inst.h_prime_rank, inst.h_base);
        assert!(inst.eq5.empirical_equal);
        assert!(inst.eq5.necessary_pass);
    }

    #[test]
    fn artin_schreier_elliptic_over_gf4() {
        let f4 = FieldCtx::new(2, 2).unwrap();
        let cab = build_cab(&f4, 3, 0, 1).unwrap();
        let ext =
            ExtensionDescriptor::elliptic_artin_schreier(&f4, Poly::monomial(&f4, f4.one(), 3))
                .unwrap();
        let inst = build_conorm_code(&cab, &ext).unwrap();
        assert_eq!(inst.n_prime(), 6);
        assert_eq!(inst.code.div_g.degree(), 2);
        assert_eq!(inst.k_prime(), 2); // 2 + 1 - 1
        assert_eq!(inst.eq5.necessary_lhs, Ratio::from_int(0));
        assert_eq!(inst.eq5.deg_diff, 4);
        assert!(!inst.eq5.necessary_pass);
    }

    #[test]
    fn assumption3_violation_is_rejected_with_places() {
        // over GF(8) with f = x^3, some evaluation places are inert
        let f8 = FieldCtx::new(2, 3).unwrap();
        let cab = build_cab(&f8, 7, 0, 2).unwrap();
        let ext =
            ExtensionDescriptor::artin_schreier(&f8, Poly::monomial(&f8, f8.one(), 3), 1).unwrap();
        match build_conorm_code(&cab, &ext) {
            Err(Error::AssumptionViolated { places }) => assert!(!places.is_empty()),
            other => panic!("expected an assumption violation, got {other:?}"),
        }
    }

    #[test]
    fn constant_extension_kronecker() {
        let f9 = FieldCtx::new(3, 2).unwrap();
        let cab = build_cab(&f9, 8, 1, 4).unwrap();
        let ext = build_constant_ext_code(&cab.code, 2).unwrap();
        assert_eq!(ext.code.length, 16);
        assert_eq!(ext.code.dim, 6);
        assert_eq!(ext.base_hull, 2);
        assert_eq!(ext.hull, 2);
        assert!(!ext.necessary_pass);
        assert!(ext.prediction.applicable);
        assert_eq!(ext.prediction.value, Ratio::from_int(2));

        // t = 1 keeps the code identical
        let same = build_constant_ext_code(&cab.code, 1).unwrap();
        assert_eq!(same.code.gen, cab.code.gen);
        assert!(same.necessary_pass);

        // characteristic divides t: rejected
        assert!(matches!(
            build_constant_ext_code(&cab.code, 3),
            Err(Error::BadConstantDegree { .. })
        ));
    }

    #[test]
    fn prop51_matches_oracle_on_gf9() {
        let f9 = FieldCtx::new(3, 2).unwrap();
        for (a, b) in [(1, 4), (0, 4), (-1, 3), (0, 0), (2, 3), (-2, 4)] {
            let cab = build_cab(&f9, 8, a, b).unwrap();
            let report = base_hull_report(&cab).unwrap();
            assert_eq!(report.predictions.len(), 1);
            let pred = &report.predictions[0];
            assert!(pred.applicable);
            assert!(pred.matches(report.hull_dim_rank), "({a},{b})");
        }
    }

    #[test]
    fn prop51_expected_values() {
        // frozen case-by-case values of the four-branch formula
        assert_eq!(prop51_value(8, 1, 4), 2);
        assert_eq!(prop51_value(8, -1, 3), 3);
        assert_eq!(prop51_value(8, 0, 2), 2);
        assert_eq!(prop51_value(8, -1, 4), 3);
    }

    #[test]
    fn ex54_formula_example() {
        let pred = predict_formulas(8, 0, 4, FormulaFamily::Ex54 { p: 3 }, 3).unwrap();
        assert!(pred.applicable); // 8 - 3 + 2/3 - 1 = 4.67 > 4
        assert_eq!(pred.value, Ratio::from_int(4));
        // outside the window: error with the named constraint
        assert!(matches!(
            predict_formulas(8, 4, 4, FormulaFamily::Ex54 { p: 3 }, 3),
            Err(Error::WindowViolation(_))
        ));
    }

    #[test]
    fn lcd_audit_on_elliptic_instance() {
        // (a, b) = (-1, 2) at n = 3 sits in the b - a = n corner: hull 0
        // with deg G = 1, so the audit fires
        let f4 = FieldCtx::new(2, 2).unwrap();
        let lcd_cab = build_cab(&f4, 3, -1, 2).unwrap();
        assert_eq!(hull_dim_rank(&lcd_cab.code.gen), 0);
        let ext =
            ExtensionDescriptor::elliptic_artin_schreier(&f4, Poly::monomial(&f4, f4.one(), 3))
                .unwrap();
        let inst = build_conorm_code(&lcd_cab, &ext).unwrap();
        let audit = inst.lcd_audit.expect("elliptic target with an LCD base");
        assert!(audit.base_lcd);
        assert!(!audit.gcd_principal); // deg gcd = -1 here
        // a degree-0 divisor keeps its hull empty only when non-principal;
        // here the outcome is recorded, not asserted
        let _ = audit.conorm_lcd;

        // deg G = 0 stays outside the audited window
        let no_audit = build_conorm_code(&build_cab(&f4, 3, 0, 0).unwrap(), &ext).unwrap();
        assert!(no_audit.lcd_audit.is_none());
    }
}
