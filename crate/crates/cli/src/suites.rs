//! Verification suites behind `agchull verify --suite NAME`.
//!
//! Mathematical identities (oracle agreement, dimension counts, Hurwitz,
//! degree laws, the closed-form base hulls, the constant-extension identity,
//! the dimension chain) are hard checks; statements contingent on the
//! blanket duality assumption are soft report-only lines that never affect
//! the exit status.

use std::fmt::Write as _;
use std::sync::OnceLock;

use agchull_core::agcodes::{build_cab, hull_dim_rank, hull_intersection_basis};
use agchull_core::conormcodes::{
    base_hull_report, build_conorm_code, build_constant_ext_code_with, prop51_value,
    ConormInstance, PredictionKind, PredictionSource,
};
use agchull_core::divisors::{Ambient, Divisor, Place};
use agchull_core::extensions::ExtensionDescriptor;
use agchull_core::fflinalg::{Matrix, Poly};
use agchull_core::galois::FieldCtx;
use agchull_core::rational::Ratio;
use agchull_core::riemannroch::{ell_dim_extension, one_point_basis};

use crate::rng::SplitMix64;
use crate::search::{evaluation_places, search_split_instance, SearchFamily};

#[derive(Debug, Clone)]
pub struct CheckLine {
    pub label: String,
    pub pass: bool,
    /// Report-only lines never affect the suite status.
    pub soft: bool,
    pub detail: String,
}

impl CheckLine {
    fn hard(label: impl Into<String>, pass: bool, detail: impl Into<String>) -> CheckLine {
        CheckLine { label: label.into(), pass, soft: false, detail: detail.into() }
    }

    fn soft(label: impl Into<String>, detail: impl Into<String>) -> CheckLine {
        CheckLine { label: label.into(), pass: true, soft: true, detail: detail.into() }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: String,
    pub lines: Vec<CheckLine>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.pass || l.soft)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            let status = if line.soft {
                "INFO"
            } else if line.pass {
                "PASS"
            } else {
                "FAIL"
            };
            let _ = writeln!(out, "[{status}] {}: {}", line.label, line.detail);
        }
        let _ = writeln!(
            out,
            "suite {}: {}",
            self.name,
            if self.passed() { "PASS" } else { "FAIL" }
        );
        out
    }
}

pub fn run_suite(name: &str) -> Result<SuiteOutcome, String> {
    let lines = match name {
        "prop51" => criterion_prop51(),
        "remark34" => criterion_remark34(),
        "thm41" => {
            let mut lines = criterion_rr_engine();
            lines.extend(criterion_dimension_chain());
            lines.extend(criterion_structural());
            lines
        }
        "examples" => {
            let mut lines = criterion_example_formulas();
            lines.extend(criterion_assumption_audit());
            lines
        }
        "properties" => criterion_properties(),
        other => return Err(format!("unknown suite `{other}`")),
    };
    Ok(SuiteOutcome { name: name.to_string(), lines })
}

pub fn suite_names() -> [&'static str; 5] {
    ["prop51", "remark34", "thm41", "examples", "properties"]
}

fn divisors_of(n: u32) -> Vec<u32> {
    (2..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn admissible_pairs(n: usize) -> Vec<(i64, i64)> {
    let n = n as i64;
    let mut out = Vec::new();
    for a in -n..=n {
        for b in -n..=n {
            if a + b >= 0 && a + b <= n - 2 && b - a >= 0 && b - a <= n {
                out.push((a, b));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// shared instance corpus
// ---------------------------------------------------------------------------

pub struct CorpusGroup {
    pub family: &'static str,
    pub q: u32,
    pub n: usize,
    pub descriptors_found: usize,
    pub instances: Vec<ConormInstance>,
}

pub struct CurveCorpus {
    pub hermitian: Vec<ConormInstance>,
    pub groups: Vec<CorpusGroup>,
}

static CORPUS: OnceLock<CurveCorpus> = OnceLock::new();

/// Bound on the number of descriptors kept per configured family size; the
/// searches are deterministic, so the corpus is too.
const SEARCH_LIMIT: usize = 12;

pub fn curve_corpus() -> &'static CurveCorpus {
    CORPUS.get_or_init(build_corpus)
}

fn build_corpus() -> CurveCorpus {
    let f9 = FieldCtx::new(3, 2).expect("GF(9)");
    let hermitian_ext = ExtensionDescriptor::hermitian(3).expect("hermitian p=3");
    let mut hermitian = Vec::new();
    for (a, b) in admissible_pairs(8) {
        let cab = build_cab(&f9, 8, a, b).expect("two-point code");
        hermitian.push(build_conorm_code(&cab, &hermitian_ext).expect("hermitian instance"));
    }

    let sizes: [(&'static str, SearchFamily, (u32, u32), usize); 7] = [
        ("elliptic-as", SearchFamily::EllipticArtinSchreier, (2, 2), 3),
        ("elliptic-as", SearchFamily::EllipticArtinSchreier, (2, 3), 7),
        ("elliptic-kummer", SearchFamily::EllipticKummer, (5, 1), 4),
        ("elliptic-kummer", SearchFamily::EllipticKummer, (3, 2), 8),
        ("elliptic-kummer", SearchFamily::EllipticKummer, (13, 1), 6),
        ("hyperelliptic-kummer", SearchFamily::HyperellipticKummer, (3, 2), 8),
        ("hyperelliptic-kummer", SearchFamily::HyperellipticKummer, (13, 1), 6),
    ];
    let mut groups = Vec::new();
    for (family, search, (p, k), n) in sizes {
        let field = FieldCtx::new(p, k).expect("corpus field");
        let found = search_split_instance(&field, n, search, Some(SEARCH_LIMIT))
            .expect("search runs");
        let mut instances = Vec::new();
        for ext in &found {
            for (a, b) in admissible_pairs(n) {
                let cab = build_cab(&field, n, a, b).expect("two-point code");
                instances.push(build_conorm_code(&cab, ext).expect("corpus instance"));
            }
        }
        groups.push(CorpusGroup {
            family,
            q: field.order(),
            n,
            descriptors_found: found.len(),
            instances,
        });
    }
    CurveCorpus { hermitian, groups }
}

// ---------------------------------------------------------------------------
// criterion 1: closed-form base hulls, exhaustively
// ---------------------------------------------------------------------------

pub fn criterion_prop51() -> Vec<CheckLine> {
    let fields = [(5u32, 1u32), (2, 3), (3, 2), (13, 1)];
    let mut lines = Vec::new();
    for (p, k) in fields {
        let field = FieldCtx::new(p, k).expect("field");
        let q = field.order();
        for n in divisors_of(q - 1) {
            let pairs = admissible_pairs(n as usize);
            let mut mismatches = Vec::new();
            for &(a, b) in &pairs {
                let cab = build_cab(&field, n as usize, a, b).expect("two-point code");
                let report = base_hull_report(&cab).expect("hull report");
                let formula = prop51_value(n as i64, a, b);
                if report.hull_dim_rank as i64 != formula
                    || report.hull_dim_intersection as i64 != formula
                {
                    mismatches.push((a, b, report.hull_dim_rank, formula));
                }
            }
            lines.push(CheckLine::hard(
                format!("base hull formula q={q} n={n}"),
                mismatches.is_empty(),
                if mismatches.is_empty() {
                    format!("{}/{} oracle-formula matches", pairs.len(), pairs.len())
                } else {
                    format!("mismatches: {mismatches:?}")
                },
            ));
        }
    }
    lines
}

// ---------------------------------------------------------------------------
// criterion 2: constant extensions preserve generators and hulls
// ---------------------------------------------------------------------------

pub fn criterion_remark34() -> Vec<CheckLine> {
    let configs: [(u32, u32, &[u32]); 2] = [(3, 2, &[2, 4]), (2, 2, &[3])];
    let mut lines = Vec::new();
    for (p, k, ts) in configs {
        let field = FieldCtx::new(p, k).expect("field");
        let q = field.order();
        for &t in ts {
            let descriptor = ExtensionDescriptor::constant(&field, t).expect("constant tower");
            let mut count = 0usize;
            let mut failures = Vec::new();
            for n in divisors_of(q - 1) {
                for (a, b) in admissible_pairs(n as usize) {
                    let cab = build_cab(&field, n as usize, a, b).expect("two-point code");
                    // generator and hull identities are asserted inside
                    match build_constant_ext_code_with(&cab.code, &descriptor) {
                        Ok(ext) => {
                            count += 1;
                            if ext.hull != ext.base_hull {
                                failures.push((n, a, b));
                            }
                        }
                        Err(_) => failures.push((n, a, b)),
                    }
                }
            }
            lines.push(CheckLine::hard(
                format!("constant extension q={q} t={t}"),
                failures.is_empty(),
                if failures.is_empty() {
                    format!("{count} codes: repeated-column generator and hull preserved")
                } else {
                    format!("failures at {failures:?}")
                },
            ));
        }
    }
    lines
}

// ---------------------------------------------------------------------------
// criterion 3: Riemann-Roch engine counts and Clifford bound
// ---------------------------------------------------------------------------

fn rr_presets() -> Vec<(String, ExtensionDescriptor)> {
    let f4 = FieldCtx::new(2, 2).expect("GF(4)");
    let f8 = FieldCtx::new(2, 3).expect("GF(8)");
    vec![
        ("hermitian p=2".to_string(), ExtensionDescriptor::hermitian(2).unwrap()),
        ("hermitian p=3".to_string(), ExtensionDescriptor::hermitian(3).unwrap()),
        (
            "elliptic-as over GF(4)".to_string(),
            ExtensionDescriptor::elliptic_artin_schreier(&f4, Poly::monomial(&f4, f4.one(), 3))
                .unwrap(),
        ),
        (
            "elliptic-as over GF(8)".to_string(),
            ExtensionDescriptor::elliptic_artin_schreier(&f8, Poly::monomial(&f8, f8.one(), 3))
                .unwrap(),
        ),
    ]
}

pub fn criterion_rr_engine() -> Vec<CheckLine> {
    let mut lines = Vec::new();
    for (name, ext) in rr_presets() {
        let g = ext.genus().expect("preset genus");
        let mut count_ok = true;
        for r in (2 * g - 1)..=(2 * g + 10) {
            match one_point_basis(&ext, r) {
                Ok(basis) => count_ok &= basis.dim() as i64 == r + 1 - g,
                Err(_) => count_ok = false,
            }
        }
        let mut clifford_ok = true;
        for r in 0..=(2 * g - 2) {
            let basis = one_point_basis(&ext, r).expect("special-range basis");
            clifford_ok &= 2 * (basis.dim() as i64 - 1) <= r;
            let rep = ell_dim_extension(&basis.divisor, &ext).expect("dimension report");
            clifford_ok &= rep.ell == basis.dim() as i64;
        }
        lines.push(CheckLine::hard(
            format!("one-point counts {name}"),
            count_ok,
            format!("|L(r P'inf)| = r + 1 - {g} for r in [{}, {}]", 2 * g - 1, 2 * g + 10),
        ));
        lines.push(CheckLine::hard(
            format!("Clifford bound {name}"),
            clifford_ok,
            format!("2(l-1) <= r on the special range [0, {}]", 2 * g - 2),
        ));
    }
    lines
}

// ---------------------------------------------------------------------------
// criterion 4: the dimension chain on every constructed instance
// ---------------------------------------------------------------------------

fn chain_holds(inst: &ConormInstance) -> bool {
    let m_geo = inst.ext.geometric_degree() as i64;
    let lhs = Ratio::from_int(inst.con_gcd_ell.ell);
    let bound =
        Ratio::from_int(m_geo * inst.gcd_ell.ell).sub(Ratio::new(inst.deg_diff, 2));
    if lhs < bound {
        return false;
    }
    let past_threshold = m_geo * inst.gcd_ell.degree > -2 * m_geo + inst.deg_diff;
    !past_threshold || lhs == bound
}

pub fn criterion_dimension_chain() -> Vec<CheckLine> {
    let corpus = curve_corpus();
    let mut lines = Vec::new();
    let hermitian_ok = corpus.hermitian.iter().all(chain_holds);
    lines.push(CheckLine::hard(
        "dimension chain hermitian p=3 n=8".to_string(),
        hermitian_ok,
        format!("{} instances, bound and threshold equality exact", corpus.hermitian.len()),
    ));
    for group in &corpus.groups {
        let label = format!("dimension chain {} q={} n={}", group.family, group.q, group.n);
        if group.instances.is_empty() {
            lines.push(CheckLine::hard(label, true, "no admissible instance".to_string()));
            continue;
        }
        let ok = group.instances.iter().all(chain_holds);
        lines.push(CheckLine::hard(
            label,
            ok,
            format!(
                "{} instances from {} descriptors",
                group.instances.len(),
                group.descriptors_found
            ),
        ));
    }
    lines
}

// ---------------------------------------------------------------------------
// criterion 5: the closed-form examples against l(Con(gcd))
// ---------------------------------------------------------------------------

fn example_line(
    label: String,
    instances: &[ConormInstance],
    source: PredictionSource,
    descriptors: usize,
) -> CheckLine {
    if instances.is_empty() {
        return CheckLine::hard(label, true, "no admissible instance".to_string());
    }
    let mut applicable = 0usize;
    let mut ok = true;
    for inst in instances {
        let pred = inst
            .predictions
            .iter()
            .find(|p| p.source == source && p.kind == PredictionKind::Equality);
        let pred = match pred {
            Some(p) => p,
            None => continue,
        };
        if !pred.applicable {
            continue;
        }
        applicable += 1;
        // recompute the closed form from the oracle base hull, independently
        // of the predictor module
        let h = inst.h_base as i64;
        let expected = match source {
            PredictionSource::Ex52 => 2 * h - 2,
            PredictionSource::Ex53 => {
                let deg_f = inst.ext.rhs().and_then(|f| f.degree()).unwrap() as i64;
                2 * h - (deg_f + 1) / 2
            }
            PredictionSource::Ex54 => {
                let p = inst.ext.base().characteristic() as i64;
                p * h - p * (p + 1) / 2 + 1
            }
            _ => unreachable!("only the family closed forms are audited here"),
        };
        ok &= pred.value == Ratio::from_int(expected);
        ok &= inst.con_gcd_ell.ell == expected;
    }
    CheckLine::hard(
        label,
        ok,
        format!(
            "{applicable} in-regime instances of {} (from {descriptors} descriptors): l(Con(gcd)) equals the closed form",
            instances.len()
        ),
    )
}

pub fn criterion_example_formulas() -> Vec<CheckLine> {
    let corpus = curve_corpus();
    let mut lines = Vec::new();
    lines.push(example_line(
        "hermitian closed form p=3 n=8".to_string(),
        &corpus.hermitian,
        PredictionSource::Ex54,
        1,
    ));
    for group in &corpus.groups {
        let source = match group.family {
            "hyperelliptic-kummer" => PredictionSource::Ex53,
            _ => PredictionSource::Ex52,
        };
        lines.push(example_line(
            format!("{} closed form q={} n={}", group.family, group.q, group.n),
            &group.instances,
            source,
            group.descriptors_found,
        ));
    }
    lines
}

// ---------------------------------------------------------------------------
// criterion 6: the duality-assumption audit (report-only where stated)
// ---------------------------------------------------------------------------

pub fn criterion_assumption_audit() -> Vec<CheckLine> {
    let corpus = curve_corpus();
    let mut lines = Vec::new();
    let mut necessary_ok = true;
    let mut oracles_ok = true;
    let mut empirical_true = 0usize;
    let mut ex54_applicable = 0usize;
    let mut ex54_matched = 0usize;
    for inst in &corpus.hermitian {
        necessary_ok &= inst.eq5.necessary_lhs == Ratio::from_int(0)
            && inst.eq5.deg_diff == 10
            && !inst.eq5.necessary_pass;
        oracles_ok &= inst.h_prime_rank == inst.h_prime_intersection;
        if inst.eq5.empirical_equal {
            empirical_true += 1;
        }
        if let Some(pred) = inst
            .predictions
            .iter()
            .find(|p| p.source == PredictionSource::Ex54 && p.applicable)
        {
            ex54_applicable += 1;
            if pred.matches(inst.h_prime_rank) {
                ex54_matched += 1;
            }
        }
    }
    let n = corpus.hermitian.len();
    lines.push(CheckLine::hard(
        "duality necessary condition hermitian p=3 n=8".to_string(),
        necessary_ok,
        format!("(1/t)(mn - sum m_P) = 0 differs from deg Diff = 10 on all {n} instances"),
    ));
    lines.push(CheckLine::hard(
        "conorm hull oracle agreement".to_string(),
        oracles_ok,
        format!("rank and intersection oracles agree on all {n} instances"),
    ));
    lines.push(CheckLine::soft(
        "empirical duality outcome".to_string(),
        format!("Con(C^perp) = Con(C)^perp holds empirically on {empirical_true}/{n} instances"),
    ));
    lines.push(CheckLine::soft(
        "closed form vs oracle hull".to_string(),
        format!(
            "hermitian closed form applicable on {ex54_applicable} instances, oracle hull matches on {ex54_matched}"
        ),
    ));
    lines
}

// ---------------------------------------------------------------------------
// criterion 7: random-code property suite
// ---------------------------------------------------------------------------

pub fn criterion_properties() -> Vec<CheckLine> {
    let fields = [(2u32, 1u32), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2)];
    let mut lines = Vec::new();
    for (p, k) in fields {
        let field = FieldCtx::new(p, k).expect("field");
        let q = field.order();
        let mut rng = SplitMix64::new(0xa5c0de ^ (q as u64) << 20);
        let mut ok = true;
        for _ in 0..200 {
            let n = rng.below(12) as usize + 1;
            let rows = rng.below(n as u64 + 1) as usize;
            let data: Vec<_> = (0..rows * n)
                .map(|_| field.element(rng.below(q as u64) as u32).unwrap())
                .collect();
            let gen = Matrix::new(&field, rows, n, data).row_basis();
            let hull_rank = hull_dim_rank(&gen);
            let hull_basis = match hull_intersection_basis(&gen) {
                Ok(b) => b,
                Err(_) => {
                    ok = false;
                    continue;
                }
            };
            ok &= hull_basis.rows() == hull_rank;
            // the dual shares the hull dimension
            let dual = gen.kernel_basis();
            ok &= hull_dim_rank(&dual) == hull_rank;
            // biduality
            ok &= dual.kernel_basis().rowspace_eq(&gen).unwrap();
        }
        lines.push(CheckLine::hard(
            format!("random-code properties GF({q})"),
            ok,
            "200 codes: oracle agreement, dual-hull symmetry, biduality".to_string(),
        ));
    }
    lines
}

// ---------------------------------------------------------------------------
// criterion 8: structural identities
// ---------------------------------------------------------------------------

pub fn criterion_structural() -> Vec<CheckLine> {
    let mut lines = Vec::new();

    // Hurwitz genus values for the presets
    let f9 = FieldCtx::new(3, 2).expect("GF(9)");
    let quintic = Poly::monomial(&f9, f9.one(), 5).sub(&Poly::x(&f9));
    let hyper = ExtensionDescriptor::hyperelliptic_kummer(&f9, quintic).unwrap();
    let f8 = FieldCtx::new(2, 3).expect("GF(8)");
    let as_elliptic =
        ExtensionDescriptor::elliptic_artin_schreier(&f8, Poly::monomial(&f8, f8.one(), 3))
            .unwrap();
    let genus_checks = [
        ("hermitian p=2", ExtensionDescriptor::hermitian(2).unwrap().genus(), 1),
        ("hermitian p=3", ExtensionDescriptor::hermitian(3).unwrap().genus(), 3),
        ("elliptic-as GF(8)", as_elliptic.genus(), 1),
        ("kummer deg-5", hyper.genus(), 2),
        ("constant t=4", ExtensionDescriptor::constant(&f9, 4).unwrap().genus(), 0),
    ];
    let genus_ok = genus_checks.iter().all(|(_, got, want)| *got == Ok(*want));
    lines.push(CheckLine::hard(
        "Hurwitz genus presets".to_string(),
        genus_ok,
        "p(p-1)/2 for hermitian, 1 for elliptic, 2 for the quintic model, 0 for constant".to_string(),
    ));

    // sum e*f = [F':F] at every decomposition of every base place
    let mut ef_ok = true;
    for (_, ext) in rr_presets() {
        let base = ext.base().clone();
        let m = ext.total_degree();
        for alpha in base.elements() {
            let above = ext.decompose(&Place::finite(&base, alpha)).expect("decomposition");
            let total: u32 = above
                .iter()
                .map(|p| match p {
                    Place::Ext(ep) => ep.e * ep.rel_degree,
                    _ => unreachable!(),
                })
                .sum();
            ef_ok &= total == m;
        }
        let above = ext.decompose(&Place::infinite(&base)).expect("decomposition");
        ef_ok &= above
            .iter()
            .map(|p| match p {
                Place::Ext(ep) => ep.e * ep.rel_degree,
                _ => unreachable!(),
            })
            .sum::<u32>()
            == m;
    }
    lines.push(CheckLine::hard(
        "fundamental identity sum e*f = [F':F]".to_string(),
        ef_ok,
        "checked at every place of every preset".to_string(),
    ));

    // conorm degree law and gcd commutation on random two-point divisors
    let mut law_ok = true;
    let mut rng = SplitMix64::new(0xde90);
    for (_, ext) in rr_presets() {
        let base = ext.base().clone();
        let ambient = Ambient::Rational { q: base.order() };
        for _ in 0..25 {
            let mk = |rng: &mut SplitMix64| {
                Divisor::from_terms(
                    ambient.clone(),
                    vec![
                        (Place::finite(&base, base.zero()), rng.below(9) as i64 - 4),
                        (Place::finite(&base, base.one()), rng.below(9) as i64 - 4),
                        (Place::infinite(&base), rng.below(9) as i64 - 4),
                    ],
                )
                .unwrap()
            };
            let d1 = mk(&mut rng);
            let d2 = mk(&mut rng);
            let m_geo = ext.geometric_degree() as i64;
            let c1 = ext.conorm(&d1).expect("conorm");
            let c2 = ext.conorm(&d2).expect("conorm");
            law_ok &= c1.degree() == m_geo * d1.degree();
            law_ok &= c1.gcd(&c2).unwrap() == ext.conorm(&d1.gcd(&d2).unwrap()).unwrap();
            law_ok &= c1.add(&c2).unwrap()
                == ext.conorm(&d1.add(&d2).unwrap()).unwrap();
        }
    }
    lines.push(CheckLine::hard(
        "conorm degree law and gcd commutation".to_string(),
        law_ok,
        "deg Con(D) = (m/t) deg D and gcd(Con G, Con H) = Con(gcd(G, H))".to_string(),
    ));

    // the corpus instances re-verify the gcd identity on real divisors
    let corpus = curve_corpus();
    let mut corpus_ok = true;
    for inst in corpus.hermitian.iter().chain(corpus.groups.iter().flat_map(|g| &g.instances)) {
        let con_g = inst.ext.conorm(inst.base.g_divisor()).unwrap();
        let con_h = inst.ext.conorm(inst.base.h_divisor()).unwrap();
        corpus_ok &= con_g.gcd(&con_h).unwrap() == inst.con_gcd_divisor;
        corpus_ok &=
            inst.con_gcd_divisor.degree() == inst.ext.geometric_degree() as i64 * inst.gcd_ell.degree;
    }
    lines.push(CheckLine::hard(
        "instance-level structural identities".to_string(),
        corpus_ok,
        format!(
            "{} instances re-checked",
            corpus.hermitian.len()
                + corpus.groups.iter().map(|g| g.instances.len()).sum::<usize>()
        ),
    ));

    // split verification while we are here: every corpus group descriptor
    // leaves the evaluation places completely split
    let mut split_ok = true;
    for group in &corpus.groups {
        for inst in &group.instances {
            let field = inst.base.code.field.clone();
            let places = evaluation_places(&field, inst.base.n()).unwrap();
            for p in &places {
                let above = inst.ext.decompose(p).unwrap();
                split_ok &= above.len() == inst.ext.total_degree() as usize;
            }
        }
    }
    lines.push(CheckLine::hard(
        "search-found descriptors split completely".to_string(),
        split_ok,
        "every evaluation place decomposes into [F':F] rational places".to_string(),
    ));

    lines
}
