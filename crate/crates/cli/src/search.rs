//! Exhaustive search for extension descriptors under which every evaluation
//! place of the two-point code splits completely and the place-counting
//! assumption holds. Enumeration order is deterministic (ascending
//! coefficient encodings), so results are reproducible.

use agchull_core::divisors::{Divisor, Place};
use agchull_core::extensions::ExtensionDescriptor;
use agchull_core::fflinalg::Poly;
use agchull_core::galois::FieldCtx;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchFamily {
    Hermitian,
    EllipticArtinSchreier,
    EllipticKummer,
    HyperellipticKummer,
    Constant,
}

impl SearchFamily {
    pub fn parse(name: &str) -> Result<SearchFamily, String> {
        match name {
            "hermitian" => Ok(SearchFamily::Hermitian),
            "elliptic-as" => Ok(SearchFamily::EllipticArtinSchreier),
            "elliptic-kummer" => Ok(SearchFamily::EllipticKummer),
            "hyperelliptic-kummer" => Ok(SearchFamily::HyperellipticKummer),
            "constant" => Ok(SearchFamily::Constant),
            other => Err(format!("unknown family `{other}`")),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            SearchFamily::Hermitian => "hermitian",
            SearchFamily::EllipticArtinSchreier => "elliptic-as",
            SearchFamily::EllipticKummer => "elliptic-kummer",
            SearchFamily::HyperellipticKummer => "hyperelliptic-kummer",
            SearchFamily::Constant => "constant",
        }
    }
}

/// Evaluation places of the length-`n` two-point code.
pub fn evaluation_places(field: &FieldCtx, n: usize) -> Result<Vec<Place>, String> {
    if n < 2 {
        return Err(format!("n must be at least 2 (got n={n})"));
    }
    if !(field.order() as u64 - 1).is_multiple_of(n as u64) {
        return Err(format!("n must divide q-1 (got n={n}, q={})", field.order()));
    }
    let zeta = field.nth_root_of_unity(n as u32).map_err(|e| e.to_string())?;
    Ok((0..n as u64).map(|i| Place::finite(field, field.pow(zeta, i))).collect())
}

/// Every evaluation place splits completely into rational places and the
/// place-counting condition holds.
fn accepts(ext: &ExtensionDescriptor, places: &[Place]) -> bool {
    let want = ext.total_degree() as usize;
    let mut d = Divisor::zero(ext.base_ambient());
    for p in places {
        let above = match ext.decompose(p) {
            Ok(above) => above,
            Err(_) => return false,
        };
        if above.len() != want {
            return false;
        }
        let all_rational = above.iter().all(|pl| match pl {
            Place::Ext(ep) => ep.is_rational() && ep.res_x.is_some(),
            _ => false,
        });
        if !all_rational {
            return false;
        }
        d = d.add(&Divisor::single(p.clone(), 1)).unwrap();
    }
    ext.check_assumption3(&d).map(|r| r.holds).unwrap_or(false)
}

fn monic_poly(field: &FieldCtx, deg: usize, index: u64) -> Poly {
    let q = field.order() as u64;
    let mut vals = Vec::with_capacity(deg + 1);
    let mut rest = index;
    for _ in 0..deg {
        vals.push((rest % q) as u32);
        rest /= q;
    }
    vals.push(1);
    Poly::from_values(field, &vals).unwrap()
}

/// Search the family's parameter space, accepting descriptors under which
/// the length-`n` code embeds. Stops after `limit` finds when given.
pub fn search_split_instance(
    field: &FieldCtx,
    n: usize,
    family: SearchFamily,
    limit: Option<usize>,
) -> Result<Vec<ExtensionDescriptor>, String> {
    let places = evaluation_places(field, n)?;
    let q = field.order() as u64;
    let p = field.characteristic();
    let mut out = Vec::new();
    let full = |out: &Vec<ExtensionDescriptor>| limit.map(|l| out.len() >= l).unwrap_or(false);
    match family {
        SearchFamily::Hermitian => {
            if field.extension_degree() != 2 {
                return Err(format!(
                    "hermitian search needs q = p^2 (got q={})",
                    field.order()
                ));
            }
            let ext = ExtensionDescriptor::hermitian(p).map_err(|e| e.to_string())?;
            if accepts(&ext, &places) {
                out.push(ext);
            }
        }
        SearchFamily::Constant => {
            // only the trivial constant extension leaves every place split
            let ext = ExtensionDescriptor::constant(field, 1).map_err(|e| e.to_string())?;
            if accepts(&ext, &places) {
                out.push(ext);
            }
        }
        SearchFamily::EllipticArtinSchreier => {
            if p != 2 {
                return Err(String::from("the Artin-Schreier elliptic model needs char 2"));
            }
            for index in 0..q.pow(3) {
                if full(&out) {
                    break;
                }
                let f = monic_poly(field, 3, index);
                // quick trace filter before the full decomposition test
                let split_all = places.iter().all(|pl| match pl {
                    Place::Finite { alpha, .. } => {
                        let a = field.element(*alpha).unwrap();
                        field.absolute_trace(f.eval(a)) == 0
                    }
                    _ => false,
                });
                if !split_all {
                    continue;
                }
                if let Ok(ext) = ExtensionDescriptor::elliptic_artin_schreier(field, f) {
                    if accepts(&ext, &places) {
                        out.push(ext);
                    }
                }
            }
        }
        SearchFamily::EllipticKummer | SearchFamily::HyperellipticKummer => {
            if p == 2 {
                return Err(String::from("the quadratic Kummer model needs odd char"));
            }
            let deg = if family == SearchFamily::EllipticKummer { 3 } else { 5 };
            for index in 0..q.pow(deg as u32) {
                if full(&out) {
                    break;
                }
                let f = monic_poly(field, deg, index);
                // quick filter: f(zeta^i) must be a nonzero square
                let split_all = places.iter().all(|pl| match pl {
                    Place::Finite { alpha, .. } => {
                        let a = field.element(*alpha).unwrap();
                        let v = f.eval(a);
                        !v.is_zero() && field.pow(v, (q - 1) / 2) == field.one()
                    }
                    _ => false,
                });
                if !split_all {
                    continue;
                }
                let built = if deg == 3 {
                    ExtensionDescriptor::elliptic_kummer(field, f)
                } else {
                    ExtensionDescriptor::hyperelliptic_kummer(field, f)
                };
                if let Ok(ext) = built {
                    if accepts(&ext, &places) {
                        out.push(ext);
                    }
                }
            }
        }
    }
    Ok(out)
}
