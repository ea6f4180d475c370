//! JSON instance configuration. Unknown keys are rejected, and window
//! violations are reported at parse time with the failing constraint named.

use agchull_core::agcodes::field_of_order;
use agchull_core::extensions::ExtensionDescriptor;
use agchull_core::fflinalg::Poly;
use agchull_core::galois::FieldCtx;
use serde::Deserialize;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceConfig {
    pub p: u32,
    pub k: u32,
    pub n: usize,
    #[serde(default)]
    pub a: Option<i64>,
    #[serde(default)]
    pub b: Option<i64>,
    #[serde(default)]
    pub a_range: Option<[i64; 2]>,
    #[serde(default)]
    pub b_range: Option<[i64; 2]>,
    #[serde(default)]
    pub extension: Option<ExtensionConfig>,
    #[serde(default)]
    pub suite: Option<String>,
    #[serde(default)]
    pub out_json: Option<String>,
    #[serde(default)]
    pub out_csv: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionConfig {
    pub family: String,
    #[serde(default)]
    pub p: Option<u32>,
    #[serde(default)]
    pub t: Option<u32>,
    #[serde(default)]
    pub m: Option<u32>,
    /// Defining polynomial coefficients, low-to-high element encodings.
    #[serde(default)]
    pub f: Option<Vec<u32>>,
}

impl InstanceConfig {
    pub fn parse(text: &str) -> Result<InstanceConfig, String> {
        let cfg: InstanceConfig =
            serde_json::from_str(text).map_err(|e| format!("config parse error: {e}"))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn field(&self) -> Result<FieldCtx, String> {
        FieldCtx::new(self.p, self.k).map_err(|e| e.to_string())
    }

    fn validate(&self) -> Result<(), String> {
        let field = self.field()?;
        let q = field.order();
        if self.n < 2 {
            return Err(format!("n must be at least 2 (got n={})", self.n));
        }
        if !(q as u64 - 1).is_multiple_of(self.n as u64) {
            return Err(format!("n must divide q-1 (got n={}, q={q})", self.n));
        }
        if let (Some(a), Some(b)) = (self.a, self.b) {
            let n = self.n as i64;
            if a + b < 0 || a + b > n - 2 {
                return Err(format!("0 <= a+b <= n-2 required (got a+b={})", a + b));
            }
            if b - a < 0 || b - a > n {
                return Err(format!("0 <= b-a <= n required (got b-a={})", b - a));
            }
        }
        if let Some(ext) = &self.extension {
            ext.build(&field)?;
        }
        Ok(())
    }

    /// All admissible `(a, b)` pairs within the optional configured ranges,
    /// in ascending `(a, b)` order.
    pub fn admissible_pairs(&self) -> Vec<(i64, i64)> {
        if let (Some(a), Some(b)) = (self.a, self.b) {
            return vec![(a, b)];
        }
        let n = self.n as i64;
        let (a_lo, a_hi) = self.a_range.map(|[l, h]| (l, h)).unwrap_or((-n, n));
        let (b_lo, b_hi) = self.b_range.map(|[l, h]| (l, h)).unwrap_or((-n, n));
        let mut out = Vec::new();
        for a in a_lo..=a_hi {
            for b in b_lo..=b_hi {
                if a + b >= 0 && a + b <= n - 2 && b - a >= 0 && b - a <= n {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

impl ExtensionConfig {
    pub fn build(&self, base: &FieldCtx) -> Result<ExtensionDescriptor, String> {
        let t = self.t.unwrap_or(1);
        let poly = |coeffs: &Option<Vec<u32>>| -> Result<Poly, String> {
            let coeffs = coeffs
                .as_ref()
                .ok_or_else(|| format!("family {} needs the coefficient list f", self.family))?;
            Poly::from_values(base, coeffs).map_err(|e| e.to_string())
        };
        let descriptor = match self.family.as_str() {
            "constant" => ExtensionDescriptor::constant(base, t),
            "hermitian" => {
                let p = self.p.unwrap_or(base.characteristic());
                if base.order() != p * p {
                    return Err(format!(
                        "hermitian preset needs q = p^2 (got q={}, p={p})",
                        base.order()
                    ));
                }
                ExtensionDescriptor::hermitian(p)
            }
            "elliptic-as" => {
                let f = match &self.f {
                    Some(_) => poly(&self.f)?,
                    None => Poly::monomial(base, base.one(), 3),
                };
                ExtensionDescriptor::elliptic_artin_schreier(base, f)
            }
            "elliptic-kummer" => ExtensionDescriptor::elliptic_kummer(base, poly(&self.f)?),
            "hyperelliptic-kummer" => {
                ExtensionDescriptor::hyperelliptic_kummer(base, poly(&self.f)?)
            }
            "kummer" => {
                let m = self.m.ok_or("kummer family needs m")?;
                ExtensionDescriptor::kummer(base, m, poly(&self.f)?, t)
            }
            "artin-schreier" => ExtensionDescriptor::artin_schreier(base, poly(&self.f)?, t),
            other => return Err(format!("unknown extension family `{other}`")),
        };
        descriptor.map_err(|e| e.to_string())
    }
}

/// Reconstruct a field from its order, for CLI flags that pass `--q`.
pub fn field_from_order(q: u32) -> Result<FieldCtx, String> {
    field_of_order(q).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unknown_keys() {
        let err = InstanceConfig::parse(r#"{"p":3,"k":2,"n":8,"bogus":1}"#).unwrap_err();
        assert!(err.contains("bogus"), "{err}");
    }

    #[test]
    fn rejects_window_violations_by_name() {
        let err = InstanceConfig::parse(r#"{"p":3,"k":2,"n":7}"#).unwrap_err();
        assert!(err.contains("n must divide q-1"), "{err}");
        let err = InstanceConfig::parse(r#"{"p":3,"k":2,"n":8,"a":4,"b":4}"#).unwrap_err();
        assert!(err.contains("a+b"), "{err}");
        let err = InstanceConfig::parse(r#"{"p":3,"k":2,"n":8,"a":3,"b":2}"#).unwrap_err();
        assert!(err.contains("b-a"), "{err}");
    }

    #[test]
    fn admissible_pair_count_for_gf9_n8() {
        let cfg = InstanceConfig::parse(r#"{"p":3,"k":2,"n":8}"#).unwrap();
        // independent enumeration gives 32 integer points in the window
        assert_eq!(cfg.admissible_pairs().len(), 32);
    }

    #[test]
    fn builds_extensions() {
        let cfg = InstanceConfig::parse(
            r#"{"p":3,"k":2,"n":8,"extension":{"family":"hermitian","p":3}}"#,
        )
        .unwrap();
        let ext = cfg.extension.as_ref().unwrap().build(&cfg.field().unwrap()).unwrap();
        assert_eq!(ext.total_degree(), 3);
    }
}
