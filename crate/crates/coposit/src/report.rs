//! Machine-readable and plain-text reports. Every exact quantity is
//! serialized as an integer or a "p/q" string; no floating point appears.

use num::Zero;
use serde::Serialize;

use copositive::certificate::CertificateReport;
use copositive::encoding::EncodingStats;
use copositive::lcp::MinimizationResult;
use copositive::rational::format_rational;

#[derive(Serialize)]
pub struct BoundAudit {
    pub measured_bits_fixed: u64,
    /// measured_bits_fixed² ≤ 289·L³
    pub bound_fixed_ok: bool,
    pub measured_bits_dyadic: u64,
    /// measured_bits_dyadic² ≤ 100·L³
    pub bound_dyadic_ok: bool,
}

#[derive(Serialize)]
pub struct ReportDocument {
    pub verdict: &'static str,
    /// Exact box minimum as "p/q".
    pub gamma: String,
    pub n: usize,
    #[serde(rename = "L")]
    pub encoding_bits: u64,
    pub d: String,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scheme: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spacing_denominator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate_value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measured_bits: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(flatten)]
    pub bounds: Option<BoundAudit>,
    pub timing_ms: u128,
}

impl ReportDocument {
    pub fn for_check(minimum: &MinimizationResult, stats: &EncodingStats, timing_ms: u128) -> Self {
        Self {
            verdict: verdict(minimum),
            gamma: format_rational(&minimum.gamma),
            n: stats.n,
            encoding_bits: stats.bits,
            d: stats.max_abs.to_string(),
            method: minimum.method.to_string(),
            scheme: None,
            spacing_denominator: None,
            certificate: None,
            certificate_value: None,
            measured_bits: None,
            bounds: None,
            timing_ms,
        }
    }

    pub fn for_certify(
        minimum: &MinimizationResult,
        selected: &CertificateReport,
        fixed: &CertificateReport,
        dyadic: &CertificateReport,
        timing_ms: u128,
    ) -> Self {
        Self {
            verdict: verdict(minimum),
            gamma: format_rational(&minimum.gamma),
            n: selected.stats.n,
            encoding_bits: selected.stats.bits,
            d: selected.stats.max_abs.to_string(),
            method: minimum.method.to_string(),
            scheme: Some(selected.scheme.to_string()),
            spacing_denominator: Some(selected.spacing_denominator.to_string()),
            certificate: Some(selected.y.iter().map(format_rational).collect()),
            certificate_value: Some(format_rational(&selected.value)),
            measured_bits: Some(selected.measured_bits),
            bounds: Some(BoundAudit {
                measured_bits_fixed: fixed.measured_bits,
                bound_fixed_ok: fixed.bound_bits_ok,
                measured_bits_dyadic: dyadic.measured_bits,
                bound_dyadic_ok: dyadic.bound_bits_ok,
            }),
            timing_ms,
        }
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        let mut line = |key: &str, value: String| {
            out.push_str(key);
            out.push_str(": ");
            out.push_str(&value);
            out.push('\n');
        };
        line("verdict", self.verdict.to_string());
        line("gamma", self.gamma.clone());
        line("n", self.n.to_string());
        line("L", self.encoding_bits.to_string());
        line("d", self.d.clone());
        line("method", self.method.clone());
        if let Some(scheme) = &self.scheme {
            line("scheme", scheme.clone());
        }
        if let Some(denom) = &self.spacing_denominator {
            line("spacing-denominator", denom.clone());
        }
        if let Some(cert) = &self.certificate {
            line("certificate", cert.join(" "));
        }
        if let Some(value) = &self.certificate_value {
            line("certificate-value", value.clone());
        }
        if let Some(bits) = self.measured_bits {
            line("measured-bits", bits.to_string());
        }
        if let Some(bounds) = &self.bounds {
            line(
                "bound-fixed[17*L^(3/2)]",
                audit_word(bounds.bound_fixed_ok, bounds.measured_bits_fixed),
            );
            line(
                "bound-dyadic[10*L^(3/2)]",
                audit_word(bounds.bound_dyadic_ok, bounds.measured_bits_dyadic),
            );
        }
        line("timing-ms", self.timing_ms.to_string());
        out
    }
}

fn verdict(minimum: &MinimizationResult) -> &'static str {
    if minimum.gamma.is_zero() {
        "copositive"
    } else {
        "not-copositive"
    }
}

fn audit_word(ok: bool, measured: u64) -> String {
    format!(
        "{} ({measured} bits)",
        if ok { "satisfied" } else { "violated" }
    )
}
