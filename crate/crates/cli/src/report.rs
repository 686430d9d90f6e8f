//! The structured output document and the payload shapes inside it.

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

use tcalg_core::{BoundsReport, Certificate, IntegerPolynomialInT, Params, Polynomial};

/// One self-describing document per invocation. The command payload is
/// flattened into the top level, so a bounds report reads
/// `{"command": "bounds", ..., "lower": 3, "certificate": {...}}`.
#[derive(Debug, Serialize)]
pub struct Envelope {
    pub command: &'static str,
    /// Everything needed to replay the invocation.
    pub arguments: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsDoc>,
    pub engine_version: &'static str,
    pub exact_arithmetic: bool,
    #[serde(flatten)]
    pub result: Value,
}

impl Envelope {
    pub fn new(command: &'static str, arguments: Value, params: Option<&Params>, result: Value) -> Self {
        Envelope {
            command,
            arguments,
            params: params.map(ParamsDoc::from),
            engine_version: crate::ENGINE_VERSION,
            exact_arithmetic: true,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct ParamsDoc {
    pub d: u32,
    pub m: u32,
    pub n: u32,
    pub r: u32,
}

impl From<&Params> for ParamsDoc {
    fn from(p: &Params) -> Self {
        ParamsDoc { d: p.d(), m: p.m(), n: p.n(), r: p.r() }
    }
}

/// Exact integers are emitted as decimal strings.
pub fn int(x: &BigInt) -> String {
    x.to_string()
}

#[derive(Debug, Serialize)]
pub struct TermDoc {
    pub coefficient: String,
    pub monomial: String,
    pub degree: u64,
}

#[derive(Debug, Serialize)]
pub struct PolynomialDoc {
    pub text: String,
    pub terms: Vec<TermDoc>,
}

impl PolynomialDoc {
    pub fn new(p: &Polynomial) -> Self {
        let terms = p
            .terms()
            .rev()
            .map(|(m, c)| TermDoc { coefficient: int(c), monomial: m.to_string(), degree: m.degree(p.params()) })
            .collect();
        PolynomialDoc { text: p.format(), terms }
    }
}

#[derive(Debug, Serialize)]
pub struct CertificateDoc {
    pub k: usize,
    pub factors: Vec<String>,
    pub witness: String,
    pub coefficient: String,
    pub product_terms: usize,
    pub verified: bool,
}

impl CertificateDoc {
    pub fn new(c: &Certificate, verified: bool) -> Self {
        CertificateDoc {
            k: c.k(),
            factors: c.factors().iter().map(Polynomial::format).collect(),
            witness: c.witness().to_string(),
            coefficient: int(c.coefficient()),
            product_terms: c.product().len(),
            verified,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BoundsDoc {
    pub lower: u64,
    pub upper: u64,
    pub exact: bool,
    pub regime: &'static str,
    pub certificate: CertificateDoc,
}

impl BoundsDoc {
    pub fn new(r: &BoundsReport, verified: bool) -> Self {
        BoundsDoc {
            lower: r.lower,
            upper: r.upper,
            exact: r.exact,
            regime: r.regime.name(),
            certificate: CertificateDoc::new(&r.certificate, verified),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TPolyDoc {
    pub text: String,
    pub coefficients: Vec<String>,
}

impl TPolyDoc {
    pub fn new(p: &IntegerPolynomialInT) -> Self {
        TPolyDoc { text: p.to_string(), coefficients: p.coeffs().iter().map(int).collect() }
    }
}

pub fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("payload serializes")
}
