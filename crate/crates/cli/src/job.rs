//! Job files: a ring, optional seed and sample count, and a command
//! specific payload. Elements are always JSON strings.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use zariski::{BigInt, Ring, RingDescriptor};

use crate::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RingSpec {
    Integer,
    Modular { modulus: Modulus },
    Univariate { var: String },
    Multivariate { vars: Vec<String> },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Modulus {
    Number(u64),
    Text(String),
}

#[derive(Debug, Clone, Deserialize)]
pub struct RingObject {
    #[serde(flatten)]
    pub spec: RingSpec,
    /// Limit on S-pairs per Groebner computation.
    pub pair_budget: Option<usize>,
}

impl RingObject {
    pub fn build(&self) -> Result<Ring, CliError> {
        let desc = match &self.spec {
            RingSpec::Integer => RingDescriptor::Integer,
            RingSpec::Modular { modulus } => RingDescriptor::Modular {
                modulus: match modulus {
                    Modulus::Number(n) => BigInt::from(*n),
                    Modulus::Text(t) => t
                        .trim()
                        .parse()
                        .map_err(|_| CliError::Usage(format!("modulus {t:?} is not an integer")))?,
                },
            },
            RingSpec::Univariate { var } => RingDescriptor::UniPoly { var: var.clone() },
            RingSpec::Multivariate { vars } => RingDescriptor::MultiPoly { vars: vars.clone() },
        };
        let ring = Ring::new(desc)?;
        Ok(match self.pair_budget {
            Some(b) => ring.with_pair_budget(b),
            None => ring,
        })
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct Job {
    pub ring: RingObject,
    /// If present, must name the command being run.
    pub command: Option<String>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    #[serde(flatten)]
    pub payload: Map<String, Value>,
}

impl Job {
    pub fn parse(text: &str) -> Result<Job, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("job file: {e}")))
    }

    /// The payload as the command's schema; unknown fields are rejected.
    pub fn payload<T: for<'de> Deserialize<'de>>(&self, command: &str) -> Result<T, CliError> {
        serde_json::from_value(Value::Object(self.payload.clone()))
            .map_err(|e| CliError::Usage(format!("{command} payload: {e}")))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Section {
    pub num: String,
    pub exp: u32,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OneList {
    pub a: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoLists {
    pub a: Vec<String>,
    pub b: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SupportPayload {
    #[serde(default)]
    pub pairs: Vec<[String; 2]>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverPayload {
    pub target: Vec<String>,
    pub parts: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocEqPayload {
    pub den: String,
    pub a: Section,
    pub b: Section,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RestrictPayload {
    pub from: String,
    pub to: String,
    pub section: Section,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GluePayload {
    pub h: String,
    pub parts: Vec<String>,
    pub sections: Vec<Section>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Presented {
    pub parts: Vec<String>,
    pub sections: Vec<Section>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectionEqPayload {
    pub over: Vec<String>,
    pub s: Presented,
    pub t: Presented,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TopPayload {
    pub parts: Vec<String>,
    #[serde(default)]
    pub elements: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsoPayload {
    pub case: String,
    pub f: String,
    pub g: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SheafPayload {
    pub h: String,
    pub f: String,
    pub g: String,
}

/// A certificate in the form printed by the other commands.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum CertJson {
    /// `x^k = Σ coeffs[i] gens[i]`
    Radical {
        x: String,
        gens: Vec<String>,
        k: u32,
        coeffs: Vec<String>,
    },
    /// `x = Σ coeffs[i] gens[i]`
    Combination {
        x: String,
        gens: Vec<String>,
        coeffs: Vec<String>,
    },
    /// `f^k x = 0`
    AnnPower { f: String, x: String, k: u32 },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyPayload {
    pub certs: Vec<CertJson>,
}
