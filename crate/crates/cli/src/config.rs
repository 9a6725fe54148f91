//! JSON configuration documents. Structure constants are exact rational
//! strings; polynomials in `H` are ascending-power arrays of them.

use std::fmt;

use num_traits::Zero;
use quartic_core::algebra::{close_jacobi, AlgebraSpec, HConst, Mode, H};
use quartic_core::example::section4;
use quartic_core::ratcore::{parse_rational, MultiPoly, Rational};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("malformed config")]
    Json(#[from] serde_json::Error),
    #[error("invalid spec")]
    Spec(#[from] quartic_core::Error),
    #[error("{0}")]
    Invalid(String),
}

/// A rational number serialized as a string such as `"-5/2"`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Exact(pub Rational);

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

struct ExactVisitor;

impl Visitor<'_> for ExactVisitor {
    type Value = Exact;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a rational number written as a string, e.g. \"-5/2\"")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Exact, E> {
        parse_rational(v).map(Exact).ok_or_else(|| E::custom(format!("not a rational number: {:?}", v)))
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_str(ExactVisitor)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeName {
    Classical,
    #[default]
    Quantum,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SolverSettings {
    pub p_max: usize,
    pub e_window: [Exact; 2],
    pub tol: f64,
}

impl Default for SolverSettings {
    fn default() -> Self {
        SolverSettings {
            p_max: 4,
            e_window: [Exact(Rational::from_integer((-1000).into())), Exact(Rational::from_integer(1000.into()))],
            tol: 1e-9,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ConfigDocument {
    pub mode: ModeName,
    pub tau: Exact,
    pub lambda: Exact,
    pub beta: Exact,
    pub alpha: Vec<Exact>,
    pub gamma: Vec<Exact>,
    pub delta: Vec<Exact>,
    pub epsilon: Vec<Exact>,
    pub mu: Vec<Exact>,
    pub nu: Vec<Exact>,
    pub xi: Vec<Exact>,
    pub zeta: Vec<Exact>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub casimir_of_h: Option<Vec<Exact>>,
    pub solver: SolverSettings,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

fn to_h_poly(cs: &[Exact]) -> MultiPoly {
    MultiPoly::from_terms(&[H], cs.iter().enumerate().map(|(k, c)| (vec![k as u32], c.0.clone())))
}

fn from_h_poly(p: &MultiPoly) -> Result<Vec<Exact>, ConfigError> {
    if p.is_zero() {
        return Ok(Vec::new());
    }
    p.coefficients_in(H)
        .iter()
        .map(|c| {
            c.as_constant()
                .map(Exact)
                .ok_or_else(|| ConfigError::Invalid(format!("coefficient {} is not a number", c)))
        })
        .collect()
}

impl ConfigDocument {
    fn slot(&self, c: HConst) -> &[Exact] {
        match c {
            HConst::Alpha => &self.alpha,
            HConst::Gamma => &self.gamma,
            HConst::Delta => &self.delta,
            HConst::Epsilon => &self.epsilon,
            HConst::Mu => &self.mu,
            HConst::Nu => &self.nu,
            HConst::Xi => &self.xi,
            HConst::Zeta => &self.zeta,
        }
    }

    fn slot_mut(&mut self, c: HConst) -> &mut Vec<Exact> {
        match c {
            HConst::Alpha => &mut self.alpha,
            HConst::Gamma => &mut self.gamma,
            HConst::Delta => &mut self.delta,
            HConst::Epsilon => &mut self.epsilon,
            HConst::Mu => &mut self.mu,
            HConst::Nu => &mut self.nu,
            HConst::Xi => &mut self.xi,
            HConst::Zeta => &mut self.zeta,
        }
    }

    /// The spec with Jacobi-derived constants filled in.
    pub fn to_spec(&self) -> Result<AlgebraSpec, ConfigError> {
        let mode = match self.mode {
            ModeName::Classical => Mode::Classical,
            ModeName::Quantum => Mode::Quantum,
        };
        let mut s = AlgebraSpec::zero(mode);
        s.tau = self.tau.0.clone();
        s.lambda = self.lambda.0.clone();
        s.beta = self.beta.0.clone();
        for c in HConst::ALL {
            *s.get_mut(c) = to_h_poly(self.slot(c));
        }
        s.validate()?;
        Ok(close_jacobi(&s))
    }

    pub fn casimir(&self) -> Option<MultiPoly> {
        self.casimir_of_h.as_deref().map(to_h_poly)
    }

    pub fn window(&self) -> (Rational, Rational) {
        (self.solver.e_window[0].0.clone(), self.solver.e_window[1].0.clone())
    }

    pub fn from_spec(spec: &AlgebraSpec) -> Result<Self, ConfigError> {
        let mut doc = ConfigDocument {
            mode: match spec.mode {
                Mode::Classical => ModeName::Classical,
                Mode::Quantum => ModeName::Quantum,
            },
            tau: Exact(spec.tau.clone()),
            lambda: Exact(spec.lambda.clone()),
            beta: Exact(spec.beta.clone()),
            ..Default::default()
        };
        for c in HConst::ALL {
            *doc.slot_mut(c) = from_h_poly(spec.get(c))?;
        }
        Ok(doc)
    }
}

/// Parses and validates a document; unknown keys and floats in place of
/// rational strings are rejected.
pub fn parse_config(text: &str) -> Result<ConfigDocument, ConfigError> {
    let doc: ConfigDocument = serde_json::from_str(text)?;
    doc.to_spec()?;
    let [lo, hi] = &doc.solver.e_window;
    if lo.0 > hi.0 {
        return Err(ConfigError::Invalid(format!("empty energy window [{}, {}]", lo.0, hi.0)));
    }
    Ok(doc)
}

pub fn emit_config(doc: &ConfigDocument) -> String {
    serde_json::to_string_pretty(doc).expect("config documents always serialize")
}

/// The extended-oscillator example at a given `l ≥ 0`.
pub fn generate_example(l: &Rational) -> Result<ConfigDocument, ConfigError> {
    if *l < Rational::zero() {
        return Err(ConfigError::Invalid(format!("l = {} must be nonnegative", l)));
    }
    let ex = section4(&MultiPoly::constant(l.clone()))?;
    let mut doc = ConfigDocument::from_spec(&ex.spec)?;
    doc.casimir_of_h = Some(from_h_poly(&ex.casimir_of_h)?);
    doc.notes = ex.notes;
    doc.notes.insert(0, format!("extended-oscillator example with l = {}", l));
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use quartic_core::ratcore::{int, rat};

    #[test]
    fn minimal_and_rejections() {
        let d = parse_config(r#"{"mode":"quantum"}"#).unwrap();
        assert_eq!(d, ConfigDocument::default());
        assert!(parse_config(r#"{"delta":[0.5]}"#).is_err());
        assert!(parse_config(r#"{"delta":["1/2"], "extra": 1}"#).is_err());
        assert!(parse_config(r#"{"tau":"x"}"#).is_err());
        assert!(parse_config(r#"{"delta":["0","0","0","0"]"#).is_err());
        assert!(parse_config(r#"{"delta":["1","0","2"]}"#).is_err());
        assert!(parse_config(r#"{"delta":["1","0","0"]}"#).is_ok());
    }

    #[test]
    fn example_round_trip() {
        let d = generate_example(&int(1)).unwrap();
        assert_eq!(d.mu, vec![Exact(int(-14)), Exact(int(-3))]);
        assert_eq!(d.lambda, Exact(rat(-5, 4)));
        let text = emit_config(&d);
        assert_eq!(parse_config(&text).unwrap(), d);
        assert!(generate_example(&int(-1)).is_err());
    }
}
