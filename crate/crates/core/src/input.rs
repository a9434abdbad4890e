//! The input document: a JSON object naming the space and the two
//! distributions as decimal-or-fraction strings, in label order.
//!
//! ```json
//! {"space": ["d", "h", "n"],
//!  "distributions": {"pi1": ["1", "0.5", "0.2"],
//!                    "pi2": ["1", "0.3", "0.4"]}}
//! ```

use crate::distribution::PossibilityDistribution;
use crate::error::Error;
use crate::rational::Rational;
use crate::space::Space;
use serde::Deserialize;

#[derive(Debug, Clone, Deserialize)]
pub struct InputDocument {
    pub space: Vec<String>,
    pub distributions: InputDistributions,
}

#[derive(Debug, Clone, Deserialize)]
pub struct InputDistributions {
    pub pi1: Vec<String>,
    pub pi2: Vec<String>,
}

/// How to treat distributions whose maximum is below 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalizeMode {
    /// Reject unnormalized input (the default).
    Reject,
    /// Rescale each distribution by dividing by its maximum.
    Max,
}

pub fn parse_document(json: &str) -> Result<InputDocument, Error> {
    serde_json::from_str(json).map_err(|e| Error::InputFormat {
        message: e.to_string(),
    })
}

/// Parses and validates a document into the two distributions.
pub fn load_document(
    json: &str,
    mode: NormalizeMode,
) -> Result<(PossibilityDistribution, PossibilityDistribution), Error> {
    let doc = parse_document(json)?;
    let space = Space::new(doc.space)?;
    let pi1 = build(&space, &doc.distributions.pi1, mode)?;
    let pi2 = build(&space, &doc.distributions.pi2, mode)?;
    Ok((pi1, pi2))
}

fn build(
    space: &Space,
    raw: &[String],
    mode: NormalizeMode,
) -> Result<PossibilityDistribution, Error> {
    let mut values = raw
        .iter()
        .map(|s| s.parse())
        .collect::<Result<Vec<Rational>, Error>>()?;
    if values.len() != space.n() {
        return Err(Error::LengthMismatch {
            expected: space.n(),
            got: values.len(),
        });
    }
    if mode == NormalizeMode::Max {
        let max = values.iter().max().expect("non-empty space").clone();
        if max.is_zero() {
            return Err(Error::NotNormalized {
                max: max.to_string(),
            });
        }
        for v in &mut values {
            *v = &*v / &max;
        }
    }
    PossibilityDistribution::new(space.clone(), values)
}
