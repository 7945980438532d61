//! Independent verification of a finished graph: order, size, degree
//! profile, girth and bipartiteness are recomputed from the edge set, and
//! optional claims (regularity k, girth g, order n) are checked against
//! them. For a (k, g) claim the Moore lower bound on the order of a
//! k-regular girth-g graph is reported, together with the excess
//! order − bound when the girth claim actually holds.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Girth, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error("Moore bound needs degree k >= 2, got {k}")]
    DegreeTooSmall { k: u32 },
    #[error("Moore bound needs girth g >= 3, got {g}")]
    GirthTooSmall { g: u32 },
    #[error("Moore bound for k = {k}, g = {g} overflows u64")]
    Overflow { k: u32, g: u32 },
}

/// Smallest possible order of a k-regular graph of girth g:
/// 1 + k·Σ(k−1)^i over i < (g−1)/2 for odd g, and
/// 2·Σ(k−1)^i over i < g/2 for even g.
pub fn moore_bound(k: u32, g: u32) -> Result<u64, CertifyError> {
    if k < 2 {
        return Err(CertifyError::DegreeTooSmall { k });
    }
    if g < 3 {
        return Err(CertifyError::GirthTooSmall { g });
    }
    let overflow = CertifyError::Overflow { k, g };
    let mut power: u64 = 1;
    let mut total: u64 = if g % 2 == 1 { 1 } else { 0 };
    let terms = if g % 2 == 1 { (g - 1) / 2 } else { g / 2 };
    for i in 0..terms {
        let branch = if g % 2 == 1 { k as u64 } else { 2 };
        let term = branch.checked_mul(power).ok_or(overflow.clone())?;
        total = total.checked_add(term).ok_or(overflow.clone())?;
        if i + 1 < terms {
            power = power.checked_mul(k as u64 - 1).ok_or(overflow.clone())?;
        }
    }
    Ok(total)
}

/// What the caller believes about the graph; any subset of the three
/// fields can be claimed.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Claim {
    pub degree: Option<u32>,
    pub girth: Option<usize>,
    pub order: Option<usize>,
}

impl Claim {
    /// The full claim "k-regular, girth g, order n".
    pub fn regular(degree: u32, girth: usize, order: usize) -> Claim {
        Claim { degree: Some(degree), girth: Some(girth), order: Some(order) }
    }
}

/// One verified expectation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// The full measurement record. Serializes to JSON with a fixed key order:
/// order, size, degrees, girth, bipartite, moore_bound, excess, checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub order: usize,
    pub size: usize,
    pub degrees: BTreeMap<usize, usize>,
    pub girth: Girth,
    pub bipartite: bool,
    pub moore_bound: Option<u64>,
    pub excess: Option<i64>,
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialization cannot fail")
    }
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Certificate", 8)?;
        s.serialize_field("order", &self.order)?;
        s.serialize_field("size", &self.size)?;
        let degrees: BTreeMap<String, usize> =
            self.degrees.iter().map(|(&d, &c)| (d.to_string(), c)).collect();
        s.serialize_field("degrees", &degrees)?;
        match self.girth {
            Girth::Finite(g) => s.serialize_field("girth", &g)?,
            Girth::Acyclic => s.serialize_field("girth", "acyclic")?,
        }
        s.serialize_field("bipartite", &self.bipartite)?;
        s.serialize_field("moore_bound", &self.moore_bound)?;
        s.serialize_field("excess", &self.excess)?;
        s.serialize_field("checks", &self.checks)?;
        s.end()
    }
}

/// Measures the graph and evaluates the claim. Claim mismatches are
/// recorded as failing checks, never raised as errors. The Moore bound
/// appears whenever degree and girth are both claimed and in range; the
/// excess only when the girth claim matches the measured girth (an excess
/// against a wrong girth would compare to the wrong bound).
pub fn certify(graph: &Graph, claim: Option<Claim>) -> Certificate {
    let degrees = graph.degree_profile();
    let girth = graph.girth();
    let mut checks = Vec::new();
    let mut moore = None;
    let mut excess = None;

    if let Some(claim) = claim {
        if let Some(k) = claim.degree {
            let pass = graph.is_regular(k as usize);
            checks.push(Check {
                name: "degree".into(),
                expected: format!("{k}-regular"),
                actual: profile_string(&degrees),
                pass,
            });
        }
        let mut girth_matches = false;
        if let Some(g) = claim.girth {
            girth_matches = girth == Girth::Finite(g);
            checks.push(Check {
                name: "girth".into(),
                expected: g.to_string(),
                actual: girth.to_string(),
                pass: girth_matches,
            });
        }
        if let Some(n) = claim.order {
            checks.push(Check {
                name: "order".into(),
                expected: n.to_string(),
                actual: graph.n().to_string(),
                pass: graph.n() == n,
            });
        }
        if let (Some(k), Some(g)) = (claim.degree, claim.girth) {
            if let Ok(bound) = moore_bound(k, g as u32) {
                moore = Some(bound);
                if girth_matches {
                    excess = Some(graph.n() as i64 - bound as i64);
                }
            }
        }
    }

    Certificate {
        order: graph.n(),
        size: graph.m(),
        degrees,
        girth,
        bipartite: graph.is_bipartite(),
        moore_bound: moore,
        excess,
        checks,
    }
}

fn profile_string(degrees: &BTreeMap<usize, usize>) -> String {
    if degrees.len() == 1 {
        let (&d, _) = degrees.iter().next().unwrap();
        format!("{d}-regular")
    } else {
        let parts: Vec<String> =
            degrees.iter().map(|(d, c)| format!("{c} of degree {d}")).collect();
        parts.join(", ")
    }
}
