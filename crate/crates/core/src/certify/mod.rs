//! Certificates for sum-rank code properties.
//!
//! Every reported number carries the method that produced it. Exact values come
//! from enumeration under explicit budgets; when a budget is exceeded the value
//! degrades to an interval and the verdict to inconclusive.

pub mod bounds;
pub mod engine;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construct::{ConstructError, SumRankCode};
use crate::gf::GfError;
use crate::hamming::CodeError;
use crate::spaces::SpaceError;

pub use bounds::{
    block_length_bound, condition_checks, distance_optimality, entropy, hamming_parameters_for, msrd_class, perfection,
    singleton_defect, singleton_like_bound, size_bound_from_hamming, sphere_packing, strong_singleton_bch,
    strong_singleton_blf, Check, ConditionReport, MsrdClass, Perfection, PowerOf,
};
pub use engine::{
    construction_lower_bound, covering_radius_by_sweep, covering_radius_lower_bound, covering_radius_upper_bound,
    sr_covering_radius, sr_min_distance, DistanceSource, SrCovering, SrDistance,
};

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error("{what} needs {needed}, budget is {budget}")]
    Budget { what: &'static str, needed: String, budget: u64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// Enumeration limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    pub codewords: u64,
    pub ambient: u64,
    pub syndromes: u64,
}

impl Default for Budgets {
    fn default() -> Budgets {
        Budgets { codewords: 1 << 22, ambient: 1 << 22, syndromes: 1 << 16 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    MinDistance,
    CoveringRadius,
    Perfect,
    QuasiPerfect,
    DistanceOptimal,
    Msrd,
    AlmostMsrd,
}

impl Property {
    pub const ALL: [Property; 7] = [
        Property::MinDistance,
        Property::CoveringRadius,
        Property::Perfect,
        Property::QuasiPerfect,
        Property::DistanceOptimal,
        Property::Msrd,
        Property::AlmostMsrd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::MinDistance => "min-distance",
            Property::CoveringRadius => "covering-radius",
            Property::Perfect => "perfect",
            Property::QuasiPerfect => "quasi-perfect",
            Property::DistanceOptimal => "distance-optimal",
            Property::Msrd => "msrd",
            Property::AlmostMsrd => "almost-msrd",
        }
    }

    fn needs_distance(self) -> bool {
        self != Property::CoveringRadius
    }

    fn needs_radius(self) -> bool {
        matches!(self, Property::CoveringRadius | Property::Perfect | Property::QuasiPerfect)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = CertifyError;
    fn from_str(s: &str) -> Result<Property, CertifyError> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| CertifyError::Unsupported(format!("unknown property {s}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Certified,
    Refuted,
    Inconclusive,
}

impl Verdict {
    /// Process exit code: 0 certified, 1 refuted, 2 inconclusive (3 is reserved for errors).
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Certified => 0,
            Verdict::Refuted => 1,
            Verdict::Inconclusive => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subject {
    pub label: String,
    pub construction: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recipe: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub params: BTreeMap<String, u64>,
    pub q: u64,
    pub blocks: Vec<[usize; 2]>,
    pub dimension: usize,
}

impl Subject {
    pub fn of(code: &SumRankCode) -> Subject {
        Subject {
            label: code.label().to_string(),
            construction: code.construction().tag().to_string(),
            recipe: code.origin().map(|o| o.recipe.clone()),
            params: code.origin().map(|o| o.params.clone()).unwrap_or_default(),
            q: code.profile().q(),
            blocks: code.profile().blocks().iter().map(|&(n, m)| [n, m]).collect(),
            dimension: code.dim(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quantity {
    pub name: String,
    pub value: String,
    pub method: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub name: String,
    pub value: String,
    pub assumptions: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub subject: Subject,
    pub property: Property,
    pub quantities: Vec<Quantity>,
    pub bounds: Vec<BoundEntry>,
    pub verdict: Verdict,
    #[serde(rename = "toolchain-version")]
    pub toolchain_version: String,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn quantity(&self, name: &str) -> Option<&Quantity> {
        self.quantities.iter().find(|q| q.name == name)
    }
}

fn interval(lo: usize, hi: Option<usize>) -> String {
    match hi {
        Some(h) if h == lo => lo.to_string(),
        Some(h) => format!("[{lo}, {h}]"),
        None => format!("[{lo}, inf]"),
    }
}

fn digits(word: &[u32]) -> String {
    word.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Computes what `property` needs and decides it.
pub fn certify(code: &SumRankCode, property: Property, budgets: &Budgets) -> Result<Certificate, CertifyError> {
    let profile = code.profile();
    let mut quantities = vec![
        Quantity { name: "dimension".into(), value: code.dim().to_string(), method: "rank of generator".into() },
        Quantity { name: "total-rows".into(), value: profile.total_rows().to_string(), method: "profile".into() },
    ];
    let mut bounds = Vec::new();

    let distance = if property.needs_distance() {
        let d = sr_min_distance(code, budgets.codewords)?;
        if d.upper.is_none() {
            return Err(CertifyError::Precondition("the zero code has no minimum distance".into()));
        }
        quantities.push(Quantity {
            name: "min-distance".into(),
            value: interval(d.lower, d.upper),
            method: d.source.name().into(),
        });
        if let Some(w) = &d.witness {
            quantities.push(Quantity { name: "min-weight-codeword".into(), value: digits(&w.flatten()), method: "witness".into() });
        }
        quantities.push(Quantity {
            name: "construction-lower-bound".into(),
            value: d.construction_bound.to_string(),
            method: code.construction().tag().into(),
        });
        let dl = d.lower.min(profile.total_rows());
        let single = singleton_like_bound(profile, dl)?;
        bounds.push(BoundEntry {
            name: "singleton-like".into(),
            value: format!("size <= {single}"),
            assumptions: format!("distance >= {dl}; blocks ordered by nonincreasing column count"),
        });
        let sp = sphere_packing(profile, code.dim(), dl);
        bounds.push(BoundEntry {
            name: "sphere-packing".into(),
            value: format!("{} <= {}: {}", sp.lhs, sp.rhs, sp.holds),
            assumptions: format!("packing radius {}", sp.radius),
        });
        Some(d)
    } else {
        None
    };

    let radius: Option<(usize, usize)> = if property.needs_radius() {
        match sr_covering_radius(code, budgets.syndromes) {
            Ok(cov) => {
                quantities.push(Quantity { name: "covering-radius".into(), value: cov.radius.to_string(), method: "coset-bfs".into() });
                quantities.push(Quantity {
                    name: "coset-weight-distribution".into(),
                    value: cov.table.weight_distribution().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                    method: "coset-bfs".into(),
                });
                quantities.push(Quantity { name: "deep-hole".into(), value: digits(&cov.deep_hole.flatten()), method: "coset-bfs".into() });
                Some((cov.radius, cov.radius))
            }
            Err(CertifyError::Budget { .. }) => {
                let lo = covering_radius_lower_bound(code);
                let hi = covering_radius_upper_bound(code, budgets.syndromes).max(lo);
                quantities.push(Quantity {
                    name: "covering-radius".into(),
                    value: interval(lo, Some(hi)),
                    method: "sphere-covering and construction bounds".into(),
                });
                Some((lo, hi))
            }
            Err(e) => return Err(e),
        }
    } else {
        None
    };

    let dist = distance.as_ref().map(|d| (d.lower, d.upper.expect("nonzero code")));
    let verdict = match property {
        Property::MinDistance => exact_verdict(dist.expect("computed")),
        Property::CoveringRadius => exact_verdict(radius.expect("computed")),
        Property::Perfect => radius_verdict(dist.expect("computed"), radius.expect("computed"), 0),
        Property::QuasiPerfect => radius_verdict(dist.expect("computed"), radius.expect("computed"), 1),
        Property::DistanceOptimal => {
            let (lo, hi) = dist.expect("computed");
            if lo == hi {
                let check = distance_optimality(profile, code.dim(), lo);
                let holds = check.holds;
                bounds.push(BoundEntry {
                    name: "distance-optimality".into(),
                    value: format!("{} > {}: {}", check.lhs, check.rhs, holds),
                    assumptions: "a code of the same size with distance d+1 packs balls of radius floor(d/2)".into(),
                });
                if holds { Verdict::Certified } else { Verdict::Inconclusive }
            } else {
                Verdict::Inconclusive
            }
        }
        Property::Msrd | Property::AlmostMsrd => {
            let (lo, hi) = dist.expect("computed");
            let worst = singleton_defect(profile, code.dim(), lo.min(profile.total_rows()))?;
            let best = singleton_defect(profile, code.dim(), hi.min(profile.total_rows()))?;
            quantities.push(Quantity { name: "singleton-defect".into(), value: interval(best.max(0) as usize, Some(worst.max(0) as usize)), method: "m(N-d+1)-k".into() });
            let limit = if property == Property::Msrd { 0 } else { 2 };
            if worst <= limit {
                Verdict::Certified
            } else if best > limit {
                Verdict::Refuted
            } else {
                Verdict::Inconclusive
            }
        }
    };
    Ok(Certificate {
        subject: Subject::of(code),
        property,
        quantities,
        bounds,
        verdict,
        toolchain_version: crate::TOOLCHAIN_VERSION.to_string(),
    })
}

fn exact_verdict((lo, hi): (usize, usize)) -> Verdict {
    if lo == hi { Verdict::Certified } else { Verdict::Inconclusive }
}

/// Decides `R = ⌊(d-1)/2⌋ + offset` from intervals on `d` and `R`.
fn radius_verdict((dl, dh): (usize, usize), (rl, rh): (usize, usize), offset: usize) -> Verdict {
    let tl = (dl - 1) / 2 + offset;
    let th = (dh - 1) / 2 + offset;
    if rh < tl || rl > th {
        Verdict::Refuted
    } else if dl == dh && rl == rh {
        Verdict::Certified
    } else {
        Verdict::Inconclusive
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn property_names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
            assert_eq!(serde_json::to_string(&p).unwrap(), format!("\"{}\"", p.name()));
        }
    }

    #[test]
    fn radius_verdicts() {
        assert_eq!(radius_verdict((3, 3), (2, 2), 1), Verdict::Certified);
        assert_eq!(radius_verdict((3, 3), (1, 1), 1), Verdict::Refuted);
        assert_eq!(radius_verdict((3, 4), (2, 2), 1), Verdict::Inconclusive);
        assert_eq!(radius_verdict((3, 3), (3, 5), 1), Verdict::Refuted);
    }
}
