//! Quartic family members: parsing parameters and the verdict JSON.

use anyhow::{anyhow, bail, Context};
use serde::Serialize;

use thetalie_core::arith::Q;
use thetalie_core::quartic::{
    e6_family, e7_family, line_at_infinity, marked_point, smoothness_probe, tangent_contact_order, ContactOrder, E6Params,
    E7Params, QuarticCurve, SmoothnessVerdict,
};

use crate::export::rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    E6,
    E7,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::E6 => "e6",
            Family::E7 => "e7",
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::E6 => &["p2", "p5", "p8", "p6", "p9", "p12"],
            Family::E7 => &["p2", "p10", "p8", "p14", "p6", "p12", "p18"],
        }
    }

    pub fn curve(self, params: &[Q]) -> anyhow::Result<QuarticCurve> {
        Ok(match self {
            Family::E6 => e6_family(&E6Params::from_slice(params)?),
            Family::E7 => e7_family(&E7Params::from_slice(params)?),
        })
    }
}

/// Parses a comma-separated list of integers or fractions `n/d`.
pub fn parse_params(s: &str) -> anyhow::Result<Vec<Q>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let q: Q = t.parse().map_err(|e| anyhow!("{e}")).with_context(|| format!("bad rational {t:?}"))?;
            Ok(q)
        })
        .collect()
}

#[derive(Serialize)]
pub struct VerdictJson {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub primes: Option<Vec<u64>>,
}

impl VerdictJson {
    fn new(v: &SmoothnessVerdict) -> Self {
        let empty = VerdictJson { kind: "", witness: None, prime: None, primes: None };
        match v {
            SmoothnessVerdict::Singular { witness } => {
                VerdictJson { kind: "singular", witness: Some(witness.iter().map(rational).collect()), ..empty }
            }
            SmoothnessVerdict::Smooth { prime } => VerdictJson { kind: "smooth", prime: Some(*prime), ..empty },
            SmoothnessVerdict::ProbablySmooth { primes } => {
                VerdictJson { kind: "probably_smooth", primes: Some(primes.clone()), ..empty }
            }
            SmoothnessVerdict::Inconclusive => VerdictJson { kind: "inconclusive", ..empty },
        }
    }
}

#[derive(Serialize)]
pub struct ProbeJson {
    pub prime: u64,
    pub singular_count: u64,
    pub singular_points: Vec<[u64; 3]>,
}

#[derive(Serialize)]
pub struct QuarticJson {
    pub family: &'static str,
    pub param_names: &'static [&'static str],
    pub params: Vec<String>,
    pub curve: String,
    /// `null` when the tangent line is a component.
    pub contact_order: Option<u32>,
    pub verdict: VerdictJson,
    pub probes: Vec<ProbeJson>,
    pub certificates: Vec<(u64, bool)>,
}

pub fn analyze(family: Family, params: &[Q], primes: &[u64]) -> anyhow::Result<QuarticJson> {
    let names = family.param_names();
    if params.len() != names.len() {
        bail!("{} takes {} parameters ({}), got {}", family.name(), names.len(), names.join(","), params.len());
    }
    let curve = family.curve(params)?;
    let contact = match tangent_contact_order(&curve, &marked_point(), &line_at_infinity())? {
        ContactOrder::Finite(k) => Some(k),
        ContactOrder::Infinite => None,
    };
    let report = smoothness_probe(&curve, primes)?;
    Ok(QuarticJson {
        family: family.name(),
        param_names: names,
        params: params.iter().map(rational).collect(),
        curve: curve.to_string(),
        contact_order: contact,
        verdict: VerdictJson::new(&report.verdict),
        probes: report
            .probes
            .iter()
            .map(|p| ProbeJson { prime: p.prime, singular_count: p.singular_count, singular_points: p.singular_points.clone() })
            .collect(),
        certificates: report.certificates,
    })
}
