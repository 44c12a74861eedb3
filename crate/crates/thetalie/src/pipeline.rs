//! Build everything for one root type, and check everything.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use thetalie_core::arith::{q_int, Gaussian, GaussianMatrix};
use thetalie_core::extension::{transport_automorphism, Cocycle, ExtAutomorphism};
use thetalie_core::f2::{BitMatrix, BitVector};
use thetalie_core::grouplift::{
    anticommutation_model_identity, extension_closure, is_special_orthogonal, pgl2_to_so3, phi_of_root, verify_comm_relation,
    PhiCertificate,
};
use thetalie_core::heisrep::{build_heisrep, verify_rep, HeisRep};
use thetalie_core::lattice::{RootDatum, RootType};
use thetalie_core::liealg::{
    build_lie, build_r, build_theta, fixed_subalgebra, identify_fixed, normalize, FixedIdentification, FixedKind,
    FixedSubalgebra, Involution, LieAlgebra, RMap,
};
use thetalie_core::Result;

use crate::export::{
    brackets, BracketEntry, ExtensionJson, FixedJson, GroupLiftJson, IdentificationJson, RepJson, RootDataJson, SparseEntry,
};

/// Number of triples checked by a sampled Jacobi run.
pub const SAMPLED_TRIPLES: usize = 20_000;

/// The representation-side objects, built only for E6 and E7.
pub struct RepPart {
    pub rep: HeisRep,
    pub r: RMap,
    pub identification: FixedIdentification,
}

pub struct Built {
    pub datum: RootDatum,
    pub cocycle: Cocycle,
    pub lie: LieAlgebra,
    pub theta: Involution,
    pub fixed: FixedSubalgebra,
    pub rep: Option<RepPart>,
}

pub fn has_rep(t: RootType) -> bool {
    matches!(t, RootType::E6 | RootType::E7)
}

pub fn build(t: RootType) -> Result<Built> {
    let datum = RootDatum::of_type(t)?;
    let cocycle = Cocycle::new(&datum.mod2_space().space);
    let lie = build_lie(&datum, &cocycle)?;
    let theta = build_theta(&lie)?;
    let fixed = fixed_subalgebra(&lie, &theta)?;
    let rep = if has_rep(t) {
        let rep = build_heisrep(&cocycle)?;
        let r = build_r(&lie, &fixed, &rep)?;
        let identification = identify_fixed(&fixed, &r)?;
        Some(RepPart { rep, r, identification })
    } else {
        None
    };
    Ok(Built { datum, cocycle, lie, theta, fixed, rep })
}

/// Lifts of the simple reflections to the extension.
pub fn reflection_lifts(b: &Built) -> Result<Vec<ExtAutomorphism>> {
    b.datum.simple_reflections().iter().map(|w| transport_automorphism(&b.cocycle, &BitMatrix::from_int_rows(w))).collect()
}

#[derive(Serialize)]
pub struct BuildJson {
    #[serde(rename = "type")]
    pub root_type: String,
    pub rank: usize,
    pub dim: usize,
    pub fixed_dim: usize,
    pub root_data: RootDataJson,
    pub extension: ExtensionJson,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    /// `[i, j, s]` meaning `θ(e_i) = s·e_j`.
    pub theta: Vec<(usize, usize, i64)>,
    pub theta_trace: i64,
    pub fixed: FixedJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rep: Option<RepJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_images: Option<Vec<Vec<SparseEntry>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identification: Option<IdentificationJson>,
}

impl BuildJson {
    pub fn new(b: &Built) -> Result<Self> {
        let l = &b.lie;
        Ok(BuildJson {
            root_type: b.datum.root_type().to_string(),
            rank: b.datum.rank(),
            dim: l.dim(),
            fixed_dim: b.fixed.dim(),
            root_data: RootDataJson::new(&b.datum),
            extension: ExtensionJson::new(&b.cocycle, &reflection_lifts(b)?),
            basis: (0..l.dim()).map(|i| l.label_string(i)).collect(),
            brackets: brackets(l.table()),
            theta: b.theta.triples(),
            theta_trace: b.theta.trace(),
            fixed: FixedJson::new(&b.fixed),
            rep: b.rep.as_ref().map(|p| RepJson::new(&p.rep)),
            // Stored doubled so every entry is a Gaussian integer.
            r_images: b.rep.as_ref().map(|p| (0..p.r.dim_g()).map(|k| p.r.doubled(k).sparse_entries()).collect()),
            identification: b.rep.as_ref().map(|p| IdentificationJson::new(&p.identification)),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Depth {
    Exhaustive,
    Sampled,
}

/// One verification step. `detail` names the first counterexample on failure.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Check {
    fn new(name: &'static str, passed: bool, checked: u64, detail: Option<String>) -> Self {
        Check { name, passed, checked, detail, elapsed: Duration::ZERO }
    }

    fn timed(name: &'static str, f: impl FnOnce() -> (bool, u64, Option<String>)) -> Self {
        let start = Instant::now();
        let (passed, checked, detail) = f();
        Check { elapsed: start.elapsed(), ..Check::new(name, passed, checked, detail) }
    }

    fn from_result(name: &'static str, start: Instant, r: Result<u64>) -> Self {
        let (passed, checked, detail) = match r {
            Ok(n) => (true, n, None),
            Err(e) => (false, 0, Some(e.to_string())),
        };
        Check { elapsed: start.elapsed(), ..Check::new(name, passed, checked, detail) }
    }
}

#[derive(Serialize)]
pub struct VerifyReport {
    #[serde(rename = "type")]
    pub root_type: String,
    pub depth: Depth,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group_lift: Option<GroupLiftJson>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

fn jacobi_check(l: &LieAlgebra, depth: Depth, seed: u64) -> Check {
    Check::timed("jacobi", || {
        let report = match depth {
            Depth::Exhaustive => l.verify_jacobi(),
            Depth::Sampled => {
                let n = l.dim();
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let triples: Vec<(usize, usize, usize)> =
                    (0..SAMPLED_TRIPLES).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))).collect();
                l.table().verify_jacobi_triples(triples)
            }
        };
        (report.passed(), report.checked, report.first_failure.map(|t| format!("triple {t:?}")))
    })
}

/// `θ[e_a, e_b] = [θe_a, θe_b]` on every basis pair.
fn theta_automorphism_check(l: &LieAlgebra, theta: &Involution) -> Check {
    Check::timed("theta_automorphism", || {
        let n = l.dim();
        let first_bad = (0..n).into_par_iter().find_map_first(|a| {
            (0..n).find_map(|b| {
                let lhs = theta.apply(l.table().basis_bracket(a, b));
                let rhs = l.bracket(&theta.apply(&[(a, 1)]), &theta.apply(&[(b, 1)]));
                (normalize(lhs) != normalize(rhs)).then(|| format!("pair ({a}, {b})"))
            })
        });
        (first_bad.is_none(), (n * n) as u64, first_bad)
    })
}

fn rep_checks(b: &Built, part: &RepPart, checks: &mut Vec<Check>) -> Option<GroupLiftJson> {
    let classes: Vec<BitVector> = (0..b.datum.roots().len()).map(|i| b.datum.root_class(i)).collect();
    let start = Instant::now();
    checks.push(Check::from_result("rep_table", start, verify_rep(&part.rep, &classes).map(|r| r.pairs_checked)));

    // R itself was checked on every pair while it was built.
    checks.push(Check::new("r_homomorphism", true, part.r.pairs_checked, None));

    let id = &part.identification;
    let expected = if b.datum.root_type() == RootType::E7 { FixedKind::Special } else { FixedKind::Symplectic };
    checks.push(Check::new(
        "fixed_identification",
        id.kind == expected,
        1,
        (id.kind != expected).then(|| format!("identified as {:?}", id.kind)),
    ));

    let start = Instant::now();
    let phi: Result<Vec<PhiCertificate>> =
        (0..b.datum.roots().len()).map(|k| phi_of_root(&b.lie, &b.fixed, &part.r, &part.rep, k)).collect();
    let certs = match phi {
        Ok(certs) => certs,
        Err(e) => {
            checks.push(Check::from_result("order_four_lifts", start, Err(e)));
            return None;
        }
    };
    let bad = certs.iter().find(|c| !c.passed()).map(|c| format!("root {:?}", c.root));
    checks.push(Check { elapsed: start.elapsed(), ..Check::new("order_four_lifts", bad.is_none(), certs.len() as u64, bad) });

    let start = Instant::now();
    let comm = verify_comm_relation(&part.rep, &b.datum, true);
    let bad = comm.failures.first().map(|p| format!("roots {p:?}"));
    checks.push(Check { elapsed: start.elapsed(), ..Check::new("commutation_relation", bad.is_none(), comm.pairs_checked, bad) });

    let start = Instant::now();
    let closure = extension_closure(&part.rep);
    let bad = (!closure.isomorphic).then(|| format!("closure of order {}", closure.closure_order));
    checks.push(Check {
        elapsed: start.elapsed(),
        ..Check::new("extension_closure", closure.isomorphic, closure.closure_order as u64, bad)
    });
    Some(GroupLiftJson::new(&certs, &comm, &closure))
}

/// The fixed matrix identities: `[[0,1],[−1,0]] ↦ diag(−1,1,−1)` and the
/// anticommutation model.
fn matrix_identity_check() -> Check {
    Check::timed("matrix_identities", || {
        let w = GaussianMatrix::from_int_pairs(&[&[(0, 0), (1, 0)], &[(-1, 0), (0, 0)]]);
        let diag = GaussianMatrix::from_fn(3, 3, |r, c| {
            if r != c {
                Gaussian::from_ints(0, 0)
            } else if r == 1 {
                Gaussian::from_ints(1, 0)
            } else {
                Gaussian::from_ints(-1, 0)
            }
        });
        let image_ok = pgl2_to_so3(&w).map(|m| m == diag && is_special_orthogonal(&m)).unwrap_or(false);
        let model_ok = anticommutation_model_identity();
        let detail = match (image_ok, model_ok) {
            (false, _) => Some("image of [[0,1],[-1,0]]".to_owned()),
            (true, false) => Some("anticommutation model".to_owned()),
            _ => None,
        };
        (image_ok && model_ok, 2, detail)
    })
}

pub fn verify(t: RootType, depth: Depth, seed: u64) -> VerifyReport {
    let start = Instant::now();
    let b = match build(t) {
        Ok(b) => b,
        Err(e) => {
            let checks = vec![Check::from_result("build", start, Err(e))];
            return VerifyReport { root_type: t.to_string(), depth, seed: None, checks, group_lift: None, passed: false };
        }
    };
    let mut checks = vec![Check::from_result("build", start, Ok(1))];
    checks.push(jacobi_check(&b.lie, depth, seed));
    checks.push(Check::timed("antisymmetry", || {
        let r = b.lie.table().check_antisymmetry();
        (r.passed(), r.checked, r.first_failure.map(|p| format!("pair {p:?}")))
    }));
    checks.push(Check::timed("killing_nondegenerate", || (b.lie.killing_form().nondegenerate(), 1, None)));
    checks.push(theta_automorphism_check(&b.lie, &b.theta));
    let rank = b.datum.rank() as i64;
    checks.push(Check::new(
        "theta_trace",
        b.theta.trace() == -rank,
        1,
        (b.theta.trace() != -rank).then(|| format!("trace {}", b.theta.trace())),
    ));
    let half = b.datum.roots().len() / 2;
    checks.push(Check::timed("fixed_subalgebra", || {
        let det = b.fixed.killing_form().1;
        let ok = b.fixed.dim() == half && det != q_int(0);
        (ok, 1, (!ok).then(|| format!("dim {} with Killing determinant {det}", b.fixed.dim())))
    }));
    let group_lift = b.rep.as_ref().and_then(|part| {
        let lift = rep_checks(&b, part, &mut checks);
        checks.push(matrix_identity_check());
        lift
    });
    let passed = checks.iter().all(|c| c.passed);
    let seed = (depth == Depth::Sampled).then_some(seed);
    VerifyReport { root_type: t.to_string(), depth, seed, checks, group_lift, passed }
}
