//! The acceptance suite: every criterion at its pinned values and time
//! limit, one PASS/FAIL line each.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use thetalie_core::arith::{q_int, Gaussian, GaussianMatrix, Q};
use thetalie_core::extension::Cocycle;
use thetalie_core::f2::{count_refinements_by_arf, BitVector};
use thetalie_core::grouplift::{anticommutation_model_identity, is_special_orthogonal, pgl2_to_so3, phi_of_root};
use thetalie_core::heisrep::{build_heisrep, verify_rep, FormSymmetry, HeisRep};
use thetalie_core::lattice::{weyl_enumerate, DelPezzoPicard, RootDatum, RootType};
use thetalie_core::liealg::{
    build_lie, build_r, build_theta, fixed_subalgebra, identify_fixed, FixedKind, FixedSubalgebra, Involution, LieAlgebra, RMap,
};
use thetalie_core::quartic::{
    e6_family, e7_family, line_at_infinity, marked_point, smoothness_probe, tangent_contact_order, ContactOrder, E6Params,
    E7Params, SmoothnessVerdict,
};
use thetalie_core::realtable::{emit_table, expected_columns};

struct Outcome {
    id: &'static str,
    what: &'static str,
    passed: bool,
    elapsed: Duration,
    limit: Option<Duration>,
    detail: String,
}

impl Outcome {
    fn ok(&self) -> bool {
        self.passed && self.limit.is_none_or(|l| self.elapsed < l)
    }

    fn line(&self) -> String {
        let limit = self.limit.map_or(String::new(), |l| format!(" / limit {l:.0?}"));
        let detail = if self.detail.is_empty() { String::new() } else { format!(" [{}]", self.detail) };
        format!("{} {} {} ({:.2?}{limit}){detail}", if self.ok() { "PASS" } else { "FAIL" }, self.id, self.what, self.elapsed)
    }
}

fn run(id: &'static str, what: &'static str, limit: Option<Duration>, f: impl FnOnce() -> Result<(), String>) -> Outcome {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let (passed, detail) = match result {
        Ok(()) => (true, String::new()),
        Err(e) => (false, e),
    };
    Outcome { id, what, passed, elapsed, limit, detail }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

struct Stage {
    datum: RootDatum,
    cocycle: Cocycle,
    lie: LieAlgebra,
    theta: Option<Involution>,
    fixed: Option<FixedSubalgebra>,
    rep: Option<HeisRep>,
    r: Option<RMap>,
}

fn stage(t: RootType) -> Stage {
    let datum = RootDatum::of_type(t).unwrap();
    let cocycle = Cocycle::new(&datum.mod2_space().space);
    let lie = build_lie(&datum, &cocycle).unwrap();
    Stage { datum, cocycle, lie, theta: None, fixed: None, rep: None, r: None }
}

fn ac1() -> Outcome {
    run("AC1", "refinement counts by Arf invariant, g = 1..3", secs(1), || {
        for g in 1..=3usize {
            let half = 1u64 << (g - 1);
            let expected = (half * ((1 << g) + 1), half * ((1 << g) - 1));
            let got = count_refinements_by_arf(g).map_err(|e| e.to_string())?;
            ensure(got == expected, || format!("g = {g}: {got:?} != {expected:?}"))?;
        }
        Ok(())
    })
}

fn ac2(stages: &[Stage]) -> Outcome {
    let mut e7_time = Duration::ZERO;
    let mut out = run("AC2", "exhaustive Jacobi for A2, A3, D4, E6, E7", None, || {
        for s in stages {
            let start = Instant::now();
            let report = s.lie.verify_jacobi();
            if s.datum.root_type() == RootType::E7 {
                e7_time = start.elapsed();
            }
            let n = s.lie.dim() as u64;
            ensure(report.checked == n * n * n, || format!("{}: {} triples", s.datum.root_type(), report.checked))?;
            ensure(report.passed(), || format!("{}: {:?}", s.datum.root_type(), report.first_failure))?;
        }
        Ok(())
    });
    // The time limit applies to the E7 run.
    out.elapsed = e7_time;
    out.limit = secs(60);
    out.what = "exhaustive Jacobi for A2, A3, D4, E6, E7 (time: E7)";
    out
}

fn ac3(e6: &mut Stage, e7: &mut Stage) -> Outcome {
    run("AC3", "trace of the involution is -6 / -7", None, || {
        for (s, expected) in [(e6, -6), (e7, -7)] {
            let theta = build_theta(&s.lie).map_err(|e| e.to_string())?;
            ensure(theta.trace() == expected, || format!("{}: trace {}", s.datum.root_type(), theta.trace()))?;
            s.theta = Some(theta);
        }
        Ok(())
    })
}

fn ac4(e6: &mut Stage, e7: &mut Stage) -> Outcome {
    run("AC4", "fixed subalgebras of dimension 36 / 63 with nondegenerate Killing form", None, || {
        for (s, expected) in [(e6, 36), (e7, 63)] {
            let theta = s.theta.as_ref().ok_or("involution missing")?;
            let g = fixed_subalgebra(&s.lie, theta).map_err(|e| e.to_string())?;
            ensure(g.dim() == expected, || format!("{}: dim {}", s.datum.root_type(), g.dim()))?;
            let det = g.killing_form().1;
            ensure(det != q_int(0), || format!("{}: Killing determinant 0", s.datum.root_type()))?;
            s.fixed = Some(g);
        }
        Ok(())
    })
}

fn ac5(e6: &mut Stage, e7: &mut Stage) -> Outcome {
    run("AC5", "R is a homomorphism on all basis pairs of E6 and E7", secs(30), || {
        for s in [e6, e7] {
            let rep = build_heisrep(&s.cocycle).map_err(|e| e.to_string())?;
            let g = s.fixed.as_ref().ok_or("fixed subalgebra missing")?;
            let r = build_r(&s.lie, g, &rep).map_err(|e| format!("{}: {e}", s.datum.root_type()))?;
            let n = g.dim() as u64;
            ensure(r.pairs_checked == n * n, || format!("{}: {} pairs", s.datum.root_type(), r.pairs_checked))?;
            s.rep = Some(rep);
            s.r = Some(r);
        }
        Ok(())
    })
}

fn ac6(e6: &Stage, e7: &Stage) -> Outcome {
    run("AC6", "E7 fixed algebra is sl(8), E6 fixed algebra is sp(8)", None, || {
        let id7 = identify_fixed(e7.fixed.as_ref().unwrap(), e7.r.as_ref().unwrap()).map_err(|e| e.to_string())?;
        ensure(id7.kind == FixedKind::Special, || format!("E7 identified as {:?}", id7.kind))?;
        ensure(id7.kernel_dim == 0 && id7.rank_of_r == 63, || format!("E7: rank {} kernel {}", id7.rank_of_r, id7.kernel_dim))?;
        ensure(id7.dim_w == 8 && id7.dim_g == id7.dim_w * id7.dim_w - 1, || format!("E7: dim W = {}", id7.dim_w))?;
        ensure(id7.traceless, || "E7: image not traceless".into())?;
        let id6 = identify_fixed(e6.fixed.as_ref().unwrap(), e6.r.as_ref().unwrap()).map_err(|e| e.to_string())?;
        ensure(id6.kind == FixedKind::Symplectic, || format!("E6 identified as {:?}", id6.kind))?;
        ensure(id6.form_space_dim == 1, || format!("E6: form space of dimension {}", id6.form_space_dim))?;
        ensure(id6.form_symmetry == Some(FormSymmetry::Antisymmetric), || format!("E6: {:?}", id6.form_symmetry))?;
        ensure(id6.form_nondegenerate == Some(true), || "E6: invariant form is degenerate".into())
    })
}

fn ac7(e6: &Stage, e7: &Stage) -> Outcome {
    run("AC7", "Heisenberg representation tables (16384 / 65536 pairs), rho(-1) = -id, commutant 1", secs(10), || {
        for (s, pairs) in [(e6, 16_384u64), (e7, 65_536)] {
            let classes: Vec<BitVector> = (0..s.datum.roots().len()).map(|i| s.datum.root_class(i)).collect();
            let report = verify_rep(s.rep.as_ref().unwrap(), &classes).map_err(|e| e.to_string())?;
            let t = s.datum.root_type();
            ensure(report.pairs_checked == pairs, || format!("{t}: {} pairs", report.pairs_checked))?;
            ensure(report.minus_one_is_minus_id, || format!("{t}: rho(-1) != -id"))?;
            ensure(report.commutant_dim == 1, || format!("{t}: commutant {}", report.commutant_dim))?;
        }
        Ok(())
    })
}

fn ac8() -> Outcome {
    run("AC8", "del Pezzo counts 126 / 72 / 56 / 27", secs(5), || {
        let p = DelPezzoPicard;
        let e = p.exceptional(7);
        let got = (
            p.k_perp().map_err(|e| e.to_string())?.datum.roots().len(),
            p.bitangent_complement(&e).map_err(|e| e.to_string())?.datum.roots().len(),
            p.lines().len(),
            p.lines_meeting(&e).map_err(|e| e.to_string())?.len(),
        );
        ensure(got == (126, 72, 56, 27), || format!("{got:?}"))
    })
}

fn ac9() -> Outcome {
    run("AC9", "real-orbit table over the full W(E6)", secs(60), || {
        let d = RootDatum::of_type(RootType::E6).unwrap();
        let group = weyl_enumerate(&d, 51_840).map_err(|e| e.to_string())?;
        ensure(group.len() == 51_840, || format!("|W(E6)| = {}", group.len()))?;
        let rows = emit_table(&d).map_err(|e| e.to_string())?;
        ensure(rows.len() == 5, || format!("{} rows", rows.len()))?;
        let real: Vec<u64> = rows.iter().map(|r| r.real_bitangents).collect();
        let quotient: Vec<u64> = rows.iter().map(|r| r.j_mod_2j_size).collect();
        let orbits: Vec<u64> = rows.iter().map(|r| r.orbit_count).collect();
        ensure(real == [28, 16, 8, 4, 4], || format!("real bitangents {real:?}"))?;
        ensure(quotient == [8, 4, 2, 1, 2], || format!("#J/2J {quotient:?}"))?;
        ensure(orbits == [36, 10, 3, 1, 3], || format!("orbits {orbits:?}"))?;
        for r in &rows {
            ensure((r.real_bitangents, r.j_mod_2j_size, r.orbit_count) == expected_columns(r.label), || format!("{}", r.label))?;
        }
        Ok(())
    })
}

fn random_invertible(rng: &mut ChaCha8Rng) -> GaussianMatrix {
    let zero = Gaussian::from_ints(0, 0);
    loop {
        let mut e = || (rng.gen_range(-5..=5), rng.gen_range(-5..=5));
        let m = GaussianMatrix::from_int_pairs(&[&[e(), e()], &[e(), e()]]);
        if m.det() != zero {
            return m;
        }
    }
}

fn ac10(e6: &Stage, e7: &Stage) -> Outcome {
    run("AC10", "PGL2 -> SO3 homomorphism, fixed images, order-4 lifts equal 2R", secs(10), || {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for k in 0..100 {
            let (a, b) = (random_invertible(&mut rng), random_invertible(&mut rng));
            let f = |m: &GaussianMatrix| pgl2_to_so3(m).map_err(|e| e.to_string());
            let (fa, fb, fab) = (f(&a)?, f(&b)?, f(&a.mul(&b))?);
            ensure(fab == fa.mul(&fb), || format!("pair {k} not multiplicative"))?;
            ensure(is_special_orthogonal(&fa), || format!("pair {k}: image not in SO3"))?;
        }
        let w = GaussianMatrix::from_int_pairs(&[&[(0, 0), (1, 0)], &[(-1, 0), (0, 0)]]);
        let diag =
            GaussianMatrix::from_int_pairs(&[&[(-1, 0), (0, 0), (0, 0)], &[(0, 0), (1, 0), (0, 0)], &[(0, 0), (0, 0), (-1, 0)]]);
        ensure(pgl2_to_so3(&w).map_err(|e| e.to_string())? == diag, || "image of [[0,1],[-1,0]]".into())?;
        ensure(anticommutation_model_identity(), || "anticommutation identity".into())?;
        for s in [e6, e7] {
            let (g, r, rep) = (s.fixed.as_ref().unwrap(), s.r.as_ref().unwrap(), s.rep.as_ref().unwrap());
            for k in 0..s.datum.roots().len() {
                let cert = phi_of_root(&s.lie, g, r, rep, k).map_err(|e| e.to_string())?;
                ensure(cert.squares_to_minus_id, || {
                    format!("{}: root {:?} lift has order != 4", s.datum.root_type(), cert.root)
                })?;
                ensure(cert.matches_doubled_r, || format!("{}: root {:?} lift != 2R", s.datum.root_type(), cert.root))?;
            }
        }
        Ok(())
    })
}

fn ac11() -> Outcome {
    run("AC11", "quartic contact orders 4 / 3 on 20 smooth draws, cusp witness", secs(10), || {
        const PROBE: [u64; 3] = [5, 7, 11];
        const DRAWS: usize = 20;
        const MAX_ATTEMPTS: usize = 400;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut draw = |n: usize| -> Vec<Q> { (0..n).map(|_| q_int(rng.gen_range(-5..=5))).collect() };
        for (name, n, expected) in [("e6", 6, 4), ("e7", 7, 3)] {
            let mut accepted = 0;
            let mut attempts = 0;
            while accepted < DRAWS {
                attempts += 1;
                ensure(attempts <= MAX_ATTEMPTS, || format!("{name}: only {accepted} smooth draws"))?;
                let params = draw(n);
                let curve = if name == "e6" {
                    e6_family(&E6Params::from_slice(&params).unwrap())
                } else {
                    e7_family(&E7Params::from_slice(&params).unwrap())
                };
                if !smoothness_probe(&curve, &PROBE).map_err(|e| e.to_string())?.verdict.passes() {
                    continue;
                }
                accepted += 1;
                let order = tangent_contact_order(&curve, &marked_point(), &line_at_infinity()).map_err(|e| e.to_string())?;
                ensure(order == ContactOrder::Finite(expected), || format!("{name} {curve}: {order:?}"))?;
            }
        }
        let cusp = e6_family(&E6Params::default());
        let verdict = smoothness_probe(&cusp, &PROBE).map_err(|e| e.to_string())?.verdict;
        let witness = [q_int(0), q_int(0), q_int(1)];
        ensure(verdict == SmoothnessVerdict::Singular { witness }, || format!("all-zero e6: {verdict:?}"))
    })
}

#[test]
fn acceptance() {
    let mut outcomes = vec![ac1()];

    let mut stages: Vec<Stage> =
        [RootType::A(2), RootType::A(3), RootType::D(4), RootType::E6, RootType::E7].into_iter().map(stage).collect();
    outcomes.push(ac2(&stages));
    let mut e7 = stages.pop().unwrap();
    let mut e6 = stages.pop().unwrap();

    outcomes.push(ac3(&mut e6, &mut e7));
    outcomes.push(ac4(&mut e6, &mut e7));
    outcomes.push(ac5(&mut e6, &mut e7));
    let ready = e6.r.is_some() && e7.r.is_some();
    let skipped = |id, what| Outcome {
        id,
        what,
        passed: false,
        elapsed: Duration::ZERO,
        limit: None,
        detail: "prerequisite failed".into(),
    };
    if ready {
        outcomes.push(ac6(&e6, &e7));
        outcomes.push(ac7(&e6, &e7));
    } else {
        outcomes.push(skipped("AC6", "fixed-type identification"));
        outcomes.push(skipped("AC7", "Heisenberg representation tables"));
    }
    outcomes.push(ac8());
    outcomes.push(ac9());
    outcomes.push(if ready { ac10(&e6, &e7) } else { skipped("AC10", "appendix identities") });
    outcomes.push(ac11());

    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.ok()).map(|o| o.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
