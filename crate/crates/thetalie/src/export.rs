//! JSON shapes for every exported object. Field order is fixed by the
//! struct definitions and all collections are emitted in canonical order,
//! so the same input always serializes to the same bytes.

use serde::Serialize;

use thetalie_core::arith::Q;
use thetalie_core::extension::{Cocycle, ExtAutomorphism};
use thetalie_core::f2::{BitMatrix, BitVector, F2QuadraticSpace};
use thetalie_core::grouplift::{ClosureReport, CommReport, PhiCertificate};
use thetalie_core::heisrep::{FormSymmetry, HeisRep, Monomial};
use thetalie_core::lattice::RootDatum;
use thetalie_core::liealg::{BracketTable, FixedIdentification, FixedKind, FixedSubalgebra, Involution, LieAlgebra};
use thetalie_core::realtable::TableRow;

fn bits(v: BitVector) -> Vec<u8> {
    (0..v.dim()).map(|i| u8::from(v.get(i))).collect()
}

fn bit_rows(m: &BitMatrix) -> Vec<Vec<u8>> {
    (0..m.rows()).map(|r| (0..m.cols()).map(|c| u8::from(m.get(r, c))).collect()).collect()
}

/// Rationals as `"n"` or `"n/d"`.
pub fn rational(q: &Q) -> String {
    q.to_string()
}

#[derive(Serialize)]
pub struct F2Json {
    pub dim: usize,
    pub gram: Vec<Vec<u8>>,
    pub qbasis: Vec<u8>,
    pub radical: Vec<Vec<u8>>,
    pub arf: Option<u8>,
}

impl F2Json {
    pub fn new(space: &F2QuadraticSpace) -> Self {
        F2Json {
            dim: space.dim(),
            gram: bit_rows(space.gram()),
            qbasis: bits(space.qbasis()),
            radical: space.radical().into_iter().map(bits).collect(),
            arf: space.arf().ok().map(u8::from),
        }
    }
}

#[derive(Serialize)]
pub struct RootDataJson {
    #[serde(rename = "type")]
    pub root_type: String,
    pub rank: usize,
    pub gram: Vec<Vec<i64>>,
    /// Simple-root coordinates in canonical (height, lexicographic) order.
    pub roots: Vec<Vec<i64>>,
    /// Indices of the simple roots in `roots`.
    pub simple: Vec<usize>,
}

impl RootDataJson {
    pub fn new(d: &RootDatum) -> Self {
        RootDataJson {
            root_type: d.root_type().to_string(),
            rank: d.rank(),
            gram: d.cartan().clone(),
            roots: d.roots().to_vec(),
            simple: d.simple_indices().to_vec(),
        }
    }
}

#[derive(Serialize)]
pub struct AutomorphismJson {
    pub map: Vec<Vec<u8>>,
    pub twist: Vec<Vec<u8>>,
}

impl AutomorphismJson {
    pub fn new(a: &ExtAutomorphism) -> Self {
        AutomorphismJson { map: bit_rows(&a.map), twist: bit_rows(&a.twist) }
    }
}

#[derive(Serialize)]
pub struct ExtensionJson {
    pub order: u64,
    /// `β` as a 0/1 matrix: `qbasis` on the diagonal, the pairing above it.
    pub beta: Vec<Vec<u8>>,
    pub space: F2Json,
    /// Lifts of the simple reflections.
    pub reflection_lifts: Vec<AutomorphismJson>,
}

impl ExtensionJson {
    pub fn new(c: &Cocycle, reflection_lifts: &[ExtAutomorphism]) -> Self {
        ExtensionJson {
            order: c.order(),
            beta: bit_rows(c.matrix()),
            space: F2Json::new(c.space()),
            reflection_lifts: reflection_lifts.iter().map(AutomorphismJson::new).collect(),
        }
    }
}

/// `[i, j, [[k, c], …]]` for each `i < j` with `[e_i, e_j] ≠ 0`.
pub type BracketEntry = (usize, usize, Vec<(usize, i64)>);

pub fn brackets(table: &BracketTable) -> Vec<BracketEntry> {
    table.nonzero_entries().filter(|(i, j, _)| i < j).map(|(i, j, s)| (i, j, s.clone())).collect()
}

#[derive(Serialize)]
pub struct FixedJson {
    pub dim: usize,
    /// For each `Z_k`, the index of its positive root.
    pub roots: Vec<usize>,
    /// `Z_k` in the basis of `L`.
    pub elements: Vec<Vec<(usize, i64)>>,
    pub brackets: Vec<BracketEntry>,
}

impl FixedJson {
    pub fn new(g: &FixedSubalgebra) -> Self {
        FixedJson {
            dim: g.dim(),
            roots: g.positive_roots().to_vec(),
            elements: (0..g.dim()).map(|k| g.element(k).clone()).collect(),
            brackets: brackets(g.table()),
        }
    }
}

#[derive(Serialize)]
pub struct LieJson {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    /// `[i, j, s]` meaning `θ(e_i) = s·e_j`.
    pub theta: Vec<(usize, usize, i64)>,
    pub theta_trace: i64,
}

impl LieJson {
    pub fn new(l: &LieAlgebra, theta: &Involution) -> Self {
        LieJson {
            dim: l.dim(),
            basis: (0..l.dim()).map(|i| l.label_string(i)).collect(),
            brackets: brackets(l.table()),
            theta: theta.triples(),
            theta_trace: theta.trace(),
        }
    }
}

/// One sparse matrix entry `(row, col, re, im)`.
pub type SparseEntry = (usize, usize, i64, i64);

fn sparse(m: &Monomial) -> Vec<SparseEntry> {
    m.sparse_entries()
}

#[derive(Serialize)]
pub struct RepJson {
    pub dim: usize,
    pub genus: usize,
    pub radical_phases: Vec<u8>,
    /// `M_v = ρ(+1, v)` for `v` in increasing bit order.
    pub matrices: Vec<Vec<SparseEntry>>,
}

impl RepJson {
    pub fn new(rep: &HeisRep) -> Self {
        let n = rep.cocycle().dim();
        RepJson {
            dim: rep.dim(),
            genus: rep.genus(),
            radical_phases: rep.radical_phases().to_vec(),
            matrices: BitVector::all(n).map(|v| sparse(rep.matrix(v))).collect(),
        }
    }
}

fn kind_name(kind: FixedKind) -> &'static str {
    match kind {
        FixedKind::Special => "special",
        FixedKind::Symplectic => "symplectic",
    }
}

fn symmetry_name(s: FormSymmetry) -> &'static str {
    match s {
        FormSymmetry::Symmetric => "symmetric",
        FormSymmetry::Antisymmetric => "antisymmetric",
        FormSymmetry::Neither => "neither",
    }
}

#[derive(Serialize)]
pub struct IdentificationJson {
    pub kind: &'static str,
    pub dim_g: usize,
    pub dim_w: usize,
    pub rank_of_r: usize,
    pub kernel_dim: usize,
    pub traceless: bool,
    pub form_space_dim: usize,
    pub form_symmetry: Option<&'static str>,
    pub form_nondegenerate: Option<bool>,
    pub symmetric_form_space_dim: usize,
}

impl IdentificationJson {
    pub fn new(id: &FixedIdentification) -> Self {
        IdentificationJson {
            kind: kind_name(id.kind),
            dim_g: id.dim_g,
            dim_w: id.dim_w,
            rank_of_r: id.rank_of_r,
            kernel_dim: id.kernel_dim,
            traceless: id.traceless,
            form_space_dim: id.form_space_dim,
            form_symmetry: id.form_symmetry.map(symmetry_name),
            form_nondegenerate: id.form_nondegenerate,
            symmetric_form_space_dim: id.symmetric_form_space_dim,
        }
    }
}

#[derive(Serialize)]
pub struct PhiJson {
    pub root: Vec<i64>,
    pub matrix: Vec<SparseEntry>,
    pub squares_to_minus_id: bool,
    pub matches_doubled_r: bool,
}

impl PhiJson {
    pub fn new(c: &PhiCertificate) -> Self {
        PhiJson {
            root: c.root.clone(),
            matrix: sparse(&c.matrix),
            squares_to_minus_id: c.squares_to_minus_id,
            matches_doubled_r: c.matches_doubled_r,
        }
    }
}

#[derive(Serialize)]
pub struct GroupLiftJson {
    pub phi: Vec<PhiJson>,
    pub comm_pairs_checked: u64,
    pub comm_failures: Vec<(usize, usize)>,
    pub closure_order: usize,
    pub extension_order: u64,
    pub closure_isomorphic: bool,
}

impl GroupLiftJson {
    pub fn new(phi: &[PhiCertificate], comm: &CommReport, closure: &ClosureReport) -> Self {
        GroupLiftJson {
            phi: phi.iter().map(PhiJson::new).collect(),
            comm_pairs_checked: comm.pairs_checked,
            comm_failures: comm.failures.clone(),
            closure_order: closure.closure_order,
            extension_order: closure.extension_order,
            closure_isomorphic: closure.isomorphic,
        }
    }
}

#[derive(Serialize)]
pub struct TableRowJson {
    pub class: &'static str,
    pub n: u32,
    pub a: u32,
    pub real_bitangents: u64,
    pub j_mod_2j: u64,
    pub orbits: u64,
    pub g: u32,
    pub invariant_refinements: u64,
}

impl TableRowJson {
    pub fn new(r: &TableRow) -> Self {
        TableRowJson {
            class: r.label.name(),
            n: r.n,
            a: r.a,
            real_bitangents: r.real_bitangents,
            j_mod_2j: r.j_mod_2j_size,
            orbits: r.orbit_count,
            g: r.g,
            invariant_refinements: r.invariant_refinements,
        }
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}
