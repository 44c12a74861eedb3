//! The real-orbit table, the del Pezzo summary and the Arf counts, each
//! checked against its expected values.

use serde::Serialize;

use thetalie_core::f2::count_refinements_by_arf;
use thetalie_core::lattice::{DelPezzoPicard, RootDatum, RootType};
use thetalie_core::realtable::{emit_table, expected_columns, TableRow};
use thetalie_core::Result;

use crate::export::TableRowJson;

#[derive(Serialize)]
pub struct RealOrbitsJson {
    pub rows: Vec<TableRowJson>,
    pub matches_expected: bool,
}

pub fn real_orbits() -> Result<(Vec<TableRow>, RealOrbitsJson)> {
    let datum = RootDatum::of_type(RootType::E6)?;
    let rows = emit_table(&datum)?;
    let matches_expected = rows.iter().all(|r| (r.real_bitangents, r.j_mod_2j_size, r.orbit_count) == expected_columns(r.label));
    let json = RealOrbitsJson { rows: rows.iter().map(TableRowJson::new).collect(), matches_expected };
    Ok((rows, json))
}

pub fn render_table(rows: &[TableRow]) -> String {
    let mut out = format!("{:<8}{:>4}{:>4}{:>8}{:>10}{:>8}{:>4}\n", "class", "n", "a", "real", "#J/2J", "orbits", "g");
    for r in rows {
        out.push_str(&format!(
            "{:<8}{:>4}{:>4}{:>8}{:>10}{:>8}{:>4}\n",
            r.label.name(),
            r.n,
            r.a,
            r.real_bitangents,
            r.j_mod_2j_size,
            r.orbit_count,
            r.g
        ));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DelPezzoJson {
    pub e7_roots: usize,
    pub e6_roots: usize,
    pub lines: usize,
    pub meeting_e: usize,
}

pub const DEL_PEZZO_EXPECTED: DelPezzoJson = DelPezzoJson { e7_roots: 126, e6_roots: 72, lines: 56, meeting_e: 27 };

pub fn del_pezzo() -> Result<DelPezzoJson> {
    let p = DelPezzoPicard;
    let e = p.exceptional(7);
    Ok(DelPezzoJson {
        e7_roots: p.k_perp()?.datum.roots().len(),
        e6_roots: p.bitangent_complement(&e)?.datum.roots().len(),
        lines: p.lines().len(),
        meeting_e: p.lines_meeting(&e)?.len(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountsJson {
    pub g: usize,
    pub even: u64,
    pub odd: u64,
}

pub fn counts(g: usize) -> Result<CountsJson> {
    let (even, odd) = count_refinements_by_arf(g)?;
    Ok(CountsJson { g, even, odd })
}

/// `(2^{g−1}(2^g+1), 2^{g−1}(2^g−1))` for `g ≥ 1`.
pub fn expected_counts(g: usize) -> Option<(u64, u64)> {
    let g = u32::try_from(g).ok().filter(|&g| (1..=31).contains(&g))?;
    let half = 1u64 << (g - 1);
    let full = 1u64 << g;
    Some((half * (full + 1), half * (full - 1)))
}
