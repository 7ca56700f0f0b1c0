//! The self-verification suite behind the `check` command: every identity
//! and inequality that applies to a given mesh, evaluated for a range of
//! smoothness orders.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::analytics::consistency_from_rows;
use crate::complex::{discrepancy, DiscrepancyReport};
use crate::error::AlgebraError;
use crate::local::VertexIdeal;
use crate::mesh::Triangulation;
use crate::poly::{choose2, monomial_count};
use crate::rank::RankEngine;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckClause {
    pub r: usize,
    pub name: String,
    pub statement: String,
    pub passed: bool,
    pub offending_k: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub command: String,
    pub mesh: String,
    pub r_range: [usize; 2],
    pub clauses: Vec<CheckClause>,
    pub passed: bool,
    pub engine_version: String,
}

/// Three interior vertices with three slopes each and two totally interior
/// edges: the shape of the degree-`⌊(9r+2)/4⌋` counterexample.
pub fn has_counterexample_shape(mesh: &Triangulation) -> bool {
    let interior = mesh.interior_vertices();
    interior.len() == 3
        && mesh.totally_interior_edges().len() == 2
        && interior.iter().all(|&v| mesh.slope_count(v) == Ok(3))
}

fn clause(r: usize, name: &str, statement: String, mut failing: impl Iterator<Item = usize>) -> CheckClause {
    let offending_k = failing.next();
    CheckClause { r, name: name.into(), statement, passed: offending_k.is_none(), offending_k }
}

/// Clauses for a single `r`, over degrees `0..=4r+3`.
pub fn check_r(
    mesh: &Triangulation,
    r: usize,
    engine: &RankEngine,
) -> Result<Vec<CheckClause>, AlgebraError> {
    let top = 4 * r + 3;
    let rows: Vec<DiscrepancyReport> =
        (0..=top).map(|k| discrepancy(mesh, r, k, engine)).collect::<Result<_, _>>()?;
    let mut out = Vec::new();

    out.push(clause(
        r,
        "low-degree",
        format!("dim = C(k+2,2) for k <= {r}"),
        (0..=r).filter(|&k| rows[k].dim != monomial_count(k)),
    ));
    out.push(clause(
        r,
        "bound-inequality",
        format!("dim >= P for {r} <= k <= {top}"),
        (r..=top).filter(|&k| rows[k].gap < 0),
    ));
    out.push(clause(
        r,
        "bound-equality",
        format!("dim = P for {} <= k <= {top}", 3 * r + 2),
        (3 * r + 2..=top).filter(|&k| rows[k].gap != 0),
    ));
    out.push(clause(
        r,
        "h1-nonnegative",
        format!("h1 = dim - chi >= 0 for 0 <= k <= {top}"),
        (0..=top).filter(|&k| rows[k].h1 < 0),
    ));
    out.push(clause(
        r,
        "chi-equals-bound",
        format!("chi = P and h1 = 0 for {} <= k <= {top}", 4 * r + 1),
        (4 * r + 1..=top).filter(|&k| rows[k].chi != rows[k].bound || rows[k].h1 != 0),
    ));
    if r == 0 {
        let (v, e, f) =
            (mesh.vertices().len() as i64, mesh.edges().len() as i64, mesh.triangles().len() as i64);
        out.push(clause(
            r,
            "lagrange-count",
            format!("dim C^0_k = V + (k-1)E + C(k-1,2)F for 1 <= k <= {top}"),
            (1..=top).filter(|&k| {
                let k_i = k as i64;
                rows[k].dim as i64 != v + (k_i - 1) * e + choose2(k_i - 1) * f
            }),
        ));
    }
    if mesh.f0() == 0 {
        out.push(clause(
            r,
            "no-interior-vertex",
            format!("h1 = 0 and gap = 0 for 0 <= k <= {top}"),
            (0..=top).filter(|&k| rows[k].h1 != 0 || rows[k].gap != 0),
        ));
    }
    if r >= 1 && has_counterexample_shape(mesh) {
        let report = consistency_from_rows(r, &rows);
        out.extend(report.clauses.into_iter().map(|c| CheckClause {
            r,
            name: c.name,
            statement: c.statement,
            passed: c.passed,
            offending_k: c.offending_k,
        }));
        let want = vec![r.div_ceil(2), (r + 1).div_ceil(2)];
        let mut bad = None;
        for v in mesh.interior_vertices() {
            let profile = VertexIdeal::new(mesh, v, r)?.syzygy_degrees(engine);
            if profile.degrees != want {
                bad = Some(v);
                break;
            }
        }
        out.push(CheckClause {
            r,
            name: "syzygy-degrees".into(),
            statement: format!("each interior vertex has syzygies in coefficient degrees {want:?}"),
            passed: bad.is_none(),
            offending_k: None,
        });
    }
    Ok(out)
}

pub fn run_checks(
    mesh: &Triangulation,
    rs: RangeInclusive<usize>,
    engine: &RankEngine,
) -> Result<Vec<CheckClause>, AlgebraError> {
    let mut out = Vec::new();
    for r in rs {
        out.extend(check_r(mesh, r, engine)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::bundled_mesh;

    #[test]
    fn shape_detection() {
        assert!(has_counterexample_shape(&bundled_mesh("sy_delta").unwrap()));
        assert!(!has_counterexample_shape(&bundled_mesh("morgan_scott").unwrap()));
    }

    #[test]
    fn trivial_meshes_pass() {
        let engine = RankEngine::default();
        for name in ["triangle", "two_triangles"] {
            let clauses = run_checks(&bundled_mesh(name).unwrap(), 0..=2, &engine).unwrap();
            assert!(clauses.iter().all(|c| c.passed), "{name}: {clauses:?}");
        }
    }
}
