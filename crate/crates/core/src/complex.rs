//! The three-term complex
//! `⊕_σ R → ⊕_τ R/l_τ^(r+1) → ⊕_v R/J(v)` (interior faces, relative to the
//! boundary): its graded Euler characteristic and the homological
//! discrepancy `h¹(k) = dim C^r_k − χ(k)`, which is the degree-`k` piece of
//! `H₁` because `H₀` vanishes.

use serde::{Deserialize, Serialize};

use crate::bound::schumaker_bound;
use crate::error::AlgebraError;
use crate::local::VertexIdeal;
use crate::mesh::Triangulation;
use crate::poly::choose2;
use crate::rank::RankEngine;
use crate::spline::{spline_dimension, SplineProblem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiReport {
    pub r: usize,
    pub k: usize,
    pub triangles_term: i64,
    pub edges_term: i64,
    pub vertices_term: i64,
    pub chi: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyReport {
    pub r: usize,
    pub k: usize,
    pub dim: usize,
    /// Schumaker's bound.
    pub bound: i64,
    pub chi: i64,
    /// `dim − χ`.
    pub h1: i64,
    /// `dim − bound`.
    pub gap: i64,
    /// Generators of `H₁`: one per totally interior edge.
    pub h1_generators: usize,
}

pub fn euler_characteristic(
    mesh: &Triangulation,
    r: usize,
    k: usize,
    engine: &RankEngine,
) -> Result<ChiReport, AlgebraError> {
    let polys = choose2(k as i64 + 2);
    let triangles_term = mesh.triangles().len() as i64 * polys;
    let edge_quotient = polys - choose2(k as i64 - r as i64 + 1);
    let edges_term = mesh.f1() as i64 * edge_quotient;
    let mut vertices_term = 0i64;
    for v in mesh.interior_vertices() {
        vertices_term += VertexIdeal::new(mesh, v, r)?.local_hilbert(k, engine) as i64;
    }
    Ok(ChiReport {
        r,
        k,
        triangles_term,
        edges_term,
        vertices_term,
        chi: triangles_term - edges_term + vertices_term,
    })
}

pub fn discrepancy(
    mesh: &Triangulation,
    r: usize,
    k: usize,
    engine: &RankEngine,
) -> Result<DiscrepancyReport, AlgebraError> {
    let dim = spline_dimension(&SplineProblem::new(mesh, r, k), engine);
    let bound = schumaker_bound(mesh, r, k)?.value;
    let chi = euler_characteristic(mesh, r, k, engine)?.chi;
    Ok(DiscrepancyReport {
        r,
        k,
        dim,
        bound,
        chi,
        h1: dim as i64 - chi,
        gap: dim as i64 - bound,
        h1_generators: mesh.totally_interior_edges().len(),
    })
}

/// Largest degree searched by [`max_nonzero_h1`]; `h¹` vanishes from `4r+1`
/// on.
pub fn h1_search_limit(r: usize) -> usize {
    4 * r + 1
}

/// Largest `k ∈ [0, 4r+1]` with `h¹(k) ≠ 0`, if any.
pub fn max_nonzero_h1(
    mesh: &Triangulation,
    r: usize,
    engine: &RankEngine,
) -> Result<Option<usize>, AlgebraError> {
    if mesh.f0() == 0 {
        return Ok(None);
    }
    for k in (0..=h1_search_limit(r)).rev() {
        if discrepancy(mesh, r, k, engine)?.h1 != 0 {
            return Ok(Some(k));
        }
    }
    Ok(None)
}
