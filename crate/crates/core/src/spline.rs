//! Dimension of the spline space `C^r_k(Δ)`.
//!
//! A spline is one degree-`k` form `p_σ` per triangle such that for every
//! interior edge `τ` with triangles `σ⁺, σ⁻` (ascending triangle index)
//! `p_σ⁺ − p_σ⁻ = l_τ^(r+1) · q_τ` for some `q_τ` of degree `k − r − 1`.
//! Boundary edges impose nothing. Working with homogeneous forms of degree
//! exactly `k` in three variables is the same as working with affine
//! polynomials of degree at most `k`.
//!
//! Two assemblies are provided:
//!
//! * [`stacked_system`]: unknowns `(p, q)`, one row block per interior edge.
//!   Its nullity is the spline dimension because `q` is determined by `p`.
//! * [`vertex_cycle_system`]: unknowns `q` only, one row block per interior
//!   vertex, expressing that the jumps `±q_τ·l_τ^(r+1)` around each interior
//!   vertex sum to zero. On a disk the dual graph's cycles are generated by
//!   the vertex cycles, so every such `q` integrates to a spline that is
//!   unique up to a global polynomial:
//!   `dim = C(k+2, 2) + nullity`.
//!
//! [`spline_dimension`] uses the second, much smaller system.

use std::ops::RangeInclusive;

use num_traits::{One, Signed};

use crate::error::AlgebraError;
use crate::graded::{BlockLayout, GradedMatrix};
use crate::mesh::{orientation, Edge, Rational, Triangulation};
use crate::poly::{monomial_count, power};
use crate::rank::RankEngine;

#[derive(Clone, Copy, Debug)]
pub struct SplineProblem<'a> {
    pub mesh: &'a Triangulation,
    pub r: usize,
    pub k: usize,
}

impl<'a> SplineProblem<'a> {
    pub fn new(mesh: &'a Triangulation, r: usize, k: usize) -> Self {
        Self { mesh, r, k }
    }

    /// Degree of the edge multipliers `q_τ`, if nonnegative.
    fn multiplier_degree(&self) -> Option<usize> {
        self.k.checked_sub(self.r + 1)
    }
}

fn edge_label(e: &Edge) -> String {
    format!("{}-{}", e.vertices[0], e.vertices[1])
}

/// The full smoothness system on unknowns `(p_σ)_σ ⊕ (q_τ)_τ`.
pub fn stacked_system(problem: &SplineProblem<'_>) -> GradedMatrix {
    stacked_system_oriented(problem, |_| false)
}

/// As [`stacked_system`], with `flip(edge index)` swapping `σ⁺` and `σ⁻`.
pub fn stacked_system_oriented(problem: &SplineProblem<'_>, flip: impl Fn(usize) -> bool) -> GradedMatrix {
    let SplineProblem { mesh, r, k } = *problem;
    let qdeg = problem.multiplier_degree();
    let interior: Vec<&Edge> = mesh.interior_edges().collect();

    let mut cols = BlockLayout::new();
    for t in 0..mesh.triangles().len() {
        cols.push(format!("p[{t}]"), k);
    }
    let q_blocks: Vec<Option<usize>> =
        interior.iter().map(|e| qdeg.map(|d| cols.push(format!("q[{}]", edge_label(e)), d))).collect();
    let mut rows = BlockLayout::new();
    for e in &interior {
        rows.push(format!("edge[{}]", edge_label(e)), k);
    }

    let mut m = GradedMatrix::zeros(rows, cols);
    let one = Rational::one();
    let minus_one = -Rational::one();
    for (row, e) in interior.iter().enumerate() {
        let (mut plus, mut minus) = (e.triangles[0], e.triangles[1]);
        if flip(row) {
            std::mem::swap(&mut plus, &mut minus);
        }
        m.place_identity(row, plus, &one);
        m.place_identity(row, minus, &minus_one);
        if let Some(qcol) = q_blocks[row] {
            let f = power(&mesh.edge_form(e), r + 1);
            m.place_product(row, qcol, &f, &minus_one);
        }
    }
    m
}

/// `+1` when crossing `edge` counterclockwise around `v` enters `σ⁺`.
fn crossing_sign(mesh: &Triangulation, v: usize, edge: &Edge) -> Rational {
    let other = edge.other(v).expect("edge is incident to v");
    let plus = edge.triangles[0];
    let third = mesh.opposite_vertex(plus, edge);
    let verts = mesh.vertices();
    let side = orientation(&verts[v], &verts[other], &verts[third]);
    if side.is_positive() {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Cycle conditions on the multipliers: for each interior vertex `v`,
/// `Σ_τ∋v ±q_τ·l_τ^(r+1) = 0` in `R_k`. Returns `None` when `k ≤ r`, where
/// there are no multipliers.
pub fn vertex_cycle_system(problem: &SplineProblem<'_>) -> Option<GradedMatrix> {
    let SplineProblem { mesh, r, k } = *problem;
    let qdeg = problem.multiplier_degree()?;
    let interior: Vec<&Edge> = mesh.interior_edges().collect();
    let vertices = mesh.interior_vertices();

    let mut cols = BlockLayout::new();
    for e in &interior {
        cols.push(format!("q[{}]", edge_label(e)), qdeg);
    }
    let mut rows = BlockLayout::new();
    for v in &vertices {
        rows.push(format!("vertex[{v}]"), k);
    }
    let mut m = GradedMatrix::zeros(rows, cols);
    for (col, e) in interior.iter().enumerate() {
        let f = power(&mesh.edge_form(e), r + 1);
        for (row, &v) in vertices.iter().enumerate() {
            if e.vertices.contains(&v) {
                m.place_product(row, col, &f, &crossing_sign(mesh, v, e));
            }
        }
    }
    Some(m)
}

/// `dim C^r_k(Δ)`.
pub fn spline_dimension(problem: &SplineProblem<'_>, engine: &RankEngine) -> usize {
    let global = monomial_count(problem.k);
    match vertex_cycle_system(problem) {
        None => global,
        Some(m) if m.nrows() == 0 => global + m.ncols(),
        Some(m) => global + engine.nullity(&m),
    }
}

/// `dim C^r_k(Δ)` as the nullity of [`stacked_system`].
pub fn spline_dimension_stacked(problem: &SplineProblem<'_>, engine: &RankEngine) -> usize {
    engine.nullity(&stacked_system(problem))
}

/// `(k, dim C^r_k)` for each `k` in the range.
pub fn dimension_table(
    mesh: &Triangulation,
    r: usize,
    ks: RangeInclusive<usize>,
    engine: &RankEngine,
) -> Result<Vec<(usize, usize)>, AlgebraError> {
    if ks.is_empty() {
        return Err(AlgebraError::EmptyRange);
    }
    Ok(ks.map(|k| (k, spline_dimension(&SplineProblem::new(mesh, r, k), engine))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::bundled_mesh;
    use crate::poly::choose2;

    fn dim(name: &str, r: usize, k: usize) -> usize {
        let mesh = bundled_mesh(name).unwrap();
        spline_dimension(&SplineProblem::new(&mesh, r, k), &RankEngine::default())
    }

    #[test]
    fn single_triangle_has_no_constraints() {
        for r in 0..4 {
            for k in 0..6 {
                assert_eq!(dim("triangle", r, k), monomial_count(k));
            }
        }
    }

    #[test]
    fn one_interior_edge() {
        assert_eq!(dim("two_triangles", 1, 2), 7);
        let mesh = bundled_mesh("two_triangles").unwrap();
        let table = dimension_table(&mesh, 1, 2..=4, &RankEngine::default()).unwrap();
        assert_eq!(table, vec![(2, 7), (3, 13), (4, 21)]);
        for k in 0..8 {
            let closed = monomial_count(k) as i64 + choose2(k as i64);
            assert_eq!(dim("two_triangles", 1, k) as i64, closed);
        }
    }

    #[test]
    fn morgan_scott_c1_quadratics() {
        assert_eq!(dim("morgan_scott", 1, 2), 7);
    }

    #[test]
    fn low_degree_is_global_polynomials() {
        for name in ["morgan_scott", "sy_delta"] {
            for r in 0..4 {
                for k in 0..=r {
                    assert_eq!(dim(name, r, k), monomial_count(k), "{name} r={r} k={k}");
                }
            }
        }
    }

    #[test]
    fn stacked_and_cycle_systems_agree() {
        let engine = RankEngine::default();
        for name in ["two_triangles", "morgan_scott", "sy_delta"] {
            let mesh = bundled_mesh(name).unwrap();
            for r in 0..3 {
                for k in 0..6 {
                    let p = SplineProblem::new(&mesh, r, k);
                    assert_eq!(
                        spline_dimension(&p, &engine),
                        spline_dimension_stacked(&p, &engine),
                        "{name} r={r} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn orientation_does_not_matter() {
        let engine = RankEngine::default();
        let mesh = bundled_mesh("morgan_scott").unwrap();
        let p = SplineProblem::new(&mesh, 1, 3);
        let base = engine.nullity(&stacked_system(&p));
        for pattern in [0b1u32, 0b101, 0b1_1111_1111, 0b0_1001_1001] {
            let m = stacked_system_oriented(&p, |i| pattern >> i & 1 == 1);
            assert_eq!(engine.nullity(&m), base);
        }
    }

    #[test]
    fn empty_range_rejected() {
        let mesh = bundled_mesh("triangle").unwrap();
        #[allow(clippy::reversed_empty_ranges)]
        let range = 3..=2;
        assert_eq!(dimension_table(&mesh, 1, range, &RankEngine::default()), Err(AlgebraError::EmptyRange));
    }
}
