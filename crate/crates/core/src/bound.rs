//! Schumaker's lower bound
//! `P(r,k) = C(k+2,2) + C(k−r+1,2)·f₁ − (C(k+2,2) − C(r+2,2))·f₀ + σ`
//! with `σ = Σ_v Σ_{j=1}^{k−r} max(r + 1 + j(1 − n(v)), 0)`.
//!
//! The range of `j` matters in degrees `r < k < r + (r+1)/(n−1)`: summing
//! over all `j ≥ 1` there overshoots the true dimension (for instance at
//! `(r, k) = (4, 5)` on the bundled `sy_delta` mesh).

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::local::sigma_in_degree;
use crate::mesh::Triangulation;
use crate::poly::choose2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub r: usize,
    pub k: usize,
    pub f0: usize,
    pub f1: usize,
    pub sigma_total: usize,
    pub value: i64,
}

/// `σ` in degree `k`, summed over interior vertices.
pub fn sigma_total(mesh: &Triangulation, r: usize, k: usize) -> Result<usize, AlgebraError> {
    mesh.interior_vertices().into_iter().map(|v| sigma_in_degree(mesh.slope_count(v)?, r, k)).sum()
}

pub fn schumaker_bound(mesh: &Triangulation, r: usize, k: usize) -> Result<BoundReport, AlgebraError> {
    let (f0, f1) = (mesh.f0(), mesh.f1());
    let sigma_total = sigma_total(mesh, r, k)?;
    let (r_i, k_i) = (r as i64, k as i64);
    let polys = choose2(k_i + 2);
    let value = polys + choose2(k_i - r_i + 1) * f1 as i64 - (polys - choose2(r_i + 2)) * f0 as i64
        + sigma_total as i64;
    Ok(BoundReport { r, k, f0, f1, sigma_total, value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::bundled_mesh;

    fn p(name: &str, r: usize, k: usize) -> i64 {
        schumaker_bound(&bundled_mesh(name).unwrap(), r, k).unwrap().value
    }

    #[test]
    fn single_triangle() {
        for r in 0..4 {
            for k in 0..8 {
                assert_eq!(p("triangle", r, k), choose2(k as i64 + 2));
            }
        }
    }

    #[test]
    fn worked_values() {
        assert_eq!(p("morgan_scott", 1, 2), 6 + 9 - 3 * 3);
        assert_eq!(p("two_triangles", 1, 3), 10 + 3);
        let report = schumaker_bound(&bundled_mesh("sy_delta").unwrap(), 3, 7).unwrap();
        assert_eq!((report.f0, report.f1, report.sigma_total), (3, 12, 6));
    }
}
