//! Local algebra at an interior vertex `v`: the ideal
//! `J(v) = ⟨l^(r+1) : l a line through v spanned by an edge⟩` with its
//! Hilbert function and minimal syzygy degrees. Also Schumaker's per-vertex
//! correction term.
//!
//! All computations use the homogeneous three-variable edge forms. Every
//! generator vanishes at the point `v`, so after a change of coordinates
//! `J(v)` is extended from a two-variable ideal and its syzygy module is
//! free of rank `n(v) − 1`.

use crate::error::AlgebraError;
use crate::graded::{BlockLayout, GradedMatrix};
use crate::mesh::{LinearForm, Rational, Triangulation};
use crate::poly::{choose2, monomial_count, power};
use crate::rank::RankEngine;
use num_traits::One;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexIdeal {
    pub vertex: usize,
    pub r: usize,
    /// One form per distinct slope at the vertex, in canonical order.
    pub generators: Vec<LinearForm>,
}

impl VertexIdeal {
    pub fn new(mesh: &Triangulation, vertex: usize, r: usize) -> Result<Self, AlgebraError> {
        let n = mesh.slope_count(vertex)?;
        if n < 2 {
            return Err(AlgebraError::TooFewSlopes(n));
        }
        Ok(Self { vertex, r, generators: mesh.distinct_edge_forms(vertex) })
    }

    /// Ideal generated by the `(r+1)`-st powers of the given lines. The forms
    /// are deduplicated; at least two distinct lines are required.
    pub fn from_forms(vertex: usize, r: usize, mut forms: Vec<LinearForm>) -> Result<Self, AlgebraError> {
        forms.sort();
        forms.dedup();
        if forms.len() < 2 {
            return Err(AlgebraError::TooFewSlopes(forms.len()));
        }
        Ok(Self { vertex, r, generators: forms })
    }

    /// `n(v)`.
    pub fn slope_count(&self) -> usize {
        self.generators.len()
    }

    pub fn exponent(&self) -> usize {
        self.r + 1
    }

    /// Columns: every degree-`k` multiple of every generator.
    pub fn generator_matrix(&self, k: usize) -> Option<GradedMatrix> {
        let qdeg = k.checked_sub(self.exponent())?;
        let mut rows = BlockLayout::new();
        rows.push("R_k", k);
        let mut cols = BlockLayout::new();
        for g in &self.generators {
            cols.push(format!("({g})^{}", self.exponent()), qdeg);
        }
        let mut m = GradedMatrix::zeros(rows, cols);
        for (col, g) in self.generators.iter().enumerate() {
            m.place_product(0, col, &power(g, self.exponent()), &Rational::one());
        }
        Some(m)
    }

    /// `dim (R/J(v))_k`.
    pub fn local_hilbert(&self, k: usize, engine: &RankEngine) -> usize {
        let total = monomial_count(k);
        match self.generator_matrix(k) {
            None => total,
            Some(m) => total - engine.rank(&m),
        }
    }

    /// `dim Syz_d`: syzygies `(s_1, …, s_n)` with `Σ s_i l_i^(r+1) = 0` of total
    /// degree `d` (coefficient degree `d − r − 1`).
    pub fn syzygy_dimension(&self, d: usize, engine: &RankEngine) -> usize {
        let Some(qdeg) = d.checked_sub(self.exponent()) else {
            return 0;
        };
        let source = self.slope_count() * monomial_count(qdeg);
        let image = monomial_count(d) - self.local_hilbert(d, engine);
        source - image
    }

    /// Coefficient degrees of a minimal generating set of `Syz(v)`.
    ///
    /// The module is free, so generators of coefficient degree `b` span
    /// `C(t − b + 2, 2)` dimensions in coefficient degree `t`. Walking `t`
    /// upwards, whatever the already-found generators do not account for
    /// must be new generators. All generators appear by coefficient degree
    /// `r + 1`, where the Koszul relations live.
    pub fn syzygy_degrees(&self, engine: &RankEngine) -> SyzygyProfile {
        let wanted = self.slope_count() - 1;
        let mut degrees: Vec<usize> = Vec::with_capacity(wanted);
        for t in 0..=self.exponent() {
            if degrees.len() == wanted {
                break;
            }
            let actual = self.syzygy_dimension(t + self.exponent(), engine);
            let generated: usize = degrees.iter().map(|&b| monomial_count(t - b)).sum();
            assert!(actual >= generated, "syzygy module is not free");
            degrees.extend(std::iter::repeat_n(t, actual - generated));
        }
        assert_eq!(degrees.len(), wanted, "syzygy module rank must be n(v) - 1");
        SyzygyProfile { vertex: self.vertex, degrees }
    }
}

/// Coefficient degrees (total degree minus `r + 1`) of the minimal
/// syzygies of `J(v)`, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyProfile {
    pub vertex: usize,
    pub degrees: Vec<usize>,
}

impl SyzygyProfile {
    /// `dim Syz` in total degree `d`, predicted from the generator degrees.
    pub fn predicted_dimension(&self, r: usize, d: usize) -> usize {
        self.degrees.iter().map(|&b| choose2(d as i64 - (r + 1) as i64 - b as i64 + 2) as usize).sum()
    }
}

/// Schumaker's vertex term `Σ_{j≥1} max(r + 1 + j(1 − n), 0)`.
pub fn sigma(n: usize, r: usize) -> Result<usize, AlgebraError> {
    sigma_terms(n, r, usize::MAX)
}

/// The vertex term as it enters the bound in degree `k`: only `j ≤ k − r`
/// contribute. Equal to [`sigma`] once `k − r ≥ (r + 1)/(n − 1)`.
pub fn sigma_in_degree(n: usize, r: usize, k: usize) -> Result<usize, AlgebraError> {
    sigma_terms(n, r, k.saturating_sub(r))
}

fn sigma_terms(n: usize, r: usize, max_j: usize) -> Result<usize, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::TooFewSlopes(n));
    }
    let step = n - 1;
    Ok((1..=max_j).map(|j| (r + 1).saturating_sub(j.saturating_mul(step))).take_while(|&term| term > 0).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::bundled_mesh;

    fn ideal(lines: &[(i64, i64)], r: usize) -> VertexIdeal {
        let forms = lines.iter().map(|&(a, b)| LinearForm::from_ints(a, b, 0).unwrap()).collect();
        VertexIdeal::from_forms(0, r, forms).unwrap()
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(2, 1), Ok(1));
        assert_eq!(sigma(4, 1), Ok(0));
        assert_eq!(sigma(3, 3), Ok(2));
        assert_eq!(sigma(2, 0), Ok(0));
        assert_eq!(sigma(1, 3), Err(AlgebraError::TooFewSlopes(1)));
        for r in 0..20 {
            for n in r + 2..r + 6 {
                assert_eq!(sigma(n, r), Ok(0));
            }
        }
    }

    #[test]
    fn sigma_in_low_degree_is_truncated() {
        // n = 3, r = 6: terms 5, 3, 1.
        assert_eq!(sigma(3, 6), Ok(9));
        assert_eq!(sigma_in_degree(3, 6, 6), Ok(0));
        assert_eq!(sigma_in_degree(3, 6, 7), Ok(5));
        assert_eq!(sigma_in_degree(3, 6, 8), Ok(8));
        assert_eq!(sigma_in_degree(3, 6, 9), Ok(9));
        assert_eq!(sigma_in_degree(3, 6, 40), Ok(9));
        assert_eq!(sigma_in_degree(1, 6, 40), Err(AlgebraError::TooFewSlopes(1)));
    }

    #[test]
    fn hilbert_below_generator_degree_is_full() {
        let engine = RankEngine::default();
        let j = ideal(&[(1, 0), (0, 1), (1, 1)], 3);
        for k in 0..=3 {
            assert_eq!(j.local_hilbert(k, &engine), monomial_count(k));
        }
    }

    #[test]
    fn two_lines_r1() {
        let engine = RankEngine::default();
        let j = ideal(&[(1, 0), (1, -1)], 1);
        assert_eq!(j.local_hilbert(2, &engine), 4);
        assert_eq!(j.syzygy_degrees(&engine).degrees, vec![2]);
    }

    #[test]
    fn three_lines_r3_degree6() {
        let engine = RankEngine::default();
        let j = ideal(&[(1, 0), (0, 1), (1, 1)], 3);
        let resolution = 28 - 3 * 6 + 2;
        assert_eq!(j.local_hilbert(6, &engine), resolution);
    }

    #[test]
    fn complete_intersection_profile() {
        let engine = RankEngine::default();
        for r in 0..6 {
            let j = ideal(&[(2, -1), (1, 3)], r);
            assert_eq!(j.syzygy_degrees(&engine).degrees, vec![r + 1]);
        }
    }

    #[test]
    fn three_lines_split_evenly() {
        let engine = RankEngine::default();
        for r in 0..9 {
            let j = ideal(&[(1, 0), (0, 1), (1, 1)], r);
            let want = vec![r.div_ceil(2), (r + 1).div_ceil(2)];
            assert_eq!(j.syzygy_degrees(&engine).degrees, want, "r={r}");
        }
    }

    #[test]
    fn many_lines_have_constant_syzygies() {
        // Five lines, r = 1: three quadrics already span R_2 locally, so
        // two of the five squares are redundant.
        let engine = RankEngine::default();
        let j = ideal(&[(1, 0), (0, 1), (1, 1), (1, -1), (1, 2)], 1);
        let profile = j.syzygy_degrees(&engine);
        assert_eq!(profile.degrees.len(), 4);
        assert_eq!(&profile.degrees[..2], &[0, 0]);
    }

    #[test]
    fn mesh_vertices() {
        let mesh = bundled_mesh("sy_delta").unwrap();
        for v in mesh.interior_vertices() {
            let j = VertexIdeal::new(&mesh, v, 2).unwrap();
            assert_eq!(j.slope_count(), 3);
        }
        assert!(VertexIdeal::new(&mesh, 3, 2).is_err());
    }
}
