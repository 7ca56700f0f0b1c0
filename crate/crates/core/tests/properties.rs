use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use spline_dim::analytics::{
    degree_bound_floor, hf_difference_quadratic, larger_root_bound, max_h1_degree, quadratic_roots,
};
use spline_dim::graded::{multiplication_matrix, GradedMatrix};
use spline_dim::local::VertexIdeal;
use spline_dim::poly::{choose2, monomial_count, power, HomogeneousForm};
use spline_dim::rank::{bareiss_rank, integer_rows, rank_mod_p};
use spline_dim::spline::spline_dimension_stacked;
use spline_dim::{
    parse_mesh, serialize_mesh, spline_dimension, LinearForm, Point2, RankEngine, RankMethod, SplineProblem,
    Triangulation,
};

/// Strictly convex polygon on the parabola `y = x²`, coned from its
/// vertex centroid.
fn star_mesh(ts: &[i64]) -> Triangulation {
    let n = ts.len() as i64;
    let mut vertices: Vec<Point2> = ts.iter().map(|&t| Point2::from_ints(t, t * t)).collect();
    let sx: i64 = ts.iter().sum();
    let sy: i64 = ts.iter().map(|t| t * t).sum();
    vertices.push(Point2::new(BigRational::new(sx.into(), n.into()), BigRational::new(sy.into(), n.into())));
    let c = ts.len();
    let m = ts.len();
    let triangles = (0..m).map(|i| [c, i, (i + 1) % m]).collect();
    Triangulation::new(vertices, triangles).unwrap()
}

fn parabola_params() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::btree_set(-6i64..=6, 3..=6).prop_map(|s| s.into_iter().collect())
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=4, 1usize..=6).prop_flat_map(|(m, t, n)| {
        (
            prop::collection::vec(prop::collection::vec(-2i64..=2, t), m),
            prop::collection::vec(prop::collection::vec(-2i64..=2, n), t),
        )
            .prop_map(move |(a, b)| {
                (0..m).map(|i| (0..n).map(|j| (0..t).map(|l| a[i][l] * b[l][j]).sum()).collect()).collect()
            })
    })
}

fn nonzero_form() -> impl Strategy<Value = LinearForm> {
    (-5i64..=5, -5i64..=5, -5i64..=5).prop_filter_map("zero form", |(a, b, c)| LinearForm::from_ints(a, b, c))
}

fn distinct_slopes() -> impl Strategy<Value = Vec<LinearForm>> {
    prop::collection::btree_set((-4i64..=4, -4i64..=4), 2..=5).prop_filter_map("need two lines", |set| {
        let mut forms: Vec<LinearForm> =
            set.into_iter().filter_map(|(a, b)| LinearForm::from_ints(a, b, 0)).collect();
        forms.sort();
        forms.dedup();
        (forms.len() >= 2).then_some(forms)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_is_transpose_invariant(rows in small_matrix()) {
        let m = GradedMatrix::from_i64_rows(&rows);
        prop_assert_eq!(RankEngine::exact().rank(&m), RankEngine::exact().rank(&m.transpose()));
    }

    // Rank is at most 4 and entries are at most 16 in absolute value, so by
    // Hadamard every relevant nonzero minor is below 2^30 and no prime in
    // [2^30, 2^31) divides one.
    #[test]
    fn bareiss_matches_modular(rows in small_matrix(), seed in any::<u64>()) {
        let m = GradedMatrix::from_i64_rows(&rows);
        let exact = bareiss_rank(integer_rows(&m));
        let engine = RankEngine::modular(seed);
        for &p in engine.primes() {
            prop_assert_eq!(rank_mod_p(&m, p), exact);
        }
        prop_assert_eq!(engine.rank(&m), exact);
    }

    #[test]
    fn multiplication_is_injective(form in nonzero_form(), e in 1usize..=4, k in 0usize..=5) {
        let f = power(&form, e);
        let m = multiplication_matrix(&f, k).unwrap();
        prop_assert_eq!(RankEngine::exact().nullity(&m), 0);
    }

    #[test]
    fn edge_forms_vanish_at_endpoints(ts in parabola_params()) {
        let mesh = star_mesh(&ts);
        for e in mesh.edges() {
            let form = mesh.edge_form(e);
            for &v in &e.vertices {
                prop_assert!(form.eval_point(&mesh.vertices()[v]) == BigRational::from_integer(0.into()));
            }
        }
    }

    #[test]
    fn parse_serialize_round_trip(ts in parabola_params()) {
        let mesh = star_mesh(&ts);
        let text = serialize_mesh(&mesh);
        let back = parse_mesh(&text).unwrap();
        prop_assert_eq!(&back, &mesh);
        prop_assert_eq!(serialize_mesh(&back), text);
    }

    #[test]
    fn slope_count_is_degree_iff_no_collinear_edges(ts in parabola_params()) {
        let mesh = star_mesh(&ts);
        let c = ts.len();
        let verts = mesh.vertices();
        let dirs: Vec<(BigRational, BigRational)> = mesh
            .incident_edges(c)
            .map(|e| {
                let o = &verts[e.other(c).unwrap()];
                (&o.x - &verts[c].x, &o.y - &verts[c].y)
            })
            .collect();
        let collinear = (0..dirs.len()).any(|i| {
            (i + 1..dirs.len()).any(|j| &dirs[i].0 * &dirs[j].1 == &dirs[i].1 * &dirs[j].0)
        });
        let n = mesh.slope_count(c).unwrap();
        prop_assert_eq!(n == mesh.degree(c), !collinear);
        prop_assert!(n >= 2 && n <= mesh.degree(c));
    }

    #[test]
    fn local_hilbert_matches_free_resolution(forms in distinct_slopes(), r in 0usize..=4) {
        let engine = RankEngine::default();
        let ideal = VertexIdeal::from_forms(0, r, forms).unwrap();
        let n = ideal.slope_count() as i64;
        let profile = ideal.syzygy_degrees(&engine);
        prop_assert_eq!(profile.degrees.len() as i64, n - 1);
        for k in 0..=4 * r + 6 {
            let k_i = k as i64;
            let want = choose2(k_i + 2) - n * choose2(k_i - r as i64 + 1)
                + profile.predicted_dimension(r, k) as i64;
            prop_assert_eq!(ideal.local_hilbert(k, &engine) as i64, want, "k={}", k);
        }
    }

    #[test]
    fn local_hilbert_stabilizes(forms in distinct_slopes(), r in 0usize..=4) {
        let engine = RankEngine::default();
        let ideal = VertexIdeal::from_forms(0, r, forms).unwrap();
        let base = ideal.local_hilbert(4 * r + 2, &engine);
        for k in 4 * r + 3..=4 * r + 6 {
            prop_assert_eq!(ideal.local_hilbert(k, &engine), base);
        }
    }

    #[test]
    fn c0_matches_lagrange_count(ts in parabola_params(), k in 1usize..=4) {
        let mesh = star_mesh(&ts);
        let (v, e, f) = (mesh.vertices().len(), mesh.edges().len(), mesh.triangles().len());
        let want = v + (k - 1) * e + choose2(k as i64 - 1) as usize * f;
        let got = spline_dimension(&SplineProblem::new(&mesh, 0, k), &RankEngine::default());
        prop_assert_eq!(got, want);
    }

    #[test]
    fn splines_contain_global_polynomials(ts in parabola_params(), r in 0usize..=2, k in 0usize..=5) {
        let mesh = star_mesh(&ts);
        let p = SplineProblem::new(&mesh, r, k);
        let engine = RankEngine::default();
        let d = spline_dimension(&p, &engine);
        prop_assert!(d >= monomial_count(k));
        prop_assert_eq!(d, spline_dimension_stacked(&p, &engine));
    }

    #[test]
    fn dimension_is_seed_independent(ts in parabola_params(), r in 1usize..=2, k in 2usize..=6, seed in any::<u64>()) {
        let mesh = star_mesh(&ts);
        let p = SplineProblem::new(&mesh, r, k);
        let modular = spline_dimension(&p, &RankEngine::new(RankMethod::Modular, seed));
        prop_assert_eq!(modular, spline_dimension(&p, &RankEngine::exact()));
    }
}

#[test]
fn quadratic_sign_pattern_matches_exact_roots() {
    for j in 1..=5i64 {
        let (small, large) = quadratic_roots(j);
        let positive: Vec<i64> =
            (-10..=80 * j).filter(|&k| hf_difference_quadratic(j, k).unwrap() > 0).collect();
        assert!(!positive.is_empty());
        let (lo, hi) = (positive[0], *positive.last().unwrap());
        assert_eq!(positive, (lo..=hi).collect::<Vec<_>>(), "j={j}: positive set is an interval");
        for k in -10..=80 * j {
            let kq = BigRational::from_integer(BigInt::from(k));
            let inside =
                small.cmp_rational(&kq) == Ordering::Less && large.cmp_rational(&kq) == Ordering::Greater;
            assert_eq!(hf_difference_quadratic(j, k).unwrap() > 0, inside, "j={j} k={k}");
        }
    }
}

#[test]
fn quadratic_is_hilbert_function_difference() {
    // Target minus source of the presentation, with HF(R(-i), k) = C(k-i+2, 2).
    let hf = |i: i64, k: i64| 2 * choose2(k - i + 2);
    for j in 1..=6i64 {
        for k in 8 * j..=8 * j + 40 {
            let target = hf(4 * j, k) - 2 * hf(6 * j, k) + hf(8 * j, k);
            let source = hf(6 * j, k);
            assert_eq!(hf_difference_quadratic(j, k).unwrap(), target - source, "j={j} k={k}");
        }
    }
}

#[test]
fn larger_root_chain_holds() {
    for j in 1..=40 {
        assert!(larger_root_bound(j).unwrap().holds(), "j={j}");
    }
}

#[test]
fn max_degree_formula_dominates_degree_bound() {
    for r in 0..=100 {
        assert!(max_h1_degree(r) >= degree_bound_floor(r), "r={r}");
    }
}

#[test]
fn homogeneous_power_expands_binomially() {
    let f = power(&LinearForm::from_ints(1, 1, 0).unwrap(), 5);
    let want = [1i64, 5, 10, 10, 5, 1];
    let got: Vec<BigRational> = (0..=5).map(|i| f.coeff(5 - i, i).clone()).collect();
    let want: Vec<BigRational> = want.into_iter().map(|v| BigRational::from_integer(v.into())).collect();
    assert_eq!(got, want);
    assert!(HomogeneousForm::zero(3).is_zero());
}
