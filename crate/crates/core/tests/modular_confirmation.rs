//! The modular route against fraction-free elimination on every matrix
//! of a full discrepancy sweep, including those above the exact cutoff.

use spline_dim::complex::discrepancy;
use spline_dim::{bundled_mesh, RankEngine};

#[test]
fn sy_delta_sweeps_agree_with_exact_elimination() {
    let mesh = bundled_mesh("sy_delta").unwrap();
    let exact = RankEngine::exact();
    for seed in [0u64, 17] {
        let modular = RankEngine::modular(seed);
        for (r, top) in [(2usize, 11usize), (3, 15)] {
            for k in 0..=top {
                let a = discrepancy(&mesh, r, k, &modular).unwrap();
                let b = discrepancy(&mesh, r, k, &exact).unwrap();
                assert_eq!(a, b, "seed={seed} r={r} k={k}");
            }
        }
    }
}

#[test]
fn morgan_scott_sweep_agrees_with_exact_elimination() {
    let mesh = bundled_mesh("morgan_scott").unwrap();
    let (modular, exact) = (RankEngine::modular(5), RankEngine::exact());
    for r in 0..=3 {
        for k in 0..=4 * r + 3 {
            assert_eq!(
                discrepancy(&mesh, r, k, &modular).unwrap(),
                discrepancy(&mesh, r, k, &exact).unwrap(),
                "r={r} k={k}"
            );
        }
    }
}
