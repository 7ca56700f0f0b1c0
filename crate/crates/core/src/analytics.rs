//! Closed-form quantities around the `(22r+7)/10` lower bound on the
//! failure degree: the Hilbert-function quadratic for `r + 1 = 4j`, its
//! larger root, and the empirical maximal-failure formula `⌊(9r+2)/4⌋`.
//!
//! Root comparisons are done exactly on quadratic surds `a + b√c`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::{discrepancy, DiscrepancyReport};
use crate::error::AlgebraError;
use crate::mesh::{format_rational, Rational, Triangulation};
use crate::rank::RankEngine;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `(22r + 7)/10`.
pub fn degree_bound(r: usize) -> Rational {
    q(22 * r as i64 + 7, 10)
}

/// `⌊(22r + 7)/10⌋`.
pub fn degree_bound_floor(r: usize) -> usize {
    (22 * r + 7) / 10
}

/// `⌊(9r + 2)/4⌋`.
pub fn max_h1_degree(r: usize) -> usize {
    (9 * r + 2) / 4
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundAnalytics {
    pub r: usize,
    /// `(r+1)/4` when `4 | r+1`.
    pub j: Option<usize>,
    /// `(22r+7)/10` in canonical rational form.
    pub degree_bound: String,
    pub degree_bound_floor: usize,
    pub max_h1_degree: usize,
}

pub fn bound_analytics(r: usize) -> BoundAnalytics {
    BoundAnalytics {
        r,
        j: (r + 1).is_multiple_of(4).then_some((r + 1) / 4),
        degree_bound: format_rational(&degree_bound(r)),
        degree_bound_floor: degree_bound_floor(r),
        max_h1_degree: max_h1_degree(r),
    }
}

/// `−k² + (12j − 3)k − 28j² + 18j − 2`.
pub fn hf_difference_quadratic(j: i64, k: i64) -> Result<i64, AlgebraError> {
    if j < 1 {
        return Err(AlgebraError::BadJ);
    }
    Ok(-k * k + (12 * j - 3) * k - 28 * j * j + 18 * j - 2)
}

/// Sign of `a + b√c` for `c ≥ 0`.
fn sign_surd(a: &Rational, b: &Rational, c: &BigInt) -> Ordering {
    let zero = Rational::zero();
    if b.is_zero() || c.is_zero() {
        return a.cmp(&zero);
    }
    let sa = a.cmp(&zero);
    let sb = b.cmp(&zero);
    if sa == sb || sa == Ordering::Equal {
        return sb;
    }
    // Opposite signs: compare |a| with |b|√c by squaring.
    let radical_sq = b * b * Rational::from_integer(c.clone());
    let rational_sq = a * a;
    match rational_sq.cmp(&radical_sq) {
        Ordering::Equal => Ordering::Equal,
        Ordering::Greater => sa,
        Ordering::Less => sb,
    }
}

/// Sign of `a + b₁√c₁ + b₂√c₂`.
fn sign_two_surds(a: &Rational, b1: &Rational, c1: &BigInt, b2: &Rational, c2: &BigInt) -> Ordering {
    // x = a + b₁√c₁ against y = −b₂√c₂.
    let sx = sign_surd(a, b1, c1);
    let neg_b2 = -b2;
    let sy = sign_surd(&Rational::zero(), &neg_b2, c2);
    if sx != sy {
        // x − y > 0 iff x > y; distinct signs decide it.
        return sx.cmp(&sy);
    }
    if sx == Ordering::Equal {
        return Ordering::Equal;
    }
    // Same sign: compare x² = a² + b₁²c₁ + 2ab₁√c₁ with y² = b₂²c₂.
    let c1q = Rational::from_integer(c1.clone());
    let c2q = Rational::from_integer(c2.clone());
    let diff = sign_surd(&(a * a + b1 * b1 * &c1q - b2 * b2 * &c2q), &(a * b1 * q(2, 1)), c1);
    if sx == Ordering::Greater {
        diff
    } else {
        diff.reverse()
    }
}

/// `rational + coefficient·√radicand`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticSurd {
    pub rational: Rational,
    pub coefficient: Rational,
    pub radicand: BigInt,
}

impl QuadraticSurd {
    pub fn new(rational: Rational, coefficient: Rational, radicand: BigInt) -> Self {
        assert!(!radicand.is_negative(), "negative radicand");
        Self { rational, coefficient, radicand }
    }

    pub fn cmp_rational(&self, value: &Rational) -> Ordering {
        sign_surd(&(&self.rational - value), &self.coefficient, &self.radicand)
    }

    pub fn cmp_surd(&self, other: &Self) -> Ordering {
        sign_two_surds(
            &(&self.rational - &other.rational),
            &self.coefficient,
            &self.radicand,
            &-&other.coefficient,
            &other.radicand,
        )
    }

    /// Floating-point value, for display only.
    pub fn approx(&self) -> f64 {
        let f = |x: &Rational| x.to_f64().unwrap_or(f64::NAN);
        f(&self.rational) + f(&self.coefficient) * self.radicand.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    /// `Some` when the radicand is a perfect square.
    pub fn as_rational(&self) -> Option<Rational> {
        let root = self.radicand.sqrt();
        (&root * &root == self.radicand)
            .then(|| &self.rational + &self.coefficient * Rational::from_integer(root))
    }
}

/// Roots of `−k² + (12j−3)k − 28j² + 18j − 2`: `6j − 3/2 ∓ √(32j²+1)/2`.
pub fn quadratic_roots(j: i64) -> (QuadraticSurd, QuadraticSurd) {
    let center = q(12 * j - 3, 2);
    let radicand = BigInt::from(32 * j * j + 1);
    (
        QuadraticSurd::new(center.clone(), q(-1, 2), radicand.clone()),
        QuadraticSurd::new(center, q(1, 2), radicand),
    )
}

pub fn larger_root(j: i64) -> QuadraticSurd {
    quadratic_roots(j).1
}

/// The chain `root > (6 + 2√2)j − 3/2 > (22r + 7)/10` with `r = 4j − 1`,
/// each link decided exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBoundRecord {
    pub j: i64,
    pub root: QuadraticSurd,
    pub intermediate: QuadraticSurd,
    pub bound: Rational,
    pub root_exceeds_intermediate: bool,
    pub intermediate_exceeds_bound: bool,
    pub root_exceeds_bound: bool,
}

impl RootBoundRecord {
    pub fn holds(&self) -> bool {
        self.root_exceeds_intermediate && self.intermediate_exceeds_bound && self.root_exceeds_bound
    }
}

pub fn larger_root_bound(j: i64) -> Result<RootBoundRecord, AlgebraError> {
    if j < 1 {
        return Err(AlgebraError::BadJ);
    }
    let root = larger_root(j);
    let intermediate = QuadraticSurd::new(q(12 * j - 3, 2), q(2 * j, 1), BigInt::from(2));
    let bound = degree_bound((4 * j - 1) as usize);
    Ok(RootBoundRecord {
        j,
        root_exceeds_intermediate: root.cmp_surd(&intermediate) == Ordering::Greater,
        intermediate_exceeds_bound: intermediate.cmp_rational(&bound) == Ordering::Greater,
        root_exceeds_bound: root.cmp_rational(&bound) == Ordering::Greater,
        root,
        intermediate,
        bound,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub name: String,
    pub statement: String,
    pub passed: bool,
    pub offending_k: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub r: usize,
    pub max_nonzero_h1: Option<usize>,
    pub expected_max: usize,
    pub clauses: Vec<Clause>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }
}

/// Evaluates the `h¹` support clauses for one `r` over degrees `0..=4r+3`.
/// See [`consistency_from_rows`] for the clause list.
pub fn consistency_check(
    mesh: &Triangulation,
    r: usize,
    engine: &RankEngine,
) -> Result<ConsistencyReport, AlgebraError> {
    let rows: Vec<DiscrepancyReport> =
        (0..=4 * r + 3).map(|k| discrepancy(mesh, r, k, engine)).collect::<Result<_, _>>()?;
    Ok(consistency_from_rows(r, &rows))
}

/// [`consistency_check`] on precomputed reports; `rows[k]` must be degree
/// `k` for every `k ≤ 4r + 3`.
///
/// Clauses: the largest `k` with `h¹(k) ≠ 0` is `⌊(9r+2)/4⌋`; `h¹` is
/// nonzero on `r+1 ≤ k ≤ (22r+7)/10`; `h¹` vanishes on `[4r+1, 4r+3]`.
pub fn consistency_from_rows(r: usize, rows: &[DiscrepancyReport]) -> ConsistencyReport {
    let top = 4 * r + 3;
    assert!(rows.len() > top && rows.iter().enumerate().all(|(k, row)| row.k == k && row.r == r));
    let h1 = |k: usize| rows[k].h1;
    let max_nonzero = (0..=4 * r + 1).rev().find(|&k| h1(k) != 0);
    let expected_max = max_h1_degree(r);

    let mut clauses = Vec::new();
    clauses.push(Clause {
        name: "max-nonzero-h1".into(),
        statement: format!("largest k with h1(k) != 0 is floor((9r+2)/4) = {expected_max}"),
        passed: max_nonzero == Some(expected_max),
        offending_k: if max_nonzero == Some(expected_max) { None } else { max_nonzero },
    });
    let low = r + 1;
    let high = degree_bound_floor(r);
    let miss = (low..=high).find(|&k| h1(k) == 0);
    clauses.push(Clause {
        name: "h1-nonzero-below-bound".into(),
        statement: format!("h1(k) != 0 for {low} <= k <= (22r+7)/10 = {}", format_rational(&degree_bound(r))),
        passed: miss.is_none(),
        offending_k: miss,
    });
    let stray = (4 * r + 1..=top).find(|&k| h1(k) != 0);
    clauses.push(Clause {
        name: "h1-vanishes-high".into(),
        statement: format!("h1(k) = 0 for {} <= k <= {top}", 4 * r + 1),
        passed: stray.is_none(),
        offending_k: stray,
    });
    ConsistencyReport { r, max_nonzero_h1: max_nonzero, expected_max, clauses }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_values() {
        assert_eq!(hf_difference_quadratic(1, 7), Ok(2));
        assert_eq!(hf_difference_quadratic(1, 8), Ok(-4));
        assert_eq!(hf_difference_quadratic(2, 16), Ok(2));
        assert_eq!(hf_difference_quadratic(0, 1), Err(AlgebraError::BadJ));
    }

    #[test]
    fn root_chain() {
        for j in [1, 2, 5] {
            assert!(larger_root_bound(j).unwrap().holds(), "j={j}");
        }
        let r1 = larger_root_bound(1).unwrap();
        assert_eq!(r1.bound, q(73, 10));
        assert!((r1.root.approx() - 7.372).abs() < 1e-3);
    }

    #[test]
    fn surd_signs() {
        let two = BigInt::from(2);
        // 3/2 - √2 > 0, 7/5 - √2 < 0
        assert_eq!(sign_surd(&q(3, 2), &q(-1, 1), &two), Ordering::Greater);
        assert_eq!(sign_surd(&q(7, 5), &q(-1, 1), &two), Ordering::Less);
        assert_eq!(sign_surd(&q(-3, 1), &q(1, 1), &BigInt::from(9)), Ordering::Equal);
        // √3 - √2 - 0.3 > 0 (≈ 0.318), √3 - √2 - 0.32 < 0
        let three = BigInt::from(3);
        assert_eq!(sign_two_surds(&q(-3, 10), &q(1, 1), &three, &q(-1, 1), &two), Ordering::Greater);
        assert_eq!(sign_two_surds(&q(-32, 100), &q(1, 1), &three, &q(-1, 1), &two), Ordering::Less);
    }

    #[test]
    fn pell_radicand_gives_rational_root() {
        // 32·9 + 1 = 17²
        assert_eq!(larger_root(3).as_rational(), Some(q(25, 1)));
        assert_eq!(hf_difference_quadratic(3, 25), Ok(0));
        assert_eq!(larger_root(2).as_rational(), None);
    }

    #[test]
    fn analytics_record() {
        let a = bound_analytics(3);
        assert_eq!(a.j, Some(1));
        assert_eq!(a.degree_bound, "73/10");
        assert_eq!((a.degree_bound_floor, a.max_h1_degree), (7, 7));
        assert_eq!(bound_analytics(4).j, None);
    }
}
