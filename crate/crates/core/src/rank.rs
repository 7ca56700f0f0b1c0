//! Exact rank over the rationals.
//!
//! Two routes: fraction-free (Bareiss) elimination on the integer matrix
//! obtained by clearing row denominators, and Gaussian elimination modulo
//! word-size primes. For an integer matrix `rank mod p ≤ rank over ℚ`, with
//! equality unless `p` divides every maximal nonzero minor, so the modular
//! route reports the maximum over several independently drawn primes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graded::GradedMatrix;

/// Primes are drawn from `[2^30, 2^31)` so products fit in a `u64`.
const PRIME_LOW: u64 = 1 << 30;
const PRIME_HIGH: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMethod {
    /// Always fraction-free integer elimination.
    Exact,
    /// Always the multi-prime modular route.
    Modular,
    /// Exact for matrices with at most `exact_limit` entries, modular above.
    Auto,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankEngine {
    pub method: RankMethod,
    pub seed: u64,
    pub prime_count: usize,
    pub exact_limit: usize,
    primes: Vec<u64>,
}

impl Default for RankEngine {
    fn default() -> Self {
        Self::new(RankMethod::Auto, 0)
    }
}

impl RankEngine {
    pub fn new(method: RankMethod, seed: u64) -> Self {
        Self::with_primes(method, seed, 2)
    }

    pub fn with_primes(method: RankMethod, seed: u64, prime_count: usize) -> Self {
        assert!(prime_count >= 1);
        Self { method, seed, prime_count, exact_limit: 4096, primes: draw_primes(seed, prime_count) }
    }

    pub fn exact() -> Self {
        Self::new(RankMethod::Exact, 0)
    }

    pub fn modular(seed: u64) -> Self {
        Self::new(RankMethod::Modular, seed)
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn rank(&self, m: &GradedMatrix) -> usize {
        if m.nrows() == 0 || m.ncols() == 0 {
            return 0;
        }
        let exact = match self.method {
            RankMethod::Exact => true,
            RankMethod::Modular => false,
            RankMethod::Auto => m.nrows() * m.ncols() <= self.exact_limit,
        };
        if exact {
            bareiss_rank(integer_rows(m))
        } else {
            let rows = integer_rows(m);
            self.primes.iter().map(|&p| rank_mod_p_int(&rows, p)).max().unwrap_or(0)
        }
    }

    pub fn nullity(&self, m: &GradedMatrix) -> usize {
        m.ncols() - self.rank(m)
    }
}

fn draw_primes(seed: u64, count: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut primes = Vec::with_capacity(count);
    while primes.len() < count {
        let candidate = rng.gen_range(PRIME_LOW..PRIME_HIGH) | 1;
        if is_prime(candidate) && !primes.contains(&candidate) {
            primes.push(candidate);
        }
    }
    primes
}

/// Trial division; only used on 31-bit candidates.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Scales each row by the lcm of its denominators. Row scaling by nonzero
/// integers does not change the rank.
pub fn integer_rows(m: &GradedMatrix) -> Vec<Vec<BigInt>> {
    m.rows()
        .map(|row| {
            let lcm =
                row.iter().fold(
                    BigInt::one(),
                    |acc, q| {
                        if q.denom().is_one() {
                            acc
                        } else {
                            acc.lcm(q.denom())
                        }
                    },
                );
            row.iter()
                .map(|q| if lcm.is_one() { q.numer().clone() } else { q.numer() * (&lcm / q.denom()) })
                .collect()
        })
        .collect()
}

/// Fraction-free echelon elimination. After each pivot step every entry
/// below the pivot rows is a minor of the input, so the division by the
/// previous pivot is exact.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        // Smallest nonzero entry keeps intermediate sizes down.
        let Some(pivot_row) = (rank..nrows).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| m[i][c].abs())
        else {
            continue;
        };
        m.swap(rank, pivot_row);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[c];
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let mut v = pivot * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    v -= &factor * &pivot_row[j];
                }
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = top[rank][c].clone();
        rank += 1;
    }
    rank
}

fn mod_p(v: &BigInt, p: u64) -> u64 {
    match v.to_i64() {
        Some(small) => small.rem_euclid(p as i64) as u64,
        None => {
            let r = v.mod_floor(&BigInt::from(p));
            r.to_u64().expect("residue fits")
        }
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Rank of the integer matrix reduced modulo the prime `p < 2^31`.
pub fn rank_mod_p(m: &GradedMatrix, p: u64) -> usize {
    rank_mod_p_int(&integer_rows(m), p)
}

fn rank_mod_p_int(rows: &[Vec<BigInt>], p: u64) -> usize {
    assert!(p < PRIME_HIGH);
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut a: Vec<u64> = rows.iter().flat_map(|r| r.iter().map(|v| mod_p(v, p))).collect();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&i| a[i * ncols + c] != 0) else {
            continue;
        };
        if pivot_row != rank {
            for j in c..ncols {
                a.swap(rank * ncols + j, pivot_row * ncols + j);
            }
        }
        let inv = inv_mod(a[rank * ncols + c], p);
        for j in c..ncols {
            let idx = rank * ncols + j;
            a[idx] = a[idx] * inv % p;
        }
        let (top, rest) = a.split_at_mut((rank + 1) * ncols);
        let pivot = &top[rank * ncols..];
        for row in rest.chunks_exact_mut(ncols) {
            let factor = row[c];
            if factor == 0 {
                continue;
            }
            let neg = p - factor;
            for j in c..ncols {
                if pivot[j] != 0 {
                    row[j] = (row[j] + neg * pivot[j]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}
