//! Closed-form extremal quantities over 𝒢(n,m): the layer objective f_r and
//! its minimum Δ_r (closed form plus an integer brute-force oracle), the edge
//! caps M(n,r), the bounds b₂ ≥ B(n,m) ≥ b₁, the exact A(n,m) trichotomy, the
//! λ_r estimates, and the gap theorem b₂ − b₁ < √(3n)/4 + 1.

use serde::ser::{Serialize, SerializeStruct, Serializer};
use thiserror::Error;

use crate::length::Quarter;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundsError {
    #[error("out of range: {0}")]
    Range(String),
    #[error("invalid layer profile: {0}")]
    InvalidProfile(String),
    #[error("gap bound violated at n={n}, m={m}: (b2-b1) = {gap_quarters}/4")]
    GapViolation { n: u64, m: u64, gap_quarters: u64 },
}

pub fn binom2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

/// Breadth-first layer cardinalities (k₀=1, k₁, …, k_r) around an endpoint of
/// a diametral pair: k_j ≥ 2 for 1 ≤ j ≤ r−1 and k_r ≥ 1, Σ k_j = n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerProfile {
    k: Vec<u64>,
}

impl LayerProfile {
    pub fn new(k: Vec<u64>) -> Result<LayerProfile, BoundsError> {
        if k.len() < 2 {
            return Err(BoundsError::InvalidProfile("need k_0 and at least k_1".into()));
        }
        if k[0] != 1 {
            return Err(BoundsError::InvalidProfile(format!("k_0 = {} must be 1", k[0])));
        }
        let r = k.len() - 1;
        for (j, &kj) in k.iter().enumerate().skip(1) {
            if j < r && kj < 2 {
                return Err(BoundsError::InvalidProfile(format!("k_{j} = {kj} must be >= 2")));
            }
            if j == r && kj < 1 {
                return Err(BoundsError::InvalidProfile(format!("k_{j} = {kj} must be >= 1")));
            }
        }
        Ok(LayerProfile { k })
    }

    pub fn r(&self) -> u64 {
        (self.k.len() - 1) as u64
    }

    pub fn n(&self) -> u64 {
        self.k.iter().sum()
    }

    pub fn layers(&self) -> &[u64] {
        &self.k
    }
}

/// f_r(k₁,…,k_r) = Σ_{t=2}^{r} k_t · Σ_{s=0}^{t−2} k_s: the number of edges a
/// diameter-r layer profile forces out of the complete graph.
pub fn f_r_eval(profile: &LayerProfile) -> u64 {
    f_r_units(profile.layers())
}

fn f_r_units(k: &[u64]) -> u64 {
    let mut total = 0u64;
    let mut prefix = 0u64; // Σ_{s=0}^{t-2} k_s
    for t in 2..k.len() {
        prefix += k[t - 2];
        total += k[t] * prefix;
    }
    total
}

fn check_r_range(n: u64, r: u64, lo: u64) -> Result<(), BoundsError> {
    if r < lo || 2 * r > n {
        return Err(BoundsError::Range(format!("need {lo} <= r <= n/2, got n={n}, r={r}")));
    }
    Ok(())
}

/// Δ_r = min f_r over feasible profiles: Δ₂ = 1, Δ₃ = n−1, and
/// Δ_r = 2n(r−3) − 2r² + 6r + 5 for r ≥ 4.
pub fn delta_r_closed(n: u64, r: u64) -> Result<u64, BoundsError> {
    check_r_range(n, r, 2)?;
    Ok(match r {
        2 => 1,
        3 => n - 1,
        _ => {
            let (n, r) = (n as i128, r as i128);
            u64::try_from(2 * n * (r - 3) - 2 * r * r + 6 * r + 5).expect("positive for n >= 2r")
        }
    })
}

/// Independent oracle for Δ_r: exhaustive minimization of f_r over all
/// integer layer profiles. Capped at n ≤ 20.
pub fn delta_r_bruteforce(n: u64, r: u64) -> Result<u64, BoundsError> {
    check_r_range(n, r, 2)?;
    if n > 20 {
        return Err(BoundsError::Range(format!("brute force capped at n <= 20, got {n}")));
    }
    let r = r as usize;
    let mut k = vec![0u64; r + 1];
    k[0] = 1;
    let mut best = u64::MAX;
    // Choose k_1..k_{r-1} >= 2 and k_r >= 1 with total n, pruning by the
    // minimum the remaining layers still need.
    fn assign(k: &mut Vec<u64>, j: usize, remaining: u64, r: usize, best: &mut u64) {
        if j == r {
            if remaining >= 1 {
                k[r] = remaining;
                *best = (*best).min(f_r_units(k));
            }
            return;
        }
        let floor_rest = 2 * ((r - 1 - j) as u64) + 1;
        let mut kj = 2;
        while kj + floor_rest <= remaining {
            k[j] = kj;
            assign(k, j + 1, remaining - kj, r, best);
            kj += 1;
        }
    }
    assign(&mut k, 1, n - 1, r, &mut best);
    debug_assert_ne!(best, u64::MAX, "W is nonempty when 2r <= n");
    Ok(best)
}

/// M(n,r) = C(n,2) − Δ_r, the largest edge count compatible with effective
/// vertex diameter r; M(n,1) = C(n,2).
pub fn m_cap(n: u64, r: u64) -> Result<u64, BoundsError> {
    if r == 1 {
        if n < 2 {
            return Err(BoundsError::Range(format!("need 1 <= r <= n/2, got n={n}, r=1")));
        }
        return Ok(n * (n - 1) / 2);
    }
    Ok(binom2(n) - delta_r_closed(n, r)?)
}

fn check_nm(n: u64, m: u64) -> Result<(), BoundsError> {
    if n < 1 || m + 1 < n || m > binom2(n) {
        return Err(BoundsError::Range(format!("need n-1 <= m <= C(n,2), got n={n}, m={m}")));
    }
    Ok(())
}

/// Upper bound b₂(n,m) for B(n,m) with the realizing diameter target r*, when
/// the M(n,r) interval search fires: 0 for trees, the exact n/4 for
/// n ≤ m ≤ n+3, r*/2 when M(n,r*) < m, and the n/4 fact otherwise.
pub fn upper_bound_b_detail(n: u64, m: u64) -> Result<(Quarter, Option<u64>), BoundsError> {
    check_nm(n, m)?;
    if m + 1 == n {
        return Ok((Quarter::ZERO, None));
    }
    if n >= 3 && m <= n + 3 {
        return Ok((Quarter::from_quarters(n), None));
    }
    for r in 2..=n / 2 {
        if m > m_cap(n, r)? {
            return Ok((Quarter::from_quarters(2 * r), Some(r)));
        }
    }
    Ok((Quarter::from_quarters(n), None))
}

pub fn upper_bound_b(n: u64, m: u64) -> Result<Quarter, BoundsError> {
    upper_bound_b_detail(n, m).map(|(q, _)| q)
}

/// Lower bound b₁(n,m) for B(n,m) with the n₀ from the cycle-plus-clique
/// witness: (n − n₀ + 3)/4 where n₀ = min{j ≥ 5 : m ≤ n + C(j−1,2)}.
pub fn lower_bound_b_detail(n: u64, m: u64) -> Result<(Quarter, Option<u64>), BoundsError> {
    check_nm(n, m)?;
    if m + 1 == n {
        return Ok((Quarter::ZERO, None));
    }
    if m <= n + 3 {
        return Ok((Quarter::from_quarters(n), None));
    }
    let n0 = (5..=n)
        .find(|&j| m <= n + binom2(j - 1))
        .expect("j = n always satisfies m <= C(n,2) <= n + C(n-1,2)");
    Ok((Quarter::from_quarters(n - n0 + 3), Some(n0)))
}

pub fn lower_bound_b(n: u64, m: u64) -> Result<Quarter, BoundsError> {
    lower_bound_b_detail(n, m).map(|(q, _)| q)
}

/// The exact minimum A(n,m) of δ over 𝒢(n,m): 0 for trees, 3/4 when
/// 2m ≤ 3n−3, and 1 otherwise.
pub fn a_exact(n: u64, m: u64) -> Result<Quarter, BoundsError> {
    check_nm(n, m)?;
    Ok(if m + 1 == n {
        Quarter::ZERO
    } else if 2 * m <= 3 * n - 3 {
        Quarter::THREE_QUARTERS
    } else {
        Quarter::ONE
    })
}

/// Everything about one (n,m) cell: A, b₁, b₂, the gap bound, and the
/// realizing parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundsReport {
    pub n: u64,
    pub m: u64,
    pub a_exact: Quarter,
    pub b1: Quarter,
    pub b2: Quarter,
    pub gap_bound: f64,
    pub r_star: Option<u64>,
    pub n0: Option<u64>,
}

impl BoundsReport {
    pub fn gap_quarters(&self) -> u64 {
        self.b2.quarters() - self.b1.quarters()
    }
}

impl Serialize for BoundsReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BoundsReport", 11)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("m", &self.m)?;
        s.serialize_field("A", &self.a_exact.to_string())?;
        s.serialize_field("A_quarters", &self.a_exact.quarters())?;
        s.serialize_field("b1", &self.b1.to_string())?;
        s.serialize_field("b1_quarters", &self.b1.quarters())?;
        s.serialize_field("b2", &self.b2.to_string())?;
        s.serialize_field("b2_quarters", &self.b2.quarters())?;
        s.serialize_field("gap_bound", &self.gap_bound)?;
        s.serialize_field("r_star", &self.r_star)?;
        s.serialize_field("n0", &self.n0)?;
        s.end()
    }
}

/// Full report for one (n,m), asserting the gap theorem
/// b₂ − b₁ < √(3n)/4 + 1 with an exact integer comparison:
/// gap/4 < √(3n)/4 + 1 iff gap ≤ 4 or (gap − 4)² < 3n.
pub fn gap_report(n: u64, m: u64) -> Result<BoundsReport, BoundsError> {
    let a = a_exact(n, m)?;
    let (b1, n0) = lower_bound_b_detail(n, m)?;
    let (b2, r_star) = upper_bound_b_detail(n, m)?;
    if b2 < b1 {
        return Err(BoundsError::GapViolation { n, m, gap_quarters: 0 });
    }
    let gap_quarters = b2.quarters() - b1.quarters();
    let strict_ok = gap_quarters <= 4 || (gap_quarters - 4).pow(2) < 3 * n;
    if !strict_ok {
        return Err(BoundsError::GapViolation { n, m, gap_quarters });
    }
    let gap_bound = (3.0 * n as f64).sqrt() / 4.0 + 1.0;
    Ok(BoundsReport { n, m, a_exact: a, b1, b2, gap_bound, r_star, n0 })
}

/// λ_r and the closed-form caps n₀′ ≥ n₀ and n₁′ ≥ n₁ on the witness orders.
#[derive(Clone, Debug, PartialEq)]
pub struct GapEstimate {
    pub lambda_r: u64,
    pub n0_prime: f64,
    pub n1_prime: f64,
}

/// λ₂ = n²−3n−4, λ₃ = n²−5n, λ_r = n²+9n−4nr+4r²−12r−12 for r ≥ 4.
pub fn lambda(n: u64, r: u64) -> Result<u64, BoundsError> {
    check_r_range(n, r, 2)?;
    let (ni, ri) = (n as i128, r as i128);
    let value = match r {
        2 => ni * ni - 3 * ni - 4,
        3 => ni * ni - 5 * ni,
        _ => ni * ni + 9 * ni - 4 * ni * ri + 4 * ri * ri - 12 * ri - 12,
    };
    u64::try_from(value)
        .map_err(|_| BoundsError::Range(format!("lambda negative at n={n}, r={r}")))
}

pub fn gap_estimate(n: u64, r: u64) -> Result<GapEstimate, BoundsError> {
    check_r_range(n, r, 3)?;
    let lambda_r = lambda(n, r)?;
    let lambda_prev = lambda(n, r - 1)?;
    let prime = |l: u64| (5.0 + (9.0 + 4.0 * l as f64).sqrt()) / 2.0;
    Ok(GapEstimate { lambda_r, n0_prime: prime(lambda_r), n1_prime: prime(lambda_prev) })
}

/// Smallest n₀ with 3 ≤ n₀ ≤ n and M(n,r) < n + C(n₀−1,2); always exists
/// since M(n,r) ≤ C(n,2) < n + C(n−1,2).
pub fn exact_n0(n: u64, r: u64) -> Result<u64, BoundsError> {
    check_r_range(n, r, 2)?;
    let cap = m_cap(n, r)?;
    Ok((3..=n)
        .find(|&j| cap < n + binom2(j - 1))
        .expect("j = n always works"))
}
