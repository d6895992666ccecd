//! Upper and lower bounds on `A_α(K_n)`.
//!
//! The upper bound comes from counting around a smallest color class of
//! size `x`: there are at most `f_n(x) = n(n-1)/(2x)` classes, and at most
//! `g_n(x) = x(n-x-1) + 1` classes can meet that smallest class, so
//! `A_α(K_n) <= max_x min(⌊f_n(x)⌋, g_n(x))` for `n >= 5`.
//!
//! Lower bounds are constructive: the projective-plane coloring for odd
//! primes `q`, monotonicity under taking subgraphs, the arboricity
//! `⌈n/2⌉`, and the exact values for `n <= 7`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::arith::is_prime;
use crate::graphcore::EdgeColoring;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("the counting bound needs n >= 5, got {0}")]
    BelowHypothesis(usize),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("n must be at least 2, got {0}")]
    TooSmall(usize),
}

/// `f_n(x) = n(n-1) / (2x)`.
pub fn f_n(n: usize, x: f64) -> f64 {
    (n * (n - 1)) as f64 / (2.0 * x)
}

/// `g_n(x) = x(n - x - 1) + 1`.
pub fn g_n(n: usize, x: f64) -> f64 {
    x * (n as f64 - x - 1.0) + 1.0
}

/// `max_x min(⌊n(n-1)/(2x)⌋, x(n-x-1)+1)` over `x = 1..=n-2`, in exact
/// integer arithmetic.
///
/// `g_n` is integral, so flooring the minimum is the same as flooring `f_n`
/// alone. For `x >= n-1` we have `g_n(x) <= 1`, so the scan can stop at
/// `n-2`.
pub fn upper_bound_lemma1(n: usize) -> Result<u64, BoundsError> {
    if n < 5 {
        return Err(BoundsError::BelowHypothesis(n));
    }
    let n = n as u64;
    let edges = n * (n - 1) / 2;
    let best = (1..=n - 2)
        .map(|x| {
            let f = edges / x;
            let g = x * (n - x - 1) + 1;
            f.min(g)
        })
        .max()
        .expect("n >= 5 gives a nonempty scan");
    Ok(best)
}

/// The smaller crossing point of `f_n` and `g_n`, located by bisection on
/// `(0, n/2]`. Diagnostic only; no integer bound depends on it.
pub fn x0_diagnostic(n: usize) -> Result<f64, BoundsError> {
    if n < 5 {
        return Err(BoundsError::BelowHypothesis(n));
    }
    let h = |x: f64| f_n(n, x) - g_n(n, x);
    // h > 0 near 0; h(n/2) < 0 because (n-2)(n-4) > 0.
    let (mut lo, mut hi) = (1e-9, n as f64 / 2.0);
    debug_assert!(h(lo) > 0.0 && h(hi) < 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if h(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Leading term `n^{3/2} / √2` of the asymptotic upper bound.
pub fn asymptotic_upper(n: usize) -> f64 {
    (n as f64).powf(1.5) / std::f64::consts::SQRT_2
}

/// `(q+1)(q^2+q+2)/4`, the class count of the plane coloring of order `q`.
pub fn lower_bound_prime(q: u64) -> Result<u64, BoundsError> {
    if q.is_multiple_of(2) || !is_prime(q) {
        return Err(BoundsError::NotOddPrime(q));
    }
    Ok((q + 1) * (q * q + q + 2) / 4)
}

/// Largest odd prime `q` with `q^2 + q + 1 <= n`.
pub fn largest_plane_order(n: usize) -> Option<u64> {
    let n = n as u64;
    let mut q = 3;
    let mut best = None;
    while q * q + q < n {
        if is_prime(q) {
            best = Some(q);
        }
        q += 2;
    }
    best
}

/// Where a lower bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "param", rename_all = "snake_case")]
pub enum LowerSource {
    /// Plane coloring of order `q` on `K_{q²+q+1}`, extended to `K_n`.
    PrimeConstruction(u64),
    /// Arboricity `⌈n/2⌉`.
    Arboricity,
    /// Exact value for `n <= 7`.
    KnownExact,
    /// Vertex-by-vertex extension of a coloring of `K_m`.
    Extension(usize),
}

impl fmt::Display for LowerSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LowerSource::PrimeConstruction(q) => write!(f, "projective plane of order {q}"),
            LowerSource::Arboricity => write!(f, "arboricity"),
            LowerSource::KnownExact => write!(f, "exact value"),
            LowerSource::Extension(m) => write!(f, "vertex extension of a K_{m} coloring"),
        }
    }
}

/// `A_α(K_n)` for `2 <= n <= 7`.
pub fn known_exact(n: usize) -> Option<u64> {
    match n {
        2 => Some(1),
        3 => Some(2),
        4 => Some(3),
        5 => Some(4),
        6 => Some(6),
        7 => Some(7),
        _ => None,
    }
}

// Colors of the edges of K_n in lexicographic order, found by the exact solver.
const WITNESSES: [&[usize]; 6] = [
    &[0],
    &[0, 0, 1],
    &[0, 1, 2, 2, 1, 0],
    &[0, 1, 2, 3, 3, 1, 2, 1, 3, 2],
    &[0, 1, 2, 3, 4, 5, 5, 5, 0, 3, 1, 4, 2, 4, 0],
    &[
        0, 0, 0, 1, 2, 3, 4, 5, 1, 1, 4, 6, 3, 4, 3, 5, 6, 2, 6, 5, 2,
    ],
];

/// A coloring of `K_n` with `known_exact(n)` classes, for `2 <= n <= 7`.
pub fn known_witness(n: usize) -> Option<EdgeColoring> {
    (2..=7)
        .contains(&n)
        .then(|| EdgeColoring::from_assignment(n, WITNESSES[n - 2]))
}

/// Best of the arboricity, the exact small values and the largest plane
/// coloring that fits inside `K_n`.
pub fn best_lower_bound(n: usize) -> Result<(u64, LowerSource), BoundsError> {
    if n < 2 {
        return Err(BoundsError::TooSmall(n));
    }
    let mut best = ((n as u64).div_ceil(2), LowerSource::Arboricity);
    let mut consider = |value: u64, source: LowerSource| {
        if value > best.0 {
            best = (value, source);
        }
    };
    if let Some(v) = known_exact(n) {
        consider(v, LowerSource::KnownExact);
    }
    if let Some(q) = largest_plane_order(n) {
        consider(
            lower_bound_prime(q).expect("odd prime"),
            LowerSource::PrimeConstruction(q),
        );
    }
    Ok(best)
}

/// Best class count reachable by `star_extend`, which adds one class per
/// added vertex, from the `K_7` witness or the largest plane coloring that
/// fits. Returns the count and the order of the base complete graph.
pub fn extension_lower_bound(n: usize) -> Option<(u64, usize)> {
    let mut best = None;
    let mut consider = |base_k: u64, base_n: usize| {
        if base_n <= n {
            let value = base_k + (n - base_n) as u64;
            if best.is_none_or(|(b, _)| value > b) {
                best = Some((value, base_n));
            }
        }
    };
    consider(7, 7);
    if let Some(q) = largest_plane_order(n) {
        let base_n = (q * q + q + 1) as usize;
        consider(lower_bound_prime(q).expect("odd prime"), base_n);
    }
    best
}

/// Everything known about `A_α(K_n)` from bounds alone.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsSummary {
    pub n: usize,
    /// Counting upper bound (`n >= 5`), or the exact value below that.
    pub upper: u64,
    pub lower: u64,
    pub lower_source: LowerSource,
    /// Set when `lower == upper` is known to be the true value.
    pub exact: Option<u64>,
    /// `n^{3/2}/√2`, for reference.
    pub asymptotic_upper: f64,
    /// Crossing point of `f_n` and `g_n` (`n >= 5`).
    pub x0: Option<f64>,
}

/// Summary used by the reporting commands. For `n >= 8` the vertex-by-vertex
/// extension of a smaller coloring is also considered.
pub fn summarize(n: usize) -> Result<BoundsSummary, BoundsError> {
    let (mut lower, mut lower_source) = best_lower_bound(n)?;
    if n >= 8 {
        if let Some((value, base)) = extension_lower_bound(n) {
            if value > lower {
                lower = value;
                lower_source = LowerSource::Extension(base);
            }
        }
    }
    let exact = known_exact(n);
    let upper = match exact {
        Some(v) if n < 5 => v,
        _ => upper_bound_lemma1(n)?,
    };
    Ok(BoundsSummary {
        n,
        upper,
        lower,
        lower_source,
        exact,
        asymptotic_upper: asymptotic_upper(n),
        x0: x0_diagnostic(n).ok(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::verify_coloring;

    /// `⌊max_x min(f, g)⌋` with `f` kept as the exact rational
    /// `n(n-1) / 2x`, compared by cross-multiplication, over `x = 1..=n`.
    fn rational_oracle(n: u64) -> u64 {
        // Represent each candidate min(f, g) as a fraction num/den.
        let mut best: (u64, u64) = (0, 1);
        for x in 1..=n {
            let g = x as i64 * (n as i64 - x as i64 - 1) + 1;
            let (f_num, f_den) = (n * (n - 1), 2 * x);
            let (num, den) = if g < 0 {
                continue;
            } else if (g as u64) * f_den <= f_num {
                (g as u64, 1)
            } else {
                (f_num, f_den)
            };
            if num * best.1 > best.0 * den {
                best = (num, den);
            }
        }
        best.0 / best.1
    }

    #[test]
    fn counting_bound_table_values() {
        let expected = [
            (5, 5),
            (6, 7),
            (7, 9),
            (8, 11),
            (9, 13),
            (10, 15),
            (11, 18),
            (12, 22),
        ];
        for (n, v) in expected {
            assert_eq!(upper_bound_lemma1(n).unwrap(), v, "n={n}");
        }
        assert_eq!(upper_bound_lemma1(13).unwrap(), 26);
        assert_eq!(upper_bound_lemma1(4), Err(BoundsError::BelowHypothesis(4)));
    }

    #[test]
    fn counting_bound_matches_rational_oracle() {
        for n in 5..=400 {
            assert_eq!(
                upper_bound_lemma1(n).unwrap(),
                rational_oracle(n as u64),
                "n={n}"
            );
        }
    }

    #[test]
    fn crossing_point() {
        let x = x0_diagnostic(100).unwrap();
        assert!(
            (x - ((100.0 + 5.0 / 8.0) / 2.0f64).sqrt() - 0.25).abs() < 0.2,
            "{x}"
        );
        let x = x0_diagnostic(5).unwrap();
        assert!(x > 1.0 && x < 2.5, "{x}");
        for n in [5, 6, 10, 57, 100, 1000, 5000] {
            let x = x0_diagnostic(n).unwrap();
            let gap = f_n(n, x) - g_n(n, x);
            assert!(gap.abs() < 1e-9 * f_n(n, x).max(1.0), "n={n} gap={gap}");
        }
    }

    #[test]
    fn asymptotic_reference() {
        assert!((asymptotic_upper(2) - 2.0).abs() < 1e-12);
        assert!((asymptotic_upper(8) - 16.0).abs() < 1e-12);
    }

    #[test]
    fn plane_lower_bounds() {
        assert_eq!(lower_bound_prime(3), Ok(14));
        assert_eq!(lower_bound_prime(5), Ok(48));
        assert_eq!(lower_bound_prime(7), Ok(116));
        assert_eq!(lower_bound_prime(11), Ok(402));
        assert_eq!(lower_bound_prime(2), Err(BoundsError::NotOddPrime(2)));
        assert_eq!(lower_bound_prime(9), Err(BoundsError::NotOddPrime(9)));
    }

    #[test]
    fn best_lower_examples() {
        assert_eq!(
            best_lower_bound(13),
            Ok((14, LowerSource::PrimeConstruction(3)))
        );
        assert_eq!(best_lower_bound(6), Ok((6, LowerSource::KnownExact)));
        assert_eq!(
            best_lower_bound(20),
            Ok((14, LowerSource::PrimeConstruction(3)))
        );
        assert_eq!(best_lower_bound(12), Ok((6, LowerSource::Arboricity)));
        assert_eq!(
            best_lower_bound(31),
            Ok((48, LowerSource::PrimeConstruction(5)))
        );
        assert!(best_lower_bound(1).is_err());
    }

    #[test]
    fn plane_orders() {
        assert_eq!(largest_plane_order(12), None);
        assert_eq!(largest_plane_order(13), Some(3));
        assert_eq!(largest_plane_order(56), Some(5));
        assert_eq!(largest_plane_order(57), Some(7));
        assert_eq!(largest_plane_order(183), Some(13));
    }

    #[test]
    fn stored_witnesses_are_valid() {
        for n in 2..=7 {
            let w = known_witness(n).unwrap();
            assert_eq!(w.k() as u64, known_exact(n).unwrap());
            assert!(verify_coloring(&w).is_valid, "n={n}");
        }
        assert!(known_witness(8).is_none());
    }

    #[test]
    fn extension_bound_matches_construction() {
        use crate::construction::{build_coloring, star_extend};
        let k7 = known_witness(7).unwrap();
        for n in 8..=12 {
            let c = star_extend(&k7, n).unwrap();
            assert_eq!(extension_lower_bound(n), Some((c.k() as u64, 7)));
            assert_eq!(c.k(), n);
        }
        let plane = build_coloring(3).unwrap();
        for n in 14..=16 {
            let c = star_extend(&plane, n).unwrap();
            assert_eq!(extension_lower_bound(n), Some((c.k() as u64, 13)));
        }
    }

    #[test]
    fn summary_for_table_two() {
        for (n, upper) in [(8, 11), (9, 13), (10, 15), (11, 18), (12, 22)] {
            let s = summarize(n).unwrap();
            assert_eq!(s.upper, upper);
            assert_eq!(s.lower, n as u64);
            assert_eq!(s.lower_source, LowerSource::Extension(7));
        }
        let s = summarize(3).unwrap();
        assert_eq!((s.lower, s.upper, s.exact), (2, 2, Some(2)));
    }
}
