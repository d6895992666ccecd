//! The algebraic projective plane `PG(2, q)` for prime `q`.
//!
//! Coordinates follow the affine-chart description: an infinity point `P`
//! and infinity line `L` that are incident; the points `P_i` of `L` other
//! than `P`; the vertical lines `L_i` through `P`; affine points `(x, y)`
//! where `(x, y)` lies on `L_x`; and sloped lines `[a, b]` through `P_a`
//! holding the affine points with `y = a*x + b (mod q)`.

use std::fmt;

use thiserror::Error;

use crate::arith::{is_prime, mod_inverse, residue};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlaneError {
    #[error("plane order {0} is not prime (prime powers are not supported)")]
    NotPrime(u32),
    #[error("lines {0} and {1} are identical, their intersection is undefined")]
    IdenticalLines(PlaneLine, PlaneLine),
    #[error("{0} does not belong to the plane of order {1}")]
    OutOfPlane(String, u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlanePoint {
    /// `P`, the common point of `L` and every vertical line.
    Infinity,
    /// `P_i`, the point of `L` shared by all lines of slope `i`.
    OnInfLine(u32),
    /// `(x, y)`.
    Affine(u32, u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlaneLine {
    /// `L`, holding `P` and every `P_i`.
    Infinity,
    /// `L_i`: `P` and the points `(i, y)`.
    Vertical(u32),
    /// `[a, b]`: `P_a` and the points with `y = a*x + b`.
    Sloped(u32, u32),
}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanePoint::Infinity => write!(f, "P"),
            PlanePoint::OnInfLine(i) => write!(f, "P_{i}"),
            PlanePoint::Affine(x, y) => write!(f, "({x},{y})"),
        }
    }
}

impl fmt::Display for PlaneLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaneLine::Infinity => write!(f, "L"),
            PlaneLine::Vertical(i) => write!(f, "L_{i}"),
            PlaneLine::Sloped(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// Builds `PG(2, q)`; `q` must be prime.
pub fn build_plane(q: u32) -> Result<ProjectivePlane, PlaneError> {
    ProjectivePlane::new(q)
}

/// Incidence rule shared by every plane order.
pub fn incident(p: PlanePoint, l: PlaneLine, q: u32) -> bool {
    use PlaneLine as L;
    use PlanePoint as P;
    match (p, l) {
        (P::Infinity, L::Infinity | L::Vertical(_)) => true,
        (P::Infinity, L::Sloped(..)) => false,
        (P::OnInfLine(_), L::Infinity) => true,
        (P::OnInfLine(_), L::Vertical(_)) => false,
        (P::OnInfLine(i), L::Sloped(a, _)) => i == a,
        (P::Affine(..), L::Infinity) => false,
        (P::Affine(x, _), L::Vertical(i)) => x == i,
        (P::Affine(x, y), L::Sloped(a, b)) => {
            (a as u64 * x as u64 + b as u64) % q as u64 == y as u64
        }
    }
}

/// `PG(2, q)` with a fixed numbering of points and lines.
///
/// Points are numbered `P -> 0`, `P_i -> 1 + i`, `(x, y) -> 1 + q + x*q + y`;
/// lines use the same pattern (`L`, `L_i`, `[a, b]`).
#[derive(Debug, Clone)]
pub struct ProjectivePlane {
    q: u32,
    points: Vec<PlanePoint>,
    lines: Vec<PlaneLine>,
}

impl ProjectivePlane {
    pub fn new(q: u32) -> Result<Self, PlaneError> {
        if !is_prime(q as u64) {
            return Err(PlaneError::NotPrime(q));
        }
        let mut points = Vec::with_capacity(Self::size_for(q));
        let mut lines = Vec::with_capacity(Self::size_for(q));
        points.push(PlanePoint::Infinity);
        lines.push(PlaneLine::Infinity);
        points.extend((0..q).map(PlanePoint::OnInfLine));
        lines.extend((0..q).map(PlaneLine::Vertical));
        for x in 0..q {
            for y in 0..q {
                points.push(PlanePoint::Affine(x, y));
                lines.push(PlaneLine::Sloped(x, y));
            }
        }
        Ok(Self { q, points, lines })
    }

    fn size_for(q: u32) -> usize {
        let q = q as usize;
        q * q + q + 1
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Number of points, which equals the number of lines: `q^2 + q + 1`.
    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[PlanePoint] {
        &self.points
    }

    pub fn lines(&self) -> &[PlaneLine] {
        &self.lines
    }

    pub fn contains_point(&self, p: PlanePoint) -> bool {
        match p {
            PlanePoint::Infinity => true,
            PlanePoint::OnInfLine(i) => i < self.q,
            PlanePoint::Affine(x, y) => x < self.q && y < self.q,
        }
    }

    pub fn contains_line(&self, l: PlaneLine) -> bool {
        match l {
            PlaneLine::Infinity => true,
            PlaneLine::Vertical(i) => i < self.q,
            PlaneLine::Sloped(a, b) => a < self.q && b < self.q,
        }
    }

    pub fn point_index(&self, p: PlanePoint) -> usize {
        debug_assert!(self.contains_point(p));
        let q = self.q as usize;
        match p {
            PlanePoint::Infinity => 0,
            PlanePoint::OnInfLine(i) => 1 + i as usize,
            PlanePoint::Affine(x, y) => 1 + q + x as usize * q + y as usize,
        }
    }

    pub fn line_index(&self, l: PlaneLine) -> usize {
        debug_assert!(self.contains_line(l));
        let q = self.q as usize;
        match l {
            PlaneLine::Infinity => 0,
            PlaneLine::Vertical(i) => 1 + i as usize,
            PlaneLine::Sloped(a, b) => 1 + q + a as usize * q + b as usize,
        }
    }

    pub fn point(&self, index: usize) -> PlanePoint {
        self.points[index]
    }

    pub fn line(&self, index: usize) -> PlaneLine {
        self.lines[index]
    }

    pub fn incident(&self, p: PlanePoint, l: PlaneLine) -> bool {
        incident(p, l, self.q)
    }

    /// The `q + 1` points of `l`, in point-index order.
    pub fn line_points(&self, l: PlaneLine) -> Vec<PlanePoint> {
        let q = self.q;
        match l {
            PlaneLine::Infinity => std::iter::once(PlanePoint::Infinity)
                .chain((0..q).map(PlanePoint::OnInfLine))
                .collect(),
            PlaneLine::Vertical(i) => std::iter::once(PlanePoint::Infinity)
                .chain((0..q).map(|y| PlanePoint::Affine(i, y)))
                .collect(),
            PlaneLine::Sloped(a, b) => std::iter::once(PlanePoint::OnInfLine(a))
                .chain((0..q).map(|x| {
                    PlanePoint::Affine(x, ((a as u64 * x as u64 + b as u64) % q as u64) as u32)
                }))
                .collect(),
        }
    }

    /// Point indices of `l`, ascending.
    pub fn line_point_indices(&self, l: PlaneLine) -> Vec<usize> {
        self.line_points(l)
            .into_iter()
            .map(|p| self.point_index(p))
            .collect()
    }

    /// The `q + 1` lines through `p`.
    pub fn lines_through(&self, p: PlanePoint) -> Vec<PlaneLine> {
        let q = self.q;
        match p {
            PlanePoint::Infinity => std::iter::once(PlaneLine::Infinity)
                .chain((0..q).map(PlaneLine::Vertical))
                .collect(),
            PlanePoint::OnInfLine(i) => std::iter::once(PlaneLine::Infinity)
                .chain((0..q).map(|b| PlaneLine::Sloped(i, b)))
                .collect(),
            PlanePoint::Affine(x, y) => std::iter::once(PlaneLine::Vertical(x))
                .chain(
                    (0..q)
                        .map(|a| PlaneLine::Sloped(a, residue(y as i64 - a as i64 * x as i64, q))),
                )
                .collect(),
        }
    }

    /// The unique common point of two distinct lines, in closed form.
    pub fn line_intersection(&self, l: PlaneLine, m: PlaneLine) -> Result<PlanePoint, PlaneError> {
        use PlaneLine as L;
        for line in [l, m] {
            if !self.contains_line(line) {
                return Err(PlaneError::OutOfPlane(line.to_string(), self.q));
            }
        }
        if l == m {
            return Err(PlaneError::IdenticalLines(l, m));
        }
        let q = self.q;
        let point = match (l, m) {
            (L::Infinity, L::Vertical(_)) | (L::Vertical(_), L::Infinity) => PlanePoint::Infinity,
            (L::Infinity, L::Sloped(a, _)) | (L::Sloped(a, _), L::Infinity) => {
                PlanePoint::OnInfLine(a)
            }
            (L::Vertical(_), L::Vertical(_)) => PlanePoint::Infinity,
            (L::Vertical(i), L::Sloped(a, b)) | (L::Sloped(a, b), L::Vertical(i)) => {
                PlanePoint::Affine(i, residue(a as i64 * i as i64 + b as i64, q))
            }
            (L::Sloped(a, b), L::Sloped(a2, b2)) => {
                if a == a2 {
                    PlanePoint::OnInfLine(a)
                } else {
                    // (a - a2) x = b2 - b
                    let slope_gap = residue(a as i64 - a2 as i64, q);
                    let inv = mod_inverse(slope_gap as u64, q as u64)
                        .expect("nonzero residues are invertible modulo a prime");
                    let x = residue((b2 as i64 - b as i64).rem_euclid(q as i64) * inv as i64, q);
                    let y = residue(a as i64 * x as i64 + b as i64, q);
                    PlanePoint::Affine(x, y)
                }
            }
            (L::Infinity, L::Infinity) => unreachable!("identical lines handled above"),
        };
        Ok(point)
    }
}
