//! Colorings of `K_n` built from projective planes, and greedy extension.
//!
//! For an odd prime `q` the lines of `PG(2, q)` are split into one standalone
//! line and `(q^2 + q) / 2` triplets `(p, l, m)` with `p = l ∩ m`, where the
//! points `p` are pairwise distinct. Each line spans a `K_{q+1}` inside
//! `K_n`, `n = q^2 + q + 1`, and every `K_{q+1}` is factored into `(q+1)/2`
//! Hamiltonian paths. The standalone line contributes one class per path;
//! a triplet contributes one class per path index, glueing path `j` on `l`
//! to path `j` on `m` through the shared point `p`. This yields
//! `(q+1)(n+1)/4` classes.

use std::collections::HashMap;

use thiserror::Error;

use crate::dsu::DisjointSets;
use crate::graphcore::{all_edges, verify_coloring, Edge, EdgeColoring};
use crate::projplane::{PlaneError, PlaneLine, PlanePoint, ProjectivePlane};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("a Hamiltonian path factorization needs an even vertex count >= 2, got {0}")]
    OddOrder(usize),
    #[error("the triplet decomposition needs an odd prime order, got {0}")]
    NotOddPrime(u32),
    #[error(transparent)]
    Plane(#[from] PlaneError),
    #[error("cannot extend a coloring of K_{from} to the smaller K_{to}")]
    Shrinking { from: usize, to: usize },
    #[error("refusing to extend an invalid coloring")]
    InvalidSeed,
    #[error("internal error: constructed coloring failed verification ({0})")]
    Unverified(String),
}

/// `m / 2` Hamiltonian paths whose edge sets partition `E(K_m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFactorization {
    m: usize,
    paths: Vec<Vec<u32>>,
}

impl PathFactorization {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn paths(&self) -> &[Vec<u32>] {
        &self.paths
    }

    /// Edges of path `j`, in walk order.
    pub fn path_edges(&self, j: usize) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.paths[j].windows(2).map(|w| (w[0], w[1]))
    }
}

/// Zigzag factorization of `K_m` for even `m`.
///
/// Vertices are residues mod `m`; path `j` walks
/// `j, j+1, j-1, j+2, j-2, ..., j+m/2`, so consecutive steps have lengths
/// `1, 2, ..., m-1` with alternating sign, and the `m/2` rotations cover
/// every difference class exactly once.
pub fn hamiltonian_path_factorization(m: usize) -> Result<PathFactorization, ConstructionError> {
    if m < 2 || !m.is_multiple_of(2) {
        return Err(ConstructionError::OddOrder(m));
    }
    let half = m / 2;
    let paths = (0..half)
        .map(|j| {
            let mut path = Vec::with_capacity(m);
            path.push(j as u32);
            for s in 1..half {
                path.push(((j + s) % m) as u32);
                path.push(((j + m - s) % m) as u32);
            }
            path.push(((j + half) % m) as u32);
            path
        })
        .collect();
    Ok(PathFactorization { m, paths })
}

/// A point together with two distinct lines through it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Triplet {
    pub p: PlanePoint,
    pub l: PlaneLine,
    pub m: PlaneLine,
}

impl Triplet {
    fn new(p: PlanePoint, l: PlaneLine, m: PlaneLine) -> Self {
        Self { p, l, m }
    }
}

/// A standalone line plus triplets pairing up all other lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub standalone: PlaneLine,
    pub triplets: Vec<Triplet>,
}

impl Decomposition {
    /// Every line in the decomposition, standalone first.
    pub fn covered_lines(&self) -> Vec<PlaneLine> {
        std::iter::once(self.standalone)
            .chain(self.triplets.iter().flat_map(|t| [t.l, t.m]))
            .collect()
    }
}

/// Pairs the lines of `PG(2, q)` around distinct points.
///
/// With `h = (q-1)/2` and all divisions taken as multiplication by the
/// inverse of `i` mod `q`, the triplets are, in order:
///
/// * `(P_0, [0,0], L)`;
/// * `(P_i, [i,0], [i,2i-1])` for `1 <= i <= h`;
/// * `((i, i²+2i-1), L_i, [(i²-1)/i, 2i])` for `1 <= i <= h`;
/// * `((i, i²+2i-t), [(i²-t+1)/i, 2i-1], [(i²-t)/i, 2i])` for `1 <= i <= h`
///   and `t ∈ Z_q \ {1}` ascending;
/// * `((i, i²), [i,0], L_i)` for `h < i < q`.
///
/// The line `L_0` is left over as the standalone line.
pub fn triplet_decomposition(plane: &ProjectivePlane) -> Result<Decomposition, ConstructionError> {
    let q = plane.order();
    if q.is_multiple_of(2) {
        return Err(ConstructionError::NotOddPrime(q));
    }
    let qi = q as i64;
    let r = |x: i64| x.rem_euclid(qi) as u32;
    let inv = |i: i64| {
        crate::arith::mod_inverse(i as u64, q as u64).expect("1 <= i < q is invertible") as i64
    };
    let half = (qi - 1) / 2;

    let mut triplets = Vec::with_capacity(((q * q + q) / 2) as usize);
    triplets.push(Triplet::new(
        PlanePoint::OnInfLine(0),
        PlaneLine::Sloped(0, 0),
        PlaneLine::Infinity,
    ));
    for i in 1..=half {
        triplets.push(Triplet::new(
            PlanePoint::OnInfLine(r(i)),
            PlaneLine::Sloped(r(i), 0),
            PlaneLine::Sloped(r(i), r(2 * i - 1)),
        ));
    }
    for i in 1..=half {
        triplets.push(Triplet::new(
            PlanePoint::Affine(r(i), r(i * i + 2 * i - 1)),
            PlaneLine::Vertical(r(i)),
            PlaneLine::Sloped(r((i * i - 1) * inv(i)), r(2 * i)),
        ));
    }
    for i in 1..=half {
        for t in (0..qi).filter(|&t| t != 1) {
            triplets.push(Triplet::new(
                PlanePoint::Affine(r(i), r(i * i + 2 * i - t)),
                PlaneLine::Sloped(r((i * i - t + 1) * inv(i)), r(2 * i - 1)),
                PlaneLine::Sloped(r((i * i - t) * inv(i)), r(2 * i)),
            ));
        }
    }
    for i in half + 1..qi {
        triplets.push(Triplet::new(
            PlanePoint::Affine(r(i), r(i * i)),
            PlaneLine::Sloped(r(i), 0),
            PlaneLine::Vertical(r(i)),
        ));
    }
    Ok(Decomposition {
        standalone: PlaneLine::Vertical(0),
        triplets,
    })
}

/// The coloring of `K_{q^2+q+1}` with `(q+1)(q^2+q+2)/4` classes.
///
/// Path vertex `s` on a line is mapped to the line's `s`-th point in
/// point-index order. Classes come standalone first, then triplets in
/// decomposition order, path index ascending within each.
pub fn build_coloring(q: u32) -> Result<EdgeColoring, ConstructionError> {
    if q.is_multiple_of(2) {
        return Err(ConstructionError::NotOddPrime(q));
    }
    let plane = ProjectivePlane::new(q)?;
    let decomposition = triplet_decomposition(&plane)?;
    let factorization = hamiltonian_path_factorization(q as usize + 1)?;
    let paths = factorization.paths().len();

    let path_on = |line: PlaneLine, j: usize| -> Vec<Edge> {
        let points = plane.line_point_indices(line);
        factorization
            .path_edges(j)
            .map(|(a, b)| Edge::new(points[a as usize] as u32, points[b as usize] as u32))
            .collect()
    };

    let mut classes = Vec::with_capacity(paths * (1 + decomposition.triplets.len()));
    for j in 0..paths {
        let mut class = path_on(decomposition.standalone, j);
        class.sort_unstable();
        classes.push(class);
    }
    for t in &decomposition.triplets {
        for j in 0..paths {
            let mut class = path_on(t.l, j);
            class.extend(path_on(t.m, j));
            class.sort_unstable();
            classes.push(class);
        }
    }
    Ok(EdgeColoring::new(plane.size(), classes))
}

/// Extends a valid coloring of `K_m` to `K_n`, `n >= m`.
///
/// The edges of `E(K_n) \ E(K_m)` are taken in lexicographic order and each
/// goes to the lowest-index class that stays a forest. If the edge closes a
/// cycle in every class, it opens a new class; at that moment the new class
/// has a cycle with every existing class (the edge's endpoints are connected
/// in each of them), and adding edges later never removes a cycle, so the
/// result stays valid.
pub fn greedy_extend(c: &EdgeColoring, n: usize) -> Result<EdgeColoring, ConstructionError> {
    let m = c.n();
    if n < m {
        return Err(ConstructionError::Shrinking { from: m, to: n });
    }
    if !verify_coloring(c).is_valid {
        return Err(ConstructionError::InvalidSeed);
    }
    if n == m {
        return Ok(c.clone());
    }

    let mut classes: Vec<Vec<Edge>> = c.classes().to_vec();
    let mut forests: Vec<DisjointSets> = classes
        .iter()
        .map(|class| {
            let mut dsu = DisjointSets::new(n);
            for e in class {
                let (u, v) = e.endpoints();
                dsu.union(u, v);
            }
            dsu
        })
        .collect();

    for e in all_edges(n).into_iter().filter(|e| e.v() as usize >= m) {
        let (u, v) = e.endpoints();
        match forests.iter_mut().position(|f| !f.same_set(u, v)) {
            Some(ci) => {
                forests[ci].union(u, v);
                classes[ci].push(e);
            }
            None => {
                let mut dsu = DisjointSets::new(n);
                dsu.union(u, v);
                forests.push(dsu);
                classes.push(vec![e]);
            }
        }
    }
    for class in &mut classes {
        class.sort_unstable();
    }

    let extended = EdgeColoring::new(n, classes);
    let report = verify_coloring(&extended);
    if !report.is_valid {
        return Err(ConstructionError::Unverified(format!(
            "{} acyclic failures, {} pair failures",
            report.acyclic_failures.len(),
            report.pair_failures.len()
        )));
    }
    Ok(extended)
}

/// Extends `c` one vertex at a time, giving every new vertex a class of
/// its own.
///
/// The new vertex `v` gets a star class whose leaves include two vertices
/// from a common component of every old class, so the star has a cycle with
/// each of them. Each remaining edge `(v, y)` joins the lowest old class in
/// which no earlier edge from `v` reached the component of `y`, and becomes
/// another leaf of the star when there is none. The result has
/// `c.k() + (n - c.n())` classes.
pub fn star_extend(c: &EdgeColoring, n: usize) -> Result<EdgeColoring, ConstructionError> {
    let m = c.n();
    if n < m {
        return Err(ConstructionError::Shrinking { from: m, to: n });
    }
    if !verify_coloring(c).is_valid {
        return Err(ConstructionError::InvalidSeed);
    }
    if n == m {
        return Ok(c.clone());
    }

    let mut classes: Vec<Vec<Edge>> = c.classes().to_vec();
    let mut forests: Vec<DisjointSets> = classes
        .iter()
        .map(|class| {
            let mut dsu = DisjointSets::new(n);
            for e in class {
                let (u, v) = e.endpoints();
                dsu.union(u, v);
            }
            dsu
        })
        .collect();

    for v in m..n {
        let old = classes.len();
        let mut leaf = vec![false; v];
        for forest in forests.iter_mut() {
            let mut members: HashMap<usize, Vec<usize>> = HashMap::new();
            for w in 0..v {
                members.entry(forest.find(w)).or_default().push(w);
            }
            let hit = members
                .values()
                .any(|ws| ws.iter().filter(|&&w| leaf[w]).count() >= 2);
            if hit {
                continue;
            }
            // Prefer the component that already holds a leaf; ties go to the
            // component with the smallest vertex.
            let chosen = members
                .values()
                .filter(|ws| ws.len() >= 2)
                .max_by_key(|ws| (ws.iter().any(|&w| leaf[w]), std::cmp::Reverse(ws[0])))
                .expect("a nonempty forest has a component with an edge");
            let missing = 2 - chosen.iter().filter(|&&w| leaf[w]).count();
            let fresh: Vec<usize> = chosen
                .iter()
                .copied()
                .filter(|&w| !leaf[w])
                .take(missing)
                .collect();
            for w in fresh {
                leaf[w] = true;
            }
        }

        let mut star = Vec::new();
        let mut reached: Vec<Vec<usize>> = vec![Vec::new(); old];
        for (y, &is_leaf) in leaf.iter().enumerate() {
            if is_leaf {
                star.push(Edge::new(y as u32, v as u32));
                continue;
            }
            let slot = (0..old).find(|&ci| {
                let root = forests[ci].find(y);
                !reached[ci].iter().any(|&r| forests[ci].find(r) == root)
            });
            match slot {
                Some(ci) => {
                    reached[ci].push(y);
                    classes[ci].push(Edge::new(y as u32, v as u32));
                }
                None => star.push(Edge::new(y as u32, v as u32)),
            }
        }
        for (ci, ys) in reached.iter().enumerate() {
            for &y in ys {
                forests[ci].union(y, v);
            }
        }
        let mut dsu = DisjointSets::new(n);
        for e in &star {
            let (a, b) = e.endpoints();
            dsu.union(a, b);
        }
        forests.push(dsu);
        classes.push(star);
    }
    for class in &mut classes {
        class.sort_unstable();
    }

    let extended = EdgeColoring::new(n, classes);
    let report = verify_coloring(&extended);
    if !report.is_valid {
        return Err(ConstructionError::Unverified(format!(
            "{} acyclic failures, {} pair failures",
            report.acyclic_failures.len(),
            report.pair_failures.len()
        )));
    }
    Ok(extended)
}
