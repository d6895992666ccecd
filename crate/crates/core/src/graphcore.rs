//! Edges of `K_n`, edge colorings, and the validity checker.
//!
//! A coloring is valid when its classes partition `E(K_n)`, every class is a
//! forest, and the union of every two classes contains a cycle. All cycle
//! tests go through [`DisjointSets`]: an edge set has a cycle exactly when
//! some edge joins two vertices that are already in one component.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::dsu::DisjointSets;

/// Unordered pair of distinct vertices, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge {
    u: u32,
    v: u32,
}

impl Edge {
    /// Canonical edge between `a` and `b`.
    ///
    /// # Panics
    ///
    /// Panics if `a == b`; use [`Edge::try_new`] for untrusted input.
    pub fn new(a: u32, b: u32) -> Self {
        Self::try_new(a, b).expect("an edge needs two distinct endpoints")
    }

    pub fn try_new(a: u32, b: u32) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Self { u: a, v: b }),
            std::cmp::Ordering::Greater => Some(Self { u: b, v: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn u(self) -> u32 {
        self.u
    }

    pub fn v(self) -> u32 {
        self.v
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.u as usize, self.v as usize)
    }

    /// Position of this edge in the lexicographic order of `E(K_n)`.
    pub fn index_in(self, n: usize) -> usize {
        let (u, v) = self.endpoints();
        u * (2 * n - u - 1) / 2 + (v - u - 1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

impl From<(u32, u32)> for Edge {
    fn from((a, b): (u32, u32)) -> Self {
        Edge::new(a, b)
    }
}

/// The `n(n-1)/2` edges of `K_n` in lexicographic order.
pub fn all_edges(n: usize) -> Vec<Edge> {
    let n = n as u32;
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| Edge { u, v }))
        .collect()
}

/// An edge coloring of `K_n` stored class by class.
///
/// Construction does not validate anything; [`verify_coloring`] is the single
/// place that decides whether a coloring is a partition and whether it is
/// valid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    n: usize,
    classes: Vec<Vec<Edge>>,
}

impl EdgeColoring {
    pub fn new(n: usize, classes: Vec<Vec<Edge>>) -> Self {
        Self { n, classes }
    }

    /// Builds a coloring from a color index per edge of `all_edges(n)`.
    pub fn from_assignment(n: usize, colors: &[usize]) -> Self {
        let edges = all_edges(n);
        assert_eq!(edges.len(), colors.len(), "one color per edge");
        let k = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut classes = vec![Vec::new(); k];
        for (e, &c) in edges.into_iter().zip(colors) {
            classes[c].push(e);
        }
        Self { n, classes }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of color classes.
    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<Edge>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[Edge] {
        &self.classes[i]
    }

    pub fn into_classes(self) -> Vec<Vec<Edge>> {
        self.classes
    }

    pub fn edge_count(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    /// Color of every edge, or `None` if the coloring is not a partition of
    /// `E(K_n)`.
    pub fn color_map(&self) -> Option<HashMap<Edge, usize>> {
        let mut map = HashMap::with_capacity(self.edge_count());
        for (c, class) in self.classes.iter().enumerate() {
            for &e in class {
                if e.v() as usize >= self.n || map.insert(e, c).is_some() {
                    return None;
                }
            }
        }
        (map.len() == self.n * self.n.saturating_sub(1) / 2).then_some(map)
    }
}

/// Returns true iff `edges` contains no cycle. Repeated edges count once.
pub fn is_forest(edges: &[Edge], n: usize) -> bool {
    !has_cycle(edges.iter().copied(), n)
}

/// Returns true iff the set union of `a` and `b` contains a cycle.
pub fn union_contains_cycle(a: &[Edge], b: &[Edge], n: usize) -> bool {
    has_cycle(a.iter().chain(b).copied(), n)
}

fn has_cycle(edges: impl Iterator<Item = Edge>, n: usize) -> bool {
    let mut edges: Vec<Edge> = edges.collect();
    edges.sort_unstable();
    edges.dedup();
    let size = edges
        .iter()
        .map(|e| e.v() as usize + 1)
        .max()
        .unwrap_or(0)
        .max(n);
    let mut dsu = DisjointSets::new(size);
    edges.iter().any(|e| {
        let (u, v) = e.endpoints();
        !dsu.union(u, v)
    })
}

/// A structural defect found while checking that classes partition `E(K_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PartitionIssue {
    /// An endpoint is `>= n`.
    OutOfRange { class: usize, edge: Edge },
    /// The edge appears more than once (in the same class or in two classes).
    Duplicate {
        edge: Edge,
        first_class: usize,
        second_class: usize,
    },
    /// The edge of `K_n` is not colored.
    Missing { edge: Edge },
    /// The class has no edges, so the coloring is not surjective.
    EmptyClass { class: usize },
}

impl fmt::Display for PartitionIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionIssue::OutOfRange { class, edge } => {
                write!(f, "class {class}: edge {edge} has an endpoint out of range")
            }
            PartitionIssue::Duplicate {
                edge,
                first_class,
                second_class,
            } => write!(
                f,
                "edge {edge} appears in class {first_class} and again in class {second_class}"
            ),
            PartitionIssue::Missing { edge } => write!(f, "edge {edge} is not colored"),
            PartitionIssue::EmptyClass { class } => write!(f, "class {class} is empty"),
        }
    }
}

/// Outcome of [`verify_coloring`]. Failure lists are sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub k: usize,
    pub partition_ok: bool,
    pub partition_issues: Vec<PartitionIssue>,
    /// Classes that contain a cycle.
    pub acyclic_failures: Vec<usize>,
    /// Pairs `(i, j)`, `i < j`, whose union is a forest.
    pub pair_failures: Vec<(usize, usize)>,
    pub is_valid: bool,
}

/// Checks the partition property, acyclicity of every class, and the cycle
/// condition for every pair of classes.
pub fn verify_coloring(c: &EdgeColoring) -> VerificationReport {
    let n = c.n();
    let mut issues = Vec::new();
    let mut seen: HashMap<Edge, usize> = HashMap::new();
    for (ci, class) in c.classes().iter().enumerate() {
        if class.is_empty() {
            issues.push(PartitionIssue::EmptyClass { class: ci });
        }
        for &edge in class {
            if edge.v() as usize >= n {
                issues.push(PartitionIssue::OutOfRange { class: ci, edge });
            } else if let Some(&first) = seen.get(&edge) {
                issues.push(PartitionIssue::Duplicate {
                    edge,
                    first_class: first,
                    second_class: ci,
                });
            } else {
                seen.insert(edge, ci);
            }
        }
    }
    for edge in all_edges(n) {
        if !seen.contains_key(&edge) {
            issues.push(PartitionIssue::Missing { edge });
        }
    }

    let acyclic_failures: Vec<usize> = c
        .classes()
        .iter()
        .enumerate()
        .filter(|(_, class)| !is_forest(class, n))
        .map(|(i, _)| i)
        .collect();

    let k = c.k();
    let mut pair_failures = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if !union_contains_cycle(c.class(i), c.class(j), n) {
                pair_failures.push((i, j));
            }
        }
    }

    let partition_ok = issues.is_empty();
    let is_valid = partition_ok && acyclic_failures.is_empty() && pair_failures.is_empty();
    VerificationReport {
        n,
        k,
        partition_ok,
        partition_issues: issues,
        acyclic_failures,
        pair_failures,
        is_valid,
    }
}
