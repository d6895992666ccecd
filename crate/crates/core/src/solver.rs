//! Exhaustive branch-and-bound for `A_α(K_n)` on small `n`.
//!
//! Edges are colored in lexicographic order. Colors are opened in first-use
//! order, so every coloring is visited once up to renaming of colors. On top
//! of that, vertex 0 is taken to be a vertex with the most distinct colors,
//! and its neighbours are ordered so the colors on its star are
//! non-decreasing. Both conventions are reached from any valid coloring by
//! relabeling vertices and colors, so a refutation under them is a
//! refutation outright.
//!
//! Connectivity of every class and of every pair union is kept as vertex
//! bitmasks (a component is the mask of its vertices), copied level by
//! level so backtracking is free.

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bounds::{known_witness, largest_plane_order, upper_bound_lemma1};
use crate::construction::{build_coloring, greedy_extend, star_extend};
use crate::graphcore::{all_edges, verify_coloring, EdgeColoring};

/// Largest vertex count the bitmask state supports.
pub const MAX_VERTICES: usize = 16;

/// Largest class count the bitmask state supports.
pub const MAX_CLASSES: usize = 63;

/// Node budget used when the caller does not pick one.
pub const DEFAULT_MAX_NODES: u64 = 100_000_000;

/// Limits for a search. Nodes are counted per call to [`exists_coloring`];
/// the wall-clock limit applies to a whole [`exact_value`] run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }

    pub fn unlimited() -> Self {
        Self {
            max_nodes: None,
            max_time: None,
        }
    }

    pub fn with_time(mut self, max_time: Duration) -> Self {
        self.max_time = Some(max_time);
        self
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::nodes(DEFAULT_MAX_NODES)
    }
}

/// Why a search stopped early.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Exhausted {
    Nodes,
    Time,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(EdgeColoring),
    NotExists,
    Timeout(Exhausted),
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

/// Result of one search with statistics.
#[derive(Debug, Clone)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    pub nodes: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ExactStatus {
    Exact {
        value: u64,
    },
    /// Inconclusive: some `k` in `(lower, upper]` ran out of nodes.
    Bracket {
        lower: u64,
        upper: u64,
    },
    /// Inconclusive: the wall-clock limit was hit.
    TimedOut {
        lower: u64,
        upper: u64,
    },
}

impl fmt::Display for ExactStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ExactStatus::Exact { value } => write!(f, "Exact({value})"),
            ExactStatus::Bracket { lower, upper } => write!(f, "Bracket({lower}, {upper})"),
            ExactStatus::TimedOut { lower, upper } => write!(f, "TimedOut({lower}, {upper})"),
        }
    }
}

impl ExactStatus {
    pub fn lower(&self) -> u64 {
        match *self {
            ExactStatus::Exact { value } => value,
            ExactStatus::Bracket { lower, .. } | ExactStatus::TimedOut { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> u64 {
        match *self {
            ExactStatus::Exact { value } => value,
            ExactStatus::Bracket { upper, .. } | ExactStatus::TimedOut { upper, .. } => upper,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExactResult {
    pub n: usize,
    pub status: ExactStatus,
    /// Coloring with `status.lower()` classes.
    pub witness: Option<EdgeColoring>,
    /// Per attempted `k`, descending: the outcome of that search.
    pub attempts: Vec<(u64, AttemptOutcome)>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AttemptOutcome {
    Found,
    Refuted,
    Exhausted(Exhausted),
}

/// Does `K_n` have a valid coloring with exactly `k` classes?
pub fn exists_coloring(n: usize, k: usize, budget: Budget) -> SearchOutcome {
    search(n, k, budget, None).outcome
}

/// [`exists_coloring`] with node statistics and an optional absolute deadline.
pub fn search(n: usize, k: usize, budget: Budget, deadline: Option<Instant>) -> SearchReport {
    assert!(
        (2..=MAX_VERTICES).contains(&n),
        "solver supports 2 <= n <= {MAX_VERTICES}"
    );
    assert!(k >= 1, "need at least one color");
    let edge_count = n * (n - 1) / 2;
    if k > edge_count {
        return SearchReport {
            outcome: SearchOutcome::NotExists,
            nodes: 0,
        };
    }
    assert!(
        k <= MAX_CLASSES,
        "solver supports at most {MAX_CLASSES} classes"
    );
    let deadline = match (deadline, budget.max_time) {
        (Some(d), Some(t)) => Some(d.min(Instant::now() + t)),
        (Some(d), None) => Some(d),
        (None, Some(t)) => Some(Instant::now() + t),
        (None, None) => None,
    };
    let mut s = Search::new(n, k, budget.max_nodes, deadline);
    let found = s.run();
    let outcome = match (found, s.stopped) {
        (true, _) => {
            let witness = EdgeColoring::from_assignment(n, &s.best_assignment());
            let report = verify_coloring(&witness);
            assert!(
                report.is_valid && witness.k() == k,
                "solver produced an invalid witness for n={n}, k={k}"
            );
            SearchOutcome::Found(witness)
        }
        (false, Some(why)) => SearchOutcome::Timeout(why),
        (false, None) => SearchOutcome::NotExists,
    };
    SearchReport {
        outcome,
        nodes: s.nodes,
    }
}

struct Search {
    n: usize,
    k: usize,
    edges: Vec<(usize, usize)>,
    // Per pair of classes, its index in the pair tables.
    pair_index: Vec<usize>,
    /// One state per depth; level `d` holds the state after `d` edges.
    levels: Vec<State>,
    colors: Vec<u8>,
    edge_index: Vec<usize>,
    layout: StarLayout,
    caps: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
    stopped: Option<Exhausted>,
}

#[derive(Clone)]
struct State {
    /// `comp[c * n + v]`: component mask of `v` in class `c`.
    comp: Vec<u32>,
    /// `pair_comp[p * n + v]`: component of `v` in the union of pair `p`.
    pair_comp: Vec<u32>,
    /// Pair already contains a cycle.
    cyclic: Vec<bool>,
    deficient_pairs: usize,
    /// Common vertices of each pair of classes, saturating at 2.
    shared: Vec<u8>,
    /// Sum over pairs of the common vertices still missing.
    share_deficit: usize,
    /// Unassigned edges at each vertex.
    open_degree: Vec<u8>,
    /// Colors seen at each vertex, as a bitmask over classes.
    vertex_colors: Vec<u64>,
    size: Vec<u16>,
    used: usize,
}

impl Search {
    fn new(n: usize, k: usize, max_nodes: Option<u64>, deadline: Option<Instant>) -> Self {
        let edges: Vec<(usize, usize)> = all_edges(n).into_iter().map(|e| e.endpoints()).collect();
        let mut pair_index = vec![usize::MAX; k * k];
        let mut pairs = 0;
        for a in 0..k {
            for b in a + 1..k {
                pair_index[a * k + b] = pairs;
                pair_index[b * k + a] = pairs;
                pairs += 1;
            }
        }
        let singleton: Vec<u32> = (0..n).map(|v| 1u32 << v).collect();
        let root = State {
            comp: singleton.repeat(k),
            pair_comp: singleton.repeat(pairs),
            cyclic: vec![false; pairs],
            deficient_pairs: pairs,
            shared: vec![0; pairs],
            share_deficit: 2 * pairs,
            open_degree: vec![(n - 1) as u8; n],
            vertex_colors: vec![0; n],
            size: vec![0; k],
            used: 0,
        };
        let depth = edges.len();
        Self {
            n,
            k,
            pair_index,

            levels: vec![root; depth + 1],
            colors: vec![0; depth],
            edge_index: {
                let mut table = vec![usize::MAX; n * n];
                for (i, &(a, b)) in edges.iter().enumerate() {
                    table[a * n + b] = i;
                    table[b * n + a] = i;
                }
                table
            },
            layout: StarLayout::default(),
            caps: vec![0; n],
            edges,
            nodes: 0,
            max_nodes: max_nodes.unwrap_or(u64::MAX),
            deadline,
            stopped: None,
        }
    }

    fn best_assignment(&self) -> Vec<usize> {
        self.colors.iter().map(|&c| c as usize).collect()
    }

    fn run(&mut self) -> bool {
        self.dfs(0)
    }

    fn out_of_budget(&mut self) -> bool {
        if self.stopped.is_some() {
            return true;
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.stopped = Some(Exhausted::Nodes);
            return true;
        }
        if self.nodes & 0xffff == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.stopped = Some(Exhausted::Time);
                    return true;
                }
            }
        }
        false
    }

    fn dfs(&mut self, depth: usize) -> bool {
        if depth == self.edges.len() {
            let s = &self.levels[depth];
            return s.used == self.k && s.deficient_pairs == 0;
        }
        let n = self.n;
        let star = n - 1; // edges (0, v) come first
        let (u, v) = self.edges[depth];
        let used = self.levels[depth].used;
        let lo = if depth > 0 && depth < star {
            self.colors[depth - 1] as usize
        } else {
            0
        };
        let hi = (used + 1).min(self.k);
        for c in lo..hi {
            if self.out_of_budget() {
                return false;
            }
            if self.levels[depth].comp[c * n + u] & (1 << v) != 0 {
                continue;
            }
            self.colors[depth] = c as u8;
            if !self.apply(depth, c, u, v) {
                continue;
            }
            if self.dfs(depth + 1) {
                return true;
            }
            if self.stopped.is_some() {
                return false;
            }
        }
        false
    }

    /// Writes level `depth + 1` as level `depth` plus edge `(u, v)` in class
    /// `c`, then runs the lookahead. Returns false if the node is pruned.
    fn apply(&mut self, depth: usize, c: usize, u: usize, v: usize) -> bool {
        let (n, k) = (self.n, self.k);
        let (head, tail) = self.levels.split_at_mut(depth + 1);
        let (prev, next) = (&head[depth], &mut tail[0]);
        next.comp.copy_from_slice(&prev.comp);
        next.pair_comp.copy_from_slice(&prev.pair_comp);
        next.cyclic.copy_from_slice(&prev.cyclic);
        next.vertex_colors.copy_from_slice(&prev.vertex_colors);
        next.size.copy_from_slice(&prev.size);
        next.deficient_pairs = prev.deficient_pairs;
        next.shared.copy_from_slice(&prev.shared);
        next.share_deficit = prev.share_deficit;
        next.open_degree.copy_from_slice(&prev.open_degree);
        next.used = prev.used.max(c + 1);

        merge(&mut next.comp[c * n..(c + 1) * n], u, v);
        next.size[c] += 1;
        for w in [u, v] {
            next.open_degree[w] -= 1;
            let seen = next.vertex_colors[w];
            if seen & (1 << c) != 0 {
                continue;
            }
            let mut others = seen;
            while others != 0 {
                let d = others.trailing_zeros() as usize;
                others &= others - 1;
                let p = self.pair_index[c * k + d];
                if next.shared[p] < 2 {
                    next.shared[p] += 1;
                    next.share_deficit -= 1;
                }
            }
            next.vertex_colors[w] = seen | (1 << c);
        }
        for d in (0..k).filter(|&d| d != c) {
            let p = self.pair_index[c * k + d];
            if next.cyclic[p] {
                continue;
            }
            let block = &mut next.pair_comp[p * n..(p + 1) * n];
            if block[u] & (1 << v) != 0 {
                next.cyclic[p] = true;
                next.deficient_pairs -= 1;
            } else {
                merge(block, u, v);
            }
        }

        let remaining = self.edges.len() - depth - 1;
        let unopened = k - next.used;

        // Unopened classes need an edge each, and at most one of them can
        // end with a single edge (two single edges never form a cycle).
        if unopened > 0 && 2 * unopened - 1 > remaining {
            return false;
        }

        let star = n - 1;
        if depth < star && !star_runs_nonincreasing(&self.colors[..=depth]) {
            return false;
        }
        if depth + 1 == star {
            self.layout = StarLayout::new(&self.colors[..star]);
        }
        if depth + 1 >= star {
            let mut caps = std::mem::take(&mut self.caps);
            let holds = self.vertex_order_holds(depth, &self.levels[depth + 1], &mut caps);
            self.caps = caps;
            if !holds {
                return false;
            }
        }
        let next = &mut self.levels[depth + 1];

        // A class {uv} forces every other class to hold a u-v path, so u
        // sees all k colors. When that is impossible, classes need two edges.
        let max_degree = if depth + 1 >= star {
            next.vertex_colors[0].count_ones() as usize
        } else {
            n - 1
        };
        if k > max_degree {
            let short: usize = next
                .size
                .iter()
                .map(|&s| 2usize.saturating_sub(s as usize))
                .sum();
            if short > remaining {
                return false;
            }
        }

        // A cycle in the union of two forests switches between them at
        // least twice, so every pair of classes meets in two vertices. A
        // vertex seeing `t` colors accounts for `t(t-1)/2` meetings, and no
        // vertex sees more colors than vertex 0.
        if next.share_deficit > 0 {
            let ordered = depth + 1 >= star;
            let potential: usize = (0..n)
                .map(|w| {
                    let now = next.vertex_colors[w].count_ones() as usize;
                    let cap = if ordered { self.caps[w] } else { n - 1 }.min(k);
                    let fin = (now + next.open_degree[w] as usize).min(cap).max(now);
                    (fin * fin.saturating_sub(1) - now * now.saturating_sub(1)) / 2
                })
                .sum();
            if potential < next.share_deficit {
                return false;
            }
        }

        if next.deficient_pairs == 0 {
            return true;
        }

        // Every deficient pair needs another edge in one of its two classes,
        // so the classes still to receive edges form a vertex cover of the
        // deficiency graph. Unopened classes are all in it.
        if remaining < k {
            let mut adjacency = vec![0u64; next.used];
            for a in 0..next.used {
                for b in a + 1..next.used {
                    if !next.cyclic[self.pair_index[a * k + b]] {
                        adjacency[a] |= 1 << b;
                        adjacency[b] |= 1 << a;
                    }
                }
            }
            let budget = remaining.saturating_sub(unopened);
            if !vertex_cover_within(&adjacency, (1u64 << next.used) - 1, budget) {
                return false;
            }
        }

        // Each deficient pair must still be able to close a cycle with the
        // edges left, counting only edges that fit in one of its classes.
        if remaining <= 2 * n {
            let rest = &self.edges[depth + 1..];
            for a in 0..next.used {
                for b in a + 1..next.used {
                    let p = self.pair_index[a * k + b];
                    if next.cyclic[p] {
                        continue;
                    }
                    let mut comp = [0u32; MAX_VERTICES];
                    comp[..n].copy_from_slice(&next.pair_comp[p * n..(p + 1) * n]);
                    let ca = &next.comp[a * n..(a + 1) * n];
                    let cb = &next.comp[b * n..(b + 1) * n];
                    let closes = rest.iter().any(|&(x, y)| {
                        let fits = ca[x] & (1 << y) == 0 || cb[x] & (1 << y) == 0;
                        if !fits {
                            return false;
                        }
                        if comp[x] & (1 << y) != 0 {
                            return true;
                        }
                        merge(&mut comp, x, y);
                        false
                    });
                    if !closes {
                        return false;
                    }
                }
            }
        }

        // Once every class is open, each remaining edge needs a class in
        // which it does not close a cycle.
        if unopened == 0 {
            let rest = &self.edges[depth + 1..];
            let blocked = rest
                .iter()
                .any(|&(x, y)| (0..k).all(|d| next.comp[d * n + x] & (1 << y) != 0));
            if blocked {
                return false;
            }
        }
        true
    }
}

impl Search {
    /// Relation of edge `(f, s)`'s color to the star: 0 if it repeats the
    /// star color of `f`, 1 if it repeats that of `s`, 2 for another star
    /// color, 3 for a color absent from the star.
    fn star_type(&self, f: usize, s: usize) -> u8 {
        let c = self.colors[self.edge_index[f * self.n + s]] as usize;
        let star_color = |x: usize| self.colors[x - 1] as usize;
        if c == star_color(f) {
            0
        } else if c == star_color(s) {
            1
        } else if c < self.layout.star_colors {
            2
        } else {
            3
        }
    }

    /// Checks the canonical vertex order for the edges assigned so far and
    /// fills `caps` with an upper bound on each vertex's final number
    /// of colors.
    ///
    /// Relabeling vertices `1..n` (and then colors by first use) keeps the
    /// star sorted as long as runs stay contiguous, so we may assume: star
    /// runs are non-increasing in length; inside a run, color degrees are
    /// non-increasing; among vertices with a run of their own, the first
    /// one, `f`, has the largest color degree and the rest are sorted by
    /// [`Self::star_type`] of their edge to `f`, then by color degree.
    fn vertex_order_holds(&self, depth: usize, level: &State, caps: &mut [usize]) -> bool {
        let n = self.n;
        let degree = |w: usize| level.vertex_colors[w].count_ones() as usize;
        let reach = |w: usize| degree(w) + level.open_degree[w] as usize;
        let layout = &self.layout;
        let assigned = |a: usize, b: usize| self.edge_index[a * n + b] <= depth;

        if let Some(f) = layout.first_singleton {
            let (u, v) = self.edges[depth];
            if u == f && v >= f + 2 && self.star_type(f, v - 1) > self.star_type(f, v) {
                return false;
            }
        }

        let d0 = degree(0);
        caps[0] = d0;
        for b in 1..n {
            let mut cap = d0;
            let mut bound_by = |a: usize, caps: &[usize]| {
                cap = cap.min(caps[a].min(reach(a)));
            };
            let block = layout.block_of[b];
            if b >= 2 && layout.block_of[b - 1] == block && !layout.singleton[b] {
                bound_by(b - 1, caps);
            }
            if let Some(f) = layout.first_singleton {
                if layout.singleton[b] && b > f {
                    bound_by(f, caps);
                    if b - 1 > f
                        && assigned(f, b)
                        && self.star_type(f, b - 1) == self.star_type(f, b)
                    {
                        bound_by(b - 1, caps);
                    }
                }
            }
            if degree(b) > cap {
                return false;
            }
            caps[b] = cap;
        }
        true
    }
}

/// Run structure of the colors on vertex 0's star.
#[derive(Debug, Clone, Default)]
struct StarLayout {
    /// Number of distinct star colors; they are `0..star_colors`.
    star_colors: usize,
    /// Run index of each vertex (vertex 0 has none and maps to `usize::MAX`).
    block_of: Vec<usize>,
    /// Whether the vertex's run has length one.
    singleton: Vec<bool>,
    first_singleton: Option<usize>,
}

impl StarLayout {
    fn new(star: &[u8]) -> Self {
        let n = star.len() + 1;
        let mut block_of = vec![usize::MAX; n];
        for (i, &c) in star.iter().enumerate() {
            block_of[i + 1] = c as usize;
        }
        let star_colors = star.last().map_or(0, |&c| c as usize + 1);
        let mut run_len = vec![0; star_colors];
        for &c in star {
            run_len[c as usize] += 1;
        }
        let singleton: Vec<bool> = (0..n).map(|v| v > 0 && run_len[block_of[v]] == 1).collect();
        let first_singleton = (1..n).find(|&v| singleton[v]);
        Self {
            star_colors,
            block_of,
            singleton,
            first_singleton,
        }
    }
}

fn star_runs_nonincreasing(star: &[u8]) -> bool {
    let mut previous = usize::MAX;
    let mut i = 0;
    while i < star.len() {
        let mut j = i;
        while j < star.len() && star[j] == star[i] {
            j += 1;
        }
        if j - i > previous {
            return false;
        }
        previous = j - i;
        i = j;
    }
    true
}

fn merge(comp: &mut [u32], u: usize, v: usize) {
    let merged = comp[u] | comp[v];
    let mut rest = merged;
    while rest != 0 {
        let w = rest.trailing_zeros() as usize;
        comp[w] = merged;
        rest &= rest - 1;
    }
}

/// Is there a vertex cover of the graph induced on `alive` with at most
/// `budget` vertices?
fn vertex_cover_within(adjacency: &[u64], alive: u64, budget: usize) -> bool {
    // Find an edge among alive vertices.
    let mut rest = alive;
    while rest != 0 {
        let a = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let nbrs = adjacency[a] & alive;
        if nbrs != 0 {
            if budget == 0 {
                return false;
            }
            // Either a is in the cover, or all its neighbours are.
            if vertex_cover_within(adjacency, alive & !(1 << a), budget - 1) {
                return true;
            }
            let deg = nbrs.count_ones() as usize;
            return deg <= budget
                && vertex_cover_within(adjacency, alive & !nbrs & !(1 << a), budget - deg);
        }
    }
    true
}

/// Upper bound the exact search starts from.
pub fn search_upper_bound(n: usize) -> u64 {
    match upper_bound_lemma1(n) {
        Ok(v) => v,
        Err(_) => (n * (n - 1) / 2) as u64,
    }
}

/// Best constructive witness available without searching: the greedy chain
/// from `K_2`, and the vertex extensions of the stored `K_7` witness and of
/// the largest plane coloring that fits.
pub fn seed_witness(n: usize) -> EdgeColoring {
    let mut best = EdgeColoring::new(2, vec![all_edges(2)]);
    for m in 3..=n {
        best = greedy_extend(&best, m).expect("greedy extension of a valid coloring");
    }
    let mut consider = |candidate: Option<EdgeColoring>| {
        if let Some(c) = candidate {
            if c.k() > best.k() {
                best = c;
            }
        }
    };
    if n >= 7 {
        consider(known_witness(7).and_then(|w| star_extend(&w, n).ok()));
    }
    if let Some(q) = largest_plane_order(n) {
        consider(
            build_coloring(q as u32)
                .ok()
                .and_then(|c| star_extend(&c, n).ok()),
        );
    }
    best
}

/// Searches downward from the counting bound for the largest `k` with a
/// valid coloring of `K_n`.
///
/// Every `k` above the reported value is attempted with its own node budget;
/// the result is `Exact` only if all of them were refuted.
pub fn exact_value(n: usize, budget: Budget) -> ExactResult {
    assert!(
        (2..=MAX_VERTICES).contains(&n),
        "solver supports 2 <= n <= {MAX_VERTICES}"
    );
    let start = Instant::now();
    let deadline = budget.max_time.map(|t| start + t);
    let mut witness = seed_witness(n);
    let mut lower = witness.k() as u64;
    let mut highest_open: Option<u64> = None;
    let mut timed_out = false;
    let mut attempts = Vec::new();
    let mut nodes = 0;

    let upper = search_upper_bound(n);
    let mut k = upper;
    while k > lower {
        let report = search(
            n,
            k as usize,
            Budget {
                max_nodes: budget.max_nodes,
                max_time: None,
            },
            deadline,
        );
        nodes += report.nodes;
        match report.outcome {
            SearchOutcome::Found(c) => {
                attempts.push((k, AttemptOutcome::Found));
                lower = k;
                witness = c;
                break;
            }
            SearchOutcome::NotExists => attempts.push((k, AttemptOutcome::Refuted)),
            SearchOutcome::Timeout(why) => {
                attempts.push((k, AttemptOutcome::Exhausted(why)));
                highest_open.get_or_insert(k);
                if why == Exhausted::Time {
                    timed_out = true;
                    break;
                }
            }
        }
        k -= 1;
    }

    let status = match highest_open {
        None => ExactStatus::Exact { value: lower },
        Some(upper) if timed_out => ExactStatus::TimedOut { lower, upper },
        Some(upper) => ExactStatus::Bracket { lower, upper },
    };
    ExactResult {
        n,
        status,
        witness: Some(witness),
        attempts,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    }
}
