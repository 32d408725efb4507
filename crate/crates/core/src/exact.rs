//! Exact minimum dominating set solvers.
//!
//! Three independent routes: plain cardinality-staged enumeration (the test
//! oracle), a pruned ascending-cardinality search with an optional size cap,
//! and a set-cover branch-and-bound used wherever an exact fallback is needed.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{param, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::greedy::greedy_lnn;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMethod {
    Enumeration,
    BranchAndBound,
}

impl SolveMethod {
    pub fn tag(self) -> &'static str {
        match self {
            SolveMethod::Enumeration => "enumeration",
            SolveMethod::BranchAndBound => "branch_and_bound",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub size: usize,
    pub witness: VertexSet,
    pub method: SolveMethod,
    pub nodes_explored: u64,
}

/// Tries every `k`-subset in lexicographic order for `k = 1, 2, …` and stops
/// at the first dominating one. Exponential; meant for `n` up to ~25.
pub fn min_domset_enum(g: &Graph) -> SolveOutcome {
    let n = g.n();
    let mut nodes = 0u64;
    for k in 0..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            nodes += 1;
            let mut acc = BitSet::new(n);
            for &v in &idx {
                acc.union_with(g.closed_neighbors(v));
            }
            if acc.is_full() {
                let witness: VertexSet = idx.iter().copied().collect();
                return SolveOutcome {
                    size: witness.len(),
                    witness,
                    method: SolveMethod::Enumeration,
                    nodes_explored: nodes,
                };
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    unreachable!("V itself always dominates")
}

/// Advances `idx` to the next `k`-combination of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Minimum dominating set among those of size `≤ cap`, or `None`.
///
/// Cardinalities are tried in ascending order, and within one cardinality
/// the lexicographically smallest dominating set is returned.
pub fn bounded_domset_search(g: &Graph, cap: usize) -> Option<VertexSet> {
    bounded_domset_search_counted(g, cap).0
}

pub(crate) fn bounded_domset_search_counted(g: &Graph, cap: usize) -> (Option<VertexSet>, u64) {
    let n = g.n();
    if n == 0 {
        return (Some(VertexSet::new()), 0);
    }
    let mut search = BoundedSearch::new(g);
    for k in 1..=cap.min(n) {
        let mut chosen = Vec::with_capacity(k);
        let dominated = BitSet::new(n);
        if search.dfs(&dominated, 0, k, &mut chosen) {
            return (Some(chosen.into_iter().collect()), search.nodes);
        }
    }
    (None, search.nodes)
}

struct BoundedSearch<'g> {
    g: &'g Graph,
    /// `last_cover[u]` = largest id in `N[u]`.
    last_cover: Vec<usize>,
    /// `suffix_max_cover[i]` = max `|N[v]|` over `v ≥ i`.
    suffix_max_cover: Vec<usize>,
    scratch: Vec<BitSet>,
    nodes: u64,
}

impl<'g> BoundedSearch<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        let last_cover = (0..n)
            .map(|u| g.closed_neighbors(u).last().expect("u ∈ N[u]"))
            .collect();
        let mut suffix_max_cover = vec![0; n + 1];
        for v in (0..n).rev() {
            suffix_max_cover[v] = suffix_max_cover[v + 1].max(g.degree(v).unwrap() + 1);
        }
        BoundedSearch {
            g,
            last_cover,
            suffix_max_cover,
            scratch: Vec::new(),
            nodes: 0,
        }
    }

    /// Extends `chosen` with `left` more ids from `start..n` in increasing
    /// order so that the union dominates everything.
    fn dfs(&mut self, dominated: &BitSet, start: usize, left: usize, chosen: &mut Vec<Vertex>) -> bool {
        self.nodes += 1;
        let n = self.g.n();
        let missing = n - dominated.count();
        if missing == 0 {
            return true;
        }
        if left == 0 || start >= n {
            return false;
        }
        if missing > left * self.suffix_max_cover[start] {
            return false;
        }
        // every undominated vertex must be covered by some later pick, and
        // later picks only grow, so the next pick can't exceed this
        let mut upper = n - 1;
        for u in dominated.iter_absent() {
            let lc = self.last_cover[u];
            if lc < start {
                return false;
            }
            upper = upper.min(lc);
        }

        let depth = chosen.len();
        if self.scratch.len() <= depth {
            self.scratch.push(BitSet::new(n));
        }
        for v in start..=upper.min(n - left) {
            let mut next = std::mem::replace(&mut self.scratch[depth], BitSet::new(0));
            next.copy_from(dominated);
            next.union_with(self.g.closed_neighbors(v));
            chosen.push(v);
            let found = self.dfs(&next, v + 1, left - 1, chosen);
            self.scratch[depth] = next;
            if found {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// Branch-and-bound over closed neighborhoods.
///
/// Branches on the undominated vertex with the fewest admissible dominators;
/// siblings exclude the dominators already tried. The incumbent starts at the
/// greedy solution and the bound is `ceil(undominated / best coverage)`.
pub fn min_domset_bb(g: &Graph) -> SolveOutcome {
    let start = greedy_lnn(g);
    let mut bb = BranchAndBound::new(g, start.len());
    bb.best = Some(start.as_slice().to_vec());
    bb.run();
    let witness: VertexSet = bb.best.unwrap_or_default().into_iter().collect();
    SolveOutcome {
        size: witness.len(),
        witness,
        method: SolveMethod::BranchAndBound,
        nodes_explored: bb.nodes,
    }
}

/// Branch and bound restricted to sets of at most `k` vertices.
pub fn bb_domset_within(g: &Graph, k: usize) -> Option<VertexSet> {
    let start = greedy_lnn(g);
    if start.len() <= k {
        return Some(start);
    }
    let mut bb = BranchAndBound::new(g, k + 1);
    bb.run();
    bb.best.map(|b| b.into_iter().collect())
}

struct BranchAndBound<'g> {
    g: &'g Graph,
    best: Option<Vec<Vertex>>,
    /// Only sets smaller than this are still of interest.
    limit: usize,
    chosen: Vec<Vertex>,
    nodes: u64,
}

impl<'g> BranchAndBound<'g> {
    fn new(g: &'g Graph, limit: usize) -> Self {
        BranchAndBound {
            g,
            best: None,
            limit,
            chosen: Vec::new(),
            nodes: 0,
        }
    }

    fn run(&mut self) {
        let n = self.g.n();
        self.search(&BitSet::new(n), &BitSet::full(n));
    }

    fn search(&mut self, dominated: &BitSet, allowed: &BitSet) {
        self.nodes += 1;
        let n = self.g.n();
        let undominated = n - dominated.count();
        if undominated == 0 {
            if self.chosen.len() < self.limit {
                self.limit = self.chosen.len();
                self.best = Some(self.chosen.clone());
            }
            return;
        }
        if self.chosen.len() + 1 >= self.limit {
            return;
        }

        let mut max_cover = 0;
        for w in allowed.iter() {
            max_cover = max_cover.max(dominated.missing_count(self.g.closed_neighbors(w)));
        }
        if max_cover == 0 {
            return;
        }
        let lower = undominated.div_ceil(max_cover);
        if self.chosen.len() + lower >= self.limit {
            return;
        }

        let mut pivot = None;
        let mut fewest = usize::MAX;
        for u in dominated.iter_absent() {
            let options = allowed.intersection_count(self.g.closed_neighbors(u));
            if options < fewest {
                fewest = options;
                pivot = Some(u);
                if options <= 1 {
                    break;
                }
            }
        }
        let u = pivot.expect("undominated vertex exists");
        if fewest == 0 {
            return;
        }

        let mut candidates = self.g.closed_neighbors(u).clone();
        candidates.intersect_with(allowed);
        let mut allowed_here = allowed.clone();
        let mut next = BitSet::new(n);
        for w in candidates.iter() {
            next.copy_from(dominated);
            next.union_with(self.g.closed_neighbors(w));
            allowed_here.remove(w);
            self.chosen.push(w);
            self.search(&next, &allowed_here);
            self.chosen.pop();
        }
    }
}

/// How [`has_domset_of_size`] decides.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecideStrategy {
    #[default]
    BoundedSearch,
    BranchAndBound,
}

/// Answer to "does `g` have a dominating set of size at most `k`?".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub yes: bool,
    pub witness: Option<VertexSet>,
}

impl Decision {
    pub fn yes(witness: VertexSet) -> Self {
        Decision {
            yes: true,
            witness: Some(witness),
        }
    }

    pub fn no() -> Self {
        Decision {
            yes: false,
            witness: None,
        }
    }
}

pub fn has_domset_of_size(g: &Graph, k: usize, strategy: DecideStrategy) -> Result<Decision> {
    if k > g.n() {
        return param(format!("k = {k} exceeds n = {}", g.n()));
    }
    Ok(match strategy {
        DecideStrategy::BoundedSearch => match bounded_domset_search(g, k) {
            Some(w) => Decision::yes(w),
            None => Decision::no(),
        },
        DecideStrategy::BranchAndBound => match bb_domset_within(g, k) {
            Some(w) => Decision::yes(w),
            None => Decision::no(),
        },
    })
}
