//! Partition machinery behind the small-dominating-set certificates.
//!
//! The vertex set is cut into consecutive blocks of about `C log_q n`
//! vertices. A block `P_i` is *distinguished* by `P_j` when `P_j` holds a
//! vertex that `P_i` does not dominate. Refinement rounds let every block
//! import one such vertex from its distinguisher, tracking per-(block, vertex)
//! colors: red for original members, yellow for imports, green for donated
//! copies. When some block has no distinguisher it dominates every other
//! block, so it is itself a dominating set; [`partition_hunt`] returns it.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{param, Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::scalar::{self, Real};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Color {
    Red,
    Yellow,
    Green,
}

/// One block of a colored partition; members keep insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    entries: Vec<(Vertex, Color)>,
}

impl Block {
    fn red(members: impl IntoIterator<Item = Vertex>) -> Self {
        Block {
            entries: members.into_iter().map(|v| (v, Color::Red)).collect(),
        }
    }

    pub fn from_entries(entries: Vec<(Vertex, Color)>) -> Self {
        Block { entries }
    }

    pub fn entries(&self) -> &[(Vertex, Color)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.entries.iter().any(|&(u, _)| u == v)
    }

    pub fn color_of(&self, v: Vertex) -> Option<Color> {
        self.entries.iter().find(|&&(u, _)| u == v).map(|&(_, c)| c)
    }

    pub fn members(&self) -> VertexSet {
        self.entries.iter().map(|&(v, _)| v).collect()
    }

    pub fn red_members(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.entries
            .iter()
            .filter(|&&(_, c)| c == Color::Red)
            .map(|&(v, _)| v)
    }

    pub fn red_count(&self) -> usize {
        self.red_members().count()
    }

    fn set_color(&mut self, v: Vertex, color: Color) {
        if let Some(e) = self.entries.iter_mut().find(|e| e.0 == v) {
            e.1 = color;
        }
    }
}

/// Ordered blocks covering `V`, with the refinement round that produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredPartition {
    blocks: Vec<Block>,
    round: usize,
}

impl ColoredPartition {
    /// Builds a partition from explicit blocks; the blocks must cover `0..n`.
    pub fn new(n: usize, blocks: Vec<Block>, round: usize) -> Result<Self> {
        let mut seen = BitSet::new(n);
        for b in &blocks {
            for &(v, _) in b.entries() {
                if v >= n {
                    return param(format!("vertex {v} out of range for n = {n}"));
                }
                seen.insert(v);
            }
        }
        if !seen.is_full() {
            return param("blocks do not cover every vertex");
        }
        Ok(ColoredPartition { blocks, round })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &Block {
        &self.blocks[i]
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn round(&self) -> usize {
        self.round
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Block::len).collect()
    }

    pub fn max_block_size(&self) -> usize {
        self.blocks.iter().map(Block::len).max().unwrap_or(0)
    }

    pub fn is_disjoint(&self) -> bool {
        let total: usize = self.blocks.iter().map(Block::len).sum();
        let distinct: VertexSet = self
            .blocks
            .iter()
            .flat_map(|b| b.entries.iter().map(|&(v, _)| v))
            .collect();
        total == distinct.len()
    }
}

/// Number of red (block, vertex) entries.
pub fn red_count(partition: &ColoredPartition) -> usize {
    partition.blocks.iter().map(Block::red_count).sum()
}

/// `ceil(C log_q n)` clamped to `[1, n]`.
pub fn block_size_for<F: Real>(n: usize, c: F, p: F) -> usize {
    scalar::ceil_clamped(c * scalar::log_q(F::of_usize(n), p), 1, n.max(1))
}

/// Consecutive id ranges of `block_size`, the last block holding the
/// remainder; every entry red.
pub fn disjoint_partition_sized(n: usize, block_size: usize) -> Result<ColoredPartition> {
    if n == 0 || block_size == 0 {
        return param("need n >= 1 and block size >= 1");
    }
    let blocks = (0..n)
        .step_by(block_size)
        .map(|start| Block::red(start..(start + block_size).min(n)))
        .collect();
    Ok(ColoredPartition { blocks, round: 0 })
}

pub fn build_disjoint_partition<F: Real>(g: &Graph, c: F, p: F) -> Result<ColoredPartition> {
    if !scalar::is_probability(p) || c <= F::zero() {
        return param(format!("need C > 0 and 0 < p < 1 (C = {c}, p = {p})"));
    }
    disjoint_partition_sized(g.n(), block_size_for(g.n(), c, p))
}

fn closure_of(g: &Graph, members: impl Iterator<Item = Vertex>) -> BitSet {
    let mut acc = BitSet::new(g.n());
    for v in members {
        acc.union_with(g.closed_neighbors(v));
    }
    acc
}

/// Lowest-id member of `pj` that `pi` fails to dominate (not in `pi`, no
/// neighbor in `pi`), if any.
pub fn distinguishes(g: &Graph, pi: &Block, pj: &Block) -> Option<Vertex> {
    let covered = closure_of(g, pi.entries.iter().map(|&(v, _)| v));
    pj.entries
        .iter()
        .map(|&(v, _)| v)
        .filter(|&v| !covered.contains(v))
        .min()
}

/// True if `pi` has no red member, or `pj` holds a vertex not dominated by
/// the red members of `pi`.
pub fn partially_distinguishes(g: &Graph, pi: &Block, pj: &Block) -> bool {
    if pi.red_count() == 0 {
        return true;
    }
    let covered = closure_of(g, pi.red_members());
    pj.entries.iter().any(|&(v, _)| !covered.contains(v))
}

/// Whether every block is partially distinguished by some other block.
pub fn all_partially_distinguished(g: &Graph, partition: &ColoredPartition) -> bool {
    let blocks = partition.blocks();
    (0..blocks.len()).all(|i| {
        (0..blocks.len()).any(|j| j != i && partially_distinguishes(g, &blocks[i], &blocks[j]))
    })
}

/// `|P_j| (1-p)^{|P_i|}`, clamped to `[0, 1]`.
pub fn eq1_edge_probability<F: Real>(pi_size: usize, pj_size: usize, p: F) -> F {
    let raw = F::of_usize(pj_size) * (F::one() - p).powi(pi_size as i32);
    raw.max(F::zero()).min(F::one())
}

/// Directed graph over blocks in which block `i` points to the block chosen
/// to distinguish it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinguishDigraph {
    pub succ: Vec<usize>,
}

impl DistinguishDigraph {
    pub fn edge_count(&self) -> usize {
        self.out_degrees().iter().sum()
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let l = self.succ.len();
        self.succ
            .iter()
            .enumerate()
            .map(|(i, &t)| usize::from(t < l && t != i))
            .collect()
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.succ.len()];
        for (_, t) in self.edges() {
            d[t] += 1;
        }
        d
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let l = self.succ.len();
        self.succ
            .iter()
            .copied()
            .enumerate()
            .filter(move |&(i, t)| t < l && t != i)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DigraphOutcome {
    Built(DistinguishDigraph),
    /// Index of a block nothing distinguishes; its members dominate `V`.
    Certificate(usize),
}

/// Walks the blocks: from the current block follow the lowest-index
/// distinguisher, continue from it if unvisited, otherwise restart at the
/// lowest unvisited block. Stops with a certificate at the first block that
/// has no distinguisher.
pub fn build_distinguish_digraph(g: &Graph, partition: &ColoredPartition) -> DigraphOutcome {
    let blocks = partition.blocks();
    let l = blocks.len();
    let mut succ = vec![usize::MAX; l];
    let mut visited = vec![false; l];
    let mut s = 0;
    visited[0] = true;
    loop {
        let t = (0..l).find(|&j| j != s && distinguishes(g, &blocks[s], &blocks[j]).is_some());
        let Some(t) = t else {
            return DigraphOutcome::Certificate(s);
        };
        succ[s] = t;
        if !visited[t] {
            visited[t] = true;
            s = t;
            continue;
        }
        match visited.iter().position(|&v| !v) {
            Some(next) => {
                visited[next] = true;
                s = next;
            }
            None => return DigraphOutcome::Built(DistinguishDigraph { succ }),
        }
    }
}

/// A yellow import performed during one refinement round.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Import {
    pub block: usize,
    pub vertex: Vertex,
    pub donor: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefineStep {
    /// The next partition, or the input unchanged on stall.
    pub partition: ColoredPartition,
    pub stall: Option<usize>,
    pub imports: Vec<Import>,
}

/// One refinement round `L_k → L_{k+1}`.
///
/// Blocks are processed in ascending order against the current state of the
/// round. Each takes the lowest-index block that distinguishes it, imports the
/// lowest undominated vertex as yellow and recolors the donor's copy green.
pub fn refine_once(g: &Graph, partition: &ColoredPartition) -> RefineStep {
    let mut next = partition.clone();
    let l = next.blocks.len();
    let mut imports = Vec::with_capacity(l);
    for i in 0..l {
        let found = (0..l)
            .filter(|&j| j != i)
            .find_map(|j| distinguishes(g, &next.blocks[i], &next.blocks[j]).map(|v| (j, v)));
        let Some((j, v)) = found else {
            return RefineStep {
                partition: partition.clone(),
                stall: Some(i),
                imports: Vec::new(),
            };
        };
        assert!(!next.blocks[i].contains(v), "imported vertex already in block");
        next.blocks[i].entries.push((v, Color::Yellow));
        next.blocks[j].set_color(v, Color::Green);
        imports.push(Import {
            block: i,
            vertex: v,
            donor: j,
        });
    }
    next.round += 1;
    RefineStep {
        partition: next,
        stall: None,
        imports,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HuntParams<F> {
    /// Partition constant `C`.
    pub c: F,
    pub p: F,
    /// Refinement rounds; `None` means `floor((C/2) log_q n)`.
    #[serde(default)]
    pub rounds: Option<usize>,
}

impl<F: Real> HuntParams<F> {
    pub fn new(c: F, p: F) -> Self {
        HuntParams { c, p, rounds: None }
    }

    pub fn with_rounds(mut self, rounds: usize) -> Self {
        self.rounds = Some(rounds);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.c > F::one()) || !scalar::is_probability(self.p) {
            return param(format!("need C > 1 and 0 < p < 1 (C = {}, p = {})", self.c, self.p));
        }
        Ok(())
    }

    pub fn rounds_for(&self, n: usize) -> usize {
        self.rounds.unwrap_or_else(|| {
            let h = self.c / F::lit(2.0) * scalar::log_q(F::of_usize(n), self.p);
            (h + F::lit(scalar::CEIL_GUARD))
                .floor()
                .max(F::zero())
                .to_usize()
                .unwrap_or(0)
        })
    }

    pub fn block_size(&self, n: usize) -> usize {
        block_size_for(n, self.c, self.p)
    }

    /// `ceil((3/2) C log_q n)`, the size bound on any certificate.
    pub fn certificate_cap(&self, n: usize) -> usize {
        let x = F::lit(1.5) * self.c * scalar::log_q(F::of_usize(n), self.p);
        scalar::ceil_count(x, n)
    }
}

/// One line of the partition trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    /// Index `k + 1` of the partition this round attempted to build.
    pub round: usize,
    pub red_count: usize,
    pub block_sizes: Vec<usize>,
    pub stall: Option<usize>,
    /// Whether every block of the input partition was partially distinguished.
    pub partially_distinguished: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HuntReport {
    /// Dominating set extracted from a stalled block.
    pub certificate: Option<VertexSet>,
    pub stall_block: Option<usize>,
    /// Rounds completed without stalling.
    pub rounds_completed: usize,
    pub rounds_budget: usize,
    pub block_size: usize,
    pub blocks: usize,
    pub trace: Vec<TraceRecord>,
}

impl HuntReport {
    pub fn red_trajectory(&self) -> Vec<usize> {
        self.trace.iter().map(|t| t.red_count).collect()
    }

    /// JSON lines, one [`TraceRecord`] per round.
    pub fn trace_jsonl(&self) -> String {
        let mut out = String::new();
        for t in &self.trace {
            out.push_str(&serde_json::to_string(t).expect("trace serializes"));
            out.push('\n');
        }
        out
    }
}

/// Refines the disjoint partition for up to `h` rounds and returns the first
/// stalled block as a dominating-set certificate.
///
/// The red-count drop per round (at most `l`), block growth, import freshness
/// and certificate domination are all checked; a violation is reported as
/// [`Error::Invariant`].
pub fn partition_hunt<F: Real>(g: &Graph, params: &HuntParams<F>) -> Result<HuntReport> {
    params.validate()?;
    let n = g.n();
    if n == 0 {
        return param("empty graph");
    }
    let block_size = params.block_size(n);
    let h = params.rounds_for(n);
    let mut current = disjoint_partition_sized(n, block_size)?;
    let l = current.len();
    let mut trace = Vec::new();

    for k in 0..h {
        let before = red_count(&current);
        let pd = all_partially_distinguished(g, &current);
        let step = refine_once(g, &current);
        let after = red_count(&step.partition);
        trace.push(TraceRecord {
            round: k + 1,
            red_count: after,
            block_sizes: step.partition.block_sizes(),
            stall: step.stall,
            partially_distinguished: pd,
        });

        if let Some(b) = step.stall {
            let cert = current.block(b).members();
            if !g.is_dominating(&cert)? {
                return Err(Error::Invariant(format!(
                    "stalled block {b} at round {} does not dominate",
                    k + 1
                )));
            }
            return Ok(HuntReport {
                certificate: Some(cert),
                stall_block: Some(b),
                rounds_completed: k,
                rounds_budget: h,
                block_size,
                blocks: l,
                trace,
            });
        }

        if after + l < before {
            return Err(Error::Invariant(format!(
                "red count fell from {before} to {after} with {l} blocks at round {}",
                k + 1
            )));
        }
        if step.partition.max_block_size() > block_size + k + 1 {
            return Err(Error::Invariant(format!(
                "block exceeded {} members after round {}",
                block_size + k + 1,
                k + 1
            )));
        }
        current = step.partition;
    }

    Ok(HuntReport {
        certificate: None,
        stall_block: None,
        rounds_completed: h,
        rounds_budget: h,
        block_size,
        blocks: l,
        trace,
    })
}
