//! Polynomial-time dominating-set constructors: the classical max-coverage
//! greedy and the good-vertex greedy that peels off a high-degree vertex
//! together with its neighborhood until only a logarithmic remainder is left.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{param, Result};
use crate::graph::{Graph, VertexSet};
use crate::scalar::{self, Real};

/// Repeatedly picks the vertex whose closed neighborhood covers the most
/// undominated vertices (lowest id on ties) until everything is dominated.
pub fn greedy_lnn(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut undominated = BitSet::full(n);
    let mut picked = Vec::new();
    while !undominated.is_empty() {
        let (best, _) = (0..n)
            .map(|v| (v, g.closed_neighbors(v).intersection_count(&undominated)))
            .fold((0, 0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        undominated.difference_with(g.closed_neighbors(best));
        picked.push(best);
    }
    picked.into_iter().collect()
}

/// Which order the good-vertex degree threshold is measured against.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdBase {
    /// `(p - ε) · |V(G₁)|` for the current residual graph `G₁`.
    #[default]
    Residual,
    /// `(p - ε) · n` for the input order, fixed throughout.
    Original,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GoodVertexParams<F> {
    pub p: F,
    pub epsilon: F,
    /// Constant in the `D log₂ n` remainder size.
    pub d: F,
    #[serde(default)]
    pub base: ThresholdBase,
}

impl<F: Real> GoodVertexParams<F> {
    pub fn new(p: F, epsilon: F, d: F) -> Self {
        GoodVertexParams {
            p,
            epsilon,
            d,
            base: ThresholdBase::Residual,
        }
    }

    pub fn with_base(mut self, base: ThresholdBase) -> Self {
        self.base = base;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.epsilon > F::zero()
            && self.epsilon < self.p
            && self.p < F::one()
            && self.d > F::zero();
        if !ok {
            return param(format!(
                "need 0 < epsilon < p < 1 and D > 0 (p = {}, epsilon = {}, D = {})",
                self.p, self.epsilon, self.d
            ));
        }
        Ok(())
    }

    /// `μ = ε² / (32 p ln 2)`.
    pub fn mu(&self) -> F {
        self.epsilon * self.epsilon / (F::lit(32.0) * self.p * F::lit(std::f64::consts::LN_2))
    }

    /// Shrink factor `1 - p + ε` of the residual graph per pick.
    pub fn shrink(&self) -> F {
        F::one() - self.p + self.epsilon
    }

    /// `D log₂ n`; the loop stops once fewer residual vertices remain.
    pub fn remainder_limit(&self, n: usize) -> F {
        self.d * F::of_usize(n).log2()
    }

    /// `ceil(log_{1/(1-p+ε)} n) + ceil(D log₂ n)`.
    pub fn size_cap(&self, n: usize) -> usize {
        let nf = F::of_usize(n);
        let picks = nf.ln() / (F::one() / self.shrink()).ln();
        scalar::ceil_count(picks, usize::MAX) + scalar::ceil_count(self.remainder_limit(n), usize::MAX)
    }
}

/// Full record of one good-vertex greedy run.
#[derive(Clone, Debug, PartialEq)]
pub struct GoodVertexRun {
    /// `None` when some round found no good vertex.
    pub set: Option<VertexSet>,
    /// Residual order before each pick, followed by the order after the last one.
    pub residual_sizes: Vec<usize>,
    pub picks: Vec<usize>,
}

/// Good-vertex greedy, returning only the set.
pub fn good_vertex_greedy<F: Real>(g: &Graph, params: &GoodVertexParams<F>) -> Result<Option<VertexSet>> {
    Ok(good_vertex_greedy_traced(g, params)?.set)
}

pub fn good_vertex_greedy_traced<F: Real>(g: &Graph, params: &GoodVertexParams<F>) -> Result<GoodVertexRun> {
    params.validate()?;
    let n = g.n();
    if n < 2 {
        return param("good-vertex greedy needs n >= 2");
    }
    let limit = params.remainder_limit(n);
    let slope = params.p - params.epsilon;

    let mut alive = BitSet::full(n);
    let mut picks = Vec::new();
    let mut residual_sizes = Vec::new();
    loop {
        let order = alive.count();
        residual_sizes.push(order);
        let base = match params.base {
            ThresholdBase::Residual => order,
            ThresholdBase::Original => n,
        };
        let threshold = slope * F::of_usize(base);

        // the max-degree vertex is good iff any vertex is
        let best = alive
            .iter()
            .map(|v| (v, g.neighbors(v).intersection_count(&alive)))
            .fold(None, |acc: Option<(usize, usize)>, cur| match acc {
                Some(a) if a.1 >= cur.1 => Some(a),
                _ => Some(cur),
            });
        let Some((u, deg)) = best else {
            return Ok(GoodVertexRun { set: None, residual_sizes, picks });
        };
        if F::of_usize(deg) < threshold {
            return Ok(GoodVertexRun { set: None, residual_sizes, picks });
        }

        picks.push(u);
        alive.difference_with(g.closed_neighbors(u));

        if F::of_usize(alive.count()) < limit {
            residual_sizes.push(alive.count());
            let set = picks.iter().copied().chain(alive.iter()).collect();
            return Ok(GoodVertexRun { set: Some(set), residual_sizes, picks });
        }
    }
}
