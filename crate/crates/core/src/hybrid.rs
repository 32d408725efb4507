//! Composite algorithms built from the exact, greedy and bounded solvers:
//!
//! * [`expected_qp_min_domset`]: bounded search up to `(3C/2) log_q n`, exact
//!   fallback otherwise;
//! * [`approx_via_fpt`]: approximation driven by a parameterized decider;
//! * [`fpt_via_approx`]: parameterized decider driven by an approximator;
//! * [`sparse_fpt_decide`]: decider for `G(n, 1/g(n))` using the ln-n greedy.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};
use crate::exact::{bb_domset_within, bounded_domset_search, min_domset_bb, Decision};
use crate::graph::{Graph, VertexSet};
use crate::greedy::{good_vertex_greedy, greedy_lnn, GoodVertexParams};
use crate::scalar::{self, Real};

/// Integer growth function of `n` used as a plug-in threshold.
#[derive(Clone, Copy)]
pub enum PluginFn {
    /// `floor(log₂ max(n, 2))`
    Log2,
    /// `max(1, floor(log₂ log₂ max(n, 4)))`
    LogLog2,
    /// `floor(√n)`
    Sqrt,
    Custom(fn(usize) -> u64),
}

impl PluginFn {
    pub fn eval(&self, n: usize) -> u64 {
        match self {
            PluginFn::Log2 => n.max(2).ilog2() as u64,
            PluginFn::LogLog2 => ((n.max(4) as f64).log2().log2().floor() as u64).max(1),
            PluginFn::Sqrt => n.isqrt() as u64,
            PluginFn::Custom(f) => f(n),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            PluginFn::Log2 => "log2",
            PluginFn::LogLog2 => "loglog2",
            PluginFn::Sqrt => "sqrt",
            PluginFn::Custom(_) => "custom",
        }
    }

    /// Smallest `n ≥ 1` with `eval(n) ≥ value`, by doubling then bisection.
    /// `None` if no `n` up to `2^40` reaches it.
    pub fn inverse(&self, value: u64) -> Option<usize> {
        if self.eval(1) >= value {
            return Some(1);
        }
        let mut hi = 2usize;
        while self.eval(hi) < value {
            if hi >= 1 << 40 {
                return None;
            }
            hi *= 2;
        }
        let mut lo = hi / 2;
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if self.eval(mid) >= value {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Some(hi)
    }

    /// Samples `n = 1..=4096` plus powers of two up to `2^30` and checks the
    /// function never decreases and does grow.
    pub fn check_monotone(&self) -> Result<()> {
        let dense = 1..=4096usize;
        let sparse = (13..=30).map(|e| 1usize << e);
        let mut prev = None;
        for n in dense.chain(sparse) {
            let v = self.eval(n);
            if let Some((pn, pv)) = prev {
                if v < pv {
                    return param(format!(
                        "plug-in `{}` decreases: f({pn}) = {pv} > f({n}) = {v}",
                        self.tag()
                    ));
                }
            }
            prev = Some((n, v));
        }
        if self.eval(1 << 30) <= self.eval(4) {
            return param(format!("plug-in `{}` does not grow", self.tag()));
        }
        Ok(())
    }
}

impl fmt::Debug for PluginFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for PluginFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "log2" => Ok(PluginFn::Log2),
            "loglog2" => Ok(PluginFn::LogLog2),
            "sqrt" => Ok(PluginFn::Sqrt),
            other => param(format!("unknown expression tag `{other}` (log2, loglog2, sqrt)")),
        }
    }
}

/// The asymptotic plug-ins: `w` divides the approximation ratio, `e` bounds
/// the parameter probe, `g` sets the sparse density `p = 1/g(n)`.
#[derive(Clone, Copy, Debug)]
pub struct PluginFunctions {
    pub w: PluginFn,
    pub e: PluginFn,
    pub g: PluginFn,
}

impl Default for PluginFunctions {
    fn default() -> Self {
        PluginFunctions {
            w: PluginFn::LogLog2,
            e: PluginFn::Log2,
            g: PluginFn::Sqrt,
        }
    }
}

impl PluginFunctions {
    pub fn validate(&self) -> Result<()> {
        self.w.check_monotone()?;
        self.e.check_monotone()?;
        self.g.check_monotone()
    }
}

/// Guarantee an approximator advertises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeclaredRatio {
    Lnn,
    LogqOverW,
}

/// A dominating-set approximation procedure with its declared ratio.
#[derive(Clone)]
pub struct ApproximatorHandle {
    procedure: Arc<dyn Fn(&Graph) -> VertexSet + Send + Sync>,
    pub declared_ratio: DeclaredRatio,
}

impl ApproximatorHandle {
    pub fn new<P>(declared_ratio: DeclaredRatio, procedure: P) -> Self
    where
        P: Fn(&Graph) -> VertexSet + Send + Sync + 'static,
    {
        ApproximatorHandle {
            procedure: Arc::new(procedure),
            declared_ratio,
        }
    }

    /// The exact solver, which meets any ratio.
    pub fn exact() -> Self {
        Self::new(DeclaredRatio::LogqOverW, |g| min_domset_bb(g).witness)
    }

    pub fn greedy() -> Self {
        Self::new(DeclaredRatio::Lnn, greedy_lnn)
    }

    /// Runs the procedure and rejects a non-dominating answer.
    pub fn run(&self, g: &Graph) -> Result<VertexSet> {
        let s = (self.procedure)(g);
        if !g.is_dominating(&s)? {
            return Err(Error::Invariant("approximator returned a non-dominating set".into()));
        }
        Ok(s)
    }
}

impl fmt::Debug for ApproximatorHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ApproximatorHandle")
            .field("declared_ratio", &self.declared_ratio)
            .finish_non_exhaustive()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HybridStage {
    BoundedEnum,
    ExactFallback,
}

impl HybridStage {
    pub fn tag(self) -> &'static str {
        match self {
            HybridStage::BoundedEnum => "bounded_enum",
            HybridStage::ExactFallback => "exact_fallback",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HybridOutcome {
    pub witness: VertexSet,
    pub stage: HybridStage,
    pub threshold_used: usize,
}

/// Cardinality cap `ceil((3C/2) log_q n)` of the bounded stage.
pub fn hybrid_cap<F: Real>(n: usize, p: F, c: F) -> usize {
    scalar::ceil_count(F::lit(1.5) * c * scalar::log_q(F::of_usize(n), p), n)
}

/// Minimum dominating set: ascending search up to `(3C/2) log_q n`
/// (`6 log_q n` for `C = 4`), exact branch-and-bound otherwise.
pub fn expected_qp_min_domset<F: Real>(g: &Graph, p: F, c: F) -> Result<HybridOutcome> {
    if !scalar::is_probability(p) || !(c > F::zero()) {
        return param(format!("need 0 < p < 1 and C > 0 (p = {p}, C = {c})"));
    }
    let cap = hybrid_cap(g.n(), p, c);
    Ok(match bounded_domset_search(g, cap) {
        Some(witness) => HybridOutcome {
            witness,
            stage: HybridStage::BoundedEnum,
            threshold_used: cap,
        },
        None => HybridOutcome {
            witness: min_domset_bb(g).witness,
            stage: HybridStage::ExactFallback,
            threshold_used: cap,
        },
    })
}

/// How [`approx_via_fpt`] locates the optimum once the probe says yes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanMode {
    #[default]
    Linear,
    Binary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ApproxStep {
    /// Parameter scan via the decider; exact.
    FptScan,
    /// Good-vertex greedy.
    GoodVertex,
    /// Bounded search up to `4 log_q n`; exact.
    BoundedEnum,
    ExactFallback,
}

impl ApproxStep {
    pub fn tag(self) -> &'static str {
        match self {
            ApproxStep::FptScan => "fpt_scan",
            ApproxStep::GoodVertex => "good_vertex",
            ApproxStep::BoundedEnum => "bounded_enum",
            ApproxStep::ExactFallback => "exact_fallback",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxOutcome {
    pub witness: VertexSet,
    pub step: ApproxStep,
    /// Decider calls made, including the initial probe.
    pub probes: usize,
}

/// `sqrt(5 / (μ log₂ q))`; `D` must exceed it.
pub fn min_admissible_d<F: Real>(p: F, epsilon: F) -> F {
    let mu = GoodVertexParams::new(p, epsilon, F::one()).mu();
    let log2q = scalar::q_of(p).log2();
    (F::lit(5.0) / (mu * log2q)).sqrt()
}

/// Settings for [`approx_via_fpt`].
#[derive(Clone, Copy, Debug)]
pub struct ApproxViaFptParams<F> {
    pub p: F,
    pub epsilon: F,
    pub d: F,
    pub plugins: PluginFunctions,
    pub scan: ScanMode,
}

/// Approximates a minimum dominating set given a decider for "size ≤ k?".
///
/// 1. Probe `k = e(n)`; on yes, scan `k = 1..=e(n)` and return the first
///    witness.
/// 2. Otherwise try the good-vertex greedy.
/// 3. Otherwise bounded search up to `ceil(4 log_q n)`.
/// 4. Otherwise exact branch-and-bound.
pub fn approx_via_fpt<F, D>(g: &Graph, params: &ApproxViaFptParams<F>, fpt: D) -> Result<ApproxOutcome>
where
    F: Real,
    D: Fn(&Graph, usize) -> Result<Decision>,
{
    let ApproxViaFptParams { p, epsilon, d, plugins, scan } = *params;
    GoodVertexParams::new(p, epsilon, d).validate()?;
    let d_min = min_admissible_d(p, epsilon);
    if !(d > d_min) {
        return param(format!("D = {d} too small for epsilon = {epsilon}, p = {p}; need D > {d_min}"));
    }
    let n = g.n();
    if n == 0 {
        return param("empty graph");
    }

    let e = (plugins.e.eval(n) as usize).min(n);
    let mut probes = 0;
    let mut ask = |k: usize| -> Result<Decision> {
        probes += 1;
        let d = fpt(g, k)?;
        if d.yes && d.witness.is_none() {
            return Err(Error::Invariant(format!("decider said yes for k = {k} without a witness")));
        }
        Ok(d)
    };

    if e >= 1 && ask(e)?.yes {
        let witness = match scan {
            ScanMode::Linear => {
                let mut found = None;
                for k in 1..=e {
                    let d = ask(k)?;
                    if d.yes {
                        found = d.witness;
                        break;
                    }
                }
                found
            }
            ScanMode::Binary => {
                // smallest yes in [1, e]; e itself is known yes
                let (mut lo, mut hi) = (1, e);
                let mut best = None;
                while lo < hi {
                    let mid = lo + (hi - lo) / 2;
                    let d = ask(mid)?;
                    if d.yes {
                        hi = mid;
                        best = d.witness;
                    } else {
                        lo = mid + 1;
                    }
                }
                match best {
                    Some(w) if w.len() <= lo => Some(w),
                    _ => ask(lo)?.witness,
                }
            }
        };
        let witness = witness.expect("k = e(n) answered yes");
        return Ok(ApproxOutcome { witness, step: ApproxStep::FptScan, probes });
    }

    if n >= 2 {
        if let Some(witness) = good_vertex_greedy(g, &GoodVertexParams::new(p, epsilon, d))? {
            return Ok(ApproxOutcome { witness, step: ApproxStep::GoodVertex, probes });
        }
    }

    let cap = scalar::ceil_count(F::lit(4.0) * scalar::log_q(F::of_usize(n), p), n);
    if let Some(witness) = bounded_domset_search(g, cap) {
        return Ok(ApproxOutcome { witness, step: ApproxStep::BoundedEnum, probes });
    }

    Ok(ApproxOutcome {
        witness: min_domset_bb(g).witness,
        step: ApproxStep::ExactFallback,
        probes,
    })
}

/// Branch taken by a parameterized decider.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecideStep {
    /// Large `k`: exact solve.
    ExactFallback,
    /// Approximate answer small enough: exhaustive search for `k`.
    Exhaustive,
    /// Approximate answer too large: "no" without search.
    ApproxReject,
}

impl DecideStep {
    pub fn tag(self) -> &'static str {
        match self {
            DecideStep::ExactFallback => "exact_fallback",
            DecideStep::Exhaustive => "exhaustive",
            DecideStep::ApproxReject => "approx_reject",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecideOutcome {
    pub decision: Decision,
    pub step: DecideStep,
    /// Size of the approximate solution, when one was computed.
    pub approx_size: Option<usize>,
}

fn decide_exact(g: &Graph, k: usize) -> Decision {
    match bb_domset_within(g, k) {
        Some(w) => Decision::yes(w),
        None => Decision::no(),
    }
}

fn decide_bounded(g: &Graph, k: usize) -> Decision {
    match bounded_domset_search(g, k) {
        Some(w) => Decision::yes(w),
        None => Decision::no(),
    }
}

/// `ceil(log_q n / √w)`.
pub fn fpt_via_approx_threshold<F: Real>(n: usize, p: F, w: u64) -> usize {
    let w = F::from_u64(w.max(1)).expect("w representable");
    scalar::ceil_count(scalar::log_q(F::of_usize(n), p) / w.sqrt(), n)
}

/// Decides "dominating set of size ≤ k?" from an approximator with ratio
/// `log_q n / w(n)`: exact when `k² > w(n)`, otherwise exhaustive search if
/// the approximate solution has at most `ceil(log_q n / √w(n))` vertices and
/// "no" if it is larger.
pub fn fpt_via_approx<F: Real>(
    g: &Graph,
    p: F,
    k: usize,
    approx: &ApproximatorHandle,
    plugins: &PluginFunctions,
) -> Result<DecideOutcome> {
    let n = g.n();
    if k > n {
        return param(format!("k = {k} exceeds n = {n}"));
    }
    if !scalar::is_probability(p) {
        return param(format!("edge probability {p} outside (0, 1)"));
    }
    if approx.declared_ratio != DeclaredRatio::LogqOverW {
        return param("fpt_via_approx needs an approximator with ratio log_q n / w(n)");
    }
    let w = plugins.w.eval(n);
    if (k as u128) * (k as u128) > w as u128 {
        return Ok(DecideOutcome {
            decision: decide_exact(g, k),
            step: DecideStep::ExactFallback,
            approx_size: None,
        });
    }
    let s = approx.run(g)?;
    let threshold = fpt_via_approx_threshold(n, p, w);
    if s.len() <= threshold {
        Ok(DecideOutcome {
            decision: decide_bounded(g, k),
            step: DecideStep::Exhaustive,
            approx_size: Some(s.len()),
        })
    } else {
        Ok(DecideOutcome {
            decision: Decision::no(),
            step: DecideStep::ApproxReject,
            approx_size: Some(s.len()),
        })
    }
}

/// `(ceil(g^{1/3}), ceil(g^{1/3} ln n))` for the sparse decider.
pub fn sparse_thresholds(n: usize, gv: u64) -> (usize, usize) {
    let cube_root = (gv as f64).cbrt();
    (
        scalar::ceil_count(cube_root, usize::MAX),
        scalar::ceil_count(cube_root * (n as f64).ln(), usize::MAX),
    )
}

/// Decider for `G(n, 1/g(n))`: exact when `k > ceil(g^{1/3})`, otherwise the
/// ln-n greedy decides between exhaustive search and an immediate "no" at
/// `ceil(g^{1/3} ln n)`.
pub fn sparse_fpt_decide(g: &Graph, gfun: PluginFn, k: usize) -> Result<DecideOutcome> {
    let n = g.n();
    if k > n {
        return param(format!("k = {k} exceeds n = {n}"));
    }
    let gv = gfun.eval(n);
    if gv == 0 || gv as u128 >= n as u128 {
        return param(format!("need 1 <= g(n) < n, got g({n}) = {gv}"));
    }
    let (k_limit, size_limit) = sparse_thresholds(n, gv);
    if k > k_limit {
        return Ok(DecideOutcome {
            decision: decide_exact(g, k),
            step: DecideStep::ExactFallback,
            approx_size: None,
        });
    }
    let s = greedy_lnn(g);
    if s.len() <= size_limit {
        Ok(DecideOutcome {
            decision: decide_bounded(g, k),
            step: DecideStep::Exhaustive,
            approx_size: Some(s.len()),
        })
    } else {
        Ok(DecideOutcome {
            decision: Decision::no(),
            step: DecideStep::ApproxReject,
            approx_size: Some(s.len()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{has_domset_of_size, DecideStrategy};
    use crate::graph::{gen_random_graph, GenParams};

    fn exact_decider(g: &Graph, k: usize) -> Result<Decision> {
        has_domset_of_size(g, k, DecideStrategy::BoundedSearch)
    }

    #[test]
    fn plugin_defaults() {
        let pf = PluginFunctions::default();
        assert_eq!(pf.e.eval(200), 7);
        assert_eq!(pf.e.eval(8), 3);
        assert_eq!(pf.e.eval(1), 1);
        assert_eq!(pf.w.eval(40), 2);
        assert_eq!(pf.w.eval(9), 1);
        assert_eq!(pf.w.eval(1), 1);
        assert_eq!(pf.w.eval(65536), 4);
        assert_eq!(pf.g.eval(16), 4);
        assert_eq!(pf.g.eval(40), 6);
        pf.validate().unwrap();
    }

    #[test]
    fn plugin_inverse() {
        assert_eq!(PluginFn::Sqrt.inverse(5), Some(25));
        assert_eq!(PluginFn::Log2.inverse(10), Some(1024));
        assert_eq!(PluginFn::LogLog2.inverse(3), Some(256));
        assert_eq!(PluginFn::Sqrt.inverse(0), Some(1));
        assert_eq!(PluginFn::Custom(|_| 3).inverse(4), None);
    }

    #[test]
    fn plugin_monotonicity_check() {
        assert!(PluginFn::Custom(|n| (1000usize.saturating_sub(n)) as u64).check_monotone().is_err());
        assert!(PluginFn::Custom(|_| 7).check_monotone().is_err());
        assert!("cube".parse::<PluginFn>().is_err());
        assert_eq!("sqrt".parse::<PluginFn>().unwrap().tag(), "sqrt");
    }

    #[test]
    fn hybrid_examples() {
        let out = expected_qp_min_domset(&Graph::complete(8), 0.5, 4.0).unwrap();
        assert_eq!(out.stage, HybridStage::BoundedEnum);
        assert_eq!(out.witness.len(), 1);
        // ceil(6 log2 6) = 16 → clamped to 6
        let out = expected_qp_min_domset(&Graph::empty(6), 0.5, 4.0).unwrap();
        assert_eq!(out.stage, HybridStage::BoundedEnum);
        assert_eq!(out.threshold_used, 6);
        assert_eq!(out.witness.len(), 6);
    }

    #[test]
    fn hybrid_falls_back_when_cap_too_small() {
        // C = 0.2 gives cap ceil(0.3 log2 6) = 1 < γ(C6) = 2
        let out = expected_qp_min_domset(&Graph::cycle(6), 0.5, 0.2).unwrap();
        assert_eq!(out.threshold_used, 1);
        assert_eq!(out.stage, HybridStage::ExactFallback);
        assert_eq!(out.witness.len(), 2);
    }

    #[test]
    fn d_constraint() {
        let dmin: f64 = min_admissible_d(0.5, 0.1);
        assert!((dmin - (5.0 * 16.0 * std::f64::consts::LN_2 / 0.01).sqrt()).abs() < 1e-9);
        let params = ApproxViaFptParams {
            p: 0.5,
            epsilon: 0.1,
            d: dmin - 1.0,
            plugins: PluginFunctions::default(),
            scan: ScanMode::Linear,
        };
        let err = approx_via_fpt(&Graph::complete(4), &params, exact_decider).unwrap_err();
        assert!(err.to_string().contains("need D >"));
    }

    fn avf(d_extra: f64, scan: ScanMode) -> ApproxViaFptParams<f64> {
        ApproxViaFptParams {
            p: 0.5,
            epsilon: 0.1,
            d: min_admissible_d(0.5, 0.1) + d_extra,
            plugins: PluginFunctions::default(),
            scan,
        }
    }

    #[test]
    fn approx_via_fpt_complete() {
        let out = approx_via_fpt(&Graph::complete(10), &avf(1.0, ScanMode::Linear), exact_decider).unwrap();
        assert_eq!(out.step, ApproxStep::FptScan);
        assert_eq!(out.witness.len(), 1);
    }

    #[test]
    fn approx_via_fpt_edgeless() {
        let out = approx_via_fpt(&Graph::empty(8), &avf(1.0, ScanMode::Linear), exact_decider).unwrap();
        assert!(matches!(out.step, ApproxStep::BoundedEnum | ApproxStep::ExactFallback));
        assert_eq!(out.witness.len(), 8);
    }

    #[test]
    fn approx_scan_modes_agree() {
        for seed in 0..10 {
            let g = gen_random_graph(GenParams::new(30, 0.5, seed)).unwrap();
            let a = approx_via_fpt(&g, &avf(1.0, ScanMode::Linear), exact_decider).unwrap();
            let b = approx_via_fpt(&g, &avf(1.0, ScanMode::Binary), exact_decider).unwrap();
            assert_eq!(a.witness.len(), b.witness.len());
            assert_eq!(a.witness.len(), min_domset_bb(&g).size);
        }
    }

    #[test]
    fn fpt_via_approx_examples() {
        let pf = PluginFunctions::default();
        let exact = ApproximatorHandle::exact();
        let out = fpt_via_approx(&Graph::complete(6), 0.5, 1, &exact, &pf).unwrap();
        assert_eq!(out.decision, Decision::yes(VertexSet::from([0])));
        let out = fpt_via_approx(&Graph::empty(9), 0.5, 2, &exact, &pf).unwrap();
        assert!(!out.decision.yes);
        assert!(fpt_via_approx(&Graph::empty(3), 0.5, 1, &ApproximatorHandle::greedy(), &pf).is_err());
        assert!(fpt_via_approx(&Graph::empty(3), 0.5, 4, &exact, &pf).is_err());
    }

    #[test]
    fn fpt_threshold() {
        // log2 40 / √2 = 3.76
        assert_eq!(fpt_via_approx_threshold(40, 0.5, 2), 4);
    }

    #[test]
    fn bad_approximator_is_caught() {
        let bogus = ApproximatorHandle::new(DeclaredRatio::LogqOverW, |_| VertexSet::new());
        let pf = PluginFunctions::default();
        let err = fpt_via_approx(&Graph::empty(9), 0.5, 1, &bogus, &pf).unwrap_err();
        assert!(matches!(err, Error::Invariant(_)));
    }

    #[test]
    fn sparse_examples() {
        let out = sparse_fpt_decide(&Graph::star(15), PluginFn::Sqrt, 1).unwrap();
        assert_eq!(out.decision, Decision::yes(VertexSet::from([0])));
        let out = sparse_fpt_decide(&Graph::empty(16), PluginFn::Sqrt, 2).unwrap();
        assert_eq!(out.decision, Decision::no());
        assert_eq!(out.step, DecideStep::ApproxReject);
        assert_eq!(sparse_thresholds(16, 4), (2, 5));
    }

    #[test]
    fn sparse_rejects_dense_g() {
        let err = sparse_fpt_decide(&Graph::empty(4), PluginFn::Custom(|n| n as u64), 1).unwrap_err();
        assert!(err.to_string().contains("g(n) < n"));
        assert!(sparse_fpt_decide(&Graph::empty(1), PluginFn::Sqrt, 1).is_err());
    }
}
