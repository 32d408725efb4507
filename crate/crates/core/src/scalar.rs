//! Real-valued helpers shared by the solvers and the harness.
//!
//! Everything that turns a probability or a logarithmic threshold into a
//! cardinality goes through here, generic over the float type.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Float type usable for thresholds, probabilities and analytic bounds.
pub trait Real: Float + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static {
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable")
    }

    fn of_usize(x: usize) -> Self {
        Self::from_usize(x).expect("count representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Slack applied before taking a ceiling, so that `6 * log2(16) = 24.000000001`
/// still materializes as 24.
pub const CEIL_GUARD: f64 = 1e-9;

/// `q = 1 / (1 - p)`.
pub fn q_of<F: Real>(p: F) -> F {
    F::one() / (F::one() - p)
}

/// `log_q x` with `q = 1/(1-p)`.
pub fn log_q<F: Real>(x: F, p: F) -> F {
    x.ln() / q_of(p).ln()
}

/// Ceiling of a real-valued cardinality, clamped to `[lo, hi]`.
pub fn ceil_clamped<F: Real>(x: F, lo: usize, hi: usize) -> usize {
    if x.is_nan() {
        return lo;
    }
    let c = (x - F::lit(CEIL_GUARD)).ceil();
    if c <= F::of_usize(lo) {
        lo
    } else if c >= F::of_usize(hi) {
        hi
    } else {
        c.to_usize().unwrap_or(hi)
    }
}

/// `ceil(x)` clamped to `[0, n]`.
pub fn ceil_count<F: Real>(x: F, n: usize) -> usize {
    ceil_clamped(x, 0, n)
}

/// Checks `0 < p < 1`.
pub fn is_probability<F: Real>(p: F) -> bool {
    p > F::zero() && p < F::one()
}

/// `1 - 2^{log2_fail}` truncated at `-inf`; takes the failure term in log2
/// space since the analytic bounds overflow any float for realistic `n`.
pub fn one_minus_pow2<F: Real>(log2_fail: F) -> F {
    if log2_fail > F::lit(1024.0) {
        F::neg_infinity()
    } else {
        F::one() - log2_fail.exp2()
    }
}

/// 95% Wilson score interval for `successes / trials`.
pub fn wilson_interval<F: Real>(successes: usize, trials: usize) -> (F, F) {
    if trials == 0 {
        return (F::zero(), F::one());
    }
    let z = F::lit(1.959_963_984_540_054);
    let n = F::of_usize(trials);
    let phat = F::of_usize(successes) / n;
    let z2 = z * z;
    let two = F::lit(2.0);
    let four = F::lit(4.0);
    let denom = F::one() + z2 / n;
    let centre = (phat + z2 / (two * n)) / denom;
    let half = z * (phat * (F::one() - phat) / n + z2 / (four * n * n)).sqrt() / denom;
    let lo = if successes == 0 { F::zero() } else { (centre - half).max(F::zero()) };
    let hi = if successes == trials { F::one() } else { (centre + half).min(F::one()) };
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guard_absorbs_rounding_at_integers() {
        let x: f64 = 6.0 * log_q(16.0, 0.5);
        assert_eq!(ceil_count(x, 100), 24);
        assert_eq!(ceil_count(x + 1e-6, 100), 25);
    }

    #[test]
    fn ceil_clamps() {
        assert_eq!(ceil_count(-3.0f64, 10), 0);
        assert_eq!(ceil_count(40.2f64, 10), 10);
        assert_eq!(ceil_clamped(0.2f32, 1, 10), 1);
        assert_eq!(ceil_count(f64::NAN, 10), 0);
    }

    #[test]
    fn log_q_matches_log2_at_half() {
        let v: f64 = log_q(1000.0, 0.5);
        assert!((v - 1000f64.log2()).abs() < 1e-12);
        let w: f32 = log_q(1000.0, 0.5);
        assert!((w - 9.965_784).abs() < 1e-4);
    }

    #[test]
    fn wilson_bounds() {
        let (lo, hi): (f64, f64) = wilson_interval(100, 100);
        assert!(lo > 0.96 && lo < 0.97);
        assert_eq!(hi, 1.0);
        let (lo, hi): (f64, f64) = wilson_interval(0, 300);
        assert_eq!(lo, 0.0);
        assert!(hi > 0.012 && hi < 0.013);
    }
}
