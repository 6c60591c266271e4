//! One-sample Kolmogorov-Smirnov check against a uniform distribution.

/// KS statistic of a sample against Uniform[lo, hi).
pub fn ks_statistic_uniform(sample: &[f64], lo: f64, hi: f64) -> f64 {
    assert!(!sample.is_empty() && hi > lo);
    let mut sorted = sample.to_vec();
    sorted.sort_by(|a, b| a.total_cmp(b));
    let n = sorted.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &v) in sorted.iter().enumerate() {
        let cdf = ((v - lo) / (hi - lo)).clamp(0.0, 1.0);
        d = d.max((i as f64 + 1.0) / n - cdf).max(cdf - i as f64 / n);
    }
    d
}

/// Asymptotic two-sided critical value at the 1% level: `D_crit = c / sqrt(n)`.
pub fn ks_critical_1pct(n: usize) -> f64 {
    1.62762 / (n as f64).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_grid_has_small_statistic() {
        let n = 1000;
        let sample: Vec<f64> = (0..n).map(|i| (i as f64 + 0.5) / n as f64).collect();
        assert!(ks_statistic_uniform(&sample, 0.0, 1.0) < 0.001);
    }

    #[test]
    fn shifted_sample_is_detected() {
        let n = 1000;
        let sample: Vec<f64> = (0..n).map(|i| 0.5 + 0.5 * (i as f64 + 0.5) / n as f64).collect();
        assert!(ks_statistic_uniform(&sample, 0.0, 1.0) > ks_critical_1pct(n));
    }
}
