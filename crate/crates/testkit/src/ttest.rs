//! Quadrature oracle for Student-t tail probabilities.
//!
//! With the substitution `t = sqrt(df) tan(theta)` the two-sided p-value
//! becomes a ratio of integrals of `cos(theta)^(df-1)` over finite
//! intervals, so no normalizing constant and no gamma function is needed:
//!
//! `p = int_{theta0}^{pi/2} cos^{df-1} / int_{0}^{pi/2} cos^{df-1}`,
//! `theta0 = atan(|t| / sqrt(df))`.

use crate::quadrature::integrate;
use std::f64::consts::FRAC_PI_2;

/// Two-sided p-value of a t statistic with `df` degrees of freedom.
pub fn two_sided_p_quadrature(t: f64, df: usize) -> f64 {
    assert!(df >= 1);
    let nu = df as f64;
    let theta0 = (t.abs() / nu.sqrt()).atan();
    let integrand = |theta: f64| theta.cos().powf(nu - 1.0);
    let tail = integrate(integrand, theta0, FRAC_PI_2, 1e-12);
    let total = integrate(integrand, 0.0, FRAC_PI_2, 1e-12);
    (tail / total).clamp(0.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn df2_closed_form() {
        // For df = 2 the two-sided p has the closed form 1 - t/sqrt(2 + t^2).
        for &t in &[0.0, 0.5, 1.0, 2.0, 3.4641016151377544, 8.0] {
            let exact = 1.0 - t / (2.0 + t * t).sqrt();
            assert!((two_sided_p_quadrature(t, 2) - exact).abs() < 1e-9);
        }
    }

    #[test]
    fn df1_is_cauchy() {
        // df = 1 is the Cauchy distribution: p = 1 - (2/pi) atan(|t|).
        for &t in &[0.0, 1.0, 5.0] {
            let exact = 1.0 - 2.0 / std::f64::consts::PI * t.atan();
            assert!((two_sided_p_quadrature(t, 1) - exact).abs() < 1e-9);
        }
    }
}
