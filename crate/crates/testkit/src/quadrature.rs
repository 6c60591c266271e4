//! Adaptive Simpson quadrature.

fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(f, a, m, fa, flm, fm);
    let right = simpson(f, m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        adapt(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
            + adapt(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
    }
}

/// Integrate `f` over `[a, b]` to absolute tolerance `tol`.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(&f, a, b, fa, fm, fb);
    adapt(&f, a, b, fa, fm, fb, whole, tol, 60)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_and_trig() {
        let i = integrate(|x| x * x, 0.0, 3.0, 1e-12);
        assert!((i - 9.0).abs() < 1e-10);
        let i = integrate(f64::sin, 0.0, std::f64::consts::PI, 1e-12);
        assert!((i - 2.0).abs() < 1e-10);
    }
}
