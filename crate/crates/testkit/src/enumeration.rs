//! Exact expectations of the surrogate ensemble means on small datasets,
//! obtained by enumerating every donor/coin assignment. All surrogates are
//! synthesized through the direct-summation DFT oracle.

use crate::dft;

type Feature<'a> = &'a dyn Fn(&[f64]) -> f64;

fn mean(values: impl Iterator<Item = f64>, count: usize) -> f64 {
    values.sum::<f64>() / count as f64
}

/// Exact `E{nu^i | data}`: average of the feature over all (segment, donor)
/// pairs with both indices ranging over the dataset (self-donation included).
pub fn nu_within_exact(x: &[Vec<f64>], f: Feature) -> f64 {
    let n = x.len();
    mean(
        x.iter()
            .flat_map(|xj| x.iter().map(move |xa| f(&dft::recombine_series(xj, xa)))),
        n * n,
    )
}

/// Exact `E{nu^phi(x|y) | data}`: the donor condition is a fair coin, then
/// uniform within the chosen condition.
pub fn nu_across_exact(x: &[Vec<f64>], y: &[Vec<f64>], f: Feature) -> f64 {
    let per_segment = |xj: &Vec<f64>| {
        let own = mean(
            x.iter().map(|xa| f(&dft::recombine_series(xj, xa))),
            x.len(),
        );
        let other = mean(
            y.iter().map(|yb| f(&dft::recombine_series(xj, yb))),
            y.len(),
        );
        0.5 * own + 0.5 * other
    };
    mean(x.iter().map(per_segment), x.len())
}

/// Exact `E{nu^A'(x|y) | data}`: amplitude donor drawn by the pooled coin
/// rule, phases kept from the segment itself.
pub fn nu_mixture_exact(x: &[Vec<f64>], y: &[Vec<f64>], f: Feature) -> f64 {
    let per_segment = |xj: &Vec<f64>| {
        let own = mean(
            x.iter().map(|xg| f(&dft::recombine_series(xg, xj))),
            x.len(),
        );
        let other = mean(
            y.iter().map(|yb| f(&dft::recombine_series(yb, xj))),
            y.len(),
        );
        0.5 * own + 0.5 * other
    };
    mean(x.iter().map(per_segment), x.len())
}

/// Exact alternative-ordering spectral component
/// `Delta^A' = [nu^i(x) - nu^A'(x|y)] - [nu^i(y) - nu^A'(y|x)]`.
pub fn delta_a_prime_exact(x: &[Vec<f64>], y: &[Vec<f64>], f: Feature) -> f64 {
    (nu_within_exact(x, f) - nu_mixture_exact(x, y, f))
        - (nu_within_exact(y, f) - nu_mixture_exact(y, x, f))
}

/// Exact main-ordering spectral component
/// `Delta^A = E{nu^phi(x|y)} - E{nu^phi(y|x)}`.
pub fn delta_a_exact(x: &[Vec<f64>], y: &[Vec<f64>], f: Feature) -> f64 {
    nu_across_exact(x, y, f) - nu_across_exact(y, x, f)
}
