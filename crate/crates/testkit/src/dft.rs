//! Direct-summation DFT oracle, O(T^2) on purpose.

use std::f64::consts::TAU;

/// Complex spectrum from the naive forward DFT sum,
/// `X[k] = sum_t x[t] * exp(-i 2 pi k t / T)` (unnormalized).
pub struct Spectrum {
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.re.len()
    }

    pub fn is_empty(&self) -> bool {
        self.re.is_empty()
    }

    pub fn amplitudes(&self) -> Vec<f64> {
        self.re
            .iter()
            .zip(&self.im)
            .map(|(re, im)| re.hypot(*im))
            .collect()
    }

    /// Phases in [0, 2 pi); bins with exactly zero modulus report phase 0.
    pub fn phases(&self) -> Vec<f64> {
        self.re
            .iter()
            .zip(&self.im)
            .map(|(re, im)| {
                if re.hypot(*im) == 0.0 {
                    0.0
                } else {
                    let p = im.atan2(*re).rem_euclid(TAU);
                    if p >= TAU {
                        0.0
                    } else {
                        p
                    }
                }
            })
            .collect()
    }
}

pub fn forward(x: &[f64]) -> Spectrum {
    let t = x.len();
    let mut re = vec![0.0; t];
    let mut im = vec![0.0; t];
    for k in 0..t {
        let mut sr = 0.0;
        let mut si = 0.0;
        for (n, &xn) in x.iter().enumerate() {
            let ang = -TAU * (k as f64) * (n as f64) / (t as f64);
            sr += xn * ang.cos();
            si += xn * ang.sin();
        }
        re[k] = sr;
        im[k] = si;
    }
    Spectrum { re, im }
}

/// Inverse DFT of an amplitude/phase pair by direct summation, with the 1/T
/// factor. Returns the real part and the largest imaginary residue seen.
pub fn inverse_from_polar(amp: &[f64], phase: &[f64]) -> (Vec<f64>, f64) {
    assert_eq!(amp.len(), phase.len());
    let t = amp.len();
    let mut out = vec![0.0; t];
    let mut max_imag: f64 = 0.0;
    for (n, o) in out.iter_mut().enumerate() {
        let mut sr = 0.0;
        let mut si = 0.0;
        for k in 0..t {
            let ang = phase[k] + TAU * (k as f64) * (n as f64) / (t as f64);
            sr += amp[k] * ang.cos();
            si += amp[k] * ang.sin();
        }
        *o = sr / t as f64;
        max_imag = max_imag.max((si / t as f64).abs());
    }
    (out, max_imag)
}

/// Full oracle path for a surrogate: amplitudes of `amp_source`'s spectrum
/// combined with phases of `phase_source`'s spectrum, synthesized by direct
/// summation.
pub fn recombine_series(amp_source: &[f64], phase_source: &[f64]) -> Vec<f64> {
    let amps = forward(amp_source).amplitudes();
    let phases = forward(phase_source).phases();
    inverse_from_polar(&amps, &phases).0
}

/// Circular autocorrelation by direct time-domain summation:
/// `r[tau] = sum_t x[t] x[(t+tau) mod T]`.
pub fn circular_autocorrelation(x: &[f64]) -> Vec<f64> {
    let t = x.len();
    (0..t)
        .map(|tau| (0..t).map(|n| x[n] * x[(n + tau) % t]).sum())
        .collect()
}
