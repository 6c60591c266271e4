//! Exhaustive-history LZ76 reference parser, quadratic on purpose.

/// Production complexity of a binary sequence by the literal exhaustive
/// history rule: starting after the parsed prefix `s[..h]`, grow the
/// extension while it can be copied from some start position `p < h`
/// (the copy may run past `h`, i.e. self-overlap is allowed), then close
/// the component one symbol later. The final component counts even when
/// it is exactly reproducible.
pub fn lz76_exhaustive(bits: &[u8]) -> usize {
    assert!(!bits.is_empty(), "LZ76 is defined on non-empty sequences");
    assert!(bits.iter().all(|&b| b <= 1), "alphabet must be {{0,1}}");
    let n = bits.len();
    let mut h = 0;
    let mut components = 0;
    while h < n {
        let mut longest = 0;
        for p in 0..h {
            let mut l = 0;
            while h + l < n && bits[p + l] == bits[h + l] {
                l += 1;
            }
            longest = longest.max(l);
        }
        components += 1;
        h += longest + 1;
    }
    components
}

/// Mean-threshold binarization: 1 where the sample is strictly greater than
/// the arithmetic mean, 0 otherwise.
pub fn binarize_mean(x: &[f64]) -> Vec<u8> {
    let mean = x.iter().sum::<f64>() / x.len() as f64;
    x.iter().map(|&v| u8::from(v > mean)).collect()
}

/// The oracle feature pipeline: LZ76 of the mean-binarized series.
pub fn lz76_of_series(x: &[f64]) -> f64 {
    lz76_exhaustive(&binarize_mean(x)) as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_examples() {
        assert_eq!(lz76_exhaustive(&[0]), 1);
        assert_eq!(lz76_exhaustive(&[0; 10]), 2);
        // 0|001|10|100|1000|101 — the standard worked parse.
        let s = [0, 0, 0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 1];
        assert_eq!(lz76_exhaustive(&s), 6);
    }
}
