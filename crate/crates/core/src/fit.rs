//! Least-squares leading coefficient of a sampled sequence.

use crate::num::powi;

/// Fits `a k^q + b k^(q-1)` to `(k, value)` samples and returns `a`.
/// For `q = 0` the model is a constant and the mean is returned.
pub fn leading_coefficient(samples: &[(f64, f64)], q: u32) -> f64 {
    if samples.is_empty() {
        return f64::NAN;
    }
    if q == 0 {
        return samples.iter().map(|s| s.1).sum::<f64>() / samples.len() as f64;
    }
    let kmax = samples.iter().map(|s| s.0).fold(0.0_f64, f64::max);
    // rescale k to [0, 1] to keep the normal equations well conditioned
    let (mut s11, mut s12, mut s22, mut t1, mut t2) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for &(k, v) in samples {
        let u = k / kmax;
        let x1 = powi(u, q);
        let x2 = powi(u, q - 1);
        s11 += x1 * x1;
        s12 += x1 * x2;
        s22 += x2 * x2;
        t1 += x1 * v;
        t2 += x2 * v;
    }
    let det = s11 * s22 - s12 * s12;
    let a = if det.abs() < 1e-300 {
        t1 / s11
    } else {
        (t1 * s22 - t2 * s12) / det
    };
    a / powi(kmax, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_exact_models() {
        let s: alloc::vec::Vec<(f64, f64)> =
            (50..=100).map(|k| (k as f64, 3.0 * (k * k) as f64 + 2.0 * k as f64)).collect();
        assert!((leading_coefficient(&s, 2) - 3.0).abs() < 1e-9);
        let c: alloc::vec::Vec<(f64, f64)> = (1..=10).map(|k| (k as f64, 7.0)).collect();
        assert_eq!(leading_coefficient(&c, 0), 7.0);
    }

    #[test]
    fn lower_order_terms_fade() {
        let s: alloc::vec::Vec<(f64, f64)> = (250..=500)
            .map(|k| (k as f64, (k as f64 + 1.0) * (k as f64 + 1.0)))
            .collect();
        assert!((leading_coefficient(&s, 2) - 1.0).abs() < 1e-4);
    }
}
