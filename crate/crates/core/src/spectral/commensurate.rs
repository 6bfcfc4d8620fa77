//! Detection of a common real unit `chi` with `value_k = chi * z_k`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::SpectralError;

pub const DEFAULT_MAX_DENOMINATOR: i64 = 1_000_000;
pub const DEFAULT_RESIDUAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommensurabilityResult {
    pub commensurable: bool,
    /// Largest unit dividing every value; `0.0` when not commensurable.
    pub chi: f64,
    /// Coprime multipliers `z_k`; empty when not commensurable.
    pub integers: Vec<i64>,
    pub max_denominator: i64,
    /// `max_k |value_k - chi * z_k|`; infinite when no rationalisation exists.
    pub residual: f64,
}

/// Best rational approximation `p/q` of `x` that is "integral at scale q":
/// the first continued-fraction convergent with `|q x - p| <= tol`.
fn rationalize(x: f64, max_denominator: i64, tol: f64) -> Option<(i64, i64)> {
    let (mut h_prev, mut h) = (1i64, x.floor() as i64);
    let (mut k_prev, mut k) = (0i64, 1i64);
    let mut frac = x - x.floor();
    loop {
        if (k as f64 * x - h as f64).abs() <= tol {
            return Some((h, k));
        }
        if frac <= f64::EPSILON {
            return None;
        }
        let inv = 1.0 / frac;
        let a = inv.floor();
        frac = inv - a;
        if a > (max_denominator as f64) {
            return None;
        }
        let a = a as i64;
        let next_k = a.checked_mul(k)?.checked_add(k_prev)?;
        if next_k > max_denominator {
            return None;
        }
        let next_h = a.checked_mul(h)?.checked_add(h_prev)?;
        (h_prev, h) = (h, next_h);
        (k_prev, k) = (k, next_k);
    }
}

/// Finds `chi` and coprime integers `z_k` with `values[k] ~= chi * z_k`.
///
/// Each ratio `values[k] / values[0]` is rationalised by continued
/// fractions, accepting the first convergent `p/q` (with `q <=
/// max_denominator`) for which `|q * ratio - p| <= residual_tol`, i.e. the
/// value is an integer multiple of the candidate unit to within the
/// tolerance measured in units of that unit. `chi` is then the least-squares
/// fit over the common integer vector, and the verdict additionally requires
/// `|values[k] - chi * z_k| <= residual_tol` for every `k`.
pub fn real_gcd(
    values: &[f64],
    max_denominator: i64,
    residual_tol: f64,
) -> Result<CommensurabilityResult, SpectralError> {
    if values.is_empty() {
        return Err(SpectralError::EmptyInput);
    }
    if let Some((index, &value)) = values
        .iter()
        .enumerate()
        .find(|(_, &v)| !(v > residual_tol) || !v.is_finite())
    {
        return Err(SpectralError::DegenerateInput { index, value });
    }
    let fail = CommensurabilityResult {
        commensurable: false,
        chi: 0.0,
        integers: Vec::new(),
        max_denominator,
        residual: f64::INFINITY,
    };
    let reference = values[0];
    let mut fractions = Vec::with_capacity(values.len());
    for &v in values {
        match rationalize(v / reference, max_denominator, residual_tol) {
            Some(pq) => fractions.push(pq),
            None => return Ok(fail),
        }
    }
    let mut lcm = 1i64;
    for &(_, q) in &fractions {
        lcm = lcm.lcm(&q);
        if lcm > max_denominator {
            return Ok(fail);
        }
    }
    let mut integers: Vec<i64> = fractions.iter().map(|&(p, q)| p * (lcm / q)).collect();
    let g = integers.iter().fold(0i64, |acc, z| acc.gcd(z));
    for z in &mut integers {
        *z /= g;
    }
    let (num, den) = values
        .iter()
        .zip(&integers)
        .fold((0.0, 0.0), |(n, d), (&v, &z)| (n + v * z as f64, d + (z * z) as f64));
    let chi = num / den;
    let residual = values
        .iter()
        .zip(&integers)
        .map(|(&v, &z)| (v - chi * z as f64).abs())
        .fold(0.0, f64::max);
    if residual > residual_tol {
        return Ok(CommensurabilityResult { residual, ..fail });
    }
    Ok(CommensurabilityResult {
        commensurable: true,
        chi,
        integers,
        max_denominator,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, SQRT_2};

    fn gcd(values: &[f64]) -> CommensurabilityResult {
        real_gcd(values, DEFAULT_MAX_DENOMINATOR, DEFAULT_RESIDUAL_TOL).unwrap()
    }

    #[test]
    fn exact_multiples() {
        let r = gcd(&[SQRT_2, 2.0 * SQRT_2]);
        assert!(r.commensurable);
        assert!((r.chi - SQRT_2).abs() < 1e-15);
        assert_eq!(r.integers, vec![1, 2]);

        let r = gcd(&[1.0, 1.5]);
        assert!(r.commensurable);
        assert!((r.chi - 0.5).abs() < 1e-15);
        assert_eq!(r.integers, vec![2, 3]);

        let r = gcd(&[6.0, 4.0, 10.0]);
        assert_eq!(r.integers, vec![3, 2, 5]);
        assert!((r.chi - 2.0).abs() < 1e-15);
    }

    #[test]
    fn pi_is_not_commensurable_with_one() {
        // 103993/33102 lies within 6e-10 of pi but 33102 * pi misses an
        // integer by ~2e-5.
        let r = gcd(&[1.0, PI]);
        assert!(!r.commensurable);
        let r = gcd(&[1.0, 5f64.sqrt()]);
        assert!(!r.commensurable);
    }

    #[test]
    fn tolerates_eigenvalue_noise() {
        let r = gcd(&[2.0 + 3e-15, 4.0 - 2e-15, 6.0 + 1e-14]);
        assert!(r.commensurable);
        assert_eq!(r.integers, vec![1, 2, 3]);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(matches!(
            real_gcd(&[1.0, 0.0], DEFAULT_MAX_DENOMINATOR, DEFAULT_RESIDUAL_TOL),
            Err(SpectralError::DegenerateInput { index: 1, .. })
        ));
        assert!(matches!(
            real_gcd(&[], DEFAULT_MAX_DENOMINATOR, DEFAULT_RESIDUAL_TOL),
            Err(SpectralError::EmptyInput)
        ));
    }

    #[test]
    fn denominator_bound() {
        let r = real_gcd(&[1.0, 1.0 / 7.0], 5, DEFAULT_RESIDUAL_TOL).unwrap();
        assert!(!r.commensurable);
        let r = real_gcd(&[1.0, 1.0 / 7.0], 7, DEFAULT_RESIDUAL_TOL).unwrap();
        assert_eq!(r.integers, vec![7, 1]);
    }
}
