//! Exact characteristic polynomials of integer matrices.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::hamiltonian::IntegerHamiltonian;

/// Coefficients of `det(lambda I - H)` in ascending order (`c[n] == 1`).
///
/// Faddeev-LeVerrier recurrence over big integers:
/// `M_0 = 0`, `M_k = H M_{k-1} + c_{n-k+1} I`, `c_{n-k} = -tr(H M_k) / k`.
/// Every division is exact because the coefficients of an integer matrix's
/// characteristic polynomial are integers.
pub fn integer_char_poly(h: &IntegerHamiltonian) -> Vec<BigInt> {
    let n = h.n();
    let a: Vec<Vec<BigInt>> = h
        .rows()
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    let mut m: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = H M_{k-1} + c_{n-k+1} I
        let mut next = mat_mul(&a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let am = mat_mul(&a, &m);
        let trace: BigInt = (0..n).map(|i| &am[i][i]).sum();
        let k_big = BigInt::from(k);
        debug_assert!((&trace % &k_big).is_zero(), "Faddeev-LeVerrier division must be exact");
        coeffs[n - k] = -(trace / k_big);
    }
    coeffs
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += aik * &b[k][j];
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralSpectrum {
    pub integral: bool,
    /// Integer roots with multiplicity, ascending. Complete only when
    /// `integral` is true.
    pub roots: Vec<i64>,
    pub char_poly: Vec<BigInt>,
}

impl IntegralSpectrum {
    /// Number of distinct roots found.
    pub fn distinct_roots(&self) -> usize {
        let mut r = self.roots.clone();
        r.dedup();
        r.len()
    }
}

/// Decides whether the characteristic polynomial splits into integer linear
/// factors, by repeated synthetic division.
///
/// Candidate roots are the divisors of the trailing nonzero coefficient (plus
/// zero) within the Gershgorin radius of `h`, which bounds every eigenvalue.
pub fn is_integral_spectrum(h: &IntegerHamiltonian) -> IntegralSpectrum {
    let char_poly = integer_char_poly(h);
    let mut poly = char_poly.clone();
    let mut roots = Vec::new();
    while poly.len() > 1 && poly[0].is_zero() {
        poly.remove(0);
        roots.push(0);
    }
    let radius = h.gershgorin_radius();
    if poly.len() > 1 {
        let trailing = poly[0].abs();
        let candidates = (1..=radius)
            .filter(|&r| (&trailing % BigInt::from(r)).is_zero())
            .flat_map(|r| [-r, r]);
        for r in candidates {
            while poly.len() > 1 {
                match divide_by_root(&poly, r) {
                    Some(q) => {
                        poly = q;
                        roots.push(r);
                    }
                    None => break,
                }
            }
        }
    }
    roots.sort_unstable();
    IntegralSpectrum {
        integral: poly.len() == 1,
        roots,
        char_poly,
    }
}

/// Quotient of `poly / (x - r)` when `r` is a root.
fn divide_by_root(poly: &[BigInt], r: i64) -> Option<Vec<BigInt>> {
    let r = BigInt::from(r);
    let deg = poly.len() - 1;
    let mut quotient = vec![BigInt::zero(); deg];
    let mut carry = BigInt::zero();
    for i in (1..=deg).rev() {
        carry = &poly[i] + &carry * &r;
        quotient[i - 1] = carry.clone();
    }
    let remainder = &poly[0] + &carry * &r;
    remainder.is_zero().then_some(quotient)
}

/// Renders ascending coefficients as e.g. `λ³ − 2λ`.
pub fn format_char_poly(coeffs: &[BigInt]) -> String {
    const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let power = |k: usize| -> String {
        match k {
            0 => String::new(),
            1 => "λ".into(),
            _ => format!("λ{}", k.to_string().chars().map(|d| SUP[d as usize - '0' as usize]).collect::<String>()),
        }
    };
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let body = match (k, mag.to_i64()) {
            (0, _) => mag.to_string(),
            (_, Some(1)) => power(k),
            _ => format!("{mag}{}", power(k)),
        };
        if out.is_empty() {
            if c.is_negative() {
                out.push('−');
            }
        } else {
            out.push_str(if c.is_negative() { " − " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
