//! Truncated products: geometric factors, residue-class products and
//! q-Pochhammer symbols.
//!
//! A factor `1 ± q^e` or `1/(1 - q^e)` with `e > N` is `1 + O(q^{N+1})`,
//! so every infinite product below simply stops at the first such factor.

use crate::series::{BiSeries, Series};

/// `1/(1 - q^e) = Σ_t q^{te}`.
pub fn geometric_inverse(e: usize, order: usize) -> Series {
    assert!(e >= 1, "geometric_inverse needs a positive exponent");
    let mut s = Series::one(order);
    s.div_one_minus(e);
    s
}

/// `Π_{j ≥ 1, j mod modulus ∈ allowed} 1/(1 - q^j)`.
pub fn residue_product(modulus: u64, allowed: &[u64], order: usize) -> Series {
    residue_product_with_numerators(modulus, allowed, &[], order)
}

/// [`residue_product`] times `Π (1 - q^e)` over the given numerator
/// exponents.
pub fn residue_product_with_numerators(
    modulus: u64,
    allowed: &[u64],
    numerators: &[usize],
    order: usize,
) -> Series {
    assert!(modulus >= 1);
    let mut s = Series::one(order);
    for j in 1..=order {
        if allowed.contains(&(j as u64 % modulus)) {
            s.div_one_minus(j);
        }
    }
    for &e in numerators {
        assert!(e >= 1, "numerator factor 1 - q^0 vanishes");
        s.mul_binomial(-1, e);
    }
    s
}

/// Residues in `0..modulus` other than `0` and `±i`.
pub fn allowed_residues(modulus: u64, i: u64) -> Vec<u64> {
    (0..modulus)
        .filter(|&r| r != 0 && r != i % modulus && r != (modulus - i % modulus) % modulus)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Length {
    Finite(usize),
    Infinite,
}

/// `Π_{h=0}^{len-1} (1 + sign·q^{start + h·step})`. With `sign = -1` this is
/// `(q^start; q^step)_len`, with `sign = +1` it is `(-q^start; q^step)_len`.
pub fn pochhammer(sign: i128, start: usize, step: usize, len: Length, order: usize) -> Series {
    assert!(sign == 1 || sign == -1, "sign must be ±1");
    assert!(step >= 1, "step must be positive");
    let mut s = Series::one(order);
    let count = match len {
        Length::Finite(j) => j,
        Length::Infinite => usize::MAX,
    };
    for h in 0..count {
        let e = start + h * step;
        if e == 0 {
            s = s.scale(1 + sign);
            continue;
        }
        if e > order {
            break;
        }
        s.mul_binomial(sign, e);
    }
    s
}

/// `1/(q^step; q^step)_count`.
pub fn inverse_q_factorial(step: usize, count: usize, order: usize) -> Series {
    let mut s = Series::one(order);
    for h in 1..=count {
        if h * step > order {
            break;
        }
        s.div_one_minus(h * step);
    }
    s
}

/// `(-a q^start; q)_∞` as a series in `a` and `q`.
pub fn shifted_a_pochhammer(start: usize, order: usize) -> BiSeries {
    assert!(start >= 1);
    let mut s = BiSeries::one(order);
    for e in start..=order {
        s.mul_one_plus_aq(e);
    }
    s
}
