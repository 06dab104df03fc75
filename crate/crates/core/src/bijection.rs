//! The map `f` from Gordon-type partitions to Rogers-Selberg-type partitions,
//! its inverse, and the conjugated map `f̄ = h ∘ f ∘ g`.
//!
//! Domains: `f` is a bijection `G(3,2) → A2` that restricts to
//! `G(3,1) → A1` and sends `Bressoud(3,1)` onto `T`. `f̄` is a bijection
//! `G(3,3) → A3`.

use crate::classes::ClassSpec;
use crate::error::Result;
use crate::partition::Partition;

fn g1() -> ClassSpec {
    ClassSpec::Gordon { k: 3, i: 1 }
}

fn g2() -> ClassSpec {
    ClassSpec::Gordon { k: 3, i: 2 }
}

fn g3() -> ClassSpec {
    ClassSpec::Gordon { k: 3, i: 3 }
}

/// `f` on `G(3,2)`.
pub fn f_forward(p: &Partition) -> Result<Partition> {
    g2().require(p)?;
    f_closed_form(p)
}

/// The defining formula of `f`, applied to any partition whose parts occur
/// at most twice:
///
/// `f(π) = ⋃_{i=1}^{D} <(2i)^{R_i − R_{i+1} − ℓ(π⁽ⁱ⁾)}> ∪ ⋃_{i=0}^{D} (π⁽ⁱ⁾ + <(2i)^{ℓ(π⁽ⁱ⁾)}>)`
///
/// Outside `G(3,2)` this is no longer injective: `{3,1,1}` and `{3,2}` both
/// map to `{3,2}`.
pub fn f_closed_form(p: &Partition) -> Result<Partition> {
    let dec = p.decompose()?;
    let depth = dec.depth();
    let mut parts = Vec::with_capacity(p.len() + dec.repeated(1) as usize);
    for i in 1..=depth {
        // the tail lies strictly between R_{i+1} and R_i, so this is >= 1
        let count = dec.repeated(i) - dec.repeated(i + 1) - dec.tail(i).len() as u64;
        parts.extend(std::iter::repeat_n(2 * i as u64, count as usize));
    }
    for i in 0..=depth {
        parts.extend(dec.tail(i).parts().iter().map(|&x| x + 2 * i as u64));
    }
    Ok(Partition::from_parts(parts))
}

/// The recursive formulation `f(π) = P(π) ∪ [<2^{R₁}> + f(S(π))]`,
/// `f(∅) = ∅`.
pub fn f_recursive(p: &Partition) -> Partition {
    if p.is_empty() {
        return Partition::empty();
    }
    let r1 = p.largest_repeated();
    if r1 == 0 {
        return p.clone();
    }
    let (prefix, suffix) = p.prefix_suffix();
    let twos = Partition::repeated(2, r1 as usize);
    prefix.union(&twos.sum(&f_recursive(&suffix)))
}

/// `f⁻¹` on `A2`.
///
/// Reads the S-diagram back row by row. With `D = R₁(λ)/2` rows of twos,
/// `E_i = ℓ(P(λ)) + Σ_{s≥i} m_{2s}(λ)` is the column just past the twos of
/// row `i`. Row `i`'s distinct parts end at the first column `c` (scanning
/// from the largest part) where `λ_c − 2(i−1) ≤ E_i − c`; then
/// `R_i = E_i − c`.
pub fn f_inverse(lambda: &Partition) -> Result<Partition> {
    ClassSpec::A2.require(lambda)?;
    Ok(peel(lambda))
}

fn peel(lambda: &Partition) -> Partition {
    let depth = (lambda.largest_repeated() / 2) as usize;
    let parts = lambda.parts();
    let prefix_len = parts.iter().take_while(|&&x| x > 2 * depth as u64).count();

    let mut out: Vec<u64> = Vec::with_capacity(lambda.len());
    let mut start = 0usize;
    for i in 1..=depth {
        let lowered = 2 * (i as u64 - 1);
        let twos_end = prefix_len
            + (i..=depth)
                .map(|s| lambda.multiplicity(2 * s as u64))
                .sum::<usize>();
        let stop = (start..prefix_len)
            .find(|&c| parts[c] - lowered <= (twos_end - c) as u64)
            .unwrap_or(prefix_len);
        out.extend(parts[start..stop].iter().map(|&x| x - lowered));
        let repeated = (twos_end - stop) as u64;
        out.push(repeated);
        out.push(repeated);
        start = stop;
    }
    out.extend(parts[start..prefix_len].iter().map(|&x| x - 2 * depth as u64));
    Partition::from_parts(out)
}

/// `g`: add 1 to every part, `G(3,3) → G(3,1)`.
pub fn g_shift(p: &Partition) -> Result<Partition> {
    g3().require(p)?;
    Ok(p.shift_up(1))
}

/// `g⁻¹`: subtract 1 from every part, `G(3,1) → G(3,3)`.
pub fn g_inverse(p: &Partition) -> Result<Partition> {
    g1().require(p)?;
    Ok(Partition::from_parts(p.parts().iter().map(|&x| x - 1)))
}

/// `h`: `A1 → A3`. Subtracts 1 from every part above `R₁(λ)` and from two
/// copies of each of `2, 4, …, R₁(λ)`.
pub fn h_map(lambda: &Partition) -> Result<Partition> {
    ClassSpec::A1.require(lambda)?;
    let r1 = lambda.largest_repeated();
    let mut out = Vec::with_capacity(lambda.len());
    for (value, count) in lambda.runs() {
        if value > r1 {
            out.extend(std::iter::repeat_n(value - 1, count));
        } else if value % 2 == 0 {
            // membership guarantees count >= 2 here
            out.extend([value - 1, value - 1]);
            out.extend(std::iter::repeat_n(value, count - 2));
        } else {
            out.extend(std::iter::repeat_n(value, count));
        }
    }
    Ok(Partition::from_parts(out))
}

/// `h⁻¹`: `A3 → A1`. With `2j − 1` the largest repeated odd part, adds 1 to
/// both copies of each odd part below `2j` and to every part above `2j`.
pub fn h_inverse(mu: &Partition) -> Result<Partition> {
    ClassSpec::A3.require(mu)?;
    let largest_odd_repeat = mu
        .runs()
        .find(|&(v, m)| v % 2 == 1 && m >= 2)
        .map_or(0, |(v, _)| v);
    let bound = if largest_odd_repeat == 0 { 0 } else { largest_odd_repeat + 1 };
    Ok(Partition::from_parts(mu.parts().iter().map(|&x| {
        if x > bound || x % 2 == 1 {
            x + 1
        } else {
            x
        }
    })))
}

/// `f̄ = h ∘ f ∘ g` on `G(3,3)`.
pub fn fbar(p: &Partition) -> Result<Partition> {
    h_map(&f_forward(&g_shift(p)?)?)
}

/// `f̄⁻¹ = g⁻¹ ∘ f⁻¹ ∘ h⁻¹` on `A3`.
pub fn fbar_inverse(mu: &Partition) -> Result<Partition> {
    g_inverse(&f_inverse(&h_inverse(mu)?)?)
}
