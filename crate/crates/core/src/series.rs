//! Truncated formal power series with exact integer coefficients.
//!
//! [`Series`] holds `c₀ + c₁q + … + c_N q^N + O(q^{N+1})`; [`BiSeries`] holds
//! the analogous object in two variables `a` and `q`, truncated in `q` only
//! (a-degrees are kept up to `N`, which suffices for every family built here
//! because each power of `a` arrives with at least one power of `q`).
//!
//! Coefficients are `i128` and every operation uses checked arithmetic, so
//! an overflow panics instead of wrapping.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

#[inline]
fn add_c(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("series coefficient overflow")
}

#[inline]
fn sub_c(a: i128, b: i128) -> i128 {
    a.checked_sub(b).expect("series coefficient overflow")
}

#[inline]
fn mul_c(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("series coefficient overflow")
}

/// A power series in `q` known exactly up to and including `q^order`.
#[derive(Clone, Debug)]
pub struct Series {
    coeffs: Vec<i128>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![0; order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `c·q^e`, which is just `O(q^{order+1})` when `e > order`.
    pub fn monomial(c: i128, e: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if e <= order {
            s.coeffs[e] = c;
        }
        s
    }

    /// The order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<i128>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    /// Coefficient of `q^e`; panics beyond the truncation.
    pub fn coeff(&self, e: usize) -> i128 {
        assert!(e <= self.order(), "q^{e} is beyond the truncation order {}", self.order());
        self.coeffs[e]
    }

    pub fn truncate(&self, order: usize) -> Series {
        let order = order.min(self.order());
        Series::from_coeffs(self.coeffs[..=order].to_vec())
    }

    pub fn scale(&self, c: i128) -> Series {
        Series::from_coeffs(self.coeffs.iter().map(|&x| mul_c(x, c)).collect())
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: usize) -> Series {
        let mut out = Series::zero(self.order());
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i + e > self.order() {
                break;
            }
            out.coeffs[i + e] = c;
        }
        out
    }

    /// In place `*= (1 + sign·q^e)` for `e >= 1`.
    pub fn mul_binomial(&mut self, sign: i128, e: usize) {
        assert!(e >= 1);
        let n = self.order();
        if e > n {
            return;
        }
        for i in (e..=n).rev() {
            let delta = mul_c(sign, self.coeffs[i - e]);
            self.coeffs[i] = add_c(self.coeffs[i], delta);
        }
    }

    /// In place `*= 1/(1 - q^e)` for `e >= 1`.
    pub fn div_one_minus(&mut self, e: usize) {
        assert!(e >= 1);
        let n = self.order();
        for i in e..=n {
            self.coeffs[i] = add_c(self.coeffs[i], self.coeffs[i - e]);
        }
    }

    /// First exponent at which the two series differ, within the common
    /// truncation, with both coefficients.
    pub fn first_mismatch(&self, other: &Series) -> Option<(usize, i128, i128)> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(e, (&a, &b))| (e, a, b))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }
}

/// Coefficientwise equality over the common truncation
/// `0..=min(order₁, order₂)`. Not transitive across differing orders, so
/// there is deliberately no `Eq` impl.
impl PartialEq for Series {
    fn eq(&self, other: &Series) -> bool {
        self.first_mismatch(other).is_none()
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series::from_coeffs((0..=order).map(|e| add_c(self.coeffs[e], rhs.coeffs[e])).collect())
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series::from_coeffs((0..=order).map(|e| sub_c(self.coeffs[e], rhs.coeffs[e])).collect())
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        self.scale(-1)
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = vec![0i128; order + 1];
        for (i, &a) in self.coeffs[..=order].iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs[..=order - i].iter().enumerate() {
                out[i + j] = add_c(out[i + j], mul_c(a, b));
            }
        }
        Series::from_coeffs(out)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Series {
            type Output = Series;

            fn $method(self, rhs: Series) -> Series {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Series {
    type Output = Series;

    fn neg(self) -> Series {
        -&self
    }
}

/// `1 + q - 2 q^3 + O(q^5)`. The zero series prints as `O(q^{N+1})` alone.
impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let magnitude = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            match (e, magnitude) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => f.write_str("q")?,
                (1, m) => write!(f, "{m} q")?,
                (e, 1) => write!(f, "q^{e}")?,
                (e, m) => write!(f, "{m} q^{e}")?,
            }
        }
        if !first {
            f.write_str(" + ")?;
        }
        write!(f, "O(q^{})", self.order() + 1)
    }
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: String| Error::ParseSeries {
            input: s.to_string(),
            reason,
        };
        // tokenise into signed terms
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut negative = false;
        let mut current = String::new();
        let mut depth = 0usize;
        for ch in compact.chars() {
            match ch {
                '(' => {
                    depth += 1;
                    current.push(ch);
                }
                ')' => {
                    depth = depth.checked_sub(1).ok_or_else(|| fail("unbalanced `)`".into()))?;
                    current.push(ch);
                }
                '+' | '-' if depth == 0 => {
                    if !current.is_empty() {
                        terms.push((negative, std::mem::take(&mut current)));
                    } else if !terms.is_empty() || negative {
                        return Err(fail("dangling sign".into()));
                    }
                    negative = ch == '-';
                }
                _ => current.push(ch),
            }
        }
        if current.is_empty() {
            return Err(fail("missing final term".into()));
        }
        terms.push((negative, current));

        let (big_o_negative, big_o) = terms.pop().expect("at least one term");
        let order_plus_one = big_o
            .strip_prefix("O(q^")
            .and_then(|t| t.strip_suffix(')'))
            .or_else(|| (big_o == "O(q)").then_some("1"))
            .and_then(|t| t.parse::<usize>().ok())
            .filter(|&n| n >= 1 && !big_o_negative)
            .ok_or_else(|| fail("series must end with `O(q^N)`, N >= 1".into()))?;
        let mut out = Series::zero(order_plus_one - 1);
        for (negative, term) in terms {
            let (c, e) = parse_term(&term).ok_or_else(|| fail(format!("bad term `{term}`")))?;
            if e > out.order() {
                return Err(fail(format!("term `{term}` beyond the truncation")));
            }
            let c = if negative { -c } else { c };
            out.coeffs[e] = add_c(out.coeffs[e], c);
        }
        Ok(out)
    }
}

fn parse_term(term: &str) -> Option<(i128, usize)> {
    match term.find('q') {
        None => Some((term.parse().ok()?, 0)),
        Some(pos) => {
            let (c, var) = term.split_at(pos);
            let c = c.trim_end_matches('*');
            let c: i128 = if c.is_empty() { 1 } else { c.parse().ok()? };
            let e = match var {
                "q" => 1,
                _ => var.strip_prefix("q^")?.parse().ok()?,
            };
            Some((c, e))
        }
    }
}

/// A power series in `a` and `q`, exact for every monomial `a^d q^e` with
/// `e <= order` (and `d <= order`).
#[derive(Clone, Debug)]
pub struct BiSeries {
    order: usize,
    /// `coeffs[d][e]`
    coeffs: Vec<Vec<i128>>,
}

impl BiSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![vec![0; order + 1]; order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, 0, order)
    }

    pub fn monomial(c: i128, d: usize, e: usize, order: usize) -> Self {
        let mut out = Self::zero(order);
        if d <= order && e <= order {
            out.coeffs[d][e] = c;
        }
        out
    }

    /// `a^d · s(q)`, truncated at the order of `s`.
    pub fn from_series(s: &Series, d: usize) -> Self {
        let mut out = Self::zero(s.order());
        if d <= s.order() {
            out.coeffs[d].copy_from_slice(s.coeffs());
        }
        out
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `a^d q^e`.
    pub fn coeff(&self, d: usize, e: usize) -> i128 {
        assert!(d <= self.order && e <= self.order, "a^{d} q^{e} is outside the truncation");
        self.coeffs[d][e]
    }

    /// Nonzero monomials as `(d, e, c)`, by increasing `d` then `e`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, i128)> + '_ {
        self.coeffs.iter().enumerate().flat_map(|(d, row)| {
            row.iter().enumerate().filter(|(_, &c)| c != 0).map(move |(e, &c)| (d, e, c))
        })
    }

    pub fn truncate(&self, order: usize) -> BiSeries {
        let order = order.min(self.order);
        BiSeries {
            order,
            coeffs: self.coeffs[..=order].iter().map(|row| row[..=order].to_vec()).collect(),
        }
    }

    pub fn add(&self, rhs: &BiSeries) -> BiSeries {
        self.zip_with(rhs, add_c)
    }

    pub fn sub(&self, rhs: &BiSeries) -> BiSeries {
        self.zip_with(rhs, sub_c)
    }

    fn zip_with(&self, rhs: &BiSeries, op: fn(i128, i128) -> i128) -> BiSeries {
        let order = self.order.min(rhs.order);
        let mut out = BiSeries::zero(order);
        for d in 0..=order {
            for e in 0..=order {
                out.coeffs[d][e] = op(self.coeffs[d][e], rhs.coeffs[d][e]);
            }
        }
        out
    }

    pub fn mul(&self, rhs: &BiSeries) -> BiSeries {
        let order = self.order.min(rhs.order);
        let mut out = BiSeries::zero(order);
        for (d1, e1, c1) in self.truncate(order).terms() {
            for d2 in 0..=order - d1 {
                let row = &rhs.coeffs[d2];
                let target = &mut out.coeffs[d1 + d2];
                for e2 in 0..=order - e1 {
                    if row[e2] != 0 {
                        target[e1 + e2] = add_c(target[e1 + e2], mul_c(c1, row[e2]));
                    }
                }
            }
        }
        out
    }

    /// Multiplies by a series in `q` alone.
    pub fn mul_series(&self, s: &Series) -> BiSeries {
        let order = self.order.min(s.order());
        let mut out = BiSeries::zero(order);
        for d in 0..=order {
            let product = &Series::from_coeffs(self.coeffs[d][..=order].to_vec()) * s;
            out.coeffs[d].copy_from_slice(product.coeffs());
        }
        out
    }

    /// In place `*= (1 + a·q^e)` for `e >= 1`.
    pub fn mul_one_plus_aq(&mut self, e: usize) {
        assert!(e >= 1);
        let n = self.order;
        if e > n {
            return;
        }
        for d in (1..=n).rev() {
            for i in (e..=n).rev() {
                let below = self.coeffs[d - 1][i - e];
                if below != 0 {
                    self.coeffs[d][i] = add_c(self.coeffs[d][i], below);
                }
            }
        }
    }

    /// `X(a) ↦ X(aq)`: sends `a^d q^e` to `a^d q^{e+d}`. Exact at the same
    /// order because the substitution only raises q-exponents.
    pub fn substitute_aq(&self) -> BiSeries {
        let n = self.order;
        let mut out = BiSeries::zero(n);
        for d in 0..=n {
            for e in 0..=n.saturating_sub(d) {
                if d + e <= n {
                    out.coeffs[d][e + d] = self.coeffs[d][e];
                }
            }
        }
        out
    }

    /// Sets `a = 1`, summing over a-degree.
    pub fn specialize_a1(&self) -> Series {
        let mut out = Series::zero(self.order);
        for row in &self.coeffs {
            for (e, &c) in row.iter().enumerate() {
                out.coeffs[e] = add_c(out.coeffs[e], c);
            }
        }
        out
    }

    /// Sets `a = 0`.
    pub fn specialize_a0(&self) -> Series {
        Series::from_coeffs(self.coeffs[0].clone())
    }

    /// First `(d, e)` (by increasing `e`, then `d`) where the two differ.
    pub fn first_mismatch(&self, other: &BiSeries) -> Option<((usize, usize), i128, i128)> {
        let order = self.order.min(other.order);
        (0..=order)
            .flat_map(|e| (0..=order).map(move |d| (d, e)))
            .find(|&(d, e)| self.coeffs[d][e] != other.coeffs[d][e])
            .map(|(d, e)| ((d, e), self.coeffs[d][e], other.coeffs[d][e]))
    }
}

impl PartialEq for BiSeries {
    fn eq(&self, other: &BiSeries) -> bool {
        self.first_mismatch(other).is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(coeffs: &[i128]) -> Series {
        Series::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn ring_operations() {
        let one_plus_q = s(&[1, 1, 0]);
        let one_minus_q = s(&[1, -1, 0]);
        assert_eq!((&one_plus_q * &one_minus_q).coeffs(), &[1, 0, -1]);
        assert_eq!(&one_plus_q + &Series::zero(2), one_plus_q);
        let mut geometric = Series::one(5);
        geometric.div_one_minus(1);
        assert_eq!(geometric.coeffs(), &[1; 6]);
        assert_eq!((&geometric * &s(&[1, -1, 0, 0, 0, 0])).coeffs(), &[1, 0, 0, 0, 0, 0]);
        assert_eq!((-&one_plus_q).coeffs(), &[-1, -1, 0]);
        assert_eq!((&one_plus_q - &one_plus_q).coeffs(), &[0, 0, 0]);
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = s(&[1, 2, 3, 4]);
        let b = s(&[1, 1]);
        assert_eq!((&a * &b).order(), 1);
        assert_eq!((&a + &b).coeffs(), &[2, 3]);
        assert!(a == s(&[1, 2]));
    }

    #[test]
    fn binomial_factors() {
        let mut x = Series::one(4);
        x.mul_binomial(-1, 1);
        x.mul_binomial(-1, 3);
        assert_eq!(x.coeffs(), &[1, -1, 0, -1, 1]);
        x.mul_binomial(1, 9);
        assert_eq!(x.coeffs(), &[1, -1, 0, -1, 1]);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_is_loud() {
        let big = s(&[i128::MAX, 0]);
        let _ = &big + &big;
    }

    #[test]
    fn display_and_parse() {
        let x = s(&[1, 1, 0, -2, 1]);
        assert_eq!(x.to_string(), "1 + q - 2 q^3 + q^4 + O(q^5)");
        assert_eq!(Series::zero(3).to_string(), "O(q^4)");
        assert_eq!(s(&[0, -1]).to_string(), "-q + O(q^2)");
        for text in ["1 + q - 2 q^3 + q^4 + O(q^5)", "O(q^4)", "-q + O(q^2)", "3 + O(q^1)"] {
            let parsed: Series = text.parse().unwrap();
            assert_eq!(parsed.to_string(), text);
        }
        assert_eq!("2*q^2 + 1 + O(q^3)".parse::<Series>().unwrap().coeffs(), &[1, 0, 2]);
        for bad in ["", "1 + q", "q^5 + O(q^3)", "1 + + O(q^2)", "- O(q^2)", "x + O(q)"] {
            assert!(bad.parse::<Series>().is_err(), "{bad}");
        }
    }

    #[test]
    fn substitute_aq_monomials() {
        let x = BiSeries::monomial(1, 2, 3, 10);
        assert_eq!(x.substitute_aq(), BiSeries::monomial(1, 2, 5, 10));
        assert_eq!(BiSeries::one(10).substitute_aq(), BiSeries::one(10));
        // a^3 q^8 leaves the truncation
        assert_eq!(BiSeries::monomial(1, 3, 8, 10).substitute_aq(), BiSeries::zero(10));
    }

    #[test]
    fn bivariate_products() {
        let mut x = BiSeries::one(6);
        x.mul_one_plus_aq(1);
        x.mul_one_plus_aq(2);
        // (1 + aq)(1 + aq^2) = 1 + aq + aq^2 + a^2 q^3
        let expected = [(0, 0), (1, 1), (1, 2), (2, 3)];
        let terms: Vec<(usize, usize)> = x.terms().map(|(d, e, _)| (d, e)).collect();
        assert_eq!(terms.len(), 4);
        for t in expected {
            assert!(terms.contains(&t));
        }
        let mut y = BiSeries::monomial(1, 0, 0, 6).add(&BiSeries::monomial(1, 1, 1, 6));
        y = y.mul(&BiSeries::monomial(1, 0, 0, 6).add(&BiSeries::monomial(1, 1, 2, 6)));
        assert_eq!(x, y);
        assert_eq!(x.specialize_a1().coeffs(), &[1, 1, 1, 1, 0, 0, 0]);
        assert_eq!(x.specialize_a0().coeffs(), &[1, 0, 0, 0, 0, 0, 0]);
        let mut g = Series::one(6);
        g.div_one_minus(1);
        let z = BiSeries::from_series(&g, 1).mul_series(&s(&[1, -1, 0, 0, 0, 0, 0]));
        assert_eq!(z, BiSeries::monomial(1, 1, 0, 6));
    }
}
