//! Canonical integer partitions and the elementary operations on them.
//!
//! A [`Partition`] stores its parts as a nonincreasing vector of positive
//! integers. Multiplicities are derived on demand by scanning runs of equal
//! parts, so both the sequence view `{8,3,3,2,1}` and the exponent view
//! `<1 2 3^2 8>` are cheap.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite nonincreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Canonicalizes arbitrary nonnegative values: sorts them nonincreasing
    /// and drops zeros.
    pub fn make(values: &[i64]) -> Result<Self> {
        if let Some(&bad) = values.iter().find(|&&v| v < 0) {
            return Err(Error::NegativePart(bad));
        }
        Ok(Self::from_parts(values.iter().map(|&v| v as u64)))
    }

    pub fn from_parts<I: IntoIterator<Item = u64>>(parts: I) -> Self {
        let mut parts: Vec<u64> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// Wraps a slice that is already nonincreasing and zero-free.
    pub(crate) fn from_sorted(parts: Vec<u64>) -> Self {
        debug_assert!(is_canonical(&parts), "not canonical: {parts:?}");
        Self { parts }
    }

    /// `<value^count>`: `count` copies of `value`.
    pub fn repeated(value: u64, count: usize) -> Self {
        if value == 0 {
            return Self::empty();
        }
        Self {
            parts: vec![value; count],
        }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn smallest(&self) -> u64 {
        self.parts.last().copied().unwrap_or(0)
    }

    /// The `i`-th smallest part, 1-based.
    pub fn smallest_nth(&self, i: usize) -> Option<u64> {
        if i == 0 || i > self.parts.len() {
            return None;
        }
        Some(self.parts[self.parts.len() - i])
    }

    pub fn multiplicity(&self, j: u64) -> usize {
        // parts are sorted descending, so partition_point finds the run bounds
        let hi = self.parts.partition_point(|&p| p >= j);
        let lo = self.parts.partition_point(|&p| p > j);
        hi - lo
    }

    pub fn multiplicities(&self) -> BTreeMap<u64, usize> {
        runs(&self.parts).collect()
    }

    /// Runs of equal parts as `(value, multiplicity)`, largest value first.
    pub fn runs(&self) -> Runs<'_> {
        runs(&self.parts)
    }

    /// Multiset union.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.parts.iter().peekable(), other.parts.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x >= y {
                        parts.push(x);
                        a.next();
                    } else {
                        parts.push(y);
                        b.next();
                    }
                }
                (Some(_), None) => {
                    parts.extend(a);
                    break;
                }
                (None, _) => {
                    parts.extend(b);
                    break;
                }
            }
        }
        Partition::from_sorted(parts)
    }

    /// Pointwise sum, the shorter operand padded with zeros.
    pub fn sum(&self, other: &Partition) -> Partition {
        let (long, short) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut parts = long.parts.clone();
        for (p, q) in parts.iter_mut().zip(&short.parts) {
            *p += q;
        }
        Partition::from_sorted(parts)
    }

    /// Pointwise difference; requires `self >= other` part by part.
    pub fn difference(&self, other: &Partition) -> Result<Partition> {
        if other.len() > self.len() {
            return Err(Error::NotDominated {
                index: self.len(),
                minuend: 0,
                subtrahend: other.parts[self.len()],
            });
        }
        let mut parts = self.parts.clone();
        for (index, (p, &q)) in parts.iter_mut().zip(&other.parts).enumerate() {
            if *p < q {
                return Err(Error::NotDominated {
                    index,
                    minuend: *p,
                    subtrahend: q,
                });
            }
            *p -= q;
        }
        parts.retain(|&p| p > 0);
        // pointwise differences of two nonincreasing sequences need not be
        // nonincreasing, so re-sort
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition::from_sorted(parts))
    }

    /// `self >= other` pointwise.
    pub fn dominates(&self, other: &Partition) -> bool {
        other.len() <= self.len() && self.parts.iter().zip(&other.parts).all(|(p, q)| p >= q)
    }

    /// `self ≻ other`: the smallest part of `self` exceeds the largest part of
    /// `other`. An empty right operand is always exceeded.
    pub fn exceeds(&self, other: &Partition) -> bool {
        other.is_empty() || (!self.is_empty() && self.smallest() > other.largest())
    }

    /// Adds `delta` to every part.
    pub fn shift_up(&self, delta: u64) -> Partition {
        Partition::from_sorted(self.parts.iter().map(|p| p + delta).collect())
    }

    /// Parts strictly greater than `bound`.
    pub fn parts_above(&self, bound: u64) -> Partition {
        Partition::from_sorted(self.parts.iter().copied().take_while(|&p| p > bound).collect())
    }

    /// Parts strictly less than `bound`.
    pub fn parts_below(&self, bound: u64) -> Partition {
        Partition::from_sorted(self.parts.iter().copied().filter(|&p| p < bound).collect())
    }

    /// Parts less than or equal to `bound`.
    pub fn parts_at_most(&self, bound: u64) -> Partition {
        Partition::from_sorted(self.parts.iter().copied().filter(|&p| p <= bound).collect())
    }

    /// Values occurring at least twice, largest first.
    pub fn repeated_parts(&self) -> RepeatedParts {
        RepeatedParts {
            values: self.runs().filter(|&(_, m)| m >= 2).map(|(v, _)| v).collect(),
        }
    }

    /// The largest repeated part, or 0 when all parts are distinct.
    pub fn largest_repeated(&self) -> u64 {
        largest_repeated(&self.parts)
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Splits into the parts above and below the largest repeated part.
    /// For distinct parts this is `(self, ∅)`.
    pub fn prefix_suffix(&self) -> (Partition, Partition) {
        let r1 = self.largest_repeated();
        if r1 == 0 {
            return (self.clone(), Partition::empty());
        }
        (self.parts_above(r1), self.parts_below(r1))
    }

    /// The unique decomposition `π⁽⁰⁾ ∪ <R₁²> ∪ π⁽¹⁾ ∪ … ∪ <R_D²> ∪ π⁽ᴰ⁾`.
    pub fn decompose(&self) -> Result<Decomposition> {
        let mut prefix = Vec::new();
        let mut blocks: Vec<Block> = Vec::new();
        for (value, count) in self.runs() {
            match count {
                1 => match blocks.last_mut() {
                    Some(block) => block.tail.parts.push(value),
                    None => prefix.push(value),
                },
                2 => blocks.push(Block {
                    repeated: value,
                    tail: Partition::empty(),
                }),
                _ => return Err(Error::MultiplicityTooHigh { part: value, count }),
            }
        }
        Ok(Decomposition {
            prefix: Partition::from_sorted(prefix),
            blocks,
        })
    }

    /// Exponent notation with ascending parts, e.g. `<2^3 4^5 6^4 8^3>`.
    /// Multiplicity one is written without an exponent.
    pub fn to_exponent_string(&self) -> String {
        let mut out = String::from("<");
        let mut first = true;
        let mut runs: Vec<(u64, usize)> = self.runs().collect();
        runs.reverse();
        for (value, count) in runs {
            if !first {
                out.push(' ');
            }
            first = false;
            if count == 1 {
                out.push_str(&value.to_string());
            } else {
                out.push_str(&format!("{value}^{count}"));
            }
        }
        out.push('>');
        out
    }

    /// Mixed form: parts above `threshold` in braces, the rest in exponent
    /// notation, joined by `u`. Either half is omitted when empty; the empty
    /// partition prints as `{}`.
    pub fn to_split_string(&self, threshold: u64) -> String {
        let upper = self.parts_above(threshold);
        let lower = self.parts_at_most(threshold);
        match (upper.is_empty(), lower.is_empty()) {
            (_, true) => upper.to_string(),
            (true, false) => lower.to_exponent_string(),
            (false, false) => format!("{upper}u{}", lower.to_exponent_string()),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `{a,b,...}`, `<j^m k ...>` and any `u`-separated union of
    /// those.
    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: &str| Error::ParsePartition {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut parts = Vec::new();
        let mut rest = s.trim();
        if rest.is_empty() {
            return Err(fail("empty input"));
        }
        loop {
            let (open, close) = match rest.chars().next() {
                Some('{') => ('{', '}'),
                Some('<') => ('<', '>'),
                _ => return Err(fail("expected `{` or `<`")),
            };
            let end = rest.find(close).ok_or_else(|| fail(&format!("missing `{close}`")))?;
            let body = &rest[1..end];
            if open == '{' {
                parse_brace_body(body, &mut parts).map_err(|r| fail(&r))?;
            } else {
                parse_exponent_body(body, &mut parts).map_err(|r| fail(&r))?;
            }
            rest = rest[end + 1..].trim_start();
            if rest.is_empty() {
                break;
            }
            rest = rest
                .strip_prefix('u')
                .or_else(|| rest.strip_prefix('∪'))
                .ok_or_else(|| fail("expected `u` between components"))?
                .trim_start();
        }
        Ok(Partition::from_parts(parts))
    }
}

fn parse_brace_body(body: &str, parts: &mut Vec<u64>) -> std::result::Result<(), String> {
    if body.trim().is_empty() {
        return Ok(());
    }
    for item in body.split(',') {
        let item = item.trim();
        let value: u64 = item.parse().map_err(|_| format!("bad part `{item}`"))?;
        if value == 0 {
            return Err("parts must be positive".into());
        }
        parts.push(value);
    }
    Ok(())
}

fn parse_exponent_body(body: &str, parts: &mut Vec<u64>) -> std::result::Result<(), String> {
    for item in body.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
        let (value, count) = match item.split_once('^') {
            Some((v, m)) => (v, m.parse::<usize>().map_err(|_| format!("bad exponent in `{item}`"))?),
            None => (item, 1),
        };
        let value: u64 = value.parse().map_err(|_| format!("bad part `{item}`"))?;
        if value == 0 {
            return Err("parts must be positive".into());
        }
        parts.extend(std::iter::repeat_n(value, count));
    }
    Ok(())
}

pub(crate) fn is_canonical(parts: &[u64]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1]) && parts.last().is_none_or(|&p| p > 0)
}

pub(crate) fn largest_repeated(parts: &[u64]) -> u64 {
    parts.windows(2).find(|w| w[0] == w[1]).map_or(0, |w| w[0])
}

pub(crate) fn runs(parts: &[u64]) -> Runs<'_> {
    Runs { parts, pos: 0 }
}

/// Iterator over `(value, multiplicity)` runs of a nonincreasing slice.
pub struct Runs<'a> {
    parts: &'a [u64],
    pos: usize,
}

impl Iterator for Runs<'_> {
    type Item = (u64, usize);

    fn next(&mut self) -> Option<Self::Item> {
        let value = *self.parts.get(self.pos)?;
        let start = self.pos;
        while self.pos < self.parts.len() && self.parts[self.pos] == value {
            self.pos += 1;
        }
        Some((value, self.pos - start))
    }
}

impl DoubleEndedIterator for Runs<'_> {
    fn next_back(&mut self) -> Option<Self::Item> {
        if self.pos >= self.parts.len() {
            return None;
        }
        let value = *self.parts.last()?;
        let mut end = self.parts.len();
        while end > self.pos && self.parts[end - 1] == value {
            end -= 1;
        }
        let count = self.parts.len() - end;
        self.parts = &self.parts[..end];
        Some((value, count))
    }
}

/// `D(π)` and `R₁ > R₂ > … > R_D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepeatedParts {
    pub values: Vec<u64>,
}

impl RepeatedParts {
    pub fn count(&self) -> usize {
        self.values.len()
    }

    /// `R_k`, 1-based; `R_{D+1}` and beyond are 0.
    pub fn get(&self, k: usize) -> u64 {
        assert!(k >= 1, "repeated parts are indexed from 1");
        self.values.get(k - 1).copied().unwrap_or(0)
    }
}

/// One `<R_i²> ∪ π⁽ⁱ⁾` block of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub repeated: u64,
    pub tail: Partition,
}

/// `π⁽⁰⁾ ≻ <R₁²> ≻ π⁽¹⁾ ≻ … ≻ <R_D²> ≻ π⁽ᴰ⁾`, defined for partitions whose
/// multiplicities are all at most 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub prefix: Partition,
    pub blocks: Vec<Block>,
}

impl Decomposition {
    /// `D(π)`.
    pub fn depth(&self) -> usize {
        self.blocks.len()
    }

    /// `R_i`, 1-based, with `R_{D+1} = 0`.
    pub fn repeated(&self, i: usize) -> u64 {
        assert!(i >= 1, "repeated parts are indexed from 1");
        self.blocks.get(i - 1).map_or(0, |b| b.repeated)
    }

    /// `π⁽ⁱ⁾` for `0 <= i <= D`.
    pub fn tail(&self, i: usize) -> &Partition {
        if i == 0 {
            &self.prefix
        } else {
            &self.blocks[i - 1].tail
        }
    }

    pub fn reassemble(&self) -> Partition {
        let mut parts = self.prefix.parts.clone();
        for block in &self.blocks {
            parts.push(block.repeated);
            parts.push(block.repeated);
            parts.extend_from_slice(&block.tail.parts);
        }
        Partition::from_sorted(parts)
    }

    /// Checks the strict interleaving of the blocks.
    pub fn is_interleaved(&self) -> bool {
        // walking prefix, pair, tail, pair, ... every piece must sit strictly
        // below the last nonempty one; empty tails are skipped
        let mut floor = u64::MAX;
        let mut fits = |piece: &Partition| {
            if piece.is_empty() {
                return true;
            }
            let ok = piece.largest() < floor;
            floor = piece.smallest();
            ok
        };
        if !self.prefix.has_distinct_parts() || !fits(&self.prefix) {
            return false;
        }
        self.blocks.iter().all(|block| {
            block.tail.has_distinct_parts()
                && fits(&Partition::repeated(block.repeated, 2))
                && fits(&block.tail)
        })
    }
}
