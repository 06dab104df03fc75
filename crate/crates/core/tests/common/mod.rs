//! Naive reference implementations, written independently of the library:
//! a separate partition generator and membership tests that work from a
//! multiplicity table instead of runs over sorted parts.

#![allow(dead_code)]

use std::collections::HashMap;

/// All partitions of `n`, each nonincreasing. Builds partitions of `n` with
/// largest part at most `cap` from partitions of `n - first`.
pub fn partitions(n: u64) -> Vec<Vec<u64>> {
    fn go(n: u64, cap: u64) -> Vec<Vec<u64>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 1..=cap.min(n) {
            for mut rest in go(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    go(n, n)
}

pub fn mult(parts: &[u64]) -> HashMap<u64, u64> {
    let mut m = HashMap::new();
    for &p in parts {
        *m.entry(p).or_insert(0) += 1;
    }
    m
}

fn m(table: &HashMap<u64, u64>, j: u64) -> u64 {
    table.get(&j).copied().unwrap_or(0)
}

fn max_part(parts: &[u64]) -> u64 {
    parts.iter().copied().max().unwrap_or(0)
}

pub fn gordon(parts: &[u64], k: u64, i: u64) -> bool {
    let t = mult(parts);
    if m(&t, 1) > i - 1 {
        return false;
    }
    (1..=max_part(parts)).all(|j| m(&t, j) + m(&t, j + 1) <= k - 1)
}

pub fn bressoud(parts: &[u64], k: u64, i: u64) -> bool {
    if !gordon(parts, k, i) {
        return false;
    }
    let w = (k - 1) as usize;
    parts.windows(w).all(|win| {
        let near = win[0] - win[w - 1] <= 1;
        !near || win.iter().sum::<u64>() % 2 == (i - 1) % 2
    })
}

fn repeated_values(t: &HashMap<u64, u64>) -> Vec<u64> {
    let mut r: Vec<u64> = t.iter().filter(|(_, &c)| c >= 2).map(|(&v, _)| v).collect();
    r.sort_unstable();
    r
}

pub fn a2(parts: &[u64]) -> bool {
    let t = mult(parts);
    let rep = repeated_values(&t);
    let top = rep.last().copied().unwrap_or(0);
    // repeated values are exactly 2, 4, ..., top
    let ladder: Vec<u64> = (1..=top / 2).map(|h| 2 * h).collect();
    rep == ladder && parts.iter().all(|&p| p % 2 == 0 || p > top)
}

pub fn a1(parts: &[u64]) -> bool {
    let top = repeated_values(&mult(parts)).last().copied().unwrap_or(0);
    a2(parts) && parts.iter().all(|&p| p % 2 == 0 || p >= top + 2)
}

pub fn a3(parts: &[u64]) -> bool {
    let t = mult(parts);
    let r = t
        .iter()
        .filter(|(&v, &c)| v % 2 == 1 && c >= 2)
        .map(|(&v, _)| v)
        .max()
        .unwrap_or(0);
    let bound = if r == 0 { 0 } else { r + 1 };
    let odd_below = (1..bound).step_by(2).all(|o| m(&t, o) == 2);
    let above = t.iter().all(|(&v, &c)| v <= bound || c == 1);
    odd_below && above
}

pub fn t_class(parts: &[u64]) -> bool {
    let t = mult(parts);
    a1(parts) && (1..=max_part(parts)).all(|j| m(&t, j) == 0 || m(&t, j + 1) == 0)
}

pub fn avoids(parts: &[u64], modulus: u64, forbidden: &[u64]) -> bool {
    parts.iter().all(|p| !forbidden.contains(&(p % modulus)))
}

pub fn count(n: u64, keep: impl Fn(&[u64]) -> bool) -> usize {
    partitions(n).iter().filter(|p| keep(p)).count()
}
