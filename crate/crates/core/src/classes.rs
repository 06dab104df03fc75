//! Restricted partition classes: membership predicates and brute-force
//! enumeration.
//!
//! Counts produced here come from filtering every partition of `n`, never
//! from a product formula, so they can serve as an independent check on the
//! q-series side.

use std::fmt;
use std::str::FromStr;
use std::thread;

use crate::error::{Error, Result};
use crate::partition::{largest_repeated, runs, Partition};
use crate::series::Series;

/// Descriptor of a restricted partition class.
///
/// Use the checked constructors (or [`FromStr`]) to build one; membership
/// tests assume the parameters are in range.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ClassSpec {
    /// `m₁ ≤ i−1` and `m_j + m_{j+1} ≤ k−1`.
    Gordon { k: u64, i: u64 },
    /// Gordon conditions plus the parity condition on near-flat windows.
    Bressoud { k: u64, i: u64 },
    A1,
    A2,
    A3,
    /// `A1` with no two consecutive integers both present.
    T,
    /// Every part's residue mod `modulus` avoids `forbidden`.
    Congruence { modulus: u64, forbidden: Vec<u64> },
}

impl ClassSpec {
    pub fn gordon(k: u64, i: u64) -> Result<Self> {
        if k < 2 || i < 1 || i > k {
            return Err(Error::InvalidClassSpec(format!("gordon:{k}:{i}")));
        }
        Ok(ClassSpec::Gordon { k, i })
    }

    pub fn bressoud(k: u64, i: u64) -> Result<Self> {
        if k < 2 || i < 1 || i >= k {
            return Err(Error::InvalidClassSpec(format!("bressoud:{k}:{i}")));
        }
        Ok(ClassSpec::Bressoud { k, i })
    }

    /// Residues are reduced modulo `modulus`, sorted and deduplicated.
    pub fn congruence(modulus: u64, residues: &[u64]) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidClassSpec("cong:0".into()));
        }
        let mut forbidden: Vec<u64> = residues.iter().map(|r| r % modulus).collect();
        forbidden.sort_unstable();
        forbidden.dedup();
        Ok(ClassSpec::Congruence { modulus, forbidden })
    }

    /// Parts `≢ 0, ±i (mod 2k+1)`: the product side of Gordon's theorem.
    pub fn gordon_product(k: u64, i: u64) -> Result<Self> {
        Self::gordon(k, i)?;
        let m = 2 * k + 1;
        Self::congruence(m, &[0, i, m - i])
    }

    /// Parts `≢ 0, ±i (mod 2k)`: the product side of Bressoud's theorem.
    pub fn bressoud_product(k: u64, i: u64) -> Result<Self> {
        Self::bressoud(k, i)?;
        let m = 2 * k;
        Self::congruence(m, &[0, i, m - i])
    }

    pub fn is_member(&self, p: &Partition) -> bool {
        self.check_parts(p.parts()).is_ok()
    }

    pub fn check(&self, p: &Partition) -> std::result::Result<(), Violation> {
        self.check_parts(p.parts())
    }

    /// Membership on a raw nonincreasing slice of positive parts.
    pub fn check_parts(&self, parts: &[u64]) -> std::result::Result<(), Violation> {
        match self {
            ClassSpec::Gordon { k, i } => check_gordon(parts, *k, *i),
            ClassSpec::Bressoud { k, i } => {
                check_gordon(parts, *k, *i)?;
                check_bressoud_windows(parts, *k, *i)
            }
            ClassSpec::A1 => check_even_ladder(parts, 2),
            ClassSpec::A2 => check_even_ladder(parts, 0),
            ClassSpec::A3 => check_odd_ladder(parts),
            ClassSpec::T => {
                check_even_ladder(parts, 2)?;
                check_no_consecutive(parts)
            }
            ClassSpec::Congruence { modulus, forbidden } => {
                for &part in parts {
                    let residue = part % modulus;
                    if forbidden.binary_search(&residue).is_ok() {
                        return Err(Violation::ForbiddenResidue {
                            part,
                            residue,
                            modulus: *modulus,
                        });
                    }
                }
                Ok(())
            }
        }
    }

    /// Requires `p` to be a member, naming the violated condition otherwise.
    pub fn require(&self, p: &Partition) -> Result<()> {
        self.check(p).map_err(|violation| Error::NotInClass {
            partition: p.to_string(),
            class: self.to_string(),
            violation,
        })
    }
}

fn check_gordon(parts: &[u64], k: u64, i: u64) -> std::result::Result<(), Violation> {
    let pair_limit = (k - 1) as usize;
    let mut previous: Option<(u64, usize)> = None;
    for (value, count) in runs(parts).rev() {
        if value == 1 && count as u64 > i - 1 {
            return Err(Violation::TooManyOnes {
                count,
                limit: (i - 1) as usize,
            });
        }
        let below = match previous {
            Some((v, m)) if v + 1 == value => m,
            _ => 0,
        };
        if below > 0 && below + count > pair_limit {
            return Err(Violation::PairTooLarge {
                j: value - 1,
                total: below + count,
                limit: pair_limit,
            });
        }
        if count > pair_limit {
            return Err(Violation::PairTooLarge {
                j: value,
                total: count,
                limit: pair_limit,
            });
        }
        previous = Some((value, count));
    }
    Ok(())
}

// Windows reaching past the last part are skipped: zero padding would
// otherwise trigger the condition spuriously.
fn check_bressoud_windows(parts: &[u64], k: u64, i: u64) -> std::result::Result<(), Violation> {
    let span = (k - 2) as usize;
    for start in 0..parts.len().saturating_sub(span) {
        let window = &parts[start..=start + span];
        if window[0] - window[span] <= 1 {
            let total: u64 = window.iter().sum();
            if total % 2 != (i - 1) % 2 {
                return Err(Violation::WindowParity {
                    start: start + 1,
                    total,
                });
            }
        }
    }
    Ok(())
}

/// The `A2` conditions, with odd parts forbidden below `R₁ + odd_gap`
/// (`odd_gap = 0` for `A2`, `2` for `A1`).
fn check_even_ladder(parts: &[u64], odd_gap: u64) -> std::result::Result<(), Violation> {
    let r1 = largest_repeated(parts);
    let odd_bound = r1 + odd_gap;
    let mut next_even = 2;
    for (value, count) in runs(parts).rev() {
        if value % 2 == 1 {
            if count > 1 {
                return Err(Violation::OddRepeated { part: value, count });
            }
            if value < odd_bound {
                return Err(Violation::SmallOddPart {
                    part: value,
                    bound: odd_bound,
                });
            }
        } else if value < r1 {
            if value != next_even {
                return Err(Violation::EvenMissing { even: next_even });
            }
            if count < 2 {
                return Err(Violation::EvenUnrepeated { even: value });
            }
            next_even += 2;
        }
    }
    if r1 > 0 && next_even < r1 {
        return Err(Violation::EvenMissing { even: next_even });
    }
    Ok(())
}

fn check_odd_ladder(parts: &[u64]) -> std::result::Result<(), Violation> {
    let largest_odd_repeat = runs(parts)
        .find(|&(v, m)| v % 2 == 1 && m >= 2)
        .map_or(0, |(v, _)| v);
    let bound = if largest_odd_repeat == 0 { 0 } else { largest_odd_repeat + 1 };
    let mut next_odd = 1;
    for (value, count) in runs(parts).rev() {
        if value > bound {
            if count > 1 {
                return Err(Violation::RepeatedAboveBound { part: value, bound });
            }
        } else if value % 2 == 1 {
            if value != next_odd {
                return Err(Violation::OddNotTwice { part: next_odd, count: 0 });
            }
            if count != 2 {
                return Err(Violation::OddNotTwice { part: value, count });
            }
            next_odd += 2;
        }
    }
    if bound > 0 && next_odd < bound {
        return Err(Violation::OddNotTwice { part: next_odd, count: 0 });
    }
    Ok(())
}

fn check_no_consecutive(parts: &[u64]) -> std::result::Result<(), Violation> {
    let mut previous: Option<u64> = None;
    for (value, _) in runs(parts) {
        if previous == Some(value + 1) {
            return Err(Violation::ConsecutiveParts { j: value });
        }
        previous = Some(value);
    }
    Ok(())
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::Gordon { k, i } => write!(f, "gordon:{k}:{i}"),
            ClassSpec::Bressoud { k, i } => write!(f, "bressoud:{k}:{i}"),
            ClassSpec::A1 => f.write_str("a1"),
            ClassSpec::A2 => f.write_str("a2"),
            ClassSpec::A3 => f.write_str("a3"),
            ClassSpec::T => f.write_str("t"),
            ClassSpec::Congruence { modulus, forbidden } => {
                let list: Vec<String> = forbidden.iter().map(u64::to_string).collect();
                write!(f, "cong:{modulus}:{}", list.join(","))
            }
        }
    }
}

impl FromStr for ClassSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidClassSpec(s.to_string());
        let fields: Vec<&str> = s.trim().split(':').collect();
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
        match fields.as_slice() {
            ["a1"] => Ok(ClassSpec::A1),
            ["a2"] => Ok(ClassSpec::A2),
            ["a3"] => Ok(ClassSpec::A3),
            ["t"] => Ok(ClassSpec::T),
            ["gordon", k, i] => ClassSpec::gordon(num(k)?, num(i)?).map_err(|_| bad()),
            ["bressoud", k, i] => ClassSpec::bressoud(num(k)?, num(i)?).map_err(|_| bad()),
            ["cong", m, residues] => {
                let residues = if residues.trim().is_empty() {
                    Vec::new()
                } else {
                    residues.split(',').map(num).collect::<Result<Vec<_>>>()?
                };
                ClassSpec::congruence(num(m)?, &residues).map_err(|_| bad())
            }
            _ => Err(bad()),
        }
    }
}

/// The first class condition a partition fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    TooManyOnes { count: usize, limit: usize },
    /// `m_j + m_{j+1}` exceeds the limit.
    PairTooLarge { j: u64, total: usize, limit: usize },
    /// A window `π_start..π_{start+k-2}` (1-based) spans at most 1 but has
    /// the wrong parity.
    WindowParity { start: usize, total: u64 },
    OddRepeated { part: u64, count: usize },
    SmallOddPart { part: u64, bound: u64 },
    EvenMissing { even: u64 },
    EvenUnrepeated { even: u64 },
    OddNotTwice { part: u64, count: usize },
    RepeatedAboveBound { part: u64, bound: u64 },
    ConsecutiveParts { j: u64 },
    ForbiddenResidue { part: u64, residue: u64, modulus: u64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::TooManyOnes { count, limit } => {
                write!(f, "1 appears {count} times (at most {limit} allowed)")
            }
            Violation::PairTooLarge { j, total, limit } => {
                write!(f, "m_{j} + m_{} = {total} exceeds {limit}", j + 1)
            }
            Violation::WindowParity { start, total } => write!(
                f,
                "near-equal run starting at part {start} sums to {total}, wrong parity"
            ),
            Violation::OddRepeated { part, count } => {
                write!(f, "odd part {part} appears {count} times")
            }
            Violation::SmallOddPart { part, bound } => {
                write!(f, "odd part {part} is below {bound}")
            }
            Violation::EvenMissing { even } => {
                write!(f, "even part {even} below the largest repeated part is missing")
            }
            Violation::EvenUnrepeated { even } => write!(
                f,
                "even part {even} below the largest repeated part appears only once"
            ),
            Violation::OddNotTwice { part, count } => write!(
                f,
                "odd part {part} appears {count} times (exactly twice required)"
            ),
            Violation::RepeatedAboveBound { part, bound } => {
                write!(f, "part {part} above {bound} is repeated")
            }
            Violation::ConsecutiveParts { j } => write!(f, "{j} and {} both appear", j + 1),
            Violation::ForbiddenResidue {
                part,
                residue,
                modulus,
            } => write!(f, "part {part} is {residue} mod {modulus}"),
        }
    }
}

/// Calls `visit` on every partition of `n`, in lexicographically decreasing
/// order, reusing one buffer.
pub fn for_each_partition<F: FnMut(&[u64])>(n: u64, mut visit: F) {
    fn descend<F: FnMut(&[u64])>(remaining: u64, max: u64, buf: &mut Vec<u64>, visit: &mut F) {
        if remaining == 0 {
            visit(buf);
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            buf.push(part);
            descend(remaining - part, part, buf, visit);
            buf.pop();
        }
    }
    let mut buf = Vec::new();
    descend(n, n, &mut buf, &mut visit);
}

pub fn enumerate_class(n: u64, spec: &ClassSpec) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition(n, |parts| {
        if spec.check_parts(parts).is_ok() {
            out.push(Partition::from_sorted(parts.to_vec()));
        }
    });
    out
}

pub fn count_class(n: u64, spec: &ClassSpec) -> u64 {
    let mut count = 0;
    for_each_partition(n, |parts| {
        if spec.check_parts(parts).is_ok() {
            count += 1;
        }
    });
    count
}

/// `Σ_{n ≤ order} count_class(n, spec) qⁿ`, with weights spread over threads.
pub fn class_gf(spec: &ClassSpec, order: usize) -> Series {
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(order + 1);
    let mut coeffs = vec![0i128; order + 1];
    thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    // largest weights first, dealt round-robin, to balance work
                    (0..=order)
                        .rev()
                        .skip(w)
                        .step_by(workers)
                        .map(|n| (n, count_class(n as u64, spec)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for handle in handles {
            for (n, count) in handle.join().expect("enumeration worker panicked") {
                coeffs[n] = count as i128;
            }
        }
    });
    Series::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::from_parts(parts.iter().copied())
    }

    #[test]
    fn gordon_membership() {
        let g1 = ClassSpec::gordon(3, 1).unwrap();
        let example = p(&[40, 37, 36, 22, 22, 20, 19, 17, 17, 15, 13, 12, 10, 8, 8, 4, 4, 2]);
        assert!(g1.is_member(&example));
        let g2 = ClassSpec::gordon(3, 2).unwrap();
        assert_eq!(
            g2.check(&p(&[2, 1, 1])),
            Err(Violation::TooManyOnes { count: 2, limit: 1 })
        );
        let g3 = ClassSpec::gordon(3, 3).unwrap();
        assert!(g3.is_member(&p(&[3, 1, 1])));
        assert!(g3.is_member(&p(&[3, 2])));
        assert_eq!(
            g3.check(&p(&[3, 2, 2])),
            Err(Violation::PairTooLarge { j: 2, total: 3, limit: 2 })
        );
        assert!(!g3.is_member(&p(&[4, 4, 4])));
    }

    #[test]
    fn bressoud_membership() {
        let b1 = ClassSpec::bressoud(3, 1).unwrap();
        // window {5,4} is near-flat with odd sum
        assert_eq!(b1.check(&p(&[5, 4])), Err(Violation::WindowParity { start: 1, total: 9 }));
        assert!(b1.is_member(&p(&[5, 3])));
        assert!(b1.is_member(&p(&[4, 4])));
        assert!(!b1.is_member(&p(&[2, 1])));
        let b21 = ClassSpec::bressoud(2, 1).unwrap();
        assert!(b21.is_member(&p(&[6, 2])));
        assert!(!b21.is_member(&p(&[3])));
    }

    #[test]
    fn a_family_membership() {
        assert!(ClassSpec::A3.is_member(&p(&[16, 14, 9, 7, 6, 5, 4, 3, 3, 2, 2, 2, 2, 1, 1])));
        assert!(ClassSpec::A2.is_member(&p(&[3, 2, 2])));
        assert_eq!(
            ClassSpec::A1.check(&p(&[3, 2, 2])),
            Err(Violation::SmallOddPart { part: 3, bound: 4 })
        );
        assert_eq!(ClassSpec::A1.check(&p(&[1])), Err(Violation::SmallOddPart { part: 1, bound: 2 }));
        assert!(ClassSpec::A2.is_member(&p(&[1])));
        assert_eq!(ClassSpec::A2.check(&p(&[4, 4])), Err(Violation::EvenMissing { even: 2 }));
        assert_eq!(
            ClassSpec::A2.check(&p(&[4, 4, 2])),
            Err(Violation::EvenUnrepeated { even: 2 })
        );
        assert_eq!(
            ClassSpec::A2.check(&p(&[3, 3])),
            Err(Violation::OddRepeated { part: 3, count: 2 })
        );
        assert_eq!(
            ClassSpec::A3.check(&p(&[3, 3, 1])),
            Err(Violation::OddNotTwice { part: 1, count: 1 })
        );
        assert_eq!(
            ClassSpec::A3.check(&p(&[5, 5])),
            Err(Violation::OddNotTwice { part: 1, count: 0 })
        );
        assert_eq!(
            ClassSpec::A3.check(&p(&[6, 6])),
            Err(Violation::RepeatedAboveBound { part: 6, bound: 0 })
        );
        assert!(ClassSpec::A3.is_member(&p(&[2, 2, 2, 1, 1])));
        assert_eq!(ClassSpec::T.check(&p(&[7, 6])), Err(Violation::ConsecutiveParts { j: 6 }));
        assert!(ClassSpec::T.is_member(&p(&[8, 6, 2, 2])));
    }

    #[test]
    fn enumeration_examples() {
        let g32 = ClassSpec::gordon(3, 2).unwrap();
        assert_eq!(enumerate_class(4, &g32), vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]);
        let cong: ClassSpec = "cong:7:0,2,5".parse().unwrap();
        assert_eq!(enumerate_class(4, &cong), vec![p(&[4]), p(&[3, 1]), p(&[1, 1, 1, 1])]);
        for spec in [ClassSpec::A1, ClassSpec::T, g32.clone(), cong] {
            assert_eq!(enumerate_class(0, &spec), vec![Partition::empty()]);
        }
        assert_eq!(count_class(4, &g32), 3);
        assert_eq!(count_class(0, &ClassSpec::A2), 1);
        assert_eq!(count_class(4, &ClassSpec::A2), 3);
    }

    #[test]
    fn class_gf_small() {
        let g32 = ClassSpec::gordon(3, 2).unwrap();
        assert_eq!(class_gf(&g32, 4).coeffs(), &[1, 1, 1, 2, 3]);
        assert_eq!(class_gf(&ClassSpec::A3, 0).coeffs(), &[1]);
    }

    #[test]
    fn class_text_round_trip() {
        for text in ["gordon:3:2", "bressoud:4:1", "a1", "a2", "a3", "t", "cong:7:0,2,5"] {
            let spec: ClassSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert_eq!("cong:6:7,0,5".parse::<ClassSpec>().unwrap().to_string(), "cong:6:0,1,5");
        for bad in ["gordon:3:4", "gordon:1:1", "bressoud:3:3", "cong:0:1", "a4", "gordon:x:1", ""] {
            assert!(bad.parse::<ClassSpec>().is_err(), "{bad}");
        }
        assert_eq!(
            ClassSpec::gordon_product(3, 2).unwrap(),
            ClassSpec::Congruence { modulus: 7, forbidden: vec![0, 2, 5] }
        );
        assert_eq!(
            ClassSpec::bressoud_product(3, 1).unwrap(),
            ClassSpec::Congruence { modulus: 6, forbidden: vec![0, 1, 5] }
        );
    }
}
