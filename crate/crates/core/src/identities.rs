//! The registered q-series identities, the two-variable families `F₁..F₃`
//! and `E₁..E₃`, and coefficientwise verification.

use std::fmt;
use std::str::FromStr;

use crate::classes::{class_gf, ClassSpec};
use crate::error::{Error, Result};
use crate::products::{
    allowed_residues, geometric_inverse, inverse_q_factorial, pochhammer, residue_product,
    residue_product_with_numerators, shifted_a_pochhammer, Length,
};
use crate::series::{BiSeries, Series};

/// A sum-equals-product identity checked by [`verify_identity`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `Σ q^{j²}/(q;q)_j`, mod 5.
    Rr1,
    /// `Σ q^{j²+j}/(q;q)_j`, mod 5.
    Rr2,
    /// `Σ q^{2j²+2j}(-q^{2j+2};q)_∞/(q²;q²)_j`, mod 7.
    Rs1,
    /// `Σ q^{2j²+2j}(-q^{2j+1};q)_∞/(q²;q²)_j`, mod 7.
    Rs2,
    /// `Σ q^{2j²}(-q^{2j+1};q)_∞/(q²;q²)_j`, mod 7.
    Rs3,
    /// `Σ q^{2j²+2j}(q;q²)_j(-q^{2j+2};q)_∞/(q²;q²)_j`, mod 6.
    Sl27,
    /// `(-q;q)_∞`, mod 6.
    Sl27b,
    /// `Σ q^{2j²}(q;q²)_j(-q^{2j+1};q)_∞/(q²;q²)_j = Π(1-q^{3j})(1-q^{6j-3})/(1-q^j)`.
    Sl27c,
    /// `Σ (-1)^j q^{3j²-2j}(-q^{2j+1};q)_∞/(q²;q²)_j`, mod 5.
    Mod5,
    /// `Σ q^{3j²+3j}(-q^{3j+3};q³)_∞/((q³;q³)_j(1-q^{3j+2})) Π_{h>j}(…)`, mod 9.
    Mod9,
}

impl Identity {
    pub const ALL: [Identity; 10] = [
        Identity::Rr1,
        Identity::Rr2,
        Identity::Rs1,
        Identity::Rs2,
        Identity::Rs3,
        Identity::Sl27,
        Identity::Sl27b,
        Identity::Sl27c,
        Identity::Mod5,
        Identity::Mod9,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Identity::Rr1 => "rr1",
            Identity::Rr2 => "rr2",
            Identity::Rs1 => "rs1",
            Identity::Rs2 => "rs2",
            Identity::Rs3 => "rs3",
            Identity::Sl27 => "sl27",
            Identity::Sl27b => "sl27b",
            Identity::Sl27c => "sl27c",
            Identity::Mod5 => "mod5",
            Identity::Mod9 => "mod9",
        }
    }

    /// `(modulus, i)` for products over parts `≢ 0, ±i`; `None` for the
    /// explicit-factor product of `sl27c`.
    fn residue_class(self) -> Option<(u64, u64)> {
        match self {
            Identity::Rr1 => Some((5, 2)),
            Identity::Rr2 | Identity::Mod5 => Some((5, 1)),
            Identity::Rs1 => Some((7, 1)),
            Identity::Rs2 => Some((7, 2)),
            Identity::Rs3 => Some((7, 3)),
            Identity::Sl27 => Some((6, 1)),
            Identity::Sl27b => Some((6, 2)),
            Identity::Sl27c => None,
            Identity::Mod9 => Some((9, 1)),
        }
    }

    pub fn sum_side(self, order: usize) -> Series {
        let n = order;
        match self {
            Identity::Rr1 => sum_terms(n, |j| j * j, |j| inverse_q_factorial(1, j, n)),
            Identity::Rr2 => sum_terms(n, |j| j * j + j, |j| inverse_q_factorial(1, j, n)),
            Identity::Rs1 => sum_terms(n, |j| 2 * j * j + 2 * j, |j| selberg_tail(j, 2 * j + 2, n)),
            Identity::Rs2 => sum_terms(n, |j| 2 * j * j + 2 * j, |j| selberg_tail(j, 2 * j + 1, n)),
            Identity::Rs3 => sum_terms(n, |j| 2 * j * j, |j| selberg_tail(j, 2 * j + 1, n)),
            Identity::Sl27 => sum_terms(
                n,
                |j| 2 * j * j + 2 * j,
                |j| &selberg_tail(j, 2 * j + 2, n) * &pochhammer(-1, 1, 2, Length::Finite(j), n),
            ),
            Identity::Sl27b => pochhammer(1, 1, 1, Length::Infinite, n),
            Identity::Sl27c => sum_terms(
                n,
                |j| 2 * j * j,
                |j| &selberg_tail(j, 2 * j + 1, n) * &pochhammer(-1, 1, 2, Length::Finite(j), n),
            ),
            Identity::Mod5 => {
                // 3j² - 2j is the least exponent of the j-th term
                let mut total = Series::zero(n);
                for j in 0.. {
                    let lead = 3 * j * j - 2 * j;
                    if lead > n {
                        break;
                    }
                    let term = selberg_tail(j, 2 * j + 1, n).shift(lead);
                    total = if j % 2 == 0 { &total + &term } else { &total - &term };
                }
                total
            }
            Identity::Mod9 => sum_terms(n, |j| 3 * j * j + 3 * j, |j| mod9_term(j, n)),
        }
    }

    pub fn product_side(self, order: usize) -> Series {
        match self.residue_class() {
            Some((modulus, i)) => residue_product(modulus, &allowed_residues(modulus, i), order),
            None => {
                let mut numerators: Vec<usize> = (1..).map(|j| 3 * j).take_while(|&e| e <= order).collect();
                numerators.extend((1..).map(|j| 6 * j - 3).take_while(|&e| e <= order));
                residue_product_with_numerators(1, &[0], &numerators, order)
            }
        }
    }
}

/// `Σ_j q^{lead(j)} · body(j)`, stopping once `lead(j)` exceeds the order.
fn sum_terms(
    order: usize,
    lead: impl Fn(usize) -> usize,
    body: impl Fn(usize) -> Series,
) -> Series {
    let mut total = Series::zero(order);
    for j in 0.. {
        let e = lead(j);
        if e > order {
            break;
        }
        total = &total + &body(j).shift(e);
    }
    total
}

/// `(-q^start;q)_∞ / (q²;q²)_j`.
fn selberg_tail(j: usize, start: usize, order: usize) -> Series {
    &pochhammer(1, start, 1, Length::Infinite, order) * &inverse_q_factorial(2, j, order)
}

/// Everything in the j-th mod 9 term except `q^{3j²+3j}`.
fn mod9_term(j: usize, order: usize) -> Series {
    let mut s = &pochhammer(1, 3 * j + 3, 3, Length::Infinite, order)
        * &inverse_q_factorial(3, j, order);
    s.div_one_minus(3 * j + 2);
    for h in j + 1.. {
        if 3 * h + 1 > order {
            break;
        }
        // 1 + q^m/(1-q^m) + q^{m+1}/(1-q^{m+1}) with m = 3h+1
        let factor = &(&geometric_inverse(3 * h + 1, order) + &geometric_inverse(3 * h + 2, order))
            - &Series::one(order);
        s = &s * &factor;
    }
    s
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|id| id.id() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Where two series first disagree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exponent {
    Q(usize),
    AQ { a: usize, q: usize },
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Q(e) => write!(f, "q^{e}"),
            Exponent::AQ { a, q } => write!(f, "a^{a} q^{q}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// The equation that failed, e.g. `F1(a) = F3(aq)`.
    pub relation: String,
    pub at: Exponent,
    pub left: i128,
    pub right: i128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Verified,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub id: String,
    pub order: usize,
    pub mismatch: Option<Mismatch>,
}

impl VerificationReport {
    fn new(id: &str, order: usize) -> Self {
        Self {
            id: id.to_string(),
            order,
            mismatch: None,
        }
    }

    pub fn status(&self) -> Status {
        match self.mismatch {
            None => Status::Verified,
            Some(_) => Status::Mismatch,
        }
    }

    pub fn is_verified(&self) -> bool {
        self.mismatch.is_none()
    }

    fn compare(mut self, relation: &str, left: &Series, right: &Series) -> Self {
        if self.mismatch.is_none() {
            if let Some((e, l, r)) = left.first_mismatch(right) {
                self.mismatch = Some(Mismatch {
                    relation: relation.to_string(),
                    at: Exponent::Q(e),
                    left: l,
                    right: r,
                });
            }
        }
        self
    }

    fn compare_bivariate(mut self, relation: &str, left: &BiSeries, right: &BiSeries) -> Self {
        if self.mismatch.is_none() {
            if let Some(((a, q), l, r)) = left.first_mismatch(right) {
                self.mismatch = Some(Mismatch {
                    relation: relation.to_string(),
                    at: Exponent::AQ { a, q },
                    left: l,
                    right: r,
                });
            }
        }
        self
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(f, "{}: verified to q^{}", self.id, self.order),
            Some(m) => write!(
                f,
                "{}: mismatch in `{}` at {}: {} vs {}",
                self.id, m.relation, m.at, m.left, m.right
            ),
        }
    }
}

/// Compares the sum side with the product side through `q^order`.
pub fn verify_identity(identity: Identity, order: usize) -> VerificationReport {
    VerificationReport::new(identity.id(), order).compare(
        "sum side = product side",
        &identity.sum_side(order),
        &identity.product_side(order),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    F,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::F => "F",
            Family::E => "E",
        })
    }
}

/// `F₁`, `F₂`, `F₃` as series in `a` and `q`.
pub fn build_f(i: u8, order: usize) -> BiSeries {
    let n = order;
    match i {
        2 => shifted_a_pochhammer(1, n),
        1 | 3 => {
            let lead = |j: usize| if i == 1 { 2 * j * (j + 1) } else { 2 * j * j };
            let mut total = BiSeries::zero(n);
            for j in 0.. {
                let e = lead(j);
                if e > n {
                    break;
                }
                let start = if i == 1 { 2 * j + 2 } else { 2 * j + 1 };
                let q_part = &pochhammer(-1, 1, 2, Length::Finite(j), n) * &inverse_q_factorial(2, j, n);
                let term = shifted_a_pochhammer(start, n)
                    .mul(&BiSeries::from_series(&q_part.shift(e), 2 * j));
                total = total.add(&term);
            }
            total
        }
        _ => panic!("F_{i} is not defined; expected 1, 2 or 3"),
    }
}

/// `E₁`, `E₂`, `E₃` as series in `a` and `q`.
pub fn build_e(i: u8, order: usize) -> BiSeries {
    let n = order;
    match i {
        2 => shifted_a_pochhammer(1, n),
        1 | 3 => {
            let mut total = BiSeries::zero(n);
            for j in 0.. {
                let outer = if i == 1 { 2 * j * (j + 1) } else { 2 * j * j };
                if outer > n {
                    break;
                }
                let outer_part = inverse_q_factorial(2, j, n).shift(outer);
                // Σ_m a^m q^{m(m + 2j + c)}/(q;q)_m with c = 1 for E₁, 0 for E₃
                let c = if i == 1 { 1 } else { 0 };
                let mut inner = BiSeries::zero(n);
                for m in 0.. {
                    let e = m * (m + 2 * j + c);
                    if e > n || m > n {
                        break;
                    }
                    let row = inverse_q_factorial(1, m, n).shift(e);
                    inner = inner.add(&BiSeries::from_series(&row, m));
                }
                let term = inner
                    .mul_series(&outer_part)
                    .mul(&BiSeries::monomial(1, 2 * j, 0, n));
                total = total.add(&term);
            }
            total
        }
        _ => panic!("E_{i} is not defined; expected 1, 2 or 3"),
    }
}

pub fn build_family(family: Family, i: u8, order: usize) -> BiSeries {
    match family {
        Family::F => build_f(i, order),
        Family::E => build_e(i, order),
    }
}

/// `X₁(a) = X₃(aq)`, `X₂(a) = (1+aq)X₂(aq)`, `X₃(a) = X₁(a) + aq(1+aq)X₁(aq)`.
pub fn check_qdifference_system(family: Family, order: usize) -> VerificationReport {
    let n = order;
    let x1 = build_family(family, 1, n);
    let x2 = build_family(family, 2, n);
    let x3 = build_family(family, 3, n);
    let one_plus_aq = BiSeries::one(n).add(&BiSeries::monomial(1, 1, 1, n));
    let aq_one_plus_aq = BiSeries::monomial(1, 1, 1, n).add(&BiSeries::monomial(1, 2, 2, n));
    let id = match family {
        Family::F => "fsys",
        Family::E => "esys",
    };
    let x = family.to_string();
    VerificationReport::new(id, n)
        .compare_bivariate(&format!("{x}1(a) = {x}3(aq)"), &x1, &x3.substitute_aq())
        .compare_bivariate(
            &format!("{x}2(a) = (1+aq){x}2(aq)"),
            &x2,
            &one_plus_aq.mul(&x2.substitute_aq()),
        )
        .compare_bivariate(
            &format!("{x}3(a) = {x}1(a) + aq(1+aq){x}1(aq)"),
            &x3,
            &x1.add(&aq_one_plus_aq.mul(&x1.substitute_aq())),
        )
}

/// `E_i = F_i` for `i = 1, 2, 3`.
pub fn check_families_agree(order: usize) -> VerificationReport {
    (1..=3u8).fold(VerificationReport::new("ef-equal", order), |report, i| {
        report.compare_bivariate(&format!("E{i} = F{i}"), &build_e(i, order), &build_f(i, order))
    })
}

/// `F₁(1)` against brute-force counts of the `T` class.
pub fn check_t_generating_function(order: usize) -> VerificationReport {
    VerificationReport::new("t-gf", order).compare(
        "F1(1) = sum of T(n) q^n",
        &build_f(1, order).specialize_a1(),
        &class_gf(&ClassSpec::T, order),
    )
}

/// Every check reachable by name from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Identity(Identity),
    QDifference(Family),
    FamiliesAgree,
    TGeneratingFunction,
}

impl Check {
    /// Registration order, which is also the output order of `all`.
    pub fn all() -> Vec<Check> {
        let mut checks: Vec<Check> = Identity::ALL.into_iter().map(Check::Identity).collect();
        checks.extend([
            Check::QDifference(Family::F),
            Check::QDifference(Family::E),
            Check::FamiliesAgree,
            Check::TGeneratingFunction,
        ]);
        checks
    }

    pub fn id(self) -> &'static str {
        match self {
            Check::Identity(identity) => identity.id(),
            Check::QDifference(Family::F) => "fsys",
            Check::QDifference(Family::E) => "esys",
            Check::FamiliesAgree => "ef-equal",
            Check::TGeneratingFunction => "t-gf",
        }
    }

    pub fn run(self, order: usize) -> VerificationReport {
        match self {
            Check::Identity(identity) => verify_identity(identity, order),
            Check::QDifference(family) => check_qdifference_system(family, order),
            Check::FamiliesAgree => check_families_agree(order),
            Check::TGeneratingFunction => check_t_generating_function(order),
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::all()
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Runs the checks concurrently and returns the reports in input order.
pub fn run_checks(checks: &[Check], order: usize) -> Vec<VerificationReport> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = checks
            .iter()
            .map(|&check| scope.spawn(move || check.run(order)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification worker panicked"))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sum_sides() {
        assert_eq!(Identity::Rr1.sum_side(4).coeffs(), &[1, 1, 1, 1, 2]);
        assert_eq!(Identity::Rr2.sum_side(4).coeffs(), &[1, 0, 1, 1, 1]);
        assert_eq!(Identity::Rs2.sum_side(4).coeff(4), 3);
        for id in Identity::ALL {
            assert_eq!(id.sum_side(0).coeffs(), &[1], "{id}");
            assert!(verify_identity(id, 0).is_verified());
        }
    }

    #[test]
    fn identities_hold_at_moderate_order() {
        for id in Identity::ALL {
            let report = verify_identity(id, 40);
            assert!(report.is_verified(), "{report}");
        }
    }

    #[test]
    fn mod5_partial_sums_go_negative() {
        // the first two terms alone leave a negative coefficient
        let n = 40;
        let partial = &selberg_tail(0, 1, n) - &selberg_tail(1, 3, n).shift(1);
        assert!(!partial.is_nonnegative());
        assert!(Identity::Mod5.sum_side(n).is_nonnegative());
    }

    #[test]
    fn families_at_low_order() {
        assert_eq!(build_f(2, 20), build_e(2, 20));
        assert_eq!(build_f(1, 20).specialize_a0(), Series::one(20));
        assert!(check_qdifference_system(Family::F, 0).is_verified());
        assert!(check_qdifference_system(Family::F, 15).is_verified());
        assert!(check_qdifference_system(Family::E, 15).is_verified());
        assert!(check_families_agree(15).is_verified());
    }

    #[test]
    fn check_names() {
        let names: Vec<&str> = Check::all().into_iter().map(Check::id).collect();
        assert_eq!(
            names,
            [
                "rr1", "rr2", "rs1", "rs2", "rs3", "sl27", "sl27b", "sl27c", "mod5", "mod9",
                "fsys", "esys", "ef-equal", "t-gf"
            ]
        );
        assert_eq!("bogus".parse::<Check>(), Err(Error::UnknownIdentity("bogus".into())));
        assert_eq!("mod9".parse::<Identity>(), Ok(Identity::Mod9));
    }

    #[test]
    fn report_rendering() {
        assert_eq!(verify_identity(Identity::Rs2, 10).to_string(), "rs2: verified to q^10");
        let broken = VerificationReport::new("x", 3).compare(
            "lhs = rhs",
            &Series::one(3),
            &Series::from_coeffs(vec![1, 0, 2, 0]),
        );
        assert_eq!(broken.status(), Status::Mismatch);
        assert_eq!(broken.to_string(), "x: mismatch in `lhs = rhs` at q^2: 0 vs 2");
    }
}
