//! Shape profiles of a highest weight and the closed-form Dirac thresholds.
//!
//! Every threshold is reported as an exact comparison of a left-hand side
//! against a right-hand side. `Less` means the Dirac inequality at the
//! corresponding Schmid module holds strictly, `Equal` means equality and
//! `Greater` means it fails.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use crate::dirac::Sign;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::scalar::{int, is_half_integer, ratio, Scalar};
use crate::weight::{validate_weight, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpProfile {
    pub q: usize,
    pub r: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SoStarCase {
    /// `λ_1 > λ_2`; `q` is the last position equal to `λ_2`.
    Case1 { q: usize },
    /// `λ_1 = λ_2`; `p` is the last position equal to `λ_1`.
    Case2 { p: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuProfile {
    pub p_prime: usize,
    pub q_prime: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinorSign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SoCase {
    Scalar,
    Spinor(SpinorSign),
    /// `1 ≤ λ_2 = … = |λ_p| > |λ_{p+1}|`.
    General { p: usize },
}

/// `lhs` compared against `rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Threshold {
    pub lhs: Scalar,
    pub rhs: Scalar,
}

impl Threshold {
    fn new(lhs: Scalar, rhs: Scalar) -> Self {
        Threshold { lhs, rhs }
    }

    pub fn ordering(&self) -> Ordering {
        self.lhs.cmp(&self.rhs)
    }

    /// The margin sign this comparison predicts.
    pub fn predicted_sign(&self) -> Sign {
        match self.ordering() {
            Ordering::Less => Sign::Positive,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Negative,
        }
    }
}

/// Which theorem backs a guarantee.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremBasis {
    SpContinuous,
    SoStarCase1,
    SoStarCase2,
    SuContinuous,
    SoScalar,
    SoSpinor,
    SoGeneral,
}

impl TheoremBasis {
    pub fn label(&self) -> &'static str {
        match self {
            TheoremBasis::SpContinuous => "continuous-range theorem",
            TheoremBasis::SoStarCase1 => "case-1 theorem",
            TheoremBasis::SoStarCase2 => "case-2 continuous-range theorem",
            TheoremBasis::SuContinuous => "continuous-range theorem",
            TheoremBasis::SoScalar => "scalar-case theorem",
            TheoremBasis::SoSpinor => "spinor-case theorem",
            TheoremBasis::SoGeneral => "general-case theorem",
        }
    }
}

impl fmt::Display for TheoremBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Guarantee {
    /// Every Schmid module has strictly positive margin.
    GuaranteedStrict(TheoremBasis),
    /// Every Schmid module has nonnegative margin.
    GuaranteedNonStrict(TheoremBasis),
    NotGuaranteed,
}

fn last_equal(c: &[Scalar], start: usize) -> usize {
    let mut j = start;
    while j + 1 < c.len() && c[j + 1] == c[start] {
        j += 1;
    }
    j + 1
}

fn wrong_family(op: &str, family: &Family) -> Error {
    Error::NotApplicable(format!("{op} is not defined for {family}"))
}

pub fn sp_profile(family: &Family, lambda: &Weight) -> Result<SpProfile> {
    if !matches!(family, Family::SpReal { .. }) {
        return Err(wrong_family("sp_profile", family));
    }
    validate_weight(family, lambda)?;
    let c = lambda.coords();
    let q = last_equal(c, 0);
    let below = &c[0] - int(1);
    let r = q + c[q..].iter().take_while(|x| **x == below).count();
    Ok(SpProfile { q, r })
}

pub fn sostar_case(family: &Family, lambda: &Weight) -> Result<SoStarCase> {
    if !matches!(family, Family::SoStar { .. }) {
        return Err(wrong_family("sostar_case", family));
    }
    validate_weight(family, lambda)?;
    let c = lambda.coords();
    Ok(if c[0] > c[1] { SoStarCase::Case1 { q: last_equal(c, 1) } } else { SoStarCase::Case2 { p: last_equal(c, 0) } })
}

pub fn su_profile(family: &Family, lambda: &Weight) -> Result<SuProfile> {
    let Family::Su { p, .. } = *family else {
        return Err(wrong_family("su_profile", family));
    };
    validate_weight(family, lambda)?;
    let c = lambda.coords();
    let p_prime = c[..p].iter().take_while(|x| **x == c[0]).count();
    let last = &c[c.len() - 1];
    let q_prime = c[p..].iter().rev().take_while(|x| *x == last).count();
    Ok(SuProfile { p_prime, q_prime })
}

/// Case of an `so(2,·)` weight. The run defining `p` is measured on
/// `λ_2, …, λ_{n−1}, |λ_n|`, which is what the threshold needs when `λ_n < 0`.
///
/// Tails that are not half-integers fall outside the three cases and give
/// [`Error::WrongCase`].
pub fn so_case(family: &Family, lambda: &Weight) -> Result<SoCase> {
    if !family.is_so_two() {
        return Err(wrong_family("so_case", family));
    }
    validate_weight(family, lambda)?;
    let tail = &lambda.coords()[1..];
    if !tail.iter().all(is_half_integer) {
        return Err(Error::WrongCase(format!(
            "{} has a tail outside the scalar, spinor and general cases",
            lambda.display(family)
        )));
    }
    if tail.iter().all(Zero::is_zero) {
        return Ok(SoCase::Scalar);
    }
    let h = ratio(1, 2);
    if tail[0] == h {
        let sign = if tail[tail.len() - 1] < Scalar::zero() { SpinorSign::Minus } else { SpinorSign::Plus };
        return Ok(SoCase::Spinor(sign));
    }
    let abs: Vec<Scalar> = tail.iter().map(crate::scalar::abs).collect();
    Ok(SoCase::General { p: last_equal(&abs, 0) + 1 })
}

/// The Dirac inequality at the first basic Schmid module, in closed form.
pub fn basic_threshold(family: &Family, lambda: &Weight) -> Result<Threshold> {
    let c = lambda.coords();
    match *family {
        Family::SpReal { .. } | Family::Su { .. } => schmid_threshold(family, lambda, 1),
        Family::SoStar { n } => {
            let n = n as i64;
            Ok(match sostar_case(family, lambda)? {
                SoStarCase::Case1 { q } => Threshold::new(&c[0] + &c[1], int(-2 * n + q as i64 + 2)),
                SoStarCase::Case2 { p } => Threshold::new(c[0].clone(), int(-n + p as i64)),
            })
        }
        Family::SoEven { n } | Family::SoOdd { n } => {
            let even = matches!(family, Family::SoEven { .. });
            let n = n as i64;
            Ok(match so_case(family, lambda)? {
                SoCase::Scalar => Threshold::new(c[0].clone(), int(0)),
                SoCase::Spinor(_) => {
                    let rhs = if even { ratio(3 - 2 * n, 2) } else { int(1 - n) };
                    Threshold::new(c[0].clone(), rhs)
                }
                SoCase::General { p } => {
                    let off = if even { 2 } else { 1 };
                    Threshold::new(&c[0] + &c[1], int(off + p as i64 - 2 * n))
                }
            })
        }
    }
}

/// The Dirac inequality at `s_i` in closed form, for the families with an
/// `i`-indexed threshold: `sp` (`i ≤ q`), `so*` in case 2 (`i ≤ ⌊p/2⌋`) and
/// `su` (`i ≤ min(p′, q′)`).
pub fn schmid_threshold(family: &Family, lambda: &Weight, i: usize) -> Result<Threshold> {
    let c = lambda.coords();
    match *family {
        Family::SpReal { n } => {
            let SpProfile { q, r } = sp_profile(family, lambda)?;
            check_index(i, q)?;
            let rhs = ratio(-2 * n as i64 + (r + q) as i64 - i as i64 + 1, 2);
            Ok(Threshold::new(c[0].clone(), rhs))
        }
        Family::SoStar { n } => match sostar_case(family, lambda)? {
            SoStarCase::Case1 { .. } => {
                Err(Error::WrongCase("so* case 1 (λ_1 > λ_2) has only the basic threshold".into()))
            }
            SoStarCase::Case2 { p } => {
                check_index(i, p / 2)?;
                Ok(Threshold::new(c[0].clone(), int(-(n as i64) + p as i64 - i as i64 + 1)))
            }
        },
        Family::Su { .. } => {
            let SuProfile { p_prime, q_prime } = su_profile(family, lambda)?;
            check_index(i, p_prime.min(q_prime))?;
            let n = c.len() as i64;
            let rhs = int(-n + (p_prime + q_prime) as i64 - i as i64 + 1);
            Ok(Threshold::new(&c[0] - &c[c.len() - 1], rhs))
        }
        Family::SoEven { .. } | Family::SoOdd { .. } => Err(wrong_family("schmid_threshold", family)),
    }
}

fn check_index(i: usize, max: usize) -> Result<()> {
    if i == 0 || i > max {
        Err(Error::IndexOutOfRange { index: i, max })
    } else {
        Ok(())
    }
}

/// Largest `i` accepted by [`schmid_threshold`], or 0 when there is none.
pub fn schmid_index_bound(family: &Family, lambda: &Weight) -> Result<usize> {
    Ok(match family {
        Family::SpReal { .. } => sp_profile(family, lambda)?.q,
        Family::SoStar { .. } => match sostar_case(family, lambda)? {
            SoStarCase::Case1 { .. } => 0,
            SoStarCase::Case2 { p } => p / 2,
        },
        Family::Su { .. } => {
            let pr = su_profile(family, lambda)?;
            pr.p_prime.min(pr.q_prime)
        }
        Family::SoEven { .. } | Family::SoOdd { .. } => 0,
    })
}

/// Whether some theorem guarantees the Dirac inequality at every Schmid module.
pub fn full_condition(family: &Family, lambda: &Weight) -> Result<Guarantee> {
    validate_weight(family, lambda)?;
    let c = lambda.coords();
    let strict_only = |cmp: Ordering, basis| match cmp {
        Ordering::Less => Guarantee::GuaranteedStrict(basis),
        _ => Guarantee::NotGuaranteed,
    };
    let with_equality = |cmp: Ordering, basis| match cmp {
        Ordering::Less => Guarantee::GuaranteedStrict(basis),
        Ordering::Equal => Guarantee::GuaranteedNonStrict(basis),
        Ordering::Greater => Guarantee::NotGuaranteed,
    };
    Ok(match *family {
        Family::SpReal { n } => {
            let r = sp_profile(family, lambda)?.r as i64;
            strict_only(c[0].cmp(&ratio(-2 * n as i64 + r + 1, 2)), TheoremBasis::SpContinuous)
        }
        Family::SoStar { n } => match sostar_case(family, lambda)? {
            SoStarCase::Case1 { .. } => {
                strict_only(basic_threshold(family, lambda)?.ordering(), TheoremBasis::SoStarCase1)
            }
            SoStarCase::Case2 { p } => {
                let rhs = int(-(n as i64) + (p as i64 + 1) / 2 + 1);
                strict_only(c[0].cmp(&rhs), TheoremBasis::SoStarCase2)
            }
        },
        Family::Su { .. } => {
            let SuProfile { p_prime, q_prime } = su_profile(family, lambda)?;
            let n = c.len() as i64;
            let rhs = int(-n + p_prime.max(q_prime) as i64 + 1);
            strict_only((&c[0] - &c[c.len() - 1]).cmp(&rhs), TheoremBasis::SuContinuous)
        }
        Family::SoEven { n } | Family::SoOdd { n } => {
            let even = matches!(family, Family::SoEven { .. });
            let n = n as i64;
            let case = match so_case(family, lambda) {
                Ok(case) => case,
                Err(Error::WrongCase(_)) => return Ok(Guarantee::NotGuaranteed),
                Err(e) => return Err(e),
            };
            match case {
                SoCase::Scalar => {
                    let bound = if even { int(2 - n) } else { ratio(3 - 2 * n, 2) };
                    with_equality(c[0].cmp(&bound), TheoremBasis::SoScalar)
                }
                SoCase::Spinor(_) => {
                    with_equality(basic_threshold(family, lambda)?.ordering(), TheoremBasis::SoSpinor)
                }
                SoCase::General { .. } => {
                    with_equality(basic_threshold(family, lambda)?.ordering(), TheoremBasis::SoGeneral)
                }
            }
        }
    })
}

/// Hypothesis of the `so(2,·)` induction step in `b`: the basic inequality
/// holds (non-strictly), and in the scalar case also `λ_1 ≤ 2−n` (even) or
/// `λ_1 ≤ 3/2−n` (odd).
pub fn b_induction_hypothesis(family: &Family, lambda: &Weight) -> Result<bool> {
    if !family.is_so_two() {
        return Err(wrong_family("b_induction_hypothesis", family));
    }
    let basic = basic_threshold(family, lambda)?.ordering() != Ordering::Greater;
    Ok(basic
        && match so_case(family, lambda)? {
            SoCase::Scalar => {
                let n = family.dim() as i64;
                let bound = if matches!(family, Family::SoEven { .. }) { int(2 - n) } else { ratio(3 - 2 * n, 2) };
                lambda.coords()[0] <= bound
            }
            _ => true,
        })
}
