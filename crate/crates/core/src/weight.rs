//! Weights in the ε-basis, their text form, and highest-weight validation.

use std::fmt;
use std::ops::{Add, Sub};

use crate::error::{Error, Result};
use crate::family::Family;
use crate::scalar::{self, format_scalar, int, is_half_integer, is_integer, parse_scalar, Scalar};

/// An ordered vector of exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<Scalar>);

impl Weight {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Weight(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| int(c)).collect())
    }

    /// Builds a weight from doubled integer coordinates, `2·w`.
    pub fn from_doubled(doubled: &[i64]) -> Self {
        Weight(doubled.iter().map(|&c| scalar::ratio(c, 2)).collect())
    }

    pub fn zero(len: usize) -> Self {
        Weight(vec![int(0); len])
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ w_i²`, the plain (unshifted) squared norm.
    pub fn norm_sq(&self) -> Scalar {
        self.0.iter().map(|c| c * c).sum()
    }

    /// Coordinates doubled into machine integers, when every coordinate is
    /// a half-integer that fits.
    pub fn doubled(&self) -> Option<Vec<i64>> {
        self.0.iter().map(scalar::doubled_i64).collect()
    }

    pub fn check_len(&self, family: &Family) -> Result<()> {
        if self.len() == family.dim() {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: family.dim(), found: self.len() })
        }
    }

    /// Text form, inserting the block bar for `su`.
    pub fn display<'a>(&'a self, family: &'a Family) -> WeightDisplay<'a> {
        WeightDisplay { weight: self, split: family.left_block() }
    }

    /// Parses `a,b,…` (or `a,…|b,…` for `su`) and checks the coordinate count.
    pub fn parse(family: &Family, text: &str) -> Result<Self> {
        let text = text.trim();
        let parse_list = |t: &str| -> Result<Vec<Scalar>> {
            if t.trim().is_empty() {
                return Ok(Vec::new());
            }
            t.split(',').map(parse_scalar).collect()
        };
        let coords = match family.left_block() {
            Some(p) => {
                let (left, right) = text
                    .split_once('|')
                    .ok_or_else(|| Error::Parse(format!("su weight {text:?} needs a '|' between blocks")))?;
                if right.contains('|') {
                    return Err(Error::Parse(format!("su weight {text:?} has more than one '|'")));
                }
                let left = parse_list(left)?;
                if left.len() != p {
                    return Err(Error::LengthMismatch { expected: p, found: left.len() });
                }
                let mut all = left;
                all.extend(parse_list(right)?);
                all
            }
            None => {
                if text.contains('|') {
                    return Err(Error::Parse(format!("'|' is only valid for su weights: {text:?}")));
                }
                parse_list(text)?
            }
        };
        let w = Weight(coords);
        w.check_len(family)?;
        Ok(w)
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "weight length mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "weight length mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

pub struct WeightDisplay<'a> {
    weight: &'a Weight,
    split: Option<usize>,
}

impl fmt::Display for WeightDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.weight.0.iter().enumerate() {
            if i > 0 {
                let sep = if Some(i) == self.split { "|" } else { "," };
                f.write_str(sep)?;
            }
            f.write_str(&format_scalar(c))?;
        }
        Ok(())
    }
}

/// Checks the highest-weight conditions of `family` and hands the weight
/// back unchanged.
///
/// * `sp`, `so*`: `λ_1 ≥ … ≥ λ_n`, all differences integral.
/// * `su`: each block non-increasing with integral differences inside the block.
/// * `so-even`: `λ_2 ≥ … ≥ λ_{n−1} ≥ |λ_n|`, integral differences among `λ_2..λ_n`.
/// * `so-odd`: `λ_2 ≥ … ≥ λ_n ≥ 0`, integral differences and `2λ_i ∈ ℤ` for `i ≥ 2`.
///
/// `λ_1` of the `so(2,·)` families is unconstrained.
pub fn validate_weight<'a>(family: &Family, w: &'a Weight) -> Result<&'a Weight> {
    w.check_len(family)?;
    let c = w.coords();
    let n = c.len();
    match *family {
        Family::SpReal { .. } | Family::SoStar { .. } => {
            check_run(c, 0, n)?;
        }
        Family::Su { p, .. } => {
            check_run(c, 0, p)?;
            check_run(c, p, n)?;
        }
        Family::SoEven { .. } => {
            check_descending(c, 1, n - 1)?;
            let last = scalar::abs(&c[n - 1]);
            if c[n - 2] < last {
                return Err(Error::DominanceViolation { i: n - 1, j: n, rule: "λ_{n−1} ≥ |λ_n|" });
            }
            check_integral_diffs(c, 1, n)?;
        }
        Family::SoOdd { .. } => {
            check_descending(c, 1, n)?;
            if c[n - 1] < int(0) {
                return Err(Error::DominanceViolation { i: n, j: n, rule: "λ_n ≥ 0" });
            }
            check_integral_diffs(c, 1, n)?;
            if !is_half_integer(&c[1]) {
                return Err(Error::IntegralityViolation { i: 2, j: 2, rule: "2λ_i ∈ ℤ" });
            }
        }
    }
    Ok(w)
}

fn check_run(c: &[Scalar], start: usize, end: usize) -> Result<()> {
    check_descending(c, start, end)?;
    check_integral_diffs(c, start, end)
}

fn check_descending(c: &[Scalar], start: usize, end: usize) -> Result<()> {
    for i in start..end.saturating_sub(1) {
        if c[i] < c[i + 1] {
            return Err(Error::DominanceViolation { i: i + 1, j: i + 2, rule: "λ_i ≥ λ_{i+1}" });
        }
    }
    Ok(())
}

fn check_integral_diffs(c: &[Scalar], start: usize, end: usize) -> Result<()> {
    for i in start..end.saturating_sub(1) {
        if !is_integer(&(&c[i] - &c[i + 1])) {
            return Err(Error::IntegralityViolation { i: i + 1, j: i + 2, rule: "λ_i − λ_j ∈ ℤ" });
        }
    }
    Ok(())
}
