//! Exact Dirac margins `‖(λ−s)⁺+ρ‖² − ‖λ+ρ‖²`.

use std::fmt;

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::scalar::{format_scalar, Scalar};
use crate::schmid::SchmidCoeffs;
use crate::weight::{validate_weight, Weight};
use crate::weyl::{self, dominate_in_place, norm_sq_shifted_quadrupled, rho, rho_doubled};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(x: &Scalar) -> Sign {
        if x.is_positive() {
            Sign::Positive
        } else if x.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn of_i128(x: i128) -> Sign {
        match x.signum() {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            _ => Sign::Zero,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Sign::Negative => "NEGATIVE",
            Sign::Zero => "ZERO",
            Sign::Positive => "POSITIVE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Margin {
    value: Scalar,
}

impl Margin {
    pub fn new(value: Scalar) -> Self {
        Margin { value }
    }

    pub fn value(&self) -> &Scalar {
        &self.value
    }

    pub fn sign(&self) -> Sign {
        Sign::of(&self.value)
    }
}

impl fmt::Display for Margin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", format_scalar(&self.value), self.sign().label())
    }
}

/// A validated highest weight with `ρ` and `‖λ+ρ‖²` cached, for evaluating
/// many Schmid modules against the same `λ`.
#[derive(Debug, Clone)]
pub struct DiracContext {
    family: Family,
    lambda: Weight,
    rho: Weight,
    base: Scalar,
    // doubled λ and ρ, when λ is half-integral
    fast: Option<(Vec<i64>, Vec<i64>, i128)>,
}

impl DiracContext {
    pub fn new(family: &Family, lambda: &Weight) -> Result<Self> {
        validate_weight(family, lambda)?;
        let rho = rho(family);
        let base = weyl::shifted_norm_unchecked(&rho, lambda);
        let fast = lambda.doubled().map(|lam2| {
            let rho2 = rho_doubled(family);
            let base4 = norm_sq_shifted_quadrupled(&lam2, &rho2);
            (lam2, rho2, base4)
        });
        Ok(DiracContext { family: *family, lambda: lambda.clone(), rho, base, fast })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    /// `‖λ+ρ‖²`
    pub fn base_norm(&self) -> &Scalar {
        &self.base
    }

    pub fn margin(&self, s: &SchmidCoeffs) -> Result<Margin> {
        self.check_family(s)?;
        if let Some(q) = self.quadrupled_unchecked(s) {
            return Ok(Margin::new(Scalar::new(q.into(), 4.into())));
        }
        Ok(self.margin_for_weight(&s.materialize()))
    }

    /// Sign of the margin, using integer arithmetic when possible.
    pub fn sign(&self, s: &SchmidCoeffs) -> Result<Sign> {
        self.check_family(s)?;
        match self.quadrupled_unchecked(s) {
            Some(q) => Ok(Sign::of_i128(q)),
            None => Ok(self.margin_for_weight(&s.materialize()).sign()),
        }
    }

    /// `4 · margin`, when `λ` is half-integral.
    pub fn margin_quadrupled(&self, s: &SchmidCoeffs) -> Result<Option<i128>> {
        self.check_family(s)?;
        Ok(self.quadrupled_unchecked(s))
    }

    fn check_family(&self, s: &SchmidCoeffs) -> Result<()> {
        if *s.family() != self.family {
            return Err(Error::InvalidArgument(format!(
                "Schmid module belongs to {}, weight to {}",
                s.family(),
                self.family
            )));
        }
        Ok(())
    }

    fn quadrupled_unchecked(&self, s: &SchmidCoeffs) -> Option<i128> {
        let (lam2, rho2, base4) = self.fast.as_ref()?;
        let mut diff: Vec<i64> = lam2.iter().zip(s.materialize_ints()).map(|(l, s)| l - 2 * s).collect();
        dominate_in_place(&self.family, &mut diff);
        Some(norm_sq_shifted_quadrupled(&diff, rho2) - base4)
    }

    /// Margin against an arbitrary subtrahend weight (no shape check).
    pub fn margin_for_weight(&self, s: &Weight) -> Margin {
        let mut shifted = (&self.lambda - s).into_coords();
        dominate_in_place(&self.family, &mut shifted);
        let top = weyl::shifted_norm_unchecked(&self.rho, &Weight::new(shifted));
        Margin::new(top - &self.base)
    }
}

pub fn dirac_margin(family: &Family, lambda: &Weight, s: &SchmidCoeffs) -> Result<Margin> {
    DiracContext::new(family, lambda)?.margin(s)
}

/// Strict: margin `> 0`; otherwise margin `≥ 0`.
pub fn dirac_compare(family: &Family, lambda: &Weight, s: &SchmidCoeffs, strict: bool) -> Result<bool> {
    let sign = dirac_margin(family, lambda, s)?.sign();
    Ok(if strict { sign == Sign::Positive } else { sign != Sign::Negative })
}

/// `4 · margin` computed on doubled integer coordinates. `None` when some
/// coordinate of `λ` is not a half-integer (or overflows `i64` when doubled).
pub fn dirac_margin_quadrupled(family: &Family, lambda: &Weight, s: &SchmidCoeffs) -> Result<Option<i128>> {
    DiracContext::new(family, lambda)?.margin_quadrupled(s)
}

/// JSON-friendly view of a margin.
#[derive(Debug, Clone, Serialize)]
pub struct MarginReport {
    pub value: String,
    pub sign: Sign,
}

impl From<&Margin> for MarginReport {
    fn from(m: &Margin) -> Self {
        MarginReport { value: format_scalar(m.value()), sign: m.sign() }
    }
}
