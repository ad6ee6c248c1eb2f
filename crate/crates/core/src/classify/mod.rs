//! Level-ordered unitarity classification and cross-validation of the
//! closed-form thresholds against exact margins.

mod lemmas;

pub use lemmas::{red_sp_sides, verify_gen_prv, verify_red_sp, GenPrvChecker, RedSpInstance};

use std::fmt;

use serde::Serialize;

use crate::criteria::{
    basic_threshold, full_condition, schmid_index_bound, schmid_threshold, Guarantee, TheoremBasis,
};
use crate::dirac::{DiracContext, Margin, Sign};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::schmid::{enumerate_by_level_with, LevelEnumerator, SchmidCoeffs, WithinLevelOrder};
use crate::weight::Weight;

pub const DEFAULT_CAP: u64 = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    UnitaryIrreducible { basis: TheoremBasis },
    NotUnitary { witness: SchmidCoeffs, margin: Margin },
    Boundary { witness: SchmidCoeffs, margin: Margin },
    InconclusiveAtCap { cap: u64 },
}

impl Verdict {
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::UnitaryIrreducible { .. } => "UnitaryIrreducible",
            Verdict::NotUnitary { .. } => "NotUnitary",
            Verdict::Boundary { .. } => "Boundary",
            Verdict::InconclusiveAtCap { .. } => "InconclusiveAtCap",
        }
    }

    pub fn witness(&self) -> Option<(&SchmidCoeffs, &Margin)> {
        match self {
            Verdict::NotUnitary { witness, margin } | Verdict::Boundary { witness, margin } => Some((witness, margin)),
            _ => None,
        }
    }

    /// JSON view: `{"verdict", "witness": {"coeffs", "level"} | null, "cap"}`.
    pub fn report(&self, cap: u64) -> VerdictReport {
        VerdictReport {
            verdict: self.tag(),
            witness: self
                .witness()
                .map(|(s, _)| WitnessReport { coeffs: s.coeffs().to_vec(), level: s.level() }),
            cap,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::UnitaryIrreducible { basis } => {
                write!(f, "UNITARY (N(λ) irreducible), guaranteed by {basis}")
            }
            Verdict::NotUnitary { witness, .. } => {
                write!(f, "NOT UNITARY, witness s={witness} level {}", witness.level())
            }
            Verdict::Boundary { witness, .. } => write!(f, "BOUNDARY at s={witness} level {}", witness.level()),
            Verdict::InconclusiveAtCap { cap } => {
                write!(f, "INCONCLUSIVE, every margin up to level {cap} is positive")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub verdict: &'static str,
    pub witness: Option<WitnessReport>,
    pub cap: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub coeffs: Vec<u64>,
    pub level: u64,
}

pub fn classify(family: &Family, lambda: &Weight, cap: u64) -> Result<Verdict> {
    classify_with(family, lambda, cap, WithinLevelOrder::default())
}

/// As [`classify`], scanning each level in `order`.
///
/// A whole level is evaluated before deciding: a negative margin anywhere in
/// the first non-positive level gives `NotUnitary` (the first one in `order`),
/// otherwise a zero gives `Boundary`.
pub fn classify_with(family: &Family, lambda: &Weight, cap: u64, order: WithinLevelOrder) -> Result<Verdict> {
    if cap == 0 {
        return Err(Error::InvalidArgument("level cap must be at least 1".into()));
    }
    let ctx = DiracContext::new(family, lambda)?;
    if let Guarantee::GuaranteedStrict(basis) = full_condition(family, lambda)? {
        return Ok(Verdict::UnitaryIrreducible { basis });
    }
    for level in 1..=cap {
        let mut zero = None;
        for s in LevelEnumerator::modules_at(family, level, order) {
            match ctx.sign(&s)? {
                Sign::Positive => {}
                Sign::Negative => {
                    let margin = ctx.margin(&s)?;
                    return Ok(Verdict::NotUnitary { witness: s, margin });
                }
                Sign::Zero => {
                    if zero.is_none() {
                        zero = Some(s);
                    }
                }
            }
        }
        if let Some(s) = zero {
            let margin = ctx.margin(&s)?;
            return Ok(Verdict::Boundary { witness: s, margin });
        }
    }
    Ok(Verdict::InconclusiveAtCap { cap })
}

/// A disagreement between a closed form and the exact margin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub check: String,
    pub schmid: SchmidCoeffs,
    pub expected: String,
    pub found: Sign,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at s={}: expected {}, margin {}", self.check, self.schmid, self.expected, self.found.label())
    }
}

/// Compares every closed-form threshold and guarantee with exact margins of
/// level `≤ cap`. An empty result means full agreement.
pub fn crosscheck(family: &Family, lambda: &Weight, cap: u64) -> Result<Vec<Mismatch>> {
    let ctx = DiracContext::new(family, lambda)?;
    let mut out = Vec::new();
    if cap == 0 {
        return Ok(out);
    }
    let mut expect = |check: String, s: SchmidCoeffs, expected: Sign| -> Result<()> {
        let found = ctx.sign(&s)?;
        if found != expected {
            out.push(Mismatch { check, schmid: s, expected: expected.label().to_string(), found });
        }
        Ok(())
    };
    match basic_threshold(family, lambda) {
        Ok(t) => expect("basic threshold".into(), SchmidCoeffs::basic(*family, 1)?, t.predicted_sign())?,
        Err(Error::WrongCase(_)) => {}
        Err(e) => return Err(e),
    }
    let bound = schmid_index_bound(family, lambda)?;
    for i in 1..=bound.min(cap as usize) {
        let t = schmid_threshold(family, lambda, i)?;
        expect(format!("threshold i={i}"), SchmidCoeffs::basic(*family, i)?, t.predicted_sign())?;
    }
    let (strict, basis) = match full_condition(family, lambda)? {
        Guarantee::GuaranteedStrict(b) => (true, b),
        Guarantee::GuaranteedNonStrict(b) => (false, b),
        Guarantee::NotGuaranteed => return Ok(out),
    };
    for s in enumerate_by_level_with(family, cap, WithinLevelOrder::default()) {
        let found = ctx.sign(&s)?;
        let ok = if strict { found == Sign::Positive } else { found != Sign::Negative };
        if !ok {
            let expected = if strict { "POSITIVE" } else { "POSITIVE or ZERO" };
            out.push(Mismatch { check: format!("guarantee ({basis})"), schmid: s, expected: expected.into(), found });
        }
    }
    Ok(out)
}

/// Pairs `(a, b)` in `[1, a_max] × [0, b_max]` where the margin at
/// `s_{a,b+1}` falls below the margin at `s_{a,b}`.
pub fn b_induction_failures(family: &Family, lambda: &Weight, a_max: u64, b_max: u64) -> Result<Vec<(u64, u64)>> {
    if !family.is_so_two() {
        return Err(Error::NotApplicable(format!("the (a, b) induction needs so(2,·), not {family}")));
    }
    let ctx = DiracContext::new(family, lambda)?;
    let mut out = Vec::new();
    for a in 1..=a_max {
        let mut prev = ctx.margin(&SchmidCoeffs::so_pair(*family, a, 0)?)?;
        for b in 0..=b_max {
            let next = ctx.margin(&SchmidCoeffs::so_pair(*family, a, b + 1)?)?;
            if next.value() < prev.value() {
                out.push((a, b));
            }
            prev = next;
        }
    }
    Ok(out)
}
