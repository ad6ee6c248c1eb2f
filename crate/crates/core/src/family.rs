//! The five classical Hermitian symmetric families.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A classical Hermitian family together with its rank parameters.
///
/// Build values through the checked constructors or [`FromStr`]; the rank
/// bounds are `sp: n ≥ 1`, `so*: n ≥ 2`, `su: 1 ≤ p ≤ q`, `so-even: n ≥ 4`,
/// `so-odd: n ≥ 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `sp(2n, ℝ)`
    SpReal { n: usize },
    /// `so*(2n)`
    SoStar { n: usize },
    /// `su(p, q)` with `p ≤ q`
    Su { p: usize, q: usize },
    /// `so(2, 2n−2)`
    SoEven { n: usize },
    /// `so(2, 2n−1)`
    SoOdd { n: usize },
}

impl Family {
    pub fn sp_real(n: usize) -> Result<Self> {
        Family::SpReal { n }.checked()
    }

    pub fn so_star(n: usize) -> Result<Self> {
        Family::SoStar { n }.checked()
    }

    pub fn su(p: usize, q: usize) -> Result<Self> {
        Family::Su { p, q }.checked()
    }

    pub fn so_even(n: usize) -> Result<Self> {
        Family::SoEven { n }.checked()
    }

    pub fn so_odd(n: usize) -> Result<Self> {
        Family::SoOdd { n }.checked()
    }

    /// Returns `self` if the rank bounds hold.
    pub fn checked(self) -> Result<Self> {
        let ok = match self {
            Family::SpReal { n } => n >= 1,
            Family::SoStar { n } => n >= 2,
            Family::Su { p, q } => p >= 1 && q >= p,
            Family::SoEven { n } => n >= 4,
            Family::SoOdd { n } => n >= 3,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidFamily(format!("{self} violates its rank bounds")))
        }
    }

    /// Number of ε-coordinates (`p + q` for `su`).
    pub fn dim(&self) -> usize {
        match *self {
            Family::SpReal { n }
            | Family::SoStar { n }
            | Family::SoEven { n }
            | Family::SoOdd { n } => n,
            Family::Su { p, q } => p + q,
        }
    }

    /// Length of the left block for `su`, `None` otherwise.
    pub fn left_block(&self) -> Option<usize> {
        match *self {
            Family::Su { p, .. } => Some(p),
            _ => None,
        }
    }

    /// Lie-algebra rank (`p + q − 1` for `su`).
    pub fn rank(&self) -> usize {
        match *self {
            Family::Su { p, q } => p + q - 1,
            _ => self.dim(),
        }
    }

    /// Number of basic Schmid modules.
    pub fn basic_count(&self) -> usize {
        match *self {
            Family::SpReal { n } => n,
            Family::SoStar { n } => n / 2,
            Family::Su { p, .. } => p,
            Family::SoEven { .. } | Family::SoOdd { .. } => 2,
        }
    }

    pub fn is_so_two(&self) -> bool {
        matches!(self, Family::SoEven { .. } | Family::SoOdd { .. })
    }

    /// Short tag used in reports: `sp`, `so*`, `su`, `so-even`, `so-odd`.
    pub fn tag(&self) -> &'static str {
        match self {
            Family::SpReal { .. } => "sp",
            Family::SoStar { .. } => "so*",
            Family::Su { .. } => "su",
            Family::SoEven { .. } => "so-even",
            Family::SoOdd { .. } => "so-odd",
        }
    }

    /// Order of the compact Weyl group `W_k`.
    pub fn weyl_order(&self) -> u128 {
        fn fact(k: usize) -> u128 {
            (1..=k as u128).product()
        }
        match *self {
            Family::SpReal { n } | Family::SoStar { n } => fact(n),
            Family::Su { p, q } => fact(p) * fact(q),
            Family::SoEven { n } => fact(n - 1) << (n - 2),
            Family::SoOdd { n } => fact(n - 1) << (n - 1),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::SpReal { n } => write!(f, "sp:{n}"),
            Family::SoStar { n } => write!(f, "so*:{n}"),
            Family::Su { p, q } => write!(f, "su:{p},{q}"),
            Family::SoEven { n } => write!(f, "so-even:{n}"),
            Family::SoOdd { n } => write!(f, "so-odd:{n}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFamily(format!("cannot parse {s:?}; expected sp:N, so*:N, su:P,Q, so-even:N or so-odd:N"));
        let (tag, args) = s.trim().split_once(':').ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        match tag {
            "sp" => Family::sp_real(num(args)?),
            "so*" => Family::so_star(num(args)?),
            "su" => {
                let (p, q) = args.split_once(',').ok_or_else(bad)?;
                Family::su(num(p)?, num(q)?)
            }
            "so-even" => Family::so_even(num(args)?),
            "so-odd" => Family::so_odd(num(args)?),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_family_and_round_trips() {
        for t in ["sp:3", "so*:4", "su:2,3", "so-even:5", "so-odd:3"] {
            let f: Family = t.parse().unwrap();
            assert_eq!(f.to_string(), t);
        }
    }

    #[test]
    fn rejects_rank_violations() {
        for t in ["sp:0", "so*:1", "su:3,2", "su:0,1", "so-even:3", "so-odd:2", "sl:3", "sp", "su:2"] {
            assert!(t.parse::<Family>().is_err(), "{t}");
        }
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(Family::SpReal { n: 4 }.weyl_order(), 24);
        assert_eq!(Family::Su { p: 2, q: 3 }.weyl_order(), 12);
        // D_3 acting on coordinates 2..4: 3! * 2^2
        assert_eq!(Family::SoEven { n: 4 }.weyl_order(), 24);
        // B_3: 3! * 2^3
        assert_eq!(Family::SoOdd { n: 4 }.weyl_order(), 48);
    }

    #[test]
    fn basic_counts() {
        assert_eq!(Family::SoStar { n: 5 }.basic_count(), 2);
        assert_eq!(Family::Su { p: 2, q: 4 }.basic_count(), 2);
        assert_eq!(Family::SoOdd { n: 7 }.basic_count(), 2);
    }
}
