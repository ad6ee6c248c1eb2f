//! Schmid modules as nonnegative combinations of the basic ones.
//!
//! Basic modules per family (`s_i`, 1-based):
//!
//! * `sp`: `(2,…,2,0,…,0)` with `i` twos, `i = 1..n`
//! * `so*`: `(1,…,1,0,…,0)` with `2i` ones, `i = 1..⌊n/2⌋`
//! * `su`: `(1,…,1,0,…,0 | 0,…,0,−1,…,−1)` with `i` entries on each side, `i = 1..p`
//! * `so-even`, `so-odd`: `s_1 = (1,1,0,…)`, `s_2 = (2,0,…)`; the pair of
//!   coefficients `(a, b)` gives `s_{a,b} = (2b+a, a, 0, …)`
//!
//! The level of `Σ c_i s_i` is `Σ i·c_i`, the symmetric-algebra degree in
//! which the K-type first appears. For the `so(2,·)` families this is `a + 2b`.

use std::fmt;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchmidCoeffs {
    family: Family,
    coeffs: Vec<u64>,
}

impl SchmidCoeffs {
    pub fn new(family: Family, coeffs: Vec<u64>) -> Result<Self> {
        let m = family.basic_count();
        if coeffs.len() != m {
            return Err(Error::LengthMismatch { expected: m, found: coeffs.len() });
        }
        Ok(SchmidCoeffs { family, coeffs })
    }

    pub fn zero(family: Family) -> Self {
        SchmidCoeffs { family, coeffs: vec![0; family.basic_count()] }
    }

    /// The basic module `s_i` (1-based) as a coefficient vector.
    pub fn basic(family: Family, i: usize) -> Result<Self> {
        let m = family.basic_count();
        if i == 0 || i > m {
            return Err(Error::IndexOutOfRange { index: i, max: m });
        }
        let mut coeffs = vec![0; m];
        coeffs[i - 1] = 1;
        Ok(SchmidCoeffs { family, coeffs })
    }

    /// `s_{a,b}` for the `so(2,·)` families.
    pub fn so_pair(family: Family, a: u64, b: u64) -> Result<Self> {
        if !family.is_so_two() {
            return Err(Error::NotApplicable(format!("(a, b) coefficients are only defined for so(2,·), not {family}")));
        }
        Ok(SchmidCoeffs { family, coeffs: vec![a, b] })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn level(&self) -> u64 {
        self.coeffs.iter().enumerate().map(|(i, &c)| (i as u64 + 1) * c).sum()
    }

    /// Integer coordinates of `Σ c_i s_i`.
    pub fn materialize_ints(&self) -> Vec<i64> {
        let mut out = vec![0i64; self.family.dim()];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, b) in out.iter_mut().zip(basic_ints(&self.family, i + 1)) {
                *o += c as i64 * b;
            }
        }
        out
    }

    pub fn materialize(&self) -> Weight {
        Weight::from_ints(&self.materialize_ints())
    }

    pub fn checked_add(&self, other: &SchmidCoeffs) -> Result<SchmidCoeffs> {
        if self.family != other.family {
            return Err(Error::InvalidArgument(format!("cannot add Schmid modules of {} and {}", self.family, other.family)));
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(SchmidCoeffs { family: self.family, coeffs })
    }

    /// Recovers the coefficients from a materialized Schmid weight.
    pub fn from_weight(family: Family, w: &Weight) -> Result<Self> {
        w.check_len(&family)?;
        let not_schmid = |reason: &str| Error::NotSchmid { family: family.to_string(), reason: reason.to_string() };
        let ints: Vec<i64> = w
            .coords()
            .iter()
            .map(|c| {
                if c.is_integer() {
                    num_traits::ToPrimitive::to_i64(&c.to_integer()).ok_or_else(|| not_schmid("coordinate out of range"))
                } else {
                    Err(not_schmid("coordinates must be integers"))
                }
            })
            .collect::<Result<_>>()?;
        // b-parametrization read off the relevant coordinates
        let b: Vec<i64> = match family {
            Family::SpReal { .. } => {
                if ints.iter().any(|x| x % 2 != 0) {
                    return Err(not_schmid("coordinates must be even"));
                }
                ints.iter().map(|x| x / 2).collect()
            }
            Family::SoStar { n } => (0..n / 2).map(|i| ints[2 * i]).collect(),
            Family::Su { p, .. } => ints[..p].to_vec(),
            Family::SoEven { .. } | Family::SoOdd { .. } => {
                let a = ints[1];
                let twice_b = ints[0] - a;
                if a < 0 || twice_b < 0 || twice_b % 2 != 0 {
                    return Err(not_schmid("expected (2b+a, a, 0, …) with a, b ≥ 0"));
                }
                let sc = SchmidCoeffs { family, coeffs: vec![a as u64, (twice_b / 2) as u64] };
                return if sc.materialize_ints() == ints { Ok(sc) } else { Err(not_schmid("expected (2b+a, a, 0, …)")) };
            }
        };
        let mut coeffs = Vec::with_capacity(b.len());
        for i in 0..b.len() {
            let next = b.get(i + 1).copied().unwrap_or(0);
            let c = b[i] - next;
            if c < 0 || next < 0 {
                return Err(not_schmid("parameters must be non-increasing and nonnegative"));
            }
            coeffs.push(c as u64);
        }
        let sc = SchmidCoeffs { family, coeffs };
        if sc.materialize_ints() != ints {
            return Err(not_schmid("weight does not have the Schmid shape"));
        }
        Ok(sc)
    }

    /// Parses `c1,c2,…` or `weight:<weight text>`.
    pub fn parse(family: Family, text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some(w) = text.strip_prefix("weight:") {
            let weight = Weight::parse(&family, w)?;
            return SchmidCoeffs::from_weight(family, &weight);
        }
        let coeffs = text
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| Error::Parse(format!("invalid Schmid coefficient {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        SchmidCoeffs::new(family, coeffs)
    }

    /// `c1,c2,…`
    pub fn to_text(&self) -> String {
        self.coeffs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for SchmidCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

fn basic_ints(family: &Family, i: usize) -> Vec<i64> {
    let n = family.dim();
    let mut v = vec![0i64; n];
    match *family {
        Family::SpReal { .. } => v[..i].fill(2),
        Family::SoStar { .. } => v[..2 * i].fill(1),
        Family::Su { .. } => {
            v[..i].fill(1);
            v[n - i..].fill(-1);
        }
        Family::SoEven { .. } | Family::SoOdd { .. } => {
            if i == 1 {
                v[0] = 1;
                v[1] = 1;
            } else {
                v[0] = 2;
            }
        }
    }
    v
}

/// Weight of the basic module `s_i` (1-based).
pub fn basic_schmid(family: &Family, i: usize) -> Result<Weight> {
    Ok(SchmidCoeffs::basic(*family, i)?.materialize())
}

/// Order of coefficient vectors inside one level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WithinLevelOrder {
    /// Larger leading coefficients first; the default.
    #[default]
    LexDescending,
    LexAscending,
}

/// Every nonzero Schmid module with level `≤ cap`, by nondecreasing level and
/// descending lexicographic order on the coefficients within a level.
pub fn enumerate_by_level(family: &Family, cap: u64) -> LevelEnumerator {
    enumerate_by_level_with(family, cap, WithinLevelOrder::default())
}

pub fn enumerate_by_level_with(family: &Family, cap: u64, order: WithinLevelOrder) -> LevelEnumerator {
    LevelEnumerator { family: *family, cap, order, level: 0, pending: Vec::new() }
}

/// Streams Schmid modules level by level; see [`enumerate_by_level`].
#[derive(Debug, Clone)]
pub struct LevelEnumerator {
    family: Family,
    cap: u64,
    order: WithinLevelOrder,
    level: u64,
    // current level, stored reversed so `pop` yields the next item
    pending: Vec<Vec<u64>>,
}

impl LevelEnumerator {
    /// All modules of exactly `level`, in the configured order.
    pub fn modules_at(family: &Family, level: u64, order: WithinLevelOrder) -> Vec<SchmidCoeffs> {
        let mut out = Vec::new();
        let mut cur = vec![0u64; family.basic_count()];
        fill_level(&mut cur, 0, level, &mut out);
        if order == WithinLevelOrder::LexAscending {
            out.reverse();
        }
        out.into_iter().map(|coeffs| SchmidCoeffs { family: *family, coeffs }).collect()
    }
}

// Writes every vector with Σ (i+1)·c_i = remaining over positions pos.., in
// descending lexicographic order.
fn fill_level(cur: &mut Vec<u64>, pos: usize, remaining: u64, out: &mut Vec<Vec<u64>>) {
    let weight = pos as u64 + 1;
    if pos + 1 == cur.len() {
        if remaining.is_multiple_of(weight) {
            cur[pos] = remaining / weight;
            out.push(cur.clone());
        }
        return;
    }
    for c in (0..=remaining / weight).rev() {
        cur[pos] = c;
        fill_level(cur, pos + 1, remaining - c * weight, out);
    }
    cur[pos] = 0;
}

impl Iterator for LevelEnumerator {
    type Item = SchmidCoeffs;

    fn next(&mut self) -> Option<SchmidCoeffs> {
        while self.pending.is_empty() {
            if self.level >= self.cap {
                return None;
            }
            self.level += 1;
            let mut batch: Vec<Vec<u64>> = LevelEnumerator::modules_at(&self.family, self.level, self.order)
                .into_iter()
                .map(|s| s.coeffs)
                .collect();
            batch.reverse();
            self.pending = batch;
        }
        self.pending.pop().map(|coeffs| SchmidCoeffs { family: self.family, coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn fam(t: &str) -> Family {
        t.parse().unwrap()
    }

    #[test]
    fn basic_schmid_weights() {
        assert_eq!(basic_schmid(&fam("sp:4"), 2).unwrap(), Weight::from_ints(&[2, 2, 0, 0]));
        assert_eq!(basic_schmid(&fam("su:2,3"), 1).unwrap(), Weight::from_ints(&[1, 0, 0, 0, -1]));
        assert_eq!(basic_schmid(&fam("so-even:5"), 2).unwrap(), Weight::from_ints(&[2, 0, 0, 0, 0]));
        assert_eq!(basic_schmid(&fam("so*:5"), 2).unwrap(), Weight::from_ints(&[1, 1, 1, 1, 0]));
        assert!(matches!(basic_schmid(&fam("so*:5"), 3), Err(Error::IndexOutOfRange { index: 3, max: 2 })));
        assert!(basic_schmid(&fam("sp:2"), 0).is_err());
    }

    #[test]
    fn materialize_examples() {
        let sp = fam("sp:4");
        assert_eq!(SchmidCoeffs::new(sp, vec![1, 1, 0, 0]).unwrap().materialize(), Weight::from_ints(&[4, 2, 0, 0]));
        let d = fam("so-even:4");
        assert_eq!(SchmidCoeffs::so_pair(d, 1, 1).unwrap().materialize(), Weight::from_ints(&[3, 1, 0, 0]));
        let su = fam("su:2,3");
        assert_eq!(SchmidCoeffs::new(su, vec![2, 1]).unwrap().materialize(), Weight::from_ints(&[3, 1, 0, -1, -3]));
    }

    #[test]
    fn levels() {
        assert_eq!(SchmidCoeffs::new(fam("sp:4"), vec![1, 1, 0, 0]).unwrap().level(), 3);
        assert_eq!(SchmidCoeffs::so_pair(fam("so-even:4"), 1, 1).unwrap().level(), 3);
        for f in ["sp:3", "so*:4", "su:2,2", "so-odd:3"] {
            assert_eq!(SchmidCoeffs::zero(fam(f)).level(), 0);
        }
    }

    #[test]
    fn enumeration_examples() {
        let sp = fam("sp:2");
        let got: Vec<Vec<u64>> = enumerate_by_level(&sp, 1).map(|s| s.coeffs).collect();
        assert_eq!(got, vec![vec![1, 0]]);
        let got: Vec<Vec<u64>> = enumerate_by_level(&sp, 2).map(|s| s.coeffs).collect();
        assert_eq!(got, vec![vec![1, 0], vec![2, 0], vec![0, 1]]);
        let odd = fam("so-odd:3");
        let got: Vec<Vec<u64>> = enumerate_by_level(&odd, 2).map(|s| s.coeffs).collect();
        assert_eq!(got, vec![vec![1, 0], vec![2, 0], vec![0, 1]]);
        assert_eq!(enumerate_by_level(&sp, 0).count(), 0);
    }

    #[test]
    fn ascending_order_reverses_each_level() {
        let sp = fam("sp:2");
        let got: Vec<Vec<u64>> = enumerate_by_level_with(&sp, 2, WithinLevelOrder::LexAscending).map(|s| s.coeffs).collect();
        assert_eq!(got, vec![vec![1, 0], vec![0, 1], vec![2, 0]]);
    }

    // Independent oracle: every vector in the box [0, cap]^m filtered by level.
    fn brute_force(f: &Family, cap: u64) -> BTreeSet<Vec<u64>> {
        let m = f.basic_count();
        let mut out = BTreeSet::new();
        let total = (cap + 1).pow(m as u32);
        for code in 0..total {
            let mut x = code;
            let v: Vec<u64> = (0..m)
                .map(|_| {
                    let d = x % (cap + 1);
                    x /= cap + 1;
                    d
                })
                .collect();
            let level: u64 = v.iter().enumerate().map(|(i, c)| (i as u64 + 1) * c).sum();
            if level > 0 && level <= cap {
                out.insert(v);
            }
        }
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for f in ["sp:1", "sp:3", "sp:4", "so*:5", "su:2,3", "su:3,3", "so-even:4", "so-odd:6"] {
            let f = fam(f);
            for cap in 0..=7 {
                let items: Vec<SchmidCoeffs> = enumerate_by_level(&f, cap).collect();
                let levels: Vec<u64> = items.iter().map(|s| s.level()).collect();
                assert!(levels.windows(2).all(|w| w[0] <= w[1]), "{f} cap {cap}");
                let set: BTreeSet<Vec<u64>> = items.iter().map(|s| s.coeffs.clone()).collect();
                assert_eq!(set.len(), items.len(), "duplicates for {f}");
                assert_eq!(set, brute_force(&f, cap), "{f} cap {cap}");
            }
        }
    }

    #[test]
    fn parse_and_weight_form() {
        let su = fam("su:2,3");
        assert_eq!(SchmidCoeffs::parse(su, "2,1").unwrap().coeffs(), &[2, 1]);
        assert_eq!(SchmidCoeffs::parse(su, "weight:3,1|0,-1,-3").unwrap().coeffs(), &[2, 1]);
        assert!(matches!(SchmidCoeffs::parse(su, "weight:3,1|0,-2,-3"), Err(Error::NotSchmid { .. })));
        let d = fam("so-even:4");
        assert_eq!(SchmidCoeffs::parse(d, "weight:3,1,0,0").unwrap().coeffs(), &[1, 1]);
        assert!(SchmidCoeffs::parse(d, "weight:2,1,0,0").is_err());
        assert!(SchmidCoeffs::parse(d, "1,-1").is_err());
        assert!(SchmidCoeffs::parse(d, "1,1,1").is_err());
        let sp = fam("sp:3");
        assert!(SchmidCoeffs::parse(sp, "weight:4,3,0").is_err());
        assert!(SchmidCoeffs::parse(sp, "weight:2,4,0").is_err());
        let so = fam("so*:5");
        assert_eq!(SchmidCoeffs::parse(so, "weight:3,3,1,1,0").unwrap().coeffs(), &[2, 1]);
        assert!(SchmidCoeffs::parse(so, "weight:3,3,1,1,1").is_err());
    }

    fn arb_family() -> impl Strategy<Value = Family> {
        prop_oneof![
            (1usize..6).prop_map(|n| Family::SpReal { n }),
            (2usize..7).prop_map(|n| Family::SoStar { n }),
            (1usize..4, 0usize..3).prop_map(|(p, d)| Family::Su { p, q: p + d }),
            (4usize..7).prop_map(|n| Family::SoEven { n }),
            (3usize..7).prop_map(|n| Family::SoOdd { n }),
        ]
    }

    fn arb_pair() -> impl Strategy<Value = (SchmidCoeffs, SchmidCoeffs)> {
        arb_family().prop_flat_map(|f| {
            let m = f.basic_count();
            (prop::collection::vec(0u64..5, m), prop::collection::vec(0u64..5, m))
                .prop_map(move |(x, y)| (SchmidCoeffs::new(f, x).unwrap(), SchmidCoeffs::new(f, y).unwrap()))
        })
    }

    fn has_schmid_shape(f: &Family, v: &[i64]) -> bool {
        let desc = |s: &[i64]| s.windows(2).all(|w| w[0] >= w[1]);
        match *f {
            Family::SpReal { .. } => desc(v) && v.iter().all(|x| *x >= 0 && x % 2 == 0),
            Family::SoStar { n } => {
                desc(v) && v.iter().all(|x| *x >= 0) && (0..n / 2).all(|i| v[2 * i] == v[2 * i + 1]) && (n % 2 == 0 || v[n - 1] == 0)
            }
            Family::Su { p, q } => {
                let n = p + q;
                desc(&v[..p])
                    && v[p - 1] >= 0
                    && (0..p).all(|i| v[n - 1 - i] == -v[i])
                    && v[p..n - p].iter().all(|x| *x == 0)
            }
            Family::SoEven { .. } | Family::SoOdd { .. } => {
                v[1] >= 0 && v[0] >= v[1] && (v[0] - v[1]) % 2 == 0 && v[2..].iter().all(|x| *x == 0)
            }
        }
    }

    proptest! {
        #[test]
        fn materialize_and_level_are_additive((x, y) in arb_pair()) {
            let sum = x.checked_add(&y).unwrap();
            prop_assert_eq!(sum.materialize(), &x.materialize() + &y.materialize());
            prop_assert_eq!(sum.level(), x.level() + y.level());
            prop_assert_eq!(x.level() == 0, x.is_zero());
        }

        #[test]
        fn materialized_weights_have_schmid_shape_and_invert((x, _y) in arb_pair()) {
            let ints = x.materialize_ints();
            prop_assert!(has_schmid_shape(x.family(), &ints), "{:?}", ints);
            prop_assert_eq!(SchmidCoeffs::from_weight(*x.family(), &x.materialize()).unwrap(), x);
        }
    }
}
