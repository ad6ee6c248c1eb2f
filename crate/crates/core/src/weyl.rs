//! ρ-vectors, dominant representatives under `W_k`, shifted norms and
//! small-rank orbit enumeration.
//!
//! `W_k` acts on coordinates as follows:
//!
//! | family  | action                                                          |
//! |---------|-----------------------------------------------------------------|
//! | sp, so* | all permutations of the `n` coordinates                          |
//! | su      | permutations inside the left block and inside the right block    |
//! | so-even | coordinate 1 fixed; permutations of 2..n with an even number of sign changes |
//! | so-odd  | coordinate 1 fixed; permutations of 2..n with arbitrary sign changes |
//!
//! The dominantization routines are generic over the coordinate type so the
//! same code runs on exact rationals and on doubled machine integers.

use std::collections::BTreeSet;
use std::ops::Neg;

use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::scalar::{ratio, Scalar};
use crate::weight::Weight;

/// Default guard on `|W_k|` for orbit enumeration.
pub const DEFAULT_ORBIT_LIMIT: u128 = 1_000_000;

/// Coordinate types the Weyl action can run on.
pub trait Coord: Clone + Ord + Zero + Neg<Output = Self> {}

impl<T: Clone + Ord + Zero + Neg<Output = T>> Coord for T {}

fn abs<C: Coord>(x: &C) -> C {
    if *x < C::zero() {
        -x.clone()
    } else {
        x.clone()
    }
}

/// `2ρ` as integers.
pub fn rho_doubled(family: &Family) -> Vec<i64> {
    let n = family.dim() as i64;
    match family {
        Family::SpReal { .. } => (0..n).map(|i| 2 * (n - i)).collect(),
        Family::SoStar { .. } | Family::SoEven { .. } => (0..n).map(|i| 2 * (n - 1 - i)).collect(),
        Family::Su { .. } => (0..n).map(|i| n - 1 - 2 * i).collect(),
        Family::SoOdd { .. } => (0..n).map(|i| 2 * n - 1 - 2 * i).collect(),
    }
}

/// Half sum of positive roots.
pub fn rho(family: &Family) -> Weight {
    Weight::new(rho_doubled(family).into_iter().map(|d| ratio(d, 2)).collect())
}

/// Replaces `v` by its dominant `W_k`-conjugate.
///
/// For `so-even` with no zero among coordinates 2..n the sign of the last
/// coordinate records the parity of negative entries; with a zero present the
/// parity is absorbed and the result is nonnegative throughout.
pub fn dominate_in_place<C: Coord>(family: &Family, v: &mut [C]) {
    match *family {
        Family::SpReal { .. } | Family::SoStar { .. } => v.sort_unstable_by(|a, b| b.cmp(a)),
        Family::Su { p, .. } => {
            let (left, right) = v.split_at_mut(p);
            left.sort_unstable_by(|a, b| b.cmp(a));
            right.sort_unstable_by(|a, b| b.cmp(a));
        }
        Family::SoEven { .. } => {
            let tail = &mut v[1..];
            let zero = C::zero();
            let negatives = tail.iter().filter(|x| **x < zero).count();
            let has_zero = tail.contains(&zero);
            for x in tail.iter_mut() {
                *x = abs(x);
            }
            tail.sort_unstable_by(|a, b| b.cmp(a));
            if negatives % 2 == 1 && !has_zero {
                let last = tail.len() - 1;
                tail[last] = -tail[last].clone();
            }
        }
        Family::SoOdd { .. } => {
            let tail = &mut v[1..];
            for x in tail.iter_mut() {
                *x = abs(x);
            }
            tail.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
}

/// The unique dominant `W_k`-conjugate `v⁺`.
pub fn dominant(family: &Family, v: &Weight) -> Result<Weight> {
    v.check_len(family)?;
    let mut c = v.clone().into_coords();
    dominate_in_place(family, &mut c);
    Ok(Weight::new(c))
}

/// `Σ (v_i + ρ_i)²`.
pub fn norm_sq_shifted(family: &Family, v: &Weight) -> Result<Scalar> {
    v.check_len(family)?;
    Ok(shifted_norm_unchecked(&rho(family), v))
}

pub(crate) fn shifted_norm_unchecked(rho: &Weight, v: &Weight) -> Scalar {
    v.coords()
        .iter()
        .zip(rho.coords())
        .map(|(a, r)| {
            let s = a + r;
            &s * &s
        })
        .sum()
}

/// `4·Σ (v_i + ρ_i)²` on doubled coordinates (`2v`, `2ρ`).
pub fn norm_sq_shifted_quadrupled(v_doubled: &[i64], rho_doubled: &[i64]) -> i128 {
    v_doubled
        .iter()
        .zip(rho_doubled)
        .map(|(&a, &r)| {
            let s = (a + r) as i128;
            s * s
        })
        .sum()
}

/// An element of `W_k`: `(w·v)_i = ±v_{perm[i]}`, negated where `negate[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    perm: Vec<usize>,
    negate: Vec<bool>,
}

impl WeylElement {
    pub fn identity(family: &Family) -> Self {
        let n = family.dim();
        WeylElement { perm: (0..n).collect(), negate: vec![false; n] }
    }

    /// A uniformly random element of `W_k`.
    pub fn random<R: Rng + ?Sized>(family: &Family, rng: &mut R) -> Self {
        let mut w = WeylElement::identity(family);
        for (start, end) in permuted_blocks(family) {
            // Fisher-Yates on the block
            for i in (start + 1..end).rev() {
                let j = rng.gen_range(start..=i);
                w.perm.swap(i, j);
            }
        }
        if family.is_so_two() {
            let n = family.dim();
            for i in 1..n {
                w.negate[i] = rng.gen_bool(0.5);
            }
            if matches!(family, Family::SoEven { .. }) && w.negate[1..].iter().filter(|b| **b).count() % 2 == 1 {
                w.negate[n - 1] = !w.negate[n - 1];
            }
        }
        w
    }

    pub fn apply<C: Coord>(&self, v: &[C]) -> Vec<C> {
        self.perm
            .iter()
            .zip(&self.negate)
            .map(|(&j, &neg)| if neg { -v[j].clone() } else { v[j].clone() })
            .collect()
    }

    pub fn apply_weight(&self, v: &Weight) -> Weight {
        Weight::new(self.apply(v.coords()))
    }

    /// Every element of `W_k`, refusing when `|W_k|` exceeds `limit`.
    pub fn all(family: &Family, limit: u128) -> Result<Vec<WeylElement>> {
        let size = family.weyl_order();
        if size > limit {
            return Err(Error::OrbitTooLarge { size, limit });
        }
        let n = family.dim();
        let mut perms: Vec<Vec<usize>> = vec![(0..n).collect()];
        for (start, end) in permuted_blocks(family) {
            let mut next = Vec::with_capacity(perms.len());
            for base in &perms {
                let mut block: Vec<usize> = base[start..end].to_vec();
                loop {
                    let mut p = base.clone();
                    p[start..end].copy_from_slice(&block);
                    next.push(p);
                    if !next_permutation(&mut block) {
                        break;
                    }
                }
            }
            perms = next;
        }
        let sign_patterns: Vec<Vec<bool>> = if family.is_so_two() {
            let even_only = matches!(family, Family::SoEven { .. });
            (0u64..1 << (n - 1))
                .filter(|m| !even_only || m.count_ones() % 2 == 0)
                .map(|m| {
                    let mut neg = vec![false; n];
                    for (i, slot) in neg.iter_mut().enumerate().skip(1) {
                        *slot = m >> (i - 1) & 1 == 1;
                    }
                    neg
                })
                .collect()
        } else {
            vec![vec![false; n]]
        };
        let mut out = Vec::with_capacity(size as usize);
        for perm in &perms {
            for neg in &sign_patterns {
                out.push(WeylElement { perm: perm.clone(), negate: neg.clone() });
            }
        }
        Ok(out)
    }
}

/// Index ranges that `W_k` permutes.
fn permuted_blocks(family: &Family) -> Vec<(usize, usize)> {
    let n = family.dim();
    match *family {
        Family::SpReal { .. } | Family::SoStar { .. } => vec![(0, n)],
        Family::Su { p, .. } => vec![(0, p), (p, n)],
        Family::SoEven { .. } | Family::SoOdd { .. } => vec![(1, n)],
    }
}

/// Lexicographic successor; false once the last permutation is reached.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Distinct images `{w·v : w ∈ W_k}`, sorted.
pub fn orbit_coords<C: Coord>(family: &Family, v: &[C], limit: u128) -> Result<Vec<Vec<C>>> {
    let elements = WeylElement::all(family, limit)?;
    let set: BTreeSet<Vec<C>> = elements.iter().map(|w| w.apply(v)).collect();
    Ok(set.into_iter().collect())
}

/// The full `W_k`-orbit of `v` under the default size guard.
pub fn weyl_orbit(family: &Family, v: &Weight) -> Result<Vec<Weight>> {
    weyl_orbit_with_limit(family, v, DEFAULT_ORBIT_LIMIT)
}

pub fn weyl_orbit_with_limit(family: &Family, v: &Weight, limit: u128) -> Result<Vec<Weight>> {
    v.check_len(family)?;
    Ok(orbit_coords(family, v.coords(), limit)?.into_iter().map(Weight::new).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn w(f: &Family, t: &str) -> Weight {
        Weight::parse(f, t).unwrap()
    }

    #[test]
    fn rho_matches_table() {
        assert_eq!(rho(&Family::SpReal { n: 4 }), Weight::from_ints(&[4, 3, 2, 1]));
        let su = Family::Su { p: 2, q: 2 };
        assert_eq!(rho(&su), w(&su, "3/2,1/2|-1/2,-3/2"));
        let odd = Family::SoOdd { n: 3 };
        assert_eq!(rho(&odd), w(&odd, "5/2,3/2,1/2"));
        assert_eq!(rho(&Family::SoStar { n: 3 }), Weight::from_ints(&[2, 1, 0]));
        assert_eq!(rho(&Family::SoEven { n: 4 }), Weight::from_ints(&[3, 2, 1, 0]));
    }

    #[test]
    fn dominant_examples() {
        let sp = Family::SpReal { n: 3 };
        assert_eq!(dominant(&sp, &w(&sp, "1,3,2")).unwrap(), w(&sp, "3,2,1"));
        let d = Family::SoEven { n: 4 };
        assert_eq!(dominant(&d, &w(&d, "4,-1,0,0")).unwrap(), w(&d, "4,1,0,0"));
        assert_eq!(dominant(&d, &w(&d, "-1,-1/2,1/2,1/2")).unwrap(), w(&d, "-1,1/2,1/2,-1/2"));
        let su = Family::Su { p: 2, q: 2 };
        assert_eq!(dominant(&su, &w(&su, "0,1|-2,3")).unwrap(), w(&su, "1,0|3,-2"));
        let b = Family::SoOdd { n: 3 };
        assert_eq!(dominant(&b, &w(&b, "-9,-1,2")).unwrap(), w(&b, "-9,2,1"));
    }

    #[test]
    fn dominant_rejects_wrong_length() {
        let sp = Family::SpReal { n: 3 };
        assert!(matches!(
            dominant(&sp, &Weight::from_ints(&[1, 2])),
            Err(Error::LengthMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn shifted_norms() {
        let sp = Family::SpReal { n: 2 };
        assert_eq!(norm_sq_shifted(&sp, &Weight::zero(2)).unwrap(), int(5));
        let su = Family::Su { p: 1, q: 1 };
        assert_eq!(norm_sq_shifted(&su, &Weight::zero(2)).unwrap(), ratio(1, 2));
        let odd = Family::SoOdd { n: 3 };
        assert_eq!(norm_sq_shifted(&odd, &Weight::zero(3)).unwrap(), ratio(35, 4));
    }

    #[test]
    fn orbit_examples() {
        let sp = Family::SpReal { n: 2 };
        let orbit = weyl_orbit(&sp, &Weight::from_ints(&[1, 0])).unwrap();
        assert_eq!(orbit, vec![Weight::from_ints(&[0, 1]), Weight::from_ints(&[1, 0])]);

        // B_2 signed permutations of (1, 0) behind a fixed first coordinate
        let odd = Family::SoOdd { n: 3 };
        let c = ratio(7, 3);
        let v = Weight::new(vec![c.clone(), int(1), int(0)]);
        let got: BTreeSet<Weight> = weyl_orbit(&odd, &v).unwrap().into_iter().collect();
        let want: BTreeSet<Weight> = [[1, 0], [0, 1], [-1, 0], [0, -1]]
            .iter()
            .map(|t| Weight::new(vec![c.clone(), int(t[0]), int(t[1])]))
            .collect();
        assert_eq!(got, want);

        // D_3 on (1, 1, 0): 3 positions for the zero, 4 sign patterns of the ones
        let even = Family::SoEven { n: 4 };
        let orbit = weyl_orbit(&even, &Weight::from_ints(&[5, 1, 1, 0])).unwrap();
        assert_eq!(orbit.len(), 12);
    }

    #[test]
    fn group_enumeration_sizes() {
        for f in [
            Family::SpReal { n: 3 },
            Family::Su { p: 2, q: 3 },
            Family::SoEven { n: 5 },
            Family::SoOdd { n: 4 },
        ] {
            assert_eq!(WeylElement::all(&f, DEFAULT_ORBIT_LIMIT).unwrap().len() as u128, f.weyl_order());
        }
        assert!(matches!(
            WeylElement::all(&Family::SpReal { n: 12 }, DEFAULT_ORBIT_LIMIT),
            Err(Error::OrbitTooLarge { .. })
        ));
    }

    #[test]
    fn random_so_even_elements_flip_evenly() {
        let f = Family::SoEven { n: 6 };
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let e = WeylElement::random(&f, &mut rng);
            assert_eq!(e.negate.iter().filter(|b| **b).count() % 2, 0);
            assert!(!e.negate[0] && e.perm[0] == 0);
        }
    }

    #[test]
    fn doubled_route_matches_rational_norm() {
        let f = Family::SoOdd { n: 4 };
        let v = w(&f, "-3/2,5/2,3/2,1/2");
        let q = norm_sq_shifted_quadrupled(&v.doubled().unwrap(), &rho_doubled(&f));
        assert_eq!(Scalar::from_integer(q.into()), norm_sq_shifted(&f, &v).unwrap() * int(4));
    }
}
