//! Checkers for the two norm lemmas the threshold proofs rely on: the
//! coordinate-moving inequalities for `ρ`-shifted norms, and the orbit bound
//! `‖(w₁μ−w₂ν)⁺+ρ‖² ≥ ‖(μ−ν)⁺+ρ‖²`.

use std::collections::BTreeSet;

use rand::Rng;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::scalar::{int, ratio, Scalar};
use crate::weight::{validate_weight, Weight};
use crate::weyl::{
    self, dominate_in_place, norm_sq_shifted_quadrupled, rho, rho_doubled, WeylElement, DEFAULT_ORBIT_LIMIT,
};

/// One instance of the coordinate-moving lemma. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RedSpInstance {
    /// `μ_u = ν_u, …, μ_{v−1} = ν_{v−1}`, `μ_v < ν_v`; coordinate `v` moves to place `u`.
    MoveLeft { mu: Weight, nu: Weight, u: usize, v: usize },
    /// `μ_u > ν_u`, `μ_{u+1} = ν_{u+1}, …, μ_v = ν_v`; coordinate `u` moves to place `v`.
    MoveRight { mu: Weight, nu: Weight, u: usize, v: usize },
    /// `μ = (…, μ_u, x+1 (s times), x (t times), …)`; the two runs swap.
    PairSwitch { mu: Weight, u: usize, s: usize, t: usize },
}

impl RedSpInstance {
    pub fn part(&self) -> u8 {
        match self {
            RedSpInstance::MoveLeft { .. } => 1,
            RedSpInstance::MoveRight { .. } => 2,
            RedSpInstance::PairSwitch { .. } => 3,
        }
    }

    /// A random instance of `part` (1, 2 or 3) in dimension `n`, satisfying
    /// the hypotheses.
    pub fn random<R: Rng + ?Sized>(part: u8, n: usize, rng: &mut R) -> Result<Self> {
        let min_n = if part == 3 { 3 } else { 2 };
        if n < min_n {
            return Err(Error::InvalidArgument(format!("part {part} needs at least {min_n} coordinates")));
        }
        let den = rng.gen_range(1..=3i64);
        let offset = ratio(rng.gen_range(0..den), den);
        let to_weight = |v: &[i64]| Weight::new(v.iter().map(|&x| int(x) + &offset).collect());
        match part {
            1 | 2 => {
                let u = rng.gen_range(1..n);
                let v = rng.gen_range(u + 1..=n);
                let nu = random_strict(n, rng);
                let mut mu = nu.clone();
                let (fixed, start, end) = if part == 1 { (v - 1, u - 1, v - 1) } else { (u - 1, u, v) };
                // shared run is mu[start..end]; the free coordinate is `fixed`
                let step = rng.gen_range(1..=4i64);
                if part == 1 {
                    mu[fixed] = nu[fixed] - step;
                } else {
                    mu[fixed] = nu[fixed] + step;
                }
                // re-draw the coordinates outside the run so μ stays strictly decreasing
                let lo = start.min(fixed);
                let hi = end.max(fixed + 1);
                for j in hi..n {
                    mu[j] = mu[j - 1] - rng.gen_range(1..=3i64);
                }
                for j in (0..lo).rev() {
                    mu[j] = mu[j + 1] + rng.gen_range(1..=3i64);
                }
                let (mu, nu) = (to_weight(&mu), to_weight(&nu));
                Ok(if part == 1 {
                    RedSpInstance::MoveLeft { mu, nu, u, v }
                } else {
                    RedSpInstance::MoveRight { mu, nu, u, v }
                })
            }
            3 => {
                let s = rng.gen_range(1..=n - 2);
                let t = rng.gen_range(1..=n - 1 - s);
                let u = rng.gen_range(1..=n - s - t);
                let x = rng.gen_range(-8..=8i64);
                let mut mu: Vec<i64> = (0..n).map(|_| rng.gen_range(-10..=10)).collect();
                mu[u..u + s].fill(x + 1);
                mu[u + s..u + s + t].fill(x);
                Ok(RedSpInstance::PairSwitch { mu: to_weight(&mu), u, s, t })
            }
            _ => Err(Error::InvalidArgument(format!("no part {part}"))),
        }
    }
}

fn random_strict<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<i64> {
    let mut v = vec![rng.gen_range(-6..=6i64)];
    for _ in 1..n {
        let last = v[v.len() - 1];
        v.push(last - rng.gen_range(1..=3));
    }
    v
}

fn strictly_decreasing(w: &Weight) -> bool {
    w.coords().windows(2).all(|p| p[0] > p[1])
}

fn move_coord(w: &Weight, from: usize, to: usize) -> Weight {
    let mut c = w.coords().to_vec();
    let x = c.remove(from);
    c.insert(to, x);
    Weight::new(c)
}

fn hyp(msg: String) -> Error {
    Error::HypothesisViolated(msg)
}

/// Both sides of the lemma's inequality: `(‖μ+ρ‖²−‖ν+ρ‖², ‖μ′+ρ‖²−‖ν′+ρ‖²)`
/// for parts 1–2 and `(‖μ+ρ‖², ‖μ′+ρ‖²)` for part 3, with `ρ` of `rho_source`.
pub fn red_sp_sides(rho_source: &Family, inst: &RedSpInstance) -> Result<(Scalar, Scalar)> {
    let r = rho(rho_source);
    let n = r.len();
    let norm = |w: &Weight| weyl::shifted_norm_unchecked(&r, w);
    match inst {
        RedSpInstance::MoveLeft { mu, nu, u, v } | RedSpInstance::MoveRight { mu, nu, u, v } => {
            mu.check_len(rho_source)?;
            nu.check_len(rho_source)?;
            let (u, v) = (*u, *v);
            if !(1 <= u && u < v && v <= n) {
                return Err(hyp(format!("need 1 ≤ u < v ≤ {n}, got u={u}, v={v}")));
            }
            if !strictly_decreasing(mu) || !strictly_decreasing(nu) {
                return Err(hyp("μ and ν must be strictly decreasing".into()));
            }
            let (m, x) = (mu.coords(), nu.coords());
            let left = matches!(inst, RedSpInstance::MoveLeft { .. });
            let (run, ok) = if left { (u - 1..v - 1, m[v - 1] < x[v - 1]) } else { (u..v, m[u - 1] > x[u - 1]) };
            if !ok || run.clone().any(|j| m[j] != x[j]) {
                return Err(hyp(format!("coordinates {u}..{v} do not have the required pattern")));
            }
            let (from, to) = if left { (v - 1, u - 1) } else { (u - 1, v - 1) };
            let (mu2, nu2) = (move_coord(mu, from, to), move_coord(nu, from, to));
            Ok((norm(mu) - norm(nu), norm(&mu2) - norm(&nu2)))
        }
        RedSpInstance::PairSwitch { mu, u, s, t } => {
            mu.check_len(rho_source)?;
            let (u, s, t) = (*u, *s, *t);
            if s == 0 || t == 0 || u == 0 || u + s + t > n {
                return Err(hyp(format!("need s, t ≥ 1 and 1 ≤ u ≤ n−s−t, got u={u}, s={s}, t={t}")));
            }
            let c = mu.coords();
            let x = &c[u + s];
            let x1 = x + int(1);
            if c[u..u + s].iter().any(|y| *y != x1) || c[u + s..u + s + t].iter().any(|y| y != x) {
                return Err(hyp("μ does not contain the runs x+1 (s times), x (t times) after position u".into()));
            }
            let mut swapped = c.to_vec();
            swapped[u..u + t].fill(x.clone());
            swapped[u + t..u + s + t].fill(x1);
            Ok((norm(mu), norm(&Weight::new(swapped))))
        }
    }
}

/// Whether the strict inequality holds for `inst` with `ρ` of `rho_source`.
pub fn verify_red_sp(rho_source: &Family, inst: &RedSpInstance) -> Result<bool> {
    let (lhs, rhs) = red_sp_sides(rho_source, inst)?;
    Ok(lhs > rhs)
}

/// Reusable orbit-bound checker for one family; holds the enumerated `W_k`.
#[derive(Debug, Clone)]
pub struct GenPrvChecker {
    family: Family,
    elements: Vec<WeylElement>,
    rho: Weight,
    rho2: Vec<i64>,
}

impl GenPrvChecker {
    pub fn new(family: &Family, limit: u128) -> Result<Self> {
        Ok(GenPrvChecker {
            family: *family,
            elements: WeylElement::all(family, limit)?,
            rho: rho(family),
            rho2: rho_doubled(family),
        })
    }

    /// True iff `‖(x−y)⁺+ρ‖² ≥ ‖(μ−ν)⁺+ρ‖²` for every `x` in the orbit of `μ`
    /// and `y` in the orbit of `ν`.
    pub fn check(&self, mu: &Weight, nu: &Weight) -> Result<bool> {
        validate_weight(&self.family, mu)?;
        validate_weight(&self.family, nu)?;
        match (mu.doubled(), nu.doubled()) {
            (Some(m), Some(v)) => Ok(self.check_doubled(&m, &v)),
            _ => Ok(self.check_exact(mu, nu)),
        }
    }

    fn orbit<C: weyl::Coord>(&self, v: &[C]) -> Vec<Vec<C>> {
        let set: BTreeSet<Vec<C>> = self.elements.iter().map(|w| w.apply(v)).collect();
        set.into_iter().collect()
    }

    fn check_doubled(&self, mu: &[i64], nu: &[i64]) -> bool {
        let value = |x: &[i64], y: &[i64], buf: &mut Vec<i64>| {
            buf.clear();
            buf.extend(x.iter().zip(y).map(|(a, b)| a - b));
            dominate_in_place(&self.family, buf);
            norm_sq_shifted_quadrupled(buf, &self.rho2)
        };
        let mut buf = Vec::with_capacity(mu.len());
        let base = value(mu, nu, &mut buf);
        let ys = self.orbit(nu);
        self.orbit(mu).iter().all(|x| ys.iter().all(|y| value(x, y, &mut buf) >= base))
    }

    fn check_exact(&self, mu: &Weight, nu: &Weight) -> bool {
        let value = |x: &[Scalar], y: &[Scalar]| {
            let mut d: Vec<Scalar> = x.iter().zip(y).map(|(a, b)| a - b).collect();
            dominate_in_place(&self.family, &mut d);
            weyl::shifted_norm_unchecked(&self.rho, &Weight::new(d))
        };
        let base = value(mu.coords(), nu.coords());
        let ys = self.orbit(nu.coords());
        self.orbit(mu.coords()).iter().all(|x| ys.iter().all(|y| value(x, y) >= base))
    }
}

pub fn verify_gen_prv(family: &Family, mu: &Weight, nu: &Weight) -> Result<bool> {
    GenPrvChecker::new(family, DEFAULT_ORBIT_LIMIT)?.check(mu, nu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn fam(t: &str) -> Family {
        t.parse().unwrap()
    }

    #[test]
    fn move_left_example() {
        let inst = RedSpInstance::MoveLeft {
            mu: Weight::from_ints(&[5, 3, 0]),
            nu: Weight::from_ints(&[5, 3, 1]),
            u: 1,
            v: 3,
        };
        let sp = fam("sp:3");
        assert_eq!(red_sp_sides(&sp, &inst).unwrap(), (int(-3), int(-7)));
        assert!(verify_red_sp(&sp, &inst).unwrap());
    }

    #[test]
    fn move_right_mirror() {
        let inst = RedSpInstance::MoveRight {
            mu: Weight::from_ints(&[6, 3, 0]),
            nu: Weight::from_ints(&[5, 3, 0]),
            u: 1,
            v: 3,
        };
        assert!(verify_red_sp(&fam("sp:3"), &inst).unwrap());
    }

    #[test]
    fn pair_switch_example() {
        let inst = RedSpInstance::PairSwitch { mu: Weight::from_ints(&[9, 5, 4, 0]), u: 1, s: 1, t: 1 };
        let (l, r) = red_sp_sides(&fam("sp:4"), &inst).unwrap();
        // 2(ρ_2 − ρ_3) with ρ = (4,3,2,1)
        assert_eq!(l - r, int(2));
    }

    #[test]
    fn hypothesis_violations() {
        let sp = fam("sp:3");
        let bad = RedSpInstance::MoveLeft { mu: Weight::from_ints(&[5, 3, 2]), nu: Weight::from_ints(&[5, 3, 1]), u: 1, v: 3 };
        assert!(matches!(verify_red_sp(&sp, &bad), Err(Error::HypothesisViolated(_))));
        let flat = RedSpInstance::MoveLeft { mu: Weight::from_ints(&[3, 3, 0]), nu: Weight::from_ints(&[3, 3, 1]), u: 1, v: 3 };
        assert!(matches!(verify_red_sp(&sp, &flat), Err(Error::HypothesisViolated(_))));
        let shape = RedSpInstance::PairSwitch { mu: Weight::from_ints(&[9, 5, 5, 0]), u: 1, s: 1, t: 1 };
        assert!(matches!(verify_red_sp(&fam("sp:4"), &shape), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn random_instances_satisfy_hypotheses() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for part in 1..=3u8 {
            for n in 3..=7 {
                for _ in 0..200 {
                    let inst = RedSpInstance::random(part, n, &mut rng).unwrap();
                    assert_eq!(inst.part(), part);
                    assert!(verify_red_sp(&Family::SpReal { n }, &inst).unwrap());
                }
            }
        }
    }

    #[test]
    fn gen_prv_examples() {
        let su = fam("su:1,1");
        assert!(verify_gen_prv(&su, &Weight::parse(&su, "0|0").unwrap(), &Weight::parse(&su, "1|-1").unwrap()).unwrap());
        let sp = fam("sp:2");
        assert!(verify_gen_prv(&sp, &Weight::from_ints(&[2, 0]), &Weight::from_ints(&[2, 2])).unwrap());
        let so = fam("so-odd:3");
        assert!(verify_gen_prv(&so, &Weight::from_ints(&[-2, 1, 0]), &Weight::from_ints(&[3, 1, 1])).unwrap());
        let third = Weight::new(vec![ratio(1, 3), int(1), int(0)]);
        assert!(verify_gen_prv(&so, &third, &Weight::from_ints(&[0, 1, 1])).unwrap());
    }

    #[test]
    fn gen_prv_rejects_invalid_weights() {
        let sp = fam("sp:2");
        assert!(verify_gen_prv(&sp, &Weight::from_ints(&[0, 2]), &Weight::from_ints(&[0, 0])).is_err());
    }
}
