//! Built-in weight grids and random generators used by `verify` and the
//! test suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::criteria::{so_case, SoCase};
use crate::family::Family;
use crate::scalar::{int, ratio, Scalar};
use crate::weight::{validate_weight, Weight};

/// Families covered by the threshold grids.
pub fn threshold_families() -> Vec<Family> {
    let mut out = Vec::new();
    out.extend((1..=4).map(|n| Family::SpReal { n }));
    out.extend((2..=5).map(|n| Family::SoStar { n }));
    for total in 2..=6 {
        for p in 1..=total / 2 {
            out.push(Family::Su { p, q: total - p });
        }
    }
    out.extend((4..=6).map(|n| Family::SoEven { n }));
    out.extend((3..=6).map(|n| Family::SoOdd { n }));
    out
}

/// Families of Lie rank at most `max_rank` (`p+q−1` for `su`).
pub fn families_up_to_rank(max_rank: usize) -> Vec<Family> {
    let mut out = Vec::new();
    out.extend((1..=max_rank).map(|n| Family::SpReal { n }));
    out.extend((2..=max_rank).map(|n| Family::SoStar { n }));
    for total in 2..=max_rank + 1 {
        for p in 1..=total / 2 {
            out.push(Family::Su { p, q: total - p });
        }
    }
    out.extend((4..=max_rank).map(|n| Family::SoEven { n }));
    out.extend((3..=max_rank).map(|n| Family::SoOdd { n }));
    out
}

/// Non-increasing tuples of length `len` drawn from `values`, which must be
/// sorted in decreasing order.
fn descending_tuples(values: &[i64], len: usize) -> Vec<Vec<i64>> {
    fn rec(values: &[i64], from: usize, len: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for k in from..values.len() {
            cur.push(values[k]);
            rec(values, k, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(values, 0, len, &mut Vec::with_capacity(len), &mut out);
    out
}

fn range_desc(lo: i64, hi: i64) -> Vec<i64> {
    (lo..=hi).rev().collect()
}

/// Doubled `so(2,·)` tails with `|coordinates| ≤ bound`, all integers or all
/// half-odd, in dominant shape.
fn so_tails(family: &Family, bound: i64) -> Vec<Vec<i64>> {
    let len = family.dim() - 1;
    let even = matches!(family, Family::SoEven { .. });
    let mut out = Vec::new();
    for parity in 0..2 {
        let abs: Vec<i64> = (0..=2 * bound).rev().filter(|x| x % 2 == parity).collect();
        for t in descending_tuples(&abs, len) {
            let flip = even && t[len - 1] != 0;
            out.push(t.clone());
            if flip {
                let mut m = t;
                m[len - 1] = -m[len - 1];
                out.push(m);
            }
        }
    }
    out
}

/// The weights on which closed-form thresholds are compared with exact margins.
///
/// * `sp`, `so*`: integer tuples with entries in `[−2n−2, 2]`
/// * `su`: integer blocks with entries in `[−3, 3]`
/// * `so(2,·)`: tails with entries in `[−3, 3]` (integers or half-integers),
///   `λ_1` in half steps over `[−2n−4, 2]`
pub fn threshold_grid(family: &Family) -> Vec<Weight> {
    match *family {
        Family::SpReal { n } | Family::SoStar { n } => {
            descending_tuples(&range_desc(-2 * n as i64 - 2, 2), n).iter().map(|v| Weight::from_ints(v)).collect()
        }
        Family::Su { p, q } => {
            let vals = range_desc(-3, 3);
            let left = descending_tuples(&vals, p);
            let right = descending_tuples(&vals, q);
            let mut out = Vec::with_capacity(left.len() * right.len());
            for l in &left {
                for r in &right {
                    let mut v = l.clone();
                    v.extend(r);
                    out.push(Weight::from_ints(&v));
                }
            }
            out
        }
        Family::SoEven { n } | Family::SoOdd { n } => {
            let n = n as i64;
            let mut out = Vec::new();
            for tail in so_tails(family, 3) {
                for l1 in -4 * n - 8..=4 {
                    let mut v = vec![l1];
                    v.extend(&tail);
                    out.push(Weight::from_doubled(&v));
                }
            }
            out
        }
    }
}

/// Valid weights with integer coordinates in `[−bound, bound]`.
pub fn integer_pool(family: &Family, bound: i64) -> Vec<Weight> {
    let vals = range_desc(-bound, bound);
    match *family {
        Family::SpReal { n } | Family::SoStar { n } => {
            descending_tuples(&vals, n).iter().map(|v| Weight::from_ints(v)).collect()
        }
        Family::Su { p, q } => {
            let mut out = Vec::new();
            for l in descending_tuples(&vals, p) {
                for r in descending_tuples(&vals, q) {
                    let mut v = l.clone();
                    v.extend(r);
                    out.push(Weight::from_ints(&v));
                }
            }
            out
        }
        Family::SoEven { .. } | Family::SoOdd { .. } => {
            let mut out = Vec::new();
            for tail in so_tails(family, bound) {
                if tail.iter().any(|x| x % 2 != 0) {
                    continue;
                }
                for l1 in -bound..=bound {
                    let mut v = vec![2 * l1];
                    v.extend(&tail);
                    out.push(Weight::from_doubled(&v));
                }
            }
            out
        }
    }
}

/// Every ordered pair from `pool` when there are at most `cap` of them,
/// otherwise `cap` pairs drawn uniformly with replacement.
pub fn pairs_capped<R: Rng + ?Sized>(pool: &[Weight], cap: usize, rng: &mut R) -> Vec<(usize, usize)> {
    let total = pool.len().saturating_mul(pool.len());
    if total <= cap {
        (0..pool.len()).flat_map(|i| (0..pool.len()).map(move |j| (i, j))).collect()
    } else {
        (0..cap).map(|_| (rng.gen_range(0..pool.len()), rng.gen_range(0..pool.len()))).collect()
    }
}

/// A positive rational in `(0, 3]` with denominator at most 4.
fn random_gap<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    let den = rng.gen_range(1..=4i64);
    ratio(rng.gen_range(1..=3 * den), den)
}

/// Non-decreasing offsets starting at 0, favouring repeats and steps of 1.
fn random_offsets<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Vec<i64> {
    let mut o = vec![0i64; len];
    for j in 1..len {
        o[j] = o[j - 1] + *[0i64, 0, 1, 1, 2, 3].choose(rng).unwrap();
    }
    o
}

/// A random weight whose strict guarantee holds (every Schmid module has
/// positive margin by the family theorem).
pub fn random_guaranteed<R: Rng + ?Sized>(family: &Family, rng: &mut R) -> Weight {
    let w = match *family {
        Family::SpReal { n } => {
            let o = random_offsets(n, rng);
            let r = o.iter().filter(|&&x| x <= 1).count() as i64;
            let l1 = ratio(-2 * n as i64 + r + 1, 2) - random_gap(rng);
            Weight::new(o.iter().map(|&x| &l1 - int(x)).collect())
        }
        Family::SoStar { n } => {
            let n_i = n as i64;
            let mut o = random_offsets(n, rng);
            let l1 = if rng.gen_bool(0.5) {
                o[1] = 0;
                for j in 2..n {
                    o[j] = o[j].max(o[j - 1]);
                }
                let p = o.iter().filter(|&&x| x == 0).count() as i64;
                int(-n_i + (p + 1) / 2 + 1) - random_gap(rng)
            } else {
                let bump = rng.gen_range(1..=3i64);
                for x in o.iter_mut().skip(1) {
                    *x += bump;
                }
                let q = 1 + o[1..].iter().filter(|&&x| x == o[1]).count() as i64;
                ratio(-2 * n_i + q + 2 + o[1], 2) - random_gap(rng)
            };
            Weight::new(o.iter().map(|&x| &l1 - int(x)).collect())
        }
        Family::Su { p, q } => {
            let n = (p + q) as i64;
            let ol = random_offsets(p, rng);
            let or = random_offsets(q, rng);
            let pp = ol.iter().filter(|&&x| x == 0).count() as i64;
            let qq = or.iter().filter(|&&x| x == 0).count() as i64;
            let den = rng.gen_range(1..=3i64);
            let l1 = ratio(rng.gen_range(-5 * den..=5 * den), den);
            let ln = &l1 - (int(-n + pp.max(qq) + 1) - random_gap(rng));
            let mut c: Vec<Scalar> = ol.iter().map(|&x| &l1 - int(x)).collect();
            c.extend(or.iter().rev().map(|&x| &ln + int(x)));
            Weight::new(c)
        }
        Family::SoEven { n } | Family::SoOdd { n } => {
            let even = matches!(family, Family::SoEven { .. });
            let n_i = n as i64;
            let len = n - 1;
            let tail2: Vec<i64> = match rng.gen_range(0..3) {
                0 => vec![0; len],
                1 => {
                    let mut t = vec![1; len];
                    if even && rng.gen_bool(0.5) {
                        t[len - 1] = -1;
                    }
                    t
                }
                _ => {
                    let parity = rng.gen_range(0..2i64);
                    let floor = parity;
                    let mut t = vec![2 * rng.gen_range(1..=4i64) + parity];
                    for _ in 1..len {
                        let last = t[t.len() - 1];
                        t.push((last - *[0i64, 0, 2, 4].choose(rng).unwrap()).max(floor));
                    }
                    if even && t[len - 1] != 0 && rng.gen_bool(0.5) {
                        t[len - 1] = -t[len - 1];
                    }
                    t
                }
            };
            let mut doubled = vec![0];
            doubled.extend(&tail2);
            let probe = Weight::from_doubled(&doubled);
            let lam2 = ratio(tail2[0], 2);
            let bound = match so_case(family, &probe).expect("generated tail is in a known case") {
                SoCase::Scalar => {
                    if even {
                        int(2 - n_i)
                    } else {
                        ratio(3 - 2 * n_i, 2)
                    }
                }
                SoCase::Spinor(_) => {
                    if even {
                        ratio(3 - 2 * n_i, 2)
                    } else {
                        int(1 - n_i)
                    }
                }
                SoCase::General { p } => int((if even { 2 } else { 1 }) + p as i64 - 2 * n_i) - lam2,
            };
            let mut c = probe.into_coords();
            c[0] = bound - random_gap(rng);
            Weight::new(c)
        }
    };
    validate_weight(family, &w).expect("generator yields valid weights");
    w
}
