//! Dominant weights of `GL_n`, Bott's algorithm on Grassmannians, and the
//! character sets `B(s, n)` of the simple equivariant D-modules.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;

/// A weakly decreasing integer sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DominantWeight {
    entries: Vec<i64>,
}

impl TryFrom<Vec<i64>> for DominantWeight {
    type Error = Error;

    fn try_from(entries: Vec<i64>) -> Result<Self> {
        DominantWeight::new(entries)
    }
}

impl From<DominantWeight> for Vec<i64> {
    fn from(w: DominantWeight) -> Self {
        w.entries
    }
}

impl DominantWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(entries));
        }
        Ok(DominantWeight { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// 1-based access, matching the usual `λ_i` indexing.
    pub fn at(&self, i: usize) -> i64 {
        self.entries[i - 1]
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &DominantWeight) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| a >= b))
    }

    /// `(-λ_n, ..., -λ_1)`, so that `S_λ V = S_{λ*} V*`.
    pub fn dual(&self) -> DominantWeight {
        DominantWeight {
            entries: self.entries.iter().rev().map(|&x| -x).collect(),
        }
    }

    /// True when entries come in equal consecutive pairs `(a,a,b,b,...)`.
    pub fn is_paired(&self) -> bool {
        self.entries.len().is_multiple_of(2) && self.entries.chunks(2).all(|c| c[0] == c[1])
    }

    /// Inverse of column doubling; `None` unless [`is_paired`](Self::is_paired).
    pub fn halve_columns(&self) -> Option<DominantWeight> {
        self.is_paired().then(|| DominantWeight {
            entries: self.entries.iter().step_by(2).copied().collect(),
        })
    }

    pub fn double_columns(&self) -> DominantWeight {
        DominantWeight {
            entries: self.entries.iter().flat_map(|&x| [x, x]).collect(),
        }
    }

    pub fn max_abs(&self) -> i64 {
        self.entries.iter().map(|x| x.abs()).max().unwrap_or(0)
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BottResult {
    Zero,
    Cohomology {
        degree: usize,
        weight: DominantWeight,
    },
}

/// Bott's algorithm for `γ = (λ, μ)` on a Grassmannian of `GL_n`,
/// `n = γ.len()`.
///
/// With `ρ = (n-1, ..., 1, 0)`: if `γ + ρ` repeats an entry the cohomology
/// vanishes; otherwise it lives in the single degree given by the number of
/// out-of-order pairs of `γ + ρ`, with weight `sort(γ + ρ) - ρ`.
pub fn bott(gamma: &[i64]) -> BottResult {
    let n = gamma.len();
    let shifted: Vec<i64> = gamma
        .iter()
        .enumerate()
        .map(|(i, &g)| {
            g.checked_add((n - 1 - i) as i64)
                .expect("weight entry overflow")
        })
        .collect();

    let mut sorted = shifted.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return BottResult::Zero;
    }

    let degree = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| shifted[i] < shifted[j])
        .count();
    let entries = sorted
        .iter()
        .enumerate()
        .map(|(i, &v)| v - (n - 1 - i) as i64)
        .collect();
    BottResult::Cohomology {
        degree,
        weight: DominantWeight { entries },
    }
}

/// A run of equal entries inside a weight, with bounds on the shared value.
#[derive(Clone, Copy, Debug)]
struct Block {
    size: usize,
    lo: i64,
    hi: i64,
}

/// All weakly decreasing sequences made of the given blocks (each block a
/// constant run), with every value in `[-bound, bound]`.
fn enumerate_blocks(blocks: &[Block], bound: i64) -> Vec<Vec<i64>> {
    fn go(blocks: &[Block], cap: i64, bound: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let Some((first, rest)) = blocks.split_first() else {
            out.push(prefix.clone());
            return;
        };
        let lo = first.lo.max(-bound);
        let hi = first.hi.min(bound).min(cap);
        for v in (lo..=hi).rev() {
            let len = prefix.len();
            prefix.extend(std::iter::repeat_n(v, first.size));
            go(rest, v, bound, prefix, out);
            prefix.truncate(len);
        }
    }
    let mut out = Vec::new();
    go(blocks, i64::MAX, bound, &mut Vec::new(), &mut out);
    out
}

fn check_b_args(s: i64, n: i64) -> Result<(usize, usize)> {
    if n < 0 || s < 0 || s > n / 2 {
        return Err(Error::range(
            "B(s, n)",
            format!("s = {s}, n = {n}; need 0 <= s <= n/2"),
        ));
    }
    Ok((s as usize, n as usize))
}

/// Membership in `B(s, n)`, checked directly against the defining
/// conditions. Returns `false` for weights of the wrong length.
pub fn in_b_set(s: usize, n: usize, weight: &DominantWeight) -> bool {
    if weight.len() != n || s > n / 2 {
        return false;
    }
    let m = n / 2;
    let l = |i: usize| weight.at(i);
    let s_i = s as i64;
    if n.is_multiple_of(2) {
        let paired = (1..=m).all(|i| l(2 * i - 1) == l(2 * i));
        let lower = s == 0 || l(2 * s) >= 2 * s_i - 1;
        let upper = s == m || l(2 * s + 1) <= 2 * s_i;
        paired && lower && upper
    } else {
        l(2 * s + 1) == 2 * s_i
            && (1..=s).all(|i| l(2 * i - 1) == l(2 * i))
            && (s + 1..=m).all(|i| l(2 * i) == l(2 * i + 1))
    }
}

/// Weights of `B(s, n)` with every entry in `[-bound, bound]`.
///
/// For `n = 2m`: paired entries, `λ_{2s} >= 2s - 1`, `λ_{2s+1} <= 2s`.
/// For `n = 2m + 1`: `λ_{2s+1} = 2s`, pairs `(λ_{2i-1}, λ_{2i})` for
/// `i <= s` and `(λ_{2i}, λ_{2i+1})` for `i > s`.
pub fn enumerate_b_set(s: i64, n: i64, bound: i64) -> Result<Vec<DominantWeight>> {
    let (s, n) = check_b_args(s, n)?;
    if bound < 0 {
        return Err(Error::range("bound", format!("{bound}, expected >= 0")));
    }
    let m = n / 2;
    let free = Block {
        size: 2,
        lo: i64::MIN,
        hi: i64::MAX,
    };
    let s_i = s as i64;
    let mut blocks = vec![free; m];
    if n % 2 == 0 {
        if s >= 1 {
            blocks[s - 1].lo = 2 * s_i - 1;
        }
        if s < m {
            blocks[s].hi = 2 * s_i;
        }
    } else {
        blocks.insert(
            s,
            Block {
                size: 1,
                lo: 2 * s_i,
                hi: 2 * s_i,
            },
        );
    }
    Ok(enumerate_blocks(&blocks, bound)
        .into_iter()
        .map(|entries| DominantWeight { entries })
        .collect())
}

/// All paired dominant weights `ν^{(2)}` of length `2 * half_len` with
/// entries in `[-bound, bound]`.
pub fn enumerate_paired(half_len: usize, bound: i64) -> Vec<DominantWeight> {
    let free = Block {
        size: 2,
        lo: i64::MIN,
        hi: i64::MAX,
    };
    enumerate_blocks(&vec![free; half_len], bound)
        .into_iter()
        .map(|entries| DominantWeight { entries })
        .collect()
}

/// Outcome of a pushforward sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PushforwardReport {
    pub m: usize,
    pub p: usize,
    pub bound: i64,
    pub checked: usize,
    pub zero: usize,
    pub nonzero: usize,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

/// Pushes `B(m-p, 2m)` forward along the Grassmannian `Gr(2m, 2m+1)`:
/// for each `λ`, runs Bott on `(λ*, 0)` and checks that every surviving
/// weight sits in degree `2m - 2p` with dual in `B(m-p, 2m+1)`.
///
/// The map on survivors must be injective, and its image must contain the
/// whole `B(m-p, 2m+1)` window of radius `bound - 1` while staying inside
/// the window of radius `bound`.
pub fn verify_pushforward(m: usize, p: usize, bound: i64, exec: Exec) -> Result<PushforwardReport> {
    if p > m {
        return Err(Error::range("pushforward", format!("p = {p} > m = {m}")));
    }
    if bound < (2 * m as i64).max(1) {
        return Err(Error::range("bound", format!("{bound} < 2m = {}", 2 * m)));
    }
    let s = m - p;
    let expected_degree = 2 * m - 2 * p;
    let lambdas = enumerate_b_set(s as i64, 2 * m as i64, bound)?;

    let outcomes = exec.map(&lambdas, |lambda| {
        let mut gamma = lambda.dual().entries;
        gamma.push(0);
        match bott(&gamma) {
            BottResult::Zero => Ok(None),
            BottResult::Cohomology { degree, weight } => {
                let image = weight.dual();
                if degree != expected_degree {
                    Err(format!(
                        "λ = {lambda}: degree {degree}, expected {expected_degree}"
                    ))
                } else if !in_b_set(s, 2 * m + 1, &image) {
                    Err(format!(
                        "λ = {lambda}: image {image} not in B({s}, {})",
                        2 * m + 1
                    ))
                } else {
                    Ok(Some(image))
                }
            }
        }
    });

    let mut report = PushforwardReport {
        m,
        p,
        bound,
        checked: lambdas.len(),
        zero: 0,
        nonzero: 0,
        pass: true,
        failure: None,
    };
    let mut images = BTreeSet::new();
    for outcome in outcomes {
        match outcome {
            Ok(None) => report.zero += 1,
            Ok(Some(image)) => {
                report.nonzero += 1;
                if !images.insert(image.clone()) {
                    report
                        .failure
                        .get_or_insert(format!("image {image} hit twice"));
                }
            }
            Err(msg) => {
                report.failure.get_or_insert(msg);
            }
        }
    }

    if report.failure.is_none() {
        let outer: BTreeSet<_> = enumerate_b_set(s as i64, 2 * m as i64 + 1, bound)?
            .into_iter()
            .collect();
        let inner = enumerate_b_set(s as i64, 2 * m as i64 + 1, bound - 1)?;
        if let Some(stray) = images.iter().find(|w| !outer.contains(*w)) {
            report.failure = Some(format!("image {stray} outside the radius-{bound} window"));
        } else if let Some(missed) = inner.iter().find(|w| !images.contains(*w)) {
            report.failure = Some(format!("{missed} in B({s}, {}) is not hit", 2 * m + 1));
        }
    }
    report.pass = report.failure.is_none();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(entries: &[i64]) -> DominantWeight {
        DominantWeight::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn bott_examples() {
        assert_eq!(
            bott(&[0, 0, 0]),
            BottResult::Cohomology {
                degree: 0,
                weight: w(&[0, 0, 0])
            }
        );
        assert_eq!(bott(&[-1, -1, 0]), BottResult::Zero);
        assert_eq!(
            bott(&[-3, -3, 0]),
            BottResult::Cohomology {
                degree: 2,
                weight: w(&[-2, -2, -2])
            }
        );
    }

    #[test]
    fn bott_dominant_input_is_fixed() {
        for gamma in [vec![5, 3, 3, 0], vec![0, -1, -7], vec![2]] {
            assert_eq!(
                bott(&gamma),
                BottResult::Cohomology {
                    degree: 0,
                    weight: w(&gamma)
                }
            );
        }
    }

    #[test]
    fn dual_examples() {
        assert_eq!(w(&[2, 2, 2]).dual(), w(&[-2, -2, -2]));
        assert_eq!(w(&[3, 1]).dual(), w(&[-1, -3]));
        let l = w(&[4, 1, 0, -2]);
        assert_eq!(l.dual().dual(), l);
    }

    #[test]
    fn b_set_examples() {
        assert_eq!(
            enumerate_b_set(1, 2, 3).unwrap(),
            vec![w(&[3, 3]), w(&[2, 2]), w(&[1, 1])]
        );
        let b0 = enumerate_b_set(0, 4, 3).unwrap();
        assert!(!b0.is_empty());
        assert!(b0.iter().all(|l| l.at(1) <= 0 && l.is_paired()));
        assert!(enumerate_b_set(1, 3, 3).unwrap().contains(&w(&[2, 2, 2])));
        assert!(enumerate_b_set(2, 3, 3).is_err());
        assert!(enumerate_b_set(-1, 3, 3).is_err());
        assert!(enumerate_b_set(0, 2, -1).is_err());
        // only the zero weight fits a window of radius 0
        assert_eq!(
            enumerate_b_set(0, 1, 0).unwrap(),
            vec![DominantWeight::new(vec![0]).unwrap()]
        );
        assert!(enumerate_b_set(1, 2, 0).unwrap().is_empty());
    }

    #[test]
    fn enumeration_agrees_with_membership() {
        for n in 0..=5i64 {
            for s in 0..=n / 2 {
                let bound = 3;
                let listed: BTreeSet<_> =
                    enumerate_b_set(s, n, bound).unwrap().into_iter().collect();
                // brute force over the whole dominant window
                let all = enumerate_blocks(
                    &vec![
                        Block {
                            size: 1,
                            lo: i64::MIN,
                            hi: i64::MAX
                        };
                        n as usize
                    ],
                    bound,
                );
                let brute: BTreeSet<_> = all
                    .into_iter()
                    .map(|entries| DominantWeight { entries })
                    .filter(|l| in_b_set(s as usize, n as usize, l))
                    .collect();
                assert_eq!(listed, brute, "n={n} s={s}");
            }
        }
    }

    #[test]
    fn pushforward_m1() {
        let r = verify_pushforward(1, 0, 6, Exec::Sequential).unwrap();
        assert!(r.pass, "{r:?}");
        // (t,t) for t in 1..=6; t = 1, 2 vanish
        assert_eq!((r.checked, r.zero, r.nonzero), (6, 2, 4));
        for t in 3..=6 {
            let BottResult::Cohomology { degree, weight } = bott(&[-t, -t, 0]) else {
                panic!("t = {t} should survive");
            };
            assert_eq!(degree, 2);
            assert_eq!(weight.dual(), w(&[t - 1, t - 1, 2]));
        }

        let r = verify_pushforward(1, 1, 6, Exec::Sequential).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.zero, 0);
    }

    #[test]
    fn pushforward_p_equals_m_zero_weight() {
        for m in 0..=3 {
            assert_eq!(
                bott(&vec![0; 2 * m + 1]),
                BottResult::Cohomology {
                    degree: 0,
                    weight: w(&vec![0; 2 * m + 1])
                }
            );
            assert!(
                verify_pushforward(m, m, 2 * m as i64 + 2, Exec::Sequential)
                    .unwrap()
                    .pass
            );
        }
    }

    #[test]
    fn pushforward_rejects_bad_input() {
        assert!(verify_pushforward(2, 3, 10, Exec::Sequential).is_err());
        assert!(verify_pushforward(0, 0, 1, Exec::Sequential).unwrap().pass);
        assert!(verify_pushforward(2, 1, 3, Exec::Sequential).is_err());
    }

    #[test]
    fn report_json_schema() {
        let r = verify_pushforward(1, 0, 6, Exec::Sequential).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        let keys: BTreeSet<_> = v.as_object().unwrap().keys().cloned().collect();
        let expected: BTreeSet<_> = ["m", "p", "bound", "checked", "zero", "nonzero", "pass"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(keys, expected);
    }
}
