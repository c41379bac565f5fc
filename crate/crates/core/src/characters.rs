//! GL-characters of the equivariant modules on skew-symmetric matrices,
//! as membership predicates on dominant weights.
//!
//! All of these modules are multiplicity-free, so a module is determined by
//! which `S_μ W` occur in it. Weights passed to [`CharSpec::contains`] are
//! always `W`-weights; conditions stated for `W*` go through
//! [`DominantWeight::dual`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::partitions::Partition;
use crate::weights::{enumerate_paired, in_b_set, DominantWeight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharKind {
    /// The invariant ideal `I_z` generated by `S_{z^(2)} W`, `z ∈ P(m)`.
    IdealI(Partition),
    /// `N_{k,e} = I_{(m-k) x e} ⊗ Pf^{-e-2k}` (even `n` only).
    ModuleN { k: usize, e: usize },
    /// The D-submodule `<Pf^{-2k}>` of the localization (even `n` only).
    PfPole { k: usize },
    /// The simple module `D_s`.
    SimpleD { s: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSpec {
    kind: CharKind,
    n: usize,
}

impl CharSpec {
    pub fn new(kind: CharKind, n: usize) -> Result<Self> {
        let m = n / 2;
        let even = n.is_multiple_of(2);
        match &kind {
            CharKind::IdealI(z) if z.len() != m => {
                return Err(Error::LengthMismatch {
                    left: z.len(),
                    right: m,
                })
            }
            CharKind::ModuleN { .. } | CharKind::PfPole { .. } if !even => {
                return Err(Error::Parity(format!("{kind:?} needs even n, got n = {n}")))
            }
            CharKind::ModuleN { k, e } if *k + 1 > m || *e < 1 => {
                return Err(Error::range(
                    "N_{k,e}",
                    format!("k = {k}, e = {e}, m = {m}"),
                ))
            }
            CharKind::PfPole { k } if *k + 1 > m => {
                return Err(Error::range("<Pf^-2k>", format!("k = {k}, m = {m}")))
            }
            CharKind::SimpleD { s } if *s > m => {
                return Err(Error::range("D_s", format!("s = {s}, m = {m}")))
            }
            _ => {}
        }
        Ok(CharSpec { kind, n })
    }

    pub fn kind(&self) -> &CharKind {
        &self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether `S_μ W` occurs in the module. Weights of the wrong length or
    /// shape simply return `false`.
    pub fn contains(&self, mu: &DominantWeight) -> bool {
        if mu.len() != self.n {
            return false;
        }
        let m = self.n / 2;
        match &self.kind {
            CharKind::IdealI(z) => {
                // S_{x^(2)} W, padded with a trailing zero when n is odd
                let paired = &mu.entries()[..2 * m];
                if self.n % 2 == 1 && mu.entries()[2 * m] != 0 {
                    return false;
                }
                let Some(half) = DominantWeight::new(paired.to_vec())
                    .ok()
                    .and_then(|w| w.halve_columns())
                else {
                    return false;
                };
                half.entries()
                    .iter()
                    .zip(z.parts())
                    .all(|(&x, &zi)| x >= 0 && x >= i64::from(zi))
            }
            CharKind::ModuleN { k, e } => {
                let Some(nu) = mu.halve_columns() else {
                    return false;
                };
                let (k, e) = (*k as i64, *e as i64);
                nu.entries().iter().enumerate().all(|(i, &v)| {
                    let floor = if (i as i64) < m as i64 - k {
                        -2 * k
                    } else {
                        -e - 2 * k
                    };
                    v >= floor
                })
            }
            CharKind::PfPole { k } => {
                let lambda = mu.dual();
                lambda.is_paired() && lambda.at(2 * k + 1) <= 2 * *k as i64
            }
            CharKind::SimpleD { s } => in_b_set(m - s, self.n, &mu.dual()),
        }
    }
}

/// Witness range for the direct limit over `e`: once `e` exceeds every
/// entry in absolute value, membership in `N_{k,e}` no longer changes.
pub fn limit_witness_bound(m: usize, bound: i64) -> usize {
    (2 * bound + 4 * m as i64) as usize
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitReport {
    pub m: usize,
    pub k: usize,
    pub bound: i64,
    pub checked: usize,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

/// Bounded check that `<Pf^{-2k}>` is the union of the `N_{k,e}`, and that
/// `N_{k,e} ⊆ N_{k,e+1}` and `N_{k,e} ⊆ N_{k+1,e}` on every paired weight
/// of length `2m` with entries in `[-bound, bound]`.
pub fn verify_limitpfaff(m: usize, k: usize, bound: i64, exec: Exec) -> Result<LimitReport> {
    let n = 2 * m;
    let pole = CharSpec::new(CharKind::PfPole { k }, n)?;
    if bound < 1 {
        return Err(Error::range("bound", format!("{bound}, expected >= 1")));
    }
    let top_e = limit_witness_bound(m, bound);
    let modules = (1..=top_e)
        .map(|e| CharSpec::new(CharKind::ModuleN { k, e }, n))
        .collect::<Result<Vec<_>>>()?;
    let next_k = (1..=top_e)
        .map(|e| CharSpec::new(CharKind::ModuleN { k: k + 1, e }, n).ok())
        .collect::<Option<Vec<_>>>();

    let weights = enumerate_paired(m, bound);
    let failures = exec.map(&weights, |mu| {
        let in_n: Vec<bool> = modules.iter().map(|spec| spec.contains(mu)).collect();
        if pole.contains(mu) != in_n.iter().any(|&b| b) {
            return Some(format!(
                "μ = {mu}: <Pf^-{}> says {}, union of N_{{{k},e}} says {}",
                2 * k,
                pole.contains(mu),
                !pole.contains(mu)
            ));
        }
        if let Some(e) = in_n.windows(2).position(|w| w[0] && !w[1]) {
            return Some(format!(
                "μ = {mu} in N_{{{k},{}}} but not N_{{{k},{}}}",
                e + 1,
                e + 2
            ));
        }
        if let Some(next) = &next_k {
            if let Some(e) = (0..top_e).find(|&e| in_n[e] && !next[e].contains(mu)) {
                return Some(format!(
                    "μ = {mu} in N_{{{k},{}}} but not N_{{{},{}}}",
                    e + 1,
                    k + 1,
                    e + 1
                ));
            }
        }
        None
    });
    let failure = failures.into_iter().flatten().next();
    Ok(LimitReport {
        m,
        k,
        bound,
        checked: weights.len(),
        pass: failure.is_none(),
        failure,
    })
}

/// Bounded check of the pole-order filtration of the Pfaffian localization:
/// `<Pf^0> = S = D_m`, the `<Pf^{-2k}>` increase with `k`, and each
/// successive difference is exactly `D_{m-k}`.
pub fn verify_pole_filtration(m: usize, bound: i64, exec: Exec) -> Result<LimitReport> {
    let n = 2 * m;
    let poles = (0..m)
        .map(|k| CharSpec::new(CharKind::PfPole { k }, n))
        .collect::<Result<Vec<_>>>()?;
    let simples = (0..=m)
        .map(|s| CharSpec::new(CharKind::SimpleD { s }, n))
        .collect::<Result<Vec<_>>>()?;
    let ring = CharSpec::new(CharKind::IdealI(Partition::empty(m)), n)?;

    let weights = enumerate_paired(m, bound);
    let failures = exec.map(&weights, |mu| {
        if m == 0 {
            return None;
        }
        if poles[0].contains(mu) != simples[m].contains(mu)
            || ring.contains(mu) != simples[m].contains(mu)
        {
            return Some(format!("μ = {mu}: <Pf^0>, S and D_m disagree"));
        }
        for k in 1..m {
            let (lo, hi) = (poles[k - 1].contains(mu), poles[k].contains(mu));
            if lo && !hi {
                return Some(format!(
                    "μ = {mu}: <Pf^-{}> not inside <Pf^-{}>",
                    2 * k - 2,
                    2 * k
                ));
            }
            if (hi && !lo) != simples[m - k].contains(mu) {
                return Some(format!(
                    "μ = {mu}: quotient at k = {k} differs from D_{}",
                    m - k
                ));
            }
        }
        None
    });
    let failure = failures.into_iter().flatten().next();
    Ok(LimitReport {
        m,
        k: m.saturating_sub(1),
        bound,
        checked: weights.len(),
        pass: failure.is_none(),
        failure,
    })
}
