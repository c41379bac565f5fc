//! Grothendieck-group classes with coefficients in `Z[q]`.
//!
//! A class is a vector of q-polynomials indexed by `0..=m`, in either the
//! basis of simples `D_s` or (for even `n` only) the basis of the
//! indecomposables `Q_p`, where `[Q_p] = [D_0] + ... + [D_p]`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gaussian::q4_binomial;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "Q")]
    Q,
    #[serde(rename = "D")]
    D,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawClass")]
pub struct KClass {
    basis: Basis,
    n: usize,
    coeffs: Vec<Poly>,
}

#[derive(Deserialize)]
struct RawClass {
    basis: Basis,
    n: usize,
    coeffs: Vec<Poly>,
}

impl TryFrom<RawClass> for KClass {
    type Error = Error;

    fn try_from(raw: RawClass) -> Result<Self> {
        KClass::new(raw.basis, raw.n, raw.coeffs)
    }
}

impl KClass {
    pub fn new(basis: Basis, n: usize, coeffs: Vec<Poly>) -> Result<Self> {
        if basis == Basis::Q && n % 2 == 1 {
            return Err(Error::Parity(format!("Q-basis needs even n, got n = {n}")));
        }
        if coeffs.len() != n / 2 + 1 {
            return Err(Error::LengthMismatch {
                left: coeffs.len(),
                right: n / 2 + 1,
            });
        }
        if coeffs.iter().any(|c| !c.is_q_only()) {
            return Err(Error::InvolvesW { op: "KClass" });
        }
        Ok(KClass { basis, n, coeffs })
    }

    pub fn zero(basis: Basis, n: usize) -> Result<Self> {
        Self::new(basis, n, vec![Poly::zero(); n / 2 + 1])
    }

    /// `[X_index] * coeff` for the basis element `X` of `basis`.
    pub fn basis_element(basis: Basis, n: usize, index: usize, coeff: Poly) -> Result<Self> {
        let mut class = Self::zero(basis, n)?;
        *class
            .coeffs
            .get_mut(index)
            .ok_or_else(|| Error::range("basis index", format!("{index} > m = {}", n / 2)))? =
            coeff;
        Self::new(basis, n, class.coeffs)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.n / 2
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> &Poly {
        &self.coeffs[index]
    }

    pub fn add(&self, other: &KClass) -> Result<KClass> {
        if self.basis != other.basis || self.n != other.n {
            return Err(Error::Parity(format!(
                "cannot add classes over ({:?}, n = {}) and ({:?}, n = {})",
                self.basis, self.n, other.basis, other.n
            )));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        KClass::new(self.basis, self.n, coeffs)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(Poly::has_nonnegative_coeffs)
    }

    /// Rewrites a Q-basis class in the D-basis: the coefficient of `D_s` is
    /// the sum of the coefficients of `Q_p` over `p >= s`.
    pub fn q_to_d(&self) -> Result<KClass> {
        if self.basis != Basis::Q {
            return Err(Error::Parity("q_to_d expects a Q-basis class".into()));
        }
        let mut coeffs = self.coeffs.clone();
        for s in (0..coeffs.len().saturating_sub(1)).rev() {
            coeffs[s] = coeffs[s].add(&coeffs[s + 1])?;
        }
        KClass::new(Basis::D, self.n, coeffs)
    }

    /// Inverse of [`q_to_d`](Self::q_to_d), by successive differences.
    pub fn d_to_q(&self) -> Result<KClass> {
        if self.basis != Basis::D {
            return Err(Error::Parity("d_to_q expects a D-basis class".into()));
        }
        if self.n % 2 == 1 {
            return Err(Error::Parity(format!(
                "Q-basis needs even n, got n = {}",
                self.n
            )));
        }
        let coeffs = (0..self.coeffs.len())
            .map(|p| match self.coeffs.get(p + 1) {
                Some(next) => self.coeffs[p].sub(next),
                None => Ok(self.coeffs[p].clone()),
            })
            .collect::<Result<_>>()?;
        KClass::new(Basis::Q, self.n, coeffs)
    }

    /// Applies `p(q) -> q^d p(q^{-1})` to every coefficient. With
    /// `d = dim X`, this turns `Σ [H^j] q^j` into `Σ [H^{d-j}] q^j`.
    pub fn reverse(&self, d: i64) -> Result<KClass> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.reverse(d))
            .collect::<Result<_>>()?;
        KClass::new(self.basis, self.n, coeffs)
    }
}

/// `dim X = C(n, 2)` for the space of `n x n` skew-symmetric matrices.
pub fn ambient_dim(n: usize) -> i64 {
    (n * n.saturating_sub(1) / 2) as i64
}

fn check_even(m: usize, k: usize, max_k: usize) -> Result<()> {
    if m == 0 || k > max_k {
        return Err(Error::range(
            "k",
            format!("k = {k} with m = {m}; need 0 <= k <= {max_k}"),
        ));
    }
    Ok(())
}

/// `Σ_j [H^j_{O_k}(S)] q^j` for `n = 2m`, in the Q-basis.
///
/// For `k <= m-2` the coefficient of `Q_p` (`p <= k`) is
/// `q^{2(m-k)^2 - (m-k) + 4(k-p)} binom(m-p-2, k-p)_{q^4}`; for the
/// hypersurface `k = m-1` the class is `[Q_{m-1}] q`.
pub fn localcoh_class_even_q(m: usize, k: usize) -> Result<KClass> {
    check_even(m, k, m.saturating_sub(1))?;
    let n = 2 * m;
    if k + 1 == m {
        return KClass::basis_element(Basis::Q, n, m - 1, Poly::q_pow(1));
    }
    let (mi, ki) = (m as i64, k as i64);
    let c = mi - ki;
    let mut coeffs = vec![Poly::zero(); m + 1];
    for p in 0..=ki {
        let exp = 2 * c * c - c + 4 * (ki - p);
        coeffs[p as usize] = q4_binomial(mi - p - 2, ki - p)?.shift(exp, 0)?;
    }
    KClass::new(Basis::Q, n, coeffs)
}

/// The same class in the D-basis, `0 <= k <= m-2`: the coefficient of
/// `D_s` is `q^{2(m-k)^2-(m-k)} binom(m-s-1, k-s)_{q^4}`.
pub fn localcoh_class_even_d(m: usize, k: usize) -> Result<KClass> {
    check_even(m, k, m.saturating_sub(2))?;
    if m < 2 {
        return Err(Error::range("k", format!("no k <= m-2 for m = {m}")));
    }
    let (mi, ki) = (m as i64, k as i64);
    let c = mi - ki;
    let mut coeffs = vec![Poly::zero(); m + 1];
    for s in 0..=ki {
        coeffs[s as usize] = q4_binomial(mi - s - 1, ki - s)?.shift(2 * c * c - c, 0)?;
    }
    KClass::new(Basis::D, 2 * m, coeffs)
}

/// `Σ_j [H^{d-j}_{O_k}(S)] q^j` for `n = 2m`, `0 <= k <= m-2`, written
/// directly: the coefficient of `Q_p` is
/// `q^{k(2k+3) - 4p(k-m+1)} binom(m-p-2, k-p)_{q^4}`.
pub fn localcoh_class_even_q_reversed(m: usize, k: usize) -> Result<KClass> {
    check_even(m, k, m.saturating_sub(2))?;
    if m < 2 {
        return Err(Error::range("k", format!("no k <= m-2 for m = {m}")));
    }
    let (mi, ki) = (m as i64, k as i64);
    let mut coeffs = vec![Poly::zero(); m + 1];
    for p in 0..=ki {
        let exp = ki * (2 * ki + 3) - 4 * p * (ki - mi + 1);
        coeffs[p as usize] = q4_binomial(mi - p - 2, ki - p)?.shift(exp, 0)?;
    }
    KClass::new(Basis::Q, 2 * m, coeffs)
}

/// `Σ_j [H^{d-j}_{O_k}(S)] q^j` for `n = 2m+1`, `0 <= k <= m-1`, in the
/// D-basis: the coefficient of `D_p` is
/// `q^{k(2k+3) - 2p(2k-2m+1)} binom(m-p-1, k-p)_{q^4}`.
pub fn localcoh_class_odd_d_reversed(m: usize, k: usize) -> Result<KClass> {
    if m == 0 || k >= m {
        return Err(Error::range(
            "k",
            format!("k = {k} with m = {m}; need 0 <= k <= m-1"),
        ));
    }
    let (mi, ki) = (m as i64, k as i64);
    let mut coeffs = vec![Poly::zero(); m + 1];
    for p in 0..=ki {
        let exp = ki * (2 * ki + 3) - 2 * p * (2 * ki - 2 * mi + 1);
        coeffs[p as usize] = q4_binomial(mi - p - 1, ki - p)?.shift(exp, 0)?;
    }
    KClass::new(Basis::D, 2 * m + 1, coeffs)
}
