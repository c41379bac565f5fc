//! Sparse Laurent polynomials in two formal variables `q` and `w` with
//! exact `i64` coefficients.
//!
//! Every arithmetic operation is checked: a coefficient (or exponent) that
//! would leave the `i64` range yields [`Error::Overflow`] instead of
//! wrapping. Zero coefficients are never stored, so structural equality is
//! polynomial equality.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exponent pair `(e_q, e_w)`.
pub type Exponent = (i64, i64);

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Exponent, i64>,
}

/// One serialized term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub eq: i64,
    pub ew: i64,
    pub c: i64,
}

fn add_exp(a: Exponent, b: Exponent) -> Result<Exponent> {
    Ok((
        a.0.checked_add(b.0).ok_or(Error::Overflow("exponent"))?,
        a.1.checked_add(b.1).ok_or(Error::Overflow("exponent"))?,
    ))
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: i64, eq: i64, ew: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert((eq, ew), c);
        }
        Poly { terms }
    }

    /// `q^e`
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e, 0)
    }

    /// `w^e`
    pub fn w_pow(e: i64) -> Self {
        Self::monomial(1, 0, e)
    }

    /// Builds a polynomial from `(e_q, e_w, c)` triples; repeated exponents
    /// are summed and zero results dropped.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, i64, i64)>,
    {
        let mut out = Poly::zero();
        for (eq, ew, c) in terms {
            out.accumulate((eq, ew), c)?;
        }
        Ok(out)
    }

    fn accumulate(&mut self, exp: Exponent, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot = slot.checked_add(c).ok_or(Error::Overflow("coefficient"))?;
        if *slot == 0 {
            self.terms.remove(&exp);
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(e_q, e_w, c)` in ascending `(e_q, e_w)` order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, i64)> + '_ {
        self.terms.iter().map(|(&(eq, ew), &c)| (eq, ew, c))
    }

    pub fn coeff(&self, eq: i64, ew: i64) -> i64 {
        self.terms.get(&(eq, ew)).copied().unwrap_or(0)
    }

    pub fn is_q_only(&self) -> bool {
        self.terms.keys().all(|&(_, ew)| ew == 0)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    /// Smallest and largest `q` exponent, or `None` for the zero polynomial.
    pub fn q_exponent_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().map(|e| e.0).min()?;
        let hi = self.terms.keys().map(|e| e.0).max()?;
        Some((lo, hi))
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        let mut out = self.clone();
        for (&exp, &c) in &other.terms {
            out.accumulate(exp, c)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Result<Poly> {
        let terms = self
            .terms
            .iter()
            .map(|(&e, &c)| c.checked_neg().map(|c| (e, c)))
            .collect::<Option<_>>()
            .ok_or(Error::Overflow("coefficient"))?;
        Ok(Poly { terms })
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg()?)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        let mut out = Poly::zero();
        for (&ea, &ca) in &self.terms {
            for (&eb, &cb) in &other.terms {
                let c = ca.checked_mul(cb).ok_or(Error::Overflow("coefficient"))?;
                out.accumulate(add_exp(ea, eb)?, c)?;
            }
        }
        Ok(out)
    }

    /// Multiplies by the monomial `q^eq w^ew`.
    pub fn shift(&self, eq: i64, ew: i64) -> Result<Poly> {
        let terms = self
            .terms
            .iter()
            .map(|(&e, &c)| add_exp(e, (eq, ew)).map(|e| (e, c)))
            .collect::<Result<_>>()?;
        Ok(Poly { terms })
    }

    pub fn scale(&self, k: i64) -> Result<Poly> {
        if k == 0 {
            return Ok(Poly::zero());
        }
        let terms = self
            .terms
            .iter()
            .map(|(&e, &c)| c.checked_mul(k).map(|c| (e, c)))
            .collect::<Option<_>>()
            .ok_or(Error::Overflow("coefficient"))?;
        Ok(Poly { terms })
    }

    /// Sums an iterator of polynomials.
    pub fn sum<'a, I>(items: I) -> Result<Poly>
    where
        I: IntoIterator<Item = &'a Poly>,
    {
        items
            .into_iter()
            .try_fold(Poly::zero(), |acc, p| acc.add(p))
    }

    fn require_q_only(&self, op: &'static str) -> Result<()> {
        if self.is_q_only() {
            Ok(())
        } else {
            Err(Error::InvolvesW { op })
        }
    }

    /// `p(q) -> p(q^k)`, for `k >= 1`.
    pub fn substitute_power(&self, k: i64) -> Result<Poly> {
        self.require_q_only("substitute_power")?;
        if k < 1 {
            return Err(Error::range("power", format!("k = {k}, expected k >= 1")));
        }
        let terms = self
            .terms
            .iter()
            .map(|(&(eq, _), &c)| eq.checked_mul(k).map(|eq| ((eq, 0), c)))
            .collect::<Option<_>>()
            .ok_or(Error::Overflow("exponent"))?;
        Ok(Poly { terms })
    }

    /// `q^d * p(q^{-1})`: each exponent `e` becomes `d - e`.
    pub fn reverse(&self, d: i64) -> Result<Poly> {
        self.require_q_only("reverse")?;
        let terms = self
            .terms
            .iter()
            .map(|(&(eq, _), &c)| d.checked_sub(eq).map(|eq| ((eq, 0), c)))
            .collect::<Option<_>>()
            .ok_or(Error::Overflow("exponent"))?;
        Ok(Poly { terms })
    }

    /// Renames `q` to `w` in a polynomial in `q` only.
    pub fn q_to_w(&self) -> Result<Poly> {
        self.require_q_only("q_to_w")?;
        let terms = self
            .terms
            .iter()
            .map(|(&(eq, _), &c)| ((0, eq), c))
            .collect();
        Ok(Poly { terms })
    }

    /// First exponent (in display order) where the two polynomials differ,
    /// with both coefficients.
    pub fn first_difference(&self, other: &Poly) -> Option<(Exponent, i64, i64)> {
        self.terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .map(|e| (e, self.coeff(e.0, e.1), other.coeff(e.0, e.1)))
            .find(|&(_, a, b)| a != b)
    }

    pub fn to_terms(&self) -> Vec<Term> {
        self.terms().map(|(eq, ew, c)| Term { eq, ew, c }).collect()
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: char, e: i64) -> fmt::Result {
    match e {
        1 => write!(f, "{var}"),
        e if e < 0 => write!(f, "{var}^({e})"),
        e => write!(f, "{var}^{e}"),
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (eq, ew, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if idx == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.unsigned_abs();
            let bare = eq == 0 && ew == 0;
            if mag != 1 || bare {
                write!(f, "{mag}")?;
                if !bare {
                    write!(f, "*")?;
                }
            }
            if eq != 0 {
                write_power(f, 'q', eq)?;
                if ew != 0 {
                    write!(f, "*")?;
                }
            }
            if ew != 0 {
                write_power(f, 'w', ew)?;
            }
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.to_terms())
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(deserializer)?;
        Poly::from_terms(terms.into_iter().map(|t| (t.eq, t.ew, t.c)))
            .map_err(serde::de::Error::custom)
    }
}
