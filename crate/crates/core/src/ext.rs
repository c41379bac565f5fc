//! Multiplicity of `det(W*)^{n+b-2a}` in `Ext^•(S/I_{a x b}, S)` for
//! `n = 2m`, computed by enumeration and in closed form, together with the
//! `Z(z)` index sets for the two rectangle-like shapes that appear in the
//! direct-limit arguments.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::gaussian::q4_binomial;
use crate::partitions::{enumerate_box, Partition};
use crate::poly::Poly;

fn choose2(x: i64) -> i64 {
    x * (x - 1) / 2
}

fn check_ext(m: usize, a: usize, b: i64) -> Result<()> {
    if a < 1 || a > m {
        return Err(Error::range(
            "a",
            format!("{a} with m = {m}; need 1 <= a <= m"),
        ));
    }
    if b < 2 * a as i64 - 1 {
        return Err(Error::range("b", format!("{b} < 2a - 1 = {}", 2 * a - 1)));
    }
    Ok(())
}

/// Sum over `β` in the `(m-a) x (a-1)` box of
/// `q^{C(2m,2) - C(2a-2,2) - 4(a-1) - 4|β|}`.
pub fn ext_series_enum(m: usize, a: usize, b: i64) -> Result<Poly> {
    check_ext(m, a, b)?;
    let (mi, ai) = (m as i64, a as i64);
    let base = choose2(2 * mi) - choose2(2 * ai - 2) - 4 * (ai - 1);
    Poly::from_terms(
        enumerate_box(m - a, (a - 1) as u32).map(|beta| (base - 4 * beta.size() as i64, 0, 1)),
    )
}

/// The same series before collapsing pairs: a sum over partitions `t` with
/// at most `2(m-a+1)` parts, each at most `a-1`, with `t_1 = a-1` and
/// `t_{2i-1} = t_{2i}`, of `q^{C(2m,2) - C(2a-2,2) - 2|t|}`.
pub fn ext_series_paired(m: usize, a: usize, b: i64) -> Result<Poly> {
    check_ext(m, a, b)?;
    let (mi, ai) = (m as i64, a as i64);
    let base = choose2(2 * mi) - choose2(2 * ai - 2);
    Poly::from_terms(
        paired_t_set(m, a)
            .iter()
            .map(|t| (base - 2 * t.size() as i64, 0, 1)),
    )
}

/// The partitions `t` indexing [`ext_series_paired`].
pub fn paired_t_set(m: usize, a: usize) -> Vec<Partition> {
    let top = (a - 1) as u32;
    enumerate_box(2 * (m + 1 - a), top)
        .filter(|t| t.first() == top && t.parts().chunks(2).all(|c| c[0] == c[1]))
        .collect()
}

/// `t -> (t_3, t_5, ..., t_{2(m-a)+1})`, a bijection onto the
/// `(m-a) x (a-1)` box.
pub fn paired_t_to_beta(t: &Partition) -> Partition {
    let parts = t.parts().iter().skip(2).step_by(2).copied().collect();
    Partition::new(parts).expect("subsequence of a partition")
}

/// `q^{a(2a-3) - m(4a-2m-3) + 1} binom(m-1, a-1)_{q^4}`; `b` only gates
/// validity.
pub fn ext_series_closed(m: usize, a: usize, b: i64) -> Result<Poly> {
    check_ext(m, a, b)?;
    let (mi, ai) = (m as i64, a as i64);
    let exp = ai * (2 * ai - 3) - mi * (4 * ai - 2 * mi - 3) + 1;
    q4_binomial(mi - 1, ai - 1)?.shift(exp, 0)
}

/// A pair `(x, p)` indexing a subquotient `J_{x,p}`; always satisfies
/// `x_1 = ... = x_{p+1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZPair {
    x: Partition,
    p: usize,
}

impl ZPair {
    pub fn new(x: Partition, p: usize) -> Result<Self> {
        let parts = x.parts();
        if p >= parts.len().max(1) && !(parts.is_empty() && p == 0) {
            return Err(Error::range(
                "p",
                format!("{p} for a partition of length {}", parts.len()),
            ));
        }
        if parts.iter().take(p + 1).any(|&v| v != x.first()) {
            return Err(Error::range(
                "ZPair",
                format!("{x} is not constant on its first {} rows", p + 1),
            ));
        }
        Ok(ZPair { x, p })
    }

    pub fn x(&self) -> &Partition {
        &self.x
    }

    pub fn p(&self) -> usize {
        self.p
    }
}

/// Pairs `(x, a-1)` with `x ∈ P(m)`, `x_1 = ... = x_a <= e`. This is
/// `Z((m-k) x (e+1))` for `a = m-k`.
pub fn zset_rectangle(m: usize, a: usize, e: u32) -> Result<BTreeSet<ZPair>> {
    if a < 1 || a > m {
        return Err(Error::range(
            "a",
            format!("{a} with m = {m}; need 1 <= a <= m"),
        ));
    }
    let mut out = BTreeSet::new();
    for c in 0..=e {
        for tail in enumerate_box(m - a, c) {
            let mut parts = vec![c; a];
            parts.extend_from_slice(tail.parts());
            out.insert(ZPair::new(Partition::new(parts)?, a - 1)?);
        }
    }
    Ok(out)
}

/// `{(0, m-1)}` together with the pairs `(x, a-1)` with
/// `x_1 = ... = x_a <= e` and `x >= (1^m)`. This is `Z(z)` for
/// `z = ((e+1)^{m-k}, 1^k)` with `a = m-k`.
pub fn zset_thickened(m: usize, a: usize, e: u32) -> Result<BTreeSet<ZPair>> {
    let mut out: BTreeSet<_> = zset_rectangle(m, a, e)?
        .into_iter()
        .filter(|pair| pair.x.parts().iter().all(|&v| v >= 1))
        .collect();
    out.insert(ZPair::new(Partition::empty(m), m - 1)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(terms: &[i64]) -> Poly {
        Poly::from_terms(terms.iter().map(|&e| (e, 0, 1))).unwrap()
    }

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enum_examples() {
        for m in 1..6usize {
            let d = (m * (2 * m - 1)) as i64;
            assert_eq!(ext_series_enum(m, 1, 1).unwrap(), Poly::q_pow(d));
            assert_eq!(ext_series_closed(m, 1, 1).unwrap(), Poly::q_pow(d));
        }
        assert_eq!(ext_series_enum(2, 2, 3).unwrap(), q(&[1]));
        assert_eq!(ext_series_enum(3, 2, 3).unwrap(), q(&[6, 10]));
        assert_eq!(
            ext_series_closed(2, 2, 3).unwrap(),
            ext_series_enum(2, 2, 3).unwrap()
        );
    }

    #[test]
    fn closed_form_ignores_b() {
        for b in [5, 6, 9, 40] {
            assert_eq!(
                ext_series_closed(4, 3, b).unwrap(),
                ext_series_closed(4, 3, 5).unwrap()
            );
        }
    }

    #[test]
    fn range_checks() {
        assert!(ext_series_enum(3, 0, 5).is_err());
        assert!(ext_series_enum(3, 4, 9).is_err());
        assert!(ext_series_enum(3, 2, 2).is_err());
        assert!(ext_series_closed(3, 2, 2).is_err());
    }

    #[test]
    fn paired_t_bijection() {
        for m in 1..6usize {
            for a in 1..=m {
                let ts = paired_t_set(m, a);
                let betas: BTreeSet<_> = ts.iter().map(paired_t_to_beta).collect();
                let boxed: BTreeSet<_> = enumerate_box(m - a, (a - 1) as u32).collect();
                assert_eq!(ts.len(), betas.len());
                assert_eq!(betas, boxed);
                assert_eq!(
                    ext_series_paired(m, a, 2 * a as i64).unwrap(),
                    ext_series_enum(m, a, 2 * a as i64).unwrap()
                );
            }
        }
    }

    #[test]
    fn zpair_constraint() {
        assert!(ZPair::new(part(&[2, 2, 1]), 1).is_ok());
        assert!(ZPair::new(part(&[2, 1, 1]), 1).is_err());
        assert!(ZPair::new(part(&[0, 0]), 1).is_ok());
    }

    #[test]
    fn zset_examples() {
        let z = zset_rectangle(3, 2, 0).unwrap();
        assert_eq!(z.len(), 1);
        assert!(z.iter().all(|pair| pair.x().is_empty()));

        let thick = zset_thickened(2, 1, 1).unwrap();
        let expected: BTreeSet<_> = [
            ZPair::new(part(&[0, 0]), 1).unwrap(),
            ZPair::new(part(&[1, 1]), 0).unwrap(),
        ]
        .into_iter()
        .collect();
        assert_eq!(thick, expected);

        for pair in zset_thickened(4, 2, 3).unwrap() {
            if pair.p() != 3 {
                assert!(*pair.x().parts().last().unwrap() >= 1);
            }
        }
    }
}
