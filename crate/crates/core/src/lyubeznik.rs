//! Lyubeznik numbers `λ_{i,j}(R^k)` of the Pfaffian rings, packed as
//! `L_k(q, w) = Σ λ_{i,j} q^i w^j`.
//!
//! `q` tracks the outer index `i` of `H^i_{0} H^{C(n,2)-j}_{O_k}(S)` and `w`
//! tracks `j`. Two routes are provided: the closed form, and the composition
//! of the Grothendieck-group class of `H^•_{O_k}(S)` with the local
//! cohomology at the origin of each basis module.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gaussian::q4_binomial;
use crate::kgroup::{ambient_dim, localcoh_class_even_q, localcoh_class_odd_d_reversed};
use crate::origin::{h0_d_odd, h0_q};
use crate::poly::Poly;

/// Checks `n >= 2` and `0 <= k < floor(n/2)`.
pub fn check_nk(n: usize, k: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::range("n", format!("{n}, need n >= 2")));
    }
    if k >= n / 2 {
        return Err(Error::range(
            "k",
            format!("{k} with n = {n}; need 0 <= k < {}", n / 2),
        ));
    }
    Ok(())
}

/// Every valid `(n, k)` with `2 <= n <= n_max`.
pub fn valid_cells(n_max: usize) -> Vec<(usize, usize)> {
    (2..=n_max)
        .flat_map(|n| (0..n / 2).map(move |k| (n, k)))
        .collect()
}

/// `dim R^k = k(2n - 2k - 1)`.
pub fn ring_dim(n: usize, k: usize) -> i64 {
    let (n, k) = (n as i64, k as i64);
    k * (2 * n - 2 * k - 1)
}

/// `q^{qe} binom(qa, qb)_{q^4} * w^{we} binom(wa, wb)_{w^4}`.
fn term(qe: i64, qa: i64, qb: i64, we: i64, wa: i64, wb: i64) -> Result<Poly> {
    let left = q4_binomial(qa, qb)?.shift(qe, 0)?;
    let right = q4_binomial(wa, wb)?.shift(we, 0)?.q_to_w()?;
    left.mul(&right)
}

/// The closed form of `L_k(q, w)`.
pub fn l_closed(n: usize, k: usize) -> Result<Poly> {
    check_nk(n, k)?;
    let m = (n / 2) as i64;
    let k = k as i64;
    if n.is_multiple_of(2) && k == m - 1 {
        let e = ambient_dim(n) - 1;
        return Ok(Poly::monomial(1, e, e));
    }
    let terms = (0..=k)
        .map(|s| {
            if n.is_multiple_of(2) {
                term(
                    s * (2 * s + 3),
                    m - 1,
                    s,
                    k * (2 * k + 3) - 4 * s * (k - m + 1),
                    m - s - 2,
                    k - s,
                )
            } else {
                term(
                    s * (2 * s + 1),
                    m,
                    s,
                    k * (2 * k + 3) - 2 * s * (2 * k - 2 * m + 1),
                    m - s - 1,
                    k - s,
                )
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Poly::sum(&terms)
}

/// `L_k(q, w)` assembled from `Σ_j [H^{d-j}_{O_k}(S)] w^j` (a class over
/// `Q_p` or `D_p`) by replacing each basis module with its local cohomology
/// at the origin.
pub fn l_composed(n: usize, k: usize) -> Result<Poly> {
    check_nk(n, k)?;
    let m = n / 2;
    let mut parts = Vec::new();
    if n.is_multiple_of(2) {
        let class = localcoh_class_even_q(m, k)?.reverse(ambient_dim(n))?;
        for (p, c) in class.coeffs().iter().enumerate() {
            if !c.is_zero() {
                parts.push(c.q_to_w()?.mul(&h0_q(m, p)?)?);
            }
        }
    } else {
        let class = localcoh_class_odd_d_reversed(m, k)?;
        for (p, c) in class.coeffs().iter().enumerate() {
            if !c.is_zero() {
                parts.push(c.q_to_w()?.mul(&h0_d_odd(m, p)?)?);
            }
        }
    }
    Poly::sum(&parts)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyubeznikTable {
    n: usize,
    k: usize,
    dim: i64,
    ambient: i64,
    entries: BTreeMap<(i64, i64), u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub i: i64,
    pub j: i64,
    pub lambda: u64,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    n: usize,
    k: usize,
    dim: i64,
    entries: Vec<Entry>,
}

/// Builds the table from the closed form, refusing if it disagrees with the
/// composed route or breaks a structural invariant.
pub fn build_table(n: usize, k: usize) -> Result<LyubeznikTable> {
    build_table_with(n, k, &l_closed)
}

/// [`build_table`] with a caller-supplied closed form.
pub fn build_table_with<F>(n: usize, k: usize, closed: &F) -> Result<LyubeznikTable>
where
    F: Fn(usize, usize) -> Result<Poly> + ?Sized,
{
    check_nk(n, k)?;
    let lk = closed(n, k)?;
    let composed = l_composed(n, k)?;
    if let Some(((i, j), a, b)) = lk.first_difference(&composed) {
        return Err(Error::PathMismatch {
            n,
            k,
            i,
            j,
            closed: a,
            composed: b,
        });
    }

    let dim = ring_dim(n, k);
    let mut entries = BTreeMap::new();
    for (i, j, c) in lk.terms() {
        let fail = |reason: String| Error::Invariant { i, j, reason };
        if c < 0 {
            return Err(fail(format!("negative multiplicity {c}")));
        }
        if i < 0 || i > j || j > dim {
            return Err(fail(format!("outside 0 <= i <= j <= dim = {dim}")));
        }
        entries.insert((i, j), c as u64);
    }
    if entries.get(&(dim, dim)) != Some(&1) {
        return Err(Error::Invariant {
            i: dim,
            j: dim,
            reason: format!(
                "expected λ = 1, found {}",
                entries.get(&(dim, dim)).copied().unwrap_or(0)
            ),
        });
    }
    Ok(LyubeznikTable {
        n,
        k,
        dim,
        ambient: ambient_dim(n),
        entries,
    })
}

impl LyubeznikTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> i64 {
        self.dim
    }

    pub fn ambient(&self) -> i64 {
        self.ambient
    }

    /// `λ_{i,j}`, zero when absent.
    pub fn get(&self, i: i64, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = Entry> + '_ {
        self.entries
            .iter()
            .map(|(&(i, j), &lambda)| Entry { i, j, lambda })
    }

    pub fn to_json(&self) -> String {
        let out = TableJson {
            n: self.n,
            k: self.k,
            dim: self.dim,
            entries: self.entries().collect(),
        };
        serde_json::to_string(&out).expect("table serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,lambda\n");
        for e in self.entries() {
            writeln!(out, "{},{},{}", e.i, e.j, e.lambda).unwrap();
        }
        out
    }

    /// A `tabular` with one row per nonzero `i` and one column per nonzero
    /// `j`; blanks are zero.
    pub fn to_latex(&self) -> String {
        let mut rows: Vec<i64> = self.entries.keys().map(|&(i, _)| i).collect();
        let mut cols: Vec<i64> = self.entries.keys().map(|&(_, j)| j).collect();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();

        let mut out = String::new();
        writeln!(out, "% n = {}, k = {}, dim = {}", self.n, self.k, self.dim).unwrap();
        writeln!(out, "\\begin{{tabular}}{{c|{}}}", "c".repeat(cols.len())).unwrap();
        let header: Vec<String> = cols.iter().map(|j| format!("${j}$")).collect();
        writeln!(out, "$i \\backslash j$ & {} \\\\", header.join(" & ")).unwrap();
        out.push_str("\\hline\n");
        for i in rows {
            let cells: Vec<String> = cols
                .iter()
                .map(|&j| match self.get(i, j) {
                    0 => String::new(),
                    v => v.to_string(),
                })
                .collect();
            writeln!(out, "${i}$ & {} \\\\", cells.join(" & ")).unwrap();
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}
