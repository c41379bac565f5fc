//! Every identity in the crate, swept over its standard range.
//!
//! Each suite stops at its first counterexample; the other suites still
//! run. Ranges other than the Lyubeznik sweep are fixed.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::characters::{verify_limitpfaff, verify_pole_filtration};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::ext::{
    ext_series_closed, ext_series_enum, ext_series_paired, zset_rectangle, zset_thickened, ZPair,
};
use crate::gaussian::{gaussian_binomial, gaussian_binomial_oracle};
use crate::kgroup::{
    ambient_dim, localcoh_class_even_d, localcoh_class_even_q, localcoh_class_even_q_reversed,
    localcoh_class_odd_d_reversed,
};
use crate::lyubeznik::{build_table_with, l_closed, valid_cells};
use crate::origin::{h0_d_even, h0_d_even_spliced, h0_d_odd, h0_pf_pole, h0_q};
use crate::partitions::{binomial, enumerate_box};
use crate::poly::Poly;
use crate::weights::verify_pushforward;

pub const GAUSSIAN_MAX: i64 = 14;
pub const KGROUP_M_MAX: usize = 10;
pub const REVERSAL_M_MAX: usize = 8;
pub const ORIGIN_M_MAX: usize = 10;
pub const EXT_M_MAX: usize = 7;
pub const ZSET_M_MAX: usize = 5;
pub const ZSET_E_MAX: u32 = 4;
pub const PUSHFORWARD_M_MAX: usize = 4;
pub const LIMIT_M_MAX: usize = 3;
pub const LIMIT_BOUND: i64 = 6;
pub const HYPERSURFACE_N_MAX: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n_max: usize,
    pub pass: bool,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.name == name)
    }
}

/// Counts checks and records the first failure.
struct Tally {
    checked: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            failure: None,
        }
    }

    /// Records one check; returns false once anything has failed.
    fn check(&mut self, ok: Result<bool>, what: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        match ok {
            Ok(true) => true,
            Ok(false) => {
                self.failure = Some(what());
                false
            }
            Err(e) => {
                self.failure = Some(format!("{}: {e}", what()));
                false
            }
        }
    }

    fn eq(
        &mut self,
        left: Result<Poly>,
        right: Result<Poly>,
        what: impl FnOnce() -> String,
    ) -> bool {
        let outcome = left.and_then(|l| {
            let r = right?;
            Ok(l.first_difference(&r)
                .map(|((i, j), a, b)| format!("q^{i} w^{j}: {a} vs {b}")))
        });
        match outcome {
            Ok(None) => self.check(Ok(true), what),
            Ok(Some(diff)) => self.check(Ok(false), || format!("{}: {diff}", what())),
            Err(e) => self.check(Err(e), what),
        }
    }

    fn finish(self, name: &str) -> SuiteReport {
        SuiteReport {
            name: name.to_string(),
            checked: self.checked,
            pass: self.failure.is_none(),
            failure: self.failure,
        }
    }
}

fn merge(name: &str, parts: Vec<SuiteReport>) -> SuiteReport {
    SuiteReport {
        name: name.to_string(),
        checked: parts.iter().map(|p| p.checked).sum(),
        pass: parts.iter().all(|p| p.pass),
        failure: parts.into_iter().find_map(|p| p.failure),
    }
}

/// Oracle, recurrence, palindromicity and symmetry for `a <= 14`, plus the
/// box-partition count.
pub fn suite_gaussian() -> SuiteReport {
    let mut t = Tally::new();
    'outer: for a in 0..=GAUSSIAN_MAX {
        for b in 0..=a {
            let g = gaussian_binomial(a, b);
            let label = || format!("binom({a},{b})");
            if !t.eq(g.clone(), gaussian_binomial_oracle(a, b), || {
                format!("{} vs oracle", label())
            }) || !t.eq(g.clone(), gaussian_binomial(a, a - b), || {
                format!("{} symmetry", label())
            }) || !t.eq(
                g.clone(),
                g.clone().and_then(|p| p.reverse(b * (a - b))),
                || format!("{} palindromic", label()),
            ) {
                break 'outer;
            }
            if a > b && b > 0 {
                let pascal = gaussian_binomial(a - 1, b - 1)
                    .and_then(|l| l.add(&gaussian_binomial(a - 1, b)?.shift(b, 0)?));
                if !t.eq(g, pascal, || format!("{} recurrence", label())) {
                    break 'outer;
                }
            }
            let count = enumerate_box((a - b) as usize, b as u32).count() as u64;
            if !t.check(Ok(Some(count) == binomial(a as u64, b as u64)), || {
                format!("box ({})x({b}) has {count} partitions", a - b)
            }) {
                break 'outer;
            }
        }
    }
    t.finish("gaussian")
}

/// Basis change, reversal, and nonnegativity of the local cohomology
/// classes.
pub fn suite_kgroup() -> SuiteReport {
    let mut t = Tally::new();
    'outer: for m in 1..=KGROUP_M_MAX {
        for k in 0..m {
            let q = localcoh_class_even_q(m, k);
            let ok = q
                .as_ref()
                .map(|c| c.has_nonnegative_coeffs())
                .map_err(Clone::clone);
            if !t.check(ok, || {
                format!("even class m={m} k={k} has a negative coefficient")
            }) {
                break 'outer;
            }
            let Ok(q) = q else { break 'outer };
            let round = q.q_to_d().and_then(|d| d.d_to_q()).map(|back| back == q);
            if !t.check(round, || {
                format!("m={m} k={k}: Q -> D -> Q is not the identity")
            }) {
                break 'outer;
            }
            if k + 2 > m {
                continue;
            }
            let qd = q
                .q_to_d()
                .and_then(|d| Ok(d == localcoh_class_even_d(m, k)?));
            if !t.check(qd, || {
                format!("m={m} k={k}: Q-basis class does not expand to the D-basis class")
            }) {
                break 'outer;
            }
            let d = localcoh_class_even_d(m, k).map(|c| c.has_nonnegative_coeffs());
            if !t.check(d, || {
                format!("D-basis class m={m} k={k} has a negative coefficient")
            }) {
                break 'outer;
            }
            if m <= REVERSAL_M_MAX {
                let rev = q
                    .reverse(ambient_dim(2 * m))
                    .and_then(|r| Ok(r == localcoh_class_even_q_reversed(m, k)?));
                if !t.check(rev, || {
                    format!("m={m} k={k}: reversal does not match the reversed class")
                }) {
                    break 'outer;
                }
            }
        }
        for k in 0..m {
            let odd = localcoh_class_odd_d_reversed(m, k).map(|c| c.has_nonnegative_coeffs());
            if !t.check(odd, || {
                format!("odd class m={m} k={k} has a negative coefficient")
            }) {
                break 'outer;
            }
        }
    }
    t.finish("kgroup")
}

fn within_degrees(p: &Poly, top: i64) -> bool {
    p.has_nonnegative_coeffs() && p.terms().all(|(e, _, _)| (0..=top).contains(&e))
}

/// The long exact sequence identities at the origin, nonnegativity, degree
/// bounds and top-degree vanishing.
pub fn suite_origin() -> SuiteReport {
    let mut t = Tally::new();
    'outer: for m in 1..=ORIGIN_M_MAX {
        let d = ambient_dim(2 * m);
        for p in 0..m {
            let lhs = h0_q(m, p).and_then(|h| h.shift(1, 0));
            if !t.eq(lhs, h0_pf_pole(m, m - p - 1), || {
                format!("q h0(Q_{p}) vs h0(<Pf^-{}>), m={m}", 2 * (m - p - 1))
            }) {
                break 'outer;
            }
        }
        for s in 1..m {
            if !t.eq(h0_d_even(m, s), h0_d_even_spliced(m, s), || {
                format!("splice for D_{s}, m={m}")
            }) {
                break 'outer;
            }
        }
        for k in 0..m {
            let pole = h0_pf_pole(m, k);
            let ok = pole.map(|h| within_degrees(&h, d) && (k == 0 || h.coeff(d, 0) == 0));
            if !t.check(ok, || {
                format!("h0(<Pf^-{}>) m={m}: sign, range or top degree", 2 * k)
            }) || !t.check(h0_q(m, k).map(|h| within_degrees(&h, d)), || {
                format!("h0(Q_{k}) m={m}")
            }) {
                break 'outer;
            }
        }
        for s in 0..=m {
            let odd_top = ambient_dim(2 * m + 1);
            if !t.check(h0_d_even(m, s).map(|h| within_degrees(&h, d)), || {
                format!("h0(D_{s}) even m={m}")
            }) || !t.check(h0_d_odd(m, s).map(|h| within_degrees(&h, odd_top)), || {
                format!("h0(D_{s}) odd m={m}")
            }) {
                break 'outer;
            }
        }
    }
    t.finish("origin")
}

/// Both Ext routes against the closed form, the per-size multiplicities,
/// and the two Z-set facts.
pub fn suite_ext() -> SuiteReport {
    let mut t = Tally::new();
    'outer: for m in 1..=EXT_M_MAX {
        for a in 1..=m {
            for b in [2 * a as i64 - 1, 2 * a as i64, 2 * a as i64 + 3] {
                let label = || format!("m={m} a={a} b={b}");
                if !t.eq(ext_series_enum(m, a, b), ext_series_closed(m, a, b), || {
                    format!("{} enum vs closed", label())
                }) || !t.eq(ext_series_paired(m, a, b), ext_series_enum(m, a, b), || {
                    format!("{} paired vs enum", label())
                }) {
                    break 'outer;
                }
            }
            let mut sizes: BTreeMap<u64, i64> = BTreeMap::new();
            for beta in enumerate_box(m - a, (a - 1) as u32) {
                *sizes.entry(beta.size()).or_default() += 1;
            }
            let series = ext_series_enum(m, a, 2 * a as i64 - 1);
            let ok = series.map(|s| {
                let top = s.q_exponent_range().map_or(0, |r| r.1);
                s.len() == sizes.len()
                    && sizes
                        .iter()
                        .all(|(&size, &count)| s.coeff(top - 4 * size as i64, 0) == count)
            });
            if !t.check(ok, || {
                format!("m={m} a={a}: multiplicities differ from box counts")
            }) {
                break 'outer;
            }
        }
    }
    'z: for m in 1..=ZSET_M_MAX {
        for k in 1..m {
            for e in 0..=ZSET_E_MAX {
                let label = || format!("m={m} k={k} e={e}");
                let disjoint = zset_rectangle(m, m - k, e)
                    .and_then(|r| Ok(r.is_disjoint(&zset_thickened(m, m - k + 1, e)?)));
                if !t.check(disjoint, || {
                    format!("{}: rectangle meets thickened set", label())
                }) {
                    break 'z;
                }
                let included = zset_thickened(m, m - k, e).and_then(|z| {
                    let sentinel = ZPair::new(crate::partitions::Partition::empty(m), m - 1)?;
                    let same = zset_rectangle(m, m - k, e)?;
                    let wider = zset_rectangle(m, m - k, e + 1)?;
                    Ok(z.iter()
                        .filter(|x| **x != sentinel)
                        .all(|x| same.contains(x) && wider.contains(x)))
                });
                if !t.check(included, || {
                    format!("{}: thickened set escapes the rectangle", label())
                }) {
                    break 'z;
                }
            }
        }
    }
    t.finish("ext")
}

/// Bott pushforward for `m <= 4`, all `p`, window `2m + 6`.
pub fn suite_bott(exec: Exec) -> SuiteReport {
    let cells: Vec<(usize, usize)> = (0..=PUSHFORWARD_M_MAX)
        .flat_map(|m| (0..=m).map(move |p| (m, p)))
        .collect();
    let reports = exec.map(&cells, |&(m, p)| {
        let name = format!("pushforward m={m} p={p}");
        match verify_pushforward(m, p, 2 * m as i64 + 6, exec) {
            Ok(r) => SuiteReport {
                name,
                checked: r.checked,
                pass: r.pass,
                failure: r.failure.map(|f| format!("m={m} p={p}: {f}")),
            },
            Err(e) => failed(name, e),
        }
    });
    merge("bott", reports)
}

/// The direct-limit description of `<Pf^{-2k}>` and the pole-order
/// filtration, for `m <= 3` on the window of radius 6.
pub fn suite_characters(exec: Exec) -> SuiteReport {
    let mut cells: Vec<(usize, Option<usize>)> = Vec::new();
    for m in 1..=LIMIT_M_MAX {
        cells.push((m, None));
        cells.extend((0..m).map(|k| (m, Some(k))));
    }
    let reports = exec.map(&cells, |&(m, k)| {
        let name = format!("characters m={m} k={k:?}");
        let outcome = match k {
            Some(k) => verify_limitpfaff(m, k, LIMIT_BOUND, exec),
            None => verify_pole_filtration(m, LIMIT_BOUND, exec),
        };
        match outcome {
            Ok(r) => SuiteReport {
                name,
                checked: r.checked,
                pass: r.pass,
                failure: r.failure.map(|f| format!("m={m} k={k:?}: {f}")),
            },
            Err(e) => failed(name, e),
        }
    });
    merge("characters", reports)
}

fn failed(name: String, e: Error) -> SuiteReport {
    SuiteReport {
        failure: Some(format!("{name}: {e}")),
        name,
        checked: 1,
        pass: false,
    }
}

/// Tables for every `(n, k)` with `n <= n_max`, plus the two special
/// families.
pub fn suite_lyubeznik<F>(n_max: usize, exec: Exec, closed: &F) -> SuiteReport
where
    F: Fn(usize, usize) -> Result<Poly> + Sync + ?Sized,
{
    let cells = valid_cells(n_max);
    let reports = exec.map(&cells, |&(n, k)| {
        let name = format!("table n={n} k={k}");
        let mut t = Tally::new();
        let built = build_table_with(n, k, closed).map(|_| true);
        if !t.check(built, || format!("n={n} k={k}")) {
            return t.finish(&name);
        }
        let m = n / 2;
        if k == 0 {
            t.eq(closed(n, k), Ok(Poly::one()), || {
                format!("n={n}: L_0 is not 1")
            });
        } else if n % 2 == 0 && k + 1 == m && n <= HYPERSURFACE_N_MAX {
            let e = ambient_dim(n) - 1;
            t.eq(closed(n, k), Ok(Poly::monomial(1, e, e)), || {
                format!("n={n}: hypersurface case")
            });
        }
        t.finish(&name)
    });
    merge("lyubeznik", reports)
}

/// Runs every suite with the built-in closed form.
pub fn verify_all(n_max: usize, exec: Exec) -> Result<VerifyReport> {
    verify_all_with(n_max, exec, &l_closed)
}

/// [`verify_all`] with a replacement closed form for `L_k`.
pub fn verify_all_with<F>(n_max: usize, exec: Exec, closed: &F) -> Result<VerifyReport>
where
    F: Fn(usize, usize) -> Result<Poly> + Sync + ?Sized,
{
    if n_max < 2 {
        return Err(Error::range("n_max", format!("{n_max}, need >= 2")));
    }
    let ((lyu, (gauss, kg)), ((orig, ext), (bott, chars))) = exec.join(
        || {
            exec.join(
                || suite_lyubeznik(n_max, exec, closed),
                || exec.join(suite_gaussian, suite_kgroup),
            )
        },
        || {
            exec.join(
                || exec.join(suite_origin, suite_ext),
                || exec.join(|| suite_bott(exec), || suite_characters(exec)),
            )
        },
    );
    let suites = vec![lyu, gauss, kg, orig, ext, bott, chars];
    Ok(VerifyReport {
        n_max,
        pass: suites.iter().all(|s| s.pass),
        suites,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let report = verify_all(6, Exec::Parallel).unwrap();
        for s in &report.suites {
            assert!(s.pass, "{s:?}");
            assert!(s.checked > 0, "{s:?}");
        }
        assert!(report.pass);
    }

    #[test]
    fn degenerate_range() {
        let report = verify_all(2, Exec::Sequential).unwrap();
        assert!(report.pass);
        assert_eq!(report.suite("lyubeznik").unwrap().checked, 2);
        assert!(verify_all(1, Exec::Sequential).is_err());
    }

    #[test]
    fn corrupted_closed_form_fails_with_location() {
        let bad = |n: usize, k: usize| {
            let p = l_closed(n, k)?;
            if n == 7 && k == 2 {
                p.add(&Poly::monomial(1, 0, 1))
            } else {
                Ok(p)
            }
        };
        let report = verify_all_with(8, Exec::Parallel, &bad).unwrap();
        assert!(!report.pass);
        let lyu = report.suite("lyubeznik").unwrap();
        assert!(!lyu.pass);
        let msg = lyu.failure.as_deref().unwrap();
        assert!(
            msg.contains("n=7") && msg.contains("k=2") && msg.contains("q^0 w^1"),
            "{msg}"
        );
        assert!(report
            .suites
            .iter()
            .filter(|s| s.name != "lyubeznik")
            .all(|s| s.pass));
    }
}
