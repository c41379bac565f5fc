//! Local cohomology supported at the origin, `Σ_j [H^j_{0}(M)] q^j`.
//!
//! Anything supported at the origin is a direct sum of copies of `E`, so
//! each result is a plain q-polynomial counting copies of `E` per degree.

use crate::error::{Error, Result};
use crate::gaussian::q4_binomial;
use crate::poly::Poly;

fn check(what: &'static str, index: usize, max: usize, m: usize) -> Result<()> {
    if index > max {
        return Err(Error::range(
            what,
            format!("{index} with m = {m}; need <= {max}"),
        ));
    }
    Ok(())
}

/// `<Pf^{-2k}>` for `n = 2m`, `0 <= k <= m-1`:
/// `q^{m(2m-1) - k(2k+3) - 4(m-k-1)k} binom(m-1, m-k-1)_{q^4}`.
pub fn h0_pf_pole(m: usize, k: usize) -> Result<Poly> {
    if m == 0 {
        return Err(Error::range("m", "need m >= 1"));
    }
    check("k", k, m - 1, m)?;
    let (m, k) = (m as i64, k as i64);
    let exp = m * (2 * m - 1) - k * (2 * k + 3) - 4 * (m - k - 1) * k;
    q4_binomial(m - 1, m - k - 1)?.shift(exp, 0)
}

/// `Q_p` for `n = 2m`, `0 <= p <= m-1`: `q^{p(2p+3)} binom(m-1, p)_{q^4}`.
pub fn h0_q(m: usize, p: usize) -> Result<Poly> {
    if m == 0 {
        return Err(Error::range("m", "need m >= 1"));
    }
    check("p", p, m - 1, m)?;
    let (m, p) = (m as i64, p as i64);
    q4_binomial(m - 1, p)?.shift(p * (2 * p + 3), 0)
}

/// `D_s` for `n = 2m`, `0 <= s <= m`: `q^{s(2s-1)} binom(m, s)_{q^4}`.
pub fn h0_d_even(m: usize, s: usize) -> Result<Poly> {
    check("s", s, m, m)?;
    let (m, s) = (m as i64, s as i64);
    q4_binomial(m, s)?.shift(s * (2 * s - 1), 0)
}

/// `D_p` for `n = 2m+1`, `0 <= p <= m`: `q^{p(2p+1)} binom(m, p)_{q^4}`.
pub fn h0_d_odd(m: usize, p: usize) -> Result<Poly> {
    check("p", p, m, m)?;
    let (m, p) = (m as i64, p as i64);
    q4_binomial(m, p)?.shift(p * (2 * p + 1), 0)
}

/// Right-hand side of the `D_s` splice before the Pascal collapse:
/// `h0(<Pf^{-2(m-s)}>) + q^{-1} h0(<Pf^{-2(m-s-1)}>)`, for `1 <= s <= m-1`.
pub fn h0_d_even_spliced(m: usize, s: usize) -> Result<Poly> {
    if s == 0 || s >= m {
        return Err(Error::range(
            "s",
            format!("{s} with m = {m}; need 1 <= s <= m-1"),
        ));
    }
    let head = h0_pf_pole(m, m - s)?;
    let tail = h0_pf_pole(m, m - s - 1)?.shift(-1, 0)?;
    head.add(&tail)
}
