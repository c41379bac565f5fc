//! Gaussian binomial coefficients.

use crate::error::{Error, Result};
use crate::partitions::enumerate_box;
use crate::poly::Poly;

fn check_args(a: i64, b: i64) -> Result<(usize, usize)> {
    if b < 0 || a < b {
        return Err(Error::range(
            "gaussian binomial",
            format!("({a} choose {b}) needs a >= b >= 0"),
        ));
    }
    Ok((a as usize, b as usize))
}

/// `binom(a, b)_q` for `a >= b >= 0`, built from the recurrence
/// `binom(a, b) = binom(a-1, b-1) + q^b binom(a-1, b)` so that only
/// integer additions are ever performed.
pub fn gaussian_binomial(a: i64, b: i64) -> Result<Poly> {
    let (a, b) = check_args(a, b)?;
    // row[j] holds binom(r, j) for j <= min(r, b); rebuilt in place, high j first.
    let mut row: Vec<Poly> = vec![Poly::one()];
    for r in 1..=a {
        if r <= b {
            row.push(Poly::one());
        }
        for j in (1..r.min(b + 1)).rev() {
            let shifted = row[j].shift(j as i64, 0)?;
            row[j] = row[j - 1].add(&shifted)?;
        }
    }
    Ok(row.swap_remove(b))
}

/// `binom(a, b)` evaluated at `q^power`.
pub fn gaussian_binomial_pow(a: i64, b: i64, power: i64) -> Result<Poly> {
    gaussian_binomial(a, b)?.substitute_power(power)
}

/// `binom(a, b)_{q^4}`, the form every local cohomology formula uses.
pub fn q4_binomial(a: i64, b: i64) -> Result<Poly> {
    gaussian_binomial_pow(a, b, 4)
}

/// Independent route: sum of `q^{|x|}` over partitions `x` with at most
/// `a - b` parts, each at most `b`.
pub fn gaussian_binomial_oracle(a: i64, b: i64) -> Result<Poly> {
    let (a, b) = check_args(a, b)?;
    Poly::from_terms(enumerate_box(a - b, b as u32).map(|x| (x.size() as i64, 0, 1)))
}
