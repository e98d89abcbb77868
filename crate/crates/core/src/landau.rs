//! `lcm(1..n)` (the exponent of `S_n`) against Landau's function `g(n)` (the
//! largest element order in `S_n`).

use std::io::Write;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::primes_upto;
use crate::error::{Error, Result};
use crate::group::big;

/// Largest `n` accepted by [`landau_g`].
pub const LANDAU_CAP: usize = 200;

pub fn lcm_upto(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc.lcm(&big(k)))
}

/// Largest lcm of a partition of `n`. Knapsack over prime powers: each prime
/// contributes at most one power, and unused budget is filled with 1-parts.
pub fn landau_g(n: usize) -> Result<BigUint> {
    Ok(landau_prefix(n)?.pop().expect("n + 1 entries"))
}

/// `g(0), g(1), ..., g(n)`.
fn landau_prefix(n: usize) -> Result<Vec<BigUint>> {
    if n > LANDAU_CAP {
        return Err(Error::InvalidFamily(format!(
            "landau table capped at {LANDAU_CAP}, got {n}"
        )));
    }
    // best[m]: largest product of coprime prime powers with sum <= m.
    let mut best = vec![BigUint::one(); n + 1];
    for p in primes_upto(n as u64) {
        let p = p as usize;
        for m in (0..=n).rev() {
            let mut q = p;
            while q <= m {
                let candidate = &best[m - q] * big(q as u64);
                if candidate > best[m] {
                    best[m] = candidate;
                }
                q *= p;
            }
        }
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LandauRow {
    pub n: usize,
    #[serde(rename = "lcm", with = "crate::bigser")]
    pub lcm_value: BigUint,
    #[serde(rename = "g", with = "crate::bigser")]
    pub g_value: BigUint,
    /// `lcm / g` in lowest terms.
    #[serde(with = "crate::bigser")]
    pub ratio_num: BigUint,
    #[serde(with = "crate::bigser")]
    pub ratio_den: BigUint,
}

/// Rows for `n = 1..=max`.
pub fn landau_table(max: usize) -> Result<Vec<LandauRow>> {
    let g = landau_prefix(max)?;
    let mut lcm = BigUint::one();
    let mut rows = Vec::with_capacity(max);
    for (n, g) in g.into_iter().enumerate().skip(1) {
        lcm = lcm.lcm(&big(n as u64));
        let gcd = lcm.gcd(&g);
        rows.push(LandauRow {
            n,
            lcm_value: lcm.clone(),
            ratio_num: &lcm / &gcd,
            ratio_den: &g / &gcd,
            g_value: g,
        });
    }
    Ok(rows)
}

/// CSV with header `n,lcm,g,ratio_num,ratio_den`.
pub fn write_landau_csv<W: Write>(rows: &[LandauRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "lcm", "g", "ratio_num", "ratio_den"])?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            r.lcm_value.to_string(),
            r.g_value.to_string(),
            r.ratio_num.to_string(),
            r.ratio_den.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn lcm_examples() {
        assert_eq!(lcm_upto(1), big(1));
        assert_eq!(lcm_upto(6), big(60));
        assert_eq!(lcm_upto(10), big(2520));
    }

    #[test]
    fn landau_examples() {
        let expected = [1u64, 1, 2, 3, 4, 6, 6, 12, 15, 20, 30, 30, 60, 60, 84, 105];
        for (n, &g) in expected.iter().enumerate() {
            assert_eq!(landau_g(n).unwrap(), big(g), "n = {n}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(landau_g(LANDAU_CAP).is_ok());
        assert!(landau_g(LANDAU_CAP + 1).is_err());
    }

    #[test]
    fn table_divides_and_is_monotone() {
        let rows = landau_table(LANDAU_CAP).unwrap();
        assert_eq!(rows.len(), LANDAU_CAP);
        for r in &rows {
            assert!((&r.lcm_value % &r.g_value).is_zero());
            assert_eq!(r.ratio_den, big(1));
        }
        for w in rows.windows(2) {
            assert!(w[0].lcm_value <= w[1].lcm_value && w[0].g_value <= w[1].g_value);
        }
    }

    #[test]
    fn csv_header() {
        let mut buf = Vec::new();
        write_landau_csv(&landau_table(3).unwrap(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "n,lcm,g,ratio_num,ratio_den\n1,1,1,1,1\n2,2,2,1,1\n3,6,3,2,1\n");
    }
}
