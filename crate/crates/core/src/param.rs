//! The rational parameter q = r/s and the integer quantities derived from it.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A positive rational `r/s` in lowest terms. Input that is not in lowest
/// terms is rejected rather than reduced, since `r` itself bounds run lengths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalParam {
    r: u64,
    s: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl RationalParam {
    pub fn new(r: u64, s: u64) -> Result<Self> {
        if r == 0 || s == 0 {
            return Err(Error::NonPositiveParam { r, s });
        }
        if gcd(r, s) != 1 {
            return Err(Error::NotCoprime { r, s });
        }
        Ok(Self { r, s })
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    /// `r` as a run-length bound.
    pub fn r_len(&self) -> usize {
        to_usize(self.r as u128)
    }

    /// `r + s`, the period of the part sizes.
    pub fn period(&self) -> usize {
        to_usize(self.r as u128 + self.s as u128)
    }

    /// ⌈p·s/r⌉: the fewest 0-valleys allowed after `p` consecutive 1-peaks.
    /// Zero for `p = 0`.
    pub fn min_valleys(&self, p: usize) -> usize {
        let (r, s) = (self.r as u128, self.s as u128);
        to_usize((p as u128 * s).div_ceil(r))
    }

    /// `p + ⌈p·s/r⌉`, the semilength of the factor `U(UD)^p(DU)^{⌈ps/r⌉-1}D`.
    pub fn part_size(&self, p: usize) -> usize {
        p.checked_add(self.min_valleys(p))
            .expect("part size overflows usize")
    }

    /// Largest `p` with `part_size(p) <= limit`, or 0 when there is none.
    pub fn max_peaks_within(&self, limit: usize) -> usize {
        // part_size(p) >= p + p*s/r, so p <= limit*r/(r+s) bounds the search.
        let upper = (limit as u128 * self.r as u128 / (self.r as u128 + self.s as u128)) as usize;
        let mut p = upper + 1;
        while p > 0 && self.part_size(p) > limit {
            p -= 1;
        }
        p
    }

    /// The `p ≥ 1` with `part_size(p) == part`, if any.
    pub fn peaks_for_part(&self, part: usize) -> Option<usize> {
        let p = self.max_peaks_within(part);
        (p >= 1 && self.part_size(p) == part).then_some(p)
    }

    /// `t` such that `s = t·r + 1`, when it exists (t = 0 allowed).
    pub fn t_param(&self) -> Option<u64> {
        (self.s - 1)
            .is_multiple_of(self.r)
            .then(|| (self.s - 1) / self.r)
    }

    /// `⌊(s-1)/r⌋`: the `t` with `t·r + 1 ≤ s ≤ (t+1)·r`. Equals
    /// [`t_param`](Self::t_param) when that exists.
    pub fn t_floor(&self) -> u64 {
        (self.s - 1) / self.r
    }

    /// ν_j = ⌈j·s/r⌉ for `1 ≤ j ≤ r`, which equals `j·t + 1` when `s = t·r + 1`.
    pub fn nu(&self, j: usize) -> Result<usize> {
        let t = self.t_param().ok_or(Error::NoTParam {
            r: self.r,
            s: self.s,
        })?;
        if j == 0 || j as u64 > self.r {
            return Err(Error::IndexOutOfRange { j, r: self.r });
        }
        let by_ceiling = self.min_valleys(j);
        let by_line = to_usize(j as u128 * t as u128 + 1);
        if by_ceiling != by_line {
            return Err(Error::FormulaMismatch(format!(
                "nu_{j} for {self}: ceiling gives {by_ceiling}, j*t+1 gives {by_line}"
            )));
        }
        Ok(by_ceiling)
    }
}

fn to_usize(v: u128) -> usize {
    usize::try_from(v).expect("value overflows usize")
}

impl fmt::Display for RationalParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.r, self.s)
    }
}

impl FromStr for RationalParam {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let syntax = || Error::ParamSyntax(text.to_string());
        let (r, s) = text.trim().split_once('/').ok_or_else(syntax)?;
        let r = r.trim().parse::<u64>().map_err(|_| syntax())?;
        let s = s.trim().parse::<u64>().map_err(|_| syntax())?;
        Self::new(r, s)
    }
}
