//! Compositions with parts in `A_{r/s} = {1} ∪ {p + ⌈ps/r⌉ : p ≥ 1}` or its
//! finite restriction `Ã_{r/s}` (`p ≤ r`), and the bijection with rational
//! Dyck paths of one greater semilength.
//!
//! Part 1 maps to `UD`; part `p + ⌈ps/r⌉` maps to `U(UD)^p(DU)^{⌈ps/r⌉-1}D`.
//! The concatenation of the images is closed with a final `UD`.

use std::fmt;
use std::str::FromStr;

use crate::classes::{member, peak_prefix, PathClass};
use crate::error::{Error, Result};
use crate::param::RationalParam;
use crate::path::{DyckPath, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PartSet {
    pub q: RationalParam,
    pub finite: bool,
}

impl PartSet {
    /// `A_{r/s}`
    pub fn unbounded(q: RationalParam) -> Self {
        Self { q, finite: false }
    }

    /// `Ã_{r/s}`
    pub fn bounded(q: RationalParam) -> Self {
        Self { q, finite: true }
    }

    fn max_peaks(&self, limit: usize) -> usize {
        let p = self.q.max_peaks_within(limit);
        if self.finite {
            p.min(self.q.r_len())
        } else {
            p
        }
    }

    pub fn contains(&self, part: usize) -> bool {
        part == 1 || self.peaks_for(part).is_some()
    }

    /// The run length `p` a part `> 1` encodes.
    fn peaks_for(&self, part: usize) -> Option<usize> {
        self.q
            .peaks_for_part(part)
            .filter(|&p| !self.finite || p <= self.q.r_len())
    }

    /// Elements `≤ limit`, ascending.
    pub fn parts_upto(&self, limit: usize) -> Vec<usize> {
        let mut parts = Vec::new();
        if limit >= 1 {
            parts.push(1);
        }
        parts.extend((1..=self.max_peaks(limit)).map(|p| self.q.part_size(p)));
        parts
    }
}

/// Ordered parts; the empty composition is the composition of 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    pub parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Self { parts }
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// `1+3+1`, with `0` for the empty composition.
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "0" || text.is_empty() {
            return Ok(Self::default());
        }
        text.split('+')
            .map(|part| match part.trim().parse::<usize>() {
                Ok(v) if v > 0 => Ok(v),
                _ => Err(Error::CompositionSyntax(text.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

/// Compositions of `n` with parts from `set`, lexicographic on part sequences.
pub fn enumerate_compositions(set: PartSet, n: usize) -> Vec<Composition> {
    fn extend(parts: &[usize], rest: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition::new(current.clone()));
            return;
        }
        for &part in parts.iter().take_while(|&&p| p <= rest) {
            current.push(part);
            extend(parts, rest - part, current, out);
            current.pop();
        }
    }
    let parts = set.parts_upto(n.max(1));
    let mut out = Vec::new();
    extend(&parts, n, &mut Vec::new(), &mut out);
    out
}

/// Image of a composition with parts in `A_{r/s}`: a member of `R_{n+1}`.
pub fn comp_to_path(q: RationalParam, composition: &Composition) -> Result<DyckPath> {
    let set = PartSet::unbounded(q);
    let mut path = DyckPath::empty();
    for &part in &composition.parts {
        let factor = if part == 1 {
            DyckPath::flat(1)
        } else {
            let p = set.peaks_for(part).ok_or(Error::PartNotInSet { part })?;
            peak_prefix(q, p)
        };
        path = path.concat(&factor);
    }
    Ok(path.concat(&DyckPath::flat(1)))
}

/// Inverse of [`comp_to_path`] on `R^{r/s} \ {ε}`.
///
/// The path is split at its returns to the axis. `UD` factors are parts equal
/// to 1, except that a tall factor `U(UD)^pD` absorbs the next `⌈ps/r⌉ - 1`
/// of them. The final `UD` closes the path and is dropped.
pub fn path_to_comp(q: RationalParam, path: &DyckPath) -> Result<Composition> {
    if path.is_empty() {
        return Err(Error::EmptyPath);
    }
    let not_member = || Error::NotMember {
        class: PathClass::R.to_string(),
        path: path.render(),
    };
    if !member(q, PathClass::R, path) {
        return Err(not_member());
    }
    // peaks of each primitive factor: 0 for UD, p for U(UD)^pD
    let mut factors = Vec::new();
    let mut level = 0usize;
    let mut peaks = 0usize;
    for step in path.steps() {
        match step {
            Step::Up => {
                level += 1;
                if level == 2 {
                    peaks += 1;
                }
            }
            Step::Down => {
                level -= 1;
                if level == 0 {
                    factors.push(peaks);
                    peaks = 0;
                }
            }
        }
    }
    if factors.pop() != Some(0) {
        return Err(not_member());
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < factors.len() {
        match factors[i] {
            0 => {
                parts.push(1);
                i += 1;
            }
            p => {
                let absorbed = q.min_valleys(p) - 1;
                let end = i + 1 + absorbed;
                if end > factors.len() || factors[i + 1..end].iter().any(|&f| f != 0) {
                    return Err(not_member());
                }
                parts.push(q.part_size(p));
                i = end;
            }
        }
    }
    Ok(Composition::new(parts))
}
