//! Membership and constructive generation for the three path classes.
//!
//! - [`PathClass::R`]: every block satisfies `v_i >= ⌈p_i·s/r⌉`.
//! - [`PathClass::RTilde`]: as `R`, and every block has `p_i <= r`.
//! - [`PathClass::Q`]: `p_i <= r`; the valley bound holds for every block but
//!   the last, which may instead have `v_k = 0`, or any `v_k` when `p_k = r`.
//!
//! Generation follows the first-return decompositions of each class. The
//! brute-force oracle ([`oracle_all_height2`], [`oracle_generate`]) is
//! independent of the factorization and exists for differential testing.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::param::RationalParam;
use crate::path::{DyckPath, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathClass {
    R,
    RTilde,
    Q,
}

impl PathClass {
    pub const ALL: [PathClass; 3] = [PathClass::R, PathClass::RTilde, PathClass::Q];

    /// Whether 1-peak runs are capped at `r`.
    fn caps_peaks(self) -> bool {
        !matches!(self, PathClass::R)
    }
}

impl fmt::Display for PathClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathClass::R => "R",
            PathClass::RTilde => "Rtilde",
            PathClass::Q => "Q",
        })
    }
}

impl FromStr for PathClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "r" => Ok(PathClass::R),
            "rtilde" | "r~" | "rt" => Ok(PathClass::RTilde),
            "q" => Ok(PathClass::Q),
            _ => Err(Error::Precondition(format!("unknown path class {s:?}"))),
        }
    }
}

pub fn member(q: RationalParam, class: PathClass, path: &DyckPath) -> bool {
    if path.is_empty() {
        return true;
    }
    let Ok(factorization) = path.factorize() else {
        return false;
    };
    let blocks = factorization.blocks();
    let r = q.r_len();
    if class.caps_peaks() && blocks.iter().any(|b| b.peaks > r) {
        return false;
    }
    let (last, init) = match (class, blocks.split_last()) {
        (PathClass::Q, Some((last, init))) => (Some(last), init),
        _ => (None, blocks),
    };
    if init.iter().any(|b| b.valleys < q.min_valleys(b.peaks)) {
        return false;
    }
    match last {
        Some(b) => b.peaks == r || b.valleys == 0 || b.valleys >= q.min_valleys(b.peaks),
        None => true,
    }
}

/// `U (UD)^p (DU)^{⌈ps/r⌉-1} D`, the first-return factor for a run of `p ≥ 1` peaks.
pub fn peak_prefix(q: RationalParam, p: usize) -> DyckPath {
    DyckPath::from_runs([(p, q.min_valleys(p) - 1)])
}

/// `U · pr_ℓ((UD)^r (DU)^{s-1}) · D` for `1 ≤ ℓ ≤ r+s-1`: semilength `ℓ + 1`.
pub fn prefix_family_path(q: RationalParam, len: usize) -> DyckPath {
    let r = q.r_len();
    let peaks = len.min(r);
    DyckPath::from_runs([(peaks, len - peaks)])
}

/// Memoizing constructive generator for one class.
#[derive(Clone, Debug)]
pub struct Generator {
    q: RationalParam,
    class: PathClass,
    levels: Vec<Vec<DyckPath>>,
}

impl Generator {
    pub fn new(q: RationalParam, class: PathClass) -> Self {
        Self {
            q,
            class,
            levels: vec![vec![DyckPath::empty()]],
        }
    }

    /// Members of semilength `n`, sorted.
    pub fn level(&mut self, n: usize) -> &[DyckPath] {
        while self.levels.len() <= n {
            let next = self.build(self.levels.len());
            self.levels.push(next);
        }
        &self.levels[n]
    }

    fn build(&self, n: usize) -> Vec<DyckPath> {
        let q = self.q;
        let ud = DyckPath::flat(1);
        let mut out: Vec<DyckPath> = self.levels[n - 1].iter().map(|p| ud.concat(p)).collect();

        if self.class == PathClass::Q && (2..=q.period()).contains(&n) {
            out.push(prefix_family_path(q, n - 1));
        }

        let mut max_p = q.max_peaks_within(n - 1);
        if self.class.caps_peaks() {
            max_p = max_p.min(q.r_len());
        }
        for p in 1..=max_p {
            let rest = n - q.part_size(p);
            let prefix = peak_prefix(q, p);
            out.extend(self.levels[rest].iter().map(|tail| prefix.concat(tail)));
        }
        out.sort_unstable();
        debug_assert!(out.windows(2).all(|w| w[0] != w[1]), "branches overlap");
        out
    }
}

/// Members of `class` with semilength `n`, in lexicographic order (`U < D`).
pub fn generate(q: RationalParam, class: PathClass, n: usize) -> Vec<DyckPath> {
    Generator::new(q, class).level(n).to_vec()
}

/// Every Dyck path of semilength `n` and height at most 2, by depth-first search.
pub fn oracle_all_height2(n: usize) -> Vec<DyckPath> {
    fn walk(
        steps: &mut Vec<Step>,
        level: usize,
        ups_left: usize,
        downs_left: usize,
        out: &mut Vec<DyckPath>,
    ) {
        if ups_left == 0 && downs_left == 0 {
            out.push(DyckPath::from_steps(steps.clone()).expect("search yields valid paths"));
            return;
        }
        if ups_left > 0 && level < 2 {
            steps.push(Step::Up);
            walk(steps, level + 1, ups_left - 1, downs_left, out);
            steps.pop();
        }
        if level > 0 {
            steps.push(Step::Down);
            walk(steps, level - 1, ups_left, downs_left - 1, out);
            steps.pop();
        }
    }
    let mut out = Vec::new();
    walk(&mut Vec::with_capacity(2 * n), 0, n, n, &mut out);
    out
}

/// Brute-force filter of [`oracle_all_height2`] through [`member`].
pub fn oracle_generate(q: RationalParam, class: PathClass, n: usize) -> Vec<DyckPath> {
    oracle_all_height2(n)
        .into_iter()
        .filter(|p| member(q, class, p))
        .collect()
}
