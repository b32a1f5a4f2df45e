//! Dyck paths over the step alphabet {U, D} and their block factorization.
//!
//! A nonempty path of height at most two always reads
//! `U (UD)^{p_1} (DU)^{v_1} ... (UD)^{p_k} (DU)^{v_k} D`: after the first step
//! the walk sits at height 1 and every following pair of steps is either a
//! 1-peak `UD` or a 0-valley `DU`. [`Factorization`] records the maximal runs
//! of those pairs as [`Block`]s.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }
}

/// A validated Dyck path. The derived ordering is lexicographic with `U < D`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    /// The empty path ε.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_steps(steps: Vec<Step>) -> Result<Self> {
        let mut level = 0usize;
        for (index, step) in steps.iter().enumerate() {
            match step {
                Step::Up => level += 1,
                Step::Down => {
                    level = level.checked_sub(1).ok_or(Error::BelowAxis { index })?;
                }
            }
        }
        if level != 0 {
            return Err(Error::Unbalanced { height: level });
        }
        Ok(Self { steps })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let steps = text
            .chars()
            .enumerate()
            .map(|(index, c)| match c {
                'U' => Ok(Step::Up),
                'D' => Ok(Step::Down),
                found => Err(Error::InvalidStep { index, found }),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_steps(steps)
    }

    pub fn render(&self) -> String {
        self.steps.iter().map(|s| s.as_char()).collect()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Maximum ordinate reached; 0 for ε.
    pub fn height(&self) -> usize {
        let mut level = 0usize;
        let mut max = 0usize;
        for step in &self.steps {
            match step {
                Step::Up => {
                    level += 1;
                    max = max.max(level);
                }
                Step::Down => level -= 1,
            }
        }
        max
    }

    /// Concatenation of two Dyck paths.
    pub fn concat(&self, other: &DyckPath) -> DyckPath {
        let mut steps = Vec::with_capacity(self.steps.len() + other.steps.len());
        steps.extend_from_slice(&self.steps);
        steps.extend_from_slice(&other.steps);
        DyckPath { steps }
    }

    /// `(UD)^count`.
    pub fn flat(count: usize) -> DyckPath {
        let mut steps = Vec::with_capacity(2 * count);
        for _ in 0..count {
            steps.push(Step::Up);
            steps.push(Step::Down);
        }
        DyckPath { steps }
    }

    /// Builds `U (UD)^{a_1} (DU)^{b_1} ... (UD)^{a_m} (DU)^{b_m} D` from arbitrary
    /// runs. The result is always a path of height at most two, but the runs
    /// need not be maximal (zero-length interior runs are allowed).
    pub fn from_runs<I>(runs: I) -> DyckPath
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut steps = vec![Step::Up];
        for (peaks, valleys) in runs {
            for _ in 0..peaks {
                steps.push(Step::Up);
                steps.push(Step::Down);
            }
            for _ in 0..valleys {
                steps.push(Step::Down);
                steps.push(Step::Up);
            }
        }
        steps.push(Step::Down);
        DyckPath { steps }
    }

    /// Block factorization of a nonempty path of height at most two.
    pub fn factorize(&self) -> Result<Factorization> {
        if self.is_empty() {
            return Err(Error::EmptyPath);
        }
        let height = self.height();
        if height > 2 {
            return Err(Error::HeightExceeded { height });
        }
        let middle = &self.steps[1..self.steps.len() - 1];
        let mut blocks: Vec<Block> = Vec::new();
        for pair in middle.chunks_exact(2) {
            let is_peak = pair[0] == Step::Up;
            match blocks.last_mut() {
                Some(last) if is_peak && last.valleys == 0 => last.peaks += 1,
                Some(last) if !is_peak => last.valleys += 1,
                _ if is_peak => blocks.push(Block::new(1, 0)),
                _ => blocks.push(Block::new(0, 1)),
            }
        }
        Ok(Factorization { blocks })
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            write!(f, "{}", step.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// A maximal run of 1-peaks followed by a maximal run of 0-valleys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block {
    pub peaks: usize,
    pub valleys: usize,
}

impl Block {
    pub const fn new(peaks: usize, valleys: usize) -> Self {
        Self { peaks, valleys }
    }
}

impl From<(usize, usize)> for Block {
    fn from((peaks, valleys): (usize, usize)) -> Self {
        Self { peaks, valleys }
    }
}

/// The block decomposition of a nonempty height-≤2 path. `UD` has no blocks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Factorization {
    blocks: Vec<Block>,
}

impl Factorization {
    /// Validates maximality: every block but the first has peaks, every block
    /// but the last has valleys, and a lone block is not `(0, 0)`.
    pub fn new(blocks: Vec<Block>) -> Result<Self> {
        let k = blocks.len();
        for (i, block) in blocks.iter().enumerate() {
            if i > 0 && block.peaks == 0 {
                return Err(Error::InvalidFactorization(format!(
                    "block {} has no peaks",
                    i + 1
                )));
            }
            if i + 1 < k && block.valleys == 0 {
                return Err(Error::InvalidFactorization(format!(
                    "block {} has no valleys but is not last",
                    i + 1
                )));
            }
        }
        if k == 1 && blocks[0] == Block::new(0, 0) {
            return Err(Error::InvalidFactorization(
                "a single block cannot be (0, 0)".into(),
            ));
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn last(&self) -> Option<Block> {
        self.blocks.last().copied()
    }

    pub fn semilength(&self) -> usize {
        1 + self
            .blocks
            .iter()
            .map(|b| b.peaks + b.valleys)
            .sum::<usize>()
    }

    pub fn defactorize(&self) -> DyckPath {
        DyckPath::from_runs(self.blocks.iter().map(|b| (b.peaks, b.valleys)))
    }
}
