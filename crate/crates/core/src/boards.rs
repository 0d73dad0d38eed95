//! Ferrers boards inside an `n x n` grid.
//!
//! Cells are `(row, column)` pairs, 1-based, with row 1 at the top. Column `j`
//! of a board occupies rows `1..=c_j`, so boards are justified to the top
//! right and the heights `c_1 <= c_2 <= ... <= c_n` weakly increase.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FerrersBoard {
    heights: Vec<usize>,
}

impl FerrersBoard {
    /// Board with the given weakly increasing column heights; `n` is the
    /// number of columns. Heights above `n` give an inadmissible board.
    pub fn new(heights: Vec<usize>) -> Result<Self> {
        if heights.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotFerrers(
                heights.iter().map(|&h| h as i64).collect(),
            ));
        }
        Ok(Self { heights })
    }

    /// Like [`FerrersBoard::new`] but accepts signed input, rejecting negatives.
    pub fn from_signed(heights: &[i64]) -> Result<Self> {
        if let Some(&h) = heights.iter().find(|&&h| h < 0) {
            return Err(Error::NegativeHeight(h));
        }
        if heights.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotFerrers(heights.to_vec()));
        }
        Ok(Self {
            heights: heights.iter().map(|&h| h as usize).collect(),
        })
    }

    /// `B(n)`: squares `(i, j)` with `i < j`, heights `0, 1, ..., n-1`.
    pub fn triangular(n: usize) -> Self {
        Self {
            heights: (0..n).collect(),
        }
    }

    /// Heights `1, 2, ..., n` (upper-triangular support).
    pub fn staircase(n: usize) -> Self {
        Self {
            heights: (1..=n).collect(),
        }
    }

    pub fn trivial(n: usize) -> Self {
        Self {
            heights: vec![0; n],
        }
    }

    pub fn full(n: usize) -> Self {
        Self {
            heights: vec![n; n],
        }
    }

    /// `G_v`: the first `v_1` columns are empty, the next `v_2` have height
    /// `v_1`, and so on.
    pub fn g_board(v: &[usize]) -> Self {
        let mut heights = Vec::with_capacity(v.iter().sum());
        let mut below = 0;
        for &vi in v {
            heights.extend(std::iter::repeat_n(below, vi));
            below += vi;
        }
        Self { heights }
    }

    pub fn n(&self) -> usize {
        self.heights.len()
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    /// Height of column `j` (1-based).
    pub fn height(&self, j: usize) -> usize {
        self.heights[j - 1]
    }

    pub fn area(&self) -> usize {
        self.heights.iter().sum()
    }

    pub fn max_height(&self) -> usize {
        self.heights.last().copied().unwrap_or(0)
    }

    pub fn is_admissible(&self) -> bool {
        self.max_height() <= self.n()
    }

    pub fn require_admissible(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::Inadmissible(self.heights.clone(), self.n()))
        }
    }

    /// Whether `(i, j)` lies on the board (1-based).
    pub fn contains(&self, i: usize, j: usize) -> bool {
        j >= 1 && j <= self.n() && i >= 1 && i <= self.heights[j - 1]
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let rows = self.max_height();
        let mut out = Vec::with_capacity(self.area());
        for i in 1..=rows {
            for j in 1..=self.n() {
                if self.contains(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `B^c` with heights `n - c_n, ..., n - c_1`.
    pub fn complement(&self) -> Result<Self> {
        self.require_admissible()?;
        let n = self.n();
        Ok(Self {
            heights: self.heights.iter().rev().map(|&c| n - c).collect(),
        })
    }

    /// Reflection about the cross diagonal, `(i, j) -> (n-j+1, n-i+1)`.
    pub fn flip(&self) -> Result<Self> {
        self.require_admissible()?;
        let n = self.n();
        // column j' collects the columns r with c_r >= n - j' + 1
        let heights = (1..=n)
            .map(|jp| self.heights.iter().filter(|&&c| c + jp > n).count())
            .collect();
        Ok(Self { heights })
    }

    /// `B(0, c_1, ..., c_n)`: one extra empty column on the left.
    pub fn add_empty_column(&self) -> Self {
        let mut heights = Vec::with_capacity(self.n() + 1);
        heights.push(0);
        heights.extend_from_slice(&self.heights);
        Self { heights }
    }

    /// Maximal runs of equal height as a step spec.
    pub fn step_decomposition(&self) -> StepSpec {
        let mut steps = Vec::new();
        let mut prev = 0;
        for run in self.sections() {
            let h = self.heights[*run.start() - 1];
            steps.push(Step {
                rise: h - prev,
                width: run.end() - run.start() + 1,
            });
            prev = h;
        }
        StepSpec { steps }
    }

    /// Maximal intervals of consecutive columns with equal height, 1-based inclusive.
    pub fn sections(&self) -> Vec<RangeInclusive<usize>> {
        let mut out = Vec::new();
        let mut start = 1;
        for j in 2..=self.n() + 1 {
            if j > self.n() || self.heights[j - 1] != self.heights[start - 1] {
                out.push(start..=j - 1);
                start = j;
            }
        }
        out
    }

    /// All Ferrers boards in an `n x n` grid with heights at most `max_height`.
    pub fn all(n: usize, max_height: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut heights = Vec::with_capacity(n);
        fn rec(n: usize, max: usize, lo: usize, h: &mut Vec<usize>, out: &mut Vec<FerrersBoard>) {
            if h.len() == n {
                out.push(FerrersBoard { heights: h.clone() });
                return;
            }
            for c in lo..=max {
                h.push(c);
                rec(n, max, c, h, out);
                h.pop();
            }
        }
        rec(n, max_height, 0, &mut heights, &mut out);
        out
    }

    /// All admissible boards in an `n x n` grid.
    pub fn all_admissible(n: usize) -> Vec<Self> {
        Self::all(n, n)
    }
}

impl fmt::Debug for FerrersBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{:?}", self.heights)
    }
}

impl fmt::Display for FerrersBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("heights:")?;
        for (i, h) in self.heights.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{h}")?;
        }
        Ok(())
    }
}

/// One block of a step board: `width` columns whose height is `rise` more
/// than the previous block's.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub rise: usize,
    pub width: usize,
}

/// `B(h_1, d_1; ...; h_t, d_t)`: the first `d_1` columns have height `h_1`,
/// the next `d_2` have height `h_1 + h_2`, etc. Rises may be zero, so several
/// specs can describe the same board.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StepSpec {
    steps: Vec<Step>,
}

impl StepSpec {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if let Some(i) = steps.iter().position(|s| s.width == 0) {
            return Err(Error::InvalidSteps(format!(
                "block {} has zero width",
                i + 1
            )));
        }
        Ok(Self { steps })
    }

    /// From `(h_i, d_i)` pairs.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .map(|&(rise, width)| Step { rise, width })
                .collect(),
        )
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn t(&self) -> usize {
        self.steps.len()
    }

    pub fn n(&self) -> usize {
        self.steps.iter().map(|s| s.width).sum()
    }

    pub fn widths(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.width).collect()
    }

    /// `D_0 = 0, D_1, ..., D_t`.
    pub fn width_sums(&self) -> Vec<usize> {
        partial_sums(self.steps.iter().map(|s| s.width))
    }

    /// `H_0 = 0, H_1, ..., H_t`.
    pub fn height_sums(&self) -> Vec<usize> {
        partial_sums(self.steps.iter().map(|s| s.rise))
    }

    pub fn expand(&self) -> FerrersBoard {
        let mut heights = Vec::with_capacity(self.n());
        let mut h = 0;
        for s in &self.steps {
            h += s.rise;
            heights.extend(std::iter::repeat_n(h, s.width));
        }
        FerrersBoard { heights }
    }

    /// Truncates the last block.
    pub fn without_last(&self) -> Self {
        let mut steps = self.steps.clone();
        steps.pop();
        Self { steps }
    }

    /// Every step spec with `1 <= Σd_i <= max_n`, all compositions of the width,
    /// and rises `0..=max_rise`.
    pub fn enumerate(max_n: usize, max_rise: usize) -> Vec<Self> {
        let mut out = Vec::new();
        fn rec(left: usize, max_rise: usize, cur: &mut Vec<Step>, out: &mut Vec<StepSpec>) {
            if !cur.is_empty() {
                out.push(StepSpec { steps: cur.clone() });
            }
            for width in 1..=left {
                for rise in 0..=max_rise {
                    cur.push(Step { rise, width });
                    rec(left - width, max_rise, cur, out);
                    cur.pop();
                }
            }
        }
        rec(max_n, max_rise, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for StepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("steps:")?;
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}x{}", s.rise, s.width)?;
        }
        Ok(())
    }
}

fn partial_sums(xs: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut out = vec![0];
    let mut acc = 0;
    for x in xs {
        acc += x;
        out.push(acc);
    }
    out
}

/// A parsed board spec. Step specs keep their blocks since some formulas
/// depend on the chosen decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoardSpec {
    Heights(FerrersBoard),
    Steps(StepSpec),
}

impl BoardSpec {
    pub fn board(&self) -> FerrersBoard {
        match self {
            BoardSpec::Heights(b) => b.clone(),
            BoardSpec::Steps(s) => s.expand(),
        }
    }

    pub fn steps(&self) -> StepSpec {
        match self {
            BoardSpec::Heights(b) => b.step_decomposition(),
            BoardSpec::Steps(s) => s.clone(),
        }
    }
}

/// Parses `heights:0,1,2`, `steps:1x1,1x1` (rise x width), `tri:7`, `stair:4`
/// or `gv:2,3,2`.
impl FromStr for BoardSpec {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let bad = |reason: &str| Error::BoardSpec {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let (kind, body) = spec.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let ints = |body: &str| -> Result<Vec<i64>> {
            if body.trim().is_empty() {
                return Ok(Vec::new());
            }
            body.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| bad("expected integers"))
                })
                .collect()
        };
        let one = |body: &str| -> Result<usize> {
            match body.trim().parse::<usize>() {
                Ok(n) if n >= 1 => Ok(n),
                _ => Err(bad("expected a positive integer")),
            }
        };
        match kind.trim() {
            "heights" => Ok(BoardSpec::Heights(FerrersBoard::from_signed(&ints(body)?)?)),
            "tri" => Ok(BoardSpec::Heights(FerrersBoard::triangular(one(body)?))),
            "stair" => Ok(BoardSpec::Heights(FerrersBoard::staircase(one(body)?))),
            "gv" => {
                let v = ints(body)?;
                if v.iter().any(|&x| x < 0) {
                    return Err(bad("negative multiplicity"));
                }
                let v: Vec<usize> = v.into_iter().map(|x| x as usize).collect();
                if v.iter().sum::<usize>() == 0 {
                    return Err(bad("multiplicities sum to zero"));
                }
                Ok(BoardSpec::Heights(FerrersBoard::g_board(&v)))
            }
            "steps" => {
                let pairs = body
                    .split(',')
                    .map(|tok| {
                        let (h, d) = tok
                            .trim()
                            .split_once('x')
                            .ok_or_else(|| bad("expected HxD"))?;
                        let h = h.parse::<usize>().map_err(|_| bad("bad rise"))?;
                        let d = d.parse::<usize>().map_err(|_| bad("bad width"))?;
                        Ok((h, d))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(BoardSpec::Steps(StepSpec::from_pairs(&pairs)?))
            }
            _ => Err(bad("unknown board kind")),
        }
    }
}
