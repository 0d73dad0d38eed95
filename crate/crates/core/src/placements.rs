//! Rook placements, the statistics `inv`, `xi`, `cross` and `mat`, and the
//! q-rook and q-hit polynomials built from them.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;

use crate::boards::FerrersBoard;
use crate::error::{Error, Result};
use crate::qpoly::{q_factorial, BivariatePoly, LaurentPoly};

/// Non-attacking rooks on a `side x side` grid, 1-based `(row, column)`,
/// kept sorted by row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Placement {
    side: usize,
    cells: Vec<(usize, usize)>,
}

impl Placement {
    pub fn new(side: usize, mut cells: Vec<(usize, usize)>) -> Result<Self> {
        cells.sort_unstable();
        if let Some(&(i, j)) = cells
            .iter()
            .find(|&&(i, j)| i == 0 || j == 0 || i > side || j > side)
        {
            return Err(Error::CellOffBoard(i, j));
        }
        let rows_distinct = cells.windows(2).all(|w| w[0].0 != w[1].0);
        let cols_distinct = cells.iter().map(|c| c.1).all_unique();
        if !(rows_distinct && cols_distinct) {
            return Err(Error::Attacking(format!("{cells:?}")));
        }
        Ok(Self { side, cells })
    }

    pub fn empty(side: usize) -> Self {
        Self {
            side,
            cells: Vec::new(),
        }
    }

    /// The graph of a permutation: a rook on `(i, sigma_i)`. Values are 1-based.
    pub fn graph(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n + 1];
        for &v in perm {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotPermutation(perm.to_vec()));
            }
            seen[v] = true;
        }
        Ok(Self {
            side: n,
            cells: perm.iter().enumerate().map(|(i, &j)| (i + 1, j)).collect(),
        })
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.cells.len() == self.side
    }

    /// `sigma` with a rook on `(i, sigma_i)`; `None` unless the placement is full.
    pub fn permutation(&self) -> Option<Vec<usize>> {
        self.is_full()
            .then(|| self.cells.iter().map(|&(_, j)| j).collect())
    }

    pub fn transpose(&self) -> Self {
        let mut cells: Vec<_> = self.cells.iter().map(|&(i, j)| (j, i)).collect();
        cells.sort_unstable();
        Self {
            side: self.side,
            cells,
        }
    }

    /// Reflection about the cross diagonal, `(i, j) -> (n-j+1, n-i+1)`.
    pub fn reflect(&self) -> Self {
        let n = self.side;
        let mut cells: Vec<_> = self
            .cells
            .iter()
            .map(|&(i, j)| (n - j + 1, n - i + 1))
            .collect();
        cells.sort_unstable();
        Self { side: n, cells }
    }

    pub fn rooks_on(&self, board: &FerrersBoard) -> usize {
        self.cells
            .iter()
            .filter(|&&(i, j)| board.contains(i, j))
            .count()
    }

    fn require_full(&self) -> Result<()> {
        if self.is_full() {
            Ok(())
        } else {
            Err(Error::NotFull(self.cells.len(), self.side))
        }
    }

    /// Row of the rook in column `j`, if any.
    fn rook_row_in_col(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.side + 1];
        for &(i, j) in &self.cells {
            out[j] = Some(i);
        }
        out
    }

    fn rook_col_in_row(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.side + 1];
        for &(i, j) in &self.cells {
            out[i] = Some(j);
        }
        out
    }
}

impl fmt::Debug for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Placement{:?}", self.cells)
    }
}

fn grid_side(board: &FerrersBoard) -> usize {
    board.n().max(board.max_height())
}

/// Depth-first enumeration of `k` non-attacking rooks on a board, rows top to
/// bottom, each row trying "no rook" first and then columns left to right.
pub struct PlacementIter {
    board: FerrersBoard,
    rows: usize,
    k: usize,
    // choice[r] is 0 for an empty row, else the column
    choice: Vec<usize>,
    used: Vec<bool>,
    placed: usize,
    depth: usize,
    next_start: usize,
    done: bool,
}

impl PlacementIter {
    fn new(board: &FerrersBoard, k: usize) -> Self {
        let rows = grid_side(board);
        Self {
            board: board.clone(),
            rows,
            k,
            choice: vec![0; rows],
            used: vec![false; board.n() + 1],
            placed: 0,
            depth: 0,
            next_start: 0,
            done: k > rows.min(board.n()),
        }
    }

    fn valid(&self, v: usize) -> bool {
        let row = self.depth + 1;
        if v == 0 {
            self.rows - row >= self.k - self.placed
        } else {
            self.placed < self.k && !self.used[v] && self.board.contains(row, v)
        }
    }

    fn apply(&mut self, v: usize) {
        self.choice[self.depth] = v;
        if v > 0 {
            self.used[v] = true;
            self.placed += 1;
        }
        self.depth += 1;
    }

    fn undo(&mut self) -> usize {
        self.depth -= 1;
        let v = self.choice[self.depth];
        if v > 0 {
            self.used[v] = false;
            self.placed -= 1;
        }
        v
    }
}

impl Iterator for PlacementIter {
    type Item = Placement;

    fn next(&mut self) -> Option<Placement> {
        if self.done {
            return None;
        }
        let ncols = self.board.n();
        if self.rows == 0 && self.k > 0 {
            self.done = true;
            return None;
        }
        loop {
            if self.depth == self.rows {
                let cells = self
                    .choice
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| v > 0)
                    .map(|(i, &v)| (i + 1, v))
                    .collect();
                if self.rows == 0 {
                    self.done = true;
                } else {
                    let v = self.undo();
                    self.next_start = v + 1;
                }
                return Some(Placement {
                    side: self.rows,
                    cells,
                });
            }
            match (self.next_start..=ncols).find(|&v| self.valid(v)) {
                Some(v) => {
                    self.apply(v);
                    self.next_start = 0;
                }
                None => {
                    if self.depth == 0 {
                        self.done = true;
                        return None;
                    }
                    let v = self.undo();
                    self.next_start = v + 1;
                }
            }
        }
    }
}

/// Every placement of `k` non-attacking rooks on the cells of `board`.
pub fn enumerate_placements(board: &FerrersBoard, k: usize) -> PlacementIter {
    PlacementIter::new(board, k)
}

/// Full placements of the `n x n` grid with exactly `k` rooks on `board`,
/// in lexicographic permutation order.
pub fn enumerate_full(board: &FerrersBoard, k: usize) -> impl Iterator<Item = Placement> + '_ {
    let n = board.n();
    (1..=n)
        .permutations(n)
        .map(|p| Placement::graph(&p).expect("itertools yields permutations"))
        .filter(move |c| c.rooks_on(board) == k)
}

/// Uncrossed board cells after crossing out rook cells and everything above
/// or right of a rook.
pub fn inv_stat(c: &Placement, board: &FerrersBoard) -> Result<usize> {
    if let Some(&(i, j)) = c.cells.iter().find(|&&(i, j)| !board.contains(i, j)) {
        return Err(Error::CellOffBoard(i, j));
    }
    let in_col = c.rook_row_in_col();
    let in_row = c.rook_col_in_row();
    let count = board
        .cells()
        .into_iter()
        .filter(|&(i, j)| {
            let above_or_on = in_col.get(j).copied().flatten().is_some_and(|r| i <= r);
            let right_of = in_row.get(i).copied().flatten().is_some_and(|col| j > col);
            !(above_or_on || right_of)
        })
        .count();
    Ok(count)
}

/// Dworkin's hit statistic as `#O - #XO`: circles in board cells below a rook
/// on the board, or anywhere below / on-board above a rook off the board,
/// minus those circles that lie right of a rook in their row.
pub fn xi_stat(c: &Placement, board: &FerrersBoard) -> Result<usize> {
    c.require_full()?;
    let n = c.side;
    let in_row = c.rook_col_in_row();
    let (mut circles, mut cancelled) = (0, 0);
    for &(r, j) in &c.cells {
        let on = board.contains(r, j);
        for i in 1..=n {
            let circled = if i > r {
                !on || board.contains(i, j)
            } else if i < r {
                !on && board.contains(i, j)
            } else {
                false
            };
            if circled {
                circles += 1;
                if in_row[i].is_some_and(|col| j > col) {
                    cancelled += 1;
                }
            }
        }
    }
    Ok(circles - cancelled)
}

/// Size of the set of squares that hold a rook or lie right of one, lie above
/// a rook and on the board, or lie below a rook that is off the board.
pub fn cross_stat(c: &Placement, board: &FerrersBoard) -> Result<usize> {
    c.require_full()?;
    let n = c.side;
    let in_row = c.rook_col_in_row();
    let in_col = c.rook_row_in_col();
    let mut count = 0;
    for i in 1..=n {
        for j in 1..=n {
            let rook_row = in_col[j].expect("full placement");
            let a = in_row[i].is_some_and(|col| j >= col);
            let b = i < rook_row && board.contains(i, j);
            let c_ = i > rook_row && !board.contains(rook_row, j);
            if a || b || c_ {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `n(n-k) + Area(B) - cross(C, B)` with `k` the rooks on the board.
pub fn mat_stat(c: &Placement, board: &FerrersBoard) -> Result<i64> {
    let cross = cross_stat(c, board)? as i64;
    let n = c.side as i64;
    let k = c.rooks_on(board) as i64;
    Ok(n * (n - k) + board.area() as i64 - cross)
}

/// `R_k(B) = Σ q^inv` over `k`-rook placements on the board.
pub fn rook_poly(board: &FerrersBoard, k: usize) -> LaurentPoly {
    LaurentPoly::from_exponents(
        enumerate_placements(board, k)
            .map(|c| inv_stat(&c, board).expect("enumerated placements lie on the board") as i64),
    )
}

/// All `R_0, ..., R_n`.
pub fn rook_polys(board: &FerrersBoard) -> Vec<LaurentPoly> {
    (0..=board.n()).map(|k| rook_poly(board, k)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HitMethod {
    /// `Σ q^mat` over full placements.
    Mat,
    /// `Σ q^xi` over full placements.
    Xi,
    /// Coefficient extraction from `Σ_k [k]! R_{n-k} Π_{i>k} (x - q^i)`.
    Defining,
}

impl HitMethod {
    pub const ALL: [HitMethod; 3] = [HitMethod::Mat, HitMethod::Xi, HitMethod::Defining];

    pub fn name(self) -> &'static str {
        match self {
            HitMethod::Mat => "mat",
            HitMethod::Xi => "xi",
            HitMethod::Defining => "defining",
        }
    }
}

/// `T_k(B)`. The statistic methods need an admissible board; the defining
/// identity also accepts inadmissible boards.
pub fn hit_poly(board: &FerrersBoard, k: usize, method: HitMethod) -> Result<LaurentPoly> {
    Ok(hit_polys(board, method)?
        .into_iter()
        .nth(k)
        .unwrap_or_default())
}

/// `T_0, ..., T_n` by one method.
pub fn hit_polys(board: &FerrersBoard, method: HitMethod) -> Result<Vec<LaurentPoly>> {
    let n = board.n();
    match method {
        HitMethod::Mat | HitMethod::Xi => {
            board.require_admissible()?;
            let mut exps: Vec<Vec<i64>> = vec![Vec::new(); n + 1];
            for perm in (1..=n).permutations(n) {
                let c = Placement::graph(&perm)?;
                let k = c.rooks_on(board);
                let e = match method {
                    HitMethod::Mat => mat_stat(&c, board)?,
                    _ => xi_stat(&c, board)? as i64,
                };
                exps[k].push(e);
            }
            Ok(exps.into_iter().map(LaurentPoly::from_exponents).collect())
        }
        HitMethod::Defining => Ok(hit_polys_defining(board)),
    }
}

fn hit_polys_defining(board: &FerrersBoard) -> Vec<LaurentPoly> {
    let n = board.n();
    let rooks = rook_polys(board);
    let x_minus = |i: i64| &BivariatePoly::monomial(1, 0, 1) - &BivariatePoly::monomial(1, i, 0);
    let mut total = BivariatePoly::zero();
    for k in 0..=n {
        let coeff = &q_factorial(k as u32) * &rooks[n - k];
        let mut term = BivariatePoly::from_laurent(&coeff, 0);
        for i in k + 1..=n {
            term = &term * &x_minus(i as i64);
        }
        total += &term;
    }
    (0..=n).map(|k| total.z_coeff(k as i64)).collect()
}

/// Checks `Σ_k [x][x-1]...[x-k+1] R_{n-k} = Π_i [x + c_i - i + 1]` as a
/// polynomial identity in `q` and `z = q^x`, after clearing the `(1-q)^n`
/// denominators.
pub fn factorization_check(board: &FerrersBoard) -> bool {
    let n = board.n();
    let rooks = rook_polys(board);
    let one = BivariatePoly::one();
    let one_minus_q = &one - &BivariatePoly::monomial(1, 1, 0);
    // (1-q)[x+m] = 1 - z q^m
    let bracket_num = |m: i64| &one - &BivariatePoly::monomial(1, m, 1);
    let mut lhs = BivariatePoly::zero();
    for k in 0..=n {
        let mut term = BivariatePoly::from_laurent(&rooks[n - k], 0);
        for j in 0..k {
            term = &term * &bracket_num(-(j as i64));
        }
        for _ in k..n {
            term = &term * &one_minus_q;
        }
        lhs += &term;
    }
    let mut rhs = one.clone();
    for (idx, &c) in board.heights().iter().enumerate() {
        let i = idx as i64 + 1;
        rhs = &rhs * &bracket_num(c as i64 - i + 1);
    }
    lhs == rhs
}

/// `Σ_k R_k(B) (1-q)^k`, which is identically 1.
pub fn rook_alternating_sum(board: &FerrersBoard) -> LaurentPoly {
    let one_minus_q = &LaurentPoly::one() - &LaurentPoly::q_pow(1);
    rook_polys(board)
        .iter()
        .enumerate()
        .map(|(k, r)| r * &one_minus_q.pow(k as u32))
        .sum()
}

/// Classical hit numbers by direct counting.
pub fn hit_numbers(board: &FerrersBoard) -> Vec<BigInt> {
    let n = board.n();
    let mut out = vec![BigInt::from(0); n + 1];
    for perm in (1..=n).permutations(n) {
        let k = perm
            .iter()
            .enumerate()
            .filter(|(i, &j)| board.contains(i + 1, j))
            .count();
        out[k] += 1;
    }
    out
}

/// `[n]!`, the sum of all hit polynomials of an `n`-column board.
pub fn hit_total(n: usize) -> LaurentPoly {
    q_factorial(n as u32)
}
