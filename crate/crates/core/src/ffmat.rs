//! Matrices over a prime field supported on a Ferrers board: brute-force rank
//! counts, the pivot-spot elimination, and the closed forms they verify.

use num_bigint::BigInt;

use crate::boards::FerrersBoard;
use crate::error::{Error, Result};
use crate::placements::{rook_poly, Placement};
use crate::qpoly::{q_stirling, BivariatePoly, LaurentPoly};

pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Square matrix over `F_p`, entries in `[0, p)`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FfMatrix {
    n: usize,
    p: u64,
    entries: Vec<u64>,
}

impl FfMatrix {
    pub fn zero(n: usize, p: u64) -> Self {
        Self {
            n,
            p,
            entries: vec![0; n * n],
        }
    }

    pub fn identity(n: usize, p: u64) -> Self {
        let mut m = Self::zero(n, p);
        for i in 1..=n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Self {
        let n = rows.len();
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), n, "matrix must be square");
                r.iter().map(|&x| x % p)
            })
            .collect();
        Self { n, p, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Entry at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.entries[(i - 1) * self.n + (j - 1)] = v % self.p;
    }

    pub fn is_supported_on(&self, board: &FerrersBoard) -> bool {
        self.first_off_board(board).is_none()
    }

    fn first_off_board(&self, board: &FerrersBoard) -> Option<(usize, usize)> {
        (1..=self.n)
            .flat_map(|i| (1..=self.n).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j) != 0 && !board.contains(i, j))
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and below 2^16 so products fit in u64
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Rank over `F_p` by row reduction with a search for a nonzero pivot.
pub fn rank_ff(m: &FfMatrix) -> usize {
    let (n, p) = (m.n, m.p);
    let mut a = m.entries.clone();
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&r| a[r * n + col] != 0) else {
            continue;
        };
        for c in 0..n {
            a.swap(pivot * n + c, rank * n + c);
        }
        let inv = inv_mod(a[rank * n + col], p);
        for r in rank + 1..n {
            let f = a[r * n + col] * inv % p;
            if f == 0 {
                continue;
            }
            for c in col..n {
                let sub = f * a[rank * n + c] % p;
                a[r * n + c] = (a[r * n + c] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn check_modulus_and_budget(board: &FerrersBoard, p: u64, budget: u128) -> Result<()> {
    if !is_prime(p) || p >= 1 << 16 {
        return Err(Error::NotPrime(p));
    }
    let needed = (p as u128)
        .checked_pow(board.area() as u32)
        .unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// Odometer over the board cells in row-major order.
pub struct SupportMatrices {
    current: FfMatrix,
    cells: Vec<(usize, usize)>,
    done: bool,
}

impl Iterator for SupportMatrices {
    type Item = FfMatrix;

    fn next(&mut self) -> Option<FfMatrix> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        // advance: increment the last cell, carrying leftwards
        self.done = true;
        for &(i, j) in self.cells.iter().rev() {
            let v = self.current.get(i, j) + 1;
            if v < self.current.p {
                self.current.set(i, j, v);
                self.done = false;
                break;
            }
            self.current.set(i, j, 0);
        }
        Some(out)
    }
}

/// All `p^Area` matrices that vanish off the board.
pub fn enumerate_support_matrices(
    board: &FerrersBoard,
    p: u64,
    budget: u128,
) -> Result<SupportMatrices> {
    check_modulus_and_budget(board, p, budget)?;
    Ok(SupportMatrices {
        current: FfMatrix::zero(board.n(), p),
        cells: board.cells(),
        done: false,
    })
}

/// Number of supported matrices of each rank `0..=n`.
pub fn rank_distribution(board: &FerrersBoard, p: u64, budget: u128) -> Result<Vec<u128>> {
    let mut counts = vec![0u128; board.n() + 1];
    for m in enumerate_support_matrices(board, p, budget)? {
        counts[rank_ff(&m)] += 1;
    }
    Ok(counts)
}

/// `P_k(B)` at `q = p` by brute force.
pub fn count_rank(board: &FerrersBoard, p: u64, k: usize, budget: u128) -> Result<u128> {
    Ok(rank_distribution(board, p, budget)?
        .get(k)
        .copied()
        .unwrap_or(0))
}

/// `(q-1)^k q^{Area-k} R_k(q^{-1})`.
pub fn p_k_formula(board: &FerrersBoard, k: usize) -> Result<LaurentPoly> {
    board.require_admissible()?;
    let q_minus_one = LaurentPoly::from_dense(0, [-1, 1]);
    let r = rook_poly(board, k).invert_variable();
    Ok(&q_minus_one.pow(k as u32) * &r.shift(board.area() as i64 - k as i64))
}

/// Pivot spots of the elimination: per column, left to right, the lowest
/// nonzero entry becomes a pivot; the pivot column then clears its row to the
/// right and the pivot row clears its column above.
pub fn elimination_placement(m: &FfMatrix, board: &FerrersBoard) -> Result<Placement> {
    if let Some((i, j)) = m.first_off_board(board) {
        return Err(Error::SupportViolation(i, j));
    }
    let (n, p) = (m.n, m.p);
    let mut a = m.clone();
    let mut pivots = Vec::new();
    for col in 1..=n {
        let Some(row) = (1..=n).rev().find(|&i| a.get(i, col) != 0) else {
            continue;
        };
        let inv = inv_mod(a.get(row, col), p);
        for c in col + 1..=n {
            let f = a.get(row, c) * inv % p;
            if f == 0 {
                continue;
            }
            for i in 1..=n {
                let v = (a.get(i, c) + p - f * a.get(i, col) % p) % p;
                a.set(i, c, v);
            }
        }
        for r in 1..row {
            let f = a.get(r, col) * inv % p;
            if f == 0 {
                continue;
            }
            for c in 1..=n {
                let v = (a.get(r, c) + p - f * a.get(row, c) % p) % p;
                a.set(r, c, v);
            }
        }
        debug_assert!(a.is_supported_on(board), "elimination left the board");
        pivots.push((row, col));
    }
    Placement::new(n, pivots)
}

/// `(p-1)^k p^{C(n+1,2)-k} S_{n+1,n+1-k}(p^{-1})` for upper triangular `n x n`.
pub fn upper_triangular_formula(n: usize, k: usize, p: u64) -> BigInt {
    let s = q_stirling(n as u32 + 1, (n + 1 - k) as i64).invert_variable();
    let area = (n * (n + 1) / 2) as i64;
    let poly = &LaurentPoly::from_dense(0, [-1, 1]).pow(k as u32) * &s.shift(area - k as i64);
    poly.eval(&BigInt::from(p))
        .expect("formula is a polynomial in q")
}

/// Upper triangular rank counts against the q-Stirling closed form.
pub fn upper_triangular_check(n: usize, p: u64, budget: u128) -> Result<bool> {
    let counts = rank_distribution(&FerrersBoard::staircase(n), p, budget)?;
    Ok(counts
        .iter()
        .enumerate()
        .all(|(k, &c)| BigInt::from(c) == upper_triangular_formula(n, k, p)))
}

/// `Σ_k (1-x)(1-xq)...(1-xq^{k-1}) P_{n-k}(B) = Π_i (q^{c_i} - x q^{i-1})`
/// as an identity in `x` with Laurent coefficients.
pub fn rank_identity_check(board: &FerrersBoard) -> Result<bool> {
    let n = board.n();
    let mut lhs = BivariatePoly::zero();
    for k in 0..=n {
        let mut term = BivariatePoly::from_laurent(&p_k_formula(board, n - k)?, 0);
        for j in 0..k {
            term = &term * &(&BivariatePoly::one() - &BivariatePoly::monomial(1, j as i64, 1));
        }
        lhs += &term;
    }
    let mut rhs = BivariatePoly::one();
    for (idx, &c) in board.heights().iter().enumerate() {
        let factor =
            &BivariatePoly::monomial(1, c as i64, 0) - &BivariatePoly::monomial(1, idx as i64, 1);
        rhs = &rhs * &factor;
    }
    Ok(lhs == rhs)
}

/// `Σ_k P_k(B) = q^Area`.
pub fn rank_total_check(board: &FerrersBoard) -> Result<bool> {
    let total: LaurentPoly = (0..=board.n())
        .map(|k| p_k_formula(board, k))
        .sum::<Result<LaurentPoly>>()?;
    Ok(total == LaurentPoly::q_pow(board.area() as i64))
}

/// Brute-force rank counts against the closed form evaluated at `q = p`.
pub fn rank_count_check(board: &FerrersBoard, p: u64, budget: u128) -> Result<bool> {
    let counts = rank_distribution(board, p, budget)?;
    let q = BigInt::from(p);
    for (k, &c) in counts.iter().enumerate() {
        let want = p_k_formula(board, k)?
            .eval(&q)
            .expect("closed form is a polynomial");
        if want != BigInt::from(c) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive size of each elimination fiber against
/// `(p-1)^k p^{Area-k-inv(C,B)}`; returns the mismatched placements.
pub fn elimination_fiber_mismatches(
    board: &FerrersBoard,
    p: u64,
    budget: u128,
) -> Result<Vec<Placement>> {
    use std::collections::BTreeMap;
    let mut fibers: BTreeMap<Placement, u128> = BTreeMap::new();
    for m in enumerate_support_matrices(board, p, budget)? {
        let c = elimination_placement(&m, board)?;
        debug_assert_eq!(c.len(), rank_ff(&m));
        *fibers.entry(c).or_default() += 1;
    }
    let mut bad = Vec::new();
    for k in 0..=board.n() {
        for c in crate::placements::enumerate_placements(board, k) {
            let inv = crate::placements::inv_stat(&c, board)?;
            let exp = board.area() - k - inv;
            let want = (p as u128 - 1).pow(k as u32) * (p as u128).pow(exp as u32);
            if fibers.get(&c).copied().unwrap_or(0) != want {
                bad.push(c);
            }
        }
    }
    Ok(bad)
}
