//! Words over `{1..t}` with a fixed letter multiset, their classical
//! statistics, and the statistics read off rook placements of their graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use itertools::Itertools;

use crate::boards::FerrersBoard;
use crate::error::{Error, Result};
use crate::placements::{mat_stat, xi_stat, Placement};
use crate::qpoly::{q_factorial, LaurentPoly};

/// A word `σ_1 … σ_n` in `M(v)`: letter `b` occurs exactly `v_b` times.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<usize>,
    v: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>, v: Vec<usize>) -> Result<Self> {
        let mut got = vec![0; v.len().max(letters.iter().copied().max().unwrap_or(0))];
        for &l in &letters {
            if l == 0 {
                return Err(Error::InvalidWord("letters start at 1".into()));
            }
            got[l - 1] += 1;
        }
        let mut want = v.clone();
        want.resize(got.len(), 0);
        if got != want {
            return Err(Error::MultisetMismatch { got, want: v });
        }
        Ok(Self { letters, v })
    }

    /// Multiplicities inferred from the letters; the alphabet is `1..=max`.
    pub fn from_letters(letters: Vec<usize>) -> Result<Self> {
        let t = letters.iter().copied().max().unwrap_or(0);
        let mut v = vec![0; t];
        for &l in &letters {
            if l == 0 {
                return Err(Error::InvalidWord("letters start at 1".into()));
            }
            v[l - 1] += 1;
        }
        Ok(Self { letters, v })
    }

    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let w = Self::new(perm.to_vec(), vec![1; perm.len()])
            .map_err(|_| Error::NotPermutation(perm.to_vec()))?;
        Ok(w)
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn v(&self) -> &[usize] {
        &self.v
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    pub fn is_permutation(&self) -> bool {
        self.v.iter().all(|&x| x == 1)
    }

    fn require_permutation(&self) -> Result<()> {
        if self.is_permutation() {
            Ok(())
        } else {
            Err(Error::NotPermutation(self.letters.clone()))
        }
    }

    /// `f(v)`, the nondecreasing rearrangement.
    pub fn sorted(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.sort_unstable();
        Self {
            letters,
            v: self.v.clone(),
        }
    }

    pub fn reverse(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().copied().collect(),
            v: self.v.clone(),
        }
    }

    /// Every element of `M(v)`, in lexicographic order.
    pub fn all(v: &[usize]) -> Vec<Self> {
        let mut letters: Vec<usize> = v
            .iter()
            .enumerate()
            .flat_map(|(b, &c)| std::iter::repeat_n(b + 1, c))
            .collect();
        let mut out = vec![Self {
            letters: letters.clone(),
            v: v.to_vec(),
        }];
        while next_permutation(&mut letters) {
            out.push(Self {
                letters: letters.clone(),
                v: v.to_vec(),
            });
        }
        out
    }

    /// All of `S_n`.
    pub fn all_permutations(n: usize) -> Vec<Self> {
        Self::all(&vec![1; n])
    }
}

/// Compositions of `n` into positive parts, in lexicographic order.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len())
        .rev()
        .find(|&j| xs[j] > xs[i - 1])
        .expect("pivot has a successor");
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

impl FromStr for Word {
    type Err = Error;

    /// Digits (`2313212`) or comma-separated letters (`2,3,1,10`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters: Option<Vec<usize>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect()
        };
        match letters {
            Some(l) if !l.is_empty() => Self::from_letters(l),
            _ => Err(Error::InvalidWord(s.to_string())),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.len() <= 9 {
            self.letters.iter().try_for_each(|l| write!(f, "{l}"))
        } else {
            write!(f, "{}", self.letters.iter().join(","))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

pub fn descents(w: &Word) -> impl Iterator<Item = usize> + '_ {
    w.letters
        .windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| i + 1)
}

pub fn des(w: &Word) -> usize {
    descents(w).count()
}

pub fn maj(w: &Word) -> usize {
    descents(w).sum()
}

/// Positions where the word exceeds its sorted rearrangement.
pub fn exc(w: &Word) -> usize {
    w.letters
        .iter()
        .zip(w.sorted().letters)
        .filter(|(a, b)| **a > *b)
        .count()
}

/// Denert's statistic.
pub fn den(w: &Word) -> Result<usize> {
    w.require_permutation()?;
    let s = &w.letters;
    let n = s.len();
    let mut count = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            let (si, sj) = (s[i - 1], s[j - 1]);
            count += usize::from(si <= j && j < sj);
            count += usize::from(si > sj && sj > j);
            count += usize::from(j >= si && si > sj);
        }
    }
    Ok(count)
}

/// Rook on `(i, σ_i)`.
pub fn graph(w: &Word) -> Result<Placement> {
    w.require_permutation()?;
    Placement::graph(&w.letters)
}

/// Reads a full placement as a word: row `i` gets the block containing its
/// rook's column, blocks being consecutive column runs of widths `d`.
pub fn word_of_placement(c: &Placement, d: &[usize]) -> Result<Word> {
    if !c.is_full() {
        return Err(Error::NotFull(c.len(), c.side()));
    }
    if d.iter().sum::<usize>() != c.side() {
        return Err(Error::InvalidWord(format!(
            "block widths {d:?} do not sum to {}",
            c.side()
        )));
    }
    let mut block_of = Vec::with_capacity(c.side() + 1);
    block_of.push(0);
    for (b, &w) in d.iter().enumerate() {
        block_of.extend(std::iter::repeat_n(b + 1, w));
    }
    let letters = c.cells().iter().map(|&(_, j)| block_of[j]).collect();
    Word::new(letters, d.to_vec())
}

/// Which canonical lift to use inside a section.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lift {
    /// Off-board rooks in the leftmost columns, descending; on-board rooks
    /// ascending in the remaining columns. Minimizes `mat`.
    Standard,
    /// On-board rooks in the leftmost columns, ascending; the rest ascending.
    /// Minimizes `ξ`.
    Regular,
}

/// Assigns `rows` (ascending) to the columns of a section of height `h`.
fn arrange(
    rows: &[usize],
    cols: RangeInclusive<usize>,
    h: usize,
    lift: Lift,
) -> Vec<(usize, usize)> {
    let (lo, hi) = (*cols.start(), *cols.end());
    let on: Vec<usize> = rows.iter().copied().filter(|&i| i <= h).collect();
    let off: Vec<usize> = rows.iter().copied().filter(|&i| i > h).collect();
    let s = on.len();
    let mut out = Vec::with_capacity(rows.len());
    match lift {
        Lift::Standard => {
            out.extend(off.iter().enumerate().map(|(x, &i)| (i, lo + x)));
            out.extend(on.iter().enumerate().map(|(x, &i)| (i, hi - x)));
        }
        Lift::Regular => {
            out.extend(on.iter().enumerate().map(|(x, &i)| (i, lo + s - 1 - x)));
            out.extend(off.iter().enumerate().map(|(x, &i)| (i, hi - x)));
        }
    }
    out
}

fn section_height(board: &FerrersBoard, cols: &RangeInclusive<usize>, idx: usize) -> Result<usize> {
    let h = board.height(*cols.start());
    if cols.clone().any(|j| board.height(j) != h) {
        return Err(Error::BlockNotConstant(idx));
    }
    Ok(h)
}

/// Rearranges the rooks of a full placement inside a constant-height column
/// run into the canonical order, leaving every other rook in place.
pub fn canonical_in_section(
    c: &Placement,
    board: &FerrersBoard,
    cols: RangeInclusive<usize>,
    lift: Lift,
) -> Result<Placement> {
    let h = section_height(board, &cols, 0)?;
    let (inside, mut outside): (Vec<_>, Vec<_>) =
        c.cells().iter().partition(|(_, j)| cols.contains(j));
    let rows: Vec<usize> = inside.iter().map(|&(i, _)| i).collect();
    outside.extend(arrange(&rows, cols, h, lift));
    Placement::new(c.side(), outside)
}

/// The canonical graph of `w` on a board whose columns split into blocks of
/// widths `w.v()` with constant height on each block. Zero widths are allowed.
pub fn lift(w: &Word, board: &FerrersBoard, lift: Lift) -> Result<Placement> {
    let n = w.n();
    if board.n() != n {
        return Err(Error::InvalidWord(format!(
            "{w} has length {n} but the board has {} columns",
            board.n()
        )));
    }
    let mut cells = Vec::with_capacity(n);
    let mut start = 1;
    for (b, &width) in w.v.iter().enumerate() {
        if width == 0 {
            continue;
        }
        let cols = start..=start + width - 1;
        let h = section_height(board, &cols, b + 1)?;
        let rows: Vec<usize> = (1..=n).filter(|&i| w.letters[i - 1] == b + 1).collect();
        cells.extend(arrange(&rows, cols, h, lift));
        start += width;
    }
    Placement::new(n, cells)
}

pub fn b_standard_graph(w: &Word, board: &FerrersBoard) -> Result<Placement> {
    lift(w, board, Lift::Standard)
}

pub fn b_regular_graph(w: &Word, board: &FerrersBoard) -> Result<Placement> {
    lift(w, board, Lift::Regular)
}

pub fn mat_word(w: &Word, board: &FerrersBoard) -> Result<i64> {
    board.require_admissible()?;
    mat_stat(&b_standard_graph(w, board)?, board)
}

pub fn xi_word(w: &Word, board: &FerrersBoard) -> Result<i64> {
    board.require_admissible()?;
    Ok(xi_stat(&b_regular_graph(w, board)?, board)? as i64)
}

/// `F(π)`: cut `π` into cycles ending at successive smallest unused values,
/// then put a rook on `(i, j)` whenever `i` follows `j` cyclically.
pub fn descent_graph(pi: &Word) -> Result<Placement> {
    pi.require_permutation()?;
    let s = &pi.letters;
    let n = s.len();
    let mut used = vec![false; n + 1];
    let mut cells = Vec::with_capacity(n);
    let mut start = 0;
    while start < n {
        let target = (1..=n).find(|&x| !used[x]).expect("values remain");
        let end = (start..n)
            .find(|&j| s[j] == target)
            .expect("smallest unused value lies ahead");
        let cycle = &s[start..=end];
        for (x, &j) in cycle.iter().enumerate() {
            used[j] = true;
            cells.push((cycle[(x + 1) % cycle.len()], j));
        }
        start = end + 1;
    }
    Placement::new(n, cells)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Mat,
    Xi,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::Mat, Family::Xi];

    pub fn name(self) -> &'static str {
        match self {
            Family::Mat => "mat",
            Family::Xi => "xi",
        }
    }

    pub fn eval(self, c: &Placement, board: &FerrersBoard) -> Result<i64> {
        match self {
            Family::Mat => mat_stat(c, board),
            Family::Xi => Ok(xi_stat(c, board)? as i64),
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mat" => Ok(Family::Mat),
            "xi" => Ok(Family::Xi),
            _ => Err(Error::InvalidStat(format!("unknown family {s:?}"))),
        }
    }
}

/// The eight descent-graph statistics; the reflected variant 2 carries the
/// `n·des - C(n,2)` shift.
pub fn stat_family(pi: &Word, family: Family, variant: u8) -> Result<i64> {
    stat_family_with(pi, family, variant, true)
}

/// As [`stat_family`], choosing whether variant 2 (and hence 6) is shifted.
pub fn stat_family_with(
    pi: &Word,
    family: Family,
    variant: u8,
    shift_reflected: bool,
) -> Result<i64> {
    pi.require_permutation()?;
    let n = pi.n() as i64;
    let k = des(pi) as i64;
    let tri = FerrersBoard::triangular(pi.n());
    let shift = n * k - n * (n - 1) / 2;
    let base = |v: u8| -> Result<i64> {
        Ok(match v {
            1 => shift + family.eval(&descent_graph(pi)?, &tri)?,
            2 => {
                let s = family.eval(&descent_graph(pi)?.reflect(), &tri)?;
                if shift_reflected {
                    shift + s
                } else {
                    s
                }
            }
            3 => family.eval(&descent_graph(&pi.reverse())?, &tri)?,
            4 => family.eval(&descent_graph(&pi.reverse())?.reflect(), &tri)?,
            _ => unreachable!(),
        })
    };
    match variant {
        1..=4 => base(variant),
        5..=8 => Ok(n * k - base(variant - 4)?),
        _ => Err(Error::InvalidStat(format!(
            "variant {variant} not in 1..=8"
        ))),
    }
}

fn g_offset(w: &Word) -> (FerrersBoard, i64) {
    let g = FerrersBoard::g_board(&w.v);
    let off = (w.n() * exc(w)) as i64 - g.area() as i64;
    (g, off)
}

/// `n·exc - Area(G_v) + mat` of the `G_v`-standard graph.
pub fn stat5(w: &Word) -> Result<i64> {
    let (g, off) = g_offset(w);
    Ok(off + mat_word(w, &g)?)
}

/// `n·exc - Area(G_v) + ξ` of the `G_v`-regular graph.
pub fn stat6(w: &Word) -> Result<i64> {
    let (g, off) = g_offset(w);
    Ok(off + xi_word(w, &g)?)
}

/// One `(σ, σ̄, value)` per `σ̄ ∈ M(rev u)`: the `G_{rev u}`-standard graph of
/// `σ̄` is reflected onto a graph of `σ ∈ M(u)`, and the value is
/// `n·exc(σ) - Area + mat` of that standard graph.
///
/// The reflected graph only remembers which row block feeds which column
/// block, so `σ̄ -> σ` is a bijection on permutations but can collide on
/// multisets.
pub fn stat7_pairs(u: &[usize]) -> Result<Vec<(Word, Word, i64)>> {
    let v: Vec<usize> = u.iter().rev().copied().collect();
    let g = FerrersBoard::g_board(&v);
    let n: usize = u.iter().sum();
    Word::all(&v)
        .into_iter()
        .map(|bar| {
            let c = b_standard_graph(&bar, &g)?;
            let sigma = word_of_placement(&c.reflect(), u)?;
            let value = (n * exc(&sigma)) as i64 - g.area() as i64 + mat_stat(&c, &g)?;
            Ok((sigma, bar, value))
        })
        .collect()
}

/// `stat7` as a function on `M(u)`; fails when the reflection collides.
pub fn stat7_table(u: &[usize]) -> Result<BTreeMap<Word, i64>> {
    let mut table = BTreeMap::new();
    for (sigma, _, value) in stat7_pairs(u)? {
        if table.insert(sigma.clone(), value).is_some() {
            return Err(Error::InvalidStat(format!(
                "stat7 is not a function on M({u:?}): two reflected graphs read as {sigma}"
            )));
        }
    }
    Ok(table)
}

pub fn stat7(w: &Word) -> Result<i64> {
    Ok(stat7_table(&w.v)?[w])
}

/// The closed form whose pair with `exc` is Euler-Mahonian on `S_n`.
pub fn theorem5_stat(w: &Word) -> Result<i64> {
    w.require_permutation()?;
    let s: Vec<i64> = w.letters.iter().map(|&x| x as i64).collect();
    let n = s.len();
    let mut total = 0i64;
    for (i0, &si) in s.iter().enumerate() {
        let i = i0 as i64 + 1;
        total += if si > i { si - i } else { 1 - si };
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let (si, sj, j) = (s[i - 1], s[j - 1], j as i64);
            total += i64::from(si > sj && sj > j);
            total += i64::from(si <= j && si < sj);
        }
    }
    Ok(total)
}

/// The multiset closed form paired with `exc`, evaluated term by term.
pub fn theorem5_statx(w: &Word) -> i64 {
    let s = &w.letters;
    let f = w.sorted().letters;
    let n = s.len();
    // below[b] = v_1 + ... + v_{b-1}
    let below: Vec<usize> = std::iter::once(0)
        .chain(w.v.iter().scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        }))
        .collect();
    let mut total = (n * n.saturating_sub(1) / 2) as i64;
    for i in 1..=n {
        let si = s[i - 1];
        let smaller_before =
            |limit: usize| (1..i).filter(|&m| m <= limit && s[m - 1] < si).count() as i64;
        if si <= f[i - 1] {
            let inversions_after = (i + 1..=n).filter(|&j| si > s[j - 1]).count() as i64;
            total += inversions_after + smaller_before(below[si - 1]);
            total -= (n - i + below[si - 1]) as i64;
        } else {
            total += smaller_before(n);
            total -= i as i64 - 1;
        }
    }
    total
}

/// Multiset of `(a(w), b(w))` pairs.
pub fn joint_distribution<'a, A, B>(
    words: impl IntoIterator<Item = &'a Word>,
    a: A,
    b: B,
) -> Result<BTreeMap<(i64, i64), usize>>
where
    A: Fn(&Word) -> Result<i64>,
    B: Fn(&Word) -> Result<i64>,
{
    let mut out = BTreeMap::new();
    for w in words {
        *out.entry((a(w)?, b(w)?)).or_insert(0) += 1;
    }
    Ok(out)
}

pub fn des_maj(w: &Word) -> (i64, i64) {
    (des(w) as i64, maj(w) as i64)
}

/// `Σ_{des = k} q^maj` over `M(v)`, indexed by `k`.
pub fn des_maj_polys(v: &[usize]) -> Vec<LaurentPoly> {
    let n: usize = v.iter().sum();
    let mut out = vec![LaurentPoly::zero(); n.max(1)];
    for w in Word::all(v) {
        out[des(&w)].add_term(maj(&w) as i64, 1.into());
    }
    out
}

/// Both halves of the section lemma for every placement of the rooks outside
/// a constant-height column run: the canonical extension minimizes the
/// statistic and `Σ q^stat = q^{stat(canonical)} [d]!`.
pub fn section_lemma_check(
    board: &FerrersBoard,
    cols: RangeInclusive<usize>,
    family: Family,
) -> Result<bool> {
    board.require_admissible()?;
    let n = board.n();
    let lift = match family {
        Family::Mat => Lift::Standard,
        Family::Xi => Lift::Regular,
    };
    let mut groups: BTreeMap<Vec<(usize, usize)>, Vec<Placement>> = BTreeMap::new();
    for p in (1..=n).permutations(n) {
        let c = Placement::graph(&p)?;
        let key = c
            .cells()
            .iter()
            .copied()
            .filter(|(_, j)| !cols.contains(j))
            .collect();
        groups.entry(key).or_default().push(c);
    }
    let d = cols.clone().count() as u32;
    for members in groups.values() {
        let canon = canonical_in_section(&members[0], board, cols.clone(), lift)?;
        let base = family.eval(&canon, board)?;
        let mut sum = LaurentPoly::zero();
        let mut seen = BTreeSet::new();
        for c in members {
            let s = family.eval(c, board)?;
            if s < base {
                return Ok(false);
            }
            sum.add_term(s, 1.into());
            seen.insert(c.clone());
        }
        if !seen.contains(&canon) || sum != q_factorial(d).shift(base) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boards::StepSpec;
    use crate::qpoly::q_multinomial;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn wv(s: &str, v: &[usize]) -> Word {
        Word::new(w(s).letters, v.to_vec()).unwrap()
    }

    fn compositions_upto(max_n: usize) -> Vec<Vec<usize>> {
        (1..=max_n).flat_map(compositions).collect()
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(w("2313212").v(), &[2, 3, 2]);
        assert_eq!(w("2,10,1").v().len(), 10);
        assert_eq!(w("2,10,1").to_string(), "2,10,1");
        assert_eq!(w("231").to_string(), "231");
        assert!("".parse::<Word>().is_err());
        assert!("2a1".parse::<Word>().is_err());
        assert!("201".parse::<Word>().is_err());
        assert!(Word::new(vec![1, 1], vec![1, 1]).is_err());
        assert_eq!(Word::all(&[2, 1]).len(), 3);
        assert_eq!(Word::all_permutations(4).len(), 24);
        assert_eq!(Word::all(&[1, 0, 1]).len(), 2);
    }

    #[test]
    fn classical_statistics() {
        let pi = w("3521647");
        assert_eq!((des(&pi), maj(&pi)), (3, 10));
        assert_eq!((des(&w("1123")), maj(&w("1123"))), (0, 0));
        assert_eq!((des(&w("54321")), maj(&w("54321"))), (4, 10));
        assert_eq!(exc(&w("2313212")), 3);
        assert_eq!(exc(&w("1122233")), 0);
        assert_eq!(exc(&w("21")), 1);
        assert_eq!(den(&w("123")), Ok(0));
        assert_eq!(den(&w("21")), Ok(1));
        assert_eq!(den(&w("231")), Ok(3));
        assert!(den(&w("11")).is_err());
    }

    #[test]
    fn graphs_and_words() {
        assert_eq!(graph(&w("12")).unwrap().cells(), &[(1, 1), (2, 2)]);
        assert_eq!(
            word_of_placement(&graph(&w("21")).unwrap(), &[2]).unwrap(),
            wv("11", &[2])
        );
        let c = Placement::new(3, vec![(1, 3), (2, 1), (3, 2)]).unwrap();
        assert_eq!(word_of_placement(&c, &[2, 1]).unwrap(), wv("211", &[2, 1]));
        assert_eq!(
            word_of_placement(&c, &[2, 0, 1]).unwrap(),
            wv("311", &[2, 0, 1])
        );
    }

    #[test]
    fn lift_examples() {
        let triv = FerrersBoard::trivial(2);
        let ones = wv("11", &[2]);
        assert_eq!(
            b_standard_graph(&ones, &triv).unwrap().cells(),
            &[(1, 1), (2, 2)]
        );
        assert_eq!(
            b_regular_graph(&ones, &triv).unwrap().cells(),
            &[(1, 2), (2, 1)]
        );
        assert_eq!(mat_word(&ones, &triv), Ok(0));
        for pi in Word::all_permutations(4) {
            for b in FerrersBoard::all_admissible(4) {
                assert_eq!(b_standard_graph(&pi, &b).unwrap(), graph(&pi).unwrap());
                assert_eq!(b_regular_graph(&pi, &b).unwrap(), graph(&pi).unwrap());
            }
        }
        let bad = FerrersBoard::new(vec![0, 1]).unwrap();
        assert_eq!(
            b_standard_graph(&ones, &bad),
            Err(Error::BlockNotConstant(1))
        );
    }

    #[test]
    fn lifts_are_minimal_and_sum_to_factorials() {
        for n in 1..=5 {
            for b in FerrersBoard::all_admissible(n) {
                for sec in b.sections() {
                    // every sub-run of a section is a section too
                    for lo in *sec.start()..=*sec.end() {
                        for hi in lo..=*sec.end() {
                            for fam in Family::ALL {
                                assert!(
                                    section_lemma_check(&b, lo..=hi, fam).unwrap(),
                                    "{b:?} {lo}..={hi} {fam:?}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lifts_round_trip() {
        for spec in StepSpec::enumerate(6, 2) {
            let b = spec.expand();
            let d = spec.widths();
            for word in Word::all(&d) {
                for l in [Lift::Standard, Lift::Regular] {
                    let c = lift(&word, &b, l).unwrap();
                    assert_eq!(word_of_placement(&c, &d).unwrap(), word);
                    for (x, run) in spec.width_sums().windows(2).enumerate() {
                        let canon = canonical_in_section(&c, &b, run[0] + 1..=run[1], l).unwrap();
                        assert_eq!(canon, c, "{spec} block {x} {word}");
                    }
                }
            }
        }
    }

    #[test]
    fn multiset_mahonian_small() {
        for spec in StepSpec::enumerate(5, 3) {
            let b = spec.expand();
            if !b.is_admissible() {
                continue;
            }
            let d = spec.widths();
            let want = q_multinomial(&d.iter().map(|&x| x as u32).collect::<Vec<_>>());
            let words = Word::all(&d);
            let m: LaurentPoly = words
                .iter()
                .map(|x| LaurentPoly::q_pow(mat_word(x, &b).unwrap()))
                .sum();
            let xi: LaurentPoly = words
                .iter()
                .map(|x| LaurentPoly::q_pow(xi_word(x, &b).unwrap()))
                .sum();
            assert_eq!(m, want, "{spec}");
            assert_eq!(xi, want, "{spec}");
        }
    }

    #[test]
    fn descent_graph_examples() {
        let f = descent_graph(&w("3521647")).unwrap();
        let mut want = vec![(5, 3), (2, 5), (1, 2), (3, 1), (4, 6), (6, 4), (7, 7)];
        want.sort_unstable();
        assert_eq!(f.cells(), want.as_slice());
        assert_eq!(f.rooks_on(&FerrersBoard::triangular(7)), 3);
        assert_eq!(f.reflect(), descent_graph(&w("1425763")).unwrap());
        let id = descent_graph(&w("1234")).unwrap();
        assert_eq!(id.cells(), &[(1, 1), (2, 2), (3, 3), (4, 4)]);
        for n in 1..=6 {
            let tri = FerrersBoard::triangular(n);
            let mut seen = BTreeSet::new();
            for pi in Word::all_permutations(n) {
                let f = descent_graph(&pi).unwrap();
                assert_eq!(f.rooks_on(&tri), des(&pi));
                assert!(seen.insert(f));
            }
        }
    }

    #[test]
    fn families_are_euler_mahonian() {
        for n in 1..=6 {
            let perms = Word::all_permutations(n);
            let target =
                joint_distribution(&perms, |x| Ok(des(x) as i64), |x| Ok(maj(x) as i64)).unwrap();
            for fam in Family::ALL {
                for v in 1..=8 {
                    let got = joint_distribution(
                        &perms,
                        |x| Ok(des(x) as i64),
                        |x| stat_family(x, fam, v),
                    )
                    .unwrap();
                    assert_eq!(got, target, "n={n} {fam:?} variant {v}");
                }
            }
        }
    }

    #[test]
    fn unshifted_reflection_is_not_euler_mahonian() {
        let perms = Word::all_permutations(3);
        let target =
            joint_distribution(&perms, |x| Ok(des(x) as i64), |x| Ok(maj(x) as i64)).unwrap();
        let got = joint_distribution(
            &perms,
            |x| Ok(des(x) as i64),
            |x| stat_family_with(x, Family::Mat, 2, false),
        )
        .unwrap();
        assert_ne!(got, target);
    }

    #[test]
    fn excedences_count_rooks_on_g() {
        for v in compositions_upto(6) {
            let g = FerrersBoard::g_board(&v);
            for word in Word::all(&v) {
                let k = exc(&word);
                assert_eq!(b_standard_graph(&word, &g).unwrap().rooks_on(&g), k);
                assert_eq!(b_regular_graph(&word, &g).unwrap().rooks_on(&g), k);
            }
        }
    }

    #[test]
    fn g_statistics() {
        assert_eq!(stat5(&w("21")), Ok(1));
        for v in compositions_upto(6) {
            let words = Word::all(&v);
            let target =
                joint_distribution(&words, |x| Ok(des(x) as i64), |x| Ok(maj(x) as i64)).unwrap();
            let e = |x: &Word| Ok(exc(x) as i64);
            assert_eq!(
                joint_distribution(&words, e, stat5).unwrap(),
                target,
                "stat5 {v:?}"
            );
            assert_eq!(
                joint_distribution(&words, e, stat6).unwrap(),
                target,
                "stat6 {v:?}"
            );
            let pairs = stat7_pairs(&v).unwrap();
            let mut t7 = BTreeMap::new();
            for (sigma, bar, value) in &pairs {
                assert_eq!(exc(sigma), exc(bar), "{sigma} {bar}");
                *t7.entry((exc(sigma) as i64, *value)).or_insert(0) += 1;
            }
            assert_eq!(t7, target, "stat7 {v:?}");
            if v.iter().all(|&x| x == 1) {
                assert_eq!(stat7_table(&v).unwrap().len(), words.len());
            }
            assert_eq!(
                joint_distribution(&words, e, |x| Ok(theorem5_statx(x))).unwrap(),
                target,
                "statx {v:?}"
            );
        }
    }

    #[test]
    fn theorem5_closed_forms() {
        assert_eq!(theorem5_stat(&w("12")), Ok(0));
        assert_eq!(theorem5_stat(&w("21")), Ok(1));
        assert_eq!(theorem5_statx(&w("12")), 0);
        assert_eq!(theorem5_statx(&w("21")), 1);
        for n in 1..=6 {
            let stair = FerrersBoard::staircase(n);
            let perms = Word::all_permutations(n);
            for pi in &perms {
                let ct = graph(pi).unwrap().transpose();
                let e = exc(pi) as i64;
                let n_ = n as i64;
                assert_eq!(theorem5_stat(pi).unwrap(), mat_stat(&ct, &stair).unwrap());
                assert_eq!(
                    xi_stat(&ct, &stair).unwrap() as i64,
                    n_ * e - den(pi).unwrap() as i64
                );
                // cross = n + #X - #XX
                let s = pi.letters();
                let n_plus_x: i64 = n_ * (n_ + 1) / 2
                    + (1..=n)
                        .map(|i| {
                            let (si, i) = (s[i - 1] as i64, i as i64);
                            if si > i {
                                n_ - si + i
                            } else {
                                si - 1
                            }
                        })
                        .sum::<i64>();
                let xx = (1..=n)
                    .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
                    .filter(|&(i, j)| {
                        let (si, sj) = (s[i - 1], s[j - 1]);
                        (si > sj && sj > j) || (si <= j && j < sj) || (si < sj && sj <= j)
                    })
                    .count() as i64;
                assert_eq!(
                    crate::placements::cross_stat(&ct, &stair).unwrap() as i64,
                    n_plus_x - xx
                );
            }
            let target =
                joint_distribution(&perms, |x| Ok(des(x) as i64), |x| Ok(maj(x) as i64)).unwrap();
            let e = |x: &Word| Ok(exc(x) as i64);
            assert_eq!(
                joint_distribution(&perms, e, theorem5_stat).unwrap(),
                target
            );
            assert_eq!(
                joint_distribution(&perms, e, |x| Ok(den(x)? as i64)).unwrap(),
                target
            );
        }
    }

    #[test]
    fn stat7_collides_on_multisets() {
        assert_eq!(compositions(3).len(), 4);
        assert_eq!(stat7_table(&[1, 1, 1]).unwrap().len(), 6);
        assert!(matches!(stat7_table(&[2, 1]), Err(Error::InvalidStat(_))));
    }

    #[test]
    fn s2_distribution() {
        let perms = Word::all_permutations(2);
        let got = joint_distribution(&perms, |x| Ok(des(x) as i64), |x| Ok(maj(x) as i64)).unwrap();
        assert_eq!(got, BTreeMap::from([((0, 0), 1), ((1, 1), 1)]));
    }
}
