//! Identity and unimodality checks over exhaustive small domains, with
//! failure reports that carry enough context to debug without rerunning.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::boards::{FerrersBoard, StepSpec};
use crate::error::{Error, Result};
use crate::ffmat;
use crate::permstat::{self, compositions, des, exc, maj, Family, Word};
use crate::placements::{self, hit_polys, HitMethod};
use crate::qpoly::{
    darga, q_binomial, q_bracket, q_factorial, q_multinomial, zsu_check, LaurentPoly,
};

/// Why a check did not pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    /// Two polynomials that should agree.
    Mismatch {
        what: String,
        k: Option<i64>,
        left: LaurentPoly,
        right: LaurentPoly,
    },
    /// A property that does not hold.
    Property(String),
    Error(Error),
}

impl Failure {
    pub fn mismatch(
        what: impl Into<String>,
        k: Option<i64>,
        left: LaurentPoly,
        right: LaurentPoly,
    ) -> Self {
        Failure::Mismatch {
            what: what.into(),
            k,
            left,
            right,
        }
    }

    /// Lowest exponent at which the two sides of a mismatch differ.
    pub fn first_difference(&self) -> Option<i64> {
        match self {
            Failure::Mismatch { left, right, .. } => (left - right).min_exp(),
            _ => None,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Mismatch {
                what,
                k,
                left,
                right,
            } => {
                write!(f, "{what}")?;
                if let Some(k) = k {
                    write!(f, " k={k}")?;
                }
                write!(f, ": left={left} right={right}")?;
                if let Some(e) = self.first_difference() {
                    write!(f, " first differing exponent {e}")?;
                }
                Ok(())
            }
            Failure::Property(s) => f.write_str(s),
            Failure::Error(e) => write!(f, "error: {e}"),
        }
    }
}

pub type Check = std::result::Result<(), Failure>;

fn expect_eq(what: &str, k: Option<i64>, left: &LaurentPoly, right: &LaurentPoly) -> Check {
    if left == right {
        Ok(())
    } else {
        Err(Failure::mismatch(what, k, left.clone(), right.clone()))
    }
}

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(Failure::Property(msg()))
    }
}

fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Power series in `x` with Laurent coefficients in `q`, exact through
/// `x^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<LaurentPoly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![LaurentPoly::zero(); order + 1],
        }
    }

    pub fn from_coeffs(order: usize, mut coeffs: Vec<LaurentPoly>) -> Self {
        coeffs.resize(order + 1, LaurentPoly::zero());
        Self { coeffs }
    }

    /// `f x^k`.
    pub fn monomial(f: LaurentPoly, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = f;
        }
        s
    }

    /// `1 / ((1 - x)(1 - xq)...(1 - xq^m))`.
    pub fn inverse_q_product(m: usize, order: usize) -> Self {
        let mut out = Self::monomial(LaurentPoly::one(), 0, order);
        for i in 0..=m as i64 {
            let geometric = (0..=order)
                .map(|j| LaurentPoly::q_pow(i * j as i64))
                .collect();
            out = out.mul(&Self::from_coeffs(order, geometric));
        }
        out
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &LaurentPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_coeffs(
            order,
            (0..=order)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] += &(a * b);
            }
        }
        out
    }

    /// `x^k a_k -> [k] a_k x^{k-1}`; one order is lost.
    pub fn delta(&self) -> Self {
        let order = self.order().saturating_sub(1);
        let coeffs = (1..=self.order())
            .map(|k| &q_bracket(k as i64) * &self.coeffs[k])
            .collect();
        Self::from_coeffs(order, coeffs)
    }

    /// `(F(xq) - F(x)) / (xq - x)`, dividing exactly by `q - 1`.
    pub fn delta_by_definition(&self) -> Self {
        let q_minus_one = LaurentPoly::from_dense(0, [-1, 1]);
        let order = self.order().saturating_sub(1);
        let coeffs = (1..=self.order())
            .map(|k| {
                let diff = &self.coeffs[k].shift(k as i64) - &self.coeffs[k];
                diff.div_exact(&q_minus_one)
                    .expect("q^k - 1 is divisible by q - 1")
            })
            .collect();
        Self::from_coeffs(order, coeffs)
    }

    /// First index below the common order where the coefficients differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let order = self.order().min(other.order());
        (0..=order).find(|&k| self.coeffs[k] != other.coeffs[k])
    }
}

fn series_eq(what: &str, a: &TruncatedSeries, b: &TruncatedSeries) -> Check {
    match a.first_difference(b) {
        None => Ok(()),
        Some(k) => Err(Failure::mismatch(
            format!("{what} x-coefficient"),
            Some(k as i64),
            a.coeff(k).clone(),
            b.coeff(k).clone(),
        )),
    }
}

/// `Φ(x; B)` two ways: the hit numerator over `Π_{i=0}^n (1 - xq^i)`, and
/// the product formula `Σ_k x^k Π_i [k + c_i - i + 1]`.
pub fn phi_series(
    board: &FerrersBoard,
    order: usize,
) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let n = board.n();
    let t = hit_polys(board, HitMethod::Mat)?;
    let numerator = TruncatedSeries::from_coeffs(
        order,
        (0..=n.min(order)).map(|k| t[n - k].clone()).collect(),
    );
    let a = numerator.mul(&TruncatedSeries::inverse_q_product(n, order));
    let b = (0..=order)
        .map(|k| {
            board
                .heights()
                .iter()
                .enumerate()
                .map(|(idx, &c)| q_bracket(k as i64 + c as i64 - idx as i64))
                .product()
        })
        .collect();
    Ok((a, TruncatedSeries::from_coeffs(order, b)))
}

pub fn phi_check(board: &FerrersBoard, order: usize) -> Check {
    let (a, b) = phi_series(board, order)?;
    series_eq("phi", &a, &b)
}

/// `δ(x^k / Π_{i=0}^n (1 - xq^i)) = ([k] x^{k-1} + [n-k+1] q^k x^k) / Π_{i=0}^{n+1} (1 - xq^i)`
/// for `0 <= k <= n`, with `δ` computed both coefficient-wise and from its
/// definition.
pub fn delta_identity_check(n: usize, order: usize) -> Check {
    let g = TruncatedSeries::inverse_q_product(n, order);
    let g_next = TruncatedSeries::inverse_q_product(n + 1, order);
    for k in 0..=n {
        let lhs_arg = TruncatedSeries::monomial(LaurentPoly::one(), k, order).mul(&g);
        let mut numerator =
            TruncatedSeries::monomial(q_bracket((n - k + 1) as i64).shift(k as i64), k, order);
        if k > 0 {
            numerator = numerator.add(&TruncatedSeries::monomial(
                q_bracket(k as i64),
                k - 1,
                order,
            ));
        }
        let rhs = numerator.mul(&g_next).truncate(order.saturating_sub(1));
        series_eq(
            &format!("delta identity k={k} coefficient-wise"),
            &lhs_arg.delta(),
            &rhs,
        )?;
        series_eq(
            &format!("delta identity k={k} by definition"),
            &lhs_arg.delta_by_definition(),
            &rhs,
        )?;
    }
    Ok(())
}

fn t_at(t: &[LaurentPoly], k: i64) -> LaurentPoly {
    usize::try_from(k)
        .ok()
        .and_then(|k| t.get(k).cloned())
        .unwrap_or_default()
}

/// `T_k(B(0, c)) = [n+1-k] T_k(B) + [k+1] q^{n-k} T_{k+1}(B)` for
/// `0 <= k <= n+1`, and `T_{n+1}(B(0, c)) = 0`.
pub fn add_recurrence_check(board: &FerrersBoard) -> Check {
    let n = board.n() as i64;
    let t = hit_polys(board, HitMethod::Mat)?;
    let added = hit_polys(&board.add_empty_column(), HitMethod::Mat)?;
    for k in 0..=n + 1 {
        let rhs = &(&q_bracket(n + 1 - k) * &t_at(&t, k))
            + &(&q_bracket(k + 1) * &t_at(&t, k + 1)).shift(n - k);
        expect_eq("add recurrence", Some(k), &t_at(&added, k), &rhs)?;
    }
    expect(t_at(&added, n + 1).is_zero(), || {
        "T_{n+1} of the added board is nonzero".into()
    })
}

/// `T_k(B, q^{-1}) = q^{-C(n,2)} T_{n-k}(B^c, q)`.
pub fn reciprocity_check(board: &FerrersBoard) -> Check {
    let n = board.n();
    let t = hit_polys(board, HitMethod::Mat)?;
    let tc = hit_polys(&board.complement()?, HitMethod::Mat)?;
    for k in 0..=n {
        let rhs = tc[n - k].shift(-choose2(n as i64));
        expect_eq("reciprocity", Some(k as i64), &t[k].invert_variable(), &rhs)?;
    }
    Ok(())
}

/// The four expressions of `Σ_{des=k} q^maj` over `S_n` through hit
/// polynomials of the triangular board and its complement.
pub fn euler_ladder_check(n: usize) -> Check {
    let lhs = permstat::des_maj_polys(&vec![1; n]);
    let tri = hit_polys(&FerrersBoard::triangular(n), HitMethod::Mat)?;
    let stair = hit_polys(&FerrersBoard::staircase(n), HitMethod::Mat)?;
    let (n, c) = (n as i64, choose2(n as i64));
    for (k, l) in lhs.iter().enumerate() {
        let k_ = k as i64;
        expect_eq(
            "ladder des-maj vs q^{nk-C(n,2)} T_k(B(n))",
            Some(k_),
            l,
            &t_at(&tri, k_).shift(n * k_ - c),
        )?;
        expect_eq(
            "ladder des-maj vs T_{n-k-1}(B(n))",
            Some(k_),
            l,
            &t_at(&tri, n - k_ - 1),
        )?;
        expect_eq(
            "ladder des-maj vs q^{nk-C(n,2)} T_{k+1}(B(n)^c)",
            Some(k_),
            l,
            &t_at(&stair, k_ + 1).shift(n * k_ - c),
        )?;
        expect_eq(
            "ladder des-maj vs T_{n-k}(B(n)^c)",
            Some(k_),
            l,
            &t_at(&stair, n - k_),
        )?;
    }
    Ok(())
}

fn factorial_product(d: &[usize]) -> LaurentPoly {
    d.iter().map(|&x| q_factorial(x as u32)).product()
}

/// `Σ_{w ∈ M(v), des = k} q^maj = T_k(G_v) q^{nk - Area} / Π [v_i]!`.
pub fn g_identity_check(v: &[usize]) -> Check {
    let n: usize = v.iter().sum();
    let g = FerrersBoard::g_board(v);
    let t = hit_polys(&g, HitMethod::Mat)?;
    let lhs = permstat::des_maj_polys(v);
    let den = factorial_product(v);
    for k in 0..=n {
        let rhs = t[k]
            .div_exact(&den)?
            .shift((n * k) as i64 - g.area() as i64);
        let l = lhs.get(k).cloned().unwrap_or_default();
        expect_eq("G_v identity", Some(k as i64), &l, &rhs)?;
    }
    Ok(())
}

/// Which closed form [`step_formula`] evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepMethod {
    /// Alternating sum over `s` of products of Gaussian binomials.
    Eq24,
    /// Positive sum over bounded compositions `e`.
    Eq26,
}

impl StepMethod {
    pub fn name(self) -> &'static str {
        match self {
            StepMethod::Eq24 => "eq24",
            StepMethod::Eq26 => "eq26",
        }
    }
}

struct StepData {
    n: i64,
    d: Vec<i64>,
    dsum: Vec<i64>,
    hsum: Vec<i64>,
    area: i64,
}

impl StepData {
    fn new(spec: &StepSpec) -> Self {
        let to_i = |v: Vec<usize>| v.into_iter().map(|x| x as i64).collect::<Vec<_>>();
        Self {
            n: spec.n() as i64,
            d: to_i(spec.widths()),
            dsum: to_i(spec.width_sums()),
            hsum: to_i(spec.height_sums()),
            area: spec.expand().area() as i64,
        }
    }

    fn t(&self) -> usize {
        self.d.len()
    }

    /// `L_k = Area + n(n-k) - Σ D_i d_i`.
    fn l(&self, k: i64) -> i64 {
        let sum: i64 = (1..=self.t()).map(|i| self.dsum[i] * self.d[i - 1]).sum();
        self.area + self.n * (self.n - k) - sum
    }

    fn condition1(&self) -> bool {
        (1..=self.t()).all(|i| {
            let prev = if i >= 2 { self.d[i - 2] } else { 0 };
            prev + self.d[i - 1] >= self.hsum[i] - self.hsum[i - 1]
        })
    }

    fn condition2(&self) -> bool {
        (1..=self.t()).all(|i| self.dsum[i] >= self.hsum[i])
    }
}

fn signed_binomial(m: i64, k: i64) -> LaurentPoly {
    if k < 0 {
        LaurentPoly::zero()
    } else {
        q_binomial(m, k as u32)
    }
}

fn eq24_quotient(s: &StepData, j: i64) -> LaurentPoly {
    let mut total = LaurentPoly::zero();
    let l = s.l(s.n - j);
    for sv in 0..=j {
        let numerators: Vec<i64> = (1..=s.t())
            .map(|i| sv + s.hsum[i] - s.dsum[i - 1])
            .collect();
        let q: LaurentPoly = numerators
            .iter()
            .zip(&s.d)
            .map(|(&m, &di)| signed_binomial(m, di))
            .product();
        assert!(
            q.is_zero() || numerators.iter().all(|&m| m >= 0),
            "a product with a negative numerator must vanish"
        );
        let mut term = &signed_binomial(s.n + 1, j - sv) * &q;
        term = term.shift(choose2(j - sv));
        if (j - sv) % 2 == 1 {
            term = -term;
        }
        assert!(
            term.is_zero() || (term.is_symmetric() && darga(&term) == Ok(l)),
            "alternating-sum terms are symmetric with darga L"
        );
        total += &term;
    }
    total
}

/// Bounded compositions `e` of `k` with `0 <= e_i <= d_i`.
fn bounded_compositions(k: i64, d: &[i64]) -> Vec<Vec<i64>> {
    match d.split_first() {
        None => {
            if k == 0 {
                vec![Vec::new()]
            } else {
                Vec::new()
            }
        }
        Some((&first, rest)) => (0..=first.min(k))
            .flat_map(|e| {
                bounded_compositions(k - e, rest)
                    .into_iter()
                    .map(move |mut tail| {
                        tail.insert(0, e);
                        tail
                    })
            })
            .collect(),
    }
}

fn eq26_quotient(s: &StepData, j: i64) -> LaurentPoly {
    let conditions = s.condition1() || s.condition2();
    let mut total = LaurentPoly::zero();
    for e in bounded_compositions(j, &s.d) {
        let mut esum = 0;
        let mut term = LaurentPoly::one();
        let mut negative = false;
        for i in 1..=s.t() {
            let (di, ei) = (s.d[i - 1], e[i - 1]);
            let top_a = s.hsum[i] - s.dsum[i - 1] + esum;
            let top_b = s.dsum[i] + s.dsum[i - 1] - s.hsum[i] - esum;
            negative |= top_a < 0 || top_b < 0;
            esum += ei;
            let factor = &signed_binomial(top_a, di - ei) * &signed_binomial(top_b, ei);
            term = (&term * &factor).shift(ei * (s.hsum[i] - s.dsum[i] + esum));
        }
        assert!(
            !(conditions && negative) || term.is_zero(),
            "under either condition a negative numerator kills the term"
        );
        total += &term;
    }
    total
}

/// `T_k(B)` of a step board by one of the closed forms. Works on inadmissible
/// boards too.
pub fn step_formula(spec: &StepSpec, k: usize, which: StepMethod) -> LaurentPoly {
    let s = StepData::new(spec);
    let j = s.n - k as i64;
    if j < 0 {
        return LaurentPoly::zero();
    }
    let quotient = match which {
        StepMethod::Eq24 => eq24_quotient(&s, j),
        StepMethod::Eq26 => eq26_quotient(&s, j),
    };
    &quotient * &factorial_product(&spec.widths())
}

pub fn step_formulas(spec: &StepSpec, which: StepMethod) -> Vec<LaurentPoly> {
    (0..=spec.n())
        .map(|k| step_formula(spec, k, which))
        .collect()
}

/// Both closed forms against each other, against the defining identity, and
/// against the statistic-based hit polynomials when the board is admissible.
pub fn step_check(spec: &StepSpec) -> Check {
    let b = spec.expand();
    let e24 = step_formulas(spec, StepMethod::Eq24);
    let e26 = step_formulas(spec, StepMethod::Eq26);
    let def = hit_polys(&b, HitMethod::Defining)?;
    for k in 0..=spec.n() {
        let k_ = Some(k as i64);
        expect_eq("eq24 vs eq26", k_, &e24[k], &e26[k])?;
        expect_eq("eq24 vs defining identity", k_, &e24[k], &def[k])?;
    }
    if b.is_admissible() {
        let mat = hit_polys(&b, HitMethod::Mat)?;
        for k in 0..=spec.n() {
            expect_eq("eq24 vs mat", Some(k as i64), &e24[k], &mat[k])?;
        }
    }
    Ok(())
}

/// Rebuilds every prefix of the step board by the last-block recurrence from
/// `T_0(∅) = 1` and compares with the composition formula at each stage.
pub fn recurrence25_check(spec: &StepSpec) -> Check {
    // t[j] = T_j of the current prefix
    let mut t = vec![LaurentPoly::one()];
    let (dsum, hsum) = (spec.width_sums(), spec.height_sums());
    for stage in 1..=spec.t() {
        let (dt, big_d, prev_d, ht) = (
            spec.steps()[stage - 1].width as i64,
            dsum[stage] as i64,
            dsum[stage - 1] as i64,
            hsum[stage] as i64,
        );
        let fact = q_factorial(dt as u32);
        let mut next = vec![LaurentPoly::zero(); big_d as usize + 1];
        for k in 0..=big_d {
            let mut sum = LaurentPoly::zero();
            for s in (k - dt).max(0)..=k {
                let prev = t_at(&t, prev_d - s);
                if prev.is_zero() {
                    continue;
                }
                let a = signed_binomial(ht - prev_d + s, dt - k + s);
                let b = signed_binomial(big_d + prev_d - ht - s, k - s);
                sum += &(&(&prev * &a) * &b).shift((k - s) * (ht + k - big_d));
            }
            next[(big_d - k) as usize] = &fact * &sum;
        }
        t = next;
        let prefix = StepSpec::new(spec.steps()[..stage].to_vec())?;
        let want = step_formulas(&prefix, StepMethod::Eq26);
        for (j, (got, want)) in t.iter().zip(&want).enumerate() {
            expect_eq(
                &format!("recurrence vs eq26 at {prefix}"),
                Some(j as i64),
                got,
                want,
            )?;
        }
    }
    Ok(())
}

/// `T_k(B)` is `zsu(Area + n(n-k) - C(n+1,2))` for every `k`.
pub fn hit_unimodality_check(board: &FerrersBoard) -> Check {
    let n = board.n() as i64;
    let t = hit_polys(board, HitMethod::Mat)?;
    for (k, tk) in t.iter().enumerate() {
        let nk = board.area() as i64 + n * (n - k as i64) - n * (n + 1) / 2;
        expect(zsu_check(tk, nk), || {
            format!("T_{k} = {tk} is not zsu({nk})")
        })?;
    }
    Ok(())
}

/// Symmetry of `T_k / Π [d_i]!` with darga `L_k` (and of `T_k` itself with
/// the darga shifted by `Σ C(d_i, 2)`), plus `zsu(L_k)` of the quotient under
/// either block condition. Uses the closed forms, so inadmissible boards are
/// fine.
pub fn step_symmetry_check(spec: &StepSpec) -> Check {
    let s = StepData::new(spec);
    let den = factorial_product(&spec.widths());
    let shift: i64 = s.d.iter().map(|&d| choose2(d)).sum();
    let refined = s.condition1() || s.condition2();
    for (k, tk) in step_formulas(spec, StepMethod::Eq24).iter().enumerate() {
        let l = s.l(k as i64);
        let quotient = tk.div_exact(&den)?;
        let sym = |f: &LaurentPoly, d: i64| f.is_zero() || (f.is_symmetric() && darga(f) == Ok(d));
        expect(sym(&quotient, l), || {
            format!("T_{k}/Π[d]! = {quotient} is not symmetric with darga {l}")
        })?;
        expect(sym(tk, l + shift), || {
            format!("T_{k} = {tk} is not symmetric with darga {}", l + shift)
        })?;
        if refined {
            expect(zsu_check(&quotient, l), || {
                format!("T_{k}/Π[d]! = {quotient} is not zsu({l})")
            })?;
        }
    }
    Ok(())
}

/// `Σ_{w ∈ M(v), des = k} q^maj` is `zsu(nk)`.
pub fn des_maj_unimodality_check(v: &[usize]) -> Check {
    let n: usize = v.iter().sum();
    for (k, p) in permstat::des_maj_polys(v).iter().enumerate() {
        expect(zsu_check(p, (n * k) as i64), || {
            format!("k={k}: {p} is not zsu({})", n * k)
        })?;
    }
    Ok(())
}

/// Three hit-polynomial routes agree, sum to `[n]!`, and specialize to the
/// classical hit numbers.
pub fn hit_agreement_check(board: &FerrersBoard) -> Check {
    let mat = hit_polys(board, HitMethod::Mat)?;
    for method in [HitMethod::Xi, HitMethod::Defining] {
        let other = hit_polys(board, method)?;
        for (k, (a, b)) in mat.iter().zip(&other).enumerate() {
            expect_eq(&format!("mat vs {}", method.name()), Some(k as i64), a, b)?;
        }
    }
    let total: LaurentPoly = mat.iter().cloned().sum();
    expect_eq(
        "Σ T_k vs [n]!",
        None,
        &total,
        &placements::hit_total(board.n()),
    )?;
    let at_one: Vec<BigInt> = mat.iter().map(LaurentPoly::eval_at_one).collect();
    expect(at_one == placements::hit_numbers(board), || {
        format!("T_k(1) = {at_one:?} differs from the hit numbers")
    })
}

/// The factorization identity for rook polynomials.
pub fn rook_check(board: &FerrersBoard) -> Check {
    expect(placements::factorization_check(board), || {
        "factorization identity fails".into()
    })?;
    expect_eq(
        "Σ R_k (1-q)^k",
        None,
        &placements::rook_alternating_sum(board),
        &LaurentPoly::one(),
    )
}

/// Multiset Mahonian property of both word statistics on a step board.
pub fn multiset_mahonian_check(spec: &StepSpec) -> Check {
    let b = spec.expand();
    let d = spec.widths();
    let want = q_multinomial(&d.iter().map(|&x| x as u32).collect::<Vec<_>>());
    let words = Word::all(&d);
    let mut mat = LaurentPoly::zero();
    let mut xi = LaurentPoly::zero();
    for w in &words {
        mat.add_term(permstat::mat_word(w, &b)?, 1.into());
        xi.add_term(permstat::xi_word(w, &b)?, 1.into());
    }
    expect_eq("Σ q^mat over words", None, &mat, &want)?;
    expect_eq("Σ q^xi over words", None, &xi, &want)
}

type Dist = std::collections::BTreeMap<(i64, i64), usize>;

fn dist_eq(what: &str, got: &Dist, want: &Dist) -> Check {
    expect(got == want, || {
        format!("{what}: joint distribution {got:?} differs from {want:?}")
    })
}

/// All permutation-level Euler-Mahonian pairs on `S_n`.
pub fn euler_mahonian_permutations_check(n: usize) -> Check {
    let perms = Word::all_permutations(n);
    let target =
        permstat::joint_distribution(&perms, |w| Ok(des(w) as i64), |w| Ok(maj(w) as i64))?;
    let d = |w: &Word| Ok(des(w) as i64);
    let e = |w: &Word| Ok(exc(w) as i64);
    for fam in Family::ALL {
        for v in 1..=8 {
            let got =
                permstat::joint_distribution(&perms, d, |w| permstat::stat_family(w, fam, v))?;
            dist_eq(&format!("(des, {} variant {v})", fam.name()), &got, &target)?;
        }
    }
    dist_eq(
        "(exc, den)",
        &permstat::joint_distribution(&perms, e, |w| Ok(permstat::den(w)? as i64))?,
        &target,
    )?;
    dist_eq(
        "(exc, closed form a)",
        &permstat::joint_distribution(&perms, e, permstat::theorem5_stat)?,
        &target,
    )
}

/// The multiset pairs on `M(v)`: the `G_v` statistics, the reflected
/// statistic, and the multiset closed form.
pub fn euler_mahonian_words_check(v: &[usize]) -> Check {
    let words = Word::all(v);
    let target =
        permstat::joint_distribution(&words, |w| Ok(des(w) as i64), |w| Ok(maj(w) as i64))?;
    let e = |w: &Word| Ok(exc(w) as i64);
    dist_eq(
        "(exc, stat5)",
        &permstat::joint_distribution(&words, e, permstat::stat5)?,
        &target,
    )?;
    dist_eq(
        "(exc, stat6)",
        &permstat::joint_distribution(&words, e, permstat::stat6)?,
        &target,
    )?;
    let mut reflected = Dist::new();
    for (sigma, bar, value) in permstat::stat7_pairs(v)? {
        expect(exc(&sigma) == exc(&bar), || {
            format!("reflection changes exc: {bar} -> {sigma}")
        })?;
        *reflected.entry((exc(&sigma) as i64, value)).or_insert(0) += 1;
    }
    dist_eq("(exc, stat7)", &reflected, &target)?;
    dist_eq(
        "(exc, closed form b)",
        &permstat::joint_distribution(&words, e, |w| Ok(permstat::theorem5_statx(w)))?,
        &target,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Rook,
    Hit,
    Mahonian,
    Euler,
    Reciprocity,
    Ffmat,
    Unimodal,
    Steps,
}

impl Suite {
    pub const PARTS: [Suite; 8] = [
        Suite::Rook,
        Suite::Hit,
        Suite::Mahonian,
        Suite::Euler,
        Suite::Reciprocity,
        Suite::Ffmat,
        Suite::Unimodal,
        Suite::Steps,
    ];
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "rook" => Suite::Rook,
            "hit" => Suite::Hit,
            "mahonian" => Suite::Mahonian,
            "euler" => Suite::Euler,
            "reciprocity" => Suite::Reciprocity,
            "ffmat" => Suite::Ffmat,
            "unimodal" => Suite::Unimodal,
            "steps" => Suite::Steps,
            _ => return Err(Error::InvalidStat(format!("unknown suite {s:?}"))),
        })
    }
}

/// One executed check.
#[derive(Clone, Debug)]
pub struct Record {
    pub check: &'static str,
    pub instance: String,
    pub outcome: Check,
}

impl Record {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Ok(()) => write!(f, "PASS {} {}", self.check, self.instance),
            Err(e) => write!(f, "FAIL {} {} ({e})", self.check, self.instance),
        }
    }
}

/// Brute-force matrix enumeration budget used by the `ffmat` suite.
pub const SUITE_BUDGET: u128 = 2_000_000;

/// Runs a suite on every instance up to `max_n`, handing each record to
/// `sink` as soon as it is produced.
pub fn run_suite(suite: Suite, max_n: usize, sink: &mut dyn FnMut(Record)) {
    if suite == Suite::All {
        for part in Suite::PARTS {
            run_suite(part, max_n, sink);
        }
        return;
    }
    let mut emit = |check: &'static str, instance: String, outcome: Check| {
        sink(Record {
            check,
            instance,
            outcome,
        })
    };
    let boards = || (1..=max_n).flat_map(FerrersBoard::all_admissible);
    let words = || (1..=max_n).flat_map(compositions);
    let steps = || StepSpec::enumerate(max_n, 3);
    match suite {
        Suite::All => unreachable!(),
        Suite::Rook => {
            for b in boards() {
                emit("rook-factorization", b.to_string(), rook_check(&b));
                emit("phi-series", b.to_string(), phi_check(&b, b.n() + 3));
            }
            for n in 1..=max_n {
                emit(
                    "delta-identity",
                    format!("n={n}"),
                    delta_identity_check(n, n + 3),
                );
            }
        }
        Suite::Hit => {
            for b in boards() {
                emit("hit-agreement", b.to_string(), hit_agreement_check(&b));
            }
        }
        Suite::Mahonian => {
            for s in steps().into_iter().filter(|s| s.expand().is_admissible()) {
                emit(
                    "multiset-mahonian",
                    s.to_string(),
                    multiset_mahonian_check(&s),
                );
            }
        }
        Suite::Euler => {
            for n in 1..=max_n {
                emit("euler-ladder", format!("n={n}"), euler_ladder_check(n));
                emit(
                    "euler-mahonian-perms",
                    format!("n={n}"),
                    euler_mahonian_permutations_check(n),
                );
            }
            for v in words() {
                emit("g-identity", format!("v={v:?}"), g_identity_check(&v));
                emit(
                    "euler-mahonian-words",
                    format!("v={v:?}"),
                    euler_mahonian_words_check(&v),
                );
            }
        }
        Suite::Reciprocity => {
            for b in boards() {
                emit("reciprocity", b.to_string(), reciprocity_check(&b));
                emit("add-recurrence", b.to_string(), add_recurrence_check(&b));
            }
        }
        Suite::Ffmat => {
            for b in boards().filter(|b| b.n() <= 3) {
                for p in [2, 3] {
                    let outcome = ffmat::rank_count_check(&b, p, SUITE_BUDGET)
                        .map_err(Failure::from)
                        .and_then(|ok| {
                            expect(ok, || "rank counts differ from the closed form".into())
                        });
                    emit("rank-counts", format!("{b} p={p}"), outcome);
                }
                let outcome = ffmat::rank_identity_check(&b)
                    .map_err(Failure::from)
                    .and_then(|ok| expect(ok, || "polynomial identity in x fails".into()));
                emit("rank-identity", b.to_string(), outcome);
            }
            for n in 1..=max_n.min(3) {
                for p in [2, 3] {
                    let outcome = ffmat::upper_triangular_check(n, p, SUITE_BUDGET)
                        .map_err(Failure::from)
                        .and_then(|ok| expect(ok, || "upper-triangular counts differ".into()));
                    emit("upper-triangular", format!("n={n} p={p}"), outcome);
                }
            }
            let ref_board = FerrersBoard::new(vec![0, 1, 2]).expect("valid heights");
            for p in [2, 3] {
                let outcome = ffmat::elimination_fiber_mismatches(&ref_board, p, SUITE_BUDGET)
                    .map_err(Failure::from)
                    .and_then(|bad| {
                        expect(bad.is_empty(), || format!("fiber sizes wrong for {bad:?}"))
                    });
                emit("elimination-fibers", format!("{ref_board} p={p}"), outcome);
            }
        }
        Suite::Unimodal => {
            for b in boards() {
                emit("hit-unimodality", b.to_string(), hit_unimodality_check(&b));
            }
            for s in steps() {
                emit("step-symmetry", s.to_string(), step_symmetry_check(&s));
            }
            for v in words() {
                emit(
                    "des-maj-unimodality",
                    format!("v={v:?}"),
                    des_maj_unimodality_check(&v),
                );
            }
        }
        Suite::Steps => {
            for s in steps() {
                emit("step-formulas", s.to_string(), step_check(&s));
                emit("recurrence", s.to_string(), recurrence25_check(&s));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(min: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_dense(min, c.iter().copied())
    }

    #[test]
    fn series_delta_two_ways() {
        let g = TruncatedSeries::inverse_q_product(2, 6);
        assert_eq!(g.delta(), g.delta_by_definition());
        assert_eq!(g.coeff(0), &LaurentPoly::one());
        assert_eq!(g.coeff(1), &p(0, &[1, 1, 1]));
        let x3 = TruncatedSeries::monomial(LaurentPoly::one(), 3, 5);
        assert_eq!(x3.delta().coeff(2), &q_bracket(3));
    }

    #[test]
    fn phi_examples() {
        assert!(phi_check(&FerrersBoard::staircase(2), 4).is_ok());
        let triv = FerrersBoard::trivial(3);
        let (_, b) = phi_series(&triv, 3).unwrap();
        for k in 0..=3i64 {
            let want: LaurentPoly = (0..3).map(|i| q_bracket(k - i)).product();
            assert_eq!(b.coeff(k as usize), &want);
        }
        for n in 0..=4 {
            assert!(delta_identity_check(n, n + 3).is_ok(), "n={n}");
        }
    }

    #[test]
    fn recurrences_and_reciprocity() {
        assert!(add_recurrence_check(&FerrersBoard::staircase(2)).is_ok());
        assert!(add_recurrence_check(&FerrersBoard::trivial(2)).is_ok());
        assert!(reciprocity_check(&FerrersBoard::triangular(2)).is_ok());
        for n in 1..=4 {
            for b in FerrersBoard::all_admissible(n) {
                assert_eq!(add_recurrence_check(&b), Ok(()));
                assert_eq!(reciprocity_check(&b), Ok(()));
            }
        }
    }

    #[test]
    fn ladders() {
        for n in 1..=5 {
            assert_eq!(euler_ladder_check(n), Ok(()));
        }
        for n in 1..=5 {
            for v in compositions(n) {
                assert_eq!(g_identity_check(&v), Ok(()), "{v:?}");
                assert_eq!(des_maj_unimodality_check(&v), Ok(()), "{v:?}");
            }
        }
    }

    #[test]
    fn step_formula_examples() {
        let stair = StepSpec::from_pairs(&[(1, 1), (1, 1)]).unwrap();
        for which in [StepMethod::Eq24, StepMethod::Eq26] {
            assert_eq!(step_formula(&stair, 2, which), LaurentPoly::one());
            assert_eq!(step_formula(&stair, 1, which), LaurentPoly::q_pow(1));
            assert!(step_formula(&stair, 0, which).is_zero());
        }
        let single = StepSpec::from_pairs(&[(2, 3)]).unwrap();
        for k in 0..=3 {
            assert_eq!(bounded_compositions(k, &[3]).len(), 1);
        }
        assert_eq!(step_check(&single), Ok(()));
    }

    #[test]
    fn step_boards_small() {
        for spec in StepSpec::enumerate(4, 3) {
            assert_eq!(step_check(&spec), Ok(()), "{spec}");
            assert_eq!(recurrence25_check(&spec), Ok(()), "{spec}");
            assert_eq!(step_symmetry_check(&spec), Ok(()), "{spec}");
        }
    }

    #[test]
    fn unimodality_examples() {
        assert_eq!(hit_unimodality_check(&FerrersBoard::staircase(2)), Ok(()));
        assert_eq!(hit_unimodality_check(&FerrersBoard::trivial(4)), Ok(()));
    }

    #[test]
    fn failure_reports_locate_the_difference() {
        let f = Failure::mismatch("demo", Some(1), p(0, &[1, 2, 3]), p(0, &[1, 5, 3]));
        assert_eq!(f.first_difference(), Some(1));
        let s = f.to_string();
        assert!(
            s.contains("k=1") && s.contains("first differing exponent 1"),
            "{s}"
        );
    }

    #[test]
    fn small_suite_passes() {
        let mut fails = Vec::new();
        let mut count = 0;
        run_suite(Suite::All, 3, &mut |r| {
            count += 1;
            if !r.passed() {
                fails.push(r.to_string());
            }
        });
        assert!(count > 50);
        assert!(fails.is_empty(), "{fails:#?}");
    }
}
