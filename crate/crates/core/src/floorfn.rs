//! Dilated floor functions, rounding functions, the commutator, and the
//! exact one-period oracle for `⌊α⌊βx⌋⌋ ≥ ⌊β⌊αx⌋⌋`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::exact::{serde_int, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DilationPair {
    pub alpha: Rat,
    pub beta: Rat,
}

impl DilationPair {
    pub fn new(alpha: Rat, beta: Rat) -> Self {
        DilationPair { alpha, beta }
    }

    /// Both coordinates strictly positive.
    pub fn is_positive(&self) -> bool {
        self.alpha.is_positive() && self.beta.is_positive()
    }

    pub fn swapped(&self) -> DilationPair {
        DilationPair::new(self.beta.clone(), self.alpha.clone())
    }
}

impl fmt::Display for DilationPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

/// `⌊αx⌋`.
pub fn dilated_floor(alpha: &Rat, x: &Rat) -> BigInt {
    (alpha * x).floor()
}

/// `[f_α, f_β](x) = ⌊α⌊βx⌋⌋ − ⌊β⌊αx⌋⌋`.
pub fn commutator(pair: &DilationPair, x: &Rat) -> BigInt {
    let (a, b) = (pair.alpha.numer(), pair.alpha.denom());
    let (c, d) = (pair.beta.numer(), pair.beta.denom());
    let (xn, xd) = (x.numer(), x.denom());
    let left = (a * (c * xn).div_floor(&(d * xd))).div_floor(b);
    let right = (c * (a * xn).div_floor(&(b * xd))).div_floor(d);
    left - right
}

/// Lower rounding function `⌊x⌋_α = α⌊x/α⌋`, with `⌊x⌋_0 = x`.
pub fn lower_round(alpha: &Rat, x: &Rat) -> Rat {
    match x.checked_div(alpha) {
        Some(q) => alpha * Rat::from(q.floor()),
        None => x.clone(),
    }
}

/// Upper rounding function `⌈x⌉_α = α⌈x/α⌉`; undefined at `α = 0`.
pub fn upper_round(alpha: &Rat, x: &Rat) -> Result<Rat> {
    match x.checked_div(alpha) {
        Some(q) => Ok(alpha * Rat::from(q.ceil())),
        None => domain("upper rounding function needs a nonzero dilation"),
    }
}

/// Outcome of the integer upper-rounding criterion `⌈n⌉_α ≤ ⌈n⌉_β ∀ n ∈ ℤ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundingCheck {
    pub holds: bool,
    /// Least `n ≥ 0` with `⌈n⌉_α > ⌈n⌉_β`.
    pub counterexample: Option<BigInt>,
}

/// Decides `⌈n⌉_α ≤ ⌈n⌉_β` for every integer `n`, for `α, β > 0`.
///
/// `⌈n⌉_α − n` has period `num(α)` in `n`, so the window
/// `[0, lcm(num α, num β))` is exhaustive.
pub fn integer_rounding_check(alpha: &Rat, beta: &Rat) -> Result<RoundingCheck> {
    if !alpha.is_positive() || !beta.is_positive() {
        return domain("integer rounding criterion needs α, β > 0");
    }
    let window = alpha.numer().lcm(beta.numer());
    let mut n = BigInt::zero();
    while n < window {
        let x = Rat::from(&n);
        if upper_round(alpha, &x)? > upper_round(beta, &x)? {
            return Ok(RoundingCheck { holds: false, counterexample: Some(n) });
        }
        n += 1;
    }
    Ok(RoundingCheck { holds: true, counterexample: None })
}

/// Whether `⌊x⌋_α ≤ ⌊x⌋_β` for all real `x`, i.e. `α/β` is a positive integer.
pub fn rounding_order(alpha: &Rat, beta: &Rat) -> Result<bool> {
    if !alpha.is_positive() || !beta.is_positive() {
        return domain("rounding order needs α, β > 0");
    }
    Ok((alpha / beta).is_integer())
}

/// Exact minimum of the commutator over all real `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub period: Rat,
    #[serde(with = "serde_int")]
    pub min_value: BigInt,
    pub argmin: Rat,
    pub breakpoints_checked: u64,
    pub samples_checked: u64,
}

impl OracleReport {
    /// `min_value ≥ 0`, i.e. the pair satisfies the inequality everywhere.
    pub fn is_member(&self) -> bool {
        !self.min_value.is_negative()
    }
}

/// Integer types the period scan can run on.
trait ScanInt: Integer + Signed + Clone {
    fn to_big(&self) -> BigInt;
}

impl ScanInt for i128 {
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ScanInt for BigInt {
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

struct Scan<I> {
    min: I,
    argmin: I,
    scale: I,
    breakpoints: u64,
}

/// Scans one period of the commutator for `α = a/b`, `β = c/d` (both
/// nonzero). Every point is an integer `X` standing for `x = X / E` with
/// `E = 2|a||c|`, which makes breakpoints of both families and all
/// midpoints integral.
fn scan_period<I: ScanInt>(a: I, b: I, c: I, d: I) -> Scan<I> {
    let two = I::one() + I::one();
    let (abs_a, abs_c) = (a.abs(), c.abs());
    let scale = two.clone() * abs_a.clone() * abs_c.clone();
    let step_alpha = two.clone() * b.clone() * abs_c.clone();
    let step_beta = two * d.clone() * abs_a.clone();
    let end = abs_a * d.clone() * step_alpha.clone();
    let d_scale = d.clone() * scale.clone();
    let b_scale = b.clone() * scale.clone();

    let eval = |x: &I| -> I {
        let inner_beta = (c.clone() * x.clone()).div_floor(&d_scale);
        let left = (a.clone() * inner_beta).div_floor(&b);
        let inner_alpha = (a.clone() * x.clone()).div_floor(&b_scale);
        let right = (c.clone() * inner_alpha).div_floor(&d);
        left - right
    };

    let mut next_alpha = I::zero();
    let mut next_beta = I::zero();
    let mut best: Option<(I, I)> = None;
    let mut breakpoints = 0u64;
    let consider = |x: I, best: &mut Option<(I, I)>| {
        let v = eval(&x);
        if best.as_ref().is_none_or(|(m, _)| v < *m) {
            *best = Some((v, x));
        }
    };

    while next_alpha < end || next_beta < end {
        let here = if next_alpha <= next_beta { next_alpha.clone() } else { next_beta.clone() };
        if next_alpha == here {
            next_alpha = next_alpha + step_alpha.clone();
        }
        if next_beta == here {
            next_beta = next_beta + step_beta.clone();
        }
        let next = if next_alpha <= next_beta { next_alpha.clone() } else { next_beta.clone() };
        let next = if next < end { next } else { end.clone() };
        breakpoints += 1;
        let mid = (here.clone() + next) / (I::one() + I::one());
        consider(here, &mut best);
        consider(mid, &mut best);
    }

    let (min, argmin) = best.expect("period contains the breakpoint 0");
    Scan { min, argmin, scale, breakpoints }
}

const FAST_LIMIT: i128 = 1 << 20;

fn fits_fast(n: &BigInt) -> Option<i128> {
    n.to_i128().filter(|v| v.abs() <= FAST_LIMIT)
}

fn report_from<I: ScanInt>(scan: Scan<I>, period: Rat) -> OracleReport {
    OracleReport {
        period,
        min_value: scan.min.to_big(),
        argmin: Rat::new(scan.argmin.to_big(), scan.scale.to_big()).expect("scale is positive"),
        breakpoints_checked: scan.breakpoints,
        samples_checked: 2 * scan.breakpoints,
    }
}

/// Exhaustive exact check of the commutator over one period.
///
/// For `α = a/b`, `β = c/d` in lowest terms and `T = bd`, the numbers `αT`,
/// `βT` and `αβT` are integers, so the commutator is `T`-periodic. It is
/// constant between consecutive points of `(1/α)ℤ ∪ (1/β)ℤ`, hence
/// evaluating every breakpoint in `[0, T)` plus one midpoint per gap yields
/// the global minimum. Ties keep the smallest `x`.
pub fn oracle_verify(pair: &DilationPair) -> OracleReport {
    if pair.alpha.is_zero() || pair.beta.is_zero() {
        return OracleReport {
            period: Rat::one(),
            min_value: BigInt::zero(),
            argmin: Rat::zero(),
            breakpoints_checked: 0,
            samples_checked: 0,
        };
    }
    let (a, b) = (pair.alpha.numer(), pair.alpha.denom());
    let (c, d) = (pair.beta.numer(), pair.beta.denom());
    let period = Rat::from(b * d);
    match (fits_fast(a), fits_fast(b), fits_fast(c), fits_fast(d)) {
        (Some(a), Some(b), Some(c), Some(d)) => report_from(scan_period(a, b, c, d), period),
        _ => oracle_verify_big(pair, period),
    }
}

fn oracle_verify_big(pair: &DilationPair, period: Rat) -> OracleReport {
    let scan = scan_period(
        pair.alpha.numer().clone(),
        pair.alpha.denom().clone(),
        pair.beta.numer().clone(),
        pair.beta.denom().clone(),
    );
    report_from(scan, period)
}
