//! Beatty sequences `B⁺(u) = {⌊nu⌋ : n ≥ 1}`, `B(u) = {⌊nu⌋ : n ∈ ℤ}` and
//! the reduced sequence `B₀(u) = {⌊nu⌋ : n ∈ ℤ, nu ∉ ℤ}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use crate::diophantine::least_nonneg_solution;
use crate::error::{domain, Result};
use crate::exact::Rat;
use crate::exec::Execution;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BeattyParam {
    u: Rat,
}

impl BeattyParam {
    pub fn new(u: Rat) -> Result<BeattyParam> {
        if !u.is_positive() {
            return domain(format!("Beatty parameter must be positive, got {u}"));
        }
        Ok(BeattyParam { u })
    }

    pub fn value(&self) -> &Rat {
        &self.u
    }
}

/// `m ∈ B⁺(u)`: some `n ≥ 1` lies in `[m/u, (m+1)/u)`.
pub fn beatty_pos_contains(u: &BeattyParam, m: &BigInt) -> bool {
    let u = &u.u;
    let n = (Rat::from(m) / u).ceil().max(BigInt::one());
    Rat::from(n) * u < Rat::from(m + 1)
}

/// `m ∈ B(u)`: some integer `n` lies in `[m/u, (m+1)/u)`.
pub fn beatty_contains(u: &BeattyParam, m: &BigInt) -> bool {
    let u = &u.u;
    let n = (Rat::from(m) / u).ceil();
    Rat::from(n) * u < Rat::from(m + 1)
}

/// `m ∈ B₀(u)`: some integer `n` has `m < nu < m + 1`.
pub fn reduced_contains(u: &BeattyParam, m: &BigInt) -> bool {
    let u = &u.u;
    let n = (Rat::from(m) / u).floor() + 1;
    Rat::from(n) * u < Rat::from(m + 1)
}

/// Least `(m, n)` with `m, n ≥ 0` and `m/u + n/v = 1`.
pub fn thm27_criterion(u: &BeattyParam, v: &BeattyParam) -> Option<(BigInt, BigInt)> {
    let inv = |p: &BeattyParam| p.u.recip().expect("positive");
    least_nonneg_solution(&inv(u), &inv(v), &Rat::one())
}

/// Least `m ≥ 0` in `B₀(u) ∩ B₀(v)`, or `None` if the sets are disjoint.
///
/// Membership in `B₀(u)` depends only on `m mod num(u)`, so the window
/// `[0, lcm(num u, num v))` is exhaustive.
pub fn reduced_common_element(u: &BeattyParam, v: &BeattyParam, exec: Execution) -> Option<BigInt> {
    if u.u.is_integer() || v.u.is_integer() {
        return None;
    }
    let window = u.u.numer().lcm(v.u.numer());
    exec.find_first_big(&window, |m| reduced_contains(u, m) && reduced_contains(v, m))
}

/// `B₀(u) ∩ B₀(v) = ∅`, by exhaustive scan over one period.
pub fn reduced_disjoint(u: &BeattyParam, v: &BeattyParam) -> bool {
    let below_one = |p: &BeattyParam| p.u < Rat::one();
    if u.u.is_integer() || v.u.is_integer() {
        return true;
    }
    if below_one(u) || below_one(v) {
        return false;
    }
    reduced_common_element(u, v, Execution::default()).is_none()
}

/// Elements of `B⁺(u)`, `B(u)` and `B₀(u)` inside `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BeattyWindow {
    pub u: Rat,
    pub lo: i64,
    pub hi: i64,
    pub positive: Vec<i64>,
    pub full: Vec<i64>,
    pub reduced: Vec<i64>,
}

pub fn beatty_window(u: &BeattyParam, lo: i64, hi: i64) -> BeattyWindow {
    let pick = |test: fn(&BeattyParam, &BigInt) -> bool| -> Vec<i64> {
        (lo..=hi).filter(|&m| test(u, &BigInt::from(m))).collect()
    };
    BeattyWindow {
        u: u.u.clone(),
        lo,
        hi,
        positive: pick(beatty_pos_contains),
        full: pick(beatty_contains),
        reduced: pick(reduced_contains),
    }
}
