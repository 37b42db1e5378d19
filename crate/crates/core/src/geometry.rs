//! Avoidance criteria in the plane and on the torus.
//!
//! The enlarged diagonal is `D = ⋃ₙ (n, n+1) × (n, n+1)`. A positive pair is
//! in the solution set iff the lattice `μℤ × νℤ` misses `D`, iff the cyclic
//! torus subgroup generated by `(σ, τ)` misses the open corner rectangle
//! `(0, σ) × (0, τ)` projected to `ℝ²/ℤ²`.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{domain, Result};
use crate::exact::Rat;
use crate::exec::Execution;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LatticeParams {
    pub mu: Rat,
    pub nu: Rat,
}

impl LatticeParams {
    pub fn new(mu: Rat, nu: Rat) -> Result<LatticeParams> {
        if !mu.is_positive() || !nu.is_positive() {
            return domain(format!("lattice spacings must be positive, got ({mu}, {nu})"));
        }
        Ok(LatticeParams { mu, nu })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CornerRect {
    pub sigma: Rat,
    pub tau: Rat,
}

impl CornerRect {
    pub fn new(sigma: Rat, tau: Rat) -> Result<CornerRect> {
        if !sigma.is_positive() || !tau.is_positive() {
            return domain(format!("corner rectangle sides must be positive, got ({sigma}, {tau})"));
        }
        Ok(CornerRect { sigma, tau })
    }
}

pub fn in_enlarged_diagonal(x: &Rat, y: &Rat) -> bool {
    !x.is_integer() && !y.is_integer() && x.floor() == y.floor()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeCheck {
    pub disjoint: bool,
    /// `(k, ℓ)` with `(kμ, ℓν) ∈ D`, least `k ≥ 0` first.
    pub witness: Option<(BigInt, BigInt)>,
}

/// Decides `(μℤ × νℤ) ∩ D = ∅`.
///
/// A hit in cell `m` is a hit in cell `m + lcm(num μ, num ν)`, so it suffices
/// to walk `k` over `kμ ∈ [0, lcm)` and look for a matching `ℓ` in that cell.
pub fn lattice_diag_disjoint(params: &LatticeParams) -> LatticeCheck {
    let LatticeParams { mu, nu } = params;
    let window = mu.numer().lcm(nu.numer());
    let k_end = &window / mu.numer() * mu.denom();
    let hit = |k: &BigInt| -> Option<BigInt> {
        let x = Rat::from(k) * mu;
        if x.is_integer() {
            return None;
        }
        let m = x.floor();
        let l = (Rat::from(&m) / nu).floor() + 1;
        (Rat::from(&l) * nu < Rat::from(m + 1)).then_some(l)
    };
    let witness = Execution::default()
        .find_first_big(&k_end, |k| hit(k).is_some())
        .map(|k| {
            let l = hit(&k).expect("found above");
            (k, l)
        });
    LatticeCheck { disjoint: witness.is_none(), witness }
}

/// One axis of the projected corner rectangle: the whole circle when
/// `side > 1`, otherwise the open arc `(0, side)`.
pub fn torus_axis_in_corner(x: &Rat, side: &Rat) -> bool {
    if side > &Rat::one() {
        return true;
    }
    let f = x.frac();
    f.is_positive() && &f < side
}

pub fn torus_point_in_corner(x: &Rat, y: &Rat, rect: &CornerRect) -> bool {
    torus_axis_in_corner(x, &rect.sigma) && torus_axis_in_corner(y, &rect.tau)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusCheck {
    pub avoids: bool,
    /// Least `N ≥ 1` with `N·(σ, τ)` inside the corner rectangle.
    pub witness: Option<BigInt>,
}

/// Decides whether `⟨(σ, τ)⟩` misses the corner rectangle. The subgroup has
/// exactly `L = lcm(den σ, den τ)` elements, reached by `N = 1..=L`.
pub fn torus_subgroup_avoids(rect: &CornerRect) -> TorusCheck {
    let order = rect.sigma.denom().lcm(rect.tau.denom());
    let witness = Execution::default()
        .find_first_big(&order, |i| {
            let n = Rat::from(i + 1);
            torus_point_in_corner(&(&n * &rect.sigma), &(&n * &rect.tau), rect)
        })
        .map(|i| i + 1);
    TorusCheck { avoids: witness.is_none(), witness }
}
