//! Two-generator numerical semigroups `S(a, b) = aℕ + bℕ`.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SemigroupPair {
    pub a: u64,
    pub b: u64,
}

impl SemigroupPair {
    pub fn new(a: u64, b: u64) -> Result<SemigroupPair> {
        if a == 0 || b == 0 {
            return domain("generators must be at least 1");
        }
        if a.gcd(&b) != 1 {
            return Err(Error::NotCoprime(a, b));
        }
        Ok(SemigroupPair { a, b })
    }

    fn proper(self) -> Result<Self> {
        if self.a == 1 || self.b == 1 {
            return Err(Error::WholeSemigroup);
        }
        Ok(self)
    }
}

/// Whether `n = ia + jb` for some `i, j ≥ 0`.
pub fn sg_contains(sg: SemigroupPair, n: i64) -> Result<bool> {
    let Ok(n) = u64::try_from(n) else {
        return domain(format!("semigroup membership needs n ≥ 0, got {n}"));
    };
    Ok(contains(sg, n))
}

fn contains(sg: SemigroupPair, n: u64) -> bool {
    (0..=n / sg.a).any(|i| (n - i * sg.a).is_multiple_of(sg.b))
}

/// `ab − a − b`, the largest integer outside `S(a, b)`.
pub fn frobenius_number(sg: SemigroupPair) -> Result<u64> {
    let sg = sg.proper()?;
    sg.a.checked_mul(sg.b)
        .map(|ab| ab - sg.a - sg.b)
        .ok_or_else(|| Error::Domain(format!("ab overflows for ({}, {})", sg.a, sg.b)))
}

/// `ℕ ∖ S(a, b)` in increasing order.
pub fn nonrealizing_set(sg: SemigroupPair) -> Result<Vec<u64>> {
    let f = frobenius_number(sg)?;
    Ok((0..=f).filter(|&n| !contains(sg, n)).collect())
}

/// Checks `n ∈ S ⟺ F − n ∉ S` for every `n ∈ [0, F]`.
pub fn sylvester_duality_holds(sg: SemigroupPair) -> Result<bool> {
    let f = frobenius_number(sg)?;
    Ok((0..=f).all(|n| contains(sg, n) != contains(sg, f - n)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrobeniusReport {
    pub a: u64,
    pub b: u64,
    pub frobenius_number: u64,
    pub nonrealizing_set: Vec<u64>,
    pub sylvester_duality: bool,
}

pub fn frobenius_report(sg: SemigroupPair) -> Result<FrobeniusReport> {
    Ok(FrobeniusReport {
        a: sg.a,
        b: sg.b,
        frobenius_number: frobenius_number(sg)?,
        nonrealizing_set: nonrealizing_set(sg)?,
        sylvester_duality: sylvester_duality_holds(sg)?,
    })
}
