//! Nonnegative solutions of `m·a + n·b = c` over rational coefficients.

use num_bigint::BigInt;
use num_integer::{Integer, ExtendedGcd};
use num_traits::{One, Signed, Zero};

use crate::exact::Rat;

/// Solution `(m, n)` of `m·a + n·b = c` with `m, n ≥ 0` integers and `m`
/// as small as possible, or `None` if no such solution exists.
///
/// Requires `a, b > 0` and `c ≥ 0`. Clearing denominators turns this into an
/// integer linear equation; the smallest admissible `m` is the least residue
/// of the solution class modulo `B/gcd(A, B)`, and any larger `m` only makes
/// `n` smaller.
pub fn least_nonneg_solution(a: &Rat, b: &Rat, c: &Rat) -> Option<(BigInt, BigInt)> {
    debug_assert!(a.is_positive() && b.is_positive() && !c.is_negative());
    let l = a.denom().lcm(b.denom()).lcm(c.denom());
    let scale = |x: &Rat| x.numer() * (&l / x.denom());
    let (big_a, big_b, big_c) = (scale(a), scale(b), scale(c));

    let g = big_a.gcd(&big_b);
    if !big_c.is_multiple_of(&g) {
        return None;
    }
    let (a1, b1, c1) = (&big_a / &g, &big_b / &g, &big_c / &g);

    let m = if b1.is_one() {
        BigInt::zero()
    } else {
        let ExtendedGcd { x: inv, .. } = a1.extended_gcd(&b1);
        (c1.clone() * inv).mod_floor(&b1)
    };
    let rem = &c1 - &a1 * &m;
    debug_assert!(rem.is_multiple_of(&b1));
    let n = rem / &b1;
    (!n.is_negative()).then_some((m, n))
}
