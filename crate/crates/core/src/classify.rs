//! Witness-producing classification of dilation pairs.
//!
//! A pair is a member when `⌊α⌊βx⌋⌋ ≥ ⌊β⌊αx⌋⌋` for every real `x`. The
//! decision here is purely algebraic: it searches for integer parameters
//! that put the pair on one of the known solution families. The oracle in
//! [`crate::floorfn`] is only consulted to produce counterexamples for
//! non-members, never to decide membership.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::diophantine::least_nonneg_solution;
use crate::error::{domain, Result};
use crate::exact::{serde_int, Rat};
use crate::floorfn::{oracle_verify, DilationPair, OracleReport};

/// Integer certificate placing a pair on a solution family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `α = 0` or `β = 0`.
    AxisZero,
    /// `α < 0 < β`.
    MixedNegPos,
    /// `mαβ + nα = β` with `m, n ≥ 0` not both zero.
    PositiveLinear {
        #[serde(with = "serde_int")]
        m: BigInt,
        #[serde(with = "serde_int")]
        n: BigInt,
    },
    /// `mαβ − nβ = −α` with `m ≥ 0`, `n ≥ 1`.
    NegHyperbola {
        #[serde(with = "serde_int")]
        m: BigInt,
        #[serde(with = "serde_int")]
        n: BigInt,
    },
    /// `α = −q/p` in lowest terms and `−1/p ≤ β < 0`.
    NegVertical {
        #[serde(with = "serde_int")]
        p: BigInt,
        #[serde(with = "serde_int")]
        q: BigInt,
    },
    /// `α = −q/p`, `β = −(1/p)·(1 + (m/p + n/q − 1)/r)⁻¹` with
    /// `0 < m/p + n/q < 1`, `m ≥ 0`, `n ≥ 1`, `r ≥ 2`.
    NegSporadic {
        #[serde(with = "serde_int")]
        p: BigInt,
        #[serde(with = "serde_int")]
        q: BigInt,
        #[serde(with = "serde_int")]
        m: BigInt,
        #[serde(with = "serde_int")]
        n: BigInt,
        #[serde(with = "serde_int")]
        r: BigInt,
    },
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::AxisZero => "axis_zero",
            Witness::MixedNegPos => "mixed_neg_pos",
            Witness::PositiveLinear { .. } => "positive_linear",
            Witness::NegHyperbola { .. } => "neg_hyperbola",
            Witness::NegVertical { .. } => "neg_vertical",
            Witness::NegSporadic { .. } => "neg_sporadic",
        }
    }

    /// Parameters as `name=value` pairs joined by `;` (empty for the
    /// parameterless kinds).
    pub fn params(&self) -> String {
        let join = |kv: &[(&str, &BigInt)]| {
            kv.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
        };
        match self {
            Witness::AxisZero | Witness::MixedNegPos => String::new(),
            Witness::PositiveLinear { m, n } | Witness::NegHyperbola { m, n } => join(&[("m", m), ("n", n)]),
            Witness::NegVertical { p, q } => join(&[("p", p), ("q", q)]),
            Witness::NegSporadic { p, q, m, n, r } => {
                join(&[("p", p), ("q", q), ("m", m), ("n", n), ("r", r)])
            }
        }
    }

    /// Checks the defining equation of this witness against `pair` exactly.
    pub fn certifies(&self, pair: &DilationPair) -> bool {
        let (alpha, beta) = (&pair.alpha, &pair.beta);
        match self {
            Witness::AxisZero => alpha.is_zero() || beta.is_zero(),
            Witness::MixedNegPos => alpha.is_negative() && beta.is_positive(),
            Witness::PositiveLinear { m, n } => {
                !m.is_negative()
                    && !n.is_negative()
                    && !(m.is_zero() && n.is_zero())
                    && Rat::from(m) * alpha * beta + Rat::from(n) * alpha == *beta
            }
            Witness::NegHyperbola { m, n } => {
                alpha.is_negative()
                    && beta.is_negative()
                    && !m.is_negative()
                    && n >= &BigInt::one()
                    && Rat::from(m) * alpha * beta - Rat::from(n) * beta == -alpha
            }
            Witness::NegVertical { p, q } => {
                let Some(alpha_pq) = vertical_alpha(p, q) else { return false };
                let bottom = -Rat::from(p).recip().expect("p ≥ 1");
                *alpha == alpha_pq && bottom <= *beta && beta.is_negative()
            }
            Witness::NegSporadic { p, q, m, n, r } => match sporadic_point(p, q, m, n, r) {
                Some(point) => point == *pair,
                None => false,
            },
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self.params();
        if params.is_empty() {
            f.write_str(self.kind())
        } else {
            write!(f, "{}{{{}}}", self.kind(), params.replace(';', ","))
        }
    }
}

fn vertical_alpha(p: &BigInt, q: &BigInt) -> Option<Rat> {
    let valid = p >= &BigInt::one() && q >= &BigInt::one() && p.gcd(q).is_one();
    valid.then(|| -Rat::new(q.clone(), p.clone()).expect("p ≥ 1"))
}

/// The sporadic point for `(p, q, m, n, r)`, or `None` if the parameters
/// violate their constraints.
pub fn sporadic_point(p: &BigInt, q: &BigInt, m: &BigInt, n: &BigInt, r: &BigInt) -> Option<DilationPair> {
    let alpha = vertical_alpha(p, q)?;
    if m.is_negative() || n < &BigInt::one() || r < &BigInt::from(2) {
        return None;
    }
    let s = Rat::new(m.clone(), p.clone()).ok()? + Rat::new(n.clone(), q.clone()).ok()?;
    if !s.is_positive() || s >= Rat::one() {
        return None;
    }
    let inner = Rat::one() + (s - Rat::one()) / Rat::from(r);
    let beta = -(Rat::from(p) * inner).recip()?;
    Some(DilationPair::new(alpha, beta))
}

/// Classification outcome. `witness` is present exactly for members;
/// `counterexample` is a point with negative commutator for non-members.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    #[serde(flatten)]
    pub pair: DilationPair,
    pub member: bool,
    pub witness: Option<Witness>,
    pub counterexample: Option<Rat>,
}

/// Sign-dispatched witness search; `None` means the pair is not a member.
pub fn find_witness(pair: &DilationPair) -> Option<Witness> {
    let (alpha, beta) = (&pair.alpha, &pair.beta);
    if alpha.is_zero() || beta.is_zero() {
        Some(Witness::AxisZero)
    } else if alpha.is_negative() && beta.is_positive() {
        Some(Witness::MixedNegPos)
    } else if alpha.is_positive() && beta.is_negative() {
        None
    } else if alpha.is_positive() {
        positive_witness(alpha, beta).expect("signs checked")
    } else {
        negative_witness(alpha, beta).expect("signs checked")
    }
}

/// Membership without witness or counterexample.
pub fn is_member(pair: &DilationPair) -> bool {
    find_witness(pair).is_some()
}

pub fn classify(pair: &DilationPair) -> Verdict {
    match find_witness(pair) {
        Some(w) => member_verdict(pair, w),
        None => non_member_verdict(pair, &oracle_verify(pair)),
    }
}

/// Like [`classify`], taking non-member counterexamples from an existing
/// oracle report instead of recomputing it.
pub fn classify_with_report(pair: &DilationPair, report: &OracleReport) -> Verdict {
    match find_witness(pair) {
        Some(w) => member_verdict(pair, w),
        None => non_member_verdict(pair, report),
    }
}

fn member_verdict(pair: &DilationPair, witness: Witness) -> Verdict {
    Verdict { pair: pair.clone(), member: true, witness: Some(witness), counterexample: None }
}

fn non_member_verdict(pair: &DilationPair, report: &OracleReport) -> Verdict {
    // A nonnegative oracle minimum here means the witness search and the
    // oracle disagree; the verdict then carries no counterexample.
    let counterexample = (!report.is_member()).then(|| report.argmin.clone());
    Verdict { pair: pair.clone(), member: false, witness: None, counterexample }
}

/// Least-`m` solution of `mαβ + nα = β`, `m, n ≥ 0` not both zero.
///
/// Dividing by `β` gives `mα + n(α/β) = 1`, a nonnegative linear
/// Diophantine problem with rational coefficients.
pub fn positive_witness(alpha: &Rat, beta: &Rat) -> Result<Option<Witness>> {
    if !alpha.is_positive() || !beta.is_positive() {
        return domain("positive witness search needs α, β > 0");
    }
    let tau = alpha / beta;
    Ok(least_nonneg_solution(alpha, &tau, &Rat::one()).map(|(m, n)| Witness::PositiveLinear { m, n }))
}

/// First witness among the hyperbola, vertical segment and sporadic
/// families, tried in that order.
pub fn negative_witness(alpha: &Rat, beta: &Rat) -> Result<Option<Witness>> {
    if !alpha.is_negative() || !beta.is_negative() {
        return domain("negative witness search needs α, β < 0");
    }
    if let Some(w) = neg_hyperbola(alpha, beta) {
        return Ok(Some(w));
    }
    let p = alpha.denom().clone();
    let q = -alpha.numer();
    let bottom = -Rat::from(&p).recip().expect("p ≥ 1");
    if *beta >= bottom {
        return Ok(Some(Witness::NegVertical { p, q }));
    }
    Ok(neg_sporadic(&p, &q, beta))
}

/// `mαβ − nβ = −α` ⟺ `m|α| + n = α/β` with `n ≥ 1`.
fn neg_hyperbola(alpha: &Rat, beta: &Rat) -> Option<Witness> {
    let rho = alpha / beta;
    let target = &rho - &Rat::one();
    if target.is_negative() {
        return None;
    }
    least_nonneg_solution(&alpha.abs(), &Rat::one(), &target)
        .map(|(m, n_shift)| Witness::NegHyperbola { m, n: n_shift + 1 })
}

/// Sporadic witness with the least `(m, n)` for `α = −q/p`, `β < −1/p`.
///
/// Writing `κ = 1 − 1/(p|β|) ∈ (0, 1)`, the defining equation becomes
/// `m/p + n/q = 1 − rκ`. Either `r` or `(m, n)` can be enumerated; the
/// cheaper range is used.
fn neg_sporadic(p: &BigInt, q: &BigInt, beta: &Rat) -> Option<Witness> {
    let kappa = Rat::one() - (Rat::from(p) * beta.abs()).recip().expect("β ≠ 0");
    if !kappa.is_positive() {
        return None;
    }
    let r_range = kappa.recip().expect("κ > 0").ceil();
    if r_range <= p * q {
        sporadic_by_r(p, q, &kappa)
    } else {
        sporadic_by_mn(p, q, beta)
    }
}

fn sporadic_by_r(p: &BigInt, q: &BigInt, kappa: &Rat) -> Option<Witness> {
    let pq = p * q;
    let pq_rat = Rat::from(&pq);
    let q_inv = q.extended_gcd(p).x;
    let mut best: Option<(BigInt, BigInt, BigInt)> = None;
    let mut r = BigInt::from(2);
    while Rat::from(&r) * kappa < Rat::one() {
        let j = &pq_rat * (Rat::one() - Rat::from(&r) * kappa);
        if let Some(j) = j.to_integer() {
            // j = mq + np with 0 ≤ m < p is unique since gcd(p, q) = 1.
            let m = (&j * &q_inv).mod_floor(p);
            let n = (&j - &m * q) / p;
            if n >= BigInt::one() && &n < q && best.as_ref().is_none_or(|(bm, bn, _)| (&m, &n) < (bm, bn)) {
                best = Some((m, n, r.clone()));
            }
        }
        r += 1;
    }
    best.map(|(m, n, r)| Witness::NegSporadic { p: p.clone(), q: q.clone(), m, n, r })
}

fn sporadic_by_mn(p: &BigInt, q: &BigInt, beta: &Rat) -> Option<Witness> {
    let mut m = BigInt::zero();
    while &m < p {
        let mut n = BigInt::one();
        while &n < q {
            let s = Rat::new(m.clone(), p.clone()).ok()? + Rat::new(n.clone(), q.clone()).ok()?;
            if s >= Rat::one() {
                break;
            }
            // β = −1/(p(1 + (s − 1)/r))  ⟹  r = (s − 1)/(−1/(pβ) − 1).
            let denom = -(Rat::from(p) * beta).recip().expect("β ≠ 0") - Rat::one();
            if let Some(r) = (&s - &Rat::one()).checked_div(&denom).and_then(|r| r.to_integer()) {
                if r >= BigInt::from(2) {
                    return Some(Witness::NegSporadic { p: p.clone(), q: q.clone(), m, n, r });
                }
            }
            n += 1;
        }
        m += 1;
    }
    None
}

/// `(μ, ν) = (1/α, β/α)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MuNu {
    pub mu: Rat,
    pub nu: Rat,
}

/// `(σ, τ) = (α, α/β)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SigmaTau {
    pub sigma: Rat,
    pub tau: Rat,
}

fn require_positive(alpha: &Rat, beta: &Rat, what: &str) -> Result<()> {
    if alpha.is_positive() && beta.is_positive() {
        Ok(())
    } else {
        domain(format!("{what} needs positive coordinates"))
    }
}

pub fn to_munu(pair: &DilationPair) -> Result<MuNu> {
    require_positive(&pair.alpha, &pair.beta, "(μ, ν) transform")?;
    let mu = pair.alpha.recip().expect("α > 0");
    Ok(MuNu { nu: &pair.beta * &mu, mu })
}

/// Inverse of [`to_munu`]: `(α, β) = (1/μ, ν/μ)`.
pub fn from_munu(munu: &MuNu) -> Result<DilationPair> {
    require_positive(&munu.mu, &munu.nu, "(μ, ν) inverse")?;
    let alpha = munu.mu.recip().expect("μ > 0");
    Ok(DilationPair::new(alpha.clone(), &munu.nu * &alpha))
}

pub fn to_sigmatau(pair: &DilationPair) -> Result<SigmaTau> {
    require_positive(&pair.alpha, &pair.beta, "(σ, τ) transform")?;
    Ok(SigmaTau { sigma: pair.alpha.clone(), tau: &pair.alpha / &pair.beta })
}

/// Inverse of [`to_sigmatau`]: `(α, β) = (σ, σ/τ)`.
pub fn from_sigmatau(st: &SigmaTau) -> Result<DilationPair> {
    require_positive(&st.sigma, &st.tau, "(σ, τ) inverse")?;
    Ok(DilationPair::new(st.sigma.clone(), &st.sigma / &st.tau))
}

fn require_scale(pair: &DilationPair, k: u64) -> Result<()> {
    require_positive(&pair.alpha, &pair.beta, "symmetry")?;
    if k == 0 {
        return domain("symmetry factor must be ≥ 1");
    }
    Ok(())
}

/// `(α, β) ↦ (α, kβ)`.
pub fn symmetry_scale_second(pair: &DilationPair, k: u64) -> Result<DilationPair> {
    require_scale(pair, k)?;
    Ok(DilationPair::new(pair.alpha.clone(), &pair.beta * &Rat::from(k as i64)))
}

/// `(α, β) ↦ (α/k, β/k)`.
pub fn symmetry_shrink(pair: &DilationPair, k: u64) -> Result<DilationPair> {
    require_scale(pair, k)?;
    let k = Rat::from(k as i64);
    Ok(DilationPair::new(&pair.alpha / &k, &pair.beta / &k))
}

/// `(α, β) ↦ (α/β, 1/β)`, an involution of the open first quadrant.
pub fn birational(pair: &DilationPair) -> Result<DilationPair> {
    require_positive(&pair.alpha, &pair.beta, "birational symmetry")?;
    let inv = pair.beta.recip().expect("β > 0");
    Ok(DilationPair::new(&pair.alpha * &inv, inv))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn pair(a: &str, b: &str) -> DilationPair {
        DilationPair::new(r(a), r(b))
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn classify_examples() {
        let v = classify(&pair("0", "5/3"));
        assert!(v.member);
        assert_eq!(v.witness, Some(Witness::AxisZero));

        let v = classify(&pair("3/7", "-2"));
        assert!(!v.member && v.witness.is_none());
        let x = v.counterexample.expect("non-member carries a point");
        assert!(crate::floorfn::commutator(&v.pair, &x) < BigInt::zero());

        // (−3/2, −3/4) lies on the sporadic family and on the line β = α/2;
        // the hyperbola family is tried first.
        let v = classify(&pair("-3/2", "-3/4"));
        assert!(v.member);
        assert_eq!(v.witness, Some(Witness::NegHyperbola { m: big(0), n: big(2) }));
        let sporadic = Witness::NegSporadic { p: big(2), q: big(3), m: big(0), n: big(1), r: big(2) };
        assert!(sporadic.certifies(&v.pair));
    }

    #[test]
    fn positive_witness_examples() {
        let w = |a, b| positive_witness(&r(a), &r(b)).unwrap();
        assert_eq!(w("1/3", "1/2"), Some(Witness::PositiveLinear { m: big(1), n: big(1) }));
        assert_eq!(w("2/3", "1/2"), None);
        assert_eq!(w("1/2", "1"), Some(Witness::PositiveLinear { m: big(0), n: big(2) }));
        assert!(positive_witness(&r("-1"), &r("1")).is_err());
    }

    #[test]
    fn negative_witness_examples() {
        let w = |a, b| negative_witness(&r(a), &r(b)).unwrap();
        assert_eq!(w("-1", "-1/2"), Some(Witness::NegHyperbola { m: big(0), n: big(2) }));
        // (−3/2, −1/3) is also on the hyperbola m = 1, n = 3.
        assert_eq!(w("-3/2", "-1/3"), Some(Witness::NegHyperbola { m: big(1), n: big(3) }));
        assert!(Witness::NegVertical { p: big(2), q: big(3) }.certifies(&pair("-3/2", "-1/3")));
        // The closed endpoint β = −1/p belongs to the segment.
        assert!(Witness::NegVertical { p: big(2), q: big(3) }.certifies(&pair("-3/2", "-1/2")));
        assert_eq!(w("-3/2", "-1/2"), Some(Witness::NegHyperbola { m: big(0), n: big(3) }));
        assert_eq!(w("-3/2", "-2/5"), Some(Witness::NegVertical { p: big(2), q: big(3) }));
        assert_eq!(
            w("-3/2", "-9/14"),
            Some(Witness::NegSporadic { p: big(2), q: big(3), m: big(0), n: big(1), r: big(3) })
        );
        // Three parameter sets reach −6/11; the least (m, n) is reported.
        assert_eq!(
            w("-3/2", "-6/11"),
            Some(Witness::NegSporadic { p: big(2), q: big(3), m: big(0), n: big(1), r: big(8) })
        );
        assert!(negative_witness(&r("0"), &r("-1")).is_err());
    }

    #[test]
    fn sporadic_routes_agree() {
        let grid = crate::exact::rational_grid(9, 9, false);
        for alpha in grid.iter().filter(|a| a.is_negative()) {
            let p = alpha.denom().clone();
            let q = -alpha.numer();
            for beta in grid.iter().filter(|b| b.is_negative()) {
                let kappa = Rat::one() - (Rat::from(&p) * beta.abs()).recip().unwrap();
                if !kappa.is_positive() {
                    continue;
                }
                assert_eq!(sporadic_by_r(&p, &q, &kappa), sporadic_by_mn(&p, &q, beta), "({alpha}, {beta})");
            }
        }
    }

    #[test]
    fn witnesses_certify_their_pairs() {
        let grid = crate::exact::rational_grid(6, 6, true);
        for a in &grid {
            for b in &grid {
                let p = DilationPair::new(a.clone(), b.clone());
                if let Some(w) = find_witness(&p) {
                    assert!(w.certifies(&p), "{w} does not certify {p}");
                }
            }
        }
    }

    #[test]
    fn transforms() {
        let m = to_munu(&pair("1/2", "1")).unwrap();
        assert_eq!(m, MuNu { mu: r("2"), nu: r("2") });
        let p = pair("3/5", "7/2");
        let twice = to_munu(&from_munu(&to_munu(&p).unwrap()).unwrap()).unwrap();
        assert_eq!(from_munu(&twice).unwrap(), p);
        let mm = to_munu(&p).unwrap();
        assert_eq!(to_munu(&DilationPair::new(mm.mu, mm.nu)).unwrap(), MuNu { mu: r("3/5"), nu: r("7/2") });
        let st = to_sigmatau(&pair("2/9", "4/3")).unwrap();
        assert_eq!(st, SigmaTau { sigma: r("2/9"), tau: r("1/6") });
        assert_eq!(from_sigmatau(&st).unwrap(), pair("2/9", "4/3"));
        assert!(to_munu(&pair("-1", "1")).is_err());
    }

    #[test]
    fn symmetry_examples() {
        let base = pair("1/3", "1/2");
        let scaled = symmetry_scale_second(&base, 2).unwrap();
        assert_eq!(scaled, pair("1/3", "1"));
        // Least m wins over the doubled witness (1, 2).
        assert_eq!(find_witness(&scaled), Some(Witness::PositiveLinear { m: big(0), n: big(3) }));
        assert!(Witness::PositiveLinear { m: big(1), n: big(2) }.certifies(&scaled));
        let shrunk = symmetry_shrink(&base, 3).unwrap();
        assert_eq!(shrunk, pair("1/9", "1/6"));
        assert!(is_member(&shrunk));
        let bir = birational(&base).unwrap();
        assert_eq!(bir, pair("2/3", "2"));
        assert_eq!(find_witness(&bir), Some(Witness::PositiveLinear { m: big(0), n: big(3) }));
        assert!(Witness::PositiveLinear { m: big(1), n: big(1) }.certifies(&bir));
        assert!(symmetry_shrink(&base, 0).is_err());
        assert!(birational(&pair("1", "-1")).is_err());
    }

    #[test]
    fn verdict_json_round_trips() {
        for (a, b) in [("-3/2", "-3/4"), ("2/3", "1/2"), ("0", "1"), ("-1", "2")] {
            let v = classify(&pair(a, b));
            let text = serde_json::to_string(&v).unwrap();
            assert_eq!(serde_json::from_str::<Verdict>(&text).unwrap(), v);
        }
    }

    #[test]
    fn witness_json_shape() {
        let w = Witness::PositiveLinear { m: big(1), n: big(1) };
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"kind":"positive_linear","m":1,"n":1}"#);
        assert_eq!(w.to_string(), "positive_linear{m=1,n=1}");
    }
}
