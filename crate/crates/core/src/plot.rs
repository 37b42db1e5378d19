//! SVG map of the solution set in the `(α, β)` plane.
//!
//! Layers, bottom to top: axes, the mixed-sign quadrant `α < 0 < β`, the
//! positive families `mαβ + nα = β`, the negative hyperbolas
//! `mαβ − nβ = −α`, the vertical segments `α = −q/p`, `−1/p ≤ β < 0`, and
//! the sporadic points. Curves are sampled at [`SAMPLES`] equal exact steps
//! in `α` (in `β` for vertical lines) across the part inside the view box.
//! Coordinates are printed with six decimals; `data-*` attributes carry
//! exact values.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::classify::{sporadic_point, Witness};
use crate::error::{domain, Result};
use crate::exact::Rat;
use crate::floorfn::DilationPair;

pub const SAMPLES: u64 = 64;
pub const CANVAS: u64 = 600;

/// View box and family bounds. `m = 0` requests no families at all; otherwise
/// `m` bounds the curve parameters, `d` the denominators `p, q` and `r` the
/// sporadic parameter `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlotSpec {
    pub alpha_min: Rat,
    pub alpha_max: Rat,
    pub beta_min: Rat,
    pub beta_max: Rat,
    pub m: u64,
    pub d: u64,
    pub r: u64,
}

impl PlotSpec {
    pub fn new(view: [Rat; 4], m: u64, d: u64, r: u64) -> Result<PlotSpec> {
        let [alpha_min, alpha_max, beta_min, beta_max] = view;
        if alpha_min >= alpha_max || beta_min >= beta_max {
            return domain(format!(
                "empty view box [{alpha_min}, {alpha_max}] × [{beta_min}, {beta_max}]"
            ));
        }
        if d == 0 || r == 0 {
            return domain("plot bounds D and R must be at least 1");
        }
        Ok(PlotSpec { alpha_min, alpha_max, beta_min, beta_max, m, d, r })
    }

    fn contains(&self, a: &Rat, b: &Rat) -> bool {
        &self.alpha_min <= a && a <= &self.alpha_max && &self.beta_min <= b && b <= &self.beta_max
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub m: u64,
    pub n: u64,
    pub points: Vec<(Rat, Rat)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub p: u64,
    pub q: u64,
    pub alpha: Rat,
    pub beta_lo: Rat,
    pub beta_hi: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PlotLayers {
    /// `[α₀, α₁] × [β₀, β₁]`, the visible part of `α < 0 < β`.
    pub mixed_sign: Option<[Rat; 4]>,
    pub positive: Vec<Curve>,
    pub negative: Vec<Curve>,
    pub vertical: Vec<Segment>,
    pub sporadic: Vec<(DilationPair, Witness)>,
}

fn rat(n: u64) -> Rat {
    Rat::from(BigInt::from(n))
}

fn steps(lo: &Rat, hi: &Rat) -> Vec<Rat> {
    let width = hi - lo;
    (0..=SAMPLES).map(|i| lo + &(&width * &rat(i) / rat(SAMPLES))).collect()
}

/// `β = nα / (1 − mα)` on `α ≥ 0`, or the vertical line `α = 1/m` when
/// `n = 0`. Both branches are increasing with inverse `α = β / (n + mβ)`.
fn positive_curve(spec: &PlotSpec, m: u64, n: u64) -> Option<Curve> {
    let zero = Rat::zero();
    let beta_lo = spec.beta_min.clone().max(zero.clone());
    if beta_lo >= spec.beta_max {
        return None;
    }
    if n == 0 {
        let a = rat(m).recip()?;
        if a < spec.alpha_min || a > spec.alpha_max {
            return None;
        }
        let points = steps(&beta_lo, &spec.beta_max).into_iter().map(|b| (a.clone(), b)).collect();
        return Some(Curve { m, n, points });
    }
    let inverse = |b: &Rat| b / &(rat(n) + rat(m) * b);
    let lo = spec.alpha_min.clone().max(zero.clone()).max(inverse(&beta_lo));
    let hi = spec.alpha_max.clone().min(inverse(&spec.beta_max));
    if lo >= hi {
        return None;
    }
    let f = |a: &Rat| rat(n) * a / (Rat::one() - rat(m) * a);
    let points = steps(&lo, &hi).into_iter().map(|a| (a.clone(), f(&a))).collect();
    Some(Curve { m, n, points })
}

/// `β = α / (n − mα)` on `α ≤ 0`; increasing, bounded below by `−1/m`, with
/// inverse `α = nβ / (1 + mβ)`.
fn negative_curve(spec: &PlotSpec, m: u64, n: u64) -> Option<Curve> {
    let zero = Rat::zero();
    let floor = (m > 0).then(|| -rat(m).recip().expect("m ≥ 1"));
    let inverse = |b: &Rat| rat(n) * b / (Rat::one() + rat(m) * b);
    let above_floor = |b: &Rat| floor.as_ref().is_none_or(|f| b > f);

    if !spec.beta_min.is_negative() {
        return None;
    }
    let lo = if above_floor(&spec.beta_min) {
        spec.alpha_min.clone().max(inverse(&spec.beta_min))
    } else {
        spec.alpha_min.clone()
    };
    let hi = if !spec.beta_max.is_negative() {
        spec.alpha_max.clone().min(zero.clone())
    } else if above_floor(&spec.beta_max) {
        spec.alpha_max.clone().min(inverse(&spec.beta_max))
    } else {
        return None;
    };
    if lo >= hi {
        return None;
    }
    let f = |a: &Rat| a / &(rat(n) - rat(m) * a);
    let points = steps(&lo, &hi).into_iter().map(|a| (a.clone(), f(&a))).collect();
    Some(Curve { m, n, points })
}

fn vertical_segments(spec: &PlotSpec) -> Vec<Segment> {
    let mut out = Vec::new();
    let top = spec.beta_max.clone().min(Rat::zero());
    for p in 1..=spec.d {
        let q_max = (-&spec.alpha_min * rat(p)).floor();
        let mut q = 1u64;
        while BigInt::from(q) <= q_max {
            let alpha = -Rat::new(q, p).expect("p ≥ 1");
            let beta_lo = spec.beta_min.clone().max(-rat(p).recip().expect("p ≥ 1"));
            if q.gcd(&p) == 1 && alpha <= spec.alpha_max && beta_lo < top {
                out.push(Segment { p, q, alpha, beta_lo, beta_hi: top.clone() });
            }
            q += 1;
        }
    }
    out
}

fn sporadic_points(spec: &PlotSpec) -> Vec<(DilationPair, Witness)> {
    let mut seen: BTreeMap<DilationPair, Witness> = BTreeMap::new();
    let big = BigInt::from;
    for p in 1..=spec.d {
        for q in (1..=spec.d).filter(|q| q.gcd(&p) == 1) {
            for m in 0..p {
                for n in 1..=q {
                    for r in 2..=spec.r {
                        let (bp, bq, bm, bn, br) = (big(p), big(q), big(m), big(n), big(r));
                        let Some(point) = sporadic_point(&bp, &bq, &bm, &bn, &br) else { continue };
                        if spec.contains(&point.alpha, &point.beta) {
                            seen.entry(point)
                                .or_insert(Witness::NegSporadic { p: bp, q: bq, m: bm, n: bn, r: br });
                        }
                    }
                }
            }
        }
    }
    seen.into_iter().collect()
}

pub fn plot_layers(spec: &PlotSpec) -> PlotLayers {
    let zero = Rat::zero();
    let mixed_sign = {
        let (a0, a1) = (spec.alpha_min.clone(), spec.alpha_max.clone().min(zero.clone()));
        let (b0, b1) = (spec.beta_min.clone().max(zero.clone()), spec.beta_max.clone());
        (a0 < a1 && b0 < b1).then_some([a0, a1, b0, b1])
    };
    let mut layers = PlotLayers { mixed_sign, ..PlotLayers::default() };
    if spec.m == 0 {
        return layers;
    }
    for m in 0..=spec.m {
        for n in 0..=spec.m {
            if m + n > 0 {
                layers.positive.extend(positive_curve(spec, m, n));
            }
        }
    }
    for m in 0..=spec.m {
        for n in 1..=spec.m {
            layers.negative.extend(negative_curve(spec, m, n));
        }
    }
    layers.vertical = vertical_segments(spec);
    layers.sporadic = sporadic_points(spec);
    layers
}

struct Frame<'a>(&'a PlotSpec);

impl Frame<'_> {
    fn coord(v: &Rat) -> String {
        let s = format!("{:.6}", v.to_f64());
        if s == "-0.000000" {
            "0.000000".to_string()
        } else {
            s
        }
    }

    fn x(&self, a: &Rat) -> String {
        let s = self.0;
        Self::coord(&((a - &s.alpha_min) / (&s.alpha_max - &s.alpha_min) * rat(CANVAS)))
    }

    fn y(&self, b: &Rat) -> String {
        let s = self.0;
        Self::coord(&(rat(CANVAS) - (b - &s.beta_min) / (&s.beta_max - &s.beta_min) * rat(CANVAS)))
    }

    fn polyline(&self, out: &mut String, family: &str, c: &Curve) {
        let pts: Vec<String> = c.points.iter().map(|(a, b)| format!("{},{}", self.x(a), self.y(b))).collect();
        let _ = writeln!(
            out,
            r#"    <polyline class="{family}" data-m="{}" data-n="{}" points="{}"/>"#,
            c.m,
            c.n,
            pts.join(" ")
        );
    }
}

pub fn render_svg(spec: &PlotSpec, layers: &PlotLayers) -> String {
    let f = Frame(spec);
    let zero = Rat::zero();
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}" data-alpha-min="{}" data-alpha-max="{}" data-beta-min="{}" data-beta-max="{}" data-m="{}" data-d="{}" data-r="{}">"#,
        spec.alpha_min, spec.alpha_max, spec.beta_min, spec.beta_max, spec.m, spec.d, spec.r
    );
    let _ = writeln!(out, r#"  <rect width="{CANVAS}" height="{CANVAS}" fill="white"/>"#);

    let _ = writeln!(out, r#"  <g id="axes" stroke="black" stroke-width="1.5">"#);
    if spec.alpha_min <= zero && zero <= spec.alpha_max {
        let _ = writeln!(out, r#"    <line x1="{0}" y1="0.000000" x2="{0}" y2="{CANVAS}.000000"/>"#, f.x(&zero));
    }
    if spec.beta_min <= zero && zero <= spec.beta_max {
        let _ = writeln!(out, r#"    <line x1="0.000000" y1="{0}" x2="{CANVAS}.000000" y2="{0}"/>"#, f.y(&zero));
    }
    let _ = writeln!(out, "  </g>");

    let _ = writeln!(out, r##"  <g id="mixed-sign" fill="#9ecae1" fill-opacity="0.5" stroke="none">"##);
    if let Some([a0, a1, b0, b1]) = &layers.mixed_sign {
        let _ = writeln!(
            out,
            r#"    <rect x="{}" y="{}" width="{}" height="{}"/>"#,
            f.x(a0),
            f.y(b1),
            Frame::coord(&((a1 - a0) / (&spec.alpha_max - &spec.alpha_min) * rat(CANVAS))),
            Frame::coord(&((b1 - b0) / (&spec.beta_max - &spec.beta_min) * rat(CANVAS)))
        );
    }
    let _ = writeln!(out, "  </g>");

    let _ = writeln!(out, r##"  <g id="positive-families" fill="none" stroke="#08519c" stroke-width="1">"##);
    for c in &layers.positive {
        f.polyline(&mut out, "positive", c);
    }
    let _ = writeln!(out, "  </g>");

    let _ = writeln!(out, r##"  <g id="negative-hyperbolas" fill="none" stroke="#a50f15" stroke-width="1">"##);
    for c in &layers.negative {
        f.polyline(&mut out, "negative", c);
    }
    let _ = writeln!(out, "  </g>");

    let _ = writeln!(out, r##"  <g id="vertical-segments" stroke="#54278f" stroke-width="1.5">"##);
    for s in &layers.vertical {
        let x = f.x(&s.alpha);
        let _ = writeln!(
            out,
            r#"    <line data-p="{}" data-q="{}" data-alpha="{}" data-beta-min="{}" data-beta-max="{}" x1="{x}" y1="{}" x2="{x}" y2="{}"/>"#,
            s.p,
            s.q,
            s.alpha,
            s.beta_lo,
            s.beta_hi,
            f.y(&s.beta_lo),
            f.y(&s.beta_hi),
        );
    }
    let _ = writeln!(out, "  </g>");

    let _ = writeln!(out, r##"  <g id="sporadic-points" fill="#d94801" stroke="none">"##);
    for (pt, w) in &layers.sporadic {
        let _ = writeln!(
            out,
            r#"    <circle data-alpha="{}" data-beta="{}" data-witness="{}" cx="{}" cy="{}" r="3"/>"#,
            pt.alpha,
            pt.beta,
            w.params(),
            f.x(&pt.alpha),
            f.y(&pt.beta)
        );
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, "</svg>");
    out
}

pub fn plot_svg(spec: &PlotSpec) -> String {
    render_svg(spec, &plot_layers(spec))
}
