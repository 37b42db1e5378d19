//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use dilated_floor::beatty::{reduced_disjoint, thm27_criterion, BeattyParam};
use dilated_floor::classify::{
    birational, classify, is_member, symmetry_scale_second, symmetry_shrink, to_munu, to_sigmatau, Verdict,
};
use dilated_floor::exact::{rational_grid, Rat};
use dilated_floor::exec::Execution;
use dilated_floor::floorfn::{commutator, integer_rounding_check, oracle_verify, DilationPair};
use dilated_floor::geometry::{lattice_diag_disjoint, torus_subgroup_avoids, CornerRect, LatticeParams};
use dilated_floor::plot::{plot_layers, plot_svg, PlotSpec};
use dilated_floor::preorder::{audit_transitivity, precedes, PreorderMatrix};
use dilated_floor::semigroup::{
    frobenius_number, nonrealizing_set, sg_contains, sylvester_duality_holds, SemigroupPair,
};
use num_bigint::BigInt;
use num_integer::Integer;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn positive(max: u64) -> Vec<Rat> {
    rational_grid(max, max, false).into_iter().filter(Rat::is_positive).collect()
}

fn pairs(xs: &[Rat], ys: &[Rat]) -> Vec<DilationPair> {
    xs.iter().flat_map(|a| ys.iter().map(move |b| DilationPair::new(a.clone(), b.clone()))).collect()
}

fn rat(s: &str) -> Rat {
    s.parse().unwrap()
}

/// Breakpoints of both floors on one period plus the midpoint of every gap.
fn period_samples(pair: &DilationPair) -> Vec<Rat> {
    let t = Rat::from(pair.alpha.denom() * pair.beta.denom());
    let mut pts = vec![Rat::zero(), t.clone()];
    for d in [&pair.alpha, &pair.beta] {
        if let Some(step) = d.recip() {
            let step = step.abs();
            let mut x = step.clone();
            while x < t {
                pts.push(x.clone());
                x = x + &step;
            }
        }
    }
    pts.sort();
    pts.dedup();
    let mids: Vec<Rat> = pts.windows(2).map(|w| &(&w[0] + &w[1]) / &Rat::from(2)).collect();
    pts.extend(mids);
    pts
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let grid = rational_grid(10, 10, true);
    let all = pairs(&grid, &grid);
    let bad: Vec<_> = Execution::default()
        .map(&all, |p| classify(p).member == oracle_verify(p).is_member())
        .into_iter()
        .zip(&all)
        .filter_map(|(ok, p)| (!ok).then_some(p))
        .collect();
    let elapsed = start.elapsed();
    check(bad.is_empty(), || format!("{} disagreements, first {}", bad.len(), bad[0]))?;
    check(elapsed < Duration::from_secs(120), || format!("took {elapsed:.1?}"))?;
    Ok(format!("{} pairs agree in {elapsed:.1?}", all.len()))
}

fn criterion_2() -> Outcome {
    let mut family = Vec::new();
    for m in 1..=10i64 {
        for n in 1..=10i64 {
            family.push(DilationPair::new(Rat::new(1, m).unwrap(), Rat::new(1, n).unwrap()));
        }
    }
    let grid = rational_grid(10, 10, true);
    let step = grid.len() / 40;
    for a in grid.iter().step_by(step).take(40) {
        family.push(DilationPair::new(a.clone(), a.clone()));
    }
    for a in &grid {
        family.push(DilationPair::new(a.clone(), Rat::zero()));
        family.push(DilationPair::new(Rat::zero(), a.clone()));
    }
    for pair in &family {
        let report = oracle_verify(pair);
        check(report.min_value == BigInt::from(0), || format!("{pair}: oracle min {}", report.min_value))?;
        for x in period_samples(pair) {
            let c = commutator(pair, &x);
            check(c == BigInt::from(0), || format!("{pair}: commutator {c} at {x}"))?;
        }
    }
    Ok(format!("{} commuting pairs vanish on a full period", family.len()))
}

fn criterion_3() -> Outcome {
    let grid = positive(12);
    let all = pairs(&grid, &grid);
    let errors: Vec<String> = Execution::default()
        .map(&all, |pair| {
            let member = oracle_verify(pair).is_member();
            let (a, b) = (&pair.alpha, &pair.beta);
            let munu = to_munu(pair).unwrap();
            let (mu, nu) = (BeattyParam::new(munu.mu.clone()).unwrap(), BeattyParam::new(munu.nu.clone()).unwrap());
            let p2 = lattice_diag_disjoint(&LatticeParams::new(munu.mu, munu.nu).unwrap()).disjoint;
            let p3 = reduced_disjoint(&mu, &nu);
            // Q2 read with (σ, τ) = (α, β); Q1 is membership of (σ, σ/τ).
            let q1 = is_member(&DilationPair::new(a.clone(), a / b));
            let q2 = torus_subgroup_avoids(&CornerRect::new(a.clone(), b.clone()).unwrap()).avoids;
            let st = to_sigmatau(pair).unwrap();
            let q2_of_pair = torus_subgroup_avoids(&CornerRect::new(st.sigma, st.tau).unwrap()).avoids;
            let checks = [
                ("R2", integer_rounding_check(a, b).unwrap().holds == member),
                ("P1", classify(pair).member == member),
                ("P2", p2 == member),
                ("P3", p3 == member),
                ("Q1⟺Q2", q1 == q2),
                ("Q2 via (σ,τ)", q2_of_pair == member),
            ];
            checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| format!("{n} at {pair}")).collect::<Vec<_>>()
        })
        .into_iter()
        .flatten()
        .collect();
    check(errors.is_empty(), || format!("{} mismatches, first {}", errors.len(), errors[0]))?;
    Ok(format!("R2, P1-P3, Q1-Q2 agree on {} positive pairs", all.len()))
}

fn criterion_4() -> Outcome {
    let grid: Vec<BeattyParam> = positive(12).into_iter().map(|u| BeattyParam::new(u).unwrap()).collect();
    let mut n = 0;
    for u in &grid {
        for v in &grid {
            let crit = thm27_criterion(u, v).is_some();
            let disj = reduced_disjoint(u, v);
            check(crit == disj, || format!("u={} v={}: criterion {crit}, disjoint {disj}", u.value(), v.value()))?;
            n += 1;
        }
    }
    let b = |s: &str| BeattyParam::new(rat(s)).unwrap();
    check(reduced_disjoint(&b("5/2"), &b("5/3")), || "reduced_disjoint(5/2, 5/3) is false".into())?;
    check(!reduced_disjoint(&b("5/2"), &b("7/3")), || "reduced_disjoint(5/2, 7/3) is true".into())?;
    Ok(format!("criterion matches disjointness on {n} pairs; spot values hold"))
}

fn criterion_5() -> Outcome {
    let sg = |a, b| SemigroupPair::new(a, b).unwrap();
    check(frobenius_number(sg(3, 5)) == Ok(7), || "frobenius_number(3,5) != 7".into())?;
    let nr = nonrealizing_set(sg(3, 5)).map_err(|e| e.to_string())?;
    check(nr == [1, 2, 4, 7], || format!("nonrealizing_set(3,5) = {nr:?}"))?;
    for a in 2..=12u64 {
        for b in 2..=12u64 {
            if a.gcd(&b) != 1 {
                continue;
            }
            check(sylvester_duality_holds(sg(a, b)) == Ok(true), || format!("duality fails for ({a},{b})"))?;
            let genus = nonrealizing_set(sg(a, b)).unwrap().len() as u64;
            check(genus == (a - 1) * (b - 1) / 2, || format!("|NR({a},{b})| = {genus}"))?;
        }
    }
    let mut bridged = 0;
    for s in 1..=7u64 {
        for t in 1..=7u64 {
            if s.gcd(&t) != 1 {
                continue;
            }
            for b in 1..=30u64 {
                let rect = CornerRect::new(Rat::new(s, b).unwrap(), Rat::new(t, b).unwrap()).unwrap();
                let avoids = torus_subgroup_avoids(&rect).avoids;
                let contains = sg_contains(sg(s, t), b as i64).unwrap();
                check(avoids == contains, || format!("(s,t,b)=({s},{t},{b}): avoids {avoids}, b∈S {contains}"))?;
                bridged += 1;
            }
        }
    }
    Ok(format!("Frobenius values, duality and genus hold; bridge holds on {bridged} triples"))
}

fn criterion_6() -> Outcome {
    let grid = positive(8);
    let members: Vec<DilationPair> = pairs(&grid, &grid).into_iter().filter(is_member).collect();
    let errors: Vec<String> = Execution::default()
        .map(&members, |pair| {
            let mut images = vec![birational(pair).unwrap()];
            for k in 1..=5 {
                images.push(symmetry_scale_second(pair, k).unwrap());
                images.push(symmetry_shrink(pair, k).unwrap());
            }
            images
                .into_iter()
                .filter(|img| !oracle_verify(img).is_member())
                .map(|img| format!("{pair} -> {img}"))
                .collect::<Vec<_>>()
        })
        .into_iter()
        .flatten()
        .collect();
    check(errors.is_empty(), || format!("{} images leave the set, first {}", errors.len(), errors[0]))?;
    let p = |a: &str, b: &str| DilationPair::new(rat(a), rat(b));
    check(oracle_verify(&p("1/3", "1/2")).is_member(), || "(1/3, 1/2) is not a member".into())?;
    check(!oracle_verify(&p("2/3", "1/2")).is_member(), || "(2/3, 1/2) is a member".into())?;
    Ok(format!("all images of {} member pairs stay members; discrepancy witness holds", members.len()))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let grid = rational_grid(6, 6, false);
    let exec = Execution::default();
    let violation = audit_transitivity(&grid, exec).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    check(violation.is_none(), || format!("transitivity fails at {violation:?}"))?;
    check(elapsed < Duration::from_secs(60), || format!("audit took {elapsed:.1?}"))?;
    for a in 1..=12i64 {
        for b in 1..=12i64 {
            let got = precedes(&Rat::from(a), &Rat::from(b)).unwrap();
            check(got == (b % a == 0), || format!("precedes({a},{b}) = {got}"))?;
        }
    }
    let matrix = PreorderMatrix::new(&grid, exec).map_err(|e| e.to_string())?;
    for i in 0..grid.len() {
        for j in 0..grid.len() {
            if i != j && grid[i].is_negative() && grid[j].is_negative() {
                check(!(matrix.get(i, j) && matrix.get(j, i)), || {
                    format!("{} and {} are equivalent", grid[i], grid[j])
                })?;
            }
        }
    }
    let nontrivial: Vec<_> = matrix.equivalence_classes().into_iter().filter(|c| c.len() > 1).collect();
    check(nontrivial.iter().flatten().all(Rat::is_positive), || "nonpositive equivalence class".into())?;
    Ok(format!(
        "{} values, {} triples audited in {elapsed:.1?}; divisibility and antisymmetry hold; {} nontrivial classes",
        grid.len(),
        grid.len().pow(3),
        nontrivial.len()
    ))
}

fn criterion_8() -> Outcome {
    let avoids = |s: &str, t: &str| torus_subgroup_avoids(&CornerRect::new(rat(s), rat(t)).unwrap()).avoids;
    let k1 = avoids("2/9", "1/6");
    let k2 = avoids("4/9", "1/3");
    check(k1, || "torus_subgroup_avoids(2/9, 1/6) = false, expected true".into())?;
    check(!k2, || "torus_subgroup_avoids(4/9, 1/3) = true, expected false".into())?;
    Ok("figure values match".into())
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dilated-floor"))
}

fn criterion_9() -> Outcome {
    let code = |args: &[&str]| bin().args(args).output().unwrap().status.code();
    check(code(&["classify", "1/3", "1/2"]) == Some(0), || "member exit code".into())?;
    check(code(&["classify", "1", "-1"]) == Some(1), || "non-member exit code".into())?;
    check(code(&["classify", "1/0", "1"]) == Some(2), || "error exit code".into())?;

    for (a, b) in [("1/3", "1/2"), ("-3/2", "-3/4"), ("1", "-1"), ("0", "5/7")] {
        let out = bin().args(["classify", a, b, "--no-oracle"]).output().unwrap();
        let verdict: Verdict = serde_json::from_slice(&out.stdout).map_err(|e| format!("{a} {b}: {e}"))?;
        let pair = DilationPair::new(rat(a), rat(b));
        check(verdict.pair == pair && verdict.member == classify(&pair).member, || format!("round trip of {pair}"))?;
        check(verdict.witness == classify(&pair).witness, || format!("witness round trip of {pair}"))?;
    }

    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/plot_m2_d2_r2.svg");
    let expected = std::fs::read_to_string(&golden).map_err(|e| e.to_string())?;
    let args = ["plot", "-M", "2", "-D", "2", "-R", "2"];
    let view = ["--alpha-min", "-2", "--alpha-max", "2", "--beta-min", "-2", "--beta-max", "2"];
    for _ in 0..2 {
        let out = bin().args(args).args(view).output().unwrap();
        check(out.status.success() && out.stdout == expected.as_bytes(), || "SVG differs from golden".into())?;
    }
    let spec = PlotSpec::new([rat("-2"), rat("2"), rat("-2"), rat("2")], 2, 2, 2).unwrap();
    check(plot_svg(&spec) == expected, || "library SVG differs from golden".into())?;
    let layers = plot_layers(&spec);
    for (point, _) in &layers.sporadic {
        check(classify(point).member, || format!("sporadic point {point} is not a member"))?;
    }
    Ok(format!("exit codes, JSON round trip, golden SVG; {} sporadic points re-classify", layers.sporadic.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("classifier agrees with oracle", criterion_1),
        ("commuting families", criterion_2),
        ("criterion equivalences", criterion_3),
        ("Beatty disjointness", criterion_4),
        ("Frobenius and duality", criterion_5),
        ("symmetries", criterion_6),
        ("preorder", criterion_7),
        ("torus figure values", criterion_8),
        ("CLI contract", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
