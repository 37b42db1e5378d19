//! Grid sweeps comparing the classifier with the oracle.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::classify::find_witness;
use crate::error::{domain, Error, Result};
use crate::exact::{rational_grid, serde_int, Rat};
use crate::exec::Execution;
use crate::floorfn::{oracle_verify, DilationPair};

/// Sign filter on `(α, β)`. Only `All` includes the axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quadrant {
    All,
    PosPos,
    PosNeg,
    NegPos,
    NegNeg,
}

impl Quadrant {
    pub fn admits(self, pair: &DilationPair) -> bool {
        let (a, b) = (&pair.alpha, &pair.beta);
        match self {
            Quadrant::All => true,
            Quadrant::PosPos => a.is_positive() && b.is_positive(),
            Quadrant::PosNeg => a.is_positive() && b.is_negative(),
            Quadrant::NegPos => a.is_negative() && b.is_positive(),
            Quadrant::NegNeg => a.is_negative() && b.is_negative(),
        }
    }
}

impl FromStr for Quadrant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Quadrant> {
        match s.replace('−', "-").as_str() {
            "all" => Ok(Quadrant::All),
            "++" => Ok(Quadrant::PosPos),
            "+-" => Ok(Quadrant::PosNeg),
            "-+" => Ok(Quadrant::NegPos),
            "--" => Ok(Quadrant::NegNeg),
            _ => domain(format!("unknown quadrant {s:?}; expected all, ++, +-, -+ or --")),
        }
    }
}

impl fmt::Display for Quadrant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quadrant::All => "all",
            Quadrant::PosPos => "++",
            Quadrant::PosNeg => "+-",
            Quadrant::NegPos => "-+",
            Quadrant::NegNeg => "--",
        })
    }
}

/// Grid of values `p/q` with `|p| ≤ max_num`, `1 ≤ q ≤ max_den`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSpec {
    pub max_num: u64,
    pub max_den: u64,
    pub quadrant: Quadrant,
}

impl SweepSpec {
    pub fn new(max_num: u64, max_den: u64, quadrant: Quadrant) -> Result<SweepSpec> {
        if max_num == 0 || max_den == 0 {
            return domain("sweep bounds must be at least 1");
        }
        Ok(SweepSpec { max_num, max_den, quadrant })
    }

    /// Pairs in lexicographic order by `α`, then `β`.
    pub fn pairs(&self) -> Vec<DilationPair> {
        let values = rational_grid(self.max_num, self.max_den, self.quadrant == Quadrant::All);
        values
            .iter()
            .flat_map(|a| values.iter().map(move |b| DilationPair::new(a.clone(), b.clone())))
            .filter(|p| self.quadrant.admits(p))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub alpha: Rat,
    pub beta: Rat,
    pub member: bool,
    pub witness_kind: String,
    pub witness_params: String,
    #[serde(with = "serde_int")]
    pub oracle_min: BigInt,
    pub agree: bool,
}

pub fn sweep_row(pair: &DilationPair) -> SweepRow {
    let witness = find_witness(pair);
    let report = oracle_verify(pair);
    let member = witness.is_some();
    SweepRow {
        alpha: pair.alpha.clone(),
        beta: pair.beta.clone(),
        member,
        witness_kind: witness.as_ref().map_or("none", |w| w.kind()).to_string(),
        witness_params: witness.as_ref().map(|w| w.params()).unwrap_or_default(),
        agree: member == report.is_member(),
        oracle_min: report.min_value,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SweepSummary {
    pub pairs: u64,
    pub members: u64,
    pub non_members: u64,
    pub disagreements: u64,
}

impl SweepSummary {
    pub fn of(rows: &[SweepRow]) -> SweepSummary {
        let count = |f: fn(&SweepRow) -> bool| rows.iter().filter(|r| f(r)).count() as u64;
        SweepSummary {
            pairs: rows.len() as u64,
            members: count(|r| r.member),
            non_members: count(|r| !r.member),
            disagreements: count(|r| !r.agree),
        }
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pairs={} members={} non_members={} disagreements={}",
            self.pairs, self.members, self.non_members, self.disagreements
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepOutput {
    pub rows: Vec<SweepRow>,
    pub summary: SweepSummary,
}

pub fn run_sweep(spec: &SweepSpec, exec: Execution) -> SweepOutput {
    let rows = exec.map(&spec.pairs(), sweep_row);
    let summary = SweepSummary::of(&rows);
    SweepOutput { rows, summary }
}

/// CSV with header `alpha,beta,member,witness_kind,witness_params,oracle_min,agree`.
pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()
}

pub fn read_csv<R: std::io::Read>(input: R) -> std::result::Result<Vec<SweepRow>, csv::Error> {
    csv::Reader::from_reader(input).deserialize().collect()
}
