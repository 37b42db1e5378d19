//! The preorder `α ⪯ β ⟺ [f_α, f_β] ≥ 0` on nonzero rationals.

use std::cmp::Ordering;

use serde::Serialize;

use crate::classify::is_member;
use crate::error::{domain, Result};
use crate::exact::Rat;
use crate::exec::Execution;
use crate::floorfn::DilationPair;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PreorderQuery {
    pub alpha: Rat,
    pub beta: Rat,
}

impl PreorderQuery {
    pub fn new(alpha: Rat, beta: Rat) -> Result<PreorderQuery> {
        if alpha.is_zero() || beta.is_zero() {
            return domain("the preorder is defined on nonzero values only");
        }
        Ok(PreorderQuery { alpha, beta })
    }

    pub fn holds(&self) -> bool {
        is_member(&DilationPair::new(self.alpha.clone(), self.beta.clone()))
    }
}

pub fn precedes(alpha: &Rat, beta: &Rat) -> Result<bool> {
    Ok(PreorderQuery::new(alpha.clone(), beta.clone())?.holds())
}

pub fn equivalent(alpha: &Rat, beta: &Rat) -> Result<bool> {
    Ok(precedes(alpha, beta)? && precedes(beta, alpha)?)
}

/// Canonical order for class representatives: smallest denominator, then
/// smallest numerator.
pub fn canonical_cmp(a: &Rat, b: &Rat) -> Ordering {
    a.denom().cmp(b.denom()).then_with(|| a.numer().cmp(b.numer()))
}

/// All pairwise verdicts `values[i] ⪯ values[j]` over a grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PreorderMatrix {
    pub values: Vec<Rat>,
    relation: Vec<bool>,
}

impl PreorderMatrix {
    pub fn new(values: &[Rat], exec: Execution) -> Result<PreorderMatrix> {
        if values.iter().any(Rat::is_zero) {
            return domain("the preorder is defined on nonzero values only");
        }
        let n = values.len();
        let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
        let relation = exec.map(&cells, |&(i, j)| {
            is_member(&DilationPair::new(values[i].clone(), values[j].clone()))
        });
        Ok(PreorderMatrix { values: values.to_vec(), relation })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.relation[i * self.len() + j]
    }

    pub fn rows(&self) -> Vec<Vec<bool>> {
        self.relation.chunks(self.len().max(1)).map(<[bool]>::to_vec).collect()
    }

    /// Lexicographically least index triple `(i, j, k)` with `i ⪯ j`, `j ⪯ k`
    /// and not `i ⪯ k`.
    pub fn transitivity_violation(&self, exec: Execution) -> Option<(usize, usize, usize)> {
        let n = self.len();
        let firsts: Vec<usize> = (0..n).collect();
        let in_row = |i: usize| -> Option<(usize, usize)> {
            (0..n)
                .filter(|&j| self.get(i, j))
                .find_map(|j| (0..n).find(|&k| self.get(j, k) && !self.get(i, k)).map(|k| (j, k)))
        };
        let i = exec.position_first(&firsts, |&i| in_row(i).is_some())?;
        let (j, k) = in_row(i).expect("found above");
        Some((i, j, k))
    }

    /// Equivalence classes, each sorted canonically with its representative
    /// first; classes are ordered by representative.
    pub fn equivalence_classes(&self) -> Vec<Vec<Rat>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut class = Vec::new();
            for (j, flag) in seen.iter_mut().enumerate().skip(i) {
                if !*flag && self.get(i, j) && self.get(j, i) {
                    *flag = true;
                    class.push(self.values[j].clone());
                }
            }
            class.sort_by(canonical_cmp);
            classes.push(class);
        }
        classes.sort_by(|a, b| canonical_cmp(&a[0], &b[0]));
        classes
    }
}

/// A triple `(α, β, γ)` with `α ⪯ β ⪯ γ` but not `α ⪯ γ`, if the grid has one.
pub fn audit_transitivity(grid: &[Rat], exec: Execution) -> Result<Option<(Rat, Rat, Rat)>> {
    let m = PreorderMatrix::new(grid, exec)?;
    Ok(m.transitivity_violation(exec)
        .map(|(i, j, k)| (grid[i].clone(), grid[j].clone(), grid[k].clone())))
}
