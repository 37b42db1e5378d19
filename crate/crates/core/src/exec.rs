//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (on by default) [`Execution::Parallel`] runs
//! on the rayon pool; without it every mode runs sequentially. Results are
//! always gathered in input order, so output never depends on the schedule.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// `items.iter().map(f).collect()`, order preserved.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    /// Index of the first item (lowest index) satisfying `pred`.
    pub fn position_first<T, F>(self, items: &[T], pred: F) -> Option<usize>
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().position_first(pred),
            _ => items.iter().position(pred),
        }
    }

    /// Least `i` in `0..len` satisfying `pred`.
    pub fn find_first_index<F>(self, len: u64, pred: F) -> Option<u64>
    where
        F: Fn(u64) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..len).into_par_iter().find_first(|&i| pred(i)),
            _ => (0..len).find(|&i| pred(i)),
        }
    }

    /// Least `i` in `0..len` satisfying `pred`, for windows of any size.
    pub fn find_first_big<F>(self, len: &BigInt, pred: F) -> Option<BigInt>
    where
        F: Fn(&BigInt) -> bool + Sync + Send,
    {
        if let Some(n) = len.to_u64() {
            return self.find_first_index(n, |i| pred(&BigInt::from(i))).map(BigInt::from);
        }
        let mut i = BigInt::ZERO;
        while &i < len {
            if pred(&i) {
                return Some(i);
            }
            i += BigInt::one();
        }
        None
    }
}
