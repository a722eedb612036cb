//! Map-reduce over index ranges, parallel when the `parallel` feature is on.
//!
//! Reductions must be associative and commutative up to the tie-breaks the
//! caller encodes in the accumulator (e.g. "max value, then lowest index"),
//! which is what makes parallel and sequential runs agree bit for bit.

use std::ops::Range;

/// How a map-reduce is executed.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Exec {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

impl Exec {
    pub fn map_reduce<T, M, R>(self, range: Range<u64>, identity: T, map: M, reduce: R) -> T
    where
        T: Send + Sync + Clone,
        M: Fn(u64) -> T + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        match self {
            Exec::Sequential => range.map(map).fold(identity, &reduce),
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                range.into_par_iter().map(map).reduce(|| identity.clone(), &reduce)
            }
        }
    }

    /// Ordered map; output position `i` holds `map(range.start + i)`.
    pub fn map_collect<T, M>(self, range: Range<u64>, map: M) -> Vec<T>
    where
        T: Send,
        M: Fn(u64) -> T + Sync + Send,
    {
        match self {
            Exec::Sequential => range.map(map).collect(),
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                range.into_par_iter().map(map).collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequential_and_default_agree() {
        let f = |i: u64| (i * 7919) % 1013;
        let seq = Exec::Sequential.map_reduce(0..10_000, 0, f, u64::max);
        let def = Exec::default().map_reduce(0..10_000, 0, f, u64::max);
        assert_eq!(seq, def);
        let a = Exec::Sequential.map_collect(0..100, f);
        let b = Exec::default().map_collect(0..100, f);
        assert_eq!(a, b);
    }
}
