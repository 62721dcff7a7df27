//! Data-parallel loops with a sequential fallback.
//!
//! Built with the `parallel` feature (the default) these fan out over rayon;
//! without it they run the same closures sequentially. Both paths are
//! deterministic: collection preserves index order and the first-match
//! search returns the same witness the sequential scan would.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// `(0..n).map(f)` collected in index order.
pub fn map_collect<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// First `Some` produced by `f` over `0..n`, in index order.
pub fn find_map_first<U, F>(n: usize, f: F) -> Option<U>
where
    U: Send,
    F: Fn(usize) -> Option<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).find_map(f)
    }
}

/// Concatenation of `f(0), f(1), …, f(n-1)` in index order.
pub fn flat_map_collect<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> Vec<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).reduce(Vec::new, |mut a, mut b| {
            a.append(&mut b);
            a
        })
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).flat_map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_order() {
        let v = map_collect(100, |i| i * i);
        assert_eq!(v[7], 49);
        let flat = flat_map_collect(10, |i| vec![i, i]);
        assert_eq!(flat.len(), 20);
        assert!(flat.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(find_map_first(50, |i| (i >= 13).then_some(i)), Some(13));
    }
}
