//! Execution of independent solver tasks, either data-parallel (rayon, the
//! default `parallel` feature) or strictly sequential.  Results preserve the
//! input order in both modes.

/// How a batch of independent tasks is executed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExecMode {
    /// Use the parallel driver when the crate is built with the `parallel`
    /// feature; otherwise run sequentially.
    Auto,
    /// Always run sequentially, even in a parallel build.
    Sequential,
}

/// Apply `f` to every item, returning outputs in input order.
#[cfg(feature = "parallel")]
pub fn map_collect<T, U, F>(mode: ExecMode, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    match mode {
        ExecMode::Auto => items.into_par_iter().map(f).collect(),
        ExecMode::Sequential => items.into_iter().map(f).collect(),
    }
}

/// Apply `f` to every item, returning outputs in input order.
#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, U, F>(_mode: ExecMode, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved_in_both_modes() {
        let items: Vec<u64> = (0..64).collect();
        let seq = map_collect(ExecMode::Sequential, items.clone(), |x| x * x);
        let auto = map_collect(ExecMode::Auto, items, |x| x * x);
        assert_eq!(seq, auto);
        assert_eq!(seq[10], 100);
    }
}
