//! Tiny execution helpers: data-parallel map/filter over owned work lists,
//! falling back to plain iteration when the `parallel` feature is off.
//!
//! Callers must not depend on result order beyond "same multiset"; every
//! public computation sorts canonically after collecting.

#[cfg(feature = "parallel")]
pub(crate) fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn filter_map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> Option<U> + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().filter_map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn filter_map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> Option<U>,
{
    items.into_iter().filter_map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn flat_map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> Vec<U> + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().flat_map_iter(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn flat_map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> Vec<U>,
{
    items.into_iter().flat_map(f).collect()
}
