//! Stable counting sort over small integer keys.

/// Stably sorts `items` non-increasingly by `key`, where every key lies in
/// `0..=max_key`. Runs in `O(items.len() + max_key)`.
///
/// `counts` is a scratch buffer that is resized and overwritten, so callers
/// sorting many lists can reuse a single allocation.
pub fn counting_sort_desc<T: Copy>(
    items: &[T],
    max_key: usize,
    counts: &mut Vec<usize>,
    key: impl Fn(&T) -> usize,
) -> Vec<T> {
    counts.clear();
    counts.resize(max_key + 2, 0);
    for item in items {
        counts[max_key - key(item) + 1] += 1;
    }
    // counts[d] becomes the first output slot for items whose key is max_key - d
    for d in 1..counts.len() {
        counts[d] += counts[d - 1];
    }
    let Some(&first) = items.first() else {
        return Vec::new();
    };
    let mut out = vec![first; items.len()];
    for item in items {
        let d = max_key - key(item);
        out[counts[d]] = *item;
        counts[d] += 1;
    }
    out
}
