//! Stable bottom-up merge sort over a permutation of compact indices.

use std::cmp::Ordering;
use std::mem;

/// Sorts `order` with a stable iterative merge sort, ping-ponging between
/// `order` and one scratch buffer. Returns whether the permutation changed;
/// an initial linear scan detects already-sorted input and skips the sort.
pub(crate) fn stable_sort_by<F>(order: &mut Vec<u32>, scratch: &mut Vec<u32>, mut cmp: F) -> bool
where
    F: FnMut(u32, u32) -> Ordering,
{
    let n = order.len();
    let sorted = (1..n).all(|i| cmp(order[i - 1], order[i]) != Ordering::Greater);
    if sorted {
        return false;
    }
    scratch.resize(n, 0);
    let mut width = 1;
    while width < n {
        merge_pass(order, scratch, width, &mut cmp);
        mem::swap(order, scratch);
        width *= 2;
    }
    true
}

fn merge_pass<F>(src: &[u32], dst: &mut [u32], width: usize, cmp: &mut F)
where
    F: FnMut(u32, u32) -> Ordering,
{
    let n = src.len();
    let mut start = 0;
    while start < n {
        let mid = (start + width).min(n);
        let end = (start + 2 * width).min(n);
        let (mut i, mut j) = (start, mid);
        for slot in &mut dst[start..end] {
            // Equal keys take from the left run, which keeps the sort stable.
            if i < mid && (j >= end || cmp(src[i], src[j]) != Ordering::Greater) {
                *slot = src[i];
                i += 1;
            } else {
                *slot = src[j];
                j += 1;
            }
        }
        start = end;
    }
}
