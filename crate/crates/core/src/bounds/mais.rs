//! Maximum acyclic induced subgraph, exact by subset sweep.

use crate::digraph::{Digraph, VertexSet};

/// Size of the largest vertex subset inducing an acyclic subgraph, plus one
/// witness subset.
///
/// Subsets are scanned largest-first (ties in ascending mask order) so the
/// first acyclic hit wins; with `n <= 16` the sweep is at most 2^16 word-level
/// peel tests.
pub fn mais(g: &Digraph) -> (usize, VertexSet) {
    let n = g.n();
    for k in (1..=n).rev() {
        let mut mask: u32 = (1 << k) - 1;
        let limit: u32 = 1 << n;
        while mask < limit {
            let s = VertexSet(mask as u16);
            if g.is_acyclic_within(s) {
                return (k, s);
            }
            // Gosper's hack: next subset of the same popcount.
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    unreachable!("a single vertex always induces an acyclic subgraph")
}
