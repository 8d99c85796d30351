//! Exact minrank over GF(2).
//!
//! A binary matrix fits a graph when it has 1 on the diagonal and 0 wherever
//! there is no arc; the remaining entries are free. The minimum GF(2) rank
//! over fitting matrices equals the optimal scalar linear binary codelength.
//!
//! Rather than sweeping the 2^|A| free-bit patterns, the search runs over
//! candidate row spaces: the minrank is the smallest `k` such that some
//! `k`-dimensional subspace of GF(2)^n contains, for every vertex `i`, a
//! vector supported inside `{i} | N+(i)` with a 1 at `i`. Subspaces are
//! enumerated once per `n` via reduced row-echelon bases and shared.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Spec contract: the search refuses graphs with more than this many arcs.
pub const MAX_ARCS: usize = 24;

const MAX_MINRANK_N: usize = 8;

/// A binary matrix fitting a graph, wrapped with its rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FittingMatrix {
    pub n: usize,
    /// Row bitmasks, bit `j` of `rows[i]` being entry `(i, j)`.
    pub rows: Vec<u16>,
    pub rank: usize,
}

impl FittingMatrix {
    pub fn fits(&self, g: &Digraph) -> bool {
        self.n == g.n()
            && (0..self.n).all(|i| {
                let allowed = g.out_nbrs(i).0 | (1 << i);
                self.rows[i] & !allowed == 0 && self.rows[i] >> i & 1 == 1
            })
    }

    /// 0/1 entries row-major, for JSON certificates.
    pub fn dense(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| (self.rows[i] >> j & 1) as u8).collect())
            .collect()
    }
}

/// GF(2) rank of a list of row bitmasks.
pub fn rank2(rows: &[u16]) -> usize {
    let mut basis = [0u16; 16];
    let mut rank = 0;
    for &row in rows {
        let mut r = row;
        while r != 0 {
            let p = (15 - r.leading_zeros()) as usize;
            if basis[p] == 0 {
                basis[p] = r;
                rank += 1;
                break;
            }
            r ^= basis[p];
        }
    }
    rank
}

/// All nonzero elements of every subspace of GF(2)^n, grouped by dimension.
/// `SUBSPACES[n][k]` lists the dimension-k subspaces.
fn subspaces(n: usize) -> &'static Vec<Vec<Vec<u16>>> {
    static TABLES: OnceLock<Vec<Vec<Vec<Vec<u16>>>>> = OnceLock::new();
    &TABLES.get_or_init(|| (0..=MAX_MINRANK_N).map(build_subspaces).collect())[n]
}

fn build_subspaces(n: usize) -> Vec<Vec<Vec<u16>>> {
    let mut by_dim: Vec<Vec<Vec<u16>>> = vec![Vec::new(); n + 1];
    for (k, dim_spaces) in by_dim.iter_mut().enumerate().skip(1) {
        for pivots in combinations(n, k) {
            // Reduced row-echelon bases: row r has its pivot at column
            // pivots[r], zeros at the other pivot columns, free bits at
            // non-pivot columns right of the pivot.
            let mut free_positions: Vec<(usize, usize)> = Vec::new();
            for (r, &p) in pivots.iter().enumerate() {
                for c in (p + 1)..n {
                    if !pivots.contains(&c) {
                        free_positions.push((r, c));
                    }
                }
            }
            let f = free_positions.len();
            for bits in 0u32..(1 << f) {
                let mut basis = vec![0u16; k];
                for (r, &p) in pivots.iter().enumerate() {
                    basis[r] |= 1 << p;
                }
                for (idx, &(r, c)) in free_positions.iter().enumerate() {
                    if bits >> idx & 1 == 1 {
                        basis[r] |= 1 << c;
                    }
                }
                // Span, excluding zero.
                let mut elems: Vec<u16> = Vec::with_capacity((1 << k) - 1);
                for combo in 1u32..(1 << k) {
                    let mut v = 0u16;
                    for (r, b) in basis.iter().enumerate() {
                        if combo >> r & 1 == 1 {
                            v ^= b;
                        }
                    }
                    elems.push(v);
                }
                dim_spaces.push(elems);
            }
        }
    }
    by_dim
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Minimum GF(2) rank over all matrices fitting `g`, with one achieving
/// matrix.
pub fn minrank2(g: &Digraph) -> Result<(usize, FittingMatrix)> {
    let arcs = g.arc_count();
    if arcs > MAX_ARCS {
        return Err(Error::ArcBound(arcs, MAX_ARCS));
    }
    let n = g.n();
    if n > MAX_MINRANK_N {
        return Err(Error::OrderOutOfRange(n, 1, MAX_MINRANK_N));
    }
    let allowed: Vec<u16> = (0..n).map(|i| g.out_nbrs(i).0 | (1 << i)).collect();
    let tables = subspaces(n);
    for (k, spaces) in tables.iter().enumerate().skip(1) {
        'next: for space in spaces {
            let mut rows = vec![0u16; n];
            for i in 0..n {
                match space.iter().find(|&&v| v & !allowed[i] == 0 && v >> i & 1 == 1) {
                    Some(&v) => rows[i] = v,
                    None => continue 'next,
                }
            }
            debug_assert_eq!(rank2(&rows), k, "row space dimension is minimal");
            let m = FittingMatrix { n, rows, rank: k };
            debug_assert!(m.fits(g));
            return Ok((k, m));
        }
    }
    unreachable!("the identity matrix always fits")
}
