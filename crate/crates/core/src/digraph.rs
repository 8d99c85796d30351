//! Directed side-information graphs.
//!
//! A graph on `n <= 16` vertices is stored as per-vertex out- and
//! in-neighbourhood bitmasks, so induced subgraphs, cycle checks and subset
//! sweeps are word-level operations. Vertices are `0..n` internally; the
//! text edge-list format is 1-based.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Hard cap on the vertex count of any [`Digraph`].
pub const MAX_N: usize = 16;

/// Largest order for which canonical forms are computed (n! relabelings).
pub const MAX_CANONICAL_N: usize = 8;

/// A subset of vertices, stored as a bitmask over `0..n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(pub u16);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> VertexSet {
        VertexSet(((1u32 << n) - 1) as u16)
    }

    pub fn single(v: usize) -> VertexSet {
        VertexSet(1 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Ascending iterator over the members.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(vs: I) -> VertexSet {
        let mut m = 0u16;
        for v in vs {
            m |= 1 << v;
        }
        VertexSet(m)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.iter().map(|v| v + 1).join(","))
    }
}

/// A simple directed graph: no self-loops, no parallel arcs.
///
/// An arc `i -> j` means receiver `i` already knows message `j`, so the
/// out-neighbourhood of `i` is its side information.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u16>,
    inn: Vec<u16>,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Digraph(n={}, arcs=[{}])",
            self.n,
            self.arcs().map(|(i, j)| format!("{}->{}", i + 1, j + 1)).join(",")
        )
    }
}

impl Digraph {
    /// An arcless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Digraph> {
        if n == 0 || n > MAX_N {
            return Err(Error::OrderOutOfRange(n, 1, MAX_N));
        }
        Ok(Digraph { n, out: vec![0; n], inn: vec![0; n] })
    }

    /// Builds from 0-based arc pairs, rejecting self-loops and duplicates.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Digraph> {
        let mut g = Digraph::empty(n)?;
        for &(i, j) in arcs {
            g.add_arc(i, j)?;
        }
        Ok(g)
    }

    /// Builds from 1-based arc pairs, the labelling used by the text format.
    pub fn from_arcs_1based(n: usize, arcs: &[(usize, usize)]) -> Result<Digraph> {
        let shifted: Vec<(usize, usize)> = arcs
            .iter()
            .map(|&(i, j)| {
                if i == 0 || j == 0 {
                    Err(Error::Parse("vertices are 1-based".into()))
                } else {
                    Ok((i - 1, j - 1))
                }
            })
            .collect::<Result<_>>()?;
        Digraph::from_arcs(n, &shifted)
    }

    pub fn add_arc(&mut self, i: usize, j: usize) -> Result<()> {
        if i >= self.n {
            return Err(Error::VertexOutOfRange(i, self.n));
        }
        if j >= self.n {
            return Err(Error::VertexOutOfRange(j, self.n));
        }
        if i == j {
            return Err(Error::SelfLoop(i));
        }
        if self.has_arc(i, j) {
            return Err(Error::DuplicateArc(i, j));
        }
        self.out[i] |= 1 << j;
        self.inn[j] |= 1 << i;
        Ok(())
    }

    pub fn remove_arc(&mut self, i: usize, j: usize) {
        self.out[i] &= !(1 << j);
        self.inn[j] &= !(1 << i);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.out[i] >> j & 1 == 1
    }

    /// Out-neighbourhood of `i`: the side information of receiver `i`.
    pub fn out_nbrs(&self, i: usize) -> VertexSet {
        VertexSet(self.out[i])
    }

    pub fn in_nbrs(&self, i: usize) -> VertexSet {
        VertexSet(self.inn[i])
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// Arcs in ascending `(i, j)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| VertexSet(self.out[i]).iter().map(move |j| (i, j)))
    }

    /// All 2-cycles as unordered pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.has_arc(i, j) && self.has_arc(j, i) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// True when `other` has the same vertices and a subset of the arcs.
    pub fn contains_arcs_of(&self, other: &Digraph) -> bool {
        self.n == other.n
            && (0..self.n).all(|i| other.out[i] & !self.out[i] == 0)
    }

    /// The subgraph induced by `s`, relabelled densely, plus the map from
    /// new labels back to the original ones.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Digraph, Vec<usize>)> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if !s.is_subset_of(VertexSet::full(self.n)) {
            return Err(Error::VertexOutOfRange(
                s.iter().find(|&v| v >= self.n).unwrap(),
                self.n,
            ));
        }
        let old_of_new: Vec<usize> = s.iter().collect();
        let mut g = Digraph::empty(old_of_new.len())?;
        for (a, &i) in old_of_new.iter().enumerate() {
            for (b, &j) in old_of_new.iter().enumerate() {
                if a != b && self.has_arc(i, j) {
                    g.add_arc(a, b)?;
                }
            }
        }
        Ok((g, old_of_new))
    }

    /// Relabels through `perm`, where `perm[old] = new`.
    pub fn permute(&self, perm: &[usize]) -> Digraph {
        let mut g = Digraph { n: self.n, out: vec![0; self.n], inn: vec![0; self.n] };
        for (i, j) in self.arcs() {
            g.out[perm[i]] |= 1 << perm[j];
            g.inn[perm[j]] |= 1 << perm[i];
        }
        g
    }

    /// True iff the subgraph induced by `within` has no directed cycle.
    ///
    /// Vertices with no out-arc inside the set are peeled repeatedly; a
    /// non-empty residue is exactly a set of vertices lying on cycles.
    pub fn is_acyclic_within(&self, within: VertexSet) -> bool {
        let mut alive = within.0;
        loop {
            let mut removed = false;
            let mut m = alive;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                if self.out[v] & alive == 0 {
                    alive &= !(1 << v);
                    removed = true;
                }
            }
            if alive == 0 {
                return true;
            }
            if !removed {
                return false;
            }
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.is_acyclic_within(VertexSet::full(self.n))
    }

    /// Some directed cycle inside `within`, as a vertex sequence, if any.
    ///
    /// Deterministic: walks from the smallest vertex of the peeled residue,
    /// always following the smallest usable out-neighbour, and returns the
    /// loop the walk closes.
    pub fn find_cycle_within(&self, within: VertexSet) -> Option<Vec<usize>> {
        // Trim to the sub-DAG residue so every remaining vertex lies on a cycle.
        let mut alive = within.0;
        loop {
            let mut removed = false;
            let mut m = alive;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                if self.out[v] & alive == 0 || self.inn[v] & alive == 0 {
                    alive &= !(1 << v);
                    removed = true;
                }
            }
            if !removed {
                break;
            }
        }
        if alive == 0 {
            return None;
        }
        let start = alive.trailing_zeros() as usize;
        // Walk smallest out-neighbours until a vertex repeats.
        let mut seq = vec![start];
        let mut seen = 1u32 << start;
        let mut cur = start;
        loop {
            let next = (self.out[cur] & alive).trailing_zeros() as usize;
            if seen >> next & 1 == 1 {
                let pos = seq.iter().position(|&v| v == next).unwrap();
                return Some(seq[pos..].to_vec());
            }
            seq.push(next);
            seen |= 1 << next;
            cur = next;
        }
    }

    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        self.find_cycle_within(VertexSet::full(self.n))
    }

    /// A shortest directed cycle containing every vertex of `required`, if
    /// any; ties broken by ascending depth-first order from the smallest
    /// required vertex.
    ///
    /// With an empty `required` this is just [`Digraph::find_cycle`].
    pub fn find_cycle_through(&self, required: VertexSet) -> Option<Vec<usize>> {
        if required.is_empty() {
            return self.find_cycle();
        }
        let start = required.iter().next().unwrap();
        let rest = required.minus(VertexSet::single(start));
        for budget in required.len().max(2)..=self.n {
            let mut path = vec![start];
            let mut used = VertexSet::single(start);
            if let Some(c) = self.cycle_dfs(start, start, rest, budget, &mut path, &mut used) {
                return Some(c);
            }
        }
        None
    }

    fn cycle_dfs(
        &self,
        start: usize,
        cur: usize,
        missing: VertexSet,
        budget: usize,
        path: &mut Vec<usize>,
        used: &mut VertexSet,
    ) -> Option<Vec<usize>> {
        for next in self.out_nbrs(cur).iter() {
            if next == start && missing.is_empty() && path.len() >= 2 {
                return Some(path.clone());
            }
            if used.contains(next) {
                continue;
            }
            let missing_after = missing.minus(VertexSet::single(next));
            if path.len() + 1 + missing_after.len() > budget {
                continue;
            }
            path.push(next);
            used.insert(next);
            let res = self.cycle_dfs(start, next, missing_after, budget, path, used);
            path.pop();
            used.remove(next);
            if res.is_some() {
                return res;
            }
        }
        None
    }

    /// Vertices lying on at least one directed cycle: `v` qualifies iff `v`
    /// is reachable from one of its own out-neighbours.
    pub fn vertices_on_cycles(&self) -> VertexSet {
        let mut result = VertexSet::EMPTY;
        for v in 0..self.n {
            let mut reach = self.out[v];
            loop {
                let mut next = reach;
                let mut m = reach;
                while m != 0 {
                    let u = m.trailing_zeros() as usize;
                    m &= m - 1;
                    next |= self.out[u];
                }
                if next == reach {
                    break;
                }
                reach = next;
            }
            if reach >> v & 1 == 1 {
                result.insert(v);
            }
        }
        result
    }

    /// True iff the sequence is a directed cycle of this graph (length >= 2,
    /// distinct vertices).
    pub fn is_cycle(&self, seq: &[usize]) -> bool {
        if seq.len() < 2 || seq.iter().any(|&v| v >= self.n) {
            return false;
        }
        if VertexSet::from_iter(seq.iter().copied()).len() != seq.len() {
            return false;
        }
        (0..seq.len()).all(|k| self.has_arc(seq[k], seq[(k + 1) % seq.len()]))
    }

    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        CanonicalForm::of(self)
    }
}

/// Canonical labelling of a digraph.
///
/// The encoding is the lexicographically smallest adjacency-matrix bit
/// string over all `n!` relabelings, packed most-significant-bit first so
/// integer order equals string order. Two digraphs are isomorphic iff their
/// canonical forms are equal; equality compares the encoding, not the
/// achieving permutation.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: u64,
    /// A relabelling achieving the encoding: `perm[old] = new`.
    pub perm: Vec<usize>,
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        (self.n, self.bits) == (other.n, other.bits)
    }
}

impl Eq for CanonicalForm {}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.bits).cmp(&(other.n, other.bits))
    }
}

impl std::hash::Hash for CanonicalForm {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        (self.n, self.bits).hash(state);
    }
}

impl CanonicalForm {
    fn of(g: &Digraph) -> Result<CanonicalForm> {
        let n = g.n();
        if n > MAX_CANONICAL_N {
            return Err(Error::OrderOutOfRange(n, 1, MAX_CANONICAL_N));
        }
        let mut best_bits = u64::MAX;
        let mut best_perm: Vec<usize> = (0..n).collect();
        let mut inverse = vec![0usize; n];
        for perm in (0..n).permutations(n) {
            // perm[new] = old here; invert below when storing.
            let mut bits = 0u64;
            for (new_i, &old_i) in perm.iter().enumerate() {
                for (new_j, &old_j) in perm.iter().enumerate() {
                    if new_i != new_j && g.has_arc(old_i, old_j) {
                        bits |= 1 << (n * n - 1 - (new_i * n + new_j));
                    }
                }
            }
            if bits < best_bits {
                best_bits = bits;
                for (new, &old) in perm.iter().enumerate() {
                    inverse[old] = new;
                }
                best_perm.copy_from_slice(&inverse);
            }
        }
        Ok(CanonicalForm { n, bits: best_bits, perm: best_perm })
    }

    /// Rebuilds the canonical representative graph from the encoding.
    pub fn graph(&self) -> Digraph {
        let n = self.n;
        let mut g = Digraph::empty(n).expect("order validated at construction");
        for i in 0..n {
            for j in 0..n {
                if i != j && self.bits >> (n * n - 1 - (i * n + j)) & 1 == 1 {
                    g.add_arc(i, j).unwrap();
                }
            }
        }
        g
    }

    /// Stable textual id, e.g. `n5-0009a1b2`.
    pub fn id(&self) -> String {
        format!("n{}-{:0width$x}", self.n, self.bits, width = (self.n * self.n).div_ceil(4))
    }
}

/// Composes canonical permutations into an isomorphism `g -> h`, if the two
/// graphs are isomorphic. The result maps vertices of `g` onto vertices of `h`.
pub fn isomorphism(g: &Digraph, h: &Digraph) -> Result<Option<Vec<usize>>> {
    if g.n() != h.n() {
        return Ok(None);
    }
    let cg = g.canonical_form()?;
    let ch = h.canonical_form()?;
    if cg.bits != ch.bits {
        return Ok(None);
    }
    // cg.perm : g -> canon, ch.perm : h -> canon, so ch.perm^{-1} . cg.perm : g -> h.
    let mut inv = vec![0usize; h.n()];
    for (old, &new) in ch.perm.iter().enumerate() {
        inv[new] = old;
    }
    let map: Vec<usize> = cg.perm.iter().map(|&c| inv[c]).collect();
    debug_assert!(g.arcs().all(|(i, j)| h.has_arc(map[i], map[j])));
    debug_assert_eq!(g.arc_count(), h.arc_count());
    Ok(Some(map))
}

/// One representative per isomorphism class of digraphs on `n` vertices,
/// sorted by canonical encoding.
///
/// For `n <= 4` all arc sets are enumerated directly. For `n = 5` each
/// 4-vertex class is extended by one vertex with all 256 in/out patterns and
/// the results are deduplicated; the class counts are cross-checked against
/// the known sequence 1, 3, 16, 218, 9608 by the test suite.
pub fn enumerate_nonisomorphic(n: usize) -> Result<Vec<Digraph>> {
    if n == 0 || n > 5 {
        return Err(Error::OrderOutOfRange(n, 1, 5));
    }
    let mut forms: BTreeSet<u64> = BTreeSet::new();
    if n <= 4 {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let mut g = Digraph::empty(n)?;
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    g.add_arc(i, j)?;
                }
            }
            forms.insert(g.canonical_form()?.bits);
        }
    } else {
        let base = enumerate_nonisomorphic(4)?;
        for g4 in &base {
            for pattern in 0u32..256 {
                let mut g = Digraph::empty(5)?;
                for (i, j) in g4.arcs() {
                    g.add_arc(i, j)?;
                }
                for v in 0..4 {
                    if pattern >> v & 1 == 1 {
                        g.add_arc(4, v)?;
                    }
                    if pattern >> (4 + v) & 1 == 1 {
                        g.add_arc(v, 4)?;
                    }
                }
                forms.insert(g.canonical_form()?.bits);
            }
        }
    }
    Ok(forms
        .into_iter()
        .map(|bits| CanonicalForm { n, bits, perm: (0..n).collect() }.graph())
        .collect())
}

// ---------------------------------------------------------------------------
// Text edge-list format
// ---------------------------------------------------------------------------

/// Parses one or more records of the text edge-list format:
///
/// ```text
/// n=5
/// 1->2,2->1,3->4
///
/// ```
///
/// Line 1 gives the vertex count, line 2 the comma-separated 1-based arcs
/// (may be empty for an arcless graph), and a blank line terminates the
/// record. Self-loops and duplicate arcs are rejected.
pub fn parse_edge_lists(text: &str) -> Result<Vec<Digraph>> {
    let mut graphs = Vec::new();
    let mut lines = text.lines().peekable();
    while let Some(line) = lines.next() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let n: usize = line
            .strip_prefix("n=")
            .ok_or_else(|| Error::Parse(format!("expected `n=<k>`, got `{line}`")))?
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count in `{line}`")))?;
        let arcs_line = lines.next().unwrap_or("").trim();
        let mut g = Digraph::empty(n)?;
        if !arcs_line.is_empty() {
            for tok in arcs_line.split(',') {
                let tok = tok.trim();
                let (a, b) = tok
                    .split_once("->")
                    .ok_or_else(|| Error::Parse(format!("expected `i->j`, got `{tok}`")))?;
                let i: usize = a.trim().parse().map_err(|_| Error::Parse(format!("bad vertex `{a}`")))?;
                let j: usize = b.trim().parse().map_err(|_| Error::Parse(format!("bad vertex `{b}`")))?;
                if i == 0 || j == 0 || i > n || j > n {
                    return Err(Error::Parse(format!("vertex out of range in `{tok}`")));
                }
                g.add_arc(i - 1, j - 1)?;
            }
        }
        graphs.push(g);
        if let Some(next) = lines.peek() {
            if !next.trim().is_empty() {
                return Err(Error::Parse("expected blank line after record".into()));
            }
            lines.next();
        }
    }
    if graphs.is_empty() {
        return Err(Error::Parse("no graph records found".into()));
    }
    Ok(graphs)
}

/// Renders a graph as one record of the text edge-list format.
pub fn format_edge_list(g: &Digraph) -> String {
    let arcs = g.arcs().map(|(i, j)| format!("{}->{}", i + 1, j + 1)).join(",");
    format!("n={}\n{}\n\n", g.n(), arcs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_cycle() -> Digraph {
        Digraph::from_arcs_1based(3, &[(1, 2), (2, 3), (3, 1)]).unwrap()
    }

    #[test]
    fn rejects_self_loops_and_duplicates() {
        let mut g = Digraph::empty(3).unwrap();
        assert_eq!(g.add_arc(1, 1), Err(Error::SelfLoop(1)));
        g.add_arc(0, 1).unwrap();
        assert_eq!(g.add_arc(0, 1), Err(Error::DuplicateArc(0, 1)));
    }

    #[test]
    fn induced_subgraph_of_three_cycle() {
        let g = three_cycle();
        let (h, map) = g.induced_subgraph(VertexSet::from_iter([0, 1])).unwrap();
        assert_eq!(map, vec![0, 1]);
        assert_eq!(h.arcs().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn induced_subgraph_full_set_is_identity() {
        let g = three_cycle();
        let (h, _) = g.induced_subgraph(VertexSet::full(3)).unwrap();
        assert_eq!(h, g);
    }

    #[test]
    fn induced_subgraph_rejects_empty_set() {
        let g = three_cycle();
        assert_eq!(g.induced_subgraph(VertexSet::EMPTY).unwrap_err(), Error::EmptyVertexSet);
    }

    #[test]
    fn induced_subgraph_of_generator_a_front_triple() {
        // In the generator graph the triple {1,2,3} keeps the edge 1<->2
        // plus the arcs 2->3 and 3->1.
        let g = crate::atlas::generator_a();
        let (h, map) = g.induced_subgraph(VertexSet::from_iter([0, 1, 2])).unwrap();
        assert_eq!(map, vec![0, 1, 2]);
        let mut arcs: Vec<_> = h.arcs().collect();
        arcs.sort();
        assert_eq!(arcs, vec![(0, 1), (1, 0), (1, 2), (2, 0)]);
    }

    #[test]
    fn acyclicity() {
        assert!(Digraph::empty(5).unwrap().is_acyclic());
        let edge = Digraph::from_arcs_1based(2, &[(1, 2), (2, 1)]).unwrap();
        assert!(!edge.is_acyclic());
        assert!(!crate::atlas::g0_2b().is_acyclic());
    }

    #[test]
    fn acyclic_agrees_with_topological_order_oracle_n4() {
        // Against a permutation oracle: acyclic iff some vertex order has all
        // arcs pointing forward.
        for g in enumerate_nonisomorphic(4).unwrap() {
            let topo = (0..4).permutations(4).any(|ord| {
                let mut pos = [0usize; 4];
                for (k, &v) in ord.iter().enumerate() {
                    pos[v] = k;
                }
                g.arcs().all(|(i, j)| pos[i] < pos[j])
            });
            assert_eq!(g.is_acyclic(), topo, "{g:?}");
        }
    }

    #[test]
    fn edges_examples() {
        let complete3 = Digraph::from_arcs_1based(
            3,
            &[(1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)],
        )
        .unwrap();
        assert_eq!(complete3.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert!(three_cycle().edges().is_empty());
        // The second generator graph: exactly the five circumference edges.
        let gb = crate::atlas::generator_b();
        assert_eq!(gb.edges(), vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn cycle_through_examples() {
        let g = three_cycle();
        let c = g.find_cycle_through(VertexSet::single(0)).unwrap();
        assert_eq!(c, vec![0, 1, 2]);

        let dag = Digraph::from_arcs_1based(3, &[(1, 2), (2, 3)]).unwrap();
        assert!(dag.find_cycle_through(VertexSet::EMPTY).is_none());

        // 5 -> 1 -> 3 -> 5 in 1-based labels.
        let c = crate::atlas::g0_2b().find_cycle_through(VertexSet::single(4)).unwrap();
        assert!(crate::atlas::g0_2b().is_cycle(&c));
        assert!(c.contains(&4));
        assert_eq!(VertexSet::from_iter(c.iter().copied()), VertexSet::from_iter([4, 0, 2]));
    }

    #[test]
    fn canonical_form_trivial_and_swap() {
        let single = Digraph::empty(1).unwrap();
        assert_eq!(single.canonical_form().unwrap().bits, 0);

        let a = Digraph::from_arcs_1based(2, &[(1, 2)]).unwrap();
        let b = Digraph::from_arcs_1based(2, &[(2, 1)]).unwrap();
        assert_eq!(a.canonical_form().unwrap(), b.canonical_form().unwrap());
    }

    #[test]
    fn canonical_form_invariant_under_permutation_n_le_4() {
        for n in 1..=4usize {
            for g in enumerate_nonisomorphic(n).unwrap() {
                let base = g.canonical_form().unwrap().bits;
                for perm in (0..n).permutations(n) {
                    assert_eq!(g.permute(&perm).canonical_form().unwrap().bits, base);
                }
            }
        }
    }

    #[test]
    fn canonical_perm_maps_onto_representative() {
        let g = crate::atlas::g0_3c();
        let cf = g.canonical_form().unwrap();
        assert_eq!(g.permute(&cf.perm), cf.graph());
    }

    #[test]
    fn isomorphism_map_is_explicit() {
        let g = crate::atlas::g4_4();
        let perm = vec![2, 0, 4, 1, 3];
        let h = g.permute(&perm);
        let map = isomorphism(&g, &h).unwrap().unwrap();
        assert!(g.arcs().all(|(i, j)| h.has_arc(map[i], map[j])));
    }

    #[test]
    fn enumeration_counts_small() {
        assert_eq!(enumerate_nonisomorphic(1).unwrap().len(), 1);
        assert_eq!(enumerate_nonisomorphic(2).unwrap().len(), 3);
        assert_eq!(enumerate_nonisomorphic(3).unwrap().len(), 16);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = crate::atlas::g0_4e();
        let text = format_edge_list(&g);
        let parsed = parse_edge_lists(&text).unwrap();
        assert_eq!(parsed.len(), 1);
        assert_eq!(parsed[0], g);
    }

    #[test]
    fn edge_list_rejects_bad_input() {
        assert!(parse_edge_lists("n=3\n1->1\n").is_err());
        assert!(parse_edge_lists("n=3\n1->2,1->2\n").is_err());
        assert!(parse_edge_lists("n=3\n1->4\n").is_err());
        assert!(parse_edge_lists("bogus\n").is_err());
    }

    #[test]
    fn parses_arcless_record() {
        let gs = parse_edge_lists("n=4\n\n").unwrap();
        assert_eq!(gs[0].arc_count(), 0);
        assert_eq!(gs[0].n(), 4);
    }
}
