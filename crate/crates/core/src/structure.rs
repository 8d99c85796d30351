//! Structural searches behind the gap-two code construction: vertex-disjoint
//! cycle pairs, the nine-path tri-cycle configuration, and the
//! centre-cycle/outer-path decomposition.

use serde::Serialize;

use crate::digraph::{Digraph, VertexSet};
use crate::error::{Error, Result};

/// Two vertex-disjoint directed cycles, if the graph has any.
///
/// Exhaustive: sweeps vertex subsets in ascending mask order and returns the
/// first split with a cycle on each side, so absence is a proof.
pub fn find_two_disjoint_cycles(g: &Digraph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    let full = VertexSet::full(n);
    for mask in 1u32..(1 << n) {
        let s = VertexSet(mask as u16);
        let rest = full.minus(s);
        if !g.is_acyclic_within(s) && !g.is_acyclic_within(rest) {
            let c1 = g.find_cycle_within(s).expect("cyclic subset");
            let c2 = g.find_cycle_within(rest).expect("cyclic subset");
            return Some((c1, c2));
        }
    }
    None
}

/// The nine-path configuration: three hubs joined by a rim of six paths with
/// a junction between consecutive hubs, plus one chord from each junction
/// back to the preceding hub.
///
/// `junctions[k]` sits between `hubs[k]` and `hubs[(k+1)%3]`; the outgoing
/// rim path `hubs[k] -> junctions[k]` may be empty (the two coincide), every
/// other path has at least one arc. Paths share vertices only at their
/// endpoints. The path union is an interlinked cycle with the hubs as inner
/// set: every cycle through the system visits two or three hubs, and each
/// ordered hub pair is joined by exactly one hub-avoiding path.
///
/// A hub with a non-empty outgoing rim can only recover the *sum* of the two
/// branch heads at its junction, and the telescoped signs along the two
/// branches agree only when the branches have arc counts of equal parity.
/// The search therefore only accepts structures where, for every hub with a
/// non-empty outgoing rim, the following rim path and chord have lengths of
/// equal parity; this makes the cover code decode over `Z_m` for every `m`,
/// not just over GF(2). Unbalanced structures exist and genuinely fail at
/// `m = 3`.
///
/// Serializes as `{hubs, junctions, paths: {name: [vertex sequence]}}` with
/// 1-based vertices.
#[derive(Clone, Debug)]
pub struct TriCycle {
    pub hubs: [usize; 3],
    pub junctions: [usize; 3],
    /// Full vertex sequences `hubs[k]..junctions[k]`; a single-vertex
    /// sequence encodes the empty path.
    pub rim_out: [Vec<usize>; 3],
    /// Full sequences `junctions[k]..hubs[(k+1)%3]`, each with >= 1 arc.
    pub rim_in: [Vec<usize>; 3],
    /// Full sequences `junctions[k]..hubs[(k+2)%3]`, each with >= 1 arc.
    pub chords: [Vec<usize>; 3],
}

impl Serialize for TriCycle {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let one_based =
            |p: &[usize]| -> Vec<usize> { p.iter().map(|&v| v + 1).collect() };
        let mut map = ser.serialize_map(Some(3))?;
        map.serialize_entry("hubs", &one_based(&self.hubs))?;
        map.serialize_entry("junctions", &one_based(&self.junctions))?;
        let mut paths = std::collections::BTreeMap::new();
        for k in 0..3 {
            paths.insert(format!("rim_out_{k}"), one_based(&self.rim_out[k]));
            paths.insert(format!("rim_in_{k}"), one_based(&self.rim_in[k]));
            paths.insert(format!("chord_{k}"), one_based(&self.chords[k]));
        }
        map.serialize_entry("paths", &paths)?;
        map.end()
    }
}

impl TriCycle {
    pub fn paths(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.rim_out.iter().chain(self.rim_in.iter()).chain(self.chords.iter())
    }

    pub fn vertex_set(&self) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for p in self.paths() {
            for &v in p {
                s.insert(v);
            }
        }
        s
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::new();
        for p in self.paths() {
            for w in p.windows(2) {
                arcs.push((w[0], w[1]));
            }
        }
        arcs
    }

    pub fn total_arcs(&self) -> usize {
        self.paths().map(|p| p.len() - 1).sum()
    }

    /// The union of the nine paths as its own graph, relabelled densely,
    /// with the map from new labels back to the host graph.
    pub fn subgraph(&self) -> (Digraph, Vec<usize>) {
        let new_to_old: Vec<usize> = self.vertex_set().iter().collect();
        let mut old_to_new = [usize::MAX; 16];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut h = Digraph::empty(new_to_old.len()).expect("at least three hubs");
        for (i, j) in self.arcs() {
            h.add_arc(old_to_new[i], old_to_new[j]).expect("paths are arc-disjoint");
        }
        (h, new_to_old)
    }

    /// True when every hub with a non-empty outgoing rim has following
    /// branches of equal arc-count parity, the condition under which the
    /// plain {0,1} cover code decodes over every ring.
    pub fn is_ring_balanced(&self) -> bool {
        (0..3).all(|k| {
            self.rim_out[k].len() == 1 || self.rim_in[k].len() % 2 == self.chords[k].len() % 2
        })
    }

    /// Checks every structural invariant against the host graph.
    pub fn validate(&self, g: &Digraph) -> Result<()> {
        let fail = |msg: String| Err(Error::Precondition(msg));
        if VertexSet::from_iter(self.hubs.iter().copied()).len() != 3 {
            return fail("hubs must be distinct".into());
        }
        for k in 0..3 {
            if self.rim_out[k].first() != Some(&self.hubs[k])
                || self.rim_out[k].last() != Some(&self.junctions[k])
            {
                return fail(format!("outgoing rim path {k} has wrong endpoints"));
            }
            if self.rim_in[k].first() != Some(&self.junctions[k])
                || self.rim_in[k].last() != Some(&self.hubs[(k + 1) % 3])
                || self.rim_in[k].len() < 2
            {
                return fail(format!("incoming rim path {k} has wrong endpoints or is empty"));
            }
            if self.chords[k].first() != Some(&self.junctions[k])
                || self.chords[k].last() != Some(&self.hubs[(k + 2) % 3])
                || self.chords[k].len() < 2
            {
                return fail(format!("chord {k} has wrong endpoints or is empty"));
            }
        }
        for p in self.paths() {
            for w in p.windows(2) {
                if !g.has_arc(w[0], w[1]) {
                    return fail(format!("arc {}->{} missing from host", w[0] + 1, w[1] + 1));
                }
            }
        }
        // Interior disjointness: interiors avoid all hubs and junctions and
        // never repeat across paths.
        let mut interior_seen = VertexSet::EMPTY;
        let endpoints =
            VertexSet::from_iter(self.hubs.iter().chain(self.junctions.iter()).copied());
        for p in self.paths() {
            let interior = if p.len() >= 2 { &p[1..p.len() - 1] } else { &[] };
            for &v in interior {
                if endpoints.contains(v) || interior_seen.contains(v) {
                    return fail(format!("vertex {} appears on two paths", v + 1));
                }
                interior_seen.insert(v);
            }
        }
        Ok(())
    }
}

/// Searches for a ring-balanced tri-cycle configuration (see
/// [`TriCycle::is_ring_balanced`]).
///
/// Hub triples are scanned in ascending lexicographic order of
/// `(hubs[2], hubs[0], hubs[1])`; within one triple, iterative deepening on
/// the total arc count returns a minimum-size structure.
pub fn find_tri_cycle(g: &Digraph) -> Option<TriCycle> {
    find_tri_cycle_impl(g, true)
}

/// Searches without the parity constraint. Guaranteed to succeed when
/// `mais(g) = n - 2` and no two vertex-disjoint cycles exist; the {0,1}
/// cover code of an unbalanced structure may fail beyond GF(2).
pub fn find_tri_cycle_any(g: &Digraph) -> Option<TriCycle> {
    find_tri_cycle_impl(g, false)
}

fn find_tri_cycle_impl(g: &Digraph, balanced: bool) -> Option<TriCycle> {
    let n = g.n();
    for h2 in 0..n {
        for h0 in 0..n {
            if h0 == h2 {
                continue;
            }
            for h1 in 0..n {
                if h1 == h0 || h1 == h2 {
                    continue;
                }
                let hubs = [h0, h1, h2];
                let max_arcs = g.arc_count().min(n + 3);
                for budget in 6..=max_arcs {
                    if let Some(tc) = search_hubs(g, hubs, budget, balanced) {
                        debug_assert!(tc.validate(g).is_ok());
                        debug_assert!(!balanced || tc.is_ring_balanced());
                        return Some(tc);
                    }
                }
            }
        }
    }
    None
}

fn search_hubs(g: &Digraph, hubs: [usize; 3], budget: usize, balanced: bool) -> Option<TriCycle> {
    let n = g.n();
    let hub_set = VertexSet::from_iter(hubs.iter().copied());
    // Junction candidates: the matching hub (empty outgoing rim) or any
    // non-hub vertex; junctions are pairwise distinct.
    let cands: Vec<Vec<usize>> = (0..3)
        .map(|k| {
            let mut c = vec![hubs[k]];
            c.extend((0..n).filter(|v| !hub_set.contains(*v)));
            c
        })
        .collect();
    for &j0 in &cands[0] {
        for &j1 in &cands[1] {
            if j1 == j0 {
                continue;
            }
            for &j2 in &cands[2] {
                if j2 == j0 || j2 == j1 {
                    continue;
                }
                let junctions = [j0, j1, j2];
                let plan = path_plan(hubs, junctions);
                let endpoints =
                    VertexSet::from_iter(hubs.iter().chain(junctions.iter()).copied());
                let mut found: Vec<Vec<usize>> = Vec::with_capacity(9);
                if dfs_paths(g, &plan, 0, budget, endpoints, endpoints, balanced, &mut found) {
                    return Some(TriCycle {
                        hubs,
                        junctions,
                        rim_out: [found[0].clone(), found[3].clone(), found[6].clone()],
                        rim_in: [found[1].clone(), found[4].clone(), found[7].clone()],
                        chords: [found[2].clone(), found[5].clone(), found[8].clone()],
                    });
                }
            }
        }
    }
    None
}

/// The nine path slots in search order: (from, to, may_be_empty).
fn path_plan(hubs: [usize; 3], junctions: [usize; 3]) -> [(usize, usize, bool); 9] {
    let mut plan = [(0, 0, false); 9];
    for k in 0..3 {
        plan[3 * k] = (hubs[k], junctions[k], true);
        plan[3 * k + 1] = (junctions[k], hubs[(k + 1) % 3], false);
        plan[3 * k + 2] = (junctions[k], hubs[(k + 2) % 3], false);
    }
    plan
}

/// Minimum arcs the slots from `idx` onward still need.
fn slots_floor(plan: &[(usize, usize, bool); 9], idx: usize) -> usize {
    plan[idx..].iter().map(|&(f, t, e)| usize::from(!(e && f == t))).sum()
}

/// Fills path slots `idx..9` with internally disjoint simple paths using at
/// most `budget` arcs in total. `used` carries endpoints plus interiors of
/// completed paths by value (`VertexSet` is a word).
#[allow(clippy::too_many_arguments)]
fn dfs_paths(
    g: &Digraph,
    plan: &[(usize, usize, bool); 9],
    idx: usize,
    budget: usize,
    endpoints: VertexSet,
    used: VertexSet,
    balanced: bool,
    found: &mut Vec<Vec<usize>>,
) -> bool {
    // Group k is complete once its chord (slot 3k + 2) is in: enforce the
    // branch-parity balance for hubs with a non-empty outgoing rim.
    if balanced && idx > 0 && idx.is_multiple_of(3) {
        let k = idx / 3 - 1;
        let rim_out_empty = found[3 * k].len() == 1;
        if !rim_out_empty && found[3 * k + 1].len() % 2 != found[3 * k + 2].len() % 2 {
            return false;
        }
    }
    if idx == 9 {
        return true;
    }
    let (from, to, may_be_empty) = plan[idx];
    if may_be_empty && from == to {
        found.push(vec![from]);
        if dfs_paths(g, plan, idx + 1, budget, endpoints, used, balanced, found) {
            return true;
        }
        found.pop();
        return false;
    }
    let floor_rest = slots_floor(plan, idx + 1);
    let mut path = vec![from];
    grow_path(g, plan, idx, to, budget, floor_rest, endpoints, used, balanced, &mut path, found)
}

#[allow(clippy::too_many_arguments)]
fn grow_path(
    g: &Digraph,
    plan: &[(usize, usize, bool); 9],
    idx: usize,
    target: usize,
    budget: usize,
    floor_rest: usize,
    endpoints: VertexSet,
    used: VertexSet,
    balanced: bool,
    path: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) -> bool {
    let arcs_here = path.len() - 1;
    let cur = *path.last().unwrap();
    for next in g.out_nbrs(cur).iter() {
        if next == target {
            if arcs_here + 1 + floor_rest > budget {
                continue;
            }
            path.push(next);
            found.push(path.clone());
            let ok = dfs_paths(
                g,
                plan,
                idx + 1,
                budget - (arcs_here + 1),
                endpoints,
                used,
                balanced,
                found,
            );
            if ok {
                return true;
            }
            found.pop();
            path.pop();
            continue;
        }
        if endpoints.contains(next) || used.contains(next) {
            continue;
        }
        if arcs_here + 2 + floor_rest > budget {
            continue;
        }
        path.push(next);
        let mut used2 = used;
        used2.insert(next);
        if grow_path(
            g, plan, idx, target, budget, floor_rest, endpoints, used2, balanced, path, found,
        ) {
            return true;
        }
        path.pop();
    }
    false
}

// ---------------------------------------------------------------------------
// Centre cycle and outer paths
// ---------------------------------------------------------------------------

/// A path leaving the centre cycle and returning to it, with every arc and
/// interior vertex off the cycle. `origin == terminus` marks a looping path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OuterPath {
    pub origin: usize,
    pub terminus: usize,
    /// Interior vertices in path order (all off the cycle).
    pub interior: Vec<usize>,
    /// Cycle vertices strictly between origin and terminus in arc direction;
    /// empty for looping paths.
    pub coverage: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OuterPathDecomposition {
    pub cycle: Vec<usize>,
    /// Largest-coverage survivors: at most one path per origin and per
    /// terminus.
    pub kept: Vec<OuterPath>,
    pub looping: Vec<OuterPath>,
    pub full_coverage: bool,
}

/// All outer paths relative to `c1`. Exposed for the oracle tests as well as
/// the decomposition itself.
pub fn all_outer_paths(g: &Digraph, c1: &[usize]) -> Result<Vec<OuterPath>> {
    if !g.is_cycle(c1) {
        return Err(Error::Precondition("the centre sequence is not a directed cycle".into()));
    }
    let on_cycle = VertexSet::from_iter(c1.iter().copied());
    let l = c1.len();
    let pos = |v: usize| c1.iter().position(|&x| x == v).unwrap();
    let coverage_of = |b: usize, c: usize| -> Vec<usize> {
        if b == c {
            return Vec::new();
        }
        let mut cov = Vec::new();
        let mut k = (pos(b) + 1) % l;
        while k != pos(c) {
            cov.push(c1[k]);
            k = (k + 1) % l;
        }
        cov
    };
    let mut out = Vec::new();
    for &b in c1 {
        let successor = c1[(pos(b) + 1) % l];
        let mut interior = Vec::new();
        let mut used = VertexSet::EMPTY;
        collect_outer(g, b, successor, on_cycle, &mut interior, &mut used, &mut |t, int| {
            out.push(OuterPath {
                origin: b,
                terminus: t,
                interior: int.to_vec(),
                coverage: coverage_of(b, t),
            });
        });
    }
    Ok(out)
}

/// DFS from the origin through off-cycle vertices; emits every landing back
/// on the cycle except the origin's own cycle arc.
fn collect_outer(
    g: &Digraph,
    cur: usize,
    origin_successor: usize,
    on_cycle: VertexSet,
    interior: &mut Vec<usize>,
    used: &mut VertexSet,
    emit: &mut dyn FnMut(usize, &[usize]),
) {
    for next in g.out_nbrs(cur).iter() {
        if on_cycle.contains(next) {
            let is_cycle_arc = interior.is_empty() && next == origin_successor;
            if !is_cycle_arc {
                emit(next, interior);
            }
            continue;
        }
        if used.contains(next) {
            continue;
        }
        interior.push(next);
        used.insert(next);
        collect_outer(g, next, origin_successor, on_cycle, interior, used, emit);
        used.remove(next);
        interior.pop();
    }
}

/// Decomposes the cycle-vertex subgraph into the centre cycle plus its
/// largest-coverage outer paths, reporting looping paths and whether the
/// survivors cover every cycle vertex.
///
/// Filtering: among paths sharing an origin only the largest coverage
/// survives, then likewise per terminus; ties keep the lexicographically
/// smallest interior sequence.
pub fn outer_path_decomposition(g: &Digraph, c1: &[usize]) -> Result<OuterPathDecomposition> {
    let all = all_outer_paths(g, c1)?;
    let looping: Vec<OuterPath> = all.iter().filter(|p| p.origin == p.terminus).cloned().collect();
    let non_looping: Vec<OuterPath> =
        all.into_iter().filter(|p| p.origin != p.terminus).collect();

    fn beats(a: &OuterPath, b: &OuterPath) -> bool {
        a.coverage.len() > b.coverage.len()
            || (a.coverage.len() == b.coverage.len() && a.interior < b.interior)
    }
    fn filter_by(paths: Vec<OuterPath>, key: fn(&OuterPath) -> usize) -> Vec<OuterPath> {
        let mut best: std::collections::BTreeMap<usize, OuterPath> = Default::default();
        for p in paths {
            match best.get(&key(&p)) {
                Some(cur) if !beats(&p, cur) => {}
                _ => {
                    best.insert(key(&p), p);
                }
            }
        }
        best.into_values().collect()
    }
    let kept = filter_by(filter_by(non_looping, |p| p.origin), |p| p.terminus);

    let mut covered = VertexSet::EMPTY;
    for p in &kept {
        for &v in &p.coverage {
            covered.insert(v);
        }
    }
    let full_coverage = c1.iter().all(|&v| covered.contains(v));
    Ok(OuterPathDecomposition { cycle: c1.to_vec(), kept, looping, full_coverage })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas;

    #[test]
    fn two_disjoint_two_cycles_are_found() {
        let g = Digraph::from_arcs_1based(4, &[(1, 2), (2, 1), (3, 4), (4, 3)]).unwrap();
        let (c1, c2) = find_two_disjoint_cycles(&g).unwrap();
        assert!(g.is_cycle(&c1) && g.is_cycle(&c2));
        assert!(!VertexSet::from_iter(c1.iter().copied())
            .intersects(VertexSet::from_iter(c2.iter().copied())));
    }

    #[test]
    fn single_cycle_has_no_disjoint_pair() {
        let g = Digraph::from_arcs_1based(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap();
        assert!(find_two_disjoint_cycles(&g).is_none());
    }

    #[test]
    fn exceptional_generators_contain_disjoint_edge_pairs() {
        // Both generators carry two vertex-disjoint 2-cycles (two disjoint
        // edges), e.g. {1,2} and {3,4}; the cycle-pair code of length 3 this
        // yields is consistent with their rate of 5/2 only because their
        // MAIS gap is three, not two.
        for g in [atlas::generator_a(), atlas::generator_b()] {
            let (c1, c2) = find_two_disjoint_cycles(&g).unwrap();
            assert!(g.is_cycle(&c1) && g.is_cycle(&c2));
            assert!(!VertexSet::from_iter(c1.iter().copied())
                .intersects(VertexSet::from_iter(c2.iter().copied())));
        }
    }

    /// The full hexagon witness: six vertices, all nine paths single arcs.
    fn hexagon() -> Digraph {
        // hubs 1, 3, 5; junctions 2, 4, 6; rim 1->2->3->4->5->6->1; chords
        // junction -> preceding hub: 2->5, 4->1, 6->3 (all 1-based).
        Digraph::from_arcs_1based(
            6,
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (2, 5), (4, 1), (6, 3)],
        )
        .unwrap()
    }

    #[test]
    fn hexagon_witness_is_found_with_hubs_recovered() {
        let tc = find_tri_cycle(&hexagon()).unwrap();
        tc.validate(&hexagon()).unwrap();
        assert_eq!(
            VertexSet::from_iter(tc.hubs.iter().copied()),
            VertexSet::from_iter([0, 2, 4])
        );
        assert_eq!(tc.total_arcs(), 9);
        assert_eq!(tc.vertex_set(), VertexSet::full(6));
    }

    #[test]
    fn degenerate_witness_is_the_bidirected_triangle() {
        let g = Digraph::from_arcs_1based(
            3,
            &[(1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1)],
        )
        .unwrap();
        let tc = find_tri_cycle(&g).unwrap();
        tc.validate(&g).unwrap();
        assert_eq!(tc.total_arcs(), 6);
        assert_eq!(tc.junctions, tc.hubs, "all three outgoing rims are empty");
    }

    #[test]
    fn acyclic_graph_has_no_tri_cycle() {
        let g = Digraph::from_arcs_1based(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
        assert!(find_tri_cycle(&g).is_none());
    }

    #[test]
    fn tri_cycle_subgraph_is_interlinked_on_its_hubs() {
        let tc = find_tri_cycle(&hexagon()).unwrap();
        let (sub, new_to_old) = tc.subgraph();
        let inner = VertexSet::from_iter(
            tc.hubs.iter().map(|&h| new_to_old.iter().position(|&o| o == h).unwrap()),
        );
        assert!(crate::codes::is_interlinked_cycle(&sub, inner));
    }

    #[test]
    fn bare_cycle_has_no_outer_paths() {
        let g = Digraph::from_arcs_1based(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let d = outer_path_decomposition(&g, &[0, 1, 2, 3]).unwrap();
        assert!(d.kept.is_empty() && d.looping.is_empty());
        assert!(!d.full_coverage);
    }

    #[test]
    fn looping_path_is_reported() {
        // Cycle 1->2->3->1 plus the loop 1->4->1.
        let g = Digraph::from_arcs_1based(4, &[(1, 2), (2, 3), (3, 1), (1, 4), (4, 1)]).unwrap();
        let d = outer_path_decomposition(&g, &[0, 1, 2]).unwrap();
        assert_eq!(d.looping.len(), 1);
        assert_eq!(d.looping[0].origin, 0);
        assert_eq!(d.looping[0].interior, vec![3]);
    }

    #[test]
    fn full_coverage_from_three_chords() {
        // A 6-cycle with three skip-two chords covers every vertex.
        let g = Digraph::from_arcs_1based(
            6,
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 4), (3, 6), (5, 2)],
        )
        .unwrap();
        let d = outer_path_decomposition(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(d.full_coverage);
        assert_eq!(d.kept.len(), 3);
    }

    #[test]
    fn largest_coverage_filtering_keeps_one_path_per_origin() {
        // From vertex 1 two chords return to the 5-cycle; only 1->4 (covering
        // {2,3}) survives over 1->3 (covering {2}).
        let g = Digraph::from_arcs_1based(
            5,
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 3), (1, 4)],
        )
        .unwrap();
        let d = outer_path_decomposition(&g, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(d.kept.len(), 1);
        assert_eq!((d.kept[0].origin, d.kept[0].terminus), (0, 3));
        assert_eq!(d.kept[0].coverage, vec![1, 2]);
    }
}
