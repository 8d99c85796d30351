//! Confusion graphs and their exact chromatic number.
//!
//! The confusion graph of an instance has one vertex per message tuple; two
//! tuples are adjacent iff some receiver sees identical side information but
//! wants different values, so no code may give them the same codeword. A
//! proper colouring is exactly a (possibly non-linear) index code, hence the
//! chromatic number pins the optimal finite-length rate.

use crate::codes::GeneralCode;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Cap on the confusion-graph order `(m^t)^n`.
pub const MAX_CONFUSION_VERTICES: u64 = 1 << 12;

/// Work budget for the exact colouring search before it degrades to bounds
/// (spent per search node in proportion to the vertex count).
const COLORING_BUDGET: u64 = 50_000_000;

#[derive(Clone)]
pub struct ConfusionGraph {
    pub vertices: usize,
    pub edges: usize,
    adj: Vec<Vec<u64>>,
    pub n: usize,
    pub m: u32,
    pub t: u32,
}

impl ConfusionGraph {
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v >> 6] >> (v & 63) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].iter().map(|w| w.count_ones() as usize).sum()
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u][v >> 6] |= 1 << (v & 63);
        self.adj[v][u >> 6] |= 1 << (u & 63);
    }

    /// DIMACS undirected graph format, for cross-checks with external
    /// colouring tools.
    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p edge {} {}\n", self.vertices, self.edges);
        for u in 0..self.vertices {
            for v in (u + 1)..self.vertices {
                if self.adjacent(u, v) {
                    s.push_str(&format!("e {} {}\n", u + 1, v + 1));
                }
            }
        }
        s
    }
}

/// Builds the confusion graph of `g` for messages that are `t`-vectors over
/// an alphabet of size `m`.
///
/// Tuples `x`, `x'` are adjacent iff some receiver `j` has `x_j != x'_j`
/// while `x` and `x'` agree on all of `j`'s side information.
pub fn build_confusion(g: &Digraph, m: u32, t: u32) -> Result<ConfusionGraph> {
    if m < 2 || t < 1 {
        return Err(Error::Precondition("need m >= 2 and t >= 1".into()));
    }
    let n = g.n();
    let per: u64 = (m as u64).pow(t);
    let total = per
        .checked_pow(n as u32)
        .filter(|&v| v <= MAX_CONFUSION_VERTICES)
        .ok_or_else(|| {
            Error::TooLarge(format!("(m^t)^n exceeds {MAX_CONFUSION_VERTICES} vertices"))
        })?;
    let vcount = total as usize;
    let words = vcount.div_ceil(64);

    // Per receiver: the tuple projected to its own message and to its side
    // information, as mixed-radix keys.
    let slots = n * t as usize;
    let mut own = vec![vec![0u32; vcount]; n];
    let mut side = vec![vec![0u64; vcount]; n];
    let mut x = vec![0u8; slots];
    for idx in 0..vcount {
        let mut rem = idx as u64;
        for d in x.iter_mut() {
            *d = (rem % m as u64) as u8;
            rem /= m as u64;
        }
        for j in 0..n {
            let mut o = 0u32;
            for s in 0..t as usize {
                o = o * m + x[j * t as usize + s] as u32;
            }
            own[j][idx] = o;
            let mut k = 0u64;
            for nb in g.out_nbrs(j).iter() {
                for s in 0..t as usize {
                    k = k * m as u64 + x[nb * t as usize + s] as u64;
                }
            }
            side[j][idx] = k;
        }
    }

    let mut cg = ConfusionGraph {
        vertices: vcount,
        edges: 0,
        adj: vec![vec![0u64; words]; vcount],
        n,
        m,
        t,
    };
    for u in 0..vcount {
        for v in (u + 1)..vcount {
            if (0..n).any(|j| own[j][u] != own[j][v] && side[j][u] == side[j][v]) {
                cg.add_edge(u, v);
                cg.edges += 1;
            }
        }
    }
    Ok(cg)
}

/// Result of the chromatic computation: exact, or a bracketing interval when
/// the search budget runs out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chromatic {
    Exact { chi: u32, coloring: Vec<u32> },
    Interval { lower: u32, upper: u32, coloring: Vec<u32> },
}

impl Chromatic {
    pub fn lower(&self) -> u32 {
        match self {
            Chromatic::Exact { chi, .. } => *chi,
            Chromatic::Interval { lower, .. } => *lower,
        }
    }

    pub fn upper(&self) -> u32 {
        match self {
            Chromatic::Exact { chi, .. } => *chi,
            Chromatic::Interval { upper, .. } => *upper,
        }
    }

    pub fn exact(&self) -> Option<u32> {
        match self {
            Chromatic::Exact { chi, .. } => Some(*chi),
            Chromatic::Interval { .. } => None,
        }
    }

    pub fn coloring(&self) -> &[u32] {
        match self {
            Chromatic::Exact { coloring, .. } | Chromatic::Interval { coloring, .. } => coloring,
        }
    }
}

/// Exact chromatic number by iterative deepening on `k`, with a greedy
/// clique seed for the lower bound and saturation-ordered backtracking for
/// each `k`-colourability test.
pub fn chromatic_number(cg: &ConfusionGraph) -> Chromatic {
    let n = cg.vertices;
    if n == 0 {
        return Chromatic::Exact { chi: 0, coloring: vec![] };
    }
    let clique = greedy_clique(cg);
    let (upper, greedy_col) = greedy_coloring(cg);
    let mut budget = COLORING_BUDGET;
    let mut k = clique.len() as u32;
    loop {
        if k >= upper {
            return Chromatic::Exact { chi: upper, coloring: greedy_col };
        }
        match try_color(cg, k, &clique, &mut budget) {
            Some(Some(coloring)) => return Chromatic::Exact { chi: k, coloring },
            Some(None) => k += 1,
            None => {
                return Chromatic::Interval {
                    lower: clique.len() as u32,
                    upper,
                    coloring: greedy_col,
                };
            }
        }
    }
}

fn greedy_clique(cg: &ConfusionGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..cg.vertices).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(cg.degree(v)));
    let mut clique: Vec<usize> = Vec::new();
    for &v in &order {
        if clique.iter().all(|&u| cg.adjacent(u, v)) {
            clique.push(v);
        }
    }
    clique
}

fn greedy_coloring(cg: &ConfusionGraph) -> (u32, Vec<u32>) {
    let mut order: Vec<usize> = (0..cg.vertices).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(cg.degree(v)));
    let mut color = vec![u32::MAX; cg.vertices];
    let mut max = 0;
    for &v in &order {
        let mut taken = 0u64; // colours up to 64 tracked bitwise, then linear
        let mut big: Vec<u32> = Vec::new();
        for (u, &cu) in color.iter().enumerate() {
            if cu != u32::MAX && cg.adjacent(u, v) {
                if cu < 64 {
                    taken |= 1 << cu;
                } else {
                    big.push(cu);
                }
            }
        }
        let mut c = 0u32;
        while (c < 64 && taken >> c & 1 == 1) || (c >= 64 && big.contains(&c)) {
            c += 1;
        }
        color[v] = c;
        max = max.max(c + 1);
    }
    (max, color)
}

/// `Some(Some(col))` when k-colourable, `Some(None)` when proven not,
/// `None` when the budget ran out.
fn try_color(cg: &ConfusionGraph, k: u32, clique: &[usize], budget: &mut u64) -> Option<Option<Vec<u32>>> {
    if (clique.len() as u32) > k {
        return Some(None);
    }
    if k > 64 {
        // Colour sets are tracked in one word; beyond that report bounds.
        return None;
    }
    let mut color = vec![u32::MAX; cg.vertices];
    // Pre-colouring a maximal clique is valid symmetry breaking.
    for (c, &v) in clique.iter().enumerate() {
        color[v] = c as u32;
    }
    let mut used = clique.len() as u32;
    match color_rec(cg, k, &mut color, &mut used, budget) {
        None => None,
        Some(true) => Some(Some(color)),
        Some(false) => Some(None),
    }
}

fn color_rec(
    cg: &ConfusionGraph,
    k: u32,
    color: &mut Vec<u32>,
    used: &mut u32,
    budget: &mut u64,
) -> Option<bool> {
    let step = cg.vertices as u64;
    if *budget < step {
        return None;
    }
    *budget -= step;
    // Most saturated uncoloured vertex, ties by degree then index.
    let mut pick: Option<(usize, usize, usize)> = None;
    for v in 0..cg.vertices {
        if color[v] != u32::MAX {
            continue;
        }
        let mut sat = 0u64;
        for (u, &cu) in color.iter().enumerate() {
            if cu != u32::MAX && cu < 64 && cg.adjacent(u, v) {
                sat |= 1 << cu;
            }
        }
        let s = sat.count_ones() as usize;
        let d = cg.degree(v);
        if pick.is_none_or(|(ps, pd, _)| s > ps || (s == ps && d > pd)) {
            pick = Some((s, d, v));
        }
    }
    let Some((_, _, v)) = pick else {
        return Some(true);
    };
    let mut taken = 0u64;
    for (u, &cu) in color.iter().enumerate() {
        if cu != u32::MAX && cg.adjacent(u, v) {
            taken |= 1 << cu;
        }
    }
    let limit = k.min(*used + 1);
    for c in 0..limit {
        if taken >> c & 1 == 1 {
            continue;
        }
        color[v] = c;
        let bump = c == *used;
        if bump {
            *used += 1;
        }
        match color_rec(cg, k, color, used, budget) {
            Some(true) => return Some(true),
            Some(false) => {}
            None => return None,
        }
        if bump {
            *used -= 1;
        }
        color[v] = u32::MAX;
    }
    Some(false)
}

/// The optimal rate at this alphabet: `log2(chi) / log2(m^t)`, plus the
/// shortest binary-vector codeword length `ceil(log2 chi)`.
pub fn exact_rate(chi: u32, m: u32, t: u32) -> f64 {
    (chi as f64).log2() / ((m as f64).powi(t as i32)).log2()
}

pub fn binary_restricted_length(chi: u32) -> u32 {
    (chi as f64).log2().ceil() as u32
}

/// Packages a proper colouring as an explicit (generally non-linear) index
/// code with one codeword per colour.
pub fn coloring_as_code(cg: &ConfusionGraph, coloring: &[u32]) -> GeneralCode {
    let codewords = coloring.iter().max().map_or(0, |&c| c + 1);
    GeneralCode {
        n: cg.n,
        m: cg.m,
        t: cg.t,
        codewords,
        map: coloring.to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas;
    use crate::codes::verify_decodable_general;

    #[test]
    fn single_vertex_confusion_is_one_edge() {
        let g = Digraph::empty(1).unwrap();
        let cg = build_confusion(&g, 2, 1).unwrap();
        assert_eq!((cg.vertices, cg.edges), (2, 1));
        assert_eq!(chromatic_number(&cg).exact(), Some(2));
    }

    #[test]
    fn mutually_informed_pair_confusion_is_a_four_cycle() {
        let g = Digraph::from_arcs_1based(2, &[(1, 2), (2, 1)]).unwrap();
        let cg = build_confusion(&g, 2, 1).unwrap();
        assert_eq!((cg.vertices, cg.edges), (4, 4));
        assert_eq!(chromatic_number(&cg).exact(), Some(2));
    }

    #[test]
    fn ignorant_pair_confusion_is_complete() {
        let g = Digraph::empty(2).unwrap();
        let cg = build_confusion(&g, 2, 1).unwrap();
        assert_eq!((cg.vertices, cg.edges), (4, 6));
        assert_eq!(chromatic_number(&cg).exact(), Some(4));
    }

    #[test]
    fn five_cycle_confusion_statistics() {
        let cg = build_confusion(&atlas::reduced_b(), 2, 1).unwrap();
        assert_eq!((cg.vertices, cg.edges), (32, 240));
        assert_eq!(chromatic_number(&cg).exact(), Some(8));
    }

    #[test]
    fn generator_confusion_chromatic_numbers() {
        for g in [atlas::generator_a(), atlas::generator_b()] {
            let cg = build_confusion(&g, 2, 1).unwrap();
            assert_eq!(cg.vertices, 32);
            assert_eq!(chromatic_number(&cg).exact(), Some(7));
        }
    }

    #[test]
    fn colorings_are_proper_and_decode_as_codes() {
        let g = atlas::generator_a();
        let cg = build_confusion(&g, 2, 1).unwrap();
        let chrom = chromatic_number(&cg);
        let coloring = chrom.coloring();
        for u in 0..cg.vertices {
            for v in (u + 1)..cg.vertices {
                if cg.adjacent(u, v) {
                    assert_ne!(coloring[u], coloring[v]);
                }
            }
        }
        let code = coloring_as_code(&cg, coloring);
        assert_eq!(code.codewords, 7);
        assert!(verify_decodable_general(&g, &code).unwrap());
    }

    #[test]
    fn rates_match_expectations() {
        assert!((exact_rate(7, 2, 1) - 2.8074).abs() < 1e-4);
        assert_eq!(binary_restricted_length(7), 3);
        assert_eq!(binary_restricted_length(8), 3);
        assert!((exact_rate(8, 2, 1) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn dimacs_export_shape() {
        let g = Digraph::empty(1).unwrap();
        let cg = build_confusion(&g, 2, 1).unwrap();
        assert_eq!(cg.to_dimacs(), "p edge 2 1\ne 1 2\n");
    }

    #[test]
    fn oversized_instances_are_rejected() {
        let g = Digraph::empty(5).unwrap();
        assert!(matches!(build_confusion(&g, 2, 3), Err(Error::TooLarge(_))));
    }
}
