//! Fixed five-vertex graphs used by the dense-graph classification.
//!
//! Each `G<x>.<y>` graph has shortest undirected cycle length `x` and `y`
//! edges (an edge being a pair of opposite arcs). The catalog pairs eleven of
//! them with a two-row code; every five-vertex graph with MAIS 2 outside the
//! exceptional set contains one of these as an arc-deleted subgraph, so its
//! code lifts. The two generator graphs and their reduced variants define the
//! exceptional set and its half-integer-rate vector codes.
//!
//! All constructors use the 1-based vertex labels of the catalog drawings.

use crate::codes::LinearCode;
use crate::digraph::Digraph;

fn build(n: usize, edges: &[(usize, usize)], arcs: &[(usize, usize)]) -> Digraph {
    let mut all: Vec<(usize, usize)> = Vec::new();
    for &(i, j) in edges {
        all.push((i, j));
        all.push((j, i));
    }
    all.extend_from_slice(arcs);
    Digraph::from_arcs_1based(n, &all).expect("atlas graphs are fixed and valid")
}

/// Two disjoint edges; every other triple is tied together by 3-cycles.
pub fn g0_2b() -> Digraph {
    build(
        5,
        &[(1, 2), (3, 4)],
        &[(2, 3), (5, 1), (1, 3), (3, 5), (4, 5), (5, 2), (2, 4), (1, 4)],
    )
}

/// An edge path 1-2-3 plus the disjoint edge 4-5.
pub fn g0_3c() -> Digraph {
    build(5, &[(1, 2), (2, 3), (4, 5)], &[(3, 4), (5, 1), (1, 3), (3, 5), (4, 1)])
}

/// An edge path 1-2-3-4-5 with chords 5->1->3->5 and 4->2.
pub fn g0_4e() -> Digraph {
    build(5, &[(1, 2), (2, 3), (3, 4), (4, 5)], &[(5, 1), (1, 3), (3, 5), (4, 2)])
}

/// An edge path 1-2-3-4-5 with chords 5->1->3->5 and 5->2.
pub fn g0_4f() -> Digraph {
    build(5, &[(1, 2), (2, 3), (3, 4), (4, 5)], &[(5, 1), (1, 3), (3, 5), (5, 2)])
}

/// An undirected triangle {1,2,3} and directed 3-cycles through 4 and 5.
pub fn g3_3() -> Digraph {
    build(
        5,
        &[(1, 2), (1, 3), (2, 3)],
        &[(4, 5), (5, 1), (1, 4), (5, 2), (2, 4), (5, 3), (3, 4)],
    )
}

/// Undirected triangle plus the disjoint edge 4-5: a two-clique cover.
pub fn g3_4a() -> Digraph {
    build(5, &[(1, 2), (1, 3), (2, 3), (4, 5)], &[])
}

/// Triangle plus edge 1-4, remaining triples cycled one way.
pub fn g3_4b() -> Digraph {
    build(5, &[(1, 2), (1, 3), (2, 3), (1, 4)], &[(4, 5), (5, 2), (2, 4), (5, 3), (3, 4)])
}

/// Triangle plus edge 1-4, remaining triples cycled the other way.
pub fn g3_4c() -> Digraph {
    build(5, &[(1, 2), (1, 3), (2, 3), (1, 4)], &[(4, 2), (2, 5), (5, 4), (4, 3), (3, 5)])
}

/// Triangle plus edges 5-1 and 5-2.
pub fn g3_5c() -> Digraph {
    build(5, &[(1, 2), (1, 3), (2, 3), (5, 1), (5, 2)], &[(4, 5), (5, 3), (3, 4)])
}

/// An undirected 4-clique on {1,2,3,4}; vertex 5 is isolated.
pub fn g3_6a() -> Digraph {
    build(5, &[(1, 2), (1, 3), (2, 3), (4, 1), (4, 2), (4, 3)], &[])
}

/// An undirected 4-cycle 1-2-3-4 with directed 3-cycles through 5.
pub fn g4_4() -> Digraph {
    build(5, &[(1, 2), (2, 3), (3, 4), (4, 1)], &[(4, 5), (5, 1), (1, 3), (3, 5), (5, 2), (2, 4)])
}

/// The undirected 5-cycle on circumference 1-3-5-2-4 plus five one-way arcs;
/// isomorphic to the second generator graph.
pub fn g5_5a() -> Digraph {
    build(
        5,
        &[(1, 3), (3, 5), (5, 2), (2, 4), (4, 1)],
        &[(1, 2), (2, 3), (4, 3), (4, 5), (1, 5)],
    )
}

/// First generator of the exceptional set. Removing any subset of its three
/// optional arcs yields 8 pairwise non-isomorphic graphs.
pub fn generator_a() -> Digraph {
    let mut g = reduced_a();
    for &(i, j) in &dotted_a() {
        g.add_arc(i - 1, j - 1).unwrap();
    }
    g
}

/// Second generator. Removing any subset of its five optional arcs yields 20
/// non-isomorphic graphs.
pub fn generator_b() -> Digraph {
    let mut g = reduced_b();
    for &(i, j) in &dotted_b() {
        g.add_arc(i - 1, j - 1).unwrap();
    }
    g
}

/// The optional (removable) arcs of the first generator, 1-based.
pub fn dotted_a() -> Vec<(usize, usize)> {
    vec![(3, 1), (4, 1), (4, 2)]
}

/// The optional arcs of the second generator, 1-based.
pub fn dotted_b() -> Vec<(usize, usize)> {
    vec![(5, 2), (4, 1), (4, 2), (3, 1), (3, 5)]
}

/// First generator with every optional arc removed.
pub fn reduced_a() -> Digraph {
    build(5, &[(1, 2), (3, 4), (4, 5), (5, 1)], &[(2, 3), (3, 5), (5, 2)])
}

/// Second generator with every optional arc removed: the undirected 5-cycle.
pub fn reduced_b() -> Digraph {
    build(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)], &[])
}

/// The normalised-length-5/2 vector code for the reduced second generator:
/// the five 2-cycles of the undirected 5-cycle, time-shared over two slots.
/// Lifts to every graph in its family.
pub fn vector_code_b() -> LinearCode {
    LinearCode::vector2_from_rows(
        5,
        vec![
            vec![(0, 0), (1, 0)],
            vec![(1, 1), (2, 1)],
            vec![(2, 0), (3, 0)],
            vec![(3, 1), (4, 1)],
            vec![(4, 0), (0, 1)],
        ],
    )
}

/// The vector code for the reduced first generator: slot 0 carries the
/// interlinked-cycle rows on {1,2,3,5} with inner set {1,2,3}, the remaining
/// slots time-share the 2-cycles {1,2}, {3,4}, {4,5}.
pub fn vector_code_a() -> LinearCode {
    LinearCode::vector2_from_rows(
        5,
        vec![
            vec![(0, 0), (1, 0), (2, 0)],
            vec![(4, 0), (0, 0), (1, 0)],
            vec![(0, 1), (1, 1)],
            vec![(2, 1), (3, 0)],
            vec![(3, 1), (4, 1)],
        ],
    )
}

/// One entry of the dense-graph catalog: a named graph and its two-row code.
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: Digraph,
    /// Rows as 0-based message index sets.
    pub code_rows: Vec<Vec<usize>>,
}

/// The eleven code-bearing catalog entries, in derivation order.
pub fn catalog() -> Vec<CatalogEntry> {
    let e = |name, graph, rows: &[&[usize]]| CatalogEntry {
        name,
        graph,
        code_rows: rows.iter().map(|r| r.to_vec()).collect(),
    };
    vec![
        e("G0.2b", g0_2b(), &[&[0, 1, 2, 3], &[4, 0, 1]]),
        e("G0.3c", g0_3c(), &[&[0, 1, 2], &[3, 4, 0]]),
        e("G0.4e", g0_4e(), &[&[0, 1, 2], &[0, 3, 4]]),
        e("G0.4f", g0_4f(), &[&[2, 3, 4], &[0, 1, 2]]),
        e("G3.3", g3_3(), &[&[3, 4], &[0, 1, 2, 3]]),
        e("G3.4a", g3_4a(), &[&[0, 1, 2], &[3, 4]]),
        e("G3.4b", g3_4b(), &[&[0, 1, 2, 3], &[4, 1, 2]]),
        e("G3.4c", g3_4c(), &[&[0, 1, 2, 3], &[4, 3]]),
        e("G3.5c", g3_5c(), &[&[0, 1, 2, 4], &[3, 4]]),
        e("G3.6a", g3_6a(), &[&[0, 1, 2, 3], &[4]]),
        e("G4.4", g4_4(), &[&[0, 1, 2, 3], &[4, 0, 1]]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::mais;
    use crate::codes::verify_decodable;

    #[test]
    fn catalog_codes_decode_on_their_graphs_for_all_small_rings() {
        for entry in catalog() {
            let code = LinearCode::scalar_from_rows(5, entry.code_rows.clone());
            for m in 2..=5 {
                assert!(
                    verify_decodable(&entry.graph, &code, m, 1).unwrap(),
                    "{} fails at m={m}",
                    entry.name
                );
            }
        }
    }

    #[test]
    fn catalog_graphs_are_dense_mais_two() {
        for entry in catalog() {
            assert_eq!(mais(&entry.graph).0, 2, "{}", entry.name);
        }
    }

    #[test]
    fn generators_and_reductions_have_mais_two() {
        for g in [generator_a(), generator_b(), reduced_a(), reduced_b()] {
            assert_eq!(mais(&g).0, 2);
        }
    }

    #[test]
    fn generator_arc_counts() {
        assert_eq!(generator_a().arc_count(), 14);
        assert_eq!(generator_b().arc_count(), 15);
        assert_eq!(reduced_b().arc_count(), 10);
    }

    #[test]
    fn vector_codes_decode_on_reduced_generators() {
        for m in 2..=3 {
            assert!(verify_decodable(&reduced_b(), &vector_code_b(), m, 2).unwrap());
            assert!(verify_decodable(&reduced_a(), &vector_code_a(), m, 2).unwrap());
        }
        // More side information never hurts: the same codes work on the full
        // generators.
        assert!(verify_decodable(&generator_a(), &vector_code_a(), 2, 2).unwrap());
        assert!(verify_decodable(&generator_b(), &vector_code_b(), 2, 2).unwrap());
    }

    #[test]
    fn truncated_second_row_of_the_first_vector_code_is_not_decodable() {
        // Dropping the third term of the second row breaks receiver 3, which
        // would need slot 0 of message 2 it cannot reconstruct.
        let broken = LinearCode::vector2_from_rows(
            5,
            vec![
                vec![(0, 0), (1, 0), (2, 0)],
                vec![(4, 0), (0, 0)],
                vec![(0, 1), (1, 1)],
                vec![(2, 1), (3, 0)],
                vec![(3, 1), (4, 1)],
            ],
        );
        assert!(!verify_decodable(&reduced_a(), &broken, 2, 2).unwrap());
    }
}
