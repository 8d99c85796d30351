//! The exceptional set: the 28 five-vertex classes whose optimal rate is
//! 5/2 rather than their MAIS of 2.
//!
//! The set is generated by deleting optional arcs from the two generator
//! graphs (8 classes from the first, 20 from the second, no overlap).
//! Membership is a canonical-form lookup; a member's optimal code is the
//! fixed `t = 2` vector code of its family's fully reduced generator,
//! relabelled through the recovered isomorphism.

use std::collections::BTreeMap;

use crate::atlas;
use crate::codes::LinearCode;
use crate::digraph::{isomorphism, Digraph};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Family {
    A,
    B,
}

pub struct Member {
    pub family: Family,
    /// The member in catalog labels (generator minus one dotted-arc subset).
    pub reference: Digraph,
    pub removed: Vec<(usize, usize)>,
    pub canon_bits: u64,
}

pub struct ExceptionalSet {
    members: Vec<Member>,
    by_canon: BTreeMap<u64, usize>,
}

/// An established membership: which member, and how `g` maps onto its
/// catalog labelling.
pub struct ExceptionalMatch<'a> {
    pub member: &'a Member,
    /// `map[v_of_g] = v_in_catalog_labels`.
    pub map: Vec<usize>,
}

impl ExceptionalSet {
    /// Generates, canonicalises and deduplicates the dotted-arc deletions of
    /// both generators. Fails hard unless the counts come out 8 + 20 = 28.
    pub fn build() -> Result<ExceptionalSet> {
        let mut members: Vec<Member> = Vec::new();
        let mut by_canon: BTreeMap<u64, usize> = BTreeMap::new();
        let mut family_counts = [0usize; 2];
        for (family, generator, dotted) in [
            (Family::A, atlas::generator_a(), atlas::dotted_a()),
            (Family::B, atlas::generator_b(), atlas::dotted_b()),
        ] {
            for subset in 0u32..(1 << dotted.len()) {
                let mut g = generator.clone();
                let mut removed = Vec::new();
                for (k, &(i, j)) in dotted.iter().enumerate() {
                    if subset >> k & 1 == 1 {
                        g.remove_arc(i - 1, j - 1);
                        removed.push((i, j));
                    }
                }
                let bits = g.canonical_form()?.bits;
                if let std::collections::btree_map::Entry::Vacant(e) = by_canon.entry(bits) {
                    e.insert(members.len());
                    members.push(Member { family, reference: g, removed, canon_bits: bits });
                    family_counts[family as usize] += 1;
                }
            }
        }
        if family_counts != [8, 20] || members.len() != 28 {
            return Err(Error::SurveyAssertion {
                id: "exceptional-set".into(),
                reason: format!(
                    "expected 8 + 20 = 28 classes, got {} + {} = {}",
                    family_counts[0],
                    family_counts[1],
                    members.len()
                ),
            });
        }
        Ok(ExceptionalSet { members, by_canon })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn references(&self) -> impl Iterator<Item = &Digraph> {
        self.members.iter().map(|m| &m.reference)
    }

    /// Membership test with the explicit relabelling onto catalog labels.
    pub fn classify(&self, g: &Digraph) -> Result<Option<ExceptionalMatch<'_>>> {
        if g.n() != 5 {
            return Ok(None);
        }
        let bits = g.canonical_form()?.bits;
        let Some(&idx) = self.by_canon.get(&bits) else {
            return Ok(None);
        };
        let member = &self.members[idx];
        let map = isomorphism(g, &member.reference)?
            .expect("equal canonical forms imply isomorphism");
        Ok(Some(ExceptionalMatch { member, map }))
    }

    /// The rate-5/2 vector code for a member, in the member's own labels.
    ///
    /// The family-B code works on anything containing the undirected
    /// 5-cycle; the family-A code on anything containing its reduced
    /// generator. Both hold for every member because deletions only remove
    /// optional arcs.
    pub fn vector_code(&self, g: &Digraph) -> Result<LinearCode> {
        let m = self.classify(g)?.ok_or(Error::NotExceptional)?;
        let reference_code = match m.member.family {
            Family::A => atlas::vector_code_a(),
            Family::B => atlas::vector_code_b(),
        };
        // Pull the code back through map: row coefficient for message v of g
        // is the reference coefficient of its image.
        let t = reference_code.t;
        let rows = reference_code
            .rows
            .iter()
            .map(|row| {
                let mut new_row = vec![0i8; 5 * t];
                for v in 0..5 {
                    for s in 0..t {
                        new_row[v * t + s] = row[m.map[v] * t + s];
                    }
                }
                new_row
            })
            .collect();
        Ok(LinearCode { n: 5, t, ring: reference_code.ring, rows })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::mais;
    use crate::codes::verify_decodable;

    fn set() -> ExceptionalSet {
        ExceptionalSet::build().unwrap()
    }

    #[test]
    fn family_split_is_eight_plus_twenty() {
        let s = set();
        assert_eq!(s.len(), 28);
        assert_eq!(s.members().iter().filter(|m| m.family == Family::A).count(), 8);
        assert_eq!(s.members().iter().filter(|m| m.family == Family::B).count(), 20);
    }

    #[test]
    fn undirected_five_cycle_is_a_member() {
        let s = set();
        let m = s.classify(&atlas::reduced_b()).unwrap().unwrap();
        assert_eq!(m.member.family, Family::B);
    }

    #[test]
    fn complete_digraph_is_not_a_member() {
        let mut g = Digraph::empty(5).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                if i != j {
                    g.add_arc(i, j).unwrap();
                }
            }
        }
        assert!(set().classify(&g).unwrap().is_none());
    }

    #[test]
    fn ring_labelled_variant_matches_the_second_generator() {
        // The same graph drawn on a 1-3-5-2-4 circumference.
        let g = atlas::g5_5a();
        let s = set();
        let m = s.classify(&g).unwrap().unwrap();
        assert_eq!(m.member.family, Family::B);
        assert!(m.member.removed.is_empty(), "it is the full generator");
    }

    #[test]
    fn every_member_has_mais_two_and_a_decodable_vector_code() {
        let s = set();
        for member in s.members() {
            assert_eq!(mais(&member.reference).0, 2);
            let code = s.vector_code(&member.reference).unwrap();
            assert_eq!((code.p(), code.t), (5, 2));
            assert!(verify_decodable(&member.reference, &code, 2, 2).unwrap());
        }
    }

    #[test]
    fn reduced_generators_get_their_reference_codes_verbatim() {
        // Both reduced generators classify onto themselves with the identity
        // map, so the produced rows match the fixed reference codes exactly;
        // the full generators reuse them unchanged.
        let s = set();
        assert_eq!(s.vector_code(&atlas::reduced_b()).unwrap(), atlas::vector_code_b());
        assert_eq!(s.vector_code(&atlas::reduced_a()).unwrap(), atlas::vector_code_a());
        assert_eq!(s.vector_code(&atlas::generator_a()).unwrap(), atlas::vector_code_a());
    }

    #[test]
    fn vector_code_follows_relabelling() {
        // Scramble a member and confirm the pulled-back code still decodes.
        let s = set();
        let g = atlas::generator_b().permute(&[3, 0, 4, 1, 2]);
        let code = s.vector_code(&g).unwrap();
        assert!(verify_decodable(&g, &code, 2, 2).unwrap());
        assert!(verify_decodable(&g, &code, 3, 2).unwrap());
    }

    #[test]
    fn members_pairwise_nonisomorphic() {
        let s = set();
        let forms: std::collections::BTreeSet<u64> =
            s.members().iter().map(|m| m.canon_bits).collect();
        assert_eq!(forms.len(), 28);
    }
}
