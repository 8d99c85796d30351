//! Index codes and their verification.
//!
//! A [`LinearCode`] is a `p`-row coefficient tensor over messages that are
//! `t`-slot vectors. Constructions use coefficients in {-1, 0, 1}; such a
//! code evaluates over the ring `Z_m` for every `m >= 2` (with -1 read as
//! `m - 1`), and the `ring` field records when a code is instead pinned to
//! one modulus.
//! Decodability is checked by brute force: a code works iff no receiver ever
//! sees the same (codeword, side-information) pair for two tuples that
//! disagree on its own message.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, VertexSet};
use crate::error::{Error, Result};

/// Evaluation ring of a code: a fixed modulus, or any `Z_m` when every
/// coefficient is in {-1, 0, 1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ring {
    Any,
    Mod(u32),
}

/// Upper bound on the brute-force state space `(m^t)^n`.
pub const MAX_STATES: u64 = 1 << 20;

/// A linear index code: `p` rows, each a linear form over the `n * t`
/// message slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    pub n: usize,
    pub t: usize,
    pub ring: Ring,
    /// `rows[r][i * t + s]` is the coefficient of slot `s` of message `i`.
    pub rows: Vec<Vec<i8>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RingRepr {
    Num(u32),
    Str(String),
}

#[derive(Serialize, Deserialize)]
struct LinearCodeRepr {
    n: usize,
    t: usize,
    p: usize,
    ring: RingRepr,
    rows: Vec<Vec<i8>>,
}

impl Serialize for LinearCode {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        LinearCodeRepr {
            n: self.n,
            t: self.t,
            p: self.rows.len(),
            ring: match self.ring {
                Ring::Any => RingRepr::Str("any".into()),
                Ring::Mod(s) => RingRepr::Num(s),
            },
            rows: self.rows.clone(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for LinearCode {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = LinearCodeRepr::deserialize(de)?;
        let ring = match repr.ring {
            RingRepr::Str(s) if s == "any" => Ring::Any,
            RingRepr::Num(s) => Ring::Mod(s),
            RingRepr::Str(other) => {
                return Err(serde::de::Error::custom(format!("bad ring `{other}`")))
            }
        };
        if repr.p != repr.rows.len() {
            return Err(serde::de::Error::custom("p does not match row count"));
        }
        Ok(LinearCode { n: repr.n, t: repr.t, ring, rows: repr.rows })
    }
}

impl LinearCode {
    /// A scalar code (`t = 1`) from rows given as 0-based message index sets.
    pub fn scalar_from_rows<I, J>(n: usize, rows: I) -> LinearCode
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = usize>,
    {
        let rows = rows
            .into_iter()
            .map(|row| {
                let mut v = vec![0i8; n];
                for i in row {
                    v[i] = 1;
                }
                v
            })
            .collect();
        LinearCode { n, t: 1, ring: Ring::Any, rows }
    }

    /// A `t = 2` vector code from rows given as `(message, slot)` pairs.
    pub fn vector2_from_rows<I, J>(n: usize, rows: I) -> LinearCode
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = (usize, usize)>,
    {
        let rows = rows
            .into_iter()
            .map(|row| {
                let mut v = vec![0i8; n * 2];
                for (i, s) in row {
                    v[i * 2 + s] = 1;
                }
                v
            })
            .collect();
        LinearCode { n, t: 2, ring: Ring::Any, rows }
    }

    /// The uncoded identity code of length `n`.
    pub fn identity(n: usize) -> LinearCode {
        LinearCode::scalar_from_rows(n, (0..n).map(|i| [i]))
    }

    pub fn p(&self) -> usize {
        self.rows.len()
    }

    /// Normalised length `p / t` as an exact pair.
    pub fn normalized_len(&self) -> (usize, usize) {
        (self.rows.len(), self.t)
    }

    /// Messages touched by a row.
    pub fn row_support(&self, r: usize) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for i in 0..self.n {
            if (0..self.t).any(|sl| self.rows[r][i * self.t + sl] != 0) {
                s.insert(i);
            }
        }
        s
    }

    /// Rows whose support is a single message slot (receivers with no usable
    /// side information end up with such rows).
    pub fn degenerate_rows(&self) -> Vec<usize> {
        (0..self.p())
            .filter(|&r| self.rows[r].iter().map(|&c| (c != 0) as usize).sum::<usize>() == 1)
            .collect()
    }
}

/// A general (possibly non-linear) index code: an explicit total map from
/// message tuples to codewords `0..codewords`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralCode {
    pub n: usize,
    pub m: u32,
    pub t: u32,
    pub codewords: u32,
    /// `map[tuple_index]`, tuples indexed little-endian by slot `i * t + s`.
    pub map: Vec<u32>,
}

fn states(n: usize, m: u32, t: u32) -> Result<u64> {
    let per: u64 = (m as u64)
        .checked_pow(t)
        .ok_or_else(|| Error::TooLarge("alphabet overflow".into()))?;
    let total = per
        .checked_pow(n as u32)
        .filter(|&s| s <= MAX_STATES)
        .ok_or_else(|| Error::TooLarge(format!("(m^t)^n = {per}^{n} exceeds {MAX_STATES}")))?;
    Ok(total)
}

/// Decodes one mixed-radix tuple index into `n * t` digits base `m`.
fn digits_of(mut idx: u64, m: u32, len: usize, out: &mut [u8]) {
    for d in out.iter_mut().take(len) {
        *d = (idx % m as u64) as u8;
        idx /= m as u64;
    }
}

/// True iff every receiver can decode its message from the codeword plus its
/// side information, checked over the whole message space.
///
/// Receiver `i`'s decoder exists iff its message is constant on every class
/// of tuples sharing (codeword, side-information restriction).
pub fn verify_decodable(g: &Digraph, code: &LinearCode, m: u32, t: u32) -> Result<bool> {
    if m < 2 || t < 1 {
        return Err(Error::Precondition("need m >= 2 and t >= 1".into()));
    }
    if code.t != t as usize {
        return Err(Error::Precondition(format!(
            "code has t={}, asked to verify at t={t}",
            code.t
        )));
    }
    if code.n != g.n() {
        return Err(Error::Precondition("code and graph disagree on n".into()));
    }
    if let Ring::Mod(s) = code.ring {
        if s != m {
            return Err(Error::Precondition(format!("code is pinned to ring Z_{s}, not Z_{m}")));
        }
    }
    let n = g.n();
    let slots = n * t as usize;
    let total = states(n, m, t)?;

    // One map per receiver: (codeword, side info) -> own message value.
    let mut seen: Vec<HashMap<(u64, u64), u32>> = vec![HashMap::new(); n];
    let mut x = vec![0u8; slots];
    for idx in 0..total {
        digits_of(idx, m, slots, &mut x);
        let mut codeword: u64 = 0;
        for row in &code.rows {
            let mut acc: i32 = 0;
            for (k, &c) in row.iter().enumerate() {
                acc += c as i32 * x[k] as i32;
            }
            codeword = codeword * m as u64 + acc.rem_euclid(m as i32) as u64;
        }
        for i in 0..n {
            let mut side: u64 = 0;
            for j in g.out_nbrs(i).iter() {
                for s in 0..t as usize {
                    side = side * m as u64 + x[j * t as usize + s] as u64;
                }
            }
            let mut own: u32 = 0;
            for s in 0..t as usize {
                own = own * m + x[i * t as usize + s] as u32;
            }
            match seen[i].entry((codeword, side)) {
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert(own);
                }
                std::collections::hash_map::Entry::Occupied(e) => {
                    if *e.get() != own {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Brute-force decodability for an explicit (possibly non-linear) code.
pub fn verify_decodable_general(g: &Digraph, code: &GeneralCode) -> Result<bool> {
    let n = g.n();
    if code.n != n {
        return Err(Error::Precondition("code and graph disagree on n".into()));
    }
    let (m, t) = (code.m, code.t);
    let total = states(n, m, t)?;
    if code.map.len() as u64 != total {
        return Err(Error::Precondition("general code map is not total".into()));
    }
    let slots = n * t as usize;
    let mut seen: Vec<HashMap<(u64, u64), u32>> = vec![HashMap::new(); n];
    let mut x = vec![0u8; slots];
    for idx in 0..total {
        digits_of(idx, m, slots, &mut x);
        let codeword = code.map[idx as usize] as u64;
        for i in 0..n {
            let mut side: u64 = 0;
            for j in g.out_nbrs(i).iter() {
                for s in 0..t as usize {
                    side = side * m as u64 + x[j * t as usize + s] as u64;
                }
            }
            let mut own: u32 = 0;
            for s in 0..t as usize {
                own = own * m + x[i * t as usize + s] as u32;
            }
            match seen[i].entry((codeword, side)) {
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert(own);
                }
                std::collections::hash_map::Entry::Occupied(e) => {
                    if *e.get() != own {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// The cyclic code on a directed cycle `c_0 -> c_1 -> ... -> c_{L-1} -> c_0`:
/// rows `X_{c_0}+X_{c_1}, ..., X_{c_{L-2}}+X_{c_{L-1}}`, length `L - 1`.
///
/// Works over every ring, on any graph containing the cycle.
pub fn cycle_code(cycle: &[usize], n: usize) -> Result<LinearCode> {
    if cycle.len() < 2 {
        return Err(Error::CycleTooShort(cycle.len()));
    }
    Ok(LinearCode::scalar_from_rows(
        n,
        cycle.windows(2).map(|w| [w[0], w[1]]),
    ))
}

// ---------------------------------------------------------------------------
// Interlinked cycles
// ---------------------------------------------------------------------------

/// Counts directed `i -> j` paths whose internal vertices all avoid
/// `forbidden`, stopping at `cap`.
fn count_avoiding_paths(g: &Digraph, i: usize, j: usize, forbidden: VertexSet, cap: usize) -> usize {
    fn dfs(
        g: &Digraph,
        cur: usize,
        target: usize,
        forbidden: VertexSet,
        used: &mut VertexSet,
        cap: usize,
        count: &mut usize,
    ) {
        for next in g.out_nbrs(cur).iter() {
            if *count >= cap {
                return;
            }
            if next == target {
                *count += 1;
                continue;
            }
            if forbidden.contains(next) || used.contains(next) {
                continue;
            }
            used.insert(next);
            dfs(g, next, target, forbidden, used, cap, count);
            used.remove(next);
        }
    }
    let mut count = 0;
    let mut used = VertexSet::single(i);
    dfs(g, i, j, forbidden, &mut used, cap, &mut count);
    count
}

/// Checks the two interlinked-cycle conditions for the inner set:
/// no directed cycle meets the inner set in exactly one vertex, and every
/// ordered inner pair is joined by exactly one path whose internal vertices
/// stay outside the inner set.
pub fn is_interlinked_cycle(g: &Digraph, inner: VertexSet) -> bool {
    if inner.is_empty() || !inner.is_subset_of(VertexSet::full(g.n())) {
        return false;
    }
    // Condition 1: a cycle containing exactly one inner vertex v is a cycle
    // through v in the graph with the other inner vertices deleted.
    for v in inner.iter() {
        let within = VertexSet::full(g.n()).minus(inner).union(VertexSet::single(v));
        if g.find_cycle_through(VertexSet::single(v)).is_some()
            && cycle_through_within(g, v, within)
        {
            return false;
        }
    }
    // Condition 2: unique inner-avoiding path for each ordered pair.
    for i in inner.iter() {
        for j in inner.iter() {
            if i != j && count_avoiding_paths(g, i, j, inner, 2) != 1 {
                return false;
            }
        }
    }
    true
}

fn cycle_through_within(g: &Digraph, v: usize, within: VertexSet) -> bool {
    // A cycle through v using only vertices of `within`: a path from some
    // out-neighbour of v back to v.
    fn reach(g: &Digraph, cur: usize, target: usize, within: VertexSet, seen: &mut VertexSet) -> bool {
        if cur == target {
            return true;
        }
        for next in g.out_nbrs(cur).iter() {
            if within.contains(next) && !seen.contains(next) {
                seen.insert(next);
                if reach(g, next, target, within, seen) {
                    return true;
                }
            }
        }
        false
    }
    for start in g.out_nbrs(v).iter() {
        if within.contains(start) {
            let mut seen = VertexSet::single(start);
            if reach(g, start, v, within, &mut seen) {
                return true;
            }
        }
    }
    false
}

/// Validates a super-vertex set: pairwise mutually adjacent, identical
/// external in- and out-neighbourhoods. Returns the contracted graph, the
/// map `new -> old` (the super vertex maps to its smallest member), and the
/// new label of the super vertex.
pub fn contract_super_vertex(g: &Digraph, vs: VertexSet) -> Result<(Digraph, Vec<usize>, usize)> {
    if vs.len() < 2 {
        return Err(Error::BadSuperVertex("need at least two vertices".into()));
    }
    let members: Vec<usize> = vs.iter().collect();
    for &i in &members {
        for &j in &members {
            if i != j && !g.has_arc(i, j) {
                return Err(Error::BadSuperVertex(format!(
                    "vertices {} and {} are not mutually adjacent",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let rep = members[0];
    let out0 = g.out_nbrs(rep).minus(vs);
    let in0 = g.in_nbrs(rep).minus(vs);
    for &i in &members[1..] {
        if g.out_nbrs(i).minus(vs) != out0 || g.in_nbrs(i).minus(vs) != in0 {
            return Err(Error::BadSuperVertex(format!(
                "vertex {} has different external connections than vertex {}",
                i + 1,
                rep + 1
            )));
        }
    }
    // Dense relabelling of (V \ vs) + {rep}.
    let keep = VertexSet::full(g.n()).minus(vs).union(VertexSet::single(rep));
    let new_to_old: Vec<usize> = keep.iter().collect();
    let mut old_to_new = vec![usize::MAX; g.n()];
    for (new, &old) in new_to_old.iter().enumerate() {
        old_to_new[old] = new;
    }
    let p = old_to_new[rep];
    let mut h = Digraph::empty(new_to_old.len())?;
    for (a, &i) in new_to_old.iter().enumerate() {
        for (b, &j) in new_to_old.iter().enumerate() {
            if a == b {
                continue;
            }
            let has = if i == rep {
                out0.contains(j)
            } else if j == rep {
                in0.contains(i)
            } else {
                g.has_arc(i, j)
            };
            if has {
                h.add_arc(a, b)?;
            }
        }
    }
    Ok((h, new_to_old, p))
}

/// The interlinked-cycle cover code: one row summing the inner set, plus one
/// row `X_j + sum of X over the out-neighbourhood` for every other vertex.
/// Length is `|V| - |inner| + 1`.
///
/// With a super-vertex set, the contracted graph must be interlinked and the
/// super vertex's symbol expands back to the sum over its members. A receiver
/// outside the inner set with no out-neighbours gets the degenerate row `X_j`.
pub fn interlinked_cycle_code(
    g: &Digraph,
    inner: VertexSet,
    super_vertices: Option<VertexSet>,
) -> Result<LinearCode> {
    match super_vertices {
        None => {
            if !is_interlinked_cycle(g, inner) {
                return Err(Error::NotInterlinked(format!(
                    "inner set {inner:?} violates an interlinked-cycle condition"
                )));
            }
            let mut rows: Vec<Vec<usize>> = vec![inner.iter().collect()];
            for j in g.vertices() {
                if !inner.contains(j) {
                    let mut row = vec![j];
                    row.extend(g.out_nbrs(j).iter());
                    rows.push(row);
                }
            }
            Ok(LinearCode::scalar_from_rows(g.n(), rows))
        }
        Some(vs) => {
            if inner.intersects(vs) {
                return Err(Error::BadSuperVertex(
                    "inner set must not meet the super-vertex set".into(),
                ));
            }
            let (h, new_to_old, p) = contract_super_vertex(g, vs)?;
            let inner_h = VertexSet::from_iter(
                inner.iter().map(|v| new_to_old.iter().position(|&o| o == v).unwrap()),
            );
            if !is_interlinked_cycle(&h, inner_h) {
                return Err(Error::NotInterlinked(
                    "contracted graph violates an interlinked-cycle condition".into(),
                ));
            }
            let expand = |v: usize| -> Vec<usize> {
                if v == p {
                    vs.iter().collect()
                } else {
                    vec![new_to_old[v]]
                }
            };
            let mut rows: Vec<Vec<usize>> = Vec::new();
            rows.push(inner_h.iter().flat_map(expand).collect());
            for j in h.vertices() {
                if !inner_h.contains(j) {
                    let mut row = expand(j);
                    for k in h.out_nbrs(j).iter() {
                        row.extend(expand(k));
                    }
                    rows.push(row);
                }
            }
            Ok(LinearCode::scalar_from_rows(g.n(), rows))
        }
    }
}

// ---------------------------------------------------------------------------
// Optimal construction when the MAIS gap is at most two
// ---------------------------------------------------------------------------

/// Builds a scalar linear code of length exactly `mais(g)` whenever
/// `mais(g) >= n - 2`, decodable over `Z_m` for every `m`.
///
/// Cases: acyclic graphs send everything uncoded; a gap of one codes a single
/// cycle; a gap of two codes either two vertex-disjoint cycles or the
/// tri-cycle structure, plus uncoded rows for the untouched vertices. A
/// ring-balanced structure is coded as a plain {0,1} interlinked-cycle
/// cover; when only unbalanced structures exist, the non-hub rows switch to
/// telescoping form `X_j - sum X_next`, which decodes over every ring
/// regardless of branch parities.
pub fn mais_achieving_code(g: &Digraph) -> Result<LinearCode> {
    let n = g.n();
    let (mais, _) = crate::bounds::mais(g);
    if mais + 2 < n {
        return Err(Error::Precondition(format!(
            "mais = {mais} < n - 2 = {}",
            n - 2
        )));
    }
    if mais == n {
        return Ok(LinearCode::identity(n));
    }
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut covered = VertexSet::EMPTY;
    if mais + 1 == n {
        let cycle = g.find_cycle().expect("mais < n implies a cycle");
        push_cycle_rows(&cycle, &mut rows, &mut covered);
    } else if let Some((c1, c2)) = crate::structure::find_two_disjoint_cycles(g) {
        push_cycle_rows(&c1, &mut rows, &mut covered);
        push_cycle_rows(&c2, &mut rows, &mut covered);
    } else if let Some(tc) = crate::structure::find_tri_cycle(g) {
        let (sub, new_to_old) = tc.subgraph();
        let inner = VertexSet::from_iter(
            tc.hubs.iter().map(|&h| new_to_old.iter().position(|&o| o == h).unwrap()),
        );
        let code = interlinked_cycle_code(&sub, inner, None)?;
        for row in &code.rows {
            rows.push(
                row.iter()
                    .enumerate()
                    .filter(|&(_, &c)| c != 0)
                    .map(|(k, _)| new_to_old[k])
                    .collect(),
            );
        }
        covered = VertexSet::from_iter(new_to_old.iter().copied());
    } else {
        let tc = crate::structure::find_tri_cycle_any(g).ok_or_else(|| {
            Error::Precondition(
                "gap-two graph without two disjoint cycles must contain the tri-cycle structure"
                    .into(),
            )
        })?;
        let signed = signed_tri_cycle_code(&tc, n);
        covered = tc.vertex_set();
        let mut full_rows = signed.rows;
        for v in g.vertices() {
            if !covered.contains(v) {
                let mut row = vec![0i8; n];
                row[v] = 1;
                full_rows.push(row);
            }
        }
        let code = LinearCode { n, t: 1, ring: Ring::Any, rows: full_rows };
        debug_assert_eq!(code.p(), mais);
        return Ok(code);
    }
    for v in g.vertices() {
        if !covered.contains(v) {
            rows.push(vec![v]);
        }
    }
    let code = LinearCode::scalar_from_rows(n, rows);
    debug_assert_eq!(code.p(), mais);
    Ok(code)
}

/// The telescoping cover of a tri-cycle structure: the hub-sum row plus
/// `X_j - sum of X over the structure successors` for every other structure
/// vertex. Receiver-side back-substitution then needs no sign cancellation,
/// so the code decodes over every ring even for unbalanced structures.
fn signed_tri_cycle_code(tc: &crate::structure::TriCycle, n: usize) -> LinearCode {
    let (sub, new_to_old) = tc.subgraph();
    let hub_set = VertexSet::from_iter(tc.hubs.iter().copied());
    let mut rows: Vec<Vec<i8>> = Vec::new();
    let mut hub_row = vec![0i8; n];
    for &h in &tc.hubs {
        hub_row[h] = 1;
    }
    rows.push(hub_row);
    for j in sub.vertices() {
        let old = new_to_old[j];
        if hub_set.contains(old) {
            continue;
        }
        let mut row = vec![0i8; n];
        row[old] = 1;
        for k in sub.out_nbrs(j).iter() {
            row[new_to_old[k]] = -1;
        }
        rows.push(row);
    }
    LinearCode { n, t: 1, ring: Ring::Any, rows }
}

fn push_cycle_rows(cycle: &[usize], rows: &mut Vec<Vec<usize>>, covered: &mut VertexSet) {
    for w in cycle.windows(2) {
        rows.push(vec![w[0], w[1]]);
    }
    for &v in cycle {
        covered.insert(v);
    }
}

// ---------------------------------------------------------------------------
// Length-2 codes for dense five-vertex graphs
// ---------------------------------------------------------------------------

/// Finds a 2-row {0,1} code for a five-vertex graph with `mais = 2` outside
/// the exceptional set.
///
/// Primary route: scan the fixed catalog in derivation order for an entry
/// isomorphic to an arc-deleted subgraph of `g` and lift its code through
/// the first matching relabelling. Fallback: exhaustive 2-row search over
/// {0,1} coefficient matrices, certified at `m = 2..=5`; the audit asserts
/// the fallback never fires on surveyed classes.
pub fn length_two_code(g: &Digraph) -> Result<(LinearCode, &'static str)> {
    if g.n() != 5 {
        return Err(Error::Precondition("length-2 construction is for 5-vertex graphs".into()));
    }
    for entry in crate::atlas::catalog() {
        if let Some(map) = embeds_as_arc_subgraph(&entry.graph, g) {
            let rows: Vec<Vec<usize>> = entry
                .code_rows
                .iter()
                .map(|row| row.iter().map(|&i| map[i]).collect())
                .collect();
            return Ok((LinearCode::scalar_from_rows(5, rows), entry.name));
        }
    }
    // Exhaustive fallback: all non-trivial 2-row subsets, smaller row first.
    for r1 in 1u32..32 {
        for r2 in r1..32 {
            let rows: Vec<Vec<usize>> = [r1, r2]
                .iter()
                .map(|&m| (0..5).filter(|&i| m >> i & 1 == 1).collect())
                .collect();
            let code = LinearCode::scalar_from_rows(5, rows);
            if (2..=5).try_fold(true, |ok, m| {
                Ok::<_, Error>(ok && verify_decodable(g, &code, m, 1)?)
            })? {
                return Ok((code, "exhaustive"));
            }
        }
    }
    // Wider guard: coefficients {0,1,2}. The audit shows this never fires on
    // surveyed classes.
    let decode3 = |mut v: u32| -> Vec<i8> {
        (0..5)
            .map(|_| {
                let d = (v % 3) as i8;
                v /= 3;
                d
            })
            .collect()
    };
    for r1 in 1u32..243 {
        for r2 in r1..243 {
            let code =
                LinearCode { n: 5, t: 1, ring: Ring::Any, rows: vec![decode3(r1), decode3(r2)] };
            if (2..=5).try_fold(true, |ok, m| {
                Ok::<_, Error>(ok && verify_decodable(g, &code, m, 1)?)
            })? {
                return Ok((code, "exhaustive-wide"));
            }
        }
    }
    Err(Error::NoLengthTwoCode)
}

/// First vertex bijection (in lexicographic order) carrying every arc of
/// `small` onto an arc of `host`.
pub fn embeds_as_arc_subgraph(small: &Digraph, host: &Digraph) -> Option<Vec<usize>> {
    if small.n() != host.n() {
        return None;
    }
    let n = small.n();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if small.arcs().all(|(i, j)| host.has_arc(perm[i], perm[j])) {
            return Some(perm);
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

// ---------------------------------------------------------------------------
// Concatenation
// ---------------------------------------------------------------------------

/// Stacks two codes for the same graph into a vector code with
/// `t = t1 + t2` and `p = p1 + p2`; the first acts on the leading slots.
pub fn concatenate(c1: &LinearCode, c2: &LinearCode) -> Result<LinearCode> {
    if c1.n != c2.n {
        return Err(Error::ConcatMismatch(format!("n = {} vs {}", c1.n, c2.n)));
    }
    let ring = match (c1.ring, c2.ring) {
        (Ring::Any, r) | (r, Ring::Any) => r,
        (Ring::Mod(a), Ring::Mod(b)) if a == b => Ring::Mod(a),
        (Ring::Mod(a), Ring::Mod(b)) => {
            return Err(Error::ConcatMismatch(format!("ring Z_{a} vs Z_{b}")));
        }
    };
    let n = c1.n;
    let t = c1.t + c2.t;
    let mut rows = Vec::with_capacity(c1.p() + c2.p());
    for row in &c1.rows {
        let mut v = vec![0i8; n * t];
        for i in 0..n {
            for s in 0..c1.t {
                v[i * t + s] = row[i * c1.t + s];
            }
        }
        rows.push(v);
    }
    for row in &c2.rows {
        let mut v = vec![0i8; n * t];
        for i in 0..n {
            for s in 0..c2.t {
                v[i * t + c1.t + s] = row[i * c2.t + s];
            }
        }
        rows.push(v);
    }
    Ok(LinearCode { n, t, ring, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas;
    use crate::digraph::Digraph;

    #[test]
    fn identity_code_always_decodes() {
        let g = Digraph::from_arcs_1based(3, &[(1, 2)]).unwrap();
        assert!(verify_decodable(&g, &LinearCode::identity(3), 2, 1).unwrap());
    }

    #[test]
    fn single_sum_on_edge_decodes() {
        let edge = Digraph::from_arcs_1based(2, &[(1, 2), (2, 1)]).unwrap();
        let code = LinearCode::scalar_from_rows(2, [[0, 1]]);
        assert!(verify_decodable(&edge, &code, 2, 1).unwrap());
    }

    #[test]
    fn single_sum_without_side_information_fails() {
        let arcless = Digraph::empty(2).unwrap();
        let code = LinearCode::scalar_from_rows(2, [[0, 1]]);
        assert!(!verify_decodable(&arcless, &code, 2, 1).unwrap());
    }

    #[test]
    fn cycle_code_shape() {
        let c2 = cycle_code(&[0, 1], 2).unwrap();
        assert_eq!(c2.rows, vec![vec![1, 1]]);

        let c3 = cycle_code(&[0, 1, 2], 3).unwrap();
        assert_eq!(c3.rows, vec![vec![1, 1, 0], vec![0, 1, 1]]);

        let c5 = cycle_code(&[0, 1, 2, 3, 4], 5).unwrap();
        assert_eq!(c5.p(), 4);

        assert!(cycle_code(&[0], 3).is_err());
    }

    #[test]
    fn cycle_code_decodes_on_its_cycle_for_all_small_rings() {
        let g = Digraph::from_arcs_1based(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let code = cycle_code(&[0, 1, 2, 3], 4).unwrap();
        for m in 2..=5 {
            assert!(verify_decodable(&g, &code, m, 1).unwrap(), "m={m}");
        }
    }

    #[test]
    fn any_cycle_is_interlinked_on_two_vertices() {
        let g = Digraph::from_arcs_1based(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap();
        assert!(is_interlinked_cycle(&g, VertexSet::from_iter([3, 4])));
        assert!(is_interlinked_cycle(&g, VertexSet::from_iter([0, 2])));
    }

    #[test]
    fn clique_is_interlinked_on_all_vertices() {
        let mut g = Digraph::empty(4).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    g.add_arc(i, j).unwrap();
                }
            }
        }
        assert!(is_interlinked_cycle(&g, VertexSet::full(4)));
        let code = interlinked_cycle_code(&g, VertexSet::full(4), None).unwrap();
        assert_eq!(code.rows, vec![vec![1, 1, 1, 1]]);
    }

    #[test]
    fn dense_catalog_graph_is_interlinked() {
        assert!(is_interlinked_cycle(&atlas::g0_2b(), VertexSet::from_iter([0, 1, 2, 3])));
    }

    #[test]
    fn interlinked_code_matches_catalog_listings() {
        let code = interlinked_cycle_code(&atlas::g0_2b(), VertexSet::from_iter([0, 1, 2, 3]), None)
            .unwrap();
        assert_eq!(code.rows, vec![vec![1, 1, 1, 1, 0], vec![1, 1, 0, 0, 1]]);

        let code = interlinked_cycle_code(
            &atlas::g0_3c(),
            VertexSet::from_iter([0, 1, 2]),
            Some(VertexSet::from_iter([3, 4])),
        )
        .unwrap();
        assert_eq!(code.rows, vec![vec![1, 1, 1, 0, 0], vec![1, 0, 0, 1, 1]]);

        let code = interlinked_cycle_code(
            &atlas::g3_3(),
            VertexSet::from_iter([3, 4]),
            Some(VertexSet::from_iter([0, 1, 2])),
        )
        .unwrap();
        assert_eq!(code.rows, vec![vec![0, 0, 0, 1, 1], vec![1, 1, 1, 1, 0]]);
    }

    #[test]
    fn interlinked_code_length_matches_inner_set() {
        let g = atlas::g3_4b();
        let inner = VertexSet::from_iter([0, 1, 2, 3]);
        let code = interlinked_cycle_code(&g, inner, None).unwrap();
        assert_eq!(code.p(), g.n() - inner.len() + 1);
        assert_eq!(code.rows, vec![vec![1, 1, 1, 1, 0], vec![0, 1, 1, 0, 1]]);
    }

    #[test]
    fn path_uniqueness_is_enforced() {
        // The fourth catalog-2 graph has both a direct arc and a detour
        // between an ordered inner pair, so the strict uniqueness condition
        // fails even though its listed code happens to decode.
        assert!(!is_interlinked_cycle(&atlas::g4_4(), VertexSet::from_iter([0, 1, 2, 3])));
    }

    #[test]
    fn super_vertex_validation_rejects_bad_sets() {
        // {1,2} in the three-cycle is not mutually adjacent.
        let g = Digraph::from_arcs_1based(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(matches!(
            contract_super_vertex(&g, VertexSet::from_iter([0, 1])),
            Err(Error::BadSuperVertex(_))
        ));
    }

    #[test]
    fn mais_achieving_code_identity_case() {
        let g = Digraph::from_arcs_1based(4, &[(1, 2), (2, 3), (1, 4)]).unwrap();
        let code = mais_achieving_code(&g).unwrap();
        assert_eq!(code, LinearCode::identity(4));
    }

    #[test]
    fn mais_achieving_code_single_cycle_plus_isolated() {
        let g = Digraph::from_arcs_1based(5, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(crate::bounds::mais(&g).0, 4);
        let code = mais_achieving_code(&g).unwrap();
        assert_eq!(code.p(), 4);
        for m in 2..=3 {
            assert!(verify_decodable(&g, &code, m, 1).unwrap());
        }
    }

    #[test]
    fn mais_achieving_code_two_disjoint_cycles() {
        let g = Digraph::from_arcs_1based(4, &[(1, 2), (2, 1), (3, 4), (4, 3)]).unwrap();
        let code = mais_achieving_code(&g).unwrap();
        assert_eq!(code.p(), 2);
        assert!(verify_decodable(&g, &code, 2, 1).unwrap());
    }

    #[test]
    fn length_two_codes_for_named_graphs() {
        let (code, entry) = length_two_code(&atlas::g0_4e()).unwrap();
        assert_eq!(entry, "G0.4e");
        assert_eq!(code.rows, vec![vec![1, 1, 1, 0, 0], vec![1, 0, 0, 1, 1]]);

        // The first catalog entry already embeds in G4.4 under the identity,
        // and its lifted code coincides with G4.4's own listed code.
        let (code, entry) = length_two_code(&atlas::g4_4()).unwrap();
        assert_eq!(entry, "G0.2b");
        assert_eq!(code.rows, vec![vec![1, 1, 1, 1, 0], vec![1, 1, 0, 0, 1]]);
        assert!(verify_decodable(&atlas::g4_4(), &code, 2, 1).unwrap());

        let (code, entry) = length_two_code(&atlas::g3_5c()).unwrap();
        assert_eq!(entry, "G3.5c");
        assert_eq!(code.rows, vec![vec![1, 1, 1, 0, 1], vec![0, 0, 0, 1, 1]]);
        assert!(verify_decodable(&atlas::g3_5c(), &code, 2, 1).unwrap());
    }

    #[test]
    fn concatenate_identity_pair() {
        let c = concatenate(&LinearCode::identity(2), &LinearCode::identity(2)).unwrap();
        assert_eq!((c.t, c.p()), (2, 4));
    }

    #[test]
    fn concatenate_cycle_codes() {
        let cc = cycle_code(&[0, 1, 2], 3).unwrap();
        let c = concatenate(&cc, &cc).unwrap();
        assert_eq!((c.t, c.p()), (2, 4));
        let g = Digraph::from_arcs_1based(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(verify_decodable(&g, &c, 2, 2).unwrap());
    }

    #[test]
    fn concatenate_rejects_mismatched_n() {
        assert!(concatenate(&LinearCode::identity(2), &LinearCode::identity(3)).is_err());
    }

    #[test]
    fn code_json_round_trip() {
        let code = atlas::vector_code_b();
        let text = serde_json::to_string(&code).unwrap();
        let back: LinearCode = serde_json::from_str(&text).unwrap();
        assert_eq!(back, code);
        assert!(text.contains("\"ring\":\"any\""));
    }

    #[test]
    fn degenerate_rows_are_reported() {
        let code = LinearCode::scalar_from_rows(5, vec![vec![0, 1, 2, 3], vec![4]]);
        assert_eq!(code.degenerate_rows(), vec![1]);
    }
}
