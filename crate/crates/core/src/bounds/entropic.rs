//! The Shannon-type entropic lower bound.
//!
//! Ground set `{X_1..X_n, Y}`, one variable `h(S | Y in S)` per subset that
//! contains the codeword symbol; subsets of messages have fixed entropy
//! `|S|` (independent uniform messages, normalised to one unit each). The
//! constraints are the elemental submodularity instances, top monotonicity,
//! and one decodability equality per receiver; the objective minimises
//! `h({Y})`. The optimum is a lower bound on the broadcast rate valid for
//! every message alphabet.
//!
//! Decodability equalities are substituted away (the two variables are
//! merged) before the simplex runs.

use num_traits::{One, Zero};

use super::simplex::{self, Constraint, Lp, Op, Rat};
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Largest order for which the LP is built (2^(n+1) entropy terms).
pub const MAX_LP_N: usize = 6;

/// A built LP instance, with the merge map from subset masks to columns.
pub struct EntropicLp {
    pub lp: Lp,
    /// Column of `h(S + Y)` for each message-subset mask `S`.
    pub var_of_mask: Vec<usize>,
    pub labels: Vec<String>,
}

/// One named dual multiplier of the optimal certificate.
#[derive(Debug, Clone, serde::Serialize)]
pub struct LpCertificate {
    pub value_num: i128,
    pub value_den: i128,
    pub duals: Vec<(String, String)>,
}

impl EntropicLp {
    pub fn build(g: &Digraph) -> Result<EntropicLp> {
        let n = g.n();
        if n > MAX_LP_N {
            return Err(Error::TooLarge(format!("entropic LP supports n <= {MAX_LP_N}")));
        }
        let full: u32 = (1 << n) - 1;

        // Union-find over subset masks: decodability at receiver i merges
        // h(K_i + Y) with h(K_i + {i} + Y).
        let mut parent: Vec<u32> = (0..=full).collect();
        fn find(parent: &mut Vec<u32>, x: u32) -> u32 {
            if parent[x as usize] != x {
                let r = find(parent, parent[x as usize]);
                parent[x as usize] = r;
                r
            } else {
                x
            }
        }
        for i in 0..n {
            let k = g.out_nbrs(i).0 as u32;
            let ki = k | (1 << i);
            let (a, b) = (find(&mut parent, k), find(&mut parent, ki));
            if a != b {
                parent[a.max(b) as usize] = a.min(b);
            }
        }
        let mut var_of_mask = vec![usize::MAX; full as usize + 1];
        let mut num_vars = 0;
        for mask in 0..=full {
            let root = find(&mut parent, mask);
            if var_of_mask[root as usize] == usize::MAX {
                var_of_mask[root as usize] = num_vars;
                num_vars += 1;
            }
            var_of_mask[mask as usize] = var_of_mask[root as usize];
        }

        let one = Rat::one();
        let mut constraints: Vec<Constraint> = Vec::new();
        let mut labels: Vec<String> = Vec::new();
        let push = |coeffs: Vec<(usize, Rat)>, op: Op, rhs: Rat, label: String,
                        constraints: &mut Vec<Constraint>, labels: &mut Vec<String>| {
            // Combine coefficients that merged onto one column.
            let mut combined: std::collections::BTreeMap<usize, Rat> = Default::default();
            for (j, v) in coeffs {
                *combined.entry(j).or_insert_with(Rat::zero) += v;
            }
            combined.retain(|_, v| !v.is_zero());
            if combined.is_empty() {
                return; // trivially satisfied after merging
            }
            constraints.push(Constraint {
                coeffs: combined.into_iter().collect(),
                op,
                rhs,
                label: label.clone(),
            });
            labels.push(label);
        };

        // Adding one message raises entropy by at most one unit:
        // h(T + Y) + 1 >= h(T + j + Y).
        for t in 0..=full {
            for j in 0..n {
                if t >> j & 1 == 0 {
                    let coeffs = vec![
                        (var_of_mask[t as usize], one),
                        (var_of_mask[(t | 1 << j) as usize], -one),
                    ];
                    push(
                        coeffs,
                        Op::Ge,
                        -one,
                        format!("extend m{} | {:b}", j + 1, t),
                        &mut constraints,
                        &mut labels,
                    );
                }
            }
        }
        // Elemental submodularity with the codeword inside the conditioning
        // set: h(T+i+Y) + h(T+j+Y) >= h(T+i+j+Y) + h(T+Y).
        for i in 0..n {
            for j in (i + 1)..n {
                let rest = full & !(1 << i) & !(1 << j);
                let mut t = rest;
                loop {
                    let coeffs = vec![
                        (var_of_mask[(t | 1 << i) as usize], one),
                        (var_of_mask[(t | 1 << j) as usize], one),
                        (var_of_mask[(t | 1 << i | 1 << j) as usize], -one),
                        (var_of_mask[t as usize], -one),
                    ];
                    push(
                        coeffs,
                        Op::Ge,
                        Rat::zero(),
                        format!("submod m{},m{} | {:b}", i + 1, j + 1, t),
                        &mut constraints,
                        &mut labels,
                    );
                    if t == 0 {
                        break;
                    }
                    t = (t - 1) & rest;
                }
            }
        }
        // Top monotonicity: h(all + Y) >= h(all messages) = n, and
        // h(all + Y) >= h(all\{i} + Y).
        push(
            vec![(var_of_mask[full as usize], one)],
            Op::Ge,
            Rat::from_integer(n as i128),
            "mono drop-Y".into(),
            &mut constraints,
            &mut labels,
        );
        for i in 0..n {
            let coeffs = vec![
                (var_of_mask[full as usize], one),
                (var_of_mask[(full & !(1 << i)) as usize], -one),
            ];
            push(
                coeffs,
                Op::Ge,
                Rat::zero(),
                format!("mono drop-m{}", i + 1),
                &mut constraints,
                &mut labels,
            );
        }

        let mut objective = vec![Rat::zero(); num_vars];
        objective[var_of_mask[0]] = one;
        Ok(EntropicLp {
            lp: Lp { num_vars, objective, constraints },
            var_of_mask,
            labels,
        })
    }

    pub fn solve(&self) -> Result<Rat> {
        Ok(simplex::solve_min(&self.lp, false)?.value)
    }

    pub fn solve_with_duals(&self) -> Result<(Rat, Vec<(String, Rat)>)> {
        let sol = simplex::solve_min(&self.lp, true)?;
        let duals = sol.duals.expect("requested");
        let named = self
            .labels
            .iter()
            .cloned()
            .zip(duals)
            .filter(|(_, v)| !v.is_zero())
            .collect();
        Ok((sol.value, named))
    }
}

/// The entropic lower bound on the broadcast rate of `g`, as an exact
/// rational.
pub fn shannon_lower_bound(g: &Digraph) -> Result<Rat> {
    EntropicLp::build(g)?.solve()
}

/// Same bound plus the nonzero dual multipliers, for certificate dumps.
pub fn shannon_lower_bound_with_certificate(g: &Digraph) -> Result<LpCertificate> {
    let (value, duals) = EntropicLp::build(g)?.solve_with_duals()?;
    Ok(LpCertificate {
        value_num: *value.numer(),
        value_den: *value.denom(),
        duals: duals.into_iter().map(|(l, v)| (l, v.to_string())).collect(),
    })
}
