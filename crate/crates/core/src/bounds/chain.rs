//! Hand-auditable replay of the fixed entropy-inequality chain that bounds
//! the broadcast rate of the two generator graphs (and their arc-deleted
//! family) below by 5/2.
//!
//! Every step is either a submodularity instance, which is graph-free, or a
//! decodability equality, which is checked against the actual side
//! information of the graph under its catalog labelling. The telescoped sum
//! of all steps is recomputed symbolically on every call, so the table
//! cannot drift from the conclusion `H(Y) >= 5/2`. This replay is
//! independent of the simplex-based bound.

use std::collections::BTreeMap;

use super::simplex::{rat, Rat};
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Symbolic term: `Q` is one message-entropy unit, `H(mask)` is the joint
/// entropy of the codeword with the messages in `mask` (1-based vertex v is
/// bit v-1).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Term {
    Q,
    H(u32),
}

type Expr = BTreeMap<Term, Rat>;

fn expr(terms: &[(Term, i128)]) -> Expr {
    let mut e = Expr::new();
    for &(t, c) in terms {
        *e.entry(t).or_insert_with(|| rat(0, 1)) += rat(c, 1);
    }
    e
}

/// How a decodability step is licensed.
enum Decode {
    /// Receiver's side information must be contained in the named set
    /// (chain-interior lift steps).
    Subset { receiver: usize, set: u32 },
    /// Receiver's side information must equal the named set (the two
    /// standalone equalities).
    Exact { receiver: usize, set: u32 },
}

/// Replays the certificate chain on `g` (catalog labelling, five vertices).
///
/// Returns `Ok(())` when every step is licensed; otherwise the error names
/// the first failing step. Succeeding implies the exact lower bound
/// `H(Y) >= 5/2` per message unit for `g`.
pub fn verify_entropy_chain(g: &Digraph) -> Result<()> {
    if g.n() != 5 {
        return Err(Error::Precondition("the chain is specific to five receivers".into()));
    }
    use Term::{H, Q};
    // Message-set masks used by the chain (1-based labels {..}):
    // {1,2,5}=19 {1,2,3}=7 {1,2,3,5}=23 {1,2}=3 {4}=8 {1,2,4}=11
    // {1,2,4,5}=27 {2,5}=18 {1,3}=5 {1..5}=31.
    struct Step {
        name: &'static str,
        contributes: Expr,
        decode: Option<Decode>,
    }
    let steps = vec![
        Step {
            name: "independence and monotonicity: 10 <= 2 H(X_all, Y)",
            contributes: expr(&[(H(31), 2), (Q, -10)]),
            decode: None,
        },
        Step {
            name: "submodularity on {1,2,5}+Y and {1,2,3}+Y",
            contributes: expr(&[(H(19), 1), (H(7), 1), (H(23), -1), (H(3), -1)]),
            decode: None,
        },
        Step {
            name: "decodability at receiver 4 with side information within {1,2,3,5}",
            contributes: expr(&[(H(23), 1), (H(31), -1)]),
            decode: Some(Decode::Subset { receiver: 3, set: 0b10111 }),
        },
        Step {
            name: "submodularity on {1,2}+Y and {4}+Y",
            contributes: expr(&[(H(3), 1), (H(8), 1), (H(11), -1), (H(0), -1)]),
            decode: None,
        },
        Step {
            name: "decodability at receiver 5 with side information within {1,2,4}",
            contributes: expr(&[(H(11), 1), (H(27), -1)]),
            decode: Some(Decode::Subset { receiver: 4, set: 0b01011 }),
        },
        Step {
            name: "decodability at receiver 3 with side information within {1,2,4,5}",
            contributes: expr(&[(H(27), 1), (H(31), -1)]),
            decode: Some(Decode::Subset { receiver: 2, set: 0b11011 }),
        },
        Step {
            name: "decodability equality at receiver 1 with side information {2,5}",
            contributes: expr(&[(H(18), 1), (H(19), -1)]),
            decode: Some(Decode::Exact { receiver: 0, set: 0b10010 }),
        },
        Step {
            name: "decodability equality at receiver 2 with side information {1,3}",
            contributes: expr(&[(H(5), 1), (H(7), -1)]),
            decode: Some(Decode::Exact { receiver: 1, set: 0b00101 }),
        },
        Step {
            name: "submodularity closing bound on {2,5}+Y",
            contributes: expr(&[(H(0), 1), (Q, 2), (H(18), -1)]),
            decode: None,
        },
        Step {
            name: "submodularity closing bound on {1,3}+Y",
            contributes: expr(&[(H(0), 1), (Q, 2), (H(5), -1)]),
            decode: None,
        },
        Step {
            name: "submodularity closing bound on {4}+Y",
            contributes: expr(&[(H(0), 1), (Q, 1), (H(8), -1)]),
            decode: None,
        },
    ];

    let mut total = Expr::new();
    for step in &steps {
        if let Some(decode) = &step.decode {
            let (receiver, set, exact) = match decode {
                Decode::Subset { receiver, set } => (*receiver, *set, false),
                Decode::Exact { receiver, set } => (*receiver, *set, true),
            };
            let k = g.out_nbrs(receiver).0 as u32;
            let ok = if exact { k == set } else { k & !set == 0 };
            if !ok {
                return Err(Error::ChainStep {
                    step: step.name.into(),
                    reason: format!(
                        "receiver {} has side information {:?}",
                        receiver + 1,
                        g.out_nbrs(receiver)
                    ),
                });
            }
        }
        for (t, c) in &step.contributes {
            *total.entry(*t).or_insert_with(|| rat(0, 1)) += *c;
        }
    }
    total.retain(|_, v| *v != rat(0, 1));
    // The licensed steps telescope to 2 H(Y) - 5 >= 0, i.e. H(Y) >= 5/2.
    let conclusion = expr(&[(H(0), 2), (Q, -5)]);
    if total != conclusion {
        return Err(Error::ChainStep {
            step: "telescoped sum".into(),
            reason: "steps no longer compose to the 5/2 bound".into(),
        });
    }
    Ok(())
}
