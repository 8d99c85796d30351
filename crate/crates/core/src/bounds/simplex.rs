//! A small exact-rational simplex solver.
//!
//! Dense two-phase tableau over `Ratio<i128>` with Bland's rule, sized for
//! LPs with a few hundred rows. Workspace profiles keep integer overflow
//! checks on, so an overflow panics instead of corrupting a bound.

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = Ratio<i128>;

pub fn rat(n: i128, d: i128) -> Rat {
    Ratio::new(n, d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    /// Sparse coefficients (variable index, value).
    pub coeffs: Vec<(usize, Rat)>,
    pub op: Op,
    pub rhs: Rat,
    pub label: String,
}

/// `min c.x` subject to the constraints and `x >= 0`.
#[derive(Clone, Debug)]
pub struct Lp {
    pub num_vars: usize,
    pub objective: Vec<Rat>,
    pub constraints: Vec<Constraint>,
}

#[derive(Clone, Debug)]
pub struct LpSolution {
    pub value: Rat,
    pub primal: Vec<Rat>,
    /// One multiplier per constraint, in input order; `None` unless requested.
    pub duals: Option<Vec<Rat>>,
}

struct Tableau {
    rows: usize,
    cols: usize,
    a: Vec<Vec<Rat>>,
    b: Vec<Rat>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let piv = self.a[r][c];
        for v in self.a[r].iter_mut() {
            *v /= piv;
        }
        self.b[r] /= piv;
        let br = self.b[r];
        for i in 0..self.rows {
            if i != r && !self.a[i][c].is_zero() {
                let f = self.a[i][c];
                for j in 0..self.cols {
                    let d = f * self.a[r][j];
                    self.a[i][j] -= d;
                }
                self.b[i] -= f * br;
            }
        }
        self.basis[r] = c;
    }

    /// Minimises `cost . x` from the current basic feasible point. Returns
    /// the reduced-cost row at optimality.
    fn run(&mut self, cost: &[Rat], allowed: &[bool]) -> Result<Vec<Rat>> {
        loop {
            // Reduced costs: z_j = cost_j - cost_B . column_j.
            let cost_b: Vec<Rat> = self.basis.iter().map(|&j| cost[j]).collect();
            let mut reduced = cost.to_vec();
            for (i, cb) in cost_b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                for (j, r) in reduced.iter_mut().enumerate() {
                    if !self.a[i][j].is_zero() {
                        *r -= *cb * self.a[i][j];
                    }
                }
            }
            // Bland: smallest index with negative reduced cost.
            let enter = (0..self.cols)
                .find(|&j| allowed[j] && reduced[j].is_negative());
            let Some(enter) = enter else {
                return Ok(reduced);
            };
            // Ratio test, Bland ties by smallest basis variable.
            let mut leave: Option<(usize, Rat)> = None;
            for i in 0..self.rows {
                if self.a[i][enter].is_positive() {
                    let ratio = self.b[i] / self.a[i][enter];
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => {
                            ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((leave, _)) = leave else {
                return Err(Error::Lp("unbounded".into()));
            };
            self.pivot(leave, enter);
        }
    }
}

/// Solves the LP exactly. With `want_duals`, also recovers one multiplier per
/// constraint from the optimal reduced costs (signs follow `A x >= b` /
/// `A x = b` with minimisation: inequality duals are nonnegative).
pub fn solve_min(lp: &Lp, want_duals: bool) -> Result<LpSolution> {
    let n = lp.num_vars;
    let m = lp.constraints.len();

    // Equality form with rhs >= 0. Track per-row sign flips to map duals back.
    // Columns: [x (n)] [surplus (one per Ge)] [artificials].
    let mut surplus_col = vec![usize::MAX; m];
    let mut num_surplus = 0;
    for (i, c) in lp.constraints.iter().enumerate() {
        if c.op == Op::Ge {
            surplus_col[i] = n + num_surplus;
            num_surplus += 1;
        }
    }
    let width = n + num_surplus;
    let mut a = vec![vec![Rat::zero(); width]; m];
    let mut b = vec![Rat::zero(); m];
    let mut flipped = vec![false; m];
    for (i, c) in lp.constraints.iter().enumerate() {
        for &(j, ref v) in &c.coeffs {
            debug_assert!(j < n);
            a[i][j] += *v;
        }
        if c.op == Op::Ge {
            a[i][surplus_col[i]] = -Rat::one();
        }
        b[i] = c.rhs;
        if b[i].is_negative() {
            flipped[i] = true;
            for v in a[i].iter_mut() {
                *v = -*v;
            }
            b[i] = -b[i];
        }
    }

    // Initial basis per row: the surplus column works whenever it can sit at
    // a nonnegative value (flipped rows have coefficient +1; zero-rhs rows
    // tolerate a sign-normalising pivot). Other rows get an artificial.
    let mut basis = vec![usize::MAX; m];
    let mut art_of_row = vec![usize::MAX; m];
    let mut art_cols: Vec<usize> = Vec::new();
    let mut cols = width;
    for i in 0..m {
        if surplus_col[i] != usize::MAX && (flipped[i] || b[i].is_zero()) {
            basis[i] = surplus_col[i];
        } else {
            basis[i] = cols;
            art_of_row[i] = cols;
            art_cols.push(cols);
            cols += 1;
        }
    }
    for (i, row) in a.iter_mut().enumerate() {
        row.resize(cols, Rat::zero());
        if basis[i] >= width {
            row[basis[i]] = Rat::one();
        }
    }

    let mut t = Tableau { rows: m, cols, a, b, basis };
    // Rows whose basis column is off-unit must be normalised first.
    for i in 0..m {
        let c = t.basis[i];
        if !t.a[i][c].is_one() {
            t.pivot(i, c);
        }
    }

    // Phase 1: drive the artificials to zero.
    if !art_cols.is_empty() {
        let mut cost = vec![Rat::zero(); t.cols];
        for &c in &art_cols {
            cost[c] = Rat::one();
        }
        let allowed = vec![true; t.cols];
        t.run(&cost, &allowed)?;
        let p1: Rat = t
            .basis
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c >= width)
            .map(|(i, _)| t.b[i])
            .sum();
        if !p1.is_zero() {
            return Err(Error::Lp("infeasible".into()));
        }
        // Swap lingering zero-level artificials for structural columns where
        // possible; a fully zero row is redundant and stays put, blocked from
        // re-entering by the phase-2 mask.
        for i in 0..m {
            if t.basis[i] >= width {
                if let Some(c) = (0..width).find(|&c| !t.a[i][c].is_zero()) {
                    t.pivot(i, c);
                }
            }
        }
    }

    // Phase 2.
    let mut cost = vec![Rat::zero(); t.cols];
    for (j, v) in lp.objective.iter().enumerate() {
        cost[j] = *v;
    }
    let allowed: Vec<bool> = (0..t.cols).map(|c| c < width).collect();
    let reduced = t.run(&cost, &allowed)?;

    let mut primal = vec![Rat::zero(); n];
    for (i, &c) in t.basis.iter().enumerate() {
        if c < n {
            primal[c] = t.b[i];
        }
    }
    let value: Rat = lp
        .objective
        .iter()
        .zip(&primal)
        .map(|(c, x)| *c * *x)
        .sum();

    // Duals y = c_B B^{-1} read off the reduced costs of the per-row unit
    // columns: an artificial enters the flipped system with coefficient +1
    // (reduced = -y_i), a surplus with coefficient -1 pre-flip. Undo the row
    // flips to express multipliers for the constraints as given.
    let duals = if want_duals {
        let mut y = vec![Rat::zero(); m];
        for i in 0..m {
            let v = if art_of_row[i] != usize::MAX {
                -reduced[art_of_row[i]]
            } else if flipped[i] {
                -reduced[surplus_col[i]]
            } else {
                reduced[surplus_col[i]]
            };
            y[i] = if flipped[i] { -v } else { v };
        }
        Some(y)
    } else {
        None
    };

    Ok(LpSolution { value, primal, duals })
}
