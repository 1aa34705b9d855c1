//! Dense two-phase simplex, exact over rationals.
//!
//! Instances here are tiny (tens of variables, tens of constraints), so a
//! plain tableau is the right tool: no factorizations, no scaling. Pivoting
//! is Dantzig's rule for speed, demoted to Bland's rule whenever the
//! objective stalls on a run of degenerate pivots, so termination stays
//! guaranteed: any endless run would have an all-degenerate tail, the tail
//! would be played under Bland's rule, and Bland's rule cannot cycle. All
//! antipodality verdicts in the crate reduce to feasibility or optimization
//! calls into this module.

use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint<S> {
    pub coeffs: Vec<S>,
    pub rel: Rel,
    pub rhs: S,
}

/// Domain shared by all decision variables of a program.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarDomain {
    NonNegative,
    /// Free variables are split internally into differences of nonnegative
    /// pairs; callers never see the split.
    Free,
}

#[derive(Clone, Debug)]
pub struct Program<S> {
    num_vars: usize,
    domain: VarDomain,
    constraints: Vec<Constraint<S>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome<S> {
    Optimal { value: S, solution: Vec<S> },
    Infeasible,
    Unbounded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ColKind {
    Structural,
    Slack,
    Artificial,
}

struct Tableau<S> {
    // rows[i] has ncols coefficient entries followed by the rhs.
    rows: Vec<Vec<S>>,
    kinds: Vec<ColKind>,
    basis: Vec<usize>,
}

impl<S: Scalar> Program<S> {
    pub fn new(num_vars: usize, domain: VarDomain) -> Self {
        Program {
            num_vars,
            domain,
            constraints: Vec::new(),
        }
    }

    pub fn push(&mut self, coeffs: Vec<S>, rel: Rel, rhs: S) {
        assert_eq!(coeffs.len(), self.num_vars, "constraint arity mismatch");
        self.constraints.push(Constraint { coeffs, rel, rhs });
    }

    /// Any feasible point, or None.
    pub fn feasible_point(&self) -> Option<Vec<S>> {
        match self.run(None) {
            Outcome::Optimal { solution, .. } => Some(solution),
            _ => None,
        }
    }

    pub fn minimize(&self, objective: &[S]) -> Outcome<S> {
        assert_eq!(objective.len(), self.num_vars, "objective arity mismatch");
        self.run(Some(objective.to_vec()))
    }

    pub fn maximize(&self, objective: &[S]) -> Outcome<S> {
        let neg: Vec<S> = objective.iter().map(|c| -c.clone()).collect();
        match self.minimize(&neg) {
            Outcome::Optimal { value, solution } => Outcome::Optimal {
                value: -value,
                solution,
            },
            other => other,
        }
    }

    /// Column count of the standard form before artificials.
    fn structural_cols(&self) -> usize {
        match self.domain {
            VarDomain::NonNegative => self.num_vars,
            VarDomain::Free => 2 * self.num_vars,
        }
    }

    fn expand_coeffs(&self, coeffs: &[S]) -> Vec<S> {
        match self.domain {
            VarDomain::NonNegative => coeffs.to_vec(),
            VarDomain::Free => {
                let mut row = Vec::with_capacity(2 * coeffs.len());
                for c in coeffs {
                    row.push(c.clone());
                    row.push(-c.clone());
                }
                row
            }
        }
    }

    fn recover_solution(&self, std_solution: &[S]) -> Vec<S> {
        match self.domain {
            VarDomain::NonNegative => std_solution[..self.num_vars].to_vec(),
            VarDomain::Free => (0..self.num_vars)
                .map(|i| std_solution[2 * i].clone() - std_solution[2 * i + 1].clone())
                .collect(),
        }
    }

    fn run(&self, objective: Option<Vec<S>>) -> Outcome<S> {
        let nstruct = self.structural_cols();
        let m = self.constraints.len();

        // Standard form rows: expand frees, fold Ge into Le, sign-normalize
        // the rhs, and attach one slack per inequality. A slack that survives
        // normalization with coefficient +1 seeds the basis; every other row
        // receives an artificial.
        let mut rows: Vec<Vec<S>> = Vec::with_capacity(m);
        let mut kinds: Vec<ColKind> = vec![ColKind::Structural; nstruct];
        let mut needs_artificial: Vec<bool> = Vec::with_capacity(m);
        let mut slack_col: Vec<Option<usize>> = Vec::with_capacity(m);

        for con in &self.constraints {
            let mut coeffs = self.expand_coeffs(&con.coeffs);
            let mut rhs = con.rhs.clone();
            let mut rel = con.rel;
            if rel == Rel::Ge {
                for c in coeffs.iter_mut() {
                    *c = -c.clone();
                }
                rhs = -rhs;
                rel = Rel::Le;
            }
            let mut slack_sign = match rel {
                Rel::Le => Some(S::one()),
                Rel::Eq => None,
                Rel::Ge => unreachable!(),
            };
            if rhs < S::zero() {
                for c in coeffs.iter_mut() {
                    *c = -c.clone();
                }
                rhs = -rhs;
                slack_sign = slack_sign.map(|s| -s);
            }
            let mut row = coeffs;
            let sc = slack_sign.as_ref().map(|sign| {
                kinds.push(ColKind::Slack);
                (kinds.len() - 1, sign.clone())
            });
            slack_col.push(sc.as_ref().map(|(c, _)| *c));
            needs_artificial.push(match &sc {
                Some((_, sign)) => !sign.is_one(),
                None => true,
            });
            row.push(rhs);
            rows.push(row);
        }

        // Materialize slack columns (rows built before total width was known).
        let width_no_art = kinds.len();
        for (i, row) in rows.iter_mut().enumerate() {
            let rhs = row.pop().expect("rhs present");
            row.resize(width_no_art, S::zero());
            if let Some(c) = slack_col[i] {
                let sign = if needs_artificial[i] {
                    -S::one()
                } else {
                    S::one()
                };
                row[c] = sign;
            }
            row.push(rhs);
        }

        // Artificial columns and the initial basis.
        let mut basis = vec![usize::MAX; m];
        let mut art_cols = Vec::new();
        for i in 0..m {
            if needs_artificial[i] {
                kinds.push(ColKind::Artificial);
                art_cols.push(kinds.len() - 1);
            }
        }
        let width = kinds.len();
        let mut next_art = 0;
        for (i, row) in rows.iter_mut().enumerate() {
            let rhs = row.pop().expect("rhs present");
            row.resize(width, S::zero());
            if needs_artificial[i] {
                let c = art_cols[next_art];
                next_art += 1;
                row[c] = S::one();
                basis[i] = c;
            } else {
                basis[i] = slack_col[i].expect("slack basis");
            }
            row.push(rhs);
        }

        let mut tab = Tableau { rows, kinds, basis };

        if !art_cols.is_empty() {
            // Phase 1: minimize the sum of artificials.
            let mut cost = vec![S::zero(); width];
            for &c in &art_cols {
                cost[c] = S::one();
            }
            match tab.optimize(&cost, true) {
                PhaseEnd::Finite(v) if v.is_zero() => {}
                PhaseEnd::Finite(_) => return Outcome::Infeasible,
                PhaseEnd::Unbounded => {
                    unreachable!("phase-1 objective is bounded below by zero")
                }
            }
            tab.evict_artificials();
        }

        let cost = match &objective {
            Some(obj) => {
                let mut c = self.expand_coeffs(obj);
                c.resize(width, S::zero());
                c
            }
            None => vec![S::zero(); width],
        };
        match tab.optimize(&cost, false) {
            PhaseEnd::Unbounded => Outcome::Unbounded,
            PhaseEnd::Finite(value) => {
                let std = tab.basic_solution(width);
                Outcome::Optimal {
                    value,
                    solution: self.recover_solution(&std),
                }
            }
        }
    }
}

enum PhaseEnd<S> {
    Finite(S),
    Unbounded,
}

impl<S: Scalar> Tableau<S> {
    fn ncols(&self) -> usize {
        self.kinds.len()
    }

    /// One simplex phase. The entering column is the most negative reduced
    /// cost (lowest index on ties) until STALL_LIMIT consecutive degenerate
    /// pivots, after which the run continues under Bland's lowest-index rule
    /// until the objective moves again. Leaving row breaks ratio ties by
    /// lowest basic column index. `allow_artificial` keeps artificial
    /// columns eligible during phase 1; afterwards they are frozen out.
    fn optimize(&mut self, cost: &[S], allow_artificial: bool) -> PhaseEnd<S> {
        const STALL_LIMIT: u32 = 16;
        let mut stalls: u32 = 0;
        loop {
            let reduced = self.reduced_costs(cost);
            let bland = stalls >= STALL_LIMIT;
            let mut entering: Option<usize> = None;
            for j in 0..self.ncols() {
                if !reduced[j].is_negative()
                    || (!allow_artificial && self.kinds[j] == ColKind::Artificial)
                    || self.basis.contains(&j)
                {
                    continue;
                }
                if bland {
                    entering = Some(j);
                    break;
                }
                match entering {
                    Some(e) if reduced[j].total_cmp(&reduced[e]) != std::cmp::Ordering::Less => {}
                    _ => entering = Some(j),
                }
            }
            let Some(j) = entering else {
                return PhaseEnd::Finite(self.objective_value(cost));
            };
            let Some(r) = self.leaving_row(j) else {
                return PhaseEnd::Unbounded;
            };
            stalls = if self.rows[r][self.ncols()].is_zero() {
                stalls.saturating_add(1)
            } else {
                0
            };
            self.pivot(r, j);
        }
    }

    fn reduced_costs(&self, cost: &[S]) -> Vec<S> {
        let rhs_col = self.ncols();
        let mut d = cost.to_vec();
        for (i, &b) in self.basis.iter().enumerate() {
            if cost[b].is_zero() {
                continue;
            }
            let cb = cost[b].clone();
            for j in 0..rhs_col {
                if self.rows[i][j].is_zero() {
                    continue;
                }
                let v = d[j].clone() - cb.clone() * self.rows[i][j].clone();
                d[j] = v;
            }
        }
        d
    }

    fn objective_value(&self, cost: &[S]) -> S {
        let rhs_col = self.ncols();
        let mut z = S::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            z = z + cost[b].clone() * self.rows[i][rhs_col].clone();
        }
        z
    }

    fn leaving_row(&self, j: usize) -> Option<usize> {
        let rhs_col = self.ncols();
        let mut best: Option<(usize, S)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            if row[j] <= S::zero() {
                continue;
            }
            let ratio = row[rhs_col].clone() / row[j].clone();
            best = match best {
                None => Some((i, ratio)),
                Some((bi, br)) => match ratio.total_cmp(&br) {
                    std::cmp::Ordering::Less => Some((i, ratio)),
                    std::cmp::Ordering::Equal if self.basis[i] < self.basis[bi] => Some((i, ratio)),
                    _ => Some((bi, br)),
                },
            };
        }
        best.map(|(i, _)| i)
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let rhs_col = self.ncols();
        let inv = self.rows[r][j].clone();
        for c in 0..=rhs_col {
            let v = self.rows[r][c].clone() / inv.clone();
            self.rows[r][c] = v;
        }
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][j].is_zero() {
                continue;
            }
            let f = self.rows[i][j].clone();
            for c in 0..=rhs_col {
                let v = self.rows[i][c].clone() - f.clone() * self.rows[r][c].clone();
                self.rows[i][c] = v;
            }
        }
        self.basis[r] = j;
    }

    /// After a zero-cost phase 1, pivot leftover basic artificials onto any
    /// structural or slack column; rows with no such column are redundant
    /// constraints and are dropped.
    fn evict_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.kinds[self.basis[i]] != ColKind::Artificial {
                i += 1;
                continue;
            }
            let col = (0..self.ncols())
                .find(|&j| self.kinds[j] != ColKind::Artificial && !self.rows[i][j].is_zero());
            match col {
                Some(j) => {
                    self.pivot(i, j);
                    i += 1;
                }
                None => {
                    self.rows.remove(i);
                    self.basis.remove(i);
                }
            }
        }
    }

    fn basic_solution(&self, width: usize) -> Vec<S> {
        let rhs_col = self.ncols();
        let mut x = vec![S::zero(); width];
        for (i, &b) in self.basis.iter().enumerate() {
            x[b] = self.rows[i][rhs_col].clone();
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, Rational};

    fn p(n: usize, domain: VarDomain) -> Program<Rational> {
        Program::new(n, domain)
    }

    fn r(vals: &[(i64, i64)]) -> Vec<Rational> {
        vals.iter().map(|&(a, b)| rat(a, b)).collect()
    }

    #[test]
    fn minimize_simple() {
        // min x + y subject to x + y >= 2, x,y >= 0.
        let mut lp = p(2, VarDomain::NonNegative);
        lp.push(r(&[(1, 1), (1, 1)]), Rel::Ge, rat(2, 1));
        match lp.minimize(&r(&[(1, 1), (1, 1)])) {
            Outcome::Optimal { value, solution } => {
                assert_eq!(value, rat(2, 1));
                assert_eq!(solution[0].clone() + solution[1].clone(), rat(2, 1));
            }
            other => panic!("expected optimum, got {:?}", other),
        }
    }

    #[test]
    fn detects_infeasible() {
        let mut lp = p(1, VarDomain::NonNegative);
        lp.push(r(&[(1, 1)]), Rel::Le, rat(-1, 1));
        assert_eq!(lp.minimize(&r(&[(0, 1)])), Outcome::Infeasible);
        assert!(lp.feasible_point().is_none());
    }

    #[test]
    fn detects_unbounded() {
        let mut lp = p(1, VarDomain::NonNegative);
        lp.push(r(&[(1, 1)]), Rel::Ge, rat(1, 1));
        assert_eq!(lp.minimize(&r(&[(-1, 1)])), Outcome::Unbounded);
    }

    #[test]
    fn free_variables_go_negative() {
        // min x subject to x >= -5 over a free variable.
        let mut lp = p(1, VarDomain::Free);
        lp.push(r(&[(1, 1)]), Rel::Ge, rat(-5, 1));
        match lp.minimize(&r(&[(1, 1)])) {
            Outcome::Optimal { value, solution } => {
                assert_eq!(value, rat(-5, 1));
                assert_eq!(solution, r(&[(-5, 1)]));
            }
            other => panic!("expected optimum, got {:?}", other),
        }
    }

    #[test]
    fn equality_constraints() {
        // min 2x + 3y subject to x + y = 4, x - y = 0.
        let mut lp = p(2, VarDomain::NonNegative);
        lp.push(r(&[(1, 1), (1, 1)]), Rel::Eq, rat(4, 1));
        lp.push(r(&[(1, 1), (-1, 1)]), Rel::Eq, rat(0, 1));
        match lp.minimize(&r(&[(2, 1), (3, 1)])) {
            Outcome::Optimal { value, solution } => {
                assert_eq!(value, rat(10, 1));
                assert_eq!(solution, r(&[(2, 1), (2, 1)]));
            }
            other => panic!("expected optimum, got {:?}", other),
        }
    }

    #[test]
    fn redundant_equalities_are_dropped() {
        let mut lp = p(2, VarDomain::NonNegative);
        lp.push(r(&[(1, 1), (1, 1)]), Rel::Eq, rat(2, 1));
        lp.push(r(&[(2, 1), (2, 1)]), Rel::Eq, rat(4, 1));
        match lp.minimize(&r(&[(1, 1), (0, 1)])) {
            Outcome::Optimal { value, .. } => assert_eq!(value, rat(0, 1)),
            other => panic!("expected optimum, got {:?}", other),
        }
    }

    #[test]
    fn beale_cycling_instance_terminates() {
        // Classic example that cycles under naive most-negative pivoting;
        // Bland's rule must terminate and reach -1/20.
        let mut lp = p(4, VarDomain::NonNegative);
        lp.push(r(&[(1, 4), (-60, 1), (-1, 25), (9, 1)]), Rel::Le, rat(0, 1));
        lp.push(r(&[(1, 2), (-90, 1), (-1, 50), (3, 1)]), Rel::Le, rat(0, 1));
        lp.push(r(&[(0, 1), (0, 1), (1, 1), (0, 1)]), Rel::Le, rat(1, 1));
        match lp.minimize(&r(&[(-3, 4), (150, 1), (-1, 50), (6, 1)])) {
            Outcome::Optimal { value, solution } => {
                assert_eq!(value, rat(-1, 20));
                assert_eq!(solution, r(&[(1, 25), (0, 1), (1, 1), (0, 1)]));
            }
            other => panic!("expected optimum, got {:?}", other),
        }
    }

    #[test]
    fn separating_direction_shape() {
        // Find u with u . (1,1) = 1 and u . (1,0) <= 0: u = (0,1) works.
        let mut lp = p(2, VarDomain::Free);
        lp.push(r(&[(1, 1), (1, 1)]), Rel::Eq, rat(1, 1));
        lp.push(r(&[(1, 1), (0, 1)]), Rel::Le, rat(0, 1));
        let u = lp.feasible_point().unwrap();
        assert_eq!(u[0].clone() + u[1].clone(), rat(1, 1));
        assert!(u[0] <= rat(0, 1));
    }

    #[test]
    fn maximize_flips_sign_once() {
        let mut lp = p(1, VarDomain::NonNegative);
        lp.push(r(&[(1, 1)]), Rel::Le, rat(7, 2));
        match lp.maximize(&r(&[(1, 1)])) {
            Outcome::Optimal { value, .. } => assert_eq!(value, rat(7, 2)),
            other => panic!("expected optimum, got {:?}", other),
        }
    }

    #[test]
    fn float_mode_agrees_on_well_conditioned_instance() {
        let mut lp: Program<f64> = Program::new(2, VarDomain::NonNegative);
        lp.push(vec![1.0, 1.0], Rel::Ge, 2.0);
        lp.push(vec![1.0, 0.0], Rel::Le, 10.0);
        match lp.minimize(&[3.0, 1.0]) {
            Outcome::Optimal { value, .. } => assert_eq!(value, 2.0),
            other => panic!("expected optimum, got {:?}", other),
        }
    }
}
