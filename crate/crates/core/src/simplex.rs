//! Dense exact-rational simplex for credal polytopes.
//!
//! Solves `max c·q` over `{ q >= 0, Σq = 1, q(A_k) <= b_k }` in two phases
//! with Bland's rule, so termination is guaranteed and every value is
//! exact. Phase one introduces a single artificial variable for the
//! normalization equality; its optimum is zero iff the polytope is
//! non-empty.

use crate::rational::Rational;

#[derive(Clone)]
pub(crate) struct Tableau {
    /// Number of original variables (the point masses).
    n: usize,
    /// Total columns currently present (q vars, slacks, artificial while alive).
    cols: usize,
    rows: Vec<Row>,
    /// basis[r] = variable index basic in row r.
    basis: Vec<usize>,
    /// Reduced-cost row: z[j] = c_B B^{-1} A_j - c_j.
    z: Vec<Rational>,
    /// Current objective value.
    zval: Rational,
    /// Artificial column index, while it exists.
    art: Option<usize>,
}

#[derive(Clone)]
struct Row {
    a: Vec<Rational>,
    rhs: Rational,
}

impl Tableau {
    /// Phase one over the polytope; `None` means the polytope is empty.
    /// Constraints are `(member mask, bound)` pairs with bounds in [0, 1].
    pub(crate) fn feasible(n: usize, constraints: &[(u32, Rational)]) -> Option<Tableau> {
        let m = constraints.len();
        let cols = n + m + 1;
        let art = n + m;
        let mut rows = Vec::with_capacity(m + 1);

        // Normalization row: Σq + t = 1.
        let mut eq = vec![Rational::zero(); cols];
        for cell in eq.iter_mut().take(n) {
            *cell = Rational::one();
        }
        eq[art] = Rational::one();
        rows.push(Row {
            a: eq,
            rhs: Rational::one(),
        });

        for (k, (mask, bound)) in constraints.iter().enumerate() {
            let mut a = vec![Rational::zero(); cols];
            for (i, cell) in a.iter_mut().enumerate().take(n) {
                if mask >> i & 1 == 1 {
                    *cell = Rational::one();
                }
            }
            a[n + k] = Rational::one();
            rows.push(Row {
                a,
                rhs: bound.clone(),
            });
        }

        let mut basis = vec![art];
        basis.extend((0..m).map(|k| n + k));

        let mut t = Tableau {
            n,
            cols,
            rows,
            basis,
            z: vec![Rational::zero(); cols],
            zval: Rational::zero(),
            art: Some(art),
        };

        // Maximize -t.
        let mut c = vec![Rational::zero(); cols];
        c[art] = -Rational::one();
        t.price_out(&c);
        t.run();
        if !t.zval.is_zero() {
            return None;
        }
        t.drop_artificial();
        Some(t)
    }

    /// Phase two: maximize `c_q · q` from the feasible basis. Returns the
    /// optimal value; the point is available via [`Tableau::solution`].
    pub(crate) fn maximize(&mut self, c_q: &[Rational]) -> Rational {
        debug_assert!(self.art.is_none());
        debug_assert_eq!(c_q.len(), self.n);
        let mut c = vec![Rational::zero(); self.cols];
        c[..self.n].clone_from_slice(c_q);
        self.price_out(&c);
        self.run();
        self.zval.clone()
    }

    /// Values of the original variables at the current basic solution.
    pub(crate) fn solution(&self) -> Vec<Rational> {
        let mut q = vec![Rational::zero(); self.n];
        for (r, &var) in self.basis.iter().enumerate() {
            if var < self.n {
                q[var] = self.rows[r].rhs.clone();
            }
        }
        q
    }

    fn price_out(&mut self, c: &[Rational]) {
        for (z, cost) in self.z.iter_mut().zip(c) {
            *z = -cost;
        }
        self.zval = Rational::zero();
        for (r, &var) in self.basis.iter().enumerate() {
            let cost = &c[var];
            if cost.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                if !self.rows[r].a[j].is_zero() {
                    let add = cost * &self.rows[r].a[j];
                    self.z[j] += &add;
                }
            }
            self.zval += &(cost * &self.rows[r].rhs);
        }
    }

    fn run(&mut self) {
        loop {
            // Bland: entering column is the smallest improving index.
            let entering = (0..self.cols).find(|&j| self.z[j].is_negative());
            let Some(j) = entering else { return };

            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let coeff = &self.rows[r].a[j];
                if !coeff.is_positive() {
                    continue;
                }
                let ratio = &self.rows[r].rhs / coeff;
                let better = match &leave {
                    None => true,
                    Some((best_r, best)) => {
                        ratio < *best || (ratio == *best && self.basis[r] < self.basis[*best_r])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            // The feasible region is bounded (q lies in the simplex), so a
            // leaving row always exists.
            let (r, _) = leave.expect("credal polytope LP cannot be unbounded");
            self.pivot(r, j);
        }
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let pivot = self.rows[r].a[j].clone();
        debug_assert!(!pivot.is_zero());
        if !pivot.is_one() {
            for v in self.rows[r].a.iter_mut() {
                if !v.is_zero() {
                    *v = &*v / &pivot;
                }
            }
            self.rows[r].rhs = &self.rows[r].rhs / &pivot;
        }
        let pivot_row = self.rows[r].clone();
        for (rr, row) in self.rows.iter_mut().enumerate() {
            if rr == r || row.a[j].is_zero() {
                continue;
            }
            let factor = row.a[j].clone();
            for (v, p) in row.a.iter_mut().zip(&pivot_row.a) {
                if !p.is_zero() {
                    *v -= &(&factor * p);
                }
            }
            row.rhs -= &(&factor * &pivot_row.rhs);
        }
        if !self.z[j].is_zero() {
            let factor = self.z[j].clone();
            for (v, p) in self.z.iter_mut().zip(&pivot_row.a) {
                if !p.is_zero() {
                    *v -= &(&factor * p);
                }
            }
            self.zval -= &(&factor * &pivot_row.rhs);
        }
        self.basis[r] = j;
    }

    /// Pivots the artificial variable out of the basis if needed, then
    /// removes its column. Only valid at a phase-one optimum of zero.
    fn drop_artificial(&mut self) {
        let art = self.art.take().expect("artificial column present");
        if let Some(r) = self.basis.iter().position(|&v| v == art) {
            debug_assert!(self.rows[r].rhs.is_zero());
            match (0..self.cols).find(|&j| j != art && !self.rows[r].a[j].is_zero()) {
                Some(j) => self.pivot(r, j),
                None => {
                    // Redundant zero row.
                    self.rows.remove(r);
                    self.basis.remove(r);
                }
            }
        }
        // The artificial column is the last one, so removal keeps every
        // other variable index stable.
        debug_assert_eq!(art, self.cols - 1);
        for row in &mut self.rows {
            row.a.pop();
        }
        self.z.pop();
        self.cols -= 1;
    }
}
