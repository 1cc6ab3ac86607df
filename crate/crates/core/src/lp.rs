//! Exact two-phase simplex with Bland's rule. Variables are nonnegative.

use num_traits::{One, Signed, Zero};

use crate::poly::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
struct Constraint {
    coeffs: Vec<Rational>,
    rel: Relation,
    rhs: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { point: Vec<Rational>, value: Rational },
}

impl LpOutcome {
    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            LpOutcome::Optimal { point, .. } => Some(point),
            _ => None,
        }
    }
}

/// `maximize c·x` subject to linear constraints and `x ≥ 0`.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    nvars: usize,
    constraints: Vec<Constraint>,
    objective: Vec<Rational>,
}

impl LinearProgram {
    pub fn new(nvars: usize) -> Self {
        LinearProgram {
            nvars,
            constraints: Vec::new(),
            objective: vec![Rational::zero(); nvars],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add(&mut self, coeffs: Vec<Rational>, rel: Relation, rhs: Rational) {
        assert_eq!(coeffs.len(), self.nvars);
        self.constraints.push(Constraint { coeffs, rel, rhs });
    }

    pub fn maximize(&mut self, objective: Vec<Rational>) {
        assert_eq!(objective.len(), self.nvars);
        self.objective = objective;
    }

    pub fn minimize(&mut self, objective: Vec<Rational>) {
        self.maximize(objective.into_iter().map(|c| -c).collect());
    }

    pub fn solve(&self) -> LpOutcome {
        let n = self.nvars;
        let m = self.constraints.len();
        let mut rows: Vec<(Vec<Rational>, Relation, Rational)> = self
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    let rel = match c.rel {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (c.coeffs.iter().map(|x| -x).collect(), rel, -&c.rhs)
                } else {
                    (c.coeffs.clone(), c.rel, c.rhs.clone())
                }
            })
            .collect();

        let n_slack = rows.iter().filter(|r| r.1 != Relation::Eq).count();
        let n_art = rows.iter().filter(|r| r.1 != Relation::Le).count();
        let ncols = n + n_slack + n_art;
        let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut is_art = vec![false; ncols];
        let (mut s, mut a) = (n, n + n_slack);
        for (coeffs, rel, rhs) in rows.drain(..) {
            let mut row = vec![Rational::zero(); ncols + 1];
            row[..n].clone_from_slice(&coeffs);
            row[ncols] = rhs;
            match rel {
                Relation::Le => {
                    row[s] = Rational::one();
                    basis.push(s);
                    s += 1;
                }
                Relation::Ge => {
                    row[s] = -Rational::one();
                    s += 1;
                    row[a] = Rational::one();
                    is_art[a] = true;
                    basis.push(a);
                    a += 1;
                }
                Relation::Eq => {
                    row[a] = Rational::one();
                    is_art[a] = true;
                    basis.push(a);
                    a += 1;
                }
            }
            t.push(row);
        }

        if n_art > 0 {
            let cost: Vec<Rational> = (0..ncols)
                .map(|j| if is_art[j] { -Rational::one() } else { Rational::zero() })
                .collect();
            let allowed = vec![true; ncols];
            run_simplex(&mut t, &mut basis, &cost, &allowed);
            let value: Rational = basis
                .iter()
                .enumerate()
                .filter(|(_, &b)| is_art[b])
                .map(|(i, _)| t[i][ncols].clone())
                .sum();
            if value.is_positive() {
                return LpOutcome::Infeasible;
            }
            // Drive zero-level artificials out of the basis or drop their rows.
            let mut i = 0;
            while i < t.len() {
                if is_art[basis[i]] {
                    if let Some(j) = (0..ncols).find(|&j| !is_art[j] && !t[i][j].is_zero()) {
                        pivot(&mut t, &mut basis, i, j);
                    } else {
                        t.remove(i);
                        basis.remove(i);
                        continue;
                    }
                }
                i += 1;
            }
        }

        let mut cost = vec![Rational::zero(); ncols];
        cost[..n].clone_from_slice(&self.objective);
        let allowed: Vec<bool> = (0..ncols).map(|j| !is_art[j]).collect();
        if !run_simplex(&mut t, &mut basis, &cost, &allowed) {
            return LpOutcome::Unbounded;
        }
        let mut point = vec![Rational::zero(); n];
        for (i, &b) in basis.iter().enumerate() {
            if b < n {
                point[b] = t[i][ncols].clone();
            }
        }
        let value = crate::linalg::dot(&point, &self.objective);
        LpOutcome::Optimal { point, value }
    }
}

fn pivot(t: &mut [Vec<Rational>], basis: &mut [usize], r: usize, c: usize) {
    let inv = t[r][c].recip();
    for x in t[r].iter_mut() {
        *x *= &inv;
    }
    let prow = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i != r && !row[c].is_zero() {
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
    }
    basis[r] = c;
}

/// Maximizes `cost·x` from the current basic feasible solution. Returns
/// false when the objective is unbounded.
fn run_simplex(
    t: &mut [Vec<Rational>],
    basis: &mut [usize],
    cost: &[Rational],
    allowed: &[bool],
) -> bool {
    let ncols = cost.len();
    loop {
        let entering = (0..ncols).find(|&j| {
            if !allowed[j] || basis.contains(&j) {
                return false;
            }
            let mut r = cost[j].clone();
            for (i, &b) in basis.iter().enumerate() {
                if !cost[b].is_zero() && !t[i][j].is_zero() {
                    r -= &cost[b] * &t[i][j];
                }
            }
            r.is_positive()
        });
        let Some(j) = entering else { return true };
        let mut best: Option<(usize, Rational)> = None;
        for i in 0..t.len() {
            if t[i][j].is_positive() {
                let ratio = &t[i][ncols] / &t[i][j];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && basis[i] < basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
        }
        let Some((i, _)) = best else { return false };
        pivot(t, basis, i, j);
    }
}

/// Finds `x = Σ λ_s s + Σ μ_f f` with every `λ_s ≥ 1`, free `μ_f`, and
/// `x_i ≥ lower_i` wherever a lower bound is given. With `minimize_max` the
/// largest coordinate is minimized as well.
pub fn cone_point(
    strict: &[Vec<Rational>],
    free: &[Vec<Rational>],
    lower: &[Option<Rational>],
    minimize_max: bool,
) -> Option<Vec<Rational>> {
    let dim = lower.len();
    let ns = strict.len();
    let nf = free.len();
    // Variables: λ (ns), μ⁺ (nf), μ⁻ (nf), t (1).
    let nv = ns + 2 * nf + 1;
    let mut lp = LinearProgram::new(nv);
    for k in 0..ns {
        let mut c = vec![Rational::zero(); nv];
        c[k] = Rational::one();
        lp.add(c, Relation::Ge, Rational::one());
    }
    let coord_row = |i: usize| {
        let mut c = vec![Rational::zero(); nv];
        for (k, s) in strict.iter().enumerate() {
            c[k] = s[i].clone();
        }
        for (k, f) in free.iter().enumerate() {
            c[ns + k] = f[i].clone();
            c[ns + nf + k] = -f[i].clone();
        }
        c
    };
    for (i, lb) in lower.iter().enumerate() {
        if let Some(lb) = lb {
            lp.add(coord_row(i), Relation::Ge, lb.clone());
        }
        if minimize_max {
            let mut c = coord_row(i);
            c[nv - 1] = -Rational::one();
            lp.add(c, Relation::Le, Rational::zero());
        }
    }
    if minimize_max {
        let mut obj = vec![Rational::zero(); nv];
        obj[nv - 1] = Rational::one();
        lp.minimize(obj);
    }
    let sol = lp.solve();
    let p = sol.point()?;
    let x: Vec<Rational> = (0..dim)
        .map(|i| crate::linalg::dot(&coord_row(i)[..nv - 1], &p[..nv - 1]))
        .collect();
    Some(x)
}

/// Whether `x` is `Σ λ_g g` with every `λ_g > 0`, plus a free combination of
/// `free`: membership in the relative interior of the cone they generate.
pub fn in_relint(generators: &[Vec<Rational>], free: &[Vec<Rational>], x: &[Rational]) -> bool {
    let ng = generators.len();
    let nf = free.len();
    // Variables: λ (ng), μ⁺, μ⁻ (nf each), s. Maximize s with λ_g ≥ s, s ≤ 1.
    let nv = ng + 2 * nf + 1;
    let mut lp = LinearProgram::new(nv);
    for (i, xi) in x.iter().enumerate() {
        let mut c = vec![Rational::zero(); nv];
        for (k, g) in generators.iter().enumerate() {
            c[k] = g[i].clone();
        }
        for (k, f) in free.iter().enumerate() {
            c[ng + k] = f[i].clone();
            c[ng + nf + k] = -f[i].clone();
        }
        lp.add(c, Relation::Eq, xi.clone());
    }
    for k in 0..ng {
        let mut c = vec![Rational::zero(); nv];
        c[k] = Rational::one();
        c[nv - 1] = -Rational::one();
        lp.add(c, Relation::Ge, Rational::zero());
    }
    let mut c = vec![Rational::zero(); nv];
    c[nv - 1] = Rational::one();
    lp.add(c.clone(), Relation::Le, Rational::one());
    lp.maximize(c);
    match lp.solve() {
        LpOutcome::Optimal { value, .. } => ng == 0 || value.is_positive(),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::from_i64;

    fn q(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    #[test]
    fn small_lp() {
        // max x + y  s.t. x + 2y ≤ 4, 3x + y ≤ 6
        let mut lp = LinearProgram::new(2);
        lp.add(vec![q(1), q(2)], Relation::Le, q(4));
        lp.add(vec![q(3), q(1)], Relation::Le, q(6));
        lp.maximize(vec![q(1), q(1)]);
        match lp.solve() {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, Rational::new(14.into(), 5.into()));
                assert_eq!(point, vec![Rational::new(8.into(), 5.into()), Rational::new(6.into(), 5.into())]);
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(1);
        lp.add(vec![q(1)], Relation::Ge, q(3));
        lp.add(vec![q(1)], Relation::Le, q(2));
        assert_eq!(lp.solve(), LpOutcome::Infeasible);
        let mut lp = LinearProgram::new(1);
        lp.add(vec![q(1)], Relation::Ge, q(1));
        lp.maximize(vec![q(1)]);
        assert_eq!(lp.solve(), LpOutcome::Unbounded);
    }

    #[test]
    fn equality_with_redundant_rows() {
        let mut lp = LinearProgram::new(2);
        lp.add(vec![q(1), q(1)], Relation::Eq, q(2));
        lp.add(vec![q(2), q(2)], Relation::Eq, q(4));
        lp.minimize(vec![q(1), q(0)]);
        assert_eq!(lp.solve().point().unwrap(), &[q(0), q(2)]);
    }

    #[test]
    fn positive_point_on_line() {
        let p = cone_point(&[], &[from_i64(&[2, 1])], &[Some(q(1)), Some(q(1))], true).unwrap();
        assert_eq!(p, vec![q(2), q(1)]);
        assert!(cone_point(&[from_i64(&[-1, 1])], &[], &[Some(q(1)), Some(q(1))], false).is_none());
    }

    #[test]
    fn relint_membership() {
        let gens = vec![from_i64(&[1, 0]), from_i64(&[0, 1])];
        assert!(in_relint(&gens, &[], &from_i64(&[1, 3])));
        assert!(!in_relint(&gens, &[], &from_i64(&[0, 3])));
        assert!(in_relint(&[], &[from_i64(&[1, 1])], &from_i64(&[-2, -2])));
        assert!(!in_relint(&[], &[from_i64(&[1, 1])], &from_i64(&[-2, 2])));
    }
}
