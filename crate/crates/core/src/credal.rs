//! Credal-set polytopes and everything computed from them: sure-loss
//! feasibility, natural extension by exact simplex, coherence, extreme
//! points, basic-feasible-solution enumeration, and the union-convexity
//! test for pairs of credal sets.

use crate::capacity::{is_two_alternating, possibility_measure, UpperProbability};
use crate::distribution::{MassFunction, PossibilityDistribution};
use crate::error::Error;
use crate::rational::Rational;
use crate::simplex::Tableau;
use crate::space::{Event, Space};
use itertools::Itertools;
use std::collections::BTreeSet;

/// Elements beyond which the combinatorial vertex routines refuse to run.
pub const MAX_VERTEX_ENUM: usize = 8;

const MAX_SPLIT_PRUNE: usize = 12;

/// The polytope `{ Q : Q(A) <= bound_A }` over the probability simplex,
/// with one constraint per non-trivial event of the generating upper
/// probability. Constraints are kept unfiltered; solvers prune internally.
#[derive(Clone, Debug)]
pub struct CredalPolytope {
    space: Space,
    constraints: Vec<(Event, Rational)>,
}

impl CredalPolytope {
    pub fn of(u: &UpperProbability) -> Self {
        let space = u.space().clone();
        let size = space.num_events();
        let constraints = (1..size - 1)
            .map(|mask| (Event::from_mask(mask as u32), u.table()[mask].clone()))
            .collect();
        CredalPolytope { space, constraints }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn constraints(&self) -> &[(Event, Rational)] {
        &self.constraints
    }

    pub fn contains(&self, q: &MassFunction) -> bool {
        self.violated_constraint(q).is_none()
    }

    /// First constraint (ascending mask) strictly violated by `q`, if any.
    pub fn violated_constraint(&self, q: &MassFunction) -> Option<(Event, &Rational)> {
        assert_eq!(q.space(), &self.space, "mass function on a different space");
        let sums = q.event_table();
        self.constraints
            .iter()
            .find(|(e, bound)| sums[e.mask() as usize] > *bound)
            .map(|(e, bound)| (*e, bound))
    }

    /// Bounds for every mask, trivial events included.
    fn bound_table(&self) -> Vec<Rational> {
        let size = self.space.num_events();
        let mut b = vec![Rational::zero(); size];
        b[size - 1] = Rational::one();
        for (e, bound) in &self.constraints {
            b[e.mask() as usize] = bound.clone();
        }
        b
    }
}

/// A vertex of a credal polytope: the mass function plus the events whose
/// constraints it meets with equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub mass: MassFunction,
    pub active: Vec<Event>,
}

/// Constraints that can actually support a facet, used to shrink the LP
/// tableaus and the vertex enumeration. Dropped constraints are implied
/// by kept ones (equal-bound supersets, or additive splits), so the
/// feasible set — and hence every optimum and vertex — is unchanged.
fn essential_constraints(p: &CredalPolytope) -> Vec<(u32, Rational)> {
    let n = p.space.n();
    let size = p.space.num_events();
    let bound = p.bound_table();
    let one = Rational::one();

    // A constraint is implied by any superset carrying the same bound
    // (event sums are monotone), and anything bounded by 1 is implied by
    // normalization. Monotone tables make the one-bit check sufficient.
    let mut keep: Vec<bool> = vec![false; size];
    for mask in 1..size - 1 {
        if bound[mask] >= one {
            continue;
        }
        keep[mask] = (0..n)
            .all(|b| mask >> b & 1 == 1 || bound[mask | 1 << b] != bound[mask]);
    }

    // A constraint is also implied when some split of the event already
    // enforces a bound at least as tight: Q(A) = Q(S) + Q(A\S).
    if n <= MAX_SPLIT_PRUNE {
        let mut derived: Vec<Rational> = vec![one.clone(); size];
        derived[0] = Rational::zero();
        for mask in 1..size {
            let mut splitmin: Option<Rational> = None;
            let mut s = (mask - 1) & mask;
            while s != 0 {
                let split = &derived[s] + &derived[mask & !s];
                if splitmin.as_ref().is_none_or(|m| split < *m) {
                    splitmin = Some(split);
                }
                s = (s - 1) & mask;
            }
            if keep[mask] {
                if let Some(sm) = &splitmin {
                    if *sm <= bound[mask] {
                        keep[mask] = false;
                    }
                }
            }
            let mut best = if keep[mask] {
                bound[mask].clone()
            } else {
                one.clone()
            };
            if let Some(sm) = splitmin {
                if sm < best {
                    best = sm;
                }
            }
            derived[mask] = best;
        }
    }

    (1..size - 1)
        .filter(|&mask| keep[mask])
        .map(|mask| (mask as u32, bound[mask].clone()))
        .collect()
}

/// Exact LP feasibility of the polytope; returns one feasible mass
/// function when it is non-empty.
pub fn avoids_sure_loss_lp(p: &CredalPolytope) -> (bool, Option<MassFunction>) {
    match Tableau::feasible(p.space.n(), &essential_constraints(p)) {
        Some(t) => {
            let q = MassFunction::new(p.space.clone(), t.solution())
                .expect("phase-one solution is a probability mass function");
            debug_assert!(p.contains(&q));
            (true, Some(q))
        }
        None => (false, None),
    }
}

/// The sure-loss characterization for two possibility measures: the
/// conjunction avoids sure loss iff `1 <= Π1(A) + Π2(A^c)` for every
/// event. Returns the first violating event (ascending mask) otherwise.
pub fn asl_characterization(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
) -> Result<(bool, Option<Event>), Error> {
    if pi1.space() != pi2.space() {
        return Err(Error::SpaceMismatch);
    }
    let m1 = possibility_measure(pi1);
    let m2 = possibility_measure(pi2);
    let one = Rational::one();
    let size = pi1.space().num_events();
    for mask in 0..size {
        let comp = (size - 1) ^ mask;
        if &m1.table()[mask] + &m2.table()[comp] < one {
            return Ok((false, Some(Event::from_mask(mask as u32))));
        }
    }
    Ok((true, None))
}

/// `max Q(A)` over the polytope, by exact simplex.
pub fn natural_extension(p: &CredalPolytope, a: Event) -> Result<Rational, Error> {
    let n = p.space.n();
    let Some(mut t) = Tableau::feasible(n, &essential_constraints(p)) else {
        return Err(Error::SureLoss);
    };
    if a.is_empty() {
        return Ok(Rational::zero());
    }
    if a == p.space.full_event() {
        return Ok(Rational::one());
    }
    Ok(t.maximize(&indicator(n, a)))
}

/// The natural extension on every event, sharing one feasibility phase
/// across all the per-event optimizations.
pub fn natural_extension_table(p: &CredalPolytope) -> Result<UpperProbability, Error> {
    let n = p.space.n();
    let size = p.space.num_events();
    let Some(feasible) = Tableau::feasible(n, &essential_constraints(p)) else {
        return Err(Error::SureLoss);
    };
    let mut table = vec![Rational::zero(); size];
    table[size - 1] = Rational::one();
    for (mask, slot) in table.iter_mut().enumerate().take(size - 1).skip(1) {
        let mut t = feasible.clone();
        *slot = t.maximize(&indicator(n, Event::from_mask(mask as u32)));
    }
    Ok(UpperProbability::new(p.space.clone(), table)
        .expect("natural extension is a coherent upper probability"))
}

fn indicator(n: usize, a: Event) -> Vec<Rational> {
    (0..n)
        .map(|i| {
            if a.contains(i) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect()
}

/// True iff `u` equals its natural extension on every event; otherwise
/// reports the first event (ascending mask) with a strict gap.
pub fn is_coherent(u: &UpperProbability) -> Result<(bool, Option<Event>), Error> {
    let table = natural_extension_table(&CredalPolytope::of(u))?;
    for (mask, (ext, orig)) in table.table().iter().zip(u.table()).enumerate() {
        debug_assert!(ext <= orig);
        if ext != orig {
            return Ok((false, Some(Event::from_mask(mask as u32))));
        }
    }
    Ok((true, None))
}

/// True iff the natural extension attains `u` on every singleton.
pub fn singleton_attainment(u: &UpperProbability) -> Result<bool, Error> {
    let p = CredalPolytope::of(u);
    let n = p.space.n();
    let Some(feasible) = Tableau::feasible(n, &essential_constraints(&p)) else {
        return Err(Error::SureLoss);
    };
    for i in 0..n {
        let mut t = feasible.clone();
        let reached = t.maximize(&indicator(n, p.space.singleton(i)));
        if reached != *u.singleton(i) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn vertex_with_active(p: &CredalPolytope, masses: Vec<Rational>) -> Vertex {
    let mass = MassFunction::new(p.space.clone(), masses).expect("vertex is a mass function");
    let sums = mass.event_table();
    let active = p
        .constraints
        .iter()
        .filter(|(e, bound)| sums[e.mask() as usize] == *bound)
        .map(|(e, _)| *e)
        .collect();
    Vertex { mass, active }
}

/// The extreme points of the credal set of a 2-alternating upper
/// probability, by the chain construction: for each ordering of the
/// elements, the masses of successive prefix increments. Deduplicated and
/// sorted by mass vector. Factorial in `n`.
pub fn extreme_points(u: &UpperProbability) -> Result<Vec<Vertex>, Error> {
    if !is_two_alternating(u).0 {
        return Err(Error::NotTwoAlternating {
            op: "extreme_points",
        });
    }
    let n = u.space().n();
    let mut seen: BTreeSet<Vec<Rational>> = BTreeSet::new();
    for perm in (0..n).permutations(n) {
        let mut masses = vec![Rational::zero(); n];
        let mut mask = 0usize;
        for &i in &perm {
            let next = mask | 1 << i;
            masses[i] = &u.table()[next] - &u.table()[mask];
            mask = next;
        }
        seen.insert(masses);
    }
    let p = CredalPolytope::of(u);
    Ok(seen
        .into_iter()
        .map(|masses| vertex_with_active(&p, masses))
        .collect())
}

/// All basic feasible solutions of the polytope, by solving every maximal
/// tight-constraint subsystem exactly and filtering by feasibility.
/// Deduplicated and sorted by mass vector. Intended as a desk-scale oracle;
/// refuses spaces beyond [`MAX_VERTEX_ENUM`] elements.
pub fn lp_vertices(p: &CredalPolytope) -> Result<Vec<Vertex>, Error> {
    let n = p.space.n();
    if n > MAX_VERTEX_ENUM {
        return Err(Error::SizeBound {
            op: "lp_vertices",
            n,
            max: MAX_VERTEX_ENUM,
        });
    }
    // Candidate tight rows: q_i = 0 for each variable, then the essential
    // event constraints at equality. The normalization row is always tight.
    let mut rows: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for i in 0..n {
        rows.push((indicator(n, p.space.singleton(i)), Rational::zero()));
    }
    for (mask, bound) in essential_constraints(p) {
        rows.push((indicator(n, Event::from_mask(mask)), bound));
    }

    let bound = p.bound_table();
    let mut seen: BTreeSet<Vec<Rational>> = BTreeSet::new();
    if n == 1 {
        seen.insert(vec![Rational::one()]);
    }
    for combo in (0..rows.len()).combinations(n.saturating_sub(1)) {
        let mut a = Vec::with_capacity(n);
        let mut b = Vec::with_capacity(n);
        a.push(vec![Rational::one(); n]);
        b.push(Rational::one());
        for &ri in &combo {
            a.push(rows[ri].0.clone());
            b.push(rows[ri].1.clone());
        }
        let Some(q) = solve_square(a, b) else { continue };
        if q.iter().any(Rational::is_negative) {
            continue;
        }
        // Feasibility against the full original constraint table.
        let size = p.space.num_events();
        let mut sums = vec![Rational::zero(); size];
        let mut ok = true;
        for mask in 1..size {
            let low = mask.trailing_zeros() as usize;
            sums[mask] = &sums[mask & (mask - 1)] + &q[low];
            if mask != size - 1 && sums[mask] > bound[mask] {
                ok = false;
                break;
            }
        }
        if ok {
            seen.insert(q);
        }
    }
    Ok(seen
        .into_iter()
        .map(|masses| vertex_with_active(p, masses))
        .collect())
}

/// Gaussian elimination over the rationals; `None` when the system has no
/// unique solution.
#[allow(clippy::needless_range_loop)] // rows are indexed pairwise
fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        let pivot = a[col][col].clone();
        for v in a[col].iter_mut() {
            if !v.is_zero() {
                *v = &*v / &pivot;
            }
        }
        b[col] = &b[col] / &pivot;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in col..n {
                if !a[col][c].is_zero() {
                    let sub = &factor * &a[col][c];
                    a[r][c] -= &sub;
                }
            }
            let sub = &factor * &b[col];
            b[r] -= &sub;
        }
    }
    Some(b)
}

/// Whether the union of the two credal sets is convex, by the segment
/// test over all pairs of extreme points: the segment from a vertex of
/// `M1` to a vertex of `M2` must leave `M1` no earlier than it enters
/// `M2`. On failure returns the midpoint of an uncovered stretch, a point
/// outside both credal sets.
pub fn union_is_convex(
    u1: &UpperProbability,
    u2: &UpperProbability,
) -> Result<(bool, Option<MassFunction>), Error> {
    if u1.space() != u2.space() {
        return Err(Error::SpaceMismatch);
    }
    let n = u1.space().n();
    if n > MAX_VERTEX_ENUM {
        return Err(Error::SizeBound {
            op: "union_is_convex",
            n,
            max: MAX_VERTEX_ENUM,
        });
    }
    if !is_two_alternating(u1).0 || !is_two_alternating(u2).0 {
        return Err(Error::NotTwoAlternating {
            op: "union_is_convex",
        });
    }
    let verts1 = extreme_points(u1)?;
    let verts2 = extreme_points(u2)?;
    let tables1: Vec<Vec<Rational>> = verts1.iter().map(|v| v.mass.event_table()).collect();
    let tables2: Vec<Vec<Rational>> = verts2.iter().map(|v| v.mass.event_table()).collect();
    let size = u1.space().num_events();
    let one = Rational::one();
    let two = Rational::from_int(2);

    for (v1, q1) in verts1.iter().zip(&tables1) {
        for (v2, q2) in verts2.iter().zip(&tables2) {
            // Segment s(t) = (1-t) v1 + t v2. Exit parameter from M1:
            let mut t_exit = one.clone();
            for mask in 1..size - 1 {
                if q2[mask] > u1.table()[mask] {
                    let t = (&u1.table()[mask] - &q1[mask]) / (&q2[mask] - &q1[mask]);
                    if t < t_exit {
                        t_exit = t;
                    }
                }
            }
            // Entry parameter into M2:
            let mut t_entry = Rational::zero();
            for mask in 1..size - 1 {
                if q1[mask] > u2.table()[mask] {
                    let t = (&q1[mask] - &u2.table()[mask]) / (&q1[mask] - &q2[mask]);
                    if t > t_entry {
                        t_entry = t;
                    }
                }
            }
            if t_entry > t_exit {
                let t = &(&t_exit + &t_entry) / &two;
                let masses: Vec<Rational> = v1
                    .mass
                    .masses()
                    .iter()
                    .zip(v2.mass.masses())
                    .map(|(a, b)| &(&one - &t) * a + &t * b)
                    .collect();
                let witness = MassFunction::new(u1.space().clone(), masses)
                    .expect("segment point is a mass function");
                return Ok((false, Some(witness)));
            }
        }
    }
    Ok((true, None))
}

/// Witness of a certain convexity violation: events `(A, B, C)` with
/// `Π1(A) < Π2(A)`, `Π1(B) > Π2(B)`, `C ⊇ A∪B` and `Π1(C) != Π2(C)`.
pub type ConvexityViolation = (Event, Event, Event);

/// Necessary condition for the union of the two credal sets to be convex:
/// if a [`ConvexityViolation`] triple exists the union is certainly
/// non-convex. Returns `false` with the first such triple, or `true`
/// meaning the test found no violation.
pub fn convexity_necessary_condition(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
) -> Result<(bool, Option<ConvexityViolation>), Error> {
    if pi1.space() != pi2.space() {
        return Err(Error::SpaceMismatch);
    }
    let m1 = possibility_measure(pi1);
    let m2 = possibility_measure(pi2);
    let n = pi1.space().n();
    let size = pi1.space().num_events();

    // min_diff[U]: smallest superset of U (by mask) where the measures
    // disagree.
    let mut min_diff: Vec<Option<u32>> = vec![None; size];
    for mask in (0..size).rev() {
        if m1.table()[mask] != m2.table()[mask] {
            min_diff[mask] = Some(mask as u32);
            continue;
        }
        min_diff[mask] = (0..n)
            .filter(|&b| mask >> b & 1 == 0)
            .filter_map(|b| min_diff[mask | 1 << b])
            .min();
    }

    for a in 0..size {
        if m1.table()[a] >= m2.table()[a] {
            continue;
        }
        for b in 0..size {
            if m1.table()[b] <= m2.table()[b] {
                continue;
            }
            if let Some(c) = min_diff[a | b] {
                return Ok((
                    false,
                    Some((
                        Event::from_mask(a as u32),
                        Event::from_mask(b as u32),
                        Event::from_mask(c),
                    )),
                ));
            }
        }
    }
    Ok((true, None))
}
