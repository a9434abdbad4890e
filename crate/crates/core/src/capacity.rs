//! Upper probabilities as total event tables, and the structural
//! predicates used throughout: maxitivity, 2-alternation, subadditivity.
//!
//! An upper probability stores its full `2^n` table. Conjunction-closure
//! diagnostics query many events repeatedly and `n` is small by the core
//! cap, so the table is materialized once rather than recomputed.

use crate::distribution::PossibilityDistribution;
use crate::error::Error;
use crate::rational::Rational;
use crate::space::{Event, Space};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperProbability {
    space: Space,
    table: Vec<Rational>,
}

impl UpperProbability {
    /// Validates the defining invariants: `table[∅] = 0`, `table[X] = 1`,
    /// all entries in [0, 1], and monotonicity under set inclusion.
    pub fn new(space: Space, table: Vec<Rational>) -> Result<Self, Error> {
        let size = space.num_events();
        if table.len() != size {
            return Err(Error::BadTable {
                reason: format!("expected {size} entries, got {}", table.len()),
            });
        }
        if !table[0].is_zero() {
            return Err(Error::BadTable {
                reason: format!("table[∅] is {}, expected 0", table[0]),
            });
        }
        if !table[size - 1].is_one() {
            return Err(Error::BadTable {
                reason: format!("table[X] is {}, expected 1", table[size - 1]),
            });
        }
        let one = Rational::one();
        for v in &table {
            if v.is_negative() || *v > one {
                return Err(Error::BadTable {
                    reason: format!("entry {v} lies outside [0, 1]"),
                });
            }
        }
        for mask in 0..size {
            for bit in 0..space.n() {
                if mask >> bit & 1 == 0 && table[mask] > table[mask | 1 << bit] {
                    return Err(Error::BadTable {
                        reason: "table is not monotone".to_string(),
                    });
                }
            }
        }
        Ok(UpperProbability { space, table })
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn get(&self, a: Event) -> &Rational {
        &self.table[a.mask() as usize]
    }

    pub fn table(&self) -> &[Rational] {
        &self.table
    }

    pub fn singleton(&self, i: usize) -> &Rational {
        &self.table[1 << i]
    }

    /// The restriction of the table to singletons, in label order.
    pub fn singleton_values(&self) -> Vec<Rational> {
        (0..self.space.n()).map(|i| self.singleton(i).clone()).collect()
    }
}

/// The possibility measure induced by a distribution: `Π(A) = max_{x∈A} π(x)`.
pub fn possibility_measure(pi: &PossibilityDistribution) -> UpperProbability {
    let space = pi.space().clone();
    let size = space.num_events();
    let mut table = vec![Rational::zero(); size];
    for mask in 1..size {
        let low = mask.trailing_zeros() as usize;
        table[mask] = Rational::max_ref(&table[mask & (mask - 1)], pi.value(low)).clone();
    }
    UpperProbability { space, table }
}

/// Event-wise minimum of two upper probabilities on the same space.
pub fn conjunction(
    u1: &UpperProbability,
    u2: &UpperProbability,
) -> Result<UpperProbability, Error> {
    if u1.space != u2.space {
        return Err(Error::SpaceMismatch);
    }
    let table = u1
        .table
        .iter()
        .zip(&u2.table)
        .map(|(a, b)| Rational::min_ref(a, b).clone())
        .collect();
    // Minimum of two monotone normalized tables is again one.
    Ok(UpperProbability {
        space: u1.space.clone(),
        table,
    })
}

/// True iff `u(A∪B) + u(A∩B) <= u(A) + u(B)` for all events. On failure
/// returns the lexicographically first violating pair `(A, B)` by mask.
pub fn is_two_alternating(u: &UpperProbability) -> (bool, Option<(Event, Event)>) {
    let size = u.space.num_events();
    for a in 0..size {
        for b in 0..size {
            let lhs = &u.table[a | b] + &u.table[a & b];
            let rhs = &u.table[a] + &u.table[b];
            if lhs > rhs {
                return (
                    false,
                    Some((Event::from_mask(a as u32), Event::from_mask(b as u32))),
                );
            }
        }
    }
    (true, None)
}

/// True iff `u(A) = max_{x∈A} u({x})` for every non-empty event, i.e. the
/// table is the possibility measure induced by its singleton restriction.
pub fn is_maxitive(u: &UpperProbability) -> bool {
    let size = u.space.num_events();
    let mut running = vec![Rational::zero(); size];
    for mask in 1..size {
        let low = mask.trailing_zeros() as usize;
        running[mask] = Rational::max_ref(&running[mask & (mask - 1)], &u.table[1 << low]).clone();
        if running[mask] != u.table[mask] {
            return false;
        }
    }
    true
}

/// True iff `u(A∪B) <= u(A) + u(B)` for all disjoint non-empty `A`, `B`.
pub fn is_subadditive(u: &UpperProbability) -> bool {
    let size = u.space.num_events();
    for a in 1..size {
        let comp = (size - 1) & !a;
        // Non-empty submasks of the complement of A.
        let mut b = comp;
        while b != 0 {
            if u.table[a | b] > &u.table[a] + &u.table[b] {
                return false;
            }
            b = (b - 1) & comp;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distribution::MassFunction;

    fn space(labels: &[&str]) -> Space {
        Space::new(labels.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    fn dist(sp: &Space, vals: &[&str]) -> PossibilityDistribution {
        PossibilityDistribution::new(sp.clone(), vals.iter().map(|s| s.parse().unwrap()).collect())
            .unwrap()
    }

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn possibility_measure_tables() {
        let sp = space(&["1", "2"]);
        let m = possibility_measure(&dist(&sp, &["1", "0.3"]));
        assert_eq!(*m.get(sp.event(0b10).unwrap()), r("0.3"));
        assert_eq!(*m.get(sp.full_event()), r("1"));

        let sp3 = space(&["1", "2", "3"]);
        let m3 = possibility_measure(&dist(&sp3, &["1", "0.5", "0.7"]));
        assert_eq!(*m3.get(sp3.event(0b110).unwrap()), r("0.7"));

        // Degenerate distribution: indicator of one point.
        let md = possibility_measure(&dist(&sp3, &["0", "1", "0"]));
        for e in sp3.events() {
            let expect = if e.contains(1) { r("1") } else { r("0") };
            assert_eq!(*md.get(e), expect);
        }
    }

    #[test]
    fn conjunction_tables() {
        let sp = space(&["1", "2", "3"]);
        let m1 = possibility_measure(&dist(&sp, &["1", "0.5", "0.7"]));
        let m2 = possibility_measure(&dist(&sp, &["1", "0.6", "0.6"]));
        let c = conjunction(&m1, &m2).unwrap();
        assert_eq!(*c.get(sp.event(0b010).unwrap()), r("0.5"));
        assert_eq!(*c.get(sp.event(0b100).unwrap()), r("0.6"));
        assert_eq!(*c.get(sp.event(0b110).unwrap()), r("0.6"));

        // Idempotence.
        assert_eq!(conjunction(&m1, &m1).unwrap(), m1);

        // A conjunction that collapses to a probability measure.
        let p1 = possibility_measure(&dist(&sp, &["1", "0.5", "0.5"]));
        let p2 = possibility_measure(&dist(&sp, &["0.5", "1", "0"]));
        let c2 = conjunction(&p1, &p2).unwrap();
        assert_eq!(c2.singleton_values(), vec![r("0.5"), r("0.5"), r("0")]);
        let q = MassFunction::new(sp.clone(), vec![r("0.5"), r("0.5"), r("0")]).unwrap();
        assert_eq!(c2.table(), q.event_table().as_slice());
    }

    #[test]
    fn two_alternating_witness() {
        let sp = space(&["1", "2", "3", "4"]);
        let m1 = possibility_measure(&dist(&sp, &["0.3", "0.4", "0.6", "1"]));
        let m2 = possibility_measure(&dist(&sp, &["0.3", "0.6", "0.4", "1"]));
        let c = conjunction(&m1, &m2).unwrap();
        let (ok, witness) = is_two_alternating(&c);
        assert!(!ok);
        let (a, b) = witness.unwrap();
        assert_eq!(a.mask(), 0b0011);
        assert_eq!(b.mask(), 0b0101);
        assert_eq!(&c.table()[0b0111] + &c.table()[0b0001], r("0.9"));
        assert_eq!(c.get(a) + c.get(b), r("0.8"));

        // Any possibility measure is 2-alternating.
        assert!(is_two_alternating(&m1).0);
        // A one-point space has no nondegenerate pairs.
        let sp1 = space(&["x"]);
        let u1 = possibility_measure(&dist(&sp1, &["1"]));
        assert!(is_two_alternating(&u1).0);
    }

    #[test]
    fn maxitivity() {
        let sp = space(&["1", "2", "3"]);
        let m1 = possibility_measure(&dist(&sp, &["1", "0.5", "0.7"]));
        let m2 = possibility_measure(&dist(&sp, &["1", "0.6", "0.6"]));
        assert!(is_maxitive(&conjunction(&m1, &m2).unwrap()));

        let p1 = possibility_measure(&dist(&sp, &["1", "0.5", "0.5"]));
        let p2 = possibility_measure(&dist(&sp, &["0.5", "1", "0"]));
        assert!(!is_maxitive(&conjunction(&p1, &p2).unwrap()));

        assert!(is_maxitive(&m1));
        assert!(is_maxitive(&m2));
    }

    #[test]
    fn subadditivity() {
        let sp = space(&["1", "2", "3"]);
        let m1 = possibility_measure(&dist(&sp, &["1", "0.3", "0.5"]));
        let m2 = possibility_measure(&dist(&sp, &["0.5", "1", "0.7"]));
        assert!(!is_subadditive(&conjunction(&m1, &m2).unwrap()));

        let q = MassFunction::new(sp.clone(), vec![r("0.5"), r("0.3"), r("0.2")]).unwrap();
        let additive = UpperProbability::new(sp.clone(), q.event_table()).unwrap();
        assert!(is_subadditive(&additive));

        let e1 = possibility_measure(&dist(&sp, &["0.8", "0.2", "1"]));
        let e2 = possibility_measure(&dist(&sp, &["0.2", "0.9", "1"]));
        let c = conjunction(&e1, &e2).unwrap();
        assert!(!is_subadditive(&c));
        assert_eq!(*c.get(sp.event(0b011).unwrap()), r("0.8"));
        assert_eq!(c.singleton(0) + c.singleton(1), r("0.4"));
    }

    #[test]
    fn table_validation() {
        let sp = space(&["a", "b"]);
        let ok = vec![r("0"), r("0.5"), r("0.2"), r("1")];
        assert!(UpperProbability::new(sp.clone(), ok).is_ok());
        let bad_full = vec![r("0"), r("0.5"), r("0.2"), r("0.4")];
        assert!(matches!(
            UpperProbability::new(sp.clone(), bad_full),
            Err(Error::BadTable { .. })
        ));
        let bad_empty = vec![r("0.1"), r("0.5"), r("0.2"), r("1")];
        assert!(UpperProbability::new(sp, bad_empty).is_err());

        let sp3 = space(&["a", "b", "c"]);
        // u({a,b}) < u({a}) breaks monotonicity.
        let nonmono = vec![
            r("0"),
            r("0.6"),
            r("0.2"),
            r("0.3"),
            r("0.9"),
            r("1"),
            r("0.9"),
            r("1"),
        ];
        assert!(matches!(
            UpperProbability::new(sp3, nonmono),
            Err(Error::BadTable { .. })
        ));
    }
}
