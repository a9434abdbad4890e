//! Possibility distributions and probability mass functions on a finite
//! space.

use crate::error::Error;
use crate::rational::Rational;
use crate::space::{Event, Space};

/// A normalized possibility distribution: values in [0, 1] with maximum
/// exactly 1. Construction rejects anything else.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PossibilityDistribution {
    space: Space,
    values: Vec<Rational>,
}

impl PossibilityDistribution {
    pub fn new(space: Space, values: Vec<Rational>) -> Result<Self, Error> {
        if values.len() != space.n() {
            return Err(Error::LengthMismatch {
                expected: space.n(),
                got: values.len(),
            });
        }
        let one = Rational::one();
        for v in &values {
            if v.is_negative() || *v > one {
                return Err(Error::ValueOutOfRange {
                    value: v.to_string(),
                });
            }
        }
        let max = values.iter().max().expect("space is non-empty");
        if !max.is_one() {
            return Err(Error::NotNormalized {
                max: max.to_string(),
            });
        }
        Ok(PossibilityDistribution { space, values })
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, i: usize) -> &Rational {
        &self.values[i]
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.values.iter().all(Rational::is_positive)
    }

    /// Pointwise minimum with another distribution on the same space. The
    /// result is a raw value vector because it may be unnormalized.
    pub fn pointwise_min(&self, other: &Self) -> Result<Vec<Rational>, Error> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| Rational::min_ref(a, b).clone())
            .collect())
    }
}

/// A probability measure given by point masses: non-negative values summing
/// to exactly 1. `Q(A)` is the exact sum of member masses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MassFunction {
    space: Space,
    masses: Vec<Rational>,
}

impl MassFunction {
    pub fn new(space: Space, masses: Vec<Rational>) -> Result<Self, Error> {
        if masses.len() != space.n() {
            return Err(Error::LengthMismatch {
                expected: space.n(),
                got: masses.len(),
            });
        }
        for m in &masses {
            if m.is_negative() {
                return Err(Error::BadMass {
                    reason: format!("negative mass {m}"),
                });
            }
        }
        let sum: Rational = masses.iter().sum();
        if !sum.is_one() {
            return Err(Error::BadMass {
                reason: format!("masses sum to {sum}, expected 1"),
            });
        }
        Ok(MassFunction { space, masses })
    }

    /// The degenerate measure putting all mass on element `i`.
    pub fn degenerate(space: Space, i: usize) -> Self {
        let n = space.n();
        assert!(i < n);
        let mut masses = vec![Rational::zero(); n];
        masses[i] = Rational::one();
        MassFunction { space, masses }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn masses(&self) -> &[Rational] {
        &self.masses
    }

    pub fn of(&self, a: Event) -> Rational {
        a.members().map(|i| &self.masses[i]).sum()
    }

    /// `Q(A)` for every event, indexed by mask.
    pub fn event_table(&self) -> Vec<Rational> {
        let size = self.space.num_events();
        let mut table = vec![Rational::zero(); size];
        for mask in 1..size {
            let low = mask.trailing_zeros() as usize;
            table[mask] = &table[mask & (mask - 1)] + &self.masses[low];
        }
        table
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(labels: &[&str]) -> Space {
        Space::new(labels.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    fn vals(strs: &[&str]) -> Vec<Rational> {
        strs.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn rejects_unnormalized_distribution() {
        let sp = space(&["a", "b"]);
        assert!(matches!(
            PossibilityDistribution::new(sp.clone(), vals(&["0.5", "0.9"])),
            Err(Error::NotNormalized { .. })
        ));
        assert!(matches!(
            PossibilityDistribution::new(sp.clone(), vals(&["1", "1.5"])),
            Err(Error::ValueOutOfRange { .. })
        ));
        assert!(PossibilityDistribution::new(sp, vals(&["1", "0.3"])).is_ok());
    }

    #[test]
    fn mass_function_validates() {
        let sp = space(&["a", "b", "c"]);
        assert!(MassFunction::new(sp.clone(), vals(&["0.5", "0.3", "0.2"])).is_ok());
        assert!(matches!(
            MassFunction::new(sp.clone(), vals(&["0.5", "0.3", "0.3"])),
            Err(Error::BadMass { .. })
        ));
        assert!(matches!(
            MassFunction::new(sp, vals(&["1.2", "-0.2", "0"])),
            Err(Error::BadMass { .. })
        ));
    }

    #[test]
    fn event_sums() {
        let sp = space(&["a", "b", "c"]);
        let q = MassFunction::new(sp.clone(), vals(&["0.5", "0.3", "0.2"])).unwrap();
        let table = q.event_table();
        assert_eq!(table[0b000], "0".parse().unwrap());
        assert_eq!(table[0b011], "0.8".parse().unwrap());
        assert_eq!(table[0b111], Rational::one());
        assert_eq!(q.of(sp.event(0b101).unwrap()), "0.7".parse().unwrap());
    }
}
