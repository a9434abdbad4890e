//! Finite possibility spaces and events.
//!
//! A `Space` is an ordered list of distinct labels; an `Event` is a subset
//! of the space encoded as a bitmask over label indices. Several algorithms
//! enumerate all `2^n` events, so spaces are capped at [`MAX_SPACE`]
//! elements; exceeding the cap is a validated input error.

use crate::error::Error;
use std::fmt;
use std::ops::{BitAnd, BitOr};
use std::sync::Arc;

/// Bitmask width bound for spaces.
pub const MAX_SPACE: usize = 20;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Space {
    labels: Arc<[String]>,
}

impl Space {
    pub fn new(labels: Vec<String>) -> Result<Self, Error> {
        let n = labels.len();
        if n == 0 || n > MAX_SPACE {
            return Err(Error::SpaceSize { n, max: MAX_SPACE });
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() || labels[..i].contains(label) {
                return Err(Error::BadLabel {
                    label: label.clone(),
                });
            }
        }
        Ok(Space {
            labels: labels.into(),
        })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn num_events(&self) -> usize {
        1usize << self.n()
    }

    /// All `2^n` events in ascending mask order, empty set first, full
    /// space last.
    pub fn events(&self) -> impl Iterator<Item = Event> {
        (0..(1u32 << self.n())).map(Event::from_mask)
    }

    pub fn empty_event(&self) -> Event {
        Event::from_mask(0)
    }

    pub fn full_event(&self) -> Event {
        Event::from_mask((1u32 << self.n()) - 1)
    }

    pub fn singleton(&self, i: usize) -> Event {
        debug_assert!(i < self.n());
        Event::from_mask(1 << i)
    }

    pub fn event(&self, mask: u32) -> Result<Event, Error> {
        if mask >> self.n() != 0 {
            return Err(Error::BadEventMask { mask, n: self.n() });
        }
        Ok(Event::from_mask(mask))
    }

    pub fn complement(&self, a: Event) -> Event {
        Event::from_mask(!a.mask() & self.full_event().mask())
    }

    pub fn event_from_labels<I, S>(&self, labels: I) -> Result<Event, Error>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut mask = 0u32;
        for label in labels {
            let label = label.as_ref();
            match self.index_of(label) {
                Some(i) => mask |= 1 << i,
                None => {
                    return Err(Error::UnknownLabel {
                        label: label.to_string(),
                    })
                }
            }
        }
        Ok(Event::from_mask(mask))
    }

    pub fn event_labels(&self, a: Event) -> Vec<&str> {
        a.members().map(|i| self.label(i)).collect()
    }

    /// Comma-joined member labels in label order; the empty event renders
    /// as the empty string.
    pub fn event_key(&self, a: Event) -> String {
        self.event_labels(a).join(",")
    }
}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Space{:?}", self.labels)
    }
}

/// A subset of a space, as a bitmask over label indices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Event(u32);

impl Event {
    pub fn from_mask(mask: u32) -> Self {
        Event(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn members(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..32usize).filter(move |i| mask >> i & 1 == 1)
    }

    pub fn is_subset_of(self, other: Event) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn insert(self, i: usize) -> Event {
        Event(self.0 | 1 << i)
    }
}

impl BitOr for Event {
    type Output = Event;
    fn bitor(self, rhs: Event) -> Event {
        Event(self.0 | rhs.0)
    }
}

impl BitAnd for Event {
    type Output = Event;
    fn bitand(self, rhs: Event) -> Event {
        Event(self.0 & rhs.0)
    }
}

impl fmt::Debug for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{:b}}}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(labels: &[&str]) -> Space {
        Space::new(labels.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    #[test]
    fn all_events_in_mask_order() {
        let sp = space(&["a", "b"]);
        let masks: Vec<u32> = sp.events().map(Event::mask).collect();
        assert_eq!(masks, vec![0b00, 0b01, 0b10, 0b11]);
        assert_eq!(space(&["x"]).events().count(), 2);
        assert_eq!(space(&["a", "b", "c"]).events().count(), 8);
    }

    #[test]
    fn complement_examples() {
        let sp = space(&["1", "2", "3"]);
        assert_eq!(sp.complement(sp.singleton(0)).mask(), 0b110);
        assert_eq!(sp.complement(sp.empty_event()), sp.full_event());
        let sp2 = space(&["1", "2"]);
        assert_eq!(sp2.complement(sp2.full_event()), sp2.empty_event());
    }

    #[test]
    fn complement_is_involutive() {
        let sp = space(&["a", "b", "c", "d"]);
        for e in sp.events() {
            assert_eq!(sp.complement(sp.complement(e)), e);
        }
    }

    #[test]
    fn rejects_bad_spaces() {
        assert!(matches!(
            Space::new(vec![]),
            Err(Error::SpaceSize { n: 0, .. })
        ));
        let too_many: Vec<String> = (0..21).map(|i| i.to_string()).collect();
        assert!(matches!(
            Space::new(too_many),
            Err(Error::SpaceSize { n: 21, .. })
        ));
        assert!(matches!(
            Space::new(vec!["a".into(), "a".into()]),
            Err(Error::BadLabel { .. })
        ));
        assert!(matches!(
            Space::new(vec!["a".into(), "".into()]),
            Err(Error::BadLabel { .. })
        ));
    }

    #[test]
    fn labels_round_trip() {
        let sp = space(&["d", "h", "n"]);
        let e = sp.event_from_labels(["h", "n"]).unwrap();
        assert_eq!(e.mask(), 0b110);
        assert_eq!(sp.event_key(e), "h,n");
        assert!(sp.event_from_labels(["bogus"]).is_err());
        assert_eq!(sp.event_key(sp.empty_event()), "");
    }
}
