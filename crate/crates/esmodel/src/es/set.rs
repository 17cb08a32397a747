//! Dense event-id sets backed by a single machine word.
//!
//! All analyses quantify over subsets of the event set, so sets are a
//! `u64` bitmask. This caps a structure at [`MAX_EVENTS`] events; loading
//! or building anything larger reports a capacity error instead of
//! silently truncating.

use std::fmt;

/// Hard event-count limit imposed by the one-word bitset.
pub const MAX_EVENTS: usize = 64;

/// Event index into an [`EventStructure`](super::EventStructure).
pub type EventId = usize;

/// A set of event ids.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EventSet(u64);

impl EventSet {
    pub const EMPTY: EventSet = EventSet(0);

    pub fn singleton(e: EventId) -> Self {
        debug_assert!(e < MAX_EVENTS);
        EventSet(1 << e)
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_EVENTS);
        if n == 64 {
            EventSet(!0)
        } else {
            EventSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        EventSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, e: EventId) -> bool {
        e < MAX_EVENTS && self.0 & (1 << e) != 0
    }

    #[must_use]
    pub fn insert(self, e: EventId) -> Self {
        debug_assert!(e < MAX_EVENTS);
        EventSet(self.0 | (1 << e))
    }

    #[must_use]
    pub fn remove(self, e: EventId) -> Self {
        EventSet(self.0 & !(1 << e))
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        EventSet(self.0 | other.0)
    }

    #[must_use]
    pub fn inter(self, other: Self) -> Self {
        EventSet(self.0 & other.0)
    }

    #[must_use]
    pub fn minus(self, other: Self) -> Self {
        EventSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<EventId> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> SetIter {
        SetIter(self.0)
    }
}

impl FromIterator<EventId> for EventSet {
    fn from_iter<T: IntoIterator<Item = EventId>>(it: T) -> Self {
        let mut s = EventSet::EMPTY;
        for e in it {
            s = s.insert(e);
        }
        s
    }
}

impl IntoIterator for EventSet {
    type Item = EventId;
    type IntoIter = SetIter;
    fn into_iter(self) -> SetIter {
        self.iter()
    }
}

pub struct SetIter(u64);

impl Iterator for SetIter {
    type Item = EventId;
    fn next(&mut self) -> Option<EventId> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }
}

impl fmt::Debug for EventSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s: EventSet = [1, 3, 5].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(3));
        assert!(!s.contains(2));
        assert!(s.is_subset(EventSet::full(6)));
        assert!(!EventSet::full(6).is_subset(s));
        assert_eq!(s.minus(EventSet::singleton(3)).len(), 2);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3, 5]);
    }

    #[test]
    fn full_at_word_boundary() {
        assert_eq!(EventSet::full(64).len(), 64);
        assert_eq!(EventSet::full(0), EventSet::EMPTY);
    }
}
