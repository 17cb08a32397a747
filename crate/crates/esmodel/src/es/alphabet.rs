//! Memory actions and the alphabet with its justification relations.
//!
//! An alphabet fixes the variable set, the finite value set, and the two
//! label-level relations: `J` (a write action can justify a read action)
//! and `K ⊆ J` (synchronized justification, lock actions only). Lock
//! acquire/release and read-modify-write actions are both reads and
//! writes; `init` is a write only.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::EsError;

pub type Value = i64;

/// An event label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Action {
    Init,
    Read { var: String, val: Value },
    Write { var: String, val: Value },
    /// Atomic read of `old` followed by a write of `new` to `var`.
    Rmw { var: String, old: Value, new: Value },
    Acq { val: Value },
    Rel { val: Value },
}

impl Action {
    pub fn read(var: &str, val: Value) -> Self {
        Action::Read { var: var.to_string(), val }
    }

    pub fn write(var: &str, val: Value) -> Self {
        Action::Write { var: var.to_string(), val }
    }

    pub fn rmw(var: &str, old: Value, new: Value) -> Self {
        Action::Rmw { var: var.to_string(), old, new }
    }

    /// Variable touched by a data action, if any. Lock actions and `init`
    /// touch no variable.
    pub fn variable(&self) -> Option<&str> {
        match self {
            Action::Read { var, .. } | Action::Write { var, .. } | Action::Rmw { var, .. } => {
                Some(var)
            }
            _ => None,
        }
    }

    /// Values carried by the action. An RMW touches both its read and its
    /// written value.
    pub fn values(&self) -> Vec<Value> {
        match self {
            Action::Init => vec![],
            Action::Read { val, .. } | Action::Write { val, .. } => vec![*val],
            Action::Rmw { old, new, .. } => vec![*old, *new],
            Action::Acq { val } | Action::Rel { val } => vec![*val],
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Action::Init => write!(f, "init"),
            Action::Read { var, val } => write!(f, "R {var} {val}"),
            Action::Write { var, val } => write!(f, "W {var} {val}"),
            Action::Rmw { var, old, new } => write!(f, "RMW {var} {old} {new}"),
            Action::Acq { val } => write!(f, "Acq {val}"),
            Action::Rel { val } => write!(f, "Rel {val}"),
        }
    }
}

impl FromStr for Action {
    type Err = EsError;

    fn from_str(s: &str) -> Result<Self, EsError> {
        let bad = || EsError::BadLabel(s.to_string());
        let parts: Vec<&str> = s.split_whitespace().collect();
        let val = |t: &str| t.parse::<Value>().map_err(|_| bad());
        match parts.as_slice() {
            ["init"] => Ok(Action::Init),
            ["R", x, v] => Ok(Action::read(x, val(v)?)),
            ["W", x, v] => Ok(Action::write(x, val(v)?)),
            ["RMW", x, o, n] => Ok(Action::rmw(x, val(o)?, val(n)?)),
            ["Acq", v] => Ok(Action::Acq { val: val(v)? }),
            ["Rel", v] => Ok(Action::Rel { val: val(v)? }),
            _ => Err(bad()),
        }
    }
}

/// A memory alphabet: actions, read/write classification, and the
/// justification relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alphabet {
    variables: BTreeSet<String>,
    values: BTreeSet<Value>,
    with_lock: bool,
    with_rmw: bool,
    /// When false, `init` justifies only `Acq 0` instead of `Acq v` for
    /// every `v` in the value set.
    init_acq_all_values: bool,
}

impl Alphabet {
    pub fn new<I, J>(variables: I, values: J, with_lock: bool) -> Result<Self, EsError>
    where
        I: IntoIterator<Item = String>,
        J: IntoIterator<Item = Value>,
    {
        Self::with_rmw(variables, values, with_lock, false)
    }

    pub fn with_rmw<I, J>(
        variables: I,
        values: J,
        with_lock: bool,
        with_rmw: bool,
    ) -> Result<Self, EsError>
    where
        I: IntoIterator<Item = String>,
        J: IntoIterator<Item = Value>,
    {
        let values: BTreeSet<Value> = values.into_iter().collect();
        if !values.contains(&0) {
            return Err(EsError::ZeroNotInValues);
        }
        Ok(Alphabet {
            variables: variables.into_iter().collect(),
            values,
            with_lock,
            with_rmw,
            init_acq_all_values: true,
        })
    }

    pub fn restrict_init_acq(mut self) -> Self {
        self.init_acq_all_values = false;
        self
    }

    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.variables.iter().map(|s| s.as_str())
    }

    pub fn values(&self) -> impl Iterator<Item = Value> + '_ {
        self.values.iter().copied()
    }

    pub fn has_lock(&self) -> bool {
        self.with_lock
    }

    pub fn has_rmw(&self) -> bool {
        self.with_rmw
    }

    /// Is the action a member of this alphabet?
    pub fn contains(&self, a: &Action) -> bool {
        let var_ok = |v: &str| self.variables.contains(v);
        let val_ok = |v: Value| self.values.contains(&v);
        match a {
            Action::Init => true,
            Action::Read { var, val } | Action::Write { var, val } => var_ok(var) && val_ok(*val),
            Action::Rmw { var, old, new } => {
                self.with_rmw && var_ok(var) && val_ok(*old) && val_ok(*new)
            }
            Action::Acq { val } | Action::Rel { val } => self.with_lock && val_ok(*val),
        }
    }

    pub fn is_read(&self, a: &Action) -> bool {
        matches!(
            a,
            Action::Read { .. } | Action::Rmw { .. } | Action::Acq { .. } | Action::Rel { .. }
        )
    }

    pub fn is_write(&self, a: &Action) -> bool {
        !matches!(a, Action::Read { .. })
    }

    /// The label-level justification relation `J`.
    pub fn justifies(&self, w: &Action, r: &Action) -> bool {
        match (w, r) {
            (Action::Init, Action::Read { val, .. }) => *val == 0,
            (Action::Init, Action::Acq { val }) => {
                self.with_lock && (self.init_acq_all_values || *val == 0)
            }
            (Action::Write { var: x, val }, Action::Read { var: y, val: w }) => x == y && val == w,
            (Action::Rmw { var: x, new, .. }, Action::Read { var: y, val }) => x == y && new == val,
            (Action::Write { var: x, val }, Action::Rmw { var: y, old, .. }) => x == y && val == old,
            (Action::Rmw { var: x, new, .. }, Action::Rmw { var: y, old, .. }) => {
                x == y && new == old
            }
            (Action::Acq { val: v }, Action::Rel { val: w }) => self.with_lock && v == w,
            (Action::Rel { val: v }, Action::Acq { val: w }) => self.with_lock && v == w,
            _ => false,
        }
    }

    /// The synchronized justification relation `K`: lock pairs only.
    pub fn sync_justifies(&self, w: &Action, r: &Action) -> bool {
        if !self.with_lock {
            return false;
        }
        matches!(
            (w, r),
            (Action::Init, Action::Acq { .. })
                | (Action::Acq { .. }, Action::Rel { .. })
                | (Action::Rel { .. }, Action::Acq { .. })
        ) && self.justifies(w, r)
    }

    /// Does the label sit in the field of `K`? These are the events a
    /// fencing is allowed to order.
    pub fn is_sync_label(&self, a: &Action) -> bool {
        self.with_lock
            && matches!(a, Action::Init | Action::Acq { .. } | Action::Rel { .. })
    }

    /// Every action of the (finite) alphabet, in a fixed order.
    pub fn actions(&self) -> Vec<Action> {
        let mut out = vec![Action::Init];
        for x in &self.variables {
            for &v in &self.values {
                out.push(Action::read(x, v));
            }
        }
        for x in &self.variables {
            for &v in &self.values {
                out.push(Action::write(x, v));
            }
        }
        if self.with_rmw {
            for x in &self.variables {
                for &o in &self.values {
                    for &n in &self.values {
                        out.push(Action::rmw(x, o, n));
                    }
                }
            }
        }
        if self.with_lock {
            for &v in &self.values {
                out.push(Action::Acq { val: v });
            }
            for &v in &self.values {
                out.push(Action::Rel { val: v });
            }
        }
        out
    }

    /// Enumerated `J`, for tests and the label logic.
    pub fn j_pairs(&self) -> Vec<(Action, Action)> {
        let acts = self.actions();
        let mut out = Vec::new();
        for a in &acts {
            for b in &acts {
                if self.justifies(a, b) {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn proto() -> Alphabet {
        Alphabet::new(vec!["x".into()], [0, 1], false).unwrap()
    }

    #[test]
    fn rejects_values_without_zero() {
        assert!(matches!(
            Alphabet::new(vec!["x".into()], [1, 2], false),
            Err(EsError::ZeroNotInValues)
        ));
    }

    // J over X={x}, V={0,1} without locks or RMW has exactly three pairs:
    // (init, R x 0), (W x 0, R x 0), (W x 1, R x 1).
    #[test]
    fn prototypical_j_pairs() {
        let a = proto();
        let pairs = a.j_pairs();
        assert_eq!(pairs.len(), 3);
        assert!(pairs.contains(&(Action::Init, Action::read("x", 0))));
        assert!(pairs.contains(&(Action::write("x", 0), Action::read("x", 0))));
        assert!(pairs.contains(&(Action::write("x", 1), Action::read("x", 1))));
    }

    #[test]
    fn lock_pairs_in_j_and_k() {
        let a = Alphabet::new(vec!["x".into()], [0, 1, 2], true).unwrap();
        assert!(a.justifies(&Action::Rel { val: 2 }, &Action::Acq { val: 2 }));
        assert!(a.sync_justifies(&Action::Rel { val: 2 }, &Action::Acq { val: 2 }));
        assert!(!a.sync_justifies(&Action::Rel { val: 2 }, &Action::Acq { val: 1 }));
        assert!(!a.sync_justifies(&Action::write("x", 1), &Action::read("x", 1)));
        // K subseteq J by enumeration.
        let acts = a.actions();
        for w in &acts {
            for r in &acts {
                if a.sync_justifies(w, r) {
                    assert!(a.justifies(w, r));
                }
            }
        }
    }

    // J always lands in W x R.
    #[test]
    fn j_in_writes_times_reads() {
        for alphabet in [
            proto(),
            Alphabet::with_rmw(vec!["x".into(), "y".into()], [0, 1], true, true).unwrap(),
        ] {
            for (w, r) in alphabet.j_pairs() {
                assert!(alphabet.is_write(&w));
                assert!(alphabet.is_read(&r));
            }
        }
    }

    #[test]
    fn label_round_trip() {
        for s in ["init", "R x 0", "W y 1", "RMW x 0 1", "Acq 2", "Rel 2"] {
            let a: Action = s.parse().unwrap();
            assert_eq!(a.to_string(), s);
        }
        assert!("Q x 1".parse::<Action>().is_err());
    }
}
