//! Seeded verdict suites shared by the integration tests and the acceptance
//! run. Every suite returns [`Tally`] lines instead of panicking, so callers
//! can both assert on them and print them.

use std::fmt;

use alia_core::generate::rng;
use alia_core::{Entry, Residual, Result};
use rand_chacha::ChaCha8Rng;

pub mod agreement;
pub mod equivalence;
pub mod transfer;

/// Outcome of one suite: how many instances agreed, and the verdict mix.
#[derive(Clone, Debug)]
pub struct Tally {
    pub name: String,
    pub cases: usize,
    pub agreed: usize,
    pub passes: usize,
    pub fails: usize,
    /// Whether both verdicts must occur for the suite to count.
    pub mixed: bool,
}

impl Tally {
    pub fn new(name: impl Into<String>, mixed: bool) -> Self {
        Tally {
            name: name.into(),
            cases: 0,
            agreed: 0,
            passes: 0,
            fails: 0,
            mixed,
        }
    }

    pub fn record(&mut self, agreed: bool, verdict: bool) {
        self.cases += 1;
        if agreed {
            self.agreed += 1;
        }
        if verdict {
            self.passes += 1;
        } else {
            self.fails += 1;
        }
    }

    pub fn ok(&self) -> bool {
        self.cases > 0
            && self.agreed == self.cases
            && (!self.mixed || (self.passes > 0 && self.fails > 0))
    }
}

impl fmt::Display for Tally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}/{} agree (pass {}, fail {})",
            self.name, self.agreed, self.cases, self.passes, self.fails
        )
    }
}

/// Per-instance agreement flag; any mismatch or kernel error clears it.
pub struct Case {
    ok: bool,
}

impl Case {
    fn new() -> Self {
        Case { ok: true }
    }

    /// Compares a kernel residual with reference entries, returning the
    /// kernel verdict.
    pub fn agree(&mut self, core: Result<Residual>, reference: Vec<Entry>) -> bool {
        match core {
            Ok(res) => {
                let passed = res.passed();
                if alia_oracle::sorted(res.entries) != alia_oracle::sorted(reference) {
                    self.ok = false;
                }
                passed
            }
            Err(_) => {
                self.ok = false;
                false
            }
        }
    }

    pub fn same<T: PartialEq>(&mut self, a: T, b: T) {
        if a != b {
            self.ok = false;
        }
    }

    pub fn require(&mut self, cond: bool) {
        self.ok &= cond;
    }

    /// Unwraps a kernel result, marking the case failed on error.
    pub fn take<T>(&mut self, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(_) => {
                self.ok = false;
                None
            }
        }
    }
}

/// Runs `body` on `cases` seeded generators; the body returns the verdict.
pub fn sweep(
    name: &str,
    salt: u64,
    cases: u64,
    mixed: bool,
    mut body: impl FnMut(&mut ChaCha8Rng, &mut Case) -> bool,
) -> Tally {
    let mut tally = Tally::new(name, mixed);
    for seed in 0..cases {
        let mut g = rng(salt * 1000 + seed);
        let mut case = Case::new();
        let verdict = body(&mut g, &mut case);
        tally.record(case.ok, verdict);
    }
    tally
}

/// Runs `instance` on `cases` seeded generators; agreement means both
/// verdicts coincide and every side check held. Both verdicts must occur.
pub fn equivalent(
    name: &str,
    salt: u64,
    cases: u64,
    mut instance: impl FnMut(&mut ChaCha8Rng, &mut Case) -> (bool, bool),
) -> Tally {
    let mut tally = Tally::new(name, true);
    for seed in 0..cases {
        let mut g = rng(salt * 1000 + seed);
        let mut case = Case::new();
        let (lhs, rhs) = instance(&mut g, &mut case);
        tally.record(case.ok && lhs == rhs, lhs);
    }
    tally
}

/// A single deterministic instance that must agree and pass.
pub fn fixed(name: &str, body: impl FnOnce(&mut Case) -> bool) -> Tally {
    let mut tally = Tally::new(name, false);
    let mut case = Case::new();
    let verdict = body(&mut case);
    tally.record(case.ok && verdict, verdict);
    tally
}
