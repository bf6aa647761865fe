/// One named assertion with a certificate (on success) or counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: String,
}

/// Ordered list of checks; passes iff every check passes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Verification {
    pub checks: Vec<Check>,
}

impl Verification {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, name: impl Into<String>, passed: bool, witness: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, witness: witness.into() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn extend(&mut self, other: Verification) {
        self.checks.extend(other.checks);
    }
}
