//! Verification reports: checks return data instead of panicking.

use crate::exactlin::{is_zero_vector, Vector};

/// How many violations a report keeps verbatim; the rest are only counted.
pub const RECORDED_VIOLATIONS: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Name of the identity that failed.
    pub check: String,
    /// Basis indices the identity was evaluated on.
    pub indices: Vec<usize>,
    /// The nonzero residual vector.
    pub residual: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub name: String,
    pub instances_checked: usize,
    pub total_violations: usize,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report { name: name.into(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.total_violations == 0
    }

    /// Counts one evaluated instance and keeps it if the residual is nonzero.
    pub fn record(&mut self, check: &str, indices: &[usize], residual: Vector) {
        self.instances_checked += 1;
        if !is_zero_vector(&residual) {
            self.push(Violation { check: check.to_string(), indices: indices.to_vec(), residual });
        }
    }

    pub fn push(&mut self, violation: Violation) {
        self.total_violations += 1;
        if self.violations.len() < RECORDED_VIOLATIONS {
            self.violations.push(violation);
        }
    }

    /// Appends another report's findings, keeping this report's name.
    pub fn absorb(&mut self, other: Report) {
        self.instances_checked += other.instances_checked;
        self.total_violations += other.total_violations;
        let room = RECORDED_VIOLATIONS.saturating_sub(self.violations.len());
        self.violations.extend(other.violations.into_iter().take(room));
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }

    /// Combines per-chunk reports produced in index order.
    pub fn collect(name: impl Into<String>, parts: impl IntoIterator<Item = Report>) -> Report {
        let mut out = Report::new(name);
        for part in parts {
            out.absorb(part);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, zero_vector};

    #[test]
    fn records_only_nonzero_residuals() {
        let mut r = Report::new("demo");
        r.record("zero", &[0], zero_vector(2));
        r.record("bad", &[1, 2], vec![int(0), int(3)]);
        assert_eq!(r.instances_checked, 2);
        assert_eq!(r.total_violations, 1);
        assert_eq!(r.first_violation().unwrap().indices, vec![1, 2]);
        assert!(!r.passed());
    }

    #[test]
    fn caps_recorded_violations() {
        let mut r = Report::new("many");
        for i in 0..RECORDED_VIOLATIONS + 5 {
            r.record("bad", &[i], vec![int(1)]);
        }
        assert_eq!(r.total_violations, RECORDED_VIOLATIONS + 5);
        assert_eq!(r.violations.len(), RECORDED_VIOLATIONS);
    }
}
