//! Check records shared by every bound and identity checker.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// `left <= right + tol`
    Le,
    /// `left < right`, strictly and without tolerance.
    Lt,
    /// `|left − right| <= tol`
    Eq,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Eq => "==",
        }
    }
}

/// How a failed check is treated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Grade {
    /// Asserted; a failure is a correctness error.
    Theorem,
    /// Evaluated and printed only.
    Reported,
    /// Conjecture evidence, never asserted.
    Conjecture,
    /// Hypotheses not met; values printed for reference.
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckRecord {
    pub name: String,
    pub left: f64,
    pub right: f64,
    pub relation: Relation,
    pub tol: f64,
    pub grade: Grade,
    pub citation: &'static str,
}

impl CheckRecord {
    pub fn new(
        name: impl Into<String>,
        left: f64,
        relation: Relation,
        right: f64,
        tol: f64,
        grade: Grade,
        citation: &'static str,
    ) -> Self {
        CheckRecord {
            name: name.into(),
            left,
            right,
            relation,
            tol,
            grade,
            citation,
        }
    }

    /// `right − left`.
    pub fn slack(&self) -> f64 {
        self.right - self.left
    }

    pub fn passed(&self) -> bool {
        match self.relation {
            Relation::Le => self.left <= self.right + self.tol,
            Relation::Lt => self.left < self.right,
            Relation::Eq => (self.left - self.right).abs() <= self.tol,
        }
    }

    /// A theorem-grade record that failed.
    pub fn is_violation(&self) -> bool {
        self.grade == Grade::Theorem && !self.passed()
    }
}

impl Serialize for CheckRecord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CheckRecord", 9)?;
        st.serialize_field("name", &self.name)?;
        st.serialize_field("left", &self.left)?;
        st.serialize_field("relation", &self.relation)?;
        st.serialize_field("right", &self.right)?;
        st.serialize_field("slack", &self.slack())?;
        st.serialize_field("tol", &self.tol)?;
        st.serialize_field("passed", &self.passed())?;
        st.serialize_field("grade", &self.grade)?;
        st.serialize_field("citation", &self.citation)?;
        st.end()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct BoundsReport {
    pub checks: Vec<CheckRecord>,
}

impl BoundsReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.checks.push(record);
    }

    pub fn extend(&mut self, other: BoundsReport) {
        self.checks.extend(other.checks);
    }

    pub fn violations(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.is_violation())
    }

    /// No theorem-grade record failed.
    pub fn theorems_hold(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn find(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// `rel · max(1, |values|...)`.
pub fn scaled_tol(rel: f64, values: &[f64]) -> f64 {
    rel * values.iter().fold(1.0f64, |m, v| m.max(v.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations() {
        let r = CheckRecord::new(
            "x",
            1.0,
            Relation::Le,
            1.0 - 1e-9,
            1e-8,
            Grade::Theorem,
            "k",
        );
        assert!(r.passed() && r.slack() < 0.0);
        let r = CheckRecord::new("x", 1.0, Relation::Lt, 1.0, 1.0, Grade::Theorem, "k");
        assert!(!r.passed() && r.is_violation());
        let r = CheckRecord::new(
            "x",
            2.0,
            Relation::Eq,
            2.0 + 1e-7,
            1e-6,
            Grade::Reported,
            "k",
        );
        assert!(r.passed());
        let r = CheckRecord::new("x", 2.0, Relation::Eq, 3.0, 1e-6, Grade::Reported, "k");
        assert!(!r.passed() && !r.is_violation());
    }

    #[test]
    fn serialized_slack_is_derived() {
        let r = CheckRecord::new(
            "x",
            1.0,
            Relation::Le,
            3.5,
            0.0,
            Grade::Theorem,
            "lew-bounds",
        );
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["slack"], 2.5);
        assert_eq!(v["passed"], true);
        assert_eq!(v["grade"], "theorem");
        assert_eq!(v["relation"], "le");
    }
}
