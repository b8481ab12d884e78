use std::collections::BTreeMap;
use std::fmt::Write as _;

use qhyperboloid::Matrix;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// The computation succeeds but disagrees with a printed formula.
    Discrepancy,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Discrepancy => "paper-discrepancy",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Claim {
    pub id: String,
    pub status: Status,
    pub note: String,
}

impl Claim {
    pub fn new(id: impl Into<String>, status: Status, note: impl Into<String>) -> Self {
        Self { id: id.into(), status, note: note.into() }
    }

    pub fn check(id: impl Into<String>, ok: bool, note: impl Into<String>) -> Self {
        Self::new(id, if ok { Status::Pass } else { Status::Fail }, note)
    }
}

/// Output of every subcommand, rendered either as text or as the JSON
/// object `{"matrices", "scalars", "claims"}`.
#[derive(Clone, Debug, Default)]
pub struct Report {
    matrices: Vec<(String, Matrix)>,
    scalars: Vec<(String, String)>,
    claims: Vec<Claim>,
}

impl Report {
    pub fn matrix(&mut self, name: impl Into<String>, m: Matrix) {
        self.matrices.push((name.into(), m));
    }

    pub fn scalar(&mut self, name: impl Into<String>, value: impl ToString) {
        self.scalars.push((name.into(), value.to_string()));
    }

    pub fn claim(&mut self, c: Claim) {
        self.claims.push(c);
    }

    pub fn has_failure(&self) -> bool {
        self.claims.iter().any(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> Value {
        let matrices: BTreeMap<&str, Vec<Vec<String>>> =
            self.matrices.iter().map(|(n, m)| (n.as_str(), m.to_string_rows())).collect();
        let scalars: BTreeMap<&str, &str> = self.scalars.iter().map(|(n, v)| (n.as_str(), v.as_str())).collect();
        let claims: Vec<Value> = self
            .claims
            .iter()
            .map(|c| json!({"id": c.id, "status": c.status.label(), "note": c.note}))
            .collect();
        json!({"matrices": matrices, "scalars": scalars, "claims": claims})
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (name, m) in &self.matrices {
            let rows = m.to_string_rows();
            let width = rows.iter().flatten().map(String::len).max().unwrap_or(0);
            let _ = writeln!(out, "{name} =");
            for row in rows {
                let cells: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
                let _ = writeln!(out, "  [ {} ]", cells.join("  "));
            }
        }
        for (name, v) in &self.scalars {
            let _ = writeln!(out, "{name} = {v}");
        }
        for c in &self.claims {
            let _ = writeln!(out, "[{}] {}: {}", c.status.label(), c.id, c.note);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qhyperboloid::QScalar;

    #[test]
    fn json_shape() {
        let mut r = Report::default();
        r.matrix("U", Matrix::identity(2));
        r.scalar("theta", QScalar::q());
        r.claim(Claim::new("x", Status::Discrepancy, "note"));
        let v = r.to_json();
        assert_eq!(v["matrices"]["U"][1][1], "1");
        assert_eq!(v["scalars"]["theta"], "q");
        assert_eq!(v["claims"][0]["status"], "paper-discrepancy");
        assert!(!r.has_failure());
        r.claim(Claim::check("y", false, ""));
        assert!(r.has_failure());
        assert!(r.to_text().contains("[fail] y"));
    }
}
