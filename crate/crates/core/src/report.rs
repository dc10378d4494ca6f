//! Machine-readable verdicts for exhaustive law checks.

use std::fmt;

use serde::Serialize;

/// A concrete counterexample: operation indices (the `i`, `j`, `k` of a law)
/// followed by the carrier elements the law was evaluated at.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub elements: Vec<usize>,
}

impl Witness {
    pub fn new(indices: impl Into<Vec<usize>>, elements: impl Into<Vec<usize>>) -> Self {
        Witness {
            indices: indices.into(),
            elements: elements.into(),
        }
    }

    pub fn elements(elements: impl Into<Vec<usize>>) -> Self {
        Witness::new(Vec::new(), elements)
    }

    pub fn indices(indices: impl Into<Vec<usize>>) -> Self {
        Witness::new(indices, Vec::new())
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.indices.is_empty() {
            parts.push(format!("ops={:?}", self.indices));
        }
        if !self.elements.is_empty() {
            parts.push(format!("elements={:?}", self.elements));
        }
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub law: String,
    pub passed: bool,
    /// Number of instances evaluated (up to and including the first failure).
    pub checked: u64,
    pub witness: Option<Witness>,
    /// Informational results are reported but never affect the verdict.
    pub informational: bool,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub system: String,
    pub results: Vec<LawResult>,
    pub notes: Vec<String>,
}

impl AxiomReport {
    pub fn new(system: impl Into<String>) -> Self {
        AxiomReport {
            system: system.into(),
            results: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Evaluates `holds` on every case in order, stopping at the first
    /// failure. Returns whether the law held everywhere.
    pub fn law<T, I, P, W>(&mut self, law: &str, cases: I, mut holds: P, witness: W) -> bool
    where
        I: IntoIterator<Item = T>,
        P: FnMut(&T) -> bool,
        W: FnOnce(T) -> Witness,
    {
        let mut checked = 0u64;
        let mut failed = None;
        for case in cases {
            checked += 1;
            if !holds(&case) {
                failed = Some(case);
                break;
            }
        }
        let passed = failed.is_none();
        self.results.push(LawResult {
            law: law.to_string(),
            passed,
            checked,
            witness: failed.map(witness),
            informational: false,
            note: None,
        });
        passed
    }

    pub fn push(&mut self, result: LawResult) {
        self.results.push(result);
    }

    /// Records a law whose verdict was computed elsewhere.
    pub fn record(&mut self, law: &str, passed: bool, checked: u64, witness: Option<Witness>) {
        self.results.push(LawResult {
            law: law.to_string(),
            passed,
            checked,
            witness,
            informational: false,
            note: None,
        });
    }

    /// Like [`AxiomReport::law`] but the result never affects [`passes`](Self::passes).
    pub fn informational<T, I, P, W>(
        &mut self,
        law: &str,
        note: &str,
        cases: I,
        holds: P,
        witness: W,
    ) -> bool
    where
        I: IntoIterator<Item = T>,
        P: FnMut(&T) -> bool,
        W: FnOnce(T) -> Witness,
    {
        let passed = self.law(law, cases, holds, witness);
        if let Some(last) = self.results.last_mut() {
            last.informational = true;
            last.note = Some(note.to_string());
        }
        passed
    }

    pub fn annotate_last(&mut self, note: impl Into<String>) {
        if let Some(last) = self.results.last_mut() {
            last.note = Some(note.into());
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passes(&self) -> bool {
        self.results.iter().all(|r| r.passed || r.informational)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawResult> {
        self.results
            .iter()
            .filter(|r| !r.passed && !r.informational)
    }

    pub fn first_failure(&self) -> Option<&LawResult> {
        self.failures().next()
    }

    pub fn result(&self, law: &str) -> Option<&LawResult> {
        self.results.iter().find(|r| r.law == law)
    }

    pub fn laws_checked(&self) -> u64 {
        self.results.iter().map(|r| r.checked).sum()
    }

    /// Appends another report's results, prefixing each law with `label`.
    pub fn absorb(&mut self, label: &str, other: AxiomReport) {
        for mut r in other.results {
            r.law = format!("{label}/{}", r.law);
            self.results.push(r);
        }
        for n in other.notes {
            self.notes.push(format!("{label}: {n}"));
        }
    }

    /// Records `other` as a single law named `label`, keeping its first
    /// failure as the witness.
    pub fn summarize(&mut self, label: &str, other: &AxiomReport) {
        let first = other.first_failure();
        self.results.push(LawResult {
            law: label.to_string(),
            passed: other.passes(),
            checked: other.laws_checked(),
            witness: first.and_then(|f| f.witness.clone()),
            informational: false,
            note: first.map(|f| format!("{} failed", f.law)),
        });
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}",
            self.system,
            if self.passes() { "pass" } else { "fail" }
        )?;
        for r in &self.results {
            let tag = match (r.passed, r.informational) {
                (true, _) => "ok",
                (false, true) => "info",
                (false, false) => "FAIL",
            };
            write!(f, "  [{tag}] {} ({} checked)", r.law, r.checked)?;
            if let Some(w) = &r.witness {
                write!(f, " witness {w}")?;
            }
            if let Some(n) = &r.note {
                write!(f, " - {n}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn law_stops_at_first_failure() {
        let mut r = AxiomReport::new("t");
        let ok = r.law(
            "even",
            [2, 4, 5, 6],
            |x| x % 2 == 0,
            |x| Witness::elements([x]),
        );
        assert!(!ok);
        let res = r.result("even").unwrap();
        assert_eq!(res.checked, 3);
        assert_eq!(res.witness, Some(Witness::elements([5])));
        assert!(!r.passes());
    }

    #[test]
    fn informational_results_do_not_fail_the_report() {
        let mut r = AxiomReport::new("t");
        r.law("all", 0..3, |_| true, |x| Witness::elements([x]));
        r.informational(
            "typo",
            "literal reading",
            0..3,
            |_| false,
            |x| Witness::elements([x]),
        );
        assert!(r.passes());
        assert_eq!(r.laws_checked(), 4);
    }
}
