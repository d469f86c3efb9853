//! Check reports: per-item outcomes with witnesses.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Inconclusive,
    Fail,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Inconclusive => "inconclusive",
            Outcome::Fail => "fail",
        }
    }
}

/// One verified property. A failing item always carries a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Item {
    pub name: String,
    pub outcome: Outcome,
    /// Number of cases examined.
    pub tested: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Accumulates cases for one item, keeping the first failure as witness.
#[derive(Debug)]
pub struct Tally {
    name: String,
    tested: usize,
    failures: usize,
    witness: Option<String>,
    note: Option<String>,
}

impl Tally {
    pub fn new(name: &str) -> Self {
        Tally { name: name.to_string(), tested: 0, failures: 0, witness: None, note: None }
    }

    pub fn case(&mut self, ok: bool, witness: impl FnOnce() -> String) -> bool {
        self.tested += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
        ok
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn is_failing(&self) -> bool {
        self.failures > 0
    }

    pub fn finish(self) -> Item {
        let outcome = if self.failures > 0 { Outcome::Fail } else { Outcome::Pass };
        Item {
            name: self.name,
            outcome,
            tested: self.tested,
            failures: self.failures,
            witness: self.witness,
            note: self.note,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub check: String,
    /// What was quantified over; reports never claim more than this.
    pub scope: String,
    pub items: Vec<Item>,
}

impl Report {
    pub fn new(check: &str, scope: &str) -> Self {
        Report { check: check.to_string(), scope: scope.to_string(), items: Vec::new() }
    }

    pub fn push(&mut self, t: Tally) {
        self.items.push(t.finish());
    }

    pub fn push_item(&mut self, item: Item) {
        self.items.push(item);
    }

    /// Records a single boolean fact.
    pub fn fact(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        let mut t = Tally::new(name);
        t.case(ok, witness);
        self.push(t);
    }

    pub fn inconclusive(&mut self, name: &str, why: impl Into<String>) {
        self.items.push(Item {
            name: name.to_string(),
            outcome: Outcome::Inconclusive,
            tested: 0,
            failures: 0,
            witness: None,
            note: Some(why.into()),
        });
    }

    /// Appends another report's items under a prefix.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut it in other.items {
            it.name = format!("{prefix}.{}", it.name);
            self.items.push(it);
        }
    }

    /// Worst item outcome; an empty report passes vacuously.
    pub fn outcome(&self) -> Outcome {
        self.items.iter().map(|i| i.outcome).max().unwrap_or(Outcome::Pass)
    }

    pub fn passed(&self) -> bool {
        self.outcome() == Outcome::Pass
    }

    pub fn item(&self, name: &str) -> Option<&Item> {
        self.items.iter().find(|i| i.name == name)
    }

    pub fn item_passed(&self, name: &str) -> bool {
        self.item(name).map(|i| i.outcome == Outcome::Pass).unwrap_or(false)
    }

    pub fn failing(&self) -> Vec<&Item> {
        self.items.iter().filter(|i| i.outcome == Outcome::Fail).collect()
    }

    pub fn summary(&self) -> String {
        let mut out = format!("{} [{}]: {}\n", self.check, self.scope, self.outcome().as_str());
        for it in &self.items {
            out.push_str(&format!("  {:<40} {:<12} {} cases", it.name, it.outcome.as_str(), it.tested));
            if let Some(w) = &it.witness {
                out.push_str(&format!("; witness {w}"));
            }
            if let Some(n) = &it.note {
                out.push_str(&format!("; {n}"));
            }
            out.push('\n');
        }
        out
    }
}
