use serde::Serialize;

/// One checked identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub identity: String,
    pub anchor: String,
    pub pass: bool,
    /// Basis indices of the first failing instance; empty on success.
    pub witness: Vec<usize>,
}

/// A list of checked identities. The report passes iff no check failed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Report {
    checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    /// Records `outcome`: `Ok` is a pass, `Err(witness)` a failure.
    pub fn record(&mut self, identity: impl Into<String>, anchor: impl Into<String>, outcome: Result<(), Vec<usize>>) {
        let (pass, witness) = match outcome {
            Ok(()) => (true, Vec::new()),
            Err(w) => (false, w),
        };
        self.checks.push(Check { identity: identity.into(), anchor: anchor.into(), pass, witness });
    }

    pub fn assert_that(&mut self, identity: impl Into<String>, anchor: impl Into<String>, ok: bool) {
        self.record(identity, anchor, if ok { Ok(()) } else { Err(Vec::new()) });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// Appends `other` with every identity name prefixed by `prefix/`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.identity = format!("{prefix}/{}", c.identity);
            self.checks.push(c);
        }
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn get(&self, identity: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.identity == identity)
    }

    /// Checks sorted by identity name, the order used for printing.
    pub fn sorted(&self) -> Vec<Check> {
        let mut v = self.checks.clone();
        v.sort_by(|a, b| a.identity.cmp(&b.identity));
        v
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.sorted()).expect("report serializes")
    }
}

/// First index tuple (in iteration order) for which `ok` is false.
pub(crate) fn first_failure<I>(items: I, mut ok: impl FnMut(&[usize]) -> bool) -> Result<(), Vec<usize>>
where
    I: IntoIterator<Item = Vec<usize>>,
{
    for w in items {
        if !ok(&w) {
            return Err(w);
        }
    }
    Ok(())
}

pub(crate) fn singles(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).map(|i| vec![i])
}

pub(crate) fn pairs(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).flat_map(move |i| (0..n).map(move |j| vec![i, j]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_flag_tracks_failures() {
        let mut r = Report::new();
        r.record("b", "x = x", Ok(()));
        assert!(r.passed());
        r.record("a", "x = y", Err(vec![1, 2]));
        assert!(!r.passed());
        assert_eq!(r.failures().len(), 1);
        let sorted = r.sorted();
        assert_eq!(sorted[0].identity, "a");
        assert_eq!(sorted[0].witness, vec![1, 2]);
    }

    #[test]
    fn first_failure_reports_witness() {
        let r = first_failure(pairs(3), |w| w[0] + w[1] < 3);
        assert_eq!(r, Err(vec![1, 2]));
    }
}
