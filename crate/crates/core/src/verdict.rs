use std::fmt;

/// Outcome of checking one claimed identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub claim: String,
    pub holds: bool,
    pub detail: String,
}

impl Verdict {
    pub fn new(claim: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        Verdict { claim: claim.into(), holds, detail: detail.into() }
    }

    /// All of `parts` hold; details are joined.
    pub fn all(claim: impl Into<String>, parts: &[Verdict]) -> Self {
        let failed: Vec<String> = parts.iter().filter(|v| !v.holds).map(|v| format!("{}: {}", v.claim, v.detail)).collect();
        let detail = if failed.is_empty() { format!("{} checks passed", parts.len()) } else { failed.join("; ") };
        Verdict::new(claim, failed.is_empty(), detail)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.holds { "holds" } else { "fails" };
        write!(f, "{} {tag} ({})", self.claim, self.detail)
    }
}
