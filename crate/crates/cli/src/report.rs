/// A command report in both human-readable and machine-readable forms, with
/// identical content. JSON maps are ordered, so reports are byte-identical
/// across runs.
pub struct Report {
    text: String,
    json: serde_json::Value,
}

impl Report {
    pub fn new(text: String, json: serde_json::Value) -> Self {
        Report { text, json }
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            serde_json::to_string_pretty(&self.json).expect("report serializes")
        } else {
            self.text.clone()
        }
    }
}

pub enum CliError {
    /// Axiom or check failure: exit code 1, report on stdout.
    Mathematical(String),
    /// Parse or usage failure: exit code 2, message on stderr.
    Structural(String),
}
