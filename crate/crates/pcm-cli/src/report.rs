use std::fmt::Display;

/// Flat `key=value` run summary, one pair per line, in insertion order.
///
/// The `wall_time_s` line is the only one that varies between replays of
/// the same seed; consumers comparing runs should drop it.
pub struct Summary {
    lines: Vec<(String, String)>,
}

impl Summary {
    pub fn new() -> Self {
        Summary { lines: Vec::new() }
    }

    pub fn push(&mut self, key: &str, value: impl Display) {
        self.lines.push((key.to_string(), value.to_string()));
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.lines {
            out.push_str(key);
            out.push('=');
            out.push_str(value);
            out.push('\n');
        }
        out
    }
}
