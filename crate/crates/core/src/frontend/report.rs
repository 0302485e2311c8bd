use serde::Serialize;

/// A half-open region of an input file, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SourceSpan {
    pub file: String,
    pub line_start: u32,
    pub col_start: u32,
    pub line_end: u32,
    pub col_end: u32,
}

impl SourceSpan {
    pub fn point(file: &str, line: u32, col: u32) -> SourceSpan {
        SourceSpan {
            file: file.to_string(),
            line_start: line,
            col_start: col,
            line_end: line,
            col_end: col,
        }
    }

    /// A span covering the whole of `text`.
    pub fn whole_input(file: &str, text: &str) -> SourceSpan {
        let mut line = 1u32;
        let mut col = 1u32;
        for c in text.chars() {
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        SourceSpan {
            file: file.to_string(),
            line_start: 1,
            col_start: 1,
            line_end: line,
            col_end: col,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub span: SourceSpan,
    pub message: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Accept,
    Reject,
    Unknown,
}

/// The machine-readable result of a CLI run. Serialization is stable:
/// identical input produces byte-identical output.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub verdict: Verdict,
    pub diagnostics: Vec<Diagnostic>,
    pub data: serde_json::Value,
}

impl Report {
    pub fn accept(data: serde_json::Value) -> Report {
        Report {
            verdict: Verdict::Accept,
            diagnostics: vec![],
            data,
        }
    }

    pub fn reject(diagnostics: Vec<Diagnostic>, data: serde_json::Value) -> Report {
        debug_assert!(!diagnostics.is_empty(), "a rejection carries a diagnostic");
        Report {
            verdict: Verdict::Reject,
            diagnostics,
            data,
        }
    }

    pub fn unknown(diagnostics: Vec<Diagnostic>, data: serde_json::Value) -> Report {
        Report {
            verdict: Verdict::Unknown,
            diagnostics,
            data,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Accept => 0,
            Verdict::Reject => 1,
            Verdict::Unknown => 2,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}
