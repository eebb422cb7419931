use std::fmt;

/// One step of a computation report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub name: String,
    pub input: String,
    pub output: String,
    pub passed: bool,
}

/// An ordered list of steps; passes iff every step passes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub steps: Vec<Step>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            steps: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        name: impl Into<String>,
        input: impl Into<String>,
        output: impl Into<String>,
        passed: bool,
    ) {
        self.steps.push(Step {
            name: name.into(),
            input: input.into(),
            output: output.into(),
            passed,
        });
    }

    pub fn passed(&self) -> bool {
        self.steps.iter().all(|s| s.passed)
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "FAILED"
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.title, self.status())?;
        for s in &self.steps {
            let mark = if s.passed { "ok  " } else { "FAIL" };
            writeln!(f, "  [{mark}] {}", s.name)?;
            if !s.input.is_empty() {
                writeln!(f, "         in:  {}", s.input)?;
            }
            writeln!(f, "         out: {}", s.output)?;
        }
        Ok(())
    }
}
