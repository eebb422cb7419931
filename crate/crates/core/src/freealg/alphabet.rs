use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An ordered set of generator names.
///
/// Declaration order is the base order of the lexicographic word order, so
/// `["X", "Y"]` gives `X < Y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if names.len() > usize::from(u16::MAX) {
            return Err(Error::Unsupported(format!("{} generators", names.len())));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidGenerator(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateGenerator(name.clone()));
            }
        }
        Ok(Arc::new(Self { names }))
    }

    /// The two-generator alphabet `X < Y`.
    pub fn xy() -> Arc<Self> {
        Self::new(["X", "Y"]).expect("valid alphabet")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: u16) -> &str {
        &self.names[usize::from(index)]
    }

    pub fn index_of(&self, name: &str) -> Option<u16> {
        self.names.iter().position(|n| n == name).map(|i| i as u16)
    }

    /// True when every generator is a single character, which is what allows
    /// words to be written by juxtaposition (`XYXY`).
    pub fn single_char(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names.join(","))
    }
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
