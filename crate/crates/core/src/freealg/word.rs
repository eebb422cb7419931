use std::cmp::Ordering;
use std::fmt::{self, Write as _};

use super::Alphabet;

/// A monomial of the free algebra: a finite sequence of generator indices.
///
/// The empty word is the unit. Words are ordered by length first and then
/// lexicographically by generator index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u16>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: impl Into<Vec<u16>>) -> Self {
        Word(letters.into())
    }

    pub fn letter(index: u16) -> Self {
        Word(vec![index])
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// The `k`-fold concatenation `w^k`.
    pub fn repeat(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    /// Rotation starting at position `start`.
    pub fn rotation(&self, start: usize) -> Word {
        let mut letters = Vec::with_capacity(self.0.len());
        letters.extend_from_slice(&self.0[start..]);
        letters.extend_from_slice(&self.0[..start]);
        Word(letters)
    }

    /// Every letter must index into `alphabet`.
    pub fn fits(&self, alphabet: &Alphabet) -> bool {
        self.0.iter().all(|&l| usize::from(l) < alphabet.len())
    }

    /// Text form over `alphabet`: names concatenated, runs written as `^k`.
    /// Multi-character alphabets separate factors with `*`.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay {
            word: self,
            alphabet,
            runs: true,
        }
    }

    /// Text form without run compression (`XXYY`), used for circular words.
    pub fn display_plain<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay {
            word: self,
            alphabet,
            runs: false,
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
    runs: bool,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.word.letters();
        if letters.is_empty() {
            return f.write_char('1');
        }
        let sep = if self.alphabet.single_char() { "" } else { "*" };
        let mut first = true;
        let mut i = 0;
        while i < letters.len() {
            let mut run = 1;
            if self.runs {
                while i + run < letters.len() && letters[i + run] == letters[i] {
                    run += 1;
                }
            }
            if !first {
                f.write_str(sep)?;
            }
            first = false;
            f.write_str(self.alphabet.name(letters[i]))?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}
