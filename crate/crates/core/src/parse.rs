//! Text front-end for free-algebra polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := '-'? factor ('*'? factor)*
//! factor := atom ('^' nat)?
//! atom   := int | generator | '(' expr ')'
//! ```
//!
//! Juxtaposition (`XYXY`, `2X`) is accepted only when every generator name
//! is a single character; otherwise factors need an explicit `*`.

use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use crate::freealg::{Alphabet, FreePoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown generator {name:?} at {position}")]
    UnknownGenerator { name: String, position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str, single_char: bool) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                i += 1;
                if !single_char {
                    while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                    {
                        i += 1;
                    }
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax {
                    position: i,
                    message: format!("unexpected character {ch:?}"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    alphabet: &'a Arc<Alphabet>,
    juxtapose: bool,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<FreePoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<FreePoly, ParseError> {
        let negate = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Int(_) | Tok::Ident(_) | Tok::LParen) => {
                    if !self.juxtapose {
                        return self.error(
                            "implicit multiplication needs single-character generators; use '*'",
                        );
                    }
                    acc = &acc * &self.factor()?;
                }
                _ => break,
            }
        }
        Ok(if negate { -acc } else { acc })
    }

    fn factor(&mut self) -> Result<FreePoly, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek() {
            Some(Tok::Int(k)) => {
                let Ok(k) = u64::try_from(k) else {
                    return self.error("exponent too large");
                };
                self.pos += 1;
                Ok(base.pow(k))
            }
            _ => self.error("expected a non-negative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<FreePoly, ParseError> {
        let position = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(FreePoly::constant(self.alphabet, n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                FreePoly::var(self.alphabet, &name)
                    .ok_or(ParseError::UnknownGenerator { name, position })
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.error("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => self.error("expected a number, generator or '('"),
            None => self.error("unexpected end of input"),
        }
    }
}

/// Parses `text` as an element of the free algebra on `alphabet`.
pub fn parse_poly(text: &str, alphabet: &Arc<Alphabet>) -> Result<FreePoly, ParseError> {
    let juxtapose = alphabet.single_char();
    let toks = lex(text, juxtapose)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        end: text.len(),
        alphabet,
        juxtapose,
    };
    let poly = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return parser.error("unexpected trailing input");
    }
    Ok(poly)
}

/// Canonical text form, the inverse of [`parse_poly`].
pub fn format_poly(f: &FreePoly) -> String {
    f.to_string()
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::freealg::Word;
    use crate::testing::{poly, xy};

    fn p(s: &str) -> FreePoly {
        parse_poly(s, &xy()).unwrap()
    }

    fn var(s: &str) -> FreePoly {
        FreePoly::var(&xy(), s).unwrap()
    }

    #[test]
    fn examples() {
        let (x, y) = (var("X"), var("Y"));
        assert_eq!(p("X*Y - Y*X"), x.commutator(&y).unwrap());
        let s = &x + &y;
        assert_eq!(p("(X+Y)^2"), &s * &s);
        let expected = FreePoly::from_terms(
            &xy(),
            [
                (Word::from_letters(vec![0, 1, 0, 1]), -1),
                (Word::from_letters(vec![0, 0, 1, 1]), 2),
            ],
        );
        assert_eq!(p("-XYXY + 2XXYY"), expected);
        assert_eq!(p("-XYXY + 2X^2Y^2"), expected);
    }

    #[test]
    fn precedence() {
        // '^' binds tighter than juxtaposition, unary minus applies to a term.
        assert_eq!(p("XY^2"), &var("X") * &var("Y").pow(2));
        assert_eq!(p("-X^2"), -var("X").pow(2));
        assert_eq!(p("2 - 3"), FreePoly::constant(&xy(), -1));
        assert_eq!(p("X - Y - X"), -var("Y"));
        assert_eq!(p("(X)^0"), FreePoly::one(&xy()));
        assert_eq!(p("0"), FreePoly::zero(&xy()));
        assert_eq!(p("X + -Y"), &var("X") - &var("Y"));
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_poly("X + Z", &xy()),
            Err(ParseError::UnknownGenerator {
                name: "Z".into(),
                position: 4
            })
        );
        assert!(matches!(
            parse_poly("X +", &xy()),
            Err(ParseError::Syntax { position: 3, .. })
        ));
        assert!(matches!(
            parse_poly("(X", &xy()),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_poly("X^Y", &xy()),
            Err(ParseError::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_poly("X ) ", &xy()),
            Err(ParseError::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_poly("X % Y", &xy()),
            Err(ParseError::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_poly("", &xy()),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn multi_character_alphabets() {
        let a = Alphabet::new(["x1", "x2"]).unwrap();
        let f = parse_poly("2*x1*x2^2 - x2", &a).unwrap();
        assert_eq!(f.to_string(), "2*x1*x2^2 - x2");
        assert!(matches!(
            parse_poly("x1 x2", &a),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_poly("x3", &a),
            Err(ParseError::UnknownGenerator { .. })
        ));
    }

    #[test]
    fn format_examples() {
        assert_eq!(format_poly(&FreePoly::zero(&xy())), "0");
        assert_eq!(format_poly(&p("XY - YX")), "XY - YX");
    }

    proptest! {
        #[test]
        fn round_trip(f in poly(6, 5)) {
            prop_assert_eq!(parse_poly(&format_poly(&f), &xy()).unwrap(), f);
        }

        #[test]
        fn format_is_idempotent_on_canonical_text(f in poly(6, 5)) {
            let s = format_poly(&f);
            prop_assert_eq!(format_poly(&parse_poly(&s, &xy()).unwrap()), s);
        }

        #[test]
        fn round_trip_multi_char(ws in proptest::collection::vec((proptest::collection::vec(0u16..3, 0..4), -5i64..5), 0..5)) {
            let a = Alphabet::new(["u", "v1", "w_2"]).unwrap();
            let f = FreePoly::from_terms(&a, ws.into_iter().map(|(w, c)| (Word::from_letters(w), c)));
            prop_assert_eq!(parse_poly(&format_poly(&f), &a).unwrap(), f);
        }
    }
}
