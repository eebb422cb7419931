//! The abelianization `A/[A,A]` of a free algebra.
//!
//! `A/[A,A]` is free abelian on circular words (words up to cyclic rotation),
//! so an element is stored as a sparse map from canonical rotations to
//! integer coefficients. Membership in `[A,A]` is decided by abelianizing.

use std::cmp::{Ordering, Reverse};
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::freealg::{write_signed_sum, Alphabet, FreePoly, Word};

/// A word up to cyclic rotation, stored as its least rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircularWord(Word);

impl CircularWord {
    /// The class of `w`. Rotations are enumerated directly.
    pub fn of(w: &Word) -> Self {
        let letters = w.letters();
        let n = letters.len();
        let mut best = 0;
        for start in 1..n {
            if compare_rotations(letters, start, best) == Ordering::Less {
                best = start;
            }
        }
        CircularWord(w.rotation(best))
    }

    /// The least rotation, which is also the representative chosen by
    /// [`sigma0`].
    pub fn canonical(&self) -> &Word {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }
}

fn compare_rotations(letters: &[u16], a: usize, b: usize) -> Ordering {
    let n = letters.len();
    (0..n)
        .map(|i| letters[(a + i) % n].cmp(&letters[(b + i) % n]))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

pub fn circular_class(w: &Word) -> CircularWord {
    CircularWord::of(w)
}

/// An element of `A/[A,A]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelPoly {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<CircularWord, BigInt>,
}

impl AbelPoly {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        Self {
            alphabet: Arc::clone(alphabet),
            terms: BTreeMap::new(),
        }
    }

    /// `c` times the class of `w`.
    pub fn class(alphabet: &Arc<Alphabet>, c: impl Into<BigInt>, w: &Word) -> Self {
        assert!(w.fits(alphabet), "word uses letters outside the alphabet");
        let mut out = Self::zero(alphabet);
        out.add_term(CircularWord::of(w), c.into());
        out
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&CircularWord, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, class: &CircularWord) -> BigInt {
        self.terms.get(class).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, class: CircularWord, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(class) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn same_alphabet(&self, other: &AbelPoly) -> bool {
        Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet
    }

    pub fn checked_add(&self, other: &AbelPoly) -> Result<AbelPoly> {
        if !self.same_alphabet(other) {
            return Err(Error::AlphabetMismatch);
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &AbelPoly) -> Result<AbelPoly> {
        self.checked_add(&-other)
    }

    pub fn scale(&self, c: &BigInt) -> AbelPoly {
        if c.is_zero() {
            return AbelPoly::zero(&self.alphabet);
        }
        AbelPoly {
            alphabet: Arc::clone(&self.alphabet),
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    /// Divides every coefficient by `d`, failing on the first class whose
    /// coefficient is not a multiple of `d`.
    ///
    /// # Panics
    ///
    /// Panics if `d < 1`.
    pub fn divide_exact(&self, d: &BigInt) -> Result<AbelPoly> {
        assert!(*d >= BigInt::from(1), "divisor must be positive");
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::NotDivisible {
                    class: w.canonical().display_plain(&self.alphabet).to_string(),
                    coefficient: c.clone(),
                    divisor: d.clone(),
                });
            }
            terms.insert(w.clone(), q);
        }
        Ok(AbelPoly {
            alphabet: Arc::clone(&self.alphabet),
            terms,
        })
    }

    pub fn is_divisible_by(&self, d: &BigInt) -> bool {
        self.terms.values().all(|c| c.is_multiple_of(d))
    }

    /// Coefficients reduced into `[0, m)`.
    pub fn reduce_mod(&self, m: &BigInt) -> AbelPoly {
        AbelPoly {
            alphabet: Arc::clone(&self.alphabet),
            terms: self
                .terms
                .iter()
                .filter_map(|(w, c)| {
                    let r = c.mod_floor(m);
                    (!r.is_zero()).then(|| (w.clone(), r))
                })
                .collect(),
        }
    }

    /// Drops every class of degree above `d`.
    pub fn truncate(&self, d: usize) -> AbelPoly {
        AbelPoly {
            alphabet: Arc::clone(&self.alphabet),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree() <= d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }
}

/// The quotient map `A -> A/[A,A]`.
pub fn abelianize(f: &FreePoly) -> AbelPoly {
    let mut out = AbelPoly::zero(f.alphabet());
    for (w, c) in f.terms() {
        out.add_term(CircularWord::of(w), c.clone());
    }
    out
}

/// The additive section of [`abelianize`] sending each circular word to its
/// lexicographically least rotation.
pub fn sigma0(alpha: &AbelPoly) -> FreePoly {
    FreePoly::from_terms(
        alpha.alphabet(),
        alpha
            .terms()
            .map(|(w, c)| (w.canonical().clone(), c.clone())),
    )
}

pub fn divide_exact(alpha: &AbelPoly, d: &BigInt) -> Result<AbelPoly> {
    alpha.divide_exact(d)
}

/// `f` lies in `[A,A]` exactly when its abelianization vanishes.
pub fn in_commutator_subgroup(f: &FreePoly) -> bool {
    abelianize(f).is_zero()
}

impl Add for &AbelPoly {
    type Output = AbelPoly;
    fn add(self, rhs: &AbelPoly) -> AbelPoly {
        self.checked_add(rhs)
            .expect("operands must share an alphabet")
    }
}

impl Sub for &AbelPoly {
    type Output = AbelPoly;
    fn sub(self, rhs: &AbelPoly) -> AbelPoly {
        self.checked_sub(rhs)
            .expect("operands must share an alphabet")
    }
}

impl Neg for &AbelPoly {
    type Output = AbelPoly;
    fn neg(self) -> AbelPoly {
        AbelPoly {
            alphabet: Arc::clone(&self.alphabet),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

/// Classes print as their canonical word in brackets, e.g. `[XYXY] - [XXYY]`;
/// the unit class prints as a bare integer.
impl fmt::Display for AbelPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(w, _)| (Reverse(w.degree()), *w));
        write_signed_sum(
            f,
            terms.into_iter().map(|(w, c)| {
                let body = (w.degree() > 0)
                    .then(|| format!("[{}]", w.canonical().display_plain(&self.alphabet)));
                (c, body)
            }),
            false,
        )
    }
}
