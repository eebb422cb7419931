use std::cmp::Reverse;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Alphabet, Word};
use crate::error::{Error, Result};

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which sorts below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// An element of the free associative ring `Z{X1, ..., Xk}`.
///
/// Stored as a sparse map from words to nonzero integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreePoly {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<Word, BigInt>,
}

impl FreePoly {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        Self {
            alphabet: Arc::clone(alphabet),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: &Arc<Alphabet>) -> Self {
        Self::constant(alphabet, BigInt::one())
    }

    pub fn constant(alphabet: &Arc<Alphabet>, c: impl Into<BigInt>) -> Self {
        Self::monomial(alphabet, c, Word::empty())
    }

    /// The generator with the given index.
    ///
    /// # Panics
    ///
    /// Panics if `index` is outside the alphabet.
    pub fn generator(alphabet: &Arc<Alphabet>, index: u16) -> Self {
        assert!(
            usize::from(index) < alphabet.len(),
            "generator out of range"
        );
        Self::monomial(alphabet, 1, Word::letter(index))
    }

    /// The generator called `name`, if the alphabet has one.
    pub fn var(alphabet: &Arc<Alphabet>, name: &str) -> Option<Self> {
        alphabet
            .index_of(name)
            .map(|i| Self::generator(alphabet, i))
    }

    pub fn monomial(alphabet: &Arc<Alphabet>, c: impl Into<BigInt>, word: Word) -> Self {
        assert!(
            word.fits(alphabet),
            "word uses letters outside the alphabet"
        );
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(word, c);
        }
        Self {
            alphabet: Arc::clone(alphabet),
            terms,
        }
    }

    /// Collects `(word, coefficient)` pairs, merging repeated words.
    pub fn from_terms<I, C>(alphabet: &Arc<Alphabet>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Word, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(alphabet);
        for (w, c) in terms {
            assert!(w.fits(alphabet), "word uses letters outside the alphabet");
            p.add_term(w, c.into());
        }
        p
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &Word) -> BigInt {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Degree {
        // BTreeMap order is degree-first, so the last key has maximal degree.
        self.terms
            .keys()
            .next_back()
            .map_or(Degree::NegInfinity, |w| Degree::Finite(w.degree()))
    }

    pub fn same_alphabet(&self, other: &FreePoly) -> bool {
        Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet
    }

    fn check_alphabet(&self, other: &FreePoly) -> Result<()> {
        if self.same_alphabet(other) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub(crate) fn add_term(&mut self, word: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
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

    pub fn checked_add(&self, other: &FreePoly) -> Result<FreePoly> {
        self.check_alphabet(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &FreePoly) -> Result<FreePoly> {
        self.check_alphabet(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &FreePoly) -> Result<FreePoly> {
        self.check_alphabet(other)?;
        let mut out = FreePoly::zero(&self.alphabet);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        Ok(out)
    }

    /// The additive commutator `fg - gf`.
    pub fn commutator(&self, other: &FreePoly) -> Result<FreePoly> {
        self.checked_mul(other)?
            .checked_sub(&other.checked_mul(self)?)
    }

    pub fn scale(&self, c: &BigInt) -> FreePoly {
        if c.is_zero() {
            return FreePoly::zero(&self.alphabet);
        }
        FreePoly {
            alphabet: Arc::clone(&self.alphabet),
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    /// `f^k`, with `f^0 = 1`.
    pub fn pow(&self, mut k: u64) -> FreePoly {
        let mut result = FreePoly::one(&self.alphabet);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// The additive map sending each word `w` to `w^p`.
    pub fn phi(&self, p: u64) -> FreePoly {
        let p = usize::try_from(p).expect("exponent fits in usize");
        FreePoly {
            alphabet: Arc::clone(&self.alphabet),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.repeat(p), c.clone()))
                .collect(),
        }
    }

    /// The homogeneous component of degree `d`.
    pub fn graded_component(&self, d: usize) -> FreePoly {
        self.filter(|w| w.degree() == d)
    }

    /// Splits `f` into the part of degree `< n` and the part in `F^n`.
    pub fn filtration_split(&self, n: usize) -> (FreePoly, FreePoly) {
        (
            self.filter(|w| w.degree() < n),
            self.filter(|w| w.degree() >= n),
        )
    }

    /// Reduces every coefficient into `[0, m)`.
    ///
    /// # Panics
    ///
    /// Panics if `m < 2`.
    pub fn reduce_mod(&self, m: &BigInt) -> FreePoly {
        assert!(*m >= BigInt::from(2), "modulus must be at least 2");
        FreePoly {
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

    fn filter(&self, keep: impl Fn(&Word) -> bool) -> FreePoly {
        FreePoly {
            alphabet: Arc::clone(&self.alphabet),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }
}

fn expect_same<T>(r: Result<T>) -> T {
    r.expect("operands must share an alphabet")
}

impl Add for &FreePoly {
    type Output = FreePoly;
    fn add(self, rhs: &FreePoly) -> FreePoly {
        expect_same(self.checked_add(rhs))
    }
}

impl Sub for &FreePoly {
    type Output = FreePoly;
    fn sub(self, rhs: &FreePoly) -> FreePoly {
        expect_same(self.checked_sub(rhs))
    }
}

impl Mul for &FreePoly {
    type Output = FreePoly;
    fn mul(self, rhs: &FreePoly) -> FreePoly {
        expect_same(self.checked_mul(rhs))
    }
}

impl Neg for &FreePoly {
    type Output = FreePoly;
    fn neg(self) -> FreePoly {
        FreePoly {
            alphabet: Arc::clone(&self.alphabet),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for FreePoly {
            type Output = FreePoly;
            fn $m(self, rhs: FreePoly) -> FreePoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FreePoly> for FreePoly {
            type Output = FreePoly;
            fn $m(self, rhs: &FreePoly) -> FreePoly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for FreePoly {
    type Output = FreePoly;
    fn neg(self) -> FreePoly {
        -&self
    }
}

/// Writes `terms` (already in print order) as a signed sum.
pub(crate) fn write_signed_sum<'a, I>(
    f: &mut fmt::Formatter<'_>,
    terms: I,
    explicit_star: bool,
) -> fmt::Result
where
    I: IntoIterator<Item = (&'a BigInt, Option<String>)>,
{
    let mut first = true;
    for (c, body) in terms {
        let neg = c.is_negative();
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let mag = c.abs();
        match body {
            None => write!(f, "{mag}")?,
            Some(body) if mag.is_one() => f.write_str(&body)?,
            Some(body) if explicit_star => write!(f, "{mag}*{body}")?,
            Some(body) => write!(f, "{mag}{body}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Canonical text form: highest degree first, lexicographic within a degree,
/// runs of a letter written as powers.
impl fmt::Display for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(w, _)| (Reverse(w.degree()), *w));
        let explicit_star = !self.alphabet.single_char();
        write_signed_sum(
            f,
            terms.into_iter().map(|(w, c)| {
                let body = (!w.is_empty()).then(|| w.display(&self.alphabet).to_string());
                (c, body)
            }),
            explicit_star,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (Arc<Alphabet>, FreePoly, FreePoly) {
        let a = Alphabet::xy();
        let x = FreePoly::generator(&a, 0);
        let y = FreePoly::generator(&a, 1);
        (a, x, y)
    }

    fn word(s: &str) -> Word {
        Word::from_letters(
            s.chars()
                .map(|c| if c == 'X' { 0 } else { 1 })
                .collect::<Vec<_>>(),
        )
    }

    fn poly(a: &Arc<Alphabet>, terms: &[(&str, i64)]) -> FreePoly {
        FreePoly::from_terms(a, terms.iter().map(|&(w, c)| (word(w), c)))
    }

    #[test]
    fn addition_examples() {
        let (a, x, y) = xy();
        let xy_ = &x * &y;
        let yx = &y * &x;
        assert_eq!(&(&xy_ - &yx) + &yx, xy_);
        assert_eq!(&x + &FreePoly::zero(&a), x);
        assert_eq!(&(&x + &y) + &(&x - &y), x.scale(&2.into()));
    }

    #[test]
    fn multiplication_examples() {
        let (a, x, y) = xy();
        assert_eq!(&FreePoly::one(&a) * &x, x);
        assert_eq!(
            &(&x + &y) * &(&x - &y),
            poly(&a, &[("XX", 1), ("XY", -1), ("YX", 1), ("YY", -1)])
        );
        let c = x.commutator(&y).unwrap();
        assert_eq!(
            &c * &c,
            poly(&a, &[("XYXY", 1), ("XYYX", -1), ("YXXY", -1), ("YXYX", 1)])
        );
    }

    #[test]
    fn powers() {
        let (a, x, y) = xy();
        assert_eq!(x.pow(3), poly(&a, &[("XXX", 1)]));
        assert_eq!(
            (&x + &y).pow(2),
            poly(&a, &[("XX", 1), ("XY", 1), ("YX", 1), ("YY", 1)])
        );
        assert_eq!((&x + &y).pow(0), FreePoly::one(&a));
        assert_eq!(FreePoly::zero(&a).pow(0), FreePoly::one(&a));
    }

    #[test]
    fn commutators() {
        let (a, x, y) = xy();
        assert_eq!(
            x.commutator(&y).unwrap(),
            poly(&a, &[("XY", 1), ("YX", -1)])
        );
        let f = &(&x * &y) + &y;
        assert!(f.commutator(&f).unwrap().is_zero());
        let yxy = poly(&a, &[("YXY", 1)]);
        assert_eq!(
            x.commutator(&yxy).unwrap(),
            poly(&a, &[("XYXY", 1), ("YXYX", -1)])
        );
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let (_, x, _) = xy();
        let other = Alphabet::new(["X", "Z"]).unwrap();
        let z = FreePoly::generator(&other, 1);
        assert_eq!(x.checked_add(&z), Err(Error::AlphabetMismatch));
        assert_eq!(x.checked_mul(&z), Err(Error::AlphabetMismatch));
        assert_eq!(x.commutator(&z), Err(Error::AlphabetMismatch));
        // Structurally equal alphabets built separately are the same ring.
        let again = Alphabet::xy();
        assert!(x.checked_add(&FreePoly::generator(&again, 1)).is_ok());
    }

    #[test]
    fn phi_examples() {
        let (a, _, _) = xy();
        let c = poly(&a, &[("XY", 1), ("YX", -1)]);
        assert_eq!(c.phi(2), poly(&a, &[("XYXY", 1), ("YXYX", -1)]));
        assert_eq!(
            poly(&a, &[("X", 3), ("Y", 1)]).phi(2),
            poly(&a, &[("XX", 3), ("YY", 1)])
        );
        assert!(FreePoly::zero(&a).phi(2).is_zero());
    }

    #[test]
    fn grading_and_filtration() {
        let (a, _, _) = xy();
        let f = poly(&a, &[("X", 1), ("XY", 1), ("XXX", 1)]);
        assert_eq!(f.graded_component(2), poly(&a, &[("XY", 1)]));
        assert!(f.graded_component(7).is_zero());

        let g = poly(&a, &[("XY", 1), ("XXXXX", 1)]);
        assert_eq!(
            g.filtration_split(5),
            (poly(&a, &[("XY", 1)]), poly(&a, &[("XXXXX", 1)]))
        );
        assert_eq!(g.filtration_split(0), (FreePoly::zero(&a), g.clone()));
        let h = poly(&a, &[("XYXY", 2), ("XXYY", 1)]);
        assert_eq!(h.filtration_split(5), (h.clone(), FreePoly::zero(&a)));
    }

    #[test]
    fn reduction_mod_m() {
        let (a, _, _) = xy();
        let two = BigInt::from(2);
        assert_eq!(
            poly(&a, &[("XYXY", 2), ("YX", 1)]).reduce_mod(&two),
            poly(&a, &[("YX", 1)])
        );
        assert_eq!(
            poly(&a, &[("X", 3)]).reduce_mod(&two),
            poly(&a, &[("X", 1)])
        );
        assert_eq!(
            poly(&a, &[("XYXY", -1)]).reduce_mod(&two),
            poly(&a, &[("XYXY", 1)])
        );
        assert_eq!(
            poly(&a, &[("X", -4)]).reduce_mod(&BigInt::from(3)),
            poly(&a, &[("X", 2)])
        );
    }

    #[test]
    fn degree_sentinel() {
        let (a, x, _) = xy();
        assert_eq!(FreePoly::zero(&a).degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(FreePoly::one(&a).degree(), Degree::Finite(0));
        assert_eq!(x.pow(5).degree(), Degree::Finite(5));
    }

    #[test]
    fn canonical_text() {
        let (a, x, y) = xy();
        assert_eq!(FreePoly::zero(&a).to_string(), "0");
        assert_eq!(x.commutator(&y).unwrap().to_string(), "XY - YX");
        assert_eq!(
            poly(&a, &[("XYXY", -1), ("XXYY", 2)]).to_string(),
            "2X^2Y^2 - XYXY"
        );
        assert_eq!(poly(&a, &[("XX", 1), ("Y", 2)]).to_string(), "X^2 + 2Y");
        assert_eq!(poly(&a, &[("", -3), ("X", 1)]).to_string(), "X - 3");
        let m = Alphabet::new(["a", "bb"]).unwrap();
        let f = FreePoly::from_terms(&m, [(Word::from_letters(vec![0, 1, 1]), 2)]);
        assert_eq!(f.to_string(), "2*a*bb^2");
    }
}
