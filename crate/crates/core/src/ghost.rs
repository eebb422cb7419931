//! Witt vectors through the ghost map.
//!
//! For a free algebra `A`, the quotient `A/[A,A]` has no p-torsion, so the
//! ghost map identifies the truncated group `W_n(A)` with its image in
//! `(A/[A,A])^n`. Elements of `W_n(A)` are therefore stored as
//! [`GhostVector`]s: they enter through coordinates (`q_n`) and are added,
//! shifted and compared componentwise.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::cycquot::{abelianize, AbelPoly};
use crate::error::{Error, Result};
use crate::freealg::{Alphabet, FreePoly};

/// Alphabet, prime and truncation length shared by a computation.
///
/// `length` counts components: ghost vectors and coordinate tuples have
/// `length` entries, and tuples in `X_n(A)` have `length = n + 1` entries,
/// indexed `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WittContext {
    alphabet: Arc<Alphabet>,
    p: u64,
    length: usize,
}

impl WittContext {
    pub fn new(alphabet: &Arc<Alphabet>, p: u64, length: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if length == 0 {
            return Err(Error::ZeroLength);
        }
        Ok(Self {
            alphabet: Arc::clone(alphabet),
            p,
            length,
        })
    }

    /// Context for `X_level(A)`, whose tuples have `level + 1` entries.
    pub fn for_level(alphabet: &Arc<Alphabet>, p: u64, level: usize) -> Result<Self> {
        Self::new(alphabet, p, level + 1)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn p_big(&self) -> BigInt {
        BigInt::from(self.p)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Index of the last component.
    pub fn level(&self) -> usize {
        self.length - 1
    }

    pub fn with_length(&self, length: usize) -> Result<Self> {
        Self::new(&self.alphabet, self.p, length)
    }

    /// Validates `coords` as a coordinate tuple for this context.
    pub fn coordinates(&self, coords: Vec<FreePoly>) -> Result<CoordinateTuple> {
        if coords.len() != self.length {
            return Err(Error::LengthMismatch {
                expected: self.length,
                found: coords.len(),
            });
        }
        if coords.iter().any(|a| **a.alphabet() != *self.alphabet) {
            return Err(Error::AlphabetMismatch);
        }
        Ok(CoordinateTuple(coords))
    }

    /// Like [`coordinates`](Self::coordinates), padding missing trailing
    /// coordinates with zero.
    pub fn coordinates_padded(&self, mut coords: Vec<FreePoly>) -> Result<CoordinateTuple> {
        if coords.len() < self.length {
            coords.resize(self.length, FreePoly::zero(&self.alphabet));
        }
        self.coordinates(coords)
    }

    pub fn zero_coordinates(&self) -> CoordinateTuple {
        CoordinateTuple(vec![FreePoly::zero(&self.alphabet); self.length])
    }

    /// `omega_i(a_0, ..., a_i)` in `A`, before abelianization.
    pub fn witt_polynomial(&self, i: usize, coords: &CoordinateTuple) -> Result<FreePoly> {
        if i >= self.length {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.length,
            });
        }
        witt_polynomial(self.p, i, coords.as_slice())
    }

    /// The truncated ghost map `A^n -> (A/[A,A])^n`.
    pub fn ghost_map(&self, coords: &CoordinateTuple) -> GhostVector {
        let components = witt_polynomials(self.p, coords.as_slice(), self.length)
            .iter()
            .map(abelianize)
            .collect();
        GhostVector {
            ctx: self.clone(),
            components,
        }
    }

    /// `omega-bar(q_n(coords))`: the element of `W_n(A)` with these
    /// coordinates. Same as [`ghost_map`](Self::ghost_map).
    pub fn w_from_coordinates(&self, coords: &CoordinateTuple) -> GhostVector {
        self.ghost_map(coords)
    }

    /// Ghost of the Teichmüller representative `(a, 0, ..., 0)`:
    /// `(a, a^p, ..., a^(p^(n-1)))` in `A/[A,A]`.
    pub fn teichmuller(&self, a: &FreePoly) -> GhostVector {
        GhostVector {
            ctx: self.clone(),
            components: p_power_chain(a, self.p, self.length)
                .iter()
                .map(abelianize)
                .collect(),
        }
    }

    pub fn zero(&self) -> GhostVector {
        GhostVector {
            ctx: self.clone(),
            components: vec![AbelPoly::zero(&self.alphabet); self.length],
        }
    }

    /// Checks `ghost(a_0, a_1, ...) == sum_i V^i <a_i>`, building the right
    /// side only from Teichmüller lifts, `V` and addition.
    pub fn check_wagen_decomposition(&self, coords: &CoordinateTuple) -> bool {
        let mut sum = self.zero();
        for (i, a) in coords.iter().enumerate() {
            let mut term = self.teichmuller(a);
            for _ in 0..i {
                term = term.verschiebung();
            }
            sum = sum.add(&term).expect("same context");
        }
        sum == self.ghost_map(coords)
    }
}

/// A tuple `(a_0, ..., a_{n-1})` of elements of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateTuple(Vec<FreePoly>);

impl CoordinateTuple {
    pub fn as_slice(&self) -> &[FreePoly] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, FreePoly> {
        self.0.iter()
    }

    pub fn get(&self, i: usize) -> Option<&FreePoly> {
        self.0.get(i)
    }

    pub fn into_vec(self) -> Vec<FreePoly> {
        self.0
    }

    /// `(0, a_0, ..., a_{n-2})`.
    pub fn shifted(&self) -> CoordinateTuple {
        let zero = FreePoly::zero(self.0[0].alphabet());
        let mut v = Vec::with_capacity(self.0.len());
        v.push(zero);
        v.extend(self.0[..self.0.len() - 1].iter().cloned());
        CoordinateTuple(v)
    }
}

impl fmt::Display for CoordinateTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// An element of `W_n(A)`, represented by its ghost components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GhostVector {
    ctx: WittContext,
    components: Vec<AbelPoly>,
}

impl GhostVector {
    pub(crate) fn from_components(ctx: &WittContext, components: Vec<AbelPoly>) -> Self {
        debug_assert_eq!(components.len(), ctx.length);
        Self {
            ctx: ctx.clone(),
            components,
        }
    }

    pub fn context(&self) -> &WittContext {
        &self.ctx
    }

    pub fn components(&self) -> &[AbelPoly] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(AbelPoly::is_zero)
    }

    fn check_context(&self, other: &GhostVector) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Componentwise sum; the ghost map is additive on `W_n(A)`.
    pub fn add(&self, other: &GhostVector) -> Result<GhostVector> {
        self.check_context(other)?;
        Ok(GhostVector {
            ctx: self.ctx.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn neg(&self) -> GhostVector {
        GhostVector {
            ctx: self.ctx.clone(),
            components: self.components.iter().map(|a| -a).collect(),
        }
    }

    /// Verschiebung on ghosts: `(g_0, ..., g_{n-1}) -> (0, p g_0, ..., p g_{n-2})`.
    pub fn verschiebung(&self) -> GhostVector {
        let p = self.ctx.p_big();
        let mut components = Vec::with_capacity(self.components.len());
        components.push(AbelPoly::zero(&self.ctx.alphabet));
        components.extend(
            self.components[..self.components.len() - 1]
                .iter()
                .map(|g| g.scale(&p)),
        );
        GhostVector {
            ctx: self.ctx.clone(),
            components,
        }
    }

    /// Equality in `W_n(A)`, valid because the ghost map is injective for
    /// free algebras.
    pub fn w_equal(&self, other: &GhostVector) -> Result<bool> {
        self.check_context(other)?;
        Ok(self.components == other.components)
    }
}

impl fmt::Display for GhostVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.components)
    }
}

pub(crate) fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// `[a, a^p, a^(p^2), ...]` with `count` entries.
pub fn p_power_chain(a: &FreePoly, p: u64, count: usize) -> Vec<FreePoly> {
    let mut chain = Vec::with_capacity(count);
    if count == 0 {
        return chain;
    }
    chain.push(a.clone());
    for i in 1..count {
        let next = chain[i - 1].pow(p);
        chain.push(next);
    }
    chain
}

/// `omega_i = a_0^(p^i) + p a_1^(p^(i-1)) + ... + p^i a_i`.
///
/// Only `coords[..=i]` is read.
pub fn witt_polynomial(p: u64, i: usize, coords: &[FreePoly]) -> Result<FreePoly> {
    if i >= coords.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: coords.len(),
        });
    }
    let alphabet = coords[0].alphabet();
    let p_big = BigInt::from(p);
    let mut sum = FreePoly::zero(alphabet);
    for (k, a) in coords[..=i].iter().enumerate() {
        let exp = Pow::pow(&BigInt::from(p), (i - k) as u32);
        let exp = u64::try_from(exp).map_err(|_| Error::Unsupported("exponent overflow".into()))?;
        let scalar: BigInt = Pow::pow(&p_big, k as u32);
        sum = sum.checked_add(&a.pow(exp).scale(&scalar))?;
    }
    Ok(sum)
}

/// `omega_0, ..., omega_{count-1}`, sharing the power chains.
pub fn witt_polynomials(p: u64, coords: &[FreePoly], count: usize) -> Vec<FreePoly> {
    assert!(count <= coords.len(), "not enough coordinates");
    if count == 0 {
        return Vec::new();
    }
    let alphabet = coords[0].alphabet();
    let p_big = BigInt::from(p);
    let mut out = vec![FreePoly::zero(alphabet); count];
    let mut scalar = BigInt::one();
    for (k, a) in coords[..count].iter().enumerate() {
        for (j, power) in p_power_chain(a, p, count - k).into_iter().enumerate() {
            let slot = &mut out[k + j];
            *slot = &*slot + &power.scale(&scalar);
        }
        scalar *= &p_big;
    }
    out
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::freealg::Word;
    use crate::testing::{poly, xy};

    fn ctx(p: u64, n: usize) -> WittContext {
        WittContext::new(&xy(), p, n).unwrap()
    }

    fn var(name: &str) -> FreePoly {
        FreePoly::var(&xy(), name).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::from_letters(
            s.chars()
                .map(|c| if c == 'X' { 0 } else { 1 })
                .collect::<Vec<_>>(),
        )
    }

    fn class(c: i64, s: &str) -> AbelPoly {
        AbelPoly::class(&xy(), c, &w(s))
    }

    #[test]
    fn context_validation() {
        assert_eq!(WittContext::new(&xy(), 4, 2), Err(Error::NotPrime(4)));
        assert_eq!(WittContext::new(&xy(), 1, 2), Err(Error::NotPrime(1)));
        assert_eq!(WittContext::new(&xy(), 2, 0), Err(Error::ZeroLength));
        assert!(WittContext::new(&xy(), 3, 1).is_ok());
        assert_eq!(WittContext::for_level(&xy(), 2, 2).unwrap().length(), 3);
        assert!(matches!(
            ctx(2, 2).coordinates(vec![var("X")]),
            Err(Error::LengthMismatch {
                expected: 2,
                found: 1
            })
        ));
    }

    #[test]
    fn witt_polynomial_examples() {
        let c = ctx(2, 3);
        let x = var("X");
        let y = var("Y");
        let zero = FreePoly::zero(&xy());
        let coords = c
            .coordinates(vec![x.clone(), y.clone(), zero.clone()])
            .unwrap();
        assert_eq!(c.witt_polynomial(0, &coords).unwrap(), x);
        assert_eq!(
            c.witt_polynomial(1, &coords).unwrap(),
            &x.pow(2) + &y.scale(&2.into())
        );
        let only_x = c.coordinates(vec![x.clone(), zero.clone(), zero]).unwrap();
        assert_eq!(c.witt_polynomial(2, &only_x).unwrap(), x.pow(4));
        assert!(matches!(
            c.witt_polynomial(3, &coords),
            Err(Error::IndexOutOfRange { index: 3, len: 3 })
        ));
    }

    #[test]
    fn ghost_map_examples() {
        let c = ctx(2, 2);
        assert!(c.ghost_map(&c.zero_coordinates()).is_zero());

        let comm = var("X").commutator(&var("Y")).unwrap();
        let coords = c.coordinates_padded(vec![comm]).unwrap();
        let g = c.ghost_map(&coords);
        assert!(g.components()[0].is_zero());
        assert_eq!(g.components()[1], &class(2, "XYXY") - &class(2, "XXYY"));
    }

    #[test]
    fn single_slot_ghost() {
        // a in slot i gives (0, ..., 0, p^i a, p^i a^p, ...).
        let c = ctx(2, 4);
        let a = &var("X") + &(&var("X") * &var("Y"));
        for i in 0..4 {
            let mut coords = vec![FreePoly::zero(&xy()); 4];
            coords[i] = a.clone();
            let g = c.ghost_map(&c.coordinates(coords).unwrap());
            let scalar = BigInt::from(1u32 << i);
            for j in 0..4 {
                let expected = if j < i {
                    AbelPoly::zero(&xy())
                } else {
                    abelianize(&a.pow(1 << (j - i))).scale(&scalar)
                };
                assert_eq!(g.components()[j], expected, "slot {i}, component {j}");
            }
        }
    }

    #[test]
    fn teichmuller_and_verschiebung() {
        let c = ctx(2, 3);
        assert!(c.teichmuller(&FreePoly::zero(&xy())).is_zero());
        let one = c.teichmuller(&FreePoly::one(&xy()));
        assert!(one
            .components()
            .iter()
            .all(|g| *g == AbelPoly::class(&xy(), 1, &Word::empty())));

        let s = &var("X") + &var("Y");
        let t = c.teichmuller(&s);
        assert_eq!(t.components()[1], abelianize(&s.pow(2)));
        assert_eq!(t.components()[2], abelianize(&s.pow(4)));

        let v = c.teichmuller(&var("X")).verschiebung();
        assert_eq!(
            v.components(),
            &[AbelPoly::zero(&xy()), class(2, "X"), class(2, "XX")]
        );
        assert!(c.zero().verschiebung().is_zero());
        let shifted = c
            .coordinates(vec![FreePoly::zero(&xy()), var("X"), FreePoly::zero(&xy())])
            .unwrap();
        assert!(c.ghost_map(&shifted).w_equal(&v).unwrap());
    }

    #[test]
    fn addition_of_teichmullers() {
        let c = ctx(2, 3);
        let sum = c
            .teichmuller(&var("X"))
            .add(&c.teichmuller(&var("Y")))
            .unwrap();
        assert_eq!(sum.components()[0], &class(1, "X") + &class(1, "Y"));
        assert_eq!(sum.components()[1], &class(1, "XX") + &class(1, "YY"));
        assert_eq!(sum.components()[2], &class(1, "XXXX") + &class(1, "YYYY"));
        assert_eq!(sum.add(&c.zero()).unwrap(), sum);
    }

    #[test]
    fn equality_examples() {
        let c = ctx(2, 2);
        let x = var("X");
        let y = var("Y");
        assert!(!c.teichmuller(&x).w_equal(&c.teichmuller(&y)).unwrap());
        let a = c.coordinates(vec![x.clone(), y.clone()]).unwrap();
        let b = c
            .coordinates(vec![x.clone(), &y + &x.commutator(&y).unwrap()])
            .unwrap();
        assert!(c.ghost_map(&a).w_equal(&c.ghost_map(&b)).unwrap());

        let other = ctx(3, 2);
        assert_eq!(
            c.teichmuller(&x).w_equal(&other.teichmuller(&x)),
            Err(Error::ContextMismatch)
        );
        assert_eq!(
            c.teichmuller(&x).add(&ctx(2, 3).teichmuller(&x)),
            Err(Error::ContextMismatch)
        );
    }

    #[test]
    fn wagen_examples() {
        let c = ctx(2, 2);
        assert!(c.check_wagen_decomposition(&c.coordinates(vec![var("X"), var("Y")]).unwrap()));
        assert!(c.check_wagen_decomposition(&c.zero_coordinates()));
    }

    #[test]
    fn primes() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    fn coords_strategy(n: usize) -> impl Strategy<Value = Vec<FreePoly>> {
        proptest::collection::vec(poly(3, 2), n)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn witt_polynomial_shift(v in coords_strategy(3), p in prop::sample::select(vec![2u64, 3])) {
            let c = ctx(p, 3);
            let coords = c.coordinates(v).unwrap();
            let shifted = coords.shifted();
            for i in 1..3 {
                prop_assert_eq!(
                    c.witt_polynomial(i, &shifted).unwrap(),
                    c.witt_polynomial(i - 1, &coords).unwrap().scale(&BigInt::from(p))
                );
            }
        }

        #[test]
        fn ghost_verschiebung_matches_shift(v in coords_strategy(3)) {
            let c = ctx(2, 3);
            let coords = c.coordinates(v).unwrap();
            prop_assert_eq!(c.ghost_map(&coords.shifted()), c.ghost_map(&coords).verschiebung());
        }

        #[test]
        fn shared_chains_match_single_polynomials(v in coords_strategy(3)) {
            let all = witt_polynomials(2, &v, 3);
            for (i, w) in all.iter().enumerate() {
                prop_assert_eq!(w, &witt_polynomial(2, i, &v).unwrap());
            }
        }

        #[test]
        fn ghost_addition_is_abelian(a in coords_strategy(2), b in coords_strategy(2), d in coords_strategy(2)) {
            let c = ctx(2, 2);
            let (u, v, t) = (
                c.ghost_map(&c.coordinates(a).unwrap()),
                c.ghost_map(&c.coordinates(b).unwrap()),
                c.ghost_map(&c.coordinates(d).unwrap()),
            );
            prop_assert_eq!(u.add(&v).unwrap(), v.add(&u).unwrap());
            prop_assert_eq!(
                u.add(&v).unwrap().add(&t).unwrap(),
                u.add(&v.add(&t).unwrap()).unwrap()
            );
            prop_assert_eq!(u.add(&c.zero()).unwrap(), u.clone());
            prop_assert!(u.add(&u.neg()).unwrap().is_zero());
        }

        #[test]
        fn verschiebung_is_additive(a in coords_strategy(3), b in coords_strategy(3)) {
            let c = ctx(2, 3);
            let u = c.ghost_map(&c.coordinates(a).unwrap());
            let v = c.ghost_map(&c.coordinates(b).unwrap());
            prop_assert_eq!(
                u.add(&v).unwrap().verschiebung(),
                u.verschiebung().add(&v.verschiebung()).unwrap()
            );
        }

        #[test]
        fn wagen_decomposition_holds(v in coords_strategy(4)) {
            let c = ctx(2, 4);
            prop_assert!(c.check_wagen_decomposition(&c.coordinates(v).unwrap()));
        }
    }
}
