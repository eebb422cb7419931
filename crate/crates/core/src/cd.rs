//! The truncated Cuntz–Deninger group `X_n(A)`.
//!
//! `X_n(A)` sits inside `A^{n+1}` with componentwise ring operations. Its
//! elements are built from Teichmüller lifts `<a> = (a, a^p, ..., a^(p^n))`
//! and the Verschiebung `V(a_0, ..., a_n) = p (0, a_0, ..., a_{n-1})`.
//! Tuples are not checked for membership in `X_n(A)`; the constructors
//! below are the intended way to produce them.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::cycquot::{abelianize, AbelPoly};
use crate::error::{Error, Result};
use crate::f2::f2_span_membership;
use crate::freealg::{Alphabet, FreePoly, Word};
use crate::ghost::{
    p_power_chain, witt_polynomials, write_tuple, CoordinateTuple, GhostVector, WittContext,
};

/// An element of `A^{n+1}`, usually one of `X_n(A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XVector {
    ctx: WittContext,
    entries: Vec<FreePoly>,
}

impl XVector {
    /// A plain tuple. Nothing checks that it lies in `X_n(A)`.
    pub fn from_entries(ctx: &WittContext, entries: Vec<FreePoly>) -> Result<Self> {
        ctx.coordinates(entries).map(|c| Self {
            ctx: ctx.clone(),
            entries: c.into_vec(),
        })
    }

    pub fn zero(ctx: &WittContext) -> Self {
        Self {
            ctx: ctx.clone(),
            entries: ctx.zero_coordinates().into_vec(),
        }
    }

    /// `<a> = (a, a^p, a^(p^2), ..., a^(p^n))`.
    pub fn teichmuller(ctx: &WittContext, a: &FreePoly) -> Self {
        Self {
            ctx: ctx.clone(),
            entries: p_power_chain(a, ctx.p(), ctx.length()),
        }
    }

    /// `<a_1> <a_2> ... <a_r>`.
    pub fn teichmuller_product(ctx: &WittContext, factors: &[FreePoly]) -> Result<Self> {
        let mut acc = Self::one(ctx);
        for a in factors {
            acc = acc.mul(&Self::teichmuller(ctx, a))?;
        }
        Ok(acc)
    }

    pub fn one(ctx: &WittContext) -> Self {
        Self::teichmuller(ctx, &FreePoly::one(ctx.alphabet()))
    }

    /// `Omega(a_0, ..., a_n) = (omega_0(a), ..., omega_n(a))`, kept in `A`
    /// rather than `A/[A,A]`.
    pub fn omega_map(ctx: &WittContext, coords: &CoordinateTuple) -> Self {
        Self {
            ctx: ctx.clone(),
            entries: witt_polynomials(ctx.p(), coords.as_slice(), ctx.length()),
        }
    }

    pub fn context(&self) -> &WittContext {
        &self.ctx
    }

    pub fn entries(&self) -> &[FreePoly] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &FreePoly {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FreePoly::is_zero)
    }

    fn check_context(&self, other: &XVector) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn zip_with(
        &self,
        other: &XVector,
        f: impl Fn(&FreePoly, &FreePoly) -> FreePoly,
    ) -> Result<Self> {
        self.check_context(other)?;
        Ok(Self {
            ctx: self.ctx.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &XVector) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &XVector) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &XVector) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    /// `xy - yx`, componentwise.
    pub fn commutator(&self, other: &XVector) -> Result<Self> {
        self.zip_with(other, |a, b| &(a * b) - &(b * a))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            ctx: self.ctx.clone(),
            entries: self.entries.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// `V(a_0, ..., a_n) = p (0, a_0, ..., a_{n-1})`.
    pub fn verschiebung(&self) -> Self {
        let p = self.ctx.p_big();
        let mut entries = Vec::with_capacity(self.entries.len());
        entries.push(FreePoly::zero(self.ctx.alphabet()));
        entries.extend(
            self.entries[..self.entries.len() - 1]
                .iter()
                .map(|a| a.scale(&p)),
        );
        Self {
            ctx: self.ctx.clone(),
            entries,
        }
    }

    pub fn verschiebung_pow(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |acc, _| acc.verschiebung())
    }

    /// The map `gamma`: componentwise abelianization into `(A/[A,A])^{n+1}`.
    pub fn abelianize(&self) -> GhostVector {
        GhostVector::from_components(&self.ctx, self.entries.iter().map(abelianize).collect())
    }
}

impl fmt::Display for XVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

fn check_factors(m: usize, n_shift: usize, as_: &[FreePoly], bs: &[FreePoly]) -> Result<()> {
    if m > n_shift {
        return Err(Error::ShiftOrder { m, n: n_shift });
    }
    if as_.is_empty() || bs.is_empty() {
        return Err(Error::EmptyFactors);
    }
    Ok(())
}

/// `p^m V^n([<a_1>...<a_s>, <b_1^(p^(n-m))>...<b_t^(p^(n-m))>])` with
/// `n = n_shift`. These elements generate the closed commutator subgroup
/// of `X(A)`.
pub fn commutator_generator(
    ctx: &WittContext,
    m: usize,
    n_shift: usize,
    as_: &[FreePoly],
    bs: &[FreePoly],
) -> Result<XVector> {
    check_factors(m, n_shift, as_, bs)?;
    let exp = Pow::pow(&BigInt::from(ctx.p()), (n_shift - m) as u32);
    let exp = u64::try_from(exp).map_err(|_| Error::Unsupported("exponent overflow".into()))?;
    if n_shift >= ctx.length() {
        return Ok(XVector::zero(ctx));
    }
    // V^n drops the last n entries, so the bracket is only needed at the
    // shorter length. This keeps b^(p^(n-m)) from being raised needlessly.
    let inner_ctx = ctx.with_length(ctx.length() - n_shift)?;
    let raised: Vec<FreePoly> = bs.iter().map(|b| b.pow(exp)).collect();
    let left = XVector::teichmuller_product(&inner_ctx, as_)?;
    let right = XVector::teichmuller_product(&inner_ctx, &raised)?;
    let bracket = left.commutator(&right)?;

    let scalar: BigInt = Pow::pow(&ctx.p_big(), (m + n_shift) as u32);
    let mut entries = vec![FreePoly::zero(ctx.alphabet()); n_shift];
    entries.extend(bracket.entries.iter().map(|e| e.scale(&scalar)));
    XVector::from_entries(ctx, entries)
}

/// Compares `[V^n(prod <a_i>), V^m(prod <b_j>)]`, built from full-length
/// Teichmüller products and repeated [`XVector::verschiebung`], with
/// [`commutator_generator`], entry by entry.
pub fn check_bracket_identity(
    ctx: &WittContext,
    m: usize,
    n_shift: usize,
    as_: &[FreePoly],
    bs: &[FreePoly],
) -> Result<bool> {
    check_factors(m, n_shift, as_, bs)?;
    let left = XVector::teichmuller_product(ctx, as_)?.verschiebung_pow(n_shift);
    let right = XVector::teichmuller_product(ctx, bs)?.verschiebung_pow(m);
    let lhs = left.commutator(&right)?;
    Ok(lhs == commutator_generator(ctx, m, n_shift, as_, bs)?)
}

/// The subgroup `H = A_4^0 + F^5 A + 2A` of `Z{X, Y}`, where `A_4^0` is
/// spanned by the degree-4 words other than `XYXY` and `YXYX`.
///
/// Only defined for a two-letter alphabet and `p = 2`.
#[derive(Debug, Clone)]
pub struct HIdeal {
    excluded: [Word; 2],
}

impl HIdeal {
    pub fn new(alphabet: &Alphabet) -> Result<Self> {
        if alphabet.len() != 2 {
            return Err(Error::Unsupported(format!(
                "H is defined over a two-letter alphabet, got {{{alphabet}}}"
            )));
        }
        Ok(Self {
            excluded: [
                Word::from_letters(vec![0, 1, 0, 1]),
                Word::from_letters(vec![1, 0, 1, 0]),
            ],
        })
    }

    /// After reducing mod 2, `f` must have no terms of degree at most 3 and
    /// no `XYXY`/`YXYX` terms.
    pub fn contains(&self, f: &FreePoly) -> bool {
        f.reduce_mod(&BigInt::from(2))
            .terms()
            .all(|(w, _)| match w.degree() {
                0..=3 => false,
                4 => !self.excluded.contains(w),
                _ => true,
            })
    }
}

pub fn h_membership(f: &FreePoly) -> Result<bool> {
    Ok(HIdeal::new(f.alphabet())?.contains(f))
}

fn require_h_setting(ctx: &WittContext) -> Result<()> {
    if ctx.p() != 2 {
        return Err(Error::Unsupported(format!(
            "H requires p = 2, got p = {}",
            ctx.p()
        )));
    }
    if ctx.length() < 2 {
        return Err(Error::Unsupported(
            "component 1 needs level at least 1".into(),
        ));
    }
    Ok(())
}

/// Component 1 of the commutator generator lies in `H`. Holds for every
/// generator of the closed commutator subgroup of `X(Z{X, Y})` at `p = 2`.
pub fn check_component1_in_h(
    ctx: &WittContext,
    m: usize,
    n_shift: usize,
    as_: &[FreePoly],
    bs: &[FreePoly],
) -> Result<bool> {
    require_h_setting(ctx)?;
    let g = commutator_generator(ctx, m, n_shift, as_, bs)?;
    h_membership(g.entry(1))
}

/// `abelianize(w^2)` for every word `w` of degree at most `max_degree`.
pub fn abelianized_squares(
    alphabet: &std::sync::Arc<Alphabet>,
    max_degree: usize,
) -> Vec<AbelPoly> {
    all_words(alphabet.len(), max_degree)
        .into_iter()
        .map(|w| AbelPoly::class(alphabet, 1, &w.repeat(2)))
        .collect()
}

/// Every word over `k` letters of degree at most `max_degree`, in word order.
pub fn all_words(k: usize, max_degree: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_degree {
        layer = layer
            .iter()
            .flat_map(|w| (0..k as u16).map(move |l| w.concat(&Word::letter(l))))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Is `target` congruent to some `c^2` modulo `2A + [A,A] + F^5 A`?
///
/// Since `(a + b)^2 = a^2 + b^2` modulo `2A + [A,A]`, and squares of words of
/// degree at least 3 land in `F^5`, this is F2-span membership of `target`
/// among the abelianized squares of words of degree at most 2.
pub fn is_square_mod_2_comm_f5(target: &FreePoly) -> bool {
    let gens = abelianized_squares(target.alphabet(), 2);
    f2_span_membership(&abelianize(target), &gens, 4)
}

/// `X^2 Y^2` is not a square modulo `2A + [A,A] + F^5 A` in `Z{X, Y}`.
pub fn check_lemma_xyc() -> bool {
    let xy = Alphabet::xy();
    let target = FreePoly::monomial(&xy, BigInt::one(), Word::from_letters(vec![0, 0, 1, 1]));
    !is_square_mod_2_comm_f5(&target)
}
