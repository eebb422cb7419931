//! Seeded random inputs for the verification sweeps.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::freealg::{Alphabet, FreePoly, Word};

/// Default seed for every sweep, so repeated runs see identical inputs.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// A deterministic source of words and polynomials over a fixed alphabet.
#[derive(Debug, Clone)]
pub struct Sampler {
    alphabet: Arc<Alphabet>,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(alphabet: &Arc<Alphabet>, seed: u64) -> Self {
        Self {
            alphabet: Arc::clone(alphabet),
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    /// A uniform word whose degree is uniform in `min_degree..=max_degree`.
    pub fn word(&mut self, min_degree: usize, max_degree: usize) -> Word {
        let len = self.rng.gen_range(min_degree..=max_degree);
        let k = self.alphabet.len() as u16;
        Word::from_letters(
            (0..len)
                .map(|_| self.rng.gen_range(0..k))
                .collect::<Vec<_>>(),
        )
    }

    fn coefficient(&mut self) -> i64 {
        let c = self.rng.gen_range(1..=3);
        if self.rng.gen_bool(0.5) {
            c
        } else {
            -c
        }
    }

    /// Up to `max_terms` terms of degree at most `max_degree`, nonzero
    /// coefficients in `-3..=3`. May cancel to zero only if terms collide.
    pub fn poly(&mut self, max_terms: usize, max_degree: usize) -> FreePoly {
        let n = self.rng.gen_range(1..=max_terms.max(1));
        let terms: Vec<(Word, i64)> = (0..n)
            .map(|_| (self.word(0, max_degree), self.coefficient()))
            .collect();
        FreePoly::from_terms(&self.alphabet, terms)
    }

    /// Like [`Sampler::poly`] but with at least one term of positive degree.
    pub fn nonconstant_poly(&mut self, max_terms: usize, max_degree: usize) -> FreePoly {
        let lead = (self.word(1, max_degree.max(1)), self.coefficient());
        let n = self.rng.gen_range(0..max_terms.max(1));
        let mut terms = vec![lead];
        terms.extend((0..n).map(|_| (self.word(0, max_degree), self.coefficient())));
        let f = FreePoly::from_terms(&self.alphabet, terms);
        if f.degree().finite().unwrap_or(0) == 0 {
            // a collision cancelled the lead term; fall back to a monomial
            let w = self.word(1, max_degree.max(1));
            FreePoly::monomial(&self.alphabet, 1, w)
        } else {
            f
        }
    }

    /// `[u, v]` for words `u, v` of degree `1..=max_degree`, times a small
    /// coefficient.
    pub fn bracket(&mut self, max_degree: usize) -> FreePoly {
        let max_degree = max_degree.max(1);
        let (c, u, v) = (
            self.coefficient(),
            self.word(1, max_degree),
            self.word(1, max_degree),
        );
        let u = FreePoly::monomial(&self.alphabet, c, u);
        let v = FreePoly::monomial(&self.alphabet, 1, v);
        u.commutator(&v).expect("same alphabet")
    }

    /// A sum of `1..=max_brackets` brackets of words of degree
    /// `1..=max_degree`. Always lies in `[A,A]`.
    pub fn bracket_sum(&mut self, max_brackets: usize, max_degree: usize) -> FreePoly {
        let n = self.rng.gen_range(1..=max_brackets.max(1));
        (0..n).fold(FreePoly::zero(&self.alphabet), |acc, _| {
            &acc + &self.bracket(max_degree)
        })
    }

    pub fn coordinates(
        &mut self,
        len: usize,
        max_terms: usize,
        max_degree: usize,
    ) -> Vec<FreePoly> {
        (0..len).map(|_| self.poly(max_terms, max_degree)).collect()
    }

    pub fn gen_bool(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }
}
