//! Dense linear algebra over F2, used to decide span membership of
//! abelianized polynomials modulo 2.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::cycquot::{AbelPoly, CircularWord};

/// A bit vector packed into 64-bit limbs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitRow {
    limbs: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        Self {
            limbs: vec![0; len.div_ceil(64)],
        }
    }

    pub fn get(&self, i: usize) -> bool {
        self.limbs[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        self.limbs[i / 64] |= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.limbs.iter_mut().zip(&other.limbs) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.iter().all(|&l| l == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.limbs
            .iter()
            .enumerate()
            .find(|(_, &l)| l != 0)
            .map(|(i, l)| i * 64 + l.trailing_zeros() as usize)
    }
}

/// Rows are generators, columns are circular words of bounded degree.
#[derive(Debug, Clone)]
pub struct F2Matrix {
    columns: BTreeMap<CircularWord, usize>,
    rows: Vec<BitRow>,
}

impl F2Matrix {
    /// Builds the matrix of `rows` (reduced mod 2, classes above
    /// `degree_bound` dropped). `extra` contributes columns only.
    pub fn new(rows: &[AbelPoly], extra: &[AbelPoly], degree_bound: usize) -> Self {
        let mut columns = BTreeMap::new();
        for poly in rows.iter().chain(extra) {
            for (class, c) in poly.terms() {
                if class.degree() <= degree_bound && c.is_odd() {
                    let next = columns.len();
                    columns.entry(class.clone()).or_insert(next);
                }
            }
        }
        let mut m = Self {
            columns,
            rows: Vec::new(),
        };
        m.rows = rows.iter().map(|r| m.encode(r, degree_bound)).collect();
        m
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, i: usize) -> &BitRow {
        &self.rows[i]
    }

    /// The mod-2 coordinate vector of `poly`. Classes without a column must
    /// have even coefficient or exceed the degree bound.
    pub fn encode(&self, poly: &AbelPoly, degree_bound: usize) -> BitRow {
        let mut row = BitRow::zeros(self.columns.len());
        for (class, c) in poly.terms() {
            if class.degree() <= degree_bound && c.is_odd() {
                row.set(self.columns[class]);
            }
        }
        row
    }

    /// Row-reduces the generators into an echelon basis keyed by pivot column.
    pub fn echelon(&self) -> Vec<(usize, BitRow)> {
        let mut basis: Vec<(usize, BitRow)> = Vec::new();
        for row in &self.rows {
            let mut r = row.clone();
            reduce(&mut r, &basis);
            if let Some(pivot) = r.first_one() {
                basis.push((pivot, r));
            }
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.echelon().len()
    }
}

fn reduce(row: &mut BitRow, basis: &[(usize, BitRow)]) {
    for (pivot, b) in basis {
        if row.get(*pivot) {
            row.xor_assign(b);
        }
    }
}

/// True iff `target` lies in the F2-span of `generators` inside the space
/// spanned by circular words of degree at most `degree_bound`. Inputs are
/// reduced mod 2 and truncated first.
pub fn f2_span_membership(target: &AbelPoly, generators: &[AbelPoly], degree_bound: usize) -> bool {
    let matrix = F2Matrix::new(generators, std::slice::from_ref(target), degree_bound);
    let mut t = matrix.encode(target, degree_bound);
    reduce(&mut t, &matrix.echelon());
    t.is_zero()
}

/// Mod-2 image of `poly`, as an [`AbelPoly`] with coefficients in `{0, 1}`.
pub fn mod2(poly: &AbelPoly) -> AbelPoly {
    poly.reduce_mod(&BigInt::from(2))
}
