//! Hesselholt's map `R: [A,A]^N -> A^N` and the non-injectivity example.
//!
//! Given commutators `(e_0, e_1, ...)`, set `r_0 = e_0` and
//!
//! ```text
//! r_n = e_n - sigma0( p^-n ( omega_n(r_0, ..., r_{n-1}, 0) - phi(omega_{n-1}(r_0, ..., r_{n-1})) ) )
//! ```
//!
//! where the difference is taken in `A/[A,A]`. The division is exact, and
//! the resulting tuple has vanishing ghost components.

use num_bigint::BigInt;
use num_traits::Pow;

use crate::cd::{h_membership, XVector};
use crate::cycquot::{abelianize, in_commutator_subgroup, sigma0, AbelPoly};
use crate::error::{Error, Result};
use crate::freealg::{Alphabet, FreePoly};
use crate::ghost::{witt_polynomial, CoordinateTuple, WittContext};
use crate::parse::parse_poly;
use crate::report::Report;

pub const DEFAULT_DEGREE_CAP: usize = 64;

/// A tuple of elements of `[A,A]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonTuple(Vec<FreePoly>);

impl EpsilonTuple {
    /// Rejects any entry that is not a sum of commutators.
    pub fn new(eps: Vec<FreePoly>) -> Result<Self> {
        if let Some((index, e)) = eps
            .iter()
            .enumerate()
            .find(|(_, e)| !in_commutator_subgroup(e))
        {
            return Err(Error::EpsilonNotCommutator {
                index,
                value: e.to_string(),
            });
        }
        Ok(Self(eps))
    }

    pub fn as_slice(&self) -> &[FreePoly] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The division performed while computing `r_index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditStep {
    pub index: usize,
    pub divisor: BigInt,
    /// `omega_n(r, 0) - phi(omega_{n-1}(r))` in `A/[A,A]`.
    pub before_division: AbelPoly,
    pub quotient: AbelPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RResult {
    pub coords: CoordinateTuple,
    pub audit: Vec<AuditStep>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RMapOptions {
    /// Largest word length any intermediate polynomial may reach.
    pub degree_cap: usize,
}

impl Default for RMapOptions {
    fn default() -> Self {
        Self {
            degree_cap: DEFAULT_DEGREE_CAP,
        }
    }
}

pub fn r_map(ctx: &WittContext, eps: &EpsilonTuple) -> Result<RResult> {
    r_map_with(ctx, eps, RMapOptions::default())
}

pub fn r_map_with(ctx: &WittContext, eps: &EpsilonTuple, opts: RMapOptions) -> Result<RResult> {
    let eps = ctx.coordinates(eps.0.clone())?;
    let p = ctx.p();
    let p_big = ctx.p_big();
    let zero = FreePoly::zero(ctx.alphabet());

    let mut r: Vec<FreePoly> = Vec::with_capacity(ctx.length());
    let mut audit = Vec::new();
    for (n, e) in eps.iter().enumerate() {
        check_degree(e, opts.degree_cap)?;
        if n == 0 {
            r.push(e.clone());
            continue;
        }
        // omega_n(r, 0) has degree max_k p^(n-k) deg r_k.
        let predicted = r
            .iter()
            .enumerate()
            .filter_map(|(k, rk)| {
                rk.degree()
                    .finite()
                    .map(|d| d.saturating_mul(p.saturating_pow((n - k) as u32) as usize))
            })
            .max()
            .unwrap_or(0);
        if predicted > opts.degree_cap {
            return Err(Error::DegreeCap {
                degree: predicted,
                cap: opts.degree_cap,
            });
        }

        let mut extended = r.clone();
        extended.push(zero.clone());
        let top = witt_polynomial(p, n, &extended)?;
        let below = witt_polynomial(p, n - 1, &r)?.phi(p);
        let before_division = &abelianize(&top) - &abelianize(&below);
        let divisor: BigInt = Pow::pow(&p_big, n as u32);
        let quotient = before_division.divide_exact(&divisor)?;
        let rn = e - &sigma0(&quotient);
        audit.push(AuditStep {
            index: n,
            divisor,
            before_division,
            quotient,
        });
        r.push(rn);
    }
    Ok(RResult {
        coords: ctx.coordinates(r)?,
        audit,
    })
}

fn check_degree(f: &FreePoly, cap: usize) -> Result<()> {
    match f.degree().finite() {
        Some(d) if d > cap => Err(Error::DegreeCap { degree: d, cap }),
        _ => Ok(()),
    }
}

/// The ghost of `r` vanishes.
pub fn check_ghost_vanishes(ctx: &WittContext, r: &RResult) -> bool {
    ctx.ghost_map(&r.coords).is_zero()
}

/// `abelianize(x^(p^k) - phi(x^(p^(k-1))))` is divisible by `p^k`, and
/// `phi([x, g])` lies in `[A,A]` for every generator `g`.
pub fn check_lemma_phi(x: &FreePoly, k: u32, p: u64) -> bool {
    assert!(k >= 1, "level must be at least 1");
    let pk_minus_1: u64 = p.pow(k - 1);
    let lhs = x.pow(pk_minus_1 * p);
    let rhs = x.pow(pk_minus_1).phi(p);
    let modulus: BigInt = Pow::pow(&BigInt::from(p), k);
    if !abelianize(&(&lhs - &rhs)).is_divisible_by(&modulus) {
        return false;
    }
    (0..x.alphabet().len() as u16).all(|i| {
        let g = FreePoly::generator(x.alphabet(), i);
        phi_preserves_commutators(x, &g, p).unwrap_or(false)
    })
}

/// `phi([f, g])` lies in `[A,A]`.
pub fn phi_preserves_commutators(f: &FreePoly, g: &FreePoly, p: u64) -> Result<bool> {
    Ok(in_commutator_subgroup(&f.commutator(g)?.phi(p)))
}

const EXPECTED_R1: &str = "-XYXY + XXYY";
const EXPECTED_OMEGA1: &str = "-XYXY + YXYX - XYYX - YXXY + 2XXYY";

/// Replays the counterexample at truncation length `level >= 2`:
/// `r = R(XY - YX, 0, ...)` has zero ghost while component 1 of `Omega(r)`
/// escapes `H`, so `Omega(r)` is not in the closed commutator subgroup.
pub fn counterexample_report(level: usize) -> Result<Report> {
    if level < 2 {
        return Err(Error::Unsupported(
            "the counterexample needs level >= 2".into(),
        ));
    }
    let xy = Alphabet::xy();
    let ctx = WittContext::new(&xy, 2, level)?;
    let eps0 = parse_poly("XY - YX", &xy).expect("literal parses");
    let mut eps = vec![FreePoly::zero(&xy); level];
    eps[0] = eps0;
    let eps = EpsilonTuple::new(eps)?;

    let mut report = Report::new(format!("counterexample (p = 2, level {level})"));
    match r_map(&ctx, &eps) {
        Ok(r) => {
            report.push(
                "r_map",
                tuple_text(eps.as_slice()),
                r.coords.to_string(),
                true,
            );
            assess_counterexample(&ctx, &r.coords, &mut report);
        }
        Err(e) => report.push("r_map", tuple_text(eps.as_slice()), e.to_string(), false),
    }
    Ok(report)
}

/// Runs the checks of the counterexample on a candidate `r`. Used directly
/// to confirm that a corrupted `r` is rejected.
pub fn assess_counterexample(ctx: &WittContext, r: &CoordinateTuple, report: &mut Report) {
    let xy = ctx.alphabet();
    let expected_r1 = parse_poly(EXPECTED_R1, xy).expect("literal parses");
    let expected_omega1 = parse_poly(EXPECTED_OMEGA1, xy).expect("literal parses");

    let r1 = &r.as_slice()[1];
    report.push("r_1 = -XYXY + XXYY", "", r1.to_string(), *r1 == expected_r1);

    let ghost = ctx.ghost_map(r);
    report.push(
        "ghost(r) = 0",
        r.to_string(),
        ghost.to_string(),
        ghost.is_zero(),
    );

    let omega = XVector::omega_map(ctx, r);
    let omega1 = omega.entry(1);
    report.push(
        "omega_1(r) = r_0^2 + 2 r_1",
        "",
        omega1.to_string(),
        *omega1 == expected_omega1,
    );

    let in_h = h_membership(omega1);
    let (text, ok) = match in_h {
        Ok(b) => (format!("in H: {b}"), !b),
        Err(e) => (e.to_string(), false),
    };
    report.push(
        "omega_1(r) not in A_4^0 + F^5 A + 2A",
        omega1.to_string(),
        text,
        ok,
    );
}

fn tuple_text(items: &[FreePoly]) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}
