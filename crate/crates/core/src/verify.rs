//! Replays the structural identities and the counterexample as named checks.
//!
//! Every randomized sweep draws from a [`Sampler`] seeded by
//! [`VerifyConfig::seed`], so a run is reproducible from its parameters.

use std::fmt;
use std::sync::Arc;
use std::thread;

use crate::cd::{
    check_bracket_identity, check_component1_in_h, check_lemma_xyc, is_square_mod_2_comm_f5,
    XVector,
};
use crate::cycquot::in_commutator_subgroup;
use crate::error::{Error, Result};
use crate::freealg::{Alphabet, FreePoly, Word};
use crate::ghost::WittContext;
use crate::rmap::{
    check_ghost_vanishes, check_lemma_phi, counterexample_report, r_map, EpsilonTuple,
};
use crate::sample::{Sampler, DEFAULT_SEED};

/// Check ids in report order.
pub const CHECK_IDS: [&str; 9] = [
    "bracket-identity",
    "commutative-sanity",
    "counterexample",
    "lemma-phi",
    "lemma-thelemma",
    "lemma-xyc",
    "omegar0",
    "pin",
    "wagen",
];

/// At most this many failing cases are quoted in a check's details.
const MAX_QUOTED: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Prime for the sweeps that accept one. Checks tied to `p = 2` ignore it.
    pub p: u64,
    /// Truncation level for the counterexample.
    pub level: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            p: 2,
            level: 2,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub check_id: String,
    /// The statement being checked.
    pub anchor: String,
    pub passed: bool,
    pub cases: usize,
    pub details: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{status} {} ({} cases): {}",
                c.check_id, c.cases, c.anchor
            )?;
            for d in &c.details {
                writeln!(f, "     {d}")?;
            }
        }
        write!(f, "overall: {}", self.status())
    }
}

/// Collects case results for one check.
struct Tally {
    cases: usize,
    failures: Vec<String>,
    failed: usize,
}

impl Tally {
    fn new() -> Self {
        Self {
            cases: 0,
            failures: Vec::new(),
            failed: 0,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_QUOTED {
                self.failures.push(describe());
            }
        }
    }

    fn record_result(&mut self, r: Result<bool>, describe: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, describe),
            Err(e) => self.record(false, || format!("{}: {e}", describe())),
        }
    }

    fn finish(self, id: &str, anchor: &str, summary: String) -> CheckOutcome {
        let mut details = vec![summary];
        if self.failed > 0 {
            details.push(format!("{} of {} cases failed", self.failed, self.cases));
        }
        details.extend(self.failures);
        CheckOutcome {
            check_id: id.to_string(),
            anchor: anchor.to_string(),
            passed: self.failed == 0,
            cases: self.cases,
            details,
        }
    }
}

fn list(fs: &[FreePoly]) -> String {
    let parts: Vec<String> = fs.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// Runs one check by id.
pub fn run_check(id: &str, cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let xy = Alphabet::xy();
    match id {
        "bracket-identity" => bracket_identity(&xy, cfg),
        "commutative-sanity" => commutative_sanity(cfg),
        "counterexample" => counterexample(cfg),
        "lemma-phi" => lemma_phi(&xy, cfg),
        "lemma-thelemma" => lemma_thelemma(&xy, cfg),
        "lemma-xyc" => lemma_xyc(&xy),
        "omegar0" => omegar0(&xy, cfg),
        "pin" => pin(&xy, cfg),
        "wagen" => wagen(&xy, cfg),
        other => Err(Error::UnknownCheck(other.to_string())),
    }
}

/// Runs the named checks concurrently and reports them in id order.
/// Duplicates are run once.
pub fn run_checks<S: AsRef<str>>(ids: &[S], cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut ids: Vec<&str> = ids.iter().map(AsRef::as_ref).collect();
    if let Some(bad) = ids.iter().find(|id| !CHECK_IDS.contains(id)) {
        return Err(Error::UnknownCheck(bad.to_string()));
    }
    ids.sort_unstable();
    ids.dedup();
    let results: Vec<Result<CheckOutcome>> = thread::scope(|s| {
        let handles: Vec<_> = ids
            .iter()
            .map(|id| s.spawn(move || run_check(id, cfg)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check thread panicked"))
            .collect()
    });
    Ok(VerifyReport {
        checks: results.into_iter().collect::<Result<_>>()?,
    })
}

pub fn run_all(cfg: &VerifyConfig) -> VerifyReport {
    run_checks(&CHECK_IDS, cfg).expect("built-in ids are valid")
}

/// The longest truncation, up to `cap`, whose top Witt polynomial raises
/// to at most the `budget`-th power. Keeps sweeps at odd primes tractable.
fn max_length(p: u64, cap: usize, budget: u64) -> usize {
    (1..=cap)
        .take_while(|&len| p.checked_pow(len as u32 - 1).is_some_and(|e| e <= budget))
        .last()
        .unwrap_or(1)
}

fn wagen(xy: &Arc<Alphabet>, cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let mut rng = Sampler::new(xy, cfg.seed);
    let mut t = Tally::new();
    let top = max_length(cfg.p, 4, 9);
    for i in 0..24 {
        let ctx = WittContext::new(xy, cfg.p, 1 + i % top)?;
        let coords = ctx.coordinates(rng.coordinates(ctx.length(), 2, 2))?;
        t.record(ctx.check_wagen_decomposition(&coords), || {
            format!("coordinates {coords}")
        });
    }
    Ok(t.finish(
        "wagen",
        "ghost(a_0, ..., a_{n-1}) = sum_i V^i <a_i> in W_n(A)",
        format!("24 coordinate tuples, lengths 1..={top}, p = {}", cfg.p),
    ))
}

fn pin(xy: &Arc<Alphabet>, cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let mut rng = Sampler::new(xy, cfg.seed ^ 0x1);
    let mut t = Tally::new();
    let top = max_length(cfg.p, 4, 9);
    for i in 0..24 {
        let ctx = WittContext::new(xy, cfg.p, 1 + i % top)?;
        let coords = ctx.coordinates(rng.coordinates(ctx.length(), 2, 2))?;
        let lhs = XVector::omega_map(&ctx, &coords).abelianize();
        t.record_result(lhs.w_equal(&ctx.ghost_map(&coords)), || {
            format!("coordinates {coords}")
        });
    }
    Ok(t.finish(
        "pin",
        "gamma(Omega(a)) = ghost(a): the square through X(A) and W(A) commutes",
        format!(
            "24 coordinate tuples, levels 0..={}, p = {}",
            top - 1,
            cfg.p
        ),
    ))
}

/// Factors of degree 1 or 2. At `p = 2` one factor in the pair may carry a
/// second term; beyond that the `p^3`-th powers at level 3 get too large.
fn bracket_factors(rng: &mut Sampler, p: u64) -> (Vec<FreePoly>, Vec<FreePoly>) {
    let xy = Arc::clone(rng.alphabet());
    let s = rng.range(1, 2);
    let t = rng.range(1, 2);
    let mut factors: Vec<FreePoly> = (0..s + t)
        .map(|_| {
            let c = rng.range(1, 3) as i64 * if rng.gen_bool(0.5) { 1 } else { -1 };
            FreePoly::monomial(&xy, c, rng.word(1, 2))
        })
        .collect();
    if p == 2 && rng.gen_bool(0.5) {
        let k = rng.range(0, s + t - 1);
        let extra = FreePoly::monomial(&xy, 1, rng.word(0, 2));
        factors[k] = &factors[k] + &extra;
    }
    let bs = factors.split_off(s);
    (factors, bs)
}

fn bracket_identity(xy: &Arc<Alphabet>, cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let mut rng = Sampler::new(xy, cfg.seed ^ 0x2);
    let ctx = WittContext::for_level(xy, cfg.p, 3)?;
    let mut t = Tally::new();
    for _ in 0..24 {
        let (as_, bs) = bracket_factors(&mut rng, cfg.p);
        for n in 0..=2 {
            for m in 0..=n {
                t.record_result(check_bracket_identity(&ctx, m, n, &as_, &bs), || {
                    format!("m = {m}, n = {n}, a = {}, b = {}", list(&as_), list(&bs))
                });
            }
        }
    }
    Ok(t.finish(
        "bracket-identity",
        "[V^n(prod <a_i>), V^m(prod <b_j>)] = p^m V^n([prod <a_i>, prod <b_j^(p^(n-m))>]) for m <= n",
        format!("24 factor pairs x all m <= n <= 2, p = {}, level 3", cfg.p),
    ))
}

fn lemma_phi(xy: &Arc<Alphabet>, cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let mut rng = Sampler::new(xy, cfg.seed ^ 0x3);
    let mut t = Tally::new();
    for _ in 0..24 {
        let x = rng.poly(3, 2);
        for p in [2, 3] {
            for k in 1..=2 {
                t.record(check_lemma_phi(&x, k, p), || {
                    format!("x = {x}, k = {k}, p = {p}")
                });
            }
        }
    }
    for _ in 0..24 {
        let (f, g) = (rng.poly(3, 2), rng.poly(3, 2));
        for p in [2, 3] {
            let ok = f.commutator(&g).map(|c| in_commutator_subgroup(&c.phi(p)));
            t.record_result(ok, || format!("phi_{p}([{f}, {g}])"));
        }
    }
    Ok(t.finish(
        "lemma-phi",
        "p^k divides abelianize(x^(p^k) - phi(x^(p^(k-1)))) and phi([A,A]) lies in [A,A]",
        "24 x of degree <= 2 at k in {1, 2}, p in {2, 3}; 24 commutators".to_string(),
    ))
}

fn lemma_thelemma(xy: &Arc<Alphabet>, cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let mut rng = Sampler::new(xy, cfg.seed ^ 0x4);
    let ctx = WittContext::for_level(xy, 2, 1)?;
    let mut t = Tally::new();
    const SHIFTS: [(usize, usize); 3] = [(0, 0), (0, 1), (1, 1)];
    for i in 0..36 {
        let (m, n) = SHIFTS[i % 3];
        let s = rng.range(1, 2);
        let tt = rng.range(1, 2);
        let as_: Vec<FreePoly> = (0..s).map(|_| rng.nonconstant_poly(2, 2)).collect();
        let bs: Vec<FreePoly> = (0..tt).map(|_| rng.nonconstant_poly(2, 2)).collect();
        t.record_result(check_component1_in_h(&ctx, m, n, &as_, &bs), || {
            format!("m = {m}, n = {n}, a = {}, b = {}", list(&as_), list(&bs))
        });
    }
    let words: Vec<FreePoly> = crate::cd::all_words(2, 2)
        .into_iter()
        .filter(|w| w.degree() > 0)
        .map(|w| FreePoly::monomial(xy, 1, w))
        .collect();
    let mut sides: Vec<Vec<FreePoly>> = words.iter().map(|w| vec![w.clone()]).collect();
    for u in &words {
        for v in &words {
            sides.push(vec![u.clone(), v.clone()]);
        }
    }
    for as_ in &sides {
        for bs in &sides {
            t.record_result(check_component1_in_h(&ctx, 0, 0, as_, bs), || {
                format!("m = n = 0, a = {}, b = {}", list(as_), list(bs))
            });
        }
    }
    Ok(t.finish(
        "lemma-thelemma",
        "component 1 of every commutator generator of X(Z{X,Y}) lies in A_4^0 + F^5 A + 2A (p = 2)",
        format!(
            "36 sampled generators with m <= n <= 1, plus all {} word products at m = n = 0",
            sides.len() * sides.len()
        ),
    ))
}

fn lemma_xyc(xy: &Arc<Alphabet>) -> Result<CheckOutcome> {
    let mut t = Tally::new();
    t.record(check_lemma_xyc(), || {
        "[XXYY] lies in the span of abelianized squares".into()
    });
    for (name, letters) in [("XYXY", vec![0, 1, 0, 1]), ("XXXX", vec![0, 0, 0, 0])] {
        let target = FreePoly::monomial(xy, 1, Word::from_letters(letters));
        t.record(is_square_mod_2_comm_f5(&target), || {
            format!("control [{name}] is not in the span of abelianized squares")
        });
    }
    Ok(t.finish(
        "lemma-xyc",
        "X^2 Y^2 is not a square modulo 2A + [A,A] + F^5 A",
        "F2 span of abelianize(w^2), deg w <= 2, in degree <= 4; controls [XYXY] and [X^4] are squares"
            .to_string(),
    ))
}

fn omegar0(xy: &Arc<Alphabet>, cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let mut rng = Sampler::new(xy, cfg.seed ^ 0x5);
    let mut t = Tally::new();
    let mut top_degree = 0;
    let top = max_length(cfg.p, 3, 4);
    for i in 0..12 {
        let ctx = WittContext::new(xy, cfg.p, 1 + i % top)?;
        let eps: Vec<FreePoly> = (0..ctx.length()).map(|_| rng.bracket_sum(2, 2)).collect();
        let text = list(&eps);
        let ok = EpsilonTuple::new(eps)
            .and_then(|e| r_map(&ctx, &e))
            .map(|r| {
                let omega = XVector::omega_map(&ctx, &r.coords);
                top_degree = omega
                    .entries()
                    .iter()
                    .filter_map(|f| f.degree().finite())
                    .fold(top_degree, usize::max);
                check_ghost_vanishes(&ctx, &r)
            });
        t.record_result(ok, || format!("eps = {text}"));
    }
    Ok(t.finish(
        "omegar0",
        "ghost(R(eps)) = 0 for every eps in [A,A]^n",
        format!(
            "12 tuples of bracket sums, lengths 1..={top}, p = {}; Witt polynomials reach degree {top_degree}",
            cfg.p
        ),
    ))
}

fn counterexample(cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let level = cfg.level.max(2);
    let report = counterexample_report(level)?;
    let mut t = Tally::new();
    for step in &report.steps {
        t.record(step.passed, || {
            format!("{}: got {}", step.name, step.output)
        });
    }
    let mut outcome = t.finish(
        "counterexample",
        "R(XY - YX, 0, ...) has zero ghost but Omega of it leaves the closed commutator subgroup",
        format!("p = 2, level {level}"),
    );
    outcome.details.extend(
        report
            .steps
            .iter()
            .map(|s| format!("{}: {}", s.name, s.output)),
    );
    Ok(outcome)
}

/// Classical Witt addition on a commutative one-generator algebra versus
/// componentwise addition of ghosts.
fn commutative_sanity(cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let t_alpha = Alphabet::new(["T"])?;
    let ctx = WittContext::new(&t_alpha, 2, 2)?;
    let mut rng = Sampler::new(&t_alpha, cfg.seed ^ 0x6);
    let mut t = Tally::new();
    for _ in 0..24 {
        let x = rng.coordinates(2, 2, 2);
        let y = rng.coordinates(2, 2, 2);
        let s = vec![&x[0] + &y[0], &(&x[1] + &y[1]) - &(&x[0] * &y[0])];
        let gx = ctx.ghost_map(&ctx.coordinates(x.clone())?);
        let gy = ctx.ghost_map(&ctx.coordinates(y.clone())?);
        let gs = ctx.ghost_map(&ctx.coordinates(s)?);
        t.record_result(gx.add(&gy).and_then(|sum| sum.w_equal(&gs)), || {
            format!("x = {}, y = {}", list(&x), list(&y))
        });
    }
    Ok(t.finish(
        "commutative-sanity",
        "on Z[T], ghost addition matches (x_0 + y_0, x_1 + y_1 - x_0 y_0) at p = 2",
        "24 coordinate pairs, length 2".to_string(),
    ))
}
