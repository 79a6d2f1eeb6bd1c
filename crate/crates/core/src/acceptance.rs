//! End-to-end acceptance criteria.
//!
//! Each criterion runs with its own default degree cap or level bound; a
//! [`AcceptanceConfig`] can override them (a smaller override gives a weaker
//! check and is recorded in the result). Wall-clock timings are kept out of
//! [`AcceptanceReport`] so identical configurations give identical reports.

use std::time::{Duration, Instant};

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::numeric::{gamma_scaled_value, numeric_inner_product};
use crate::operators::GaussianState;
use crate::poly::{gen_hermite_unnorm, int, MuParams, Rational, UniPoly};
use crate::states::{degeneracy, energy, enumerate_level, state, CoordinateSystem, LevelIndex};
use crate::verify::{
    check_orthonormality, discover_sd3_all, gellmann_table_at_zero, inner_product, verify_eigen_suite,
    verify_relation_suite, CheckMode, RelationReport, RelationSuite, Verdict,
};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AcceptanceConfig {
    pub mu_samples: Vec<MuParams>,
    /// Replaces every relation and discovery degree cap.
    pub relation_cap: Option<u32>,
    /// Replaces every state level bound.
    pub state_level: Option<u32>,
    /// Relative tolerance of the quadrature cross-check.
    pub numeric_tol: f64,
}

impl Default for AcceptanceConfig {
    fn default() -> Self {
        AcceptanceConfig {
            mu_samples: MuParams::default_samples(),
            relation_cap: None,
            state_level: None,
            numeric_tol: 1e-9,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub cap: Option<u32>,
    pub max_level: Option<u32>,
    pub mu_samples: Vec<MuParams>,
    pub checks: usize,
    pub failures: Vec<String>,
    /// Mismatches that are reported without failing the criterion.
    pub flagged: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub time_limit: Option<Duration>,
    run: fn(&AcceptanceConfig) -> Result<CriterionResult>,
}

impl Criterion {
    pub fn run(&self, cfg: &AcceptanceConfig) -> TimedResult {
        let start = Instant::now();
        let result = (self.run)(cfg).unwrap_or_else(|e| CriterionResult {
            id: self.id,
            name: self.name,
            passed: false,
            cap: None,
            max_level: None,
            mu_samples: cfg.mu_samples.clone(),
            checks: 0,
            failures: vec![format!("error: {e}")],
            flagged: Vec::new(),
        });
        TimedResult { result, elapsed: start.elapsed(), limit: self.time_limit }
    }
}

#[derive(Clone, Debug)]
pub struct TimedResult {
    pub result: CriterionResult,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl TimedResult {
    pub fn within_limit(&self) -> bool {
        self.limit.is_none_or(|l| self.elapsed <= l)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AcceptanceReport {
    pub config: AcceptanceConfig,
    pub passed: bool,
    pub criteria: Vec<CriterionResult>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionTiming {
    pub id: u8,
    pub seconds: f64,
    pub limit_seconds: Option<f64>,
    pub within_limit: bool,
}

pub fn criteria() -> Vec<Criterion> {
    let secs = |s| Some(Duration::from_secs(s));
    vec![
        Criterion { id: 1, name: "spectrum and degeneracy", time_limit: secs(10), run: spectrum },
        Criterion { id: 2, name: "cartesian eigenproblem", time_limit: secs(60), run: cartesian_eigen },
        Criterion { id: 3, name: "sl(-1)(2) relations", time_limit: secs(60), run: sl_suite },
        Criterion { id: 4, name: "sd(3) discovery", time_limit: secs(120), run: sd3_discovery },
        Criterion { id: 5, name: "sd(2) subalgebra", time_limit: secs(30), run: sd2 },
        Criterion { id: 6, name: "cylindrical and spherical eigenproblems", time_limit: secs(120), run: curvilinear_eigen },
        Criterion { id: 7, name: "orthogonality and norms", time_limit: secs(120), run: orthonormality },
        Criterion { id: 8, name: "mu = 0 reduction", time_limit: None, run: undeformed },
        Criterion { id: 9, name: "numeric cross-check", time_limit: secs(120), run: numeric_check },
        Criterion { id: 10, name: "dunkl-square identity", time_limit: secs(5), run: dunkl_square },
    ]
}

/// Runs every criterion in order.
pub fn run_acceptance(cfg: &AcceptanceConfig) -> (AcceptanceReport, Vec<CriterionTiming>) {
    let runs: Vec<TimedResult> = criteria().iter().map(|c| c.run(cfg)).collect();
    let timings = runs
        .iter()
        .map(|r| CriterionTiming {
            id: r.result.id,
            seconds: r.elapsed.as_secs_f64(),
            limit_seconds: r.limit.map(|l| l.as_secs_f64()),
            within_limit: r.within_limit(),
        })
        .collect();
    let criteria: Vec<CriterionResult> = runs.into_iter().map(|r| r.result).collect();
    let report = AcceptanceReport { config: cfg.clone(), passed: criteria.iter().all(|c| c.passed), criteria };
    (report, timings)
}

struct Tally {
    checks: usize,
    failures: Vec<String>,
    flagged: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checks: 0, failures: Vec::new(), flagged: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn relations(&mut self, reports: &[RelationReport]) {
        for r in reports {
            self.checks += 1;
            if r.is_failure() {
                self.failures.push(describe(r));
            } else if r.verdict == Verdict::Fails {
                self.flagged.push(describe(r));
            }
        }
    }

    fn finish(self, id: u8, name: &'static str, cap: Option<u32>, max_level: Option<u32>, cfg: &AcceptanceConfig) -> CriterionResult {
        CriterionResult {
            id,
            name,
            passed: self.failures.is_empty(),
            cap,
            max_level,
            mu_samples: cfg.mu_samples.clone(),
            checks: self.checks,
            failures: self.failures,
            flagged: self.flagged,
        }
    }
}

fn describe(r: &RelationReport) -> String {
    let mut s = format!("{} at mu = {} (cap {})", r.label, r.mu, r.cap);
    if let Some(w) = &r.witness {
        s.push_str(&format!(": on {} got {} vs {}", w.monomial, w.left, w.right));
    }
    if let Some(n) = &r.note {
        s.push_str(&format!(" [{n}]"));
    }
    s
}

fn spectrum(cfg: &AcceptanceConfig) -> Result<CriterionResult> {
    let top = cfg.state_level.unwrap_or(10);
    let mut t = Tally::new();
    for mu in &cfg.mu_samples {
        for n in 0..=top {
            let expected = (n as u64 + 1) * (n as u64 + 2) / 2;
            t.check(degeneracy(LevelIndex(n)) == expected, || format!("g_{n} formula"));
            let level_energy = int(n as i64) + mu.sum() + Rational::new(3.into(), 2.into());
            for sys in CoordinateSystem::ALL {
                let labels = enumerate_level(LevelIndex(n), sys);
                t.check(labels.len() as u64 == expected, || {
                    format!("{sys} level {n}: {} states, expected {expected}", labels.len())
                });
                for q in &labels {
                    let e = energy(q, mu)?;
                    t.check(e == level_energy, || format!("{q} at mu = {mu}: energy {e}"));
                }
            }
        }
    }
    Ok(t.finish(1, "spectrum and degeneracy", None, Some(top), cfg))
}

fn eigen(cfg: &AcceptanceConfig, systems: &[CoordinateSystem], level: u32, id: u8, name: &'static str) -> Result<CriterionResult> {
    let mut t = Tally::new();
    for mu in &cfg.mu_samples {
        for &sys in systems {
            let report = verify_eigen_suite(sys, level, mu)?;
            for c in &report.checks {
                t.check(c.holds, || format!("{} {} = {} at mu = {mu}", c.label, c.operator, c.eigenvalue));
            }
        }
    }
    Ok(t.finish(id, name, None, Some(level), cfg))
}

fn cartesian_eigen(cfg: &AcceptanceConfig) -> Result<CriterionResult> {
    eigen(cfg, &[CoordinateSystem::Cartesian], cfg.state_level.unwrap_or(8), 2, "cartesian eigenproblem")
}

fn curvilinear_eigen(cfg: &AcceptanceConfig) -> Result<CriterionResult> {
    let systems = [CoordinateSystem::Cylindrical, CoordinateSystem::Spherical];
    eigen(cfg, &systems, cfg.state_level.unwrap_or(6), 6, "cylindrical and spherical eigenproblems")
}

fn relation_suites(cfg: &AcceptanceConfig, suites: &[RelationSuite], default_cap: u32, id: u8, name: &'static str) -> Result<CriterionResult> {
    let cap = cfg.relation_cap.unwrap_or(default_cap);
    let mut t = Tally::new();
    for mu in &cfg.mu_samples {
        for &suite in suites {
            t.relations(&verify_relation_suite(suite, cap, mu)?);
        }
    }
    Ok(t.finish(id, name, Some(cap), None, cfg))
}

fn sl_suite(cfg: &AcceptanceConfig) -> Result<CriterionResult> {
    let suites = [RelationSuite::SlPerAxis, RelationSuite::SlCoproduct, RelationSuite::ExtraMixedLadder];
    relation_suites(cfg, &suites, 10, 3, "sl(-1)(2) relations")
}

fn sd2(cfg: &AcceptanceConfig) -> Result<CriterionResult> {
    relation_suites(cfg, &[RelationSuite::Sd2Subalgebra], 8, 5, "sd(2) subalgebra")
}

fn dunkl_square(cfg: &AcceptanceConfig) -> Result<CriterionResult> {
    relation_suites(cfg, &[RelationSuite::DunklSquare], 8, 10, "dunkl-square identity")
}

fn sd3_discovery(cfg: &AcceptanceConfig) -> Result<CriterionResult> {
    let cap = cfg.relation_cap.unwrap_or(6);
    let mut t = Tally::new();
    for mu in &cfg.mu_samples {
        for cmp in discover_sd3_all(cap, mu)? {
            let d = &cmp.discovered;
            let line = || {
                format!(
                    "{} at mu = {mu}: discovered {}{}, published {} ({:?})",
                    d.bracket,
                    d.expansion,
                    if d.is_clean() { "" } else { " [fit not unique or not exact]" },
                    cmp.published,
                    cmp.status
                )
            };
            let same_family = {
                let b = d.bracket.as_str();
                (b.starts_with("[J") && b.contains(", J")) || (b.starts_with("[K") && b.contains(", K"))
            };
            if same_family {
                // a rank-deficient fit at a small cap is reported, not failed
                let ok = cmp.matches() && !d.residual;
                if ok && d.underdetermined {
                    t.flagged.push(line());
                }
                t.check(ok, line);
            } else {
                t.checks += 1;
                if !cmp.matches() || !d.is_clean() {
                    t.flagged.push(line());
                }
            }
        }
        // reflection (anti)commutation relations must hold; the remaining
        // printed relations are compared and flagged
        for r in verify_relation_suite(RelationSuite::Sd3Published, cap, mu)? {
            t.checks += 1;
            let reflection = r.label.contains(", R");
            if r.verdict == Verdict::Fails {
                if reflection && r.mode == CheckMode::Exact {
                    t.failures.push(describe(&r));
                } else if !reflection {
                    t.flagged.push(describe(&r));
                }
            }
        }
    }
    Ok(t.finish(4, "sd(3) discovery", Some(cap), None, cfg))
}

/// Physicists' Hermite polynomials by the three-term recurrence.
fn standard_hermite(n: u32) -> UniPoly {
    let two_x = UniPoly::x().scale(&int(2));
    let (mut prev, mut cur) = (UniPoly::one(), two_x.clone());
    if n == 0 {
        return prev;
    }
    for k in 1..n {
        let next = &(&two_x * &cur) - &prev.scale(&int(2 * k as i64));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn proportional(a: &UniPoly, b: &UniPoly) -> bool {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return false;
    };
    if da != db {
        return false;
    }
    let ratio = b.coeff(db) / a.coeff(da);
    a.scale(&ratio) == *b
}

fn undeformed(cfg: &AcceptanceConfig) -> Result<CriterionResult> {
    let cap = cfg.relation_cap.unwrap_or(6);
    let mut t = Tally::new();
    for n in 0..=12 {
        let h = gen_hermite_unnorm(n, &Rational::zero())?;
        t.check(proportional(&h, &standard_hermite(n)), || format!("H_{n}^0 = {h} is not proportional to H_{n}"));
    }
    for entry in gellmann_table_at_zero(cap)? {
        t.check(entry.matches, || {
            format!("f({},{},{}): discovered {} vs {}", entry.i, entry.j, entry.k, entry.discovered, entry.reference)
        });
    }
    let mut r = t.finish(8, "mu = 0 reduction", Some(cap), Some(12), cfg);
    r.mu_samples = vec![MuParams::zero()];
    Ok(r)
}

fn orthonormality(cfg: &AcceptanceConfig) -> Result<CriterionResult> {
    let level = cfg.state_level.unwrap_or(6);
    let mut t = Tally::new();
    for mu in &cfg.mu_samples {
        for sys in CoordinateSystem::ALL {
            let report = check_orthonormality(sys, level, mu)?;
            t.checks += report.pairs_checked;
            t.failures.extend(
                report.failures.iter().map(|f| format!("<{}|{}> at mu = {mu}: {} vs {}", f.left, f.right, f.got, f.expected)),
            );
        }
    }
    Ok(t.finish(7, "orthogonality and norms", None, Some(level), cfg))
}

/// Exact and quadrature inner products agree to `numeric_tol` relative to
/// `sqrt(<a|a><b|b>)`, the Cauchy-Schwarz bound of the pair.
fn numeric_check(cfg: &AcceptanceConfig) -> Result<CriterionResult> {
    let level = cfg.state_level.unwrap_or(4);
    let samples: Vec<MuParams> = cfg.mu_samples.iter().filter(|m| m.all_nonnegative()).cloned().collect();
    let mut t = Tally::new();
    for mu in &samples {
        for sys in CoordinateSystem::ALL {
            let states: Vec<(String, GaussianState)> = (0..=level)
                .flat_map(|n| enumerate_level(LevelIndex(n), sys))
                .map(|q| Ok((q.to_string(), state(&q, mu)?)))
                .collect::<Result<_>>()?;
            let norms: Vec<f64> = states
                .iter()
                .map(|(_, s)| Ok(gamma_scaled_value(&inner_product(s, s)?, mu)))
                .collect::<Result<_>>()?;
            let pairs: Vec<(usize, usize)> = (0..states.len()).flat_map(|a| (a..states.len()).map(move |b| (a, b))).collect();
            let outcomes: Vec<Option<String>> = pairs
                .par_iter()
                .map(|&(a, b)| {
                    let scale = (norms[a] * norms[b]).sqrt();
                    let exact = gamma_scaled_value(&inner_product(&states[a].1, &states[b].1)?, mu);
                    let tol = cfg.numeric_tol * scale;
                    let describe = |what: String| format!("<{}|{}> at mu = {mu}: {what}", states[a].0, states[b].0);
                    Ok(match numeric_inner_product(&states[a].1, &states[b].1, tol / 10.0) {
                        Ok(v) if (v - exact).abs() <= tol => None,
                        Ok(v) => Some(describe(format!("quadrature {v:e} vs exact {exact:e}"))),
                        Err(e) => Some(describe(e.to_string())),
                    })
                })
                .collect::<Result<_>>()?;
            for o in outcomes {
                t.check(o.is_none(), || o.unwrap_or_default());
            }
        }
    }
    let mut r = t.finish(9, "numeric cross-check", None, Some(level), cfg);
    r.mu_samples = samples;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_hermite_low_orders() {
        assert_eq!(standard_hermite(0).to_string(), "1");
        assert_eq!(standard_hermite(1).to_string(), "2*x");
        assert_eq!(standard_hermite(3).coeffs(), &[int(0), int(-12), int(0), int(8)]);
        assert!(proportional(&standard_hermite(2), &standard_hermite(2).scale(&int(-3))));
        assert!(!proportional(&standard_hermite(2), &UniPoly::x()));
    }

    #[test]
    fn weak_caps_still_pass() {
        let cfg = AcceptanceConfig {
            mu_samples: vec![MuParams::from_ratios([(1, 3), (1, 4), (1, 5)]).unwrap()],
            relation_cap: Some(3),
            state_level: Some(2),
            numeric_tol: 1e-9,
        };
        for c in criteria() {
            let r = c.run(&cfg).result;
            assert!(r.passed, "{}: {:?}", r.name, r.failures);
            if r.id == 3 {
                assert_eq!(r.cap, Some(3));
            }
        }
    }

    #[test]
    fn unit_is_not_proportional_to_zero() {
        assert!(!proportional(&UniPoly::zero(), &UniPoly::one()));
    }
}
