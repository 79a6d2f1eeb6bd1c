use clap::ValueEnum;
use dunkl_core::acceptance::{run_acceptance, AcceptanceConfig};
use dunkl_core::numeric::{emit_grid, write_csv, AxisSampling, GridSpec};
use dunkl_core::states::{degeneracy, energy, enumerate_level, state, LevelIndex};
use dunkl_core::verify::{
    check_orthonormality, discover_named_pair, discover_sd3_all, gellmann_table_at_zero, verify_eigen_suite,
    verify_relation_suite, RelationReport, RelationSuite, Verdict,
};
use dunkl_core::{CoordinateSystem, Error, QuantumNumbers, Result};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::RunConfig;

pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_FIT_INCOMPLETE: u8 = 2;

/// Rendered command result.
pub struct Outcome {
    pub human: String,
    pub structured: Value,
    pub exit: u8,
    /// Raw output that bypasses the format selection (grids).
    pub raw: Option<Vec<u8>>,
    /// Wall-clock data, kept out of `structured`.
    pub timings: Option<Value>,
}

impl Outcome {
    fn new(human: String, structured: Value, exit: u8) -> Self {
        Outcome { human, structured, exit, raw: None, timings: None }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifySuite {
    Sl,
    Sd3,
    Sd2,
    Eigen,
    Orthogonality,
    DunklSquare,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

pub fn spectrum(cfg: &RunConfig, nmax: u32) -> Result<Outcome> {
    let mu = cfg.single_mu();
    let mut human = format!("{:>3}  {:>12}  {:>10}\n", "N", "energy", "degeneracy");
    let mut rows = Vec::new();
    for n in 0..=nmax {
        let label = enumerate_level(LevelIndex(n), CoordinateSystem::Cartesian).remove(0);
        let e = energy(&label, &mu)?;
        let g = degeneracy(LevelIndex(n));
        human.push_str(&format!("{n:>3}  {:>12}  {g:>10}\n", e.to_string()));
        rows.push(json!({ "level": n, "energy": e.to_string(), "degeneracy": g }));
    }
    Ok(Outcome::new(human, json!({ "mu": mu, "rows": rows }), 0))
}

pub fn state_text(cfg: &RunConfig, label: &str) -> Result<Outcome> {
    let mu = cfg.single_mu();
    let q: QuantumNumbers = label.parse()?;
    let st = state(&q, &mu)?;
    let poly = st.real_poly().to_string();
    let e = energy(&q, &mu)?;
    Ok(Outcome::new(
        format!("{poly}\n"),
        json!({ "label": q, "mu": mu, "polynomial": poly, "energy": e.to_string() }),
        0,
    ))
}

/// `value`, or `lo:hi:count`.
pub fn parse_axis(text: &str) -> Result<AxisSampling> {
    let number = |s: &str| s.trim().parse::<f64>().map_err(|_| Error::Parse(format!("bad coordinate `{s}`")));
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [v] => Ok(AxisSampling::Fixed(number(v)?)),
        [lo, hi, count] => Ok(AxisSampling::Range {
            lo: number(lo)?,
            hi: number(hi)?,
            count: count.trim().parse().map_err(|_| Error::Parse(format!("bad sample count `{count}`")))?,
        }),
        _ => Err(Error::Parse(format!("expected `value` or `lo:hi:count`, got `{text}`"))),
    }
}

pub fn eval(cfg: &RunConfig, label: &str, axes: [AxisSampling; 3], include_gaussian: bool) -> Result<Outcome> {
    let q: QuantumNumbers = label.parse()?;
    let st = state(&q, &cfg.single_mu())?;
    let rows = emit_grid(&st, &GridSpec { axes, include_gaussian })?;
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf)?;
    Ok(Outcome { raw: Some(buf), ..Outcome::new(String::new(), Value::Null, 0) })
}

fn relation_lines(reports: &[RelationReport], human: &mut String) -> bool {
    let mut ok = true;
    for r in reports {
        let status = match (r.verdict, r.is_failure()) {
            (Verdict::Holds, _) => "holds",
            (Verdict::Fails, true) => "FAILS",
            (Verdict::Fails, false) => "differs",
        };
        ok &= !r.is_failure();
        human.push_str(&format!("{status:>7}  {}  (mu = {}, cap {})\n", r.label, r.mu, r.cap));
        if let Some(w) = &r.witness.as_ref().filter(|_| r.verdict == Verdict::Fails) {
            human.push_str(&format!("         on {}: {} vs {}\n", w.monomial, w.left, w.right));
        }
        if let Some(n) = &r.note {
            human.push_str(&format!("         {n}\n"));
        }
    }
    ok
}

pub fn verify(cfg: &RunConfig, suite: VerifySuite, system: Option<CoordinateSystem>, nmax: Option<u32>) -> Result<Outcome> {
    let mus = cfg.mu_set();
    let mut human = String::new();
    let systems: Vec<CoordinateSystem> = system.map_or(CoordinateSystem::ALL.to_vec(), |s| vec![s]);
    let level = nmax.or(cfg.nmax).unwrap_or(6);
    let (ok, results) = match suite {
        VerifySuite::Eigen | VerifySuite::Orthogonality => {
            let mut ok = true;
            let mut results = Vec::new();
            for mu in &mus {
                for &sys in &systems {
                    if suite == VerifySuite::Eigen {
                        let r = verify_eigen_suite(sys, level, mu)?;
                        let failed: Vec<_> = r.checks.iter().filter(|c| !c.holds).collect();
                        ok &= failed.is_empty();
                        human.push_str(&format!(
                            "{}  eigen {sys} N <= {level} mu = {mu}: {} checks, {} failures\n",
                            if failed.is_empty() { "  holds" } else { "  FAILS" },
                            r.checks.len(),
                            failed.len()
                        ));
                        for c in failed {
                            human.push_str(&format!("         {} {} = {}\n", c.label, c.operator, c.eigenvalue));
                        }
                        results.push(to_value(&r));
                    } else {
                        let r = check_orthonormality(sys, level, mu)?;
                        ok &= r.passed();
                        human.push_str(&format!(
                            "{}  orthogonality {sys} N <= {level} mu = {mu}: {} states, {} pairs, {} failures\n",
                            if r.passed() { "  holds" } else { "  FAILS" },
                            r.states,
                            r.pairs_checked,
                            r.failures.len()
                        ));
                        for f in &r.failures {
                            human.push_str(&format!("         <{}|{}> = {} expected {}\n", f.left, f.right, f.got, f.expected));
                        }
                        results.push(to_value(&r));
                    }
                }
            }
            (ok, results)
        }
        _ => {
            let (suites, default_cap): (&[RelationSuite], u32) = match suite {
                VerifySuite::Sl => (&[RelationSuite::SlPerAxis, RelationSuite::SlCoproduct, RelationSuite::ExtraMixedLadder], 10),
                VerifySuite::Sd3 => (&[RelationSuite::Sd3Published], 6),
                VerifySuite::Sd2 => (&[RelationSuite::Sd2Subalgebra], 8),
                _ => (&[RelationSuite::DunklSquare], 8),
            };
            let cap = cfg.cap.unwrap_or(default_cap);
            let mut reports = Vec::new();
            for mu in &mus {
                for &s in suites {
                    reports.extend(verify_relation_suite(s, cap, mu)?);
                }
            }
            let ok = relation_lines(&reports, &mut human);
            (ok, reports.iter().map(to_value).collect())
        }
    };
    human.push_str(if ok { "all checks hold\n" } else { "some checks FAIL\n" });
    let structured = json!({ "suite": suite, "passed": ok, "results": results });
    Ok(Outcome::new(human, structured, if ok { 0 } else { EXIT_CHECK_FAILED }))
}

pub fn discover(cfg: &RunConfig, first: &str, second: Option<&str>) -> Result<Outcome> {
    let cap = cfg.cap.unwrap_or(6);
    let mut human = String::new();
    let mut results = Vec::new();
    let mut clean = true;
    let annotate = |matches: bool| if matches { "[matches published]" } else { "[differs from published]" };
    match (first, second) {
        ("all", None) => {
            for mu in cfg.mu_set() {
                human.push_str(&format!("mu = {mu}, cap {cap}\n"));
                let all = discover_sd3_all(cap, &mu)?;
                for c in &all {
                    clean &= c.discovered.is_clean();
                    human.push_str(&format!(
                        "  {} = {}  {} {}{}\n",
                        c.discovered.bracket,
                        c.discovered.expansion,
                        annotate(c.matches()),
                        c.published,
                        flags(&c.discovered),
                    ));
                }
                let mut entry = json!({ "mu": mu, "brackets": all });
                if mu == dunkl_core::MuParams::zero() {
                    let table = gellmann_table_at_zero(cap)?;
                    human.push_str("  u(3) structure constants f_ijk:\n");
                    for t in &table {
                        human.push_str(&format!(
                            "    f_{}{}{} = {}  (reference {}){}\n",
                            t.i,
                            t.j,
                            t.k,
                            t.discovered,
                            t.reference,
                            if t.matches { "" } else { "  MISMATCH" }
                        ));
                    }
                    entry["f_table"] = to_value(&table);
                }
                results.push(entry);
            }
        }
        (a, Some(b)) => {
            for mu in cfg.mu_set() {
                let (d, cmp) = discover_named_pair(a, b, cap, &mu)?;
                clean &= d.is_clean();
                let note = match &cmp {
                    Some(c) => format!("  {} {}", annotate(c.matches()), c.published),
                    None => String::new(),
                };
                human.push_str(&format!("{} = {}{note}{}  (mu = {mu}, cap {cap})\n", d.bracket, d.expansion, flags(&d)));
                results.push(match cmp {
                    Some(c) => to_value(&c),
                    None => json!({ "discovered": d }),
                });
            }
        }
        (a, None) => return Err(Error::Parse(format!("discover takes two operator names or `all`, got `{a}` alone"))),
    }
    let structured = json!({ "cap": cap, "clean": clean, "results": results });
    Ok(Outcome::new(human, structured, if clean { 0 } else { EXIT_FIT_INCOMPLETE }))
}

fn flags(d: &dunkl_core::verify::DiscoveredRelation) -> String {
    let mut s = String::new();
    if d.residual {
        s.push_str("  [residual: not in ansatz span]");
    }
    if d.underdetermined {
        s.push_str("  [underdetermined: fit not unique]");
    }
    s
}

pub fn report(cfg: &RunConfig) -> Result<Outcome> {
    let acceptance = AcceptanceConfig {
        mu_samples: cfg.mu_set(),
        relation_cap: cfg.cap,
        state_level: cfg.nmax,
        numeric_tol: cfg.tol,
    };
    let (report, timings) = run_acceptance(&acceptance);
    let mut human = String::new();
    for (c, t) in report.criteria.iter().zip(&timings) {
        let bound = match (c.cap, c.max_level) {
            (Some(c), _) => format!("cap {c}"),
            (None, Some(n)) => format!("N <= {n}"),
            _ => String::new(),
        };
        human.push_str(&format!(
            "{} [{:>2}] {} ({bound}, {} checks, {} flagged) {:.2}s\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            c.checks,
            c.flagged.len(),
            t.seconds
        ));
        for f in &c.failures {
            human.push_str(&format!("     failure: {f}\n"));
        }
        for f in &c.flagged {
            human.push_str(&format!("     flagged: {f}\n"));
        }
    }
    human.push_str(if report.passed { "all criteria pass\n" } else { "some criteria FAIL\n" });
    let exit = if report.passed { 0 } else { EXIT_CHECK_FAILED };
    Ok(Outcome { timings: Some(to_value(&timings)), ..Outcome::new(human, to_value(&report), exit) })
}
