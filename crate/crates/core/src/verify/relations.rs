use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::discover::discover_relation;
use crate::error::{Error, Result};
use crate::operators::{
    find_disagreement, imag, imaginary_unit, real, Axis, BracketKind,
    HamiltonianScope, LadderSign, OperatorExpr, Oscillator,
};
use crate::poly::{int, rat, MuParams};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
}

/// `Exact` relations must hold; `CheckedAsDiscovered` relations have an
/// ambiguous printed form, so the reading is compared and the true bracket
/// is attached from discovery.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckMode {
    Exact,
    CheckedAsDiscovered,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WitnessReport {
    pub monomial: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationReport {
    pub suite: &'static str,
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub cap: u32,
    pub mu: MuParams,
    pub mode: CheckMode,
    pub verdict: Verdict,
    pub witness: Option<WitnessReport>,
    pub note: Option<String>,
}

impl RelationReport {
    /// Whether this entry counts against its suite.
    pub fn is_failure(&self) -> bool {
        self.mode == CheckMode::Exact && self.verdict == Verdict::Fails
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationSuite {
    SlPerAxis,
    SlCoproduct,
    ExtraMixedLadder,
    Sd3Published,
    Sd2Subalgebra,
    DunklSquare,
}

impl RelationSuite {
    pub const ALL: [RelationSuite; 6] = [
        RelationSuite::SlPerAxis,
        RelationSuite::SlCoproduct,
        RelationSuite::ExtraMixedLadder,
        RelationSuite::Sd3Published,
        RelationSuite::Sd2Subalgebra,
        RelationSuite::DunklSquare,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RelationSuite::SlPerAxis => "sl-per-axis",
            RelationSuite::SlCoproduct => "sl-coproduct",
            RelationSuite::ExtraMixedLadder => "extra-mixed-ladder",
            RelationSuite::Sd3Published => "sd3-published",
            RelationSuite::Sd2Subalgebra => "sd2-subalgebra",
            RelationSuite::DunklSquare => "dunkl-square",
        }
    }
}

impl fmt::Display for RelationSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RelationSuite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RelationSuite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown relation suite {s:?}")))
    }
}

struct Relation {
    label: String,
    lhs: OperatorExpr,
    rhs: OperatorExpr,
    mode: CheckMode,
    /// Bracket to hand to discovery for `CheckedAsDiscovered` entries.
    discover: Option<(OperatorExpr, OperatorExpr)>,
}

impl Relation {
    fn exact(label: impl Into<String>, lhs: OperatorExpr, rhs: OperatorExpr) -> Self {
        Relation { label: label.into(), lhs, rhs, mode: CheckMode::Exact, discover: None }
    }
}

/// The `sl_{-1}(2)` relations for a ladder pair `(A+, A-)`, Hamiltonian `A0`
/// and involution `R`, with `A+-` supplied in the `sqrt(2)`-scaled form.
fn sl_family(
    tag: &str,
    plus: &OperatorExpr,
    minus: &OperatorExpr,
    a0: &OperatorExpr,
    r: &OperatorExpr,
    zero: &OperatorExpr,
) -> Vec<Relation> {
    let half = rat(1, 2);
    vec![
        Relation::exact(format!("[A0{tag}, A+{tag}] = A+{tag}"), a0.commutator(plus), plus.clone()),
        Relation::exact(format!("[A0{tag}, A-{tag}] = -A-{tag}"), a0.commutator(minus), -minus),
        Relation::exact(format!("[A0{tag}, R{tag}] = 0"), a0.commutator(r), zero.clone()),
        Relation::exact(
            format!("{{A+{tag}, A-{tag}}} = 2A0{tag}"),
            plus.anticommutator(minus).scale_rational(half),
            a0.scale_rational(int(2)),
        ),
        Relation::exact(format!("{{A+{tag}, R{tag}}} = 0"), plus.anticommutator(r), zero.clone()),
        Relation::exact(format!("{{A-{tag}, R{tag}}} = 0"), minus.anticommutator(r), zero.clone()),
    ]
}

fn sl_per_axis(osc: &Oscillator) -> Vec<Relation> {
    let mut out = Vec::new();
    for axis in Axis::ALL {
        let tag = format!("({})", axis.number());
        out.extend(sl_family(
            &tag,
            &osc.ladder(axis, LadderSign::Plus),
            &osc.ladder(axis, LadderSign::Minus),
            &osc.a0(axis),
            &osc.reflection(axis),
            &osc.zero(),
        ));
        let minus_mu = osc.scalar(real(-osc.mu_value(axis)));
        out.push(Relation::exact(format!("Q{tag} = -mu{}", axis.number()), osc.casimir(axis), minus_mu));
    }
    out
}

fn sl_coproduct(osc: &Oscillator) -> Vec<Relation> {
    sl_family(
        "",
        &osc.coproduct_ladder(LadderSign::Plus),
        &osc.coproduct_ladder(LadderSign::Minus),
        &osc.hamiltonian(HamiltonianScope::Total),
        &osc.total_reflection(),
        &osc.zero(),
    )
}

fn extra_mixed_ladder(osc: &Oscillator) -> Vec<Relation> {
    let mut out = Vec::new();
    for i in Axis::ALL {
        for j in Axis::ALL {
            let lhs = osc
                .ladder(i, LadderSign::Minus)
                .commutator(&osc.ladder(j, LadderSign::Plus))
                .scale_rational(rat(1, 2));
            let rhs = if i == j { osc.deformed_unit(i) } else { osc.zero() };
            let rhs_text = if i == j { format!("1 + 2mu{0}R{0}", i.number()) } else { "0".into() };
            out.push(Relation::exact(
                format!("[A-({}), A+({})] = {rhs_text}", i.number(), j.number()),
                lhs,
                rhs,
            ));
        }
    }
    out
}

/// Levi-Civita sign for a permutation of `(1, 2, 3)`.
fn epsilon(j: usize, k: usize, l: usize) -> i64 {
    match (j, k, l) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (1, 3, 2) | (3, 2, 1) | (2, 1, 3) => -1,
        _ => 0,
    }
}

fn third(j: usize, k: usize) -> usize {
    6 - j - k
}

/// `g_12 = g_23 = g_31 = 1`, antisymmetric.
fn g_entry(j: usize, k: usize) -> i64 {
    match (j, k) {
        (1, 2) | (2, 3) | (3, 1) => 1,
        (2, 1) | (3, 2) | (1, 3) => -1,
        _ => 0,
    }
}

fn axis(n: usize) -> Axis {
    Axis::from_number(n).expect("index in 1..=3")
}

fn sd3_published(osc: &Oscillator) -> Vec<Relation> {
    let i = imaginary_unit();
    let deformed = |op: OperatorExpr, l: usize| &op * &osc.deformed_unit(axis(l));
    let mut out = Vec::new();
    for (j, k) in [(1, 2), (2, 3), (3, 1)] {
        let l = third(j, k);
        out.push(Relation::exact(
            format!("[J{j}, J{k}] = i J{l}(1 + 2mu{l}R{l})"),
            osc.j(j).commutator(&osc.j(k)),
            deformed(osc.j(l), l).scale(i.clone()),
        ));
        out.push(Relation::exact(
            format!("[K{j}, K{k}] = -i J{l}(1 + 2mu{l}R{l})"),
            osc.k(j).commutator(&osc.k(k)),
            deformed(osc.j(l), l).scale(-i.clone()),
        ));
    }
    for j in 1..=3 {
        for k in 1..=3 {
            if j == k {
                continue;
            }
            let l = third(j, k);
            let e = epsilon(j, k, l);
            out.push(Relation::exact(
                format!("[J{j}, K{k}] = {}i K{l}(1 + 2mu{l}R{l})", if e > 0 { "-" } else { "" }),
                osc.j(j).commutator(&osc.k(k)),
                deformed(osc.k(l), l).scale(imag(int(-e))),
            ));
        }
    }
    for j in 1..=3 {
        // -i sum_{k,l} eps_{jkl} L_k (1 + 2 mu_l R_l), read with (j,k,l) cyclic
        let k = j % 3 + 1;
        let l = third(j, k);
        let rhs = (&deformed(osc.l(k), l) - &deformed(osc.l(l), k)).scale(-i.clone());
        out.push(Relation {
            label: format!("[J{j}, K{j}] = -i eps_{{{j}kl}} L_k(1 + 2mu_l R_l)"),
            lhs: osc.j(j).commutator(&osc.k(j)),
            rhs,
            mode: CheckMode::CheckedAsDiscovered,
            discover: Some((osc.j(j), osc.k(j))),
        });
    }
    for j in 1..=3 {
        for k in 1..=3 {
            let g = g_entry(j, k);
            out.push(Relation::exact(
                format!("[J{j}, L{k}] = i g{j}{k} K{j}/2"),
                osc.j(j).commutator(&osc.l(k)),
                osc.k(j).scale(imag(rat(g, 2))),
            ));
            out.push(Relation::exact(
                format!("[K{j}, L{k}] = -i g{j}{k} J{j}/2"),
                osc.k(j).commutator(&osc.l(k)),
                osc.j(j).scale(imag(rat(-g, 2))),
            ));
        }
    }
    let zero = osc.zero();
    for a in 1..=3 {
        let r = osc.reflection(axis(a));
        for b in 1..=3 {
            out.push(Relation::exact(format!("[L{b}, R{a}] = 0"), osc.l(b).commutator(&r), zero.clone()));
        }
        out.push(Relation::exact(format!("[J{a}, R{a}] = 0"), osc.j(a).commutator(&r), zero.clone()));
        out.push(Relation::exact(format!("[K{a}, R{a}] = 0"), osc.k(a).commutator(&r), zero.clone()));
        for b in (1..=3).filter(|&b| b != a) {
            out.push(Relation::exact(format!("{{J{b}, R{a}}} = 0"), osc.j(b).anticommutator(&r), zero.clone()));
            out.push(Relation::exact(format!("{{K{b}, R{a}}} = 0"), osc.k(b).anticommutator(&r), zero.clone()));
        }
    }
    out
}

fn sd2_subalgebra(osc: &Oscillator) -> Result<Vec<Relation>> {
    let i = imaginary_unit();
    let m1 = osc.sd2_generator(1)?;
    let m2 = osc.sd2_generator(2)?;
    let m3 = osc.sd2_generator(3)?;
    let (r1, r2) = (osc.reflection(Axis::X1), osc.reflection(Axis::X2));
    let h = osc.hamiltonian(HamiltonianScope::Total);
    // H + sqrt(3) M8
    let central = (&h + &osc.m8_scaled()).named("(H+√3M8)");
    let mu_r = |sign: i64| {
        &r1.scale_rational(osc.mu_value(Axis::X1)) + &r2.scale_rational(osc.mu_value(Axis::X2) * int(sign))
    };
    let bracket12 = &(&m3 + &(&m3 * &mu_r(1))) - &(&central * &mu_r(-1)).scale_rational(rat(1, 3));
    let zero = osc.zero();
    let mut out = vec![
        Relation::exact("[M2, M3] = iM1", m2.commutator(&m3), m1.scale(i.clone())),
        Relation::exact("[M3, M1] = iM2", m3.commutator(&m1), m2.scale(i.clone())),
        Relation::exact(
            "[M1, M2] = i(M3 + M3(mu1R1 + mu2R2) - (1/3)(H + √3M8)(mu1R1 - mu2R2))",
            m1.commutator(&m2),
            bracket12.scale(i.clone()),
        ),
    ];
    for (n, r) in [(1, &r1), (2, &r2)] {
        out.push(Relation::exact(format!("{{M1, R{n}}} = 0"), m1.anticommutator(r), zero.clone()));
        out.push(Relation::exact(format!("{{M2, R{n}}} = 0"), m2.anticommutator(r), zero.clone()));
        out.push(Relation::exact(format!("[M3, R{n}] = 0"), m3.commutator(r), zero.clone()));
    }
    let planar = &osc.hamiltonian(HamiltonianScope::Axis(Axis::X1)) + &osc.hamiltonian(HamiltonianScope::Axis(Axis::X2));
    out.push(Relation::exact(
        "2(H + √3M8) = 3(H1 + H2)",
        central.scale_rational(int(2)),
        planar.scale_rational(int(3)),
    ));
    for (name, x) in [("M1", &m1), ("M2", &m2), ("M3", &m3), ("R1", &r1), ("R2", &r2)] {
        out.push(Relation::exact(format!("[H + √3M8, {name}] = 0"), central.commutator(x), zero.clone()));
    }
    Ok(out)
}

/// `x_i^2 D_i^2 = x_i^2 d_i^2 + 2 mu_i x_i d_i - mu_i (1 - R_i)`, the square
/// of the Dunkl derivative cleared of its `1/x_i` denominators.
fn dunkl_square(mu: &MuParams) -> Vec<Relation> {
    let osc = Oscillator::plain(mu.clone());
    Axis::ALL
        .iter()
        .map(|&a| {
            let x = osc.coordinate(a);
            let d = osc.partial(a);
            let dd = osc.dunkl_derivative(a);
            let m = osc.mu_value(a);
            let xx = &x * &x;
            let rhs = OperatorExpr::sum(
                osc.representation(),
                &[
                    &(&xx * &d) * &d,
                    (&x * &d).scale_rational(int(2) * &m),
                    (&osc.identity() - &osc.reflection(a)).scale_rational(-m),
                ],
            );
            let n = a.number();
            Relation::exact(
                format!("D{n}^2 = d{n}^2 + (2mu{n}/x{n}) d{n} - (mu{n}/x{n}^2)(1 - R{n})"),
                &(&xx * &dd) * &dd,
                rhs,
            )
        })
        .collect()
}

fn build(suite: RelationSuite, mu: &MuParams) -> Result<Vec<Relation>> {
    let osc = Oscillator::gaussian(mu.clone());
    Ok(match suite {
        RelationSuite::SlPerAxis => sl_per_axis(&osc),
        RelationSuite::SlCoproduct => sl_coproduct(&osc),
        RelationSuite::ExtraMixedLadder => extra_mixed_ladder(&osc),
        RelationSuite::Sd3Published => sd3_published(&osc),
        RelationSuite::Sd2Subalgebra => sd2_subalgebra(&osc)?,
        RelationSuite::DunklSquare => dunkl_square(mu),
    })
}

fn check(suite: RelationSuite, relation: &Relation, cap: u32, mu: &MuParams) -> Result<RelationReport> {
    let witness = find_disagreement(&relation.lhs, &relation.rhs, cap).map(|w| WitnessReport {
        monomial: w.monomial.to_string(),
        left: w.left.to_string(),
        right: w.right.to_string(),
    });
    let note = match &relation.discover {
        Some((a, b)) => {
            let found = discover_relation(a, b, BracketKind::Commutator, cap, mu)?;
            Some(format!("discovered: {}", found.expansion))
        }
        None => None,
    };
    Ok(RelationReport {
        suite: suite.name(),
        label: relation.label.clone(),
        lhs: relation.lhs.to_string(),
        rhs: relation.rhs.to_string(),
        cap,
        mu: mu.clone(),
        mode: relation.mode,
        verdict: if witness.is_none() { Verdict::Holds } else { Verdict::Fails },
        witness,
        note,
    })
}

/// One report per relation of the suite, in a fixed order.
pub fn verify_relation_suite(suite: RelationSuite, degree_cap: u32, mu: &MuParams) -> Result<Vec<RelationReport>> {
    if degree_cap < 2 {
        return Err(Error::ParameterDomain(format!("degree cap {degree_cap} is below 2")));
    }
    let relations = build(suite, mu)?;
    relations.par_iter().map(|r| check(suite, r, degree_cap, mu)).collect()
}
