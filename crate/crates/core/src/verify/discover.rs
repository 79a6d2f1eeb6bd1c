use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::linalg::{ColumnEchelon, Key, SparseVec};
use crate::error::{Error, Result};
use crate::operators::{
    bracket, imag, imaginary_unit, operators_equal, real, scalar_text, Axis, BracketKind, CPoly,
    GellMannTable, OperatorExpr, Oscillator, Scalar,
};
use crate::poly::{int, rat, Monomial, MuParams};

/// Generators of the discovery ansatz, each also composed with the eight
/// reflection monomials `R1^a R2^b R3^c`.
pub const SD3_GENERATORS: [&str; 10] = ["1", "J1", "J2", "J3", "K1", "K2", "K3", "L1", "L2", "L3"];

/// Resolves `1`, `Jn`, `Kn`, `Ln`, `Rn` or `H` to an operator.
pub fn named_operator(osc: &Oscillator, name: &str) -> Result<OperatorExpr> {
    let bad = || Error::Parse(format!("unknown operator {name:?}; expected 1, H, Jn, Kn, Ln or Rn"));
    match name {
        "1" | "id" => return Ok(osc.identity().named("1")),
        "H" => return Ok(osc.hamiltonian(crate::operators::HamiltonianScope::Total)),
        _ => {}
    }
    let mut chars = name.chars();
    let (kind, rest) = (chars.next().ok_or_else(bad)?, chars.as_str());
    let n: usize = rest.parse().map_err(|_| bad())?;
    if !(1..=3).contains(&n) {
        return Err(bad());
    }
    Ok(match kind {
        'J' => osc.j(n),
        'K' => osc.k(n),
        'L' => osc.l(n),
        'R' => osc.reflection(Axis::from_number(n)?),
        _ => return Err(bad()),
    })
}

fn reflection_text(bits: usize) -> String {
    (0..3).filter(|b| bits >> b & 1 == 1).map(|b| format!("R{}", b + 1)).collect::<Vec<_>>().join("*")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnsatzTerm {
    pub generator: String,
    /// Reflection monomial applied first, e.g. `R1*R3`; empty for none.
    pub reflections: String,
    pub coefficient: String,
    #[serde(skip)]
    pub value: Scalar,
}

impl AnsatzTerm {
    fn operator_text(&self) -> String {
        match (self.generator.as_str(), self.reflections.is_empty()) {
            ("1", true) => String::new(),
            ("1", false) => self.reflections.clone(),
            (g, true) => g.to_string(),
            (g, false) => format!("{g}*{}", self.reflections),
        }
    }
}

fn render(terms: &[AnsatzTerm]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, t) in terms.iter().enumerate() {
        let (neg, mag) = crate::poly::Coeff::split_sign(&t.value);
        let op = t.operator_text();
        let body = match (mag, op.is_empty()) {
            (Some(m), true) => m,
            (Some(m), false) => format!("{m}*{op}"),
            (None, true) => "1".into(),
            (None, false) => op,
        };
        match (n, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiscoveredRelation {
    pub bracket: String,
    pub cap: u32,
    pub mu: MuParams,
    pub terms: Vec<AnsatzTerm>,
    pub expansion: String,
    /// No exact expansion exists within the ansatz.
    pub residual: bool,
    /// The ansatz is rank deficient on the capped basis, so the expansion
    /// shown is one of several.
    pub underdetermined: bool,
    pub rank: usize,
    pub unknowns: usize,
    pub diagnostics: Option<String>,
}

impl DiscoveredRelation {
    pub fn is_clean(&self) -> bool {
        !self.residual && !self.underdetermined
    }
}

/// Exact fit system for one input parity class of monomials.
struct ClassSystem {
    inputs: Vec<Monomial>,
    echelon: ColumnEchelon,
}

fn action_vector(op: &OperatorExpr, inputs: &[Monomial]) -> SparseVec {
    let mut v = SparseVec::new();
    for (i, m) in inputs.iter().enumerate() {
        for (out, c) in op.act(&CPoly::monomial(*m)).terms() {
            v.insert((i as u32, *out) as Key, c.clone());
        }
    }
    v
}

/// Linear ansatz `sum_{g,b} c_{g,b} g R^b`. On inputs of parity class `s`,
/// `R^b` is the sign `(-1)^(b.s)`, so the fit splits into one system per
/// class for `d_{g,s} = sum_b (-1)^(b.s) c_{g,b}`, inverted by a Hadamard
/// transform.
struct Ansatz {
    names: Vec<String>,
    reflections: bool,
    classes: Vec<ClassSystem>,
}

fn parity_class(m: &Monomial) -> usize {
    (0..3).map(|i| ((m.0[i] % 2) as usize) << i).sum()
}

impl Ansatz {
    fn new(generators: &[(String, OperatorExpr)], reflections: bool, cap: u32) -> Self {
        let monomials = Monomial::up_to_degree(cap);
        let groups: Vec<Vec<Monomial>> = if reflections {
            (0..8).map(|s| monomials.iter().copied().filter(|m| parity_class(m) == s).collect()).collect()
        } else {
            vec![monomials]
        };
        let classes = groups
            .into_par_iter()
            .map(|inputs| {
                let columns: Vec<SparseVec> = generators.iter().map(|(_, g)| action_vector(g, &inputs)).collect();
                ClassSystem { echelon: ColumnEchelon::new(&columns), inputs }
            })
            .collect();
        Ansatz { names: generators.iter().map(|(n, _)| n.clone()).collect(), reflections, classes }
    }

    fn unknowns(&self) -> usize {
        self.names.len() * if self.reflections { 8 } else { 1 }
    }

    fn fit(&self, label: String, target: &OperatorExpr, cap: u32, mu: &MuParams) -> DiscoveredRelation {
        let g = self.names.len();
        let mut d = vec![vec![Scalar::zero(); self.classes.len()]; g];
        let mut residual_classes = Vec::new();
        let mut deficient = Vec::new();
        let mut rank = 0;
        for (s, class) in self.classes.iter().enumerate() {
            rank += class.echelon.rank();
            if !class.echelon.dependent_columns().is_empty() {
                let names: Vec<&str> = class.echelon.dependent_columns().iter().map(|&c| self.names[c].as_str()).collect();
                deficient.push(format!("class {s}: dependent {}", names.join(",")));
            }
            match class.echelon.solve(&action_vector(target, &class.inputs)) {
                Ok(sol) => {
                    for (k, c) in sol.into_iter().enumerate() {
                        d[k][s] = c;
                    }
                }
                Err(left) => residual_classes.push(format!("class {s}: {left} unmatched entries")),
            }
        }
        let mut terms = Vec::new();
        let residual = !residual_classes.is_empty();
        if !residual {
            let nbits = if self.reflections { 8 } else { 1 };
            let norm = real(rat(1, nbits as i64));
            for (k, dk) in d.iter().enumerate() {
                for bits in 0..nbits {
                    let mut c = Scalar::zero();
                    for (s, v) in dk.iter().enumerate() {
                        if (bits & s).count_ones() % 2 == 0 {
                            c += v.clone();
                        } else {
                            c -= v.clone();
                        }
                    }
                    let c = c * norm.clone();
                    if !c.is_zero() {
                        terms.push(AnsatzTerm {
                            generator: self.names[k].clone(),
                            reflections: reflection_text(bits),
                            coefficient: scalar_text(&c),
                            value: c,
                        });
                    }
                }
            }
        }
        let mut notes = residual_classes;
        notes.extend(deficient.iter().cloned());
        DiscoveredRelation {
            bracket: label,
            cap,
            mu: mu.clone(),
            expansion: if residual { "no exact expansion in the ansatz".into() } else { render(&terms) },
            terms,
            residual,
            underdetermined: !deficient.is_empty(),
            rank,
            unknowns: self.unknowns(),
            diagnostics: (!notes.is_empty()).then(|| notes.join("; ")),
        }
    }
}

fn sd3_ansatz(osc: &Oscillator, cap: u32) -> Ansatz {
    let generators: Vec<(String, OperatorExpr)> = SD3_GENERATORS
        .iter()
        .map(|n| (n.to_string(), named_operator(osc, n).expect("ansatz names are valid")))
        .collect();
    Ansatz::new(&generators, true, cap)
}

fn bracket_label(a: &OperatorExpr, b: &OperatorExpr, kind: BracketKind) -> String {
    let name = |o: &OperatorExpr| o.name().map(str::to_string).unwrap_or_else(|| o.to_string());
    match kind {
        BracketKind::Commutator => format!("[{}, {}]", name(a), name(b)),
        BracketKind::Anticommutator => format!("{{{}, {}}}", name(a), name(b)),
    }
}

/// Expresses `[a, b]` (or `{a, b}`) over `{1, J, K, L} x {R1^a R2^b R3^c}` by
/// exact elimination on the monomials of degree `<= cap`.
pub fn discover_relation(
    a: &OperatorExpr,
    b: &OperatorExpr,
    kind: BracketKind,
    degree_cap: u32,
    mu: &MuParams,
) -> Result<DiscoveredRelation> {
    let osc = Oscillator::new(mu.clone(), a.representation());
    let target = bracket(a, b, kind)?;
    let ansatz = sd3_ansatz(&osc, degree_cap);
    Ok(ansatz.fit(bracket_label(a, b, kind), &target, degree_cap, mu))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComparisonStatus {
    Matches,
    Mismatch,
    /// The printed relation is ambiguous; the reading used is compared.
    AmbiguousMismatch,
    AmbiguousMatches,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PublishedComparison {
    pub discovered: DiscoveredRelation,
    /// The published right-hand side (or the reading used).
    pub published: String,
    pub status: ComparisonStatus,
}

impl PublishedComparison {
    pub fn matches(&self) -> bool {
        matches!(self.status, ComparisonStatus::Matches | ComparisonStatus::AmbiguousMatches)
    }
}

fn eps(j: usize, k: usize) -> i64 {
    match (j, k) {
        (1, 2) | (2, 3) | (3, 1) => 1,
        (2, 1) | (3, 2) | (1, 3) => -1,
        _ => 0,
    }
}

/// Published right-hand side for a bracket of two generators, with a flag
/// for readings of ambiguous displays.
fn published(osc: &Oscillator, a: (char, usize), b: (char, usize)) -> (String, OperatorExpr, bool) {
    if a == b {
        return ("0".into(), osc.zero(), false);
    }
    let i = imaginary_unit();
    let (j, k) = (a.1, b.1);
    let l = 6 - j - k;
    let ax = |n: usize| Axis::from_number(n).expect("index in 1..=3");
    let deformed = |op: OperatorExpr, n: usize| &op * &osc.deformed_unit(ax(n));
    let e = eps(j, k);
    let sign = |s: i64| if s < 0 { "-" } else { "" };
    match (a.0, b.0) {
        ('J', 'J') => (
            format!("{}i*J{l}*(1+2mu{l}*R{l})", sign(e)),
            deformed(osc.j(l), l).scale(imag(int(e))),
            false,
        ),
        ('K', 'K') => (
            format!("{}i*J{l}*(1+2mu{l}*R{l})", sign(-e)),
            deformed(osc.j(l), l).scale(imag(int(-e))),
            false,
        ),
        ('J', 'K') if j != k => (
            format!("{}i*K{l}*(1+2mu{l}*R{l})", sign(-e)),
            deformed(osc.k(l), l).scale(imag(int(-e))),
            false,
        ),
        ('J', 'K') => {
            let (k, l) = (j % 3 + 1, (j + 1) % 3 + 1);
            (
                format!("-i*(L{k}*(1+2mu{l}*R{l}) - L{l}*(1+2mu{k}*R{k}))"),
                (&deformed(osc.l(k), l) - &deformed(osc.l(l), k)).scale(-i),
                true,
            )
        }
        ('J', 'L') => (format!("i*g{j}{k}*K{j}/2 with g{j}{k} = {}", eps(j, k)), osc.k(j).scale(imag(rat(eps(j, k), 2))), false),
        ('K', 'L') => (format!("-i*g{j}{k}*J{j}/2 with g{j}{k} = {}", eps(j, k)), osc.j(j).scale(imag(rat(-eps(j, k), 2))), false),
        _ => ("0".into(), osc.zero(), false),
    }
}

/// Every bracket between the nine symmetries `J, K, L`, each discovered
/// and compared with the published relations.
pub fn discover_sd3_all(degree_cap: u32, mu: &MuParams) -> Result<Vec<PublishedComparison>> {
    let osc = Oscillator::gaussian(mu.clone());
    let ansatz = sd3_ansatz(&osc, degree_cap);
    let gens: Vec<(char, usize)> = ['J', 'K', 'L'].iter().flat_map(|&c| (1..=3).map(move |n| (c, n))).collect();
    let mut pairs = Vec::new();
    for (x, a) in gens.iter().enumerate() {
        for b in &gens[x..] {
            if a.0 == b.0 && a.1 >= b.1 {
                continue;
            }
            pairs.push((*a, *b));
        }
    }
    pairs.par_iter().map(|&(a, b)| compare(&osc, &ansatz, a, b, degree_cap, mu)).collect()
}

fn compare(
    osc: &Oscillator,
    ansatz: &Ansatz,
    a: (char, usize),
    b: (char, usize),
    degree_cap: u32,
    mu: &MuParams,
) -> Result<PublishedComparison> {
    let op = |g: (char, usize)| named_operator(osc, &format!("{}{}", g.0, g.1));
    let (oa, ob) = (op(a)?, op(b)?);
    let target = oa.commutator(&ob);
    let discovered = ansatz.fit(bracket_label(&oa, &ob, BracketKind::Commutator), &target, degree_cap, mu);
    let (text, expected, ambiguous) = published(osc, a, b);
    let agrees = operators_equal(&target, &expected, degree_cap);
    let status = match (ambiguous, agrees) {
        (false, true) => ComparisonStatus::Matches,
        (false, false) => ComparisonStatus::Mismatch,
        (true, true) => ComparisonStatus::AmbiguousMatches,
        (true, false) => ComparisonStatus::AmbiguousMismatch,
    };
    Ok(PublishedComparison { discovered, published: text, status })
}

fn symmetry_index(name: &str) -> Option<(char, usize)> {
    let mut chars = name.chars();
    let family = chars.next().filter(|c| matches!(c, 'J' | 'K' | 'L'))?;
    let n: usize = chars.as_str().parse().ok().filter(|n| (1..=3).contains(n))?;
    Some((family, n))
}

/// Commutator of two named operators fitted over the sd(3) ansatz. When both
/// are among `J, K, L` the result is also compared with the published
/// relation.
pub fn discover_named_pair(a: &str, b: &str, degree_cap: u32, mu: &MuParams) -> Result<(DiscoveredRelation, Option<PublishedComparison>)> {
    let osc = Oscillator::gaussian(mu.clone());
    if let (Some(x), Some(y)) = (symmetry_index(a), symmetry_index(b)) {
        let ansatz = sd3_ansatz(&osc, degree_cap);
        let cmp = compare(&osc, &ansatz, x, y, degree_cap, mu)?;
        return Ok((cmp.discovered.clone(), Some(cmp)));
    }
    let (oa, ob) = (named_operator(&osc, a)?, named_operator(&osc, b)?);
    Ok((discover_relation(&oa, &ob, BracketKind::Commutator, degree_cap, mu)?, None))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FTableEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub discovered: String,
    pub reference: String,
    pub matches: bool,
}

/// At `mu = 0`, fits every `[G_i, G_j]` over `{1, G_1, ..., G_8}` and converts
/// the coefficients to `f^{ijk}`; entries where either side is nonzero.
pub fn gellmann_table_at_zero(degree_cap: u32) -> Result<Vec<FTableEntry>> {
    let osc = Oscillator::gaussian(MuParams::zero());
    let table = GellMannTable::standard();
    let mut generators = vec![("1".to_string(), osc.identity())];
    for j in 1..=8 {
        let g = osc.gellmann_symmetry(j)?;
        generators.push((g.name().unwrap_or_default().to_string(), g));
    }
    let ansatz = Ansatz::new(&generators, false, degree_cap);
    let mut pairs = Vec::new();
    for i in 1..=8 {
        for j in i + 1..=8 {
            pairs.push((i, j));
        }
    }
    let rows: Vec<Vec<FTableEntry>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let target = generators[i].1.commutator(&generators[j].1);
            let fit = ansatz.fit(format!("[G{i}, G{j}]"), &target, degree_cap, &MuParams::zero());
            let mut out = Vec::new();
            let identity_part = fit.terms.iter().any(|t| t.generator == "1");
            for k in 1..=8 {
                let reference = table.reference_constant(i, j, k);
                let coefficient = fit
                    .terms
                    .iter()
                    .find(|t| t.generator == generators[k].0)
                    .map(|t| t.value.clone())
                    .unwrap_or_else(|| imag(int(0)));
                let discovered = if fit.residual || fit.underdetermined {
                    None
                } else {
                    GellMannTable::constant_from_scaled(i, j, k, &coefficient)
                };
                let matches = !identity_part && discovered.as_ref() == Some(&reference);
                if reference.is_zero() && discovered.as_ref().is_some_and(|d| d.is_zero()) && !identity_part {
                    continue;
                }
                out.push(FTableEntry {
                    i,
                    j,
                    k,
                    discovered: discovered.map_or_else(|| fit.expansion.clone(), |d| d.to_string()),
                    reference: reference.to_string(),
                    matches,
                });
            }
            out
        })
        .collect();
    Ok(rows.into_iter().flatten().collect())
}
