//! Linear operators on polynomials and Gaussian-carried states.
//!
//! An [`OperatorExpr`] is an expression tree over four primitives (multiply by
//! `x_i`, formal `d/dx_i`, reflection `R_i`, Dunkl derivative `D_i`) closed
//! under scaling by Gaussian rationals, sums, composition, commutators and
//! anticommutators. Every expression denotes an operator on functions of
//! `(x1, x2, x3)`; the [`Representation`] tag says how a state is carried:
//!
//! * `Plain`: the state is the polynomial itself.
//! * `Gaussian`: the state is `p * exp(-r^2/2)` and only `p` is stored. The
//!   derivative primitives then act in conjugated form, e.g.
//!   `D_i p = dp/dx_i - x_i p + mu_i (1 - R_i) p / x_i`.
//!
//! Operator text form (the `to_sexpr` output):
//!
//! ```text
//! expr := "0" | "id" | "(x " n ")" | "(d " n ")" | "(R " n ")" | "(D " n " " mu ")"
//!       | "(scale " scalar " " expr ")" | "(+ " expr+ ")" | "(* " expr+ ")"
//!       | "(comm " expr " " expr ")" | "(anti " expr " " expr ")"
//! ```
//!
//! `(* a b)` applies `b` first. With names kept, a named subexpression prints
//! as its bare name, e.g. `(comm J1 J2)`.

mod gellmann;
mod oscillator;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Coeff, MultiPoly, MuParams, Rational};

pub use crate::poly::Axis;
pub use gellmann::{GellMannTable, Surd};
pub use oscillator::{HamiltonianScope, LadderSign, Oscillator, SymmetryKind};

/// Gaussian rational `a + b i`.
pub type Scalar = Complex<Rational>;

/// Polynomial with Gaussian-rational coefficients.
pub type CPoly = MultiPoly<Scalar>;

pub fn real(r: Rational) -> Scalar {
    Complex::new(r, Rational::zero())
}

pub fn imag(r: Rational) -> Scalar {
    Complex::new(Rational::zero(), r)
}

pub fn imaginary_unit() -> Scalar {
    imag(Rational::one())
}

/// Text form used in operator expressions and reports: `3/2`, `-i`, `(1/2-3*i)`.
pub fn scalar_text(s: &Scalar) -> String {
    let (neg, mag) = s.split_sign();
    let body = mag.unwrap_or_else(|| "1".to_string());
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Representation {
    Plain,
    Gaussian,
}

impl Representation {
    pub fn name(self) -> &'static str {
        match self {
            Representation::Plain => "plain",
            Representation::Gaussian => "gaussian",
        }
    }
}

/// A state `poly * exp(-(x1^2 + x2^2 + x3^2)/2)`; the Gaussian is implicit.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussianState {
    pub poly: CPoly,
    pub mu: MuParams,
}

impl GaussianState {
    pub fn new(poly: CPoly, mu: MuParams) -> Self {
        Self { poly, mu }
    }

    pub fn from_real(poly: &MultiPoly, mu: MuParams) -> Self {
        Self {
            poly: poly.to_complex(),
            mu,
        }
    }

    pub fn is_real(&self) -> bool {
        self.poly.terms().all(|(_, c)| c.im.is_zero())
    }

    pub fn real_poly(&self) -> MultiPoly {
        self.poly.real_part()
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Node {
    Zero,
    Identity,
    Coord(Axis),
    Partial(Axis),
    Reflect(Axis),
    Dunkl { axis: Axis, mu: Rational },
    Scale(Scalar, Arc<Node>),
    Sum(Vec<Arc<Node>>),
    Compose(Vec<Arc<Node>>),
    Commutator(Arc<Node>, Arc<Node>),
    Anticommutator(Arc<Node>, Arc<Node>),
    Named(String, Arc<Node>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BracketKind {
    Commutator,
    Anticommutator,
}

/// Immutable operator expression with its representation tag.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorExpr {
    rep: Representation,
    node: Arc<Node>,
}

/// Dunkl derivative on a plain polynomial, via the exact quotient
/// `(1 - R_i) p / x_i`.
pub(crate) fn dunkl_plain(p: &CPoly, axis: Axis, mu: &Rational) -> CPoly {
    let mut out = p.partial_derivative(axis);
    if !mu.is_zero() {
        let odd = p - &p.reflect(axis);
        let quotient = odd
            .divide_by_variable(axis)
            .expect("(1 - R_i) p is odd in x_i and hence divisible by x_i");
        out = out + quotient.scale(&real(mu.clone()));
    }
    out
}

fn act(node: &Node, rep: Representation, p: &CPoly) -> CPoly {
    if p.is_zero() {
        return CPoly::zero();
    }
    match node {
        Node::Zero => CPoly::zero(),
        Node::Identity => p.clone(),
        Node::Coord(a) => p.mul_variable(*a),
        Node::Partial(a) => {
            let d = p.partial_derivative(*a);
            match rep {
                Representation::Plain => d,
                Representation::Gaussian => d - p.mul_variable(*a),
            }
        }
        Node::Reflect(a) => p.reflect(*a),
        Node::Dunkl { axis, mu } => {
            let d = dunkl_plain(p, *axis, mu);
            match rep {
                Representation::Plain => d,
                Representation::Gaussian => d - p.mul_variable(*axis),
            }
        }
        Node::Scale(s, inner) => act(inner, rep, p).scale(s),
        Node::Sum(parts) => parts
            .iter()
            .fold(CPoly::zero(), |acc, n| acc + act(n, rep, p)),
        Node::Compose(parts) => parts
            .iter()
            .rev()
            .fold(p.clone(), |acc, n| act(n, rep, &acc)),
        Node::Commutator(a, b) => {
            let ab = act(a, rep, &act(b, rep, p));
            let ba = act(b, rep, &act(a, rep, p));
            ab - ba
        }
        Node::Anticommutator(a, b) => {
            let ab = act(a, rep, &act(b, rep, p));
            let ba = act(b, rep, &act(a, rep, p));
            ab + ba
        }
        Node::Named(_, inner) => act(inner, rep, p),
    }
}

fn write_sexpr(node: &Node, keep_names: bool, out: &mut String) {
    use std::fmt::Write;
    let list = |tag: &str, parts: &[&Arc<Node>], out: &mut String| {
        out.push('(');
        out.push_str(tag);
        for p in parts {
            out.push(' ');
            write_sexpr(p, keep_names, out);
        }
        out.push(')');
    };
    match node {
        Node::Zero => out.push('0'),
        Node::Identity => out.push_str("id"),
        Node::Coord(a) => {
            let _ = write!(out, "(x {})", a.number());
        }
        Node::Partial(a) => {
            let _ = write!(out, "(d {})", a.number());
        }
        Node::Reflect(a) => {
            let _ = write!(out, "(R {})", a.number());
        }
        Node::Dunkl { axis, mu } => {
            let _ = write!(out, "(D {} {mu})", axis.number());
        }
        Node::Scale(s, inner) => {
            let _ = write!(out, "(scale {} ", scalar_text(s));
            write_sexpr(inner, keep_names, out);
            out.push(')');
        }
        Node::Sum(parts) => list("+", &parts.iter().collect::<Vec<_>>(), out),
        Node::Compose(parts) => list("*", &parts.iter().collect::<Vec<_>>(), out),
        Node::Commutator(a, b) => list("comm", &[a, b], out),
        Node::Anticommutator(a, b) => list("anti", &[a, b], out),
        Node::Named(name, inner) => {
            if keep_names {
                out.push_str(name);
            } else {
                write_sexpr(inner, keep_names, out);
            }
        }
    }
}

impl OperatorExpr {
    fn from_node(rep: Representation, node: Node) -> Self {
        Self {
            rep,
            node: Arc::new(node),
        }
    }

    pub fn zero(rep: Representation) -> Self {
        Self::from_node(rep, Node::Zero)
    }

    pub fn identity(rep: Representation) -> Self {
        Self::from_node(rep, Node::Identity)
    }

    pub fn coordinate(rep: Representation, axis: Axis) -> Self {
        Self::from_node(rep, Node::Coord(axis))
    }

    pub fn partial(rep: Representation, axis: Axis) -> Self {
        Self::from_node(rep, Node::Partial(axis))
    }

    pub fn reflection(rep: Representation, axis: Axis) -> Self {
        Self::from_node(rep, Node::Reflect(axis))
    }

    pub fn dunkl_derivative(rep: Representation, axis: Axis, mu: Rational) -> Self {
        Self::from_node(rep, Node::Dunkl { axis, mu })
    }

    pub fn representation(&self) -> Representation {
        self.rep
    }

    /// Attaches a display name; the action is unchanged.
    pub fn named(&self, name: impl Into<String>) -> Self {
        Self::from_node(self.rep, Node::Named(name.into(), self.node.clone()))
    }

    pub fn name(&self) -> Option<&str> {
        match &*self.node {
            Node::Named(n, _) => Some(n),
            _ => None,
        }
    }

    fn same_rep(&self, other: &Self) {
        assert_eq!(
            self.rep, other.rep,
            "cannot combine {} and {} operators",
            self.rep.name(),
            other.rep.name()
        );
    }

    pub fn scale(&self, s: Scalar) -> Self {
        Self::from_node(self.rep, Node::Scale(s, self.node.clone()))
    }

    pub fn scale_rational(&self, r: Rational) -> Self {
        self.scale(real(r))
    }

    pub fn times_i(&self) -> Self {
        self.scale(imaginary_unit())
    }

    /// `self ∘ other`: `other` acts first.
    ///
    /// # Panics
    /// If the representation tags differ; use [`bracket`] for a checked
    /// combinator.
    pub fn compose(&self, other: &Self) -> Self {
        self.same_rep(other);
        Self::from_node(
            self.rep,
            Node::Compose(vec![self.node.clone(), other.node.clone()]),
        )
    }

    pub fn sum(rep: Representation, parts: &[OperatorExpr]) -> Self {
        for p in parts {
            assert_eq!(p.rep, rep, "cannot sum operators of different representations");
        }
        Self::from_node(rep, Node::Sum(parts.iter().map(|p| p.node.clone()).collect()))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.same_rep(other);
        Self::from_node(
            self.rep,
            Node::Commutator(self.node.clone(), other.node.clone()),
        )
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        self.same_rep(other);
        Self::from_node(
            self.rep,
            Node::Anticommutator(self.node.clone(), other.node.clone()),
        )
    }

    /// Action on a polynomial in this operator's representation.
    pub fn act(&self, p: &CPoly) -> CPoly {
        act(&self.node, self.rep, p)
    }

    /// Plain-representation action.
    pub fn apply(&self, p: &CPoly) -> Result<CPoly> {
        if self.rep != Representation::Plain {
            return Err(Error::RepresentationMismatch {
                operator: self.rep.name(),
                state: Representation::Plain.name(),
            });
        }
        Ok(self.act(p))
    }

    pub fn apply_real(&self, p: &MultiPoly) -> Result<CPoly> {
        self.apply(&p.to_complex())
    }

    pub fn apply_gaussian(&self, state: &GaussianState) -> Result<GaussianState> {
        if self.rep != Representation::Gaussian {
            return Err(Error::RepresentationMismatch {
                operator: self.rep.name(),
                state: Representation::Gaussian.name(),
            });
        }
        Ok(GaussianState::new(self.act(&state.poly), state.mu.clone()))
    }

    /// Canonical text form; `keep_names` prints named subexpressions by name.
    pub fn to_sexpr(&self, keep_names: bool) -> String {
        let mut out = String::new();
        write_sexpr(&self.node, keep_names, &mut out);
        out
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sexpr(true))
    }
}

/// Checked commutator/anticommutator.
pub fn bracket(a: &OperatorExpr, b: &OperatorExpr, kind: BracketKind) -> Result<OperatorExpr> {
    if a.rep != b.rep {
        return Err(Error::RepresentationMismatch {
            operator: a.rep.name(),
            state: b.rep.name(),
        });
    }
    Ok(match kind {
        BracketKind::Commutator => a.commutator(b),
        BracketKind::Anticommutator => a.anticommutator(b),
    })
}

/// First basis monomial on which two operators disagree.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub monomial: crate::poly::Monomial,
    pub left: CPoly,
    pub right: CPoly,
}

/// Compares actions on every monomial of total degree `<= degree_cap`.
///
/// Agreement is equality on that finite-dimensional subspace only, not an
/// identity in all degrees.
pub fn find_disagreement(a: &OperatorExpr, b: &OperatorExpr, degree_cap: u32) -> Option<Witness> {
    use rayon::prelude::*;
    a.same_rep(b);
    crate::poly::Monomial::up_to_degree(degree_cap)
        .par_iter()
        .find_map_first(|m| {
            let p = CPoly::monomial(*m);
            let left = a.act(&p);
            let right = b.act(&p);
            (left != right).then_some(Witness {
                monomial: *m,
                left,
                right,
            })
        })
}

pub fn operators_equal(a: &OperatorExpr, b: &OperatorExpr, degree_cap: u32) -> bool {
    find_disagreement(a, b, degree_cap).is_none()
}

impl Add for &OperatorExpr {
    type Output = OperatorExpr;
    fn add(self, rhs: &OperatorExpr) -> OperatorExpr {
        OperatorExpr::sum(self.rep, &[self.clone(), rhs.clone()])
    }
}

impl Add for OperatorExpr {
    type Output = OperatorExpr;
    fn add(self, rhs: OperatorExpr) -> OperatorExpr {
        &self + &rhs
    }
}

impl Sub for &OperatorExpr {
    type Output = OperatorExpr;
    fn sub(self, rhs: &OperatorExpr) -> OperatorExpr {
        OperatorExpr::sum(self.rep, &[self.clone(), -rhs])
    }
}

impl Sub for OperatorExpr {
    type Output = OperatorExpr;
    fn sub(self, rhs: OperatorExpr) -> OperatorExpr {
        &self - &rhs
    }
}

impl Mul for &OperatorExpr {
    type Output = OperatorExpr;
    fn mul(self, rhs: &OperatorExpr) -> OperatorExpr {
        self.compose(rhs)
    }
}

impl Mul for OperatorExpr {
    type Output = OperatorExpr;
    fn mul(self, rhs: OperatorExpr) -> OperatorExpr {
        self.compose(&rhs)
    }
}

impl Neg for &OperatorExpr {
    type Output = OperatorExpr;
    fn neg(self) -> OperatorExpr {
        self.scale(real(-Rational::one()))
    }
}

impl Neg for OperatorExpr {
    type Output = OperatorExpr;
    fn neg(self) -> OperatorExpr {
        -&self
    }
}

#[cfg(test)]
mod tests;
