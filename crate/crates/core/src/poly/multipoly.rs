//! Sparse polynomials in `x1, x2, x3`.
//!
//! Canonical text form (used by the CLI and golden tests):
//!
//! ```text
//! poly    := "0" | term (( " + " | " - " ) term)*     first term may carry a leading "-"
//! term    := coeff | coeff "*" mono | mono              unit coefficients are omitted
//! mono    := factor ("*" factor)*                        factors in axis order
//! factor  := "x1" | "x2" | "x3" ["^" exponent]            exponent >= 2
//! coeff   := integer | integer "/" integer                for rational polynomials
//!          | "i" | q "*i" | "(" q ("+"|"-") q "*i)"      for Gaussian-rational ones
//! ```
//!
//! Terms are listed by decreasing graded-lexicographic order of their
//! exponent triples (total degree first, then `x1`, `x2`, `x3` exponents).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex;
use num_traits::{One, Signed, Zero};

use super::{int, parse_rational, Rational};
use crate::error::{Error, Result};

/// One of the three Cartesian coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X1,
    X2,
    X3,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X1, Axis::X2, Axis::X3];

    /// Zero-based position.
    pub fn index(self) -> usize {
        self as usize
    }

    /// One-based coordinate number, as in `x1`.
    pub fn number(self) -> usize {
        self.index() + 1
    }

    pub fn from_number(n: usize) -> Result<Axis> {
        match n {
            1 => Ok(Axis::X1),
            2 => Ok(Axis::X2),
            3 => Ok(Axis::X3),
            _ => Err(Error::ParameterDomain(format!("axis {n} is not in 1..=3"))),
        }
    }
}

/// Coefficient ring of a [`MultiPoly`].
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_rational(r: Rational) -> Self;

    /// Sign to print in front of the term, and the magnitude text (`None` when
    /// the magnitude is one).
    fn split_sign(&self) -> (bool, Option<String>);
}

impl Coeff for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }

    fn split_sign(&self) -> (bool, Option<String>) {
        let mag = self.abs();
        (self.is_negative(), (!mag.is_one()).then(|| mag.to_string()))
    }
}

impl Coeff for Complex<Rational> {
    fn from_rational(r: Rational) -> Self {
        Complex::new(r, Rational::zero())
    }

    fn split_sign(&self) -> (bool, Option<String>) {
        if self.im.is_zero() {
            return self.re.split_sign();
        }
        if self.re.is_zero() {
            let (neg, mag) = self.im.split_sign();
            let text = match mag {
                Some(m) => format!("{m}*i"),
                None => "i".to_string(),
            };
            return (neg, Some(text));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        let im = self.im.abs();
        let im_text = if im.is_one() {
            "i".to_string()
        } else {
            format!("{im}*i")
        };
        (false, Some(format!("({}{sign}{im_text})", self.re)))
    }
}

/// Exponent triple, ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, axis: Axis) -> u32 {
        self.0[axis.index()]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    pub fn with_exp(mut self, axis: Axis, e: u32) -> Monomial {
        self.0[axis.index()] = e;
        self
    }

    /// All exponent triples of total degree `<= max_degree`, in increasing order.
    pub fn up_to_degree(max_degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for d in 0..=max_degree {
            for a in (0..=d).rev() {
                for b in (0..=d - a).rev() {
                    out.push(Monomial([a, b, d - a - b]));
                }
            }
        }
        out.sort();
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<C: Coeff = Rational> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> Default for MultiPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> MultiPoly<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, C::one())
    }

    pub fn var(axis: Axis) -> Self {
        Self::monomial(Monomial::ONE.with_exp(axis, 1))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Accumulates `c * m`, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Lowest total degree among the terms; `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (*m, a.clone() * c.clone()))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Formal derivative in `axis`.
    pub fn partial_derivative(&self, axis: Axis) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exp(axis);
            if e > 0 {
                let k = C::from_rational(int(e as i64));
                out.add_term(m.with_exp(axis, e - 1), c.clone() * k);
            }
        }
        out
    }

    /// Exact quotient by `x_axis`; fails if any term lacks that variable.
    pub fn divide_by_variable(&self, axis: Axis) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(axis);
            if e == 0 {
                return Err(Error::NotDivisible {
                    axis: axis.number(),
                    term: format!("{m}"),
                });
            }
            terms.insert(m.with_exp(axis, e - 1), c.clone());
        }
        Ok(Self { terms })
    }

    /// `x_axis * p`.
    pub fn mul_variable(&self, axis: Axis) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.with_exp(axis, m.exp(axis) + 1), c.clone()))
                .collect(),
        }
    }

    /// `p(..., x_axis, ...) -> p(..., -x_axis, ...)`.
    pub fn reflect(&self, axis: Axis) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let c = if m.exp(axis) % 2 == 1 { -c.clone() } else { c.clone() };
                    (*m, c)
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl MultiPoly<Rational> {
    pub fn to_complex(&self) -> MultiPoly<Complex<Rational>> {
        self.map_coeffs(|c| Complex::new(c.clone(), Rational::zero()))
    }

    pub fn eval(&self, point: &[Rational; 3]) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut v = c.clone();
                for (i, &e) in m.0.iter().enumerate() {
                    for _ in 0..e {
                        v *= &point[i];
                    }
                }
                v
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Univariate polynomial lifted into `axis`.
    pub fn from_univariate(p: &super::UniPoly, axis: Axis) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::ONE.with_exp(axis, k as u32), c.clone())),
        )
    }
}

impl MultiPoly<Complex<Rational>> {
    pub fn real_part(&self) -> MultiPoly<Rational> {
        self.map_coeffs(|c| c.re.clone())
    }

    pub fn imag_part(&self) -> MultiPoly<Rational> {
        self.map_coeffs(|c| c.im.clone())
    }
}

impl<C: Coeff> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = c.split_sign();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let is_const = *m == Monomial::ONE;
            match (mag, is_const) {
                (Some(t), true) => write!(f, "{t}")?,
                (None, true) => write!(f, "1")?,
                (Some(t), false) => write!(f, "{t}*{m}")?,
                (None, false) => write!(f, "{m}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for MultiPoly<Rational> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && !compact[..i].ends_with('^') {
                if i > 0 {
                    if current.is_empty() {
                        return Err(Error::Parse(format!("dangling sign in `{s}`")));
                    }
                    pieces.push((negative, std::mem::take(&mut current)));
                }
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(Error::Parse(format!("dangling sign in `{s}`")));
        }
        pieces.push((negative, current));

        let mut poly = MultiPoly::zero();
        for (neg, text) in pieces {
            let (m, c) = parse_term(&text)?;
            poly.add_term(m, if neg { -c } else { c });
        }
        Ok(poly)
    }
}

fn parse_term(text: &str) -> Result<(Monomial, Rational)> {
    let mut coeff = Rational::one();
    let mut mono = Monomial::ONE;
    for (i, factor) in text.split('*').enumerate() {
        if let Some(rest) = factor.strip_prefix('x') {
            let (var, exp) = match rest.split_once('^') {
                Some((v, e)) => (
                    v,
                    e.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                ),
                None => (rest, 1),
            };
            let axis = var
                .parse::<usize>()
                .ok()
                .and_then(|n| Axis::from_number(n).ok())
                .ok_or_else(|| Error::Parse(format!("unknown variable `{factor}`")))?;
            mono.0[axis.index()] += exp;
        } else if i == 0 {
            coeff = parse_rational(factor)?;
        } else {
            return Err(Error::Parse(format!("coefficient must lead the term `{text}`")));
        }
    }
    Ok((mono, coeff))
}

impl<C: Coeff> Add for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<C: Coeff> Add for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(mut self, rhs: MultiPoly<C>) -> MultiPoly<C> {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<C: Coeff> Sub for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<C: Coeff> Sub for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(mut self, rhs: MultiPoly<C>) -> MultiPoly<C> {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl<C: Coeff> Mul for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Mul for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
        &self * &rhs
    }
}

impl<C: Coeff> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> Neg for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        -&self
    }
}
