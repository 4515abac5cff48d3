//! Sparse multivariate polynomials with exact rational coefficients over a
//! fixed, explicitly ordered variable list.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector; the key order is
//! graded lexicographic with the `VarSet`'s declared variable order, which
//! makes rendering and golden tests deterministic. Zero coefficients are
//! never stored, so the zero polynomial is exactly the empty term map.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rat::Rational;

mod parse;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("duplicate variable `{0}` in variable set")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("operands belong to different variable sets")]
    VarSetMismatch,
    #[error("exponent vector has length {got}, variable set has {expected}")]
    ExponentLength { got: usize, expected: usize },
    #[error("evaluation point has length {got}, variable set has {expected}")]
    PointLength { got: usize, expected: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

/// Ordered list of distinct variable names; fixed at construction.
///
/// Cheap to clone (shared storage); two sets compare equal when they list
/// the same names in the same order.
#[derive(Debug, Clone, Eq)]
pub struct VarSet {
    names: Arc<Vec<String>>,
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl VarSet {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Result<Self, PolyError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(VarSet {
            names: Arc::new(names),
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Index of `name`, as an error when absent.
    pub fn require(&self, name: &str) -> Result<usize, PolyError> {
        self.index(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }
}

/// Exponent vector; total degree is the sum of entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial (all exponents zero).
    pub fn unit(n_vars: usize) -> Self {
        Monomial {
            exps: vec![0; n_vars],
        }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// True when `self` divides `other` componentwise.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    fn quotient_into(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        }
    }
}

/// Graded lexicographic: compare total degree first, then the exponent
/// vector lexicographically (earlier variables weigh more).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial: monomial -> nonzero rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: VarSet,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: &VarSet) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &VarSet, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(vars.len()), c);
        }
        Polynomial {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn variable(vars: &VarSet, name: &str) -> Result<Self, PolyError> {
        let i = vars.require(name)?;
        let mut exps = vec![0; vars.len()];
        exps[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::new(exps), Rational::one());
        Ok(Polynomial {
            vars: vars.clone(),
            terms,
        })
    }

    /// Builds from raw terms, summing duplicates and pruning zeros.
    pub fn from_terms<I>(vars: &VarSet, iter: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in iter {
            if m.len() != vars.len() {
                return Err(PolyError::ExponentLength {
                    got: m.len(),
                    expected: vars.len(),
                });
            }
            if c.is_zero() {
                continue;
            }
            let slot = terms.entry(m.clone()).or_insert_with(Rational::zero);
            *slot += c;
            if slot.is_zero() {
                terms.remove(&m);
            }
        }
        Ok(Polynomial {
            vars: vars.clone(),
            terms,
        })
    }

    pub fn parse(vars: &VarSet, src: &str) -> Result<Self, PolyError> {
        parse::parse(vars, src)
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of an exact monomial (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term in graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Total degree of the highest term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// `Some(d)` when every term has total degree `d`; `None` for zero or
    /// mixed-degree polynomials.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::total_degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    fn check_same_vars(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(PolyError::VarSetMismatch)
        }
    }

    /// Termwise sum with zero pruning; errors on mismatched variable sets.
    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same_vars(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let slot = terms.entry(m.clone()).or_insert_with(Rational::zero);
            *slot += c;
            if slot.is_zero() {
                terms.remove(m);
            }
        }
        Ok(Polynomial {
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.try_add(&other.clone().neg())
    }

    /// Distributive exact product; errors on mismatched variable sets.
    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same_vars(other)?;
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                let slot = terms.entry(m.clone()).or_insert_with(Rational::zero);
                *slot += c;
                if slot.is_zero() {
                    terms.remove(&m);
                }
            }
        }
        Ok(Polynomial {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    /// `self^e` by repeated squaring, with `p^0 = 1`.
    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.try_mul(&base).expect("same varset");
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base).expect("same varset");
            }
        }
        result
    }

    /// Exact substitution and re-expansion. Every binding polynomial must
    /// live in the same variable set.
    pub fn subst(&self, bindings: &[(usize, Polynomial)]) -> Result<Polynomial, PolyError> {
        for (i, p) in bindings {
            if *i >= self.vars.len() {
                return Err(PolyError::ExponentLength {
                    got: *i,
                    expected: self.vars.len(),
                });
            }
            self.check_same_vars(p)?;
        }
        let mut acc = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut residual = m.exps.clone();
            let mut factor = Polynomial::constant(&self.vars, c.clone());
            for (i, replacement) in bindings {
                let e = residual[*i];
                if e > 0 {
                    residual[*i] = 0;
                    factor = factor.try_mul(&replacement.pow(e))?;
                }
            }
            let base = Polynomial::from_terms(
                &self.vars,
                [(Monomial::new(residual), Rational::one())],
            )?;
            acc = acc.try_add(&factor.try_mul(&base)?)?;
        }
        Ok(acc)
    }

    /// Convenience: substitute rational values for named variables.
    pub fn subst_values(&self, bindings: &[(&str, Rational)]) -> Result<Polynomial, PolyError> {
        let mut resolved = Vec::with_capacity(bindings.len());
        for (name, value) in bindings {
            let i = self.vars.require(name)?;
            resolved.push((i, Polynomial::constant(&self.vars, value.clone())));
        }
        self.subst(&resolved)
    }

    /// The polynomial multiplying exactly the given exponent pattern.
    ///
    /// `pattern` fixes exponents for a subset of variables; a term
    /// contributes iff it matches all of them exactly (including stated
    /// zeros). Matched variables are zeroed in the result, so the result is
    /// a polynomial in the remaining variables. Fixing every variable
    /// returns a constant; an absent pattern yields the zero polynomial.
    pub fn coeff_of(&self, pattern: &[(usize, u32)]) -> Polynomial {
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        'term: for (m, c) in &self.terms {
            for (i, e) in pattern {
                if m.exp(*i) != *e {
                    continue 'term;
                }
            }
            let mut exps = m.exps.clone();
            for (i, _) in pattern {
                exps[*i] = 0;
            }
            let key = Monomial::new(exps);
            let slot = terms.entry(key.clone()).or_insert_with(Rational::zero);
            *slot += c;
            if slot.is_zero() {
                terms.remove(&key);
            }
        }
        Polynomial {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Pattern over named variables; see [`Self::coeff_of`].
    pub fn coeff_of_named(&self, pattern: &[(&str, u32)]) -> Result<Polynomial, PolyError> {
        let mut resolved = Vec::with_capacity(pattern.len());
        for (name, e) in pattern {
            resolved.push((self.vars.require(name)?, *e));
        }
        Ok(self.coeff_of(&resolved))
    }

    /// Exact evaluation at a full point.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.vars.len() {
            return Err(PolyError::PointLength {
                got: point.len(),
                expected: self.vars.len(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, e) in m.exps.iter().enumerate() {
                for _ in 0..*e {
                    v *= &point[i];
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Exact quotient when `d` divides `self`; `None` otherwise (or when
    /// `d` is zero). Runs leading-term division in graded-lex order, which
    /// terminates because the order is multiplicative.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        if self.vars != d.vars || d.is_zero() {
            return None;
        }
        let mut remainder = self.clone();
        let mut quotient = Polynomial::zero(&self.vars);
        let (dm, dc) = {
            let (m, c) = d.leading_term().expect("nonzero divisor");
            (m.clone(), c.clone())
        };
        while !remainder.is_zero() {
            let (rm, rc) = {
                let (m, c) = remainder.leading_term().expect("nonzero remainder");
                (m.clone(), c.clone())
            };
            if !dm.divides(&rm) {
                return None;
            }
            let qm = dm.quotient_into(&rm);
            let qc = rc / &dc;
            let qt = Polynomial::from_terms(&self.vars, [(qm, qc)]).expect("term fits varset");
            remainder = remainder
                .try_sub(&qt.try_mul(d).expect("same varset"))
                .expect("same varset");
            quotient = quotient.try_add(&qt).expect("same varset");
        }
        Some(quotient)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .into_iter()
                .map(|(m, c)| (m, -c))
                .collect(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.clone().neg()
    }
}

macro_rules! binop_impl {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("operands share a variable set")
            }
        }
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

binop_impl!(Add, add, try_add);
binop_impl!(Sub, sub, try_sub);
binop_impl!(Mul, mul, try_mul);

/// Canonical rendering: terms in descending graded-lex order, rationals as
/// `p` or `p/q`, `*` between factors, `^` for exponents above 1.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.total_degree() == 0 {
                factors.push(abs.to_string());
            }
            for (i, e) in m.exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.vars.name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    fn zring() -> VarSet {
        VarSet::new(vec!["z1", "z2", "z3"]).unwrap()
    }

    fn v(vars: &VarSet, n: &str) -> Polynomial {
        Polynomial::variable(vars, n).unwrap()
    }

    #[test]
    fn varset_rejects_duplicates() {
        assert!(matches!(
            VarSet::new(vec!["x", "y", "x"]),
            Err(PolyError::DuplicateVariable(_))
        ));
    }

    #[test]
    fn add_cancels_to_two_z1() {
        let vars = zring();
        let (z1, z2) = (v(&vars, "z1"), v(&vars, "z2"));
        let sum = (&z1 + &z2) + (&z1 - &z2);
        assert_eq!(sum, z1.scale(&int(2)));
    }

    #[test]
    fn additive_identity_and_exact_cancellation() {
        let vars = zring();
        let z1 = v(&vars, "z1");
        let p = (&z1 + &v(&vars, "z2")).pow(3);
        assert_eq!(p.try_add(&Polynomial::zero(&vars)).unwrap(), p);
        let sq = z1.pow(2);
        let cancelled = sq.try_add(&sq.clone().neg()).unwrap();
        assert!(cancelled.is_zero());
        assert_eq!(cancelled.num_terms(), 0);
    }

    #[test]
    fn mismatched_varsets_error() {
        let a = Polynomial::variable(&zring(), "z1").unwrap();
        let other = VarSet::new(vec!["w"]).unwrap();
        let b = Polynomial::variable(&other, "w").unwrap();
        assert_eq!(a.try_add(&b), Err(PolyError::VarSetMismatch));
        assert_eq!(a.try_mul(&b), Err(PolyError::VarSetMismatch));
    }

    #[test]
    fn difference_of_squares() {
        let vars = zring();
        let (z1, z2) = (v(&vars, "z1"), v(&vars, "z2"));
        let prod = (&z1 + &z2) * (&z1 - &z2);
        assert_eq!(prod, z1.pow(2) - z2.pow(2));
    }

    #[test]
    fn distinct_factorizations_collide() {
        // z1^2 * (z2 z3) and (z1 z2) * (z1 z3) are the same quartic
        let vars = zring();
        let (z1, z2, z3) = (v(&vars, "z1"), v(&vars, "z2"), v(&vars, "z3"));
        let lhs = z1.pow(2) * (&z2 * &z3);
        let rhs = (&z1 * &z2) * (&z1 * &z3);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn squared_ternary_form_has_six_terms_with_doubled_cross_terms() {
        let vars = VarSet::new(vec!["a1", "a2", "a3", "z1", "z2", "z3"]).unwrap();
        let f = v(&vars, "a1") * v(&vars, "z1")
            + v(&vars, "a2") * v(&vars, "z2")
            + v(&vars, "a3") * v(&vars, "z3");
        let sq = f.pow(2);
        assert_eq!(sq.num_terms(), 6);
        let cross = sq
            .coeff_of_named(&[("a1", 1), ("a2", 1), ("z1", 1), ("z2", 1)])
            .unwrap();
        assert_eq!(cross, Polynomial::constant(&vars, int(2)));
    }

    #[test]
    fn binomial_square_and_pow_edges() {
        let vars = zring();
        let (z1, z2) = (v(&vars, "z1"), v(&vars, "z2"));
        let p = &z1 + &z2;
        let expect = z1.pow(2) + (&z1 * &z2).scale(&int(2)) + z2.pow(2);
        assert_eq!(p.pow(2), expect);
        assert_eq!(p.pow(0), Polynomial::one(&vars));
        assert_eq!(p.pow(1), p);
        assert_eq!(Polynomial::zero(&vars).pow(0), Polynomial::one(&vars));
    }

    #[test]
    fn coeff_of_cross_term() {
        let vars = zring();
        let p = (v(&vars, "z1") + v(&vars, "z2")).pow(2);
        let c = p
            .coeff_of_named(&[("z1", 1), ("z2", 1), ("z3", 0)])
            .unwrap();
        assert_eq!(c, Polynomial::constant(&vars, int(2)));
        // absent pattern -> zero polynomial
        let missing = p.coeff_of_named(&[("z1", 5)]).unwrap();
        assert!(missing.is_zero());
    }

    #[test]
    fn coeff_of_matches_manual_trace_of_scaled_square() {
        // coefficient of zN^2 zi zj (N not in {i,j}) in mu*f^2, f = sum a_k z_k,
        // equals 2 mu a_i a_j; here N=3, i=1, j=2, a=(3,5,7), mu=1/2
        let vars = zring();
        let f = v(&vars, "z1").scale(&int(3))
            + v(&vars, "z2").scale(&int(5))
            + v(&vars, "z3").scale(&int(7));
        let p = f.pow(2).scale(&frac(1, 2));
        // term z1 z2 of mu*f^2 (zN^2 has N outside {1,2}: inspect z1*z2 itself)
        let c = p
            .coeff_of_named(&[("z1", 1), ("z2", 1), ("z3", 0)])
            .unwrap();
        assert_eq!(c, Polynomial::constant(&vars, int(15))); // 2 * 1/2 * 3 * 5
    }

    #[test]
    fn substitution_restricts_and_evaluates() {
        let vars = zring();
        let p = v(&vars, "z1") + v(&vars, "z2") + v(&vars, "z3");
        let restricted = p.subst_values(&[("z3", int(0))]).unwrap();
        assert_eq!(restricted, v(&vars, "z1") + v(&vars, "z2"));

        let q = p.pow(2);
        let at = q
            .eval(&[int(1), int(2), int(3)])
            .unwrap();
        assert_eq!(at, int(36));
    }

    #[test]
    fn substitution_with_polynomial_replacement_re_expands() {
        let vars = zring();
        let (z1, z2) = (v(&vars, "z1"), v(&vars, "z2"));
        let p = z1.pow(2);
        let r = p
            .subst(&[(0, &z1 + &z2)])
            .unwrap();
        assert_eq!(r, (&z1 + &z2).pow(2));
    }

    #[test]
    fn exact_division_succeeds_and_fails() {
        let vars = zring();
        let (z1, z2) = (v(&vars, "z1"), v(&vars, "z2"));
        let d = &z1 + &z2;
        let p = d.pow(3);
        assert_eq!(p.exact_div(&d).unwrap(), d.pow(2));
        let not_divisible = z1.pow(2) + z2.pow(2);
        assert!(not_divisible.exact_div(&d).is_none());
        assert!(p.exact_div(&Polynomial::zero(&vars)).is_none());
        assert!(Polynomial::zero(&vars).exact_div(&d).unwrap().is_zero());
    }

    #[test]
    fn homogeneity_bookkeeping() {
        let vars = zring();
        let (z1, z2) = (v(&vars, "z1"), v(&vars, "z2"));
        let h = z1.pow(2) + &z1 * &z2;
        assert_eq!(h.homogeneous_degree(), Some(2));
        let mixed = z1.pow(2) + z2.clone();
        assert_eq!(mixed.homogeneous_degree(), None);
        assert_eq!(Polynomial::zero(&vars).homogeneous_degree(), None);
    }

    #[test]
    fn canonical_rendering() {
        let vars = zring();
        let (z1, z2) = (v(&vars, "z1"), v(&vars, "z2"));
        let p = (&z1 + &z2).pow(2);
        assert_eq!(p.to_string(), "z1^2 + 2*z1*z2 + z2^2");
        let q = z2.pow(2).neg() + z1.scale(&frac(1, 2));
        assert_eq!(q.to_string(), "-z2^2 + 1/2*z1");
        assert_eq!(Polynomial::zero(&vars).to_string(), "0");
        assert_eq!(Polynomial::constant(&vars, int(-7)).to_string(), "-7");
    }

    #[test]
    fn parse_roundtrips_canonical_text() {
        let vars = VarSet::new(vec!["a1", "b1", "z1", "z2"]).unwrap();
        for src in [
            "z1^2 + 2*z1*z2 + z2^2",
            "-3*a1^2*b1 + 1/2*z1 - 5",
            "0",
            "a1*(z1 - z2)^2 - (a1 + b1)*z2",
        ] {
            let p = Polynomial::parse(&vars, src).unwrap();
            let rendered = p.to_string();
            let q = Polynomial::parse(&vars, &rendered).unwrap();
            assert_eq!(p, q, "roundtrip failed for {src}");
        }
        assert!(Polynomial::parse(&vars, "w + 1").is_err());
        assert!(Polynomial::parse(&vars, "z1 +").is_err());
    }
}
