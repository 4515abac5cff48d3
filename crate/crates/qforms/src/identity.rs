//! Symbolic construction and zero-verification of the determinant-weighted
//! product identities, and the coefficient-tracing machinery around them.
//!
//! The order-n identity combines the n-fold products of the 2n squares
//! `{z1^2, ..., zn^2, f1^2, ..., fn^2}` (fi a generic linear form with its
//! own coefficient letters) with minor-sized determinant coefficients; the
//! order-3 right-hand side carries the 3x3 pair-matrix determinant. All
//! verification is full expansion over a single polynomial ring whose
//! variables are the coefficient letters a1..c3 followed by z1..z3 — the
//! formal unknowns of a traced linear system are never ring variables,
//! only labels on the columns of a polynomial matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{bareiss_det, det3, perm3, LinalgError};
use crate::poly::{PolyError, Polynomial, VarSet};
use crate::rat::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("unsupported identity order {0} (supported: 1, 2, 3)")]
    UnsupportedOrder(usize),
    #[error("traced system {case:?}: product {product:?} unexpectedly hits monomial {row:?}")]
    Transcription {
        case: TraceCase,
        product: [u8; 3],
        row: [u32; 3],
    },
    #[error("traced system {case:?}: common factor does not divide product {product:?}")]
    CommonFactor { case: TraceCase, product: [u8; 3] },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Failure of one of the structural checks, with a diagnostic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("check failed: {0}")]
pub struct CheckFailure(pub String);

fn fail(msg: impl Into<String>) -> CheckFailure {
    CheckFailure(msg.into())
}

/// Ring of the order-n identity: coefficient letters first, then z1..zn.
pub fn identity_vars(n: usize) -> Result<VarSet, IdentityError> {
    let letters = ["a", "b", "c"];
    if !(1..=3).contains(&n) {
        return Err(IdentityError::UnsupportedOrder(n));
    }
    let mut names = Vec::new();
    for letter in &letters[..n] {
        for i in 1..=n {
            names.push(format!("{letter}{i}"));
        }
    }
    for i in 1..=n {
        names.push(format!("z{i}"));
    }
    Ok(VarSet::new(names).expect("generated names are distinct"))
}

/// The nine coefficient letters a1..c3 without the z's (ring of the
/// determinant-permanent identity).
pub fn coefficient_vars() -> VarSet {
    VarSet::new(vec!["a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3"])
        .expect("distinct names")
}

fn parse_p(vars: &VarSet, src: &str) -> Polynomial {
    Polynomial::parse(vars, src)
        .unwrap_or_else(|e| panic!("bad builtin expression `{src}`: {e}"))
}

/// [[a1,a2,a3],[b1,b2,b3],[c1,c2,c3]] as polynomials of `vars`.
fn form_matrix(vars: &VarSet) -> [[Polynomial; 3]; 3] {
    let v = |n: &str| parse_p(vars, n);
    [
        [v("a1"), v("a2"), v("a3")],
        [v("b1"), v("b2"), v("b3")],
        [v("c1"), v("c2"), v("c3")],
    ]
}

/// The symbolic pair matrix [[a1a2,b1b2,c1c2],[a1a3,b1b3,c1c3],[a2a3,b2b3,c2c3]].
fn pair_matrix_symbolic(vars: &VarSet) -> [[Polynomial; 3]; 3] {
    let v = |n: &str| parse_p(vars, n);
    [
        [v("a1*a2"), v("b1*b2"), v("c1*c2")],
        [v("a1*a3"), v("b1*b3"), v("c1*c3")],
        [v("a2*a3"), v("b2*b3"), v("c2*c3")],
    ]
}

/// Determinant of the coefficient letters (expanded).
pub fn form_matrix_det(vars: &VarSet) -> Polynomial {
    det3(&form_matrix(vars))
}

/// Permanent of the coefficient letters (expanded).
pub fn form_matrix_perm(vars: &VarSet) -> Polynomial {
    perm3(&form_matrix(vars))
}

/// Determinant of the symbolic pair matrix (expanded).
pub fn pair_det(vars: &VarSet) -> Polynomial {
    det3(&pair_matrix_symbolic(vars))
}

/// Permanent of the symbolic pair matrix (expanded).
pub fn pair_perm(vars: &VarSet) -> Polynomial {
    perm3(&pair_matrix_symbolic(vars))
}

/// The six base squares of the order-3 ring, labelled 1..6:
/// z1^2, z2^2, z3^2, A^2, B^2, C^2.
pub fn base_squares(vars: &VarSet) -> [Polynomial; 6] {
    let p = |s: &str| parse_p(vars, s);
    [
        p("z1^2"),
        p("z2^2"),
        p("z3^2"),
        p("(a1*z1 + a2*z2 + a3*z3)^2"),
        p("(b1*z1 + b2*z2 + b3*z3)^2"),
        p("(c1*z1 + c2*z2 + c3*z3)^2"),
    ]
}

fn product_of(squares: &[Polynomial; 6], t: [u8; 3]) -> Polynomial {
    let f = |i: u8| &squares[(i - 1) as usize];
    f(t[0]) * f(t[1]) * f(t[2])
}

/// One summand of the order-3 identity: a triple of square labels, its
/// determinant-minor coefficient, and the product polynomial.
#[derive(Debug, Clone)]
pub struct IdentityPart {
    pub indices: [u8; 3],
    pub coefficient: Polynomial,
    pub product: Polynomial,
}

impl IdentityPart {
    pub fn summand(&self) -> Polynomial {
        &self.coefficient * &self.product
    }
}

/// Minor coefficients of the 18 mixed products (the all-z and all-f
/// triples carry the full determinant cubed resp. negated).
fn mixed_coefficient(t: [u8; 3]) -> Option<&'static str> {
    Some(match t {
        [1, 2, 4] => "-a3*(b1*c2 - b2*c1)^3",
        [1, 2, 5] => "-b3*(a2*c1 - a1*c2)^3",
        [1, 2, 6] => "-c3*(a1*b2 - a2*b1)^3",
        [1, 3, 4] => "a2*(b1*c3 - b3*c1)^3",
        [1, 3, 5] => "b2*(a3*c1 - a1*c3)^3",
        [1, 3, 6] => "c2*(a1*b3 - a3*b1)^3",
        [1, 4, 5] => "c1^3*(a2*b3 - a3*b2)",
        [1, 4, 6] => "-b1^3*(a2*c3 - a3*c2)",
        [1, 5, 6] => "a1^3*(b2*c3 - b3*c2)",
        [2, 3, 4] => "-a1*(b2*c3 - b3*c2)^3",
        [2, 3, 5] => "-b1*(a3*c2 - a2*c3)^3",
        [2, 3, 6] => "-c1*(a2*b3 - a3*b2)^3",
        [2, 4, 5] => "-c2^3*(a1*b3 - a3*b1)",
        [2, 4, 6] => "b2^3*(a1*c3 - a3*c1)",
        [2, 5, 6] => "-a2^3*(b1*c3 - b3*c1)",
        [3, 4, 5] => "c3^3*(a1*b2 - a2*b1)",
        [3, 4, 6] => "-b3^3*(a1*c2 - a2*c1)",
        [3, 5, 6] => "a3^3*(b1*c2 - b2*c1)",
        _ => return None,
    })
}

/// All index triples 1..6 in lexicographic order.
pub fn product_triples() -> Vec<[u8; 3]> {
    let mut out = Vec::with_capacity(20);
    for i in 1u8..=6 {
        for j in i + 1..=6 {
            for k in j + 1..=6 {
                out.push([i, j, k]);
            }
        }
    }
    out
}

/// The 20 summands of the order-3 identity's left-hand side, one per
/// product triple, in lexicographic triple order.
pub fn order3_parts() -> Vec<IdentityPart> {
    let vars = identity_vars(3).expect("order 3 supported");
    let squares = base_squares(&vars);
    let det = form_matrix_det(&vars);
    product_triples()
        .into_iter()
        .map(|t| {
            let coefficient = match t {
                [1, 2, 3] => det.pow(3),
                [4, 5, 6] => -&det,
                _ => parse_p(&vars, mixed_coefficient(t).expect("mixed triple")),
            };
            let product = product_of(&squares, t);
            IdentityPart {
                indices: t,
                coefficient,
                product,
            }
        })
        .collect()
}

/// Right-hand side of the order-3 identity:
/// 6 * det(pair matrix) * z1 z2 z3 * A * B * C.
pub fn order3_rhs(vars: &VarSet) -> Polynomial {
    let forms = parse_p(
        vars,
        "6*z1*z2*z3*(a1*z1 + a2*z2 + a3*z3)*(b1*z1 + b2*z2 + b3*z3)*(c1*z1 + c2*z2 + c3*z3)",
    );
    forms * pair_det(vars)
}

/// The six summands of the order-2 identity with coefficient letters
/// `x`, `y` inside an ambient ring that contains x1,x2,y1,y2,z1,z2.
/// Their sum is the zero polynomial.
pub fn order2_summands_in(vars: &VarSet, x: &str, y: &str) -> Vec<Polynomial> {
    let p = |s: String| parse_p(vars, &s);
    let xf = format!("({x}1*z1 + {x}2*z2)");
    let yf = format!("({y}1*z1 + {y}2*z2)");
    let minor = format!("({x}1*{y}2 - {x}2*{y}1)");
    vec![
        p(format!("{minor}^3*z1^2*z2^2")),
        p(format!("-{y}2*{x}1^3*z1^2*{yf}^2")),
        p(format!("-{x}1*{y}2^3*z2^2*{xf}^2")),
        p(format!("{x}2*{y}1^3*z1^2*{xf}^2")),
        p(format!("{y}1*{x}2^3*z2^2*{yf}^2")),
        p(format!("{minor}*{xf}^2*{yf}^2")),
    ]
}

/// The two summands of the order-1 identity with coefficient letter `x`:
/// x1^3 z1^2 - x1 (x1 z1)^2 = 0.
pub fn order1_summands_in(vars: &VarSet, x: &str) -> Vec<Polynomial> {
    vec![
        parse_p(vars, &format!("{x}1^3*z1^2")),
        parse_p(vars, &format!("-{x}1*({x}1*z1)^2")),
    ]
}

/// A catalogued identity: a formal sum of summands on the left and an
/// independently built right-hand side; the verification theorem is that
/// the expanded difference is the zero polynomial.
#[derive(Debug, Clone)]
pub struct IdentityInstance {
    pub name: &'static str,
    pub vars: VarSet,
    pub lhs_summands: Vec<Polynomial>,
    pub rhs: Polynomial,
}

impl IdentityInstance {
    /// Expanded left-hand side.
    pub fn lhs(&self) -> Polynomial {
        let mut acc = Polynomial::zero(&self.vars);
        for s in &self.lhs_summands {
            acc = acc + s;
        }
        acc
    }

    /// Monomials across the summands before cross-summand cancellation.
    pub fn pre_cancellation_terms(&self) -> usize {
        self.lhs_summands.iter().map(Polynomial::num_terms).sum()
    }
}

/// Builds the order-n identity, n in {1, 2, 3}.
pub fn build_identity(n: usize) -> Result<IdentityInstance, IdentityError> {
    let vars = identity_vars(n)?;
    Ok(match n {
        1 => IdentityInstance {
            name: "product_identity_n1",
            lhs_summands: order1_summands_in(&vars, "a"),
            rhs: Polynomial::zero(&vars),
            vars,
        },
        2 => IdentityInstance {
            name: "product_identity_n2",
            lhs_summands: order2_summands_in(&vars, "a", "b"),
            rhs: Polynomial::zero(&vars),
            vars,
        },
        3 => IdentityInstance {
            name: "product_identity_n3",
            lhs_summands: order3_parts().iter().map(IdentityPart::summand).collect(),
            rhs: order3_rhs(&vars),
            vars,
        },
        _ => unreachable!("validated above"),
    })
}

/// The determinant-permanent identity over the nine coefficient letters:
/// three cyclic minor products minus perm(M)*det(pair) minus
/// perm(pair)*det(M) sums to zero.
pub fn det_perm_identity() -> IdentityInstance {
    let vars = coefficient_vars();
    let p = |s: &str| parse_p(&vars, s);
    let lhs_summands = vec![
        p("2*a1*a2*a3*(b1*c2 - b2*c1)*(b3*c1 - b1*c3)*(b2*c3 - b3*c2)"),
        p("2*b1*b2*b3*(a2*c1 - a1*c2)*(a1*c3 - a3*c1)*(a3*c2 - a2*c3)"),
        p("2*c1*c2*c3*(a1*b2 - a2*b1)*(a3*b1 - a1*b3)*(a2*b3 - a3*b2)"),
        -(form_matrix_perm(&vars) * pair_det(&vars)),
        -(pair_perm(&vars) * form_matrix_det(&vars)),
    ];
    IdentityInstance {
        name: "det_perm_identity",
        rhs: Polynomial::zero(&vars),
        lhs_summands,
        vars,
    }
}

/// Every identity this crate catalogs, in a fixed order.
pub fn catalog() -> Vec<IdentityInstance> {
    vec![
        build_identity(1).expect("order 1"),
        build_identity(2).expect("order 2"),
        build_identity(3).expect("order 3"),
        det_perm_identity(),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyOutcome {
    Holds,
    Fails { residual: Polynomial },
}

impl VerifyOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, VerifyOutcome::Holds)
    }
}

/// Expands lhs - rhs fully; `Holds` iff the difference is the zero
/// polynomial, otherwise the residual is returned for diagnostics.
pub fn verify_identity(inst: &IdentityInstance) -> VerifyOutcome {
    let residual = inst.lhs() - &inst.rhs;
    if residual.is_zero() {
        VerifyOutcome::Holds
    } else {
        VerifyOutcome::Fails { residual }
    }
}

fn multiset_eq(xs: &[Polynomial], ys: &[Polynomial]) -> bool {
    if xs.len() != ys.len() {
        return false;
    }
    let mut a: Vec<String> = xs.iter().map(|p| p.to_string()).collect();
    let mut b: Vec<String> = ys.iter().map(|p| p.to_string()).collect();
    a.sort();
    b.sort();
    a == b
}

/// Restriction/factorization check.
///
/// Setting z3 = 0 in the order-3 summands must (i) kill ten of the twenty
/// and sum the survivors to zero, (ii) leave each survivor jointly linear
/// in {a3, b3, c3}, and (iii) split the v-linear groups (v one of a3, b3,
/// c3) into the v-letter's restricted square times the order-2 identity on
/// the remaining two letters, summand by summand, up to a fixed sign. The
/// analogous statement one level down (z2 = 0 against the order-1
/// identity) is checked as well.
pub fn restriction_check() -> Result<(), CheckFailure> {
    let inst3 = build_identity(3).expect("order 3");
    let vars = inst3.vars.clone();
    let restricted: Vec<Polynomial> = inst3
        .lhs_summands
        .iter()
        .map(|s| {
            s.subst_values(&[("z3", Rational::zero())])
                .expect("z3 in ring")
        })
        .collect();

    let survivors: Vec<&Polynomial> = restricted.iter().filter(|p| !p.is_zero()).collect();
    if survivors.len() != 10 {
        return Err(fail(format!(
            "expected 10 summands to survive z3 = 0, got {}",
            survivors.len()
        )));
    }
    let mut total = Polynomial::zero(&vars);
    for s in &survivors {
        total = total + *s;
    }
    if !total.is_zero() {
        return Err(fail("restricted sum is not the zero polynomial"));
    }
    let linear_idx = [
        vars.require("a3").expect("a3"),
        vars.require("b3").expect("b3"),
        vars.require("c3").expect("c3"),
    ];
    for s in &survivors {
        for (m, _) in s.terms() {
            let joint: u32 = linear_idx.iter().map(|&i| m.exp(i)).sum();
            if joint > 1 {
                return Err(fail("restriction is not linear in {a3, b3, c3}"));
            }
        }
    }

    // group extraction: letter, order-2 roles, derived sign
    let groups = [("a3", ("b", "c"), -1i64), ("b3", ("a", "c"), 1), ("c3", ("a", "b"), -1)];
    for (letter, (x, y), sign) in groups {
        let own = &letter[..1];
        let square = parse_p(&vars, &format!("({own}1*z1 + {own}2*z2)^2"));
        let parts: Vec<Polynomial> = restricted
            .iter()
            .map(|p| p.coeff_of_named(&[(letter, 1)]).expect("letter in ring"))
            .filter(|p| !p.is_zero())
            .collect();
        if parts.len() != 6 {
            return Err(fail(format!(
                "expected 6 summands linear in {letter}, got {}",
                parts.len()
            )));
        }
        let mut quotients = Vec::with_capacity(6);
        for part in &parts {
            let q = part.exact_div(&square).ok_or_else(|| {
                fail(format!("a {letter}-linear part is not divisible by {own}-square"))
            })?;
            quotients.push(q);
        }
        let expected: Vec<Polynomial> = order2_summands_in(&vars, x, y)
            .into_iter()
            .map(|p| p.scale(&crate::rat::int(sign)))
            .collect();
        if !multiset_eq(&quotients, &expected) {
            return Err(fail(format!(
                "{letter}-group does not match the order-2 identity on letters ({x}, {y})"
            )));
        }
    }

    // one level down: z2 = 0 against the order-1 identity
    let inst2 = build_identity(2).expect("order 2");
    let vars2 = inst2.vars.clone();
    let restricted2: Vec<Polynomial> = inst2
        .lhs_summands
        .iter()
        .map(|s| {
            s.subst_values(&[("z2", Rational::zero())])
                .expect("z2 in ring")
        })
        .collect();
    let survivors2: Vec<&Polynomial> = restricted2.iter().filter(|p| !p.is_zero()).collect();
    if survivors2.len() != 3 {
        return Err(fail(format!(
            "expected 3 order-2 summands to survive z2 = 0, got {}",
            survivors2.len()
        )));
    }
    let mut total2 = Polynomial::zero(&vars2);
    for s in &survivors2 {
        total2 = total2 + *s;
    }
    if !total2.is_zero() {
        return Err(fail("restricted order-2 sum is not zero"));
    }
    let groups2 = [("a2", "a", "b", 1i64), ("b2", "b", "a", -1)];
    for (letter, own, expected_letter, sign) in groups2 {
        let square = parse_p(&vars2, &format!("({own}1*z1)^2"));
        let parts: Vec<Polynomial> = restricted2
            .iter()
            .map(|p| p.coeff_of_named(&[(letter, 1)]).expect("letter in ring"))
            .filter(|p| !p.is_zero())
            .collect();
        if parts.len() != 2 {
            return Err(fail(format!(
                "expected 2 summands linear in {letter}, got {}",
                parts.len()
            )));
        }
        let mut quotients = Vec::with_capacity(2);
        for part in &parts {
            let q = part
                .exact_div(&square)
                .ok_or_else(|| fail(format!("a {letter}-linear part is not divisible")))?;
            quotients.push(q);
        }
        let expected: Vec<Polynomial> = order1_summands_in(&vars2, expected_letter)
            .into_iter()
            .map(|p| p.scale(&crate::rat::int(sign)))
            .collect();
        if !multiset_eq(&quotients, &expected) {
            return Err(fail(format!(
                "{letter}-group does not match the order-1 identity on letter {expected_letter}"
            )));
        }
    }
    Ok(())
}

/// Coefficient-of-z1^2z2^2z3^2 check: extracting that coefficient from the
/// fully expanded order-3 left-hand side must equal 6 * det(pair matrix) *
/// perm(form matrix), computed by the determinant/permanent helpers — an
/// independent code path from the expansion. Also verifies the
/// determinant-permanent identity itself and two specializations where the
/// pair determinant vanishes.
pub fn permanent_trace_check() -> Result<(), CheckFailure> {
    let inst3 = build_identity(3).expect("order 3");
    let vars = inst3.vars.clone();
    let lhs = inst3.lhs();
    let traced = lhs
        .coeff_of_named(&[("z1", 2), ("z2", 2), ("z3", 2)])
        .expect("z's in ring");
    let expected = (pair_det(&vars) * form_matrix_perm(&vars)).scale(&crate::rat::int(6));
    if traced != expected {
        return Err(fail(
            "z1^2z2^2z3^2 coefficient does not equal 6 * det(pair) * perm(forms)",
        ));
    }
    if !verify_identity(&det_perm_identity()).holds() {
        return Err(fail("determinant-permanent identity does not expand to zero"));
    }
    // specializations with vanishing pair determinant
    let specializations: [[i64; 9]; 2] = [
        [1, 0, 0, 0, 1, 0, 0, 0, 1],
        [1, 1, 1, 1, 2, 3, 5, 8, 10],
    ];
    for point in specializations {
        let names = ["a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3"];
        let bindings: Vec<(&str, Rational)> = names
            .iter()
            .zip(point)
            .map(|(n, v)| (*n, crate::rat::int(v)))
            .collect();
        let dpair = pair_det(&vars).subst_values(&bindings).expect("bindable");
        if !dpair.is_zero() {
            return Err(fail("specialization was expected to kill the pair determinant"));
        }
        let value = traced.subst_values(&bindings).expect("bindable");
        if !value.is_zero() {
            return Err(fail("traced coefficient must vanish with the pair determinant"));
        }
    }
    Ok(())
}

/// The eight traced linear systems. C1a/C1b assume nothing; C2a..C2d set
/// a1 = 0; C3 sets a1 = b2 = 0; C4 sets a1 = b2 = c3 = 0 and moves the
/// all-forms unknown to the right-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TraceCase {
    C1a,
    C1b,
    C2a,
    C2b,
    C2c,
    C2d,
    C3,
    C4,
}

impl TraceCase {
    pub const ALL: [TraceCase; 8] = [
        TraceCase::C1a,
        TraceCase::C1b,
        TraceCase::C2a,
        TraceCase::C2b,
        TraceCase::C2c,
        TraceCase::C2d,
        TraceCase::C3,
        TraceCase::C4,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TraceCase::C1a => "C1a",
            TraceCase::C1b => "C1b",
            TraceCase::C2a => "C2a",
            TraceCase::C2b => "C2b",
            TraceCase::C2c => "C2c",
            TraceCase::C2d => "C2d",
            TraceCase::C3 => "C3",
            TraceCase::C4 => "C4",
        }
    }

    pub fn from_name(name: &str) -> Option<TraceCase> {
        TraceCase::ALL.iter().copied().find(|c| c.name() == name)
    }

    /// Variables the case sets to zero before tracing.
    pub fn assumptions(&self) -> &'static [&'static str] {
        match self {
            TraceCase::C1a | TraceCase::C1b => &[],
            TraceCase::C2a | TraceCase::C2b | TraceCase::C2c | TraceCase::C2d => &["a1"],
            TraceCase::C3 => &["a1", "b2"],
            TraceCase::C4 => &["a1", "b2", "c3"],
        }
    }

    fn spec(&self) -> CaseSpec {
        // product sets are the stages of the elimination: each case traces
        // against the products whose unknowns are still undetermined at
        // that point (for C2c/C2d the shared z1^2 has been cancelled).
        const ALL20: &[[u8; 3]] = &[
            [1, 2, 3],
            [1, 2, 4],
            [1, 2, 5],
            [1, 2, 6],
            [1, 3, 4],
            [1, 3, 5],
            [1, 3, 6],
            [1, 4, 5],
            [1, 4, 6],
            [1, 5, 6],
            [2, 3, 4],
            [2, 3, 5],
            [2, 3, 6],
            [2, 4, 5],
            [2, 4, 6],
            [2, 5, 6],
            [3, 4, 5],
            [3, 4, 6],
            [3, 5, 6],
            [4, 5, 6],
        ];
        const PAIRS_ONLY: &[[u8; 3]] = &[
            [1, 2, 3],
            [1, 2, 4],
            [1, 2, 5],
            [1, 2, 6],
            [1, 3, 4],
            [1, 3, 5],
            [1, 3, 6],
            [2, 3, 4],
            [2, 3, 5],
            [2, 3, 6],
        ];
        const C2B_CTX: &[[u8; 3]] = &[
            [1, 2, 3],
            [1, 2, 4],
            [1, 2, 5],
            [1, 2, 6],
            [1, 3, 4],
            [1, 3, 5],
            [1, 3, 6],
            [1, 4, 5],
            [1, 4, 6],
            [2, 3, 4],
            [2, 3, 5],
            [2, 3, 6],
        ];
        const C2C_CTX: &[[u8; 3]] = &[
            [1, 2, 3],
            [1, 2, 4],
            [1, 2, 5],
            [1, 2, 6],
            [1, 3, 4],
            [1, 3, 5],
            [1, 3, 6],
            [1, 4, 5],
            [1, 4, 6],
        ];
        const C2D_CTX: &[[u8; 3]] = &[[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 2, 6], [1, 3, 4]];
        const C3_CTX: &[[u8; 3]] = &[
            [1, 2, 3],
            [1, 2, 4],
            [1, 2, 5],
            [1, 2, 6],
            [1, 3, 4],
            [1, 3, 5],
            [1, 3, 6],
            [1, 4, 5],
            [1, 4, 6],
            [2, 3, 4],
            [2, 3, 5],
            [2, 3, 6],
            [2, 4, 5],
            [2, 5, 6],
        ];
        const C4_CTX: &[[u8; 3]] = &[
            [1, 2, 3],
            [1, 2, 4],
            [1, 2, 5],
            [1, 2, 6],
            [1, 3, 4],
            [1, 3, 5],
            [1, 3, 6],
            [1, 4, 5],
            [1, 4, 6],
            [2, 3, 4],
            [2, 3, 5],
            [2, 3, 6],
            [2, 4, 5],
            [2, 5, 6],
            [3, 4, 6],
            [3, 5, 6],
            [4, 5, 6],
        ];
        match self {
            TraceCase::C1a => CaseSpec {
                context: ALL20,
                unknowns: &[[1, 4, 5], [1, 4, 6], [1, 5, 6], [4, 5, 6]],
                rows: &[[6, 0, 0], [5, 1, 0], [5, 0, 1], [4, 1, 1]],
                rhs_unknown: None,
                cancel_z1_squared: false,
            },
            TraceCase::C1b => CaseSpec {
                context: PAIRS_ONLY,
                unknowns: &[[1, 2, 4], [1, 2, 5], [1, 2, 6]],
                rows: &[[3, 3, 0], [3, 2, 1], [2, 3, 1]],
                rhs_unknown: None,
                cancel_z1_squared: false,
            },
            TraceCase::C2a => CaseSpec {
                context: ALL20,
                unknowns: &[[1, 5, 6]],
                rows: &[[6, 0, 0]],
                rhs_unknown: None,
                cancel_z1_squared: false,
            },
            TraceCase::C2b => CaseSpec {
                context: C2B_CTX,
                unknowns: &[[2, 3, 4], [2, 3, 5], [2, 3, 6]],
                rows: &[[1, 3, 2], [1, 2, 3], [0, 3, 3]],
                rhs_unknown: None,
                cancel_z1_squared: false,
            },
            TraceCase::C2c => CaseSpec {
                context: C2C_CTX,
                unknowns: &[[1, 3, 5], [1, 3, 6], [1, 4, 5], [1, 4, 6]],
                rows: &[[2, 1, 1], [2, 0, 2], [1, 0, 3], [1, 1, 2]],
                rhs_unknown: None,
                cancel_z1_squared: true,
            },
            TraceCase::C2d => CaseSpec {
                context: C2D_CTX,
                unknowns: &[[1, 2, 5], [1, 2, 6]],
                rows: &[[1, 2, 1], [1, 3, 0]],
                rhs_unknown: None,
                cancel_z1_squared: true,
            },
            TraceCase::C3 => CaseSpec {
                context: C3_CTX,
                unknowns: &[
                    [1, 2, 4],
                    [1, 2, 5],
                    [1, 2, 6],
                    [1, 4, 5],
                    [1, 4, 6],
                    [2, 4, 5],
                    [2, 5, 6],
                ],
                rows: &[
                    [4, 1, 1],
                    [1, 4, 1],
                    [2, 4, 0],
                    [4, 2, 0],
                    [3, 3, 0],
                    [3, 2, 1],
                    [2, 3, 1],
                ],
                rhs_unknown: None,
                cancel_z1_squared: false,
            },
            TraceCase::C4 => CaseSpec {
                context: C4_CTX,
                unknowns: &[
                    [1, 2, 4],
                    [1, 2, 5],
                    [1, 2, 6],
                    [1, 4, 5],
                    [1, 4, 6],
                    [2, 4, 5],
                    [2, 5, 6],
                ],
                rows: &[
                    [4, 1, 1],
                    [1, 4, 1],
                    [3, 2, 1],
                    [2, 3, 1],
                    [4, 2, 0],
                    [3, 3, 0],
                    [2, 4, 0],
                ],
                rhs_unknown: Some([4, 5, 6]),
                cancel_z1_squared: false,
            },
        }
    }
}

struct CaseSpec {
    context: &'static [[u8; 3]],
    unknowns: &'static [[u8; 3]],
    rows: &'static [[u32; 3]],
    rhs_unknown: Option<[u8; 3]>,
    cancel_z1_squared: bool,
}

/// A traced linear system: rows are z-monomials, columns are the formal
/// unknowns (labelled by product triples), entries are polynomials in the
/// coefficient letters. When an unknown has been moved across, `rhs`
/// holds its label and the negated column.
#[derive(Debug, Clone)]
pub struct TracedSystem {
    pub case: TraceCase,
    pub assumptions: Vec<String>,
    pub unknowns: Vec<[u8; 3]>,
    pub rows: Vec<[u32; 3]>,
    pub matrix: Vec<Vec<Polynomial>>,
    pub rhs: Option<([u8; 3], Vec<Polynomial>)>,
}

impl TracedSystem {
    /// Determinant of the (square) system matrix by fraction-free
    /// elimination over the polynomial ring.
    pub fn determinant(&self) -> Result<Polynomial, LinalgError> {
        bareiss_det(self.matrix.clone())
    }
}

/// Renders an unknown label like `x145`.
pub fn unknown_label(t: [u8; 3]) -> String {
    format!("x{}{}{}", t[0], t[1], t[2])
}

/// Builds a traced system with the case's intrinsic assumptions.
pub fn trace_system(case: TraceCase) -> Result<TracedSystem, IdentityError> {
    trace_system_with(case, &[])
}

/// Same, with extra variable bindings applied on top of the case's own.
pub fn trace_system_with(
    case: TraceCase,
    extra: &[(&str, Rational)],
) -> Result<TracedSystem, IdentityError> {
    let vars = identity_vars(3)?;
    let spec = case.spec();
    let mut bindings: Vec<(&str, Rational)> = case
        .assumptions()
        .iter()
        .map(|v| (*v, Rational::zero()))
        .collect();
    bindings.extend(extra.iter().cloned());

    let mut squares = base_squares(&vars);
    for s in &mut squares {
        *s = s.subst_values(&bindings)?;
    }
    let z1_squared = parse_p(&vars, "z1^2");
    let mut products: Vec<([u8; 3], Polynomial)> = Vec::with_capacity(spec.context.len());
    for &t in spec.context {
        let mut p = product_of(&squares, t);
        if spec.cancel_z1_squared {
            p = p
                .exact_div(&z1_squared)
                .ok_or(IdentityError::CommonFactor { case, product: t })?;
        }
        products.push((t, p));
    }

    let zi = [
        vars.require("z1")?,
        vars.require("z2")?,
        vars.require("z3")?,
    ];
    let mut matrix: Vec<Vec<Polynomial>> = Vec::with_capacity(spec.rows.len());
    let mut rhs_col: Vec<Polynomial> = Vec::new();
    for &row in spec.rows {
        let pattern = [(zi[0], row[0]), (zi[1], row[1]), (zi[2], row[2])];
        let mut entries = vec![Polynomial::zero(&vars); spec.unknowns.len()];
        let mut rhs_entry = Polynomial::zero(&vars);
        for (t, p) in &products {
            let c = p.coeff_of(&pattern);
            if let Some(col) = spec.unknowns.iter().position(|u| u == t) {
                entries[col] = c;
            } else if spec.rhs_unknown == Some(*t) {
                rhs_entry = c;
            } else if !c.is_zero() {
                return Err(IdentityError::Transcription {
                    case,
                    product: *t,
                    row,
                });
            }
        }
        // normalize the displayed row by its integer content
        let mut all: Vec<&Polynomial> = entries.iter().collect();
        if spec.rhs_unknown.is_some() {
            all.push(&rhs_entry);
        }
        let content = row_content(&all);
        if !content.is_one() && !Zero::is_zero(&content) {
            let inv = content.recip();
            for e in &mut entries {
                *e = e.scale(&inv);
            }
            rhs_entry = rhs_entry.scale(&inv);
        }
        matrix.push(entries);
        if spec.rhs_unknown.is_some() {
            rhs_col.push(-rhs_entry);
        }
    }
    Ok(TracedSystem {
        case,
        assumptions: case.assumptions().iter().map(|s| s.to_string()).collect(),
        unknowns: spec.unknowns.to_vec(),
        rows: spec.rows.to_vec(),
        matrix,
        rhs: spec.rhs_unknown.map(|u| (u, rhs_col)),
    })
}

/// gcd of all numerators over lcm of all denominators across the row.
fn row_content(entries: &[&Polynomial]) -> Rational {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for p in entries {
        for (_, c) in p.terms() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
    }
    if num.is_zero() {
        Rational::zero()
    } else {
        Rational::new(num, den)
    }
}

/// One golden-determinant comparison.
#[derive(Debug, Clone)]
pub struct GoldenDeterminant {
    pub case: TraceCase,
    pub determinant: Polynomial,
    pub expected: Polynomial,
    pub matches: bool,
}

/// Computes each traced system's determinant symbolically and compares it
/// with the closed form it must equal.
pub fn golden_determinants() -> Result<Vec<GoldenDeterminant>, IdentityError> {
    let vars = identity_vars(3)?;
    let p = |s: &str| parse_p(&vars, s);
    let expectations: Vec<(TraceCase, Polynomial)> = vec![
        (TraceCase::C1a, p("3*a1^4*b1^4*c1^4") * pair_det(&vars)),
        (TraceCase::C1b, pair_det(&vars)),
        (TraceCase::C2a, p("b1^2*c1^2")),
        (TraceCase::C2b, p("a2*a3*b1*c1*(b2*c3 - b3*c2)")),
        (
            TraceCase::C2c,
            p("2*a2^2*a3^2*b1^2*c1^2*(b1*c3 - b3*c1)^2"),
        ),
        (TraceCase::C2d, p("b1*c1*(b3*c2 - b2*c3)")),
        (TraceCase::C3, p("-3*a2^6*a3^2*b1^6*b3^2*c1^3*c2^3")),
        (TraceCase::C4, p("-3*a2^6*a3^2*b1^6*b3^2*c1^3*c2^3")),
    ];
    let mut out = Vec::with_capacity(expectations.len());
    for (case, expected) in expectations {
        let system = trace_system(case)?;
        let determinant = system.determinant()?;
        let matches = determinant == expected;
        out.push(GoldenDeterminant {
            case,
            determinant,
            expected,
            matches,
        });
    }
    Ok(out)
}

/// Verifies the closed-form solution of the C4 system and the overlap
/// argument that combines it with the two symmetric solution sets.
pub fn case4_solution_check() -> Result<(), CheckFailure> {
    let ts = trace_system(TraceCase::C4).map_err(|e| fail(e.to_string()))?;
    let vars = identity_vars(3).expect("order 3");
    let p = |s: &str| parse_p(&vars, s);
    let expected_unknowns = [
        [1, 2, 4],
        [1, 2, 5],
        [1, 2, 6],
        [1, 4, 5],
        [1, 4, 6],
        [2, 4, 5],
        [2, 5, 6],
    ];
    if ts.unknowns != expected_unknowns {
        return Err(fail("unexpected unknown order in the C4 system"));
    }
    let Some((rhs_label, rhs)) = &ts.rhs else {
        return Err(fail("C4 system must carry a right-hand side"));
    };
    if *rhs_label != [4, 5, 6] {
        return Err(fail("C4 right-hand side must be proportional to x456"));
    }
    // the closed-form solution, with the moved unknown scaled to 1
    let solution = [
        p("0"),
        p("0"),
        p("a2^2*b1^2"),
        p("0"),
        p("-b1^2"),
        p("0"),
        p("-a2^2"),
    ];
    for (i, row) in ts.matrix.iter().enumerate() {
        let mut acc = Polynomial::zero(&vars);
        for (e, s) in row.iter().zip(&solution) {
            acc = acc + &(e * s);
        }
        if acc != rhs[i] {
            return Err(fail(format!("solution fails equation {i} of the C4 system")));
        }
    }
    let det = ts.determinant().map_err(|e| fail(e.to_string()))?;
    if det.is_zero() {
        return Err(fail("C4 determinant must be a nonzero polynomial"));
    }
    // the zero vector cannot satisfy the system once the scalar is 1
    if rhs.iter().all(Polynomial::is_zero) {
        return Err(fail("C4 right-hand side is zero; the zero vector would solve it"));
    }

    // overlap argument: the three partial solution sets (each expressing
    // its unknowns as multiples of the moved scalar) conflict pairwise in
    // a monomial of the nonvanishing letters, forcing the scalar to zero.
    type Table = Vec<([u8; 3], Polynomial)>;
    let table = |items: &[([u8; 3], &str)]| -> Table {
        items.iter().map(|(t, s)| (*t, p(s))).collect()
    };
    let sol_rows = table(&[
        ([1, 2, 4], "0"),
        ([1, 2, 5], "0"),
        ([1, 4, 5], "0"),
        ([2, 4, 5], "0"),
        ([1, 2, 6], "a2^2*b1^2"),
        ([1, 4, 6], "-b1^2"),
        ([2, 5, 6], "-a2^2"),
    ]);
    let sol_cols = table(&[
        ([1, 3, 4], "0"),
        ([1, 3, 6], "0"),
        ([1, 4, 6], "0"),
        ([3, 4, 6], "0"),
        ([1, 3, 5], "a3^2*c1^2"),
        ([1, 4, 5], "-c1^2"),
        ([3, 5, 6], "-a3^2"),
    ]);
    let sol_mixed = table(&[
        ([2, 3, 5], "0"),
        ([2, 3, 6], "0"),
        ([2, 5, 6], "0"),
        ([3, 5, 6], "0"),
        ([2, 3, 4], "b3^2*c2^2"),
        ([2, 4, 5], "-c2^2"),
        ([3, 4, 6], "-b3^2"),
    ]);
    let nonvanishing = ["a2", "a3", "b1", "b3", "c1", "c2"];
    let nonvanishing_idx: Vec<usize> = nonvanishing
        .iter()
        .map(|n| vars.require(n).expect("letter in ring"))
        .collect();
    let tables = [&sol_rows, &sol_cols, &sol_mixed];
    let mut conflicts = 0usize;
    let mut union: Vec<[u8; 3]> = Vec::new();
    for t in &tables {
        for (u, _) in t.iter() {
            if !union.contains(u) {
                union.push(*u);
            }
        }
    }
    for i in 0..tables.len() {
        for j in i + 1..tables.len() {
            for (u, pi) in tables[i] {
                let Some((_, pj)) = tables[j].iter().find(|(v, _)| v == u) else {
                    continue;
                };
                if pi == pj {
                    continue;
                }
                let diff = pi - pj;
                if diff.num_terms() != 1 {
                    return Err(fail("conflicting assignments must differ by one monomial"));
                }
                let (m, _) = diff.terms().next().expect("one term");
                for (idx, e) in m.exps().iter().enumerate() {
                    if *e > 0 && !nonvanishing_idx.contains(&idx) {
                        return Err(fail(
                            "conflict monomial involves a letter outside the nonvanishing set",
                        ));
                    }
                }
                conflicts += 1;
            }
        }
    }
    if conflicts == 0 {
        return Err(fail("the solution sets never conflict; nothing forces the scalar"));
    }
    // the three sets cover 15 unknowns; with the scalar that is all 16
    if union.len() != 15 {
        return Err(fail(format!(
            "solution sets cover {} unknowns, expected 15",
            union.len()
        )));
    }
    Ok(())
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

/// Machine-readable identity catalog: name, variable list, the canonical
/// text of every summand, and the collapsed canonical LHS/RHS. Stable
/// byte-for-byte so alternate implementations can cross-validate.
pub fn catalog_json() -> String {
    let mut out = String::new();
    out.push_str("{\n  \"schema\": 1,\n  \"identities\": [\n");
    let entries = catalog();
    for (k, inst) in entries.iter().enumerate() {
        out.push_str("    {\n");
        out.push_str(&format!("      \"name\": \"{}\",\n", json_escape(inst.name)));
        let vars: Vec<String> = inst
            .vars
            .names()
            .map(|n| format!("\"{}\"", json_escape(n)))
            .collect();
        out.push_str(&format!("      \"vars\": [{}],\n", vars.join(", ")));
        out.push_str("      \"lhs_summands\": [\n");
        for (i, s) in inst.lhs_summands.iter().enumerate() {
            let sep = if i + 1 == inst.lhs_summands.len() { "" } else { "," };
            out.push_str(&format!(
                "        \"{}\"{}\n",
                json_escape(&s.to_string()),
                sep
            ));
        }
        out.push_str("      ],\n");
        out.push_str(&format!(
            "      \"lhs\": \"{}\",\n",
            json_escape(&inst.lhs().to_string())
        ));
        out.push_str(&format!(
            "      \"rhs\": \"{}\"\n",
            json_escape(&inst.rhs.to_string())
        ));
        let sep = if k + 1 == entries.len() { "" } else { "," };
        out.push_str(&format!("    }}{sep}\n"));
    }
    out.push_str("  ]\n}\n");
    out
}
